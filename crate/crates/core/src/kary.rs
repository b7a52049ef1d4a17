//! Labeled k-ary trees: only vertices of degree `k` carry labels.
//!
//! The decomposing path starts at the root and moves from an internal vertex
//! to its first child, except that an improper vertex whose smallest
//! descendant sits under the first child moves to its second child. Cutting
//! the path edges splits a tree into components with a single path vertex
//! each.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use num_traits::One;

use crate::algebra::{factorial, int, pow, rat, MultiPoly, Rational, Tally, Var};
use crate::closedform::{p_of, p_value};
use crate::{Check, Error, Result};

/// Upper bound on labeled trees produced by one enumeration.
pub const LABELED_LIMIT: u64 = 2_000_000;
/// Upper bound on unlabeled shapes produced by one enumeration.
pub const SHAPE_LIMIT: u64 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf,
    Internal { label: u32, children: Vec<Node> },
}

impl Node {
    fn internal(label: u32, children: Vec<Node>) -> Node {
        Node::Internal { label, children }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Node::Leaf)
    }

    pub fn label(&self) -> Option<u32> {
        match self {
            Node::Leaf => None,
            Node::Internal { label, .. } => Some(*label),
        }
    }

    fn internal_count(&self) -> u32 {
        match self {
            Node::Leaf => 0,
            Node::Internal { children, .. } => 1 + children.iter().map(Node::internal_count).sum::<u32>(),
        }
    }

    fn labels_into(&self, out: &mut Vec<u32>) {
        if let Node::Internal { label, children } = self {
            out.push(*label);
            for c in children {
                c.labels_into(out);
            }
        }
    }

    /// Smallest label in the subtree, if any.
    fn min_label(&self) -> Option<u32> {
        match self {
            Node::Leaf => None,
            Node::Internal { label, children } => children
                .iter()
                .filter_map(Node::min_label)
                .chain(std::iter::once(*label))
                .min(),
        }
    }

    /// Copies the shape, assigning labels in preorder.
    fn with_labels(&self, labels: &mut impl Iterator<Item = u32>) -> Node {
        match self {
            Node::Leaf => Node::Leaf,
            Node::Internal { children, .. } => {
                let label = labels.next().expect("enough labels");
                let children = children.iter().map(|c| c.with_labels(labels)).collect();
                Node::internal(label, children)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KaryTree {
    k: u32,
    root: Node,
}

impl KaryTree {
    /// Validates arity and label distinctness. Labels may be any distinct
    /// positive integers so that decomposition components are trees too.
    pub fn new(k: u32, root: Node) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        fn arity_ok(node: &Node, k: u32) -> bool {
            match node {
                Node::Leaf => true,
                Node::Internal { children, .. } => {
                    children.len() == k as usize && children.iter().all(|c| arity_ok(c, k))
                }
            }
        }
        if !arity_ok(&root, k) {
            return Err(Error::InvalidStructure(format!("every internal vertex needs {k} children")));
        }
        let mut labels = Vec::new();
        root.labels_into(&mut labels);
        labels.sort_unstable();
        if labels.contains(&0) || labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidStructure("labels must be distinct positive integers".into()));
        }
        Ok(KaryTree { k, root })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    /// Number of labeled (internal) vertices.
    pub fn n(&self) -> u32 {
        self.root.internal_count()
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        self.root.labels_into(&mut out);
        out
    }

    pub fn min_label(&self) -> Option<u32> {
        self.root.min_label()
    }

    /// Parses the nested literal, e.g. `2(1(.,.),.)` for `k = 2`.
    pub fn parse(s: &str, k: u32) -> Result<Self> {
        let mut p = LiteralParser { s, pos: 0 };
        let root = p.node()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(Error::parse("k-ary tree", s, format!("trailing input at byte {}", p.pos)));
        }
        KaryTree::new(k, root).map_err(|e| Error::parse("k-ary tree", s, e.to_string()))
    }
}

struct LiteralParser<'a> {
    s: &'a str,
    pos: usize,
}

impl LiteralParser<'_> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, why: &str) -> Error {
        Error::parse("k-ary tree", self.s, format!("{why} at byte {}", self.pos))
    }

    fn eat(&mut self, c: char) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn node(&mut self) -> Result<Node> {
        if self.eat('.') {
            return Ok(Node::Leaf);
        }
        self.skip_ws();
        let digits = self.s[self.pos..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected `.` or a label"));
        }
        let label = self.s[self.pos..self.pos + digits].parse().map_err(|_| self.err("bad label"))?;
        self.pos += digits;
        if !self.eat('(') {
            return Err(self.err("expected `(`"));
        }
        let mut children = vec![self.node()?];
        while self.eat(',') {
            children.push(self.node()?);
        }
        if !self.eat(')') {
            return Err(self.err("expected `)`"));
        }
        Ok(Node::internal(label, children))
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Node::Leaf => f.write_str("."),
            Node::Internal { label, children } => {
                write!(f, "{label}(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Display for KaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

/// `binom(kn+1, n) / (kn+1)`
pub fn shape_count(n: u32, k: u32) -> u64 {
    let top = int((k * n + 1) as i64);
    (crate::algebra::binomial(&top, n) / top).to_integer().try_into().unwrap_or(u64::MAX)
}

fn check_limits(n: u32, k: u32, labeled: bool) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let shapes = shape_count(n, k);
    if shapes > SHAPE_LIMIT {
        return Err(Error::LimitExceeded { what: "k-ary shape count", value: shapes, limit: SHAPE_LIMIT });
    }
    if labeled {
        let total = shapes.saturating_mul(factorial(n).try_into().unwrap_or(u64::MAX));
        if total > LABELED_LIMIT {
            return Err(Error::LimitExceeded { what: "labeled k-ary tree count", value: total, limit: LABELED_LIMIT });
        }
    }
    Ok(())
}

/// All unlabeled k-ary shapes with `n` internal vertices (labels are 0).
pub fn kary_shapes(n: u32, k: u32) -> Result<Vec<KaryTree>> {
    check_limits(n, k, false)?;
    let mut by_size: Vec<Vec<Node>> = vec![vec![Node::Leaf]];
    for m in 1..=n as usize {
        let mut out = Vec::new();
        // children sizes: compositions of m - 1 into k non-negative parts
        let mut sizes = vec![0usize; k as usize];
        compositions(m - 1, &mut sizes, 0, &mut |sizes| {
            let pools: Vec<&Vec<Node>> = sizes.iter().map(|&s| &by_size[s]).collect();
            for combo in pools.iter().map(|p| p.iter()).multi_cartesian_product() {
                out.push(Node::internal(0, combo.into_iter().cloned().collect()));
            }
        });
        by_size.push(out);
    }
    Ok(by_size.swap_remove(n as usize).into_iter().map(|root| KaryTree { k, root }).collect())
}

fn compositions(total: usize, parts: &mut Vec<usize>, i: usize, f: &mut impl FnMut(&[usize])) {
    if i + 1 == parts.len() {
        parts[i] = total;
        f(parts);
        return;
    }
    for first in 0..=total {
        parts[i] = first;
        compositions(total - first, parts, i + 1, f);
    }
}

/// Every labeled k-ary tree with internal labels `[n]`, each exactly once.
pub fn enumerate_kary(n: u32, k: u32) -> Result<impl Iterator<Item = KaryTree>> {
    check_limits(n, k, true)?;
    let shapes = kary_shapes(n, k)?;
    Ok(shapes.into_iter().flat_map(move |shape| {
        (1..=n).permutations(n as usize).map(move |perm| KaryTree {
            k,
            root: shape.root.with_labels(&mut perm.into_iter()),
        })
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KaryStats {
    pub prop: u32,
    /// Labeled vertices on the decomposing path; `None` for unary trees,
    /// where the path rule has no second child to turn to.
    pub comp: Option<u32>,
    /// Labeled descendants (itself included) by label.
    pub hooks: HashMap<u32, u32>,
}

/// `(smallest label, internal size)` per subtree, keyed by root label.
fn annotate(node: &Node, out: &mut HashMap<u32, (u32, u32)>) -> Option<(u32, u32)> {
    match node {
        Node::Leaf => None,
        Node::Internal { label, children } => {
            let mut min = *label;
            let mut size = 1;
            for c in children {
                if let Some((m, s)) = annotate(c, out) {
                    min = min.min(m);
                    size += s;
                }
            }
            out.insert(*label, (min, size));
            Some((min, size))
        }
    }
}

/// Index of the child the decomposing path takes at `node`.
fn path_step(node: &Node, info: &HashMap<u32, (u32, u32)>) -> usize {
    let Node::Internal { label, children } = node else { unreachable!() };
    let min = info[label].0;
    let improper = min != *label;
    let min_in_first = children[0].label().is_some_and(|l| info[&l].0 == min);
    if improper && min_in_first {
        1
    } else {
        0
    }
}

pub fn kary_stats(t: &KaryTree) -> KaryStats {
    let mut info = HashMap::new();
    annotate(&t.root, &mut info);
    let prop = info.iter().filter(|(l, (m, _))| *l == m).count() as u32;
    let comp = (t.k >= 2).then(|| {
        let mut count = 0;
        let mut node = &t.root;
        while let Node::Internal { children, .. } = node {
            count += 1;
            node = &children[path_step(node, &info)];
        }
        count
    });
    let hooks = info.iter().map(|(&l, &(_, s))| (l, s)).collect();
    KaryStats { prop, comp, hooks }
}

/// Labels that are proper in `t`.
pub fn proper_labels(t: &KaryTree) -> Vec<u32> {
    let mut info = HashMap::new();
    annotate(&t.root, &mut info);
    let mut out: Vec<u32> = info.iter().filter(|(l, (m, _))| *l == m).map(|(l, _)| *l).collect();
    out.sort_unstable();
    out
}

/// Splits `t` along its decomposing path. Component `i` is rooted at the
/// `i`-th path vertex; the components come out ordered by smallest label.
pub fn kary_decompose(t: &KaryTree) -> Result<Vec<KaryTree>> {
    if t.k < 2 {
        return Err(Error::InvalidParameter(
            "the decomposing path needs k >= 2; unary trees are excluded".into(),
        ));
    }
    if t.root.is_leaf() {
        return Err(Error::InvalidParameter("cannot decompose the empty tree".into()));
    }
    let mut info = HashMap::new();
    annotate(&t.root, &mut info);
    let mut parts = Vec::new();
    let mut node = t.root.clone();
    loop {
        let step = path_step(&node, &info);
        let Node::Internal { label, mut children } = node else { unreachable!() };
        let next = std::mem::replace(&mut children[step], Node::Leaf);
        parts.push(KaryTree { k: t.k, root: Node::internal(label, children) });
        if next.is_leaf() {
            break;
        }
        node = next;
    }
    Ok(parts)
}

/// A single-component tree: its first child is a leaf, or its root is
/// improper with the smallest descendant under the first child and its second
/// child is a leaf.
pub fn is_component(t: &KaryTree) -> bool {
    match &t.root {
        Node::Leaf => false,
        Node::Internal { label, children } => {
            if children[0].is_leaf() {
                return true;
            }
            let min = t.root.min_label().unwrap();
            t.k >= 2 && min != *label && children[0].min_label() == Some(min) && children[1].is_leaf()
        }
    }
}

/// Inverse of [`kary_decompose`]: parts are sorted by smallest label and each
/// next root is attached as first child of the previous root when that slot is
/// a leaf, otherwise as its second child.
pub fn kary_recompose(parts: &[KaryTree]) -> Result<KaryTree> {
    let Some(first) = parts.first() else {
        return Err(Error::InvalidParameter("nothing to recompose".into()));
    };
    let k = first.k;
    if k < 2 {
        return Err(Error::InvalidParameter("recomposition needs k >= 2".into()));
    }
    let mut seen = Vec::new();
    for p in parts {
        if p.k != k {
            return Err(Error::InvalidStructure("parts have different arity".into()));
        }
        if kary_stats(p).comp != Some(1) || !is_component(p) {
            return Err(Error::InvalidStructure(format!("part {p} is not a single component")));
        }
        seen.extend(p.labels());
    }
    seen.sort_unstable();
    if seen.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidStructure("parts share a label".into()));
    }
    let mut sorted: Vec<&KaryTree> = parts.iter().collect();
    sorted.sort_by_key(|p| p.min_label());
    let mut acc: Option<Node> = None;
    for p in sorted.into_iter().rev() {
        let mut root = p.root.clone();
        if let Some(below) = acc.take() {
            let Node::Internal { children, .. } = &mut root else { unreachable!() };
            let slot = if children[0].is_leaf() { 0 } else { 1 };
            children[slot] = below;
        }
        acc = Some(root);
    }
    KaryTree::new(k, acc.unwrap())
}

/// `sum_T v^(n-prop) u^(prop-comp) w^comp`, for `k >= 2`.
pub fn kary_triple_poly(n: u32, k: u32) -> Result<MultiPoly> {
    if k < 2 {
        return Err(Error::InvalidParameter("the component statistic needs k >= 2".into()));
    }
    let mut tally = Tally::new();
    for t in enumerate_kary(n, k)? {
        let s = kary_stats(&t);
        let comp = s.comp.unwrap();
        tally.add_vars(&[(Var::V, n - s.prop), (Var::U, s.prop - comp), (Var::W, comp)]);
    }
    Ok(tally.into_poly())
}

/// `sum_T u^prop`.
pub fn kary_prop_poly(n: u32, k: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for t in enumerate_kary(n, k)? {
        tally.add_vars(&[(Var::U, kary_stats(&t).prop)]);
    }
    Ok(tally.into_poly())
}

fn hook_groups(n: u32, k: u32) -> Result<HashMap<Vec<u32>, i64>> {
    let mut groups = HashMap::new();
    for shape in kary_shapes(n, k)? {
        // give the shape distinct labels so hooks can be keyed
        let t = KaryTree { k, root: shape.root.with_labels(&mut (1..=n)) };
        let mut hooks: Vec<u32> = kary_stats(&t).hooks.into_values().collect();
        hooks.sort_unstable();
        *groups.entry(hooks).or_insert(0) += 1;
    }
    Ok(groups)
}

/// `n! sum_shapes prod_v (1 + alpha/h(v)) = P_n(k, (k-1)(1+alpha), 1+alpha)`
/// as polynomials in `alpha`.
pub fn postnikov_symbolic(n: u32, k: u32) -> Result<Check> {
    let alpha: MultiPoly = Var::Alpha.into();
    let lhs = hook_groups(n, k)?.iter().fold(MultiPoly::zero(), |acc, (hooks, &m)| {
        let prod = hooks.iter().fold(MultiPoly::one(), |p, &h| {
            &p * &(&MultiPoly::one() + &alpha.scale(&rat(1, h as i64)))
        });
        &acc + &prod.scale(&int(m))
    });
    let lhs = lhs.scale(&Rational::from_integer(factorial(n)));
    let one_alpha = &MultiPoly::one() + &alpha;
    let rhs = p_of(n, &MultiPoly::int(k as i64), &one_alpha.scale(&int(k as i64 - 1)), &one_alpha);
    Ok(Check::new(format!("k-ary hook formula n={n} k={k}"), lhs, rhs))
}

/// The hook formula at a numeric `alpha`; for `k = 2, alpha = 1` also
/// `(n!/2^n) sum_shapes prod_v (1 + 1/h(v)) = (n+1)^(n-1)`.
pub fn postnikov_check(n: u32, k: u32, alpha: &Rational) -> Result<Vec<Check>> {
    let sum: Rational = hook_groups(n, k)?
        .iter()
        .map(|(hooks, &m)| {
            hooks.iter().fold(int(m), |p, &h| p * (Rational::one() + alpha / int(h as i64)))
        })
        .sum();
    let nf = Rational::from_integer(factorial(n));
    let one_alpha = Rational::one() + alpha;
    let mut out = vec![Check::new(
        format!("k-ary hook formula n={n} k={k} alpha={alpha}"),
        &nf * &sum,
        p_value(n, &int(k as i64), &(&one_alpha * int(k as i64 - 1)), &one_alpha),
    )];
    if k == 2 && alpha.is_one() {
        out.push(Check::new(
            format!("binary hook identity n={n}"),
            &nf / pow(&int(2), n) * &sum,
            pow(&int(n as i64 + 1), n.saturating_sub(1)),
        ));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(s: &str) -> KaryTree {
        KaryTree::parse(s, 2).unwrap()
    }

    fn labeled_count(n: u32, k: u32) -> u64 {
        shape_count(n, k) * (1..=n as u64).product::<u64>()
    }

    #[test]
    fn enumeration_counts() {
        for k in 1..=3 {
            assert_eq!(enumerate_kary(1, k).unwrap().count(), 1);
        }
        assert_eq!(enumerate_kary(2, 2).unwrap().count(), 4);
        assert_eq!(enumerate_kary(3, 2).unwrap().count(), 30);
        for k in 1..=3 {
            for n in 0..=5 {
                assert_eq!(enumerate_kary(n, k).unwrap().count() as u64, labeled_count(n, k));
            }
        }
        assert_eq!(shape_count(8, 2), 1430);
    }

    #[test]
    fn literals() {
        let t = tree("2(1(.,.),.)");
        assert_eq!(t.to_string(), "2(1(.,.),.)");
        assert_eq!(t.n(), 2);
        assert!(KaryTree::parse("2(1(.,.),.)", 3).is_err());
        assert!(KaryTree::parse("1(1(.,.),.)", 2).is_err());
        assert!(KaryTree::parse("1(.,.", 2).is_err());
        assert!(KaryTree::parse("1(.,.)x", 2).is_err());
    }

    #[test]
    fn path_examples() {
        let s = kary_stats(&tree("1(2(.,.),.)"));
        assert_eq!((s.prop, s.comp), (2, Some(2)));
        let s = kary_stats(&tree("2(1(.,.),.)"));
        assert_eq!((s.prop, s.comp), (1, Some(1)));
        let s = kary_stats(&tree("2(.,1(.,.))"));
        assert_eq!((s.prop, s.comp), (1, Some(1)));
        assert_eq!(s.hooks[&2], 2);
        assert_eq!(kary_stats(&KaryTree::parse("2(1(.))", 1).unwrap()).comp, None);
    }

    #[test]
    fn decompose_examples() {
        let t = tree("2(1(.,.),.)");
        assert_eq!(kary_decompose(&t).unwrap(), vec![t.clone()]);
        let parts = kary_decompose(&tree("1(2(.,.),.)")).unwrap();
        assert_eq!(parts, vec![tree("1(.,.)"), tree("2(.,.)")]);
        assert_eq!(kary_recompose(&parts).unwrap(), tree("1(2(.,.),.)"));
        assert_eq!(kary_recompose(std::slice::from_ref(&t)).unwrap(), t);
        assert!(kary_decompose(&KaryTree::parse("1(.)", 1).unwrap()).is_err());
    }

    #[test]
    fn recompose_rejects_bad_parts() {
        assert!(kary_recompose(&[tree("1(2(.,.),.)")]).is_err());
        assert!(kary_recompose(&[tree("1(.,.)"), tree("1(.,.)")]).is_err());
        assert!(kary_recompose(&[]).is_err());
    }

    #[test]
    fn decomposition_round_trip_and_properness() {
        for k in 2..=3 {
            for n in 1..=4 {
                for t in enumerate_kary(n, k).unwrap() {
                    let parts = kary_decompose(&t).unwrap();
                    let s = kary_stats(&t);
                    assert_eq!(parts.len() as u32, s.comp.unwrap());
                    let mins: Vec<_> = parts.iter().map(|p| p.min_label()).collect();
                    assert!(mins.windows(2).all(|w| w[0] < w[1]));
                    let mut proper_in_parts: Vec<u32> = parts.iter().flat_map(proper_labels).collect();
                    proper_in_parts.sort_unstable();
                    assert_eq!(proper_in_parts, proper_labels(&t));
                    assert!(parts.iter().all(is_component));
                    assert_eq!(kary_recompose(&parts).unwrap(), t);
                }
            }
        }
    }

    #[test]
    fn triple_poly_examples() {
        assert_eq!(kary_triple_poly(2, 2).unwrap().to_string(), "u*w + 2*v*w + w^2");
        assert_eq!(kary_triple_poly(1, 3).unwrap().to_string(), "w");
        let (v, u, w): (MultiPoly, MultiPoly, MultiPoly) = (Var::V.into(), Var::U.into(), Var::W.into());
        let expect = p_of(4, &v.scale(&int(3)), &u.scale(&int(2)), &w);
        assert_eq!(kary_triple_poly(4, 3).unwrap(), expect);
        assert!(kary_triple_poly(3, 1).is_err());
    }

    #[test]
    fn prop_poly_examples() {
        assert_eq!(kary_prop_poly(2, 2).unwrap().to_string(), "2*u^2 + 2*u");
        assert_eq!(kary_prop_poly(1, 2).unwrap().to_string(), "u");
        let u: MultiPoly = Var::U.into();
        let expect = p_of(5, &MultiPoly::int(2), &u, &u);
        assert_eq!(kary_prop_poly(5, 2).unwrap(), expect);
        let expect = p_of(5, &MultiPoly::int(1), &MultiPoly::zero(), &u);
        assert_eq!(kary_prop_poly(5, 1).unwrap(), expect);
    }

    #[test]
    fn postnikov_examples() {
        let ch = postnikov_check(2, 2, &int(1)).unwrap();
        assert_eq!((ch[1].lhs.as_str(), ch[1].rhs.as_str()), ("3", "3"));
        let ch = postnikov_check(1, 3, &rat(2, 5)).unwrap();
        assert_eq!(ch[0].lhs, "7/5");
        assert!(ch[0].passed());
        assert!(postnikov_symbolic(4, 3).unwrap().passed());
    }
}
