//! k-colored ordered forests: ordered forests whose edges carry colors
//! `1..=k`, with each vertex's children grouped by weakly increasing color.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;

use crate::algebra::{factorial, int, rat, MultiPoly, Rational, Tally, Var};
use crate::closedform::p_of;
use crate::kary::kary_triple_poly;
use crate::{Check, Error, Result};

/// Upper bound on labeled forests produced by one enumeration.
pub const LABELED_LIMIT: u64 = 2_000_000;

/// Splits `seq` before each left-right minimum. Blocks keep their original
/// order, so each block starts with its smallest entry.
pub fn left_right_minima(seq: &[u32]) -> Result<Vec<Vec<u32>>> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidParameter("sequence entries must be distinct".into()));
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut min = u32::MAX;
    for &x in seq {
        if x < min {
            min = x;
            blocks.push(Vec::new());
        }
        blocks.last_mut().unwrap().push(x);
    }
    Ok(blocks)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredNode {
    pub label: u32,
    /// `(color, child)` pairs, colors weakly increasing.
    pub children: Vec<(u32, ColoredNode)>,
}

impl ColoredNode {
    fn size(&self) -> u32 {
        1 + self.children.iter().map(|(_, c)| c.size()).sum::<u32>()
    }

    fn labels_into(&self, out: &mut Vec<u32>) {
        out.push(self.label);
        for (_, c) in &self.children {
            c.labels_into(out);
        }
    }

    fn with_labels(&self, labels: &mut impl Iterator<Item = u32>) -> ColoredNode {
        let label = labels.next().expect("enough labels");
        ColoredNode {
            label,
            children: self.children.iter().map(|(col, c)| (*col, c.with_labels(labels))).collect(),
        }
    }

    fn colors_ok(&self, k: u32) -> bool {
        self.children.iter().all(|(col, _)| (1..=k).contains(col))
            && self.children.windows(2).all(|w| w[0].0 <= w[1].0)
            && self.children.iter().all(|(_, c)| c.colors_ok(k))
    }

    /// Fills `(min label, size)` for every subtree, keyed by label.
    fn annotate(&self, out: &mut HashMap<u32, (u32, u32)>) -> (u32, u32) {
        let mut min = self.label;
        let mut size = 1;
        for (_, c) in &self.children {
            let (m, s) = c.annotate(out);
            min = min.min(m);
            size += s;
        }
        out.insert(self.label, (min, size));
        (min, size)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredForest {
    k: u32,
    trees: Vec<ColoredNode>,
}

impl ColoredForest {
    pub fn new(k: u32, trees: Vec<ColoredNode>) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be at least 1".into()));
        }
        if !trees.iter().all(|t| t.colors_ok(k)) {
            return Err(Error::InvalidStructure(format!(
                "child colors must lie in 1..={k} and be weakly increasing"
            )));
        }
        let f = ColoredForest { k, trees };
        let mut labels = f.labels();
        labels.sort_unstable();
        if labels.contains(&0) || labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidStructure("labels must be distinct positive integers".into()));
        }
        Ok(f)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn trees(&self) -> &[ColoredNode] {
        &self.trees
    }

    pub fn n(&self) -> u32 {
        self.trees.iter().map(ColoredNode::size).sum()
    }

    pub fn labels(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for t in &self.trees {
            t.labels_into(&mut out);
        }
        out
    }

    pub fn root_labels(&self) -> Vec<u32> {
        self.trees.iter().map(|t| t.label).collect()
    }

    /// Parses `tree (";" tree)*` where `tree := LABEL ["[" edge ("," edge)* "]"]`
    /// and `edge := COLOR ":" "(" tree ")"`, e.g. `2[1:(1),2:(3)]; 4`.
    pub fn parse(s: &str, k: u32) -> Result<Self> {
        let mut p = Parser { s, pos: 0 };
        let mut trees = vec![p.tree()?];
        while p.eat(';') {
            trees.push(p.tree()?);
        }
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.err("trailing input"));
        }
        ColoredForest::new(k, trees).map_err(|e| Error::parse("colored forest", s, e.to_string()))
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.s[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn err(&self, why: &str) -> Error {
        Error::parse("colored forest", self.s, format!("{why} at byte {}", self.pos))
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

    fn number(&mut self) -> Result<u32> {
        self.skip_ws();
        let digits = self.s[self.pos..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected a number"));
        }
        let x = self.s[self.pos..self.pos + digits].parse().map_err(|_| self.err("number too large"))?;
        self.pos += digits;
        Ok(x)
    }

    fn tree(&mut self) -> Result<ColoredNode> {
        let label = self.number()?;
        let mut children = Vec::new();
        if self.eat('[') {
            loop {
                let color = self.number()?;
                if !self.eat(':') || !self.eat('(') {
                    return Err(self.err("expected `:(`"));
                }
                let child = self.tree()?;
                if !self.eat(')') {
                    return Err(self.err("expected `)`"));
                }
                children.push((color, child));
                if !self.eat(',') {
                    break;
                }
            }
            if !self.eat(']') {
                return Err(self.err("expected `]`"));
            }
        }
        Ok(ColoredNode { label, children })
    }
}

impl fmt::Display for ColoredNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label)?;
        if !self.children.is_empty() {
            f.write_str("[")?;
            for (i, (col, c)) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{col}:({c})")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

impl fmt::Display for ColoredForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.trees.iter().join("; "))
    }
}

/// Unlabeled shapes by vertex count: trees and forests (sequences of trees).
struct ShapeTable {
    trees: Vec<Vec<ColoredNode>>,
    forests: Vec<Vec<Vec<ColoredNode>>>,
}

impl ShapeTable {
    fn build(n: u32, k: u32) -> Self {
        let mut table = ShapeTable {
            trees: vec![Vec::new()],
            forests: vec![vec![Vec::new()]],
        };
        for m in 1..=n as usize {
            let mut trees = Vec::new();
            let mut sizes = vec![0usize; k as usize];
            compositions(m - 1, &mut sizes, 0, &mut |sizes| {
                let pools: Vec<&Vec<Vec<ColoredNode>>> = sizes.iter().map(|&s| &table.forests[s]).collect();
                for combo in pools.iter().map(|p| p.iter()).multi_cartesian_product() {
                    let children = combo
                        .into_iter()
                        .enumerate()
                        .flat_map(|(i, forest)| forest.iter().map(move |t| (i as u32 + 1, t.clone())))
                        .collect();
                    trees.push(ColoredNode { label: 0, children });
                }
            });
            table.trees.push(trees);
            let mut forests = Vec::new();
            for first in 1..=m {
                for t in &table.trees[first] {
                    for rest in &table.forests[m - first] {
                        let mut f = Vec::with_capacity(rest.len() + 1);
                        f.push(t.clone());
                        f.extend(rest.iter().cloned());
                        forests.push(f);
                    }
                }
            }
            table.forests.push(forests);
        }
        table
    }
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

fn labeled_count(n: u32, k: u32) -> u64 {
    // P_n(k, k+1, 1)
    (1..n).fold(1u64, |acc, i| acc.saturating_mul((i * k + (n - i) * (k + 1) + 1) as u64))
}

fn check_limits(n: u32, k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let total = labeled_count(n, k);
    if total > LABELED_LIMIT {
        return Err(Error::LimitExceeded { what: "labeled colored forest count", value: total, limit: LABELED_LIMIT });
    }
    Ok(())
}

/// One structural representative (labels assigned in preorder) per unlabeled
/// k-colored ordered forest on `n` vertices.
pub fn colored_shapes(n: u32, k: u32) -> Result<Vec<ColoredForest>> {
    check_limits(n, k)?;
    let table = ShapeTable::build(n, k);
    Ok(table.forests[n as usize]
        .iter()
        .map(|trees| {
            let mut labels = 1..=n;
            ColoredForest { k, trees: trees.iter().map(|t| t.with_labels(&mut labels)).collect() }
        })
        .collect())
}

/// Every labeled k-colored ordered forest on `[n]`, each exactly once.
/// Ordered forests have no automorphisms, so every shape carries `n!`
/// distinct labelings.
pub fn enumerate_colored_forests(n: u32, k: u32) -> Result<impl Iterator<Item = ColoredForest>> {
    let shapes = colored_shapes(n, k)?;
    Ok(shapes.into_iter().flat_map(move |shape| {
        (1..=n).permutations(n as usize).map(move |perm| {
            let mut labels = perm.into_iter();
            ColoredForest { k, trees: shape.trees.iter().map(|t| t.with_labels(&mut labels)).collect() }
        })
    }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoredStats {
    pub prop: u32,
    /// Number of left-right minima of the root sequence.
    pub comp: u32,
    pub hooks: HashMap<u32, u32>,
}

pub fn colored_stats(f: &ColoredForest) -> ColoredStats {
    let mut info = HashMap::new();
    for t in &f.trees {
        t.annotate(&mut info);
    }
    let prop = info.iter().filter(|(l, (m, _))| *l == m).count() as u32;
    let comp = left_right_minima(&f.root_labels()).map(|b| b.len() as u32).unwrap_or(0);
    ColoredStats {
        prop,
        comp,
        hooks: info.into_iter().map(|(l, (_, s))| (l, s)).collect(),
    }
}

pub fn proper_labels(f: &ColoredForest) -> Vec<u32> {
    let mut info = HashMap::new();
    for t in &f.trees {
        t.annotate(&mut info);
    }
    let mut out: Vec<u32> = info.iter().filter(|(l, (m, _))| *l == m).map(|(l, _)| *l).collect();
    out.sort_unstable();
    out
}

/// Cuts the tree sequence before each left-right minimum of the roots.
pub fn colored_components(f: &ColoredForest) -> Vec<ColoredForest> {
    let roots = f.root_labels();
    let blocks = left_right_minima(&roots).expect("labels are distinct");
    let mut trees = f.trees.iter();
    blocks
        .iter()
        .map(|b| ColoredForest { k: f.k, trees: trees.by_ref().take(b.len()).cloned().collect() })
        .collect()
}

/// `sum_F u^prop` over k-colored ordered forests on `[n]`.
pub fn colored_prop_poly(n: u32, k: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_colored_forests(n, k)? {
        tally.add_vars(&[(Var::U, colored_stats(&f).prop)]);
    }
    Ok(tally.into_poly())
}

/// `sum_T u^prop` over k-colored ordered trees on `[n]`.
pub fn colored_tree_prop_poly(n: u32, k: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_colored_forests(n, k)?.filter(|f| f.trees.len() == 1) {
        tally.add_vars(&[(Var::U, colored_stats(&f).prop)]);
    }
    Ok(tally.into_poly())
}

/// `sum_F u^(n-prop) v^(prop-comp) w^comp`.
pub fn colored_triple_poly(n: u32, k: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_colored_forests(n, k)? {
        let s = colored_stats(&f);
        tally.add_vars(&[(Var::U, n - s.prop), (Var::V, s.prop - s.comp), (Var::W, s.comp)]);
    }
    Ok(tally.into_poly())
}

/// Hook formulas over unlabeled shapes, symbolic in `alpha`:
/// forests against `P_n(k, (k+1)(1+alpha), 1+alpha)` and trees against
/// `-P_n(k, (k+1)(1+alpha), -(1+alpha))`.
pub fn colored_hook_check(n: u32, k: u32) -> Result<Vec<Check>> {
    let alpha: MultiPoly = Var::Alpha.into();
    let mut forest_groups: HashMap<Vec<u32>, i64> = HashMap::new();
    let mut tree_groups: HashMap<Vec<u32>, i64> = HashMap::new();
    for shape in colored_shapes(n, k)? {
        let mut hooks: Vec<u32> = colored_stats(&shape).hooks.into_values().collect();
        hooks.sort_unstable();
        if shape.trees.len() == 1 {
            *tree_groups.entry(hooks.clone()).or_insert(0) += 1;
        }
        *forest_groups.entry(hooks).or_insert(0) += 1;
    }
    let nf = Rational::from_integer(factorial(n));
    let sum = |groups: &HashMap<Vec<u32>, i64>| {
        groups
            .iter()
            .fold(MultiPoly::zero(), |acc, (hooks, &m)| {
                let prod = hooks.iter().fold(MultiPoly::one(), |p, &h| {
                    &p * &(&MultiPoly::one() + &alpha.scale(&rat(1, h as i64)))
                });
                &acc + &prod.scale(&int(m))
            })
            .scale(&nf)
    };
    let one_alpha = &MultiPoly::one() + &alpha;
    let a = MultiPoly::int(k as i64);
    let b = one_alpha.scale(&int(k as i64 + 1));
    let forests_rhs = p_of(n, &a, &b, &one_alpha);
    let trees_rhs = -p_of(n, &a, &b, &(-&one_alpha));
    Ok(vec![
        Check::new(format!("colored forest hook formula n={n} k={k}"), sum(&forest_groups), forests_rhs),
        Check::new(format!("colored tree hook formula n={n} k={k}"), sum(&tree_groups), trees_rhs),
    ])
}

/// `(k+1)`-ary trees and k-colored ordered forests share the refined
/// distribution: `sum_T v^(n-prop) u^(prop-comp) w^comp` equals
/// `sum_F u^(n-prop) v^(prop-comp) w^comp`.
pub fn ksym_check(n: u32, k: u32) -> Result<Check> {
    Ok(Check::new(
        format!("(k+1)-ary vs k-colored n={n} k={k}"),
        kary_triple_poly(n, k + 1)?,
        colored_triple_poly(n, k)?,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kary::enumerate_kary;

    fn u() -> MultiPoly {
        Var::U.into()
    }

    #[test]
    fn lr_minima_examples() {
        let blocks = left_right_minima(&[4, 7, 5, 3, 1, 2, 6]).unwrap();
        assert_eq!(blocks, vec![vec![4, 7, 5], vec![3], vec![1, 2, 6]]);
        assert_eq!(left_right_minima(&[1, 2, 3]).unwrap().len(), 1);
        assert_eq!(left_right_minima(&[4, 3, 2, 1]).unwrap().len(), 4);
        assert!(left_right_minima(&[2, 1, 2]).is_err());
        assert!(left_right_minima(&[]).unwrap().is_empty());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_colored_forests(1, 1).unwrap().count(), 1);
        let two: Vec<String> = enumerate_colored_forests(2, 1).unwrap().map(|f| f.to_string()).collect();
        assert_eq!(two.len(), 4);
        for lit in ["1; 2", "2; 1", "1[1:(2)]", "2[1:(1)]"] {
            assert!(two.contains(&lit.to_string()), "{lit}");
        }
        assert_eq!(enumerate_colored_forests(2, 2).unwrap().count(), 6);
        for k in 1..=2 {
            for n in 1..=5 {
                assert_eq!(enumerate_colored_forests(n, k).unwrap().count() as u64, labeled_count(n, k));
                assert_eq!(
                    enumerate_colored_forests(n, k).unwrap().count(),
                    enumerate_kary(n, k + 1).unwrap().count()
                );
            }
        }
    }

    #[test]
    fn literals() {
        let f = ColoredForest::parse("2[1:(1),2:(3)]; 4", 2).unwrap();
        assert_eq!(f.to_string(), "2[1:(1),2:(3)]; 4");
        assert_eq!(f.n(), 4);
        assert!(ColoredForest::parse("2[2:(1),1:(3)]", 2).is_err());
        assert!(ColoredForest::parse("2[3:(1)]", 2).is_err());
        assert!(ColoredForest::parse("2[1:(2)]", 2).is_err());
        assert!(ColoredForest::parse("2[1:1]", 2).is_err());
    }

    #[test]
    fn prop_poly_examples() {
        assert_eq!(colored_prop_poly(2, 1).unwrap().to_string(), "3*u^2 + u");
        assert_eq!(colored_tree_prop_poly(2, 1).unwrap().to_string(), "u^2 + u");
        assert_eq!(colored_prop_poly(1, 2).unwrap(), u());
        assert_eq!(colored_tree_prop_poly(1, 2).unwrap(), u());
        for k in 1..=2 {
            let a = MultiPoly::int(k as i64);
            let b = u().scale(&int(k as i64 + 1));
            assert_eq!(colored_prop_poly(4, k).unwrap(), p_of(4, &a, &b, &u()));
            assert_eq!(colored_tree_prop_poly(4, k).unwrap(), -p_of(4, &a, &b, &(-&u())));
        }
    }

    #[test]
    fn triple_poly_examples() {
        assert_eq!(colored_triple_poly(2, 1).unwrap().to_string(), "u*w + 2*v*w + w^2");
        assert_eq!(colored_triple_poly(1, 3).unwrap().to_string(), "w");
        let (uu, v, w): (MultiPoly, MultiPoly, MultiPoly) = (Var::U.into(), Var::V.into(), Var::W.into());
        let expect = p_of(4, &uu.scale(&int(2)), &v.scale(&int(3)), &w);
        assert_eq!(colored_triple_poly(4, 2).unwrap(), expect);
    }

    #[test]
    fn hook_checks_small() {
        let ch = colored_hook_check(1, 1).unwrap();
        assert_eq!(ch[0].lhs, "alpha + 1");
        assert!(ch.iter().all(Check::passed));
        assert!(colored_hook_check(2, 1).unwrap().iter().all(Check::passed));
        assert!(colored_hook_check(4, 2).unwrap().iter().all(Check::passed));
    }

    #[test]
    fn ksym_small() {
        assert_eq!(ksym_check(1, 1).unwrap().lhs, "w");
        for k in 1..=2 {
            for n in 1..=3 {
                assert!(ksym_check(n, k).unwrap().passed());
            }
        }
    }

    #[test]
    fn components_preserve_properness() {
        for f in enumerate_colored_forests(4, 2).unwrap() {
            let parts = colored_components(&f);
            assert_eq!(parts.len() as u32, colored_stats(&f).comp);
            for p in &parts {
                let roots = p.root_labels();
                assert_eq!(roots[0], *roots.iter().min().unwrap());
            }
            let mut props: Vec<u32> = parts.iter().flat_map(proper_labels).collect();
            props.sort_unstable();
            assert_eq!(props, proper_labels(&f));
        }
    }
}
