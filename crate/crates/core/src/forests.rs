//! Labeled rooted forests on `[n]`, their proper vertices, ascents, descents
//! and hook lengths.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num_traits::One;

use crate::algebra::{factorial, int, rat, MultiPoly, Point, Rational, Tally, Var};
use crate::closedform::{catalan, p_of};
use crate::{Check, Error, Result};

/// Largest `n` the full forest enumeration accepts by default.
pub const FOREST_LIMIT: u32 = 8;
/// Largest `n` for the all-labelings, all-subsets hook sweeps.
pub const SUBSET_SWEEP_LIMIT: u32 = 5;

/// A forest on `[n]` stored as a parent map; `0` marks a root.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParentForest {
    parent: Vec<u32>,
}

impl ParentForest {
    /// `parent[v - 1]` is the parent of `v`, or 0 for a root.
    pub fn new(parent: Vec<u32>) -> Result<Self> {
        let n = parent.len() as u32;
        if n == 0 {
            return Err(Error::InvalidStructure("a forest needs n >= 1".into()));
        }
        for (i, &p) in parent.iter().enumerate() {
            let v = i as u32 + 1;
            if p == v {
                return Err(Error::InvalidStructure(format!("vertex {v} is its own parent")));
            }
            if p > n {
                return Err(Error::InvalidStructure(format!("parent {p} of {v} is outside [{n}]")));
            }
        }
        if !is_acyclic(&parent) {
            return Err(Error::InvalidStructure("parent map has a cycle".into()));
        }
        Ok(ParentForest { parent })
    }

    /// Builds a forest from arbitrary distinct integer labels, relabeling
    /// them order-isomorphically onto `[n]`. Each entry is `(vertex, parent)`.
    pub fn from_labeled(entries: &[(i64, Option<i64>)]) -> Result<Self> {
        let mut labels: Vec<i64> = entries.iter().map(|e| e.0).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidStructure("duplicate vertex label".into()));
        }
        let rank = |x: i64| labels.binary_search(&x).map(|i| i as u32 + 1);
        let mut parent = vec![0; labels.len()];
        for &(v, p) in entries {
            let v = rank(v).unwrap();
            parent[v as usize - 1] = match p {
                None => 0,
                Some(p) => rank(p).map_err(|_| {
                    Error::InvalidStructure(format!("parent {p} is not a vertex"))
                })?,
            };
        }
        Self::new(parent)
    }

    pub fn n(&self) -> u32 {
        self.parent.len() as u32
    }

    /// Parent of `v`, 0 if `v` is a root.
    pub fn parent(&self, v: u32) -> u32 {
        self.parent[v as usize - 1]
    }

    pub fn parents(&self) -> &[u32] {
        &self.parent
    }

    pub fn roots(&self) -> impl Iterator<Item = u32> + '_ {
        (1..=self.n()).filter(|&v| self.parent(v) == 0)
    }

    pub fn tree_count(&self) -> u32 {
        self.parent.iter().filter(|&&p| p == 0).count() as u32
    }

    /// Vertices ordered so that every vertex comes after all its descendants.
    fn bottom_up(&self) -> Vec<u32> {
        let n = self.parent.len();
        let mut depth = vec![u32::MAX; n + 1];
        depth[0] = 0;
        fn depth_of(v: usize, parent: &[u32], depth: &mut [u32]) -> u32 {
            if depth[v] == u32::MAX {
                let p = parent[v - 1] as usize;
                depth[v] = depth_of(p, parent, depth) + 1;
            }
            depth[v]
        }
        for v in 1..=n {
            depth_of(v, &self.parent, &mut depth);
        }
        let mut order: Vec<u32> = (1..=n as u32).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(depth[v as usize]));
        order
    }

    /// Bitmask of descendants (including the vertex) for each vertex;
    /// bit `v - 1` stands for `v`.
    fn descendant_masks(&self) -> Vec<u32> {
        let n = self.parent.len();
        let mut mask: Vec<u32> = (0..n).map(|i| 1 << i).collect();
        for v in self.bottom_up() {
            let p = self.parent(v);
            if p != 0 {
                mask[p as usize - 1] |= mask[v as usize - 1];
            }
        }
        mask
    }
}

fn is_acyclic(parent: &[u32]) -> bool {
    // 0 unvisited, 1 on the current walk, 2 known to reach a root
    let mut state = vec![0u8; parent.len() + 1];
    state[0] = 2;
    let mut path = Vec::new();
    for start in 1..=parent.len() {
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            path.push(v);
            v = parent[v - 1] as usize;
        }
        if state[v] == 1 {
            return false;
        }
        for u in path.drain(..) {
            state[u] = 2;
        }
    }
    true
}

/// `n=3; parent=[0,1,2]`
impl fmt::Display for ParentForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}; parent=[{}]", self.n(), self.parent.iter().join(","))
    }
}

impl FromStr for ParentForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::parse("forest", s, why);
        let (n_part, p_part) = s.split_once(';').ok_or_else(|| bad("expected `n=..; parent=[..]`"))?;
        let n: usize = n_part
            .trim()
            .strip_prefix("n=")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| bad("bad `n=` field"))?;
        let list = p_part
            .trim()
            .strip_prefix("parent=")
            .and_then(|x| x.trim().strip_prefix('['))
            .and_then(|x| x.strip_suffix(']'))
            .ok_or_else(|| bad("bad `parent=[..]` field"))?;
        let parent: Vec<u32> = if list.trim().is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|x| x.trim().parse::<u32>().map_err(|_| bad("parent entries must be integers")))
                .collect::<Result<_>>()?
        };
        if parent.len() != n {
            return Err(bad("parent list length differs from n"));
        }
        ParentForest::new(parent)
    }
}

/// Every labeled rooted forest on `[n]`, each exactly once.
///
/// Walks all maps `v -> {0..n} \ {v}` in odometer order and keeps the
/// acyclic ones.
#[derive(Debug, Clone)]
pub struct Forests {
    n: u32,
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl Forests {
    fn advance(&mut self) -> bool {
        let n = self.n;
        for i in 0..self.current.len() {
            let v = i as u32 + 1;
            let mut p = self.current[i] + 1;
            if p == v {
                p += 1;
            }
            if p <= n {
                self.current[i] = p;
                return true;
            }
            self.current[i] = 0;
        }
        false
    }
}

impl Iterator for Forests {
    type Item = ParentForest;

    fn next(&mut self) -> Option<ParentForest> {
        if self.done {
            return None;
        }
        loop {
            if self.started {
                if !self.advance() {
                    self.done = true;
                    return None;
                }
            } else {
                self.started = true;
            }
            if is_acyclic(&self.current) {
                return Some(ParentForest {
                    parent: self.current.clone(),
                });
            }
        }
    }
}

pub fn enumerate_forests(n: u32) -> Result<Forests> {
    enumerate_forests_with_limit(n, FOREST_LIMIT)
}

pub fn enumerate_forests_with_limit(n: u32, limit: u32) -> Result<Forests> {
    if n == 0 {
        return Err(Error::InvalidParameter("forests need n >= 1".into()));
    }
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "forest size n",
            value: n as u64,
            limit: limit as u64,
        });
    }
    Ok(Forests {
        n,
        current: vec![0; n as usize],
        started: false,
        done: false,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForestStats {
    pub prop: u32,
    pub weakly_proper: u32,
    /// Smallest vertex of each tree; equals the tree count.
    pub minimal: u32,
    pub asc: u32,
    pub des: u32,
    /// `hooks[v - 1]` is the number of descendants of `v`, itself included.
    pub hooks: Vec<u32>,
}

pub fn forest_stats(f: &ParentForest) -> ForestStats {
    let n = f.n() as usize;
    let mut submin: Vec<u32> = (1..=n as u32).collect();
    let mut hooks = vec![1u32; n];
    let mut asc = 0;
    let mut des = 0;
    for v in f.bottom_up() {
        let p = f.parent(v);
        if p == 0 {
            continue;
        }
        let (vi, pi) = (v as usize - 1, p as usize - 1);
        submin[pi] = submin[pi].min(submin[vi]);
        hooks[pi] += hooks[vi];
        if p < v {
            asc += 1;
        } else {
            des += 1;
        }
    }
    let prop = (1..=n as u32).filter(|&v| submin[v as usize - 1] == v).count() as u32;
    let minimal = f.tree_count();
    ForestStats {
        prop,
        weakly_proper: prop - minimal,
        minimal,
        asc,
        des,
        hooks,
    }
}

/// `sum_F a^(n - prop) b^(prop - tree) c^tree` over forests on `[n]`.
pub fn forest_vertex_poly(n: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_forests(n)? {
        let s = forest_stats(&f);
        tally.add_vars(&[(Var::A, n - s.prop), (Var::B, s.weakly_proper), (Var::C, s.minimal)]);
    }
    Ok(tally.into_poly())
}

/// `sum_F a^des b^asc c^tree` over forests on `[n]`.
pub fn forest_descent_poly(n: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_forests(n)? {
        let s = forest_stats(&f);
        tally.add_vars(&[(Var::A, s.des), (Var::B, s.asc), (Var::C, s.minimal)]);
    }
    Ok(tally.into_poly())
}

/// `sum_T a^(n - prop) b^(prop - 1)` over trees on `[n]`.
pub fn tree_vertex_poly(n: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_forests(n)?.filter(|f| f.tree_count() == 1) {
        let s = forest_stats(&f);
        tally.add_vars(&[(Var::A, n - s.prop), (Var::B, s.prop - 1)]);
    }
    Ok(tally.into_poly())
}

/// Proper vertices (as a bitmask over shape vertices) when shape vertex `v`
/// receives label `labels[v - 1]`.
fn proper_mask(desc: &[u32], labels: &[u32]) -> u32 {
    let mut mask = 0;
    for (i, &d) in desc.iter().enumerate() {
        let mut rest = d & !(1 << i);
        let mut is_proper = true;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if labels[j] < labels[i] {
                is_proper = false;
                break;
            }
        }
        if is_proper {
            mask |= 1 << i;
        }
    }
    mask
}

fn labelings(n: u32) -> impl Iterator<Item = Vec<u32>> {
    (1..=n).permutations(n as usize)
}

/// Number of relabelings of `f`'s shape under which every vertex in `s` is
/// proper, by brute force over all `n!` bijections.
pub fn count_labelings_with_proper_set(f: &ParentForest, s: &[u32]) -> u64 {
    let desc = f.descendant_masks();
    let want = s.iter().fold(0u32, |m, &v| m | 1 << (v - 1));
    labelings(f.n())
        .filter(|l| proper_mask(&desc, l) & want == want)
        .count() as u64
}

/// `n! / prod_{v in S} h(v)`
pub fn proper_set_formula(f: &ParentForest, s: &[u32]) -> Rational {
    let hooks = forest_stats(f).hooks;
    let denom = s.iter().fold(Rational::one(), |acc, &v| acc * int(hooks[v as usize - 1] as i64));
    Rational::from_integer(factorial(f.n())) / denom
}

/// Canonical isomorphism-class key for an unordered rooted forest.
pub fn shape_key(f: &ParentForest) -> String {
    let n = f.n() as usize;
    let mut children: Vec<Vec<u32>> = vec![Vec::new(); n + 1];
    for v in 1..=n as u32 {
        children[f.parent(v) as usize].push(v);
    }
    fn enc(v: usize, children: &[Vec<u32>]) -> String {
        let mut parts: Vec<String> = children[v].iter().map(|&c| enc(c as usize, children)).collect();
        parts.sort();
        format!("({})", parts.concat())
    }
    let mut roots: Vec<String> = children[0].iter().map(|&r| enc(r as usize, &children)).collect();
    roots.sort();
    roots.concat()
}

/// One representative labeled forest per unlabeled forest shape on `n`
/// vertices, with the number of labeled forests in its class.
pub fn forest_shapes(n: u32) -> Result<Vec<(ParentForest, u64)>> {
    let mut seen: BTreeMap<String, (ParentForest, u64)> = BTreeMap::new();
    for f in enumerate_forests(n)? {
        seen.entry(shape_key(&f)).or_insert_with(|| (f, 0)).1 += 1;
    }
    Ok(seen.into_values().collect())
}

/// Brute-force labeling counts against `n!/prod h(v)` for every shape on
/// `[n]` and every subset of its vertices. The check compares the number of
/// agreeing `(shape, S)` pairs with the total.
pub fn proper_subset_sweep(n: u32) -> Result<Check> {
    if n > SUBSET_SWEEP_LIMIT {
        return Err(Error::LimitExceeded {
            what: "subset sweep size n",
            value: n as u64,
            limit: SUBSET_SWEEP_LIMIT as u64,
        });
    }
    let mut agree = 0u64;
    let mut total = 0u64;
    for (f, _) in forest_shapes(n)? {
        let desc = f.descendant_masks();
        let hooks = forest_stats(&f).hooks;
        let mut by_mask: HashMap<u32, u64> = HashMap::new();
        for l in labelings(n) {
            *by_mask.entry(proper_mask(&desc, &l)).or_insert(0) += 1;
        }
        for s in 0u32..(1 << n) {
            let count: u64 = by_mask.iter().filter(|(m, _)| *m & s == s).map(|(_, c)| c).sum();
            let denom: u64 = (0..n).filter(|i| s >> i & 1 == 1).map(|i| hooks[i as usize] as u64).product();
            let expected = Rational::from_integer(factorial(n)) / int(denom as i64);
            total += 1;
            if int(count as i64) == expected {
                agree += 1;
            }
        }
    }
    Ok(Check::new(
        format!("proper-subset labeling counts n={n}"),
        agree,
        total,
    ))
}

/// `prod_v (1 + alpha / h(v))` as a polynomial in `alpha`.
fn hook_product(hooks: &[u32]) -> MultiPoly {
    let alpha: MultiPoly = Var::Alpha.into();
    hooks.iter().fold(MultiPoly::one(), |acc, &h| {
        &acc * &(&MultiPoly::one() + &alpha.scale(&rat(1, h as i64)))
    })
}

/// Per shape: `sum_L (1 + alpha)^prop(L) = n! prod_v (1 + alpha/h(v))`, the
/// left side summed over all `n!` labelings.
pub fn labeling_hook_checks(n: u32) -> Result<Vec<Check>> {
    if n > SUBSET_SWEEP_LIMIT + 1 {
        return Err(Error::LimitExceeded {
            what: "labeling sweep size n",
            value: n as u64,
            limit: SUBSET_SWEEP_LIMIT as u64 + 1,
        });
    }
    let one_alpha = &MultiPoly::one() + &MultiPoly::var(Var::Alpha);
    let mut out = Vec::new();
    for (f, _) in forest_shapes(n)? {
        let desc = f.descendant_masks();
        let mut hist = vec![0i64; n as usize + 1];
        for l in labelings(n) {
            hist[proper_mask(&desc, &l).count_ones() as usize] += 1;
        }
        let lhs = hist.iter().enumerate().fold(MultiPoly::zero(), |acc, (j, &k)| {
            &acc + &one_alpha.pow(j as u32).scale(&int(k))
        });
        let rhs = hook_product(&forest_stats(&f).hooks)
            .scale(&Rational::from_integer(factorial(n)));
        out.push(Check::new(format!("labeling hook sum shape {}", shape_key(&f)), lhs, rhs));
    }
    Ok(out)
}

/// `sum_F c^tree prod_v (1 + alpha/h(v)) = P_n(1, 1+alpha, c(1+alpha))`, the
/// `alpha = c = 1` evaluation against `n! C_{n+1}`, and for small `n` the
/// per-shape labeling identity.
pub fn forest_hook_identity(n: u32) -> Result<Vec<Check>> {
    let mut groups: HashMap<(u32, Vec<u32>), i64> = HashMap::new();
    for f in enumerate_forests(n)? {
        let mut hooks = forest_stats(&f).hooks;
        hooks.sort_unstable();
        *groups.entry((f.tree_count(), hooks)).or_insert(0) += 1;
    }
    let c: MultiPoly = Var::C.into();
    let lhs = groups.iter().fold(MultiPoly::zero(), |acc, ((t, hooks), &k)| {
        &acc + &(&c.pow(*t) * &hook_product(hooks)).scale(&int(k))
    });
    let one_alpha = &MultiPoly::one() + &MultiPoly::var(Var::Alpha);
    let rhs = p_of(n, &MultiPoly::one(), &one_alpha, &(&c * &one_alpha));
    let at_one: Point = [(Var::C, int(1)), (Var::Alpha, int(1))].into();
    let catalan_lhs = lhs.eval(&at_one)? / Rational::from_integer(factorial(n));
    let mut out = vec![
        Check::new(format!("forest hook formula n={n}"), &lhs, &rhs),
        Check::new(format!("forest hook catalan n={n}"), catalan_lhs, catalan(n + 1)),
    ];
    if n <= SUBSET_SWEEP_LIMIT {
        out.extend(labeling_hook_checks(n)?);
    }
    Ok(out)
}

/// The weighted count `p_n` from enumeration satisfies
/// `(b+c) c^-1 p_n(a,b,c) = (b + c + (n-1)a) p_{n-1}(a,b,b+c)`.
pub fn second_proof_recurrence(n: u32) -> Result<Check> {
    let pn = forest_vertex_poly(n)?.div_var(Var::C)?;
    let (a, b, c): (MultiPoly, MultiPoly, MultiPoly) = (Var::A.into(), Var::B.into(), Var::C.into());
    let bc = &b + &c;
    let (lhs, rhs) = if n == 1 {
        (pn, MultiPoly::one())
    } else {
        let prev = forest_vertex_poly(n - 1)?.substitute(&[(Var::C, bc.clone())]);
        let factor = &bc + &a.scale(&int(n as i64 - 1));
        (&bc * &pn, &factor * &prev)
    };
    Ok(Check::new(format!("root-deletion recurrence n={n}"), lhs, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closedform::{p_poly, q_poly};

    fn forest(p: &[u32]) -> ParentForest {
        ParentForest::new(p.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_forests(1).unwrap().count(), 1);
        let two: Vec<_> = enumerate_forests(2).unwrap().collect();
        assert_eq!(two.len(), 3);
        assert!(two.contains(&forest(&[0, 0])));
        assert!(two.contains(&forest(&[0, 1])));
        assert!(two.contains(&forest(&[2, 0])));
        assert_eq!(enumerate_forests(4).unwrap().count(), 125);
        for n in 1..=6u32 {
            assert_eq!(enumerate_forests(n).unwrap().count() as u64, (n as u64 + 1).pow(n - 1));
        }
    }

    #[test]
    fn enumeration_limit() {
        assert!(matches!(enumerate_forests(9), Err(Error::LimitExceeded { .. })));
        assert!(enumerate_forests(0).is_err());
    }

    #[test]
    fn stats_examples() {
        // path 1 <- 2 <- 3 rooted at 1
        let s = forest_stats(&forest(&[0, 1, 2]));
        assert_eq!((s.prop, s.minimal, s.weakly_proper, s.asc, s.des), (3, 1, 2, 2, 0));
        assert_eq!(s.hooks, vec![3, 2, 1]);
        // path rooted at 3: 2 -> 3, 1 -> 2
        let s = forest_stats(&forest(&[2, 3, 0]));
        assert_eq!((s.prop, s.des, s.asc), (1, 2, 0));
        let s = forest_stats(&forest(&[0]));
        assert_eq!((s.prop, s.minimal, s.asc, s.des), (1, 1, 0, 0));
        assert_eq!(s.hooks, vec![1]);
    }

    #[test]
    fn stats_invariants() {
        for f in enumerate_forests(5).unwrap() {
            let s = forest_stats(&f);
            assert_eq!(s.prop, s.weakly_proper + s.minimal);
            assert_eq!(s.asc + s.des, f.n() - f.tree_count());
            for r in f.roots() {
                let size = (1..=f.n())
                    .filter(|&v| {
                        let mut x = v;
                        while f.parent(x) != 0 {
                            x = f.parent(x);
                        }
                        x == r
                    })
                    .count() as u32;
                assert_eq!(s.hooks[r as usize - 1], size);
            }
        }
    }

    #[test]
    fn validation_and_literals() {
        assert!(ParentForest::new(vec![1]).is_err());
        assert!(ParentForest::new(vec![2, 1]).is_err());
        assert!(ParentForest::new(vec![0, 4]).is_err());
        let f: ParentForest = "n=3; parent=[0,1,2]".parse().unwrap();
        assert_eq!(f, forest(&[0, 1, 2]));
        assert_eq!(f.to_string(), "n=3; parent=[0,1,2]");
        assert!("n=2; parent=[2,1]".parse::<ParentForest>().is_err());
        assert!("n=3; parent=[0,1]".parse::<ParentForest>().is_err());
        let g = ParentForest::from_labeled(&[(10, None), (-4, Some(10)), (7, Some(-4))]).unwrap();
        assert_eq!(g, forest(&[3, 1, 0]));
    }

    #[test]
    fn vertex_poly_examples() {
        assert_eq!(forest_vertex_poly(1).unwrap().to_string(), "c");
        assert_eq!(forest_vertex_poly(2).unwrap().to_string(), "a*c + b*c + c^2");
        assert_eq!(forest_vertex_poly(4).unwrap(), p_poly(4));
    }

    #[test]
    fn descent_poly_examples() {
        assert_eq!(forest_descent_poly(1).unwrap().to_string(), "c");
        assert_eq!(forest_descent_poly(2).unwrap().to_string(), "a*c + b*c + c^2");
        assert_eq!(forest_descent_poly(5).unwrap(), p_poly(5));
    }

    #[test]
    fn tree_poly_examples() {
        assert_eq!(tree_vertex_poly(1).unwrap(), MultiPoly::one());
        assert_eq!(tree_vertex_poly(2).unwrap().to_string(), "a + b");
        assert_eq!(tree_vertex_poly(3).unwrap(), q_poly(3));
    }

    #[test]
    fn proper_set_examples() {
        let path = forest(&[0, 1, 2]);
        assert_eq!(count_labelings_with_proper_set(&path, &[1, 2, 3]), 1);
        assert_eq!(count_labelings_with_proper_set(&path, &[]), 6);
        // trees {1 <- 2} and {3}
        let f = forest(&[0, 1, 0]);
        assert_eq!(count_labelings_with_proper_set(&f, &[1]), 3);
        assert_eq!(proper_set_formula(&f, &[1]), int(3));
    }

    #[test]
    fn subset_sweep_small() {
        for n in 1..=4 {
            let ch = proper_subset_sweep(n).unwrap();
            assert!(ch.passed(), "{ch:?}");
        }
    }

    #[test]
    fn hook_identity_examples() {
        let ch = forest_hook_identity(1).unwrap();
        assert_eq!(ch[0].lhs, "c*alpha + c");
        assert!(ch.iter().all(Check::passed));
        let ch = forest_hook_identity(2).unwrap();
        assert!(ch.iter().all(Check::passed), "{ch:?}");
        assert_eq!(ch[1].lhs, "5");
    }

    #[test]
    fn shapes() {
        let counts: Vec<usize> = (1..=5).map(|n| forest_shapes(n).unwrap().len()).collect();
        // unlabeled rooted forests: 1, 2, 4, 9, 20
        assert_eq!(counts, vec![1, 2, 4, 9, 20]);
        let total: u64 = forest_shapes(4).unwrap().iter().map(|s| s.1).sum();
        assert_eq!(total, 125);
    }

    #[test]
    fn recurrence_small() {
        for n in 1..=5 {
            assert!(second_proof_recurrence(n).unwrap().passed());
        }
    }
}
