//! c-parking functions: `n` cars, spaces `1..=n+c`, of which the last is
//! never used. Cars take the first free space at or after their preference.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{MultiPoly, Tally, Var};
use crate::{Error, Result};

/// Upper bound on `(n+c-1)^n`, the number of preference maps scanned.
pub const SCAN_LIMIT: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParkingFn {
    n: u32,
    c: u32,
    prefs: Vec<u32>,
}

impl ParkingFn {
    /// `prefs[z-1]` is the preferred space of car `z`, in `1..=n+c`.
    /// The result need not be a valid c-parking function; see [`ParkingFn::is_valid`].
    pub fn new(c: u32, prefs: Vec<u32>) -> Result<Self> {
        if c == 0 {
            return Err(Error::InvalidParameter("c must be at least 1".into()));
        }
        let n = prefs.len() as u32;
        if let Some(&p) = prefs.iter().find(|&&p| p == 0 || p > n + c) {
            return Err(Error::InvalidParameter(format!("preference {p} outside 1..={}", n + c)));
        }
        Ok(ParkingFn { n, c, prefs })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn c(&self) -> u32 {
        self.c
    }

    pub fn prefs(&self) -> &[u32] {
        &self.prefs
    }

    /// `|B_i|` for spaces `i = 1..=n+c`, where `B_i` is the set of cars preferring `i`.
    pub fn block_sizes(&self) -> Vec<u32> {
        let mut sizes = vec![0; (self.n + self.c) as usize];
        for &p in &self.prefs {
            sizes[p as usize - 1] += 1;
        }
        sizes
    }

    /// Block criterion: `|B_1| + ... + |B_i| >= i - c + 1` for every usable space `i`.
    pub fn is_valid(&self) -> bool {
        let mut sum = 0i64;
        for (i, b) in self.block_sizes().iter().enumerate().take((self.n + self.c - 1) as usize) {
            sum += *b as i64;
            if sum < i as i64 + 2 - self.c as i64 {
                return false;
            }
        }
        true
    }

    fn require_valid(&self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidStructure(format!("`{self}` is not a {}-parking function", self.c)))
        }
    }

    /// `|B_1| + ... + |B_i| > i` for all `i < n` (c = 1 only).
    pub fn is_prime(&self) -> bool {
        if self.c != 1 || !self.is_valid() {
            return false;
        }
        let mut sum = 0;
        self.block_sizes()[..self.n.saturating_sub(1) as usize].iter().enumerate().all(|(i, b)| {
            sum += b;
            sum > i as u32 + 1
        })
    }
}

impl fmt::Display for ParkingFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefs: Vec<String> = self.prefs.iter().map(u32::to_string).collect();
        write!(f, "n={} c={} prefs={}", self.n, self.c, prefs.join(","))
    }
}

impl FromStr for ParkingFn {
    type Err = Error;

    /// `n=3 c=1 prefs=1,1,2`
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::parse("parking function", s, why);
        let (mut n, mut c, mut prefs) = (None, None, None);
        for field in s.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            match key {
                "n" => n = Some(value.parse::<u32>().map_err(|_| bad("bad n"))?),
                "c" => c = Some(value.parse::<u32>().map_err(|_| bad("bad c"))?),
                "prefs" => {
                    let list = if value.is_empty() {
                        Vec::new()
                    } else {
                        value.split(',').map(|p| p.parse::<u32>()).collect::<Result<_, _>>().map_err(|_| bad("bad prefs"))?
                    };
                    prefs = Some(list);
                }
                _ => return Err(bad("unknown key")),
            }
        }
        let prefs = prefs.ok_or_else(|| bad("missing prefs"))?;
        if n.is_some_and(|n| n as usize != prefs.len()) {
            return Err(bad("n does not match the number of preferences"));
        }
        ParkingFn::new(c.unwrap_or(1), prefs).map_err(|e| bad(&e.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum ParkOutcome {
    Parked {
        /// `assignment[z-1]` is the space taken by car `z`.
        assignment: Vec<u32>,
        lucky: Vec<u32>,
        empty: Vec<u32>,
    },
    Failed {
        car: u32,
    },
}

impl ParkOutcome {
    pub fn is_parked(&self) -> bool {
        matches!(self, ParkOutcome::Parked { .. })
    }

    pub fn lucky_count(&self) -> Option<u32> {
        match self {
            ParkOutcome::Parked { lucky, .. } => Some(lucky.len() as u32),
            ParkOutcome::Failed { .. } => None,
        }
    }
}

/// Parks the cars in increasing order.
pub fn park(f: &ParkingFn) -> ParkOutcome {
    simulate(f, 1..=f.n)
}

/// Parks the cars in the given arrival order, a permutation of `1..=n`.
pub fn park_in_order(f: &ParkingFn, order: &[u32]) -> Result<ParkOutcome> {
    let mut sorted = order.to_vec();
    sorted.sort_unstable();
    if !sorted.iter().copied().eq(1..=f.n) {
        return Err(Error::InvalidParameter(format!("arrival order must be a permutation of 1..={}", f.n)));
    }
    Ok(simulate(f, order.iter().copied()))
}

fn simulate(f: &ParkingFn, order: impl IntoIterator<Item = u32>) -> ParkOutcome {
    let usable = (f.n + f.c - 1) as usize;
    let mut taken = vec![false; usable + 1];
    let mut assignment = vec![0; f.n as usize];
    for car in order {
        let want = f.prefs[car as usize - 1] as usize;
        match (want..=usable).find(|&s| !taken[s]) {
            Some(s) => {
                taken[s] = true;
                assignment[car as usize - 1] = s as u32;
            }
            None => return ParkOutcome::Failed { car },
        }
    }
    let lucky = (1..=f.n).filter(|&z| assignment[z as usize - 1] == f.prefs[z as usize - 1]).collect();
    let empty = (1..=f.n + f.c).filter(|&s| s as usize > usable || !taken[s as usize]).collect();
    ParkOutcome::Parked { assignment, lucky, empty }
}

/// Number of lucky cars under increasing arrival order.
pub fn lucky(f: &ParkingFn) -> Result<u32> {
    park(f).lucky_count().ok_or_else(|| Error::InvalidStructure(format!("`{f}` does not park")))
}

fn check_limits(n: u32, c: u32) -> Result<()> {
    if c == 0 {
        return Err(Error::InvalidParameter("c must be at least 1".into()));
    }
    let scan = ((n + c - 1) as u64).checked_pow(n).unwrap_or(u64::MAX);
    if scan > SCAN_LIMIT {
        return Err(Error::LimitExceeded { what: "preference maps to scan", value: scan, limit: SCAN_LIMIT });
    }
    Ok(())
}

fn maps_up_to(n: u32, c: u32, top: u32) -> impl Iterator<Item = ParkingFn> {
    let mut next = Some(vec![1u32; n as usize]);
    std::iter::from_fn(move || {
        let cur = next.take()?;
        let mut succ = cur.clone();
        if let Some(i) = (0..succ.len()).rev().find(|&i| succ[i] < top) {
            succ[i] += 1;
            succ[i + 1..].iter_mut().for_each(|p| *p = 1);
            next = Some(succ);
        }
        Some(ParkingFn { n, c, prefs: cur })
    })
}

/// Every preference map `[n] -> [n+c]`, valid or not, in lexicographic order.
pub fn preference_maps(n: u32, c: u32) -> Result<impl Iterator<Item = ParkingFn>> {
    check_limits(n, c + 1)?;
    Ok(maps_up_to(n, c, n + c))
}

/// Every c-parking function on `[n]` in lexicographic order of preferences.
/// Preferences for the last space `n+c` are never valid and are skipped.
pub fn enumerate_parking(n: u32, c: u32) -> Result<impl Iterator<Item = ParkingFn>> {
    check_limits(n, c)?;
    Ok(maps_up_to(n, c, n + c - 1).filter(ParkingFn::is_valid))
}

/// `sum_f u^lucky(f)` over c-parking functions on `[n]`.
pub fn lucky_poly(n: u32, c: u32) -> Result<MultiPoly> {
    let mut tally = Tally::new();
    for f in enumerate_parking(n, c)? {
        tally.add_vars(&[(Var::U, lucky(&f)?)]);
    }
    Ok(tally.into_poly())
}

/// `sum_f u^lucky(f)` over prime parking functions on `[n]`.
pub fn prime_lucky_poly(n: u32) -> Result<MultiPoly> {
    if n == 0 {
        return Err(Error::InvalidParameter("prime parking functions need n >= 1".into()));
    }
    let mut tally = Tally::new();
    for f in enumerate_parking(n, 1)?.filter(ParkingFn::is_prime) {
        tally.add_vars(&[(Var::U, lucky(&f)?)]);
    }
    Ok(tally.into_poly())
}

/// One piece of a decomposed parking function: the original labels of its
/// cars (increasing), the number of spaces before it, and the piece itself
/// with cars and spaces relabeled to initial segments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub cars: Vec<u32>,
    pub offset: u32,
    pub f: ParkingFn,
}

fn cut(f: &ParkingFn, bounds: &[(u32, u32)]) -> Vec<Factor> {
    // each bound (lo, hi] is the range of preferred spaces owned by one piece
    bounds
        .iter()
        .map(|&(lo, hi)| {
            let cars: Vec<u32> = (1..=f.n).filter(|&z| (lo + 1..=hi).contains(&f.prefs[z as usize - 1])).collect();
            let prefs: Vec<u32> = cars.iter().map(|&z| f.prefs[z as usize - 1] - lo).collect();
            Factor { cars, offset: lo, f: ParkingFn { n: prefs.len() as u32, c: 1, prefs } }
        })
        .collect()
}

/// Splits a parking function (c = 1) into prime factors at every `i < n`
/// with `|B_1| + ... + |B_i| = i`.
pub fn prime_decompose(f: &ParkingFn) -> Result<Vec<Factor>> {
    if f.c != 1 {
        return Err(Error::InvalidParameter("prime decomposition needs c = 1".into()));
    }
    f.require_valid()?;
    let mut cuts = vec![0];
    let mut sum = 0;
    for (i, b) in f.block_sizes().iter().enumerate().take(f.n.saturating_sub(1) as usize) {
        sum += b;
        if sum == i as u32 + 1 {
            cuts.push(sum);
        }
    }
    cuts.push(f.n);
    let bounds: Vec<(u32, u32)> = cuts.windows(2).map(|w| (w[0], w[1])).collect();
    Ok(cut(f, &bounds))
}

/// Splits a c-parking function after each of its `c` empty spaces into `c`
/// ordinary parking functions, some possibly empty.
pub fn split_c_parking(f: &ParkingFn) -> Result<Vec<Factor>> {
    f.require_valid()?;
    let ParkOutcome::Parked { empty, .. } = park(f) else {
        unreachable!("valid functions park");
    };
    let mut lo = 0;
    let mut bounds = Vec::new();
    for e in empty {
        bounds.push((lo, e - 1));
        lo = e;
    }
    Ok(cut(f, &bounds))
}

/// Inverse of [`prime_decompose`] and [`split_c_parking`] with `c` = number of
/// factors that each leave their final space empty.
pub fn concatenate(factors: &[Factor], c: u32) -> Result<ParkingFn> {
    let n: usize = factors.iter().map(|p| p.cars.len()).sum();
    let mut prefs = vec![0; n];
    for p in factors {
        for (&z, &q) in p.cars.iter().zip(&p.f.prefs) {
            let slot = prefs
                .get_mut(z as usize - 1)
                .ok_or_else(|| Error::InvalidStructure(format!("car {z} outside 1..={n}")))?;
            *slot = q + p.offset;
        }
    }
    ParkingFn::new(c, prefs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::int;
    use crate::closedform::p_of;
    use proptest::prelude::*;

    fn pf(c: u32, prefs: &[u32]) -> ParkingFn {
        ParkingFn::new(c, prefs.to_vec()).unwrap()
    }

    fn u() -> MultiPoly {
        Var::U.into()
    }

    #[test]
    fn park_examples() {
        assert_eq!(
            park(&pf(1, &[1, 1])),
            ParkOutcome::Parked { assignment: vec![1, 2], lucky: vec![1], empty: vec![3] }
        );
        assert_eq!(park(&pf(1, &[2, 2])), ParkOutcome::Failed { car: 2 });
        assert_eq!(park(&pf(1, &[1])).lucky_count(), Some(1));
        let order = park_in_order(&pf(1, &[2, 1, 1]), &[3, 2, 1]).unwrap();
        assert_eq!(order, ParkOutcome::Parked { assignment: vec![3, 2, 1], lucky: vec![3], empty: vec![4] });
        assert!(park_in_order(&pf(1, &[1, 1]), &[1, 1]).is_err());
    }

    #[test]
    fn literals() {
        let f: ParkingFn = "n=3 c=1 prefs=1,1,2".parse().unwrap();
        assert_eq!(f, pf(1, &[1, 1, 2]));
        assert_eq!(f.to_string(), "n=3 c=1 prefs=1,1,2");
        assert_eq!("prefs=1,2".parse::<ParkingFn>().unwrap(), pf(1, &[1, 2]));
        assert!("n=2 c=1 prefs=1".parse::<ParkingFn>().is_err());
        assert!("n=1 c=1 prefs=3".parse::<ParkingFn>().is_err());
        assert!("n=1 x=1 prefs=1".parse::<ParkingFn>().is_err());
    }

    #[test]
    fn counts() {
        let two: Vec<Vec<u32>> = enumerate_parking(2, 1).unwrap().map(|f| f.prefs).collect();
        assert_eq!(two, vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(enumerate_parking(2, 2).unwrap().count(), 8);
        assert_eq!(enumerate_parking(1, 1).unwrap().count(), 1);
        for c in 1..=3u64 {
            for n in 1..=5u32 {
                let expect = c * (n as u64 + c).pow(n - 1);
                assert_eq!(enumerate_parking(n, c as u32).unwrap().count() as u64, expect);
            }
        }
        assert!(enumerate_parking(12, 3).is_err());
        assert_eq!(preference_maps(2, 1).unwrap().count(), 9);
        assert_eq!(preference_maps(0, 1).unwrap().count(), 1);
    }

    #[test]
    fn lucky_examples() {
        assert_eq!(lucky_poly(2, 1).unwrap().to_string(), "2*u^2 + u");
        assert_eq!(lucky_poly(1, 1).unwrap(), u());
        let one = MultiPoly::one();
        for (n, c) in [(4, 1), (4, 2), (3, 3)] {
            assert_eq!(lucky_poly(n, c).unwrap(), p_of(n, &one, &u(), &u().scale(&int(c as i64))));
        }
    }

    #[test]
    fn prime_examples() {
        assert_eq!(prime_decompose(&pf(1, &[1, 1])).unwrap().len(), 1);
        let two = prime_decompose(&pf(1, &[1, 2])).unwrap();
        assert_eq!(two.len(), 2);
        assert!(two.iter().all(|p| p.f == pf(1, &[1])));
        let parts = prime_decompose(&pf(1, &[3, 1, 1, 3])).unwrap();
        assert_eq!(parts.iter().map(|p| p.cars.clone()).collect::<Vec<_>>(), vec![vec![2, 3], vec![1, 4]]);
        assert_eq!(parts.iter().map(|p| p.offset).collect::<Vec<_>>(), vec![0, 2]);
        assert!(parts.iter().all(|p| p.f == pf(1, &[1, 1])));
        assert!(prime_decompose(&pf(1, &[2, 2])).is_err());
        assert_eq!(prime_lucky_poly(2).unwrap(), u());
        assert_eq!(prime_lucky_poly(1).unwrap(), u());
        let one = MultiPoly::one();
        assert_eq!(prime_lucky_poly(5).unwrap(), -p_of(5, &one, &u(), &(-&u())));
    }

    #[test]
    fn decompositions_round_trip() {
        for n in 1..=5 {
            for f in enumerate_parking(n, 1).unwrap() {
                let parts = prime_decompose(&f).unwrap();
                assert!(parts.iter().all(|p| p.f.is_prime()), "{f}");
                assert_eq!(parts.len() == 1, f.is_prime());
                assert_eq!(concatenate(&parts, 1).unwrap(), f);
                let total: u32 = parts.iter().map(|p| lucky(&p.f).unwrap()).sum();
                assert_eq!(total, lucky(&f).unwrap());
            }
            for c in 2..=3 {
                for f in enumerate_parking(n, c).unwrap() {
                    let parts = split_c_parking(&f).unwrap();
                    assert_eq!(parts.len() as u32, c);
                    assert!(parts.iter().all(|p| p.f.is_valid()));
                    assert_eq!(concatenate(&parts, c).unwrap(), f);
                    let total: u32 = parts.iter().map(|p| lucky(&p.f).unwrap()).sum();
                    assert_eq!(total, lucky(&f).unwrap());
                }
            }
        }
    }

    fn prefs_strategy() -> impl Strategy<Value = (u32, Vec<u32>)> {
        (1u32..=3, 1usize..=6).prop_flat_map(|(c, n)| {
            (Just(c), prop::collection::vec(1..=n as u32 + c, n))
        })
    }

    proptest! {
        #[test]
        fn block_criterion_matches_simulation((c, prefs) in prefs_strategy()) {
            let f = ParkingFn::new(c, prefs).unwrap();
            prop_assert_eq!(f.is_valid(), park(&f).is_parked());
        }

        #[test]
        fn parkability_ignores_arrival_order(
            (c, prefs) in prefs_strategy(),
            seed in any::<u64>(),
        ) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let f = ParkingFn::new(c, prefs).unwrap();
            let mut order: Vec<u32> = (1..=f.n()).collect();
            order.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let out = park_in_order(&f, &order).unwrap();
            prop_assert_eq!(out.is_parked(), f.is_valid());
            if let ParkOutcome::Parked { empty, .. } = out {
                prop_assert_eq!(empty.len() as u32, c);
                prop_assert_eq!(*empty.last().unwrap(), f.n() + c);
            }
        }
    }
}
