use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::Rational;
use crate::{Error, Result};

pub const NVARS: usize = 7;

/// The fixed, ordered variable list every polynomial lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Var {
    A,
    B,
    C,
    U,
    V,
    W,
    Alpha,
}

impl Var {
    pub const ALL: [Var; NVARS] = [Var::A, Var::B, Var::C, Var::U, Var::V, Var::W, Var::Alpha];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::C => "c",
            Var::U => "u",
            Var::V => "v",
            Var::W => "w",
            Var::Alpha => "alpha",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.into_iter().find(|v| v.name() == s)
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub type Exponents = [u32; NVARS];

/// Variable bindings for evaluation.
pub type Point = BTreeMap<Var, Rational>;

/// Sparse polynomial over [`Var::ALL`] with exact rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial([0; NVARS], c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(super::int(c))
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.index()] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exps: Exponents, coeff: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(exps, coeff);
        p
    }

    /// Builds from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms(terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, exps: Exponents, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Highest power of `v` occurring, or `None` for the zero polynomial.
    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|e| e[v.index()]).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// True if every monomial has total degree `d`.
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// Exact value at `point`; every variable that occurs must be bound.
    pub fn eval(&self, point: &Point) -> Result<Rational> {
        let mut total = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for v in Var::ALL {
                let k = e[v.index()];
                if k == 0 {
                    continue;
                }
                let x = point.get(&v).ok_or(Error::UnboundVariable(v.name()))?;
                t *= super::pow(x, k);
            }
            total += t;
        }
        Ok(total)
    }

    /// The coefficient of `v^power`, as a polynomial free of `v`.
    pub fn coeff(&self, v: Var, power: u32) -> Self {
        let i = v.index();
        MultiPoly {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e[i] == power)
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i] = 0;
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Exact division by `v`; fails if some monomial is free of `v`.
    pub fn div_var(&self, v: Var) -> Result<Self> {
        let i = v.index();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                return Err(Error::InvalidParameter(format!(
                    "polynomial is not divisible by {v}"
                )));
            }
            let mut e = *e;
            e[i] -= 1;
            terms.insert(e, c.clone());
        }
        Ok(MultiPoly { terms })
    }

    /// Simultaneously replaces each listed variable by a polynomial.
    pub fn substitute(&self, images: &[(Var, MultiPoly)]) -> Self {
        let mut img: [Option<&MultiPoly>; NVARS] = Default::default();
        for (v, p) in images {
            img[v.index()] = Some(p);
        }
        let mut cache: HashMap<(usize, u32), MultiPoly> = HashMap::new();
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            let mut kept = [0; NVARS];
            let mut t = MultiPoly::one();
            for (i, &k) in e.iter().enumerate() {
                match img[i] {
                    Some(p) if k > 0 => {
                        let pk = cache.entry((i, k)).or_insert_with(|| p.pow(k));
                        t = &t * &*pk;
                    }
                    _ => kept[i] = k,
                }
            }
            let t = &t * &MultiPoly::monomial(kept, c.clone());
            out = out + t;
        }
        out
    }

    /// Exchanges two variables in every monomial.
    pub fn swap(&self, x: Var, y: Var) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e.swap(x.index(), y.index());
                    (e, c.clone())
                })
                .collect(),
        }
    }
}

impl From<Var> for MultiPoly {
    fn from(v: Var) -> Self {
        MultiPoly::var(v)
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -self.clone()
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let mut e = *e1;
                for i in 0..NVARS {
                    e[i] += e2[i];
                }
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, e: &Exponents) -> fmt::Result {
    let mut first = true;
    for v in Var::ALL {
        let k = e[v.index()];
        if k == 0 {
            continue;
        }
        if !first {
            f.write_str("*")?;
        }
        first = false;
        match k {
            1 => write!(f, "{v}")?,
            _ => write!(f, "{v}^{k}")?,
        }
    }
    Ok(())
}

/// Canonical rendering, e.g. `a*c + b*c + c^2`. Monomials appear in
/// decreasing lexicographic order of exponent vectors over `a, b, c, u, v, w,
/// alpha`; the zero polynomial renders as `0`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            let constant = e.iter().all(|&k| k == 0);
            if constant {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write_monomial(f, e)?;
            } else {
                write!(f, "{mag}*")?;
                write_monomial(f, e)?;
            }
        }
        Ok(())
    }
}

/// Counts monomials with machine integers while enumerating, then converts
/// to a [`MultiPoly`] once.
#[derive(Debug, Default, Clone)]
pub struct Tally {
    counts: HashMap<Exponents, u64>,
}

impl Tally {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, e: Exponents) {
        *self.counts.entry(e).or_insert(0) += 1;
    }

    /// Records `x1^e1 * x2^e2 * ...` for the listed variables.
    pub fn add_vars(&mut self, powers: &[(Var, u32)]) {
        let mut e = [0; NVARS];
        for &(v, k) in powers {
            e[v.index()] += k;
        }
        self.add(e);
    }

    pub fn merge(&mut self, other: Tally) {
        for (e, n) in other.counts {
            *self.counts.entry(e).or_insert(0) += n;
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn into_poly(self) -> MultiPoly {
        MultiPoly::from_terms(
            self.counts
                .into_iter()
                .map(|(e, n)| (e, Rational::from_integer(BigInt::from(n)))),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};
    use proptest::prelude::*;

    fn a() -> MultiPoly {
        Var::A.into()
    }
    fn b() -> MultiPoly {
        Var::B.into()
    }
    fn c() -> MultiPoly {
        Var::C.into()
    }

    #[test]
    fn add_examples() {
        assert_eq!((&a() + &b()).to_string(), "a + b");
        let c2 = c().pow(2);
        assert!((&c2 + &(-&c2)).is_zero());
        assert_eq!((&c2 + &(-&c2)).to_string(), "0");
        let lhs = &b() * &c();
        let rhs = &(&a() * &c()) + &c2;
        assert_eq!((&lhs + &rhs).to_string(), "a*c + b*c + c^2");
    }

    #[test]
    fn mul_examples() {
        let p = &c() * &(&(&a() + &b()) + &c());
        assert_eq!(p.to_string(), "a*c + b*c + c^2");
        assert_eq!(&p * &MultiPoly::one(), p);
        let two = MultiPoly::int(2);
        let q = &(&a() + &(&two * &b())) * &(&(&two * &a()) + &b());
        assert_eq!(q.to_string(), "2*a^2 + 5*a*b + 2*b^2");
    }

    #[test]
    fn eval_examples() {
        let p = &c() * &(&(&a() + &b()) + &c());
        let ones: Point = [(Var::A, int(1)), (Var::B, int(1)), (Var::C, int(1))].into();
        assert_eq!(p.eval(&ones).unwrap(), int(3));
        let two = MultiPoly::int(2);
        let q = &(&a() + &(&two * &b())) * &(&(&two * &a()) + &b());
        assert_eq!(q.eval(&ones).unwrap(), int(9));
        let al = MultiPoly::var(Var::Alpha);
        let pt: Point = [(Var::Alpha, rat(1, 2))].into();
        assert_eq!(al.eval(&pt).unwrap(), rat(1, 2));
        assert_eq!(
            al.eval(&Point::new()),
            Err(Error::UnboundVariable("alpha"))
        );
    }

    #[test]
    fn coeff_examples() {
        let p = &c() * &(&(&a() + &b()) + &c());
        assert_eq!(p.coeff(Var::C, 1).to_string(), "a + b");
        assert!(p.coeff(Var::C, 3).is_zero());
        let u = MultiPoly::var(Var::U);
        let q = &u + &(&MultiPoly::int(2) * &u.pow(2));
        assert!(q.coeff(Var::U, 0).is_zero());
    }

    #[test]
    fn rendering_signs_and_fractions() {
        let p = &(&a() - &b().scale(&rat(3, 2))) - &MultiPoly::int(1);
        assert_eq!(p.to_string(), "a - 3/2*b - 1");
        assert_eq!((-&a()).to_string(), "-a");
        let al = MultiPoly::var(Var::Alpha);
        assert_eq!((&al * &c()).pow(2).to_string(), "c^2*alpha^2");
    }

    #[test]
    fn substitute_and_swap() {
        let p = &c() * &(&(&a() + &b()) + &c());
        let q = p.substitute(&[(Var::C, &b() + &c())]);
        let expect = &(&b() + &c()) * &(&(&a() + &(&b() * &MultiPoly::int(2))) + &c());
        assert_eq!(q, expect);
        assert_eq!(p.swap(Var::A, Var::B), p);
        assert_eq!(p.div_var(Var::C).unwrap().to_string(), "a + b + c");
        assert!(p.div_var(Var::A).is_err());
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec(
            (prop::array::uniform3(0u32..3), -5i64..=5, 1i64..=3),
            0..5,
        )
        .prop_map(|ts| {
            MultiPoly::from_terms(ts.into_iter().map(|(e3, n, d)| {
                let mut e = [0; NVARS];
                e[0] = e3[0];
                e[1] = e3[1];
                e[3] = e3[2];
                (e, rat(n, d))
            }))
        })
    }

    fn arb_point() -> impl Strategy<Value = Point> {
        prop::array::uniform3((-9i64..=9, 1i64..=9)).prop_map(|xs| {
            [Var::A, Var::B, Var::U]
                .into_iter()
                .zip(xs)
                .map(|(v, (n, d))| (v, rat(n, d)))
                .collect()
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
            prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p + &q, &q + &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            prop_assert!((&p - &p).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(p in arb_poly(), q in arb_poly(), pt in arb_point()) {
            let lhs = (&p * &q).eval(&pt).unwrap();
            let rhs = p.eval(&pt).unwrap() * q.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = (&p + &q).eval(&pt).unwrap();
            let rhs = p.eval(&pt).unwrap() + q.eval(&pt).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
