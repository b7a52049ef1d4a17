use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{factorial, int, Rational};
use crate::{Check, Error, Result};

/// Power series in `x` known exactly through `x^order`.
///
/// Coefficients are ordinary; [`TruncatedSeries::egf_coeff`] recovers the
/// exponential ones (`coeff(n) * n!`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    /// Series with the given leading coefficients; `order = coeffs.len() - 1`.
    /// An empty vector is read as the zero series of order 0.
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(Rational::zero());
        }
        TruncatedSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rational::one();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &Rational {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `n! * [x^n]`
    pub fn egf_coeff(&self, n: usize) -> Rational {
        &self.coeffs[n] * Rational::from_integer(factorial(n as u32))
    }

    pub fn egf_coeffs(&self) -> Vec<Rational> {
        (0..=self.order()).map(|n| self.egf_coeff(n)).collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        let order = order.min(self.order());
        TruncatedSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplication by `x`.
    pub fn shift(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(Rational::zero());
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        TruncatedSeries { coeffs }
    }

    /// `d/dx`; the result is exact through `order - 1`.
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::zero(0);
        }
        TruncatedSeries {
            coeffs: (1..=self.order())
                .map(|n| &self.coeffs[n] * int(n as i64))
                .collect(),
        }
    }

    fn require_constant(&self, op: &'static str, expected: &'static str, ok: bool) -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::ConstantTerm {
                op,
                expected,
                found: self.coeffs[0].to_string(),
            })
        }
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        self.require_constant("recip", "nonzero", !c0.is_zero())?;
        let inv0 = c0.recip();
        let mut out: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let s: Rational = (1..=n).map(|k| &self.coeffs[k] * &out[n - k]).sum();
            out.push(-s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `exp(s)` for `s(0) = 0`, via `n e_n = sum_k k s_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self> {
        self.require_constant("exp", "0", self.coeffs[0].is_zero())?;
        let mut e: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        e.push(Rational::one());
        for n in 1..=self.order() {
            let s: Rational = (1..=n)
                .map(|k| &self.coeffs[k] * &e[n - k] * int(k as i64))
                .sum();
            e.push(s / int(n as i64));
        }
        Ok(TruncatedSeries { coeffs: e })
    }

    /// `log(s)` for `s(0) = 1`, via `l' = s' / s`.
    pub fn log(&self) -> Result<Self> {
        self.require_constant("log", "1", self.coeffs[0].is_one())?;
        let mut l: Vec<Rational> = Vec::with_capacity(self.coeffs.len());
        l.push(Rational::zero());
        for n in 1..=self.order() {
            let s: Rational = (1..n)
                .map(|k| &l[k] * &self.coeffs[n - k] * int(k as i64))
                .sum();
            l.push(&self.coeffs[n] - s / int(n as i64));
        }
        Ok(TruncatedSeries { coeffs: l })
    }

    /// `s^r = exp(r log s)` for rational `r` and `s(0) = 1`.
    pub fn pow(&self, r: &Rational) -> Result<Self> {
        self.require_constant("pow", "1", self.coeffs[0].is_one())?;
        self.log()?.scale(r).exp()
    }

    /// Non-negative integer power by repeated squaring; no constant-term
    /// restriction.
    pub fn powi(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.order());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl<'a> Add<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=m).map(|n| &self.coeffs[n] + &rhs.coeffs[n]).collect(),
        }
    }
}

impl<'a> Sub<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=m).map(|n| &self.coeffs[n] - &rhs.coeffs[n]).collect(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl<'a> Mul<&'a TruncatedSeries> for &'a TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..=m)
                .map(|n| (0..=n).map(|k| &self.coeffs[k] * &rhs.coeffs[n - k]).sum())
                .collect(),
        }
    }
}

/// Comma-separated exact coefficients, `1, 1, 3/2, ...`.
impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// The built-in functional equations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FixedPoint {
    /// `A = exp(x A)`, labeled rooted forests.
    Forests,
    /// `D = 1 + x D^k`, k-ary trees.
    Kary(u32),
    /// `E = x / (1 - E)`, ordered trees.
    Ordered,
    /// `F = 1 / (1 - x F^k)`, k-colored ordered forests.
    KColor(u32),
}

impl FixedPoint {
    fn step(self, y: &TruncatedSeries) -> Result<TruncatedSeries> {
        let m = y.order();
        Ok(match self {
            FixedPoint::Forests => y.shift().exp()?,
            FixedPoint::Kary(k) => &TruncatedSeries::one(m) + &y.powi(k).shift(),
            FixedPoint::Ordered => (&TruncatedSeries::one(m) - y).recip()?.shift(),
            FixedPoint::KColor(k) => (&TruncatedSeries::one(m) - &y.powi(k).shift()).recip()?,
        })
    }
}

/// Solves a defining equation by iteration. Each pass fixes at least one more
/// coefficient, so `order + 1` passes suffice; one extra pass confirms the
/// fixed point.
pub fn solve_fixedpoint(kind: FixedPoint, order: usize) -> Result<TruncatedSeries> {
    if let FixedPoint::Kary(0) | FixedPoint::KColor(0) = kind {
        return Err(Error::InvalidParameter("k must be at least 1".into()));
    }
    let mut y = TruncatedSeries::zero(order);
    for _ in 0..=order {
        y = kind.step(&y)?;
    }
    if kind.step(&y)? != y {
        return Err(Error::NotContracting(format!("{kind:?}")));
    }
    Ok(y)
}

/// Power `g^r` of a series with `g_0 = 1`, extended one coefficient at a time:
/// `n h_n = sum_{k=1}^n (r k - (n - k)) g_k h_{n-k}`.
struct IncrementalPower {
    r: Rational,
    h: Vec<Rational>,
}

impl IncrementalPower {
    fn new(r: Rational) -> Self {
        IncrementalPower {
            r,
            h: vec![Rational::one()],
        }
    }

    /// Extends to `h_n` where `n = g.len() - 1`; needs `h` through `n - 1`.
    fn extend(&mut self, g: &[Rational]) {
        let n = g.len() - 1;
        debug_assert_eq!(self.h.len(), n);
        let s: Rational = (1..=n)
            .map(|k| {
                let w = &self.r * int(k as i64) - int((n - k) as i64);
                w * &g[k] * &self.h[n - k]
            })
            .sum();
        self.h.push(s / int(n as i64));
    }
}

/// The solution of `g' = u g^(b+1) + a x g^b g'` with `g(0) = 1`, through
/// `x^order`. Coefficient `n + 1` comes from the order-`n` truncation of the
/// right-hand side, so no division by parameter expressions occurs.
pub fn solve_ode(a: &Rational, b: &Rational, u: &Rational, order: usize) -> TruncatedSeries {
    let mut g = vec![Rational::one()];
    let mut gb = IncrementalPower::new(b.clone());
    let mut gb1 = IncrementalPower::new(b + Rational::one());
    for n in 0..order {
        if n > 0 {
            gb.extend(&g);
            gb1.extend(&g);
        }
        // [g^b g']_{n-1}
        let tail: Rational = (0..n)
            .map(|j| &gb.h[j] * int((n - j) as i64) * &g[n - j])
            .sum();
        let next = (u * &gb1.h[n] + a * tail) / int(n as i64 + 1);
        g.push(next);
    }
    TruncatedSeries::new(g)
}

/// The identities satisfied by `H`, where `H^c` is the exponential generating
/// function of `P_n(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HIdentity {
    /// `H^(b-a) = 1 + (b-a) x H^b`; requires `a != b`.
    PowerForm,
    /// `G = 1 + (b-a) x G^(b/(b-a))` with `G = H^(b-a)`; requires `a != b`.
    Generating,
    /// `H' = H^(a+1) + b x H^a H'`
    Differential,
    /// `H^b (1 + a x H^a) = H^a (1 + b x H^b)`
    Symmetric,
}

impl HIdentity {
    pub const ALL: [HIdentity; 4] = [
        HIdentity::PowerForm,
        HIdentity::Generating,
        HIdentity::Differential,
        HIdentity::Symmetric,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HIdentity::PowerForm => "H^(b-a) = 1 + (b-a)xH^b",
            HIdentity::Generating => "G = 1 + (b-a)xG^(b/(b-a))",
            HIdentity::Differential => "H' = H^(a+1) + bxH^aH'",
            HIdentity::Symmetric => "H^b(1 + axH^a) = H^a(1 + bxH^b)",
        }
    }

    fn needs_distinct(self) -> bool {
        matches!(self, HIdentity::PowerForm | HIdentity::Generating)
    }
}

/// Builds `H = solve_ode(a, b, 1)` and checks each requested identity exactly
/// through `order` (`order - 1` for the differential form).
pub fn verify_h_identities(
    a: &Rational,
    b: &Rational,
    order: usize,
    which: &[HIdentity],
) -> Result<Vec<Check>> {
    if a == b {
        if let Some(id) = which.iter().find(|id| id.needs_distinct()) {
            return Err(Error::InvalidParameter(format!(
                "`{}` needs a != b: its derivation raises to the power 1/(b-a); \
                 only the differential form holds at a = b",
                id.name()
            )));
        }
    }
    let h = solve_ode(a, b, &Rational::one(), order);
    let one = TruncatedSeries::one(order);
    let d = b - a;
    let mut out = Vec::new();
    for &id in which {
        let (lhs, rhs) = match id {
            HIdentity::PowerForm => {
                let lhs = h.pow(&d)?;
                let rhs = &one + &h.pow(b)?.shift().scale(&d);
                (lhs, rhs)
            }
            HIdentity::Generating => {
                let g = h.pow(&d)?;
                let rhs = &one + &g.pow(&(b / &d))?.shift().scale(&d);
                (g, rhs)
            }
            HIdentity::Differential => {
                let ha = h.pow(a)?;
                let dh = h.derivative();
                let rhs = &(&ha * &h) + &(&ha * &dh).shift().scale(b);
                let m = order.saturating_sub(1);
                (dh.truncate(m), rhs.truncate(m))
            }
            HIdentity::Symmetric => {
                let ha = h.pow(a)?;
                let hb = h.pow(b)?;
                let lhs = &hb * &(&one + &ha.shift().scale(a));
                let rhs = &ha * &(&one + &hb.shift().scale(b));
                (lhs, rhs)
            }
        };
        out.push(Check::new(id.name(), lhs, rhs));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;
    use proptest::prelude::*;

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn exp_log_round_trip() {
        let s = TruncatedSeries::new(vec![int(1), rat(2, 3), int(-1), rat(5, 7), int(0), int(3)]);
        assert_eq!(s.log().unwrap().exp().unwrap(), s);
    }

    #[test]
    fn square_root_of_one_plus_x() {
        let s = TruncatedSeries::new(ints(&[1, 1, 0, 0, 0, 0, 0, 0]));
        let r = s.pow(&rat(1, 2)).unwrap();
        assert_eq!(&r * &r, s);
        assert_eq!(*r.coeff(2), rat(-1, 8));
    }

    #[test]
    fn preconditions_name_constant_term() {
        let s = TruncatedSeries::new(ints(&[2, 1]));
        let err = s.log().unwrap_err();
        assert_eq!(
            err,
            Error::ConstantTerm { op: "log", expected: "1", found: "2".into() }
        );
        assert!(s.exp().is_err());
        assert!(s.pow(&rat(1, 2)).is_err());
        assert!(TruncatedSeries::zero(3).recip().is_err());
    }

    #[test]
    fn forest_fixed_point() {
        let a = solve_fixedpoint(FixedPoint::Forests, 4).unwrap();
        assert_eq!(a.egf_coeffs(), ints(&[1, 1, 3, 16, 125]));
        // c (n + c)^{n-1} at c = 2, n = 3
        let a2 = a.pow(&int(2)).unwrap();
        assert_eq!(a2.egf_coeff(3), int(50));
    }

    #[test]
    fn kary_and_ordered_fixed_points() {
        let d = solve_fixedpoint(FixedPoint::Kary(2), 4).unwrap();
        assert_eq!(d.coeffs(), ints(&[1, 1, 2, 5, 14]).as_slice());
        let e = solve_fixedpoint(FixedPoint::Ordered, 4).unwrap();
        assert_eq!(e.coeffs(), ints(&[0, 1, 1, 2, 5]).as_slice());
        // F = 1/(1 - xF) coincides with binary trees
        let f = solve_fixedpoint(FixedPoint::KColor(1), 6).unwrap();
        assert_eq!(f, solve_fixedpoint(FixedPoint::Kary(2), 6).unwrap());
        assert!(solve_fixedpoint(FixedPoint::Kary(0), 3).is_err());
    }

    #[test]
    fn fixed_points_satisfy_their_equations() {
        let m = 12;
        let x = TruncatedSeries::x(m);
        let one = TruncatedSeries::one(m);
        let a = solve_fixedpoint(FixedPoint::Forests, m).unwrap();
        assert_eq!((&x * &a).exp().unwrap(), a);
        for k in 1..=3 {
            let d = solve_fixedpoint(FixedPoint::Kary(k), m).unwrap();
            assert_eq!(&one + &(&x * &d.powi(k)), d);
            let f = solve_fixedpoint(FixedPoint::KColor(k), m).unwrap();
            assert_eq!(&f * &(&one - &(&x * &f.powi(k))), one);
        }
        let e = solve_fixedpoint(FixedPoint::Ordered, m).unwrap();
        assert_eq!(&e * &(&one - &e), x);
    }

    #[test]
    fn ode_examples() {
        let g = solve_ode(&int(1), &int(1), &int(1), 4);
        assert_eq!(g.egf_coeffs(), ints(&[1, 1, 3, 16, 125]));
        let g = solve_ode(&int(3), &rat(1, 2), &int(0), 6);
        assert_eq!(g, TruncatedSeries::one(6));
        let g = solve_ode(&int(2), &int(1), &int(1), 3);
        assert_eq!(g.egf_coeff(3), int(30));
    }

    #[test]
    fn h_identity_examples() {
        let checks = verify_h_identities(&int(1), &int(2), 15, &HIdentity::ALL).unwrap();
        assert_eq!(checks.len(), 4);
        assert!(checks.iter().all(Check::passed), "{checks:?}");

        let checks = verify_h_identities(&int(3), &rat(1, 2), 12, &HIdentity::ALL).unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:?}");

        // a = 0, b = 1: H = 1/(1 - x)
        let h = solve_ode(&int(0), &int(1), &int(1), 8);
        assert_eq!(h, TruncatedSeries::new(ints(&[1; 9])));
        let checks = verify_h_identities(&int(0), &int(1), 8, &HIdentity::ALL).unwrap();
        assert!(checks.iter().all(Check::passed));
    }

    #[test]
    fn h_identity_degenerate() {
        let err = verify_h_identities(&int(2), &int(2), 8, &[HIdentity::PowerForm]);
        assert!(matches!(err, Err(Error::InvalidParameter(_))));
        let ok = verify_h_identities(&int(2), &int(2), 8, &[HIdentity::Differential]).unwrap();
        assert!(ok[0].passed());
    }

    fn arb_rat() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=9).prop_map(|(n, d)| rat(n, d))
    }

    fn arb_unit_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec(arb_rat(), 6).prop_map(|mut v| {
            v.insert(0, int(1));
            TruncatedSeries::new(v)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn pow_composes(f in arb_unit_series(), r in arb_rat(), s in arb_rat()) {
            let lhs = f.pow(&r).unwrap().pow(&s).unwrap();
            let rhs = f.pow(&(&r * &s)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn ode_solution_satisfies_equation(a in arb_rat(), b in arb_rat(), u in arb_rat()) {
            let m = 10;
            let g = solve_ode(&a, &b, &u, m);
            let dg = g.derivative();
            let gb = g.pow(&b).unwrap();
            let rhs = &(&gb * &g).scale(&u) + &(&gb * &dg).shift().scale(&a);
            let residual = &dg - &rhs;
            prop_assert_eq!(residual, TruncatedSeries::zero(m - 1));
        }
    }
}
