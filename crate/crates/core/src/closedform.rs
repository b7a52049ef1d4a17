//! `P_n(a,b,c)`, `Q_n(a,b)` and their closed-form specializations.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{binomial, factorial, int, pow, MultiPoly, Rational, Var};
use crate::{Check, Error, Result};

/// `c * prod_{i=1}^{n-1} (i a + (n-i) b + c)` with polynomial arguments.
/// `n = 0` gives the constant 1.
pub fn p_of(n: u32, a: &MultiPoly, b: &MultiPoly, c: &MultiPoly) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    (1..n).fold(c.clone(), |acc, i| {
        let factor = &(&a.scale(&int(i as i64)) + &b.scale(&int((n - i) as i64))) + c;
        &acc * &factor
    })
}

/// `P_n(a, b, c)` in the variables `a, b, c`. `P_0 = 1`.
pub fn p_poly(n: u32) -> MultiPoly {
    p_of(n, &Var::A.into(), &Var::B.into(), &Var::C.into())
}

/// `Q_n(a, b)`, the coefficient of `c` in `P_n`.
pub fn q_poly(n: u32) -> MultiPoly {
    p_poly(n).coeff(Var::C, 1)
}

/// `P_n` evaluated directly from the product formula.
pub fn p_value(n: u32, a: &Rational, b: &Rational, c: &Rational) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    (1..n).fold(c.clone(), |acc, i| {
        acc * (a * int(i as i64) + b * int((n - i) as i64) + c)
    })
}

/// `Q_n(a, b) = prod_{i=1}^{n-1} (i a + (n-i) b)`.
pub fn q_value(n: u32, a: &Rational, b: &Rational) -> Rational {
    (1..n).fold(Rational::one(), |acc, i| {
        acc * (a * int(i as i64) + b * int((n - i) as i64))
    })
}

fn fact(n: u32) -> Rational {
    Rational::from_integer(factorial(n))
}

/// `c/(kn+c) * binom(kn+c, n) * n! = P_n(k-1, k, c)`.
pub fn check_kary_specialization(n: u32, k: &Rational, c: &Rational) -> Result<Check> {
    let top = k * int(n as i64) + c;
    if top.is_zero() {
        return Err(Error::InvalidParameter(format!(
            "kn + c = 0 for n = {n}, k = {k}, c = {c}"
        )));
    }
    let lhs = c / &top * binomial(&top, n) * fact(n);
    let rhs = p_value(n, &(k - Rational::one()), k, c);
    Ok(Check::new(
        format!("k-ary specialization n={n} k={k} c={c}"),
        lhs,
        rhs,
    ))
}

/// `P_n(a,b,c)/n! = (b-a)^n * cbar/(bbar n + cbar) * binom(bbar n + cbar, n)`
/// with `bbar = b/(b-a)`, `cbar = c/(b-a)`.
pub fn check_rescaling(n: u32, a: &Rational, b: &Rational, c: &Rational) -> Result<Check> {
    if a == b {
        return Err(Error::InvalidParameter(
            "rescaling needs a != b (bbar = b/(b-a))".into(),
        ));
    }
    let d = b - a;
    let bbar = b / &d;
    let cbar = c / &d;
    let top = &bbar * int(n as i64) + &cbar;
    let lhs = p_value(n, a, b, c) / fact(n);
    let rhs = if top.is_zero() {
        // cbar/(top) * binom(top, n) = cbar * (top-1)...(top-n+1) / n!
        let tail = (1..n).fold(Rational::one(), |acc, i| acc * (&top - int(i as i64)));
        pow(&d, n) * &cbar * tail / fact(n)
    } else {
        pow(&d, n) * &cbar / &top * binomial(&top, n)
    };
    Ok(Check::new(
        format!("rescaling n={n} a={a} b={b} c={c}"),
        lhs,
        rhs,
    ))
}

/// `c (n + c)^(n-1)`, which equals `P_n(1, 1, c)`.
pub fn cayley_count(n: u32, c: &Rational) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    c * pow(&(c + int(n as i64)), n - 1)
}

/// `C_m = binom(2m, m) / (m + 1)`
pub fn catalan(m: u32) -> BigInt {
    let b = binomial(&int(2 * m as i64), m);
    (b / int(m as i64 + 1)).to_integer()
}

/// `P_n(1, 2, 2) / n! = C_{n+1}`.
pub fn catalan_check(n: u32) -> Check {
    let lhs = p_value(n, &int(1), &int(2), &int(2)) / fact(n);
    Check::new(format!("catalan n={n}"), lhs, catalan(n + 1))
}

/// `c (c+1) ... (c+n-1)` as a polynomial in `c`.
pub fn rising_c(n: u32) -> MultiPoly {
    let c: MultiPoly = Var::C.into();
    (0..n).fold(MultiPoly::one(), |acc, i| &acc * &(&c + &MultiPoly::int(i as i64)))
}

/// Symbolic checks on `P_n`: a/b symmetry, the `a = b = 1` reduction to
/// `c (n + c)^(n-1)` and `P_n(1,0,c) = P_n(0,1,c) = c (c+1) ... (c+n-1)`.
pub fn symbolic_checks(n: u32) -> Vec<Check> {
    let p = p_poly(n);
    let c: MultiPoly = Var::C.into();
    let one = MultiPoly::one();
    let zero = MultiPoly::zero();
    let at = |a: &MultiPoly, b: &MultiPoly| p.substitute(&[(Var::A, a.clone()), (Var::B, b.clone())]);
    let cayley = if n == 0 {
        MultiPoly::one()
    } else {
        &c * &(&c + &MultiPoly::int(n as i64)).pow(n - 1)
    };
    vec![
        Check::new(format!("P_{n} symmetric in a,b"), p.swap(Var::A, Var::B), &p),
        Check::new(format!("P_{n} homogeneous degree"), p.is_homogeneous(n), true),
        Check::new(format!("P_{n}(1,1,c) = c(n+c)^(n-1)"), at(&one, &one), cayley),
        Check::new(format!("P_{n}(1,0,c) rising factorial"), at(&one, &zero), rising_c(n)),
        Check::new(format!("P_{n}(0,1,c) rising factorial"), at(&zero, &one), rising_c(n)),
    ]
}

/// `P_n(ta, tb, tc) = t^n P_n(a, b, c)` at one numeric point.
pub fn homogeneity_check(n: u32, t: &Rational, a: &Rational, b: &Rational, c: &Rational) -> Check {
    Check::new(
        format!("homogeneity n={n} t={t}"),
        p_value(n, &(t * a), &(t * b), &(t * c)),
        pow(t, n) * p_value(n, a, b, c),
    )
}
