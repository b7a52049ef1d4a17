//! Runs the identity suites over parameter ranges and renders the results.

use std::collections::BTreeMap;
use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Duration;
#[cfg(not(target_arch = "wasm32"))]
use std::time::Instant;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::algebra::{
    binomial, int, rat, rational_points, solve_fixedpoint, solve_ode, verify_h_identities, FixedPoint,
    HIdentity, MultiPoly, Rational, Var,
};
use crate::closedform::{
    cayley_count, catalan, catalan_check, check_kary_specialization, check_rescaling, homogeneity_check, p_of,
    p_poly, q_poly, q_value, p_value, symbolic_checks,
};
use crate::{forests, kary, ordered, parking, Check, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Forests,
    Trees,
    Descents,
    Recurrence,
    Hooks,
    Kary,
    KaryDecomp,
    Postnikov,
    Ordered,
    Ksym,
    Parking,
    Prime,
    Series,
    Hform,
    Closedform,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::Forests,
        Suite::Trees,
        Suite::Descents,
        Suite::Recurrence,
        Suite::Hooks,
        Suite::Kary,
        Suite::KaryDecomp,
        Suite::Postnikov,
        Suite::Ordered,
        Suite::Ksym,
        Suite::Parking,
        Suite::Prime,
        Suite::Series,
        Suite::Hform,
        Suite::Closedform,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Forests => "forests",
            Suite::Trees => "trees",
            Suite::Descents => "descents",
            Suite::Recurrence => "recurrence",
            Suite::Hooks => "hooks",
            Suite::Kary => "kary",
            Suite::KaryDecomp => "kary-decomp",
            Suite::Postnikov => "postnikov",
            Suite::Ordered => "ordered",
            Suite::Ksym => "ksym",
            Suite::Parking => "parking",
            Suite::Prime => "prime",
            Suite::Series => "series",
            Suite::Hform => "hform",
            Suite::Closedform => "closedform",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// Overrides for a suite's default ranges. `None` keeps the default.
#[derive(Clone, Debug, Default)]
pub struct Ranges {
    pub n_max: Option<u32>,
    pub k: Option<u32>,
    pub c: Option<u32>,
    pub order: Option<usize>,
    pub points: Option<usize>,
}

impl Ranges {
    fn n(&self, default: u32) -> u32 {
        self.n_max.unwrap_or(default)
    }

    fn ks(&self, default: &[u32]) -> Vec<u32> {
        self.k.map_or_else(|| default.to_vec(), |k| vec![k])
    }

    fn cs(&self, default: &[u32]) -> Vec<u32> {
        self.c.map_or_else(|| default.to_vec(), |c| vec![c])
    }

    fn order(&self, default: usize) -> usize {
        self.order.unwrap_or(default)
    }

    fn points(&self, default: usize) -> usize {
        self.points.unwrap_or(default)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationRecord {
    pub suite: String,
    pub check: String,
    pub parameters: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1000.0)
}

impl VerificationRecord {
    pub fn parameter_string(&self) -> String {
        self.parameters.iter().map(|(k, v)| format!("{k}={v}")).join(" ")
    }
}

/// Where canonical renderings disagree: the first differing coefficient of a
/// series, or the terms present on only one side of a polynomial.
fn difference(lhs: &str, rhs: &str) -> String {
    if lhs.contains(", ") || rhs.contains(", ") {
        let (l, r): (Vec<&str>, Vec<&str>) = (lhs.split(", ").collect(), rhs.split(", ").collect());
        return match l.iter().zip(&r).position(|(x, y)| x != y) {
            Some(i) => format!("coefficient {i}: {} vs {}", l[i], r[i]),
            None => format!("lengths differ: {} vs {}", l.len(), r.len()),
        };
    }
    let terms = |s: &str| -> Vec<String> {
        let mut out = Vec::new();
        let mut cur = String::new();
        for tok in s.split(' ') {
            match tok {
                "+" | "-" => {
                    out.push(std::mem::take(&mut cur));
                    if tok == "-" {
                        cur.push('-');
                    }
                }
                _ => cur.push_str(tok),
            }
        }
        out.push(cur);
        out
    };
    let (l, r) = (terms(lhs), terms(rhs));
    let only = |a: &[String], b: &[String]| a.iter().filter(|t| !b.contains(t)).take(3).join(", ");
    format!("only in lhs: [{}]; only in rhs: [{}]", only(&l, &r), only(&r, &l))
}

#[cfg(not(target_arch = "wasm32"))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

// no monotonic clock on wasm32-unknown-unknown
#[cfg(target_arch = "wasm32")]
fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    (f(), Duration::ZERO)
}

struct Recorder {
    suite: Suite,
    records: Vec<VerificationRecord>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Recorder { suite, records: Vec::new() }
    }

    /// Times `run` and records every check it returns with the same parameters.
    fn time(
        &mut self,
        params: &[(&str, String)],
        run: impl FnOnce() -> Result<Vec<Check>>,
    ) -> Result<()> {
        let (checks, elapsed) = timed(run);
        let checks = checks?;
        for ch in checks {
            let pass = ch.passed();
            self.records.push(VerificationRecord {
                suite: self.suite.name().to_string(),
                parameters: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
                detail: (!pass).then(|| difference(&ch.lhs, &ch.rhs)),
                check: ch.name,
                lhs: ch.lhs,
                rhs: ch.rhs,
                pass,
                elapsed,
            });
        }
        Ok(())
    }

    fn one(&mut self, params: &[(&str, String)], run: impl FnOnce() -> Result<Check>) -> Result<()> {
        self.time(params, || run().map(|c| vec![c]))
    }
}

fn n_param(n: u32) -> (&'static str, String) {
    ("n", n.to_string())
}

fn uvw() -> (MultiPoly, MultiPoly, MultiPoly) {
    (Var::U.into(), Var::V.into(), Var::W.into())
}

fn kp(k: u32) -> MultiPoly {
    MultiPoly::int(k as i64)
}

fn list(values: &[Rational]) -> String {
    values.iter().join(", ")
}

/// Default ranges per suite; see the crate README for the table.
pub mod defaults {
    pub const FOREST_N: u32 = 7;
    pub const SWEEP_N: u32 = 5;
    pub const HOOK_N: u32 = 6;
    pub const KARY_N: u32 = 5;
    pub const KARY_KS: [u32; 2] = [2, 3];
    pub const UNARY_N: u32 = 6;
    pub const POSTNIKOV_N: u32 = 8;
    pub const POSTNIKOV_SYMBOLIC_N: u32 = 6;
    pub const ORDERED_N: u32 = 5;
    pub const ORDERED_KS: [u32; 2] = [1, 2];
    pub const PARKING_N: u32 = 6;
    pub const PARKING_CS: [u32; 3] = [1, 2, 3];
    pub const ARRIVAL_N: u32 = 5;
    pub const SERIES_ORDER: usize = 25;
    pub const SERIES_POINTS: usize = 20;
    pub const H_ORDER: usize = 20;
    pub const H_POINTS: usize = 12;
    pub const CLOSED_N: u32 = 10;
    pub const CLOSED_POINTS: usize = 20;
    pub const SYMBOLIC_N: u32 = 12;
    pub const SEED: u64 = 2024;
}

use defaults::*;

/// Runs one suite by name, or every suite for `"all"`.
pub fn run_suite(name: &str, ranges: &Ranges) -> Result<Vec<VerificationRecord>> {
    if name == "all" {
        return run_all(&Suite::ALL, ranges);
    }
    run(name.parse()?, ranges)
}

/// Runs several suites concurrently; records come back grouped by suite in
/// the order given.
#[cfg(not(target_arch = "wasm32"))]
pub fn run_all(suites: &[Suite], ranges: &Ranges) -> Result<Vec<VerificationRecord>> {
    let results: Vec<Result<Vec<VerificationRecord>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites.iter().map(|&s| scope.spawn(move || run(s, ranges))).collect();
        handles.into_iter().map(|h| h.join().expect("suite thread panicked")).collect()
    });
    let mut out = Vec::new();
    for r in results {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(target_arch = "wasm32")]
pub fn run_all(suites: &[Suite], ranges: &Ranges) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    for &s in suites {
        out.extend(run(s, ranges)?);
    }
    Ok(out)
}

pub fn run(suite: Suite, ranges: &Ranges) -> Result<Vec<VerificationRecord>> {
    let mut rec = Recorder::new(suite);
    match suite {
        Suite::Forests => {
            for n in 1..=ranges.n(FOREST_N) {
                rec.one(&[n_param(n)], || {
                    Ok(Check::new("forests by proper vertices = P_n(a,b,c)", forests::forest_vertex_poly(n)?, p_poly(n)))
                })?;
            }
        }
        Suite::Trees => {
            for n in 1..=ranges.n(FOREST_N) {
                rec.one(&[n_param(n)], || {
                    Ok(Check::new("trees by proper vertices = Q_n(a,b)", forests::tree_vertex_poly(n)?, q_poly(n)))
                })?;
            }
        }
        Suite::Descents => {
            for n in 1..=ranges.n(FOREST_N) {
                rec.one(&[n_param(n)], || {
                    Ok(Check::new("forests by descents = P_n(a,b,c)", forests::forest_descent_poly(n)?, p_poly(n)))
                })?;
            }
        }
        Suite::Recurrence => {
            for n in 1..=ranges.n(FOREST_N) {
                rec.one(&[n_param(n)], || forests::second_proof_recurrence(n))?;
            }
        }
        Suite::Hooks => {
            for n in 1..=ranges.n(SWEEP_N).min(forests::SUBSET_SWEEP_LIMIT) {
                rec.one(&[n_param(n)], || forests::proper_subset_sweep(n))?;
            }
            for n in 1..=ranges.n(HOOK_N) {
                rec.time(&[n_param(n)], || forests::forest_hook_identity(n))?;
            }
        }
        Suite::Kary => {
            let (u, v, w) = uvw();
            for k in ranges.ks(&KARY_KS) {
                for n in 1..=ranges.n(KARY_N) {
                    let params = [("k", k.to_string()), n_param(n)];
                    rec.one(&params, || {
                        let rhs = p_of(n, &kp(k), &u.scale(&int(k as i64 - 1)), &u);
                        Ok(Check::new("sum u^prop = P_n(k,(k-1)u,u)", kary::kary_prop_poly(n, k)?, rhs))
                    })?;
                    if k >= 2 {
                        rec.one(&params, || {
                            let rhs = p_of(n, &v.scale(&int(k as i64)), &u.scale(&int(k as i64 - 1)), &w);
                            Ok(Check::new(
                                "sum v^(n-prop) u^(prop-comp) w^comp = P_n(kv,(k-1)u,w)",
                                kary::kary_triple_poly(n, k)?,
                                rhs,
                            ))
                        })?;
                    }
                }
            }
            if ranges.k.is_none() {
                for n in 1..=ranges.n(UNARY_N) {
                    rec.one(&[("k", "1".into()), n_param(n)], || {
                        Ok(Check::new("sum u^prop = P_n(1,0,u)", kary::kary_prop_poly(n, 1)?, p_of(n, &kp(1), &MultiPoly::zero(), &u)))
                    })?;
                }
            }
        }
        Suite::KaryDecomp => {
            for k in ranges.ks(&KARY_KS) {
                for n in 1..=ranges.n(KARY_N) {
                    rec.one(&[("k", k.to_string()), n_param(n)], || kary_decomp_check(n, k))?;
                }
            }
        }
        Suite::Postnikov => {
            let k_numeric = ranges.k.unwrap_or(2);
            for n in 1..=ranges.n(POSTNIKOV_N) {
                let params = [("alpha", "1".into()), ("k", k_numeric.to_string()), n_param(n)];
                rec.time(&params, || kary::postnikov_check(n, k_numeric, &int(1)))?;
            }
            for k in ranges.ks(&KARY_KS) {
                for n in 1..=ranges.n(POSTNIKOV_SYMBOLIC_N) {
                    rec.one(&[("k", k.to_string()), n_param(n)], || kary::postnikov_symbolic(n, k))?;
                }
            }
        }
        Suite::Ordered => {
            let (u, v, w) = uvw();
            for k in ranges.ks(&ORDERED_KS) {
                for n in 1..=ranges.n(ORDERED_N) {
                    let params = [("k", k.to_string()), n_param(n)];
                    let a = kp(k);
                    let b = u.scale(&int(k as i64 + 1));
                    rec.time(&params, || {
                        Ok(vec![
                            Check::new("forests: sum u^prop = P_n(k,(k+1)u,u)", ordered::colored_prop_poly(n, k)?, p_of(n, &a, &b, &u)),
                            Check::new(
                                "trees: sum u^prop = -P_n(k,(k+1)u,-u)",
                                ordered::colored_tree_prop_poly(n, k)?,
                                -p_of(n, &a, &b, &(-&u)),
                            ),
                            Check::new(
                                "sum u^(n-prop) v^(prop-comp) w^comp = P_n(ku,(k+1)v,w)",
                                ordered::colored_triple_poly(n, k)?,
                                p_of(n, &u.scale(&int(k as i64)), &v.scale(&int(k as i64 + 1)), &w),
                            ),
                        ])
                    })?;
                    rec.time(&params, || ordered::colored_hook_check(n, k))?;
                    rec.one(&params, || colored_components_check(n, k))?;
                }
            }
        }
        Suite::Ksym => {
            for k in ranges.ks(&ORDERED_KS) {
                for n in 1..=ranges.n(ORDERED_N) {
                    rec.one(&[("k", k.to_string()), n_param(n)], || ordered::ksym_check(n, k))?;
                }
            }
        }
        Suite::Parking => {
            let u: MultiPoly = Var::U.into();
            for c in ranges.cs(&PARKING_CS) {
                for n in 1..=ranges.n(PARKING_N) {
                    let params = [("c", c.to_string()), n_param(n)];
                    rec.one(&params, || {
                        let rhs = p_of(n, &MultiPoly::one(), &u, &u.scale(&int(c as i64)));
                        Ok(Check::new("sum u^lucky = P_n(1,u,cu)", parking::lucky_poly(n, c)?, rhs))
                    })?;
                    rec.one(&params, || {
                        let count = parking::enumerate_parking(n, c)?.count();
                        Ok(Check::new("c-parking count = c(n+c)^(n-1)", count, cayley_count(n, &int(c as i64))))
                    })?;
                    if n <= ranges.n(ARRIVAL_N).min(ARRIVAL_N) {
                        rec.one(&params, || arrival_order_check(n, c))?;
                    }
                }
            }
        }
        Suite::Prime => {
            let u: MultiPoly = Var::U.into();
            for n in 1..=ranges.n(PARKING_N) {
                rec.one(&[n_param(n)], || {
                    let rhs = -p_of(n, &MultiPoly::one(), &u, &(-&u));
                    Ok(Check::new("primes: sum u^lucky = -P_n(1,u,-u)", parking::prime_lucky_poly(n)?, rhs))
                })?;
                for c in ranges.cs(&PARKING_CS) {
                    rec.one(&[("c", c.to_string()), n_param(n)], || decomposition_check(n, c))?;
                }
            }
        }
        Suite::Series => series_suite(&mut rec, ranges)?,
        Suite::Hform => hform_suite(&mut rec, ranges)?,
        Suite::Closedform => closedform_suite(&mut rec, ranges)?,
    }
    Ok(rec.records)
}

/// Decompose/recompose round trip, component count and proper-vertex
/// preservation for every labeled k-ary tree; agreeing trees against total.
fn kary_decomp_check(n: u32, k: u32) -> Result<Check> {
    let (mut agree, mut total) = (0u64, 0u64);
    for t in kary::enumerate_kary(n, k)? {
        total += 1;
        let parts = kary::kary_decompose(&t)?;
        let mut props: Vec<u32> = parts.iter().flat_map(kary::proper_labels).collect();
        props.sort_unstable();
        let ok = kary::kary_recompose(&parts)? == t
            && parts.iter().all(kary::is_component)
            && Some(parts.len() as u32) == kary::kary_stats(&t).comp
            && props == kary::proper_labels(&t);
        agree += ok as u64;
    }
    Ok(Check::new("decomposition round trip and proper vertices", agree, total))
}

fn colored_components_check(n: u32, k: u32) -> Result<Check> {
    let (mut agree, mut total) = (0u64, 0u64);
    for f in ordered::enumerate_colored_forests(n, k)? {
        total += 1;
        let parts = ordered::colored_components(&f);
        let mut props: Vec<u32> = parts.iter().flat_map(ordered::proper_labels).collect();
        props.sort_unstable();
        let ok = parts.len() as u32 == ordered::colored_stats(&f).comp
            && parts.iter().all(|p| p.root_labels().first() == p.root_labels().iter().min())
            && props == ordered::proper_labels(&f);
        agree += ok as u64;
    }
    Ok(Check::new("root left-right minima components keep proper vertices", agree, total))
}

/// Over every map `[n] -> [n+c]`: parkability is the same for all arrival
/// orders and agrees with the block criterion.
fn arrival_order_check(n: u32, c: u32) -> Result<Check> {
    let orders: Vec<Vec<u32>> = (1..=n).permutations(n as usize).collect();
    let (mut agree, mut total) = (0u64, 0u64);
    for f in parking::preference_maps(n, c)? {
        total += 1;
        let valid = f.is_valid();
        let mut ok = true;
        for order in &orders {
            if parking::park_in_order(&f, order)?.is_parked() != valid {
                ok = false;
                break;
            }
        }
        agree += ok as u64;
    }
    Ok(Check::new("parkability independent of arrival order", agree, total))
}

/// Prime factors (c = 1) or empty-space splits (c > 1): every factor is of
/// the right kind, concatenation inverts the split, and lucky counts add up.
fn decomposition_check(n: u32, c: u32) -> Result<Check> {
    let (mut agree, mut total) = (0u64, 0u64);
    for f in parking::enumerate_parking(n, c)? {
        total += 1;
        let parts = if c == 1 { parking::prime_decompose(&f)? } else { parking::split_c_parking(&f)? };
        let kind_ok = if c == 1 { parts.iter().all(|p| p.f.is_prime()) } else { parts.len() as u32 == c };
        let lucky: u32 = parts.iter().map(|p| parking::lucky(&p.f)).sum::<Result<u32>>()?;
        let ok = kind_ok && parking::concatenate(&parts, c)? == f && lucky == parking::lucky(&f)?;
        agree += ok as u64;
    }
    let what = if c == 1 { "prime factors" } else { "empty-space split" };
    Ok(Check::new(format!("{what}: round trip and lucky counts"), agree, total))
}

fn series_suite(rec: &mut Recorder, ranges: &Ranges) -> Result<()> {
    let m = ranges.order(SERIES_ORDER);
    let order = ("order", m.to_string());
    for p in rational_points(ranges.points(SERIES_POINTS), 4, SEED, |_| true) {
        let (a, b, c, u) = (&p[0], &p[1], &p[2], &p[3]);
        let params = [("a", a.to_string()), ("b", b.to_string()), ("c", c.to_string()), order.clone(), ("u", u.to_string())];
        rec.time(&params, || {
            let g = solve_ode(a, b, u, m);
            let gc = g.pow(c)?.egf_coeffs();
            let expect: Vec<Rational> = (0..=m as u32).map(|n| p_value(n, a, &(b * u), &(c * u))).collect();
            let log = g.log()?.egf_coeffs();
            let mut expect_log = vec![Rational::from_integer(0.into())];
            expect_log.extend((1..=m as u32).map(|n| u * q_value(n, a, &(b * u))));
            Ok(vec![
                Check::new("n![x^n] g^c = P_n(a,bu,cu)", list(&gc), list(&expect)),
                Check::new("n![x^n] log g = u Q_n(a,bu)", list(&log), list(&expect_log)),
            ])
        })?;
    }
    for c in [int(1), int(2), rat(5, 2), rat(-1, 3)] {
        rec.time(&[("c", c.to_string()), order.clone()], || {
            let a = solve_fixedpoint(FixedPoint::Forests, m)?;
            let expect: Vec<Rational> = (0..=m as u32).map(|n| cayley_count(n, &c)).collect();
            Ok(vec![Check::new("A = exp(xA): n![x^n] A^c = c(n+c)^(n-1)", list(&a.pow(&c)?.egf_coeffs()), list(&expect))])
        })?;
    }
    let ks = ranges.ks(&KARY_KS);
    for &k in &ks {
        for c in [int(1), int(2), rat(5, 2)] {
            rec.time(&[("c", c.to_string()), ("k", k.to_string()), order.clone()], || {
                let d = solve_fixedpoint(FixedPoint::Kary(k), m)?;
                Ok(vec![Check::new(
                    "D = 1 + xD^k: [x^n] D^c = c/(kn+c) binom(kn+c, n)",
                    list(d.pow(&c)?.coeffs()),
                    list(&kary_counts(k, &c, m)),
                )])
            })?;
        }
    }
    rec.time(std::slice::from_ref(&order), || {
        let e = solve_fixedpoint(FixedPoint::Ordered, m)?;
        let mut expect = vec![int(0)];
        expect.extend((1..=m as u32).map(|n| Rational::from_integer(catalan(n - 1))));
        Ok(vec![Check::new("E = x/(1-E): [x^n] E = C_(n-1)", list(e.coeffs()), list(&expect))])
    })?;
    for k in ranges.ks(&ORDERED_KS) {
        rec.time(&[("k", k.to_string()), order.clone()], || {
            let f = solve_fixedpoint(FixedPoint::KColor(k), m)?;
            Ok(vec![Check::new(
                "F = 1/(1-xF^k): [x^n] F = (k+1)-ary tree count",
                list(f.coeffs()),
                list(&kary_counts(k + 1, &int(1), m)),
            )])
        })?;
    }
    Ok(())
}

fn kary_counts(k: u32, c: &Rational, m: usize) -> Vec<Rational> {
    (0..=m as u32)
        .map(|n| {
            let top = int((k * n) as i64) + c;
            c / &top * binomial(&top, n)
        })
        .collect()
}

fn hform_suite(rec: &mut Recorder, ranges: &Ranges) -> Result<()> {
    let m = ranges.order(H_ORDER);
    for p in rational_points(ranges.points(H_POINTS), 2, SEED + 1, |p| p[0] != p[1]) {
        let params = [("a", p[0].to_string()), ("b", p[1].to_string()), ("order", m.to_string())];
        rec.time(&params, || verify_h_identities(&p[0], &p[1], m, &HIdentity::ALL))?;
    }
    for a in [int(0), int(1), rat(-1, 2), rat(7, 3)] {
        let params = [("a", a.to_string()), ("b", a.to_string()), ("order", m.to_string())];
        rec.time(&params, || verify_h_identities(&a, &a, m, &[HIdentity::Differential, HIdentity::Symmetric]))?;
    }
    Ok(())
}

fn closedform_suite(rec: &mut Recorder, ranges: &Ranges) -> Result<()> {
    let n_max = ranges.n(CLOSED_N);
    let count = ranges.points(CLOSED_POINTS);
    let join = |checks: Vec<Check>| -> Vec<Check> {
        let name = checks[0].name.split(" n=").next().unwrap_or_default().to_string();
        let lhs = checks.iter().map(|c| c.lhs.as_str()).join(", ");
        let rhs = checks.iter().map(|c| c.rhs.as_str()).join(", ");
        vec![Check::new(format!("{name} n=1..{n_max}"), lhs, rhs)]
    };
    let nonzero = |p: &[Rational]| (1..=n_max).all(|n| &p[0] * int(n as i64) + &p[1] != int(0));
    for p in rational_points(count, 2, SEED + 2, nonzero) {
        rec.time(&[("c", p[1].to_string()), ("k", p[0].to_string())], || {
            let checks = (1..=n_max).map(|n| check_kary_specialization(n, &p[0], &p[1])).collect::<Result<_>>()?;
            Ok(join(checks))
        })?;
    }
    for p in rational_points(count, 3, SEED + 3, |p| p[0] != p[1]) {
        let params = [("a", p[0].to_string()), ("b", p[1].to_string()), ("c", p[2].to_string())];
        rec.time(&params, || {
            let checks = (1..=n_max).map(|n| check_rescaling(n, &p[0], &p[1], &p[2])).collect::<Result<_>>()?;
            Ok(join(checks))
        })?;
    }
    for p in rational_points(count, 4, SEED + 4, |p| p[0] != int(0)) {
        let params = [("a", p[1].to_string()), ("b", p[2].to_string()), ("c", p[3].to_string()), ("t", p[0].to_string())];
        rec.time(&params, || {
            Ok(join((1..=n_max).map(|n| homogeneity_check(n, &p[0], &p[1], &p[2], &p[3])).collect()))
        })?;
    }
    for n in 1..=ranges.n(SYMBOLIC_N) {
        rec.time(&[n_param(n)], || {
            let mut checks = symbolic_checks(n);
            checks.push(catalan_check(n));
            Ok(checks)
        })?;
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(Format::Table),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(Error::parse("format", s, "expected table, json or csv")),
        }
    }
}

const TABLE_WIDTH: usize = 48;

fn clip(s: &str) -> String {
    if s.chars().count() <= TABLE_WIDTH {
        s.to_string()
    } else {
        let head: String = s.chars().take(TABLE_WIDTH - 3).collect();
        format!("{head}...")
    }
}

pub fn render(records: &[VerificationRecord], format: Format) -> Result<String> {
    match format {
        Format::Json => serde_json::to_string_pretty(records).map_err(|e| Error::Io(e.to_string())),
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().quote_style(csv::QuoteStyle::Always).from_writer(Vec::new());
            let io = |e: csv::Error| Error::Io(e.to_string());
            w.write_record(["suite", "check", "parameters", "lhs", "rhs", "pass", "elapsed_ms"]).map_err(io)?;
            for r in records {
                w.write_record([
                    r.suite.as_str(),
                    &r.check,
                    &r.parameter_string(),
                    &r.lhs,
                    &r.rhs,
                    if r.pass { "true" } else { "false" },
                    &format!("{:.3}", r.elapsed.as_secs_f64() * 1000.0),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
        }
        Format::Table => {
            let rows: Vec<[String; 5]> = records
                .iter()
                .map(|r| {
                    let status = if r.pass { "PASS" } else { "FAIL" };
                    let value = match &r.detail {
                        Some(d) => d.clone(),
                        None => clip(&r.lhs),
                    };
                    [status.into(), r.suite.clone(), r.parameter_string(), r.check.clone(), value]
                })
                .collect();
            let header = ["status", "suite", "parameters", "check", "value"].map(String::from);
            let mut widths = header.each_ref().map(|h| h.len());
            for row in &rows {
                for (w, cell) in widths.iter_mut().zip(row) {
                    *w = (*w).max(cell.chars().count());
                }
            }
            let mut out = String::new();
            for row in std::iter::once(&header).chain(&rows) {
                let line = row.iter().zip(widths).map(|(cell, w)| format!("{cell:<w$}")).join("  ");
                out.push_str(line.trim_end());
                out.push('\n');
            }
            let failed = records.iter().filter(|r| !r.pass).count();
            out.push_str(&format!("{} records, {} passed, {} failed\n", records.len(), records.len() - failed, failed));
            Ok(out)
        }
    }
}

/// Writes the rendered records to `dest`, or standard output when `None`.
pub fn emit(records: &[VerificationRecord], format: Format, dest: Option<&Path>) -> Result<()> {
    let text = render(records, format)?;
    let io = |e: std::io::Error| Error::Io(e.to_string());
    match dest {
        Some(path) => std::fs::write(path, text).map_err(io),
        None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(io),
    }
}

pub fn all_passed(records: &[VerificationRecord]) -> bool {
    records.iter().all(|r| r.pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn upto(n: u32) -> Ranges {
        Ranges { n_max: Some(n), ..Ranges::default() }
    }

    #[test]
    fn forests_small() {
        let recs = run_suite("forests", &upto(4)).unwrap();
        assert_eq!(recs.len(), 4);
        assert!(all_passed(&recs));
        assert_eq!(recs[1].lhs, "a*c + b*c + c^2");
        assert_eq!(recs[1].rhs, "a*c + b*c + c^2");
    }

    #[test]
    fn postnikov_small() {
        let ranges = Ranges { n_max: Some(2), k: Some(2), ..Ranges::default() };
        let recs = run_suite("postnikov", &ranges).unwrap();
        let binary = recs.iter().find(|r| r.check == "binary hook identity n=2").unwrap();
        assert_eq!((binary.lhs.as_str(), binary.rhs.as_str()), ("3", "3"));
        assert!(all_passed(&recs));
    }

    #[test]
    fn all_minimal() {
        let ranges = Ranges { n_max: Some(2), order: Some(4), points: Some(2), ..Ranges::default() };
        let recs = run_suite("all", &ranges).unwrap();
        assert!(recs.len() >= 13);
        let failed: Vec<_> = recs.iter().filter(|r| !r.pass).collect();
        assert!(failed.is_empty(), "{failed:?}");
        let again = run_suite("all", &ranges).unwrap();
        let strip = |rs: &[VerificationRecord]| rs.iter().map(|r| (r.suite.clone(), r.parameter_string(), r.lhs.clone())).collect::<Vec<_>>();
        assert_eq!(strip(&recs), strip(&again));
    }

    #[test]
    fn unknown_suite() {
        assert_eq!(run_suite("nope", &Ranges::default()).unwrap_err(), Error::UnknownSuite("nope".into()));
    }

    #[test]
    fn parameter_errors_propagate() {
        let ranges = Ranges { n_max: Some(1), c: Some(0), ..Ranges::default() };
        assert!(matches!(run_suite("parking", &ranges), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn rendering() {
        assert_eq!(render(&[], Format::Json).unwrap(), "[]");
        assert_eq!(render(&[], Format::Csv).unwrap().lines().count(), 1);
        let recs = run_suite("forests", &upto(2)).unwrap();
        let json = render(&recs[..1], Format::Json).unwrap();
        assert!(json.contains("\"pass\": true"));
        let csv = render(&recs, Format::Csv).unwrap();
        assert!(csv.contains("\"a*c + b*c + c^2\""));
        let table = render(&recs, Format::Table).unwrap();
        assert!(table.starts_with("status"));
        assert!(table.ends_with("2 records, 2 passed, 0 failed\n"));
    }

    #[test]
    fn difference_details() {
        assert_eq!(difference("1, 2, 3", "1, 2, 4"), "coefficient 2: 3 vs 4");
        assert_eq!(
            difference("a*c + b*c - c^2", "a*c + b*c + c^2"),
            "only in lhs: [-c^2]; only in rhs: [c^2]"
        );
    }
}
