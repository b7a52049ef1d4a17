//! Exact scalars, sparse multivariate polynomials and truncated power series.

mod grid;
mod poly;
mod rational;
mod series;

pub use grid::rational_points;
pub use poly::{Exponents, MultiPoly, Point, Tally, Var, NVARS};
pub use rational::{
    binomial, factorial, falling, int, parse_rational, pow, rat, rising, Rational,
};
pub use series::{solve_fixedpoint, solve_ode, verify_h_identities, FixedPoint, HIdentity, TruncatedSeries};
