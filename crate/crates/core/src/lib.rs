//! Exact enumeration of labeled trees, forests and parking functions by
//! proper vertices, and verification of the identities relating them to the
//! polynomials
//!
//! ```text
//! P_n(a, b, c) = c * prod_{i=1}^{n-1} (i*a + (n-i)*b + c)
//! ```
//!
//! Every quantity is an exact rational; identities are checked by comparing
//! canonical renderings of both sides.

pub mod algebra;
pub mod closedform;
mod error;
pub mod forests;
pub mod harness;
pub mod kary;
pub mod ordered;
pub mod parking;
mod report;

pub use error::{Error, Result};
pub use report::Check;
