use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{rat, Rational};

/// Deterministic rational sample points: numerators in `[-9, 9]`, denominators
/// in `[1, 9]`, drawn from a ChaCha stream with the given seed. Each point has
/// `dims` coordinates; `accept` filters degenerate points.
pub fn rational_points(
    count: usize,
    dims: usize,
    seed: u64,
    accept: impl Fn(&[Rational]) -> bool,
) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let p: Vec<Rational> = (0..dims)
            .map(|_| rat(rng.gen_range(-9..=9), rng.gen_range(1..=9)))
            .collect();
        if accept(&p) && !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_and_filtered() {
        let a = rational_points(20, 3, 7, |p| p[0] != p[1]);
        let b = rational_points(20, 3, 7, |p| p[0] != p[1]);
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p[0] != p[1]));
    }
}
