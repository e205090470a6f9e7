//! Shared helpers for integration tests: a small deterministic RNG and
//! samplers for random generic length vectors.

use chaintope::LengthVector;

/// SplitMix64: tiny, deterministic, good enough for test sampling.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in 1..=max.
    pub fn entry(&mut self, max: u64) -> i64 {
        (self.next_u64() % max + 1) as i64
    }
}

/// A normalized generic vector with m entries, sides and anchor in 1..=max.
pub fn random_generic(rng: &mut SplitMix64, m: usize, max: u64) -> LengthVector {
    loop {
        let mut sides: Vec<i64> = (0..m - 1).map(|_| rng.entry(max)).collect();
        sides.sort_unstable();
        sides.push(rng.entry(max));
        let alpha = LengthVector::from_ints(&sides).unwrap();
        if alpha.is_generic() {
            return alpha;
        }
    }
}

/// As `random_generic`, but with a nonempty moment polytope.
pub fn random_generic_nonempty(rng: &mut SplitMix64, m: usize, max: u64) -> LengthVector {
    loop {
        let alpha = random_generic(rng, m, max);
        if alpha.has_nonempty_polytope() {
            return alpha;
        }
    }
}

/// Verified vectors realizing each named code pattern, for 4 <= m <= 8.
/// Order: cube, torus, pentagon-prism, hexagon-prism, simplex.
pub fn pattern_vectors(m: usize) -> Vec<(&'static str, LengthVector)> {
    let raw: [(&'static str, Vec<i64>); 5] = match m {
        4 => [
            ("cube", vec![1, 2, 2, 2]),
            ("torus", vec![1, 1, 5, 2]),
            ("pentagon", vec![1, 1, 2, 1]),
            ("hexagon", vec![2, 2, 2, 1]),
            ("simplex", vec![1, 1, 1, 2]),
        ],
        5 => [
            ("cube", vec![1, 1, 3, 3, 3]),
            ("torus", vec![1, 1, 1, 6, 2]),
            ("pentagon", vec![1, 2, 2, 5, 3]),
            ("hexagon", vec![1, 3, 3, 3, 1]),
            ("simplex", vec![1, 1, 1, 1, 3]),
        ],
        6 => [
            ("cube", vec![1, 1, 1, 4, 4, 4]),
            ("torus", vec![1, 1, 1, 1, 7, 2]),
            ("pentagon", vec![1, 2, 4, 4, 10, 6]),
            ("hexagon", vec![1, 2, 6, 6, 6, 2]),
            ("simplex", vec![1, 1, 1, 1, 1, 4]),
        ],
        7 => [
            ("cube", vec![1, 1, 1, 1, 5, 5, 5]),
            ("torus", vec![1, 1, 1, 1, 1, 8, 2]),
            ("pentagon", vec![1, 1, 3, 6, 6, 15, 9]),
            ("hexagon", vec![1, 1, 3, 9, 9, 9, 3]),
            ("simplex", vec![1, 1, 1, 1, 1, 1, 5]),
        ],
        8 => [
            ("cube", vec![1, 1, 1, 1, 1, 6, 6, 6]),
            ("torus", vec![1, 1, 1, 1, 1, 1, 9, 2]),
            ("pentagon", vec![1, 1, 1, 4, 8, 8, 20, 12]),
            ("hexagon", vec![1, 1, 1, 4, 12, 12, 12, 4]),
            ("simplex", vec![1, 1, 1, 1, 1, 1, 1, 6]),
        ],
        _ => panic!("pattern vectors are tabulated for 4 <= m <= 8"),
    };
    raw.into_iter()
        .map(|(name, v)| (name, LengthVector::from_ints(&v).unwrap()))
        .collect()
}
