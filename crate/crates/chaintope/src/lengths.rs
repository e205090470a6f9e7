//! Length vectors, genericity, shortness, and short codes.
//!
//! A length vector is a tuple of m >= 3 positive rationals
//! (α₁, …, α_m). The last entry is the anchor (the terminal-line length of
//! the chain); the first m-1 entries are the side lengths. All decisions in
//! this crate reduce to strict comparisons of subset sums, so every
//! computation here is exact: entries are arbitrary-precision rationals and
//! the internal oracle clears denominators once and works over big integers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::limits;

/// Exact rational scalar used throughout the crate.
pub type Rational = num_rational::BigRational;

/// Parse a rational written as `p/q` or a plain integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let make = |num: &str, den: &str| -> Result<Rational> {
        let n: BigInt = num
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{num}`")))?;
        let d: BigInt = den
            .parse()
            .map_err(|_| Error::Parse(format!("bad integer `{den}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{num}/{den}`")));
        }
        Ok(Rational::new(n, d))
    };
    match s.split_once('/') {
        Some((num, den)) => make(num.trim(), den.trim()),
        None => make(s, "1"),
    }
}

/// Parse a comma-separated list of rationals into a length vector,
/// e.g. `1,1,3,3,3` or `1/2,2,2,5/3`.
pub fn parse_length_vector(s: &str) -> Result<LengthVector> {
    let entries = s
        .split(',')
        .map(parse_rational)
        .collect::<Result<Vec<_>>>()?;
    LengthVector::new(entries)
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Whether a subset weighs less than its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shortness {
    Short,
    Long,
}

impl Shortness {
    pub fn is_short(self) -> bool {
        matches!(self, Shortness::Short)
    }
}

/// A subset of {1, …, m}, stored as the ascending list of its 1-based
/// elements. Ordering is lexicographic on that list, which is the canonical
/// enumeration order used everywhere in this crate.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct IndexSubset(Vec<usize>);

impl IndexSubset {
    pub fn new(mut elements: Vec<usize>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        IndexSubset(elements)
    }

    pub fn empty() -> Self {
        IndexSubset(Vec::new())
    }

    pub fn elements(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_disjoint(&self, other: &IndexSubset) -> bool {
        self.0.iter().all(|i| !other.contains(*i))
    }

    pub fn with(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v.push(i);
        IndexSubset::new(v)
    }

    pub fn without(&self, i: usize) -> Self {
        IndexSubset(self.0.iter().copied().filter(|&x| x != i).collect())
    }

    pub fn union(&self, other: &IndexSubset) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        IndexSubset::new(v)
    }

    /// Bitmask with bit i-1 set for each element i. Elements must fit in 64
    /// bits, which every capped enumeration guarantees.
    pub(crate) fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |acc, &i| acc | (1u64 << (i - 1)))
    }

    pub(crate) fn from_mask(mut mask: u64) -> Self {
        let mut v = Vec::with_capacity(mask.count_ones() as usize);
        while mask != 0 {
            let b = mask.trailing_zeros() as usize;
            v.push(b + 1);
            mask &= mask - 1;
        }
        IndexSubset(v)
    }

    pub fn max_element(&self) -> Option<usize> {
        self.0.last().copied()
    }
}

impl fmt::Display for IndexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// Dominance order on index subsets: `i <= j` iff `i` has at most as many
/// elements as `j` and, comparing the ascending elements of `i` with the
/// equally many largest elements of `j`, each element of `i` is dominated.
pub fn dominance_le(i: &IndexSubset, j: &IndexSubset) -> bool {
    let t = i.len();
    if t > j.len() {
        return false;
    }
    let js = &j.elements()[j.len() - t..];
    i.elements().iter().zip(js).all(|(a, b)| a <= b)
}

/// The antichain of maximal α-short subsets containing the anchor index m,
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ShortCode {
    m: usize,
    sets: Vec<IndexSubset>,
}

impl ShortCode {
    /// Assemble a code from explicit member sets. Members are canonicalized
    /// and must all contain m; no shortness validation is performed here.
    pub fn from_sets(m: usize, sets: Vec<IndexSubset>) -> Result<Self> {
        for s in &sets {
            if !s.contains(m) {
                return Err(Error::InvalidVector(format!(
                    "short-code member {s} does not contain the anchor index {m}"
                )));
            }
            if s.max_element() != Some(m) {
                return Err(Error::InvalidVector(format!(
                    "short-code member {s} has elements above the ambient size {m}"
                )));
            }
        }
        let mut sets = sets;
        sets.sort();
        sets.dedup();
        Ok(ShortCode { m, sets })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn sets(&self) -> &[IndexSubset] {
        &self.sets
    }

    /// Members as sorted lists of integers, the canonical serialization.
    pub fn as_lists(&self) -> Vec<Vec<usize>> {
        self.sets.iter().map(|s| s.elements().to_vec()).collect()
    }
}

impl fmt::Display for ShortCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, s) in self.sets.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ">")
    }
}

/// Subset-sum oracle over denominator-cleared entries.
///
/// Shortness of a subset S is the strict comparison 2·Σ_S < Σ_total, so the
/// oracle stores doubled subset sums. For m ≤ 16 a full table indexed by
/// bitmask is built; larger vectors fall back to summing on demand.
pub(crate) struct SubsetSums {
    scaled: Vec<BigInt>,
    total: BigInt,
    doubled: Option<Vec<BigInt>>,
}

const TABLE_MAX_M: usize = 16;

impl SubsetSums {
    pub(crate) fn new(alpha: &LengthVector) -> Self {
        let m = alpha.m();
        let mut lcm = BigInt::one();
        for e in alpha.entries() {
            lcm = lcm.lcm(e.denom());
        }
        let scaled: Vec<BigInt> = alpha
            .entries()
            .iter()
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let total: BigInt = scaled.iter().sum();
        let doubled = if m <= TABLE_MAX_M {
            let mut t = vec![BigInt::zero(); 1 << m];
            for mask in 1usize..(1 << m) {
                let b = mask.trailing_zeros() as usize;
                t[mask] = &t[mask & (mask - 1)] + (&scaled[b] << 1);
            }
            Some(t)
        } else {
            None
        };
        SubsetSums {
            scaled,
            total,
            doubled,
        }
    }

    /// 2·Σ_mask compared with the total.
    pub(crate) fn cmp_half(&self, mask: u64) -> Ordering {
        match &self.doubled {
            Some(t) => t[mask as usize].cmp(&self.total),
            None => {
                let mut sum = BigInt::zero();
                let mut rest = mask;
                while rest != 0 {
                    let b = rest.trailing_zeros() as usize;
                    sum += &self.scaled[b];
                    rest &= rest - 1;
                }
                (sum << 1u8).cmp(&self.total)
            }
        }
    }

    pub(crate) fn shortness(&self, mask: u64) -> Result<Shortness> {
        match self.cmp_half(mask) {
            Ordering::Less => Ok(Shortness::Short),
            Ordering::Greater => Ok(Shortness::Long),
            Ordering::Equal => Err(Error::NonGeneric),
        }
    }

    pub(crate) fn is_short(&self, mask: u64) -> Result<bool> {
        Ok(self.shortness(mask)?.is_short())
    }

    pub(crate) fn scaled_entry(&self, i: usize) -> &BigInt {
        &self.scaled[i - 1]
    }

    pub(crate) fn scaled_total(&self) -> &BigInt {
        &self.total
    }

    /// Σ over the mask, undoubled.
    pub(crate) fn sum(&self, mask: u64) -> BigInt {
        let mut sum = BigInt::zero();
        let mut rest = mask;
        while rest != 0 {
            let b = rest.trailing_zeros() as usize;
            sum += &self.scaled[b];
            rest &= rest - 1;
        }
        sum
    }
}

/// An exact-rational length vector with distinguished anchor entry α_m.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LengthVector {
    entries: Vec<Rational>,
}

impl LengthVector {
    /// Build a length vector. Requires m >= 3 and strictly positive entries.
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        if entries.len() < 3 {
            return Err(Error::InvalidVector(format!(
                "need at least 3 entries, got {}",
                entries.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !e.is_positive()) {
            return Err(Error::InvalidVector(format!(
                "entries must be positive, got {}",
                format_rational(bad)
            )));
        }
        Ok(LengthVector { entries })
    }

    /// Convenience constructor from integers.
    pub fn from_ints(entries: &[i64]) -> Result<Self> {
        LengthVector::new(
            entries
                .iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    pub fn m(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// 1-based access, matching the index-set conventions.
    pub fn entry(&self, i: usize) -> &Rational {
        &self.entries[i - 1]
    }

    /// The anchor α_m.
    pub fn anchor(&self) -> &Rational {
        self.entries.last().unwrap()
    }

    pub fn total(&self) -> Rational {
        self.entries.iter().sum()
    }

    /// Σ_{i<m} α_i, the perimeter available to the chain.
    pub fn sum_of_sides(&self) -> Rational {
        self.entries[..self.m() - 1].iter().sum()
    }

    /// α_m < Σ_{i<m} α_i, the nonempty-chain condition.
    pub fn has_nonempty_polytope(&self) -> bool {
        *self.anchor() < self.sum_of_sides()
    }

    /// Whether the first m-1 entries are ascending (the anchor is free).
    pub fn is_normalized(&self) -> bool {
        self.entries[..self.m() - 1].windows(2).all(|w| w[0] <= w[1])
    }

    /// Stable-sort the first m-1 entries ascending, leaving the anchor in
    /// place. The returned permutation lists, for each new position, the
    /// 1-based original position of the entry now there.
    pub fn normalized(&self) -> (LengthVector, Vec<usize>) {
        let m = self.m();
        let mut order: Vec<usize> = (0..m - 1).collect();
        order.sort_by(|&a, &b| self.entries[a].cmp(&self.entries[b]));
        let mut entries: Vec<Rational> = order.iter().map(|&i| self.entries[i].clone()).collect();
        entries.push(self.anchor().clone());
        let perm = order.iter().map(|&i| i + 1).collect();
        (LengthVector { entries }, perm)
    }

    /// No signed sum of the entries vanishes; equivalently no subset sums to
    /// exactly half the total. Direct enumeration up to 20 entries,
    /// meet-in-the-middle above.
    pub fn is_generic(&self) -> bool {
        let sums = SubsetSums::new(self);
        if sums.total.is_odd() {
            return true;
        }
        let m = self.m();
        if m <= 20 {
            // Fix element 1 inside the subset; complement symmetry covers the rest.
            fn rec(scaled: &[BigInt], i: usize, twice: BigInt, total: &BigInt) -> bool {
                if i == scaled.len() {
                    return twice == *total;
                }
                if rec(scaled, i + 1, twice.clone(), total) {
                    return true;
                }
                rec(scaled, i + 1, twice + (&scaled[i] << 1), total)
            }
            let twice0 = &sums.scaled[0] << 1;
            !rec(&sums.scaled, 1, twice0, &sums.total)
        } else {
            use std::collections::HashSet;
            let half = &sums.total / 2;
            let (a, b) = sums.scaled.split_at(m / 2);
            let mut partials = HashSet::new();
            let mut stack = vec![BigInt::zero()];
            for e in a {
                let mut next = Vec::with_capacity(stack.len() * 2);
                for s in &stack {
                    next.push(s.clone());
                    next.push(s + e);
                }
                stack = next;
            }
            partials.extend(stack);
            let mut tails = vec![BigInt::zero()];
            for e in b {
                let mut next = Vec::with_capacity(tails.len() * 2);
                for s in &tails {
                    next.push(s.clone());
                    next.push(s + e);
                }
                tails = next;
            }
            !tails.iter().any(|t| partials.contains(&(&half - t)))
        }
    }

    /// Strict shortness of a subset. `NonGeneric` signals that the two sums
    /// are equal, i.e. the genericity precondition was violated.
    pub fn shortness(&self, subset: &IndexSubset) -> Result<Shortness> {
        if subset.max_element().unwrap_or(1) > self.m() {
            return Err(Error::OutOfRange("subset element exceeds m"));
        }
        let mut sum = Rational::zero();
        for &i in subset.elements() {
            sum += self.entry(i);
        }
        let doubled = &sum + &sum;
        match doubled.cmp(&self.total()) {
            Ordering::Less => Ok(Shortness::Short),
            Ordering::Greater => Ok(Shortness::Long),
            Ordering::Equal => Err(Error::NonGeneric),
        }
    }

    pub fn is_short(&self, subset: &IndexSubset) -> Result<bool> {
        Ok(self.shortness(subset)?.is_short())
    }

    /// The short code: maximal α-short subsets containing m under the
    /// dominance order. Requires a generic, normalized vector.
    pub fn short_code(&self) -> Result<ShortCode> {
        let m = self.m();
        limits::check(m, limits::code_max_m())?;
        if !self.is_normalized() {
            return Err(Error::NotNormalized);
        }
        if !self.is_generic() {
            return Err(Error::NonGeneric);
        }
        let sums = SubsetSums::new(self);
        let anchor_mask = 1u64 << (m - 1);
        let mut shorts: Vec<u64> = Vec::new();
        // DFS over subsets of [m-1], each joined with the anchor. Once the
        // doubled partial sum reaches the total, every superset is long.
        let mut stack: Vec<(usize, u64, BigInt)> =
            vec![(1, anchor_mask, sums.scaled_entry(m) << 1)];
        while let Some((next, mask, twice)) = stack.pop() {
            if twice >= *sums.scaled_total() {
                continue;
            }
            shorts.push(mask);
            for i in next..m {
                let t2 = &twice + (sums.scaled_entry(i) << 1);
                stack.push((i + 1, mask | (1u64 << (i - 1)), t2));
            }
        }
        // A short set is maximal iff every single-element add and every
        // bump of an element to the next free index yields a long set.
        let mut maximal = Vec::new();
        'candidates: for &mask in &shorts {
            for i in 1..m {
                let bit = 1u64 << (i - 1);
                if mask & bit == 0 {
                    if sums.is_short(mask | bit)? {
                        continue 'candidates;
                    }
                } else if i + 1 < m && mask & (bit << 1) == 0 {
                    let bumped = (mask & !bit) | (bit << 1);
                    if sums.is_short(bumped)? {
                        continue 'candidates;
                    }
                }
            }
            maximal.push(IndexSubset::from_mask(mask));
        }
        ShortCode::from_sets(m, maximal)
    }

    /// Lift to a polygon length vector: (α₁, …, α_{m−1}, δ, α_m+δ) with
    /// δ strictly above the side sum. `None` selects δ = Σ_{i<m} α_i + 1.
    pub fn genetic_lift(&self, delta: Option<Rational>) -> Result<LengthVector> {
        let side_sum = self.sum_of_sides();
        let delta = match delta {
            Some(d) => {
                if d <= side_sum {
                    return Err(Error::BadDelta);
                }
                d
            }
            None => side_sum + Rational::one(),
        };
        let mut entries = self.entries[..self.m() - 1].to_vec();
        entries.push(delta.clone());
        entries.push(self.anchor() + delta);
        Ok(LengthVector { entries })
    }

    /// Fold the first j side lengths into the anchor:
    /// (α_{j+1}, …, α_{m−1}, α_m + Σ_{i≤j} α_i). Requires 1 ≤ j ≤ m−3.
    pub fn reduce_first(&self, j: usize) -> Result<LengthVector> {
        let m = self.m();
        if j == 0 || j > m - 3 {
            return Err(Error::OutOfRange("reduce_first needs 1 <= j <= m-3"));
        }
        let folded: Rational = self.anchor() + self.entries[..j].iter().sum::<Rational>();
        let mut entries = self.entries[j..m - 1].to_vec();
        entries.push(folded);
        Ok(LengthVector { entries })
    }
}

impl fmt::Display for LengthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, e) in self.entries.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", format_rational(e))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(entries: &[i64]) -> LengthVector {
        LengthVector::from_ints(entries).unwrap()
    }

    fn subset(elements: &[usize]) -> IndexSubset {
        IndexSubset::new(elements.to_vec())
    }

    #[test]
    fn genericity_examples() {
        assert!(!lv(&[1, 1, 1, 1]).is_generic()); // {1,2} vs {3,4}
        assert!(lv(&[1, 1, 3, 3, 3]).is_generic());
        assert!(lv(&[1, 2, 2, 5, 3]).is_generic());
    }

    #[test]
    fn genericity_matches_exhaustive_subset_scan() {
        for entries in [
            vec![1, 1, 3, 3, 3],
            vec![1, 1, 1, 1],
            vec![2, 3, 5, 7, 11, 13],
            vec![1, 2, 3, 4, 5, 6, 7, 8],
        ] {
            let alpha = lv(&entries);
            let total: i64 = entries.iter().sum();
            let mut equal_split = false;
            for mask in 0u64..(1 << entries.len()) {
                let s: i64 = entries
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, v)| v)
                    .sum();
                if 2 * s == total {
                    equal_split = true;
                }
            }
            assert_eq!(alpha.is_generic(), !equal_split, "vector {entries:?}");
        }
    }

    #[test]
    fn meet_in_the_middle_agrees_with_direct() {
        // 22 entries forces the MITM path; the expected answer comes from a
        // direct scan over all subset masks with machine integers.
        fn scan_is_generic(entries: &[i64]) -> bool {
            let total: i64 = entries.iter().sum();
            (0u64..(1 << entries.len())).all(|mask| {
                let s: i64 = entries
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, v)| v)
                    .sum();
                2 * s != total
            })
        }
        let mut bad = vec![1i64; 21];
        bad.push(21); // even total, {22} matches the other half exactly
        let odd_primes: Vec<i64> = vec![
            3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83,
        ]; // even total, so the parity shortcut does not fire
        for v in [bad, odd_primes] {
            assert_eq!(lv(&v).is_generic(), scan_is_generic(&v), "vector {v:?}");
        }
    }

    #[test]
    fn shortness_examples() {
        let alpha = lv(&[1, 1, 3, 3, 3]);
        assert_eq!(
            alpha.shortness(&subset(&[1, 2, 5])).unwrap(),
            Shortness::Short
        );
        assert_eq!(alpha.shortness(&subset(&[3, 5])).unwrap(), Shortness::Long);
        assert_eq!(alpha.shortness(&subset(&[])).unwrap(), Shortness::Short);
        // Equality reports the genericity violation.
        let sq = lv(&[1, 1, 1, 1]);
        assert_eq!(sq.shortness(&subset(&[1, 2])), Err(Error::NonGeneric));
    }

    #[test]
    fn normalize_examples() {
        let (sorted, perm) = lv(&[3, 1, 1, 3, 3]).normalized();
        assert_eq!(sorted, lv(&[1, 1, 3, 3, 3]));
        assert_eq!(perm, vec![2, 3, 1, 4]);

        let (same, perm) = lv(&[1, 1, 3, 3, 3]).normalized();
        assert_eq!(same, lv(&[1, 1, 3, 3, 3]));
        assert_eq!(perm, vec![1, 2, 3, 4]);

        let (sorted, perm) = lv(&[2, 1, 2, 5, 3]).normalized();
        assert_eq!(sorted, lv(&[1, 2, 2, 5, 3]));
        assert_eq!(perm, vec![2, 1, 3, 4]);
    }

    #[test]
    fn short_code_examples() {
        assert_eq!(lv(&[1, 1, 3, 3, 3]).short_code().unwrap().to_string(), "<{1,2,5}>");
        assert_eq!(lv(&[1, 2, 2, 5, 3]).short_code().unwrap().to_string(), "<{1,3,5}>");
        assert_eq!(lv(&[1, 3, 3, 3, 1]).short_code().unwrap().to_string(), "<{1,4,5}>");
        assert_eq!(lv(&[1, 1, 1, 2]).short_code().unwrap().to_string(), "<{4}>");
    }

    #[test]
    fn short_code_requires_normalized_and_generic() {
        assert_eq!(lv(&[3, 1, 1, 3, 3]).short_code(), Err(Error::NotNormalized));
        assert_eq!(lv(&[1, 1, 1, 1]).short_code(), Err(Error::NonGeneric));
    }

    #[test]
    fn short_code_members_match_brute_force_maximality() {
        for entries in [
            [1i64, 1, 3, 3, 3].as_slice(),
            &[1, 2, 2, 5, 3],
            &[1, 3, 3, 3, 1],
            &[1, 1, 1, 2],
            &[1, 2, 3, 7, 4],
            &[1, 1, 2, 3, 8, 2],
        ] {
            let alpha = lv(entries);
            let m = alpha.m();
            let code = alpha.short_code().unwrap();
            // Brute force: all short sets containing m, maximal by pairwise
            // dominance.
            let mut shorts = Vec::new();
            for mask in 0u64..(1 << (m - 1)) {
                let set = IndexSubset::from_mask(mask | (1 << (m - 1)));
                if alpha.is_short(&set).unwrap() {
                    shorts.push(set);
                }
            }
            let maximal: Vec<_> = shorts
                .iter()
                .filter(|s| {
                    shorts
                        .iter()
                        .all(|t| *s == t || !dominance_le(s, t))
                })
                .cloned()
                .collect();
            let mut expect = maximal;
            expect.sort();
            assert_eq!(code.sets(), expect.as_slice(), "vector {entries:?}");
        }
    }

    #[test]
    fn genetic_lift_examples() {
        let alpha = lv(&[1, 1, 3, 3, 3]);
        let lifted = alpha
            .genetic_lift(Some(Rational::from_integer(12.into())))
            .unwrap();
        assert_eq!(lifted, lv(&[1, 1, 3, 3, 12, 15]));

        let auto = lv(&[1, 2, 2, 5, 3]).genetic_lift(None).unwrap();
        assert_eq!(auto, lv(&[1, 2, 2, 5, 11, 14]));

        assert_eq!(
            alpha.genetic_lift(Some(Rational::from_integer(8.into()))),
            Err(Error::BadDelta)
        );
    }

    #[test]
    fn genetic_lift_code_consistency() {
        // Maximal short subsets of the lift containing m+1 are the code
        // members with m replaced by m+1.
        for entries in [
            [1i64, 1, 3, 3, 3].as_slice(),
            &[1, 2, 2, 5, 3],
            &[1, 1, 1, 2],
            &[1, 2, 3, 7, 4],
        ] {
            let alpha = lv(entries);
            let m = alpha.m();
            let code = alpha.short_code().unwrap();
            let lifted = alpha.genetic_lift(None).unwrap();
            assert!(lifted.is_generic());
            let lifted_code = lifted.short_code().unwrap();
            let expect: Vec<IndexSubset> = code
                .sets()
                .iter()
                .map(|s| s.without(m).with(m + 1))
                .collect();
            let expect = ShortCode::from_sets(m + 1, expect).unwrap();
            assert_eq!(lifted_code, expect, "vector {entries:?}");
        }
    }

    #[test]
    fn reduce_first_examples() {
        let alpha = lv(&[1, 1, 3, 3, 3]);
        assert_eq!(alpha.reduce_first(1).unwrap(), lv(&[1, 3, 3, 4]));
        assert_eq!(alpha.reduce_first(2).unwrap(), lv(&[3, 3, 5]));
        assert!(alpha.reduce_first(3).is_err());
        assert!(alpha.reduce_first(0).is_err());
    }

    #[test]
    fn reduce_first_keeps_torus_code() {
        // A torus-code vector keeps the torus-type code after one reduction.
        let alpha = lv(&[1, 1, 1, 9, 2]);
        assert_eq!(alpha.short_code().unwrap().to_string(), "<{1,2,3,5}>");
        let reduced = alpha.reduce_first(1).unwrap();
        assert_eq!(reduced, lv(&[1, 1, 9, 3]));
        assert_eq!(reduced.short_code().unwrap().to_string(), "<{1,2,4}>");
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_le(&subset(&[1, 2, 5]), &subset(&[1, 4, 5])));
        assert!(dominance_le(&subset(&[4, 5]), &subset(&[1, 4, 5])));
        assert!(!dominance_le(&subset(&[1, 4, 5]), &subset(&[1, 2, 5])));
        // the two largest elements of {1,3,4} dominate (2,4) elementwise
        assert!(dominance_le(&subset(&[2, 4]), &subset(&[1, 3, 4])));
        assert!(!dominance_le(&subset(&[2, 4, 5]), &subset(&[1, 3, 4])));
    }

    #[test]
    fn monotone_closure_under_dominance() {
        // If J is short and I <= J (both containing m), then I is short.
        for entries in [[1i64, 1, 3, 3, 3].as_slice(), &[1, 2, 2, 5, 3], &[1, 2, 3, 7, 4]] {
            let alpha = lv(entries);
            let m = alpha.m();
            let all: Vec<IndexSubset> = (0u64..(1 << (m - 1)))
                .map(|mask| IndexSubset::from_mask(mask | (1 << (m - 1))))
                .collect();
            for j in &all {
                if !alpha.is_short(j).unwrap() {
                    continue;
                }
                for i in &all {
                    if dominance_le(i, j) {
                        assert!(
                            alpha.is_short(i).unwrap(),
                            "vector {entries:?}: {i} should be short below {j}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generic_iff_no_equality_over_all_subsets() {
        for entries in [[1i64, 1, 3, 3, 3].as_slice(), &[1, 1, 1, 1], &[2, 4, 6, 12]] {
            let alpha = lv(entries);
            let m = alpha.m();
            let mut saw_equal = false;
            for mask in 0u64..(1 << m) {
                if alpha.shortness(&IndexSubset::from_mask(mask)).is_err() {
                    saw_equal = true;
                }
            }
            assert_eq!(alpha.is_generic(), !saw_equal);
        }
    }

    #[test]
    fn parsing_round_trip() {
        let alpha = parse_length_vector("1,1,3,3,3").unwrap();
        assert_eq!(alpha, lv(&[1, 1, 3, 3, 3]));
        let beta = parse_length_vector("1/2, 3/2, 2, 5").unwrap();
        assert_eq!(beta.to_string(), "1/2,3/2,2,5");
        assert!(parse_length_vector("1,0,3").is_err());
        assert!(parse_length_vector("1,x,3").is_err());
        assert!(parse_length_vector("1,2").is_err());
        assert!(parse_length_vector("1,2/0,3").is_err());
    }
}
