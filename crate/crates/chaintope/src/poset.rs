//! Admissible signed subsets and the face poset of the moment polytope.
//!
//! A face of the moment polytope is labeled by a pair of disjoint subsets of
//! {1, …, m−1}: the unbarred part J₁ lists directions pinned at their lower
//! wall x_j = −α_j, the barred part −J₂ lists directions pinned at the upper
//! wall x_j = +α_j. A pair is admissible exactly when J₁ ∪ {m} and the
//! underlying set of −J₂ are both α-short; equivalently, when the folded
//! residual |α_m + α_{J₁} − α_{J₂}| stays below the weight of the untouched
//! directions and the reduced vector is generic. Both criteria are evaluated
//! and must agree; a disagreement would falsify the combinatorial dictionary
//! and is treated as an internal error.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::error::{Error, Result};
use crate::lengths::{
    dominance_le, IndexSubset, LengthVector, Rational, ShortCode, SubsetSums,
};
use crate::limits;

/// A pair (J₁, −J₂) of disjoint subsets of [m−1] labeling a face.
/// `j2bar` stores the underlying (positive) elements of the barred part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SignedSubset {
    j1: IndexSubset,
    j2bar: IndexSubset,
}

impl SignedSubset {
    pub fn new(j1: IndexSubset, j2bar: IndexSubset) -> Result<Self> {
        if !j1.is_disjoint(&j2bar) {
            return Err(Error::InvalidVector(
                "signed subset parts must be disjoint".into(),
            ));
        }
        Ok(SignedSubset { j1, j2bar })
    }

    pub fn empty() -> Self {
        SignedSubset::default()
    }

    pub fn from_elements(j1: &[usize], j2bar: &[usize]) -> Result<Self> {
        SignedSubset::new(IndexSubset::new(j1.to_vec()), IndexSubset::new(j2bar.to_vec()))
    }

    pub fn j1(&self) -> &IndexSubset {
        &self.j1
    }

    pub fn j2bar(&self) -> &IndexSubset {
        &self.j2bar
    }

    /// |J₁| + |J₂|, the codimension of the labeled face.
    pub fn cardinality(&self) -> usize {
        self.j1.len() + self.j2bar.len()
    }

    /// Componentwise containment: every constraint of `self` is a constraint
    /// of `other`.
    pub fn is_contained_in(&self, other: &SignedSubset) -> bool {
        self.j1.elements().iter().all(|&i| other.j1.contains(i))
            && self.j2bar.elements().iter().all(|&i| other.j2bar.contains(i))
    }

    pub(crate) fn masks(&self) -> (u64, u64) {
        (self.j1.mask(), self.j2bar.mask())
    }

    pub(crate) fn from_masks(m1: u64, m2: u64) -> Self {
        SignedSubset {
            j1: IndexSubset::from_mask(m1),
            j2bar: IndexSubset::from_mask(m2),
        }
    }
}

impl fmt::Display for SignedSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for &i in self.j1.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        for &i in self.j2bar.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "-{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Shared admissibility oracle for one length vector.
pub(crate) struct Admissibility {
    pub(crate) sums: SubsetSums,
    pub(crate) m: usize,
    anchor_mask: u64,
    side_mask: u64,
}

impl Admissibility {
    pub(crate) fn new(alpha: &LengthVector) -> Result<Self> {
        let m = alpha.m();
        if !alpha.is_generic() {
            return Err(Error::NonGeneric);
        }
        Ok(Admissibility {
            sums: SubsetSums::new(alpha),
            m,
            anchor_mask: 1u64 << (m - 1),
            side_mask: (1u64 << (m - 1)) - 1,
        })
    }

    /// Shortness criterion: J₁ ∪ {m} short and −J₂ short.
    pub(crate) fn shortness_criterion(&self, mask1: u64, mask2: u64) -> Result<bool> {
        Ok(self.sums.is_short(mask1 | self.anchor_mask)? && self.sums.is_short(mask2)?)
    }

    /// Reduced-vector criterion: |α_m + α_{J₁} − α_{J₂}| below the complement
    /// weight, with the reduced vector generic.
    pub(crate) fn reduced_criterion(&self, mask1: u64, mask2: u64) -> Result<bool> {
        let fold = self.fold(mask1, mask2).abs();
        let comp = self.side_mask & !(mask1 | mask2);
        let comp_sum = self.sums.sum(comp);
        if fold >= comp_sum {
            return Ok(false);
        }
        Ok(self.reduced_generic(comp, &fold))
    }

    /// α_m + Σ_{J₁} − Σ_{J₂} over the scaled entries.
    pub(crate) fn fold(&self, mask1: u64, mask2: u64) -> BigInt {
        self.sums.scaled_entry(self.m).clone() + self.sums.sum(mask1) - self.sums.sum(mask2)
    }

    fn reduced_generic(&self, comp: u64, fold: &BigInt) -> bool {
        // Subsets of the reduced vector are subsets of the complement, with
        // or without the folded anchor entry.
        let total = self.sums.sum(comp) + fold;
        let elements: Vec<&BigInt> = {
            let mut v = Vec::new();
            let mut rest = comp;
            while rest != 0 {
                let b = rest.trailing_zeros() as usize;
                v.push(self.sums.scaled_entry(b + 1));
                rest &= rest - 1;
            }
            v
        };
        fn rec(elements: &[&BigInt], i: usize, doubled: BigInt, total: &BigInt) -> bool {
            if doubled == *total {
                return true;
            }
            if i == elements.len() {
                return false;
            }
            if rec(elements, i + 1, doubled.clone(), total) {
                return true;
            }
            rec(elements, i + 1, doubled + (elements[i] << 1u8), total)
        }
        let hit = rec(&elements, 0, BigInt::from(0), &total)
            || rec(&elements, 0, fold << 1u8, &total);
        !hit
    }

    /// Both criteria, asserted equal.
    pub(crate) fn is_admissible(&self, mask1: u64, mask2: u64) -> Result<bool> {
        let by_shortness = self.shortness_criterion(mask1, mask2)?;
        let by_reduction = self.reduced_criterion(mask1, mask2)?;
        assert_eq!(
            by_shortness, by_reduction,
            "admissibility criteria disagree on (J1={:#b}, J2bar={:#b}); \
             this contradicts the shortness dictionary",
            mask1, mask2
        );
        Ok(by_shortness)
    }

    /// The polytope is nonempty iff {m} is short.
    pub(crate) fn require_nonempty(&self) -> Result<()> {
        if !self.sums.is_short(self.anchor_mask)? {
            return Err(Error::EmptyPolytope);
        }
        Ok(())
    }

    fn check_range(&self, j: &SignedSubset) -> Result<()> {
        let bound = self.m - 1;
        if j.j1.max_element().unwrap_or(0) > bound || j.j2bar.max_element().unwrap_or(0) > bound {
            return Err(Error::OutOfRange("signed subset must live in [m-1]"));
        }
        Ok(())
    }
}

/// Is the signed subset admissible for the vector? Evaluates both the
/// two-shortness criterion and the reduced-vector criterion and insists they
/// agree.
pub fn is_admissible(alpha: &LengthVector, j: &SignedSubset) -> Result<bool> {
    let adm = Admissibility::new(alpha)?;
    adm.check_range(j)?;
    let (m1, m2) = j.masks();
    adm.is_admissible(m1, m2)
}

/// The reduced length vector α(J): the entries over the complement of
/// J₁ ∪ −J₂ in [m−1], with |α_m + α_{J₁} − α_{J₂}| folded in as the new
/// anchor.
pub fn reduced_length_vector(alpha: &LengthVector, j: &SignedSubset) -> Result<LengthVector> {
    if !is_admissible(alpha, j)? {
        return Err(Error::NotAdmissible);
    }
    let m = alpha.m();
    let mut entries: Vec<Rational> = Vec::new();
    for i in 1..m {
        if !j.j1().contains(i) && !j.j2bar().contains(i) {
            entries.push(alpha.entry(i).clone());
        }
    }
    let mut fold = alpha.anchor().clone();
    for &i in j.j1().elements() {
        fold += alpha.entry(i);
    }
    for &i in j.j2bar().elements() {
        fold -= alpha.entry(i);
    }
    if fold < Rational::from_integer(0.into()) {
        fold = -fold;
    }
    entries.push(fold);
    LengthVector::new(entries)
}

fn admissible_pairs(adm: &Admissibility) -> Result<Vec<(u64, u64)>> {
    let m = adm.m;
    // All J₁ with J₁ ∪ {m} short, and all short J₂bar, each collected by a
    // pruned subset walk; longs have no short supersets.
    fn collect(adm: &Admissibility, base: u64, m: usize) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        let mut stack = vec![(1usize, 0u64)];
        while let Some((next, mask)) = stack.pop() {
            if !adm.sums.is_short(base | mask)? {
                continue;
            }
            out.push(mask);
            for i in next..m {
                stack.push((i + 1, mask | (1u64 << (i - 1))));
            }
        }
        Ok(out)
    }
    let ones = collect(adm, adm.anchor_mask, m)?;
    let twos = collect(adm, 0, m)?;
    let mut pairs = Vec::new();
    for &m1 in &ones {
        for &m2 in &twos {
            if m1 & m2 == 0 {
                pairs.push((m1, m2));
            }
        }
    }
    Ok(pairs)
}

/// All admissible signed subsets of cardinality k, in canonical order.
pub fn enumerate_faces(alpha: &LengthVector, k: usize) -> Result<Vec<SignedSubset>> {
    let m = alpha.m();
    limits::check(m, limits::structural_max_m())?;
    if k > m - 2 {
        return Err(Error::OutOfRange("face cardinality must be at most m-2"));
    }
    let adm = Admissibility::new(alpha)?;
    let mut out: Vec<SignedSubset> = admissible_pairs(&adm)?
        .into_iter()
        .filter(|&(m1, m2)| (m1 | m2).count_ones() as usize == k)
        .map(|(m1, m2)| SignedSubset::from_masks(m1, m2))
        .collect();
    out.sort();
    Ok(out)
}

/// The graded face poset of the moment polytope: all admissible signed
/// subsets ordered by reverse containment. Rank equals dimension,
/// dim(F_J) = m − 2 − |J|; the empty subset is the whole polytope on top.
#[derive(Debug, Clone)]
pub struct FacePoset {
    m: usize,
    dims: Vec<Vec<SignedSubset>>,
    covers_up: Vec<Vec<Vec<usize>>>,
    index: HashMap<(u64, u64), (usize, usize)>,
}

impl FacePoset {
    pub fn build(alpha: &LengthVector) -> Result<FacePoset> {
        let m = alpha.m();
        limits::check(m, limits::structural_max_m())?;
        let adm = Admissibility::new(alpha)?;
        if !adm.sums.is_short(adm.anchor_mask)? {
            return Err(Error::EmptyPolytope);
        }
        let dim_top = m - 2;
        let mut dims: Vec<Vec<SignedSubset>> = vec![Vec::new(); dim_top + 1];
        for (m1, m2) in admissible_pairs(&adm)? {
            let card = (m1 | m2).count_ones() as usize;
            // |J| = m-1 leaves an empty complement and is never admissible.
            debug_assert!(card <= dim_top);
            dims[dim_top - card].push(SignedSubset::from_masks(m1, m2));
        }
        for level in dims.iter_mut() {
            level.sort();
        }
        let mut index = HashMap::new();
        for (d, level) in dims.iter().enumerate() {
            for (i, j) in level.iter().enumerate() {
                index.insert(j.masks(), (d, i));
            }
        }
        // A face of dimension d is covered by the faces obtained by deleting
        // one of its constraints; heredity guarantees they are admissible.
        let mut covers_up: Vec<Vec<Vec<usize>>> = Vec::with_capacity(dim_top + 1);
        for (d, level) in dims.iter().enumerate() {
            let mut level_covers = Vec::with_capacity(level.len());
            for j in level {
                let mut ups = Vec::with_capacity(j.cardinality());
                if d < dim_top {
                    let (m1, m2) = j.masks();
                    let push = |a: u64, b: u64, ups: &mut Vec<usize>| {
                        let (dd, ii) = index[&(a, b)];
                        debug_assert_eq!(dd, d + 1);
                        ups.push(ii);
                    };
                    let mut rest = m1;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        push(m1 & !bit, m2, &mut ups);
                        rest &= rest - 1;
                    }
                    let mut rest = m2;
                    while rest != 0 {
                        let bit = rest & rest.wrapping_neg();
                        push(m1, m2 & !bit, &mut ups);
                        rest &= rest - 1;
                    }
                    ups.sort_unstable();
                }
                level_covers.push(ups);
            }
            covers_up.push(level_covers);
        }
        Ok(FacePoset {
            m,
            dims,
            covers_up,
            index,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Dimension of the polytope, m − 2.
    pub fn dim(&self) -> usize {
        self.m - 2
    }

    /// Faces of the given dimension, canonically ordered.
    pub fn faces(&self, dim: usize) -> &[SignedSubset] {
        &self.dims[dim]
    }

    /// (f₀, …, f_{m−3}): proper face counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        self.dims[..self.dim()].iter().map(|l| l.len()).collect()
    }

    pub fn facet_count(&self) -> usize {
        self.f_vector().last().copied().unwrap_or(0)
    }

    pub fn contains(&self, j: &SignedSubset) -> bool {
        self.index.contains_key(&j.masks())
    }

    /// Indices (in dimension dim+1) of the faces covering face `i` of
    /// dimension `dim`.
    pub fn covers_up(&self, dim: usize, i: usize) -> &[usize] {
        &self.covers_up[dim][i]
    }

    pub fn total_faces(&self) -> usize {
        self.dims.iter().map(|l| l.len()).sum()
    }

    /// All α-short subsets containing the anchor, read off the poset:
    /// J₁ ∪ {m} is short exactly when (J₁, ∅) is admissible.
    pub fn short_sets_with_anchor(&self) -> Vec<IndexSubset> {
        let mut out = Vec::new();
        for level in &self.dims {
            for j in level {
                if j.j2bar().is_empty() {
                    out.push(j.j1().with(self.m));
                }
            }
        }
        out.sort();
        out
    }

    /// The short code reconstructed from the poset alone.
    pub fn short_code(&self) -> ShortCode {
        let shorts = self.short_sets_with_anchor();
        let maximal: Vec<IndexSubset> = shorts
            .iter()
            .filter(|s| shorts.iter().all(|t| *s == t || !dominance_le(s, t)))
            .cloned()
            .collect();
        ShortCode::from_sets(self.m, maximal).expect("poset code members contain the anchor")
    }
}

/// Scan every signed subset of [m−1] (all disjoint pairs) and evaluate both
/// admissibility criteria; the internal assertion fires on any disagreement.
/// Returns the number of admissible subsets found.
pub fn verify_dual_criteria(alpha: &LengthVector) -> Result<usize> {
    let adm = Admissibility::new(alpha)?;
    let side = (1u64 << (adm.m - 1)) - 1;
    let mut admissible = 0usize;
    let mut m1 = 0u64;
    loop {
        // enumerate m2 over submasks of the complement of m1
        let free = side & !m1;
        let mut m2 = free;
        loop {
            if adm.is_admissible(m1, m2)? {
                admissible += 1;
            }
            if m2 == 0 {
                break;
            }
            m2 = (m2 - 1) & free;
        }
        if m1 == side {
            break;
        }
        m1 += 1;
    }
    Ok(admissible)
}

/// Is the short code a member of the simplex-truncation family, i.e. <{m}>
/// or <{j,m}> for a single j?
fn truncation_family_step(code: &ShortCode) -> Option<usize> {
    if code.sets().len() != 1 {
        return None;
    }
    let s = code.sets()[0].elements();
    match s.len() {
        1 => Some(0),
        2 => Some(s[0]),
        _ => None,
    }
}

/// Verify the vertex-truncation identity between the posets of a vector with
/// short code <{k−1,m}> (read <{m}> when k = 1) and one with short code
/// <{k,m}>: the second poset equals the first poset minus the all-barred
/// vertex Z (barred everywhere except k) plus the simplex family of faces
/// whose unbarred part is exactly {k}.
pub fn vertex_truncation_delta(
    ad_alpha: &FacePoset,
    ad_beta: &FacePoset,
    k: usize,
) -> Result<bool> {
    let m = ad_alpha.m();
    if ad_beta.m() != m {
        return Err(Error::PreconditionViolated("posets have different ambient sizes"));
    }
    if k == 0 || k > m - 1 {
        return Err(Error::OutOfRange("truncation index must lie in [m-1]"));
    }
    let code_a = ad_alpha.short_code();
    let code_b = ad_beta.short_code();
    if truncation_family_step(&code_a).is_none() {
        return Err(Error::PreconditionViolated(
            "first poset's code is not of the form <{m}> or <{j,m}>",
        ));
    }
    if truncation_family_step(&code_b) != Some(k) {
        return Err(Error::PreconditionViolated(
            "second poset's code is not <{k,m}> for the given k",
        ));
    }

    use std::collections::HashSet;
    let collect = |p: &FacePoset| -> HashSet<(u64, u64)> {
        p.dims
            .iter()
            .flat_map(|level| level.iter().map(|j| j.masks()))
            .collect()
    };
    let set_a = collect(ad_alpha);
    let set_b = collect(ad_beta);

    let z_mask2 = ((1u64 << (m - 1)) - 1) & !(1u64 << (k - 1));
    let z = (0u64, z_mask2);
    if !set_a.contains(&z) || set_b.contains(&z) {
        return Ok(false);
    }
    let k_bit = 1u64 << (k - 1);
    let new_family: HashSet<(u64, u64)> = set_b
        .iter()
        .copied()
        .filter(|&(m1, _)| m1 & k_bit != 0)
        .collect();
    // Every new face lies in the truncation simplex: unbarred part exactly {k}.
    if !new_family.iter().all(|&(m1, _)| m1 == k_bit) {
        return Ok(false);
    }
    let a_rest: HashSet<_> = set_a.iter().copied().filter(|&p| p != z).collect();
    let b_rest: HashSet<_> = set_b.difference(&new_family).copied().collect();
    Ok(a_rest == b_rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(entries: &[i64]) -> LengthVector {
        LengthVector::from_ints(entries).unwrap()
    }

    fn ss(j1: &[usize], j2bar: &[usize]) -> SignedSubset {
        SignedSubset::from_elements(j1, j2bar).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let alpha = lv(&[1, 1, 3, 3, 3]);
        assert!(is_admissible(&alpha, &ss(&[1, 2], &[3])).unwrap());
        assert!(!is_admissible(&alpha, &ss(&[1, 3], &[])).unwrap());
        assert!(is_admissible(&alpha, &SignedSubset::empty()).unwrap());
    }

    #[test]
    fn signed_subset_validation() {
        assert!(SignedSubset::from_elements(&[1, 2], &[2]).is_err());
        let alpha = lv(&[1, 1, 3, 3, 3]);
        assert_eq!(
            is_admissible(&alpha, &ss(&[5], &[])),
            Err(Error::OutOfRange("signed subset must live in [m-1]"))
        );
    }

    #[test]
    fn reduced_vector_examples() {
        let alpha = lv(&[1, 1, 3, 3, 3]);
        assert_eq!(
            reduced_length_vector(&alpha, &ss(&[1], &[2])).unwrap(),
            lv(&[3, 3, 3])
        );
        assert_eq!(
            reduced_length_vector(&alpha, &SignedSubset::empty()).unwrap(),
            alpha
        );
        let beta = lv(&[1, 2, 2, 5, 3]);
        assert_eq!(
            reduced_length_vector(&beta, &ss(&[1], &[])).unwrap(),
            lv(&[2, 2, 5, 4])
        );
        assert_eq!(
            reduced_length_vector(&alpha, &ss(&[1, 3], &[])),
            Err(Error::NotAdmissible)
        );
    }

    #[test]
    fn face_enumeration_counts() {
        let alpha = lv(&[1, 1, 3, 3, 3]);
        let facets = enumerate_faces(&alpha, 1).unwrap();
        assert_eq!(facets.len(), 6);
        let expected: Vec<SignedSubset> = vec![
            ss(&[1], &[]),
            ss(&[2], &[]),
            ss(&[], &[1]),
            ss(&[], &[2]),
            ss(&[], &[3]),
            ss(&[], &[4]),
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(facets, expected);

        assert_eq!(enumerate_faces(&alpha, 3).unwrap().len(), 8);
        assert_eq!(
            enumerate_faces(&alpha, 0).unwrap(),
            vec![SignedSubset::empty()]
        );
        assert!(enumerate_faces(&alpha, 4).is_err());
    }

    #[test]
    fn cube_triangle_and_truncated_simplex_f_vectors() {
        assert_eq!(
            FacePoset::build(&lv(&[1, 1, 3, 3, 3])).unwrap().f_vector(),
            vec![8, 12, 6]
        );
        assert_eq!(
            FacePoset::build(&lv(&[1, 1, 1, 2])).unwrap().f_vector(),
            vec![3, 3]
        );
        assert_eq!(
            FacePoset::build(&lv(&[1, 3, 3, 3, 5])).unwrap().f_vector(),
            vec![6, 9, 5]
        );
    }

    #[test]
    fn poset_errors() {
        assert_eq!(
            FacePoset::build(&lv(&[1, 1, 1, 1])).unwrap_err(),
            Error::NonGeneric
        );
        // anchor too heavy: empty polytope
        assert_eq!(
            FacePoset::build(&lv(&[1, 1, 1, 10])).unwrap_err(),
            Error::EmptyPolytope
        );
    }

    #[test]
    fn poset_code_matches_vector_code() {
        for entries in [
            [1i64, 1, 3, 3, 3].as_slice(),
            &[1, 2, 2, 5, 3],
            &[1, 3, 3, 3, 1],
            &[1, 1, 1, 2],
            &[1, 3, 3, 3, 5],
        ] {
            let alpha = lv(entries);
            let poset = FacePoset::build(&alpha).unwrap();
            assert_eq!(poset.short_code(), alpha.short_code().unwrap());
        }
    }

    #[test]
    fn heredity_and_grading() {
        for entries in [[1i64, 1, 3, 3, 3].as_slice(), &[1, 2, 2, 5, 3], &[1, 2, 3, 7, 4]] {
            let alpha = lv(entries);
            let poset = FacePoset::build(&alpha).unwrap();
            let d = poset.dim();
            // Euler relation for proper faces of a d-polytope.
            let mut euler = 0i64;
            for (i, f) in poset.f_vector().iter().enumerate() {
                euler += if i % 2 == 0 { *f as i64 } else { -(*f as i64) };
            }
            assert_eq!(euler, 1 - if d.is_multiple_of(2) { 1 } else { -1 });
            // Heredity: dropping any constraint of an admissible face gives
            // an admissible face.
            for dim in 0..d {
                for j in poset.faces(dim) {
                    for &i in j.j1().elements() {
                        let smaller =
                            SignedSubset::new(j.j1().without(i), j.j2bar().clone()).unwrap();
                        assert!(poset.contains(&smaller));
                    }
                }
            }
            // Grading: every cover raises dimension by one (by construction),
            // and every non-top face has at least one cover.
            for dim in 0..d {
                for (i, _) in poset.faces(dim).iter().enumerate() {
                    assert!(!poset.covers_up(dim, i).is_empty());
                }
            }
        }
    }

    #[test]
    fn simplicity_every_vertex_on_dim_many_facets() {
        for entries in [[1i64, 1, 3, 3, 3].as_slice(), &[1, 2, 2, 5, 3], &[1, 3, 3, 3, 5]] {
            let alpha = lv(entries);
            let poset = FacePoset::build(&alpha).unwrap();
            let d = poset.dim();
            let facets: Vec<&SignedSubset> = poset.faces(d - 1).iter().collect();
            for v in poset.faces(0) {
                let on = facets.iter().filter(|f| f.is_contained_in(v)).count();
                assert_eq!(on, d);
            }
        }
    }

    #[test]
    fn truncation_identity_holds_for_one_step() {
        // <{5}> vs <{1,5}>: implementer-verified pair.
        let alpha = lv(&[1, 3, 3, 3, 9]);
        let beta = lv(&[1, 3, 3, 3, 5]);
        assert_eq!(alpha.short_code().unwrap().to_string(), "<{5}>");
        assert_eq!(beta.short_code().unwrap().to_string(), "<{1,5}>");
        let pa = FacePoset::build(&alpha).unwrap();
        let pb = FacePoset::build(&beta).unwrap();
        assert!(vertex_truncation_delta(&pa, &pb, 1).unwrap());
        assert_eq!(pa.f_vector(), vec![4, 6, 4]);
        assert_eq!(pb.f_vector(), vec![6, 9, 5]);
    }

    #[test]
    fn truncation_precondition_and_failure_cases() {
        let pa = FacePoset::build(&lv(&[1, 3, 3, 3, 9])).unwrap();
        let pb = FacePoset::build(&lv(&[1, 3, 3, 3, 5])).unwrap();
        // Identical posets: the second code is <{5}>, never <{k,5}>.
        assert_eq!(
            vertex_truncation_delta(&pa, &pa, 1),
            Err(Error::PreconditionViolated(
                "second poset's code is not <{k,m}> for the given k"
            ))
        );
        // Cube code is not in the truncation family at all.
        let cube = FacePoset::build(&lv(&[1, 1, 3, 3, 3])).unwrap();
        assert!(vertex_truncation_delta(&cube, &pb, 1).is_err());
        // Two steps apart: codes <{5}> vs <{2,5}> with k = 2; identity fails.
        let two = lv(&[2, 2, 5, 5, 7]);
        assert_eq!(two.short_code().unwrap().to_string(), "<{2,5}>");
        let ptwo = FacePoset::build(&two).unwrap();
        assert!(!vertex_truncation_delta(&pa, &ptwo, 2).unwrap());
    }

    #[test]
    fn dual_criteria_agree_on_all_signed_subsets() {
        for entries in [[1i64, 1, 3, 3, 3].as_slice(), &[1, 2, 2, 5, 3], &[1, 2, 3, 7, 4]] {
            let alpha = lv(entries);
            let adm = Admissibility::new(&alpha).unwrap();
            let m = alpha.m();
            let side = (1u64 << (m - 1)) - 1;
            for m1 in 0..=side {
                for m2 in 0..=side {
                    if m1 & m2 != 0 {
                        continue;
                    }
                    // is_admissible asserts the agreement internally.
                    let _ = adm.is_admissible(m1, m2).unwrap();
                }
            }
        }
    }
}
