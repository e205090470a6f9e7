//! Characteristic data of the small cover over Q(α).
//!
//! Over Z₂ the outward normals of Q(α) collapse to: box walls ±i ↦ e_i and
//! the two hyperplane-shift facets ↦ e₁+…+e_n. That assignment is
//! characteristic: at every vertex the incident facet vectors are linearly
//! independent. Printed matrices list the facets in a fixed canonical order
//! — upper bounds sweeping direction 1, the hyperplane upper bound, then
//! directions 2…n; then lower bounds in the same sweep — which reproduces
//! the worked example matrices column for column. The cube-code case also
//! carries a block presentation [I_n | I'_{n−1} | 1] and the upper-triangular
//! Bott matrix of the associated tower of circle fibrations.

use crate::error::{Error, Result};
use crate::geometry::{reduced_hrep, FacetLabel, HalfspaceSystem, VertexPoint};
use crate::lengths::LengthVector;
use crate::poset::{FacePoset, SignedSubset};

/// Facet labeling by Z₂ vectors, stored as bitmask columns (bit i = row i).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicFunction {
    n: usize,
    assignment: Vec<(FacetLabel, u64)>,
}

impl CharacteristicFunction {
    pub fn new(n: usize, assignment: Vec<(FacetLabel, u64)>) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::OutOfRange("rank must be between 1 and 63"));
        }
        for (l, col) in &assignment {
            if *col == 0 || *col >> n != 0 {
                return Err(Error::Inconsistent(format!("bad column for facet {l}")));
            }
        }
        Ok(CharacteristicFunction { n, assignment })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn assignment(&self) -> &[(FacetLabel, u64)] {
        &self.assignment
    }

    pub fn column(&self, label: FacetLabel) -> Option<u64> {
        self.assignment
            .iter()
            .find(|(l, _)| *l == label)
            .map(|(_, c)| *c)
    }

    /// The matrix with columns in the stored (canonical) facet order.
    pub fn matrix(&self) -> CharacteristicMatrix {
        CharacteristicMatrix {
            rows: self.n,
            labels: self.assignment.iter().map(|(l, _)| *l).collect(),
            columns: self.assignment.iter().map(|(_, c)| *c).collect(),
        }
    }
}

/// A Z₂ matrix with labeled columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicMatrix {
    rows: usize,
    labels: Vec<FacetLabel>,
    columns: Vec<u64>,
}

impl CharacteristicMatrix {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn labels(&self) -> &[FacetLabel] {
        &self.labels
    }

    /// Row-major 0/1 entries.
    pub fn entries(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| {
                self.columns
                    .iter()
                    .map(|c| ((c >> r) & 1) as u8)
                    .collect()
            })
            .collect()
    }

    /// Rows of space-separated 0/1.
    pub fn to_text(&self) -> String {
        self.entries()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|b| b.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Upper-triangular Z₂ matrix of a tower of circle fibrations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BottMatrix(Vec<Vec<u8>>);

impl BottMatrix {
    pub fn entries(&self) -> &[Vec<u8>] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len()
    }
}

/// Canonical facet-column order: upper-bound facets sweeping
/// (x₁, Σ, x₂, …, x_{n}), then lower-bound facets in the same sweep.
/// In label terms the hyperplane facets ±(m−1) take the slot right after
/// direction 1 of their block. This is the order of the worked matrices.
fn canonical_facet_order(m: usize, present: &[FacetLabel]) -> Vec<FacetLabel> {
    let has = |l: FacetLabel| present.contains(&l);
    let mut order = Vec::with_capacity(present.len());
    let push = |l: FacetLabel, order: &mut Vec<FacetLabel>| {
        if has(l) {
            order.push(l);
        }
    };
    push(FacetLabel::positive(1), &mut order);
    push(FacetLabel::negative(m - 1), &mut order); // Σ x ≤ α_m + α_{m−1}
    for i in 2..=m - 2 {
        push(FacetLabel::positive(i), &mut order);
    }
    push(FacetLabel::negative(1), &mut order);
    push(FacetLabel::positive(m - 1), &mut order); // Σ x ≥ α_m − α_{m−1}
    for i in 2..=m - 2 {
        push(FacetLabel::negative(i), &mut order);
    }
    debug_assert_eq!(order.len(), present.len());
    order
}

fn chi_column(n: usize, label: FacetLabel) -> u64 {
    if label.index() == n + 1 {
        (1u64 << n) - 1 // hyperplane facet: e₁ + … + e_n
    } else {
        1u64 << (label.index() - 1)
    }
}

/// The characteristic function of Q(α), over exactly its labeled facets,
/// in canonical column order.
pub fn characteristic_function(alpha: &LengthVector) -> Result<CharacteristicFunction> {
    let system = reduced_hrep(alpha)?;
    let m = alpha.m();
    let n = m - 2;
    let present = system.facet_labels();
    let assignment = canonical_facet_order(m, &present)
        .into_iter()
        .map(|l| (l, chi_column(n, l)))
        .collect();
    CharacteristicFunction::new(n, assignment)
}

fn z2_rank(columns: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &c in columns {
        let mut v = c;
        for &b in &basis {
            let high = 63 - b.leading_zeros();
            if (v >> high) & 1 == 1 {
                v ^= b;
            }
        }
        if v != 0 {
            basis.push(v);
        }
    }
    basis.len()
}

/// Facet labels pinning a face, per the admissible dictionary.
fn labels_of_subset(j: &SignedSubset) -> Vec<FacetLabel> {
    j.j1()
        .elements()
        .iter()
        .map(|&i| FacetLabel::negative(i))
        .chain(j.j2bar().elements().iter().map(|&i| FacetLabel::positive(i)))
        .collect()
}

/// Check that the facet vectors are linearly independent over Z₂ at every
/// vertex, and that the inputs describe the same polytope.
pub fn verify_characteristic(
    hrep: &HalfspaceSystem,
    vertices: &[VertexPoint],
    chi: &CharacteristicFunction,
) -> Result<bool> {
    let n = chi.rank();
    if hrep.ambient_dim != n {
        return Err(Error::Inconsistent(
            "characteristic rank differs from ambient dimension".into(),
        ));
    }
    let mut hrep_labels = hrep.facet_labels();
    hrep_labels.sort();
    let mut chi_labels: Vec<FacetLabel> = chi.assignment().iter().map(|(l, _)| *l).collect();
    chi_labels.sort();
    if hrep_labels != chi_labels {
        return Err(Error::Inconsistent(
            "characteristic function and H-representation label different facets".into(),
        ));
    }
    for v in vertices {
        if !hrep.contains(&v.coordinates) {
            return Err(Error::Inconsistent(format!(
                "vertex {} violates the H-representation",
                v.label
            )));
        }
        let labels = labels_of_subset(&v.label);
        if labels.len() != n {
            return Err(Error::Inconsistent(format!(
                "vertex {} does not pin {} facets",
                v.label, n
            )));
        }
        let columns: Vec<u64> = labels
            .iter()
            .map(|l| {
                chi.column(*l).ok_or_else(|| {
                    Error::Inconsistent(format!("facet {l} missing from the assignment"))
                })
            })
            .collect::<Result<_>>()?;
        if z2_rank(&columns) != n {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Cube-code block data: the characteristic matrix in the block order
/// [ I_{m−2} | I'_{m−3} | 1 ] (positive walls, then present negative walls,
/// then the lower hyperplane bound) and the Bott matrix whose last column is
/// ones above a zero row.
pub fn bott_data(alpha: &LengthVector) -> Result<(CharacteristicMatrix, BottMatrix)> {
    let code = alpha.short_code()?;
    let m = alpha.m();
    if code != crate::classify::cube_code(m) {
        return Err(Error::WrongCode);
    }
    let n = m - 2;
    let mut labels: Vec<FacetLabel> = (1..=n).map(FacetLabel::positive).collect();
    labels.extend((1..=m - 3).map(FacetLabel::negative));
    labels.push(FacetLabel::positive(m - 1));
    let chi = characteristic_function(alpha)?;
    {
        let mut a = labels.clone();
        a.sort();
        let mut b: Vec<FacetLabel> = chi.assignment().iter().map(|(l, _)| *l).collect();
        b.sort();
        assert_eq!(a, b, "cube-code facet census mismatch");
    }
    let columns: Vec<u64> = labels.iter().map(|l| chi_column(n, *l)).collect();
    let matrix = CharacteristicMatrix {
        rows: n,
        labels,
        columns,
    };
    let mut bott = vec![vec![0u8; n]; n];
    for row in bott.iter_mut().take(n - 1) {
        row[n - 1] = 1;
    }
    Ok((matrix, BottMatrix(bott)))
}

/// Cell counts of the small cover X(Q(α), χ_α): a face of dimension i
/// contributes 2^n / |stab| copies, where the stabilizer is spanned by the
/// χ-vectors of the facets containing it. The stabilizer rank always equals
/// the codimension, so c_i = f_i · 2^i; the rank is still computed and
/// checked face by face.
pub fn small_cover_cells(alpha: &LengthVector) -> Result<(Vec<u64>, i64)> {
    let chi = characteristic_function(alpha)?;
    let poset = FacePoset::build(alpha)?;
    let n = poset.dim();
    let mut counts = vec![0u64; n + 1];
    for (dim, count) in counts.iter_mut().enumerate() {
        for face in poset.faces(dim) {
            let columns: Vec<u64> = labels_of_subset(face)
                .iter()
                .map(|l| {
                    chi.column(*l).ok_or_else(|| {
                        Error::Inconsistent(format!("facet {l} missing from the assignment"))
                    })
                })
                .collect::<Result<_>>()?;
            let rank = z2_rank(&columns);
            assert_eq!(rank, n - dim, "stabilizer rank must equal codimension");
            *count += 1u64 << (n - rank);
        }
    }
    let euler = counts
        .iter()
        .enumerate()
        .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum();
    Ok((counts, euler))
}
