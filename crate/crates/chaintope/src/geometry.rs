//! Exact H- and V-representations of the moment polytope and its
//! full-dimensional model.
//!
//! P(α) is the box ∏ [−α_i, α_i] over the m−1 side directions sliced by the
//! hyperplane Σ x_i = α_m. Q(α) drops the last coordinate and is cut out by
//! the box over the first m−2 directions together with
//! α_m − α_{m−1} ≤ Σ x_i (≤ α_m + α_{m−1} when {m−1,m} is short).
//! Facet labels follow the admissible-subset dictionary: −j is the lower
//! wall x_j = −α_j (a facet iff {j,m} is short), +j the upper wall
//! x_j = +α_j (a facet iff {j} is short); ±(m−1) become the two
//! hyperplane-shift facets of Q(α). Box inequalities that support no facet
//! are kept but left unlabeled so the oracle can still use the full box.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::lattice::{self, FaceLattice};
use crate::lengths::{parse_rational, LengthVector, Rational};
use crate::limits;
use crate::poset::{enumerate_faces, Admissibility, FacePoset, SignedSubset};

/// Signed facet name: +j for the upper wall of direction j, −j for the lower
/// wall; |j| = m−1 names the hyperplane-shift facets of Q(α).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FacetLabel(i32);

impl FacetLabel {
    pub fn positive(j: usize) -> Self {
        FacetLabel(j as i32)
    }

    pub fn negative(j: usize) -> Self {
        FacetLabel(-(j as i32))
    }

    pub fn index(&self) -> usize {
        self.0.unsigned_abs() as usize
    }

    pub fn is_positive(&self) -> bool {
        self.0 > 0
    }
}

impl fmt::Display for FacetLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 > 0 {
            write!(f, "+{}", self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for FacetLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let v: i32 = s
            .trim_start_matches('+')
            .parse()
            .map_err(|_| Error::Parse(format!("bad facet label `{s}`")))?;
        if v == 0 {
            return Err(Error::Parse("facet label must be nonzero".into()));
        }
        Ok(FacetLabel(v))
    }
}

/// One inequality ⟨normal, x⟩ ≤ offset. A row without a label supports no
/// facet (it is implied by the rest) but is retained for the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceRow {
    pub normal: Vec<Rational>,
    pub offset: Rational,
    pub label: Option<FacetLabel>,
}

impl HalfspaceRow {
    pub fn is_redundant(&self) -> bool {
        self.label.is_none()
    }
}

/// Exact H-representation: inequalities ⟨n,x⟩ ≤ b plus equalities ⟨n,x⟩ = b.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfspaceSystem {
    pub ambient_dim: usize,
    pub inequalities: Vec<HalfspaceRow>,
    pub equalities: Vec<(Vec<Rational>, Rational)>,
}

impl HalfspaceSystem {
    fn validate(&self) -> Result<()> {
        let mut labels: Vec<FacetLabel> = Vec::new();
        for row in &self.inequalities {
            if row.normal.len() != self.ambient_dim || row.normal.iter().all(|c| c.is_zero()) {
                return Err(Error::Inconsistent("bad inequality normal".into()));
            }
            if let Some(l) = row.label {
                labels.push(l);
            }
        }
        labels.sort();
        let before = labels.len();
        labels.dedup();
        if labels.len() != before {
            return Err(Error::Inconsistent("duplicate facet labels".into()));
        }
        Ok(())
    }

    pub fn facet_labels(&self) -> Vec<FacetLabel> {
        self.inequalities.iter().filter_map(|r| r.label).collect()
    }

    pub fn facet_count(&self) -> usize {
        self.inequalities.iter().filter(|r| r.label.is_some()).count()
    }

    /// The system restricted to rows that support facets.
    pub fn facet_subsystem(&self) -> HalfspaceSystem {
        HalfspaceSystem {
            ambient_dim: self.ambient_dim,
            inequalities: self
                .inequalities
                .iter()
                .filter(|r| r.label.is_some())
                .cloned()
                .collect(),
            equalities: self.equalities.clone(),
        }
    }

    /// Does the point satisfy every constraint?
    pub fn contains(&self, point: &[Rational]) -> bool {
        if point.len() != self.ambient_dim {
            return false;
        }
        let dot = |n: &[Rational]| -> Rational {
            n.iter().zip(point).map(|(a, b)| a * b).sum()
        };
        self.inequalities.iter().all(|r| dot(&r.normal) <= r.offset)
            && self.equalities.iter().all(|(n, b)| dot(n) == *b)
    }

    /// Labels of the facet rows the point lies on.
    pub fn active_labels(&self, point: &[Rational]) -> Vec<FacetLabel> {
        let dot = |n: &[Rational]| -> Rational {
            n.iter().zip(point).map(|(a, b)| a * b).sum()
        };
        self.inequalities
            .iter()
            .filter(|r| r.label.is_some() && dot(&r.normal) == r.offset)
            .map(|r| r.label.unwrap())
            .collect()
    }

    /// cdd-style text export. Equality rows come first and are listed on the
    /// `linearity` line; a leading comment preserves the facet labels
    /// (`_` marks an unlabeled row).
    pub fn to_ine(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let fmt_q = |q: &Rational| -> String {
            if q.denom() == &num_bigint::BigInt::from(1) {
                q.numer().to_string()
            } else {
                format!("{}/{}", q.numer(), q.denom())
            }
        };
        let mut labels: Vec<String> = self.equalities.iter().map(|_| "_".to_string()).collect();
        labels.extend(
            self.inequalities
                .iter()
                .map(|r| r.label.map_or("_".to_string(), |l| l.to_string())),
        );
        writeln!(out, "* labels: {}", labels.join(" ")).unwrap();
        writeln!(out, "H-representation").unwrap();
        if !self.equalities.is_empty() {
            let idx: Vec<String> = (1..=self.equalities.len()).map(|i| i.to_string()).collect();
            writeln!(out, "linearity {} {}", self.equalities.len(), idx.join(" ")).unwrap();
        }
        writeln!(out, "begin").unwrap();
        let rows = self.equalities.len() + self.inequalities.len();
        writeln!(out, " {} {} rational", rows, self.ambient_dim + 1).unwrap();
        let mut write_row = |normal: &[Rational], offset: &Rational| {
            let mut row = vec![fmt_q(offset)];
            row.extend(normal.iter().map(|c| fmt_q(&(-c))));
            writeln!(out, " {}", row.join(" ")).unwrap();
        };
        for (n, b) in &self.equalities {
            write_row(n, b);
        }
        for r in &self.inequalities {
            write_row(&r.normal, &r.offset);
        }
        out.push_str("end\n");
        out
    }

    /// Parse the export format back. Rows named on the `linearity` line
    /// become equalities; the label comment, when present, restores facet
    /// labels.
    pub fn parse_ine(text: &str) -> Result<HalfspaceSystem> {
        let mut labels: Option<Vec<String>> = None;
        let mut lines = text.lines().peekable();
        let mut linearity: Vec<usize> = Vec::new();
        let mut header_seen = false;
        for line in lines.by_ref() {
            let t = line.trim();
            if t.starts_with('*') {
                if let Some(rest) = t.strip_prefix("* labels:") {
                    labels = Some(rest.split_whitespace().map(|s| s.to_string()).collect());
                }
                continue;
            }
            if t == "H-representation" {
                header_seen = true;
                continue;
            }
            if let Some(rest) = t.strip_prefix("linearity") {
                let nums: Vec<usize> = rest
                    .split_whitespace()
                    .map(|s| s.parse().map_err(|_| Error::Parse("bad linearity".into())))
                    .collect::<Result<_>>()?;
                if nums.is_empty() || nums.len() != nums[0] + 1 {
                    return Err(Error::Parse("malformed linearity line".into()));
                }
                linearity = nums[1..].to_vec();
                continue;
            }
            if t == "begin" {
                break;
            }
            if !t.is_empty() {
                return Err(Error::Parse(format!("unexpected line `{t}`")));
            }
        }
        if !header_seen {
            return Err(Error::Parse("missing H-representation header".into()));
        }
        let size_line = lines.next().ok_or_else(|| Error::Parse("missing size line".into()))?;
        let parts: Vec<&str> = size_line.split_whitespace().collect();
        if parts.len() != 3 || parts[2] != "rational" {
            return Err(Error::Parse("size line must be `rows cols rational`".into()));
        }
        let rows: usize = parts[0].parse().map_err(|_| Error::Parse("bad row count".into()))?;
        let cols: usize = parts[1].parse().map_err(|_| Error::Parse("bad col count".into()))?;
        let dim = cols - 1;
        let mut equalities = Vec::new();
        let mut inequalities = Vec::new();
        for r in 0..rows {
            let line = lines.next().ok_or_else(|| Error::Parse("missing row".into()))?;
            let nums: Vec<Rational> = line
                .split_whitespace()
                .map(parse_rational)
                .collect::<Result<_>>()?;
            if nums.len() != cols {
                return Err(Error::Parse(format!("row {} has wrong width", r + 1)));
            }
            let offset = nums[0].clone();
            let normal: Vec<Rational> = nums[1..].iter().map(|c| -c).collect();
            if linearity.contains(&(r + 1)) {
                equalities.push((normal, offset));
            } else {
                let label = match &labels {
                    Some(ls) => {
                        let tag = ls
                            .get(r)
                            .ok_or_else(|| Error::Parse("label comment too short".into()))?;
                        if tag == "_" {
                            None
                        } else {
                            Some(tag.parse::<FacetLabel>()?)
                        }
                    }
                    None => None,
                };
                inequalities.push(HalfspaceRow { normal, offset, label });
            }
        }
        match lines.next().map(str::trim) {
            Some("end") => {}
            _ => return Err(Error::Parse("missing end line".into())),
        }
        let system = HalfspaceSystem {
            ambient_dim: dim,
            inequalities,
            equalities,
        };
        system.validate()?;
        Ok(system)
    }
}

/// A vertex with its exact coordinates and the signed subset that pins it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPoint {
    pub coordinates: Vec<Rational>,
    pub label: SignedSubset,
}

fn unit(dim: usize, i: usize, sign: i64) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); dim];
    v[i] = Rational::from_integer(sign.into());
    v
}

fn ones(dim: usize, sign: i64) -> Vec<Rational> {
    vec![Rational::from_integer(sign.into()); dim]
}

fn checked_oracle(alpha: &LengthVector) -> Result<Admissibility> {
    limits::check(alpha.m(), limits::structural_max_m())?;
    let adm = Admissibility::new(alpha)?;
    adm.require_nonempty()?;
    Ok(adm)
}

/// H-representation of P(α): the side box with the anchor hyperplane as an
/// equality. Rows that support no facet carry no label.
pub fn moment_hrep(alpha: &LengthVector) -> Result<HalfspaceSystem> {
    let adm = checked_oracle(alpha)?;
    let m = alpha.m();
    let dim = m - 1;
    let mut inequalities = Vec::with_capacity(2 * dim);
    for i in 1..=dim {
        let single = 1u64 << (i - 1);
        let upper_facet = adm.sums.is_short(single)?;
        inequalities.push(HalfspaceRow {
            normal: unit(dim, i - 1, 1),
            offset: alpha.entry(i).clone(),
            label: upper_facet.then(|| FacetLabel::positive(i)),
        });
    }
    for i in 1..=dim {
        let pair = (1u64 << (i - 1)) | (1u64 << (m - 1));
        let lower_facet = adm.sums.is_short(pair)?;
        inequalities.push(HalfspaceRow {
            normal: unit(dim, i - 1, -1),
            offset: alpha.entry(i).clone(),
            label: lower_facet.then(|| FacetLabel::negative(i)),
        });
    }
    let system = HalfspaceSystem {
        ambient_dim: dim,
        inequalities,
        equalities: vec![(ones(dim, 1), alpha.anchor().clone())],
    };
    system.validate()?;
    Ok(system)
}

/// H-representation of the full-dimensional model Q(α) in dimension m−2.
/// The lower hyperplane bound Σ x ≥ α_m − α_{m−1} is always present (labeled
/// +(m−1) when {m−1} is short); the upper bound Σ x ≤ α_m + α_{m−1} is
/// written only when {m−1,m} is short, where it is the facet −(m−1).
pub fn reduced_hrep(alpha: &LengthVector) -> Result<HalfspaceSystem> {
    let adm = checked_oracle(alpha)?;
    let m = alpha.m();
    let dim = m - 2;
    let mut inequalities = Vec::new();
    for i in 1..=dim {
        let upper_facet = adm.sums.is_short(1u64 << (i - 1))?;
        inequalities.push(HalfspaceRow {
            normal: unit(dim, i - 1, 1),
            offset: alpha.entry(i).clone(),
            label: upper_facet.then(|| FacetLabel::positive(i)),
        });
    }
    let last = 1u64 << (m - 2);
    let anchor = 1u64 << (m - 1);
    let hbar_facet = adm.sums.is_short(last)?;
    inequalities.push(HalfspaceRow {
        normal: ones(dim, -1),
        offset: alpha.entry(m - 1) - alpha.anchor(),
        label: hbar_facet.then(|| FacetLabel::positive(m - 1)),
    });
    for i in 1..=dim {
        let lower_facet = adm.sums.is_short((1u64 << (i - 1)) | anchor)?;
        inequalities.push(HalfspaceRow {
            normal: unit(dim, i - 1, -1),
            offset: alpha.entry(i).clone(),
            label: lower_facet.then(|| FacetLabel::negative(i)),
        });
    }
    if adm.sums.is_short(last | anchor)? {
        inequalities.push(HalfspaceRow {
            normal: ones(dim, 1),
            offset: alpha.anchor() + alpha.entry(m - 1),
            label: Some(FacetLabel::negative(m - 1)),
        });
    }
    let system = HalfspaceSystem {
        ambient_dim: dim,
        inequalities,
        equalities: Vec::new(),
    };
    system.validate()?;
    Ok(system)
}

fn vertex_coordinates(alpha: &LengthVector, j: &SignedSubset) -> Vec<Rational> {
    let m = alpha.m();
    let mut free = None;
    let mut coords = Vec::with_capacity(m - 1);
    for i in 1..m {
        if j.j1().contains(i) {
            coords.push(-alpha.entry(i));
        } else if j.j2bar().contains(i) {
            coords.push(alpha.entry(i).clone());
        } else {
            debug_assert!(free.is_none());
            free = Some(i);
            coords.push(Rational::zero());
        }
    }
    let free = free.expect("a vertex pins all but one direction");
    let mut value = alpha.anchor().clone();
    for &i in j.j1().elements() {
        value += alpha.entry(i);
    }
    for &i in j.j2bar().elements() {
        value -= alpha.entry(i);
    }
    coords[free - 1] = value;
    coords
}

/// Vertices of P(α): one per admissible signed subset of cardinality m−2,
/// in canonical label order. Coordinates follow the facet dictionary, with
/// the single free coordinate taking the folded value α_m + α_{J₁} − α_{J₂}.
pub fn vertices(alpha: &LengthVector) -> Result<Vec<VertexPoint>> {
    checked_oracle(alpha)?;
    let m = alpha.m();
    Ok(enumerate_faces(alpha, m - 2)?
        .into_iter()
        .map(|j| VertexPoint {
            coordinates: vertex_coordinates(alpha, &j),
            label: j,
        })
        .collect())
}

/// Vertices of the projected model Q(α): the last coordinate is dropped.
pub fn reduced_vertices(alpha: &LengthVector) -> Result<Vec<VertexPoint>> {
    Ok(vertices(alpha)?
        .into_iter()
        .map(|mut v| {
            v.coordinates.pop();
            v
        })
        .collect())
}

/// Independent geometric oracle: intersect every edge of the side box with
/// the anchor hyperplane and keep strict-interior crossings. The result must
/// equal the coordinate set of `vertices`.
pub fn oracle_vertices(alpha: &LengthVector) -> Result<Vec<Vec<Rational>>> {
    checked_oracle(alpha)?;
    let m = alpha.m();
    let dim = m - 1;
    let mut found: Vec<Vec<Rational>> = Vec::new();
    for k in 1..=dim {
        let others: Vec<usize> = (1..=dim).filter(|&i| i != k).collect();
        for mask in 0u64..(1 << others.len()) {
            let mut point: Vec<Rational> = vec![Rational::zero(); dim];
            let mut rest_sum = Rational::zero();
            for (b, &i) in others.iter().enumerate() {
                let signed = if mask & (1 << b) != 0 {
                    alpha.entry(i).clone()
                } else {
                    -alpha.entry(i)
                };
                rest_sum += &signed;
                point[i - 1] = signed;
            }
            let xk = alpha.anchor() - &rest_sum;
            if xk > -alpha.entry(k) && xk < *alpha.entry(k) {
                point[k - 1] = xk;
                found.push(point);
            }
        }
    }
    found.sort();
    found.dedup();
    Ok(found)
}

/// (f₀, …, f_{m−3}) of the moment polytope.
pub fn f_vector(alpha: &LengthVector) -> Result<Vec<usize>> {
    Ok(FacePoset::build(alpha)?.f_vector())
}

/// Every 2-face has at least four edges. Needs m ≥ 5 so that 2-faces are
/// proper.
pub fn is_triangle_free(alpha: &LengthVector) -> Result<bool> {
    let m = alpha.m();
    if m < 5 {
        return Err(Error::DimensionTooSmall("triangle-freeness needs m >= 5"));
    }
    let adm = checked_oracle(alpha)?;
    for j in enumerate_faces(alpha, m - 4)? {
        let (m1, m2) = j.masks();
        let mut edges = 0;
        for i in 1..m {
            let bit = 1u64 << (i - 1);
            if (m1 | m2) & bit != 0 {
                continue;
            }
            if adm.shortness_criterion(m1 | bit, m2)? {
                edges += 1;
            }
            if adm.shortness_criterion(m1, m2 | bit)? {
                edges += 1;
            }
        }
        if edges < 4 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Flagtope test via the facet nerve: every set of pairwise-intersecting
/// facets must have a common face. Equivalently, every clique of the
/// facet-intersection graph must union to an admissible signed subset, so
/// all minimal non-faces of the nerve have two elements.
pub fn is_flagtope(alpha: &LengthVector) -> Result<bool> {
    let m = alpha.m();
    if m < 4 {
        return Err(Error::DimensionTooSmall("flag test needs m >= 4"));
    }
    let adm = checked_oracle(alpha)?;
    let facets: Vec<(u64, u64)> = enumerate_faces(alpha, 1)?
        .iter()
        .map(|j| j.masks())
        .collect();
    let n = facets.len();
    assert!(n <= 64, "facet count bounded by 2(m-1)");
    // adjacency: facets whose union is an admissible pair
    let mut adj = vec![0u64; n];
    for a in 0..n {
        for b in a + 1..n {
            let u1 = facets[a].0 | facets[b].0;
            let u2 = facets[a].1 | facets[b].1;
            if u1 & u2 == 0 && adm.shortness_criterion(u1, u2)? {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    // DFS over cliques: extending a clique whose union is admissible by a
    // pairwise-compatible facet must stay admissible, or the clique family
    // witnesses a minimal non-face of size >= 3.
    fn dfs(
        adm: &Admissibility,
        facets: &[(u64, u64)],
        adj: &[u64],
        start: usize,
        u1: u64,
        u2: u64,
        allowed: u64,
    ) -> Result<bool> {
        let mut rest = allowed & !((1u64 << start) - 1) & !(1u64 << start);
        while rest != 0 {
            let f = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let n1 = u1 | facets[f].0;
            let n2 = u2 | facets[f].1;
            if n1 & n2 != 0 || !adm.shortness_criterion(n1, n2)? {
                return Ok(false);
            }
            if !dfs(adm, facets, adj, f, n1, n2, allowed & adj[f])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    for a in 0..n {
        if !dfs(&adm, &facets, &adj, a, facets[a].0, facets[a].1, adj[a])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Graded-lattice isomorphism of two face posets.
pub fn face_lattice_isomorphic(a: &FacePoset, b: &FacePoset) -> Result<bool> {
    lattice::is_isomorphic(&FaceLattice::from(a), &FaceLattice::from(b))
}
