//! Short-code-driven classification of moment polytopes and asphericality
//! of the corresponding chain spaces.
//!
//! Four code patterns matter. Writing n = m−2 for the dimension:
//! the cube code <{1,…,m−3,m}> (and the torus code <{1,…,m−2,m}>, whose
//! polytope is also the n-cube), the pentagon-prism code
//! <{1,…,m−4,m−2,m}>, and the hexagon-prism code <{1,…,m−4,m−1,m}>.
//! A moment polytope is a flagtope exactly when its code is one of these;
//! the chain space is aspherical under the same condition. Classification
//! goes by exact code equality and is cross-checked, once per code, against
//! an independent identification path that only looks at the face lattice
//! (facet count, 2-face census, lattice isomorphism with generated
//! references). A disagreement between the two paths is a hard internal
//! error.

use std::collections::HashSet;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::lattice::{is_isomorphic, FaceLattice};
use crate::lengths::{IndexSubset, LengthVector, ShortCode};
use crate::poset::{enumerate_faces, Admissibility, FacePoset, SignedSubset};

/// Combinatorial type of the moment polytope.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolytopeClassTag {
    /// I^(m−2); arises from both the cube code and the torus code.
    Cube,
    /// Δ^(m−2), the simplex code <{m}>.
    Simplex,
    /// P₅ × I^(m−4).
    PentagonPrism,
    /// P₆ × I^(m−4).
    HexagonPrism,
    /// A code <{k,m}>: the simplex with k vertices successively truncated.
    TruncatedSimplexStep,
    /// Some 2-face is a triangle.
    NotFlag,
    Other,
}

impl fmt::Display for PolytopeClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PolytopeClassTag::Cube => "Cube",
            PolytopeClassTag::Simplex => "Simplex",
            PolytopeClassTag::PentagonPrism => "P5xI",
            PolytopeClassTag::HexagonPrism => "P6xI",
            PolytopeClassTag::TruncatedSimplexStep => "TruncatedSimplexStep",
            PolytopeClassTag::NotFlag => "NotFlag",
            PolytopeClassTag::Other => "Other",
        };
        f.write_str(s)
    }
}

/// Evidence attached to a classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClassWitness {
    /// The short code that matched a pattern.
    Code(ShortCode),
    /// A 2-face with exactly three edges.
    TriangleFace(SignedSubset),
    /// A generated reference lattice that matched (identification path only).
    Reference(&'static str),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolytopeClass {
    pub tag: PolytopeClassTag,
    /// Dimension m−2 of the polytope.
    pub dim: usize,
    pub witness: ClassWitness,
    /// Set when the match came from the torus code <{1,…,m−2,m}> rather
    /// than the cube code; the polytope is the cube either way.
    pub from_torus_code: bool,
}

/// One of the four aspherical code patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CodePattern {
    Cube,
    Torus,
    PentagonPrism,
    HexagonPrism,
}

impl fmt::Display for CodePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CodePattern::Cube => "cube",
            CodePattern::Torus => "torus",
            CodePattern::PentagonPrism => "pentagon-prism",
            CodePattern::HexagonPrism => "hexagon-prism",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsphericalityVerdict {
    pub aspherical: bool,
    pub pattern: Option<CodePattern>,
    pub matched_code: Option<ShortCode>,
}

fn prefix_code(m: usize, upto: usize, extra: &[usize]) -> ShortCode {
    let mut v: Vec<usize> = (1..=upto).collect();
    v.extend_from_slice(extra);
    v.push(m);
    ShortCode::from_sets(m, vec![IndexSubset::new(v)]).expect("pattern contains m")
}

pub fn cube_code(m: usize) -> ShortCode {
    prefix_code(m, m - 3, &[])
}

pub fn torus_code(m: usize) -> ShortCode {
    prefix_code(m, m - 2, &[])
}

pub fn pentagon_code(m: usize) -> ShortCode {
    prefix_code(m, m - 4, &[m - 2])
}

pub fn hexagon_code(m: usize) -> ShortCode {
    prefix_code(m, m - 4, &[m - 1])
}

pub fn simplex_code(m: usize) -> ShortCode {
    prefix_code(m, 0, &[])
}

/// Which of the four aspherical patterns a code matches, if any.
pub fn matched_pattern(code: &ShortCode) -> Option<CodePattern> {
    let m = code.m();
    if m < 4 {
        return None;
    }
    if *code == cube_code(m) {
        Some(CodePattern::Cube)
    } else if *code == torus_code(m) {
        Some(CodePattern::Torus)
    } else if *code == pentagon_code(m) {
        Some(CodePattern::PentagonPrism)
    } else if *code == hexagon_code(m) {
        Some(CodePattern::HexagonPrism)
    } else {
        None
    }
}

/// Find a triangular 2-face, the standard witness for a failed flag test.
fn find_triangle(alpha: &LengthVector) -> Result<Option<SignedSubset>> {
    let m = alpha.m();
    if m < 5 {
        return Ok(None);
    }
    let adm = Admissibility::new(alpha)?;
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
        if edges == 3 {
            return Ok(Some(j));
        }
    }
    Ok(None)
}

/// Classify the moment polytope by exact short-code matching. Pattern
/// matches are cross-checked (once per distinct code) against
/// `blind_blind_identify` on the face poset.
pub fn classify_flagtope(alpha: &LengthVector) -> Result<PolytopeClass> {
    let m = alpha.m();
    if m < 4 {
        return Err(Error::DimensionTooSmall("classification needs m >= 4"));
    }
    if !alpha.has_nonempty_polytope() {
        if !alpha.is_generic() {
            return Err(Error::NonGeneric);
        }
        return Err(Error::EmptyPolytope);
    }
    let code = alpha.short_code()?;
    let dim = m - 2;
    let class = if code == simplex_code(m) {
        PolytopeClass {
            tag: PolytopeClassTag::Simplex,
            dim,
            witness: ClassWitness::Code(code.clone()),
            from_torus_code: false,
        }
    } else if let Some(pattern) = matched_pattern(&code) {
        let tag = match pattern {
            CodePattern::Cube | CodePattern::Torus => PolytopeClassTag::Cube,
            CodePattern::PentagonPrism => PolytopeClassTag::PentagonPrism,
            CodePattern::HexagonPrism => PolytopeClassTag::HexagonPrism,
        };
        PolytopeClass {
            tag,
            dim,
            witness: ClassWitness::Code(code.clone()),
            from_torus_code: pattern == CodePattern::Torus,
        }
    } else if code.sets().len() == 1 && code.sets()[0].len() == 2 {
        PolytopeClass {
            tag: PolytopeClassTag::TruncatedSimplexStep,
            dim,
            witness: ClassWitness::Code(code.clone()),
            from_torus_code: false,
        }
    } else {
        match find_triangle(alpha)? {
            Some(j) => PolytopeClass {
                tag: PolytopeClassTag::NotFlag,
                dim,
                witness: ClassWitness::TriangleFace(j),
                from_torus_code: false,
            },
            None => PolytopeClass {
                tag: PolytopeClassTag::Other,
                dim,
                witness: ClassWitness::Code(code.clone()),
                from_torus_code: false,
            },
        }
    };
    cross_check(alpha, &code, class.tag)?;
    Ok(class)
}

/// Independent verification of the flag classes: for each distinct code,
/// identify the face poset by facet count, census, and lattice isomorphism,
/// and insist the result matches the code-based tag.
fn cross_check(alpha: &LengthVector, code: &ShortCode, tag: PolytopeClassTag) -> Result<()> {
    if !matches!(
        tag,
        PolytopeClassTag::Cube | PolytopeClassTag::PentagonPrism | PolytopeClassTag::HexagonPrism
    ) {
        return Ok(());
    }
    static CHECKED: OnceLock<Mutex<HashSet<(usize, String)>>> = OnceLock::new();
    let checked = CHECKED.get_or_init(|| Mutex::new(HashSet::new()));
    let key = (alpha.m(), code.to_string());
    if checked.lock().unwrap().contains(&key) {
        return Ok(());
    }
    let poset = FacePoset::build(alpha)?;
    let blind = blind_blind_identify(&poset)?;
    assert_eq!(
        blind.tag, tag,
        "code-based classification and face-lattice identification disagree \
         for code {code}"
    );
    checked.lock().unwrap().insert(key);
    Ok(())
}

/// Aspherical iff the short code matches one of the four patterns exactly.
pub fn is_aspherical(alpha: &LengthVector) -> Result<AsphericalityVerdict> {
    let m = alpha.m();
    if m < 4 {
        return Err(Error::DimensionTooSmall("asphericality needs m >= 4"));
    }
    let code = alpha.short_code()?;
    let pattern = matched_pattern(&code);
    Ok(AsphericalityVerdict {
        aspherical: pattern.is_some(),
        pattern,
        matched_code: pattern.map(|_| code),
    })
}

fn reference_lattice(kind: &str, n: usize) -> Option<FaceLattice> {
    let prism = |gon: usize, k: usize| {
        FaceLattice::product(&FaceLattice::polygon(gon), &FaceLattice::cube(k))
    };
    match kind {
        "cube" => Some(FaceLattice::cube(n)),
        "p5i" if n >= 2 => Some(prism(5, n - 2)),
        "p6i" if n >= 2 => Some(prism(6, n - 2)),
        "qi" if n >= 3 => Some(FaceLattice::product(
            &FaceLattice::truncated_pentagonal_prism(),
            &FaceLattice::cube(n - 3),
        )),
        "p5p5i" if n >= 4 => Some(FaceLattice::product(
            &FaceLattice::product(&FaceLattice::polygon(5), &FaceLattice::polygon(5)),
            &FaceLattice::cube(n - 4),
        )),
        _ => None,
    }
}

/// Identify a simple triangle-free lattice among the small-facet-count
/// possibilities: 2n facets forces the cube, 2n+1 the pentagonal prism
/// family, 2n+2 one of hexagon prism, edge-truncated pentagonal prism
/// family, or the product of two pentagons; anything else is `Other`.
pub fn blind_blind_identify(fp: &FacePoset) -> Result<PolytopeClass> {
    let n = fp.dim();
    let lat = FaceLattice::from(fp);
    // simplicity: every vertex lies on exactly n facets
    if n >= 1 {
        let facets = fp.faces(n - 1);
        for v in fp.faces(0) {
            let on = facets.iter().filter(|f| f.is_contained_in(v)).count();
            if on != n {
                return Err(Error::NotSimple);
            }
        }
    }
    if n >= 2 {
        let census = lat.two_face_census();
        if census.keys().next().is_some_and(|&k| k < 4) {
            return Err(Error::NotTriangleFree);
        }
    }
    let c = lat.facet_count();
    let dim = n;
    let identified = |tag, witness| {
        Ok(PolytopeClass {
            tag,
            dim,
            witness,
            from_torus_code: false,
        })
    };
    if c == 2 * n {
        if is_isomorphic(&lat, &FaceLattice::cube(n))? {
            return identified(PolytopeClassTag::Cube, ClassWitness::Reference("I^n"));
        }
    } else if c == 2 * n + 1 {
        if let Some(r) = reference_lattice("p5i", n) {
            if is_isomorphic(&lat, &r)? {
                return identified(
                    PolytopeClassTag::PentagonPrism,
                    ClassWitness::Reference("P5xI^(n-2)"),
                );
            }
        }
    } else if c == 2 * n + 2 {
        let census = lat.two_face_census();
        let hexagons = census.get(&6).copied().unwrap_or(0);
        let pentagons = census.get(&5).copied().unwrap_or(0);
        if hexagons > 0 {
            if let Some(r) = reference_lattice("p6i", n) {
                if is_isomorphic(&lat, &r)? {
                    return identified(
                        PolytopeClassTag::HexagonPrism,
                        ClassWitness::Reference("P6xI^(n-2)"),
                    );
                }
            }
        } else if pentagons == 4 * (1 << n.saturating_sub(3)) {
            if let Some(r) = reference_lattice("qi", n) {
                if is_isomorphic(&lat, &r)? {
                    return identified(PolytopeClassTag::Other, ClassWitness::Reference("QxI^(n-3)"));
                }
            }
        } else if let Some(r) = reference_lattice("p5p5i", n) {
            if is_isomorphic(&lat, &r)? {
                return identified(
                    PolytopeClassTag::Other,
                    ClassWitness::Reference("P5xP5xI^(n-4)"),
                );
            }
        }
    }
    identified(PolytopeClassTag::Other, ClassWitness::None)
}
