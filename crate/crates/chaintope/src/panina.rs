//! Regular cell structures on planar polygon spaces from cyclically ordered
//! admissible partitions.
//!
//! A cell of dimension k is a partition of [m] into k+3 cyclically ordered
//! blocks, each α-short, taken up to rotation (cyclic mode) or up to rotation
//! and reversal (bicyclic mode — the quotient by the reflection of polygons).
//! A face of a cell is an admissible coarsening that merges runs of
//! cyclically adjacent blocks; covers merge exactly one adjacent pair.
//! Canonical representative: the lexicographically least block sequence over
//! all rotations (and reversals), blocks listed as sorted index sets — the
//! block containing 1 always comes first.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice::{self, FaceLattice};
use crate::lengths::{IndexSubset, LengthVector, SubsetSums};
use crate::limits;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PaninaMode {
    Cyclic,
    Bicyclic,
}

impl fmt::Display for PaninaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PaninaMode::Cyclic => "cyclic",
            PaninaMode::Bicyclic => "bicyclic",
        })
    }
}

/// A cyclically ordered partition, stored as its canonical representative.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicPartition {
    blocks: Vec<IndexSubset>,
}

impl CyclicPartition {
    pub fn blocks(&self) -> &[IndexSubset] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn dim(&self) -> usize {
        self.blocks.len() - 3
    }
}

impl fmt::Display for CyclicPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, b) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{b}")?;
        }
        write!(f, ")")
    }
}

/// Rotate so the block containing 1 leads, then take the lex-smaller of the
/// sequence and (in bicyclic mode) its reversal.
fn canonicalize(blocks: Vec<IndexSubset>, mode: PaninaMode) -> Vec<IndexSubset> {
    let lead = blocks
        .iter()
        .position(|b| b.contains(1))
        .expect("blocks cover [m]");
    let mut rotated: Vec<IndexSubset> = Vec::with_capacity(blocks.len());
    rotated.extend_from_slice(&blocks[lead..]);
    rotated.extend_from_slice(&blocks[..lead]);
    if mode == PaninaMode::Cyclic {
        return rotated;
    }
    let mut reversed = rotated.clone();
    reversed[1..].reverse();
    if reversed < rotated {
        reversed
    } else {
        rotated
    }
}

/// The cell complex: cells grouped by dimension, with the boundary map
/// sending each cell to the facets obtained by one adjacent merge.
#[derive(Debug, Clone)]
pub struct PaninaComplex {
    m: usize,
    mode: PaninaMode,
    cells: Vec<Vec<CyclicPartition>>,
    boundaries: Vec<Vec<Vec<usize>>>,
}

impl PaninaComplex {
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn mode(&self) -> PaninaMode {
        self.mode
    }

    /// Number of cells in each dimension 0..=m−3.
    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(|c| c.len()).collect()
    }

    pub fn cells(&self, dim: usize) -> &[CyclicPartition] {
        &self.cells[dim]
    }

    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    /// Facet indices (one dimension down) of cell `i` in dimension `dim`.
    pub fn boundary(&self, dim: usize, i: usize) -> &[usize] {
        &self.boundaries[dim][i]
    }
}

/// Enumerate all admissible cells. Requires a generic vector and m within
/// the cyclic-partition cap.
pub fn enumerate_cells(alpha: &LengthVector, mode: PaninaMode) -> Result<PaninaComplex> {
    let m = alpha.m();
    limits::check(m, limits::panina_max_m())?;
    if !alpha.is_generic() {
        return Err(Error::NonGeneric);
    }
    let sums = SubsetSums::new(alpha);
    let full = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };

    // Short nonempty submasks of a pool, smallest-element-first recursion
    // is not needed; the submask walk is cheap at this scale.
    let short_submasks = |pool: u64| -> Result<Vec<u64>> {
        let mut out = Vec::new();
        let mut s = pool;
        loop {
            if s != 0 && sums.is_short(s)? {
                out.push(s);
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & pool;
        }
        Ok(out)
    };

    let mut found: Vec<std::collections::BTreeSet<Vec<IndexSubset>>> =
        vec![std::collections::BTreeSet::new(); m.saturating_sub(2)];

    // Depth-first construction of block sequences; the block containing 1
    // leads, which fixes the rotation once and for all.
    let firsts: Vec<u64> = short_submasks(full)?
        .into_iter()
        .filter(|s| s & 1 == 1)
        .collect();
    let mut stack: Vec<(Vec<u64>, u64)> = firsts
        .iter()
        .map(|&f| (vec![f], full & !f))
        .collect();
    while let Some((blocks, remaining)) = stack.pop() {
        if remaining == 0 {
            let k = blocks.len();
            if k >= 3 {
                let seq: Vec<IndexSubset> =
                    blocks.iter().map(|&b| IndexSubset::from_mask(b)).collect();
                found[k - 3].insert(canonicalize(seq, mode));
            }
            continue;
        }
        for b in short_submasks(remaining)? {
            let mut next = blocks.clone();
            next.push(b);
            stack.push((next, remaining & !b));
        }
    }

    let cells: Vec<Vec<CyclicPartition>> = found
        .into_iter()
        .map(|set| set.into_iter().map(|blocks| CyclicPartition { blocks }).collect())
        .collect();

    // boundaries: merge each cyclically adjacent pair, keep the short ones
    let mut index: Vec<HashMap<&[IndexSubset], usize>> = Vec::with_capacity(cells.len());
    for level in &cells {
        index.push(
            level
                .iter()
                .enumerate()
                .map(|(i, c)| (c.blocks.as_slice(), i))
                .collect(),
        );
    }
    let mut boundaries: Vec<Vec<Vec<usize>>> = Vec::with_capacity(cells.len());
    for (d, level) in cells.iter().enumerate() {
        let mut level_bd = Vec::with_capacity(level.len());
        for cell in level {
            let k = cell.blocks.len();
            let mut facets = Vec::new();
            if d > 0 {
                for p in 0..k {
                    let q = (p + 1) % k;
                    let merged = cell.blocks[p].union(&cell.blocks[q]);
                    if !sums.is_short(merged.mask())? {
                        continue;
                    }
                    let mut blocks: Vec<IndexSubset> = Vec::with_capacity(k - 1);
                    for (i, b) in cell.blocks.iter().enumerate() {
                        if i == p {
                            blocks.push(merged.clone());
                        } else if i != q {
                            blocks.push(b.clone());
                        }
                    }
                    let canon = canonicalize(blocks, mode);
                    facets.push(index[d - 1][canon.as_slice()]);
                }
                facets.sort_unstable();
                facets.dedup();
            }
            level_bd.push(facets);
        }
        boundaries.push(level_bd);
    }

    Ok(PaninaComplex {
        m,
        mode,
        cells,
        boundaries,
    })
}

/// Alternating sum of cell counts.
pub fn euler_characteristic(cx: &PaninaComplex) -> i64 {
    cx.cell_counts()
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopCellRecord {
    pub cell: CyclicPartition,
    pub facet_count: usize,
    pub is_cube: bool,
    pub is_flag: bool,
}

/// The face lattice of a single top cell (all-singleton cyclic order),
/// modeled by cut sets: a face keeps a subset of the m block boundaries,
/// at least three of them, with every resulting arc short. Adding a cut
/// always stays admissible, so covers add one cut.
fn top_cell_lattice(order: &[usize], sums: &SubsetSums) -> Result<FaceLattice> {
    let m = order.len();
    // cut c separates position c-1 from position c; arcs are runs of
    // positions between consecutive cuts
    let arc_short = |cuts: u64| -> Result<bool> {
        let cut_list: Vec<usize> = (0..m).filter(|&c| cuts >> c & 1 == 1).collect();
        for w in 0..cut_list.len() {
            let start = cut_list[w];
            let end = cut_list[(w + 1) % cut_list.len()];
            let mut mask = 0u64;
            let mut p = start;
            loop {
                mask |= 1u64 << (order[p] - 1);
                p = (p + 1) % m;
                if p == end {
                    break;
                }
            }
            if !sums.is_short(mask)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut by_rank: Vec<Vec<u64>> = vec![Vec::new(); m - 2];
    for cuts in 0u64..(1 << m) {
        let c = cuts.count_ones() as usize;
        if c >= 3 && arc_short(cuts)? {
            by_rank[c - 3].push(cuts);
        }
    }
    debug_assert_eq!(by_rank[m - 3], vec![(1u64 << m) - 1]);
    let mut up: Vec<Vec<Vec<u32>>> = Vec::with_capacity(m - 2);
    for (r, level) in by_rank.iter().enumerate() {
        let next: HashMap<u64, u32> = if r + 1 < m - 2 {
            by_rank[r + 1]
                .iter()
                .enumerate()
                .map(|(i, &c)| (c, i as u32))
                .collect()
        } else {
            HashMap::new()
        };
        let mut level_up = Vec::with_capacity(level.len());
        for &cuts in level {
            let mut ups = Vec::new();
            if r + 1 < m - 2 {
                for c in 0..m {
                    if cuts >> c & 1 == 0 {
                        ups.push(next[&(cuts | (1u64 << c))]);
                    }
                }
            }
            level_up.push(ups);
        }
        up.push(level_up);
    }
    Ok(FaceLattice::from_covers(
        by_rank.iter().map(|l| l.len()).collect(),
        up,
    ))
}

/// Flag test for one top cell via its merge nerve: every pairwise-compatible
/// set of single merges must extend to a common admissible coarsening.
fn top_cell_is_flag(order: &[usize], sums: &SubsetSums) -> Result<bool> {
    let m = order.len();
    // closure of a slot set: remove those cuts, check >= 3 blocks and arcs
    let closure_ok = |slots: u64| -> Result<bool> {
        let blocks = m - slots.count_ones() as usize;
        if blocks < 3 {
            return Ok(false);
        }
        let cuts = ((1u64 << m) - 1) & !slots;
        let cut_list: Vec<usize> = (0..m).filter(|&c| cuts >> c & 1 == 1).collect();
        for w in 0..cut_list.len() {
            let start = cut_list[w];
            let end = cut_list[(w + 1) % cut_list.len()];
            let mut mask = 0u64;
            let mut p = start;
            loop {
                mask |= 1u64 << (order[p] - 1);
                p = (p + 1) % m;
                if p == end {
                    break;
                }
            }
            if !sums.is_short(mask)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let slots: Vec<usize> = {
        let mut v = Vec::new();
        for s in 0..m {
            if closure_ok(1u64 << s)? {
                v.push(s);
            }
        }
        v
    };
    let n = slots.len();
    let mut adj = vec![0u64; n];
    for a in 0..n {
        for b in a + 1..n {
            if closure_ok((1u64 << slots[a]) | (1u64 << slots[b]))? {
                adj[a] |= 1 << b;
                adj[b] |= 1 << a;
            }
        }
    }
    fn dfs(
        slots: &[usize],
        adj: &[u64],
        closure_ok: &dyn Fn(u64) -> Result<bool>,
        start: usize,
        union: u64,
        allowed: u64,
    ) -> Result<bool> {
        let mut rest = allowed & !((1u64 << start) - 1) & !(1u64 << start);
        while rest != 0 {
            let f = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next = union | (1u64 << slots[f]);
            if !closure_ok(next)? {
                return Ok(false);
            }
            if !dfs(slots, adj, closure_ok, f, next, allowed & adj[f])? {
                return Ok(false);
            }
        }
        Ok(true)
    }
    for a in 0..n {
        if !dfs(&slots, &adj, &closure_ok, a, 1u64 << slots[a], adj[a])? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each top cell: its facet count, whether its face lattice is the
/// (m−3)-cube, and whether it is a flagtope. Needs m ≥ 5 for the top cells
/// to be polytopes of dimension ≥ 2.
pub fn top_cell_flag_report(
    alpha: &LengthVector,
    cx: &PaninaComplex,
) -> Result<Vec<TopCellRecord>> {
    let m = cx.m();
    if alpha.m() != m {
        return Err(Error::Inconsistent(
            "length vector and complex have different sizes".into(),
        ));
    }
    if m < 5 {
        return Err(Error::DimensionTooSmall("top-cell report needs m >= 5"));
    }
    let sums = SubsetSums::new(alpha);
    let top = cx.dim();
    let cube = FaceLattice::cube(m - 3);
    let mut out = Vec::new();
    for (i, cell) in cx.cells(top).iter().enumerate() {
        if cell.block_count() != m {
            return Err(Error::Inconsistent(
                "top cells must be all-singleton partitions".into(),
            ));
        }
        let order: Vec<usize> = cell
            .blocks()
            .iter()
            .map(|b| b.elements()[0])
            .collect();
        let lattice_below = top_cell_lattice(&order, &sums)?;
        let record = TopCellRecord {
            cell: cell.clone(),
            facet_count: cx.boundary(top, i).len(),
            is_cube: lattice::is_isomorphic(&lattice_below, &cube)?,
            is_flag: top_cell_is_flag(&order, &sums)?,
        };
        debug_assert_eq!(record.facet_count, lattice_below.facet_count());
        out.push(record);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(entries: &[i64]) -> LengthVector {
        LengthVector::from_ints(entries).unwrap()
    }

    #[test]
    fn square_chain_census() {
        let alpha = lv(&[1, 1, 1, 2]);
        let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
        assert_eq!(bi.cell_counts(), vec![3, 3]);
        assert_eq!(euler_characteristic(&bi), 0);
        // circle: every edge has two ends, every vertex degree two
        for (i, _) in bi.cells(1).iter().enumerate() {
            assert_eq!(bi.boundary(1, i).len(), 2);
        }
        let cy = enumerate_cells(&alpha, PaninaMode::Cyclic).unwrap();
        assert_eq!(cy.cell_counts(), vec![6, 6]);
    }

    #[test]
    fn equilateral_pentagon_census() {
        let alpha = lv(&[1, 1, 1, 1, 1]);
        let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
        assert_eq!(bi.cell_counts(), vec![15, 30, 12]);
        assert_eq!(euler_characteristic(&bi), -3);
        let cy = enumerate_cells(&alpha, PaninaMode::Cyclic).unwrap();
        assert_eq!(cy.cell_counts(), vec![30, 60, 24]);
    }

    #[test]
    fn pentagon_top_cells_are_pentagonal_flags() {
        let alpha = lv(&[1, 1, 1, 1, 1]);
        let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
        let report = top_cell_flag_report(&alpha, &bi).unwrap();
        assert_eq!(report.len(), 12);
        for r in &report {
            assert_eq!(r.facet_count, 5);
            assert!(r.is_flag);
            assert!(!r.is_cube);
        }
    }

    #[test]
    fn cyclic_counts_double_bicyclic() {
        for entries in [
            [1i64, 1, 1, 2].as_slice(),
            &[1, 1, 1, 1, 1],
            &[1, 2, 2, 3, 3],
            &[1, 1, 1, 1, 1, 4],
            &[1, 1, 2, 3, 3, 5],
            &[1, 1, 1, 2, 2, 2, 2],
        ] {
            let alpha = lv(entries);
            let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
            let cy = enumerate_cells(&alpha, PaninaMode::Cyclic).unwrap();
            let doubled: Vec<usize> = bi.cell_counts().iter().map(|c| 2 * c).collect();
            assert_eq!(cy.cell_counts(), doubled, "vector {entries:?}");
        }
    }

    #[test]
    fn near_equilateral_six_sides_have_no_flag_top_cells() {
        for entries in [
            [1i64, 1, 1, 1, 1, 2].as_slice(),
            &[1, 1, 1, 1, 2, 3],
            &[1, 1, 1, 1, 3, 4],
        ] {
            let alpha = lv(entries);
            let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
            let report = top_cell_flag_report(&alpha, &bi).unwrap();
            assert_eq!(report.len(), 60);
            for r in &report {
                assert!(!r.is_flag, "vector {entries:?} cell {}", r.cell);
                assert!(r.facet_count <= 6);
            }
        }
    }

    #[test]
    fn six_sides_can_have_cube_top_cells_but_never_only_cubes() {
        // (1,1,2,2,3,2) carries six top cells that are combinatorial 3-cubes
        // (f-vector (8,12,6), flag); most generic 6-vectors behave this way.
        // What always holds is the weaker statement: some top cell fails to
        // be a flagtope.
        let alpha = lv(&[1, 1, 2, 2, 3, 2]);
        let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
        let report = top_cell_flag_report(&alpha, &bi).unwrap();
        assert_eq!(report.len(), 60);
        let flags: Vec<&TopCellRecord> = report.iter().filter(|r| r.is_flag).collect();
        assert_eq!(flags.len(), 6);
        for r in &flags {
            assert!(r.is_cube);
            assert_eq!(r.facet_count, 6);
        }
        assert!(report.iter().any(|r| !r.is_flag));
    }

    #[test]
    fn top_cells_have_at_most_m_facets() {
        let alpha = lv(&[1, 1, 2, 3, 3, 5, 8]);
        assert!(alpha.is_generic());
        let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
        let report = top_cell_flag_report(&alpha, &bi).unwrap();
        assert!(!report.is_empty());
        for r in &report {
            assert!(r.facet_count <= 7);
            assert!(!r.is_flag); // 2(m-3) = 8 facets would be needed
        }
    }

    #[test]
    fn merge_face_sanity() {
        // every facet of a cell arises from exactly one adjacent merge, and
        // merging an admissible pair always lands in the complex
        let alpha = lv(&[1, 2, 2, 3, 3]);
        let bi = enumerate_cells(&alpha, PaninaMode::Bicyclic).unwrap();
        for d in 1..=bi.dim() {
            for (i, cell) in bi.cells(d).iter().enumerate() {
                assert!(bi.boundary(d, i).len() <= cell.block_count());
            }
        }
    }

    #[test]
    fn size_cap_enforced() {
        let alpha = lv(&[1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
        assert!(matches!(
            enumerate_cells(&alpha, PaninaMode::Bicyclic),
            Err(Error::SizeCap { .. })
        ));
    }

    #[test]
    fn nongeneric_rejected() {
        assert!(matches!(
            enumerate_cells(&lv(&[1, 1, 1, 1]), PaninaMode::Bicyclic),
            Err(Error::NonGeneric)
        ));
    }
}
