//! Abstract graded face lattices, reference polytope generators, and
//! graded-poset isomorphism by color refinement with backtracking.
//!
//! A `FaceLattice` stores the nonempty faces of a polytope by rank
//! (rank = dimension, the polytope itself included on top) together with the
//! covering relations. This is the common currency for comparing a computed
//! face poset against combinatorially generated references.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poset::FacePoset;

/// Hard limit for isomorphism testing.
pub const ISO_MAX_ELEMENTS: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceLattice {
    rank_sizes: Vec<usize>,
    up: Vec<Vec<Vec<u32>>>,
    down: Vec<Vec<Vec<u32>>>,
}

impl FaceLattice {
    /// Build from upward covers; downward covers are derived. `up` must have
    /// one (possibly empty) list per element of each rank, with indices into
    /// the next rank.
    pub fn from_covers(rank_sizes: Vec<usize>, up: Vec<Vec<Vec<u32>>>) -> Self {
        assert_eq!(rank_sizes.len(), up.len());
        let mut down: Vec<Vec<Vec<u32>>> = rank_sizes.iter().map(|&n| vec![Vec::new(); n]).collect();
        for (r, level) in up.iter().enumerate() {
            assert_eq!(level.len(), rank_sizes[r]);
            for (i, ups) in level.iter().enumerate() {
                for &j in ups {
                    down[r + 1][j as usize].push(i as u32);
                }
            }
        }
        let mut up = up;
        for level in up.iter_mut() {
            for l in level.iter_mut() {
                l.sort_unstable();
            }
        }
        for level in down.iter_mut() {
            for l in level.iter_mut() {
                l.sort_unstable();
            }
        }
        FaceLattice { rank_sizes, up, down }
    }

    /// Dimension of the polytope the lattice describes.
    pub fn dim(&self) -> usize {
        self.rank_sizes.len() - 1
    }

    pub fn rank_sizes(&self) -> &[usize] {
        &self.rank_sizes
    }

    /// Proper-face counts (f₀, …, f_{d−1}).
    pub fn f_vector(&self) -> Vec<usize> {
        self.rank_sizes[..self.dim()].to_vec()
    }

    pub fn facet_count(&self) -> usize {
        if self.dim() == 0 {
            0
        } else {
            self.rank_sizes[self.dim() - 1]
        }
    }

    pub fn total(&self) -> usize {
        self.rank_sizes.iter().sum()
    }

    pub fn up(&self, rank: usize, i: usize) -> &[u32] {
        &self.up[rank][i]
    }

    pub fn down(&self, rank: usize, i: usize) -> &[u32] {
        &self.down[rank][i]
    }

    /// Number of edges on each 2-face, as a sorted census `gon-size → count`.
    /// Empty for polytopes of dimension < 2.
    pub fn two_face_census(&self) -> BTreeMap<usize, usize> {
        let mut census = BTreeMap::new();
        if self.rank_sizes.len() > 2 {
            for f in &self.down[2] {
                *census.entry(f.len()).or_insert(0) += 1;
            }
        }
        census
    }

    /// The single point (a 0-polytope).
    pub fn point() -> Self {
        FaceLattice::from_covers(vec![1], vec![vec![Vec::new()]])
    }

    /// A segment: two vertices under one edge.
    pub fn segment() -> Self {
        FaceLattice::from_covers(vec![2, 1], vec![vec![vec![0], vec![0]], vec![Vec::new()]])
    }

    /// A k-gon, k >= 3.
    pub fn polygon(k: usize) -> Self {
        assert!(k >= 3);
        let mut v_up = Vec::with_capacity(k);
        for i in 0..k {
            // vertex i lies on edges i-1 and i (edge i joins vertices i, i+1)
            let prev = ((i + k - 1) % k) as u32;
            v_up.push(vec![prev, i as u32]);
        }
        let e_up = vec![vec![0u32]; k];
        FaceLattice::from_covers(vec![k, k, 1], vec![v_up, e_up, vec![Vec::new()]])
    }

    /// The d-simplex: faces are the nonempty subsets of d+1 vertices.
    pub fn simplex(d: usize) -> Self {
        let n = d + 1;
        // rank r: (r+1)-subsets of [n], ordered by their bitmask value
        let mut by_rank: Vec<Vec<u32>> = vec![Vec::new(); n];
        for mask in 1u32..(1 << n) {
            by_rank[mask.count_ones() as usize - 1].push(mask);
        }
        let mut up = Vec::with_capacity(n);
        for r in 0..n {
            let next: BTreeMap<u32, u32> = if r + 1 < n {
                by_rank[r + 1]
                    .iter()
                    .enumerate()
                    .map(|(i, &m)| (m, i as u32))
                    .collect()
            } else {
                BTreeMap::new()
            };
            let level = by_rank[r]
                .iter()
                .map(|&mask| {
                    let mut ups = Vec::new();
                    if r + 1 < n {
                        for b in 0..n {
                            if mask & (1 << b) == 0 {
                                ups.push(next[&(mask | (1 << b))]);
                            }
                        }
                    }
                    ups
                })
                .collect();
            up.push(level);
        }
        FaceLattice::from_covers(by_rank.iter().map(|l| l.len()).collect(), up)
    }

    /// The d-cube as an iterated product of segments.
    pub fn cube(d: usize) -> Self {
        let mut out = FaceLattice::point();
        for _ in 0..d {
            out = FaceLattice::product(&out, &FaceLattice::segment());
        }
        out
    }

    /// Product polytope: faces are pairs of faces, rank-additive.
    pub fn product(a: &FaceLattice, b: &FaceLattice) -> Self {
        let dim = a.dim() + b.dim();
        // index pairs (ra, ia, rb, ib) by rank
        let mut ids: Vec<BTreeMap<(usize, u32, usize, u32), u32>> = vec![BTreeMap::new(); dim + 1];
        for ra in 0..=a.dim() {
            for rb in 0..=b.dim() {
                let r = ra + rb;
                for ia in 0..a.rank_sizes[ra] {
                    for ib in 0..b.rank_sizes[rb] {
                        let id = ids[r].len() as u32;
                        ids[r].insert((ra, ia as u32, rb, ib as u32), id);
                    }
                }
            }
        }
        let rank_sizes: Vec<usize> = ids.iter().map(|m| m.len()).collect();
        let mut up: Vec<Vec<Vec<u32>>> = rank_sizes.iter().map(|&n| vec![Vec::new(); n]).collect();
        for (r, level) in ids.iter().enumerate() {
            for (&(ra, ia, rb, ib), &id) in level {
                let mut ups = Vec::new();
                for &ua in a.up(ra, ia as usize) {
                    ups.push(ids[r + 1][&(ra + 1, ua, rb, ib)]);
                }
                for &ub in b.up(rb, ib as usize) {
                    ups.push(ids[r + 1][&(ra, ia, rb + 1, ub)]);
                }
                up[r][id as usize] = ups;
            }
        }
        FaceLattice::from_covers(rank_sizes, up)
    }

    /// Build a simple 3-polytope lattice from facet vertex-sets. Every vertex
    /// must lie on exactly three facets and facet pairs must meet in zero or
    /// two vertices (the edge condition for simple 3-polytopes).
    pub fn from_facet_incidence_3d(num_vertices: usize, facets: &[Vec<usize>]) -> Self {
        for v in 0..num_vertices {
            let deg = facets.iter().filter(|f| f.contains(&v)).count();
            assert_eq!(deg, 3, "vertex {v} lies on {deg} facets, expected 3");
        }
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for i in 0..facets.len() {
            for j in i + 1..facets.len() {
                let common: Vec<usize> = facets[i]
                    .iter()
                    .copied()
                    .filter(|v| facets[j].contains(v))
                    .collect();
                match common.len() {
                    0 => {}
                    2 => edges.push((common[0].min(common[1]), common[0].max(common[1]))),
                    n => panic!("facets {i},{j} share {n} vertices"),
                }
            }
        }
        edges.sort_unstable();
        edges.dedup();
        let v_up: Vec<Vec<u32>> = (0..num_vertices)
            .map(|v| {
                edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.0 == v || e.1 == v)
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        let e_up: Vec<Vec<u32>> = edges
            .iter()
            .map(|e| {
                facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.contains(&e.0) && f.contains(&e.1))
                    .map(|(i, _)| i as u32)
                    .collect()
            })
            .collect();
        let f_up = vec![vec![0u32]; facets.len()];
        FaceLattice::from_covers(
            vec![num_vertices, edges.len(), facets.len(), 1],
            vec![v_up, e_up, f_up, vec![Vec::new()]],
        )
    }

    /// The 3-polytope obtained from a pentagonal prism by truncating one edge
    /// of a pentagonal facet: 12 vertices, 18 edges, 8 facets (four pentagons
    /// and four quadrilaterals).
    pub fn truncated_pentagonal_prism() -> Self {
        // vertices 0..=4: bottom remnant (p2b, p3b, p4b, w1, w2),
        // 5..=9: top pentagon, 10, 11: cut points on the former verticals.
        let facets: Vec<Vec<usize>> = vec![
            vec![0, 1, 2, 3, 4],   // bottom pentagon
            vec![5, 6, 7, 8, 9],   // top pentagon
            vec![10, 11, 6, 5],    // square above the truncated edge
            vec![4, 0, 7, 6, 11],  // side pentagon
            vec![0, 1, 8, 7],      // side square
            vec![1, 2, 9, 8],      // side square
            vec![2, 3, 10, 5, 9],  // side pentagon
            vec![3, 4, 11, 10],    // truncation square
        ];
        FaceLattice::from_facet_incidence_3d(12, &facets)
    }
}

impl From<&FacePoset> for FaceLattice {
    fn from(p: &FacePoset) -> Self {
        let d = p.dim();
        let rank_sizes: Vec<usize> = (0..=d).map(|r| p.faces(r).len()).collect();
        let up: Vec<Vec<Vec<u32>>> = (0..=d)
            .map(|r| {
                (0..p.faces(r).len())
                    .map(|i| p.covers_up(r, i).iter().map(|&x| x as u32).collect())
                    .collect()
            })
            .collect();
        FaceLattice::from_covers(rank_sizes, up)
    }
}

/// Decide graded-poset isomorphism. Colors start as ranks and are refined by
/// the multisets of neighbor colors; ambiguities are resolved by
/// individualization with backtracking.
pub fn is_isomorphic(a: &FaceLattice, b: &FaceLattice) -> Result<bool> {
    if a.total() > ISO_MAX_ELEMENTS || b.total() > ISO_MAX_ELEMENTS {
        return Err(Error::TooLarge(ISO_MAX_ELEMENTS));
    }
    if a.rank_sizes != b.rank_sizes {
        return Ok(false);
    }
    let ctx = IsoContext::new(a, b);
    let (ca, cb) = ctx.initial_colors();
    Ok(ctx.matches(ca, cb))
}

struct IsoContext<'a> {
    a: &'a FaceLattice,
    b: &'a FaceLattice,
    offsets: Vec<usize>,
    n: usize,
}

impl<'a> IsoContext<'a> {
    fn new(a: &'a FaceLattice, b: &'a FaceLattice) -> Self {
        let mut offsets = Vec::with_capacity(a.rank_sizes.len());
        let mut n = 0;
        for &s in &a.rank_sizes {
            offsets.push(n);
            n += s;
        }
        IsoContext { a, b, offsets, n }
    }

    fn initial_colors(&self) -> (Vec<u32>, Vec<u32>) {
        let mut c = vec![0u32; self.n];
        for (r, &s) in self.a.rank_sizes.iter().enumerate() {
            for i in 0..s {
                c[self.offsets[r] + i] = r as u32;
            }
        }
        (c.clone(), c)
    }

    fn locate(&self, g: usize) -> (usize, usize) {
        let r = match self.offsets.binary_search(&g) {
            Ok(r) => r,
            Err(r) => r - 1,
        };
        (r, g - self.offsets[r])
    }

    fn signature(&self, lat: &FaceLattice, colors: &[u32], g: usize) -> (u32, Vec<u32>, Vec<u32>) {
        let (r, i) = self.locate(g);
        let mut ups: Vec<u32> = lat
            .up(r, i)
            .iter()
            .map(|&j| colors[self.offsets[r + 1] + j as usize])
            .collect();
        ups.sort_unstable();
        let mut downs: Vec<u32> = lat
            .down(r, i)
            .iter()
            .map(|&j| colors[self.offsets[r - 1] + j as usize])
            .collect();
        downs.sort_unstable();
        (colors[g], ups, downs)
    }

    /// One refinement round on both lattices with a shared signature
    /// dictionary. Returns false if the color histograms diverge.
    fn refine(&self, ca: &mut Vec<u32>, cb: &mut Vec<u32>) -> bool {
        loop {
            let mut dict: BTreeMap<(u32, Vec<u32>, Vec<u32>), u32> = BTreeMap::new();
            let mut next_a = Vec::with_capacity(self.n);
            let mut next_b = Vec::with_capacity(self.n);
            for g in 0..self.n {
                let sig = self.signature(self.a, ca, g);
                let id = dict.len() as u32;
                next_a.push(*dict.entry(sig).or_insert(id));
            }
            for g in 0..self.n {
                let sig = self.signature(self.b, cb, g);
                match dict.get(&sig) {
                    Some(&id) => next_b.push(id),
                    None => return false, // b has a signature a lacks
                }
            }
            let mut hist_a = vec![0usize; dict.len()];
            let mut hist_b = vec![0usize; dict.len()];
            for &c in &next_a {
                hist_a[c as usize] += 1;
            }
            for &c in &next_b {
                hist_b[c as usize] += 1;
            }
            if hist_a != hist_b {
                return false;
            }
            let distinct_before = {
                let mut s = ca.clone();
                s.sort_unstable();
                s.dedup();
                s.len()
            };
            let stable = dict.len() == distinct_before;
            *ca = next_a;
            *cb = next_b;
            if stable || dict.len() == self.n {
                return true;
            }
        }
    }

    fn matches(&self, mut ca: Vec<u32>, mut cb: Vec<u32>) -> bool {
        if !self.refine(&mut ca, &mut cb) {
            return false;
        }
        // smallest non-singleton color class
        let mut class_of: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (g, &c) in ca.iter().enumerate() {
            class_of.entry(c).or_default().push(g);
        }
        let target = class_of
            .iter()
            .filter(|(_, v)| v.len() > 1)
            .min_by_key(|(_, v)| v.len())
            .map(|(&c, _)| c);
        match target {
            None => self.verify(&ca, &cb),
            Some(c) => {
                let x = class_of[&c][0];
                let fresh = self.n as u32 + 1;
                let candidates: Vec<usize> = cb
                    .iter()
                    .enumerate()
                    .filter(|(_, &cc)| cc == c)
                    .map(|(g, _)| g)
                    .collect();
                for y in candidates {
                    let mut ca2 = ca.clone();
                    let mut cb2 = cb.clone();
                    ca2[x] = fresh;
                    cb2[y] = fresh;
                    if self.matches(ca2, cb2) {
                        return true;
                    }
                }
                false
            }
        }
    }

    /// All classes are singletons: build the bijection and check covers.
    fn verify(&self, ca: &[u32], cb: &[u32]) -> bool {
        let mut to_b: BTreeMap<u32, usize> = BTreeMap::new();
        for (g, &c) in cb.iter().enumerate() {
            if to_b.insert(c, g).is_some() {
                return false;
            }
        }
        let mut phi = vec![0usize; self.n];
        for (g, &c) in ca.iter().enumerate() {
            match to_b.get(&c) {
                Some(&h) => phi[g] = h,
                None => return false,
            }
        }
        for g in 0..self.n {
            let (r, i) = self.locate(g);
            let (rb, ib) = self.locate(phi[g]);
            if r != rb {
                return false;
            }
            let mut image: Vec<u32> = self
                .a
                .up(r, i)
                .iter()
                .map(|&j| {
                    let h = phi[self.offsets[r + 1] + j as usize];
                    (h - self.offsets[r + 1]) as u32
                })
                .collect();
            image.sort_unstable();
            if image != self.b.up(rb, ib) {
                return false;
            }
        }
        true
    }
}
