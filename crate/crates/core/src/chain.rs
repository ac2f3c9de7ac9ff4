//! Chain complexes with explicit bases and sparse boundary matrices.
//!
//! Two builders produce the complexes this crate works with: the exterior
//! complex of a Lie algebra (degree-`k` basis = `k`-fold wedges of basis
//! vectors) and the chain complex of a simplicial complex given by its
//! facets.  Both share the [`ChainComplex`] container, so reduction,
//! homology, and serialization code is agnostic to the origin.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::lie::LieAlgebra;
use crate::matrix::{int, Scalar, SparseMatrix};
use crate::ring::CoefficientRing;

/// Subset of basis positions, stored as a bitmask.  Position `p` is set
/// iff bit `p` is set, so at most 64 generators are supported.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Wedge(u64);

impl Wedge {
    pub const EMPTY: Wedge = Wedge(0);

    pub fn from_bits(bits: u64) -> Wedge {
        Wedge(bits)
    }

    pub fn from_positions(ps: &[u32]) -> Wedge {
        let mut bits = 0u64;
        for &p in ps {
            assert!(p < 64 && bits & (1 << p) == 0);
            bits |= 1 << p;
        }
        Wedge(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, p: u32) -> bool {
        self.0 & (1 << p) != 0
    }

    pub fn with(self, p: u32) -> Wedge {
        Wedge(self.0 | (1 << p))
    }

    pub fn without(self, p: u32) -> Wedge {
        Wedge(self.0 & !(1 << p))
    }

    /// Set positions in ascending order.
    pub fn positions(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros();
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// Sign picked up by moving a factor at position `p` to the front of
    /// this wedge: `(-1)^(number of set positions below p)`.
    pub fn insertion_sign(self, p: u32) -> i64 {
        debug_assert!(!self.contains(p));
        let below = (self.0 & ((1u64 << p) - 1)).count_ones();
        if below.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Debug)]
pub enum DegreeBasis {
    /// Explicit wedge labels, in ascending bitmask order for built
    /// complexes.
    Wedges(Vec<Wedge>),
    /// Anonymous free module of the given rank (used by tensor products).
    Free(usize),
}

impl DegreeBasis {
    pub fn len(&self) -> usize {
        match self {
            DegreeBasis::Wedges(ws) => ws.len(),
            DegreeBasis::Free(n) => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Clone, Debug)]
pub enum ComplexKind {
    /// Exterior complex of a Lie algebra; wedge positions refer to its
    /// basis.
    Lie(Arc<LieAlgebra>),
    /// Simplicial chains; wedge positions refer to vertices.
    Simplicial { vertices: Vec<String> },
    /// No label semantics attached (duals, tensor products).
    Opaque,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChainError {
    #[error("complex would have {size} basis elements, over the cap of {cap}")]
    ComplexTooLarge { size: u128, cap: u64 },
    #[error("only up to 63 generators are supported, got {0}")]
    TooManyGenerators(usize),
    #[error("degree {0} has no explicit wedge basis")]
    NotWedgeBasis(usize),
    #[error("operation requires a Lie-algebra complex")]
    NotLieComplex,
    #[error("weights are only defined for matrix-unit bases")]
    SkewWeights,
    #[error("no facets given")]
    EmptyInput,
}

/// Default cap on the number of enumerated basis elements.
pub const DEFAULT_SIZE_CAP: u64 = 1 << 24;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    /// Build bases and boundaries only up to this degree.
    pub max_degree: Option<usize>,
    /// Refuse complexes whose enumeration exceeds this many elements.
    pub size_cap: u64,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { max_degree: None, size_cap: DEFAULT_SIZE_CAP }
    }
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    ring: CoefficientRing,
    kind: ComplexKind,
    bases: Vec<DegreeBasis>,
    /// `boundaries[k]` maps degree `k` to degree `k-1`; index 0 is the
    /// zero map out of degree 0.
    boundaries: Vec<SparseMatrix>,
    /// True when degrees above `top_degree()` were cut off by
    /// `max_degree`, so the top homology is not determined.
    truncated: bool,
}

impl ChainComplex {
    pub(crate) fn from_parts(
        ring: CoefficientRing,
        kind: ComplexKind,
        bases: Vec<DegreeBasis>,
        boundaries: Vec<SparseMatrix>,
        truncated: bool,
    ) -> ChainComplex {
        assert_eq!(bases.len(), boundaries.len());
        for k in 0..bases.len() {
            assert_eq!(boundaries[k].cols(), bases[k].len());
            let rows = if k == 0 { 0 } else { bases[k - 1].len() };
            assert_eq!(boundaries[k].rows(), rows);
        }
        ChainComplex { ring, kind, bases, boundaries, truncated }
    }

    pub fn ring(&self) -> &CoefficientRing {
        &self.ring
    }

    pub fn kind(&self) -> &ComplexKind {
        &self.kind
    }

    pub fn lie_algebra(&self) -> Option<&Arc<LieAlgebra>> {
        match &self.kind {
            ComplexKind::Lie(g) => Some(g),
            _ => None,
        }
    }

    /// Largest degree carried by the complex.
    pub fn top_degree(&self) -> usize {
        self.bases.len() - 1
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    pub fn dim(&self, k: usize) -> usize {
        self.bases.get(k).map_or(0, DegreeBasis::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.bases.iter().map(DegreeBasis::len).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.dims().iter().sum()
    }

    pub fn basis(&self, k: usize) -> &DegreeBasis {
        &self.bases[k]
    }

    pub fn wedges(&self, k: usize) -> Result<&[Wedge], ChainError> {
        match &self.bases[k] {
            DegreeBasis::Wedges(ws) => Ok(ws),
            DegreeBasis::Free(_) => Err(ChainError::NotWedgeBasis(k)),
        }
    }

    /// Boundary out of degree `k` (valid for `0..=top_degree`).
    pub fn boundary(&self, k: usize) -> &SparseMatrix {
        &self.boundaries[k]
    }

    pub fn wedge_index(&self, k: usize) -> Result<HashMap<Wedge, u32>, ChainError> {
        Ok(self
            .wedges(k)?
            .iter()
            .enumerate()
            .map(|(i, &w)| (w, i as u32))
            .collect())
    }

    /// Verify that consecutive boundaries compose to zero.
    pub fn check_d_squared(&self) -> bool {
        (1..self.top_degree())
            .all(|k| self.boundaries[k].multiply(&self.boundaries[k + 1], &self.ring).is_zero())
    }

    /// Stable text serialization of bases and boundary entries.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "complex over {} with degrees 0..={}",
            self.ring,
            self.top_degree()
        );
        for k in 0..self.bases.len() {
            let _ = writeln!(out, "degree {k}: dim {}", self.dim(k));
            match &self.bases[k] {
                DegreeBasis::Wedges(ws) => {
                    for (i, w) in ws.iter().enumerate() {
                        let _ = writeln!(out, "  basis {i}: {}", self.wedge_name(*w));
                    }
                }
                DegreeBasis::Free(n) => {
                    let _ = writeln!(out, "  free of rank {n}");
                }
            }
        }
        for k in 1..self.bases.len() {
            let m = &self.boundaries[k];
            let _ = writeln!(out, "boundary {k}: {}x{} with {} entries", m.rows(), m.cols(), m.nnz());
            for (r, c, v) in m.entries() {
                let _ = writeln!(out, "  {r} {c} {v}");
            }
        }
        out
    }

    /// Human-readable name for a wedge in this complex's labeling.
    pub fn wedge_name(&self, w: Wedge) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let parts: Vec<String> = w
            .positions()
            .map(|p| match &self.kind {
                ComplexKind::Lie(g) => g.label(p).to_string(),
                ComplexKind::Simplicial { vertices } => vertices[p as usize].clone(),
                ComplexKind::Opaque => format!("x{p}"),
            })
            .collect();
        parts.join("^")
    }

    /// Transpose all boundaries and reverse the grading.
    pub fn dualize(&self) -> ChainComplex {
        let t = self.top_degree();
        let bases: Vec<DegreeBasis> = (0..=t).map(|j| self.bases[t - j].clone()).collect();
        let mut boundaries = Vec::with_capacity(t + 1);
        boundaries.push(SparseMatrix::zero(0, bases[0].len()));
        for j in 1..=t {
            boundaries.push(self.boundaries[t - j + 1].transpose());
        }
        ChainComplex {
            ring: self.ring.clone(),
            kind: ComplexKind::Opaque,
            bases,
            boundaries,
            truncated: self.truncated,
        }
    }
}

/// Boundary of a single wedge of Lie-algebra basis vectors, as integer
/// coefficients on target wedges (no ring reduction).  For factors at
/// ascending positions `p_0 < .. < p_(k-1)`, the pair `(r, s)` contributes
/// each bracket term `c * e_t` as `(-1)^(r+s) * c * sign` on the wedge
/// with `p_r, p_s` removed and `t` inserted, where `sign` moves `t` from
/// the front to its sorted slot.
pub(crate) fn ce_boundary_terms(g: &LieAlgebra, w: Wedge) -> Vec<(Wedge, i64)> {
    let ps: Vec<u32> = w.positions().collect();
    let mut acc: BTreeMap<Wedge, i64> = BTreeMap::new();
    for r in 0..ps.len() {
        for s in (r + 1)..ps.len() {
            let pair_sign = if (r + s) % 2 == 0 { 1 } else { -1 };
            let rest = w.without(ps[r]).without(ps[s]);
            for (t, c) in g.bracket(ps[r], ps[s]) {
                if rest.contains(t) {
                    continue;
                }
                *acc.entry(rest.with(t)).or_insert(0) += pair_sign * c * rest.insertion_sign(t);
            }
        }
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// Single boundary-matrix entry between two wedges of adjacent sizes,
/// reduced in the ring.
pub(crate) fn ce_boundary_entry(
    g: &LieAlgebra,
    ring: &CoefficientRing,
    from: Wedge,
    to: Wedge,
) -> Scalar {
    debug_assert_eq!(from.len(), to.len() + 1);
    for (target, c) in ce_boundary_terms(g, from) {
        if target == to {
            return ring.canon(int(c));
        }
    }
    ring.canon(int(0))
}

/// Exterior chain complex of a Lie algebra over a coefficient ring.
pub fn build_ce_complex(
    g: Arc<LieAlgebra>,
    ring: &CoefficientRing,
) -> Result<ChainComplex, ChainError> {
    build_ce_complex_with(g, ring, BuildOptions::default())
}

pub fn build_ce_complex_with(
    g: Arc<LieAlgebra>,
    ring: &CoefficientRing,
    opts: BuildOptions,
) -> Result<ChainComplex, ChainError> {
    build_ce_filtered(g, ring, |_| true, opts)
}

/// Exterior complex restricted to the wedges accepted by `keep`.  The
/// boundary is the restriction of the full boundary to the kept basis;
/// callers are responsible for choosing a filter under which this is a
/// chain complex (weight filters and critical-basis restrictions are).
pub fn build_ce_filtered(
    g: Arc<LieAlgebra>,
    ring: &CoefficientRing,
    keep: impl Fn(Wedge) -> bool + Sync,
    opts: BuildOptions,
) -> Result<ChainComplex, ChainError> {
    let rank = g.rank();
    if rank > 63 {
        return Err(ChainError::TooManyGenerators(rank));
    }
    let size: u128 = 1u128 << rank;
    if size > opts.size_cap as u128 {
        return Err(ChainError::ComplexTooLarge { size, cap: opts.size_cap });
    }
    let top = opts.max_degree.map_or(rank, |d| d.min(rank));
    let truncated = top < rank;

    let mut by_degree: Vec<Vec<Wedge>> = vec![Vec::new(); top + 1];
    for bits in 0..(1u64 << rank) {
        let k = bits.count_ones() as usize;
        if k <= top {
            let w = Wedge::from_bits(bits);
            if keep(w) {
                by_degree[k].push(w);
            }
        }
    }

    let index: Vec<HashMap<Wedge, u32>> = by_degree
        .iter()
        .map(|ws| ws.iter().enumerate().map(|(i, &w)| (w, i as u32)).collect())
        .collect();

    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(SparseMatrix::zero(0, by_degree[0].len()));
    for k in 1..=top {
        let rows = by_degree[k - 1].len();
        let cols = by_degree[k].len();
        let triplets: Vec<(u32, u32, Scalar)> = by_degree[k]
            .par_iter()
            .enumerate()
            .flat_map_iter(|(col, &w)| {
                let g = &g;
                let idx = &index[k - 1];
                ce_boundary_terms(g, w)
                    .into_iter()
                    .filter_map(move |(target, c)| {
                        idx.get(&target).map(|&row| (row, col as u32, int(c)))
                    })
            })
            .collect();
        boundaries.push(SparseMatrix::from_triplets(rows, cols, triplets, ring));
    }

    let bases = by_degree.into_iter().map(DegreeBasis::Wedges).collect();
    Ok(ChainComplex::from_parts(
        ring.clone(),
        ComplexKind::Lie(g),
        bases,
        boundaries,
        truncated,
    ))
}

/// Rank-one complex concentrated in degree 0 (tensor unit).
pub fn point_complex(ring: &CoefficientRing) -> ChainComplex {
    ChainComplex::from_parts(
        ring.clone(),
        ComplexKind::Opaque,
        vec![DegreeBasis::Free(1)],
        vec![SparseMatrix::zero(0, 1)],
        false,
    )
}

/// Index weights of a wedge in a matrix-unit complex: for each matrix
/// index `x` touched by a nondiagonal factor, `w_x = (#factors with
/// column x) - (#factors with row x)`.  Diagonal factors contribute no
/// weight but do mark their index as touched.
pub fn wedge_weights(g: &LieAlgebra, w: Wedge) -> Result<BTreeMap<u16, i64>, ChainError> {
    let mut weights: BTreeMap<u16, i64> = BTreeMap::new();
    for p in w.positions() {
        match g.label(p) {
            crate::lie::BasisLabel::Unit(i, j) => {
                if i == j {
                    weights.entry(i).or_insert(0);
                } else {
                    *weights.entry(j).or_insert(0) += 1;
                    *weights.entry(i).or_insert(0) -= 1;
                }
            }
            crate::lie::BasisLabel::Skew(..) => return Err(ChainError::SkewWeights),
        }
    }
    Ok(weights)
}

/// Chain complex of the simplicial complex generated by the given facets.
/// Vertices are indexed by first appearance.  With `reduced` the empty
/// face is kept in degree 0 and faces of size `k` sit in degree `k`;
/// otherwise faces of size `k+1` sit in degree `k`.
pub fn simplicial_chain_complex(
    facets: &[Vec<String>],
    reduced: bool,
    ring: &CoefficientRing,
) -> Result<ChainComplex, ChainError> {
    if facets.is_empty() || facets.iter().all(|f| f.is_empty()) {
        return Err(ChainError::EmptyInput);
    }
    let mut vertices: Vec<String> = Vec::new();
    let mut vertex_pos: HashMap<String, u32> = HashMap::new();
    let mut facet_masks: Vec<u64> = Vec::new();
    for f in facets {
        let mut mask = 0u64;
        for v in f {
            let p = match vertex_pos.get(v) {
                Some(&p) => p,
                None => {
                    let p = vertices.len() as u32;
                    if p >= 63 {
                        return Err(ChainError::TooManyGenerators(p as usize + 1));
                    }
                    vertices.push(v.clone());
                    vertex_pos.insert(v.clone(), p);
                    p
                }
            };
            mask |= 1 << p;
        }
        facet_masks.push(mask);
    }

    // Close under subsets.
    let mut faces: std::collections::HashSet<u64> = std::collections::HashSet::new();
    for &m in &facet_masks {
        let mut sub = m;
        loop {
            faces.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & m;
        }
    }

    let max_size = facet_masks.iter().map(|m| m.count_ones() as usize).max().unwrap();
    let offset = if reduced { 0 } else { 1 };
    let top = max_size - offset;
    let mut by_degree: Vec<Vec<Wedge>> = vec![Vec::new(); top + 1];
    let mut sorted: Vec<u64> = faces.into_iter().collect();
    sorted.sort_unstable();
    for bits in sorted {
        let size = bits.count_ones() as usize;
        if size >= offset {
            by_degree[size - offset].push(Wedge::from_bits(bits));
        }
    }

    let index: Vec<HashMap<Wedge, u32>> = by_degree
        .iter()
        .map(|ws| ws.iter().enumerate().map(|(i, &w)| (w, i as u32)).collect())
        .collect();

    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(SparseMatrix::zero(0, by_degree[0].len()));
    for k in 1..=top {
        let mut triplets = Vec::new();
        for (col, &w) in by_degree[k].iter().enumerate() {
            for (i, p) in w.positions().enumerate() {
                let face = w.without(p);
                let row = index[k - 1][&face];
                let sign = if i % 2 == 0 { 1 } else { -1 };
                triplets.push((row, col as u32, int(sign)));
            }
        }
        boundaries.push(SparseMatrix::from_triplets(
            by_degree[k - 1].len(),
            by_degree[k].len(),
            triplets,
            ring,
        ));
    }

    let bases = by_degree.into_iter().map(DegreeBasis::Wedges).collect();
    Ok(ChainComplex::from_parts(
        ring.clone(),
        ComplexKind::Simplicial { vertices },
        bases,
        boundaries,
        false,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::CoefficientRing;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    #[test]
    fn wedge_basics() {
        let w = Wedge::from_positions(&[0, 2, 5]);
        assert_eq!(w.len(), 3);
        assert_eq!(w.positions().collect::<Vec<_>>(), vec![0, 2, 5]);
        assert_eq!(w.insertion_sign(1), -1);
        assert_eq!(w.insertion_sign(3), 1);
        assert_eq!(w.insertion_sign(6), -1);
        assert!(w.with(1).contains(1));
        assert!(!w.without(2).contains(2));
    }

    #[test]
    fn sol2_boundary_matches_hand_computation() {
        let g = Arc::new(LieAlgebra::sol(2));
        let c = build_ce_complex(g.clone(), &z()).unwrap();
        assert_eq!(c.dims(), vec![1, 3, 3, 1]);
        // Positions: 0 = e11, 1 = e12, 2 = e22 (sorted label order).
        // The degree-1 basis is [e11, e12, e22], so e12 is row 1.
        let d2 = c.boundary(2);
        let col = |w: Wedge| {
            let idx = c.wedge_index(2).unwrap()[&w];
            d2.column(idx).to_vec()
        };
        // d(e11^e12) = -[e11,e12] = -e12.
        let e11e12 = Wedge::from_positions(&[0, 1]);
        assert_eq!(col(e11e12), vec![(1, 0, int(-1))]);
        // d(e12^e22) = -[e12,e22] = -e12 as well; d(e11^e22) = 0.
        let e12e22 = Wedge::from_positions(&[1, 2]);
        let c12 = col(e12e22);
        assert_eq!(c12.len(), 1);
        assert_eq!(c12[0].0, 1);
        assert_eq!(c12[0].2, int(-1));
        let e11e22 = Wedge::from_positions(&[0, 2]);
        assert!(col(e11e22).is_empty());
        // d3(e11^e12^e22): terms from (e11,e12) and (e12,e22).
        let d3 = c.boundary(3);
        let full = d3.column(0).to_vec();
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn d_squared_vanishes() {
        for n in 1..=4 {
            let g = Arc::new(LieAlgebra::sol(n));
            let c = build_ce_complex(g, &z()).unwrap();
            for k in 1..c.top_degree() {
                let prod = c.boundary(k).multiply(c.boundary(k + 1), &z());
                assert!(prod.is_zero(), "d^2 != 0 at degree {} for sol{}", k + 1, n);
            }
        }
        let g = Arc::new(LieAlgebra::so_char2(4));
        let z2 = CoefficientRing::modular(2).unwrap();
        let c = build_ce_complex(g, &z2).unwrap();
        for k in 1..c.top_degree() {
            assert!(c.boundary(k).multiply(c.boundary(k + 1), &z2).is_zero());
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let g = Arc::new(LieAlgebra::sol(7));
        let err = build_ce_complex_with(
            g,
            &z(),
            BuildOptions { max_degree: None, size_cap: 1 << 20 },
        )
        .unwrap_err();
        assert!(matches!(err, ChainError::ComplexTooLarge { .. }));
    }

    #[test]
    fn truncation_limits_degrees() {
        let g = Arc::new(LieAlgebra::sol(3));
        let c = build_ce_complex_with(
            g,
            &z(),
            BuildOptions { max_degree: Some(3), ..Default::default() },
        )
        .unwrap();
        assert_eq!(c.top_degree(), 3);
        assert!(c.is_truncated());
    }

    #[test]
    fn weights_of_full_wedge() {
        // All of sol_n wedged together: index x carries weight 2x-n-1.
        for n in [3usize, 4, 5] {
            let g = LieAlgebra::sol(n);
            let all = Wedge::from_bits((1u64 << g.rank()) - 1);
            let w = wedge_weights(&g, all).unwrap();
            for x in 1..=n as u16 {
                assert_eq!(w[&x], 2 * x as i64 - n as i64 - 1);
            }
        }
    }

    #[test]
    fn weights_mark_touched_zero_weight_indices() {
        let g = LieAlgebra::sol(3);
        let e12 = g.position_of(crate::lie::BasisLabel::Unit(1, 2)).unwrap();
        let e11 = g.position_of(crate::lie::BasisLabel::Unit(1, 1)).unwrap();
        let w = wedge_weights(&g, Wedge::from_positions(&[e12])).unwrap();
        assert_eq!(w.get(&1), Some(&-1));
        assert_eq!(w.get(&2), Some(&1));
        assert_eq!(w.get(&3), None);
        // A lone diagonal touches its index with weight zero.
        let w2 = wedge_weights(&g, Wedge::from_positions(&[e11])).unwrap();
        assert_eq!(w2.get(&1), Some(&0));
    }

    #[test]
    fn simplicial_square() {
        // Hollow square a-b-c-d: H0 = R, H1 = R.
        let facets: Vec<Vec<String>> = [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]]
            .iter()
            .map(|f| f.iter().map(|s| s.to_string()).collect())
            .collect();
        let c = simplicial_chain_complex(&facets, false, &z()).unwrap();
        assert_eq!(c.dims(), vec![4, 4]);
        for k in 1..c.top_degree() {
            assert!(c.boundary(k).multiply(c.boundary(k + 1), &z()).is_zero());
        }
        // Each edge boundary has one +1 and one -1.
        let d1 = c.boundary(1);
        for col in 0..4 {
            let mut vals: Vec<Scalar> = d1.column(col).iter().map(|e| e.2.clone()).collect();
            vals.sort_by_key(|v| v.to_integer());
            assert_eq!(vals, vec![int(-1), int(1)]);
        }
    }

    #[test]
    fn simplicial_reduced_shifts_degrees() {
        let facets: Vec<Vec<String>> =
            vec![vec!["a".into(), "b".into(), "c".into()]];
        let c = simplicial_chain_complex(&facets, true, &z()).unwrap();
        // Empty face, 3 vertices, 3 edges, 1 triangle.
        assert_eq!(c.dims(), vec![1, 3, 3, 1]);
        // d1 sends each vertex to the empty face with coefficient 1.
        assert_eq!(c.boundary(1).nnz(), 3);
    }

    #[test]
    fn dualize_transposes_and_reverses() {
        let g = Arc::new(LieAlgebra::sol(3));
        let c = build_ce_complex(g, &z()).unwrap();
        let d = c.dualize();
        let t = c.top_degree();
        assert_eq!(d.top_degree(), t);
        for j in 0..=t {
            assert_eq!(d.dim(j), c.dim(t - j));
        }
        for j in 1..=t {
            assert_eq!(d.boundary(j).rows(), c.boundary(t - j + 1).cols());
            assert_eq!(d.boundary(j).nnz(), c.boundary(t - j + 1).nnz());
        }
        // Dual of the dual has the original boundary entries.
        let dd = d.dualize();
        for j in 1..=t {
            assert_eq!(dd.boundary(j).entries(), c.boundary(j).entries());
        }
    }

    #[test]
    fn dump_mentions_labels_and_entries() {
        let g = Arc::new(LieAlgebra::sol(2));
        let c = build_ce_complex(g, &z()).unwrap();
        let text = c.dump();
        assert!(text.contains("complex over Z with degrees 0..=3"));
        assert!(text.contains("basis 0: e1,1"));
        assert!(text.contains("e1,1^e1,2^e2,2"));
        assert!(text.contains("boundary 2:"));
    }
}
