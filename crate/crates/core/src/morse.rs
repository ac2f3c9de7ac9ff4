//! Basis matchings and the reductions they induce.
//!
//! A matching pairs basis elements of adjacent degrees across unit
//! boundary entries; if the induced zig-zag digraph is acyclic, the
//! complex retracts onto the unmatched ("critical") basis with a corrected
//! boundary, preserving homology.  [`reduce_by_matching`] performs the
//! retraction by Schur-complement pivoting; [`gradient_flow_boundary`]
//! computes the same corrected boundary by explicit path enumeration and
//! exists as an independent cross-check.
//!
//! [`normalization_matching`] is the workhorse specialization: a wedge is
//! paired with itself plus/minus the diagonal `e_xx` at the least index
//! `x` whose weight is a unit.  Its corrected boundary needs no Schur
//! updates at all — reduction is pure row/column deletion
//! ([`normalization_reduce`]), which is what makes large cases cheap.

use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::chain::{
    build_ce_filtered, ce_boundary_entry, wedge_weights, BuildOptions, ChainComplex,
    ChainError, ComplexKind, DegreeBasis, Wedge,
};
use crate::lie::LieAlgebra;
use crate::matrix::{int, Scalar, SparseMatrix};
use crate::ring::CoefficientRing;
use num::Zero;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MorseError {
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("basis has no diagonal for index {0}, which nondiagonal factors touch")]
    MissingDiagonals(u16),
    #[error("no vertex named {0:?} in the complex")]
    NoSuchVertex(String),
    #[error("star matchings require a simplicial complex")]
    NotSimplicial,
    #[error("matching requires all degrees; complex is truncated")]
    TruncatedComplex,
}

/// One matched pair: `upper` is a basis id in `degree`, `lower` a basis
/// id in `degree - 1`, and the boundary entry between them is the pivot.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct MatchedPair {
    pub degree: usize,
    pub upper: u32,
    pub lower: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvalidReason {
    /// A basis element occurs in two pairs.
    SharedEndpoint { degree: usize, id: u32 },
    /// A paired boundary entry is zero or not a unit.
    NonUnitEntry { degree: usize, upper: u32, lower: u32 },
    /// The zig-zag digraph between these adjacent degrees has a cycle.
    Cycle { degree: usize },
}

impl std::fmt::Display for InvalidReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InvalidReason::SharedEndpoint { degree, id } => {
                write!(f, "element {id} of degree {degree} is in two pairs")
            }
            InvalidReason::NonUnitEntry { degree, upper, lower } => write!(
                f,
                "entry between {upper} (degree {degree}) and {lower} is not a unit"
            ),
            InvalidReason::Cycle { degree } => {
                write!(f, "zig-zag cycle between degrees {degree} and {}", degree - 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MatchingStatus {
    Unchecked,
    Valid,
    Invalid(InvalidReason),
}

#[derive(Clone, Debug)]
pub struct Matching {
    pairs: Vec<MatchedPair>,
    status: MatchingStatus,
}

impl Matching {
    pub fn empty() -> Matching {
        Matching { pairs: Vec::new(), status: MatchingStatus::Unchecked }
    }

    pub fn from_pairs(pairs: Vec<MatchedPair>) -> Matching {
        Matching { pairs, status: MatchingStatus::Unchecked }
    }

    pub fn pairs(&self) -> &[MatchedPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn status(&self) -> &MatchingStatus {
        &self.status
    }

    /// Run [`validate_matching`] and record the result.
    pub fn validated(mut self, c: &ChainComplex) -> Matching {
        self.status = validate_matching(c, &self);
        self
    }

    /// One `degree upper_bits lower_bits` line per pair, for external
    /// verification.  Requires wedge bases.
    pub fn emit_lines(&self, c: &ChainComplex) -> Result<String, ChainError> {
        let mut out = String::new();
        for p in &self.pairs {
            let upper = c.wedges(p.degree)?[p.upper as usize];
            let lower = c.wedges(p.degree - 1)?[p.lower as usize];
            out.push_str(&format!("{} {} {}\n", p.degree, upper.bits(), lower.bits()));
        }
        Ok(out)
    }
}

/// Unmatched basis ids per degree, in basis order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalSet {
    pub per_degree: Vec<Vec<u32>>,
}

impl CriticalSet {
    pub fn counts(&self) -> Vec<usize> {
        self.per_degree.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.per_degree.iter().map(Vec::len).sum()
    }
}

fn matched_flags(c: &ChainComplex, m: &Matching) -> Vec<Vec<bool>> {
    let mut flags: Vec<Vec<bool>> = (0..=c.top_degree()).map(|k| vec![false; c.dim(k)]).collect();
    for p in m.pairs() {
        flags[p.degree][p.upper as usize] = true;
        flags[p.degree - 1][p.lower as usize] = true;
    }
    flags
}

/// Unmatched ids per degree; the partition invariant holds by
/// construction.
pub fn critical_vertices(c: &ChainComplex, m: &Matching) -> CriticalSet {
    let flags = matched_flags(c, m);
    CriticalSet {
        per_degree: flags
            .into_iter()
            .map(|f| {
                f.iter()
                    .enumerate()
                    .filter_map(|(i, &used)| (!used).then_some(i as u32))
                    .collect()
            })
            .collect(),
    }
}

/// Check endpoint disjointness, unit pivots, and per-degree-pair
/// acyclicity of the zig-zag digraph, in that order.
pub fn validate_matching(c: &ChainComplex, m: &Matching) -> MatchingStatus {
    // (1) no shared endpoints
    let mut seen: Vec<HashMap<u32, ()>> = (0..=c.top_degree() + 1).map(|_| HashMap::new()).collect();
    for p in m.pairs() {
        if p.degree == 0 || p.degree > c.top_degree() {
            return MatchingStatus::Invalid(InvalidReason::NonUnitEntry {
                degree: p.degree,
                upper: p.upper,
                lower: p.lower,
            });
        }
        for (deg, id) in [(p.degree, p.upper), (p.degree - 1, p.lower)] {
            if seen[deg].insert(id, ()).is_some() {
                return MatchingStatus::Invalid(InvalidReason::SharedEndpoint { degree: deg, id });
            }
        }
    }
    // (2) every pivot is a unit
    for p in m.pairs() {
        let entry = c.boundary(p.degree).get(p.lower, p.upper);
        if !entry.is_some_and(|v| c.ring().is_unit(v)) {
            return MatchingStatus::Invalid(InvalidReason::NonUnitEntry {
                degree: p.degree,
                upper: p.upper,
                lower: p.lower,
            });
        }
    }
    // (3) acyclicity, one adjacent degree pair at a time.  Nodes are the
    // pairs of this degree; P -> P' when P's upper hits P''s lower
    // through a non-matched entry.
    for k in 1..=c.top_degree() {
        let pairs: Vec<&MatchedPair> = m.pairs().iter().filter(|p| p.degree == k).collect();
        if pairs.len() <= 1 {
            continue;
        }
        let lower_of: HashMap<u32, usize> =
            pairs.iter().enumerate().map(|(i, p)| (p.lower, i)).collect();
        let mut succs: Vec<Vec<usize>> = vec![Vec::new(); pairs.len()];
        let mut indegree = vec![0usize; pairs.len()];
        let d = c.boundary(k);
        for (i, p) in pairs.iter().enumerate() {
            for &(row, _, _) in d.column(p.upper) {
                if let Some(&j) = lower_of.get(&row) {
                    if j != i {
                        succs[i].push(j);
                        indegree[j] += 1;
                    }
                }
            }
        }
        let mut queue: Vec<usize> =
            (0..pairs.len()).filter(|&i| indegree[i] == 0).collect();
        let mut seen = 0;
        while let Some(i) = queue.pop() {
            seen += 1;
            for &j in &succs[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    queue.push(j);
                }
            }
        }
        if seen != pairs.len() {
            return MatchingStatus::Invalid(InvalidReason::Cycle { degree: k });
        }
    }
    MatchingStatus::Valid
}

// ---------------------------------------------------------------------
// Reduction
// ---------------------------------------------------------------------

/// Indices (of the ambient matrix) touched by the wedge's factors, for
/// elimination-order heuristics; empty for non-Lie bases.
fn epsilon_size(c: &ChainComplex, k: usize, id: u32) -> usize {
    let Some(g) = c.lie_algebra() else { return 0 };
    let Ok(ws) = c.wedges(k) else { return 0 };
    touched_indices(g, ws[id as usize]).len()
}

fn touched_indices(g: &LieAlgebra, w: Wedge) -> Vec<u16> {
    let mut mask = 0u64;
    for p in w.positions() {
        match g.label(p) {
            crate::lie::BasisLabel::Unit(i, j) => mask |= (1 << i) | (1 << j),
            crate::lie::BasisLabel::Skew(a, b) => mask |= (1 << a) | (1 << b),
        }
    }
    (0..64).filter(|&x| mask & (1 << x) != 0).collect()
}

/// Retract onto the critical basis.  Matched pairs of each degree are
/// pivots inside that degree's boundary; pairs of other degrees only ever
/// delete rows or columns of it, so each matrix is processed
/// independently: Schur-update around its own pivots, then restrict to
/// critical rows and columns.  Panics if the matching is invalid.
pub fn reduce_by_matching(c: &ChainComplex, m: &Matching) -> ChainComplex {
    let status = match m.status() {
        MatchingStatus::Unchecked => validate_matching(c, m),
        s => s.clone(),
    };
    if let MatchingStatus::Invalid(reason) = status {
        panic!("cannot reduce by an invalid matching: {reason}");
    }
    let crit = critical_vertices(c, m);
    let top = c.top_degree();
    let ring = c.ring().clone();

    let mut per_degree: Vec<Vec<&MatchedPair>> = vec![Vec::new(); top + 1];
    for p in m.pairs() {
        per_degree[p.degree].push(p);
    }
    // Larger supports first; stable, so ties keep the given pair order.
    for (k, pairs) in per_degree.iter_mut().enumerate() {
        pairs.sort_by_key(|p| std::cmp::Reverse(epsilon_size(c, k, p.upper)));
    }

    let boundaries: Vec<SparseMatrix> = (0..=top)
        .into_par_iter()
        .map(|k| {
            let eliminated = schur_eliminate(c.boundary(k), &per_degree[k], &ring);
            let keep_rows: &[u32] = if k == 0 { &[] } else { &crit.per_degree[k - 1] };
            eliminated.restrict(keep_rows, &crit.per_degree[k])
        })
        .collect();

    let bases: Vec<DegreeBasis> = (0..=top)
        .map(|k| match c.basis(k) {
            DegreeBasis::Wedges(ws) => DegreeBasis::Wedges(
                crit.per_degree[k].iter().map(|&i| ws[i as usize]).collect(),
            ),
            DegreeBasis::Free(_) => DegreeBasis::Free(crit.per_degree[k].len()),
        })
        .collect();

    ChainComplex::from_parts(ring, c.kind().clone(), bases, boundaries, c.is_truncated())
}

/// Eliminate each pivot by column operations: zeroing the pivot row
/// leaves exactly the Schur complement on the surviving block.
fn schur_eliminate(
    mat: &SparseMatrix,
    pairs: &[&MatchedPair],
    ring: &CoefficientRing,
) -> SparseMatrix {
    if pairs.is_empty() {
        return mat.clone();
    }
    let mut cols: Vec<HashMap<u32, Scalar>> = vec![HashMap::new(); mat.cols()];
    let mut row_cols: Vec<std::collections::BTreeSet<u32>> = vec![Default::default(); mat.rows()];
    for &(r, col, ref v) in mat.entries() {
        cols[col as usize].insert(r, v.clone());
        row_cols[r as usize].insert(col);
    }
    for p in pairs {
        let (u, v) = (p.upper, p.lower);
        let pivot = cols[u as usize][&v].clone();
        let inv = ring.invert(&pivot).expect("validated pivot must be a unit");
        let pivot_col: Vec<(u32, Scalar)> =
            cols[u as usize].iter().map(|(&r, val)| (r, val.clone())).collect();
        let touched: Vec<u32> = row_cols[v as usize].iter().copied().filter(|&x| x != u).collect();
        for tc in touched {
            let a = cols[tc as usize][&v].clone();
            let factor = ring.mul(&a, &inv);
            for (r, val) in &pivot_col {
                let delta = ring.mul(&factor, val);
                let cur = cols[tc as usize].remove(r);
                let next = match cur {
                    Some(cv) => ring.sub(&cv, &delta),
                    None => ring.neg(&delta),
                };
                if next.is_zero() {
                    row_cols[*r as usize].remove(&tc);
                } else {
                    cols[tc as usize].insert(*r, next);
                    row_cols[*r as usize].insert(tc);
                }
            }
            debug_assert!(!cols[tc as usize].contains_key(&v));
        }
    }
    let triplets = cols.iter().enumerate().flat_map(|(col, m)| {
        m.iter().map(move |(&r, v)| (r, col as u32, v.clone()))
    });
    SparseMatrix::from_triplets(mat.rows(), mat.cols(), triplets, ring)
}

/// Corrected boundary on the critical basis by explicit zig-zag path
/// enumeration: alternating down-steps (boundary entries) and up-steps
/// (inverted matched entries, each contributing a sign flip).  Exists to
/// cross-check [`reduce_by_matching`], which computes the same matrix by
/// elimination.
pub fn gradient_flow_boundary(c: &ChainComplex, m: &Matching, k: usize) -> SparseMatrix {
    let crit = critical_vertices(c, m);
    let rows_ids = if k == 0 { Vec::new() } else { crit.per_degree[k - 1].clone() };
    let cols_ids = &crit.per_degree[k];
    let row_pos: HashMap<u32, u32> =
        rows_ids.iter().enumerate().map(|(i, &id)| (id, i as u32)).collect();
    if k == 0 {
        return SparseMatrix::zero(0, cols_ids.len());
    }
    let ring = c.ring();
    let d = c.boundary(k);
    let lower_to_upper: HashMap<u32, u32> = m
        .pairs()
        .iter()
        .filter(|p| p.degree == k)
        .map(|p| (p.lower, p.upper))
        .collect();

    let mut triplets: Vec<(u32, u32, Scalar)> = Vec::new();
    for (col, &start) in cols_ids.iter().enumerate() {
        // Stack of (upper id, accumulated coefficient along the path).
        let mut stack: Vec<(u32, Scalar)> = vec![(start, ring.canon(int(1)))];
        while let Some((u, coeff)) = stack.pop() {
            for &(w, _, ref a) in d.column(u) {
                let carried = ring.mul(&coeff, a);
                if let Some(&r) = row_pos.get(&w) {
                    triplets.push((r, col as u32, carried));
                } else if let Some(&u2) = lower_to_upper.get(&w) {
                    if u2 != u {
                        let p = d.get(w, u2).expect("matched entry exists");
                        let step = ring.neg(&ring.invert(p).expect("matched entry is a unit"));
                        stack.push((u2, ring.mul(&carried, &step)));
                    }
                }
            }
        }
    }
    SparseMatrix::from_triplets(rows_ids.len(), cols_ids.len(), triplets, ring)
}

/// Individual zig-zag path contributions from critical cell `upper`
/// (basis id in degree `k`) down to critical cell `lower` (degree
/// `k - 1`), one scalar per complete path.  Their sum is the corrected
/// boundary entry; returning the addends separately lets a caller watch
/// two paths cancel.
pub fn gradient_path_contributions(
    c: &ChainComplex,
    m: &Matching,
    k: usize,
    upper: u32,
    lower: u32,
) -> Vec<Scalar> {
    assert!(k >= 1, "paths descend one degree");
    let ring = c.ring();
    let d = c.boundary(k);
    let lower_to_upper: HashMap<u32, u32> = m
        .pairs()
        .iter()
        .filter(|p| p.degree == k)
        .map(|p| (p.lower, p.upper))
        .collect();

    let mut out = Vec::new();
    let mut stack: Vec<(u32, Scalar)> = vec![(upper, ring.canon(int(1)))];
    while let Some((u, coeff)) = stack.pop() {
        for &(w, _, ref a) in d.column(u) {
            let carried = ring.mul(&coeff, a);
            if w == lower {
                out.push(carried);
            } else if let Some(&u2) = lower_to_upper.get(&w) {
                if u2 != u {
                    let p = d.get(w, u2).expect("matched entry exists");
                    let step = ring.neg(&ring.invert(p).expect("matched entry is a unit"));
                    stack.push((u2, ring.mul(&carried, &step)));
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// The normalization matching
// ---------------------------------------------------------------------

fn check_diagonals(g: &LieAlgebra) -> Result<(), MorseError> {
    // A basis with no diagonals at all is fine: nothing can be toggled, so
    // the matching is empty and every wedge is critical.  Only a partial
    // diagonal set leaves the pairing rule undefined.
    if !g.labels().iter().any(|l| l.is_diagonal()) {
        return Ok(());
    }
    for l in g.labels() {
        if let Some((a, b)) = l.nondiagonal_indices() {
            for x in [a, b] {
                if g.diagonal_position(x).is_none() {
                    return Err(MorseError::MissingDiagonals(x));
                }
            }
        }
    }
    Ok(())
}

/// Least index `x` whose diagonal can be toggled across a unit boundary
/// entry; `None` means the wedge is critical.  For matrix-unit bases the
/// entry's unit-ness equals that of the weight `w_x`; for skew bases the
/// entry is read off the boundary directly.
fn eligible_index(g: &LieAlgebra, ring: &CoefficientRing, w: Wedge) -> Option<u16> {
    if !g.has_skew_labels() {
        let weights = wedge_weights(g, w).expect("matrix-unit basis");
        for (&x, &wt) in &weights {
            if ring.is_integer_unit(wt) {
                g.diagonal_position(x)?;
                return Some(x);
            }
        }
        None
    } else {
        for x in touched_indices(g, w) {
            let dpos = g.diagonal_position(x)?;
            let (upper, lower) = if w.contains(dpos) {
                (w, w.without(dpos))
            } else {
                (w.with(dpos), w)
            };
            let entry = ce_boundary_entry(g, ring, upper, lower);
            if ring.is_unit(&entry) {
                return Some(x);
            }
        }
        None
    }
}

/// Whether a wedge survives the normalization matching, decided without
/// building any matrices.
pub fn is_normalization_critical(g: &LieAlgebra, ring: &CoefficientRing, w: Wedge) -> bool {
    eligible_index(g, ring, w).is_none()
}

/// Pair every non-critical wedge with itself plus/minus the diagonal at
/// its least unit-weight index.  The choice depends only on data shared
/// by both partners, so the pairing is a well-defined involution.
pub fn normalization_matching(c: &ChainComplex) -> Result<Matching, MorseError> {
    let g = c.lie_algebra().ok_or(ChainError::NotLieComplex)?.clone();
    check_diagonals(&g)?;
    if c.is_truncated() {
        return Err(MorseError::TruncatedComplex);
    }
    let ring = c.ring();
    let mut pairs = Vec::new();
    for k in 1..=c.top_degree() {
        let index_below = c.wedge_index(k - 1)?;
        for (id, &w) in c.wedges(k)?.iter().enumerate() {
            let Some(x) = eligible_index(&g, ring, w) else { continue };
            let dpos = g.diagonal_position(x).expect("diagonals checked");
            if !w.contains(dpos) {
                continue; // recorded from the upper partner
            }
            let lower = w.without(dpos);
            let pair = MatchedPair {
                degree: k,
                upper: id as u32,
                lower: index_below[&lower],
            };
            debug_assert_eq!(eligible_index(&g, ring, lower), Some(x));
            #[cfg(debug_assertions)]
            if !g.has_skew_labels() {
                // The matched entry must be the weight up to sign.
                let wt = wedge_weights(&g, w).unwrap()[&x];
                let entry = ce_boundary_entry(&g, ring, w, lower);
                assert!(
                    entry == ring.canon(int(wt)) || entry == ring.canon(int(-wt)),
                    "matched entry {entry} does not match weight {wt}"
                );
            }
            pairs.push(pair);
        }
    }
    Ok(Matching { pairs, status: MatchingStatus::Unchecked })
}

/// Reduce along the normalization matching by pure restriction: its
/// zig-zag correction vanishes, so deleting matched rows and columns
/// already yields the corrected boundary.
pub fn normalization_reduce(c: &ChainComplex) -> Result<ChainComplex, MorseError> {
    let m = normalization_matching(c)?;
    let crit = critical_vertices(c, &m);
    let top = c.top_degree();
    let boundaries: Vec<SparseMatrix> = (0..=top)
        .map(|k| {
            let keep_rows: &[u32] = if k == 0 { &[] } else { &crit.per_degree[k - 1] };
            c.boundary(k).restrict(keep_rows, &crit.per_degree[k])
        })
        .collect();
    let bases: Vec<DegreeBasis> = (0..=top)
        .map(|k| {
            let ws = c.wedges(k).expect("normalization needs wedge bases");
            DegreeBasis::Wedges(crit.per_degree[k].iter().map(|&i| ws[i as usize]).collect())
        })
        .collect();
    Ok(ChainComplex::from_parts(
        c.ring().clone(),
        c.kind().clone(),
        bases,
        boundaries,
        c.is_truncated(),
    ))
}

/// Build the normalization-reduced complex directly, enumerating only
/// critical wedges; avoids materializing the full complex.
pub fn normalized_complex_direct(
    g: std::sync::Arc<LieAlgebra>,
    ring: &CoefficientRing,
    opts: BuildOptions,
) -> Result<ChainComplex, MorseError> {
    check_diagonals(&g)?;
    let keep_g = g.clone();
    let ring2 = ring.clone();
    Ok(build_ce_filtered(
        g,
        ring,
        move |w| is_normalization_critical(&keep_g, &ring2, w),
        opts,
    )?)
}

/// Per-degree critical counts without building matrices or storing
/// wedges.
pub fn normalization_critical_counts(
    g: &LieAlgebra,
    ring: &CoefficientRing,
    size_cap: u64,
) -> Result<Vec<usize>, MorseError> {
    check_diagonals(g)?;
    let rank = g.rank();
    if rank > 63 {
        return Err(ChainError::TooManyGenerators(rank).into());
    }
    if (1u128 << rank) > size_cap as u128 {
        return Err(ChainError::ComplexTooLarge { size: 1u128 << rank, cap: size_cap }.into());
    }
    let total = 1u64 << rank;
    let chunk = 1u64 << 16;
    let counts = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|ci| {
            let mut local = vec![0usize; rank + 1];
            let end = ((ci + 1) * chunk).min(total);
            for bits in (ci * chunk)..end {
                let w = Wedge::from_bits(bits);
                if is_normalization_critical(g, ring, w) {
                    local[w.len()] += 1;
                }
            }
            local
        })
        .reduce(
            || vec![0usize; rank + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(counts)
}

/// Pair every face not containing `vertex` with its cone; valid whenever
/// `vertex` is a cone point of the complex (run [`validate_matching`]
/// otherwise).
pub fn star_matching(c: &ChainComplex, vertex: &str) -> Result<Matching, MorseError> {
    let ComplexKind::Simplicial { vertices } = c.kind() else {
        return Err(MorseError::NotSimplicial);
    };
    let vpos = vertices
        .iter()
        .position(|v| v == vertex)
        .ok_or_else(|| MorseError::NoSuchVertex(vertex.to_string()))? as u32;
    let mut pairs = Vec::new();
    for k in 1..=c.top_degree() {
        let index_below = c.wedge_index(k - 1)?;
        for (id, &w) in c.wedges(k)?.iter().enumerate() {
            if !w.contains(vpos) {
                continue;
            }
            let lower = w.without(vpos);
            if let Some(&low_id) = index_below.get(&lower) {
                pairs.push(MatchedPair { degree: k, upper: id as u32, lower: low_id });
            }
        }
    }
    Ok(Matching { pairs, status: MatchingStatus::Unchecked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::{build_ce_complex, simplicial_chain_complex};
    use crate::homology::{homology_over_Z, HomologyModule};
    use std::sync::Arc;

    fn z() -> CoefficientRing {
        CoefficientRing::Integers
    }

    fn names(f: &[&str]) -> Vec<Vec<String>> {
        f.iter()
            .map(|s| s.chars().map(|c| c.to_string()).collect())
            .collect()
    }

    #[test]
    fn sol2_critical_set() {
        let g = Arc::new(LieAlgebra::sol(2));
        let c = build_ce_complex(g.clone(), &z()).unwrap();
        let m = normalization_matching(&c).unwrap();
        assert_eq!(validate_matching(&c, &m), MatchingStatus::Valid);
        let crit = critical_vertices(&c, &m);
        assert_eq!(crit.counts(), vec![1, 2, 1, 0]);
        // Critical wedges are exactly the diagonal subsets.
        let e11 = g.position_of(crate::lie::BasisLabel::Unit(1, 1)).unwrap();
        let e22 = g.position_of(crate::lie::BasisLabel::Unit(2, 2)).unwrap();
        let deg1: Vec<Wedge> = crit.per_degree[1]
            .iter()
            .map(|&i| c.wedges(1).unwrap()[i as usize])
            .collect();
        assert_eq!(
            deg1,
            vec![Wedge::from_positions(&[e11]), Wedge::from_positions(&[e22])]
        );
        let red = normalization_reduce(&c).unwrap();
        assert_eq!(red.dims(), vec![1, 2, 1, 0]);
        assert_eq!(homology_over_Z(&red).unwrap().dims(), vec![1, 2, 1, 0]);
    }

    #[test]
    fn large_characteristic_leaves_diagonal_subsets() {
        // Over Q or Z/p with p >= n every nonzero weight is a unit, so
        // critical wedges are exactly the 2^n diagonal subsets and the
        // reduced boundary vanishes.
        for ring in [CoefficientRing::Rationals, CoefficientRing::modular(5).unwrap()] {
            let g = Arc::new(LieAlgebra::sol(3));
            let c = build_ce_complex(g, &ring).unwrap();
            let red = normalization_reduce(&c).unwrap();
            assert_eq!(red.dims(), vec![1, 3, 3, 1, 0, 0, 0]);
            for k in 1..=red.top_degree() {
                assert!(red.boundary(k).is_zero(), "ring {ring}, degree {k}");
            }
        }
    }

    #[test]
    fn diagonal_free_basis_is_all_critical() {
        let g = Arc::new(LieAlgebra::nil(3));
        let c = build_ce_complex(g, &z()).unwrap();
        let m = normalization_matching(&c).unwrap();
        assert!(m.pairs().is_empty());
        let red = normalization_reduce(&c).unwrap();
        assert_eq!(red.dims(), c.dims());
        for k in 0..=c.top_degree() {
            assert_eq!(red.boundary(k), c.boundary(k));
        }
    }

    #[test]
    fn empty_matching_is_trivial() {
        let g = Arc::new(LieAlgebra::sol(3));
        let c = build_ce_complex(g, &z()).unwrap();
        let m = Matching::empty();
        assert_eq!(validate_matching(&c, &m), MatchingStatus::Valid);
        assert_eq!(critical_vertices(&c, &m).total(), c.total_dim());
        let red = reduce_by_matching(&c, &m);
        assert_eq!(red.dims(), c.dims());
        for k in 0..=c.top_degree() {
            assert_eq!(red.boundary(k), c.boundary(k));
        }
    }

    #[test]
    fn zero_entry_pair_is_invalid() {
        let g = Arc::new(LieAlgebra::sol(2));
        let c = build_ce_complex(g, &z()).unwrap();
        // e11 ^ e22 has zero boundary; pairing it with e11 crosses a
        // zero entry.
        let m = Matching::from_pairs(vec![MatchedPair { degree: 2, upper: 1, lower: 0 }]);
        assert!(matches!(
            validate_matching(&c, &m),
            MatchingStatus::Invalid(InvalidReason::NonUnitEntry { .. })
        ));
    }

    #[test]
    fn shared_endpoint_is_invalid() {
        let g = Arc::new(LieAlgebra::sol(2));
        let c = build_ce_complex(g, &z()).unwrap();
        let m = Matching::from_pairs(vec![
            MatchedPair { degree: 2, upper: 0, lower: 1 },
            MatchedPair { degree: 2, upper: 2, lower: 1 },
        ]);
        assert!(matches!(
            validate_matching(&c, &m),
            MatchingStatus::Invalid(InvalidReason::SharedEndpoint { .. })
        ));
    }

    #[test]
    fn crossing_matching_has_cycle() {
        // Two pairs whose zig-zags chase each other in degree 4 of the
        // strictly-triangular 4x4 complex.
        let g = Arc::new(LieAlgebra::nil(4));
        let c = build_ce_complex(g.clone(), &z()).unwrap();
        let pos = |i, j| g.position_of(crate::lie::BasisLabel::Unit(i, j)).unwrap();
        let u1 = Wedge::from_positions(&[pos(1, 2), pos(1, 3), pos(2, 4), pos(3, 4)]);
        let u2 = Wedge::from_positions(&[pos(1, 2), pos(1, 4), pos(2, 3), pos(3, 4)]);
        let v1 = Wedge::from_positions(&[pos(1, 2), pos(1, 4), pos(2, 4)]);
        let v2 = Wedge::from_positions(&[pos(1, 3), pos(1, 4), pos(3, 4)]);
        let up = c.wedge_index(4).unwrap();
        let low = c.wedge_index(3).unwrap();
        let m = Matching::from_pairs(vec![
            MatchedPair { degree: 4, upper: up[&u1], lower: low[&v1] },
            MatchedPair { degree: 4, upper: up[&u2], lower: low[&v2] },
        ]);
        assert_eq!(
            validate_matching(&c, &m),
            MatchingStatus::Invalid(InvalidReason::Cycle { degree: 4 })
        );
    }

    #[test]
    fn reduction_agrees_with_restriction_for_normalization() {
        for n in 2..=4 {
            let c = build_ce_complex(Arc::new(LieAlgebra::sol(n)), &z()).unwrap();
            let m = normalization_matching(&c).unwrap().validated(&c);
            assert_eq!(*m.status(), MatchingStatus::Valid);
            let by_schur = reduce_by_matching(&c, &m);
            let by_restriction = normalization_reduce(&c).unwrap();
            assert_eq!(by_schur.dims(), by_restriction.dims());
            for k in 0..=by_schur.top_degree() {
                assert_eq!(
                    by_schur.boundary(k),
                    by_restriction.boundary(k),
                    "sol{n} degree {k}"
                );
            }
        }
    }

    #[test]
    fn direct_build_matches_reduction() {
        let ring = z();
        let g = Arc::new(LieAlgebra::sol(3));
        let full = build_ce_complex(g.clone(), &ring).unwrap();
        let red = normalization_reduce(&full).unwrap();
        let direct = normalized_complex_direct(g, &ring, BuildOptions::default()).unwrap();
        assert_eq!(red.dims(), direct.dims());
        for k in 0..=red.top_degree() {
            assert_eq!(red.boundary(k), direct.boundary(k));
        }
    }

    #[test]
    fn critical_counts_match_matching() {
        for ring in [z(), CoefficientRing::modular(2).unwrap(), CoefficientRing::modular(5).unwrap()] {
            let g = Arc::new(LieAlgebra::sol(4));
            let c = build_ce_complex(g.clone(), &ring).unwrap();
            let m = normalization_matching(&c).unwrap();
            let via_matching = critical_vertices(&c, &m).counts();
            let via_counts =
                normalization_critical_counts(&g, &ring, 1 << 24).unwrap();
            assert_eq!(via_matching, via_counts, "ring {ring}");
        }
    }

    #[test]
    fn so_char2_matching_is_valid() {
        let z2 = CoefficientRing::modular(2).unwrap();
        let g = Arc::new(LieAlgebra::so_char2(4));
        let c = build_ce_complex(g, &z2).unwrap();
        let m = normalization_matching(&c).unwrap();
        assert_eq!(validate_matching(&c, &m), MatchingStatus::Valid);
        let red = normalization_reduce(&c).unwrap();
        assert!(red.total_dim() < c.total_dim());
        assert!(red.check_d_squared());
    }

    #[test]
    fn simplicial_fixture_reduces_to_zero_boundary() {
        let facets = names(&[
            "ab", "ad", "bc", "cd", "de", "efg", "efh", "egh", "fgh", "ijkl",
        ]);
        let c = simplicial_chain_complex(&facets, false, &z()).unwrap();
        assert_eq!(c.dims(), vec![12, 17, 8, 1]);
        let pair_list = [
            ("ad", "a"), ("bc", "b"), ("cd", "c"), ("de", "e"),
            ("ef", "f"), ("eg", "g"), ("eh", "h"),
            ("efg", "fg"), ("efh", "fh"), ("egh", "gh"),
            ("ij", "j"), ("ik", "k"), ("il", "l"),
            ("ijk", "jk"), ("ijl", "jl"), ("ikl", "kl"), ("ijkl", "jkl"),
        ];
        let ComplexKind::Simplicial { vertices } = c.kind() else { unreachable!() };
        let wedge_of = |s: &str| {
            let ps: Vec<u32> = s
                .chars()
                .map(|ch| {
                    vertices.iter().position(|v| *v == ch.to_string()).unwrap() as u32
                })
                .collect();
            Wedge::from_positions(&ps)
        };
        let mut pairs = Vec::new();
        for (hi, lo) in pair_list {
            let k = hi.len() - 1;
            pairs.push(MatchedPair {
                degree: k,
                upper: c.wedge_index(k).unwrap()[&wedge_of(hi)],
                lower: c.wedge_index(k - 1).unwrap()[&wedge_of(lo)],
            });
        }
        let m = Matching::from_pairs(pairs).validated(&c);
        assert_eq!(*m.status(), MatchingStatus::Valid);

        let crit = critical_vertices(&c, &m);
        assert_eq!(crit.counts(), vec![2, 1, 1, 0]);
        let red = reduce_by_matching(&c, &m);
        // The two paths from ab down to d cancel; everything else dies
        // too, leaving a zero boundary (H = R^2, R, R).
        for k in 1..=red.top_degree() {
            assert!(red.boundary(k).is_zero(), "degree {k}");
        }
        // Path enumeration builds the same matrices.
        for k in 1..=red.top_degree() {
            assert_eq!(&gradient_flow_boundary(&c, &m, k), red.boundary(k));
        }
        assert_eq!(
            homology_over_Z(&red).unwrap().modules().unwrap()[..3],
            [HomologyModule::free(2), HomologyModule::free(1), HomologyModule::free(1)]
        );
    }

    #[test]
    fn star_matching_on_ball_and_sphere() {
        let ball = simplicial_chain_complex(&names(&["abc"]), false, &z()).unwrap();
        let m = star_matching(&ball, "a").unwrap().validated(&ball);
        assert_eq!(*m.status(), MatchingStatus::Valid);
        assert_eq!(critical_vertices(&ball, &m).counts(), vec![1, 0, 0]);

        let sphere =
            simplicial_chain_complex(&names(&["abc", "abd", "acd", "bcd"]), false, &z()).unwrap();
        let m = star_matching(&sphere, "a").unwrap().validated(&sphere);
        assert_eq!(*m.status(), MatchingStatus::Valid);
        let crit = critical_vertices(&sphere, &m);
        assert_eq!(crit.counts(), vec![1, 0, 1]);
        // The surviving triangle is the one missing the cone point.
        let w = sphere.wedges(2).unwrap()[crit.per_degree[2][0] as usize];
        assert_eq!(w.len(), 3);
        assert!(!w.contains(0));
        let red = reduce_by_matching(&sphere, &m);
        assert_eq!(homology_over_Z(&red).unwrap().dims(), vec![1, 0, 1]);
    }

    #[test]
    fn gradient_flow_matches_schur_on_lie_complexes() {
        let c = build_ce_complex(Arc::new(LieAlgebra::sol(3)), &z()).unwrap();
        let m = normalization_matching(&c).unwrap().validated(&c);
        let red = reduce_by_matching(&c, &m);
        for k in 1..=red.top_degree() {
            assert_eq!(&gradient_flow_boundary(&c, &m, k), red.boundary(k), "degree {k}");
        }
    }

    #[test]
    fn emit_lines_round_trip() {
        let c = build_ce_complex(Arc::new(LieAlgebra::sol(2)), &z()).unwrap();
        let m = normalization_matching(&c).unwrap();
        let text = m.emit_lines(&c).unwrap();
        for (line, p) in text.lines().zip(m.pairs()) {
            let parts: Vec<u64> = line.split(' ').map(|t| t.parse().unwrap()).collect();
            assert_eq!(parts[0] as usize, p.degree);
            assert_eq!(parts[1].count_ones(), parts[0] as u32);
            assert_eq!(parts[2].count_ones(), parts[0] as u32 - 1);
        }
        assert_eq!(text.lines().count(), m.len());
    }
}
