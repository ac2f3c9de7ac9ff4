//! Weight subcomplexes and tensor products.
//!
//! Restricting a matrix-unit complex to wedges whose index weights all
//! vanish mod `p` yields a subcomplex that concentrates the p-torsion.
//! Over ℤ/p the normalization-reduced complex of the full algebra
//! factors as (p-subcomplex of the strict algebra) ⊗ (diagonal complex);
//! [`verify_tensor_factorization`] checks that isomorphism entrywise and
//! [`predicted_mod_p_dims`] turns it into dimension formulas.

use std::sync::Arc;

use thiserror::Error;

use crate::chain::{
    build_ce_complex, wedge_weights, ChainComplex, ChainError, ComplexKind, DegreeBasis,
    Wedge,
};
use crate::homology::{homology_over_field, homology_over_Z, HomologyError, HomologyTable};
use crate::lie::{BasisLabel, LieAlgebra};
use crate::matrix::{Scalar, SparseMatrix};
use crate::morse::{normalized_complex_direct, MorseError};
use crate::poset::Poset;
use crate::ring::CoefficientRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubcomplexError {
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
    #[error(transparent)]
    Morse(#[from] MorseError),
}

/// Keeps wedges all of whose index weights are multiples of `p`.
#[derive(Copy, Clone, Debug)]
pub struct WeightFilter {
    p: u64,
}

impl WeightFilter {
    pub fn new(p: u64) -> WeightFilter {
        assert!(p >= 2, "weight filter needs a modulus >= 2");
        WeightFilter { p }
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn accepts(&self, g: &LieAlgebra, w: Wedge) -> Result<bool, ChainError> {
        let weights = wedge_weights(g, w)?;
        Ok(weights.values().all(|&wt| wt.rem_euclid(self.p as i64) == 0))
    }
}

/// Restriction of a matrix-unit complex to the weight filter.  The
/// filter commutes with the boundary; this is asserted entry by entry
/// during construction.
pub fn p_subcomplex(c: &ChainComplex, p: u64) -> Result<ChainComplex, ChainError> {
    let g = c.lie_algebra().ok_or(ChainError::NotLieComplex)?.clone();
    let filter = WeightFilter::new(p);
    let top = c.top_degree();
    let mut keep: Vec<Vec<u32>> = Vec::with_capacity(top + 1);
    for k in 0..=top {
        let mut ids = Vec::new();
        for (i, &w) in c.wedges(k)?.iter().enumerate() {
            if filter.accepts(&g, w)? {
                ids.push(i as u32);
            }
        }
        keep.push(ids);
    }
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(SparseMatrix::zero(0, keep[0].len()));
    for k in 1..=top {
        let d = c.boundary(k);
        let restricted = d.restrict(&keep[k - 1], &keep[k]);
        // Boundary stability: no entry of a kept column may leave the
        // filtered span.
        let full_nnz: usize = keep[k].iter().map(|&col| d.column(col).len()).sum();
        assert_eq!(
            restricted.nnz(),
            full_nnz,
            "weight filter lost boundary entries in degree {k}"
        );
        boundaries.push(restricted);
    }
    let bases = (0..=top)
        .map(|k| {
            let ws = c.wedges(k).expect("checked above");
            DegreeBasis::Wedges(keep[k].iter().map(|&i| ws[i as usize]).collect())
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

/// Index arithmetic for the tensor basis: degree-k elements are pairs
/// `(a, b)` with `|a| + |b| = k`, ordered by left degree, then left
/// index, then right index.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    dims_a: Vec<usize>,
    dims_b: Vec<usize>,
}

impl TensorLayout {
    pub fn new(a: &ChainComplex, b: &ChainComplex) -> TensorLayout {
        TensorLayout { dims_a: a.dims(), dims_b: b.dims() }
    }

    pub fn top_degree(&self) -> usize {
        self.dims_a.len() + self.dims_b.len() - 2
    }

    fn left_range(&self, k: usize) -> std::ops::RangeInclusive<usize> {
        let lo = k.saturating_sub(self.dims_b.len() - 1);
        let hi = k.min(self.dims_a.len() - 1);
        lo..=hi
    }

    pub fn dim(&self, k: usize) -> usize {
        if k > self.top_degree() {
            return 0;
        }
        self.left_range(k).map(|i| self.dims_a[i] * self.dims_b[k - i]).sum()
    }

    /// Flat index of `(a_index in degree i, b_index in degree k - i)`.
    pub fn index(&self, k: usize, i: usize, ai: u32, bi: u32) -> u32 {
        let mut offset = 0usize;
        for i2 in self.left_range(k) {
            if i2 == i {
                return (offset + ai as usize * self.dims_b[k - i] + bi as usize) as u32;
            }
            offset += self.dims_a[i2] * self.dims_b[k - i2];
        }
        unreachable!("left degree {i} out of range for total degree {k}")
    }
}

/// Tensor product with the Koszul sign rule:
/// `d(a⊗b) = (da)⊗b + (-1)^(|a|) a⊗(db)`.
pub fn tensor_complex(a: &ChainComplex, b: &ChainComplex) -> ChainComplex {
    assert_eq!(a.ring(), b.ring(), "tensor factors must share a ring");
    let ring = a.ring().clone();
    let layout = TensorLayout::new(a, b);
    let top = layout.top_degree();
    let bases: Vec<DegreeBasis> = (0..=top).map(|k| DegreeBasis::Free(layout.dim(k))).collect();
    let mut boundaries = Vec::with_capacity(top + 1);
    boundaries.push(SparseMatrix::zero(0, layout.dim(0)));
    for k in 1..=top {
        let mut triplets: Vec<(u32, u32, Scalar)> = Vec::new();
        for i in layout.left_range(k) {
            let j = k - i;
            for ai in 0..a.dim(i) as u32 {
                for bi in 0..b.dim(j) as u32 {
                    let col = layout.index(k, i, ai, bi);
                    if i >= 1 {
                        for &(ar, _, ref v) in a.boundary(i).column(ai) {
                            let row = layout.index(k - 1, i - 1, ar, bi);
                            triplets.push((row, col, v.clone()));
                        }
                    }
                    if j >= 1 {
                        for &(br, _, ref v) in b.boundary(j).column(bi) {
                            let row = layout.index(k - 1, i, ai, br);
                            let signed = if i % 2 == 0 { v.clone() } else { ring.neg(v) };
                            triplets.push((row, col, signed));
                        }
                    }
                }
            }
        }
        boundaries.push(SparseMatrix::from_triplets(
            layout.dim(k - 1),
            layout.dim(k),
            triplets,
            &ring,
        ));
    }
    ChainComplex::from_parts(
        ring,
        ComplexKind::Opaque,
        bases,
        boundaries,
        a.is_truncated() || b.is_truncated(),
    )
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeAgreement {
    pub degree: usize,
    pub lhs_dim: usize,
    pub rhs_dim: usize,
    pub boundaries_match: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub degrees: Vec<DegreeAgreement>,
}

impl FactorizationReport {
    pub fn all_match(&self) -> bool {
        self.degrees.iter().all(|d| d.lhs_dim == d.rhs_dim && d.boundaries_match)
    }
}

/// Sign of merging the (ascending) nondiagonal and (ascending) diagonal
/// factor lists into one ascending list: parity of the straddling pairs.
fn merge_sign(nondiag_mask: u64, diag_mask: u64) -> i64 {
    let mut inversions = 0u32;
    let mut m = diag_mask;
    while m != 0 {
        let d = m.trailing_zeros();
        m &= m - 1;
        inversions += (nondiag_mask >> (d + 1)).count_ones();
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Check, degree by degree and entry by entry, that the reduced complex
/// of the poset algebra over ℤ/p equals the tensor product of the
/// p-subcomplex of its strict part with the diagonal complex, under the
/// split-a-wedge-into-parts bijection.
pub fn verify_tensor_factorization(
    p: &Poset,
    prime: u64,
) -> Result<FactorizationReport, SubcomplexError> {
    let ring = CoefficientRing::modular(prime).map_err(|_| HomologyError::CompositeModulus(prime))?;
    if !ring.is_field() {
        return Err(HomologyError::CompositeModulus(prime).into());
    }
    let n = p.n();
    let full = Arc::new(LieAlgebra::gl_poset(p, false));
    let strict = Arc::new(LieAlgebra::gl_poset(p, true));
    let diag = Arc::new(LieAlgebra::dgn(n));

    let lhs = normalized_complex_direct(full.clone(), &ring, Default::default())?;
    let strict_full = build_ce_complex(strict.clone(), &ring)?;
    let a = p_subcomplex(&strict_full, prime)?;
    let b = build_ce_complex(diag.clone(), &ring)?;
    let rhs = tensor_complex(&a, &b);
    let layout = TensorLayout::new(&a, &b);

    // Split an LHS wedge into (tensor column, merge sign).
    let a_index: Vec<std::collections::HashMap<Wedge, u32>> = (0..=a.top_degree())
        .map(|k| a.wedge_index(k).unwrap())
        .collect();
    let b_index: Vec<std::collections::HashMap<Wedge, u32>> = (0..=b.top_degree())
        .map(|k| b.wedge_index(k).unwrap())
        .collect();
    let split = |k: usize, w: Wedge| -> Option<(u32, i64)> {
        let mut nd_strict = Wedge::EMPTY;
        let mut dg = Wedge::EMPTY;
        let mut nd_mask = 0u64;
        let mut dg_mask = 0u64;
        for pos in w.positions() {
            let label = full.label(pos);
            match label {
                BasisLabel::Unit(x, y) if x == y => {
                    dg = dg.with(diag.position_of(label)?);
                    dg_mask |= 1 << pos;
                }
                _ => {
                    nd_strict = nd_strict.with(strict.position_of(label)?);
                    nd_mask |= 1 << pos;
                }
            }
        }
        let i = nd_strict.len();
        let j = dg.len();
        debug_assert_eq!(i + j, k);
        let ai = *a_index.get(i)?.get(&nd_strict)?;
        let bi = *b_index.get(j)?.get(&dg)?;
        Some((layout.index(k, i, ai, bi), merge_sign(nd_mask, dg_mask)))
    };

    let mut degrees = Vec::new();
    for k in 0..=lhs.top_degree() {
        let lhs_dim = lhs.dim(k);
        let rhs_dim = rhs.dim(k);
        if lhs_dim != rhs_dim {
            degrees.push(DegreeAgreement { degree: k, lhs_dim, rhs_dim, boundaries_match: false });
            continue;
        }
        let matches = if k == 0 {
            true
        } else {
            let maps_above: Vec<Option<(u32, i64)>> = lhs
                .wedges(k)?
                .iter()
                .map(|&w| split(k, w))
                .collect();
            let maps_below: Vec<Option<(u32, i64)>> = lhs
                .wedges(k - 1)?
                .iter()
                .map(|&w| split(k - 1, w))
                .collect();
            if maps_above.iter().any(Option::is_none) || maps_below.iter().any(Option::is_none) {
                false
            } else {
                let transformed = SparseMatrix::from_triplets(
                    rhs.dim(k - 1),
                    rhs.dim(k),
                    lhs.boundary(k).entries().iter().map(|&(r, c, ref v)| {
                        let (tr, sr) = maps_below[r as usize].unwrap();
                        let (tc, sc) = maps_above[c as usize].unwrap();
                        let signed = ring.mul(v, &ring.scalar_from_i64(sr * sc));
                        (tr, tc, signed)
                    }),
                    &ring,
                );
                transformed == *rhs.boundary(k)
            }
        };
        degrees.push(DegreeAgreement { degree: k, lhs_dim, rhs_dim, boundaries_match: matches });
    }
    Ok(FactorizationReport { degrees })
}

fn binomial_row(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for k in 0..n {
        row.push(row[k] * (n - k) / (k + 1));
    }
    row
}

/// Mod-p homology dimensions of the poset algebra predicted from the
/// tensor factorization: convolve the p-subcomplex homology of the
/// strict part with the binomial dimensions of the diagonal part.
pub fn predicted_mod_p_dims(
    p: &Poset,
    prime: u64,
    kmax: usize,
) -> Result<Vec<usize>, SubcomplexError> {
    let ring = CoefficientRing::modular(prime).map_err(|_| HomologyError::CompositeModulus(prime))?;
    if !ring.is_field() {
        return Err(HomologyError::CompositeModulus(prime).into());
    }
    let strict = Arc::new(LieAlgebra::gl_poset(p, true));
    let sub = p_subcomplex(&build_ce_complex(strict, &ring)?, prime)?;
    let h = homology_over_field(&sub)?;
    let conv = crate::homology::kunneth_field_dims(&h.dims(), &binomial_row(p.n()));
    let mut out = conv;
    out.resize(kmax + 1, 0);
    Ok(out)
}

/// Integral homology of the p-weight subcomplex of a poset algebra.
pub fn integral_p_complex_homology(
    p: &Poset,
    prime: u64,
    strict: bool,
) -> Result<HomologyTable, SubcomplexError> {
    let g = Arc::new(LieAlgebra::gl_poset(p, strict));
    let c = build_ce_complex(g, &CoefficientRing::Integers)?;
    let sub = p_subcomplex(&c, prime)?;
    Ok(homology_over_Z(&sub)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::point_complex;
    use crate::homology::{field_rank, HomologyModule};

    fn z2() -> CoefficientRing {
        CoefficientRing::modular(2).unwrap()
    }

    #[test]
    fn nil_filter_examples() {
        let g = Arc::new(LieAlgebra::nil(4));
        let c = build_ce_complex(g.clone(), &CoefficientRing::Integers).unwrap();
        let sub = p_subcomplex(&c, 2).unwrap();
        assert_eq!(sub.dim(1), 0);
        assert_eq!(sub.dim(2), 0);
        // Degree 3: one triangle e_ab ^ e_ac ^ e_bc per a < b < c.
        assert_eq!(sub.dim(3), 4);
        for &w in sub.wedges(3).unwrap() {
            let idx: Vec<(u16, u16)> = w
                .positions()
                .map(|p| match g.label(p) {
                    BasisLabel::Unit(i, j) => (i, j),
                    _ => unreachable!(),
                })
                .collect();
            let (a, b) = idx[0];
            let (a2, c2) = idx[1];
            let (b2, c3) = idx[2];
            assert_eq!(a, a2);
            assert_eq!(b, b2);
            assert_eq!(c2, c3);
            assert!(a < b && b < c2);
        }
        // Degree 4: three quadruple shapes on any four indices.
        assert_eq!(sub.dim(4), 3);
    }

    #[test]
    fn subcomplex_keeps_boundary_closed() {
        // The construction asserts stability internally; exercise it on
        // several shapes and primes.
        for p in [2, 3, 5] {
            for strict in [false, true] {
                let g = Arc::new(LieAlgebra::gl_poset(&Poset::chain(4), strict));
                let c = build_ce_complex(g, &CoefficientRing::Integers).unwrap();
                let sub = p_subcomplex(&c, p).unwrap();
                assert!(sub.check_d_squared());
            }
        }
    }

    #[test]
    fn tensor_unit_is_identity() {
        let ring = z2();
        let a = build_ce_complex(Arc::new(LieAlgebra::sol(2)), &ring).unwrap();
        let t = tensor_complex(&a, &point_complex(&ring));
        assert_eq!(t.dims(), a.dims());
        for k in 1..=t.top_degree() {
            assert_eq!(t.boundary(k), a.boundary(k));
        }
    }

    #[test]
    fn tensor_square_is_a_complex() {
        let ring = CoefficientRing::Integers;
        let a = build_ce_complex(Arc::new(LieAlgebra::sol(2)), &ring).unwrap();
        let t = tensor_complex(&a, &a);
        assert!(t.check_d_squared());
        assert_eq!(t.dim(0), 1);
        assert_eq!(t.total_dim(), a.total_dim() * a.total_dim());
    }

    #[test]
    fn sol3_reduced_matches_tensor_dims_and_ranks() {
        let ring = z2();
        let sol = Arc::new(LieAlgebra::sol(3));
        let lhs = normalized_complex_direct(sol, &ring, Default::default()).unwrap();
        let nil = build_ce_complex(Arc::new(LieAlgebra::nil(3)), &ring).unwrap();
        let a = p_subcomplex(&nil, 2).unwrap();
        let b = build_ce_complex(Arc::new(LieAlgebra::dgn(3)), &ring).unwrap();
        let rhs = tensor_complex(&a, &b);
        assert_eq!(lhs.dims(), rhs.dims());
        for k in 1..=lhs.top_degree() {
            assert_eq!(
                field_rank(lhs.boundary(k), &ring),
                field_rank(rhs.boundary(k), &ring),
                "degree {k}"
            );
        }
    }

    #[test]
    fn factorization_chain3_entrywise() {
        let report = verify_tensor_factorization(&Poset::chain(3), 2).unwrap();
        assert!(report.all_match(), "{:?}", report.degrees);
    }

    #[test]
    fn factorization_antichain_is_trivial() {
        let report = verify_tensor_factorization(&Poset::antichain(3), 3).unwrap();
        assert!(report.all_match());
        // Nondiagonal part is empty, so both sides are the diagonal
        // complex of total dimension 2^3.
        let total: usize = report.degrees.iter().map(|d| d.lhs_dim).sum();
        assert_eq!(total, 8);
    }

    #[test]
    fn predictions_collapse_to_binomials_for_large_p() {
        let dims = predicted_mod_p_dims(&Poset::chain(3), 5, 6).unwrap();
        assert_eq!(dims, vec![1, 3, 3, 1, 0, 0, 0]);
    }

    #[test]
    fn predictions_chain4_mod2() {
        let dims = predicted_mod_p_dims(&Poset::chain(4), 2, 10).unwrap();
        let binom = binomial_row(4);
        let c = |k: i64| -> usize {
            if (0..=4).contains(&k) { binom[k as usize] } else { 0 }
        };
        let expect: Vec<usize> =
            (0..=10).map(|k| c(k) + 3 * c(k - 3) + 2 * c(k - 4)).collect();
        assert_eq!(dims, expect);
    }

    #[test]
    fn integral_subcomplex_tables() {
        let t3 = integral_p_complex_homology(&Poset::chain(3), 2, true).unwrap();
        let m3 = t3.modules().unwrap();
        assert_eq!(m3[3], HomologyModule::free(1));
        let t4 = integral_p_complex_homology(&Poset::chain(4), 2, true).unwrap();
        let m4 = t4.modules().unwrap();
        assert_eq!(m4[3], HomologyModule::from_primary(2, &[(2, 1)]));
        assert_eq!(m4[4], HomologyModule::free(1));
    }

    #[test]
    fn p_torsion_localizes_to_the_subcomplex() {
        // Per degree, the 2-power elementary divisors of the full
        // complex's homology equal those of the weight subcomplex.
        let full = build_ce_complex(Arc::new(LieAlgebra::sol(3)), &CoefficientRing::Integers)
            .unwrap();
        let sub = p_subcomplex(&full, 2).unwrap();
        let hf = homology_over_Z(&full).unwrap();
        let hs = homology_over_Z(&sub).unwrap();
        for (mf, ms) in hf.modules().unwrap().iter().zip(hs.modules().unwrap()) {
            let two_part = |m: &HomologyModule| -> Vec<(u64, usize)> {
                m.primary().into_iter().filter(|(v, _)| v % 2 == 0).collect()
            };
            assert_eq!(two_part(mf), two_part(ms));
        }
    }

    #[test]
    fn merge_sign_counts_straddles() {
        // nondiagonal at {0, 3}, diagonal at {1, 2}: pairs (3,1), (3,2).
        assert_eq!(merge_sign(0b1001, 0b0110), 1);
        // nondiagonal at {1}, diagonal at {0}: one straddle.
        assert_eq!(merge_sign(0b10, 0b01), -1);
        assert_eq!(merge_sign(0b11, 0), 1);
    }
}
