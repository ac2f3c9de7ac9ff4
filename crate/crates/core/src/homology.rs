//! Exact homology: Smith normal form over the integers, rank elimination
//! over fields, and the coefficient-change formulas that tie the two
//! together.

use std::collections::{BTreeMap, BTreeSet};

use num::bigint::BigInt;
use num::{Integer, One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::chain::ChainComplex;
use crate::matrix::{Scalar, SparseMatrix};
use crate::ring::CoefficientRing;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("integral homology requires integer coefficients, got {0}")]
    NotIntegral(String),
    #[error("field homology requires Q or Z/p coefficients, got {0}")]
    NotField(String),
}

/// Finitely generated abelian group: free part plus a divisibility chain
/// of torsion coefficients (each ≥ 2, each dividing the next).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyModule {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyModule {
    pub fn free(rank: usize) -> HomologyModule {
        HomologyModule { free_rank: rank, torsion: Vec::new() }
    }

    pub fn zero() -> HomologyModule {
        Self::free(0)
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Build from a primary decomposition given as
    /// `(prime power, multiplicity)` pairs, e.g. `[(2, 3), (4, 1)]` for
    /// (ℤ/2)³ ⊕ ℤ/4.
    pub fn from_primary(free_rank: usize, parts: &[(u64, usize)]) -> HomologyModule {
        let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
        for &(value, mult) in parts {
            let (p, e) = prime_power(value)
                .unwrap_or_else(|| panic!("{value} is not a prime power"));
            by_prime.entry(p).or_default().extend(std::iter::repeat_n(e, mult));
        }
        let chain_len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut torsion = vec![BigInt::one(); chain_len];
        for (p, mut exps) in by_prime {
            // Largest exponents go to the last (largest) factor.
            exps.sort_unstable();
            for (i, e) in exps.iter().rev().enumerate() {
                let slot = chain_len - 1 - i;
                torsion[slot] *= BigInt::from(p).pow(*e);
            }
        }
        HomologyModule { free_rank, torsion }
    }

    /// Primary decomposition as `(prime power, multiplicity)` pairs,
    /// sorted by prime then exponent.
    pub fn primary(&self) -> Vec<(u64, usize)> {
        let mut counts: BTreeMap<(u64, u32), usize> = BTreeMap::new();
        for d in &self.torsion {
            for (p, e) in factorize(d) {
                *counts.entry((p, e)).or_insert(0) += 1;
            }
        }
        counts.into_iter().map(|((p, e), m)| (p.pow(e), m)).collect()
    }

    /// Number of torsion coefficients divisible by `p` (the dimension
    /// contribution of this group's torsion over ℤ/p).
    pub fn p_torsion_count(&self, p: u64) -> usize {
        let p = BigInt::from(p);
        self.torsion.iter().filter(|d| d.is_multiple_of(&p)).count()
    }

    /// Display form, e.g. `Z^2 + Z2^3 + Z4` (torsion in primary style).
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for (value, mult) in self.primary() {
            if mult == 1 {
                parts.push(format!("Z{value}"));
            } else {
                parts.push(format!("Z{value}^{mult}"));
            }
        }
        parts.join(" + ")
    }
}

fn prime_power(value: u64) -> Option<(u64, u32)> {
    if value < 2 {
        return None;
    }
    let p = (2..=value).find(|d| value.is_multiple_of(*d))?;
    let mut v = value;
    let mut e = 0;
    while v.is_multiple_of(p) {
        v /= p;
        e += 1;
    }
    (v == 1).then_some((p, e))
}

fn factorize(d: &BigInt) -> Vec<(u64, u32)> {
    let mut v: u64 = d.try_into().expect("torsion coefficient out of u64 range");
    assert!(v >= 2);
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= v {
        if v.is_multiple_of(p) {
            let mut e = 0;
            while v.is_multiple_of(p) {
                v /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if v > 1 {
        out.push((v, 1));
    }
    out
}

/// Homology of a complex in all computed degrees, starting at degree 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologyTable {
    Integral(Vec<HomologyModule>),
    /// Per-degree dimensions over ℚ (`p = None`) or ℤ/p.
    Field { p: Option<u64>, dims: Vec<usize> },
}

impl HomologyTable {
    pub fn len(&self) -> usize {
        match self {
            HomologyTable::Integral(ms) => ms.len(),
            HomologyTable::Field { dims, .. } => dims.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn modules(&self) -> Option<&[HomologyModule]> {
        match self {
            HomologyTable::Integral(ms) => Some(ms),
            _ => None,
        }
    }

    pub fn dims(&self) -> Vec<usize> {
        match self {
            HomologyTable::Integral(ms) => ms.iter().map(|m| m.free_rank).collect(),
            HomologyTable::Field { dims, .. } => dims.clone(),
        }
    }

    /// Aligned two-column text table.
    pub fn render_text(&self, name: &str) -> String {
        let mut lines = vec![format!("{name}")];
        match self {
            HomologyTable::Integral(ms) => {
                let rendered: Vec<String> = ms.iter().map(HomologyModule::render).collect();
                for (k, r) in rendered.iter().enumerate() {
                    lines.push(format!("H_{k:<3} {r}"));
                }
            }
            HomologyTable::Field { dims, .. } => {
                for (k, d) in dims.iter().enumerate() {
                    lines.push(format!("H_{k:<3} dim {d}"));
                }
            }
        }
        lines.join("\n") + "\n"
    }

    /// CSV rows `n,k,free,torsion`, torsion rendered as `2^3·4^1` for
    /// (ℤ/2)³ ⊕ ℤ/4, empty when torsion-free.
    pub fn render_csv(&self, n: &str) -> String {
        let mut out = String::from("n,k,free,torsion\n");
        match self {
            HomologyTable::Integral(ms) => {
                for (k, m) in ms.iter().enumerate() {
                    let torsion = m
                        .primary()
                        .iter()
                        .map(|(v, c)| format!("{v}^{c}"))
                        .collect::<Vec<_>>()
                        .join("·");
                    out.push_str(&format!("{n},{k},{},{torsion}\n", m.free_rank));
                }
            }
            HomologyTable::Field { dims, .. } => {
                for (k, d) in dims.iter().enumerate() {
                    out.push_str(&format!("{n},{k},{d},\n"));
                }
            }
        }
        out
    }

    pub fn render_json(&self, name: &str) -> String {
        #[derive(Serialize)]
        struct Group {
            k: usize,
            free: usize,
            torsion: Vec<u64>,
        }
        #[derive(Serialize)]
        struct Doc<'a> {
            name: &'a str,
            ring: String,
            groups: Vec<Group>,
        }
        let (ring, groups) = match self {
            HomologyTable::Integral(ms) => (
                "Z".to_string(),
                ms.iter()
                    .enumerate()
                    .map(|(k, m)| Group {
                        k,
                        free: m.free_rank,
                        torsion: m
                            .primary()
                            .iter()
                            .flat_map(|&(v, c)| std::iter::repeat_n(v, c))
                            .collect(),
                    })
                    .collect(),
            ),
            HomologyTable::Field { p, dims } => (
                p.map_or("Q".to_string(), |p| format!("Z/{p}")),
                dims.iter()
                    .enumerate()
                    .map(|(k, &d)| Group { k, free: d, torsion: Vec::new() })
                    .collect(),
            ),
        };
        serde_json::to_string_pretty(&Doc { name, ring, groups }).unwrap() + "\n"
    }
}

// ---------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------

struct SnfState {
    rows: Vec<BTreeMap<u32, BigInt>>,
    col_rows: Vec<BTreeSet<u32>>,
    active_rows: BTreeSet<u32>,
}

impl SnfState {
    fn new(a: &SparseMatrix) -> SnfState {
        let mut rows = vec![BTreeMap::new(); a.rows()];
        let mut col_rows = vec![BTreeSet::new(); a.cols()];
        for &(r, c, ref v) in a.entries() {
            let i: BigInt = v.to_integer();
            assert!(!i.is_zero());
            rows[r as usize].insert(c, i);
            col_rows[c as usize].insert(r);
        }
        let active_rows = (0..a.rows() as u32).collect();
        SnfState { rows, col_rows, active_rows }
    }

    fn set(&mut self, r: u32, c: u32, v: BigInt) {
        if v.is_zero() {
            if self.rows[r as usize].remove(&c).is_some() {
                self.col_rows[c as usize].remove(&r);
            }
        } else {
            if self.rows[r as usize].insert(c, v).is_none() {
                self.col_rows[c as usize].insert(r);
            }
        }
    }

    /// row[target] -= q * row[source]
    fn row_op(&mut self, target: u32, source: u32, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let src: Vec<(u32, BigInt)> =
            self.rows[source as usize].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src {
            let cur = self.rows[target as usize].get(&c).cloned().unwrap_or_else(BigInt::zero);
            self.set(target, c, cur - q * v);
        }
    }

    /// col[target] -= q * col[source]
    fn col_op(&mut self, target: u32, source: u32, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let rows_touching: Vec<u32> = self.col_rows[source as usize].iter().copied().collect();
        for r in rows_touching {
            let v = self.rows[r as usize][&source].clone();
            let cur = self.rows[r as usize].get(&target).cloned().unwrap_or_else(BigInt::zero);
            self.set(r, target, cur - q * &v);
        }
    }

    /// Best remaining pivot: unit entries first, then smallest absolute
    /// value, ties broken by Markowitz fill count, then position.
    fn choose_pivot(&self) -> Option<(u32, u32)> {
        let mut best: Option<(bool, BigInt, usize, u32, u32)> = None;
        for &r in &self.active_rows {
            let row_nnz = self.rows[r as usize].len();
            if row_nnz == 0 {
                continue;
            }
            for (&c, v) in &self.rows[r as usize] {
                let a = v.abs();
                let non_unit = !a.is_one();
                let fill = (row_nnz - 1) * (self.col_rows[c as usize].len() - 1);
                let key = (non_unit, a, fill, r, c);
                if best.as_ref().is_none_or(|b| key < *b) {
                    best = Some(key);
                }
            }
        }
        best.map(|(_, _, _, r, c)| (r, c))
    }

    /// Clear the pivot's row and column with exact integer operations,
    /// chasing remainders onto the pivot until it divides everything it
    /// meets.  Returns the isolated pivot value.
    fn isolate(&mut self, mut r: u32, mut c: u32) -> BigInt {
        loop {
            let v = self.rows[r as usize][&c].clone();
            let other_row = self.col_rows[c as usize].iter().copied().find(|&x| x != r);
            if let Some(r2) = other_row {
                let a = self.rows[r2 as usize][&c].clone();
                let q = &a / &v;
                self.row_op(r2, r, &q);
                if self.rows[r2 as usize].contains_key(&c) {
                    // Remainder is smaller than the pivot; move there.
                    r = r2;
                }
                continue;
            }
            let other_col = self.rows[r as usize].keys().copied().find(|&x| x != c);
            if let Some(c2) = other_col {
                let a = self.rows[r as usize][&c2].clone();
                let q = &a / &v;
                self.col_op(c2, c, &q);
                if self.rows[r as usize].contains_key(&c2) {
                    c = c2;
                }
                continue;
            }
            self.active_rows.remove(&r);
            let v = self.rows[r as usize].remove(&c).unwrap();
            self.col_rows[c as usize].remove(&r);
            return v.abs();
        }
    }
}

/// Diagonal of the Smith normal form: the divisor chain `d₁ | d₂ | …`
/// (ones included) together with the rank.
pub fn smith_normal_form(a: &SparseMatrix) -> (Vec<BigInt>, usize) {
    let mut st = SnfState::new(a);
    let mut divisors = Vec::new();
    while let Some((r, c)) = st.choose_pivot() {
        divisors.push(st.isolate(r, c));
    }
    divisors.sort();
    // Pairwise gcd/lcm sweeps restore the divisibility chain.
    loop {
        let mut changed = false;
        for i in 0..divisors.len() {
            for j in (i + 1)..divisors.len() {
                if !divisors[j].is_multiple_of(&divisors[i]) {
                    let g = divisors[i].gcd(&divisors[j]);
                    let l = &divisors[i] * &divisors[j] / &g;
                    divisors[i] = g;
                    divisors[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    let rank = divisors.len();
    (divisors, rank)
}

// ---------------------------------------------------------------------
// Field rank
// ---------------------------------------------------------------------

/// Rank by sparse Gaussian elimination with ring-mediated arithmetic.
pub fn field_rank(a: &SparseMatrix, ring: &CoefficientRing) -> usize {
    assert!(ring.is_field(), "rank elimination needs a field");
    let mut rows: Vec<BTreeMap<u32, Scalar>> = vec![BTreeMap::new(); a.rows()];
    for &(r, c, ref v) in a.entries() {
        rows[r as usize].insert(c, v.clone());
    }
    let mut active: BTreeSet<u32> = (0..a.rows() as u32).collect();
    let mut rank = 0;
    // Shortest active row, ties by index; pivot on its first column.
    while let Some((_, r)) = active
        .iter()
        .filter(|&&r| !rows[r as usize].is_empty())
        .map(|&r| (rows[r as usize].len(), r))
        .min()
    {
        let (&c, v) = rows[r as usize].iter().next().unwrap();
        let inv = ring.invert(v).expect("nonzero entry must be a unit in a field");
        let pivot_row: Vec<(u32, Scalar)> = rows[r as usize]
            .iter()
            .map(|(&cc, vv)| (cc, ring.mul(vv, &inv)))
            .collect();
        rank += 1;
        active.remove(&r);
        rows[r as usize].clear();
        for &r2 in active.iter().collect::<Vec<_>>() {
            let Some(factor) = rows[r2 as usize].get(&c).cloned() else {
                continue;
            };
            for (cc, vv) in &pivot_row {
                let cur = rows[r2 as usize].get(cc).cloned().unwrap_or_else(|| ring.canon(Scalar::zero()));
                let next = ring.sub(&cur, &ring.mul(&factor, vv));
                if next.is_zero() {
                    rows[r2 as usize].remove(cc);
                } else {
                    rows[r2 as usize].insert(*cc, next);
                }
            }
            debug_assert!(!rows[r2 as usize].contains_key(&c));
        }
    }
    rank
}

// ---------------------------------------------------------------------
// Homology assembly
// ---------------------------------------------------------------------

fn computable_degrees(c: &ChainComplex) -> usize {
    // A truncated complex lacks the boundary into its top degree's
    // homology, so that degree is excluded.
    if c.is_truncated() {
        c.top_degree()
    } else {
        c.top_degree() + 1
    }
}

/// Integral homology from Smith normal forms of all boundaries.
#[allow(non_snake_case)]
pub fn homology_over_Z(c: &ChainComplex) -> Result<HomologyTable, HomologyError> {
    if !matches!(c.ring(), CoefficientRing::Integers) {
        return Err(HomologyError::NotIntegral(c.ring().to_string()));
    }
    let top = c.top_degree();
    let snf: Vec<(Vec<BigInt>, usize)> = (0..=top)
        .into_par_iter()
        .map(|k| smith_normal_form(c.boundary(k)))
        .collect();
    let degrees = computable_degrees(c);
    let mut table = Vec::with_capacity(degrees);
    for k in 0..degrees {
        let rank_in = if k < top { snf[k + 1].1 } else { 0 };
        let free_rank = c.dim(k) - snf[k].1 - rank_in;
        let torsion: Vec<BigInt> = if k < top {
            snf[k + 1].0.iter().filter(|d| !d.is_one()).cloned().collect()
        } else {
            Vec::new()
        };
        table.push(HomologyModule { free_rank, torsion });
    }
    Ok(HomologyTable::Integral(table))
}

/// Per-degree dimensions over ℚ or ℤ/p by exact rank elimination.
pub fn homology_over_field(c: &ChainComplex) -> Result<HomologyTable, HomologyError> {
    let p = match c.ring() {
        CoefficientRing::Rationals => None,
        CoefficientRing::ModularIntegers(m) => {
            if !c.ring().is_field() {
                return Err(HomologyError::CompositeModulus(*m));
            }
            Some(*m)
        }
        CoefficientRing::Integers => {
            return Err(HomologyError::NotField("Z".into()));
        }
    };
    let top = c.top_degree();
    let ranks: Vec<usize> = (0..=top)
        .into_par_iter()
        .map(|k| field_rank(c.boundary(k), c.ring()))
        .collect();
    let degrees = computable_degrees(c);
    let dims = (0..degrees)
        .map(|k| {
            let rank_in = if k < top { ranks[k + 1] } else { 0 };
            c.dim(k) - ranks[k] - rank_in
        })
        .collect();
    Ok(HomologyTable::Field { p, dims })
}

/// Dimensions over ℤ/p predicted from integral homology: free rank plus
/// p-torsion of this degree plus p-torsion one degree below.
pub fn betti_mod_p_from_integral(modules: &[HomologyModule], p: u64) -> Vec<usize> {
    (0..modules.len())
        .map(|k| {
            let own = modules[k].free_rank + modules[k].p_torsion_count(p);
            let below = if k > 0 { modules[k - 1].p_torsion_count(p) } else { 0 };
            own + below
        })
        .collect()
}

/// Graded dimensions of a tensor product over a field:
/// `c_k = Σ_{i+j=k} a_i b_j`.
pub fn kunneth_field_dims(a: &[usize], b: &[usize]) -> Vec<usize> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] += x * y;
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::build_ce_complex;
    use crate::lie::LieAlgebra;
    use crate::matrix::int;
    use std::sync::Arc;

    fn snf_of(entries: &[(u32, u32, i64)], rows: usize, cols: usize) -> (Vec<BigInt>, usize) {
        let m = SparseMatrix::from_triplets(
            rows,
            cols,
            entries.iter().map(|&(r, c, v)| (r, c, int(v))),
            &CoefficientRing::Integers,
        );
        smith_normal_form(&m)
    }

    #[test]
    fn snf_examples() {
        // diag(2,3) ~ diag(1,6)
        let (d, rank) = snf_of(&[(0, 0, 2), (1, 1, 3)], 2, 2);
        assert_eq!(rank, 2);
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(6)]);
        // zero matrix
        let (d, rank) = snf_of(&[], 3, 4);
        assert_eq!(rank, 0);
        assert!(d.is_empty());
        // a classic: [[2,4,4],[-6,6,12],[10,-4,-16]] ~ diag(2,6,12)
        let (d, rank) = snf_of(
            &[
                (0, 0, 2), (0, 1, 4), (0, 2, 4),
                (1, 0, -6), (1, 1, 6), (1, 2, 12),
                (2, 0, 10), (2, 1, -4), (2, 2, -16),
            ],
            3,
            3,
        );
        assert_eq!(rank, 3);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    }

    #[test]
    fn sol3_integral_column() {
        let c = build_ce_complex(Arc::new(LieAlgebra::sol(3)), &CoefficientRing::Integers)
            .unwrap();
        let t = homology_over_Z(&c).unwrap();
        let ms = t.modules().unwrap();
        let expect = [
            HomologyModule::free(1),
            HomologyModule::free(3),
            HomologyModule::free(3),
            HomologyModule::from_primary(1, &[(2, 1)]),
            HomologyModule::from_primary(0, &[(2, 2)]),
            HomologyModule::from_primary(0, &[(2, 1)]),
            HomologyModule::zero(),
        ];
        assert_eq!(ms, &expect);
    }

    #[test]
    fn dgn_homology_is_binomial() {
        let c = build_ce_complex(Arc::new(LieAlgebra::dgn(4)), &CoefficientRing::Integers)
            .unwrap();
        let t = homology_over_Z(&c).unwrap();
        assert_eq!(t.dims(), vec![1, 4, 6, 4, 1]);
        assert!(t.modules().unwrap().iter().all(|m| m.torsion.is_empty()));
    }

    #[test]
    fn sol3_mod2_dims_both_routes() {
        let z2 = CoefficientRing::modular(2).unwrap();
        let g = Arc::new(LieAlgebra::sol(3));
        let c2 = build_ce_complex(g.clone(), &z2).unwrap();
        let direct = homology_over_field(&c2).unwrap();
        assert_eq!(direct.dims(), vec![1, 3, 3, 2, 3, 3, 1]);

        let cz = build_ce_complex(g, &CoefficientRing::Integers).unwrap();
        let integral = homology_over_Z(&cz).unwrap();
        let predicted = betti_mod_p_from_integral(integral.modules().unwrap(), 2);
        assert_eq!(predicted, direct.dims());
    }

    #[test]
    fn sol_over_q_is_binomial() {
        for n in 1..=4 {
            let c = build_ce_complex(Arc::new(LieAlgebra::sol(n)), &CoefficientRing::Rationals)
                .unwrap();
            let t = homology_over_field(&c).unwrap();
            let binom: Vec<usize> = (0..=c.top_degree())
                .map(|k| {
                    if k > n {
                        return 0;
                    }
                    let mut v = 1usize;
                    for i in 0..k {
                        v = v * (n - i) / (i + 1);
                    }
                    v
                })
                .collect();
            assert_eq!(t.dims(), binom, "sol{n} over Q");
        }
    }

    #[test]
    fn composite_modulus_rejected() {
        let z6 = CoefficientRing::modular(6).unwrap();
        let c = build_ce_complex(Arc::new(LieAlgebra::sol(2)), &z6).unwrap();
        assert_eq!(
            homology_over_field(&c).unwrap_err(),
            HomologyError::CompositeModulus(6)
        );
    }

    #[test]
    fn alternating_sums_agree() {
        let z2 = CoefficientRing::modular(2).unwrap();
        let c = build_ce_complex(Arc::new(LieAlgebra::sol(3)), &z2).unwrap();
        let t = homology_over_field(&c).unwrap();
        let chi_c: i64 = (0..=c.top_degree())
            .map(|k| {
                let d = c.dim(k) as i64;
                if k % 2 == 0 { d } else { -d }
            })
            .sum();
        let chi_h: i64 = t
            .dims()
            .iter()
            .enumerate()
            .map(|(k, &d)| if k % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        assert_eq!(chi_c, chi_h);
    }

    #[test]
    fn primary_round_trip() {
        let m = HomologyModule::from_primary(2, &[(2, 3), (4, 1), (3, 2)]);
        // Chain: 2 | 2 | 12? No: exponents of 2 are [1,1,1,2], of 3 are
        // [1,1]; chain length 4 -> factors 2, 2, 6, 12.
        assert_eq!(
            m.torsion,
            vec![BigInt::from(2), BigInt::from(2), BigInt::from(6), BigInt::from(12)]
        );
        assert_eq!(m.primary(), vec![(2, 3), (4, 1), (3, 2)]);
        assert_eq!(m.render(), "Z^2 + Z2^3 + Z4 + Z3^2");
        assert_eq!(m.p_torsion_count(2), 4);
        assert_eq!(m.p_torsion_count(3), 2);
    }

    #[test]
    fn kunneth_and_uct_basics() {
        assert_eq!(kunneth_field_dims(&[1, 1], &[1, 1]), vec![1, 2, 1]);
        assert_eq!(kunneth_field_dims(&[3, 1, 4], &[1]), vec![3, 1, 4]);
        let free = [HomologyModule::free(2), HomologyModule::free(5)];
        assert_eq!(betti_mod_p_from_integral(&free, 7), vec![2, 5]);
    }

    #[test]
    fn renders_are_stable() {
        let t = HomologyTable::Integral(vec![
            HomologyModule::free(1),
            HomologyModule::from_primary(1, &[(2, 1)]),
        ]);
        let text = t.render_text("sol_test");
        assert!(text.contains("H_0   Z\n"));
        assert!(text.contains("H_1   Z + Z2\n"));
        let csv = t.render_csv("3");
        assert!(csv.starts_with("n,k,free,torsion\n"));
        assert!(csv.contains("3,0,1,\n"));
        assert!(csv.contains("3,1,1,2^1\n"));
        let json = t.render_json("sol_test");
        assert!(json.contains("\"free\": 1"));
        assert!(json.contains("\"torsion\": [\n        2\n      ]"));
    }

    #[test]
    fn field_rank_matches_snf_rank() {
        let entries = [
            (0u32, 0u32, 2i64), (0, 1, 4), (1, 0, 1), (1, 1, 2), (2, 2, 5),
        ];
        let m = SparseMatrix::from_triplets(
            3,
            3,
            entries.iter().map(|&(r, c, v)| (r, c, int(v))),
            &CoefficientRing::Integers,
        );
        let (_, rank_z) = smith_normal_form(&m);
        let mq = SparseMatrix::from_triplets(
            3,
            3,
            entries.iter().map(|&(r, c, v)| (r, c, int(v))),
            &CoefficientRing::Rationals,
        );
        assert_eq!(field_rank(&mq, &CoefficientRing::Rationals), rank_z);
        assert_eq!(rank_z, 2);
    }
}
