//! Cup products on cochains of a reduced complex.
//!
//! Cochains are finite functionals on one degree of a wedge-basis
//! complex.  The product of an `i`-functional and a `j`-functional is
//! evaluated on every degree-`i+j` basis wedge by summing over
//! `(i,j)`-shuffles of its factors, with the shuffle sign.  Products are
//! only meaningful on complexes whose boundary vanishes, where every
//! basis element is its own cohomology class; [`cohomology_dual_basis`]
//! enforces that and [`verify_exterior_algebra`] uses the machinery to
//! check that the reduced poset-algebra cohomology multiplies like an
//! exterior algebra.

use std::collections::BTreeMap;
use std::sync::Arc;

use itertools::Itertools;
use num::Zero;
use thiserror::Error;

use crate::chain::{BuildOptions, ChainComplex, Wedge};
use crate::lie::{BasisLabel, LieAlgebra};
use crate::matrix::{int, Scalar};
use crate::morse::{normalized_complex_direct, MorseError};
use crate::poset::Poset;
use crate::ring::CoefficientRing;

#[derive(Debug, Error, PartialEq)]
pub enum CupError {
    #[error("cup products need a zero differential; boundary in degree {0} is nonzero")]
    NonzeroDifferential(usize),
    #[error("exterior structure needs Q, or Z/p with prime p >= n-1, on n generators; got {ring} with n = {n}")]
    PreconditionViolated { ring: String, n: usize },
    #[error(transparent)]
    Morse(#[from] MorseError),
}

/// A functional on one degree of a complex, stored by basis index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    coefficients: BTreeMap<u32, Scalar>,
}

impl Cochain {
    pub fn zero(degree: usize) -> Cochain {
        Cochain { degree, coefficients: BTreeMap::new() }
    }

    /// The functional sending basis element `id` to 1 and the rest to 0.
    pub fn dual(degree: usize, id: u32) -> Cochain {
        let mut coefficients = BTreeMap::new();
        coefficients.insert(id, int(1));
        Cochain { degree, coefficients }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coefficients.iter().map(|(&id, v)| (id, v))
    }

    pub fn coefficient(&self, id: u32) -> Scalar {
        self.coefficients.get(&id).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn negated(&self, ring: &CoefficientRing) -> Cochain {
        Cochain {
            degree: self.degree,
            coefficients: self
                .coefficients
                .iter()
                .map(|(&id, v)| (id, ring.neg(v)))
                .collect(),
        }
    }
}

/// Parity sign of the shuffle that moves the (ascending) slots in `s`
/// to the front: `(-1)^{sum (s_m - m)}`.
fn shuffle_sign(s: &[usize]) -> i64 {
    let total: usize = s.iter().enumerate().map(|(m, &sm)| sm - m).sum();
    if total.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Shuffle-sum product of two functionals, evaluated on every basis
/// wedge of the combined degree.
pub fn cup_product(a: &Cochain, b: &Cochain, c: &ChainComplex) -> Cochain {
    let i = a.degree;
    let k = i + b.degree;
    let ring = c.ring();
    let mut out = Cochain::zero(k);
    if k > c.top_degree() {
        return out;
    }
    let idx_a = c.wedge_index(i).expect("cup products need wedge bases");
    let idx_b = c.wedge_index(b.degree).expect("cup products need wedge bases");
    let wedges = c.wedges(k).expect("cup products need wedge bases");
    for (wi, &w) in wedges.iter().enumerate() {
        let slots: Vec<u32> = w.positions().collect();
        let mut total = Scalar::zero();
        for choice in (0..k).combinations(i) {
            let mut left = Wedge::EMPTY;
            let mut right = Wedge::EMPTY;
            let mut next = 0usize;
            for (slot, &pos) in slots.iter().enumerate() {
                if next < i && choice[next] == slot {
                    left = left.with(pos);
                    next += 1;
                } else {
                    right = right.with(pos);
                }
            }
            let Some(av) = idx_a.get(&left).and_then(|id| a.coefficients.get(id)) else {
                continue;
            };
            let Some(bv) = idx_b.get(&right).and_then(|id| b.coefficients.get(id)) else {
                continue;
            };
            let mut term = ring.mul(av, bv);
            if shuffle_sign(&choice) < 0 {
                term = ring.neg(&term);
            }
            total = ring.add(&total, &term);
        }
        if !total.is_zero() {
            out.coefficients.insert(wi as u32, total);
        }
    }
    out
}

/// One dual functional per basis element, valid as a cohomology basis
/// exactly when every boundary vanishes.
pub fn cohomology_dual_basis(c: &ChainComplex) -> Result<Vec<Cochain>, CupError> {
    for k in 1..=c.top_degree() {
        if !c.boundary(k).is_zero() {
            return Err(CupError::NonzeroDifferential(k));
        }
    }
    let mut out = Vec::new();
    for k in 0..=c.top_degree() {
        for id in 0..c.dim(k) as u32 {
            out.push(Cochain::dual(k, id));
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub rendered: String,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct ExteriorAlgebraReport {
    pub generators: Vec<String>,
    /// Degree of the extra odd generator `y`, when the coefficient
    /// modulus is one less than the number of poset elements and the
    /// poset has a least and a greatest element.
    pub extra_generator_degree: Option<usize>,
    pub dims_ok: bool,
    pub antisymmetry_ok: bool,
    pub entries: Vec<ProductEntry>,
    pub top_entry: ProductEntry,
}

impl ExteriorAlgebraReport {
    pub fn ok(&self) -> bool {
        self.dims_ok
            && self.antisymmetry_ok
            && self.top_entry.ok
            && self.entries.iter().all(|e| e.ok)
    }

    pub fn describe(&self) -> String {
        let gens = self.generators.join(", ");
        match self.extra_generator_degree {
            Some(d) => format!("exterior algebra on {gens} (deg y = {d})"),
            None => format!("exterior algebra on {gens}"),
        }
    }

    pub fn render_lines(&self) -> Vec<String> {
        let mut lines = vec![self.describe()];
        lines.push(format!(
            "graded dimensions {}; antisymmetry {}",
            if self.dims_ok { "match" } else { "MISMATCH" },
            if self.antisymmetry_ok { "holds" } else { "FAILS" },
        ));
        for e in &self.entries {
            let mark = if e.ok { "ok" } else { "FAIL" };
            lines.push(format!("{} * {} = {} [{}]", e.left, e.right, e.rendered, mark));
        }
        let e = &self.top_entry;
        let mark = if e.ok { "ok" } else { "FAIL" };
        lines.push(format!("{} = {} [{}]", e.left, e.rendered, mark));
        lines
    }
}

/// Decide which exterior shape the ring supports; `Some(degree)` means
/// an extra generator of that degree is expected.
fn exterior_case(
    p: &Poset,
    ring: &CoefficientRing,
    n: usize,
) -> Result<Option<usize>, CupError> {
    let fail = || CupError::PreconditionViolated { ring: ring.to_string(), n };
    match ring {
        CoefficientRing::Rationals => Ok(None),
        CoefficientRing::ModularIntegers(m) if ring.is_field() => {
            let m = *m as usize;
            if m >= n {
                Ok(None)
            } else if m + 1 == n {
                Ok(if p.is_bounded() { Some(2 * m - 1) } else { None })
            } else {
                Err(fail())
            }
        }
        _ => Err(fail()),
    }
}

fn binomial_dims(n: usize) -> Vec<usize> {
    let mut row = vec![1usize];
    for k in 0..n {
        row.push(row[k] * (n - k) / (k + 1));
    }
    row
}

/// Build the wedge `e_ab ^ (e_a1 ^ e_1b) ^ ...` over all middle indices
/// of a bounded poset with least element `a` and greatest element `b`;
/// its dual is the extra generator.
fn extra_generator_wedge(p: &Poset, g: &LieAlgebra) -> Wedge {
    let n = p.n();
    let bottom = (1..=n).find(|&m| (1..=n).all(|j| p.leq(m, j))).expect("bounded");
    let top = (1..=n).find(|&m| (1..=n).all(|j| p.leq(j, m))).expect("bounded");
    let pos = |a: usize, b: usize| {
        g.position_of(BasisLabel::Unit(a as u16, b as u16))
            .expect("bounded poset carries the full chain of units")
    };
    let mut w = Wedge::EMPTY.with(pos(bottom, top));
    for x in 1..=n {
        if x != bottom && x != top {
            w = w.with(pos(bottom, x)).with(pos(x, top));
        }
    }
    w
}

/// Reduce the poset algebra over `ring`, take the dual generators, and
/// multiply them pairwise, checking the table against the exterior
/// algebra on `n` degree-1 generators (plus `y` in the extended case).
pub fn verify_exterior_algebra(
    p: &Poset,
    ring: &CoefficientRing,
) -> Result<ExteriorAlgebraReport, CupError> {
    let n = p.n();
    let extra_degree = exterior_case(p, ring, n)?;
    let g = Arc::new(LieAlgebra::gl_poset(p, false));
    let c = normalized_complex_direct(g.clone(), ring, BuildOptions::default())?;
    cohomology_dual_basis(&c)?;

    let mut expected_dims = binomial_dims(n);
    if let Some(d) = extra_degree {
        let shifted = expected_dims.clone();
        expected_dims.resize(n + d + 1, 0);
        for (k, v) in shifted.into_iter().enumerate() {
            expected_dims[k + d] += v;
        }
    }
    let mut actual = c.dims();
    let len = actual.len().max(expected_dims.len());
    actual.resize(len, 0);
    expected_dims.resize(len, 0);
    let dims_ok = actual == expected_dims;

    // Generators: dual of each diagonal singleton, then y's wedge.
    let mut gens: Vec<(String, Wedge)> = (1..=n)
        .map(|t| {
            let pos = g.diagonal_position(t as u16).expect("full algebra has diagonals");
            (format!("x{t}"), Wedge::EMPTY.with(pos))
        })
        .collect();
    let y_wedge = extra_degree.map(|_| extra_generator_wedge(p, &g));
    if let Some(yw) = y_wedge {
        gens.push(("y".to_string(), yw));
    }
    let cochain_of = |w: Wedge| -> Cochain {
        let k = w.len();
        let id = *c
            .wedge_index(k)
            .expect("wedge basis")
            .get(&w)
            .expect("generator wedge survives the reduction");
        Cochain::dual(k, id)
    };
    let duals: Vec<Cochain> = gens.iter().map(|(_, w)| cochain_of(*w)).collect();

    let one = ring.scalar_from_i64(1);
    let minus_one = ring.scalar_from_i64(-1);
    // Name a basis wedge as a monomial in the generators, if it is one.
    let monomial = |w: Wedge| -> String {
        let mut rest = w;
        let mut has_y = false;
        if let Some(yw) = y_wedge {
            if w.bits() & yw.bits() == yw.bits() {
                has_y = true;
                rest = Wedge::from_bits(w.bits() & !yw.bits());
            }
        }
        let mut parts = Vec::new();
        for pos in rest.positions() {
            match g.label(pos) {
                BasisLabel::Unit(x, y) if x == y => parts.push(format!("x{x}")),
                _ => return c.wedge_name(w),
            }
        }
        if has_y {
            parts.push("y".to_string());
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    };
    let render = |co: &Cochain| -> String {
        if co.is_zero() {
            return "0".to_string();
        }
        co.terms()
            .map(|(id, v)| {
                let m = monomial(c.wedges(co.degree).unwrap()[id as usize]);
                if *v == one {
                    m
                } else if *v == minus_one {
                    format!("-{m}")
                } else {
                    format!("{v}*{m}")
                }
            })
            .join(" + ")
    };
    // A product of distinct generators must be a unit multiple of the
    // dual of the union wedge.
    let unit_on = |co: &Cochain, w: Wedge| -> bool {
        let Ok(idx) = c.wedge_index(co.degree) else { return false };
        let Some(&id) = idx.get(&w) else { return false };
        co.coefficients.len() == 1
            && co
                .coefficients
                .get(&id)
                .is_some_and(|v| *v == one || *v == minus_one)
    };

    let m = gens.len();
    let mut products: Vec<Vec<Cochain>> = Vec::with_capacity(m);
    let mut entries = Vec::with_capacity(m * m);
    for s in 0..m {
        let mut row = Vec::with_capacity(m);
        for t in 0..m {
            let prod = cup_product(&duals[s], &duals[t], &c);
            let ok = if s == t {
                prod.is_zero()
            } else {
                let union = Wedge::from_bits(gens[s].1.bits() | gens[t].1.bits());
                unit_on(&prod, union)
            };
            entries.push(ProductEntry {
                left: gens[s].0.clone(),
                right: gens[t].0.clone(),
                rendered: render(&prod),
                ok,
            });
            row.push(prod);
        }
        products.push(row);
    }
    // Every generator has odd degree, so the table must be
    // antisymmetric.
    let antisymmetry_ok = (0..m)
        .all(|s| (s + 1..m).all(|t| products[s][t] == products[t][s].negated(ring)));

    let mut acc = duals[0].clone();
    let mut top_union = gens[0].1;
    for (name_wedge, dual) in gens.iter().zip(&duals).skip(1) {
        acc = cup_product(&acc, dual, &c);
        top_union = Wedge::from_bits(top_union.bits() | name_wedge.1.bits());
    }
    let top_entry = ProductEntry {
        left: gens.iter().map(|(name, _)| name.clone()).join(" * "),
        right: String::new(),
        rendered: render(&acc),
        ok: unit_on(&acc, top_union),
    };

    Ok(ExteriorAlgebraReport {
        generators: gens.into_iter().map(|(name, _)| name).collect(),
        extra_generator_degree: extra_degree,
        dims_ok,
        antisymmetry_ok,
        entries,
        top_entry,
    })
}
