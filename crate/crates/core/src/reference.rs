//! Frozen baselines for the triangular families: integral homology
//! columns, mod-p dimension formulas, weight-subcomplex tables, and a
//! few named posets with known degree-3 homology.  The verification
//! suites compare freshly computed values against these.

use crate::homology::HomologyModule;
use crate::poset::Poset;

fn m(free: usize, parts: &[(u64, usize)]) -> HomologyModule {
    HomologyModule::from_primary(free, parts)
}

/// Integral homology of the full triangular algebra on `n` indices,
/// degrees `0..=n(n+1)/2`; tabulated for `n = 1..=6`.
pub fn triangular_integral_homology(n: usize) -> Option<Vec<HomologyModule>> {
    let z = |r| m(r, &[]);
    let table: Vec<HomologyModule> = match n {
        1 => vec![z(1), z(1)],
        2 => vec![z(1), z(2), z(1), z(0)],
        3 => vec![
            z(1),
            z(3),
            z(3),
            m(1, &[(2, 1)]),
            m(0, &[(2, 2)]),
            m(0, &[(2, 1)]),
            z(0),
        ],
        4 => vec![
            z(1),
            z(4),
            z(6),
            m(4, &[(2, 3)]),
            m(1, &[(2, 11)]),
            m(0, &[(2, 15), (3, 1)]),
            m(0, &[(2, 9), (3, 3)]),
            m(0, &[(2, 2), (3, 3)]),
            m(0, &[(3, 1)]),
            z(0),
            z(0),
        ],
        5 => vec![
            z(1),
            z(5),
            z(10),
            m(10, &[(2, 6)]),
            m(5, &[(2, 29)]),
            m(1, &[(2, 56), (3, 3)]),
            m(0, &[(2, 59), (3, 13)]),
            m(0, &[(2, 51), (4, 1), (3, 22)]),
            m(0, &[(2, 55), (4, 4), (3, 19)]),
            m(0, &[(2, 50), (4, 6), (3, 11)]),
            m(0, &[(2, 26), (4, 4), (3, 7)]),
            m(0, &[(2, 9), (4, 1), (3, 4)]),
            m(0, &[(2, 6), (3, 1)]),
            m(0, &[(2, 4)]),
            m(0, &[(2, 1)]),
            z(0),
        ],
        6 => vec![
            z(1),
            z(6),
            z(15),
            m(20, &[(2, 10)]),
            m(15, &[(2, 59)]),
            m(6, &[(2, 145), (3, 6)]),
            m(1, &[(2, 220), (3, 33)]),
            m(0, &[(2, 348), (4, 3), (3, 75)]),
            m(0, &[(2, 674), (4, 16), (3, 96)]),
            m(0, &[(2, 1034), (4, 35), (3, 94), (5, 1)]),
            m(0, &[(2, 1035), (4, 40), (3, 101), (5, 5)]),
            m(0, &[(2, 704), (4, 25), (3, 103), (5, 10)]),
            m(0, &[(2, 452), (4, 9), (3, 70), (5, 10)]),
            m(0, &[(2, 389), (4, 6), (3, 26), (5, 5)]),
            m(0, &[(2, 305), (4, 10), (3, 4), (5, 1)]),
            m(0, &[(2, 150), (4, 10)]),
            m(0, &[(2, 39), (4, 5)]),
            m(0, &[(2, 4), (4, 1)]),
            z(0),
            z(0),
            z(0),
            z(0),
        ],
        _ => return None,
    };
    debug_assert_eq!(table.len(), n * (n + 1) / 2 + 1);
    Some(table)
}

/// Coefficients `c_j` of the tabulated formula
/// `dim H_k(ring Z/p) = sum_j c_j * C(n, k - j)`, indexed by shift `j`.
pub fn mod_p_dimension_shifts(n: usize, p: u64) -> Option<Vec<usize>> {
    let shifts = match (p, n) {
        (2, 2) => vec![1],
        (2, 3) => vec![1, 0, 0, 1],
        (2, 4) => vec![1, 0, 0, 3, 2],
        (2, 5) => vec![1, 0, 0, 6, 5, 0, 5, 6, 0, 0, 1],
        (2, 6) => vec![1, 0, 0, 10, 9, 0, 30, 61, 30, 0, 15, 19, 5],
        (3, 2) | (3, 3) => vec![1],
        (3, 4) => vec![1, 0, 0, 0, 0, 1],
        (3, 5) => vec![1, 0, 0, 0, 0, 3, 1, 0, 1],
        (3, 6) => vec![1, 0, 0, 0, 0, 6, 3, 0, 6, 4],
        (5, 2..=5) => vec![1],
        (5, 6) => vec![1, 0, 0, 0, 0, 0, 0, 0, 0, 1],
        _ => return None,
    };
    Some(shifts)
}

pub fn binomial(n: usize, k: i64) -> usize {
    if k < 0 || k as usize > n {
        return 0;
    }
    let k = k as usize;
    let mut v = 1usize;
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    v
}

/// Evaluate the tabulated mod-p dimension formula for `k = 0..=kmax`.
pub fn mod_p_dimensions(n: usize, p: u64, kmax: usize) -> Option<Vec<usize>> {
    let shifts = mod_p_dimension_shifts(n, p)?;
    Some(
        (0..=kmax as i64)
            .map(|k| {
                shifts
                    .iter()
                    .enumerate()
                    .map(|(j, &c)| c * binomial(n, k - j as i64))
                    .sum()
            })
            .collect(),
    )
}

/// Integral homology of the weight subcomplex of the strictly upper
/// triangular algebra, degrees `0..=n(n-1)/2`; tabulated for
/// `n = 2..=5` and `p` in `{2, 3, 5}`.
pub fn strict_subcomplex_homology(n: usize, p: u64) -> Option<Vec<HomologyModule>> {
    if !(2..=5).contains(&n) || ![2, 3, 5].contains(&p) {
        return None;
    }
    let top = n * (n - 1) / 2;
    let mut table = vec![HomologyModule::zero(); top + 1];
    table[0] = m(1, &[]);
    let entries: &[(usize, HomologyModule)] = match (n, p) {
        (3, 2) => &[(3, m(1, &[]))],
        (4, 2) => &[(3, m(2, &[(2, 1)])), (4, m(1, &[]))],
        (4, 3) => &[(5, m(1, &[]))],
        (5, 2) => &[
            (3, m(3, &[(2, 3)])),
            (4, m(2, &[])),
            (6, m(2, &[(2, 3)])),
            (7, m(3, &[])),
            (10, m(1, &[])),
        ],
        (5, 3) => &[(5, m(2, &[(3, 1)])), (8, m(1, &[]))],
        _ => &[],
    };
    for (k, module) in entries {
        table[*k] = module.clone();
    }
    Some(table)
}

/// The four-element poset with one least and one greatest element and
/// two incomparable middles.
pub fn diamond() -> Poset {
    Poset::from_cover_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
}

/// Two three-element antichains, every element of the first below every
/// element of the second.
pub fn complete_bipartite() -> Poset {
    Poset::from_cover_relations(
        6,
        &[(1, 4), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 4), (3, 5), (3, 6)],
    )
    .unwrap()
}

/// Named posets with known degree-3 integral homology of their
/// matrix-unit algebra.
pub fn degree3_fixtures() -> Vec<(&'static str, Poset, HomologyModule)> {
    vec![
        ("diamond", diamond(), m(4, &[(2, 1)])),
        (
            "wide diamond",
            Poset::from_cover_relations(5, &[(1, 2), (1, 3), (1, 4), (2, 5), (3, 5), (4, 5)])
                .unwrap(),
            m(10, &[(2, 1)]),
        ),
        (
            "tall diamond",
            Poset::from_cover_relations(5, &[(1, 2), (2, 3), (3, 5), (1, 4), (4, 5)]).unwrap(),
            m(10, &[(2, 3)]),
        ),
        (
            "twin chains",
            Poset::from_cover_relations(6, &[(1, 2), (2, 3), (3, 6), (1, 4), (4, 5), (5, 6)])
                .unwrap(),
            m(20, &[(2, 5)]),
        ),
        (
            "offset chains",
            Poset::from_cover_relations(6, &[(1, 2), (2, 3), (3, 4), (4, 6), (1, 5), (5, 6)])
                .unwrap(),
            m(20, &[(2, 6)]),
        ),
    ]
}

/// First `(column n, row k)` at which a `Z_m` summand appears in the
/// tabulated integral columns, scanning columns in order.
pub fn first_torsion_occurrence(target: u64) -> Option<(usize, usize)> {
    for n in 1..=6 {
        let col = triangular_integral_homology(n).unwrap();
        for (k, module) in col.iter().enumerate() {
            if module.primary().iter().any(|&(value, _)| value == target) {
                return Some((n, k));
            }
        }
    }
    None
}
