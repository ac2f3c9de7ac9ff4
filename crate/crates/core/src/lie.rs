//! Lie algebras with a finite labeled basis and integer structure
//! constants.
//!
//! Constructors cover the matrix families used throughout the crate:
//! `gl_poset` (matrix units supported on a partial order, optionally
//! without diagonals) and `so_char2` (skew units plus diagonals, a Lie
//! algebra only in characteristic 2).  Structure constants are stored over
//! the integers once and reduced into whatever coefficient ring a complex
//! is later built over.

use std::collections::{BTreeMap, HashMap};

use crate::poset::Poset;
use crate::ring::CoefficientRing;

/// A named basis vector.  `Unit(i, i)` is called a diagonal.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum BasisLabel {
    /// Matrix unit `e_ij`.
    Unit(u16, u16),
    /// Skew unit `e_ab - e_ba`, stored with `a < b`.
    Skew(u16, u16),
}

impl BasisLabel {
    fn sort_key(&self) -> (u16, u16, u8) {
        match *self {
            BasisLabel::Unit(i, j) => (i, j, 0),
            BasisLabel::Skew(a, b) => (a, b, 1),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        matches!(self, BasisLabel::Unit(i, j) if i == j)
    }

    /// Matrix indices referenced by a nondiagonal label, if any.
    pub fn nondiagonal_indices(&self) -> Option<(u16, u16)> {
        match *self {
            BasisLabel::Unit(i, j) if i != j => Some((i, j)),
            BasisLabel::Skew(a, b) => Some((a, b)),
            _ => None,
        }
    }
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisLabel::Unit(i, j) => write!(f, "e{i},{j}"),
            BasisLabel::Skew(a, b) => write!(f, "e'{a},{b}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    n: u16,
    labels: Vec<BasisLabel>,
    position: HashMap<BasisLabel, u32>,
    /// Brackets for position pairs x < y; each term list is sorted by
    /// target position.  Antisymmetry supplies the rest.
    brackets: HashMap<(u32, u32), Vec<(u32, i64)>>,
    /// Position of `e_xx` for each matrix index x (1-based), if present.
    diagonal_pos: Vec<Option<u32>>,
}

impl LieAlgebra {
    /// Matrix units supported on a poset: basis `{e_ij : i <= j}` (strict:
    /// `i < j`), bracket `[e_ab, e_cd] = d_bc e_ad - d_ad e_cb`.
    pub fn gl_poset(p: &Poset, strict: bool) -> LieAlgebra {
        let n = p.n() as u16;
        let mut labels = Vec::new();
        for i in 1..=p.n() {
            for j in 1..=p.n() {
                if p.leq(i, j) && (!strict || i != j) {
                    labels.push(BasisLabel::Unit(i as u16, j as u16));
                }
            }
        }
        let name = format!("gl(n={n}{})", if strict { ", strict" } else { "" });
        Self::from_basis(name, n, labels, |x, y, present| {
            let (BasisLabel::Unit(a, b), BasisLabel::Unit(c, d)) = (x, y) else {
                unreachable!()
            };
            let mut terms = Vec::new();
            if b == c {
                terms.push((BasisLabel::Unit(a, d), 1));
            }
            if a == d {
                terms.push((BasisLabel::Unit(c, b), -1));
            }
            terms.retain(|(l, _)| present(l));
            terms
        })
    }

    pub fn sol(n: usize) -> LieAlgebra {
        let mut g = Self::gl_poset(&Poset::chain(n), false);
        g.name = format!("sol{n}");
        g
    }

    pub fn nil(n: usize) -> LieAlgebra {
        let mut g = Self::gl_poset(&Poset::chain(n), true);
        g.name = format!("nil{n}");
        g
    }

    pub fn dgn(n: usize) -> LieAlgebra {
        let mut g = Self::gl_poset(&Poset::antichain(n), false);
        g.name = format!("dgn{n}");
        g
    }

    /// Skew units plus diagonals.  The bracket table is a Lie algebra only
    /// over rings of characteristic 2; this is not enforced here.
    pub fn so_char2(n: usize) -> LieAlgebra {
        let n16 = n as u16;
        let mut labels = Vec::new();
        for c in 1..=n16 {
            labels.push(BasisLabel::Unit(c, c));
        }
        for a in 1..=n16 {
            for b in (a + 1)..=n16 {
                labels.push(BasisLabel::Skew(a, b));
            }
        }
        // e'_xy with x > y is -e'_yx; x == y vanishes.
        fn skew(x: u16, y: u16, coeff: i64) -> Option<(BasisLabel, i64)> {
            use std::cmp::Ordering::*;
            match x.cmp(&y) {
                Less => Some((BasisLabel::Skew(x, y), coeff)),
                Equal => None,
                Greater => Some((BasisLabel::Skew(y, x), -coeff)),
            }
        }
        Self::from_basis(format!("so{n} (char 2)"), n16, labels, |x, y, _| {
            let mut terms = Vec::new();
            match (x, y) {
                (BasisLabel::Skew(a, b), BasisLabel::Skew(c, d)) => {
                    if b == c {
                        terms.extend(skew(a, d, 1));
                    }
                    if a == d {
                        terms.extend(skew(b, c, 1));
                    }
                    if b == d {
                        terms.extend(skew(a, c, -1));
                    }
                    if a == c {
                        terms.extend(skew(b, d, -1));
                    }
                }
                (BasisLabel::Skew(a, b), BasisLabel::Unit(c, cc)) if c == cc => {
                    if b == c {
                        terms.extend(skew(a, c, 1));
                    }
                    if a == c {
                        terms.extend(skew(b, c, 1));
                    }
                }
                (BasisLabel::Unit(c, cc), BasisLabel::Skew(a, b)) if c == cc => {
                    if b == c {
                        terms.extend(skew(a, c, -1));
                    }
                    if a == c {
                        terms.extend(skew(b, c, -1));
                    }
                }
                (BasisLabel::Unit(..), BasisLabel::Unit(..)) => {}
                _ => unreachable!(),
            }
            terms
        })
    }

    fn from_basis(
        name: String,
        n: u16,
        mut labels: Vec<BasisLabel>,
        bracket_of: impl Fn(BasisLabel, BasisLabel, &dyn Fn(&BasisLabel) -> bool) -> Vec<(BasisLabel, i64)>,
    ) -> LieAlgebra {
        labels.sort_by_key(BasisLabel::sort_key);
        labels.dedup();
        let position: HashMap<BasisLabel, u32> = labels
            .iter()
            .enumerate()
            .map(|(i, &l)| (l, i as u32))
            .collect();
        let present = |l: &BasisLabel| position.contains_key(l);
        let mut brackets = HashMap::new();
        for x in 0..labels.len() as u32 {
            for y in (x + 1)..labels.len() as u32 {
                let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                for (l, c) in bracket_of(labels[x as usize], labels[y as usize], &present) {
                    *acc.entry(position[&l]).or_insert(0) += c;
                }
                let terms: Vec<(u32, i64)> =
                    acc.into_iter().filter(|&(_, c)| c != 0).collect();
                if !terms.is_empty() {
                    brackets.insert((x, y), terms);
                }
            }
        }
        let mut diagonal_pos = vec![None; n as usize + 1];
        for (i, l) in labels.iter().enumerate() {
            if let BasisLabel::Unit(a, b) = l {
                if a == b {
                    diagonal_pos[*a as usize] = Some(i as u32);
                }
            }
        }
        LieAlgebra { name, n, labels, position, brackets, diagonal_pos }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Ambient matrix size (the largest index that may appear in a label).
    pub fn ambient_n(&self) -> u16 {
        self.n
    }

    /// Number of basis vectors.
    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    pub fn label(&self, pos: u32) -> BasisLabel {
        self.labels[pos as usize]
    }

    pub fn position_of(&self, label: BasisLabel) -> Option<u32> {
        self.position.get(&label).copied()
    }

    /// Position of `e_xx`, if the diagonal is in the basis.
    pub fn diagonal_position(&self, x: u16) -> Option<u32> {
        self.diagonal_pos.get(x as usize).copied().flatten()
    }

    pub fn has_skew_labels(&self) -> bool {
        self.labels.iter().any(|l| matches!(l, BasisLabel::Skew(..)))
    }

    /// `[x, y]` by basis positions, with antisymmetric extension.
    pub fn bracket(&self, x: u32, y: u32) -> Vec<(u32, i64)> {
        use std::cmp::Ordering::*;
        match x.cmp(&y) {
            Equal => Vec::new(),
            Less => self.brackets.get(&(x, y)).cloned().unwrap_or_default(),
            Greater => self
                .brackets
                .get(&(y, x))
                .map(|v| v.iter().map(|&(t, c)| (t, -c)).collect())
                .unwrap_or_default(),
        }
    }

    /// Check the Jacobi identity for every basis triple, with coefficients
    /// reduced in the given ring.
    pub fn validate_lie(&self, ring: &CoefficientRing) -> bool {
        let m = ring.characteristic() as i64;
        let reduces_to_zero = |c: i64| if m == 0 { c == 0 } else { c % m == 0 };
        let rank = self.rank() as u32;
        for x in 0..rank {
            for y in (x + 1)..rank {
                for z in (y + 1)..rank {
                    let mut acc: BTreeMap<u32, i64> = BTreeMap::new();
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        for (t, c1) in self.bracket(a, b) {
                            for (u, c2) in self.bracket(t, c) {
                                *acc.entry(u).or_insert(0) += c1 * c2;
                            }
                        }
                    }
                    if !acc.values().all(|&c| reduces_to_zero(c)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Replace one bracket entry (testing hook for corrupted tables).
    #[doc(hidden)]
    pub fn override_bracket(&mut self, x: u32, y: u32, terms: Vec<(u32, i64)>) {
        assert!(x < y);
        if terms.is_empty() {
            self.brackets.remove(&(x, y));
        } else {
            self.brackets.insert((x, y), terms);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pos(g: &LieAlgebra, l: BasisLabel) -> u32 {
        g.position_of(l).unwrap()
    }

    #[test]
    fn sol_basis_order_and_size() {
        let g = LieAlgebra::sol(2);
        let want = [
            BasisLabel::Unit(1, 1),
            BasisLabel::Unit(1, 2),
            BasisLabel::Unit(2, 2),
        ];
        assert_eq!(g.labels(), &want);
        for n in 1..=6 {
            assert_eq!(LieAlgebra::sol(n).rank(), (n + 1) * n / 2);
            assert_eq!(LieAlgebra::nil(n).rank(), n * (n - 1) / 2);
            assert_eq!(LieAlgebra::dgn(n).rank(), n);
        }
    }

    #[test]
    fn sol_brackets() {
        let g = LieAlgebra::sol(3);
        let e = |i, j| pos(&g, BasisLabel::Unit(i, j));
        // [e12, e23] = e13
        assert_eq!(g.bracket(e(1, 2), e(2, 3)), vec![(e(1, 3), 1)]);
        // [e11, e12] = e12 and [e12, e22] = e12
        assert_eq!(g.bracket(e(1, 1), e(1, 2)), vec![(e(1, 2), 1)]);
        assert_eq!(g.bracket(e(1, 2), e(2, 2)), vec![(e(1, 2), 1)]);
        // antisymmetry
        assert_eq!(g.bracket(e(2, 3), e(1, 2)), vec![(e(1, 3), -1)]);
        assert_eq!(g.bracket(e(1, 2), e(1, 2)), vec![]);
    }

    #[test]
    fn structure_constants_are_small() {
        for g in [LieAlgebra::sol(4), LieAlgebra::nil(4), LieAlgebra::dgn(4)] {
            for x in 0..g.rank() as u32 {
                for y in 0..g.rank() as u32 {
                    for (_, c) in g.bracket(x, y) {
                        assert!(c == 1 || c == -1);
                    }
                }
            }
        }
    }

    #[test]
    fn dgn_is_abelian() {
        let g = LieAlgebra::dgn(4);
        for x in 0..g.rank() as u32 {
            for y in 0..g.rank() as u32 {
                assert!(g.bracket(x, y).is_empty());
            }
        }
        assert!(g.validate_lie(&CoefficientRing::Integers));
    }

    #[test]
    fn jacobi_holds_for_poset_families() {
        use crate::poset::Poset;
        let z = CoefficientRing::Integers;
        for n in 1..=4 {
            assert!(LieAlgebra::sol(n).validate_lie(&z));
            assert!(LieAlgebra::nil(n).validate_lie(&z));
        }
        let diamond =
            Poset::from_cover_relations(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        assert!(LieAlgebra::gl_poset(&diamond, false).validate_lie(&z));
        assert!(LieAlgebra::gl_poset(&diamond, true).validate_lie(&z));
    }

    #[test]
    fn corrupted_table_fails_jacobi() {
        let mut g = LieAlgebra::sol(3);
        let e12 = pos(&g, BasisLabel::Unit(1, 2));
        let e23 = pos(&g, BasisLabel::Unit(2, 3));
        g.override_bracket(e12, e23, vec![(e23, 1)]);
        assert!(!g.validate_lie(&CoefficientRing::Integers));
    }

    #[test]
    fn so_char2_brackets() {
        let g = LieAlgebra::so_char2(3);
        assert_eq!(g.rank(), 6);
        let s = |a, b| pos(&g, BasisLabel::Skew(a, b));
        let d = |c| pos(&g, BasisLabel::Unit(c, c));
        // [e'12, e22] = e'12; [e'12, e33] = 0
        assert_eq!(g.bracket(s(1, 2), d(2)), vec![(s(1, 2), 1)]);
        assert_eq!(g.bracket(s(1, 2), d(3)), vec![]);
        assert!(g.diagonal_position(2).is_some());
        assert!(g.has_skew_labels());
    }

    #[test]
    fn so_char2_jacobi_in_characteristic_two() {
        let z2 = CoefficientRing::modular(2).unwrap();
        for n in 2..=5 {
            assert!(LieAlgebra::so_char2(n).validate_lie(&z2), "so{n} over Z/2");
        }
    }

    #[test]
    fn nil_has_no_diagonals() {
        let g = LieAlgebra::nil(3);
        for x in 1..=3 {
            assert!(g.diagonal_position(x).is_none());
        }
    }
}
