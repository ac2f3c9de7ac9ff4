//! Finite partial orders on `{1, .., n}`, given by cover relations.
//!
//! A poset here is the parameter space for the triangular matrix algebras:
//! the basis of the algebra is `{e_ij : i <= j in the order}`.  Input is a
//! list of cover relations; the reflexive-transitive closure is computed
//! internally and cyclic inputs are rejected.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("cover digraph contains a directed cycle")]
    CycleDetected,
    #[error("elements {a} and {b} are not comparable")]
    NotComparable { a: usize, b: usize },
    #[error("cover relation ({a},{b}) out of range for n={n} or degenerate")]
    BadCover { a: usize, b: usize, n: usize },
    #[error("poset supports at most 63 elements, got {0}")]
    TooManyElements(usize),
    #[error("poset file, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Partial order on `1..=n`; `leq` rows are bitmasks of the full relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<u64>,
}

impl Poset {
    pub fn from_cover_relations(
        n: usize,
        covers: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        if n == 0 || n > 63 {
            return Err(PosetError::TooManyElements(n));
        }
        let mut reach: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
        let mut edges: Vec<u64> = vec![0; n];
        for &(a, b) in covers {
            if a < 1 || a > n || b < 1 || b > n || a == b {
                return Err(PosetError::BadCover { a, b, n });
            }
            edges[a - 1] |= 1 << (b - 1);
        }
        // Transitive closure by iterated bitmask propagation.
        loop {
            let mut changed = false;
            for i in 0..n {
                let mut acc = reach[i];
                let mut succ = edges[i];
                while succ != 0 {
                    let j = succ.trailing_zeros() as usize;
                    succ &= succ - 1;
                    acc |= reach[j];
                }
                if acc != reach[i] {
                    reach[i] = acc;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && reach[i] >> j & 1 == 1 && reach[j] >> i & 1 == 1 {
                    return Err(PosetError::CycleDetected);
                }
            }
        }
        Ok(Poset { n, leq: reach })
    }

    pub fn chain(n: usize) -> Self {
        let covers: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::from_cover_relations(n, &covers).expect("chain is acyclic")
    }

    pub fn antichain(n: usize) -> Self {
        Poset::from_cover_relations(n, &[]).expect("antichain is acyclic")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a <= b` in the order (1-based labels).
    pub fn leq(&self, a: usize, b: usize) -> bool {
        debug_assert!(a >= 1 && a <= self.n && b >= 1 && b <= self.n);
        self.leq[a - 1] >> (b - 1) & 1 == 1
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq(a, b)
    }

    /// `{x : a <= x <= b}` in label order.
    pub fn interval(&self, a: usize, b: usize) -> Result<Vec<usize>, PosetError> {
        if !self.leq(a, b) {
            return Err(PosetError::NotComparable { a, b });
        }
        Ok((1..=self.n)
            .filter(|&x| self.leq(a, x) && self.leq(x, b))
            .collect())
    }

    /// Number of pairs (a, c) with some b strictly between them.
    pub fn comparable_noncovering_count(&self) -> usize {
        let mut count = 0;
        for a in 1..=self.n {
            for c in 1..=self.n {
                if a != c
                    && self.leq(a, c)
                    && (1..=self.n).any(|b| b != a && b != c && self.leq(a, b) && self.leq(b, c))
                {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn is_bounded(&self) -> bool {
        let has_min = (1..=self.n).any(|a| (1..=self.n).all(|x| self.leq(a, x)));
        let has_max = (1..=self.n).any(|b| (1..=self.n).all(|x| self.leq(x, b)));
        has_min && has_max
    }

    /// The Hasse diagram: strict relations with nothing in between.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut covers = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.lt(a, b)
                    && !(1..=self.n).any(|x| x != a && x != b && self.lt(a, x) && self.lt(x, b))
                {
                    covers.push((a, b));
                }
            }
        }
        covers
    }

    /// All strict pairs (a, b) with a < b in the order, in (a, b) label order.
    pub fn strict_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 1..=self.n {
            for b in 1..=self.n {
                if self.lt(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Parse the poset file format: first non-comment line `n=<int>`, then
    /// one cover relation `a < b` per line.  `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self, PosetError> {
        let mut n: Option<usize> = None;
        let mut covers = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| PosetError::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            if n.is_none() {
                let rest = line
                    .strip_prefix("n")
                    .map(|r| r.trim_start())
                    .and_then(|r| r.strip_prefix('='))
                    .ok_or_else(|| err("expected n=<int>"))?;
                n = Some(
                    rest.trim()
                        .parse()
                        .map_err(|_| err("expected n=<int>"))?,
                );
            } else {
                let mut it = line.split('<');
                let a = it.next().map(str::trim);
                let b = it.next().map(str::trim);
                match (a, b, it.next()) {
                    (Some(a), Some(b), None) => {
                        let a: usize = a.parse().map_err(|_| err("expected a < b"))?;
                        let b: usize = b.parse().map_err(|_| err("expected a < b"))?;
                        covers.push((a, b));
                    }
                    _ => return Err(err("expected a < b")),
                }
            }
        }
        let n = n.ok_or(PosetError::Parse {
            line: 0,
            msg: "missing n=<int> header".to_string(),
        })?;
        Poset::from_cover_relations(n, &covers)
    }
}
