//! Term orders: graded reverse lexicographic, lexicographic, and block
//! elimination orders, each over an arbitrary priority permutation of the
//! variables.
//!
//! All three are global orders (1 is minimal, comparison is multiplicative),
//! and lex and grevlex are degree-compatible.  The elimination order is the
//! product of grevlex on the front variables with grevlex on the rest, so a
//! Groebner basis under it contracts the ideal to the front-free subring.
//!
//! The *ambient* order of a ring is grevlex on the identity permutation:
//! blocks in index order, `x_{i,1}` most significant inside block `i`.
//! Polynomials are stored sorted by it, and it is the default for every
//! Groebner computation.

use crate::monomial::Monomial;
use crate::rng::SplitMix64;
use alloc::vec::Vec;
use core::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrderKind {
    GrevLex,
    Lex,
    /// Eliminates the contained (sorted) variable set.
    Elim(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermOrder {
    kind: OrderKind,
    /// `perm[k]` is the variable with priority `k`; `perm[0]` is largest.
    perm: Vec<usize>,
    /// Comparison segments derived from `kind` and `perm`: one segment for
    /// the degree-compatible orders, front-then-rest for elimination.
    segments: Vec<Vec<usize>>,
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

fn check_perm(n: usize, perm: &[usize]) {
    assert_eq!(perm.len(), n, "permutation length mismatch");
    let mut seen = alloc::vec![false; n];
    for &v in perm {
        assert!(v < n && !seen[v], "not a permutation");
        seen[v] = true;
    }
}

impl TermOrder {
    pub fn grevlex(n: usize) -> Self {
        Self::grevlex_permuted(n, identity(n))
    }

    pub fn lex(n: usize) -> Self {
        Self::lex_permuted(n, identity(n))
    }

    /// The canonical storage and default computation order.
    pub fn ambient(n: usize) -> Self {
        Self::grevlex(n)
    }

    pub fn grevlex_permuted(n: usize, perm: Vec<usize>) -> Self {
        check_perm(n, &perm);
        let segments = alloc::vec![perm.clone()];
        TermOrder { kind: OrderKind::GrevLex, perm, segments }
    }

    pub fn lex_permuted(n: usize, perm: Vec<usize>) -> Self {
        check_perm(n, &perm);
        TermOrder { kind: OrderKind::Lex, perm, segments: Vec::new() }
    }

    /// Elimination order for `front` (grevlex on `front`, then grevlex on
    /// the remaining variables, both in priority order).
    pub fn elim(n: usize, front: &[usize]) -> Self {
        Self::elim_permuted(n, front, identity(n))
    }

    pub fn elim_permuted(n: usize, front: &[usize], perm: Vec<usize>) -> Self {
        check_perm(n, &perm);
        let mut sorted: Vec<usize> = front.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        assert!(sorted.iter().all(|&v| v < n), "front variable out of range");
        let in_front = |v: usize| sorted.binary_search(&v).is_ok();
        let front_seq: Vec<usize> = perm.iter().copied().filter(|&v| in_front(v)).collect();
        let rest_seq: Vec<usize> = perm.iter().copied().filter(|&v| !in_front(v)).collect();
        TermOrder {
            kind: OrderKind::Elim(sorted),
            perm,
            segments: alloc::vec![front_seq, rest_seq],
        }
    }

    /// Deterministic random order for stress tests: grevlex or lex over a
    /// random priority permutation.
    pub fn random(n: usize, rng: &mut SplitMix64) -> Self {
        let perm = rng.permutation(n);
        if rng.next_below(2) == 0 {
            Self::grevlex_permuted(n, perm)
        } else {
            Self::lex_permuted(n, perm)
        }
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn num_vars(&self) -> usize {
        self.perm.len()
    }

    pub fn eliminated_vars(&self) -> Option<&[usize]> {
        match &self.kind {
            OrderKind::Elim(front) => Some(front),
            _ => None,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.num_vars(), self.perm.len());
        debug_assert_eq!(b.num_vars(), self.perm.len());
        match &self.kind {
            OrderKind::Lex => {
                for &v in &self.perm {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            _ => {
                for seg in &self.segments {
                    match cmp_grevlex_segment(seg, a, b) {
                        Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn cmp_grevlex_segment(seg: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u64 = seg.iter().map(|&v| a.exp(v) as u64).sum();
    let db: u64 = seg.iter().map(|&v| b.exp(v) as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Equal degree: the monomial with the smaller exponent on the least
    // significant differing variable is larger.
    for &v in seg.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}
