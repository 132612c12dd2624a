//! Monomials as exponent vectors.
//!
//! Exponents are machine words with checked addition: degrees stay tiny at
//! desk scale and an overflow is a bug worth a loud stop, not wraparound.
//!
//! The derived `Ord` is the structural exponent-lexicographic order.  It is
//! *not* a term order; it exists so monomials can serve as deterministic map
//! keys.  Term comparisons go through [`crate::order::TermOrder`].

use crate::ring::BlockShape;
use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Monomial { exps: vec![0; num_vars] }
    }

    pub fn var(num_vars: usize, v: usize) -> Self {
        let mut m = Monomial::one(num_vars);
        m.exps[v] = 1;
        m
    }

    pub fn from_exps(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps[v]
    }

    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn degree_on(&self, vars: &[usize]) -> u64 {
        vars.iter().map(|&v| self.exps[v] as u64).sum()
    }

    /// Multidegree in `Z^n`: the degree within each block.
    pub fn block_degree(&self, shape: &BlockShape) -> Vec<u32> {
        let mut deg = vec![0u32; shape.num_blocks()];
        for (v, &e) in self.exps.iter().enumerate() {
            deg[shape.block_of(v)] += e;
        }
        deg
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn mul_var(&self, v: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[v] = m.exps[v].checked_add(1).expect("exponent overflow");
        m
    }

    pub fn pow(&self, e: u32) -> Monomial {
        let exps = self
            .exps
            .iter()
            .map(|&a| a.checked_mul(e).expect("exponent overflow"))
            .collect();
        Monomial { exps }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        let mut exps = Vec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            exps.push(a.checked_sub(b)?);
        }
        Some(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial { exps }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.min(b))
            .collect();
        Monomial { exps }
    }

    pub fn is_coprime_with(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// Squarefree part: every positive exponent clamped to 1.
    pub fn radical(&self) -> Monomial {
        let exps = self.exps.iter().map(|&e| e.min(1)).collect();
        Monomial { exps }
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, _)| v)
    }

    pub fn is_pure_variable(&self) -> Option<usize> {
        let mut found = None;
        for (v, &e) in self.exps.iter().enumerate() {
            if e == 1 && found.is_none() {
                found = Some(v);
            } else if e != 0 {
                return None;
            }
        }
        found
    }

    /// Image under a relabelling of the variables: position `v` of the result
    /// gets the exponent of `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let exps = perm.iter().map(|&src| self.exps[src]).collect();
        Monomial { exps }
    }
}
