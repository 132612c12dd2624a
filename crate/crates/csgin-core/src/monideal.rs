//! Monomial ideals as combinatorial objects.
//!
//! A [`MonomialIdeal`] stores its unique minimal generating set (a
//! divisibility antichain) sorted structurally, so derived equality is
//! mathematical equality.  The zero ideal has no generators; the unit ideal
//! is generated by 1.
//!
//! Everything here is field-free: intersections, Alexander duality, minimal
//! primes via vertex covers of the generator hypergraph, Borel-fixedness,
//! and dimension.

use crate::field::Field;
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::ring::{BlockRing, BlockShape};
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    shape: Arc<BlockShape>,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.total_degree().cmp(&b.total_degree()).then(a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::new();
    for g in gens {
        if !kept.iter().any(|h| h.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    pub fn new(shape: Arc<BlockShape>, gens: Vec<Monomial>) -> Self {
        debug_assert!(gens.iter().all(|g| g.num_vars() == shape.num_vars()));
        MonomialIdeal { shape, gens: minimalize(gens) }
    }

    pub fn zero(shape: Arc<BlockShape>) -> Self {
        MonomialIdeal { shape, gens: Vec::new() }
    }

    pub fn unit(shape: Arc<BlockShape>) -> Self {
        let one = Monomial::one(shape.num_vars());
        MonomialIdeal { shape, gens: vec![one] }
    }

    /// Prime generated by the variables in `vars`.
    pub fn variable_prime(shape: Arc<BlockShape>, vars: &[usize]) -> Self {
        let n = shape.num_vars();
        let gens = vars.iter().map(|&v| Monomial::var(n, v)).collect();
        MonomialIdeal::new(shape, gens)
    }

    pub fn shape(&self) -> &Arc<BlockShape> {
        &self.shape
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn num_vars(&self) -> usize {
        self.shape.num_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.shape, other.shape, "ring mismatch");
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        MonomialIdeal::new(self.shape.clone(), gens)
    }

    /// Intersection via pairwise lcm.
    pub fn intersect(&self, other: &MonomialIdeal) -> MonomialIdeal {
        assert_eq!(self.shape, other.shape, "ring mismatch");
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.lcm(b));
            }
        }
        MonomialIdeal::new(self.shape.clone(), gens)
    }

    pub fn intersect_all(shape: &Arc<BlockShape>, ideals: &[MonomialIdeal]) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(shape.clone());
        for i in ideals {
            acc = acc.intersect(i);
        }
        acc
    }

    /// Colon by a single variable.
    pub fn colon_var(&self, v: usize) -> MonomialIdeal {
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut exps = g.exps().to_vec();
                if exps[v] > 0 {
                    exps[v] -= 1;
                }
                Monomial::from_exps(exps)
            })
            .collect();
        MonomialIdeal::new(self.shape.clone(), gens)
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    pub fn radical(&self) -> MonomialIdeal {
        let gens = self.gens.iter().map(Monomial::radical).collect();
        MonomialIdeal::new(self.shape.clone(), gens)
    }

    /// Alexander dual of a squarefree ideal: generators are the minimal
    /// transversals of the generator supports.  An involution; the zero
    /// ideal and the unit ideal are dual to each other.
    pub fn alexander_dual(&self) -> MonomialIdeal {
        assert!(self.is_squarefree(), "Alexander dual needs a squarefree ideal");
        let n = self.num_vars();
        // Intersect the variable primes of the generator supports.
        let mut cur: Vec<Monomial> = vec![Monomial::one(n)];
        for g in &self.gens {
            let mut next = Vec::with_capacity(cur.len() * g.exps().len());
            for m in &cur {
                for v in g.support() {
                    next.push(m.lcm(&Monomial::var(n, v)));
                }
            }
            cur = minimalize(next);
        }
        MonomialIdeal { shape: self.shape.clone(), gens: cur }
    }

    /// Minimal primes as variable sets, computed on the radical by
    /// exhaustive branching over covers of the generator hypergraph.
    ///
    /// The zero ideal has the single minimal prime `(0)` (empty set); the
    /// unit ideal has none.
    pub fn minimal_primes(&self) -> Vec<Vec<usize>> {
        if self.is_unit() {
            return Vec::new();
        }
        let rad = self.radical();
        let supports: Vec<Vec<usize>> = rad.gens.iter().map(|g| g.support().collect()).collect();
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        let mut chosen: Vec<usize> = Vec::new();
        branch_covers(&supports, &mut chosen, &mut found);
        let covers: Vec<Vec<usize>> = found.into_iter().collect();
        let mut minimal: Vec<Vec<usize>> = Vec::new();
        for c in &covers {
            let is_min = !covers
                .iter()
                .any(|d| d.len() < c.len() && d.iter().all(|v| c.contains(v)));
            if is_min {
                minimal.push(c.clone());
            }
        }
        minimal.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        minimal
    }

    /// Height of the ideal: the size of a smallest vertex cover of the
    /// generator supports.  The unit ideal reports `num_vars + 1`.
    pub fn codimension(&self) -> usize {
        if self.is_unit() {
            return self.num_vars() + 1;
        }
        self.minimal_primes()
            .iter()
            .map(Vec::len)
            .min()
            .unwrap_or(0)
    }

    /// Krull dimension of the quotient by this ideal; `-1` for the unit
    /// ideal.
    pub fn dimension(&self) -> i64 {
        self.num_vars() as i64 - self.codimension() as i64
    }

    /// Borel-fixedness for the block upper-triangular group in
    /// characteristic zero (also valid over `GF(p)` for `p` larger than
    /// every exponent in sight): for every generator divisible by `x_{i,j}`
    /// with `j > 1`, the exchange `m * x_{i,j-1} / x_{i,j}` stays inside.
    pub fn is_borel_fixed(&self) -> bool {
        for g in &self.gens {
            for v in g.support() {
                let block = self.shape.block_of(v);
                if v > self.shape.block_start(block) {
                    let mut exps = g.exps().to_vec();
                    exps[v] -= 1;
                    exps[v - 1] += 1;
                    if !self.contains(&Monomial::from_exps(exps)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// All variables occurring in some generator.
    pub fn support(&self) -> Vec<usize> {
        let mut vars: BTreeSet<usize> = BTreeSet::new();
        for g in &self.gens {
            vars.extend(g.support());
        }
        vars.into_iter().collect()
    }

    /// The ideal as a polynomial ideal over `field`.
    pub fn to_ideal<F: Field>(&self, field: F) -> Ideal<F> {
        let ring = BlockRing::with_shape(field, self.shape.clone());
        let gens = self
            .gens
            .iter()
            .map(|m| MultiPoly::monomial(ring.clone(), m.clone(), ring.field().one()))
            .collect();
        Ideal::new(ring, gens)
    }

    /// Relabels variables; `perm[v]` is the source position for `v` (see
    /// [`Monomial::permute`]).
    pub fn permute_vars(&self, perm: &[usize]) -> MonomialIdeal {
        let gens = self.gens.iter().map(|g| g.permute(perm)).collect();
        MonomialIdeal::new(self.shape.clone(), gens)
    }
}

fn branch_covers(
    supports: &[Vec<usize>],
    chosen: &mut Vec<usize>,
    found: &mut BTreeSet<Vec<usize>>,
) {
    let uncovered = supports
        .iter()
        .find(|s| !s.iter().any(|v| chosen.contains(v)));
    match uncovered {
        None => {
            let mut c = chosen.clone();
            c.sort_unstable();
            found.insert(c);
        }
        Some(s) => {
            for &v in s {
                chosen.push(v);
                branch_covers(supports, chosen, found);
                chosen.pop();
            }
        }
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "(0)");
        }
        let mut parts: Vec<String> = Vec::new();
        for g in &self.gens {
            let mut s = String::new();
            let mut first = true;
            for (v, &e) in g.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    s.push('*');
                }
                first = false;
                s.push_str(self.shape.var_name(v));
                if e > 1 {
                    use core::fmt::Write;
                    let _ = write!(s, "^{e}");
                }
            }
            if first {
                s.push('1');
            }
            parts.push(s);
        }
        write!(f, "({})", parts.join(", "))
    }
}

/// A Borel-fixed prime: the first `w_i` variables of each block.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BorelPrime {
    w: Vec<u32>,
}

impl BorelPrime {
    pub fn new(shape: &BlockShape, w: Vec<u32>) -> Self {
        assert_eq!(w.len(), shape.num_blocks());
        for (i, &wi) in w.iter().enumerate() {
            assert!(wi <= shape.block_sizes()[i], "prime exceeds block {i}");
        }
        BorelPrime { w }
    }

    pub fn w(&self) -> &[u32] {
        &self.w
    }

    pub fn to_monomial_ideal(&self, shape: &Arc<BlockShape>) -> MonomialIdeal {
        let mut vars = Vec::new();
        for (i, &wi) in self.w.iter().enumerate() {
            for j in 0..wi as usize {
                vars.push(shape.var(i, j));
            }
        }
        MonomialIdeal::variable_prime(shape.clone(), &vars)
    }

    /// Recognizes a variable set as a Borel prime (an initial segment of
    /// every block).
    pub fn from_vars(shape: &BlockShape, vars: &[usize]) -> Option<BorelPrime> {
        let set: BTreeSet<usize> = vars.iter().copied().collect();
        let mut w = vec![0u32; shape.num_blocks()];
        for i in 0..shape.num_blocks() {
            let mut count = 0u32;
            for (j, v) in shape.block_vars(i).enumerate() {
                if set.contains(&v) {
                    if j as u32 != count {
                        return None;
                    }
                    count += 1;
                }
            }
            w[i] = count;
        }
        if w.iter().map(|&x| x as usize).sum::<usize>() != set.len() {
            return None;
        }
        Some(BorelPrime { w })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;

    fn mono(n: usize, vars: &[usize]) -> Monomial {
        let mut m = Monomial::one(n);
        for &v in vars {
            m = m.mul_var(v);
        }
        m
    }

    #[test]
    fn minimal_generators_are_an_antichain() {
        let shape = BlockShape::new(&[4]);
        let i = MonomialIdeal::new(
            shape,
            vec![mono(4, &[0]), mono(4, &[0, 1]), mono(4, &[2, 3]), mono(4, &[2, 3])],
        );
        assert_eq!(i.gens().len(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let shape = BlockShape::new(&[3]);
        let a = MonomialIdeal::variable_prime(shape.clone(), &[0]);
        let b = MonomialIdeal::variable_prime(shape.clone(), &[1, 2]);
        let i = a.intersect(&b);
        assert_eq!(i.gens().len(), 2);
        assert!(i.contains(&mono(3, &[0, 1])));
        assert!(!i.contains(&mono(3, &[0])));
        let s = a.sum(&b);
        assert_eq!(s.gens().len(), 3);
    }

    #[test]
    fn alexander_dual_small() {
        // (x1*x2) ~ (x1, x2).
        let shape = BlockShape::new(&[2]);
        let i = MonomialIdeal::new(shape.clone(), vec![mono(2, &[0, 1])]);
        let dual = i.alexander_dual();
        assert_eq!(dual, MonomialIdeal::variable_prime(shape, &[0, 1]));
        assert_eq!(dual.alexander_dual(), i);
    }

    #[test]
    fn alexander_dual_degenerate_cases() {
        let shape = BlockShape::new(&[3]);
        let zero = MonomialIdeal::zero(shape.clone());
        let unit = MonomialIdeal::unit(shape.clone());
        assert_eq!(zero.alexander_dual(), unit);
        assert_eq!(unit.alexander_dual(), zero);
    }

    #[test]
    fn minimal_primes_of_squarefree_ideal() {
        // (x1*x3, x1*x4, x2*x3, x2*x4) = (x1,x2) cap (x3,x4).
        let shape = BlockShape::new(&[4]);
        let i = MonomialIdeal::new(
            shape,
            vec![mono(4, &[0, 2]), mono(4, &[0, 3]), mono(4, &[1, 2]), mono(4, &[1, 3])],
        );
        assert_eq!(i.minimal_primes(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(i.codimension(), 2);
        assert_eq!(i.dimension(), 2);
    }

    #[test]
    fn minimal_primes_route_through_radical() {
        let shape = BlockShape::new(&[2]);
        let i = MonomialIdeal::new(shape, vec![Monomial::from_exps(vec![2, 0])]);
        assert_eq!(i.minimal_primes(), vec![vec![0]]);
    }

    #[test]
    fn zero_and_unit_edge_cases() {
        let shape = BlockShape::new(&[3]);
        let zero = MonomialIdeal::zero(shape.clone());
        assert_eq!(zero.minimal_primes(), vec![Vec::<usize>::new()]);
        assert_eq!(zero.dimension(), 3);
        let unit = MonomialIdeal::unit(shape);
        assert!(unit.minimal_primes().is_empty());
        assert_eq!(unit.dimension(), -1);
    }

    #[test]
    fn borel_fixed_detection() {
        let shape = BlockShape::new(&[2, 2]);
        // (x1_1) is fixed; (x1_2) is not (the exchange x1_1 is missing).
        let fixed = MonomialIdeal::variable_prime(shape.clone(), &[0]);
        assert!(fixed.is_borel_fixed());
        let not_fixed = MonomialIdeal::variable_prime(shape.clone(), &[1]);
        assert!(!not_fixed.is_borel_fixed());
        // (x1_1*x2_2, x1_1*x2_1) is fixed.
        let i = MonomialIdeal::new(shape, vec![mono(4, &[0, 3]), mono(4, &[0, 2])]);
        assert!(i.is_borel_fixed());
    }

    #[test]
    fn borel_prime_round_trip() {
        let shape = BlockShape::new(&[3, 2, 4]);
        let p = BorelPrime::new(&shape, vec![2, 1, 0]);
        let ideal = p.to_monomial_ideal(&shape);
        assert_eq!(ideal.gens().len(), 3);
        let back = BorelPrime::from_vars(&shape, &ideal.support()).unwrap();
        assert_eq!(back, p);
        // A non-initial segment is rejected.
        assert!(BorelPrime::from_vars(&shape, &[1]).is_none());
    }

    #[test]
    fn display_uses_ring_names() {
        let shape = BlockShape::new(&[2, 1]);
        let i = MonomialIdeal::new(shape, vec![Monomial::from_exps(vec![2, 0, 1])]);
        assert_eq!(format!("{i}"), "(x1_1^2*x2_1)");
    }
}
