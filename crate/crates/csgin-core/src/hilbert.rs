//! Multigraded Hilbert numerators and multidegrees.
//!
//! For a monomial ideal `J` in the block ring `S` with block sizes
//! `d_1, ..., d_n`, the `Z^n`-graded Hilbert series of `S/J` is
//! `K(z) / prod_i (1 - z_i)^{d_i}` for a unique integer polynomial `K`, the
//! K-polynomial.  The C-polynomial is `C(z) = K(1 - z_1, ..., 1 - z_n)`; its
//! lowest-degree homogeneous component is the multidegree and its
//! divisibility-minimal part is the G-multidegree.
//!
//! K-polynomials are computed by pivot splitting: for a variable `x` of
//! multidegree `e`, `K(S/J) = K(S/(J + (x))) + z^e * K(S/(J : x))`, with
//! complete intersections of pairwise coprime generators as base case.

use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Integer-coefficient Laurent polynomial in `z_1, ..., z_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    n: usize,
    terms: BTreeMap<Vec<i64>, i64>,
}

fn add_i64(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow")
}

fn mul_i64(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow")
}

impl LaurentPoly {
    pub fn zero(n: usize) -> Self {
        LaurentPoly { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        LaurentPoly::monomial(vec![0; n], 1)
    }

    pub fn monomial(exps: Vec<i64>, coeff: i64) -> Self {
        let n = exps.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exps, coeff);
        }
        LaurentPoly { n, terms }
    }

    pub fn from_terms(n: usize, raw: impl IntoIterator<Item = (Vec<i64>, i64)>) -> Self {
        let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (e, c) in raw {
            assert_eq!(e.len(), n, "exponent arity mismatch");
            let entry = terms.entry(e).or_insert(0);
            *entry = add_i64(*entry, c);
        }
        terms.retain(|_, c| *c != 0);
        LaurentPoly { n, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &i64)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[i64]) -> i64 {
        self.terms.get(exps).copied().unwrap_or(0)
    }

    pub fn has_negative_exponents(&self) -> bool {
        self.terms.keys().any(|e| e.iter().any(|&x| x < 0))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms = self.terms.clone();
        for (e, &c) in &other.terms {
            let entry = terms.entry(e.clone()).or_insert(0);
            *entry = add_i64(*entry, c);
        }
        terms.retain(|_, c| *c != 0);
        LaurentPoly { n: self.n, terms }
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect();
        LaurentPoly { n: self.n, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut terms: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                let entry = terms.entry(e).or_insert(0);
                *entry = add_i64(*entry, mul_i64(ca, cb));
            }
        }
        terms.retain(|_, c| *c != 0);
        LaurentPoly { n: self.n, terms }
    }

    /// Terms whose total degree is exactly `d`.
    pub fn homogeneous_component(&self, d: i64) -> Self {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.iter().sum::<i64>() == d)
            .map(|(e, &c)| (e.clone(), c))
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    pub fn min_total_degree(&self) -> Option<i64> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    /// Terms whose exponent vectors are componentwise-minimal in the
    /// support.
    pub fn min_part(&self) -> Self {
        let keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| {
                !keys
                    .iter()
                    .any(|f| *f != *e && f.iter().zip(e.iter()).all(|(a, b)| a <= b))
            })
            .map(|(e, &c)| (e.clone(), c))
            .collect();
        LaurentPoly { n: self.n, terms }
    }

    /// All coefficients in `{0, 1}`.
    pub fn multiplicity_free(&self) -> bool {
        self.terms.values().all(|&c| c == 1)
    }

    /// The substitution `z_i -> 1 - z_i`.  Requires polynomial (not
    /// genuinely Laurent) input.
    pub fn substitute_one_minus_z(&self) -> Self {
        assert!(
            !self.has_negative_exponents(),
            "substitution needs nonnegative exponents"
        );
        let mut acc = LaurentPoly::zero(self.n);
        for (e, &c) in &self.terms {
            let mut term = LaurentPoly::monomial(vec![0; self.n], c);
            for (i, &a) in e.iter().enumerate() {
                let mut unit = vec![0i64; self.n];
                unit[i] = 1;
                let factor =
                    LaurentPoly::one(self.n).sub(&LaurentPoly::monomial(unit, 1));
                for _ in 0..a {
                    term = term.mul(&factor);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (e, &c) in self.terms.iter().rev() {
            let mut body = String::new();
            for (i, &a) in e.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !body.is_empty() {
                    body.push('*');
                }
                use core::fmt::Write;
                if a == 1 {
                    let _ = write!(body, "z{}", i + 1);
                } else {
                    let _ = write!(body, "z{}^{}", i + 1, a);
                }
            }
            let mag = c.unsigned_abs();
            let lead = out.is_empty();
            if c < 0 {
                out.push_str(if lead { "-" } else { " - " });
            } else if !lead {
                out.push_str(" + ");
            }
            if body.is_empty() {
                use core::fmt::Write;
                let _ = write!(out, "{mag}");
            } else {
                if mag != 1 {
                    use core::fmt::Write;
                    let _ = write!(out, "{mag}*");
                }
                out.push_str(&body);
            }
        }
        f.write_str(&out)
    }
}

/// Pivot selection for the K-polynomial recursion.  All rules give the same
/// answer; they differ only in recursion shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotRule {
    /// The variable shared by the most generators, ties to the smallest
    /// index.
    MostFrequent,
    /// The smallest-index variable shared by at least two generators.
    FirstShared,
}

/// Hilbert numerator of `S/J`.
pub fn k_polynomial(j: &MonomialIdeal) -> LaurentPoly {
    k_polynomial_with(j, PivotRule::MostFrequent)
}

pub fn k_polynomial_with(j: &MonomialIdeal, rule: PivotRule) -> LaurentPoly {
    let mut memo: BTreeMap<Vec<Monomial>, LaurentPoly> = BTreeMap::new();
    k_rec(j, rule, &mut memo)
}

fn block_degree_term(j: &MonomialIdeal, g: &Monomial) -> LaurentPoly {
    let deg: Vec<i64> = g
        .block_degree(j.shape())
        .iter()
        .map(|&d| d as i64)
        .collect();
    LaurentPoly::monomial(deg, 1)
}

fn k_rec(
    j: &MonomialIdeal,
    rule: PivotRule,
    memo: &mut BTreeMap<Vec<Monomial>, LaurentPoly>,
) -> LaurentPoly {
    let n = j.shape().num_blocks();
    if j.is_zero() {
        return LaurentPoly::one(n);
    }
    if j.is_unit() {
        return LaurentPoly::zero(n);
    }
    if let Some(hit) = memo.get(j.gens()) {
        return hit.clone();
    }

    let result = match pick_pivot(j, rule) {
        // Pairwise coprime generators cut a complete intersection.
        None => {
            let mut acc = LaurentPoly::one(n);
            for g in j.gens() {
                acc = acc.mul(&LaurentPoly::one(n).sub(&block_degree_term(j, g)));
            }
            acc
        }
        Some(v) => {
            let prime = MonomialIdeal::variable_prime(j.shape().clone(), &[v]);
            let plus = k_rec(&j.sum(&prime), rule, memo);
            let colon = k_rec(&j.colon_var(v), rule, memo);
            let mut unit = vec![0i64; n];
            unit[j.shape().block_of(v)] = 1;
            plus.add(&LaurentPoly::monomial(unit, 1).mul(&colon))
        }
    };
    memo.insert(j.gens().to_vec(), result.clone());
    result
}

fn pick_pivot(j: &MonomialIdeal, rule: PivotRule) -> Option<usize> {
    let mut count = vec![0usize; j.num_vars()];
    for g in j.gens() {
        for v in g.support() {
            count[v] += 1;
        }
    }
    match rule {
        PivotRule::MostFrequent => {
            let (v, &c) = count
                .iter()
                .enumerate()
                .max_by_key(|&(v, &c)| (c, usize::MAX - v))
                .unwrap();
            (c >= 2).then_some(v)
        }
        PivotRule::FirstShared => count.iter().position(|&c| c >= 2),
    }
}

/// `K(1 - z_1, ..., 1 - z_n)`.
pub fn c_polynomial(k: &LaurentPoly) -> LaurentPoly {
    k.substitute_one_minus_z()
}

/// Lowest-degree homogeneous component of the C-polynomial: the component
/// in degree `codim`.
pub fn multidegree(j: &MonomialIdeal) -> LaurentPoly {
    let c = c_polynomial(&k_polynomial(j));
    if j.is_unit() {
        return c;
    }
    c.homogeneous_component(j.codimension() as i64)
}

/// Divisibility-minimal part of the C-polynomial.
pub fn g_multidegree(j: &MonomialIdeal) -> LaurentPoly {
    c_polynomial(&k_polynomial(j)).min_part()
}

/// Mixed multiplicities read off a multidegree: the term `e * z^w` records
/// multiplicity `e` at `a` with `a_i = d_i - 1 - w_i`.  Terms where some
/// `w_i > d_i - 1` fall outside the mixed-multiplicity range and are
/// reported separately instead of mapped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MixedMultiplicities {
    pub values: BTreeMap<Vec<i64>, i64>,
    /// Multidegree exponents excluded by the range condition.
    pub excluded: Vec<Vec<i64>>,
}

pub fn mixed_multiplicities(mdeg: &LaurentPoly, block_sizes: &[u32]) -> MixedMultiplicities {
    assert_eq!(mdeg.num_vars(), block_sizes.len());
    let mut values = BTreeMap::new();
    let mut excluded = Vec::new();
    for (w, &e) in mdeg.terms() {
        let a: Vec<i64> = w
            .iter()
            .zip(block_sizes)
            .map(|(&wi, &di)| di as i64 - 1 - wi)
            .collect();
        if a.iter().any(|&ai| ai < 0) {
            excluded.push(w.clone());
        } else {
            values.insert(a, e);
        }
    }
    MixedMultiplicities { values, excluded }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BlockShape;
    use crate::rng::SplitMix64;
    use alloc::format;
    use alloc::sync::Arc;

    fn lp(n: usize, terms: &[(&[i64], i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(n, terms.iter().map(|(e, c)| (e.to_vec(), *c)))
    }

    fn ideal(shape: &Arc<BlockShape>, gens: &[&[u32]]) -> MonomialIdeal {
        let gens = gens
            .iter()
            .map(|e| Monomial::from_exps(e.to_vec()))
            .collect();
        MonomialIdeal::new(shape.clone(), gens)
    }

    /// Coefficient of `z^b` in `1 / (1 - z)^d`, the binomial
    /// `C(b + d - 1, d - 1)`.
    fn compositions(b: i64, d: i64) -> i64 {
        let mut acc = 1i64;
        for k in 1..d {
            acc = acc * (b + k) / k;
        }
        acc
    }

    /// Checks the K-polynomial against a brute-force count of standard
    /// monomials in every multidegree up to `bound`.
    fn assert_k_matches_hilbert_function(j: &MonomialIdeal, bound: u32) {
        let shape = j.shape().clone();
        let n = shape.num_blocks();
        let k = k_polynomial(j);
        let mut boxes: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..n {
            boxes = boxes
                .into_iter()
                .flat_map(|p| {
                    (0..=bound).map(move |b| {
                        let mut q = p.clone();
                        q.push(b);
                        q
                    })
                })
                .collect();
        }
        for target in boxes {
            let mut count = 0i64;
            let mut stack = vec![Monomial::one(shape.num_vars())];
            for v in 0..shape.num_vars() {
                let block = shape.block_of(v);
                let mut next = Vec::new();
                for m in stack {
                    let used: u32 = shape.block_vars(block).map(|u| m.exp(u)).sum();
                    for e in 0..=(target[block] - used) {
                        next.push(m.mul(&Monomial::var(shape.num_vars(), v).pow(e)));
                    }
                }
                stack = next;
            }
            for m in stack {
                if m.block_degree(&shape) == target && !j.contains(&m) {
                    count += 1;
                }
            }
            let mut predicted = 0i64;
            for (a, &c) in k.terms() {
                if a.iter().zip(&target).all(|(&ai, &ti)| ai <= ti as i64) {
                    let mut ways = c;
                    for i in 0..n {
                        ways *= compositions(
                            target[i] as i64 - a[i],
                            shape.block_sizes()[i] as i64,
                        );
                    }
                    predicted += ways;
                }
            }
            assert_eq!(count, predicted, "multidegree {target:?} of {j}");
        }
    }

    #[test]
    fn k_polynomial_base_cases() {
        let shape = BlockShape::new(&[2, 1]);
        assert_eq!(k_polynomial(&MonomialIdeal::zero(shape.clone())), LaurentPoly::one(2));
        assert_eq!(k_polynomial(&MonomialIdeal::unit(shape.clone())), LaurentPoly::zero(2));
        let principal = MonomialIdeal::variable_prime(shape, &[0]);
        assert_eq!(k_polynomial(&principal), lp(2, &[(&[0, 0], 1), (&[1, 0], -1)]));
    }

    #[test]
    fn k_polynomial_against_monomial_count() {
        let shape = BlockShape::new(&[2, 2]);
        // (x1_1*x2_1, x1_1^2*x2_2, x1_2*x2_1*x2_2)
        let j = ideal(
            &shape,
            &[&[1, 0, 1, 0], &[2, 0, 0, 1], &[0, 1, 1, 1]],
        );
        assert_k_matches_hilbert_function(&j, 3);
        let one_block = BlockShape::new(&[3]);
        let j2 = ideal(&one_block, &[&[2, 1, 0], &[0, 2, 2], &[1, 0, 3]]);
        assert_k_matches_hilbert_function(&j2, 4);
    }

    #[test]
    fn pivot_rules_agree_on_random_ideals() {
        let shape = BlockShape::new(&[2, 3]);
        let mut rng = SplitMix64::new(77);
        for _ in 0..100 {
            let mut gens = Vec::new();
            for _ in 0..(1 + rng.next_below(4)) {
                let exps: Vec<u32> =
                    (0..5).map(|_| rng.next_below(3) as u32).collect();
                gens.push(Monomial::from_exps(exps));
            }
            let j = MonomialIdeal::new(shape.clone(), gens);
            assert_eq!(
                k_polynomial_with(&j, PivotRule::MostFrequent),
                k_polynomial_with(&j, PivotRule::FirstShared),
                "{j}"
            );
        }
    }

    #[test]
    fn c_polynomial_substitution() {
        assert_eq!(c_polynomial(&LaurentPoly::one(2)), LaurentPoly::one(2));
        let k = lp(1, &[(&[0], 1), (&[1], -1)]);
        assert_eq!(c_polynomial(&k), lp(1, &[(&[1], 1)]));
        let k2 = lp(2, &[(&[0, 0], 1), (&[1, 0], -1), (&[0, 1], -1), (&[1, 1], 1)]);
        assert_eq!(c_polynomial(&k2), lp(2, &[(&[1, 1], 1)]));
    }

    #[test]
    fn min_part_keeps_divisibility_minimal_terms() {
        let g = lp(2, &[(&[2, 0], 1), (&[1, 2], 2), (&[3, 0], 3)]);
        assert_eq!(g.min_part(), lp(2, &[(&[2, 0], 1), (&[1, 2], 2)]));
        assert_eq!(LaurentPoly::zero(2).min_part(), LaurentPoly::zero(2));
        let h = lp(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
        assert_eq!(h.min_part(), lp(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
    }

    #[test]
    fn multidegree_of_simple_ideals() {
        let shape = BlockShape::new(&[2, 1]);
        let principal = MonomialIdeal::variable_prime(shape, &[0]);
        assert_eq!(multidegree(&principal), lp(2, &[(&[1, 0], 1)]));
        assert!(multidegree(&principal).multiplicity_free());

        // Two points on a line: degree 2, not multiplicity-free.
        let line = BlockShape::new(&[2]);
        let two_points = ideal(&line, &[&[1, 1]]);
        let m = multidegree(&two_points);
        assert_eq!(m, lp(1, &[(&[1], 2)]));
        assert!(!m.multiplicity_free());
        assert_eq!(g_multidegree(&two_points), m);
    }

    #[test]
    fn g_multidegree_can_exceed_the_multidegree() {
        // (x) cap (y1, y2) in blocks {x}, {y1, y2}: codimension 1 with
        // minimal primes in two different codimensions.
        let shape = BlockShape::new(&[1, 2]);
        let j = ideal(&shape, &[&[1, 1, 0], &[1, 0, 1]]);
        assert_eq!(multidegree(&j), lp(2, &[(&[1, 0], 1)]));
        assert_eq!(
            g_multidegree(&j),
            lp(2, &[(&[1, 0], 1), (&[0, 2], 1)])
        );
    }

    #[test]
    fn mixed_multiplicity_translation() {
        let m = lp(1, &[(&[1], 1)]);
        let mm = mixed_multiplicities(&m, &[2]);
        assert_eq!(mm.values.get(&vec![0]), Some(&1));
        assert!(mm.excluded.is_empty());

        let m38 = lp(3, &[(&[2, 1, 0], 1)]);
        let mm38 = mixed_multiplicities(&m38, &[3, 2, 4]);
        assert_eq!(mm38.values.get(&vec![0, 0, 3]), Some(&1));

        // w_i = d_i lands outside the range.
        let over = lp(2, &[(&[2, 0], 1), (&[1, 1], 1)]);
        let mm2 = mixed_multiplicities(&over, &[2, 2]);
        assert_eq!(mm2.values.get(&vec![0, 0]), Some(&1));
        assert_eq!(mm2.excluded, vec![vec![2, 0]]);
    }

    #[test]
    fn display_formats() {
        let p = lp(2, &[(&[3, 0], 1), (&[1, 1], -2), (&[0, 0], 5)]);
        assert_eq!(format!("{p}"), "z1^3 - 2*z1*z2 + 5");
        assert_eq!(format!("{}", LaurentPoly::zero(2)), "0");
    }
}
