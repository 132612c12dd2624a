//! Sparse multivariate polynomials over a block-graded ring.
//!
//! Terms are kept in a canonical form: sorted strictly descending under the
//! ambient grevlex order of the ring, no zero coefficients.  Equality of the
//! canonical form is equality of polynomials, and iteration order is
//! deterministic everywhere downstream.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::ring::{assert_same_ring, RingRef};
use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly<F: Field> {
    ring: RingRef<F>,
    terms: Vec<(Monomial, F::Elem)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomogenizeError {
    /// The requested degree is smaller than the degree of some term in the
    /// named block.
    DegreeTooSmall { block: usize },
    /// The input already involves the closing variable of a block.
    ClosingVariablePresent { var: usize },
}

impl fmt::Display for HomogenizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomogenizeError::DegreeTooSmall { block } => {
                write!(f, "target degree too small in block {}", block + 1)
            }
            HomogenizeError::ClosingVariablePresent { var } => {
                write!(f, "input uses closing variable #{}", var + 1)
            }
        }
    }
}

impl<F: Field> MultiPoly<F> {
    pub fn zero(ring: RingRef<F>) -> Self {
        MultiPoly { ring, terms: Vec::new() }
    }

    pub fn one(ring: RingRef<F>) -> Self {
        let c = ring.field().one();
        Self::constant(ring, c)
    }

    pub fn constant(ring: RingRef<F>, c: F::Elem) -> Self {
        if ring.field().is_zero(&c) {
            return Self::zero(ring);
        }
        let n = ring.num_vars();
        MultiPoly { ring, terms: alloc::vec![(Monomial::one(n), c)] }
    }

    pub fn var(ring: RingRef<F>, v: usize) -> Self {
        let n = ring.num_vars();
        let c = ring.field().one();
        MultiPoly { ring, terms: alloc::vec![(Monomial::var(n, v), c)] }
    }

    pub fn monomial(ring: RingRef<F>, m: Monomial, c: F::Elem) -> Self {
        Self::from_terms(ring, alloc::vec![(m, c)])
    }

    /// Builds the canonical form: merges duplicate monomials, drops zeros,
    /// sorts descending under the ambient order.
    pub fn from_terms(ring: RingRef<F>, terms: Vec<(Monomial, F::Elem)>) -> Self {
        let field = ring.field().clone();
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.num_vars(), ring.num_vars());
            match map.entry(m) {
                alloc::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c);
                }
                alloc::collections::btree_map::Entry::Occupied(mut e) => {
                    let sum = field.add(e.get(), &c);
                    *e.get_mut() = sum;
                }
            }
        }
        let mut terms: Vec<(Monomial, F::Elem)> =
            map.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        let ambient = TermOrder::ambient(ring.num_vars());
        terms.sort_by(|(a, _), (b, _)| ambient.cmp(b, a));
        MultiPoly { ring, terms }
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn field(&self) -> &F {
        self.ring.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F::Elem)> {
        self.terms.iter().map(|(m, c)| (m, c))
    }

    pub fn coeff_of(&self, m: &Monomial) -> Option<&F::Elem> {
        self.terms.iter().find(|(t, _)| t == m).map(|(_, c)| c)
    }

    /// Leading term under `ord`; `None` for the zero polynomial.
    pub fn lead(&self, ord: &TermOrder) -> Option<(&Monomial, &F::Elem)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| ord.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    /// Leading term under the ambient order (the stored head term).
    pub fn lead_ambient(&self) -> Option<(&Monomial, &F::Elem)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_same_ring(&self.ring, &other.ring);
        let field = self.field().clone();
        let ambient = TermOrder::ambient(self.ring.num_vars());
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match ambient.cmp(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !field.is_zero(&c) {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Self {
        let field = self.field();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), field.neg(c)))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let field = self.field().clone();
        if field.is_zero(c) {
            return Self::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), field.mul(k, c)))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// Multiplication by the term `c * m` (no merging needed: the map is
    /// strictly monotone under every multiplicative order).
    pub fn mul_term(&self, m: &Monomial, c: &F::Elem) -> Self {
        let field = self.field().clone();
        if field.is_zero(c) {
            return Self::zero(self.ring.clone());
        }
        let terms = self
            .terms
            .iter()
            .map(|(t, k)| (t.mul(m), field.mul(k, c)))
            .collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_same_ring(&self.ring, &other.ring);
        let field = self.field().clone();
        let mut map: BTreeMap<Monomial, F::Elem> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let c = field.mul(ca, cb);
                match map.entry(m) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        let sum = field.add(e.get(), &c);
                        *e.get_mut() = sum;
                    }
                }
            }
        }
        let terms = map.into_iter().filter(|(_, c)| !field.is_zero(c)).collect();
        Self::from_terms(self.ring.clone(), terms)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.ring.clone());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Makes the leading coefficient under `ord` equal to 1.
    pub fn monic(&self, ord: &TermOrder) -> Self {
        match self.lead(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.field().inv(c);
                self.scale(&inv)
            }
        }
    }

    /// The common multidegree of all terms, or `None` if the polynomial is
    /// not homogeneous.  The zero polynomial reports the zero degree.
    pub fn block_degree(&self) -> Option<Vec<u32>> {
        let shape = self.ring.shape();
        let mut terms = self.terms.iter();
        let Some((first, _)) = terms.next() else {
            return Some(alloc::vec![0; shape.num_blocks()]);
        };
        let deg = first.block_degree(shape);
        for (m, _) in terms {
            if m.block_degree(shape) != deg {
                return None;
            }
        }
        Some(deg)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.block_degree().is_some()
    }

    /// Ring homomorphism determined by variable images.  `images[v]` must
    /// live in `target` (over the same coefficient field), one per variable
    /// of `self`.
    pub fn substitute(&self, target: &RingRef<F>, images: &[MultiPoly<F>]) -> MultiPoly<F> {
        assert_eq!(images.len(), self.ring.num_vars(), "one image per variable");
        assert_eq!(self.ring.field(), target.field(), "field mismatch");
        for img in images {
            assert_same_ring(&img.ring, target);
        }
        let mut acc = MultiPoly::zero(target.clone());
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(target.clone(), c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    term = term.mul(&images[v].pow(e));
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Relabels variables: the exponent of variable `v` in the result is the
    /// exponent of `perm[v]` in the input.
    pub fn permute_vars(&self, perm: &[usize]) -> MultiPoly<F> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.permute(perm), c.clone()))
            .collect();
        Self::from_terms(self.ring.clone(), terms)
    }

    /// Multigraded homogenization.  Each block `i` has a closing variable
    /// `y_i = x_{i,d_i}`; a term of multidegree `b` is multiplied by
    /// `prod y_i^(c_i - b_i)`.  With `target = None` the smallest valid `c`
    /// (the componentwise maximum of the term degrees) is used.
    pub fn homogenize(&self, target: Option<&[u32]>) -> Result<MultiPoly<F>, HomogenizeError> {
        let shape = self.ring.shape().clone();
        let nb = shape.num_blocks();
        let closers: Vec<usize> = (0..nb)
            .map(|i| shape.var(i, shape.block_sizes()[i] as usize - 1))
            .collect();
        for (m, _) in &self.terms {
            for &y in &closers {
                if m.exp(y) > 0 {
                    return Err(HomogenizeError::ClosingVariablePresent { var: y });
                }
            }
        }
        let degs: Vec<Vec<u32>> = self
            .terms
            .iter()
            .map(|(m, _)| m.block_degree(&shape))
            .collect();
        let mut c = alloc::vec![0u32; nb];
        for d in &degs {
            for i in 0..nb {
                c[i] = c[i].max(d[i]);
            }
        }
        if let Some(t) = target {
            assert_eq!(t.len(), nb, "target degree length mismatch");
            for i in 0..nb {
                if t[i] < c[i] {
                    return Err(HomogenizeError::DegreeTooSmall { block: i });
                }
            }
            c = t.to_vec();
        }
        let terms = self
            .terms
            .iter()
            .zip(&degs)
            .map(|((m, k), d)| {
                let mut exps = m.exps().to_vec();
                for i in 0..nb {
                    exps[closers[i]] += c[i] - d[i];
                }
                (Monomial::from_exps(exps), k.clone())
            })
            .collect();
        Ok(Self::from_terms(self.ring.clone(), terms))
    }

    /// Sets every closing variable to 1.
    pub fn dehomogenize(&self) -> MultiPoly<F> {
        let shape = self.ring.shape();
        let closers: Vec<usize> = (0..shape.num_blocks())
            .map(|i| shape.var(i, shape.block_sizes()[i] as usize - 1))
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = m.exps().to_vec();
                for &y in &closers {
                    exps[y] = 0;
                }
                (Monomial::from_exps(exps), c.clone())
            })
            .collect();
        Self::from_terms(self.ring.clone(), terms)
    }

    /// True when no variable from `vars` occurs.
    pub fn avoids_vars(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
    }

    fn fmt_monomial(&self, m: &Monomial, out: &mut String) {
        use core::fmt::Write;
        let shape = self.ring.shape();
        let mut first = true;
        for (v, &e) in m.exps().iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            out.push_str(shape.var_name(v));
            if e > 1 {
                let _ = write!(out, "^{e}");
            }
        }
        if first {
            out.push('1');
        }
    }
}

struct DisplayElem<'a, F: Field>(&'a F, &'a F::Elem);
impl<F: Field> fmt::Display for DisplayElem<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_elem(self.1, f)
    }
}

impl<F: Field> fmt::Display for MultiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.field();
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let cs = alloc::format!("{}", DisplayElem(field, c));
            let (neg, mag) = match cs.strip_prefix('-') {
                Some(rest) => (true, String::from(rest)),
                None => (false, cs),
            };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if mag == "1" && !m.is_one() {
                self.fmt_monomial(m, &mut out);
            } else {
                out.push_str(&mag);
                if !m.is_one() {
                    out.push('*');
                    self.fmt_monomial(m, &mut out);
                }
            }
        }
        write!(f, "{out}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::ring::BlockRing;
    use alloc::format;
    use alloc::vec;

    fn ring2x2() -> RingRef<Rationals> {
        BlockRing::new(Rationals, &[2, 2])
    }

    #[test]
    fn canonical_form_merges_and_sorts() {
        let r = ring2x2();
        let m = |e: &[u32]| Monomial::from_exps(e.to_vec());
        let f = Rationals;
        let p = MultiPoly::from_terms(
            r.clone(),
            vec![
                (m(&[0, 1, 0, 0]), f.from_i64(2)),
                (m(&[1, 0, 0, 0]), f.from_i64(1)),
                (m(&[0, 1, 0, 0]), f.from_i64(-2)),
            ],
        );
        assert_eq!(p.num_terms(), 1);
        assert_eq!(format!("{p}"), "x1_1");
    }

    #[test]
    fn arithmetic_ring_laws() {
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        let a = x(0).add(&x(1));
        let b = x(2).sub(&x(3));
        let c = x(0).mul(&x(3));
        assert_eq!(a.mul(&b), b.mul(&a));
        assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        assert!(a.sub(&a).is_zero());
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn display_round_trip_shapes() {
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        // Grevlex ties break toward the smaller trailing exponent, so the
        // antidiagonal term of the minor leads.
        let p = x(0).mul(&x(3)).sub(&x(1).mul(&x(2)));
        assert_eq!(format!("{p}"), "-x1_2*x2_1 + x1_1*x2_2");
        let q = x(0).mul(&x(0)).scale(&Rationals.from_i64(3));
        assert_eq!(format!("{q}"), "3*x1_1^2");
    }

    #[test]
    fn balanced_display_mod_p() {
        let r = BlockRing::new(PrimeField::default_prime(), &[1, 1]);
        let x = MultiPoly::var(r.clone(), 0);
        let y = MultiPoly::var(r.clone(), 1);
        let p = x.sub(&y);
        assert_eq!(format!("{p}"), "x1_1 - x2_1");
    }

    #[test]
    fn homogenize_linear_form() {
        // Blocks of sizes (2, 2): variables x1_1, x1_2, x2_1, x2_2 with
        // closing variables x1_2 and x2_2.  Homogenizing x1_1 + x2_1 yields
        // x1_1*x2_2 + x2_1*x1_2.
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        let f = x(0).add(&x(2));
        let h = f.homogenize(None).unwrap();
        let expect = x(0).mul(&x(3)).add(&x(2).mul(&x(1)));
        assert_eq!(h, expect);
        assert!(h.is_homogeneous());
        assert_eq!(h.dehomogenize(), f);
    }

    #[test]
    fn homogenize_already_homogeneous_is_identity() {
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        let f = x(0).mul(&x(2));
        assert_eq!(f.homogenize(None).unwrap(), f);
    }

    #[test]
    fn homogenize_rejects_small_target() {
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        let f = x(0).mul(&x(0)).add(&x(2));
        let err = f.homogenize(Some(&[1, 1])).unwrap_err();
        assert_eq!(err, HomogenizeError::DegreeTooSmall { block: 0 });
    }

    #[test]
    fn homogenize_rejects_closing_variables() {
        let r = ring2x2();
        let y1 = MultiPoly::var(r.clone(), 1);
        let err = y1.homogenize(None).unwrap_err();
        assert_eq!(err, HomogenizeError::ClosingVariablePresent { var: 1 });
    }

    #[test]
    fn substitution_is_a_ring_map() {
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        let images: Vec<_> = vec![
            x(0).add(&x(1)),
            x(1).clone(),
            x(2).sub(&x(3)),
            x(3).clone(),
        ];
        let a = x(0).mul(&x(2));
        let b = x(1).add(&x(3));
        let lhs = a.mul(&b).substitute(&r, &images);
        let rhs = a.substitute(&r, &images).mul(&b.substitute(&r, &images));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn homogeneity_detection() {
        let r = ring2x2();
        let x = |v| MultiPoly::var(r.clone(), v);
        let h = x(0).mul(&x(2)).add(&x(1).mul(&x(3)));
        assert_eq!(h.block_degree(), Some(vec![1, 1]));
        let nh = x(0).add(&x(0).mul(&x(2)));
        assert!(nh.block_degree().is_none());
    }
}
