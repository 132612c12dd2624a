//! Polynomial ideals with cached Groebner bases.
//!
//! An [`Ideal`] remembers every reduced Groebner basis computed for it, keyed
//! by term order, behind a lock; clones share nothing but repeat no work
//! within one value's lifetime.  Since reduced bases are canonical, ideal
//! equality is Groebner-basis equality under any fixed order.
//!
//! Intersections and colon ideals go through a tag variable `t`: the ideal
//! `t*I + (1-t)*J` contracts to `I` intersect `J` once `t` is eliminated, and
//! `I : f` is the intersection with `(f)` divided by `f`.

use crate::field::Field;
use crate::groebner::{exact_div, normal_form, reduced_groebner_basis};
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::parse::{parse_polys, ParseError};
use crate::poly::MultiPoly;
use crate::ring::{assert_same_ring, BlockRing, RingRef};
use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use spin::Mutex;

pub struct Ideal<F: Field> {
    ring: RingRef<F>,
    gens: Vec<MultiPoly<F>>,
    cache: Mutex<BTreeMap<TermOrder, Arc<Vec<MultiPoly<F>>>>>,
}

impl<F: Field> Clone for Ideal<F> {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().clone();
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache: Mutex::new(cache) }
    }
}

impl<F: Field> fmt::Debug for Ideal<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Ideal").field("gens", &self.gens).finish()
    }
}

impl<F: Field> Ideal<F> {
    pub fn new(ring: RingRef<F>, gens: Vec<MultiPoly<F>>) -> Self {
        let gens: Vec<MultiPoly<F>> = gens
            .into_iter()
            .inspect(|g| assert_same_ring(&ring, g.ring()))
            .filter(|g| !g.is_zero())
            .collect();
        Ideal { ring, gens, cache: Mutex::new(BTreeMap::new()) }
    }

    pub fn zero(ring: RingRef<F>) -> Self {
        Ideal::new(ring, Vec::new())
    }

    /// Parses a `,`/`;`/newline separated generator list.
    pub fn parse(ring: &RingRef<F>, input: &str) -> Result<Self, ParseError> {
        Ok(Ideal::new(ring.clone(), parse_polys(ring, input)?))
    }

    pub fn ring(&self) -> &RingRef<F> {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly<F>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Every generator multigraded-homogeneous.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(MultiPoly::is_homogeneous)
    }

    /// The reduced Groebner basis under `ord`, computed once per order.
    pub fn groebner_basis(&self, ord: &TermOrder) -> Arc<Vec<MultiPoly<F>>> {
        assert_eq!(ord.num_vars(), self.ring.num_vars(), "order/ring size mismatch");
        if let Some(gb) = self.cache.lock().get(ord) {
            return gb.clone();
        }
        let gb = Arc::new(reduced_groebner_basis(&self.ring, &self.gens, ord));
        self.cache.lock().entry(ord.clone()).or_insert_with(|| gb.clone());
        gb
    }

    /// Leading-term ideal under `ord`.
    pub fn initial_ideal(&self, ord: &TermOrder) -> MonomialIdeal {
        let gb = self.groebner_basis(ord);
        let leads: Vec<Monomial> = gb
            .iter()
            .map(|g| g.lead(ord).expect("zero in reduced basis").0.clone())
            .collect();
        MonomialIdeal::new(self.ring.shape().clone(), leads)
    }

    pub fn normal_form(&self, f: &MultiPoly<F>, ord: &TermOrder) -> MultiPoly<F> {
        assert_same_ring(&self.ring, f.ring());
        let gb = self.groebner_basis(ord);
        normal_form(f, &gb, ord)
    }

    pub fn contains(&self, f: &MultiPoly<F>) -> bool {
        let ambient = TermOrder::ambient(self.ring.num_vars());
        self.normal_form(f, &ambient).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal<F>) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn equals(&self, other: &Ideal<F>) -> bool {
        assert_same_ring(&self.ring, &other.ring);
        let ambient = TermOrder::ambient(self.ring.num_vars());
        self.groebner_basis(&ambient) == other.groebner_basis(&ambient)
    }

    pub fn is_unit(&self) -> bool {
        self.contains(&MultiPoly::one(self.ring.clone()))
    }

    pub fn sum(&self, other: &Ideal<F>) -> Ideal<F> {
        assert_same_ring(&self.ring, &other.ring);
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn sum_all(ring: &RingRef<F>, ideals: &[Ideal<F>]) -> Ideal<F> {
        let mut gens = Vec::new();
        for i in ideals {
            assert_same_ring(ring, &i.ring);
            gens.extend(i.gens.iter().cloned());
        }
        Ideal::new(ring.clone(), gens)
    }

    /// Height of the ideal, read off any initial ideal.
    pub fn codimension(&self) -> usize {
        self.initial_ideal(&TermOrder::ambient(self.ring.num_vars())).codimension()
    }

    pub fn dimension(&self) -> i64 {
        self.ring.num_vars() as i64 - self.codimension() as i64
    }

    /// Contraction to the subring avoiding `vars`: generators of the ideal
    /// of polynomials in `I` not involving any of `vars`, still presented in
    /// the full ring.
    pub fn eliminate(&self, vars: &[usize]) -> Ideal<F> {
        if vars.is_empty() {
            return self.clone();
        }
        let ord = TermOrder::elim(self.ring.num_vars(), vars);
        let gb = self.groebner_basis(&ord);
        let kept: Vec<MultiPoly<F>> = gb
            .iter()
            .filter(|g| g.avoids_vars(vars))
            .cloned()
            .collect();
        Ideal::new(self.ring.clone(), kept)
    }

    pub fn intersect(&self, other: &Ideal<F>) -> Ideal<F> {
        assert_same_ring(&self.ring, &other.ring);
        if self.is_zero() || other.is_zero() {
            return Ideal::zero(self.ring.clone());
        }
        let ext = self.extended_ring();
        let t = ext.num_vars() - 1;
        let tp = MultiPoly::var(ext.clone(), t);
        let one_minus_t = MultiPoly::one(ext.clone()).sub(&tp);
        let mut gens: Vec<MultiPoly<F>> = Vec::new();
        for g in &self.gens {
            gens.push(extend_poly(g, &ext).mul(&tp));
        }
        for h in &other.gens {
            gens.push(extend_poly(h, &ext).mul(&one_minus_t));
        }
        let mixed = Ideal::new(ext, gens);
        let contracted = mixed.eliminate(&[t]);
        let back: Vec<MultiPoly<F>> = contracted
            .gens
            .iter()
            .map(|g| restrict_poly(g, &self.ring))
            .collect();
        Ideal::new(self.ring.clone(), back)
    }

    pub fn intersect_all(ring: &RingRef<F>, ideals: &[Ideal<F>]) -> Ideal<F> {
        match ideals.split_first() {
            None => Ideal::new(ring.clone(), vec![MultiPoly::one(ring.clone())]),
            Some((first, rest)) => {
                let mut acc = first.clone();
                for i in rest {
                    acc = acc.intersect(i);
                }
                acc
            }
        }
    }

    /// `I : f`, the transporter of `f` into the ideal.
    pub fn colon_poly(&self, f: &MultiPoly<F>) -> Ideal<F> {
        assert_same_ring(&self.ring, f.ring());
        if f.is_zero() {
            return Ideal::new(self.ring.clone(), vec![MultiPoly::one(self.ring.clone())]);
        }
        let principal = Ideal::new(self.ring.clone(), vec![f.clone()]);
        let meet = self.intersect(&principal);
        let gens: Vec<MultiPoly<F>> = meet
            .gens
            .iter()
            .map(|g| exact_div(g, f).expect("intersection element not divisible"))
            .collect();
        Ideal::new(self.ring.clone(), gens)
    }

    /// `I : J` as the intersection of the `I : g` over generators `g` of `J`.
    pub fn colon_ideal(&self, other: &Ideal<F>) -> Ideal<F> {
        assert_same_ring(&self.ring, &other.ring);
        let colons: Vec<Ideal<F>> = other.gens.iter().map(|g| self.colon_poly(g)).collect();
        Ideal::intersect_all(&self.ring, &colons)
    }

    /// `I : f^infinity` together with the number of strict colon steps (the
    /// saturation index; `0` when `I` is already saturated).
    pub fn saturate_poly(&self, f: &MultiPoly<F>) -> (Ideal<F>, usize) {
        let mut cur = self.clone();
        let mut rounds = 0usize;
        loop {
            let next = cur.colon_poly(f);
            if cur.contains_ideal(&next) {
                return (cur, rounds);
            }
            cur = next;
            rounds += 1;
        }
    }

    /// Relabels variables within the same shape; `perm[v]` is the source
    /// position for `v`.
    pub fn permute_vars(&self, perm: &[usize]) -> Ideal<F> {
        let gens = self.gens.iter().map(|g| g.permute_vars(perm)).collect();
        Ideal::new(self.ring.clone(), gens)
    }

    fn extended_ring(&self) -> RingRef<F> {
        let shape = self.ring.shape().with_tag_block();
        BlockRing::with_shape(self.ring.field().clone(), shape)
    }
}

/// Reinterprets `f` in `ext`, which must extend `f`'s ring by trailing
/// variables.
pub fn extend_poly<F: Field>(f: &MultiPoly<F>, ext: &RingRef<F>) -> MultiPoly<F> {
    let n = f.ring().num_vars();
    let m = ext.num_vars();
    assert!(m >= n, "target ring too small");
    let terms = f
        .terms()
        .map(|(mono, c)| {
            let mut exps = mono.exps().to_vec();
            exps.resize(m, 0);
            (Monomial::from_exps(exps), c.clone())
        })
        .collect();
    MultiPoly::from_terms(ext.clone(), terms)
}

/// Inverse of [`extend_poly`]; panics if `f` touches a dropped variable.
pub fn restrict_poly<F: Field>(f: &MultiPoly<F>, ring: &RingRef<F>) -> MultiPoly<F> {
    let n = ring.num_vars();
    let terms = f
        .terms()
        .map(|(mono, c)| {
            assert!(
                mono.exps()[n..].iter().all(|&e| e == 0),
                "polynomial leaves the subring"
            );
            (Monomial::from_exps(mono.exps()[..n].to_vec()), c.clone())
        })
        .collect();
    MultiPoly::from_terms(ring.clone(), terms)
}
