//! Buchberger's algorithm and polynomial division.
//!
//! The engine computes the unique reduced Groebner basis: monic generators,
//! no leading term dividing another, every tail fully reduced, sorted
//! ascending under the working order.  S-pairs are processed by normal
//! selection (smallest lcm under the ambient grading), and the classical
//! pruning rules are applied: pairs with coprime leading terms reduce to
//! zero, and a pair is dropped when a third basis element divides its lcm
//! and both companion pairs have already been treated.
//!
//! Generators need not be homogeneous; termination relies only on Dickson's
//! lemma, so the same engine serves the tag-variable encodings used for
//! intersections, colon ideals, and saturation.

use crate::field::Field;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use crate::poly::MultiPoly;
use crate::ring::RingRef;
use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::cmp::Ordering;

/// Key ordering S-pairs: ambient-graded comparison of the lcm, with the pair
/// indices as a deterministic tiebreak.
#[derive(Clone, Debug, PartialEq, Eq)]
struct PairKey {
    lcm: Monomial,
    i: usize,
    j: usize,
}

fn ambient_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for v in (0..a.num_vars()).rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => {}
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        ambient_cmp(&self.lcm, &other.lcm)
            .then(self.i.cmp(&other.i))
            .then(self.j.cmp(&other.j))
    }
}
impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Fully reduces `f` modulo `basis`: no term of the result is divisible by
/// any basis leading term.
pub fn normal_form<F: Field>(
    f: &MultiPoly<F>,
    basis: &[MultiPoly<F>],
    ord: &TermOrder,
) -> MultiPoly<F> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let leads: Vec<(Monomial, F::Elem)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.lead(ord).expect("zero polynomial in basis");
            (m.clone(), c.clone())
        })
        .collect();

    let mut rest = f.clone();
    let mut done: Vec<(Monomial, F::Elem)> = Vec::new();
    'outer: while let Some((lm, lc)) = rest.lead(ord).map(|(m, c)| (m.clone(), c.clone())) {
        for (g, (gm, gc)) in basis.iter().zip(&leads) {
            if gm.divides(&lm) {
                let factor = field.div(&lc, gc);
                let shift = lm.try_div(gm).unwrap();
                rest = rest.sub(&g.mul_term(&shift, &factor));
                continue 'outer;
            }
        }
        // Head is irreducible; move it out.  Heads strictly decrease, so the
        // loop terminates and `done` collects a fully reduced polynomial.
        done.push((lm.clone(), lc.clone()));
        rest = rest.sub(&MultiPoly::monomial(ring.clone(), lm, lc));
    }
    done.extend(rest.terms().map(|(m, c)| (m.clone(), c.clone())));
    MultiPoly::from_terms(ring, done)
}

fn s_poly<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>, ord: &TermOrder) -> MultiPoly<F> {
    let field = f.ring().field().clone();
    let (fm, fc) = f.lead(ord).unwrap();
    let (gm, gc) = g.lead(ord).unwrap();
    let lcm = fm.lcm(gm);
    let a = f.mul_term(&lcm.try_div(fm).unwrap(), &field.inv(fc));
    let b = g.mul_term(&lcm.try_div(gm).unwrap(), &field.inv(gc));
    a.sub(&b)
}

/// The reduced Groebner basis of the ideal generated by `gens` under `ord`.
pub fn reduced_groebner_basis<F: Field>(
    ring: &RingRef<F>,
    gens: &[MultiPoly<F>],
    ord: &TermOrder,
) -> Vec<MultiPoly<F>> {
    let mut basis: Vec<MultiPoly<F>> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(ord))
        .collect();
    let mut leads: Vec<Monomial> = basis
        .iter()
        .map(|g| g.lead(ord).unwrap().0.clone())
        .collect();

    let mut queue: BTreeSet<PairKey> = BTreeSet::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            queue.insert(PairKey { lcm: leads[i].lcm(&leads[j]), i, j });
            pending.insert((i, j));
        }
    }

    while let Some(key) = queue.pop_first() {
        let (i, j) = (key.i, key.j);
        pending.remove(&(i, j));

        if leads[i].is_coprime_with(&leads[j]) {
            continue;
        }
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && leads[k].divides(&key.lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }

        let h = normal_form(&s_poly(&basis[i], &basis[j], ord), &basis, ord);
        if h.is_zero() {
            continue;
        }
        let h = h.monic(ord);
        let t = basis.len();
        let ht = h.lead(ord).unwrap().0.clone();
        for s in 0..t {
            queue.insert(PairKey { lcm: leads[s].lcm(&ht), i: s, j: t });
            pending.insert((s, t));
        }
        basis.push(h);
        leads.push(ht);
    }

    reduce_basis(ring, basis, ord)
}

/// Minimalizes and autoreduces a Groebner basis into the reduced basis.
fn reduce_basis<F: Field>(
    ring: &RingRef<F>,
    basis: Vec<MultiPoly<F>>,
    ord: &TermOrder,
) -> Vec<MultiPoly<F>> {
    let mut sorted = basis;
    sorted.sort_by(|a, b| ord.cmp(a.lead(ord).unwrap().0, b.lead(ord).unwrap().0));
    let mut kept: Vec<MultiPoly<F>> = Vec::new();
    for g in sorted {
        let gm = g.lead(ord).unwrap().0.clone();
        if !kept.iter().any(|h| h.lead(ord).unwrap().0.divides(&gm)) {
            kept.push(g);
        }
    }
    loop {
        let mut changed = false;
        for idx in 0..kept.len() {
            let f = kept[idx].clone();
            let others: Vec<MultiPoly<F>> = kept
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != idx)
                .map(|(_, g)| g.clone())
                .collect();
            let reduced = normal_form(&f, &others, ord).monic(ord);
            if reduced != kept[idx] {
                kept[idx] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.sort_by(|a, b| ord.cmp(a.lead(ord).unwrap().0, b.lead(ord).unwrap().0));
    debug_assert!(kept.iter().all(|g| !g.is_zero()));
    let _ = ring;
    kept
}

/// Checks the Buchberger criterion exhaustively: every S-polynomial of
/// `basis` reduces to zero.  Intended for tests and certification runs.
pub fn verify_groebner<F: Field>(basis: &[MultiPoly<F>], ord: &TermOrder) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_poly(&basis[i], &basis[j], ord);
            if !normal_form(&s, basis, ord).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Exact division: returns `f / g` when `g` divides `f` in the polynomial
/// ring, `None` otherwise.
pub fn exact_div<F: Field>(f: &MultiPoly<F>, g: &MultiPoly<F>) -> Option<MultiPoly<F>> {
    assert!(!g.is_zero(), "division by zero polynomial");
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let ord = TermOrder::ambient(ring.num_vars());
    let (gm, gc) = g.lead(&ord).map(|(m, c)| (m.clone(), c.clone())).unwrap();
    let mut rest = f.clone();
    let mut quot: Vec<(Monomial, F::Elem)> = Vec::new();
    while let Some((lm, lc)) = rest.lead(&ord).map(|(m, c)| (m.clone(), c.clone())) {
        let shift = lm.try_div(&gm)?;
        let factor = field.div(&lc, &gc);
        quot.push((shift.clone(), factor.clone()));
        rest = rest.sub(&g.mul_term(&shift, &factor));
    }
    Some(MultiPoly::from_terms(ring, quot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;
    use crate::parse::parse_polys;
    use crate::ring::BlockRing;
    use alloc::format;
    use alloc::vec;

    #[test]
    fn principal_ideal_basis_is_generator() {
        let r = BlockRing::new(Rationals, &[3]);
        let gens = parse_polys(&r, "2*x1_1^2 - 2*x1_2*x1_3").unwrap();
        let ord = TermOrder::ambient(3);
        let gb = reduced_groebner_basis(&r, &gens, &ord);
        assert_eq!(gb.len(), 1);
        assert_eq!(format!("{}", gb[0]), "x1_1^2 - x1_2*x1_3");
        assert!(verify_groebner(&gb, &ord));
    }

    #[test]
    fn two_by_three_minors_are_a_diagonal_basis() {
        // The 2-minors of a generic 2x3 matrix form a Groebner basis when
        // the order picks the main diagonals as leading terms.
        let shape = crate::ring::BlockShape::new(&[3, 3]).with_aliases(&[
            (0, "x1"),
            (1, "x2"),
            (2, "x3"),
            (3, "y1"),
            (4, "y2"),
            (5, "y3"),
        ]);
        let r = BlockRing::with_shape(Rationals, shape);
        let gens = parse_polys(&r, "x1*y2 - x2*y1, x1*y3 - x3*y1, x2*y3 - x3*y2").unwrap();
        // grevlex with the y block leading selects x_i*y_j (i < j).
        let ord = TermOrder::grevlex_permuted(6, vec![3, 4, 5, 0, 1, 2]);
        let gb = reduced_groebner_basis(&r, &gens, &ord);
        assert_eq!(gb.len(), 3);
        for g in &gb {
            assert!(gens.contains(&g.monic(&ord)) || gens.iter().any(|h| h == g));
        }
        assert!(verify_groebner(&gb, &ord));
    }

    #[test]
    fn reduction_is_canonical() {
        let r = BlockRing::new(Rationals, &[3]);
        let gens = parse_polys(&r, "x1_1 - x1_2, x1_2 - x1_3").unwrap();
        let ord = TermOrder::lex(3);
        let gb = reduced_groebner_basis(&r, &gens, &ord);
        // Reduced basis: x1_1 - x1_3, x1_2 - x1_3.
        assert_eq!(gb.len(), 2);
        assert!(gb.iter().all(|g| g.num_terms() == 2));
        let f = parse_polys(&r, "x1_1^2").unwrap().remove(0);
        let nf = normal_form(&f, &gb, &ord);
        assert_eq!(format!("{nf}"), "x1_3^2");
    }

    #[test]
    fn idempotence_on_reduced_basis() {
        let r = BlockRing::new(Rationals, &[2, 2]);
        let gens = parse_polys(&r, "x1_1*x2_1 + x1_2*x2_2, x1_2*x2_1").unwrap();
        let ord = TermOrder::ambient(4);
        let gb = reduced_groebner_basis(&r, &gens, &ord);
        let again = reduced_groebner_basis(&r, &gb, &ord);
        assert_eq!(gb, again);
    }

    #[test]
    fn exact_division() {
        let r = BlockRing::new(Rationals, &[2]);
        let polys = parse_polys(&r, "x1_1^2 - x1_2^2, x1_1 - x1_2, x1_1 + x1_2").unwrap();
        let q = exact_div(&polys[0], &polys[1]).unwrap();
        assert_eq!(q, polys[2]);
        assert!(exact_div(&polys[1], &polys[0]).is_none());
    }
}
