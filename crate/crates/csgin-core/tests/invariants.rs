//! Cross-checks tying the Groebner engine, the Hilbert-series machinery,
//! and the homological side together on randomized inputs.

use csgin_core::closure::LinearSpace;
use csgin_core::edge::{binomial_edge_ideal, edge_ring, path_gin, Graph};
use csgin_core::field::{Field, PrimeField};
use csgin_core::groebner::verify_groebner;
use csgin_core::hilbert::k_polynomial;
use csgin_core::homology::{
    betti_squarefree, betti_squarefree_direct, conjecture_check_monomial, k_polynomial_from_betti,
};
use csgin_core::ideal::Ideal;
use csgin_core::monideal::MonomialIdeal;
use csgin_core::monomial::Monomial;
use csgin_core::order::TermOrder;
use csgin_core::poly::MultiPoly;
use csgin_core::ring::{BlockRing, BlockShape, RingRef};
use csgin_core::rng::SplitMix64;

fn random_ring(rng: &mut SplitMix64) -> RingRef<PrimeField> {
    let f = PrimeField::default_prime();
    loop {
        let u = 1 + rng.next_below(3) as usize;
        let sizes: Vec<u32> = (0..u).map(|_| 1 + rng.next_below(3) as u32).collect();
        if sizes.iter().sum::<u32>() <= 6 {
            return BlockRing::new(f, &sizes);
        }
    }
}

fn random_monomial(ring: &RingRef<PrimeField>, w: &[u32], rng: &mut SplitMix64) -> Monomial {
    let shape = ring.shape();
    let mut exps = vec![0u32; shape.num_vars()];
    for (b, &wb) in w.iter().enumerate() {
        for _ in 0..wb {
            let k = rng.next_below(shape.block_sizes()[b] as u64) as usize;
            exps[shape.var(b, k)] += 1;
        }
    }
    Monomial::from_exps(exps)
}

fn random_linear_form(
    ring: &RingRef<PrimeField>,
    block: usize,
    rng: &mut SplitMix64,
) -> MultiPoly<PrimeField> {
    let f = ring.field().clone();
    let shape = ring.shape();
    let mut form = MultiPoly::zero(ring.clone());
    for k in 0..shape.block_sizes()[block] as usize {
        let c = f.sample(rng);
        form = form.add(&MultiPoly::var(ring.clone(), shape.var(block, k)).scale(&c));
    }
    if form.is_zero() {
        form = MultiPoly::var(ring.clone(), shape.var(block, 0));
    }
    form
}

/// A small ideal whose generators are multigraded: products of graded
/// linear forms and binomials with matched block degree.
fn random_multigraded_ideal(seed: u64) -> Ideal<PrimeField> {
    let mut rng = SplitMix64::new(seed);
    let ring = random_ring(&mut rng);
    let shape = ring.shape().clone();
    let f = ring.field().clone();
    let u = shape.num_blocks();
    let mut gens = Vec::new();
    for _ in 0..1 + rng.next_below(3) {
        if rng.next_below(2) == 0 {
            let mut g = random_linear_form(&ring, rng.next_below(u as u64) as usize, &mut rng);
            if rng.next_below(2) == 0 {
                g = g.mul(&random_linear_form(
                    &ring,
                    rng.next_below(u as u64) as usize,
                    &mut rng,
                ));
            }
            gens.push(g);
        } else {
            let w: Vec<u32> = (0..u).map(|_| rng.next_below(2) as u32 + 1).collect();
            let m1 = random_monomial(&ring, &w, &mut rng);
            let m2 = random_monomial(&ring, &w, &mut rng);
            let c = f.sample(&mut rng);
            let g = MultiPoly::from_terms(ring.clone(), vec![(m1, f.one()), (m2, f.neg(&c))]);
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    Ideal::new(ring, gens)
}

fn random_squarefree_ideal(seed: u64) -> MonomialIdeal {
    let mut rng = SplitMix64::new(seed);
    let n = 4 + rng.next_below(3) as usize;
    let shape = BlockShape::new(&vec![1; n]);
    let mut gens = Vec::new();
    for _ in 0..2 + rng.next_below(3) {
        let exps: Vec<u32> = (0..n).map(|_| rng.next_below(2) as u32).collect();
        if exps.iter().any(|&e| e == 1) && exps.iter().any(|&e| e == 0) {
            gens.push(Monomial::from_exps(exps));
        }
    }
    if gens.is_empty() {
        let mut exps = vec![0; n];
        exps[0] = 1;
        gens.push(Monomial::from_exps(exps));
    }
    MonomialIdeal::new(shape, gens)
}

/// Re-grades a monomial ideal with one block per variable.
fn fine(j: &MonomialIdeal) -> MonomialIdeal {
    let shape = BlockShape::new(&vec![1; j.num_vars()]);
    MonomialIdeal::new(shape, j.gens().to_vec())
}

#[test]
fn hilbert_numerator_ignores_the_term_order() {
    let mut rng = SplitMix64::new(0xfeed);
    for seed in 0..20 {
        let i = random_multigraded_ideal(seed);
        let n = i.ring().shape().num_vars();
        let reference = k_polynomial(&i.initial_ideal(&TermOrder::ambient(n)));
        for ord in [
            TermOrder::lex(n),
            TermOrder::random(n, &mut rng),
            TermOrder::random(n, &mut rng),
        ] {
            assert_eq!(reference, k_polynomial(&i.initial_ideal(&ord)), "seed {seed}");
        }
    }
}

#[test]
fn hilbert_numerator_on_edge_and_closure_instances() {
    let f = PrimeField::default_prime();
    let mut rng = SplitMix64::new(0xbeef);
    let mut check = |i: &Ideal<PrimeField>, tag: &str| {
        let n = i.ring().shape().num_vars();
        let reference = k_polynomial(&i.initial_ideal(&TermOrder::ambient(n)));
        for ord in [TermOrder::lex(n), TermOrder::random(n, &mut rng)] {
            assert_eq!(reference, k_polynomial(&i.initial_ideal(&ord)), "{tag}");
        }
    };
    for g in [Graph::path(4), Graph::cycle(4), Graph::complete(4), Graph::star(3)] {
        let ring = edge_ring(f, g.num_vertices());
        check(&binomial_edge_ideal(&ring, &g), &format!("{g}"));
    }
    for seed in 0..6 {
        let mut rng2 = SplitMix64::new(400 + seed);
        let space = loop {
            let sizes: Vec<u32> = (0..2).map(|_| 1 + rng2.next_below(2) as u32).collect();
            let n: usize = sizes.iter().map(|&a| a as usize).sum();
            let v = 1 + rng2.next_below(n as u64 - 1) as usize;
            let rows: Vec<Vec<u64>> = (0..v)
                .map(|_| (0..n).map(|_| f.sample(&mut rng2)).collect())
                .collect();
            if let Ok(s) = LinearSpace::new(f, &sizes, rows) {
                break s;
            }
        };
        check(&space.jhom_saturation(), &format!("space {seed}"));
    }
}

#[test]
fn computed_bases_pass_the_s_pair_criterion() {
    let mut rng = SplitMix64::new(0xcafe);
    for seed in 0..12 {
        let i = random_multigraded_ideal(seed);
        let n = i.ring().shape().num_vars();
        for ord in [TermOrder::ambient(n), TermOrder::random(n, &mut rng)] {
            let basis = i.groebner_basis(&ord);
            assert!(verify_groebner(&basis, &ord), "seed {seed}");
        }
    }
}

#[test]
fn colon_and_saturation_are_sandwiched() {
    let mut rng = SplitMix64::new(0xd00d);
    for seed in 20..30 {
        let i = random_multigraded_ideal(seed);
        let ring = i.ring().clone();
        let u = ring.shape().num_blocks();
        let f = random_linear_form(&ring, rng.next_below(u as u64) as usize, &mut rng);
        let colon = i.colon_poly(&f);
        let (sat, _) = i.saturate_poly(&f);
        assert!(colon.contains_ideal(&i), "seed {seed}");
        assert!(sat.contains_ideal(&colon), "seed {seed}");
        for g in colon.gens() {
            assert!(i.contains(&g.mul(&f)), "seed {seed}");
        }
    }
}

#[test]
fn cohomology_tables_survive_the_gin() {
    let f = PrimeField::default_prime();
    let mut rng = SplitMix64::new(0x5eed);
    let check = |j: &MonomialIdeal, tag: &str| {
        let report = conjecture_check_monomial(&f, j, &[]).unwrap();
        assert!(report.holds(), "{tag}: {:?}", report.mismatches);
    };

    // Borel-fixed representatives: the gin equals the ideal itself.
    check(&path_gin(&Graph::path(4)), "P4 gin");

    // In-coordinate initial ideals: squarefree and Cartwright-Sturmfels
    // but not Borel-fixed, so the comparison is between genuinely
    // different resolutions.
    for g in [Graph::path(4), Graph::cycle(4), Graph::star(3)] {
        let ring = edge_ring(f, g.num_vertices());
        let j = binomial_edge_ideal(&ring, &g);
        let n = 2 * g.num_vertices();
        check(&j.initial_ideal(&TermOrder::ambient(n)), &format!("{g} ambient"));
    }
    {
        let ring = edge_ring(f, 3);
        let j = binomial_edge_ideal(&ring, &Graph::path(3));
        let ord = TermOrder::random(6, &mut rng);
        check(&j.initial_ideal(&ord), "P3 random order");
    }

    // A closure instance, both the matroid gin and an in-coordinate
    // initial ideal.
    let space = LinearSpace::from_i64(
        f,
        &[2, 1, 2],
        &[&[1, 0, 2, 1, 0], &[0, 1, 1, 0, 3]],
    )
    .unwrap();
    check(&space.gin_from_degrees(), "closure gin");
    let jhom = space.jhom_saturation();
    check(&jhom.initial_ideal(&TermOrder::ambient(8)), "closure ambient");
}

#[test]
fn betti_alternating_sum_gives_the_hilbert_numerator() {
    let f = PrimeField::default_prime();
    let mut instances = vec![
        fine(&path_gin(&Graph::path(3))),
        fine(&path_gin(&Graph::cycle(4))),
    ];
    for seed in 40..46 {
        instances.push(random_squarefree_ideal(seed));
    }
    for j in &instances {
        let table = betti_squarefree(&f, j);
        assert_eq!(k_polynomial_from_betti(&table), k_polynomial(j), "{j}");
    }
}

#[test]
fn alexander_duality_is_an_involution() {
    for seed in 50..65 {
        let j = random_squarefree_ideal(seed);
        assert_eq!(j.alexander_dual().alexander_dual(), j, "seed {seed}");
    }
}

#[test]
fn hochster_routes_compute_the_same_betti_table() {
    let f = PrimeField::default_prime();
    for seed in 70..80 {
        let j = random_squarefree_ideal(seed);
        assert_eq!(
            betti_squarefree(&f, &j),
            betti_squarefree_direct(&f, &j),
            "seed {seed}"
        );
    }
}
