//! Randomized checks for multigraded closures of linear spaces: the two
//! homogenization routes, the matroid description of the multidegree, and
//! the structure of the generic initial ideal.

use csgin_core::closure::{maximal_minors, LinearSpace};
use csgin_core::field::{Field, PrimeField};
use csgin_core::gin::{gin, is_cs_star, DEFAULT_SEEDS};
use csgin_core::hilbert::multidegree;
use csgin_core::homology::reisner_cm;
use csgin_core::ideal::Ideal;
use csgin_core::order::TermOrder;
use csgin_core::parse::parse_poly;
use csgin_core::poly::MultiPoly;
use csgin_core::rng::SplitMix64;

use std::collections::BTreeSet;

fn random_space(seed: u64, fine: bool) -> LinearSpace<PrimeField> {
    let f = PrimeField::default_prime();
    let mut rng = SplitMix64::new(seed);
    loop {
        let u = if fine {
            2 + rng.next_below(3) as usize
        } else {
            1 + rng.next_below(3) as usize
        };
        let sizes: Vec<u32> = if fine {
            vec![1; u]
        } else {
            (0..u).map(|_| 1 + rng.next_below(3) as u32).collect()
        };
        let n: usize = sizes.iter().map(|&a| a as usize).sum();
        if n > 6 {
            continue;
        }
        let v = 1 + rng.next_below(n.min(3) as u64) as usize;
        let rows: Vec<Vec<u64>> = (0..v)
            .map(|_| (0..n).map(|_| f.sample(&mut rng)).collect())
            .collect();
        if let Ok(space) = LinearSpace::new(f, &sizes, rows) {
            return space;
        }
    }
}

fn y_product(space: &LinearSpace<PrimeField>) -> MultiPoly<PrimeField> {
    let ring = space.ring();
    let mut f = MultiPoly::one(ring.clone());
    for b in 1..=space.num_blocks() {
        f = f.mul(&parse_poly(&ring, &format!("y{b}")).unwrap());
    }
    f
}

#[test]
fn homogenization_routes_agree() {
    for seed in 0..20 {
        let space = random_space(seed, false);
        let jhom = space.jhom_saturation();
        assert!(jhom.equals(&space.jhom_determinantal()), "seed {seed}");

        // Contraction to the form variables, once as a minor sum and once
        // by elimination of the homogenizing block.
        let shape = space.shape();
        let ys: Vec<usize> = (0..space.num_blocks())
            .map(|b| shape.block_start(b) + shape.block_sizes()[b] as usize - 1)
            .collect();
        assert!(space.jstar().equals(&jhom.eliminate(&ys)), "seed {seed}");
    }
}

#[test]
fn single_colon_already_saturates() {
    for seed in 0..20 {
        let space = random_space(seed, false);
        let ring = space.ring();
        let all: BTreeSet<usize> = (1..=space.num_blocks()).collect();
        let minors = Ideal::new(
            ring.clone(),
            maximal_minors(&ring, &space.x_matrix(&ring, &all)),
        );
        let f = y_product(&space);
        let (saturated, steps) = minors.saturate_poly(&f);
        assert!(steps <= 1, "seed {seed}: saturation took {steps} colons");
        assert!(saturated.equals(&minors.colon_poly(&f)), "seed {seed}");
    }
}

#[test]
fn gin_reads_off_the_matroid() {
    for seed in 0..20 {
        let space = random_space(seed, false);
        let jhom = space.jhom_saturation();
        let n = space.num_forms_vars() + space.num_blocks();
        let g = gin(&jhom, &TermOrder::ambient(n), &DEFAULT_SEEDS).unwrap();
        assert!(g.borel_certified, "seed {seed}");
        assert!(g.gin.is_squarefree(), "seed {seed}");
        assert_eq!(g.gin, space.gin_from_degrees(), "seed {seed}");
        assert!(reisner_cm(space.field(), &g.gin), "seed {seed}");

        let init = jhom.initial_ideal(&TermOrder::ambient(n));
        assert_eq!(
            multidegree(&init),
            space.multidegree_matroid(),
            "seed {seed}"
        );
    }
}

#[test]
fn matroid_bases_satisfy_exchange() {
    for seed in 0..20 {
        let space = random_space(seed, false);
        let bases = space.matroid_bases();
        if space.dim() == 0 {
            assert_eq!(bases, vec![BTreeSet::new()]);
            continue;
        }
        for a in &bases {
            for b in &bases {
                for &x in a.difference(b) {
                    // Basis exchange: removing x from a is fixed up by some
                    // element of b.
                    let found = b.difference(a).any(|&y| {
                        let mut c = a.clone();
                        c.remove(&x);
                        c.insert(y);
                        bases.contains(&c)
                    });
                    assert!(found, "seed {seed}: exchange fails for {a:?} {b:?} at {x}");
                }
            }
        }
    }
}

#[test]
fn fine_gradings_are_cs_star() {
    for seed in 100..110 {
        let space = random_space(seed, true);
        let jhom = space.jhom_saturation();
        assert!(is_cs_star(&jhom, &DEFAULT_SEEDS).unwrap(), "seed {seed}");
    }
}

#[test]
fn colon_by_a_product_of_forms_adds_only_small_degrees() {
    let f = PrimeField::default_prime();
    for seed in 200..210 {
        let space = random_space(seed, false);
        let ring = space.ring();
        let shape = space.shape();
        let j = space.jhom_saturation();
        let mut rng = SplitMix64::new(seed ^ 0xabcdef);

        // A product of one or two random linear forms, each graded with
        // respect to one block.
        let mut prod = MultiPoly::one(ring.clone());
        for _ in 0..1 + rng.next_below(2) {
            let b = rng.next_below(space.num_blocks() as u64) as usize;
            let mut form = MultiPoly::zero(ring.clone());
            for k in 0..shape.block_sizes()[b] as usize {
                let c = f.sample(&mut rng);
                let v = MultiPoly::var(ring.clone(), shape.var(b, k));
                form = form.add(&v.scale(&c));
            }
            if form.is_zero() {
                form = MultiPoly::var(ring.clone(), shape.var(b, 0));
            }
            prod = prod.mul(&form);
        }

        let colon = j.colon_poly(&prod);
        let ones = vec![1u32; space.num_blocks()];
        let small: Vec<MultiPoly<PrimeField>> = colon
            .gens()
            .iter()
            .filter(|g| {
                let deg = g.block_degree().expect("colon of a multigraded ideal");
                deg != ones && deg.iter().zip(ones.iter()).all(|(a, b)| a <= b)
            })
            .cloned()
            .collect();
        let rebuilt = j.sum(&Ideal::new(ring.clone(), small));
        assert!(colon.equals(&rebuilt), "seed {seed}");
    }
}

#[test]
fn colon_and_saturation_sandwich() {
    for seed in 300..310 {
        let space = random_space(seed, false);
        let j = space.jhom_saturation();
        let f = y_product(&space);
        let colon = j.colon_poly(&f);
        let (sat, _) = j.saturate_poly(&f);
        assert!(colon.contains_ideal(&j), "seed {seed}");
        assert!(sat.contains_ideal(&colon), "seed {seed}");
        for g in colon.gens() {
            assert!(j.contains(&g.mul(&f)), "seed {seed}");
        }
    }
}
