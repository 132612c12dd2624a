//! The full verification suite: worked-example replays, randomized theorem
//! suites, and cross-formula property checks.
//!
//! Each item is a pure function from a seed list to a list of verdicts, so
//! the suite can run in parallel and still merge deterministically.

use crate::report::Verdict;

use csgin_core::closure::{maximal_minors, LinearSpace};
use csgin_core::edge::{binomial_edge_ideal, edge_ring, gin_minimal_primes, path_gin, Graph};
use csgin_core::field::{Field, PrimeField, Rationals};
use csgin_core::gin::{gin, is_cs_star};
use csgin_core::hilbert::{g_multidegree, k_polynomial, multidegree, LaurentPoly};
use csgin_core::homology::{
    betti_squarefree, betti_squarefree_direct, conjecture_check_monomial, k_polynomial_from_betti,
    reisner_cm,
};
use csgin_core::ideal::Ideal;
use csgin_core::monideal::{BorelPrime, MonomialIdeal};
use csgin_core::monomial::Monomial;
use csgin_core::multiview::{coordinate_example, generic_minor_ideal, CameraSystem};
use csgin_core::order::TermOrder;
use csgin_core::parse::parse_poly;
use csgin_core::poly::MultiPoly;
use csgin_core::ring::{BlockRing, BlockShape, RingRef};
use csgin_core::rng::SplitMix64;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub struct Check {
    pub name: &'static str,
    pub run: fn(&[u64]) -> Vec<Verdict>,
}

pub fn all_checks() -> Vec<Check> {
    vec![
        Check { name: "grid-gin-replay", run: grid_gin_replay },
        Check { name: "closure-homogenization-replay", run: closure_homogenization_replay },
        Check { name: "closure-matroid-replay", run: closure_matroid_replay },
        Check { name: "edge-corpus-suite", run: edge_corpus_suite },
        Check { name: "closure-random-suite", run: closure_random_suite },
        Check { name: "closure-fine-grading-suite", run: closure_fine_grading_suite },
        Check { name: "multiview-suite", run: multiview_suite },
        Check { name: "cohomology-after-gin-suite", run: cohomology_after_gin_suite },
        Check { name: "cross-formula-suite", run: cross_formula_suite },
    ]
}

/// Runs every check on a small worker pool and returns the outcomes in
/// declaration order regardless of scheduling.
pub fn run_all(seeds: &[u64], threads: usize) -> Vec<(String, Vec<Verdict>)> {
    let checks = all_checks();
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, Vec<Verdict>)>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..threads.max(1).min(checks.len()) {
            scope.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::Relaxed);
                if k >= checks.len() {
                    break;
                }
                let verdicts = (checks[k].run)(seeds);
                results.lock().unwrap().push((k, verdicts));
            });
        }
    });
    let mut out = results.into_inner().unwrap();
    out.sort_by_key(|&(k, _)| k);
    out.into_iter()
        .map(|(k, v)| (checks[k].name.to_string(), v))
        .collect()
}

/// Collects many pass/fail observations under one named verdict, keeping
/// the first failure as the detail.
struct Agg {
    name: &'static str,
    pass: bool,
    detail: Option<String>,
}

impl Agg {
    fn new(name: &'static str) -> Agg {
        Agg { name, pass: true, detail: None }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok && self.pass {
            self.pass = false;
            self.detail = Some(detail());
        }
    }

    fn into_verdict(self) -> Verdict {
        Verdict { check: self.name.to_string(), pass: self.pass, detail: self.detail }
    }
}

fn xy_ring<F: Field>(field: F, n: u32) -> RingRef<F> {
    let shape = BlockShape::new(&[n, n]);
    let renames: Vec<(usize, String)> = (0..n as usize)
        .map(|i| (i, format!("x{}", i + 1)))
        .chain((0..n as usize).map(|i| (n as usize + i, format!("y{}", i + 1))))
        .collect();
    let renames: Vec<(usize, &str)> = renames.iter().map(|(v, s)| (*v, s.as_str())).collect();
    BlockRing::with_shape(field, shape.with_aliases(&renames))
}

fn monomials<F: Field>(ring: &RingRef<F>, text: &[&str]) -> Vec<Monomial> {
    text.iter()
        .map(|s| {
            let p = parse_poly(ring, s).expect("well-formed monomial text");
            p.lead_ambient().expect("nonzero").0.clone()
        })
        .collect()
}

fn connected_graphs(n: usize) -> Vec<Graph> {
    let mut pairs = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            pairs.push((i, j));
        }
    }
    let all: BTreeSet<usize> = (1..=n).collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, &edges).expect("valid corpus edges");
        if g.components(&all).len() == 1 {
            out.push(g);
        }
    }
    out
}

fn graph_corpus() -> Vec<Graph> {
    let mut graphs = Vec::new();
    for n in 2..=4 {
        graphs.extend(connected_graphs(n));
    }
    graphs.push(Graph::path(5));
    graphs.push(Graph::path(6));
    graphs.push(Graph::cycle(5));
    graphs.push(Graph::complete_bipartite(2, 3));
    graphs.push(Graph::star(4));
    graphs
}

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
        f = f.mul(&parse_poly(&ring, &format!("y{b}")).expect("alias exists"));
    }
    f
}

fn example_space<F: Field>(field: F) -> LinearSpace<F> {
    LinearSpace::from_i64(
        field,
        &[2, 1, 3],
        &[
            &[1, 1, 0, 0, 0, 1],
            &[0, 1, -1, 0, 1, 0],
            &[0, 0, 1, 1, 0, 0],
        ],
    )
    .expect("independent rows")
}

const MULTIVIEW_CONFIGS: [(&[usize], usize); 10] = [
    (&[2, 2], 3),
    (&[2, 2], 4),
    (&[1, 2], 3),
    (&[3, 3], 4),
    (&[2, 3], 5),
    (&[2, 2, 2], 4),
    (&[1, 1, 2], 3),
    (&[3, 3, 3], 5),
    (&[2, 2, 3], 5),
    (&[1, 3], 4),
];

pub fn grid_gin_replay(seeds: &[u64]) -> Vec<Verdict> {
    let mut gens_ok = Agg::new("gin-generators");
    let mut mdeg_ok = Agg::new("multidegree-is-the-cube-sum");
    let mut cs_ok = Agg::new("not-cartwright-sturmfels");

    let cubes = LaurentPoly::from_terms(
        2,
        [(vec![3, 0], 1), (vec![2, 1], 1), (vec![1, 2], 1), (vec![0, 3], 1)],
    );
    let f = PrimeField::default_prime();
    let ring = xy_ring(f, 3);
    let ideal = Ideal::parse(&ring, "x1*y1, x2*y2, x3*y2, x2*y3, x3*y3").expect("grid ideal");
    let expected = MonomialIdeal::new(
        ring.shape().clone(),
        monomials(
            &ring,
            &["x1*y1", "x2*y1", "x1*y2", "x2*y2", "x3*y1", "x1*x2*y3", "x1^2*y3"],
        ),
    );
    match gin(&ideal, &TermOrder::ambient(6), seeds) {
        Ok(g) => {
            gens_ok.check(g.gin == expected, || format!("gin {}", g.gin));
            cs_ok.check(!g.gin.is_squarefree(), || "gin is squarefree".into());
            let m = multidegree(&g.gin);
            mdeg_ok.check(m == cubes, || format!("multidegree {m}"));
            mdeg_ok.check(g_multidegree(&g.gin) == cubes, || "g-multidegree differs".into());
        }
        Err(e) => gens_ok.check(false, || e.to_string()),
    }
    vec![gens_ok.into_verdict(), mdeg_ok.into_verdict(), cs_ok.into_verdict()]
}

pub fn closure_homogenization_replay(_seeds: &[u64]) -> Vec<Verdict> {
    let mut hom_ok = Agg::new("jhom-generators");
    let mut routes_ok = Agg::new("routes-agree");
    let mut star_ok = Agg::new("jstar-generator");

    let space = example_space(Rationals);
    let ring = space.ring();
    let jhom = space.jhom_saturation();
    let expected = Ideal::parse(
        &ring,
        "x4*y2 + x3*y3, x6*y1 + x1*y3 + x2*y3, x4*y1 + x5*y1 + x2*y3, \
         x1*x4 + x2*x4 + x1*x5 + x2*x5 - x2*x6",
    )
    .expect("listed generators");
    hom_ok.check(jhom.equals(&expected), || "saturation route differs".into());
    routes_ok.check(
        jhom.equals(&space.jhom_determinantal()),
        || "determinantal sum differs".into(),
    );

    let jstar = space.jstar();
    let contracted = Ideal::parse(
        &ring,
        "x1*x4 + x1*x5 + x2*x4 + x2*x5 - x2*x6",
    )
    .expect("expanded product");
    star_ok.check(jstar.equals(&contracted), || "jstar differs".into());
    star_ok.check(
        jstar.equals(&jhom.eliminate(&[2, 4, 8])),
        || "elimination route differs".into(),
    );
    vec![hom_ok.into_verdict(), routes_ok.into_verdict(), star_ok.into_verdict()]
}

pub fn closure_matroid_replay(seeds: &[u64]) -> Vec<Verdict> {
    let mut bases_ok = Agg::new("matroid-bases");
    let mut degrees_ok = Agg::new("basis-degrees");
    let mut mdeg_ok = Agg::new("multidegree");
    let mut gin_ok = Agg::new("gin-from-degrees");
    let mut engine_ok = Agg::new("engine-gin-agrees");

    let space = example_space(Rationals);
    let bases: Vec<Vec<usize>> = space
        .matroid_bases()
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect();
    let expected_bases: Vec<Vec<usize>> = [
        [1, 2, 3], [1, 2, 4], [1, 3, 4], [1, 3, 5], [1, 4, 5], [2, 3, 4],
        [2, 3, 5], [2, 3, 6], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        [4, 5, 6],
    ]
    .iter()
    .map(|b| b.to_vec())
    .collect();
    bases_ok.check(bases.len() == 13, || format!("{} bases", bases.len()));
    bases_ok.check(bases == expected_bases, || "basis list differs".into());

    let degrees: BTreeSet<Vec<u32>> = space.basis_degrees();
    let expected_degrees: BTreeSet<Vec<u32>> = [
        vec![2, 1, 0], vec![2, 0, 1], vec![1, 1, 1], vec![1, 0, 2], vec![0, 1, 2], vec![0, 0, 3],
    ]
    .into_iter()
    .collect();
    degrees_ok.check(degrees == expected_degrees, || format!("{degrees:?}"));

    let mdeg = LaurentPoly::from_terms(
        3,
        [
            (vec![2, 1, 0], 1),
            (vec![2, 0, 1], 1),
            (vec![1, 1, 1], 1),
            (vec![1, 0, 2], 1),
            (vec![0, 1, 2], 1),
            (vec![0, 0, 3], 1),
        ],
    );
    mdeg_ok.check(space.multidegree_matroid() == mdeg, || "matroid multidegree differs".into());

    let ring = space.ring();
    let expected_gin = MonomialIdeal::new(
        space.shape(),
        monomials(
            &ring,
            &["x1*x4", "x2*x4", "x3*x4", "x1*x5", "x2*x3*x5", "x1*x3*x6"],
        ),
    );
    gin_ok.check(
        space.gin_from_degrees() == expected_gin,
        || format!("{}", space.gin_from_degrees()),
    );

    let modp = example_space(PrimeField::default_prime());
    match gin(&modp.jhom_saturation(), &TermOrder::ambient(9), seeds) {
        Ok(g) => {
            engine_ok.check(g.borel_certified, || "not certified".into());
            engine_ok.check(g.gin == modp.gin_from_degrees(), || format!("engine gin {}", g.gin));
        }
        Err(e) => engine_ok.check(false, || e.to_string()),
    }
    vec![
        bases_ok.into_verdict(),
        degrees_ok.into_verdict(),
        mdeg_ok.into_verdict(),
        gin_ok.into_verdict(),
        engine_ok.into_verdict(),
    ]
}

pub fn edge_corpus_suite(seeds: &[u64]) -> Vec<Verdict> {
    let f = PrimeField::default_prime();
    let mut engine_ok = Agg::new("engine-gin-matches-path-formula");
    let mut square_ok = Agg::new("path-gin-squarefree");
    let mut primes_ok = Agg::new("primes-intersect-to-gin");
    let mut additive_ok = Agg::new("multidegree-additive-over-primes");
    let mut support_ok = Agg::new("multidegree-support-names-primes");
    let mut reg_ok = Agg::new("regularity-at-most-vertex-count");
    let mut orders_ok = Agg::new("random-orders-give-squarefree-initial-ideals");
    let mut indep_ok = Agg::new("gin-order-independent");

    let mut rng = SplitMix64::new(0x9e3779b97f4a7c15);
    for g in graph_corpus() {
        let n = g.num_vertices();
        let expected = path_gin(&g);
        square_ok.check(expected.is_squarefree(), || format!("{g}"));

        let ring = edge_ring(f, n);
        let j = binomial_edge_ideal(&ring, &g);
        match gin(&j, &TermOrder::ambient(2 * n), seeds) {
            Ok(got) => {
                engine_ok.check(got.borel_certified, || format!("{g}: not certified"));
                engine_ok.check(got.gin == expected, || format!("{g}: engine gin {}", got.gin));
            }
            Err(e) => engine_ok.check(false, || format!("{g}: {e}")),
        }

        let primes = gin_minimal_primes(&g);
        let meet = MonomialIdeal::intersect_all(expected.shape(), &primes);
        primes_ok.check(meet == expected, || format!("{g}"));

        let total = g_multidegree(&expected);
        let mut sum = LaurentPoly::zero(n);
        for p in &primes {
            sum = sum.add(&multidegree(p));
        }
        additive_ok.check(total == sum, || format!("{g}"));

        let support: BTreeSet<Vec<u32>> = total
            .terms()
            .map(|(e, _)| e.iter().map(|&x| x as u32).collect())
            .collect();
        let named: BTreeSet<Vec<u32>> = expected
            .minimal_primes()
            .iter()
            .filter_map(|vars| BorelPrime::from_vars(expected.shape(), vars))
            .map(|p| p.w().to_vec())
            .collect();
        support_ok.check(support == named, || format!("{g}"));

        let reg = betti_squarefree(&f, &expected).regularity();
        reg_ok.check(reg.map_or(true, |r| r <= n as i64), || format!("{g}: reg {reg:?}"));

        for _ in 0..5 {
            let ord = TermOrder::random(2 * n, &mut rng);
            orders_ok.check(j.initial_ideal(&ord).is_squarefree(), || format!("{g}"));
        }
    }

    for g in [Graph::path(4), Graph::cycle(4), Graph::path(5), Graph::star(4)] {
        let n = g.num_vertices();
        let ring = edge_ring(f, n);
        let j = binomial_edge_ideal(&ring, &g);
        let a = gin(&j, &TermOrder::ambient(2 * n), seeds).map(|r| r.gin);
        let b = gin(&j, &TermOrder::lex(2 * n), seeds).map(|r| r.gin);
        indep_ok.check(
            matches!((&a, &b), (Ok(x), Ok(y)) if x == y),
            || format!("{g}"),
        );
    }

    vec![
        engine_ok.into_verdict(),
        square_ok.into_verdict(),
        primes_ok.into_verdict(),
        additive_ok.into_verdict(),
        support_ok.into_verdict(),
        reg_ok.into_verdict(),
        orders_ok.into_verdict(),
        indep_ok.into_verdict(),
    ]
}

pub fn closure_random_suite(seeds: &[u64]) -> Vec<Verdict> {
    let mut routes_ok = Agg::new("routes-agree");
    let mut contraction_ok = Agg::new("contraction-equals-elimination");
    let mut colon_ok = Agg::new("single-colon-saturates");
    let mut mdeg_ok = Agg::new("multidegree-matches-matroid");
    let mut cs_ok = Agg::new("is-cs");
    let mut gin_ok = Agg::new("gin-matches-matroid-degrees");
    let mut cm_ok = Agg::new("initial-complex-cohen-macaulay");

    for seed in 0..20u64 {
        let space = random_space(seed, false);
        let ring = space.ring();
        let jhom = space.jhom_saturation();
        routes_ok.check(
            jhom.equals(&space.jhom_determinantal()),
            || format!("seed {seed}"),
        );

        let shape = space.shape();
        let ys: Vec<usize> = (0..space.num_blocks())
            .map(|b| shape.block_start(b) + shape.block_sizes()[b] as usize - 1)
            .collect();
        contraction_ok.check(
            space.jstar().equals(&jhom.eliminate(&ys)),
            || format!("seed {seed}"),
        );

        let all: BTreeSet<usize> = (1..=space.num_blocks()).collect();
        let minors = Ideal::new(
            ring.clone(),
            maximal_minors(&ring, &space.x_matrix(&ring, &all)),
        );
        let prod = y_product(&space);
        let (saturated, steps) = minors.saturate_poly(&prod);
        colon_ok.check(steps <= 1, || format!("seed {seed}: {steps} colons"));
        colon_ok.check(
            saturated.equals(&minors.colon_poly(&prod)),
            || format!("seed {seed}"),
        );

        let n = space.num_forms_vars() + space.num_blocks();
        let init = jhom.initial_ideal(&TermOrder::ambient(n));
        mdeg_ok.check(
            multidegree(&init) == space.multidegree_matroid(),
            || format!("seed {seed}"),
        );

        match gin(&jhom, &TermOrder::ambient(n), seeds) {
            Ok(g) => {
                cs_ok.check(
                    g.borel_certified && g.gin.is_squarefree(),
                    || format!("seed {seed}"),
                );
                gin_ok.check(g.gin == space.gin_from_degrees(), || format!("seed {seed}"));
                cm_ok.check(reisner_cm(space.field(), &g.gin), || format!("seed {seed}"));
            }
            Err(e) => cs_ok.check(false, || format!("seed {seed}: {e}")),
        }
    }
    vec![
        routes_ok.into_verdict(),
        contraction_ok.into_verdict(),
        colon_ok.into_verdict(),
        mdeg_ok.into_verdict(),
        cs_ok.into_verdict(),
        gin_ok.into_verdict(),
        cm_ok.into_verdict(),
    ]
}

pub fn closure_fine_grading_suite(seeds: &[u64]) -> Vec<Verdict> {
    let mut star_ok = Agg::new("is-cs-star");
    for seed in 100..110u64 {
        let space = random_space(seed, true);
        let jhom = space.jhom_saturation();
        star_ok.check(
            matches!(is_cs_star(&jhom, seeds), Ok(true)),
            || format!("seed {seed}"),
        );
    }
    vec![star_ok.into_verdict()]
}

pub fn multiview_suite(seeds: &[u64]) -> Vec<Verdict> {
    let f = PrimeField::default_prime();
    let mut routes_ok = Agg::new("routes-agree");
    let mut coord_ok = Agg::new("coordinate-systems-give-generic-minors");
    let mut cs_ok = Agg::new("is-cs");

    let mut stars = Vec::new();
    for (i, &(dims, n)) in MULTIVIEW_CONFIGS.iter().enumerate() {
        let system = CameraSystem::random(f, n, dims, 7000 + i as u64);
        let star = system.star_route();
        routes_ok.check(
            star.equals(&system.segre_route()),
            || format!("config {i}: {dims:?} from dim {n}"),
        );
        stars.push((format!("random {i}"), star));
    }

    for (m, d) in [(2usize, 2usize), (2, 3), (3, 3)] {
        let system = coordinate_example(f, m, d);
        let star = system.star_route();
        let expected = generic_minor_ideal(star.ring(), m, d);
        coord_ok.check(star.equals(&expected), || format!("({m},{d}) star route"));
        coord_ok.check(
            system.segre_route().equals(&expected),
            || format!("({m},{d}) segre route"),
        );
        stars.push((format!("coordinate ({m},{d})"), star));
    }

    for (tag, star) in &stars {
        if star.is_zero() {
            continue;
        }
        let n = star.ring().shape().num_vars();
        match gin(star, &TermOrder::ambient(n), seeds) {
            Ok(g) => cs_ok.check(
                g.borel_certified && g.gin.is_squarefree(),
                || tag.clone(),
            ),
            Err(e) => cs_ok.check(false, || format!("{tag}: {e}")),
        }
    }
    vec![routes_ok.into_verdict(), coord_ok.into_verdict(), cs_ok.into_verdict()]
}

/// Every squarefree Cartwright-Sturmfels monomial ideal the other suites
/// produce, deduplicated: family gins plus in-coordinate initial ideals.
pub fn produced_ideals(seeds: &[u64]) -> Vec<(String, MonomialIdeal)> {
    let f = PrimeField::default_prime();
    let mut seen: BTreeSet<(Vec<u32>, Vec<Vec<u32>>)> = BTreeSet::new();
    let mut out: Vec<(String, MonomialIdeal)> = Vec::new();
    let mut push = |tag: String, j: MonomialIdeal| {
        if j.num_vars() > 10 || j.is_zero() || !j.is_squarefree() {
            return;
        }
        let key = (
            j.shape().block_sizes().to_vec(),
            j.gens().iter().map(|m| m.exps().to_vec()).collect(),
        );
        if seen.insert(key) {
            out.push((tag, j));
        }
    };

    for g in graph_corpus() {
        let n = g.num_vertices();
        if 2 * n > 10 {
            continue;
        }
        push(format!("path gin {g}"), path_gin(&g));
        let ring = edge_ring(f, n);
        let j = binomial_edge_ideal(&ring, &g);
        push(
            format!("initial ideal {g}"),
            j.initial_ideal(&TermOrder::ambient(2 * n)),
        );
    }

    let esempio = example_space(f);
    push("closure example gin".into(), esempio.gin_from_degrees());
    push(
        "closure example initial ideal".into(),
        esempio.jhom_saturation().initial_ideal(&TermOrder::ambient(9)),
    );

    for seed in 0..20u64 {
        let space = random_space(seed, false);
        let n = space.num_forms_vars() + space.num_blocks();
        push(format!("closure gin {seed}"), space.gin_from_degrees());
        push(
            format!("closure initial ideal {seed}"),
            space.jhom_saturation().initial_ideal(&TermOrder::ambient(n)),
        );
    }
    for seed in 100..110u64 {
        let space = random_space(seed, true);
        let n = space.num_forms_vars() + space.num_blocks();
        push(format!("fine closure gin {seed}"), space.gin_from_degrees());
        push(
            format!("fine closure initial ideal {seed}"),
            space.jhom_saturation().initial_ideal(&TermOrder::ambient(n)),
        );
    }

    for (i, &(dims, n)) in MULTIVIEW_CONFIGS.iter().enumerate() {
        let system = CameraSystem::random(f, n, dims, 7000 + i as u64);
        let star = system.star_route();
        if star.is_zero() {
            continue;
        }
        let vars: usize = dims.iter().sum();
        push(
            format!("multiview initial ideal {i}"),
            star.initial_ideal(&TermOrder::ambient(vars)),
        );
        if let Ok(g) = gin(&star, &TermOrder::ambient(vars), seeds) {
            push(format!("multiview gin {i}"), g.gin);
        }
    }
    out
}

pub fn cohomology_after_gin_suite(seeds: &[u64]) -> Vec<Verdict> {
    let f = PrimeField::default_prime();
    let mut tables_ok = Agg::new("local-cohomology-tables-equal");
    let mut extremal_ok = Agg::new("extremal-betti-equal");
    for (tag, j) in produced_ideals(seeds) {
        match conjecture_check_monomial(&f, &j, seeds) {
            Ok(c) => {
                tables_ok.check(c.cohomology_equal, || {
                    format!("{tag}: {} mismatches", c.mismatches.len())
                });
                extremal_ok.check(c.extremal_equal, || tag.clone());
            }
            Err(e) => tables_ok.check(false, || format!("{tag}: {e}")),
        }
    }
    vec![tables_ok.into_verdict(), extremal_ok.into_verdict()]
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

fn fine(j: &MonomialIdeal) -> MonomialIdeal {
    let shape = BlockShape::new(&vec![1; j.num_vars()]);
    MonomialIdeal::new(shape, j.gens().to_vec())
}

pub fn cross_formula_suite(_seeds: &[u64]) -> Vec<Verdict> {
    let f = PrimeField::default_prime();
    let mut k_ok = Agg::new("k-polynomial-matches-betti-alternating-sum");
    let mut dual_ok = Agg::new("alexander-duality-involution");
    let mut hochster_ok = Agg::new("hochster-routes-agree");
    let mut colon_ok = Agg::new("colon-by-forms-adds-only-small-degrees");

    let mut fine_instances = vec![
        ("P3 path gin".to_string(), fine(&path_gin(&Graph::path(3)))),
        ("C4 path gin".to_string(), fine(&path_gin(&Graph::cycle(4)))),
    ];
    {
        let ring = edge_ring(f, 4);
        let j = binomial_edge_ideal(&ring, &Graph::path(4));
        fine_instances.push((
            "P4 initial ideal".to_string(),
            fine(&j.initial_ideal(&TermOrder::ambient(8))),
        ));
    }
    for seed in 40..46u64 {
        fine_instances.push((format!("random {seed}"), random_squarefree_ideal(seed)));
    }
    for (tag, j) in &fine_instances {
        let table = betti_squarefree(&f, j);
        k_ok.check(k_polynomial_from_betti(&table) == k_polynomial(j), || tag.clone());
    }

    for seed in 50..65u64 {
        let j = random_squarefree_ideal(seed);
        dual_ok.check(j.alexander_dual().alexander_dual() == j, || format!("seed {seed}"));
    }

    for seed in 70..80u64 {
        let j = random_squarefree_ideal(seed);
        hochster_ok.check(
            betti_squarefree(&f, &j) == betti_squarefree_direct(&f, &j),
            || format!("seed {seed}"),
        );
    }

    for seed in 200..210u64 {
        let space = random_space(seed, false);
        let ring = space.ring();
        let shape = space.shape();
        let j = space.jhom_saturation();
        let mut rng = SplitMix64::new(seed ^ 0xabcdef);

        let mut prod = MultiPoly::one(ring.clone());
        for _ in 0..1 + rng.next_below(2) {
            let b = rng.next_below(space.num_blocks() as u64) as usize;
            let mut form = MultiPoly::zero(ring.clone());
            for k in 0..shape.block_sizes()[b] as usize {
                let c = f.sample(&mut rng);
                form = form.add(&MultiPoly::var(ring.clone(), shape.var(b, k)).scale(&c));
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
        colon_ok.check(colon.equals(&rebuilt), || format!("seed {seed}"));
    }

    vec![
        k_ok.into_verdict(),
        dual_ok.into_verdict(),
        hochster_ok.into_verdict(),
        colon_ok.into_verdict(),
    ]
}

/// Builds the verify-all report body: one result entry and one aggregated
/// verdict per suite item.
pub fn verify_all_results(
    seeds: &[u64],
    threads: usize,
) -> (BTreeMap<String, serde_json::Value>, Vec<Verdict>) {
    let outcomes = run_all(seeds, threads);
    let mut results = BTreeMap::new();
    let mut verdicts = Vec::new();
    for (name, item_verdicts) in outcomes {
        let detail: Vec<serde_json::Value> = item_verdicts
            .iter()
            .map(|v| {
                serde_json::json!({
                    "check": v.check,
                    "pass": v.pass,
                    "detail": v.detail,
                })
            })
            .collect();
        results.insert(name.clone(), serde_json::Value::Array(detail));
        let first_fail = item_verdicts.iter().find(|v| !v.pass);
        verdicts.push(match first_fail {
            None => Verdict::pass(name),
            Some(v) => Verdict::fail(
                name,
                format!(
                    "{}{}",
                    v.check,
                    v.detail.as_deref().map(|d| format!(": {d}")).unwrap_or_default()
                ),
            ),
        });
    }
    (results, verdicts)
}
