//! Subcommand execution: turns parsed inputs into reports.
//!
//! Every function here is deterministic given the input bytes and the seed
//! list.  Field dispatch happens once per command; the algebra itself is
//! generic over the coefficient field.

use crate::input::{
    AnyField, ClosureInput, FieldSpec, IdealInput, InputError, MultiviewInput,
};
use crate::report::{Report, Verdict};

use csgin_core::edge::{binomial_edge_ideal, edge_ring, gin_minimal_primes, path_gin, Graph};
use csgin_core::field::Field;
use csgin_core::gin::{gin, is_cs_star, GinError};
use csgin_core::hilbert::{c_polynomial, g_multidegree, k_polynomial, multidegree};
use csgin_core::homology::{betti_squarefree, conjecture_check_monomial, ConjectureError};
use csgin_core::ideal::Ideal;
use csgin_core::monideal::MonomialIdeal;
use csgin_core::monomial::Monomial;
use csgin_core::order::TermOrder;
use csgin_core::parse::parse_poly;
use csgin_core::ring::{BlockRing, BlockShape};

use serde_json::json;
use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderSpec {
    Grevlex,
    Lex,
}

impl OrderSpec {
    pub fn parse(s: &str) -> Result<OrderSpec, InputError> {
        match s {
            "grevlex" => Ok(OrderSpec::Grevlex),
            "lex" => Ok(OrderSpec::Lex),
            other => Err(InputError::invalid(format!(
                "unknown order {other:?}; expected grevlex or lex"
            ))),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            OrderSpec::Grevlex => "grevlex",
            OrderSpec::Lex => "lex",
        }
    }

    pub fn build(&self, n: usize) -> TermOrder {
        match self {
            OrderSpec::Grevlex => TermOrder::ambient(n),
            OrderSpec::Lex => TermOrder::lex(n),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    pub field: Option<FieldSpec>,
    pub order: OrderSpec,
    pub seeds: Vec<u64>,
    pub check: bool,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            field: None,
            order: OrderSpec::Grevlex,
            seeds: vec![1, 2, 3],
            check: false,
            timing: false,
        }
    }
}

struct Timing {
    enabled: bool,
    start: Instant,
    phases: BTreeMap<String, u64>,
}

impl Timing {
    fn new(enabled: bool) -> Timing {
        Timing { enabled, start: Instant::now(), phases: BTreeMap::new() }
    }

    fn mark(&mut self, phase: &str) {
        if self.enabled {
            let ms = self.start.elapsed().as_millis() as u64;
            self.phases.insert(phase.to_string(), ms);
            self.start = Instant::now();
        }
    }

    fn finish(self, report: &mut Report) {
        if self.enabled {
            report.timing_ms = Some(self.phases);
        }
    }
}

pub fn monomial_string(shape: &BlockShape, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in m.exps().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(shape.var_name(v).to_string()),
            e => parts.push(format!("{}^{e}", shape.var_name(v))),
        }
    }
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

pub fn monomial_ideal_strings(j: &MonomialIdeal) -> Vec<String> {
    j.gens().iter().map(|m| monomial_string(j.shape(), m)).collect()
}

pub fn ideal_strings<F: Field>(i: &Ideal<F>) -> Vec<String> {
    i.gens().iter().map(|g| g.to_string()).collect()
}

fn prime_strings(shape: &Arc<BlockShape>, primes: &[MonomialIdeal]) -> Vec<Vec<String>> {
    primes
        .iter()
        .map(|p| p.gens().iter().map(|m| monomial_string(shape, m)).collect())
        .collect()
}

fn build_ideal<F: Field>(field: F, input: &IdealInput) -> Result<Ideal<F>, InputError> {
    if input.blocks.is_empty() || input.blocks.iter().any(|&b| b == 0) {
        return Err(InputError::invalid("blocks must be nonempty positive sizes"));
    }
    let ring = BlockRing::new(field, &input.blocks);
    let mut gens = Vec::new();
    for s in &input.generators {
        let g = parse_poly(&ring, s)
            .map_err(|e| InputError::invalid(format!("generator {s:?}: {e}")))?;
        gens.push(g);
    }
    let ideal = Ideal::new(ring, gens);
    if !ideal.is_homogeneous() {
        return Err(InputError::invalid(
            "generators are not multigraded: every term of a generator must have the same block degree",
        ));
    }
    Ok(ideal)
}

fn base_report(command: String, digest: String, field: FieldSpec, opts: &Options) -> Report {
    let mut r = Report::new(command, digest);
    r.field = field.label();
    r.order = opts.order.label().to_string();
    r.seeds = opts.seeds.clone();
    r
}

pub fn gin_command(
    input: &IdealInput,
    digest: String,
    command: String,
    opts: &Options,
) -> Result<Report, InputError> {
    let spec = input.field_spec(opts.field)?;
    let mut report = base_report(command, digest, spec, opts);
    match spec.build() {
        AnyField::Q(f) => gin_in(f, input, opts, &mut report)?,
        AnyField::Fp(f) => gin_in(f, input, opts, &mut report)?,
    }
    Ok(report)
}

fn gin_in<F: Field>(
    field: F,
    input: &IdealInput,
    opts: &Options,
    report: &mut Report,
) -> Result<(), InputError> {
    let ideal = build_ideal(field.clone(), input)?;
    let n = ideal.ring().shape().num_vars();
    let ord = opts.order.build(n);
    let mut timing = Timing::new(opts.timing);

    match gin(&ideal, &ord, &opts.seeds) {
        Ok(g) => {
            timing.mark("gin");
            report.insert("gin", monomial_ideal_strings(&g.gin));
            report.insert("borel_certified", g.borel_certified);
            report.insert("agreements", g.agreements);
            report.insert("is_cs", g.gin.is_squarefree());
            let star = matches!(is_cs_star(&ideal, &opts.seeds), Ok(true));
            report.insert("is_cs_star", star);
            report.insert("multidegree", multidegree(&g.gin).to_string());
            report.insert("g_multidegree", g_multidegree(&g.gin).to_string());
            report.insert("k_polynomial", k_polynomial(&g.gin).to_string());
            timing.mark("invariants");

            if opts.check {
                report.verdicts.push(Verdict::from_bool(
                    "gin-certified",
                    g.borel_certified,
                    || "seeds disagreed".into(),
                ));
                let again = gin(&g.gin.to_ideal(field.clone()), &ord, &opts.seeds);
                report.verdicts.push(Verdict::from_bool(
                    "gin-idempotent",
                    matches!(&again, Ok(a) if a.gin == g.gin),
                    || "gin of the gin differs".into(),
                ));
                let init = ideal.initial_ideal(&ord);
                report.verdicts.push(Verdict::from_bool(
                    "hilbert-series-preserved",
                    k_polynomial(&init) == k_polynomial(&g.gin),
                    || "initial ideal and gin have different Hilbert numerators".into(),
                ));
                timing.mark("check");
            }
        }
        Err(GinError::NotCertified { candidates }) => {
            report.verdicts.push(Verdict::fail(
                "gin-certified",
                "distinct initial ideals remained after resampling",
            ));
            report.counterexample = Some(json!({
                "candidates": candidates
                    .iter()
                    .map(monomial_ideal_strings)
                    .collect::<Vec<_>>(),
            }));
        }
    }
    timing.finish(report);
    Ok(())
}

pub fn edge_command(
    graph: &Graph,
    digest: String,
    command: String,
    opts: &Options,
) -> Result<Report, InputError> {
    let spec = match opts.field {
        Some(s) => s,
        None => FieldSpec::default(),
    };
    let mut report = base_report(command, digest, spec, opts);
    match spec.build() {
        AnyField::Q(f) => edge_in(f, graph, opts, &mut report),
        AnyField::Fp(f) => edge_in(f, graph, opts, &mut report),
    }
    Ok(report)
}

fn edge_in<F: Field>(field: F, graph: &Graph, opts: &Options, report: &mut Report) {
    let n = graph.num_vertices();
    let mut timing = Timing::new(opts.timing);
    report.insert("graph", graph.to_string());

    let expected = path_gin(graph);
    report.insert("path_gin", monomial_ideal_strings(&expected));
    let primes = gin_minimal_primes(graph);
    report.insert("minimal_primes", prime_strings(expected.shape(), &primes));
    timing.mark("combinatorics");

    let ring = edge_ring(field.clone(), n);
    let ideal = binomial_edge_ideal(&ring, graph);
    report.insert("edge_ideal", ideal_strings(&ideal));
    let ord = opts.order.build(2 * n);
    let engine = gin(&ideal, &ord, &opts.seeds);
    if let Ok(g) = &engine {
        report.insert("gin", monomial_ideal_strings(&g.gin));
        report.insert("borel_certified", g.borel_certified);
    }
    timing.mark("gin");

    let reg = betti_squarefree(&field, &expected).regularity();
    report.insert("regularity", reg);
    report.insert("multidegree", g_multidegree(&expected).to_string());
    timing.mark("invariants");

    if opts.check {
        match &engine {
            Ok(g) => {
                report.verdicts.push(Verdict::from_bool(
                    "engine-gin-matches-path-formula",
                    g.gin == expected,
                    || format!("engine gin {}", g.gin),
                ));
            }
            Err(e) => {
                report.verdicts.push(Verdict::fail("engine-gin-matches-path-formula", e.to_string()));
            }
        }
        report.verdicts.push(Verdict::from_bool(
            "path-gin-squarefree",
            expected.is_squarefree(),
            || "path gin has a square".into(),
        ));
        let meet = MonomialIdeal::intersect_all(expected.shape(), &primes);
        report.verdicts.push(Verdict::from_bool(
            "primes-intersect-to-gin",
            meet == expected,
            || format!("intersection {meet}"),
        ));
        report.verdicts.push(Verdict::from_bool(
            "regularity-at-most-vertex-count",
            reg.map_or(true, |r| r <= n as i64),
            || format!("regularity {reg:?} exceeds {n}"),
        ));
        timing.mark("check");
    }
    timing.finish(report);
}

pub fn closure_command(
    input: &ClosureInput,
    digest: String,
    command: String,
    opts: &Options,
) -> Result<Report, InputError> {
    let spec = input.field_spec(opts.field)?;
    let mut report = base_report(command, digest, spec, opts);
    match spec.build() {
        AnyField::Q(f) => closure_in(f, input, opts, &mut report)?,
        AnyField::Fp(f) => closure_in(f, input, opts, &mut report)?,
    }
    Ok(report)
}

fn closure_in<F: Field>(
    field: F,
    input: &ClosureInput,
    opts: &Options,
    report: &mut Report,
) -> Result<(), InputError> {
    let space = input.space(field.clone())?;
    let mut timing = Timing::new(opts.timing);
    report.insert("blocks", &input.blocks);
    report.insert("dim", space.dim());

    let jhom = space.jhom_saturation();
    report.insert("jhom", ideal_strings(&jhom));
    let jstar = space.jstar();
    report.insert("jstar", ideal_strings(&jstar));
    timing.mark("homogenization");

    let bases: Vec<Vec<usize>> = space
        .matroid_bases()
        .into_iter()
        .map(|b| b.into_iter().collect())
        .collect();
    report.insert("matroid_bases", &bases);
    let degrees: Vec<Vec<u32>> = space.basis_degrees().into_iter().collect();
    report.insert("basis_degrees", &degrees);
    report.insert("multidegree", space.multidegree_matroid().to_string());
    let from_degrees = space.gin_from_degrees();
    report.insert("gin_from_degrees", monomial_ideal_strings(&from_degrees));
    timing.mark("matroid");

    if opts.check {
        report.verdicts.push(Verdict::from_bool(
            "saturation-equals-determinantal-sum",
            jhom.equals(&space.jhom_determinantal()),
            || "the two homogenization routes differ".into(),
        ));
        let shape = space.shape();
        let ys: Vec<usize> = (0..space.num_blocks())
            .map(|b| shape.block_start(b) + shape.block_sizes()[b] as usize - 1)
            .collect();
        report.verdicts.push(Verdict::from_bool(
            "contraction-equals-elimination",
            jstar.equals(&jhom.eliminate(&ys)),
            || "jstar differs from eliminating the homogenizing variables".into(),
        ));
        let n = space.num_forms_vars() + space.num_blocks();
        let ord = opts.order.build(n);
        match gin(&jhom, &ord, &opts.seeds) {
            Ok(g) => {
                report.insert("gin", monomial_ideal_strings(&g.gin));
                report.verdicts.push(Verdict::from_bool(
                    "engine-gin-matches-matroid-degrees",
                    g.gin == from_degrees,
                    || format!("engine gin {}", g.gin),
                ));
                report.verdicts.push(Verdict::from_bool(
                    "is-cs",
                    g.borel_certified && g.gin.is_squarefree(),
                    || "gin is not squarefree".into(),
                ));
            }
            Err(e) => {
                report
                    .verdicts
                    .push(Verdict::fail("engine-gin-matches-matroid-degrees", e.to_string()));
            }
        }
        let init = jhom.initial_ideal(&TermOrder::ambient(n));
        report.verdicts.push(Verdict::from_bool(
            "multidegree-matches-matroid",
            multidegree(&init) == space.multidegree_matroid(),
            || "Hilbert-series multidegree differs from the matroid sum".into(),
        ));
        timing.mark("check");
    }
    timing.finish(report);
    Ok(())
}

pub fn multiview_command(
    input: &MultiviewInput,
    digest: String,
    command: String,
    opts: &Options,
) -> Result<Report, InputError> {
    let spec = match opts.field {
        Some(s) => s,
        None => FieldSpec::default(),
    };
    let mut report = base_report(command, digest, spec, opts);
    match spec.build() {
        AnyField::Q(f) => multiview_in(f, input, opts, &mut report)?,
        AnyField::Fp(f) => multiview_in(f, input, opts, &mut report)?,
    }
    Ok(report)
}

fn multiview_in<F: Field>(
    field: F,
    input: &MultiviewInput,
    opts: &Options,
    report: &mut Report,
) -> Result<(), InputError> {
    let system = input.system(field)?;
    let mut timing = Timing::new(opts.timing);
    report.insert("source_dim", system.source_dim());
    report.insert("dims", system.dims());

    let star = system.star_route();
    report.insert("multiview_ideal", ideal_strings(&star));
    timing.mark("star");
    let segre = system.segre_route();
    report.insert("segre_route", ideal_strings(&segre));
    timing.mark("segre");

    if opts.check {
        report.verdicts.push(Verdict::from_bool(
            "routes-agree",
            star.equals(&segre),
            || "closure route and Segre route disagree".into(),
        ));
        let n: usize = system.dims().iter().sum();
        match gin(&star, &opts.order.build(n), &opts.seeds) {
            Ok(g) => {
                report.insert("gin", monomial_ideal_strings(&g.gin));
                report.verdicts.push(Verdict::from_bool(
                    "is-cs",
                    g.borel_certified && g.gin.is_squarefree(),
                    || "gin is not squarefree".into(),
                ));
            }
            Err(e) => {
                report.verdicts.push(Verdict::fail("is-cs", e.to_string()));
            }
        }
        timing.mark("check");
    }
    timing.finish(report);
    Ok(())
}

pub fn multidegree_command(
    input: &IdealInput,
    digest: String,
    command: String,
    opts: &Options,
) -> Result<Report, InputError> {
    let spec = input.field_spec(opts.field)?;
    let mut report = base_report(command, digest, spec, opts);
    match spec.build() {
        AnyField::Q(f) => multidegree_in(f, input, opts, &mut report)?,
        AnyField::Fp(f) => multidegree_in(f, input, opts, &mut report)?,
    }
    Ok(report)
}

fn multidegree_in<F: Field>(
    field: F,
    input: &IdealInput,
    opts: &Options,
    report: &mut Report,
) -> Result<(), InputError> {
    let ideal = build_ideal(field, input)?;
    let mut timing = Timing::new(opts.timing);
    let n = ideal.ring().shape().num_vars();
    let init = ideal.initial_ideal(&opts.order.build(n));
    report.insert("initial_ideal", monomial_ideal_strings(&init));
    let k = k_polynomial(&init);
    report.insert("k_polynomial", k.to_string());
    report.insert("c_polynomial", c_polynomial(&k).to_string());
    let m = multidegree(&init);
    report.insert("multidegree", m.to_string());
    report.insert("g_multidegree", g_multidegree(&init).to_string());
    report.insert("multiplicity_free", m.multiplicity_free());
    timing.mark("hilbert");
    timing.finish(report);
    Ok(())
}

pub fn conjecture_command(
    input: &IdealInput,
    digest: String,
    command: String,
    opts: &Options,
) -> Result<Report, InputError> {
    let spec = input.field_spec(opts.field)?;
    let mut report = base_report(command, digest, spec, opts);
    match spec.build() {
        AnyField::Q(f) => conjecture_in(f, input, opts, &mut report)?,
        AnyField::Fp(f) => conjecture_in(f, input, opts, &mut report)?,
    }
    Ok(report)
}

fn conjecture_in<F: Field>(
    field: F,
    input: &IdealInput,
    opts: &Options,
    report: &mut Report,
) -> Result<(), InputError> {
    let ideal = build_ideal(field.clone(), input)?;
    let shape = ideal.ring().shape().clone();
    let mut gens = Vec::new();
    for g in ideal.gens() {
        if g.num_terms() != 1 {
            return Err(InputError::invalid(
                "conjecture checks need a monomial ideal: every generator must be a single term",
            ));
        }
        gens.push(g.lead_ambient().expect("nonzero term").0.clone());
    }
    let monomial = MonomialIdeal::new(shape, gens);
    if !monomial.is_squarefree() {
        return Err(InputError::invalid(
            "conjecture checks need a squarefree monomial ideal",
        ));
    }
    let mut timing = Timing::new(opts.timing);

    match conjecture_check_monomial(&field, &monomial, &opts.seeds) {
        Ok(c) => {
            report.insert("gin", monomial_ideal_strings(&c.gin));
            report.insert("window", c.window);
            report.verdicts.push(Verdict::from_bool(
                "local-cohomology-tables-equal",
                c.cohomology_equal,
                || format!("{} mismatched entries", c.mismatches.len()),
            ));
            report.verdicts.push(Verdict::from_bool(
                "extremal-betti-equal",
                c.extremal_equal,
                || "extremal Betti numbers differ".into(),
            ));
            if !c.mismatches.is_empty() {
                let first = &c.mismatches[0];
                report.counterexample = Some(json!({
                    "cohomological_index": first.i,
                    "degree": first.degree,
                    "ideal_dim": first.ideal_dim,
                    "gin_dim": first.gin_dim,
                }));
            }
        }
        Err(ConjectureError::NotCartwrightSturmfels { gin }) => {
            report.verdicts.push(Verdict::fail(
                "input-is-cartwright-sturmfels",
                "the gin is not squarefree",
            ));
            report.counterexample = Some(json!({
                "gin": monomial_ideal_strings(&gin),
            }));
        }
        Err(ConjectureError::Gin(e)) => {
            report.verdicts.push(Verdict::fail("gin-certified", e.to_string()));
        }
    }
    timing.mark("conjecture");
    timing.finish(report);
    Ok(())
}
