//! Simplicial homology and the homological side of squarefree ideals.
//!
//! A squarefree monomial ideal `I` in `N` variables determines its
//! Stanley-Reisner complex, whose faces are the squarefree monomials
//! outside `I`.
//! Hochster's formula computes the multigraded Betti numbers of `I` from
//! reduced homology; the dual form, used here as the primary route, reads
//! `beta_{i,W}(I)` off links in the complex of the Alexander dual:
//!
//! `beta_{i,W}(I) = dim H~_{i-1}(link_{D(I*)}([N] - W))`.
//!
//! From the Z-graded Betti numbers of `I*` the Hilbert function of local
//! cohomology of `S/I` follows:
//!
//! `dim H^i_m(S/I)_{-j} = sum_v C(j-1, v-1) beta_{i-v, N-v}(I*)` for `j > 0`,
//! with `beta_{i,N}(I*)` in degree `0` and nothing in positive degrees.
//!
//! All homology ranks are taken over a caller-chosen coefficient field.

use crate::field::Field;
use crate::gin::{gin, GinError, DEFAULT_SEEDS};
use crate::hilbert::LaurentPoly;
use crate::matrix::Mat;
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::order::TermOrder;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An abstract simplicial complex on `{0, ..., vertices-1}`, stored by its
/// facets.  The void complex (no faces at all) and the complex `{[]}` whose
/// only face is empty are distinct: the former has no homology, the latter
/// has `H~_{-1} = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: usize,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    pub fn void(vertices: usize) -> Self {
        SimplicialComplex { vertices, facets: Vec::new() }
    }

    pub fn irrelevant(vertices: usize) -> Self {
        SimplicialComplex { vertices, facets: vec![BTreeSet::new()] }
    }

    /// Builds the complex generated by `faces` (maximal ones survive).
    pub fn new(vertices: usize, faces: Vec<BTreeSet<usize>>) -> Self {
        let mut kept: Vec<BTreeSet<usize>> = Vec::new();
        let mut faces = faces;
        faces.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
        faces.dedup();
        for f in faces {
            debug_assert!(f.iter().all(|&v| v < vertices));
            if !kept.iter().any(|g| f.is_subset(g)) {
                kept.push(f);
            }
        }
        kept.sort();
        SimplicialComplex { vertices, facets: kept }
    }

    /// Stanley-Reisner complex: facets are the complements of the minimal
    /// primes.  The zero ideal gives the full simplex, the unit ideal the
    /// void complex.
    pub fn from_squarefree_ideal(ideal: &MonomialIdeal) -> Self {
        assert!(ideal.is_squarefree(), "Stanley-Reisner needs a squarefree ideal");
        let n = ideal.num_vars();
        let facets = ideal
            .minimal_primes()
            .into_iter()
            .map(|p| {
                let inside: BTreeSet<usize> = p.into_iter().collect();
                (0..n).filter(|v| !inside.contains(v)).collect()
            })
            .collect();
        SimplicialComplex::new(n, facets)
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex, `Some(-1)` for `{[]}`.
    pub fn dim(&self) -> Option<i64> {
        self.facets.iter().map(|f| f.len() as i64 - 1).max()
    }

    pub fn contains_face(&self, face: &BTreeSet<usize>) -> bool {
        self.facets.iter().any(|f| face.is_subset(f))
    }

    /// The link `{G : G ∪ face ∈ Δ, G ∩ face = ∅}`; void when `face` is not
    /// a face.
    pub fn link(&self, face: &BTreeSet<usize>) -> Self {
        let shrunk = self
            .facets
            .iter()
            .filter(|f| face.is_subset(f))
            .map(|f| f.difference(face).copied().collect())
            .collect();
        SimplicialComplex::new(self.vertices, shrunk)
    }

    /// The induced subcomplex on the vertex set `w`.
    pub fn induced(&self, w: &BTreeSet<usize>) -> Self {
        let cut = self
            .facets
            .iter()
            .map(|f| f.intersection(w).copied().collect())
            .collect();
        SimplicialComplex::new(self.vertices, cut)
    }

    /// Every face, the empty set included; absent for the void complex.
    pub fn faces(&self) -> Vec<BTreeSet<usize>> {
        let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
        for f in &self.facets {
            let verts: Vec<usize> = f.iter().copied().collect();
            for mask in 0..(1usize << verts.len()) {
                let sub: BTreeSet<usize> = verts
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                all.insert(sub);
            }
        }
        all.into_iter().collect()
    }

    fn faces_of_card(&self, card: usize) -> Vec<Vec<usize>> {
        let mut out: BTreeSet<Vec<usize>> = BTreeSet::new();
        for f in &self.facets {
            let verts: Vec<usize> = f.iter().copied().collect();
            if verts.len() < card {
                continue;
            }
            subsets_of_size(&verts, card, &mut out);
        }
        out.into_iter().collect()
    }
}

fn subsets_of_size(verts: &[usize], card: usize, out: &mut BTreeSet<Vec<usize>>) {
    let mut idx: Vec<usize> = (0..card).collect();
    loop {
        out.insert(idx.iter().map(|&k| verts[k]).collect());
        // Advance the combination odometer.
        let mut pos = card;
        while pos > 0 {
            pos -= 1;
            if idx[pos] != verts.len() - card + pos {
                idx[pos] += 1;
                for later in pos + 1..card {
                    idx[later] = idx[later - 1] + 1;
                }
                break;
            }
            if pos == 0 {
                return;
            }
        }
        if card == 0 {
            return;
        }
    }
}

/// Ranks of the reduced homology `H~_{-1}, H~_0, ..., H~_dim` over `field`;
/// empty for the void complex.
pub fn reduced_homology_ranks<F: Field>(field: &F, complex: &SimplicialComplex) -> Vec<usize> {
    let Some(dim) = complex.dim() else {
        return Vec::new();
    };
    let top = (dim + 1) as usize;
    // faces_by_card[c] lists the faces with c vertices, c = 0..=top.
    let faces_by_card: Vec<Vec<Vec<usize>>> =
        (0..=top).map(|c| complex.faces_of_card(c)).collect();
    // boundary_rank[c] = rank of the map from c-vertex chains down to
    // (c-1)-vertex chains; the c = 0 entry is the zero map out of the empty
    // face.
    let mut boundary_rank = vec![0usize; top + 2];
    for c in 1..=top {
        let rows = &faces_by_card[c - 1];
        let cols = &faces_by_card[c];
        let index: BTreeMap<&Vec<usize>, usize> =
            rows.iter().enumerate().map(|(i, f)| (f, i)).collect();
        let mut a = vec![vec![field.zero(); cols.len()]; rows.len()];
        for (j, face) in cols.iter().enumerate() {
            for (k, _) in face.iter().enumerate() {
                let mut sub = face.clone();
                sub.remove(k);
                let i = index[&sub];
                let sign = if k % 2 == 0 { field.one() } else { field.neg(&field.one()) };
                a[i][j] = sign;
            }
        }
        boundary_rank[c] = Mat::new(field.clone(), a).rank();
    }
    (0..=top)
        .map(|c| faces_by_card[c].len() - boundary_rank[c] - boundary_rank[c + 1])
        .collect()
}

/// `dim H~_i` with out-of-range degrees reported as 0.
pub fn reduced_betti<F: Field>(field: &F, complex: &SimplicialComplex, i: i64) -> usize {
    let ranks = reduced_homology_ranks(field, complex);
    let idx = i + 1;
    if idx < 0 || idx as usize >= ranks.len() {
        0
    } else {
        ranks[idx as usize]
    }
}

/// Multigraded Betti numbers `beta_{i,a}(I)` of a squarefree ideal as a
/// module (so `beta_0` counts minimal generators), with `a` squarefree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    num_vars: usize,
    entries: BTreeMap<(usize, Vec<u32>), usize>,
}

impl BettiTable {
    pub fn entry(&self, i: usize, a: &[u32]) -> usize {
        self.entries.get(&(i, a.to_vec())).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, Vec<u32>), &usize)> {
        self.entries.iter()
    }

    /// The Z-graded table `(i, total degree) -> beta`.
    pub fn graded(&self) -> BTreeMap<(usize, i64), usize> {
        let mut out = BTreeMap::new();
        for ((i, a), &b) in &self.entries {
            let j = a.iter().map(|&e| e as i64).sum::<i64>();
            *out.entry((*i, j)).or_insert(0) += b;
        }
        out
    }

    pub fn graded_entry(&self, i: usize, j: i64) -> usize {
        self.entries
            .iter()
            .filter(|((bi, a), _)| *bi == i && a.iter().map(|&e| e as i64).sum::<i64>() == j)
            .map(|(_, &b)| b)
            .sum()
    }

    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((bi, _), _)| *bi == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// `max { i : beta_i != 0 }`; `None` for the zero module.
    pub fn projective_dimension(&self) -> Option<usize> {
        self.entries.keys().map(|(i, _)| *i).max()
    }

    /// `max { j - i : beta_{i,j} != 0 }`.
    pub fn regularity(&self) -> Option<i64> {
        self.graded().keys().map(|&(i, j)| j - i as i64).max()
    }

    /// Extremal corners of the Z-graded table: positions `(i, j)` with
    /// `beta_{i,j} != 0` and no other nonzero entry `(k, l)` with `k >= i`
    /// and `l - k >= j - i`.
    pub fn extremal(&self) -> Vec<(usize, i64, usize)> {
        let graded = self.graded();
        let nonzero: Vec<(usize, i64)> = graded
            .iter()
            .filter(|(_, &b)| b > 0)
            .map(|(&k, _)| k)
            .collect();
        nonzero
            .iter()
            .filter(|&&(i, j)| {
                !nonzero.iter().any(|&(k, l)| {
                    (k, l) != (i, j) && k >= i && l - k as i64 >= j - i as i64
                })
            })
            .map(|&(i, j)| (i, j, graded[&(i, j)]))
            .collect()
    }
}

/// All least common multiples of nonempty generator subsets.
fn lcm_lattice(ideal: &MonomialIdeal) -> BTreeSet<Monomial> {
    let mut lattice: BTreeSet<Monomial> = BTreeSet::new();
    for g in ideal.gens() {
        let mut grown: BTreeSet<Monomial> = lattice.iter().map(|m| m.lcm(g)).collect();
        grown.insert(g.clone());
        lattice.extend(grown);
    }
    lattice
}

/// Betti numbers through the Alexander dual: `beta_{i,W}` is the rank of
/// `H~_{i-1}` of the link of the complementary face in `D(I*)`.
pub fn betti_squarefree<F: Field>(field: &F, ideal: &MonomialIdeal) -> BettiTable {
    assert!(ideal.is_squarefree(), "Betti table needs a squarefree ideal");
    let n = ideal.num_vars();
    let dual_complex = SimplicialComplex::from_squarefree_ideal(&ideal.alexander_dual());
    let mut entries = BTreeMap::new();
    for w in lcm_lattice(ideal) {
        let inside: BTreeSet<usize> = w.support().collect();
        let complement: BTreeSet<usize> = (0..n).filter(|v| !inside.contains(v)).collect();
        let ranks = reduced_homology_ranks(field, &dual_complex.link(&complement));
        for (idx, &rank) in ranks.iter().enumerate() {
            if rank > 0 {
                entries.insert((idx, w.exps().to_vec()), rank);
            }
        }
    }
    BettiTable { num_vars: n, entries }
}

/// Betti numbers through restrictions of the ideal's own complex:
/// `beta_{i,W} = dim H~_{|W|-i-2}` of the induced subcomplex on `W`.  Kept
/// as an independent cross-check of [`betti_squarefree`].
pub fn betti_squarefree_direct<F: Field>(field: &F, ideal: &MonomialIdeal) -> BettiTable {
    assert!(ideal.is_squarefree(), "Betti table needs a squarefree ideal");
    assert!(!ideal.is_unit(), "direct Hochster needs a proper ideal");
    let n = ideal.num_vars();
    let complex = SimplicialComplex::from_squarefree_ideal(ideal);
    let mut entries = BTreeMap::new();
    for w in lcm_lattice(ideal) {
        let inside: BTreeSet<usize> = w.support().collect();
        let restricted = complex.induced(&inside);
        let ranks = reduced_homology_ranks(field, &restricted);
        for i in 0..=inside.len() {
            let h = inside.len() as i64 - i as i64 - 2;
            let idx = h + 1;
            if idx < 0 || idx as usize >= ranks.len() {
                continue;
            }
            let rank = ranks[idx as usize];
            if rank > 0 {
                entries.insert((i, w.exps().to_vec()), rank);
            }
        }
    }
    BettiTable { num_vars: n, entries }
}

fn binomial(n: i64, k: i64) -> usize {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for t in 0..k {
        acc = acc * (n - t) / (t + 1);
    }
    acc as usize
}

/// Hilbert function of the local cohomology `H^i_m(S/I)` of a squarefree
/// quotient, carried by the Z-graded Betti numbers of the Alexander dual.
#[derive(Clone, Debug)]
pub struct LocalCohomology {
    num_vars: usize,
    dual_graded: BTreeMap<(usize, i64), usize>,
}

impl LocalCohomology {
    pub fn new<F: Field>(field: &F, ideal: &MonomialIdeal) -> Self {
        assert!(ideal.is_squarefree(), "local cohomology route needs squarefree input");
        let dual = ideal.alexander_dual();
        let table = betti_squarefree(field, &dual);
        LocalCohomology { num_vars: ideal.num_vars(), dual_graded: table.graded() }
    }

    fn dual_beta(&self, i: i64, j: i64) -> usize {
        if i < 0 {
            return 0;
        }
        self.dual_graded.get(&(i as usize, j)).copied().unwrap_or(0)
    }

    /// `dim_K H^i_m(S/I)_deg`.
    pub fn dim(&self, i: usize, deg: i64) -> usize {
        let n = self.num_vars as i64;
        if deg > 0 {
            return 0;
        }
        if deg == 0 {
            return self.dual_beta(i as i64, n);
        }
        let j = -deg;
        let mut total = 0usize;
        for v in 1..=j.min(i as i64) {
            total += binomial(j - 1, v - 1) * self.dual_beta(i as i64 - v, n - v);
        }
        total
    }
}

pub fn local_cohomology_hilbert<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    i: usize,
    deg: i64,
) -> usize {
    LocalCohomology::new(field, ideal).dim(i, deg)
}

/// Regularity, projective dimension, and extremal corners of the ideal.
pub fn homological_invariants<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
) -> (Option<i64>, Option<usize>, Vec<(usize, i64, usize)>) {
    let table = betti_squarefree(field, ideal);
    (table.regularity(), table.projective_dimension(), table.extremal())
}

/// Reisner's criterion: the quotient by the squarefree ideal is
/// Cohen-Macaulay over `field` exactly when every link in its complex has
/// reduced homology only in top dimension.
pub fn reisner_cm<F: Field>(field: &F, ideal: &MonomialIdeal) -> bool {
    assert!(ideal.is_squarefree(), "Reisner needs a squarefree ideal");
    if ideal.is_unit() {
        return true;
    }
    let complex = SimplicialComplex::from_squarefree_ideal(ideal);
    for face in complex.faces() {
        let link = complex.link(&face);
        let Some(d) = link.dim() else { continue };
        let ranks = reduced_homology_ranks(field, &link);
        for i in -1..d {
            if ranks[(i + 1) as usize] != 0 {
                return false;
            }
        }
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyMismatch {
    pub i: usize,
    pub degree: i64,
    pub ideal_dim: usize,
    pub gin_dim: usize,
}

#[derive(Clone, Debug)]
pub struct ConjectureReport {
    pub gin: MonomialIdeal,
    /// Inclusive degree window the cohomology tables were compared on.
    pub window: (i64, i64),
    pub cohomology_equal: bool,
    pub extremal_equal: bool,
    pub mismatches: Vec<CohomologyMismatch>,
}

impl ConjectureReport {
    pub fn holds(&self) -> bool {
        self.cohomology_equal && self.extremal_equal
    }
}

#[derive(Clone, Debug)]
pub enum ConjectureError {
    /// The gin is not squarefree, so the input was not CS.
    NotCartwrightSturmfels { gin: MonomialIdeal },
    Gin(GinError),
}

impl fmt::Display for ConjectureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConjectureError::NotCartwrightSturmfels { .. } => {
                write!(f, "input ideal is not Cartwright-Sturmfels")
            }
            ConjectureError::Gin(e) => write!(f, "{e}"),
        }
    }
}

/// For a squarefree CS monomial ideal, compares the Z-graded local
/// cohomology Hilbert functions of `S/I` and `S/gin(I)` on the window
/// `[-(N + pd), pd]` and their extremal Betti numbers.
pub fn conjecture_check_monomial<F: Field>(
    field: &F,
    ideal: &MonomialIdeal,
    seeds: &[u64],
) -> Result<ConjectureReport, ConjectureError> {
    assert!(ideal.is_squarefree(), "conjecture check needs a squarefree ideal");
    let n = ideal.num_vars();
    let seeds = if seeds.is_empty() { &DEFAULT_SEEDS[..] } else { seeds };
    let poly_ideal = ideal.to_ideal(field.clone());
    let g = gin(&poly_ideal, &TermOrder::ambient(n), seeds).map_err(ConjectureError::Gin)?;
    if !g.gin.is_squarefree() {
        return Err(ConjectureError::NotCartwrightSturmfels { gin: g.gin });
    }

    let betti_i = betti_squarefree(field, ideal);
    let betti_g = betti_squarefree(field, &g.gin);
    let pd_quotient = betti_i
        .projective_dimension()
        .max(betti_g.projective_dimension())
        .map_or(0, |p| p as i64 + 1);
    let window = (-(n as i64 + pd_quotient), pd_quotient);

    let lc_i = LocalCohomology::new(field, ideal);
    let lc_g = LocalCohomology::new(field, &g.gin);
    let mut mismatches = Vec::new();
    for i in 0..=n {
        for deg in window.0..=window.1 {
            let a = lc_i.dim(i, deg);
            let b = lc_g.dim(i, deg);
            if a != b {
                mismatches.push(CohomologyMismatch { i, degree: deg, ideal_dim: a, gin_dim: b });
            }
        }
    }
    let extremal_equal = betti_i.extremal() == betti_g.extremal();
    Ok(ConjectureReport {
        gin: g.gin,
        window,
        cohomology_equal: mismatches.is_empty(),
        extremal_equal,
        mismatches,
    })
}

/// `K_{S/I}(z) = sum_{i,a} (-1)^i beta_{i,a}(S/I) z^a` relates the Betti
/// table to the Hilbert numerator in the fine grading (one block per
/// variable).  Exposed for cross-checks.
pub fn k_polynomial_from_betti(table: &BettiTable) -> LaurentPoly {
    let n = table.num_vars;
    let mut acc = LaurentPoly::one(n);
    for ((i, a), &b) in &table.entries {
        let exps: Vec<i64> = a.iter().map(|&e| e as i64).collect();
        // beta_{i}(I) sits in homological degree i+1 of S/I.
        let sign = if i % 2 == 0 { -1 } else { 1 };
        acc = acc.add(&LaurentPoly::monomial(exps, sign * b as i64));
    }
    acc
}
