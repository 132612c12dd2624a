//! Binomial edge ideals.
//!
//! A graph `G` on `[n]` defines `J_G = (x_i y_j - x_j y_i : {i,j} edge)` in
//! the ring with one size-2 block `{x_i, y_i}` per vertex.  Its multigraded
//! generic initial ideal has a purely combinatorial description: one
//! squarefree generator `x_i x_j prod y_a` per simple path from `i` to `j`
//! with interior vertices `a`, and one minimal prime `U_{T,E}` per
//! admissible vertex set `T` and choice `E` of one vertex in each connected
//! component of the induced subgraph `G_T`.
//!
//! Vertices are labelled `1..=n` as in the variable aliases `x1, y1, ...`.

use crate::field::Field;
use crate::ideal::Ideal;
use crate::monideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::ring::{BlockRing, BlockShape, RingRef};
use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    LoopEdge { v: usize },
    VertexOutOfRange { v: usize, n: usize },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::LoopEdge { v } => write!(f, "loop at vertex {v}"),
            GraphError::VertexOutOfRange { v, n } => {
                write!(f, "vertex {v} outside 1..={n}")
            }
        }
    }
}

impl Graph {
    /// Graph on vertices `1..=n`; parallel copies of an edge collapse.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for &(a, b) in edges {
            for v in [a, b] {
                if v < 1 || v > n {
                    return Err(GraphError::VertexOutOfRange { v, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge { v: a });
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph { n, edges: set })
    }

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
        edges.push((n, 1));
        Graph::new(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 1..=n {
            for j in i + 1..=n {
                edges.push((i, j));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// `K_{a,b}` with parts `1..=a` and `a+1..=a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 1..=a {
            for j in a + 1..=a + b {
                edges.push((i, j));
            }
        }
        Graph::new(a + b, &edges).unwrap()
    }

    /// Star with `leaves` edges: center `1`, leaves `2..=leaves+1`.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (2..=leaves + 1).map(|v| (1, v)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (1..=self.n).filter(|&u| self.has_edge(u, v)).collect()
    }

    /// Connected components of the induced subgraph on `t`.
    pub fn components(&self, t: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut seen: BTreeSet<usize> = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in t {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if !comp.insert(v) {
                    continue;
                }
                seen.insert(v);
                for u in self.neighbors(v) {
                    if t.contains(&u) && !comp.contains(&u) {
                        stack.push(u);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges.iter().map(|(a, b)| format!("{a}{b}")).collect();
        write!(f, "graph(n={}; {})", self.n, parts.join(" "))
    }
}

/// Shape with one `{x_i, y_i}` block per vertex.
pub fn edge_shape(n: usize) -> Arc<BlockShape> {
    let shape = BlockShape::new(&vec![2; n]);
    let names: Vec<(usize, String)> = (0..n)
        .flat_map(|i| {
            [(2 * i, format!("x{}", i + 1)), (2 * i + 1, format!("y{}", i + 1))]
        })
        .collect();
    let renames: Vec<(usize, &str)> = names.iter().map(|(v, s)| (*v, s.as_str())).collect();
    shape.with_aliases(&renames)
}

pub fn edge_ring<F: Field>(field: F, n: usize) -> RingRef<F> {
    BlockRing::with_shape(field, edge_shape(n))
}

fn x_var(i: usize) -> usize {
    2 * (i - 1)
}

fn y_var(i: usize) -> usize {
    2 * (i - 1) + 1
}

/// `J_G`, generated by the `2x2` minors picked out by the edges.
pub fn binomial_edge_ideal<F: Field>(ring: &RingRef<F>, g: &Graph) -> Ideal<F> {
    assert_eq!(ring.num_blocks(), g.num_vertices(), "ring/graph size mismatch");
    let gens = g
        .edges()
        .map(|(i, j)| {
            let term = |a: usize, b: usize| {
                MultiPoly::var(ring.clone(), x_var(a)).mul(&MultiPoly::var(ring.clone(), y_var(b)))
            };
            term(i, j).sub(&term(j, i))
        })
        .collect();
    Ideal::new(ring.clone(), gens)
}

/// The combinatorial generic initial ideal: for every simple path
/// `i, a_1, ..., a_v, j` the monomial `x_i x_j y_{a_1} ... y_{a_v}`,
/// minimalized.  Exponential in the graph size.
pub fn path_gin(g: &Graph) -> MonomialIdeal {
    let n = g.num_vertices();
    let shape = edge_shape(n);
    let mut gens: Vec<Monomial> = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    for start in 1..=n {
        path.push(start);
        collect_paths(g, start, &mut path, &mut gens);
        path.pop();
    }
    MonomialIdeal::new(shape, gens)
}

fn collect_paths(g: &Graph, start: usize, path: &mut Vec<usize>, out: &mut Vec<Monomial>) {
    let last = *path.last().unwrap();
    for next in g.neighbors(last) {
        if path.contains(&next) {
            continue;
        }
        // Each endpoint pair is seen once: only paths ending above their
        // start are recorded, and the monomial is symmetric in the ends.
        if next > start {
            let mut exps = vec![0u32; 2 * g.num_vertices()];
            exps[x_var(start)] = 1;
            exps[x_var(next)] = 1;
            for &a in &path[1..] {
                exps[y_var(a)] = 1;
            }
            out.push(Monomial::from_exps(exps));
        }
        path.push(next);
        collect_paths(g, start, path, out);
        path.pop();
    }
}

/// Minimal primes of the path gin: for every `T` such that each outside
/// vertex ties together at least two components of `G_T`, and every choice
/// `E` of one vertex per component, the prime
/// `(x_i : i in T - E) + (x_i, y_i : i not in T)`.
pub fn gin_minimal_primes(g: &Graph) -> Vec<MonomialIdeal> {
    let n = g.num_vertices();
    let shape = edge_shape(n);
    let mut primes = Vec::new();
    for mask in 0u64..(1 << n) {
        let t: BTreeSet<usize> = (1..=n).filter(|&v| mask >> (v - 1) & 1 == 1).collect();
        let comps = g.components(&t);
        let admissible = (1..=n).filter(|v| !t.contains(v)).all(|v| {
            let mut grown = t.clone();
            grown.insert(v);
            g.components(&grown).len() < comps.len()
        });
        if !admissible {
            continue;
        }
        let mut picks: Vec<Vec<usize>> = vec![Vec::new()];
        for comp in &comps {
            picks = picks
                .into_iter()
                .flat_map(|e| {
                    comp.iter().map(move |&v| {
                        let mut e2 = e.clone();
                        e2.push(v);
                        e2
                    })
                })
                .collect();
        }
        for e in picks {
            let chosen: BTreeSet<usize> = e.into_iter().collect();
            let mut vars = Vec::new();
            for v in 1..=n {
                if t.contains(&v) {
                    if !chosen.contains(&v) {
                        vars.push(x_var(v));
                    }
                } else {
                    vars.push(x_var(v));
                    vars.push(y_var(v));
                }
            }
            primes.push(MonomialIdeal::variable_prime(shape.clone(), &vars));
        }
    }
    primes.sort_by_key(|p| {
        let mut vars: Vec<usize> = p.gens().iter().flat_map(|m| m.support()).collect();
        vars.sort_unstable();
        (vars.len(), vars)
    });
    primes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::PrimeField;
    use crate::gin::{gin, is_cs, DEFAULT_SEEDS};
    use crate::order::TermOrder;
    use crate::parse::parse_poly;

    fn mono(shape: &Arc<BlockShape>, text: &str) -> Monomial {
        let ring = BlockRing::with_shape(PrimeField::default_prime(), shape.clone());
        let p = parse_poly(&ring, text).unwrap();
        p.lead_ambient().unwrap().0.clone()
    }

    fn mon_ideal(shape: &Arc<BlockShape>, gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::new(shape.clone(), gens.iter().map(|s| mono(shape, s)).collect())
    }

    #[test]
    fn graph_validation() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::LoopEdge { v: 1 }));
        assert_eq!(
            Graph::new(3, &[(1, 4)]),
            Err(GraphError::VertexOutOfRange { v: 4, n: 3 })
        );
        let g = Graph::new(3, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(g.num_edges(), 1);
    }

    #[test]
    fn edge_ring_aliases() {
        let shape = edge_shape(3);
        assert_eq!(shape.lookup("x1"), Some(0));
        assert_eq!(shape.lookup("y1"), Some(1));
        assert_eq!(shape.lookup("x3"), Some(4));
        assert_eq!(shape.lookup("y3"), Some(5));
        assert_eq!(shape.block_sizes(), &[2, 2, 2]);
    }

    #[test]
    fn edge_ideal_generators() {
        let r = edge_ring(PrimeField::default_prime(), 2);
        let g = Graph::new(2, &[(1, 2)]).unwrap();
        let j = binomial_edge_ideal(&r, &g);
        let expected = Ideal::parse(&r, "x1*y2 - x2*y1").unwrap();
        assert!(j.equals(&expected));

        let k3 = Graph::complete(3);
        let r3 = edge_ring(PrimeField::default_prime(), 3);
        assert_eq!(binomial_edge_ideal(&r3, &k3).gens().len(), 3);
    }

    #[test]
    fn path_gin_small_graphs() {
        let single = Graph::new(2, &[(1, 2)]).unwrap();
        assert_eq!(path_gin(&single), mon_ideal(&edge_shape(2), &["x1*x2"]));

        let p3 = Graph::path(3);
        assert_eq!(
            path_gin(&p3),
            mon_ideal(&edge_shape(3), &["x1*x2", "x2*x3", "x1*x3*y2"])
        );

        // Length-2 path monomials of the triangle are absorbed by its edges.
        let k3 = Graph::complete(3);
        assert_eq!(
            path_gin(&k3),
            mon_ideal(&edge_shape(3), &["x1*x2", "x1*x3", "x2*x3"])
        );
    }

    #[test]
    fn admissible_set_primes() {
        let single = Graph::new(2, &[(1, 2)]).unwrap();
        let shape2 = edge_shape(2);
        assert_eq!(
            gin_minimal_primes(&single),
            vec![mon_ideal(&shape2, &["x1"]), mon_ideal(&shape2, &["x2"])]
        );

        let p3 = Graph::path(3);
        let shape3 = edge_shape(3);
        assert_eq!(
            gin_minimal_primes(&p3),
            vec![
                mon_ideal(&shape3, &["x1", "x2"]),
                mon_ideal(&shape3, &["x1", "x3"]),
                mon_ideal(&shape3, &["x2", "y2"]),
                mon_ideal(&shape3, &["x2", "x3"]),
            ]
        );

        let k3 = Graph::complete(3);
        assert_eq!(
            gin_minimal_primes(&k3),
            vec![
                mon_ideal(&edge_shape(3), &["x1", "x2"]),
                mon_ideal(&edge_shape(3), &["x1", "x3"]),
                mon_ideal(&edge_shape(3), &["x2", "x3"]),
            ]
        );
    }

    #[test]
    fn primes_intersect_to_the_path_gin() {
        for g in [Graph::path(3), Graph::path(4), Graph::complete(3), Graph::cycle(4)] {
            let shape = edge_shape(g.num_vertices());
            let meet = MonomialIdeal::intersect_all(&shape, &gin_minimal_primes(&g));
            assert_eq!(meet, path_gin(&g), "{g}");
        }
    }

    #[test]
    fn engine_gin_matches_the_path_formula() {
        for g in [Graph::path(3), Graph::complete(3)] {
            let r = edge_ring(PrimeField::default_prime(), g.num_vertices());
            let j = binomial_edge_ideal(&r, &g);
            let result = gin(&j, &TermOrder::ambient(r.num_vars()), &DEFAULT_SEEDS).unwrap();
            assert_eq!(result.gin, path_gin(&g), "{g}");
            assert!(is_cs(&j, &DEFAULT_SEEDS).unwrap());
        }
    }

    #[test]
    fn x_first_basis_of_the_relabelled_path() {
        // Path 1-3-2: the x-first order gives sharing leading terms and a
        // third basis element of degree (1,1,1).
        let g = Graph::new(3, &[(1, 3), (2, 3)]).unwrap();
        let r = edge_ring(PrimeField::default_prime(), 3);
        let j = binomial_edge_ideal(&r, &g);
        let x_first = TermOrder::grevlex_permuted(6, vec![0, 2, 4, 1, 3, 5]);
        let gb = j.groebner_basis(&x_first);
        assert_eq!(gb.len(), 3);
        let cubic = gb
            .iter()
            .find(|f| f.block_degree() == Some(vec![1, 1, 1]))
            .expect("no degree-(1,1,1) element");
        assert_eq!(cubic.num_terms(), 2);

        // The standard path has coprime x-first leading terms instead.
        let p3 = Graph::path(3);
        let jp = binomial_edge_ideal(&r, &p3);
        assert_eq!(jp.groebner_basis(&x_first).len(), 2);
    }

    #[test]
    fn membership_needs_the_y_multiplier() {
        let r = edge_ring(PrimeField::default_prime(), 3);
        let j = binomial_edge_ideal(&r, &Graph::path(3));
        let d13 = parse_poly(&r, "x1*y3 - x3*y1").unwrap();
        assert!(!j.contains(&d13));
        let y2 = parse_poly(&r, "y2").unwrap();
        assert!(j.contains(&d13.mul(&y2)));
    }
}
