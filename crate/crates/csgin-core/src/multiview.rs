//! Multiview ideals.
//!
//! A system of full-rank camera matrices `A_1..A_m`, each `d_i x n`, induces
//! a rational map from projective `(n-1)`-space to a product of projective
//! spaces.  The multiview ideal is the kernel of the presentation
//! `x_{ij} -> v_{ij} y_i` of the multigraded coordinate ring of the image
//! closure, where `v_{i1}..v_{id_i}` is the basis of linear forms read off
//! the rows of `A_i`.  Two routes compute it: contraction of the kernel of
//! the degree-forgetting map `x_{ij} -> v_{ij}`, and a graded coordinate
//! change inside the Segre product followed by elimination.

use crate::closure::{maximal_minors, LinearSpace};
use crate::field::Field;
use crate::gin::{is_cs, GinError};
use crate::ideal::Ideal;
use crate::matrix::Mat;
use crate::monomial::Monomial;
use crate::poly::MultiPoly;
use crate::ring::{BlockRing, RingRef};
use crate::rng::SplitMix64;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CameraError {
    RankDeficient { camera: usize },
    ShapeMismatch { camera: usize, cols: usize, n: usize },
}

impl fmt::Display for CameraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CameraError::RankDeficient { camera } => {
                write!(f, "camera {camera} does not have full row rank")
            }
            CameraError::ShapeMismatch { camera, cols, n } => {
                write!(f, "camera {camera} has {cols} columns, expected {n}")
            }
        }
    }
}

/// Full-row-rank camera matrices over a common source space.
#[derive(Clone, Debug)]
pub struct CameraSystem<F: Field> {
    field: F,
    n: usize,
    cameras: Vec<Mat<F>>,
}

impl<F: Field> CameraSystem<F> {
    pub fn new(field: F, n: usize, cameras: Vec<Mat<F>>) -> Result<Self, CameraError> {
        for (i, a) in cameras.iter().enumerate() {
            if a.cols() != n {
                return Err(CameraError::ShapeMismatch { camera: i + 1, cols: a.cols(), n });
            }
            if a.rank() < a.rows() {
                return Err(CameraError::RankDeficient { camera: i + 1 });
            }
        }
        assert!(!cameras.is_empty(), "no cameras");
        assert!(cameras.iter().all(|a| a.rows() > 0), "empty camera");
        Ok(CameraSystem { field, n, cameras })
    }

    /// Uniformly random cameras of the given row counts, resampling any
    /// rank-deficient draw.
    pub fn random(field: F, n: usize, dims: &[usize], seed: u64) -> Self {
        let mut rng = SplitMix64::new(seed);
        let cameras = dims
            .iter()
            .map(|&d| {
                assert!(d <= n, "more rows than columns");
                loop {
                    let rows: Vec<Vec<F::Elem>> = (0..d)
                        .map(|_| (0..n).map(|_| field.sample(&mut rng)).collect())
                        .collect();
                    let m = Mat::new(field.clone(), rows);
                    if m.rank() == d {
                        return m;
                    }
                }
            })
            .collect();
        CameraSystem { field, n, cameras }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn source_dim(&self) -> usize {
        self.n
    }

    pub fn num_cameras(&self) -> usize {
        self.cameras.len()
    }

    pub fn cameras(&self) -> &[Mat<F>] {
        &self.cameras
    }

    pub fn dims(&self) -> Vec<usize> {
        self.cameras.iter().map(Mat::rows).collect()
    }

    /// Ring of the image closure: one block of size `d_i` per camera.
    pub fn image_ring(&self) -> RingRef<F> {
        let sizes: Vec<u32> = self.cameras.iter().map(|a| a.rows() as u32).collect();
        BlockRing::new(self.field.clone(), &sizes)
    }

    /// Kernel of `x_{ij} -> v_{ij}` as rows of coefficients on the stacked
    /// camera rows.
    fn presentation_kernel(&self) -> Vec<Vec<F::Elem>> {
        let total: usize = self.dims().iter().sum();
        let mut stacked = Mat::zero(self.field.clone(), self.n, total);
        let mut col = 0;
        for a in &self.cameras {
            for j in 0..a.rows() {
                for k in 0..self.n {
                    stacked.set(k, col, a.entry(j, k).clone());
                }
                col += 1;
            }
        }
        stacked.kernel()
    }

    /// Multiview ideal as the contraction of the linear kernel: homogenize
    /// the kernel forms blockwise, then cut back to the x-subring.
    pub fn star_route(&self) -> Ideal<F> {
        let blocks: Vec<u32> = self.cameras.iter().map(|a| a.rows() as u32).collect();
        let kernel = self.presentation_kernel();
        let space = LinearSpace::new(self.field.clone(), &blocks, kernel)
            .expect("kernel basis is independent");
        let jstar = space.jstar();
        let shape = space.shape();
        let keep: Vec<usize> = (0..shape.num_blocks())
            .flat_map(|b| {
                let start = shape.block_start(b);
                let size = shape.block_sizes()[b] as usize;
                (0..size - 1).map(move |j| start + j)
            })
            .collect();
        restrict_vars(&jstar, &keep, &self.image_ring())
    }

    /// Multiview ideal through the Segre product: express the rank-one
    /// relations in per-camera coordinates adapted to the row spaces, then
    /// eliminate the coordinates outside the camera rows.
    pub fn segre_route(&self) -> Ideal<F> {
        let f = &self.field;
        let m = self.num_cameras();
        let n = self.n;
        let big = BlockRing::new(f.clone(), &vec![n as u32; m]);
        let shape = big.shape().clone();
        // Per camera, an invertible matrix whose first d_i rows are the
        // camera; its inverse rewrites the Segre coordinates.
        let mut z_rows: Vec<Vec<MultiPoly<F>>> = Vec::new();
        for (i, a) in self.cameras.iter().enumerate() {
            let ext = extend_to_invertible(f, a, n);
            let inv = ext.inverse().expect("extension is invertible");
            let row: Vec<MultiPoly<F>> = (0..n)
                .map(|k| {
                    let mut acc = MultiPoly::zero(big.clone());
                    for j in 0..n {
                        if f.is_zero(inv.entry(k, j)) {
                            continue;
                        }
                        let w = MultiPoly::var(big.clone(), shape.var(i, j));
                        acc = acc.add(&w.scale(inv.entry(k, j)));
                    }
                    acc
                })
                .collect();
            z_rows.push(row);
        }
        let mut minors = Vec::new();
        for i in 0..m {
            for i2 in i + 1..m {
                for k in 0..n {
                    for k2 in k + 1..n {
                        let a = z_rows[i][k].mul(&z_rows[i2][k2]);
                        let b = z_rows[i][k2].mul(&z_rows[i2][k]);
                        minors.push(a.sub(&b));
                    }
                }
            }
        }
        let segre = Ideal::new(big.clone(), minors);
        let mut surplus = Vec::new();
        let mut keep = Vec::new();
        for i in 0..m {
            let d = self.cameras[i].rows();
            for j in 0..n {
                if j < d {
                    keep.push(shape.var(i, j));
                } else {
                    surplus.push(shape.var(i, j));
                }
            }
        }
        let eliminated = segre.eliminate(&surplus);
        restrict_vars(&eliminated, &keep, &self.image_ring())
    }

    /// Whether the multiview ideal is Cartwright-Sturmfels, certified by
    /// the gin engine on the contraction route.
    pub fn is_cs_multiview(&self, seeds: &[u64]) -> Result<bool, GinError> {
        is_cs(&self.star_route(), seeds)
    }
}

/// Extend a full-row-rank matrix to an invertible `n x n` one by appending
/// standard basis rows.
fn extend_to_invertible<F: Field>(field: &F, a: &Mat<F>, n: usize) -> Mat<F> {
    let mut rows: Vec<Vec<F::Elem>> = (0..a.rows()).map(|i| a.row(i).to_vec()).collect();
    for k in 0..n {
        if rows.len() == n {
            break;
        }
        let mut e = vec![field.zero(); n];
        e[k] = field.one();
        rows.push(e);
        if Mat::new(field.clone(), rows.clone()).rank() < rows.len() {
            rows.pop();
        }
    }
    assert_eq!(rows.len(), n, "could not extend to a basis");
    Mat::new(field.clone(), rows)
}

/// Rewrite an ideal supported on `keep` into `target`, sending the t-th
/// kept variable to the t-th target variable.
fn restrict_vars<F: Field>(src: &Ideal<F>, keep: &[usize], target: &RingRef<F>) -> Ideal<F> {
    assert_eq!(keep.len(), target.num_vars());
    let src_vars = src.ring().num_vars();
    let gens = src
        .gens()
        .iter()
        .map(|g| {
            let terms: Vec<(Monomial, F::Elem)> = g
                .terms()
                .map(|(mono, c)| {
                    let exps = mono.exps();
                    let picked: Vec<u32> = keep.iter().map(|&v| exps[v]).collect();
                    let dropped: u32 = (0..src_vars)
                        .filter(|v| !keep.contains(v))
                        .map(|v| exps[v])
                        .sum();
                    assert_eq!(dropped, 0, "generator leaves the kept subring");
                    (Monomial::from_exps(picked), c.clone())
                })
                .collect();
            MultiPoly::from_terms(target.clone(), terms)
        })
        .collect();
    Ideal::new(target.clone(), gens)
}

/// The camera system with the coordinate normalization that makes the
/// multiview ideal the maximal-minor ideal of a generic `m x d` matrix:
/// cameras `1..m-1` pick out consecutive coordinate blocks and the last one
/// is the negated sum, over a source of dimension `(m-1)d`.
pub fn coordinate_example<F: Field>(field: F, m: usize, d: usize) -> CameraSystem<F> {
    assert!(m >= 2, "need at least two cameras");
    let n = (m - 1) * d;
    let mut cameras = Vec::new();
    for j in 0..m - 1 {
        let mut a = Mat::zero(field.clone(), d, n);
        for h in 0..d {
            a.set(h, d * j + h, field.one());
        }
        cameras.push(a);
    }
    let mut last = Mat::zero(field.clone(), d, n);
    for h in 0..d {
        for j in 0..m - 1 {
            last.set(h, d * j + h, field.neg(&field.one()));
        }
    }
    cameras.push(last);
    CameraSystem::new(field, n, cameras).unwrap()
}

/// Maximal minors of the `m x d` matrix of the image-ring variables.
pub fn generic_minor_ideal<F: Field>(ring: &RingRef<F>, m: usize, d: usize) -> Ideal<F> {
    let shape = ring.shape().clone();
    let rows: Vec<Vec<MultiPoly<F>>> = (0..m)
        .map(|i| (0..d).map(|j| MultiPoly::var(ring.clone(), shape.var(i, j))).collect())
        .collect();
    Ideal::new(ring.clone(), maximal_minors(ring, &rows))
}
