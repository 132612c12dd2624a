//! Multigraded closures of linear spaces.
//!
//! A space `V` of linear forms in `x_1..x_n`, graded by assigning `a_i` of
//! the variables to block `i`, generates an inhomogeneous ideal `J(V)`.
//! Its multigraded homogenization `J(V)^hom` (adding one `y_i` per block)
//! cuts out the closure of the affine zero locus in a product of projective
//! spaces.  `J(V)^hom` has two determinantal descriptions, a contraction
//! `J*` to the x-subring, and a multidegree read off the column matroid of
//! the basis matrix.
//!
//! Block labels are `1..=u`, matching the aliases `y1..yu`; x-variables are
//! numbered `x1..xn` across all blocks.

use crate::field::Field;
use crate::hilbert::LaurentPoly;
use crate::ideal::Ideal;
use crate::matrix::Mat;
use crate::monideal::{BorelPrime, MonomialIdeal};
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
pub enum ClosureError {
    /// Row `row` of the basis matrix depends linearly on the rows above it.
    RankDeficient { row: usize },
    ShapeMismatch { row_len: usize, num_vars: usize },
}

impl fmt::Display for ClosureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClosureError::RankDeficient { row } => {
                write!(f, "basis row {row} depends on the rows above it")
            }
            ClosureError::ShapeMismatch { row_len, num_vars } => {
                write!(f, "basis rows have {row_len} entries, grading has {num_vars}")
            }
        }
    }
}

/// A space of linear forms with a block grading on its variables.
#[derive(Clone, Debug)]
pub struct LinearSpace<F: Field> {
    field: F,
    blocks: Vec<u32>,
    basis: Mat<F>,
}

impl<F: Field> LinearSpace<F> {
    /// `blocks[i]` is the number of x-variables of degree `e_{i+1}`; each
    /// basis row lists the coefficients of one linear form.
    pub fn new(field: F, blocks: &[u32], rows: Vec<Vec<F::Elem>>) -> Result<Self, ClosureError> {
        let n: usize = blocks.iter().map(|&a| a as usize).sum();
        assert!(blocks.iter().all(|&a| a > 0), "empty grading block");
        for r in &rows {
            if r.len() != n {
                return Err(ClosureError::ShapeMismatch { row_len: r.len(), num_vars: n });
            }
        }
        let basis = Mat::new(field.clone(), rows);
        if let Some(row) = basis.dependent_row() {
            return Err(ClosureError::RankDeficient { row });
        }
        Ok(LinearSpace { field, blocks: blocks.to_vec(), basis })
    }

    pub fn from_i64(field: F, blocks: &[u32], rows: &[&[i64]]) -> Result<Self, ClosureError> {
        let lifted = rows
            .iter()
            .map(|r| r.iter().map(|&c| field.from_i64(c)).collect())
            .collect();
        LinearSpace::new(field, blocks, lifted)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Number of x-variables.
    pub fn num_forms_vars(&self) -> usize {
        self.blocks.iter().map(|&a| a as usize).sum()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat<F> {
        &self.basis
    }

    /// Block of the 1-based x-variable `j`.
    fn block_of_col(&self, j: usize) -> usize {
        let mut acc = 0usize;
        for (b, &a) in self.blocks.iter().enumerate() {
            acc += a as usize;
            if j <= acc {
                return b + 1;
            }
        }
        unreachable!("column outside grading")
    }

    /// Shape with one block per degree: its `a_i` x-variables then `y_i`.
    pub fn shape(&self) -> Arc<BlockShape> {
        let sizes: Vec<u32> = self.blocks.iter().map(|&a| a + 1).collect();
        let shape = BlockShape::new(&sizes);
        let mut names: Vec<(usize, String)> = Vec::new();
        let mut var = 0usize;
        let mut x_label = 0usize;
        for (b, &a) in self.blocks.iter().enumerate() {
            for _ in 0..a {
                x_label += 1;
                names.push((var, format!("x{x_label}")));
                var += 1;
            }
            names.push((var, format!("y{}", b + 1)));
            var += 1;
        }
        let renames: Vec<(usize, &str)> = names.iter().map(|(v, s)| (*v, s.as_str())).collect();
        shape.with_aliases(&renames)
    }

    pub fn ring(&self) -> RingRef<F> {
        BlockRing::with_shape(self.field.clone(), self.shape())
    }

    /// Ring variable of the 1-based x-variable `j`.
    fn x_var(&self, j: usize) -> usize {
        j - 1 + self.block_of_col(j) - 1
    }

    /// Ring variable of the homogenizing variable of 1-based block `b`.
    fn y_var(&self, b: usize) -> usize {
        let xs: usize = self.blocks[..b].iter().map(|&a| a as usize).sum();
        xs + b - 1
    }

    /// The subspace of forms supported on the blocks in `a`, as canonical
    /// coefficient rows.
    pub fn subspace_basis(&self, a: &BTreeSet<usize>) -> Vec<Vec<F::Elem>> {
        assert!(!a.is_empty(), "empty block set");
        let n = self.num_forms_vars();
        let outside: Vec<usize> = (1..=n).filter(|&j| !a.contains(&self.block_of_col(j))).collect();
        let v = self.dim();
        let constraint: Vec<Vec<F::Elem>> = (0..v)
            .map(|i| outside.iter().map(|&j| self.basis.entry(i, j - 1).clone()).collect())
            .collect();
        let coeffs = Mat::new(self.field.clone(), constraint).transpose().kernel();
        let rows: Vec<Vec<F::Elem>> = coeffs
            .iter()
            .map(|c| {
                (0..n)
                    .map(|j| {
                        let mut acc = self.field.zero();
                        for i in 0..v {
                            let p = self.field.mul(&c[i], self.basis.entry(i, j));
                            acc = self.field.add(&acc, &p);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let (reduced, pivots) = Mat::new(self.field.clone(), rows).rref();
        reduced.into_rows().into_iter().take(pivots.len()).collect()
    }

    /// The component of the coefficient row `coeffs` lying in block `b`.
    fn component_poly(&self, ring: &RingRef<F>, coeffs: &[F::Elem], b: usize) -> MultiPoly<F> {
        let mut acc = MultiPoly::zero(ring.clone());
        for (j, c) in coeffs.iter().enumerate() {
            if self.field.is_zero(c) || self.block_of_col(j + 1) != b {
                continue;
            }
            let x = MultiPoly::var(ring.clone(), self.x_var(j + 1));
            acc = acc.add(&x.scale(c));
        }
        acc
    }

    /// Bidiagonal homogenizing matrix: one row per block of `a`, carrying
    /// `y_b` on the diagonal and `-y_b` below it.
    pub fn y_matrix(&self, ring: &RingRef<F>, a: &BTreeSet<usize>) -> Vec<Vec<MultiPoly<F>>> {
        let labels: Vec<usize> = a.iter().copied().collect();
        let k = labels.len();
        labels
            .iter()
            .enumerate()
            .map(|(r, &b)| {
                let y = MultiPoly::var(ring.clone(), self.y_var(b));
                (0..k.saturating_sub(1))
                    .map(|c| {
                        if c == r {
                            y.clone()
                        } else if c + 1 == r {
                            MultiPoly::zero(ring.clone()).sub(&y)
                        } else {
                            MultiPoly::zero(ring.clone())
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Columns are the block components of a basis of the subspace on `a`.
    pub fn m_matrix(&self, ring: &RingRef<F>, a: &BTreeSet<usize>) -> Vec<Vec<MultiPoly<F>>> {
        let sub = self.subspace_basis(a);
        a.iter()
            .map(|&b| sub.iter().map(|row| self.component_poly(ring, row, b)).collect())
            .collect()
    }

    /// The row-graded concatenation `(Y | M)` over the blocks of `a`.
    pub fn x_matrix(&self, ring: &RingRef<F>, a: &BTreeSet<usize>) -> Vec<Vec<MultiPoly<F>>> {
        let y = self.y_matrix(ring, a);
        let m = self.m_matrix(ring, a);
        y.into_iter()
            .zip(m)
            .map(|(yr, mr)| yr.into_iter().chain(mr).collect())
            .collect()
    }

    fn all_blocks(&self) -> BTreeSet<usize> {
        (1..=self.num_blocks()).collect()
    }

    /// Nonempty block sets whose subspace is nonzero.
    fn relevant_subsets(&self) -> Vec<BTreeSet<usize>> {
        let u = self.num_blocks();
        let mut out = Vec::new();
        for mask in 1u64..(1 << u) {
            let a: BTreeSet<usize> = (1..=u).filter(|&b| mask >> (b - 1) & 1 == 1).collect();
            if !self.subspace_basis(&a).is_empty() {
                out.push(a);
            }
        }
        out
    }

    /// Homogenization via the single-matrix route: the maximal minors of
    /// `(Y | M)` over all blocks, cut down by one colon with `y_1...y_u`.
    pub fn jhom_saturation(&self) -> Ideal<F> {
        let ring = self.ring();
        let x = self.x_matrix(&ring, &self.all_blocks());
        let minors = maximal_minors(&ring, &x);
        let ideal = Ideal::new(ring.clone(), minors);
        let mut prod = MultiPoly::one(ring.clone());
        for b in 1..=self.num_blocks() {
            prod = prod.mul(&MultiPoly::var(ring.clone(), self.y_var(b)));
        }
        ideal.colon_poly(&prod)
    }

    /// Homogenization as a sum of minor ideals over all relevant block sets.
    pub fn jhom_determinantal(&self) -> Ideal<F> {
        let ring = self.ring();
        let parts: Vec<Ideal<F>> = self
            .relevant_subsets()
            .iter()
            .map(|a| Ideal::new(ring.clone(), maximal_minors(&ring, &self.x_matrix(&ring, a))))
            .collect();
        Ideal::sum_all(&ring, &parts)
    }

    /// The largest multigraded subideal of `J(V)` inside the x-subring,
    /// generated by the maximal minors of the `M` matrices.
    pub fn jstar(&self) -> Ideal<F> {
        let ring = self.ring();
        let parts: Vec<Ideal<F>> = self
            .relevant_subsets()
            .iter()
            .map(|a| Ideal::new(ring.clone(), maximal_minors(&ring, &self.m_matrix(&ring, a))))
            .collect();
        Ideal::sum_all(&ring, &parts)
    }

    /// Column sets of the basis matrix that index bases of its column
    /// matroid, as 1-based labels.
    pub fn matroid_bases(&self) -> Vec<BTreeSet<usize>> {
        let n = self.num_forms_vars();
        let v = self.dim();
        let mut out = Vec::new();
        for cols in subsets_of_size(n, v) {
            let rows: Vec<Vec<F::Elem>> = (0..v)
                .map(|i| cols.iter().map(|&j| self.basis.entry(i, j).clone()).collect())
                .collect();
            if Mat::new(self.field.clone(), rows).rank() == v {
                out.push(cols.iter().map(|&j| j + 1).collect());
            }
        }
        out
    }

    /// Block degree of a column set.
    pub fn basis_degree(&self, basis: &BTreeSet<usize>) -> Vec<u32> {
        let mut deg = vec![0u32; self.num_blocks()];
        for &j in basis {
            deg[self.block_of_col(j) - 1] += 1;
        }
        deg
    }

    /// The distinct block degrees of the matroid bases.
    pub fn basis_degrees(&self) -> BTreeSet<Vec<u32>> {
        self.matroid_bases().iter().map(|b| self.basis_degree(b)).collect()
    }

    /// The multidegree of `S/J(V)^hom`, one unit term per basis degree.
    pub fn multidegree_matroid(&self) -> LaurentPoly {
        let u = self.num_blocks();
        LaurentPoly::from_terms(
            u,
            self.basis_degrees()
                .into_iter()
                .map(|w| (w.into_iter().map(i64::from).collect(), 1)),
        )
    }

    /// The generic initial ideal of the homogenization, assembled as the
    /// intersection of one Borel prime per basis degree.
    pub fn gin_from_degrees(&self) -> MonomialIdeal {
        let shape = self.shape();
        let primes: Vec<MonomialIdeal> = self
            .basis_degrees()
            .into_iter()
            .map(|w| BorelPrime::new(&shape, w).to_monomial_ideal(&shape))
            .collect();
        MonomialIdeal::intersect_all(&shape, &primes)
    }
}

/// Determinant of a square polynomial matrix by Laplace expansion.
pub fn poly_det<F: Field>(ring: &RingRef<F>, m: &[Vec<MultiPoly<F>>]) -> MultiPoly<F> {
    let k = m.len();
    if k == 0 {
        return MultiPoly::one(ring.clone());
    }
    assert!(m.iter().all(|r| r.len() == k), "nonsquare matrix");
    if k == 1 {
        return m[0][0].clone();
    }
    let mut acc = MultiPoly::zero(ring.clone());
    for j in 0..k {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly<F>>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&poly_det(ring, &minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// All maximal minors of a `k x m` polynomial matrix, `m >= k` or empty.
pub fn maximal_minors<F: Field>(
    ring: &RingRef<F>,
    rows: &[Vec<MultiPoly<F>>],
) -> Vec<MultiPoly<F>> {
    let k = rows.len();
    let m = rows.first().map_or(0, Vec::len);
    if m < k {
        return Vec::new();
    }
    subsets_of_size(m, k)
        .into_iter()
        .map(|cols| {
            let square: Vec<Vec<MultiPoly<F>>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| r[c].clone()).collect())
                .collect();
            poly_det(ring, &square)
        })
        .collect()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.clone());
        let Some(pos) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return out;
        };
        idx[pos] += 1;
        for i in pos + 1..k {
            idx[i] = idx[i - 1] + 1;
        }
    }
}
