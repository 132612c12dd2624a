//! Block-graded polynomial ring descriptions.
//!
//! A [`BlockShape`] partitions the variables `x_{i,j}` into `n` blocks of
//! sizes `d_1, ..., d_n`; the variable `x_{i,j}` has multidegree `e_i` in
//! `Z^n`.  Within a block, `x_{i,1}` is the most significant variable.  A
//! [`BlockRing`] pairs a shape with a coefficient field.
//!
//! Shapes carry display names and parse aliases for the variables, but those
//! are presentation only: equality of shapes (and hence of rings, monomials
//! attached to them, and polynomials) depends on the block sizes alone.

use crate::field::Field;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct BlockShape {
    sizes: Vec<u32>,
    starts: Vec<usize>,
    num_vars: usize,
    names: Vec<String>,
    alias: BTreeMap<String, usize>,
}

impl PartialEq for BlockShape {
    fn eq(&self, other: &Self) -> bool {
        self.sizes == other.sizes
    }
}
impl Eq for BlockShape {}

impl BlockShape {
    /// Shape with canonical names `x<i>_<j>` (blocks and positions 1-based).
    pub fn new(sizes: &[u32]) -> Arc<Self> {
        assert!(!sizes.is_empty(), "ring needs at least one block");
        assert!(sizes.iter().all(|&d| d >= 1), "empty block");
        let mut starts = Vec::with_capacity(sizes.len());
        let mut num_vars = 0usize;
        for &d in sizes {
            starts.push(num_vars);
            num_vars += d as usize;
        }
        let mut names = Vec::with_capacity(num_vars);
        let mut alias = BTreeMap::new();
        for (i, &d) in sizes.iter().enumerate() {
            for j in 0..d as usize {
                let name = format!("x{}_{}", i + 1, j + 1);
                alias.insert(name.clone(), starts[i] + j);
                names.push(name);
            }
        }
        Arc::new(BlockShape { sizes: sizes.to_vec(), starts, num_vars, names, alias })
    }

    /// Renames variable `v` to `name`; the canonical `x<i>_<j>` alias stays
    /// valid for parsing.
    pub fn with_aliases(self: &Arc<Self>, renames: &[(usize, &str)]) -> Arc<Self> {
        let mut shape = (**self).clone();
        for &(v, name) in renames {
            assert!(v < shape.num_vars);
            shape.names[v] = String::from(name);
            shape.alias.insert(String::from(name), v);
        }
        Arc::new(shape)
    }

    pub fn num_blocks(&self) -> usize {
        self.sizes.len()
    }
    pub fn num_vars(&self) -> usize {
        self.num_vars
    }
    pub fn block_sizes(&self) -> &[u32] {
        &self.sizes
    }

    /// Block containing variable `v`.
    pub fn block_of(&self, v: usize) -> usize {
        debug_assert!(v < self.num_vars);
        match self.starts.binary_search(&v) {
            Ok(i) => i,
            Err(i) => i - 1,
        }
    }

    /// Global index of the `j`-th variable (0-based) of block `i`.
    pub fn var(&self, block: usize, j: usize) -> usize {
        debug_assert!(j < self.sizes[block] as usize);
        self.starts[block] + j
    }

    pub fn block_start(&self, block: usize) -> usize {
        self.starts[block]
    }

    /// Variables of block `i` in order of significance.
    pub fn block_vars(&self, block: usize) -> impl Iterator<Item = usize> + '_ {
        let s = self.starts[block];
        s..s + self.sizes[block] as usize
    }

    pub fn var_name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.alias.get(name).copied()
    }

    /// Shape with one extra size-1 block appended; used internally for tag
    /// variables in colon and intersection computations.
    pub fn with_tag_block(&self) -> Arc<BlockShape> {
        let mut sizes = self.sizes.clone();
        sizes.push(1);
        let shape = BlockShape::new(&sizes);
        let renames: Vec<(usize, &str)> = self
            .names
            .iter()
            .enumerate()
            .map(|(v, n)| (v, n.as_str()))
            .collect();
        let shape = shape.with_aliases(&renames);
        shape.with_aliases(&[(self.num_vars, "t_elim")])
    }
}

#[derive(Clone, Debug)]
pub struct BlockRing<F: Field> {
    shape: Arc<BlockShape>,
    field: F,
}

impl<F: Field> PartialEq for BlockRing<F> {
    fn eq(&self, other: &Self) -> bool {
        self.shape == other.shape && self.field == other.field
    }
}
impl<F: Field> Eq for BlockRing<F> {}

pub type RingRef<F> = Arc<BlockRing<F>>;

impl<F: Field> BlockRing<F> {
    pub fn new(field: F, sizes: &[u32]) -> RingRef<F> {
        Arc::new(BlockRing { shape: BlockShape::new(sizes), field })
    }

    pub fn with_shape(field: F, shape: Arc<BlockShape>) -> RingRef<F> {
        Arc::new(BlockRing { shape, field })
    }

    pub fn shape(&self) -> &Arc<BlockShape> {
        &self.shape
    }
    pub fn field(&self) -> &F {
        &self.field
    }
    pub fn num_vars(&self) -> usize {
        self.shape.num_vars()
    }
    pub fn num_blocks(&self) -> usize {
        self.shape.num_blocks()
    }
}

/// Two polynomials may interoperate only when their rings agree; callers get
/// a panic with both shapes otherwise.
pub fn assert_same_ring<F: Field>(a: &RingRef<F>, b: &RingRef<F>) {
    if !Arc::ptr_eq(a, b) {
        assert_eq!(
            **a, **b,
            "ring mismatch: {:?} vs {:?}",
            a.shape().block_sizes(),
            b.shape().block_sizes()
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rationals;

    #[test]
    fn block_layout() {
        let shape = BlockShape::new(&[3, 2, 4]);
        assert_eq!(shape.num_vars(), 9);
        assert_eq!(shape.block_of(0), 0);
        assert_eq!(shape.block_of(2), 0);
        assert_eq!(shape.block_of(3), 1);
        assert_eq!(shape.block_of(5), 2);
        assert_eq!(shape.var(2, 3), 8);
        assert_eq!(shape.var_name(3), "x2_1");
        assert_eq!(shape.lookup("x2_1"), Some(3));
    }

    #[test]
    fn aliases_do_not_affect_equality() {
        let a = BlockShape::new(&[2, 2]);
        let b = a.with_aliases(&[(0, "x1"), (1, "y1"), (2, "x2"), (3, "y2")]);
        assert_eq!(*a, *b);
        assert_eq!(b.lookup("y2"), Some(3));
        assert_eq!(b.lookup("x1_1"), Some(0));
        assert_eq!(b.var_name(1), "y1");
    }

    #[test]
    fn tag_block_extension() {
        let ring = BlockRing::new(Rationals, &[2, 1]);
        let ext = ring.shape().with_tag_block();
        assert_eq!(ext.num_blocks(), 3);
        assert_eq!(ext.num_vars(), 4);
        assert_eq!(ext.lookup("t_elim"), Some(3));
        assert_eq!(ext.lookup("x1_2"), Some(1));
    }
}
