use num_traits::Zero;

use crate::error::domain;
use crate::linalg::matrix::nullspace;
use crate::linalg::{rat_zero, Rat, RatMatrix};
use crate::Result;

/// A subspace of `Q^ambient`, stored as a row-reduced echelon basis with
/// strictly increasing pivot columns. Equal subspaces have identical bases,
/// so comparisons are plain equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    /// RREF rows, one basis vector per row.
    basis: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

/// Anything that acts linearly on coordinate vectors. Implemented by dense
/// matrices and by the sparse generator actions of module representations.
pub trait LinearOp {
    fn op_dim(&self) -> usize;
    fn op_apply(&self, v: &[Rat]) -> Vec<Rat>;
}

impl LinearOp for RatMatrix {
    fn op_dim(&self) -> usize {
        self.rows()
    }

    fn op_apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.apply(v)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        let basis = (0..ambient)
            .map(|i| {
                let mut v = vec![rat_zero(); ambient];
                v[i] = crate::linalg::rat_one();
                v
            })
            .collect();
        Subspace { ambient, basis, pivots: (0..ambient).collect() }
    }

    /// Span of arbitrary vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Rat>>) -> Self {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Span of a set of coordinate vectors `e_i`.
    pub fn from_coordinate_set(ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| {
                let mut v = vec![rat_zero(); ambient];
                v[i] = crate::linalg::rat_one();
                v
            })
            .collect();
        Subspace::from_vectors(ambient, vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_rows(&self) -> &[Vec<Rat>] {
        &self.basis
    }

    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.basis.clone(), self.ambient)
    }

    /// Reduces `v` against the basis; returns the residual.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        let mut v = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if !v[p].is_zero() {
                let coef = v[p].clone();
                for (x, b) in v.iter_mut().zip(row) {
                    if !b.is_zero() {
                        *x -= &coef * b;
                    }
                }
            }
        }
        v
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Inserts a vector, keeping the basis in RREF. Returns true if the span grew.
    pub fn insert(&mut self, v: Vec<Rat>) -> bool {
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = v[p].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        // Clear column p from existing rows, then insert sorted by pivot.
        for row in self.basis.iter_mut() {
            if !row[p].is_zero() {
                let coef = row[p].clone();
                for (x, b) in row.iter_mut().zip(&v) {
                    if !b.is_zero() {
                        *x -= &coef * b;
                    }
                }
            }
        }
        let pos = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(pos, p);
        self.basis.insert(pos, v);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut s = self.clone();
        for row in &other.basis {
            s.insert(row.clone());
        }
        Ok(s)
    }

    /// Intersection via the kernel of `[Aᵀ | -Bᵀ]`.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient));
        }
        let at = self.basis_matrix().transpose();
        let bt = other.basis_matrix().transpose().neg();
        let stacked = at.augment(&bt);
        let ker = nullspace(&stacked);
        let mut out = Subspace::zero(self.ambient);
        for coeffs in ker.basis_rows() {
            let mut v = vec![rat_zero(); self.ambient];
            for (i, row) in self.basis.iter().enumerate() {
                if !coeffs[i].is_zero() {
                    for (x, b) in v.iter_mut().zip(row) {
                        if !b.is_zero() {
                            *x += &coeffs[i] * b;
                        }
                    }
                }
            }
            out.insert(v);
        }
        Ok(out)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.basis.iter().all(|v| self.contains_vector(v)))
    }

    pub fn equals(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self == other)
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(domain(format!(
                "ambient dimension mismatch: {} vs {}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

/// Smallest subspace containing `seed` and stable under every operator:
/// the fixed point of one-step expansion. Monotone in the seed, idempotent.
pub fn operator_closure(seed: &Subspace, ops: &[RatMatrix]) -> Result<Subspace> {
    for op in ops {
        if op.rows() != seed.ambient_dim() || op.cols() != seed.ambient_dim() {
            return Err(domain("operator ambient dimension mismatch in closure"));
        }
    }
    let refs: Vec<&RatMatrix> = ops.iter().collect();
    Ok(operator_closure_with(seed, &refs))
}

/// Generic closure used internally with sparse generator actions.
pub fn operator_closure_with<T: LinearOp + ?Sized>(seed: &Subspace, ops: &[&T]) -> Subspace {
    let mut space = seed.clone();
    let mut frontier: Vec<Vec<Rat>> = space.basis_rows().to_vec();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for v in &frontier {
            for op in ops {
                let w = op.op_apply(v);
                let before = space.dim();
                if space.insert(w.clone()) {
                    debug_assert_eq!(space.dim(), before + 1);
                    next.push(w);
                }
            }
        }
        frontier = next;
    }
    space
}
