use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::domain;
use crate::linalg::{rat_one, rat_zero, Rat};
use crate::Result;

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

/// Result of reduced row echelon elimination.
#[derive(Debug, Clone)]
pub struct Rref {
    pub matrix: RatMatrix,
    pub rank: usize,
    /// Pivot column (0-indexed) of each of the first `rank` rows, strictly increasing.
    pub pivots: Vec<usize>,
}

impl RatMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![rat_zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = rat_one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Self {
        let r = rows.len();
        let mut data = Vec::with_capacity(r * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row);
        }
        RatMatrix { rows: r, cols, data }
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        RatMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| crate::linalg::rat(x)).collect())
                .collect(),
            cols,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = RatMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in matrix product");
        let mut out = RatMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a * b;
                        out[(i, j)] += prod;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in matrix-vector product");
        let mut out = vec![rat_zero(); self.rows];
        for (j, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for i in 0..self.rows {
                let a = &self[(i, j)];
                if !a.is_zero() {
                    out[i] += a * x;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> RatMatrix {
        let data = self.data.iter().map(|a| -a.clone()).collect();
        RatMatrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn stack(&self, below: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, below.cols, "column mismatch in stack");
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        RatMatrix { rows: self.rows + below.rows, cols: self.cols, data }
    }

    /// Horizontal concatenation `[self | right]`.
    pub fn augment(&self, right: &RatMatrix) -> RatMatrix {
        assert_eq!(self.rows, right.rows, "row mismatch in augment");
        let cols = self.cols + right.cols;
        let mut out = RatMatrix::zero(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..right.cols {
                out[(i, self.cols + j)] = right[(i, j)].clone();
            }
        }
        out
    }

    /// Reduced row echelon form by fraction-free elimination: each row is
    /// cleared to integers, forward and back elimination use cross
    /// multiplication with exact integer division by the previous pivot, and
    /// rows are normalized to leading 1 at the very end.
    pub fn rref(&self) -> Rref {
        let rows = self.rows;
        let cols = self.cols;
        // Integer working copy: scale each row by the lcm of denominators.
        let mut m: Vec<Vec<BigInt>> = (0..rows)
            .map(|i| {
                let mut lcm = BigInt::one();
                for x in self.row(i) {
                    let d = x.denom();
                    lcm = &lcm / num_bigint_gcd(&lcm, d) * d;
                }
                self.row(i)
                    .iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect()
            })
            .collect();

        let mut pivots = Vec::new();
        let mut prev_pivot = BigInt::one();
        let mut rank = 0;
        for col in 0..cols {
            let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, pr);
            let pivot = m[rank][col].clone();
            for r in 0..rows {
                if r == rank || m[r][col].is_zero() {
                    continue;
                }
                // Bareiss step: row_r := (pivot*row_r - m[r][col]*row_rank) / prev_pivot.
                let factor = m[r][col].clone();
                for c in 0..cols {
                    let val = &pivot * &m[r][c] - &factor * &m[rank][c];
                    debug_assert!((&val % &prev_pivot).is_zero());
                    m[r][c] = val / &prev_pivot;
                }
            }
            prev_pivot = pivot;
            pivots.push(col);
            rank += 1;
            if rank == rows {
                break;
            }
        }

        // Normalize: leading entries to 1, reduce each row by its own gcd first.
        let mut out = RatMatrix::zero(rows, cols);
        for (r, &pc) in pivots.iter().enumerate() {
            let lead = m[r][pc].clone();
            for c in 0..cols {
                if !m[r][c].is_zero() {
                    out[(r, c)] = Ratio::new(m[r][c].clone(), lead.clone());
                }
            }
        }
        Rref { matrix: out, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// JSON-friendly dump: rows of `p` or `p/q` strings.
    pub fn to_string_rows(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(rat_to_string).collect())
            .collect()
    }
}

pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn num_bigint_gcd(a: &BigInt, b: &BigInt) -> BigInt {
    let mut a = a.abs();
    let mut b = b.abs();
    while !b.is_zero() {
        let r = &a % &b;
        a = b;
        b = r;
    }
    if a.is_zero() {
        BigInt::one()
    } else {
        a
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rat;

    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(rat_to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Basis of the kernel `{v : Mv = 0}` as a subspace.
pub fn nullspace(m: &RatMatrix) -> crate::linalg::Subspace {
    let Rref { matrix: r, rank, pivots } = m.rref();
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut basis_rows = Vec::with_capacity(free.len());
    for &fc in &free {
        let mut v = vec![rat_zero(); cols];
        v[fc] = rat_one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -r[(ri, fc)].clone();
        }
        basis_rows.push(v);
    }
    debug_assert_eq!(basis_rows.len(), cols - rank);
    crate::linalg::Subspace::from_vectors(cols, basis_rows)
}

/// Column space of `M` as a subspace of the codomain.
pub fn image(m: &RatMatrix) -> crate::linalg::Subspace {
    let vectors: Vec<Vec<Rat>> = (0..m.cols()).map(|j| m.column(j)).collect();
    crate::linalg::Subspace::from_vectors(m.rows(), vectors)
}

/// Domain-checked entry points mirroring the library surface.
pub fn checked_product(a: &RatMatrix, b: &RatMatrix) -> Result<RatMatrix> {
    if a.cols() != b.rows() {
        return Err(domain(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(a.mul(b))
}
