use num_traits::Zero;

use crate::linalg::{rat, rat_zero, LinearOp, Rat, RatMatrix};

/// One generator's action on a module. Tableau modules have at most one
/// nonzero per column with value ±1, which `Unit` stores directly; induced
/// sub/quotient representations fall back to dense rational matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    /// `cols[j] = Some((i, s))` means basis vector `j` maps to `s · e_i`;
    /// `None` means it maps to zero.
    Unit { dim: usize, cols: Vec<Option<(usize, i8)>> },
    Dense(RatMatrix),
}

impl Action {
    pub fn identity(dim: usize) -> Action {
        Action::Unit { dim, cols: (0..dim).map(|i| Some((i, 1))).collect() }
    }

    pub fn dim(&self) -> usize {
        match self {
            Action::Unit { dim, .. } => *dim,
            Action::Dense(m) => m.rows(),
        }
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        match self {
            Action::Unit { dim, cols } => {
                let mut out = vec![rat_zero(); *dim];
                for (j, col) in cols.iter().enumerate() {
                    if v[j].is_zero() {
                        continue;
                    }
                    if let Some((i, s)) = col {
                        let term = if *s >= 0 { v[j].clone() } else { -v[j].clone() };
                        out[*i] += term;
                    }
                }
                out
            }
            Action::Dense(m) => m.apply(v),
        }
    }

    /// Image of the `j`-th basis vector as a sparse column.
    pub fn column_image(&self, j: usize) -> Vec<(usize, Rat)> {
        match self {
            Action::Unit { cols, .. } => match cols[j] {
                Some((i, s)) => vec![(i, rat(s as i64))],
                None => vec![],
            },
            Action::Dense(m) => (0..m.rows())
                .filter(|&i| !m[(i, j)].is_zero())
                .map(|i| (i, m[(i, j)].clone()))
                .collect(),
        }
    }

    /// Operator composition `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Action) -> Action {
        match (self, other) {
            (Action::Unit { dim, cols: a }, Action::Unit { cols: b, .. }) => {
                let cols = b
                    .iter()
                    .map(|col| {
                        col.and_then(|(mid, s1)| a[mid].map(|(end, s2)| (end, s1 * s2)))
                    })
                    .collect();
                Action::Unit { dim: *dim, cols }
            }
            _ => Action::Dense(self.to_matrix().mul(&other.to_matrix())),
        }
    }

    pub fn to_matrix(&self) -> RatMatrix {
        match self {
            Action::Unit { dim, cols } => {
                let mut m = RatMatrix::zero(*dim, *dim);
                for (j, col) in cols.iter().enumerate() {
                    if let Some((i, s)) = col {
                        m[(*i, j)] = rat(*s as i64);
                    }
                }
                m
            }
            Action::Dense(m) => m.clone(),
        }
    }

    /// `self + λ·id`, used to pass between the two generator presentations.
    pub fn plus_scalar_identity(&self, lambda: i64) -> Action {
        let id = RatMatrix::identity(self.dim());
        let mut m = self.to_matrix();
        for i in 0..self.dim() {
            m[(i, i)] = &m[(i, i)] + &id[(i, i)] * rat(lambda);
        }
        if let Some(unit) = to_unit(&m) {
            unit
        } else {
            Action::Dense(m)
        }
    }

    pub fn negate(&self) -> Action {
        match self {
            Action::Unit { dim, cols } => Action::Unit {
                dim: *dim,
                cols: cols.iter().map(|c| c.map(|(i, s)| (i, -s))).collect(),
            },
            Action::Dense(m) => Action::Dense(m.neg()),
        }
    }

    /// Structural equality as linear maps.
    pub fn same_map(&self, other: &Action) -> bool {
        match (self, other) {
            (Action::Unit { dim: d1, cols: c1 }, Action::Unit { dim: d2, cols: c2 }) => {
                d1 == d2 && c1 == c2
            }
            _ => self.to_matrix() == other.to_matrix(),
        }
    }
}

/// Recognizes a matrix with at most one ±1 entry per column.
fn to_unit(m: &RatMatrix) -> Option<Action> {
    let mut cols = Vec::with_capacity(m.cols());
    for j in 0..m.cols() {
        let mut col = None;
        for i in 0..m.rows() {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            if col.is_some() {
                return None;
            }
            if *x == rat(1) {
                col = Some((i, 1i8));
            } else if *x == rat(-1) {
                col = Some((i, -1i8));
            } else {
                return None;
            }
        }
        cols.push(col);
    }
    Some(Action::Unit { dim: m.rows(), cols })
}

impl LinearOp for Action {
    fn op_dim(&self) -> usize {
        self.dim()
    }

    fn op_apply(&self, v: &[Rat]) -> Vec<Rat> {
        self.apply(v)
    }
}
