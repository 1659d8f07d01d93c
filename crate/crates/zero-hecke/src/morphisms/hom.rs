use serde::Serialize;

use crate::error::domain;
use crate::linalg::{nullspace, RatMatrix, Subspace};
use crate::modules::ModuleRep;
use crate::Result;

/// A linear map between two module representations, stored as a full matrix
/// over the canonical bases (codomain dim × domain dim).
#[derive(Debug, Clone)]
pub struct LinearHom {
    pub name: String,
    pub domain: ModuleRep,
    pub codomain: ModuleRep,
    pub matrix: RatMatrix,
}

impl LinearHom {
    pub fn new(
        name: impl Into<String>,
        domain: ModuleRep,
        codomain: ModuleRep,
        matrix: RatMatrix,
    ) -> Result<LinearHom> {
        if domain.n() != codomain.n() {
            return Err(domain_err("domain and codomain live over different algebras"));
        }
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(domain_err(format!(
                "matrix is {}x{}, expected {}x{}",
                matrix.rows(),
                matrix.cols(),
                codomain.dim(),
                domain.dim()
            )));
        }
        Ok(LinearHom { name: name.into(), domain, codomain, matrix })
    }

    pub fn identity(rep: &ModuleRep) -> LinearHom {
        LinearHom {
            name: "id".to_string(),
            domain: rep.clone(),
            codomain: rep.clone(),
            matrix: RatMatrix::identity(rep.dim()),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn kernel(&self) -> Subspace {
        nullspace(&self.matrix)
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.codomain.dim()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.domain.dim()
    }

    /// Exports the certificate the reporting layer serializes.
    pub fn certificate(&self) -> HomCertificate {
        let report = hom_check(self);
        HomCertificate {
            name: self.name.clone(),
            domain: self.domain.basis().labels().len(),
            codomain: self.codomain.dim(),
            dims: (self.domain.dim(), self.codomain.dim()),
            rank: self.rank(),
            kernel_dim: self.domain.dim() - self.rank(),
            intertwines: report.passed(),
            surjective: self.is_surjective(),
        }
    }
}

fn domain_err(msg: impl Into<String>) -> crate::Error {
    domain(msg)
}

/// Failure witnesses of the intertwining check: generator index and domain
/// basis column where `A·g` and `g·A` first disagree.
#[derive(Debug, Clone, Serialize)]
pub struct HomReport {
    pub violations: Vec<(u32, usize)>,
}

impl HomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `matrix · g_i^dom = g_i^cod · matrix` for every generator, exactly.
pub fn hom_check(hom: &LinearHom) -> HomReport {
    let mut violations = Vec::new();
    let a = &hom.matrix;
    for i in 1..hom.domain.n() {
        let gd = hom.domain.gen(i);
        let gc = hom.codomain.gen(i);
        for j in 0..hom.domain.dim() {
            // A(g_dom e_j) from the sparse column, g_cod(A e_j) by applying.
            let mut lhs = vec![crate::linalg::rat_zero(); hom.codomain.dim()];
            for (t, v) in gd.column_image(j) {
                for r in 0..hom.codomain.dim() {
                    let m = &a[(r, t)];
                    if !num_traits::Zero::is_zero(m) {
                        lhs[r] += m * &v;
                    }
                }
            }
            let rhs = gc.apply(&a.column(j));
            if lhs != rhs {
                violations.push((i, j));
                break;
            }
        }
    }
    HomReport { violations }
}

/// Surjectivity via exact rank.
pub fn surjectivity_check(hom: &LinearHom) -> bool {
    hom.is_surjective()
}

/// Composes a chain of maps `f1, f2, …` into `… ∘ f2 ∘ f1`, checking
/// composability of neighbours.
pub fn compose_chain(maps: &[LinearHom]) -> Result<LinearHom> {
    let first = maps.first().ok_or_else(|| domain("empty chain"))?;
    let mut matrix = first.matrix.clone();
    let mut name = first.name.clone();
    for next in &maps[1..] {
        if next.domain.dim() != matrix.rows() {
            return Err(domain(format!(
                "chain break: {} expects domain dim {}, got {}",
                next.name,
                next.domain.dim(),
                matrix.rows()
            )));
        }
        matrix = next.matrix.mul(&matrix);
        name = format!("{} ∘ {name}", next.name);
    }
    LinearHom::new(name, first.domain.clone(), maps.last().unwrap().codomain.clone(), matrix)
}

/// Summary data exported as JSON for each certified map.
#[derive(Debug, Clone, Serialize)]
pub struct HomCertificate {
    pub name: String,
    #[serde(skip)]
    pub domain: usize,
    #[serde(skip)]
    pub codomain: usize,
    pub dims: (usize, usize),
    pub rank: usize,
    pub kernel_dim: usize,
    pub intertwines: bool,
    pub surjective: bool,
}
