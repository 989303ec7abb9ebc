use nalgebra::{DMatrix, SymmetricEigen};

use crate::error::{Error, Result};
use crate::tol;
use crate::weyl::{dot_quarters, RootDatum};

#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub exponent: u32,
    pub value: f64,
    /// Scaled so the last component is exactly 1.
    pub vector: Vec<f64>,
}

/// Eigen-decomposition of the (non-symmetric) Cartan matrix, ordered by
/// Coxeter exponent.
#[derive(Debug, Clone, PartialEq)]
pub struct CartanEigensystem {
    pub coxeter_number: usize,
    pub pairs: Vec<EigenPair>,
}

impl CartanEigensystem {
    pub fn values(&self) -> Vec<f64> {
        self.pairs.iter().map(|p| p.value).collect()
    }
}

/// `A = 2 S D⁻¹` with `S` the Gram matrix of simple roots and `D` their
/// squared norms, so `D^{-1/2} A D^{1/2}` is symmetric with the same
/// spectrum; eigenvectors map back through `D^{1/2}`.
pub fn cartan_eigensystem(datum: &RootDatum) -> Result<CartanEigensystem> {
    let n = datum.rank();
    let a = datum.cartan_matrix();
    let d: Vec<f64> = datum
        .simple_roots()
        .iter()
        .map(|r| dot_quarters(r, r) as f64 / 4.0)
        .collect();
    let sym = DMatrix::from_fn(n, n, |i, j| a[(i, j)] * (d[j] / d[i]).sqrt());
    let asym = (&sym - sym.transpose()).abs().max();
    if asym > tol::REAL {
        return Err(Error::Numeric(format!(
            "symmetrized Cartan matrix is not symmetric ({asym:e})"
        )));
    }
    let eig = SymmetricEigen::new(sym);

    let mut pairs: Vec<(f64, Vec<f64>)> = Vec::with_capacity(n);
    for k in 0..n {
        let mut x: Vec<f64> = (0..n).map(|i| eig.eigenvectors[(i, k)] * d[i].sqrt()).collect();
        let last = x[n - 1];
        if last.abs() < 1e-12 {
            return Err(Error::Numeric(format!(
                "eigenvector {k} has vanishing last component"
            )));
        }
        x.iter_mut().for_each(|c| *c /= last);
        pairs.push((eig.eigenvalues[k], x));
    }
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));

    let mut out = Vec::with_capacity(n);
    for (k, (value, vector)) in pairs.into_iter().enumerate() {
        let av = &a * nalgebra::DVector::from_column_slice(&vector);
        let residual = av
            .iter()
            .zip(&vector)
            .map(|(y, x)| (y - value * x).powi(2))
            .sum::<f64>()
            .sqrt();
        if residual > tol::REAL {
            return Err(Error::Numeric(format!(
                "eigenpair {k} residual {residual:e} exceeds tolerance"
            )));
        }
        out.push(EigenPair {
            exponent: 2 * k as u32 + 1,
            value,
            vector,
        });
    }
    Ok(CartanEigensystem {
        coxeter_number: datum.coxeter_number(),
        pairs: out,
    })
}
