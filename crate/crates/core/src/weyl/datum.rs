use nalgebra::DMatrix;

use super::half::{dot_quarters, to_f64_vec, HalfInt};
use super::signed_perm::SignedPerm;
use crate::error::{Error, Result};
use crate::tol;

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 8;

/// Root datum of `B_n` in the orthonormal basis `l_1 … l_n`.
///
/// Simple roots are `α_i = l_i − l_{i+1}` (`i < n`) and `α_n = l_n`; the
/// Cartan matrix `A_ij = 2(α_i, α_j)/(α_j, α_j)` is stored exactly, weights
/// are recovered from `A⁻¹` and snapped to half-integers.
#[derive(Debug, Clone, PartialEq)]
pub struct RootDatum {
    rank: usize,
    simple_roots: Vec<Vec<HalfInt>>,
    cartan: Vec<Vec<i64>>,
    metric: DMatrix<f64>,
    weights: Vec<Vec<HalfInt>>,
}

impl RootDatum {
    pub fn new(rank: usize) -> Result<Self> {
        if !(MIN_RANK..=MAX_RANK).contains(&rank) {
            return Err(Error::RankOutOfRange {
                rank,
                min: MIN_RANK,
                max: MAX_RANK,
            });
        }
        let n = rank;
        let simple_roots: Vec<Vec<HalfInt>> = (0..n)
            .map(|i| {
                let mut v = vec![HalfInt::ZERO; n];
                v[i] = HalfInt::ONE;
                if i + 1 < n {
                    v[i + 1] = -HalfInt::ONE;
                }
                v
            })
            .collect();

        let norms: Vec<i64> = simple_roots
            .iter()
            .map(|a| dot_quarters(a, a))
            .collect();
        let mut cartan = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let num = 2 * dot_quarters(&simple_roots[i], &simple_roots[j]);
                if num % norms[j] != 0 {
                    return Err(Error::Numeric(format!(
                        "Cartan entry ({i},{j}) is not integral"
                    )));
                }
                cartan[i][j] = num / norms[j];
            }
        }

        let a = DMatrix::from_fn(n, n, |i, j| cartan[i][j] as f64);
        let a_inv = a
            .clone()
            .try_inverse()
            .ok_or_else(|| Error::Numeric("Cartan matrix is singular".into()))?;

        // ω_i = Σ_j (A⁻¹)_ij α_j
        let mut weights = Vec::with_capacity(n);
        for i in 0..n {
            let mut w = Vec::with_capacity(n);
            for k in 0..n {
                let x: f64 = (0..n)
                    .map(|j| a_inv[(i, j)] * simple_roots[j][k].to_f64())
                    .sum();
                w.push(HalfInt::from_f64(x, tol::REAL).ok_or_else(|| {
                    Error::Numeric(format!("weight {i} coordinate {x} is not half-integral"))
                })?);
            }
            weights.push(w);
        }

        // G_ij = (A⁻¹)_ij (α_j, α_j)/2
        let metric = DMatrix::from_fn(n, n, |i, j| a_inv[(i, j)] * norms[j] as f64 / 8.0);

        Ok(RootDatum {
            rank,
            simple_roots,
            cartan,
            metric,
            weights,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Coxeter number `h = 2n`.
    pub fn coxeter_number(&self) -> usize {
        2 * self.rank
    }

    /// Coxeter exponents `1, 3, …, 2n − 1`.
    pub fn exponents(&self) -> Vec<u32> {
        (0..self.rank as u32).map(|i| 2 * i + 1).collect()
    }

    pub fn simple_roots(&self) -> &[Vec<HalfInt>] {
        &self.simple_roots
    }

    pub fn simple_root_f64(&self, i: usize) -> Vec<f64> {
        to_f64_vec(&self.simple_roots[i])
    }

    /// `2α_i/(α_i, α_i)` as floats.
    pub fn coroot(&self, i: usize) -> Vec<f64> {
        let a = &self.simple_roots[i];
        let norm = dot_quarters(a, a) as f64 / 4.0;
        a.iter().map(|x| 2.0 * x.to_f64() / norm).collect()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> DMatrix<f64> {
        let n = self.rank;
        DMatrix::from_fn(n, n, |i, j| self.cartan[i][j] as f64)
    }

    pub fn metric(&self) -> &DMatrix<f64> {
        &self.metric
    }

    pub fn weights(&self) -> &[Vec<HalfInt>] {
        &self.weights
    }

    /// `Λ = Σ a_i ω_i` with exact coordinates.
    pub fn highest_weight(&self, a: &[u32]) -> Result<Vec<HalfInt>> {
        self.check_len(a.len())?;
        let mut v = vec![HalfInt::ZERO; self.rank];
        for (ai, w) in a.iter().zip(&self.weights) {
            for (vk, wk) in v.iter_mut().zip(w) {
                *vk += *wk * i64::from(*ai);
            }
        }
        Ok(v)
    }

    /// Simple reflection `r_i` (1-based) as a signed permutation.
    pub fn generator(&self, i: usize) -> Result<SignedPerm> {
        let n = self.rank;
        if i == 0 || i > n {
            return Err(Error::GeneratorIndex { index: i, rank: n });
        }
        Ok(if i < n {
            SignedPerm::transposition(n, i - 1, i)
        } else {
            SignedPerm::sign_flip(n, n - 1)
        })
    }

    pub fn generators(&self) -> Vec<SignedPerm> {
        (1..=self.rank)
            .map(|i| self.generator(i).expect("index in range"))
            .collect()
    }

    /// Product `r_{i_1} r_{i_2} …` of simple reflections (1-based indices).
    pub fn word(&self, indices: &[usize]) -> Result<SignedPerm> {
        let gens = indices
            .iter()
            .map(|&i| self.generator(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(SignedPerm::product(self.rank, &gens))
    }

    /// Reflect `v` in the hyperplane orthogonal to `α_i` (1-based).
    pub fn reflect(&self, i: usize, v: &[HalfInt]) -> Result<Vec<HalfInt>> {
        let n = self.rank;
        if i == 0 || i > n {
            return Err(Error::GeneratorIndex { index: i, rank: n });
        }
        self.check_len(v.len())?;
        let alpha = &self.simple_roots[i - 1];
        let num = 2 * dot_quarters(v, alpha);
        let den = dot_quarters(alpha, alpha);
        // the coefficient is a half-integer; keep everything in twice-units
        let coeff_twice = 2 * num / den;
        debug_assert_eq!((2 * num) % den, 0);
        Ok(v.iter()
            .zip(alpha)
            .map(|(&x, &a)| x - HalfInt::from_twice(coeff_twice * a.twice() / 2))
            .collect())
    }

    /// Real-valued reflection for arbitrary float vectors.
    pub fn reflect_f64(&self, i: usize, v: &[f64]) -> Result<Vec<f64>> {
        let n = self.rank;
        if i == 0 || i > n {
            return Err(Error::GeneratorIndex { index: i, rank: n });
        }
        self.check_len(v.len())?;
        let alpha = self.simple_root_f64(i - 1);
        let aa: f64 = alpha.iter().map(|x| x * x).sum();
        let va: f64 = v.iter().zip(&alpha).map(|(x, y)| x * y).sum();
        let c = 2.0 * va / aa;
        Ok(v.iter().zip(&alpha).map(|(x, a)| x - c * a).collect())
    }

    /// Lattice vector `Σ_{j<n} a_j ω_j + 2 a_n ω_n` in the orthonormal basis.
    ///
    /// The map is unimodular: `c_n = a_n`, `c_k − c_{k+1} = a_k`.
    pub fn lattice_vector(&self, a: &[i64]) -> Result<Vec<i64>> {
        self.check_len(a.len())?;
        Ok(weight_to_lattice(a))
    }

    pub(crate) fn check_len(&self, len: usize) -> Result<()> {
        if len != self.rank {
            return Err(Error::DimensionMismatch {
                expected: self.rank,
                found: len,
            });
        }
        Ok(())
    }
}

/// Orthonormal-basis coordinates of the lattice vector with weight
/// coefficients `a` (last coefficient doubled).
pub fn weight_to_lattice(a: &[i64]) -> Vec<i64> {
    let n = a.len();
    let mut c = vec![0i64; n];
    let mut acc = 0;
    for k in (0..n).rev() {
        acc += a[k];
        c[k] = acc;
    }
    c
}

/// Inverse of [`weight_to_lattice`].
pub fn lattice_to_weight(c: &[i64]) -> Vec<i64> {
    let n = c.len();
    (0..n)
        .map(|k| if k + 1 < n { c[k] - c[k + 1] } else { c[k] })
        .collect()
}

/// Apply the simple reflection `r_i` (1-based) to a real vector; convenience
/// wrapper used by the frame and projection code.
pub fn apply_generator(datum: &RootDatum, i: usize, v: &[f64]) -> Result<Vec<f64>> {
    datum.reflect_f64(i, v)
}
