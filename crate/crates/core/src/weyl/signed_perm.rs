use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;
use std::ops::{Mul, Neg};

use nalgebra::DMatrix;

use crate::error::{Error, Result};

/// An element of `W(B_n)`: a permutation of the `n` orthonormal axes combined
/// with independent sign flips.
///
/// `images[j] = ±(k + 1)` means axis `j` is sent to `±` axis `k`. Products
/// follow operator convention: `(a * b)(v) = a(b(v))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm {
    images: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i8).collect(),
        }
    }

    /// The central element `-I`.
    pub fn negation(n: usize) -> Self {
        SignedPerm {
            images: (1..=n as i8).map(|k| -k).collect(),
        }
    }

    /// Swap axes `i` and `j` (0-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// Flip the sign of axis `i` (0-based).
    pub fn sign_flip(n: usize, i: usize) -> Self {
        let mut p = Self::identity(n);
        p.images[i] = -p.images[i];
        p
    }

    /// Build from signed 1-based images, validating that the unsigned part is
    /// a permutation of `1..=n`.
    pub fn from_images(images: Vec<i8>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &s in &images {
            let k = s.unsigned_abs() as usize;
            if k == 0 || k > n || seen[k - 1] {
                return Err(Error::InvalidPermutation(images));
            }
            seen[k - 1] = true;
        }
        Ok(SignedPerm { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i8] {
        &self.images
    }

    /// Target axis (0-based) and sign of axis `j`.
    pub fn image(&self, j: usize) -> (usize, bool) {
        let s = self.images[j];
        (s.unsigned_abs() as usize - 1, s < 0)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &s)| s == j as i8 + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        assert_eq!(self.rank(), other.rank(), "rank mismatch in composition");
        let images = other
            .images
            .iter()
            .map(|&s| {
                let (k, neg) = (s.unsigned_abs() as usize - 1, s < 0);
                let t = self.images[k];
                if neg {
                    -t
                } else {
                    t
                }
            })
            .collect();
        SignedPerm { images }
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut images = vec![0i8; self.rank()];
        for (j, &s) in self.images.iter().enumerate() {
            let k = s.unsigned_abs() as usize - 1;
            let target = j as i8 + 1;
            images[k] = if s < 0 { -target } else { target };
        }
        SignedPerm { images }
    }

    pub fn pow(&self, k: u32) -> SignedPerm {
        let mut acc = SignedPerm::identity(self.rank());
        for _ in 0..k {
            acc = self.compose(&acc);
        }
        acc
    }

    /// Smallest `k ≥ 1` with `self^k = 1`.
    pub fn order(&self) -> u32 {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = self.compose(&p);
            k += 1;
        }
        k
    }

    /// Act on a coordinate vector in the orthonormal basis.
    pub fn apply<T>(&self, v: &[T]) -> Vec<T>
    where
        T: Copy + Default + Neg<Output = T>,
    {
        assert_eq!(v.len(), self.rank(), "vector length mismatch");
        let mut out = vec![T::default(); v.len()];
        for (j, &x) in v.iter().enumerate() {
            let (k, neg) = self.image(j);
            out[k] = if neg { -x } else { x };
        }
        out
    }

    /// Matrix in the orthonormal basis; column `j` is the image of axis `j`.
    pub fn to_matrix(&self) -> DMatrix<f64> {
        let n = self.rank();
        let mut m = DMatrix::zeros(n, n);
        for j in 0..n {
            let (k, neg) = self.image(j);
            m[(k, j)] = if neg { -1.0 } else { 1.0 };
        }
        m
    }

    /// Product of a sequence, left to right as written (`[a, b, c]` is `abc`).
    pub fn product<'a, I>(n: usize, factors: I) -> SignedPerm
    where
        I: IntoIterator<Item = &'a SignedPerm>,
    {
        factors
            .into_iter()
            .fold(SignedPerm::identity(n), |acc, f| acc.compose(f))
    }
}

impl Mul for &SignedPerm {
    type Output = SignedPerm;
    fn mul(self, rhs: &SignedPerm) -> SignedPerm {
        self.compose(rhs)
    }
}

impl fmt::Debug for SignedPerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedPerm{:?}", self.images)
    }
}

/// Breadth-first closure of a generating set. Returned sorted.
pub fn generate_group(generators: &[SignedPerm]) -> Vec<SignedPerm> {
    let Some(first) = generators.first() else {
        return Vec::new();
    };
    let id = SignedPerm::identity(first.rank());
    let mut seen: HashSet<SignedPerm> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(g) = queue.pop_front() {
        for s in generators {
            let h = s.compose(&g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    let sorted: BTreeSet<_> = seen.into_iter().collect();
    sorted.into_iter().collect()
}
