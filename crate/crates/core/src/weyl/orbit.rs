use std::collections::{BTreeSet, VecDeque};

use super::datum::RootDatum;
use super::half::{to_f64_vec, HalfInt};
use super::signed_perm::SignedPerm;
use crate::error::Result;

/// A Weyl orbit with exact coordinates, sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSet {
    pub seed: Vec<u32>,
    pub points: Vec<Vec<HalfInt>>,
}

impl OrbitSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `(a_1 a_2 … a_n)`; digits run together when all are single-digit.
    pub fn label(&self) -> String {
        orbit_label(&self.seed)
    }

    pub fn points_f64(&self) -> Vec<Vec<f64>> {
        self.points.iter().map(|p| to_f64_vec(p)).collect()
    }
}

pub fn orbit_label(seed: &[u32]) -> String {
    if seed.iter().all(|&a| a <= 9) {
        seed.iter().map(|a| a.to_string()).collect()
    } else {
        seed.iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join("_")
    }
}

/// Closure of `start` under the generators, sorted lexicographically.
pub fn orbit_under(generators: &[SignedPerm], start: &[HalfInt]) -> Vec<Vec<HalfInt>> {
    let mut seen: BTreeSet<Vec<HalfInt>> = BTreeSet::from([start.to_vec()]);
    let mut queue = VecDeque::from([start.to_vec()]);
    while let Some(v) = queue.pop_front() {
        for g in generators {
            let w = g.apply(&v);
            if !seen.contains(&w) {
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// The `W(B_n)` orbit of `Σ a_i ω_i`.
pub fn orbit(datum: &RootDatum, highest_weight: &[u32]) -> Result<OrbitSet> {
    let start = datum.highest_weight(highest_weight)?;
    let points = orbit_under(&datum.generators(), &start);
    Ok(OrbitSet {
        seed: highest_weight.to_vec(),
        points,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::half::dot_quarters;

    fn fundamental(n: usize, k: usize) -> Vec<u32> {
        let mut a = vec![0; n];
        a[k] = 1;
        a
    }

    #[test]
    fn fundamental_cardinalities() {
        for n in 2..=8 {
            let d = RootDatum::new(n).unwrap();
            assert_eq!(orbit(&d, &fundamental(n, 0)).unwrap().len(), 2 * n);
            assert_eq!(orbit(&d, &fundamental(n, n - 1)).unwrap().len(), 1 << n);
            if n > 2 {
                assert_eq!(orbit(&d, &fundamental(n, 1)).unwrap().len(), 2 * n * (n - 1));
            }
        }
    }

    #[test]
    fn b4_short_roots() {
        let d = RootDatum::new(4).unwrap();
        let o = orbit(&d, &[1, 0, 0, 0]).unwrap();
        assert_eq!(o.len(), 8);
        for p in &o.points {
            assert_eq!(dot_quarters(p, p), 4);
            assert_eq!(p.iter().filter(|x| **x != HalfInt::ZERO).count(), 1);
        }
        assert_eq!(o.label(), "1000");
    }

    #[test]
    fn cube_vertices_are_half_signs() {
        let d = RootDatum::new(5).unwrap();
        let o = orbit(&d, &[0, 0, 0, 0, 1]).unwrap();
        assert!(o
            .points
            .iter()
            .all(|p| p.iter().all(|x| x.twice().abs() == 1)));
    }

    #[test]
    fn zero_weight_is_fixed() {
        let d = RootDatum::new(3).unwrap();
        let o = orbit(&d, &[0, 0, 0]).unwrap();
        assert_eq!(o.points, vec![vec![HalfInt::ZERO; 3]]);
    }

    #[test]
    fn output_is_sorted_and_closed() {
        let d = RootDatum::new(4).unwrap();
        let o = orbit(&d, &[1, 0, 1, 0]).unwrap();
        assert!(o.points.windows(2).all(|w| w[0] < w[1]));
        for g in d.generators() {
            for p in &o.points {
                assert!(o.points.binary_search(&g.apply(p)).is_ok());
            }
        }
    }

    #[test]
    fn long_labels_use_separator() {
        assert_eq!(orbit_label(&[10, 0, 1]), "10_0_1");
    }
}
