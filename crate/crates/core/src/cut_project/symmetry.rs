use std::collections::HashMap;

use super::Pattern;
use crate::error::{Error, Result};

/// Largest distance from a rotated pattern point to its nearest pattern
/// point, over points at least one edge length inside the patch boundary.
/// The rotation is by `2π/k` about the centroid.
pub fn symmetry_deviation(pattern: &Pattern, k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidSymmetryOrder(k));
    }
    if pattern.par_dimension() != 2 {
        return Err(Error::NotPlanar);
    }
    if k == 1 {
        return Ok(0.0);
    }
    let pts: Vec<[f64; 2]> = pattern.points.iter().map(|p| [p.par[0], p.par[1]]).collect();
    let m = pts.len() as f64;
    let cx = pts.iter().map(|p| p[0]).sum::<f64>() / m;
    let cy = pts.iter().map(|p| p[1]).sum::<f64>() / m;
    let margin = pattern.edge_length;
    let limit = pattern.par_radius - margin;

    let cell = margin.max(1e-3);
    let key = |x: f64, y: f64| ((x / cell).floor() as i64, (y / cell).floor() as i64);
    let mut grid: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in pts.iter().enumerate() {
        grid.entry(key(p[0], p[1])).or_default().push(i);
    }
    let nearest = |x: f64, y: f64| {
        let (gx, gy) = key(x, y);
        let mut best = f64::INFINITY;
        for dx in -1..=1 {
            for dy in -1..=1 {
                if let Some(ids) = grid.get(&(gx + dx, gy + dy)) {
                    for &i in ids {
                        best = best.min(((pts[i][0] - x).powi(2) + (pts[i][1] - y).powi(2)).sqrt());
                    }
                }
            }
        }
        if best > cell {
            best = pts
                .iter()
                .map(|p| ((p[0] - x).powi(2) + (p[1] - y).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
        }
        best
    };

    let (s, c) = (2.0 * std::f64::consts::PI / k as f64).sin_cos();
    let mut worst: f64 = 0.0;
    for p in &pts {
        let (x, y) = (p[0] - cx, p[1] - cy);
        if (x * x + y * y).sqrt() > limit {
            continue;
        }
        let (rx, ry) = (c * x - s * y + cx, s * x + c * y + cy);
        worst = worst.max(nearest(rx, ry));
    }
    Ok(worst)
}
