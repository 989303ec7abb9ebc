//! Strip projection: acceptance windows, lattice enumeration, and the
//! planar and icosahedral patches built from them.

mod edges;
mod symmetry;
mod window;

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use edges::{
    edge_directions, edge_star, extract_edges, tile_census, tile_edges, Edge, TileCensus,
};
pub use symmetry::symmetry_deviation;
pub use window::{HalfSpace, ShiftSpec, Window, WindowMode};

use crate::error::{Error, Result};
use crate::frame::{b6_h3_frame, norm, Frame, FrameKind};
use crate::tol;
use crate::weyl::{lattice_to_weight, weight_to_lattice, RootDatum};

/// An accepted lattice point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatternPoint {
    /// Weight coefficients `a` of `Σ_{j<n} a_j ω_j + 2a_n ω_n`.
    pub a: Vec<i64>,
    /// The same vector in `l`-coordinates.
    pub lattice: Vec<i64>,
    pub par: Vec<f64>,
    /// Window-space coordinates (perpendicular then invariant directions).
    pub perp: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Pattern {
    pub rank: usize,
    pub frame: FrameKind,
    pub window: WindowMode,
    /// Shift of the Voronoi cell in `l`-coordinates.
    pub shift: Vec<f64>,
    pub par_radius: f64,
    /// Every enumerated tuple satisfied `|x_i| ≤ bound`.
    pub bound: i64,
    /// Number of lattice points examined.
    pub candidates: u64,
    /// Accepted lattice points dropped because another accepted point with
    /// a smaller `a` has the same parallel image. Nonzero only when the
    /// parallel projection has a kernel on `Z^n`, as for the rank 6
    /// Coxeter plane.
    pub merged: usize,
    /// Parallel-space length of a projected `l_i` (longest, if unequal).
    pub edge_length: f64,
    pub points: Vec<PatternPoint>,
    pub edges: Vec<Edge>,
}

impl Pattern {
    pub fn par_dimension(&self) -> usize {
        self.points.first().map_or(0, |p| p.par.len())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Whether the lattice vector with weight coefficients `a` projects into
/// the window.
pub fn accept(a: &[i64], frame: &Frame, window: &Window) -> bool {
    if a.len() != frame.rank() {
        return false;
    }
    let c: Vec<f64> = weight_to_lattice(a).into_iter().map(|x| x as f64).collect();
    window.contains(&frame.window_coords(&c))
}

/// Every accepted lattice point with `‖par‖ ≤ par_radius`, sorted by `a`.
///
/// An accepted point has `‖par‖ ≤ R` and `‖perp‖ ≤ ρ` (the window's reach),
/// so it lies in the integer ball of radius `√(R² + ρ²)`; that ball is
/// scanned in parallel slabs of the first coordinate.
pub fn generate_patch(
    frame: &Frame,
    window: &Window,
    par_radius: f64,
    budget: f64,
) -> Result<Pattern> {
    if !(par_radius > 0.0 && par_radius.is_finite()) {
        return Err(Error::InvalidRadius(par_radius));
    }
    let n = frame.rank();
    let reach = window.reach() + tol::EDGE_MATCH;
    let ball = (par_radius * par_radius + reach * reach).sqrt();
    let bound = (ball + tol::POINT).floor() as i64;
    let candidates = ((2 * bound + 1) as f64).powi(n as i32);
    if candidates > budget {
        return Err(Error::BudgetExceeded {
            bound,
            candidates,
            budget,
        });
    }
    let r2 = ball * ball + tol::POINT;

    let slabs: Vec<(Vec<PatternPoint>, u64)> = (-bound..=bound)
        .into_par_iter()
        .map(|x0| {
            let mut found = Vec::new();
            let mut seen = 0u64;
            let mut x = vec![0i64; n];
            x[0] = x0;
            scan(frame, window, par_radius, &mut x, 1, (x0 * x0) as f64, r2, &mut found, &mut seen);
            (found, seen)
        })
        .collect();

    let mut points = Vec::new();
    let mut examined = 0;
    for (found, seen) in slabs {
        points.extend(found);
        examined += seen;
    }
    points.sort_by(|p, q| p.a.cmp(&q.a));
    let before = points.len();
    let points = merge_coincident(points);

    let mut pattern = Pattern {
        rank: n,
        frame: frame.kind(),
        window: window.mode,
        shift: window.lattice_shift.clone(),
        par_radius,
        bound,
        candidates: examined,
        merged: before - points.len(),
        edge_length: edge_star(frame).iter().map(|v| norm(v)).fold(0.0, f64::max),
        points,
        edges: Vec::new(),
    };
    pattern.edges = extract_edges(&pattern, frame);
    Ok(pattern)
}

/// Keep the first point of every group sharing a parallel image.
fn merge_coincident(points: Vec<PatternPoint>) -> Vec<PatternPoint> {
    let cell = |x: f64| (x / tol::POINT.sqrt()).round() as i64;
    let mut taken: HashSet<Vec<i64>> = HashSet::new();
    let mut out = Vec::with_capacity(points.len());
    for p in points {
        let key: Vec<i64> = p.par.iter().map(|&x| cell(x)).collect();
        let mut clash = false;
        let mut offset = vec![-1i64; key.len()];
        'search: loop {
            let probe: Vec<i64> = key.iter().zip(&offset).map(|(k, o)| k + o).collect();
            if taken.contains(&probe) {
                clash = true;
                break;
            }
            for o in offset.iter_mut() {
                if *o < 1 {
                    *o += 1;
                    continue 'search;
                }
                *o = -1;
            }
            break;
        }
        if !clash {
            taken.insert(key);
            out.push(p);
        }
    }
    out
}

#[allow(clippy::too_many_arguments)]
fn scan(
    frame: &Frame,
    window: &Window,
    par_radius: f64,
    x: &mut Vec<i64>,
    depth: usize,
    used: f64,
    r2: f64,
    out: &mut Vec<PatternPoint>,
    seen: &mut u64,
) {
    let n = x.len();
    if depth == n {
        *seen += 1;
        let c: Vec<f64> = x.iter().map(|&v| v as f64).collect();
        let par = frame.par_coords(&c);
        if norm(&par) > par_radius + tol::POINT {
            return;
        }
        let perp = frame.window_coords(&c);
        if window.contains(&perp) {
            out.push(PatternPoint {
                a: lattice_to_weight(x),
                lattice: x.clone(),
                par,
                perp,
            });
        }
        return;
    }
    let room = (r2 - used).max(0.0).sqrt().floor() as i64;
    for v in -room..=room {
        x[depth] = v;
        scan(frame, window, par_radius, x, depth + 1, used + (v * v) as f64, r2, out, seen);
    }
    x[depth] = 0;
}

/// Everything needed to produce a patch.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatchConfig {
    pub rank: usize,
    pub frame: FrameKind,
    pub window: WindowMode,
    pub shift: ShiftSpec,
    pub radius: f64,
    pub budget: f64,
}

impl PatchConfig {
    /// Coxeter-plane patch with the `ω_n`-shifted window; disc window for
    /// rank 4, hull otherwise.
    pub fn new(rank: usize, radius: f64) -> Self {
        PatchConfig {
            rank,
            frame: FrameKind::Coxeter,
            window: if rank == 4 { WindowMode::Disc } else { WindowMode::Hull },
            shift: ShiftSpec::Omega,
            radius,
            budget: tol::DEFAULT_BUDGET,
        }
    }

    pub fn frame(&self) -> Result<Frame> {
        RootDatum::new(self.rank)?;
        self.frame.build(self.rank)
    }

    pub fn build_window(&self, frame: &Frame) -> Result<Window> {
        Window::build(frame, self.window, &self.shift.vector(self.rank)?)
    }

    pub fn generate(&self) -> Result<Pattern> {
        let frame = self.frame()?;
        let window = self.build_window(&frame)?;
        generate_patch(&frame, &window, self.radius, self.budget)
    }
}

/// Rank 6 lattice projected into the parallel triple of the icosahedral
/// frame, accepted by the triacontahedral window in the primed triple.
pub fn generate_icosahedral_patch(par_radius: f64, shift: &ShiftSpec, budget: f64) -> Result<Pattern> {
    let (frame, _) = b6_h3_frame();
    let window = Window::build(&frame, WindowMode::Hull, &shift.vector(6)?)?;
    generate_patch(&frame, &window, par_radius, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::coxeter_plane_frame;

    fn b4() -> (Frame, Window) {
        let f = coxeter_plane_frame(&RootDatum::new(4).unwrap()).unwrap();
        let w = Window::build(&f, WindowMode::Disc, &[0.5; 4]).unwrap();
        (f, w)
    }

    #[test]
    fn origin_accepted_with_omega_shift() {
        for n in 4..=6 {
            let f = coxeter_plane_frame(&RootDatum::new(n).unwrap()).unwrap();
            for mode in [WindowMode::Hull, WindowMode::Disc] {
                let w = Window::build(&f, mode, &vec![0.5; n]).unwrap();
                assert!(accept(&vec![0; n], &f, &w));
            }
        }
    }

    #[test]
    fn far_points_rejected() {
        let (f, w) = b4();
        let reach = w.reach();
        for a in [[9, -3, 4, 7], [0, 0, 0, 40], [-12, 5, 5, 0]] {
            let c: Vec<f64> = weight_to_lattice(&a).into_iter().map(|x| x as f64).collect();
            if norm(&f.window_coords(&c)) > reach + 1e-6 {
                assert!(!accept(&a, &f, &w));
            }
        }
    }

    #[test]
    fn b4_small_box_count() {
        // brute force over max|a_i| ≤ 2 through the membership test
        let (f, w) = b4();
        let mut count = 0;
        for a0 in -2..=2 {
            for a1 in -2..=2 {
                for a2 in -2..=2 {
                    for a3 in -2..=2 {
                        if accept(&[a0, a1, a2, a3], &f, &w) {
                            count += 1;
                        }
                    }
                }
            }
        }
        assert_eq!(count, 136);
        assert!((w.radius - 0.923879532511287).abs() < 1e-12);
    }

    #[test]
    fn patch_invariants() {
        let (f, w) = b4();
        let p = generate_patch(&f, &w, 3.0, 1e8).unwrap();
        assert!(!p.is_empty());
        for (i, q) in p.points.iter().enumerate() {
            assert!(norm(&q.par) <= 3.0 + 1e-9);
            assert!(w.contains(&q.perp));
            assert_eq!(weight_to_lattice(&q.a), q.lattice);
            let back: Vec<f64> = (0..4)
                .map(|k| {
                    let mut s = 0.0;
                    for (j, &idx) in f.par_indices().iter().enumerate() {
                        s += q.par[j] * f.vector(idx)[k];
                    }
                    for (j, idx) in f.window_indices().into_iter().enumerate() {
                        s += q.perp[j] * f.vector(idx)[k];
                    }
                    s
                })
                .collect();
            for k in 0..4 {
                assert!((back[k] - q.lattice[k] as f64).abs() < 1e-9);
            }
            if i > 0 {
                assert!(p.points[i - 1].a < q.a);
            }
        }
    }

    #[test]
    fn patches_are_nested() {
        let (f, w) = b4();
        let small = generate_patch(&f, &w, 2.0, 1e8).unwrap();
        let large = generate_patch(&f, &w, 3.5, 1e8).unwrap();
        for q in &small.points {
            assert!(large.points.iter().any(|r| r.a == q.a));
        }
    }

    #[test]
    fn radius_and_budget_errors() {
        let (f, w) = b4();
        assert!(matches!(generate_patch(&f, &w, 0.0, 1e8), Err(Error::InvalidRadius(_))));
        assert!(matches!(generate_patch(&f, &w, f64::NAN, 1e8), Err(Error::InvalidRadius(_))));
        match generate_patch(&f, &w, 50.0, 1e6) {
            Err(Error::BudgetExceeded { bound, .. }) => assert!(bound >= 50),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn far_shift_leaves_sparse_patch() {
        let f = coxeter_plane_frame(&RootDatum::new(4).unwrap()).unwrap();
        let shift: Vec<f64> = f.vector(1).iter().zip(f.vector(2)).map(|(a, b)| 40.0 * (a + b)).collect();
        let w = Window::build(&f, WindowMode::Hull, &shift).unwrap();
        let p = generate_patch(&f, &w, 0.5, 1e8);
        assert!(matches!(p, Err(Error::BudgetExceeded { .. })) || p.unwrap().is_empty());
    }

    #[test]
    fn config_defaults() {
        let c = PatchConfig::new(4, 5.0);
        assert_eq!(c.window, WindowMode::Disc);
        assert_eq!(PatchConfig::new(6, 5.0).window, WindowMode::Hull);
        assert!(PatchConfig { rank: 9, ..c.clone() }.generate().is_err());
        let t = PatchConfig {
            frame: FrameKind::TBasis,
            ..c
        };
        assert!(matches!(t.generate(), Err(Error::UnsupportedWindowDimension(1))));
    }

    #[test]
    fn icosahedral_patch_neighbours() {
        let p = generate_icosahedral_patch(2.0, &ShiftSpec::Zero, 1e8).unwrap();
        assert_eq!(p.par_dimension(), 3);
        assert!(!p.edges.is_empty());
        for e in &p.edges {
            let d: Vec<f64> = (0..3).map(|k| p.points[e.to].par[k] - p.points[e.from].par[k]).collect();
            assert!((norm(&d) - 0.5f64.sqrt()).abs() < 1e-9);
        }
    }

    #[test]
    fn coincident_images_merged() {
        for n in 4..=6 {
            let p = PatchConfig::new(n, 5.0).generate().unwrap();
            for (i, a) in p.points.iter().enumerate() {
                for b in &p.points[i + 1..] {
                    assert!(norm(&[a.par[0] - b.par[0], a.par[1] - b.par[1]]) > 1e-3);
                }
            }
            match n {
                4 => assert_eq!(p.merged, 0),
                6 => assert!(p.merged > 0),
                _ => {}
            }
        }
    }
}
