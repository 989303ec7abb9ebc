use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::Serialize;

use super::Pattern;
use crate::frame::{dot, norm, Frame};
use crate::tol;

/// `points[to].lattice − points[from].lattice = l_axis`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// 0-based axis index.
    pub axis: usize,
}

/// Parallel-space images of `l_1 … l_n`.
pub fn edge_star(frame: &Frame) -> Vec<Vec<f64>> {
    let n = frame.rank();
    (0..n)
        .map(|i| {
            let mut e = vec![0.0; n];
            e[i] = 1.0;
            frame.par_coords(&e)
        })
        .collect()
}

fn matches(d: &[f64], v: &[f64]) -> bool {
    d.iter().zip(v).all(|(a, b)| (a - b).abs() <= tol::EDGE_MATCH)
}

/// Pairs of points one lattice step apart whose parallel difference is the
/// image of that step.
pub fn extract_edges(pattern: &Pattern, frame: &Frame) -> Vec<Edge> {
    let index: HashMap<&[i64], usize> = pattern
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.lattice.as_slice(), i))
        .collect();
    let star = edge_star(frame);
    let mut edges = Vec::new();
    let mut probe = Vec::new();
    for (i, p) in pattern.points.iter().enumerate() {
        for (axis, v) in star.iter().enumerate() {
            probe.clear();
            probe.extend_from_slice(&p.lattice);
            probe[axis] += 1;
            if let Some(&j) = index.get(probe.as_slice()) {
                let d: Vec<f64> = pattern.points[j]
                    .par
                    .iter()
                    .zip(&p.par)
                    .map(|(a, b)| a - b)
                    .collect();
                if matches(&d, v) {
                    edges.push(Edge { from: i, to: j, axis });
                }
            }
        }
    }
    edges.sort();
    edges
}

/// Geometric edges: index pairs `(i, j)`, `i < j`, whose parallel difference
/// equals the image of some `±l_k`, whether or not the lattice difference is
/// `±l_k` itself.
pub fn tile_edges(pattern: &Pattern, frame: &Frame) -> Vec<(usize, usize)> {
    let star = edge_star(frame);
    let reach = star.iter().map(|v| norm(v)).fold(0.0, f64::max) + tol::EDGE_MATCH;
    let pts = &pattern.points;
    let mut order: Vec<usize> = (0..pts.len()).collect();
    order.sort_by(|&a, &b| pts[a].par[0].total_cmp(&pts[b].par[0]));

    let mut out = Vec::new();
    for (k, &i) in order.iter().enumerate() {
        for &j in &order[k + 1..] {
            if pts[j].par[0] - pts[i].par[0] > reach {
                break;
            }
            let d: Vec<f64> = pts[j].par.iter().zip(&pts[i].par).map(|(a, b)| a - b).collect();
            let hit = star.iter().any(|v| {
                matches(&d, v) || d.iter().zip(v).all(|(a, b)| (a + b).abs() <= tol::EDGE_MATCH)
            });
            if hit {
                out.push((i.min(j), i.max(j)));
            }
        }
    }
    out.sort();
    out
}

/// Triangles and chordless quadrilaterals of an edge graph on planar points.
/// Quadrilaterals are keyed by their acute angle in whole degrees.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct TileCensus {
    pub triangles: usize,
    pub quads: BTreeMap<u32, usize>,
    /// 4-cycles that are not parallelograms.
    pub irregular: usize,
}

impl TileCensus {
    pub fn squares(&self) -> usize {
        self.quads.get(&90).copied().unwrap_or(0)
    }

    pub fn rhombi(&self) -> usize {
        self.quads
            .iter()
            .filter(|(&a, _)| a != 90)
            .map(|(_, &c)| c)
            .sum()
    }

    /// `"triangle"`, `"square"`, `"rhombus_<deg>"` counts, zero classes omitted.
    pub fn classes(&self) -> BTreeMap<String, usize> {
        let mut m = BTreeMap::new();
        if self.triangles > 0 {
            m.insert("triangle".to_string(), self.triangles);
        }
        for (&angle, &count) in &self.quads {
            let key = if angle == 90 {
                "square".to_string()
            } else {
                format!("rhombus_{angle}")
            };
            m.insert(key, count);
        }
        if self.irregular > 0 {
            m.insert("irregular".to_string(), self.irregular);
        }
        m
    }
}

pub fn tile_census(pattern: &Pattern, edges: &[(usize, usize)]) -> TileCensus {
    let n = pattern.points.len();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(i, j) in edges {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    let par = |i: usize| pattern.points[i].par.as_slice();
    let mut census = TileCensus::default();

    for &(u, v) in edges {
        census.triangles += adj[u].intersection(&adj[v]).filter(|&&w| w > v).count();
    }

    // each chordless 4-cycle u-v1-w-v2 is counted once from its smallest
    // vertex u, with w the vertex opposite u and v1 < v2
    for u in 0..n {
        let mut opposite: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for &v in adj[u].iter().filter(|&&v| v > u) {
            for &w in adj[v].iter().filter(|&&w| w > u && w != v) {
                if !adj[u].contains(&w) {
                    opposite.entry(w).or_default().push(v);
                }
            }
        }
        for (w, mids) in opposite {
            for a in 0..mids.len() {
                for b in a + 1..mids.len() {
                    let (v1, v2) = (mids[a], mids[b]);
                    if adj[v1].contains(&v2) {
                        continue;
                    }
                    let closes = (0..par(u).len())
                        .all(|k| (par(u)[k] + par(w)[k] - par(v1)[k] - par(v2)[k]).abs() < tol::EDGE_MATCH);
                    if !closes {
                        census.irregular += 1;
                        continue;
                    }
                    let e1: Vec<f64> = par(v1).iter().zip(par(u)).map(|(a, b)| a - b).collect();
                    let e2: Vec<f64> = par(v2).iter().zip(par(u)).map(|(a, b)| a - b).collect();
                    let c = (dot(&e1, &e2).abs() / (norm(&e1) * norm(&e2))).clamp(0.0, 1.0);
                    let angle = c.acos().to_degrees().round() as u32;
                    *census.quads.entry(angle).or_default() += 1;
                }
            }
        }
    }
    census
}

/// Distinct directions (radians in `(−π, π]`) of the edges' parallel
/// differences, both orientations included, sorted.
pub fn edge_directions(pattern: &Pattern) -> Vec<f64> {
    let mut out: Vec<f64> = Vec::new();
    for e in &pattern.edges {
        let (p, q) = (&pattern.points[e.from].par, &pattern.points[e.to].par);
        if p.len() < 2 {
            continue;
        }
        let (dx, dy) = (q[0] - p[0], q[1] - p[1]);
        for a in [dy.atan2(dx), (-dy).atan2(-dx)] {
            if !out.iter().any(|b| angle_close(a, *b)) {
                out.push(a);
            }
        }
    }
    out.sort_by(|a, b| a.total_cmp(b));
    out
}

fn angle_close(a: f64, b: f64) -> bool {
    let d = (a - b).rem_euclid(2.0 * std::f64::consts::PI);
    d < 1e-9 || 2.0 * std::f64::consts::PI - d < 1e-9
}
