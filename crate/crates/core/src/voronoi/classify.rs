use std::fmt;

use serde::Serialize;

use super::ProjectedPoint;
use crate::frame::{sigma, tau};

const NORM_CLASS_TOL: f64 = 1e-6;
const RATIO_TOL: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolidKind {
    RhombicDodecahedron,
    RhombicIcosahedron,
    RhombicTriacontahedron,
    DodecahedralStar,
    PentagonalAntiprism,
    Icosahedron,
    Dodecahedron,
    Icosidodecahedron,
    Unclassified,
}

impl SolidKind {
    pub fn name(self) -> &'static str {
        match self {
            SolidKind::RhombicDodecahedron => "rhombic dodecahedron",
            SolidKind::RhombicIcosahedron => "rhombic icosahedron",
            SolidKind::RhombicTriacontahedron => "rhombic triacontahedron",
            SolidKind::DodecahedralStar => "dodecahedral star",
            SolidKind::PentagonalAntiprism => "pentagonal antiprism",
            SolidKind::Icosahedron => "icosahedron",
            SolidKind::Dodecahedron => "dodecahedron",
            SolidKind::Icosidodecahedron => "icosidodecahedron",
            SolidKind::Unclassified => "unclassified",
        }
    }

    /// File-name friendly tag.
    pub fn slug(self) -> String {
        self.name().replace(' ', "_")
    }
}

impl fmt::Display for SolidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NormClass {
    pub norm: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SolidReport {
    pub label: SolidKind,
    pub vertex_count: usize,
    /// Distinct vertex norms, largest first.
    pub norm_classes: Vec<NormClass>,
    pub suborbits: Vec<usize>,
    /// Input points that projected onto the origin (not counted as vertices).
    pub at_origin: usize,
}

/// Label a 3D point set by its vertex count and norm signature. Points at
/// the origin are set aside; coincident points count once.
pub fn classify_solid(points: &[ProjectedPoint]) -> SolidReport {
    let mut at_origin = 0;
    let mut norms = Vec::new();
    for p in points {
        let r = p.norm();
        if r < crate::tol::POINT {
            at_origin += p.multiplicity;
        } else {
            norms.push(r);
        }
    }
    norms.sort_by(|a, b| b.total_cmp(a));
    let mut classes: Vec<NormClass> = Vec::new();
    for r in norms {
        match classes.last_mut() {
            Some(c) if (c.norm - r).abs() <= NORM_CLASS_TOL * c.norm.max(1.0) => c.count += 1,
            _ => classes.push(NormClass { norm: r, count: 1 }),
        }
    }
    let vertex_count: usize = classes.iter().map(|c| c.count).sum();
    SolidReport {
        label: label_for(vertex_count, &classes),
        vertex_count,
        norm_classes: classes,
        suborbits: vec![vertex_count],
        at_origin,
    }
}

/// [`classify_solid`] on the union of several orbits, recording their sizes.
pub fn classify_partition(parts: &[Vec<ProjectedPoint>]) -> SolidReport {
    let all: Vec<ProjectedPoint> = parts.iter().flatten().cloned().collect();
    let mut report = classify_solid(&all);
    report.suborbits = parts
        .iter()
        .map(|p| p.iter().map(|q| q.multiplicity).sum())
        .collect();
    report
}

fn label_for(count: usize, classes: &[NormClass]) -> SolidKind {
    let single = classes.len() == 1;
    match count {
        14 => SolidKind::RhombicDodecahedron,
        22 => SolidKind::RhombicIcosahedron,
        10 => SolidKind::PentagonalAntiprism,
        12 if single => SolidKind::Icosahedron,
        20 if single => SolidKind::Dodecahedron,
        30 if single => SolidKind::Icosidodecahedron,
        32 if classes.len() == 2 => {
            let ratio = classes[0].norm / classes[1].norm;
            // τ/√2 : √(0.3(2+τ)) versus √(0.3(2+σ)) : −σ/√2
            let tri = (tau() / 2f64.sqrt()) / (0.3 * (2.0 + tau())).sqrt();
            let star = (0.3 * (2.0 + sigma())).sqrt() / (-sigma() / 2f64.sqrt());
            if (ratio - tri).abs() < RATIO_TOL {
                SolidKind::RhombicTriacontahedron
            } else if (ratio - star).abs() < RATIO_TOL {
                SolidKind::DodecahedralStar
            } else {
                SolidKind::Unclassified
            }
        }
        _ => SolidKind::Unclassified,
    }
}
