use std::fmt::Write;

use crate::cut_project::Pattern;
use crate::error::{Error, Result};

/// Units per lattice edge length.
pub const EDGE_UNITS: f64 = 40.0;

/// Planar pattern as SVG: edges as segments, points as circles, origin at
/// the centre of the canvas and `y` pointing up.
pub fn pattern_svg(pattern: &Pattern) -> Result<String> {
    if pattern.par_dimension() > 2 {
        return Err(Error::NotPlanar);
    }
    let scale = if pattern.edge_length > 0.0 {
        EDGE_UNITS / pattern.edge_length
    } else {
        EDGE_UNITS
    };
    let half = (pattern.par_radius * scale + EDGE_UNITS / 2.0).ceil();
    let size = 2.0 * half;
    let xy = |p: &[f64]| (p[0] * scale, -p[1] * scale);

    let mut s = String::new();
    writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="{} {} {size} {size}">"#,
        -half, -half
    )
    .unwrap();
    writeln!(
        s,
        r#"<title>B{} {} patch, {} window, shift {}, radius {}</title>"#,
        pattern.rank,
        pattern.frame,
        pattern.window,
        pattern
            .shift
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(","),
        pattern.par_radius
    )
    .unwrap();
    writeln!(s, r##"<rect x="{}" y="{}" width="{size}" height="{size}" fill="#ffffff"/>"##, -half, -half).unwrap();
    writeln!(s, r##"<g stroke="#30507a" stroke-width="1.2" stroke-linecap="round">"##).unwrap();
    for e in &pattern.edges {
        let (x1, y1) = xy(&pattern.points[e.from].par);
        let (x2, y2) = xy(&pattern.points[e.to].par);
        writeln!(
            s,
            r#"<line x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(x1),
            num(y1),
            num(x2),
            num(y2)
        )
        .unwrap();
    }
    writeln!(s, "</g>").unwrap();
    writeln!(s, r##"<g fill="#c0392b">"##).unwrap();
    for p in &pattern.points {
        let (x, y) = xy(&p.par);
        writeln!(s, r#"<circle cx="{}" cy="{}" r="2.5"/>"#, num(x), num(y)).unwrap();
    }
    writeln!(s, "</g>").unwrap();
    s.push_str("</svg>\n");
    Ok(s)
}

fn num(x: f64) -> String {
    let s = format!("{x:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}
