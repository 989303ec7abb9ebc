use std::fmt::Write;

use super::fmt_g17;
use crate::voronoi::Polyhedron;

/// Object File Format: header, vertex count line, vertices, then faces.
pub fn off(poly: &Polyhedron) -> String {
    let mut s = String::from("OFF\n");
    writeln!(s, "{} {} {}", poly.vertices.len(), poly.faces.len(), poly.edge_count()).unwrap();
    for v in &poly.vertices {
        writeln!(s, "{} {} {}", fmt_g17(v[0]), fmt_g17(v[1]), fmt_g17(v[2])).unwrap();
    }
    for f in &poly.faces {
        let idx: Vec<String> = f.iter().map(|i| i.to_string()).collect();
        writeln!(s, "{} {}", f.len(), idx.join(" ")).unwrap();
    }
    s
}
