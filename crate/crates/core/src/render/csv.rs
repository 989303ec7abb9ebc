use std::fmt::Write;

use super::fmt_g17;
use crate::cut_project::{Pattern, PatternPoint};
use crate::error::{Error, Result};
use crate::weyl::{weight_to_lattice, OrbitSet};

/// `label,x1,…,xn` then one row per orbit point.
pub fn orbit_csv(orbit: &OrbitSet) -> String {
    let n = orbit.seed.len();
    let mut s = String::from("label");
    for i in 1..=n {
        write!(s, ",x{i}").unwrap();
    }
    s.push('\n');
    let label = orbit.label();
    for p in &orbit.points {
        s.push_str(&label);
        for x in p {
            write!(s, ",{}", fmt_g17(x.to_f64())).unwrap();
        }
        s.push('\n');
    }
    s
}

fn header(rank: usize, par: usize, perp: usize) -> String {
    let mut cols: Vec<String> = (1..=rank).map(|i| format!("a{i}")).collect();
    for axis in ["par_x", "par_y", "par_z"].iter().take(par) {
        cols.push(axis.to_string());
    }
    cols.extend((1..=perp).map(|i| format!("perp_{i}")));
    cols.join(",")
}

/// `a1,…,an,par_x,par_y[,par_z],perp_1,…` with one row per point.
pub fn pattern_csv(pattern: &Pattern) -> String {
    let (par, perp) = pattern
        .points
        .first()
        .map_or((2, 0), |p| (p.par.len(), p.perp.len()));
    let mut s = header(pattern.rank, par, perp);
    s.push('\n');
    for p in &pattern.points {
        let mut row: Vec<String> = p.a.iter().map(|x| x.to_string()).collect();
        row.extend(p.par.iter().chain(&p.perp).map(|&x| fmt_g17(x)));
        s.push_str(&row.join(","));
        s.push('\n');
    }
    s
}

/// Inverse of [`pattern_csv`].
pub fn parse_pattern_csv(text: &str) -> Result<Vec<PatternPoint>> {
    let bad = |msg: String| Error::Numeric(format!("pattern CSV: {msg}"));
    let mut lines = text.lines();
    let head: Vec<&str> = lines.next().ok_or_else(|| bad("empty input".into()))?.split(',').collect();
    let rank = head.iter().filter(|c| c.starts_with('a')).count();
    let par = head.iter().filter(|c| c.starts_with("par_")).count();
    let mut out = Vec::new();
    for (k, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split(',').collect();
        if cells.len() != head.len() {
            return Err(bad(format!("row {} has {} cells, expected {}", k + 1, cells.len(), head.len())));
        }
        let a = cells[..rank]
            .iter()
            .map(|c| c.parse::<i64>().map_err(|e| bad(format!("row {}: {e}", k + 1))))
            .collect::<Result<Vec<_>>>()?;
        let reals = cells[rank..]
            .iter()
            .map(|c| c.parse::<f64>().map_err(|e| bad(format!("row {}: {e}", k + 1))))
            .collect::<Result<Vec<_>>>()?;
        out.push(PatternPoint {
            lattice: weight_to_lattice(&a),
            a,
            par: reals[..par].to_vec(),
            perp: reals[par..].to_vec(),
        });
    }
    Ok(out)
}
