//! Radical closed forms for the Coxeter-frame components of rank 4 and 5
//! lattice vectors. They duplicate [`super::lattice_components`] by hand so
//! transcription errors in either route show up as a mismatch.

use super::{sigma, tau};

/// `[p_1, p_2, p_3, p_4]` for the rank 4 Coxeter frame.
pub fn b4_coxeter_components(a: [i64; 4]) -> [f64; 4] {
    let [a1, a2, a3, a4] = a.map(|x| x as f64);
    let r2 = 2f64.sqrt();
    let lo = (2.0 - r2).sqrt(); // √(2−√2)
    let hi = (2.0 + r2).sqrt(); // √(2+√2)
    let p1 = (lo * a1 + r2 * a2 + hi * a3 + 2.0 * a4) / (2.0 * (2.0 * (2.0 - hi)).sqrt());
    let p4 = (-lo * a1 + r2 * a2 - hi * a3 + 2.0 * a4) / (2.0 * (2.0 * (2.0 + hi)).sqrt());
    let p2 = (-hi * a1 - r2 * a2 + lo * a3 + 2.0 * a4) / (2.0 * (2.0 * (2.0 - lo)).sqrt());
    let p3 = (hi * a1 - r2 * a2 - lo * a3 + 2.0 * a4) / (2.0 * (2.0 * (2.0 + lo)).sqrt());
    [p1, p2, p3, p4]
}

/// `[p_1, …, p_5]` for the rank 5 Coxeter frame.
pub fn b5_coxeter_components(a: [i64; 5]) -> [f64; 5] {
    let [a1, a2, a3, a4, a5] = a.map(|x| x as f64);
    let (t, s) = (tau(), sigma());
    let rt = (2.0 + t).sqrt();
    let rs = (2.0 + s).sqrt();
    let r10 = 10f64.sqrt();
    let p1 = (-s * a1 + rs * a2 + t * a3 + rt * a4 + 2.0 * a5) / (r10 * (2.0 - rt).sqrt());
    // the a_2 term of p_5 carries a minus sign
    let p5 = (-s * a1 - rs * a2 + t * a3 - rt * a4 + 2.0 * a5) / (r10 * (2.0 + rt).sqrt());
    let p2 = (-t * a1 - rt * a2 + s * a3 + rs * a4 + 2.0 * a5) / (r10 * (2.0 - rs).sqrt());
    let p4 = (-t * a1 + rt * a2 + s * a3 - rs * a4 + 2.0 * a5) / (r10 * (2.0 + rs).sqrt());
    let p3 = (a1 - a3 + a5) / 5f64.sqrt();
    [p1, p2, p3, p4, p5]
}
