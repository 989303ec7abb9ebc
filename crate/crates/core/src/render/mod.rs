//! Serializers for point sets, patterns and solids, and the invariant suite
//! run by `bnq check`.

mod checks;
mod csv;
mod off;
mod svg;

pub use checks::{run_checks, CheckReport, CheckResult};
pub use csv::{orbit_csv, parse_pattern_csv, pattern_csv};
pub use off::off;
pub use svg::pattern_svg;

/// `%.17g`: 17 significant digits, trailing zeros trimmed, exponent form
/// outside `1e-4 ≤ |x| < 1e17`. Negative zero prints as `0`.
pub fn fmt_g17(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.16e}", x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-4..17).contains(&exp) {
        let decimals = (16 - exp).max(0) as usize;
        trim_zeros(format!("{:.*}", decimals, x))
    } else {
        let m = trim_zeros(mantissa.to_string());
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}
