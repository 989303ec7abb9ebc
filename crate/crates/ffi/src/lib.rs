//! C ABI over `bn-quasicrystal`.
//!
//! Objects are opaque handles created by `*_new`/`*_generate` functions and
//! released with the matching `*_free`. Fallible calls return a
//! [`BnqStatus`]; on failure [`bnq_last_error`] describes the error for the
//! calling thread. Strings returned as `char *` are owned by the caller and
//! released with [`bnq_string_free`]. Panics never cross the boundary: they
//! are reported as [`BnqStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use bn_quasicrystal::cut_project::{symmetry_deviation, PatchConfig, Pattern, ShiftSpec, WindowMode};
use bn_quasicrystal::frame::FrameKind;
use bn_quasicrystal::render::{pattern_csv, pattern_svg, run_checks};
use bn_quasicrystal::weyl::{orbit, OrbitSet, RootDatum};
use bn_quasicrystal::Error;

/// Result of a fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnqStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    RankOutOfRange = 3,
    FrameUnavailable = 4,
    BudgetExceeded = 5,
    /// An output buffer has the wrong length.
    BufferSize = 6,
    Numeric = 7,
    /// The invariant suite found a failing check.
    CheckFailed = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnqFrame {
    Coxeter = 0,
    Fivefold = 1,
    H3 = 2,
    TBasis = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnqWindow {
    Hull = 0,
    Disc = 1,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnqShift {
    Zero = 0,
    /// `½(l_1 + … + l_n)`.
    Omega = 1,
    /// Read `rank` values from `BnqPatchConfig::shift`.
    Custom = 2,
}

/// Patch parameters. `shift` is read only when `shift_kind` is
/// `BNQ_SHIFT_CUSTOM` and must then point to `rank` doubles.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct BnqPatchConfig {
    pub rank: u32,
    pub frame: BnqFrame,
    pub window: BnqWindow,
    pub shift_kind: BnqShift,
    pub shift: *const f64,
    pub par_radius: f64,
    pub budget: f64,
}

/// Root datum of `B_n`.
pub struct BnqRootDatum(RootDatum);

/// Weyl orbit with coordinates in the `l_i` basis.
pub struct BnqOrbit(OrbitSet);

/// Accepted points and edges of a cut-and-project patch.
pub struct BnqPattern(Pattern);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let text = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(text).expect("no interior nul"));
}

fn status_of(e: &Error) -> BnqStatus {
    match e {
        Error::RankOutOfRange { .. } | Error::WrongRank { .. } => BnqStatus::RankOutOfRange,
        Error::FrameUnavailable { .. } | Error::NotSpectralFrame => BnqStatus::FrameUnavailable,
        Error::BudgetExceeded { .. } => BnqStatus::BudgetExceeded,
        Error::Numeric(_) | Error::NotOrthonormal { .. } => BnqStatus::Numeric,
        _ => BnqStatus::InvalidArgument,
    }
}

struct Fail(BnqStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(BnqStatus::NullPointer, format!("{what} is null"))
}

/// Run `f`, converting errors and panics into a status code.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> BnqStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => BnqStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("panic: {msg}"));
            BnqStatus::Panic
        }
    }
}

unsafe fn get<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn out_slice<'a, T>(p: *mut T, len: usize, need: usize, what: &str) -> Result<&'a mut [T], Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    if len != need {
        return Err(Fail(
            BnqStatus::BufferSize,
            format!("{what} has length {len}, expected {need}"),
        ));
    }
    Ok(std::slice::from_raw_parts_mut(p, len))
}

unsafe fn put<T>(out: *mut *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message for the most recent failure on this thread (empty if none). The
/// pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn bnq_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn bnq_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(s) => s,
        Err(_) => panic!("version contains nul"),
    };
    VERSION.as_ptr()
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bnq_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_root_datum_new(rank: u32, out: *mut *mut BnqRootDatum) -> BnqStatus {
    guard(|| {
        let d = RootDatum::new(rank as usize)?;
        put(out, BnqRootDatum(d), "out")
    })
}

/// # Safety
/// `datum` must be null or a handle from [`bnq_root_datum_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bnq_root_datum_free(datum: *mut BnqRootDatum) {
    if !datum.is_null() {
        drop(Box::from_raw(datum));
    }
}

/// Rank of the datum, or 0 for a null handle.
///
/// # Safety
/// `datum` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_root_datum_rank(datum: *const BnqRootDatum) -> u32 {
    datum.as_ref().map_or(0, |d| d.0.rank() as u32)
}

/// Copy the Cartan matrix, row-major, into `out` (`len` = rank²).
///
/// # Safety
/// `datum` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bnq_root_datum_cartan(
    datum: *const BnqRootDatum,
    out: *mut i64,
    len: usize,
) -> BnqStatus {
    guard(|| {
        let d = get(datum, "datum")?;
        let n = d.0.rank();
        let buf = out_slice(out, len, n * n, "out")?;
        for (i, row) in d.0.cartan().iter().enumerate() {
            buf[i * n..(i + 1) * n].copy_from_slice(row);
        }
        Ok(())
    })
}

/// Orbit of the highest weight `Σ a_i ω_i` with `weight` = `a_1 … a_n`.
///
/// # Safety
/// `datum` must be a live handle, `weight` must hold `len` values and `out`
/// must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnq_orbit_new(
    datum: *const BnqRootDatum,
    weight: *const u32,
    len: usize,
    out: *mut *mut BnqOrbit,
) -> BnqStatus {
    guard(|| {
        let d = get(datum, "datum")?;
        if weight.is_null() {
            return Err(null("weight"));
        }
        let w = std::slice::from_raw_parts(weight, len);
        put(out, BnqOrbit(orbit(&d.0, w)?), "out")
    })
}

/// # Safety
/// `orbit` must be null or a handle from [`bnq_orbit_new`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bnq_orbit_free(orbit: *mut BnqOrbit) {
    if !orbit.is_null() {
        drop(Box::from_raw(orbit));
    }
}

/// Number of orbit points, or 0 for a null handle.
///
/// # Safety
/// `orbit` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_orbit_len(orbit: *const BnqOrbit) -> usize {
    orbit.as_ref().map_or(0, |o| o.0.len())
}

/// Copy the points, row-major, into `out` (`len` = points × rank).
///
/// # Safety
/// `orbit` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bnq_orbit_coords(orbit: *const BnqOrbit, out: *mut f64, len: usize) -> BnqStatus {
    guard(|| {
        let o = get(orbit, "orbit")?;
        let n = o.0.seed.len();
        let buf = out_slice(out, len, o.0.len() * n, "out")?;
        for (row, p) in buf.chunks_mut(n.max(1)).zip(&o.0.points) {
            for (x, v) in row.iter_mut().zip(p) {
                *x = v.to_f64();
            }
        }
        Ok(())
    })
}

/// Default configuration: Coxeter frame, `ω_n` shift, disc window for rank
/// 4 and hull window otherwise, default candidate budget.
#[no_mangle]
pub extern "C" fn bnq_patch_config_default(rank: u32, par_radius: f64) -> BnqPatchConfig {
    let base = PatchConfig::new(rank as usize, par_radius);
    BnqPatchConfig {
        rank,
        frame: BnqFrame::Coxeter,
        window: if base.window == WindowMode::Disc {
            BnqWindow::Disc
        } else {
            BnqWindow::Hull
        },
        shift_kind: BnqShift::Omega,
        shift: ptr::null(),
        par_radius,
        budget: base.budget,
    }
}

unsafe fn patch_config(c: &BnqPatchConfig) -> Result<PatchConfig, Fail> {
    let rank = c.rank as usize;
    let shift = match c.shift_kind {
        BnqShift::Zero => ShiftSpec::Zero,
        BnqShift::Omega => ShiftSpec::Omega,
        BnqShift::Custom => {
            if c.shift.is_null() {
                return Err(null("shift"));
            }
            ShiftSpec::Custom(std::slice::from_raw_parts(c.shift, rank).to_vec())
        }
    };
    Ok(PatchConfig {
        rank,
        frame: match c.frame {
            BnqFrame::Coxeter => FrameKind::Coxeter,
            BnqFrame::Fivefold => FrameKind::Fivefold,
            BnqFrame::H3 => FrameKind::H3,
            BnqFrame::TBasis => FrameKind::TBasis,
        },
        window: match c.window {
            BnqWindow::Hull => WindowMode::Hull,
            BnqWindow::Disc => WindowMode::Disc,
        },
        shift,
        radius: c.par_radius,
        budget: c.budget,
    })
}

/// Enumerate the patch described by `config`.
///
/// # Safety
/// `config` must point to a valid configuration (with a readable `shift`
/// array when custom) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_generate(
    config: *const BnqPatchConfig,
    out: *mut *mut BnqPattern,
) -> BnqStatus {
    guard(|| {
        let cfg = patch_config(get(config, "config")?)?;
        put(out, BnqPattern(cfg.generate()?), "out")
    })
}

/// # Safety
/// `pattern` must be null or a handle from [`bnq_pattern_generate`], not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_free(pattern: *mut BnqPattern) {
    if !pattern.is_null() {
        drop(Box::from_raw(pattern));
    }
}

/// Number of accepted points, or 0 for a null handle.
///
/// # Safety
/// `pattern` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_len(pattern: *const BnqPattern) -> usize {
    pattern.as_ref().map_or(0, |p| p.0.len())
}

/// Dimension of the parallel space (2 or 3), or 0 for an empty or null pattern.
///
/// # Safety
/// `pattern` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_par_dimension(pattern: *const BnqPattern) -> usize {
    pattern.as_ref().map_or(0, |p| p.0.par_dimension())
}

/// Number of lattice-unit edges, or 0 for a null handle.
///
/// # Safety
/// `pattern` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_edge_count(pattern: *const BnqPattern) -> usize {
    pattern.as_ref().map_or(0, |p| p.0.edges.len())
}

/// Copy parallel coordinates, row-major (`len` = points × par dimension).
///
/// # Safety
/// `pattern` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_par(pattern: *const BnqPattern, out: *mut f64, len: usize) -> BnqStatus {
    guard(|| {
        let p = get(pattern, "pattern")?;
        let d = p.0.par_dimension();
        let buf = out_slice(out, len, p.0.len() * d, "out")?;
        for (row, q) in buf.chunks_mut(d.max(1)).zip(&p.0.points) {
            row.copy_from_slice(&q.par);
        }
        Ok(())
    })
}

/// Copy weight coefficients `a`, row-major (`len` = points × rank).
///
/// # Safety
/// `pattern` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_weights(pattern: *const BnqPattern, out: *mut i64, len: usize) -> BnqStatus {
    guard(|| {
        let p = get(pattern, "pattern")?;
        let n = p.0.rank;
        let buf = out_slice(out, len, p.0.len() * n, "out")?;
        for (row, q) in buf.chunks_mut(n).zip(&p.0.points) {
            row.copy_from_slice(&q.a);
        }
        Ok(())
    })
}

/// Copy edges as point-index pairs (`len` = 2 × edges).
///
/// # Safety
/// `pattern` must be a live handle and `out` must hold `len` values.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_edges(pattern: *const BnqPattern, out: *mut usize, len: usize) -> BnqStatus {
    guard(|| {
        let p = get(pattern, "pattern")?;
        let buf = out_slice(out, len, 2 * p.0.edges.len(), "out")?;
        for (pair, e) in buf.chunks_mut(2).zip(&p.0.edges) {
            pair[0] = e.from;
            pair[1] = e.to;
        }
        Ok(())
    })
}

/// Largest nearest-neighbour mismatch after rotating the planar pattern by
/// `2π/k` about its centroid.
///
/// # Safety
/// `pattern` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_symmetry_deviation(
    pattern: *const BnqPattern,
    k: u32,
    out: *mut f64,
) -> BnqStatus {
    guard(|| {
        let p = get(pattern, "pattern")?;
        if out.is_null() {
            return Err(null("out"));
        }
        *out = symmetry_deviation(&p.0, k)?;
        Ok(())
    })
}

/// Pattern as CSV; null on failure. Free with [`bnq_string_free`].
///
/// # Safety
/// `pattern` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_csv(pattern: *const BnqPattern) -> *mut c_char {
    let mut s = ptr::null_mut();
    let status = guard(|| {
        s = owned_string(pattern_csv(&get(pattern, "pattern")?.0));
        Ok(())
    });
    if status == BnqStatus::Ok { s } else { ptr::null_mut() }
}

/// Planar pattern as SVG; null on failure. Free with [`bnq_string_free`].
///
/// # Safety
/// `pattern` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn bnq_pattern_svg(pattern: *const BnqPattern) -> *mut c_char {
    let mut s = ptr::null_mut();
    let status = guard(|| {
        s = owned_string(pattern_svg(&get(pattern, "pattern")?.0)?);
        Ok(())
    });
    if status == BnqStatus::Ok { s } else { ptr::null_mut() }
}

/// Run the invariant suite. When `report` is non-null it receives the JSON
/// report, to be freed with [`bnq_string_free`]. Returns
/// `BNQ_STATUS_CHECK_FAILED` naming the failures if any check fails.
///
/// # Safety
/// `report` must be null or writable.
#[no_mangle]
pub unsafe extern "C" fn bnq_check_run(report: *mut *mut c_char) -> BnqStatus {
    guard(|| {
        let r = run_checks();
        if !report.is_null() {
            *report = owned_string(serde_json::to_string(&r).expect("serializable"));
        }
        let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
        if failed.is_empty() {
            Ok(())
        } else {
            Err(Fail(BnqStatus::CheckFailed, failed.join(", ")))
        }
    })
}
