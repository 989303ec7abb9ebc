//! Numeric tolerances shared across the crate.

/// Orthonormality of frames and matrix identities.
pub const ORTHO: f64 = 1e-12;

/// General real-valued comparisons (eigen residuals, projections).
pub const REAL: f64 = 1e-9;

/// Point de-duplication and window boundary slack.
pub const POINT: f64 = 1e-9;

/// Matching a par-space difference against a projected edge vector.
pub const EDGE_MATCH: f64 = 1e-6;

/// Dihedral tolerance for merging coplanar hull faces.
pub const COPLANAR: f64 = 1e-6;

/// Default cap on enumerated candidate tuples.
pub const DEFAULT_BUDGET: f64 = 1e8;
