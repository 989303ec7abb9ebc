//! Root datum of `B_n`, the Weyl group as signed permutations, orbits, and
//! the named subgroups used for projections.

mod datum;
mod half;
mod orbit;
mod signed_perm;
mod subgroups;

pub use datum::{
    apply_generator, lattice_to_weight, weight_to_lattice, RootDatum, MAX_RANK, MIN_RANK,
};
pub use half::{dot_quarters, to_f64_vec, HalfInt};
pub use orbit::{orbit, orbit_label, orbit_under, OrbitSet};
pub use signed_perm::{generate_group, SignedPerm};
pub use subgroups::{
    coxeter_element, d5d_generators, dihedral_generators, dn_generators, h3_generators,
    h3_generators_conjugate,
};

/// The `2n` short roots `±l_i`.
pub fn short_roots(n: usize) -> Vec<Vec<HalfInt>> {
    let mut out = Vec::with_capacity(2 * n);
    for i in 0..n {
        for s in [HalfInt::ONE, -HalfInt::ONE] {
            let mut v = vec![HalfInt::ZERO; n];
            v[i] = s;
            out.push(v);
        }
    }
    out.sort();
    out
}

/// The `2n(n−1)` long roots `±l_i ± l_j`.
pub fn long_roots(n: usize) -> Vec<Vec<HalfInt>> {
    let mut out = Vec::with_capacity(2 * n * (n - 1));
    for i in 0..n {
        for j in i + 1..n {
            for si in [HalfInt::ONE, -HalfInt::ONE] {
                for sj in [HalfInt::ONE, -HalfInt::ONE] {
                    let mut v = vec![HalfInt::ZERO; n];
                    v[i] = si;
                    v[j] = sj;
                    out.push(v);
                }
            }
        }
    }
    out.sort();
    out
}

/// The `2^n` cube vertices `½(±l_1 ± … ± l_n)`, sorted.
pub fn cube_vertices(n: usize) -> Vec<Vec<HalfInt>> {
    let mut out: Vec<Vec<HalfInt>> = (0..1u32 << n)
        .map(|mask| {
            (0..n)
                .map(|k| {
                    if mask >> k & 1 == 1 {
                        -HalfInt::HALF
                    } else {
                        HalfInt::HALF
                    }
                })
                .collect()
        })
        .collect();
    out.sort();
    out
}
