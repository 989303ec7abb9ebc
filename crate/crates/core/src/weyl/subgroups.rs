//! Named generating sets inside `W(B_n)`.

use super::datum::RootDatum;
use super::signed_perm::SignedPerm;
use crate::error::{Error, Result};

/// Bipartite split of the simple reflections: `R_1 = r_1 r_3 …` over odd
/// indices and `R_2 = r_2 r_4 …` over even ones. Factors within each product
/// commute, so both are involutions and `R_1 R_2` is a Coxeter element of
/// order `h = 2n`.
pub fn dihedral_generators(datum: &RootDatum) -> (SignedPerm, SignedPerm) {
    let n = datum.rank();
    let odd: Vec<usize> = (1..=n).step_by(2).collect();
    let even: Vec<usize> = (2..=n).step_by(2).collect();
    (
        datum.word(&odd).expect("indices in range"),
        datum.word(&even).expect("indices in range"),
    )
}

/// Coxeter element `R_1 R_2`.
pub fn coxeter_element(datum: &RootDatum) -> SignedPerm {
    let (r1, r2) = dihedral_generators(datum);
    &r1 * &r2
}

/// Generators of `W(D_n)`: `r'_i = r_i` for `i < n` and
/// `r'_n = r_n r_{n−1} r_n`, which sends `l_{n−1} ↦ −l_n`, `l_n ↦ −l_{n−1}`.
pub fn dn_generators(datum: &RootDatum) -> Result<Vec<SignedPerm>> {
    let n = datum.rank();
    if n < 3 {
        return Err(Error::WrongRank {
            what: "W(D_n) generators",
            expected: 3,
            found: n,
        });
    }
    let mut gens: Vec<SignedPerm> = (1..n)
        .map(|i| datum.generator(i))
        .collect::<Result<_>>()?;
    gens.push(datum.word(&[n, n - 1, n])?);
    Ok(gens)
}

fn require_rank(datum: &RootDatum, what: &'static str, expected: usize) -> Result<()> {
    if datum.rank() != expected {
        return Err(Error::WrongRank {
            what,
            expected,
            found: datum.rank(),
        });
    }
    Ok(())
}

/// Icosahedral generators inside `W(D_6) ⊂ W(B_6)`:
/// `R_1 = r_1 r_5`, `R_2 = r_2 r_4`, `R_3 = r_3 r_6 r_5 r_6`.
pub fn h3_generators(datum: &RootDatum) -> Result<[SignedPerm; 3]> {
    require_rank(datum, "icosahedral generators", 6)?;
    Ok([
        datum.word(&[1, 5])?,
        datum.word(&[2, 4])?,
        datum.word(&[3, 6, 5, 6])?,
    ])
}

/// The conjugate embedding obtained from the `D_6` diagram symmetry:
/// `R_1 = r_1 r_6 r_5 r_6`, `R_2 = r_2 r_4`, `R_3 = r_3 r_5`.
pub fn h3_generators_conjugate(datum: &RootDatum) -> Result<[SignedPerm; 3]> {
    require_rank(datum, "icosahedral generators", 6)?;
    Ok([
        datum.word(&[1, 6, 5, 6])?,
        datum.word(&[2, 4])?,
        datum.word(&[3, 5])?,
    ])
}

/// `D_5d ≅ W(H_2) × C_2` inside `W(B_5)`: `R_1 = r_1 r_3`, `R_2 = r_2 r_4`,
/// `R_3 = (r_1 r_2 r_3 r_4 r_5)^5 = −I`.
pub fn d5d_generators(datum: &RootDatum) -> Result<[SignedPerm; 3]> {
    require_rank(datum, "D5d generators", 5)?;
    let c = datum.word(&[1, 2, 3, 4, 5])?;
    Ok([datum.word(&[1, 3])?, datum.word(&[2, 4])?, c.pow(5)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::half::HalfInt;
    use crate::weyl::orbit::{orbit, orbit_under};
    use crate::weyl::signed_perm::generate_group;

    #[test]
    fn b4_dihedral_split() {
        let d = RootDatum::new(4).unwrap();
        let (r1, r2) = dihedral_generators(&d);
        assert_eq!(r1, d.word(&[1, 3]).unwrap());
        assert_eq!(r2, d.word(&[2, 4]).unwrap());
    }

    #[test]
    fn dihedral_involutions_and_coxeter_order() {
        for n in 2..=8 {
            let d = RootDatum::new(n).unwrap();
            let (r1, r2) = dihedral_generators(&d);
            assert!((&r1 * &r1).is_identity());
            assert!((&r2 * &r2).is_identity());
            assert_eq!(coxeter_element(&d).order(), 2 * n as u32, "n = {n}");
        }
    }

    #[test]
    fn dn_last_generator() {
        let d = RootDatum::new(6).unwrap();
        let g = dn_generators(&d).unwrap();
        let r6 = &g[5];
        assert_eq!(r6.image(4), (5, true));
        assert_eq!(r6.image(5), (4, true));
        assert!(dn_generators(&RootDatum::new(2).unwrap()).is_err());
    }

    #[test]
    fn dn_group_orders() {
        let d3 = RootDatum::new(3).unwrap();
        assert_eq!(generate_group(&dn_generators(&d3).unwrap()).len(), 24);
        let d4 = RootDatum::new(4).unwrap();
        assert_eq!(generate_group(&dn_generators(&d4).unwrap()).len(), 192);
    }

    #[test]
    fn cube_orbit_splits_under_dn() {
        for n in 3..=8 {
            let d = RootDatum::new(n).unwrap();
            let gens = dn_generators(&d).unwrap();
            let mut a = vec![0; n];
            a[n - 1] = 1;
            let cube = orbit(&d, &a).unwrap();
            let first = orbit_under(&gens, &cube.points[0]);
            assert_eq!(first.len(), 1 << (n - 1));
            // each half has constant parity of minus signs
            let parity = |p: &Vec<HalfInt>| p.iter().filter(|x| x.is_negative()).count() % 2;
            let p0 = parity(&first[0]);
            assert!(first.iter().all(|p| parity(p) == p0));
        }
    }

    #[test]
    fn d5d_relations() {
        let d = RootDatum::new(5).unwrap();
        let [r1, r2, r3] = d5d_generators(&d).unwrap();
        assert_eq!(r3, SignedPerm::negation(5));
        assert_eq!((&r1 * &r2).order(), 5);
        assert_eq!(generate_group(&[r1, r2, r3]).len(), 20);
        assert!(d5d_generators(&RootDatum::new(4).unwrap()).is_err());
    }

    #[test]
    fn h3_relations() {
        let d = RootDatum::new(6).unwrap();
        for [r1, r2, r3] in [
            h3_generators(&d).unwrap(),
            h3_generators_conjugate(&d).unwrap(),
        ] {
            for r in [&r1, &r2, &r3] {
                assert_eq!(r.order(), 2);
            }
            assert_eq!((&r1 * &r3).order(), 2);
            assert_eq!((&r1 * &r2).order(), 3);
            assert_eq!((&r2 * &r3).order(), 5);
            assert_eq!(generate_group(&[r1, r2, r3]).len(), 120);
        }
        assert!(h3_generators(&RootDatum::new(5).unwrap()).is_err());
    }

    #[test]
    fn h3_embeddings_are_conjugate_by_r6() {
        let d = RootDatum::new(6).unwrap();
        let r6 = d.generator(6).unwrap();
        let a = h3_generators(&d).unwrap();
        let b = h3_generators_conjugate(&d).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(&(&r6 * x) * &r6, *y);
        }
    }
}
