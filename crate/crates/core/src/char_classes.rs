//! Chern and Pontrjagin classes of `P(E)` and the two Riemann–Roch
//! expressions for `χ(O)` in complex dimension four.

use std::collections::BTreeMap;

use crate::presentations::bundle_over_curve;
use crate::ring::{frac, int, ClassElement, Ring, RingError, Scalar};

/// Chern data of one space, together with its characteristic numbers.
#[derive(Clone, Debug)]
pub struct ChernData {
    pub ring: Ring,
    pub c1: ClassElement,
    pub c2: ClassElement,
    pub c3: ClassElement,
    pub c4: ClassElement,
    pub p1: ClassElement,
    pub p2: ClassElement,
    pub chi: Scalar,
    /// Keys: `c1^4`, `c1^2*c2`, `c2^2`, `c1*c3`, `c4`, `p1^2`, `p2`.
    pub numbers: BTreeMap<&'static str, Scalar>,
}

/// Total Chern class of `T_{P(E)}` for `rank E = 4`, `deg E = k`, `g(C) = g`.
///
/// From `0 -> O -> π*E(1) -> T_P -> π*T_C -> 0`:
/// `c(T_P) = c(π*E ⊗ O(1)) · (1 + (2-2g) f)`, and since only `c_1(E) = k f`
/// survives on a curve, `c(π*E ⊗ O(1)) = (1+s)^4 + k f (1+s)^3`.
pub fn total_chern_class(ring: &Ring, g: u32, k: i64) -> ClassElement {
    let one_plus_s = ring.one().add(&ring.generator(0)).expect("same ring");
    let f = ring.generator(1);
    let twisted = one_plus_s
        .pow(4)
        .add(&f.scale(&int(k)).mul(&one_plus_s.pow(3)).expect("same ring"))
        .expect("same ring");
    let base = ring
        .one()
        .add(&f.scale(&int(2 - 2 * i64::from(g))))
        .expect("same ring");
    twisted.mul(&base).expect("same ring")
}

/// Top Chern class of `π*E ⊗ O(1)`, which vanishes by the defining relation.
pub fn top_chern_of_twisted_pullback(ring: &Ring, k: i64) -> ClassElement {
    let s = ring.generator(0);
    let f = ring.generator(1);
    s.pow(4)
        .add(&s.pow(3).mul(&f).expect("same ring").scale(&int(k)))
        .expect("same ring")
}

pub fn chern_of_projectivization(g: u32, k: i64) -> ChernData {
    let ring = bundle_over_curve(g, k, 4).expect("rank 4 is valid");
    let total = total_chern_class(&ring, g, k);
    let c1 = total.graded_part(2);
    let c2 = total.graded_part(4);
    let c3 = total.graded_part(6);
    let c4 = total.graded_part(8);
    chern_data_from_classes(ring, c1, c2, c3, c4).expect("graded parts have the right degrees")
}

/// Fills in Pontrjagin classes, χ and characteristic numbers for given `c_i`.
pub fn chern_data_from_classes(
    ring: Ring,
    c1: ClassElement,
    c2: ClassElement,
    c3: ClassElement,
    c4: ClassElement,
) -> Result<ChernData, RingError> {
    let (p1, p2) = pontrjagin(&c1, &c2, &c3, &c4)?;
    let chi = chi_via_chern(&c1, &c2, &c3, &c4)?;
    let mut numbers = BTreeMap::new();
    numbers.insert("c1^4", c1.pow(4).integrate()?);
    numbers.insert("c1^2*c2", c1.pow(2).mul(&c2)?.integrate()?);
    numbers.insert("c2^2", c2.pow(2).integrate()?);
    numbers.insert("c1*c3", c1.mul(&c3)?.integrate()?);
    numbers.insert("c4", c4.integrate()?);
    numbers.insert("p1^2", p1.pow(2).integrate()?);
    numbers.insert("p2", p2.integrate()?);
    Ok(ChernData {
        ring,
        c1,
        c2,
        c3,
        c4,
        p1,
        p2,
        chi,
        numbers,
    })
}

fn expect_degree(c: &ClassElement, degree: u32) -> Result<(), RingError> {
    if c.has_degree(degree) {
        Ok(())
    } else {
        match c.degree() {
            Some(found) => Err(RingError::WrongDegree {
                expected: degree,
                found,
            }),
            None => Err(RingError::NotHomogeneous),
        }
    }
}

/// `p1 = c1^2 - 2 c2`, `p2 = c2^2 - 2 c1 c3 + 2 c4`.
pub fn pontrjagin(
    c1: &ClassElement,
    c2: &ClassElement,
    c3: &ClassElement,
    c4: &ClassElement,
) -> Result<(ClassElement, ClassElement), RingError> {
    let two = int(2);
    let p1 = c1.pow(2).sub(&c2.scale(&two))?;
    let p2 = c2
        .pow(2)
        .sub(&c1.mul(c3)?.scale(&two))?
        .add(&c4.scale(&two))?;
    Ok((p1, p2))
}

/// `χ = -(1/720) ∫ (c1^4 - 4 c1^2 c2 - 3 c2^2 - c1 c3 + c4)`.
pub fn chi_via_chern(
    c1: &ClassElement,
    c2: &ClassElement,
    c3: &ClassElement,
    c4: &ClassElement,
) -> Result<Scalar, RingError> {
    expect_degree(c1, 2)?;
    expect_degree(c2, 4)?;
    expect_degree(c3, 6)?;
    expect_degree(c4, 8)?;
    let integrand = c1
        .pow(4)
        .sub(&c1.pow(2).mul(c2)?.scale(&int(4)))?
        .sub(&c2.pow(2).scale(&int(3)))?
        .sub(&c1.mul(c3)?)?
        .add(c4)?;
    Ok(-frac(1, 720) * integrand.integrate()?)
}

/// `χ = -(1/720) ∫ (p1^2 + (1/2) p2 - (15/2) c2^2)`.
pub fn chi_via_pontrjagin(
    p1: &ClassElement,
    p2: &ClassElement,
    c2: &ClassElement,
) -> Result<Scalar, RingError> {
    expect_degree(p1, 4)?;
    expect_degree(p2, 8)?;
    expect_degree(c2, 4)?;
    let integrand = p1
        .pow(2)
        .add(&p2.scale(&frac(1, 2)))?
        .sub(&c2.pow(2).scale(&frac(15, 2)))?;
    Ok(-frac(1, 720) * integrand.integrate()?)
}

/// `c2` recovered from `c1` and `p1`, with a flag for integrality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedC2 {
    pub class: ClassElement,
    pub integral: bool,
}

/// `c2 = (c1^2 - p1) / 2`.
pub fn c2_from_c1_p1(c1: &ClassElement, p1: &ClassElement) -> Result<DerivedC2, RingError> {
    expect_degree(c1, 2)?;
    expect_degree(p1, 4)?;
    let class = c1.pow(2).sub(p1)?.scale(&frac(1, 2));
    let integral = class.is_integral();
    Ok(DerivedC2 { class, integral })
}

/// `p1` of `P(E)` over a curve with `deg E = k`: `4 s^2 + 2k sf`.
pub fn p1_of_projectivization(ring: &Ring, k: i64) -> ClassElement {
    ring.class(&[(int(4), 2, 0), (int(2 * k), 1, 1)])
}

/// `∫ c2^2` for `c2` recovered from `c1 = a s + b f` and the `p1` of `P(E)`.
pub fn c2_squared_from_c1(ring: &Ring, k: i64, a: i64, b: i64) -> Result<Scalar, RingError> {
    let c2 = c2_from_c1_p1(&ring.linear(a, b), &p1_of_projectivization(ring, k))?;
    c2.class.pow(2).integrate()
}

/// The Pontrjagin form of Riemann–Roch solved for `∫ c2^2`:
/// `∫ c2^2 = (2/15) (∫ p1^2 + (1/2) ∫ p2 + 720 χ)`.
pub fn c2_squared_from_pontrjagin_numbers(p1_sq: &Scalar, p2: &Scalar, chi: &Scalar) -> Scalar {
    frac(2, 15) * (p1_sq + p2 * frac(1, 2) + chi * int(720))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_two_classes_at_g2_k1() {
        let d = chern_of_projectivization(2, 1);
        assert_eq!(d.c1.to_string(), "4*s - f");
        assert_eq!(d.c2.to_string(), "6*s^2 - 5*s*f");
    }

    #[test]
    fn higher_classes_match_root_expansion() {
        for g in 0..4u32 {
            for k in -3..5i64 {
                let d = chern_of_projectivization(g, k);
                let gi = i64::from(g);
                let c3 = d
                    .ring
                    .class(&[(int(4), 3, 0), (int(3 * k + 12 - 12 * gi), 2, 1)]);
                let c4 = d.ring.class(&[(int(8 - 8 * gi), 3, 1)]);
                assert_eq!(d.c3, c3);
                assert_eq!(d.c4, c4);
                assert!(top_chern_of_twisted_pullback(&d.ring, k).is_zero());
            }
        }
    }

    #[test]
    fn pontrjagin_of_projectivization() {
        for (g, k) in [(0, 0), (2, 1), (3, -5), (5, 7)] {
            let d = chern_of_projectivization(g, k);
            assert_eq!(d.p1, p1_of_projectivization(&d.ring, k));
            assert_eq!(d.numbers["p2"], int(0));
            assert_eq!(d.numbers["p1^2"], int(0));
        }
        let r = bundle_over_curve(1, 1, 4).unwrap();
        let z = r.zero();
        let (p1, p2) = pontrjagin(&z, &z, &z, &z).unwrap();
        assert!(p1.is_zero() && p2.is_zero());
    }

    #[test]
    fn chi_examples() {
        let d = chern_of_projectivization(2, 1);
        assert_eq!(chi_via_chern(&d.c1, &d.c2, &d.c3, &d.c4).unwrap(), int(-1));
        for k in 0..8 {
            let d = chern_of_projectivization(0, k);
            assert_eq!(d.chi, int(1));
            assert_eq!(chi_via_pontrjagin(&d.p1, &d.p2, &d.c2).unwrap(), int(1));
        }
        let r = bundle_over_curve(0, 0, 4).unwrap();
        let z = r.zero();
        assert_eq!(chi_via_chern(&z, &z, &z, &z).unwrap(), int(0));
        assert_eq!(chi_via_pontrjagin(&z, &z, &z).unwrap(), int(0));
    }

    #[test]
    fn chi_from_c2_squared_alone() {
        // p1 = p2 = 0, ∫c2^2 = 96: -(1/720)(-(15/2)·96) = 1.
        let r = bundle_over_curve(0, 0, 4).unwrap();
        let z = r.zero();
        let c2 = r.class(&[(int(6), 2, 0), (int(8), 1, 1)]);
        assert_eq!(c2.pow(2).integrate().unwrap(), int(96));
        assert_eq!(chi_via_pontrjagin(&z, &z, &c2).unwrap(), int(1));
    }

    #[test]
    fn chi_rejects_wrong_degrees() {
        let r = bundle_over_curve(0, 0, 4).unwrap();
        let z = r.zero();
        let s = r.generator(0);
        assert_eq!(
            chi_via_chern(&z, &s, &z, &z),
            Err(RingError::WrongDegree {
                expected: 4,
                found: 2
            })
        );
        assert!(chi_via_pontrjagin(&s, &z, &z).is_err());
    }

    #[test]
    fn c2_recovery() {
        for k in -2..6 {
            let r = bundle_over_curve(0, k, 4).unwrap();
            let p1 = p1_of_projectivization(&r, k);
            for a in -5..7i64 {
                for b in -5..7i64 {
                    let got = c2_from_c1_p1(&r.linear(a, b), &p1).unwrap();
                    let want = r.class(&[(frac(a * a - 4, 2), 2, 0), (int(a * b - k), 1, 1)]);
                    assert_eq!(got.class, want);
                    assert_eq!(got.integral, a % 2 == 0);
                }
            }
            let got = c2_from_c1_p1(&r.linear(4, 2 + k), &p1).unwrap();
            assert_eq!(got.class, chern_of_projectivization(0, k).c2);
        }
    }

    #[test]
    fn characteristic_numbers_scale_with_one_minus_g() {
        for g in 0..=5u32 {
            for k in -8..=8 {
                let d = chern_of_projectivization(g, k);
                let e = 1 - i64::from(g);
                assert_eq!(d.numbers["c1^4"], int(512 * e));
                assert_eq!(d.numbers["c1^2*c2"], int(224 * e));
                assert_eq!(d.numbers["c2^2"], int(96 * e));
                assert_eq!(d.numbers["c1*c3"], int(56 * e));
                assert_eq!(d.numbers["c4"], int(8 * e));
            }
        }
    }

    #[test]
    fn c2_squared_from_numbers() {
        assert_eq!(
            c2_squared_from_pontrjagin_numbers(&int(0), &int(0), &int(-1)),
            int(-96)
        );
    }
}
