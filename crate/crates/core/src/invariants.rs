//! Homeomorphism-invariant constraints on `P(E)` and the classification
//! predicates built on them: square-zero classes, cohomology ring
//! isomorphisms between two projective bundles, and the diffeomorphism
//! verdict on `(g, k mod 4)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::char_classes::chern_of_projectivization;
use crate::presentations::{betti, bundle_over_curve, SpaceSpec};
use crate::ring::{int, ClassElement, Ring, RingError, Scalar};

/// The two characteristic numbers fixed by `χ(O)` and the Pontrjagin numbers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantConstraints {
    /// `∫ c2^2`
    pub c2_squared: Scalar,
    /// `∫ (4 c1^2 c2 - c1^4)`
    pub chern_combination: Scalar,
    pub expected_c2_squared: Scalar,
    pub expected_chern_combination: Scalar,
}

impl InvariantConstraints {
    pub fn holds(&self) -> bool {
        self.c2_squared == self.expected_c2_squared
            && self.chern_combination == self.expected_chern_combination
    }
}

pub fn verify_inv_constraints(g: u32, k: i64) -> InvariantConstraints {
    let d = chern_of_projectivization(g, k);
    let e = 1 - i64::from(g);
    let c1_sq_c2 = &d.numbers["c1^2*c2"];
    InvariantConstraints {
        c2_squared: d.numbers["c2^2"].clone(),
        chern_combination: c1_sq_c2 * int(4) - &d.numbers["c1^4"],
        expected_c2_squared: int(96 * e),
        expected_chern_combination: int(384 * e),
    }
}

/// Primitive integral `(x, y)` up to sign, normalized so that the first
/// nonzero entry is positive.
pub type Ray = (BigInt, BigInt);

fn normalize_ray(a: BigInt, b: BigInt) -> Option<Ray> {
    if a.is_zero() && b.is_zero() {
        return None;
    }
    let g = a.gcd(&b);
    let (mut a, mut b) = (a / &g, b / &g);
    if a.is_negative() || (a.is_zero() && b.is_negative()) {
        a = -a;
        b = -b;
    }
    Some((a, b))
}

/// Rational projective roots of `A x^2 + B xy + C y^2` (not identically zero).
fn binary_quadratic_roots(a: &BigInt, b: &BigInt, c: &BigInt) -> Vec<Ray> {
    let mut roots = Vec::new();
    if a.is_zero() {
        roots.extend(normalize_ray(BigInt::from(1), BigInt::zero()));
        roots.extend(normalize_ray(c.clone(), -b));
    } else {
        let disc = b * b - BigInt::from(4) * a * c;
        if !disc.is_negative() {
            let root = disc.sqrt();
            if &root * &root == disc {
                roots.extend(normalize_ray(-b + &root, BigInt::from(2) * a));
                roots.extend(normalize_ray(-b - &root, BigInt::from(2) * a));
            }
        }
    }
    roots.sort();
    roots.dedup();
    roots
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SquareZeroLocus {
    /// Every degree-2 class squares to zero.
    Everything,
    /// The listed primitive rays `x*gen0 + y*gen1` are all the square-zero
    /// classes (up to integer multiples).
    Rays(Vec<Ray>),
}

impl SquareZeroLocus {
    pub fn rays(&self) -> &[Ray] {
        match self {
            SquareZeroLocus::Everything => &[],
            SquareZeroLocus::Rays(r) => r,
        }
    }

    pub fn classes(&self, ring: &Ring) -> Vec<ClassElement> {
        self.rays()
            .iter()
            .map(|(a, b)| {
                ring.class(&[
                    (Scalar::from_integer(a.clone()), 1, 0),
                    (Scalar::from_integer(b.clone()), 0, 1),
                ])
            })
            .collect()
    }
}

/// Solves `(x*gen0 + y*gen1)^2 = 0` over the rationals. Both generators must
/// have degree 2.
pub fn square_zero_h2(ring: &Ring) -> Result<SquareZeroLocus, RingError> {
    if ring.gen_degrees() != [2, 2] {
        return Err(RingError::InvalidPresentation(
            "square-zero search needs two degree-2 generators".into(),
        ));
    }
    let x = ring.generator(0);
    let y = ring.generator(1);
    let xx = x.pow(2);
    let xy = x.mul(&y)?;
    let yy = y.pow(2);

    let mut locus: Option<Vec<Ray>> = None;
    for m in ring.basis(4) {
        let coeffs = [
            xx.coeff(m.exp_x, m.exp_y),
            xy.coeff(m.exp_x, m.exp_y) * int(2),
            yy.coeff(m.exp_x, m.exp_y),
        ];
        if coeffs.iter().all(Zero::is_zero) {
            continue;
        }
        let denom = coeffs
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(c.denom()));
        let scaled: Vec<BigInt> = coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(denom.clone())).to_integer())
            .collect();
        let roots = binary_quadratic_roots(&scaled[0], &scaled[1], &scaled[2]);
        locus = Some(match locus {
            None => roots,
            Some(prev) => prev.into_iter().filter(|r| roots.contains(r)).collect(),
        });
    }
    Ok(match locus {
        None => SquareZeroLocus::Everything,
        Some(rays) => SquareZeroLocus::Rays(rays),
    })
}

/// Generator assignment `s -> eps*s + ell*f`, `f -> delta*f` between two
/// curve-bundle rings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub eps: i64,
    pub ell: i64,
    pub delta: i64,
}

impl IsoWitness {
    pub fn images(&self, target: &Ring) -> (ClassElement, ClassElement) {
        (
            target.linear(self.eps, self.ell),
            target.linear(0, self.delta),
        )
    }

    /// Applies the induced ring map to a class of the source ring.
    pub fn apply(&self, class: &ClassElement, target: &Ring) -> Result<ClassElement, RingError> {
        let (x, y) = self.images(target);
        class.substitute(&x, &y)
    }

    pub fn determinant(&self) -> i64 {
        self.eps * self.delta
    }
}

impl fmt::Display for IsoWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.eps == 1 { "s" } else { "-s" };
        let fiber = if self.delta == 1 { "f" } else { "-f" };
        match self.ell {
            0 => write!(f, "s -> {s}, f -> {fiber}"),
            l if l < 0 => write!(f, "s -> {s} - {}*f, f -> {fiber}", -l),
            l => write!(f, "s -> {s} + {l}*f, f -> {fiber}"),
        }
    }
}

/// Search for a ring isomorphism `H*(P(E1)) -> H*(P(E2))` on the even part,
/// after comparing first Betti numbers.
///
/// Any witness satisfies `4*eps*ell = k2 - k1*delta*eps`, which bounds
/// `|ell| <= (|k1|+|k2|)/4 + 1`.
pub fn ring_iso_exists(g1: u32, k1: i64, g2: u32, k2: i64) -> Option<IsoWitness> {
    let b1 = betti(&SpaceSpec::curve(g1, k1)).ok()?.b[1];
    let b2 = betti(&SpaceSpec::curve(g2, k2)).ok()?.b[1];
    if b1 != b2 {
        return None;
    }
    let source = bundle_over_curve(g1, k1, 4).ok()?;
    let target = bundle_over_curve(g2, k2, 4).ok()?;
    let bound = (k1.abs() + k2.abs()) / 4 + 1;
    for eps in [1, -1] {
        for delta in [1, -1] {
            for ell in -bound..=bound {
                let w = IsoWitness { eps, ell, delta };
                let (x, y) = w.images(&target);
                if source.is_homomorphism(&x, &y).unwrap_or(false) {
                    return Some(w);
                }
            }
        }
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DiffeoVerdict {
    OrientedDiffeo,
    DiffeoOnly,
    Distinct,
}

impl DiffeoVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            DiffeoVerdict::OrientedDiffeo => "oriented_diffeo",
            DiffeoVerdict::DiffeoOnly => "diffeo_only",
            DiffeoVerdict::Distinct => "distinct",
        }
    }
}

/// Orientation-preserving diffeomorphism iff `g1 = g2` and `k1 ≡ k2 (4)`;
/// diffeomorphism iff `g1 = g2` and `k1 ≡ ±k2 (4)`.
pub fn diffeo_classify(g1: u32, k1: i64, g2: u32, k2: i64) -> DiffeoVerdict {
    if g1 != g2 {
        return DiffeoVerdict::Distinct;
    }
    if (k1 - k2).rem_euclid(4) == 0 {
        DiffeoVerdict::OrientedDiffeo
    } else if (k1 + k2).rem_euclid(4) == 0 {
        DiffeoVerdict::DiffeoOnly
    } else {
        DiffeoVerdict::Distinct
    }
}

/// One-line explanation of a verdict, e.g. `diffeo_only (k1 ≡ −k2 mod 4)`.
pub fn describe_verdict(g1: u32, g2: u32, verdict: DiffeoVerdict) -> String {
    let reason = match verdict {
        DiffeoVerdict::OrientedDiffeo => "k1 ≡ k2 mod 4".to_string(),
        DiffeoVerdict::DiffeoOnly => "k1 ≡ −k2 mod 4".to_string(),
        DiffeoVerdict::Distinct if g1 != g2 => format!("genus {g1} ≠ {g2}"),
        DiffeoVerdict::Distinct => "k1 ≢ ±k2 mod 4".to_string(),
    };
    format!("{} ({reason})", verdict.as_str())
}

/// Whether `s -> -s, f -> -f` respects the relations of `P(E)`.
pub fn negation_automorphism_check(g: u32, k: i64) -> bool {
    let ring = bundle_over_curve(g, k, 4).expect("rank 4 is valid");
    ring.is_homomorphism(&ring.linear(-1, 0), &ring.linear(0, -1))
        .unwrap_or(false)
}
