//! Exhaustive integer case analyses.
//!
//! Every solver enumerates a finite candidate set (bounded either by a
//! divisibility argument or by a recorded hard cap) and then applies named
//! filters one at a time, recording how many candidates survive each filter
//! and which tuples each filter removed.

use num_traits::{Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::char_classes::{c2_from_c1_p1, p1_of_projectivization};
use crate::invariants::square_zero_h2;
use crate::presentations::{bundle_over_curve, p1_bundle_over_p3};
use crate::ring::{frac, int, mult_kernel, ClassElement, Ring, RingError, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("genus {0} is too small for this equation (need g >= 2)")]
    GenusTooSmall(u32),
    #[error("degree {k} is outside the allowed set {allowed}")]
    DegreeOutOfRange { k: i64, allowed: &'static str },
    #[error("degree {0} is even; the case is excluded by divisibility of c1 by two")]
    EvenDegree(i64),
    #[error("pullback class has no s-component")]
    DegeneratePullback,
    #[error("expected a rank-one kernel, found rank {0}")]
    UnexpectedKernelRank(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterRecord {
    pub name: String,
    pub justification: String,
    pub surviving: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Elimination {
    /// The variables already assigned when the filter ran, in order.
    pub tuple: Vec<i64>,
    pub filter: String,
}

/// `a` fixed, `b ≡ b_residue (mod b_modulus)` free.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionFamily {
    pub a: i64,
    pub b_residue: i64,
    pub b_modulus: i64,
    pub flag: Option<String>,
}

impl SolutionFamily {
    pub fn contains(&self, a: i64, b: i64) -> bool {
        a == self.a && (b - self.b_residue).rem_euclid(self.b_modulus) == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub holds: bool,
}

/// Canonically ordered solutions of one constraint system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolutionSet {
    pub variables: Vec<String>,
    pub solutions: Vec<Vec<i64>>,
    pub families: Vec<SolutionFamily>,
    pub filters_applied: Vec<FilterRecord>,
    pub eliminated: Vec<Elimination>,
    pub bounds: String,
    pub checks: Vec<NamedCheck>,
}

impl SolutionSet {
    fn start(variables: &[&str], bounds: String, mut candidates: Vec<Vec<i64>>) -> Self {
        candidates.sort();
        candidates.dedup();
        SolutionSet {
            variables: variables.iter().map(|v| v.to_string()).collect(),
            solutions: candidates,
            families: Vec::new(),
            filters_applied: Vec::new(),
            eliminated: Vec::new(),
            bounds,
            checks: Vec::new(),
        }
    }

    fn filter(&mut self, name: &str, justification: &str, keep: impl Fn(&[i64]) -> bool) {
        let (kept, dropped): (Vec<_>, Vec<_>) = std::mem::take(&mut self.solutions)
            .into_iter()
            .partition(|t| keep(t));
        self.eliminated
            .extend(dropped.into_iter().map(|tuple| Elimination {
                tuple,
                filter: name.to_string(),
            }));
        self.solutions = kept;
        self.filters_applied.push(FilterRecord {
            name: name.to_string(),
            justification: justification.to_string(),
            surviving: self.solutions.len(),
        });
    }

    fn check(&mut self, name: &str, holds: bool) {
        self.checks.push(NamedCheck {
            name: name.to_string(),
            holds,
        });
    }

    pub fn checks_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn contains(&self, tuple: &[i64]) -> bool {
        self.solutions.iter().any(|t| t == tuple)
    }

    /// Solutions as `(a, b)` pairs; only meaningful for two-variable sets.
    pub fn pairs(&self) -> Vec<(i64, i64)> {
        self.solutions.iter().map(|t| (t[0], t[1])).collect()
    }
}

fn cubic(a: i64) -> i64 {
    a * (a * a - 4)
}

/// All `a >= 0` with `|a(a^2-4)| <= limit` (for `limit > 0`).
fn s_coefficient_range(limit: i64) -> Vec<i64> {
    (0..).take_while(|&a| a < 3 || cubic(a) <= limit).collect()
}

/// Integral `(a, b)` with `a >= 0` solving `a(a^2-4)(b - ak/4) = rhs`, `rhs ≠ 0`.
/// Since `|b - ak/4| >= 1/4`, `|a(a^2-4)| <= 4|rhs|`.
fn solve_cubic_equation(k: i64, rhs: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in s_coefficient_range(4 * rhs.abs()) {
        let c = cubic(a);
        if c == 0 {
            continue;
        }
        let b = frac(a * k, 4) + frac(rhs, c);
        if b.is_integer() {
            out.push(vec![a, i64::try_from(b.to_integer()).expect("small")]);
        }
    }
    out
}

const CUBIC_EQUATION: &str = "a(a^2-4)(b-ak/4) = c2^2";
const EVEN_A: &str = "a even";
const EVEN_A_WHY: &str = "c2 = ((a^2-4)/2) s^2 + (ab-k) sf must be integral";
const PARITY: &str = "b ≡ k mod 2";
const PARITY_WHY: &str = "w2 is a homotopy invariant: c1 ≡ k f mod 2";

/// `a(a^2-4)(b - ak/4) = 96(1-g)` over `a >= 0`, `b ∈ Z`, for `g >= 2`.
///
/// Since the right side is nonzero, `|4b - ak| >= 1` gives
/// `a(a^2-4) <= 384(g-1)`.
pub fn solve_est(g: u32, k: i64) -> Result<SolutionSet, SolveError> {
    if g < 2 {
        return Err(SolveError::GenusTooSmall(g));
    }
    let rhs = 96 * (1 - i64::from(g));
    let candidates = solve_cubic_equation(k, rhs);
    let mut set = SolutionSet::start(
        &["a", "b"],
        format!("0 <= a, |a(a^2-4)| <= {}", 4 * rhs.abs()),
        candidates,
    );
    set.filters_applied.push(FilterRecord {
        name: CUBIC_EQUATION.to_string(),
        justification: format!("∫c2^2 = 96(1-g) = {rhs}"),
        surviving: set.solutions.len(),
    });
    set.filter(EVEN_A, EVEN_A_WHY, |t| t[0] % 2 == 0);
    let ok = set
        .solutions
        .iter()
        .all(|t| t[0] >= 4 && 4 * t[1] - t[0] * k < 0);
    set.check("a >= 4 and 4b - ak < 0", ok);
    Ok(set)
}

/// `a(a^2-4)(b - ak/4) = 96` for `k ∈ {0,1,2,3}`, then the parity filter.
pub fn solve_lemma_chern(k: i64) -> Result<SolutionSet, SolveError> {
    if !(0..=3).contains(&k) {
        return Err(SolveError::DegreeOutOfRange {
            k,
            allowed: "{0,1,2,3}",
        });
    }
    let candidates = solve_cubic_equation(k, 96);
    let mut set = SolutionSet::start(&["a", "b"], "0 <= a, |a(a^2-4)| <= 384".into(), candidates);
    set.filters_applied.push(FilterRecord {
        name: CUBIC_EQUATION.to_string(),
        justification: "∫c2^2 = 96 at g = 0".into(),
        surviving: set.solutions.len(),
    });
    set.filter(EVEN_A, EVEN_A_WHY, |t| t[0] % 2 == 0);
    set.filter(PARITY, PARITY_WHY, |t| (t[1] - k).rem_euclid(2) == 0);
    let ok = set
        .solutions
        .iter()
        .all(|t| (t[0] == 4 && t[1] == 2 + k) || (k == 3 && t[0] == 6 && t[1] == 5));
    set.check("a = 4, b = 2 + k, or k = 3, a = 6, b = 5", ok);
    Ok(set)
}

/// Outcome of the birational case for one candidate `(α, β, γ, δ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub tuple: Vec<i64>,
    /// `∫ λ^4` with `λ = α s + β f`.
    pub lambda_fourth: String,
    /// `ε = γ s + δ f`, rendered.
    pub exceptional: String,
    pub rejected_by: String,
    /// For candidates surviving the positivity test: the range of `l`
    /// checked against `4b - ak < 0`, and whether every `l` contradicts it.
    pub est_contradiction: Option<EstContradiction>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EstContradiction {
    /// `(A, B)` with `c1 = (lA ± 1) s + lB f`.
    pub ample_pullback: (i64, i64),
    pub l_min: i64,
    pub l_max: i64,
    pub all_values_nonnegative: bool,
    /// Slope `4B - Ak > 0` and `l_min (4B - Ak) - k >= 0`.
    pub symbolic_bound_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BirationalElimination {
    pub k: i64,
    pub candidates: SolutionSet,
    pub verdicts: Vec<CandidateVerdict>,
    pub admissible: SolutionSet,
}

/// Lower bound on the multiple `l` in `c1 = l·ρ*L ± ε`, imported from the
/// geometry of the exceptional divisor: `l > 0` in general, `l >= 3` at `k = 3`.
pub fn exceptional_multiplier_floor(k: i64) -> i64 {
    if k == 3 {
        3
    } else {
        1
    }
}

/// Largest `l` checked numerically, on top of the symbolic sign argument.
pub const EST_L_MAX: i64 = 100;

/// Integer solutions of `αδ - βγ = 1`, `-αγk + αδ + 3βγ = 0`, normalized
/// to `γ = 1`, and their elimination.
pub fn birational_elimination(k: i64) -> Result<BirationalElimination, SolveError> {
    if k % 2 == 0 {
        return Err(SolveError::EvenDegree(k));
    }
    if k != 1 && k != 3 {
        return Err(SolveError::DegreeOutOfRange {
            k,
            allowed: "{1,3}",
        });
    }
    // The even part of the ring does not depend on the genus.
    let ring = bundle_over_curve(0, k, 4).expect("rank 4 is valid");

    // γ(4β - αk) = -1 forces γ = ±1; normalize γ = 1. α(4δ - γk) = 3 forces
    // α | 3. β and δ then follow from the two equations.
    let mut candidates = SolutionSet::start(
        &["alpha", "beta", "gamma", "delta"],
        "gamma = 1, alpha ∈ {±1, ±3}".into(),
        [-3i64, -1, 1, 3].iter().map(|&a| vec![a]).collect(),
    );
    candidates.filters_applied.push(FilterRecord {
        name: "gamma = ±1 and alpha | 3".into(),
        justification: "gamma(4beta - alpha k) = -1 and alpha(4delta - gamma k) = 3".into(),
        surviving: candidates.solutions.len(),
    });
    candidates.filter(
        "beta = (alpha k - 1)/4 integral",
        "from gamma(4beta - alpha k) = -1",
        |t| (t[0] * k - 1).rem_euclid(4) == 0,
    );
    for t in candidates.solutions.iter_mut() {
        let alpha = t[0];
        t.extend([(alpha * k - 1) / 4, 1]);
    }
    candidates.filter(
        "delta = (1 + beta)/alpha integral",
        "from alpha delta - beta gamma = 1",
        |t| (1 + t[1]) % t[0] == 0,
    );
    for t in candidates.solutions.iter_mut() {
        let delta = (1 + t[1]) / t[0];
        t.push(delta);
    }
    let mut exz_ok = true;
    for t in &candidates.solutions {
        let (a, b, c, d) = (t[0], t[1], t[2], t[3]);
        let lambda = ring.linear(a, b);
        let eps = ring.linear(c, d);
        let cubed_pairing = lambda.pow(3).mul(&eps)?.integrate()?;
        exz_ok &= a * d - b * c == 1
            && cubed_pairing == int(a * a * (-a * c * k + a * d + 3 * b * c))
            && cubed_pairing.is_zero()
            && c * (4 * b - a * k) == -1
            && a * (4 * d - c * k) == 3;
    }
    candidates.check("both defining equations and the derived ones hold", exz_ok);
    candidates.solutions.sort();

    let mut verdicts = Vec::new();
    let mut admissible = SolutionSet::start(
        &["alpha", "beta", "gamma", "delta"],
        candidates.bounds.clone(),
        candidates.solutions.clone(),
    );
    let mut lambda4 = Vec::new();
    for t in &candidates.solutions {
        let value = ring.linear(t[0], t[1]).pow(4).integrate()?;
        lambda4.push((t.clone(), value));
    }
    let positive = |t: &[i64]| {
        lambda4
            .iter()
            .find(|(u, _)| u.as_slice() == t)
            .is_some_and(|(_, v)| v.is_positive())
    };
    admissible.filter(
        "lambda^4 > 0",
        "lambda = ±c1(ρ*L) with L ample on a 4-fold",
        |t| positive(t),
    );
    let est: Vec<(Vec<i64>, EstContradiction)> = admissible
        .solutions
        .iter()
        .map(|t| (t.clone(), est_contradiction(k, t[0], t[1])))
        .collect();
    admissible.filter(
        "4b - ak < 0 for c1 = (lA ± 1)s + lB f",
        "negativity of 4b - ak for c1 = a s + b f",
        |t| {
            est.iter()
                .find(|(u, _)| u.as_slice() == t)
                .is_none_or(|(_, e)| !(e.all_values_nonnegative && e.symbolic_bound_holds))
        },
    );

    for (t, value) in &lambda4 {
        let exceptional = ring.linear(t[2], t[3]).to_string();
        let est_result = est.iter().find(|(u, _)| u == t).map(|(_, e)| e.clone());
        let rejected_by = if !value.is_positive() {
            format!("lambda^4 = {value} is not positive")
        } else if est_result.is_some() {
            "c1 = (lA ± 1)s + lB f has 4b - ak >= 0".to_string()
        } else {
            "not rejected".to_string()
        };
        verdicts.push(CandidateVerdict {
            tuple: t.clone(),
            lambda_fourth: value.to_string(),
            exceptional,
            rejected_by,
            est_contradiction: est_result,
        });
    }

    Ok(BirationalElimination {
        k,
        candidates,
        verdicts,
        admissible,
    })
}

/// With `ρ*L = A s + B f` (sign fixed so that `A > 0`) and `ε = s`, the
/// first Chern class is `c1 = (lA ± 1) s + lB f`. Checks `4b - ak >= 0` for
/// every `l` in range and both signs.
pub fn est_contradiction(k: i64, alpha: i64, beta: i64) -> EstContradiction {
    let (a_pull, b_pull) = if alpha < 0 {
        (-alpha, -beta)
    } else {
        (alpha, beta)
    };
    let l_min = exceptional_multiplier_floor(k);
    let all_values_nonnegative = (l_min..=EST_L_MAX).all(|l| {
        [1i64, -1].iter().all(|sign| {
            let a = l * a_pull + sign;
            let b = l * b_pull;
            4 * b - a * k >= 0
        })
    });
    let slope = 4 * b_pull - a_pull * k;
    EstContradiction {
        ample_pullback: (a_pull, b_pull),
        l_min,
        l_max: EST_L_MAX,
        all_values_nonnegative,
        symbolic_bound_holds: slope > 0 && l_min * slope - k.abs() >= 0,
    }
}

/// The degree-6 class orthogonal to a pulled-back hyperplane class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberClass {
    /// Normalized so that the leading (`s^{r-1}`) coefficient is 1.
    pub ray: ClassElement,
    /// Primitive integral generator of the same ray.
    pub primitive: ClassElement,
    pub integral: bool,
}

pub fn fiber_class_lattice(ring: &Ring, pullback: &ClassElement) -> Result<FiberClass, SolveError> {
    if !pullback.has_degree(2) {
        return Err(RingError::WrongDegree {
            expected: 2,
            found: pullback.degree().unwrap_or(0),
        }
        .into());
    }
    if pullback.coeff(1, 0).is_zero() {
        return Err(SolveError::DegeneratePullback);
    }
    let degree = ring.real_dimension() - 2;
    let kernel = mult_kernel(ring, pullback, degree)?;
    if kernel.len() != 1 {
        return Err(SolveError::UnexpectedKernelRank(kernel.len()));
    }
    let lead = ring.basis(degree)[0];
    let mut primitive = kernel.into_iter().next().expect("rank one");
    let lead_coeff = primitive.coeff(lead.exp_x, lead.exp_y);
    if lead_coeff.is_negative() {
        primitive = primitive.neg();
    }
    let lead_coeff = primitive.coeff(lead.exp_x, lead.exp_y);
    if lead_coeff.is_zero() {
        // Ray has no s^{r-1} component; report it as is.
        return Ok(FiberClass {
            ray: primitive.clone(),
            integral: true,
            primitive,
        });
    }
    let ray = primitive.scale(&(Scalar::from_integer(1.into()) / lead_coeff));
    let integral = ray.is_integral();
    Ok(FiberClass {
        ray,
        primitive,
        integral,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoDegree {
    pub cube: ClassElement,
    pub fiber: ClassElement,
    pub degree: Scalar,
    pub fourth_power: Scalar,
}

/// In the `k = 3` conic case: `(4s+3f)^3` against the fiber class
/// `4s^3 + 9s^2 f` gives the degree of the ample generator downstairs.
pub fn fano_degree_check() -> Result<FanoDegree, SolveError> {
    let ring = bundle_over_curve(0, 3, 4).expect("rank 4 is valid");
    let pullback = ring.linear(4, 3);
    let cube = pullback.pow(3);
    let fiber = fiber_class_lattice(&ring, &pullback)?.primitive;
    let degree = cube
        .ratio_to(&fiber)
        .ok_or(SolveError::UnexpectedKernelRank(0))?;
    let fourth_power = pullback.mul(&cube)?.integrate()?;
    Ok(FanoDegree {
        cube,
        fiber,
        degree,
        fourth_power,
    })
}

/// Whether `P(F)` for a rank-2 bundle `F` on `P3` has a nonzero square-zero
/// degree-2 class with nonzero `xi`-component.
pub fn p3_bundle_relation(c1: i64, c2: i64) -> bool {
    let ring = p1_bundle_over_p3(c1, c2);
    match square_zero_h2(&ring) {
        Ok(locus) => match locus {
            crate::invariants::SquareZeroLocus::Everything => true,
            crate::invariants::SquareZeroLocus::Rays(rays) => {
                rays.iter().any(|(x, _)| !x.is_zero())
            }
        },
        Err(_) => false,
    }
}

/// Largest `a` scanned by [`solve_est2`].
pub const EST2_A_MAX: i64 = 12;

/// Genus one: both invariant constraints read `a(a^2-4)(4b-ak) = 0`.
///
/// Returns `a = 0` and `a = 2` as families (the latter flagged) and the
/// isolated solutions `a >= 4` even with `4b = ak`, all subject to the
/// parity filter.
pub fn solve_est2(k: i64) -> SolutionSet {
    let mut candidates = Vec::new();
    for a in 0..=EST2_A_MAX {
        if cubic(a) != 0 && (a * k) % 4 == 0 {
            candidates.push(vec![a, a * k / 4]);
        }
    }
    let mut set = SolutionSet::start(
        &["a", "b"],
        format!("0 <= a <= {EST2_A_MAX}; b free when a(a^2-4) = 0"),
        candidates,
    );
    set.filters_applied.push(FilterRecord {
        name: "a(a^2-4)(4b-ak) = 0, a ∉ {0,2}".into(),
        justification: "∫c2^2 = 0 and ∫(4c1^2c2 - c1^4) = 0 at g = 1".into(),
        surviving: set.solutions.len(),
    });
    set.filter(EVEN_A, EVEN_A_WHY, |t| t[0] % 2 == 0);
    set.filter(PARITY, PARITY_WHY, |t| (t[1] - k).rem_euclid(2) == 0);
    set.families.push(SolutionFamily {
        a: 0,
        b_residue: k.rem_euclid(2),
        b_modulus: 2,
        flag: None,
    });
    set.families.push(SolutionFamily {
        a: 2,
        b_residue: k.rem_euclid(2),
        b_modulus: 2,
        flag: Some(A2_FLAG.into()),
    });
    let ok = set
        .solutions
        .iter()
        .all(|t| t[0] >= 4 && 4 * t[1] == t[0] * k);
    set.check("isolated solutions have a >= 4 and b = ak/4", ok);
    let family_ok = family_invariants_vanish(2, k).is_ok_and(|v| v.vanishes());
    set.check(
        "both invariants vanish identically on the a = 2 family",
        family_ok,
    );
    set
}

pub const A2_FLAG: &str =
    "excluded by the genus-one estimate, but not derivable from the two invariant constraints";

/// Symbolic vanishing of both constraints along `c1 = a s + b f`, `b` free.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyVanishing {
    pub a: i64,
    pub k: i64,
    /// `b` values sampled; more than the degree in `b` of either integrand.
    pub sample_points: Vec<i64>,
    pub c2_squared: Vec<Scalar>,
    pub chern_combination: Vec<Scalar>,
}

impl FamilyVanishing {
    pub fn vanishes(&self) -> bool {
        self.c2_squared
            .iter()
            .chain(&self.chern_combination)
            .all(Zero::is_zero)
    }
}

/// `c1` is linear in `b` and `c2 = (c1^2 - p1)/2` quadratic, so
/// `∫c2^2` and `∫(4c1^2c2 - c1^4)` are polynomials of degree at most 4 in
/// `b`. Vanishing at five points means vanishing identically.
pub fn family_invariants_vanish(a: i64, k: i64) -> Result<FamilyVanishing, SolveError> {
    let ring = bundle_over_curve(1, k, 4).expect("rank 4 is valid");
    let p1 = p1_of_projectivization(&ring, k);
    let sample_points: Vec<i64> = (-2..=2).collect();
    let mut c2_squared = Vec::new();
    let mut chern_combination = Vec::new();
    for &b in &sample_points {
        let c1 = ring.linear(a, b);
        let c2 = c2_from_c1_p1(&c1, &p1)?.class;
        c2_squared.push(c2.pow(2).integrate()?);
        let combo = c1.pow(2).mul(&c2)?.scale(&int(4)).sub(&c1.pow(4))?;
        chern_combination.push(combo.integrate()?);
    }
    Ok(FamilyVanishing {
        a,
        k,
        sample_points,
        c2_squared,
        chern_combination,
    })
}
