//! The concrete ring families: `P(E)` for a vector bundle `E` over a curve,
//! and `P(F)` for a rank-2 bundle `F` over `P3`. Also the Leray–Hirsch
//! bookkeeping for Betti and Hodge numbers.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ring::{int, Monomial, PresentationSpec, Ring, RingFamily, RingPresentation, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("fiber rank must be at least 2, got {0}")]
    RankTooSmall(u32),
    #[error("{0} is only defined for bundles over curves")]
    NotACurveBundle(&'static str),
    #[error("cannot parse space spec {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// Projectivization of a rank-`r`, degree-`k` bundle over a genus-`g` curve.
///
/// Generators `s` (the hyperplane class of the tautological bundle) and `f`
/// (a fiber), with `s^r = -k s^{r-1} f`, `f^2 = 0` and `∫ s^{r-1} f = 1`.
pub fn bundle_over_curve(g: u32, k: i64, r: u32) -> Result<Ring, PresentationError> {
    if r < 2 {
        return Err(PresentationError::RankTooSmall(r));
    }
    let ring = RingPresentation::new(PresentationSpec {
        gen_names: ["s".into(), "f".into()],
        gen_degrees: [2, 2],
        caps: [r, 2],
        rules: [vec![(Monomial::new(r - 1, 1), int(-k))], vec![]],
        top_monomial: Monomial::new(r - 1, 1),
        top_normalization: int(1),
        real_dimension: 2 * r,
        label: format!("curve(g={g},k={k},r={r})"),
        family: RingFamily::CurveBundle {
            genus: g,
            degree: k,
            rank: r,
        },
    })
    .expect("curve-bundle presentations are well formed");
    Ok(ring)
}

/// Projectivization of a rank-2 bundle with Chern classes `c1, c2` over `P3`.
///
/// Generators `xi` (tautological class) and `h` (pulled-back hyperplane),
/// with `xi^2 = c1 xi h - c2 h^2`, `h^4 = 0` and `∫ xi h^3 = 1`.
pub fn p1_bundle_over_p3(c1: i64, c2: i64) -> Ring {
    RingPresentation::new(PresentationSpec {
        gen_names: ["xi".into(), "h".into()],
        gen_degrees: [2, 2],
        caps: [2, 4],
        rules: [
            vec![
                (Monomial::new(1, 1), int(c1)),
                (Monomial::new(0, 2), int(-c2)),
            ],
            vec![],
        ],
        top_monomial: Monomial::new(1, 3),
        top_normalization: int(1),
        real_dimension: 8,
        label: format!("p3(c1={c1},c2={c2})"),
        family: RingFamily::P3Bundle { c1, c2 },
    })
    .expect("P3-bundle presentations are well formed")
}

/// A space described on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceSpec {
    CurveBundle { g: u32, k: i64, r: u32 },
    P3Bundle { c1: i64, c2: i64 },
}

impl SpaceSpec {
    pub fn curve(g: u32, k: i64) -> Self {
        SpaceSpec::CurveBundle { g, k, r: 4 }
    }

    pub fn ring(&self) -> Result<Ring, PresentationError> {
        match *self {
            SpaceSpec::CurveBundle { g, k, r } => bundle_over_curve(g, k, r),
            SpaceSpec::P3Bundle { c1, c2 } => Ok(p1_bundle_over_p3(c1, c2)),
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::CurveBundle { g, k, r: 4 } => write!(f, "curve:g={g},k={k}"),
            SpaceSpec::CurveBundle { g, k, r } => write!(f, "curve:g={g},k={k},r={r}"),
            SpaceSpec::P3Bundle { c1, c2 } => write!(f, "p3:c1={c1},c2={c2}"),
        }
    }
}

impl FromStr for SpaceSpec {
    type Err = PresentationError;

    /// `curve:g=<int>,k=<int>[,r=<int>]` or `p3:c1=<int>,c2=<int>`.
    fn from_str(input: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| PresentationError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let (kind, rest) = input.split_once(':').ok_or_else(|| fail("missing ':'"))?;
        let mut fields = Vec::new();
        for part in rest.split(',') {
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| fail(&format!("expected key=value, got {part:?}")))?;
            let value: i64 = value
                .trim()
                .parse()
                .map_err(|_| fail(&format!("{key} is not an integer")))?;
            if fields.iter().any(|(k, _)| *k == key.trim()) {
                return Err(fail(&format!("duplicate key {key}")));
            }
            fields.push((key.trim(), value));
        }
        let take = |name: &str| fields.iter().find(|(k, _)| *k == name).map(|(_, v)| *v);
        let allowed: &[&str] = match kind {
            "curve" => &["g", "k", "r"],
            "p3" => &["c1", "c2"],
            _ => return Err(fail("kind must be 'curve' or 'p3'")),
        };
        if let Some((bad, _)) = fields.iter().find(|(k, _)| !allowed.contains(k)) {
            return Err(fail(&format!("unknown key {bad}")));
        }
        match kind {
            "curve" => {
                let g = take("g").ok_or_else(|| fail("missing g"))?;
                let k = take("k").ok_or_else(|| fail("missing k"))?;
                let r = take("r").unwrap_or(4);
                let g = u32::try_from(g).map_err(|_| fail("g must be nonnegative"))?;
                let r = u32::try_from(r).map_err(|_| fail("r must be nonnegative"))?;
                if r < 2 {
                    return Err(PresentationError::RankTooSmall(r));
                }
                Ok(SpaceSpec::CurveBundle { g, k, r })
            }
            _ => {
                let c1 = take("c1").ok_or_else(|| fail("missing c1"))?;
                let c2 = take("c2").ok_or_else(|| fail("missing c2"))?;
                Ok(SpaceSpec::P3Bundle { c1, c2 })
            }
        }
    }
}

/// Betti numbers `b_0 .. b_n` of a closed manifold of real dimension `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiVector {
    pub b: Vec<u64>,
}

impl BettiVector {
    pub fn satisfies_poincare_duality(&self) -> bool {
        self.b.iter().eq(self.b.iter().rev())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.b
            .iter()
            .enumerate()
            .map(|(i, &b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }
}

fn curve_betti(g: u32, m: i64) -> u64 {
    match m {
        0 | 2 => 1,
        1 => 2 * u64::from(g),
        _ => 0,
    }
}

/// `b_m(X) = Σ_{j<r} b_{m-2j}(C)`: `H*(X)` is free over `H*(C)` on
/// `1, s, .., s^{r-1}`.
pub fn betti(spec: &SpaceSpec) -> Result<BettiVector, PresentationError> {
    let SpaceSpec::CurveBundle { g, r, .. } = *spec else {
        return Err(PresentationError::NotACurveBundle("betti"));
    };
    let n = 2 * i64::from(r);
    let b = (0..=n)
        .map(|m| (0..i64::from(r)).map(|j| curve_betti(g, m - 2 * j)).sum())
        .collect();
    Ok(BettiVector { b })
}

/// Hodge numbers `h^{p,q}` of `P(E)`, indexed `[p][q]`, from the same
/// Leray–Hirsch decomposition: `h^{p,q}(X) = Σ_j h^{p-j,q-j}(C)`.
pub fn hodge_numbers(spec: &SpaceSpec) -> Result<Vec<Vec<u64>>, PresentationError> {
    let SpaceSpec::CurveBundle { g, r, .. } = *spec else {
        return Err(PresentationError::NotACurveBundle("hodge_numbers"));
    };
    let curve = |p: i64, q: i64| -> u64 {
        match (p, q) {
            (0, 0) | (1, 1) => 1,
            (1, 0) | (0, 1) => u64::from(g),
            _ => 0,
        }
    };
    let dim = i64::from(r);
    Ok((0..=dim)
        .map(|p| {
            (0..=dim)
                .map(|q| (0..dim).map(|j| curve(p - j, q - j)).sum())
                .collect()
        })
        .collect())
}

/// `χ(O_X) = Σ_q (-1)^q h^{0,q}`.
pub fn hodge_chi(spec: &SpaceSpec) -> Result<Scalar, PresentationError> {
    let h = hodge_numbers(spec)?;
    let chi: i64 = h[0]
        .iter()
        .enumerate()
        .map(|(q, &v)| if q % 2 == 0 { v as i64 } else { -(v as i64) })
        .sum();
    Ok(int(chi))
}
