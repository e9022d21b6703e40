//! Graded commutative rings on two even generators.
//!
//! A [`RingPresentation`] is given by one rewrite rule per generator
//! (`x^cap = rule`), a dimension bound above which every class vanishes, and
//! a top-degree integration functional. Normal forms of every monomial up to
//! the real dimension are computed once at construction; all later arithmetic
//! is table lookup plus exact rational accumulation.

mod lattice;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational coefficient. Always stored in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

/// Shared handle to a presentation. Classes keep one so that products can be
/// reduced without threading the ring through every call.
pub type Ring = Arc<RingPresentation>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(numer: i64, denom: i64) -> Scalar {
    Scalar::new(BigInt::from(numer), BigInt::from(denom))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("classes live in different rings ({left} vs {right})")]
    RingMismatch { left: String, right: String },
    #[error("class is not homogeneous")]
    NotHomogeneous,
    #[error("expected a class of degree {expected}, found degree {found}")]
    WrongDegree { expected: u32, found: u32 },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
}

/// `x^exp_x * y^exp_y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub exp_x: u32,
    pub exp_y: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exp_x: 0, exp_y: 0 };

    pub fn new(exp_x: u32, exp_y: u32) -> Self {
        Monomial { exp_x, exp_y }
    }

    pub fn times(self, other: Monomial) -> Monomial {
        Monomial::new(self.exp_x + other.exp_x, self.exp_y + other.exp_y)
    }
}

type Terms = BTreeMap<Monomial, Scalar>;

fn accumulate(into: &mut Terms, m: Monomial, c: Scalar) {
    if c.is_zero() {
        return;
    }
    let slot = into.entry(m).or_insert_with(Scalar::zero);
    *slot += c;
    if slot.is_zero() {
        into.remove(&m);
    }
}

/// Which family a presentation was built from. Only used for labels and by
/// callers that need the defining integers back.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingFamily {
    CurveBundle { genus: u32, degree: i64, rank: u32 },
    P3Bundle { c1: i64, c2: i64 },
    Custom,
}

/// Everything needed to define a presentation. Validated by
/// [`RingPresentation::new`].
#[derive(Clone, Debug)]
pub struct PresentationSpec {
    pub gen_names: [String; 2],
    pub gen_degrees: [u32; 2],
    pub caps: [u32; 2],
    /// `rules[i]` is the value of `gen_i ^ caps[i]`.
    pub rules: [Vec<(Monomial, Scalar)>; 2],
    pub top_monomial: Monomial,
    pub top_normalization: Scalar,
    pub real_dimension: u32,
    pub label: String,
    pub family: RingFamily,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strategy {
    XFirst,
    YFirst,
}

pub struct RingPresentation {
    gen_names: [String; 2],
    gen_degrees: [u32; 2],
    caps: [u32; 2],
    rules: [Terms; 2],
    top_monomial: Monomial,
    top_normalization: Scalar,
    real_dimension: u32,
    label: String,
    family: RingFamily,
    normal_forms: HashMap<Monomial, Terms>,
}

impl fmt::Debug for RingPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RingPresentation")
            .field("label", &self.label)
            .field("gen_names", &self.gen_names)
            .field("caps", &self.caps)
            .field("real_dimension", &self.real_dimension)
            .finish()
    }
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.gen_names == other.gen_names
            && self.gen_degrees == other.gen_degrees
            && self.caps == other.caps
            && self.rules == other.rules
            && self.top_monomial == other.top_monomial
            && self.top_normalization == other.top_normalization
            && self.real_dimension == other.real_dimension
    }
}

impl Eq for RingPresentation {}

impl RingPresentation {
    /// Validates the presentation and certifies termination and
    /// order-independence of rewriting on every monomial up to the real
    /// dimension.
    pub fn new(spec: PresentationSpec) -> Result<Ring, RingError> {
        let invalid = |msg: String| Err(RingError::InvalidPresentation(msg));
        for (i, &d) in spec.gen_degrees.iter().enumerate() {
            if d == 0 || d % 2 != 0 {
                return invalid(format!(
                    "generator {} has degree {d}; degrees must be positive and even",
                    spec.gen_names[i]
                ));
            }
            if spec.caps[i] == 0 {
                return invalid(format!("generator {} has cap 0", spec.gen_names[i]));
            }
        }
        if spec.gen_names[0] == spec.gen_names[1] {
            return invalid("generator names must differ".into());
        }
        if spec.top_normalization.is_zero() {
            return invalid("top normalization must be nonzero".into());
        }

        let mut rules: [Terms; 2] = [Terms::new(), Terms::new()];
        for (i, raw) in spec.rules.iter().enumerate() {
            let want = spec.caps[i] * spec.gen_degrees[i];
            for (m, c) in raw {
                let d = m.exp_x * spec.gen_degrees[0] + m.exp_y * spec.gen_degrees[1];
                if d != want && !c.is_zero() {
                    return invalid(format!(
                        "rule for {}^{} is not homogeneous: term of degree {d}, expected {want}",
                        spec.gen_names[i], spec.caps[i]
                    ));
                }
                accumulate(&mut rules[i], *m, c.clone());
            }
        }

        let top_deg = spec.top_monomial.exp_x * spec.gen_degrees[0]
            + spec.top_monomial.exp_y * spec.gen_degrees[1];
        if top_deg != spec.real_dimension {
            return invalid(format!(
                "top monomial has degree {top_deg}, real dimension is {}",
                spec.real_dimension
            ));
        }

        let mut ring = RingPresentation {
            gen_names: spec.gen_names,
            gen_degrees: spec.gen_degrees,
            caps: spec.caps,
            rules,
            top_monomial: spec.top_monomial,
            top_normalization: spec.top_normalization,
            real_dimension: spec.real_dimension,
            label: spec.label,
            family: spec.family,
            normal_forms: HashMap::new(),
        };

        let monomials = ring.monomials_up_to_dimension();
        let mut memo_x = HashMap::new();
        let mut memo_y = HashMap::new();
        for &m in &monomials {
            let nx = ring.rewrite(m, Strategy::XFirst, &mut memo_x, &mut Vec::new())?;
            let ny = ring.rewrite(m, Strategy::YFirst, &mut memo_y, &mut Vec::new())?;
            if nx != ny {
                return invalid(format!(
                    "rewriting is order dependent on {}",
                    ring.render_terms(&Terms::from([(m, Scalar::one())]))
                ));
            }
        }
        ring.normal_forms = memo_x;

        let top_piece: Vec<Monomial> = ring
            .reduced_monomials()
            .into_iter()
            .filter(|m| ring.monomial_degree(*m) == ring.real_dimension)
            .collect();
        if top_piece != vec![ring.top_monomial] {
            return invalid(format!(
                "top-degree piece must be spanned by the top monomial alone, found {} basis monomials",
                top_piece.len()
            ));
        }

        Ok(Arc::new(ring))
    }

    fn rewrite(
        &self,
        m: Monomial,
        strategy: Strategy,
        memo: &mut HashMap<Monomial, Terms>,
        stack: &mut Vec<Monomial>,
    ) -> Result<Terms, RingError> {
        if self.monomial_degree(m) > self.real_dimension {
            return Ok(Terms::new());
        }
        if let Some(done) = memo.get(&m) {
            return Ok(done.clone());
        }
        if stack.contains(&m) {
            return Err(RingError::InvalidPresentation(format!(
                "rewriting does not terminate on {}",
                self.render_terms(&Terms::from([(m, Scalar::one())]))
            )));
        }
        let x_hit = m.exp_x >= self.caps[0];
        let y_hit = m.exp_y >= self.caps[1];
        let apply = match (strategy, x_hit, y_hit) {
            (_, false, false) => None,
            (Strategy::XFirst, true, _) | (Strategy::YFirst, true, false) => Some(0),
            _ => Some(1),
        };
        let result = match apply {
            None => Terms::from([(m, Scalar::one())]),
            Some(g) => {
                let rest = if g == 0 {
                    Monomial::new(m.exp_x - self.caps[0], m.exp_y)
                } else {
                    Monomial::new(m.exp_x, m.exp_y - self.caps[1])
                };
                stack.push(m);
                let mut out = Terms::new();
                for (rm, rc) in &self.rules[g] {
                    let nf = self.rewrite(rm.times(rest), strategy, memo, stack)?;
                    for (nm, nc) in nf {
                        accumulate(&mut out, nm, nc * rc);
                    }
                }
                stack.pop();
                out
            }
        };
        memo.insert(m, result.clone());
        Ok(result)
    }

    fn monomials_up_to_dimension(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let max_x = self.real_dimension / self.gen_degrees[0];
        let max_y = self.real_dimension / self.gen_degrees[1];
        for i in 0..=max_x {
            for j in 0..=max_y {
                let m = Monomial::new(i, j);
                if self.monomial_degree(m) <= self.real_dimension {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Irreducible monomials of degree at most the real dimension, in basis
    /// order.
    pub fn reduced_monomials(&self) -> Vec<Monomial> {
        let mut out: Vec<Monomial> = self
            .monomials_up_to_dimension()
            .into_iter()
            .filter(|m| m.exp_x < self.caps[0] && m.exp_y < self.caps[1])
            .collect();
        out.sort_by(|a, b| self.basis_cmp(*a, *b));
        out
    }

    /// Basis of the graded piece of the given degree, in basis order.
    pub fn basis(&self, degree: u32) -> Vec<Monomial> {
        self.reduced_monomials()
            .into_iter()
            .filter(|m| self.monomial_degree(*m) == degree)
            .collect()
    }

    /// (total degree ascending, exp_x descending).
    pub fn basis_cmp(&self, a: Monomial, b: Monomial) -> std::cmp::Ordering {
        self.monomial_degree(a)
            .cmp(&self.monomial_degree(b))
            .then(b.exp_x.cmp(&a.exp_x))
            .then(a.exp_y.cmp(&b.exp_y))
    }

    pub fn monomial_degree(&self, m: Monomial) -> u32 {
        m.exp_x * self.gen_degrees[0] + m.exp_y * self.gen_degrees[1]
    }

    pub fn gen_names(&self) -> [&str; 2] {
        [&self.gen_names[0], &self.gen_names[1]]
    }

    pub fn gen_degrees(&self) -> [u32; 2] {
        self.gen_degrees
    }

    pub fn caps(&self) -> [u32; 2] {
        self.caps
    }

    pub fn real_dimension(&self) -> u32 {
        self.real_dimension
    }

    pub fn top_monomial(&self) -> Monomial {
        self.top_monomial
    }

    pub fn top_normalization(&self) -> &Scalar {
        &self.top_normalization
    }

    pub fn family(&self) -> &RingFamily {
        &self.family
    }

    /// Human-readable identifier, e.g. `curve(g=2,k=1,r=4)`.
    pub fn id(&self) -> &str {
        &self.label
    }

    /// The rule value for `gen^cap`, as a reduced class.
    pub fn rule(self: &Ring, generator: usize) -> ClassElement {
        self.reduce(self.rules[generator].clone())
    }

    /// Normal form of an arbitrary association of monomials to scalars.
    /// Monomials above the real dimension contribute nothing.
    pub fn reduce<I>(self: &Ring, raw_terms: I) -> ClassElement
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        let mut out = Terms::new();
        for (m, c) in raw_terms {
            if c.is_zero() || self.monomial_degree(m) > self.real_dimension {
                continue;
            }
            for (nm, nc) in &self.normal_forms[&m] {
                accumulate(&mut out, *nm, nc * &c);
            }
        }
        ClassElement {
            ring: Arc::clone(self),
            terms: out,
        }
    }

    pub fn zero(self: &Ring) -> ClassElement {
        ClassElement {
            ring: Arc::clone(self),
            terms: Terms::new(),
        }
    }

    pub fn one(self: &Ring) -> ClassElement {
        self.constant(Scalar::one())
    }

    pub fn constant(self: &Ring, c: Scalar) -> ClassElement {
        self.reduce([(Monomial::ONE, c)])
    }

    pub fn monomial(self: &Ring, exp_x: u32, exp_y: u32) -> ClassElement {
        self.reduce([(Monomial::new(exp_x, exp_y), Scalar::one())])
    }

    /// Generator by index (0 = x, 1 = y).
    pub fn generator(self: &Ring, index: usize) -> ClassElement {
        if index == 0 {
            self.monomial(1, 0)
        } else {
            self.monomial(0, 1)
        }
    }

    pub fn generator_named(self: &Ring, name: &str) -> Option<ClassElement> {
        self.gen_names
            .iter()
            .position(|g| g == name)
            .map(|i| self.generator(i))
    }

    /// `a*x + b*y` with integer coefficients.
    pub fn linear(self: &Ring, a: i64, b: i64) -> ClassElement {
        self.reduce([(Monomial::new(1, 0), int(a)), (Monomial::new(0, 1), int(b))])
    }

    /// Builds a class from `(coefficient, exp_x, exp_y)` triples.
    pub fn class(self: &Ring, terms: &[(Scalar, u32, u32)]) -> ClassElement {
        self.reduce(
            terms
                .iter()
                .map(|(c, i, j)| (Monomial::new(*i, *j), c.clone())),
        )
    }

    /// True when substituting the two images for the generators kills both
    /// defining relations `gen^cap - rule` in `target`.
    pub fn is_homomorphism(
        &self,
        x_image: &ClassElement,
        y_image: &ClassElement,
    ) -> Result<bool, RingError> {
        if !Arc::ptr_eq(&x_image.ring, &y_image.ring) && *x_image.ring != *y_image.ring {
            return Err(mismatch(&x_image.ring, &y_image.ring));
        }
        for g in 0..2 {
            let mut relation = self.rules[g].clone();
            let lead = if g == 0 {
                Monomial::new(self.caps[0], 0)
            } else {
                Monomial::new(0, self.caps[1])
            };
            for c in relation.values_mut() {
                *c = -c.clone();
            }
            accumulate(&mut relation, lead, Scalar::one());
            let image = substitute_terms(&relation, x_image, y_image);
            if !image.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn render_terms(&self, terms: &Terms) -> String {
        let mut ordered: Vec<(&Monomial, &Scalar)> = terms.iter().collect();
        ordered.sort_by(|a, b| self.basis_cmp(*a.0, *b.0));
        if ordered.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (m, c)) in ordered.into_iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mono = self.render_monomial(*m);
            if mono.is_empty() {
                out.push_str(&magnitude.to_string());
            } else if magnitude.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{magnitude}*{mono}"));
            }
        }
        out
    }

    fn render_monomial(&self, m: Monomial) -> String {
        let mut parts = Vec::new();
        for (name, e) in [(&self.gen_names[0], m.exp_x), (&self.gen_names[1], m.exp_y)] {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

fn mismatch(a: &RingPresentation, b: &RingPresentation) -> RingError {
    RingError::RingMismatch {
        left: a.label.clone(),
        right: b.label.clone(),
    }
}

/// Evaluates a raw polynomial in the generators at the given images.
fn substitute_terms(terms: &Terms, x_image: &ClassElement, y_image: &ClassElement) -> ClassElement {
    let target = &x_image.ring;
    let mut acc = target.zero();
    for (m, c) in terms {
        let piece = x_image
            .pow(m.exp_x)
            .mul_same(&y_image.pow(m.exp_y))
            .scale(c);
        acc = acc.add_same(&piece);
    }
    acc
}

/// A reduced cohomology class. No stored coefficient is zero.
#[derive(Clone)]
pub struct ClassElement {
    ring: Ring,
    terms: Terms,
}

impl PartialEq for ClassElement {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring)
            && self.terms == other.terms
    }
}

impl Eq for ClassElement {}

impl fmt::Debug for ClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ring.label, self)
    }
}

impl fmt::Display for ClassElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.render_terms(&self.terms))
    }
}

impl ClassElement {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ring_id(&self) -> &str {
        &self.ring.label
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in basis order.
    pub fn terms(&self) -> Vec<(Monomial, Scalar)> {
        let mut out: Vec<(Monomial, Scalar)> =
            self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        out.sort_by(|a, b| self.ring.basis_cmp(a.0, b.0));
        out
    }

    pub fn coeff(&self, exp_x: u32, exp_y: u32) -> Scalar {
        self.terms
            .get(&Monomial::new(exp_x, exp_y))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Degree of a nonzero homogeneous class; `None` for zero or mixed classes.
    pub fn degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|m| self.ring.monomial_degree(*m));
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Homogeneous or zero, and if nonzero of exactly this degree.
    pub fn has_degree(&self, degree: u32) -> bool {
        self.is_zero() || self.degree() == Some(degree)
    }

    pub fn graded_part(&self, degree: u32) -> ClassElement {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| self.ring.monomial_degree(**m) == degree)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        ClassElement {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    /// Coordinates in `ring.basis(degree)`.
    pub fn coordinates(&self, degree: u32) -> Vec<Scalar> {
        self.ring
            .basis(degree)
            .into_iter()
            .map(|m| self.coeff(m.exp_x, m.exp_y))
            .collect()
    }

    fn check_ring(&self, other: &ClassElement) -> Result<(), RingError> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(mismatch(&self.ring, &other.ring))
        }
    }

    pub fn add(&self, other: &ClassElement) -> Result<ClassElement, RingError> {
        self.check_ring(other)?;
        Ok(self.add_same(other))
    }

    pub fn sub(&self, other: &ClassElement) -> Result<ClassElement, RingError> {
        self.check_ring(other)?;
        Ok(self.add_same(&other.neg()))
    }

    pub fn mul(&self, other: &ClassElement) -> Result<ClassElement, RingError> {
        self.check_ring(other)?;
        Ok(self.mul_same(other))
    }

    fn add_same(&self, other: &ClassElement) -> ClassElement {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        ClassElement {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    fn mul_same(&self, other: &ClassElement) -> ClassElement {
        let mut raw = Terms::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                accumulate(&mut raw, m1.times(*m2), c1 * c2);
            }
        }
        self.ring.reduce(raw)
    }

    pub fn neg(&self) -> ClassElement {
        self.scale(&-Scalar::one())
    }

    pub fn scale(&self, c: &Scalar) -> ClassElement {
        if c.is_zero() {
            return self.ring.zero();
        }
        let terms = self.terms.iter().map(|(m, v)| (*m, v * c)).collect();
        ClassElement {
            ring: Arc::clone(&self.ring),
            terms,
        }
    }

    pub fn pow(&self, n: u32) -> ClassElement {
        let mut result = self.ring.one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_same(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_same(&base);
            }
        }
        result
    }

    /// Integral over the fundamental class. Accepts zero or a homogeneous
    /// class of top degree.
    pub fn integrate(&self) -> Result<Scalar, RingError> {
        if self.is_zero() {
            return Ok(Scalar::zero());
        }
        let d = self.degree().ok_or(RingError::NotHomogeneous)?;
        if d != self.ring.real_dimension {
            return Err(RingError::WrongDegree {
                expected: self.ring.real_dimension,
                found: d,
            });
        }
        let top = self.ring.top_monomial;
        Ok(self.coeff(top.exp_x, top.exp_y) * &self.ring.top_normalization)
    }

    /// Ring homomorphism induced by sending the generators to the given
    /// images (which must share a ring).
    pub fn substitute(
        &self,
        x_image: &ClassElement,
        y_image: &ClassElement,
    ) -> Result<ClassElement, RingError> {
        x_image.check_ring(y_image)?;
        Ok(substitute_terms(&self.terms, x_image, y_image))
    }

    /// The scalar `t` with `self = t * other`, if one exists.
    pub fn ratio_to(&self, other: &ClassElement) -> Option<Scalar> {
        if self.check_ring(other).is_err() {
            return None;
        }
        if other.is_zero() {
            return self.is_zero().then(Scalar::zero);
        }
        let (m, c) = other.terms.iter().next()?;
        let t = self.coeff(m.exp_x, m.exp_y) / c;
        (other.scale(&t) == *self).then_some(t)
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// Integral basis of the kernel of `y -> c*y` on the degree-`source_degree`
/// piece, in echelon order of basis coordinates.
pub fn mult_kernel(
    ring: &Ring,
    c: &ClassElement,
    source_degree: u32,
) -> Result<Vec<ClassElement>, RingError> {
    if !Arc::ptr_eq(ring, &c.ring) && **ring != *c.ring {
        return Err(mismatch(ring, &c.ring));
    }
    if !c.is_homogeneous() {
        return Err(RingError::NotHomogeneous);
    }
    let source = ring.basis(source_degree);
    if source.is_empty() {
        return Ok(Vec::new());
    }
    let images: Vec<ClassElement> = source
        .iter()
        .map(|m| c.mul_same(&ring.monomial(m.exp_x, m.exp_y)))
        .collect();
    let target_degree = source_degree + c.degree().unwrap_or(0);
    let target = ring.basis(target_degree);

    // Row i of `columns` is the image of source basis element i; clear
    // denominators so the lattice computation runs over the integers.
    let mut denom_lcm = BigInt::one();
    for img in &images {
        for v in img.terms.values() {
            denom_lcm = denom_lcm.lcm(v.denom());
        }
    }
    let columns: Vec<Vec<BigInt>> = images
        .iter()
        .map(|img| {
            target
                .iter()
                .map(|m| {
                    (img.coeff(m.exp_x, m.exp_y) * Scalar::from_integer(denom_lcm.clone()))
                        .to_integer()
                })
                .collect()
        })
        .collect();

    let kernel = lattice::integer_left_kernel(&columns);
    Ok(kernel
        .into_iter()
        .map(|v| {
            ring.reduce(
                source
                    .iter()
                    .zip(v)
                    .map(|(m, x)| (*m, Scalar::from_integer(x))),
            )
        })
        .collect())
}
