//! Independent reference implementations for the integration tests.
//!
//! Nothing here calls into the crate: the curve-bundle ring is a fixed
//! 4x2 coefficient table over `i128`, and the solvers are plain loops.

#![allow(dead_code)]

/// `sum c[i][j] s^i f^j` in `Z[s,f]/(s^4 + k s^3 f, f^2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cls {
    pub k: i128,
    pub c: [[i128; 2]; 4],
}

impl Cls {
    pub fn zero(k: i64) -> Self {
        Cls {
            k: k.into(),
            c: [[0; 2]; 4],
        }
    }

    pub fn one(k: i64) -> Self {
        let mut x = Self::zero(k);
        x.c[0][0] = 1;
        x
    }

    pub fn linear(k: i64, a: i64, b: i64) -> Self {
        let mut x = Self::zero(k);
        x.c[1][0] = a.into();
        x.c[0][1] = b.into();
        x
    }

    pub fn add(&self, o: &Cls) -> Cls {
        let mut x = *self;
        for i in 0..4 {
            for j in 0..2 {
                x.c[i][j] += o.c[i][j];
            }
        }
        x
    }

    pub fn scale(&self, t: i128) -> Cls {
        let mut x = *self;
        for row in x.c.iter_mut() {
            for v in row.iter_mut() {
                *v *= t;
            }
        }
        x
    }

    pub fn mul(&self, o: &Cls) -> Cls {
        let mut x = Cls {
            k: self.k,
            c: [[0; 2]; 4],
        };
        for i1 in 0..4 {
            for j1 in 0..2 {
                for i2 in 0..4 {
                    for j2 in 0..2 {
                        let (mut i, mut j) = (i1 + i2, j1 + j2);
                        let mut v = self.c[i1][j1] * o.c[i2][j2];
                        // s^4 = -k s^3 f
                        while i >= 4 && j < 2 {
                            v *= -self.k;
                            i -= 1;
                            j += 1;
                        }
                        if j < 2 && v != 0 {
                            x.c[i][j] += v;
                        }
                    }
                }
            }
        }
        x
    }

    pub fn pow(&self, n: u32) -> Cls {
        (0..n).fold(Cls::one(self.k as i64), |acc, _| acc.mul(self))
    }

    /// Part of degree `d` (in units of the generators).
    pub fn part(&self, d: usize) -> Cls {
        let mut x = Cls::zero(self.k as i64);
        for i in 0..4 {
            for j in 0..2 {
                if i + j == d {
                    x.c[i][j] = self.c[i][j];
                }
            }
        }
        x
    }

    pub fn integrate(&self) -> i128 {
        self.c[3][1]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().flatten().all(|v| *v == 0)
    }
}

/// Total Chern class `((1+s)^4 + k f (1+s)^3)(1 + (2-2g) f)`.
pub fn total_chern(g: i64, k: i64) -> Cls {
    let one = Cls::one(k);
    let s1 = one.add(&Cls::linear(k, 1, 0));
    let f = Cls::linear(k, 0, 1);
    let base = s1.pow(4).add(&f.scale(k.into()).mul(&s1.pow(3)));
    base.mul(&one.add(&f.scale((2 - 2 * g).into())))
}

/// `{(a, b) : a >= 0, a(a^2-4)(4b-ak) = 4 rhs}` over a wide box.
pub fn cubic_solutions(k: i64, rhs: i64, even_a: bool, parity: bool) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for a in 0..=80i64 {
        for b in -2000..=2000i64 {
            if a * (a * a - 4) * (4 * b - a * k) != 4 * rhs {
                continue;
            }
            if even_a && a % 2 != 0 {
                continue;
            }
            if parity && (b - k).rem_euclid(2) != 0 {
                continue;
            }
            out.push((a, b));
        }
    }
    out
}

/// Whether some integral `s -> a s + b f`, `f -> c s + d f` with
/// `ad - bc = ±1` carries the relations of ring `k1` into ring `k2`.
pub fn even_ring_iso(k1: i64, k2: i64) -> bool {
    let r = -5..=5i64;
    for a in r.clone() {
        for b in r.clone() {
            for c in r.clone() {
                for d in r.clone() {
                    if (a * d - b * c).abs() != 1 {
                        continue;
                    }
                    let s = Cls::linear(k2, a, b);
                    let f = Cls::linear(k2, c, d);
                    let rel = s.pow(4).add(&s.pow(3).mul(&f).scale(k1.into()));
                    if f.mul(&f).is_zero() && rel.is_zero() {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// `(x xi + y h)^2 = 0` in `Z[xi,h]/(xi^2 - c1 xi h + c2 h^2, h^4)` for some
/// `x ≠ 0`, searched over `|x|, |y| <= 10`.
pub fn p3_square_zero(c1: i64, c2: i64) -> bool {
    for x in -10..=10i64 {
        for y in -10..=10i64 {
            if x == 0 {
                continue;
            }
            // x^2 xi^2 + 2xy xi h + y^2 h^2, with xi^2 = c1 xi h - c2 h^2.
            let xi_h = x * x * c1 + 2 * x * y;
            let h_h = y * y - x * x * c2;
            if xi_h == 0 && h_h == 0 {
                return true;
            }
        }
    }
    false
}

/// (input, minimally parenthesized form)
pub const ROUND_TRIP: &[(&str, &str)] = &[
    ("s", "s"),
    ("42", "42"),
    ("s+f", "s + f"),
    ("s-f", "s - f"),
    ("s*f", "s*f"),
    ("s/4", "s/4"),
    ("s^3", "s^3"),
    ("-s", "-s"),
    ("--s", "--s"),
    ("-s^4", "-s^4"),
    ("(-s)^4", "(-s)^4"),
    ("-(s^4)", "-s^4"),
    ("s+f*s", "s + f*s"),
    ("(s+f)*s", "(s + f)*s"),
    ("s*(f*s)", "s*(f*s)"),
    ("(s*f)*s", "s*f*s"),
    ("s-(f-s)", "s - (f - s)"),
    ("(s-f)-s", "s - f - s"),
    ("s-(f+s)", "s - (f + s)"),
    ("s+(f-s)", "s + (f - s)"),
    ("s*-f", "s*-f"),
    ("s*(-f)", "s*-f"),
    ("-s*f", "-s*f"),
    ("-(s*f)", "-(s*f)"),
    ("(s/2)/3", "s/2/3"),
    ("s*(f/2)", "s*(f/2)"),
    ("(s+f)/2", "(s + f)/2"),
    ("(s^2)^2", "(s^2)^2"),
    ("(4*s+3*f)^4", "(4*s + 3*f)^4"),
    ("(6*s+5*f)^4", "(6*s + 5*f)^4"),
    ("6*s^2 - 5*s*f", "6*s^2 - 5*s*f"),
    ("  ( ( s ) )  ", "s"),
    ("2*(s+f)^2 - (5*s + 5*f)*s", "2*(s + f)^2 - (5*s + 5*f)*s"),
    ("s^0", "s^0"),
    ("(-2)^3", "(-2)^3"),
    ("xi*h^3", "xi*h^3"),
];

/// `((g1, k1), (g2, k2), verdict)`, read off from the classification statement.
pub const DIFFEO_SPOT_PAIRS: &[((u32, i64), (u32, i64), &str)] = &[
    ((2, 0), (2, 0), "oriented_diffeo"),
    ((2, 1), (2, 3), "diffeo_only"),
    ((2, 1), (2, 5), "oriented_diffeo"),
    ((2, 1), (2, 2), "distinct"),
    ((3, 2), (3, 6), "oriented_diffeo"),
    ((3, 2), (3, -2), "oriented_diffeo"),
    ((3, 3), (3, 1), "diffeo_only"),
    ((3, 3), (3, 7), "oriented_diffeo"),
    ((2, 1), (3, 1), "distinct"),
    ((0, 0), (0, 4), "oriented_diffeo"),
    ((0, 1), (0, 3), "diffeo_only"),
    ((0, 1), (0, -1), "diffeo_only"),
    ((0, 0), (0, 2), "distinct"),
    ((1, 5), (1, 3), "diffeo_only"),
    ((1, 5), (1, 9), "oriented_diffeo"),
    ((1, 0), (1, 1), "distinct"),
    ((4, 7), (4, 1), "diffeo_only"),
    ((4, 6), (4, 0), "distinct"),
    ((5, -3), (5, 1), "oriented_diffeo"),
    ((5, 2), (4, 2), "distinct"),
];

/// Every formula anchor a report step may carry.
pub const ANCHORS: &[&str] = &[
    "(3s+f).[F] = 0, (4s+3f).[F] = 1",
    "(4s+(2+k)f)^4 = 512; (6s+5f)^4 = 432",
    "(6s+5f).(s^3 + (9/4)s^2f) = 1/2",
    "(as+bf)^3.(alpha f) = a^3 alpha",
    "(αs+βf).(γs^2+δsf) = αγ s^3 + (αδ+βγ) s^2f",
    "(αs+βf)^2 = 0 iff α = 0",
    "+ for c_1(X) = 4s+5f; - for c_1(X) = 6s+5f",
    "3c_1^2c_2 - c_1^4 >= 0",
    "4b - ak < 0",
    "4c_1^2c_2 - c_1^4 = 384(1-g)",
    "4c_2(E) - c_1(E)^2 = 0",
    "H^*(X', Z) = Z[s]/<s^4>",
    "H^2(X', O^*) = H^3(X', Z) = 0",
    "H^3.f = -s^3f = -1",
    "K_X + aL = (al-b) f",
    "K_X.C < 0 for some curve C",
    "L^3 = 16",
    "L^3 = 16, b_3(X') = 0",
    "L^4 = lambda^4 = -27",
    "L^4 = lambda^4 = s^4 = -1",
    "X' = P_3",
    "X' = P_4",
    "[F] = 4s^3 + 9s^2f",
    "[F] = c s^2.f",
    "[F] = l(s^3 + (3/4)k s^2f)",
    "[F] = multiple of s^3 + (3/4)k s^2f",
    "[K_X'] = -5 sigma",
    "[S] = sigma^2",
    "a = 0 or a >= 4",
    "a = 0, or a >= 4 and b = ak/4",
    "a = 4",
    "a = 4, b = 2+k; or k = 3, a = 6, b = 5",
    "a >= 4 and 4b - ak < 0",
    "a >= 4",
    "admissible (alpha, beta) = {}",
    "alpha delta - beta gamma = 1; -alpha gamma k + alpha delta + 3 beta gamma = 0",
    "b_0 = b_8 = 1, b_2i = 2, b_1 = b_7 = 2g",
    "b_3 = b_5 = 4g",
    "c_1(X) = (3l ± 1) s + l f, l > 0",
    "c_1(X) = (l ± 1) s + l f, l >= 3",
    "c_1(X) = 6s + 2f, w_2(X) = 0",
    "c_1(rho^*L) = 4s + 3f",
    "c_2(X) = 10(s+f)^2 ± (5s+5f).s + rho^*[S]",
    "c_2^2 = 96(1-g)",
    "c_2^2 = a(a^2-4)(b - ak/4)",
    "chi(O_X') = 1",
    "dim Alb(X) = 1",
    "dim X' = 1, a = 4",
    "dim X' = 3",
    "dim X' = 4",
    "f.[F] != 0",
    "h^{1,0}(X) = 1",
    "p_1 = 4s + 2k f",
    "w_2(X) = 0",
    "χ(O_P(E)) = 1-g",
];
