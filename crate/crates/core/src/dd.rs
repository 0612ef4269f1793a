//! Double-double arithmetic: an unevaluated sum of two `f64` giving a
//! ~106-bit significand (unit roundoff ~4.9e-32).
//!
//! The error-free transformations (`two_sum`, `two_prod`) and the
//! elementary functions follow the classic quad-double recipes: `exp`
//! by scaling + Taylor, `ln` by Newton on `exp`, `sin`/`cos` by range
//! reduction and Taylor on `[-pi/4, pi/4]`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

#[derive(Copy, Clone, Default)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    // requires |a| >= |b|
    let s = a + b;
    (s, b - (s - a))
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl Dd {
    pub const ZERO: Dd = Dd { hi: 0.0, lo: 0.0 };
    pub const ONE: Dd = Dd { hi: 1.0, lo: 0.0 };

    pub const PI: Dd = Dd {
        hi: 3.141592653589793,
        lo: 1.2246467991473532e-16,
    };
    pub const TWO_PI: Dd = Dd {
        hi: 6.283185307179586,
        lo: 2.4492935982947064e-16,
    };
    pub const FRAC_PI_2: Dd = Dd {
        hi: 1.5707963267948966,
        lo: 6.123233995736766e-17,
    };
    pub const LN_2: Dd = Dd {
        hi: 0.6931471805599453,
        lo: 2.3190468138462996e-17,
    };
    pub const E: Dd = Dd {
        hi: 2.718281828459045,
        lo: 1.4456468917292502e-16,
    };

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Dd {
        let (s, e) = two_sum(hi, lo);
        Dd { hi: s, lo: e }
    }

    #[inline]
    pub fn hi(self) -> f64 {
        self.hi
    }

    #[inline]
    pub fn lo(self) -> f64 {
        self.lo
    }

    #[inline]
    pub fn abs(self) -> Dd {
        if self.hi < 0.0 {
            -self
        } else {
            self
        }
    }

    pub fn is_finite(self) -> bool {
        self.hi.is_finite() && self.lo.is_finite()
    }

    pub fn floor(self) -> Dd {
        let fhi = self.hi.floor();
        if fhi == self.hi {
            let flo = self.lo.floor();
            let (s, e) = quick_two_sum(fhi, flo);
            Dd { hi: s, lo: e }
        } else {
            Dd { hi: fhi, lo: 0.0 }
        }
    }

    pub fn round(self) -> Dd {
        (self + Dd::new(0.5, 0.0)).floor()
    }

    pub fn recip(self) -> Dd {
        Dd::ONE / self
    }

    pub fn sqrt(self) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        debug_assert!(self.hi > 0.0, "sqrt of negative dd");
        // one Newton step on a f64 seed doubles the correct digits
        let s = self.hi.sqrt();
        let s = Dd::from(s);
        let s = (s + self / s) * Dd::from(0.5);
        (s + self / s) * Dd::from(0.5)
    }

    pub fn powi(self, n: i32) -> Dd {
        if n == 0 {
            return Dd::ONE;
        }
        let mut base = if n < 0 { self.recip() } else { self };
        let mut e = n.unsigned_abs();
        let mut acc = Dd::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc *= base;
            }
            base *= base;
            e >>= 1;
        }
        acc
    }

    /// `exp(self)`, by scaling `r = (x - m ln 2)/2^9`, a Taylor sum, nine
    /// squarings and a power-of-two multiply.
    pub fn exp(self) -> Dd {
        const K: f64 = 512.0;
        if self.hi <= -709.0 {
            return Dd::ZERO;
        }
        if self.hi >= 709.0 {
            return Dd::new(f64::INFINITY, 0.0);
        }
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ONE;
        }

        let m = (self.hi / Dd::LN_2.hi).round();
        let r = (self - Dd::LN_2 * Dd::from(m)) / Dd::from(K);

        // Taylor for exp(r) - 1 on |r| <= ln2/1024
        let mut term = r * r * Dd::from(0.5);
        let mut s = r + term;
        let mut k = 3.0f64;
        loop {
            term = term * r / Dd::from(k);
            s += term;
            if term.hi.abs() < 1e-37 || k > 24.0 {
                break;
            }
            k += 1.0;
        }

        // undo the 2^9 scaling: (1+s) <- (1+s)^2, tracked without the 1
        for _ in 0..9 {
            s = s * Dd::from(2.0) + s * s;
        }
        s += Dd::ONE;
        mul_pow2(s, m as i32)
    }

    /// Natural logarithm by two Newton corrections of the `f64` seed.
    pub fn ln(self) -> Dd {
        debug_assert!(self.hi > 0.0, "ln of non-positive dd");
        let mut y = Dd::from(self.hi.ln());
        for _ in 0..2 {
            // y += x * exp(-y) - 1
            y = y + self * (-y).exp() - Dd::ONE;
        }
        y
    }

    pub fn sin_cos(self) -> (Dd, Dd) {
        // reduce modulo 2*pi, then to [-pi/4, pi/4] by quadrant
        let k = (self.hi / Dd::TWO_PI.hi).round();
        let r = self - Dd::TWO_PI * Dd::from(k);
        let q = (r.hi / Dd::FRAC_PI_2.hi).round();
        let t = r - Dd::FRAC_PI_2 * Dd::from(q);
        let (s, c) = sin_cos_taylor(t);
        match (q as i64).rem_euclid(4) {
            0 => (s, c),
            1 => (c, -s),
            2 => (-s, -c),
            _ => (-c, s),
        }
    }

    pub fn powf(self, a: Dd) -> Dd {
        if self.hi == 0.0 && self.lo == 0.0 {
            return Dd::ZERO;
        }
        (self.ln() * a).exp()
    }
}

#[inline]
fn mul_pow2(x: Dd, n: i32) -> Dd {
    let f = (n as f64).exp2();
    Dd {
        hi: x.hi * f,
        lo: x.lo * f,
    }
}

fn sin_cos_taylor(t: Dd) -> (Dd, Dd) {
    if t.hi == 0.0 && t.lo == 0.0 {
        return (Dd::ZERO, Dd::ONE);
    }
    let x2 = t * t;
    // sin
    let mut term = t;
    let mut s = t;
    let mut k = 1.0f64;
    loop {
        term = term * x2 / Dd::from((2.0 * k) * (2.0 * k + 1.0));
        term = -term;
        s += term;
        if term.hi.abs() < 1e-35 || k > 20.0 {
            break;
        }
        k += 1.0;
    }
    // cos
    let mut term = Dd::ONE;
    let mut c = Dd::ONE;
    let mut k = 1.0f64;
    loop {
        term = term * x2 / Dd::from((2.0 * k - 1.0) * (2.0 * k));
        term = -term;
        c += term;
        if term.hi.abs() < 1e-35 || k > 20.0 {
            break;
        }
        k += 1.0;
    }
    (s, c)
}

impl From<f64> for Dd {
    #[inline]
    fn from(x: f64) -> Dd {
        Dd { hi: x, lo: 0.0 }
    }
}

impl Add for Dd {
    type Output = Dd;
    #[inline]
    fn add(self, rhs: Dd) -> Dd {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let e = e + self.lo + rhs.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }
}

impl Sub for Dd {
    type Output = Dd;
    #[inline]
    fn sub(self, rhs: Dd) -> Dd {
        self + (-rhs)
    }
}

impl Neg for Dd {
    type Output = Dd;
    #[inline]
    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Mul for Dd {
    type Output = Dd;
    #[inline]
    fn mul(self, rhs: Dd) -> Dd {
        let (p, e) = two_prod(self.hi, rhs.hi);
        let e = e + self.hi * rhs.lo + self.lo * rhs.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }
}

impl Div for Dd {
    type Output = Dd;
    #[inline]
    fn div(self, rhs: Dd) -> Dd {
        let q1 = self.hi / rhs.hi;
        let r = self - rhs * Dd::from(q1);
        let q2 = r.hi / rhs.hi;
        let r = r - rhs * Dd::from(q2);
        let q3 = r.hi / rhs.hi;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd::new(hi, lo + q3)
    }
}

impl AddAssign for Dd {
    fn add_assign(&mut self, rhs: Dd) {
        *self = *self + rhs;
    }
}
impl SubAssign for Dd {
    fn sub_assign(&mut self, rhs: Dd) {
        *self = *self - rhs;
    }
}
impl MulAssign for Dd {
    fn mul_assign(&mut self, rhs: Dd) {
        *self = *self * rhs;
    }
}

impl PartialEq for Dd {
    fn eq(&self, other: &Dd) -> bool {
        self.hi == other.hi && self.lo == other.lo
    }
}

impl PartialOrd for Dd {
    fn partial_cmp(&self, other: &Dd) -> Option<Ordering> {
        match self.hi.partial_cmp(&other.hi) {
            Some(Ordering::Equal) => self.lo.partial_cmp(&other.lo),
            ord => ord,
        }
    }
}

impl fmt::Debug for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dd({:e} + {:e})", self.hi, self.lo)
    }
}

impl fmt::Display for Dd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Dd, b: Dd, tol: f64) -> bool {
        let d = (a - b).abs();
        let scale = b.abs().hi.max(1.0);
        d.hi <= tol * scale
    }

    #[test]
    fn add_mul_exact_cases() {
        let a = Dd::from(1.0) / Dd::from(3.0);
        let b = a * Dd::from(3.0);
        assert!(close(b, Dd::ONE, 1e-31));
        let c = Dd::from(0.1) + Dd::from(0.2);
        let d = Dd::new(0.1, 0.0) + Dd::new(0.2, 0.0) - c;
        assert_eq!(d.hi, 0.0);
    }

    #[test]
    fn sqrt_squares_back() {
        for &x in &[2.0, 7.0, 1e-8, 3.5e12] {
            let s = Dd::from(x).sqrt();
            assert!(close(s * s, Dd::from(x), 1e-30), "x = {x}");
        }
        // mpmath: sqrt(7)
        let r = Dd::from(7.0).sqrt();
        let refv = Dd::new(2.6457513110645907, -1.2566948082017735e-16);
        assert!(close(r, refv, 1e-31));
    }

    #[test]
    fn exp_reference_values() {
        // reference pairs computed with 200-bit mpmath
        let cases = [
            (0.1, Dd::new(1.1051709180756477, -8.763017013024472e-17)),
            (-3.25, Dd::new(0.03877420783172201, 1.1433418851841824e-18)),
            (1.0, Dd::E),
        ];
        for (x, want) in cases {
            let got = Dd::from(x).exp();
            let rel = ((got - want) / want).abs();
            assert!(rel.hi < 1e-30, "exp({x}): rel = {:e}", rel.hi);
        }
        // exp(50) = 5.184705528587072e21 + 419031.45332293346
        let got = Dd::from(50.0).exp();
        let want = Dd::new(5.184705528587072e21, 419031.45332293346);
        let rel = ((got - want) / want).abs();
        assert!(rel.hi < 1e-30, "exp(50): rel = {:e}", rel.hi);
    }

    #[test]
    fn ln_reference_values() {
        let cases = [
            (3.0, Dd::new(1.0986122886681098, -9.07129723500153e-17)),
            (1e-8, Dd::new(-18.420680743952367, 1.7366049787057995e-15)),
            (12345.6789, Dd::new(9.421061394191835, 6.601089509113688e-16)),
        ];
        for (x, want) in cases {
            let got = Dd::from(x).ln();
            let rel = ((got - want) / want).abs();
            assert!(rel.hi < 1e-30, "ln({x}): rel = {:e}", rel.hi);
        }
        assert!(close(Dd::E.ln(), Dd::ONE, 1e-31));
    }

    #[test]
    fn exp_ln_round_trip() {
        for &x in &[1e-6, 0.37, 1.0, 55.1234, 9.2e7] {
            let y = Dd::from(x).ln().exp();
            assert!(close(y, Dd::from(x), 1e-29), "x = {x}");
        }
    }

    #[test]
    fn sin_cos_reference_and_identity() {
        let (s, _) = Dd::from(1.0).sin_cos();
        let want = Dd::new(0.8414709848078965, 1.776845092935536e-18);
        assert!(((s - want) / want).abs().hi < 1e-30);

        let (_, c) = Dd::from(2.0).sin_cos();
        let want = Dd::new(-0.4161468365471424, 1.990596398957495e-17);
        assert!(((c - want) / want).abs().hi < 1e-29);

        let (s, _) = Dd::from(100.0).sin_cos();
        let want = Dd::new(-0.5063656411097588, -3.050947053792115e-18);
        assert!(((s - want) / want).abs().hi < 1e-28);

        for &x in &[0.0, 0.5, 1.3, 3.0, -2.2, 17.0] {
            let (s, c) = Dd::from(x).sin_cos();
            assert!(close(s * s + c * c, Dd::ONE, 1e-30), "x = {x}");
        }
    }

    #[test]
    fn powi_matches_repeated_multiplication() {
        let x = Dd::from(1.7);
        let mut acc = Dd::ONE;
        for _ in 0..13 {
            acc *= x;
        }
        assert!(close(x.powi(13), acc, 1e-30));
        assert!(close(x.powi(-3) * x.powi(3), Dd::ONE, 1e-30));
    }

    #[test]
    fn division_accuracy() {
        let a = Dd::from(1.0) / Dd::from(7.0);
        let b = a * Dd::from(7.0);
        assert!(close(b, Dd::ONE, 1e-31));
    }
}
