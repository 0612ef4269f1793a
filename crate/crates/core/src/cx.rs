//! Minimal complex arithmetic over any [`Real`] scalar.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::real::Real;

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct Cx<T> {
    pub re: T,
    pub im: T,
}

impl<T: Real> Cx<T> {
    pub const fn new(re: T, im: T) -> Self {
        Cx { re, im }
    }

    pub fn real(re: T) -> Self {
        Cx {
            re,
            im: T::ZERO,
        }
    }

    pub fn zero() -> Self {
        Cx {
            re: T::ZERO,
            im: T::ZERO,
        }
    }

    pub fn abs(self) -> T {
        (self.re * self.re + self.im * self.im).sqrt()
    }

    pub fn conj(self) -> Self {
        Cx {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn exp(self) -> Self {
        let m = self.re.exp();
        let (s, c) = self.im.sin_cos();
        Cx {
            re: m * c,
            im: m * s,
        }
    }

    /// `r * e^{i theta}` for `r > 0`.
    pub fn from_polar(r: T, theta: T) -> Self {
        let (s, c) = theta.sin_cos();
        Cx {
            re: r * c,
            im: r * s,
        }
    }

    pub fn scale(self, k: T) -> Self {
        Cx {
            re: self.re * k,
            im: self.im * k,
        }
    }

    pub fn to_f64(self) -> Cx<f64> {
        Cx {
            re: self.re.to_f64(),
            im: self.im.to_f64(),
        }
    }
}

pub type Cx64 = Cx<f64>;

impl Cx64 {
    pub fn arg(self) -> f64 {
        self.im.atan2(self.re)
    }
}

impl<T: Real> Add for Cx<T> {
    type Output = Cx<T>;
    fn add(self, rhs: Self) -> Self {
        Cx {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<T: Real> Sub for Cx<T> {
    type Output = Cx<T>;
    fn sub(self, rhs: Self) -> Self {
        Cx {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl<T: Real> Neg for Cx<T> {
    type Output = Cx<T>;
    fn neg(self) -> Self {
        Cx {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<T: Real> Mul for Cx<T> {
    type Output = Cx<T>;
    fn mul(self, rhs: Self) -> Self {
        Cx {
            re: self.re * rhs.re - self.im * rhs.im,
            im: self.re * rhs.im + self.im * rhs.re,
        }
    }
}

impl<T: Real> Div for Cx<T> {
    type Output = Cx<T>;
    fn div(self, rhs: Self) -> Self {
        let d = rhs.re * rhs.re + rhs.im * rhs.im;
        Cx {
            re: (self.re * rhs.re + self.im * rhs.im) / d,
            im: (self.im * rhs.re - self.re * rhs.im) / d,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dd::Dd;

    #[test]
    fn mul_div_round_trip() {
        let a = Cx::new(1.3, -0.7);
        let b = Cx::new(-2.1, 0.4);
        let c = a * b / b;
        assert!((c - a).abs() < 1e-14);
    }

    #[test]
    fn exp_of_imaginary_is_unit() {
        let z = Cx::new(Dd::ZERO, Dd::from(1.1));
        let e = z.exp();
        assert!((e.abs() - Dd::ONE).abs().hi() < 1e-30);
    }

    #[test]
    fn polar_matches_exp() {
        let r = 2.5f64;
        let th = 0.9f64;
        let a = Cx::from_polar(r, th);
        let b = Cx::real(r) * Cx::new(0.0, th).exp();
        assert!((a - b).abs() < 1e-14);
    }
}
