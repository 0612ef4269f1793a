//! Adaptive Gauss-Legendre quadrature, generic over the working
//! precision.
//!
//! A 15-point rule is applied per panel; the error estimate of a panel
//! is the defect between its value and the sum over its two halves, and
//! panels are bisected until the locally attributed tolerance is met.
//! Nodes and weights are produced at the working precision by Newton
//! iteration on the Legendre polynomial, so the same engine serves both
//! `f64` and double-double runs.

use std::sync::OnceLock;

use crate::cx::Cx;
use crate::dd::Dd;
use crate::real::Real;

const N: usize = 15;
const MAX_DEPTH: usize = 28;

/// Legendre nodes/weights on [-1, 1] at the precision of `T`.
pub struct Rule<T> {
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
}

fn legendre_rule<T: Real>(n: usize) -> Rule<T> {
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 1..=n {
        // Chebyshev-like seed, then Newton on P_n
        let mut x = T::from_f64(
            (std::f64::consts::PI * (i as f64 - 0.25) / (n as f64 + 0.5)).cos(),
        );
        let mut dp = T::ONE;
        for _ in 0..40 {
            let (p, d) = legendre_eval(n, x);
            dp = d;
            let step = p / d;
            x = x - step;
            if step.abs().to_f64() < T::epsilon() {
                break;
            }
        }
        let one = T::ONE;
        let w = T::from_f64(2.0) / ((one - x * x) * dp * dp);
        nodes.push(x);
        weights.push(w);
    }
    Rule { nodes, weights }
}

/// Value and derivative of the Legendre polynomial `P_n` at `x`.
fn legendre_eval<T: Real>(n: usize, x: T) -> (T, T) {
    let mut p0 = T::ONE;
    let mut p1 = x;
    for k in 2..=n {
        let kf = T::from_f64(k as f64);
        let a = T::from_f64((2 * k - 1) as f64);
        let b = T::from_f64((k - 1) as f64);
        let p2 = (a * x * p1 - b * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let nf = T::from_f64(n as f64);
    let d = nf * (x * p1 - p0) / (x * x - T::ONE);
    (p1, d)
}

static RULE_F64: OnceLock<Rule<f64>> = OnceLock::new();
static RULE_DD: OnceLock<Rule<Dd>> = OnceLock::new();

pub trait HasRule: Real {
    fn rule() -> &'static Rule<Self>
    where
        Self: Sized;
}

impl HasRule for f64 {
    fn rule() -> &'static Rule<f64> {
        RULE_F64.get_or_init(|| legendre_rule(N))
    }
}

impl HasRule for Dd {
    fn rule() -> &'static Rule<Dd> {
        RULE_DD.get_or_init(|| legendre_rule(N))
    }
}

fn panel<T: HasRule, F>(f: &F, a: T, b: T) -> Cx<T>
where
    F: Fn(T) -> Cx<T>,
{
    let rule = T::rule();
    let half = T::from_f64(0.5);
    let mid = (a + b) * half;
    let rad = (b - a) * half;
    let mut acc = Cx::zero();
    for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
        let t = mid + rad * *x;
        acc = acc + f(t).scale(*w);
    }
    acc.scale(rad)
}

/// Adaptive integral of a complex-valued `f` over `[a, b]`.
///
/// `rel_tol` is applied against the accumulated magnitude of the whole
/// integral; `abs_floor` guards panels whose value is essentially zero.
pub fn integrate<T: HasRule, F>(f: &F, a: T, b: T, rel_tol: f64, abs_floor: f64) -> Cx<T>
where
    F: Fn(T) -> Cx<T>,
{
    let whole = panel(f, a, b);
    let scale = whole.abs().to_f64().abs().max(abs_floor);
    let mut total = Cx::zero();
    // stack of (a, b, parent_value, depth)
    let mut stack = vec![(a, b, whole, 0usize)];
    while let Some((a, b, parent, depth)) = stack.pop() {
        let half = T::from_f64(0.5);
        let mid = (a + b) * half;
        let left = panel(f, a, mid);
        let right = panel(f, mid, b);
        let defect = (left + right - parent).abs().to_f64();
        if defect <= rel_tol * scale.max(abs_floor) || depth >= MAX_DEPTH {
            total = total + left + right;
        } else {
            stack.push((a, mid, left, depth + 1));
            stack.push((mid, b, right, depth + 1));
        }
    }
    total
}

/// Real-valued convenience wrapper around [`integrate`].
pub fn integrate_real<T: HasRule, F>(f: &F, a: T, b: T, rel_tol: f64, abs_floor: f64) -> T
where
    F: Fn(T) -> T,
{
    integrate(&|t| Cx::real(f(t)), a, b, rel_tol, abs_floor).re
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // degree-14 polynomial integrated exactly by a 15-point rule
        let f = |t: f64| t.powi(14) - 3.0 * t.powi(7) + 2.0;
        let got = integrate_real(&f, 0.0, 1.0, 1e-12, 1e-300);
        let want = 1.0 / 15.0 - 3.0 / 8.0 + 2.0;
        assert!((got - want).abs() < 1e-14);
    }

    #[test]
    fn oscillatory_integrand() {
        // int_0^pi sin t dt = 2
        let got = integrate_real(&|t: f64| t.sin(), 0.0, std::f64::consts::PI, 1e-12, 1e-300);
        assert!((got - 2.0).abs() < 1e-12);
    }

    #[test]
    fn graded_singularity() {
        // int_0^1 t^{-1/2} dt = 2 after the substitution t = v^2
        let got = integrate_real(
            &|v: f64| {
                let t = v * v;
                2.0 * v / t.sqrt()
            },
            0.0,
            1.0,
            1e-12,
            1e-300,
        );
        assert!((got - 2.0).abs() < 1e-12);
    }

    #[test]
    fn dd_precision_reaches_below_f64() {
        // int_0^1 exp(t) dt = e - 1
        let got = integrate_real(
            &|t: Dd| t.exp(),
            Dd::ZERO,
            Dd::ONE,
            1e-28,
            1e-300,
        );
        let want = Dd::E - Dd::ONE;
        let err = (got - want).abs().hi();
        assert!(err < 1e-27, "err = {err:e}");
    }

    #[test]
    fn complex_integrand() {
        // int_0^1 e^{it} dt = sin 1 + i(1 - cos 1)
        let got = integrate(
            &|t: f64| Cx::new(0.0, t).exp(),
            0.0,
            1.0,
            1e-13,
            1e-300,
        );
        assert!((got.re - 1f64.sin()).abs() < 1e-13);
        assert!((got.im - (1.0 - 1f64.cos())).abs() < 1e-13);
    }
}
