//! Scalar abstraction so the model runs in f32 (training) or f64
//! (gradient checking) from the same code.

use ndarray::ScalarOperand;
use num_traits::{Float, FromPrimitive};

pub trait Scalar:
    Float + FromPrimitive + ScalarOperand + std::fmt::Debug + std::fmt::Display + std::iter::Sum + Send + Sync + 'static
{
    fn from_f64_exact(x: f64) -> Self;
    fn as_f64(self) -> f64;
}

impl Scalar for f32 {
    fn from_f64_exact(x: f64) -> Self {
        x as f32
    }
    fn as_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    fn from_f64_exact(x: f64) -> Self {
        x
    }
    fn as_f64(self) -> f64 {
        self
    }
}

/// Shorthand for converting literals inside generic numeric code.
#[inline]
pub fn c<F: Scalar>(x: f64) -> F {
    F::from_f64_exact(x)
}

/// GELU (tanh approximation) and its derivative. The pair must stay
/// consistent: the backward pass differentiates exactly this forward.
#[inline]
pub fn gelu<F: Scalar>(x: F) -> F {
    let k = c::<F>(0.797_884_560_802_865_4); // sqrt(2/pi)
    let a = c::<F>(0.044_715);
    let u = k * (x + a * x * x * x);
    c::<F>(0.5) * x * (F::one() + u.tanh())
}

#[inline]
pub fn gelu_deriv<F: Scalar>(x: F) -> F {
    let k = c::<F>(0.797_884_560_802_865_4);
    let a = c::<F>(0.044_715);
    let u = k * (x + a * x * x * x);
    let t = u.tanh();
    let sech2 = F::one() - t * t;
    c::<F>(0.5) * (F::one() + t) + c::<F>(0.5) * x * sech2 * k * (F::one() + c::<F>(3.0) * a * x * x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gelu_zero_is_zero() {
        assert_eq!(gelu(0.0f64), 0.0);
        assert_eq!(gelu(0.0f32), 0.0);
    }

    #[test]
    fn gelu_deriv_matches_finite_difference() {
        let h = 1e-6;
        for &x in &[-3.0f64, -1.0, -0.1, 0.0, 0.2, 1.5, 4.0] {
            let fd = (gelu(x + h) - gelu(x - h)) / (2.0 * h);
            let an = gelu_deriv(x);
            assert!((fd - an).abs() < 1e-8, "x={x}: fd={fd} analytic={an}");
        }
    }
}
