//! Scalar abstraction: the model math is generic over the floating-point
//! type, instantiated as `f32` or `f64`.

use std::fmt;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar backing all model quantities.
pub trait Real: Float + FromPrimitive + fmt::Debug + fmt::Display + 'static {}

impl Real for f32 {}
impl Real for f64 {}

/// Lifts an `f64` constant into the working scalar type.
pub(crate) fn cst<T: Real>(x: f64) -> T {
    T::from_f64(x).expect("constant must be representable in the scalar type")
}
