//! Single-mode Gaussian states in shot-noise units and the channels that
//! act on them.
//!
//! The convention throughout is that the vacuum state has unit variance in
//! every quadrature, so a quadrature variance is directly the noise power
//! relative to shot noise. Decibel values are `10 log10` of that ratio.

use crate::error::{Error, Result};
use crate::scalar::{cst, Real};

/// Quadrature covariance and displacement of a single optical mode.
///
/// Invariants: the covariance is symmetric positive definite with
/// `det(cov) >= 1` (equality for pure states); the vacuum is the identity
/// with zero displacement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianState<T> {
    cov: [[T; 2]; 2],
    mean: [T; 2],
}

impl<T: Real> GaussianState<T> {
    /// Vacuum state: identity covariance, zero mean.
    pub fn vacuum() -> Self {
        GaussianState {
            cov: [[T::one(), T::zero()], [T::zero(), T::one()]],
            mean: [T::zero(), T::zero()],
        }
    }

    /// Builds a state from raw parts, checking the covariance invariants.
    pub fn from_parts(cov: [[T; 2]; 2], mean: [T; 2]) -> Result<Self> {
        let finite = cov.iter().flatten().all(|v| v.is_finite())
            && mean.iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::InvalidArgument(
                "covariance and mean must be finite".into(),
            ));
        }
        let scale = cov[0][0].abs().max(cov[1][1].abs()).max(T::one());
        if (cov[0][1] - cov[1][0]).abs() > cst::<T>(1e-9) * scale {
            return Err(Error::InvalidArgument(
                "covariance must be symmetric".into(),
            ));
        }
        let det = cov[0][0] * cov[1][1] - cov[0][1] * cov[1][0];
        if cov[0][0] <= T::zero() || det <= T::zero() {
            return Err(Error::InvalidArgument(
                "covariance must be positive definite".into(),
            ));
        }
        if det < T::one() - cst::<T>(1e-9) * scale * scale {
            return Err(Error::InvalidArgument(format!(
                "covariance violates the uncertainty relation: det = {det}"
            )));
        }
        let off = (cov[0][1] + cov[1][0]) / cst::<T>(2.0);
        Ok(GaussianState {
            cov: [[cov[0][0], off], [off, cov[1][1]]],
            mean,
        })
    }

    /// Vacuum squeezed by `r`; shorthand for `vacuum().squeeze(r)`.
    pub fn squeezed_vacuum(r: T) -> Result<Self> {
        Self::vacuum().squeeze(r)
    }

    pub fn cov(&self) -> [[T; 2]; 2] {
        self.cov
    }

    pub fn mean(&self) -> [T; 2] {
        self.mean
    }

    pub fn det_cov(&self) -> T {
        self.cov[0][0] * self.cov[1][1] - self.cov[0][1] * self.cov[1][0]
    }

    pub fn trace_cov(&self) -> T {
        self.cov[0][0] + self.cov[1][1]
    }

    /// Applies the single-mode squeezer `diag(e^r, e^-r)` symplectically,
    /// so a vacuum input ends up with variances `(e^{2r}, e^{-2r})`.
    pub fn squeeze(&self, r: T) -> Result<Self> {
        if !r.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "squeezing parameter must be finite, got {r}"
            )));
        }
        let s = r.exp();
        let [[a, b], [_, d]] = self.cov;
        Ok(GaussianState {
            cov: [[a * s * s, b], [b, d / (s * s)]],
            mean: [self.mean[0] * s, self.mean[1] / s],
        })
    }

    /// Rotates the quadrature frame by `theta`; determinant and trace of
    /// the covariance are preserved.
    pub fn rotate(&self, theta: T) -> Self {
        let (sin, cos) = theta.sin_cos();
        let [[a, b], [_, d]] = self.cov;
        let a2 = cos * cos * a - cst::<T>(2.0) * sin * cos * b + sin * sin * d;
        let b2 = sin * cos * (a - d) + (cos * cos - sin * sin) * b;
        let d2 = sin * sin * a + cst::<T>(2.0) * sin * cos * b + cos * cos * d;
        GaussianState {
            cov: [[a2, b2], [b2, d2]],
            mean: [
                cos * self.mean[0] - sin * self.mean[1],
                sin * self.mean[0] + cos * self.mean[1],
            ],
        }
    }

    /// Mixes the mode with vacuum: `cov <- (1-L) cov + L I`,
    /// `mean <- sqrt(1-L) mean`.
    pub fn loss_channel(&self, loss: T) -> Result<Self> {
        if !(loss >= T::zero() && loss <= T::one()) {
            return Err(Error::InvalidArgument(format!(
                "loss fraction must lie in [0, 1], got {loss}"
            )));
        }
        let k = T::one() - loss;
        let [[a, b], [_, d]] = self.cov;
        Ok(GaussianState {
            cov: [[k * a + loss, k * b], [k * b, k * d + loss]],
            mean: [self.mean[0] * k.sqrt(), self.mean[1] * k.sqrt()],
        })
    }

    /// Variance of the quadrature at angle `theta`:
    /// `[cos t, sin t] cov [cos t, sin t]^T`.
    pub fn quadrature_variance(&self, theta: T) -> T {
        let (sin, cos) = theta.sin_cos();
        let [[a, b], [_, d]] = self.cov;
        cos * cos * a + cst::<T>(2.0) * sin * cos * b + sin * sin * d
    }
}

/// Noise power ratio in decibels: `10 log10(ratio)`.
pub fn to_db<T: Real>(ratio: T) -> Result<T> {
    if !(ratio > T::zero()) || !ratio.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "power ratio must be finite and positive, got {ratio}"
        )));
    }
    Ok(cst::<T>(10.0) * ratio.log10())
}

/// Inverse of [`to_db`]: `10^(db/10)`.
pub fn from_db<T: Real>(db: T) -> Result<T> {
    if !db.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "decibel value must be finite, got {db}"
        )));
    }
    Ok(cst::<T>(10.0).powf(db / cst::<T>(10.0)))
}
