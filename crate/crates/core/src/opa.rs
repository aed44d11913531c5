//! Pump-power model of the single-pass parametric amplifier module.
//!
//! The squeezed and anti-squeezed noise levels relative to shot noise are
//! `R∓ = L + (1-L) exp(∓2 sqrt(a p))` for SHG efficiency `a` (1/W), pump
//! power `p` (W) and total detection loss `L`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gaussian::GaussianState;
use crate::scalar::{cst, Real};

/// Static parameters of the amplifier module.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OpaParams<T> {
    /// SHG efficiency `a` in 1/W.
    pub shg_efficiency: T,
    /// Module power transmittance at the fundamental (squeezed) wavelength.
    pub transmittance_1550: T,
    /// Module power transmittance at the pump (second-harmonic) wavelength.
    pub transmittance_780: T,
}

impl<T: Real> OpaParams<T> {
    pub fn new(shg_efficiency: T, transmittance_1550: T, transmittance_780: T) -> Result<Self> {
        if !(shg_efficiency >= T::zero()) || !shg_efficiency.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "SHG efficiency must be finite and non-negative, got {shg_efficiency}"
            )));
        }
        for (name, t) in [
            ("transmittance_1550", transmittance_1550),
            ("transmittance_780", transmittance_780),
        ] {
            if !(t > T::zero() && t <= T::one()) {
                return Err(Error::InvalidArgument(format!(
                    "{name} must lie in (0, 1], got {t}"
                )));
            }
        }
        Ok(OpaParams {
            shg_efficiency,
            transmittance_1550,
            transmittance_780,
        })
    }

    /// Builds the parameter set from an efficiency quoted in %/W.
    pub fn from_pct_per_w(
        shg_pct_per_w: T,
        transmittance_1550: T,
        transmittance_780: T,
    ) -> Result<Self> {
        Self::new(
            shg_pct_per_w / cst::<T>(100.0),
            transmittance_1550,
            transmittance_780,
        )
    }

    /// SHG efficiency in %/W, the unit usually quoted for waveguides.
    pub fn shg_pct_per_w(&self) -> T {
        self.shg_efficiency * cst::<T>(100.0)
    }
}

/// One pump setting, optionally with the raw monitor reading it came from.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PumpPoint<T> {
    /// Pump power incident on the module, in W.
    pub incident_power_w: T,
    /// Power seen by the monitor photodiode behind the module, if recorded.
    pub monitored_power_w: Option<T>,
}

impl<T: Real> PumpPoint<T> {
    pub fn new(incident_power_w: T) -> Result<Self> {
        if !(incident_power_w >= T::zero()) || !incident_power_w.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "pump power must be finite and non-negative, got {incident_power_w}"
            )));
        }
        Ok(PumpPoint {
            incident_power_w,
            monitored_power_w: None,
        })
    }

    /// Reconstructs the incident pump power from a monitor reading taken
    /// behind the module.
    pub fn from_monitor(monitored_power_w: T, transmittance_780: T) -> Result<Self> {
        let incident = incident_pump_from_monitor(monitored_power_w, transmittance_780)?;
        Ok(PumpPoint {
            incident_power_w: incident,
            monitored_power_w: Some(monitored_power_w),
        })
    }
}

/// Inverts the pump monitor: the monitor sits behind the module, so the
/// incident power is the reading divided by the module transmittance at
/// the pump wavelength.
pub fn incident_pump_from_monitor<T: Real>(
    monitored_power_w: T,
    transmittance_780: T,
) -> Result<T> {
    if !(monitored_power_w >= T::zero()) || !monitored_power_w.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "monitored power must be finite and non-negative, got {monitored_power_w}"
        )));
    }
    if !(transmittance_780 > T::zero() && transmittance_780 <= T::one()) {
        return Err(Error::InvalidArgument(format!(
            "pump transmittance must lie in (0, 1], got {transmittance_780}"
        )));
    }
    Ok(monitored_power_w / transmittance_780)
}

/// Squeezed and anti-squeezed noise power relative to shot noise:
/// `(R-, R+) = (L + (1-L) e^{-2 sqrt(a p)}, L + (1-L) e^{+2 sqrt(a p)})`.
pub fn noise_levels<T: Real>(shg_efficiency: T, pump_w: T, loss: T) -> Result<(T, T)> {
    if !(shg_efficiency >= T::zero()) || !shg_efficiency.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "SHG efficiency must be finite and non-negative, got {shg_efficiency}"
        )));
    }
    if !(pump_w >= T::zero()) || !pump_w.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "pump power must be finite and non-negative, got {pump_w}"
        )));
    }
    if !(loss >= T::zero() && loss <= T::one()) {
        return Err(Error::InvalidArgument(format!(
            "loss fraction must lie in [0, 1], got {loss}"
        )));
    }
    let two = cst::<T>(2.0);
    let exponent = two * (shg_efficiency * pump_w).sqrt();
    let k = T::one() - loss;
    Ok((loss + k * (-exponent).exp(), loss + k * exponent.exp()))
}

/// [`noise_levels`] expressed in dB relative to shot noise.
pub fn noise_levels_db<T: Real>(shg_efficiency: T, pump_w: T, loss: T) -> Result<(T, T)> {
    let (r_minus, r_plus) = noise_levels(shg_efficiency, pump_w, loss)?;
    Ok((
        crate::gaussian::to_db(r_minus)?,
        crate::gaussian::to_db(r_plus)?,
    ))
}

/// Effective loss seen by a squeezed vacuum generated halfway through a
/// waveguide of total transmittance `T`: `1 - sqrt(T)`.
pub fn module_internal_loss<T: Real>(transmittance_1550: T) -> Result<T> {
    if !(transmittance_1550 > T::zero() && transmittance_1550 <= T::one()) {
        return Err(Error::InvalidArgument(format!(
            "module transmittance must lie in (0, 1], got {transmittance_1550}"
        )));
    }
    Ok(T::one() - transmittance_1550.sqrt())
}

/// Same noise levels computed through the state algebra:
/// vacuum -> squeeze(sqrt(a p)) -> loss channel.
pub fn noise_levels_via_states<T: Real>(
    shg_efficiency: T,
    pump_w: T,
    loss: T,
) -> Result<(T, T)> {
    let r = (shg_efficiency * pump_w).sqrt();
    let state = GaussianState::vacuum().squeeze(r)?.loss_channel(loss)?;
    Ok((
        state.quadrature_variance(cst::<T>(std::f64::consts::FRAC_PI_2)),
        state.quadrature_variance(T::zero()),
    ))
}
