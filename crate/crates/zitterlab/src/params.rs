use crate::error::{Error, Result};

/// Physical parameters of the driven ion, ħ = 1.
///
/// Only the product η·Ω̃ of the Lamb-Dicke parameter and the effective Rabi
/// frequency enters the dynamics, so that product is stored as a single
/// field. The Compton wavelength of the simulated Dirac particle is
/// λ_c = 2·η·Ω̃·Δ/Ω; λ_c/Δ ≪ 1 is the non-relativistic regime, λ_c/Δ ≫ 1
/// the relativistic one.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalParams {
    /// Effective Larmor frequency Ω (rad/time); the simulated rest energy is ħΩ.
    pub omega: f64,
    /// Product η·Ω̃ (rad/time) coupling internal and motional degrees of freedom.
    pub eta_omega_tilde: f64,
    /// Ground-state wavefunction size Δ (length).
    pub delta: f64,
}

impl PhysicalParams {
    pub fn new(omega: f64, eta_omega_tilde: f64, delta: f64) -> Result<Self> {
        let p = Self {
            omega,
            eta_omega_tilde,
            delta,
        };
        p.validate()?;
        Ok(p)
    }

    /// Parameters fixed by the Compton wavelength instead of η·Ω̃.
    pub fn from_lambda_c(omega: f64, lambda_c: f64, delta: f64) -> Result<Self> {
        if !(lambda_c > 0.0) || !lambda_c.is_finite() {
            return Err(Error::InvalidParams(format!(
                "lambda_c must be positive and finite, got {lambda_c}"
            )));
        }
        Self::new(omega, lambda_c * omega / (2.0 * delta), delta)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.omega > 0.0) || !self.omega.is_finite() {
            return Err(Error::InvalidParams(format!(
                "omega must be positive and finite, got {}",
                self.omega
            )));
        }
        if !(self.delta > 0.0) || !self.delta.is_finite() {
            return Err(Error::InvalidParams(format!(
                "delta must be positive and finite, got {}",
                self.delta
            )));
        }
        if self.eta_omega_tilde < 0.0 || !self.eta_omega_tilde.is_finite() {
            return Err(Error::InvalidParams(format!(
                "eta_omega_tilde must be non-negative and finite, got {}",
                self.eta_omega_tilde
            )));
        }
        Ok(())
    }

    /// Compton wavelength λ_c = 2·η·Ω̃·Δ/Ω of the simulated particle.
    pub fn lambda_c(&self) -> f64 {
        2.0 * self.eta_omega_tilde * self.delta / self.omega
    }

    /// Effective light speed c = 2·η·Δ·Ω̃ of the Dirac mapping.
    pub fn light_speed(&self) -> f64 {
        2.0 * self.eta_omega_tilde * self.delta
    }

    /// Continuum-electron parameters under the mapping c := 2ηΔΩ̃, m̄c² := ħΩ.
    pub fn continuum(&self) -> ContinuumParams {
        ContinuumParams {
            mass_energy: self.omega,
            light_speed: self.light_speed(),
        }
    }
}

/// Parameters of the analytic 1+1D continuum Dirac electron, ħ = 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuumParams {
    /// Rest energy m̄c².
    pub mass_energy: f64,
    /// Light speed c.
    pub light_speed: f64,
}

impl ContinuumParams {
    /// Energy branch Ē±(p̄) = ±√((m̄c²)² + (c·p̄)²).
    pub fn energy(&self, p_bar: f64, sign: f64) -> f64 {
        sign.signum() * (self.mass_energy.powi(2) + (self.light_speed * p_bar).powi(2)).sqrt()
    }
}
