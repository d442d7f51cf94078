//! Analytic continuum 1+1D Dirac reference.
//!
//! The ion problem maps onto a free Dirac electron through c := 2ηΔΩ̃ and
//! m̄c² := ħΩ; in the dimensionless momentum label p (physical momentum
//! ħp/(2Δ)) the per-momentum Hamiltonian of both systems is the same 2×2
//! matrix, and the motional ground state |0⟩ becomes a Gaussian packet with
//! density e^{−p²/2}/√(2π). This module evaluates ⟨x̄(t)⟩ for such packets by
//! momentum quadrature, fully independent of the Fock-space machinery, and
//! provides the plane-wave spinors and the space-inversion operation.

use crate::error::{Error, Result};
use crate::params::{ContinuumParams, PhysicalParams};
use crate::spectral::EnergySign;
use crate::C64;

/// Normalized spinor part of the plane-wave eigenfunction φ_{Ē±}(p̄) and its
/// energy Ē± = ±√((m̄c²)² + (cp̄)²).
pub fn continuum_spinor(p_bar: f64, sign: EnergySign, params: &ContinuumParams) -> ([f64; 2], f64) {
    let mc2 = params.mass_energy;
    let cp = params.light_speed * p_bar;
    let e_abs = (mc2 * mc2 + cp * cp).sqrt();
    let norm = ((e_abs + mc2) / (2.0 * e_abs)).sqrt();
    let ratio = cp / (e_abs + mc2);
    match sign {
        EnergySign::Positive => ([norm, norm * ratio], e_abs),
        EnergySign::Negative => ([-norm * ratio, norm], -e_abs),
    }
}

/// A two-component wavefunction sampled on a spatial grid.
#[derive(Debug, Clone, PartialEq)]
pub struct SpatialWavefunction {
    /// Sample positions, ascending and symmetric about 0.
    pub x: Vec<f64>,
    pub upper: Vec<C64>,
    pub lower: Vec<C64>,
}

impl SpatialWavefunction {
    /// Sampled plane wave φ_{Ē±}(p̄; x̄, t) = spinor·e^{i(p̄x̄ − Ē±t)/ħ}.
    pub fn plane_wave(
        p_bar: f64,
        sign: EnergySign,
        params: &ContinuumParams,
        x: &[f64],
        t: f64,
    ) -> Self {
        let (s, e) = continuum_spinor(p_bar, sign, params);
        let mut upper = Vec::with_capacity(x.len());
        let mut lower = Vec::with_capacity(x.len());
        for &xi in x {
            let phase = p_bar * xi - e * t;
            let z = C64::new(phase.cos(), phase.sin());
            upper.push(z * s[0]);
            lower.push(z * s[1]);
        }
        SpatialWavefunction {
            x: x.to_vec(),
            upper,
            lower,
        }
    }

    fn check_symmetric(&self) -> Result<()> {
        let n = self.x.len();
        let scale = self.x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
        let mut worst = 0.0f64;
        for i in 0..n {
            worst = worst.max((self.x[i] + self.x[n - 1 - i]).abs());
        }
        if worst > 1e-12 * scale.max(1.0) {
            return Err(Error::AsymmetricGrid(worst));
        }
        Ok(())
    }
}

/// Space inversion P̂φ(x̄) = σ̂_z·φ(−x̄) on a symmetric grid.
pub fn apply_space_inversion(wf: &SpatialWavefunction) -> Result<SpatialWavefunction> {
    wf.check_symmetric()?;
    let n = wf.x.len();
    let mut upper = vec![C64::new(0.0, 0.0); n];
    let mut lower = vec![C64::new(0.0, 0.0); n];
    for i in 0..n {
        upper[i] = wf.upper[n - 1 - i];
        lower[i] = -wf.lower[n - 1 - i];
    }
    Ok(SpatialWavefunction {
        x: wf.x.clone(),
        upper,
        lower,
    })
}

/// Continuum image of the ion's initial family: internal spinor
/// cos β|+⟩ + sin β|−⟩ carried by the Gaussian momentum density e^{−p²/2}/√(2π)
/// of the motional ground state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WavepacketSpec {
    pub beta: f64,
}

/// Ground-state momentum density e^{−p²/2}/√(2π) in the dimensionless label.
pub fn ground_momentum_density(p: f64) -> f64 {
    (-0.5 * p * p).exp() / (2.0 * std::f64::consts::PI).sqrt()
}

/// Quadrature controls for [`oracle_mean_position`].
#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    /// Accept once grid refinement changes no sample by more than this.
    pub tolerance: f64,
    /// Starting point count (kept odd so the grid stays symmetric).
    pub initial_points: usize,
    /// Starting integration half-width in dimensionless p.
    pub initial_half_width: f64,
    /// Refinement stops with an error beyond this many points.
    pub max_points: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            tolerance: 1e-8,
            initial_points: 401,
            initial_half_width: 6.0,
            max_points: 6_000_000,
        }
    }
}

/// Per-grid reduced quadrature data: ⟨x̄(t)⟩ = drift_sum·t + Σ_i zb[i]·sin(freq[i]·t).
struct ReducedIntegrand {
    drift_sum: f64,
    zb: Vec<f64>,
    freq: Vec<f64>,
    /// FD-realized total-derivative term ∫2(AA′+BB′)dp; the imaginary residue
    /// of ⟨x̄⟩, must sit at roundoff.
    imag_residue: f64,
}

fn reduce_grid(beta: f64, params: &PhysicalParams, half_width: f64, n: usize) -> ReducedIntegrand {
    let cont = params.continuum();
    let g_coupling = params.eta_omega_tilde; // c·p̄ = (ηΩ̃)·p in the dimensionless label
    let h = 2.0 * half_width / (n - 1) as f64;
    let (cb, sb) = (beta.cos(), beta.sin());

    let p_at = |i: usize| -half_width + h * i as f64;
    // sampled amplitude fields
    let mut e = vec![0.0; n];
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    let mut phi_minus = vec![[0.0f64; 2]; n];
    let mut phi_plus = vec![[0.0f64; 2]; n];
    for i in 0..n {
        let p = p_at(i);
        let p_bar = 0.5 * p / params.delta; // physical momentum ħp/(2Δ), ħ = 1
        let (sp, ep) = continuum_spinor(p_bar, EnergySign::Positive, &cont);
        let (sm, _) = continuum_spinor(p_bar, EnergySign::Negative, &cont);
        debug_assert!((ep - (params.omega.hypot(g_coupling * p))).abs() < 1e-12 * ep.abs());
        let gauss = (2.0 * std::f64::consts::PI).powf(-0.25) * (-p * p / 4.0).exp();
        e[i] = ep;
        a[i] = (cb * sp[0] + sb * sp[1]) * gauss;
        b[i] = (cb * sm[0] + sb * sm[1]) * gauss;
        phi_plus[i] = sp;
        phi_minus[i] = sm;
    }

    // centered finite differences on the sampled fields, boundary rows dropped
    let mut drift_sum = 0.0;
    let mut zb = vec![0.0; n];
    let freq: Vec<f64> = e.iter().map(|&ei| 2.0 * ei).collect();
    let mut imag_residue = 0.0;
    for i in 1..n - 1 {
        let e_prime = (e[i + 1] - e[i - 1]) / (2.0 * h);
        let d = (phi_plus[i][0] * (phi_minus[i + 1][0] - phi_minus[i - 1][0])
            + phi_plus[i][1] * (phi_minus[i + 1][1] - phi_minus[i - 1][1]))
            / (2.0 * h);
        let a_prime = (a[i + 1] - a[i - 1]) / (2.0 * h);
        let b_prime = (b[i + 1] - b[i - 1]) / (2.0 * h);
        // interior trapezoid weight is h; the dropped boundary rows carry
        // Gaussian-suppressed weight and are checked by domain extension
        drift_sum += 2.0 * e_prime * (a[i] * a[i] - b[i] * b[i]) * h;
        zb[i] = -4.0 * a[i] * b[i] * d * h;
        imag_residue += 2.0 * (a[i] * a_prime + b[i] * b_prime) * h;
    }
    // output is in physical length units (Δ·dimensionless result)
    let delta = params.delta;
    ReducedIntegrand {
        drift_sum: drift_sum * delta,
        zb: zb.iter().map(|v| v * delta).collect(),
        freq,
        imag_residue: imag_residue * delta,
    }
}

fn evaluate(red: &ReducedIntegrand, t_grid: &[f64]) -> Vec<f64> {
    t_grid
        .iter()
        .map(|&t| {
            let mut s = red.drift_sum * t;
            for (zb, fr) in red.zb.iter().zip(red.freq.iter()) {
                if *zb != 0.0 {
                    s += zb * (fr * t).sin();
                }
            }
            s
        })
        .collect()
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Mean position ⟨x̄(t)⟩ of the continuum wavepacket, by trapezoidal momentum
/// quadrature with centered finite differences on the sampled amplitudes.
///
/// For each momentum the initial spinor is decomposed into φ_{Ē±}, the two
/// branches evolve with phases e^{∓i|Ē|t/ħ}, and i·d/dp acting on the sampled
/// fields yields a group-velocity term linear in t plus the interference term
/// oscillating at 2|Ē(p)|/ħ. The grid is refined (and the domain widened)
/// until another refinement moves no sample by more than the tolerance;
/// failure to converge within the point budget is an error.
pub fn oracle_mean_position(
    spec: &WavepacketSpec,
    params: &PhysicalParams,
    t_grid: &[f64],
) -> Result<Vec<f64>> {
    oracle_mean_position_with(spec, params, t_grid, &OracleOptions::default())
}

/// [`oracle_mean_position`] with explicit quadrature controls.
pub fn oracle_mean_position_with(
    spec: &WavepacketSpec,
    params: &PhysicalParams,
    t_grid: &[f64],
    opts: &OracleOptions,
) -> Result<Vec<f64>> {
    params.validate()?;
    if t_grid.is_empty() {
        return Ok(Vec::new());
    }
    let mut half_width = opts.initial_half_width;
    let mut n = opts.initial_points.max(5) | 1; // odd keeps the grid symmetric

    let mut red = reduce_grid(spec.beta, params, half_width, n);
    let mut series = evaluate(&red, t_grid);
    loop {
        // refine the spacing
        let n_fine = 2 * n - 1;
        if n_fine > opts.max_points {
            return Err(Error::QuadratureNonConvergence {
                change: f64::NAN,
                tolerance: opts.tolerance,
                points: n,
            });
        }
        let red_fine = reduce_grid(spec.beta, params, half_width, n_fine);
        let series_fine = evaluate(&red_fine, t_grid);
        let change = max_abs_diff(&series, &series_fine);
        n = n_fine;
        red = red_fine;
        series = series_fine;
        if change > opts.tolerance {
            continue;
        }
        // spacing converged; verify the domain is wide enough at matching density
        let wide_half = half_width + 2.0;
        let current_density = (n - 1) as f64 / (2.0 * half_width);
        let n_wide = ((2.0 * wide_half * current_density).round() as usize).max(n) | 1;
        if n_wide > opts.max_points {
            return Err(Error::QuadratureNonConvergence {
                change,
                tolerance: opts.tolerance,
                points: n,
            });
        }
        let red_wide = reduce_grid(spec.beta, params, wide_half, n_wide);
        let series_wide = evaluate(&red_wide, t_grid);
        let domain_change = max_abs_diff(&series, &series_wide);
        if domain_change <= opts.tolerance {
            debug_assert!(
                red.imag_residue.abs() <= 1e-10,
                "imaginary residue {} above roundoff",
                red.imag_residue
            );
            return Ok(series);
        }
        half_width = wide_half;
        n = n_wide;
        series = series_wide;
    }
}
