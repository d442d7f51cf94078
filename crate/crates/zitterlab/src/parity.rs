//! Parity-sector analysis: projection onto even/odd sectors, the cross-term
//! identity ⟨x⟩ = 2·Re⟨even|x̂|odd⟩, trembling metrics, and the gate-Hamiltonian
//! commutation check.

use crate::error::{Error, Result};
use crate::operators::{
    build_gate_hamiltonian, build_parity, commutator_max_norm, OperatorMatrix,
};
use crate::dynamics::TimeSeries;
use crate::state::QuantumState;
use crate::C64;

/// A state split into its even and odd parity components (unnormalized).
#[derive(Debug, Clone)]
pub struct ParityDecomposition {
    pub even: QuantumState,
    pub odd: QuantumState,
    pub even_weight: f64,
    pub odd_weight: f64,
}

/// Project a state onto the parity sectors with (I ± Π)/2.
///
/// The projectors are built from the exact ±1 diagonal, so Π·even = +even and
/// Π·odd = −odd hold exactly and even + odd reconstructs the input bit for bit.
pub fn parity_project(state: &QuantumState, pi: &OperatorMatrix) -> Result<ParityDecomposition> {
    if pi.dim() != state.dim() {
        return Err(Error::DimensionMismatch {
            state: state.dim(),
            operator: pi.dim(),
        });
    }
    let pi_psi = pi.matrix() * state.amplitudes();
    let half = C64::new(0.5, 0.0);
    let even_amps = (state.amplitudes() + &pi_psi) * half;
    let odd_amps = (state.amplitudes() - &pi_psi) * half;
    let even = QuantumState::new(even_amps, state.cutoff())?;
    let odd = QuantumState::new(odd_amps, state.cutoff())?;
    let even_weight = even.norm_squared();
    let odd_weight = odd.norm_squared();
    Ok(ParityDecomposition {
        even,
        odd,
        even_weight,
        odd_weight,
    })
}

/// The position cross-term 2·Re⟨even|x̂|odd⟩ of a parity decomposition.
///
/// Because Π x̂ Π = −x̂, the diagonal blocks ⟨even|x̂|even⟩ and ⟨odd|x̂|odd⟩
/// vanish identically and the returned value equals the full ⟨x̂⟩. A diagonal
/// block above 1e−10 indicates a broken parity or position operator and is
/// reported as a symmetry violation.
pub fn cross_term_position(decomp: &ParityDecomposition, x_op: &OperatorMatrix) -> Result<f64> {
    let x_odd = x_op.matrix() * decomp.odd.amplitudes();
    let x_even = x_op.matrix() * decomp.even.amplitudes();
    let diag_even = decomp.even.amplitudes().dotc(&x_even).norm();
    let diag_odd = decomp.odd.amplitudes().dotc(&x_odd).norm();
    let worst = diag_even.max(diag_odd);
    if worst > 1e-10 {
        return Err(Error::SymmetryViolation { value: worst });
    }
    Ok(2.0 * decomp.even.amplitudes().dotc(&x_odd).re)
}

/// Trembling metrics of a sampled ⟨x⟩(t) trajectory.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZbMetrics {
    /// max⟨x⟩ − min⟨x⟩ over the window, in units of Δ.
    pub peak_to_peak: f64,
    /// Angular frequency of the strongest nonzero DFT bin (rad/time).
    pub dominant_frequency: f64,
    /// That bin's share of the total AC power, in [0, 1].
    pub frequency_power_fraction: f64,
}

/// Peak-to-peak amplitude and dominant-frequency content of x_mean.
///
/// The mean is removed and a plain rectangular-window DFT is taken; the
/// reported frequency is angular, directly comparable to the interference
/// scale 2|E(p)|/ħ. An identically constant series reports zero for all
/// fields (the frequency is undefined there).
pub fn zb_metrics(series: &TimeSeries) -> Result<ZbMetrics> {
    let n = series.len();
    if n < 64 {
        return Err(Error::TooFewSamples {
            required: 64,
            actual: n,
        });
    }
    let dt = series.dt()?;
    let x = &series.x_mean;
    let max = x.iter().copied().fold(f64::MIN, f64::max);
    let min = x.iter().copied().fold(f64::MAX, f64::min);
    let peak_to_peak = max - min;
    let mean = x.iter().sum::<f64>() / n as f64;

    let mut total_ac = 0.0;
    let mut best_power = 0.0;
    let mut best_bin = 0usize;
    for k in 1..=n / 2 {
        let mut re = 0.0;
        let mut im = 0.0;
        let w = -2.0 * std::f64::consts::PI * k as f64 / n as f64;
        for (j, &xj) in x.iter().enumerate() {
            let (s, c) = (w * j as f64).sin_cos();
            let v = xj - mean;
            re += v * c;
            im += v * s;
        }
        let p = re * re + im * im;
        total_ac += p;
        if p > best_power {
            best_power = p;
            best_bin = k;
        }
    }
    // roundoff floor: a series that is constant up to float dust has no
    // meaningful dominant frequency
    let scale = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    let floor = (1e-13 * (1.0 + scale)).powi(2) * n as f64;
    if total_ac <= floor || best_bin == 0 {
        return Ok(ZbMetrics {
            peak_to_peak,
            dominant_frequency: 0.0,
            frequency_power_fraction: 0.0,
        });
    }
    Ok(ZbMetrics {
        peak_to_peak,
        dominant_frequency: 2.0 * std::f64::consts::PI * best_bin as f64 / (n as f64 * dt),
        frequency_power_fraction: best_power / total_ac,
    })
}

/// ‖[H_r, Π]‖_max for the gate Hamiltonian H_r = σ₊a + σ₋a⁺.
///
/// H_r moves (n, −) ↔ (n−1, +), which carries the same parity grading, so the
/// commutator vanishes identically at every cutoff.
pub fn verify_gate_commutation(n_cut: usize) -> Result<f64> {
    if n_cut < 2 {
        return Err(Error::InvalidConfig(format!(
            "gate commutation check needs N_cut ≥ 2, got {n_cut}"
        )));
    }
    let hr = build_gate_hamiltonian(n_cut)?;
    let pi = build_parity(n_cut)?;
    Ok(commutator_max_norm(&hr, &pi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{evolve, SimulationConfig, run_simulation, InitialState};
    use crate::operators::{build_hamiltonian, build_position, build_sigma_x};
    use crate::params::PhysicalParams;
    use crate::spectral::{
        diagonalize, parity_coeigenstate, EnergySign, ParitySector,
    };
    use crate::CMatrix;
    use std::f64::consts::FRAC_PI_4;

    fn params() -> PhysicalParams {
        PhysicalParams::new(1.0, 0.3, 1.0).unwrap()
    }

    #[test]
    fn projection_reconstructs_and_weights_sum() {
        let n = 16;
        let pi = build_parity(n).unwrap();
        let mut psi = QuantumState::zero(n);
        for (i, z) in psi.amplitudes_mut().iter_mut().enumerate() {
            *z = C64::new(1.0 / (1.0 + i as f64), 0.3 / (2.0 + i as f64));
        }
        psi.normalize(1e-12).unwrap();
        let d = parity_project(&psi, &pi).unwrap();
        let recon = d.even.amplitudes() + d.odd.amplitudes();
        let dev = (recon - psi.amplitudes()).norm();
        assert!(dev < 1e-15);
        assert!((d.even_weight + d.odd_weight - 1.0).abs() < 1e-12);
        // exact sector membership
        let pe = pi.matrix() * d.even.amplitudes();
        assert_eq!((pe - d.even.amplitudes()).norm(), 0.0);
        let po = pi.matrix() * d.odd.amplitudes();
        assert_eq!((po + d.odd.amplitudes()).norm(), 0.0);
    }

    #[test]
    fn beta_family_splits_by_spin() {
        let n = 8;
        let pi = build_parity(n).unwrap();
        let beta = 0.7f64;
        let psi = QuantumState::beta_spin_ground(beta, n).unwrap();
        let d = parity_project(&psi, &pi).unwrap();
        assert!((d.even_weight - beta.cos().powi(2)).abs() < 1e-15);
        assert!((d.odd_weight - beta.sin().powi(2)).abs() < 1e-15);
        // even part is cos β|+⟩|0⟩
        assert_eq!(d.even.amplitudes()[0], C64::new(beta.cos(), 0.0));
        assert_eq!(d.odd.amplitudes()[n], C64::new(beta.sin(), 0.0));

        let most_mixed = QuantumState::beta_spin_ground(FRAC_PI_4, n).unwrap();
        let m = parity_project(&most_mixed, &pi).unwrap();
        assert!((m.even_weight - 0.5).abs() < 1e-15);
        assert!((m.odd_weight - 0.5).abs() < 1e-15);
    }

    #[test]
    fn coeigenstate_is_pure_sector() {
        let n = 64;
        let pi = build_parity(n).unwrap();
        let psi =
            parity_coeigenstate(EnergySign::Positive, ParitySector::Odd, 1.0, &params(), n)
                .unwrap();
        let d = parity_project(&psi, &pi).unwrap();
        assert!(d.even_weight <= 1e-12, "even weight {}", d.even_weight);
    }

    #[test]
    fn sector_weights_are_conserved() {
        let n = 32;
        let h = build_hamiltonian(&params(), n).unwrap();
        let pi = build_parity(n).unwrap();
        let spec = diagonalize(&h, &pi).unwrap();
        let psi0 = QuantumState::beta_spin_ground(0.5, n).unwrap();
        let w0 = parity_project(&psi0, &pi).unwrap().even_weight;
        for &t in &[0.7, 5.0, 18.0] {
            let psi = evolve(&psi0, &spec, t).unwrap();
            let w = parity_project(&psi, &pi).unwrap().even_weight;
            assert!((w - w0).abs() <= 1e-10);
        }
    }

    #[test]
    fn cross_term_reproduces_full_position_mean() {
        let n = 64;
        let p = params();
        let h = build_hamiltonian(&p, n).unwrap();
        let pi = build_parity(n).unwrap();
        let x = build_position(&p, n).unwrap();
        let spec = diagonalize(&h, &pi).unwrap();
        let psi0 = QuantumState::beta_spin_ground(FRAC_PI_4, n).unwrap();

        // pure even input
        let even_only = QuantumState::beta_spin_ground(0.0, n).unwrap();
        let d = parity_project(&even_only, &pi).unwrap();
        assert_eq!(cross_term_position(&d, &x).unwrap(), 0.0);

        // t = 0: x̂ connects |0⟩ only to |1⟩, absent from the state
        let d0 = parity_project(&psi0, &pi).unwrap();
        assert_eq!(cross_term_position(&d0, &x).unwrap(), 0.0);

        // evolved: cross term equals the full expectation
        let psi = evolve(&psi0, &spec, 1.5).unwrap();
        let d = parity_project(&psi, &pi).unwrap();
        let cross = cross_term_position(&d, &x).unwrap();
        let full = psi.real_expectation(&x).unwrap();
        assert!(
            (cross - full).abs() < 1e-12,
            "cross {cross} vs full {full}"
        );
    }

    #[test]
    fn corrupted_parity_is_reported() {
        // flip one diagonal sign of Π: the "even" projector now straddles the
        // grading and the diagonal block of x̂ becomes O(1)
        let n = 8;
        let p = params();
        let x = build_position(&p, n).unwrap();
        let good = build_parity(n).unwrap();
        let mut bad = good.matrix().clone();
        bad[(1, 1)] = -bad[(1, 1)];
        let bad = OperatorMatrix::new(bad, true).unwrap();
        let mut psi = QuantumState::zero(n);
        psi.amplitudes_mut()[0] = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        psi.amplitudes_mut()[1] = C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let d = parity_project(&psi, &bad).unwrap();
        assert!(matches!(
            cross_term_position(&d, &x),
            Err(Error::SymmetryViolation { .. })
        ));
        // with the correct operator the same state is fine
        let d = parity_project(&psi, &good).unwrap();
        let v = cross_term_position(&d, &x).unwrap();
        assert!((v - 1.0).abs() < 1e-12);
    }

    #[test]
    fn metrics_on_constant_series_are_zero() {
        let n = 128;
        let series = TimeSeries {
            times: (0..n).map(|k| k as f64 * 0.1).collect(),
            x_mean: vec![0.7; n],
            sigma_x_mean: vec![0.0; n],
            p_mean: vec![0.0; n],
            parity_mean: vec![1.0; n],
            norm_error: vec![0.0; n],
        };
        let m = zb_metrics(&series).unwrap();
        assert_eq!(m.peak_to_peak, 0.0);
        assert_eq!(m.dominant_frequency, 0.0);
        assert_eq!(m.frequency_power_fraction, 0.0);
    }

    #[test]
    fn metrics_require_enough_samples() {
        let series = TimeSeries {
            times: (0..10).map(|k| k as f64).collect(),
            x_mean: vec![0.0; 10],
            sigma_x_mean: vec![0.0; 10],
            p_mean: vec![0.0; 10],
            parity_mean: vec![0.0; 10],
            norm_error: vec![0.0; 10],
        };
        assert!(matches!(
            zb_metrics(&series),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn two_level_beat_frequency() {
        // superpose two opposite-parity eigenvectors: ⟨x⟩ beats at |λ_k − λ_j|
        let n = 32;
        let h = build_hamiltonian(&params(), n).unwrap();
        let pi = build_parity(n).unwrap();
        let spec = diagonalize(&h, &pi).unwrap();
        let k1 = (0..spec.dim())
            .find(|&k| spec.parity_labels()[k] > 0.0 && spec.eigenvalues()[k] > 0.0)
            .unwrap();
        let k2 = (0..spec.dim())
            .find(|&k| {
                spec.parity_labels()[k] < 0.0
                    && spec.eigenvalues()[k] > spec.eigenvalues()[k1] + 0.3
            })
            .unwrap();
        let amps = (spec.eigenvectors().column(k1) + spec.eigenvectors().column(k2))
            * C64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let psi0 = QuantumState::new(amps.into_owned(), n).unwrap();
        let mut cfg = SimulationConfig::beta_family(params(), 0.0);
        cfg.n_cut = n;
        cfg.t_max = 30.0;
        cfg.n_samples = 1501;
        cfg.convergence = None;
        cfg.initial = InitialState::Explicit(psi0.amplitudes().clone());
        let out = run_simulation(&cfg).unwrap();
        let m = zb_metrics(&out.series).unwrap();
        let expected = (spec.eigenvalues()[k2] - spec.eigenvalues()[k1]).abs();
        let bin = 2.0 * std::f64::consts::PI / (1501.0 * out.series.dt().unwrap());
        assert!(
            (m.dominant_frequency - expected).abs() <= bin,
            "beat {} vs |Δλ| {expected} (bin {bin})",
            m.dominant_frequency
        );
    }

    #[test]
    fn gate_hamiltonian_commutes_exactly() {
        assert_eq!(verify_gate_commutation(2).unwrap(), 0.0);
        assert_eq!(verify_gate_commutation(128).unwrap(), 0.0);
        assert!(verify_gate_commutation(1).is_err());
        // discrimination control: σ̂ₓ does not commute with Π
        let n = 16;
        let sx = build_sigma_x(n).unwrap();
        let pi = build_parity(n).unwrap();
        assert!(commutator_max_norm(&sx, &pi) > 1.0);
    }

    #[test]
    fn projector_algebra_is_exact() {
        let n = 6;
        let pi = build_parity(n).unwrap();
        let dim = 2 * n;
        let eye = CMatrix::identity(dim, dim);
        let half = C64::new(0.5, 0.0);
        let p_even = (&eye + pi.matrix()) * half;
        let p_odd = (&eye - pi.matrix()) * half;
        let max = |m: &CMatrix| m.iter().map(|z| z.norm()).fold(0.0, f64::max);
        assert_eq!(max(&(&p_even * &p_even - &p_even)), 0.0);
        assert_eq!(max(&(&p_odd * &p_odd - &p_odd)), 0.0);
        assert_eq!(max(&(&p_even * &p_odd)), 0.0);
        assert_eq!(max(&(&p_even + &p_odd - eye)), 0.0);
    }
}
