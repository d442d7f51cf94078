//! Exact time evolution by spectral decomposition and observable sampling.
//!
//! One diagonalization is amortized over all time samples, so the propagator
//! is exactly unitary up to roundoff and stationary states stay stationary.

use crate::error::{Error, Result};
use crate::operators::{build_hamiltonian, build_parity};
use crate::params::PhysicalParams;
use crate::spectral::{diagonalize, parity_coeigenstate, EnergySign, ParitySector, SpectrumResult};
use crate::state::{BasisIndex, QuantumState};
use crate::{C64, CVector};

/// How the initial state of a run is specified.
#[derive(Debug, Clone)]
pub enum InitialState {
    /// (cos β|+⟩ + sin β|−⟩)⊗|0⟩ with β taken from the config.
    BetaSpinGround,
    /// Explicit amplitude vector over the flattened basis at the config cutoff.
    Explicit(CVector),
    /// A simultaneous parity–energy eigenstate.
    ParityCoeigenstate {
        sign: EnergySign,
        sector: ParitySector,
        p: f64,
    },
}

/// Doubled-cutoff convergence control for [`run_simulation`].
#[derive(Debug, Clone, Copy)]
pub struct ConvergenceCheck {
    /// Cutoff multiplier for the verification rerun.
    pub factor: usize,
    /// Largest tolerated |x_mean − x_mean_refined| over the time grid.
    pub tolerance: f64,
}

impl ConvergenceCheck {
    /// Regime-appropriate tolerance: the relativistic regime populates higher
    /// Fock states and converges more slowly.
    pub fn for_params(params: &PhysicalParams) -> Self {
        let tolerance = if params.lambda_c() / params.delta <= 1.0 {
            1e-8
        } else {
            1e-6
        };
        ConvergenceCheck {
            factor: 2,
            tolerance,
        }
    }
}

/// Full description of one simulation run.
#[derive(Debug, Clone)]
pub struct SimulationConfig {
    pub params: PhysicalParams,
    /// Initial spin mixing angle, used by [`InitialState::BetaSpinGround`].
    pub beta: f64,
    pub initial: InitialState,
    pub n_cut: usize,
    /// End of the sampled window, in units of 1/Ω.
    pub t_max: f64,
    pub n_samples: usize,
    pub convergence: Option<ConvergenceCheck>,
}

impl SimulationConfig {
    /// Canonical β-family run with defaults: N_cut = 128, t ∈ [0, 20/Ω],
    /// 2001 samples, convergence check on.
    pub fn beta_family(params: PhysicalParams, beta: f64) -> Self {
        SimulationConfig {
            params,
            beta,
            initial: InitialState::BetaSpinGround,
            n_cut: 128,
            t_max: 20.0,
            n_samples: 2001,
            convergence: Some(ConvergenceCheck::for_params(&params)),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.params.validate()?;
        if self.n_cut == 0 {
            return Err(Error::InvalidCutoff);
        }
        if !(self.t_max > 0.0) || !self.t_max.is_finite() {
            return Err(Error::InvalidConfig(format!(
                "t_max must be positive and finite, got {}",
                self.t_max
            )));
        }
        if self.n_samples < 2 {
            return Err(Error::InvalidConfig(format!(
                "n_samples must be at least 2, got {}",
                self.n_samples
            )));
        }
        if matches!(self.initial, InitialState::BetaSpinGround)
            && !(0.0..=std::f64::consts::FRAC_PI_2 + 1e-12).contains(&self.beta)
        {
            return Err(Error::InvalidConfig(format!(
                "beta must lie in [0, π/2] for the canonical family, got {}",
                self.beta
            )));
        }
        if let Some(c) = &self.convergence {
            if c.factor < 2 {
                return Err(Error::InvalidConfig(
                    "convergence factor must be at least 2".into(),
                ));
            }
            if !(c.tolerance > 0.0) {
                return Err(Error::InvalidConfig(
                    "convergence tolerance must be positive".into(),
                ));
            }
        }
        Ok(())
    }

    fn build_initial(&self, n_cut: usize) -> Result<QuantumState> {
        let mut state = match &self.initial {
            InitialState::BetaSpinGround => QuantumState::beta_spin_ground(self.beta, n_cut)?,
            InitialState::Explicit(amps) => {
                let base = QuantumState::new(amps.clone(), amps.len() / 2)?;
                embed(&base, n_cut)?
            }
            InitialState::ParityCoeigenstate { sign, sector, p } => {
                parity_coeigenstate(*sign, *sector, *p, &self.params, n_cut)?
            }
        };
        state.normalize(1e-12)?;
        Ok(state)
    }
}

/// Re-express a state at a larger cutoff (spin-major blocks are remapped, new
/// Fock levels are zero).
pub fn embed(state: &QuantumState, n_cut: usize) -> Result<QuantumState> {
    let old = state.cutoff();
    if n_cut < old {
        return Err(Error::InvalidConfig(format!(
            "cannot embed a cutoff-{old} state into smaller cutoff {n_cut}"
        )));
    }
    let mut out = QuantumState::zero(n_cut);
    for i in 0..state.dim() {
        let b = BasisIndex::from_flat(i, old);
        out.amplitudes_mut()[b.flatten(n_cut)] = state.amplitudes()[i];
    }
    Ok(out)
}

/// Observables sampled on a uniform time grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeSeries {
    pub times: Vec<f64>,
    /// ⟨x̂⟩ in units of Δ·(Δ=1 internally).
    pub x_mean: Vec<f64>,
    pub sigma_x_mean: Vec<f64>,
    pub p_mean: Vec<f64>,
    pub parity_mean: Vec<f64>,
    /// |‖ψ(t)‖ − 1| per sample.
    pub norm_error: Vec<f64>,
}

impl TimeSeries {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Uniform sample spacing; errors if the grid is not uniform.
    pub fn dt(&self) -> Result<f64> {
        if self.times.len() < 2 {
            return Err(Error::TooFewSamples {
                required: 2,
                actual: self.times.len(),
            });
        }
        let dt = self.times[1] - self.times[0];
        let mut worst = 0.0f64;
        for k in 1..self.times.len() {
            worst = worst.max(((self.times[k] - self.times[k - 1]) - dt).abs());
        }
        if worst > 1e-9 * dt.abs().max(f64::MIN_POSITIVE) {
            return Err(Error::NonUniformGrid(worst));
        }
        Ok(dt)
    }
}

/// Result of [`run_simulation`]: the sampled series plus run diagnostics.
#[derive(Debug, Clone)]
pub struct SimulationOutput {
    pub series: TimeSeries,
    /// Cutoff the reported series was computed at.
    pub n_cut: usize,
    /// Max |x_mean − x_mean_refined| when the convergence check ran.
    pub convergence_deviation: Option<f64>,
    /// Largest top-four-Fock-level weight seen along the trajectory.
    pub max_tail_mass: f64,
}

/// Evolve a state to time `t`: ψ(t) = Σ_k ⟨v_k|ψ⟩ e^{−iλ_k t} v_k.
pub fn evolve(state: &QuantumState, spectrum: &SpectrumResult, t: f64) -> Result<QuantumState> {
    let coeffs = spectrum.coefficients(state)?;
    let phased = apply_phases(&coeffs, spectrum.eigenvalues(), t);
    let amps = spectrum.eigenvectors() * phased;
    QuantumState::new(amps, state.cutoff())
}

fn apply_phases(coeffs: &CVector, eigenvalues: &[f64], t: f64) -> CVector {
    let mut out = coeffs.clone();
    for (k, c) in out.iter_mut().enumerate() {
        let phase = -eigenvalues[k] * t;
        *c *= C64::new(phase.cos(), phase.sin());
    }
    out
}

/// Structured expectation values of the standard observables, avoiding dense
/// matrix products in the sampling loop. Cross-checked against the dense
/// operators in the test suite.
fn sample_observables(amps: &CVector, n_cut: usize, delta: f64) -> [f64; 5] {
    let mut a_expect = C64::new(0.0, 0.0); // ⟨a⟩
    let mut sigma_x = 0.0;
    let mut parity = 0.0;
    let mut norm_sq = 0.0;
    for block in 0..2usize {
        let base = block * n_cut;
        for n in 0..n_cut {
            let amp = amps[base + n];
            norm_sq += amp.norm_sqr();
            let sign = if (n % 2 == 0) == (block == 0) { 1.0 } else { -1.0 };
            parity += sign * amp.norm_sqr();
            if n + 1 < n_cut {
                a_expect += amp.conj() * amps[base + n + 1] * ((n + 1) as f64).sqrt();
            }
        }
    }
    for n in 0..n_cut {
        sigma_x += 2.0 * (amps[n].conj() * amps[n_cut + n]).re;
    }
    let x = 2.0 * delta * a_expect.re;
    let p = a_expect.im / delta;
    [x, sigma_x, p, parity, (norm_sq.sqrt() - 1.0).abs()]
}

fn single_run(cfg: &SimulationConfig, n_cut: usize) -> Result<(TimeSeries, f64)> {
    let h = build_hamiltonian(&cfg.params, n_cut)?;
    let pi = build_parity(n_cut)?;
    let spectrum = diagonalize(&h, &pi)?;
    let initial = cfg.build_initial(n_cut)?;
    let coeffs = spectrum.coefficients(&initial)?;

    let n = cfg.n_samples;
    let mut series = TimeSeries {
        times: Vec::with_capacity(n),
        x_mean: Vec::with_capacity(n),
        sigma_x_mean: Vec::with_capacity(n),
        p_mean: Vec::with_capacity(n),
        parity_mean: Vec::with_capacity(n),
        norm_error: Vec::with_capacity(n),
    };
    let mut max_tail = 0.0f64;
    for k in 0..n {
        let t = cfg.t_max * k as f64 / (n - 1) as f64;
        let phased = apply_phases(&coeffs, spectrum.eigenvalues(), t);
        let amps = spectrum.eigenvectors() * phased;
        let [x, sx, p, pi_mean, norm_err] = sample_observables(&amps, n_cut, cfg.params.delta);
        let mut tail = 0.0;
        let lo = n_cut.saturating_sub(4);
        for block in 0..2usize {
            for m in lo..n_cut {
                tail += amps[block * n_cut + m].norm_sqr();
            }
        }
        max_tail = max_tail.max(tail);
        series.times.push(t);
        series.x_mean.push(x);
        series.sigma_x_mean.push(sx);
        series.p_mean.push(p);
        series.parity_mean.push(pi_mean);
        series.norm_error.push(norm_err);
    }
    Ok((series, max_tail))
}

/// Run a full simulation: sample all observables on the uniform grid and, if
/// requested, verify cutoff convergence by rerunning at `factor · n_cut` and
/// comparing x_mean.
pub fn run_simulation(cfg: &SimulationConfig) -> Result<SimulationOutput> {
    cfg.validate()?;
    let (series, max_tail) = single_run(cfg, cfg.n_cut)?;
    let mut deviation = None;
    if let Some(check) = &cfg.convergence {
        let refined_cut = cfg.n_cut * check.factor;
        let (refined, _) = single_run(cfg, refined_cut)?;
        let profile: Vec<f64> = series
            .x_mean
            .iter()
            .zip(refined.x_mean.iter())
            .map(|(a, b)| (a - b).abs())
            .collect();
        let dev = profile.iter().copied().fold(0.0, f64::max);
        if dev > check.tolerance {
            return Err(Error::ConvergenceFailure {
                n_cut: cfg.n_cut,
                n_cut_doubled: refined_cut,
                deviation: dev,
                tolerance: check.tolerance,
                profile,
            });
        }
        deviation = Some(dev);
    }
    Ok(SimulationOutput {
        series,
        n_cut: cfg.n_cut,
        convergence_deviation: deviation,
        max_tail_mass: max_tail,
    })
}

/// Largest deviation between the centered-difference velocity d⟨x⟩/dt and the
/// Dirac-mapping prediction 2ηΔΩ̃·⟨σ̂ₓ⟩(t), endpoints dropped.
///
/// The residual is pure finite-difference truncation error and shrinks as
/// O(dt²).
pub fn velocity_consistency(series: &TimeSeries, params: &PhysicalParams) -> Result<f64> {
    if series.len() < 5 {
        return Err(Error::TooFewSamples {
            required: 5,
            actual: series.len(),
        });
    }
    let dt = series.dt()?;
    let c = 2.0 * params.eta_omega_tilde * params.delta;
    let mut worst = 0.0f64;
    for k in 1..series.len() - 1 {
        let fd = (series.x_mean[k + 1] - series.x_mean[k - 1]) / (2.0 * dt);
        worst = worst.max((fd - c * series.sigma_x_mean[k]).abs());
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::operators::{build_hamiltonian, build_parity, build_position};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn params() -> PhysicalParams {
        PhysicalParams::new(1.0, 0.3, 1.0).unwrap()
    }

    fn spectrum(n: usize) -> SpectrumResult {
        let h = build_hamiltonian(&params(), n).unwrap();
        let pi = build_parity(n).unwrap();
        diagonalize(&h, &pi).unwrap()
    }

    #[test]
    fn evolve_at_zero_is_identity() {
        let n = 16;
        let s = spectrum(n);
        let psi = QuantumState::beta_spin_ground(0.7, n).unwrap();
        let out = evolve(&psi, &s, 0.0).unwrap();
        let dev = (out.amplitudes() - psi.amplitudes()).norm();
        assert!(dev < 1e-13, "t=0 deviation {dev}");
    }

    #[test]
    fn evolution_is_unitary_and_reversible() {
        let n = 32;
        let s = spectrum(n);
        let psi = QuantumState::beta_spin_ground(FRAC_PI_4, n).unwrap();
        let fwd = evolve(&psi, &s, 37.5).unwrap();
        assert!((fwd.norm() - 1.0).abs() < 1e-12);
        let back = evolve(&fwd, &s, -37.5).unwrap();
        let dev = (back.amplitudes() - psi.amplitudes()).norm();
        assert!(dev < 1e-10, "time-reversal defect {dev}");
    }

    #[test]
    fn eigenvectors_are_stationary() {
        let n = 24;
        let s = spectrum(n);
        let k = 7;
        let v = s.eigenstate(k, n);
        let x = build_position(&params(), n).unwrap();
        let x0 = v.real_expectation(&x).unwrap();
        for &t in &[0.3, 2.0, 11.7] {
            let vt = evolve(&v, &s, t).unwrap();
            // phase factor only
            let overlap = v.inner(&vt).norm();
            assert!((overlap - 1.0).abs() < 1e-12);
            let xt = vt.real_expectation(&x).unwrap();
            assert!((xt - x0).abs() < 1e-12);
        }
    }

    #[test]
    fn structured_observables_match_dense_operators() {
        let n = 12;
        let p = PhysicalParams::new(1.3, 0.4, 0.7).unwrap();
        let h = build_hamiltonian(&p, n).unwrap();
        let pi = build_parity(n).unwrap();
        let spec = diagonalize(&h, &pi).unwrap();
        let x_op = build_position(&p, n).unwrap();
        let p_op = crate::operators::build_momentum(&p, n).unwrap();
        let sx_op = crate::operators::build_sigma_x(n).unwrap();
        let psi0 = QuantumState::beta_spin_ground(0.6, n).unwrap();
        for &t in &[0.0, 0.9, 3.3] {
            let psi = evolve(&psi0, &spec, t).unwrap();
            let [x, sx, pm, pim, nerr] = sample_observables(psi.amplitudes(), n, p.delta);
            assert!((x - psi.real_expectation(&x_op).unwrap()).abs() < 1e-12);
            assert!((sx - psi.real_expectation(&sx_op).unwrap()).abs() < 1e-12);
            assert!((pm - psi.real_expectation(&p_op).unwrap()).abs() < 1e-12);
            assert!((pim - psi.real_expectation(&pi).unwrap()).abs() < 1e-12);
            assert!(nerr < 1e-12);
        }
    }

    #[test]
    fn definite_parity_states_are_static() {
        // β = 0 and β = π/2 are parity eigenstates: x_mean stays flat.
        for beta in [0.0, FRAC_PI_2] {
            let mut cfg = SimulationConfig::beta_family(params(), beta);
            cfg.n_cut = 64;
            cfg.n_samples = 201;
            cfg.convergence = None;
            let out = run_simulation(&cfg).unwrap();
            let drift = out
                .series
                .x_mean
                .iter()
                .map(|v| v.abs())
                .fold(0.0, f64::max);
            assert!(drift < 1e-9, "β={beta}: |x| reached {drift}");
            let sx = out
                .series
                .sigma_x_mean
                .iter()
                .map(|v| v.abs())
                .fold(0.0, f64::max);
            assert!(sx < 1e-9);
        }
    }

    #[test]
    fn coeigenstate_initial_states_are_static() {
        let mut cfg = SimulationConfig::beta_family(params(), 0.0);
        cfg.n_cut = 64;
        cfg.n_samples = 101;
        cfg.convergence = None;
        cfg.initial = InitialState::ParityCoeigenstate {
            sign: EnergySign::Positive,
            sector: ParitySector::Odd,
            p: 1.0,
        };
        let out = run_simulation(&cfg).unwrap();
        let x0 = out.series.x_mean[0];
        let drift = out
            .series
            .x_mean
            .iter()
            .map(|v| (v - x0).abs())
            .fold(0.0, f64::max);
        assert!(drift < 1e-8);
        let sx = out
            .series
            .sigma_x_mean
            .iter()
            .map(|v| v.abs())
            .fold(0.0, f64::max);
        assert!(sx < 1e-9);
    }

    #[test]
    fn conservation_laws_hold() {
        let mut cfg = SimulationConfig::beta_family(params(), FRAC_PI_4);
        cfg.n_cut = 64;
        cfg.n_samples = 201;
        cfg.convergence = None;
        let out = run_simulation(&cfg).unwrap();
        let s = &out.series;
        let parity_drift = s
            .parity_mean
            .iter()
            .map(|v| (v - s.parity_mean[0]).abs())
            .fold(0.0, f64::max);
        assert!(parity_drift <= 1e-10, "parity drift {parity_drift}");
        let p_drift = s
            .p_mean
            .iter()
            .map(|v| (v - s.p_mean[0]).abs())
            .fold(0.0, f64::max);
        assert!(p_drift <= 1e-10, "momentum drift {p_drift}");
        assert!(s.norm_error.iter().all(|&e| e <= 1e-10));

        // energy conservation via dense H on a few evolved states
        let n = 64;
        let spec = spectrum(n);
        let h = build_hamiltonian(&params(), n).unwrap();
        let psi0 = QuantumState::beta_spin_ground(FRAC_PI_4, n).unwrap();
        let e0 = psi0.real_expectation(&h).unwrap();
        for &t in &[1.0, 7.7, 19.5] {
            let psi = evolve(&psi0, &spec, t).unwrap();
            let e = psi.real_expectation(&h).unwrap();
            assert!((e - e0).abs() <= 1e-10 * (1.0 + e0.abs()));
        }
    }

    #[test]
    fn admixture_peak_to_peak_is_monotone_in_beta() {
        let mut p2p = Vec::new();
        for beta in [PI / 12.0, PI / 6.0, FRAC_PI_4] {
            let mut cfg = SimulationConfig::beta_family(params(), beta);
            cfg.n_cut = 64;
            cfg.t_max = 12.0;
            cfg.n_samples = 1201; // dt = 0.01, the grid the frozen values use
            cfg.convergence = None;
            let out = run_simulation(&cfg).unwrap();
            let max = out.series.x_mean.iter().copied().fold(f64::MIN, f64::max);
            let min = out.series.x_mean.iter().copied().fold(f64::MAX, f64::min);
            p2p.push(max - min);
        }
        assert!(p2p[0] < p2p[1] && p2p[1] < p2p[2], "ordering broke: {p2p:?}");
        // frozen from converged runs: 0.4022, 0.6966, 0.8044 at t_max = 12
        assert!((p2p[0] - 0.402177824).abs() < 1e-6);
        assert!((p2p[2] - 0.804355647).abs() < 1e-6);
    }

    #[test]
    fn velocity_consistency_orders() {
        // stationary eigenstate: both sides identically zero
        let n = 32;
        let spec = spectrum(n);
        let v = spec.eigenstate(3, n);
        let mut cfg = SimulationConfig::beta_family(params(), 0.0);
        cfg.n_cut = n;
        cfg.n_samples = 101;
        cfg.t_max = 5.0;
        cfg.convergence = None;
        cfg.initial = InitialState::Explicit(v.amplitudes().clone());
        let out = run_simulation(&cfg).unwrap();
        let r = velocity_consistency(&out.series, &params()).unwrap();
        assert!(r < 1e-11, "stationary residual {r}");

        // β = 0: flat x and zero σx agree exactly
        cfg.initial = InitialState::BetaSpinGround;
        let out = run_simulation(&cfg).unwrap();
        let r0 = velocity_consistency(&out.series, &params()).unwrap();
        assert!(r0 < 1e-11);

        // admixture: pure O(dt²) truncation error, ratio 4 under halving
        let mut residuals = Vec::new();
        for n_samples in [1001usize, 2001] {
            let mut c = SimulationConfig::beta_family(params(), FRAC_PI_4);
            c.n_cut = 64;
            c.t_max = 10.0;
            c.n_samples = n_samples;
            c.convergence = None;
            let out = run_simulation(&c).unwrap();
            residuals.push(velocity_consistency(&out.series, &params()).unwrap());
        }
        let ratio = residuals[0] / residuals[1];
        assert!(
            (3.5..=4.5).contains(&ratio),
            "expected second-order decrease, got ratio {ratio} from {residuals:?}"
        );
    }

    #[test]
    fn velocity_consistency_rejects_bad_grids() {
        let series = TimeSeries {
            times: vec![0.0, 0.1, 0.3, 0.4, 0.5],
            x_mean: vec![0.0; 5],
            sigma_x_mean: vec![0.0; 5],
            p_mean: vec![0.0; 5],
            parity_mean: vec![0.0; 5],
            norm_error: vec![0.0; 5],
        };
        assert!(matches!(
            velocity_consistency(&series, &params()),
            Err(Error::NonUniformGrid(_))
        ));
        let short = TimeSeries {
            times: vec![0.0, 0.1],
            x_mean: vec![0.0; 2],
            sigma_x_mean: vec![0.0; 2],
            p_mean: vec![0.0; 2],
            parity_mean: vec![0.0; 2],
            norm_error: vec![0.0; 2],
        };
        assert!(matches!(
            velocity_consistency(&short, &params()),
            Err(Error::TooFewSamples { .. })
        ));
    }

    #[test]
    fn convergence_check_passes_in_gapped_regime() {
        let mut cfg = SimulationConfig::beta_family(params(), FRAC_PI_4);
        cfg.n_cut = 64;
        cfg.n_samples = 101;
        cfg.convergence = Some(ConvergenceCheck {
            factor: 2,
            tolerance: 1e-8,
        });
        let out = run_simulation(&cfg).unwrap();
        // the state itself is converged to ~1e−14 here; the residual deviation
        // is eigensolver noise, well inside the 1e−8 gapped-regime tolerance
        let dev = out.convergence_deviation.unwrap();
        assert!(dev <= 1e-8, "deviation {dev}");
        assert!(out.max_tail_mass < 1e-20);
    }

    #[test]
    fn convergence_check_fails_when_state_escapes() {
        // Relativistic regime at a cutoff far too small for the drifting,
        // spreading packet: the doubled-cutoff comparison must reject it.
        let p = PhysicalParams::from_lambda_c(1.0, 5.4, 1.0).unwrap();
        let mut cfg = SimulationConfig::beta_family(p, FRAC_PI_4);
        cfg.n_cut = 32;
        cfg.t_max = 20.0;
        cfg.n_samples = 101;
        cfg.convergence = Some(ConvergenceCheck {
            factor: 2,
            tolerance: 1e-6,
        });
        match run_simulation(&cfg) {
            Err(Error::ConvergenceFailure {
                deviation, profile, ..
            }) => {
                assert!(deviation > 1.0, "expected O(Δ) deviation, got {deviation}");
                assert_eq!(profile.len(), 101);
            }
            other => panic!("expected convergence failure, got {other:?}"),
        }
    }

    #[test]
    fn explicit_states_embed_across_cutoffs() {
        let s = QuantumState::beta_spin_ground(0.3, 8).unwrap();
        let big = embed(&s, 20).unwrap();
        assert_eq!(big.cutoff(), 20);
        assert!((big.norm() - 1.0).abs() < 1e-15);
        assert_eq!(big.amplitudes()[0], s.amplitudes()[0]);
        assert_eq!(big.amplitudes()[20], s.amplitudes()[8]);
        assert!(embed(&big, 8).is_err());
    }

    #[test]
    fn config_validation() {
        let mut cfg = SimulationConfig::beta_family(params(), FRAC_PI_4);
        cfg.beta = 2.0;
        assert!(cfg.validate().is_err());
        let mut cfg = SimulationConfig::beta_family(params(), 0.1);
        cfg.n_samples = 1;
        assert!(cfg.validate().is_err());
        let mut cfg = SimulationConfig::beta_family(params(), 0.1);
        cfg.t_max = -1.0;
        assert!(cfg.validate().is_err());
    }
}
