//! Operator construction in the truncated spin-major basis.
//!
//! Every builder returns a dense 2·N_cut × 2·N_cut matrix wrapped in
//! [`OperatorMatrix`]. Products are immutable after construction and safe to
//! share across threads. The motional truncation is left untouched: the
//! commutator defect of [a, a⁺] at the corner (N_cut−1, N_cut−1) is accepted
//! and monitored through tail-mass diagnostics, not patched.

use crate::error::{Error, Result};
use crate::params::PhysicalParams;
use crate::state::BasisIndex;
use crate::{C64, CMatrix};

use nalgebra::DMatrix;

/// Dense operator with an optional Hermiticity promise.
///
/// When `hermitian_hint` is set the constructor has verified
/// ‖M − M†‖_max ≤ 1e−12·‖M‖_max.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    entries: CMatrix,
    hermitian_hint: bool,
}

impl OperatorMatrix {
    /// Wrap a matrix, verifying the Hermiticity promise when `hermitian_hint` is set.
    pub fn new(entries: CMatrix, hermitian_hint: bool) -> Result<Self> {
        if entries.nrows() != entries.ncols() {
            return Err(Error::InvalidParams(format!(
                "operator must be square, got {}×{}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let op = OperatorMatrix {
            entries,
            hermitian_hint,
        };
        if hermitian_hint {
            let defect = op.hermiticity_defect();
            let scale = op.max_norm();
            if defect > 1e-12 * scale.max(f64::MIN_POSITIVE) {
                return Err(Error::InvalidParams(format!(
                    "hermitian_hint set but ‖M − M†‖_max = {defect:.3e} (‖M‖_max = {scale:.3e})"
                )));
            }
        }
        Ok(op)
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.entries
    }

    pub fn into_matrix(self) -> CMatrix {
        self.entries
    }

    pub fn hermitian_hint(&self) -> bool {
        self.hermitian_hint
    }

    /// Largest |entry|.
    pub fn max_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// ‖M − M†‖_max.
    pub fn hermiticity_defect(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = (self.entries[(i, j)] - self.entries[(j, i)].conj()).norm();
                worst = worst.max(d);
            }
        }
        worst
    }
}

/// ‖[A, B]‖_max.
pub fn commutator_max_norm(a: &OperatorMatrix, b: &OperatorMatrix) -> f64 {
    let c = a.matrix() * b.matrix() - b.matrix() * a.matrix();
    c.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

/// Motional annihilation operator on the bare Fock factor, a|n⟩ = √n|n−1⟩.
pub(crate) fn ladder_motional(n_cut: usize) -> DMatrix<f64> {
    let mut a = DMatrix::zeros(n_cut, n_cut);
    for n in 1..n_cut {
        a[(n - 1, n)] = (n as f64).sqrt();
    }
    a
}

/// Embed `spin ⊗ motion` into the flattened spin-major basis.
fn kron_spin_motion(spin: &[[f64; 2]; 2], motion: &DMatrix<f64>, scale: C64) -> CMatrix {
    let n = motion.nrows();
    let mut out = CMatrix::zeros(2 * n, 2 * n);
    for sr in 0..2 {
        for sc in 0..2 {
            let s = spin[sr][sc];
            if s == 0.0 {
                continue;
            }
            for r in 0..n {
                for c in 0..n {
                    let m = motion[(r, c)];
                    if m != 0.0 {
                        out[(sr * n + r, sc * n + c)] = scale * s * m;
                    }
                }
            }
        }
    }
    out
}

const SIGMA_X: [[f64; 2]; 2] = [[0.0, 1.0], [1.0, 0.0]];
const SIGMA_Z: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, -1.0]];
const IDENTITY_2: [[f64; 2]; 2] = [[1.0, 0.0], [0.0, 1.0]];

fn check_cutoff(n_cut: usize) -> Result<()> {
    if n_cut == 0 {
        return Err(Error::InvalidCutoff);
    }
    Ok(())
}

/// Annihilation and creation operators on the full basis (identity on spin).
pub fn build_ladder(n_cut: usize) -> Result<(OperatorMatrix, OperatorMatrix)> {
    check_cutoff(n_cut)?;
    let a = ladder_motional(n_cut);
    let a_full = kron_spin_motion(&IDENTITY_2, &a, C64::new(1.0, 0.0));
    let adag_full = a_full.adjoint();
    Ok((
        OperatorMatrix::new(a_full, false)?,
        OperatorMatrix::new(adag_full, false)?,
    ))
}

/// The driven-ion Hamiltonian H = i·ħ·ηΩ̃·(a⁺ − a)⊗σ̂ₓ + ħΩ·σ̂_z, ħ = 1.
pub fn build_hamiltonian(params: &PhysicalParams, n_cut: usize) -> Result<OperatorMatrix> {
    params.validate()?;
    check_cutoff(n_cut)?;
    let a = ladder_motional(n_cut);
    let m = a.transpose() - a; // a⁺ − a, real antisymmetric
    let mut h = kron_spin_motion(&SIGMA_X, &m, C64::new(0.0, params.eta_omega_tilde));
    let eye = DMatrix::identity(n_cut, n_cut);
    h += kron_spin_motion(&SIGMA_Z, &eye, C64::new(params.omega, 0.0));
    OperatorMatrix::new(h, true)
}

/// The conserved parity operator exp(iπ(a⁺a − 1/2 + σ_z/2)).
///
/// Diagonal with entries exactly ±1: s_σ·(−1)ⁿ on basis element (σ, n).
pub fn build_parity(n_cut: usize) -> Result<OperatorMatrix> {
    check_cutoff(n_cut)?;
    let dim = 2 * n_cut;
    let mut pi = CMatrix::zeros(dim, dim);
    for i in 0..dim {
        let sign = BasisIndex::from_flat(i, n_cut).parity_sign();
        pi[(i, i)] = C64::new(sign, 0.0);
    }
    OperatorMatrix::new(pi, true)
}

/// Position operator x̂ = Δ(a⁺ + a), identity on spin.
pub fn build_position(params: &PhysicalParams, n_cut: usize) -> Result<OperatorMatrix> {
    params.validate()?;
    check_cutoff(n_cut)?;
    let a = ladder_motional(n_cut);
    let x = a.transpose() + a;
    OperatorMatrix::new(
        kron_spin_motion(&IDENTITY_2, &x, C64::new(params.delta, 0.0)),
        true,
    )
}

/// Momentum operator p̂ = iħ(a⁺ − a)/(2Δ), identity on spin.
pub fn build_momentum(params: &PhysicalParams, n_cut: usize) -> Result<OperatorMatrix> {
    params.validate()?;
    check_cutoff(n_cut)?;
    let a = ladder_motional(n_cut);
    let m = a.transpose() - a;
    OperatorMatrix::new(
        kron_spin_motion(&IDENTITY_2, &m, C64::new(0.0, 0.5 / params.delta)),
        true,
    )
}

/// σ̂ₓ on the internal state, identity on motion.
pub fn build_sigma_x(n_cut: usize) -> Result<OperatorMatrix> {
    check_cutoff(n_cut)?;
    let eye = DMatrix::identity(n_cut, n_cut);
    OperatorMatrix::new(kron_spin_motion(&SIGMA_X, &eye, C64::new(1.0, 0.0)), true)
}

/// The gate Hamiltonian H_r = σ₊a + σ₋a⁺ of red-sideband logic operations.
///
/// σ₊ = |+⟩⟨−| raises the spin while a lowers the Fock level, so H_r couples
/// (n, −) ↔ (n−1, +), both carrying the same parity grading.
pub fn build_gate_hamiltonian(n_cut: usize) -> Result<OperatorMatrix> {
    check_cutoff(n_cut)?;
    let a = ladder_motional(n_cut);
    let sigma_plus: [[f64; 2]; 2] = [[0.0, 1.0], [0.0, 0.0]];
    let sigma_minus: [[f64; 2]; 2] = [[0.0, 0.0], [1.0, 0.0]];
    let mut h = kron_spin_motion(&sigma_plus, &a, C64::new(1.0, 0.0));
    h += kron_spin_motion(&sigma_minus, &a.transpose(), C64::new(1.0, 0.0));
    OperatorMatrix::new(h, true)
}
