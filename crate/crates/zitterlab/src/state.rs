use crate::error::{Error, Result};
use crate::{C64, CVector};

/// Internal (spin) label: the eigenstates |±⟩ of σ_z with eigenvalue ±1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Spin {
    Plus,
    Minus,
}

impl Spin {
    /// Block offset in the spin-major flattening: all Fock levels for |+⟩
    /// first, then all levels for |−⟩.
    pub fn block(self) -> usize {
        match self {
            Spin::Plus => 0,
            Spin::Minus => 1,
        }
    }

    /// σ_z eigenvalue.
    pub fn sigma_z(self) -> f64 {
        match self {
            Spin::Plus => 1.0,
            Spin::Minus => -1.0,
        }
    }
}

/// One basis element |σ⟩⊗|n⟩ of the truncated product basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BasisIndex {
    pub spin: Spin,
    pub fock_n: usize,
}

impl BasisIndex {
    /// Flattened index `spin_block · N_cut + fock_n`, a bijection onto [0, 2·N_cut).
    pub fn flatten(&self, n_cut: usize) -> usize {
        debug_assert!(self.fock_n < n_cut);
        self.spin.block() * n_cut + self.fock_n
    }

    /// Inverse of [`BasisIndex::flatten`].
    pub fn from_flat(index: usize, n_cut: usize) -> Self {
        debug_assert!(index < 2 * n_cut);
        BasisIndex {
            spin: if index < n_cut { Spin::Plus } else { Spin::Minus },
            fock_n: index % n_cut,
        }
    }

    /// Parity grading s_σ·(−1)ⁿ of this basis element: the diagonal entry
    /// exp(iπ(n − 1/2 + σ/2)) of the parity operator, always exactly ±1.
    pub fn parity_sign(&self) -> f64 {
        let motional = if self.fock_n % 2 == 0 { 1.0 } else { -1.0 };
        self.spin.sigma_z() * motional
    }
}

/// A pure state over the truncated spin⊗Fock basis.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumState {
    amplitudes: CVector,
    cutoff: usize,
}

impl QuantumState {
    /// Wrap an amplitude vector of length 2·N_cut.
    pub fn new(amplitudes: CVector, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::InvalidCutoff);
        }
        if amplitudes.len() != 2 * cutoff {
            return Err(Error::DimensionMismatch {
                state: amplitudes.len(),
                operator: 2 * cutoff,
            });
        }
        Ok(QuantumState { amplitudes, cutoff })
    }

    /// All-zero amplitude vector (not normalizable; building block only).
    pub fn zero(cutoff: usize) -> Self {
        QuantumState {
            amplitudes: CVector::zeros(2 * cutoff),
            cutoff,
        }
    }

    /// Basis state |σ⟩⊗|n⟩.
    pub fn basis_state(spin: Spin, fock_n: usize, cutoff: usize) -> Result<Self> {
        if fock_n >= cutoff {
            return Err(Error::InvalidConfig(format!(
                "fock level {fock_n} outside cutoff {cutoff}"
            )));
        }
        let mut s = Self::zero(cutoff);
        let idx = BasisIndex { spin, fock_n }.flatten(cutoff);
        s.amplitudes[idx] = C64::new(1.0, 0.0);
        Ok(s)
    }

    /// The spin-ground-motional family (cos β|+⟩ + sin β|−⟩)⊗|0⟩.
    pub fn beta_spin_ground(beta: f64, cutoff: usize) -> Result<Self> {
        let mut s = Self::zero(cutoff);
        s.amplitudes[0] = C64::new(beta.cos(), 0.0);
        s.amplitudes[cutoff] = C64::new(beta.sin(), 0.0);
        Ok(s)
    }

    pub fn cutoff(&self) -> usize {
        self.cutoff
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn amplitudes(&self) -> &CVector {
        &self.amplitudes
    }

    pub fn amplitudes_mut(&mut self) -> &mut CVector {
        &mut self.amplitudes
    }

    pub fn amplitude(&self, idx: BasisIndex) -> C64 {
        self.amplitudes[idx.flatten(self.cutoff)]
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.norm()
    }

    pub fn norm_squared(&self) -> f64 {
        self.amplitudes.norm_squared()
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &QuantumState) -> C64 {
        self.amplitudes.dotc(&other.amplitudes)
    }

    /// Normalize in place; errors if the norm is below `threshold`.
    pub fn normalize(&mut self, threshold: f64) -> Result<()> {
        let n = self.norm();
        if n < threshold {
            return Err(Error::ZeroState { norm: n, threshold });
        }
        self.amplitudes /= C64::new(n, 0.0);
        Ok(())
    }

    /// Probability weight in the top four Fock levels of each spin block.
    ///
    /// A non-negligible tail signals that the cutoff no longer contains the
    /// state and truncation artifacts are imminent.
    pub fn tail_mass(&self) -> f64 {
        let n = self.cutoff;
        let lo = n.saturating_sub(4);
        let mut mass = 0.0;
        for block in 0..2 {
            for k in lo..n {
                mass += self.amplitudes[block * n + k].norm_sqr();
            }
        }
        mass
    }

    /// ⟨ψ|O|ψ⟩ for a dense operator.
    pub fn expectation(&self, op: &crate::operators::OperatorMatrix) -> Result<C64> {
        if op.dim() != self.dim() {
            return Err(Error::DimensionMismatch {
                state: self.dim(),
                operator: op.dim(),
            });
        }
        Ok(self.amplitudes.dotc(&(op.matrix() * &self.amplitudes)))
    }

    /// Real expectation value of a Hermitian operator; debug-asserts that the
    /// imaginary residue is at roundoff level.
    pub fn real_expectation(&self, op: &crate::operators::OperatorMatrix) -> Result<f64> {
        let v = self.expectation(op)?;
        debug_assert!(
            v.im.abs() <= 1e-12 * (1.0 + v.re.abs()),
            "imaginary residue {} on a Hermitian expectation",
            v.im
        );
        Ok(v.re)
    }
}
