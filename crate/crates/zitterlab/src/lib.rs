//! Exact-diagonalization dynamics of a laser-driven trapped ion whose
//! Hamiltonian maps onto the 1+1D Dirac equation, with parity-sector
//! analysis of the resulting Zitterbewegung and an independent
//! continuum-Dirac oracle for cross-validation.
//!
//! Internal units: ħ = 1; recommended Ω = 1 (time in 1/Ω) and Δ = 1
//! (length in Δ). All operators act on the flattened spin-major basis
//! `{|+⟩, |−⟩} ⊗ {|0⟩ … |N−1⟩}`.

pub mod dynamics;
pub mod error;
pub mod operators;
pub mod oracle;
pub mod params;
pub mod parity;
pub mod spectral;
pub mod state;

pub use error::Error;
pub use params::{ContinuumParams, PhysicalParams};
pub use state::{BasisIndex, QuantumState, Spin};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Dense complex matrix type used for operators and eigenvector stacks.
pub type CMatrix = nalgebra::DMatrix<C64>;

/// Dense complex vector type used for state amplitudes.
pub type CVector = nalgebra::DVector<C64>;
