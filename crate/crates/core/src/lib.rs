//! Qudit SWAP gates built from three copies of the self-inverse controlled
//! gate `CX̃ : |x⟩|y⟩ → |x⟩|-x-y mod d⟩`, the decomposition of `CX̃` into
//! Fourier transforms and a controlled phase, and an exact verification
//! suite for all of it at any dimension `d ≥ 2`.
//!
//! ```
//! use qudit_swap::{circuit, gates, Dimension};
//!
//! let d = Dimension::new(5).unwrap();
//! let swap = circuit::swap_circuit(d).unitary().unwrap();
//! assert_eq!(swap, gates::swap_ref(d));
//! ```

pub mod algebra;
pub mod circuit;
pub mod cli;
pub mod dsl;
pub mod error;
pub mod gates;
pub mod verify;

pub use algebra::{mod_d, Amplitude, BasisLabel, Dimension, GateMatrix, StateVector};
pub use circuit::{Circuit, CxTildeDecomposition, GateOp};
pub use error::{Error, Result};
pub use gates::GateKind;
pub use verify::VerificationReport;
