//! Canonical matrices for every gate in the toolbox.
//!
//! Two-qudit gates are written with the control as the leading label digit
//! and the target as the trailing one. Placing a gate on other wires (or with
//! the control below the target) is the job of [`crate::circuit::embed`].

use std::fmt;
use std::str::FromStr;

use crate::algebra::{root_of_unity, Amplitude, Dimension, GateMatrix};

/// Every gate the circuits are built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GateKind {
    Qft,
    Iqft,
    CzD,
    CzDDag,
    CxTilde,
    CxD,
    CxDDag,
    XD,
    Swap,
    Identity,
}

impl GateKind {
    pub const ALL: [GateKind; 10] = [
        GateKind::Qft,
        GateKind::Iqft,
        GateKind::CzD,
        GateKind::CzDDag,
        GateKind::CxTilde,
        GateKind::CxD,
        GateKind::CxDDag,
        GateKind::XD,
        GateKind::Swap,
        GateKind::Identity,
    ];

    /// Number of wires the gate acts on.
    pub fn arity(self) -> usize {
        match self {
            GateKind::Qft | GateKind::Iqft | GateKind::XD | GateKind::Identity => 1,
            _ => 2,
        }
    }

    /// Textual mnemonic used by the circuit format.
    pub fn mnemonic(self) -> &'static str {
        match self {
            GateKind::Qft => "QFT",
            GateKind::Iqft => "IQFT",
            GateKind::CzD => "CZ",
            GateKind::CzDDag => "CZD",
            GateKind::CxTilde => "CXT",
            GateKind::CxD => "CX",
            GateKind::CxDDag => "CXD",
            GateKind::XD => "X",
            GateKind::Swap => "SWAP",
            GateKind::Identity => "ID",
        }
    }

    pub fn from_mnemonic(s: &str) -> Option<Self> {
        GateKind::ALL.into_iter().find(|k| k.mnemonic() == s)
    }

    /// True for gates whose matrix is an exact basis permutation.
    pub fn is_permutation(self) -> bool {
        !matches!(
            self,
            GateKind::Qft | GateKind::Iqft | GateKind::CzD | GateKind::CzDDag
        )
    }

    /// The canonical matrix of this gate at dimension `d`.
    pub fn matrix(self, d: Dimension) -> GateMatrix {
        match self {
            GateKind::Qft => qft(d),
            GateKind::Iqft => iqft(d),
            GateKind::CzD => cz_d(d),
            GateKind::CzDDag => cz_d_dag(d),
            GateKind::CxTilde => cx_tilde(d),
            GateKind::CxD => cx_d(d),
            GateKind::CxDDag => cx_d_dag(d),
            GateKind::XD => x_d(d),
            GateKind::Swap => swap_ref(d),
            GateKind::Identity => GateMatrix::identity(d.get()),
        }
    }
}

impl fmt::Display for GateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.mnemonic())
    }
}

impl FromStr for GateKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GateKind::from_mnemonic(s).ok_or_else(|| format!("unknown gate `{s}`"))
    }
}

/// Two-qudit permutation gate from a map on `(control, target)` labels.
fn two_qudit_permutation(d: Dimension, f: impl Fn(i64, i64) -> (i64, i64)) -> GateMatrix {
    let dd = d.get();
    let table = (0..dd * dd)
        .map(|j| {
            let (x, y) = f((j / dd) as i64, (j % dd) as i64);
            d.reduce(x) * dd + d.reduce(y)
        })
        .collect();
    GateMatrix::from_permutation(table).expect("gate map is a bijection")
}

fn controlled_phase(d: Dimension, sign: i64) -> GateMatrix {
    let dd = d.get();
    let diag = (0..dd * dd)
        .map(|j| {
            let xy = (j / dd) * (j % dd) % dd;
            root_of_unity(d.reduce(sign * xy as i64), d)
        })
        .collect();
    GateMatrix::from_diagonal(diag).expect("roots of unity are finite")
}

/// Quantum Fourier transform: `|x⟩ → d^{-1/2} Σ_k e^{+i2πxk/d} |k⟩`.
pub fn qft(d: Dimension) -> GateMatrix {
    let dd = d.get();
    let scale = 1.0 / (dd as f64).sqrt();
    let entries: Vec<Amplitude> = (0..dd * dd)
        .map(|j| {
            let (k, x) = (j / dd, j % dd);
            root_of_unity(k * x % dd, d) * scale
        })
        .collect();
    GateMatrix::from_dense(dd, entries).expect("d×d entries")
}

/// Inverse Fourier transform, the adjoint of [`qft`].
pub fn iqft(d: Dimension) -> GateMatrix {
    qft(d).dagger()
}

/// Controlled phase `|x⟩|y⟩ → e^{i2πxy/d} |x⟩|y⟩`.
pub fn cz_d(d: Dimension) -> GateMatrix {
    controlled_phase(d, 1)
}

/// `|x⟩|y⟩ → e^{-i2πxy/d} |x⟩|y⟩`.
pub fn cz_d_dag(d: Dimension) -> GateMatrix {
    controlled_phase(d, -1)
}

/// The self-inverse controlled gate `|x⟩|y⟩ → |x⟩|-x-y mod d⟩`.
///
/// At `d = 2` this is the CNOT. Three copies, with the control alternating
/// between wires, compose a SWAP.
pub fn cx_tilde(d: Dimension) -> GateMatrix {
    two_qudit_permutation(d, |x, y| (x, -x - y))
}

/// Controlled modular adder `|x⟩|y⟩ → |x⟩|x+y mod d⟩`.
pub fn cx_d(d: Dimension) -> GateMatrix {
    two_qudit_permutation(d, |x, y| (x, x + y))
}

/// Controlled modular subtractor `|x⟩|y⟩ → |x⟩|y-x mod d⟩`.
pub fn cx_d_dag(d: Dimension) -> GateMatrix {
    two_qudit_permutation(d, |x, y| (x, y - x))
}

/// Modular complement `|x⟩ → |-x mod d⟩`.
///
/// `|0⟩` is always fixed, and at `d = 2` the gate is the identity, not NOT.
pub fn x_d(d: Dimension) -> GateMatrix {
    let table = (0..d.get()).map(|x| d.reduce(-(x as i64))).collect();
    GateMatrix::from_permutation(table).expect("negation is a bijection")
}

/// Reference SWAP `|x⟩|y⟩ → |y⟩|x⟩`.
pub fn swap_ref(d: Dimension) -> GateMatrix {
    two_qudit_permutation(d, |x, y| (y, x))
}
