//! The SWAP assembled from modular adders, a subtractor and a complement,
//! next to the single-gate-type CX̃ construction.
//!
//!     cargo run --example asymmetric_swap

use qudit_swap::circuit::{asymmetric_swap_circuit, swap_circuit};
use qudit_swap::gates::{swap_ref, x_d};
use qudit_swap::{Dimension, GateMatrix};

fn main() -> Result<(), qudit_swap::Error> {
    // at d = 2 the complement is the identity, so the circuit is three CNOTs
    println!(
        "X_2 is the identity: {}",
        x_d(Dimension::new(2)?) == GateMatrix::identity(2)
    );

    for d in 2..=10 {
        let d = Dimension::new(d)?;
        let asym = asymmetric_swap_circuit(d);
        let sym = swap_circuit(d);
        println!(
            "d={d:>2}  adder circuit: {} gates, SWAP={}   CX~ circuit: {} gates, SWAP={}",
            asym.len(),
            asym.unitary()? == swap_ref(d),
            sym.len(),
            sym.unitary()? == swap_ref(d),
        );
    }
    Ok(())
}
