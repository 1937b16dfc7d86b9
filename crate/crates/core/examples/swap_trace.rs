//! Traces basis states through the three-CX̃ SWAP gate by gate.
//!
//!     cargo run --example swap_trace -- 5

use qudit_swap::circuit::swap_circuit;
use qudit_swap::{BasisLabel, Circuit, Dimension, StateVector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = std::env::args().nth(1).map_or(Ok(5), |s| s.parse())?;
    let d = Dimension::new(d)?;
    let swap = swap_circuit(d);

    println!("SWAP at d = {d}:");
    for op in swap.ops() {
        println!(
            "  {} control={} target={}",
            op.kind(),
            op.wires()[0],
            op.wires()[1]
        );
    }

    for (x, y) in [(1, 2), (d.get() - 1, 0), (2 % d.get(), 2 % d.get())] {
        let mut state = StateVector::basis(&BasisLabel::new(d, vec![x, y])?)?;
        let mut trace = vec![format!("({x},{y})")];
        for op in swap.ops() {
            let mut step = Circuit::new(d, 2)?;
            step.push_op(op.clone())?;
            state = step.simulate(&state)?;
            let label = state
                .as_basis_label(0.0)
                .expect("permutation gates keep basis states");
            trace.push(format!("({label})"));
        }
        println!("{}", trace.join(" -> "));
    }

    let exact = swap.unitary()? == qudit_swap::gates::swap_ref(d);
    println!("unitary equals the reference SWAP exactly: {exact}");
    Ok(())
}
