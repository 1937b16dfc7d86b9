//! CX̃ rebuilt from Fourier transforms and a controlled phase, in both the
//! forward and the adjoint form, and the nine-gate SWAP that follows.
//!
//!     cargo run --example fourier_decomposition

use qudit_swap::circuit::{
    cx_tilde_decomposition, cx_tilde_decomposition_alt, elementary_swap_circuit,
};
use qudit_swap::dsl::render;
use qudit_swap::gates::{cx_tilde, swap_ref};
use qudit_swap::Dimension;

fn main() -> Result<(), qudit_swap::Error> {
    print!("{}", render(&cx_tilde_decomposition(Dimension::new(4)?)));
    println!();
    println!(
        "{:>3}  {:>12}  {:>12}  {:>12}",
        "d", "QFT·CZ·QFT", "IQFT·CZ†·IQFT", "9-gate SWAP"
    );
    for d in [2, 3, 4, 5, 7, 8, 12, 16, 24, 32] {
        let d = Dimension::new(d)?;
        let target = cx_tilde(d);
        let fwd = cx_tilde_decomposition(d)
            .unitary()?
            .max_entry_dist(&target)?;
        let adj = cx_tilde_decomposition_alt(d)
            .unitary()?
            .max_entry_dist(&target)?;
        let swap = elementary_swap_circuit(d)
            .unitary()?
            .max_entry_dist(&swap_ref(d))?;
        println!("{d:>3}  {fwd:>12.3e}  {adj:>12.3e}  {swap:>12.3e}");
    }
    Ok(())
}
