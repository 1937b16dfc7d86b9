//! Two gates move |φ⟩|0⟩ to |0⟩|φ⟩ but do not swap arbitrary inputs.
//!
//!     cargo run --example partial_swap

use qudit_swap::circuit::partial_swap_circuit;
use qudit_swap::verify::{partial_swap_gap, random_state};
use qudit_swap::{BasisLabel, Dimension, StateVector};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), qudit_swap::Error> {
    let d = Dimension::new(3)?;
    let circuit = partial_swap_circuit(d);
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let phi = random_state(d, 1, &mut rng)?;
    let zero = StateVector::basis(&BasisLabel::new(d, vec![0])?)?;
    let out = circuit.simulate(&StateVector::product(&[phi.clone(), zero.clone()])?)?;
    let expected = StateVector::product(&[zero, phi])?;
    println!(
        "|φ⟩|0⟩ -> |0⟩|φ⟩ deviation: {:.3e}",
        out.max_dist(&expected)?
    );

    let input = StateVector::basis(&BasisLabel::new(d, vec![1, 1])?)?;
    let out = circuit.simulate(&input)?;
    println!(
        "(1,1) -> ({}), a SWAP would leave it fixed",
        out.as_basis_label(0.0).unwrap()
    );
    println!("distance from SWAP: {}", partial_swap_gap(d)?);
    Ok(())
}
