//! The SWAP circuit acting on random entangled states: every amplitude
//! a(x,y) moves to a(y,x).
//!
//!     cargo run --example entangled_swap

use qudit_swap::circuit::swap_circuit;
use qudit_swap::verify::{random_state, random_state_check, transpose_wires};
use qudit_swap::Dimension;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> Result<(), qudit_swap::Error> {
    let d = Dimension::new(3)?;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let s = random_state(d, 2, &mut rng)?;
    let out = swap_circuit(d).simulate(&s)?;
    let want = transpose_wires(&s);
    for (j, (a, b)) in out.amplitudes().iter().zip(want.amplitudes()).enumerate() {
        println!(
            "({},{})  {:+.6} {:+.6}i   expected {:+.6} {:+.6}i",
            j / 3,
            j % 3,
            a.re,
            a.im,
            b.re,
            b.im
        );
    }

    for d in [2, 3, 4, 5, 8, 16] {
        let r = random_state_check(Dimension::new(d)?, 42, 100)?;
        println!(
            "d={d:>2}: 100 random states, max deviation {:.3e}",
            r.max_dev
        );
    }
    Ok(())
}
