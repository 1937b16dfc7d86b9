//! Reading and writing the line-oriented circuit format, including the
//! positioned errors for malformed input.
//!
//!     cargo run --example circuit_text

use qudit_swap::dsl::{parse, render};

const SWAP: &str = "\
# qutrit SWAP
dim 3
wires 2

CXT 2 1   
CXT 1 2
CXT 2 1
";

fn main() {
    let circuit = parse(SWAP).expect("valid document");
    print!("canonical form:\n{}", render(&circuit));

    for bad in [
        "dim 3\nwires 2\nCXT 1\n",
        "dim 3\nwires 2\nCXT 1 3\n",
        "wires 2\n",
        "dim 3\nwires 2\nHADAMARD 1\n",
    ] {
        match parse(bad) {
            Ok(_) => unreachable!(),
            Err(e) => println!("{:?} -> {e}", bad),
        }
    }
}
