//! Prints gate matrices in the CSV and JSON export formats.
//!
//!     cargo run --example matrix_export

use qudit_swap::cli::{matrix_csv, matrix_json};
use qudit_swap::{Dimension, GateKind};

fn main() -> Result<(), qudit_swap::Error> {
    let qubit = Dimension::new(2)?;
    println!(
        "CX~ at d=2 (the CNOT):\n{}",
        matrix_csv(&GateKind::CxTilde.matrix(qubit))
    );
    println!("CZ at d=2:\n{}", matrix_csv(&GateKind::CzD.matrix(qubit)));
    print!(
        "QFT at d=3 as JSON:\n{}",
        matrix_json(&GateKind::Qft.matrix(Dimension::new(3)?))
    );
    Ok(())
}
