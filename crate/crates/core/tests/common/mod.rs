#![allow(dead_code)]

use qudit_swap::{Circuit, Dimension, GateKind};
use rand::RngExt;
use rand_chacha::ChaCha8Rng;

/// A random valid circuit: d in 2..=12, 1..=5 wires, up to 20 gates.
pub fn random_circuit(rng: &mut ChaCha8Rng) -> Circuit {
    let d = Dimension::new(rng.random_range(2..=12)).unwrap();
    let n = rng.random_range(1..=5usize);
    let mut c = Circuit::new(d, n).unwrap();
    let kinds: Vec<GateKind> = GateKind::ALL
        .into_iter()
        .filter(|k| k.arity() <= n)
        .collect();
    for _ in 0..rng.random_range(0..=20) {
        let kind = kinds[rng.random_range(0..kinds.len())];
        let first = rng.random_range(1..=n);
        let wires = if kind.arity() == 1 {
            vec![first]
        } else {
            let mut second = rng.random_range(1..n);
            if second >= first {
                second += 1;
            }
            vec![first, second]
        };
        c.push(kind, wires).unwrap();
    }
    c
}

pub fn dim(d: i64) -> Dimension {
    Dimension::new(d).unwrap()
}
