//! Exit criteria for the crate. Runs as a plain binary so every criterion
//! prints one PASS/FAIL line; the process fails if any criterion does.

mod common;

use std::process::Command;
use std::time::{Duration, Instant};

use qudit_swap::circuit::{
    asymmetric_swap_circuit, cx_tilde_decomposition, cx_tilde_decomposition_alt,
    elementary_swap_circuit, partial_swap_circuit, swap_circuit, swap_circuit_alt,
};
use qudit_swap::dsl::{parse, render, ParseErrorKind};
use qudit_swap::gates::{cx_tilde, swap_ref};
use qudit_swap::verify::{
    partial_swap_gap, random_state_check, verify_delta_sum, verify_partial_swap,
};
use qudit_swap::{Amplitude, GateMatrix};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::dim;

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

/// Worst deviation of a permutation-path SWAP builder over `d_range`, and
/// whether every unitary stayed on the exact permutation path.
fn exact_swap(build: fn(qudit_swap::Dimension) -> qudit_swap::Circuit) -> (f64, bool) {
    let mut worst = 0.0f64;
    let mut all_perm = true;
    for d in 2..=16 {
        let u = build(dim(d)).unitary().unwrap();
        all_perm &= u.is_permutation();
        worst = worst.max(u.max_entry_dist(&swap_ref(dim(d))).unwrap());
    }
    (worst, all_perm)
}

fn criterion_1() -> Outcome {
    let ((dev, perm), t) = timed(|| exact_swap(swap_circuit));
    outcome(
        dev == 0.0 && perm && t < Duration::from_secs(1),
        format!("max_dev={dev:e} (need 0), permutation path={perm}, {t:?} (need < 1 s)"),
    )
}

fn criterion_2() -> Outcome {
    let ((dev, perm), t) = timed(|| exact_swap(swap_circuit_alt));
    outcome(
        dev == 0.0 && perm,
        format!("max_dev={dev:e} (need 0), permutation path={perm}, {t:?}"),
    )
}

fn criterion_3() -> Outcome {
    let (dev, t) = timed(|| {
        (2..=32)
            .flat_map(|d| {
                [
                    cx_tilde_decomposition(dim(d)),
                    cx_tilde_decomposition_alt(dim(d)),
                ]
            })
            .map(|c| {
                let target = cx_tilde(c.dimension());
                c.unitary().unwrap().max_entry_dist(&target).unwrap()
            })
            .fold(0.0, f64::max)
    });
    outcome(
        dev <= 1e-10 && t < Duration::from_secs(5),
        format!("max_dev={dev:.3e} (need <= 1e-10), {t:?} (need < 5 s)"),
    )
}

fn criterion_4() -> Outcome {
    let mut dev = 0.0f64;
    let mut nine = true;
    for d in 2..=16 {
        let c = elementary_swap_circuit(dim(d));
        nine &= c.len() == 9;
        dev = dev.max(
            c.unitary()
                .unwrap()
                .max_entry_dist(&swap_ref(dim(d)))
                .unwrap(),
        );
    }
    outcome(
        dev <= 1e-9 && nine,
        format!("max_dev={dev:.3e} (need <= 1e-9), nine gates={nine}"),
    )
}

fn criterion_5() -> Outcome {
    let mut exact = 0.0f64;
    let mut dense = 0.0f64;
    for d in 2..=32 {
        let g = cx_tilde(dim(d));
        let id = GateMatrix::identity(g.dim());
        exact = exact.max(g.mul(&g).unwrap().max_entry_dist(&id).unwrap());
        let u = cx_tilde_decomposition(dim(d)).unitary().unwrap();
        dense = dense.max(u.mul(&u).unwrap().max_entry_dist(&id).unwrap());
    }
    outcome(
        exact == 0.0 && dense <= 1e-10,
        format!(
            "permutation max_dev={exact:e} (need 0), dense max_dev={dense:.3e} (need <= 1e-10)"
        ),
    )
}

fn criterion_6() -> Outcome {
    let cnot = [
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, 1.0, 0.0],
    ];
    let g = cx_tilde(dim(2));
    let mismatches = (0..4)
        .flat_map(|r| (0..4).map(move |c| (r, c)))
        .filter(|&(r, c)| g.entry(r, c) != Amplitude::new(cnot[r][c], 0.0))
        .count();
    outcome(
        mismatches == 0,
        format!("{mismatches} of 16 entries differ from CNOT"),
    )
}

fn criterion_7() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for d in [2, 3, 5, 8, 12] {
        let r = verify_delta_sum(dim(d));
        ok &= r.max_dev <= 1e-9 * d as f64;
        lines.push(format!("d={d}: {:.2e}", r.max_dev));
    }
    outcome(ok, format!("{} (need <= 1e-9·d)", lines.join(", ")))
}

fn criterion_8() -> Outcome {
    let (dev, perm) = exact_swap(asymmetric_swap_circuit);
    outcome(
        dev == 0.0 && perm,
        format!("max_dev={dev:e} (need 0), permutation path={perm}"),
    )
}

fn criterion_9() -> Outcome {
    let mut dev = 0.0f64;
    let mut gap = f64::INFINITY;
    for d in [2, 3, 5] {
        dev = dev.max(verify_partial_swap(dim(d), 42, 100).unwrap().max_dev);
        gap = gap.min(partial_swap_gap(dim(d)).unwrap());
    }
    let _ = partial_swap_circuit;
    outcome(
        dev <= 1e-10 && gap > 0.5,
        format!("|φ⟩|0⟩ max_dev={dev:.3e} (need <= 1e-10), distance from SWAP={gap} (need > 0.5)"),
    )
}

fn criterion_10() -> Outcome {
    let dev = [2, 3, 4, 5, 8]
        .into_iter()
        .map(|d| random_state_check(dim(d), 42, 100).unwrap().max_dev)
        .fold(0.0, f64::max);
    outcome(
        dev <= 1e-10,
        format!("max_dev={dev:.3e} over 500 states (need <= 1e-10)"),
    )
}

/// Hand-written malformed documents and where their error must be reported.
const MALFORMED: [(&str, ParseErrorKind, usize, usize); 20] = [
    ("", ParseErrorKind::MissingHeader, 1, 1),
    ("# only a comment\n", ParseErrorKind::MissingHeader, 2, 1),
    ("wires 2\ndim 3\n", ParseErrorKind::MissingHeader, 1, 1),
    ("dim 3\nCXT 1 2\n", ParseErrorKind::MissingHeader, 2, 1),
    ("dim 3\n", ParseErrorKind::MissingHeader, 2, 1),
    (
        "dim 3\nwires 2\ndim 3\n",
        ParseErrorKind::DuplicateHeader,
        3,
        1,
    ),
    (
        "dim 3\nwires 2\nCXT 1 2\nwires 2\n",
        ParseErrorKind::DuplicateHeader,
        4,
        1,
    ),
    (
        "dim 3\nwires 2\nCXT 1\n",
        ParseErrorKind::ArityMismatch,
        3,
        1,
    ),
    (
        "dim 3\nwires 2\nQFT 1 2\n",
        ParseErrorKind::ArityMismatch,
        3,
        7,
    ),
    (
        "dim 3\nwires 2\nSWAP\n",
        ParseErrorKind::ArityMismatch,
        3,
        1,
    ),
    (
        "dim 3\nwires 2\nCNOT 1 2\n",
        ParseErrorKind::UnknownGate,
        3,
        1,
    ),
    (
        "dim 3\nwires 2\n\n  qft 1\n",
        ParseErrorKind::UnknownGate,
        4,
        3,
    ),
    (
        "dim 3\nwires 2\nCXT 1 3\n",
        ParseErrorKind::WireOutOfRange,
        3,
        7,
    ),
    (
        "dim 3\nwires 2\nX 0\n",
        ParseErrorKind::WireOutOfRange,
        3,
        3,
    ),
    (
        "dim 3\nwires 2\nCZ 2 -1\n",
        ParseErrorKind::WireOutOfRange,
        3,
        6,
    ),
    (
        "dim 3\nwires 2\nCZD 1 1\n",
        ParseErrorKind::DuplicateWire,
        3,
        7,
    ),
    (
        "dim 3\nwires 2\nCX 1 two\n",
        ParseErrorKind::NotAnInteger,
        3,
        6,
    ),
    ("dim 2.5\nwires 2\n", ParseErrorKind::NotAnInteger, 1, 5),
    ("dim 1\nwires 2\n", ParseErrorKind::InvalidDimension, 1, 5),
    ("dim 3\nwires 0\n", ParseErrorKind::InvalidWireCount, 2, 7),
];

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let round_trips = (0..1000)
        .filter(|_| {
            let c = common::random_circuit(&mut rng);
            parse(&render(&c)).as_ref() == Ok(&c)
        })
        .count();
    let mut located = 0;
    for (text, kind, line, column) in MALFORMED {
        match parse(text) {
            Err(e) if e.kind == kind && e.line == line && e.column == column => located += 1,
            other => eprintln!(
                "    malformed {text:?}: expected {kind:?} at {line}:{column}, got {other:?}"
            ),
        }
    }
    outcome(
        round_trips == 1000 && located == MALFORMED.len(),
        format!(
            "{round_trips}/1000 round trips, {located}/{} malformed documents located",
            MALFORMED.len()
        ),
    )
}

fn criterion_12() -> Outcome {
    let (status, t) = timed(|| {
        Command::new(env!("CARGO_BIN_EXE_qudit-swap"))
            .args(["verify", "--d-min", "2", "--d-max", "16"])
            .output()
            .expect("binary runs")
    });
    let code = status.status.code();
    outcome(
        code == Some(0) && t < Duration::from_secs(30),
        format!("exit code {code:?} (need 0), {t:?} (need < 30 s)"),
    )
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 12] = [
        (
            "SWAP from three CX~ equals reference SWAP, d=2..16",
            criterion_1,
        ),
        ("reflected SWAP equals reference SWAP, d=2..16", criterion_2),
        (
            "both Fourier decompositions equal CX~, d=2..32",
            criterion_3,
        ),
        ("nine-gate elementary SWAP, d=2..16", criterion_4),
        (
            "CX~ is an involution, exact and dense, d=2..32",
            criterion_5,
        ),
        ("CX~ at d=2 is CNOT entry by entry", criterion_6),
        (
            "geometric-sum delta identity, d in {2,3,5,8,12}",
            criterion_7,
        ),
        ("adder/subtractor/complement SWAP, d=2..16", criterion_8),
        ("partial swap moves |φ⟩|0⟩ and is not a SWAP", criterion_9),
        ("SWAP transposes random entangled states", criterion_10),
        (
            "circuit text format round trip and error positions",
            criterion_11,
        ),
        ("`verify --d-min 2 --d-max 16` exits 0", criterion_12),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let o = check();
        if !o.passed {
            failures += 1;
        }
        println!(
            "{} [{:>2}] {name}: {}",
            if o.passed { "PASS" } else { "FAIL" },
            i + 1,
            o.detail
        );
    }
    println!(
        "{}/{} acceptance criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
