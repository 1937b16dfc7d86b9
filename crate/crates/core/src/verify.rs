//! Executable identity checks for the SWAP construction and the gate
//! decompositions, each producing a [`VerificationReport`].

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_complex::Complex64;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use crate::algebra::{Amplitude, BasisLabel, Dimension, GateMatrix, StateVector};
use crate::circuit::{
    asymmetric_swap_circuit, cx_tilde_decomposition, cx_tilde_decomposition_alt,
    elementary_swap_circuit, partial_swap_circuit, swap_circuit, swap_circuit_alt,
};
use crate::error::{Error, Result};
use crate::gates::{cx_tilde, swap_ref, GateKind};

/// Per-entry tolerance for checks that go through floating-point gates.
pub const DENSE_TOLERANCE: f64 = 1e-10;
/// Tolerance for the nine-gate elementary SWAP.
pub const ELEMENTARY_TOLERANCE: f64 = 1e-9;
/// Checks on exact permutation tables must agree to the last bit.
pub const EXACT: f64 = 0.0;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 100;
/// Largest dimension [`verify_all`] accepts.
pub const MAX_SUITE_DIMENSION: u32 = 64;

/// Outcome of a single identity check at one dimension.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub d: usize,
    pub max_dev: f64,
    pub tolerance: f64,
    pub passed: bool,
}

impl VerificationReport {
    pub fn new(identity: impl Into<String>, d: Dimension, max_dev: f64, tolerance: f64) -> Self {
        VerificationReport {
            identity: identity.into(),
            d: d.get(),
            max_dev,
            tolerance,
            passed: max_dev <= tolerance,
        }
    }
}

/// Tolerance of the geometric-sum check; the near-zero sums cancel `d`
/// unit-modulus terms.
pub fn delta_sum_tolerance(d: Dimension) -> f64 {
    1e-9 * d.get() as f64
}

/// Three-`CX̃` SWAP and its reflection against the reference SWAP, exactly.
pub fn verify_swap(d: Dimension) -> Result<VerificationReport> {
    let target = swap_ref(d);
    let dev = swap_circuit(d)
        .unitary()?
        .max_entry_dist(&target)?
        .max(swap_circuit_alt(d).unitary()?.max_entry_dist(&target)?);
    Ok(VerificationReport::new("swap", d, dev, EXACT))
}

/// Both Fourier decompositions against `CX̃`.
pub fn verify_decomposition(d: Dimension) -> Result<VerificationReport> {
    verify_decomposition_with(d, DENSE_TOLERANCE)
}

fn verify_decomposition_with(d: Dimension, tol: f64) -> Result<VerificationReport> {
    let target = cx_tilde(d);
    let dev = cx_tilde_decomposition(d)
        .unitary()?
        .max_entry_dist(&target)?
        .max(
            cx_tilde_decomposition_alt(d)
                .unitary()?
                .max_entry_dist(&target)?,
        );
    Ok(VerificationReport::new("decomposition", d, dev, tol))
}

/// `CX̃ · CX̃ = I` on the permutation table.
pub fn verify_self_inverse(d: Dimension) -> Result<VerificationReport> {
    let g = cx_tilde(d);
    let dev = g.mul(&g)?.max_entry_dist(&GateMatrix::identity(g.dim()))?;
    Ok(VerificationReport::new("self_inverse", d, dev, EXACT))
}

/// `CX̃ · CX̃ = I` with `CX̃` taken from its Fourier decomposition.
pub fn verify_self_inverse_dense(d: Dimension) -> Result<VerificationReport> {
    verify_self_inverse_dense_with(d, DENSE_TOLERANCE)
}

fn verify_self_inverse_dense_with(d: Dimension, tol: f64) -> Result<VerificationReport> {
    let once = cx_tilde_decomposition(d);
    let twice = once.then(&once)?.unitary()?;
    let dev = twice.max_entry_dist(&GateMatrix::identity(twice.dim()))?;
    Ok(VerificationReport::new("self_inverse_dense", d, dev, tol))
}

/// Worst `M†M - I` entry over every gate constructor.
pub fn verify_unitarity(d: Dimension) -> VerificationReport {
    verify_unitarity_with(d, DENSE_TOLERANCE)
}

fn verify_unitarity_with(d: Dimension, tol: f64) -> VerificationReport {
    let dev = GateKind::ALL
        .iter()
        .map(|k| k.matrix(d).unitarity_deviation())
        .fold(0.0, f64::max);
    VerificationReport::new("unitarity", d, dev, tol)
}

/// The SWAP rebuilt from nine Fourier/phase gates.
pub fn verify_elementary_swap(d: Dimension) -> Result<VerificationReport> {
    verify_elementary_swap_with(d, ELEMENTARY_TOLERANCE)
}

fn verify_elementary_swap_with(d: Dimension, tol: f64) -> Result<VerificationReport> {
    let dev = elementary_swap_circuit(d)
        .unitary()?
        .max_entry_dist(&swap_ref(d))?;
    Ok(VerificationReport::new("elementary_swap", d, dev, tol))
}

/// The adder/subtractor/complement SWAP, exactly.
pub fn verify_asymmetric_swap(d: Dimension) -> Result<VerificationReport> {
    let dev = asymmetric_swap_circuit(d)
        .unitary()?
        .max_entry_dist(&swap_ref(d))?;
    Ok(VerificationReport::new("asymmetric_swap", d, dev, EXACT))
}

/// `|φ⟩|0⟩ → |0⟩|φ⟩` for `trials` seeded random `φ`.
pub fn verify_partial_swap(d: Dimension, seed: u64, trials: usize) -> Result<VerificationReport> {
    verify_partial_swap_with(d, seed, trials, DENSE_TOLERANCE)
}

fn verify_partial_swap_with(
    d: Dimension,
    seed: u64,
    trials: usize,
    tol: f64,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let circuit = partial_swap_circuit(d);
    let zero = StateVector::basis(&BasisLabel::new(d, vec![0])?)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dev = 0.0f64;
    for _ in 0..trials {
        let phi = random_state(d, 1, &mut rng)?;
        let input = StateVector::product(&[phi.clone(), zero.clone()])?;
        let expected = StateVector::product(&[zero.clone(), phi])?;
        dev = dev.max(circuit.simulate(&input)?.max_dist(&expected)?);
    }
    Ok(VerificationReport::new("partial_swap", d, dev, tol))
}

/// How far the partial-swap circuit is from a full SWAP.
pub fn partial_swap_gap(d: Dimension) -> Result<f64> {
    partial_swap_circuit(d)
        .unitary()?
        .max_entry_dist(&swap_ref(d))
}

/// `|Σ_k e^{i2πk(x+y+l)/d} - d·[x+y+l ≡ 0]|` over every triple.
pub fn verify_delta_sum(d: Dimension) -> VerificationReport {
    verify_delta_sum_with(d, delta_sum_tolerance(d))
}

fn verify_delta_sum_with(d: Dimension, tol: f64) -> VerificationReport {
    let dd = d.get();
    let mut dev = 0.0f64;
    for x in 0..dd {
        for y in 0..dd {
            for l in 0..dd {
                let expected = if (x + y + l) % dd == 0 {
                    dd as f64
                } else {
                    0.0
                };
                let sum = geometric_sum(d, x + y + l);
                dev = dev.max((sum - Complex64::new(expected, 0.0)).norm());
            }
        }
    }
    VerificationReport::new("delta_sum", d, dev, tol)
}

/// `Σ_{k<d} e^{i2πkm/d}`, summed term by term.
pub fn geometric_sum(d: Dimension, m: usize) -> Amplitude {
    let dd = d.get() as f64;
    (0..d.get())
        .map(|k| Complex64::from_polar(1.0, std::f64::consts::TAU * (k * m) as f64 / dd))
        .sum()
}

/// SWAP circuit on `trials` seeded random two-qudit states (generally
/// entangled), compared against the state with its labels transposed.
pub fn random_state_check(d: Dimension, seed: u64, trials: usize) -> Result<VerificationReport> {
    random_state_check_with(d, seed, trials, DENSE_TOLERANCE)
}

fn random_state_check_with(
    d: Dimension,
    seed: u64,
    trials: usize,
    tol: f64,
) -> Result<VerificationReport> {
    if trials == 0 {
        return Err(Error::NoTrials);
    }
    let circuit = swap_circuit(d);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut dev = 0.0f64;
    for _ in 0..trials {
        let s = random_state(d, 2, &mut rng)?;
        let out = circuit.simulate(&s)?;
        dev = dev.max(out.max_dist(&transpose_wires(&s))?);
    }
    Ok(VerificationReport::new("random_states", d, dev, tol))
}

/// Reorders a two-qudit state's amplitudes by `(x, y) → (y, x)`.
pub fn transpose_wires(s: &StateVector) -> StateVector {
    let d = s.dimension().get();
    let amps = s.amplitudes();
    let out = (0..d * d).map(|j| amps[(j % d) * d + j / d]).collect();
    StateVector::from_amplitudes(s.dimension(), 2, out).expect("same shape")
}

/// Normalized state with independent standard-normal real and imaginary parts.
pub fn random_state(d: Dimension, wires: usize, rng: &mut ChaCha8Rng) -> Result<StateVector> {
    let size = d.register_size(wires)?;
    let amps = (0..size)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        })
        .collect();
    Ok(StateVector::from_amplitudes(d, wires, amps)?.normalized())
}

/// Knobs for [`verify_all_with`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Dense-path tolerance. The elementary SWAP gets ten times this, and the
    /// geometric sum ten times this scaled by `d`.
    pub tolerance: f64,
    pub seed: u64,
    pub trials: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            tolerance: DENSE_TOLERANCE,
            seed: DEFAULT_SEED,
            trials: DEFAULT_TRIALS,
        }
    }
}

/// Every check at every `d` in `d_min..=d_max`, default settings.
pub fn verify_all(d_min: i64, d_max: i64) -> Result<Vec<VerificationReport>> {
    verify_all_with(d_min, d_max, &SuiteConfig::default())
}

/// Every check at every `d` in `d_min..=d_max`.
///
/// Dimensions are processed in parallel; reports come back ordered by `d`
/// and then by check.
pub fn verify_all_with(
    d_min: i64,
    d_max: i64,
    config: &SuiteConfig,
) -> Result<Vec<VerificationReport>> {
    if !(2 <= d_min && d_min <= d_max && d_max <= MAX_SUITE_DIMENSION as i64) {
        return Err(Error::InvalidRange {
            min: d_min,
            max: d_max,
            lo: 2,
            hi: MAX_SUITE_DIMENSION,
        });
    }
    if config.trials == 0 {
        return Err(Error::NoTrials);
    }
    let dims: Vec<Dimension> = (d_min..=d_max).map(Dimension::new).collect::<Result<_>>()?;
    let results: Vec<Mutex<Option<Result<Vec<VerificationReport>>>>> =
        dims.iter().map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let workers = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1)
        .min(dims.len());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&d) = dims.get(i) else { break };
                let out = suite_for(d, config);
                *results[i]
                    .lock()
                    .expect("no worker panics while holding the lock") = Some(out);
            });
        }
    });
    let mut reports = Vec::new();
    for slot in results {
        let out = slot.into_inner().expect("lock not poisoned");
        reports.extend(out.expect("every dimension was processed")?);
    }
    Ok(reports)
}

fn suite_for(d: Dimension, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let tol = config.tolerance;
    Ok(vec![
        verify_unitarity_with(d, tol),
        verify_swap(d)?,
        verify_decomposition_with(d, tol)?,
        verify_self_inverse(d)?,
        verify_self_inverse_dense_with(d, tol)?,
        verify_elementary_swap_with(d, 10.0 * tol)?,
        verify_asymmetric_swap(d)?,
        verify_partial_swap_with(d, config.seed, config.trials, tol)?,
        verify_delta_sum_with(d, 10.0 * tol * d.get() as f64),
        random_state_check_with(d, config.seed, config.trials, tol)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(d: i64) -> Dimension {
        Dimension::new(d).unwrap()
    }

    #[test]
    fn swap_examples() {
        let r = verify_swap(dim(2)).unwrap();
        assert!(r.passed);
        assert_eq!(r.max_dev, 0.0);
        assert!(verify_swap(dim(7)).unwrap().passed);
        assert_eq!(
            Dimension::new(1).and_then(verify_swap),
            Err(Error::InvalidDimension(1))
        );
    }

    #[test]
    fn decomposition_examples() {
        assert!(verify_decomposition(dim(2)).unwrap().passed);
        let r = verify_decomposition(dim(32)).unwrap();
        assert!(r.passed && r.max_dev <= 1e-10, "{r:?}");
    }

    #[test]
    fn self_inverse_is_exact() {
        for d in 2..=32 {
            assert_eq!(verify_self_inverse(dim(d)).unwrap().max_dev, 0.0);
        }
        assert!(verify_self_inverse_dense(dim(5)).unwrap().max_dev <= 1e-10);
    }

    #[test]
    fn delta_sum_examples() {
        assert!((geometric_sum(dim(2), 2) - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        assert!(geometric_sum(dim(3), 2).norm() <= 1e-12);
        assert!(verify_delta_sum(dim(12)).passed);
    }

    #[test]
    fn report_pass_flag_follows_tolerance() {
        let r = VerificationReport::new("x", dim(3), 1e-11, 1e-10);
        assert!(r.passed);
        let r = VerificationReport::new("x", dim(3), 2e-10, 1e-10);
        assert!(!r.passed);
        let r = VerificationReport::new("x", dim(3), 0.0, 0.0);
        assert!(r.passed);
    }

    #[test]
    fn random_state_examples() {
        assert!(random_state_check(dim(3), 42, 100).unwrap().passed);
        assert_eq!(random_state_check(dim(3), 42, 0), Err(Error::NoTrials));

        let d = dim(4);
        let amp = Complex64::new(0.5, 0.0);
        let mut amps = vec![Complex64::new(0.0, 0.0); 16];
        (0..4).for_each(|k| amps[k * 4 + k] = amp);
        let bell = StateVector::from_amplitudes(d, 2, amps).unwrap();
        let out = swap_circuit(d).simulate(&bell).unwrap();
        assert!(out.max_dist(&bell).unwrap() <= 1e-12);
    }

    #[test]
    fn random_states_are_normalized_and_seeded() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        let s = random_state(dim(5), 2, &mut a).unwrap();
        assert!((s.norm_sqr() - 1.0).abs() < 1e-12);
        assert_eq!(s, random_state(dim(5), 2, &mut b).unwrap());
    }

    #[test]
    fn partial_swap_moves_but_does_not_swap() {
        for d in [2, 3, 5] {
            assert!(verify_partial_swap(dim(d), 42, 20).unwrap().passed);
            assert!(partial_swap_gap(dim(d)).unwrap() > 0.5);
        }
    }

    #[test]
    fn verify_all_ranges() {
        let reports = verify_all(2, 2).unwrap();
        assert!(reports.iter().all(|r| r.d == 2));
        assert!(reports.iter().all(|r| r.passed), "{reports:#?}");
        assert!(matches!(verify_all(5, 3), Err(Error::InvalidRange { .. })));
        assert!(matches!(verify_all(1, 4), Err(Error::InvalidRange { .. })));
        assert!(matches!(verify_all(2, 65), Err(Error::InvalidRange { .. })));
    }

    #[test]
    fn verify_all_is_ordered_and_deterministic() {
        let a = verify_all(2, 6).unwrap();
        let b = verify_all(2, 6).unwrap();
        assert_eq!(a, b);
        let ds: Vec<usize> = a.iter().map(|r| r.d).collect();
        let mut sorted = ds.clone();
        sorted.sort();
        assert_eq!(ds, sorted);
    }
}
