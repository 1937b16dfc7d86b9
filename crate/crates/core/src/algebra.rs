//! Dense complex linear algebra over mixed-radix qudit registers.
//!
//! Basis labels are flattened most-significant-digit first: wire 1 is the
//! leading digit, so `|x⟩|y⟩` on two qudits sits at flat index `x·d + y`.

use std::f64::consts::TAU;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Scalar of every state and matrix entry.
pub type Amplitude = Complex64;

/// Largest register (in amplitudes) the dense simulator will build.
pub const SIZE_BUDGET: usize = 4096;

const ZERO: Amplitude = Complex64::new(0.0, 0.0);
const ONE: Amplitude = Complex64::new(1.0, 0.0);

/// Number of levels of a qudit. Always at least 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dimension(u32);

impl Dimension {
    pub fn new(d: i64) -> Result<Self> {
        if d < 2 || d > u32::MAX as i64 {
            return Err(Error::InvalidDimension(d));
        }
        Ok(Dimension(d as u32))
    }

    #[inline]
    pub fn get(self) -> usize {
        self.0 as usize
    }

    /// Reduces `v` to its nonnegative representative in `[0, d-1]`.
    #[inline]
    pub fn reduce(self, v: i64) -> usize {
        v.rem_euclid(self.0 as i64) as usize
    }

    /// `d^wires`, or an error if it exceeds [`SIZE_BUDGET`].
    pub fn register_size(self, wires: usize) -> Result<usize> {
        if wires == 0 {
            return Err(Error::NoWires);
        }
        let over = || Error::SizeBudgetExceeded {
            d: self.get(),
            wires,
            budget: SIZE_BUDGET,
        };
        let exp = u32::try_from(wires).map_err(|_| over())?;
        match self.get().checked_pow(exp) {
            Some(size) if size <= SIZE_BUDGET => Ok(size),
            _ => Err(over()),
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// `v mod d`, always in `[0, d-1]` even for negative `v`.
pub fn mod_d(v: i64, d: i64) -> Result<usize> {
    Ok(Dimension::new(d)?.reduce(v))
}

/// `e^{i 2π k / d}`, exact when `k/d` is a multiple of a quarter turn.
///
/// `k` is reduced mod `d` before the trig call to keep the argument small.
pub fn root_of_unity(k: usize, d: Dimension) -> Amplitude {
    let d = d.get();
    let k = k % d;
    if (4 * k).is_multiple_of(d) {
        return match 4 * k / d {
            0 => ONE,
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    let theta = TAU * k as f64 / d as f64;
    Complex64::new(theta.cos(), theta.sin())
}

/// A computational basis label of an n-qudit register.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    d: Dimension,
    digits: Vec<usize>,
}

impl BasisLabel {
    pub fn new(d: Dimension, digits: Vec<usize>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::NoWires);
        }
        if let Some((position, &digit)) = digits.iter().enumerate().find(|(_, &x)| x >= d.get()) {
            return Err(Error::InvalidLabel {
                position,
                digit,
                max: d.get() - 1,
            });
        }
        Ok(BasisLabel { d, digits })
    }

    /// Inverse of [`BasisLabel::flat`].
    pub fn from_flat(d: Dimension, wires: usize, flat: usize) -> Result<Self> {
        if wires == 0 {
            return Err(Error::NoWires);
        }
        let size = d
            .get()
            .checked_pow(wires as u32)
            .ok_or(Error::SizeBudgetExceeded {
                d: d.get(),
                wires,
                budget: usize::MAX,
            })?;
        if flat >= size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: flat,
            });
        }
        let mut digits = vec![0; wires];
        let mut rest = flat;
        for slot in digits.iter_mut().rev() {
            *slot = rest % d.get();
            rest /= d.get();
        }
        Ok(BasisLabel { d, digits })
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn wires(&self) -> usize {
        self.digits.len()
    }

    pub fn flat(&self) -> usize {
        self.digits.iter().fold(0, |acc, &x| acc * self.d.get() + x)
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.digits.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Amplitudes of an n-qudit register over the computational basis.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    d: Dimension,
    wires: usize,
    amps: Vec<Amplitude>,
}

impl StateVector {
    pub fn basis(label: &BasisLabel) -> Result<Self> {
        let size = label.d.register_size(label.wires())?;
        let mut amps = vec![ZERO; size];
        amps[label.flat()] = ONE;
        Ok(StateVector {
            d: label.d,
            wires: label.wires(),
            amps,
        })
    }

    /// Wraps raw amplitudes; they are not renormalized.
    pub fn from_amplitudes(d: Dimension, wires: usize, amps: Vec<Amplitude>) -> Result<Self> {
        let size = d.register_size(wires)?;
        if amps.len() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: amps.len(),
            });
        }
        if let Some(i) = amps
            .iter()
            .position(|a| !(a.re.is_finite() && a.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(StateVector { d, wires, amps })
    }

    /// Tensor product of single-qudit states, wire 1 first.
    pub fn product(factors: &[StateVector]) -> Result<Self> {
        let first = factors.first().ok_or(Error::NoWires)?;
        let d = first.d;
        let wires = factors.iter().map(|f| f.wires).sum();
        d.register_size(wires)?;
        let mut amps = vec![ONE];
        for f in factors {
            if f.d != d {
                return Err(Error::DimensionMismatch {
                    expected: d.get(),
                    found: f.d.get(),
                });
            }
            amps = amps
                .iter()
                .flat_map(|&a| f.amps.iter().map(move |&b| a * b))
                .collect();
        }
        Ok(StateVector { d, wires, amps })
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    pub fn wires(&self) -> usize {
        self.wires
    }

    pub fn amplitudes(&self) -> &[Amplitude] {
        &self.amps
    }

    pub fn len(&self) -> usize {
        self.amps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.amps.is_empty()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalized(mut self) -> Self {
        let norm = self.norm_sqr().sqrt();
        if norm > 0.0 {
            self.amps.iter_mut().for_each(|a| *a /= norm);
        }
        self
    }

    /// Largest `|a_j - b_j|` over all amplitudes.
    pub fn max_dist(&self, other: &StateVector) -> Result<f64> {
        if self.amps.len() != other.amps.len() {
            return Err(Error::DimensionMismatch {
                expected: self.amps.len(),
                found: other.amps.len(),
            });
        }
        Ok(self
            .amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }

    /// The basis label this state equals, if it is `1·|label⟩` within `tol`.
    pub fn as_basis_label(&self, tol: f64) -> Option<BasisLabel> {
        let mut found = None;
        for (j, a) in self.amps.iter().enumerate() {
            if a.norm() > tol {
                if found.is_some() || (a - ONE).norm() > tol {
                    return None;
                }
                found = Some(j);
            }
        }
        found.and_then(|j| BasisLabel::from_flat(self.d, self.wires, j).ok())
    }

    pub(crate) fn amps_mut(&mut self) -> &mut [Amplitude] {
        &mut self.amps
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Repr {
    /// Row-major entries.
    Dense(Vec<Amplitude>),
    /// `table[j]` is the row holding the 1 in column `j`.
    Permutation(Vec<usize>),
    Diagonal(Vec<Amplitude>),
}

/// A square complex matrix acting on one or more qudits.
///
/// Basis permutations keep an exact integer table, so products and
/// comparisons between them involve no floating point. Every representation
/// exposes the same dense view through [`GateMatrix::entry`].
#[derive(Debug, Clone, PartialEq)]
pub struct GateMatrix {
    dim: usize,
    repr: Repr,
}

impl GateMatrix {
    pub fn identity(dim: usize) -> Self {
        GateMatrix {
            dim,
            repr: Repr::Permutation((0..dim).collect()),
        }
    }

    pub fn from_dense(dim: usize, entries: Vec<Amplitude>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::BadMatrixLength {
                expected: dim * dim,
                found: entries.len(),
            });
        }
        if let Some(i) = entries
            .iter()
            .position(|a| !(a.re.is_finite() && a.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(GateMatrix {
            dim,
            repr: Repr::Dense(entries),
        })
    }

    /// Builds the permutation sending basis state `j` to `table[j]`.
    pub fn from_permutation(table: Vec<usize>) -> Result<Self> {
        let dim = table.len();
        let mut seen = vec![false; dim];
        for &t in &table {
            if t >= dim || std::mem::replace(&mut seen[t], true) {
                return Err(Error::NotAPermutation(dim));
            }
        }
        Ok(GateMatrix {
            dim,
            repr: Repr::Permutation(table),
        })
    }

    pub fn from_diagonal(diag: Vec<Amplitude>) -> Result<Self> {
        if let Some(i) = diag
            .iter()
            .position(|a| !(a.re.is_finite() && a.im.is_finite()))
        {
            return Err(Error::NonFinite(i));
        }
        Ok(GateMatrix {
            dim: diag.len(),
            repr: Repr::Diagonal(diag),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Exact permutation table, when this matrix is a basis permutation.
    pub fn permutation(&self) -> Option<&[usize]> {
        match &self.repr {
            Repr::Permutation(t) => Some(t),
            _ => None,
        }
    }

    pub fn diagonal(&self) -> Option<&[Amplitude]> {
        match &self.repr {
            Repr::Diagonal(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_permutation(&self) -> bool {
        matches!(self.repr, Repr::Permutation(_))
    }

    pub fn entry(&self, row: usize, col: usize) -> Amplitude {
        match &self.repr {
            Repr::Dense(e) => e[row * self.dim + col],
            Repr::Permutation(t) => {
                if t[col] == row {
                    ONE
                } else {
                    ZERO
                }
            }
            Repr::Diagonal(v) => {
                if row == col {
                    v[row]
                } else {
                    ZERO
                }
            }
        }
    }

    /// Row-major dense entries.
    pub fn to_dense(&self) -> Vec<Amplitude> {
        match &self.repr {
            Repr::Dense(e) => e.clone(),
            _ => {
                let mut out = vec![ZERO; self.dim * self.dim];
                self.scatter_into(&mut out);
                out
            }
        }
    }

    /// Same matrix, stored densely (drops any structural fast path).
    pub fn densified(&self) -> Self {
        GateMatrix {
            dim: self.dim,
            repr: Repr::Dense(self.to_dense()),
        }
    }

    fn scatter_into(&self, out: &mut [Amplitude]) {
        let dim = self.dim;
        match &self.repr {
            Repr::Dense(e) => out.copy_from_slice(e),
            Repr::Permutation(t) => t
                .iter()
                .enumerate()
                .for_each(|(j, &r)| out[r * dim + j] = ONE),
            Repr::Diagonal(v) => v
                .iter()
                .enumerate()
                .for_each(|(j, &a)| out[j * dim + j] = a),
        }
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let repr = match &self.repr {
            Repr::Permutation(t) => {
                let mut inv = vec![0; t.len()];
                t.iter().enumerate().for_each(|(j, &r)| inv[r] = j);
                Repr::Permutation(inv)
            }
            Repr::Diagonal(v) => Repr::Diagonal(v.iter().map(|a| a.conj()).collect()),
            Repr::Dense(e) => {
                let n = self.dim;
                let mut out = vec![ZERO; n * n];
                for r in 0..n {
                    for c in 0..n {
                        out[c * n + r] = e[r * n + c].conj();
                    }
                }
                Repr::Dense(out)
            }
        };
        GateMatrix {
            dim: self.dim,
            repr,
        }
    }

    /// Matrix product `self · rhs` (`rhs` acts first).
    pub fn mul(&self, rhs: &GateMatrix) -> Result<Self> {
        self.check_same_dim(rhs)?;
        let n = self.dim;
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Permutation(a), Repr::Permutation(b)) => {
                Repr::Permutation(b.iter().map(|&k| a[k]).collect())
            }
            (Repr::Diagonal(a), Repr::Diagonal(b)) => {
                Repr::Diagonal(a.iter().zip(b).map(|(x, y)| x * y).collect())
            }
            _ => {
                let b = rhs.to_dense();
                let mut out = vec![ZERO; n * n];
                match &self.repr {
                    Repr::Permutation(a) => {
                        for (k, &i) in a.iter().enumerate() {
                            out[i * n..(i + 1) * n].copy_from_slice(&b[k * n..(k + 1) * n]);
                        }
                    }
                    Repr::Diagonal(a) => {
                        for (i, &s) in a.iter().enumerate() {
                            for (o, x) in out[i * n..(i + 1) * n].iter_mut().zip(&b[i * n..]) {
                                *o = s * x;
                            }
                        }
                    }
                    Repr::Dense(a) => {
                        for i in 0..n {
                            let row = &mut out[i * n..(i + 1) * n];
                            for k in 0..n {
                                let s = a[i * n + k];
                                if s == ZERO {
                                    continue;
                                }
                                for (o, x) in row.iter_mut().zip(&b[k * n..(k + 1) * n]) {
                                    *o += s * x;
                                }
                            }
                        }
                    }
                }
                Repr::Dense(out)
            }
        };
        Ok(GateMatrix { dim: n, repr })
    }

    /// Kronecker product `self ⊗ rhs`; `self` occupies the leading digits.
    pub fn kron(&self, rhs: &GateMatrix) -> Self {
        let (na, nb) = (self.dim, rhs.dim);
        let dim = na * nb;
        let repr = match (&self.repr, &rhs.repr) {
            (Repr::Permutation(a), Repr::Permutation(b)) => {
                Repr::Permutation((0..dim).map(|j| a[j / nb] * nb + b[j % nb]).collect())
            }
            (Repr::Diagonal(a), Repr::Diagonal(b)) => {
                Repr::Diagonal((0..dim).map(|j| a[j / nb] * b[j % nb]).collect())
            }
            _ => {
                let mut out = vec![ZERO; dim * dim];
                for r in 0..dim {
                    for c in 0..dim {
                        out[r * dim + c] = self.entry(r / nb, c / nb) * rhs.entry(r % nb, c % nb);
                    }
                }
                Repr::Dense(out)
            }
        };
        GateMatrix { dim, repr }
    }

    /// Matrix-vector product, using the permutation or diagonal fast path
    /// when one is available.
    pub fn apply(&self, state: &StateVector) -> Result<StateVector> {
        self.check_state(state)?;
        let amps = state.amplitudes();
        let out = match &self.repr {
            Repr::Permutation(t) => {
                let mut out = vec![ZERO; self.dim];
                t.iter().zip(amps).for_each(|(&r, &a)| out[r] = a);
                out
            }
            Repr::Diagonal(v) => v.iter().zip(amps).map(|(x, a)| x * a).collect(),
            Repr::Dense(_) => return self.apply_dense(state),
        };
        Ok(StateVector {
            d: state.d,
            wires: state.wires,
            amps: out,
        })
    }

    /// Matrix-vector product through the dense view only.
    pub fn apply_dense(&self, state: &StateVector) -> Result<StateVector> {
        self.check_state(state)?;
        let amps = state.amplitudes();
        let out = (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.entry(r, c) * amps[c]).sum())
            .collect();
        Ok(StateVector {
            d: state.d,
            wires: state.wires,
            amps: out,
        })
    }

    /// Largest `|a_jk - b_jk|` over all entries. No global phase is factored out.
    pub fn max_entry_dist(&self, other: &GateMatrix) -> Result<f64> {
        self.check_same_dim(other)?;
        let dist = match (&self.repr, &other.repr) {
            (Repr::Permutation(a), Repr::Permutation(b)) => {
                if a == b {
                    0.0
                } else {
                    1.0
                }
            }
            (Repr::Diagonal(a), Repr::Diagonal(b)) => a
                .iter()
                .zip(b)
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max),
            _ => {
                let n = self.dim;
                let mut worst = 0.0f64;
                for r in 0..n {
                    for c in 0..n {
                        worst = worst.max((self.entry(r, c) - other.entry(r, c)).norm());
                    }
                }
                worst
            }
        };
        Ok(dist)
    }

    /// `max_entry_dist(M†M, I)`.
    pub fn unitarity_deviation(&self) -> f64 {
        let product = self
            .dagger()
            .mul(self)
            .expect("a matrix and its adjoint share a dimension");
        product
            .max_entry_dist(&GateMatrix::identity(self.dim))
            .expect("same dimension")
    }

    fn check_same_dim(&self, other: &GateMatrix) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        Ok(())
    }

    fn check_state(&self, state: &StateVector) -> Result<()> {
        if state.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: state.len(),
            });
        }
        Ok(())
    }

    /// Entries of `row` that are not exactly zero, as `(column, value)`.
    pub(crate) fn row_nonzeros(&self, row: usize) -> Vec<(usize, Amplitude)> {
        match &self.repr {
            Repr::Dense(e) => e[row * self.dim..(row + 1) * self.dim]
                .iter()
                .enumerate()
                .filter(|(_, a)| **a != ZERO)
                .map(|(c, &a)| (c, a))
                .collect(),
            _ => (0..self.dim)
                .map(|c| (c, self.entry(row, c)))
                .filter(|(_, a)| *a != ZERO)
                .collect(),
        }
    }
}

/// `max_entry_dist` as a free function.
pub fn max_entry_dist(a: &GateMatrix, b: &GateMatrix) -> Result<f64> {
    a.max_entry_dist(b)
}
