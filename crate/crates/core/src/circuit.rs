//! Circuits over a register of qudits, their unitaries, and the builders for
//! the SWAP and decomposition circuits.
//!
//! Wires are numbered from 1 (the top wire, the most significant label
//! digit). A circuit's op list is in temporal order: the first op acts first.

use crate::algebra::{Amplitude, Dimension, GateMatrix, StateVector};
use crate::error::{Error, Result};
use crate::gates::GateKind;

/// A gate placed on specific wires. For two-qudit gates the control comes
/// first, so `CX̃_{2,1}` is `GateOp::new(d, CxTilde, [2, 1])`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GateOp {
    kind: GateKind,
    wires: Vec<usize>,
    d: Dimension,
}

impl GateOp {
    pub fn new(d: Dimension, kind: GateKind, wires: impl Into<Vec<usize>>) -> Result<Self> {
        let wires = wires.into();
        if wires.len() != kind.arity() {
            return Err(Error::ArityMismatch {
                gate: kind.mnemonic(),
                expected: kind.arity(),
                found: wires.len(),
            });
        }
        if let Some(&w) = wires.iter().find(|&&w| w == 0) {
            return Err(Error::WireOutOfRange { wire: w, wires: 0 });
        }
        for (i, w) in wires.iter().enumerate() {
            if wires[..i].contains(w) {
                return Err(Error::DuplicateWire(*w));
            }
        }
        Ok(GateOp { kind, wires, d })
    }

    pub fn kind(&self) -> GateKind {
        self.kind
    }

    pub fn wires(&self) -> &[usize] {
        &self.wires
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    fn check_wires(&self, n: usize) -> Result<()> {
        match self.wires.iter().find(|&&w| w > n) {
            Some(&wire) => Err(Error::WireOutOfRange { wire, wires: n }),
            None => Ok(()),
        }
    }
}

/// Where a gate's local basis sits inside the full register.
///
/// `offsets[l]` is the flat displacement of local label `l` (op wires as
/// digits, first wire most significant); `bases` enumerates every flat index
/// whose digits on the op wires are all zero.
struct Placement {
    offsets: Vec<usize>,
    bases: Vec<usize>,
}

impl Placement {
    fn new(d: usize, n: usize, wires: &[usize]) -> Self {
        let stride = |w: usize| d.pow((n - w) as u32);
        let mut offsets = vec![0usize];
        for &w in wires {
            offsets = offsets
                .iter()
                .flat_map(|&o| (0..d).map(move |x| o + x * stride(w)))
                .collect();
        }
        let mut bases = vec![0usize];
        for w in (1..=n).filter(|w| !wires.contains(w)) {
            bases = bases
                .iter()
                .flat_map(|&b| (0..d).map(move |x| b + x * stride(w)))
                .collect();
        }
        Placement { offsets, bases }
    }
}

/// Precomputed action of one op on a register, applied in place.
enum LocalAction {
    Permute(Vec<usize>),
    Phase(Vec<Amplitude>),
    Dense(Vec<Vec<(usize, Amplitude)>>),
}

struct CompiledOp {
    placement: Placement,
    action: LocalAction,
}

impl CompiledOp {
    fn new(op: &GateOp, n: usize) -> Self {
        let m = op.kind.matrix(op.d);
        let action = if let Some(t) = m.permutation() {
            LocalAction::Permute(t.to_vec())
        } else if let Some(v) = m.diagonal() {
            LocalAction::Phase(v.to_vec())
        } else {
            LocalAction::Dense((0..m.dim()).map(|r| m.row_nonzeros(r)).collect())
        };
        CompiledOp {
            placement: Placement::new(op.d.get(), n, &op.wires),
            action,
        }
    }

    fn apply(&self, amps: &mut [Amplitude], scratch: &mut Vec<Amplitude>) {
        let offs = &self.placement.offsets;
        for &base in &self.placement.bases {
            match &self.action {
                LocalAction::Phase(v) => {
                    for (o, p) in offs.iter().zip(v) {
                        amps[base + o] *= p;
                    }
                }
                LocalAction::Permute(t) => {
                    scratch.clear();
                    scratch.extend(offs.iter().map(|o| amps[base + o]));
                    for (l, &target) in t.iter().enumerate() {
                        amps[base + offs[target]] = scratch[l];
                    }
                }
                LocalAction::Dense(rows) => {
                    scratch.clear();
                    scratch.extend(offs.iter().map(|o| amps[base + o]));
                    if scratch.iter().all(|a| *a == Amplitude::new(0.0, 0.0)) {
                        continue;
                    }
                    for (o, row) in offs.iter().zip(rows) {
                        amps[base + o] = row.iter().map(|&(c, a)| a * scratch[c]).sum();
                    }
                }
            }
        }
    }
}

/// The `d^n × d^n` matrix of `op` acting on the named wires of an `n`-wire
/// register and as the identity elsewhere.
///
/// Permutation gates embed to exact permutation tables, phase gates to
/// diagonals; everything else is built densely.
pub fn embed(op: &GateOp, n: usize) -> Result<GateMatrix> {
    op.check_wires(n)?;
    let size = op.d.register_size(n)?;
    let local = op.kind.matrix(op.d);
    let Placement { offsets, bases } = Placement::new(op.d.get(), n, &op.wires);
    if let Some(t) = local.permutation() {
        let mut table = vec![0; size];
        for &b in &bases {
            for (l, &target) in t.iter().enumerate() {
                table[b + offsets[l]] = b + offsets[target];
            }
        }
        return GateMatrix::from_permutation(table);
    }
    if let Some(v) = local.diagonal() {
        let mut diag = vec![Amplitude::new(0.0, 0.0); size];
        for &b in &bases {
            for (o, &p) in offsets.iter().zip(v) {
                diag[b + o] = p;
            }
        }
        return GateMatrix::from_diagonal(diag);
    }
    let mut entries = vec![Amplitude::new(0.0, 0.0); size * size];
    for &b in &bases {
        for (r, ro) in offsets.iter().enumerate() {
            for (c, co) in offsets.iter().enumerate() {
                entries[(b + ro) * size + b + co] = local.entry(r, c);
            }
        }
    }
    GateMatrix::from_dense(size, entries)
}

/// An ordered list of gates over `n` qudits of dimension `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    d: Dimension,
    n: usize,
    ops: Vec<GateOp>,
}

impl Circuit {
    pub fn new(d: Dimension, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoWires);
        }
        Ok(Circuit {
            d,
            n,
            ops: Vec::new(),
        })
    }

    pub fn dimension(&self) -> Dimension {
        self.d
    }

    pub fn wires(&self) -> usize {
        self.n
    }

    pub fn ops(&self) -> &[GateOp] {
        &self.ops
    }

    pub fn len(&self) -> usize {
        self.ops.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ops.is_empty()
    }

    /// Appends `kind` on `wires` (control first).
    pub fn push(&mut self, kind: GateKind, wires: impl Into<Vec<usize>>) -> Result<&mut Self> {
        let op = GateOp::new(self.d, kind, wires)?;
        self.push_op(op)
    }

    pub fn push_op(&mut self, op: GateOp) -> Result<&mut Self> {
        if op.d != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d.get(),
                found: op.d.get(),
            });
        }
        op.check_wires(self.n)?;
        self.ops.push(op);
        Ok(self)
    }

    /// Builder-style [`Circuit::push`].
    pub fn with(mut self, kind: GateKind, wires: impl Into<Vec<usize>>) -> Result<Self> {
        self.push(kind, wires)?;
        Ok(self)
    }

    /// This circuit followed by `next`.
    pub fn then(&self, next: &Circuit) -> Result<Circuit> {
        if (next.d, next.n) != (self.d, self.n) {
            return Err(Error::DimensionMismatch {
                expected: self.d.get().pow(self.n as u32),
                found: next.d.get().pow(next.n as u32),
            });
        }
        let mut out = self.clone();
        out.ops.extend(next.ops.iter().cloned());
        Ok(out)
    }

    /// True when every op is a basis permutation.
    pub fn is_permutation_only(&self) -> bool {
        self.ops.iter().all(|op| op.kind.is_permutation())
    }

    /// Unitary of the whole circuit: `U = U_last ⋯ U_first`.
    ///
    /// Permutation-only circuits compose exact tables. Anything else is
    /// evaluated column by column through [`Circuit::simulate`], which
    /// equals the product of embedded ops without forming dense
    /// `d^n × d^n` factors.
    pub fn unitary(&self) -> Result<GateMatrix> {
        let size = self.d.register_size(self.n)?;
        if self.is_permutation_only() {
            let mut acc = GateMatrix::identity(size);
            for op in &self.ops {
                acc = embed(op, self.n)?.mul(&acc)?;
            }
            return Ok(acc);
        }
        let compiled = self.compile();
        let zero = Amplitude::new(0.0, 0.0);
        // columns are independent; each worker fills a contiguous block
        let workers = if size < 256 {
            1
        } else {
            std::thread::available_parallelism()
                .map_or(1, |n| n.get())
                .min(size)
        };
        let block = size.div_ceil(workers);
        let columns: Vec<Vec<Amplitude>> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..size)
                .step_by(block)
                .map(|start| {
                    let compiled = &compiled;
                    scope.spawn(move || {
                        let end = (start + block).min(size);
                        let mut out = Vec::with_capacity((end - start) * size);
                        let mut column = vec![zero; size];
                        let mut scratch = Vec::new();
                        for j in start..end {
                            column.fill(zero);
                            column[j] = Amplitude::new(1.0, 0.0);
                            for op in compiled {
                                op.apply(&mut column, &mut scratch);
                            }
                            out.extend_from_slice(&column);
                        }
                        out
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("column worker panicked"))
                .collect()
        });
        let mut entries = vec![zero; size * size];
        for (j, column) in columns.iter().flat_map(|b| b.chunks(size)).enumerate() {
            for (r, a) in column.iter().enumerate() {
                entries[r * size + j] = *a;
            }
        }
        GateMatrix::from_dense(size, entries)
    }

    /// Runs `state` through the ops one at a time.
    pub fn simulate(&self, state: &StateVector) -> Result<StateVector> {
        let size = self.d.register_size(self.n)?;
        if state.dimension() != self.d || state.wires() != self.n {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: state.len(),
            });
        }
        let mut out = state.clone();
        let mut scratch = Vec::new();
        for op in self.compile() {
            op.apply(out.amps_mut(), &mut scratch);
        }
        Ok(out)
    }

    fn compile(&self) -> Vec<CompiledOp> {
        self.ops
            .iter()
            .map(|op| CompiledOp::new(op, self.n))
            .collect()
    }

    /// Replaces every `CX̃` with the given three-gate decomposition on the
    /// same control and target; other ops are kept.
    pub fn expand_cx_tilde(&self, decomposition: CxTildeDecomposition) -> Circuit {
        let (fourier, phase) = decomposition.gates();
        let mut out = Circuit::new(self.d, self.n).expect("n >= 1");
        for op in &self.ops {
            if op.kind == GateKind::CxTilde {
                let (control, target) = (op.wires[0], op.wires[1]);
                out.push(fourier, [target])
                    .and_then(|c| c.push(phase, [control, target]))
                    .and_then(|c| c.push(fourier, [target]))
                    .expect("wires already validated");
            } else {
                out.ops.push(op.clone());
            }
        }
        out
    }
}

/// The two ways of writing `CX̃` with Fourier transforms and a controlled phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CxTildeDecomposition {
    /// `QFT₂ · CZ_d · QFT₂`
    Fourier,
    /// `IQFT₂ · CZ_d† · IQFT₂`
    InverseFourier,
}

impl CxTildeDecomposition {
    fn gates(self) -> (GateKind, GateKind) {
        match self {
            CxTildeDecomposition::Fourier => (GateKind::Qft, GateKind::CzD),
            CxTildeDecomposition::InverseFourier => (GateKind::Iqft, GateKind::CzDDag),
        }
    }
}

fn two_wire(d: Dimension, ops: &[(GateKind, &[usize])]) -> Circuit {
    let mut c = Circuit::new(d, 2).expect("two wires");
    for (kind, wires) in ops {
        c.push(*kind, *wires)
            .expect("builder ops are valid on two wires");
    }
    c
}

/// Three `CX̃` gates with controls on wires 2, 1, 2.
pub fn swap_circuit(d: Dimension) -> Circuit {
    use GateKind::CxTilde;
    two_wire(
        d,
        &[(CxTilde, &[2, 1]), (CxTilde, &[1, 2]), (CxTilde, &[2, 1])],
    )
}

/// The upside-down SWAP circuit: controls on wires 1, 2, 1.
pub fn swap_circuit_alt(d: Dimension) -> Circuit {
    use GateKind::CxTilde;
    two_wire(
        d,
        &[(CxTilde, &[1, 2]), (CxTilde, &[2, 1]), (CxTilde, &[1, 2])],
    )
}

/// `QFT` on the target, `CZ_d`, `QFT` on the target again.
pub fn cx_tilde_decomposition(d: Dimension) -> Circuit {
    use GateKind::{CzD, Qft};
    two_wire(d, &[(Qft, &[2]), (CzD, &[1, 2]), (Qft, &[2])])
}

/// Adjoint form of [`cx_tilde_decomposition`]; equal to it because `CX̃` is
/// an involution.
pub fn cx_tilde_decomposition_alt(d: Dimension) -> Circuit {
    use GateKind::{CzDDag, Iqft};
    two_wire(d, &[(Iqft, &[2]), (CzDDag, &[1, 2]), (Iqft, &[2])])
}

/// [`swap_circuit`] with every `CX̃` replaced by its Fourier decomposition:
/// nine elementary gates.
pub fn elementary_swap_circuit(d: Dimension) -> Circuit {
    swap_circuit(d).expand_cx_tilde(CxTildeDecomposition::Fourier)
}

/// SWAP from modular adders, a subtractor and a closing complement:
/// `(x,y) → (x,x+y) → (-y,x+y) → (-y,x) → (y,x)`.
pub fn asymmetric_swap_circuit(d: Dimension) -> Circuit {
    use GateKind::{CxD, CxDDag, XD};
    two_wire(
        d,
        &[
            (CxD, &[1, 2]),
            (CxDDag, &[2, 1]),
            (CxD, &[1, 2]),
            (XD, &[1]),
        ],
    )
}

/// Moves `|φ⟩|0⟩` to `|0⟩|φ⟩`. Not a SWAP on general inputs.
pub fn partial_swap_circuit(d: Dimension) -> Circuit {
    use GateKind::{CxD, CxDDag};
    two_wire(d, &[(CxD, &[1, 2]), (CxDDag, &[2, 1])])
}
