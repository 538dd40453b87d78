use super::gate::{Gate, GroupKind};
use super::RevsimError;

/// What a register's wires are for. Ancilla wires are allocated in |0> and
/// must be returned to |0>; garbage wires hold data-dependent values that
/// are only uncomputed when their parent subroutine is uncomputed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegisterKind {
    Input,
    Ancilla,
    Garbage,
    ConstantClassical,
}

/// Which subroutine produced a garbage register (provenance byte).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum SubroutineTag {
    None = 0,
    MontgomeryMul = 1,
    Kaliski = 2,
    EcPointAdd = 3,
    BatchInverse = 4,
    Lookup = 5,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RegisterId(pub usize);

/// Named, ordered list of wires. Every wire belongs to exactly one register;
/// registers never alias.
#[derive(Debug, Clone)]
pub struct Register {
    pub id: RegisterId,
    pub name: String,
    pub kind: RegisterKind,
    pub wires: Vec<u32>,
    pub provenance: SubroutineTag,
}

impl Register {
    pub fn width(&self) -> usize {
        self.wires.len()
    }

    pub fn wire(&self, i: usize) -> u32 {
        self.wires[i]
    }
}

/// An ordered gate list over named registers.
#[derive(Debug, Clone, Default)]
pub struct Circuit {
    pub(crate) wire_count: u32,
    pub(crate) registers: Vec<Register>,
    pub(crate) gates: Vec<Gate>,
}

impl Circuit {
    pub fn wire_count(&self) -> u32 {
        self.wire_count
    }

    pub fn gates(&self) -> &[Gate] {
        &self.gates
    }

    pub fn registers(&self) -> &[Register] {
        &self.registers
    }

    pub fn register(&self, id: RegisterId) -> &Register {
        &self.registers[id.0]
    }

    pub fn registers_of_kind(&self, kind: RegisterKind) -> impl Iterator<Item = &Register> {
        self.registers.iter().filter(move |r| r.kind == kind)
    }

    /// Total wires across registers of one kind.
    pub fn wires_of_kind(&self, kind: RegisterKind) -> usize {
        self.registers_of_kind(kind).map(Register::width).sum()
    }

    /// Strict structural inverse. Only defined for circuits without
    /// measurement-based erasures.
    pub fn reverse(&self) -> Result<Circuit, RevsimError> {
        let mut gates = Vec::with_capacity(self.gates.len());
        for g in self.gates.iter().rev() {
            gates.push(flip_group(g.inverse().ok_or(RevsimError::NotReversible)?));
        }
        Ok(Circuit {
            wire_count: self.wire_count,
            registers: self.registers.clone(),
            gates,
        })
    }

    /// Total uncompute transform: the gate list reversed with compute and
    /// measurement-erase roles exchanged. Running `self` then
    /// `self.uncompute()` is the identity and returns every ancilla and
    /// garbage wire to |0>.
    pub fn uncompute(&self) -> Circuit {
        let gates = self
            .gates
            .iter()
            .rev()
            .map(|g| flip_group(g.uncompute_mirror()))
            .collect();
        Circuit {
            wire_count: self.wire_count,
            registers: self.registers.clone(),
            gates,
        }
    }

    /// Concatenate a circuit over the same wire space.
    pub fn then(&self, other: &Circuit) -> Circuit {
        assert_eq!(
            self.wire_count, other.wire_count,
            "circuits must share a wire space"
        );
        let mut gates = self.gates.clone();
        gates.extend(other.gates.iter().cloned());
        Circuit {
            wire_count: self.wire_count,
            registers: self.registers.clone(),
            gates,
        }
    }
}

/// In a reversed gate list the group brackets swap roles.
fn flip_group(g: Gate) -> Gate {
    match g {
        Gate::GroupBegin(k) => Gate::GroupEnd(k),
        Gate::GroupEnd(k) => Gate::GroupBegin(k),
        other => other,
    }
}

/// Incremental circuit construction with wire allocation and a free pool
/// for transient scratch wires.
pub struct CircuitBuilder {
    circuit: Circuit,
    pool: Vec<u32>,
    pool_register: Option<RegisterId>,
    group_stack: Vec<GroupKind>,
}

impl Default for CircuitBuilder {
    fn default() -> Self {
        Self::new()
    }
}

impl CircuitBuilder {
    pub fn new() -> Self {
        Self {
            circuit: Circuit::default(),
            pool: Vec::new(),
            pool_register: None,
            group_stack: Vec::new(),
        }
    }

    fn alloc_wires(&mut self, n: usize) -> Vec<u32> {
        let start = self.circuit.wire_count;
        self.circuit.wire_count += n as u32;
        (start..self.circuit.wire_count).collect()
    }

    pub fn register(
        &mut self,
        name: impl Into<String>,
        kind: RegisterKind,
        width: usize,
    ) -> Register {
        self.register_with_provenance(name, kind, width, SubroutineTag::None)
    }

    pub fn register_with_provenance(
        &mut self,
        name: impl Into<String>,
        kind: RegisterKind,
        width: usize,
        provenance: SubroutineTag,
    ) -> Register {
        let wires = self.alloc_wires(width);
        let id = RegisterId(self.circuit.registers.len());
        let reg = Register {
            id,
            name: name.into(),
            kind,
            wires,
            provenance,
        };
        self.circuit.registers.push(reg.clone());
        reg
    }

    /// Borrow `n` scratch wires from the pool, allocating fresh ones as
    /// needed. Scratch wires must be returned to |0> before release.
    pub fn scratch(&mut self, n: usize) -> Vec<u32> {
        let mut wires = Vec::with_capacity(n);
        while wires.len() < n {
            if let Some(w) = self.pool.pop() {
                wires.push(w);
            } else {
                break;
            }
        }
        let missing = n - wires.len();
        if missing > 0 {
            let fresh = self.alloc_wires(missing);
            let pool_id = match self.pool_register {
                Some(id) => id,
                None => {
                    let id = RegisterId(self.circuit.registers.len());
                    self.circuit.registers.push(Register {
                        id,
                        name: "scratch-pool".into(),
                        kind: RegisterKind::Ancilla,
                        wires: Vec::new(),
                        provenance: SubroutineTag::None,
                    });
                    self.pool_register = Some(id);
                    id
                }
            };
            self.circuit.registers[pool_id.0]
                .wires
                .extend(fresh.iter().copied());
            wires.extend(fresh);
        }
        wires
    }

    pub fn release(&mut self, wires: impl IntoIterator<Item = u32>) {
        self.pool.extend(wires);
    }

    pub fn gate(&mut self, g: Gate) {
        self.circuit.gates.push(g);
    }

    pub fn x(&mut self, w: u32) {
        self.gate(Gate::X(w));
    }

    pub fn cx(&mut self, control: u32, target: u32) {
        self.gate(Gate::Cx { control, target });
    }

    pub fn toffoli(&mut self, c1: u32, c2: u32, target: u32) {
        self.gate(Gate::Toffoli { c1, c2, target });
    }

    pub fn ncx(&mut self, controls: Vec<(u32, bool)>, target: u32) {
        self.gate(Gate::NControlledX { controls, target });
    }

    pub fn swap(&mut self, a: u32, b: u32) {
        self.gate(Gate::Swap(a, b));
    }

    pub fn cswap(&mut self, control: u32, a: u32, b: u32) {
        self.gate(Gate::CSwap { control, a, b });
    }

    pub fn and_compute(&mut self, c1: u32, c2: u32, target: u32) {
        self.gate(Gate::AndCompute { c1, c2, target });
    }

    pub fn and_erase(&mut self, c1: u32, c2: u32, target: u32) {
        self.gate(Gate::AndUncomputeByMeasurement {
            c1,
            c2,
            target,
        });
    }

    pub fn begin_group(&mut self, kind: GroupKind) {
        self.group_stack.push(kind.clone());
        self.gate(Gate::GroupBegin(kind));
    }

    pub fn begin_subroutine(&mut self, label: impl Into<String>) {
        self.begin_group(GroupKind::Subroutine(label.into()));
    }

    pub fn end_group(&mut self) {
        let kind = self.group_stack.pop().expect("unbalanced group brackets");
        self.gate(Gate::GroupEnd(kind));
    }

    /// Append another circuit's gates, offsetting nothing: both must have
    /// been built against this builder's wire space.
    pub fn extend(&mut self, other: &Circuit) {
        assert!(other.wire_count <= self.circuit.wire_count);
        self.circuit.gates.extend(other.gates.iter().cloned());
    }

    pub fn wire_count(&self) -> u32 {
        self.circuit.wire_count
    }

    pub fn finish(self) -> Circuit {
        assert!(self.group_stack.is_empty(), "unbalanced group brackets");
        self.circuit
    }
}
