use std::sync::Arc;

/// Classical lookup table backing QROM-style gates. Entries are stored as
/// little-endian integers; the target register width bounds entries to 64
/// bits, which covers every simulable circuit (count-only circuits at
/// production widths never materialize gate lists).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LookupTable {
    pub entries: Vec<u64>,
    pub address_bits: usize,
    pub value_bits: usize,
}

impl LookupTable {
    pub fn new(entries: Vec<u64>, value_bits: usize) -> Result<Self, super::RevsimError> {
        let address_bits = entries.len().trailing_zeros() as usize;
        if entries.len() != 1 << address_bits {
            return Err(super::RevsimError::TableLength {
                got: entries.len(),
                address_bits,
            });
        }
        if value_bits > 64 {
            return Err(super::RevsimError::TargetTooWide(value_bits));
        }
        Ok(Self {
            entries,
            address_bits,
            value_bits,
        })
    }
}

/// How a lookup target register is erased.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EraseMethod {
    /// Controlled-SWAP network plus a smaller table (measurement-assisted);
    /// carries the unlookup gate cost.
    Unlookup,
    /// Plain measurement with deferred fix-up; zero Toffoli cost.
    Measurement,
}

/// Group annotations let the cost engine see subroutine boundaries and let
/// the stats counter treat a run of plain Toffolis as one n-controlled unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupKind {
    /// Hierarchical subroutine label, e.g. "kaliski/iteration".
    Subroutine(String),
    /// The enclosed Toffolis count as a single n-controlled-Toffoli unit.
    ToffoliUnit,
}

/// One reversible gate. Controls carry a polarity: `(wire, true)` fires on
/// |1>, `(wire, false)` on |0>.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Gate {
    X(u32),
    Cx {
        control: u32,
        target: u32,
    },
    Toffoli {
        c1: u32,
        c2: u32,
        target: u32,
    },
    NControlledX {
        controls: Vec<(u32, bool)>,
        target: u32,
    },
    Swap(u32, u32),
    CSwap {
        control: u32,
        a: u32,
        b: u32,
    },
    /// Writes AND(c1, c2) into a fresh |0> ancilla (one Toffoli).
    AndCompute {
        c1: u32,
        c2: u32,
        target: u32,
    },
    /// Erases a wire holding AND(c1, c2) by measurement; zero Toffolis.
    AndUncomputeByMeasurement {
        c1: u32,
        c2: u32,
        target: u32,
    },
    /// Erases a wire holding the conjunction of the given polarized controls
    /// by measurement; zero Toffolis. This is the "uncompute the flag with a
    /// measurement" idiom for wide Toffolis.
    NControlledXEraseByMeasurement {
        controls: Vec<(u32, bool)>,
        target: u32,
    },
    /// XORs `table[address]` into the target register (QROM read).
    LookupWrite {
        address: Vec<u32>,
        target: Vec<u32>,
        table: Arc<LookupTable>,
    },
    /// Erases a target register holding `table[address]`.
    LookupErase {
        address: Vec<u32>,
        target: Vec<u32>,
        table: Arc<LookupTable>,
        method: EraseMethod,
    },
    GroupBegin(GroupKind),
    GroupEnd(GroupKind),
}

impl Gate {
    /// Structural inverse for unitary gates; `None` for measurement-based
    /// erasures, which have no gate-level inverse.
    pub fn inverse(&self) -> Option<Gate> {
        match self {
            Gate::X(_)
            | Gate::Cx { .. }
            | Gate::Toffoli { .. }
            | Gate::NControlledX { .. }
            | Gate::Swap(..)
            | Gate::CSwap { .. }
            | Gate::LookupWrite { .. }
            | Gate::GroupBegin(_)
            | Gate::GroupEnd(_) => Some(self.clone()),
            Gate::AndCompute { .. }
            | Gate::AndUncomputeByMeasurement { .. }
            | Gate::NControlledXEraseByMeasurement { .. }
            | Gate::LookupErase { .. } => None,
        }
    }

    /// Adjoint with compute and measurement-erase roles exchanged: the total
    /// "uncompute" transform. Self-inverse gates map to themselves.
    pub fn uncompute_mirror(&self) -> Gate {
        match self {
            Gate::AndCompute { c1, c2, target } => Gate::AndUncomputeByMeasurement {
                c1: *c1,
                c2: *c2,
                target: *target,
            },
            Gate::AndUncomputeByMeasurement { c1, c2, target } => Gate::AndCompute {
                c1: *c1,
                c2: *c2,
                target: *target,
            },
            Gate::NControlledXEraseByMeasurement { controls, target } => Gate::NControlledX {
                controls: controls.clone(),
                target: *target,
            },
            Gate::LookupErase {
                address,
                target,
                table,
                ..
            } => Gate::LookupWrite {
                address: address.clone(),
                target: target.clone(),
                table: table.clone(),
            },
            // A lookup's mirror erases by measurement: the cheap direction.
            Gate::LookupWrite {
                address,
                target,
                table,
            } => Gate::LookupErase {
                address: address.clone(),
                target: target.clone(),
                table: table.clone(),
                method: EraseMethod::Measurement,
            },
            other => other.clone(),
        }
    }
}
