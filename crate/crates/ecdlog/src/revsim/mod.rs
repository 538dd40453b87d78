//! Reversible-gate intermediate representation, basis-state simulator, and
//! gate-statistics counters.
//!
//! Every circuit in this crate is a permutation of computational basis
//! states; there are no amplitudes anywhere. Measurement shows up only as
//! *erasure*: a wire whose value is a known function of the surviving
//! registers may be measured away at zero Toffoli cost, with the Clifford
//! fix-up left implicit. The simulator checks the known-function condition
//! on every erasure, so a construction bug surfaces as a hard error instead
//! of a silently wrong state.

mod circuit;
mod dump;
mod gate;
mod sim;
mod stats;

pub use circuit::{Circuit, CircuitBuilder, Register, RegisterId, RegisterKind, SubroutineTag};
pub use dump::{dump_circuit, write_table_file};
pub use gate::{EraseMethod, Gate, GroupKind, LookupTable};
pub use sim::{check_reversibility, simulate, Assignment, ReversibilityReport};
pub use stats::{count_stats, GateStats};

/// Errors from simulation or structural operations on circuits.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RevsimError {
    #[error("wire {0} read before assignment")]
    UnassignedWire(u32),
    #[error("AndCompute target wire {0} is not a fresh |0> ancilla")]
    DirtyAndTarget(u32),
    #[error(
        "measurement-based erasure failed: wire {wire} does not hold the expected value (gate #{gate})"
    )]
    BadErasure { wire: u32, gate: usize },
    #[error("lookup table length {got} does not match 2^{address_bits} addresses")]
    TableLength { got: usize, address_bits: usize },
    #[error("lookup target width {0} exceeds the 64-bit table entry limit")]
    TargetTooWide(usize),
    #[error("cannot structurally reverse a circuit containing measurement-based erasures")]
    NotReversible,
    #[error("unbalanced group annotations")]
    UnbalancedGroups,
}
