use super::circuit::{Circuit, Register, RegisterKind};
use super::gate::Gate;
use super::RevsimError;

/// Basis-state assignment over a circuit's wire space. Input wires must be
/// assigned explicitly; ancilla, garbage and classical-constant wires start
/// in |0>.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    bits: Vec<bool>,
    assigned: Vec<bool>,
}

impl Assignment {
    pub fn new(circuit: &Circuit) -> Self {
        let n = circuit.wire_count() as usize;
        let mut a = Self {
            bits: vec![false; n],
            assigned: vec![false; n],
        };
        for reg in circuit.registers() {
            if reg.kind != RegisterKind::Input {
                for &w in &reg.wires {
                    a.assigned[w as usize] = true;
                }
            }
        }
        a
    }

    pub fn set_bit(&mut self, wire: u32, value: bool) {
        self.bits[wire as usize] = value;
        self.assigned[wire as usize] = true;
    }

    /// Load an integer little-endian into a register.
    pub fn set_register(&mut self, reg: &Register, value: u64) {
        assert!(reg.width() >= 64 - value.leading_zeros() as usize);
        for (i, &w) in reg.wires.iter().enumerate() {
            self.set_bit(w, (value >> i) & 1 == 1);
        }
    }

    pub fn bit(&self, wire: u32) -> bool {
        self.bits[wire as usize]
    }

    /// Read a register as a little-endian integer.
    pub fn register_value(&self, reg: &Register) -> u64 {
        assert!(reg.width() <= 64);
        reg.wires
            .iter()
            .enumerate()
            .fold(0u64, |acc, (i, &w)| acc | (u64::from(self.bits[w as usize]) << i))
    }

    pub fn register_is_zero(&self, reg: &Register) -> bool {
        reg.wires.iter().all(|&w| !self.bits[w as usize])
    }

    fn check_assigned(&self, wire: u32) -> Result<(), RevsimError> {
        if self.assigned[wire as usize] {
            Ok(())
        } else {
            Err(RevsimError::UnassignedWire(wire))
        }
    }
}

fn controls_active(bits: &Assignment, controls: &[(u32, bool)]) -> Result<bool, RevsimError> {
    for &(w, polarity) in controls {
        bits.check_assigned(w)?;
        if bits.bit(w) != polarity {
            return Ok(false);
        }
    }
    Ok(true)
}

fn read_bus(bits: &Assignment, wires: &[u32]) -> Result<u64, RevsimError> {
    let mut v = 0u64;
    for (i, &w) in wires.iter().enumerate() {
        bits.check_assigned(w)?;
        v |= u64::from(bits.bit(w)) << i;
    }
    Ok(v)
}

fn xor_bus(bits: &mut Assignment, wires: &[u32], value: u64) {
    for (i, &w) in wires.iter().enumerate() {
        if (value >> i) & 1 == 1 {
            let cur = bits.bit(w);
            bits.set_bit(w, !cur);
        }
    }
}

/// Run a circuit on a basis state. Deterministic: every in-scope circuit is
/// a permutation of basis states, and every measurement-based erasure is
/// checked against the value it claims to erase.
pub fn simulate(circuit: &Circuit, initial: &Assignment) -> Result<Assignment, RevsimError> {
    let mut s = initial.clone();
    for (idx, gate) in circuit.gates().iter().enumerate() {
        apply_gate(gate, idx, &mut s)?;
    }
    Ok(s)
}

fn apply_gate(gate: &Gate, idx: usize, s: &mut Assignment) -> Result<(), RevsimError> {
    match gate {
        Gate::X(w) => {
            s.check_assigned(*w)?;
            let v = s.bit(*w);
            s.set_bit(*w, !v);
        }
        Gate::Cx { control, target } => {
            s.check_assigned(*control)?;
            s.check_assigned(*target)?;
            if s.bit(*control) {
                let v = s.bit(*target);
                s.set_bit(*target, !v);
            }
        }
        Gate::Toffoli { c1, c2, target } => {
            s.check_assigned(*c1)?;
            s.check_assigned(*c2)?;
            s.check_assigned(*target)?;
            if s.bit(*c1) && s.bit(*c2) {
                let v = s.bit(*target);
                s.set_bit(*target, !v);
            }
        }
        Gate::NControlledX { controls, target } => {
            s.check_assigned(*target)?;
            if controls_active(s, controls)? {
                let v = s.bit(*target);
                s.set_bit(*target, !v);
            }
        }
        Gate::Swap(a, b) => {
            s.check_assigned(*a)?;
            s.check_assigned(*b)?;
            let (va, vb) = (s.bit(*a), s.bit(*b));
            s.set_bit(*a, vb);
            s.set_bit(*b, va);
        }
        Gate::CSwap { control, a, b } => {
            s.check_assigned(*control)?;
            s.check_assigned(*a)?;
            s.check_assigned(*b)?;
            if s.bit(*control) {
                let (va, vb) = (s.bit(*a), s.bit(*b));
                s.set_bit(*a, vb);
                s.set_bit(*b, va);
            }
        }
        Gate::AndCompute { c1, c2, target } => {
            s.check_assigned(*c1)?;
            s.check_assigned(*c2)?;
            s.check_assigned(*target)?;
            if s.bit(*target) {
                return Err(RevsimError::DirtyAndTarget(*target));
            }
            let v = s.bit(*c1) && s.bit(*c2);
            s.set_bit(*target, v);
        }
        Gate::AndUncomputeByMeasurement { c1, c2, target } => {
            s.check_assigned(*c1)?;
            s.check_assigned(*c2)?;
            s.check_assigned(*target)?;
            if s.bit(*target) != (s.bit(*c1) && s.bit(*c2)) {
                return Err(RevsimError::BadErasure {
                    wire: *target,
                    gate: idx,
                });
            }
            s.set_bit(*target, false);
        }
        Gate::NControlledXEraseByMeasurement { controls, target } => {
            s.check_assigned(*target)?;
            let expect = controls_active(s, controls)?;
            if s.bit(*target) != expect {
                return Err(RevsimError::BadErasure {
                    wire: *target,
                    gate: idx,
                });
            }
            s.set_bit(*target, false);
        }
        Gate::LookupWrite {
            address,
            target,
            table,
        } => {
            let addr = read_bus(s, address)? as usize;
            let _ = read_bus(s, target)?;
            xor_bus(s, target, table.entries[addr]);
        }
        Gate::LookupErase {
            address,
            target,
            table,
            ..
        } => {
            let addr = read_bus(s, address)? as usize;
            let held = read_bus(s, target)?;
            if held != table.entries[addr] {
                return Err(RevsimError::BadErasure {
                    wire: target[0],
                    gate: idx,
                });
            }
            xor_bus(s, target, held);
        }
        Gate::GroupBegin(_) | Gate::GroupEnd(_) => {}
    }
    Ok(())
}

/// Result of a reversibility check.
#[derive(Debug, Clone)]
pub struct ReversibilityReport {
    pub inputs_checked: u64,
    pub exhaustive: bool,
    /// Input assignment that broke round-tripping or left a dirty ancilla.
    pub counterexample: Option<(Vec<bool>, String)>,
}

impl ReversibilityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Verify that the circuit followed by its inverse is the identity and that
/// every non-garbage ancilla ends in |0> after the forward pass alone.
/// Exhaustive over all input-wire assignments up to `width_limit` bits
/// (default 22); above that, callers should sample.
pub fn check_reversibility(circuit: &Circuit, width_limit: u32) -> ReversibilityReport {
    let input_wires: Vec<u32> = circuit
        .registers_of_kind(RegisterKind::Input)
        .flat_map(|r| r.wires.iter().copied())
        .collect();
    let width = input_wires.len() as u32;
    let exhaustive = width <= width_limit;
    let total: u64 = if exhaustive { 1 << width } else { 1 << width_limit };

    let round_trip = match circuit.reverse() {
        Ok(rev) => circuit.then(&rev),
        Err(_) => circuit.then(&circuit.uncompute()),
    };

    let mut report = ReversibilityReport {
        inputs_checked: 0,
        exhaustive,
        counterexample: None,
    };
    for x in 0..total {
        let mut init = Assignment::new(circuit);
        for (i, &w) in input_wires.iter().enumerate() {
            init.set_bit(w, (x >> i) & 1 == 1);
        }
        report.inputs_checked += 1;
        // Forward pass: ancilla cleanliness.
        match simulate(circuit, &init) {
            Ok(out) => {
                for reg in circuit.registers_of_kind(RegisterKind::Ancilla) {
                    if !out.register_is_zero(reg) {
                        report.counterexample = Some((
                            input_wires.iter().map(|&w| init.bit(w)).collect(),
                            format!("ancilla register '{}' not returned to zero", reg.name),
                        ));
                        return report;
                    }
                }
            }
            Err(e) => {
                report.counterexample = Some((
                    input_wires.iter().map(|&w| init.bit(w)).collect(),
                    format!("forward simulation failed: {e}"),
                ));
                return report;
            }
        }
        // Round trip: identity on every wire.
        match simulate(&round_trip, &init) {
            Ok(out) => {
                let identity = (0..circuit.wire_count()).all(|w| out.bit(w) == init.bit(w));
                if !identity {
                    report.counterexample = Some((
                        input_wires.iter().map(|&w| init.bit(w)).collect(),
                        "round trip is not the identity".into(),
                    ));
                    return report;
                }
            }
            Err(e) => {
                report.counterexample = Some((
                    input_wires.iter().map(|&w| init.bit(w)).collect(),
                    format!("round-trip simulation failed: {e}"),
                ));
                return report;
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revsim::{CircuitBuilder, Gate, LookupTable, RegisterKind};
    use std::sync::Arc;

    #[test]
    fn empty_circuit_is_identity() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 3);
        let c = b.finish();
        let mut init = Assignment::new(&c);
        init.set_register(&reg, 5);
        let out = simulate(&c, &init).unwrap();
        assert_eq!(out.register_value(&reg), 5);
    }

    #[test]
    fn toffoli_truth_table() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 3);
        b.toffoli(reg.wire(0), reg.wire(1), reg.wire(2));
        let c = b.finish();
        for x in 0..8u64 {
            let mut init = Assignment::new(&c);
            init.set_register(&reg, x);
            let out = simulate(&c, &init).unwrap();
            let expect = if x & 3 == 3 { x ^ 4 } else { x };
            assert_eq!(out.register_value(&reg), expect);
        }
        // (1,1,0) -> (1,1,1)
        let mut init = Assignment::new(&c);
        init.set_register(&reg, 3);
        assert_eq!(simulate(&c, &init).unwrap().register_value(&reg), 7);
    }

    #[test]
    fn lookup_indexes_table() {
        let mut b = CircuitBuilder::new();
        let addr = b.register("addr", RegisterKind::Input, 2);
        let tgt = b.register("tgt", RegisterKind::Ancilla, 3);
        let table = Arc::new(LookupTable::new(vec![3, 1, 4, 1], 3).unwrap());
        b.gate(Gate::LookupWrite {
            address: addr.wires.clone(),
            target: tgt.wires.clone(),
            table,
        });
        let c = b.finish();
        let mut init = Assignment::new(&c);
        init.set_register(&addr, 2);
        let out = simulate(&c, &init).unwrap();
        assert_eq!(out.register_value(&tgt), 4);
    }

    #[test]
    fn unassigned_input_is_error() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 1);
        b.x(reg.wire(0));
        let c = b.finish();
        let init = Assignment::new(&c);
        assert!(matches!(
            simulate(&c, &init),
            Err(RevsimError::UnassignedWire(_))
        ));
    }

    #[test]
    fn bad_and_erasure_is_hard_error() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 2);
        let anc = b.register("anc", RegisterKind::Ancilla, 1);
        // Erase a wire that does NOT hold the AND of its controls.
        b.gate(Gate::AndUncomputeByMeasurement {
            c1: reg.wire(0),
            c2: reg.wire(1),
            target: anc.wire(0),
        });
        let c = b.finish();
        let mut init = Assignment::new(&c);
        init.set_register(&reg, 3);
        assert!(matches!(
            simulate(&c, &init),
            Err(RevsimError::BadErasure { .. })
        ));
    }

    #[test]
    fn x_then_x_reverses_exhaustively() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 1);
        b.x(reg.wire(0));
        let c = b.finish();
        let report = check_reversibility(&c, 22);
        assert!(report.passed());
        assert!(report.exhaustive);
        assert_eq!(report.inputs_checked, 2);
    }

    #[test]
    fn reverse_of_reverse_is_structural_identity() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 3);
        b.begin_subroutine("demo");
        b.x(reg.wire(0));
        b.cx(reg.wire(0), reg.wire(1));
        b.toffoli(reg.wire(0), reg.wire(1), reg.wire(2));
        b.end_group();
        let c = b.finish();
        let rr = c.reverse().unwrap().reverse().unwrap();
        assert_eq!(c.gates(), rr.gates());
    }

    #[test]
    fn and_pair_round_trips_and_uncompute_mirrors() {
        let mut b = CircuitBuilder::new();
        let reg = b.register("in", RegisterKind::Input, 2);
        let anc = b.register("t", RegisterKind::Ancilla, 1);
        let g = b.register("g", RegisterKind::Garbage, 1);
        b.and_compute(reg.wire(0), reg.wire(1), anc.wire(0));
        b.cx(anc.wire(0), g.wire(0));
        b.and_erase(reg.wire(0), reg.wire(1), anc.wire(0));
        let c = b.finish();
        // Strict reversal is unavailable once measurement erasures appear,
        // but the uncompute mirror round-trips.
        assert!(c.reverse().is_err());
        let report = check_reversibility(&c, 22);
        assert!(report.passed(), "{:?}", report.counterexample);
    }
}
