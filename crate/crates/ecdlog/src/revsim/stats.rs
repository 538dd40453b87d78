use std::collections::BTreeMap;
use std::ops::Add;

use super::circuit::Circuit;
use super::gate::{EraseMethod, Gate, GroupKind};

/// Gate totals in the paper's counting convention.
///
/// `toffoli_count` is Toffoli-equivalents: a plain Toffoli and an
/// `AndCompute` each count 1, an n-controlled X counts n (the cost model
/// prices the n-controlled-Toffoli unit at n Toffolis), and measurement
/// based erasures count 0. Lookups count their unary-iteration equivalent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GateStats {
    pub toffoli_count: u64,
    pub and_count: u64,
    pub lookup_unit_count: u64,
    pub swap_count: u64,
    pub cswap_count: u64,
    pub reaction_depth_estimate: u64,
    /// n-controlled-Toffoli units by size: wide Toffolis and labeled groups
    /// of plain Toffolis, as the cost engine consumes them.
    pub ntof_units: BTreeMap<u32, u64>,
}

impl Add for GateStats {
    type Output = GateStats;

    fn add(self, rhs: GateStats) -> GateStats {
        let mut ntof_units = self.ntof_units;
        for (k, v) in rhs.ntof_units {
            *ntof_units.entry(k).or_insert(0) += v;
        }
        GateStats {
            toffoli_count: self.toffoli_count + rhs.toffoli_count,
            and_count: self.and_count + rhs.and_count,
            lookup_unit_count: self.lookup_unit_count + rhs.lookup_unit_count,
            swap_count: self.swap_count + rhs.swap_count,
            cswap_count: self.cswap_count + rhs.cswap_count,
            reaction_depth_estimate: self.reaction_depth_estimate + rhs.reaction_depth_estimate,
            ntof_units,
        }
    }
}

/// Toffoli-equivalents of a lookup over `2^w` addresses (unary iteration).
pub(crate) fn lookup_toffolis(address_bits: usize) -> u64 {
    if address_bits == 0 {
        0
    } else {
        (1u64 << address_bits).saturating_sub(2)
    }
}

/// Toffoli-equivalents of an unlookup: a smaller table over the high half of
/// the address plus a controlled-SWAP network over the low half.
pub(crate) fn unlookup_toffolis(address_bits: usize) -> u64 {
    let hi = address_bits.div_ceil(2);
    let lo = address_bits / 2;
    lookup_toffolis(hi) + (1u64 << lo)
}

/// Count gate totals. Toffolis inside a `ToffoliUnit` group are booked as a
/// single n-controlled-Toffoli unit of size n instead of n loose Toffolis
/// (same Toffoli-equivalent count, different unit bookkeeping).
pub fn count_stats(circuit: &Circuit) -> GateStats {
    let mut stats = GateStats::default();
    let mut unit_depth = 0u32;
    let mut unit_size = 0u32;
    for gate in circuit.gates() {
        match gate {
            Gate::X(_) | Gate::Cx { .. } => {}
            Gate::Toffoli { .. } => {
                stats.toffoli_count += 1;
                if unit_depth > 0 {
                    unit_size += 1;
                }
            }
            Gate::AndCompute { .. } => {
                stats.toffoli_count += 1;
                stats.and_count += 1;
                if unit_depth > 0 {
                    unit_size += 1;
                }
            }
            Gate::AndUncomputeByMeasurement { .. }
            | Gate::NControlledXEraseByMeasurement { .. } => {}
            Gate::NControlledX { controls, target: _ } => {
                let n = controls.len() as u64;
                stats.toffoli_count += n;
                *stats.ntof_units.entry(controls.len() as u32).or_insert(0) += 1;
            }
            Gate::Swap(..) => stats.swap_count += 1,
            Gate::CSwap { .. } => {
                stats.cswap_count += 1;
                stats.toffoli_count += 1;
            }
            Gate::LookupWrite { address, .. } => {
                stats.lookup_unit_count += 1;
                stats.toffoli_count += lookup_toffolis(address.len());
            }
            Gate::LookupErase {
                address, method, ..
            } => match method {
                EraseMethod::Measurement => {}
                EraseMethod::Unlookup => {
                    stats.lookup_unit_count += 1;
                    stats.toffoli_count += unlookup_toffolis(address.len());
                }
            },
            Gate::GroupBegin(GroupKind::ToffoliUnit) => {
                unit_depth += 1;
            }
            Gate::GroupEnd(GroupKind::ToffoliUnit) => {
                unit_depth -= 1;
                if unit_depth == 0 && unit_size > 0 {
                    *stats.ntof_units.entry(unit_size).or_insert(0) += 1;
                    unit_size = 0;
                }
            }
            Gate::GroupBegin(_) | Gate::GroupEnd(_) => {}
        }
    }
    // Adders dominate; their measurement-driven carry chains give a reaction
    // depth of twice the Toffoli count, which the paper adopts as the
    // general upper bound when exact chain tracking is off.
    stats.reaction_depth_estimate = 2 * stats.toffoli_count;
    stats
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revsim::{CircuitBuilder, RegisterKind};

    #[test]
    fn single_toffoli() {
        let mut b = CircuitBuilder::new();
        let r = b.register("r", RegisterKind::Input, 3);
        b.toffoli(r.wire(0), r.wire(1), r.wire(2));
        let stats = count_stats(&b.finish());
        assert_eq!(stats.toffoli_count, 1);
        assert_eq!(stats.reaction_depth_estimate, 2);
    }

    #[test]
    fn measurement_erasures_are_free() {
        let mut b = CircuitBuilder::new();
        let r = b.register("r", RegisterKind::Input, 2);
        let t = b.register("t", RegisterKind::Ancilla, 1);
        b.and_compute(r.wire(0), r.wire(1), t.wire(0));
        b.and_erase(r.wire(0), r.wire(1), t.wire(0));
        let stats = count_stats(&b.finish());
        assert_eq!(stats.toffoli_count, 1);
        assert_eq!(stats.and_count, 1);
    }

    #[test]
    fn grouped_toffolis_form_one_unit() {
        let mut b = CircuitBuilder::new();
        let r = b.register("r", RegisterKind::Input, 8);
        b.begin_group(crate::revsim::GroupKind::ToffoliUnit);
        for i in 0..4 {
            b.toffoli(r.wire(0), r.wire(i + 1), r.wire(i + 4));
        }
        b.end_group();
        let stats = count_stats(&b.finish());
        assert_eq!(stats.toffoli_count, 4);
        assert_eq!(stats.ntof_units.get(&4), Some(&1));
    }

    #[test]
    fn stats_are_additive_under_concatenation() {
        let mut b = CircuitBuilder::new();
        let r = b.register("r", RegisterKind::Input, 3);
        b.toffoli(r.wire(0), r.wire(1), r.wire(2));
        b.ncx(vec![(r.wire(0), true), (r.wire(1), false), (r.wire(2), true)], r.wire(0));
        b.swap(r.wire(0), r.wire(1));
        b.cswap(r.wire(0), r.wire(1), r.wire(2));
        let c = b.finish();
        let single = count_stats(&c);
        let double = count_stats(&c.then(&c));
        assert_eq!(double, single.clone() + single);
    }

    #[test]
    fn sixteen_item_lookup_units() {
        use crate::revsim::{Gate, LookupTable};
        use std::sync::Arc;
        let mut b = CircuitBuilder::new();
        let addr = b.register("a", RegisterKind::Input, 4);
        let tgt = b.register("t", RegisterKind::Ancilla, 4);
        let table = Arc::new(LookupTable::new((0..16).collect(), 4).unwrap());
        b.gate(Gate::LookupWrite {
            address: addr.wires.clone(),
            target: tgt.wires.clone(),
            table,
        });
        let stats = count_stats(&b.finish());
        assert_eq!(stats.lookup_unit_count, 1);
        assert_eq!(stats.toffoli_count, 14);
    }
}
