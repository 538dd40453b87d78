use std::fmt::Write as _;

use super::circuit::Circuit;
use super::gate::{EraseMethod, Gate, GroupKind, LookupTable};

fn wire_list(wires: &[u32]) -> String {
    wires
        .iter()
        .map(|w| w.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Line-oriented text dump, one gate per line, for golden-file tests.
/// Lookup tables are referenced by file name; [`write_table_file`] produces
/// the matching binary.
pub fn dump_circuit(circuit: &Circuit, table_file_prefix: &str) -> String {
    let mut out = String::new();
    let mut table_idx = 0usize;
    for gate in circuit.gates() {
        match gate {
            Gate::X(w) => writeln!(out, "X {w}"),
            Gate::Cx { control, target } => writeln!(out, "CX {control} {target}"),
            Gate::Toffoli { c1, c2, target } => writeln!(out, "TOF {c1} {c2} {target}"),
            Gate::NControlledX { controls, target } => {
                let ctl = controls
                    .iter()
                    .map(|(w, pol)| format!("{}{w}", if *pol { "" } else { "!" }))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "NCX {ctl} -> {target}")
            }
            Gate::Swap(a, b) => writeln!(out, "SWAP {a} {b}"),
            Gate::CSwap { control, a, b } => writeln!(out, "CSWAP {control} {a} {b}"),
            Gate::AndCompute { c1, c2, target } => writeln!(out, "AND {c1} {c2} {target}"),
            Gate::AndUncomputeByMeasurement { c1, c2, target } => {
                writeln!(out, "ANDMEAS {c1} {c2} {target}")
            }
            Gate::NControlledXEraseByMeasurement { controls, target } => {
                let ctl = controls
                    .iter()
                    .map(|(w, pol)| format!("{}{w}", if *pol { "" } else { "!" }))
                    .collect::<Vec<_>>()
                    .join(" ");
                writeln!(out, "NCXMEAS {ctl} -> {target}")
            }
            Gate::LookupWrite {
                address, target, ..
            } => {
                let line = writeln!(
                    out,
                    "LOOKUP {} tgt {} {}_{}.tbl",
                    wire_list(address),
                    wire_list(target),
                    table_file_prefix,
                    table_idx
                );
                table_idx += 1;
                line
            }
            Gate::LookupErase {
                address,
                target,
                method,
                ..
            } => {
                let tag = match method {
                    EraseMethod::Unlookup => "UNLOOKUP",
                    EraseMethod::Measurement => "LOOKUPMEAS",
                };
                let line = writeln!(
                    out,
                    "{tag} {} tgt {} {}_{}.tbl",
                    wire_list(address),
                    wire_list(target),
                    table_file_prefix,
                    table_idx
                );
                table_idx += 1;
                line
            }
            Gate::GroupBegin(GroupKind::Subroutine(label)) => writeln!(out, "BEGIN {label}"),
            Gate::GroupEnd(GroupKind::Subroutine(label)) => writeln!(out, "END {label}"),
            Gate::GroupBegin(GroupKind::ToffoliUnit) => writeln!(out, "BEGIN tofgroup"),
            Gate::GroupEnd(GroupKind::ToffoliUnit) => writeln!(out, "END tofgroup"),
        }
        .expect("write to string");
    }
    out
}

/// Binary table file: little-endian fixed-width rows, one per entry. Row
/// width is the entry width rounded up to whole bytes.
pub fn write_table_file(table: &LookupTable) -> Vec<u8> {
    let row_bytes = table.value_bits.div_ceil(8).max(1);
    let mut out = Vec::with_capacity(table.entries.len() * row_bytes);
    for &e in &table.entries {
        out.extend_from_slice(&e.to_le_bytes()[..row_bytes]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::revsim::{CircuitBuilder, RegisterKind};

    #[test]
    fn dump_matches_golden_lines() {
        let mut b = CircuitBuilder::new();
        let r = b.register("r", RegisterKind::Input, 3);
        b.begin_subroutine("demo");
        b.toffoli(r.wire(0), r.wire(1), r.wire(2));
        b.swap(r.wire(0), r.wire(2));
        b.end_group();
        let text = dump_circuit(&b.finish(), "demo");
        assert_eq!(text, "BEGIN demo\nTOF 0 1 2\nSWAP 0 2\nEND demo\n");
    }

    #[test]
    fn table_rows_are_fixed_width() {
        let t = LookupTable::new(vec![0x1ff, 1, 2, 3], 9).unwrap();
        let bytes = write_table_file(&t);
        assert_eq!(bytes.len(), 8);
        assert_eq!(&bytes[0..2], &[0xff, 0x01]);
    }
}
