use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use super::{CircuitError, ModContext};
use crate::revsim::{Circuit, CircuitBuilder, EraseMethod, Gate, LookupTable, RegisterKind};

fn make_table(address_bits: u32, value_bits: u32, table: &[u64]) -> Result<Arc<LookupTable>, CircuitError> {
    if table.len() != 1usize << address_bits {
        return Err(CircuitError::TableLength {
            got: table.len(),
            expect: address_bits,
        });
    }
    LookupTable::new(table.to_vec(), value_bits as usize)
        .map(Arc::new)
        .map_err(|_| CircuitError::TooWide(value_bits))
}

/// QROM lookup: XOR `table[address]` into the target register.
pub fn build_lookup(
    address_bits: u32,
    value_bits: u32,
    table: &[u64],
) -> Result<Circuit, CircuitError> {
    let table = make_table(address_bits, value_bits, table)?;
    let mut b = CircuitBuilder::new();
    let addr = b.register("address", RegisterKind::Input, address_bits as usize);
    let tgt = b.register("target", RegisterKind::Input, value_bits as usize);
    b.begin_subroutine("lookup");
    b.gate(Gate::LookupWrite {
        address: addr.wires.clone(),
        target: tgt.wires.clone(),
        table,
    });
    b.end_group();
    Ok(b.finish())
}

/// Uncomputation of a lookup: measurement-assisted erasure whose cost is a
/// smaller table over half the address bits plus a controlled-SWAP network.
/// Leaves the target at zero for every address.
pub fn build_unlookup(
    address_bits: u32,
    value_bits: u32,
    table: &[u64],
) -> Result<Circuit, CircuitError> {
    let table = make_table(address_bits, value_bits, table)?;
    let mut b = CircuitBuilder::new();
    let addr = b.register("address", RegisterKind::Input, address_bits as usize);
    let tgt = b.register("target", RegisterKind::Input, value_bits as usize);
    b.begin_subroutine("unlookup");
    b.gate(Gate::LookupErase {
        address: addr.wires.clone(),
        target: tgt.wires.clone(),
        table,
        method: EraseMethod::Unlookup,
    });
    b.end_group();
    Ok(b.finish())
}

/// Classical table driving one Montgomery-multiplication step: for each
/// residue `l` of the accumulator modulo `2^w`, the entry holds
/// `(l + c(l) * p) >> w` with `c(l) = -l * p^{-1} mod 2^w`, i.e. the value
/// to add onto the shifted accumulator so that the division by `2^w` is
/// exact. Entries are below `p`.
pub fn window_reduction_table(ctx: &ModContext, window_bits: u32) -> Vec<BigUint> {
    let p = ctx.p.value();
    let modulus = BigUint::one() << window_bits;
    let p_inv = crate::modmath::biguint_inv(&(p % &modulus), &modulus)
        .expect("odd modulus is invertible mod a power of two");
    (0u64..(1 << window_bits))
        .map(|l| {
            let l = BigUint::from(l);
            let c = (&modulus - (&l * &p_inv) % &modulus) % &modulus;
            (&l + c * p) >> window_bits
        })
        .collect()
}
