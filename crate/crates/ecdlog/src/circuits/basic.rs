use num_bigint::BigUint;
use num_traits::One;

use super::primitives::{add_into, cmp_flag, const_add, eq_flag};
use crate::revsim::{Circuit, CircuitBuilder, RegisterKind};

/// In-place adder: registers `a`, `b` of `n` bits each; `b <- a + b mod 2^n`.
pub fn build_adder(n: u32) -> Circuit {
    assert!(n >= 2);
    let mut b = CircuitBuilder::new();
    let ar = b.register("a", RegisterKind::Input, n as usize);
    let br = b.register("b", RegisterKind::Input, n as usize);
    b.begin_subroutine("adder");
    add_into(&mut b, &ar.wires, &br.wires);
    b.end_group();
    b.finish()
}

/// `x <- x + constant mod 2^n`.
pub fn build_constant_adder(n: u32, constant: &BigUint) -> Circuit {
    assert!(n >= 2);
    let mut b = CircuitBuilder::new();
    let xr = b.register("x", RegisterKind::Input, n as usize);
    b.begin_subroutine("constant_adder");
    const_add(&mut b, constant, &xr.wires);
    b.end_group();
    b.finish()
}

/// Comparator: `flag ^= [a < b]`, preserving both operands.
pub fn build_comparator(n: u32) -> Circuit {
    assert!(n >= 2);
    let mut b = CircuitBuilder::new();
    let ar = b.register("a", RegisterKind::Input, n as usize);
    let br = b.register("b", RegisterKind::Input, n as usize);
    let flag = b.register("flag", RegisterKind::Input, 1);
    b.begin_subroutine("comparator");
    cmp_flag(&mut b, &ar.wires, &br.wires, flag.wire(0), true, None);
    b.end_group();
    b.finish()
}

/// Equality check: `flag ^= [a == b]` via one n-controlled Toffoli
/// conjugated by CNOTs.
pub fn build_equality_check(n: u32) -> Circuit {
    assert!(n >= 2);
    let mut b = CircuitBuilder::new();
    let ar = b.register("a", RegisterKind::Input, n as usize);
    let br = b.register("b", RegisterKind::Input, n as usize);
    let flag = b.register("flag", RegisterKind::Input, 1);
    b.begin_subroutine("equality_check");
    eq_flag(&mut b, &ar.wires, &br.wires, flag.wire(0), false);
    b.end_group();
    b.finish()
}

/// Two's-complement negation: flip all bits, then increment.
pub fn build_negation(n: u32) -> Circuit {
    assert!(n >= 2);
    let mut b = CircuitBuilder::new();
    let xr = b.register("x", RegisterKind::Input, n as usize);
    b.begin_subroutine("negation");
    for &w in &xr.wires {
        b.x(w);
    }
    const_add(&mut b, &BigUint::one(), &xr.wires);
    b.end_group();
    b.finish()
}

/// `x <- x + 1 mod 2^n`.
pub fn build_increment(n: u32) -> Circuit {
    assert!(n >= 2);
    let mut b = CircuitBuilder::new();
    let xr = b.register("x", RegisterKind::Input, n as usize);
    b.begin_subroutine("increment");
    const_add(&mut b, &BigUint::one(), &xr.wires);
    b.end_group();
    b.finish()
}
