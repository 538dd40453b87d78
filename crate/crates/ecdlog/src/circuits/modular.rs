use num_bigint::BigUint;
use num_traits::One;

use super::primitives::{
    add_into, cmp_flag, const_add, const_eq_flag, const_sub, ctrl_add_into, ctrl_const_add,
};
use super::ModContext;
use crate::revsim::{Circuit, CircuitBuilder, Gate, GroupKind, Register, RegisterKind};

/// Whether a builder produces the plain circuit or the singly-controlled
/// variant with an extra 1-bit `ctrl` input register.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ControlMode {
    Plain,
    Controlled,
}

/// A two-operand modular circuit with its register handles.
pub struct ModBinaryCircuit {
    pub circuit: Circuit,
    pub x: Register,
    pub y: Register,
    pub ctrl: Option<Register>,
}

/// A one-operand modular circuit with its register handles.
pub struct ModUnaryCircuit {
    pub circuit: Circuit,
    pub x: Register,
    pub ctrl: Option<Register>,
}

/// In-place modular addition `y <- x + y mod p` on wire slices: non-modular
/// addition into an extended register, subtraction of `p`, conditional
/// add-back on the sign bit, and a comparator to clear the extra bit.
pub(crate) fn mod_add_into(
    b: &mut CircuitBuilder,
    ctx: &ModContext,
    x: &[u32],
    y: &[u32],
    ctrl: Option<u32>,
) {
    b.begin_subroutine(if ctrl.is_some() { "cmod_add" } else { "mod_add" });
    let p = ctx.p.value();
    let sign = b.scratch(1)[0];
    let mut bus = y.to_vec();
    bus.push(sign);
    match ctrl {
        None => add_into(b, x, &bus),
        Some(c) => ctrl_add_into(b, c, x, &bus),
    }
    const_sub(b, p, &bus);
    ctrl_const_add(b, sign, p, y);
    // sign = [x + y < p] = [result >= x]; a comparator clears it.
    match ctrl {
        None => cmp_flag(b, y, x, sign, false, None),
        Some(c) => {
            // When the control is off the sum never happened and the sign
            // bit is always set; flip it back for free.
            b.x(c);
            b.cx(c, sign);
            b.x(c);
            cmp_flag(b, y, x, sign, false, Some(c));
        }
    }
    b.release([sign]);
    b.end_group();
}

/// In-place modular negation `x <- -x mod p`, flag-guarded so that 0 maps
/// to 0: the flag is one wide Toffoli, the bit flips are free CNOTs (or a
/// grouped Toffoli unit when controlled), and the `p+1` addition is a
/// controlled constant adder. The flag is erased by measurement against the
/// output register.
pub(crate) fn mod_neg_into(b: &mut CircuitBuilder, ctx: &ModContext, x: &[u32], ctrl: Option<u32>) {
    b.begin_subroutine(if ctrl.is_some() { "cmod_neg" } else { "mod_neg" });
    let p_plus_1 = ctx.p.value() + BigUint::one();
    let zero = BigUint::from(0u8);
    let f = b.scratch(1)[0];
    const_eq_flag(b, x, &zero, f, false);
    b.x(f); // f = [x != 0]
    match ctrl {
        None => {
            for &w in x {
                b.cx(f, w);
            }
            ctrl_const_add(b, f, &p_plus_1, x);
        }
        Some(c) => {
            b.begin_group(GroupKind::ToffoliUnit);
            for &w in x {
                b.toffoli(c, f, w);
            }
            b.end_group();
            let g = b.scratch(1)[0];
            b.and_compute(c, f, g);
            ctrl_const_add(b, g, &p_plus_1, x);
            b.and_erase(c, f, g);
            b.release([g]);
        }
    }
    // [x != 0] is preserved by negation, so the flag can be measured away.
    b.x(f);
    const_eq_flag(b, x, &zero, f, true);
    b.release([f]);
    b.end_group();
}

/// In-place modular subtraction `y <- y - x mod p`: raw negation of the
/// subtrahend (bit flips plus `p+1`, no zero check), modular addition, and
/// uncomputation of the negation. A zero subtrahend briefly takes the bit
/// pattern `p`, which the inner addition reduces away.
pub(crate) fn mod_sub_into(
    b: &mut CircuitBuilder,
    ctx: &ModContext,
    x: &[u32],
    y: &[u32],
    ctrl: Option<u32>,
) {
    b.begin_subroutine(if ctrl.is_some() { "cmod_sub" } else { "mod_sub" });
    let p_plus_1 = ctx.p.value() + BigUint::one();
    for &w in x {
        b.x(w);
    }
    const_add(b, &p_plus_1, x);
    mod_add_into(b, ctx, x, y, ctrl);
    const_sub(b, &p_plus_1, x);
    for &w in x {
        b.x(w);
    }
    b.end_group();
}

/// In-place modular doubling `x <- 2x mod p`: the value is viewed on an
/// (n+2)-wire bus with fresh least- and most-significant bits, reduced like
/// a modular addition, and the extra top bit is cleared for free from the
/// result's parity (p is odd, so a reduction happened iff the result is
/// odd). Ends with a free swap cascade back into the register wires.
pub(crate) fn mod_dbl_into(b: &mut CircuitBuilder, ctx: &ModContext, x: &[u32]) {
    b.begin_subroutine("mod_dbl");
    let p = ctx.p.value();
    let zm = b.scratch(2);
    let (z, m) = (zm[0], zm[1]);
    let mut bus = vec![z];
    bus.extend_from_slice(x);
    bus.push(m);
    const_sub(b, p, &bus);
    // m = [2x < p]; add p back onto the low n+1 bits when set.
    ctrl_const_add(b, m, p, &bus[..bus.len() - 1]);
    // Parity clears the top: no reduction iff the result is even (z = 0).
    b.x(z);
    b.cx(z, m);
    b.x(z);
    // Shift the value down one position into the register wires.
    for &w in x {
        b.swap(z, w);
    }
    b.release(zm);
    b.end_group();
}

fn finish_binary(ctx: &ModContext, mode: ControlMode, op: &str) -> ModBinaryCircuit {
    let n = ctx.n as usize;
    let mut b = CircuitBuilder::new();
    let ctrl = match mode {
        ControlMode::Plain => None,
        ControlMode::Controlled => Some(b.register("ctrl", RegisterKind::Input, 1)),
    };
    let x = b.register("x", RegisterKind::Input, n);
    let y = b.register("y", RegisterKind::Input, n);
    let cw = ctrl.as_ref().map(|r| r.wire(0));
    match op {
        "add" => mod_add_into(&mut b, ctx, &x.wires, &y.wires, cw),
        "sub" => mod_sub_into(&mut b, ctx, &x.wires, &y.wires, cw),
        _ => unreachable!(),
    }
    ModBinaryCircuit {
        circuit: b.finish(),
        x,
        y,
        ctrl,
    }
}

/// Modular addition circuit `(x, y) -> (x, x + y mod p)`.
pub fn build_mod_add(ctx: &ModContext, mode: ControlMode) -> ModBinaryCircuit {
    finish_binary(ctx, mode, "add")
}

/// Modular subtraction circuit `(x, y) -> (x, y - x mod p)`.
pub fn build_mod_sub(ctx: &ModContext, mode: ControlMode) -> ModBinaryCircuit {
    finish_binary(ctx, mode, "sub")
}

/// Modular negation circuit `x -> -x mod p` (0 maps to 0).
pub fn build_mod_neg(ctx: &ModContext, mode: ControlMode) -> ModUnaryCircuit {
    let n = ctx.n as usize;
    let mut b = CircuitBuilder::new();
    let ctrl = match mode {
        ControlMode::Plain => None,
        ControlMode::Controlled => Some(b.register("ctrl", RegisterKind::Input, 1)),
    };
    let x = b.register("x", RegisterKind::Input, n);
    let cw = ctrl.as_ref().map(|r| r.wire(0));
    mod_neg_into(&mut b, ctx, &x.wires, cw);
    ModUnaryCircuit {
        circuit: b.finish(),
        x,
        ctrl,
    }
}

/// Modular doubling circuit `x -> 2x mod p`.
pub fn build_mod_dbl(ctx: &ModContext) -> ModUnaryCircuit {
    let n = ctx.n as usize;
    let mut b = CircuitBuilder::new();
    let x = b.register("x", RegisterKind::Input, n);
    mod_dbl_into(&mut b, ctx, &x.wires);
    ModUnaryCircuit {
        circuit: b.finish(),
        x,
        ctrl: None,
    }
}

/// Structural helper for tests: assert no gate in a circuit touches a
/// lookup (modular add/sub/neg/dbl are lookup-free).
#[cfg(test)]
pub(crate) fn lookup_free(c: &Circuit) -> bool {
    !c.gates()
        .iter()
        .any(|g| matches!(g, Gate::LookupWrite { .. } | Gate::LookupErase { .. }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmath::WideUint;
    use crate::revsim::{check_reversibility, count_stats, simulate, Assignment, RegisterKind};

    fn ctx(p: u64) -> ModContext {
        let bits = 64 - p.leading_zeros();
        ModContext::new(WideUint::from_u64(p, bits).unwrap()).unwrap()
    }

    fn check_binary(
        p: u64,
        build: impl Fn(&ModContext, ControlMode) -> ModBinaryCircuit,
        model: impl Fn(u64, u64) -> u64,
    ) {
        let ctx = ctx(p);
        for mode in [ControlMode::Plain, ControlMode::Controlled] {
            let mc = build(&ctx, mode);
            for x in 0..p {
                for y in 0..p {
                    for c in 0..=u64::from(mode == ControlMode::Controlled) {
                        let mut init = Assignment::new(&mc.circuit);
                        init.set_register(&mc.x, x);
                        init.set_register(&mc.y, y);
                        if let Some(cr) = &mc.ctrl {
                            init.set_register(cr, c);
                        }
                        let out = simulate(&mc.circuit, &init)
                            .unwrap_or_else(|e| panic!("p={p} x={x} y={y} c={c}: {e}"));
                        let active = mc.ctrl.is_none() || c == 1;
                        let expect = if active { model(x, y) } else { y };
                        assert_eq!(out.register_value(&mc.x), x, "x clobbered");
                        assert_eq!(
                            out.register_value(&mc.y),
                            expect,
                            "p={p} x={x} y={y} c={c}"
                        );
                        for reg in mc.circuit.registers_of_kind(RegisterKind::Ancilla) {
                            assert!(out.register_is_zero(reg), "dirty scratch");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mod_add_exhaustive() {
        for p in [7u64, 11, 13] {
            check_binary(p, build_mod_add, |x, y| (x + y) % p);
        }
    }

    #[test]
    fn mod_sub_exhaustive() {
        for p in [7u64, 11, 13] {
            check_binary(p, build_mod_sub, |x, y| (p + y - x) % p);
        }
    }

    #[test]
    fn mod_neg_exhaustive() {
        for p in [7u64, 11, 13] {
            let ctx = ctx(p);
            for mode in [ControlMode::Plain, ControlMode::Controlled] {
                let mc = build_mod_neg(&ctx, mode);
                for x in 0..p {
                    for c in 0..=u64::from(mode == ControlMode::Controlled) {
                        let mut init = Assignment::new(&mc.circuit);
                        init.set_register(&mc.x, x);
                        if let Some(cr) = &mc.ctrl {
                            init.set_register(cr, c);
                        }
                        let out = simulate(&mc.circuit, &init).unwrap();
                        let active = mc.ctrl.is_none() || c == 1;
                        let expect = if active { (p - x) % p } else { x };
                        assert_eq!(out.register_value(&mc.x), expect, "p={p} x={x}");
                    }
                }
                assert!(check_reversibility(&mc.circuit, 22).passed());
            }
        }
    }

    #[test]
    fn mod_neg_zero_is_noop() {
        let mc = build_mod_neg(&ctx(7), ControlMode::Plain);
        let mut init = Assignment::new(&mc.circuit);
        init.set_register(&mc.x, 0);
        assert_eq!(
            simulate(&mc.circuit, &init).unwrap().register_value(&mc.x),
            0
        );
    }

    #[test]
    fn mod_dbl_exhaustive() {
        for p in [7u64, 11, 13, 251] {
            let ctx = ctx(p);
            let mc = build_mod_dbl(&ctx);
            for x in 0..p {
                let mut init = Assignment::new(&mc.circuit);
                init.set_register(&mc.x, x);
                let out = simulate(&mc.circuit, &init).unwrap();
                assert_eq!(out.register_value(&mc.x), (2 * x) % p, "p={p} x={x}");
            }
            assert!(check_reversibility(&mc.circuit, 22).passed());
        }
    }

    #[test]
    fn y_zero_unchanged_under_add() {
        let ctx = ctx(7);
        let mc = build_mod_add(&ctx, ControlMode::Plain);
        for x in 0..7 {
            let mut init = Assignment::new(&mc.circuit);
            init.set_register(&mc.x, 0);
            init.set_register(&mc.y, x);
            let out = simulate(&mc.circuit, &init).unwrap();
            assert_eq!(out.register_value(&mc.y), x);
        }
    }

    /// Gate tallies stay within the closed-form budgets (which the paper
    /// notes are slight overestimates).
    #[test]
    fn tallies_within_formula_budgets() {
        for p in [13u64, 251] {
            let ctx = ctx(p);
            let n = ctx.n as u64;
            let cases: Vec<(u64, u64)> = vec![
                (count_stats(&build_mod_add(&ctx, ControlMode::Plain).circuit).toffoli_count, 4 * n),
                (
                    count_stats(&build_mod_add(&ctx, ControlMode::Controlled).circuit).toffoli_count,
                    5 * n,
                ),
                (count_stats(&build_mod_neg(&ctx, ControlMode::Plain).circuit).toffoli_count, 2 * n),
                (
                    count_stats(&build_mod_neg(&ctx, ControlMode::Controlled).circuit).toffoli_count,
                    3 * n,
                ),
                (count_stats(&build_mod_sub(&ctx, ControlMode::Plain).circuit).toffoli_count, 6 * n),
                (
                    count_stats(&build_mod_sub(&ctx, ControlMode::Controlled).circuit).toffoli_count,
                    7 * n,
                ),
                (count_stats(&build_mod_dbl(&ctx).circuit).toffoli_count, 2 * n),
            ];
            for (i, (tally, budget)) in cases.iter().enumerate() {
                assert!(
                    tally <= budget,
                    "case {i} at p={p}: tally {tally} exceeds budget {budget}"
                );
                assert!(
                    *tally as f64 >= 0.75 * *budget as f64,
                    "case {i} at p={p}: tally {tally} under 0.75x budget {budget}"
                );
            }
        }
    }

    #[test]
    fn no_lookups_in_modular_ops() {
        let ctx = ctx(11);
        assert!(lookup_free(&build_mod_add(&ctx, ControlMode::Plain).circuit));
        assert!(lookup_free(&build_mod_dbl(&ctx).circuit));
    }
}
