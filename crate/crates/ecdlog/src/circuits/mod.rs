//! Builders producing verified reversible circuits for every arithmetic
//! subroutine of the discrete-log algorithm: plain and modular adders,
//! windowed Montgomery multiplication, Kaliski inversion, table lookups,
//! elliptic-curve point addition, and batched inversion.
//!
//! Builders are pure functions of their parameters. Each returns a
//! [`crate::revsim::Circuit`] whose input registers are documented on the
//! builder; verification sweeps compare simulation results against the
//! [`crate::modmath`] oracles.

mod basic;
mod batch_inverse;
mod ec_point_add;
mod kaliski;
mod lookup;
mod manifest;
mod modular;
mod montmul;
pub(crate) mod primitives;
mod window;

pub use basic::{
    build_adder, build_comparator, build_constant_adder, build_equality_check, build_increment,
    build_negation,
};
pub use batch_inverse::{build_batch_inverse, BatchInverseCircuit, BatchVariant};
pub use ec_point_add::{build_ec_point_add, EcPointAddCircuit, LambdaR};
pub use kaliski::{build_kaliski_inverse, KaliskiCircuit};
pub use lookup::{build_lookup, build_unlookup, window_reduction_table};
pub use manifest::{builder_manifest, ManifestEntry};
pub use modular::{
    build_mod_add, build_mod_dbl, build_mod_neg, build_mod_sub, ControlMode, ModBinaryCircuit,
    ModUnaryCircuit,
};
pub use montmul::{build_montgomery_mul, MontMulCircuit};
pub use window::{build_window_step, WindowStepCircuit, WindowTable};

use crate::modmath::WideUint;

/// Errors from circuit construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CircuitError {
    #[error("modulus must satisfy 2^(n-1) < p < 2^n for width n = {n}")]
    ModulusWidth { n: u32 },
    #[error("modulus must be odd")]
    EvenModulus,
    #[error("window of {window} bits must divide the width {n}")]
    WindowMismatch { window: u32, n: u32 },
    #[error("table length {got} does not match 2^{expect} entries")]
    TableLength { got: usize, expect: u32 },
    #[error("register width {0} exceeds the simulable limit")]
    TooWide(u32),
    #[error("batch size must be at least 1")]
    EmptyBatch,
}

/// Modulus context shared by the modular builders: an odd prime `p` filling
/// exactly `n` bits, with all values kept in Montgomery representation when
/// `montgomery` is set (the multiplication and inversion builders require
/// it; the add/sub/neg/dbl circuits are representation-agnostic).
#[derive(Debug, Clone)]
pub struct ModContext {
    pub p: WideUint,
    pub n: u32,
    pub montgomery: bool,
}

impl ModContext {
    pub fn new(p: WideUint) -> Result<Self, CircuitError> {
        let n = p.bits();
        if p.value_bits() != n || n < 2 {
            return Err(CircuitError::ModulusWidth { n });
        }
        if !p.bit(0) {
            return Err(CircuitError::EvenModulus);
        }
        Ok(Self {
            p,
            n,
            montgomery: true,
        })
    }

    pub fn p_u64(&self) -> u64 {
        self.p.to_u64()
    }
}
