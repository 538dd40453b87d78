use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use super::ModMathError;

/// Fixed-width unsigned integer.
///
/// A `WideUint` is a value together with an explicit bit width; the value is
/// always strictly below `2^bits`. Widths are per-value rather than global so
/// that one process can work with 3-bit test curves and 256-bit production
/// parameters at the same time. Arithmetic never overflows silently:
/// operations that could widen the result take the target width explicitly.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WideUint {
    value: BigUint,
    bits: u32,
}

impl WideUint {
    /// Maximum supported width, enough for NIST P-521 coordinates.
    pub const MAX_BITS: u32 = 521;

    pub fn new(value: BigUint, bits: u32) -> Result<Self, ModMathError> {
        if value.bits() > u64::from(bits) {
            return Err(ModMathError::Overflow { bits });
        }
        Ok(Self { value, bits })
    }

    pub fn zero(bits: u32) -> Self {
        Self {
            value: BigUint::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Self {
        Self {
            value: BigUint::one(),
            bits,
        }
    }

    pub fn from_u64(v: u64, bits: u32) -> Result<Self, ModMathError> {
        Self::new(BigUint::from(v), bits)
    }

    /// Parse from a decimal string, as used by curve parameter files.
    pub fn from_decimal(s: &str, bits: u32) -> Result<Self, ModMathError> {
        let value = s
            .trim()
            .parse::<BigUint>()
            .map_err(|_| ModMathError::Overflow { bits })?;
        Self::new(value, bits)
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Number of significant bits of the value itself.
    pub fn value_bits(&self) -> u32 {
        self.value.bits() as u32
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn bit(&self, i: u32) -> bool {
        self.value.bit(u64::from(i))
    }

    /// Little-endian 64-bit limbs, padded to the fixed width.
    pub fn limbs(&self) -> Vec<u64> {
        let n = (self.bits as usize).div_ceil(64).max(1);
        let mut limbs = self.value.to_u64_digits();
        limbs.resize(n, 0);
        limbs
    }

    /// Little-endian bits, padded to the fixed width.
    pub fn to_bits_le(&self) -> Vec<bool> {
        (0..self.bits).map(|i| self.bit(i)).collect()
    }

    pub fn from_bits_le(bits: &[bool]) -> Self {
        let mut value = BigUint::zero();
        for (i, &b) in bits.iter().enumerate() {
            if b {
                value.set_bit(i as u64, true);
            }
        }
        Self {
            value,
            bits: bits.len() as u32,
        }
    }

    /// Reinterpret at a different width; errors if the value does not fit.
    pub fn resize(&self, bits: u32) -> Result<Self, ModMathError> {
        Self::new(self.value.clone(), bits)
    }

    /// Value as `u64`; panics if it does not fit (test / desk-scale helper).
    pub fn to_u64(&self) -> u64 {
        self.value.to_u64().expect("value exceeds u64")
    }
}

impl std::fmt::Debug for WideUint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}u{}", self.value, self.bits)
    }
}

impl std::fmt::Display for WideUint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value.fmt(f)
    }
}
