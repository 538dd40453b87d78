use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::{biguint_inv, check_reduced, ModMathError, WideUint};

/// Montgomery representation with radix `R = 2^n` for an odd modulus `p`
/// filling `n` bits. Values are stored as `x~ = x * R mod p`; products of
/// encoded values are reduced by multiplying with `R^-1`, which keeps the
/// result in the encoding.
#[derive(Clone, Debug)]
pub struct Montgomery {
    p: WideUint,
    r_mod_p: BigUint,
    r_inv: BigUint,
}

impl Montgomery {
    pub fn new(p: &WideUint) -> Result<Self, ModMathError> {
        if p.value().is_even() {
            return Err(ModMathError::EvenModulus);
        }
        let r = BigUint::one() << p.bits();
        let r_mod_p = &r % p.value();
        let r_inv = biguint_inv(&r_mod_p, p.value()).ok_or(ModMathError::EvenModulus)?;
        Ok(Self {
            p: p.clone(),
            r_mod_p,
            r_inv,
        })
    }

    pub fn modulus(&self) -> &WideUint {
        &self.p
    }

    /// Radix exponent n, i.e. R = 2^n.
    pub fn radix_bits(&self) -> u32 {
        self.p.bits()
    }

    /// `x * R mod p`.
    pub fn encode(&self, x: &WideUint) -> Result<WideUint, ModMathError> {
        check_reduced(x, &self.p)?;
        WideUint::new((x.value() * &self.r_mod_p) % self.p.value(), self.p.bits())
    }

    /// Inverse of [`Self::encode`].
    pub fn decode(&self, x: &WideUint) -> Result<WideUint, ModMathError> {
        check_reduced(x, &self.p)?;
        WideUint::new((x.value() * &self.r_inv) % self.p.value(), self.p.bits())
    }

    /// `a~ * b~ * R^-1 mod p`: the encoding of `a*b` when both inputs are
    /// encoded.
    pub fn mul(&self, a: &WideUint, b: &WideUint) -> Result<WideUint, ModMathError> {
        check_reduced(a, &self.p)?;
        check_reduced(b, &self.p)?;
        WideUint::new(
            ((a.value() * b.value()) % self.p.value() * &self.r_inv) % self.p.value(),
            self.p.bits(),
        )
    }

    /// The value `v` with `mul(x~, v) = encode(1)`, i.e. `R^2 / x~ mod p`.
    /// For an encoded input this is the encoding of the plain inverse.
    pub fn inv(&self, x: &WideUint) -> Result<WideUint, ModMathError> {
        check_reduced(x, &self.p)?;
        let xi = biguint_inv(x.value(), self.p.value())
            .ok_or_else(|| ModMathError::NonInvertible(x.value().clone(), self.p.value().clone()))?;
        let r_sq = (&self.r_mod_p * &self.r_mod_p) % self.p.value();
        WideUint::new((xi * r_sq) % self.p.value(), self.p.bits())
    }
}
