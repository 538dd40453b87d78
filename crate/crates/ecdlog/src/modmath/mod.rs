//! Classical number theory and elliptic-curve oracle layer.
//!
//! Everything in this module is plain (non-reversible) arithmetic on host
//! integers. The circuit builders in [`crate::circuits`] are verified against
//! these functions, so this layer deliberately shares no code with the
//! gate-level constructions.

mod curve;
mod key_search;
mod montgomery;
mod primality;
mod wide;

pub use curve::{ec_add, ec_scalar_mul, test_curves, CurveParams, CurvePoint};
pub use key_search::key_search;
pub use montgomery::Montgomery;
pub use primality::is_prime;
pub use wide::WideUint;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Errors surfaced by the oracle layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ModMathError {
    #[error("operand widths differ: {0} vs {1} bits")]
    WidthMismatch(u32, u32),
    #[error("value does not fit in {bits} bits")]
    Overflow { bits: u32 },
    #[error("operand {0} is not reduced modulo {1}")]
    NotReduced(BigUint, BigUint),
    #[error("{0} is not invertible modulo {1}")]
    NonInvertible(BigUint, BigUint),
    #[error("modulus must be odd for Montgomery arithmetic")]
    EvenModulus,
    #[error("modulus {0} is not prime")]
    NotPrime(BigUint),
    #[error("curve is singular: 4c1^3 + 27c2^2 = 0 mod p")]
    SingularCurve,
    #[error("curve constant c2 must be nonzero so that (0,0) can stand for the point at infinity")]
    ZeroC2,
    #[error("point ({0}, {1}) is not on the curve")]
    OffCurve(BigUint, BigUint),
    #[error("stated order r does not return the base point to itself")]
    BadOrder,
    #[error("no key candidate reproduces the public point")]
    KeyNotFound,
}

fn check_widths(a: &WideUint, b: &WideUint) -> Result<(), ModMathError> {
    if a.bits() != b.bits() {
        return Err(ModMathError::WidthMismatch(a.bits(), b.bits()));
    }
    Ok(())
}

fn check_reduced(a: &WideUint, p: &WideUint) -> Result<(), ModMathError> {
    check_widths(a, p)?;
    if a.value() >= p.value() {
        return Err(ModMathError::NotReduced(
            a.value().clone(),
            p.value().clone(),
        ));
    }
    Ok(())
}

/// `(a + b) mod p`. Both operands must be reduced and share `p`'s width.
pub fn mod_add(a: &WideUint, b: &WideUint, p: &WideUint) -> Result<WideUint, ModMathError> {
    check_reduced(a, p)?;
    check_reduced(b, p)?;
    let mut s = a.value() + b.value();
    if s >= *p.value() {
        s -= p.value();
    }
    WideUint::new(s, p.bits())
}

/// `(a - b) mod p`.
pub fn mod_sub(a: &WideUint, b: &WideUint, p: &WideUint) -> Result<WideUint, ModMathError> {
    check_reduced(a, p)?;
    check_reduced(b, p)?;
    let s = if a.value() >= b.value() {
        a.value() - b.value()
    } else {
        a.value() + p.value() - b.value()
    };
    WideUint::new(s, p.bits())
}

/// `(-a) mod p`, with `-0 = 0`.
pub fn mod_neg(a: &WideUint, p: &WideUint) -> Result<WideUint, ModMathError> {
    check_reduced(a, p)?;
    if a.value().is_zero() {
        return Ok(a.clone());
    }
    WideUint::new(p.value() - a.value(), p.bits())
}

/// `2a mod p`.
pub fn mod_dbl(a: &WideUint, p: &WideUint) -> Result<WideUint, ModMathError> {
    mod_add(a, a, p)
}

/// `a * b mod p`.
pub fn mod_mul(a: &WideUint, b: &WideUint, p: &WideUint) -> Result<WideUint, ModMathError> {
    check_reduced(a, p)?;
    check_reduced(b, p)?;
    WideUint::new((a.value() * b.value()) % p.value(), p.bits())
}

/// `a^-1 mod p` by the extended Euclidean algorithm. `mod_inv(0)` is an error.
pub fn mod_inv(a: &WideUint, p: &WideUint) -> Result<WideUint, ModMathError> {
    check_reduced(a, p)?;
    let inv = biguint_inv(a.value(), p.value())
        .ok_or_else(|| ModMathError::NonInvertible(a.value().clone(), p.value().clone()))?;
    WideUint::new(inv, p.bits())
}

/// Extended-Euclid inverse on raw big integers; `None` when gcd(a, m) != 1.
pub(crate) fn biguint_inv(a: &BigUint, m: &BigUint) -> Option<BigUint> {
    use num_bigint::BigInt;
    if a.is_zero() {
        return None;
    }
    let (mut r0, mut r1) = (BigInt::from(m.clone()), BigInt::from(a.clone()));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r);
        let t = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t);
    }
    if !r0.is_one() {
        return None;
    }
    let m_int = BigInt::from(m.clone());
    let t = t0.mod_floor(&m_int);
    Some(t.to_biguint().expect("mod_floor of positive modulus"))
}
