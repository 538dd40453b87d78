use num_bigint::BigUint;

use super::{biguint_inv, ec_scalar_mul, CurveParams, CurvePoint, ModMathError, WideUint};

/// Classical post-processing of the phase-estimation outputs.
///
/// The quantum part yields `c` (first phase estimation) and the high bits of
/// the rescaled key `ck mod r` (second phase estimation, with the low
/// `missing_bits` generated classically instead). This enumerates all
/// `2^missing_bits` completions, maps each candidate back through
/// `k = ck * c^-1 mod r`, and returns the unique `k` with `[k]P = Q`.
///
/// An exhausted search signals an invalid phase-estimation output, the
/// termination condition for a run that suffered a logical error.
pub fn key_search(
    c: &WideUint,
    ck_high_bits: &WideUint,
    missing_bits: u32,
    q: &CurvePoint,
    params: &CurveParams,
) -> Result<WideUint, ModMathError> {
    assert!(missing_bits <= 24, "desk-scale search only");
    let r = params.order_r.value();
    let c_inv = biguint_inv(c.value(), r)
        .ok_or_else(|| ModMathError::NonInvertible(c.value().clone(), r.clone()))?;
    let bits = params.order_r.bits();
    for low in 0u64..(1u64 << missing_bits) {
        let ck = (ck_high_bits.value() << missing_bits) | BigUint::from(low);
        let k = (ck * &c_inv) % r;
        let k = WideUint::new(k, bits)?;
        if ec_scalar_mul(&k, &params.base_point, params)? == *q {
            return Ok(k);
        }
    }
    Err(ModMathError::KeyNotFound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modmath::test_curves;
    use rand::{Rng, SeedableRng};

    /// Plant a key, compute its public point and rescaled key, strip low
    /// bits, and require recovery.
    fn plant_and_recover(curve: &CurveParams, k: u64, c: u64, missing: u32) {
        let bits = curve.order_r.bits();
        let r = curve.order_r.to_u64();
        let kw = WideUint::from_u64(k, bits).unwrap();
        let q = ec_scalar_mul(&kw, &curve.base_point, curve).unwrap();
        let ck = (c as u128 * k as u128 % r as u128) as u64;
        let high = WideUint::from_u64(ck >> missing, bits).unwrap();
        let cw = WideUint::from_u64(c, bits).unwrap();
        let found = key_search(&cw, &high, missing, &q, curve).unwrap();
        // Any key in the same class reproduces Q only if it is k itself
        // modulo the base-point order; recovery means [found]P = Q.
        assert_eq!(
            ec_scalar_mul(&found, &curve.base_point, curve).unwrap(),
            q
        );
    }

    #[test]
    fn degenerate_search_recovers_exactly() {
        let curve = test_curves::p251();
        plant_and_recover(&curve, 77, 5, 0);
    }

    #[test]
    fn recovers_planted_key_with_missing_bits() {
        let curve = test_curves::p251();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let r = curve.order_r.to_u64();
        for _ in 0..100 {
            let k = rng.gen_range(1..r);
            let mut c = rng.gen_range(1..r);
            while num_integer::gcd(c, r) != 1 {
                c = rng.gen_range(1..r);
            }
            plant_and_recover(&curve, k, c, 3);
        }
    }

    /// Desk-scale analog of generating only 13 of 16 windows: recover with
    /// 13 of 16 bits present (3 missing) at a 16-bit-order scale stand-in.
    #[test]
    fn thirteen_of_sixteen_analog() {
        let curve = test_curves::p13();
        plant_and_recover(&curve, 5, 7, 3);
    }

    #[test]
    fn exhausted_search_is_an_error() {
        let curve = test_curves::p251();
        let bits = curve.order_r.bits();
        // Q not equal to any candidate completion of a bogus ck.
        let q = ec_scalar_mul(
            &WideUint::from_u64(11, bits).unwrap(),
            &curve.base_point,
            &curve,
        )
        .unwrap();
        let res = key_search(
            &WideUint::from_u64(1, bits).unwrap(),
            &WideUint::from_u64(40, bits).unwrap(),
            1,
            &q,
            &curve,
        );
        assert!(matches!(res, Err(ModMathError::KeyNotFound)));
    }
}
