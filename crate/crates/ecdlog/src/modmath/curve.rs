use serde::{Deserialize, Serialize};

use super::{
    is_prime, mod_add, mod_dbl, mod_inv, mod_mul, mod_neg, mod_sub, ModMathError, WideUint,
};

/// Affine point on a short Weierstrass curve, with the point at infinity
/// represented literally as (0,0). The circuit flags compare registers
/// against zero, so the oracle must share that representation; curves with
/// c2 = 0 are rejected because (0,0) would then be an ordinary curve point.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CurvePoint {
    pub x: WideUint,
    pub y: WideUint,
}

impl CurvePoint {
    pub fn new(x: WideUint, y: WideUint) -> Self {
        Self { x, y }
    }

    pub fn infinity(bits: u32) -> Self {
        Self {
            x: WideUint::zero(bits),
            y: WideUint::zero(bits),
        }
    }

    pub fn is_infinity(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }
}

impl std::fmt::Debug for CurvePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_infinity() {
            write!(f, "O")
        } else {
            write!(f, "({}, {})", self.x, self.y)
        }
    }
}

/// Curve constants `y^2 = x^3 + c1 x + c2 mod p`, a base point, and the
/// period `r` of the base-point orbit (the smallest positive r with
/// `[r]P = O`, equivalently `[r+1]P = P`).
#[derive(Clone, Debug)]
pub struct CurveParams {
    pub c1: WideUint,
    pub c2: WideUint,
    pub p: WideUint,
    pub base_point: CurvePoint,
    pub order_r: WideUint,
}

/// On-disk form of a curve parameter file: decimal strings plus the width.
#[derive(Serialize, Deserialize)]
struct CurveFile {
    p: String,
    c1: String,
    c2: String,
    #[serde(rename = "Px")]
    px: String,
    #[serde(rename = "Py")]
    py: String,
    r: String,
    bits: u32,
}

impl CurveParams {
    /// Validate and construct. Checks primality of `p`, nonsingularity,
    /// that the base point lies on the curve, and the stated order.
    pub fn new(
        c1: WideUint,
        c2: WideUint,
        p: WideUint,
        base_point: CurvePoint,
        order_r: WideUint,
    ) -> Result<Self, ModMathError> {
        if !is_prime(p.value()) {
            return Err(ModMathError::NotPrime(p.value().clone()));
        }
        if c2.is_zero() {
            return Err(ModMathError::ZeroC2);
        }
        let params = Self {
            c1,
            c2,
            p,
            base_point,
            order_r,
        };
        if params.discriminant()?.is_zero() {
            return Err(ModMathError::SingularCurve);
        }
        if !params.is_on_curve(&params.base_point)? {
            return Err(ModMathError::OffCurve(
                params.base_point.x.value().clone(),
                params.base_point.y.value().clone(),
            ));
        }
        // [r]P = O and hence [r+1]P = P, the testable form of the
        // "order of the curve" convention.
        let rp = ec_scalar_mul(&params.order_r, &params.base_point, &params)?;
        if !rp.is_infinity() {
            return Err(ModMathError::BadOrder);
        }
        Ok(params)
    }

    fn discriminant(&self) -> Result<WideUint, ModMathError> {
        let p = &self.p;
        let c1_cubed = mod_mul(&mod_mul(&self.c1, &self.c1, p)?, &self.c1, p)?;
        let c2_sq = mod_mul(&self.c2, &self.c2, p)?;
        let mut acc = WideUint::zero(p.bits());
        for _ in 0..4 {
            acc = mod_add(&acc, &c1_cubed, p)?;
        }
        for _ in 0..27 {
            acc = mod_add(&acc, &c2_sq, p)?;
        }
        Ok(acc)
    }

    /// `y^2 == x^3 + c1 x + c2`, with (0,0) accepted as the point at infinity.
    pub fn is_on_curve(&self, pt: &CurvePoint) -> Result<bool, ModMathError> {
        if pt.is_infinity() {
            return Ok(true);
        }
        let p = &self.p;
        let lhs = mod_mul(&pt.y, &pt.y, p)?;
        let x_sq = mod_mul(&pt.x, &pt.x, p)?;
        let x_cubed = mod_mul(&x_sq, &pt.x, p)?;
        let rhs = mod_add(&mod_add(&x_cubed, &mod_mul(&self.c1, &pt.x, p)?, p)?, &self.c2, p)?;
        Ok(lhs == rhs)
    }

    /// Tangent slope `(3x^2 + c1) / (2y)` at a point, used as the classical
    /// doubling constant. Returns zero for the point at infinity and for
    /// 2-torsion points (y = 0), where the slope is undefined and unused.
    pub fn lambda_r(&self, pt: &CurvePoint) -> Result<WideUint, ModMathError> {
        if pt.is_infinity() || pt.y.is_zero() {
            return Ok(WideUint::zero(self.p.bits()));
        }
        let p = &self.p;
        let x_sq = mod_mul(&pt.x, &pt.x, p)?;
        let three_x_sq = mod_add(&mod_dbl(&x_sq, p)?, &x_sq, p)?;
        let num = mod_add(&three_x_sq, &self.c1, p)?;
        let den = mod_dbl(&pt.y, p)?;
        mod_mul(&num, &mod_inv(&den, p)?, p)
    }

    /// Enumerate every point on the curve, including the point at infinity.
    /// Intended for desk-scale moduli only.
    pub fn enumerate_points(&self) -> Result<Vec<CurvePoint>, ModMathError> {
        let p = self.p.to_u64();
        let bits = self.p.bits();
        let mut pts = vec![CurvePoint::infinity(bits)];
        for x in 0..p {
            for y in 0..p {
                if x == 0 && y == 0 {
                    continue;
                }
                let pt = CurvePoint::new(
                    WideUint::from_u64(x, bits)?,
                    WideUint::from_u64(y, bits)?,
                );
                if self.is_on_curve(&pt)? {
                    pts.push(pt);
                }
            }
        }
        Ok(pts)
    }

    pub fn from_json(json: &str) -> Result<Self, ModMathError> {
        let file: CurveFile =
            serde_json::from_str(json).map_err(|_| ModMathError::Overflow { bits: 0 })?;
        let bits = file.bits;
        let p = WideUint::from_decimal(&file.p, bits)?;
        Self::new(
            WideUint::from_decimal(&file.c1, bits)?,
            WideUint::from_decimal(&file.c2, bits)?,
            p,
            CurvePoint::new(
                WideUint::from_decimal(&file.px, bits)?,
                WideUint::from_decimal(&file.py, bits)?,
            ),
            WideUint::from_decimal(&file.r, bits)?,
        )
    }

    pub fn to_json(&self) -> String {
        let file = CurveFile {
            p: self.p.to_string(),
            c1: self.c1.to_string(),
            c2: self.c2.to_string(),
            px: self.base_point.x.to_string(),
            py: self.base_point.y.to_string(),
            r: self.order_r.to_string(),
            bits: self.p.bits(),
        };
        serde_json::to_string_pretty(&file).expect("curve file serializes")
    }
}

/// Group law of Eq.-style short Weierstrass addition, every branch explicit:
/// infinity pass-throughs, inverse points summing to infinity, tangent-slope
/// doubling, and the generic chord case.
pub fn ec_add(
    p1: &CurvePoint,
    p2: &CurvePoint,
    params: &CurveParams,
) -> Result<CurvePoint, ModMathError> {
    let p = &params.p;
    if p1.is_infinity() {
        return Ok(p2.clone());
    }
    if p2.is_infinity() {
        return Ok(p1.clone());
    }
    let (a, b) = (&p1.x, &p1.y);
    let (x, y) = (&p2.x, &p2.y);
    if a == x {
        // Same column: either inverse points (including 2-torsion doubling)
        // or a genuine doubling.
        if *b == mod_neg(y, p)? {
            return Ok(CurvePoint::infinity(p.bits()));
        }
        debug_assert_eq!(b, y);
        let lambda = params.lambda_r(p1)?;
        let x_r = mod_sub(&mod_sub(&mod_mul(&lambda, &lambda, p)?, x, p)?, a, p)?;
        let y_r = mod_sub(&mod_mul(&lambda, &mod_sub(a, &x_r, p)?, p)?, b, p)?;
        return Ok(CurvePoint::new(x_r, y_r));
    }
    let lambda = mod_mul(
        &mod_sub(y, b, p)?,
        &mod_inv(&mod_sub(x, a, p)?, p)?,
        p,
    )?;
    let x_r = mod_sub(&mod_sub(&mod_mul(&lambda, &lambda, p)?, x, p)?, a, p)?;
    let y_r = mod_sub(&mod_mul(&lambda, &mod_sub(a, &x_r, p)?, p)?, b, p)?;
    Ok(CurvePoint::new(x_r, y_r))
}

/// `[k]P` by repeated doubling and addition. `[0]P` is the point at infinity.
pub fn ec_scalar_mul(
    k: &WideUint,
    pt: &CurvePoint,
    params: &CurveParams,
) -> Result<CurvePoint, ModMathError> {
    let mut acc = CurvePoint::infinity(params.p.bits());
    let mut base = pt.clone();
    for i in 0..k.value_bits() {
        if k.bit(i) {
            acc = ec_add(&acc, &base, params)?;
        }
        base = ec_add(&base, &base, params)?;
    }
    Ok(acc)
}

/// Fixed toy curves used across the test suites, plus NIST P-256 parameters
/// for width-256 count checks (never simulated).
pub mod test_curves {
    use super::*;

    fn build(p: u64, c1: u64, c2: u64, px: u64, py: u64, r: u64, bits: u32) -> CurveParams {
        CurveParams::new(
            WideUint::from_u64(c1, bits).unwrap(),
            WideUint::from_u64(c2, bits).unwrap(),
            WideUint::from_u64(p, bits).unwrap(),
            CurvePoint::new(
                WideUint::from_u64(px, bits).unwrap(),
                WideUint::from_u64(py, bits).unwrap(),
            ),
            WideUint::from_u64(r, bits).unwrap(),
        )
        .expect("test curve is valid")
    }

    /// y^2 = x^3 + 2x + 3 mod 7; order-6 group generated by (2,1).
    pub fn p7() -> CurveParams {
        build(7, 2, 3, 2, 1, 6, 3)
    }

    /// y^2 = x^3 + 4x + 3 mod 11; (3,3) generates all 14 points.
    pub fn p11() -> CurveParams {
        build(11, 4, 3, 3, 3, 14, 4)
    }

    /// y^2 = x^3 + 2x + 5 mod 13; (2,2) generates all 12 points.
    pub fn p13() -> CurveParams {
        build(13, 2, 5, 2, 2, 12, 4)
    }

    /// y^2 = x^3 + 2x + 3 mod 97; (0,10) has order 50.
    pub fn p97() -> CurveParams {
        build(97, 2, 3, 0, 10, 50, 7)
    }

    /// y^2 = x^3 + 7x + 12 mod 251; (1,32) generates all 228 points.
    pub fn p251() -> CurveParams {
        build(251, 7, 12, 1, 32, 228, 8)
    }

    /// NIST P-256. Count checks only; never simulated.
    pub fn p256() -> CurveParams {
        let bits = 256;
        let p = WideUint::from_decimal(
            "115792089210356248762697446949407573530086143415290314195533631308867097853951",
            bits,
        )
        .unwrap();
        let c1 = WideUint::from_decimal(
            "115792089210356248762697446949407573530086143415290314195533631308867097853948",
            bits,
        )
        .unwrap();
        let c2 = WideUint::from_decimal(
            "41058363725152142129326129780047268409114441015993725554835256314039467401291",
            bits,
        )
        .unwrap();
        let px = WideUint::from_decimal(
            "48439561293906451759052585252797914202762949526041747995844080717082404635286",
            bits,
        )
        .unwrap();
        let py = WideUint::from_decimal(
            "36134250956749795798585127919587881956611106672985015071877198253568414405109",
            bits,
        )
        .unwrap();
        let r = WideUint::from_decimal(
            "115792089210356248762697446949407573529996955224135760342422259061068512044369",
            bits,
        )
        .unwrap();
        CurveParams::new(c1, c2, p, CurvePoint::new(px, py), r).expect("P-256 is valid")
    }
}
