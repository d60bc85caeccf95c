//! Binary fixed-point reals `m / 2^bits` over arbitrary-size integers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_traits::{float::FloatCore, Signed, ToPrimitive, Zero};

use crate::algebra::Rational;

/// A real number held to a fixed number of fractional bits. Binary
/// operations require both operands to share the same precision.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Real {
    m: BigInt,
    bits: u32,
}

impl Real {
    pub fn zero(bits: u32) -> Real {
        Real {
            m: BigInt::zero(),
            bits,
        }
    }

    pub fn one(bits: u32) -> Real {
        Real::from_int(1, bits)
    }

    pub fn from_int(n: i64, bits: u32) -> Real {
        Real {
            m: BigInt::from(n) << bits,
            bits,
        }
    }

    pub fn from_bigint(n: &BigInt, bits: u32) -> Real {
        Real { m: n << bits, bits }
    }

    /// Nearest-below fixed-point value of a rational.
    pub fn from_rational(q: &Rational, bits: u32) -> Real {
        Real {
            m: (q.numer() << bits).div_floor_big(q.denom()),
            bits,
        }
    }

    /// Exact conversion of a finite `f64` (rounded to `bits` places).
    pub fn from_f64(x: f64, bits: u32) -> Real {
        assert!(x.is_finite(), "cannot convert {x} to a fixed-point real");
        let (mant, exp, sign) = FloatCore::integer_decode(x);
        let mut m = BigInt::from(mant);
        let shift = exp as i64 + bits as i64;
        if shift >= 0 {
            m <<= shift as usize;
        } else {
            m >>= (-shift) as usize;
        }
        if sign < 0 {
            m = -m;
        }
        Real { m, bits }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn to_f64(&self) -> f64 {
        let shift = self.bits.saturating_sub(64);
        let top = (&self.m >> shift).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(-((self.bits - shift) as i32))
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.sign() == Sign::Minus
    }

    pub fn abs(&self) -> Real {
        Real {
            m: self.m.abs(),
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, n: i64) -> Real {
        Real {
            m: &self.m * n,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, n: i64) -> Real {
        Real {
            m: self.m.div_floor_big(&BigInt::from(n)),
            bits: self.bits,
        }
    }

    pub fn div_bigint(&self, n: &BigInt) -> Real {
        Real {
            m: self.m.div_floor_big(n),
            bits: self.bits,
        }
    }

    /// Multiplies by `2^k` (`k` may be negative).
    pub fn ldexp(&self, k: i64) -> Real {
        let m = if k >= 0 {
            &self.m << k as usize
        } else {
            &self.m >> (-k) as usize
        };
        Real { m, bits: self.bits }
    }

    /// `atanh(s) = Σ s^{2k+1}/(2k+1)` for `|s| ≤ 1/2`.
    fn atanh_small(&self) -> Real {
        let s2 = self * self;
        let mut power = self.clone();
        let mut sum = Real::zero(self.bits);
        let mut k = 0i64;
        while !power.is_zero() {
            sum += &power.div_int(2 * k + 1);
            power = &power * &s2;
            k += 1;
        }
        sum
    }

    pub fn ln2(bits: u32) -> Real {
        Real::one(bits).div_int(3).atanh_small().mul_int(2)
    }

    /// Natural logarithm of a positive value.
    pub fn ln(&self) -> Real {
        assert!(
            self.m.sign() == Sign::Plus,
            "logarithm of a non-positive value"
        );
        let e = self.m.bits() as i64 - self.bits as i64 - 1;
        let y = self.ldexp(-e);
        let one = Real::one(self.bits);
        let s = &(&y - &one) / &(&y + &one);
        &Real::ln2(self.bits).mul_int(e) + &s.atanh_small().mul_int(2)
    }
}

trait DivFloorBig {
    fn div_floor_big(&self, d: &BigInt) -> BigInt;
}

impl DivFloorBig for BigInt {
    fn div_floor_big(&self, d: &BigInt) -> BigInt {
        num_integer::Integer::div_floor(self, d)
    }
}

fn same_precision(a: &Real, b: &Real) {
    debug_assert_eq!(a.bits, b.bits, "mixed fixed-point precisions");
}

impl Add<&Real> for &Real {
    type Output = Real;
    fn add(self, o: &Real) -> Real {
        same_precision(self, o);
        Real {
            m: &self.m + &o.m,
            bits: self.bits,
        }
    }
}

impl Sub<&Real> for &Real {
    type Output = Real;
    fn sub(self, o: &Real) -> Real {
        same_precision(self, o);
        Real {
            m: &self.m - &o.m,
            bits: self.bits,
        }
    }
}

impl Mul<&Real> for &Real {
    type Output = Real;
    fn mul(self, o: &Real) -> Real {
        same_precision(self, o);
        Real {
            m: (&self.m * &o.m) >> self.bits,
            bits: self.bits,
        }
    }
}

impl Div<&Real> for &Real {
    type Output = Real;
    fn div(self, o: &Real) -> Real {
        same_precision(self, o);
        assert!(!o.is_zero(), "fixed-point division by zero");
        Real {
            m: (&self.m << self.bits).div_floor_big(&o.m),
            bits: self.bits,
        }
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real {
            m: -&self.m,
            bits: self.bits,
        }
    }
}

impl AddAssign<&Real> for Real {
    fn add_assign(&mut self, o: &Real) {
        same_precision(self, o);
        self.m += &o.m;
    }
}

impl SubAssign<&Real> for Real {
    fn sub_assign(&mut self, o: &Real) {
        same_precision(self, o);
        self.m -= &o.m;
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, o: &Real) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Real {
    fn cmp(&self, o: &Real) -> Ordering {
        same_precision(self, o);
        self.m.cmp(&o.m)
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_decimal(20))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f
            .precision()
            .unwrap_or((self.bits as f64 * std::f64::consts::LOG10_2) as usize);
        f.write_str(&self.to_decimal(digits))
    }
}

impl Real {
    /// Decimal expansion truncated toward zero to `digits` places.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scaled = (self.m.abs() * BigInt::from(10u32).pow(digits as u32)) >> self.bits;
        let mut s = scaled.to_string();
        if s.len() <= digits {
            s = "0".repeat(digits + 1 - s.len()) + &s;
        }
        let (int, frac) = s.split_at(s.len() - digits);
        let sign = if self.is_negative() && !scaled.is_zero() {
            "-"
        } else {
            ""
        };
        if digits == 0 {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const B: u32 = 120;

    #[test]
    fn arithmetic() {
        let a = Real::from_int(3, B);
        let b = Real::from_int(4, B);
        assert_eq!((&a * &b).to_f64(), 12.0);
        assert!(((&a / &b).to_f64() - 0.75).abs() < 1e-30);
        assert_eq!((&a - &b).to_f64(), -1.0);
        assert_eq!(Real::from_f64(-0.375, B).to_f64(), -0.375);
        let third = Real::from_rational(&Rational::new(1.into(), 3.into()), B);
        assert!((third.to_f64() - 1.0 / 3.0).abs() < 1e-16);
        assert_eq!(Real::from_f64(2.5, B).ldexp(1).to_f64(), 5.0);
    }

    #[test]
    fn logarithms() {
        assert!((Real::ln2(B).to_f64() - std::f64::consts::LN_2).abs() < 1e-16);
        for x in [0.001, 0.5, 1.0, 1.5, 3.0, 1e4] {
            let l = Real::from_f64(x, B).ln().to_f64();
            assert!((l - x.ln()).abs() < 1e-14, "{x}");
        }
    }

    #[test]
    fn decimal_rendering() {
        let x = Real::from_f64(-1.25, B);
        assert_eq!(x.to_decimal(3), "-1.250");
        assert_eq!(Real::from_f64(0.5, B).to_decimal(0), "0");
        assert_eq!(format!("{:.4}", Real::from_int(2, B)), "2.0000");
    }
}
