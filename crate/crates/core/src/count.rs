//! Exact counts stored as `odd * 2^shift`.
//!
//! Gasket MIS counts reach `2^((3^62 - 1) / 2)` at generation 64, far beyond
//! anything that can be held as a plain big integer. Every count produced
//! by the gluing recurrences is a small odd factor times a huge power of
//! two, so keeping the two parts apart makes the arithmetic exact and cheap.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest exponent gap bridged when adding two counts. Beyond this the odd
/// factor itself would need more than this many bits.
const MAX_ALIGN_BITS: u64 = 1 << 24;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactCount {
    odd: BigUint,
    shift: BigUint,
}

impl ExactCount {
    pub fn zero() -> Self {
        ExactCount {
            odd: BigUint::zero(),
            shift: BigUint::zero(),
        }
    }

    pub fn one() -> Self {
        ExactCount::from_parts(BigUint::one(), BigUint::zero())
    }

    /// `2^exponent`.
    pub fn pow2(exponent: BigUint) -> Self {
        ExactCount::from_parts(BigUint::one(), exponent)
    }

    /// `factor * 2^shift`, normalized so the stored factor is odd.
    pub fn from_parts(factor: BigUint, shift: BigUint) -> Self {
        if factor.is_zero() {
            return ExactCount::zero();
        }
        let tz = factor.trailing_zeros().unwrap_or(0);
        ExactCount {
            odd: factor >> tz,
            shift: shift + tz,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.odd.is_zero()
    }

    pub fn odd_part(&self) -> &BigUint {
        &self.odd
    }

    pub fn two_adic_exponent(&self) -> &BigUint {
        &self.shift
    }

    /// The exponent `e` when the count equals `2^e`.
    pub fn pow2_exponent(&self) -> Option<&BigUint> {
        self.odd.is_one().then_some(&self.shift)
    }

    /// Bit length of the plain integer, `None` if it overflows `u64`.
    pub fn bit_len(&self) -> Option<u64> {
        if self.is_zero() {
            return Some(0);
        }
        self.shift.to_u64()?.checked_add(self.odd.bits())
    }

    /// The plain integer, when it has at most `max_bits` bits.
    pub fn to_biguint(&self, max_bits: u64) -> Option<BigUint> {
        let bits = self.bit_len()?;
        if bits > max_bits {
            return None;
        }
        let shift = self.shift.to_usize()?;
        Some(&self.odd << shift)
    }

    pub fn mul(&self, other: &ExactCount) -> ExactCount {
        if self.is_zero() || other.is_zero() {
            return ExactCount::zero();
        }
        ExactCount {
            odd: &self.odd * &other.odd,
            shift: &self.shift + &other.shift,
        }
    }

    pub fn checked_add(&self, other: &ExactCount) -> Result<ExactCount> {
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let (low, high) = if self.shift <= other.shift {
            (self, other)
        } else {
            (other, self)
        };
        let gap = (&high.shift - &low.shift)
            .to_u64()
            .filter(|g| *g <= MAX_ALIGN_BITS)
            .ok_or_else(|| {
                Error::CountRepresentation(format!(
                    "adding counts whose power-of-two exponents differ by more than {MAX_ALIGN_BITS}"
                ))
            })?;
        let factor = &low.odd + (&high.odd << gap as usize);
        Ok(ExactCount::from_parts(factor, low.shift.clone()))
    }
}

impl From<BigUint> for ExactCount {
    fn from(v: BigUint) -> Self {
        ExactCount::from_parts(v, BigUint::zero())
    }
}

impl From<u64> for ExactCount {
    fn from(v: u64) -> Self {
        ExactCount::from(BigUint::from(v))
    }
}

impl fmt::Display for ExactCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_biguint(4096) {
            Some(v) => write!(f, "{v}"),
            None if self.odd.is_one() => write!(f, "2^{}", self.shift),
            None => write!(f, "{}*2^{}", self.odd, self.shift),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn plain(c: &ExactCount) -> BigUint {
        c.to_biguint(1 << 20).unwrap()
    }

    #[test]
    fn normalizes_factors_of_two() {
        let c = ExactCount::from(96u64);
        assert_eq!(c.odd_part(), &BigUint::from(3u32));
        assert_eq!(c.two_adic_exponent(), &BigUint::from(5u32));
        assert_eq!(c.pow2_exponent(), None);
        assert_eq!(ExactCount::from(64u64).pow2_exponent(), Some(&BigUint::from(6u32)));
        assert_eq!(ExactCount::zero().pow2_exponent(), None);
    }

    #[test]
    fn huge_powers_stay_symbolic() {
        let e = BigUint::from(3u32).pow(38) / 2u32;
        let c = ExactCount::pow2(e.clone());
        let doubled = c.checked_add(&c).unwrap();
        assert_eq!(doubled.pow2_exponent(), Some(&(e + 1u32)));
        assert!(doubled.to_biguint(1 << 20).is_none());
        assert!(doubled.to_string().starts_with("2^"));
    }

    #[test]
    fn rejects_unbridgeable_gaps() {
        let big = ExactCount::pow2(BigUint::from(1u64 << 40));
        assert!(matches!(
            big.checked_add(&ExactCount::one()),
            Err(Error::CountRepresentation(_))
        ));
    }

    proptest! {
        #[test]
        fn arithmetic_matches_plain_integers(a in 0u64..1 << 40, b in 0u64..1 << 40, s in 0u32..200) {
            let shifted = BigUint::from(b) << s;
            let x = ExactCount::from(a);
            let y = ExactCount::from(shifted.clone());
            prop_assert_eq!(plain(&x.checked_add(&y).unwrap()), BigUint::from(a) + &shifted);
            prop_assert_eq!(plain(&x.mul(&y)), BigUint::from(a) * shifted);
        }
    }
}
