use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Coefficient ring for [`Poly`](super::Poly).
///
/// Any signed integer type from `num-traits` qualifies. Use `BigInt` when
/// overflow must be impossible; `i64` is fine for small experiments.
pub trait Coeff:
    Clone + Debug + Display + Ord + Signed + Integer + FromPrimitive + ToPrimitive + Send + Sync
{
    /// Parses a decimal integer literal.
    fn parse_decimal(s: &str) -> Option<Self> {
        Self::from_str_radix(s, 10).ok()
    }
}

impl Coeff for BigInt {}
impl Coeff for i64 {}
impl Coeff for i128 {}
