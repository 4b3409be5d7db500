use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

/// Exact rational scalar usable as a cyclotomic coordinate.
pub trait Scalar: Clone + Debug + PartialEq + Eq + Hash + Num + Signed + Send + Sync {
    fn from_i64(v: i64) -> Self;
    /// Renders as `"num/den"` with the denominator always present.
    fn to_ratio_string(&self) -> String;
    fn parse_ratio(s: &str) -> Option<Self>;
    /// The value as `i64` if it is an integer in range.
    fn to_integer(&self) -> Option<i64>;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer + Clone + Signed + Hash + Debug + Display + FromStr + FromPrimitive + ToPrimitive + Send + Sync,
{
    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("integer fits scalar"))
    }

    fn to_ratio_string(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }

    fn parse_ratio(s: &str) -> Option<Self> {
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim().parse().ok()?, d.trim().parse().ok()?),
            None => (s.trim().parse().ok()?, I::one()),
        };
        if d.is_zero() {
            return None;
        }
        Some(Ratio::new(n, d))
    }

    fn to_integer(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}
