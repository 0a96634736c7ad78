use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer ring used by the lattice and torus code.
///
/// Implemented for every signed integer type that supports Euclidean
/// division, in practice `i64`, `i128` and `num_bigint::BigInt`.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
    fn from_small(v: i64) -> Self {
        Self::from_i64(v).expect("small integer fits every ExactInt")
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + Debug + Display + Hash + FromPrimitive + ToPrimitive + Send + Sync
{
}
