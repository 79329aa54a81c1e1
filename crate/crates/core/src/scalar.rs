use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num};

/// Exact ordered scalars usable as polytope coordinates and support values.
///
/// Floating-point types are deliberately not covered: face identity is
/// decided by exact equality and hashing of coordinates.
pub trait Scalar:
    Num + Clone + Ord + Hash + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable")
    }
}

impl<T> Scalar for T where
    T: Num + Clone + Ord + Hash + Debug + Display + FromStr + FromPrimitive + Send + Sync + 'static
{
}
