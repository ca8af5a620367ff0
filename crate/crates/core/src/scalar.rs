//! Exact scalar rings used for class-function values.

use std::fmt::{Debug, Display};

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::poly::PolyZ;

pub type Rational = Ratio<i64>;

/// A commutative ring with exact arithmetic: integers, rationals or `Z[q]`.
pub trait Scalar: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_int(v: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Division by a nonzero integer, `None` if the result leaves the ring.
    fn div_int(&self, d: i64) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn to_json(&self) -> serde_json::Value;

    fn scale(&self, k: i64) -> Self {
        self.mul(&Self::from_int(k))
    }
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn from_int(v: i64) -> Self {
        v
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Option<Self> {
        (d != 0 && self % d == 0).then(|| self / d)
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn to_json(&self) -> serde_json::Value {
        (*self).into()
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(v)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Option<Self> {
        (d != 0).then(|| self / d)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn to_json(&self) -> serde_json::Value {
        if self.is_integer() {
            self.to_integer().into()
        } else {
            self.to_string().into()
        }
    }
}

impl Scalar for PolyZ {
    fn zero() -> Self {
        PolyZ::zero()
    }
    fn one() -> Self {
        PolyZ::constant(1)
    }
    fn from_int(v: i64) -> Self {
        PolyZ::constant(v)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div_int(&self, d: i64) -> Option<Self> {
        self.div_scalar_exact(d)
    }
    fn is_zero(&self) -> bool {
        PolyZ::is_zero(self)
    }
    fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.coeffs()).expect("integer list serializes")
    }
}
