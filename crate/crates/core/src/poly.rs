//! Dense univariate integer polynomials in `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolyZ {
    coeffs: Vec<i64>,
}

impl PolyZ {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_coeffs(vec![0, 1])
    }

    pub fn monomial(coeff: i64, degree: usize) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = coeff;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * q + c)
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// True if the coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let low = self.coeffs.iter().take_while(|&&c| c == 0).count();
        let c = &self.coeffs[low..];
        c.iter().eq(c.iter().rev())
    }

    /// Exact division; `None` if `divisor` is zero or does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &PolyZ) -> Option<PolyZ> {
        let d = divisor.degree()?;
        let lead = divisor.coeffs[d];
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return self.is_zero().then(PolyZ::zero);
        }
        let mut quot = vec![0; rem.len() - d];
        for k in (0..quot.len()).rev() {
            let top = rem[k + d];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            quot[k] = c;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
        rem.iter().all(|&c| c == 0).then(|| PolyZ::from_coeffs(quot))
    }

    /// Divide every coefficient by `d`, if each is a multiple of it.
    pub fn div_scalar_exact(&self, d: i64) -> Option<PolyZ> {
        if d == 0 {
            return None;
        }
        self.coeffs
            .iter()
            .map(|&c| (c % d == 0).then_some(c / d))
            .collect::<Option<Vec<_>>>()
            .map(PolyZ::from_coeffs)
    }
}

impl From<i64> for PolyZ {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &PolyZ {
    type Output = PolyZ;
    fn add(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::from_coeffs((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolyZ {
    type Output = PolyZ;
    fn sub(self, rhs: &PolyZ) -> PolyZ {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        PolyZ::from_coeffs((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolyZ {
    type Output = PolyZ;
    fn mul(self, rhs: &PolyZ) -> PolyZ {
        if self.is_zero() || rhs.is_zero() {
            return PolyZ::zero();
        }
        let mut out = vec![0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyZ::from_coeffs(out)
    }
}

impl Neg for &PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        self.scale(-1)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolyZ {
            type Output = PolyZ;
            fn $m(self, rhs: PolyZ) -> PolyZ { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PolyZ {
    type Output = PolyZ;
    fn neg(self) -> PolyZ {
        -&self
    }
}

impl fmt::Display for PolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{a}q")?,
                (_, 1) => write!(f, "q^{i}")?,
                _ => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly() -> impl Strategy<Value = PolyZ> {
        prop::collection::vec(-20i64..20, 0..6).prop_map(PolyZ::from_coeffs)
    }

    #[test]
    fn display() {
        assert_eq!(PolyZ::from_coeffs(vec![1, 4, 1]).to_string(), "1 + 4q + q^2");
        assert_eq!(PolyZ::from_coeffs(vec![0, -1, 0, 3]).to_string(), "-q + 3q^3");
        assert_eq!(PolyZ::zero().to_string(), "0");
    }

    #[test]
    fn cyclotomic_quotient() {
        let q3m1 = PolyZ::from_coeffs(vec![-1, 0, 0, 1]);
        let qm1 = PolyZ::from_coeffs(vec![-1, 1]);
        assert_eq!(q3m1.div_exact(&qm1), Some(PolyZ::from_coeffs(vec![1, 1, 1])));
        assert_eq!(PolyZ::from_coeffs(vec![1, 0, 1]).div_exact(&qm1), None);
        assert_eq!(PolyZ::q().div_exact(&PolyZ::zero()), None);
    }

    #[test]
    fn trailing_zeros_trimmed() {
        assert_eq!(PolyZ::from_coeffs(vec![1, 0, 0]).coeffs(), &[1]);
        assert!(PolyZ::from_coeffs(vec![0, 0]).is_zero());
        assert_eq!(PolyZ::zero().degree(), None);
    }

    proptest! {
        #[test]
        fn ring_laws(a in poly(), b in poly(), c in poly()) {
            prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn eval_is_a_homomorphism(a in poly(), b in poly(), x in -3i64..4) {
            prop_assert_eq!((&a * &b).eval(x), a.eval(x) * b.eval(x));
            prop_assert_eq!((&a + &b).eval(x), a.eval(x) + b.eval(x));
        }

        #[test]
        fn product_divides_back(a in poly(), low in prop::collection::vec(-20i64..20, 0..4)) {
            let mut c = low;
            c.push(1);
            let b = PolyZ::from_coeffs(c);
            prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
        }
    }
}
