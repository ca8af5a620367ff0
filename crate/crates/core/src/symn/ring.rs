//! Class functions of symmetric groups indexed by cycle type, the graded
//! ring they form under the induction product, and truncated series in it.

use crate::error::{Error, Result};
use crate::poly::PolyZ;
use crate::scalar::Scalar;

use super::partition::{table, Partition};

/// A class function of `S_n`, one value per partition of `n` in table order.
#[derive(Debug, Clone, PartialEq)]
pub struct CycleTypeFunction<S> {
    n: usize,
    values: Vec<S>,
}

impl<S: Scalar> CycleTypeFunction<S> {
    pub fn from_fn(n: usize, f: impl Fn(&Partition) -> S) -> Self {
        Self { n, values: table(n).partitions.iter().map(f).collect() }
    }

    pub fn from_values(n: usize, values: Vec<S>) -> Result<Self> {
        if values.len() != table(n).partitions.len() {
            return Err(Error::InvalidArgument(format!("wrong number of values for n = {n}")));
        }
        Ok(Self { n, values })
    }

    pub fn constant(n: usize, c: S) -> Self {
        Self::from_fn(n, |_| c.clone())
    }

    pub fn zero(n: usize) -> Self {
        Self::constant(n, S::zero())
    }

    /// `1_{S_n}`.
    pub fn trivial(n: usize) -> Self {
        Self::constant(n, S::one())
    }

    /// `eps_{S_n}`.
    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |p| S::from_int(p.sign()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn value(&self, p: &Partition) -> &S {
        &self.values[table(self.n).index_of(p)]
    }

    pub fn at_identity(&self) -> &S {
        self.values.last().expect("every n has the partition 1^n")
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'static Partition, &S)> {
        table(self.n).partitions.iter().zip(&self.values)
    }

    fn zip(&self, other: &Self, op: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.n, other.n, "class functions of different symmetric groups");
        Self { n: self.n, values: self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip(other, S::add)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip(other, S::sub)
    }

    pub fn pointwise_mul(&self, other: &Self) -> Self {
        self.zip(other, S::mul)
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|v| v.mul(k))
    }

    pub fn neg(&self) -> Self {
        self.map(S::neg)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> CycleTypeFunction<T> {
        CycleTypeFunction { n: self.n, values: self.values.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(S::is_zero)
    }

    /// JSON object keyed by partition strings in table order.
    pub fn to_json(&self) -> serde_json::Value {
        let map: serde_json::Map<String, serde_json::Value> =
            self.iter().map(|(p, v)| (p.to_string(), v.to_json())).collect();
        serde_json::Value::Object(map)
    }
}

impl CycleTypeFunction<PolyZ> {
    pub fn eval_q(&self, q: i64) -> CycleTypeFunction<i64> {
        self.map(|p| p.eval(q))
    }
}

/// `Ind_{S_a x S_b}^{S_{a+b}} (f x g)`, via
/// `(f.g)(mu) = sum_{lambda u nu = mu} f(lambda) g(nu) z_mu / (z_lambda z_nu)`.
/// The ratio of centralizer orders is a product of binomial coefficients.
pub fn induction_product<S: Scalar>(f: &CycleTypeFunction<S>, g: &CycleTypeFunction<S>) -> CycleTypeFunction<S> {
    let (a, b) = (f.n, g.n);
    CycleTypeFunction::from_fn(a + b, |mu| {
        let mults = mu.multiplicities();
        let mut acc = S::zero();
        let mut take = vec![0usize; mults.len()];
        split(&mults, 0, a, &mut take, &mut |take| {
            let mut left = Vec::new();
            let mut right = Vec::new();
            let mut coeff = 1i64;
            for (&(part, m), &k) in mults.iter().zip(take) {
                left.extend(std::iter::repeat(part).take(k));
                right.extend(std::iter::repeat(part).take(m - k));
                coeff *= binomial(m, k);
            }
            let term = f.value(&Partition::new(left)).mul(g.value(&Partition::new(right)));
            acc = acc.add(&term.scale(coeff));
        });
        acc
    })
}

fn split(mults: &[(usize, usize)], i: usize, remaining: usize, take: &mut Vec<usize>, visit: &mut impl FnMut(&[usize])) {
    if i == mults.len() {
        if remaining == 0 {
            visit(take);
        }
        return;
    }
    let (part, m) = mults[i];
    for k in 0..=m.min(remaining / part) {
        take[i] = k;
        split(mults, i + 1, remaining - k * part, take, visit);
    }
    take[i] = 0;
}

pub(crate) fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Truncated element of the completed graded ring `prod_n R(S_n)`, degrees `0..=D`.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedSeries<S> {
    terms: Vec<CycleTypeFunction<S>>,
}

impl<S: Scalar> GradedSeries<S> {
    pub fn from_fn(degree: usize, f: impl Fn(usize) -> CycleTypeFunction<S>) -> Self {
        let terms = (0..=degree)
            .map(|n| {
                let t = f(n);
                assert_eq!(t.n, n, "degree-{n} component has the wrong degree");
                t
            })
            .collect();
        Self { terms }
    }

    pub fn zero(degree: usize) -> Self {
        Self::from_fn(degree, CycleTypeFunction::zero)
    }

    /// The unit: trivial character of `S_0` in degree 0.
    pub fn one(degree: usize) -> Self {
        Self::from_fn(degree, |n| if n == 0 { CycleTypeFunction::trivial(0) } else { CycleTypeFunction::zero(n) })
    }

    pub fn degree(&self) -> usize {
        self.terms.len() - 1
    }

    pub fn term(&self, n: usize) -> &CycleTypeFunction<S> {
        &self.terms[n]
    }

    pub fn terms(&self) -> &[CycleTypeFunction<S>] {
        &self.terms
    }

    pub fn constant_term(&self) -> &S {
        &self.terms[0].values[0]
    }

    pub fn truncate(&self, degree: usize) -> Self {
        Self { terms: self.terms[..=degree.min(self.degree())].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        Self::from_fn(d, |n| self.terms[n].add(&other.terms[n]))
    }

    pub fn sub(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        Self::from_fn(d, |n| self.terms[n].sub(&other.terms[n]))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let d = self.degree().min(other.degree());
        Self::from_fn(d, |n| {
            (0..=n).fold(CycleTypeFunction::zero(n), |acc, k| {
                acc.add(&induction_product(&self.terms[k], &other.terms[n - k]))
            })
        })
    }

    /// Multiplicative inverse, degree by degree: `G_n = -sum_{k=1}^n F_k . G_{n-k}`.
    pub fn invert(&self) -> Result<Self> {
        if *self.constant_term() != S::one() {
            return Err(Error::NotInvertible);
        }
        let mut inv: Vec<CycleTypeFunction<S>> = vec![CycleTypeFunction::trivial(0)];
        for n in 1..=self.degree() {
            let sum = (1..=n).fold(CycleTypeFunction::zero(n), |acc, k| {
                acc.add(&induction_product(&self.terms[k], &inv[n - k]))
            });
            inv.push(sum.neg());
        }
        Ok(Self { terms: inv })
    }

    /// The involution `chi -> (-1)^n eps_{S_n} chi` on each degree.
    pub fn sign_involution(&self) -> Self {
        Self::from_fn(self.degree(), |n| {
            let parity = if n % 2 == 0 { 1 } else { -1 };
            self.terms[n].pointwise_mul(&CycleTypeFunction::sign(n)).scale(&S::from_int(parity))
        })
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> GradedSeries<T> {
        GradedSeries { terms: self.terms.iter().map(|t| t.map(&f)).collect() }
    }
}

impl GradedSeries<PolyZ> {
    pub fn eval_q(&self, q: i64) -> GradedSeries<i64> {
        self.map(|p| p.eval(q))
    }
}
