//! Type-A formulas: the mod-2 permutation character by cycle type, the
//! explicit alternating sum for the equivariant Euler characteristic, the
//! generating series for the complex variety, and the tuple counts behind
//! the even-order vanishing.

use crate::error::Result;
use crate::poly::PolyZ;
use crate::scalar::Scalar;

use super::partition::Partition;
use super::ring::{induction_product, CycleTypeFunction, GradedSeries};

/// `pi^(2)(w) = 2^(c-1)` if `w` has an odd cycle, `2^c` if every cycle is even.
pub fn pi_two_typea(lambda: &Partition) -> i64 {
    let c = lambda.len() as u32;
    if lambda.has_odd_part() {
        1 << (c - 1)
    } else {
        1 << c
    }
}

/// `sum_{s even} Ind_{S_{n-s} x S_s}(1)` evaluated at `lambda`.
pub fn pi_two_binomial(lambda: &Partition) -> i64 {
    let n = lambda.size();
    (0..=n)
        .step_by(2)
        .map(|s| {
            let ind = induction_product(&CycleTypeFunction::<i64>::trivial(n - s), &CycleTypeFunction::trivial(s));
            *ind.value(lambda)
        })
        .sum()
}

/// Number of even-size subsets of `{0..n-1}` stable under a permutation of type `lambda`.
pub fn even_stable_subsets(lambda: &Partition) -> i64 {
    let n = lambda.size();
    let perm = lambda.permutation();
    (0u32..1 << n)
        .filter(|m| m.count_ones() % 2 == 0)
        .filter(|m| (0..n).all(|i| (m >> i) & 1 == (m >> perm[i]) & 1))
        .count() as i64
}

/// Fixed points of `w` on `(Z/2)^n / (1,...,1)`, by listing all `2^n` vectors.
pub fn pi_two_quotient_count(lambda: &Partition) -> i64 {
    let n = lambda.size();
    let perm = lambda.permutation();
    let all = (1u32 << n) - 1;
    let fixed = (0u32..1 << n)
        .filter(|&a| {
            let mut image = 0u32;
            for i in 0..n {
                image |= ((a >> i) & 1) << perm[i];
            }
            image == a || image == a ^ all
        })
        .count() as i64;
    fixed / 2
}

/// `sum_n pi^(2)_{S_n}` with the degree-0 term `1`.
pub fn pi_two_series(degree: usize) -> GradedSeries<i64> {
    GradedSeries::from_fn(degree, |n| {
        if n == 0 {
            CycleTypeFunction::trivial(0)
        } else {
            CycleTypeFunction::from_fn(n, pi_two_typea)
        }
    })
}

/// `sum_n 1_{S_n}`.
pub fn trivial_series<S: Scalar>(degree: usize) -> GradedSeries<S> {
    GradedSeries::from_fn(degree, CycleTypeFunction::trivial)
}

/// `sum_n (-1)^n eps_{S_n}`.
pub fn alternating_sign_series<S: Scalar>(degree: usize) -> GradedSeries<S> {
    GradedSeries::from_fn(degree, |n| {
        let parity = if n % 2 == 0 { 1 } else { -1 };
        CycleTypeFunction::sign(n).scale(&S::from_int(parity))
    })
}

/// `sum_{n even} 1_{S_n}` including `n = 0`.
pub fn even_trivial_series<S: Scalar>(degree: usize) -> GradedSeries<S> {
    GradedSeries::from_fn(degree, |n| if n % 2 == 0 { CycleTypeFunction::trivial(n) } else { CycleTypeFunction::zero(n) })
}

/// `1 + sum_{n >= 2 even} eps_{S_n}`.
pub fn even_sign_series<S: Scalar>(degree: usize) -> GradedSeries<S> {
    GradedSeries::from_fn(degree, |n| if n % 2 == 0 { CycleTypeFunction::sign(n) } else { CycleTypeFunction::zero(n) })
}

/// Ordered tuples of even parts `>= 2` with sum at most `n`.
pub fn even_compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        for part in (2..=remaining).step_by(2) {
            prefix.push(part);
            rec(remaining - part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

/// `Ind_{S_{n-s} x S_{n_1} x ... x S_{n_m}}` of `1 x chi x ... x chi`, where
/// `chi` is the sign (`signed`) or trivial character on each even block.
fn young_term(n: usize, blocks: &[usize], signed: bool) -> CycleTypeFunction<i64> {
    let s: usize = blocks.iter().sum();
    blocks.iter().fold(CycleTypeFunction::trivial(n - s), |acc, &b| {
        let factor = if signed { CycleTypeFunction::sign(b) } else { CycleTypeFunction::trivial(b) };
        induction_product(&acc, &factor)
    })
}

/// The `m`-th inner sum of the explicit type-A formula:
/// `sum over (n_1..n_m) of Ind(1 x eps x ... x eps)`, without the sign `(-1)^m`.
pub fn lambda_typea_inner(n: usize, m: usize) -> CycleTypeFunction<i64> {
    even_compositions(n)
        .into_iter()
        .filter(|c| c.len() == m)
        .fold(CycleTypeFunction::zero(n), |acc, c| acc.add(&young_term(n, &c, true)))
}

/// Equivariant Euler characteristic of the real toric variety for `S_n`,
/// by the explicit alternating sum over tuples of even block sizes.
pub fn lambda_typea(n: usize) -> CycleTypeFunction<i64> {
    even_compositions(n).into_iter().fold(CycleTypeFunction::zero(n), |acc, c| {
        let term = young_term(n, &c, true);
        if c.len() % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
    })
}

/// `(sum 1_{S_n}) . (1 + sum_{n>=2 even} eps_{S_n})^-1`, whose degree-`n`
/// term is the equivariant Euler characteristic for `S_n`.
pub fn lambda_series(degree: usize) -> Result<GradedSeries<i64>> {
    Ok(trivial_series(degree).mul(&even_sign_series(degree).invert()?))
}

/// Euler (tangent) number: `E_n` is `n!` times the `x^n` coefficient of `tan x`,
/// zero for even `n`. Computed from the boustrophedon triangle.
pub fn euler_number(n: usize) -> i64 {
    if n % 2 == 0 {
        return 0;
    }
    zigzag(n)
}

/// Entringer/Seidel boustrophedon: the last entry of row `n` is the number
/// of alternating permutations of `n`.
pub fn zigzag(n: usize) -> i64 {
    let mut row = vec![1i64];
    for k in 1..=n {
        let mut next = vec![0i64; k + 1];
        for j in 1..=k {
            next[j] = next[j - 1] + row[k - j];
        }
        row = next;
    }
    row[n]
}

/// `gamma_{S_n}(w) = det_V(q - w)` on the reflection representation:
/// `prod_i (q^{lambda_i} - 1) / (q - 1)`.
pub fn gamma_char(n: usize) -> CycleTypeFunction<PolyZ> {
    let qm1 = PolyZ::from_coeffs(vec![-1, 1]);
    CycleTypeFunction::from_fn(n, |lambda| {
        let full = lambda.parts().iter().fold(PolyZ::constant(1), |acc, &k| {
            &acc * &(&PolyZ::monomial(1, k) - &PolyZ::constant(1))
        });
        full.div_exact(&qm1).expect("q - 1 divides the permutation characteristic polynomial")
    })
}

/// Graded character of the cohomology of the complex toric variety:
/// `(sum 1_{S_n}) / (1 - sum_{n>=2} (q + ... + q^{n-1}) 1_{S_n})`.
pub fn stembridge_series(degree: usize) -> Result<GradedSeries<PolyZ>> {
    let denominator = GradedSeries::from_fn(degree, |n| match n {
        0 => CycleTypeFunction::trivial(0),
        1 => CycleTypeFunction::zero(1),
        _ => {
            let q_range = PolyZ::from_coeffs((0..n).map(|i| i64::from(i > 0)).collect());
            CycleTypeFunction::constant(n, q_range.neg())
        }
    });
    Ok(trivial_series(degree).mul(&denominator.invert()?))
}

/// The same series as the inverse of `1 - sum_{n>=1} gamma_{S_n}`.
pub fn stembridge_via_gamma(degree: usize) -> Result<GradedSeries<PolyZ>> {
    GradedSeries::from_fn(degree, |n| if n == 0 { CycleTypeFunction::trivial(0) } else { gamma_char(n).neg() }).invert()
}

/// `sum_i (-1)^i tr(w, H^{2i})` for the complex variety: the `q = -1`
/// specialization of the degree-`n` term of the generating series.
pub fn complex_euler_trace(n: usize) -> Result<CycleTypeFunction<i64>> {
    Ok(stembridge_series(n)?.term(n).eval_q(-1))
}

/// The trivial-character analogue of the explicit formula:
/// `sum_m (-1)^m sum Ind_{S_{n-s} x S_{n_1} x ... x S_{n_m}}(1)`.
pub fn complex_euler_trace_direct(n: usize) -> CycleTypeFunction<i64> {
    even_compositions(n).into_iter().fold(CycleTypeFunction::zero(n), |acc, c| {
        let term = young_term(n, &c, false);
        if c.len() % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        }
    })
}

/// `f_m(w)`: ordered `m`-tuples of disjoint, nonempty, `w`-stable subsets of
/// even size, counted by brute force over stable subsets.
pub fn even_subset_tuples(lambda: &Partition, m: usize) -> i64 {
    let n = lambda.size();
    let perm = lambda.permutation();
    let candidates: Vec<u32> = (1u32..1 << n)
        .filter(|s| s.count_ones() % 2 == 0)
        .filter(|s| (0..n).all(|i| (s >> i) & 1 == (s >> perm[i]) & 1))
        .collect();
    fn count(candidates: &[u32], used: u32, left: usize) -> i64 {
        if left == 0 {
            return 1;
        }
        candidates
            .iter()
            .filter(|&&s| s & used == 0)
            .map(|&s| count(candidates, used | s, left - 1))
            .sum()
    }
    count(&candidates, 0, m)
}

/// Check `f_m(w) = m f_{m-1}(y) + (m+1) f_m(y)` for every `m`, where `y` is
/// `w` with one even cycle removed. `None` if `lambda` has no even part.
pub fn f_recursion_holds(lambda: &Partition) -> Option<bool> {
    let even = *lambda.parts().iter().find(|p| *p % 2 == 0)?;
    let y = lambda.without_part(even)?;
    let max_m = lambda.size() / 2 + 1;
    Some((0..=max_m).all(|m| {
        let prev = if m == 0 { 0 } else { even_subset_tuples(&y, m - 1) };
        even_subset_tuples(lambda, m) == m as i64 * prev + (m as i64 + 1) * even_subset_tuples(&y, m)
    }))
}

/// `sum_m (-1)^m f_m(w)`.
pub fn alternating_tuple_sum(lambda: &Partition) -> i64 {
    (0..=lambda.size() / 2)
        .map(|m| if m % 2 == 0 { 1 } else { -1 } * even_subset_tuples(lambda, m))
        .sum()
}
