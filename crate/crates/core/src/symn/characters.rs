//! Irreducible characters of `S_n` by the Murnaghan-Nakayama rule, and
//! decomposition of class functions into irreducibles.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::scalar::Rational;

use super::partition::{table, Partition};
use super::ring::CycleTypeFunction;

/// Rows indexed by irreducibles, columns by cycle types, both in partition table order.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub n: usize,
    pub rows: Vec<CycleTypeFunction<i64>>,
}

impl CharacterTable {
    pub fn character(&self, shape: &Partition) -> &CycleTypeFunction<i64> {
        &self.rows[table(self.n).index_of(shape)]
    }

    pub fn shapes(&self) -> &'static [Partition] {
        &table(self.n).partitions
    }
}

/// `chi^shape(cycle_type)`: strip border strips of length `mu_1, mu_2, ...`
/// off `shape`, using its beta-set.
pub fn mn_character(shape: &Partition, cycle_type: &Partition) -> i64 {
    let mut memo = HashMap::new();
    mn(shape.parts(), cycle_type.parts(), &mut memo)
}

fn mn(shape: &[usize], rest: &[usize], memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>) -> i64 {
    let Some((&k, tail)) = rest.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), rest.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let len = shape.len();
    let beta: Vec<usize> = shape.iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut next = beta.clone();
        next[i] = b - k;
        next.sort_unstable_by(|x, y| y.cmp(x));
        let reduced: Vec<usize> = next
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (len - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&reduced, tail, memo);
    }
    memo.insert(key, total);
    total
}

pub fn mn_character_table(n: usize) -> CharacterTable {
    let rows = table(n)
        .partitions
        .iter()
        .map(|shape| CycleTypeFunction::from_fn(n, |mu| mn_character(shape, mu)))
        .collect();
    CharacterTable { n, rows }
}

/// `<f, g> = sum_mu f(mu) g(mu) / z_mu`.
pub fn sn_inner_product(f: &CycleTypeFunction<i64>, g: &CycleTypeFunction<i64>) -> Rational {
    f.iter()
        .zip(g.values())
        .map(|((mu, a), b)| Rational::new(a * b, mu.z()))
        .sum()
}

/// Multiplicity of each irreducible in `f`, nonzero entries only, in table order.
/// Fails if some multiplicity is not an integer.
pub fn decompose(f: &CycleTypeFunction<i64>) -> Result<Vec<(Partition, i64)>> {
    let chars = mn_character_table(f.n());
    let mut out = Vec::new();
    for (shape, chi) in chars.shapes().iter().zip(&chars.rows) {
        let m = sn_inner_product(f, chi);
        if !m.is_integer() {
            return Err(Error::NonIntegral { partition: shape.to_string(), value: m.to_string() });
        }
        if m != Rational::from_integer(0) {
            out.push((shape.clone(), m.to_integer()));
        }
    }
    Ok(out)
}

pub fn reconstruct(n: usize, multiplicities: &[(Partition, i64)]) -> CycleTypeFunction<i64> {
    let chars = mn_character_table(n);
    multiplicities.iter().fold(CycleTypeFunction::zero(n), |acc, (shape, m)| {
        acc.add(&chars.character(shape).scale(m))
    })
}
