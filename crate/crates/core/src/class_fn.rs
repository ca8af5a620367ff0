//! Class functions on an enumerated Weyl group, exact over integers,
//! rationals or `Z[q]`, with induction from parabolic subgroups.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};
use crate::weyl_group::{ParabolicSubgroup, WeylGroup};

#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction<S> {
    group_id: u64,
    values: Vec<S>,
}

impl<S: Scalar> ClassFunction<S> {
    pub fn from_values(group: &WeylGroup, values: Vec<S>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::InvalidArgument(format!(
                "expected {} class values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(Self { group_id: group.id(), values })
    }

    /// Evaluate `f` on each class representative.
    pub fn from_fn(group: &WeylGroup, f: impl Fn(usize) -> S) -> Self {
        let values = group.classes().iter().map(|c| f(c.representative)).collect();
        Self { group_id: group.id(), values }
    }

    pub fn constant(group: &WeylGroup, c: S) -> Self {
        Self { group_id: group.id(), values: vec![c; group.num_classes()] }
    }

    pub fn group_id(&self) -> u64 {
        self.group_id
    }

    pub fn values(&self) -> &[S] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &S {
        &self.values[class]
    }

    /// Value at an arbitrary element.
    pub fn at(&self, group: &WeylGroup, element: usize) -> &S {
        &self.values[group.class_of(element)]
    }

    pub fn same_group(&self, other: &Self) -> Result<()> {
        if self.group_id == other.group_id {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip(&self, other: &Self, op: impl Fn(&S, &S) -> S) -> Result<Self> {
        self.same_group(other)?;
        let values = self.values.iter().zip(&other.values).map(|(a, b)| op(a, b)).collect();
        Ok(Self { group_id: self.group_id, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, S::add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, S::sub)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.zip(other, S::mul)
    }

    pub fn scale(&self, k: &S) -> Self {
        self.map(|v| v.mul(k))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> ClassFunction<T> {
        ClassFunction { group_id: self.group_id, values: self.values.iter().map(f).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(S::is_zero)
    }

    pub fn table(&self, group: &WeylGroup) -> Result<ClassFunctionTable> {
        if group.id() != self.group_id {
            return Err(Error::GroupMismatch);
        }
        let classes = group
            .classes()
            .iter()
            .zip(&self.values)
            .map(|(c, v)| ClassRow {
                representative: group.element(c.representative).word_string(),
                size: c.size(),
                value: v.to_json(),
            })
            .collect();
        Ok(ClassFunctionTable {
            group: GroupLabel { type_label: group.root_system().label().to_string(), rank: group.rank() },
            classes,
        })
    }
}

impl ClassFunction<i64> {
    pub fn trivial(group: &WeylGroup) -> Self {
        Self::constant(group, 1)
    }

    pub fn sign(group: &WeylGroup) -> Self {
        Self::from_fn(group, |w| group.sign(w))
    }

    pub fn regular(group: &WeylGroup) -> Self {
        Self::from_fn(group, |w| if w == 0 { group.order() as i64 } else { 0 })
    }

    pub fn to_rational(&self) -> ClassFunction<Rational> {
        self.map(|&v| Rational::from_integer(v))
    }

    pub fn to_poly(&self) -> ClassFunction<crate::poly::PolyZ> {
        self.map(|&v| crate::poly::PolyZ::constant(v))
    }
}

/// `<f, g> = (1/|W|) sum_w f(w) g(w)`; Weyl group characters are real.
pub fn inner_product<S>(group: &WeylGroup, f: &ClassFunction<S>, g: &ClassFunction<S>) -> Result<Rational>
where
    S: Scalar + Into<Rational>,
{
    f.same_group(g)?;
    if f.group_id != group.id() {
        return Err(Error::GroupMismatch);
    }
    let total: Rational = group
        .classes()
        .iter()
        .zip(f.values.iter().zip(&g.values))
        .map(|(c, (a, b))| a.clone().into() * b.clone().into() * Rational::from_integer(c.size() as i64))
        .sum();
    Ok(total / Rational::from_integer(group.order() as i64))
}

/// Frobenius' formula: `(Ind f)(w) = (1/|W_J|) sum_{x : x^-1 w x in W_J} f(x^-1 w x)`.
pub fn induce<S: Scalar>(f: &ClassFunction<S>, sub: &ParabolicSubgroup, group: &WeylGroup) -> Result<ClassFunction<S>> {
    if sub.parent_id() != group.id() || f.group_id != sub.group.id() {
        return Err(Error::NotEmbedded);
    }
    let table = group.conjugation_table();
    let order = sub.order() as i64;
    let values = table
        .iter()
        .enumerate()
        .map(|(c, conj)| {
            let sum = conj
                .iter()
                .filter_map(|&y| sub.preimage(y as usize))
                .fold(S::zero(), |acc, u| acc.add(f.at(&sub.group, u)));
            sum.div_int(order).ok_or_else(|| Error::InexactDivision {
                context: format!("induction to class {c}: {sum} / {order}"),
            })
        })
        .collect::<Result<_>>()?;
    Ok(ClassFunction { group_id: group.id(), values })
}

pub fn restrict<S: Scalar>(g: &ClassFunction<S>, sub: &ParabolicSubgroup, group: &WeylGroup) -> Result<ClassFunction<S>> {
    if sub.parent_id() != group.id() || g.group_id != group.id() {
        return Err(Error::NotEmbedded);
    }
    Ok(ClassFunction::from_fn(&sub.group, |u| g.at(group, sub.embed(u)).clone()))
}

#[derive(Debug, Clone, Serialize)]
pub struct GroupLabel {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub representative: String,
    pub size: usize,
    pub value: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassFunctionTable {
    pub group: GroupLabel,
    pub classes: Vec<ClassRow>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{build_root_system, Family};
    use crate::weyl_group::subsets_by_size;
    use proptest::prelude::*;

    fn group(f: Family, r: usize) -> WeylGroup {
        WeylGroup::enumerate(&build_root_system(f, r).unwrap()).unwrap()
    }

    fn values_by_word(g: &WeylGroup, f: &ClassFunction<i64>, words: &[&[usize]]) -> Vec<i64> {
        words.iter().map(|w| *f.at(g, g.from_word(w).unwrap())).collect()
    }

    #[test]
    fn regular_from_trivial_subgroup() {
        let s2 = group(Family::A, 1);
        let triv_sub = s2.parabolic_subgroup(&[]).unwrap();
        let ind = induce(&ClassFunction::trivial(&triv_sub.group), &triv_sub, &s2).unwrap();
        assert_eq!(ind.values(), &[2, 0]);
        assert_eq!(ind, ClassFunction::regular(&s2));
    }

    #[test]
    fn s2_to_s3() {
        let s3 = group(Family::A, 2);
        let sub = s3.parabolic_subgroup(&[0]).unwrap();
        let ind = induce(&ClassFunction::trivial(&sub.group), &sub, &s3).unwrap();
        assert_eq!(values_by_word(&s3, &ind, &[&[], &[0], &[0, 1]]), vec![3, 1, 0]);
    }

    #[test]
    fn induced_trivial_at_identity_is_index() {
        let g = group(Family::B, 3);
        for j in subsets_by_size(3) {
            let sub = g.parabolic_subgroup(&j).unwrap();
            let ind = induce(&ClassFunction::trivial(&sub.group), &sub, &g).unwrap();
            assert_eq!(*ind.at(&g, 0) as usize, g.parabolic_index(&j).unwrap());
        }
    }

    #[test]
    fn inner_products() {
        let s3 = group(Family::A, 2);
        let reg = ClassFunction::regular(&s3);
        let triv = ClassFunction::trivial(&s3);
        assert_eq!(inner_product(&s3, &reg, &triv).unwrap(), Rational::from_integer(1));
        let s2 = group(Family::A, 1);
        let lam = ClassFunction::from_values(&s2, vec![0, 2]).unwrap();
        assert_eq!(inner_product(&s2, &lam, &ClassFunction::trivial(&s2)).unwrap(), Rational::from_integer(1));
        assert_eq!(inner_product(&s2, &lam, &ClassFunction::sign(&s2)).unwrap(), Rational::from_integer(-1));
        assert_eq!(inner_product(&s3, &lam, &lam), Err(Error::GroupMismatch));
    }

    #[test]
    fn mismatched_embedding_is_rejected() {
        let a2 = group(Family::A, 2);
        let other = group(Family::A, 2);
        let sub = other.parabolic_subgroup(&[0]).unwrap();
        let f = ClassFunction::trivial(&sub.group);
        assert_eq!(induce(&f, &sub, &a2), Err(Error::NotEmbedded));
        assert!(ClassFunction::trivial(&a2).add(&ClassFunction::trivial(&other)).is_err());
    }

    #[test]
    fn integer_class_functions_induce_integrally() {
        // |C_H(u)| divides |C_W(u)|, so the Frobenius division is exact even off characters
        let g = group(Family::G, 2);
        let sub = g.parabolic_subgroup(&[0]).unwrap();
        let f = ClassFunction::from_values(&sub.group, vec![1, 0]).unwrap();
        let exact = induce(&f, &sub, &g).unwrap();
        assert_eq!(induce(&f.to_rational(), &sub, &g).unwrap(), exact.to_rational());
        assert_eq!(*exact.at(&g, 0), 6);
    }

    #[test]
    fn induction_commutes_with_scalar_extension() {
        let g = group(Family::B, 2);
        let sub = g.parabolic_subgroup(&[1]).unwrap();
        let f = ClassFunction::sign(&sub.group);
        let lifted = induce(&f.to_poly(), &sub, &g).unwrap();
        assert_eq!(lifted, induce(&f, &sub, &g).unwrap().to_poly());
    }

    #[test]
    fn transitivity_on_nested_parabolics() {
        for (fam, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::G, 2)] {
            let g = group(fam, r);
            for k in subsets_by_size(r) {
                let wk = g.parabolic_subgroup(&k).unwrap();
                for j_local in subsets_by_size(k.len()) {
                    let j: Vec<usize> = j_local.iter().map(|&i| k[i]).collect();
                    let wj = g.parabolic_subgroup(&j).unwrap();
                    let wj_in_k = wk.group.parabolic_subgroup(&j_local).unwrap();
                    let f = ClassFunction::sign(&wj.group);
                    let f_local = ClassFunction::sign(&wj_in_k.group);
                    let direct = induce(&f, &wj, &g).unwrap();
                    let staged = induce(&induce(&f_local, &wj_in_k, &wk.group).unwrap(), &wk, &g).unwrap();
                    assert_eq!(direct.values(), staged.values(), "{fam}{r} {j:?} in {k:?}");
                }
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn frobenius_reciprocity(seed in prop::collection::vec(-5i64..6, 64), j in 0usize..8) {
            let g = group(Family::B, 3);
            let subset = &subsets_by_size(3)[j];
            let sub = g.parabolic_subgroup(subset).unwrap();
            let f = ClassFunction::from_fn(&sub.group, |u| seed[sub.group.class_of(u) % 32]).to_rational();
            let h = ClassFunction::from_fn(&g, |w| seed[32 + g.class_of(w) % 32]).to_rational();
            let lhs = inner_product(&g, &induce(&f, &sub, &g).unwrap(), &h).unwrap();
            let rhs = inner_product(&sub.group, &f, &restrict(&h, &sub, &g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn induction_is_additive(a in prop::collection::vec(-9i64..9, 5), b in prop::collection::vec(-9i64..9, 5)) {
            let g = group(Family::A, 2);
            let sub = g.parabolic_subgroup(&[1]).unwrap();
            let f1 = ClassFunction::from_values(&sub.group, a[..2].to_vec()).unwrap().to_rational();
            let f2 = ClassFunction::from_values(&sub.group, b[..2].to_vec()).unwrap().to_rational();
            let lhs = induce(&f1.add(&f2).unwrap(), &sub, &g).unwrap();
            let rhs = induce(&f1, &sub, &g).unwrap().add(&induce(&f2, &sub, &g).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn norm_is_positive_definite(v in prop::collection::vec(-9i64..9, 5)) {
            let g = group(Family::A, 3);
            let f = ClassFunction::from_values(&g, v.clone()).unwrap();
            let n = inner_product(&g, &f, &f).unwrap();
            prop_assert!(n >= Rational::from_integer(0));
            prop_assert_eq!(n == Rational::from_integer(0), v.iter().all(|&x| x == 0));
        }
    }
}
