//! Matching the Weyl group of type `A_{n-1}` with `S_n`, so that class
//! functions computed from root data can be compared with cycle-type formulas.

use std::collections::HashMap;

use crate::class_fn::ClassFunction;
use crate::coxeter_euler::{lambda_main, pi_two};
use crate::error::{Error, Result};
use crate::root_system::{build_root_system, Family};
use crate::scalar::{Rational, Scalar};
use crate::weyl_group::WeylGroup;

use super::partition::{cycle_type, table, Partition};
use super::ring::CycleTypeFunction;

/// Weyl group of `S_n`: type `A_{n-1}`, or the rank-0 system when `n = 1`.
pub fn symmetric_weyl_group(n: usize) -> Result<WeylGroup> {
    match n {
        0 => Err(Error::InvalidArgument("S_n needs n >= 1".into())),
        1 => WeylGroup::enumerate(&build_root_system(Family::A, 1)?.parabolic_subsystem(&[])?),
        _ => WeylGroup::enumerate(&build_root_system(Family::A, n - 1)?),
    }
}

/// Reads off permutations of `0..n` from the action on roots `e_a - e_b`.
pub struct TypeAPermutations {
    n: usize,
    root_of_pair: HashMap<(usize, usize), usize>,
    pair_of_root: Vec<(usize, usize)>,
}

impl TypeAPermutations {
    pub fn new(group: &WeylGroup) -> Result<Self> {
        let sys = group.root_system();
        if sys.rank() == 0 {
            return Ok(Self { n: 1, root_of_pair: HashMap::new(), pair_of_root: Vec::new() });
        }
        if sys.family() != Some(Family::A) {
            return Err(Error::InvalidArgument(format!("{} is not of type A", sys.label())));
        }
        let mut pair_of_root = Vec::new();
        for v in sys.roots() {
            let pos = v.iter().position(|c| *c == Rational::from_integer(1));
            let neg = v.iter().position(|c| *c == Rational::from_integer(-1));
            match (pos, neg) {
                (Some(a), Some(b)) => pair_of_root.push((a, b)),
                _ => return Err(Error::Inconsistent("type A root is not e_a - e_b".into())),
            }
        }
        let root_of_pair = pair_of_root.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        Ok(Self { n: sys.ambient_dim(), root_of_pair, pair_of_root })
    }

    pub fn permutation(&self, group: &WeylGroup, w: usize) -> Vec<usize> {
        if self.n == 1 {
            return vec![0];
        }
        let perm = &group.element(w).root_perm;
        (0..self.n)
            .map(|i| {
                let other = (i + 1) % self.n;
                let root = self.root_of_pair[&(i, other)];
                self.pair_of_root[perm[root] as usize].0
            })
            .collect()
    }

    pub fn cycle_type(&self, group: &WeylGroup, w: usize) -> Partition {
        cycle_type(&self.permutation(group, w))
    }
}

/// Re-index a class function on the Weyl group of `S_n` by cycle type.
pub fn to_cycle_type_function<S: Scalar>(group: &WeylGroup, f: &ClassFunction<S>) -> Result<CycleTypeFunction<S>> {
    let perms = TypeAPermutations::new(group)?;
    let n = perms.n;
    let mut values: Vec<Option<S>> = vec![None; table(n).partitions.len()];
    for (c, class) in group.classes().iter().enumerate() {
        let lambda = perms.cycle_type(group, class.representative);
        let slot = &mut values[table(n).index_of(&lambda)];
        if slot.is_some() {
            return Err(Error::Inconsistent(format!("two classes with cycle type {lambda}")));
        }
        *slot = Some(f.value(c).clone());
    }
    let values = values
        .into_iter()
        .collect::<Option<Vec<S>>>()
        .ok_or_else(|| Error::Inconsistent("some cycle type has no class".into()))?;
    CycleTypeFunction::from_values(n, values)
}

/// The root-data equivariant Euler characteristic for `S_n`, by cycle type.
pub fn lambda_main_by_cycle_type(n: usize) -> Result<CycleTypeFunction<i64>> {
    let g = symmetric_weyl_group(n)?;
    to_cycle_type_function(&g, &lambda_main(&g)?)
}

/// The `N/2N` permutation character for `S_n` from lattice matrices, by cycle type.
pub fn pi_two_by_cycle_type(n: usize) -> Result<CycleTypeFunction<i64>> {
    let g = symmetric_weyl_group(n)?;
    to_cycle_type_function(&g, &pi_two(&g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::class_fn::induce;
    use crate::symn::partition::partitions;
    use crate::symn::ring::induction_product;
    use crate::symn::typea::{lambda_typea, pi_two_typea};

    #[test]
    fn classes_match_cycle_types() {
        for n in 1..=6 {
            let g = symmetric_weyl_group(n).unwrap();
            let perms = TypeAPermutations::new(&g).unwrap();
            assert_eq!(g.num_classes(), partitions(n).len());
            for w in 0..g.order() {
                let lambda = perms.cycle_type(&g, w);
                let rep = g.classes()[g.class_of(w)].representative;
                assert_eq!(lambda, perms.cycle_type(&g, rep));
                assert_eq!(g.sign(w), lambda.sign());
            }
        }
    }

    #[test]
    fn weyl_and_symmetric_descents_agree() {
        // d(w) is the descent count of w or of w^-1 depending on conventions;
        // the histograms coincide
        for n in 2..=6 {
            let g = symmetric_weyl_group(n).unwrap();
            let perms = TypeAPermutations::new(&g).unwrap();
            let mut hist_roots = vec![0usize; n];
            let mut hist_perm = vec![0usize; n];
            for w in 0..g.order() {
                hist_roots[g.descent_number(w)] += 1;
                let p = perms.permutation(&g, w);
                hist_perm[(0..n - 1).filter(|&i| p[i] > p[i + 1]).count()] += 1;
            }
            assert_eq!(hist_roots, hist_perm);
        }
    }

    #[test]
    fn pi_two_lattice_route_matches_closed_form() {
        for n in 1..=7 {
            let via_lattice = pi_two_by_cycle_type(n).unwrap();
            assert_eq!(via_lattice, CycleTypeFunction::from_fn(n, pi_two_typea), "n={n}");
        }
    }

    #[test]
    fn lambda_routes_small() {
        for n in 1..=6 {
            assert_eq!(lambda_main_by_cycle_type(n).unwrap(), lambda_typea(n), "n={n}");
        }
    }

    #[test]
    fn induction_product_matches_frobenius_on_young_subgroups() {
        for n in 2..=6 {
            let g = symmetric_weyl_group(n).unwrap();
            let perms = TypeAPermutations::new(&g).unwrap();
            for a in 1..n {
                let b = n - a;
                // S_a x S_b is generated by all simple reflections except s_a
                let subset: Vec<usize> = (0..n - 1).filter(|&j| j != a - 1).collect();
                let sub = g.parabolic_subgroup(&subset).unwrap();
                let f = CycleTypeFunction::<i64>::from_fn(a, |p| p.len() as i64 * 2 - p.parts()[0] as i64);
                let h = CycleTypeFunction::<i64>::from_fn(b, |p| p.sign() * (p.len() as i64 + 1));
                let on_sub = ClassFunction::from_fn(&sub.group, |u| {
                    let perm = perms.permutation(&g, sub.embed(u));
                    let left = cycle_type(&perm[..a]);
                    let right: Vec<usize> = perm[a..].iter().map(|&x| x - a).collect();
                    f.value(&left) * h.value(&cycle_type(&right))
                });
                let induced = to_cycle_type_function(&g, &induce(&on_sub, &sub, &g).unwrap()).unwrap();
                assert_eq!(induced, induction_product(&f, &h), "n={n} a={a}");
            }
        }
    }

    #[test]
    fn non_type_a_is_rejected() {
        let g = WeylGroup::enumerate(&build_root_system(Family::B, 2).unwrap()).unwrap();
        assert!(TypeAPermutations::new(&g).is_err());
    }
}
