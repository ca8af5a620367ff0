//! Equivariant and ordinary Euler characteristics of the real toric variety
//! attached to a Weyl group, computed along independent routes.

use serde::Serialize;

use crate::class_fn::{induce, ClassFunction, ClassFunctionTable};
use crate::error::Result;
use crate::poly::PolyZ;
use crate::weyl_group::{ParabolicSubgroup, WeylGroup};

/// Permutation character of `W` on `N/2N`: `2^(r - rank_F2(M_w - I))`.
pub fn pi_two(group: &WeylGroup) -> ClassFunction<i64> {
    let r = group.rank();
    ClassFunction::from_fn(group, |w| {
        let rank2 = group.weight_action_matrix(w).minus_identity().rank_mod2();
        1i64 << (r - rank2)
    })
}

/// `phi_W = (-1)^r eps_W pi^(2)`: compact-support Euler characteristic of
/// the fixed points on the real torus.
pub fn phi(group: &WeylGroup) -> ClassFunction<i64> {
    let parity = if group.rank() % 2 == 0 { 1 } else { -1 };
    let pi = pi_two(group);
    ClassFunction::from_fn(group, |w| parity * group.sign(w) * pi.at(group, w))
}

fn sum_over_parabolics(
    group: &WeylGroup,
    parabolics: &[ParabolicSubgroup],
    term: impl Fn(&ParabolicSubgroup) -> ClassFunction<i64>,
) -> Result<ClassFunction<i64>> {
    let mut acc = ClassFunction::constant(group, 0);
    for p in parabolics {
        acc = acc.add(&induce(&term(p), p, group)?)?;
    }
    Ok(acc)
}

/// `eps_W * sum_J (-1)^|J| Ind_{W_J}^W pi^(2)_{W_J}`.
pub fn lambda_main(group: &WeylGroup) -> Result<ClassFunction<i64>> {
    lambda_main_with(group, &group.all_parabolics()?)
}

pub fn lambda_main_with(group: &WeylGroup, parabolics: &[ParabolicSubgroup]) -> Result<ClassFunction<i64>> {
    let sum = sum_over_parabolics(group, parabolics, |p| {
        let sign = if p.subset.len() % 2 == 0 { 1 } else { -1 };
        pi_two(&p.group).scale(&sign)
    })?;
    sum.mul(&ClassFunction::sign(group))
}

/// `sum_J Ind_{W_J}^W phi_{W_J}`, from the torus-orbit decomposition.
pub fn lambda_orbit(group: &WeylGroup) -> Result<ClassFunction<i64>> {
    lambda_orbit_with(group, &group.all_parabolics()?)
}

pub fn lambda_orbit_with(group: &WeylGroup, parabolics: &[ParabolicSubgroup]) -> Result<ClassFunction<i64>> {
    sum_over_parabolics(group, parabolics, |p| phi(&p.group))
}

/// `sum_w (-1)^d(w)`, from the cell decomposition.
pub fn euler_char_descents(group: &WeylGroup) -> i64 {
    (0..group.order()).map(|w| if group.descent_number(w) % 2 == 0 { 1 } else { -1 }).sum()
}

/// `sum_J [W:W_J] (-2)^|J|`.
pub fn euler_char_orbit(group: &WeylGroup, parabolics: &[ParabolicSubgroup]) -> i64 {
    parabolics
        .iter()
        .map(|p| (group.order() / p.order()) as i64 * (-2i64).pow(p.subset.len() as u32))
        .sum()
}

/// `sum_w q^d(w)`.
pub fn poincare_cells(group: &WeylGroup) -> PolyZ {
    PolyZ::from_coeffs(group.descent_histogram().into_iter().map(|c| c as i64).collect())
}

/// `sum_J [W:W_J] (q-1)^|J|`.
pub fn poincare_orbits(group: &WeylGroup, parabolics: &[ParabolicSubgroup]) -> PolyZ {
    let qm1 = PolyZ::from_coeffs(vec![-1, 1]);
    parabolics.iter().fold(PolyZ::zero(), |acc, p| {
        let index = (group.order() / p.order()) as i64;
        &acc + &qm1.pow(p.subset.len()).scale(index)
    })
}

pub fn poincare_check(group: &WeylGroup) -> Result<(PolyZ, PolyZ)> {
    let parabolics = group.all_parabolics()?;
    Ok((poincare_cells(group), poincare_orbits(group, &parabolics)))
}

#[derive(Debug, Clone)]
pub struct EulerReport {
    pub chi_descents: i64,
    pub chi_orbits: i64,
    pub lambda: ClassFunction<i64>,
    pub lambda_orbit: ClassFunction<i64>,
    pub poincare_cells: PolyZ,
    pub poincare_orbits: PolyZ,
}

impl EulerReport {
    pub fn compute(group: &WeylGroup) -> Result<Self> {
        let parabolics = group.all_parabolics()?;
        Ok(Self {
            chi_descents: euler_char_descents(group),
            chi_orbits: euler_char_orbit(group, &parabolics),
            lambda: lambda_main_with(group, &parabolics)?,
            lambda_orbit: lambda_orbit_with(group, &parabolics)?,
            poincare_cells: poincare_cells(group),
            poincare_orbits: poincare_orbits(group, &parabolics),
        })
    }

    /// Names of the violated consistency conditions, empty when all hold.
    pub fn inconsistencies(&self) -> Vec<&'static str> {
        let mut bad = Vec::new();
        if self.chi_descents != self.chi_orbits {
            bad.push("chi_descents != chi_orbits");
        }
        // class 0 is always the identity
        if *self.lambda.value(0) != self.chi_descents {
            bad.push("lambda(e) != chi");
        }
        if self.lambda != self.lambda_orbit {
            bad.push("lambda_main != lambda_orbit");
        }
        if self.poincare_cells != self.poincare_orbits {
            bad.push("poincare_cells != poincare_orbits");
        }
        if self.poincare_cells.eval(-1) != self.chi_descents {
            bad.push("poincare(-1) != chi");
        }
        bad
    }

    pub fn document(&self, group: &WeylGroup) -> Result<EulerDocument> {
        Ok(EulerDocument {
            type_label: group.root_system().label().to_string(),
            rank: group.rank(),
            order: group.order(),
            chi: self.chi_descents,
            chi_descents: self.chi_descents,
            chi_orbits: self.chi_orbits,
            poincare_cells: self.poincare_cells.coeffs().to_vec(),
            poincare_orbits: self.poincare_orbits.coeffs().to_vec(),
            lambda: self.lambda.table(group)?,
            consistent: self.inconsistencies().is_empty(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerDocument {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub order: usize,
    pub chi: i64,
    pub chi_descents: i64,
    pub chi_orbits: i64,
    pub poincare_cells: Vec<i64>,
    pub poincare_orbits: Vec<i64>,
    pub lambda: ClassFunctionTable,
    pub consistent: bool,
}
