//! Acceptance suite. Runs without the libtest harness so that the one-line
//! verdict per criterion is always printed. Pass `--enable-e6` after `--` to
//! include E6 in criteria 2 and 3.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use realtoric::class_fn::{induce, inner_product, restrict, ClassFunction};
use realtoric::coxeter_euler::{
    euler_char_descents, euler_char_orbit, lambda_main_with, lambda_orbit_with, phi, pi_two, poincare_cells,
    poincare_orbits,
};
use realtoric::root_system::{BuildOptions, Family, RootSystem};
use realtoric::symn::bridge::{lambda_main_by_cycle_type, pi_two_by_cycle_type, symmetric_weyl_group};
use realtoric::symn::characters::{decompose, mn_character_table, reconstruct, sn_inner_product};
use realtoric::symn::partition::partitions;
use realtoric::symn::ring::{CycleTypeFunction, GradedSeries};
use realtoric::symn::typea::*;
use realtoric::verify::{composition_orbit_sum, permutation_descent_sum};
use realtoric::weyl_group::{subsets_by_size, WeylGroup};
use realtoric::{PolyZ, Rational};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fact(n: usize) -> i64 {
    (1..=n as i64).product()
}

/// `n! [x^n] tan x`, from exact division of the sine and cosine series.
fn tangent_number(n: usize) -> i64 {
    let term = |k: usize, parity: usize| -> Rational {
        if k % 2 != parity {
            return Rational::from_integer(0);
        }
        let sign = if (k / 2) % 2 == 0 { 1 } else { -1 };
        Rational::new(sign, fact(k))
    };
    let mut tan = vec![Rational::from_integer(0); n + 1];
    for k in 0..=n {
        let acc: Rational = (1..=k).map(|j| term(j, 0) * tan[k - j]).sum();
        tan[k] = term(k, 1) - acc;
    }
    let v = tan[n] * Rational::from_integer(fact(n));
    assert!(v.is_integer());
    v.to_integer()
}

/// `chi(A_{n-1})` as predicted by the tangent numbers.
fn chi_oracle(n: usize) -> i64 {
    if n % 2 == 0 {
        0
    } else if (n - 1) / 2 % 2 == 0 {
        tangent_number(n)
    } else {
        -tangent_number(n)
    }
}

fn type_list(e6: bool) -> Vec<(Family, usize)> {
    let mut v = vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::A, 4),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
        (Family::F, 4),
    ];
    if e6 {
        v.push((Family::E, 6));
    }
    v
}

fn group(f: Family, r: usize) -> WeylGroup {
    let sys = RootSystem::build(f, r, BuildOptions { enable_e6: true }).unwrap();
    WeylGroup::enumerate(&sys).unwrap()
}

fn criterion1() -> Check {
    ensure([3, 5, 7, 9].map(chi_oracle) == [-2, 16, -272, 7936], || "tangent oracle values".into())?;
    for n in 2..=10 {
        let expected = chi_oracle(n);
        if n <= 8 {
            let g = symmetric_weyl_group(n).map_err(|e| e.to_string())?;
            let parabolics = g.all_parabolics().map_err(|e| e.to_string())?;
            let d = euler_char_descents(&g);
            let o = euler_char_orbit(&g, &parabolics);
            ensure(d == expected && o == expected, || format!("n={n}: descents {d}, orbits {o}, oracle {expected}"))?;
        }
        let d = permutation_descent_sum(n);
        let o = composition_orbit_sum(n);
        ensure(d == expected && o == expected, || format!("n={n} (permutations): descents {d}, orbits {o}, oracle {expected}"))?;
    }
    Ok(())
}

fn criterion2(e6: bool) -> Check {
    for (f, r) in type_list(e6) {
        let g = group(f, r);
        let parabolics = g.all_parabolics().unwrap();
        let main = lambda_main_with(&g, &parabolics).unwrap();
        let orbit = lambda_orbit_with(&g, &parabolics).unwrap();
        ensure(main == orbit, || format!("{f}{r}: {:?} vs {:?}", main.values(), orbit.values()))?;
        ensure(*main.value(0) == euler_char_descents(&g), || format!("{f}{r}: Lambda(e) != chi"))?;
    }
    Ok(())
}

fn criterion3(e6: bool) -> Check {
    for (f, r) in type_list(e6) {
        let g = group(f, r);
        let parabolics = g.all_parabolics().unwrap();
        let cells = poincare_cells(&g);
        let orbits = poincare_orbits(&g, &parabolics);
        ensure(cells == orbits, || format!("{f}{r}: {cells} vs {orbits}"))?;
        ensure(cells.eval(1) == g.order() as i64, || format!("{f}{r}: P(1) = {}", cells.eval(1)))?;
        let chi = if f == Family::A { chi_oracle(r + 1) } else { euler_char_orbit(&g, &parabolics) };
        ensure(cells.eval(-1) == chi, || format!("{f}{r}: P(-1) = {}, expected {chi}", cells.eval(-1)))?;
    }
    Ok(())
}

fn criterion4() -> Check {
    for n in 1..=8 {
        let lattice = pi_two_by_cycle_type(n).unwrap();
        for lambda in partitions(n) {
            let values = [
                pi_two_typea(&lambda),
                pi_two_binomial(&lambda),
                *lattice.value(&lambda),
                even_stable_subsets(&lambda),
            ];
            ensure(values.iter().all(|&v| v == values[0]), || format!("{lambda}: {values:?}"))?;
        }
    }
    Ok(())
}

fn criterion5() -> Check {
    for n in 1..=8 {
        let explicit = lambda_typea(n);
        let weyl = lambda_main_by_cycle_type(n).unwrap();
        ensure(explicit == weyl, || format!("n={n}: {:?} vs {:?}", explicit.values(), weyl.values()))?;
    }
    let s2 = CycleTypeFunction::<i64>::trivial(2).sub(&CycleTypeFunction::sign(2));
    ensure(lambda_typea(2) == s2, || "Lambda_S2 != trivial - sign".into())
}

fn criterion6() -> Check {
    let d = 8;
    let lambdas: Vec<CycleTypeFunction<i64>> = (1..=d).map(|n| lambda_main_by_cycle_type(n).unwrap()).collect();
    let lambda_gen =
        GradedSeries::from_fn(d, |n| if n == 0 { CycleTypeFunction::trivial(0) } else { lambdas[n - 1].clone() });
    let signed = lambda_gen.sign_involution();
    let triv = trivial_series::<i64>(d);
    let alt = alternating_sign_series::<i64>(d);
    let pi = pi_two_series(d);

    ensure(signed == pi.invert().unwrap(), || "first identity".into())?;
    ensure(pi == triv.mul(&even_trivial_series(d)), || "second identity".into())?;
    ensure(signed == alt.mul(&even_trivial_series::<i64>(d).invert().unwrap()), || "third identity".into())?;
    ensure(lambda_gen == triv.mul(&even_sign_series::<i64>(d).invert().unwrap()), || "fourth identity".into())?;
    ensure(triv.invert().unwrap() == alt, || "inverse identity".into())?;
    // the degree-n term of the trivial series times its inverse vanishes for n > 0
    ensure(triv.mul(&alt) == GradedSeries::one(d), || "inverse product".into())
}

fn criterion7() -> Check {
    let d = 8;
    let a = stembridge_series(d).unwrap();
    let b = stembridge_via_gamma(d).unwrap();
    ensure(a == b, || "rational-function route != inverse of 1 - sum gamma".into())?;
    for n in 0..=d {
        let at_e: &PolyZ = a.term(n).at_identity();
        ensure(at_e.eval(1) == fact(n), || format!("n={n}: identity at q=1 is {}", at_e.eval(1)))?;
    }
    Ok(())
}

fn criterion8() -> Check {
    for n in 1..=8 {
        let trace = complex_euler_trace(n).unwrap();
        let real = lambda_typea(n);
        let direct = complex_euler_trace_direct(n);
        ensure(trace == direct, || format!("n={n}: specialization != direct sum"))?;
        for (lambda, &v) in trace.iter() {
            if lambda.has_even_part() {
                ensure(v == 0, || format!("{lambda}: {v} on an even-order class"))?;
            } else {
                ensure(v == *real.value(lambda), || format!("{lambda}: {v} vs Lambda {}", real.value(lambda)))?;
            }
        }
    }
    for n in 1..=7 {
        for lambda in partitions(n).iter().filter(|l| l.has_even_part()) {
            ensure(f_recursion_holds(lambda) == Some(true), || format!("f recursion fails at {lambda}"))?;
        }
    }
    Ok(())
}

fn criterion9() -> Check {
    for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::A, 2), (Family::B, 2), (Family::G, 2)] {
        let g = group(f, r);
        let lam = lambda_main_with(&g, &g.all_parabolics().unwrap()).unwrap().to_rational();
        for k in subsets_by_size(r) {
            let wk = g.parabolic_subgroup(&k).unwrap();
            for j_local in subsets_by_size(k.len()) {
                let j: Vec<usize> = j_local.iter().map(|&i| k[i]).collect();
                let wj = g.parabolic_subgroup(&j).unwrap();
                let wj_in_k = wk.group.parabolic_subgroup(&j_local).unwrap();
                let direct = induce(&pi_two(&wj.group), &wj, &g).unwrap();
                let staged = induce(&induce(&pi_two(&wj_in_k.group), &wj_in_k, &wk.group).unwrap(), &wk, &g).unwrap();
                ensure(direct.values() == staged.values(), || format!("{f}{r}: transitivity {j:?} in {k:?}"))?;
            }
            let sub_fns = [phi(&wk.group).to_rational(), ClassFunction::sign(&wk.group).to_rational()];
            let fns = [lam.clone(), ClassFunction::trivial(&g).to_rational(), ClassFunction::sign(&g).to_rational()];
            for a in &sub_fns {
                for b in &fns {
                    let lhs = inner_product(&g, &induce(a, &wk, &g).unwrap(), b).unwrap();
                    let rhs = inner_product(&wk.group, a, &restrict(b, &wk, &g).unwrap()).unwrap();
                    ensure(lhs == rhs, || format!("{f}{r}: reciprocity at {k:?}"))?;
                }
            }
        }
    }
    for n in 1..=8 {
        let table = mn_character_table(n);
        for a in table.shapes() {
            for b in table.shapes() {
                let ip = sn_inner_product(table.character(a), table.character(b));
                let expected = Rational::from_integer(i64::from(a == b));
                ensure(ip == expected, || format!("<chi^{a}, chi^{b}> = {ip}"))?;
            }
        }
    }
    for n in 1..=8 {
        let mut chars = vec![lambda_typea(n), complex_euler_trace(n).unwrap(), pi_two_by_cycle_type(n).unwrap()];
        chars.extend((1..=n / 2).map(|m| lambda_typea_inner(n, m)));
        for f in chars {
            let m = decompose(&f).map_err(|e| format!("n={n}: {e}"))?;
            ensure(reconstruct(n, &m) == f, || format!("n={n}: reconstruction differs"))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let e6 = std::env::args().any(|a| a == "--enable-e6");
    let criteria: Vec<(&str, Box<dyn Fn() -> Check>)> = vec![
        ("Euler characteristics of A_{n-1}, n <= 10, by descents and orbits", Box::new(criterion1)),
        ("lambda_main = lambda_orbit on the type list", Box::new(move || criterion2(e6))),
        ("Poincare polynomial by cells and by orbits, q = 1 and q = -1", Box::new(move || criterion3(e6))),
        ("four routes to pi^(2) on S_n, n <= 8", Box::new(criterion4)),
        ("type-A formula = root-data formula, n <= 8; Lambda_S2", Box::new(criterion5)),
        ("series identities to degree 8", Box::new(criterion6)),
        ("two Stembridge series routes, degree 8; n! at q = 1", Box::new(criterion7)),
        ("q = -1 specialization: even vanishing, odd agreement, f_m recursion", Box::new(criterion8)),
        ("transitivity, reciprocity, orthonormality, decompose/reconstruct", Box::new(criterion9)),
    ];
    let mut failed = 0;
    let mut total = Duration::ZERO;
    for (i, (desc, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        total += elapsed;
        match result {
            Ok(()) => println!("PASS criterion {}: {desc} ({:.2}s)", i + 1, elapsed.as_secs_f64()),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {}: {desc}: {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed ({:.2}s)", criteria.len() - failed, total.as_secs_f64());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
