//! Named verification suites. Each suite runs one family of identities
//! within the given limits and records every comparison it makes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::class_fn::ClassFunction;
use crate::coxeter_euler::{euler_char_descents, euler_char_orbit, lambda_main_with, lambda_orbit_with, poincare_cells, poincare_orbits};
use crate::error::{Error, Result};
use crate::root_system::{BuildOptions, Family, RootSystem};
use crate::scalar::Scalar;
use crate::symn::bridge::{lambda_main_by_cycle_type, pi_two_by_cycle_type, symmetric_weyl_group};
use crate::symn::partition::{partitions, Partition};
use crate::symn::ring::{CycleTypeFunction, GradedSeries};
use crate::symn::typea::{
    alternating_sign_series, alternating_tuple_sum, complex_euler_trace, complex_euler_trace_direct,
    euler_number, even_sign_series, even_stable_subsets, even_trivial_series, f_recursion_holds,
    lambda_series, lambda_typea, pi_two_binomial, pi_two_series, pi_two_typea, stembridge_series,
    stembridge_via_gamma, trivial_series,
};
use crate::weyl_group::{WeylGroup, DEFAULT_GROUP_CAP};

/// Largest `n` for which `S_n` is enumerated as a Weyl group; beyond it the
/// Euler characteristic suite switches to plain permutations.
pub const MAX_WEYL_N: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Suite {
    MainVsOrbit,
    Poincare,
    EulerChar,
    PiClosedForm,
    Typea,
    SeriesIdentities,
    Stembridge,
    EvenVanishing,
    OddOrder,
    FRecursion,
    All,
}

impl Suite {
    pub const INDIVIDUAL: [Suite; 10] = [
        Suite::MainVsOrbit,
        Suite::Poincare,
        Suite::EulerChar,
        Suite::PiClosedForm,
        Suite::Typea,
        Suite::SeriesIdentities,
        Suite::Stembridge,
        Suite::EvenVanishing,
        Suite::OddOrder,
        Suite::FRecursion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MainVsOrbit => "main-vs-orbit",
            Suite::Poincare => "poincare",
            Suite::EulerChar => "euler-char",
            Suite::PiClosedForm => "pi-closed-form",
            Suite::Typea => "typea",
            Suite::SeriesIdentities => "series-identities",
            Suite::Stembridge => "stembridge",
            Suite::EvenVanishing => "even-vanishing",
            Suite::OddOrder => "odd-order",
            Suite::FRecursion => "f-recursion",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::INDIVIDUAL
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite '{s}'")))
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_rank: usize,
    pub max_n: usize,
    pub degree: usize,
    pub enable_e6: bool,
}

/// Upper bound on `n` and the truncation degree for the type-A suites.
pub const MAX_TYPEA_N: usize = 10;

impl Limits {
    pub fn validate(&self) -> Result<()> {
        if self.max_n > MAX_TYPEA_N || self.degree > MAX_TYPEA_N {
            return Err(Error::InvalidArgument(format!("--max-n and --degree must be at most {MAX_TYPEA_N}")));
        }
        Ok(())
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_rank: 4, max_n: 8, degree: 8, enable_e6: false }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub parameters: String,
    pub status: Status,
    pub lhs: Value,
    pub rhs: Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifySuiteResult {
    pub suite: String,
    pub checks: Vec<CheckRecord>,
    pub pass: bool,
}

impl VerifySuiteResult {
    fn new(suite: Suite) -> Self {
        Self { suite: suite.name().to_string(), checks: Vec::new(), pass: true }
    }

    fn check(&mut self, name: &str, parameters: impl Into<String>, lhs: Value, rhs: Value) {
        self.check_with(name, parameters, lhs == rhs, lhs, rhs);
    }

    fn check_with(&mut self, name: &str, parameters: impl Into<String>, ok: bool, lhs: Value, rhs: Value) {
        let status = if ok { Status::Pass } else { Status::Fail };
        self.pass &= ok;
        self.checks.push(CheckRecord { name: name.to_string(), parameters: parameters.into(), status, lhs, rhs });
    }
}

/// Root systems exercised by the Weyl-group suites, in canonical order.
pub fn catalog(limits: &Limits) -> Vec<(Family, usize)> {
    let m = limits.max_rank;
    let mut out = Vec::new();
    out.extend((1..=m).map(|r| (Family::A, r)));
    out.extend((2..=m).map(|r| (Family::B, r)));
    out.extend((3..=m).map(|r| (Family::C, r)));
    out.extend((4..=m).map(|r| (Family::D, r)));
    if limits.enable_e6 && m >= 6 {
        out.push((Family::E, 6));
    }
    if m >= 4 {
        out.push((Family::F, 4));
    }
    if m >= 2 {
        out.push((Family::G, 2));
    }
    out
}

fn weyl_group(family: Family, rank: usize, limits: &Limits) -> Result<WeylGroup> {
    let sys = RootSystem::build(family, rank, BuildOptions { enable_e6: limits.enable_e6 })?;
    WeylGroup::enumerate(&sys)
}

fn json_values<S: Scalar>(f: &ClassFunction<S>) -> Value {
    Value::Array(f.values().iter().map(Scalar::to_json).collect())
}

fn series_json<S: Scalar>(s: &GradedSeries<S>) -> Value {
    Value::Array(s.terms().iter().map(CycleTypeFunction::to_json).collect())
}

/// `(-1)^((n-1)/2) E_n` for odd `n`, zero for even `n`.
pub fn expected_typea_chi(n: usize) -> i64 {
    if n % 2 == 0 {
        0
    } else if (n - 1) / 2 % 2 == 0 {
        euler_number(n)
    } else {
        -euler_number(n)
    }
}

/// `sum_{w in S_n} (-1)^{des(w)}` over permutations listed in lexicographic order.
pub fn permutation_descent_sum(n: usize) -> i64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i64;
    loop {
        let des = perm.windows(2).filter(|w| w[0] > w[1]).count();
        total += if des % 2 == 0 { 1 } else { -1 };
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).expect("successor exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
    total
}

/// `sum_J [S_n : W_J] (-2)^|J|` with `W_J` ranging over Young subgroups,
/// i.e. over compositions of `n`.
pub fn composition_orbit_sum(n: usize) -> i64 {
    fn rec(remaining: usize, blocks: usize, denom: i64, n: usize, fact: &[i64], acc: &mut i64) {
        if remaining == 0 {
            let j = (n - blocks) as u32;
            *acc += fact[n] / denom * (-2i64).pow(j);
            return;
        }
        for b in 1..=remaining {
            rec(remaining - b, blocks + 1, denom * fact[b], n, fact, acc);
        }
    }
    let fact: Vec<i64> = (0..=n as i64).scan(1i64, |f, k| {
        if k > 0 {
            *f *= k;
        }
        Some(*f)
    }).collect();
    let mut acc = 0;
    rec(n, 0, 1, n, &fact, &mut acc);
    acc
}

fn main_vs_orbit(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::MainVsOrbit);
    for (f, r) in catalog(limits) {
        let g = weyl_group(f, r, limits)?;
        let parabolics = g.all_parabolics()?;
        let main = lambda_main_with(&g, &parabolics)?;
        let orbit = lambda_orbit_with(&g, &parabolics)?;
        res.check("lambda_main == lambda_orbit", format!("{f}{r}"), json_values(&main), json_values(&orbit));
    }
    Ok(res)
}

fn poincare(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::Poincare);
    for (f, r) in catalog(limits) {
        let g = weyl_group(f, r, limits)?;
        let parabolics = g.all_parabolics()?;
        let cells = poincare_cells(&g);
        let orbits = poincare_orbits(&g, &parabolics);
        let p = format!("{f}{r}");
        res.check("cells == orbits", p.clone(), json!(cells.coeffs()), json!(orbits.coeffs()));
        res.check("q=1 gives |W|", p.clone(), json!(orbits.eval(1)), json!(g.order()));
        res.check("q=-1 gives chi", p.clone(), json!(orbits.eval(-1)), json!(euler_char_descents(&g)));
        res.check_with("palindromic", p, cells.is_palindromic(), json!(cells.to_string()), json!(true));
    }
    Ok(res)
}

fn euler_char(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::EulerChar);
    for n in 2..=limits.max_n {
        let expected = expected_typea_chi(n);
        let p = format!("n={n}");
        if n <= MAX_WEYL_N {
            let g = symmetric_weyl_group(n)?;
            let parabolics = g.all_parabolics()?;
            res.check("descent sum", p.clone(), json!(euler_char_descents(&g)), json!(expected));
            res.check("orbit formula", p.clone(), json!(euler_char_orbit(&g, &parabolics)), json!(expected));
        }
        res.check("permutation descent sum", p.clone(), json!(permutation_descent_sum(n)), json!(expected));
        res.check("composition orbit sum", p, json!(composition_orbit_sum(n)), json!(expected));
    }
    for (f, r) in catalog(limits).into_iter().filter(|&(_, r)| r % 2 == 1) {
        let g = weyl_group(f, r, limits)?;
        res.check("odd rank vanishes", format!("{f}{r}"), json!(euler_char_descents(&g)), json!(0));
    }
    Ok(res)
}

fn pi_closed_form(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::PiClosedForm);
    for n in 1..=limits.max_n {
        let lattice = (n <= MAX_WEYL_N).then(|| pi_two_by_cycle_type(n)).transpose()?;
        for lambda in partitions(n) {
            let closed = pi_two_typea(&lambda);
            let p = format!("{lambda}");
            res.check("binomial route", p.clone(), json!(pi_two_binomial(&lambda)), json!(closed));
            res.check("even stable subsets", p.clone(), json!(even_stable_subsets(&lambda)), json!(closed));
            if let Some(l) = &lattice {
                res.check("F2 nullity on N/2N", p, json!(l.value(&lambda)), json!(closed));
            }
        }
    }
    Ok(res)
}

fn typea(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::Typea);
    for n in 1..=limits.max_n.min(MAX_WEYL_N) {
        let direct = lambda_typea(n);
        let weyl = lambda_main_by_cycle_type(n)?;
        res.check("explicit formula == root-data formula", format!("n={n}"), direct.to_json(), weyl.to_json());
    }
    let series = lambda_series(limits.max_n)?;
    for n in 1..=limits.max_n {
        let direct = lambda_typea(n);
        res.check("explicit formula == series term", format!("n={n}"), direct.to_json(), series.term(n).to_json());
        res.check("degree", format!("n={n}"), json!(direct.at_identity()), json!(expected_typea_chi(n)));
    }
    let s2 = CycleTypeFunction::<i64>::trivial(2).sub(&CycleTypeFunction::sign(2));
    res.check("Lambda_S2 == trivial - sign", "n=2", lambda_typea(2).to_json(), s2.to_json());
    Ok(res)
}

fn series_identities(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::SeriesIdentities);
    let d = limits.degree;
    let p = format!("D={d}");

    // sum (-1)^n eps Lambda_n, with Lambda from root data up to the Weyl cap
    let weyl_degree = d.min(MAX_WEYL_N);
    let lambdas: Vec<CycleTypeFunction<i64>> =
        (1..=weyl_degree).map(lambda_main_by_cycle_type).collect::<Result<_>>()?;
    let lambda_gen = GradedSeries::from_fn(weyl_degree, |n| {
        if n == 0 { CycleTypeFunction::trivial(0) } else { lambdas[n - 1].clone() }
    });
    let first_lhs = lambda_gen.sign_involution();
    let first_rhs = pi_two_series(weyl_degree).invert()?;
    res.check("first: signed Lambda series == (1 + sum pi)^-1", format!("D={weyl_degree}"), series_json(&first_lhs), series_json(&first_rhs));

    let second_rhs = trivial_series::<i64>(d).mul(&even_trivial_series(d));
    res.check("second: 1 + sum pi == (sum 1)(sum_even 1)", p.clone(), series_json(&pi_two_series(d)), series_json(&second_rhs));

    let inverse = trivial_series::<i64>(d).invert()?;
    res.check("(sum 1)^-1 == sum (-1)^n eps", p.clone(), series_json(&inverse), series_json(&alternating_sign_series::<i64>(d)));

    let even_no_zero = even_trivial_series::<i64>(d);
    let third_rhs = alternating_sign_series::<i64>(d).mul(&even_no_zero.invert()?);
    let third_lhs = first_lhs.truncate(d);
    res.check("third", format!("D={}", third_lhs.degree()), series_json(&third_lhs), series_json(&third_rhs.truncate(third_lhs.degree())));

    let fourth_rhs = trivial_series::<i64>(d).mul(&even_sign_series(d).invert()?);
    res.check("fourth: 1 + sum Lambda == (sum 1)(1 + sum_even eps)^-1", format!("D={weyl_degree}"), series_json(&lambda_gen), series_json(&fourth_rhs.truncate(weyl_degree)));
    res.check("involution maps third onto fourth", p, series_json(&third_rhs.sign_involution()), series_json(&fourth_rhs));
    Ok(res)
}

fn stembridge(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::Stembridge);
    let d = limits.degree;
    let a = stembridge_series(d)?;
    let b = stembridge_via_gamma(d)?;
    res.check("rational form == inverse of 1 - sum gamma", format!("D={d}"), series_json(&a), series_json(&b));
    for n in 1..=d {
        let id = a.term(n).at_identity();
        let fact: i64 = (1..=n as i64).product();
        res.check("q=1 at identity is n!", format!("n={n}"), json!(id.eval(1)), json!(fact));
        res.check("q=-1 at identity is chi", format!("n={n}"), json!(id.eval(-1)), json!(expected_typea_chi(n)));
        if n <= MAX_WEYL_N.min(limits.max_n) {
            let g = symmetric_weyl_group(n)?;
            res.check("identity value is the descent polynomial", format!("n={n}"), json!(id.coeffs()), json!(poincare_cells(&g).coeffs()));
        }
    }
    Ok(res)
}

fn even_vanishing(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::EvenVanishing);
    for n in 1..=limits.max_n {
        let trace = complex_euler_trace(n)?;
        for (lambda, v) in trace.iter().filter(|(l, _)| l.has_even_part()) {
            res.check("vanishes on even-order class", format!("{lambda}"), json!(v), json!(0));
        }
    }
    Ok(res)
}

fn odd_order(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::OddOrder);
    for n in 1..=limits.max_n {
        let trace = complex_euler_trace(n)?;
        let direct = complex_euler_trace_direct(n);
        let real = lambda_typea(n);
        res.check("q=-1 specialization == direct trivial-character sum", format!("n={n}"), trace.to_json(), direct.to_json());
        for (lambda, v) in trace.iter() {
            let p = format!("{lambda}");
            if !lambda.has_even_part() {
                res.check("complex trace == real Lambda on odd-order class", p.clone(), json!(v), json!(real.value(lambda)));
            }
            res.check("direct sum == sum (-1)^m f_m", p, json!(direct.value(lambda)), json!(alternating_tuple_sum(lambda)));
        }
    }
    Ok(res)
}

fn f_recursion(limits: &Limits) -> Result<VerifySuiteResult> {
    let mut res = VerifySuiteResult::new(Suite::FRecursion);
    for n in 1..=limits.max_n {
        for lambda in partitions(n).iter().filter(|l| l.has_even_part()) {
            let ok = f_recursion_holds(lambda) == Some(true);
            res.check_with("f_m(w) = m f_{m-1}(y) + (m+1) f_m(y)", lambda.to_string(), ok, json!(ok), json!(true));
        }
    }
    Ok(res)
}

pub fn run_suite(suite: Suite, limits: &Limits) -> Result<Vec<VerifySuiteResult>> {
    limits.validate()?;
    if matches!(suite, Suite::All | Suite::MainVsOrbit | Suite::Poincare | Suite::EulerChar) {
        // refuse before doing any work rather than after the smaller types
        let cap = DEFAULT_GROUP_CAP;
        if catalog(limits).iter().any(|&(f, r)| f.weyl_order(r).is_some_and(|o| o > cap as u128)) {
            return Err(Error::ResourceCap { cap });
        }
    }
    let one = match suite {
        Suite::All => {
            return Suite::INDIVIDUAL.iter().map(|&s| run_suite(s, limits).map(|mut v| v.remove(0))).collect();
        }
        Suite::MainVsOrbit => main_vs_orbit(limits)?,
        Suite::Poincare => poincare(limits)?,
        Suite::EulerChar => euler_char(limits)?,
        Suite::PiClosedForm => pi_closed_form(limits)?,
        Suite::Typea => typea(limits)?,
        Suite::SeriesIdentities => series_identities(limits)?,
        Suite::Stembridge => stembridge(limits)?,
        Suite::EvenVanishing => even_vanishing(limits)?,
        Suite::OddOrder => odd_order(limits)?,
        Suite::FRecursion => f_recursion(limits)?,
    };
    Ok(vec![one])
}

/// Partition-keyed helper for callers that want a single class value.
pub fn value_at(f: &CycleTypeFunction<i64>, lambda: &str) -> Result<i64> {
    let p: Partition = lambda.parse()?;
    if p.size() != f.n() {
        return Err(Error::InvalidArgument(format!("{lambda} is not a partition of {}", f.n())));
    }
    Ok(*f.value(&p))
}
