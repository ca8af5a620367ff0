//! Crystallographic root systems in Bourbaki coordinates, their Cartan
//! matrices, and the integer action of the simple reflections on the weight
//! lattice `N`.

use std::cmp::Reverse;
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::scalar::{Rational, Scalar};

/// Guard against runaway closure when fed non-crystallographic data.
const MAX_ROOTS: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.trim().to_ascii_uppercase().as_str() {
            "A" => Family::A,
            "B" => Family::B,
            "C" => Family::C,
            "D" => Family::D,
            "E" => Family::E,
            "F" => Family::F,
            "G" => Family::G,
            other => {
                return Err(Error::UnsupportedType { family: other.to_string(), rank: 0 });
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl Family {
    /// Order of the Weyl group of the given rank, for ranks in the catalog.
    pub fn weyl_order(self, rank: usize) -> Option<u128> {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        let r = rank as u32;
        match (self, rank) {
            (Family::A, 1..) => Some(fact(rank + 1)),
            (Family::B | Family::C, 2..) => Some(2u128.pow(r) * fact(rank)),
            (Family::D, 4..) => Some(2u128.pow(r - 1) * fact(rank)),
            (Family::E, 6) => Some(51_840),
            (Family::F, 4) => Some(1152),
            (Family::G, 2) => Some(12),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    pub enable_e6: bool,
}

/// A root system together with a choice of simple roots.
///
/// Roots are stored twice: as rational vectors in the ambient Euclidean
/// space, and as integer coordinates with respect to the simple roots. The
/// latter drive every group computation.
#[derive(Debug, Clone)]
pub struct RootSystem {
    label: String,
    family: Option<Family>,
    ambient_dim: usize,
    simple_ambient: Vec<Vec<Rational>>,
    roots: Vec<Vec<Rational>>,
    coeffs: Vec<Vec<i64>>,
    simple_indices: Vec<usize>,
    cartan: Vec<Vec<i64>>,
    positive: Vec<bool>,
    negation: Vec<usize>,
    lookup: HashMap<Vec<i64>, usize>,
}

/// The simple reflections acting on `N` (basis dual to the simple roots)
/// and on `N/2N`.
#[derive(Debug, Clone)]
pub struct LatticeAction {
    pub matrices: Vec<IntMatrix>,
    /// Rows of each generator reduced mod 2, packed as bitmasks.
    pub mod2_matrices: Vec<Vec<u64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootSystemDocument {
    #[serde(rename = "type")]
    pub type_label: String,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub roots: Vec<Vec<serde_json::Value>>,
    pub simple_indices: Vec<usize>,
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

fn unit(dim: usize, i: usize, scale: i64) -> Vec<Rational> {
    let mut v = vec![int(0); dim];
    v[i] = int(scale);
    v
}

fn diff(dim: usize, i: usize, j: usize) -> Vec<Rational> {
    let mut v = vec![int(0); dim];
    v[i] = int(1);
    v[j] = int(-1);
    v
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    RootSystem::build(family, rank, BuildOptions::default())
}

impl RootSystem {
    pub fn build(family: Family, rank: usize, opts: BuildOptions) -> Result<Self> {
        let unsupported = || Error::UnsupportedType { family: family.to_string(), rank };
        let simple: Vec<Vec<Rational>> = match family {
            Family::A if rank >= 1 => (0..rank).map(|i| diff(rank + 1, i, i + 1)).collect(),
            Family::B | Family::C if rank >= 2 => {
                let mut s: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
                let last = if family == Family::B { 1 } else { 2 };
                s.push(unit(rank, rank - 1, last));
                s
            }
            Family::D if rank >= 4 => {
                let mut s: Vec<_> = (0..rank - 1).map(|i| diff(rank, i, i + 1)).collect();
                let mut last = vec![int(0); rank];
                last[rank - 2] = int(1);
                last[rank - 1] = int(1);
                s.push(last);
                s
            }
            Family::G if rank == 2 => vec![
                diff(3, 0, 1),
                vec![int(-2), int(1), int(1)],
            ],
            Family::F if rank == 4 => {
                let h = Rational::new(1, 2);
                vec![diff(4, 1, 2), diff(4, 2, 3), unit(4, 3, 1), vec![h, -h, -h, -h]]
            }
            Family::E if rank == 6 => {
                if !opts.enable_e6 {
                    return Err(Error::E6Disabled);
                }
                let h = Rational::new(1, 2);
                let mut a1 = vec![-h; 8];
                a1[0] = h;
                a1[7] = h;
                let mut a2 = vec![int(0); 8];
                a2[0] = int(1);
                a2[1] = int(1);
                vec![a1, a2, diff(8, 1, 0), diff(8, 2, 1), diff(8, 3, 2), diff(8, 4, 3)]
            }
            _ => return Err(unsupported()),
        };
        let ambient_dim = simple[0].len();
        Self::from_simple_roots(format!("{family}{rank}"), Some(family), ambient_dim, simple)
    }

    /// Close a set of simple roots under the reflections they generate.
    pub fn from_simple_roots(
        label: String,
        family: Option<Family>,
        ambient_dim: usize,
        simple_ambient: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let r = simple_ambient.len();
        let mut cartan = vec![vec![0i64; r]; r];
        for i in 0..r {
            for j in 0..r {
                let v = int(2) * dot(&simple_ambient[i], &simple_ambient[j])
                    / dot(&simple_ambient[j], &simple_ambient[j]);
                if !v.is_integer() {
                    return Err(Error::Inconsistent(format!("non-integral Cartan entry ({i},{j})")));
                }
                cartan[i][j] = v.to_integer();
            }
        }

        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        for i in 0..r {
            let mut e = vec![0; r];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            for j in 0..r {
                let img = reflect(&cartan, j, &beta);
                if !seen.contains_key(&img) {
                    if seen.len() >= MAX_ROOTS {
                        return Err(Error::Inconsistent("root closure does not terminate".into()));
                    }
                    seen.insert(img.clone(), ());
                    queue.push_back(img);
                }
            }
        }

        let mut positives: Vec<Vec<i64>> = Vec::new();
        for beta in seen.keys() {
            let nonneg = beta.iter().all(|&c| c >= 0);
            let nonpos = beta.iter().all(|&c| c <= 0);
            if !nonneg && !nonpos {
                return Err(Error::Inconsistent(format!("root {beta:?} has mixed signs")));
            }
            if nonneg {
                positives.push(beta.clone());
            }
        }
        if positives.len() * 2 != seen.len() {
            return Err(Error::Inconsistent("roots do not come in +/- pairs".into()));
        }
        positives.sort_by_key(|b| (b.iter().sum::<i64>(), Reverse(b.clone())));

        let n_pos = positives.len();
        let mut coeffs = positives.clone();
        coeffs.extend(positives.iter().map(|b| b.iter().map(|c| -c).collect::<Vec<_>>()));
        let roots = coeffs
            .iter()
            .map(|c| {
                (0..ambient_dim)
                    .map(|k| (0..r).map(|i| simple_ambient[i][k] * c[i]).sum())
                    .collect()
            })
            .collect();
        let positive = (0..coeffs.len()).map(|i| i < n_pos).collect();
        let negation = (0..coeffs.len()).map(|i| if i < n_pos { i + n_pos } else { i - n_pos }).collect();
        let lookup = coeffs.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

        Ok(Self {
            label,
            family,
            ambient_dim,
            simple_ambient,
            roots,
            coeffs,
            simple_indices: (0..r).collect(),
            cartan,
            positive,
            negation,
            lookup,
        })
    }

    /// The subsystem spanned by the simple roots indexed by `subset`, built
    /// from its own simple roots so that its lattice is intrinsic to it.
    pub fn parabolic_subsystem(&self, subset: &[usize]) -> Result<RootSystem> {
        let rank = self.rank();
        if let Some(&bad) = subset.iter().find(|&&j| j >= rank) {
            return Err(Error::IndexOutOfRange { index: bad, rank });
        }
        let mut j: Vec<usize> = subset.to_vec();
        j.sort_unstable();
        j.dedup();
        let simple = j.iter().map(|&i| self.simple_ambient[i].clone()).collect();
        let names: Vec<String> = j.iter().map(|i| (i + 1).to_string()).collect();
        let label = format!("{}[{}]", self.label, names.join(","));
        Self::from_simple_roots(label, None, self.ambient_dim, simple)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn family(&self) -> Option<Family> {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.simple_indices.len()
    }

    pub fn num_roots(&self) -> usize {
        self.coeffs.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn roots(&self) -> &[Vec<Rational>] {
        &self.roots
    }

    pub fn simple_root(&self, j: usize) -> &[Rational] {
        &self.simple_ambient[j]
    }

    /// Root `i` in simple-root coordinates.
    pub fn coefficients(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    pub fn simple_indices(&self) -> &[usize] {
        &self.simple_indices
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive[i]
    }

    pub fn negation(&self, i: usize) -> usize {
        self.negation[i]
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.lookup.get(coeffs).copied()
    }

    /// Permutation of the root list induced by the simple reflection `j`.
    pub fn simple_reflection_perm(&self, j: usize) -> Vec<u16> {
        self.coeffs
            .iter()
            .map(|beta| {
                let img = reflect(&self.cartan, j, beta);
                self.lookup[&img] as u16
            })
            .collect()
    }

    /// Matrix of `s_j` on `V` in the simple-root basis (columns are images).
    pub fn simple_reflection_matrix_v(&self, j: usize) -> IntMatrix {
        let r = self.rank();
        let mut m = IntMatrix::identity(r);
        for i in 0..r {
            m.set(j, i, m.get(j, i) - self.cartan[i][j]);
        }
        m
    }

    /// Generators acting on `N` in the basis `w_1..w_r` with `(w_i, a_j) = delta_ij`:
    /// `s_j` sends `w_j` to `w_j - sum_i A[i][j] w_i` and fixes the others.
    pub fn lattice_action(&self) -> LatticeAction {
        let r = self.rank();
        let matrices: Vec<IntMatrix> = (0..r)
            .map(|j| {
                let mut m = IntMatrix::identity(r);
                for i in 0..r {
                    m.set(i, j, m.get(i, j) - self.cartan[i][j]);
                }
                m
            })
            .collect();
        let mod2_matrices = matrices
            .iter()
            .map(|m| {
                (0..r)
                    .map(|i| (0..r).fold(0u64, |acc, j| acc | (((m.get(i, j) & 1) as u64) << j)))
                    .collect()
            })
            .collect();
        LatticeAction { matrices, mod2_matrices }
    }

    pub fn document(&self) -> RootSystemDocument {
        RootSystemDocument {
            type_label: self.label.clone(),
            rank: self.rank(),
            cartan: self.cartan.clone(),
            roots: self.roots.iter().map(|v| v.iter().map(Scalar::to_json).collect()).collect(),
            simple_indices: self.simple_indices.clone(),
        }
    }
}

/// `s_j(beta) = beta - <beta, a_j^vee> a_j`, in simple-root coordinates.
fn reflect(cartan: &[Vec<i64>], j: usize, beta: &[i64]) -> Vec<i64> {
    let pairing: i64 = beta.iter().enumerate().map(|(i, &c)| c * cartan[i][j]).sum();
    let mut out = beta.to_vec();
    out[j] -= pairing;
    out
}
