//! Enumeration of the Weyl group as permutations of the root list, its
//! conjugacy classes, and the per-element statistics used throughout.

use std::collections::{HashMap, VecDeque};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::root_system::{LatticeAction, RootSystem};

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

static NEXT_GROUP_ID: AtomicU64 = AtomicU64::new(1);

/// A group element, stored as the permutation it induces on the roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    pub root_perm: Vec<u16>,
    /// Lexicographically least reduced word in the simple reflections (0-based).
    pub word: Vec<u8>,
}

impl WeylElement {
    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// Word written with 1-based generator names, `e` for the identity.
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            self.word.iter().map(|g| format!("s{}", g + 1)).collect::<Vec<_>>().join(" ")
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug)]
pub struct WeylGroup {
    id: u64,
    system: RootSystem,
    lattice: LatticeAction,
    generators: Vec<Vec<u16>>,
    elements: Vec<WeylElement>,
    index: HashMap<Vec<u16>, usize>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    /// For each class representative `w`, the index of `x^-1 w x` for every `x`.
    conjugation: OnceLock<Vec<Vec<u32>>>,
}

/// A parabolic subgroup `W_J`, enumerated as the Weyl group of its own
/// subsystem and embedded into the ambient group.
#[derive(Debug)]
pub struct ParabolicSubgroup {
    pub subset: Vec<usize>,
    pub group: WeylGroup,
    parent_id: u64,
    /// Subgroup element index to ambient element index.
    embedding: Vec<usize>,
    preimage: HashMap<usize, usize>,
}

fn compose(outer: &[u16], inner: &[u16]) -> Vec<u16> {
    inner.iter().map(|&i| outer[i as usize]).collect()
}

fn invert(p: &[u16]) -> Vec<u16> {
    let mut inv = vec![0u16; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j as usize] = i as u16;
    }
    inv
}

impl WeylGroup {
    pub fn enumerate(system: &RootSystem) -> Result<Self> {
        Self::enumerate_with_cap(system, DEFAULT_GROUP_CAP)
    }

    /// Breadth-first closure under right multiplication by simple
    /// reflections. Elements come out ordered by length, then by word.
    pub fn enumerate_with_cap(system: &RootSystem, cap: usize) -> Result<Self> {
        let r = system.rank();
        if let Some(order) = system.family().and_then(|f| f.weyl_order(r)) {
            if order > cap as u128 {
                return Err(Error::ResourceCap { cap });
            }
        }
        let generators: Vec<Vec<u16>> = (0..r).map(|j| system.simple_reflection_perm(j)).collect();
        let identity: Vec<u16> = (0..system.num_roots() as u16).collect();
        let mut elements = vec![WeylElement { root_perm: identity.clone(), word: Vec::new() }];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(u) = queue.pop_front() {
            for (j, gen) in generators.iter().enumerate() {
                let perm = compose(&elements[u].root_perm, gen);
                if index.contains_key(&perm) {
                    continue;
                }
                if elements.len() >= cap {
                    return Err(Error::ResourceCap { cap });
                }
                let mut word = elements[u].word.clone();
                word.push(j as u8);
                index.insert(perm.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(WeylElement { root_perm: perm, word });
            }
        }

        let mut group = Self {
            id: NEXT_GROUP_ID.fetch_add(1, Ordering::Relaxed),
            system: system.clone(),
            lattice: system.lattice_action(),
            generators,
            elements,
            index,
            classes: Vec::new(),
            class_of: Vec::new(),
            conjugation: OnceLock::new(),
        };
        group.compute_classes();
        Ok(group)
    }

    fn compute_classes(&mut self) {
        const UNSET: usize = usize::MAX;
        let mut class_of = vec![UNSET; self.elements.len()];
        let mut classes = Vec::new();
        for start in 0..self.elements.len() {
            if class_of[start] != UNSET {
                continue;
            }
            let c = classes.len();
            class_of[start] = c;
            let mut members = vec![start];
            let mut k = 0;
            while k < members.len() {
                let m = members[k];
                k += 1;
                for gen in &self.generators {
                    let conj = compose(gen, &compose(&self.elements[m].root_perm, gen));
                    let idx = self.index[&conj];
                    if class_of[idx] == UNSET {
                        class_of[idx] = c;
                        members.push(idx);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass { representative: start, members });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &WeylElement {
        &self.elements[i]
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(ConjugacyClass::size).collect()
    }

    pub fn index_of(&self, root_perm: &[u16]) -> Option<usize> {
        self.index.get(root_perm).copied()
    }

    /// Element index of the product `a * b` (apply `b` first).
    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a].root_perm, &self.elements[b].root_perm)]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&invert(&self.elements[a].root_perm)]
    }

    /// Element index of `x^-1 w x`.
    pub fn conjugate(&self, w: usize, x: usize) -> usize {
        let xp = &self.elements[x].root_perm;
        let p = compose(&invert(xp), &compose(&self.elements[w].root_perm, xp));
        self.index[&p]
    }

    /// Element with the given word in the simple reflections.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut perm: Vec<u16> = (0..self.system.num_roots() as u16).collect();
        for &j in word {
            if j >= self.rank() {
                return Err(Error::IndexOutOfRange { index: j, rank: self.rank() });
            }
            perm = compose(&perm, &self.generators[j]);
        }
        Ok(self.index[&perm])
    }

    pub(crate) fn conjugation_table(&self) -> &[Vec<u32>] {
        self.conjugation.get_or_init(|| {
            let inverses: Vec<Vec<u16>> = self.elements.iter().map(|e| invert(&e.root_perm)).collect();
            self.classes
                .iter()
                .map(|c| {
                    let w = &self.elements[c.representative].root_perm;
                    self.elements
                        .iter()
                        .zip(&inverses)
                        .map(|(x, xinv)| {
                            let p: Vec<u16> = x.root_perm.iter().map(|&i| xinv[w[i as usize] as usize]).collect();
                            self.index[&p] as u32
                        })
                        .collect()
                })
                .collect()
        })
    }

    /// `d(w)`: the number of simple roots sent to negative roots.
    pub fn descent_number(&self, w: usize) -> usize {
        let perm = &self.elements[w].root_perm;
        self.system
            .simple_indices()
            .iter()
            .filter(|&&s| !self.system.is_positive(perm[s] as usize))
            .count()
    }

    pub fn descent_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.rank() + 1];
        for w in 0..self.order() {
            hist[self.descent_number(w)] += 1;
        }
        hist
    }

    /// Matrix of `w` on `V` in the simple-root basis: column `j` holds the
    /// coordinates of `w(a_j)`.
    pub fn matrix_v(&self, w: usize) -> IntMatrix {
        let r = self.rank();
        let perm = &self.elements[w].root_perm;
        let mut m = IntMatrix::zeros(r);
        for (j, &s) in self.system.simple_indices().iter().enumerate() {
            let img = self.system.coefficients(perm[s] as usize);
            for (i, &c) in img.iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// `det_V(w)`, i.e. the sign character.
    pub fn sign(&self, w: usize) -> i64 {
        self.matrix_v(w).determinant()
    }

    pub fn fixed_space_dimension(&self, w: usize) -> usize {
        self.rank() - self.matrix_v(w).minus_identity().rank()
    }

    /// Matrix of `w` on the lattice `N`, as the product of generator matrices along its word.
    pub fn weight_action_matrix(&self, w: usize) -> IntMatrix {
        self.elements[w]
            .word
            .iter()
            .fold(IntMatrix::identity(self.rank()), |acc, &j| &acc * &self.lattice.matrices[j as usize])
    }

    pub fn lattice_action(&self) -> &LatticeAction {
        &self.lattice
    }

    pub fn parabolic_subgroup(&self, subset: &[usize]) -> Result<ParabolicSubgroup> {
        let sub_system = self.system.parabolic_subsystem(subset)?;
        let mut subset = subset.to_vec();
        subset.sort_unstable();
        subset.dedup();
        let group = WeylGroup::enumerate(&sub_system)?;
        let embedding: Vec<usize> = group
            .elements
            .iter()
            .map(|e| {
                let word: Vec<usize> = e.word.iter().map(|&k| subset[k as usize]).collect();
                self.from_word(&word)
            })
            .collect::<Result<_>>()?;
        let preimage = embedding.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        Ok(ParabolicSubgroup { subset, group, parent_id: self.id, embedding, preimage })
    }

    /// All `2^r` parabolic subgroups, ordered by cardinality of `J`, then lexicographically.
    pub fn all_parabolics(&self) -> Result<Vec<ParabolicSubgroup>> {
        subsets_by_size(self.rank()).iter().map(|j| self.parabolic_subgroup(j)).collect()
    }

    /// `[W : W_J]`.
    pub fn parabolic_index(&self, subset: &[usize]) -> Result<usize> {
        let sub = self.parabolic_subgroup(subset)?;
        Ok(self.order() / sub.group.order())
    }

    /// `|{w : w(J) is contained in the negative roots}|`, which equals the index.
    pub fn count_negating(&self, subset: &[usize]) -> usize {
        let simple = self.system.simple_indices();
        (0..self.order())
            .filter(|&w| {
                let perm = &self.elements[w].root_perm;
                subset.iter().all(|&j| !self.system.is_positive(perm[simple[j]] as usize))
            })
            .count()
    }
}

impl ParabolicSubgroup {
    pub fn parent_id(&self) -> u64 {
        self.parent_id
    }

    pub fn embed(&self, sub_element: usize) -> usize {
        self.embedding[sub_element]
    }

    pub fn preimage(&self, element: usize) -> Option<usize> {
        self.preimage.get(&element).copied()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }
}

/// Subsets of `0..r` in increasing cardinality, lexicographic within a size.
pub fn subsets_by_size(r: usize) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> = (0u32..1 << r)
        .map(|mask| (0..r).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    all
}
