//! Finite Weyl groups: enumeration, canonical words, orbits, Bruhat covers.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::rootsys::AlgebraSpec;
use crate::weight::Weight;

pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// Integer `r×r` matrix, row-major.
pub type Matrix = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    /// ShortLex-minimal reduced word, 1-based generators.
    pub word: Vec<usize>,
    pub matrix: Matrix,
    pub length: usize,
    pub det: i64,
}

impl WeylElement {
    pub fn rank(&self) -> usize {
        (self.matrix.len() as f64).sqrt() as usize
    }

    pub fn act(&self, lam: &Weight) -> Weight {
        mat_vec(&self.matrix, lam)
    }

    /// `w.λ = w(λ+ρ) − ρ`.
    pub fn shifted_act(&self, lam: &Weight) -> Weight {
        let r = lam.rank();
        let shifted = Weight(lam.0.iter().map(|x| x + 1).collect());
        let img = self.act(&shifted);
        Weight((0..r).map(|k| img[k] - 1).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }
}

fn mat_vec(m: &[i64], v: &Weight) -> Weight {
    let r = v.rank();
    Weight((0..r).map(|i| (0..r).map(|j| m[i * r + j] * v[j]).sum()).collect())
}

fn mat_mul(a: &[i64], b: &[i64], r: usize) -> Matrix {
    let mut c = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            let x = a[i * r + k];
            if x == 0 {
                continue;
            }
            for j in 0..r {
                c[i * r + j] += x * b[k * r + j];
            }
        }
    }
    c
}

fn identity_matrix(r: usize) -> Matrix {
    let mut m = vec![0; r * r];
    for i in 0..r {
        m[i * r + i] = 1;
    }
    m
}

/// Matrix of `rᵢ`: `λ ↦ λ − λᵢαᵢ`.
fn reflection_matrix(spec: &AlgebraSpec, i: usize) -> Matrix {
    let r = spec.rank;
    let mut m = identity_matrix(r);
    let a = spec.simple_root(i);
    for row in 0..r {
        m[row * r + (i - 1)] -= a[row];
    }
    m
}

/// The longest element together with the reduced word used for Demazure sweeps.
#[derive(Clone, Debug)]
pub struct LongestElement {
    pub element: WeylElement,
    pub sweep_word: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub rank: usize,
    elements: Vec<WeylElement>,
    index: HashMap<Matrix, usize>,
    generators: Vec<Matrix>,
    longest: usize,
}

impl WeylGroup {
    pub fn generate(spec: &AlgebraSpec) -> Result<WeylGroup> {
        WeylGroup::generate_with_cap(spec, DEFAULT_GROUP_CAP)
    }

    /// Breadth-first enumeration by length. Parents are visited in lex order of their
    /// words and generators are appended in increasing order, so the first word found
    /// for each matrix is its ShortLex-minimal reduced word.
    pub fn generate_with_cap(spec: &AlgebraSpec, cap: usize) -> Result<WeylGroup> {
        let r = spec.rank;
        let generators: Vec<Matrix> = (1..=r).map(|i| reflection_matrix(spec, i)).collect();
        let id = WeylElement { word: vec![], matrix: identity_matrix(r), length: 0, det: 1 };
        let mut elements = vec![id.clone()];
        let mut index = HashMap::new();
        index.insert(id.matrix, 0);
        let mut level = vec![0usize];
        while !level.is_empty() {
            let mut next = Vec::new();
            for &p in &level {
                for i in 1..=r {
                    let m = mat_mul(&elements[p].matrix, &generators[i - 1], r);
                    if index.contains_key(&m) {
                        continue;
                    }
                    let mut word = elements[p].word.clone();
                    word.push(i);
                    let length = word.len();
                    let det = if length % 2 == 0 { 1 } else { -1 };
                    index.insert(m.clone(), elements.len());
                    next.push(elements.len());
                    elements.push(WeylElement { word, matrix: m, length, det });
                    if elements.len() > cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                }
            }
            level = next;
        }
        let longest = elements.len() - 1;
        Ok(WeylGroup { rank: r, elements, index, generators, longest })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[WeylElement] {
        &self.elements
    }

    pub fn get(&self, k: usize) -> &WeylElement {
        &self.elements[k]
    }

    pub fn identity(&self) -> &WeylElement {
        &self.elements[0]
    }

    pub fn index_of(&self, w: &WeylElement) -> usize {
        self.index[&w.matrix]
    }

    pub fn longest(&self) -> &WeylElement {
        &self.elements[self.longest]
    }

    pub fn generator(&self, i: usize) -> &WeylElement {
        &self.elements[self.index[&self.generators[i - 1]]]
    }

    /// Element represented by an arbitrary word (not necessarily reduced).
    pub fn element_of_word(&self, word: &[usize]) -> Result<&WeylElement> {
        let mut m = identity_matrix(self.rank);
        for &i in word {
            if !(1..=self.rank).contains(&i) {
                return Err(Error::IndexOutOfRange { index: i, rank: self.rank });
            }
            m = mat_mul(&m, &self.generators[i - 1], self.rank);
        }
        Ok(&self.elements[self.index[&m]])
    }

    pub fn is_reduced(&self, word: &[usize]) -> Result<bool> {
        Ok(self.element_of_word(word)?.length == word.len())
    }

    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> &WeylElement {
        let m = mat_mul(&a.matrix, &b.matrix, self.rank);
        &self.elements[self.index[&m]]
    }

    pub fn inverse(&self, a: &WeylElement) -> &WeylElement {
        let rev: Vec<usize> = a.word.iter().rev().copied().collect();
        self.element_of_word(&rev).expect("valid word")
    }

    /// All reduced words of `w`, in lex order.
    pub fn reduced_words(&self, w: &WeylElement) -> Vec<Vec<usize>> {
        // w = r_i u with ℓ(u) = ℓ(w) − 1  ⇒  words i·(reduced words of u)
        if w.length == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for i in 1..=self.rank {
            let u = self.mul(self.generator(i), w);
            if u.length + 1 == w.length {
                for tail in self.reduced_words(u) {
                    let mut word = vec![i];
                    word.extend(tail);
                    out.push(word);
                }
            }
        }
        out
    }

    /// Pairs `(u, v)` (indices) with `u ⋖ v` in Bruhat order. Uses deletion of one letter
    /// from the canonical word of `v`; by the subword property any reduced word suffices.
    pub fn bruhat_covers(&self) -> Vec<(usize, usize)> {
        let mut out = BTreeSet::new();
        for (vi, v) in self.elements.iter().enumerate() {
            for k in 0..v.word.len() {
                let mut sub = v.word.clone();
                sub.remove(k);
                let u = self.element_of_word(&sub).expect("valid word");
                if u.length + 1 == v.length {
                    out.insert((self.index_of(u), vi));
                }
            }
        }
        out.into_iter().collect()
    }

    /// Subword criterion: `u ≤ v` iff some subword of a reduced word of `v` is a
    /// reduced word of `u`. Exponential in `ℓ(v)`; meant as a reference check.
    pub fn bruhat_leq_subword(&self, u: &WeylElement, v: &WeylElement) -> bool {
        let n = v.word.len();
        (0u64..(1u64 << n)).any(|mask| {
            let sub: Vec<usize> = (0..n).filter(|k| mask >> k & 1 == 1).map(|k| v.word[k]).collect();
            sub.len() == u.length && self.element_of_word(&sub).map(|e| e == u).unwrap_or(false)
        })
    }

    pub fn orbit(&self, spec: &AlgebraSpec, lam: &Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lam.clone());
        queue.push_back(lam.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 1..=spec.rank {
                let nu = spec.reflect(i, &mu);
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
        seen
    }

    pub fn stabilizer_size(&self, lam: &Weight) -> usize {
        self.elements.iter().filter(|w| w.act(lam) == *lam).count()
    }

    /// Longest element with its sweep word: fixed words for built-in B2 and G2, the
    /// staircase word for type A, the canonical word otherwise.
    pub fn longest_element(&self, spec: &AlgebraSpec) -> LongestElement {
        let element = self.longest().clone();
        let preferred = preferred_longest_word(spec);
        let sweep_word = match preferred {
            Some(word) if self.element_of_word(&word).map(|e| *e == element).unwrap_or(false) => word,
            _ => element.word.clone(),
        };
        LongestElement { element, sweep_word }
    }

    /// Positive roots sent to negative roots by `w`.
    pub fn inversion_set(&self, spec: &AlgebraSpec, w: &WeylElement) -> Vec<Weight> {
        let pos: BTreeSet<Weight> = spec.positive_root_labels().into_iter().collect();
        spec.positive_root_labels().into_iter().filter(|a| !pos.contains(&w.act(a))).collect()
    }

    /// ShortLex-minimal word of minimal length with `r_{i₁}⋯r_{i_k}·source = target`.
    pub fn min_word_to_weight(&self, spec: &AlgebraSpec, source: &Weight, target: &Weight) -> Result<Vec<usize>> {
        let mut dist: HashMap<Weight, usize> = HashMap::new();
        dist.insert(source.clone(), 0);
        let mut queue = VecDeque::from([source.clone()]);
        while let Some(mu) = queue.pop_front() {
            let d = dist[&mu];
            for i in 1..=spec.rank {
                let nu = spec.reflect(i, &mu);
                if !dist.contains_key(&nu) {
                    dist.insert(nu.clone(), d + 1);
                    queue.push_back(nu);
                }
            }
        }
        let mut k = *dist.get(target).ok_or_else(|| Error::NoPath { source_weight: source.clone(), target: target.clone() })?;
        let mut cur = target.clone();
        let mut word = Vec::with_capacity(k);
        while k > 0 {
            let i = (1..=spec.rank).find(|&i| dist.get(&spec.reflect(i, &cur)) == Some(&(k - 1))).expect("BFS distances are consistent");
            word.push(i);
            cur = spec.reflect(i, &cur);
            k -= 1;
        }
        Ok(word)
    }
}

fn preferred_longest_word(spec: &AlgebraSpec) -> Option<Vec<usize>> {
    let builtin = |n: &str| crate::rootsys::algebra(n).map(|s| s.cartan == spec.cartan).unwrap_or(false);
    match spec.name.as_str() {
        "B2" if builtin("B2") => return Some(vec![1, 2, 1, 2]),
        "G2" if builtin("G2") => return Some(vec![1, 2, 1, 2, 1, 2]),
        _ => {}
    }
    if is_type_a(spec) {
        // (r, r−1, …, 1)(r, …, 2)⋯(r)
        let r = spec.rank;
        let mut w = Vec::new();
        for start in 1..=r {
            w.extend((start..=r).rev());
        }
        return Some(w);
    }
    None
}

fn is_type_a(spec: &AlgebraSpec) -> bool {
    let r = spec.rank;
    (0..r).all(|i| {
        (0..r).all(|j| {
            let expect = if i == j {
                2
            } else if i.abs_diff(j) == 1 {
                -1
            } else {
                0
            };
            spec.cartan[i][j] == expect
        })
    })
}
