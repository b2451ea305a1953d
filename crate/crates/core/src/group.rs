//! Breadth-first closure of a finite group of signed permutations generated,
//! as a monoid, by a list of generators.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::signed::{psi_generators, SignedPermutation};
use crate::solution::YbeSolution;

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000_000;

/// Elements are indexed in BFS order, so index 0 is the identity and
/// `length(i)` is the geodesic length over the positive generators.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    degree: usize,
    generators: Vec<SignedPermutation>,
    elements: Vec<SignedPermutation>,
    index: HashMap<SignedPermutation, usize>,
    lengths: Vec<usize>,
    // product[i * ngens + g] = index of elements[i] ∘ generators[g]
    product: Vec<usize>,
}

impl FiniteGroupTable {
    pub fn generate(degree: usize, generators: Vec<SignedPermutation>) -> Result<Self> {
        Self::generate_bounded(degree, generators, DEFAULT_CLOSURE_BOUND)
    }

    pub fn generate_bounded(
        degree: usize,
        generators: Vec<SignedPermutation>,
        bound: usize,
    ) -> Result<Self> {
        if generators.iter().any(|g| g.degree() != degree) {
            return Err(Error::Dimension("generator degree mismatch".into()));
        }
        let ngens = generators.len();
        let identity = SignedPermutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut lengths = vec![0usize];
        let mut product: Vec<usize> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            product.resize((i + 1) * ngens, usize::MAX);
            for (g, gen) in generators.iter().enumerate() {
                let next = elements[i].compose(gen);
                let j = match index.get(&next) {
                    Some(&j) => j,
                    None => {
                        if elements.len() >= bound {
                            return Err(Error::ClosureTooLarge { bound });
                        }
                        let j = elements.len();
                        index.insert(next.clone(), j);
                        elements.push(next);
                        lengths.push(lengths[i] + 1);
                        queue.push_back(j);
                        j
                    }
                };
                product[i * ngens + g] = j;
            }
        }
        Ok(FiniteGroupTable {
            degree,
            generators,
            elements,
            index,
            lengths,
            product,
        })
    }

    /// `W(X,S)`, generated by `ψ_{x1}, .., ψ_{xn}`.
    pub fn of_solution(sol: &YbeSolution) -> Result<Self> {
        Self::generate(sol.n(), psi_generators(sol))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[SignedPermutation] {
        &self.generators
    }

    /// Index of generator `g` in the element list.
    pub fn generator_index(&self, g: usize) -> usize {
        self.product[g]
    }

    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &SignedPermutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &SignedPermutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Right multiplication by a generator.
    pub fn times_generator(&self, i: usize, g: usize) -> usize {
        self.product[i * self.generators.len() + g]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        let p = self.elements[i].compose(&self.elements[j]);
        self.index[&p]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index[&self.elements[i].inverse()]
    }

    /// A geodesic word (generator indices) for element `i`, found by walking
    /// the BFS layers backwards.
    pub fn reduced_word(&self, i: usize) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.lengths[i]);
        let mut cur = i;
        while self.lengths[cur] > 0 {
            let (prev, g) = (0..self.generators.len())
                .find_map(|g| {
                    let inv = self.elements[cur].compose(&self.generators[g].inverse());
                    let p = self.index[&inv];
                    (self.lengths[p] + 1 == self.lengths[cur]).then_some((p, g))
                })
                .expect("BFS predecessor exists");
            word.push(g);
            cur = prev;
        }
        word.reverse();
        word
    }
}
