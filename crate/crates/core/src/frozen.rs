//! Frozen elements under property (C).
//!
//! `θ_i` is the frozen word whose first letter is `x_i`. Under property (C)
//! the frozen elements commute, are permuted by conjugation with atoms
//! (`θ_i z = z θ_j`), and every element factors as a product of frozen
//! elements followed by a simple element.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::monoid::{ItypeMonoid, SimpleElement, Word};

/// Exponents `m_1..m_n` of `θ_1^{m_1} ⋯ θ_n^{m_n}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrozenVector {
    pub exponents: Vec<u32>,
}

impl FrozenVector {
    pub fn zero(n: usize) -> Self {
        FrozenVector {
            exponents: vec![0; n],
        }
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.exponents.iter().all(|&m| m == 0)
    }

    /// All vectors of length `n` with total degree at most `max_degree`.
    pub fn all_up_to(n: usize, max_degree: u32) -> Vec<FrozenVector> {
        fn rec(n: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<FrozenVector>) {
            if prefix.len() == n {
                out.push(FrozenVector {
                    exponents: prefix.clone(),
                });
                return;
            }
            for m in 0..=left {
                prefix.push(m);
                rec(n, left - m, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, max_degree, &mut Vec::new(), &mut out);
        out
    }
}

#[derive(Debug, Clone)]
pub struct FrozenCalculus<'m, 'a> {
    monoid: &'m ItypeMonoid<'a>,
    // theta[i] = frozen word starting with x_i
    theta: Vec<[u8; 2]>,
    // conj[z][i] = j with θ_i z = z θ_j
    conj: Vec<Vec<usize>>,
}

impl<'m, 'a> FrozenCalculus<'m, 'a> {
    /// Fails with `PropertyCViolated` unless property (C) holds.
    pub fn new(monoid: &'m ItypeMonoid<'a>) -> Result<Self> {
        if let Some(p) = monoid.solution().property_c_violation()? {
            return Err(Error::PropertyCViolated(p.x + 1, p.y + 1));
        }
        let n = monoid.n();
        let theta: Vec<[u8; 2]> = monoid
            .frozen_pairs()
            .iter()
            .map(|p| [p.x as u8, p.y as u8])
            .collect();
        let mut calc = FrozenCalculus {
            monoid,
            theta,
            conj: Vec::new(),
        };
        let mut conj = vec![vec![0; n]; n];
        for (z, row) in conj.iter_mut().enumerate() {
            for (i, slot) in row.iter_mut().enumerate() {
                *slot = calc.compute_conjugate(z, i)?;
            }
        }
        calc.conj = conj;
        Ok(calc)
    }

    pub fn n(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self, i: usize) -> Word {
        Word(self.theta[i].to_vec())
    }

    /// Index of a frozen word given its two letters, if it is frozen.
    pub fn frozen_index(&self, x: usize, y: usize) -> Option<usize> {
        (self.theta[x] == [x as u8, y as u8]).then_some(x)
    }

    fn compute_conjugate(&self, z: usize, i: usize) -> Result<usize> {
        let mut w = self.theta[i].to_vec();
        w.push(z as u8);
        let class = self.monoid.class_set(&w)?;
        class
            .iter()
            .find(|u| u[0] as usize == z && self.monoid.is_frozen(u[1] as usize, u[2] as usize))
            .map(|u| u[1] as usize)
            .ok_or_else(|| {
                Error::InvalidSolution(format!(
                    "no frozen conjugate of theta_{} by x{}",
                    i + 1,
                    z + 1
                ))
            })
    }

    /// `j` such that `θ_i · z = z · θ_j`.
    pub fn frozen_conjugate(&self, z: usize, i: usize) -> usize {
        self.conj[z][i]
    }

    /// `i` such that `θ_i · z = z · θ_j`, i.e. moves `θ_j` to the left of `z`.
    pub fn frozen_conjugate_inverse(&self, z: usize, j: usize) -> usize {
        self.conj[z]
            .iter()
            .position(|&k| k == j)
            .expect("conjugation by an atom permutes the frozen elements")
    }

    /// True when, for every atom `z`, `i ↦ frozen_conjugate(z, i)` is a
    /// bijection.
    pub fn conjugation_is_bijective(&self) -> bool {
        self.conj.iter().all(|row| {
            let set: HashSet<usize> = row.iter().copied().collect();
            set.len() == row.len()
        })
    }

    pub fn vector_word(&self, v: &FrozenVector) -> Word {
        let mut letters = Vec::new();
        for (i, &m) in v.exponents.iter().enumerate() {
            for _ in 0..m {
                letters.extend_from_slice(&self.theta[i]);
            }
        }
        Word(letters)
    }

    /// Splits `w` as (product of frozen elements) · (simple element).
    ///
    /// Repeatedly takes the lexicographically least word of the current class
    /// that contains a frozen factor, removes its leftmost frozen factor and
    /// pulls it to the front past the preceding letters.
    pub fn frozen_decomposition(&self, w: &Word) -> Result<(FrozenVector, SimpleElement)> {
        let mut vector = FrozenVector::zero(self.n());
        let mut cur = w.0.clone();
        loop {
            let class = self.monoid.class_set(&cur)?;
            let witness = class
                .iter()
                .filter(|u| self.monoid.has_frozen_factor(u))
                .min();
            let Some(witness) = witness else {
                let mut simple = self.monoid.simple_of_word(&Word(cur))?;
                simple.canonical_word = Word(class.into_iter().min().unwrap_or_default());
                return Ok((vector, simple));
            };
            let p = (0..witness.len() - 1)
                .find(|&p| {
                    self.monoid
                        .is_frozen(witness[p] as usize, witness[p + 1] as usize)
                })
                .expect("witness has a frozen factor");
            let mut j = witness[p] as usize;
            for &z in witness[..p].iter().rev() {
                j = self.frozen_conjugate_inverse(z as usize, j);
            }
            vector.exponents[j] += 1;
            let mut next = witness[..p].to_vec();
            next.extend_from_slice(&witness[p + 2..]);
            cur = next;
        }
    }

    /// Canonical words of the length-`k` left divisors `p` of `c` with
    /// `prefix ≤ p`.
    fn divisors_above(
        &self,
        class: &HashSet<Vec<u8>>,
        prefix: &[u8],
        k: usize,
        from_left: bool,
    ) -> Result<BTreeSet<Vec<u8>>> {
        let mut out = BTreeSet::new();
        for u in class {
            let (head, part) = if from_left {
                (&u[..prefix.len()], &u[..k])
            } else {
                (&u[u.len() - prefix.len()..], &u[u.len() - k..])
            };
            if head == prefix {
                out.insert(self.monoid.canonical(&Word(part.to_vec()))?.0);
            }
        }
        Ok(out)
    }

    /// `θ_i θ_j = θ_j θ_i` for all `i != j`, and that element is both the
    /// right and the left lcm of `θ_i` and `θ_j`.
    pub fn frozen_commute_check(&self) -> Result<bool> {
        let n = self.n();
        for i in 0..n {
            for j in i + 1..n {
                let ij = self.theta(i).concat(&self.theta(j));
                let ji = self.theta(j).concat(&self.theta(i));
                if !self.monoid.words_equal(&ij, &ji)? {
                    return Ok(false);
                }
                let class = self.monoid.class_set(&ij.0)?;
                for from_left in [true, false] {
                    // a common multiple strictly shorter than θ_iθ_j would show
                    // up as a shared divisor of length 3
                    let a = self.divisors_above(&class, &self.theta[i], 3, from_left)?;
                    let b = self.divisors_above(&class, &self.theta[j], 3, from_left)?;
                    if a.intersection(&b).next().is_some() {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }
}
