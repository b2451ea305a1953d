//! Words, rewriting closure and simple elements of the I-type monoid
//! `M(X,S) = ⟨X | xy = g_x(y) f_y(x)⟩`.
//!
//! Element equality is decided by the full rewriting closure of a word: the
//! relations are homogeneous, so every class is finite and all its members
//! have the same length. The canonical word of an element is the
//! lexicographically least member of its class.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::solution::{FrozenPair, YbeSolution};

pub const DEFAULT_CLASS_BOUND: usize = 1_000_000;

/// A word over the atoms (0-based letters). The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn atom(x: usize) -> Self {
        Word(vec![x as u8])
    }

    /// Builds a word from 1-based letters.
    pub fn from_one_based(letters: &[usize]) -> Self {
        Word(letters.iter().map(|&l| (l - 1) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|&l| l as usize)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn max_letter(&self) -> Option<usize> {
        self.0.iter().max().map(|&l| l as usize)
    }
}

impl fmt::Display for Word {
    /// Whitespace-separated 1-based letters, e.g. `"1 3 2"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|l| (l + 1).to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        for tok in s.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad letter {tok:?} in word")))?;
            if v == 0 || v > u8::MAX as usize {
                return Err(Error::Parse(format!("letter {v} out of range")));
            }
            letters.push((v - 1) as u8);
        }
        Ok(Word(letters))
    }
}

/// A divisor of the Garside element `Δ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleElement {
    pub atoms_left: BTreeSet<usize>,
    pub atoms_right: BTreeSet<usize>,
    pub canonical_word: Word,
}

impl SimpleElement {
    pub fn identity() -> Self {
        SimpleElement {
            atoms_left: BTreeSet::new(),
            atoms_right: BTreeSet::new(),
            canonical_word: Word::empty(),
        }
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.canonical_word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.canonical_word.is_empty()
    }
}

/// The monoid `M(X,S)` of a validated solution.
#[derive(Debug, Clone)]
pub struct ItypeMonoid<'a> {
    sol: &'a YbeSolution,
    n: usize,
    frozen: Vec<bool>,
    frozen_pairs: Vec<FrozenPair>,
    // phi[x][y] = φ_x(y) = f_x^{-1}(y)
    phi: Vec<Vec<u8>>,
    class_bound: usize,
}

impl<'a> ItypeMonoid<'a> {
    pub fn new(sol: &'a YbeSolution) -> Result<Self> {
        let report = sol.validate();
        if !report.is_valid() {
            return Err(Error::InvalidSolution(report.failures().join("; ")));
        }
        let n = sol.n();
        let frozen_pairs = sol.frozen_pairs()?;
        let mut frozen = vec![false; n * n];
        for p in &frozen_pairs {
            frozen[p.x * n + p.y] = true;
        }
        let phi = (0..n)
            .map(|x| {
                let mut inv = vec![0u8; n];
                for (z, &img) in sol.f_table()[x].iter().enumerate() {
                    inv[img as usize] = z as u8;
                }
                inv
            })
            .collect();
        Ok(ItypeMonoid {
            sol,
            n,
            frozen,
            frozen_pairs,
            phi,
            class_bound: DEFAULT_CLASS_BOUND,
        })
    }

    pub fn with_class_bound(mut self, bound: usize) -> Self {
        self.class_bound = bound;
        self
    }

    pub fn solution(&self) -> &'a YbeSolution {
        self.sol
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn frozen_pairs(&self) -> &[FrozenPair] {
        &self.frozen_pairs
    }

    #[inline]
    pub fn is_frozen(&self, x: usize, y: usize) -> bool {
        self.frozen[x * self.n + y]
    }

    #[inline]
    pub fn phi(&self, x: usize, y: usize) -> usize {
        self.phi[x][y] as usize
    }

    /// True if some two consecutive letters of `w` form a frozen word.
    pub fn has_frozen_factor(&self, w: &[u8]) -> bool {
        w.windows(2)
            .any(|p| self.is_frozen(p[0] as usize, p[1] as usize))
    }

    pub(crate) fn class_set(&self, w: &[u8]) -> Result<HashSet<Vec<u8>>> {
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        seen.insert(w.to_vec());
        let mut stack = vec![w.to_vec()];
        while let Some(cur) = stack.pop() {
            for i in 0..cur.len().saturating_sub(1) {
                let (x, y) = (cur[i] as usize, cur[i + 1] as usize);
                let (a, b) = self.sol.s(x, y);
                if (a, b) == (x, y) {
                    continue;
                }
                let mut next = cur.clone();
                next[i] = a as u8;
                next[i + 1] = b as u8;
                if !seen.contains(&next) {
                    if seen.len() >= self.class_bound {
                        return Err(Error::ClassTooLarge {
                            bound: self.class_bound,
                        });
                    }
                    seen.insert(next.clone());
                    stack.push(next);
                }
            }
        }
        Ok(seen)
    }

    /// All words representing the same element as `w`.
    pub fn equivalent_words(&self, w: &Word) -> Result<BTreeSet<Word>> {
        Ok(self.class_set(&w.0)?.into_iter().map(Word).collect())
    }

    /// Lexicographically least word of the class of `w`.
    pub fn canonical(&self, w: &Word) -> Result<Word> {
        let class = self.class_set(&w.0)?;
        Ok(Word(class.into_iter().min().unwrap_or_default()))
    }

    pub fn words_equal(&self, w1: &Word, w2: &Word) -> Result<bool> {
        if w1.len() != w2.len() {
            return Ok(false);
        }
        if w1 == w2 {
            return Ok(true);
        }
        Ok(self.class_set(&w1.0)?.contains(&w2.0))
    }

    /// Atoms that left-divide the element represented by `w`.
    pub fn left_atoms(&self, w: &Word) -> Result<BTreeSet<usize>> {
        Ok(self
            .class_set(&w.0)?
            .iter()
            .filter_map(|u| u.first().map(|&l| l as usize))
            .collect())
    }

    /// Atoms that right-divide the element represented by `w`.
    pub fn right_atoms(&self, w: &Word) -> Result<BTreeSet<usize>> {
        Ok(self
            .class_set(&w.0)?
            .iter()
            .filter_map(|u| u.last().map(|&l| l as usize))
            .collect())
    }

    pub fn right_divides(&self, x: usize, w: &Word) -> Result<bool> {
        if w.is_empty() {
            return Ok(false);
        }
        Ok(self
            .class_set(&w.0)?
            .iter()
            .any(|u| *u.last().unwrap() as usize == x))
    }

    /// Right lcm of two atoms: `x` itself, or `x z` with `g_x(z) = y`.
    pub fn right_lcm_atoms(&self, x: usize, y: usize) -> Word {
        if x == y {
            return Word::atom(x);
        }
        let z = (0..self.n)
            .find(|&z| self.sol.g(x, z) == y)
            .expect("g_x is a bijection");
        Word(vec![x as u8, z as u8])
    }

    /// Left lcm of two atoms: `x` itself, or `φ_x(y) x`.
    pub fn left_lcm_atoms(&self, x: usize, y: usize) -> Word {
        if x == y {
            return Word::atom(x);
        }
        Word(vec![self.phi(x, y) as u8, x as u8])
    }

    /// True iff no word of the class of `w` contains a frozen factor.
    pub fn is_simple(&self, w: &Word) -> Result<bool> {
        if w.len() < 2 {
            return Ok(true);
        }
        Ok(!self
            .class_set(&w.0)?
            .iter()
            .any(|u| self.has_frozen_factor(u)))
    }

    fn simple_from_class(&self, class: &HashSet<Vec<u8>>) -> SimpleElement {
        let atoms_left = class
            .iter()
            .filter_map(|u| u.first().map(|&l| l as usize))
            .collect();
        let atoms_right = class
            .iter()
            .filter_map(|u| u.last().map(|&l| l as usize))
            .collect();
        let canonical_word = Word(class.iter().min().cloned().unwrap_or_default());
        SimpleElement {
            atoms_left,
            atoms_right,
            canonical_word,
        }
    }

    /// Packages a word already known to be simple.
    pub fn simple_of_word(&self, w: &Word) -> Result<SimpleElement> {
        let class = self.class_set(&w.0)?;
        Ok(self.simple_from_class(&class))
    }

    /// The simple element whose left atom set is `subset`: the right lcm of
    /// `subset`, grown one atom at a time. At each step the lcm of the
    /// current simple `s` and a new atom `x` has length `|s| + 1`, so it is
    /// `s·y` for the unique atom `y` such that `x` left-divides `s·y`.
    pub fn simple_from_subset(&self, subset: &BTreeSet<usize>) -> Result<SimpleElement> {
        let mut current: Vec<u8> = Vec::new();
        for &x in subset {
            if current.is_empty() {
                current.push(x as u8);
                continue;
            }
            let mut grown = None;
            for y in 0..self.n {
                let mut cand = current.clone();
                cand.push(y as u8);
                let class = self.class_set(&cand)?;
                if class.iter().any(|u| u[0] as usize == x) {
                    grown = Some(class.into_iter().min().unwrap());
                    break;
                }
            }
            current = grown.ok_or_else(|| {
                Error::InvalidSolution(format!("no right lcm with atom {}", x + 1))
            })?;
        }
        let class = self.class_set(&current)?;
        Ok(self.simple_from_class(&class))
    }

    pub fn delta(&self) -> Result<SimpleElement> {
        self.simple_from_subset(&(0..self.n).collect())
    }

    /// All `2^n` simple elements, indexed by the bitmask of their left atom set.
    pub fn simples(&self) -> Result<Vec<SimpleElement>> {
        (0u64..1 << self.n)
            .map(|mask| {
                let subset = (0..self.n).filter(|i| mask >> i & 1 == 1).collect();
                self.simple_from_subset(&subset)
            })
            .collect()
    }

    /// First and last letters over the representatives of `s`.
    pub fn atom_divisors(&self, s: &SimpleElement) -> Result<(BTreeSet<usize>, BTreeSet<usize>)> {
        let class = self.class_set(&s.canonical_word.0)?;
        let simple = self.simple_from_class(&class);
        Ok((simple.atoms_left, simple.atoms_right))
    }

    pub fn count_representatives(&self, s: &SimpleElement) -> Result<usize> {
        Ok(self.class_set(&s.canonical_word.0)?.len())
    }

    /// Left-greedy decomposition into simple factors. The head of a nonempty
    /// element `a` is the right lcm of the atoms that left-divide `a`.
    pub fn greedy_normal_form(&self, w: &Word) -> Result<Vec<SimpleElement>> {
        if w.is_empty() {
            return Ok(vec![SimpleElement::identity()]);
        }
        let mut factors = Vec::new();
        let mut rest = w.0.clone();
        while !rest.is_empty() {
            let class = self.class_set(&rest)?;
            let left: BTreeSet<usize> = class.iter().map(|u| u[0] as usize).collect();
            let head = self.simple_from_subset(&left)?;
            let head_class = self.class_set(&head.canonical_word.0)?;
            let k = head.len();
            let witness = class
                .iter()
                .filter(|u| head_class.contains(&u[..k]))
                .min()
                .expect("head left-divides the remainder");
            rest = witness[k..].to_vec();
            factors.push(head);
        }
        Ok(factors)
    }
}
