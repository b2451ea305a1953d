//! The generating-group machinery and the structural checks on `W(X,S)`.
//!
//! Functions taking only a [`FiniteGroupTable`] work for any finite group
//! generated as a monoid by its generator list (lengths are BFS distances over
//! positive generators). [`SolutionAnalysis`] ties a solution, its monoid, its
//! simple elements and its quotient together.

use std::collections::{BTreeSet, HashSet};

use crate::coset::{self, Letter};
use crate::error::{Error, Result};
use crate::frozen::{FrozenCalculus, FrozenVector};
use crate::group::FiniteGroupTable;
use crate::monoid::{ItypeMonoid, SimpleElement, Word};
use crate::signed::{psi_generators, psi_of_word, SignedPermutation};
use crate::solution::YbeSolution;

/// Left and right X-factors of an element, as element indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSets {
    pub left: BTreeSet<usize>,
    pub right: BTreeSet<usize>,
}

pub fn x_factor_sets(w: &FiniteGroupTable, w0: usize) -> FactorSets {
    let total = w.length(w0);
    let mut left = BTreeSet::new();
    let mut right = BTreeSet::new();
    for v in 0..w.order() {
        let vi = w.inverse(v);
        if w.length(v) + w.length(w.mul(vi, w0)) == total {
            left.insert(v);
        }
        if w.length(w.mul(w0, vi)) + w.length(v) == total {
            right.insert(v);
        }
    }
    FactorSets { left, right }
}

pub fn is_x_balanced(w: &FiniteGroupTable, w0: usize) -> bool {
    let fs = x_factor_sets(w, w0);
    fs.left == fs.right
}

/// `u` is a left X-factor of `v`.
pub fn left_factor_le(w: &FiniteGroupTable, u: usize, v: usize) -> bool {
    w.length(u) + w.length(w.mul(w.inverse(u), v)) == w.length(v)
}

/// `u` is a right X-factor of `v`.
pub fn right_factor_le(w: &FiniteGroupTable, u: usize, v: usize) -> bool {
    w.length(w.mul(v, w.inverse(u))) + w.length(u) == w.length(v)
}

fn has_meets_and_joins(elems: &[usize], le: impl Fn(usize, usize) -> bool) -> bool {
    let unique_extreme = |bounds: &[usize], greatest: bool| {
        let tops: Vec<usize> = bounds
            .iter()
            .copied()
            .filter(|&m| {
                bounds
                    .iter()
                    .all(|&c| if greatest { le(c, m) } else { le(m, c) })
            })
            .collect();
        tops.len() == 1
    };
    for (i, &a) in elems.iter().enumerate() {
        for &b in &elems[i..] {
            let lower: Vec<usize> = elems
                .iter()
                .copied()
                .filter(|&c| le(c, a) && le(c, b))
                .collect();
            let upper: Vec<usize> = elems
                .iter()
                .copied()
                .filter(|&c| le(a, c) && le(b, c))
                .collect();
            if !unique_extreme(&lower, true) || !unique_extreme(&upper, false) {
                return false;
            }
        }
    }
    true
}

/// Every pair of a balanced factor set has a meet and a join inside the set,
/// for the left-factor order and for the right-factor order.
pub fn lattice_check(fs: &FactorSets, w: &FiniteGroupTable) -> bool {
    if fs.left != fs.right {
        return false;
    }
    let elems: Vec<usize> = fs.left.iter().copied().collect();
    has_meets_and_joins(&elems, |u, v| left_factor_le(w, u, v))
        && has_meets_and_joins(&elems, |u, v| right_factor_le(w, u, v))
}

/// The monoid `M_{w,X}` presented by the factor set of `w` with relations
/// `v·v' = v''` whenever the product holds in `W` and lengths add.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratedMonoidPresentation {
    /// Element indices of the generators (the factor set, ascending).
    pub generators: Vec<usize>,
    /// `(v, v', v'')` as element indices.
    pub relations: Vec<(usize, usize, usize)>,
    lengths: Vec<usize>,
}

/// The same monoid rewritten over its atoms (generators of length one).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AtomPresentation {
    /// Element indices of the atoms; words below index into this list.
    pub atoms: Vec<usize>,
    /// Non-trivial relations, each with its sides ordered and deduplicated.
    pub relations: BTreeSet<(Vec<usize>, Vec<usize>)>,
}

impl GeneratedMonoidPresentation {
    pub fn atoms(&self) -> Vec<usize> {
        self.generators
            .iter()
            .copied()
            .filter(|&v| self.lengths[v] == 1)
            .collect()
    }

    /// Eliminates every non-atom generator by an atom word (peeling one atom
    /// at a time off a length-additive relation) and substitutes into all
    /// relations. Trivial relations vanish. Returns `None` if some generator
    /// cannot be expressed, which does not happen for balanced elements.
    pub fn over_atoms(&self) -> Option<AtomPresentation> {
        let atoms = self.atoms();
        let mut expansion: std::collections::HashMap<usize, Vec<usize>> =
            std::collections::HashMap::new();
        let mut by_length = self.generators.clone();
        by_length.sort_by_key(|&v| (self.lengths[v], v));
        for &v in &by_length {
            let word = match self.lengths[v] {
                0 => Vec::new(),
                1 => vec![atoms.iter().position(|&a| a == v)?],
                _ => {
                    let &(a, rest, _) = self.relations.iter().find(|&&(a, rest, prod)| {
                        prod == v
                            && self.lengths[a] == 1
                            && self.lengths[rest] + 1 == self.lengths[v]
                    })?;
                    let mut word = vec![atoms.iter().position(|&x| x == a)?];
                    word.extend_from_slice(expansion.get(&rest)?);
                    word
                }
            };
            expansion.insert(v, word);
        }
        let mut relations = BTreeSet::new();
        for &(a, b, c) in &self.relations {
            let mut lhs = expansion[&a].clone();
            lhs.extend_from_slice(&expansion[&b]);
            let rhs = expansion[&c].clone();
            if lhs != rhs {
                relations.insert(if lhs < rhs { (lhs, rhs) } else { (rhs, lhs) });
            }
        }
        Some(AtomPresentation { atoms, relations })
    }
}

pub fn generated_monoid_presentation(
    fs: &FactorSets,
    w: &FiniteGroupTable,
) -> GeneratedMonoidPresentation {
    let generators: Vec<usize> = fs.left.iter().copied().collect();
    let members: HashSet<usize> = generators.iter().copied().collect();
    let mut relations = Vec::new();
    for &a in &generators {
        for &b in &generators {
            let c = w.mul(a, b);
            if members.contains(&c) && w.length(a) + w.length(b) == w.length(c) {
                relations.push((a, b, c));
            }
        }
    }
    GeneratedMonoidPresentation {
        generators,
        relations,
        lengths: w.lengths().to_vec(),
    }
}

/// A solution together with its monoid, simples and quotient group.
#[derive(Debug, Clone)]
pub struct SolutionAnalysis<'a> {
    pub sol: &'a YbeSolution,
    pub monoid: ItypeMonoid<'a>,
    /// Indexed by the bitmask of the left atom set.
    pub simples: Vec<SimpleElement>,
    pub group: FiniteGroupTable,
    /// `psi_simples[k]` = element index of `ψ(simples[k])`.
    pub psi_simples: Vec<usize>,
    gens: Vec<SignedPermutation>,
}

impl<'a> SolutionAnalysis<'a> {
    pub fn new(sol: &'a YbeSolution) -> Result<Self> {
        let monoid = ItypeMonoid::new(sol)?;
        let simples = monoid.simples()?;
        let group = FiniteGroupTable::of_solution(sol)?;
        let gens = psi_generators(sol);
        let psi_simples = simples
            .iter()
            .map(|s| {
                group
                    .index_of(&psi_of_word(&gens, &s.canonical_word))
                    .expect("ψ of a word lies in W")
            })
            .collect();
        Ok(SolutionAnalysis {
            sol,
            monoid,
            simples,
            group,
            psi_simples,
            gens,
        })
    }

    pub fn n(&self) -> usize {
        self.sol.n()
    }

    pub fn psi(&self, w: &Word) -> SignedPermutation {
        psi_of_word(&self.gens, w)
    }

    pub fn psi_generators(&self) -> &[SignedPermutation] {
        &self.gens
    }

    pub fn delta(&self) -> &SimpleElement {
        self.simples.last().expect("2^n simples")
    }

    /// Element index of `ψ_Δ`.
    pub fn psi_delta(&self) -> usize {
        *self.psi_simples.last().expect("2^n simples")
    }

    pub fn psi_simple_set(&self) -> BTreeSet<usize> {
        self.psi_simples.iter().copied().collect()
    }

    pub fn delta_factor_sets(&self) -> FactorSets {
        x_factor_sets(&self.group, self.psi_delta())
    }

    /// ψ restricted to the simples is injective.
    pub fn psi_injective_on_simples(&self) -> bool {
        self.psi_simple_set().len() == self.simples.len()
    }

    /// The factor set of `ψ_Δ` is balanced and equals `ψ(Div Δ)`.
    pub fn divisor_image_check(&self) -> bool {
        let fs = self.delta_factor_sets();
        fs.left == fs.right && fs.left == self.psi_simple_set()
    }

    pub fn lattice_check(&self) -> bool {
        lattice_check(&self.delta_factor_sets(), &self.group)
    }

    /// (a) ψ injective on simples, (b) `ℓ_X(ψ_s) = ℓ(s)` for every simple,
    /// (c) `ψ_Δ` balanced with factor set `ψ(Div Δ)`.
    pub fn generating_group_verification(&self) -> bool {
        let lengths_agree = self
            .simples
            .iter()
            .zip(&self.psi_simples)
            .all(|(s, &i)| self.group.length(i) == s.len());
        self.psi_injective_on_simples() && lengths_agree && self.divisor_image_check()
    }

    /// `(is_section, has_property_c)`; they must agree.
    pub fn section_equivalence_check(&self) -> Result<(bool, bool)> {
        let is_section = self.psi_simple_set().len() == self.group.order();
        let property_c = self.sol.property_c()?;
        if is_section != property_c {
            return Err(Error::EquivalenceViolated {
                is_section,
                property_c,
            });
        }
        Ok((is_section, property_c))
    }

    fn frozen_calculus(&self) -> Result<FrozenCalculus<'_, 'a>> {
        FrozenCalculus::new(&self.monoid)
    }

    fn require_property_c(&self) -> Result<()> {
        match self.sol.property_c_violation()? {
            Some(p) => Err(Error::PropertyCViolated(p.x + 1, p.y + 1)),
            None => Ok(()),
        }
    }

    /// For every word of length at most `radius`: `ψ_w = 1` iff the simple
    /// part of its frozen decomposition is trivial.
    pub fn kernel_ball_check(&self, radius: usize) -> Result<bool> {
        let fc = self.frozen_calculus()?;
        for w in all_words(self.n(), radius) {
            let in_kernel = self.psi(&w).is_identity();
            let (_, simple) = fc.frozen_decomposition(&w)?;
            if in_kernel != simple.is_identity() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Frozen vectors of total degree at most `depth` give pairwise distinct
    /// elements, each commuting with every frozen element.
    pub fn frozen_kernel_rank_check(&self, depth: u32) -> Result<bool> {
        let fc = self.frozen_calculus()?;
        let mut seen = HashSet::new();
        for v in FrozenVector::all_up_to(self.n(), depth) {
            let word = fc.vector_word(&v);
            if !seen.insert(self.monoid.canonical(&word)?) {
                return Ok(false);
            }
            for i in 0..self.n() {
                let lhs = fc.theta(i).concat(&word);
                let rhs = word.concat(&fc.theta(i));
                if !self.monoid.words_equal(&lhs, &rhs)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `ψ_Δ` is the unique element of maximal length, that length is `n`,
    /// `ψ_Δ² = 1`, and conjugation by `ψ_Δ` permutes the generators.
    pub fn w0_properties_check(&self) -> Result<bool> {
        self.require_property_c()?;
        let w = &self.group;
        let w0 = self.psi_delta();
        let max = *w.lengths().iter().max().unwrap();
        let longest: Vec<usize> = (0..w.order()).filter(|&i| w.length(i) == max).collect();
        if longest != [w0] || max != self.n() {
            return Ok(false);
        }
        if w.mul(w0, w0) != w.identity() {
            return Ok(false);
        }
        let gens: BTreeSet<usize> = (0..self.n()).map(|g| w.generator_index(g)).collect();
        let w0_inv = w.inverse(w0);
        let conj: BTreeSet<usize> = gens.iter().map(|&g| w.mul(w.mul(w0, g), w0_inv)).collect();
        Ok(conj == gens)
    }

    /// For all `w ∈ W` and atoms `x`: `ℓ(ψ_x w) = ℓ(w) ± 1`; when the length
    /// drops, `w = ψ_x⁻¹ w1` with `ψ_x⁻¹` a generator and `ℓ(w1) = ℓ(w) - 1`.
    pub fn exchange_check(&self) -> Result<bool> {
        self.require_property_c()?;
        let w = &self.group;
        let gens: Vec<usize> = (0..self.n()).map(|g| w.generator_index(g)).collect();
        for v in 0..w.order() {
            for &x in &gens {
                let xv = w.mul(x, v);
                let (lv, lxv) = (w.length(v), w.length(xv));
                if lxv != lv + 1 && lxv + 1 != lv {
                    return Ok(false);
                }
                if lxv + 1 == lv {
                    let x_inv = w.inverse(x);
                    if !gens.contains(&x_inv) || w.mul(x_inv, xv) != v {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// Order of the group presented by the I-type relations plus
    /// `ψ_x ψ_y = 1` for each frozen pair, by coset enumeration.
    pub fn presented_quotient_order(&self) -> Result<usize> {
        let mut relators: Vec<Vec<Letter>> = Vec::new();
        for r in self.sol.presentation().relations {
            let [x, y] = r.left.map(|l| l as usize);
            let [z, t] = r.right.map(|l| l as usize);
            relators.push(vec![(x, false), (y, false), (t, true), (z, true)]);
        }
        for p in self.monoid.frozen_pairs() {
            relators.push(vec![(p.x, false), (p.y, false)]);
        }
        coset::group_order(self.n(), &relators, 1_000_000)
    }
}

/// All words of length at most `radius` over `n` atoms, shortest first.
pub fn all_words(n: usize, radius: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..radius {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for x in 0..n {
                let mut v = w.0.clone();
                v.push(x as u8);
                next.push(Word(v));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
