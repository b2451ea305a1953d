//! Signed permutations and the representations `φ` and `ψ` of `G(X,S)`.
//!
//! A signed permutation `ρ` acts on the points `±1..±n` by
//! `ρ(k) = signs[k] · images[k]` and `ρ(-k) = -ρ(k)`.
//!
//! Composition convention: `ψ_{vw} = ψ_v ∘ ψ_w`, where `∘` applies the right
//! factor first. [`SignedPermutation::compose`] follows the same rule.

use std::fmt;

use crate::error::{Error, Result};
use crate::monoid::Word;
use crate::perm::Permutation;
use crate::solution::YbeSolution;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<u8>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            images: (0..n as u8).collect(),
            signs: vec![1; n],
        }
    }

    /// `images` 0-based, `signs` in `{+1, -1}`.
    pub fn new(images: Vec<u8>, signs: Vec<i8>) -> Result<Self> {
        if images.len() != signs.len() {
            return Err(Error::Dimension("images and signs differ in length".into()));
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Parse("signs must be +1 or -1".into()));
        }
        Permutation::from_images(images.clone()).ok_or_else(|| Error::NotBijective {
            field: "signed permutation".into(),
            detail: format!("{images:?}"),
        })?;
        Ok(SignedPermutation { images, signs })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Image of the 0-based atom `k` as `(atom, sign)`.
    #[inline]
    pub fn apply(&self, k: usize) -> (usize, i8) {
        (self.images[k] as usize, self.signs[k])
    }

    /// Image of a 1-based signed point.
    pub fn apply_point(&self, p: i64) -> i64 {
        let k = p.unsigned_abs() as usize - 1;
        let img = (self.images[k] as i64 + 1) * self.signs[k] as i64;
        if p < 0 {
            -img
        } else {
            img
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.images.len();
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for k in 0..n {
            let mid = other.images[k] as usize;
            images.push(self.images[mid]);
            signs.push(other.signs[k] * self.signs[mid]);
        }
        SignedPermutation { images, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.images.len();
        let mut images = vec![0u8; n];
        let mut signs = vec![1i8; n];
        for k in 0..n {
            let j = self.images[k] as usize;
            images[j] = k as u8;
            signs[j] = self.signs[k];
        }
        SignedPermutation { images, signs }
    }

    pub fn is_identity(&self) -> bool {
        self.signs.iter().all(|&s| s == 1)
            && self
                .images
                .iter()
                .enumerate()
                .all(|(i, &j)| i == j as usize)
    }

    /// Number of atoms sent to a negated atom.
    pub fn neg_count(&self) -> usize {
        self.signs.iter().filter(|&&s| s == -1).count()
    }

    /// The underlying permutation of `X`, forgetting signs.
    pub fn unsigned(&self) -> Permutation {
        Permutation::from_images(self.images.clone()).expect("images form a bijection")
    }

    pub fn order(&self) -> u64 {
        let mut k = 1;
        let mut p = self.clone();
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Number of signed points moved; used to order candidate generators.
    pub fn support_size(&self) -> usize {
        2 * (0..self.degree())
            .filter(|&k| self.images[k] as usize != k || self.signs[k] == -1)
            .count()
    }

    /// Parses cycle notation on `±1..±n`, e.g. `"(1,-1)(2,3,4)(-2,-3,-4)"`.
    /// The cycles must describe a signed permutation, i.e. commute with
    /// negation.
    pub fn from_cycle_str(n: usize, s: &str) -> Result<Self> {
        let mut map: Vec<Option<i64>> = vec![None; 2 * n];
        let slot = |p: i64| -> Result<usize> {
            let a = p.unsigned_abs() as usize;
            if a == 0 || a > n {
                return Err(Error::Parse(format!("point {p} out of range")));
            }
            Ok(if p > 0 { a - 1 } else { n + a - 1 })
        };
        let s = s.trim();
        if s != "()" {
            for chunk in s.split(')') {
                let chunk = chunk.trim();
                if chunk.is_empty() {
                    continue;
                }
                let body = chunk
                    .strip_prefix('(')
                    .ok_or_else(|| Error::Parse(format!("malformed cycle {chunk:?}")))?;
                let pts: Vec<i64> = body
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad point {t:?}")))
                    })
                    .collect::<Result<_>>()?;
                for (i, &p) in pts.iter().enumerate() {
                    let q = pts[(i + 1) % pts.len()];
                    let idx = slot(p)?;
                    slot(q)?;
                    if map[idx].is_some() {
                        return Err(Error::Parse(format!("point {p} repeated")));
                    }
                    map[idx] = Some(q);
                }
            }
        }
        let mut images = Vec::with_capacity(n);
        let mut signs = Vec::with_capacity(n);
        for k in 0..n {
            let pos = map[k].unwrap_or(k as i64 + 1);
            let neg = map[n + k].unwrap_or(-(k as i64 + 1));
            if neg != -pos {
                return Err(Error::Parse(format!(
                    "cycles do not commute with negation at point {}",
                    k + 1
                )));
            }
            images.push((pos.unsigned_abs() - 1) as u8);
            signs.push(if pos > 0 { 1 } else { -1 });
        }
        SignedPermutation::new(images, signs)
    }
}

impl fmt::Display for SignedPermutation {
    /// Cycle notation on `±1..±n` with no spaces. Cycles are listed in order of
    /// their first point in the sequence `1, 2, .., n, -1, -2, .., -n`, each
    /// starting at that point; fixed points are omitted and the identity is
    /// `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree() as i64;
        let order = (1..=n).chain((1..=n).map(|k| -k));
        let slot = |p: i64| if p > 0 { p - 1 } else { n - p - 1 } as usize;
        let mut seen = vec![false; 2 * n as usize];
        let mut wrote = false;
        for start in order {
            if seen[slot(start)] || self.apply_point(start) == start {
                continue;
            }
            let mut pts = Vec::new();
            let mut p = start;
            while !seen[slot(p)] {
                seen[slot(p)] = true;
                pts.push(p.to_string());
                p = self.apply_point(p);
            }
            write!(f, "({})", pts.join(","))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// `φ_x = f_x⁻¹`.
pub fn phi_of_atom(sol: &YbeSolution, x: usize) -> Permutation {
    let n = sol.n();
    let mut inv = vec![0u8; n];
    for (z, &img) in sol.f_table()[x].iter().enumerate() {
        inv[img as usize] = z as u8;
    }
    Permutation::from_images(inv).expect("f_x is a bijection on a valid solution")
}

/// `ψ_x`: `φ_x` with the image of `x` negated.
pub fn psi_of_atom(sol: &YbeSolution, x: usize) -> SignedPermutation {
    let phi = phi_of_atom(sol, x);
    let mut signs = vec![1i8; sol.n()];
    signs[x] = -1;
    SignedPermutation {
        images: phi.images().to_vec(),
        signs,
    }
}

pub fn psi_generators(sol: &YbeSolution) -> Vec<SignedPermutation> {
    (0..sol.n()).map(|x| psi_of_atom(sol, x)).collect()
}

/// `ψ_w = ψ_{w1} ∘ ψ_{w2} ∘ … ∘ ψ_{wk}`.
pub fn psi_of_word(gens: &[SignedPermutation], w: &Word) -> SignedPermutation {
    let n = gens.first().map_or(0, |g| g.degree());
    w.letters().fold(SignedPermutation::identity(n), |acc, x| {
        acc.compose(&gens[x])
    })
}

pub fn phi_of_word(sol: &YbeSolution, w: &Word) -> Permutation {
    w.letters().fold(Permutation::identity(sol.n()), |acc, x| {
        acc.compose(&phi_of_atom(sol, x))
    })
}

/// Checks that `φ` and `ψ` respect every defining relation `xy = zt`.
pub fn well_definedness_check(sol: &YbeSolution) -> bool {
    let gens = psi_generators(sol);
    let phis: Vec<Permutation> = (0..sol.n()).map(|x| phi_of_atom(sol, x)).collect();
    sol.presentation().relations.iter().all(|r| {
        let [x, y] = r.left.map(|l| l as usize);
        let [z, t] = r.right.map(|l| l as usize);
        phis[x].compose(&phis[y]) == phis[z].compose(&phis[t])
            && gens[x].compose(&gens[y]) == gens[z].compose(&gens[t])
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cycle_strings_round_trip() {
        for s in [
            "(1,-1)(2,3,4)(-2,-3,-4)",
            "(2,-4,-3,-2,4,3)",
            "(2,-2)(3,-3)(4,-4)",
            "()",
        ] {
            let p = SignedPermutation::from_cycle_str(4, s).unwrap();
            assert_eq!(p.to_string(), s);
        }
        assert!(SignedPermutation::from_cycle_str(4, "(1,2)").is_err());
        assert!(SignedPermutation::from_cycle_str(2, "(1,3,-1,-3)").is_err());
    }

    #[test]
    fn group_laws() {
        let a = SignedPermutation::from_cycle_str(4, "(2,-4,-3,-2,4,3)").unwrap();
        let b = SignedPermutation::from_cycle_str(4, "(1,-1)(2,3,4)(-2,-3,-4)").unwrap();
        assert!(a.compose(&a.inverse()).is_identity());
        assert!(a.inverse().compose(&a).is_identity());
        assert_eq!(a.compose(&b).compose(&a), a.compose(&b.compose(&a)));
        assert_eq!(a.order(), 6);
        assert_eq!(a.neg_count(), 1);
    }

    #[test]
    fn phi_examples() {
        let sol = catalog::sol_a();
        assert_eq!(phi_of_atom(&sol, 0).to_string(), "(2,4)");
        let sol = catalog::sol_b();
        assert_eq!(phi_of_atom(&sol, 0).to_string(), "(2,3,4)");
        let triv = catalog::trivial(3);
        assert!(phi_of_atom(&triv, 1).is_identity());
    }

    #[test]
    fn psi_examples() {
        let sol = catalog::sol_b();
        assert_eq!(psi_of_atom(&sol, 0).to_string(), "(1,-1)(2,3,4)(-2,-3,-4)");
        assert_eq!(psi_of_atom(&sol, 1).to_string(), "(2,-4,-3,-2,4,3)");
        let triv = catalog::trivial(3);
        assert_eq!(psi_of_atom(&triv, 1).to_string(), "(2,-2)");
    }

    #[test]
    fn psi_on_words() {
        let sol = catalog::sol_a();
        let gens = psi_generators(&sol);
        let w = |s: &str| s.parse::<Word>().unwrap();
        assert_eq!(psi_of_word(&gens, &w("1 2")), psi_of_word(&gens, &w("3 3")));
        assert!(psi_of_word(&gens, &Word::empty()).is_identity());
        for fw in ["1 1", "2 2", "3 4", "4 3"] {
            assert!(psi_of_word(&gens, &w(fw)).is_identity(), "{fw}");
        }
    }

    #[test]
    fn relations_respected() {
        assert!(well_definedness_check(&catalog::sol_a()));
        assert!(well_definedness_check(&catalog::sol_b()));
        assert!(well_definedness_check(&catalog::almost_trivial6()));
    }
}
