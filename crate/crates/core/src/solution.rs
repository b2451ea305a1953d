//! Finite set-theoretic solutions of the Yang-Baxter equation.
//!
//! A solution on `X = {x1..xn}` is a map `S(x, y) = (g_x(y), f_y(x))`. The
//! tables are stored 0-based; reports and files use 1-based atoms.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct YbeSolution {
    n: usize,
    // s[x * n + y] = S(x, y)
    s: Vec<(u8, u8)>,
    // g[x][y] = g_x(y), f[y][x] = f_y(x); not necessarily bijective until validated
    g: Vec<Vec<u8>>,
    f: Vec<Vec<u8>>,
}

impl YbeSolution {
    /// Builds `S(x,y) = (g_x(y), f_y(x))`. Only checks shapes and
    /// bijectivity of the rows; the Yang-Baxter axioms are left to
    /// [`YbeSolution::validate`].
    pub fn from_gf_tables(n: usize, g: &[Permutation], f: &[Permutation]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("n must be positive".into()));
        }
        if n > u8::MAX as usize {
            return Err(Error::Dimension(format!("n = {n} exceeds 255")));
        }
        if g.len() != n || f.len() != n {
            return Err(Error::Dimension(format!(
                "expected {n} g and f tables, got {} and {}",
                g.len(),
                f.len()
            )));
        }
        for (name, table) in [("g", g), ("f", f)] {
            for (i, p) in table.iter().enumerate() {
                if p.degree() != n {
                    return Err(Error::Dimension(format!(
                        "{name}[{}] has degree {}, expected {n}",
                        i + 1,
                        p.degree()
                    )));
                }
            }
        }
        let g: Vec<Vec<u8>> = g.iter().map(|p| p.images().to_vec()).collect();
        let f: Vec<Vec<u8>> = f.iter().map(|p| p.images().to_vec()).collect();
        Ok(Self::from_maps(n, g, f))
    }

    /// Builds a candidate from an arbitrary table `s[x][y] = S(x, y)`
    /// (0-based). No axiom is assumed; this is the entry point for
    /// diagnosing degenerate or non-involutive maps.
    pub fn from_s_table(n: usize, table: &[Vec<(u8, u8)>]) -> Result<Self> {
        if n == 0 || table.len() != n || table.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension(format!("S-table must be {n}x{n}")));
        }
        let mut s = Vec::with_capacity(n * n);
        for row in table {
            for &(a, b) in row {
                if a as usize >= n || b as usize >= n {
                    return Err(Error::OutOfRange {
                        field: "s_table".into(),
                        value: a.max(b) as i64 + 1,
                        n,
                    });
                }
                s.push((a, b));
            }
        }
        let mut g = vec![vec![0u8; n]; n];
        let mut f = vec![vec![0u8; n]; n];
        for x in 0..n {
            for y in 0..n {
                let (a, b) = s[x * n + y];
                g[x][y] = a;
                f[y][x] = b;
            }
        }
        Ok(YbeSolution { n, s, g, f })
    }

    pub(crate) fn from_maps(n: usize, g: Vec<Vec<u8>>, f: Vec<Vec<u8>>) -> Self {
        let mut s = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                s.push((g[x][y], f[y][x]));
            }
        }
        YbeSolution { n, s, g, f }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn s(&self, x: usize, y: usize) -> (usize, usize) {
        let (a, b) = self.s[x * self.n + y];
        (a as usize, b as usize)
    }

    #[inline]
    pub fn g(&self, x: usize, y: usize) -> usize {
        self.g[x][y] as usize
    }

    #[inline]
    pub fn f(&self, y: usize, x: usize) -> usize {
        self.f[y][x] as usize
    }

    pub fn g_table(&self) -> &[Vec<u8>] {
        &self.g
    }

    pub fn f_table(&self) -> &[Vec<u8>] {
        &self.f
    }

    /// `g_x` as a permutation, or `None` if the map is not bijective.
    pub fn g_perm(&self, x: usize) -> Option<Permutation> {
        Permutation::from_images(self.g[x].clone())
    }

    pub fn f_perm(&self, y: usize) -> Option<Permutation> {
        Permutation::from_images(self.f[y].clone())
    }

    /// True when every `g_x` and `f_x` is the identity, i.e. `S` is the flip.
    pub fn is_trivial(&self) -> bool {
        (0..self.n).all(|x| (0..self.n).all(|y| self.g(x, y) == y && self.f(x, y) == y))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.n;
        let mut report = ValidationReport {
            nondegenerate: true,
            involutive: true,
            braided: true,
            degenerate_map: None,
            non_involutive_pair: None,
            non_braided_triple: None,
        };

        'outer: for (name, table) in [("g", &self.g), ("f", &self.f)] {
            for (x, row) in table.iter().enumerate() {
                if Permutation::from_images(row.clone()).is_none() {
                    report.nondegenerate = false;
                    report.degenerate_map = Some(format!("{name}_{}", x + 1));
                    break 'outer;
                }
            }
        }

        'inv: for x in 0..n {
            for y in 0..n {
                let (a, b) = self.s(x, y);
                if self.s(a, b) != (x, y) {
                    report.involutive = false;
                    report.non_involutive_pair = Some([x + 1, y + 1]);
                    break 'inv;
                }
            }
        }

        if let Some([x, y, z]) = self.braid_counterexample() {
            report.braided = false;
            report.non_braided_triple = Some([x + 1, y + 1, z + 1]);
        }
        report
    }

    fn s12(&self, t: [usize; 3]) -> [usize; 3] {
        let (a, b) = self.s(t[0], t[1]);
        [a, b, t[2]]
    }

    fn s23(&self, t: [usize; 3]) -> [usize; 3] {
        let (a, b) = self.s(t[1], t[2]);
        [t[0], a, b]
    }

    fn braid_counterexample(&self) -> Option<[usize; 3]> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = [x, y, z];
                    let lhs = self.s12(self.s23(self.s12(t)));
                    let rhs = self.s23(self.s12(self.s23(t)));
                    if lhs != rhs {
                        return Some(t);
                    }
                }
            }
        }
        None
    }

    /// Checks `R12 R13 R23 = R23 R13 R12` on `X³` for the R-matrix
    /// `R = flip ∘ S`, i.e. `R(x, y) = (f_y(x), g_x(y))`.
    pub fn r_matrix_qybe_check(&self) -> bool {
        let n = self.n;
        let r = |a: usize, b: usize| {
            let (u, v) = self.s(a, b);
            (v, u)
        };
        let r12 = |t: [usize; 3]| {
            let (a, b) = r(t[0], t[1]);
            [a, b, t[2]]
        };
        let r13 = |t: [usize; 3]| {
            let (a, c) = r(t[0], t[2]);
            [a, t[1], c]
        };
        let r23 = |t: [usize; 3]| {
            let (b, c) = r(t[1], t[2]);
            [t[0], b, c]
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t = [x, y, z];
                    if r12(r13(r23(t))) != r23(r13(r12(t))) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The `n` frozen pairs `(x, y)` with `S(x, y) = (x, y)`, sorted by `x`.
    pub fn frozen_pairs(&self) -> Result<Vec<FrozenPair>> {
        let n = self.n;
        let mut pairs = Vec::with_capacity(n);
        let mut second_seen = vec![false; n];
        for x in 0..n {
            let mut found = None;
            for y in 0..n {
                if self.s(x, y) == (x, y) {
                    if found.is_some() {
                        return Err(Error::FrozenUniquenessViolated(x + 1));
                    }
                    found = Some(y);
                }
            }
            let y = found.ok_or(Error::FrozenUniquenessViolated(x + 1))?;
            if second_seen[y] {
                return Err(Error::FrozenUniquenessViolated(y + 1));
            }
            second_seen[y] = true;
            pairs.push(FrozenPair { x, y });
        }
        Ok(pairs)
    }

    /// First frozen pair at which `g_x ∘ g_y = id` or `f_y ∘ f_x = id` fails.
    pub fn property_c_violation(&self) -> Result<Option<FrozenPair>> {
        let n = self.n;
        for pair in self.frozen_pairs()? {
            let (x, y) = (pair.x, pair.y);
            let g_ok = (0..n).all(|z| self.g(x, self.g(y, z)) == z);
            let f_ok = (0..n).all(|z| self.f(y, self.f(x, z)) == z);
            if !(g_ok && f_ok) {
                return Ok(Some(pair));
            }
        }
        Ok(None)
    }

    pub fn property_c(&self) -> Result<bool> {
        Ok(self.property_c_violation()?.is_none())
    }

    pub fn presentation(&self) -> ItypePresentation {
        let n = self.n;
        let mut relations = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let (a, b) = self.s(x, y);
                if (a, b) == (x, y) {
                    continue;
                }
                let left = [x as u8, y as u8];
                let right = [a as u8, b as u8];
                if left < right {
                    relations.push(Relation { left, right });
                }
            }
        }
        relations.sort();
        ItypePresentation { n, relations }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub nondegenerate: bool,
    pub involutive: bool,
    pub braided: bool,
    /// e.g. `"g_2"`: the first component map that is not a bijection.
    pub degenerate_map: Option<String>,
    /// 1-based `(x, y)` with `S(S(x, y)) != (x, y)`.
    pub non_involutive_pair: Option<[usize; 2]>,
    /// 1-based `(x, y, z)` where the braid relation fails.
    pub non_braided_triple: Option<[usize; 3]>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.nondegenerate && self.involutive && self.braided
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(m) = &self.degenerate_map {
            out.push(format!("degenerate: {m} is not a bijection"));
        }
        if let Some([x, y]) = self.non_involutive_pair {
            out.push(format!("not involutive at ({x},{y})"));
        }
        if let Some([x, y, z]) = self.non_braided_triple {
            out.push(format!("not braided at ({x},{y},{z})"));
        }
        out
    }
}

/// A pair `(x, y)` fixed by `S`. Atoms are 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FrozenPair {
    pub x: usize,
    pub y: usize,
}

impl fmt::Display for FrozenPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x + 1, self.y + 1)
    }
}

/// A defining relation `left = right` between two-letter words, stored with
/// `left < right` lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub left: [u8; 2],
    pub right: [u8; 2],
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "x{}x{}=x{}x{}",
            self.left[0] + 1,
            self.left[1] + 1,
            self.right[0] + 1,
            self.right[1] + 1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ItypePresentation {
    pub n: usize,
    pub relations: Vec<Relation>,
}

impl ItypePresentation {
    /// Builds the canonical form of a relation given in either orientation,
    /// with 1-based letters.
    pub fn relation(a: [usize; 2], b: [usize; 2]) -> Relation {
        let a = [(a[0] - 1) as u8, (a[1] - 1) as u8];
        let b = [(b[0] - 1) as u8, (b[1] - 1) as u8];
        if a < b {
            Relation { left: a, right: b }
        } else {
            Relation { left: b, right: a }
        }
    }

    /// True when the relation count is `n(n-1)/2` and no two-letter word
    /// appears twice.
    pub fn is_itype(&self) -> bool {
        let n = self.n;
        if self.relations.len() != n * (n - 1) / 2 {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.relations
            .iter()
            .all(|r| seen.insert(r.left) && seen.insert(r.right))
    }
}
