//! Exhaustive census of non-degenerate involutive solutions for `n ≤ 4`.
//!
//! Candidates are `n`-tuples of permutations `g_x`; involutivity forces
//! `f_y(x) = g_{g_x(y)}⁻¹(x)`, and the remaining axioms are checked directly.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::solution::YbeSolution;

pub const MAX_N: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionCensus {
    pub n: usize,
    pub solutions: Vec<YbeSolution>,
    pub up_to_iso: bool,
}

impl SolutionCensus {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }
}

/// All permutations of `0..n` as image vectors, in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    (0..n as u8).permutations(n).collect()
}

fn invert(p: &[u8]) -> Vec<u8> {
    let mut inv = vec![0u8; p.len()];
    for (i, &v) in p.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

/// The solution determined by `g` if one exists.
pub fn solution_from_g(g: &[Vec<u8>]) -> Option<YbeSolution> {
    let n = g.len();
    let g_inv: Vec<Vec<u8>> = g.iter().map(|p| invert(p)).collect();
    let mut f = vec![vec![0u8; n]; n];
    for y in 0..n {
        let mut seen = vec![false; n];
        for x in 0..n {
            let v = g_inv[g[x][y] as usize][x];
            if std::mem::replace(&mut seen[v as usize], true) {
                return None;
            }
            f[y][x] = v;
        }
    }
    let sol = YbeSolution::from_maps(n, g.to_vec(), f);
    sol.validate().is_valid().then_some(sol)
}

fn flat_g(sol: &YbeSolution) -> Vec<u8> {
    sol.g_table().concat()
}

/// Relabels atoms by `sigma`: `S' = (σ×σ) S (σ×σ)⁻¹`.
pub fn relabel(sol: &YbeSolution, sigma: &[u8]) -> YbeSolution {
    let n = sol.n();
    let inv = invert(sigma);
    let conj = |table: &[Vec<u8>]| -> Vec<Vec<u8>> {
        (0..n)
            .map(|a| {
                let row = &table[inv[a] as usize];
                (0..n)
                    .map(|b| sigma[row[inv[b] as usize] as usize])
                    .collect()
            })
            .collect()
    };
    YbeSolution::from_maps(n, conj(sol.g_table()), conj(sol.f_table()))
}

/// Lexicographically least relabeling (on the flattened `g` tables).
pub fn canonicalize_iso(sol: &YbeSolution) -> YbeSolution {
    permutations(sol.n())
        .iter()
        .map(|sigma| relabel(sol, sigma))
        .min_by_key(flat_g)
        .expect("at least one relabeling")
}

pub fn enumerate_solutions(n: usize, up_to_iso: bool) -> Result<SolutionCensus> {
    enumerate_solutions_with(n, up_to_iso, Execution::default())
}

pub fn enumerate_solutions_with(
    n: usize,
    up_to_iso: bool,
    exec: Execution,
) -> Result<SolutionCensus> {
    if n > MAX_N {
        return Err(Error::NTooLarge(n));
    }
    if n == 0 {
        return Err(Error::Dimension("n must be positive".into()));
    }
    let perms = permutations(n);
    let k = perms.len();
    let total = k.pow(n as u32);
    let mut solutions = exec.filter_map_range(total, |mut code| {
        let mut g = Vec::with_capacity(n);
        for _ in 0..n {
            g.push(perms[code % k].clone());
            code /= k;
        }
        solution_from_g(&g)
    });
    if up_to_iso {
        let canon: BTreeSet<Vec<u8>> = exec
            .map(&solutions, |s| flat_g(&canonicalize_iso(s)))
            .into_iter()
            .collect();
        solutions.retain(|s| canon.contains(&flat_g(s)));
    }
    solutions.sort_by_key(flat_g);
    Ok(SolutionCensus {
        n,
        solutions,
        up_to_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_solutions(1, false).unwrap().len(), 1);
        assert_eq!(enumerate_solutions(2, false).unwrap().len(), 2);
        let iso = enumerate_solutions(2, true).unwrap();
        assert_eq!(iso.len(), 2);
        assert!(iso.solutions[0].is_trivial());
        let swap = &iso.solutions[1];
        assert_eq!(swap.g_table(), &[vec![1, 0], vec![1, 0]]);
        assert_eq!(swap.f_table(), &[vec![1, 0], vec![1, 0]]);
    }

    #[test]
    fn too_large() {
        assert_eq!(enumerate_solutions(5, false), Err(Error::NTooLarge(5)));
    }

    #[test]
    fn canonical_form_is_idempotent() {
        for sol in [catalog::sol_a(), catalog::sol_b(), catalog::trivial(3)] {
            let c = canonicalize_iso(&sol);
            assert!(c.validate().is_valid());
            assert_eq!(canonicalize_iso(&c), c);
        }
        assert_eq!(canonicalize_iso(&catalog::trivial(3)), catalog::trivial(3));
    }

    #[test]
    fn relabeling_preserves_validity() {
        let sol = catalog::sol_a();
        for sigma in permutations(4) {
            let r = relabel(&sol, &sigma);
            assert!(r.validate().is_valid());
            assert_eq!(canonicalize_iso(&r), canonicalize_iso(&sol));
        }
    }

    #[test]
    fn strategies_agree() {
        let a = enumerate_solutions_with(3, false, Execution::Sequential).unwrap();
        let b = enumerate_solutions_with(3, false, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
