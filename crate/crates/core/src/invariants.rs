//! Order, center, exponent, nilpotency class and (for abelian groups)
//! invariant factors of a finite group table.

use std::collections::{BTreeMap, HashSet, VecDeque};

use num_integer::Integer;
use serde::Serialize;

use crate::group::FiniteGroupTable;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupInvariants {
    pub order: usize,
    pub center_order: usize,
    /// Cycle strings of a minimal generating set of the center, preferring
    /// elements of small support.
    pub center_generators: Vec<String>,
    pub exponent: u64,
    /// `None` when the lower central series stalls above the trivial group;
    /// serialized as `"not nilpotent"`.
    #[serde(serialize_with = "serialize_class")]
    pub nilpotency_class: Option<usize>,
    pub is_abelian: bool,
    /// Ascending invariant factors `d1 | d2 | …` when abelian.
    pub invariant_factors: Option<Vec<u64>>,
}

pub fn serialize_class<S: serde::Serializer>(
    class: &Option<usize>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match class {
        Some(c) => s.serialize_u64(*c as u64),
        None => s.serialize_str("not nilpotent"),
    }
}

/// Subgroup generated by `gens` (element indices).
pub fn subgroup_closure(w: &FiniteGroupTable, gens: &[usize]) -> HashSet<usize> {
    let id = w.identity();
    let mut seen = HashSet::from([id]);
    let mut queue = VecDeque::from([id]);
    while let Some(i) = queue.pop_front() {
        for &g in gens {
            let j = w.mul(i, g);
            if seen.insert(j) {
                queue.push_back(j);
            }
        }
    }
    seen
}

pub fn center(w: &FiniteGroupTable) -> Vec<usize> {
    let gens: Vec<usize> = (0..w.generators().len())
        .map(|g| w.generator_index(g))
        .collect();
    (0..w.order())
        .filter(|&i| gens.iter().all(|&g| w.mul(i, g) == w.mul(g, i)))
        .collect()
}

pub fn is_abelian(w: &FiniteGroupTable) -> bool {
    center(w).len() == w.order()
}

pub fn exponent(w: &FiniteGroupTable) -> u64 {
    w.elements().iter().fold(1u64, |acc, e| acc.lcm(&e.order()))
}

fn commutator(w: &FiniteGroupTable, a: usize, b: usize) -> usize {
    let ai = w.inverse(a);
    let bi = w.inverse(b);
    w.mul(w.mul(ai, bi), w.mul(a, b))
}

/// Lower central series `γ1 = G, γ_{k+1} = [γ_k, G]`, as subgroup orders,
/// stopping at the trivial group or when it stalls.
pub fn lower_central_series(w: &FiniteGroupTable) -> Vec<usize> {
    let all: Vec<usize> = (0..w.order()).collect();
    let mut current: HashSet<usize> = all.iter().copied().collect();
    let mut orders = vec![current.len()];
    for _ in 0..w.order() {
        if current.len() == 1 {
            break;
        }
        let comms: HashSet<usize> = current
            .iter()
            .flat_map(|&a| all.iter().map(move |&g| (a, g)))
            .map(|(a, g)| commutator(w, a, g))
            .collect();
        let comms: Vec<usize> = comms.into_iter().collect();
        let next = subgroup_closure(w, &comms);
        let stalled = next.len() == current.len();
        orders.push(next.len());
        current = next;
        if stalled {
            break;
        }
    }
    orders
}

pub fn nilpotency_class(w: &FiniteGroupTable) -> Option<usize> {
    let series = lower_central_series(w);
    (*series.last().unwrap() == 1).then(|| series.len() - 1)
}

fn element_power(w: &FiniteGroupTable, i: usize, k: u64) -> usize {
    let mut acc = w.identity();
    for _ in 0..k {
        acc = w.mul(acc, i);
    }
    acc
}

fn prime_factors(mut m: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= m {
        while m.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            m /= p;
        }
        p += 1;
    }
    if m > 1 {
        *out.entry(m).or_insert(0) += 1;
    }
    out
}

/// Invariant factors of an abelian group, ascending. For each prime `p`,
/// the number of parts of size at least `k` in the `p`-primary partition is
/// `log_p |Ω_k| - log_p |Ω_{k-1}|` with `Ω_k = {g : g^{p^k} = 1}`.
pub fn abelian_invariant_factors(w: &FiniteGroupTable) -> Option<Vec<u64>> {
    if !is_abelian(w) {
        return None;
    }
    let order = w.order() as u64;
    if order == 1 {
        return Some(Vec::new());
    }
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for (p, e) in prime_factors(order) {
        let mut log_counts = vec![0u32];
        let mut pk = 1u64;
        while *log_counts.last().unwrap() < e {
            pk *= p;
            let count = (0..w.order())
                .filter(|&i| element_power(w, i, pk) == w.identity())
                .count() as u64;
            let mut lg = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                lg += 1;
            }
            log_counts.push(lg);
        }
        // at_least[k-1] = number of parts >= k
        let at_least: Vec<u32> = log_counts.windows(2).map(|v| v[1] - v[0]).collect();
        let parts = at_least[0] as usize;
        let mut partition = vec![0u32; parts];
        for (k, &cnt) in at_least.iter().enumerate() {
            for part in partition.iter_mut().take(cnt as usize) {
                *part = k as u32 + 1;
            }
        }
        // partition is descending
        primary.push((p, partition));
    }
    let len = primary
        .iter()
        .map(|(_, part)| part.len())
        .max()
        .unwrap_or(0);
    let mut factors: Vec<u64> = (0..len)
        .map(|t| {
            primary
                .iter()
                .map(|(p, part)| p.pow(part.get(t).copied().unwrap_or(0)))
                .product()
        })
        .collect();
    factors.sort_unstable();
    Some(factors)
}

fn center_generators(w: &FiniteGroupTable, center: &[usize]) -> Vec<String> {
    let mut candidates: Vec<usize> = center
        .iter()
        .copied()
        .filter(|&i| i != w.identity())
        .collect();
    candidates.sort_by_key(|&i| (w.element(i).support_size(), w.element(i).to_string()));
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = HashSet::from([w.identity()]);
    for c in candidates {
        if span.contains(&c) {
            continue;
        }
        chosen.push(c);
        span = subgroup_closure(w, &chosen);
    }
    chosen.iter().map(|&i| w.element(i).to_string()).collect()
}

pub fn group_invariants(w: &FiniteGroupTable) -> GroupInvariants {
    let center = center(w);
    let is_abelian = center.len() == w.order();
    GroupInvariants {
        order: w.order(),
        center_order: center.len(),
        center_generators: center_generators(w, &center),
        exponent: exponent(w),
        nilpotency_class: nilpotency_class(w),
        is_abelian,
        invariant_factors: abelian_invariant_factors(w),
    }
}

/// `"2^4 * 3"` style factorization of the group order.
pub fn order_factorization(order: usize) -> String {
    let parts: Vec<String> = prime_factors(order as u64)
        .into_iter()
        .map(|(p, e)| {
            if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" * ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::signed::SignedPermutation;

    #[test]
    fn sol_b_center() {
        let w = FiniteGroupTable::of_solution(&catalog::sol_b()).unwrap();
        let inv = group_invariants(&w);
        assert_eq!(inv.order, 48);
        assert_eq!(inv.center_order, 4);
        assert_eq!(
            inv.center_generators,
            vec!["(1,-1)".to_string(), "(2,-2)(3,-3)(4,-4)".to_string()]
        );
        assert!(!inv.is_abelian);
    }

    #[test]
    fn sol_a_invariants() {
        let w = FiniteGroupTable::of_solution(&catalog::sol_a()).unwrap();
        let inv = group_invariants(&w);
        assert_eq!(inv.exponent, 8);
        assert_eq!(inv.nilpotency_class, Some(3));
        assert_eq!(inv.invariant_factors, None);
    }

    #[test]
    fn cyclic_and_symmetric_groups() {
        // Z/8 as a signed 4-cycle; S3 on three atoms is not nilpotent
        let c = SignedPermutation::from_cycle_str(4, "(1,2,3,4,-1,-2,-3,-4)").unwrap();
        let w = FiniteGroupTable::generate(4, vec![c]).unwrap();
        assert_eq!(abelian_invariant_factors(&w), Some(vec![8]));
        assert_eq!(nilpotency_class(&w), Some(1));

        let s = SignedPermutation::from_cycle_str(3, "(1,2)(-1,-2)").unwrap();
        let t = SignedPermutation::from_cycle_str(3, "(1,2,3)(-1,-2,-3)").unwrap();
        let w = FiniteGroupTable::generate(3, vec![s, t]).unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(nilpotency_class(&w), None);
        assert_eq!(exponent(&w), 6);
    }

    #[test]
    fn mixed_primes() {
        // Z/2 x Z/6 ≅ invariant factors (2, 6)
        let a = SignedPermutation::from_cycle_str(5, "(1,-1)").unwrap();
        let b = SignedPermutation::from_cycle_str(5, "(2,3,4,-2,-3,-4)").unwrap();
        let w = FiniteGroupTable::generate(5, vec![a, b]).unwrap();
        assert_eq!(w.order(), 12);
        assert_eq!(abelian_invariant_factors(&w), Some(vec![2, 6]));
    }

    #[test]
    fn almost_trivial_is_abelian_but_not_elementary() {
        let sol = catalog::almost_trivial6();
        assert!(!sol.is_trivial());
        let w = FiniteGroupTable::of_solution(&sol).unwrap();
        let inv = group_invariants(&w);
        assert_eq!(inv.order, 64);
        assert_eq!(inv.exponent, 4);
        assert_eq!(inv.nilpotency_class, Some(1));
        assert_eq!(inv.invariant_factors, Some(vec![2, 2, 2, 2, 4]));
    }

    #[test]
    fn trivial_solutions_give_elementary_abelian() {
        for n in 1..=4 {
            let w = FiniteGroupTable::of_solution(&catalog::trivial(n)).unwrap();
            assert_eq!(abelian_invariant_factors(&w), Some(vec![2; n]));
            assert_eq!(exponent(&w), 2);
        }
    }

    #[test]
    fn factorization_strings() {
        assert_eq!(order_factorization(48), "2^4 * 3");
        assert_eq!(order_factorization(16), "2^4");
        assert_eq!(order_factorization(1), "1");
    }
}
