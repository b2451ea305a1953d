//! The invariant suite run by `itype check`: every structural property the
//! library relies on, evaluated on one solution, reported as a list of
//! violations (empty on success).

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::analysis::{all_words, SolutionAnalysis};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::frozen::FrozenCalculus;
use crate::invariants::{abelian_invariant_factors, is_abelian, nilpotency_class};
use crate::monoid::Word;
use crate::perm::Permutation;
use crate::signed::{phi_of_atom, well_definedness_check};
use crate::solution::YbeSolution;

pub const MAX_BALL_RADIUS: usize = 6;
pub const MAX_FROZEN_DEPTH: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckConfig {
    /// Radius of the word ball for the kernel check.
    pub ball_radius: usize,
    /// Total degree bound for frozen-vector freeness.
    pub frozen_depth: u32,
    /// Longest words for normal-form and frozen-decomposition recomposition.
    pub word_length: usize,
    /// Random word pairs for sub-multiplicativity.
    pub random_pairs: usize,
    pub seed: u64,
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig {
            ball_radius: 4,
            frozen_depth: 3,
            word_length: 5,
            random_pairs: 1000,
            seed: 0x5eed,
        }
    }
}

impl CheckConfig {
    pub fn validated(self) -> Result<Self> {
        if self.ball_radius > MAX_BALL_RADIUS {
            return Err(Error::Parse(format!(
                "ball radius {} exceeds {MAX_BALL_RADIUS}",
                self.ball_radius
            )));
        }
        if self.frozen_depth > MAX_FROZEN_DEPTH {
            return Err(Error::Parse(format!(
                "frozen depth {} exceeds {MAX_FROZEN_DEPTH}",
                self.frozen_depth
            )));
        }
        Ok(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

struct Sink(Vec<Violation>);

impl Sink {
    fn expect(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.0.push(Violation {
                check,
                detail: detail(),
            });
        }
    }

    fn expect_ok(&mut self, check: &'static str, r: Result<bool>) {
        match r {
            Ok(true) => {}
            Ok(false) => self.0.push(Violation {
                check,
                detail: "failed".into(),
            }),
            Err(e) => self.0.push(Violation {
                check,
                detail: e.to_string(),
            }),
        }
    }
}

fn random_word(rng: &mut StdRng, n: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word((0..len).map(|_| rng.gen_range(0..n) as u8).collect())
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

/// Runs every check on `sol`. Errors are reported as violations, except for
/// an invalid solution, which is reported alone.
pub fn check_solution(sol: &YbeSolution, cfg: &CheckConfig) -> Vec<Violation> {
    let mut sink = Sink(Vec::new());
    let report = sol.validate();
    if !report.is_valid() {
        sink.expect("axioms", false, || report.failures().join("; "));
        return sink.0;
    }
    if let Err(e) = check_all(sol, cfg, &mut sink) {
        sink.0.push(Violation {
            check: "internal",
            detail: e.to_string(),
        });
    }
    sink.0
}

fn check_all(sol: &YbeSolution, cfg: &CheckConfig, sink: &mut Sink) -> Result<()> {
    check_solution_core(sol, sink)?;
    let a = SolutionAnalysis::new(sol)?;
    check_monoid(&a, cfg, sink)?;
    check_signed(&a, cfg, sink)?;
    check_group(&a, sink)?;
    if sol.property_c()? {
        check_property_c(&a, cfg, sink)?;
    }
    Ok(())
}

fn check_solution_core(sol: &YbeSolution, sink: &mut Sink) -> Result<()> {
    let n = sol.n();
    sink.expect("r-matrix", sol.r_matrix_qybe_check(), || {
        "QYBE check disagrees with braided".into()
    });
    let frozen = sol.frozen_pairs()?;
    sink.expect("frozen count", frozen.len() == n, || {
        format!("{} frozen pairs", frozen.len())
    });
    for p in &frozen {
        sink.expect("frozen fixed", sol.s(p.x, p.y) == (p.x, p.y), || {
            p.to_string()
        });
    }
    let g: Vec<Permutation> = (0..n).map(|x| sol.g_perm(x).expect("valid")).collect();
    let f: Vec<Permutation> = (0..n).map(|y| sol.f_perm(y).expect("valid")).collect();
    let rebuilt = YbeSolution::from_gf_tables(n, &g, &f)?;
    let table: Vec<Vec<(u8, u8)>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (a, b) = sol.s(x, y);
                    (a as u8, b as u8)
                })
                .collect()
        })
        .collect();
    let from_s = YbeSolution::from_s_table(n, &table)?;
    sink.expect(
        "table round trip",
        rebuilt == *sol && from_s == *sol,
        || "g/f tables do not survive a round trip".into(),
    );
    let pres = sol.presentation();
    sink.expect("presentation", pres.is_itype(), || {
        format!("{} relations", pres.relations.len())
    });
    let mut covered: BTreeSet<[u8; 2]> = BTreeSet::new();
    for r in &pres.relations {
        covered.insert(r.left);
        covered.insert(r.right);
    }
    let absent: BTreeSet<[u8; 2]> = (0..n as u8)
        .flat_map(|x| (0..n as u8).map(move |y| [x, y]))
        .filter(|w| !covered.contains(w))
        .collect();
    let frozen_words: BTreeSet<[u8; 2]> = frozen.iter().map(|p| [p.x as u8, p.y as u8]).collect();
    sink.expect("presentation", absent == frozen_words, || {
        "words outside the relations are not the frozen words".into()
    });
    Ok(())
}

fn check_monoid(a: &SolutionAnalysis, cfg: &CheckConfig, sink: &mut Sink) -> Result<()> {
    let n = a.n();
    let m = &a.monoid;
    let mut by_length = vec![0usize; n + 1];
    let simple_words: BTreeSet<Word> = a.simples.iter().map(|s| s.canonical_word.clone()).collect();
    for (mask, s) in a.simples.iter().enumerate() {
        let subset: BTreeSet<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        sink.expect("simple atoms", s.atoms_left == subset, || {
            format!(
                "simple {} has left atoms {:?}",
                s.canonical_word, s.atoms_left
            )
        });
        by_length[s.len()] += 1;
        let reps = m.count_representatives(s)?;
        sink.expect("representatives", reps == factorial(s.len()), || {
            format!("simple {} has {reps} representatives", s.canonical_word)
        });
    }
    sink.expect(
        "simples per length",
        (0..=n).all(|k| by_length[k] == binomial(n, k)),
        || format!("{by_length:?}"),
    );
    for w in all_words(n, n + 1) {
        let class = m.equivalent_words(&w)?;
        sink.expect(
            "homogeneity",
            class.iter().all(|u| u.len() == w.len()),
            || w.to_string(),
        );
        let canonical = class.iter().next().cloned().unwrap_or_default();
        let simple = m.is_simple(&w)?;
        sink.expect(
            "simple criterion",
            simple == simple_words.contains(&canonical),
            || w.to_string(),
        );
    }
    for w in all_words(n, cfg.word_length) {
        let factors = m.greedy_normal_form(&w)?;
        let recomposed = factors
            .iter()
            .fold(Word::empty(), |acc, s| acc.concat(&s.canonical_word));
        sink.expect("normal form", m.words_equal(&recomposed, &w)?, || {
            w.to_string()
        });
    }
    Ok(())
}

fn check_signed(a: &SolutionAnalysis, cfg: &CheckConfig, sink: &mut Sink) -> Result<()> {
    let n = a.n();
    let m = &a.monoid;
    let w = &a.group;
    sink.expect("well-definedness", well_definedness_check(a.sol), || {
        "a relation is not respected".into()
    });
    for x in 0..n {
        for y in 0..n {
            let px = phi_of_atom(a.sol, x).apply(y);
            let py = phi_of_atom(a.sol, y).apply(x);
            let lhs = Word(vec![px as u8, x as u8]);
            let rhs = Word(vec![py as u8, y as u8]);
            sink.expect("phi relation", m.words_equal(&lhs, &rhs)?, || {
                format!("x{} x{}", x + 1, y + 1)
            });
        }
    }
    sink.expect("psi injective", a.psi_injective_on_simples(), || {
        "two simples share an image".into()
    });
    for (s, &i) in a.simples.iter().zip(&a.psi_simples) {
        let psi = w.element(i);
        sink.expect("neg count", psi.neg_count() == s.len(), || {
            format!("simple {}", s.canonical_word)
        });
        let negated: BTreeSet<usize> = (0..n).filter(|&k| psi.signs()[k] < 0).collect();
        sink.expect("simple sign formula", negated == s.atoms_right, || {
            format!("simple {}", s.canonical_word)
        });
    }
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_pairs {
        let u = random_word(&mut rng, n, 8);
        let v = random_word(&mut rng, n, 8);
        let (pu, pv) = (a.psi(&u), a.psi(&v));
        let puv = a.psi(&u.concat(&v));
        sink.expect(
            "sub-multiplicativity",
            puv.neg_count() <= pu.neg_count() + pv.neg_count(),
            || format!("{u} | {v}"),
        );
    }
    let mut words = all_words(n, 3);
    words.extend((0..50).map(|_| random_word(&mut rng, n, 6)));
    for u in &words {
        let psi = a.psi(u);
        let class = m.equivalent_words(u)?;
        sink.expect(
            "psi on classes",
            class.iter().all(|v| a.psi(v) == psi),
            || u.to_string(),
        );
        let len = w.length(w.index_of(&psi).expect("ψ lies in W"));
        sink.expect(
            "length bounds",
            u.len() >= len && len >= psi.neg_count(),
            || u.to_string(),
        );
        for x in 0..n {
            if psi.signs()[x] < 0 {
                sink.expect("sign drop", m.right_divides(x, u)?, || {
                    format!("x{} and {u}", x + 1)
                });
            }
        }
    }
    Ok(())
}

fn check_group(a: &SolutionAnalysis, sink: &mut Sink) -> Result<()> {
    let n = a.n();
    let w = &a.group;
    sink.expect(
        "generating group",
        a.generating_group_verification(),
        || "failed".into(),
    );
    sink.expect("divisor image", a.divisor_image_check(), || "failed".into());
    sink.expect("lattice", a.lattice_check(), || "failed".into());
    match a.section_equivalence_check() {
        Ok(_) => {}
        Err(e) => sink.expect("section equivalence", false, || e.to_string()),
    }
    let property_c = a.sol.property_c()?;
    if property_c {
        sink.expect("order", w.order() == 1 << n, || {
            format!("|W| = {}", w.order())
        });
    } else {
        sink.expect(
            "order",
            w.order() > 1 << n && a.psi_simple_set().len() == 1 << n,
            || format!("|W| = {}", w.order()),
        );
    }
    // only this direction holds: non-trivial solutions with abelian W exist
    if a.sol.is_trivial() {
        sink.expect(
            "trivial quotient",
            is_abelian(w) && abelian_invariant_factors(w) == Some(vec![2; n]),
            || "W is not elementary abelian of rank n".into(),
        );
    }
    if property_c {
        let class = nilpotency_class(w);
        sink.expect(
            "nilpotency bound",
            class.is_some_and(|c| c <= (n - 1).max(1)),
            || format!("class {class:?}"),
        );
    }
    Ok(())
}

fn check_property_c(a: &SolutionAnalysis, cfg: &CheckConfig, sink: &mut Sink) -> Result<()> {
    let n = a.n();
    let m = &a.monoid;
    sink.expect_ok("w0", a.w0_properties_check());
    sink.expect_ok("exchange", a.exchange_check());
    sink.expect_ok("kernel ball", a.kernel_ball_check(cfg.ball_radius));
    sink.expect_ok(
        "frozen freeness",
        a.frozen_kernel_rank_check(cfg.frozen_depth),
    );
    match a.presented_quotient_order() {
        Ok(k) => sink.expect("presented order", k == a.group.order(), || {
            format!("coset enumeration gives {k}")
        }),
        Err(e) => sink.expect("presented order", false, || e.to_string()),
    }
    let fc = FrozenCalculus::new(m)?;
    sink.expect_ok("frozen commute", fc.frozen_commute_check());
    sink.expect("frozen conjugation", fc.conjugation_is_bijective(), || {
        "not bijective".into()
    });
    for i in 0..n {
        sink.expect("frozen kernel", a.psi(&fc.theta(i)).is_identity(), || {
            format!("theta_{}", i + 1)
        });
    }
    for w in all_words(n, cfg.word_length) {
        let (v, s) = fc.frozen_decomposition(&w)?;
        let recomposed = fc.vector_word(&v).concat(&s.canonical_word);
        sink.expect(
            "frozen decomposition",
            m.words_equal(&recomposed, &w)?,
            || w.to_string(),
        );
    }
    Ok(())
}

/// Checks many solutions; results are in input order.
pub fn check_many(sols: &[YbeSolution], cfg: &CheckConfig, exec: Execution) -> Vec<Vec<Violation>> {
    exec.map(sols, |s| check_solution(s, cfg))
}
