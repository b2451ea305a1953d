//! Machine-readable (JSON) and human-readable reports. Every report type has
//! a fixed key set; checks that do not apply are `null`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::analysis::SolutionAnalysis;
use crate::error::Result;
use crate::invariants::{group_invariants, order_factorization, serialize_class, GroupInvariants};
use crate::monoid::ItypeMonoid;
use crate::solution::{ValidationReport, YbeSolution};

pub const DEFAULT_BALL_RADIUS: usize = 4;
pub const DEFAULT_FROZEN_DEPTH: u32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub relations: Vec<String>,
    pub frozen_pairs: Vec<String>,
    pub psi_generators: Vec<String>,
    pub order: usize,
    /// Prime factorization of `order`, e.g. `"2^4 * 3"`.
    pub order_factorization: String,
    pub center_order: usize,
    pub center_generators: Vec<String>,
    pub exponent: u64,
    #[serde(serialize_with = "serialize_class")]
    pub nilpotency_class: Option<usize>,
    pub is_abelian: bool,
    pub invariant_factors: Option<Vec<u64>>,
    pub property_c: bool,
    pub is_section: bool,
    pub generating_group_ok: bool,
    pub lattice_ok: bool,
    pub w0_ok: Option<bool>,
    pub exchange_ok: Option<bool>,
    pub kernel_ball_ok: Option<bool>,
}

/// Runs the full analysis. Fails with `EquivalenceViolated` if the section
/// and property (C) tests disagree.
pub fn analyze(sol: &YbeSolution, ball_radius: usize) -> Result<AnalysisReport> {
    let a = SolutionAnalysis::new(sol)?;
    let inv = group_invariants(&a.group);
    let (is_section, property_c) = a.section_equivalence_check()?;
    let (w0_ok, exchange_ok, kernel_ball_ok) = if property_c {
        (
            Some(a.w0_properties_check()?),
            Some(a.exchange_check()?),
            Some(a.kernel_ball_check(ball_radius)?),
        )
    } else {
        (None, None, None)
    };
    Ok(AnalysisReport {
        n: sol.n(),
        relations: sol
            .presentation()
            .relations
            .iter()
            .map(|r| r.to_string())
            .collect(),
        frozen_pairs: a
            .monoid
            .frozen_pairs()
            .iter()
            .map(|p| p.to_string())
            .collect(),
        psi_generators: a.psi_generators().iter().map(|p| p.to_string()).collect(),
        order: inv.order,
        order_factorization: order_factorization(inv.order),
        center_order: inv.center_order,
        center_generators: inv.center_generators,
        exponent: inv.exponent,
        nilpotency_class: inv.nilpotency_class,
        is_abelian: inv.is_abelian,
        invariant_factors: inv.invariant_factors,
        property_c,
        is_section,
        generating_group_ok: a.generating_group_verification(),
        lattice_ok: a.lattice_check(),
        w0_ok,
        exchange_ok,
        kernel_ball_ok,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleEntry {
    pub word: String,
    pub length: usize,
    pub atoms_left: Vec<usize>,
    pub atoms_right: Vec<usize>,
    pub representatives: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimplesReport {
    pub n: usize,
    pub count: usize,
    /// `length_counts[k]` simples of length `k`.
    pub length_counts: Vec<usize>,
    pub simples: Vec<SimpleEntry>,
}

pub fn simples_report(sol: &YbeSolution) -> Result<SimplesReport> {
    let m = ItypeMonoid::new(sol)?;
    let simples = m.simples()?;
    let mut length_counts = vec![0; sol.n() + 1];
    let mut entries = Vec::with_capacity(simples.len());
    for s in &simples {
        length_counts[s.len()] += 1;
        entries.push(SimpleEntry {
            word: s.canonical_word.to_string(),
            length: s.len(),
            atoms_left: s.atoms_left.iter().map(|x| x + 1).collect(),
            atoms_right: s.atoms_right.iter().map(|x| x + 1).collect(),
            representatives: m.count_representatives(s)?,
        });
    }
    Ok(SimplesReport {
        n: sol.n(),
        count: entries.len(),
        length_counts,
        simples: entries,
    })
}

pub fn group_report(sol: &YbeSolution) -> Result<GroupInvariants> {
    let w = crate::group::FiniteGroupTable::of_solution(sol)?;
    Ok(group_invariants(&w))
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize") + "\n"
}

fn opt_bool(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "true",
        Some(false) => "false",
        None => "n/a",
    }
}

fn class_text(c: Option<usize>) -> String {
    c.map_or_else(|| "not nilpotent".into(), |c| c.to_string())
}

pub fn validation_text(r: &ValidationReport) -> String {
    let mut out = format!(
        "nondegenerate: {}\ninvolutive: {}\nbraided: {}\n",
        r.nondegenerate, r.involutive, r.braided
    );
    for f in r.failures() {
        let _ = writeln!(out, "  {f}");
    }
    out
}

pub fn analysis_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", r.n);
    let _ = writeln!(out, "relations: {}", r.relations.join(", "));
    let _ = writeln!(out, "frozen pairs: {}", r.frozen_pairs.join(" "));
    let _ = writeln!(out, "psi generators:");
    for (i, g) in r.psi_generators.iter().enumerate() {
        let _ = writeln!(out, "  psi_{} = {g}", i + 1);
    }
    let _ = writeln!(out, "order: {} = {}", r.order, r.order_factorization);
    let _ = writeln!(
        out,
        "center: order {}, generated by {}",
        r.center_order,
        if r.center_generators.is_empty() {
            "()".to_string()
        } else {
            r.center_generators.join(", ")
        }
    );
    let _ = writeln!(out, "exponent: {}", r.exponent);
    let _ = writeln!(out, "nilpotency class: {}", class_text(r.nilpotency_class));
    if let Some(f) = &r.invariant_factors {
        let _ = writeln!(out, "abelian, invariant factors: {f:?}");
    }
    let _ = writeln!(out, "property (C): {}", r.property_c);
    let _ = writeln!(out, "section: {}", r.is_section);
    let _ = writeln!(out, "generating group: {}", r.generating_group_ok);
    let _ = writeln!(out, "lattice: {}", r.lattice_ok);
    let _ = writeln!(out, "w0: {}", opt_bool(r.w0_ok));
    let _ = writeln!(out, "exchange: {}", opt_bool(r.exchange_ok));
    let _ = writeln!(out, "kernel ball: {}", opt_bool(r.kernel_ball_ok));
    out
}

pub fn simples_text(r: &SimplesReport) -> String {
    let mut out = format!("{} simples, by length {:?}\n", r.count, r.length_counts);
    for s in &r.simples {
        let word = if s.word.is_empty() { "1" } else { &s.word };
        let _ = writeln!(
            out,
            "  {word:<12} left {:?} right {:?} reps {}",
            s.atoms_left, s.atoms_right, s.representatives
        );
    }
    out
}

pub fn group_text(g: &GroupInvariants) -> String {
    let mut out = format!("order: {} = {}\n", g.order, order_factorization(g.order));
    let _ = writeln!(out, "center order: {}", g.center_order);
    let _ = writeln!(out, "center generators: {}", g.center_generators.join(", "));
    let _ = writeln!(out, "exponent: {}", g.exponent);
    let _ = writeln!(out, "nilpotency class: {}", class_text(g.nilpotency_class));
    let _ = writeln!(out, "abelian: {}", g.is_abelian);
    if let Some(f) = &g.invariant_factors {
        let _ = writeln!(out, "invariant factors: {f:?}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const ANALYSIS_KEYS: [&str; 19] = [
        "n",
        "relations",
        "frozen_pairs",
        "psi_generators",
        "order",
        "order_factorization",
        "center_order",
        "center_generators",
        "exponent",
        "nilpotency_class",
        "is_abelian",
        "invariant_factors",
        "property_c",
        "is_section",
        "generating_group_ok",
        "lattice_ok",
        "w0_ok",
        "exchange_ok",
        "kernel_ball_ok",
    ];

    fn keys(json: &str) -> Vec<String> {
        let v: serde_json::Value = serde_json::from_str(json).unwrap();
        v.as_object().unwrap().keys().cloned().collect()
    }

    #[test]
    fn sol_b_report() {
        let r = analyze(&catalog::sol_b(), 2).unwrap();
        assert_eq!(r.order, 48);
        assert_eq!(r.order_factorization, "2^4 * 3");
        assert_eq!(r.center_order, 4);
        assert!(!r.property_c && !r.is_section);
        assert!(r.generating_group_ok && r.lattice_ok);
        assert_eq!(r.w0_ok, None);
        let json = to_json(&r);
        assert!(json.contains("\"kernel_ball_ok\": null"));
    }

    #[test]
    fn key_set_is_fixed() {
        for sol in [catalog::sol_a(), catalog::sol_b()] {
            let mut got = keys(&to_json(&analyze(&sol, 2).unwrap()));
            got.sort();
            let mut want: Vec<String> = ANALYSIS_KEYS.iter().map(|s| s.to_string()).collect();
            want.sort();
            assert_eq!(got, want);
        }
    }

    #[test]
    fn sol_a_simples() {
        let r = simples_report(&catalog::sol_a()).unwrap();
        assert_eq!(r.count, 16);
        assert_eq!(r.length_counts, vec![1, 4, 6, 4, 1]);
        let text = simples_text(&r);
        assert!(text.starts_with("16 simples"));
    }

    #[test]
    fn nilpotency_serialization() {
        let g = group_report(&catalog::sol_a()).unwrap();
        assert!(to_json(&g).contains("\"nilpotency_class\": 3"));
        let mut g2 = g.clone();
        g2.nilpotency_class = None;
        assert!(to_json(&g2).contains("\"nilpotency_class\": \"not nilpotent\""));
    }
}
