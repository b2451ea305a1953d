use std::sync::OnceLock;

use itype::enumerate::{canonicalize_iso, enumerate_solutions, permutations, relabel};
use itype::io::{parse_solution, write_solution};
use itype::signed::psi_generators;
use itype::signed::psi_of_word;
use itype::{catalog, ItypeMonoid, SignedPermutation, Word, YbeSolution};
use proptest::prelude::*;

fn census() -> &'static [YbeSolution] {
    static CENSUS: OnceLock<Vec<YbeSolution>> = OnceLock::new();
    CENSUS.get_or_init(|| {
        let mut all = Vec::new();
        for n in 1..=4 {
            all.extend(enumerate_solutions(n, false).unwrap().solutions);
        }
        all.push(catalog::sol_a());
        all.push(catalog::sol_b());
        all
    })
}

fn solution() -> impl Strategy<Value = YbeSolution> {
    (0..census().len()).prop_map(|i| census()[i].clone())
}

fn solution_and_word(max_len: usize) -> impl Strategy<Value = (YbeSolution, Word)> {
    solution().prop_flat_map(move |sol| {
        let n = sol.n() as u8;
        (
            Just(sol),
            prop::collection::vec(0..n, 0..=max_len).prop_map(Word),
        )
    })
}

fn solution_and_two_words(max_len: usize) -> impl Strategy<Value = (YbeSolution, Word, Word)> {
    solution().prop_flat_map(move |sol| {
        let n = sol.n() as u8;
        let word = move || prop::collection::vec(0..n, 0..=max_len).prop_map(Word);
        (Just(sol), word(), word())
    })
}

fn signed_perm(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((0..n as u8).collect::<Vec<_>>()).prop_shuffle(),
        prop::collection::vec(prop::bool::ANY, n),
    )
        .prop_map(|(images, neg)| {
            let signs = neg.into_iter().map(|b| if b { -1 } else { 1 }).collect();
            SignedPermutation::new(images, signs).unwrap()
        })
}

fn s_table(n: usize) -> impl Strategy<Value = YbeSolution> {
    prop::collection::vec((0..n as u8, 0..n as u8), n * n).prop_map(move |cells| {
        let table: Vec<Vec<(u8, u8)>> = cells.chunks(n).map(|c| c.to_vec()).collect();
        YbeSolution::from_s_table(n, &table).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn canonical_form_ignores_relabeling(sol in solution(), k in 0usize..24) {
        let perms = permutations(sol.n());
        let sigma = &perms[k % perms.len()];
        let moved = relabel(&sol, sigma);
        prop_assert!(moved.validate().is_valid());
        prop_assert_eq!(canonicalize_iso(&moved), canonicalize_iso(&sol));
    }

    #[test]
    fn psi_is_constant_on_classes((sol, w) in solution_and_word(6)) {
        let m = ItypeMonoid::new(&sol).unwrap();
        let gens = psi_generators(&sol);
        let psi = psi_of_word(&gens, &w);
        for u in m.equivalent_words(&w).unwrap() {
            prop_assert_eq!(psi_of_word(&gens, &u), psi.clone());
        }
    }

    #[test]
    fn neg_count_is_submultiplicative((sol, u, v) in solution_and_two_words(10)) {
        let gens = psi_generators(&sol);
        let (pu, pv) = (psi_of_word(&gens, &u), psi_of_word(&gens, &v));
        let puv = psi_of_word(&gens, &u.concat(&v));
        prop_assert_eq!(puv.clone(), pu.compose(&pv));
        prop_assert!(puv.neg_count() <= pu.neg_count() + pv.neg_count());
    }

    #[test]
    fn normal_form_recomposes((sol, w) in solution_and_word(6)) {
        let m = ItypeMonoid::new(&sol).unwrap();
        let nf = m.greedy_normal_form(&w).unwrap();
        let back = nf.iter().fold(Word::empty(), |acc, s| acc.concat(&s.canonical_word));
        prop_assert!(m.words_equal(&back, &w).unwrap());
        for s in &nf {
            prop_assert!(m.is_simple(&s.canonical_word).unwrap());
        }
    }

    #[test]
    fn classes_are_homogeneous((sol, w) in solution_and_word(6)) {
        let m = ItypeMonoid::new(&sol).unwrap();
        for u in m.equivalent_words(&w).unwrap() {
            prop_assert_eq!(u.len(), w.len());
        }
    }

    #[test]
    fn solution_files_round_trip(sol in solution()) {
        let text = write_solution(&sol);
        let back = parse_solution(&text).unwrap();
        prop_assert_eq!(write_solution(&back), text);
        prop_assert_eq!(back, sol);
    }

    #[test]
    fn signed_permutations_form_a_group(
        a in signed_perm(5), b in signed_perm(5), c in signed_perm(5),
    ) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
        prop_assert!(a.compose(&a.inverse()).is_identity());
        prop_assert_eq!(a.compose(&SignedPermutation::identity(5)), a.clone());
        let text = a.to_string();
        prop_assert_eq!(SignedPermutation::from_cycle_str(5, &text).unwrap(), a);
    }

    #[test]
    fn r_matrix_agrees_with_braiding(sol in s_table(2).boxed().prop_union(s_table(3).boxed())) {
        prop_assert_eq!(sol.r_matrix_qybe_check(), sol.validate().braided);
    }
}

#[test]
fn r_matrix_agrees_on_all_two_point_maps() {
    for code in 0..256u32 {
        let table: Vec<Vec<(u8, u8)>> = (0..2)
            .map(|x| {
                (0..2)
                    .map(|y| {
                        let c = (code >> (4 * x + 2 * y)) & 3;
                        ((c & 1) as u8, (c >> 1) as u8)
                    })
                    .collect()
            })
            .collect();
        let sol = YbeSolution::from_s_table(2, &table).unwrap();
        assert_eq!(sol.r_matrix_qybe_check(), sol.validate().braided);
    }
}
