mod common;

use proptest::prelude::*;

use common::*;
use wmix::debruijn::walk_occ;
use wmix::oracle::{enumerate_members, DEFAULT_ORACLE_BUDGET};
use wmix::words::{count_occurrences, occ_vector};
use wmix::{comp, dec, diff, is_member, mtrace, Alphabet, DeBruijnGraph, Digraph, Walk};

fn word_over(alphabet: &'static str, max: usize) -> impl Strategy<Value = String> {
    let syms: Vec<char> = alphabet.chars().collect();
    proptest::collection::vec(proptest::sample::select(syms), 0..=max).prop_map(|v| v.into_iter().collect())
}

fn param_words() -> impl Strategy<Value = Vec<String>> {
    proptest::collection::vec(word_over("ab", 3).prop_filter("non-empty", |w| !w.is_empty()), 1..=4)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn counting_matches_sliding_window(w in word_over("abc", 20), v in word_over("abc", 4)) {
        prop_assume!(!v.is_empty());
        let a = Alphabet::parse("abc").unwrap();
        let got = count_occurrences(&a.word(&w).unwrap(), &a.word(&v).unwrap()).unwrap();
        prop_assert_eq!(got as usize, naive_count(&w, &v));
    }

    #[test]
    fn membership_matches_naive(words in param_words(), w in word_over("ab", 16)) {
        let p = list("ab", &words.join(","));
        let refs: Vec<&str> = words.iter().map(String::as_str).collect();
        let word = p.alphabet().word(&w).unwrap();
        prop_assert_eq!(is_member(&word, &p), naive_member(&w, &refs));
        prop_assert_eq!(diff(&occ_vector(&word, &p)) == 0, is_member(&word, &p));
    }

    #[test]
    fn enumeration_is_sound_and_complete(words in param_words()) {
        let p = list("ab", &words.join(","));
        let refs: Vec<&str> = words.iter().map(String::as_str).collect();
        let members = render_all(p.alphabet(), &enumerate_members(&p, 7, DEFAULT_ORACLE_BUDGET).unwrap());
        let expected: Vec<String> = (0..=7)
            .flat_map(|n| strings_of_length("ab", n))
            .filter(|w| naive_member(w, &refs))
            .map(|w| if w.is_empty() { "ε".to_string() } else { w })
            .collect();
        prop_assert_eq!(members, expected);
    }

    #[test]
    fn decomposition_round_trips(dim in 1usize..=3, start in word_over("ab", 3), rest in word_over("ab", 30)) {
        let a = Alphabet::parse("ab").unwrap();
        prop_assume!(start.len() == dim);
        let g = DeBruijnGraph::build(&a, dim).unwrap();
        let walk = g.walk_of_word(&a.word(&start).unwrap(), &a.word(&rest).unwrap()).unwrap();
        let d = dec(&g, &walk).unwrap();
        prop_assert_eq!(comp(&g, d.path.walk(), &d.cycles).unwrap(), walk.clone());
        prop_assert_eq!(g.word_of_walk(&walk).unwrap(), a.word(&format!("{start}{rest}")).unwrap());
        let m = mtrace(&g, &walk).unwrap();
        let cycle_total: usize = m.cycles.iter().map(|(c, n)| c.len() * n).sum();
        prop_assert_eq!(m.path.len() + cycle_total, walk.len());
    }

    #[test]
    fn walk_occurrences_count_word_occurrences(words in param_words(), tail in word_over("ab", 20)) {
        let p = list("ab", &words.join(","));
        let n = p.max_len();
        let a = p.alphabet().clone();
        let g = DeBruijnGraph::build(&a, n).unwrap();
        let start = "a".repeat(n);
        let walk: Walk = g.walk_of_word(&a.word(&start).unwrap(), &a.word(&tail).unwrap()).unwrap();
        let text = format!("{start}{tail}");
        let full = occ_vector(&a.word(&text).unwrap(), &p);
        let head = occ_vector(&a.word(&start).unwrap(), &p);
        let mut expected = walk_occ(&g, &walk, &p);
        expected += &head;
        prop_assert_eq!(expected, full);
        prop_assert!(walk.vertices().iter().all(|&v| v < g.vertex_count()));
    }
}
