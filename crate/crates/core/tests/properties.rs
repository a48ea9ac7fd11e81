use std::sync::OnceLock;

use proptest::prelude::*;
use proptest::sample::Index;
use semilab::algebra::{
    canonical_form, chain_semilattice, cyclic_group, green_data, parse_sgp, to_sgp, CanonicalMode, FiniteSemigroup,
    Relation,
};
use semilab::classes::classify;
use semilab::eqsys::{bindings_to_fixed, parse, satisfies, satisfies_with, EquationSystem};
use semilab::freeprod::{
    canonical_check, extract_epsilon_c, fp_multiply, search_scripts, FreeProductElement, ScriptBudget, Segment,
};
use semilab::smallsemi::CorpusSource;
use semilab::wordeq::{counterexample_search, parikh_refute, run_all_mechanisms, witness_search, HarnessBudget};

fn corpus() -> &'static [FiniteSemigroup] {
    static ALL: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    ALL.get_or_init(|| CorpusSource::in_memory().up_to(4).unwrap())
}

fn small_corpus() -> &'static [FiniteSemigroup] {
    let all = corpus();
    &all[..1 + 5 + 24]
}

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, failure_persistence: None, ..ProptestConfig::default() }
}

fn relabel(s: &FiniteSemigroup, p: &[usize]) -> FiniteSemigroup {
    let n = s.order();
    let mut inv = vec![0; n];
    for (i, &pi) in p.iter().enumerate() {
        inv[pi] = i;
    }
    let table = (0..n * n).map(|i| p[s.mul(inv[i / n], inv[i % n])]).collect();
    FiniteSemigroup::from_table(n, table).unwrap()
}

fn semigroup_and_perm() -> impl Strategy<Value = (FiniteSemigroup, Vec<usize>)> {
    any::<Index>().prop_flat_map(|i| {
        let s = i.get(corpus()).clone();
        let n = s.order();
        (Just(s), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// Prefix text and conjunction text for a random system over `p0..`.
fn system_text(max_symbols: usize, max_word: usize) -> impl Strategy<Value = String> {
    (1..=max_symbols)
        .prop_flat_map(move |n| {
            let quants = prop::collection::vec(any::<bool>(), n);
            let word = prop::collection::vec(0..n, 1..=max_word);
            let eqs = prop::collection::vec((word.clone(), word), 1..=2);
            (quants, eqs)
        })
        .prop_map(|(quants, eqs)| {
            let mut prefix = String::new();
            let mut last = None;
            for (i, &universal) in quants.iter().enumerate() {
                if last == Some(universal) {
                    prefix.push_str(&format!(", p{i}"));
                } else {
                    prefix.push_str(&format!(" {} p{i}", if universal { "forall" } else { "exists" }));
                }
                last = Some(universal);
            }
            let word = |w: &Vec<usize>| w.iter().map(|k| format!("p{k}")).collect::<Vec<_>>().join(" ");
            let conj: Vec<String> = eqs.iter().map(|(l, r)| format!("{} = {}", word(l), word(r))).collect();
            format!("{} : {}", prefix.trim(), conj.join(" & "))
        })
}

fn fp_element(order: usize) -> impl Strategy<Value = Vec<Segment>> {
    let seg = prop_oneof![
        prop::collection::vec(1usize..=3, 1..=3).prop_map(Segment::Free),
        (0..order).prop_map(Segment::Carrier),
    ];
    prop::collection::vec(seg, 1..=4)
}

proptest! {
    #![proptest_config(config(64))]

    #[test]
    fn canonical_form_ignores_labels((s, p) in semigroup_and_perm()) {
        let t = relabel(&s, &p);
        for mode in [CanonicalMode::Isomorphism, CanonicalMode::Equivalence] {
            prop_assert_eq!(canonical_form(&s, mode).unwrap(), canonical_form(&t, mode).unwrap());
        }
        prop_assert_eq!(canonical_form(&s, CanonicalMode::Equivalence).unwrap(),
            canonical_form(&t.transpose(), CanonicalMode::Equivalence).unwrap());
    }

    #[test]
    fn classes_and_green_ignore_labels((s, p) in semigroup_and_perm()) {
        let t = relabel(&s, &p);
        let mut moved = classify(&s);
        for list in [&mut moved.idempotents, &mut moved.universal_inverses] {
            *list = list.iter().map(|&a| p[a]).collect();
            list.sort_unstable();
        }
        prop_assert_eq!(moved, classify(&t));
        let (gs, gt) = (green_data(&s), green_data(&t));
        prop_assert!(gs.check_invariants().is_ok());
        for rel in [Relation::R, Relation::L, Relation::H, Relation::D, Relation::J] {
            for a in s.elements() {
                for b in s.elements() {
                    prop_assert_eq!(gs.related(rel, a, b), gt.related(rel, p[a], p[b]));
                }
            }
        }
    }

    #[test]
    fn sgp_round_trip((s, p) in semigroup_and_perm()) {
        let t = relabel(&s, &p);
        prop_assert_eq!(parse_sgp(&to_sgp(&t)).unwrap(), t);
    }

    #[test]
    fn congruence_quotients_are_homomorphic_images((s, _) in semigroup_and_perm()) {
        for (c, q) in semilab::algebra::congruences(&s, 6).unwrap() {
            prop_assert_eq!(q.order(), c.block_count());
            for a in s.elements() {
                for b in s.elements() {
                    prop_assert_eq!(c.block_of(s.mul(a, b)), q.mul(c.block_of(a), c.block_of(b)));
                }
            }
        }
    }

    #[test]
    fn system_text_round_trips(text in system_text(4, 3)) {
        let e = parse(&text).unwrap();
        let again = parse(&e.to_string()).unwrap();
        prop_assert_eq!(e.to_string(), again.to_string());
        prop_assert_eq!(e.names(), again.names());
        prop_assert_eq!(e.equalities(), again.equalities());
    }

    #[test]
    fn satisfaction_ignores_labels((s, p) in semigroup_and_perm(), text in system_text(3, 3)) {
        let e = parse(&text).unwrap();
        prop_assert_eq!(satisfies(&s, &e).satisfied, satisfies(&relabel(&s, &p), &e).satisfied);
    }

    #[test]
    fn counterexamples_replay((s, _) in semigroup_and_perm(), text in system_text(3, 3)) {
        let e = parse(&text).unwrap();
        let v = satisfies(&s, &e);
        if let Some(ce) = &v.counterexample {
            prop_assert!(!v.satisfied);
            let fixed = bindings_to_fixed(&e, ce).unwrap();
            prop_assert!(!satisfies_with(&s, &e, &fixed).satisfied);
        }
        if let Some(w) = &v.witness {
            prop_assert!(v.satisfied);
            let fixed = bindings_to_fixed(&e, w).unwrap();
            prop_assert!(satisfies_with(&s, &e, &fixed).satisfied);
        }
    }

    #[test]
    fn free_product_is_associative(x in fp_element(2), y in fp_element(2), z in fp_element(2), group in any::<bool>()) {
        let s = if group { cyclic_group(2).unwrap() } else { chain_semilattice(2).unwrap() };
        let el = |segs: Vec<Segment>| FreeProductElement::from_segments(segs, &s).unwrap();
        let (x, y, z) = (el(x), el(y), el(z));
        prop_assert_eq!(
            fp_multiply(&fp_multiply(&x, &y, &s), &z, &s),
            fp_multiply(&x, &fp_multiply(&y, &z, &s), &s)
        );
    }

    #[test]
    fn normal_forms_are_unique(x in fp_element(3), split in any::<Index>()) {
        let s = cyclic_group(3).unwrap();
        let whole = FreeProductElement::from_segments(x.clone(), &s).unwrap();
        // no two adjacent segments of the same kind
        for pair in whole.segments().windows(2) {
            prop_assert_ne!(matches!(pair[0], Segment::Free(_)), matches!(pair[1], Segment::Free(_)));
        }
        if x.len() >= 2 {
            let cut = 1 + split.index(x.len() - 1);
            let (l, r) = x.split_at(cut);
            let l = FreeProductElement::from_segments(l.to_vec(), &s).unwrap();
            let r = FreeProductElement::from_segments(r.to_vec(), &s).unwrap();
            prop_assert_eq!(fp_multiply(&l, &r, &s), whole);
        }
    }
}

proptest! {
    #![proptest_config(config(24))]

    // a passing canonical check means the system holds in the carrier, the
    // extracted run system holds there too, and it entails the original on
    // every small semigroup
    #[test]
    fn canonical_checks_are_sound(i in any::<Index>(), text in system_text(3, 3)) {
        let s = i.get(small_corpus());
        let e = parse(&text).unwrap();
        let found = search_scripts(s, &e, ScriptBudget::uniform(1));
        if let Some(script) = &found.script {
            let rs = canonical_check(s, &e, script).unwrap();
            prop_assert!(satisfies(s, &e).satisfied);
            let eps = extract_epsilon_c(&rs);
            prop_assert!(satisfies(s, &eps).satisfied);
            for t in small_corpus() {
                if satisfies(t, &eps).satisfied {
                    prop_assert!(satisfies(t, &e).satisfied, "{}\n{}\n{}", text, eps, t);
                }
            }
        }
    }

    #[test]
    fn harness_mechanisms_agree(text in system_text(3, 3)) {
        let e = parse(&text).unwrap();
        let report = run_all_mechanisms(&e, HarnessBudget { max_len: 3, extra_letters: 1, max_order: 3, len_cap: 3 }, &CorpusSource::in_memory()).unwrap();
        prop_assert!(!report.is_contradictory(), "{}", text);
        if let Some(c) = &report.parikh {
            prop_assert!(c.verify());
        }
        if let Some(w) = &report.witness {
            prop_assert!(w.replays(&e));
            // holding in all semigroups means holding in every small one
            for t in small_corpus() {
                prop_assert!(satisfies(t, &e).satisfied, "{}\n{}", text, t);
            }
        }
        if let Some(ce) = &report.counterexample {
            prop_assert!(!satisfies(&parse_sgp(&ce.sgp).unwrap(), &e).satisfied);
        }
    }

    #[test]
    fn witnesses_survive_parikh(text in system_text(3, 2)) {
        let e: EquationSystem = parse(&text).unwrap();
        if witness_search(&e, 3, 1).is_some() {
            prop_assert!(parikh_refute(&e).is_none());
            prop_assert!(counterexample_search(&e, 3, &CorpusSource::in_memory()).unwrap().is_none());
        }
    }
}
