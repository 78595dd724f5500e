mod common;

use common::{all_words, random_log, random_sdfa, relative_eq, rng, Oracle};
use entrel::discovery::{build_fdag, fdag_to_sdfa, filter_log, prefix_tree_sdfa, Threshold};
use entrel::formats::{model_from_json, sdfa_to_json, write_csv, write_xes};
use entrel::ingest::{parse_csv, parse_xes, IngestConfig};
use entrel::model::{enumerate_language, EventLog};
use entrel::relevance::{relevance, relevance_lower_bound, rho};
use proptest::prelude::*;

proptest! {
    #[test]
    fn replay_matches_oracle(seed in any::<u64>()) {
        let a = random_sdfa(&mut rng(seed), 6, 3);
        let oracle = Oracle::new(&a);
        for w in all_words(&["a", "b", "c", "z"], 5) {
            let got = a.probability_of(&w);
            let want = oracle.probability(&w);
            prop_assert!(relative_eq(got, want, 1e-12), "{w:?}: {got} vs {want}");
        }
    }

    #[test]
    fn enumeration_agrees_and_is_bounded(seed in any::<u64>()) {
        let a = random_sdfa(&mut rng(seed), 6, 3);
        let lang = enumerate_language(&a, 6);
        prop_assert!(lang.total_mass() <= 1.0 + 1e-9);
        let oracle = Oracle::new(&a);
        for (t, p) in lang.iter() {
            prop_assert!(relative_eq(p, oracle.probability(t), 1e-12));
        }
    }

    #[test]
    fn relevance_respects_lower_bound(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e = random_log(&mut r, 12, 4, 5);
        let a = random_sdfa(&mut r, 6, 4);
        let bound = relevance_lower_bound(&e).unwrap();
        prop_assert!(relevance(&e, &a).unwrap().relevance >= bound - 1e-9);
        let pta = relevance(&e, &prefix_tree_sdfa(&e)).unwrap();
        prop_assert!((pta.relevance - bound).abs() <= 1e-9);
        prop_assert_eq!(pta.rho, 1.0);
    }

    #[test]
    fn constituents_sum_to_relevance(seed in any::<u64>()) {
        let mut r = rng(seed);
        let e = random_log(&mut r, 12, 4, 5);
        let rep = relevance(&e, &random_sdfa(&mut r, 6, 4)).unwrap();
        let sum = rep.selector_bits + rep.background_bits + rep.model_bits;
        prop_assert!((rep.relevance - sum).abs() <= 1e-9);
        prop_assert_eq!(rep.fitting_traces + rep.nonfitting_traces, e.total());
    }

    #[test]
    fn full_threshold_fits(seed in any::<u64>()) {
        let e = random_log(&mut rng(seed), 15, 5, 6);
        let a = fdag_to_sdfa(&build_fdag(&filter_log(&e, Threshold::FULL))).unwrap();
        let rep = relevance(&e, &a).unwrap();
        prop_assert_eq!(rep.rho, 1.0);
        prop_assert_eq!(rep.background_bits, 0.0);
    }

    #[test]
    fn filtering_is_monotone(seed in any::<u64>(), k1 in 0.01f64..1.0, dk in 0.0f64..1.0) {
        let e = random_log(&mut rng(seed), 15, 4, 5);
        let k2 = (k1 + dk).min(1.0);
        let (small, large) = (
            filter_log(&e, Threshold::new(k1).unwrap()),
            filter_log(&e, Threshold::new(k2).unwrap()),
        );
        let large_set = large.to_label_multiset();
        for (t, m) in small.to_label_multiset() {
            prop_assert_eq!(large_set.get(&t), Some(&m));
        }
        let discover = |f: &EventLog| fdag_to_sdfa(&build_fdag(f)).unwrap();
        prop_assert!(rho(&e, &discover(&small)).unwrap() <= rho(&e, &discover(&large)).unwrap());
    }

    #[test]
    fn variant_order_and_scale_do_not_matter(seed in any::<u64>(), factor in 2u64..5) {
        let mut r = rng(seed);
        let e = random_log(&mut r, 12, 4, 5);
        let a = random_sdfa(&mut r, 6, 4);
        let mut variants: Vec<(Vec<String>, u64)> = e.to_label_multiset().into_iter().collect();
        variants.reverse();
        let reordered = EventLog::from_variants(variants).unwrap();
        let base = relevance(&e, &a).unwrap();
        prop_assert_eq!(&relevance(&reordered, &a).unwrap(), &base);
        let scaled = relevance(&e.scaled(factor), &a).unwrap();
        prop_assert_eq!(scaled.relevance, base.relevance);
        prop_assert_eq!(scaled.rho, base.rho);
    }

    #[test]
    fn logs_round_trip(seed in any::<u64>()) {
        let e = random_log(&mut rng(seed), 10, 5, 5);
        let cfg = IngestConfig::default();
        let mut xes = Vec::new();
        write_xes(&e, &mut xes).unwrap();
        prop_assert_eq!(&parse_xes(xes.as_slice(), &cfg).unwrap(), &e);
        let mut csv = Vec::new();
        write_csv(&e, &mut csv).unwrap();
        prop_assert_eq!(&parse_csv(csv.as_slice(), &cfg).unwrap(), &e);
    }

    #[test]
    fn sdfa_json_round_trip(seed in any::<u64>()) {
        let a = random_sdfa(&mut rng(seed), 6, 4);
        let text = sdfa_to_json(&a);
        let back = model_from_json(&text).unwrap().into_sdfa().unwrap();
        prop_assert_eq!(sdfa_to_json(&back), text);
        let mut t1: Vec<_> = a.transitions().map(|t| (t.from, t.action, t.to, t.probability)).collect();
        let mut t2: Vec<_> = back.transitions().map(|t| (t.from, t.action, t.to, t.probability)).collect();
        t1.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        t2.sort_by(|x, y| (x.0, x.1).cmp(&(y.0, y.1)));
        prop_assert_eq!(t1, t2);
    }
}
