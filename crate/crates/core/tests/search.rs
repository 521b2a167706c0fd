mod common;

use std::collections::BTreeSet;

use common::*;
use dtcodes::classify::{classify, classify_with, even_weight_diagnostic, ClassifyOptions, Structure};
use dtcodes::equivalence::{are_equivalent, dedupe_into_classes, EquivalenceOptions};
use dtcodes::search::{
    find_dt_optimal, find_family_optimal, passes_reduction, run_search, vector_rank, Family, Reduction, SearchConfig,
    SearchMode,
};
use dtcodes::structured::all_triples;
use dtcodes::{CirculantSpec, Error, Field, FqVector, Sign, ToeplitzTriple};
use num_bigint::BigUint;

#[test]
fn vector_rank_examples() {
    let rank = |s: &str| vector_rank(&FqVector::parse(Field::F2, s).unwrap()).unwrap();
    assert_eq!(rank("(0,0,0)"), BigUint::from(0u32));
    assert_eq!(rank("(1,0,1)"), BigUint::from(5u32));
    assert_eq!(rank("(1,1)"), BigUint::from(3u32));
    assert!(vector_rank(&FqVector::parse(Field::F3, "(1,2)").unwrap()).is_err());
}

#[test]
fn reduction_examples() {
    let t = |f, s| ToeplitzTriple::parse(f, s).unwrap();
    assert!(passes_reduction(&t(Field::F2, "0;(1,0,1);(1,1,0)"), Reduction::Swap).unwrap());
    assert!(!passes_reduction(&t(Field::F2, "0;(1,1,0);(1,0,1)"), Reduction::Swap).unwrap());
    assert!(passes_reduction(&t(Field::F2, "1;(0,1,1);(0,1,1)"), Reduction::Swap).unwrap());
    let rejected = t(Field::F3, "0;(2,1);(1,1)");
    assert!(!passes_reduction(&rejected, Reduction::Scalar).unwrap());
    let rep = rejected.scaled(dtcodes::Elem(2));
    assert_eq!(rep.to_string(), "0;(1,2);(2,2)");
    assert!(passes_reduction(&rep, Reduction::Scalar).unwrap());
    assert!(passes_reduction(&t(Field::F4, "0;(0,0);(v,w)"), Reduction::Scalar).unwrap());
}

#[test]
fn optimal_lengths() {
    assert_eq!(find_dt_optimal(Field::F2, 12, Reduction::Swap).unwrap().0, 4);
    assert_eq!(find_dt_optimal(Field::F3, 10, Reduction::Scalar).unwrap().0, 5);
    assert_eq!(find_dt_optimal(Field::F4, 8, Reduction::Scalar).unwrap().0, 4);
}

#[test]
fn length_two_needs_no_special_case() {
    for f in FIELDS {
        let (d, triples) = find_dt_optimal(f, 2, Reduction::None).unwrap();
        assert_eq!(d, 2);
        assert_eq!(triples.len(), f.q() as usize - 1);
    }
}

#[test]
fn family_optimal_examples() {
    let (d, specs) = find_family_optimal(Field::F2, 16, Sign::Circulant).unwrap();
    assert_eq!(d, 5);
    assert!(specs.contains(&CirculantSpec::parse(Field::F2, "C:(1,1,1,0,1,0,0,0)").unwrap()));

    let (d, specs) = find_family_optimal(Field::F3, 4, Sign::Negacirculant).unwrap();
    assert_eq!(d, 3);
    let target = CirculantSpec::parse(Field::F3, "N:(1,1)").unwrap().code();
    let codes: Vec<_> = specs.iter().map(CirculantSpec::code).collect();
    assert_eq!(dedupe_into_classes(&codes, &EquivalenceOptions::default()).unwrap().len(), 1);
    assert!(are_equivalent(&codes[0], &target).unwrap());

    let (d, specs) = find_family_optimal(Field::F4, 6, Sign::Circulant).unwrap();
    assert_eq!(d, 4);
    assert!(specs.contains(&CirculantSpec::parse(Field::F4, "C:(1,w,1)").unwrap()));
}

/// Phase-two completeness: the collected triples are exactly the filtered
/// triples of optimal minimum weight, each once, in enumeration order.
#[test]
fn collection_is_complete_and_ordered() {
    for (f, n) in [(Field::F2, 8), (Field::F2, 10), (Field::F3, 6), (Field::F4, 6)] {
        let red = Reduction::natural(f);
        let (d, found) = find_dt_optimal(f, n, red).unwrap();
        let weights: Vec<(ToeplitzTriple, usize)> = all_triples(f, n / 2)
            .filter(|t| passes_reduction(t, red).unwrap())
            .map(|t| {
                let w = naive_histogram(&t.code()).iter().skip(1).position(|&c| c > 0).unwrap() + 1;
                (t, w)
            })
            .collect();
        let best = weights.iter().map(|(_, w)| *w).max().unwrap();
        assert_eq!(d, best, "q={} n={n}", f.q());
        let expected: Vec<ToeplitzTriple> = weights.into_iter().filter(|(_, w)| *w == best).map(|(t, _)| t).collect();
        assert_eq!(found, expected, "q={} n={n}", f.q());
    }
}

#[test]
fn search_modes() {
    let f = Field::F3;
    let base = SearchConfig::new(f, 6, Family::Toeplitz);
    let at = run_search(&base.clone().mode(SearchMode::CollectAt(2)), None).unwrap();
    assert!(at.hits.iter().all(|h| h.min_weight == 2));
    assert_eq!(at.optimal_d, None);
    let least = run_search(&base.clone().mode(SearchMode::AtLeast(2)), None).unwrap();
    assert!(least.hits.iter().all(|h| h.min_weight >= 2));
    for h in &least.hits {
        assert_eq!(h.candidate.code().minimum_weight().unwrap(), h.min_weight);
    }
    let three = least.hits.iter().filter(|h| h.min_weight == 3).count();
    let opt = run_search(&base, None).unwrap();
    assert_eq!(opt.optimal_d, Some(3));
    assert_eq!(opt.hits.len(), three);
    assert_eq!(least.hits.len(), at.hits.len() + three);
}

#[test]
fn search_budget_is_enforced() {
    let mut config = SearchConfig::new(Field::F2, 20, Family::Toeplitz);
    config.max_work = 1000;
    assert!(matches!(run_search(&config, None), Err(Error::SearchBudgetExceeded { .. })));
    assert!(run_search(&SearchConfig::new(Field::F2, 9, Family::Toeplitz), None).is_err());
    let bad = SearchConfig::new(Field::F2, 8, Family::Toeplitz).reduction(Reduction::Scalar);
    assert!(matches!(run_search(&bad, None), Err(Error::InvalidArgument(_))));
}

#[test]
fn worker_count_does_not_change_results() {
    let config = SearchConfig::new(Field::F4, 8, Family::Toeplitz);
    let one = run_search(&config.clone().workers(1), None).unwrap();
    let four = run_search(&config.workers(4), None).unwrap();
    assert_eq!(one.optimal_d, four.optimal_d);
    assert_eq!(one.hits, four.hits);
}

#[test]
fn classification_examples() {
    let r = classify(Field::F2, 12).unwrap();
    assert_eq!((r.d_opt, r.n_dt, r.n_dc, r.n_nc), (4, 4, 4, 0));
    assert_eq!(r.circulant_classes, 4);
    let r = classify(Field::F3, 6).unwrap();
    assert_eq!((r.d_opt, r.n_dt, r.n_dc, r.n_nc), (3, 1, 2, 0));
    let r = classify(Field::F3, 4).unwrap();
    assert_eq!((r.d_opt, r.n_dt, r.n_dc, r.n_nc), (3, 0, 0, 1));
}

#[test]
fn class_records_are_consistent() {
    for (f, n) in [(Field::F2, 10), (Field::F3, 6), (Field::F4, 6)] {
        let r = classify(f, n).unwrap();
        assert_eq!(r.total_classes(), r.n_dt + r.n_dc + r.n_nc);
        let mut reps = BTreeSet::new();
        for (i, c) in r.classes.iter().enumerate() {
            assert_eq!(c.class_id, i);
            assert_eq!((c.q, c.n, c.d), (f.q(), n, r.d_opt));
            let t = ToeplitzTriple::parse(f, &c.representative_triple).unwrap();
            assert_eq!(t.code().minimum_weight().unwrap(), r.d_opt);
            assert!(reps.insert(t.clone()));
            assert_eq!(r.locate(&t, &EquivalenceOptions::default()).unwrap(), Some(i));
        }
        // classes are listed in order of their least member
        assert!(r.classes.windows(2).all(|w| {
            ToeplitzTriple::parse(f, &w[0].representative_triple).unwrap()
                < ToeplitzTriple::parse(f, &w[1].representative_triple).unwrap()
        }));
        for line in r.json_lines().lines() {
            let v: serde_json::Value = serde_json::from_str(line).unwrap();
            assert!(["DC", "NC", "DT-only"].contains(&v["structure"].as_str().unwrap()));
        }
    }
}

#[test]
fn negacirculant_bucket_only_over_f3() {
    for (f, n) in [(Field::F2, 8), (Field::F4, 6)] {
        let r = classify(f, n).unwrap();
        assert_eq!(r.n_nc, 0);
        assert_eq!(r.negacirculant_classes, 0);
        assert!(r.classes.iter().all(|c| c.structure != Structure::DoubleNegacirculant));
    }
}

#[test]
fn semimonomial_mode_merges_frobenius_conjugates() {
    let mono = classify(Field::F4, 8).unwrap();
    let semi = classify_with(
        Field::F4,
        8,
        &ClassifyOptions {
            equivalence: EquivalenceOptions {
                semimonomial: true,
                ..Default::default()
            },
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(mono.n_dt, 7);
    assert!(semi.total_classes() < mono.total_classes());
}

#[test]
fn even_weight_binary_codes_are_equivalent_to_circulant_ones() {
    for n in [2, 4, 6, 8] {
        let r = even_weight_diagnostic(n).unwrap();
        assert!(r.even_codes > 0);
        assert_eq!(r.equivalent_to_circulant, r.even_codes, "n={n}: {r:?}");
    }
    assert!(even_weight_diagnostic(14).is_err());
}
