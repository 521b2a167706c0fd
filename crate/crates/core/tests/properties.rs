mod common;

use common::*;
use dtcodes::equivalence::{apply_monomial, are_equivalent, signature, MonomialMap};
use dtcodes::search::{passes_reduction, Reduction};
use dtcodes::structured::{all_triples, count_codes_containing, triple_at, triple_index};
use dtcodes::{awe, CirculantSpec, Elem, Field, FqVector, GeneratorCode, ToeplitzTriple};
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn counts(code: &GeneratorCode) -> Vec<u64> {
    code.weight_enumerator()
        .unwrap()
        .coeffs()
        .iter()
        .map(|c| c.to_u64().unwrap())
        .collect()
}

fn field_strategy() -> impl Strategy<Value = Field> {
    proptest::sample::select(FIELDS.to_vec())
}

fn elems(field: Field, len: usize) -> impl Strategy<Value = Vec<Elem>> {
    proptest::collection::vec((0..field.q()).prop_map(Elem), len)
}

/// A random full-rank generator matrix.
fn general_code(field: Field, n: usize, k: usize) -> impl Strategy<Value = GeneratorCode> {
    proptest::collection::vec(elems(field, n), k).prop_filter_map("rank deficient", move |rows| {
        let rows = rows
            .into_iter()
            .map(|r| FqVector::new(field, r).unwrap())
            .collect();
        GeneratorCode::new(field, n, rows).ok()
    })
}

proptest! {
    #[test]
    fn field_axioms(f in field_strategy(), x in 0u8..4, y in 0u8..4, z in 0u8..4) {
        let q = f.q();
        let (x, y, z) = (Elem(x % q), Elem(y % q), Elem(z % q));
        prop_assert_eq!(f.add(x, y), f.add(y, x));
        prop_assert_eq!(f.mul(x, y), f.mul(y, x));
        prop_assert_eq!(f.add(f.add(x, y), z), f.add(x, f.add(y, z)));
        prop_assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
        prop_assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
        prop_assert_eq!(f.add(x, f.neg(x)), Elem::ZERO);
        prop_assert_eq!(f.add(f.sub(x, y), y), x);
        if x.is_zero() {
            prop_assert!(f.inv(x).is_err());
        } else {
            prop_assert_eq!(f.mul(x, f.inv(x).unwrap()), Elem::ONE);
        }
        prop_assert_eq!(f.frobenius(f.frobenius(x)), x);
        prop_assert_eq!(f.frobenius(f.mul(x, y)), f.mul(f.frobenius(x), f.frobenius(y)));
    }

    #[test]
    fn enumerator_matches_naive_listing(t in triple_strategy(Field::F3, vec![2, 4, 6, 8])) {
        let code = t.code();
        prop_assert_eq!(counts(&code), naive_histogram(&code));
    }

    #[test]
    fn enumerator_matches_naive_listing_f4(t in triple_strategy(Field::F4, vec![2, 4, 6, 8])) {
        let code = t.code();
        prop_assert_eq!(counts(&code), naive_histogram(&code));
    }

    #[test]
    fn dual_obeys_macwilliams(code in field_strategy().prop_flat_map(|f| {
        (2usize..=8).prop_flat_map(move |n| (1..n).prop_flat_map(move |k| general_code(f, n, k)))
    })) {
        let dual = code.dual_code();
        prop_assert_eq!(dual.k(), code.n() - code.k());
        for row in code.rows() {
            for drow in dual.rows() {
                prop_assert_eq!(
                    FqVector::new(code.field(), row.clone()).unwrap()
                        .dot(&FqVector::new(code.field(), drow.clone()).unwrap()).unwrap(),
                    Elem::ZERO
                );
            }
        }
        prop_assert_eq!(counts(&dual), macwilliams_dual(code.field().q(), code.n(), &counts(&code)));
    }

    #[test]
    fn double_toeplitz_codes_are_formally_self_dual(
        t in field_strategy().prop_flat_map(|f| triple_strategy(f, vec![4, 8, 12]))
    ) {
        let code = t.code();
        prop_assert!(code.is_formally_self_dual().unwrap());
        let c = counts(&code);
        prop_assert_eq!(macwilliams_dual(t.field().q(), t.n(), &c), c);
    }

    #[test]
    fn membership_agrees_with_encoding(
        (t, msg, x) in field_strategy().prop_flat_map(|f| {
            triple_strategy(f, vec![4, 6, 8]).prop_flat_map(move |t| {
                let m = t.m();
                (Just(t), elems(f, m), elems(f, 2 * m))
            })
        })
    ) {
        let f = t.field();
        let code = t.code();
        let word = code.encode(&FqVector::new(f, msg).unwrap()).unwrap();
        prop_assert!(code.contains(&word).unwrap());
        let x = FqVector::new(f, x).unwrap();
        let codes: Vec<u8> = x.elems().iter().map(|e| e.code()).collect();
        prop_assert_eq!(code.contains(&x).unwrap(), word_set(&code).contains(&codes));
        let (u, v) = x.elems().split_at(t.m());
        prop_assert_eq!(
            t.contains(&FqVector::new(f, u.to_vec()).unwrap(), &FqVector::new(f, v.to_vec()).unwrap()).unwrap(),
            code.contains(&x).unwrap()
        );
    }

    #[test]
    fn swapped_triple_is_equivalent(t in field_strategy().prop_flat_map(|f| triple_strategy(f, vec![4, 6, 8, 10, 12]))) {
        prop_assert!(are_equivalent(&t.code(), &t.swapped().code()).unwrap());
    }

    #[test]
    fn scaled_triple_is_equivalent(
        (t, s) in field_strategy().prop_flat_map(|f| (triple_strategy(f, vec![4, 6, 8, 10, 12]), nonzero_strategy(f)))
    ) {
        prop_assert!(are_equivalent(&t.code(), &t.scaled(s).code()).unwrap());
    }

    #[test]
    fn monomial_image_is_equivalent(
        (t, perm, scales) in field_strategy().prop_flat_map(|f| {
            triple_strategy(f, vec![4, 6, 8, 10]).prop_flat_map(move |t| {
                let n = t.n();
                (
                    Just(t),
                    Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
                    proptest::collection::vec(nonzero_strategy(f), n),
                )
            })
        })
    ) {
        let code = t.code();
        let map = MonomialMap::new(t.field(), perm, scales).unwrap();
        let image = apply_monomial(&code, &map).unwrap();
        prop_assert_eq!(counts(&image), counts(&code));
        prop_assert_eq!(signature(&image).unwrap(), signature(&code).unwrap());
        prop_assert!(are_equivalent(&code, &image).unwrap());
        prop_assert!(are_equivalent(&image, &code).unwrap());
    }

    #[test]
    fn equivalence_is_symmetric_and_preserves_enumerators(
        (x, y) in field_strategy().prop_flat_map(|f| (triple_strategy(f, vec![6, 8]), triple_strategy(f, vec![6, 8])))
            .prop_filter("same length", |(x, y)| x.n() == y.n())
    ) {
        let (cx, cy) = (x.code(), y.code());
        let e = are_equivalent(&cx, &cy).unwrap();
        prop_assert_eq!(e, are_equivalent(&cy, &cx).unwrap());
        if e {
            prop_assert_eq!(counts(&cx), counts(&cy));
        }
    }

    #[test]
    fn circulant_matrix_is_its_toeplitz_triple(
        (f, r, neg) in field_strategy().prop_flat_map(|f| (Just(f), (1usize..7).prop_flat_map(move |m| elems(f, m)), any::<bool>()))
    ) {
        let r = FqVector::new(f, r).unwrap();
        let spec = if neg { CirculantSpec::negacirculant(&r) } else { CirculantSpec::circulant(&r) }.unwrap();
        let triple = spec.to_triple();
        prop_assert_eq!(spec.matrix(), triple.toeplitz_matrix());
        prop_assert!(spec.code().same_code(&triple.code()));
        prop_assert_eq!(CirculantSpec::parse(f, &spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn triple_text_and_index_round_trip(t in field_strategy().prop_flat_map(|f| triple_strategy(f, vec![2, 4, 8, 14]))) {
        prop_assert_eq!(&ToeplitzTriple::parse(t.field(), &t.to_string()).unwrap(), &t);
        let i = triple_index(&t).unwrap();
        prop_assert_eq!(triple_at(t.field(), t.m(), i), t);
    }
}

#[test]
fn binary_equivalence_matches_permutation_canon() {
    for n in [4, 6, 8] {
        let codes: Vec<GeneratorCode> = all_triples(Field::F2, n / 2).map(|t| t.code()).collect();
        let canon: Vec<Vec<u64>> = codes.iter().map(binary_permutation_canon).collect();
        for i in 0..codes.len() {
            for j in i..codes.len() {
                assert_eq!(
                    are_equivalent(&codes[i], &codes[j]).unwrap(),
                    canon[i] == canon[j],
                    "n={n} pair ({i}, {j})"
                );
            }
        }
    }
}

#[test]
fn swap_filter_keeps_one_of_each_swap_pair() {
    for n in (2..=12).step_by(2) {
        for t in all_triples(Field::F2, n / 2) {
            let keep = passes_reduction(&t, Reduction::Swap).unwrap();
            let keep_swapped = passes_reduction(&t.swapped(), Reduction::Swap).unwrap();
            assert!(keep || keep_swapped, "{t} and its swap both rejected");
        }
    }
}

#[test]
fn scalar_filter_keeps_exactly_one_multiple() {
    for f in [Field::F3, Field::F4] {
        for n in (2..=8).step_by(2) {
            for t in all_triples(f, n / 2) {
                let kept = f
                    .nonzero()
                    .filter(|&s| passes_reduction(&t.scaled(s), Reduction::Scalar).unwrap())
                    .count();
                let zero_prefix = t.t().is_zero() && t.a().iter().all(|e| e.is_zero());
                if zero_prefix {
                    assert_eq!(kept, (f.q() - 1) as usize, "{t}");
                } else {
                    assert_eq!(kept, 1, "{t}");
                }
            }
        }
    }
}

#[test]
fn filters_reject_the_wrong_field() {
    let t2 = ToeplitzTriple::parse(Field::F2, "1;(1);(0)").unwrap();
    let t3 = ToeplitzTriple::parse(Field::F3, "1;(1);(0)").unwrap();
    assert!(passes_reduction(&t2, Reduction::Scalar).is_err());
    assert!(passes_reduction(&t3, Reduction::Swap).is_err());
}

/// Every vector of F_q^n, in the library's element encoding.
fn all_vectors(field: Field, n: usize) -> Vec<FqVector> {
    let q = field.q() as usize;
    (0..q.pow(n as u32))
        .map(|mut i| {
            let codes: Vec<u8> = (0..n)
                .map(|_| {
                    let c = (i % q) as u8;
                    i /= q;
                    c
                })
                .collect();
            FqVector::from_codes(field, &codes).unwrap()
        })
        .collect()
}

#[test]
fn average_enumerator_decomposes_into_containment_counts() {
    for (f, n) in [(Field::F2, 4), (Field::F2, 6), (Field::F3, 4), (Field::F4, 4)] {
        let m = n / 2;
        let psi = awe::average_weight_enumerator(f, n).unwrap();
        let mut sums = vec![num_bigint::BigUint::default(); n + 1];
        let halves = all_vectors(f, m);
        for u in &halves {
            for v in &halves {
                sums[u.weight() + v.weight()] += count_codes_containing(f, n, u, v).unwrap();
            }
        }
        assert_eq!(psi.coeffs(), &sums[..], "q={} n={n}", f.q());
    }
}
