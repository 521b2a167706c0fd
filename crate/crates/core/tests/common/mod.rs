//! Helpers shared by the integration tests: random objects and independent
//! oracles that do not go through the library's enumeration kernels.

#![allow(dead_code)]

use std::collections::HashSet;

use dtcodes::{Elem, Field, FqVector, GeneratorCode, ToeplitzTriple};
use proptest::prelude::*;
use rand::Rng;

pub const FIELDS: [Field; 3] = [Field::F2, Field::F3, Field::F4];

pub fn triple_from_codes(field: Field, t: u8, a: &[u8], b: &[u8]) -> ToeplitzTriple {
    ToeplitzTriple::new(
        field,
        Elem(t),
        &FqVector::from_codes(field, a).unwrap(),
        &FqVector::from_codes(field, b).unwrap(),
    )
    .unwrap()
}

pub fn random_triple<R: Rng>(rng: &mut R, field: Field, n: usize) -> ToeplitzTriple {
    let q = field.q();
    let m = n / 2;
    let mut draw = |len: usize| (0..len).map(|_| rng.gen_range(0..q)).collect::<Vec<u8>>();
    let t = draw(1)[0];
    let a = draw(m - 1);
    let b = draw(m - 1);
    triple_from_codes(field, t, &a, &b)
}

/// Triples over `field` with `n` drawn from `lengths`.
pub fn triple_strategy(field: Field, lengths: Vec<usize>) -> impl Strategy<Value = ToeplitzTriple> {
    let q = field.q();
    proptest::sample::select(lengths).prop_flat_map(move |n| {
        let m = n / 2;
        (
            0..q,
            proptest::collection::vec(0..q, m - 1),
            proptest::collection::vec(0..q, m - 1),
        )
            .prop_map(move |(t, a, b)| triple_from_codes(field, t, &a, &b))
    })
}

pub fn nonzero_strategy(field: Field) -> impl Strategy<Value = Elem> {
    (1..field.q()).prop_map(Elem)
}

/// Every codeword, by naive linear combination of the generator rows.
pub fn naive_codewords(code: &GeneratorCode) -> Vec<Vec<u8>> {
    let f = code.field();
    let q = f.q() as usize;
    let k = code.k();
    let mut out = Vec::with_capacity(q.pow(k as u32));
    for mut idx in 0..q.pow(k as u32) {
        let mut word = vec![Elem::ZERO; code.n()];
        for row in code.rows() {
            let c = Elem((idx % q) as u8);
            idx /= q;
            for (w, &x) in word.iter_mut().zip(row) {
                *w = f.add(*w, f.mul(c, x));
            }
        }
        out.push(word.iter().map(|e| e.code()).collect());
    }
    out
}

pub fn naive_histogram(code: &GeneratorCode) -> Vec<u64> {
    let mut h = vec![0u64; code.n() + 1];
    for w in naive_codewords(code) {
        h[w.iter().filter(|&&x| x != 0).count()] += 1;
    }
    h
}

fn binomial(n: i128, k: i128) -> i128 {
    if k < 0 || k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The dual's weight distribution from the code's via the MacWilliams
/// transform with Krawtchouk polynomials.
pub fn macwilliams_dual(q: u8, n: usize, counts: &[u64]) -> Vec<u64> {
    let (q, n) = (q as i128, n as i128);
    let size: i128 = counts.iter().map(|&c| c as i128).sum();
    (0..=n)
        .map(|j| {
            let total: i128 = (0..=n)
                .map(|i| {
                    let kr: i128 = (0..=j)
                        .map(|s| {
                            let sign = if s % 2 == 0 { 1 } else { -1 };
                            sign * (q - 1).pow((j - s) as u32) * binomial(i, s) * binomial(n - i, j - s)
                        })
                        .sum();
                    counts[i as usize] as i128 * kr
                })
                .sum();
            assert_eq!(total % size, 0, "MacWilliams sum not divisible");
            (total / size) as u64
        })
        .collect()
}

/// The codeword set as a hash set, for membership tests.
pub fn word_set(code: &GeneratorCode) -> HashSet<Vec<u8>> {
    naive_codewords(code).into_iter().collect()
}

/// Canonical form of a binary code under column permutations: the least
/// sorted codeword list over all permutations. Exponential; small n only.
pub fn binary_permutation_canon(code: &GeneratorCode) -> Vec<u64> {
    let n = code.n();
    let words: Vec<u64> = naive_codewords(code)
        .iter()
        .map(|w| w.iter().enumerate().fold(0u64, |acc, (i, &x)| acc | ((x as u64) << i)))
        .collect();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u64>> = None;
    loop {
        let mut mapped: Vec<u64> = words
            .iter()
            .map(|&w| (0..n).fold(0u64, |acc, i| acc | (((w >> i) & 1) << perm[i])))
            .collect();
        mapped.sort_unstable();
        if best.as_ref().is_none_or(|b| mapped < *b) {
            best = Some(mapped);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
