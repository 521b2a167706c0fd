//! Average weight enumerator over all double Toeplitz codes of a length,
//! and the length thresholds it guarantees.

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::code::{big_pow, Budget, WeightEnumerator};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::structured::{check_even, triple_at, triple_count};

/// Default number of lengths past a candidate threshold that must also pass.
pub const DEFAULT_HORIZON: usize = 200;

/// Largest `d` accepted by the threshold computation.
pub const MAX_THRESHOLD_D: usize = 50;

/// Codeword count the brute-force enumerator will visit, summed over codes.
pub const BRUTEFORCE_WORD_LIMIT: u64 = 1 << 26;

/// Pascal's triangle in arbitrary precision, grown on demand.
#[derive(Clone, Debug, Default)]
pub struct Binomials {
    rows: Vec<Vec<BigUint>>,
}

impl Binomials {
    pub fn new() -> Self {
        Binomials {
            rows: vec![vec![BigUint::from(1u32)]],
        }
    }

    fn ensure(&mut self, n: usize) {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0 present");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigUint::from(1u32));
            for j in 1..prev.len() {
                row.push(&prev[j - 1] + &prev[j]);
            }
            row.push(BigUint::from(1u32));
            self.rows.push(row);
        }
    }

    /// `n` choose `k` (zero for `k > n`).
    pub fn get(&mut self, n: usize, k: usize) -> BigUint {
        self.ensure(n);
        self.rows[n].get(k).cloned().unwrap_or_default()
    }

    pub fn row(&mut self, n: usize) -> &[BigUint] {
        self.ensure(n);
        &self.rows[n]
    }
}

fn coefficient(field: Field, n: usize, j: usize, binom: &mut Binomials) -> BigUint {
    let q = field.q();
    let m = n / 2;
    if j == 0 {
        return big_pow(q, n - 1);
    }
    let mut c = binom.get(n, j);
    if j <= m {
        c -= binom.get(m, j);
    }
    c * big_pow(q, m - 1) * big_pow(q - 1, j)
}

/// The closed form of the average enumerator.
pub fn average_weight_enumerator(field: Field, n: usize) -> Result<WeightEnumerator> {
    average_weight_enumerator_with(field, n, &mut Binomials::new())
}

pub fn average_weight_enumerator_with(
    field: Field,
    n: usize,
    binom: &mut Binomials,
) -> Result<WeightEnumerator> {
    check_even(n)?;
    Ok(WeightEnumerator::new(
        (0..=n).map(|j| coefficient(field, n, j, binom)).collect(),
    ))
}

/// The average enumerator as the sum of the weight enumerators of every code.
pub fn average_weight_enumerator_bruteforce(field: Field, n: usize) -> Result<WeightEnumerator> {
    let m = check_even(n)?;
    let over = || Error::SearchBudgetExceeded {
        what: format!("all codewords of all double Toeplitz codes of length {n} over {field}"),
        limit: BRUTEFORCE_WORD_LIMIT as u128,
    };
    let codes = triple_count(field, m).ok_or_else(over)?;
    let words = (field.q() as u64).checked_pow(m as u32).ok_or_else(over)?;
    if codes.checked_mul(words).is_none_or(|w| w > BRUTEFORCE_WORD_LIMIT) {
        return Err(over());
    }
    let budget = Budget::default();
    let sums = (0..codes)
        .into_par_iter()
        .map(|i| triple_at(field, m, i).code().serial_histogram(&budget))
        .try_reduce(
            || vec![0u64; n + 1],
            |mut acc, h| {
                for (a, x) in acc.iter_mut().zip(h) {
                    *a += x;
                }
                Ok(acc)
            },
        )?;
    Ok(WeightEnumerator::from_counts(&sums))
}

/// Evaluates the averaging bound `sum_{i=1}^{d-1} psi_i < q^(n-1) (q-1)` with
/// per-length caches, so sweeping many `(n, d)` pairs stays cheap.
#[derive(Clone, Debug)]
pub struct ThresholdCalculator {
    field: Field,
    binom: Binomials,
    prefix: std::collections::HashMap<usize, Vec<BigUint>>,
}

impl ThresholdCalculator {
    pub fn new(field: Field) -> Self {
        ThresholdCalculator {
            field,
            binom: Binomials::new(),
            prefix: Default::default(),
        }
    }

    /// `prefix[s] = psi_1 + ... + psi_s` for `s <= MAX_THRESHOLD_D`.
    fn prefix(&mut self, n: usize) -> &[BigUint] {
        if !self.prefix.contains_key(&n) {
            let top = MAX_THRESHOLD_D.min(n);
            let mut sums = vec![BigUint::zero()];
            for j in 1..=top {
                let c = coefficient(self.field, n, j, &mut self.binom);
                sums.push(sums[j - 1].clone() + c);
            }
            self.prefix.insert(n, sums);
        }
        &self.prefix[&n]
    }

    pub fn holds(&mut self, n: usize, d: usize) -> Result<bool> {
        check_even(n)?;
        if d == 0 {
            return Err(Error::InvalidArgument("d must be at least 1".into()));
        }
        let q = self.field.q();
        let rhs = big_pow(q, n - 1) * BigUint::from(q - 1);
        if d - 1 > MAX_THRESHOLD_D.min(n) {
            let mut binom = std::mem::take(&mut self.binom);
            let sum: BigUint = (1..d.min(n + 1))
                .map(|j| coefficient(self.field, n, j, &mut binom))
                .sum();
            self.binom = binom;
            return Ok(sum < rhs);
        }
        let prefix = self.prefix(n);
        Ok(prefix[d - 1] < rhs)
    }

    /// Smallest even `n` such that the bound holds at every even length in
    /// `[n, n + horizon]`.
    pub fn threshold(&mut self, d: usize, horizon: usize) -> Result<LengthThreshold> {
        if !(1..=MAX_THRESHOLD_D).contains(&d) {
            return Err(Error::InvalidArgument(format!(
                "d = {d} is outside the supported range 1..={MAX_THRESHOLD_D}"
            )));
        }
        let mut start = 2;
        let mut passing = Vec::new();
        let mut n = 2;
        loop {
            if self.holds(n, d)? {
                passing.push(n);
                if n - start >= horizon {
                    break;
                }
            } else {
                start = n + 2;
            }
            n += 2;
        }
        let isolated = passing.into_iter().filter(|&p| p < start).collect();
        Ok(LengthThreshold {
            q: self.field.q(),
            d,
            n: start,
            horizon,
            isolated_passes: isolated,
        })
    }
}

/// Result of a threshold computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LengthThreshold {
    pub q: u8,
    pub d: usize,
    /// The threshold length.
    pub n: usize,
    pub horizon: usize,
    /// Lengths below the threshold where the bound already held; nonempty
    /// means the bound is not monotone in `n` for this `d`.
    pub isolated_passes: Vec<usize>,
}

impl LengthThreshold {
    pub fn is_monotone(&self) -> bool {
        self.isolated_passes.is_empty()
    }
}

pub fn existence_bound_holds(field: Field, n: usize, d: usize) -> Result<bool> {
    ThresholdCalculator::new(field).holds(n, d)
}

pub fn minimal_guaranteed_length(field: Field, d: usize) -> Result<LengthThreshold> {
    ThresholdCalculator::new(field).threshold(d, DEFAULT_HORIZON)
}

/// Thresholds for every `d` in `dmin..=dmax`.
pub fn threshold_table(field: Field, dmin: usize, dmax: usize, horizon: usize) -> Result<Vec<LengthThreshold>> {
    let mut calc = ThresholdCalculator::new(field);
    (dmin..=dmax).map(|d| calc.threshold(d, horizon)).collect()
}
