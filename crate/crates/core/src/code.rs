//! Linear codes given by a generator matrix.

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::packed::{self, Answer, Query};

/// A vector over F_q.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FqVector {
    field: Field,
    elems: Vec<Elem>,
}

impl FqVector {
    pub fn new(field: Field, elems: Vec<Elem>) -> Result<Self> {
        for &e in &elems {
            field.elem(e.code())?;
        }
        Ok(FqVector { field, elems })
    }

    pub fn zeros(field: Field, len: usize) -> Self {
        FqVector {
            field,
            elems: vec![Elem::ZERO; len],
        }
    }

    /// The `i`-th unit vector of length `len`.
    pub fn unit(field: Field, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.elems[i] = Elem::ONE;
        v
    }

    pub fn from_codes(field: Field, codes: &[u8]) -> Result<Self> {
        Self::new(field, codes.iter().map(|&c| Elem(c)).collect())
    }

    pub fn parse(field: Field, text: &str) -> Result<Self> {
        Ok(FqVector {
            field,
            elems: field.parse_elements(text)?,
        })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.elems
    }

    pub fn into_elems(self) -> Vec<Elem> {
        self.elems
    }

    pub fn get(&self, i: usize) -> Elem {
        self.elems[i]
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.elems.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn scale(&self, a: Elem) -> Self {
        FqVector {
            field: self.field,
            elems: self.elems.iter().map(|&x| self.field.mul(a, x)).collect(),
        }
    }

    /// Standard inner product `sum x_i y_i`.
    pub fn dot(&self, other: &FqVector) -> Result<Elem> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                got: other.len(),
            });
        }
        Ok(dot(self.field, &self.elems, &other.elems))
    }
}

impl fmt::Display for FqVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.field.render_elements(&self.elems))
    }
}

pub(crate) fn dot(field: Field, x: &[Elem], y: &[Elem]) -> Elem {
    x.iter()
        .zip(y)
        .fold(Elem::ZERO, |acc, (&a, &b)| field.add(acc, field.mul(a, b)))
}

/// Limits on exhaustive message-space enumeration, as a maximum dimension
/// per field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_k_f2: usize,
    pub max_k_f3: usize,
    pub max_k_f4: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_k_f2: 24,
            max_k_f3: 15,
            max_k_f4: 13,
        }
    }
}

impl Budget {
    /// Raises every per-field limit to at least `k`.
    pub fn with_max_k(k: usize) -> Self {
        let d = Budget::default();
        Budget {
            max_k_f2: d.max_k_f2.max(k),
            max_k_f3: d.max_k_f3.max(k),
            max_k_f4: d.max_k_f4.max(k),
        }
    }

    pub fn max_k(&self, field: Field) -> usize {
        match field.q() {
            2 => self.max_k_f2,
            3 => self.max_k_f3,
            _ => self.max_k_f4,
        }
    }

    pub fn check(&self, field: Field, k: usize) -> Result<()> {
        let max_k = self.max_k(field);
        if k > max_k {
            return Err(Error::BudgetExceeded {
                q: field.q(),
                k,
                max_k,
            });
        }
        Ok(())
    }
}

/// Exact weight distribution `coeffs[j]` = number of weight-`j` terms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightEnumerator {
    coeffs: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        WeightEnumerator { coeffs }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        WeightEnumerator {
            coeffs: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    /// Length of the underlying vectors.
    pub fn n(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &BigUint {
        &self.coeffs[j]
    }

    /// Value at `y = 1`.
    pub fn total(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// Smallest `j >= 1` with a nonzero coefficient.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&j| !self.coeffs[j].is_zero())
    }

    pub fn add_assign(&mut self, other: &WeightEnumerator) -> Result<()> {
        if self.coeffs.len() != other.coeffs.len() {
            return Err(Error::LengthMismatch {
                expected: self.coeffs.len(),
                got: other.coeffs.len(),
            });
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn zero(n: usize) -> Self {
        WeightEnumerator {
            coeffs: vec![BigUint::zero(); n + 1],
        }
    }

    /// JSON array of decimal strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("string array serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|_| Error::Parse {
            what: "weight enumerator JSON",
            input: text.to_string(),
        })
    }
}

impl Serialize for WeightEnumerator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(|c| c.to_str_radix(10)))
    }
}

impl<'de> Deserialize<'de> for WeightEnumerator {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(d)?;
        let coeffs = raw
            .iter()
            .map(|s| {
                BigUint::parse_bytes(s.as_bytes(), 10)
                    .ok_or_else(|| serde::de::Error::custom(format!("not a decimal: {s:?}")))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(WeightEnumerator { coeffs })
    }
}

/// An `[n, k]` code over F_q presented by `k` linearly independent rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorCode {
    field: Field,
    n: usize,
    rows: Vec<Vec<Elem>>,
}

impl GeneratorCode {
    /// Builds a code from generator rows; fails unless they are independent.
    pub fn new(field: Field, n: usize, rows: Vec<FqVector>) -> Result<Self> {
        let mut raw = Vec::with_capacity(rows.len());
        for r in rows {
            if r.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.q(),
                    right: r.field().q(),
                });
            }
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            raw.push(r.into_elems());
        }
        Self::from_rows(field, n, raw)
    }

    pub(crate) fn from_rows(field: Field, n: usize, rows: Vec<Vec<Elem>>) -> Result<Self> {
        let k = rows.len();
        let (_, pivots) = rref(field, n, rows.clone());
        if pivots.len() != k {
            return Err(Error::RankDeficient {
                rank: pivots.len(),
                k,
            });
        }
        Ok(GeneratorCode { field, n, rows })
    }

    /// Codes from the structured constructors skip the rank check: `(I | A)`
    /// always has full rank.
    pub(crate) fn systematic_unchecked(field: Field, rows: Vec<Vec<Elem>>) -> Self {
        let n = rows.first().map_or(0, Vec::len);
        GeneratorCode { field, n, rows }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Elem>] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> FqVector {
        FqVector {
            field: self.field,
            elems: self.rows[i].clone(),
        }
    }

    /// `m * G`.
    pub fn encode(&self, m: &FqVector) -> Result<FqVector> {
        if m.len() != self.k() {
            return Err(Error::LengthMismatch {
                expected: self.k(),
                got: m.len(),
            });
        }
        let f = self.field;
        let mut out = vec![Elem::ZERO; self.n];
        for (&c, row) in m.elems().iter().zip(&self.rows) {
            if c.is_zero() {
                continue;
            }
            for (x, &g) in out.iter_mut().zip(row) {
                *x = f.add(*x, f.mul(c, g));
            }
        }
        Ok(FqVector {
            field: f,
            elems: out,
        })
    }

    fn run(&self, query: Query, budget: &Budget) -> Result<Answer> {
        budget.check(self.field, self.k())?;
        packed::evaluate(self.field, self.n, &self.rows, query, true)
    }

    pub fn weight_enumerator(&self) -> Result<WeightEnumerator> {
        self.weight_enumerator_within(&Budget::default())
    }

    pub fn weight_enumerator_within(&self, budget: &Budget) -> Result<WeightEnumerator> {
        match self.run(Query::Histogram, budget)? {
            Answer::Histogram(h) => Ok(WeightEnumerator::from_counts(&h)),
            _ => unreachable!(),
        }
    }

    pub fn minimum_weight(&self) -> Result<usize> {
        self.minimum_weight_within(&Budget::default())
    }

    pub fn minimum_weight_within(&self, budget: &Budget) -> Result<usize> {
        if self.k() == 0 {
            return Err(Error::InvalidArgument(
                "minimum weight of the zero code is undefined".into(),
            ));
        }
        match self.run(Query::MinWeight, budget)? {
            Answer::MinWeight(w) => Ok(w),
            _ => unreachable!(),
        }
    }

    /// True iff no nonzero codeword has weight below `d`. Stops at the first
    /// offending codeword.
    pub fn min_weight_at_least(&self, d: usize) -> Result<bool> {
        self.min_weight_at_least_within(d, &Budget::default())
    }

    pub fn min_weight_at_least_within(&self, d: usize, budget: &Budget) -> Result<bool> {
        if d <= 1 {
            return Ok(true);
        }
        match self.run(Query::AtLeast(d), budget)? {
            Answer::AtLeast(b) => Ok(b),
            _ => unreachable!(),
        }
    }

    /// All nonzero codewords of weight at most `w`, in enumeration order.
    pub fn codewords_up_to_weight(&self, w: usize, budget: &Budget) -> Result<Vec<FqVector>> {
        match self.run(Query::Collect(w), budget)? {
            Answer::Collect(words) => words
                .into_iter()
                .map(|c| FqVector::from_codes(self.field, &c))
                .collect(),
            _ => unreachable!(),
        }
    }

    /// Same as [`Self::codewords_up_to_weight`] but single-threaded, for
    /// callers that already parallelize at a coarser level.
    pub(crate) fn raw_codewords_up_to_weight(&self, w: usize, budget: &Budget) -> Result<Vec<Vec<u8>>> {
        budget.check(self.field, self.k())?;
        match packed::evaluate(self.field, self.n, &self.rows, Query::Collect(w), false)? {
            Answer::Collect(words) => Ok(words),
            _ => unreachable!(),
        }
    }

    pub(crate) fn serial_min_weight_at_least(&self, d: usize, budget: &Budget) -> Result<bool> {
        if d <= 1 {
            return Ok(true);
        }
        budget.check(self.field, self.k())?;
        match packed::evaluate(self.field, self.n, &self.rows, Query::AtLeast(d), false)? {
            Answer::AtLeast(b) => Ok(b),
            _ => unreachable!(),
        }
    }

    pub(crate) fn serial_minimum_weight(&self, budget: &Budget) -> Result<usize> {
        budget.check(self.field, self.k())?;
        match packed::evaluate(self.field, self.n, &self.rows, Query::MinWeight, false)? {
            Answer::MinWeight(w) => Ok(w),
            _ => unreachable!(),
        }
    }

    pub(crate) fn serial_histogram(&self, budget: &Budget) -> Result<Vec<u64>> {
        budget.check(self.field, self.k())?;
        match packed::evaluate(self.field, self.n, &self.rows, Query::Histogram, false)? {
            Answer::Histogram(h) => Ok(h),
            _ => unreachable!(),
        }
    }

    /// Generator of the dual code. Built from the reduced row-echelon form:
    /// each non-pivot column `c` contributes the vector with `1` at `c` and
    /// `-R[i][c]` at the `i`-th pivot.
    pub fn dual_code(&self) -> GeneratorCode {
        let f = self.field;
        let (reduced, pivots) = rref(f, self.n, self.rows.clone());
        let mut is_pivot = vec![false; self.n];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&c| !is_pivot[c])
            .map(|c| {
                let mut h = vec![Elem::ZERO; self.n];
                h[c] = Elem::ONE;
                for (i, &p) in pivots.iter().enumerate() {
                    h[p] = f.neg(reduced[i][c]);
                }
                h
            })
            .collect();
        GeneratorCode {
            field: f,
            n: self.n,
            rows,
        }
    }

    pub fn is_formally_self_dual(&self) -> Result<bool> {
        self.is_formally_self_dual_within(&Budget::default())
    }

    pub fn is_formally_self_dual_within(&self, budget: &Budget) -> Result<bool> {
        let dual = self.dual_code();
        budget.check(self.field, dual.k())?;
        Ok(self.weight_enumerator_within(budget)? == dual.weight_enumerator_within(budget)?)
    }

    /// Membership test through a parity-check matrix.
    pub fn contains(&self, x: &FqVector) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: x.len(),
            });
        }
        let dual = self.dual_code();
        Ok(dual
            .rows
            .iter()
            .all(|h| dot(self.field, h, x.elems()).is_zero()))
    }

    /// True when both generators span the same subspace.
    pub fn same_code(&self, other: &GeneratorCode) -> bool {
        if self.field != other.field || self.n != other.n || self.k() != other.k() {
            return false;
        }
        let (a, _) = rref(self.field, self.n, self.rows.clone());
        let (b, _) = rref(other.field, other.n, other.rows.clone());
        a == b
    }

    /// Text form: one row per line, entries comma-separated.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let r = self.field.render_elements(row);
            s.push_str(&r[1..r.len() - 1]);
            s.push('\n');
        }
        s
    }

    pub fn from_text(field: Field, text: &str) -> Result<Self> {
        let rows: Vec<Vec<Elem>> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| field.parse_elements(l))
            .collect::<Result<_>>()?;
        let n = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::LengthMismatch {
                expected: n,
                got: bad.len(),
            });
        }
        Self::from_rows(field, n, rows)
    }
}

/// Reduced row-echelon form; returns the nonzero rows and their pivot columns.
pub(crate) fn rref(field: Field, n: usize, mut rows: Vec<Vec<Elem>>) -> (Vec<Vec<Elem>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..n {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = field.inv(rows[r][col]).expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = field.mul(inv, *x);
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = field.neg(rows[i][col]);
            let (pivot_row, target) = if i < r {
                let (a, b) = rows.split_at_mut(r);
                (&b[0], &mut a[i])
            } else {
                let (a, b) = rows.split_at_mut(i);
                (&a[r], &mut b[0])
            };
            for (t, &pv) in target.iter_mut().zip(pivot_row.iter()) {
                *t = field.add(*t, field.mul(factor, pv));
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

/// `q^e` as a big integer.
pub(crate) fn big_pow(q: u8, e: usize) -> BigUint {
    num_traits::pow(BigUint::from(q), e)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn code(field: Field, rows: &[&str]) -> GeneratorCode {
        let rows: Vec<FqVector> = rows.iter().map(|r| FqVector::parse(field, r).unwrap()).collect();
        let n = rows[0].len();
        GeneratorCode::new(field, n, rows).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(FqVector::zeros(Field::F2, 5).weight(), 0);
        assert_eq!(FqVector::parse(Field::F3, "(1,2,0,2)").unwrap().weight(), 3);
        assert_eq!(FqVector::parse(Field::F4, "(1,w,v,0,0,1)").unwrap().weight(), 4);
    }

    #[test]
    fn encode_examples() {
        let c = code(Field::F2, &["(1,0,1,1)", "(0,1,1,0)"]);
        let m = FqVector::parse(Field::F2, "(1,1)").unwrap();
        assert_eq!(c.encode(&m).unwrap().to_string(), "(1,1,0,1)");
        assert_eq!(c.encode(&FqVector::zeros(Field::F2, 2)).unwrap().weight(), 0);
        for i in 0..2 {
            let e = FqVector::unit(Field::F2, 2, i);
            assert_eq!(c.encode(&e).unwrap(), c.row(i));
        }
        assert_eq!(
            c.encode(&FqVector::zeros(Field::F2, 3)),
            Err(Error::LengthMismatch {
                expected: 2,
                got: 3
            })
        );
    }

    #[test]
    fn rank_is_checked() {
        let rows = vec![
            FqVector::parse(Field::F3, "(1,2,0)").unwrap(),
            FqVector::parse(Field::F3, "(2,1,0)").unwrap(),
        ];
        assert_eq!(
            GeneratorCode::new(Field::F3, 3, rows),
            Err(Error::RankDeficient { rank: 1, k: 2 })
        );
    }

    #[test]
    fn repetition_code_enumerator_and_dual() {
        let c = code(Field::F2, &["(1,1)"]);
        let we = c.weight_enumerator().unwrap();
        assert_eq!(we, WeightEnumerator::from_counts(&[1, 0, 1]));
        assert!(c.same_code(&c.dual_code()));
        assert!(c.is_formally_self_dual().unwrap());
    }

    #[test]
    fn not_formally_self_dual() {
        // {000, 110}: W = 1 + y^2, dual has 4 words
        let c = code(Field::F2, &["(1,1,0)"]);
        assert!(!c.is_formally_self_dual().unwrap());
        assert_eq!(c.dual_code().k(), 2);
    }

    #[test]
    fn systematic_dual_is_minus_a_transpose() {
        let f = Field::F3;
        let c = code(f, &["(1,0,2,1)", "(0,1,1,1)"]);
        let d = c.dual_code();
        // A = [[2,1],[1,1]], -A^T = [[1,2],[2,2]]
        let expect = code(f, &["(1,2,1,0)", "(2,2,0,1)"]);
        assert_eq!(d.rows(), expect.rows());
        for h in d.rows() {
            for g in c.rows() {
                assert!(dot(f, h, g).is_zero());
            }
        }
    }

    #[test]
    fn biduality_on_non_systematic_generator() {
        let f = Field::F4;
        let c = code(f, &["(0,1,w,0,v)", "(0,0,1,1,1)", "(1,0,0,w,0)"]);
        let dd = c.dual_code().dual_code();
        assert!(c.same_code(&dd));
        for h in c.dual_code().rows() {
            for g in c.rows() {
                assert!(dot(f, h, g).is_zero());
            }
        }
    }

    #[test]
    fn full_space_has_empty_dual() {
        let c = code(Field::F2, &["(1,0)", "(0,1)"]);
        let d = c.dual_code();
        assert_eq!(d.k(), 0);
        assert_eq!(d.weight_enumerator().unwrap(), WeightEnumerator::from_counts(&[1, 0, 0]));
        assert!(d.minimum_weight().is_err());
    }

    #[test]
    fn budget_refusal_names_limit() {
        let f = Field::F4;
        let k = 14;
        let rows: Vec<FqVector> = (0..k).map(|i| FqVector::unit(f, k, i)).collect();
        let c = GeneratorCode::new(f, k, rows).unwrap();
        let err = c.weight_enumerator().unwrap_err();
        assert_eq!(err, Error::BudgetExceeded { q: 4, k: 14, max_k: 13 });
        assert!(err.to_string().contains("4^13"));
        assert!(c.weight_enumerator_within(&Budget::with_max_k(14)).is_ok());
    }

    #[test]
    fn min_weight_at_least_trivial_bound() {
        let c = code(Field::F2, &["(1,0,0,0)", "(0,1,0,1)"]);
        assert!(c.min_weight_at_least(1).unwrap());
        assert!(!c.min_weight_at_least(2).unwrap());
        assert_eq!(c.minimum_weight().unwrap(), 1);
    }

    #[test]
    fn text_and_json_forms() {
        let c = code(Field::F4, &["(1,0,w,v)", "(0,1,1,w)"]);
        let text = c.to_text();
        assert_eq!(text, "1,0,w,v\n0,1,1,w\n");
        assert_eq!(GeneratorCode::from_text(Field::F4, &text).unwrap(), c);
        let we = c.weight_enumerator().unwrap();
        let json = we.to_json();
        assert!(json.starts_with("[\"1\","));
        assert_eq!(WeightEnumerator::from_json(&json).unwrap(), we);
    }

    #[test]
    fn contains_codewords_only() {
        let f = Field::F3;
        let c = code(f, &["(1,0,2,1)", "(0,1,1,1)"]);
        let m = FqVector::parse(f, "(2,1)").unwrap();
        assert!(c.contains(&c.encode(&m).unwrap()).unwrap());
        assert!(!c.contains(&FqVector::parse(f, "(1,0,0,0)").unwrap()).unwrap());
    }
}
