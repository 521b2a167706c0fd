//! Toeplitz, circulant and negacirculant matrices and the double codes
//! built from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::code::{big_pow, dot, FqVector, GeneratorCode};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Largest number of triples the brute-force counter will enumerate.
pub const BRUTEFORCE_TRIPLE_LIMIT: u64 = 1 << 22;

/// Parameters `(t, a, b)` of an `m x m` Toeplitz matrix: diagonal `t`,
/// above-diagonal bands `a_1..a_{m-1}`, below-diagonal bands `b_1..b_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ToeplitzTriple {
    field: Field,
    t: Elem,
    a: Vec<Elem>,
    b: Vec<Elem>,
}

/// Which of the two circulant identities a triple satisfies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TripleKind {
    Circulant,
    Negacirculant,
    Both,
    Neither,
}

impl ToeplitzTriple {
    pub fn new(field: Field, t: Elem, a: &FqVector, b: &FqVector) -> Result<Self> {
        field.elem(t.code())?;
        for v in [a, b] {
            if v.field() != field {
                return Err(Error::FieldMismatch {
                    left: field.q(),
                    right: v.field().q(),
                });
            }
        }
        if a.len() != b.len() {
            return Err(Error::LengthMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        Ok(ToeplitzTriple {
            field,
            t,
            a: a.elems().to_vec(),
            b: b.elems().to_vec(),
        })
    }

    /// Parses `"t;a;b"`, e.g. `"0;(1,1,0,1,0);(1,1,1,0,0)"`.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split(';').collect();
        let [t, a, b] = parts[..] else {
            return Err(Error::Parse {
                what: "triple (expected \"t;a;b\")",
                input: text.to_string(),
            });
        };
        let t = field.parse_element(t.trim())?;
        let a = FqVector::parse(field, a)?;
        let b = FqVector::parse(field, b)?;
        Self::new(field, t, &a, &b)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn t(&self) -> Elem {
        self.t
    }

    pub fn a(&self) -> &[Elem] {
        &self.a
    }

    pub fn b(&self) -> &[Elem] {
        &self.b
    }

    /// Block size.
    pub fn m(&self) -> usize {
        self.a.len() + 1
    }

    /// Code length `2m`.
    pub fn n(&self) -> usize {
        2 * self.m()
    }

    /// The `m x m` matrix `T(t, a, b)`.
    pub fn toeplitz_matrix(&self) -> Vec<Vec<Elem>> {
        let m = self.m();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| match j.cmp(&i) {
                        std::cmp::Ordering::Equal => self.t,
                        std::cmp::Ordering::Greater => self.a[j - i - 1],
                        std::cmp::Ordering::Less => self.b[i - j - 1],
                    })
                    .collect()
            })
            .collect()
    }

    /// The double Toeplitz code with generator `(I | T(t, a, b))`.
    pub fn code(&self) -> GeneratorCode {
        systematic(self.field, &self.toeplitz_matrix())
    }

    /// `(t, b, a)`: transposes the Toeplitz block.
    pub fn swapped(&self) -> Self {
        ToeplitzTriple {
            field: self.field,
            t: self.t,
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    /// `(s t, s a, s b)`.
    pub fn scaled(&self, s: Elem) -> Self {
        let f = self.field;
        ToeplitzTriple {
            field: f,
            t: f.mul(s, self.t),
            a: self.a.iter().map(|&x| f.mul(s, x)).collect(),
            b: self.b.iter().map(|&x| f.mul(s, x)).collect(),
        }
    }

    /// Tests `a_i = b_{m-i}` (circulant) and `a_i = -b_{m-i}` (negacirculant).
    pub fn classify(&self) -> TripleKind {
        let f = self.field;
        let m = self.m();
        let circ = (1..m).all(|i| self.a[i - 1] == self.b[m - i - 1]);
        let nega = (1..m).all(|i| self.a[i - 1] == f.neg(self.b[m - i - 1]));
        match (circ, nega) {
            (true, true) => TripleKind::Both,
            (true, false) => TripleKind::Circulant,
            (false, true) => TripleKind::Negacirculant,
            (false, false) => TripleKind::Neither,
        }
    }

    /// Whether `(u, v)` is a codeword, i.e. `v = u T`.
    pub fn contains(&self, u: &FqVector, v: &FqVector) -> Result<bool> {
        let m = self.m();
        for x in [u, v] {
            if x.len() != m {
                return Err(Error::LengthMismatch {
                    expected: m,
                    got: x.len(),
                });
            }
        }
        let f = self.field;
        let t = self.toeplitz_matrix();
        Ok((0..m).all(|j| {
            let col: Vec<Elem> = t.iter().map(|row| row[j]).collect();
            dot(f, u.elems(), &col) == v.get(j)
        }))
    }

    /// Element codes of `(t, a_1..a_{m-1}, b_1..b_{m-1})`; the order used for
    /// enumeration and for picking class representatives.
    pub fn digits(&self) -> Vec<u8> {
        std::iter::once(self.t)
            .chain(self.a.iter().copied())
            .chain(self.b.iter().copied())
            .map(Elem::code)
            .collect()
    }

    pub(crate) fn from_digits(field: Field, digits: &[u8]) -> Self {
        let m = digits.len().div_ceil(2);
        ToeplitzTriple {
            field,
            t: Elem(digits[0]),
            a: digits[1..m].iter().map(|&c| Elem(c)).collect(),
            b: digits[m..].iter().map(|&c| Elem(c)).collect(),
        }
    }
}

impl fmt::Display for ToeplitzTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{};{};{}",
            self.field.render_element(self.t),
            self.field.render_elements(&self.a),
            self.field.render_elements(&self.b)
        )
    }
}

impl PartialOrd for ToeplitzTriple {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ToeplitzTriple {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.field.q(), self.digits()).cmp(&(other.field.q(), other.digits()))
    }
}

fn systematic(field: Field, block: &[Vec<Elem>]) -> GeneratorCode {
    let m = block.len();
    let rows = block
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row = vec![Elem::ZERO; m];
            row[i] = Elem::ONE;
            row.extend_from_slice(r);
            row
        })
        .collect();
    GeneratorCode::systematic_unchecked(field, rows)
}

/// Circulant (`mu = 1`) or negacirculant (`mu = -1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Circulant,
    Negacirculant,
}

/// A circulant or negacirculant matrix given by its first row.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CirculantSpec {
    field: Field,
    r: Vec<Elem>,
    sign: Sign,
}

impl CirculantSpec {
    pub fn new(r: &FqVector, sign: Sign) -> Result<Self> {
        if r.is_empty() {
            return Err(Error::InvalidArgument("first row must be nonempty".into()));
        }
        Ok(CirculantSpec {
            field: r.field(),
            r: r.elems().to_vec(),
            sign,
        })
    }

    pub fn circulant(r: &FqVector) -> Result<Self> {
        Self::new(r, Sign::Circulant)
    }

    pub fn negacirculant(r: &FqVector) -> Result<Self> {
        Self::new(r, Sign::Negacirculant)
    }

    /// Parses `"C:(r)"` or `"N:(r)"`.
    pub fn parse(field: Field, text: &str) -> Result<Self> {
        let text = text.trim();
        let (sign, rest) = if let Some(rest) = text.strip_prefix("C:") {
            (Sign::Circulant, rest)
        } else if let Some(rest) = text.strip_prefix("N:") {
            (Sign::Negacirculant, rest)
        } else {
            return Err(Error::Parse {
                what: "circulant spec (expected \"C:(r)\" or \"N:(r)\")",
                input: text.to_string(),
            });
        };
        Self::new(&FqVector::parse(field, rest)?, sign)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn r(&self) -> &[Elem] {
        &self.r
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn m(&self) -> usize {
        self.r.len()
    }

    fn mu(&self) -> Elem {
        match self.sign {
            Sign::Circulant => Elem::ONE,
            Sign::Negacirculant => self.field.minus_one(),
        }
    }

    /// Row `i` is `r` shifted right by `i`, wrapped entries multiplied by `mu`.
    pub fn matrix(&self) -> Vec<Vec<Elem>> {
        let m = self.m();
        let mu = self.mu();
        (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if j >= i {
                            self.r[j - i]
                        } else {
                            self.field.mul(mu, self.r[m + j - i])
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// `t = r_1`, `a = (r_2..r_m)`, `b_i = mu r_{m-i+1}`.
    pub fn to_triple(&self) -> ToeplitzTriple {
        let m = self.m();
        let mu = self.mu();
        ToeplitzTriple {
            field: self.field,
            t: self.r[0],
            a: self.r[1..].to_vec(),
            b: (1..m).map(|i| self.field.mul(mu, self.r[m - i])).collect(),
        }
    }

    /// The double (nega)circulant code with generator `(I | A)`.
    pub fn code(&self) -> GeneratorCode {
        systematic(self.field, &self.matrix())
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.sign {
            Sign::Circulant => "C",
            Sign::Negacirculant => "N",
        };
        write!(f, "{tag}:{}", self.field.render_elements(&self.r))
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "C" | "DC" | "circulant" => Ok(Sign::Circulant),
            "N" | "NC" | "negacirculant" => Ok(Sign::Negacirculant),
            _ => Err(Error::Parse {
                what: "family",
                input: s.to_string(),
            }),
        }
    }
}

pub(crate) fn check_even(n: usize) -> Result<usize> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::OddLength(n));
    }
    Ok(n / 2)
}

/// Number of double Toeplitz codes of length `n` containing `(u, v)`:
/// `q^(n-1)` for `u = v = 0`, none for `u = 0 != v`, else `q^(n/2-1)`.
pub fn count_codes_containing(field: Field, n: usize, u: &FqVector, v: &FqVector) -> Result<BigUint> {
    let m = check_even(n)?;
    check_halves(m, u, v)?;
    let q = field.q();
    Ok(match (u.weight(), v.weight()) {
        (0, 0) => big_pow(q, n - 1),
        (0, _) => BigUint::zero(),
        _ => big_pow(q, m - 1),
    })
}

/// The same count by testing every triple.
pub fn count_codes_containing_bruteforce(
    field: Field,
    n: usize,
    u: &FqVector,
    v: &FqVector,
) -> Result<BigUint> {
    let m = check_even(n)?;
    check_halves(m, u, v)?;
    let total = triple_count(field, m)
        .filter(|&c| c <= BRUTEFORCE_TRIPLE_LIMIT)
        .ok_or_else(|| Error::SearchBudgetExceeded {
            what: format!("all double Toeplitz codes of length {n} over {field}"),
            limit: BRUTEFORCE_TRIPLE_LIMIT as u128,
        })?;
    let mut count = 0u64;
    for index in 0..total {
        if triple_at(field, m, index).contains(u, v)? {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

fn check_halves(m: usize, u: &FqVector, v: &FqVector) -> Result<()> {
    for x in [u, v] {
        if x.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                got: x.len(),
            });
        }
    }
    Ok(())
}

/// `q^(2m-1)`, the number of triples of block size `m`, if it fits in `u64`.
pub fn triple_count(field: Field, m: usize) -> Option<u64> {
    (field.q() as u64).checked_pow(u32::try_from(2 * m - 1).ok()?)
}

/// The triple at position `index` of the enumeration order: lexicographic on
/// `(t, a_1, .., a_{m-1}, b_1, .., b_{m-1})` with `b_{m-1}` varying fastest.
pub fn triple_at(field: Field, m: usize, mut index: u64) -> ToeplitzTriple {
    let q = field.q() as u64;
    let mut digits = vec![0u8; 2 * m - 1];
    for d in digits.iter_mut().rev() {
        *d = (index % q) as u8;
        index /= q;
    }
    ToeplitzTriple::from_digits(field, &digits)
}

/// Position of a triple in the enumeration order.
pub fn triple_index(triple: &ToeplitzTriple) -> Option<u64> {
    let q = triple.field.q() as u64;
    triple
        .digits()
        .iter()
        .try_fold(0u64, |acc, &d| acc.checked_mul(q)?.checked_add(d as u64))
}

/// All triples of block size `m`, in enumeration order.
pub fn all_triples(field: Field, m: usize) -> impl Iterator<Item = ToeplitzTriple> {
    let total = triple_count(field, m).expect("triple space fits in u64");
    (0..total).map(move |i| triple_at(field, m, i))
}

/// The vector of length `len` at position `index` of lexicographic order
/// (last entry fastest).
pub(crate) fn vector_at(field: Field, len: usize, mut index: u64) -> Vec<Elem> {
    let q = field.q() as u64;
    let mut v = vec![Elem::ZERO; len];
    for x in v.iter_mut().rev() {
        *x = Elem((index % q) as u8);
        index /= q;
    }
    v
}
