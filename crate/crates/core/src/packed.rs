//! Bit-sliced codeword enumeration.
//!
//! A vector over F_q is stored as two bit planes `lo`/`hi`; the element code
//! at position `j` is `lo_j + 2 * hi_j`. With that layout addition over F2
//! and F4 is XOR of both planes, and F3 addition is a handful of boolean
//! operations. Weight is `popcount(lo | hi)` for every field.
//!
//! Messages are walked in odometer order, digit 0 fastest. Moving from one
//! message to the next adds a precomputed delta per changed digit, so each
//! step costs amortized `q / (q - 1)` packed additions.

use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// Longest supported codeword, in positions.
pub const MAX_PACKED_LEN: usize = 512;

/// Below this many messages a scan stays on the calling thread.
const PARALLEL_THRESHOLD: u128 = 1 << 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Packed<const L: usize> {
    lo: [u64; L],
    hi: [u64; L],
}

impl<const L: usize> Packed<L> {
    const ZERO: Self = Packed {
        lo: [0; L],
        hi: [0; L],
    };

    fn from_codes(codes: impl IntoIterator<Item = u8>) -> Self {
        let mut p = Self::ZERO;
        for (j, c) in codes.into_iter().enumerate() {
            let (w, b) = (j / 64, j % 64);
            p.lo[w] |= u64::from(c & 1) << b;
            p.hi[w] |= u64::from(c >> 1) << b;
        }
        p
    }

    fn codes(&self, n: usize) -> Vec<u8> {
        (0..n)
            .map(|j| {
                let (w, b) = (j / 64, j % 64);
                ((self.lo[w] >> b) & 1) as u8 | (((self.hi[w] >> b) & 1) as u8) << 1
            })
            .collect()
    }

    #[inline(always)]
    fn weight(&self) -> u32 {
        let mut w = 0;
        for i in 0..L {
            w += (self.lo[i] | self.hi[i]).count_ones();
        }
        w
    }
}

pub(crate) trait PlaneAdd: Copy + Send + Sync + 'static {
    fn add<const L: usize>(x: &Packed<L>, y: &Packed<L>) -> Packed<L>;
}

/// F2 and F4: both planes add independently.
#[derive(Clone, Copy)]
pub(crate) struct Char2;

/// F3 with `lo` marking 1s and `hi` marking 2s.
#[derive(Clone, Copy)]
pub(crate) struct Ternary;

impl PlaneAdd for Char2 {
    #[inline(always)]
    fn add<const L: usize>(x: &Packed<L>, y: &Packed<L>) -> Packed<L> {
        let mut z = Packed::ZERO;
        for i in 0..L {
            z.lo[i] = x.lo[i] ^ y.lo[i];
            z.hi[i] = x.hi[i] ^ y.hi[i];
        }
        z
    }
}

impl PlaneAdd for Ternary {
    #[inline(always)]
    fn add<const L: usize>(x: &Packed<L>, y: &Packed<L>) -> Packed<L> {
        let mut z = Packed::ZERO;
        for i in 0..L {
            let t = (x.lo[i] | y.hi[i]) ^ (x.hi[i] | y.lo[i]);
            z.lo[i] = (x.hi[i] | y.hi[i]) ^ t;
            z.hi[i] = (x.lo[i] | y.lo[i]) ^ t;
        }
        z
    }
}

/// What to compute over the message space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Query {
    /// Count codewords of every weight.
    Histogram,
    /// Smallest nonzero weight.
    MinWeight,
    /// Whether every nonzero codeword has weight at least `d`.
    AtLeast(usize),
    /// All nonzero codewords of weight at most `w`, as element codes.
    Collect(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Answer {
    Histogram(Vec<u64>),
    MinWeight(usize),
    AtLeast(bool),
    Collect(Vec<Vec<u8>>),
}

struct Kernel<const L: usize> {
    n: usize,
    q: u8,
    /// `mult[i][c]` is `elem(c) * row_i`.
    mult: Vec<[Packed<L>; 4]>,
    /// `step[i][c]` is `(elem(c + 1) - elem(c)) * row_i`.
    step: Vec<[Packed<L>; 3]>,
    /// `reset[i]` is `-elem(q - 1) * row_i`, undoing a full turn of digit `i`.
    reset: Vec<Packed<L>>,
}

impl<const L: usize> Kernel<L> {
    fn new(field: Field, n: usize, rows: &[Vec<Elem>]) -> Self {
        let scaled = |row: &[Elem], a: Elem| {
            Packed::<L>::from_codes(row.iter().map(|&x| field.mul(a, x).code()))
        };
        let q = field.q();
        let top = Elem(q - 1);
        let mut mult = Vec::with_capacity(rows.len());
        let mut step = Vec::with_capacity(rows.len());
        let mut reset = Vec::with_capacity(rows.len());
        for row in rows {
            let mut m = [Packed::ZERO; 4];
            for c in field.elements() {
                m[c.code() as usize] = scaled(row, c);
            }
            let mut s = [Packed::ZERO; 3];
            for c in 0..q - 1 {
                s[c as usize] = scaled(row, field.sub(Elem(c + 1), Elem(c)));
            }
            mult.push(m);
            step.push(s);
            reset.push(scaled(row, field.neg(top)));
        }
        Kernel {
            n,
            q,
            mult,
            step,
            reset,
        }
    }

    /// Visits `start` and then every vector `start + m * G_low` for the
    /// messages `m` over the first `low` digits, in odometer order.
    /// Stops early when `visit` returns false; returns whether it finished.
    #[inline(always)]
    fn scan<A: PlaneAdd>(
        &self,
        start: Packed<L>,
        low: usize,
        stop: &AtomicBool,
        mut visit: impl FnMut(&Packed<L>) -> bool,
    ) -> bool {
        let mut cw = start;
        if !visit(&cw) {
            return false;
        }
        let top = self.q - 1;
        let mut digits = vec![0u8; low];
        let mut since_poll = 0u32;
        loop {
            let mut i = 0;
            loop {
                if i == low {
                    return true;
                }
                let d = digits[i];
                if d < top {
                    cw = A::add(&cw, &self.step[i][d as usize]);
                    digits[i] = d + 1;
                    break;
                }
                cw = A::add(&cw, &self.reset[i]);
                digits[i] = 0;
                i += 1;
            }
            if !visit(&cw) {
                return false;
            }
            since_poll += 1;
            if since_poll == 1 << 16 {
                since_poll = 0;
                if stop.load(Ordering::Relaxed) {
                    return false;
                }
            }
        }
    }

    fn prefix<A: PlaneAdd>(&self, low: usize, mut index: u64) -> Packed<L> {
        let mut start = Packed::ZERO;
        for i in low..self.mult.len() {
            let c = (index % u64::from(self.q)) as usize;
            index /= u64::from(self.q);
            start = A::add(&start, &self.mult[i][c]);
        }
        start
    }

    fn run_partition<A: PlaneAdd>(
        &self,
        low: usize,
        index: u64,
        query: Query,
        stop: &AtomicBool,
    ) -> Answer {
        let start = self.prefix::<A>(low, index);
        match query {
            Query::Histogram => {
                let mut hist = vec![0u64; self.n + 1];
                self.scan::<A>(start, low, stop, |cw| {
                    hist[cw.weight() as usize] += 1;
                    true
                });
                Answer::Histogram(hist)
            }
            Query::MinWeight => {
                let mut best = u32::MAX;
                self.scan::<A>(start, low, stop, |cw| {
                    let w = cw.weight();
                    if w != 0 && w < best {
                        best = w;
                    }
                    best > 1
                });
                Answer::MinWeight(best as usize)
            }
            Query::AtLeast(d) => {
                let d = d as u32;
                let done = self.scan::<A>(start, low, stop, |cw| {
                    let w = cw.weight();
                    w == 0 || w >= d
                });
                if !done && !stop.load(Ordering::Relaxed) {
                    stop.store(true, Ordering::Relaxed);
                    Answer::AtLeast(false)
                } else {
                    Answer::AtLeast(done)
                }
            }
            Query::Collect(maxw) => {
                let maxw = maxw as u32;
                let mut out = Vec::new();
                self.scan::<A>(start, low, stop, |cw| {
                    let w = cw.weight();
                    if w != 0 && w <= maxw {
                        out.push(cw.codes(self.n));
                    }
                    true
                });
                Answer::Collect(out)
            }
        }
    }

    fn evaluate<A: PlaneAdd>(&self, query: Query, parallel: bool) -> Answer {
        let k = self.mult.len();
        let q = u128::from(self.q);
        let total = q.pow(k as u32);
        // Split off enough high digits for a few hundred partitions.
        let mut high = 0;
        if parallel && total >= PARALLEL_THRESHOLD {
            while high < k && q.pow(high as u32) < 256 {
                high += 1;
            }
        }
        let low = k - high;
        let parts = q.pow(high as u32) as u64;
        let stop = AtomicBool::new(false);
        let answers: Vec<Answer> = if parts == 1 {
            vec![self.run_partition::<A>(low, 0, query, &stop)]
        } else {
            (0..parts)
                .into_par_iter()
                .map(|p| self.run_partition::<A>(low, p, query, &stop))
                .collect()
        };
        merge(query, self.n, answers)
    }
}

fn merge(query: Query, n: usize, answers: Vec<Answer>) -> Answer {
    match query {
        Query::Histogram => {
            let mut hist = vec![0u64; n + 1];
            for a in answers {
                if let Answer::Histogram(h) = a {
                    for (t, x) in hist.iter_mut().zip(h) {
                        *t += x;
                    }
                }
            }
            Answer::Histogram(hist)
        }
        Query::MinWeight => Answer::MinWeight(
            answers
                .into_iter()
                .filter_map(|a| match a {
                    Answer::MinWeight(w) => Some(w),
                    _ => None,
                })
                .min()
                .unwrap_or(usize::MAX),
        ),
        Query::AtLeast(_) => Answer::AtLeast(
            answers
                .into_iter()
                .all(|a| matches!(a, Answer::AtLeast(true))),
        ),
        Query::Collect(_) => {
            let mut out = Vec::new();
            for a in answers {
                if let Answer::Collect(v) = a {
                    out.extend(v);
                }
            }
            Answer::Collect(out)
        }
    }
}

fn evaluate_with<const L: usize>(
    field: Field,
    n: usize,
    rows: &[Vec<Elem>],
    query: Query,
    parallel: bool,
) -> Answer {
    let kernel = Kernel::<L>::new(field, n, rows);
    if field.q() == 3 {
        kernel.evaluate::<Ternary>(query, parallel)
    } else {
        kernel.evaluate::<Char2>(query, parallel)
    }
}

/// Runs `query` over all `q^k` messages of the code generated by `rows`.
/// Budget checks are the caller's job.
pub(crate) fn evaluate(
    field: Field,
    n: usize,
    rows: &[Vec<Elem>],
    query: Query,
    parallel: bool,
) -> Result<Answer> {
    let limbs = n.div_ceil(64).max(1);
    Ok(match limbs {
        1 => evaluate_with::<1>(field, n, rows, query, parallel),
        2 => evaluate_with::<2>(field, n, rows, query, parallel),
        3 => evaluate_with::<3>(field, n, rows, query, parallel),
        4 => evaluate_with::<4>(field, n, rows, query, parallel),
        5..=8 => evaluate_with::<8>(field, n, rows, query, parallel),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "code length {n} exceeds the supported maximum of {MAX_PACKED_LEN}"
            )))
        }
    })
}
