//! Monomial equivalence of linear codes.
//!
//! Two codes are equivalent when a column permutation followed by nonzero
//! column scalings maps one onto the other. The decision procedure compares
//! cheap invariants first, then backtracks over column correspondences while
//! keeping, for every low-weight codeword of the first code, the set of
//! low-weight codewords of the second code it could still map to.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::code::{rref, Budget, FqVector, GeneratorCode, WeightEnumerator};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

pub const DEFAULT_NODE_CAP: u64 = 100_000_000;

/// Column `j` of the source is sent to column `perm[j]` and multiplied by
/// `scales[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialMap {
    perm: Vec<usize>,
    scales: Vec<Elem>,
}

impl MonomialMap {
    pub fn new(field: Field, perm: Vec<usize>, scales: Vec<Elem>) -> Result<Self> {
        let n = perm.len();
        if scales.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: scales.len(),
            });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument(format!(
                    "{perm:?} is not a permutation"
                )));
            }
        }
        for &s in &scales {
            field.elem(s.code())?;
            if s.is_zero() {
                return Err(Error::InvalidArgument("monomial scale must be nonzero".into()));
            }
        }
        Ok(MonomialMap { perm, scales })
    }

    pub fn identity(n: usize) -> Self {
        MonomialMap {
            perm: (0..n).collect(),
            scales: vec![Elem::ONE; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn scales(&self) -> &[Elem] {
        &self.scales
    }

    pub fn apply_to_vector(&self, field: Field, x: &[Elem]) -> Vec<Elem> {
        let mut y = vec![Elem::ZERO; x.len()];
        for (j, &v) in x.iter().enumerate() {
            y[self.perm[j]] = field.mul(self.scales[j], v);
        }
        y
    }
}

/// The code `C P`.
pub fn apply_monomial(code: &GeneratorCode, map: &MonomialMap) -> Result<GeneratorCode> {
    if map.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            got: map.n(),
        });
    }
    let f = code.field();
    let rows = code
        .rows()
        .iter()
        .map(|r| FqVector::new(f, map.apply_to_vector(f, r)))
        .collect::<Result<Vec<_>>>()?;
    GeneratorCode::new(f, code.n(), rows)
}

/// Monomial-invariant fingerprint: dimensions, weight enumerator and the
/// sorted per-column counts of minimum-weight codewords.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CodeSignature {
    pub n: usize,
    pub k: usize,
    pub weight_enumerator: WeightEnumerator,
    pub column_profile: Vec<u64>,
}

pub fn signature(code: &GeneratorCode) -> Result<CodeSignature> {
    Ok(PreparedCode::new(code, &EquivalenceOptions::default())?.signature)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EquivalenceOptions {
    /// Search nodes allowed per pairwise test before giving up.
    pub node_cap: u64,
    /// Also allow the field automorphism `x -> x^2` (F4 only). Diagnostic;
    /// the default relation is monomial equivalence.
    pub semimonomial: bool,
    pub budget: Budget,
}

impl Default for EquivalenceOptions {
    fn default() -> Self {
        EquivalenceOptions {
            node_cap: DEFAULT_NODE_CAP,
            semimonomial: false,
            budget: Budget::default(),
        }
    }
}

type Bits = Vec<u64>;

fn bits_with(len: usize, pred: impl Fn(usize) -> bool) -> Bits {
    let mut b = vec![0u64; len.div_ceil(64)];
    for i in (0..len).filter(|&i| pred(i)) {
        b[i / 64] |= 1 << (i % 64);
    }
    b
}

/// A code together with the low-weight codeword data the equivalence search
/// needs, computed once and reused across many comparisons.
#[derive(Clone, Debug)]
pub struct PreparedCode {
    code: GeneratorCode,
    signature: CodeSignature,
    /// Largest weight of the codewords kept; the smallest layer whose words
    /// span the code.
    layer: usize,
    /// All nonzero codewords of weight at most `layer`.
    words: Vec<Vec<u8>>,
    weights: Vec<usize>,
    /// Indices into `words` whose first nonzero entry is 1.
    projective: Vec<usize>,
    /// Per column: counts of projective words by weight that are nonzero
    /// there.
    column_invariant: Vec<Vec<u32>>,
    zero_columns: Vec<usize>,
    /// `value_mask[j][c]` marks words with entry `c` at column `j`.
    value_mask: Vec<Vec<Bits>>,
    weight_mask: Vec<Bits>,
    conjugate: Option<Box<PreparedCode>>,
}

impl PreparedCode {
    pub fn new(code: &GeneratorCode, opts: &EquivalenceOptions) -> Result<Self> {
        let mut p = Self::build(code.clone(), &opts.budget)?;
        if opts.semimonomial && code.field().q() == 4 {
            let f = code.field();
            let rows = code
                .rows()
                .iter()
                .map(|r| FqVector::new(f, r.iter().map(|&x| f.frobenius(x)).collect()))
                .collect::<Result<Vec<_>>>()?;
            let conj = GeneratorCode::new(f, code.n(), rows)?;
            p.conjugate = Some(Box::new(Self::build(conj, &opts.budget)?));
        }
        Ok(p)
    }

    fn build(code: GeneratorCode, budget: &Budget) -> Result<Self> {
        let field = code.field();
        let q = field.q() as usize;
        let n = code.n();
        let k = code.k();
        let we = code.weight_enumerator_within(budget)?;
        let d = we.min_nonzero_weight().unwrap_or(0);

        let mut layer = d;
        let mut words = Vec::new();
        if k > 0 {
            loop {
                words = code.raw_codewords_up_to_weight(layer, budget)?;
                let rows: Vec<Vec<Elem>> = words
                    .iter()
                    .map(|w| w.iter().map(|&c| Elem(c)).collect())
                    .collect();
                if rref(field, n, rows).1.len() == k {
                    break;
                }
                layer += 1;
            }
        }
        let weights: Vec<usize> = words.iter().map(|w| w.iter().filter(|&&c| c != 0).count()).collect();
        let projective: Vec<usize> = (0..words.len())
            .filter(|&i| words[i].iter().find(|&&c| c != 0) == Some(&1))
            .collect();

        let span = layer + 1 - d.min(layer + 1);
        let mut column_invariant = vec![vec![0u32; span.max(1)]; n];
        for &i in &projective {
            for (j, &c) in words[i].iter().enumerate() {
                if c != 0 {
                    column_invariant[j][weights[i] - d] += 1;
                }
            }
        }
        let zero_columns = (0..n)
            .filter(|&j| column_invariant[j].iter().all(|&c| c == 0))
            .collect();
        let mut column_profile: Vec<u64> = column_invariant
            .iter()
            .map(|inv| inv.first().copied().unwrap_or(0) as u64 * (q as u64 - 1))
            .collect();
        column_profile.sort_unstable();

        let len = words.len();
        let value_mask = (0..n)
            .map(|j| (0..q).map(|c| bits_with(len, |i| words[i][j] as usize == c)).collect())
            .collect();
        let weight_mask = (0..=n).map(|w| bits_with(len, |i| weights[i] == w)).collect();

        Ok(PreparedCode {
            signature: CodeSignature {
                n,
                k,
                weight_enumerator: we,
                column_profile,
            },
            code,
            layer,
            words,
            weights,
            projective,
            column_invariant,
            zero_columns,
            value_mask,
            weight_mask,
            conjugate: None,
        })
    }

    pub fn code(&self) -> &GeneratorCode {
        &self.code
    }

    pub fn signature(&self) -> &CodeSignature {
        &self.signature
    }

    /// Decides equivalence to `other`; in semimonomial mode the conjugate of
    /// `self` is tried as well.
    pub fn equivalent_to(&self, other: &PreparedCode, node_cap: u64) -> Result<bool> {
        if self.find_map(other, node_cap)?.is_some() {
            return Ok(true);
        }
        match &self.conjugate {
            Some(c) => Ok(c.find_map(other, node_cap)?.is_some()),
            None => Ok(false),
        }
    }

    /// A monomial map sending this code onto `other`, if one exists.
    pub fn find_map(&self, other: &PreparedCode, node_cap: u64) -> Result<Option<MonomialMap>> {
        if self.code.field() != other.code.field() || self.signature != other.signature {
            return Ok(None);
        }
        if self.layer != other.layer || self.words.len() != other.words.len() {
            return Ok(None);
        }
        let n = self.code.n();
        let mut a = self.column_invariant.clone();
        let mut b = other.column_invariant.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(None);
        }
        let mut search = Search::new(self, other, node_cap);
        let found = search.run()?;
        let Some((perm, scales)) = found else {
            return Ok(None);
        };
        let map = MonomialMap { perm, scales };
        debug_assert_eq!(map.n(), n);
        Ok(Some(map))
    }
}

struct Search<'a> {
    src: &'a PreparedCode,
    dst: &'a PreparedCode,
    field: Field,
    order: Vec<usize>,
    /// Candidate target columns per source column.
    targets: Vec<Vec<usize>>,
    perm: Vec<usize>,
    scales: Vec<Elem>,
    used: Vec<bool>,
    nodes: u64,
    cap: u64,
    dst_dual: GeneratorCode,
}

impl<'a> Search<'a> {
    fn new(src: &'a PreparedCode, dst: &'a PreparedCode, cap: u64) -> Self {
        let n = src.code.n();
        let zero_src: std::collections::HashSet<usize> = src.zero_columns.iter().copied().collect();
        let targets: Vec<Vec<usize>> = (0..n)
            .map(|j| {
                (0..n)
                    .filter(|&t| dst.column_invariant[t] == src.column_invariant[j])
                    .collect()
            })
            .collect();

        // Most constrained first, then columns sharing many words with the
        // columns already placed.
        let mut order = Vec::new();
        let mut placed = vec![false; n];
        let live: Vec<usize> = (0..n).filter(|j| !zero_src.contains(j)).collect();
        let mut touch = vec![0usize; n];
        while order.len() < live.len() {
            let next = *live
                .iter()
                .filter(|&&j| !placed[j])
                .max_by_key(|&&j| {
                    (
                        touch[j],
                        std::cmp::Reverse(targets[j].len()),
                        std::cmp::Reverse(j),
                    )
                })
                .expect("unplaced column remains");
            placed[next] = true;
            order.push(next);
            for &i in &src.projective {
                let w = &src.words[i];
                if w[next] != 0 {
                    for (j, &c) in w.iter().enumerate() {
                        if c != 0 {
                            touch[j] += 1;
                        }
                    }
                }
            }
        }

        Search {
            src,
            dst,
            field: src.code.field(),
            order,
            targets,
            perm: vec![usize::MAX; n],
            scales: vec![Elem::ONE; n],
            used: vec![false; n],
            nodes: 0,
            cap,
            dst_dual: dst.code.dual_code(),
        }
    }

    fn run(&mut self) -> Result<Option<(Vec<usize>, Vec<Elem>)>> {
        let cand: Vec<Bits> = self
            .src
            .projective
            .iter()
            .map(|&i| self.dst.weight_mask[self.src.weights[i]].clone())
            .collect();
        if self.descend(0, &cand)? {
            Ok(Some((self.perm.clone(), self.scales.clone())))
        } else {
            Ok(None)
        }
    }

    fn descend(&mut self, depth: usize, cand: &[Bits]) -> Result<bool> {
        if depth == self.order.len() {
            return Ok(self.finish());
        }
        let j = self.order[depth];
        let scales: Vec<Elem> = if depth == 0 {
            vec![Elem::ONE]
        } else {
            self.field.nonzero().collect()
        };
        for ti in 0..self.targets[j].len() {
            let t = self.targets[j][ti];
            if self.used[t] {
                continue;
            }
            for &s in &scales {
                self.nodes += 1;
                if self.nodes > self.cap {
                    return Err(Error::Undecided(self.cap));
                }
                let Some(next) = self.restrict(cand, j, t, s) else {
                    continue;
                };
                self.used[t] = true;
                self.perm[j] = t;
                self.scales[j] = s;
                if self.descend(depth + 1, &next)? {
                    return Ok(true);
                }
                self.used[t] = false;
                self.perm[j] = usize::MAX;
            }
        }
        Ok(false)
    }

    fn restrict(&self, cand: &[Bits], j: usize, t: usize, s: Elem) -> Option<Vec<Bits>> {
        let masks = &self.dst.value_mask[t];
        let mut next = Vec::with_capacity(cand.len());
        for (c, &i) in cand.iter().zip(&self.src.projective) {
            let want = self.field.mul(s, Elem(self.src.words[i][j]));
            let mask = &masks[want.code() as usize];
            let mut any = 0u64;
            let narrowed: Bits = c
                .iter()
                .zip(mask)
                .map(|(&x, &m)| {
                    let v = x & m;
                    any |= v;
                    v
                })
                .collect();
            if any == 0 {
                return None;
            }
            next.push(narrowed);
        }
        Some(next)
    }

    /// Pairs the zero columns and checks that the map sends every generator
    /// row into the target code.
    fn finish(&mut self) -> bool {
        let free: Vec<usize> = (0..self.perm.len()).filter(|&t| !self.used[t]).collect();
        if free.len() != self.src.zero_columns.len() {
            return false;
        }
        for (&j, &t) in self.src.zero_columns.iter().zip(&free) {
            self.perm[j] = t;
            self.scales[j] = Elem::ONE;
        }
        let map = MonomialMap {
            perm: self.perm.clone(),
            scales: self.scales.clone(),
        };
        let f = self.field;
        let ok = self.src.code.rows().iter().all(|r| {
            let y = map.apply_to_vector(f, r);
            self.dst_dual
                .rows()
                .iter()
                .all(|h| crate::code::dot(f, h, &y).is_zero())
        });
        if !ok {
            for &j in &self.src.zero_columns {
                self.perm[j] = usize::MAX;
            }
        }
        ok
    }
}

pub fn are_equivalent(c1: &GeneratorCode, c2: &GeneratorCode) -> Result<bool> {
    are_equivalent_with(c1, c2, &EquivalenceOptions::default())
}

pub fn are_equivalent_with(c1: &GeneratorCode, c2: &GeneratorCode, opts: &EquivalenceOptions) -> Result<bool> {
    if c1.field() != c2.field() || c1.n() != c2.n() || c1.k() != c2.k() {
        return Ok(false);
    }
    let a = PreparedCode::new(c1, opts)?;
    let b = PreparedCode::new(c2, &EquivalenceOptions { semimonomial: false, ..*opts })?;
    let eq = a.equivalent_to(&b, opts.node_cap)?;
    debug_assert!(!eq || a.signature.weight_enumerator == b.signature.weight_enumerator);
    Ok(eq)
}

/// A monomial map from `c1` onto `c2`, if one exists.
pub fn find_monomial_map(c1: &GeneratorCode, c2: &GeneratorCode) -> Result<Option<MonomialMap>> {
    if c1.field() != c2.field() || c1.n() != c2.n() || c1.k() != c2.k() {
        return Ok(None);
    }
    let opts = EquivalenceOptions::default();
    let a = PreparedCode::new(c1, &opts)?;
    let b = PreparedCode::new(c2, &opts)?;
    a.find_map(&b, opts.node_cap)
}

/// Partitions codes into equivalence classes. Each class lists input indices
/// in increasing order; classes are ordered by their first member, so the
/// representative of a class is its earliest input.
pub fn dedupe_into_classes(codes: &[GeneratorCode], opts: &EquivalenceOptions) -> Result<Vec<Vec<usize>>> {
    let prepared = codes
        .par_iter()
        .map(|c| PreparedCode::new(c, opts))
        .collect::<Result<Vec<_>>>()?;
    dedupe_prepared(&prepared, opts.node_cap)
}

pub fn dedupe_prepared(prepared: &[PreparedCode], node_cap: u64) -> Result<Vec<Vec<usize>>> {
    if let Some(first) = prepared.first() {
        let (f, n, k) = (first.code.field(), first.code.n(), first.code.k());
        if prepared
            .iter()
            .any(|p| p.code.field() != f || p.code.n() != n || p.code.k() != k)
        {
            return Err(Error::InvalidArgument(
                "codes to classify must share field, length and dimension".into(),
            ));
        }
    }
    let mut buckets: BTreeMap<&CodeSignature, Vec<usize>> = BTreeMap::new();
    for (i, p) in prepared.iter().enumerate() {
        buckets.entry(&p.signature).or_default().push(i);
    }
    let buckets: Vec<Vec<usize>> = buckets.into_values().collect();
    let per_bucket = buckets
        .par_iter()
        .map(|members| {
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for &i in members {
                let mut home = None;
                for (c, class) in classes.iter().enumerate() {
                    if prepared[i].equivalent_to(&prepared[class[0]], node_cap)? {
                        home = Some(c);
                        break;
                    }
                }
                match home {
                    Some(c) => classes[c].push(i),
                    None => classes.push(vec![i]),
                }
            }
            Ok(classes)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut classes: Vec<Vec<usize>> = per_bucket.into_iter().flatten().collect();
    classes.sort_by_key(|c| c[0]);
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structured::{CirculantSpec, ToeplitzTriple};

    fn triple(f: Field, s: &str) -> GeneratorCode {
        ToeplitzTriple::parse(f, s).unwrap().code()
    }

    #[test]
    fn identity_map_keeps_code() {
        let c = triple(Field::F3, "1;(1,0);(2,1)");
        let d = apply_monomial(&c, &MonomialMap::identity(6)).unwrap();
        assert!(c.same_code(&d));
    }

    #[test]
    fn global_scaling_keeps_code() {
        let f = Field::F3;
        let c = triple(f, "1;(1,0);(2,1)");
        let map = MonomialMap::new(f, (0..6).collect(), vec![Elem(2); 6]).unwrap();
        let d = apply_monomial(&c, &map).unwrap();
        assert!(c.same_code(&d));
        assert_eq!(c.weight_enumerator().unwrap(), d.weight_enumerator().unwrap());
    }

    #[test]
    fn invalid_maps_rejected() {
        let f = Field::F2;
        assert!(MonomialMap::new(f, vec![0, 0], vec![Elem::ONE; 2]).is_err());
        assert!(MonomialMap::new(f, vec![0, 1], vec![Elem::ONE, Elem::ZERO]).is_err());
        let c = triple(f, "1;(1);(0)");
        assert!(apply_monomial(&c, &MonomialMap::identity(3)).is_err());
    }

    #[test]
    fn recovers_a_known_map() {
        let f = Field::F4;
        let c = triple(f, "0;(1,w,1);(w,1,w)");
        let map = MonomialMap::new(
            f,
            vec![3, 7, 1, 0, 5, 2, 6, 4],
            vec![Elem(2), Elem(1), Elem(3), Elem(3), Elem(1), Elem(2), Elem(2), Elem(1)],
        )
        .unwrap();
        let d = apply_monomial(&c, &map).unwrap();
        let found = find_monomial_map(&c, &d).unwrap().expect("equivalent");
        assert!(apply_monomial(&c, &found).unwrap().same_code(&d));
    }

    #[test]
    fn swap_and_scalar_equivalences() {
        let f = Field::F3;
        let t = ToeplitzTriple::parse(f, "1;(0,1,2,1);(1,1,2,0)").unwrap();
        assert!(are_equivalent(&t.code(), &t.swapped().code()).unwrap());
        assert!(are_equivalent(&t.code(), &t.scaled(Elem(2)).code()).unwrap());
    }

    #[test]
    fn different_enumerators_are_inequivalent() {
        let f = Field::F2;
        let a = CirculantSpec::parse(f, "C:(1,1,0)").unwrap().code();
        let b = CirculantSpec::parse(f, "C:(1,0,0)").unwrap().code();
        assert_ne!(signature(&a).unwrap(), signature(&b).unwrap());
        assert!(!are_equivalent(&a, &b).unwrap());
    }

    #[test]
    fn node_cap_reports_undecided() {
        let f = Field::F2;
        let a = triple(f, "0;(1,1,1);(1,1,1)");
        let opts = EquivalenceOptions {
            node_cap: 1,
            ..Default::default()
        };
        let b = apply_monomial(&a, &MonomialMap::new(f, vec![7, 6, 5, 4, 3, 2, 1, 0], vec![Elem::ONE; 8]).unwrap()).unwrap();
        assert_eq!(are_equivalent_with(&a, &b, &opts), Err(Error::Undecided(1)));
    }

    #[test]
    fn frobenius_conjugates_need_semimonomial_mode() {
        let f = Field::F4;
        let a = triple(f, "0;(1,1,1);(1,w,1)");
        let b = triple(f, "0;(1,1,1);(1,v,1)");
        assert!(!are_equivalent(&a, &b).unwrap());
        let opts = EquivalenceOptions {
            semimonomial: true,
            ..Default::default()
        };
        assert!(are_equivalent_with(&a, &b, &opts).unwrap());
    }

    #[test]
    fn dedupe_orders_classes_by_first_member() {
        let f = Field::F2;
        let codes = vec![
            triple(f, "1;(1,0);(0,0)"),
            triple(f, "0;(0,0);(0,0)"),
            triple(f, "1;(0,0);(1,0)"),
        ];
        let classes = dedupe_into_classes(&codes, &EquivalenceOptions::default()).unwrap();
        assert_eq!(classes, vec![vec![0, 2], vec![1]]);
        let one = dedupe_into_classes(&codes[..1], &EquivalenceOptions::default()).unwrap();
        assert_eq!(one, vec![vec![0]]);
    }

    #[test]
    fn zero_columns_are_matched() {
        let f = Field::F2;
        let a = triple(f, "0;(0,0);(0,0)");
        let b = triple(f, "0;(0,1);(0,0)");
        assert!(!are_equivalent(&a, &b).unwrap());
        let map = MonomialMap::new(f, vec![5, 4, 3, 2, 1, 0], vec![Elem::ONE; 6]).unwrap();
        let c = apply_monomial(&a, &map).unwrap();
        assert!(are_equivalent(&a, &c).unwrap());
    }
}
