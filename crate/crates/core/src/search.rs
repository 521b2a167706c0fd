//! Exhaustive search over double Toeplitz triples or (nega)circulant first
//! rows, with symmetry filters that keep one representative per swap or
//! scalar orbit.
//!
//! The candidate space is split into fixed partitions (one per `(t, a)`
//! prefix for triples). Results are reduced per partition and merged in
//! partition order, so output does not depend on the number of workers.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{Budget, FqVector, GeneratorCode};
use crate::error::{Error, Result};
use crate::field::{Elem, Field};
use crate::structured::{check_even, triple_at, vector_at, CirculantSpec, Sign, ToeplitzTriple};

/// Default cap on candidates times codewords per candidate.
pub const DEFAULT_MAX_WORK: u128 = 1 << 36;

pub const CHECKPOINT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "DT")]
    Toeplitz,
    #[serde(rename = "DC")]
    Circulant,
    #[serde(rename = "NC")]
    Negacirculant,
}

impl Family {
    fn sign(self) -> Option<Sign> {
        match self {
            Family::Toeplitz => None,
            Family::Circulant => Some(Sign::Circulant),
            Family::Negacirculant => Some(Sign::Negacirculant),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Toeplitz => "DT",
            Family::Circulant => "DC",
            Family::Negacirculant => "NC",
        })
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dt" | "toeplitz" => Ok(Family::Toeplitz),
            "dc" | "circulant" => Ok(Family::Circulant),
            "nc" | "negacirculant" => Ok(Family::Negacirculant),
            _ => Err(Error::Parse {
                what: "family (dt, dc or nc)",
                input: s.to_string(),
            }),
        }
    }
}

/// Symmetry filter applied to candidate triples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reduction {
    /// Keep everything.
    None,
    /// Binary only: keep `(t, a, b)` when `a` ranks at least as high as `b`,
    /// one of each pair related by transposing the Toeplitz block.
    Swap,
    /// Nonbinary only: keep triples whose `(t, a)` is zero or starts with 1,
    /// one of each orbit under nonzero scalar multiples.
    Scalar,
}

impl Reduction {
    /// The filter that applies to `field`.
    pub fn natural(field: Field) -> Self {
        if field.q() == 2 {
            Reduction::Swap
        } else {
            Reduction::Scalar
        }
    }

    pub fn check(self, field: Field) -> Result<()> {
        match (self, field.q()) {
            (Reduction::Swap, 2) | (Reduction::Scalar, 3 | 4) | (Reduction::None, _) => Ok(()),
            _ => Err(Error::InvalidArgument(format!(
                "the {self} filter does not apply over {field}"
            ))),
        }
    }
}

impl fmt::Display for Reduction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Reduction::None => "none",
            Reduction::Swap => "swap",
            Reduction::Scalar => "scalar",
        })
    }
}

impl FromStr for Reduction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "none" => Ok(Reduction::None),
            "swap" => Ok(Reduction::Swap),
            "scalar" => Ok(Reduction::Scalar),
            _ => Err(Error::Parse {
                what: "reduction (none, swap or scalar)",
                input: s.to_string(),
            }),
        }
    }
}

/// `f(a) = sum_i 2^(i-1) a_i` for a binary vector, `a_1` least significant.
pub fn vector_rank(a: &FqVector) -> Result<BigUint> {
    if a.field().q() != 2 {
        return Err(Error::InvalidArgument(format!(
            "vector rank is defined for binary vectors, got {}",
            a.field()
        )));
    }
    let mut bits = BigUint::default();
    for (i, e) in a.elems().iter().enumerate() {
        if !e.is_zero() {
            bits.set_bit(i as u64, true);
        }
    }
    Ok(bits)
}

/// Compares binary vectors of equal length by [`vector_rank`] without
/// materializing the integers.
fn rank_at_least(a: &[Elem], b: &[Elem]) -> bool {
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return !x.is_zero();
        }
    }
    true
}

pub fn passes_reduction(triple: &ToeplitzTriple, reduction: Reduction) -> Result<bool> {
    reduction.check(triple.field())?;
    Ok(match reduction {
        Reduction::None => true,
        Reduction::Swap => rank_at_least(triple.a(), triple.b()),
        Reduction::Scalar => std::iter::once(&triple.t())
            .chain(triple.a())
            .find(|e| !e.is_zero())
            .is_none_or(|&e| e == Elem::ONE),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "d")]
pub enum SearchMode {
    /// Largest minimum weight reached, and every candidate reaching it.
    FindOptimal,
    /// Candidates of minimum weight exactly `d`.
    CollectAt(usize),
    /// Candidates of minimum weight at least `d`.
    AtLeast(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub field: Field,
    pub n: usize,
    pub family: Family,
    pub reduction: Reduction,
    pub mode: SearchMode,
    /// Worker threads; 0 uses the ambient thread pool.
    pub workers: usize,
    /// Cap on candidates times codewords per candidate.
    pub max_work: u128,
    pub budget: Budget,
}

impl SearchConfig {
    pub fn new(field: Field, n: usize, family: Family) -> Self {
        SearchConfig {
            field,
            n,
            family,
            reduction: Reduction::natural(field),
            mode: SearchMode::FindOptimal,
            workers: 0,
            max_work: DEFAULT_MAX_WORK,
            budget: Budget::default(),
        }
    }

    pub fn reduction(mut self, r: Reduction) -> Self {
        self.reduction = r;
        self
    }

    pub fn mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }
}

/// A searched object: a triple, or a first row of a (nega)circulant block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Candidate {
    Triple(ToeplitzTriple),
    Circulant(CirculantSpec),
}

impl Candidate {
    pub fn triple(&self) -> ToeplitzTriple {
        match self {
            Candidate::Triple(t) => t.clone(),
            Candidate::Circulant(c) => c.to_triple(),
        }
    }

    pub fn code(&self) -> GeneratorCode {
        match self {
            Candidate::Triple(t) => t.code(),
            Candidate::Circulant(c) => c.code(),
        }
    }
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Candidate::Triple(t) => t.fmt(f),
            Candidate::Circulant(c) => c.fmt(f),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchHit {
    pub candidate: Candidate,
    pub min_weight: usize,
}

/// One JSON-lines record of search output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HitRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub r: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<Family>,
    pub t: String,
    pub a: String,
    pub b: String,
    pub min_weight: usize,
}

impl SearchHit {
    pub fn record(&self) -> HitRecord {
        let t = self.candidate.triple();
        let f = t.field();
        let (r, family) = match &self.candidate {
            Candidate::Triple(_) => (None, None),
            Candidate::Circulant(c) => (
                Some(f.render_elements(c.r())),
                Some(match c.sign() {
                    Sign::Circulant => Family::Circulant,
                    Sign::Negacirculant => Family::Negacirculant,
                }),
            ),
        };
        HitRecord {
            r,
            family,
            t: f.render_element(t.t()).to_string(),
            a: f.render_elements(t.a()),
            b: f.render_elements(t.b()),
            min_weight: self.min_weight,
        }
    }

    fn from_record(field: Field, rec: &HitRecord) -> Result<Self> {
        let candidate = match (&rec.r, rec.family) {
            (Some(r), Some(fam)) => {
                let sign = fam.sign().ok_or_else(|| Error::Checkpoint("bad family in record".into()))?;
                Candidate::Circulant(CirculantSpec::new(&FqVector::parse(field, r)?, sign)?)
            }
            _ => Candidate::Triple(ToeplitzTriple::parse(
                field,
                &format!("{};{};{}", rec.t, rec.a, rec.b),
            )?),
        };
        Ok(SearchHit {
            candidate,
            min_weight: rec.min_weight,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub config: SearchConfig,
    /// For [`SearchMode::FindOptimal`], the largest minimum weight found.
    pub optimal_d: Option<usize>,
    pub hits: Vec<SearchHit>,
}

/// Indexing of a candidate space into partitions.
struct Space {
    field: Field,
    m: usize,
    family: Family,
    partitions: u64,
    part_size: u64,
}

impl Space {
    fn new(config: &SearchConfig) -> Result<Self> {
        let m = check_even(config.n)?;
        config.reduction.check(config.field)?;
        let q = config.field.q() as u128;
        let (digits, part_digits) = match config.family {
            Family::Toeplitz => (2 * m - 1, m - 1),
            _ => (m, m / 2),
        };
        let total = q.checked_pow(digits as u32);
        let words = q.checked_pow(m as u32);
        let work = total.zip(words).and_then(|(t, w)| t.checked_mul(w));
        if work.is_none_or(|w| w > config.max_work) {
            return Err(Error::SearchBudgetExceeded {
                what: format!(
                    "{} codes of length {} over {} ({}^{} candidates of {}^{} codewords)",
                    config.family, config.n, config.field, q, digits, q, m
                ),
                limit: config.max_work,
            });
        }
        config.budget.check(config.field, m)?;
        let total = total.expect("checked above") as u64;
        let part_size = (q as u64).pow(part_digits as u32);
        Ok(Space {
            field: config.field,
            m,
            family: config.family,
            partitions: total / part_size,
            part_size,
        })
    }

    fn candidate(&self, index: u64) -> Candidate {
        match self.family.sign() {
            None => Candidate::Triple(triple_at(self.field, self.m, index)),
            Some(sign) => {
                let r = FqVector::new(self.field, vector_at(self.field, self.m, index))
                    .expect("valid codes");
                Candidate::Circulant(CirculantSpec::new(&r, sign).expect("nonempty row"))
            }
        }
    }

    fn partition(&self, p: u64) -> std::ops::Range<u64> {
        p * self.part_size..(p + 1) * self.part_size
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Phase {
    Scan,
    Collect,
    Done,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct CheckpointConfig {
    q: u8,
    n: usize,
    family: Family,
    reduction: Reduction,
    mode: SearchMode,
}

/// Resumable search state, saved after every finished partition.
#[derive(Clone, Debug, Serialize, Deserialize)]
struct Checkpoint {
    version: u32,
    config: CheckpointConfig,
    phase: Phase,
    completed: BTreeSet<u64>,
    best_d: usize,
    hits: BTreeMap<u64, Vec<HitRecord>>,
}

impl Checkpoint {
    fn fresh(config: &SearchConfig) -> Self {
        Checkpoint {
            version: CHECKPOINT_VERSION,
            config: CheckpointConfig {
                q: config.field.q(),
                n: config.n,
                family: config.family,
                reduction: config.reduction,
                mode: config.mode,
            },
            phase: match config.mode {
                SearchMode::FindOptimal => Phase::Scan,
                _ => Phase::Collect,
            },
            completed: BTreeSet::new(),
            best_d: 0,
            hits: BTreeMap::new(),
        }
    }

    fn load(path: &Path, config: &SearchConfig) -> Result<Self> {
        let fresh = Self::fresh(config);
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(fresh),
            Err(e) => return Err(Error::Checkpoint(format!("{}: {e}", path.display()))),
        };
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        let version = value.get("version").and_then(|v| v.as_u64());
        if version != Some(CHECKPOINT_VERSION as u64) {
            return Err(Error::Checkpoint(format!(
                "{}: version {version:?} does not match {CHECKPOINT_VERSION}",
                path.display()
            )));
        }
        let cp: Checkpoint = serde_json::from_value(value)
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))?;
        if cp.config != fresh.config {
            return Err(Error::Checkpoint(format!(
                "{} was written for a different search",
                path.display()
            )));
        }
        Ok(cp)
    }

    fn save(&self, path: &Path) -> Result<()> {
        let tmp = path.with_extension("tmp");
        let text = serde_json::to_string(self).expect("checkpoint serializes");
        std::fs::write(&tmp, text)
            .and_then(|_| std::fs::rename(&tmp, path))
            .map_err(|e| Error::Checkpoint(format!("{}: {e}", path.display())))
    }
}

struct Store {
    state: Mutex<Checkpoint>,
    path: Option<PathBuf>,
}

impl Store {
    fn update(&self, f: impl FnOnce(&mut Checkpoint)) -> Result<()> {
        let mut cp = self.state.lock().expect("checkpoint lock");
        f(&mut cp);
        match &self.path {
            Some(p) => cp.save(p),
            None => Ok(()),
        }
    }

    fn snapshot(&self) -> Checkpoint {
        self.state.lock().expect("checkpoint lock").clone()
    }
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {workers} workers: {e}")))?;
    Ok(pool.install(f))
}

/// Runs a search, resuming from and updating `checkpoint` when given.
pub fn run_search(config: &SearchConfig, checkpoint: Option<&Path>) -> Result<SearchReport> {
    let space = Space::new(config)?;
    let initial = match checkpoint {
        Some(p) => Checkpoint::load(p, config)?,
        None => Checkpoint::fresh(config),
    };
    let store = Store {
        state: Mutex::new(initial),
        path: checkpoint.map(Path::to_path_buf),
    };
    in_pool(config.workers, || execute(config, &space, &store))?
}

fn accepts(config: &SearchConfig, c: &Candidate) -> Result<bool> {
    if config.reduction == Reduction::None {
        return Ok(true);
    }
    passes_reduction(&c.triple(), config.reduction)
}

fn execute(config: &SearchConfig, space: &Space, store: &Store) -> Result<SearchReport> {
    let budget = &config.budget;
    let mut cp = store.snapshot();

    if cp.phase == Phase::Scan {
        let best = AtomicUsize::new(cp.best_d);
        let pending: Vec<u64> = (0..space.partitions).filter(|p| !cp.completed.contains(p)).collect();
        pending.par_iter().try_for_each(|&p| -> Result<()> {
            let mut local = 0;
            for index in space.partition(p) {
                let cand = space.candidate(index);
                if !accepts(config, &cand)? {
                    continue;
                }
                let code = cand.code();
                let floor = best.load(Ordering::Relaxed).max(local);
                if code.serial_min_weight_at_least(floor + 1, budget)? {
                    let w = code.serial_minimum_weight(budget)?;
                    local = local.max(w);
                    best.fetch_max(w, Ordering::Relaxed);
                }
            }
            store.update(|cp| {
                cp.completed.insert(p);
                cp.best_d = cp.best_d.max(local);
            })
        })?;
        store.update(|cp| {
            cp.best_d = cp.best_d.max(best.load(Ordering::Relaxed));
            cp.phase = Phase::Collect;
            cp.completed.clear();
        })?;
        cp = store.snapshot();
    }

    let (floor, exact) = match config.mode {
        SearchMode::FindOptimal => (cp.best_d, true),
        SearchMode::CollectAt(d) => (d, true),
        SearchMode::AtLeast(d) => (d, false),
    };

    if cp.phase == Phase::Collect {
        let pending: Vec<u64> = (0..space.partitions).filter(|p| !cp.completed.contains(p)).collect();
        pending.par_iter().try_for_each(|&p| -> Result<()> {
            let mut found = Vec::new();
            for index in space.partition(p) {
                let cand = space.candidate(index);
                if !accepts(config, &cand)? {
                    continue;
                }
                let code = cand.code();
                if !code.serial_min_weight_at_least(floor, budget)? {
                    continue;
                }
                let min_weight = if exact {
                    if code.serial_min_weight_at_least(floor + 1, budget)? {
                        continue;
                    }
                    floor
                } else {
                    code.serial_minimum_weight(budget)?
                };
                found.push(
                    SearchHit {
                        candidate: cand,
                        min_weight,
                    }
                    .record(),
                );
            }
            store.update(|cp| {
                cp.completed.insert(p);
                if !found.is_empty() {
                    cp.hits.insert(p, found);
                }
            })
        })?;
        store.update(|cp| cp.phase = Phase::Done)?;
        cp = store.snapshot();
    }

    let hits = cp
        .hits
        .values()
        .flatten()
        .map(|rec| SearchHit::from_record(config.field, rec))
        .collect::<Result<Vec<_>>>()?;
    Ok(SearchReport {
        config: config.clone(),
        optimal_d: matches!(config.mode, SearchMode::FindOptimal).then_some(cp.best_d),
        hits,
    })
}

/// Largest minimum weight among filtered double Toeplitz codes of length
/// `n`, and every filtered triple reaching it, in enumeration order.
pub fn find_dt_optimal(field: Field, n: usize, reduction: Reduction) -> Result<(usize, Vec<ToeplitzTriple>)> {
    let config = SearchConfig::new(field, n, Family::Toeplitz).reduction(reduction);
    let report = run_search(&config, None)?;
    let triples = report.hits.iter().map(|h| h.candidate.triple()).collect();
    Ok((report.optimal_d.expect("find-optimal mode"), triples))
}

/// Largest minimum weight among double circulant (or negacirculant) codes of
/// length `n`, and every first row reaching it.
pub fn find_family_optimal(field: Field, n: usize, sign: Sign) -> Result<(usize, Vec<CirculantSpec>)> {
    let family = match sign {
        Sign::Circulant => Family::Circulant,
        Sign::Negacirculant => Family::Negacirculant,
    };
    let config = SearchConfig::new(field, n, family).reduction(Reduction::None);
    let report = run_search(&config, None)?;
    let specs = report
        .hits
        .into_iter()
        .map(|h| match h.candidate {
            Candidate::Circulant(c) => c,
            Candidate::Triple(_) => unreachable!("family search yields first rows"),
        })
        .collect();
    Ok((report.optimal_d.expect("find-optimal mode"), specs))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(f: Field, s: &str) -> FqVector {
        FqVector::parse(f, s).unwrap()
    }

    #[test]
    fn vector_rank_examples() {
        let f = Field::F2;
        assert_eq!(vector_rank(&v(f, "(0,0,0)")).unwrap(), BigUint::from(0u32));
        assert_eq!(vector_rank(&v(f, "(1,0,1)")).unwrap(), BigUint::from(5u32));
        assert_eq!(vector_rank(&v(f, "(1,1)")).unwrap(), BigUint::from(3u32));
        assert!(vector_rank(&v(Field::F3, "(1,2)")).is_err());
    }

    #[test]
    fn rank_comparison_matches_integers() {
        let f = Field::F2;
        for i in 0..32u64 {
            for j in 0..32u64 {
                let a = vector_at(f, 5, i);
                let b = vector_at(f, 5, j);
                let ra = vector_rank(&FqVector::new(f, a.clone()).unwrap()).unwrap();
                let rb = vector_rank(&FqVector::new(f, b.clone()).unwrap()).unwrap();
                assert_eq!(rank_at_least(&a, &b), ra >= rb);
            }
        }
    }

    #[test]
    fn reduction_examples() {
        let f = Field::F2;
        let t = ToeplitzTriple::parse(f, "0;(1,0,1);(1,1,0)").unwrap();
        assert!(passes_reduction(&t, Reduction::Swap).unwrap());
        let t = ToeplitzTriple::parse(f, "1;(0,1,1);(0,1,1)").unwrap();
        assert!(passes_reduction(&t, Reduction::Swap).unwrap());
        assert!(passes_reduction(&t, Reduction::Scalar).is_err());

        let f3 = Field::F3;
        let bad = ToeplitzTriple::parse(f3, "0;(2,1);(1,1)").unwrap();
        assert!(!passes_reduction(&bad, Reduction::Scalar).unwrap());
        assert!(passes_reduction(&bad.scaled(Elem(2)), Reduction::Scalar).unwrap());
        let zero = ToeplitzTriple::parse(f3, "0;(0,0);(2,1)").unwrap();
        assert!(passes_reduction(&zero, Reduction::Scalar).unwrap());
        assert!(passes_reduction(&zero, Reduction::Swap).is_err());
    }

    #[test]
    fn optimal_small_searches() {
        let (d, triples) = find_dt_optimal(Field::F2, 4, Reduction::Swap).unwrap();
        assert_eq!(d, 2);
        assert!(triples.iter().all(|t| t.code().minimum_weight().unwrap() == 2));
        let (d, specs) = find_family_optimal(Field::F3, 4, Sign::Negacirculant).unwrap();
        assert_eq!(d, 3);
        assert!(specs.iter().any(|s| s.to_string() == "N:(1,1)"));
    }

    #[test]
    fn block_size_one() {
        let (d, triples) = find_dt_optimal(Field::F3, 2, Reduction::None).unwrap();
        assert_eq!(d, 2);
        let shown: Vec<String> = triples.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, ["1;();()", "2;();()"]);
    }

    #[test]
    fn modes_agree() {
        let f = Field::F2;
        let base = SearchConfig::new(f, 8, Family::Toeplitz);
        let opt = run_search(&base.clone(), None).unwrap();
        let d = opt.optimal_d.unwrap();
        let at = run_search(&base.clone().mode(SearchMode::CollectAt(d)), None).unwrap();
        assert_eq!(opt.hits, at.hits);
        let ge = run_search(&base.mode(SearchMode::AtLeast(d - 1)), None).unwrap();
        assert!(ge.hits.len() > at.hits.len());
        assert!(ge.hits.iter().all(|h| h.min_weight >= d - 1));
    }

    #[test]
    fn budget_refusal() {
        let config = SearchConfig::new(Field::F4, 16, Family::Toeplitz);
        assert!(matches!(run_search(&config, None), Err(Error::SearchBudgetExceeded { .. })));
        let odd = SearchConfig::new(Field::F2, 7, Family::Toeplitz);
        assert_eq!(run_search(&odd, None).unwrap_err(), Error::OddLength(7));
    }
}
