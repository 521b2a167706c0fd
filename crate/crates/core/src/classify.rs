//! Classification of optimal double Toeplitz codes up to equivalence, split
//! by whether each class also contains a double circulant or double
//! negacirculant code.

use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::code::GeneratorCode;
use crate::equivalence::{dedupe_prepared, EquivalenceOptions, PreparedCode};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::search::{run_search, Candidate, Family, Reduction, SearchConfig, SearchMode, DEFAULT_MAX_WORK};
use crate::structured::{all_triples, check_even, CirculantSpec, ToeplitzTriple, TripleKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Structure {
    /// Equivalent to an optimal double circulant code.
    DoubleCirculant,
    /// Equivalent to an optimal double negacirculant code but to no double
    /// circulant one.
    DoubleNegacirculant,
    /// Neither.
    ToeplitzOnly,
}

impl Structure {
    pub fn label(self) -> &'static str {
        match self {
            Structure::DoubleCirculant => "DC",
            Structure::DoubleNegacirculant => "NC",
            Structure::ToeplitzOnly => "DT-only",
        }
    }
}

impl fmt::Display for Structure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for Structure {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

/// One equivalence class of optimal codes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub q: u8,
    pub n: usize,
    pub d: usize,
    pub class_id: usize,
    /// Least member triple in enumeration order.
    pub representative_triple: String,
    /// Number of searched triples in the class.
    pub members: usize,
    pub structure: Structure,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub q: u8,
    pub n: usize,
    pub d_opt: usize,
    pub reduction: Reduction,
    /// Classes with no double circulant or negacirculant member.
    pub n_dt: usize,
    pub n_dc: usize,
    /// Always zero over F2 and F4, where negacirculant and circulant
    /// coincide.
    pub n_nc: usize,
    /// Classes among optimal double circulant codes on their own; should
    /// equal `n_dc`.
    pub circulant_classes: usize,
    /// Classes among optimal double negacirculant codes on their own (F3).
    pub negacirculant_classes: usize,
    pub classes: Vec<ClassRecord>,
}

impl ClassificationReport {
    pub fn total_classes(&self) -> usize {
        self.classes.len()
    }

    /// The class whose representative is equivalent to `triple`, if any.
    pub fn locate(&self, triple: &ToeplitzTriple, opts: &EquivalenceOptions) -> Result<Option<usize>> {
        let target = PreparedCode::new(&triple.code(), opts)?;
        let field = triple.field();
        for class in &self.classes {
            let rep = ToeplitzTriple::parse(field, &class.representative_triple)?;
            let rep = PreparedCode::new(&rep.code(), opts)?;
            if rep.signature() == target.signature() && rep.equivalent_to(&target, opts.node_cap)? {
                return Ok(Some(class.class_id));
            }
        }
        Ok(None)
    }

    /// One JSON object per class.
    pub fn json_lines(&self) -> String {
        self.classes
            .iter()
            .map(|c| serde_json::to_string(c).expect("record serializes") + "\n")
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// `None` picks the filter natural to the field.
    pub reduction: Option<Reduction>,
    pub workers: usize,
    pub max_work: u128,
    pub equivalence: EquivalenceOptions,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            reduction: None,
            workers: 0,
            max_work: DEFAULT_MAX_WORK,
            equivalence: EquivalenceOptions::default(),
        }
    }
}

pub fn classify(field: Field, n: usize) -> Result<ClassificationReport> {
    classify_with(field, n, &ClassifyOptions::default())
}

fn search(field: Field, n: usize, family: Family, reduction: Reduction, mode: SearchMode, opts: &ClassifyOptions) -> Result<Vec<Candidate>> {
    let mut config = SearchConfig::new(field, n, family)
        .reduction(reduction)
        .mode(mode)
        .workers(0);
    config.max_work = opts.max_work;
    config.budget = opts.equivalence.budget;
    let report = run_search(&config, None)?;
    Ok(report.hits.into_iter().map(|h| h.candidate).collect())
}

fn prepare(codes: Vec<GeneratorCode>, opts: &EquivalenceOptions) -> Result<Vec<PreparedCode>> {
    codes.par_iter().map(|c| PreparedCode::new(c, opts)).collect()
}

/// Representatives of the equivalence classes among `prepared`.
fn class_representatives(prepared: Vec<PreparedCode>, node_cap: u64) -> Result<Vec<PreparedCode>> {
    let classes = dedupe_prepared(&prepared, node_cap)?;
    Ok(classes.into_iter().map(|c| prepared[c[0]].clone()).collect())
}

fn matches_any(code: &PreparedCode, reps: &[PreparedCode], node_cap: u64) -> Result<bool> {
    for r in reps.iter().filter(|r| r.signature() == code.signature()) {
        if code.equivalent_to(r, node_cap)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn classify_with(field: Field, n: usize, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    check_even(n)?;
    let reduction = opts.reduction.unwrap_or(Reduction::natural(field));
    let eq = &opts.equivalence;
    let work = || -> Result<ClassificationReport> {
        let mut config = SearchConfig::new(field, n, Family::Toeplitz)
            .reduction(reduction)
            .workers(0);
        config.max_work = opts.max_work;
        config.budget = eq.budget;
        let report = run_search(&config, None)?;
        let d_opt = report.optimal_d.expect("find-optimal mode");
        let triples: Vec<ToeplitzTriple> = report.hits.iter().map(|h| h.candidate.triple()).collect();

        let dt = prepare(triples.iter().map(ToeplitzTriple::code).collect(), eq)?;
        let classes = dedupe_prepared(&dt, eq.node_cap)?;

        // Optimal codes of the two circulant families. Over fields of
        // characteristic 2 the negacirculant family is the circulant one.
        let family_reps = |family: Family| -> Result<Vec<PreparedCode>> {
            let found = search(field, n, family, Reduction::None, SearchMode::CollectAt(d_opt), opts)?;
            class_representatives(prepare(found.iter().map(Candidate::code).collect(), eq)?, eq.node_cap)
        };
        let dc = family_reps(Family::Circulant)?;
        let nc = if field.is_char2() {
            Vec::new()
        } else {
            family_reps(Family::Negacirculant)?
        };

        let structures = classes
            .par_iter()
            .map(|class| {
                let rep = &dt[class[0]];
                Ok(if matches_any(rep, &dc, eq.node_cap)? {
                    Structure::DoubleCirculant
                } else if matches_any(rep, &nc, eq.node_cap)? {
                    Structure::DoubleNegacirculant
                } else {
                    Structure::ToeplitzOnly
                })
            })
            .collect::<Result<Vec<_>>>()?;

        let records: Vec<ClassRecord> = classes
            .iter()
            .zip(&structures)
            .enumerate()
            .map(|(id, (class, &structure))| ClassRecord {
                q: field.q(),
                n,
                d: d_opt,
                class_id: id,
                representative_triple: triples[class[0]].to_string(),
                members: class.len(),
                structure,
            })
            .collect();
        let count = |s: Structure| records.iter().filter(|r| r.structure == s).count();
        Ok(ClassificationReport {
            q: field.q(),
            n,
            d_opt,
            reduction,
            n_dt: count(Structure::ToeplitzOnly),
            n_dc: count(Structure::DoubleCirculant),
            n_nc: count(Structure::DoubleNegacirculant),
            circulant_classes: dc.len(),
            negacirculant_classes: nc.len(),
            classes: records,
        })
    };
    if opts.workers == 0 {
        work()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("cannot start {} workers: {e}", opts.workers)))?
            .install(work)
    }
}

/// Outcome of comparing a filtered classification with an unfiltered one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SoundnessReport {
    pub filtered_classes: usize,
    pub unfiltered_classes: usize,
    pub same_counts: bool,
    /// Every filtered representative is equivalent to exactly one unfiltered
    /// representative with the same structure, and vice versa.
    pub representatives_match: bool,
}

impl SoundnessReport {
    pub fn passed(&self) -> bool {
        self.same_counts && self.representatives_match
    }
}

pub fn verify_reduction_soundness(field: Field, n: usize) -> Result<SoundnessReport> {
    let eq = EquivalenceOptions::default();
    let filtered = classify_with(field, n, &ClassifyOptions::default())?;
    let full = classify_with(
        field,
        n,
        &ClassifyOptions {
            reduction: Some(Reduction::None),
            ..Default::default()
        },
    )?;
    let same_counts = filtered.d_opt == full.d_opt
        && (filtered.n_dt, filtered.n_dc, filtered.n_nc) == (full.n_dt, full.n_dc, full.n_nc);

    let reps = |r: &ClassificationReport| -> Result<Vec<(PreparedCode, Structure)>> {
        r.classes
            .iter()
            .map(|c| {
                let t = ToeplitzTriple::parse(field, &c.representative_triple)?;
                Ok((PreparedCode::new(&t.code(), &eq)?, c.structure))
            })
            .collect()
    };
    let a = reps(&filtered)?;
    let b = reps(&full)?;
    let mut representatives_match = a.len() == b.len();
    if representatives_match {
        let mut partner_count = vec![0usize; b.len()];
        for (pa, sa) in &a {
            let mut hits = 0;
            for (j, (pb, sb)) in b.iter().enumerate() {
                if pa.signature() == pb.signature() && pa.equivalent_to(pb, eq.node_cap)? {
                    hits += 1;
                    partner_count[j] += 1;
                    representatives_match &= sa == sb;
                }
            }
            representatives_match &= hits == 1;
        }
        representatives_match &= partner_count.iter().all(|&c| c == 1);
    }
    Ok(SoundnessReport {
        filtered_classes: filtered.total_classes(),
        unfiltered_classes: full.total_classes(),
        same_counts,
        representatives_match,
    })
}

/// Binary double Toeplitz codes with only even weights, compared with
/// double circulant codes of the same length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenWeightReport {
    pub n: usize,
    /// Triples whose code has only even weights.
    pub even_codes: usize,
    /// Those whose code is equivalent to some double circulant code.
    pub equivalent_to_circulant: usize,
    /// Those whose Toeplitz block is itself circulant.
    pub circulant_block: usize,
}

pub fn even_weight_diagnostic(n: usize) -> Result<EvenWeightReport> {
    let field = Field::F2;
    let m = check_even(n)?;
    if n > 12 {
        return Err(Error::InvalidArgument(format!(
            "even-weight diagnostic is limited to n <= 12, got {n}"
        )));
    }
    let eq = EquivalenceOptions::default();
    let even: Vec<ToeplitzTriple> = all_triples(field, m)
        .filter(|t| {
            let we = t.code().weight_enumerator().expect("small code");
            we.coeffs().iter().skip(1).step_by(2).all(|c| c == &Default::default())
        })
        .collect();
    let circulants = (0..1u64 << m)
        .map(|i| {
            let r = crate::code::FqVector::new(field, crate::structured::vector_at(field, m, i))?;
            Ok(CirculantSpec::circulant(&r)?.code())
        })
        .collect::<Result<Vec<_>>>()?;
    let reps = class_representatives(prepare(circulants, &eq)?, eq.node_cap)?;
    let mut equivalent = 0;
    for t in &even {
        if matches_any(&PreparedCode::new(&t.code(), &eq)?, &reps, eq.node_cap)? {
            equivalent += 1;
        }
    }
    Ok(EvenWeightReport {
        n,
        even_codes: even.len(),
        equivalent_to_circulant: equivalent,
        circulant_block: even.iter().filter(|t| t.classify() != TripleKind::Neither).count(),
    })
}
