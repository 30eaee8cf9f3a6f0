//! Saturation sweeps over boxes of dominant weights.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use demazure::conehb::{cone_build, hilbert_basis, property_p_check};
use demazure::polytope::saturation_report;
use demazure::weyl::parse_word;
use demazure::{LieType, RootDatum, Weight, WeylElement, WeylGroup};

use crate::args::{Format, SweepArgs};
use crate::cache::Cache;
use crate::commands::{build_group, pool, Status};
use crate::emit::{emit, weight_csv, word_str, Table};
use crate::error::{CliError, CliResult, Context};

pub const CACHE_ENV: &str = "DEMAZURE_CACHE_DIR";
const MAX_INSTANCES: usize = 10_000_000;
const CONVENTION: &str = "cartan[i][j]=<alpha_j,alpha_i^vee>;weights in omega basis;coweights in coroot basis;bourbaki";

/// SHA-256 over the convention tag and the Cartan matrices of all simple
/// types of rank at most 8.
pub fn fingerprint() -> String {
    let mut h = Sha256::new();
    h.update(CONVENTION.as_bytes());
    let types = [
        (LieType::A, 1..=8),
        (LieType::B, 2..=8),
        (LieType::C, 2..=8),
        (LieType::D, 4..=8),
        (LieType::E, 6..=8),
        (LieType::F, 4..=4),
        (LieType::G, 2..=2),
    ];
    for (t, ranks) in types {
        for r in ranks {
            let d = RootDatum::new(t, r).expect("valid simple type");
            h.update(format!("|{}:{:?}", d.label(), d.cartan()).as_bytes());
        }
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub lattice_points: usize,
    pub weights: usize,
    pub dimension: i128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancies {
    pub missing_from_character: Vec<Vec<i64>>,
    pub missing_from_polytope: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyPSummary {
    pub holds: bool,
    pub hilbert_basis: usize,
    pub extremal_rays: usize,
    pub zero_multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub lambda: Vec<i64>,
    pub word: String,
    pub status: String,
    pub counts: Counts,
    pub discrepancies: Discrepancies,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property_p: Option<PropertyPSummary>,
}

impl InstanceRecord {
    fn failed(&self) -> bool {
        self.status != "ok"
    }
}

#[derive(Debug, Serialize)]
struct Failure {
    lambda: Vec<i64>,
    word: String,
    reason: String,
}

#[derive(Debug, Serialize)]
struct Summary {
    instances: usize,
    failures: usize,
}

#[derive(Debug, Serialize)]
struct Bounds {
    max_coord: i64,
    elements: String,
    property_p: bool,
}

#[derive(Debug, Serialize)]
struct SweepReport {
    tool: &'static str,
    version: &'static str,
    fingerprint: String,
    #[serde(rename = "type")]
    lie_type: String,
    rank: usize,
    conjectural: bool,
    bounds: Bounds,
    summary: Summary,
    failures: Vec<Failure>,
    records: Vec<InstanceRecord>,
}

fn dominant_box(rank: usize, max: i64) -> Vec<Weight> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|p| {
                (0..=max).map(move |c| {
                    let mut q = p.clone();
                    q.push(c);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

fn select_elements(g: &WeylGroup, args: &SweepArgs) -> CliResult<(Vec<WeylElement>, String)> {
    if let Some(word) = &args.word {
        let w = parse_word(word, g.rank()).ctx(|| format!("word=[{word}]"))?;
        let x = g.from_reduced_word(&w).ctx(|| format!("word=[{word}]"))?;
        return Ok((vec![x], format!("word {}", word_str(&w))));
    }
    let mut elems: Vec<WeylElement> = g.elements().collect();
    let mut desc = "all".to_string();
    if let Some(l) = args.max_length {
        elems.retain(|&x| g.length(x) <= l);
        desc = format!("length <= {l}");
    }
    if let Some(n) = args.sample {
        if n > elems.len() {
            return Err(CliError::Usage(format!("--sample {n} exceeds the {} candidate elements", elems.len())));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let mut idx = rand::seq::index::sample(&mut rng, elems.len(), n).into_vec();
        idx.sort_unstable();
        elems = idx.into_iter().map(|k| elems[k]).collect();
        desc = format!("{desc}; sample {n} with seed {}", args.seed);
    }
    Ok((elems, desc))
}

fn compute(g: &WeylGroup, lambda: &Weight, w: WeylElement, pp: Option<&PropertyPSummary>) -> CliResult<InstanceRecord> {
    let word = g.word(w);
    let rep = saturation_report(g, lambda, w).ctx(|| format!("lambda={lambda} word=[{}]", word_str(&word)))?;
    let ok = rep.is_saturated() && pp.is_none_or(|p| p.holds && p.zero_multiplicity == 0);
    Ok(InstanceRecord {
        lambda: lambda.0.clone(),
        word: word_str(&word),
        status: if ok { "ok" } else { "discrepancy" }.into(),
        counts: Counts {
            lattice_points: rep.lattice_points.len(),
            weights: rep.character.len(),
            dimension: rep.character.dimension(),
        },
        discrepancies: Discrepancies {
            missing_from_character: rep.missing_from_character.iter().map(|m| m.0.clone()).collect(),
            missing_from_polytope: rep.missing_from_polytope.iter().map(|m| m.0.clone()).collect(),
        },
        property_p: pp.cloned(),
    })
}

fn property_p_summary(g: &WeylGroup, w: WeylElement) -> CliResult<PropertyPSummary> {
    let ctx = || format!("word=[{}]", word_str(&g.word(w)));
    let cone = cone_build(g, w).ctx(ctx)?;
    let hb = hilbert_basis(g, &cone).ctx(ctx)?;
    let rep = property_p_check(g, w, &hb.elements).ctx(ctx)?;
    Ok(PropertyPSummary {
        holds: rep.holds(),
        hilbert_basis: hb.elements.len(),
        extremal_rays: cone.rays.len(),
        zero_multiplicity: rep.zero_multiplicity.len(),
    })
}

fn cache_key(lambda: &Weight, w: &str, property_p: bool) -> String {
    format!("{}|{w}|{}", weight_csv(lambda), if property_p { "p" } else { "-" })
}

fn failure_reason(r: &InstanceRecord) -> String {
    let d = &r.discrepancies;
    let mut parts = Vec::new();
    if !d.missing_from_character.is_empty() {
        parts.push(format!("{} lattice points without weight", d.missing_from_character.len()));
    }
    if !d.missing_from_polytope.is_empty() {
        parts.push(format!("{} weights outside the polytope", d.missing_from_polytope.len()));
    }
    if let Some(p) = &r.property_p {
        if !p.holds {
            parts.push("property P fails".into());
        }
        if p.zero_multiplicity > 0 {
            parts.push(format!("{} basis elements with zero multiplicity", p.zero_multiplicity));
        }
    }
    parts.join("; ")
}

pub fn sweep_cmd(args: &SweepArgs) -> CliResult<Status> {
    let start = Instant::now();
    let g = build_group(&args.group)?;
    if args.max_coord < 0 {
        return Err(CliError::Usage("--max-coord must be nonnegative".into()));
    }
    let (elems, desc) = select_elements(&g, args)?;
    let lambdas = dominant_box(g.rank(), args.max_coord);
    let total = lambdas.len().saturating_mul(elems.len());
    if total > MAX_INSTANCES {
        return Err(CliError::Usage(format!("{total} instances exceed the cap of {MAX_INSTANCES}")));
    }
    let instances: Vec<(Weight, WeylElement)> =
        lambdas.iter().flat_map(|l| elems.iter().map(move |&w| (l.clone(), w))).collect();
    let fp = fingerprint();
    let pool = pool(args.jobs)?;

    let cache_dir: Option<PathBuf> = args.cache_dir.clone().or_else(|| std::env::var_os(CACHE_ENV).map(PathBuf::from));
    let mut cache = match &cache_dir {
        Some(dir) => Some(Cache::open(dir, &fp, g.datum().label(), g.rank())?),
        None => None,
    };

    let pp: BTreeMap<WeylElement, PropertyPSummary> = if args.property_p {
        let list: Vec<CliResult<(WeylElement, PropertyPSummary)>> =
            pool.install(|| elems.par_iter().map(|&w| Ok((w, property_p_summary(&g, w)?))).collect());
        list.into_iter().collect::<CliResult<_>>()?
    } else {
        BTreeMap::new()
    };

    let keys: Vec<String> =
        instances.iter().map(|(l, w)| cache_key(l, &word_str(&g.word(*w)), args.property_p)).collect();
    let mut records: Vec<Option<InstanceRecord>> = match &cache {
        Some(c) => keys.iter().map(|k| c.get(k).cloned()).collect(),
        None => vec![None; instances.len()],
    };
    let hits: Vec<usize> = (0..records.len()).filter(|&k| records[k].is_some()).collect();
    if let Some(c) = cache.as_mut() {
        // re-verify every hundredth hit (at least one) from scratch
        let sample: Vec<usize> = hits.iter().copied().step_by(100).collect();
        let fresh: Vec<CliResult<InstanceRecord>> = pool.install(|| {
            sample
                .par_iter()
                .map(|&k| compute(&g, &instances[k].0, instances[k].1, pp.get(&instances[k].1)))
                .collect()
        });
        for (&k, f) in sample.iter().zip(fresh) {
            if records[k].as_ref() != Some(&f?) {
                log::warn!("cache {} failed re-verification; rebuilding from scratch", c.path().display());
                c.clear();
                records.iter_mut().for_each(|r| *r = None);
                break;
            }
        }
        log::info!("{} of {} instances served from cache", records.iter().filter(|r| r.is_some()).count(), total);
    }

    let todo: Vec<usize> = (0..records.len()).filter(|&k| records[k].is_none()).collect();
    let computed: Vec<CliResult<InstanceRecord>> = pool.install(|| {
        todo.par_iter()
            .map(|&k| compute(&g, &instances[k].0, instances[k].1, pp.get(&instances[k].1)))
            .collect()
    });
    for (&k, r) in todo.iter().zip(computed) {
        let r = r?;
        if let Some(c) = cache.as_mut() {
            c.insert(keys[k].clone(), r.clone());
        }
        records[k] = Some(r);
    }
    if let Some(c) = &cache {
        c.save()?;
    }

    let records: Vec<InstanceRecord> = records.into_iter().map(|r| r.expect("every instance computed")).collect();
    let failures: Vec<Failure> = records
        .iter()
        .filter(|r| r.failed())
        .map(|r| Failure { lambda: r.lambda.clone(), word: r.word.clone(), reason: failure_reason(r) })
        .collect();
    let mut table = Table::new(&[
        "lambda",
        "word",
        "status",
        "lattice_points",
        "weights",
        "dimension",
        "missing_from_character",
        "missing_from_polytope",
    ]);
    let list = |v: &[Vec<i64>]| v.iter().map(|w| format!("{}", Weight(w.clone()))).collect::<Vec<_>>().join(" ");
    for r in &records {
        table.push(vec![
            r.lambda.iter().map(i64::to_string).collect::<Vec<_>>().join(","),
            r.word.clone(),
            r.status.clone(),
            r.counts.lattice_points.to_string(),
            r.counts.weights.to_string(),
            r.counts.dimension.to_string(),
            list(&r.discrepancies.missing_from_character),
            list(&r.discrepancies.missing_from_polytope),
        ]);
    }
    let n_fail = failures.len();
    let report = SweepReport {
        tool: "demazure",
        version: env!("CARGO_PKG_VERSION"),
        fingerprint: fp,
        lie_type: g.datum().label().to_string(),
        rank: g.rank(),
        conjectural: g.datum().lie_type() == Some(LieType::E),
        bounds: Bounds { max_coord: args.max_coord, elements: desc, property_p: args.property_p },
        summary: Summary { instances: records.len(), failures: n_fail },
        failures,
        records,
    };
    emit(&args.out, Format::Json, &report, table)?;
    eprintln!(
        "sweep {}: {} instances, {} failures, {:.2}s wall time",
        g.datum().label(),
        total,
        n_fail,
        start.elapsed().as_secs_f64()
    );
    Ok(Status::from_ok(n_fail == 0))
}
