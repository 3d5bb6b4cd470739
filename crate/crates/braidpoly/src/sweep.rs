//! Exhaustive verification over a catalog.
//!
//! Every positive word gets its profile, HOMFLY polynomial, normalized grid
//! and theorem checks; knots additionally get the Conway and Jones
//! coefficient reports and both oracle cross-checks. Words that are not
//! positive (two of the named examples) are evaluated for information only and
//! never count as failures.

use std::time::Instant;

use anyhow::Context;
use braidpoly_core::homfly::{alexander, conway, jones};
use braidpoly_core::link::{decompose, LinkProfile};
use braidpoly_core::normalized::{
    conway_report, h_invariant, jones_report, lspace_screen, normalize, ConwayReport, JonesReport,
    LspaceScreen, Status, TheoremItem,
};
use braidpoly_core::{
    BraidWord, CanonicalKey, EngineLimits, Error, HGrid, HomflyEngine, LaurentPoly2, NoCache,
    PolyCache, TheoremReport,
};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value as Json};

use crate::cache::SharedCache;
use crate::catalog::{catalog, CatalogEntry, CatalogSpec};
use crate::json;
use crate::oracle::{bracket_jones, burau_alexander, MAX_BRACKET_CROSSINGS};

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub spec: CatalogSpec,
    /// Worker threads; 0 lets the pool decide.
    pub jobs: usize,
    pub limits: EngineLimits,
    /// Fraction of words re-evaluated without memoization.
    pub memo_sample_rate: f64,
    pub seed: u64,
}

impl SweepOptions {
    pub fn new(spec: CatalogSpec) -> Self {
        Self {
            spec,
            jobs: 0,
            limits: EngineLimits::default(),
            memo_sample_rate: 0.05,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct KnotChecks {
    pub conway: ConwayReport,
    pub jones: JonesReport,
    pub lspace: LspaceScreen,
    /// `None` when the word is too long for the bracket oracle.
    pub jones_oracle: Option<bool>,
    pub alexander_oracle: bool,
}

impl KnotChecks {
    pub fn ok(&self) -> bool {
        self.conway.ok()
            && self.jones.ok()
            && self.jones_oracle != Some(false)
            && self.alexander_oracle
    }
}

#[derive(Clone, Debug)]
pub struct Evaluation {
    pub profile: LinkProfile,
    pub homfly: LaurentPoly2,
    pub grid: HGrid,
    pub theorem: TheoremReport,
    /// `h_{1,d-1} = p`; `None` for words that are not positive.
    pub decomposition_ok: Option<bool>,
    pub knot: Option<KnotChecks>,
    /// Memoized and unmemoized evaluation agree; `None` if not sampled.
    pub memo_ok: Option<bool>,
}

#[derive(Clone, Debug)]
pub struct WordRecord {
    pub key: CanonicalKey,
    pub entry: CatalogEntry,
    /// Not positive: reported, never counted as a failure.
    pub informational: bool,
    pub outcome: Result<Evaluation, Error>,
}

impl WordRecord {
    pub fn passed(&self) -> bool {
        match &self.outcome {
            Err(_) => false,
            Ok(e) => {
                e.theorem.all_ok()
                    && e.decomposition_ok != Some(false)
                    && e.knot.as_ref().is_none_or(KnotChecks::ok)
                    && e.memo_ok != Some(false)
            }
        }
    }

    pub fn to_json(&self) -> Json {
        let mut obj = json!({
            "key": self.key.to_string(),
            "word": self.entry.word.to_string(),
            "name": self.entry.name,
            "informational": self.informational,
            "pass": self.passed(),
        });
        let map = obj.as_object_mut().expect("object");
        match &self.outcome {
            Err(e) => {
                map.insert("error".into(), json!(e.to_string()));
            }
            Ok(e) => {
                map.insert("profile".into(), json::profile(&e.profile));
                map.insert("homfly".into(), json::poly(&e.homfly));
                map.insert("grid".into(), json::grid(&e.grid));
                map.insert("h".into(), json!(h_invariant(&e.grid).to_string()));
                map.insert("theorem".into(), json::theorem(&e.theorem));
                map.insert("decomposition".into(), json!(e.decomposition_ok));
                map.insert("memo".into(), json!(e.memo_ok));
                if let Some(k) = &e.knot {
                    map.insert(
                        "knot".into(),
                        json!({
                            "conway": json::conway_report(&k.conway),
                            "jones": json::jones_report(&k.jones),
                            "lspace": json::lspace(&k.lspace),
                            "jones_oracle": k.jones_oracle,
                            "alexander_oracle": k.alexander_oracle,
                        }),
                    );
                }
            }
        }
        obj
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub words: usize,
    pub informational: usize,
    pub knots: usize,
    pub failures: usize,
    pub errors: usize,
    /// Per theorem item, in item order: (label, pass, fail, vacuous) over
    /// counted words.
    pub items: Vec<(&'static str, usize, usize, usize)>,
    pub conway_failures: usize,
    pub jones_failures: usize,
    pub oracle_failures: usize,
    pub oracle_checks: usize,
    pub decomposition_failures: usize,
    pub memo_checks: usize,
    pub memo_failures: usize,
}

impl Summary {
    pub fn to_json(&self) -> Json {
        let items: serde_json::Map<String, Json> = self
            .items
            .iter()
            .map(|(k, p, f, v)| {
                (
                    (*k).to_string(),
                    json!({"pass": p, "fail": f, "vacuous": v}),
                )
            })
            .collect();
        json!({
            "words": self.words,
            "informational": self.informational,
            "knots": self.knots,
            "failures": self.failures,
            "errors": self.errors,
            "items": items,
            "conway_failures": self.conway_failures,
            "jones_failures": self.jones_failures,
            "oracle_checks": self.oracle_checks,
            "oracle_failures": self.oracle_failures,
            "decomposition_failures": self.decomposition_failures,
            "memo_checks": self.memo_checks,
            "memo_failures": self.memo_failures,
        })
    }
}

#[derive(Clone, Debug, Default)]
pub struct Telemetry {
    pub elapsed_ms: u128,
    pub expansions: usize,
    pub cache_hits: usize,
    pub cache_entries: usize,
}

#[derive(Debug)]
pub struct SweepReport {
    /// Ordered by canonical key.
    pub records: Vec<WordRecord>,
    pub summary: Summary,
    pub telemetry: Telemetry,
}

impl SweepReport {
    pub fn ok(&self) -> bool {
        self.summary.failures == 0
    }

    /// One JSON object per word.
    pub fn json_lines(&self) -> impl Iterator<Item = String> + '_ {
        self.records.iter().map(|r| r.to_json().to_string())
    }

    pub fn table(&self) -> String {
        let s = &self.summary;
        let mut out = String::new();
        out.push_str(&format!(
            "words {}  informational {}  knots {}  failures {}  errors {}\n",
            s.words, s.informational, s.knots, s.failures, s.errors
        ));
        out.push_str("item      pass      fail   vacuous\n");
        for (k, p, f, v) in &s.items {
            out.push_str(&format!("{k:<4} {p:>9} {f:>9} {v:>9}\n"));
        }
        out.push_str(&format!(
            "conway failures {}  jones failures {}  oracle {}/{} failed  decomposition failures {}  memo {}/{} failed\n",
            s.conway_failures,
            s.jones_failures,
            s.oracle_failures,
            s.oracle_checks,
            s.decomposition_failures,
            s.memo_failures,
            s.memo_checks
        ));
        let t = &self.telemetry;
        out.push_str(&format!(
            "elapsed {} ms  expansions {}  cache hits {}  cache entries {}\n",
            t.elapsed_ms, t.expansions, t.cache_hits, t.cache_entries
        ));
        out
    }
}

/// Knot profile inferred from the Alexander span, `g = deg_t Δ`, with one
/// split and one prime factor. Used for words that are not positive.
pub fn fibered_knot_profile(
    w: &BraidWord,
    alexander_s: &braidpoly_core::Laurent1,
) -> Result<LinkProfile, Error> {
    if w.closure_components() != 1 {
        return Err(Error::NotAKnot);
    }
    let g = alexander_s.max_degree().unwrap_or(0) as i64 / 2;
    LinkProfile::from_invariants(w.strands(), 1, 1 - 2 * g, 1, 1)
}

fn knot_checks(w: &BraidWord, p: &LaurentPoly2, grid: &HGrid) -> Result<KnotChecks, Error> {
    let v = jones(p, 1)?;
    let delta = alexander(p);
    let jones_oracle = (w.len() <= MAX_BRACKET_CROSSINGS)
        .then(|| bracket_jones(w).map(|o| o == v))
        .transpose()?;
    let jr = jones_report(&v, grid)?;
    Ok(KnotChecks {
        conway: conway_report(&conway(p), &grid.profile)?,
        lspace: lspace_screen(&jr, grid, &delta)?,
        jones: jr,
        jones_oracle,
        alexander_oracle: burau_alexander(w)? == delta,
    })
}

/// Full pipeline for one word.
pub fn evaluate<C: PolyCache>(
    engine: &HomflyEngine<C>,
    w: &BraidWord,
    memo_check: bool,
) -> Result<Evaluation, Error> {
    let node_cap = engine.limits().node_cap;
    let homfly = engine.homfly(w)?;
    let (profile, decomposition) = if w.is_positive() {
        let tree = decompose(w, node_cap)?;
        let prof = LinkProfile::from_invariants(
            w.strands(),
            w.closure_components() as i64,
            w.strands() as i64 - w.exponent_sum(),
            tree.split_count() as i64,
            tree.prime_count() as i64,
        )?;
        (prof, true)
    } else {
        (fibered_knot_profile(w, &alexander(&homfly))?, false)
    };
    let grid = normalize(&homfly, &profile)?;
    let theorem = grid.check();
    let decomposition_ok =
        decomposition.then(|| grid.h(1, profile.d - 1) == BigInt::from(profile.prime));
    let knot = if profile.is_knot() {
        Some(knot_checks(w, &homfly, &grid)?)
    } else {
        None
    };
    let memo_ok = if memo_check {
        let plain = HomflyEngine::with_limits(NoCache, *engine.limits());
        Some(plain.homfly(w)? == homfly)
    } else {
        None
    };
    Ok(Evaluation {
        profile,
        homfly,
        grid,
        theorem,
        decomposition_ok,
        knot,
        memo_ok,
    })
}

fn summarize(records: &[WordRecord]) -> Summary {
    let mut s = Summary {
        words: records.len(),
        ..Summary::default()
    };
    s.items = TheoremItem::ALL
        .iter()
        .map(|i| (i.label(), 0, 0, 0))
        .collect();
    for r in records {
        if r.informational {
            s.informational += 1;
            continue;
        }
        if !r.passed() {
            s.failures += 1;
        }
        let e = match &r.outcome {
            Ok(e) => e,
            Err(_) => {
                s.errors += 1;
                continue;
            }
        };
        for c in &e.theorem.items {
            let slot = s
                .items
                .iter_mut()
                .find(|x| x.0 == c.item.label())
                .expect("every item");
            match c.status {
                Status::Pass => slot.1 += 1,
                Status::Fail => slot.2 += 1,
                Status::Vacuous => slot.3 += 1,
            }
        }
        if e.decomposition_ok == Some(false) {
            s.decomposition_failures += 1;
        }
        if let Some(ok) = e.memo_ok {
            s.memo_checks += 1;
            s.memo_failures += usize::from(!ok);
        }
        if let Some(k) = &e.knot {
            s.knots += 1;
            s.conway_failures += usize::from(!k.conway.ok());
            s.jones_failures += usize::from(!k.jones.ok());
            s.oracle_checks += 1 + usize::from(k.jones_oracle.is_some());
            s.oracle_failures +=
                usize::from(k.jones_oracle == Some(false)) + usize::from(!k.alexander_oracle);
        }
    }
    s
}

/// Runs the sweep. Output order and counts do not depend on `jobs`.
pub fn verify_sweep(opts: &SweepOptions) -> anyhow::Result<SweepReport> {
    let start = Instant::now();
    let entries = catalog(&opts.spec);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let sampled: Vec<bool> = entries
        .iter()
        .map(|_| rng.gen_bool(opts.memo_sample_rate))
        .collect();
    let cache = SharedCache::new();
    let engine = HomflyEngine::with_limits(&cache, opts.limits);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .context("building worker pool")?;
    let mut records: Vec<WordRecord> = pool.install(|| {
        entries
            .par_iter()
            .zip(sampled.par_iter())
            .map(|(entry, &memo)| WordRecord {
                key: entry.word.canonical_key(),
                informational: !entry.word.is_positive(),
                outcome: evaluate(&engine, &entry.word, memo),
                entry: entry.clone(),
            })
            .collect()
    });
    records.sort_by(|a, b| a.key.cmp(&b.key));
    let summary = summarize(&records);
    let telemetry = Telemetry {
        elapsed_ms: start.elapsed().as_millis(),
        expansions: engine.expansions(),
        cache_hits: engine.cache_hits(),
        cache_entries: cache.len(),
    };
    Ok(SweepReport {
        records,
        summary,
        telemetry,
    })
}
