use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use braidpoly::catalog::{catalog, named_example, CatalogSpec, Family};
use braidpoly::json;
use braidpoly::sweep::{fibered_knot_profile, verify_sweep, SweepOptions};
use braidpoly_core::homfly::alexander;
use braidpoly_core::link::{decompose, link_profile};
use braidpoly_core::normalized::normalize;
use braidpoly_core::{BraidWord, EngineLimits, HomflyEngine, LinkProfile, LocalCache};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

/// HOMFLY polynomials of closed braids and coefficient checks for positive
/// braid links.
#[derive(Parser)]
#[command(version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Link profile (#K, χ, s, p, m, d, genus) of a positive word as JSON.
    Invariants { word: String },
    /// HOMFLY polynomial.
    Homfly {
        word: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Normalized grid and theorem report as JSON.
    Normalized {
        word: String,
        /// Knot profile `{"genus":G,"s":S,"p":P}` replacing the computed one.
        #[arg(long)]
        profile_override: Option<String>,
    },
    /// Split / connected-sum tree of a positive word as JSON.
    Decompose { word: String },
    /// Jones polynomial in t.
    Jones { word: String },
    /// Conway polynomial in z.
    Conway { word: String },
    /// Symmetrized Alexander polynomial in t.
    Alexander { word: String },
    /// Checks every catalog word; exits nonzero on any failure.
    Verify {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_length: usize,
        /// Comma-separated families (default: all_positive_words).
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// JSON-lines report path; the summary table goes to stderr.
        #[arg(long)]
        out: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lists catalog words, one per line.
    Catalog {
        #[arg(long)]
        strands: usize,
        #[arg(long)]
        max_length: usize,
        #[arg(long, value_delimiter = ',')]
        families: Vec<Family>,
    },
}

fn limits_from_env() -> Result<EngineLimits> {
    let mut limits = EngineLimits::default();
    if let Ok(v) = std::env::var("BRAIDPOLY_NODE_CAP") {
        limits.node_cap = v.parse().context("BRAIDPOLY_NODE_CAP")?;
    }
    if let Ok(v) = std::env::var("BRAIDPOLY_MEMO_CAP") {
        limits.max_memo = v.parse().context("BRAIDPOLY_MEMO_CAP")?;
    }
    Ok(limits)
}

/// A named example or `n: letters`.
fn parse_word(s: &str) -> Result<BraidWord> {
    if let Some(w) = named_example(s.trim()) {
        return Ok(w);
    }
    s.parse()
        .with_context(|| format!("cannot parse braid word `{s}`"))
}

fn spec(strands: usize, max_length: usize, families: Vec<Family>) -> CatalogSpec {
    let families = if families.is_empty() {
        [Family::AllPositiveWords].into()
    } else {
        families.into_iter().collect()
    };
    CatalogSpec {
        max_strands: strands,
        max_length,
        families,
    }
}

fn profile_for(
    w: &BraidWord,
    engine: &HomflyEngine<LocalCache>,
    over: Option<&str>,
) -> Result<LinkProfile> {
    if let Some(text) = over {
        let v: serde_json::Value =
            serde_json::from_str(text).context("parsing --profile-override")?;
        let field = |k: &str| {
            v.get(k)
                .and_then(|x| x.as_i64())
                .with_context(|| format!("override needs integer `{k}`"))
        };
        let (g, s, p) = (field("genus")?, field("s")?, field("p")?);
        return Ok(LinkProfile::from_invariants(
            w.strands(),
            1,
            1 - 2 * g,
            s,
            p,
        )?);
    }
    if w.is_positive() {
        return Ok(link_profile(w, engine.limits().node_cap)?);
    }
    let delta = alexander(&engine.homfly(w)?);
    fibered_knot_profile(w, &delta).context("word is not positive: pass --profile-override")
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = limits_from_env()?;
    let engine = HomflyEngine::with_limits(LocalCache::new(), limits);
    let mut out = io::stdout().lock();
    match cli.command {
        Command::Invariants { word } => {
            let w = parse_word(&word)?;
            writeln!(
                out,
                "{}",
                json::profile(&link_profile(&w, limits.node_cap)?)
            )?;
        }
        Command::Homfly { word, format } => {
            let p = engine.homfly(&parse_word(&word)?)?;
            match format {
                Format::Text => writeln!(out, "{p}")?,
                Format::Json => writeln!(out, "{}", json::poly(&p))?,
            }
        }
        Command::Normalized {
            word,
            profile_override,
        } => {
            let w = parse_word(&word)?;
            let prof = profile_for(&w, &engine, profile_override.as_deref())?;
            let grid = normalize(&engine.homfly(&w)?, &prof)?;
            let report = json!({
                "profile": json::profile(&prof),
                "grid": json::grid(&grid),
                "theorem": json::theorem(&grid.check()),
            });
            writeln!(out, "{report}")?;
        }
        Command::Decompose { word } => {
            let tree = decompose(&parse_word(&word)?, limits.node_cap)?;
            writeln!(out, "{}", json::tree(&tree))?;
        }
        Command::Jones { word } => {
            writeln!(out, "{}", engine.jones(&parse_word(&word)?)?.display_half())?;
        }
        Command::Conway { word } => {
            writeln!(
                out,
                "{}",
                engine.conway(&parse_word(&word)?)?.display_with("z")
            )?;
        }
        Command::Alexander { word } => {
            writeln!(
                out,
                "{}",
                engine.alexander(&parse_word(&word)?)?.display_half()
            )?;
        }
        Command::Verify {
            strands,
            max_length,
            families,
            jobs,
            out: path,
            seed,
        } => {
            let mut opts = SweepOptions::new(spec(strands, max_length, families));
            opts.jobs = jobs;
            opts.limits = limits;
            opts.seed = seed;
            let report = verify_sweep(&opts)?;
            let mut sink: Box<dyn Write> = match &path {
                Some(p) => Box::new(BufWriter::new(
                    File::create(p).with_context(|| format!("creating {p}"))?,
                )),
                None => Box::new(&mut out),
            };
            for line in report.json_lines() {
                writeln!(sink, "{line}")?;
            }
            sink.flush()?;
            drop(sink);
            eprint!("{}", report.table());
            if !report.ok() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Catalog {
            strands,
            max_length,
            families,
        } => {
            for e in catalog(&spec(strands, max_length, families)) {
                match e.name {
                    Some(n) => writeln!(out, "{}\t{n}", e.word)?,
                    None => writeln!(out, "{}", e.word)?,
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
