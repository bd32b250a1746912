//! Command line front end: construct catalog codes, enumerate weight
//! distributions, solve and check the Gleason families, verify table
//! claims, and inspect support designs.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use sdcodes::catalog::{self, Catalog};
use sdcodes::parallel;
use sdcodes::report::{
    parametric_rows, AlphaRangeJson, DesignJson, DivisibilityJson, Status, WeightEnumeratorJson,
};
use sdcodes::verify::{verify_entries, VerifyOptions};
use sdcodes_core::design::one_design_from_words;
use sdcodes_core::dynamic::{AnyCode, AnyVec};
use sdcodes_core::enumerate::DEFAULT_BUDGET;
use sdcodes_core::gleason::{
    alpha_range, divisibility_check, extremal_enumerator, max_m, parametric_near_extremal,
};
use sdcodes_core::FieldKind;

#[derive(Parser)]
#[command(
    name = "sdcodes",
    version,
    about = "Self-dual codes over GF(3)/GF(4): constructions, exact weight enumeration, Gleason-family checks"
)]
struct Cli {
    /// Cap on codewords visited by one full enumeration
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Catalog file (default: the builtin catalog)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,

    /// Also write the result as JSON to this path
    #[arg(long, global = true)]
    json: Option<PathBuf>,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum FieldArg {
    #[value(name = "F3", alias = "f3")]
    F3,
    #[value(name = "F4", alias = "f4")]
    F4,
}

impl From<FieldArg> for FieldKind {
    fn from(f: FieldArg) -> FieldKind {
        match f {
            FieldArg::F3 => FieldKind::F3,
            FieldArg::F4 => FieldKind::F4,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build catalog entries and show their parameters
    Construct {
        /// Entry ids, ranges like C36.1..C36.19, or `all`
        ids: Vec<String>,
        /// Print the generator matrix rows
        #[arg(long)]
        generator: bool,
    },

    /// Exhaustively enumerate the weight distribution of catalog entries
    Enumerate { ids: Vec<String> },

    /// Solve the near-extremal Gleason family for one field
    Gleason {
        #[arg(long, value_enum)]
        field: FieldArg,
        /// Family index (length 12m / 6m); required except for sweeps
        #[arg(long)]
        m: Option<usize>,
        /// Check s_w divisibility (all m when --m is omitted)
        #[arg(long)]
        check_divisibility: bool,
        /// Print the admissible range of the minimum-weight count
        #[arg(long)]
        alpha_range: bool,
        /// Print the alpha = 0 (extremal) specialization
        #[arg(long)]
        extremal: bool,
    },

    /// Verify catalog entries against their recorded claims
    Verify {
        /// Entry ids, ranges, or `all` (default: all)
        ids: Vec<String>,
        /// Skip the scalar-class / 1-design checks
        #[arg(long)]
        no_designs: bool,
    },

    /// Check whether codeword supports of one weight form a 1-design
    Design {
        id: String,
        #[arg(long)]
        weight: usize,
    },

    /// Build a neighbor of a catalog code from an explicit half-vector
    Neighbor {
        base: String,
        /// Comma-separated tokens for the last n/2 coordinates
        #[arg(long)]
        xhat: String,
        /// Also enumerate the resulting code
        #[arg(long)]
        enumerate: bool,
    },

    /// Validate and list the catalog
    Catalog {
        /// Print the canonical serialization instead of a summary
        #[arg(long)]
        emit: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(failures) => {
            if failures {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn load_catalog(cli: &Cli) -> Result<Catalog> {
    match &cli.catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            Catalog::parse(&text)
        }
        None => Ok(catalog::builtin()),
    }
}

fn write_json(cli: &Cli, value: &impl serde::Serialize) -> Result<()> {
    if let Some(path) = &cli.json {
        let text = serde_json::to_string_pretty(value)?;
        std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

/// Runs the subcommand; Ok(true) means some check failed (exit 1).
fn run(cli: &Cli) -> Result<bool> {
    match &cli.cmd {
        Cmd::Construct { ids, generator } => {
            let cat = load_catalog(cli)?;
            let entries = cat.expand_ids(ids)?;
            if entries.is_empty() {
                bail!("no ids given");
            }
            for e in entries {
                let code = cat.construct(&e.id)?;
                println!(
                    "{}: {} [{},{}] over {}, self-dual: {}",
                    e.id,
                    e.family,
                    code.len(),
                    code.dim(),
                    e.field,
                    code.is_self_dual()
                );
                if *generator {
                    for row in code.generator_rows() {
                        println!("  {}", row.render());
                    }
                }
            }
            Ok(false)
        }

        Cmd::Enumerate { ids } => {
            let cat = load_catalog(cli)?;
            let entries = cat.expand_ids(ids)?;
            if entries.is_empty() {
                bail!("no ids given");
            }
            let mut out = Vec::new();
            for e in entries {
                let code = cat.construct(&e.id)?;
                let we = parallel::any_weight_enumerator(&code, cli.budget)
                    .map_err(|err| anyhow!("{}: {err}", e.id))?;
                println!("{} (n = {}):", e.id, we.len());
                for (w, c) in we.iter() {
                    println!("  {w:>4}  {c}");
                }
                out.push(WeightEnumeratorJson::new(e.field, &we));
            }
            write_json(cli, &out)?;
            Ok(false)
        }

        Cmd::Gleason {
            field,
            m,
            check_divisibility,
            alpha_range: want_range,
            extremal,
        } => {
            let field: FieldKind = (*field).into();
            if *check_divisibility {
                let ms: Vec<usize> = match m {
                    Some(m) => vec![*m],
                    None => (1..=max_m(field)).collect(),
                };
                let reports = ms
                    .par_iter()
                    .map(|&m| divisibility_check(field, m))
                    .collect::<Result<Vec<_>, _>>()?;
                let mut all_pass = true;
                for r in &reports {
                    let verdict = if r.passed() { "pass" } else { "FAIL" };
                    println!("{field} m={} mod {}: {verdict}", r.m, r.modulus);
                    all_pass &= r.passed();
                }
                let json: Vec<DivisibilityJson> =
                    reports.iter().map(DivisibilityJson::new).collect();
                write_json(cli, &json)?;
                return Ok(!all_pass);
            }
            let m = m.ok_or_else(|| anyhow!("--m is required here"))?;
            if *want_range {
                let r = alpha_range(field, m)?;
                println!(
                    "{field} m={m}: alpha = {} * beta, beta in [{}, {}]",
                    r.modulus, r.beta_min, r.beta_max
                );
                write_json(cli, &AlphaRangeJson::new(field, m, &r))?;
                return Ok(false);
            }
            if *extremal {
                let r = extremal_enumerator(field, m)?;
                for (w, c) in &r.coefficients {
                    println!("  {w:>4}  {c}");
                }
                println!(
                    "nonnegative: {}, divisibility: {}",
                    r.nonnegative,
                    if r.divisibility_violations.is_empty() {
                        "pass"
                    } else {
                        "FAIL"
                    }
                );
                #[derive(serde::Serialize)]
                struct ExtremalJson {
                    field: String,
                    m: usize,
                    coefficients: Vec<(usize, String)>,
                    nonnegative: bool,
                    divisibility_pass: bool,
                }
                write_json(
                    cli,
                    &ExtremalJson {
                        field: field.to_string(),
                        m,
                        coefficients: r
                            .coefficients
                            .iter()
                            .map(|(w, c)| (*w, c.to_string()))
                            .collect(),
                        nonnegative: r.nonnegative,
                        divisibility_pass: r.divisibility_violations.is_empty(),
                    },
                )?;
                return Ok(!r.divisibility_violations.is_empty());
            }
            let p = parametric_near_extremal(field, m)?;
            println!("{field} length {} (weight: s + t * alpha):", p.len());
            for (w, s, t) in p.terms() {
                println!("  {w:>4}  {s}  {t:+}");
            }
            write_json(cli, &parametric_rows(&p))?;
            Ok(false)
        }

        Cmd::Verify { ids, no_designs } => {
            let cat = load_catalog(cli)?;
            let patterns = if ids.is_empty() {
                vec!["all".to_string()]
            } else {
                ids.clone()
            };
            let entries = cat.expand_ids(&patterns)?;
            let opts = VerifyOptions {
                budget: cli.budget,
                designs: !no_designs,
            };
            let reports = verify_entries(&cat, &entries, opts);
            let mut pass = 0usize;
            let mut fail = 0usize;
            let mut skip = 0usize;
            for r in &reports {
                print!("{}", r.render());
                for c in &r.checks {
                    match c.status {
                        Status::Pass => pass += 1,
                        Status::Fail => fail += 1,
                        Status::Skipped => skip += 1,
                    }
                }
            }
            println!("checks: {pass} passed, {fail} failed, {skip} skipped");
            write_json(cli, &reports)?;
            Ok(fail > 0)
        }

        Cmd::Design { id, weight } => {
            let cat = load_catalog(cli)?;
            let code = cat.construct(id)?;
            let design = match &code {
                AnyCode::F3(c) => {
                    let (_, words) = parallel::enumerate_collecting(c, &[*weight], cli.budget)?;
                    one_design_from_words(c.len(), &words)?
                }
                AnyCode::F4(c) => {
                    let (_, words) = parallel::enumerate_collecting(c, &[*weight], cli.budget)?;
                    one_design_from_words(c.len(), &words)?
                }
            };
            let json = DesignJson::new(&design);
            println!(
                "{id} weight {weight}: v={} k={} b={} r={} 1-design: {}",
                design.v,
                design.k,
                design.b,
                design
                    .r
                    .map(|r| r.to_string())
                    .unwrap_or_else(|| "-".to_string()),
                json.is_1_design
            );
            write_json(cli, &json)?;
            Ok(!json.is_1_design)
        }

        Cmd::Neighbor {
            base,
            xhat,
            enumerate,
        } => {
            let cat = load_catalog(cli)?;
            let base_entry = cat
                .get(base)
                .ok_or_else(|| anyhow!("unknown catalog id `{base}`"))?;
            let base_code = cat.construct(base)?;
            let x_hat = AnyVec::parse(base_entry.field, xhat)?;
            let nb = base_code.neighbor(&x_hat)?;
            println!(
                "neighbor of {base}: [{},{}] self-dual: {}",
                nb.len(),
                nb.dim(),
                nb.is_self_dual()
            );
            if *enumerate {
                let we = parallel::any_weight_enumerator(&nb, cli.budget)?;
                for (w, c) in we.iter() {
                    println!("  {w:>4}  {c}");
                }
                write_json(cli, &WeightEnumeratorJson::new(base_entry.field, &we))?;
            }
            Ok(false)
        }

        Cmd::Catalog { emit } => {
            let cat = load_catalog(cli)?;
            if *emit {
                print!("{}", cat.serialize());
            } else {
                for e in cat.entries() {
                    let alpha = e
                        .expected
                        .alpha
                        .as_ref()
                        .map(|a| format!(" alpha={a}"))
                        .unwrap_or_default();
                    println!(
                        "{:<12} {:<14} {} n={}{}",
                        e.id,
                        e.family.name(),
                        e.field,
                        e.n,
                        alpha
                    );
                }
                println!("{} entries", cat.len());
            }
            Ok(false)
        }
    }
}
