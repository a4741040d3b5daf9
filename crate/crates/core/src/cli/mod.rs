//! Command-line surface.
//!
//! Exit codes: `0` success, `1` a mathematical cross-check failed (pipelines
//! disagree, a series tail did not cancel, the mirror identity is violated),
//! `2` invalid input or usage.

mod output;

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bundle_poincare::{
    poincare_n_closed, poincare_n_recursion, poincare_n_recursion_with_order,
};
use crate::error::{invalid, Result};
use crate::exactpoly::{coeff_extract_x, IntPoly};
use crate::geometry::{moduli_dim, spectral_numbers, Space};
use crate::git_stability::{
    hm_weight, hm_weight_filtered, quotient_semistability_test, torus_classify, FiltrationBlock,
    FiltrationData, QuotientTest, WeightProfile,
};
use crate::higgs_poincare::{
    poincare_m_closed, poincare_m_closed_with_order, poincare_m_stratified,
};
use crate::mirror::{mirror_report, MirrorOptions, Pairing};
use crate::params::{Genus, Group, ModuliParams};

use output::{big, bivar_json, coeffs_json, latex_bivar, latex_poly, latex_table};
pub use output::{to_json_string, OutputFormat, Rendered};

/// Environment variable overriding the truncation order of the series pipelines.
pub const TRUNC_ORDER_ENV: &str = "HITCHIN_TRUNC_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_INVALID_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hitchin",
    version,
    about = "Exact invariants of rank-2 moduli of bundles and Higgs bundles on a curve"
)]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Plain)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Poincaré polynomial of a rank-2 odd-degree moduli space
    Poincare {
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, value_enum, default_value_t = Via::Both)]
        via: Via,
    },
    /// Check the rank-2 topological mirror identity
    Mirror {
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        /// Check this many random nonzero elements instead of all of them
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Deliberately break one ingredient (for testing the checker)
        #[arg(long, value_enum)]
        mutate: Option<Mutation>,
    },
    /// Dimensions of moduli spaces and Hitchin bases
    Dims {
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        degree: i64,
        /// gl, sl or pgl; all three when omitted
        #[arg(long)]
        group: Option<String>,
    },
    /// Ramification, genus and line-bundle degree of a spectral curve
    Spectral {
        #[arg(long)]
        rank: u32,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    /// GIT stability tools
    #[command(subcommand)]
    Git(GitCommand),
    /// Poincaré polynomial of the n-th symmetric product of a genus-g curve
    Macdonald {
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        n: u32,
    },
}

#[derive(Debug, Subcommand)]
enum GitCommand {
    /// Classify a point under C^* from its weights
    Classify {
        /// Comma-separated integer weights, e.g. -1,2
        #[arg(long, allow_hyphen_values = true)]
        weights: String,
    },
    /// Hilbert-Mumford weight of a filtration
    Hm {
        /// Comma-separated blocks N:a:r:d (dimension, weight, rank, degree)
        #[arg(long, allow_hyphen_values = true)]
        blocks: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
    },
    /// Subspace inequality for a quotient O(-n)^N -> E
    Quot {
        /// N':r':d' for the subspace and the subsheaf it generates
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
        /// N:r:d for the whole quotient
        #[arg(long, allow_hyphen_values = true)]
        total: String,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SpaceArg {
    VectorBundles,
    Higgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Via {
    Closed,
    Strata,
    Recursion,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mutation {
    /// Use 2g - 1 as the fermionic shift
    Shift,
    /// Use a degenerate pairing
    Pairing,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Settings {
    pub trunc_order: Option<usize>,
}

impl Settings {
    pub fn from_env() -> Result<Self> {
        match std::env::var(TRUNC_ORDER_ENV) {
            Err(_) => Ok(Settings::default()),
            Ok(s) => s
                .trim()
                .parse()
                .map(|n| Settings {
                    trunc_order: Some(n),
                })
                .map_err(|_| {
                    invalid(format!(
                        "{TRUNC_ORDER_ENV}={s:?} is not a nonnegative integer"
                    ))
                }),
        }
    }
}

/// Run with arguments `argv` (including the program name), reading settings
/// from the environment.
pub fn run<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Settings::from_env() {
        Ok(settings) => run_with(argv, settings),
        Err(e) => failure(EXIT_INVALID_INPUT, e.to_string()),
    }
}

pub fn run_with<I, T>(argv: I, settings: Settings) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                failure(EXIT_INVALID_INPUT, text)
            } else {
                // --help and --version
                CliOutput {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli.command, settings) {
        Ok((rendered, code)) => CliOutput {
            code,
            stdout: rendered.emit(cli.format),
            stderr: String::new(),
        },
        Err(e) => {
            let code = if e.is_verification_failure() {
                EXIT_VERIFICATION_FAILED
            } else {
                EXIT_INVALID_INPUT
            };
            failure(code, format!("error: {e}"))
        }
    }
}

fn failure(code: i32, msg: String) -> CliOutput {
    let mut stderr = msg;
    if !stderr.ends_with('\n') {
        stderr.push('\n');
    }
    CliOutput {
        code,
        stdout: String::new(),
        stderr,
    }
}

fn genus(g: i64) -> Result<Genus> {
    Genus::try_from(g)
}

fn dispatch(cmd: &Command, settings: Settings) -> Result<(Rendered, i32)> {
    match cmd {
        Command::Poincare {
            space,
            genus: g,
            via,
        } => poincare(*space, genus(*g)?, *via, settings),
        Command::Mirror {
            genus: g,
            sample,
            seed,
            mutate,
        } => mirror(genus(*g)?, *sample, *seed, *mutate),
        Command::Dims {
            rank,
            genus: g,
            degree,
            group,
        } => dims(*rank, *g, *degree, group.as_deref()),
        Command::Spectral {
            rank,
            genus: g,
            degree,
        } => spectral(*rank, genus(*g)?, *degree),
        Command::Git(GitCommand::Classify { weights }) => classify(weights),
        Command::Git(GitCommand::Hm {
            blocks,
            m,
            n,
            genus: g,
        }) => hm(blocks, *m, *n, genus(*g)?),
        Command::Git(GitCommand::Quot {
            sub,
            total,
            m,
            genus: g,
        }) => quot(sub, total, *m, genus(*g)?),
        Command::Macdonald { genus: g, n } => Ok((macdonald(*g, *n), EXIT_OK)),
    }
}

struct PipelineResult {
    via: &'static str,
    poly: IntPoly,
}

fn poincare(space: SpaceArg, g: Genus, via: Via, settings: Settings) -> Result<(Rendered, i32)> {
    ModuliParams::rank_two_odd(g.get())?.require_rank_two_odd()?;
    let order = settings.trunc_order;
    let (space_name, symbol, runs): (&str, &str, Vec<PipelineResult>) = match space {
        SpaceArg::VectorBundles => {
            let closed = || -> Result<PipelineResult> {
                Ok(PipelineResult {
                    via: "closed",
                    poly: poincare_n_closed(g)?,
                })
            };
            let recursion = || -> Result<PipelineResult> {
                Ok(PipelineResult {
                    via: "recursion",
                    poly: match order {
                        Some(o) => poincare_n_recursion_with_order(g, o)?,
                        None => poincare_n_recursion(g)?,
                    },
                })
            };
            let runs = match via {
                Via::Closed => vec![closed()?],
                Via::Recursion => vec![recursion()?],
                Via::Both => vec![closed()?, recursion()?],
                Via::Strata => {
                    return Err(invalid(
                        "vector-bundles supports --via closed|recursion|both",
                    ))
                }
            };
            ("vector-bundles", r"\check{\mathcal{N}}", runs)
        }
        SpaceArg::Higgs => {
            let strata = || -> Result<PipelineResult> {
                Ok(PipelineResult {
                    via: "strata",
                    poly: poincare_m_stratified(g)?,
                })
            };
            let closed = || -> Result<PipelineResult> {
                Ok(PipelineResult {
                    via: "closed",
                    poly: match order {
                        Some(o) => poincare_m_closed_with_order(g, o)?,
                        None => poincare_m_closed(g)?,
                    },
                })
            };
            let runs = match via {
                Via::Closed => vec![closed()?],
                Via::Strata => vec![strata()?],
                Via::Both => vec![strata()?, closed()?],
                Via::Recursion => return Err(invalid("higgs supports --via closed|strata|both")),
            };
            ("higgs", r"\check{\mathcal{M}}", runs)
        }
    };

    let agree = runs.windows(2).all(|w| w[0].poly == w[1].poly);
    let records: Vec<Value> = runs
        .iter()
        .map(|r| {
            json!({
                "space": space_name,
                "genus": g.get(),
                "via": r.via,
                "coeffs": coeffs_json(&r.poly),
            })
        })
        .collect();
    let json = match records.len() {
        1 => records.into_iter().next().expect("one record"),
        _ => Value::Array(records),
    };

    let width = runs.iter().map(|r| r.via.len()).max().unwrap_or(0) + 1;
    let mut plain = format!("{space_name}, genus {g}\n");
    let mut latex = String::new();
    for r in &runs {
        plain.push_str(&format!("{:<width$} {}\n", format!("{}:", r.via), r.poly));
        latex.push_str(&format!(
            "% via {}\n\\[ P_t({symbol}) = {} \\]\n",
            r.via,
            latex_poly(&r.poly)
        ));
    }
    if runs.len() > 1 {
        plain.push_str(if agree {
            "pipelines agree\n"
        } else {
            "PIPELINES DISAGREE\n"
        });
    }
    let code = if agree {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    };
    Ok((Rendered { json, plain, latex }, code))
}

fn mirror(
    g: Genus,
    sample: Option<usize>,
    seed: u64,
    mutate: Option<Mutation>,
) -> Result<(Rendered, i32)> {
    let mut opts = MirrorOptions::for_genus(g);
    if sample.is_some() {
        opts.sample = sample;
    }
    opts.seed = seed;
    match mutate {
        Some(Mutation::Shift) => opts.shift_override = Some(2 * g.get() - 1),
        Some(Mutation::Pairing) => opts.pairing = Pairing::DropLastPair,
        None => {}
    }
    let report = mirror_report(g, &opts)?;
    let pass = report.passed();
    let failures: Vec<Value> = report
        .checks
        .iter()
        .filter(|c| !c.passed())
        .take(16)
        .map(|c| {
            let (p, q, l, r) = c.mismatch.clone().expect("failed check has a mismatch");
            json!({"gamma": c.gamma.to_string(), "p": p, "q": q, "lhs": big(&l), "rhs": big(&r)})
        })
        .collect();
    let n = report.elements_checked();
    let verdict = if pass { "pass" } else { "FAIL" };
    let json = json!({
        "genus": g.get(),
        "elements_checked": n,
        "pass": pass,
        "lhs": bivar_json(&report.lhs),
        "rhs_sample": bivar_json(&report.rhs_sample),
        "failures": failures,
    });
    let mut plain = format!(
        "genus {g}: {n} elements checked, {verdict}\nLHS = {}\nRHS = {}\n",
        report.lhs, report.rhs_sample
    );
    if let Err(e) = report.check() {
        plain.push_str(&format!("{e}\n"));
    }
    let latex = format!(
        "% genus {g}, {n} elements checked, {verdict}\n\\[ E_\\kappa = {} \\]\n\\[ E_{{\\mathrm{{rhs}}}} = {} \\]\n",
        latex_bivar(&report.lhs),
        latex_bivar(&report.rhs_sample)
    );
    let code = if pass {
        EXIT_OK
    } else {
        EXIT_VERIFICATION_FAILED
    };
    Ok((Rendered { json, plain, latex }, code))
}

fn dims(rank: u32, g: i64, degree: i64, group: Option<&str>) -> Result<(Rendered, i32)> {
    let groups = match group {
        Some(s) => vec![s.parse::<Group>()?],
        None => vec![Group::GL, Group::SL, Group::PGL],
    };
    let g_u =
        u32::try_from(g).map_err(|_| invalid(format!("genus must be at least 2, got {g}")))?;
    let mut rows = Vec::new();
    let mut json_rows = Vec::new();
    for grp in groups {
        let params = ModuliParams::new(rank, degree, g_u, grp)?;
        let b = moduli_dim(&params, Space::Bundles)?;
        let h = moduli_dim(&params, Space::Higgs)?;
        let base = moduli_dim(&params, Space::HitchinBase)?;
        json_rows.push(
            json!({"group": grp.to_string(), "bundles": b, "higgs": h, "hitchin_base": base}),
        );
        rows.push(vec![
            grp.to_string(),
            b.to_string(),
            h.to_string(),
            base.to_string(),
        ]);
    }
    let coprime = num_integer::gcd(i64::from(rank), degree) == 1;
    let json =
        json!({"rank": rank, "genus": g, "degree": degree, "coprime": coprime, "rows": json_rows});
    let header = ["group", "bundles", "higgs", "hitchin-base"];
    let mut plain = format!("rank {rank}, genus {g}, degree {degree} (coprime: {coprime})\n");
    plain.push_str(&format!(
        "{:<6} {:>8} {:>8} {:>13}\n",
        header[0], header[1], header[2], header[3]
    ));
    for r in &rows {
        plain.push_str(&format!(
            "{:<6} {:>8} {:>8} {:>13}\n",
            r[0], r[1], r[2], r[3]
        ));
    }
    let latex = latex_table(&header, &rows);
    Ok((Rendered { json, plain, latex }, EXIT_OK))
}

fn spectral(rank: u32, g: Genus, degree: i64) -> Result<(Rendered, i32)> {
    let s = spectral_numbers(rank, g, degree)?;
    let json = json!({
        "rank": rank,
        "genus": g.get(),
        "degree": degree,
        "ramification_degree": s.ramification_degree,
        "spectral_genus": s.spectral_genus,
        "line_degree_delta": s.line_degree_delta,
    });
    let plain = format!(
        "rank {rank}, genus {g}, degree {degree}\nramification degree: {}\nspectral genus:      {}\ndeg L:               {}\n",
        s.ramification_degree, s.spectral_genus, s.line_degree_delta
    );
    let latex = latex_table(
        &["$r$", "$g$", "$d$", "$\\deg R$", "$g(Y)$", "$\\deg L$"],
        &[vec![
            rank.to_string(),
            g.to_string(),
            degree.to_string(),
            s.ramification_degree.to_string(),
            s.spectral_genus.to_string(),
            s.line_degree_delta.to_string(),
        ]],
    );
    Ok((Rendered { json, plain, latex }, EXIT_OK))
}

fn parse_ints(s: &str, what: &str) -> Result<Vec<i64>> {
    s.split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| invalid(format!("{what}: {t:?} is not an integer")))
        })
        .collect()
}

fn parse_colon_tuple(s: &str, len: usize, what: &str) -> Result<Vec<i64>> {
    let parts: Vec<&str> = s.split(':').collect();
    if parts.len() != len {
        return Err(invalid(format!(
            "{what}: expected {len} colon-separated fields in {s:?}"
        )));
    }
    parts
        .iter()
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|_| invalid(format!("{what}: {t:?} is not an integer")))
        })
        .collect()
}

fn nonneg_u64(x: i64, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| invalid(format!("{what} must be nonnegative, got {x}")))
}

fn positive_u32(x: i64, what: &str) -> Result<u32> {
    u32::try_from(x)
        .ok()
        .filter(|&r| r > 0)
        .ok_or_else(|| invalid(format!("{what} must be positive, got {x}")))
}

fn classify(weights: &str) -> Result<(Rendered, i32)> {
    let profile = WeightProfile::new(parse_ints(weights, "weights")?)?;
    let v = torus_classify(&profile);
    let list = profile
        .weights()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ");
    let json = json!({
        "weights": profile.weights(),
        "mu": profile.min(),
        "verdict": v.as_str(),
        "semistable": v.is_semistable(),
        "polystable": v.is_polystable(),
        "stable": v.is_stable(),
    });
    let plain = format!("weights {{{list}}}: {v} (mu = {})\n", profile.min());
    let latex = format!("$P(y) = \\{{{list}\\}}$: {v}\n");
    Ok((Rendered { json, plain, latex }, EXIT_OK))
}

fn hm(blocks: &str, m: i64, n: i64, g: Genus) -> Result<(Rendered, i32)> {
    let parsed = blocks
        .split(',')
        .filter(|b| !b.trim().is_empty())
        .map(|b| {
            let f = parse_colon_tuple(b, 4, "blocks")?;
            Ok(FiltrationBlock {
                dim: nonneg_u64(f[0], "N_i")?,
                weight: f[1],
                rank: positive_u32(f[2], "r_i")?,
                degree: f[3],
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let data = FiltrationData::new(parsed, n, m, g)?;
    let weight = hm_weight(&data)?;
    let filtered = hm_weight_filtered(&data);
    let json = json!({
        "weight": big(&weight),
        "filtered_form": filtered.to_string(),
        "N": data.total_dim(),
        "m": m,
        "n": n,
        "genus": g.get(),
    });
    let plain = format!(
        "Hilbert-Mumford weight: {weight} (graded and filtered forms agree)\nN = {}, m = {m}, n = {n}, genus {g}\n",
        data.total_dim()
    );
    let latex = format!("$\\mu_{{L_{{{m}}}}}(E, \\lambda) = {weight}$\n");
    Ok((Rendered { json, plain, latex }, EXIT_OK))
}

fn quot(sub: &str, total: &str, m: i64, g: Genus) -> Result<(Rendered, i32)> {
    let s = parse_colon_tuple(sub, 3, "sub")?;
    let t = parse_colon_tuple(total, 3, "total")?;
    let test = QuotientTest {
        sub_dim: nonneg_u64(s[0], "N'")?,
        sub_rank: positive_u32(s[1], "r'")?,
        sub_degree: s[2],
        total_dim: nonneg_u64(t[0], "N")?,
        rank: positive_u32(t[1], "r")?,
        degree: t[2],
        genus: g,
        m,
    };
    let ok = quotient_semistability_test(&test)?;
    let json = json!({"satisfied": ok, "m": m, "genus": g.get()});
    let plain = format!(
        "N'/chi(E'(m)) <= N/chi(E(m)) at m = {m}: {}\n",
        if ok { "satisfied" } else { "violated" }
    );
    let latex = format!("% m = {m}\n{}\n", if ok { "satisfied" } else { "violated" });
    Ok((Rendered { json, plain, latex }, EXIT_OK))
}

fn macdonald(g: u32, n: u32) -> Rendered {
    let p = coeff_extract_x(g, n);
    let chi: BigInt = p.eval_i64(-1);
    Rendered {
        json: json!({"genus": g, "n": n, "coeffs": coeffs_json(&p), "euler_characteristic": big(&chi)}),
        plain: format!("P_t(S^{n} X), genus {g}: {p}\n"),
        latex: format!("\\[ P_t(S^{{{n}}} X) = {} \\]\n", latex_poly(&p)),
    }
}
