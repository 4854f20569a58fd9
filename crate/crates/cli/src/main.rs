mod input;
mod report;
mod verify;

use std::fmt::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dorfman::brackets::{courant, SectionExpr};
use dorfman::combinatorics::{
    binomial, enumerate_unshuffles, signed_count_brute_force, signed_count_closed_form,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use input::{build_sections, parse_in, section_source, seed, CliError, Source, ThetaArgs};
use report::{Check, Report};
use verify::{CheckName, Sweep};

/// Arity above which sweeps get slow.
const SLOW_ARITY: usize = 5;

#[derive(Parser, Debug)]
#[command(
    name = "dorfman",
    version,
    about = "Exact checks of higher derived Dorfman brackets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BracketKind {
    Dorfman,
    Courant,
    Defect,
    QSquared,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities of the derived brackets of θ on a set of sections.
    Verify {
        #[command(flatten)]
        theta: ThetaArgs,
        /// `random:<count>` for seeded random sections.
        #[arg(long)]
        sections: Option<String>,
        /// A section given by its χ-image; repeatable.
        #[arg(long = "section")]
        section: Vec<String>,
        /// File with one χ-image per line.
        #[arg(long)]
        sections_file: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u64).range(1..))]
        max_arity: u64,
        /// Checks to run; repeatable (default: all that apply).
        #[arg(long = "check", value_enum)]
        checks: Vec<CheckName>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Signed unshuffle counts, enumerated and in closed form.
    Unshuffles {
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(1..=20))]
        max_k: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Show a preset θ = Δ + K_P and its data.
    Example {
        #[command(flatten)]
        theta: ThetaArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Evaluate a single bracket.
    Bracket {
        #[command(flatten)]
        theta: ThetaArgs,
        #[arg(long, value_enum, default_value_t = BracketKind::Dorfman)]
        kind: BracketKind,
        /// A section given by its χ-image; repeatable, in order.
        #[arg(long = "section", required = true)]
        section: Vec<String>,
        /// The base function for `--kind defect`.
        #[arg(long)]
        function: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn theta_json(source: &Source) -> Value {
    let ch = source.chart();
    json!({
        "chart": { "kind": "symplectic", "even_dim": ch.even_dim(), "odd_dim": ch.odd_dim() },
        "source": source.label,
        "theta": source.derivation.theta().to_string(),
        "multivector": source.preset.as_ref().and_then(|p| p.multivector.as_ref()).map(|m| m.value().to_string()),
    })
}

fn emit(report: &Report, format: Format, text: impl FnOnce(&mut String) -> fmt::Result) {
    match format {
        Format::Json => report.print_json(),
        Format::Text => {
            let mut out = String::new();
            text(&mut out).expect("writing to a String");
            report.write_checks(&mut out).expect("writing to a String");
            report::print(&out);
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    theta: &ThetaArgs,
    sections: Option<&str>,
    section: &[String],
    sections_file: Option<&str>,
    seed_flag: Option<u64>,
    max_arity: usize,
    checks: &[CheckName],
    format: Format,
) -> Result<bool, CliError> {
    if max_arity > SLOW_ARITY {
        eprintln!("warning: --max-arity {max_arity} is above {SLOW_ARITY}; unshuffle sums grow quickly and this may be slow");
    }
    let source = theta.resolve()?;
    let seed = seed(seed_flag)?;
    let section_choice = section_source(sections, section, sections_file)?;
    let mut rng = seed.map(ChaCha8Rng::seed_from_u64);
    let sections = build_sections(source.chart(), &section_choice, rng.as_mut())?;
    let mut rng = rng.unwrap_or_else(|| ChaCha8Rng::seed_from_u64(0));

    let multivector = source.preset.as_ref().and_then(|p| p.multivector.as_ref());
    let checks: Vec<CheckName> = if checks.is_empty() {
        let mut all = vec![
            CheckName::Homological,
            CheckName::Loday,
            CheckName::Theorem,
            CheckName::Defect,
        ];
        if multivector.is_some() {
            all.push(CheckName::Proposition);
        }
        all.push(CheckName::Polarisation);
        all
    } else {
        checks.to_vec()
    };
    let sweep = Sweep {
        derivation: &source.derivation,
        multivector,
        sections: &sections,
        max_arity,
    };
    let results: Vec<Check> = checks
        .iter()
        .map(|&c| sweep.run(c, &mut rng))
        .collect::<Result<_, _>>()?;

    let mut job = theta_json(&source);
    job["sections"] = json!(sections
        .iter()
        .map(|u| u.value().to_string())
        .collect::<Vec<_>>());
    job["seed"] = json!(seed);
    job["max_arity"] = json!(max_arity);
    job["checks"] = json!(checks);
    job["format"] = json!(if format == Format::Json {
        "json"
    } else {
        "text"
    });
    let report = Report::new(job, results, None);
    emit(&report, format, |out| {
        writeln!(
            out,
            "θ = {} on {}",
            source.derivation.theta(),
            source.chart()
        )?;
        for (t, u) in sections.iter().enumerate() {
            writeln!(out, "u{} = {}", t + 1, u)?;
        }
        Ok(())
    });
    Ok(report.passed())
}

fn run_unshuffles(max_k: usize, format: Format) -> Result<bool, CliError> {
    let mut rows = Vec::new();
    let mut check = Check {
        name: "closed-form".into(),
        pass: true,
        residual_terms: 0,
        evaluations: 0,
        witness: None,
    };
    for k in 1..=max_k {
        for j in 1..=k {
            let count = enumerate_unshuffles(k, j).expect("1 <= j <= k").len();
            let brute = signed_count_brute_force(k, j).expect("1 <= j <= k");
            let closed = signed_count_closed_form(k, j).expect("1 <= j <= k");
            let expected = binomial(k as i64 - 1, j as i64 - 1);
            let ok = brute == closed && expected == count.into();
            check.evaluations += 1;
            if !ok {
                check.pass = false;
                check.residual_terms += 1;
            }
            rows.push(json!({ "k": k, "j": j, "unshuffles": count, "brute_force": brute.to_string(), "closed_form": closed.to_string(), "equal": ok }));
        }
    }
    let report = Report::new(json!({ "max_k": max_k }), vec![check], Some(json!(rows)));
    emit(&report, format, |out| {
        writeln!(
            out,
            "{:>3} {:>3} {:>8} {:>12} {:>12}",
            "k", "j", "|Sh|", "brute", "closed"
        )?;
        for r in &rows {
            writeln!(
                out,
                "{:>3} {:>3} {:>8} {:>12} {:>12}{}",
                r["k"],
                r["j"],
                r["unshuffles"],
                r["brute_force"].as_str().unwrap(),
                r["closed_form"].as_str().unwrap(),
                if r["equal"].as_bool().unwrap() {
                    ""
                } else {
                    "  MISMATCH"
                }
            )?;
        }
        Ok(())
    });
    Ok(report.passed())
}

fn run_example(theta: &ThetaArgs, format: Format) -> Result<bool, CliError> {
    let source = theta.resolve()?;
    let d = &source.derivation;
    let lift = source.preset.as_ref().map(|p| p.lift.to_string());
    let output = json!({
        "lift": lift,
        "half_square": d.half_square().to_string(),
        "homological": d.is_homological(),
    });
    let report = Report::new(theta_json(&source), Vec::new(), Some(output));
    emit(&report, format, |out| {
        writeln!(out, "chart: {}", source.chart())?;
        if let Some(p) = source.preset.as_ref().and_then(|p| p.multivector.as_ref()) {
            writeln!(out, "P = {}", p.value())?;
            writeln!(out, "[P, P] = {}", p.self_bracket())?;
        }
        if let Some(l) = &lift {
            writeln!(out, "K_P = {l}")?;
        }
        writeln!(out, "θ = {}", d.theta())?;
        writeln!(out, "½[θ, θ] = {}", d.half_square())?;
        writeln!(out, "homological: {}", d.is_homological())?;
        Ok(())
    });
    Ok(true)
}

fn run_bracket(
    theta: &ThetaArgs,
    kind: BracketKind,
    section: &[String],
    function: Option<&str>,
    format: Format,
) -> Result<bool, CliError> {
    let source = theta.resolve()?;
    let d = &source.derivation;
    let chart = source.chart();
    let args = build_sections(chart, &input::Sections::Given(section.to_vec()), None)?;
    let invariant = |e: dorfman::brackets::BracketError| CliError::Invariant(e.to_string());
    let result: SectionExpr = match kind {
        BracketKind::Dorfman => d.dorfman(&args).map_err(invariant)?,
        BracketKind::Courant => courant(d, &args).map_err(invariant)?,
        BracketKind::QSquared => d.q_squared_dorfman(&args).map_err(invariant)?,
        BracketKind::Defect => {
            let text =
                function.ok_or_else(|| CliError::Usage("--kind defect needs --function".into()))?;
            let f = parse_in(text, chart, "function")?;
            d.defect_map(&args, &f).map_err(invariant)?
        }
    };
    let name = match kind {
        BracketKind::Dorfman => format!("d_{}", args.len()),
        BracketKind::Courant => format!("courant_{}", args.len()),
        BracketKind::QSquared => format!("Q²-bracket_{}", args.len()),
        BracketKind::Defect => format!("D_{}", args.len() + 2),
    };
    let output = json!({
        "bracket": name,
        "chi": result.value().to_string(),
        "section": result.to_string(),
        "parity": result.parity().to_string(),
    });
    let mut job = theta_json(&source);
    job["sections"] = json!(section);
    job["function"] = json!(function);
    let report = Report::new(job, Vec::new(), Some(output));
    emit(&report, format, |out| {
        writeln!(out, "{name} = {}", result)?;
        writeln!(out, "χ-image: {}", result.value())?;
        Ok(())
    });
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify {
            theta,
            sections,
            section,
            sections_file,
            seed,
            max_arity,
            checks,
            format,
        } => run_verify(
            theta,
            sections.as_deref(),
            section,
            sections_file.as_deref(),
            *seed,
            *max_arity as usize,
            checks,
            *format,
        ),
        Command::Unshuffles { max_k, format } => run_unshuffles(*max_k as usize, *format),
        Command::Example { theta, format } => run_example(theta, *format),
        Command::Bracket {
            theta,
            kind,
            section,
            function,
            format,
        } => run_bracket(theta, *kind, section, function.as_deref(), *format),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
