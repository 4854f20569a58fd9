//! Turning command-line text into charts, Hamiltonians and sections.

use std::fmt;
use std::path::Path;

use clap::{Args, ValueEnum};
use dorfman::brackets::{HamiltonianDerivation, SectionExpr};
use dorfman::expr::parse_polynomial;
use dorfman::geometry::{
    bivector_preset, delta_preset, so3_preset, trivector_preset, Multivector, Preset,
};
use dorfman::random::PolyGen;
use dorfman::superalgebra::{Chart, ChartKind, SuperPolynomial};
use rand_chacha::ChaCha8Rng;

#[derive(Debug)]
pub enum CliError {
    /// Unreadable or malformed input text.
    Parse(String),
    /// Flags that do not fit together.
    Usage(String),
    /// Inputs that parse but violate a structural requirement.
    Invariant(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) | CliError::Usage(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Invariant(m) => write!(f, "invalid input: {m}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    Delta,
    Bivector,
    So3,
    Trivector,
    Custom,
}

#[derive(Args, Debug, Clone)]
pub struct ThetaArgs {
    /// Number of even base directions.
    #[arg(long)]
    pub dim: Option<u16>,
    /// Number of odd base directions.
    #[arg(long, default_value_t = 0)]
    pub odd_dim: u16,
    /// A ready-made θ = Δ + K_P (default `delta`).
    #[arg(long, value_enum, conflicts_with_all = ["theta", "theta_file"])]
    pub preset: Option<PresetName>,
    /// The multivector P in `x`, `xs` for `--preset custom`.
    #[arg(long)]
    pub multivector: Option<String>,
    /// θ as an expression in `x`, `xi`, `pi`, `p`.
    #[arg(long, conflicts_with = "theta_file")]
    pub theta: Option<String>,
    /// File holding θ.
    #[arg(long)]
    pub theta_file: Option<String>,
}

/// The resolved Hamiltonian, plus the preset it came from if any.
pub struct Source {
    pub derivation: HamiltonianDerivation,
    pub preset: Option<Preset>,
    pub label: String,
}

impl Source {
    pub fn chart(&self) -> &Chart {
        self.derivation.chart()
    }
}

pub fn parse_in(text: &str, chart: &Chart, what: &str) -> Result<SuperPolynomial, CliError> {
    parse_polynomial(text, chart).map_err(|e| CliError::Parse(format!("{what}:{e}")))
}

fn read(path: &str) -> Result<String, CliError> {
    std::fs::read_to_string(Path::new(path)).map_err(|e| CliError::Parse(format!("{path}: {e}")))
}

impl ThetaArgs {
    fn chart(&self, kind: ChartKind) -> Result<Chart, CliError> {
        let dim = self
            .dim
            .ok_or_else(|| CliError::Usage("--dim is required here".into()))?;
        Chart::new(kind, dim, self.odd_dim).map_err(|e| CliError::Usage(e.to_string()))
    }

    fn fixed(&self, preset: Preset) -> Result<Preset, CliError> {
        let ch = &preset.chart;
        let clash = self.dim.is_some_and(|d| d != ch.even_dim())
            || (self.odd_dim != 0 && self.odd_dim != ch.odd_dim());
        if clash {
            return Err(CliError::Usage(format!(
                "preset `{}` lives on {}",
                preset.name, ch
            )));
        }
        Ok(preset)
    }

    pub fn resolve(&self) -> Result<Source, CliError> {
        if self.multivector.is_some() && self.preset != Some(PresetName::Custom) {
            return Err(CliError::Usage(
                "--multivector needs --preset custom".into(),
            ));
        }
        let explicit = match (&self.theta, &self.theta_file) {
            (Some(t), _) => Some((t.clone(), "theta".to_string())),
            (None, Some(path)) => Some((read(path)?, path.clone())),
            (None, None) => None,
        };
        if let Some((text, what)) = explicit {
            let chart = self.chart(ChartKind::Symplectic)?;
            let theta = parse_in(&text, &chart, &what)?;
            let derivation = HamiltonianDerivation::new(chart, theta)
                .map_err(|e| CliError::Invariant(e.to_string()))?;
            return Ok(Source {
                derivation,
                preset: None,
                label: "theta".into(),
            });
        }
        let geometry = |e: dorfman::geometry::GeometryError| CliError::Invariant(e.to_string());
        let preset = match self.preset.unwrap_or(PresetName::Delta) {
            PresetName::Delta => {
                let dim = self.dim.unwrap_or(1);
                if self.odd_dim == 0 {
                    delta_preset(dim).map_err(geometry)?
                } else {
                    let odd = Chart::new(ChartKind::OddCotangent, dim, self.odd_dim)
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    let zero = Multivector::new(odd, SuperPolynomial::zero()).map_err(geometry)?;
                    Preset::from_multivector("delta", zero).map_err(geometry)?
                }
            }
            PresetName::Bivector => self.fixed(bivector_preset().map_err(geometry)?)?,
            PresetName::So3 => self.fixed(so3_preset().map_err(geometry)?)?,
            PresetName::Trivector => self.fixed(trivector_preset().map_err(geometry)?)?,
            PresetName::Custom => {
                let text = self
                    .multivector
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("--preset custom needs --multivector".into()))?;
                let odd = self.chart(ChartKind::OddCotangent)?;
                let value = parse_in(text, &odd, "multivector")?;
                let p = Multivector::new(odd, value).map_err(geometry)?;
                if !p.is_homotopy_poisson() {
                    eprintln!("warning: [P, P] = {} is not zero", p.self_bracket());
                }
                Preset::from_multivector("custom", p).map_err(geometry)?
            }
        };
        Ok(Source {
            derivation: preset.derivation(),
            label: preset.name.to_string(),
            preset: Some(preset),
        })
    }
}

/// Where verification sections come from.
pub enum Sections {
    Random(usize),
    Given(Vec<String>),
}

pub fn section_source(
    requested: Option<&str>,
    inline: &[String],
    file: Option<&str>,
) -> Result<Sections, CliError> {
    let mut given: Vec<String> = inline.to_vec();
    if let Some(path) = file {
        given.extend(
            read(path)?
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(String::from),
        );
    }
    match requested {
        Some(s) => {
            if !given.is_empty() {
                return Err(CliError::Usage(
                    "give either --sections or explicit sections".into(),
                ));
            }
            let count = s
                .strip_prefix("random:")
                .and_then(|n| n.parse::<usize>().ok())
                .filter(|&n| n > 0)
                .ok_or_else(|| {
                    CliError::Parse(format!("sections: expected `random:<count>`, got `{s}`"))
                })?;
            Ok(Sections::Random(count))
        }
        None if given.is_empty() => Ok(Sections::Random(3)),
        None => Ok(Sections::Given(given)),
    }
}

pub fn build_sections(
    chart: &Chart,
    source: &Sections,
    rng: Option<&mut ChaCha8Rng>,
) -> Result<Vec<SectionExpr>, CliError> {
    match source {
        Sections::Random(count) => {
            let rng = rng.ok_or_else(|| {
                CliError::Usage("random sections need --seed or DORFMAN_SEED".into())
            })?;
            let gen = PolyGen::new(chart.clone()).max_terms(3);
            Ok((0..*count).map(|_| gen.any_section(rng)).collect())
        }
        Sections::Given(texts) => texts
            .iter()
            .enumerate()
            .map(|(t, text)| {
                let value = parse_in(text, chart, &format!("section {}", t + 1))?;
                SectionExpr::from_value(value)
                    .map_err(|e| CliError::Invariant(format!("section {}: {e}", t + 1)))
            })
            .collect(),
    }
}

/// `--seed`, falling back to `DORFMAN_SEED`.
pub fn seed(flag: Option<u64>) -> Result<Option<u64>, CliError> {
    if flag.is_some() {
        return Ok(flag);
    }
    match std::env::var("DORFMAN_SEED") {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| {
            CliError::Parse(format!("DORFMAN_SEED: `{v}` is not an unsigned integer"))
        }),
        Err(_) => Ok(None),
    }
}
