//! Argument parsing and the run configuration, including the `config.txt`
//! echo format (`key=value` lines) that makes every run reproducible from
//! its output directory.

use antmap_core::engine::{ComparisonMode, Params};
use antmap_core::metrics::{MetricKind, MetricWeights};
use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "antmap", version, about = "Ant colonies mapping grayscale image habitats through pheromone fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run a simulation on a PGM habitat
    Run(RunArgs),
    /// Print all intermediate quantities of both window metrics for two
    /// 3x3 windows given as 18 integers (first window row-major, then the
    /// second)
    Metrics(MetricsArgs),
    /// Generate synthetic PGM habitats
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum MetricArg {
    Stat,
    Ulam,
}

impl From<MetricArg> for MetricKind {
    fn from(value: MetricArg) -> Self {
        match value {
            MetricArg::Stat => MetricKind::Statistical,
            MetricArg::Ulam => MetricKind::Ulam,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq, Debug)]
pub enum CompareArg {
    /// Compare against the window at the ant's previous cell
    Prev,
    /// Compare against a flat window at the habitat's mean intensity
    Flat,
}

impl From<CompareArg> for ComparisonMode {
    fn from(value: CompareArg) -> Self {
        match value {
            CompareArg::Prev => ComparisonMode::Previous,
            CompareArg::Flat => ComparisonMode::FlatMean,
        }
    }
}

#[derive(Args, Debug)]
pub struct RunArgs {
    /// Habitat image (PGM, P2 or P5)
    #[arg(long)]
    pub habitat: PathBuf,
    /// Output directory for snapshots, report.csv and config.txt
    #[arg(long, default_value = "out")]
    pub out: PathBuf,
    /// Number of timesteps
    #[arg(long, default_value_t = 1000)]
    pub iters: u64,
    /// Emit a snapshot every N steps (0 = final step only)
    #[arg(long, default_value_t = 0)]
    pub snapshot_every: u64,
    /// Replace the habitat mid-run: <step>:<path>
    #[arg(long)]
    pub swap: Option<String>,
    /// Base pheromone deposition per ant per step
    #[arg(long, default_value_t = 0.07)]
    pub eta: f64,
    /// Pheromone evaporation rate per step
    #[arg(long, default_value_t = 0.015)]
    pub kappa: f64,
    /// Osmotropotaxic sensitivity
    #[arg(long, default_value_t = 3.5)]
    pub beta: f64,
    /// Inverse sensory capacity
    #[arg(long, default_value_t = 0.2)]
    pub delta: f64,
    /// Gain on the heterogeneity term of deposition
    #[arg(long, default_value_t = 1.5)]
    pub p: f64,
    /// Colony size as a fraction of the cell count
    #[arg(long, default_value_t = 0.3)]
    pub density: f64,
    /// Weight of the mean term of the statistical metric
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub a: f64,
    /// Weight of the variance term
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub b: f64,
    /// Weight of the histogram term
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub c: f64,
    /// Heterogeneity metric scoring window pairs
    #[arg(long, value_enum, default_value_t = MetricArg::Stat)]
    pub metric: MetricArg,
    /// Reference window for the heterogeneity score
    #[arg(long, value_enum, default_value_t = CompareArg::Prev)]
    pub compare: CompareArg,
    /// Let ants share cells instead of excluding occupied ones
    #[arg(long)]
    pub allow_stacking: bool,
    /// RNG seed; equal seeds give byte-identical outputs
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

impl RunArgs {
    pub fn into_config(self) -> Result<RunConfig> {
        let weights = MetricWeights::new(self.a, self.b, self.c)
            .with_context(|| format!("invalid metric weights ({}, {}, {})", self.a, self.b, self.c))?;
        let swap = match &self.swap {
            None => None,
            Some(spec) => Some(parse_swap(spec)?),
        };
        let params = Params {
            eta: self.eta,
            kappa: self.kappa,
            beta: self.beta,
            delta: self.delta,
            gain: self.p,
            weights,
            density: self.density,
            metric: self.metric.into(),
            compare: self.compare.into(),
            exclusion: !self.allow_stacking,
            seed: self.seed,
        };
        params.validate().context("invalid run parameters")?;
        Ok(RunConfig {
            habitat_path: self.habitat,
            out_dir: self.out,
            iterations: self.iters,
            snapshot_every: self.snapshot_every,
            swap,
            params,
        })
    }
}

fn parse_swap(spec: &str) -> Result<(u64, PathBuf)> {
    let (step, path) = spec
        .split_once(':')
        .with_context(|| format!("swap spec `{spec}` must be <step>:<path>"))?;
    let step: u64 = step
        .parse()
        .with_context(|| format!("swap step `{step}` is not an unsigned integer"))?;
    if path.is_empty() {
        bail!("swap spec `{spec}` is missing the habitat path");
    }
    if step == 0 {
        bail!("swap step must be at least 1");
    }
    Ok((step, PathBuf::from(path)))
}

/// A fully resolved run: where the habitat lives, where output goes, and
/// every model parameter.
#[derive(Clone, PartialEq, Debug)]
pub struct RunConfig {
    pub habitat_path: PathBuf,
    pub out_dir: PathBuf,
    pub iterations: u64,
    pub snapshot_every: u64,
    pub swap: Option<(u64, PathBuf)>,
    pub params: Params,
}

impl RunConfig {
    /// Serializes as `key=value` lines, one per CLI flag, in flag order.
    pub fn to_kv(&self) -> String {
        let p = &self.params;
        let swap = match &self.swap {
            Some((step, path)) => format!("{step}:{}", path.display()),
            None => String::new(),
        };
        format!(
            "habitat={}\nout={}\niters={}\nsnapshot_every={}\nswap={}\neta={}\nkappa={}\nbeta={}\ndelta={}\np={}\ndensity={}\na={}\nb={}\nc={}\nmetric={}\ncompare={}\nallow_stacking={}\nseed={}\n",
            self.habitat_path.display(),
            self.out_dir.display(),
            self.iterations,
            self.snapshot_every,
            swap,
            p.eta,
            p.kappa,
            p.beta,
            p.delta,
            p.gain,
            p.density,
            p.weights.a(),
            p.weights.b(),
            p.weights.c(),
            p.metric,
            p.compare,
            !p.exclusion,
            p.seed,
        )
    }

    /// Parses the `to_kv` format back; `from_kv(cfg.to_kv()) == cfg`.
    pub fn from_kv(text: &str) -> Result<Self> {
        let mut habitat_path = None;
        let mut out_dir = None;
        let mut iterations = None;
        let mut snapshot_every = None;
        let mut swap = None;
        let mut params = Params::default();
        let (mut a, mut b, mut c) = (1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0);

        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .with_context(|| format!("config line `{line}` is not key=value"))?;
            let parse_f64 = || -> Result<f64> {
                value.parse().with_context(|| format!("`{value}` is not a number ({key})"))
            };
            match key {
                "habitat" => habitat_path = Some(PathBuf::from(value)),
                "out" => out_dir = Some(PathBuf::from(value)),
                "iters" => iterations = Some(value.parse().context("iters")?),
                "snapshot_every" => snapshot_every = Some(value.parse().context("snapshot_every")?),
                "swap" => {
                    swap = if value.is_empty() { None } else { Some(parse_swap(value)?) };
                }
                "eta" => params.eta = parse_f64()?,
                "kappa" => params.kappa = parse_f64()?,
                "beta" => params.beta = parse_f64()?,
                "delta" => params.delta = parse_f64()?,
                "p" => params.gain = parse_f64()?,
                "density" => params.density = parse_f64()?,
                "a" => a = parse_f64()?,
                "b" => b = parse_f64()?,
                "c" => c = parse_f64()?,
                "metric" => params.metric = value.parse()?,
                "compare" => params.compare = value.parse()?,
                "allow_stacking" => {
                    params.exclusion = !value.parse::<bool>().context("allow_stacking")?
                }
                "seed" => params.seed = value.parse().context("seed")?,
                other => bail!("unknown config key `{other}`"),
            }
        }
        params.weights = MetricWeights::new(a, b, c).context("invalid metric weights")?;
        Ok(Self {
            habitat_path: habitat_path.context("config is missing `habitat`")?,
            out_dir: out_dir.context("config is missing `out`")?,
            iterations: iterations.context("config is missing `iters`")?,
            snapshot_every: snapshot_every.context("config is missing `snapshot_every`")?,
            swap,
            params,
        })
    }
}

#[derive(Args, Debug)]
pub struct MetricsArgs {
    /// Eighteen intensities in 0..=255
    #[arg(num_args = 18, value_name = "INT")]
    pub values: Vec<u8>,
    /// Weight of the mean term
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub a: f64,
    /// Weight of the variance term
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub b: f64,
    /// Weight of the histogram term
    #[arg(long, default_value_t = 1.0 / 3.0)]
    pub c: f64,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[command(subcommand)]
    pub shape: GenShape,
}

#[derive(Subcommand, Debug)]
pub enum GenShape {
    /// Centered plus-sign on a uniform background
    Cross {
        #[arg(long, default_value_t = 100)]
        width: usize,
        #[arg(long, default_value_t = 100)]
        height: usize,
        /// Intensity of the cross
        #[arg(long, default_value_t = 0)]
        fg: u8,
        /// Intensity of the background
        #[arg(long, default_value_t = 255)]
        bg: u8,
        /// Arm thickness in cells
        #[arg(long, default_value_t = 20)]
        thickness: usize,
        /// Output PGM path
        #[arg(long)]
        out: PathBuf,
    },
    /// Homogeneous habitat
    Flat {
        #[arg(long, default_value_t = 100)]
        width: usize,
        #[arg(long, default_value_t = 100)]
        height: usize,
        /// Intensity of every cell
        #[arg(long, default_value_t = 128)]
        value: u8,
        /// Output PGM path
        #[arg(long)]
        out: PathBuf,
    },
}
