//! Subcommand implementations: the experiment driver, the metrics debug
//! printout, and habitat generation.

use crate::config::{GenShape, MetricsArgs, RunConfig};
use crate::gen;
use antmap_core::engine::{self, RunSchedule, SimState};
use antmap_core::metrics::{
    compose, heterogeneity, rank_window, stat_delta_terms, ulam_correlation, MetricKind,
    MetricWeights,
};
use antmap_core::{Habitat, Window9};
use anyhow::{Context, Result};
use std::fs;
use std::path::Path;
use std::time::{Duration, Instant};

pub struct RunSummary {
    pub steps: u64,
    pub wall: Duration,
    pub final_gini: f64,
}

fn load_habitat(path: &Path) -> Result<Habitat> {
    let bytes =
        fs::read(path).with_context(|| format!("cannot read habitat `{}`", path.display()))?;
    Habitat::from_pgm(&bytes).with_context(|| format!("cannot parse habitat `{}`", path.display()))
}

/// Snapshot schedule implied by the config: every `snapshot_every` steps,
/// always including the final step; just the final step when 0.
fn snapshot_steps(iterations: u64, every: u64) -> Vec<u64> {
    if iterations == 0 {
        return Vec::new();
    }
    if every == 0 {
        return vec![iterations];
    }
    let mut steps: Vec<u64> = (1..).map(|i| i * every).take_while(|s| *s <= iterations).collect();
    if steps.last() != Some(&iterations) {
        steps.push(iterations);
    }
    steps
}

/// Builds the schedule, executes the run, and writes `snap_NNNNNN.pgm`
/// files, `report.csv` and `config.txt` into the output directory.
pub fn run_experiment(cfg: &RunConfig) -> Result<RunSummary> {
    let habitat = load_habitat(&cfg.habitat_path)?;
    let swaps = match &cfg.swap {
        Some((step, path)) => vec![(*step, load_habitat(path)?)],
        None => Vec::new(),
    };
    let schedule = RunSchedule {
        total_steps: cfg.iterations,
        snapshot_steps: snapshot_steps(cfg.iterations, cfg.snapshot_every),
        swaps,
    };

    fs::create_dir_all(&cfg.out_dir)
        .with_context(|| format!("cannot create output directory `{}`", cfg.out_dir.display()))?;
    fs::write(cfg.out_dir.join("config.txt"), cfg.to_kv())
        .with_context(|| format!("cannot write config into `{}`", cfg.out_dir.display()))?;

    let started = Instant::now();
    let mut state = SimState::new(habitat, &cfg.params)?;
    let out_dir = cfg.out_dir.clone();
    let report = engine::run(&mut state, &cfg.params, &schedule, |step, image| {
        fs::write(out_dir.join(format!("snap_{step:06}.pgm")), antmap_core::pgm::encode(image))
    })?;
    let wall = started.elapsed();

    fs::write(cfg.out_dir.join("report.csv"), report.to_csv())
        .with_context(|| format!("cannot write report into `{}`", cfg.out_dir.display()))?;

    Ok(RunSummary {
        steps: cfg.iterations,
        wall,
        final_gini: report.rows.last().map_or(0.0, |row| row.gini),
    })
}

/// Every intermediate quantity of both metrics for two 3x3 windows, so a
/// worked example can be checked by hand.
pub fn metrics_report(args: &MetricsArgs) -> Result<String> {
    let values: [u8; 18] = args.values.as_slice().try_into().context("expected 18 values")?;
    let w1 = Window9(values[..9].try_into().unwrap());
    let w2 = Window9(values[9..].try_into().unwrap());
    let weights = MetricWeights::new(args.a, args.b, args.c).context("invalid weights")?;

    let pi1 = rank_window(&w1);
    let pi2 = rank_window(&w2);
    let s = compose(&pi1, &pi2);
    let u = ulam_correlation(&w1, &w2);
    let ordinal = heterogeneity(&w1, &w2, MetricKind::Ulam, &weights);
    let terms = stat_delta_terms(&w1, &w2, &weights);

    let mut out = String::new();
    out.push_str(&format!("pi1: {pi1}\n"));
    out.push_str(&format!("pi2: {pi2}\n"));
    out.push_str(&format!("s:   {s}\n"));
    out.push_str(&format!("s*:  {}\n", s.reversed()));
    out.push_str(&format!("delta1={} delta2={}\n", u.delta1, u.delta2));
    out.push_str(&format!("tau_u={} tau_r={} tau={}\n", u.tau_u, u.tau_r, u.tau));
    out.push_str(&format!("ulam heterogeneity={}\n", ordinal.value));
    out.push_str(&format!(
        "mean_term={} variance_term={} histogram_term={}\n",
        terms.mean_term, terms.variance_term, terms.histogram_term
    ));
    out.push_str(&format!(
        "delta_h={} (a={} b={} c={})\n",
        terms.value,
        weights.a(),
        weights.b(),
        weights.c()
    ));
    Ok(out)
}

/// Generates a synthetic habitat and writes it as binary PGM.
pub fn generate(shape: &GenShape) -> Result<String> {
    let (habitat, out) = match shape {
        GenShape::Cross { width, height, fg, bg, thickness, out } => {
            (gen::gen_cross(*width, *height, *fg, *bg, *thickness)?, out)
        }
        GenShape::Flat { width, height, value, out } => {
            (gen::gen_flat(*width, *height, *value)?, out)
        }
    };
    fs::write(out, habitat.to_pgm())
        .with_context(|| format!("cannot write habitat `{}`", out.display()))?;
    Ok(format!("wrote {}x{} habitat to {}", habitat.width(), habitat.height(), out.display()))
}
