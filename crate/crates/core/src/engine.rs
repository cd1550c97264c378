//! Simulation scheduler: colony initialization, the per-timestep update
//! loop (move, perceive, deposit, evaporate), habitat-swap schedules, and
//! run-level measurements.
//!
//! The engine owns the single RNG. Per tick it consumes exactly one
//! shuffle of the ant iteration order followed by one uniform draw per
//! non-blocked ant, in that order, which makes whole trajectories
//! bit-reproducible from the seed.

use crate::colony::{self, Ant, Direction, Occupancy, SenseParams, TransitionProbs};
use crate::habitat::{Habitat, TorusCoord, Window9};
use crate::metrics::{self, MetricKind, MetricWeights};
use crate::pgm::GrayImage;
use crate::pheromone::PheromoneField;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

#[derive(Error, Debug)]
pub enum EngineError {
    #[error("invalid parameter: {0}")]
    InvalidParams(&'static str),
    #[error("colony would be empty: density {density} over {cells} cells rounds to zero ants")]
    EmptyColony { density: f64, cells: usize },
    #[error("{ants} ants cannot fit {cells} cells with exclusion enabled")]
    TooManyAnts { ants: usize, cells: usize },
    #[error("lattice is {expected_w}x{expected_h} but habitat is {got_w}x{got_h}")]
    DimensionMismatch { expected_w: usize, expected_h: usize, got_w: usize, got_h: usize },
    #[error("scheduled step {step} is outside the run of {total} steps")]
    ScheduleOutOfRange { step: u64, total: u64 },
    #[error("snapshot steps must be strictly ascending")]
    UnsortedSnapshots,
    #[error("snapshot sink failed: {0}")]
    Snapshot(#[from] std::io::Error),
}

#[derive(Error, Debug, PartialEq, Eq)]
#[error("unknown comparison mode `{0}`; expected `prev` or `flat`")]
pub struct ParseCompareError(String);

/// Reference window an ant's new neighborhood is scored against.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum ComparisonMode {
    /// Window at the ant's previous position.
    #[default]
    Previous,
    /// Flat window at the habitat's mean intensity.
    FlatMean,
}

impl FromStr for ComparisonMode {
    type Err = ParseCompareError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "prev" | "previous" => Ok(Self::Previous),
            "flat" => Ok(Self::FlatMean),
            other => Err(ParseCompareError(other.to_owned())),
        }
    }
}

impl fmt::Display for ComparisonMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Previous => write!(f, "prev"),
            Self::FlatMean => write!(f, "flat"),
        }
    }
}

/// All model constants for a run.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct Params {
    /// Base pheromone deposition per ant per step.
    pub eta: f64,
    /// Evaporation rate per step, in [0, 1).
    pub kappa: f64,
    /// Osmotropotaxic sensitivity.
    pub beta: f64,
    /// Inverse sensory capacity.
    pub delta: f64,
    /// Gain on the heterogeneity term of deposition.
    pub gain: f64,
    /// Weights of the statistical metric's three terms.
    pub weights: MetricWeights,
    /// Colony size as a fraction of the cell count, in (0, 1].
    pub density: f64,
    /// Which heterogeneity metric scores window pairs.
    pub metric: MetricKind,
    /// Reference window for the heterogeneity score.
    pub compare: ComparisonMode,
    /// At most one ant per cell when set.
    pub exclusion: bool,
    /// RNG seed; equal seeds give bit-identical trajectories.
    pub seed: u64,
}

impl Default for Params {
    fn default() -> Self {
        Self {
            eta: 0.07,
            kappa: 0.015,
            beta: 3.5,
            delta: 0.2,
            gain: 1.5,
            weights: MetricWeights::thirds(),
            density: 0.3,
            metric: MetricKind::Statistical,
            compare: ComparisonMode::Previous,
            exclusion: true,
            seed: 1,
        }
    }
}

impl Params {
    pub fn validate(&self) -> Result<(), EngineError> {
        if !(self.eta.is_finite() && self.eta >= 0.0) {
            return Err(EngineError::InvalidParams("eta must be finite and non-negative"));
        }
        if !(0.0..1.0).contains(&self.kappa) {
            return Err(EngineError::InvalidParams("kappa must lie in [0, 1)"));
        }
        if !self.beta.is_finite() {
            return Err(EngineError::InvalidParams("beta must be finite"));
        }
        if !(self.delta.is_finite() && self.delta >= 0.0) {
            return Err(EngineError::InvalidParams("delta must be finite and non-negative"));
        }
        if !(self.gain.is_finite() && self.gain >= 0.0) {
            return Err(EngineError::InvalidParams("gain must be finite and non-negative"));
        }
        if !(self.density > 0.0 && self.density <= 1.0) {
            return Err(EngineError::InvalidParams("density must lie in (0, 1]"));
        }
        Ok(())
    }

    pub fn sense(&self) -> SenseParams {
        SenseParams { beta: self.beta, delta: self.delta }
    }
}

/// Per-tick bookkeeping.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct TickStats {
    /// Sum of all deposits made this tick, before evaporation.
    pub deposited: f64,
    /// Ants that found every admissible neighbor occupied.
    pub blocked: u64,
}

/// Full simulation snapshot: habitat, field, roster, occupancy, time and
/// generator state.
#[derive(Clone, Debug)]
pub struct SimState {
    habitat: Habitat,
    flat_window: Window9,
    field: PheromoneField,
    ants: Vec<Ant>,
    occupancy: Occupancy,
    t: u64,
    rng: ChaCha8Rng,
}

fn flat_window_of(habitat: &Habitat) -> Window9 {
    Window9([habitat.mean_intensity().round() as u8; 9])
}

impl SimState {
    /// Places `round(density * cells)` ants at random cells (distinct cells
    /// under exclusion) with uniform random headings over an all-zero
    /// field. RNG consumption order: all positions, then all headings.
    pub fn new(habitat: Habitat, params: &Params) -> Result<Self, EngineError> {
        params.validate()?;
        let (width, height) = (habitat.width(), habitat.height());
        let cells = width * height;
        let ant_count = (params.density * cells as f64).round() as usize;
        if ant_count == 0 {
            return Err(EngineError::EmptyColony { density: params.density, cells });
        }
        if params.exclusion && ant_count > cells {
            return Err(EngineError::TooManyAnts { ants: ant_count, cells });
        }

        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        let mut positions = Vec::with_capacity(ant_count);
        if params.exclusion {
            // Partial Fisher-Yates: the first ant_count entries end up a
            // uniform sample without replacement.
            let mut pool: Vec<usize> = (0..cells).collect();
            for i in 0..ant_count {
                let j = rng.random_range(i..cells);
                pool.swap(i, j);
            }
            positions.extend_from_slice(&pool[..ant_count]);
        } else {
            for _ in 0..ant_count {
                positions.push(rng.random_range(0..cells));
            }
        }

        let mut occupancy = Occupancy::new(width, height);
        let mut ants = Vec::with_capacity(ant_count);
        for &cell in &positions {
            let pos = TorusCoord::new((cell % width) as i64, (cell / width) as i64);
            occupancy.add(pos);
            ants.push(Ant { pos, prev_pos: pos, heading: Direction::N });
        }
        for ant in &mut ants {
            ant.heading = Direction::ALL[rng.random_range(0..8usize)];
        }

        Ok(Self {
            flat_window: flat_window_of(&habitat),
            field: PheromoneField::new(width, height),
            habitat,
            ants,
            occupancy,
            t: 0,
            rng,
        })
    }

    pub fn habitat(&self) -> &Habitat {
        &self.habitat
    }

    pub fn field(&self) -> &PheromoneField {
        &self.field
    }

    pub fn ants(&self) -> &[Ant] {
        &self.ants
    }

    pub fn occupancy(&self) -> &Occupancy {
        &self.occupancy
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// True when the maintained occupancy grid matches one rebuilt from the
    /// ant roster.
    pub fn occupancy_consistent(&self) -> bool {
        let mut rebuilt = Occupancy::new(self.habitat.width(), self.habitat.height());
        for ant in &self.ants {
            rebuilt.add(ant.pos);
        }
        rebuilt == self.occupancy
    }

    /// One full timestep: shuffle the iteration order, move every ant
    /// (each sensing the occupancy left by the ants before it), then let
    /// every ant deposit `eta + gain * heterogeneity` at its new cell, and
    /// finally evaporate the whole field. Sensing always reads the previous
    /// tick's post-evaporation field. Blocked ants stay put and deposit the
    /// bare `eta` (their two windows coincide).
    pub fn tick(&mut self, params: &Params) -> TickStats {
        let (width, height) = (self.habitat.width(), self.habitat.height());
        let sense = params.sense();

        let mut order: Vec<usize> = (0..self.ants.len()).collect();
        order.shuffle(&mut self.rng);

        let mut blocked = 0u64;
        for &i in &order {
            let probs = colony::transition_probs(
                &self.ants[i],
                &self.field,
                &self.occupancy,
                &sense,
                params.exclusion,
            );
            let draw = match probs {
                TransitionProbs::Blocked => {
                    blocked += 1;
                    0.0
                }
                TransitionProbs::Distribution(_) => self.rng.random::<f64>(),
            };
            let moved = colony::step_ant(&self.ants[i], &probs, draw, width, height);
            if moved.pos != self.ants[i].pos {
                self.occupancy.remove(self.ants[i].pos);
                self.occupancy.add(moved.pos);
            }
            self.ants[i] = moved;
        }

        // Deposits run in fixed roster order so float accumulation is
        // reproducible.
        let mut deposited = 0.0;
        for ant in &self.ants {
            let here = self.habitat.window(ant.pos);
            let reference = match params.compare {
                ComparisonMode::Previous => self.habitat.window(ant.prev_pos),
                ComparisonMode::FlatMean => self.flat_window,
            };
            let score = metrics::heterogeneity(&here, &reference, params.metric, &params.weights);
            let amount = params.eta + params.gain * score.value;
            self.field.deposit(ant.pos, amount).expect("deposit amount is non-negative");
            deposited += amount;
        }

        self.field.evaporate(params.kappa).expect("rate was validated");
        self.t += 1;
        TickStats { deposited, blocked }
    }

    /// Replaces the environment. Field, roster and RNG are untouched: any
    /// memory of the previous habitat lives only in the pheromone field.
    pub fn swap_habitat(&mut self, habitat: Habitat) -> Result<(), EngineError> {
        if habitat.width() != self.habitat.width() || habitat.height() != self.habitat.height() {
            return Err(EngineError::DimensionMismatch {
                expected_w: self.habitat.width(),
                expected_h: self.habitat.height(),
                got_w: habitat.width(),
                got_h: habitat.height(),
            });
        }
        self.flat_window = flat_window_of(&habitat);
        self.habitat = habitat;
        Ok(())
    }
}

/// What to do over a run: how many ticks, when to snapshot, and which
/// habitats to swap in. A swap scheduled at step `s` is applied before tick
/// `s`, so that tick already senses the new habitat.
#[derive(Clone, Debug, Default)]
pub struct RunSchedule {
    pub total_steps: u64,
    /// Ascending timesteps at which to emit a field snapshot.
    pub snapshot_steps: Vec<u64>,
    pub swaps: Vec<(u64, Habitat)>,
}

#[derive(Clone, Copy, PartialEq, Debug)]
pub struct ReportRow {
    pub step: u64,
    pub total_pheromone: f64,
    pub gini: f64,
    pub max_sigma: f64,
}

/// Per-step field statistics for a whole run.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct RunReport {
    pub rows: Vec<ReportRow>,
}

impl RunReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("step,total_pheromone,gini,max_sigma\n");
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{}\n",
                r.step, r.total_pheromone, r.gini, r.max_sigma
            ));
        }
        out
    }
}

/// Executes ticks `1..=total_steps`, applying scheduled swaps and handing
/// scheduled snapshots to `sink` as they are produced.
pub fn run(
    state: &mut SimState,
    params: &Params,
    schedule: &RunSchedule,
    mut sink: impl FnMut(u64, &GrayImage) -> std::io::Result<()>,
) -> Result<RunReport, EngineError> {
    if schedule.snapshot_steps.windows(2).any(|w| w[0] >= w[1]) {
        return Err(EngineError::UnsortedSnapshots);
    }
    for &step in &schedule.snapshot_steps {
        if step == 0 || step > schedule.total_steps {
            return Err(EngineError::ScheduleOutOfRange { step, total: schedule.total_steps });
        }
    }
    for (step, habitat) in &schedule.swaps {
        if *step == 0 || *step > schedule.total_steps {
            return Err(EngineError::ScheduleOutOfRange { step: *step, total: schedule.total_steps });
        }
        if habitat.width() != state.habitat.width() || habitat.height() != state.habitat.height() {
            return Err(EngineError::DimensionMismatch {
                expected_w: state.habitat.width(),
                expected_h: state.habitat.height(),
                got_w: habitat.width(),
                got_h: habitat.height(),
            });
        }
    }

    let mut rows = Vec::with_capacity(schedule.total_steps as usize);
    for step in 1..=schedule.total_steps {
        for (swap_step, habitat) in &schedule.swaps {
            if *swap_step == step {
                state.swap_habitat(habitat.clone())?;
            }
        }
        state.tick(params);
        rows.push(ReportRow {
            step,
            total_pheromone: state.field.total(),
            gini: field_gini(&state.field),
            max_sigma: state.field.max_sigma(),
        });
        if schedule.snapshot_steps.binary_search(&step).is_ok() {
            sink(step, &state.field.snapshot())?;
        }
    }
    Ok(RunReport { rows })
}

/// Gini coefficient of the concentration distribution: 0 for a uniform
/// positive field (and, by convention, for an all-zero one), approaching 1
/// as pheromone concentrates on few cells.
pub fn field_gini(field: &PheromoneField) -> f64 {
    let total: f64 = field.values().iter().sum();
    if total <= 0.0 {
        return 0.0;
    }
    let mut values = field.values().to_vec();
    values.sort_by(|a, b| a.partial_cmp(b).expect("concentrations are never NaN"));
    let n = values.len() as f64;
    let mut weighted = 0.0;
    for (i, v) in values.iter().enumerate() {
        weighted += (2.0 * (i as f64 + 1.0) - n - 1.0) * v;
    }
    (weighted / (n * total)).clamp(0.0, 1.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn small_params() -> Params {
        Params { seed: 42, ..Params::default() }
    }

    #[test]
    fn init_places_the_expected_colony() {
        let habitat = Habitat::homogeneous(100, 100, 128).unwrap();
        let state = SimState::new(habitat, &Params::default()).unwrap();
        assert_eq!(state.ants().len(), 3000);
        assert_eq!(state.t(), 0);
        assert_eq!(state.field().total(), 0.0);
        let distinct: HashSet<(i64, i64)> =
            state.ants().iter().map(|a| (a.pos.x, a.pos.y)).collect();
        assert_eq!(distinct.len(), 3000, "exclusion demands distinct cells");
        assert!(state.ants().iter().all(|a| a.prev_pos == a.pos));
        assert!(state.occupancy_consistent());
    }

    #[test]
    fn init_rejects_empty_colony() {
        let habitat = Habitat::homogeneous(3, 3, 0).unwrap();
        let params = Params { density: 0.01, ..Params::default() };
        assert!(matches!(
            SimState::new(habitat, &params),
            Err(EngineError::EmptyColony { .. })
        ));
    }

    #[test]
    fn params_are_validated() {
        let habitat = Habitat::homogeneous(5, 5, 0).unwrap();
        for bad in [
            Params { density: 1.5, ..Params::default() },
            Params { kappa: 1.0, ..Params::default() },
            Params { eta: -0.1, ..Params::default() },
            Params { gain: f64::NAN, ..Params::default() },
        ] {
            assert!(matches!(
                SimState::new(habitat.clone(), &bad),
                Err(EngineError::InvalidParams(_))
            ));
        }
    }

    #[test]
    fn same_seed_reproduces_the_state() {
        let habitat = Habitat::homogeneous(20, 20, 90).unwrap();
        let params = small_params();
        let mut a = SimState::new(habitat.clone(), &params).unwrap();
        let mut b = SimState::new(habitat, &params).unwrap();
        assert_eq!(a.ants(), b.ants());
        for _ in 0..5 {
            a.tick(&params);
            b.tick(&params);
        }
        assert_eq!(a.ants(), b.ants());
        assert_eq!(a.field(), b.field());
        assert_eq!(a.t(), 5);
    }

    #[test]
    fn homogeneous_tick_deposits_bare_eta() {
        let habitat = Habitat::homogeneous(20, 20, 200).unwrap();
        let params = small_params();
        let mut state = SimState::new(habitat, &params).unwrap();
        let n = state.ants().len() as f64;
        let stats = state.tick(&params);
        assert!((stats.deposited - n * params.eta).abs() < 1e-9);
        let expected_total = (1.0 - params.kappa) * n * params.eta;
        assert!((state.field().total() - expected_total).abs() / expected_total < 1e-9);
    }

    #[test]
    fn homogeneous_habitat_reduces_to_zero_gain() {
        let habitat = Habitat::homogeneous(16, 16, 37).unwrap();
        let with_gain = small_params();
        let no_gain = Params { gain: 0.0, ..with_gain };
        let mut a = SimState::new(habitat.clone(), &with_gain).unwrap();
        let mut b = SimState::new(habitat, &no_gain).unwrap();
        for _ in 0..10 {
            a.tick(&with_gain);
            b.tick(&no_gain);
        }
        assert_eq!(a.field(), b.field(), "trajectories must be bit-identical");
        assert_eq!(a.ants(), b.ants());
    }

    #[test]
    fn flat_comparison_on_homogeneous_habitat_also_reduces() {
        let habitat = Habitat::homogeneous(12, 12, 99).unwrap();
        let flat = Params { compare: ComparisonMode::FlatMean, ..small_params() };
        let no_gain = Params { gain: 0.0, ..small_params() };
        let mut a = SimState::new(habitat.clone(), &flat).unwrap();
        let mut b = SimState::new(habitat, &no_gain).unwrap();
        for _ in 0..5 {
            a.tick(&flat);
            b.tick(&no_gain);
        }
        assert_eq!(a.field(), b.field());
    }

    #[test]
    fn exclusion_keeps_single_occupancy() {
        let habitat = Habitat::homogeneous(20, 20, 10).unwrap();
        let params = small_params();
        let mut state = SimState::new(habitat, &params).unwrap();
        for _ in 0..20 {
            state.tick(&params);
            assert!(state.occupancy_consistent());
            assert!(state.occupancy().max_count() <= 1);
        }
    }

    #[test]
    fn stacking_mode_piles_ants_up() {
        let habitat = Habitat::homogeneous(10, 10, 10).unwrap();
        let params = Params { exclusion: false, density: 0.9, ..small_params() };
        let mut state = SimState::new(habitat, &params).unwrap();
        let mut max_seen = state.occupancy().max_count();
        for _ in 0..10 {
            state.tick(&params);
            assert!(state.occupancy_consistent());
            max_seen = max_seen.max(state.occupancy().max_count());
        }
        assert!(max_seen >= 2, "90 ants on 100 cells should stack somewhere");
    }

    #[test]
    fn saturated_exclusion_blocks_everyone() {
        let habitat = Habitat::homogeneous(3, 3, 50).unwrap();
        let params = Params { density: 1.0, ..small_params() };
        let mut state = SimState::new(habitat, &params).unwrap();
        let before: Vec<Ant> = state.ants().to_vec();
        let stats = state.tick(&params);
        assert_eq!(stats.blocked, 9);
        assert!((stats.deposited - 9.0 * params.eta).abs() < 1e-12);
        assert!(state
            .ants()
            .iter()
            .zip(&before)
            .all(|(now, was)| now.pos == was.pos && now.heading == was.heading));
    }

    #[test]
    fn swap_to_identical_habitat_changes_nothing() {
        let habitat = Habitat::homogeneous(10, 10, 77).unwrap();
        let params = small_params();
        let mut a = SimState::new(habitat.clone(), &params).unwrap();
        let mut b = a.clone();
        b.swap_habitat(habitat).unwrap();
        for _ in 0..5 {
            a.tick(&params);
            b.tick(&params);
        }
        assert_eq!(a.field(), b.field());
    }

    #[test]
    fn swap_rejects_mismatched_dimensions() {
        let habitat = Habitat::homogeneous(10, 10, 77).unwrap();
        let mut state = SimState::new(habitat, &small_params()).unwrap();
        let wrong = Habitat::homogeneous(9, 10, 77).unwrap();
        assert!(matches!(
            state.swap_habitat(wrong),
            Err(EngineError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn zero_step_run_yields_empty_report() {
        let habitat = Habitat::homogeneous(10, 10, 0).unwrap();
        let mut state = SimState::new(habitat, &small_params()).unwrap();
        let schedule = RunSchedule { total_steps: 0, ..Default::default() };
        let report = run(&mut state, &small_params(), &schedule, |_, _| Ok(())).unwrap();
        assert!(report.rows.is_empty());
        assert_eq!(report.to_csv(), "step,total_pheromone,gini,max_sigma\n");
    }

    #[test]
    fn run_emits_snapshots_in_ascending_order() {
        let habitat = Habitat::homogeneous(10, 10, 0).unwrap();
        let params = small_params();
        let mut state = SimState::new(habitat, &params).unwrap();
        let schedule = RunSchedule {
            total_steps: 10,
            snapshot_steps: vec![1, 5, 9],
            swaps: Vec::new(),
        };
        let mut seen = Vec::new();
        run(&mut state, &params, &schedule, |step, image| {
            assert_eq!((image.width(), image.height()), (10, 10));
            seen.push(step);
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, vec![1, 5, 9]);
    }

    #[test]
    fn run_is_deterministic() {
        let habitat = Habitat::homogeneous(12, 12, 50).unwrap();
        let params = small_params();
        let schedule = RunSchedule {
            total_steps: 15,
            snapshot_steps: vec![3, 15],
            swaps: Vec::new(),
        };
        let capture = |state: &mut SimState| {
            let mut shots = Vec::new();
            let report = run(state, &params, &schedule, |step, image| {
                shots.push((step, crate::pgm::encode(image)));
                Ok(())
            })
            .unwrap();
            (shots, report.to_csv())
        };
        let mut a = SimState::new(habitat.clone(), &params).unwrap();
        let mut b = SimState::new(habitat, &params).unwrap();
        assert_eq!(capture(&mut a), capture(&mut b));
    }

    #[test]
    fn run_validates_the_schedule() {
        let habitat = Habitat::homogeneous(10, 10, 0).unwrap();
        let params = small_params();
        let mut state = SimState::new(habitat, &params).unwrap();
        let unsorted = RunSchedule {
            total_steps: 10,
            snapshot_steps: vec![5, 3],
            swaps: Vec::new(),
        };
        assert!(matches!(
            run(&mut state, &params, &unsorted, |_, _| Ok(())),
            Err(EngineError::UnsortedSnapshots)
        ));
        let out_of_range = RunSchedule {
            total_steps: 10,
            snapshot_steps: vec![11],
            swaps: Vec::new(),
        };
        assert!(matches!(
            run(&mut state, &params, &out_of_range, |_, _| Ok(())),
            Err(EngineError::ScheduleOutOfRange { step: 11, total: 10 })
        ));
    }

    #[test]
    fn gini_of_uniform_field_is_zero() {
        let mut field = PheromoneField::new(10, 10);
        for y in 0..10 {
            for x in 0..10 {
                field.deposit(TorusCoord::new(x, y), 2.5).unwrap();
            }
        }
        assert!(field_gini(&field) < 1e-12);
        assert_eq!(field_gini(&PheromoneField::new(5, 5)), 0.0);
    }

    #[test]
    fn gini_of_point_mass_matches_closed_form() {
        let mut field = PheromoneField::new(10, 10);
        field.deposit(TorusCoord::new(4, 7), 3.25).unwrap();
        let m = 100.0;
        assert!((field_gini(&field) - (m - 1.0) / m).abs() < 1e-12);
    }
}
