//! Per-ant sensing and movement: the pheromone weighing function, the
//! directional bias against sharp turns, and categorical sampling of the
//! next cell from the normalized transition probabilities.

use crate::habitat::TorusCoord;
use crate::pheromone::PheromoneField;

/// The eight compass moves. The declaration order is also the fixed
/// cumulative order used when sampling a move from a distribution.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    N,
    NE,
    E,
    SE,
    S,
    SW,
    W,
    NW,
}

impl Direction {
    pub const ALL: [Direction; 8] = [
        Direction::N,
        Direction::NE,
        Direction::E,
        Direction::SE,
        Direction::S,
        Direction::SW,
        Direction::W,
        Direction::NW,
    ];

    /// Unit cell offset; y grows downward (row 0 is the top row).
    pub fn offset(self) -> (i64, i64) {
        match self {
            Direction::N => (0, -1),
            Direction::NE => (1, -1),
            Direction::E => (1, 0),
            Direction::SE => (1, 1),
            Direction::S => (0, 1),
            Direction::SW => (-1, 1),
            Direction::W => (-1, 0),
            Direction::NW => (-1, -1),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn opposite(self) -> Direction {
        Direction::ALL[(self.index() + 4) % 8]
    }
}

/// Minimal number of 45-degree steps between two directions, 0..=4.
pub fn angular_diff(a: Direction, b: Direction) -> u8 {
    let d = (a.index() as i8 - b.index() as i8).unsigned_abs() % 8;
    d.min(8 - d)
}

const DIRECTIONAL_WEIGHTS: [f64; 5] = [1.0, 0.5, 0.25, 1.0 / 12.0, 0.05];

/// Bias weight for a change of direction of `turn` 45-degree steps: sharp
/// turns are much less likely than going straight, U-turns least of all.
pub fn directional_weight(turn: u8) -> f64 {
    assert!(turn <= 4, "direction change must be 0..=4, got {turn}");
    DIRECTIONAL_WEIGHTS[usize::from(turn)]
}

/// Sensing parameters: `beta` is the osmotropotaxic sensitivity (how
/// sharply an ant follows the pheromone gradient), `1/delta` the sensory
/// capacity bounding discrimination at high concentrations.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SenseParams {
    pub beta: f64,
    pub delta: f64,
}

/// Relative attractiveness of a cell with pheromone level `sigma`:
/// `(1 + sigma / (1 + delta * sigma))^beta`. Equals 1 at zero pheromone and
/// saturates below `(1 + 1/delta)^beta` for positive `delta`.
pub fn pheromone_weight(sigma: f64, sense: &SenseParams) -> f64 {
    (1.0 + sigma / (1.0 + sense.delta * sigma)).powf(sense.beta)
}

/// Agent state. `heading` is the direction of the move `prev_pos -> pos`,
/// except at initialization and after a blocked step.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Ant {
    pub pos: TorusCoord,
    pub prev_pos: TorusCoord,
    pub heading: Direction,
}

/// Per-cell ant counts, kept consistent with the roster by the scheduler.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Occupancy {
    width: usize,
    height: usize,
    counts: Vec<u32>,
}

impl Occupancy {
    pub fn new(width: usize, height: usize) -> Self {
        assert!(width > 0 && height > 0);
        Self { width, height, counts: vec![0; width * height] }
    }

    fn index(&self, c: TorusCoord) -> usize {
        debug_assert!(c.x >= 0 && (c.x as usize) < self.width);
        debug_assert!(c.y >= 0 && (c.y as usize) < self.height);
        c.y as usize * self.width + c.x as usize
    }

    pub fn count(&self, c: TorusCoord) -> u32 {
        self.counts[self.index(c)]
    }

    pub fn add(&mut self, c: TorusCoord) {
        let i = self.index(c);
        self.counts[i] += 1;
    }

    pub fn remove(&mut self, c: TorusCoord) {
        let i = self.index(c);
        assert!(self.counts[i] > 0, "removing an ant from an empty cell");
        self.counts[i] -= 1;
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn max_count(&self) -> u32 {
        self.counts.iter().copied().max().unwrap_or(0)
    }
}

/// Move distribution over the eight neighbor cells, aligned with
/// [`Direction::ALL`], or `Blocked` when exclusion leaves no admissible
/// cell. Blocked is a valid outcome, not an error: the ant stays put.
#[derive(Clone, Copy, PartialEq, Debug)]
pub enum TransitionProbs {
    Distribution([f64; 8]),
    Blocked,
}

/// Normalized transition probabilities for one ant: each neighbor cell is
/// weighed by pheromone attractiveness times directional bias. With
/// `exclusion` set, cells already holding an ant get zero weight before
/// normalization.
pub fn transition_probs(
    ant: &Ant,
    field: &PheromoneField,
    occupancy: &Occupancy,
    sense: &SenseParams,
    exclusion: bool,
) -> TransitionProbs {
    let (w, h) = (field.width(), field.height());
    let mut probs = [0.0f64; 8];
    let mut sum = 0.0;
    for (i, dir) in Direction::ALL.iter().enumerate() {
        let (dx, dy) = dir.offset();
        let cell = ant.pos.offset(dx, dy).wrap(w, h);
        if exclusion && occupancy.count(cell) > 0 {
            continue;
        }
        let weight = pheromone_weight(field.sigma(cell), sense)
            * directional_weight(angular_diff(ant.heading, *dir));
        probs[i] = weight;
        sum += weight;
    }
    if sum <= 0.0 {
        return TransitionProbs::Blocked;
    }
    for p in &mut probs {
        *p /= sum;
    }
    TransitionProbs::Distribution(probs)
}

/// Applies one move sampled with a single uniform draw in [0, 1), walking
/// the cumulative distribution in `Direction::ALL` order. A blocked ant
/// keeps its cell and heading; its previous position becomes the current
/// one in both cases.
pub fn step_ant(
    ant: &Ant,
    probs: &TransitionProbs,
    draw: f64,
    width: usize,
    height: usize,
) -> Ant {
    match probs {
        TransitionProbs::Blocked => Ant { pos: ant.pos, prev_pos: ant.pos, heading: ant.heading },
        TransitionProbs::Distribution(p) => {
            let dir = sample_direction(p, draw);
            let (dx, dy) = dir.offset();
            Ant {
                pos: ant.pos.offset(dx, dy).wrap(width, height),
                prev_pos: ant.pos,
                heading: dir,
            }
        }
    }
}

fn sample_direction(probs: &[f64; 8], draw: f64) -> Direction {
    let mut acc = 0.0;
    let mut last_positive = None;
    for (i, &p) in probs.iter().enumerate() {
        if p <= 0.0 {
            continue;
        }
        acc += p;
        last_positive = Some(i);
        if draw < acc {
            return Direction::ALL[i];
        }
    }
    // Rounding can leave acc marginally below 1; fall back to the last
    // direction carrying probability mass.
    Direction::ALL[last_positive.expect("distribution carries positive mass")]
}
