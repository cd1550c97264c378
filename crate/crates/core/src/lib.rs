//! Deterministic simulator of artificial ant colonies foraging on
//! grayscale image habitats. Ants move on a toroidal lattice under a
//! pheromone-weighted, direction-biased random walk and deposit pheromone
//! in proportion to the local heterogeneity of the image, so the colony's
//! pheromone field converges toward a perceptual map of its habitat.

pub mod colony;
pub mod engine;
pub mod habitat;
pub mod metrics;
pub mod pgm;
pub mod pheromone;

pub use colony::{Ant, Direction, Occupancy, SenseParams, TransitionProbs};
pub use engine::{ComparisonMode, EngineError, Params, RunReport, RunSchedule, SimState, TickStats};
pub use habitat::{Habitat, HabitatError, TorusCoord, Window9};
pub use metrics::{HeterogeneityScore, MetricKind, MetricWeights, UlamCorrelation};
pub use pgm::{GrayImage, PgmError};
pub use pheromone::{FieldError, PheromoneField};
