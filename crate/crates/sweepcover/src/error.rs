use thiserror::Error;

/// Errors produced by planners, graph routines and the simulator.
#[derive(Debug, Error)]
pub enum Error {
    #[error("polyline must have at least one vertex")]
    EmptyPolyline,

    #[error("coordinate is not finite")]
    NonFiniteCoordinate,

    #[error("arc parameter {s} out of range [0, {len}] on an open curve")]
    ArcOutOfRange { s: f64, len: f64 },

    #[error("split parameter {param} out of range [0, {len}]")]
    SplitParamOutOfRange { param: f64, len: f64 },

    #[error("curve has zero length")]
    DegenerateCurve,

    #[error("parameter {name} must be positive (got {value})")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("infeasible: point at distance {distance} >= vT/2 = {limit} from the energy source")]
    Infeasible { distance: f64, limit: f64 },

    #[error("no progress possible: arc budget {budget} below minimum {min} (point too close to vT/2)")]
    NoProgress { budget: f64, min: f64 },

    #[error("input collection `{0}` is empty")]
    EmptyInput(&'static str),

    #[error("vertex id {id} out of range (vertex count {count})")]
    VertexOutOfRange { id: usize, count: usize },

    #[error("edge weight {0} is negative or not finite")]
    BadEdgeWeight(f64),

    #[error("forced edges contain a cycle")]
    ForcedEdgeCycle,

    #[error("cannot produce a spanning forest with {requested} components (reachable range [{min}, {max}])")]
    ComponentCountUnreachable {
        requested: usize,
        min: usize,
        max: usize,
    },

    #[error("vertex {0} has odd degree; multigraph is not Eulerian")]
    OddDegree(usize),

    #[error("edge set is disconnected; no Eulerian tour exists")]
    DisconnectedEdges,

    #[error("start vertex {0} has no incident edge")]
    IsolatedStart(usize),

    #[error("perfect matching requires an even number of points (got {0})")]
    OddMatchingCardinality(usize),

    #[error("tour oracle supports at most {max} segments (got {n})")]
    TooManySegments { n: usize, max: usize },

    #[error("plan has no energy-source metadata")]
    MissingEnergyMetadata,

    #[error("plan has no sensors")]
    EmptyPlan,

    #[error("simulation parameter out of contract: {0}")]
    BadSimulationParameter(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("invalid plan file: {0}")]
    InvalidPlanFile(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
