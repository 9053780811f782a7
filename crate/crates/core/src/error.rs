use thiserror::Error;

/// Every failure the library reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {0} does not belong to this lattice")]
    ForeignValue(String),
    #[error("bad carrier: {0}")]
    BadCarrier(String),
    #[error("operation tables are not residuated: {0}")]
    TableNotResiduated(String),
    #[error("{0} is not decidable for this lattice")]
    Undecidable(&'static str),
    #[error("unknown universe label `{0}`")]
    UnknownLabel(String),
    #[error("universe must be non-empty with unique labels: {0}")]
    BadUniverse(String),
    #[error("fuzzy sets live on different universes")]
    UniverseMismatch,
    #[error("expected {expected} membership values, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("at least one operand must be a fuzzy set")]
    ScalarOnly,
    #[error("beta must lie strictly above the lattice bottom")]
    BetaZero,
    #[error("not a beta-covering: the members' join at `{point}` is below beta")]
    NotACovering { point: String },
    #[error("a covering needs at least one member")]
    EmptyCovering,
    #[error("duplicate member name `{0}`")]
    DuplicateMember(String),
    #[error("unknown covering member `{0}`")]
    UnknownMember(String),
    #[error("unknown target `{0}`")]
    UnknownTarget(String),
    #[error("matrix dimensions do not agree: {0}")]
    DimensionMismatch(String),
    #[error("coverings differ in universe, lattice or beta")]
    ContextMismatch,
    #[error("unknown axiom `{0}`")]
    UnknownAxiom(String),
    #[error("operator fails axioms {0:?}")]
    AxiomsNotSatisfied(Vec<String>),
    #[error("lattice precondition unmet: {0}")]
    LatticePreconditionUnmet(String),
    #[error("unknown counterexample `{0}`")]
    UnknownCounterexample(String),
    #[error("reconstructed covering does not reproduce the operator: {0}")]
    ReconstructionFailed(String),
    #[error("operator tables are limited to |U| <= 3 and |L| <= 4, got |U| = {universe}, |L| = {carrier}")]
    TableTooLarge { universe: usize, carrier: usize },
    #[error("{0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
