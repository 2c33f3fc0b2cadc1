use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dangling dart `{0}`: not paired by any edge")]
    DanglingDart(String),
    #[error("dart `{0}` used more than once")]
    DuplicateDart(String),
    #[error("dart `{0}` paired but missing from every rotation")]
    UnplacedDart(String),
    #[error("dart `{0}` is paired with itself")]
    SelfPairedDart(String),
    #[error("graph is disconnected: vertex `{0}` unreachable from `{1}`")]
    Disconnected(String, String),
    #[error("graph has no edges")]
    NoEdges,
    #[error("rotation system is not spherical: V - E + F = {0}, expected 2")]
    NotSpherical(i64),
    #[error("missing multiplicity for {kind} `{id}`")]
    MissingMultiplicity { kind: &'static str, id: String },
    #[error("non-positive multiplicity {value} for {kind} `{id}`")]
    NonPositiveMultiplicity {
        kind: &'static str,
        id: String,
        value: i64,
    },
    #[error("duplicate multiplicity entry for {kind} `{id}`")]
    DuplicateMultiplicity { kind: &'static str, id: String },
    #[error("diagram has {crossings} crossings, above the state-sum bound {bound}")]
    CrossingBound { crossings: usize, bound: usize },
    #[error("operation requires a knot; the link has {0} components")]
    MultiComponent(usize),
    #[error("malformed gluing: arc label used {0} times")]
    MalformedGluing(usize),
    #[error("model spec error: {0}")]
    Spec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
