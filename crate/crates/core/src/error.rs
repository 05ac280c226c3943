use std::path::PathBuf;

/// Unified error type for the whole library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    // corpus
    #[error("document {id}: unparseable date {value:?}: {reason}")]
    InvalidDate {
        id: String,
        value: String,
        reason: String,
    },
    #[error("invalid token filter config: {0}")]
    InvalidFilterConfig(String),
    #[error("invalid period partition: {0}")]
    InvalidPartition(String),
    #[error("empty corpus cell: source {source:?}, period {period:?}")]
    EmptyCell { source: String, period: String },

    // embedding
    #[error("empty vocabulary for {slice:?}: no word reached min_count {min_count}")]
    EmptyVocabulary { slice: String, min_count: u64 },
    #[error("huffman tree requires at least 2 vocabulary words, got {0}")]
    HuffmanTooSmall(usize),
    #[error("invalid train config: {0}")]
    InvalidTrainConfig(String),
    #[error("cosine of a zero vector is undefined")]
    ZeroVector,
    #[error("word {0:?} not in vocabulary")]
    OutOfVocabulary(String),
    #[error("malformed model file {path}: {reason}")]
    MalformedModel { path: PathBuf, reason: String },

    // bias
    #[error("invalid gender lexicon: {0}")]
    InvalidLexicon(String),
    #[error("no {side} lexicon entry found in vocabulary")]
    EmptyAxisSide { side: String },
    #[error("category {0:?} has no in-vocabulary target words")]
    EmptyCategory(String),
    #[error("invalid target lexicon: {0}")]
    InvalidTargetLexicon(String),
    #[error("invalid filter expression {expr:?}: {reason}")]
    InvalidFilterExpr { expr: String, reason: String },
    #[error("standardize requires at least 2 observations, got {0}")]
    TooFewObservations(usize),
    #[error("zero variance across bias observations")]
    ZeroVariance,

    // inference
    #[error("invalid sampler config: {0}")]
    InvalidSamplerConfig(String),
    #[error("hpd mass must lie strictly inside (0, 1), got {0}")]
    InvalidHpdMass(f64),
    #[error("hpd requires at least 10 samples, got {0}")]
    TooFewSamples(usize),
    #[error("every post-tuning transition diverged; the posterior trace is unusable")]
    AllDivergent,
    #[error("non-finite pointwise log density at observation indices {0:?}")]
    NonFinitePointwise(Vec<usize>),
    #[error("model comparison requires identical datasets: {0}")]
    DatasetMismatch(String),

    // pipeline
    #[error("config error: {0}")]
    Config(String),
    #[error("invalid synthetic spec: {0}")]
    InvalidSyntheticSpec(String),

    // io
    #[error("io error on {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("csv error in {path}: {source}")]
    Csv { path: PathBuf, source: csv::Error },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn csv(path: impl Into<PathBuf>, source: csv::Error) -> Self {
        Error::Csv {
            path: path.into(),
            source,
        }
    }

    /// True for errors caused by an invalid configuration or input file,
    /// as opposed to failures while processing valid inputs. The CLI maps
    /// these to its config-error exit code.
    pub fn is_config_error(&self) -> bool {
        matches!(
            self,
            Error::Config(_)
                | Error::InvalidFilterConfig(_)
                | Error::InvalidPartition(_)
                | Error::InvalidTrainConfig(_)
                | Error::InvalidSamplerConfig(_)
                | Error::InvalidLexicon(_)
                | Error::InvalidTargetLexicon(_)
                | Error::InvalidFilterExpr { .. }
                | Error::InvalidSyntheticSpec(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
