use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe must contain at least one element")]
    EmptyUniverse,

    #[error("duplicate element '{0}' in universe")]
    DuplicateElement(String),

    #[error("invalid element name '{0}': names must be nonempty and free of whitespace, ',', '{{', '}}' and a leading '#'")]
    InvalidElementName(String),

    #[error("unknown element '{0}'")]
    UnknownElement(String),

    #[error("block {index} is empty")]
    EmptyBlock { index: usize },

    #[error("not a covering: {} not covered by any block", .uncovered.join(", "))]
    NotACovering { uncovered: Vec<String> },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: String, right: String },

    #[error("set belongs to a different universe")]
    UniverseMismatch,

    #[error("exhaustive verification needs |U| <= {max}, got {n}")]
    UniverseTooLarge { n: usize, max: usize },

    #[error("route '{route}' is only defined for the sixth lower approximation, not {scheme} {bound}")]
    RouteMismatch {
        route: &'static str,
        scheme: &'static str,
        bound: &'static str,
    },

    #[error("line {line}: {source}")]
    AtLine {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("{0}")]
    Syntax(String),
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Self {
        match self {
            e @ Error::AtLine { .. } => e,
            e => Error::AtLine {
                line,
                source: Box::new(e),
            },
        }
    }
}
