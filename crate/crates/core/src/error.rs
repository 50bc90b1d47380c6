use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the structured error names printed by the
/// command-line front end, see [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no regions or no vertices")]
    EmptyGraph,
    #[error("simplex dimension must be at least 1, got {0}")]
    InvalidDimension(usize),
    #[error("region {region} has {found} vertices, expected {expected}")]
    RegionSizeMismatch {
        region: usize,
        expected: usize,
        found: usize,
    },
    #[error("region {region} repeats vertex {vertex}")]
    DuplicateVertexInRegion { region: usize, vertex: usize },
    #[error("region {region} duplicates region {first}")]
    DuplicateRegion { region: usize, first: usize },
    #[error("region {region} names vertex {vertex}, but the graph has {vertex_count} vertices")]
    VertexOutOfRange {
        region: usize,
        vertex: usize,
        vertex_count: usize,
    },
    #[error("vertex {0} belongs to no region")]
    UncoveredVertex(usize),

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("residue {value} at position {index} is not below the modulus {modulus}")]
    ResidueOutOfRange {
        index: usize,
        value: u64,
        modulus: u64,
    },
    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("color {color} is outside 0..={max}")]
    ColorOutOfRange { color: usize, max: usize },
    #[error("coloring is not proper on region {region}")]
    ImproperColoring { region: usize },

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("graph is not region-connected ({components} components)")]
    NotRegionConnected { components: usize },
    #[error("association graph of the components has a cycle")]
    CyclicAssociation,
    #[error("internal check failed: {0}")]
    InternalCheckFailed(String),
    #[error("class count {class_count} and coloring propagation disagree ({detail})")]
    CriteriaDisagree { class_count: String, detail: String },

    #[error("domain error: {0}")]
    DomainError(String),
    #[error("instance too large for exhaustive search: {size} exceeds {limit}")]
    TooLarge { size: u128, limit: u128 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable structured name of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::EmptyGraph => "EmptyGraph",
            Error::InvalidDimension(_) => "InvalidDimension",
            Error::RegionSizeMismatch { .. } => "RegionSizeMismatch",
            Error::DuplicateVertexInRegion { .. } => "DuplicateVertexInRegion",
            Error::DuplicateRegion { .. } => "DuplicateRegion",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::UncoveredVertex(_) => "UncoveredVertex",
            Error::InvalidModulus(_) => "InvalidModulus",
            Error::ResidueOutOfRange { .. } => "ResidueOutOfRange",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::DimensionMismatch { .. } => "DimensionMismatch",
            Error::ModulusMismatch { .. } => "ModulusMismatch",
            Error::ColorOutOfRange { .. } => "ColorOutOfRange",
            Error::ImproperColoring { .. } => "ImproperColoring",
            Error::HypothesisViolation(_) => "HypothesisViolation",
            Error::NotRegionConnected { .. } => "NotRegionConnected",
            Error::CyclicAssociation => "CyclicAssociation",
            Error::InternalCheckFailed(_) => "InternalCheckFailed",
            Error::CriteriaDisagree { .. } => "CriteriaDisagree",
            Error::DomainError(_) => "DomainError",
            Error::TooLarge { .. } => "TooLarge",
            Error::Parse { .. } => "ParseError",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

pub(crate) fn check_moduli(left: u64, right: u64) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::ModulusMismatch { left, right })
    }
}
