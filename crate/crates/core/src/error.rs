//! Error types shared by every module of the crate.

use num_bigint::BigInt;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while building or analyzing a monoid.
///
/// Budget-style failures (`PointCapExceeded`, `FaceCapExceeded`,
/// `CycleCapExceeded`) report how far the computation got so callers can
/// either raise the cap or use the partial result knowingly.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A monoid needs at least one generator.
    #[error("generator list is empty")]
    EmptyGenerators,

    /// The zero vector generates nothing and breaks positivity.
    #[error("generator {index} is the zero vector")]
    ZeroGenerator {
        /// Position of the offending generator in the input list.
        index: usize,
    },

    /// A vector had the wrong number of coordinates.
    #[error("expected {expected} coordinates, found {found}")]
    DimensionMismatch {
        /// Required coordinate count.
        expected: usize,
        /// Coordinate count actually seen.
        found: usize,
    },

    /// The generated cone contains a line, so the monoid is not positive.
    #[error("cone is not pointed; it contains the line through {witness:?}")]
    NotPointed {
        /// A nonzero vector v with both v and -v in the cone.
        witness: Vec<i64>,
    },

    /// No integer linear functional gives every generator the same
    /// positive degree.
    #[error("no grading gives every generator degree 1")]
    NotHomogeneous,

    /// A degree slice would exceed the configured point budget.
    #[error("point budget {cap} exceeded at degree {degree}; slices are complete through degree {completed}")]
    PointCapExceeded {
        /// Configured per-slice point budget.
        cap: usize,
        /// Degree at which the budget was exceeded.
        degree: usize,
        /// Largest degree whose slice was fully computed.
        completed: usize,
    },

    /// Face enumeration hit its cap before exhausting the query.
    #[error("face enumeration cap {cap} exceeded")]
    FaceCapExceeded {
        /// Configured face budget.
        cap: usize,
    },

    /// Odd-cycle enumeration hit its cap; pair lists would be incomplete.
    #[error("odd cycle enumeration cap {cap} exceeded")]
    CycleCapExceeded {
        /// Configured cycle budget.
        cap: usize,
    },

    /// The trailing finite differences of a count sequence did not vanish,
    /// so no h-polynomial can be certified at this degree.
    #[error("counts do not stabilize through degree {degree}; trailing differences {tail:?}")]
    NonStabilized {
        /// Last degree with verified counts.
        degree: usize,
        /// The non-vanishing tail of d-th differences.
        tail: Vec<BigInt>,
    },

    /// 64-bit coordinate arithmetic would overflow.
    #[error("coordinate arithmetic would overflow the 64-bit range")]
    CoordinateOverflow,

    /// The Hilbert basis failed to regenerate the normalization at some
    /// degree within the requested certification bound.
    #[error("hilbert basis certificate failed at degree {degree}: {witness:?} does not decompose over the basis")]
    CertificateFailed {
        /// Degree of the undecomposable element.
        degree: usize,
        /// The element that does not decompose.
        witness: Vec<i64>,
    },

    /// The facet search tracks incidences in a 128-bit set, limiting the
    /// number of generators it accepts.
    #[error("too many generators for the facet search (limit {limit})")]
    TooManyGenerators {
        /// Hard generator limit.
        limit: usize,
    },

    /// A polytope was declared over a lattice that misses one of its
    /// vertices.
    #[error("vertex {index} is not a point of the declared ambient lattice")]
    VertexOutsideLattice {
        /// Position of the offending vertex in the input list.
        index: usize,
    },

    /// A named generator family was asked for outside its parameter
    /// range.
    #[error("family {family} is undefined for parameter {parameter}")]
    InvalidParameter {
        /// Family name.
        family: &'static str,
        /// The rejected parameter.
        parameter: usize,
    },

    /// An edge is a loop or references a vertex outside `0..n`.
    #[error("edge ({u}, {v}) is invalid in a graph on {n} vertices")]
    InvalidEdge {
        /// First endpoint.
        u: usize,
        /// Second endpoint.
        v: usize,
        /// Vertex count of the graph.
        n: usize,
    },
}
