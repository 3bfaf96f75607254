//! Crate-wide error type. Every failure carries enough context to diagnose
//! the call without re-running it.

use alloc::string::String;
use core::fmt;

/// Errors produced by lattice, cohomology, bound, enumeration, and
/// zero-scheme operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Intersection or addition of classes from different lattices.
    LatticeMismatch { left: String, right: String },
    /// A class was paired with a surface model of the wrong lattice.
    WrongLattice { surface: String, class: String },
    /// `C.(C+K)` came out odd; the input is not a curve class of this lattice.
    NonIntegralGenus { class: String, pairing: i64 },
    /// Degree was requested on a model with no embedding class.
    MissingEmbedding { surface: String },
    /// Scroll-to-Hirzebruch needs `e === r-1 (mod 2)` and `(r-1+e)/2 >= e`.
    ScrollModelInvalid { r: i64, e: i64, reason: &'static str },
    /// Blown-plane operations support 1..=8 points (enumeration 1..=5).
    UnsupportedPointCount { s: usize, max: usize },
    /// Input outside an operation's documented domain.
    Domain { what: &'static str, detail: String },
    /// A linear system required to be nonempty has h^0 = 0.
    EmptySystem { class: String },
    /// h0_restricted preconditions failed; carries the offending values.
    RestrictionPrecondition { h0_m_minus_c: i64, h1_m: i64 },
    /// Scrollar-invariant scan passed its termination guard.
    NoThreshold { guard: i64 },
    /// Imposed nodes exceed the dimension of the system.
    NodesExceedSystem { delta: i64, dim: i64 },
    /// Second-bound enumeration found no class at all.
    NoAttainingClass { d: i64, r: i64 },
    /// Second-bound enumeration disagrees with the pinned source value.
    SecondBoundMismatch { d: i64, r: i64, computed: i64, pinned: i64 },
    /// Residual series would have negative projective dimension.
    ResidualEmpty { d: i64, g: i64, r: i64 },
    /// Series degree exceeds 2g-2, so no effective residual exists.
    ResidualNotEffective { d: i64, g: i64 },
    /// Zero-scheme constructor rejected coincident supports.
    DuplicateSupport { point: String },
    /// Plane-model genus needs every multiplicity below the model degree.
    MultiplicityTooLarge { m: i64, degree: i64 },
    /// The collinearity criterion is stated for degree-6 schemes only.
    WrongSchemeDegree { got: i64, want: i64 },
    /// A conic-residual was requested for a singular quadratic form.
    SingularConic,
    /// A linear or quadratic form with all coefficients zero.
    ZeroForm,
    /// A projective point with all coordinates zero.
    ZeroPoint,
    /// Textual class form that does not parse.
    Parse { input: String, reason: &'static str },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LatticeMismatch { left, right } => {
                write!(f, "lattice mismatch: {left} vs {right}")
            }
            Error::WrongLattice { surface, class } => {
                write!(f, "class {class} does not live on {surface}")
            }
            Error::NonIntegralGenus { class, pairing } => write!(
                f,
                "C.(C+K) = {pairing} is odd for {class}; arithmetic genus undefined"
            ),
            Error::MissingEmbedding { surface } => {
                write!(f, "{surface} carries no embedding class; degree undefined")
            }
            Error::ScrollModelInvalid { r, e, reason } => {
                write!(f, "scroll in P^{r} has no F_{e} model: {reason}")
            }
            Error::UnsupportedPointCount { s, max } => {
                write!(f, "blown plane with s = {s} points unsupported (max {max})")
            }
            Error::Domain { what, detail } => write!(f, "{what}: {detail}"),
            Error::EmptySystem { class } => write!(f, "|{class}| is empty"),
            Error::RestrictionPrecondition { h0_m_minus_c, h1_m } => write!(
                f,
                "restriction sequence preconditions fail: h0(M-C) = {h0_m_minus_c}, h1(M) = {h1_m}"
            ),
            Error::NoThreshold { guard } => {
                write!(f, "no section threshold reached by t = {guard}")
            }
            Error::NodesExceedSystem { delta, dim } => {
                write!(f, "{delta} nodes exceed system dimension {dim}")
            }
            Error::NoAttainingClass { d, r } => {
                write!(f, "no surface class of degree {d} in P^{r} found")
            }
            Error::SecondBoundMismatch {
                d,
                r,
                computed,
                pinned,
            } => write!(
                f,
                "second bound enumeration for (d={d}, r={r}) gives {computed}, pinned value is {pinned}"
            ),
            Error::ResidualEmpty { d, g, r } => write!(
                f,
                "residual of a g^{r}_{d} on a genus-{g} curve has negative dimension"
            ),
            Error::ResidualNotEffective { d, g } => write!(
                f,
                "degree {d} exceeds 2g-2 = {} at genus {g}; residual not effective",
                2 * g - 2
            ),
            Error::DuplicateSupport { point } => {
                write!(f, "duplicate support point {point}")
            }
            Error::MultiplicityTooLarge { m, degree } => write!(
                f,
                "multiplicity {m} is not below the model degree {degree}"
            ),
            Error::WrongSchemeDegree { got, want } => {
                write!(f, "criterion needs a degree-{want} scheme, got degree {got}")
            }
            Error::SingularConic => write!(f, "quadratic form is singular; split it into lines"),
            Error::ZeroForm => write!(f, "form has all coefficients zero"),
            Error::ZeroPoint => write!(f, "projective point has all coordinates zero"),
            Error::Parse { input, reason } => write!(f, "cannot parse {input:?}: {reason}"),
        }
    }
}

impl core::error::Error for Error {}
