use alloc::string::String;

/// Errors raised by the core calculus.
///
/// Variants split into input problems (spec, parse, dimension) and
/// mathematical precondition failures; `InvariantViolation` signals that a
/// result contradicted one of the theorems the code relies on and should
/// never be seen.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid lattice basis: {0}")]
    LatticeBasis(String),
    #[error("{0} is not a root")]
    NotARoot(String),
    #[error("{0} is not dominant")]
    NotDominant(String),
    #[error("{0} is not in the shifted Weyl chamber")]
    OutsideShiftedChamber(String),
    #[error("{0} is not very regular")]
    NotVeryRegular(String),
    #[error("orbit of {0} is not admissible")]
    NotAdmissible(String),
    #[error("orbit of {0} is not regular admissible")]
    NotRegularAdmissible(String),
    #[error("{0} is not in rho + lattice")]
    NotInShiftedLattice(String),
    #[error("{0} is not dominant for the Levi subgroup")]
    NotLeviDominant(String),
    #[error("{0} is not admissible for the Levi subgroup")]
    NotLeviAdmissible(String),
    #[error("coordinate basis not supported: {0}")]
    UnsupportedBasis(String),
    #[error("search limit exceeded after {visited} states")]
    SearchLimit { visited: usize },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

impl Error {
    /// True for errors caused by malformed input rather than by a
    /// mathematical precondition.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidSpec(_)
                | Error::Parse(_)
                | Error::DimensionMismatch { .. }
                | Error::LatticeBasis(_)
                | Error::UnsupportedBasis(_)
        )
    }
}
