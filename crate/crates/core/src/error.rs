use thiserror::Error;

/// Errors produced by group construction and spectrum queries.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed group descriptor.
    #[error("cannot parse group descriptor `{descriptor}`: {reason}")]
    Descriptor { descriptor: String, reason: String },

    /// Element closure exceeded the configured order cap.
    #[error("group order exceeds cap {cap}: closure already reached {reached} elements")]
    CapExceeded { cap: usize, reached: usize },

    /// An operation required a prime number.
    #[error("{0} is not a prime number")]
    NotPrime(u64),

    /// The given index set is not a subgroup of the group at hand.
    #[error("member set is not a subgroup of this group")]
    NotSubgroup,

    /// A kernel passed to `quotient` must be normal.
    #[error("subgroup of order {0} is not normal in the group")]
    NotNormal(usize),

    /// `is_p_subnormal` requires exact containment K <= H.
    #[error("subgroup of order {sub} is not contained in subgroup of order {of}")]
    NotContained { sub: usize, of: usize },

    /// A subgroup class was used with a group it does not belong to.
    #[error("subgroup class does not belong to this group")]
    GroupMismatch,

    /// A point was used with a spectrum space that does not contain it.
    #[error("point P(class {class}, {slot}) does not belong to this spectrum space")]
    ForeignPoint { class: usize, slot: String },

    /// Two spaces passed to a map constructor do not fit together.
    #[error("spaces do not fit the requested map: {0}")]
    SpaceMismatch(String),

    /// A point set violates the admissibility conditions.
    #[error("the point set is not admissible")]
    NotAdmissible,

    /// The `ideals` command needs a p-local slice.
    #[error("this command requires --local <p>")]
    LocalPrimeRequired,
}

pub type Result<T> = std::result::Result<T, Error>;
