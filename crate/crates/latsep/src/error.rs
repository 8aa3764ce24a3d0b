use thiserror::Error;

/// A failed partial-order axiom, with the offending elements.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderViolation {
    #[error("reflexivity fails at {0}")]
    Reflexivity(String),
    #[error("antisymmetry fails for {0} and {1}")]
    Antisymmetry(String, String),
    #[error("transitivity fails: {0} <= {1} <= {2} but not {0} <= {2}")]
    Transitivity(String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeViolation {
    #[error("empty carrier")]
    Empty,
    #[error("no least upper bound for {0} and {1}")]
    NoJoin(String, String),
    #[error("no greatest lower bound for {0} and {1}")]
    NoMeet(String, String),
    #[error("distributivity fails for ({0}, {1}, {2})")]
    Distributivity(String, String, String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceViolation {
    #[error("named order: {0}")]
    Order(OrderViolation),
    #[error("order is not closed: fan {fan} has {point} outside the order of its limit {limit}")]
    Closedness {
        fan: String,
        point: String,
        limit: String,
    },
    #[error("below set of fan {fan} is not down-closed: {lower} <= {upper} but {lower} missing")]
    BelowNotDownClosed {
        fan: String,
        lower: String,
        upper: String,
    },
    #[error("above set of fan {fan} is not up-closed: {lower} <= {upper} but {upper} missing")]
    AboveNotUpClosed {
        fan: String,
        lower: String,
        upper: String,
    },
    #[error("members of fan {lower_fan} lie below members of fan {upper_fan} through {point}")]
    FanMembersComparable {
        lower_fan: String,
        upper_fan: String,
        point: String,
    },
    #[error("Priestley separation fails: {0} is not below {1} but no clopen upset separates them")]
    Separation(String, String),
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("{what} has {got} items, limit is {limit}")]
    TooLarge {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    #[error("not a partial order: {0}")]
    Order(#[from] OrderViolation),
    #[error("not a bounded distributive lattice: {0}")]
    Lattice(#[from] LatticeViolation),
    #[error("invalid space: {0}")]
    Space(#[from] SpaceViolation),
    #[error("sets belong to different spaces")]
    SpaceMismatch,
    #[error("{set} is not a member of {kind}")]
    NotMember { kind: String, set: String },
    #[error("{0}")]
    Precondition(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("unknown gallery entry `{0}`")]
    UnknownEntry(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
