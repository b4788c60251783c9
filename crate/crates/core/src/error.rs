use thiserror::Error;

/// Everything that can go wrong when building or checking algebraic data.
///
/// Witnesses are element indices in the relevant carrier; where several
/// witnesses exist the lexicographically least one is reported.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monoid must have at least one element")]
    EmptyCarrier,
    #[error("table has {rows} rows but size is {size}")]
    TableShape { size: usize, rows: usize },
    #[error("table entry ({0}, {1}) is out of range")]
    OutOfRangeEntry(usize, usize),
    #[error("identity {0} is out of range")]
    IdentityOutOfRange(usize),
    #[error("identity law fails at element {0}")]
    IdentityLawViolation(usize),
    #[error("associativity fails at ({0}, {1}, {2})")]
    AssociativityViolation(usize, usize, usize),
    #[error("element {element} is out of range for a carrier of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("set does not contain the identity")]
    MissingIdentity,
    #[error("set is not closed: {0} + {1} = {2} is missing")]
    NotClosed(usize, usize, usize),
    #[error("map is not a homomorphism at ({0}, {1})")]
    NotAHom(usize, usize),
    #[error("map does not send identity to identity")]
    IdentityNotPreserved,
    #[error("map has length {got}, expected {expected}")]
    MapLength { expected: usize, got: usize },
    #[error("homomorphisms cannot be composed or compared: {0}")]
    TypeMismatch(String),
    #[error("partition is not a congruence: {0} ~ {1} but translates by {2} differ")]
    IllFormedCongruence(usize, usize, usize),
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not transitive at ({0}, {1}, {2})")]
    NotTransitive(usize, usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("preorder is not compatible: {a} <= {b}, {c} <= {d} but not {a}+{c} <= {b}+{d}")]
    Incompatible { a: usize, b: usize, c: usize, d: usize },
    #[error("map is not surjective: {0} has no preimage")]
    NotSurjective(usize),
    #[error("map is not monotone: {0} <= {1} but images are unrelated")]
    NotMonotone(usize, usize),
    #[error("positive cone is not right normal at a = {a}: {element} is in a+P but not in P+a")]
    ConeNotRightNormal { a: usize, element: usize },
    #[error("preordered monoid is not in OrdMon*: {0} <= {1} but not {0} <=_P {1}")]
    NotConeDetermined(usize, usize),
    #[error("{what} exceeds the size guard ({bound})")]
    SizeGuardExceeded { what: String, bound: usize },
    #[error("not a split epimorphism: p(s({0})) != {0}")]
    NotSplit(usize),
    #[error("kernel map is not injective: k({0}) = k({1})")]
    KernelNotInjective(usize, usize),
    #[error("image of k differs from the kernel of p at {0}")]
    KernelMismatch(usize),
    #[error("not a Schreier split epimorphism: {witness} has {count} decompositions")]
    NotSchreier { witness: usize, count: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("invalid coned extension: {0}")]
    InvalidExtension(String),
    #[error("word letter {0} is out of range")]
    LetterOutOfRange(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
