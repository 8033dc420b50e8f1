//! Error type shared by every module of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while constructing or interrogating a group.
///
/// Validation errors name the first offending cell or triple so a bad input
/// table can be diagnosed without re-running the check by hand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    /// A row or column of the table repeats a symbol.
    NotLatinSquare { row: bool, index: usize, symbol: usize },
    /// No element acts as a two-sided identity.
    NoIdentity,
    /// `(i·j)·k != i·(j·k)` for the named triple.
    NotAssociative { i: usize, j: usize, k: usize },
    /// The named element has no inverse.
    NoInverse { element: usize },
    /// A table entry lies outside `[0, n)`.
    EntryOutOfRange { row: usize, col: usize, value: usize },
    /// The input table is empty or not square.
    MalformedTable,
    /// Generators of different degrees were mixed.
    DegreeMismatch { expected: usize, found: usize },
    /// Closure of a generating set grew past the configured element cap.
    ClosureBudgetExceeded { cap: usize },
    /// A group order exceeded the cap for the requested operation.
    OrderCapExceeded { order: usize, cap: usize },
    /// The supplied member set is not a subgroup.
    NotASubgroup,
    /// `ext_gcd(0, 0)` has no certificate.
    BothZero,
    /// Law text failed to parse; `offset` is a byte offset into the input.
    SyntaxError { offset: usize, message: String },
    /// Law text was empty.
    EmptyInput,
    /// A word mentions a variable the assignment does not bind.
    UnboundVariable { name: String },
    /// A universal check would need more evaluations than the budget allows.
    BudgetExceeded { required: u64, budget: u64 },
    /// The exponent pair (m, n) is not coprime and no override was given.
    NotCoprime { m: u64, n: u64 },
    /// A group-spec string failed to parse.
    BadSpec { message: String },
    /// Sylow machinery was asked about a prime not dividing the order.
    PrimeDoesNotDivideOrder { p: u64, order: usize },
    /// A theorem verifier's hypothesis does not hold for the given inputs.
    PreconditionFailed { what: String },
    /// Loading an external Cayley table failed (detail from the resolver).
    External { message: String },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GroupError::*;
        match self {
            NotLatinSquare { row, index, symbol } => write!(
                f,
                "not a Latin square: {} {} repeats symbol {}",
                if *row { "row" } else { "column" },
                index,
                symbol
            ),
            NoIdentity => write!(f, "table has no two-sided identity element"),
            NotAssociative { i, j, k } => {
                write!(f, "not associative at triple ({i}, {j}, {k})")
            }
            NoInverse { element } => write!(f, "element {element} has no inverse"),
            EntryOutOfRange { row, col, value } => {
                write!(f, "entry {value} at ({row}, {col}) is out of range")
            }
            MalformedTable => write!(f, "table is empty or not square"),
            DegreeMismatch { expected, found } => {
                write!(f, "permutation degree mismatch: expected {expected}, found {found}")
            }
            ClosureBudgetExceeded { cap } => {
                write!(f, "closure exceeded the element cap of {cap}")
            }
            OrderCapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds the cap of {cap}")
            }
            NotASubgroup => write!(f, "member set is not a subgroup"),
            BothZero => write!(f, "gcd(0, 0) is undefined"),
            SyntaxError { offset, message } => {
                write!(f, "syntax error at byte {offset}: {message}")
            }
            EmptyInput => write!(f, "empty law"),
            UnboundVariable { name } => write!(f, "unbound variable `{name}`"),
            BudgetExceeded { required, budget } => {
                write!(f, "check needs {required} evaluations, budget is {budget}")
            }
            NotCoprime { m, n } => write!(f, "exponents {m} and {n} are not coprime"),
            BadSpec { message } => write!(f, "bad group spec: {message}"),
            PrimeDoesNotDivideOrder { p, order } => {
                write!(f, "prime {p} does not divide group order {order}")
            }
            PreconditionFailed { what } => write!(f, "precondition failed: {what}"),
            External { message } => write!(f, "{message}"),
        }
    }
}

impl core::error::Error for GroupError {}
