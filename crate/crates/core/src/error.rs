use core::fmt;

/// Every failure a library operation can report. The variant name is the
/// stable identifier printed by the CLI.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    LoopEdge(usize),
    AntiparallelPair(usize, usize),
    VertexOutOfRange(usize),
    NotTournament,
    NotGame,
    NotEulerian,
    NotConnected,
    NotStrong,
    BadLength,
    SizeMismatch,
    NotSubgraph,
    BudgetExceeded,
    ScoreMismatch,
    NotACycle,
    BadMove(usize),
    BadAction,
    EvenOrder,
    NotGroup,
    NotGameSubset,
    TooLarge,
    ExtraAutomorphisms,
    EvenOrderSubgroup,
    BadPrime,
    NotSubgroup,
    NotPairSubset,
    EvenOrderAction,
    NotAutomorphism,
    NotPermutation,
    FiberCountMismatch,
    BadK,
    NotReducible,
    EvenSize,
    NotSteiner,
    TooSmall,
    NotApplicable,
    SepExhausted,
    BadSize,
    WrongGroup,
    NotSurjective,
    NotBipartite,
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    /// The bare variant name, e.g. `NotEulerian`.
    pub fn name(&self) -> &'static str {
        use Error::*;
        match self {
            LoopEdge(_) => "LoopEdge",
            AntiparallelPair(..) => "AntiparallelPair",
            VertexOutOfRange(_) => "VertexOutOfRange",
            NotTournament => "NotTournament",
            NotGame => "NotGame",
            NotEulerian => "NotEulerian",
            NotConnected => "NotConnected",
            NotStrong => "NotStrong",
            BadLength => "BadLength",
            SizeMismatch => "SizeMismatch",
            NotSubgraph => "NotSubgraph",
            BudgetExceeded => "BudgetExceeded",
            ScoreMismatch => "ScoreMismatch",
            NotACycle => "NotACycle",
            BadMove(_) => "BadMove",
            BadAction => "BadAction",
            EvenOrder => "EvenOrder",
            NotGroup => "NotGroup",
            NotGameSubset => "NotGameSubset",
            TooLarge => "TooLarge",
            ExtraAutomorphisms => "ExtraAutomorphisms",
            EvenOrderSubgroup => "EvenOrderSubgroup",
            BadPrime => "BadPrime",
            NotSubgroup => "NotSubgroup",
            NotPairSubset => "NotPairSubset",
            EvenOrderAction => "EvenOrderAction",
            NotAutomorphism => "NotAutomorphism",
            NotPermutation => "NotPermutation",
            FiberCountMismatch => "FiberCountMismatch",
            BadK => "BadK",
            NotReducible => "NotReducible",
            EvenSize => "EvenSize",
            NotSteiner => "NotSteiner",
            TooSmall => "TooSmall",
            NotApplicable => "NotApplicable",
            SepExhausted => "SepExhausted",
            BadSize => "BadSize",
            WrongGroup => "WrongGroup",
            NotSurjective => "NotSurjective",
            NotBipartite => "NotBipartite",
        }
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LoopEdge(v) => write!(f, "LoopEdge: loop at vertex {v}"),
            Error::AntiparallelPair(a, b) => {
                write!(f, "AntiparallelPair: both {a}->{b} and {b}->{a}")
            }
            Error::VertexOutOfRange(v) => write!(f, "VertexOutOfRange: {v}"),
            Error::BadMove(k) => write!(f, "BadMove: step {k} is not a cycle of the current graph"),
            e => f.write_str(e.name()),
        }
    }
}

impl core::error::Error for Error {}
