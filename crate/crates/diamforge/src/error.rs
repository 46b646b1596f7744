use thiserror::Error;

use crate::complex::Edge;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("need n >= {min}, got {n}")]
    TooSmall { n: u64, min: u64 },
    #[error("n = {n} is above the supported maximum {max}")]
    TooLarge { n: u64, max: u64 },
    #[error("parameter k = {k} outside the supported range (k >= {min})")]
    KOutOfRange { k: u32, min: u32 },
    #[error("labels/layout mismatch: {labels} labels need {} layout bits, got {layout}", labels.saturating_sub(3))]
    LengthMismatch { labels: usize, layout: usize },
    #[error("layout bit {index} is {value}, expected 0 or 1")]
    BadBit { index: usize, value: u8 },
    #[error("label {label} at position {index} is outside [0, {n})")]
    LabelOutOfRange { index: usize, label: u32, n: u32 },
    #[error("triangle {index} repeats a vertex")]
    Degenerate { index: usize },
    #[error("empty triangle sequence")]
    Empty,
    #[error("triangles {index} and {} do not share exactly two vertices", index + 1)]
    NotAdjacent { index: usize },
    #[error("walk cannot be written as a labels/layout pair")]
    NotEncodable,
    #[error("dual graph is disconnected")]
    Disconnected,
    #[error("repeated vertex {0} in path")]
    RepeatedVertex(u32),
    #[error("invalid generating sequence: {0}")]
    InvalidSequence(String),
    #[error("no cut satisfies the constraints (destroyed {destroyed:?}, end {end:?})")]
    CutUnsatisfiable { destroyed: Option<Edge>, end: Option<Edge> },
    #[error("edge audit failed for {what} at k = {k}: expected {expected} edges, got {got} (extra {extra:?}, missing {missing:?})")]
    Audit { what: &'static str, k: u32, expected: usize, got: usize, extra: Vec<Edge>, missing: Vec<Edge> },
    #[error("{p} is not prime")]
    NotPrime { p: u64 },
    #[error("{base} is not invertible modulo {p}")]
    NotInvertible { base: u64, p: u64 },
    #[error("p = {p} unsuitable: need p = 1 mod 4 and ord_p(2) = {ord} divisible by 4")]
    UnsuitablePrime { p: u64, ord: u64 },
    #[error("could not start worker threads: {0}")]
    ThreadPool(String),
    #[error("sequence {seq:?} does not produce a Hamilton ordering: {reason}")]
    BadOrdering { seq: Vec<i64>, reason: String },
}
