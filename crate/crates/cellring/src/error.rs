use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed generator word {0:?}")]
    BadWord(String),
    #[error("element {element} is not in a {side} {{r{r},r{t}}}-string")]
    NotInString { element: String, side: &'static str, r: usize, t: usize },
    #[error("unknown cell label {0:?}")]
    UnknownLabel(String),
    #[error("unknown base intersection {0:?}")]
    UnknownBase(String),
    #[error("element {0} is outside the enumerated window")]
    OutsideWindow(String),
    #[error("h({x},{y},{z}) has degree {degree} > 6 at a point of the cell")]
    DegreeBound { x: String, y: String, z: String, degree: i32 },
    #[error("product term {0} exceeds the window")]
    WindowTooSmall(String),
    #[error("no distinguished involution for {0} within length {1}")]
    NotFound(String, usize),
    #[error("entry is not a single irreducible: {0}")]
    Reducible(String),
    #[error("malformed representation label {0:?}")]
    BadIrrClass(String),
    #[error("unknown verification suite {0:?}")]
    UnknownSuite(String),
    #[error("cache error: {0}")]
    Cache(String),
}
