use thiserror::Error;

use crate::domino::DominoError;
use crate::dyadic::DyadicError;
use crate::gameform::GameError;
use crate::hackenbush::HackenbushError;
use crate::ordsum::OrdsumError;

/// Syntax error in one of the textual position grammars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {pos} in {input:?}")]
pub struct ParseError {
    /// Byte offset into `input`.
    pub pos: usize,
    pub message: String,
    pub input: String,
}

impl ParseError {
    pub fn new(input: &str, pos: usize, message: impl Into<String>) -> Self {
        ParseError { pos, message: message.into(), input: input.to_string() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Dyadic(#[from] DyadicError),
    #[error(transparent)]
    Game(#[from] GameError),
    #[error(transparent)]
    Ordsum(#[from] OrdsumError),
    #[error(transparent)]
    Hackenbush(#[from] HackenbushError),
    #[error(transparent)]
    Domino(#[from] DominoError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
