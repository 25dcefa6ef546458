//! Exact normal-play values for clockwise hackenbush trees and domino shave
//! lines, computed through closed-form ordinal sums of numbers and checked
//! against a brute-force canonical-form engine.

pub mod cli;
pub mod domino;
pub mod dyadic;
pub mod error;
pub mod gameform;
pub mod hackenbush;
pub mod ordsum;

pub use error::{Error, ParseError, Result};
