//! Domino shave: a line of dominoes `(l, r)` where removing `d_i` also
//! removes everything to its right.
//!
//! Left may remove a blue or green `d_i` when no later domino has a spot
//! below `l_i`; Right likewise for red or green with `r_i`. Indices in this
//! API are 0-based; text output numbers dominoes from 1.

mod bijection;
mod hetyei;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gameform::{GameError, GameForm, Games};
use crate::hackenbush::Color;

pub use bijection::{from_tree, to_tree};
pub use hetyei::{hetyei_moves, hetyei_reduce, hetyei_to_gameform, hetyei_unplayable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominoError {
    #[error("token {token} ({text:?}): {message}")]
    Parse { token: usize, text: String, message: String },
    #[error("line is not normalized; expected {expected}")]
    NotNormalized { expected: DominoLine },
    #[error("domino {index} ({domino}) needs both spots in 1..={index}")]
    NotHetyei { index: usize, domino: Domino },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Domino {
    pub l: u32,
    pub r: u32,
}

impl Domino {
    pub fn new(l: u32, r: u32) -> Self {
        Domino { l, r }
    }

    pub fn color(self) -> Color {
        match self.l.cmp(&self.r) {
            std::cmp::Ordering::Less => Color::Blue,
            std::cmp::Ordering::Greater => Color::Red,
            std::cmp::Ordering::Equal => Color::Green,
        }
    }

    /// The spot that decides whether the owner may remove this domino.
    pub fn low(self) -> u32 {
        self.l.min(self.r)
    }

    /// Whether this domino, lying to the right of `earlier`, stops its
    /// owner from removing `earlier`.
    pub fn prevents(self, earlier: Domino) -> bool {
        self.low() < earlier.low()
    }

    /// Spots `(p, p + 1)`, `(p + 1, p)` or `(p, p)` by color.
    pub fn with_base(color: Color, p: u32) -> Self {
        match color {
            Color::Blue => Domino::new(p, p + 1),
            Color::Red => Domino::new(p + 1, p),
            Color::Green => Domino::new(p, p),
        }
    }
}

impl fmt::Display for Domino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.l, self.r)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DominoLine {
    pub dominoes: Vec<Domino>,
}

/// Stages `E_1, E_2, …` of the normalization, each listing 0-based
/// indices in increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EPartition {
    pub stages: Vec<Vec<usize>>,
}

impl EPartition {
    /// Stage number (0-based) of every index.
    pub fn stage_of(&self, len: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; len];
        for (s, stage) in self.stages.iter().enumerate() {
            for &i in stage {
                out[i] = s;
            }
        }
        out
    }
}

impl fmt::Display for EPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (s, stage) in self.stages.iter().enumerate() {
            if s > 0 {
                f.write_str(" ")?;
            }
            let items: Vec<String> = stage.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        Ok(())
    }
}

impl DominoLine {
    pub fn new(dominoes: Vec<Domino>) -> Self {
        DominoLine { dominoes }
    }

    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        DominoLine::new(pairs.iter().map(|&(l, r)| Domino::new(l, r)).collect())
    }

    pub fn len(&self) -> usize {
        self.dominoes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dominoes.is_empty()
    }

    pub fn prefix(&self, len: usize) -> DominoLine {
        DominoLine::new(self.dominoes[..len].to_vec())
    }

    /// Whether no domino after `i` prevents it.
    pub fn unblocked(&self, i: usize) -> bool {
        let d = self.dominoes[i];
        self.dominoes[i + 1..].iter().all(|later| !later.prevents(d))
    }

    pub fn left_moves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.dominoes[i].color().left_may_play() && self.unblocked(i)).collect()
    }

    pub fn right_moves(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.dominoes[i].color().right_may_play() && self.unblocked(i)).collect()
    }

    /// Literal game form; every position reached is a prefix, so one form
    /// is built per prefix length.
    pub fn to_gameform(&self, games: &mut Games) -> Result<GameForm, GameError> {
        let mut forms: Vec<GameForm> = Vec::with_capacity(self.len() + 1);
        for t in 0..=self.len() {
            let prefix = self.prefix(t);
            let left: Vec<_> = prefix.left_moves().into_iter().map(|i| forms[i]).collect();
            let right: Vec<_> = prefix.right_moves().into_iter().map(|i| forms[i]).collect();
            forms.push(games.form(left, right)?);
        }
        Ok(forms[self.len()])
    }

    pub fn e_partition(&self) -> EPartition {
        let mut classified = vec![false; self.len()];
        let mut stages = Vec::new();
        while let Some(end) = classified.iter().rposition(|c| !c) {
            let start = classified[..end].iter().rposition(|&c| c).map_or(0, |k| k + 1);
            let run = &self.dominoes[start..=end];
            let stage: Vec<usize> = (0..run.len())
                .filter(|&i| run[i + 1..].iter().all(|later| !later.prevents(run[i])))
                .map(|i| start + i)
                .collect();
            for &i in &stage {
                classified[i] = true;
            }
            stages.push(stage);
        }
        EPartition { stages }
    }

    /// Relabel spots stage by stage: stage `s` (from 1) uses base
    /// `p = 2s - 1` for all of its dominoes.
    pub fn normalize(&self) -> DominoLine {
        let mut out = self.dominoes.clone();
        for (s, stage) in self.e_partition().stages.iter().enumerate() {
            let p = 2 * s as u32 + 1;
            for &i in stage {
                out[i] = Domino::with_base(self.dominoes[i].color(), p);
            }
        }
        DominoLine::new(out)
    }

    pub fn is_normalized(&self) -> bool {
        self.normalize() == *self
    }

    pub fn colors(&self) -> Vec<Color> {
        self.dominoes.iter().map(|d| d.color()).collect()
    }
}

impl fmt::Display for DominoLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.dominoes.iter().map(Domino::to_string).collect();
        f.write_str(&items.join(" "))
    }
}

impl FromStr for DominoLine {
    type Err = DominoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut dominoes = Vec::new();
        for (k, token) in s.split_whitespace().enumerate() {
            let bad =
                |message: &str| DominoError::Parse { token: k + 1, text: token.to_string(), message: message.into() };
            let (l, r) = token.split_once(',').ok_or_else(|| bad("expected l,r"))?;
            let l = l.parse().map_err(|_| bad("left spot is not a non-negative integer"))?;
            let r = r.parse().map_err(|_| bad("right spot is not a non-negative integer"))?;
            dominoes.push(Domino::new(l, r));
        }
        Ok(DominoLine::new(dominoes))
    }
}

/// Every line of length `len` with spots in `0..=max_spot`.
pub fn enumerate_lines(len: usize, max_spot: u32) -> Vec<DominoLine> {
    let mut lines = vec![Vec::new()];
    for _ in 0..len {
        lines = lines
            .into_iter()
            .flat_map(|line: Vec<Domino>| {
                (0..=max_spot).flat_map(move |l| {
                    let line = line.clone();
                    (0..=max_spot).map(move |r| {
                        let mut next = line.clone();
                        next.push(Domino::new(l, r));
                        next
                    })
                })
            })
            .collect();
    }
    lines.into_iter().map(DominoLine::new).collect()
}

#[cfg(test)]
mod tests;
