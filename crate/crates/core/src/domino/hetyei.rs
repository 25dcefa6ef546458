//! Hetyei's impartial variant: `d_i` has both spots in `1..=i` and either
//! player may remove it when `r_i` is at most every spot from `d_i` on.

use super::{Domino, DominoError, DominoLine};
use crate::gameform::{GameError, GameForm, Games};
use crate::hackenbush::Color;

fn check(line: &DominoLine) -> Result<(), DominoError> {
    for (k, d) in line.dominoes.iter().enumerate() {
        let index = k + 1;
        let ok = |s: u32| s >= 1 && s as usize <= index;
        if !ok(d.l) || !ok(d.r) {
            return Err(DominoError::NotHetyei { index, domino: *d });
        }
    }
    Ok(())
}

fn stops(later: Domino, earlier: Domino) -> bool {
    later.l < earlier.r || later.r < earlier.r
}

pub fn hetyei_moves(line: &DominoLine) -> Vec<usize> {
    let ds = &line.dominoes;
    (0..ds.len()).filter(|&i| ds[i..].iter().all(|&later| !stops(later, ds[i]))).collect()
}

pub fn hetyei_to_gameform(line: &DominoLine, games: &mut Games) -> Result<GameForm, GameError> {
    let mut forms: Vec<GameForm> = Vec::with_capacity(line.len() + 1);
    for t in 0..=line.len() {
        let options: Vec<_> = hetyei_moves(&line.prefix(t)).into_iter().map(|i| forms[i]).collect();
        forms.push(games.form(options.clone(), options)?);
    }
    Ok(forms[line.len()])
}

/// Dominoes that are never the first of the line to be removed, scanning
/// from the right: a blue domino, or one stopped by a domino in the block
/// of unplayable dominoes directly after it.
pub fn hetyei_unplayable(line: &DominoLine) -> Vec<bool> {
    let ds = &line.dominoes;
    let mut dead = vec![false; ds.len()];
    for i in (0..ds.len()).rev() {
        let block_end = (i + 1..ds.len()).find(|&j| !dead[j]).unwrap_or(ds.len());
        dead[i] = ds[i].color() == Color::Blue || ds[i + 1..block_end].iter().any(|&later| stops(later, ds[i]));
    }
    dead
}

/// Drops unplayable dominoes and replaces each survivor `(l, r)` by
/// `(r, r)`, giving a line of green dominoes with the same game.
pub fn hetyei_reduce(line: &DominoLine) -> Result<DominoLine, DominoError> {
    check(line)?;
    let dead = hetyei_unplayable(line);
    Ok(DominoLine::new(
        line.dominoes.iter().zip(dead).filter(|&(_, d)| !d).map(|(d, _)| Domino::new(d.r, d.r)).collect(),
    ))
}
