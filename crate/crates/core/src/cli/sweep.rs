//! Oracle sweeps. Each worker owns its own arena; results are merged in
//! input order so counts and the reported first failure do not depend on
//! the number of threads.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::domino::{self, Domino, DominoLine};
use crate::gameform::Games;
use crate::hackenbush::{self, CHTree, Color};

const CHUNK: usize = 512;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Sweep {
    pub checked: u64,
    pub failed: u64,
    pub first_failure: Option<String>,
}

impl Sweep {
    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn merge(mut self, later: Sweep) -> Sweep {
        self.checked += later.checked;
        self.failed += later.failed;
        if self.first_failure.is_none() {
            self.first_failure = later.first_failure;
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }
}

fn merge_all(parts: Vec<Sweep>) -> Sweep {
    parts.into_iter().fold(Sweep::default(), Sweep::merge)
}

/// Closed-form value of a blue-red tree against its canonical value.
pub fn check_tree(tree: &CHTree, games: &mut Games, memo: &mut HashMap<CHTree, crate::gameform::GameForm>) -> bool {
    let Ok(formula) = hackenbush::value_blue_red(tree) else { return false };
    let Ok(form) = hackenbush::to_gameform_memo(tree, games, memo) else { return false };
    games.value(form) == Some(formula)
}

/// `D = normalize(D) = f(normalize(D))` as games.
pub fn check_line(line: &DominoLine, games: &mut Games) -> bool {
    let normal = line.normalize();
    let Ok(tree) = domino::to_tree(&normal) else { return false };
    let (Ok(a), Ok(b), Ok(c)) =
        (line.to_gameform(games), normal.to_gameform(games), hackenbush::to_gameform(&tree, games))
    else {
        return false;
    };
    games.eq(a, b) && games.eq(a, c)
}

/// Every blue-red tree with at most `max_edges` edges.
pub fn trees(max_edges: usize) -> Sweep {
    let all: Vec<CHTree> =
        (0..=max_edges).flat_map(|n| hackenbush::enumerate_trees(n, &[Color::Blue, Color::Red])).collect();
    let parts = all
        .par_chunks(CHUNK)
        .map(|chunk| {
            let mut games = Games::new();
            let mut memo = HashMap::new();
            let mut s = Sweep::default();
            for t in chunk {
                s.record(check_tree(t, &mut games, &mut memo), || format!("tree {t}"));
            }
            s
        })
        .collect();
    merge_all(parts)
}

fn decode(mut code: u64, len: usize, max_spot: u32) -> DominoLine {
    let base = max_spot as u64 + 1;
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        let l = (code % base) as u32;
        code /= base;
        let r = (code % base) as u32;
        code /= base;
        out.push(Domino::new(l, r));
    }
    out.reverse();
    DominoLine::new(out)
}

fn sweep_lines<F>(count: u64, make: F) -> Sweep
where
    F: Fn(u64) -> DominoLine + Sync,
{
    let chunks: Vec<u64> = (0..count.div_ceil(CHUNK as u64)).collect();
    let parts = chunks
        .par_iter()
        .map(|&c| {
            let mut games = Games::new();
            let mut s = Sweep::default();
            for k in (c * CHUNK as u64)..((c + 1) * CHUNK as u64).min(count) {
                let line = make(k);
                s.record(check_line(&line, &mut games), || format!("line {line}"));
            }
            s
        })
        .collect();
    merge_all(parts)
}

/// Every line of length at most `max_len` with spots in `0..=max_spot`.
pub fn lines(max_len: usize, max_spot: u32) -> Sweep {
    let per_domino = (max_spot as u64 + 1).pow(2);
    let parts =
        (0..=max_len).map(|len| sweep_lines(per_domino.pow(len as u32), |k| decode(k, len, max_spot))).collect();
    merge_all(parts)
}

/// `count` seeded random lines with length in `0..=max_len` and spots in
/// `0..=max_spot`.
pub fn random_lines(count: usize, max_len: usize, max_spot: u32, seed: u64) -> Sweep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample: Vec<DominoLine> = (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=max_len);
            DominoLine::new(
                (0..len).map(|_| Domino::new(rng.gen_range(0..=max_spot), rng.gen_range(0..=max_spot))).collect(),
            )
        })
        .collect();
    sweep_lines(count as u64, |k| sample[k as usize].clone())
}
