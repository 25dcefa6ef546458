//! Optional on-disk memo of canonical forms, enabled by pointing
//! `CGT_CANON_CACHE` at a file. Each line is `form<TAB>canonical`, both in
//! literal syntax; entries are only ever appended. A missing, unreadable or
//! corrupt cache is ignored.

use std::fs::OpenOptions;
use std::io::Write;

use crate::gameform::{GameForm, Games};

pub const CACHE_ENV: &str = "CGT_CANON_CACHE";

fn lookup(path: &str, key: &str) -> Option<String> {
    let text = std::fs::read_to_string(path).ok()?;
    text.lines().rev().find_map(|line| {
        let (k, v) = line.split_once('\t')?;
        (k == key).then(|| v.to_string())
    })
}

pub(super) fn canonical(games: &mut Games, g: GameForm) -> GameForm {
    let Ok(path) = std::env::var(CACHE_ENV) else {
        return games.canonical(g);
    };
    let key = games.display(g);
    if let Some(k) = lookup(&path, &key).and_then(|v| games.parse(&v).ok()) {
        return k;
    }
    let k = games.canonical(g);
    let value = games.display(k);
    if let Ok(mut file) = OpenOptions::new().create(true).append(true).open(&path) {
        let _ = writeln!(file, "{key}\t{value}");
    }
    k
}
