//! Text form of game literals.
//!
//! ```text
//! game   := '{' list '|' list '}' | number | '*' [digits]
//! list   := [ game { ',' game } ]
//! number := ['-'] digits [ '/' digits ]
//! ```

use super::{GameError, GameForm, Games};
use crate::dyadic::Dyadic;
use crate::error::ParseError;

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> GameError {
        GameError::Parse(ParseError::new(self.text, self.pos, message))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), GameError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected '{}'", c as char)))
        }
    }

    fn digits(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        &self.text[start..self.pos]
    }

    fn game(&mut self, games: &mut Games) -> Result<GameForm, GameError> {
        match self.peek() {
            Some(b'{') => {
                self.pos += 1;
                let left = self.list(games, b'|')?;
                self.expect(b'|')?;
                let right = self.list(games, b'}')?;
                self.expect(b'}')?;
                games.form(left, right)
            }
            Some(b'*') => {
                self.pos += 1;
                let n = self.digits();
                let n = if n.is_empty() { 1 } else { n.parse().map_err(|_| self.err("nimber too large"))? };
                games.nimber(n)
            }
            Some(c) if c == b'-' || c.is_ascii_digit() => {
                let start = self.pos;
                if c == b'-' {
                    self.pos += 1;
                }
                if self.digits().is_empty() {
                    return Err(self.err("expected digits"));
                }
                if self.bytes.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    if self.digits().is_empty() {
                        return Err(self.err("expected denominator"));
                    }
                }
                let x: Dyadic = self.text[start..self.pos]
                    .parse()
                    .map_err(|e| GameError::Parse(ParseError::new(self.text, start, format!("{e}"))))?;
                games.number(&x)
            }
            Some(_) => Err(self.err("expected a game")),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn list(&mut self, games: &mut Games, end: u8) -> Result<Vec<GameForm>, GameError> {
        let mut out = Vec::new();
        if self.peek() == Some(end) {
            return Ok(out);
        }
        loop {
            out.push(self.game(games)?);
            if self.peek() == Some(b',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }
}

pub(super) fn parse(games: &mut Games, text: &str) -> Result<GameForm, GameError> {
    let mut p = Parser { text, bytes: text.as_bytes(), pos: 0 };
    let g = p.game(games)?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(g)
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
enum SortKey {
    Number(Dyadic),
    Nimber(u64),
    Other(String),
}

fn atom(games: &mut Games, g: GameForm) -> (SortKey, String) {
    if games.canonical(g) == g {
        if let Some(x) = games.canonical_number(g) {
            let text = x.to_string();
            return (SortKey::Number(x), text);
        }
        if let Some(n) = games.canonical_nimber(g) {
            return (SortKey::Nimber(n), format!("*{n}"));
        }
    }
    let text = braces(games, g);
    (SortKey::Other(text.clone()), text)
}

fn side(games: &mut Games, options: Vec<GameForm>) -> String {
    let mut items: Vec<(SortKey, String)> = options.into_iter().map(|x| atom(games, x)).collect();
    items.sort_by(|a, b| a.0.cmp(&b.0));
    items.into_iter().map(|(_, s)| s).collect::<Vec<_>>().join(",")
}

pub(super) fn braces(games: &mut Games, g: GameForm) -> String {
    let left = side(games, games.left(g).to_vec());
    let right = side(games, games.right(g).to_vec());
    format!("{{{left}|{right}}}")
}

pub(super) fn display(games: &mut Games, g: GameForm) -> String {
    atom(games, g).1
}
