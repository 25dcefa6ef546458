//! ```text
//! tree   := branch*
//! branch := color [ '(' tree ')' ]
//! color  := 'b' | 'r' | 'g'
//! ```

use super::{Branch, CHTree, Color};
use crate::error::ParseError;

struct Parser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&mut self) -> Option<u8> {
        while self.bytes.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
        self.bytes.get(self.pos).copied()
    }

    fn tree(&mut self) -> Result<CHTree, ParseError> {
        let mut children = Vec::new();
        loop {
            let color = match self.peek() {
                Some(b'b' | b'B') => Color::Blue,
                Some(b'r' | b'R') => Color::Red,
                Some(b'g' | b'G') => Color::Green,
                Some(b')') | None => return Ok(CHTree::new(children)),
                Some(_) => return Err(ParseError::new(self.text, self.pos, "expected b, r or g")),
            };
            self.pos += 1;
            let subtree = if self.peek() == Some(b'(') {
                let open = self.pos;
                self.pos += 1;
                let inner = self.tree()?;
                if self.peek() != Some(b')') {
                    return Err(ParseError::new(self.text, open, "unclosed '('"));
                }
                self.pos += 1;
                inner
            } else {
                CHTree::empty()
            };
            children.push(Branch::new(color, subtree));
        }
    }
}

pub(super) fn parse(text: &str) -> Result<CHTree, ParseError> {
    let mut p = Parser { text, bytes: text.as_bytes(), pos: 0 };
    let tree = p.tree()?;
    if p.peek().is_some() {
        return Err(ParseError::new(text, p.pos, "unmatched ')'"));
    }
    Ok(tree)
}
