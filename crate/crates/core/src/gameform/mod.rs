//! Short partizan game forms under normal play.
//!
//! Forms live in a [`Games`] arena and are hash-consed: two structurally
//! identical forms always get the same [`GameForm`] handle, so handle
//! equality is literal-form equality (not value equality; use
//! [`Games::eq`] for that). Comparison, sums, ordinal sums and
//! canonicalization are memoized inside the arena.
//!
//! An arena is single-owner. Parallel callers give each worker its own
//! arena; results do not depend on how work was split.

mod literal;

use std::collections::HashMap;

use thiserror::Error;

use crate::dyadic::{simplest_between, Dyadic};
use crate::error::ParseError;

/// Forms deeper than this are rejected at construction, which bounds the
/// recursion depth of every memoized operation.
pub const MAX_DEPTH: u32 = 400;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("game form deeper than {limit} levels")]
    DepthExceeded { limit: u32 },
    #[error("{0} is not equal to a number")]
    NotANumber(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// Handle to a hash-consed form inside a [`Games`] arena.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GameForm(u32);

impl GameForm {
    fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    /// `G || 0`
    FirstPlayerWins,
    /// `G = 0`
    SecondPlayerWins,
    /// `G > 0`
    LeftWins,
    /// `G < 0`
    RightWins,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Node {
    left: Box<[GameForm]>,
    right: Box<[GameForm]>,
}

#[derive(Default)]
pub struct Games {
    nodes: Vec<Node>,
    depth: Vec<u32>,
    index: HashMap<Node, GameForm>,
    leq_memo: HashMap<(GameForm, GameForm), bool>,
    canonical_memo: HashMap<GameForm, GameForm>,
    neg_memo: HashMap<GameForm, GameForm>,
    add_memo: HashMap<(GameForm, GameForm), GameForm>,
    ordinal_memo: HashMap<(GameForm, GameForm), GameForm>,
    number_memo: HashMap<GameForm, Option<Dyadic>>,
    nimber_memo: HashMap<GameForm, Option<u64>>,
    number_forms: HashMap<Dyadic, GameForm>,
}

fn sorted_set(options: impl IntoIterator<Item = GameForm>) -> Box<[GameForm]> {
    let mut v: Vec<GameForm> = options.into_iter().collect();
    v.sort_unstable();
    v.dedup();
    v.into_boxed_slice()
}

impl Games {
    pub fn new() -> Self {
        let mut games = Games::default();
        games.intern(Box::new([]), Box::new([])).expect("zero has depth 0");
        games
    }

    /// Number of distinct forms interned so far.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    fn intern(&mut self, left: Box<[GameForm]>, right: Box<[GameForm]>) -> Result<GameForm, GameError> {
        let node = Node { left, right };
        if let Some(&g) = self.index.get(&node) {
            return Ok(g);
        }
        let depth = node.left.iter().chain(node.right.iter()).map(|g| self.depth[g.index()] + 1).max().unwrap_or(0);
        if depth > MAX_DEPTH {
            return Err(GameError::DepthExceeded { limit: MAX_DEPTH });
        }
        let g = GameForm(self.nodes.len() as u32);
        self.nodes.push(node.clone());
        self.depth.push(depth);
        self.index.insert(node, g);
        Ok(g)
    }

    pub fn zero(&self) -> GameForm {
        GameForm(0)
    }

    /// The form `{left | right}`; duplicate options collapse.
    pub fn form(
        &mut self,
        left: impl IntoIterator<Item = GameForm>,
        right: impl IntoIterator<Item = GameForm>,
    ) -> Result<GameForm, GameError> {
        self.intern(sorted_set(left), sorted_set(right))
    }

    pub fn left(&self, g: GameForm) -> &[GameForm] {
        &self.nodes[g.index()].left
    }

    pub fn right(&self, g: GameForm) -> &[GameForm] {
        &self.nodes[g.index()].right
    }

    /// Height of the form tree; the formal birthday.
    pub fn depth(&self, g: GameForm) -> u32 {
        self.depth[g.index()]
    }

    /// Canonical form of the number `x`.
    pub fn number(&mut self, x: &Dyadic) -> Result<GameForm, GameError> {
        if let Some(&g) = self.number_forms.get(x) {
            return Ok(g);
        }
        let g = if x.is_zero() {
            self.zero()
        } else if x.is_integer() {
            let step = Dyadic::one();
            if x.is_positive() {
                let prev = self.number(&(x - &step))?;
                self.form([prev], [])?
            } else {
                let next = self.number(&(x + &step))?;
                self.form([], [next])?
            }
        } else {
            let ulp = Dyadic::new(1, x.exponent());
            let lo = self.number(&(x - &ulp))?;
            let hi = self.number(&(x + &ulp))?;
            self.form([lo], [hi])?
        };
        self.number_forms.insert(x.clone(), g);
        Ok(g)
    }

    pub fn integer(&mut self, n: i64) -> Result<GameForm, GameError> {
        self.number(&Dyadic::integer(n))
    }

    /// The nim-heap `*n = {0, *1, …, *(n-1) | 0, *1, …, *(n-1)}`.
    pub fn nimber(&mut self, n: u64) -> Result<GameForm, GameError> {
        let mut heaps = vec![self.zero()];
        for _ in 0..n {
            let next = self.form(heaps.clone(), heaps.clone())?;
            heaps.push(next);
        }
        Ok(heaps[n as usize])
    }

    /// `g <= h`: Left, moving second in `h - g`, wins.
    pub fn leq(&mut self, g: GameForm, h: GameForm) -> bool {
        if g == h {
            return true;
        }
        if let Some(&known) = self.leq_memo.get(&(g, h)) {
            return known;
        }
        let mut result = true;
        for i in 0..self.left(g).len() {
            let gl = self.left(g)[i];
            if self.leq(h, gl) {
                result = false;
                break;
            }
        }
        if result {
            for i in 0..self.right(h).len() {
                let hr = self.right(h)[i];
                if self.leq(hr, g) {
                    result = false;
                    break;
                }
            }
        }
        self.leq_memo.insert((g, h), result);
        result
    }

    pub fn geq(&mut self, g: GameForm, h: GameForm) -> bool {
        self.leq(h, g)
    }

    pub fn eq(&mut self, g: GameForm, h: GameForm) -> bool {
        self.leq(g, h) && self.leq(h, g)
    }

    pub fn lt(&mut self, g: GameForm, h: GameForm) -> bool {
        self.leq(g, h) && !self.leq(h, g)
    }

    pub fn gt(&mut self, g: GameForm, h: GameForm) -> bool {
        self.lt(h, g)
    }

    pub fn outcome(&mut self, g: GameForm) -> Outcome {
        let zero = self.zero();
        match (self.leq(zero, g), self.leq(g, zero)) {
            (true, true) => Outcome::SecondPlayerWins,
            (true, false) => Outcome::LeftWins,
            (false, true) => Outcome::RightWins,
            (false, false) => Outcome::FirstPlayerWins,
        }
    }

    pub fn neg(&mut self, g: GameForm) -> GameForm {
        if let Some(&n) = self.neg_memo.get(&g) {
            return n;
        }
        let left: Vec<GameForm> = self.right(g).to_vec().into_iter().map(|x| self.neg(x)).collect();
        let right: Vec<GameForm> = self.left(g).to_vec().into_iter().map(|x| self.neg(x)).collect();
        let n = self.form(left, right).expect("negation preserves depth");
        self.neg_memo.insert(g, n);
        self.neg_memo.insert(n, g);
        n
    }

    /// Disjunctive sum `g + h`.
    pub fn add(&mut self, g: GameForm, h: GameForm) -> Result<GameForm, GameError> {
        let key = if g <= h { (g, h) } else { (h, g) };
        if let Some(&s) = self.add_memo.get(&key) {
            return Ok(s);
        }
        let mut left = Vec::new();
        let mut right = Vec::new();
        for gl in self.left(g).to_vec() {
            left.push(self.add(gl, h)?);
        }
        for hl in self.left(h).to_vec() {
            left.push(self.add(g, hl)?);
        }
        for gr in self.right(g).to_vec() {
            right.push(self.add(gr, h)?);
        }
        for hr in self.right(h).to_vec() {
            right.push(self.add(g, hr)?);
        }
        let s = self.form(left, right)?;
        self.add_memo.insert(key, s);
        Ok(s)
    }

    pub fn sub(&mut self, g: GameForm, h: GameForm) -> Result<GameForm, GameError> {
        let nh = self.neg(h);
        self.add(g, nh)
    }

    /// The literal ordinal sum `base : sub`: a move in the base wipes out
    /// the subordinate.
    pub fn ordinal_sum(&mut self, base: GameForm, sub: GameForm) -> Result<GameForm, GameError> {
        if let Some(&s) = self.ordinal_memo.get(&(base, sub)) {
            return Ok(s);
        }
        let mut left = self.left(base).to_vec();
        let mut right = self.right(base).to_vec();
        for hl in self.left(sub).to_vec() {
            left.push(self.ordinal_sum(base, hl)?);
        }
        for hr in self.right(sub).to_vec() {
            right.push(self.ordinal_sum(base, hr)?);
        }
        let s = self.form(left, right)?;
        self.ordinal_memo.insert((base, sub), s);
        Ok(s)
    }

    fn find_reversal(&mut self, g: GameForm, option: GameForm, left_option: bool) -> Option<GameForm> {
        if left_option {
            let candidates = self.right(option).to_vec();
            candidates.into_iter().find(|&r| self.leq(r, g))
        } else {
            let candidates = self.left(option).to_vec();
            candidates.into_iter().find(|&l| self.leq(g, l))
        }
    }

    /// Some Left option has a Right reply `<= g`, or some Right option has
    /// a Left reply `>= g`.
    pub fn has_reversible_option(&mut self, g: GameForm) -> bool {
        let left = self.left(g).to_vec();
        let right = self.right(g).to_vec();
        left.into_iter().any(|gl| self.find_reversal(g, gl, true).is_some())
            || right.into_iter().any(|gr| self.find_reversal(g, gr, false).is_some())
    }

    /// The unique simplest form equal to `g`: options canonicalized,
    /// reversible options bypassed and dominated options dropped.
    pub fn canonical(&mut self, g: GameForm) -> GameForm {
        if let Some(&k) = self.canonical_memo.get(&g) {
            return k;
        }
        let mut left: Vec<GameForm> = self.left(g).to_vec().into_iter().map(|x| self.canonical(x)).collect();
        let mut right: Vec<GameForm> = self.right(g).to_vec().into_iter().map(|x| self.canonical(x)).collect();

        // Every rewrite keeps the value of `g`, so reversibility is always
        // tested against the original form.
        loop {
            let mut changed = false;
            let mut next_left = Vec::with_capacity(left.len());
            for gl in left {
                match self.find_reversal(g, gl, true) {
                    Some(glr) => {
                        next_left.extend_from_slice(self.left(glr));
                        changed = true;
                    }
                    None => next_left.push(gl),
                }
            }
            let mut next_right = Vec::with_capacity(right.len());
            for gr in right {
                match self.find_reversal(g, gr, false) {
                    Some(grl) => {
                        next_right.extend_from_slice(self.right(grl));
                        changed = true;
                    }
                    None => next_right.push(gr),
                }
            }
            left = sorted_set(next_left).into_vec();
            right = sorted_set(next_right).into_vec();
            if !changed {
                break;
            }
        }

        let left = self.undominated(&left, true);
        let right = self.undominated(&right, false);
        let k = self.form(left, right).expect("canonical form is no deeper than the original");
        self.canonical_memo.insert(g, k);
        self.canonical_memo.insert(k, k);
        k
    }

    fn undominated(&mut self, options: &[GameForm], for_left: bool) -> Vec<GameForm> {
        let mut kept = Vec::with_capacity(options.len());
        for (i, &a) in options.iter().enumerate() {
            let dominated = options
                .iter()
                .enumerate()
                .any(|(j, &b)| j != i && if for_left { self.leq(a, b) } else { self.leq(b, a) });
            if !dominated {
                kept.push(a);
            }
        }
        kept
    }

    /// Number value of a canonical form, if it is one.
    fn canonical_number(&mut self, k: GameForm) -> Option<Dyadic> {
        if let Some(v) = self.number_memo.get(&k) {
            return v.clone();
        }
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        let mut all_numbers = true;
        for x in self.left(k).to_vec() {
            match self.canonical_number(x) {
                Some(v) => lefts.push(v),
                None => all_numbers = false,
            }
        }
        for x in self.right(k).to_vec() {
            match self.canonical_number(x) {
                Some(v) => rights.push(v),
                None => all_numbers = false,
            }
        }
        let value = if all_numbers {
            let lo = lefts.into_iter().max();
            let hi = rights.into_iter().min();
            simplest_between(lo.as_ref(), hi.as_ref()).ok()
        } else {
            None
        };
        self.number_memo.insert(k, value.clone());
        value
    }

    pub fn is_number(&mut self, g: GameForm) -> bool {
        self.value(g).is_some()
    }

    /// The number `g` equals, or `None` when `g` is not a number.
    pub fn value(&mut self, g: GameForm) -> Option<Dyadic> {
        let k = self.canonical(g);
        self.canonical_number(k)
    }

    pub fn number_value(&mut self, g: GameForm) -> Result<Dyadic, GameError> {
        self.value(g).ok_or_else(|| GameError::NotANumber(self.display(g)))
    }

    /// `Some(n)` when `g` equals the nim-heap `*n`.
    pub fn nimber_value(&mut self, g: GameForm) -> Option<u64> {
        let k = self.canonical(g);
        self.canonical_nimber(k)
    }

    fn canonical_nimber(&mut self, k: GameForm) -> Option<u64> {
        if let Some(v) = self.nimber_memo.get(&k) {
            return *v;
        }
        let value = if self.left(k) != self.right(k) {
            None
        } else {
            let mut heaps = Vec::new();
            let mut ok = true;
            for x in self.left(k).to_vec() {
                match self.canonical_nimber(x) {
                    Some(n) => heaps.push(n),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            heaps.sort_unstable();
            if ok && heaps.iter().enumerate().all(|(i, &n)| n == i as u64) {
                Some(heaps.len() as u64)
            } else {
                None
            }
        };
        self.nimber_memo.insert(k, value);
        value
    }

    pub fn parse(&mut self, text: &str) -> Result<GameForm, GameError> {
        literal::parse(self, text)
    }

    /// Literal text of `g`. Options that are canonical numbers or nimbers
    /// print as `3/4` or `*2`; everything else prints as `{a,b|c}`.
    /// Parsing the output gives back the same form.
    pub fn display(&mut self, g: GameForm) -> String {
        literal::display(self, g)
    }

    /// Like [`Games::display`] but always shows the outermost braces, so
    /// `1/2` prints as `{0|1}`.
    pub fn display_braces(&mut self, g: GameForm) -> String {
        literal::braces(self, g)
    }
}
