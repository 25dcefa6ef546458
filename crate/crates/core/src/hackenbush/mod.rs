//! Clockwise hackenbush: trees rooted in the ground where only edges on
//! the trunk, the rightmost path, may be deleted.

mod text;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::dyadic::{BlueRed, ColorString, Dyadic};
use crate::error::ParseError;
use crate::gameform::{GameError, GameForm, Games};
use crate::ordsum::{eval_chain, BaseSide, ChainLink};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HackenbushError {
    #[error("the tree has no edges")]
    EmptyTree,
    #[error("green edges have no closed-form value")]
    GreenEdge,
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Color {
    Blue,
    Red,
    Green,
}

impl Color {
    pub fn letter(self) -> char {
        match self {
            Color::Blue => 'b',
            Color::Red => 'r',
            Color::Green => 'g',
        }
    }

    pub fn left_may_play(self) -> bool {
        self != Color::Red
    }

    pub fn right_may_play(self) -> bool {
        self != Color::Blue
    }
}

impl From<BlueRed> for Color {
    fn from(c: BlueRed) -> Self {
        match c {
            BlueRed::Blue => Color::Blue,
            BlueRed::Red => Color::Red,
        }
    }
}

/// An edge leaving a vertex together with everything above it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Branch {
    pub color: Color,
    pub subtree: CHTree,
}

/// Ordered forest hanging from one vertex. The last child continues the
/// trunk, so two drawings of the same graph are different positions.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CHTree {
    pub children: Vec<Branch>,
}

/// `(color of t_i, S_i)` bottom to top, where `S_i` is everything hanging
/// from the bottom vertex of `t_i` except `t_i` itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrunkDecomp {
    pub links: Vec<(Color, CHTree)>,
}

impl Branch {
    pub fn new(color: Color, subtree: CHTree) -> Self {
        Branch { color, subtree }
    }
}

impl CHTree {
    pub fn empty() -> Self {
        CHTree::default()
    }

    pub fn new(children: Vec<Branch>) -> Self {
        CHTree { children }
    }

    /// A single path with the given colors, bottom edge first.
    pub fn path<I: IntoIterator<Item = Color>>(colors: I) -> Self {
        let colors: Vec<Color> = colors.into_iter().collect();
        colors.into_iter().rev().fold(CHTree::empty(), |above, c| CHTree::new(vec![Branch::new(c, above)]))
    }

    pub fn from_string(s: &ColorString) -> Self {
        CHTree::path(s.0.iter().map(|&c| Color::from(c)))
    }

    pub fn is_empty(&self) -> bool {
        self.children.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|b| 1 + b.subtree.edge_count()).sum()
    }

    pub fn has_green(&self) -> bool {
        self.children.iter().any(|b| b.color == Color::Green || b.subtree.has_green())
    }

    /// Colors of the trunk edges, bottom to top.
    pub fn trunk(&self) -> Vec<Color> {
        let mut out = Vec::new();
        let mut node = self;
        while let Some(last) = node.children.last() {
            out.push(last.color);
            node = &last.subtree;
        }
        out
    }

    /// Position after deleting trunk edge `i` (0-based from the ground).
    pub fn delete_trunk_edge(&self, i: usize) -> CHTree {
        let mut children = self.children.clone();
        if i == 0 {
            children.pop();
        } else {
            let last = children.last_mut().expect("trunk edge index in range");
            last.subtree = last.subtree.delete_trunk_edge(i - 1);
        }
        CHTree::new(children)
    }

    pub fn left_options(&self) -> Vec<CHTree> {
        self.options(Color::left_may_play)
    }

    pub fn right_options(&self) -> Vec<CHTree> {
        self.options(Color::right_may_play)
    }

    fn options(&self, legal: fn(Color) -> bool) -> Vec<CHTree> {
        self.trunk()
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| legal(c))
            .map(|(i, _)| self.delete_trunk_edge(i))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self, ParseError> {
        text::parse(text)
    }
}

impl fmt::Display for CHTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, b) in self.children.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", b.color.letter())?;
            if !b.subtree.is_empty() {
                write!(f, "({})", b.subtree)?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for CHTree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CHTree::parse(s)
    }
}

pub fn decompose(tree: &CHTree) -> Result<TrunkDecomp, HackenbushError> {
    if tree.is_empty() {
        return Err(HackenbushError::EmptyTree);
    }
    let mut links = Vec::new();
    let mut node = tree;
    while let Some((last, rest)) = node.children.split_last() {
        links.push((last.color, CHTree::new(rest.to_vec())));
        node = &last.subtree;
    }
    Ok(TrunkDecomp { links })
}

pub fn rebuild(decomp: &TrunkDecomp) -> CHTree {
    decomp.links.iter().rev().fold(CHTree::empty(), |above, (color, side)| {
        let mut children = side.children.clone();
        children.push(Branch::new(*color, above));
        CHTree::new(children)
    })
}

/// Literal game form of a position; green edges give options to both.
pub fn to_gameform(tree: &CHTree, games: &mut Games) -> Result<GameForm, GameError> {
    to_gameform_memo(tree, games, &mut HashMap::new())
}

/// As [`to_gameform`], reusing `memo` across calls on the same arena.
pub fn to_gameform_memo(
    tree: &CHTree,
    games: &mut Games,
    memo: &mut HashMap<CHTree, GameForm>,
) -> Result<GameForm, GameError> {
    if let Some(&g) = memo.get(tree) {
        return Ok(g);
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (i, c) in tree.trunk().into_iter().enumerate() {
        if !c.left_may_play() && !c.right_may_play() {
            continue;
        }
        let option = to_gameform_memo(&tree.delete_trunk_edge(i), games, memo)?;
        if c.left_may_play() {
            left.push(option);
        }
        if c.right_may_play() {
            right.push(option);
        }
    }
    let g = games.form(left, right)?;
    memo.insert(tree.clone(), g);
    Ok(g)
}

/// Value of a blue-red position as an iterated ordinal sum of one-option
/// bases, one per trunk edge.
pub fn value_blue_red(tree: &CHTree) -> Result<Dyadic, HackenbushError> {
    if tree.has_green() {
        return Err(HackenbushError::GreenEdge);
    }
    Ok(value_unchecked(tree))
}

fn value_unchecked(tree: &CHTree) -> Dyadic {
    if tree.is_empty() {
        return Dyadic::zero();
    }
    let links: Vec<ChainLink> = decompose(tree)
        .expect("non-empty")
        .links
        .iter()
        .map(|(color, side)| {
            let side_kind = if *color == Color::Blue { BaseSide::LeftOnly } else { BaseSide::RightOnly };
            ChainLink::new(side_kind, value_unchecked(side))
        })
        .collect();
    eval_chain(&links).expect("non-empty chain")
}

/// Every ordered forest with exactly `edges` edges, each edge colored from
/// `palette`.
pub fn enumerate_trees(edges: usize, palette: &[Color]) -> Vec<CHTree> {
    let mut table: Vec<Vec<CHTree>> = vec![vec![CHTree::empty()]];
    for n in 1..=edges {
        let mut here = Vec::new();
        // first branch uses k edges (its own plus k - 1 above it)
        for k in 1..=n {
            for above in &table[k - 1] {
                for &color in palette {
                    for rest in &table[n - k] {
                        let mut children = vec![Branch::new(color, above.clone())];
                        children.extend(rest.children.iter().cloned());
                        here.push(CHTree::new(children));
                    }
                }
            }
        }
        table.push(here);
    }
    table.swap_remove(edges)
}
