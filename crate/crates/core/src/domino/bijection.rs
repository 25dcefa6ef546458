//! Normalized lines and clockwise hackenbush trees.
//!
//! Domino `i` corresponds to the `i`-th edge of the tree in left-to-right
//! preorder. Stage `E_1` is the trunk; each later stage is a string whose
//! bottom is glued to the bottom vertex of the edge for the domino just
//! after the stage, immediately to that edge's left.

use super::{Domino, DominoError, DominoLine};
use crate::hackenbush::{Branch, CHTree, Color};

struct Edge {
    color: Color,
    top: usize,
}

#[derive(Default)]
struct Sketch {
    /// Child edges of each vertex, left to right. Vertex 0 is the ground.
    out: Vec<Vec<usize>>,
    edges: Vec<Option<Edge>>,
    bottom: Vec<usize>,
}

impl Sketch {
    fn vertex(&mut self) -> usize {
        self.out.push(Vec::new());
        self.out.len() - 1
    }

    /// Lays `indices` as a string starting at `at`, the first edge placed
    /// at `slot` among `at`'s children.
    fn string(&mut self, line: &DominoLine, indices: &[usize], at: usize, slot: usize) {
        let mut v = at;
        for (k, &i) in indices.iter().enumerate() {
            let top = self.vertex();
            self.edges[i] = Some(Edge { color: line.dominoes[i].color(), top });
            self.bottom[i] = v;
            if k == 0 {
                self.out[v].insert(slot, i);
            } else {
                self.out[v].push(i);
            }
            v = top;
        }
    }

    fn tree(&self, v: usize) -> CHTree {
        CHTree::new(
            self.out[v]
                .iter()
                .map(|&e| {
                    let edge = self.edges[e].as_ref().expect("every domino placed");
                    Branch::new(edge.color, self.tree(edge.top))
                })
                .collect(),
        )
    }
}

pub fn to_tree(line: &DominoLine) -> Result<CHTree, DominoError> {
    let expected = line.normalize();
    if expected != *line {
        return Err(DominoError::NotNormalized { expected });
    }
    let n = line.len();
    let mut sk = Sketch { edges: (0..n).map(|_| None).collect(), bottom: vec![0; n], ..Default::default() };
    let ground = sk.vertex();
    for (s, stage) in line.e_partition().stages.iter().enumerate() {
        if s == 0 {
            sk.string(line, stage, ground, 0);
        } else {
            let next = stage.last().expect("stages are non-empty") + 1;
            let at = sk.bottom[next];
            let slot = sk.out[at].iter().position(|&e| e == next).expect("anchor edge placed earlier");
            sk.string(line, stage, at, slot);
        }
    }
    Ok(sk.tree(ground))
}

/// Right-to-left preorder rank of every edge, listed in left-to-right
/// preorder together with its color.
fn ranks(tree: &CHTree) -> Vec<(Color, usize)> {
    fn walk(tree: &CHTree, next: &mut usize, out: &mut Vec<(Color, usize)>) {
        let mut items = Vec::with_capacity(tree.children.len());
        for b in tree.children.iter().rev() {
            let rank = *next;
            *next += 1;
            let mut above = Vec::new();
            walk(&b.subtree, next, &mut above);
            items.push((b.color, rank, above));
        }
        for (color, rank, above) in items.into_iter().rev() {
            out.push((color, rank));
            out.extend(above);
        }
    }
    let mut out = Vec::new();
    walk(tree, &mut 0, &mut out);
    out
}

/// A line playing exactly like `tree`, normalized. An edge blocks another
/// exactly when it comes later left to right but earlier right to left,
/// so ranking edges right to left gives spots with the same blocking
/// relation.
pub fn from_tree(tree: &CHTree) -> DominoLine {
    let raw = DominoLine::new(
        ranks(tree).into_iter().map(|(color, rank)| Domino::with_base(color, 2 * rank as u32 + 1)).collect(),
    );
    raw.normalize()
}
