use proptest::prelude::*;

use super::*;
use crate::dyadic::{dy, BlueRed, ColorString};
use crate::hackenbush::{self, CHTree};

fn line(s: &str) -> DominoLine {
    s.parse().unwrap()
}

fn table_one() -> DominoLine {
    line("2,4 7,3 1,2 4,4 3,2")
}

#[test]
fn text_format() {
    assert_eq!(table_one().to_string(), "2,4 7,3 1,2 4,4 3,2");
    assert_eq!(line("").len(), 0);
    assert_eq!(line("  0,0\t1,2 ").to_string(), "0,0 1,2");
    match "1,2 3;4".parse::<DominoLine>() {
        Err(DominoError::Parse { token, .. }) => assert_eq!(token, 2),
        other => panic!("unexpected {other:?}"),
    }
    assert!("1,-2".parse::<DominoLine>().is_err());
    assert!("1,2,3".parse::<DominoLine>().is_err());
}

#[test]
fn colors_and_moves() {
    assert_eq!(Domino::new(1, 2).color(), Color::Blue);
    assert_eq!(Domino::new(2, 1).color(), Color::Red);
    assert_eq!(Domino::new(0, 0).color(), Color::Green);

    let l = line("1,2 2,1");
    assert_eq!(l.left_moves(), vec![0]);
    assert_eq!(l.right_moves(), vec![1]);
    let mut g = Games::new();
    let f = l.to_gameform(&mut g).unwrap();
    assert_eq!(g.number_value(f).unwrap(), dy("1/2"));

    let t = table_one();
    assert_eq!(t.left_moves(), vec![2]);
    assert_eq!(t.right_moves(), vec![4]);

    let empty = DominoLine::default();
    assert!(empty.left_moves().is_empty() && empty.right_moves().is_empty());
    let f = empty.to_gameform(&mut g).unwrap();
    assert_eq!(f, g.zero());
}

#[test]
fn green_lines_are_nim() {
    let mut g = Games::new();
    for n in 1..=6 {
        let l = DominoLine::new(vec![Domino::new(1, 1); n]);
        let f = l.to_gameform(&mut g).unwrap();
        assert_eq!(g.nimber_value(f), Some(n as u64));
    }
}

#[test]
fn table_one_normalization() {
    let t = table_one();
    let e = t.e_partition();
    assert_eq!(e.stages, vec![vec![2, 4], vec![3], vec![0, 1]]);
    assert_eq!(e.to_string(), "{3,5} {4} {1,2}");
    let n = t.normalize();
    assert_eq!(n, line("5,6 6,5 1,2 3,3 2,1"));
    assert!(n.is_normalized());
    assert_eq!(n.e_partition(), e);

    assert_eq!(line("9,9").e_partition().stages, vec![vec![0]]);
    assert_eq!(line("1,1 5,5 1,1").e_partition().stages, vec![vec![0, 2], vec![1]]);
    assert_eq!(line("1,1 1,1").normalize(), line("1,1 1,1"));

    let mut g = Games::new();
    let a = t.to_gameform(&mut g).unwrap();
    let b = n.to_gameform(&mut g).unwrap();
    assert!(g.eq(a, b));
}

#[test]
fn table_one_tree() {
    let n = line("5,6 6,5 1,2 3,3 2,1");
    let tree = to_tree(&n).unwrap();
    assert_eq!(tree.to_string(), "b(r) b(g r)");
    assert_eq!(from_tree(&tree), n);
    let mut g = Games::new();
    let a = n.to_gameform(&mut g).unwrap();
    let b = hackenbush::to_gameform(&tree, &mut g).unwrap();
    assert!(g.eq(a, b));
    assert!(matches!(to_tree(&table_one()), Err(DominoError::NotNormalized { .. })));

    assert_eq!(to_tree(&line("1,2")).unwrap().to_string(), "b");
    let greens = DominoLine::new(vec![Domino::new(1, 1); 4]);
    assert_eq!(to_tree(&greens).unwrap(), CHTree::path(vec![Color::Green; 4]));
    assert_eq!(from_tree(&CHTree::path(vec![Color::Green; 4])), greens);
}

#[test]
fn blue_red_lines_are_strings() {
    for n in 0..=6 {
        for bits in 0..(1u32 << n) {
            let colors: Vec<BlueRed> =
                (0..n).map(|i| if bits >> i & 1 == 1 { BlueRed::Blue } else { BlueRed::Red }).collect();
            let l = DominoLine::new(colors.iter().map(|&c| Domino::with_base(c.into(), 1)).collect());
            let mut g = Games::new();
            let f = l.to_gameform(&mut g).unwrap();
            assert_eq!(g.number_value(f).unwrap(), ColorString(colors).value());
        }
    }
}

/// Lemma-level properties of one line, checked directly.
fn check_structure(d: &DominoLine) {
    let e = d.e_partition();
    let n = d.normalize();
    let stage = e.stage_of(d.len());
    assert!(stage.iter().all(|&s| s != usize::MAX), "{d}: partition misses an index");
    assert_eq!(n.colors(), d.colors());
    assert_eq!(n.e_partition(), e, "{d}");
    for stage_set in e.stages.iter().skip(1) {
        let next = stage_set.last().unwrap() + 1;
        for &i in stage_set {
            assert!(d.dominoes[next].prevents(d.dominoes[i]), "{d}: {} should block {}", next + 1, i + 1);
        }
    }
    for i in 0..d.len() {
        for j in 0..d.len() {
            if stage[i] < stage[j] {
                let (a, b) = (n.dominoes[i], n.dominoes[j]);
                assert!(a.l.max(a.r) < b.l.min(b.r), "{d}");
            }
        }
    }
}

#[test]
fn small_lines_exhaustive() {
    let mut g = Games::new();
    for len in 0..=3 {
        for d in enumerate_lines(len, 3) {
            check_structure(&d);
            let n = d.normalize();
            let tree = to_tree(&n).unwrap();
            assert_eq!(from_tree(&tree), n, "{d}");
            let a = d.to_gameform(&mut g).unwrap();
            let b = n.to_gameform(&mut g).unwrap();
            let c = hackenbush::to_gameform(&tree, &mut g).unwrap();
            assert!(g.eq(a, b), "{d} vs {n}");
            assert!(g.eq(a, c), "{d} vs {tree}");
        }
    }
}

#[test]
fn trees_map_to_equal_lines() {
    let mut g = Games::new();
    for n in 0..=5 {
        for tree in hackenbush::enumerate_trees(n, &[Color::Blue, Color::Red, Color::Green]) {
            let d = from_tree(&tree);
            assert!(d.is_normalized());
            let a = d.to_gameform(&mut g).unwrap();
            let b = hackenbush::to_gameform(&tree, &mut g).unwrap();
            assert!(g.eq(a, b), "{tree} vs {d}");
            assert_eq!(to_tree(&d).unwrap(), tree, "{tree} vs {d}");
        }
    }
}

#[test]
fn hetyei_examples() {
    let greens = line("1,1 2,2 1,1");
    assert_eq!(hetyei_reduce(&greens).unwrap(), greens);
    assert_eq!(hetyei_reduce(&line("1,1 1,2")).unwrap(), line("1,1"));
    assert_eq!(hetyei_reduce(&line("1,1 2,1 3,2")).unwrap(), line("1,1 1,1 2,2"));
    assert_eq!(hetyei_moves(&line("1,1 2,1 3,2")), vec![0, 1, 2]);
    assert_eq!(hetyei_moves(&line("1,1 1,2")), vec![0]);
    assert!(matches!(hetyei_reduce(&line("1,2")), Err(DominoError::NotHetyei { index: 1, .. })));
    assert!(matches!(hetyei_reduce(&line("1,1 0,1")), Err(DominoError::NotHetyei { index: 2, .. })));
}

/// Every index ever removed first, found by exploring reachable prefixes.
fn ever_played(line: &DominoLine) -> Vec<bool> {
    let mut reached = vec![false; line.len() + 1];
    let mut played = vec![false; line.len()];
    reached[line.len()] = true;
    for t in (0..=line.len()).rev() {
        if reached[t] {
            for i in hetyei_moves(&line.prefix(t)) {
                played[i] = true;
                reached[i] = true;
            }
        }
    }
    played
}

fn hetyei_instances(len: usize) -> Vec<DominoLine> {
    let mut out = vec![DominoLine::default()];
    for i in 1..=len as u32 {
        out = out
            .into_iter()
            .flat_map(|d| {
                (1..=i).flat_map(move |l| {
                    let d = d.clone();
                    (1..=i).map(move |r| {
                        let mut next = d.clone();
                        next.dominoes.push(Domino::new(l, r));
                        next
                    })
                })
            })
            .collect();
    }
    out
}

#[test]
fn hetyei_reduction_exhaustive() {
    let mut g = Games::new();
    for len in 0..=4 {
        for d in hetyei_instances(len) {
            let dead = hetyei_unplayable(&d);
            let played = ever_played(&d);
            assert!(dead.iter().zip(&played).all(|(x, p)| *x != *p), "{d}");
            let reduced = hetyei_reduce(&d).unwrap();
            assert!(reduced.dominoes.iter().all(|x| x.color() == Color::Green));
            let a = hetyei_to_gameform(&d, &mut g).unwrap();
            let b = reduced.to_gameform(&mut g).unwrap();
            assert!(g.eq(a, b), "{d} vs {reduced}");
        }
    }
}

fn arb_line(max_len: usize, max_spot: u32) -> impl Strategy<Value = DominoLine> {
    proptest::collection::vec((0..=max_spot, 0..=max_spot), 0..=max_len)
        .prop_map(|v| DominoLine::new(v.into_iter().map(|(l, r)| Domino::new(l, r)).collect()))
}

proptest! {
    #[test]
    fn text_round_trip(d in arb_line(8, 20)) {
        prop_assert_eq!(d.to_string().parse::<DominoLine>().unwrap(), d);
    }

    #[test]
    fn normalization_and_bijection(d in arb_line(7, 9)) {
        check_structure(&d);
        let n = d.normalize();
        prop_assert_eq!(n.normalize(), n.clone());
        let tree = to_tree(&n).unwrap();
        prop_assert_eq!(from_tree(&tree), n.clone());
        let mut g = Games::new();
        let a = d.to_gameform(&mut g).unwrap();
        let b = n.to_gameform(&mut g).unwrap();
        let c = hackenbush::to_gameform(&tree, &mut g).unwrap();
        prop_assert!(g.eq(a, b));
        prop_assert!(g.eq(a, c));
    }

    #[test]
    fn positions_are_prefixes(d in arb_line(8, 9)) {
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![d.clone()];
        while let Some(x) = stack.pop() {
            if seen.insert(x.clone()) {
                for i in x.left_moves().into_iter().chain(x.right_moves()) {
                    stack.push(x.prefix(i));
                }
            }
        }
        prop_assert!(seen.len() <= d.len() + 1);
        prop_assert!(seen.iter().all(|x| d.dominoes.starts_with(&x.dominoes)));
    }
}
