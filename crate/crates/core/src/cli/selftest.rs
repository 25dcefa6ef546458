//! Worked examples replayed by `cgt selftest`.

use crate::domino::DominoLine;
use crate::dyadic::{simplest_between, zero_bit_index, ColorString, Dyadic};
use crate::gameform::Games;
use crate::hackenbush::{self, CHTree, Color};
use crate::ordsum::{empty_base_int, empty_base_int_signed, eval_base, main2, main2_formula, van_roode, BaseSide};

fn d(s: &str) -> Dyadic {
    s.parse().expect("literal dyadic")
}

fn tree(s: &str) -> CHTree {
    s.parse().expect("literal tree")
}

fn line(s: &str) -> DominoLine {
    s.parse().expect("literal line")
}

fn game_value(games: &mut Games, text: &str) -> Option<Dyadic> {
    let g = games.parse(text).ok()?;
    games.value(g)
}

fn ordinal_value(games: &mut Games, base: &str, sub: &str) -> Option<Dyadic> {
    let b = games.parse(base).ok()?;
    let s = games.parse(sub).ok()?;
    let g = games.ordinal_sum(b, s).ok()?;
    games.value(g)
}

pub(super) fn run() -> Vec<(String, bool)> {
    let mut games = Games::new();
    let g = &mut games;
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut check = |name: &str, ok: bool| out.push((name.to_string(), ok));
    let l = BaseSide::LeftOnly;
    let r = BaseSide::RightOnly;

    check("3/8 : 7/2 = 125/256", van_roode(&d("3/8"), &d("7/2")).ok() == Some(d("125/256")));
    check("21/8 : -7/4 = 325/128", van_roode(&d("21/8"), &d("-7/4")).ok() == Some(d("325/128")));
    check("2 : 1/2 = 5/2", van_roode(&d("2"), &d("1/2")).ok() == Some(d("5/2")));
    check("{21/32 | 45/64} = 11/16", simplest_between(Some(&d("21/32")), Some(&d("45/64"))).ok() == Some(d("11/16")));
    check(
        "{75/128 | 19/32} = 151/256",
        simplest_between(Some(&d("75/128")), Some(&d("19/32"))).ok() == Some(d("151/256")),
    );
    check("third zero digit of 0.100110101 is digit 6", zero_bit_index(&d("309/512"), 3).ok() == Some(6));
    check("first zero digit of 0.101 is digit 2", zero_bit_index(&d("5/8"), 1).ok() == Some(2));
    check("BBRRB = 11/8", "BBRRB".parse::<ColorString>().map(|s| s.value()).ok() == Some(d("11/8")));
    check("{309/512|}:-3 = 39/64", empty_base_int(&d("309/512"), -3).ok() == Some(d("39/64")));
    check("{5/8|}:-1 = 3/4", empty_base_int(&d("5/8"), -1).ok() == Some(d("3/4")));
    check("{0|}:-2 = 1/4", empty_base_int(&d("0"), -2).ok() == Some(d("1/4")));
    check("{1/2|}:0 = 1", empty_base_int(&d("1/2"), 0).ok() == Some(d("1")));
    check(
        "{173/512|}:-3 = 11/32 by signed digits",
        empty_base_int_signed(&d("173/512"), -3).map(|s| s.value()).ok() == Some(d("11/32")),
    );
    check("{-3/8|}:-1 = -1/4", main2(-1, &d("5/8"), -1, &d("0")).ok() == Some(d("-1/4")));
    check("{-1|}:-1 = -1/2", main2(-1, &d("0"), -1, &d("0")).ok() == Some(d("-1/2")));
    check("{|1}:1 = 1/2", eval_base(&d("1"), r, &d("1")) == d("1/2"));
    check("-1/2 : 1/2 = -3/8", van_roode(&d("-1/2"), &d("1/2")).ok() == Some(d("-3/8")));
    check("1/2 : -1/4 = 7/16", van_roode(&d("1/2"), &d("-1/4")).ok() == Some(d("7/16")));
    check("{-3/8|}:-1 = -1/4 in general", eval_base(&d("-3/8"), l, &d("-1")) == d("-1/4"));
    check("{-2|}:-3/2 = -5/4", eval_base(&d("-2"), l, &d("-3/2")) == d("-5/4"));
    check("{-2|}:-3/2 = -5/4 by the oracle", ordinal_value(g, "{-2|}", "-3/2") == Some(d("-5/4")));
    check(
        "closed formula gives -13/8 at floor -2 and is refused",
        main2_formula(-2, &d("0"), -2, &d("1/2")).ok() == Some(d("-13/8"))
            && main2(-2, &d("0"), -2, &d("1/2")).is_err(),
    );
    check(
        "first trunk tree = 7/16",
        hackenbush::value_blue_red(&tree("b(r(r(b(b(r))) b(r)))")).ok() == Some(d("7/16")),
    );
    check("exercise tree = -5/4", hackenbush::value_blue_red(&tree("r(r) b(r(r b(r)))")).ok() == Some(d("-5/4")));
    check("{-2,-3/2|-1} = -5/4", game_value(g, "{-2,-3/2|-1}") == Some(d("-5/4")));
    check("{0|2} = {0|} = 1", game_value(g, "{0|2}") == Some(d("1")) && game_value(g, "{0|}") == Some(d("1")));
    check("{0|2}:1 = 3/2", ordinal_value(g, "{0|2}", "1") == Some(d("3/2")));
    check("{0|}:1 = 2", ordinal_value(g, "{0|}", "1") == Some(d("2")));

    let table = line("2,4 7,3 1,2 4,4 3,2");
    check("table line: Left plays 3, Right plays 5", table.left_moves() == [2] && table.right_moves() == [4]);
    check("table line: stages {3,5} {4} {1,2}", table.e_partition().to_string() == "{3,5} {4} {1,2}");
    check("table line normalizes to 5,6 6,5 1,2 3,3 2,1", table.normalize() == line("5,6 6,5 1,2 3,3 2,1"));
    let nim = (1..=5).all(|n| {
        let ones = DominoLine::new(vec![crate::domino::Domino::new(1, 1); n]);
        let f = ones.to_gameform(g).expect("small form");
        let t = hackenbush::to_gameform(&CHTree::path(vec![Color::Green; n]), g).expect("small form");
        g.nimber_value(f) == Some(n as u64) && g.nimber_value(t) == Some(n as u64)
    });
    check("(1,1) lines and green strings are nim heaps", nim);
    out
}
