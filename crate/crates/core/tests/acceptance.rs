//! Acceptance suite. Every comparison is exact; one PASS/FAIL line per
//! criterion, non-zero exit if any fails.

use std::collections::HashMap;
use std::process::ExitCode;

use cgt_core::cli::sweep;
use cgt_core::domino::{Domino, DominoLine};
use cgt_core::dyadic::{simplest_between, BlueRed, ColorString, Dyadic};
use cgt_core::gameform::{GameForm, Games};
use cgt_core::hackenbush::{self, CHTree, Color};
use cgt_core::ordsum::{
    empty_base_int, empty_base_int_signed, eval_base, eval_chain, fast_path, main2, main2_formula, van_roode, BaseSide,
    ChainLink,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn d(s: &str) -> Dyadic {
    s.parse().unwrap()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn verdict(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome { ok, detail: detail.into() }
}

/// Collects mismatches as "label: got X, expected Y".
#[derive(Default)]
struct Checks {
    total: usize,
    bad: Vec<String>,
}

impl Checks {
    fn eq<T: PartialEq + std::fmt::Display>(&mut self, label: &str, got: T, expected: T) {
        self.total += 1;
        if got != expected {
            self.bad.push(format!("{label}: got {got}, expected {expected}"));
        }
    }

    fn truth(&mut self, label: &str, ok: bool) {
        self.total += 1;
        if !ok {
            self.bad.push(label.to_string());
        }
    }

    fn finish(self) -> Outcome {
        if self.bad.is_empty() {
            verdict(true, format!("{} checks", self.total))
        } else {
            verdict(false, format!("{} of {} failed; first: {}", self.bad.len(), self.total, self.bad[0]))
        }
    }
}

fn oracle_base(g: &mut Games, x: &Dyadic, side: BaseSide, w: &Dyadic) -> Dyadic {
    let xf = g.number(x).unwrap();
    let base = match side {
        BaseSide::LeftOnly => g.form([xf], []).unwrap(),
        BaseSide::RightOnly => g.form([], [xf]).unwrap(),
    };
    let wf = g.number(w).unwrap();
    let s = g.ordinal_sum(base, wf).unwrap();
    g.value(s).unwrap()
}

fn string_form(g: &mut Games, s: &ColorString) -> GameForm {
    let tree = CHTree::from_string(s);
    hackenbush::to_gameform(&tree, g).unwrap()
}

fn oracle_strings(g: &mut Games, a: &Dyadic, b: &Dyadic) -> Dyadic {
    let base = string_form(g, &ColorString::from_value(a));
    let sub = string_form(g, &ColorString::from_value(b));
    let s = g.ordinal_sum(base, sub).unwrap();
    g.value(s).unwrap()
}

fn van_roode_examples() -> Outcome {
    let mut c = Checks::default();
    let mut g = Games::new();
    for (a, b, want) in [("3/8", "7/2", "125/256"), ("21/8", "-7/4", "325/128")] {
        c.eq(&format!("{a} : {b}"), van_roode(&d(a), &d(b)).unwrap(), d(want));
        c.eq(&format!("{a} : {b} on strings"), oracle_strings(&mut g, &d(a), &d(b)), d(want));
    }
    c.finish()
}

fn simplicity_examples() -> Outcome {
    let mut c = Checks::default();
    for (a, b, want) in [("21/32", "45/64", "11/16"), ("75/128", "19/32", "151/256")] {
        c.eq(&format!("{{{a}|{b}}}"), simplest_between(Some(&d(a)), Some(&d(b))).unwrap(), d(want));
    }
    c.finish()
}

fn empty_base_examples() -> Outcome {
    let mut c = Checks::default();
    let mut g = Games::new();
    for (x, want) in [("309/512", "39/64"), ("173/512", "11/32")] {
        let binary = empty_base_int(&d(x), -3).unwrap();
        let signed = empty_base_int_signed(&d(x), -3).unwrap().value();
        c.eq(&format!("{{{x}|}}:-3 binary"), binary.clone(), d(want));
        c.eq(&format!("{{{x}|}}:-3 signed"), signed, d(want));
        c.eq(&format!("{{{x}|}}:-3 oracle"), oracle_base(&mut g, &d(x), BaseSide::LeftOnly, &d("-3")), binary);
    }
    c.finish()
}

fn pipeline() -> Outcome {
    use BaseSide::*;
    let mut c = Checks::default();
    let mut g = Games::new();
    c.eq("{-1|}:-1", eval_base(&d("-1"), LeftOnly, &d("-1")), d("-1/2"));
    c.eq("{-1|}:-1 closed", fast_path(&d("-1"), LeftOnly, &d("-1")).unwrap(), d("-1/2"));
    c.eq("{|1}:1", eval_base(&d("1"), RightOnly, &d("1")), d("1/2"));
    c.eq("-1/2 : 1/2", van_roode(&d("-1/2"), &d("1/2")).unwrap(), d("-3/8"));
    c.eq("{-3/8|}:-1", eval_base(&d("-3/8"), LeftOnly, &d("-1")), d("-1/4"));
    c.eq("{-3/8|}:-1 closed", fast_path(&d("-3/8"), LeftOnly, &d("-1")).unwrap(), d("-1/4"));
    c.eq("1/2 : -1/4", van_roode(&d("1/2"), &d("-1/4")).unwrap(), d("7/16"));
    let chain = [
        ChainLink::new(LeftOnly, d("0")),
        ChainLink::new(RightOnly, d("0")),
        ChainLink::new(LeftOnly, d("-3/8")),
        ChainLink::new(RightOnly, d("0")),
    ];
    c.eq("first chain", eval_chain(&chain).unwrap(), d("7/16"));
    let inner = eval_base(&d("-1"), LeftOnly, &d("-1"));
    let middle = van_roode(&d("-1"), &inner).unwrap();
    c.eq("exercise", eval_base(&d("-2"), LeftOnly, &middle), d("-5/4"));
    for (text, want) in [("b(r(r(b(b(r))) b(r)))", "7/16"), ("r(r) b(r(r b(r)))", "-5/4")] {
        let tree: CHTree = text.parse().unwrap();
        c.eq(&format!("tree {text}"), hackenbush::value_blue_red(&tree).unwrap(), d(want));
        let f = hackenbush::to_gameform(&tree, &mut g).unwrap();
        c.eq(&format!("tree {text} oracle"), g.value(f).unwrap(), d(want));
    }
    c.finish()
}

fn formula_gap() -> Outcome {
    let mut c = Checks::default();
    let mut g = Games::new();
    c.eq("bare formula at n = -2", main2_formula(-2, &d("0"), -2, &d("1/2")).unwrap(), d("-13/8"));
    c.eq("oracle", oracle_base(&mut g, &d("-2"), BaseSide::LeftOnly, &d("-3/2")), d("-5/4"));
    c.eq("eval_base", eval_base(&d("-2"), BaseSide::LeftOnly, &d("-3/2")), d("-5/4"));
    c.truth("guarded formula refuses n = -2", main2(-2, &d("0"), -2, &d("1/2")).is_err());
    c.truth("fast path refuses x = -2", fast_path(&d("-2"), BaseSide::LeftOnly, &d("-3/2")).is_err());
    c.finish()
}

fn tree_sweep() -> Outcome {
    let s = sweep::trees(7);
    verdict(
        s.passed() && s.checked > 60_000,
        format!(
            "{} trees, {} failed{}",
            s.checked,
            s.failed,
            s.first_failure.map(|f| format!(" ({f})")).unwrap_or_default()
        ),
    )
}

fn grid() -> Vec<Dyadic> {
    (-24..32).map(|k| Dyadic::new(k, 3)).collect()
}

fn eval_base_grid() -> Outcome {
    let mut g = Games::new();
    let (mut cases, mut closed, mut bad, mut gap) = (0, 0, Vec::new(), 0);
    for x in grid() {
        for w in grid() {
            for side in [BaseSide::LeftOnly, BaseSide::RightOnly] {
                cases += 1;
                let truth = oracle_base(&mut g, &x, side, &w);
                let general = eval_base(&x, side, &w);
                if general != truth {
                    bad.push(format!("eval_base({x}, {side:?}, {w}) = {general}, oracle {truth}"));
                }
                let floor = match side {
                    BaseSide::LeftOnly => x.floor(),
                    BaseSide::RightOnly => (-&x).floor(),
                };
                if floor >= (-1).into() {
                    closed += 1;
                    let v = fast_path(&x, side, &w).unwrap();
                    if v != truth {
                        bad.push(format!("main2 at ({x}, {side:?}, {w}) = {v}, oracle {truth}"));
                    }
                } else {
                    let (mx, mw) = match side {
                        BaseSide::LeftOnly => (x.clone(), w.clone()),
                        BaseSide::RightOnly => (-&x, -&w),
                    };
                    let fd = mx.floor_decomp();
                    let wd = mw.floor_decomp();
                    let n: i64 = (&fd.n).try_into().unwrap();
                    let m: i64 = (&wd.n).try_into().unwrap();
                    let raw = main2_formula(n, &fd.d, m, &wd.d).unwrap();
                    let raw = if side == BaseSide::LeftOnly { raw } else { -raw };
                    gap += (raw != truth) as usize;
                }
            }
        }
    }
    verdict(
        bad.is_empty() && gap > 0,
        if bad.is_empty() {
            format!("{cases} cases, main2 agrees on all {closed} in its domain; bare formula wrong on {gap} outside")
        } else {
            format!("{} mismatches; first: {}", bad.len(), bad[0])
        },
    )
}

fn dominoes() -> Outcome {
    let exhaustive = sweep::lines(5, 3);
    let random = sweep::random_lines(1000, 8, 9, 0x5eed);
    let table: DominoLine = "2,4 7,3 1,2 4,4 3,2".parse().unwrap();
    let table_ok =
        table.normalize().to_string() == "5,6 6,5 1,2 3,3 2,1" && table.e_partition().to_string() == "{3,5} {4} {1,2}";
    let failure = exhaustive.first_failure.clone().or(random.first_failure.clone());
    verdict(
        exhaustive.passed() && random.passed() && table_ok && exhaustive.checked == 1_118_481 && random.checked == 1000,
        format!(
            "{} exhaustive + {} random lines, {} failed; table line {}{}",
            exhaustive.checked,
            random.checked,
            exhaustive.failed + random.failed,
            if table_ok { "exact" } else { "WRONG" },
            failure.map(|f| format!(" ({f})")).unwrap_or_default()
        ),
    )
}

fn special_cases() -> Outcome {
    let mut c = Checks::default();
    let mut g = Games::new();
    for n in 1..=5 {
        let line = DominoLine::new(vec![Domino::new(1, 1); n]);
        let f = line.to_gameform(&mut g).unwrap();
        let k = g.canonical(f);
        let star = g.nimber(n as u64).unwrap();
        c.truth(&format!("{n} green dominoes = *{n}"), k == star);
    }
    for n in 0..=8 {
        for bits in 0..(1u32 << n) {
            let colors: Vec<BlueRed> =
                (0..n).map(|i| if bits >> i & 1 == 1 { BlueRed::Blue } else { BlueRed::Red }).collect();
            let line = DominoLine::new(
                colors
                    .iter()
                    .map(|&c| if c == BlueRed::Blue { Domino::new(1, 2) } else { Domino::new(2, 1) })
                    .collect(),
            );
            let f = line.to_gameform(&mut g).unwrap();
            let s = ColorString(colors);
            c.eq(&format!("line {line}"), g.value(f).unwrap(), s.value());
        }
    }
    c.finish()
}

/// Random small form: up to two options a side, nested `depth` deep, with
/// small numbers and nimbers mixed in at the leaves.
fn random_form(g: &mut Games, rng: &mut ChaCha8Rng, depth: u32) -> GameForm {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..4) {
            0 => g.zero(),
            1 => g.nimber(rng.gen_range(1..3)).unwrap(),
            _ => g.number(&Dyadic::new(rng.gen_range(-6..=6), rng.gen_range(0..3))).unwrap(),
        };
    }
    let nl = rng.gen_range(0..=2);
    let nr = rng.gen_range(0..=2);
    let left: Vec<_> = (0..nl).map(|_| random_form(g, rng, depth - 1)).collect();
    let right: Vec<_> = (0..nr).map(|_| random_form(g, rng, depth - 1)).collect();
    g.form(left, right).unwrap()
}

fn random_tree(rng: &mut ChaCha8Rng, edges: usize) -> CHTree {
    let all = hackenbush::enumerate_trees(edges, &[Color::Blue, Color::Red]);
    all[rng.gen_range(0..all.len())].clone()
}

fn properties() -> Outcome {
    const CASES: usize = 500;
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut bad = Vec::new();
    let mut counts = [0usize; 4];

    let mut attempts = 0;
    while counts[0] < CASES && attempts < 200 * CASES {
        attempts += 1;
        let mut g = Games::new();
        let base = random_form(&mut g, &mut rng, 2);
        let h = random_form(&mut g, &mut rng, 2);
        let h2 = random_form(&mut g, &mut rng, 2);
        if !g.leq(h2, h) {
            continue;
        }
        counts[0] += 1;
        let lo = g.ordinal_sum(base, h2).unwrap();
        let hi = g.ordinal_sum(base, h).unwrap();
        if !g.leq(lo, hi) {
            bad.push(format!("colon principle: {} : {} vs {}", g.display(base), g.display(h2), g.display(h)));
        }
    }

    attempts = 0;
    while counts[1] < CASES && attempts < 200 * CASES {
        attempts += 1;
        let mut g = Games::new();
        let base = random_form(&mut g, &mut rng, 3);
        let h = random_form(&mut g, &mut rng, 2);
        if g.has_reversible_option(base) {
            continue;
        }
        counts[1] += 1;
        let k = g.canonical(base);
        let lhs = g.ordinal_sum(base, h).unwrap();
        let rhs = g.ordinal_sum(k, h).unwrap();
        if !g.eq(lhs, rhs) {
            bad.push(format!("McKay: {} : {}", g.display(base), g.display(h)));
        }
    }

    while counts[2] < CASES {
        let mut g = Games::new();
        let x = random_form(&mut g, &mut rng, 3);
        let h = random_form(&mut g, &mut rng, 2);
        // an equal form: either the canonical form or x plus a zero game
        let y = if rng.gen_bool(0.5) {
            g.canonical(x)
        } else {
            let z = random_form(&mut g, &mut rng, 1);
            let nz = g.neg(z);
            let zero = g.add(z, nz).unwrap();
            g.add(x, zero).unwrap()
        };
        counts[2] += 1;
        let bx = g.form([x], []).unwrap();
        let by = g.form([y], []).unwrap();
        let lhs = g.ordinal_sum(bx, h).unwrap();
        let rhs = g.ordinal_sum(by, h).unwrap();
        if !g.eq(lhs, rhs) {
            bad.push(format!("base form: {{{}|}} vs {{{}|}} : {}", g.display(x), g.display(y), g.display(h)));
        }
    }

    let mut g = Games::new();
    let mut memo: HashMap<CHTree, GameForm> = HashMap::new();
    while counts[3] < CASES {
        let edges = rng.gen_range(2..=6);
        let tree = random_tree(&mut rng, edges);
        counts[3] += 1;
        let trunk = tree.trunk();
        let after: Vec<GameForm> = (0..trunk.len())
            .map(|i| hackenbush::to_gameform_memo(&tree.delete_trunk_edge(i), &mut g, &mut memo).unwrap())
            .collect();
        for i in 0..trunk.len() {
            for j in i + 1..trunk.len() {
                if trunk[i] != trunk[j] {
                    continue;
                }
                let ok = match trunk[i] {
                    Color::Blue => g.gt(after[j], after[i]),
                    _ => g.lt(after[j], after[i]),
                };
                if !ok {
                    bad.push(format!("higher move not better in {tree} ({} vs {})", i + 1, j + 1));
                }
            }
        }
    }

    let enough = counts.iter().all(|&n| n >= CASES);
    verdict(
        bad.is_empty() && enough,
        if bad.is_empty() {
            format!(
                "colon {} / McKay {} / base form {} / trunk order {} cases",
                counts[0], counts[1], counts[2], counts[3]
            )
        } else {
            format!("{} failures; first: {}", bad.len(), bad[0])
        },
    )
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("van Roode examples", van_roode_examples),
        ("simplicity examples", simplicity_examples),
        ("empty-base examples, binary and signed paths", empty_base_examples),
        ("worked ordinal-sum pipeline", pipeline),
        ("closed formula gap below floor -1", formula_gap),
        ("blue-red trees up to 7 edges against the oracle", tree_sweep),
        ("eval_base grid against the oracle", eval_base_grid),
        ("normalization and tree bijection", dominoes),
        ("nim and blue-red string lines", special_cases),
        ("randomized ordinal-sum and trunk properties", properties),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let outcome = check();
        let status = if outcome.ok { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {name}: {} [{:.1}s]", k + 1, outcome.detail, start.elapsed().as_secs_f64());
        failed += (!outcome.ok) as usize;
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
