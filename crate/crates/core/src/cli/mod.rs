//! The `cgt` command line.
//!
//! Exit codes: 0 on success, 1 when a verification finds a mismatch, 2 on
//! bad input.

mod cache;
mod selftest;
pub mod sweep;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::domino::{self, DominoLine};
use crate::dyadic::{ColorString, Dyadic};
use crate::error::{Error, Result};
use crate::gameform::{GameForm, Games};
use crate::hackenbush::{self, CHTree};
use crate::ordsum::{self, BaseSide, OrdsumError};

pub use cache::CACHE_ENV;

#[derive(Debug, Parser)]
#[command(name = "cgt", version, about = "Exact values for clockwise hackenbush and domino shave")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the value: a number with its blue-red string, a nimber, or a canonical form.
    Eval(Input),
    /// Print the canonical form with its outer braces.
    Canonical(Input),
    /// Compare two positions: prints <, >, = or ||.
    Compare {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value_t = Kind::Game)]
        kind: Kind,
    },
    /// List the options of a position.
    Moves(Input),
    /// Value of an ordinal sum, cross-checked against the closed formulas.
    Ordsum {
        #[arg(long, allow_hyphen_values = true)]
        base: String,
        #[arg(long, allow_hyphen_values = true)]
        sub: String,
    },
    /// Normalize a domino line and show its stages.
    Normalize {
        #[arg(long, allow_hyphen_values = true)]
        dominoes: String,
    },
    /// Convert a domino line (normalized first) to a tree.
    ToTree {
        #[arg(long, allow_hyphen_values = true)]
        dominoes: String,
    },
    /// Convert a tree to a normalized domino line.
    ToDominoes {
        #[arg(long)]
        tree: String,
    },
    /// Convert between a blue-red string (e.g. BBRRB) and its value.
    StringValue {
        #[arg(allow_hyphen_values = true)]
        input: String,
    },
    /// Exhaustive checks of the closed formulas and the domino bijection.
    Verify {
        #[arg(long, default_value_t = 7)]
        max_edges: usize,
        #[arg(long, default_value_t = 3)]
        max_spots: u32,
        #[arg(long, default_value_t = 5)]
        max_len: usize,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Replay the worked examples.
    Selftest,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Game literal such as `{0,1/2|*}`.
    #[arg(long, allow_hyphen_values = true)]
    game: Option<String>,
    /// Tree such as `b r(b) b`; the last branch continues the trunk.
    #[arg(long)]
    tree: Option<String>,
    /// Domino line such as `2,4 7,3 1,2`.
    #[arg(long, allow_hyphen_values = true)]
    dominoes: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Game,
    Tree,
    Dominoes,
}

enum Position {
    Game(String),
    Tree(CHTree),
    Line(DominoLine),
}

impl Position {
    fn parse(kind: Kind, text: &str) -> Result<Self> {
        Ok(match kind {
            Kind::Game => Position::Game(text.to_string()),
            Kind::Tree => Position::Tree(CHTree::parse(text)?),
            Kind::Dominoes => Position::Line(text.parse()?),
        })
    }

    fn from_input(input: &Input) -> Result<Self> {
        match (&input.game, &input.tree, &input.dominoes) {
            (Some(g), _, _) => Position::parse(Kind::Game, g),
            (_, Some(t), _) => Position::parse(Kind::Tree, t),
            (_, _, Some(d)) => Position::parse(Kind::Dominoes, d),
            _ => unreachable!("clap requires one input"),
        }
    }

    fn form(&self, games: &mut Games) -> Result<GameForm> {
        Ok(match self {
            Position::Game(text) => games.parse(text)?,
            Position::Tree(t) => hackenbush::to_gameform(t, games)?,
            Position::Line(d) => d.to_gameform(games)?,
        })
    }

    /// Closed-form value when the position is blue-red.
    fn closed_value(&self) -> Option<Dyadic> {
        match self {
            Position::Game(_) => None,
            Position::Tree(t) => hackenbush::value_blue_red(t).ok(),
            Position::Line(d) => {
                let tree = domino::to_tree(&d.normalize()).ok()?;
                hackenbush::value_blue_red(&tree).ok()
            }
        }
    }
}

/// Outcome of one command: exit code plus what to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report { code: 0, stdout, stderr: String::new() }
    }
}

pub fn run<I, T>(args: I) -> Report
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Report { code: 2, stdout: String::new(), stderr: text }
            } else {
                Report::ok(text)
            };
        }
    };
    match dispatch(cli.command) {
        Ok(report) => report,
        Err(e) => Report { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn dispatch(command: Command) -> Result<Report> {
    let mut games = Games::new();
    let mut out = String::new();
    let mut code = 0;
    match command {
        Command::Eval(input) => {
            let pos = Position::from_input(&input)?;
            match pos.closed_value() {
                Some(x) => writeln!(out, "{}", show_number(&x)).unwrap(),
                None => {
                    let g = pos.form(&mut games)?;
                    let k = canonical(&mut games, g);
                    writeln!(out, "{}", show_value(&mut games, k)).unwrap();
                }
            }
        }
        Command::Canonical(input) => {
            let pos = Position::from_input(&input)?;
            let g = pos.form(&mut games)?;
            let k = canonical(&mut games, g);
            writeln!(out, "{}", games.display_braces(k)).unwrap();
        }
        Command::Compare { a, b, kind } => {
            let x = Position::parse(kind, &a)?.form(&mut games)?;
            let y = Position::parse(kind, &b)?.form(&mut games)?;
            let symbol = match (games.leq(x, y), games.leq(y, x)) {
                (true, true) => "=",
                (true, false) => "<",
                (false, true) => ">",
                (false, false) => "||",
            };
            writeln!(out, "{symbol}").unwrap();
        }
        Command::Moves(input) => moves(&Position::from_input(&input)?, &mut games, &mut out)?,
        Command::Ordsum { base, sub } => code = ordsum_report(&base, &sub, &mut games, &mut out)?,
        Command::Normalize { dominoes } => {
            let line: DominoLine = dominoes.parse()?;
            writeln!(out, "{}", line.normalize()).unwrap();
            writeln!(out, "stages: {}", line.e_partition()).unwrap();
        }
        Command::ToTree { dominoes } => {
            let line: DominoLine = dominoes.parse()?;
            writeln!(out, "{}", domino::to_tree(&line.normalize())?).unwrap();
        }
        Command::ToDominoes { tree } => {
            writeln!(out, "{}", domino::from_tree(&CHTree::parse(&tree)?)).unwrap();
        }
        Command::StringValue { input } => {
            let text = input.trim();
            if !text.is_empty() && text.chars().all(|c| matches!(c, 'B' | 'R' | 'b' | 'r')) {
                let s: ColorString = text.parse()?;
                writeln!(out, "{}", s.value()).unwrap();
            } else {
                let x: Dyadic = text.parse()?;
                writeln!(out, "{}", ColorString::from_value(&x)).unwrap();
            }
        }
        Command::Verify { max_edges, max_spots, max_len, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
            let (trees, lines) = pool.install(|| (sweep::trees(max_edges), sweep::lines(max_len, max_spots)));
            for (label, s) in [
                (format!("trees (blue-red, <= {max_edges} edges)"), &trees),
                (format!("lines (length <= {max_len}, spots 0..={max_spots})"), &lines),
            ] {
                writeln!(out, "{label}: {} checked, {} failed", s.checked, s.failed).unwrap();
                if let Some(f) = &s.first_failure {
                    writeln!(out, "  first failure: {f}").unwrap();
                }
            }
            if trees.failed + lines.failed > 0 {
                code = 1;
            }
        }
        Command::Selftest => {
            let results = selftest::run();
            let failed = results.iter().filter(|(_, ok)| !ok).count();
            for (name, ok) in &results {
                writeln!(out, "{} {name}", if *ok { "PASS" } else { "FAIL" }).unwrap();
            }
            writeln!(out, "{} passed, {failed} failed", results.len() - failed).unwrap();
            if failed > 0 {
                code = 1;
            }
        }
    }
    Ok(Report { code, stdout: out, stderr: String::new() })
}

fn canonical(games: &mut Games, g: GameForm) -> GameForm {
    cache::canonical(games, g)
}

/// `11/8 [BBRRB]`; zero prints as `0 []`.
pub fn show_number(x: &Dyadic) -> String {
    format!("{x} [{}]", ColorString::from_value(x))
}

/// Number with its string, `*n` for a nimber, else the canonical literal.
pub fn show_value(games: &mut Games, g: GameForm) -> String {
    let k = games.canonical(g);
    if let Some(x) = games.value(k) {
        show_number(&x)
    } else if let Some(n) = games.nimber_value(k) {
        format!("*{n}")
    } else {
        games.display(k)
    }
}

fn moves(pos: &Position, games: &mut Games, out: &mut String) -> Result<()> {
    let shown = |s: String| if s.is_empty() { ".".to_string() } else { s };
    match pos {
        Position::Game(text) => {
            let g = games.parse(text)?;
            for (tag, options) in [("L", games.left(g).to_vec()), ("R", games.right(g).to_vec())] {
                for x in options {
                    writeln!(out, "{tag} {}", games.display(x)).unwrap();
                }
            }
        }
        Position::Tree(t) => {
            for (tag, options) in [("L", t.left_options()), ("R", t.right_options())] {
                for x in options {
                    writeln!(out, "{tag} {}", shown(x.to_string())).unwrap();
                }
            }
        }
        Position::Line(d) => {
            for (tag, options) in [("L", d.left_moves()), ("R", d.right_moves())] {
                for i in options {
                    writeln!(out, "{tag} {}: {}", i + 1, shown(d.prefix(i).to_string())).unwrap();
                }
            }
        }
    }
    Ok(())
}

/// A base `{x|}` or `{|x}` with `x` a number.
fn one_sided(games: &mut Games, base: GameForm) -> Option<(BaseSide, Dyadic)> {
    match (games.left(base).to_vec().as_slice(), games.right(base).to_vec().as_slice()) {
        ([x], []) => games.value(*x).map(|v| (BaseSide::LeftOnly, v)),
        ([], [x]) => games.value(*x).map(|v| (BaseSide::RightOnly, v)),
        _ => None,
    }
}

fn agreement(expected: &Dyadic, got: &Dyadic) -> &'static str {
    if expected == got {
        "agrees"
    } else {
        "DISAGREES"
    }
}

fn ordsum_report(base_text: &str, sub_text: &str, games: &mut Games, out: &mut String) -> Result<i32> {
    let base = games.parse(base_text)?;
    let sub = games.parse(sub_text)?;
    let sum = games.ordinal_sum(base, sub)?;
    let value = show_value(games, sum);
    writeln!(out, "{value}").unwrap();
    let (Some(exact), Some(w)) = (games.value(sum), games.value(sub)) else {
        return Ok(0);
    };
    let mut code = 0;
    if let Some((side, x)) = one_sided(games, base) {
        let general = ordsum::eval_base(&x, side, &w);
        writeln!(out, "eval_base: {general} ({})", agreement(&exact, &general)).unwrap();
        code |= (general != exact) as i32;
        match ordsum::fast_path(&x, side, &w) {
            Ok(v) => {
                writeln!(out, "main2: {v} ({})", agreement(&exact, &v)).unwrap();
                code |= (v != exact) as i32;
            }
            Err(OrdsumError::OutOfDomain { n }) => {
                writeln!(out, "main2: out of domain (floor of the option is {n}, needs >= -1)").unwrap();
            }
            Err(e) => return Err(Error::from(e)),
        }
    } else if games.canonical(base) == base {
        if let Some(g) = games.value(base).filter(|g| !g.is_zero()) {
            let v = ordsum::van_roode(&g, &w)?;
            writeln!(out, "van_roode: {v} ({})", agreement(&exact, &v)).unwrap();
            code |= (v != exact) as i32;
        }
    }
    Ok(code)
}
