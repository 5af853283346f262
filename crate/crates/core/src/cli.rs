//! Command-line front end. [`run`] returns the rendered output and exit
//! code instead of printing, so the binary is a thin wrapper and tests can
//! drive every command in-process.
//!
//! Exit codes: 0 success, 2 invalid input, 3 undecided (enumeration overflow).

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::dynamics::{shift_orbits, OrbitReport, Orbits};
use crate::enumerate::{
    todd_coxeter, EnumerationStats, FinitePresentation, Strategy, DEFAULT_MAX_COSETS,
};
use crate::error::Error;
use crate::relative::{rho, RelativeWord};
use crate::taxonomy::{classify, sweep, Classification};
use crate::words::Word;

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 2;
pub const EXIT_UNDECIDED: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "cpgroups",
    version,
    about = "Cyclically presented groups and shift dynamics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rewrite a relative word W into the cyclic word ρ^f(W).
    Rewrite {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        f: i64,
        /// Relative word over x, a, e.g. "x a^2 X a^-1".
        #[arg(long)]
        word: String,
    },
    /// Classify G_n(k,l) = G_n(x0 xk xl).
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
        #[arg(long)]
        json: bool,
    },
    /// Classify every triple (n, k, l) with 1 <= n <= nmax, 0 <= k, l < n.
    Sweep {
        #[arg(long)]
        nmax: usize,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate cosets for a presentation file.
    Enumerate {
        #[arg(long)]
        file: PathBuf,
        #[command(flatten)]
        engine: EngineArgs,
        /// Also print the standardized coset table.
        #[arg(long)]
        table: bool,
    },
    /// Orbits of the shift on G_n(w), read from cosets of <a> in G_n(w) ⋊ C_n.
    Orbits {
        #[arg(long)]
        n: usize,
        #[arg(
            long,
            allow_negative_numbers = true,
            requires = "l",
            conflicts_with = "word"
        )]
        k: Option<i64>,
        #[arg(
            long,
            allow_negative_numbers = true,
            requires = "k",
            conflicts_with = "word"
        )]
        l: Option<i64>,
        /// Cyclic word over x0..x{n-1}, e.g. "x0 x1 X2".
        #[arg(long, required_unless_present = "k")]
        word: Option<String>,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        f: i64,
        #[command(flatten)]
        engine: EngineArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, Debug, Args)]
pub struct EngineArgs {
    #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
    pub max_cosets: usize,
    #[arg(long, default_value = "hlt")]
    pub strategy: Strategy,
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn invalid(err: impl std::fmt::Display) -> Outcome {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code: EXIT_INVALID,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleInput {
    pub n: usize,
    pub k: i64,
    pub l: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyReport {
    pub command: String,
    pub input: TripleInput,
    pub classification: Classification,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub command: String,
    pub nmax: usize,
    pub rows: Vec<Classification>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsInput {
    pub n: usize,
    pub word: String,
    pub f: i64,
    pub max_cosets: usize,
    pub strategy: Strategy,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitsReport {
    pub command: String,
    pub input: OrbitsInput,
    pub result: Orbits,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            } else {
                Outcome::ok(text)
            }
        }
    }
}

pub fn execute(cmd: Command) -> Outcome {
    match cmd {
        Command::Rewrite { n, f, word } => cmd_rewrite(n, f, &word),
        Command::Classify { n, k, l, json } => cmd_classify(n, k, l, json),
        Command::Sweep { nmax, json } => cmd_sweep(nmax, json),
        Command::Enumerate {
            file,
            engine,
            table,
        } => match std::fs::read_to_string(&file) {
            Ok(text) => cmd_enumerate(&text, engine.max_cosets, engine.strategy, table),
            Err(e) => Outcome::invalid(format!("{}: {e}", file.display())),
        },
        Command::Orbits {
            n,
            k,
            l,
            word,
            f,
            engine,
            json,
        } => {
            let word = match (k, l, word) {
                (Some(k), Some(l), None) => format!(
                    "x0 x{} x{}",
                    k.rem_euclid(n.max(1) as i64),
                    l.rem_euclid(n.max(1) as i64)
                ),
                (None, None, Some(w)) => w,
                _ => return Outcome::invalid("give either --k and --l or --word"),
            };
            cmd_orbits(n, &word, f, engine.max_cosets, engine.strategy, json)
        }
    }
}

pub fn cmd_rewrite(n: usize, f: i64, word: &str) -> Outcome {
    if n == 0 {
        return Outcome::invalid(Error::ZeroModulus);
    }
    let result = RelativeWord::parse(word).and_then(|w| rho(&w, n, f));
    match result {
        Ok(w) => Outcome::ok(format!("{w}\n")),
        Err(e) => Outcome::invalid(e),
    }
}

pub fn cmd_classify(n: usize, k: i64, l: i64, json: bool) -> Outcome {
    if n == 0 {
        return Outcome::invalid(Error::ZeroModulus);
    }
    let c = classify(n, k, l);
    if json {
        let report = ClassifyReport {
            command: "classify".into(),
            input: TripleInput { n, k, l },
            classification: c,
        };
        return Outcome::ok(to_json(&report));
    }
    Outcome::ok(render_classification(&c))
}

pub fn cmd_sweep(nmax: usize, json: bool) -> Outcome {
    let rows = sweep(nmax);
    if json {
        let report = SweepReport {
            command: "sweep".into(),
            nmax,
            rows,
        };
        return Outcome::ok(to_json(&report));
    }
    let mut out =
        String::from("n\tk\tl\td\tbranch\tfinite\torder\tca\tfree_shift\ttheta_fixed\treduced\n");
    for c in &rows {
        let reduced = match &c.reduced {
            Some(r) => format!("({},{},{}) {}", r.n, r.k, r.l, r.branch.label()),
            None => "-".into(),
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            c.n,
            c.k,
            c.l,
            c.d,
            c.branch.label(),
            c.finite,
            c.order.as_ref().map_or("-".into(), |o| o.to_string()),
            c.ca,
            c.free_shift,
            c.theta_fixed,
            reduced
        );
    }
    Outcome::ok(out)
}

pub fn cmd_enumerate(text: &str, max_cosets: usize, strategy: Strategy, table: bool) -> Outcome {
    if max_cosets == 0 {
        return Outcome::invalid("--max-cosets must be at least 1");
    }
    let p = match FinitePresentation::parse(text) {
        Ok(p) => p,
        Err(e) => return Outcome::invalid(e),
    };
    let t = todd_coxeter(&p, max_cosets, strategy);
    if !t.is_complete() {
        return undecided(t.stats());
    }
    if let Err(e) = t.audit(&p) {
        return Outcome::invalid(e);
    }
    let mut out = format!("{} cosets", t.len());
    // single-generator subgroups: report how many cosets that generator fixes
    for s in p.subgroup() {
        if let [g] = s.as_slice() {
            if let Ok(perm) = t.generator_permutation(g.index) {
                let _ = write!(
                    out,
                    "; fixed({}) = {}",
                    p.format_word(s),
                    perm.fixed_points().len()
                );
            }
        }
    }
    out.push('\n');
    if table {
        out.push_str(&t.dump());
    }
    Outcome::ok(out)
}

pub fn cmd_orbits(
    n: usize,
    word: &str,
    f: i64,
    max_cosets: usize,
    strategy: Strategy,
    json: bool,
) -> Outcome {
    if n == 0 {
        return Outcome::invalid(Error::ZeroModulus);
    }
    if max_cosets == 0 {
        return Outcome::invalid("--max-cosets must be at least 1");
    }
    let w = match Word::parse(n, word) {
        Ok(w) => w,
        Err(e) => return Outcome::invalid(e),
    };
    let orbits = match shift_orbits(n, &w, f, max_cosets, strategy) {
        Ok(o) => o,
        Err(e) => return Outcome::invalid(e),
    };
    if json {
        let code = match orbits {
            Orbits::Complete(_) => EXIT_OK,
            Orbits::Undecided(_) => EXIT_UNDECIDED,
        };
        let report = OrbitsReport {
            command: "orbits".into(),
            input: OrbitsInput {
                n,
                word: w.to_string(),
                f,
                max_cosets,
                strategy,
            },
            result: orbits,
        };
        return Outcome {
            stdout: to_json(&report),
            stderr: String::new(),
            code,
        };
    }
    match orbits {
        Orbits::Complete(r) => Outcome::ok(render_orbits(&r)),
        Orbits::Undecided(s) => undecided(&s),
    }
}

fn undecided(s: &EnumerationStats) -> Outcome {
    Outcome {
        stdout: format!(
            "overflow: undecided\ndefined {}, max live {}, live {}, lookaheads {}, compactions {}\n",
            s.total_defined, s.max_live, s.live, s.lookaheads, s.compactions
        ),
        stderr: String::new(),
        code: EXIT_UNDECIDED,
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

/// One-line verdict, e.g. `G_3(1,2): infinite, CA, free shift action, θ fixed-point-free`.
pub fn summary(c: &Classification) -> String {
    let mut s = format!("G_{}({},{}): ", c.n, c.k, c.l);
    match (&c.order, c.finite) {
        (Some(o), _) => {
            let _ = write!(s, "finite (order {o})");
        }
        (None, true) => s.push_str("finite"),
        (None, false) => s.push_str("infinite"),
    }
    s.push_str(if c.ca { ", CA" } else { ", not CA" });
    s.push_str(if c.free_shift {
        ", free shift action"
    } else {
        ", shift not free"
    });
    s.push_str(if c.theta_fixed {
        ", θ has a nonidentity fixed point"
    } else {
        ", θ fixed-point-free"
    });
    if c.exceptional_n18 {
        s.push_str(", exceptional n=18");
    }
    s
}

pub fn render_classification(c: &Classification) -> String {
    let b = c.branch.label();
    let mut out = summary(c);
    out.push('\n');
    let _ = writeln!(
        out,
        "  d = {}; (A) {}, (B) {}, (C) {}",
        c.d, c.conditions.a, c.conditions.b, c.conditions.c
    );
    let _ = writeln!(out, "  branch: {b}");
    let _ = writeln!(out, "  structure: {}", c.structure_note);
    let _ = writeln!(out, "  finite [{b}]: {}", c.rationale.finite);
    let _ = writeln!(out, "  ca [{b}]: {}", c.rationale.ca);
    let _ = writeln!(out, "  free_shift [{b}]: {}", c.rationale.free_shift);
    let _ = writeln!(out, "  theta_fixed [{b}]: {}", c.rationale.theta_fixed);
    if let Some(r) = &c.reduced {
        let _ = writeln!(out, "  reduced: {}", summary(r));
    }
    out
}

pub fn render_orbits(r: &OrbitReport) -> String {
    let parts: Vec<String> = r.cycle_type.iter().map(usize::to_string).collect();
    let mut out = format!("{} points: {}\n", r.total_points, parts.join(" + "));
    let _ = writeln!(out, "  kernel word (f = {}): {}", r.f, r.word);
    for (j, c) in r.fixed_counts.iter().enumerate() {
        let _ = writeln!(out, "  fixed(θ^{}) = {c}", j + 1);
    }
    let _ = writeln!(
        out,
        "  free on nonidentity points: {}",
        if r.free_action_on_nonbase {
            "yes"
        } else {
            "no"
        }
    );
    out
}
