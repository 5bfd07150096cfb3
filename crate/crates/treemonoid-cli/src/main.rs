//! Batch command-line surface over the tree-monoid library.
//!
//! Exit codes: `0` for success (and "true" answers of decision verbs), `1`
//! for "false" answers of decision verbs, `2` with a one-line diagnostic on
//! stderr for malformed input or unsupported verb combinations. Identical
//! invocations produce byte-identical output.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use treemonoid::congruence::{
    check_identity, count_factorizations_baxt, count_factorizations_sylv, equiv, p_baxt, p_plac,
    p_sylv, q_baxt, q_plac, q_sylv, rewrite_closure, EquivMethod, MonoidKind,
};
use treemonoid::graphs::{component, default_label_bound, to_dot, GraphKind};
use treemonoid::operators::{e_crystal, e_quasi, f_crystal, f_quasi};
use treemonoid::trees::{
    baxter_class_readings, count_fillings, hook_count, left_consistent_reading, Shape, TwinPair,
};
use treemonoid::verify::{run_all, SuiteSize};
use treemonoid::words::{standardize, Letter, Word};

/// Monoids of binary trees: insertion, operators, congruences, graphs.
#[derive(Parser)]
#[command(name = "treemonoid", version, about)]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Insert a word and print its P- and Q-symbols.
    Insert {
        /// Monoid: plac, sylv, or baxt.
        kind: String,
        /// Space-separated letters; "-" for the empty word.
        word: String,
        /// Output format: text (ASCII art) or json.
        #[arg(long, default_value = "text")]
        format: String,
    },
    /// Print the standardization of a word.
    Std {
        /// Space-separated letters; "-" for the empty word.
        word: String,
    },
    /// Apply a semicolon-separated operator script, printing each step.
    Op {
        /// Tokens like "f2;f1;qe2": e/f are crystal, qe/qf quasi-crystal.
        script: String,
        /// Starting word.
        word: String,
    },
    /// Decide whether two words are congruent (exit 0 yes, 1 no).
    Equiv {
        /// Monoid: plac, hypo, sylv, or baxt.
        kind: String,
        /// Route: insertion, shape, rewrite, or graph.
        method: String,
        /// First word.
        u: String,
        /// Second word.
        v: String,
    },
    /// List the rewriting closure of a word, sorted.
    Class {
        /// Monoid: plac, sylv, or baxt.
        kind: String,
        /// Seed word.
        word: String,
    },
    /// Materialize a bounded operator-graph component.
    Graph {
        /// Graph kind: crystal or quasicrystal.
        kind: String,
        /// Seed word.
        word: String,
        /// Label bound N (edges use labels below N); defaults to
        /// max(max letter, length) + 2.
        #[arg(long)]
        bound: Option<Letter>,
        /// Emit DOT instead of the text listing.
        #[arg(long)]
        dot: bool,
        /// Write to a file instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Counting formulas over tree shapes.
    #[command(subcommand)]
    Count(CountVerb),
    /// Count factorizations of a word's class over prescribed shapes.
    Factorcount {
        /// Monoid: sylv (shape files) or baxt (twin shape pair files).
        kind: String,
        /// The word whose class is factorized.
        word: String,
        /// JSON file with the first shape (or shape pair).
        u: PathBuf,
        /// JSON file with the second shape (or shape pair).
        v: PathBuf,
    },
    /// Check a defining identity exhaustively (exit 0 holds, 1 fails).
    Identity {
        /// Monoid: sylv (xyxy = yxxy) or baxt (xyxyxy = xyyxxy).
        kind: String,
        /// Alphabet size for the sweep.
        #[arg(long, default_value_t = 3)]
        alphabet: Letter,
        /// Maximum length of x and y; defaults to 3 for sylv, 2 for baxt.
        #[arg(long)]
        maxlen: Option<usize>,
    },
    /// List the class of a twin pair, marking the left-consistent reading.
    Readings {
        /// JSON file with {"left": <tree>, "right": <tree>}.
        pair: PathBuf,
    },
    /// Run the verification suites (exit 0 if all pass).
    Selftest {
        /// Domain size: small or full.
        #[arg(long, default_value = "small")]
        size: String,
    },
}

#[derive(Subcommand)]
enum CountVerb {
    /// Standard decreasing trees of a shape (hook-length formula).
    Hooks {
        /// JSON file with the shape.
        shape: PathBuf,
    },
    /// Right strict BSTs of a shape over an n-letter alphabet.
    Fillings {
        /// JSON file with the shape.
        shape: PathBuf,
        /// Alphabet size.
        n: Letter,
    },
}

fn main() -> ExitCode {
    // Rust ignores SIGPIPE by default, which turns an early-exiting
    // downstream reader (e.g. `treemonoid class ... | head`) into a panic on
    // the next write. Restore the default disposition so the process dies
    // quietly like any other Unix filter.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

// =========================================================================
// Argument parsing helpers
// =========================================================================

fn parse_word(text: &str) -> Result<Word, String> {
    text.parse().map_err(|e| format!("bad word {text:?}: {e}"))
}

fn parse_kind(text: &str) -> Result<MonoidKind, String> {
    text.parse().map_err(|e| format!("{e}"))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path, what: &str) -> Result<T, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: not a valid {what}: {e}", path.display()))
}

/// Reads `{"left": <shape>, "right": <shape>}`.
fn read_shape_pair(path: &Path) -> Result<(Shape, Shape), String> {
    let value: serde_json::Value = read_json(path, "JSON document")?;
    let field = |name: &str| -> Result<Shape, String> {
        let part = value
            .get(name)
            .cloned()
            .ok_or_else(|| format!("{}: missing field {name:?}", path.display()))?;
        serde_json::from_value(part)
            .map_err(|e| format!("{}: field {name:?} is not a shape: {e}", path.display()))
    };
    Ok((field("left")?, field("right")?))
}

/// All words of length `0..=max_len` over `{1, …, max_letter}`.
fn words_over(max_letter: Letter, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=max_letter {
                let mut letters = w.letters().to_vec();
                letters.push(a);
                next.push(Word::new(letters).expect("letters are positive"));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

// =========================================================================
// Verbs
// =========================================================================

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.verb {
        Verb::Insert { kind, word, format } => insert_verb(&kind, &word, &format),
        Verb::Std { word } => {
            println!("{}", standardize(&parse_word(&word)?).word());
            Ok(ExitCode::SUCCESS)
        }
        Verb::Op { script, word } => op_verb(&script, &word),
        Verb::Equiv { kind, method, u, v } => {
            let method: EquivMethod = method.parse().map_err(|e| format!("{e}"))?;
            let equal = equiv(
                &parse_word(&u)?,
                &parse_word(&v)?,
                parse_kind(&kind)?,
                method,
            )
            .map_err(|e| format!("{e}"))?;
            if equal {
                println!("EQUIVALENT");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("NOT EQUIVALENT");
                Ok(ExitCode::from(1))
            }
        }
        Verb::Class { kind, word } => {
            let closure = rewrite_closure(&parse_word(&word)?, parse_kind(&kind)?)
                .map_err(|e| format!("{e}"))?;
            for member in closure {
                println!("{member}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Graph {
            kind,
            word,
            bound,
            dot,
            output,
        } => graph_verb(&kind, &word, bound, dot, output.as_deref()),
        Verb::Count(CountVerb::Hooks { shape }) => {
            let shape: Shape = read_json(&shape, "shape")?;
            println!("{}", hook_count(&shape));
            Ok(ExitCode::SUCCESS)
        }
        Verb::Count(CountVerb::Fillings { shape, n }) => {
            let shape: Shape = read_json(&shape, "shape")?;
            println!("{}", count_fillings(&shape, n));
            Ok(ExitCode::SUCCESS)
        }
        Verb::Factorcount { kind, word, u, v } => factorcount_verb(&kind, &word, &u, &v),
        Verb::Identity {
            kind,
            alphabet,
            maxlen,
        } => identity_verb(&kind, alphabet, maxlen),
        Verb::Readings { pair } => {
            let pair: TwinPair = read_json(&pair, "twin pair")?;
            let marked = left_consistent_reading(&pair);
            for reading in baxter_class_readings(&pair) {
                let prefix = if reading == marked { "* " } else { "  " };
                println!("{prefix}{reading}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Verb::Selftest { size } => {
            let size: SuiteSize = size.parse().map_err(|e| format!("{e}"))?;
            let outcomes = run_all(size);
            let all_passed = outcomes.iter().all(|o| o.passed);
            for outcome in outcomes {
                println!("{outcome}");
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn insert_verb(kind: &str, word: &str, format: &str) -> Result<ExitCode, String> {
    let kind = parse_kind(kind)?;
    let u = parse_word(word)?;
    let json = match format {
        "text" => false,
        "json" => true,
        other => return Err(format!("unknown format {other:?}: expected text or json")),
    };
    let output = match kind {
        MonoidKind::Plac => {
            let (p, q) = (p_plac(&u), q_plac(&u));
            if json {
                serde_json::json!({ "p": p, "q": q }).to_string()
            } else {
                format!("P (tableau):\n{p}\nQ (tableau):\n{q}")
            }
        }
        MonoidKind::Sylv => {
            let (p, q) = (p_sylv(&u), q_sylv(&u));
            if json {
                serde_json::json!({ "p": p, "q": q }).to_string()
            } else {
                format!("P (right strict):\n{p}\nQ (decreasing):\n{q}")
            }
        }
        MonoidKind::Baxt => {
            let p = p_baxt(&u);
            let (qi, qd) = q_baxt(&u);
            if json {
                serde_json::json!({ "p": p, "q": { "increasing": qi, "decreasing": qd } })
                    .to_string()
            } else {
                format!(
                    "P (left strict):\n{}\nP (right strict):\n{}\nQ (increasing):\n{qi}\nQ (decreasing):\n{qd}",
                    p.left(),
                    p.right()
                )
            }
        }
        MonoidKind::Hypo => {
            return Err("no insertion symbols for hypo: use plac, sylv, or baxt".to_string())
        }
    };
    println!("{output}");
    Ok(ExitCode::SUCCESS)
}

type ApplyFn = fn(&Word, Letter) -> Option<Word>;

fn op_verb(script: &str, word: &str) -> Result<ExitCode, String> {
    let parse_token = |token: &str| -> Result<(ApplyFn, Letter), String> {
        let (apply, index): (ApplyFn, &str) = if let Some(rest) = token.strip_prefix("qe") {
            (e_quasi, rest)
        } else if let Some(rest) = token.strip_prefix("qf") {
            (f_quasi, rest)
        } else if let Some(rest) = token.strip_prefix('e') {
            (e_crystal, rest)
        } else if let Some(rest) = token.strip_prefix('f') {
            (f_crystal, rest)
        } else {
            return Err(format!("bad operator token {token:?}"));
        };
        let index: Letter = index
            .parse()
            .map_err(|_| format!("bad operator index in {token:?}"))?;
        if index == 0 {
            return Err(format!("bad operator index in {token:?}: must be ≥ 1"));
        }
        Ok((apply, index))
    };

    let tokens: Vec<(ApplyFn, Letter)> = script
        .split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_token)
        .collect::<Result<_, _>>()?;
    if tokens.is_empty() {
        return Err("empty operator script".to_string());
    }

    let mut current = parse_word(word)?;
    for (apply, index) in tokens {
        match apply(&current, index) {
            Some(next) => {
                println!("{next}");
                current = next;
            }
            None => {
                println!("UNDEFINED");
                break;
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn graph_verb(
    kind: &str,
    word: &str,
    bound: Option<Letter>,
    dot: bool,
    output: Option<&Path>,
) -> Result<ExitCode, String> {
    let kind: GraphKind = kind.parse().map_err(|e| format!("{e}"))?;
    let seed = parse_word(word)?;
    let bound = bound.unwrap_or_else(|| default_label_bound(&seed, &seed));
    let view = component(&seed, kind, bound);

    let text = if dot {
        to_dot(&view)
    } else {
        let mut lines = vec![
            format!("seed: {seed}"),
            format!("kind: {kind}"),
            format!("bound: {bound}"),
            format!("vertices ({}):", view.vertices().len()),
        ];
        lines.extend(view.vertices().iter().map(|v| format!("  {v}")));
        lines.push(format!("edges ({}):", view.edges().len()));
        lines.extend(
            view.edges()
                .iter()
                .map(|(src, label, dst)| format!("  {src} -[{label}]-> {dst}")),
        );
        lines.join("\n") + "\n"
    };

    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn factorcount_verb(kind: &str, word: &str, u: &Path, v: &Path) -> Result<ExitCode, String> {
    let w = parse_word(word)?;
    let count = match parse_kind(kind)? {
        MonoidKind::Sylv => {
            let u: Shape = read_json(u, "shape")?;
            let v: Shape = read_json(v, "shape")?;
            count_factorizations_sylv(&w, &u, &v)
        }
        MonoidKind::Baxt => {
            let (ul, ur) = read_shape_pair(u)?;
            let (vl, vr) = read_shape_pair(v)?;
            count_factorizations_baxt(&w, (&ul, &ur), (&vl, &vr))
        }
        other => {
            return Err(format!(
                "no factorization counting for {other}: use sylv or baxt"
            ))
        }
    };
    println!("{count}");
    Ok(ExitCode::SUCCESS)
}

fn identity_verb(kind: &str, alphabet: Letter, maxlen: Option<usize>) -> Result<ExitCode, String> {
    let kind = parse_kind(kind)?;
    let default_len = match kind {
        MonoidKind::Sylv => 3,
        MonoidKind::Baxt => 2,
        other => return Err(format!("no identity scheme for {other}: use sylv or baxt")),
    };
    let maxlen = maxlen.unwrap_or(default_len);
    let domain = words_over(alphabet, maxlen);
    for x in &domain {
        for y in &domain {
            if !check_identity(kind, x, y).map_err(|e| format!("{e}"))? {
                println!("FAILS x = {x}, y = {y}");
                return Ok(ExitCode::from(1));
            }
        }
    }
    println!("HOLDS");
    Ok(ExitCode::SUCCESS)
}
