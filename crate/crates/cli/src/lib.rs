//! Argument parsing and command dispatch for the `circword` binary.
//!
//! Exit codes: 0 success, 1 violations found by `verify`, 2 usage or parse
//! error.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use circword_core::fibonacci::{fib_trie, fib_word, FibIndex};
use circword_core::iterative::{greedy_encode, optimal_encode, DEFAULT_GUARD};
use circword_core::verify::{self, SuiteId, VerifyConfig};
use circword_core::{build_trie, word, CircularWord, IterativeRepresentation, Word};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "circword", version, about = "Circular-word representations and conjugate tries")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress summaries on stderr.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct WordArg {
    word: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the distinct conjugates of a word.
    Conjugates(WordArg),
    /// Periods of a linear word.
    Periods(WordArg),
    /// Periods of at least one conjugate.
    WeakPeriods(WordArg),
    /// Periods of every conjugate.
    StrongPeriods(WordArg),
    /// Minimal representation(s) `root,n`.
    Minrep {
        word: String,
        /// Print every minimal representation, not only the least root.
        #[arg(long)]
        all: bool,
    },
    /// Iterative representation of the circular word.
    Encode {
        word: String,
        /// Exhaustive search instead of the greedy reduction.
        #[arg(long)]
        optimal: bool,
        /// Largest word length accepted by --optimal.
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: usize,
    },
    /// Decode a tuple `root,l1,k1,...,lm`.
    Decode {
        tuple: String,
        /// Print the linear word shifted by K instead of the circular word.
        #[arg(long, value_name = "K")]
        linear: Option<usize>,
    },
    /// Conjugate trie export and analyses.
    Trie {
        word: String,
        /// Graphviz output.
        #[arg(long, conflicts_with_all = ["profile", "gaps"])]
        dot: bool,
        /// Branching nodes per level.
        #[arg(long)]
        profile: bool,
        /// Level gaps between consecutive branching nodes.
        #[arg(long)]
        gaps: bool,
    },
    /// Finite Fibonacci words (f1 = b, f2 = a).
    Fib {
        i: usize,
        #[arg(long, group = "fib_view")]
        word: bool,
        #[arg(long, group = "fib_view")]
        circular: bool,
        #[arg(long, group = "fib_view")]
        trie: bool,
    },
    /// Run an exhaustive verification suite.
    Verify {
        suite: String,
        #[arg(long, default_value_t = verify::DEFAULT_MAX_LEN)]
        max_len: usize,
        #[arg(long, default_value_t = verify::DEFAULT_FIB_MAX)]
        fib_max: usize,
        /// Worker threads (0 = one per core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

/// Captured result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Output {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

/// JSON form of a minimal representation.
#[derive(Debug, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct RepJson {
    pub root: Word,
    pub n: usize,
}

#[derive(Debug, Serialize, serde::Deserialize, PartialEq, Eq)]
pub struct TrieJson {
    #[serde(flatten)]
    pub dump: circword_core::trie::TrieDump,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gaps: Option<Vec<usize>>,
}

pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.exit_code() == 0 { EXIT_OK } else { EXIT_USAGE };
            return if e.use_stderr() {
                Output {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => Output::usage(e),
    }
}

fn parse_word(s: &str) -> circword_core::Result<Word> {
    let w: Word = s.parse()?;
    if w.is_empty() {
        return Err(circword_core::Error::EmptyWord);
    }
    Ok(w)
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

fn joined(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn dispatch(cli: &Cli) -> circword_core::Result<Output> {
    let as_json = cli.json;
    let out = match &cli.command {
        Command::Conjugates(WordArg { word }) => {
            let conj = word::conjugates(&parse_word(word)?)?;
            if as_json {
                json(&conj)
            } else {
                conj.iter().map(|c| format!("{c}\n")).collect()
            }
        }
        Command::Periods(WordArg { word }) => {
            let ps = word::periods(&parse_word(word)?)?;
            if as_json { json(&ps) } else { format!("{}\n", joined(&ps)) }
        }
        Command::WeakPeriods(WordArg { word }) => {
            let ps = CircularWord::new(&parse_word(word)?)?.weak_periods();
            if as_json { json(&ps) } else { format!("{}\n", joined(&ps)) }
        }
        Command::StrongPeriods(WordArg { word }) => {
            let ps = CircularWord::new(&parse_word(word)?)?.strong_periods();
            if as_json { json(&ps) } else { format!("{}\n", joined(&ps)) }
        }
        Command::Minrep { word, all } => {
            let reps = CircularWord::new(&parse_word(word)?)?.minimal_representations();
            let reps: Vec<_> = if *all { reps } else { reps.into_iter().take(1).collect() };
            if as_json {
                let js: Vec<RepJson> = reps
                    .into_iter()
                    .map(|r| RepJson { root: r.root, n: r.n })
                    .collect();
                if *all { json(&js) } else { json(&js[0]) }
            } else {
                reps.iter().map(|r| format!("{r}\n")).collect()
            }
        }
        Command::Encode {
            word,
            optimal,
            guard,
        } => {
            let cw = CircularWord::new(&parse_word(word)?)?;
            let rep = if *optimal {
                optimal_encode(&cw, *guard)?
            } else {
                greedy_encode(&cw)
            };
            if as_json { json(&rep) } else { format!("{rep}\n") }
        }
        Command::Decode { tuple, linear } => {
            let rep: IterativeRepresentation = tuple.parse()?;
            let text = match linear {
                Some(k) => rep.decode_linear(*k)?.to_string(),
                None => rep.decode()?.to_string(),
            };
            if as_json { json(&text) } else { format!("{text}\n") }
        }
        Command::Trie {
            word,
            dot,
            profile,
            gaps,
        } => {
            let t = build_trie(&CircularWord::new(&parse_word(word)?)?);
            if *dot {
                if as_json {
                    return Ok(Output::usage("--dot and --json are mutually exclusive"));
                }
                t.to_dot()
            } else if as_json {
                json(&TrieJson {
                    dump: t.dump(),
                    gaps: gaps.then(|| t.branching_gaps()),
                })
            } else {
                let mut s = String::new();
                let p = t.branching_profile();
                if !profile && !gaps {
                    writeln!(
                        s,
                        "{} nodes={} leaves={} depth={}",
                        t.source(),
                        t.nodes().len(),
                        t.leaf_count(),
                        t.depth()
                    )
                    .unwrap();
                }
                if *profile || !gaps {
                    writeln!(s, "profile: {}", joined(&p.counts)).unwrap();
                }
                if *gaps {
                    writeln!(s, "gaps: {}", joined(&t.branching_gaps())).unwrap();
                }
                s
            }
        }
        Command::Fib {
            i,
            word: _,
            circular,
            trie,
        } => {
            let idx = FibIndex::new(*i)?;
            if *trie {
                let t = fib_trie(idx)?;
                if as_json { json(&t.dump()) } else { t.to_dot() }
            } else {
                let f = fib_word(idx)?;
                let text = if *circular {
                    CircularWord::new(&f)?.to_string()
                } else {
                    f.to_string()
                };
                if as_json { json(&text) } else { format!("{text}\n") }
            }
        }
        Command::Verify {
            suite,
            max_len,
            fib_max,
            jobs,
        } => {
            let id: SuiteId = suite.parse()?;
            let cfg = VerifyConfig {
                max_len: *max_len,
                fib_max: *fib_max,
                jobs: *jobs,
            };
            let violations = verify::run_suite(id, &cfg)?;
            let stdout: String = violations.iter().map(json).collect();
            let stderr = if cli.quiet {
                String::new()
            } else {
                format!("verify {id}: {} violation(s)\n", violations.len())
            };
            return Ok(Output {
                code: if violations.is_empty() { EXIT_OK } else { EXIT_VIOLATIONS },
                stdout,
                stderr,
            });
        }
    };
    Ok(Output::ok(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["circword"]).code, EXIT_USAGE);
        assert_eq!(run(["circword", "encode"]).code, EXIT_USAGE);
        assert_eq!(run(["circword", "decode", "ab,3,0"]).code, EXIT_USAGE);
    }

    #[test]
    fn joined_is_space_separated() {
        assert_eq!(joined(&[]), "");
        assert_eq!(joined(&[2, 4, 5]), "2 4 5");
    }

    #[test]
    fn json_flag_is_global() {
        let a = run(["circword", "--json", "periods", "abaab"]);
        let b = run(["circword", "periods", "abaab", "--json"]);
        assert_eq!(a, b);
        assert_eq!(a.stdout, "[3,5]\n");
    }
}
