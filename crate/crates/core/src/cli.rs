//! Command-line front end. Exit codes: 0 when the command succeeds and the
//! checked property holds, 1 when the property fails, 2 when the input
//! could not be read or a capacity limit was hit.

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::builtin::builtin_by_name;
use crate::dfa::Dfa;
use crate::dot::{export_dot, DotStyle};
use crate::enumerate::{enumerate_standardized, EnumerationConfig, Filter, Mode, DEFAULT_BUDGET};
use crate::error::Error;
use crate::expand::{search_expanding_word, expands};
use crate::io::{parse_automaton, render_automaton};
use crate::orbit::{orbit_digraph, restricted_orbit_digraph};
use crate::reach::{reach_via_expansion, shortest_reset_word, verify_don};
use crate::lattice::{lattice_limit, SubsetLattice};
use crate::report::{analyze, FORMAT};
use crate::rystsov::{restricted_rystsov_digraph, rystsov_digraph_any};
use crate::search::SearchOutcome;
use crate::state_set::parse_state_list;

#[derive(Parser, Debug)]
#[command(name = "creach", version, about = "Reachability analysis of binary circular automata")]
struct Cli {
    /// Emit a structured JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Standardize and summarize an automaton.
    Analyze {
        /// Automaton file, `-` for stdin, or a built-in name.
        file: String,
        /// Skip the subset-lattice check.
        #[arg(long)]
        no_don: bool,
    },
    /// Build one of the digraphs.
    Digraph {
        file: String,
        #[arg(long, value_enum)]
        kind: DigraphKind,
        /// Also write Graphviz output to this path.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Search for the shortlex-least expanding word of a subset.
    Expand {
        file: String,
        #[arg(long)]
        set: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Find a word reaching a subset from the full state set.
    Reach {
        file: String,
        #[arg(long)]
        set: String,
        #[arg(long, value_enum, default_value = "bfs")]
        method: ReachMethod,
        /// Per-step bound tried first by the expansion method.
        #[arg(long)]
        step_cap: Option<usize>,
    },
    /// Check the n(n-k) bound over every reachable subset.
    VerifyDon { file: String },
    /// Find a shortest reset word.
    Sync { file: String },
    /// Print a built-in automaton in file format.
    Example { name: String },
    /// Enumerate standardized automata.
    Enumerate {
        /// Number of states.
        #[arg(long)]
        n: usize,
        /// h0-full, perfectly-reachable, has-non-n-expandable-subset or
        /// don-violation; repeat to require all of them.
        #[arg(long = "filter")]
        filters: Vec<Filter>,
        /// Seed for sampling.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Generate every automaton instead of sampling.
        #[arg(long)]
        exhaustive: bool,
        /// Number of random draws when sampling.
        #[arg(long, default_value_t = 1000)]
        count: usize,
        /// Refuse an exhaustive run over more automata than this.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
        /// Automata (files or built-in names) placed ahead of the random draws.
        #[arg(long)]
        include: Vec<String>,
        /// Print only the number of matches.
        #[arg(long)]
        count_only: bool,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DigraphKind {
    Orbit,
    RestrictedOrbit,
    Rystsov,
    RestrictedRystsov,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ReachMethod {
    Bfs,
    Expansion,
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
    json: bool,
}

enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Runs the command line `argv` (including the program name).
pub fn run_cli<I, T>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let mut io = Io {
        stdin,
        out,
        err,
        json: cli.json,
    };
    match dispatch(cli.command, &mut io) {
        Ok(code) => code,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            2
        }
    }
}

fn load(source: &str, io: &mut Io) -> Result<Dfa, Failure> {
    if source == "-" {
        let mut text = String::new();
        io.stdin.read_to_string(&mut text)?;
        return Ok(parse_automaton(&text)?);
    }
    let path = Path::new(source);
    if path.exists() {
        let text = std::fs::read_to_string(path)?;
        return parse_automaton(&text).map_err(|e| Failure::Input(format!("{source}: {e}")));
    }
    builtin_by_name(source).map_err(|_| {
        Failure::Input(format!("`{source}` is neither a readable file nor a built-in example"))
    })
}

fn emit(io: &mut Io, text: &str, doc: Value) -> std::io::Result<()> {
    if io.json {
        let mut doc = doc;
        if let Value::Object(map) = &mut doc {
            map.insert("format".into(), json!(FORMAT));
        }
        writeln!(io.out, "{}", serde_json::to_string_pretty(&doc).expect("json"))
    } else {
        write!(io.out, "{text}")
    }
}

fn dispatch(cmd: Command, io: &mut Io) -> CmdResult {
    match cmd {
        Command::Analyze { file, no_don } => {
            let dfa = load(&file, io)?;
            match analyze(&dfa, !no_don) {
                Ok(report) => {
                    let doc = serde_json::to_value(&report).expect("json");
                    emit(io, &report.to_string(), doc)?;
                    Ok(0)
                }
                Err(
                    e @ (Error::NotCircular
                    | Error::NoDefectOneLetter
                    | Error::ExcludedNotSingleton(_)
                    | Error::DuplicateNotSingleton(_)),
                ) => {
                    let text = format!("not standardizable: {e}\n");
                    emit(io, &text, json!({"command": "analyze", "standardizable": false, "reason": e.to_string()}))?;
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Digraph { file, kind, dot } => {
            let dfa = load(&file, io)?;
            let g = match kind {
                DigraphKind::Orbit => orbit_digraph(&dfa)?,
                DigraphKind::RestrictedOrbit => restricted_orbit_digraph(&dfa)?,
                DigraphKind::Rystsov => rystsov_digraph_any(&dfa)?,
                DigraphKind::RestrictedRystsov => restricted_rystsov_digraph(&dfa),
            };
            let name = format!("{kind:?}").to_lowercase();
            let dot_text = export_dot(&g, &DotStyle { name, ..DotStyle::default() });
            if let Some(path) = dot {
                std::fs::write(&path, &dot_text)?;
            }
            let sccs = g.sccs();
            let edges: Vec<Value> = g
                .edges()
                .map(|(s, t, l)| json!({"source": s, "target": t, "label": l}))
                .collect();
            let text = format!(
                "{dot_text}// {} edges, {} strongly connected components{}\n",
                g.edge_count(),
                sccs.len(),
                if sccs.len() == 1 { " (strongly connected)" } else { "" }
            );
            let doc = json!({
                "command": "digraph",
                "vertices": g.vertex_count(),
                "edges": edges,
                "sccs": sccs,
                "strongly_connected": g.is_strongly_connected(),
            });
            emit(io, &text, doc)?;
            Ok(0)
        }
        Command::Expand { file, set, max_len } => {
            let dfa = load(&file, io)?;
            let s = parse_state_list(dfa.n(), &set)?;
            let outcome = search_expanding_word(&dfa, &s, Some(max_len))?;
            let (text, doc, code) = match outcome {
                SearchOutcome::Found(w) => {
                    let r = expands(&dfa, &w, &s)?.expect("search result expands");
                    (
                        format!("{w}\nlength {}, preimage {}\n", w.len(), r.preimage_witness),
                        json!({"command": "expand", "set": s, "word": w, "length": w.len(), "preimage": r.preimage_witness}),
                        0,
                    )
                }
                other => (
                    format!(
                        "not {max_len}-expandable{}\n",
                        if other == SearchOutcome::Exhausted { " (transition monoid exhausted, not expandable at all)" } else { "" }
                    ),
                    json!({"command": "expand", "set": s, "word": null, "max_len": max_len, "monoid_exhausted": other == SearchOutcome::Exhausted}),
                    1,
                ),
            };
            emit(io, &text, doc)?;
            Ok(code)
        }
        Command::Reach { file, set, method, step_cap } => {
            let dfa = load(&file, io)?;
            let s = parse_state_list(dfa.n(), &set)?;
            if s.is_empty() {
                return Err(Error::EmptySubset.into());
            }
            match method {
                ReachMethod::Bfs => {
                    let lattice = SubsetLattice::explore(&dfa, lattice_limit())?;
                    match lattice.word_to(&s) {
                        Some(w) => {
                            let text = format!("{w}\nlength {}\n", w.len());
                            emit(io, &text, json!({"command": "reach", "method": "bfs", "set": s, "word": w, "length": w.len()}))?;
                            Ok(0)
                        }
                        None => {
                            emit(io, "unreachable\n", json!({"command": "reach", "method": "bfs", "set": s, "word": null}))?;
                            Ok(1)
                        }
                    }
                }
                ReachMethod::Expansion => {
                    match reach_via_expansion(&dfa, &s, step_cap.unwrap_or(dfa.n())) {
                        Ok(trace) => {
                            let mut text = String::new();
                            for st in &trace.steps {
                                text += &format!("{} <- {} via {}\n", st.set, st.expanded, st.word);
                            }
                            let w = &trace.final_word;
                            text += &format!("{w}\nlength {}, bound {}\n", w.len(), dfa.n() * (dfa.n() - s.len()));
                            let doc = json!({"command": "reach", "method": "expansion", "trace": trace, "length": w.len()});
                            emit(io, &text, doc)?;
                            Ok(0)
                        }
                        Err(Error::ExpansionStuck(stuck)) => {
                            let text = format!("unreachable: no word expands {stuck}\n");
                            emit(io, &text, json!({"command": "reach", "method": "expansion", "set": s, "stuck": stuck}))?;
                            Ok(1)
                        }
                        Err(e) => Err(e.into()),
                    }
                }
            }
        }
        Command::VerifyDon { file } => {
            let dfa = load(&file, io)?;
            let report = verify_don(&dfa)?;
            let mut text = String::new();
            for s in &report.per_size {
                let worst = s.worst_length.map_or("-".to_string(), |w| w.to_string());
                text += &format!("k={:<3} reachable {}/{}  longest {worst}  bound {}\n", s.k, s.reachable, s.total, s.bound);
            }
            for v in report.violations.iter().take(20) {
                text += &format!("violation: {} needs {} > {}\n", v.set, v.length, v.bound);
            }
            if !report.unreachable.is_empty() {
                text += &format!("{} unreachable subsets (not completely reachable)\n", report.unreachable.len());
            }
            text += if report.violations.is_empty() { "no violations\n" } else { "violations found\n" };
            let code = i32::from(!report.violations.is_empty());
            let doc = json!({"command": "verify-don", "holds": report.violations.is_empty(), "report": report});
            emit(io, &text, doc)?;
            Ok(code)
        }
        Command::Sync { file } => {
            let dfa = load(&file, io)?;
            match shortest_reset_word(&dfa) {
                Some(r) => {
                    let image = dfa.image(&dfa.all_states(), &r.word)?;
                    let text = format!(
                        "{}\nlength {}{}, image {image}\n",
                        r.word,
                        r.word.len(),
                        if r.minimal { " (shortest)" } else { " (greedy, not necessarily shortest)" }
                    );
                    emit(io, &text, json!({"command": "sync", "synchronizing": true, "reset": r, "length": r.word.len(), "image": image}))?;
                    Ok(0)
                }
                None => {
                    emit(io, "not synchronizing\n", json!({"command": "sync", "synchronizing": false}))?;
                    Ok(1)
                }
            }
        }
        Command::Example { name } => {
            let dfa = builtin_by_name(&name)?;
            let text = render_automaton(&dfa) + "\n";
            let doc: Value = serde_json::from_str(&text).expect("rendered json");
            if io.json {
                writeln!(io.out, "{}", serde_json::to_string_pretty(&doc).expect("json"))?;
            } else {
                write!(io.out, "{text}")?;
            }
            Ok(0)
        }
        Command::Enumerate { n, filters, seed, exhaustive, count, budget, include, count_only } => {
            let include = include
                .iter()
                .map(|source| load(source, io))
                .collect::<Result<Vec<_>, _>>()?;
            let mode = if exhaustive {
                Mode::Exhaustive { budget }
            } else {
                Mode::Sampled { count, seed, include }
            };
            let config = EnumerationConfig { n, filters, mode };
            let mut matches = 0usize;
            let mut lines = Vec::new();
            for item in enumerate_standardized(&config)? {
                let dfa = item?;
                matches += 1;
                if !count_only {
                    if io.json {
                        lines.push(dfa.action(crate::Letter::A).to_vec());
                    } else {
                        writeln!(io.out, "{}", render_automaton(&dfa))?;
                    }
                }
            }
            if io.json {
                let doc = json!({"command": "enumerate", "n": n, "matches": matches, "a_tables": lines});
                emit(io, "", doc)?;
            } else {
                writeln!(io.err, "{matches} automata")?;
                if count_only {
                    writeln!(io.out, "{matches}")?;
                }
            }
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut argv = vec!["creach"];
        argv.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run_cli(argv, &mut std::io::empty(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["expand", "E12", "--bogus"]).0, 2);
        assert_eq!(run(&["analyze", "no-such-thing"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn example_round_trips() {
        let (code, out, _) = run(&["example", "e12"]);
        assert_eq!(code, 0);
        assert_eq!(parse_automaton(&out).unwrap(), builtin_by_name("E12").unwrap());
    }
}
