use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dcwords::lattice::DEFAULT_COVER_CAP;
use dcwords::{
    central_word, christoffel_lower, christoffel_upper, classify_christoffel, cover_relations,
    deflate, deflation_chain, deflation_sites, enumerate_dc, factorizations, inflate,
    inflation_chain, inflation_sites, is_balanced, is_central, is_convex, is_digitally_convex,
    is_lyndon, join, lyndon_factorization, meet, mfw_balanced, mfw_dc, mfw_of_word, parse_word,
    standard_factorization, ChristoffelClass, CountKind, CountTable, Direction, LetterOrder,
    MfwConstruction, Parikh, Site, Word,
};

mod render;
mod report;

use render::{Mark, RenderFormat, RenderSpec};
use report::{
    ChristoffelRecord, CountRecord, CountRow, CoverRecord, LatticeWord, SiteList, SiteRecord,
    WordList, WordReport,
};

/// Digitally convex binary words: Christoffel words, Lyndon factorizations,
/// convexity checks, minimal forbidden words, counts and lattice moves.
///
/// Words are strings over {0,1}; 0 is an east step, 1 a north step.
/// Positions are 0-based. Exit codes: 0 ok, 1 a check failed,
/// 2 usage or contract error, 3 size cap exceeded.
#[derive(Parser)]
#[command(name = "dcwords", version)]
struct Cli {
    /// Output format (render defaults to svg, everything else to text).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
    Ascii,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Lyndon,
    LyndonRev,
    Standard,
    Palindromic,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    Complement,
    Provencal,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Christoffel word with Parikh vector (A, B).
    Christoffel {
        a: usize,
        b: usize,
        #[arg(long, conflicts_with = "central")]
        upper: bool,
        /// Central word C with w = 0C1 (A, B coprime and positive).
        #[arg(long)]
        central: bool,
    },
    /// Run predicates on a word; with no flags, run all of them.
    Check {
        word: String,
        #[arg(long)]
        balanced: bool,
        #[arg(long)]
        convex_up: bool,
        #[arg(long)]
        convex_down: bool,
        #[arg(long)]
        lyndon: bool,
        #[arg(long)]
        central: bool,
        #[arg(long)]
        christoffel: bool,
        /// Letter order for the reported Lyndon factors.
        #[arg(long, default_value = "01", value_parser = parse_order)]
        order: LetterOrder,
    },
    /// Factorize a word.
    Factorize {
        word: String,
        #[arg(long, value_enum, default_value_t = Mode::Lyndon)]
        mode: Mode,
        /// Letter order for --mode lyndon.
        #[arg(long, default_value = "01", value_parser = parse_order)]
        order: LetterOrder,
    },
    /// Lattice of convex words: `A B enumerate|covers`, `meet|join U V`,
    /// `inflate|deflate W [POS]`, `chain-up|chain-down W`.
    Lattice {
        #[arg(required = true, num_args = 1..)]
        args: Vec<String>,
        /// Largest a+b accepted by enumerate and covers.
        #[arg(long, default_value_t = DEFAULT_COVER_CAP)]
        cap: usize,
    },
    /// Print a counting sequence for n = 0..=N_MAX (kinds: dc0, dc, balanced, mfw-dc).
    Count { kind: CountKind, n_max: usize },
    /// Minimal forbidden words.
    Mfw {
        #[command(subcommand)]
        target: MfwTarget,
    },
    /// Draw a word as a lattice path.
    Render {
        word: String,
        /// Draw the segment from the origin to the endpoint.
        #[arg(long)]
        segment: bool,
        /// Comma-separated subset of S, S', factor-boundaries.
        #[arg(long, value_delimiter = ',')]
        marks: Vec<Mark>,
        #[arg(long, default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..))]
        cell_size: u32,
    },
}

#[derive(Subcommand)]
enum MfwTarget {
    /// Minimal forbidden words of the factors of one word.
    Word {
        word: String,
        /// Longest forbidden word to report (default: |WORD| + 1, which is complete).
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Minimal forbidden words of length N of the convex language.
    Dc {
        n: usize,
        #[arg(long, value_enum, default_value_t = Construction::Complement)]
        construction: Construction,
    },
    /// Minimal forbidden words of length N of the balanced language.
    Balanced { n: usize },
}

fn parse_order(s: &str) -> Result<LetterOrder, String> {
    match s {
        "01" => Ok(LetterOrder::ZeroFirst),
        "10" => Ok(LetterOrder::OneFirst),
        _ => Err(format!("expected 01 or 10, got {s:?}")),
    }
}

enum Failure {
    Usage(String),
    Cap(String),
}

impl From<dcwords::Error> for Failure {
    fn from(e: dcwords::Error) -> Self {
        match e {
            dcwords::Error::CapExceeded { size, cap } => Failure::Cap(format!(
                "a+b = {size} exceeds the size cap {cap}; raise it with --cap"
            )),
            other => Failure::Usage(other.to_string()),
        }
    }
}

struct Output {
    stdout: String,
    ok: bool,
}

type Outcome = Result<Output, Failure>;

fn done(stdout: String) -> Outcome {
    Ok(Output { stdout, ok: true })
}

/// Text or JSON rendering of one result.
fn emit<T: Serialize>(format: Option<Format>, text: String, json: &T) -> Result<String, Failure> {
    match format.unwrap_or(Format::Text) {
        Format::Text => Ok(text),
        Format::Json => Ok(serde_json::to_string_pretty(json).expect("serializable") + "\n"),
        f => Err(Failure::Usage(format!(
            "--format {} only applies to render",
            f.to_possible_value()
                .expect("no skipped variants")
                .get_name()
        ))),
    }
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn words_text(words: &[Word]) -> String {
    lines(words.iter().map(Word::to_string))
}

fn word_list(words: &[Word]) -> WordList {
    WordList {
        words: words.iter().map(Word::to_string).collect(),
    }
}

fn joined(factors: &[Word]) -> String {
    let parts: Vec<String> = factors.iter().map(Word::to_string).collect();
    parts.join("·")
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Christoffel {
            a,
            b,
            upper,
            central,
        } => {
            let p = Parikh::new(a, b);
            let (variant, w) = if central {
                ("central", central_word(p)?)
            } else if upper {
                ("upper", christoffel_upper(p)?)
            } else {
                ("lower", christoffel_lower(p)?)
            };
            let record = ChristoffelRecord {
                parikh: [a, b],
                variant: variant.into(),
                word: w.to_string(),
            };
            done(emit(format, format!("{w}\n"), &record)?)
        }

        Command::Check {
            word,
            balanced,
            convex_up,
            convex_down,
            lyndon,
            central,
            christoffel,
            order,
        } => {
            let w = parse_word(&word)?;
            let all = !(balanced || convex_up || convex_down || lyndon || central || christoffel);
            let up = is_digitally_convex(&w, Direction::Upward);
            let down = is_digitally_convex(&w, Direction::Downward);
            let mut results: Vec<(&str, bool)> = Vec::new();
            let mut text = String::new();
            let mut want = |flag: bool, name: &'static str, value: bool| {
                if all || flag {
                    results.push((name, value));
                    text.push_str(&format!("{name}: {value}\n"));
                }
            };
            want(balanced, "balanced", is_balanced(&w));
            want(convex_up, "convex-up", up.is_convex());
            want(convex_down, "convex-down", down.is_convex());
            want(lyndon, "lyndon", is_lyndon(&w, LetterOrder::ZeroFirst));
            want(central, "central", is_central(&w));
            want(
                christoffel,
                "christoffel",
                classify_christoffel(&w) != ChristoffelClass::NotChristoffel,
            );
            for (flag, label, report) in [
                (convex_up, "witness", &up),
                (convex_down, "witness-down", &down),
            ] {
                if let (true, Some(x)) = (all || flag, &report.witness) {
                    text.push_str(&format!("{label}: {} [{},{})\n", x.factor, x.start, x.end));
                }
            }

            let factors = lyndon_factorization(&w, order).factors;
            let mut record = WordReport::new(&w, &factors);
            record.checks = results.iter().map(|&(k, v)| (k.to_string(), v)).collect();
            Ok(Output {
                stdout: emit(format, text, &record)?,
                ok: results.iter().all(|&(_, v)| v),
            })
        }

        Command::Factorize { word, mode, order } => {
            let w = parse_word(&word)?;
            let factors = match mode {
                Mode::Lyndon => lyndon_factorization(&w, order).factors,
                Mode::LyndonRev => lyndon_factorization(&w, LetterOrder::OneFirst).factors,
                Mode::Standard => {
                    let (u, v) = standard_factorization(&w)?;
                    vec![u, v]
                }
                Mode::Palindromic => {
                    let (p, q) = factorizations(&w)?.palindromic;
                    vec![p, q]
                }
            };
            let record = WordReport::new(&w, &factors);
            done(emit(format, format!("{}\n", joined(&factors)), &record)?)
        }

        Command::Lattice { args, cap } => lattice(format, args, cap),

        Command::Count { kind, n_max } => {
            let table = CountTable::build(kind, n_max);
            let rows: Vec<CountRow> = table
                .values
                .iter()
                .enumerate()
                .map(|(n, v)| CountRow {
                    n,
                    value: v.to_string(),
                })
                .collect();
            let text = lines(rows.iter().map(|r| format!("{} {}", r.n, r.value)));
            let record = CountRecord {
                kind: kind.name().into(),
                oeis: (kind == CountKind::Dc0).then(|| "A061255".into()),
                rows,
            };
            done(emit(format, text, &record)?)
        }

        Command::Mfw { target } => {
            let set = match target {
                MfwTarget::Word { word, max_len } => {
                    let w = parse_word(&word)?;
                    mfw_of_word(&w, max_len.unwrap_or(w.len() + 1))
                }
                MfwTarget::Dc { n, construction } => mfw_dc(
                    n,
                    match construction {
                        Construction::Complement => MfwConstruction::Complement,
                        Construction::Provencal => MfwConstruction::Provencal,
                    },
                ),
                MfwTarget::Balanced { n } => mfw_balanced(n),
            };
            let words: Vec<Word> = set.into_iter().collect();
            done(emit(format, words_text(&words), &word_list(&words))?)
        }

        Command::Render {
            word,
            segment,
            marks,
            cell_size,
        } => {
            let format = match format {
                None | Some(Format::Svg) => RenderFormat::Svg,
                Some(Format::Ascii | Format::Text) => RenderFormat::Ascii,
                Some(Format::Json) => {
                    return Err(Failure::Usage(
                        "render supports --format svg, ascii or text".into(),
                    ))
                }
            };
            let spec = RenderSpec {
                word: parse_word(&word)?,
                show_segment: segment,
                marks,
                format,
                cell_size,
            };
            done(render::render(&spec)?)
        }
    }
}

const ACTIONS: [&str; 8] = [
    "enumerate",
    "covers",
    "meet",
    "join",
    "inflate",
    "deflate",
    "chain-up",
    "chain-down",
];

fn number(s: &str) -> Result<usize, Failure> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("expected a non-negative integer, got {s:?}")))
}

fn lattice(format: Option<Format>, mut args: Vec<String>, cap: usize) -> Outcome {
    let Some(i) = args.iter().position(|a| ACTIONS.contains(&a.as_str())) else {
        return Err(Failure::Usage(format!(
            "lattice needs an action: {}",
            ACTIONS.join(", ")
        )));
    };
    let action = args.remove(i);
    let arity_error = |expected: &str| {
        Failure::Usage(format!(
            "lattice {action} expects {expected}, got {} arguments",
            args.len()
        ))
    };

    match action.as_str() {
        "enumerate" | "covers" => {
            let [a, b] = args.as_slice() else {
                return Err(arity_error("A B"));
            };
            let p = Parikh::new(number(a)?, number(b)?);
            if p.len() > cap {
                return Err(dcwords::Error::CapExceeded { size: p.len(), cap }.into());
            }
            if action == "enumerate" {
                let words = enumerate_dc(p);
                done(emit(format, words_text(&words), &word_list(&words))?)
            } else {
                let covers = cover_relations(p, cap)?;
                let pairs = |set: &std::collections::BTreeSet<(Word, Word)>| -> Vec<[String; 2]> {
                    set.iter()
                        .map(|(u, v)| [u.to_string(), v.to_string()])
                        .collect()
                };
                let text = lines(covers.inflation.iter().map(|(u, v)| format!("{u} -> {v}")));
                let record = CoverRecord {
                    parikh: [p.zeros, p.ones],
                    inflation: pairs(&covers.inflation),
                    dominance: pairs(&covers.dominance),
                };
                done(emit(format, text, &record)?)
            }
        }
        "meet" | "join" => {
            let [u, v] = args.as_slice() else {
                return Err(arity_error("U V"));
            };
            let (u, v) = (parse_word(u)?, parse_word(v)?);
            let w = if action == "meet" {
                meet(&u, &v)?
            } else {
                join(&u, &v)?
            };
            let convex_up = is_convex(&w, Direction::Upward);
            if !convex_up {
                eprintln!("warning: {w} is not digitally convex");
            }
            let record = LatticeWord {
                word: w.to_string(),
                convex_up,
            };
            done(emit(format, format!("{w}\n"), &record)?)
        }
        "inflate" | "deflate" => {
            let (w, position) = match args.as_slice() {
                [w] => (parse_word(w)?, None),
                [w, pos] => (parse_word(w)?, Some(number(pos)?)),
                _ => return Err(arity_error("W [POS]")),
            };
            let inflating = action == "inflate";
            if let Some(pos) = position {
                let r = if inflating {
                    inflate(&w, pos)?
                } else {
                    deflate(&w, pos)?
                };
                let record = LatticeWord {
                    word: r.to_string(),
                    convex_up: true,
                };
                return done(emit(format, format!("{r}\n"), &record)?);
            }
            let sites: Vec<Site> = if inflating {
                inflation_sites(&w)?
            } else {
                deflation_sites(&w)?
            };
            let records: Vec<SiteRecord> = sites
                .iter()
                .map(|s| SiteRecord {
                    position: s.position,
                    result: w.swapped(s.position).to_string(),
                })
                .collect();
            let text = lines(
                records
                    .iter()
                    .map(|r| format!("{} {}", r.position, r.result)),
            );
            let record = SiteList {
                word: w.to_string(),
                kind: if inflating { "inflation" } else { "deflation" }.into(),
                sites: records,
            };
            done(emit(format, text, &record)?)
        }
        _ => {
            let [w] = args.as_slice() else {
                return Err(arity_error("W"));
            };
            let w = parse_word(w)?;
            let chain = if action == "chain-up" {
                inflation_chain(&w)?
            } else {
                deflation_chain(&w)?
            };
            done(emit(format, words_text(&chain), &word_list(&chain))?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.stdout);
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Cap(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
