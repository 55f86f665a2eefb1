//! Command-line surface. Every verb reads its primary object from a file
//! argument or stdin and writes a deterministic text result to stdout.

use std::fs;
use std::io::Read;

use clap::{Parser, Subcommand, ValueEnum};

use crate::circuit::{
    circuit_to_word, invert_f_circuit, lift_identity_wire, permutation_parity, restrict_image_circuit,
    synthesize_even_permutation, word_to_circuit, AnyCircuit, Circuit, Parity, TernaryWord,
};
use crate::deciders::{circuits_equal, is_identity_circuit, is_maximally_extended};
use crate::error::{Error, Result};
use crate::factor::{factor_flp, factor_lpf, factor_sf, Factorization};
use crate::gadgets::{
    brute_force_count_sat, build_p_t, build_phi, build_phi_p0_q0, count_sat_via_rank, Cnf, TruthSet,
};
use crate::genword::GenWord;
use crate::order::{order, OrderResult};
use crate::subgroups::{in_f, in_lp, in_s_pam, in_t};
use crate::table::{Element, ElementTable};
use crate::words::{PrefixCode, Word};

#[derive(Parser, Debug)]
#[command(name = "thompson", about = "Thompson-Higman group elements, words and padded circuits")]
pub struct Cli {
    /// Alphabet size.
    #[arg(long, global = true, default_value_t = 2)]
    pub k: u8,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Sub {
    #[value(name = "F")]
    F,
    #[value(name = "T")]
    T,
    #[value(name = "lp")]
    Lp,
    /// The symmetric subgroup of a code, given with `--code`.
    #[value(name = "S")]
    S,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Mode {
    #[value(name = "lpF")]
    LpF,
    #[value(name = "Flp")]
    FLp,
    /// Symmetric-group factor for the code given with `--code`.
    #[value(name = "SF")]
    Sf,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GadgetKind {
    /// The code `P_T`.
    #[value(name = "code")]
    Code,
    /// The bijection from `P_T` onto the full level.
    #[value(name = "phi")]
    Phi,
    /// The bijection `{00,01,1}·A^n -> {0,10,11}·A^n`.
    #[value(name = "phi0")]
    Phi0,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Maximal extension of a table.
    Reduce {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// `a∘b`: apply `b` first.
    Compose { a: String, b: String },
    Invert {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Image of one word.
    Apply {
        #[arg(long)]
        word: String,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Subgroup membership.
    Member {
        #[arg(long, value_enum)]
        sub: Sub,
        /// Code words, space separated (for `--sub S`).
        #[arg(long)]
        code: Option<String>,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    Order {
        #[arg(long, default_value_t = 32)]
        max_depth: usize,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    Factor {
        #[arg(long, value_enum, default_value = "lpF")]
        mode: Mode,
        #[arg(long)]
        code: Option<String>,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Element of a generator word.
    EvalWord {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    WordLength {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    #[command(name = "word2circuit")]
    WordToCircuit {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    #[command(name = "circuit2word")]
    CircuitToWord {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Evaluate on the given ternary inputs, or tabulate every input.
    EvalCircuit {
        #[arg(long = "on")]
        on: Vec<String>,
        /// Print the computed table instead.
        #[arg(long)]
        table: bool,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    CircuitSize {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Inverse of an order-preserving circuit.
    InvertF {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Restriction with the full level as image code.
    RestrictImage {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Circuit for a permutation of `{0,1}^w` given as its image list.
    Synth {
        /// Lift odd permutations by one identity wire first.
        #[arg(long)]
        lift: bool,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    Parity {
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Counting gadgets from a truth set or DIMACS CNF.
    Gadget {
        #[arg(long, value_enum, default_value = "code")]
        kind: GadgetKind,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Rank of a word in a prefix code.
    Rank {
        #[arg(long)]
        word: String,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Number of satisfying assignments, read from a rank in `P_T`.
    CountSat {
        #[arg(long)]
        brute: bool,
        /// Input file (stdin when omitted).
        #[arg(short, long)]
        input: Option<String>,
    },
    /// Compare two tables or two circuits as group elements.
    Equal {
        a: String,
        b: Option<String>,
        /// Whether `a` computes the identity.
        #[arg(long, conflicts_with = "max_extension")]
        identity: bool,
        /// Whether `a` is the maximal extension of `b`.
        #[arg(long)]
        max_extension: bool,
    },
}

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `args` (including the program name) and run.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(stdout) => Outcome { code: 0, stdout, stderr: String::new() },
        Err(e) => Outcome { code: 1, stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Io<'_> {
    /// A file, or stdin for `None` or `-` (at most once).
    fn read(&mut self, path: Option<&str>) -> Result<String> {
        match path {
            Some(p) if p != "-" => fs::read_to_string(p).map_err(|e| Error::Parse(format!("{p}: {e}"))),
            _ => {
                if self.used {
                    return Err(Error::Parse("stdin can supply only one input".into()));
                }
                self.used = true;
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Error::Parse(format!("stdin: {e}")))?;
                Ok(s)
            }
        }
    }
}

fn element(text: &str, k: u8) -> Result<Element> {
    Ok(ElementTable::parse(text, k)?.reduce())
}

fn code_arg(code: &Option<String>, k: u8) -> Result<PrefixCode> {
    let text = code.as_deref().ok_or_else(|| Error::Parse("this option needs --code".into()))?;
    PrefixCode::parse(text, k)
}

fn bool_line(b: bool) -> String {
    format!("{b}\n")
}

fn factor_text(f: &Factorization) -> String {
    format!("# pi\n{}# f\n{}", f.pi.table().to_text(), f.f.table().to_text())
}

fn is_circuit(text: &str) -> bool {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    first.starts_with("circuit") || first.starts_with("logic")
}

fn bijective(text: &str) -> Result<Circuit> {
    Circuit::parse(text)
}

fn permutation(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
        .collect()
}

fn truth_set(text: &str) -> Result<TruthSet> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty()).unwrap_or("");
    if first.starts_with('p') || first.starts_with('c') {
        TruthSet::from_cnf(&Cnf::parse_dimacs(text)?)
    } else {
        TruthSet::parse(text)
    }
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<String> {
    let k = cli.k;
    if k < 2 {
        return Err(Error::BadArity(k));
    }
    let mut io = Io { stdin, used: false };
    Ok(match &cli.command {
        Command::Reduce { input } => element(&io.read(input.as_deref())?, k)?.table().to_text(),
        Command::Compose { a, b } => {
            let a = element(&io.read(Some(a))?, k)?;
            let b = element(&io.read(Some(b))?, k)?;
            if a.k() != b.k() {
                return Err(Error::BadArity(b.k()));
            }
            a.compose(&b).table().to_text()
        }
        Command::Invert { input } => element(&io.read(input.as_deref())?, k)?.invert().table().to_text(),
        Command::Apply { word, input } => {
            let e = element(&io.read(input.as_deref())?, k)?;
            format!("{}\n", e.apply(&Word::parse(word, e.k())?)?)
        }
        Command::Member { sub, code, input } => {
            let e = element(&io.read(input.as_deref())?, k)?;
            match sub {
                Sub::F => bool_line(in_f(&e)),
                Sub::T => bool_line(in_t(&e)),
                Sub::Lp => bool_line(in_lp(&e)),
                Sub::S => match in_s_pam(&e, &code_arg(code, e.k())?) {
                    Some(m) => format!("true m={m}\n"),
                    None => bool_line(false),
                },
            }
        }
        Command::Order { max_depth, input } => {
            let e = element(&io.read(input.as_deref())?, k)?;
            match order(&e, *max_depth) {
                OrderResult::Finite { order, witness } => {
                    let words: Vec<String> = witness.words().iter().map(|w| w.to_string()).collect();
                    format!("finite {order}\nwitness {}\n", words.join(" "))
                }
                OrderResult::Infinite { x, l, z } => format!("infinite x={x} l={l} z={z}\n"),
                OrderResult::Undecided => "undecided\n".into(),
            }
        }
        Command::Factor { mode, code, input } => {
            let e = element(&io.read(input.as_deref())?, k)?;
            let f = match mode {
                Mode::LpF => factor_lpf(&e),
                Mode::FLp => factor_flp(&e),
                Mode::Sf => factor_sf(&e, &code_arg(code, e.k())?),
            };
            factor_text(&f)
        }
        Command::EvalWord { input } => GenWord::parse(&io.read(input.as_deref())?)?.eval(k)?.table().to_text(),
        Command::WordLength { input } => {
            format!("{}\n", GenWord::parse(&io.read(input.as_deref())?)?.word_length())
        }
        Command::WordToCircuit { input } => word_to_circuit(&GenWord::parse(&io.read(input.as_deref())?)?)?.to_text(),
        Command::CircuitToWord { input } => {
            let text = io.read(input.as_deref())?;
            if text.trim_start().starts_with("logic") {
                return Err(Error::NotBijectiveGate("netlists have no word form".into()));
            }
            format!("{}\n", circuit_to_word(&bijective(&text)?))
        }
        Command::EvalCircuit { on, table, input } => {
            let c = AnyCircuit::parse(&io.read(input.as_deref())?)?;
            if *table {
                crate::deciders::circuit_table(&c)?.to_text()
            } else if on.is_empty() {
                if c.in_width() > 10 {
                    return Err(Error::WidthTooLarge(c.in_width()));
                }
                TernaryWord::all(c.in_width()).map(|x| Ok(format!("{x} -> {}\n", c.eval(&x)?))).collect::<Result<String>>()?
            } else {
                on.iter().map(|x| Ok(format!("{}\n", c.eval(&TernaryWord::parse(x)?)?))).collect::<Result<String>>()?
            }
        }
        Command::CircuitSize { input } => format!("{}\n", AnyCircuit::parse(&io.read(input.as_deref())?)?.size()),
        Command::InvertF { input } => invert_f_circuit(&bijective(&io.read(input.as_deref())?)?)?.to_text(),
        Command::RestrictImage { input } => restrict_image_circuit(&bijective(&io.read(input.as_deref())?)?).to_text(),
        Command::Synth { lift, input } => {
            let mut p = permutation(&io.read(input.as_deref())?)?;
            if *lift && permutation_parity(&p)? == Parity::Odd {
                p = lift_identity_wire(&p)?;
            }
            synthesize_even_permutation(&p)?.to_text()
        }
        Command::Parity { input } => match permutation_parity(&permutation(&io.read(input.as_deref())?)?)? {
            Parity::Even => "even\n".into(),
            Parity::Odd => "odd\n".into(),
        },
        Command::Gadget { kind, input } => {
            let ts = truth_set(&io.read(input.as_deref())?)?;
            match kind {
                GadgetKind::Code => build_p_t(&ts).to_text(),
                GadgetKind::Phi => build_phi(&ts).to_text(),
                GadgetKind::Phi0 => build_phi_p0_q0(&ts).to_text(),
            }
        }
        Command::Rank { word, input } => {
            let p = PrefixCode::parse(&io.read(input.as_deref())?, k)?;
            format!("{}\n", p.rank(&Word::parse(word, k)?)?)
        }
        Command::CountSat { brute, input } => {
            let ts = truth_set(&io.read(input.as_deref())?)?;
            format!("{}\n", if *brute { brute_force_count_sat(&ts) } else { count_sat_via_rank(&ts) })
        }
        Command::Equal { a, b, identity, max_extension } => {
            let ta = io.read(Some(a))?;
            if *identity {
                return Ok(bool_line(if is_circuit(&ta) {
                    is_identity_circuit(&AnyCircuit::parse(&ta)?)?
                } else {
                    element(&ta, k)?.is_identity()
                }));
            }
            let b = b.as_deref().ok_or_else(|| Error::Parse("equal needs a second input".into()))?;
            let tb = io.read(Some(b))?;
            match (is_circuit(&ta), is_circuit(&tb)) {
                (true, true) => {
                    let (ca, cb) = (AnyCircuit::parse(&ta)?, AnyCircuit::parse(&tb)?);
                    bool_line(if *max_extension { is_maximally_extended(&ca, &cb)? } else { circuits_equal(&ca, &cb)? })
                }
                (false, false) => {
                    let (xa, xb) = (ElementTable::parse(&ta, k)?, ElementTable::parse(&tb, k)?);
                    bool_line(if *max_extension { &xa == xb.reduce().table() } else { xa.reduce() == xb.reduce() })
                }
                _ => return Err(Error::Parse("compare two tables or two circuits".into())),
            }
        }
    })
}
