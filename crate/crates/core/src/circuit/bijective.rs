//! Bijective `{0,1,⊥}` circuits: a declared input code followed by gates,
//! each gate a wire swap `τ_{i,i+1}` or a padded lowered generator. The
//! restriction each gate applies is fixed by the code reaching it.

use std::fmt::Write as _;

use super::ternary::{PaddedFunction, TernaryWord};
use crate::error::{Error, Result};
use crate::genword::{Atom, GenWord, Wrap};
use crate::gens::{lower, lowering_conjugator, tau_word, Generator};
use crate::table::{Element, ElementTable};
use crate::words::{PrefixCode, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Gate {
    /// `τ_{i,i+1}`, 1-based.
    Swap(usize),
    /// `(γ)_d` for a generator atom `γ`.
    Apply { atom: Atom, d: usize },
}

impl Gate {
    pub fn apply(gen: Generator, d: usize) -> Gate {
        Gate::Apply { atom: Atom::plain(gen), d }
    }

    pub fn element(&self) -> Result<Element> {
        match self {
            Gate::Swap(i) => Generator::Tau(*i, i + 1).element(2),
            Gate::Apply { atom, d } => Ok(lower(&atom.element(2)?, *d)),
        }
    }

    fn describe(&self) -> String {
        match self {
            Gate::Swap(i) => format!("tau {i}"),
            Gate::Apply { atom, d } => format!("gate {atom} low={d}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stage {
    pub gate: Gate,
    pub fun: PaddedFunction,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Circuit {
    input: PrefixCode,
    stages: Vec<Stage>,
}

impl Circuit {
    /// Propagate `input` through the gates; each gate's domain code must be
    /// refined by the code reaching it.
    pub fn new(input: PrefixCode, gates: Vec<Gate>) -> Result<Circuit> {
        if input.k() != 2 || !input.is_maximal() {
            return Err(Error::InvalidCode("circuit input must be a maximal binary code".into()));
        }
        let mut code = input.clone();
        let mut width = code.max_len();
        let mut stages = Vec::with_capacity(gates.len());
        for gate in gates {
            let e = gate.element()?;
            if !code.refines(&e.dom_code()) {
                return Err(Error::NotBijectiveGate(format!("{} on code of width {width}", gate.describe())));
            }
            let t = e.restrict_to_domain(&code)?;
            code = t.im_code();
            let out = code.max_len();
            stages.push(Stage { gate, fun: PaddedFunction::new(t, width, out)? });
            width = out;
        }
        Ok(Circuit { input, stages })
    }

    pub fn identity(input: PrefixCode) -> Result<Circuit> {
        Circuit::new(input, Vec::new())
    }

    pub fn input_code(&self) -> &PrefixCode {
        &self.input
    }

    pub fn output_code(&self) -> PrefixCode {
        match self.stages.last() {
            Some(s) => s.fun.table().im_code(),
            None => self.input.clone(),
        }
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn gates(&self) -> impl Iterator<Item = &Gate> {
        self.stages.iter().map(|s| &s.gate)
    }

    pub fn in_width(&self) -> usize {
        self.input.max_len()
    }

    pub fn out_width(&self) -> usize {
        self.stages.last().map_or(self.in_width(), |s| s.fun.n())
    }

    pub fn gate_count(&self) -> usize {
        self.stages.len()
    }

    /// Gates plus wires: the input wires and every output signal of every
    /// gate.
    pub fn size(&self) -> usize {
        self.gate_count() + self.in_width() + self.stages.iter().map(|s| s.fun.n()).sum::<usize>()
    }

    pub fn eval(&self, x: &TernaryWord) -> Result<TernaryWord> {
        if x.width() != self.in_width() {
            return Err(Error::WidthMismatch { expected: self.in_width(), got: x.width() });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &TernaryWord) -> TernaryWord {
        if self.stages.is_empty() {
            return match x.unpad() {
                Some(p) if self.input.contains(&p) => x.clone(),
                _ => TernaryWord::bots(x.width()),
            };
        }
        let mut cur = x.clone();
        for s in &self.stages {
            cur = s.fun.eval_unchecked(&cur);
        }
        cur
    }

    /// The table `P -> Q` the circuit computes on its input code.
    pub fn table(&self) -> ElementTable {
        let pairs = self
            .input
            .words()
            .iter()
            .map(|p| {
                let mut y = p.clone();
                for s in &self.stages {
                    y = s.fun.table().apply(&y).expect("codes chain");
                }
                (p.clone(), y)
            })
            .collect();
        ElementTable::new(2, pairs).expect("gates are bijections")
    }

    pub fn element(&self) -> Element {
        self.table().reduce()
    }

    /// `circuit in=<w> out=<w'>`, a `code` line, then one line per gate.
    pub fn to_text(&self) -> String {
        let mut s = format!("circuit in={} out={}\ncode", self.in_width(), self.out_width());
        for w in self.input.words() {
            write!(s, " {w}").unwrap();
        }
        s.push('\n');
        for st in &self.stages {
            match &st.gate {
                Gate::Swap(i) => writeln!(s, "tau {i}").unwrap(),
                Gate::Apply { atom, d } => writeln!(s, "gate {atom} low={d} width={}", st.fun.n()).unwrap(),
            }
        }
        s
    }

    pub fn parse(text: &str) -> Result<Circuit> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty circuit".into()))?;
        let (w_in, w_out) = parse_header(header)?;
        let mut code = Vec::new();
        let mut gates = Vec::new();
        let mut widths = Vec::new();
        for line in lines {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("code") => {
                    for w in toks {
                        code.push(Word::parse(w, 2)?);
                    }
                }
                Some("tau") => {
                    let i: usize = toks
                        .next()
                        .and_then(|t| t.parse().ok())
                        .filter(|&i| i >= 1)
                        .ok_or_else(|| Error::Parse(format!("bad swap line {line:?}")))?;
                    gates.push(Gate::Swap(i));
                    widths.push(None);
                }
                Some("gate") => {
                    let atom_text = toks.next().ok_or_else(|| Error::Parse(format!("missing gate in {line:?}")))?;
                    let word = GenWord::parse(atom_text)?;
                    let [atom] = <[Atom; 1]>::try_from(word.atoms)
                        .map_err(|_| Error::Parse(format!("one generator per gate line: {line:?}")))?;
                    let mut d = 0;
                    let mut width = None;
                    for kv in toks {
                        let (k, v) = kv.split_once('=').ok_or_else(|| Error::Parse(format!("bad field {kv:?}")))?;
                        let v: usize = v.parse().map_err(|_| Error::Parse(format!("bad number in {kv:?}")))?;
                        match k {
                            "low" => d = v,
                            "width" => width = Some(v),
                            _ => return Err(Error::Parse(format!("unknown field {k:?}"))),
                        }
                    }
                    gates.push(Gate::Apply { atom, d });
                    widths.push(width);
                }
                _ => return Err(Error::Parse(format!("unrecognised circuit line {line:?}"))),
            }
        }
        if code.is_empty() {
            code = vec![Word::empty()];
        }
        let c = Circuit::new(PrefixCode::new(2, code)?, gates)?;
        if c.in_width() != w_in {
            return Err(Error::WidthMismatch { expected: w_in, got: c.in_width() });
        }
        if c.out_width() != w_out {
            return Err(Error::WidthMismatch { expected: w_out, got: c.out_width() });
        }
        for (st, w) in c.stages.iter().zip(widths) {
            if let Some(w) = w {
                if w != st.fun.n() {
                    return Err(Error::WidthMismatch { expected: w, got: st.fun.n() });
                }
            }
        }
        Ok(c)
    }
}

pub(crate) fn parse_header(line: &str) -> Result<(usize, usize)> {
    let mut toks = line.split_whitespace();
    toks.next();
    let mut w_in = None;
    let mut w_out = None;
    for kv in toks {
        match kv.split_once('=') {
            Some(("in", v)) => w_in = v.parse().ok(),
            Some(("out", v)) => w_out = v.parse().ok(),
            _ => return Err(Error::Parse(format!("bad header field {kv:?}"))),
        }
    }
    match (w_in, w_out) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::Parse(format!("header needs in= and out=: {line:?}"))),
    }
}

/// Restrictions `α_1, …, α_n` of `a_1, …, a_n` (listed in the order they
/// act) with `domC(α_{i+1}) = imC(α_i)` and every word of length at most
/// `n·ℓ`, `ℓ` the longest word in the given tables.
pub fn common_refinement(tables: &[ElementTable]) -> Vec<ElementTable> {
    let ell = tables.iter().map(|t| t.max_word_len()).max().unwrap_or(0);
    let mut out: Vec<ElementTable> = Vec::with_capacity(tables.len());
    for a in tables {
        if let Some(last) = out.last() {
            let code = last.im_code();
            if code.min_len() < ell {
                // lengthen short words of the interface to ℓ and pull the
                // suffixes back through the chain
                let mut words = Vec::new();
                for y in code.words() {
                    if y.len() < ell {
                        words.extend(crate::words::level(2, ell - y.len()).into_iter().map(|s| y.concat(&s)));
                    } else {
                        words.push(y.clone());
                    }
                }
                let mut target = PrefixCode::new(2.max(a.k()), words).expect("refinement of a code");
                for t in out.iter_mut().rev() {
                    *t = t.restrict_to_image(&target).expect("target refines the image");
                    target = t.dom_code();
                }
            }
            let code = out.last().unwrap().im_code();
            out.push(a.restrict_to_domain(&code).expect("interface words are at least ℓ long"));
        } else {
            out.push(a.clone());
        }
    }
    out
}

/// Gates for one word symbol, in the order they act.
fn atom_gates(atom: &Atom) -> Vec<Gate> {
    match (atom.gen, atom.wraps.last()) {
        (Generator::Tau(i, j), None) => {
            let mut g: Vec<Gate> = (i..j).map(Gate::Swap).collect();
            g.extend((i..j - 1).rev().map(Gate::Swap));
            g
        }
        (_, Some(Wrap::Low(d))) => {
            let mut inner = atom.clone();
            inner.wraps.pop();
            vec![Gate::Apply { atom: inner, d: *d }]
        }
        _ => vec![Gate::Apply { atom: atom.clone(), d: 0 }],
    }
}

/// One gate per symbol (transpositions become adjacent swaps), on the input
/// code that lets all restrictions chain.
pub fn word_to_circuit(w: &GenWord) -> Result<Circuit> {
    let gates: Vec<Gate> = w.atoms.iter().rev().flat_map(atom_gates).collect();
    let tables = gates.iter().map(|g| g.element().map(Element::into_table)).collect::<Result<Vec<_>>>()?;
    let chain = common_refinement(&tables);
    let input = chain.first().map_or_else(|| PrefixCode::root(2), |t| t.dom_code());
    Circuit::new(input, gates)
}

/// A word computing the same element. Lowered length-preserving gates are
/// written as transposition conjugates; other lowered gates stay wrapped.
pub fn circuit_to_word(c: &Circuit) -> GenWord {
    let mut atoms = Vec::new();
    for gate in c.gates().collect::<Vec<_>>().into_iter().rev() {
        match gate {
            Gate::Swap(i) => atoms.push(Atom::plain(Generator::Tau(*i, i + 1))),
            Gate::Apply { atom, d: 0 } => atoms.push(atom.clone()),
            Gate::Apply { atom, d } if atom.wraps.is_empty() && atom.gen.is_length_preserving() => {
                let l = atom.gen.element(2).map_or(0, |e| e.max_word_len());
                let taus = tau_word(&lowering_conjugator(*d, l));
                atoms.extend(taus.iter().rev().map(|&t| Atom::plain(t)));
                atoms.push(atom.clone());
                atoms.extend(taus.iter().map(|&t| Atom::plain(t)));
            }
            Gate::Apply { atom, d } => {
                let mut a = atom.clone();
                a.wraps.push(Wrap::Low(*d));
                atoms.push(a);
            }
        }
    }
    GenWord::new(atoms)
}
