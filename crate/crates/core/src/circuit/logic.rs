//! General `{0,1,⊥}` netlists: fixed-arity gates of fan-in at most three and
//! inlined copies of bijective circuits. Gates read any wire directly.

use std::fmt::{self, Write as _};

use super::bijective::{parse_header, Circuit};
use super::ternary::{TernaryWord, Trit};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Op {
    Const(Trit),
    /// `a = ⊥`.
    IsBot(usize),
    /// `a ≠ ⊥`.
    IsBit(usize),
    /// `a = 0`.
    IsZero(usize),
    /// `a ≠ ⊥` and `b = ⊥`: the bit prefix ends at `a`.
    End(usize, usize),
    /// `(a, b) = (⊥, bit)` or `acc = 1`.
    BadOr(usize, usize, usize),
    Or(usize, usize),
    /// `a = 1` and `b ≠ 1`.
    AndNot(usize, usize),
    /// `a` unless it is `⊥`, then `b`.
    Merge(usize, usize),
    /// `a` if `s = 1`, else `b`.
    Mux(usize, usize, usize),
    /// `a` if `s ≠ ⊥`, else `b`.
    BitMux(usize, usize, usize),
    /// `a` if `s = 1`, else `⊥`.
    Mask(usize, usize),
    /// `merge(a, b)` if `s = 1`, else `⊥`.
    Select(usize, usize, usize),
    /// Dictionary comparison step with `⊥ < 0 < 1`: the state is `⊥` while
    /// equal, then `0` (less) or `1` (greater) for good.
    Cmp(usize, usize, usize),
}

fn flag(b: bool) -> Trit {
    if b {
        Trit::One
    } else {
        Trit::Zero
    }
}

impl Op {
    fn args(&self) -> Vec<usize> {
        use Op::*;
        match *self {
            Const(_) => vec![],
            IsBot(a) | IsBit(a) | IsZero(a) => vec![a],
            End(a, b) | Or(a, b) | AndNot(a, b) | Merge(a, b) | Mask(a, b) => vec![a, b],
            BadOr(a, b, c) | Mux(a, b, c) | BitMux(a, b, c) | Select(a, b, c) | Cmp(a, b, c) => vec![a, b, c],
        }
    }

    fn name(&self) -> &'static str {
        use Op::*;
        match self {
            Const(_) => "const",
            IsBot(_) => "isbot",
            IsBit(_) => "isbit",
            IsZero(_) => "iszero",
            End(..) => "end",
            BadOr(..) => "bador",
            Or(..) => "or",
            AndNot(..) => "andnot",
            Merge(..) => "merge",
            Mux(..) => "mux",
            BitMux(..) => "bitmux",
            Mask(..) => "mask",
            Select(..) => "select",
            Cmp(..) => "cmp",
        }
    }

    fn from_parts(name: &str, a: &[usize], c: Option<Trit>) -> Result<Op> {
        use Op::*;
        let bad = || Error::Parse(format!("wrong operands for {name}"));
        Ok(match (name, a) {
            ("const", []) => Const(c.ok_or_else(bad)?),
            ("isbot", &[x]) => IsBot(x),
            ("isbit", &[x]) => IsBit(x),
            ("iszero", &[x]) => IsZero(x),
            ("end", &[x, y]) => End(x, y),
            ("bador", &[x, y, z]) => BadOr(x, y, z),
            ("or", &[x, y]) => Or(x, y),
            ("andnot", &[x, y]) => AndNot(x, y),
            ("merge", &[x, y]) => Merge(x, y),
            ("mux", &[x, y, z]) => Mux(x, y, z),
            ("bitmux", &[x, y, z]) => BitMux(x, y, z),
            ("mask", &[x, y]) => Mask(x, y),
            ("select", &[x, y, z]) => Select(x, y, z),
            ("cmp", &[x, y, z]) => Cmp(x, y, z),
            _ => return Err(bad()),
        })
    }

    fn eval(&self, v: &[Trit]) -> Trit {
        use Op::*;
        use Trit::*;
        match *self {
            Const(t) => t,
            IsBot(a) => flag(v[a] == Bot),
            IsBit(a) => flag(v[a] != Bot),
            IsZero(a) => flag(v[a] == Zero),
            End(a, b) => flag(v[a] != Bot && v[b] == Bot),
            BadOr(a, b, c) => flag((v[a] == Bot && v[b] != Bot) || v[c] == One),
            Or(a, b) => flag(v[a] == One || v[b] == One),
            AndNot(a, b) => flag(v[a] == One && v[b] != One),
            Merge(a, b) => {
                if v[a] != Bot {
                    v[a]
                } else {
                    v[b]
                }
            }
            Mux(s, a, b) => {
                if v[s] == One {
                    v[a]
                } else {
                    v[b]
                }
            }
            BitMux(s, a, b) => {
                if v[s] != Bot {
                    v[a]
                } else {
                    v[b]
                }
            }
            Mask(s, a) => {
                if v[s] == One {
                    v[a]
                } else {
                    Bot
                }
            }
            Select(s, a, b) => match (v[s], v[a]) {
                (One, Bot) => v[b],
                (One, x) => x,
                _ => Bot,
            },
            Cmp(st, a, b) => {
                if v[st] != Bot {
                    v[st]
                } else if v[a] == v[b] {
                    Bot
                } else {
                    flag(v[a] > v[b])
                }
            }
        }
    }
}

impl fmt::Display for Op {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())?;
        if let Op::Const(t) = self {
            write!(f, " {}", t.to_char())?;
        }
        for a in self.args() {
            write!(f, " {a}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Instr {
    Op(Op),
    /// Copy of `defs[def]` reading the listed wires.
    Sub { def: usize, args: Vec<usize> },
}

/// Wires are numbered in creation order: inputs first, then one per gate
/// output and `out_width` per copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogicCircuit {
    inputs: usize,
    defs: Vec<Circuit>,
    instrs: Vec<Instr>,
    outputs: Vec<usize>,
    wires: usize,
}

impl LogicCircuit {
    pub fn new(inputs: usize) -> LogicCircuit {
        LogicCircuit { inputs, defs: Vec::new(), instrs: Vec::new(), outputs: Vec::new(), wires: inputs }
    }

    pub fn in_width(&self) -> usize {
        self.inputs
    }

    pub fn out_width(&self) -> usize {
        self.outputs.len()
    }

    pub fn define(&mut self, c: Circuit) -> usize {
        self.defs.push(c);
        self.defs.len() - 1
    }

    fn check(&self, w: usize) -> Result<()> {
        if w < self.wires {
            Ok(())
        } else {
            Err(Error::Parse(format!("wire {w} used before it is driven")))
        }
    }

    pub fn try_op(&mut self, op: Op) -> Result<usize> {
        for a in op.args() {
            self.check(a)?;
        }
        self.instrs.push(Instr::Op(op));
        self.wires += 1;
        Ok(self.wires - 1)
    }

    pub fn op(&mut self, op: Op) -> usize {
        self.try_op(op).expect("operands are driven")
    }

    pub fn try_sub(&mut self, def: usize, args: Vec<usize>) -> Result<Vec<usize>> {
        let c = self.defs.get(def).ok_or_else(|| Error::Parse(format!("undefined circuit {def}")))?;
        if args.len() != c.in_width() {
            return Err(Error::WidthMismatch { expected: c.in_width(), got: args.len() });
        }
        let out = c.out_width();
        for &a in &args {
            self.check(a)?;
        }
        self.instrs.push(Instr::Sub { def, args });
        let first = self.wires;
        self.wires += out;
        Ok((first..self.wires).collect())
    }

    pub fn sub(&mut self, def: usize, args: Vec<usize>) -> Vec<usize> {
        self.try_sub(def, args).expect("copy wiring")
    }

    pub fn set_outputs(&mut self, outs: Vec<usize>) -> Result<()> {
        for &o in &outs {
            self.check(o)?;
        }
        self.outputs = outs;
        Ok(())
    }

    /// Gates plus wires. A copy of a bijective circuit contributes its gates
    /// and all wires it creates; its inputs are wires already counted.
    pub fn size(&self) -> usize {
        let mut s = self.inputs;
        for i in &self.instrs {
            s += match i {
                Instr::Op(_) => 2,
                Instr::Sub { def, .. } => self.defs[*def].size() - self.defs[*def].in_width(),
            };
        }
        s
    }

    pub fn gate_count(&self) -> usize {
        self.instrs
            .iter()
            .map(|i| match i {
                Instr::Op(_) => 1,
                Instr::Sub { def, .. } => self.defs[*def].gate_count(),
            })
            .sum()
    }

    pub fn eval(&self, x: &TernaryWord) -> Result<TernaryWord> {
        if x.width() != self.inputs {
            return Err(Error::WidthMismatch { expected: self.inputs, got: x.width() });
        }
        let mut v: Vec<Trit> = Vec::with_capacity(self.wires);
        v.extend_from_slice(x.trits());
        for i in &self.instrs {
            match i {
                Instr::Op(op) => {
                    let t = op.eval(&v);
                    v.push(t);
                }
                Instr::Sub { def, args } => {
                    let input = TernaryWord(args.iter().map(|&a| v[a]).collect());
                    let out = self.defs[*def].eval_unchecked(&input);
                    v.extend_from_slice(out.trits());
                }
            }
        }
        Ok(TernaryWord(self.outputs.iter().map(|&o| v[o]).collect()))
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("logic in={} out={}\n", self.inputs, self.outputs.len());
        for (i, d) in self.defs.iter().enumerate() {
            writeln!(s, "def {i}").unwrap();
            s.push_str(&d.to_text());
            s.push_str("end\n");
        }
        for i in &self.instrs {
            match i {
                Instr::Op(op) => writeln!(s, "op {op}").unwrap(),
                Instr::Sub { def, args } => {
                    write!(s, "sub {def}").unwrap();
                    for a in args {
                        write!(s, " {a}").unwrap();
                    }
                    s.push('\n');
                }
            }
        }
        s.push_str("out");
        for o in &self.outputs {
            write!(s, " {o}").unwrap();
        }
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<LogicCircuit> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty netlist".into()))?;
        if !header.starts_with("logic") {
            return Err(Error::Parse(format!("expected a logic header, got {header:?}")));
        }
        let (w_in, w_out) = parse_header(header)?;
        let mut c = LogicCircuit::new(w_in);
        let mut outs = None;
        let nums = |toks: std::str::SplitWhitespace<'_>| -> Result<Vec<usize>> {
            toks.map(|t| t.parse().map_err(|_| Error::Parse(format!("bad wire {t:?}")))).collect()
        };
        while let Some(line) = lines.next() {
            let mut toks = line.split_whitespace();
            match toks.next() {
                Some("def") => {
                    let mut body = String::new();
                    for l in lines.by_ref() {
                        if l == "end" {
                            break;
                        }
                        body.push_str(l);
                        body.push('\n');
                    }
                    c.define(Circuit::parse(&body)?);
                }
                Some("sub") => {
                    let v = nums(toks)?;
                    let (&def, args) = v.split_first().ok_or_else(|| Error::Parse("sub needs a circuit".into()))?;
                    c.try_sub(def, args.to_vec())?;
                }
                Some("op") => {
                    let name = toks.next().ok_or_else(|| Error::Parse("op needs a name".into()))?;
                    let (konst, rest): (Option<Trit>, Vec<usize>) = if name == "const" {
                        let t = toks.next().and_then(|t| TernaryWord::parse(t).ok()).filter(|w| w.width() == 1);
                        (t.map(|w| w.trits()[0]), Vec::new())
                    } else {
                        (None, nums(toks)?)
                    };
                    c.try_op(Op::from_parts(name, &rest, konst)?)?;
                }
                Some("out") => outs = Some(nums(toks)?),
                _ => return Err(Error::Parse(format!("unrecognised netlist line {line:?}"))),
            }
        }
        let outs = outs.ok_or_else(|| Error::Parse("missing out line".into()))?;
        if outs.len() != w_out {
            return Err(Error::WidthMismatch { expected: w_out, got: outs.len() });
        }
        c.set_outputs(outs)?;
        Ok(c)
    }
}

/// Either circuit format, as read from text.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyCircuit {
    Bijective(Circuit),
    Logic(LogicCircuit),
}

impl AnyCircuit {
    pub fn parse(text: &str) -> Result<AnyCircuit> {
        let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
        if first.starts_with("logic") {
            LogicCircuit::parse(text).map(AnyCircuit::Logic)
        } else {
            Circuit::parse(text).map(AnyCircuit::Bijective)
        }
    }

    pub fn eval(&self, x: &TernaryWord) -> Result<TernaryWord> {
        match self {
            AnyCircuit::Bijective(c) => c.eval(x),
            AnyCircuit::Logic(c) => c.eval(x),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AnyCircuit::Bijective(c) => c.size(),
            AnyCircuit::Logic(c) => c.size(),
        }
    }

    pub fn in_width(&self) -> usize {
        match self {
            AnyCircuit::Bijective(c) => c.in_width(),
            AnyCircuit::Logic(c) => c.in_width(),
        }
    }

    pub fn out_width(&self) -> usize {
        match self {
            AnyCircuit::Bijective(c) => c.out_width(),
            AnyCircuit::Logic(c) => c.out_width(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            AnyCircuit::Bijective(c) => c.to_text(),
            AnyCircuit::Logic(c) => c.to_text(),
        }
    }
}
