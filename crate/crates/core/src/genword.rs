//! Words over the generator catalog: parsing, printing, evaluation,
//! weighted length, and rewriting into `{N, C, τ_{1,2}, σ, σ₁}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::gens::{controlled_lower, lower, lowering_conjugator, tau_word, Generator};
use crate::subgroups::in_f;
use crate::table::Element;
use crate::words::{PrefixCode, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Wrap {
    Low(usize),
    Ctl(Word),
}

/// A generator or its inverse under a stack of lowerings, innermost first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Atom {
    pub gen: Generator,
    pub inv: bool,
    pub wraps: Vec<Wrap>,
}

impl Atom {
    pub fn plain(gen: Generator) -> Atom {
        Atom { gen, inv: false, wraps: Vec::new() }
    }

    pub fn inverse_of(gen: Generator) -> Atom {
        Atom { gen, inv: true, wraps: Vec::new() }
    }

    pub fn lowered(gen: Generator, d: usize) -> Atom {
        Atom { gen, inv: false, wraps: vec![Wrap::Low(d)] }
    }

    pub fn inverse(&self) -> Atom {
        Atom { inv: !self.inv, ..self.clone() }
    }

    pub fn element(&self, k: u8) -> Result<Element> {
        let mut e = self.gen.element(k)?;
        if self.inv {
            e = e.invert();
        }
        for wrap in &self.wraps {
            e = match wrap {
                Wrap::Low(d) => lower(&e, *d),
                Wrap::Ctl(c) => controlled_lower(&e, c),
            };
        }
        Ok(e)
    }

    /// Generator weight, plus for each lowering the weight of the two
    /// transposition words that conjugate the inner map into place.
    pub fn weight(&self) -> usize {
        let mut w = self.gen.weight();
        let mut e = self.gen.element(2).ok();
        for wrap in &self.wraps {
            match wrap {
                Wrap::Low(d) => {
                    let l = e.as_ref().map_or(self.gen.weight(), |e| e.max_word_len());
                    w += 2 * tau_word(&lowering_conjugator(*d, l)).iter().map(|t| t.weight()).sum::<usize>();
                    e = e.map(|e| lower(&e, *d));
                }
                Wrap::Ctl(c) => e = e.map(|e| controlled_lower(&e, c)),
            }
        }
        w
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = self.gen.token();
        if self.inv {
            s.push_str("^-1");
        }
        for wrap in &self.wraps {
            s = match wrap {
                Wrap::Low(d) => format!("low{d}({s})"),
                Wrap::Ctl(c) => format!("ctl{c}({s})"),
            };
        }
        f.write_str(&s)
    }
}

/// `[g_1, …, g_n]` denotes `g_1 ∘ … ∘ g_n`: the last symbol acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenWord {
    pub atoms: Vec<Atom>,
}

impl GenWord {
    pub fn new(atoms: Vec<Atom>) -> GenWord {
        GenWord { atoms }
    }

    pub fn from_gens(gens: &[Generator]) -> GenWord {
        GenWord::new(gens.iter().map(|&g| Atom::plain(g)).collect())
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn concat(&self, other: &GenWord) -> GenWord {
        GenWord::new(self.atoms.iter().chain(&other.atoms).cloned().collect())
    }

    pub fn inverse(&self) -> GenWord {
        GenWord::new(self.atoms.iter().rev().map(Atom::inverse).collect())
    }

    pub fn eval(&self, k: u8) -> Result<Element> {
        let mut acc = Element::identity(k);
        for atom in &self.atoms {
            acc = acc.compose(&atom.element(k)?);
        }
        Ok(acc)
    }

    /// Weighted length: `|τ_{i,j}| = j`, other generators 1.
    pub fn word_length(&self) -> usize {
        self.atoms.iter().map(Atom::weight).sum()
    }

    /// Cancel adjacent `x x⁻¹` pairs.
    pub fn free_reduce(&self) -> GenWord {
        let mut out: Vec<Atom> = Vec::with_capacity(self.atoms.len());
        for a in &self.atoms {
            if out.last().is_some_and(|b| *b == a.inverse()) {
                out.pop();
            } else {
                out.push(a.clone());
            }
        }
        GenWord::new(out)
    }

    /// Whitespace-separated tokens `k l m n s s1 N C T t<i>,<j>`, each with an
    /// optional `^-1`; `low<d>( … )` and `ctl<word>( … )` wrap a subword and
    /// may themselves carry `^-1`.
    pub fn parse(text: &str) -> Result<GenWord> {
        let chars: Vec<char> = text.chars().collect();
        let mut pos = 0;
        let atoms = parse_seq(&chars, &mut pos, 0)?;
        if pos < chars.len() {
            return Err(Error::Parse(format!("unexpected `{}` at offset {pos}", chars[pos])));
        }
        Ok(GenWord::new(atoms))
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.atoms.iter().map(|a| a.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

fn parse_seq(chars: &[char], pos: &mut usize, depth: usize) -> Result<Vec<Atom>> {
    let mut atoms = Vec::new();
    loop {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
        if *pos == chars.len() {
            if depth > 0 {
                return Err(Error::Parse("unclosed `(`".into()));
            }
            return Ok(atoms);
        }
        if chars[*pos] == ')' {
            if depth == 0 {
                return Err(Error::Parse("unmatched `)`".into()));
            }
            return Ok(atoms);
        }
        let start = *pos;
        while *pos < chars.len() && !chars[*pos].is_whitespace() && !matches!(chars[*pos], '(' | ')') {
            *pos += 1;
        }
        let tok: String = chars[start..*pos].iter().collect();
        if *pos < chars.len() && chars[*pos] == '(' {
            let wrap = parse_wrap(&tok)?;
            *pos += 1;
            let mut inner = parse_seq(chars, pos, depth + 1)?;
            *pos += 1; // the `)`
            if chars[*pos..].starts_with(&['^', '-', '1']) {
                *pos += 3;
                inner = inner.iter().rev().map(Atom::inverse).collect();
            }
            for a in &mut inner {
                a.wraps.push(wrap.clone());
            }
            atoms.extend(inner);
        } else {
            let (name, inv) = match tok.strip_suffix("^-1") {
                Some(name) => (name, true),
                None => (tok.as_str(), false),
            };
            atoms.push(Atom { gen: Generator::from_token(name)?, inv, wraps: Vec::new() });
        }
    }
}

fn parse_wrap(tok: &str) -> Result<Wrap> {
    if let Some(d) = tok.strip_prefix("low") {
        let d = d.parse().map_err(|_| Error::Parse(format!("bad lowering depth in {tok:?}")))?;
        Ok(Wrap::Low(d))
    } else if let Some(c) = tok.strip_prefix("ctl") {
        Ok(Wrap::Ctl(Word::parse(c, 2)?))
    } else {
        Err(Error::Parse(format!("unknown wrapper {tok:?}")))
    }
}

/// A `σ, σ₁` word for an element of `F`. Both codes of the table are pushed
/// onto the right vine by rotations `x_j` on the right spine, and
/// `x_j = σ^{j-1} σ₁ σ^{-(j-1)}`.
pub fn f_to_word(f: &Element) -> Result<GenWord> {
    if !in_f(f) || f.k() != 2 {
        return Err(Error::NotInF);
    }
    let to_vine_dom = vine_rotations(&f.dom_code());
    let to_vine_im = vine_rotations(&f.im_code());
    // f = p_im⁻¹ ∘ p_dom with p = x_{j_r} ∘ … ∘ x_{j_1}
    let mut atoms = Vec::new();
    for &j in &to_vine_im {
        atoms.extend(x_word(j).inverse().atoms);
    }
    for &j in to_vine_dom.iter().rev() {
        atoms.extend(x_word(j).atoms);
    }
    Ok(GenWord::new(atoms).free_reduce())
}

fn x_word(j: usize) -> GenWord {
    let s = Generator::Sigma;
    if j == 0 {
        return GenWord::from_gens(&[s]);
    }
    let mut atoms = vec![Atom::plain(s); j - 1];
    atoms.push(Atom::plain(Generator::Sigma1));
    atoms.extend(std::iter::repeat_n(Atom::inverse_of(s), j - 1));
    GenWord::new(atoms)
}

/// Spine positions `j_1, j_2, …` of the rotations that carry `code` onto the
/// right vine, in the order they are applied.
fn vine_rotations(code: &PrefixCode) -> Vec<usize> {
    let mut words: Vec<Word> = code.words().to_vec();
    let mut out = Vec::new();
    loop {
        // first spine node 1^j whose left child 1^j0 is internal
        let Some(j) = (0..).take_while(|&j| words.iter().any(|w| w.len() > j && ones(w, j))).find(|&j| {
            words.iter().any(|w| w.len() > j + 1 && ones(w, j) && w.letters()[j] == 0)
        }) else {
            return out;
        };
        out.push(j);
        // 1^j 00 z -> 1^j 0 z, 1^j 01 z -> 1^j 10 z, 1^j 1 z -> 1^j 11 z
        for w in &mut words {
            if w.len() > j && ones(w, j) {
                let l = w.letters();
                let mut v = l[..j].to_vec();
                if l[j] == 0 {
                    if l[j + 1] == 0 {
                        v.push(0);
                    } else {
                        v.extend([1, 0]);
                    }
                    v.extend(&l[j + 2..]);
                } else {
                    v.extend([1, 1]);
                    v.extend(&l[j + 1..]);
                }
                *w = Word::from_letters(v);
            }
        }
    }
}

fn ones(w: &Word, j: usize) -> bool {
    w.letters()[..j].iter().all(|&a| a == 1)
}

/// Rewrite a Higman generator over `{N, C, τ_{1,2}, σ, σ₁}`.
pub fn higman_to_v_generators(g: Generator) -> Result<GenWord> {
    use Generator::*;
    let prefix: &[Generator] = match g {
        Kappa => return Ok(GenWord::from_gens(&[Not])),
        Nu => return Ok(GenWord::from_gens(&[Tau(1, 2)])),
        Lambda => &[Tau(1, 2), Cnot],
        Mu => &[Tau(1, 2), Cnot, Tau(1, 2), Not, Tau(1, 2)],
        _ => return Err(Error::Parse(format!("{g} is not a Higman generator"))),
    };
    let prefix = GenWord::from_gens(prefix);
    let rest = prefix.eval(2)?.invert().compose(&g.element(2)?);
    Ok(prefix.concat(&f_to_word(&rest)?))
}
