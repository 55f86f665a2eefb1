//! Generator catalog, lowering and controlled lowering.

use std::fmt;

use crate::error::{Error, Result};
use crate::table::{Element, ElementTable};
use crate::words::{level, Word};

/// Named generators. Higman's four generators of `V` (binary alphabet), the
/// two standard generators of `F`, the reversible gates NOT, CNOT and
/// Toffoli acting on the leading bits, and wire transpositions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Kappa,
    Lambda,
    Mu,
    Nu,
    Sigma,
    Sigma1,
    Not,
    Cnot,
    Toffoli,
    /// Swap of positions `i < j` (1-based).
    Tau(usize, usize),
}

impl Generator {
    pub const CATALOG: [Generator; 10] = [
        Generator::Kappa,
        Generator::Lambda,
        Generator::Mu,
        Generator::Nu,
        Generator::Sigma,
        Generator::Sigma1,
        Generator::Not,
        Generator::Cnot,
        Generator::Toffoli,
        Generator::Tau(1, 2),
    ];

    pub fn tau(i: usize, j: usize) -> Result<Generator> {
        if i == 0 || i >= j {
            return Err(Error::Parse(format!("transposition needs 1 <= i < j, got ({i},{j})")));
        }
        Ok(Generator::Tau(i, j))
    }

    /// Short token used in the word syntax.
    pub fn token(self) -> String {
        match self {
            Generator::Kappa => "k".into(),
            Generator::Lambda => "l".into(),
            Generator::Mu => "m".into(),
            Generator::Nu => "n".into(),
            Generator::Sigma => "s".into(),
            Generator::Sigma1 => "s1".into(),
            Generator::Not => "N".into(),
            Generator::Cnot => "C".into(),
            Generator::Toffoli => "T".into(),
            Generator::Tau(i, j) => format!("t{i},{j}"),
        }
    }

    pub fn from_token(tok: &str) -> Result<Generator> {
        Ok(match tok {
            "k" => Generator::Kappa,
            "l" => Generator::Lambda,
            "m" => Generator::Mu,
            "n" => Generator::Nu,
            "s" => Generator::Sigma,
            "s1" => Generator::Sigma1,
            "N" => Generator::Not,
            "C" => Generator::Cnot,
            "T" => Generator::Toffoli,
            _ => {
                let body = tok
                    .strip_prefix('t')
                    .ok_or_else(|| Error::Parse(format!("unknown generator {tok:?}")))?;
                let (i, j) = body
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("transposition needs `t<i>,<j>`, got {tok:?}")))?;
                let i = i.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
                let j = j.parse().map_err(|_| Error::Parse(format!("bad index in {tok:?}")))?;
                Generator::tau(i, j)?
            }
        })
    }

    /// Weight in word length: `|τ_{i,j}| = j`, every other generator 1.
    pub fn weight(self) -> usize {
        match self {
            Generator::Tau(_, j) => j,
            _ => 1,
        }
    }

    pub fn is_length_preserving(self) -> bool {
        matches!(
            self,
            Generator::Kappa | Generator::Nu | Generator::Not | Generator::Cnot | Generator::Toffoli | Generator::Tau(..)
        )
    }

    pub fn element(self, k: u8) -> Result<Element> {
        if k != 2 {
            return Err(Error::WrongArity(self.token()));
        }
        Ok(match self {
            Generator::Kappa | Generator::Not => Element::binary(&[("0", "1"), ("1", "0")]),
            Generator::Lambda => Element::binary(&[("00", "00"), ("01", "1"), ("1", "01")]),
            Generator::Mu => Element::binary(&[("0", "10"), ("10", "0"), ("11", "11")]),
            Generator::Nu => swap_positions(1, 2),
            Generator::Sigma => Element::binary(&[("00", "0"), ("01", "10"), ("1", "11")]),
            Generator::Sigma1 => Element::binary(&[("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")]),
            Generator::Cnot => bit_map(2, |b| vec![b[0], b[1] ^ b[0]]),
            Generator::Toffoli => bit_map(3, |b| vec![b[0], b[1], b[2] ^ (b[0] & b[1])]),
            Generator::Tau(i, j) => swap_positions(i, j),
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Element acting on the first `width` bits by a bijection of `{0,1}^width`.
pub fn bit_map(width: usize, f: impl Fn(&[u8]) -> Vec<u8>) -> Element {
    let pairs = level(2, width)
        .into_iter()
        .map(|x| {
            let y = Word::from_letters(f(x.letters()));
            (x, y)
        })
        .collect();
    Element::from_pairs(2, pairs).expect("bijection on a full level")
}

fn swap_positions(i: usize, j: usize) -> Element {
    bit_map(j, |b| {
        let mut v = b.to_vec();
        v.swap(i - 1, j - 1);
        v
    })
}

/// Permutation of letter positions on words of length `perm.len()`: the
/// letter at position `i` moves to position `perm[i]` (0-based).
pub fn wire_permutation(k: u8, perm: &[usize]) -> Element {
    let len = perm.len();
    let pairs = level(k, len)
        .into_iter()
        .map(|x| {
            let mut y = vec![0u8; len];
            for (i, &a) in x.letters().iter().enumerate() {
                y[perm[i]] = a;
            }
            (x, Word::from_letters(y))
        })
        .collect();
    ElementTable::new(k, pairs).expect("permutation of a level").reduce()
}

/// `(φ)_d(zx) = z φ(x)` for every `z` of length `d`.
pub fn lower(e: &Element, d: usize) -> Element {
    if d == 0 {
        return e.clone();
    }
    let mut pairs = Vec::with_capacity(e.size() * (e.k() as usize).pow(d as u32));
    for z in level(e.k(), d) {
        for (x, y) in e.pairs() {
            pairs.push((z.concat(x), z.concat(y)));
        }
    }
    ElementTable::from_unsorted(e.k(), pairs).reduce()
}

/// `(φ)_c(cx) = c φ(x)`, identity on every branch leaving `c`.
pub fn controlled_lower(e: &Element, c: &Word) -> Element {
    let mut pairs: Vec<(Word, Word)> = e.pairs().iter().map(|(x, y)| (c.concat(x), c.concat(y))).collect();
    for i in 0..c.len() {
        let p = c.prefix(i);
        for a in 0..e.k() {
            if a != c.letters()[i] {
                let pa = p.push(a);
                pairs.push((pa.clone(), pa));
            }
        }
    }
    ElementTable::from_unsorted(e.k(), pairs).reduce()
}

/// The position permutation `π` with `(φ)_d = π⁻¹ φ π` for a table whose
/// words have length at most `l`, as a map on words of length `d + l`.
pub fn lowering_conjugator(d: usize, l: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..d + l).collect();
    if d + 1 > l {
        for i in 0..l {
            perm[i] = d + i;
            perm[d + i] = i;
        }
    } else {
        for i in 0..d {
            perm[i] = l + i;
        }
        for i in 0..l {
            perm[d + i] = i;
        }
    }
    perm
}

/// Transpositions `[τ_1, …, τ_r]` with `τ_1 ∘ … ∘ τ_r` equal to
/// `wire_permutation(perm)`.
pub fn tau_word(perm: &[usize]) -> Vec<Generator> {
    let mut cur = perm.to_vec();
    let mut out = Vec::new();
    for i in 0..cur.len() {
        while cur[i] != i {
            let j = cur[i];
            // peel off the swap of i and j on the left
            for v in cur.iter_mut() {
                if *v == i {
                    *v = j;
                } else if *v == j {
                    *v = i;
                }
            }
            out.push(Generator::Tau(i.min(j) + 1, i.max(j) + 1));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn g(x: Generator) -> Element {
        x.element(2).unwrap()
    }

    #[test]
    fn catalog_tables() {
        assert_eq!(g(Generator::Not), Element::binary(&[("0", "1"), ("1", "0")]));
        assert_eq!(g(Generator::Cnot), Element::binary(&[("0", "0"), ("10", "11"), ("11", "10")]));
        assert_eq!(
            g(Generator::Toffoli),
            Element::binary(&[("0", "0"), ("10", "10"), ("110", "111"), ("111", "110")])
        );
        assert_eq!(
            g(Generator::Nu),
            Element::binary(&[("00", "00"), ("01", "10"), ("10", "01"), ("11", "11")])
        );
        assert_eq!(g(Generator::Kappa), g(Generator::Not));
        assert_eq!(g(Generator::Nu), g(Generator::Tau(1, 2)));
        assert!(matches!(Generator::Sigma.element(3), Err(Error::WrongArity(_))));
    }

    #[test]
    fn tokens_round_trip() {
        for gen in Generator::CATALOG.iter().copied().chain([Generator::Tau(3, 7)]) {
            assert_eq!(Generator::from_token(&gen.token()).unwrap(), gen);
        }
        assert!(Generator::from_token("t2,2").is_err());
        assert!(Generator::from_token("q").is_err());
        assert_eq!(Generator::Tau(3, 4).weight(), 4);
    }

    #[test]
    fn lowering_examples() {
        let n = g(Generator::Not);
        assert_eq!(
            lower(&n, 1),
            Element::binary(&[("00", "01"), ("01", "00"), ("10", "11"), ("11", "10")])
        );
        assert_eq!(lower(&g(Generator::Sigma), 0), g(Generator::Sigma));
        for i in 1..5 {
            assert_eq!(lower(&g(Generator::Nu), i - 1), g(Generator::Tau(i, i + 1)));
        }
    }

    #[test]
    fn controlled_lowering_examples() {
        assert_eq!(controlled_lower(&g(Generator::Sigma), &w("1")), g(Generator::Sigma1));
        assert_eq!(controlled_lower(&g(Generator::Mu), &Word::empty()), g(Generator::Mu));
        assert_eq!(
            controlled_lower(&g(Generator::Not), &w("0")),
            Element::binary(&[("00", "01"), ("01", "00"), ("1", "1")])
        );
    }

    #[test]
    fn lowering_is_conjugation_for_length_preserving_gates() {
        for gen in [Generator::Not, Generator::Cnot, Generator::Toffoli, Generator::Nu, Generator::Kappa] {
            let e = g(gen);
            let l = e.max_word_len();
            for d in 0..=4 {
                let pi = wire_permutation(2, &lowering_conjugator(d, l));
                let conj = pi.invert().compose(&e.compose(&pi));
                assert_eq!(conj, lower(&e, d), "{gen} d={d}");
            }
        }
    }

    #[test]
    fn tau_words_realise_permutations() {
        let perms: [&[usize]; 5] = [&[0, 1, 2], &[1, 0], &[2, 0, 1], &[3, 2, 0, 1], &[1, 2, 3, 4, 0]];
        for perm in perms {
            let mut e = Element::identity(2);
            for t in tau_word(perm) {
                e = e.compose(&t.element(2).unwrap());
            }
            assert_eq!(e, wire_permutation(2, perm), "{perm:?}");
        }
        assert!(tau_word(&[0, 1, 2]).is_empty());
    }

    #[test]
    fn conjugation_needs_length_preserving_gates() {
        // Position permutations cannot track a length change inside the gate.
        for gen in [Generator::Sigma, Generator::Lambda, Generator::Mu, Generator::Sigma1] {
            let e = g(gen);
            let pi = wire_permutation(2, &lowering_conjugator(1, e.max_word_len()));
            assert_ne!(pi.invert().compose(&e.compose(&pi)), lower(&e, 1), "{gen}");
        }
    }
}
