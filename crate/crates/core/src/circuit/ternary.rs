//! Ternary words over `{0, 1, ⊥}` and the padding `φ^⊥` of a table.

use std::fmt;

use crate::error::{Error, Result};
use crate::table::{Element, ElementTable};
use crate::words::{PrefixCode, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Trit {
    /// Sorts below both bits, as padding sorts below any letter.
    Bot,
    Zero,
    One,
}

impl Trit {
    pub fn bit(b: u8) -> Trit {
        if b == 0 {
            Trit::Zero
        } else {
            Trit::One
        }
    }

    pub fn is_bit(self) -> bool {
        self != Trit::Bot
    }

    pub fn to_char(self) -> char {
        match self {
            Trit::Zero => '0',
            Trit::One => '1',
            Trit::Bot => '_',
        }
    }

    pub const ALL: [Trit; 3] = [Trit::Zero, Trit::One, Trit::Bot];
}

/// A fixed-width word over `{0, 1, ⊥}`; `⊥` is written `_`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TernaryWord(pub Vec<Trit>);

impl TernaryWord {
    pub fn bots(n: usize) -> TernaryWord {
        TernaryWord(vec![Trit::Bot; n])
    }

    /// `w ⊥^{width - |w|}`.
    pub fn padded(w: &Word, width: usize) -> TernaryWord {
        let mut v: Vec<Trit> = w.letters().iter().map(|&b| Trit::bit(b)).collect();
        v.resize(width, Trit::Bot);
        TernaryWord(v)
    }

    pub fn width(&self) -> usize {
        self.0.len()
    }

    pub fn trits(&self) -> &[Trit] {
        &self.0
    }

    /// The bit word `u` when `self = u ⊥^i`, otherwise `None`.
    pub fn unpad(&self) -> Option<Word> {
        let len = self.0.iter().position(|t| *t == Trit::Bot).unwrap_or(self.0.len());
        if self.0[len..].iter().any(|t| t.is_bit()) {
            return None;
        }
        Some(Word::from_letters(self.0[..len].iter().map(|t| (*t == Trit::One) as u8).collect()))
    }

    pub fn parse(s: &str) -> Result<TernaryWord> {
        let s = s.trim();
        if s == "-" {
            return Ok(TernaryWord(Vec::new()));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(Trit::Zero),
                '1' => Ok(Trit::One),
                '_' => Ok(Trit::Bot),
                _ => Err(Error::Parse(format!("bad ternary symbol {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(TernaryWord)
    }

    /// Every word of the given width, in lexicographic order of `0 < 1 < ⊥`.
    pub fn all(width: usize) -> impl Iterator<Item = TernaryWord> {
        let total = 3usize.pow(width as u32);
        (0..total).map(move |mut i| {
            let mut v = vec![Trit::Zero; width];
            for slot in v.iter_mut().rev() {
                *slot = Trit::ALL[i % 3];
                i /= 3;
            }
            TernaryWord(v)
        })
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for t in &self.0 {
            write!(f, "{}", t.to_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// `φ^⊥: {0,1,⊥}^m -> {0,1,⊥}^n` for a binary table `φ`: the padding of a
/// domain word maps to the padding of its image, everything else to `⊥^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PaddedFunction {
    table: ElementTable,
    m: usize,
    n: usize,
}

impl PaddedFunction {
    pub fn new(table: ElementTable, m: usize, n: usize) -> Result<PaddedFunction> {
        if table.k() != 2 {
            return Err(Error::WrongArity("padding".into()));
        }
        if m < table.max_dom_len() {
            return Err(Error::WidthTooSmall { width: m, needed: table.max_dom_len() });
        }
        if n < table.max_im_len() {
            return Err(Error::WidthTooSmall { width: n, needed: table.max_im_len() });
        }
        Ok(PaddedFunction { table, m, n })
    }

    pub fn table(&self) -> &ElementTable {
        &self.table
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn eval(&self, x: &TernaryWord) -> Result<TernaryWord> {
        if x.width() != self.m {
            return Err(Error::WidthMismatch { expected: self.m, got: x.width() });
        }
        Ok(self.eval_unchecked(x))
    }

    pub(crate) fn eval_unchecked(&self, x: &TernaryWord) -> TernaryWord {
        let hit = x.unpad().and_then(|p| {
            let rows = self.table.pairs();
            rows.binary_search_by(|r| r.0.cmp(&p)).ok().map(|i| &rows[i].1)
        });
        match hit {
            Some(y) => TernaryWord::padded(y, self.n),
            None => TernaryWord::bots(self.n),
        }
    }

    /// `P^⊥`, the padded domain code.
    pub fn padded_domain(&self) -> Vec<TernaryWord> {
        self.table.pairs().iter().map(|r| TernaryWord::padded(&r.0, self.m)).collect()
    }

    pub fn padded_image(&self) -> Vec<TernaryWord> {
        self.table.im_code().words().iter().map(|q| TernaryWord::padded(q, self.n)).collect()
    }

    pub fn dom_code(&self) -> PrefixCode {
        self.table.dom_code()
    }
}

/// Padding of an element's reduced table at widths `m` and `n`.
pub fn pad(e: &Element, m: usize, n: usize) -> Result<PaddedFunction> {
    PaddedFunction::new(e.table().clone(), m, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::Generator;

    fn t(s: &str) -> TernaryWord {
        TernaryWord::parse(s).unwrap()
    }

    #[test]
    fn identity_padding() {
        let id = pad(&Element::identity(2), 1, 1).unwrap();
        // ε pads to ⊥
        assert_eq!(id.eval(&t("_")).unwrap(), t("_"));
        assert_eq!(id.eval(&t("0")).unwrap(), t("_"));
        let id = PaddedFunction::new(Element::identity(2).restrict_step(&Word::empty()).unwrap(), 1, 1).unwrap();
        assert_eq!(id.eval(&t("0")).unwrap(), t("0"));
        assert_eq!(id.eval(&t("1")).unwrap(), t("1"));
        assert_eq!(id.eval(&t("_")).unwrap(), t("_"));
    }

    #[test]
    fn sigma_padding() {
        let s = pad(&Generator::Sigma.element(2).unwrap(), 2, 2).unwrap();
        for (x, y) in [("00", "0_"), ("01", "10"), ("1_", "11"), ("__", "__"), ("_0", "__"), ("10", "__")] {
            assert_eq!(s.eval(&t(x)).unwrap(), t(y), "{x}");
        }
        assert!(matches!(s.eval(&t("0")), Err(Error::WidthMismatch { .. })));
        assert!(matches!(pad(&Generator::Sigma.element(2).unwrap(), 1, 2), Err(Error::WidthTooSmall { .. })));
    }

    #[test]
    fn padding_inverse_on_codes() {
        for gen in Generator::CATALOG {
            let e = gen.element(2).unwrap();
            let (m, n) = (e.max_dom_len(), e.max_im_len());
            let f = pad(&e, m, n).unwrap();
            let g = pad(&e.invert(), n, m).unwrap();
            for x in f.padded_domain() {
                assert_eq!(g.eval(&f.eval(&x).unwrap()).unwrap(), x);
            }
        }
    }

    #[test]
    fn ternary_words() {
        assert_eq!(TernaryWord::all(2).count(), 9);
        assert_eq!(t("01_").unpad(), Some(Word::from_letters(vec![0, 1])));
        assert_eq!(t("_1").unpad(), None);
        assert_eq!(t("01_").to_string(), "01_");
        assert!(TernaryWord::parse("0x").is_err());
    }
}
