//! Finite bijections between maximal prefix codes and the group arithmetic
//! on them: reduction to the maximal extension, restriction, composition,
//! inversion and the partial action on words.

use std::fmt;
use std::ops::Deref;

use crate::error::{Error, Result};
use crate::words::{level, PrefixCode, Word};

/// A bijection `domC -> imC` given row by row, rows sorted by domain word.
/// The table need not be reduced.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ElementTable {
    k: u8,
    pairs: Vec<(Word, Word)>,
}

impl ElementTable {
    /// Validates both columns as maximal prefix codes of equal size.
    pub fn new(k: u8, mut pairs: Vec<(Word, Word)>) -> Result<Self> {
        pairs.sort();
        let dom = PrefixCode::new(k, pairs.iter().map(|p| p.0.clone()).collect())
            .map_err(|e| Error::InvalidTable(format!("domain: {e}")))?;
        let im = PrefixCode::new(k, pairs.iter().map(|p| p.1.clone()).collect())
            .map_err(|e| Error::InvalidTable(format!("image: {e}")))?;
        if !dom.is_maximal() {
            return Err(Error::InvalidTable("domain code is not maximal".into()));
        }
        if !im.is_maximal() {
            return Err(Error::InvalidTable("image code is not maximal".into()));
        }
        Ok(ElementTable { k, pairs })
    }

    /// Rows must already be sorted by domain and form a valid bijection.
    pub(crate) fn from_sorted(k: u8, pairs: Vec<(Word, Word)>) -> Self {
        debug_assert!(pairs.windows(2).all(|p| p[0].0 < p[1].0));
        ElementTable { k, pairs }
    }

    pub(crate) fn from_unsorted(k: u8, mut pairs: Vec<(Word, Word)>) -> Self {
        pairs.sort();
        ElementTable { k, pairs }
    }

    pub fn identity(k: u8) -> Self {
        ElementTable { k, pairs: vec![(Word::empty(), Word::empty())] }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn pairs(&self) -> &[(Word, Word)] {
        &self.pairs
    }

    /// Table size `‖φ‖` (number of rows).
    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn dom_code(&self) -> PrefixCode {
        PrefixCode::from_sorted(self.k, self.pairs.iter().map(|p| p.0.clone()).collect())
    }

    pub fn im_code(&self) -> PrefixCode {
        let mut ys: Vec<Word> = self.pairs.iter().map(|p| p.1.clone()).collect();
        ys.sort();
        PrefixCode::from_sorted(self.k, ys)
    }

    /// Longest word on either side of the table.
    pub fn max_word_len(&self) -> usize {
        self.pairs.iter().map(|(x, y)| x.len().max(y.len())).max().unwrap_or(0)
    }

    pub fn max_dom_len(&self) -> usize {
        self.pairs.iter().map(|p| p.0.len()).max().unwrap_or(0)
    }

    pub fn max_im_len(&self) -> usize {
        self.pairs.iter().map(|p| p.1.len()).max().unwrap_or(0)
    }

    /// Row index whose domain word is a prefix of `w`.
    fn row_for(&self, w: &Word) -> Option<usize> {
        let idx = match self.pairs.binary_search_by(|p| p.0.cmp(w)) {
            Ok(i) => return Some(i),
            Err(0) => return None,
            Err(i) => i - 1,
        };
        self.pairs[idx].0.is_prefix_of(w).then_some(idx)
    }

    /// The partial action: `w = x z` with `x` in the domain code maps to `y z`.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        let i = self.row_for(w).ok_or_else(|| Error::NotInDomain(w.to_string()))?;
        let (x, y) = &self.pairs[i];
        Ok(y.concat(&w.suffix_from(x.len())))
    }

    pub fn invert(&self) -> ElementTable {
        ElementTable::from_unsorted(self.k, self.pairs.iter().map(|(x, y)| (y.clone(), x.clone())).collect())
    }

    /// Replace the row `(x, y)` by the rows `(xa, ya)` for every letter `a`.
    pub fn restrict_step(&self, x: &Word) -> Result<ElementTable> {
        let i = self.pairs.binary_search_by(|p| p.0.cmp(x)).map_err(|_| Error::NotInCode(x.to_string()))?;
        let y = self.pairs[i].1.clone();
        let mut pairs = Vec::with_capacity(self.pairs.len() + self.k as usize - 1);
        pairs.extend_from_slice(&self.pairs[..i]);
        for a in 0..self.k {
            pairs.push((x.push(a), y.push(a)));
        }
        pairs.extend_from_slice(&self.pairs[i + 1..]);
        Ok(ElementTable { k: self.k, pairs })
    }

    /// The restriction whose domain code is `code`; every word of `code` must
    /// extend a domain word.
    pub fn restrict_to_domain(&self, code: &PrefixCode) -> Result<ElementTable> {
        let mut pairs = Vec::with_capacity(code.len());
        for p in code.words() {
            pairs.push((p.clone(), self.apply(p)?));
        }
        Ok(ElementTable { k: self.k, pairs })
    }

    /// The restriction whose image code is `code`.
    pub fn restrict_to_image(&self, code: &PrefixCode) -> Result<ElementTable> {
        Ok(self.invert().restrict_to_domain(code)?.invert())
    }

    /// The restriction with image code `A^n`.
    pub fn restrict_image_to_level(&self, n: usize) -> Result<ElementTable> {
        let needed = self.max_im_len();
        if n < needed {
            return Err(Error::LevelTooSmall { level: n, needed });
        }
        let mut pairs = Vec::new();
        for (x, y) in &self.pairs {
            for s in level(self.k, n - y.len()) {
                pairs.push((x.concat(&s), y.concat(&s)));
            }
        }
        Ok(ElementTable::from_unsorted(self.k, pairs))
    }

    /// Restriction that refines the domain so it refines `code` as well.
    pub fn refine_domain(&self, code: &PrefixCode) -> ElementTable {
        let joined = self.dom_code().join(code);
        self.restrict_to_domain(&joined).expect("join refines the domain")
    }

    /// Restriction that refines the image so it refines `code` as well.
    pub fn refine_image(&self, code: &PrefixCode) -> ElementTable {
        let joined = self.im_code().join(code);
        self.restrict_to_image(&joined).expect("join refines the image")
    }

    /// Maximal extension: merge full sibling families `xa -> ya` into `x -> y`
    /// until none remain. Rows are sorted, so sibling families sit
    /// contiguously and a single stack pass reaches the fixed point.
    pub fn reduce(&self) -> Element {
        let k = self.k as usize;
        let mut stack: Vec<(Word, Word)> = Vec::with_capacity(self.pairs.len());
        for pair in &self.pairs {
            stack.push(pair.clone());
            while stack.len() >= k && mergeable(&stack[stack.len() - k..]) {
                let top = &stack[stack.len() - 1];
                let parent = (top.0.prefix(top.0.len() - 1), top.1.prefix(top.1.len() - 1));
                stack.truncate(stack.len() - k);
                stack.push(parent);
            }
        }
        Element(ElementTable { k: self.k, pairs: stack })
    }

    /// Parse the text format: optional `k=<arity>` header, then `x -> y` rows.
    pub fn parse(text: &str, default_k: u8) -> Result<ElementTable> {
        let mut k = default_k;
        let mut pairs = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("k=") {
                k = rest.trim().parse().map_err(|_| Error::Parse(format!("bad arity line {line:?}")))?;
                continue;
            }
            let (x, y) = line
                .split_once("->")
                .ok_or_else(|| Error::Parse(format!("expected `x -> y`, got {line:?}")))?;
            pairs.push((x.trim().to_string(), y.trim().to_string()));
        }
        let pairs = pairs
            .into_iter()
            .map(|(x, y)| Ok((Word::parse(&x, k)?, Word::parse(&y, k)?)))
            .collect::<Result<Vec<_>>>()?;
        ElementTable::new(k, pairs)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("k={}\n", self.k);
        for (x, y) in &self.pairs {
            s.push_str(&format!("{x} -> {y}\n"));
        }
        s
    }
}

fn mergeable(rows: &[(Word, Word)]) -> bool {
    let (x0, y0) = &rows[0];
    if x0.is_empty() || y0.is_empty() {
        return false;
    }
    let (px, py) = (&x0.letters()[..x0.len() - 1], &y0.letters()[..y0.len() - 1]);
    rows.iter().enumerate().all(|(a, (x, y))| {
        let a = a as u8;
        x.len() == px.len() + 1
            && y.len() == py.len() + 1
            && x.letters()[px.len()] == a
            && y.letters()[py.len()] == a
            && &x.letters()[..px.len()] == px
            && &y.letters()[..py.len()] == py
    })
}

impl fmt::Display for ElementTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A group element in canonical form: the reduced, domain-sorted table.
/// Equality of elements is equality of these tables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Element(ElementTable);

impl Deref for Element {
    type Target = ElementTable;
    fn deref(&self) -> &ElementTable {
        &self.0
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Element {
    pub fn identity(k: u8) -> Element {
        Element(ElementTable::identity(k))
    }

    /// Validate rows and reduce.
    pub fn from_pairs(k: u8, pairs: Vec<(Word, Word)>) -> Result<Element> {
        Ok(ElementTable::new(k, pairs)?.reduce())
    }

    /// Binary-alphabet shorthand for literal tables in code and tests.
    pub fn binary(rows: &[(&str, &str)]) -> Element {
        let pairs = rows.iter().map(|(x, y)| (crate::words::w(x), crate::words::w(y))).collect();
        Element::from_pairs(2, pairs).expect("valid literal table")
    }

    pub fn table(&self) -> &ElementTable {
        &self.0
    }

    pub fn into_table(self) -> ElementTable {
        self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.pairs.len() == 1 && self.0.pairs[0].0.is_empty()
    }

    pub fn invert(&self) -> Element {
        Element(self.0.invert())
    }

    /// `x -> self(other(x))`.
    pub fn compose(&self, other: &Element) -> Element {
        compose_tables(&self.0, &other.0).reduce()
    }

    pub fn pow(&self, n: i64) -> Element {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut acc = Element::identity(self.k());
        for _ in 0..n.unsigned_abs() {
            acc = base.compose(&acc);
        }
        acc
    }
}

pub fn reduce(t: &ElementTable) -> Element {
    t.reduce()
}

pub fn compose(f: &Element, g: &Element) -> Element {
    f.compose(g)
}

pub fn invert(e: &Element) -> Element {
    e.invert()
}

pub fn apply(e: &Element, w: &Word) -> Result<Word> {
    e.apply(w)
}

pub fn table_size(e: &Element) -> usize {
    e.size()
}

pub fn equal(a: &Element, b: &Element) -> bool {
    a == b
}

/// Pairwise composition on the join of `imC(g)` and `domC(f)`; unreduced.
pub fn compose_tables(f: &ElementTable, g: &ElementTable) -> ElementTable {
    assert_eq!(f.k, g.k, "alphabets differ");
    let mut pairs = Vec::with_capacity(f.pairs.len() + g.pairs.len());
    // Domain of f, sorted, to enumerate the f-rows below a short g-image.
    for (x, y) in &g.pairs {
        if let Some(i) = f.row_for(y) {
            let (fx, fy) = &f.pairs[i];
            pairs.push((x.clone(), fy.concat(&y.suffix_from(fx.len()))));
        } else {
            let start = f.pairs.partition_point(|p| p.0 < *y);
            for (fx, fy) in f.pairs[start..].iter().take_while(|p| y.is_prefix_of(&p.0)) {
                pairs.push((x.concat(&fx.suffix_from(y.len())), fy.clone()));
            }
        }
    }
    ElementTable::from_unsorted(f.k, pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::w;

    fn sigma() -> Element {
        Element::binary(&[("00", "0"), ("01", "10"), ("1", "11")])
    }

    fn kappa() -> Element {
        Element::binary(&[("0", "1"), ("1", "0")])
    }

    #[test]
    fn reduce_examples() {
        let t = ElementTable::new(2, vec![(w("00"), w("00")), (w("01"), w("01")), (w("1"), w("1"))]).unwrap();
        assert!(t.reduce().is_identity());
        assert_eq!(kappa().size(), 2);
        let t = ElementTable::new(2, vec![(w("00"), w("10")), (w("01"), w("11")), (w("1"), w("0"))]).unwrap();
        assert_eq!(t.reduce(), kappa());
        // siblings in the domain whose images are not siblings stay apart
        let t = ElementTable::new(2, vec![(w("0"), w("0")), (w("10"), w("11")), (w("11"), w("10"))]).unwrap();
        assert_eq!(t.reduce().size(), 3);
    }

    #[test]
    fn reduce_ternary() {
        let pairs = level(3, 2).into_iter().map(|x| (x.clone(), x)).collect();
        assert!(ElementTable::new(3, pairs).unwrap().reduce().is_identity());
    }

    #[test]
    fn restrict_step_examples() {
        let k = kappa();
        let r = k.restrict_step(&w("0")).unwrap();
        assert_eq!(r.pairs(), &[(w("00"), w("10")), (w("01"), w("11")), (w("1"), w("0"))]);
        let id = Element::identity(2);
        assert_eq!(id.restrict_step(&Word::empty()).unwrap().pairs(), &[(w("0"), w("0")), (w("1"), w("1"))]);
        let r = sigma().restrict_step(&w("00")).unwrap();
        assert_eq!(r.pairs(), &[(w("000"), w("00")), (w("001"), w("01")), (w("01"), w("10")), (w("1"), w("11"))]);
        assert!(sigma().restrict_step(&w("0")).is_err());
    }

    #[test]
    fn restrict_image_examples() {
        let id = Element::identity(2);
        assert_eq!(id.restrict_image_to_level(1).unwrap().pairs(), &[(w("0"), w("0")), (w("1"), w("1"))]);
        let r = sigma().restrict_image_to_level(2).unwrap();
        assert_eq!(r.pairs(), &[(w("000"), w("00")), (w("001"), w("01")), (w("01"), w("10")), (w("1"), w("11"))]);
        assert!(matches!(sigma().restrict_image_to_level(1), Err(Error::LevelTooSmall { .. })));
    }

    #[test]
    fn compose_examples() {
        let k = kappa();
        assert!(k.compose(&k).is_identity());
        let n = kappa();
        let c = Element::binary(&[("0", "0"), ("10", "11"), ("11", "10")]);
        assert_eq!(n.compose(&c), Element::binary(&[("0", "1"), ("10", "01"), ("11", "00")]));
        let s = sigma();
        assert!(s.compose(&s.invert()).is_identity());
        assert!(s.invert().compose(&s).is_identity());
    }

    #[test]
    fn invert_examples() {
        assert_eq!(sigma().invert(), Element::binary(&[("0", "00"), ("10", "01"), ("11", "1")]));
        assert_eq!(kappa().invert(), kappa());
        assert!(Element::identity(2).invert().is_identity());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(sigma().apply(&w("001")).unwrap(), w("01"));
        assert_eq!(kappa().apply(&w("0110")).unwrap(), w("1110"));
        assert_eq!(Element::identity(2).apply(&w("101")).unwrap(), w("101"));
        assert!(matches!(sigma().apply(&w("0")), Err(Error::NotInDomain(_))));
    }

    #[test]
    fn sizes_and_equality() {
        assert_eq!(table_size(&Element::identity(2)), 1);
        assert!(equal(&sigma().compose(&sigma().invert()), &Element::identity(2)));
    }

    #[test]
    fn text_round_trip() {
        let s = sigma();
        let parsed = ElementTable::parse(&s.to_text(), 2).unwrap().reduce();
        assert_eq!(parsed, s);
        let alias = ElementTable::parse("aa -> a\nab -> ba\nb -> bb\n", 2).unwrap().reduce();
        assert_eq!(alias, s);
        assert!(ElementTable::parse("0 -> 0\n", 2).is_err());
    }

    #[test]
    fn invalid_tables_rejected() {
        assert!(ElementTable::new(2, vec![(w("0"), w("0")), (w("1"), w("0"))]).is_err());
        assert!(ElementTable::new(2, vec![(w("0"), w("00")), (w("1"), w("1"))]).is_err());
    }
}
