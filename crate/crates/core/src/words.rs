//! Words over a finite alphabet, dictionary order and finite prefix codes.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// Alphabet arity. Letters are `0..k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    k: u8,
}

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet { k: 2 };

    pub fn new(k: u8) -> Result<Self> {
        if !(2..=10).contains(&k) {
            return Err(Error::BadArity(k));
        }
        Ok(Alphabet { k })
    }

    pub fn k(self) -> u8 {
        self.k
    }
}

/// A finite word. The derived ordering is the dictionary order: a prefix
/// sorts first, otherwise the first differing letter decides.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<u8>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_strict_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_prefix_of(other)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn push(&self, letter: u8) -> Word {
        let mut v = self.0.clone();
        v.push(letter);
        Word(v)
    }

    pub fn prefix(&self, n: usize) -> Word {
        Word(self.0[..n].to_vec())
    }

    pub fn suffix_from(&self, n: usize) -> Word {
        Word(self.0[n..].to_vec())
    }

    pub fn max_letter_ok(&self, k: u8) -> bool {
        self.0.iter().all(|&a| a < k)
    }

    /// Parse a word. `-` is the empty word; for `k = 2` the letters `a`/`b`
    /// are accepted as `0`/`1`.
    pub fn parse(s: &str, k: u8) -> Result<Word> {
        let s = s.trim();
        if s == "-" || s == "ε" {
            return Ok(Word::empty());
        }
        let mut v = Vec::with_capacity(s.len());
        for c in s.chars() {
            let a = match c {
                'a' if k == 2 => 0,
                'b' if k == 2 => 1,
                '0'..='9' => c as u8 - b'0',
                _ => return Err(Error::Parse(format!("bad letter {c:?} in word {s:?}"))),
            };
            if a >= k {
                return Err(Error::Parse(format!("letter {a} out of range for k={k}")));
            }
            v.push(a);
        }
        Ok(Word(v))
    }

    /// Integer value of the word read in base `k` (words of equal length
    /// compare like these values).
    pub fn value(&self, k: u8) -> u64 {
        self.0.iter().fold(0u64, |acc, &a| acc * k as u64 + a as u64)
    }

    /// The word of length `len` whose base-`k` value is `v`.
    pub fn from_value(mut v: u64, len: usize, k: u8) -> Word {
        let mut letters = vec![0u8; len];
        for slot in letters.iter_mut().rev() {
            *slot = (v % k as u64) as u8;
            v /= k as u64;
        }
        Word(letters)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for &a in &self.0 {
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{self}\"")
    }
}

/// Shorthand used heavily in tests: `w("0110")`, `w("-")`, `w("ab")`.
pub fn w(s: &str) -> Word {
    Word::parse(s, 2).expect("valid binary word")
}

pub fn dict_compare(u: &Word, v: &Word) -> Ordering {
    u.cmp(v)
}

/// All words of length `n`, in dictionary order.
pub fn level(k: u8, n: usize) -> Vec<Word> {
    let count = (k as u64).pow(n as u32);
    (0..count).map(|v| Word::from_value(v, n, k)).collect()
}

/// A finite prefix code, stored in dictionary order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PrefixCode {
    k: u8,
    words: Vec<Word>,
}

impl PrefixCode {
    /// Builds a code from arbitrary words; rejects duplicates and prefix pairs.
    pub fn new(k: u8, mut words: Vec<Word>) -> Result<Self> {
        Alphabet::new(k)?;
        words.sort();
        for wd in &words {
            if !wd.max_letter_ok(k) {
                return Err(Error::InvalidCode(format!("word {wd} uses a letter >= {k}")));
            }
        }
        // In dictionary order a word that is a prefix of another is a prefix
        // of its immediate successor.
        for pair in words.windows(2) {
            if pair[0].is_prefix_of(&pair[1]) {
                return Err(Error::InvalidCode(format!("{} is a prefix of {}", pair[0], pair[1])));
            }
        }
        Ok(PrefixCode { k, words })
    }

    /// Like `new` but also requires maximality.
    pub fn maximal(k: u8, words: Vec<Word>) -> Result<Self> {
        let code = PrefixCode::new(k, words)?;
        if !code.is_maximal() {
            return Err(Error::InvalidCode("prefix code is not maximal".into()));
        }
        Ok(code)
    }

    /// Trusted constructor for words already sorted and prefix-free.
    pub(crate) fn from_sorted(k: u8, words: Vec<Word>) -> Self {
        debug_assert!(words.windows(2).all(|p| p[0] < p[1] && !p[0].is_prefix_of(&p[1])));
        PrefixCode { k, words }
    }

    pub fn root(k: u8) -> Self {
        PrefixCode { k, words: vec![Word::empty()] }
    }

    pub fn level(k: u8, n: usize) -> Self {
        PrefixCode { k, words: level(k, n) }
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, x: &Word) -> bool {
        self.words.binary_search(x).is_ok()
    }

    pub fn max_len(&self) -> usize {
        self.words.iter().map(Word::len).max().unwrap_or(0)
    }

    pub fn min_len(&self) -> usize {
        self.words.iter().map(Word::len).min().unwrap_or(0)
    }

    /// Kraft equality `sum k^-|p| = 1`, evaluated exactly after scaling by
    /// `k^L` with `L` the longest word length.
    pub fn is_maximal(&self) -> bool {
        if self.words.is_empty() {
            return false;
        }
        let big_l = self.max_len() as u32;
        let k = self.k as u128;
        if let Some(total) = k.checked_pow(big_l) {
            let mut sum: u128 = 0;
            for wd in &self.words {
                sum += k.pow(big_l - wd.len() as u32);
            }
            return sum == total;
        }
        let kb = BigUint::from(self.k);
        let mut sum = BigUint::from(0u32);
        for wd in &self.words {
            sum += kb.pow(big_l - wd.len() as u32);
        }
        sum == kb.pow(big_l)
    }

    /// Index of `x` in dictionary order.
    pub fn rank(&self, x: &Word) -> Result<usize> {
        self.words.binary_search(x).map_err(|_| Error::NotInCode(x.to_string()))
    }

    pub fn unrank(&self, i: usize) -> Result<&Word> {
        self.words.get(i).ok_or(Error::OutOfRange { index: i, len: self.words.len() })
    }

    /// The element of the code that is a prefix of `x`, if any. This is the
    /// greatest code word not exceeding `x` in dictionary order.
    pub fn prefix_of(&self, x: &Word) -> Option<usize> {
        let idx = match self.words.binary_search(x) {
            Ok(i) => return Some(i),
            Err(0) => return None,
            Err(i) => i - 1,
        };
        self.words[idx].is_prefix_of(x).then_some(idx)
    }

    /// `P·A^n`.
    pub fn expand_level(&self, n: usize) -> PrefixCode {
        let tails = level(self.k, n);
        let mut out = Vec::with_capacity(self.words.len() * tails.len());
        for p in &self.words {
            for t in &tails {
                out.push(p.concat(t));
            }
        }
        PrefixCode { k: self.k, words: out }
    }

    /// True when every word of `self` has a prefix in `coarser`.
    pub fn refines(&self, coarser: &PrefixCode) -> bool {
        self.words.iter().all(|x| coarser.prefix_of(x).is_some())
    }

    /// The coarsest maximal prefix code refining both maximal codes.
    pub fn join(&self, other: &PrefixCode) -> PrefixCode {
        let (a, b) = (&self.words, &other.words);
        let mut out = Vec::with_capacity(a.len().max(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            let (p, q) = (&a[i], &b[j]);
            if p == q {
                out.push(p.clone());
                i += 1;
                j += 1;
            } else if p.is_prefix_of(q) {
                out.push(q.clone());
                j += 1;
                if j == b.len() || !p.is_prefix_of(&b[j]) {
                    i += 1;
                }
            } else if q.is_prefix_of(p) {
                out.push(p.clone());
                i += 1;
                if i == a.len() || !q.is_prefix_of(&a[i]) {
                    j += 1;
                }
            } else {
                // Only reachable when an input is not maximal.
                if p < q {
                    out.push(p.clone());
                    i += 1;
                } else {
                    out.push(q.clone());
                    j += 1;
                }
            }
        }
        PrefixCode { k: self.k, words: out }
    }

    /// Parse one word per line; blank lines and `#` comments are skipped.
    pub fn parse(text: &str, k: u8) -> Result<PrefixCode> {
        let mut words = Vec::new();
        for line in text.lines() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() || line.starts_with("k=") {
                continue;
            }
            for tok in line.split_whitespace() {
                words.push(Word::parse(tok, k)?);
            }
        }
        PrefixCode::new(k, words)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for wd in &self.words {
            s.push_str(&wd.to_string());
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(ws: &[&str]) -> PrefixCode {
        PrefixCode::new(2, ws.iter().map(|s| w(s)).collect()).unwrap()
    }

    #[test]
    fn dictionary_order() {
        assert_eq!(dict_compare(&w("0"), &w("00")), Ordering::Less);
        assert_eq!(dict_compare(&w("01"), &w("10")), Ordering::Less);
        assert_eq!(dict_compare(&w("-"), &w("1")), Ordering::Less);
        assert_eq!(dict_compare(&w("10"), &w("1")), Ordering::Greater);
    }

    #[test]
    fn maximality() {
        assert!(code(&["00", "01", "1"]).is_maximal());
        assert!(code(&["0", "1"]).is_maximal());
        assert!(!code(&["0", "11"]).is_maximal());
        assert!(PrefixCode::root(3).is_maximal());
        assert!(PrefixCode::new(2, vec![w("0"), w("01")]).is_err());
    }

    #[test]
    fn kraft_big_lengths() {
        // 0, 10, 110, ..., 1^199 0, 1^200: lengths past the u128 fast path.
        let mut ws = Vec::new();
        for i in 0..200 {
            let mut v = vec![1u8; i];
            v.push(0);
            ws.push(Word::from_letters(v));
        }
        ws.push(Word::from_letters(vec![1u8; 200]));
        let c = PrefixCode::new(2, ws.clone()).unwrap();
        assert!(c.is_maximal());
        ws.pop();
        assert!(!PrefixCode::new(2, ws).unwrap().is_maximal());
    }

    #[test]
    fn rank_and_unrank() {
        let l2 = PrefixCode::level(2, 2);
        assert_eq!(l2.rank(&w("11")).unwrap(), 3);
        assert_eq!(l2.unrank(0).unwrap(), &w("00"));
        let c = code(&["00", "01", "1"]);
        assert_eq!(c.rank(&w("1")).unwrap(), 2);
        assert_eq!(c.unrank(2).unwrap(), &w("1"));
        assert!(matches!(c.rank(&w("0")), Err(Error::NotInCode(_))));
        assert!(matches!(c.unrank(3), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn expand() {
        assert_eq!(PrefixCode::root(2).expand_level(2), PrefixCode::level(2, 2));
        assert_eq!(code(&["0", "1"]).expand_level(1), PrefixCode::level(2, 2));
        assert_eq!(
            code(&["00", "01", "1"]).expand_level(1),
            code(&["000", "001", "010", "011", "10", "11"])
        );
    }

    #[test]
    fn prefix_lookup_and_join() {
        let c = code(&["00", "01", "1"]);
        assert_eq!(c.prefix_of(&w("0110")), Some(1));
        assert_eq!(c.prefix_of(&w("0")), None);
        assert_eq!(c.prefix_of(&w("1")), Some(2));
        let d = code(&["0", "10", "11"]);
        assert_eq!(c.join(&d), PrefixCode::level(2, 2));
        assert_eq!(c.join(&c), c);
    }

    #[test]
    fn letter_aliases() {
        assert_eq!(Word::parse("abba", 2).unwrap(), w("0110"));
        assert!(Word::parse("2", 2).is_err());
        assert_eq!(Word::parse("-", 3).unwrap(), Word::empty());
    }
}
