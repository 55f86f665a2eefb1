//! Counting gadgets built from a set `T ⊆ {0,1}^n` of satisfying
//! assignments: the code `P_T`, the bijection `Φ: P_T -> {0,1}^{n+2}` and
//! the map `φ: {00,01,1}·{0,1}^n -> {0,1,10,11}·{0,1}^n` restricting to it.

use crate::error::{Error, Result};
use crate::factor::{factor_lpf_at, order_preserving};
use crate::table::{Element, ElementTable};
use crate::words::{level, w, PrefixCode, Word};

/// A CNF formula: clauses of nonzero literals, `v` for variable `v` true
/// and `-v` for false.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<i64>>,
}

impl Cnf {
    /// DIMACS: `c` comment lines, a `p cnf <vars> <clauses>` header, then
    /// clauses as signed integers each terminated by `0`.
    pub fn parse_dimacs(text: &str) -> Result<Cnf> {
        let mut vars = None;
        let mut declared = 0;
        let mut clauses = Vec::new();
        let mut cur = Vec::new();
        for line in text.lines().map(str::trim) {
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<&str> = rest.split_whitespace().collect();
                match f.as_slice() {
                    ["cnf", v, c] => {
                        vars = Some(v.parse().map_err(|_| Error::Parse(format!("bad header {line:?}")))?);
                        declared = c.parse().map_err(|_| Error::Parse(format!("bad header {line:?}")))?;
                    }
                    _ => return Err(Error::Parse(format!("bad header {line:?}"))),
                }
                continue;
            }
            let n = vars.ok_or_else(|| Error::Parse("clause before the p cnf header".into()))?;
            for tok in line.split_whitespace() {
                let lit: i64 = tok.parse().map_err(|_| Error::Parse(format!("bad literal {tok:?}")))?;
                if lit == 0 {
                    clauses.push(std::mem::take(&mut cur));
                } else if lit.unsigned_abs() as usize > n {
                    return Err(Error::Parse(format!("literal {lit} exceeds {n} variables")));
                } else {
                    cur.push(lit);
                }
            }
        }
        if !cur.is_empty() {
            clauses.push(cur);
        }
        let vars = vars.ok_or_else(|| Error::Parse("missing p cnf header".into()))?;
        if clauses.len() != declared {
            return Err(Error::Parse(format!("header declares {declared} clauses, found {}", clauses.len())));
        }
        Ok(Cnf { vars, clauses })
    }

    /// Variable `i` (1-based) is letter `i` of the assignment.
    pub fn satisfied_by(&self, x: &Word) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| (x.letters()[l.unsigned_abs() as usize - 1] == 1) == (l > 0)))
    }
}

/// `T ⊆ {0,1}^n`, materialised as one flag per assignment in dictionary
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthSet {
    n: usize,
    member: Vec<bool>,
}

pub const MAX_VARS: usize = 20;

impl TruthSet {
    pub fn new(n: usize, members: &[Word]) -> Result<TruthSet> {
        check_vars(n)?;
        let mut member = vec![false; 1 << n];
        for x in members {
            if x.len() != n || !x.max_letter_ok(2) {
                return Err(Error::Parse(format!("assignment {x} is not in {{0,1}}^{n}")));
            }
            member[x.value(2) as usize] = true;
        }
        Ok(TruthSet { n, member })
    }

    pub fn from_flags(n: usize, member: Vec<bool>) -> Result<TruthSet> {
        check_vars(n)?;
        if member.len() != 1 << n {
            return Err(Error::Parse(format!("{} flags for {n} variables", member.len())));
        }
        Ok(TruthSet { n, member })
    }

    pub fn from_cnf(cnf: &Cnf) -> Result<TruthSet> {
        check_vars(cnf.vars)?;
        let member = level(2, cnf.vars).iter().map(|x| cnf.satisfied_by(x)).collect();
        Ok(TruthSet { n: cnf.vars, member })
    }

    /// `n` on the first line, then one assignment per line (`-` for the
    /// empty assignment when `n = 0`).
    pub fn parse(text: &str) -> Result<TruthSet> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let n = lines
            .next()
            .and_then(|l| l.strip_prefix("n=").unwrap_or(l).parse().ok())
            .ok_or_else(|| Error::Parse("truth set needs a variable count".into()))?;
        let words = lines.map(|l| Word::parse(l, 2)).collect::<Result<Vec<_>>>()?;
        TruthSet::new(n, &words)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn contains(&self, x: &Word) -> bool {
        x.len() == self.n && self.member[x.value(2) as usize]
    }

    pub fn members(&self) -> Vec<Word> {
        self.words(true)
    }

    pub fn complement(&self) -> Vec<Word> {
        self.words(false)
    }

    fn words(&self, want: bool) -> Vec<Word> {
        (0..self.member.len())
            .filter(|&i| self.member[i] == want)
            .map(|i| Word::from_value(i as u64, self.n, 2))
            .collect()
    }
}

fn check_vars(n: usize) -> Result<()> {
    if n > MAX_VARS {
        Err(Error::WidthTooLarge(n))
    } else {
        Ok(())
    }
}

fn cat(parts: &[&Word]) -> Word {
    parts.iter().fold(Word::empty(), |acc, p| acc.concat(p))
}

/// `00T̄ ∪ 00T0 ∪ 00T1 ∪ 01{0,1}^n ∪ 1T ∪ 1T̄0 ∪ 1T̄1`.
pub fn build_p_t(ts: &TruthSet) -> PrefixCode {
    let (z, o) = (w("0"), w("1"));
    let mut words = Vec::with_capacity(4 << ts.n);
    for x in level(2, ts.n) {
        if ts.contains(&x) {
            words.extend([cat(&[&z, &z, &x, &z]), cat(&[&z, &z, &x, &o]), cat(&[&o, &x])]);
        } else {
            words.extend([cat(&[&z, &z, &x]), cat(&[&o, &x, &z]), cat(&[&o, &x, &o])]);
        }
        words.push(cat(&[&z, &o, &x]));
    }
    PrefixCode::new(2, words).expect("the seven parts are prefix-free")
}

/// `|T|` from the rank in `P_T` of the last word starting with `00`.
pub fn count_sat_via_rank(ts: &TruthSet) -> u64 {
    let p = build_p_t(ts);
    let top = Word::from_letters(vec![1; ts.n]);
    let last = if ts.contains(&top) { cat(&[&w("00"), &top, &w("1")]) } else { cat(&[&w("00"), &top]) };
    let rank = p.rank(&last).expect("the last 00-word is in the code") as u64;
    rank + 1 - (1u64 << ts.n)
}

pub fn brute_force_count_sat(ts: &TruthSet) -> u64 {
    ts.member.iter().filter(|&&b| b).count() as u64
}

pub fn brute_force_count_cnf(cnf: &Cnf) -> u64 {
    level(2, cnf.vars).iter().filter(|x| cnf.satisfied_by(x)).count() as u64
}

/// `Φ: P_T -> {0,1}^{n+2}`, as a table on `P_T`.
pub fn build_phi(ts: &TruthSet) -> ElementTable {
    let (z, o) = (w("0"), w("1"));
    let mut pairs = Vec::with_capacity(4 << ts.n);
    for x in level(2, ts.n) {
        if ts.contains(&x) {
            pairs.push((cat(&[&z, &z, &x, &z]), cat(&[&z, &x, &z])));
            pairs.push((cat(&[&z, &z, &x, &o]), cat(&[&z, &x, &o])));
            pairs.push((cat(&[&o, &x]), cat(&[&o, &o, &x])));
        } else {
            pairs.push((cat(&[&z, &z, &x]), cat(&[&o, &o, &x])));
            pairs.push((cat(&[&o, &x, &z]), cat(&[&z, &x, &z])));
            pairs.push((cat(&[&o, &x, &o]), cat(&[&z, &x, &o])));
        }
        pairs.push((cat(&[&z, &o, &x]), cat(&[&o, &z, &x])));
    }
    ElementTable::new(2, pairs).expect("Φ is a bijection onto the level")
}

/// `φ: {00,01,1}·{0,1}^n -> {0,10,11}·{0,1}^n`.
pub fn build_phi_p0_q0(ts: &TruthSet) -> ElementTable {
    let (z, o) = (w("0"), w("1"));
    let mut pairs = Vec::with_capacity(3 << ts.n);
    for x in level(2, ts.n) {
        if ts.contains(&x) {
            pairs.push((cat(&[&z, &z, &x]), cat(&[&z, &x])));
            pairs.push((cat(&[&o, &x]), cat(&[&o, &o, &x])));
        } else {
            pairs.push((cat(&[&z, &z, &x]), cat(&[&o, &o, &x])));
            pairs.push((cat(&[&o, &x]), cat(&[&z, &x])));
        }
        pairs.push((cat(&[&z, &o, &x]), cat(&[&o, &z, &x])));
    }
    ElementTable::new(2, pairs).expect("φ is a bijection between the two codes")
}

/// The order-preserving map `P -> {0,1}^r` with `|P| = 2^r`.
pub fn rank_element(p: &PrefixCode) -> Result<Element> {
    let r = p.len().trailing_zeros() as usize;
    if p.len() != 1 << r {
        return Err(Error::CardinalityMismatch(p.len(), 1 << r));
    }
    order_preserving(p, &PrefixCode::level(2, r))
}

/// The F-factor of `Φ` taken on the image level `n + 2` is the rank
/// function of `P_T`.
pub fn lpf_factor_rank_check(ts: &TruthSet) -> bool {
    let phi = build_phi(ts).reduce();
    let Ok(fact) = factor_lpf_at(&phi, ts.n + 2) else { return false };
    rank_element(&build_p_t(ts)).is_ok_and(|r| r == fact.f)
}
