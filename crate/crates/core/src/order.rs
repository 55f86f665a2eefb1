//! Order of an element: a permuted code certifies finite order, an orbit
//! `e^ℓ(x) = x z` with `z ≠ ε` certifies infinite order.

use crate::table::Element;
use crate::words::{PrefixCode, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderResult {
    /// `e` permutes `witness`; `order` is the lcm of the cycle lengths.
    Finite { order: u64, witness: PrefixCode },
    /// `e^l(x) = x z`. A negative `l` means the orbit grows under `e⁻¹`.
    Infinite { x: Word, l: i64, z: Word },
    Undecided,
}

impl OrderResult {
    /// Re-check the certificate against `e`.
    pub fn verify(&self, e: &Element) -> bool {
        match self {
            OrderResult::Finite { order, witness } => {
                let Ok(t) = e.restrict_to_domain(witness) else { return false };
                let mut ys: Vec<_> = t.pairs().iter().map(|p| p.1.clone()).collect();
                ys.sort();
                ys == witness.words() && e.pow(*order as i64).is_identity() && cycle_lcm(e, witness) == *order
            }
            OrderResult::Infinite { x, l, z } => {
                !z.is_empty() && *l != 0 && e.pow(*l).apply(x).is_ok_and(|y| y == x.concat(z))
            }
            OrderResult::Undecided => true,
        }
    }
}

/// Alternate between refining a candidate invariant code and scanning the
/// orbits of its words, for at most `max_depth` rounds.
pub fn order(e: &Element, max_depth: usize) -> OrderResult {
    order_capped(e, max_depth, usize::MAX)
}

/// As [`order`], also giving up once the candidate code exceeds `max_code`
/// words.
pub fn order_capped(e: &Element, max_depth: usize, max_code: usize) -> OrderResult {
    let inv = e.invert();
    let mut r = e.dom_code().join(&e.im_code());
    for _ in 0..max_depth.max(1) {
        if r.len() > max_code {
            break;
        }
        let t = e.restrict_to_domain(&r).expect("join refines the domain");
        let mut image: Vec<Word> = t.pairs().iter().map(|p| p.1.clone()).collect();
        image.sort();
        if image == r.words() {
            return OrderResult::Finite { order: cycle_lcm(e, &r), witness: r };
        }
        let steps = r.len() + 1;
        for x in r.words() {
            if let Some(found) = orbit_witness(e, x, steps, 1).or_else(|| orbit_witness(&inv, x, steps, -1)) {
                return found;
            }
        }
        let next = r.join(&PrefixCode::new(e.k(), image).expect("image of a maximal code"));
        r = next;
    }
    OrderResult::Undecided
}

/// Walk `x, e(x), e²(x), …` looking for a strict prefix relation with `x`.
fn orbit_witness(e: &Element, x: &Word, steps: usize, sign: i64) -> Option<OrderResult> {
    let mut y = x.clone();
    for j in 1..=steps as i64 {
        y = e.apply(&y).ok()?;
        if x.is_strict_prefix_of(&y) {
            return Some(OrderResult::Infinite { x: x.clone(), l: sign * j, z: y.suffix_from(x.len()) });
        }
        if y.is_strict_prefix_of(x) {
            // e^{-j} takes y to x = y z
            return Some(OrderResult::Infinite { x: y.clone(), l: -sign * j, z: x.suffix_from(y.len()) });
        }
        if y == *x {
            return None;
        }
    }
    None
}

fn cycle_lcm(e: &Element, code: &PrefixCode) -> u64 {
    let words = code.words();
    let mut seen = vec![false; words.len()];
    let mut acc = 1u64;
    for start in 0..words.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0u64;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            let y = e.apply(&words[i]).expect("code refines the domain");
            i = code.rank(&y).expect("code is invariant");
        }
        acc = lcm(acc, len);
    }
    acc
}

fn lcm(a: u64, b: u64) -> u64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
