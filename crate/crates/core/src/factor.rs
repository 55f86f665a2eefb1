//! Unique factorizations `lp·F`, `F·lp` and `𝔖·F`, the multiplication
//! formula for table-level factorizations, the blow-up family `φ_n`, and the
//! `𝔖_{PA^n}` subgroup comparisons.

use crate::error::{Error, Result};
use crate::table::{Element, ElementTable};
use crate::words::{PrefixCode, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorMode {
    /// `e = π·f` with `π` length-preserving.
    LpF,
    /// `e = f·π` with `π` length-preserving.
    FLp,
    /// `e = π·f` with `π` permuting `P·A^n`.
    SP(PrefixCode),
}

/// `pi` and `f` as group elements, plus the table-level codes the factors
/// were read from: `f` maps `domain` onto `image` in order (for `FLp` the
/// codes belong to the table of `e` whose domain is a full level).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub pi: Element,
    pub f: Element,
    pub mode: FactorMode,
    pub domain: PrefixCode,
    pub image: PrefixCode,
}

impl Factorization {
    /// The factored element.
    pub fn product(&self) -> Element {
        match self.mode {
            FactorMode::FLp => self.f.compose(&self.pi),
            _ => self.pi.compose(&self.f),
        }
    }
}

/// The order-preserving bijection between two codes of equal size.
pub fn order_preserving(p: &PrefixCode, q: &PrefixCode) -> Result<Element> {
    if p.len() != q.len() {
        return Err(Error::CardinalityMismatch(p.len(), q.len()));
    }
    let pairs = p.words().iter().cloned().zip(q.words().iter().cloned()).collect();
    Ok(ElementTable::new(p.k(), pairs)?.reduce())
}

/// Factor a table `P -> Q` as `π_Q · f` with `f: P -> Q` order-preserving
/// and `π_Q` a permutation of `Q`. Mode is `SP(Q)`.
pub fn factor_table(t: &ElementTable) -> Factorization {
    let p = t.dom_code();
    let q = t.im_code();
    let f = ElementTable::from_sorted(t.k(), p.words().iter().cloned().zip(q.words().iter().cloned()).collect());
    let pi = ElementTable::from_unsorted(
        t.k(),
        q.words().iter().cloned().zip(t.pairs().iter().map(|r| r.1.clone())).collect(),
    );
    Factorization { pi: pi.reduce(), f: f.reduce(), mode: FactorMode::SP(q.clone()), domain: p, image: q }
}

/// `e = π·f`, `π` length-preserving, `f ∈ F`. Read from the restriction of
/// `e` whose image code is `A^n`, `n` the longest image word.
pub fn factor_lpf(e: &Element) -> Factorization {
    factor_lpf_at(e, e.max_im_len()).expect("longest image word fits")
}

/// The same factorization read at a deeper level `n`.
pub fn factor_lpf_at(e: &Element, n: usize) -> Result<Factorization> {
    let t = e.restrict_image_to_level(n)?;
    Ok(Factorization { mode: FactorMode::LpF, ..factor_table(&t) })
}

/// `e = f·π`, `π` length-preserving, `f ∈ F`, via the `lp·F` factorization
/// of the inverse.
pub fn factor_flp(e: &Element) -> Factorization {
    let inv = factor_lpf(&e.invert());
    Factorization {
        pi: inv.pi.invert(),
        f: inv.f.invert(),
        mode: FactorMode::FLp,
        domain: inv.image,
        image: inv.domain,
    }
}

/// `e = π·f` with `π ∈ 𝔖_{PA^n}` and `f ∈ F`, for the least `n` such that
/// `P·A^n` refines the image code of `e`.
pub fn factor_sf(e: &Element, p: &PrefixCode) -> Factorization {
    let im = e.im_code();
    let n = (0..)
        .find(|&n| p.expand_level(n).refines(&im))
        .expect("a deep enough level refines any finite code");
    let target = p.expand_level(n);
    let t = e.restrict_to_image(&target).expect("target refines the image code");
    Factorization { mode: FactorMode::SP(p.clone()), ..factor_table(&t) }
}

/// Factorization of `ψ·φ` from table-level factorizations of `ψ: Q -> R`
/// and `φ: P -> Q`: `π = π_R^ψ · f^ψ · π_Q^φ · (f^ψ)⁻¹` and `f = f^ψ · f^φ`.
pub fn product_factorization(psi: &Factorization, phi: &Factorization) -> Result<Factorization> {
    if phi.image != psi.domain || matches!(psi.mode, FactorMode::FLp) || matches!(phi.mode, FactorMode::FLp) {
        return Err(Error::CodesMismatch);
    }
    let conj = psi.f.compose(&phi.pi).compose(&psi.f.invert());
    Ok(Factorization {
        pi: psi.pi.compose(&conj),
        f: psi.f.compose(&phi.f),
        mode: FactorMode::SP(psi.image.clone()),
        domain: phi.domain.clone(),
        image: psi.image.clone(),
    })
}

/// The binary family `a^{n-1} -> a^{n-2}b`, `a^i b -> a^{i-1}b` (`0 < i < n-1`),
/// `b -> a^{n-1}`: a cyclic permutation of an `n`-word code whose `lp·F`
/// factors have `2^{n-1}` rows.
pub fn phi_family(n: usize) -> Result<Element> {
    if n <= 2 {
        return Err(Error::BadN(n));
    }
    let a = |i: usize| vec![0u8; i];
    let ab = |i: usize| {
        let mut v = a(i);
        v.push(1);
        Word::from_letters(v)
    };
    let mut pairs = vec![(Word::from_letters(a(n - 1)), ab(n - 2)), (ab(0), Word::from_letters(a(n - 1)))];
    for i in 1..n - 1 {
        pairs.push((ab(i), ab(i - 1)));
    }
    Ok(ElementTable::new(2, pairs)?.reduce())
}

/// Whether `⋃_n 𝔖_{P1 A^n}` and `⋃_m 𝔖_{P2 A^m}` coincide, i.e. whether
/// `P1·A^n = P2·A^m` for some `n, m`.
pub fn same_s_subgroup(p1: &PrefixCode, p2: &PrefixCode) -> bool {
    // A common expansion with n, m > 0 descends to one with n-1, m-1, so the
    // least solution has n = 0 or m = 0 and is bounded by the longest word.
    if p1.k() != p2.k() {
        return false;
    }
    (0..=p2.max_len()).any(|n| {
        let e1 = p1.expand_level(n);
        (0..=p1.max_len()).any(|m| e1 == p2.expand_level(m))
    })
}

/// The order-preserving `θ: P1·A^N -> P2·A^M`; conjugation by it carries
/// `𝔖_{P2 A^{M+i}}` onto `𝔖_{P1 A^{N+i}}`.
pub fn conjugator(p1: &PrefixCode, n: usize, p2: &PrefixCode, m: usize) -> Result<Element> {
    order_preserving(&p1.expand_level(n), &p2.expand_level(m))
}
