//! Membership tests for `F`, `T`, the length-preserving subgroup and the
//! finite symmetric subgroups `𝔖_{PA^m}`.

use crate::table::Element;
use crate::words::PrefixCode;

/// Order-preserving: with rows in domain order the images are sorted too.
pub fn in_f(e: &Element) -> bool {
    e.pairs().windows(2).all(|p| p[0].1 < p[1].1)
}

/// Length-preserving: every row keeps the word length.
pub fn in_lp(e: &Element) -> bool {
    e.pairs().iter().all(|(x, y)| x.len() == y.len())
}

/// Cyclic order-preserving: in domain order the image column is a rotation
/// of the sorted image code. Any table of the element can be used; the
/// reduced one is the cheapest.
pub fn in_t(e: &Element) -> bool {
    let im = e.im_code();
    let sorted = im.words();
    let ys: Vec<_> = e.pairs().iter().map(|p| &p.1).collect();
    let start = im.rank(ys[0]).expect("image word is in the image code");
    let n = sorted.len();
    ys.iter().enumerate().all(|(i, y)| **y == sorted[(start + i) % n])
}

/// Least `m` such that some restriction of `e` permutes `P·A^m`.
pub fn in_s_pam(e: &Element, p: &PrefixCode) -> Option<usize> {
    // Membership is monotone in m and stabilises once m exceeds the table
    // lengths, so a bounded scan is exhaustive.
    let bound = e.max_word_len() + p.max_len() + 1;
    (0..=bound).find(|&m| permutes(e, &p.expand_level(m)))
}

/// True when `e` restricts to a permutation of the maximal code `q`.
pub fn permutes(e: &Element, q: &PrefixCode) -> bool {
    if !q.refines(&e.dom_code()) {
        return false;
    }
    let Ok(r) = e.restrict_to_domain(q) else { return false };
    let mut ys: Vec<_> = r.pairs().iter().map(|p| p.1.clone()).collect();
    ys.sort();
    ys == q.words()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gens::Generator;
    use crate::words::w;

    fn g(x: Generator) -> Element {
        x.element(2).unwrap()
    }

    /// Independent check on the full level `A^n`, `n` the longest image word.
    fn in_t_full_level(e: &Element) -> bool {
        let n = e.max_im_len();
        let t = e.restrict_image_to_level(n).unwrap();
        let vals: Vec<u64> = t.pairs().iter().map(|p| p.1.value(2)).collect();
        let size = vals.len() as u64;
        vals.iter().enumerate().all(|(i, &v)| v == (vals[0] + i as u64) % size)
    }

    #[test]
    fn f_membership() {
        assert!(in_f(&g(Generator::Sigma)));
        assert!(in_f(&g(Generator::Sigma1)));
        assert!(!in_f(&g(Generator::Kappa)));
        assert!(in_f(&Element::identity(2)));
    }

    #[test]
    fn lp_membership() {
        assert!(in_lp(&g(Generator::Nu)));
        assert!(!in_lp(&g(Generator::Sigma)));
        assert!(in_lp(&Element::binary(&[("0", "1"), ("10", "01"), ("11", "00")])));
    }

    #[test]
    fn t_membership_matches_full_level_check() {
        let ks = g(Generator::Kappa).compose(&g(Generator::Sigma));
        for e in [g(Generator::Sigma), g(Generator::Kappa), ks, g(Generator::Nu), g(Generator::Lambda), g(Generator::Mu)]
        {
            assert_eq!(in_t(&e), in_t_full_level(&e), "{e}");
        }
        assert!(in_t(&g(Generator::Sigma)));
        assert!(!in_t(&g(Generator::Nu)));
    }

    #[test]
    fn s_membership() {
        assert_eq!(in_s_pam(&g(Generator::Kappa), &PrefixCode::root(2)), Some(1));
        assert_eq!(in_s_pam(&g(Generator::Sigma), &PrefixCode::root(2)), None);
        assert_eq!(in_s_pam(&g(Generator::Nu), &PrefixCode::level(2, 1)), Some(1));
        assert_eq!(in_s_pam(&Element::identity(2), &PrefixCode::root(2)), Some(0));
        let p = PrefixCode::new(2, vec![w("00"), w("01"), w("1")]).unwrap();
        assert_eq!(in_s_pam(&g(Generator::Kappa), &p), None);
    }
}
