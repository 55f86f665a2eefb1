//! Property tests for the algebraic invariants.

mod common;

use proptest::prelude::*;
use thompson::circuit::{
    lift_identity_wire, permutation_parity, word_to_circuit, PaddedFunction, Parity, TernaryWord,
};
use thompson::factor::{factor_lpf, factor_lpf_at};
use thompson::gens::{controlled_lower, lower, Generator};
use thompson::genword::{Atom, GenWord, Wrap};
use thompson::subgroups::{in_f, in_lp, in_t};
use thompson::words::{dict_compare, PrefixCode, Word};
use thompson::Element;

const V_GENS: [Generator; 6] =
    [Generator::Kappa, Generator::Lambda, Generator::Mu, Generator::Nu, Generator::Sigma, Generator::Sigma1];

fn word_strategy(gens: &'static [Generator], max_len: usize) -> impl Strategy<Value = GenWord> {
    prop::collection::vec((0..gens.len(), any::<bool>()), 0..=max_len).prop_map(move |v| {
        GenWord::new(v.into_iter().map(|(i, inv)| if inv { Atom::inverse_of(gens[i]) } else { Atom::plain(gens[i]) }).collect())
    })
}

fn element_strategy(max_len: usize) -> impl Strategy<Value = Element> {
    word_strategy(&V_GENS, max_len).prop_map(|w| w.eval(2).unwrap())
}

fn binary_word(max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0u8..2, 0..=max_len).prop_map(Word::from_letters)
}

/// Maximal codes from a sequence of leaf choices to split.
fn code_strategy(max_splits: usize) -> impl Strategy<Value = PrefixCode> {
    prop::collection::vec(any::<prop::sample::Index>(), 0..=max_splits).prop_map(|picks| {
        let mut words = vec![Word::empty()];
        for ix in picks {
            let x = words.swap_remove(ix.index(words.len()));
            words.push(x.push(0));
            words.push(x.push(1));
        }
        PrefixCode::new(2, words).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dictionary_order_is_total(a in binary_word(6), b in binary_word(6), c in binary_word(6)) {
        prop_assert_eq!(dict_compare(&a, &b), dict_compare(&b, &a).reverse());
        if dict_compare(&a, &b).is_le() && dict_compare(&b, &c).is_le() {
            prop_assert!(dict_compare(&a, &c).is_le());
        }
    }

    #[test]
    fn long_words_have_one_prefix_in_a_code(p in code_strategy(8), tail in binary_word(4)) {
        let long = Word::from_letters(vec![1; p.max_len()]).concat(&tail);
        let mut x = tail.concat(&Word::from_letters(vec![0; p.max_len()]));
        for w in [long, x.clone()] {
            prop_assert_eq!(p.words().iter().filter(|q| q.is_prefix_of(&w)).count(), 1);
        }
        x = x.prefix(p.max_len());
        prop_assert!(p.prefix_of(&x).is_some());
    }

    #[test]
    fn rank_and_unrank_are_inverse(p in code_strategy(10)) {
        for (i, w) in p.words().iter().enumerate() {
            prop_assert_eq!(p.rank(w).unwrap(), i);
            prop_assert_eq!(p.unrank(i).unwrap(), w);
        }
    }

    #[test]
    fn level_expansion_multiplies(p in code_strategy(6), n in 0usize..4) {
        let q = p.expand_level(n);
        prop_assert_eq!(q.len(), p.len() << n);
        prop_assert!(q.is_maximal());
        prop_assert!(q.refines(&p));
    }

    #[test]
    fn reduction_is_confluent(e in element_strategy(8), picks in prop::collection::vec(any::<prop::sample::Index>(), 1..5)) {
        let mut t = e.table().clone();
        for ix in picks {
            let x = t.pairs()[ix.index(t.size())].0.clone();
            t = t.restrict_step(&x).unwrap();
        }
        prop_assert_eq!(t.reduce(), e.clone());
        prop_assert_eq!(e.table().reduce(), e);
    }

    #[test]
    fn restriction_keeps_values(e in element_strategy(8), x in binary_word(10), n in 0usize..3) {
        let t = e.table().restrict_image_to_level(e.max_im_len() + n).unwrap();
        if let (Ok(a), Ok(b)) = (e.apply(&x), t.apply(&x)) {
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn composition_is_associative(a in element_strategy(6), b in element_strategy(6), c in element_strategy(6)) {
        prop_assert_eq!(a.compose(&b).compose(&c), a.compose(&b.compose(&c)));
    }

    #[test]
    fn table_size_is_subadditive(a in element_strategy(10), b in element_strategy(10)) {
        prop_assert!(a.compose(&b).size() <= a.size() + b.size());
    }

    #[test]
    fn inverses(e in element_strategy(10), w in word_strategy(&V_GENS, 8)) {
        prop_assert_eq!(e.invert().invert(), e.clone());
        prop_assert!(e.compose(&e.invert()).is_identity());
        prop_assert!(w.concat(&w.inverse()).eval(2).unwrap().is_identity());
    }

    #[test]
    fn lp_f_factors_are_unique(e in element_strategy(10), extra in 1usize..3) {
        let f = factor_lpf(&e);
        prop_assert!(in_lp(&f.pi) && in_f(&f.f));
        prop_assert_eq!(f.pi.compose(&f.f), e.clone());
        let g = factor_lpf_at(&e, e.max_im_len() + extra).unwrap();
        prop_assert_eq!((g.pi, g.f), (f.pi.clone(), f.f.clone()));
        if in_t(&e) {
            prop_assert!(in_t(&f.pi));
        }
    }

    #[test]
    fn lowering_is_a_homomorphism(a in element_strategy(5), b in element_strategy(5), d in 0usize..3) {
        prop_assert_eq!(lower(&a.compose(&b), d), lower(&a, d).compose(&lower(&b, d)));
        if a != b {
            prop_assert_ne!(lower(&a, d), lower(&b, d));
        }
    }

    #[test]
    fn controlled_lowering_is_multiplicative(a in element_strategy(5), b in element_strategy(5), c in binary_word(3)) {
        prop_assert_eq!(controlled_lower(&a.compose(&b), &c), controlled_lower(&a, &c).compose(&controlled_lower(&b, &c)));
    }

    #[test]
    fn padding_is_multiplicative(a in element_strategy(5), b in element_strategy(5)) {
        // φ = b on a table whose image is a's domain, ψ = a there
        let tb = b.table().clone();
        let ta = a.table().clone();
        let joint = tb.im_code().join(&ta.dom_code());
        let phi = tb.restrict_to_image(&joint).unwrap();
        let psi = ta.restrict_to_domain(&phi.im_code()).unwrap();
        let (m, l, n) = (phi.max_dom_len(), phi.max_im_len(), psi.max_im_len());
        prop_assume!(m <= 5 && l <= 6 && n <= 6);
        let pb = PaddedFunction::new(phi.clone(), m, l).unwrap();
        let pa = PaddedFunction::new(psi.clone(), l, n).unwrap();
        let prod = PaddedFunction::new(thompson::table::compose_tables(&psi, &phi), m, n).unwrap();
        for x in TernaryWord::all(m) {
            prop_assert_eq!(pa.eval(&pb.eval(&x).unwrap()).unwrap(), prod.eval(&x).unwrap());
        }
    }

    #[test]
    fn circuits_compute_their_words(w in word_strategy(&thompson::gens::Generator::CATALOG, 5), low in 0usize..3) {
        let mut w = w;
        if let Some(a) = w.atoms.first_mut() {
            if low > 0 {
                a.wraps.push(Wrap::Low(low));
            }
        }
        let c = word_to_circuit(&w).unwrap();
        prop_assert_eq!(c.element(), w.eval(2).unwrap());
        for (p, q) in c.table().pairs() {
            prop_assert_eq!(c.eval(&TernaryWord::padded(p, c.in_width())).unwrap(), TernaryWord::padded(q, c.out_width()));
        }
    }

    #[test]
    fn lifting_makes_permutations_even(perm in Just((0..8usize).collect::<Vec<_>>()).prop_shuffle()) {
        prop_assert_eq!(permutation_parity(&lift_identity_wire(&perm).unwrap()).unwrap(), Parity::Even);
    }
}

#[test]
fn generator_families() {
    for g in [Generator::Not, Generator::Cnot, Generator::Toffoli, Generator::Tau(1, 2), Generator::Tau(2, 5)] {
        assert!(in_lp(&g.element(2).unwrap()), "{g}");
    }
    for g in [Generator::Sigma, Generator::Sigma1] {
        assert!(in_f(&g.element(2).unwrap()), "{g}");
    }
}
