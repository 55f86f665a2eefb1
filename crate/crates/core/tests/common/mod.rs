//! Seeded random words and elements shared by the integration targets.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use thompson::gens::Generator;
use thompson::genword::{Atom, GenWord, Wrap};
use thompson::words::{PrefixCode, Word};

pub use rand::SeedableRng;
pub type Rng8 = ChaCha8Rng;

pub fn rng(seed: u64) -> Rng8 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub const HIGMAN: [Generator; 4] = [Generator::Kappa, Generator::Lambda, Generator::Mu, Generator::Nu];
pub const F_GENS: [Generator; 2] = [Generator::Sigma, Generator::Sigma1];
pub const CATALOG: [Generator; 10] = Generator::CATALOG;

/// Uniform word over `gens` and their inverses, length in `1..=max_len`.
pub fn random_word(r: &mut Rng8, gens: &[Generator], max_len: usize) -> GenWord {
    let len = r.gen_range(1..=max_len);
    let atoms = (0..len)
        .map(|_| {
            let g = *gens.choose(r).unwrap();
            if r.gen_bool(0.5) {
                Atom::inverse_of(g)
            } else {
                Atom::plain(g)
            }
        })
        .collect();
    GenWord::new(atoms)
}

/// Words mixing catalog generators, transpositions, and lowered gates.
pub fn random_circuit_word(r: &mut Rng8, max_len: usize, max_low: usize) -> GenWord {
    let len = r.gen_range(1..=max_len);
    let atoms = (0..len)
        .map(|_| {
            let g = match r.gen_range(0..12) {
                10 => {
                    let i = r.gen_range(1..=3);
                    Generator::Tau(i, r.gen_range(i + 1..=4))
                }
                11 => Generator::Tau(1, 2),
                i => CATALOG[i % 10],
            };
            let mut a = if r.gen_bool(0.5) { Atom::inverse_of(g) } else { Atom::plain(g) };
            if max_low > 0 && r.gen_bool(0.25) {
                a.wraps.push(Wrap::Low(r.gen_range(1..=max_low)));
            }
            a
        })
        .collect();
    GenWord::new(atoms)
}

pub fn random_word_of(r: &mut Rng8, max_len: usize) -> Word {
    let len = r.gen_range(0..=max_len);
    Word::from_letters((0..len).map(|_| r.gen_range(0..2)).collect())
}

/// Random maximal binary code by splitting leaves.
pub fn random_code(r: &mut Rng8, max_size: usize, max_len: usize) -> PrefixCode {
    let mut words = vec![Word::empty()];
    let target = r.gen_range(1..=max_size);
    while words.len() < target {
        let splittable: Vec<usize> = (0..words.len()).filter(|&i| words[i].len() < max_len).collect();
        let Some(&i) = splittable.choose(r) else { break };
        let x = words.swap_remove(i);
        words.push(x.push(0));
        words.push(x.push(1));
    }
    PrefixCode::new(2, words).unwrap()
}
