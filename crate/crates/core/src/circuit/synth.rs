//! Permutations of `{0,1}^w` as circuits of lowered NOT, CNOT, Toffoli and
//! adjacent wire swaps.

use super::bijective::{Circuit, Gate};
use crate::error::{Error, Result};
use crate::gens::Generator;
use crate::table::Element;
use crate::words::{PrefixCode, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Width of a permutation of `{0,1}^w` given as the image list `p[x]`,
/// words read as big-endian integers.
fn width_of(p: &[usize]) -> Result<usize> {
    let w = p.len().trailing_zeros() as usize;
    if p.len() != 1 << w {
        return Err(Error::InvalidTable(format!("{} points is not a power of two", p.len())));
    }
    let mut seen = vec![false; p.len()];
    for &y in p {
        if y >= p.len() || std::mem::replace(&mut seen[y], true) {
            return Err(Error::InvalidTable("not a permutation".into()));
        }
    }
    Ok(w)
}

pub fn permutation_parity(p: &[usize]) -> Result<Parity> {
    width_of(p)?;
    let mut seen = vec![false; p.len()];
    let mut cycles = 0;
    for s in 0..p.len() {
        if !seen[s] {
            cycles += 1;
            let mut i = s;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
            }
        }
    }
    Ok(if (p.len() - cycles).is_multiple_of(2) { Parity::Even } else { Parity::Odd })
}

/// `x a -> p(x) a` on one more wire; always even.
pub fn lift_identity_wire(p: &[usize]) -> Result<Vec<usize>> {
    width_of(p)?;
    Ok((0..2 * p.len()).map(|z| (p[z >> 1] << 1) | (z & 1)).collect())
}

/// The element acting by `p` on words of length `w`.
pub fn permutation_element(p: &[usize]) -> Result<Element> {
    let w = width_of(p)?;
    let pairs = (0..p.len()).map(|x| (Word::from_value(x as u64, w, 2), Word::from_value(p[x] as u64, w, 2))).collect();
    Element::from_pairs(2, pairs)
}

/// Reversible operations on logical wires (0-based, wire 0 the first
/// letter).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rop {
    Not(usize),
    Cnot(usize, usize),
    Toffoli(usize, usize, usize),
    /// Exchange the values of two wires.
    Swap(usize, usize),
}

impl Rop {
    fn apply(self, x: usize, w: usize) -> usize {
        let bit = |x: usize, i: usize| (x >> (w - 1 - i)) & 1;
        let flip = |x: usize, i: usize| x ^ (1 << (w - 1 - i));
        match self {
            Rop::Not(t) => flip(x, t),
            Rop::Cnot(c, t) if bit(x, c) == 1 => flip(x, t),
            Rop::Toffoli(a, b, t) if bit(x, a) & bit(x, b) == 1 => flip(x, t),
            Rop::Swap(i, j) if bit(x, i) != bit(x, j) => flip(flip(x, i), j),
            _ => x,
        }
    }
}

struct Prog {
    w: usize,
    ops: Vec<Rop>,
}

impl Prog {
    fn push_all(&mut self, ops: &[Rop]) {
        self.ops.extend_from_slice(ops);
    }

    fn push_inverse(&mut self, ops: &[Rop]) {
        self.ops.extend(ops.iter().rev());
    }
}

fn run(ops: &[Rop], x: usize, w: usize) -> usize {
    ops.iter().fold(x, |x, op| op.apply(x, w))
}

/// NOT on every wire where `x` has a one.
fn translate(x: usize, w: usize) -> Vec<Rop> {
    (0..w).filter(|&i| (x >> (w - 1 - i)) & 1 == 1).map(Rop::Not).collect()
}

/// Linear ops sending the nonzero vector `v` to the unit vector of wire
/// `dest`, fixing the unit vectors of wires listed in `keep` (which `v`
/// must avoid).
fn to_unit(v: usize, dest: usize, w: usize, keep: &[usize]) -> Vec<Rop> {
    let bit = |i: usize| (v >> (w - 1 - i)) & 1 == 1;
    let pivot = (0..w).find(|&i| bit(i) && !keep.contains(&i)).expect("v leaves the kept span");
    let mut ops: Vec<Rop> = (0..w).filter(|&i| i != pivot && bit(i)).map(|i| Rop::Cnot(pivot, i)).collect();
    if pivot != dest {
        ops.push(Rop::Swap(pivot, dest));
    }
    ops
}

/// Multi-controlled NOT using the `free` wires as dirty ancillas.
fn mct(ctl: &[usize], t: usize, free: &[usize], out: &mut Vec<Rop>) {
    match ctl.len() {
        0 => out.push(Rop::Not(t)),
        1 => out.push(Rop::Cnot(ctl[0], t)),
        2 => out.push(Rop::Toffoli(ctl[0], ctl[1], t)),
        k if free.len() + 2 >= k => {
            // V-chain: t ^= c_k a_{k-2}, a_{i} ^= c_{i+2} a_{i-1}, a_1 ^= c_1 c_2
            let a = &free[..k - 2];
            let mut down = vec![Rop::Toffoli(ctl[k - 1], a[k - 3], t)];
            for i in (1..k - 2).rev() {
                down.push(Rop::Toffoli(ctl[i + 1], a[i - 1], a[i]));
            }
            let bottom = Rop::Toffoli(ctl[0], ctl[1], a[0]);
            let up: Vec<Rop> = down.iter().rev().copied().collect();
            out.extend_from_slice(&down);
            out.push(bottom);
            out.extend_from_slice(&up);
            // second pass restores the ancillas
            out.extend_from_slice(&down[1..]);
            out.push(bottom);
            out.extend_from_slice(&up[..up.len() - 1]);
        }
        k => {
            let anc = *free.first().expect("an ancilla wire is available");
            let k1 = k.div_ceil(2);
            let (c1, c2) = ctl.split_at(k1);
            let mut c2a = c2.to_vec();
            c2a.push(anc);
            let mut free1 = c2.to_vec();
            free1.push(t);
            let mut g1 = Vec::new();
            mct(c1, anc, &free1, &mut g1);
            let mut g2 = Vec::new();
            mct(&c2a, t, c1, &mut g2);
            for _ in 0..2 {
                out.extend_from_slice(&g2);
                out.extend_from_slice(&g1);
            }
        }
    }
}

/// Every placement of a one- or two-control Toffoli, with control
/// polarities, targeting wire `t`.
fn flips(t: usize, w: usize) -> Vec<Vec<Rop>> {
    let mut out = Vec::new();
    let others: Vec<usize> = (0..w).filter(|&i| i != t).collect();
    for (ix, &i) in others.iter().enumerate() {
        for pi in [false, true] {
            let neg = |on: bool, i: usize| if on { vec![Rop::Not(i)] } else { vec![] };
            let mut g = neg(pi, i);
            g.push(Rop::Cnot(i, t));
            g.extend(neg(pi, i));
            out.push(g);
            for &j in &others[ix + 1..] {
                for pj in [false, true] {
                    let mut g = neg(pi, i);
                    g.extend(neg(pj, j));
                    g.push(Rop::Toffoli(i, j, t));
                    g.extend(neg(pj, j));
                    g.extend(neg(pi, i));
                    out.push(g);
                }
            }
        }
    }
    out
}

/// `(a b)(c d)` for distinct points, `w ≥ 4`.
fn double_transposition(prog: &mut Prog, pts: [usize; 4]) {
    let w = prog.w;
    let mut g: Vec<Rop> = Vec::new();
    let mut cur = pts;
    // make the four points sum to zero, one offending bit at a time
    while cur.iter().fold(0, |s, x| s ^ x) != 0 {
        let s = cur.iter().fold(0, |s, x| s ^ x);
        let t = (0..w).find(|&i| (s >> (w - 1 - i)) & 1 == 1).unwrap();
        let fix = flips(t, w)
            .into_iter()
            .find(|f| cur.iter().filter(|&&x| run(f, x, w) != x).count() % 2 == 1)
            .expect("some flip separates the points");
        cur = cur.map(|x| run(&fix, x, w));
        g.extend(fix);
    }
    let [a, b, c, _] = cur;
    let mut lin = translate(a, w);
    lin.extend(to_unit(a ^ b, w - 1, w, &[]));
    let c1 = run(&lin, c, w);
    lin.extend(to_unit(c1, w - 2, w, &[w - 1]));
    lin.extend((0..w - 2).map(Rop::Not));
    g.extend(lin);
    let mut core = Vec::new();
    let ctl: Vec<usize> = (0..w - 2).collect();
    mct(&ctl, w - 1, &[w - 2], &mut core);
    prog.push_all(&g);
    prog.push_all(&core);
    prog.push_inverse(&g);
}

/// `(a b)` through the fully controlled NOT, `w ≤ 3`.
fn transposition(prog: &mut Prog, a: usize, b: usize) {
    let w = prog.w;
    let mut g = translate(a, w);
    g.extend(to_unit(a ^ b, w - 1, w, &[]));
    g.extend((0..w - 1).map(Rop::Not));
    let mut core = Vec::new();
    let ctl: Vec<usize> = (0..w - 1).collect();
    mct(&ctl, w - 1, &[], &mut core);
    prog.push_all(&g);
    prog.push_all(&core);
    prog.push_inverse(&g);
}

/// Transpositions whose product, applied in list order, is `p`.
fn transpositions(p: &[usize]) -> Vec<(usize, usize)> {
    let mut seen = vec![false; p.len()];
    let mut out = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut i = p[s];
        while i != s {
            seen[i] = true;
            out.push((s, i));
            i = p[i];
        }
    }
    out
}

fn program(p: &[usize], w: usize) -> Vec<Rop> {
    let mut prog = Prog { w, ops: Vec::new() };
    let ts = transpositions(p);
    if w <= 3 {
        for (a, b) in ts {
            transposition(&mut prog, a, b);
        }
    } else {
        for pair in ts.chunks(2) {
            let [(a, b), (c, d)] = [pair[0], pair[1]];
            if [a, b].iter().any(|x| *x == c || *x == d) {
                let (e, f) = {
                    let mut spare = (0..p.len()).filter(|x| ![a, b, c, d].contains(x));
                    (spare.next().unwrap(), spare.next().unwrap())
                };
                double_transposition(&mut prog, [a, b, e, f]);
                double_transposition(&mut prog, [e, f, c, d]);
            } else {
                double_transposition(&mut prog, [a, b, c, d]);
            }
        }
    }
    prog.ops
}

/// Lay logical operations out as lowered gates, moving operands next to
/// each other with adjacent swaps and restoring the wire order at the end.
fn compile(ops: &[Rop], w: usize) -> Vec<Gate> {
    let mut pos: Vec<usize> = (0..w).collect();
    let mut at: Vec<usize> = (0..w).collect();
    let mut gates = Vec::new();
    let swap = |p: usize, pos: &mut Vec<usize>, at: &mut Vec<usize>, gates: &mut Vec<Gate>| {
        let (l, r) = (at[p], at[p + 1]);
        at.swap(p, p + 1);
        pos[l] = p + 1;
        pos[r] = p;
        gates.push(Gate::Swap(p + 1));
    };
    for op in ops {
        let (gen, wires): (Generator, Vec<usize>) = match *op {
            Rop::Not(t) => {
                gates.push(Gate::apply(Generator::Not, pos[t]));
                continue;
            }
            Rop::Swap(i, j) => {
                // relabel: the values trade places
                pos.swap(i, j);
                at[pos[i]] = i;
                at[pos[j]] = j;
                continue;
            }
            Rop::Cnot(c, t) => (Generator::Cnot, vec![c, t]),
            Rop::Toffoli(a, b, t) => (Generator::Toffoli, vec![a, b, t]),
        };
        let d = wires.iter().map(|&l| pos[l]).min().unwrap();
        for (k, &l) in wires.iter().enumerate() {
            while pos[l] > d + k {
                let p = pos[l] - 1;
                swap(p, &mut pos, &mut at, &mut gates);
            }
        }
        gates.push(Gate::apply(gen, d));
    }
    for target in 0..w {
        while pos[target] > target {
            let p = pos[target] - 1;
            swap(p, &mut pos, &mut at, &mut gates);
        }
    }
    gates
}

/// A circuit on `{0,1}^w` computing the even permutation `p`.
pub fn synthesize_even_permutation(p: &[usize]) -> Result<Circuit> {
    let w = width_of(p)?;
    if permutation_parity(p)? == Parity::Odd {
        return Err(Error::OddPermutation);
    }
    let ops = program(p, w);
    debug_assert!((0..p.len()).all(|x| run(&ops, x, w) == p[x]));
    Circuit::new(PrefixCode::level(2, w), compile(&ops, w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::ternary::TernaryWord;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn verify(c: &Circuit, p: &[usize]) {
        let w = c.in_width();
        for x in 0..p.len() {
            let input = TernaryWord::padded(&Word::from_value(x as u64, w, 2), w);
            let want = TernaryWord::padded(&Word::from_value(p[x] as u64, w, 2), w);
            assert_eq!(c.eval(&input).unwrap(), want, "{p:?} at {x}");
        }
    }

    #[test]
    fn parity_and_lift() {
        assert_eq!(permutation_parity(&[0, 1, 2, 3]).unwrap(), Parity::Even);
        let t = [0, 1, 2, 3, 4, 5, 7, 6];
        assert_eq!(permutation_parity(&t).unwrap(), Parity::Odd);
        let lifted = lift_identity_wire(&t).unwrap();
        assert_eq!(permutation_parity(&lifted).unwrap(), Parity::Even);
        assert_eq!(lifted[13], 15);
        assert!(permutation_parity(&[0, 0]).is_err());
        assert!(permutation_parity(&[0, 1, 2]).is_err());
    }

    #[test]
    fn toffoli_transposition() {
        let t = [0, 1, 2, 3, 4, 5, 7, 6];
        assert!(matches!(synthesize_even_permutation(&t), Err(Error::OddPermutation)));
        let c = Circuit::new(PrefixCode::level(2, 3), vec![Gate::apply(Generator::Toffoli, 0)]).unwrap();
        verify(&c, &t);
        let lifted = lift_identity_wire(&t).unwrap();
        verify(&synthesize_even_permutation(&lifted).unwrap(), &lifted);
    }

    #[test]
    fn small_widths_exhaustive() {
        assert_eq!(synthesize_even_permutation(&[0, 1, 2, 3]).unwrap().gate_count(), 0);
        assert_eq!(synthesize_even_permutation(&[0]).unwrap().gate_count(), 0);
        let mut count = 0;
        let mut p = vec![0, 1, 2, 3];
        permutations(&mut p, 0, &mut |p| {
            if permutation_parity(p).unwrap() == Parity::Even {
                verify(&synthesize_even_permutation(p).unwrap(), p);
                count += 1;
            }
        });
        assert_eq!(count, 12);
    }

    fn permutations(p: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == p.len() {
            f(p);
            return;
        }
        for i in k..p.len() {
            p.swap(k, i);
            permutations(p, k + 1, f);
            p.swap(k, i);
        }
    }

    #[test]
    fn random_width_four_and_five() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for w in [4, 5] {
            for _ in 0..30 {
                let mut p: Vec<usize> = (0..1 << w).collect();
                p.shuffle(&mut rng);
                if permutation_parity(&p).unwrap() == Parity::Odd {
                    p.swap(0, 1);
                }
                verify(&synthesize_even_permutation(&p).unwrap(), &p);
            }
        }
    }

    #[test]
    fn element_of_permutation() {
        let e = permutation_element(&[1, 0]).unwrap();
        assert_eq!(e, Generator::Not.element(2).unwrap());
    }
}
