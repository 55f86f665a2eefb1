//! Circuit for the restriction of `φ` whose image code is the full level
//! `{0,1}^n`, built from copies of a circuit for `φ^⊥`.

use super::bijective::Circuit;
use super::logic::{LogicCircuit, Op};
use super::ternary::Trit;
use crate::words::PrefixCode;

/// Inputs `x_1 … x_{m+n}`, outputs `n`, where `m` and `n` are the widths of
/// `c`. One copy of `c` runs on each prefix of the input of length at most
/// `m`; the first copy that hits decides the output.
pub fn restrict_image_circuit(c: &Circuit) -> LogicCircuit {
    let (m, n) = (c.in_width(), c.out_width());
    let big_n = m + n;
    let mut out = LogicCircuit::new(big_n);
    if n == 0 {
        // image code {ε}: the domain is {ε} as well
        out.set_outputs(Vec::new()).unwrap();
        return out;
    }
    let def = out.define(c.clone());
    let x = |i: usize| i - 1;
    let bot = out.op(Op::Const(Trit::Bot));
    let zero = out.op(Op::Const(Trit::Zero));

    let mut bad = zero;
    for i in 1..big_n {
        bad = out.op(Op::BadOr(x(i), x(i + 1), bad));
    }

    let copies: Vec<Vec<usize>> = (0..=m)
        .map(|j| {
            let args = (1..=m).map(|i| if i <= j { x(i) } else { bot }).collect();
            out.sub(def, args)
        })
        .collect();

    // q: the image of the unique prefix that lies in the domain code
    let q: Vec<usize> = (0..n)
        .map(|t| copies[1..].iter().fold(copies[0][t], |acc, cp| out.op(Op::Merge(acc, cp[t]))))
        .collect();

    // u_len[k] = [the bit prefix of x has length k]
    let mut u_len = vec![out.op(Op::IsBot(x(1)))];
    for k in 1..big_n {
        u_len.push(out.op(Op::End(x(k), x(k + 1))));
    }
    u_len.push(out.op(Op::IsBit(x(big_n))));

    // a hit on the prefix of length j with |q| = c is valid iff the bit
    // prefix has length j + n - c; lower copies override higher ones
    let mut valid = zero;
    for j in (0..=m).rev() {
        for cc in 1..=n {
            valid = out.op(Op::BitMux(copies[j][cc - 1], u_len[j + n - cc], valid));
        }
    }
    let ok = out.op(Op::AndNot(valid, bad));

    // the suffix after q is x_{L-n+t} for bit prefix length L
    let mut outs = Vec::with_capacity(n);
    for t in 1..=n {
        let mut tail = bot;
        for (k, &u) in u_len.iter().enumerate() {
            if k + t > n && k + t - n <= big_n {
                tail = out.op(Op::Mux(u, x(k + t - n), tail));
            }
        }
        outs.push(out.op(Op::Select(ok, q[t - 1], tail)));
    }
    out.set_outputs(outs).unwrap();
    out
}

/// Input code of the restricted element, for reference.
pub fn restricted_domain(c: &Circuit) -> PrefixCode {
    c.table().restrict_image_to_level(c.out_width()).expect("level bounds the image").dom_code()
}
