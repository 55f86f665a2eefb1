//! Inverse of an order-preserving circuit by binary search over the input
//! tree, unrolled into `m + 1` stages.

use std::collections::HashMap;

use super::bijective::Circuit;
use super::logic::{LogicCircuit, Op};
use super::ternary::Trit;
use crate::error::{Error, Result};
use crate::subgroups::in_f;

/// A netlist with `n` inputs and `m` outputs computing the inverse of the
/// padded map of `c` on its image code and `⊥^m` elsewhere.
pub fn invert_f_circuit(c: &Circuit) -> Result<LogicCircuit> {
    if !in_f(&c.element()) {
        return Err(Error::NotOrderPreserving);
    }
    let (m, n) = (c.in_width(), c.out_width());
    let mut out = LogicCircuit::new(n);
    if m == 0 {
        out.set_outputs(Vec::new())?;
        return Ok(out);
    }
    let def = out.define(c.clone());
    let bot = out.op(Op::Const(Trit::Bot));
    let zero = out.op(Op::Const(Trit::Zero));
    let one = out.op(Op::Const(Trit::One));
    // copies keyed by their input wires; stages share the prefixes of `v`
    let mut copies: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut v: Vec<usize> = Vec::with_capacity(m);
    let mut result = vec![bot; m];

    for t in 0..=m {
        // the search point: v 1 0^{m-1-t}, or v itself in the last stage
        let mut w = v.clone();
        if t < m {
            w.push(one);
            w.resize(m, zero);
        }
        let ys: Vec<Vec<usize>> = (1..=m)
            .map(|j| {
                let args: Vec<usize> = (0..m).map(|i| if i < j { w[i] } else { bot }).collect();
                copies.entry(args.clone()).or_insert_with(|| out.sub(def, args)).clone()
            })
            .collect();
        let y: Vec<usize> = (0..n)
            .map(|i| ys[1..].iter().fold(ys[0][i], |acc, cp| out.op(Op::Merge(acc, cp[i]))))
            .collect();

        // x = the prefix of w in the domain code, as w masked past |x|
        let hits: Vec<usize> = ys.iter().map(|cp| out.op(Op::IsBit(cp[0]))).collect();
        let mut reach = vec![hits[m - 1]; m];
        for i in (0..m - 1).rev() {
            reach[i] = out.op(Op::Or(hits[i], reach[i + 1]));
        }
        let x: Vec<usize> = (0..m).map(|i| out.op(Op::Mask(reach[i], w[i]))).collect();

        let mut state = bot;
        for i in 0..n {
            state = out.op(Op::Cmp(state, y[i], i));
        }
        let found = out.op(Op::IsBot(state));
        for i in 0..m {
            result[i] = out.op(Op::Mux(found, x[i], result[i]));
        }
        if t < m {
            // f(x) below the target: continue in the right half
            v.push(out.op(Op::IsZero(state)));
        }
    }
    out.set_outputs(result)?;
    Ok(out)
}
