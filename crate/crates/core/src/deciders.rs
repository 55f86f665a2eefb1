//! Exact answers, by exhaustive evaluation, to the circuit questions: same
//! element, identity element, maximal extension.

use crate::circuit::{AnyCircuit, TernaryWord};
use crate::error::{Error, Result};
use crate::table::{Element, ElementTable};
use crate::words::{level, Word};

/// Widest input enumerated.
pub const MAX_WIDTH: usize = 20;

/// The table a circuit computes: every padded binary input whose output is
/// not all `⊥`, paired with its unpadded output.
pub fn circuit_table(c: &AnyCircuit) -> Result<ElementTable> {
    let (m, n) = (c.in_width(), c.out_width());
    if m > MAX_WIDTH {
        return Err(Error::WidthTooLarge(m));
    }
    let mut pairs = Vec::new();
    for len in 0..=m {
        for x in level(2, len) {
            let y = c.eval(&TernaryWord::padded(&x, m))?;
            if n == 0 && len == 0 {
                pairs.push((x, Word::empty()));
                continue;
            }
            if y == TernaryWord::bots(n) {
                continue;
            }
            let y = y.unpad().ok_or_else(|| Error::InvalidTable(format!("output {y} is not a padded word")))?;
            pairs.push((x, y));
        }
    }
    ElementTable::new(2, pairs)
}

pub fn circuit_element(c: &AnyCircuit) -> Result<Element> {
    Ok(circuit_table(c)?.reduce())
}

pub fn circuits_equal(a: &AnyCircuit, b: &AnyCircuit) -> Result<bool> {
    Ok(circuit_element(a)? == circuit_element(b)?)
}

pub fn is_identity_circuit(c: &AnyCircuit) -> Result<bool> {
    Ok(circuit_element(c)?.is_identity())
}

/// Whether the table computed by `psi` is the maximal extension of the
/// element computed by `phi`.
pub fn is_maximally_extended(psi: &AnyCircuit, phi: &AnyCircuit) -> Result<bool> {
    Ok(&circuit_table(psi)? == circuit_element(phi)?.table())
}
