//! Padded `{0,1,⊥}` circuits.

pub mod bijective;
pub mod invert;
pub mod logic;
pub mod restrict;
pub mod synth;
pub mod ternary;

pub use bijective::{circuit_to_word, common_refinement, word_to_circuit, Circuit, Gate};
pub use logic::{AnyCircuit, LogicCircuit, Op};
pub use ternary::{pad, PaddedFunction, TernaryWord, Trit};
pub use restrict::restrict_image_circuit;
pub use invert::invert_f_circuit;
pub use synth::{lift_identity_wire, permutation_element, permutation_parity, synthesize_even_permutation, Parity};
