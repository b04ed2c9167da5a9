//! Conjunctive-normal-form encoding of k-colorability for independent
//! checking by external satisfiability solvers, and validation of the
//! models such solvers return.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::graph::TwoDistGraph;
use crate::search::{canonical_form, CanonicalColoring};
use crate::graph::VertexOrder;

/// Propositional encoding: variable `v·k + c + 1` means "vertex v has
/// color c".
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfInstance {
    pub num_vars: u32,
    pub clauses: Vec<Vec<i32>>,
}

pub fn color_var(v: u32, c: u8, k: u8) -> i32 {
    (v * u32::from(k) + u32::from(c) + 1) as i32
}

/// Encode k-colorability: one at-least-one-color clause per vertex and,
/// for each edge of either class and each color, a binary conflict
/// clause. `at_most_one` adds the pairwise per-vertex exclusion clauses;
/// they are redundant for colorability and off by default.
pub fn export_dimacs_with(g: &TwoDistGraph, k: u8, at_most_one: bool) -> CnfInstance {
    let n = g.n() as u32;
    let mut clauses = Vec::new();
    for v in 0..n {
        clauses.push((0..k).map(|c| color_var(v, c, k)).collect());
    }
    if at_most_one {
        for v in 0..n {
            for c in 0..k {
                for c2 in (c + 1)..k {
                    clauses.push(vec![-color_var(v, c, k), -color_var(v, c2, k)]);
                }
            }
        }
    }
    for &(u, v) in g.edges1().iter().chain(g.edges2().iter()) {
        for c in 0..k {
            clauses.push(vec![-color_var(u, c, k), -color_var(v, c, k)]);
        }
    }
    CnfInstance {
        num_vars: n * u32::from(k),
        clauses,
    }
}

pub fn export_dimacs(g: &TwoDistGraph, k: u8) -> CnfInstance {
    export_dimacs_with(g, k, false)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// A variable got no value.
    Unassigned(u32),
    /// A literal mentions a variable outside 1..=num_vars.
    OutOfRange(i32),
    /// Both polarities of one variable appear.
    Contradictory(u32),
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::Unassigned(v) => write!(f, "model leaves variable {v} unassigned"),
            ModelError::OutOfRange(l) => write!(f, "literal {l} is out of range"),
            ModelError::Contradictory(v) => write!(f, "model assigns variable {v} both ways"),
        }
    }
}

/// Turn a literal list (zeros ignored) into a total assignment,
/// 1-indexed. Every variable must appear exactly one way.
pub fn model_from_literals(num_vars: u32, literals: &[i32]) -> Result<Vec<bool>, ModelError> {
    let mut values: Vec<Option<bool>> = vec![None; num_vars as usize + 1];
    for &lit in literals {
        if lit == 0 {
            continue;
        }
        let var = lit.unsigned_abs();
        if var == 0 || var > num_vars {
            return Err(ModelError::OutOfRange(lit));
        }
        let val = lit > 0;
        match values[var as usize] {
            None => values[var as usize] = Some(val),
            Some(prev) if prev == val => {}
            Some(_) => return Err(ModelError::Contradictory(var)),
        }
    }
    let mut out = vec![false; num_vars as usize + 1];
    for var in 1..=num_vars as usize {
        match values[var] {
            Some(v) => out[var] = v,
            None => return Err(ModelError::Unassigned(var as u32)),
        }
    }
    Ok(out)
}

/// Decode a model into a coloring: the lowest true color per vertex, or
/// `None` if some vertex has no true color variable.
pub fn decode_model(g: &TwoDistGraph, k: u8, assignment: &[bool]) -> Option<Vec<u8>> {
    let mut classes = Vec::with_capacity(g.n());
    for v in 0..g.n() as u32 {
        let c = (0..k).find(|&c| assignment[color_var(v, c, k) as usize])?;
        classes.push(c);
    }
    Some(classes)
}

/// True iff the literals form a total assignment whose decoding is a
/// proper k-coloring of `g`. Malformed models are an error, not `false`.
pub fn check_model(g: &TwoDistGraph, k: u8, literals: &[i32]) -> Result<bool, ModelError> {
    let assignment = model_from_literals(g.n() as u32 * u32::from(k), literals)?;
    match decode_model(g, k, &assignment) {
        Some(classes) => Ok(crate::search::is_proper(g, &classes, k)),
        None => Ok(false),
    }
}

/// Decode, then relabel into canonical form along `order`.
pub fn decode_canonical(
    g: &TwoDistGraph,
    k: u8,
    order: &VertexOrder,
    literals: &[i32],
) -> Result<Option<CanonicalColoring>, ModelError> {
    let assignment = model_from_literals(g.n() as u32 * u32::from(k), literals)?;
    Ok(decode_model(g, k, &assignment)
        .filter(|classes| crate::search::is_proper(g, classes, k))
        .map(|classes| canonical_form(&classes, order)))
}

/// Re-encode a coloring as a satisfying model (for round trips).
pub fn encode_coloring(g: &TwoDistGraph, k: u8, classes: &[u8]) -> Vec<i32> {
    let mut lits = Vec::with_capacity(g.n() * k as usize);
    for v in 0..g.n() as u32 {
        for c in 0..k {
            let var = color_var(v, c, k);
            lits.push(if classes[v as usize] == c { var } else { -var });
        }
    }
    lits
}
