//! Reference rows for the three weight-5 orbit tables:
//! `(element, tuple, r_V, orbit label)`.

use std::collections::{BTreeMap, BTreeSet};

use vrank_core::orbits::OrbitDecomposition;
use vrank_core::Pipeline;

pub type Row = (&'static str, &'static str, i64, u32);

pub const PD_TABLE: &[Row] = &[
    ("5'", "(4;0;0;1;0)", 1, 1),
    ("4'+1'", "(0;2;0;2+1;0)", -1, 2),
    ("3'+2'", "(2+2;0;0;1;0)", 2, 3),
    ("3'+1'+1", "(2;2;0;1;0)", 0, 4),
    ("3'+1+1'", "(2;0;2;1;0)", 1, 4),
    ("2'+2+1'", "(0;4;0;1;0)", -1, 1),
    ("2+2'+1'", "(0;0;4;1;0)", 0, 1),
    ("2'+1'+1+1", "(2;0;0;2+1;0)", 1, 2),
    ("2'+1+1'+1", "(0;0;2;2+1;0)", 0, 2),
    ("2'+1+1+1'", "(0;2;0;0;3)", -1, 5),
    ("1'+1+1+1+1", "(0;2+2;0;1;0)", -2, 3),
    ("1+1'+1+1+1", "(0;2;2;1;0)", -1, 4),
    ("1+1+1'+1+1", "(2;0;0;0;3)", 1, 5),
    ("1+1+1+1'+1", "(0;0;2+2;1;0)", 0, 3),
    ("1+1+1+1+1'", "(0;0;2;0;3)", 0, 5),
];

pub const A_TABLE: &[Row] = &[
    ("5r", "(4;0;0;1)", 1, 1),
    ("4r+1r", "(0;2;0;2+1)", -1, 2),
    ("4b+1r", "(0;0;4;1)", 0, 1),
    ("3r+2r", "(2+2;0;0;1)", 2, 3),
    ("3r+2b", "(2;0;2;1)", 1, 4),
    ("3r+1r+1r", "(2;2;0;1)", 0, 4),
    ("2r+2r+1r", "(0;4;0;1)", -1, 1),
    ("2b+2r+1r", "(0;0;2;2+1)", 0, 2),
    ("2b+2b+1r", "(0;0;2+2;1)", 0, 3),
    ("2r+1r+1r+1r", "(2;0;0;2+1)", 1, 2),
    ("2b+1r+1r+1r", "(0;2;2;1)", -1, 4),
    ("1r+1r+1r+1r+1r", "(0;2+2;0;1)", -2, 3),
];

pub const POD_TABLE: &[Row] = &[
    ("(5;0)", "(0;0;4;1)", 0, 1),
    ("(0;5)", "(0;0;2+2;1~)", 0, 2),
    ("(4+1;0)", "(4;0;0;1)", 1, 1),
    ("(0;4+1)", "(0;4;0;1~)", -1, 3),
    ("(4;1)", "(4;0;0;1~)", 1, 3),
    ("(1;4)", "(0;4;0;1)", -1, 1),
    ("(3+2;0)", "(2;0;2;1)", 1, 4),
    ("(0;3+2)", "(0;2;2;1~)", -1, 5),
    ("(3;2)", "(0;2;2;1)", -1, 4),
    ("(2;3)", "(2;0;2;1~)", 1, 5),
    ("(3+1;1)", "(0;0;2+2;1)", 0, 6),
    ("(1;3+1)", "(0;0;4;1~)", 0, 3),
    ("(2+2+1;0)", "(2+2;0;0;1)", 2, 6),
    ("(0;2+2+1)", "(0;2+2;0;1~)", -2, 2),
    ("(2+2;1)", "(2+2;0;0;1~)", 2, 2),
    ("(1;2+2)", "(0;2+2;0;1)", -2, 6),
    ("(2+1;2)", "(2;2;0;1)", 0, 4),
    ("(2;2+1)", "(2;2;0;1~)", 0, 5),
];

pub fn table(pipeline: Pipeline) -> &'static [Row] {
    match pipeline {
        Pipeline::Pd => PD_TABLE,
        Pipeline::A => A_TABLE,
        Pipeline::Pod => POD_TABLE,
    }
}

/// Checks a weight-5 decomposition against the reference table: every row's
/// tuple and rank exactly, and the orbit partition as a set of sets.
pub fn compare(decomposition: &OrbitDecomposition) -> Result<(), String> {
    let rows = table(decomposition.pipeline);
    let found: BTreeMap<String, (String, i64)> = decomposition
        .orbits
        .iter()
        .flat_map(|o| o.members.iter())
        .map(|m| (m.element.to_string(), (m.tuple.to_string(), m.rank)))
        .collect();
    if found.len() != rows.len() {
        return Err(format!("{} elements, expected {}", found.len(), rows.len()));
    }
    for &(element, tuple, rank, _) in rows {
        match found.get(element) {
            None => return Err(format!("row {element} missing")),
            Some((t, r)) if t != tuple || *r != rank => {
                return Err(format!(
                    "row {element}: got {t} rank {r}, expected {tuple} rank {rank}"
                ))
            }
            Some(_) => {}
        }
    }
    let expected: BTreeSet<BTreeSet<String>> = rows
        .iter()
        .map(|r| r.3)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .map(|label| {
            rows.iter()
                .filter(|r| r.3 == label)
                .map(|r| r.0.to_string())
                .collect()
        })
        .collect();
    let actual: BTreeSet<BTreeSet<String>> = decomposition
        .orbits
        .iter()
        .map(|o| o.members.iter().map(|m| m.element.to_string()).collect())
        .collect();
    if actual != expected {
        return Err(format!(
            "orbit partition {actual:?} differs from {expected:?}"
        ));
    }
    Ok(())
}
