//! Sample export: CSV rows of Lebesgue coordinates, or nested matrices.

use std::io::{self, Write};

use serde::Serialize;

use crate::algebra::{ScalarField, SelfAdjointState};

fn index_pair(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{}{}", i + 1, j + 1)
    } else {
        format!("{}_{}", i + 1, j + 1)
    }
}

/// Column names: `a_11..a_nn`, then the strict upper triangle row by row,
/// with complex entries split into `_re`/`_im` and quaternionic ones into
/// `_w`/`_x`/`_y`/`_z`.
pub fn csv_header(field: ScalarField, n: usize) -> Vec<String> {
    let mut cols: Vec<String> = (0..n).map(|i| format!("a_{}", index_pair(i, i, n))).collect();
    let suffixes: &[&str] = match field {
        ScalarField::Real => &[""],
        ScalarField::Complex => &["_re", "_im"],
        ScalarField::Quaternion => &["_w", "_x", "_y", "_z"],
    };
    for i in 0..n {
        for j in i + 1..n {
            for s in suffixes {
                cols.push(format!("a_{}{s}", index_pair(i, j, n)));
            }
        }
    }
    cols
}

pub fn write_csv<W: Write>(mut out: W, field: ScalarField, n: usize, states: &[SelfAdjointState]) -> io::Result<()> {
    writeln!(out, "{}", csv_header(field, n).join(","))?;
    for s in states {
        let row: Vec<String> = s.matrix().coordinates().iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

/// A matrix entry as a number, `[re, im]` or `[w, x, y, z]`.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(untagged)]
pub enum Entry {
    Real(f64),
    Complex([f64; 2]),
    Quaternion([f64; 4]),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StateRecord {
    pub matrix: Vec<Vec<Entry>>,
}

impl From<&SelfAdjointState> for StateRecord {
    fn from(s: &SelfAdjointState) -> Self {
        let m = s.matrix();
        let n = m.n();
        let matrix = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let c = m.entry_components(i, j);
                        match m.field() {
                            ScalarField::Real => Entry::Real(c[0]),
                            ScalarField::Complex => Entry::Complex([c[0], c[1]]),
                            ScalarField::Quaternion => Entry::Quaternion([c[0], c[1], c[2], c[3]]),
                        }
                    })
                    .collect()
            })
            .collect();
        StateRecord { matrix }
    }
}

/// Document written by the JSON sample export.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SampleSet {
    pub field: ScalarField,
    pub n: usize,
    pub seed: u64,
    pub streams: usize,
    pub states: Vec<StateRecord>,
}
