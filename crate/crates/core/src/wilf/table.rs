use std::collections::BTreeMap;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::{partition, Pair, PairPopulation, WilfClassReport};
use crate::error::Result;
use crate::perm::AvoiderCache;

/// One row of the published table: a representative pair, the class size
/// and the formula, both as printed and as a catalog name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExpectedRow {
    pub rep: Pair,
    pub size: usize,
    pub formula: String,
    pub catalog: String,
}

/// The 22 rows, in table order.
pub fn expected_rows() -> &'static [ExpectedRow] {
    static ROWS: OnceLock<Vec<ExpectedRow>> = OnceLock::new();
    ROWS.get_or_init(|| {
        serde_json::from_str(include_str!("../../data/table1.json"))
            .expect("embedded table data is valid")
    })
}

/// A disagreement between the computed partition and the table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TableDiff {
    /// Several rows fall into one computed class.
    Merged { rows: Vec<Pair>, class_rep: Pair },
    /// The class holds a different number of pairs than the row claims.
    /// `composition` splits the computed class so the surplus or deficit
    /// can be traced to concrete pairs.
    SizeMismatch {
        row: Pair,
        expected: usize,
        actual: usize,
        class_rep: Pair,
        composition: Vec<Composition>,
    },
    FormulaMismatch {
        row: Pair,
        expected: String,
        matched: String,
    },
    /// A computed class containing none of the rows' representatives; its
    /// members are the witnesses.
    Unlisted {
        class_rep: Pair,
        size: usize,
        formula: String,
        witnesses: Vec<Pair>,
    },
}

/// Members of a class sharing `|T|` and whether `τ` contains a member of
/// `T`, with the smallest such pair as witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Composition {
    pub set_size: usize,
    pub tau_contains_member: bool,
    pub pairs: usize,
    pub witness: Pair,
}

fn composition(members: &[Pair]) -> Vec<Composition> {
    let mut groups: BTreeMap<(usize, bool), Vec<&Pair>> = BTreeMap::new();
    for p in members {
        let key = (p.set.len(), !p.tau.avoids_all(&p.set));
        groups.entry(key).or_default().push(p);
    }
    groups
        .into_iter()
        .map(|((set_size, tau_contains_member), pairs)| Composition {
            set_size,
            tau_contains_member,
            pairs: pairs.len(),
            witness: pairs.into_iter().min().expect("nonempty group").clone(),
        })
        .collect()
}

/// Partitions the 1488-pair population on `window` and compares the result
/// with the table.
pub fn table_s3_s4(window: (usize, usize), cache: &AvoiderCache) -> Result<WilfClassReport> {
    let mut report = partition(&PairPopulation::table(), window, cache)?;
    report.table_diff = compare(&report, expected_rows());
    Ok(report)
}

fn compare(report: &WilfClassReport, rows: &[ExpectedRow]) -> Vec<TableDiff> {
    let mut diff = Vec::new();
    let mut hit = vec![Vec::<&ExpectedRow>::new(); report.classes.len()];
    for row in rows {
        let idx = report
            .classes
            .iter()
            .position(|c| c.members.contains(&row.rep))
            .expect("every representative lies in the population");
        hit[idx].push(row);
    }
    for (class, rows) in report.classes.iter().zip(&hit) {
        match rows.as_slice() {
            [] => diff.push(TableDiff::Unlisted {
                class_rep: class.rep.clone(),
                size: class.size,
                formula: class.formula.to_string(),
                witnesses: class.members.clone(),
            }),
            [row] => {
                if row.size != class.size {
                    diff.push(TableDiff::SizeMismatch {
                        row: row.rep.clone(),
                        expected: row.size,
                        actual: class.size,
                        class_rep: class.rep.clone(),
                        composition: composition(&class.members),
                    });
                }
                if row.catalog != class.formula {
                    diff.push(TableDiff::FormulaMismatch {
                        row: row.rep.clone(),
                        expected: row.catalog.clone(),
                        matched: class.formula.to_string(),
                    });
                }
            }
            many => diff.push(TableDiff::Merged {
                rows: many.iter().map(|r| r.rep.clone()).collect(),
                class_rep: class.rep.clone(),
            }),
        }
    }
    diff
}
