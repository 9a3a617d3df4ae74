//! The `analyze` report: every per-element, per-pair and per-block quantity
//! for one covering, plus its classification.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::degrees::{CoreBlockAssignment, DegreeProfile};
use crate::neighborhoods::NeighborhoodMap;
use crate::reduction::{is_invariable, ReducibilityReport};
use crate::setsys::{Block, Covering};

type Labels = Vec<String>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementRow {
    pub element: String,
    pub membership_degree: usize,
    pub neighborhood: Labels,
    pub core_block: Option<Labels>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockRow {
    pub block: Labels,
    /// Elements whose core block this is; empty when none.
    pub core_of: Vec<String>,
    /// Witness blocks whose union is this block, when reducible.
    pub reducible: Option<Vec<Labels>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub partition: bool,
    pub irreducible: bool,
    pub invariable: bool,
    pub cov_fixed_point: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CovListing {
    pub blocks: Vec<Labels>,
    pub equals_input: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub universe: Vec<String>,
    pub blocks: Vec<Labels>,
    pub elements: Vec<ElementRow>,
    /// `λ(x, y)` indexed by universe position; only with `--lambda`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<Vec<usize>>>,
    pub block_table: Vec<BlockRow>,
    pub classification: Classification,
    pub cov: CovListing,
}

impl AnalysisReport {
    pub fn new(c: &Covering, with_lambda: bool) -> Self {
        let uni = c.universe();
        let labels = |b: Block| -> Labels { uni.labels(b).map(str::to_owned).collect() };

        let nbhd = NeighborhoodMap::new(c);
        let degrees = DegreeProfile::new(c);
        let cores = CoreBlockAssignment::new(c);
        let reducibility = ReducibilityReport::new(c);
        let invariable = is_invariable(c);

        let elements = uni
            .elements()
            .map(|x| ElementRow {
                element: uni.name(x).to_owned(),
                membership_degree: degrees.membership(x),
                neighborhood: labels(nbhd.get(x)),
                core_block: cores.get(x).map(labels),
            })
            .collect();

        let block_table = reducibility
            .per_block
            .iter()
            .map(|(k, status)| BlockRow {
                block: labels(*k),
                core_of: cores
                    .elements_with_core(*k)
                    .map(|x| uni.name(x).to_owned())
                    .collect(),
                reducible: status
                    .witness()
                    .map(|w| w.iter().map(|&b| labels(b)).collect()),
            })
            .collect();

        let image = nbhd.family();
        let cov_fixed_point = image == c;
        AnalysisReport {
            universe: uni.names().to_vec(),
            blocks: c.labelled_blocks(),
            elements,
            lambda: with_lambda.then(|| degrees.matrix().to_vec()),
            block_table,
            classification: Classification {
                partition: c.is_partition(),
                irreducible: reducibility.is_irreducible_covering,
                invariable: invariable.is_invariable(),
                cov_fixed_point,
            },
            cov: CovListing {
                blocks: image.labelled_blocks(),
                equals_input: cov_fixed_point,
            },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "covering: {}", show_family(&self.blocks));
        out.push('\n');

        let mut rows = vec![[
            "element".to_owned(),
            "∂(x)".to_owned(),
            "N(x)".to_owned(),
            "Γ(x)".to_owned(),
        ]];
        for e in &self.elements {
            rows.push([
                e.element.clone(),
                e.membership_degree.to_string(),
                show_set(&e.neighborhood),
                e.core_block
                    .as_ref()
                    .map_or_else(|| "—".to_owned(), |b| show_set(b)),
            ]);
        }
        table(&mut out, &rows);

        if let Some(lambda) = &self.lambda {
            out.push('\n');
            let mut rows: Vec<Vec<String>> = vec![std::iter::once("λ".to_owned())
                .chain(self.universe.iter().cloned())
                .collect()];
            for (name, row) in self.universe.iter().zip(lambda) {
                rows.push(
                    std::iter::once(name.clone())
                        .chain(row.iter().map(usize::to_string))
                        .collect(),
                );
            }
            table(&mut out, &rows);
        }

        out.push('\n');
        let mut rows = vec![[
            "block".to_owned(),
            "core block of".to_owned(),
            "reducible".to_owned(),
        ]];
        for b in &self.block_table {
            rows.push([
                show_set(&b.block),
                if b.core_of.is_empty() {
                    "none".to_owned()
                } else {
                    b.core_of.join(",")
                },
                b.reducible.as_ref().map_or_else(
                    || "no".to_owned(),
                    |w| {
                        format!(
                            "yes = {}",
                            w.iter()
                                .map(|s| show_set(s))
                                .collect::<Vec<_>>()
                                .join(" ∪ ")
                        )
                    },
                ),
            ]);
        }
        table(&mut out, &rows);

        out.push('\n');
        let c = &self.classification;
        let _ = writeln!(
            out,
            "classification: invariable: {}, partition: {}, Cov(C)=C: {}, irreducible: {}",
            yes_no(c.invariable),
            yes_no(c.partition),
            yes_no(c.cov_fixed_point),
            yes_no(c.irreducible),
        );
        let _ = writeln!(
            out,
            "Cov(C) = {} ({})",
            show_family(&self.cov.blocks),
            if self.cov.equals_input {
                "equal to C"
            } else {
                "differs from C"
            }
        );
        out
    }
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn show_set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

pub(crate) fn show_family(blocks: &[Labels]) -> String {
    let inner: Vec<String> = blocks.iter().map(|b| show_set(b)).collect();
    format!("{{{}}}", inner.join(","))
}

fn table<R: AsRef<[String]>>(out: &mut String, rows: &[R]) {
    let cols = rows.iter().map(|r| r.as_ref().len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|i| {
            rows.iter()
                .filter_map(|r| r.as_ref().get(i))
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in rows {
        let row = row.as_ref();
        let mut line = String::new();
        for (i, cell) in row.iter().enumerate() {
            if i + 1 == row.len() {
                line.push_str(cell);
            } else {
                let pad = widths[i] - cell.chars().count();
                line.push_str(cell);
                line.extend(std::iter::repeat_n(' ', pad + 2));
            }
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
}
