//! JSON documents. Coordinates are 1-based `[row, col]`; dominoes are listed
//! by ascending label with the upper-left square first.

use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use domino_core::tableau::validate_tableau;
use domino_core::{Domino, DominoTableau, SignedPermutation, Square, TableauPair};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DominoDocument {
    pub label: u32,
    pub squares: [[i32; 2]; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauDocument {
    pub rank: u32,
    pub n: usize,
    pub dominoes: Vec<DominoDocument>,
    /// Diagonal squares absorbed into the core by moving through; absent
    /// for ordinary tableaux.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub core_extension: Vec<[i32; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDocument {
    pub left: TableauDocument,
    pub right: TableauDocument,
}

/// A signed permutation in both one-line and triple form. `triples` holds
/// `[value, position, sign]` ordered by position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PermutationDocument {
    pub window: Vec<i32>,
    pub triples: Vec<[i32; 3]>,
}

fn pos(s: Square) -> [i32; 2] {
    [s.row, s.col]
}

fn square(p: [i32; 2]) -> Square {
    Square::new(p[0], p[1])
}

impl TableauDocument {
    pub fn from_tableau(t: &DominoTableau) -> Self {
        TableauDocument {
            rank: t.rank(),
            n: t.len(),
            dominoes: t
                .dominoes()
                .iter()
                .map(|d| {
                    let [a, b] = d.squares();
                    DominoDocument { label: d.label(), squares: [pos(a), pos(b)] }
                })
                .collect(),
            core_extension: t.core_extension().iter().map(|&s| pos(s)).collect(),
        }
    }

    /// Rebuilds and fully revalidates the tableau, which must be standard.
    pub fn to_tableau(&self) -> Result<DominoTableau> {
        if self.n != self.dominoes.len() {
            bail!("document says n = {} but lists {} dominoes", self.n, self.dominoes.len());
        }
        let dominoes = self
            .dominoes
            .iter()
            .map(|d| Domino::new(d.label, square(d.squares[0]), square(d.squares[1])))
            .collect::<Result<Vec<_>, _>>()?;
        let t = if self.core_extension.is_empty() {
            validate_tableau(self.rank, dominoes)?
        } else {
            let ext: BTreeSet<Square> = self.core_extension.iter().map(|&p| square(p)).collect();
            let t = DominoTableau::with_extension(self.rank, dominoes, ext)?;
            if !t.is_standard() {
                bail!("labels are not exactly 1..=n");
            }
            t
        };
        Ok(t)
    }
}

impl PairDocument {
    pub fn from_pair(p: &TableauPair) -> Self {
        PairDocument {
            left: TableauDocument::from_tableau(&p.left),
            right: TableauDocument::from_tableau(&p.right),
        }
    }

    pub fn to_pair(&self) -> Result<TableauPair> {
        let left = self.left.to_tableau().context("left tableau")?;
        let right = self.right.to_tableau().context("right tableau")?;
        Ok(TableauPair::new(left, right)?)
    }
}

impl PermutationDocument {
    pub fn from_permutation(s: &SignedPermutation) -> Self {
        PermutationDocument {
            window: s.window(),
            triples: s
                .triples()
                .map(|t| [t.value as i32, t.position as i32, t.sign.as_i32()])
                .collect(),
        }
    }
}

pub fn serialize(t: &DominoTableau) -> TableauDocument {
    TableauDocument::from_tableau(t)
}

pub fn deserialize(doc: &TableauDocument) -> Result<DominoTableau> {
    doc.to_tableau()
}
