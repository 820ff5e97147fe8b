//! Subgroup embeddings: weight-lattice maps and the clause catalogue.
//!
//! A [`WeightMap`] goes from the big group to the subgroup: its matrix has
//! one row per target coordinate and one column per source coordinate, so
//! column `k` is the restriction of the `k`-th fundamental weight.

mod classical;
mod legality;
mod maps;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::characters::FormalCharacter;
use crate::rootsystem::{GroupType, Weight};
use crate::{Error, Result};

pub use classical::{classical_map, resirr_map, tensor_map, Classical, ClassicalKind};
pub use legality::{analyze_step, max_rank_pairs, max_rank_step, next_prime_above, StepAnalysis};
pub use maps::{alias_map, diag_map, folding_map, levi_map};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightMap {
    pub source: GroupType,
    pub target: GroupType,
    pub matrix: Vec<Vec<i64>>,
}

impl WeightMap {
    pub fn new(source: GroupType, target: GroupType, matrix: Vec<Vec<i64>>) -> Result<WeightMap> {
        let (rows, cols) = (target.rank(), source.rank());
        if matrix.len() != rows {
            return Err(Error::DimensionMismatch {
                expected: rows,
                got: matrix.len(),
            });
        }
        if let Some(bad) = matrix.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                got: bad.len(),
            });
        }
        Ok(WeightMap {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &GroupType) -> WeightMap {
        let n = g.rank();
        let matrix = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeightMap {
            source: g.clone(),
            target: g.clone(),
            matrix,
        }
    }

    pub fn apply(&self, w: &Weight) -> Result<Weight> {
        w.check_len(self.source.rank())?;
        Ok(self.apply_unchecked(w))
    }

    fn apply_unchecked(&self, w: &Weight) -> Weight {
        Weight(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(&w.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }
}

impl fmt::Display for WeightMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} [", self.source, self.target)?;
        for (i, row) in self.matrix.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            f.write_str(&cells.join(" "))?;
        }
        f.write_str("]")
    }
}

/// `m2 after m1`: restrict along `m1`, then along `m2`.
pub fn compose(m1: &WeightMap, m2: &WeightMap) -> Result<WeightMap> {
    if m1.target != m2.source {
        return Err(Error::TypeMismatch(m1.target.to_string(), m2.source.to_string()));
    }
    let inner = m1.target.rank();
    let matrix = m2
        .matrix
        .iter()
        .map(|row| {
            (0..m1.source.rank())
                .map(|j| (0..inner).map(|k| row[k] * m1.matrix[k][j]).sum())
                .collect()
        })
        .collect();
    Ok(WeightMap {
        source: m1.source.clone(),
        target: m2.target.clone(),
        matrix,
    })
}

/// Pushes a character of `m.source` forward to `m.target`.
pub fn restrict_character(chi: &FormalCharacter, m: &WeightMap) -> Result<FormalCharacter> {
    if chi.ambient() != &m.source {
        return Err(Error::AmbientMismatch(chi.ambient().to_string(), m.source.to_string()));
    }
    let mut out: BTreeMap<Weight, BigInt> = BTreeMap::new();
    for (w, k) in chi.iter() {
        *out.entry(m.apply_unchecked(w)).or_default() += k;
    }
    Ok(FormalCharacter::from_map(m.target.clone(), out))
}

/// The kinds of steps allowed in an embedding chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClauseTag {
    /// Diagonal embedding of `H` in `H x ... x H`.
    Diag,
    /// Levi subgroup.
    Levi,
    /// Fixed points of a diagram automorphism.
    Auto,
    /// Classical subgroups of classical groups.
    Class,
    /// Listed maximal-rank subgroups of exceptional groups.
    Max,
    /// Restricted irreducible representations into `SL`.
    Resirr,
    /// Tensor-product embeddings of classical groups.
    Tensor,
    /// Renaming between isomorphic types.
    Alias,
    /// Restriction to a torus.
    Torus,
}

impl ClauseTag {
    pub const ALL: [ClauseTag; 9] = [
        ClauseTag::Diag,
        ClauseTag::Levi,
        ClauseTag::Auto,
        ClauseTag::Class,
        ClauseTag::Max,
        ClauseTag::Resirr,
        ClauseTag::Tensor,
        ClauseTag::Alias,
        ClauseTag::Torus,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClauseTag::Diag => "diag",
            ClauseTag::Levi => "levi",
            ClauseTag::Auto => "auto",
            ClauseTag::Class => "class",
            ClauseTag::Max => "max",
            ClauseTag::Resirr => "resirr",
            ClauseTag::Tensor => "tensor",
            ClauseTag::Alias => "alias",
            ClauseTag::Torus => "torus",
        }
    }
}

impl fmt::Display for ClauseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClauseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClauseTag> {
        ClauseTag::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownType(s.to_string()))
    }
}

/// A clause together with the smallest characteristic it allows
/// (`1` means no restriction).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Clause {
    pub tag: ClauseTag,
    pub p_min: u64,
}

/// One arrow `sub -[tag,p>N]-> amb` of a chain.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EmbeddingStep {
    pub tag: ClauseTag,
    /// The `N` of an annotation `p>N`, if present.
    pub p_gt: Option<u64>,
    pub sub: GroupType,
    pub amb: GroupType,
}

impl EmbeddingStep {
    pub fn new(sub: GroupType, tag: ClauseTag, amb: GroupType) -> EmbeddingStep {
        EmbeddingStep {
            tag,
            p_gt: None,
            sub,
            amb,
        }
    }

    pub fn with_p_gt(mut self, n: u64) -> EmbeddingStep {
        self.p_gt = Some(n);
        self
    }

    /// Smallest prime allowed by the annotation.
    pub fn declared_p(&self) -> u64 {
        self.p_gt.map_or(1, next_prime_above)
    }

    /// The arrow text, e.g. ` -[class,p>2]-> `.
    pub fn arrow(&self) -> String {
        match self.p_gt {
            Some(n) => format!(" -[{},p>{}]-> ", self.tag, n),
            None => format!(" -[{}]-> ", self.tag),
        }
    }
}
