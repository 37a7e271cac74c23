//! Bounded sets of canonical labels.

use std::collections::BTreeSet;
use std::str::FromStr;

use thiserror::Error;

use crate::labels::ModLabel;
use crate::modring::{Params, Vertex};
use crate::Lambda;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum UniverseKind {
    Simple,
    /// `Ω^m L` with `m ≠ 0`.
    Syzygy,
    StringPlus,
    StringMinus,
    Band,
    Projective,
}

impl UniverseKind {
    pub const ALL: [UniverseKind; 6] = [
        UniverseKind::Simple,
        UniverseKind::Syzygy,
        UniverseKind::StringPlus,
        UniverseKind::StringMinus,
        UniverseKind::Band,
        UniverseKind::Projective,
    ];

    pub fn of(x: &ModLabel) -> UniverseKind {
        match x {
            ModLabel::Syzygy { m: 0, .. } => UniverseKind::Simple,
            ModLabel::Syzygy { .. } => UniverseKind::Syzygy,
            ModLabel::StringPlus { .. } => UniverseKind::StringPlus,
            ModLabel::StringMinus { .. } => UniverseKind::StringMinus,
            ModLabel::Band { .. } => UniverseKind::Band,
            ModLabel::Projective { .. } => UniverseKind::Projective,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown label kind {0:?} (expected simple, syzygy, plus, minus, string, band, projective or all)")]
pub struct UnknownKind(pub String);

/// Parses a comma list such as `simple,string,band`.
pub fn parse_kinds(text: &str) -> Result<BTreeSet<UniverseKind>, UnknownKind> {
    let mut out = BTreeSet::new();
    for word in text.split(',').map(str::trim).filter(|w| !w.is_empty()) {
        match word {
            "all" => out.extend(UniverseKind::ALL),
            "string" | "strings" => {
                out.insert(UniverseKind::StringPlus);
                out.insert(UniverseKind::StringMinus);
            }
            other => {
                out.insert(other.parse()?);
            }
        }
    }
    if out.is_empty() {
        return Err(UnknownKind(text.to_string()));
    }
    Ok(out)
}

impl FromStr for UniverseKind {
    type Err = UnknownKind;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "simple" | "simples" => UniverseKind::Simple,
            "syzygy" | "syzygies" => UniverseKind::Syzygy,
            "plus" => UniverseKind::StringPlus,
            "minus" => UniverseKind::StringMinus,
            "band" | "bands" => UniverseKind::Band,
            "projective" | "projectives" => UniverseKind::Projective,
            _ => return Err(UnknownKind(s.to_string())),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bounds {
    pub kinds: BTreeSet<UniverseKind>,
    pub max_ell: u32,
    /// Largest `|m|` for syzygies of simples.
    pub max_syzygy: u32,
    pub lambdas: Vec<Lambda>,
}

impl Default for Bounds {
    fn default() -> Self {
        Self {
            kinds: UniverseKind::ALL.into_iter().collect(),
            max_ell: 3,
            max_syzygy: 3,
            lambdas: vec![
                Lambda::from_integer(1),
                Lambda::from_integer(2),
                Lambda::new(1, 2),
            ],
        }
    }
}

impl Bounds {
    pub fn with_kinds(mut self, kinds: impl IntoIterator<Item = UniverseKind>) -> Self {
        self.kinds = kinds.into_iter().collect();
        self
    }

    pub fn contains(&self, x: &ModLabel) -> bool {
        if !self.kinds.contains(&UniverseKind::of(x)) {
            return false;
        }
        match x {
            ModLabel::Syzygy { m, .. } => m.unsigned_abs() <= self.max_syzygy as u64,
            ModLabel::StringPlus { ell, .. } | ModLabel::StringMinus { ell, .. } => {
                *ell <= self.max_ell
            }
            ModLabel::Band { ell, lambda, .. } => {
                *ell <= self.max_ell && self.lambdas.contains(lambda)
            }
            ModLabel::Projective { .. } => true,
        }
    }

    /// All canonical labels within the bounds, sorted and without repeats.
    pub fn labels(&self, p: &Params) -> Vec<ModLabel> {
        let mut out = BTreeSet::new();
        let verts: Vec<Vertex> = p.non_projective_vertices().collect();
        let max_m = self.max_syzygy as i64;
        for &v in &verts {
            for m in -max_m..=max_m {
                out.insert(ModLabel::Syzygy { v, m });
            }
            for ell in 1..=self.max_ell {
                out.insert(ModLabel::StringPlus { v, ell });
                out.insert(ModLabel::StringMinus { v, ell });
                for &lambda in &self.lambdas {
                    if *lambda.numer() != 0 {
                        out.insert(ModLabel::Band {
                            v: p.fold_mod_d(v),
                            ell,
                            lambda,
                        });
                    }
                }
            }
        }
        for v in p.vertices() {
            out.insert(p.projective(v.u(), v.i()));
        }
        out.into_iter().filter(|x| self.contains(x)).collect()
    }

    /// Labels within the bounds whose vertex lies in the block of `base`.
    pub fn labels_in_block(&self, p: &Params, base: Vertex) -> Vec<ModLabel> {
        self.labels(p)
            .into_iter()
            .filter(|x| !x.is_projective() && p.same_block(base, x.vertex()))
            .collect()
    }
}
