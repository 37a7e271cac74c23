//! Canonical names for indecomposable modules and the unary maps on them.
//!
//! Every non-projective indecomposable is one of
//!
//! * `Ω^m L(u,i)`: a syzygy of a non-projective simple (odd length `2|m|+1`),
//! * `M^+_{2ℓ}(u,i)` / `M^-_{2ℓ}(u,i)`: string modules of length `2ℓ`,
//! * `C^ℓ_λ(u,i)`: band modules of length `2ℓn/d`, one per `σ_u^2`-orbit,
//!   so `i` is stored reduced to `[0, d)`.
//!
//! `P(u,i)` names the projective cover of `L(u,i)` (the simple itself when
//! the vertex is projective).

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::modring::{Params, Vertex};
use crate::Lambda;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelError {
    #[error("vertex {0} is projective (d divides 2i+u-1); use P(u,i)")]
    ProjectiveVertex(Vertex),
    #[error("band parameter must be nonzero")]
    ZeroLambda,
    #[error("length parameter must be positive, got {0}")]
    NonPositiveLength(i64),
    #[error("{0} is projective and has no stable syzygy")]
    ProjectiveInput(ModLabel),
    #[error("no Auslander-Reiten sequence is recorded for {0}")]
    NoArSequence(ModLabel),
    #[error("syzygy degree {0} exceeds the supported range")]
    DegreeTooLarge(i128),
    #[error("malformed label JSON: {0}")]
    Json(String),
}

/// One indecomposable module.
///
/// The derived order compares the kind first (syzygy, plus-string,
/// minus-string, band, projective), then `(u, i)`, then `m`/`ℓ`, then `λ`;
/// this is the order used for every serialized multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModLabel {
    /// `Ω^m L(u,i)`; `m = 0` is the simple module.
    Syzygy {
        v: Vertex,
        m: i64,
    },
    StringPlus {
        v: Vertex,
        ell: u32,
    },
    StringMinus {
        v: Vertex,
        ell: u32,
    },
    Band {
        v: Vertex,
        ell: u32,
        lambda: Lambda,
    },
    Projective {
        v: Vertex,
    },
}

/// Coarse kind of a label, used to select label universes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LabelKind {
    Syzygy,
    StringPlus,
    StringMinus,
    Band,
    Projective,
}

/// Left term and middle summands of an almost split sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArSequence {
    pub left: ModLabel,
    pub middle: Vec<ModLabel>,
}

/// Largest `|m|` accepted for `Ω^m L`; keeps every dimension inside `i64`.
pub const MAX_DEGREE: i64 = 1 << 32;

fn check_degree(m: i128) -> Result<i64, LabelError> {
    if m.abs() > MAX_DEGREE as i128 {
        return Err(LabelError::DegreeTooLarge(m));
    }
    Ok(m as i64)
}

fn check_ell(ell: i64) -> Result<u32, LabelError> {
    if ell <= 0 || ell > u32::MAX as i64 {
        return Err(LabelError::NonPositiveLength(ell));
    }
    Ok(ell as u32)
}

impl Params {
    fn non_projective(&self, u: i64, i: i64) -> Result<Vertex, LabelError> {
        let v = self.vertex(u, i);
        if self.is_projective_vertex(v) {
            return Err(LabelError::ProjectiveVertex(v));
        }
        Ok(v)
    }

    pub fn simple(&self, u: i64, i: i64) -> Result<ModLabel, LabelError> {
        self.syzygy(0, u, i)
    }

    pub fn syzygy(&self, m: i64, u: i64, i: i64) -> Result<ModLabel, LabelError> {
        check_degree(m as i128)?;
        Ok(ModLabel::Syzygy {
            v: self.non_projective(u, i)?,
            m,
        })
    }

    pub fn string_plus(&self, ell: i64, u: i64, i: i64) -> Result<ModLabel, LabelError> {
        let ell = check_ell(ell)?;
        Ok(ModLabel::StringPlus {
            v: self.non_projective(u, i)?,
            ell,
        })
    }

    pub fn string_minus(&self, ell: i64, u: i64, i: i64) -> Result<ModLabel, LabelError> {
        let ell = check_ell(ell)?;
        Ok(ModLabel::StringMinus {
            v: self.non_projective(u, i)?,
            ell,
        })
    }

    /// `C^ℓ_λ(u,i)` with `i` folded to its representative in `[0, d)`.
    pub fn band(&self, ell: i64, lambda: Lambda, u: i64, i: i64) -> Result<ModLabel, LabelError> {
        let ell = check_ell(ell)?;
        if lambda.is_zero() {
            return Err(LabelError::ZeroLambda);
        }
        let v = self.non_projective(u, i)?;
        Ok(ModLabel::Band {
            v: self.fold_mod_d(v),
            ell,
            lambda,
        })
    }

    pub fn projective(&self, u: i64, i: i64) -> ModLabel {
        ModLabel::Projective {
            v: self.vertex(u, i),
        }
    }

    /// The trivial module `L(0,0)`, or `None` when it is projective (`d = 1`).
    pub fn trivial(&self) -> Option<ModLabel> {
        self.simple(0, 0).ok()
    }

    /// Re-validate a label and bring it to canonical form.
    pub fn canonicalize(&self, x: ModLabel) -> Result<ModLabel, LabelError> {
        match x {
            ModLabel::Syzygy { v, m } => self.syzygy(m, v.u(), v.i()),
            ModLabel::StringPlus { v, ell } => self.string_plus(ell as i64, v.u(), v.i()),
            ModLabel::StringMinus { v, ell } => self.string_minus(ell as i64, v.u(), v.i()),
            ModLabel::Band { v, ell, lambda } => self.band(ell as i64, lambda, v.u(), v.i()),
            ModLabel::Projective { v } => Ok(self.projective(v.u(), v.i())),
        }
    }

    /// Dimension over the ground field.
    pub fn dim_of(&self, x: &ModLabel) -> i64 {
        let d = self.d();
        match *x {
            ModLabel::Syzygy { v, m } => {
                let top = self.dim_simple(v);
                let tail = if m.rem_euclid(2) == 0 { top } else { d - top };
                m.abs() * d + tail
            }
            ModLabel::StringPlus { ell, .. } | ModLabel::StringMinus { ell, .. } => ell as i64 * d,
            ModLabel::Band { ell, .. } => ell as i64 * self.n(),
            ModLabel::Projective { v } => {
                if self.is_projective_vertex(v) {
                    d
                } else {
                    2 * d
                }
            }
        }
    }

    /// Composition length.
    pub fn length_of(&self, x: &ModLabel) -> i64 {
        match *x {
            ModLabel::Syzygy { m, .. } => 2 * m.abs() + 1,
            ModLabel::StringPlus { ell, .. } | ModLabel::StringMinus { ell, .. } => 2 * ell as i64,
            ModLabel::Band { ell, .. } => 2 * ell as i64 * self.ratio(),
            ModLabel::Projective { v } => {
                if self.is_projective_vertex(v) {
                    1
                } else {
                    4
                }
            }
        }
    }

    /// Vertex of the simple `L(u,i)^* = L(-u, 1 - σ_u(i))`.
    pub fn dual_vertex(&self, v: Vertex) -> Vertex {
        self.vertex(-v.u(), 1 - self.sigma(v.u(), v.i()))
    }

    /// The `k`-linear dual. Duality exchanges `Ω` and `Ω^{-1}`.
    pub fn dual(&self, x: &ModLabel) -> ModLabel {
        match *x {
            ModLabel::Syzygy { v, m } => ModLabel::Syzygy {
                v: self.dual_vertex(v),
                m: -m,
            },
            ModLabel::StringPlus { v, ell } => ModLabel::StringPlus {
                v: self.vertex(-v.u(), 1 - v.i() - ell as i64 * self.d()),
                ell,
            },
            ModLabel::StringMinus { v, ell } => ModLabel::StringMinus {
                v: self.vertex(-v.u(), 1 - v.i() + (ell as i64 - 1) * self.d()),
                ell,
            },
            ModLabel::Band { v, ell, lambda } => ModLabel::Band {
                v: self.fold_mod_d(self.vertex(-v.u(), 1 - v.i())),
                ell,
                lambda,
            },
            ModLabel::Projective { v } => ModLabel::Projective {
                v: self.dual_vertex(v),
            },
        }
    }

    /// `Ω^k x` for non-projective `x`; `k` may be negative.
    pub fn syzygy_shift(&self, x: &ModLabel, k: i64) -> Result<ModLabel, LabelError> {
        Ok(match *x {
            ModLabel::Syzygy { v, m } => ModLabel::Syzygy {
                v,
                m: check_degree(m as i128 + k as i128)?,
            },
            ModLabel::StringPlus { v, ell } => ModLabel::StringPlus {
                v: self.shift(v, -k),
                ell,
            },
            ModLabel::StringMinus { v, ell } => ModLabel::StringMinus {
                v: self.shift(v, k),
                ell,
            },
            ModLabel::Band { v, ell, lambda } => ModLabel::Band {
                v: self.fold_mod_d(self.shift(v, k)),
                ell,
                lambda,
            },
            ModLabel::Projective { .. } => return Err(LabelError::ProjectiveInput(*x)),
        })
    }

    /// Almost split sequence ending in an even-length module, with the
    /// convention that length-zero terms are dropped.
    pub fn ar_sequence(&self, x: &ModLabel) -> Result<ArSequence, LabelError> {
        let d = self.d();
        let seq = match *x {
            ModLabel::StringPlus { v, ell } => {
                let left_v = self.vertex(v.u(), v.i() - d);
                let mut middle = vec![ModLabel::StringPlus {
                    v: left_v,
                    ell: ell + 1,
                }];
                if ell > 1 {
                    middle.push(ModLabel::StringPlus { v, ell: ell - 1 });
                }
                ArSequence {
                    left: ModLabel::StringPlus { v: left_v, ell },
                    middle,
                }
            }
            ModLabel::StringMinus { v, ell } => {
                let left_v = self.vertex(v.u(), v.i() + d);
                let mut middle = vec![ModLabel::StringMinus {
                    v: left_v,
                    ell: ell + 1,
                }];
                if ell > 1 {
                    middle.push(ModLabel::StringMinus { v, ell: ell - 1 });
                }
                ArSequence {
                    left: ModLabel::StringMinus { v: left_v, ell },
                    middle,
                }
            }
            ModLabel::Band { v, ell, lambda } => {
                let mut middle = vec![ModLabel::Band {
                    v,
                    ell: ell + 1,
                    lambda,
                }];
                if ell > 1 {
                    middle.push(ModLabel::Band {
                        v,
                        ell: ell - 1,
                        lambda,
                    });
                }
                ArSequence {
                    left: ModLabel::Band {
                        v: self.fold_mod_d(self.vertex(v.u(), v.i() - d)),
                        ell,
                        lambda,
                    },
                    middle,
                }
            }
            _ => return Err(LabelError::NoArSequence(*x)),
        };
        Ok(seq)
    }

    /// Non-projective of odd length.
    pub fn is_splitting_trace(&self, x: &ModLabel) -> bool {
        matches!(x, ModLabel::Syzygy { .. })
    }

    /// Syzygies of simples of dimension `1` or `d - 1`.
    pub fn is_endotrivial(&self, x: &ModLabel) -> bool {
        match *x {
            ModLabel::Syzygy { v, .. } => {
                let dim = self.dim_simple(v);
                dim == 1 || dim == self.d() - 1
            }
            _ => false,
        }
    }

    /// Projective, simple, or of even length.
    pub fn is_algebraic(&self, x: &ModLabel) -> bool {
        match *x {
            ModLabel::Syzygy { m, .. } => m == 0,
            _ => true,
        }
    }
}

impl ModLabel {
    pub fn vertex(&self) -> Vertex {
        match *self {
            ModLabel::Syzygy { v, .. }
            | ModLabel::StringPlus { v, .. }
            | ModLabel::StringMinus { v, .. }
            | ModLabel::Band { v, .. }
            | ModLabel::Projective { v } => v,
        }
    }

    pub fn kind(&self) -> LabelKind {
        match self {
            ModLabel::Syzygy { .. } => LabelKind::Syzygy,
            ModLabel::StringPlus { .. } => LabelKind::StringPlus,
            ModLabel::StringMinus { .. } => LabelKind::StringMinus,
            ModLabel::Band { .. } => LabelKind::Band,
            ModLabel::Projective { .. } => LabelKind::Projective,
        }
    }

    pub fn is_projective(&self) -> bool {
        matches!(self, ModLabel::Projective { .. })
    }

    /// Same label on another vertex.
    pub fn with_vertex(&self, v: Vertex) -> ModLabel {
        match *self {
            ModLabel::Syzygy { m, .. } => ModLabel::Syzygy { v, m },
            ModLabel::StringPlus { ell, .. } => ModLabel::StringPlus { v, ell },
            ModLabel::StringMinus { ell, .. } => ModLabel::StringMinus { v, ell },
            ModLabel::Band { ell, lambda, .. } => ModLabel::Band { v, ell, lambda },
            ModLabel::Projective { .. } => ModLabel::Projective { v },
        }
    }
}

/// `p/q` in lowest terms, or `p` when `q = 1`.
pub fn render_rational(r: &Lambda) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(text: &str) -> Option<Lambda> {
    let text = text.trim();
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                return None;
            }
            Some(Lambda::new(p, q))
        }
        None => text.parse::<i64>().ok().map(Lambda::from_integer),
    }
}

impl fmt::Display for ModLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ModLabel::Syzygy { v, m: 0 } => write!(f, "L({},{})", v.u(), v.i()),
            ModLabel::Syzygy { v, m } => write!(f, "O^{}[L({},{})]", m, v.u(), v.i()),
            ModLabel::StringPlus { v, ell } => write!(f, "M+_{{{}}}({},{})", 2 * ell, v.u(), v.i()),
            ModLabel::StringMinus { v, ell } => {
                write!(f, "M-_{{{}}}({},{})", 2 * ell, v.u(), v.i())
            }
            ModLabel::Band { v, ell, lambda } => write!(
                f,
                "C_{{{},{}}}({},{})",
                ell,
                render_rational(&lambda),
                v.u(),
                v.i()
            ),
            ModLabel::Projective { v } => write!(f, "P({},{})", v.u(), v.i()),
        }
    }
}

/// JSON object form of a label, e.g.
/// `{"kind":"band","ell":2,"lambda":"3/2","u":0,"i":1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum LabelJson {
    Syzygy {
        m: i64,
        u: i64,
        i: i64,
    },
    StringPlus {
        ell: i64,
        u: i64,
        i: i64,
    },
    StringMinus {
        ell: i64,
        u: i64,
        i: i64,
    },
    Band {
        ell: i64,
        lambda: String,
        u: i64,
        i: i64,
    },
    Projective {
        u: i64,
        i: i64,
    },
}

impl From<&ModLabel> for LabelJson {
    fn from(x: &ModLabel) -> Self {
        let (u, i) = (x.vertex().u(), x.vertex().i());
        match *x {
            ModLabel::Syzygy { m, .. } => LabelJson::Syzygy { m, u, i },
            ModLabel::StringPlus { ell, .. } => LabelJson::StringPlus {
                ell: ell as i64,
                u,
                i,
            },
            ModLabel::StringMinus { ell, .. } => LabelJson::StringMinus {
                ell: ell as i64,
                u,
                i,
            },
            ModLabel::Band { ell, lambda, .. } => LabelJson::Band {
                ell: ell as i64,
                lambda: render_rational(&lambda),
                u,
                i,
            },
            ModLabel::Projective { .. } => LabelJson::Projective { u, i },
        }
    }
}

impl LabelJson {
    pub fn to_label(&self, p: &Params) -> Result<ModLabel, LabelError> {
        match self {
            LabelJson::Syzygy { m, u, i } => p.syzygy(*m, *u, *i),
            LabelJson::StringPlus { ell, u, i } => p.string_plus(*ell, *u, *i),
            LabelJson::StringMinus { ell, u, i } => p.string_minus(*ell, *u, *i),
            LabelJson::Band { ell, lambda, u, i } => {
                let lambda = parse_rational(lambda)
                    .ok_or_else(|| LabelError::Json(format!("bad rational {lambda:?}")))?;
                p.band(*ell, lambda, *u, *i)
            }
            LabelJson::Projective { u, i } => Ok(p.projective(*u, *i)),
        }
    }
}

pub fn label_to_json(x: &ModLabel) -> Value {
    serde_json::to_value(LabelJson::from(x)).expect("label JSON is always serializable")
}

pub fn label_from_json(p: &Params, value: &Value) -> Result<ModLabel, LabelError> {
    let parsed: LabelJson =
        serde_json::from_value(value.clone()).map_err(|e| LabelError::Json(e.to_string()))?;
    parsed.to_label(p)
}
