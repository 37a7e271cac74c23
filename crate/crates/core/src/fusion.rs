//! Products in the stable Green ring.
//!
//! A product of two indecomposables is determined up to projective summands
//! by the pair of underlying vertices: with `w = u + v` every summand sits on
//! a vertex `(w, i + j + θ)` (possibly twisted by a power of `σ_w`), where `θ`
//! runs over the index set returned by [`index_set`]. The projective part is
//! only tracked through its total dimension.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::RangeInclusive;

use thiserror::Error;

use crate::labels::{ModLabel, MAX_DEGREE};
use crate::modring::{Params, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FusionError {
    #[error("vertex {0} is projective")]
    ProjectiveVertex(Vertex),
    #[error("{0} does not lie in the block of L(0,0)")]
    NotInBaseBlock(ModLabel),
    #[error("the trivial module is projective when d = 1")]
    NoBaseBlock,
    #[error("multiplicity or dimension overflow")]
    Overflow,
}

/// A module up to isomorphism, stored as its non-projective part plus the
/// total dimension of its projective part.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GreenElement {
    pub core: BTreeMap<ModLabel, u64>,
    pub proj_dim: i128,
}

impl GreenElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// A single indecomposable; projective labels go to `proj_dim`.
    pub fn from_label(p: &Params, x: ModLabel) -> Self {
        let mut e = Self::zero();
        if x.is_projective() {
            e.proj_dim = p.dim_of(&x) as i128;
        } else {
            e.core.insert(x, 1);
        }
        e
    }

    pub fn from_labels(p: &Params, xs: impl IntoIterator<Item = ModLabel>) -> Self {
        let mut e = Self::zero();
        for x in xs {
            e.add_assign(&Self::from_label(p, x));
        }
        e
    }

    pub fn add_assign(&mut self, other: &GreenElement) {
        for (x, mult) in &other.core {
            *self.core.entry(*x).or_insert(0) += mult;
        }
        self.proj_dim += other.proj_dim;
    }

    pub fn core_dim(&self, p: &Params) -> i128 {
        self.core
            .iter()
            .map(|(x, &mult)| p.dim_of(x) as i128 * mult as i128)
            .sum()
    }

    pub fn total_dim(&self, p: &Params) -> i128 {
        self.core_dim(p) + self.proj_dim
    }

    pub fn is_projective(&self) -> bool {
        self.core.is_empty()
    }

    /// Number of indecomposable non-projective summands, with multiplicity.
    pub fn core_len(&self) -> u64 {
        self.core.values().sum()
    }

    pub fn labels(&self) -> impl Iterator<Item = &ModLabel> {
        self.core.keys()
    }

    /// Core summands in canonical order, each repeated by its multiplicity.
    pub fn core_list(&self) -> Vec<ModLabel> {
        self.core
            .iter()
            .flat_map(|(x, &mult)| std::iter::repeat_n(*x, mult as usize))
            .collect()
    }

    /// Summand-wise dual; the projective part keeps its dimension.
    pub fn dual(&self, p: &Params) -> GreenElement {
        GreenElement {
            core: self.core.iter().map(|(x, &m)| (p.dual(x), m)).collect(),
            proj_dim: self.proj_dim,
        }
    }

    /// Summand-wise `Ω^k` of the core. The projective part is dropped since
    /// its syzygies vanish stably.
    pub fn syzygy_shift(&self, p: &Params, k: i64) -> GreenElement {
        let mut core = BTreeMap::new();
        for (x, &m) in &self.core {
            let y = p
                .syzygy_shift(x, k)
                .expect("core labels are non-projective");
            *core.entry(y).or_insert(0) += m;
        }
        GreenElement { core, proj_dim: 0 }
    }

    /// The same element with the projective part forgotten.
    pub fn core_only(&self) -> GreenElement {
        GreenElement {
            core: self.core.clone(),
            proj_dim: 0,
        }
    }
}

impl fmt::Display for GreenElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "core: ")?;
        if self.core.is_empty() {
            write!(f, "(empty)")?;
        }
        for (k, (x, &mult)) in self.core.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if mult > 1 {
                write!(f, "{mult} ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "; proj_dim: {}", self.proj_dim)
    }
}

/// The index set of `θ` for the pair of simple dimensions at `v1`, `v2`.
///
/// With `N = dim L(v1)` and `N' = dim L(v2)`: `[0, min(N,N') - 1]` when
/// `N + N' <= d`, otherwise `[N + N' - d, min(N,N') - 1]`. It has
/// `min(N, N', d - N, d - N')` elements and is never empty.
pub fn index_set(p: &Params, v1: Vertex, v2: Vertex) -> Result<RangeInclusive<i64>, FusionError> {
    for v in [v1, v2] {
        if p.is_projective_vertex(v) {
            return Err(FusionError::ProjectiveVertex(v));
        }
    }
    let (a, b) = (p.dim_simple(v1), p.dim_simple(v2));
    let lo = if a + b <= p.d() { 0 } else { a + b - p.d() };
    Ok(lo..=a.min(b) - 1)
}

/// Vertices `(u1 + u2, i1 + i2 + θ)` for `θ` in the index set.
fn product_vertices(p: &Params, v1: Vertex, v2: Vertex) -> Vec<Vertex> {
    let range = index_set(p, v1, v2).expect("non-projective labels sit on non-projective vertices");
    let w = v1.u() + v2.u();
    range
        .map(|theta| p.vertex(w, v1.i() + v2.i() + theta))
        .collect()
}

/// Non-projective summands of `a ⊗ b`, unsorted.
fn core_summands(p: &Params, a: &ModLabel, b: &ModLabel) -> Vec<ModLabel> {
    use ModLabel::*;

    // Odd-length factor first, then shorter string/band first.
    match (a, b) {
        (Projective { .. }, _) | (_, Projective { .. }) => return Vec::new(),
        (StringPlus { .. } | StringMinus { .. } | Band { .. }, Syzygy { .. }) => {
            return core_summands(p, b, a)
        }
        (StringPlus { ell: x, .. }, StringPlus { ell: y, .. })
        | (StringMinus { ell: x, .. }, StringMinus { ell: y, .. })
        | (Band { ell: x, .. }, Band { ell: y, .. })
            if x > y =>
        {
            return core_summands(p, b, a)
        }
        _ => {}
    }

    let verts = product_vertices(p, a.vertex(), b.vertex());
    let twist = |w: Vertex, t: i64| p.shift(w, t);
    let mut out = Vec::with_capacity(2 * verts.len());
    match (*a, *b) {
        // Degrees stay within 2 * MAX_DEGREE, far from overflow.
        (Syzygy { m: m1, .. }, Syzygy { m: m2, .. }) => {
            out.extend(verts.iter().map(|&w| Syzygy { v: w, m: m1 + m2 }));
        }
        (Syzygy { m, .. }, StringPlus { ell, .. }) => {
            out.extend(verts.iter().map(|&w| StringPlus {
                v: twist(w, -m),
                ell,
            }));
        }
        (Syzygy { m, .. }, StringMinus { ell, .. }) => {
            out.extend(verts.iter().map(|&w| StringMinus {
                v: twist(w, m),
                ell,
            }));
        }
        (Syzygy { m, .. }, Band { ell, lambda, .. }) => {
            let odd = m.rem_euclid(2);
            out.extend(verts.iter().map(|&w| Band {
                v: p.fold_mod_d(twist(w, odd)),
                ell,
                lambda,
            }));
        }
        (StringPlus { ell: short, .. }, StringPlus { ell: long, .. }) => {
            let t = 2 * long as i64 - 1;
            for &w in &verts {
                out.push(StringPlus { v: w, ell: short });
                out.push(StringPlus {
                    v: twist(w, t),
                    ell: short,
                });
            }
        }
        (StringMinus { ell: short, .. }, StringMinus { ell: long, .. }) => {
            let t = -(2 * long as i64 - 1);
            for &w in &verts {
                out.push(StringMinus { v: w, ell: short });
                out.push(StringMinus {
                    v: twist(w, t),
                    ell: short,
                });
            }
        }
        (
            Band {
                ell: short, lambda, ..
            },
            Band { lambda: mu, .. },
        ) if lambda == mu => {
            for &w in &verts {
                out.push(Band {
                    v: p.fold_mod_d(w),
                    ell: short,
                    lambda,
                });
                out.push(Band {
                    v: p.fold_mod_d(twist(w, 1)),
                    ell: short,
                    lambda,
                });
            }
        }
        // Plus against minus strings, bands against strings, bands with distinct λ: projective.
        _ => {}
    }
    out
}

/// `a ⊗ b` in the stable Green ring, with the projective part recorded by
/// dimension: `proj_dim = dim a · dim b - dim core`.
pub fn tensor_basis(p: &Params, a: &ModLabel, b: &ModLabel) -> GreenElement {
    let mut e = GreenElement::zero();
    for x in core_summands(p, a, b) {
        *e.core.entry(x).or_insert(0) += 1;
    }
    e.proj_dim = p.dim_of(a) as i128 * p.dim_of(b) as i128 - e.core_dim(p);
    e
}

/// Bilinear extension of [`tensor_basis`], or `None` on overflow.
pub fn checked_tensor(p: &Params, e1: &GreenElement, e2: &GreenElement) -> Option<GreenElement> {
    let mut out = GreenElement::zero();
    for (a, &ma) in &e1.core {
        for (b, &mb) in &e2.core {
            let mult = ma.checked_mul(mb)?;
            for x in core_summands(p, a, b) {
                let slot = out.core.entry(x).or_insert(0);
                *slot = slot.checked_add(mult)?;
            }
        }
    }
    let too_deep = |x: &ModLabel| matches!(x, ModLabel::Syzygy { m, .. } if m.abs() > MAX_DEGREE);
    if out.core.keys().any(too_deep) {
        return None;
    }
    let total = e1.total_dim(p).checked_mul(e2.total_dim(p))?;
    let mut core_dim: i128 = 0;
    for (x, &m) in &out.core {
        core_dim = core_dim.checked_add((p.dim_of(x) as i128).checked_mul(m as i128)?)?;
    }
    out.proj_dim = total.checked_sub(core_dim)?;
    Some(out)
}

/// Bilinear extension of [`tensor_basis`].
///
/// # Panics
///
/// On `u64`/`i128` overflow, which needs far larger inputs than any
/// desk-scale computation; use [`checked_tensor`] for untrusted input.
pub fn tensor(p: &Params, e1: &GreenElement, e2: &GreenElement) -> GreenElement {
    checked_tensor(p, e1, e2).expect("green ring arithmetic overflowed")
}

/// `x^{⊗t}` as an element, or `None` on overflow.
pub fn checked_power(p: &Params, x: &GreenElement, t: u32) -> Option<GreenElement> {
    let mut acc = x.clone();
    for _ in 1..t {
        acc = checked_tensor(p, &acc, x)?;
    }
    Some(acc)
}

/// The sets of distinct non-projective summands of `x, x⊗x, ..., x^{⊗t_max}`.
///
/// Projective summands never contribute non-projective ones again, so each
/// layer only depends on the set of labels in the previous one.
pub fn tensor_power_layers(p: &Params, x: &ModLabel, t_max: usize) -> Vec<BTreeSet<ModLabel>> {
    let mut layers = Vec::with_capacity(t_max);
    if t_max == 0 {
        return layers;
    }
    let first: BTreeSet<ModLabel> = if x.is_projective() {
        BTreeSet::new()
    } else {
        BTreeSet::from([*x])
    };
    layers.push(first);
    while layers.len() < t_max {
        let prev = layers.last().unwrap();
        let next: BTreeSet<ModLabel> = prev.iter().flat_map(|y| core_summands(p, y, x)).collect();
        layers.push(next);
    }
    layers
}

/// All distinct non-projective summands of `x^{⊗t}` for `1 <= t <= t_max`.
pub fn tensor_power_closure(p: &Params, x: &ModLabel, t_max: usize) -> BTreeSet<ModLabel> {
    tensor_power_layers(p, x, t_max)
        .into_iter()
        .flatten()
        .collect()
}

/// Image of a `B_{0,0}` label under `- ⊗ L(u,i)`: the base vertex
/// `σ_0^t(0)` is replaced by `σ_u^t(i)`, everything else is kept.
pub fn stable_equiv_image(
    p: &Params,
    x: &ModLabel,
    target: Vertex,
) -> Result<ModLabel, FusionError> {
    if p.is_projective_vertex(target) {
        return Err(FusionError::ProjectiveVertex(target));
    }
    let base = p.vertex(0, 0);
    if p.is_projective_vertex(base) {
        return Err(FusionError::NoBaseBlock);
    }
    if x.is_projective() {
        return Err(FusionError::NotInBaseBlock(*x));
    }
    let t = p
        .block_phase(base, x.vertex())
        .ok_or(FusionError::NotInBaseBlock(*x))?;
    let image = x.with_vertex(p.shift(target, t));
    Ok(match image {
        ModLabel::Band { v, .. } => image.with_vertex(p.fold_mod_d(v)),
        _ => image,
    })
}
