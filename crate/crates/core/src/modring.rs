//! Residue arithmetic on `Z_n` governed by the parameter pair `(n, d)`.
//!
//! Everything about the simple modules `L(u,i)` that only depends on
//! residues lives here: the `d`-residue `<r>` taken in `{1, ..., d}`, the
//! permutations `σ_u`, projectivity of a vertex, simple dimensions and the
//! block partition.
//!
//! The `σ_u` orbit of a non-projective `i` has `2n/d` elements and its even
//! powers are translations: `σ_u^{2t}(i) = i + td` and
//! `σ_u^{2t+1}(i) = σ_u(i) + td`. Projective vertices are fixed by `σ_u`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest `n` accepted; keeps every intermediate product well inside `i64`.
pub const MAX_N: i64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamsError {
    #[error("n and d must be positive (got n={n}, d={d})")]
    NonPositive { n: i64, d: i64 },
    #[error("d={d} does not divide n={n}")]
    NotDivisible { n: i64, d: i64 },
    #[error("n={0} exceeds the supported maximum {MAX_N}")]
    TooLarge(i64),
}

/// The pair `(n, d)` with `d | n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Params {
    n: i64,
    d: i64,
}

/// A pair `(u, i)` of residues in `[0, n)`, naming the simple module `L(u,i)`.
///
/// Only [`Params::vertex`] builds these, so the residues are always reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Vertex {
    u: i64,
    i: i64,
}

impl Vertex {
    pub fn u(self) -> i64 {
        self.u
    }

    pub fn i(self) -> i64 {
        self.i
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.i)
    }
}

/// Number of simple and non-simple blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlockCensus {
    pub simple_blocks: i64,
    pub nonsimple_blocks: i64,
}

impl Params {
    pub fn new(n: i64, d: i64) -> Result<Self, ParamsError> {
        if n < 1 || d < 1 {
            return Err(ParamsError::NonPositive { n, d });
        }
        if n > MAX_N {
            return Err(ParamsError::TooLarge(n));
        }
        if n % d != 0 {
            return Err(ParamsError::NotDivisible { n, d });
        }
        Ok(Params { n, d })
    }

    pub fn n(&self) -> i64 {
        self.n
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    /// `n/d`, the number of `σ_u^2`-steps in one orbit.
    pub fn ratio(&self) -> i64 {
        self.n / self.d
    }

    /// `2n/d`: the size of a non-projective `σ_u`-orbit, i.e. the number of
    /// vertices of a non-simple block quiver.
    pub fn orbit_len(&self) -> i64 {
        2 * self.n / self.d
    }

    /// Canonical residue in `[0, n)`.
    pub fn reduce(&self, r: i64) -> i64 {
        r.rem_euclid(self.n)
    }

    pub fn vertex(&self, u: i64, i: i64) -> Vertex {
        Vertex {
            u: self.reduce(u),
            i: self.reduce(i),
        }
    }

    /// `<r>`: the representative of `r mod d` in `{1, ..., d}`.
    pub fn res_d(&self, r: i64) -> i64 {
        (r - 1).rem_euclid(self.d) + 1
    }

    /// `σ_u(j) = d + j - <2j + u - 1>`, reduced mod `n`.
    pub fn sigma(&self, u: i64, j: i64) -> i64 {
        self.reduce(self.d + j - self.res_d(2 * j + u - 1))
    }

    /// `σ_u^t(j)` for any integer `t`, in constant time, from
    /// `σ_u^{2s}(j) = j + sd` and `σ_u^{2s+1}(j) = σ_u(j) + sd`.
    pub fn sigma_pow(&self, u: i64, j: i64, t: i64) -> i64 {
        if (2 * j + u - 1).rem_euclid(self.d) == 0 {
            // σ_u fixes projective vertices.
            return self.reduce(j);
        }
        let s = t.div_euclid(2);
        let base = if t.rem_euclid(2) == 0 {
            j
        } else {
            self.sigma(u, j)
        };
        self.reduce(base + (s % self.ratio()) * self.d)
    }

    pub fn is_projective_vertex(&self, v: Vertex) -> bool {
        (2 * v.i + v.u - 1).rem_euclid(self.d) == 0
    }

    /// `dim L(u,i)`: `d - <2i+u-1>` off the projective vertices, `d` on them.
    pub fn dim_simple(&self, v: Vertex) -> i64 {
        if self.is_projective_vertex(v) {
            self.d
        } else {
            self.d - self.res_d(2 * v.i + v.u - 1)
        }
    }

    /// The vertex `σ_u^t(i)` in the block of `v`.
    pub fn shift(&self, v: Vertex, t: i64) -> Vertex {
        Vertex {
            u: v.u,
            i: self.sigma_pow(v.u, v.i, t),
        }
    }

    /// The exponent `t` in `[0, 2n/d)` with `σ_u^t(base) = v`, if `v` lies in
    /// the block of the non-projective vertex `base`.
    pub fn block_phase(&self, base: Vertex, v: Vertex) -> Option<i64> {
        if base.u != v.u || self.is_projective_vertex(base) {
            return (base == v).then_some(0);
        }
        let diff = v.i - base.i;
        if diff.rem_euclid(self.d) == 0 {
            return Some(2 * (diff.rem_euclid(self.n) / self.d));
        }
        let odd = v.i - self.sigma(base.u, base.i);
        if odd.rem_euclid(self.d) == 0 {
            return Some(2 * (odd.rem_euclid(self.n) / self.d) + 1);
        }
        None
    }

    pub fn same_block(&self, v1: Vertex, v2: Vertex) -> bool {
        self.block_phase(v1, v2).is_some()
    }

    /// Closed-form block counts: `n²/d` simple blocks and `n(d-1)/2` others.
    pub fn block_census(&self) -> BlockCensus {
        BlockCensus {
            simple_blocks: self.n * self.n / self.d,
            nonsimple_blocks: self.n * (self.d - 1) / 2,
        }
    }

    /// All `n²` vertices, `u`-major.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n).flat_map(move |u| (0..self.n).map(move |i| Vertex { u, i }))
    }

    pub fn non_projective_vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.vertices()
            .filter(move |&v| !self.is_projective_vertex(v))
    }

    /// The `2n/d` vertices of the block of a non-projective `v`, listed by
    /// phase starting from `v`.
    pub fn block_orbit(&self, v: Vertex) -> Vec<Vertex> {
        (0..self.orbit_len()).map(|t| self.shift(v, t)).collect()
    }

    /// Canonical representative of the `σ_u^2`-orbit of `v`: `i` reduced to
    /// `[0, d)`.
    pub fn fold_mod_d(&self, v: Vertex) -> Vertex {
        Vertex {
            u: v.u,
            i: v.i.rem_euclid(self.d),
        }
    }

    /// Canonical vertex of the block containing `v`: the smallest `i` in its
    /// orbit (the vertex itself for projective vertices).
    pub fn block_base(&self, v: Vertex) -> Vertex {
        if self.is_projective_vertex(v) {
            return v;
        }
        self.block_orbit(v).into_iter().min().unwrap_or(v)
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, d={})", self.n, self.d)
    }
}
