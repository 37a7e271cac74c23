//! Representations of the basic algebra of a non-simple block.
//!
//! The quiver is the cycle `Z_m` (`m = 2n/d`) with arrows `b_p: p → p+1` and
//! `b̄_p: p+1 → p`, subject to `b_{p+1} b_p = 0`, `b̄_p b̄_{p+1} = 0` and
//! `b̄_p b_p = b_{p-1} b̄_{p-1}` at every vertex. Vertex `p` stands for the
//! simple `L(σ_u^p(i))` of the block of `L(u,i)`; phase 0 is that base.
//!
//! Everything here is plain linear algebra over an exact [`Field`]: Hom
//! spaces are solution spaces of the intertwiner equations, syzygies are
//! kernels of projective covers and `Ext¹(A, B)` is the stable Hom from `ΩA`
//! to `B`.

use serde_json::{json, Value};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::modring::{Params, Vertex};
use crate::scalar::Field;
use crate::Lambda;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BlockRepError {
    #[error("a block quiver needs an even number m >= 2 of vertices, got {0}")]
    BadQuiver(usize),
    #[error("representations live on quivers with {0} and {1} vertices")]
    QuiverMismatch(usize, usize),
    #[error("arrow {arrow} has shape {got:?}, expected {expected:?}")]
    ShapeMismatch {
        arrow: Arrow,
        got: (usize, usize),
        expected: (usize, usize),
    },
    #[error("string and band lengths must be positive")]
    ZeroLength,
    #[error("band parameter must be non-zero")]
    ZeroLambda,
    #[error("the zero representation has no endomorphism ring to test")]
    ZeroRep,
    #[error("the formula needs 1 <= t <= ell, got t = {t}, ell = {ell}")]
    BadStringPair { t: u32, ell: u32 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Arrow {
    /// `b_p: p → p+1`
    B(usize),
    /// `b̄_p: p+1 → p`
    BBar(usize),
}

impl std::fmt::Display for Arrow {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Arrow::B(p) => write!(f, "b{p}"),
            Arrow::BBar(p) => write!(f, "bbar{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockQuiver {
    m: usize,
}

impl BlockQuiver {
    pub fn new(m: usize) -> Result<Self, BlockRepError> {
        if m < 2 || !m.is_multiple_of(2) {
            return Err(BlockRepError::BadQuiver(m));
        }
        Ok(Self { m })
    }

    /// The quiver shared by all non-simple blocks for `(n, d)`, or `None`
    /// when `d = 1` and every block is simple.
    pub fn for_params(p: &Params) -> Option<Self> {
        (p.d() > 1).then(|| Self {
            m: p.orbit_len() as usize,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.m
    }

    pub fn vertex(&self, phase: i64) -> usize {
        phase.rem_euclid(self.m as i64) as usize
    }

    pub fn source(&self, a: Arrow) -> usize {
        match a {
            Arrow::B(p) => p,
            Arrow::BBar(p) => (p + 1) % self.m,
        }
    }

    pub fn target(&self, a: Arrow) -> usize {
        match a {
            Arrow::B(p) => (p + 1) % self.m,
            Arrow::BBar(p) => p,
        }
    }

    pub fn arrows(&self) -> impl Iterator<Item = Arrow> {
        let m = self.m;
        (0..m).map(Arrow::B).chain((0..m).map(Arrow::BBar))
    }
}

/// Per-vertex linear maps making up a morphism of representations.
pub type Morphism<F> = Vec<Matrix<F>>;

#[derive(Clone, PartialEq, Debug)]
pub struct BlockRep<F> {
    quiver: BlockQuiver,
    dims: Vec<usize>,
    b: Vec<Matrix<F>>,
    bbar: Vec<Matrix<F>>,
}

impl<F: Field> BlockRep<F> {
    /// Assembles a representation from arrow matrices, checking shapes but
    /// not relations.
    pub fn new(
        quiver: BlockQuiver,
        dims: Vec<usize>,
        b: Vec<Matrix<F>>,
        bbar: Vec<Matrix<F>>,
    ) -> Result<Self, BlockRepError> {
        let m = quiver.m;
        if dims.len() != m || b.len() != m || bbar.len() != m {
            return Err(BlockRepError::QuiverMismatch(m, dims.len()));
        }
        let rep = Self {
            quiver,
            dims,
            b,
            bbar,
        };
        for a in quiver.arrows() {
            let expected = (rep.dims[quiver.target(a)], rep.dims[quiver.source(a)]);
            let got = rep.arrow(a).shape();
            if got != expected {
                return Err(BlockRepError::ShapeMismatch {
                    arrow: a,
                    got,
                    expected,
                });
            }
        }
        Ok(rep)
    }

    pub fn zero(quiver: BlockQuiver) -> Self {
        let m = quiver.m;
        Self {
            quiver,
            dims: vec![0; m],
            b: vec![Matrix::zeros(0, 0); m],
            bbar: vec![Matrix::zeros(0, 0); m],
        }
    }

    pub fn quiver(&self) -> BlockQuiver {
        self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of composition factors.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn arrow(&self, a: Arrow) -> &Matrix<F> {
        match a {
            Arrow::B(p) => &self.b[p],
            Arrow::BBar(p) => &self.bbar[p],
        }
    }

    /// Whether all three families of relations hold at every vertex.
    pub fn check_relations(&self) -> bool {
        let m = self.quiver.m;
        (0..m).all(|p| {
            let next = (p + 1) % m;
            let prev = (p + m - 1) % m;
            self.b[next].mul(&self.b[p]).is_zero()
                && self.bbar[p].mul(&self.bbar[next]).is_zero()
                && self.bbar[p].mul(&self.b[p]) == self.b[prev].mul(&self.bbar[prev])
        })
    }

    /// Dimension of the radical at each vertex.
    pub fn radical_dims(&self) -> Vec<usize> {
        (0..self.quiver.m)
            .map(|p| self.incoming(p).rank())
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.dims
            .iter()
            .zip(self.radical_dims())
            .map(|(d, r)| d - r)
            .collect()
    }

    /// Dimension of the socle at each vertex.
    pub fn socle_dims(&self) -> Vec<usize> {
        (0..self.quiver.m)
            .map(|p| self.dims[p] - self.outgoing(p).rank())
            .collect()
    }

    /// All arrows into `p`, side by side.
    fn incoming(&self, p: usize) -> Matrix<F> {
        let prev = (p + self.quiver.m - 1) % self.quiver.m;
        self.b[prev].hstack(&self.bbar[p])
    }

    /// All arrows out of `p`, stacked.
    fn outgoing(&self, p: usize) -> Matrix<F> {
        let prev = (p + self.quiver.m - 1) % self.quiver.m;
        self.b[p]
            .transpose()
            .hstack(&self.bbar[prev].transpose())
            .transpose()
    }

    /// Debug dump with rationals as `"p/q"` strings.
    pub fn to_json(&self) -> Value {
        let arrows: serde_json::Map<String, Value> = self
            .quiver
            .arrows()
            .map(|a| (a.to_string(), json!(self.arrow(a).to_strings())))
            .collect();
        json!({ "vertices": self.quiver.m, "dims": self.dims, "arrows": arrows })
    }
}

/// Collects a representation from tagged basis vectors and arrow actions.
struct Builder<F> {
    quiver: BlockQuiver,
    tags: Vec<usize>,
    acts: Vec<(Arrow, usize, usize, F)>,
}

impl<F: Field> Builder<F> {
    fn new(quiver: BlockQuiver) -> Self {
        Self {
            quiver,
            tags: Vec::new(),
            acts: Vec::new(),
        }
    }

    fn add(&mut self, phase: i64) -> usize {
        self.tags.push(self.quiver.vertex(phase));
        self.tags.len() - 1
    }

    /// `a(from) += coef · to`.
    fn act(&mut self, a: Arrow, from: usize, to: usize, coef: F) {
        debug_assert_eq!(self.tags[from], self.quiver.source(a));
        debug_assert_eq!(self.tags[to], self.quiver.target(a));
        self.acts.push((a, from, to, coef));
    }

    fn b(&self, phase: i64) -> Arrow {
        Arrow::B(self.quiver.vertex(phase))
    }

    fn bbar(&self, phase: i64) -> Arrow {
        Arrow::BBar(self.quiver.vertex(phase))
    }

    /// The representation, plus the position of each basis vector inside
    /// its vertex space.
    fn finish(self) -> (BlockRep<F>, Vec<usize>) {
        let q = self.quiver;
        let mut dims = vec![0; q.m];
        let mut local = Vec::with_capacity(self.tags.len());
        for &t in &self.tags {
            local.push(dims[t]);
            dims[t] += 1;
        }
        let mut rep: BlockRep<F> = BlockRep {
            quiver: q,
            b: (0..q.m)
                .map(|p| Matrix::zeros(dims[q.target(Arrow::B(p))], dims[p]))
                .collect(),
            bbar: (0..q.m)
                .map(|p| Matrix::zeros(dims[p], dims[q.source(Arrow::BBar(p))]))
                .collect(),
            dims,
        };
        for (a, from, to, coef) in self.acts {
            let mat = match a {
                Arrow::B(p) => &mut rep.b[p],
                Arrow::BBar(p) => &mut rep.bbar[p],
            };
            let slot = &mut mat[(local[to], local[from])];
            *slot = slot.clone() + coef;
        }
        (rep, local)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StringSign {
    Plus,
    Minus,
}

/// The zigzag string with `ell` tops, starting at `phase`.
///
/// Plus strings have tops at `phase + 2x` and socles at `phase + 2x + 1`;
/// minus strings run the other way round the cycle.
pub fn build_string<F: Field>(
    q: &BlockQuiver,
    sign: StringSign,
    ell: u32,
    phase: i64,
) -> Result<BlockRep<F>, BlockRepError> {
    if ell == 0 {
        return Err(BlockRepError::ZeroLength);
    }
    let mut bld = Builder::new(*q);
    let mut socles: Vec<usize> = Vec::new();
    for x in 0..ell as i64 {
        let (top_at, soc_at) = match sign {
            StringSign::Plus => (phase + 2 * x, phase + 2 * x + 1),
            StringSign::Minus => (phase - 2 * x, phase - 2 * x - 1),
        };
        let top = bld.add(top_at);
        let soc = bld.add(soc_at);
        match sign {
            StringSign::Plus => {
                bld.act(bld.b(top_at), top, soc, F::one());
                if x > 0 {
                    bld.act(bld.bbar(top_at - 1), top, socles[x as usize - 1], F::one());
                }
            }
            StringSign::Minus => {
                bld.act(bld.bbar(top_at - 1), top, soc, F::one());
                if x > 0 {
                    bld.act(bld.b(top_at), top, socles[x as usize - 1], F::one());
                }
            }
        }
        socles.push(soc);
    }
    Ok(bld.finish().0)
}

/// The band of quasi-length `ell` with parameter `lambda`: `ell`-dimensional
/// at every vertex, `b` at odd offsets from `phase` and `b̄` at even offsets
/// vanish, the remaining arrows are identities except `b_phase = J_ell(λ)`.
pub fn build_band<F: Field>(
    q: &BlockQuiver,
    ell: u32,
    lambda: &Lambda,
    phase: i64,
) -> Result<BlockRep<F>, BlockRepError> {
    if ell == 0 {
        return Err(BlockRepError::ZeroLength);
    }
    if *lambda.numer() == 0 {
        return Err(BlockRepError::ZeroLambda);
    }
    let ell = ell as usize;
    let mut bld = Builder::new(*q);
    let basis: Vec<Vec<usize>> = (0..q.m as i64)
        .map(|k| (0..ell).map(|_| bld.add(phase + k)).collect())
        .collect();
    let jordan = Matrix::jordan(ell, F::from_lambda(lambda));
    // Tops sit at even offsets; both arrows leave them.
    for k in (0..q.m).step_by(2) {
        let at = phase + k as i64;
        let (next, prev) = ((k + 1) % q.m, (k + q.m - 1) % q.m);
        for c in 0..ell {
            if k == 0 {
                for r in 0..ell {
                    if !jordan[(r, c)].is_zero() {
                        bld.act(
                            bld.b(at),
                            basis[0][c],
                            basis[next][r],
                            jordan[(r, c)].clone(),
                        );
                    }
                }
            } else {
                bld.act(bld.b(at), basis[k][c], basis[next][c], F::one());
            }
            bld.act(bld.bbar(at - 1), basis[k][c], basis[prev][c], F::one());
        }
    }
    Ok(bld.finish().0)
}

pub fn build_simple<F: Field>(q: &BlockQuiver, phase: i64) -> BlockRep<F> {
    let mut bld = Builder::new(*q);
    bld.add(phase);
    bld.finish().0
}

/// The indecomposable projective with top and socle at `phase`.
pub fn build_projective<F: Field>(q: &BlockQuiver, phase: i64) -> BlockRep<F> {
    let mut bld = Builder::new(*q);
    add_projective(&mut bld, phase);
    bld.finish().0
}

/// Adds `t, b t, b̄ t, b̄ b t` for a projective at `phase`; returns their
/// indices in that order.
fn add_projective<F: Field>(bld: &mut Builder<F>, phase: i64) -> [usize; 4] {
    let t = bld.add(phase);
    let x = bld.add(phase + 1);
    let y = bld.add(phase - 1);
    let s = bld.add(phase);
    bld.act(bld.b(phase), t, x, F::one());
    bld.act(bld.bbar(phase - 1), t, y, F::one());
    bld.act(bld.bbar(phase), x, s, F::one());
    bld.act(bld.b(phase - 1), y, s, F::one());
    [t, x, y, s]
}

pub fn direct_sum<F: Field>(
    a: &BlockRep<F>,
    b: &BlockRep<F>,
) -> Result<BlockRep<F>, BlockRepError> {
    same_quiver(a, b)?;
    Ok(BlockRep {
        quiver: a.quiver,
        dims: a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect(),
        b: a.b.iter().zip(&b.b).map(|(x, y)| x.block_diag(y)).collect(),
        bbar: a
            .bbar
            .iter()
            .zip(&b.bbar)
            .map(|(x, y)| x.block_diag(y))
            .collect(),
    })
}

/// The vector-space dual, made a representation again through the
/// anti-automorphism exchanging `b_p` and `b̄_p`.
pub fn dual_rep<F: Field>(a: &BlockRep<F>) -> BlockRep<F> {
    BlockRep {
        quiver: a.quiver,
        dims: a.dims.clone(),
        b: a.bbar.iter().map(Matrix::transpose).collect(),
        bbar: a.b.iter().map(Matrix::transpose).collect(),
    }
}

fn same_quiver<F>(a: &BlockRep<F>, b: &BlockRep<F>) -> Result<(), BlockRepError> {
    if a.quiver != b.quiver {
        return Err(BlockRepError::QuiverMismatch(a.quiver.m, b.quiver.m));
    }
    Ok(())
}

/// A basis of `Hom(A, B)`.
pub fn hom_basis<F: Field>(
    a: &BlockRep<F>,
    b: &BlockRep<F>,
) -> Result<Vec<Morphism<F>>, BlockRepError> {
    let (system, offsets) = intertwiner_system(a, b)?;
    Ok(system
        .kernel()
        .into_iter()
        .map(|v| unflatten(a, b, &offsets, &v))
        .collect())
}

pub fn hom_dim<F: Field>(a: &BlockRep<F>, b: &BlockRep<F>) -> Result<usize, BlockRepError> {
    let (system, _) = intertwiner_system(a, b)?;
    Ok(system.cols() - system.rank())
}

/// Unknowns `f_p[r][c]` (a `dim B_p × dim A_p` block per vertex, row-major)
/// and one equation per entry of `B_α f_s − f_t A_α` for each arrow
/// `α: s → t`.
fn intertwiner_system<F: Field>(
    a: &BlockRep<F>,
    b: &BlockRep<F>,
) -> Result<(Matrix<F>, Vec<usize>), BlockRepError> {
    same_quiver(a, b)?;
    let q = a.quiver;
    let mut offsets = Vec::with_capacity(q.m + 1);
    let mut total = 0;
    for p in 0..q.m {
        offsets.push(total);
        total += a.dims[p] * b.dims[p];
    }
    offsets.push(total);
    let var = |p: usize, r: usize, c: usize| offsets[p] + r * a.dims[p] + c;

    let mut rows: Vec<Vec<F>> = Vec::new();
    for arrow in q.arrows() {
        let (s, t) = (q.source(arrow), q.target(arrow));
        let (am, bm) = (a.arrow(arrow), b.arrow(arrow));
        for i in 0..b.dims[t] {
            for j in 0..a.dims[s] {
                let mut row = vec![F::zero(); total];
                for k in 0..b.dims[s] {
                    let coef = &bm[(i, k)];
                    if !coef.is_zero() {
                        let v = var(s, k, j);
                        row[v] = row[v].clone() + coef.clone();
                    }
                }
                for k in 0..a.dims[t] {
                    let coef = &am[(k, j)];
                    if !coef.is_zero() {
                        let v = var(t, i, k);
                        row[v] = row[v].clone() - coef.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = if rows.is_empty() {
        Matrix::zeros(0, total)
    } else {
        Matrix::from_rows(rows)
    };
    Ok((system, offsets))
}

fn unflatten<F: Field>(
    a: &BlockRep<F>,
    b: &BlockRep<F>,
    offsets: &[usize],
    v: &[F],
) -> Morphism<F> {
    (0..a.quiver.m)
        .map(|p| {
            Matrix::from_fn(b.dims[p], a.dims[p], |r, c| {
                v[offsets[p] + r * a.dims[p] + c].clone()
            })
        })
        .collect()
}

fn compose<F: Field>(g: &Morphism<F>, f: &Morphism<F>) -> Morphism<F> {
    g.iter().zip(f).map(|(x, y)| x.mul(y)).collect()
}

fn flatten<F: Field>(f: &Morphism<F>) -> Vec<F> {
    f.iter().flat_map(|m| m.entries().iter().cloned()).collect()
}

/// The projective cover `π: P → A`, built from a basis of a complement of
/// the radical at each vertex.
pub fn projective_cover<F: Field>(a: &BlockRep<F>) -> (BlockRep<F>, Morphism<F>) {
    let q = a.quiver;
    let mut bld = Builder::new(q);
    // Image in A of each basis vector of the cover, with its vertex.
    let mut images: Vec<Vec<F>> = Vec::new();
    for p in 0..q.m {
        for g in a.incoming(p).complement_basis() {
            let mut top = vec![F::zero(); a.dims[p]];
            top[g] = F::one();
            let top = Matrix::from_columns(a.dims[p], &[top]);
            let phase = p as i64;
            let x = a.arrow(bld.b(phase)).mul(&top);
            let y = a.arrow(bld.bbar(phase - 1)).mul(&top);
            let s = a.arrow(bld.bbar(phase)).mul(&x);
            add_projective(&mut bld, phase);
            images.extend([top, x, y, s].iter().map(|m| m.column(0)));
        }
    }
    let tags = bld.tags.clone();
    let (cover, local) = bld.finish();
    let mut pi: Morphism<F> = (0..q.m)
        .map(|p| Matrix::zeros(a.dims[p], cover.dims[p]))
        .collect();
    for (k, img) in images.iter().enumerate() {
        for (r, x) in img.iter().enumerate() {
            pi[tags[k]][(r, local[k])] = x.clone();
        }
    }
    (cover, pi)
}

/// Maps `A → B` modulo those factoring through a projective.
pub fn stable_hom_dim<F: Field>(a: &BlockRep<F>, b: &BlockRep<F>) -> Result<usize, BlockRepError> {
    let hom = hom_dim(a, b)?;
    if hom == 0 {
        return Ok(0);
    }
    let (cover, pi) = projective_cover(b);
    let lifted: Vec<Vec<F>> = hom_basis(a, &cover)?
        .iter()
        .map(|f| flatten(&compose(&pi, f)))
        .collect();
    if lifted.is_empty() {
        return Ok(hom);
    }
    Ok(hom - Matrix::from_rows(lifted).rank())
}

/// Kernel of the projective cover.
pub fn syzygy_rep<F: Field>(a: &BlockRep<F>) -> BlockRep<F> {
    let q = a.quiver;
    let (cover, pi) = projective_cover(a);
    let embed: Vec<Matrix<F>> = (0..q.m)
        .map(|p| Matrix::from_columns(cover.dims[p], &pi[p].kernel()))
        .collect();
    let dims: Vec<usize> = embed.iter().map(Matrix::cols).collect();
    let restrict = |arrow: Arrow| {
        let (s, t) = (q.source(arrow), q.target(arrow));
        let image = cover.arrow(arrow).mul(&embed[s]);
        embed[t]
            .solve(&image)
            .expect("the kernel of a morphism is a subrepresentation")
    };
    BlockRep {
        quiver: q,
        b: (0..q.m).map(|p| restrict(Arrow::B(p))).collect(),
        bbar: (0..q.m).map(|p| restrict(Arrow::BBar(p))).collect(),
        dims,
    }
}

pub fn cosyzygy_rep<F: Field>(a: &BlockRep<F>) -> BlockRep<F> {
    dual_rep(&syzygy_rep(&dual_rep(a)))
}

/// `Ω^k A` for any integer `k`.
pub fn syzygy_pow<F: Field>(a: &BlockRep<F>, k: i64) -> BlockRep<F> {
    let step = if k >= 0 { syzygy_rep } else { cosyzygy_rep };
    (0..k.unsigned_abs()).fold(a.clone(), |acc, _| step(&acc))
}

pub fn ext1_dim<F: Field>(a: &BlockRep<F>, b: &BlockRep<F>) -> Result<usize, BlockRepError> {
    same_quiver(a, b)?;
    stable_hom_dim(&syzygy_rep(a), b)
}

/// `#{y ≡ 0} − #{y ≡ ell} + #{y ≡ t − ell − 1}` over `0 <= y <= t − 1`,
/// congruences taken mod `ratio = n/d`.
pub fn ext1_string_formula(t: u32, ell: u32, ratio: u32) -> Result<usize, BlockRepError> {
    if t == 0 || t > ell || ratio == 0 {
        return Err(BlockRepError::BadStringPair { t, ell });
    }
    let r = ratio as i64;
    let count = |target: i64| {
        (0..t as i64)
            .filter(|y| (y - target).rem_euclid(r) == 0)
            .count()
    };
    let value =
        count(0) as i64 - count(ell as i64) as i64 + count(t as i64 - ell as i64 - 1) as i64;
    Ok(value as usize)
}

fn endomorphism_gram<F: Field>(a: &BlockRep<F>) -> Result<Matrix<F>, BlockRepError> {
    let basis = hom_basis(a, a)?;
    Ok(Matrix::from_fn(basis.len(), basis.len(), |j, k| {
        basis[j]
            .iter()
            .zip(&basis[k])
            .fold(F::zero(), |acc, (x, y)| acc + x.mul(y).trace())
    }))
}

/// Whether `End(A)` is local, detected as `dim End/rad = 1` with the radical
/// computed as the kernel of the trace form.
pub fn is_indecomposable<F: Field>(a: &BlockRep<F>) -> Result<bool, BlockRepError> {
    if a.total_dim() == 0 {
        return Err(BlockRepError::ZeroRep);
    }
    Ok(endomorphism_gram(a)?.rank() == 1)
}

/// For indecomposable `A`: whether `B ≅ A`. Some basis element of
/// `Hom(A, B)` is invertible exactly when the two are isomorphic, since the
/// non-invertible maps then form a proper subspace.
pub fn is_isomorphic<F: Field>(a: &BlockRep<F>, b: &BlockRep<F>) -> Result<bool, BlockRepError> {
    same_quiver(a, b)?;
    if a.dims != b.dims {
        return Ok(false);
    }
    Ok(hom_basis(a, b)?
        .iter()
        .any(|f| f.iter().all(Matrix::is_invertible)))
}

/// Dimension over the ground field of the module modelled by `a`, with
/// vertex `p` standing for the simple on `σ^p(base)`.
pub fn module_dim<F: Field>(p: &Params, base: Vertex, a: &BlockRep<F>) -> i64 {
    a.dims
        .iter()
        .enumerate()
        .map(|(k, &dim)| dim as i64 * p.dim_simple(p.shift(base, k as i64)))
        .sum()
}
