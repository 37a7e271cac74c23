//! Invariant suites behind `greenring verify`.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::blockrep::{
    build_band, build_simple, build_string, direct_sum, ext1_dim, ext1_string_formula, hom_dim,
    is_indecomposable, is_isomorphic, module_dim, syzygy_pow, BlockQuiver, StringSign,
};
use crate::fusion::{stable_equiv_image, tensor, tensor_basis, tensor_power_layers, GreenElement};
use crate::labels::ModLabel;
use crate::modring::{Params, Vertex};
use crate::universe::{Bounds, UniverseKind};
use crate::{Lambda, Rep};

/// Outcome of one invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub cases: usize,
    /// First counterexample found, if any.
    pub failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }

    fn from_search(name: &'static str, cases: usize, failure: Option<String>) -> Self {
        Self {
            name,
            cases,
            failure,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Ring,
    Formulas,
    Classify,
    All,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    /// Largest `ℓ`, `t` and `|m|` exercised.
    pub bounds: u32,
    pub lambdas: Vec<Lambda>,
    pub triples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            seed: 0,
            bounds: 3,
            lambdas: Bounds::default().lambdas,
            triples: 1000,
        }
    }
}

impl VerifyOptions {
    fn universe(&self) -> Bounds {
        Bounds {
            max_ell: self.bounds,
            max_syzygy: self.bounds,
            lambdas: self.lambdas.clone(),
            ..Bounds::default()
        }
    }
}

pub fn run_suite(p: &Params, suite: Suite, opts: &VerifyOptions) -> Vec<Check> {
    match suite {
        Suite::Ring => ring_suite(p, opts),
        Suite::Formulas => formula_suite(p, opts),
        Suite::Classify => classify_suite(p, opts),
        Suite::All => {
            let mut out = ring_suite(p, opts);
            out.extend(formula_suite(p, opts));
            out.extend(classify_suite(p, opts));
            out
        }
    }
}

fn pairs(labels: &[ModLabel]) -> Vec<(ModLabel, ModLabel)> {
    labels
        .iter()
        .flat_map(|a| labels.iter().map(move |b| (*a, *b)))
        .collect()
}

/// First failing case in order, rendered by `check`.
fn search<T: Sync>(
    cases: &[T],
    check: impl Fn(&T) -> Option<String> + Sync + Send,
) -> Option<String> {
    cases.par_iter().find_map_first(check)
}

pub fn ring_suite(p: &Params, opts: &VerifyOptions) -> Vec<Check> {
    let labels = opts.universe().labels(p);
    let core_labels: Vec<ModLabel> = labels
        .iter()
        .copied()
        .filter(|x| !x.is_projective())
        .collect();
    let all_pairs = pairs(&labels);
    let core_pairs = pairs(&core_labels);
    let mut out = Vec::new();

    out.push(Check::from_search(
        "commutativity",
        all_pairs.len(),
        search(&all_pairs, |(a, b)| {
            (tensor_basis(p, a, b) != tensor_basis(p, b, a)).then(|| format!("{a} * {b}"))
        }),
    ));

    out.push(match p.trivial() {
        Some(one) => Check::from_search(
            "unit",
            labels.len(),
            search(&labels, |x| {
                (tensor_basis(p, &one, x) != GreenElement::from_label(p, *x)).then(|| x.to_string())
            }),
        ),
        None => Check::from_search("unit", 0, None),
    });

    out.push(Check::from_search(
        "associativity",
        opts.triples,
        search(&random_triples(p, &core_labels, opts), |[a, b, c]| {
            let (ea, eb, ec) = (
                GreenElement::from_label(p, *a),
                GreenElement::from_label(p, *b),
                GreenElement::from_label(p, *c),
            );
            let left = tensor(p, &tensor(p, &ea, &eb), &ec);
            let right = tensor(p, &ea, &tensor(p, &eb, &ec));
            (left != right).then(|| format!("({a} * {b}) * {c}"))
        }),
    ));

    out.push(Check::from_search(
        "dimension-bookkeeping",
        all_pairs.len(),
        search(&all_pairs, |(a, b)| {
            let e = tensor_basis(p, a, b);
            (e.proj_dim < 0 || e.proj_dim % p.d() as i128 != 0)
                .then(|| format!("{a} * {b}: proj_dim {}", e.proj_dim))
        }),
    ));

    out.push(Check::from_search(
        "dual-involution",
        labels.len(),
        search(&labels, |x| {
            let y = p.dual(x);
            (p.dual(&y) != *x || p.dim_of(&y) != p.dim_of(x) || p.length_of(&y) != p.length_of(x))
                .then(|| x.to_string())
        }),
    ));

    out.push(Check::from_search(
        "dual-compatibility",
        all_pairs.len(),
        search(&all_pairs, |(a, b)| {
            let lhs = tensor_basis(p, a, b).dual(p).core_only();
            let rhs = tensor_basis(p, &p.dual(a), &p.dual(b)).core_only();
            (lhs != rhs).then(|| format!("{a} * {b}"))
        }),
    ));

    for (name, k) in [
        ("omega-compatibility k=-1", -1),
        ("omega-compatibility k=1", 1),
        ("omega-compatibility k=2", 2),
    ] {
        out.push(Check::from_search(
            name,
            core_pairs.len(),
            search(&core_pairs, |(a, b)| omega_compat_failure(p, a, b, k)),
        ));
    }

    out.push(Check::from_search(
        "projective-arms",
        all_pairs.len(),
        search(&all_pairs, |(a, b)| {
            if !must_be_projective(a, b) {
                return None;
            }
            let e = tensor_basis(p, a, b);
            let full = p.dim_of(a) as i128 * p.dim_of(b) as i128;
            (!e.core.is_empty() || e.proj_dim != full).then(|| format!("{a} * {b}"))
        }),
    ));

    out.push(census_check(p));
    out.push(stable_equivalence_check(p, &opts.universe()));
    out
}

pub fn omega_compat_failure(p: &Params, a: &ModLabel, b: &ModLabel, k: i64) -> Option<String> {
    let shifted = p.syzygy_shift(a, k).ok()?;
    let lhs = tensor_basis(p, &shifted, b).core_only();
    let rhs = tensor_basis(p, a, b).syzygy_shift(p, k);
    (lhs != rhs).then(|| format!("O^{k} applied to {a} * {b}"))
}

/// Pairs whose product has no non-projective summand.
pub fn must_be_projective(a: &ModLabel, b: &ModLabel) -> bool {
    use ModLabel::*;
    match (a, b) {
        (Projective { .. }, _) | (_, Projective { .. }) => true,
        (StringPlus { .. }, StringMinus { .. }) | (StringMinus { .. }, StringPlus { .. }) => true,
        (Band { .. }, StringPlus { .. } | StringMinus { .. })
        | (StringPlus { .. } | StringMinus { .. }, Band { .. }) => true,
        (Band { lambda, .. }, Band { lambda: mu, .. }) => lambda != mu,
        _ => false,
    }
}

fn random_triples(p: &Params, labels: &[ModLabel], opts: &VerifyOptions) -> Vec<[ModLabel; 3]> {
    if labels.is_empty() {
        return Vec::new();
    }
    let seed = opts.seed ^ ((p.n() as u64) << 32) ^ p.d() as u64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..opts.triples)
        .map(|_| {
            let mut pick = || *labels.choose(&mut rng).expect("non-empty");
            [pick(), pick(), pick()]
        })
        .collect()
}

fn census_check(p: &Params) -> Check {
    let census = p.block_census();
    let (n, d) = (p.n(), p.d());
    let mut seen: BTreeSet<Vertex> = BTreeSet::new();
    let (mut simple, mut nonsimple) = (0i64, 0i64);
    let mut failure = None;
    for v in p.vertices() {
        if seen.contains(&v) {
            continue;
        }
        if p.is_projective_vertex(v) {
            seen.insert(v);
            simple += 1;
            continue;
        }
        let orbit = p.block_orbit(v);
        if orbit.len() as i64 != p.orbit_len() && failure.is_none() {
            failure = Some(format!("block of {v} has {} simples", orbit.len()));
        }
        seen.extend(orbit);
        nonsimple += 1;
    }
    let (expected_simple, expected_nonsimple) = (n * n / d, n * (d - 1) / 2);
    if failure.is_none()
        && (simple != census.simple_blocks
            || nonsimple != census.nonsimple_blocks
            || simple != expected_simple
            || nonsimple != expected_nonsimple
            || simple + nonsimple * p.orbit_len() != n * n)
    {
        failure = Some(format!(
            "enumerated {simple} simple and {nonsimple} non-simple blocks"
        ));
    }
    Check::from_search("block-census", (n * n) as usize, failure)
}

fn stable_equivalence_check(p: &Params, bounds: &Bounds) -> Check {
    let base = p.vertex(0, 0);
    if p.is_projective_vertex(base) {
        return Check::from_search("stable-equivalence", 0, None);
    }
    let source = bounds.labels_in_block(p, base);
    let targets: Vec<Vertex> = p.non_projective_vertices().collect();
    let failure = search(&targets, |&target| {
        let images: Result<BTreeSet<ModLabel>, _> = source
            .iter()
            .map(|x| stable_equiv_image(p, x, target))
            .collect();
        let images = match images {
            Ok(images) => images,
            Err(e) => return Some(format!("{target}: {e}")),
        };
        let expected: BTreeSet<ModLabel> = bounds.labels_in_block(p, target).into_iter().collect();
        if images.len() != source.len() || images != expected {
            return Some(format!(
                "image of the block of (0,0) under {target} is not a bijection"
            ));
        }
        let simple = p.simple(target.u(), target.i()).expect("non-projective");
        source.iter().find_map(|x| {
            let core = tensor_basis(p, x, &simple).core_only();
            let image = GreenElement::from_label(p, stable_equiv_image(p, x, target).ok()?);
            (core != image).then(|| format!("{x} * {simple}"))
        })
    });
    Check::from_search("stable-equivalence", targets.len() * source.len(), failure)
}

pub fn formula_suite(p: &Params, opts: &VerifyOptions) -> Vec<Check> {
    let Some(q) = BlockQuiver::for_params(p) else {
        return vec![Check::from_search(
            "formulas (no non-simple blocks)",
            0,
            None,
        )];
    };
    let ratio = p.ratio() as u32;
    let bound = opts.bounds.max(1);
    let mut out = Vec::new();

    let string_cases: Vec<(u32, u32)> = (1..=bound)
        .flat_map(|ell| (1..=ell).map(move |t| (t, ell)))
        .collect();
    out.push(Check::from_search(
        "ext1-string-formula",
        2 * string_cases.len(),
        search(&string_cases, |&(t, ell)| {
            string_ext_failure(&q, ratio, t, ell)
        }),
    ));

    let band_cases: Vec<(u32, u32, Lambda, Lambda)> = (1..=bound)
        .flat_map(|t| (1..=bound).map(move |ell| (t, ell)))
        .flat_map(|(t, ell)| {
            opts.lambdas
                .iter()
                .flat_map(move |&l| opts.lambdas.iter().map(move |&mu| (t, ell, l, mu)))
        })
        .collect();
    out.push(Check::from_search(
        "band-hom-ext",
        band_cases.len(),
        search(&band_cases, |(t, ell, l, mu)| {
            band_failure(&q, ratio, *t, *ell, l, mu)
        }),
    ));

    out.push(syzygy_form_check(p, &q, 2 * bound as i64));
    out.push(oracle_period_check(&q, bound, &opts.lambdas));
    out.push(label_period_check(p, opts));
    out.push(oracle_integrity_check(&q, bound, &opts.lambdas));
    out
}

pub fn string_ext_failure(q: &BlockQuiver, ratio: u32, t: u32, ell: u32) -> Option<String> {
    let expected = ext1_string_formula(t, ell, ratio).ok()?;
    for (sign, phase) in [(StringSign::Plus, 2), (StringSign::Minus, -2)] {
        let a: Rep = build_string(q, sign, ell, phase).ok()?;
        let b: Rep = build_string(q, sign, t, 0).ok()?;
        let got = ext1_dim(&a, &b).ok()?;
        if got != expected {
            return Some(format!(
                "{sign:?} t={t} ell={ell}: oracle {got}, formula {expected}"
            ));
        }
    }
    None
}

pub fn band_failure(
    q: &BlockQuiver,
    ratio: u32,
    t: u32,
    ell: u32,
    l: &Lambda,
    mu: &Lambda,
) -> Option<String> {
    let a: Rep = build_band(q, t, l, 0).ok()?;
    let b: Rep = build_band(q, ell, mu, 0).ok()?;
    let shifted: Rep = build_band(q, t, l, 1).ok()?;
    let expected = if l == mu { t.min(ell) as usize } else { 0 };
    let hom = hom_dim(&a, &b).ok()?;
    let ext = ext1_dim(&a, &b).ok()?;
    let shifted_hom = hom_dim(&shifted, &b).ok()?;
    let shifted_expected = (t * ell * ratio) as usize;
    (hom != expected || ext != expected || shifted_hom != shifted_expected).then(|| {
        format!(
            "t={t} ell={ell} lambda={l} mu={mu}: hom {hom}, ext {ext}, shifted hom {shifted_hom}"
        )
    })
}

/// Oracle syzygies of each simple against the closed forms for `dim` and
/// `length` of `Ω^m L`, `|m| <= max_m`.
fn syzygy_form_check(p: &Params, q: &BlockQuiver, max_m: i64) -> Check {
    let bases: BTreeSet<Vertex> = p
        .non_projective_vertices()
        .map(|v| p.block_base(v))
        .collect();
    let cases: Vec<(Vertex, i64)> = bases
        .iter()
        .flat_map(|&b| (0..q.vertex_count() as i64).map(move |k| (b, k)))
        .collect();
    let failure = search(&cases, |&(base, phase)| {
        let v = p.shift(base, phase);
        let simple: Rep = build_simple(q, phase);
        for m in -max_m..=max_m {
            let rep = syzygy_pow(&simple, m);
            let label = p.syzygy(m, v.u(), v.i()).ok()?;
            let (dim, len) = (module_dim(p, base, &rep), rep.total_dim() as i64);
            if dim != p.dim_of(&label) || len != p.length_of(&label) {
                return Some(format!("{label}: oracle dim {dim}, length {len}"));
            }
        }
        None
    });
    Check::from_search(
        "syzygy-closed-forms",
        cases.len() * (2 * max_m as usize + 1),
        failure,
    )
}

fn oracle_period_check(q: &BlockQuiver, bound: u32, lambdas: &[Lambda]) -> Check {
    let period = q.vertex_count() as i64;
    let mut reps: Vec<(String, Rep, i64)> = Vec::new();
    for ell in 1..=bound {
        for &l in lambdas {
            reps.push((
                format!("band ell={ell} lambda={l}"),
                build_band(q, ell, &l, 0).unwrap(),
                2,
            ));
        }
        for sign in [StringSign::Plus, StringSign::Minus] {
            reps.push((
                format!("{sign:?} string ell={ell}"),
                build_string(q, sign, ell, 0).unwrap(),
                period,
            ));
        }
    }
    let failure = search(&reps, |(name, rep, k)| {
        let back = syzygy_pow(rep, *k);
        (!is_isomorphic(rep, &back).unwrap_or(false)).then(|| format!("{name}: Omega^{k} differs"))
    });
    Check::from_search("oracle-omega-periods", reps.len(), failure)
}

fn label_period_check(p: &Params, opts: &VerifyOptions) -> Check {
    let labels: Vec<ModLabel> = opts
        .universe()
        .with_kinds([
            UniverseKind::StringPlus,
            UniverseKind::StringMinus,
            UniverseKind::Band,
        ])
        .labels(p);
    let failure = search(&labels, |x| {
        let period = if matches!(x, ModLabel::Band { .. }) {
            2
        } else {
            p.orbit_len()
        };
        let back = p.syzygy_shift(x, period).ok()?;
        let early = (1..period).any(|k| p.syzygy_shift(x, k).ok() == Some(*x));
        (back != *x || early).then(|| format!("{x}: Omega-period is not {period}"))
    });
    Check::from_search("label-omega-periods", labels.len(), failure)
}

fn oracle_integrity_check(q: &BlockQuiver, bound: u32, lambdas: &[Lambda]) -> Check {
    let m = q.vertex_count() as i64;
    let mut indecomposables: Vec<(String, Rep)> = Vec::new();
    for phase in 0..m {
        indecomposables.push((format!("simple at {phase}"), build_simple(q, phase)));
        for ell in 1..=bound {
            for sign in [StringSign::Plus, StringSign::Minus] {
                indecomposables.push((
                    format!("{sign:?} string ell={ell} at {phase}"),
                    build_string(q, sign, ell, phase).unwrap(),
                ));
            }
            for &l in lambdas {
                indecomposables.push((
                    format!("band ell={ell} lambda={l} at {phase}"),
                    build_band(q, ell, &l, phase).unwrap(),
                ));
            }
        }
    }
    let mut failure = search(&indecomposables, |(name, rep)| {
        if !rep.check_relations() {
            return Some(format!("{name}: relations fail"));
        }
        (!is_indecomposable(rep).unwrap_or(false)).then(|| format!("{name}: decomposable"))
    });
    if failure.is_none() {
        failure = search(
            &indecomposables[..indecomposables.len().min(8)],
            |(name, rep)| {
                let sum = direct_sum(rep, rep).ok()?;
                (!sum.check_relations() || is_indecomposable(&sum).unwrap_or(true))
                    .then(|| format!("{name} doubled: reported indecomposable"))
            },
        );
    }
    if failure.is_none() {
        failure = ar_failure(q, bound, lambdas);
    }
    Check::from_search("oracle-integrity", indecomposables.len(), failure)
}

/// Almost split sequences are non-split: `Ext¹(X, τX) ≠ 0`. For strings
/// `τ` moves the phase by two against the zigzag; bands are `τ`-fixed.
fn ar_failure(q: &BlockQuiver, bound: u32, lambdas: &[Lambda]) -> Option<String> {
    let mut cases: Vec<(String, Rep, Rep)> = Vec::new();
    for ell in 1..=bound {
        cases.push((
            format!("plus string ell={ell}"),
            build_string(q, StringSign::Plus, ell, 0).unwrap(),
            build_string(q, StringSign::Plus, ell, -2).unwrap(),
        ));
        cases.push((
            format!("minus string ell={ell}"),
            build_string(q, StringSign::Minus, ell, 0).unwrap(),
            build_string(q, StringSign::Minus, ell, 2).unwrap(),
        ));
        for &l in lambdas {
            let c: Rep = build_band(q, ell, &l, 0).unwrap();
            cases.push((format!("band ell={ell} lambda={l}"), c.clone(), c));
        }
    }
    search(&cases, |(name, x, left)| {
        (ext1_dim(x, left).unwrap_or(0) == 0).then(|| format!("{name}: split AR sequence"))
    })
}

pub fn classify_suite(p: &Params, opts: &VerifyOptions) -> Vec<Check> {
    let mut out = Vec::new();
    let Some(one) = p.trivial() else {
        return vec![Check::from_search(
            "classify (trivial module is projective)",
            0,
            None,
        )];
    };
    let unit = GreenElement::from_label(p, one).core_only();

    let syzygies: Vec<ModLabel> = Bounds {
        max_syzygy: 2,
        ..Bounds::default()
    }
    .with_kinds([UniverseKind::Simple, UniverseKind::Syzygy])
    .labels(p);
    out.push(Check::from_search(
        "endotrivial",
        syzygies.len(),
        search(&syzygies, |x| {
            let by_product = tensor_basis(p, x, &p.dual(x)).core_only() == unit;
            (by_product != p.is_endotrivial(x)).then(|| x.to_string())
        }),
    ));

    let simples: Vec<ModLabel> = Bounds::default()
        .with_kinds([UniverseKind::Simple])
        .labels(p);
    out.push(Check::from_search(
        "dual-product-blocks",
        simples.len(),
        search(&simples, |x| dual_block_failure(p, x)),
    ));

    let algebraic: Vec<ModLabel> = opts
        .universe()
        .with_kinds([
            UniverseKind::Simple,
            UniverseKind::StringPlus,
            UniverseKind::StringMinus,
            UniverseKind::Band,
        ])
        .labels(p);
    out.push(Check::from_search(
        "algebraic-closure",
        algebraic.len(),
        search(&algebraic, |x| closure_failure(p, x)),
    ));

    let omegas: Vec<ModLabel> = simples
        .iter()
        .flat_map(|x| {
            [
                p.syzygy_shift(x, 1).unwrap(),
                p.syzygy_shift(x, -1).unwrap(),
            ]
        })
        .collect();
    out.push(Check::from_search(
        "non-algebraic-growth",
        omegas.len(),
        search(&omegas, |x| growth_failure(p, x)),
    ));
    out
}

pub fn dual_block_failure(p: &Params, x: &ModLabel) -> Option<String> {
    let n = p.dim_simple(x.vertex());
    let expected = n.min(p.d() - n) as u64;
    let core = tensor_basis(p, x, &p.dual(x));
    let summands = core.core_list();
    let distinct = summands.iter().enumerate().all(|(k, a)| {
        summands[k + 1..]
            .iter()
            .all(|b| !p.same_block(a.vertex(), b.vertex()))
    });
    (core.core_len() != expected || !distinct).then(|| {
        format!(
            "{x}: {} summands, pairwise distinct blocks: {distinct}",
            core.core_len()
        )
    })
}

pub const CLOSURE_DEPTH: usize = 20;

/// Number of canonical labels of the same shape as `x` (kind, `ℓ`, `λ`),
/// which bounds its tensor-power closure.
pub fn kind_count(p: &Params, x: &ModLabel) -> usize {
    match x {
        ModLabel::Band { .. } => {
            let folded: BTreeSet<Vertex> = p
                .non_projective_vertices()
                .map(|v| p.fold_mod_d(v))
                .collect();
            folded.len()
        }
        _ => p.non_projective_vertices().count(),
    }
}

/// First `t` with layer `t + 1` equal to an earlier layer, after which the
/// closure cannot grow.
pub fn stabilization_index(layers: &[BTreeSet<ModLabel>]) -> Option<usize> {
    (1..layers.len()).find(|&t| layers[..t].contains(&layers[t]))
}

fn closure_failure(p: &Params, x: &ModLabel) -> Option<String> {
    let layers = tensor_power_layers(p, x, CLOSURE_DEPTH + 1);
    let Some(t) = stabilization_index(&layers) else {
        return Some(format!("{x}: no repetition within {CLOSURE_DEPTH} powers"));
    };
    let closure: BTreeSet<ModLabel> = layers[..t].iter().flatten().copied().collect();
    (closure.len() > kind_count(p, x)).then(|| {
        format!(
            "{x}: closure of size {} exceeds {}",
            closure.len(),
            kind_count(p, x)
        )
    })
}

pub fn max_degree(layer: &BTreeSet<ModLabel>) -> Option<i64> {
    layer
        .iter()
        .filter_map(|y| match y {
            ModLabel::Syzygy { m, .. } => Some(m.abs()),
            _ => None,
        })
        .max()
}

fn growth_failure(p: &Params, x: &ModLabel) -> Option<String> {
    let layers = tensor_power_layers(p, x, CLOSURE_DEPTH);
    let mut best = i64::MIN;
    for (t, layer) in layers.iter().enumerate() {
        let m = max_degree(layer).unwrap_or(i64::MIN);
        if m <= best {
            return Some(format!("{x}: maximal degree stalls at power {}", t + 1));
        }
        best = m;
    }
    None
}
