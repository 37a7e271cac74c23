//! Acceptance gate: criteria 1-12, exact, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the report is always printed.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::Instant;

use greenring::blockrep::{
    build_band, build_simple, build_string, direct_sum, ext1_dim, ext1_string_formula, hom_dim,
    is_indecomposable, is_isomorphic, syzygy_pow, BlockQuiver, StringSign,
};
use greenring::fusion::{stable_equiv_image, tensor, tensor_basis};
use greenring::{GreenElement, Lambda, ModLabel, Params, Rep, Vertex};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const DESK: [(i64, i64); 7] = [(2, 2), (3, 3), (4, 4), (6, 2), (6, 3), (8, 4), (9, 3)];
const MAX_ELL: u32 = 3;
const MAX_M: i64 = 3;
const TRIPLES: usize = 1000;
const CLOSURE_DEPTH: usize = 20;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn params(n: i64, d: i64) -> Params {
    Params::new(n, d).expect("desk parameters are valid")
}

fn lambdas() -> Vec<Lambda> {
    vec![
        Lambda::from_integer(1),
        Lambda::from_integer(2),
        Lambda::new(1, 2),
    ]
}

// Independent residue arithmetic.

fn bracket(d: i64, r: i64) -> i64 {
    (r - 1).rem_euclid(d) + 1
}

fn projective_at(d: i64, u: i64, i: i64) -> bool {
    (2 * i + u - 1).rem_euclid(d) == 0
}

fn simple_dim(d: i64, u: i64, i: i64) -> i64 {
    d - bracket(d, 2 * i + u - 1)
}

fn sigma(n: i64, d: i64, u: i64, j: i64) -> i64 {
    (d + j - bracket(d, 2 * j + u - 1)).rem_euclid(n)
}

fn orbit(n: i64, d: i64, u: i64, i: i64) -> Vec<i64> {
    let mut out = vec![i.rem_euclid(n)];
    loop {
        let next = sigma(n, d, u, *out.last().unwrap());
        if next == out[0] {
            return out;
        }
        out.push(next);
    }
}

fn same_block(n: i64, d: i64, a: Vertex, b: Vertex) -> bool {
    a.u() == b.u() && orbit(n, d, a.u(), a.i()).contains(&b.i().rem_euclid(n))
}

/// Dimension of a label from first principles.
fn label_dim(n: i64, d: i64, x: &ModLabel) -> i64 {
    match *x {
        ModLabel::Syzygy { v, m } => {
            let top = simple_dim(d, v.u(), v.i());
            m.abs() * d + if m % 2 == 0 { top } else { d - top }
        }
        ModLabel::StringPlus { ell, .. } | ModLabel::StringMinus { ell, .. } => ell as i64 * d,
        ModLabel::Band { ell, .. } => ell as i64 * n,
        ModLabel::Projective { v } => {
            if projective_at(d, v.u(), v.i()) {
                d
            } else {
                2 * d
            }
        }
    }
}

/// The bounded canonical universe, built through the validating constructors.
fn universe(p: &Params, max_ell: u32, max_m: i64, lams: &[Lambda]) -> Vec<ModLabel> {
    let (n, d) = (p.n(), p.d());
    let mut out = BTreeSet::new();
    for u in 0..n {
        for i in 0..n {
            out.insert(p.projective(u, i));
            if projective_at(d, u, i) {
                continue;
            }
            for m in -max_m..=max_m {
                out.insert(p.syzygy(m, u, i).unwrap());
            }
            for ell in 1..=max_ell as i64 {
                out.insert(p.string_plus(ell, u, i).unwrap());
                out.insert(p.string_minus(ell, u, i).unwrap());
                for &l in lams {
                    out.insert(p.band(ell, l, u, i).unwrap());
                }
            }
        }
    }
    out.into_iter().collect()
}

fn desk_universe(p: &Params) -> Vec<ModLabel> {
    universe(p, MAX_ELL, MAX_M, &lambdas())
}

fn pairs(xs: &[ModLabel]) -> Vec<(ModLabel, ModLabel)> {
    xs.iter()
        .flat_map(|a| xs.iter().map(move |b| (*a, *b)))
        .collect()
}

fn first_failure<T: Sync>(
    cases: &[T],
    f: impl Fn(&T) -> Option<String> + Sync + Send,
) -> Option<String> {
    cases.par_iter().find_map_first(f)
}

fn over_desk(f: impl Fn(&Params) -> Result<usize, String>) -> Outcome {
    let mut cases = 0;
    for (n, d) in DESK {
        cases += f(&params(n, d)).map_err(|e| format!("(n,d)=({n},{d}): {e}"))?;
    }
    Ok(format!("{cases} cases"))
}

fn core(e: &GreenElement) -> BTreeMap<ModLabel, u64> {
    e.core.clone()
}

fn c1_ring_axioms() -> Outcome {
    over_desk(|p| {
        let labels = desk_universe(p);
        let all = pairs(&labels);
        if let Some(bad) = first_failure(&all, |(a, b)| {
            (tensor_basis(p, a, b) != tensor_basis(p, b, a))
                .then(|| format!("{a} * {b} not commutative"))
        }) {
            return Err(bad);
        }
        let one = p.simple(0, 0).map_err(|e| e.to_string())?;
        if let Some(bad) = first_failure(&labels, |x| {
            let e = tensor_basis(p, &one, x);
            let expected = GreenElement::from_label(p, *x);
            (e != expected).then(|| format!("L(0,0) * {x} = {e}"))
        }) {
            return Err(bad);
        }
        let cores: Vec<ModLabel> = labels
            .iter()
            .copied()
            .filter(|x| !x.is_projective())
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ ((p.n() as u64) << 8) ^ p.d() as u64);
        let triples: Vec<[ModLabel; 3]> = (0..TRIPLES)
            .map(|_| {
                let mut pick = || *cores.choose(&mut rng).unwrap();
                [pick(), pick(), pick()]
            })
            .collect();
        if let Some(bad) = first_failure(&triples, |[a, b, c]| {
            let g = |x: &ModLabel| GreenElement::from_label(p, *x);
            let left = tensor(p, &tensor(p, &g(a), &g(b)), &g(c));
            let right = tensor(p, &g(a), &tensor(p, &g(b), &g(c)));
            (core(&left) != core(&right)).then(|| format!("({a} * {b}) * {c} not associative"))
        }) {
            return Err(bad);
        }
        Ok(all.len() + labels.len() + triples.len())
    })
}

fn c2_dimensions() -> Outcome {
    over_desk(|p| {
        let (n, d) = (p.n(), p.d());
        let all = pairs(&desk_universe(p));
        first_failure(&all, |(a, b)| {
            let e = tensor_basis(p, a, b);
            let core_dim: i128 = e
                .core
                .iter()
                .map(|(x, &k)| k as i128 * label_dim(n, d, x) as i128)
                .sum();
            let gap = label_dim(n, d, a) as i128 * label_dim(n, d, b) as i128 - core_dim;
            (gap < 0 || gap % d as i128 != 0 || gap != e.proj_dim)
                .then(|| format!("{a} * {b}: projective part {gap}, reported {}", e.proj_dim))
        })
        .map_or(Ok(all.len()), Err)
    })
}

fn c3_duality() -> Outcome {
    over_desk(|p| {
        let (n, d) = (p.n(), p.d());
        let labels = desk_universe(p);
        if let Some(bad) = first_failure(&labels, |x| {
            let y = p.dual(x);
            (p.dual(&y) != *x
                || label_dim(n, d, &y) != label_dim(n, d, x)
                || p.length_of(&y) != p.length_of(x))
            .then(|| format!("dual of {x} is {y}"))
        }) {
            return Err(bad);
        }
        let all = pairs(&labels);
        first_failure(&all, |(a, b)| {
            let lhs: BTreeMap<ModLabel, u64> =
                tensor_basis(p, a, b)
                    .core
                    .iter()
                    .fold(BTreeMap::new(), |mut acc, (x, &k)| {
                        *acc.entry(p.dual(x)).or_default() += k;
                        acc
                    });
            let rhs = core(&tensor_basis(p, &p.dual(a), &p.dual(b)));
            (lhs != rhs).then(|| format!("({a} * {b})* differs from {} * {}", p.dual(a), p.dual(b)))
        })
        .map_or(Ok(labels.len() + all.len()), Err)
    })
}

fn arm(x: &ModLabel) -> u8 {
    match x {
        ModLabel::Syzygy { .. } => 0,
        ModLabel::StringPlus { .. } => 1,
        ModLabel::StringMinus { .. } => 2,
        ModLabel::Band { .. } => 3,
        ModLabel::Projective { .. } => 4,
    }
}

fn c4_omega() -> Outcome {
    over_desk(|p| {
        let labels: Vec<ModLabel> = desk_universe(p)
            .into_iter()
            .filter(|x| !x.is_projective())
            .collect();
        let all = pairs(&labels);
        let mut arms = BTreeSet::new();
        let mut band_parities = BTreeSet::new();
        for (a, b) in &all {
            arms.insert((arm(a), arm(b)));
            if let (ModLabel::Band { v, .. }, ModLabel::Band { v: w, .. }) = (a, b) {
                band_parities
                    .insert((v.i() + w.i()).rem_euclid(2) == (v.u() + w.u()).rem_euclid(2));
            }
        }
        if arms.len() != 16 {
            return Err(format!("only {} product arms exercised", arms.len()));
        }
        if p.d() < p.n() && band_parities.len() < 2 {
            return Err("band pairs of one parity only".into());
        }
        for k in [-1i64, 1, 2] {
            if let Some(bad) = first_failure(&all, |(a, b)| {
                let sa = p.syzygy_shift(a, k).ok()?;
                let lhs = core(&tensor_basis(p, &sa, b));
                let rhs =
                    tensor_basis(p, a, b)
                        .core
                        .iter()
                        .fold(BTreeMap::new(), |mut acc, (x, &c)| {
                            *acc.entry(p.syzygy_shift(x, k).unwrap()).or_insert(0u64) += c;
                            acc
                        });
                (lhs != rhs).then(|| format!("O^{k}: {a} * {b}"))
            }) {
                return Err(bad);
            }
        }
        Ok(3 * all.len())
    })
}

fn quivers() -> Vec<BlockQuiver> {
    [2, 4, 6]
        .into_iter()
        .map(|m| BlockQuiver::new(m).unwrap())
        .collect()
}

fn c5_ext_strings() -> Outcome {
    let mut cases = 0;
    for q in quivers() {
        let ratio = (q.vertex_count() / 2) as u32;
        for ell in 1..=4u32 {
            for t in 1..=ell {
                let formula = ext1_string_formula(t, ell, ratio).map_err(|e| e.to_string())?;
                if t == 1 && formula != 1 {
                    return Err(format!("formula gives {formula} at t=1, ell={ell}"));
                }
                for (sign, phase) in [(StringSign::Plus, 2), (StringSign::Minus, -2)] {
                    let a: Rep = build_string(&q, sign, ell, phase).unwrap();
                    let b: Rep = build_string(&q, sign, t, 0).unwrap();
                    let oracle = ext1_dim(&a, &b).unwrap();
                    if oracle != formula {
                        return Err(format!(
                            "2n/d={} {sign:?} t={t} ell={ell}: oracle {oracle}, formula {formula}",
                            q.vertex_count()
                        ));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn c6_band_hom_ext() -> Outcome {
    let mut cases = 0;
    let lams = [Lambda::from_integer(1), Lambda::from_integer(2)];
    for q in quivers() {
        let ratio = q.vertex_count() / 2;
        for t in 1..=3u32 {
            for ell in 1..=3u32 {
                for l in &lams {
                    for mu in &lams {
                        let a: Rep = build_band(&q, t, l, 0).unwrap();
                        let b: Rep = build_band(&q, ell, mu, 0).unwrap();
                        let expected = if l == mu { t.min(ell) as usize } else { 0 };
                        let (hom, ext) = (hom_dim(&a, &b).unwrap(), ext1_dim(&a, &b).unwrap());
                        let shifted: Rep = build_band(&q, t, l, 1).unwrap();
                        let sh = hom_dim(&shifted, &b).unwrap();
                        if hom != expected
                            || ext != expected
                            || sh != t as usize * ell as usize * ratio
                        {
                            return Err(format!(
                                "2n/d={} t={t} ell={ell} lambda={l} mu={mu}: hom {hom}, ext {ext}, shifted {sh}",
                                q.vertex_count()
                            ));
                        }
                        cases += 1;
                    }
                }
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn c7_projective_arms() -> Outcome {
    over_desk(|p| {
        let (n, d) = (p.n(), p.d());
        let zero_arm = |a: &ModLabel, b: &ModLabel| match (a, b) {
            (ModLabel::StringPlus { .. }, ModLabel::StringMinus { .. })
            | (ModLabel::StringMinus { .. }, ModLabel::StringPlus { .. }) => true,
            (ModLabel::Band { .. }, ModLabel::StringPlus { .. } | ModLabel::StringMinus { .. })
            | (ModLabel::StringPlus { .. } | ModLabel::StringMinus { .. }, ModLabel::Band { .. }) => {
                true
            }
            (ModLabel::Band { lambda, .. }, ModLabel::Band { lambda: mu, .. }) => lambda != mu,
            _ => false,
        };
        let cases: Vec<(ModLabel, ModLabel)> = pairs(&desk_universe(p))
            .into_iter()
            .filter(|(a, b)| zero_arm(a, b))
            .collect();
        first_failure(&cases, |(a, b)| {
            let e = tensor_basis(p, a, b);
            let full = label_dim(n, d, a) as i128 * label_dim(n, d, b) as i128;
            (!e.core.is_empty() || e.proj_dim != full).then(|| format!("{a} * {b} = {e}"))
        })
        .map_or(Ok(cases.len()), Err)
    })
}

fn power_layers(p: &Params, x: &ModLabel, depth: usize) -> Vec<BTreeSet<ModLabel>> {
    let g = GreenElement::from_label(p, *x);
    let mut layers = vec![BTreeSet::from([*x])];
    while layers.len() < depth {
        let mut next = BTreeSet::new();
        for y in layers.last().unwrap() {
            next.extend(
                tensor(p, &GreenElement::from_label(p, *y), &g)
                    .core
                    .keys()
                    .copied(),
            );
        }
        layers.push(next);
    }
    layers
}

fn c8_classification() -> Outcome {
    let mut cases = 0;
    // (a) endotrivial modules.
    for d in 2..=5i64 {
        for n in [d, 2 * d] {
            let p = params(n, d);
            let one = p.simple(0, 0).unwrap();
            for x in universe(&p, 0, 2, &[])
                .into_iter()
                .filter(|x| !x.is_projective())
            {
                let prod = tensor_basis(&p, &x, &p.dual(&x));
                let by_product = prod.core.len() == 1 && prod.core.get(&one) == Some(&1);
                let dim = simple_dim(d, x.vertex().u(), x.vertex().i());
                if by_product != p.is_endotrivial(&x) || by_product != (dim == 1 || dim == d - 1) {
                    return Err(format!("(n,d)=({n},{d}) endotrivial mismatch at {x}"));
                }
                cases += 1;
            }
        }
    }
    // (b) and (c) on the desk.
    over_desk(|p| {
        let (n, d) = (p.n(), p.d());
        let labels = desk_universe(p);
        for x in labels
            .iter()
            .filter(|x| matches!(x, ModLabel::Syzygy { m: 0, .. }))
        {
            let e = tensor_basis(p, x, &p.dual(x));
            let nn = simple_dim(d, x.vertex().u(), x.vertex().i());
            let summands: Vec<ModLabel> = e
                .core
                .iter()
                .flat_map(|(y, &k)| std::iter::repeat_n(*y, k as usize))
                .collect();
            let distinct = summands.iter().enumerate().all(|(k, a)| {
                summands[k + 1..]
                    .iter()
                    .all(|b| !same_block(n, d, a.vertex(), b.vertex()))
            });
            if summands.len() as i64 != nn.min(d - nn) || !distinct {
                return Err(format!("{x} * {x}* has {} summands", summands.len()));
            }
        }
        let vertex_count = (0..n)
            .flat_map(|u| (0..n).map(move |i| (u, i)))
            .filter(|&(u, i)| !projective_at(d, u, i))
            .count();
        let folded_count = (0..n)
            .flat_map(|u| (0..d).map(move |i| (u, i)))
            .filter(|&(u, i)| !projective_at(d, u, i))
            .count();
        let algebraic: Vec<ModLabel> = labels
            .iter()
            .copied()
            .filter(|x| {
                matches!(
                    x,
                    ModLabel::Syzygy { m: 0, .. }
                        | ModLabel::StringPlus { .. }
                        | ModLabel::StringMinus { .. }
                        | ModLabel::Band { .. }
                )
            })
            .collect();
        if let Some(bad) = first_failure(&algebraic, |x| {
            let layers = power_layers(p, x, CLOSURE_DEPTH + 1);
            let Some(t) = (1..layers.len()).find(|&t| layers[..t].contains(&layers[t])) else {
                return Some(format!("{x}: powers do not repeat by {CLOSURE_DEPTH}"));
            };
            let size = layers[..t].iter().flatten().collect::<BTreeSet<_>>().len();
            let bound = if matches!(x, ModLabel::Band { .. }) {
                folded_count
            } else {
                vertex_count
            };
            (size > bound).then(|| format!("{x}: closure of size {size} over {bound}"))
        }) {
            return Err(bad);
        }
        let simples: Vec<ModLabel> = labels
            .iter()
            .copied()
            .filter(|x| matches!(x, ModLabel::Syzygy { m: 0, .. }))
            .collect();
        let omegas: Vec<ModLabel> = simples
            .iter()
            .flat_map(|x| {
                [
                    p.syzygy_shift(x, 1).unwrap(),
                    p.syzygy_shift(x, -1).unwrap(),
                ]
            })
            .collect();
        if let Some(bad) = first_failure(&omegas, |x| {
            let degrees: Vec<i64> = power_layers(p, x, CLOSURE_DEPTH)
                .iter()
                .map(|layer| {
                    layer
                        .iter()
                        .filter_map(|y| match y {
                            ModLabel::Syzygy { m, .. } => Some(m.abs()),
                            _ => None,
                        })
                        .max()
                        .unwrap_or(-1)
                })
                .collect();
            (!degrees.windows(2).all(|w| w[0] < w[1])).then(|| format!("{x}: degrees {degrees:?}"))
        }) {
            return Err(bad);
        }
        Ok(labels.len() + algebraic.len() + omegas.len())
    })
    .map(|s| format!("{s} plus {cases} endotrivial cases"))
}

/// Desk parameters with `2n/d ∈ {2, 4, 6}`, grouped by block size.
fn oracle_params() -> Vec<Params> {
    DESK.iter()
        .map(|&(n, d)| params(n, d))
        .filter(|p| [2, 4, 6].contains(&(2 * p.n() / p.d())))
        .collect()
}

fn c9_syzygies() -> Outcome {
    let mut cases = 0;
    for p in oracle_params() {
        let (n, d) = (p.n(), p.d());
        let q = BlockQuiver::new((2 * n / d) as usize).unwrap();
        let orbit0 = orbit(n, d, 0, 0);
        for (phase, &i) in orbit0.iter().enumerate() {
            let simple: Rep = build_simple(&q, phase as i64);
            for m in -6..=6i64 {
                let rep = syzygy_pow(&simple, m);
                let oracle_dim: i64 = rep
                    .dims()
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| c as i64 * simple_dim(d, 0, orbit0[k]))
                    .sum();
                let label = p.syzygy(m, 0, i).unwrap();
                if oracle_dim != p.dim_of(&label) || rep.total_dim() as i64 != p.length_of(&label) {
                    return Err(format!(
                        "(n,d)=({n},{d}) {label}: oracle dim {oracle_dim}, length {}",
                        rep.total_dim()
                    ));
                }
                cases += 1;
            }
        }
        for ell in 1..=MAX_ELL {
            for sign in [StringSign::Plus, StringSign::Minus] {
                let s: Rep = build_string(&q, sign, ell, 0).unwrap();
                if !is_isomorphic(&s, &syzygy_pow(&s, q.vertex_count() as i64)).unwrap() {
                    return Err(format!(
                        "oracle {sign:?} string ell={ell} is not Omega-periodic"
                    ));
                }
            }
            for l in lambdas() {
                let b: Rep = build_band(&q, ell, &l, 0).unwrap();
                if !is_isomorphic(&b, &syzygy_pow(&b, 2)).unwrap() {
                    return Err(format!(
                        "oracle band ell={ell} lambda={l} is not of period 2"
                    ));
                }
            }
        }
        for x in desk_universe(&p)
            .iter()
            .filter(|x| !x.is_projective() && !matches!(x, ModLabel::Syzygy { .. }))
        {
            let period = if matches!(x, ModLabel::Band { .. }) {
                2
            } else {
                2 * n / d
            };
            let orbit_back = (1..=period)
                .map(|k| p.syzygy_shift(x, k).unwrap())
                .position(|y| y == *x);
            if orbit_back != Some(period as usize - 1) {
                return Err(format!(
                    "(n,d)=({n},{d}) {x}: label Omega-period is not {period}"
                ));
            }
            cases += 1;
        }
    }
    Ok(format!("{cases} cases"))
}

fn c10_census() -> Outcome {
    over_desk(|p| {
        let (n, d) = (p.n(), p.d());
        let mut seen = BTreeSet::new();
        let (mut simple, mut nonsimple) = (0i64, 0i64);
        for u in 0..n {
            for i in 0..n {
                if seen.contains(&(u, i)) {
                    continue;
                }
                if projective_at(d, u, i) {
                    simple += 1;
                    seen.insert((u, i));
                    continue;
                }
                let o = orbit(n, d, u, i);
                if o.len() as i64 != 2 * n / d {
                    return Err(format!("block of ({u},{i}) has {} simples", o.len()));
                }
                seen.extend(o.into_iter().map(|j| (u, j)));
                nonsimple += 1;
            }
        }
        let census = p.block_census();
        if simple != n * n / d
            || nonsimple != n * (d - 1) / 2
            || simple + nonsimple * 2 * n / d != n * n
            || census.simple_blocks != simple
            || census.nonsimple_blocks != nonsimple
        {
            return Err(format!(
                "enumerated {simple} simple and {nonsimple} non-simple blocks, census {census:?}"
            ));
        }
        Ok((n * n) as usize)
    })
}

fn c11_stable_equivalence() -> Outcome {
    over_desk(|p| {
        let (n, d) = (p.n(), p.d());
        let base = p.vertex(0, 0);
        let labels = desk_universe(p);
        let in_block = |v: Vertex| -> BTreeSet<ModLabel> {
            labels
                .iter()
                .copied()
                .filter(|x| !x.is_projective() && same_block(n, d, v, x.vertex()))
                .collect()
        };
        let source = in_block(base);
        let targets: Vec<Vertex> = (0..n)
            .flat_map(|u| (0..n).map(move |i| (u, i)))
            .filter(|&(u, i)| !projective_at(d, u, i))
            .map(|(u, i)| p.vertex(u, i))
            .collect();
        first_failure(&targets, |&t| {
            let simple = p.simple(t.u(), t.i()).unwrap();
            let mut image = BTreeSet::new();
            for x in &source {
                let y = match stable_equiv_image(p, x, t) {
                    Ok(y) => y,
                    Err(e) => return Some(format!("{x} under {t}: {e}")),
                };
                if tensor_basis(p, x, &simple).core != GreenElement::from_label(p, y).core {
                    return Some(format!("{x} * {simple} differs from {y}"));
                }
                image.insert(y);
            }
            (image.len() != source.len() || image != in_block(t))
                .then(|| format!("image under {t} is not the block universe"))
        })
        .map_or(Ok(targets.len() * source.len()), Err)
    })
}

fn c12_oracle_integrity() -> Outcome {
    let mut cases = 0;
    for q in quivers() {
        let m = q.vertex_count() as i64;
        let mut reps: Vec<(String, Rep)> = Vec::new();
        for phase in 0..m {
            reps.push((format!("simple {phase}"), build_simple(&q, phase)));
            for ell in 1..=MAX_ELL {
                for sign in [StringSign::Plus, StringSign::Minus] {
                    reps.push((
                        format!("{sign:?} ell={ell} at {phase}"),
                        build_string(&q, sign, ell, phase).unwrap(),
                    ));
                }
                for l in lambdas() {
                    reps.push((
                        format!("band ell={ell} lambda={l} at {phase}"),
                        build_band(&q, ell, &l, phase).unwrap(),
                    ));
                }
            }
        }
        if let Some(bad) = first_failure(&reps, |(name, r)| {
            (!r.check_relations() || !is_indecomposable(r).unwrap())
                .then(|| format!("2n/d={m} {name}"))
        }) {
            return Err(bad);
        }
        cases += reps.len();
        for (name, r) in reps.iter().step_by(5) {
            let sum = direct_sum(r, r).unwrap();
            if !sum.check_relations() || is_indecomposable(&sum).unwrap() {
                return Err(format!("2n/d={m} {name} doubled reported indecomposable"));
            }
            cases += 1;
        }
        for ell in 1..=MAX_ELL {
            let pairs: Vec<(Rep, Rep)> = vec![
                (
                    build_string(&q, StringSign::Plus, ell, 0).unwrap(),
                    build_string(&q, StringSign::Plus, ell, -2).unwrap(),
                ),
                (
                    build_string(&q, StringSign::Minus, ell, 0).unwrap(),
                    build_string(&q, StringSign::Minus, ell, 2).unwrap(),
                ),
                (
                    build_band(&q, ell, &Lambda::from_integer(2), 0).unwrap(),
                    build_band(&q, ell, &Lambda::from_integer(2), 0).unwrap(),
                ),
            ];
            for (x, left) in &pairs {
                if ext1_dim(x, left).unwrap() == 0 {
                    return Err(format!("2n/d={m} ell={ell}: split almost split sequence"));
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} cases"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 12] = [
        ("1 ring axioms", c1_ring_axioms),
        ("2 dimension bookkeeping", c2_dimensions),
        ("3 duality", c3_duality),
        ("4 omega compatibility", c4_omega),
        ("5 ext1 string formula", c5_ext_strings),
        ("6 band hom/ext", c6_band_hom_ext),
        ("7 projective arms", c7_projective_arms),
        ("8 classifications", c8_classification),
        ("9 syzygy closed forms", c9_syzygies),
        ("10 block census", c10_census),
        ("11 stable equivalence", c11_stable_equivalence),
        ("12 oracle integrity", c12_oracle_integrity),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {name} ({detail}, {secs:.1}s)"),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {name}: {detail} ({secs:.1}s)");
            }
        }
    }
    println!("{} passed, {failed} failed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
