//! Verification suites at desk scale. Each suite returns one row per case;
//! the command-line `verify` command and the acceptance tests share them.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algcore::WalledBrauer;
use crate::bmod::{layer_dimension_by_cosets, layer_dimension_by_diagrams, layer_formula, BModules, LambdaLabel};
use crate::coeffs::{Field, PrimeField, Rationals};
use crate::combinat::{binomial, bipartitions_of, factorial};
use crate::error::{Error, Result};
use crate::modcore::{hom_space, is_isomorphic};
use crate::spechtmod::specht_prod;
use crate::symgrp::{brute_force_stabilizer, enumerate_group, stabilizer_of_partial_diagram, GroupKind, Permutation};
use crate::walled::{enumerate_diagrams, ArcFilter};

pub const SUITES: [&str; 9] = [
    "dims",
    "idempotents",
    "stabilizers",
    "layers",
    "semisimple",
    "main_theorem",
    "filtration",
    "standard_system",
    "res_cell",
];

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct CaseResult {
    pub suite: String,
    pub case: String,
    pub passed: bool,
    pub detail: String,
}

fn row(suite: &str, case: String, passed: bool, detail: impl Into<String>) -> CaseResult {
    CaseResult { suite: suite.into(), case, passed, detail: detail.into() }
}

/// Per-case progress sink.
pub type Progress<'a> = &'a dyn Fn(&str);

pub fn run_suite(name: &str, progress: Progress) -> Result<Vec<CaseResult>> {
    match name {
        "dims" => dims(progress),
        "idempotents" => idempotents(progress),
        "stabilizers" => stabilizers(progress),
        "layers" => layers(progress),
        "semisimple" => semisimple(progress),
        "main_theorem" => main_theorem(progress),
        "filtration" => filtration(progress),
        "standard_system" => standard_system(progress),
        "res_cell" => res_cell(progress).map(|(rows, _)| rows),
        _ => Err(Error::UnknownSuite(name.into())),
    }
}

pub fn dims(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for r in 0..=4 {
        for t in 0..=4 {
            progress(&format!("dims ({r},{t})"));
            let all = enumerate_diagrams(r, t, ArcFilter::All)?;
            let sum: u128 = (0..=r.min(t))
                .map(|l| {
                    let v = binomial(r, l) * binomial(t, l) * factorial(l);
                    v * v * factorial(r - l) * factorial(t - l)
                })
                .sum();
            let want = factorial(r + t);
            let ok = all.len() as u128 == want && sum == want;
            out.push(row("dims", format!("({r},{t})"), ok, format!("enumerated {} layer sum {sum} (r+t)! {want}", all.len())));
        }
    }
    Ok(out)
}

fn idempotent_case<F: Field>(f: &F, r: usize, t: usize, delta: i64) -> Result<(bool, String)> {
    let b = WalledBrauer::new(f, r, t, f.from_i64(delta))?;
    let alg = b.algebra();
    let mut es = Vec::new();
    let mut skipped = Vec::new();
    for l in 0..=b.s() {
        match b.idempotent(l) {
            Ok(e) => es.push((l, e)),
            Err(Error::NotCellularlyStratified(_)) => skipped.push(l),
            Err(e) => return Err(e),
        }
    }
    let mut ok = true;
    for (l, e) in &es {
        ok &= &alg.multiply(e, e)? == e;
        for (m, g) in &es {
            if l > m {
                ok &= &alg.multiply(e, g)? == e && &alg.multiply(g, e)? == e;
            }
        }
    }
    let note = if skipped.is_empty() { String::new() } else { format!("no idempotent at layers {skipped:?}") };
    Ok((ok, note))
}

pub fn idempotents(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    let f5 = PrimeField::new(5);
    for r in 1..=3 {
        for t in 1..=3 {
            for delta in [0, 2, 5] {
                if delta == 0 && r == 1 && t == 1 {
                    continue;
                }
                progress(&format!("idempotents ({r},{t}) δ={delta}"));
                let (a, na) = idempotent_case(&Rationals, r, t, delta)?;
                out.push(row("idempotents", format!("Q ({r},{t}) δ={delta}"), a, na));
                let (b, nb) = idempotent_case(&f5, r, t, delta)?;
                out.push(row("idempotents", format!("F5 ({r},{t}) δ={delta}"), b, nb));
            }
        }
    }
    Ok(out)
}

pub fn stabilizers(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for l in 0..=4 {
        progress(&format!("stabilizers l={l}"));
        let mut ok = true;
        let vs = enumerate_group(GroupKind::Sym(l))?;
        for v in &vs {
            let edges: Vec<(usize, usize)> = (0..l).map(|i| (i + 1, l + v.apply(i) + 1)).collect();
            let st = stabilizer_of_partial_diagram(l, &edges)?;
            let mut want = st.elements.clone();
            let mut got = brute_force_stabilizer(v);
            want.sort_by_key(|p| p.to_string());
            got.sort_by_key(|p| p.to_string());
            ok &= want == got && got.len() as u128 == factorial(l);
            ok &= st.elements.iter().all(|p| p.right == st.tau(&p.left));
        }
        out.push(row("stabilizers", format!("l={l}"), ok, format!("{} matchings", vs.len())));
    }
    let edges = [(1, 7), (2, 6), (3, 10), (4, 9), (5, 8)];
    let st = stabilizer_of_partial_diagram(5, &edges)?;
    let tau = st.tau(&Permutation::parse("(1 3 4)", 5)?);
    let ok = tau == Permutation::parse("(2 5 4)", 5)?;
    out.push(row("stabilizers", "v=[2,1,5,4,3] σ=(1 3 4)".into(), ok, format!("τ={}", tau.cycles())));
    Ok(out)
}

fn layer_lemma_cases<F: Field>(f: &F, delta: i64, tag: &str, out: &mut Vec<CaseResult>, progress: Progress) -> Result<()> {
    for r in 1..=3 {
        for t in 1..=3 {
            let b = BModules::new(WalledBrauer::new(f, r, t, f.from_i64(delta))?, 1);
            for m in 1..=b.algebra().s() {
                if b.algebra().idempotent_parts(m).is_err() {
                    continue;
                }
                for l in 0..m {
                    progress(&format!("layer lemmas {tag} ({r},{t}) l={l} m={m}"));
                    let rep = b.verify_layer_lemmas(l, m)?;
                    out.push(row("layers", format!("{tag} ({r},{t}) l={l} m={m} witnesses"), rep.passed(), format!("{rep:?}")));
                }
            }
        }
    }
    Ok(())
}

/// Layer dimensions counted two ways (all `r,t ≤ 4`) and the split,
/// tensor and coset isomorphism witnesses (`r,t ≤ 3`).
pub fn layers(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for r in 1..=4 {
        for t in 1..=4 {
            for m in 1..=r.min(t) {
                for l in 0..m {
                    progress(&format!("layer dims ({r},{t}) l={l} m={m}"));
                    let d = layer_dimension_by_diagrams(r, t, l, m)?;
                    let c = layer_dimension_by_cosets(r, t, l, m)?;
                    let w = layer_formula(r, t, l, m);
                    out.push(row(
                        "layers",
                        format!("({r},{t}) l={l} m={m} dims"),
                        d as u128 == w && c as u128 == w,
                        format!("diagrams {d} cosets {c} formula {w}"),
                    ));
                }
            }
        }
    }
    layer_lemma_cases(&Rationals, 2, "Q δ=2", &mut out, progress)?;
    layer_lemma_cases(&PrimeField::new(5), 0, "F5 δ=0", &mut out, progress)?;
    Ok(out)
}

/// Char 0, `δ = 5`, `r,t ≤ 2`.
pub fn semisimple(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for r in 1..=2 {
        for t in 1..=2 {
            let b = BModules::new(WalledBrauer::new(&Rationals, r, t, Rationals.from_i64(5))?, 1);
            let mut total = 0;
            for x in b.labels() {
                progress(&format!("semisimple ({r},{t}) {x}"));
                let cell = b.cell_module(&x)?;
                total += cell.dim() * cell.dim();
                let y = b.young_decomposition(&x, 1)?;
                let cells = y
                    .summands
                    .iter()
                    .map(|s| Ok(is_isomorphic(&s.summand, &b.cell_module(&s.label)?, 1)?.is_some()))
                    .collect::<Result<Vec<bool>>>()?;
                let young_is_cell = is_isomorphic(&b.young_module(&x)?, &cell, 1)?.is_some();
                let ok = y.is_valid() && cells.iter().all(|&c| c) && young_is_cell;
                out.push(row("semisimple", format!("({r},{t}) {x}"), ok, y.violations.join("; ")));
            }
            let dim = b.algebra().dim();
            out.push(row("semisimple", format!("({r},{t}) Σ dim²"), total == dim, format!("{total} vs dim B {dim}")));
        }
    }
    Ok(out)
}

fn grid() -> Vec<(u32, i64, usize, usize)> {
    let mut g = Vec::new();
    for p in [5, 7] {
        for d in [1, 2] {
            for r in 1..=2 {
                for t in 1..=2 {
                    g.push((p, d, r, t));
                }
            }
        }
    }
    g.push((5, 1, 3, 2));
    g.push((5, 2, 3, 2));
    g
}

pub const SEEDS: [u64; 3] = [1, 2, 3];

/// Young decompositions over `𝔽_5`, `𝔽_7`, across three seeds.
pub fn main_theorem(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for (p, d, r, t) in grid() {
        let f = PrimeField::new(p);
        let b = BModules::new(WalledBrauer::new(&f, r, t, f.from_i64(d))?, 1);
        for x in b.labels() {
            progress(&format!("main theorem F{p} δ={d} ({r},{t}) {x}"));
            let mut sets: Vec<BTreeMap<LambdaLabel, usize>> = Vec::new();
            let mut violations = Vec::new();
            for seed in SEEDS {
                let y = b.young_decomposition(&x, seed)?;
                violations.extend(y.violations.iter().cloned());
                sets.push(y.label_multiset());
            }
            let stable = sets.windows(2).all(|w| w[0] == w[1]);
            if !stable {
                violations.push("label multisets depend on the seed".into());
            }
            out.push(row("main_theorem", format!("F{p} δ={d} ({r},{t}) {x}"), violations.is_empty(), violations.join("; ")));
        }
    }
    Ok(out)
}

/// Cell filtrations of every permutation module on the same grid, and the
/// refusal in characteristic 3.
pub fn filtration(progress: Progress) -> Result<Vec<CaseResult>> {
    let mut out = Vec::new();
    for (p, d, r, t) in grid() {
        let f = PrimeField::new(p);
        let b = BModules::new(WalledBrauer::new(&f, r, t, f.from_i64(d))?, 1);
        for x in b.labels() {
            progress(&format!("filtration F{p} δ={d} ({r},{t}) {x}"));
            let m = b.perm_module(&x)?;
            let (ok, detail) = match b.cell_filtration(&m) {
                Ok(fr) => {
                    let sum: usize = fr.subquotient_dims().iter().sum();
                    let labels: Vec<String> = fr.subquotient_labels.iter().map(|l| l.to_string()).collect();
                    (sum == m.dim(), format!("dims sum {sum}/{}; {}", m.dim(), labels.join(" ")))
                }
                Err(e) => (false, e.to_string()),
            };
            out.push(row("filtration", format!("F{p} δ={d} ({r},{t}) {x}"), ok, detail));
        }
    }
    let f3 = PrimeField::new(3);
    let b = BModules::new(WalledBrauer::new(&f3, 2, 1, f3.one())?, 1);
    let m = b.perm_module(&LambdaLabel::parse("0:(2|1)")?)?;
    let refused = matches!(b.cell_filtration(&m), Err(Error::BadCharacteristic(3)));
    out.push(row("filtration", "F3 refused".into(), refused, "hypothesis violation expected"));
    Ok(out)
}

/// `End(S^{λ,μ})` is one-dimensional and `Hom(S^{λ',μ'}, S^{λ,μ}) = 0`
/// unless both components dominate, over `𝔽_5` with `a,b ≤ 4`.
pub fn standard_system(progress: Progress) -> Result<Vec<CaseResult>> {
    let f = PrimeField::new(5);
    let mut out = Vec::new();
    for a in 0..=4 {
        for b in 0..=4 {
            if a + b == 0 {
                continue;
            }
            progress(&format!("standard system ({a},{b})"));
            let shapes = bipartitions_of(a, b);
            let mods = shapes.iter().map(|s| Ok(specht_prod(s, &f)?.module)).collect::<Result<Vec<_>>>()?;
            let mut ok = true;
            let mut bad = Vec::new();
            for (i, x) in shapes.iter().enumerate() {
                if hom_space(&mods[i], &mods[i])?.dim() != 1 {
                    ok = false;
                    bad.push(format!("End {x}"));
                }
                for (j, y) in shapes.iter().enumerate() {
                    if i != j && !(y.left.dominates(&x.left) && y.right.dominates(&x.right)) {
                        // Hom(S^y, S^x) must vanish
                        if hom_space(&mods[j], &mods[i])?.dim() != 0 {
                            ok = false;
                            bad.push(format!("Hom({y},{x})"));
                        }
                    }
                }
            }
            out.push(row("standard_system", format!("F5 ({a},{b})"), ok, bad.join(" ")));
        }
    }
    Ok(out)
}

/// Cases of the `Res_l cell(n, ν)` identity where the stated coset space
/// (`𝔖_{n−l}` on left points only) fails, together with the rows.
pub fn res_cell(progress: Progress) -> Result<(Vec<CaseResult>, Vec<String>)> {
    let mut out = Vec::new();
    let mut literal_failures = Vec::new();
    let f5 = PrimeField::new(5);
    res_cell_over(&Rationals, 5, "Q δ=5", &mut out, &mut literal_failures, progress)?;
    res_cell_over(&f5, 2, "F5 δ=2", &mut out, &mut literal_failures, progress)?;
    Ok((out, literal_failures))
}

fn res_cell_over<F: Field>(
    f: &F,
    delta: i64,
    tag: &str,
    out: &mut Vec<CaseResult>,
    failures: &mut Vec<String>,
    progress: Progress,
) -> Result<()> {
    for r in 1..=3 {
        for t in 1..=3 {
            let b = BModules::new(WalledBrauer::new(f, r, t, f.from_i64(delta))?, 1);
            let s = b.algebra().s();
            for n in 0..=s.min(2) {
                for l in 0..=s.min(2) {
                    for nu in bipartitions_of(r - n, t - n) {
                        let case = format!("{tag} ({r},{t}) n={n} l={l} {nu}");
                        progress(&format!("res cell {case}"));
                        if n < l {
                            let ok = b.res_cell_identity(n, l, &nu, true)?;
                            out.push(row("res_cell", format!("{case} vanishes"), ok, ""));
                            continue;
                        }
                        let literal = b.res_cell_identity(n, l, &nu, false)?;
                        let diagonal = b.res_cell_identity(n, l, &nu, true)?;
                        if !literal {
                            failures.push(case.clone());
                        }
                        out.push(row("res_cell", format!("{case} stated"), literal, "H = 𝔖_{n−l} × 1"));
                        out.push(row("res_cell", format!("{case} diagonal"), diagonal, "H = diagonal 𝔖_{n−l}"));
                    }
                }
            }
        }
    }
    Ok(())
}
