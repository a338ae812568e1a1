use hurewicz_core::abgroup::tensor;
use hurewicz_core::chain::{homology, homology_z, ChainComplexZ};
use hurewicz_core::corpus::{self, parse_group};
use hurewicz_core::homotopy::{hurewicz_h1, pi1};
use hurewicz_core::sset::{self, PairComplex};
use hurewicz_core::stable::{default_start, stable_homology, suspension_spectrum};
use hurewicz_core::{suite, AbGroup, Error, FinSSet, FpGroup, IntMatrix, Result};
use serde_json::json;

use crate::report::Report;
use crate::{Cli, Command};

fn load(cli: &Cli, name: &str, level: usize) -> Result<FinSSet> {
    let d = cli
        .truncation
        .unwrap_or_else(|| level.max(corpus::min_truncation(name)));
    corpus::space(name, d)
}

fn label(reduced: bool, n: usize, space: &str, coeff: &AbGroup) -> String {
    let h = if reduced { "H~" } else { "H" };
    format!("{h}_{n}({space}; {coeff})")
}

fn matrix_rows(m: &IntMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(ToString::to_string).collect())
        .collect()
}

fn format_matrix(m: &IntMatrix) -> String {
    let rows: Vec<String> = matrix_rows(m).iter().map(|r| r.join(" ")).collect();
    format!("[{}]", rows.join("; "))
}

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Homology {
            space,
            coeff,
            degree,
            reduced,
        } => {
            let a = parse_group(&coeff.coeff)?;
            let x = load(cli, space, degree + 1)?;
            let g = homology(&x, &a, *degree, *reduced)?;
            let line = format!("{} = {g}", label(*reduced, *degree, space, &a));
            Ok(Report::ok(
                vec![line],
                json!({
                    "space": space,
                    "coeff": a.to_string(),
                    "degree": degree,
                    "reduced": reduced,
                    "group": g.canonical_form(),
                    "text": g.to_string(),
                }),
            ))
        }
        Command::Pi1 { space } => {
            let x = load(cli, space, 2)?;
            x.require_level(2, 1)?;
            let p = pi1(&x)?;
            let ab = p.group.abelianization().group;
            let relators: Vec<String> = p.group.relators().iter().map(|r| p.group.format_word(r)).collect();
            Ok(Report::ok(
                vec![
                    format!("pi1({space}) = {}", p.group),
                    format!("spanning tree edges: {:?}", p.tree),
                    format!("pi1^ab = {ab}"),
                ],
                json!({
                    "space": space,
                    "generators": p.group.names(),
                    "generator_edges": p.generators,
                    "relators": relators,
                    "tree": p.tree,
                    "abelianization": ab.canonical_form(),
                    "abelianization_text": ab.to_string(),
                }),
            ))
        }
        Command::Abelianize { presentation } => {
            let g = FpGroup::parse(presentation)?;
            let ab = g.abelianization().group;
            Ok(Report::ok(
                vec![format!("{g}^ab = {ab}")],
                json!({
                    "presentation": g.to_string(),
                    "abelianization": ab.canonical_form(),
                    "text": ab.to_string(),
                }),
            ))
        }
        Command::Tensor { left, right } => {
            let (a, b) = (parse_group(left)?, parse_group(right)?);
            let t = tensor(&a, &b).group;
            Ok(Report::ok(
                vec![t.to_string()],
                json!({
                    "left": a.to_string(),
                    "right": b.to_string(),
                    "tensor": t.canonical_form(),
                    "text": t.to_string(),
                }),
            ))
        }
        Command::Smash {
            left,
            right,
            coeff,
            emit,
        } => {
            let d = cli.truncation.unwrap_or_else(|| {
                (corpus::min_truncation(left) + corpus::min_truncation(right) + 1).max(3)
            });
            let x = corpus::space(left, d)?;
            let y = corpus::space(right, d)?;
            let xy = sset::smash(&x, &y)?;
            pair_report(&format!("{left}^{right}"), &xy, &parse_group(&coeff.coeff)?, *emit)
        }
        Command::Suspend { space, coeff, emit } => {
            let d = cli
                .truncation
                .unwrap_or_else(|| (corpus::min_truncation(space) + 2).max(3));
            let x = corpus::space(space, d)?;
            let sx = sset::suspension(&x)?;
            pair_report(&format!("S{space}"), &sx, &parse_group(&coeff.coeff)?, *emit)
        }
        Command::Hurewicz { space, coeff } => {
            let a = parse_group(&coeff.coeff)?;
            let x = load(cli, space, 2)?;
            let h = hurewicz_h1(&x, &a)?;
            let verdict = if h.iso {
                format!("iso: {}", h.homology.group())
            } else {
                "not iso".to_string()
            };
            let lines = vec![
                format!("pi1({space}) = {}", h.presentation.group),
                format!("pi1^ab = {}", h.abelianization),
                format!("pi1^ab (x) {a} = {}", h.tensor.group),
                format!("{} = {}", label(true, 1, space, &a), h.homology.group()),
                format!("h1 = {}", format_matrix(h.map.matrix())),
                verdict,
            ];
            let json = json!({
                "space": space,
                "coeff": a.to_string(),
                "presentation": h.presentation.group.to_string(),
                "abelianization": h.abelianization.to_string(),
                "tensor": h.tensor.group.to_string(),
                "homology": h.homology.group().to_string(),
                "h1": matrix_rows(h.map.matrix()),
                "iso": h.iso,
                "inverse": h.inverse.as_ref().map(|inv| matrix_rows(inv.matrix())),
            });
            Ok(Report::ok(lines, json).failed_if(!h.iso))
        }
        Command::Stable {
            space,
            coeff,
            degree,
            levels,
            start,
        } => {
            let a = parse_group(&coeff.coeff)?;
            let start = start.unwrap_or_else(|| default_start(*degree));
            let levels = (*levels).max(start + 2);
            let x = load(cli, space, degree + levels)?;
            let spectrum = suspension_spectrum(&x, &a, levels, *degree)?;
            let st = stable_homology(&x, &a, *degree, levels, Some(start))?;
            let mut lines = Vec::new();
            let mut groups = Vec::new();
            for (i, g) in spectrum.diagram.groups().iter().enumerate() {
                let name = if i == 0 {
                    space.clone()
                } else {
                    format!("S^{i} {space}")
                };
                lines.push(format!("level {i}: {} = {g}", label(true, degree + i, &name, &a)));
                groups.push(g.to_string());
            }
            lines.push(format!("stable {} = {}", label(true, *degree, space, &a), st.group));
            lines.push(format!(
                "start {}; structure maps iso: {}; cone from level 0 iso: {}",
                st.start,
                yes(spectrum.all_isomorphisms()),
                yes(st.cone_from_base_iso)
            ));
            let json = json!({
                "space": space,
                "coeff": a.to_string(),
                "degree": degree,
                "levels": groups,
                "start": st.start,
                "stable": st.group.to_string(),
                "structure_maps_iso": spectrum.all_isomorphisms(),
                "cone_from_base_iso": st.cone_from_base_iso,
            });
            Ok(Report::ok(lines, json).failed_if(!st.cone_from_base_iso || !spectrum.all_isomorphisms()))
        }
        Command::VerifySuite { filter, jobs } => {
            let mut pool = rayon::ThreadPoolBuilder::new();
            if let Some(k) = jobs {
                pool = pool.num_threads(*k);
            }
            let pool = pool
                .build()
                .map_err(|e| Error::InvalidModel(format!("thread pool: {e}")))?;
            let results = pool.install(|| suite::run(filter.as_deref()));
            if results.is_empty() {
                return Err(Error::InvalidModel(format!(
                    "no criterion matches `{}`",
                    filter.as_deref().unwrap_or("")
                )));
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            let mut lines: Vec<String> = results
                .iter()
                .map(|r| {
                    let v = if r.passed { "PASS" } else { "FAIL" };
                    format!("[{v}] {:>2} {:<20} {}", r.id, r.name, r.detail)
                })
                .collect();
            lines.push(format!("{} passed, {failed} failed", results.len() - failed));
            Ok(Report::ok(lines, json!({ "results": results, "failed": failed })).failed_if(failed > 0))
        }
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Census and reduced homology of a smash or suspension in every degree the
/// truncation supports.
fn pair_report(name: &str, pc: &PairComplex, a: &AbGroup, emit: bool) -> Result<Report> {
    let x = pc.sset();
    let top = x.truncation().saturating_sub(1);
    let counts: Vec<String> = x.counts().iter().map(ToString::to_string).collect();
    let mut lines = vec![format!("{name}: nondegenerate simplices ({})", counts.join(", "))];
    let mut groups = Vec::new();
    let integral = a.is_isomorphic(&AbGroup::integers());
    let chains = ChainComplexZ::reduced(x);
    for n in 0..=top {
        let g = if integral {
            homology_z(&chains, n)
        } else {
            homology(x, a, n, true)?
        };
        lines.push(format!("{} = {g}", label(true, n, name, a)));
        groups.push(g.to_string());
    }
    if emit {
        lines.push(x.to_text());
    }
    Ok(Report::ok(
        lines,
        json!({
            "space": name,
            "truncation": x.truncation(),
            "counts": x.counts(),
            "coeff": a.to_string(),
            "homology": groups,
            "text": emit.then(|| x.to_text()),
        }),
    ))
}
