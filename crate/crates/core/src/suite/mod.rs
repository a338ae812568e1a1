//! The verification suite: one exact check per acceptance criterion.
//!
//! Each check returns a [`CheckResult`]; nothing is sampled or approximated
//! except where the detail line says so.

mod universal;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::abgroup::{seq_colimit, tensor, AbGroup, AbHom, SeqDiagramAb};
use crate::chain::{cross_product, homology, homology_z, is_n_connected_certificate, ChainComplexZ};
use crate::corpus::{self, parse_group};
use crate::error::{Error, Result};
use crate::homotopy::{hurewicz_h1, naturality_check, sign_rigidity_check, CorpusKey, SignVerdict};
use crate::intlin::{smith_normal_form, Int, IntMatrix};
use crate::magma::exhaustive_eckmann_hilton;
use crate::sset::{bar_construction, smash, smash_map, suspension, tau, FinSSet, SMap};
use crate::stable::stabilization_check;

use universal::{check_triple, groups_up_to_8, structure_map_ok, Cyclics};

/// Outcome of one criterion.
#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn tally(total: usize, failures: Vec<String>, what: &str) -> Self {
        let passed = failures.is_empty() && total > 0;
        let mut detail = format!("{}/{total} {what}", total - failures.len());
        if !failures.is_empty() {
            detail.push_str("; failed: ");
            detail.push_str(&failures.join(", "));
        }
        Outcome { passed, detail }
    }
}

pub struct Criterion {
    pub id: usize,
    pub name: &'static str,
    check: fn() -> Result<Outcome>,
}

pub const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "hurewicz", check: hurewicz },
    Criterion { id: 2, name: "naturality", check: naturality },
    Criterion { id: 3, name: "smash-connectivity", check: smash_connectivity },
    Criterion { id: 4, name: "smash-tensor", check: smash_tensor },
    Criterion { id: 5, name: "tensor-universal", check: tensor_universal },
    Criterion { id: 6, name: "tau-suspension", check: tau_suspension },
    Criterion { id: 7, name: "stabilization", check: stabilization },
    Criterion { id: 8, name: "colimits", check: colimits },
    Criterion { id: 9, name: "applications", check: applications },
    Criterion { id: 10, name: "sign-rigidity", check: sign_rigidity },
    Criterion { id: 11, name: "eckmann-hilton", check: eckmann_hilton },
    Criterion { id: 12, name: "smith-certificates", check: smith_certificates },
];

impl Criterion {
    pub fn matches(&self, filter: &str) -> bool {
        self.name.contains(filter) || self.id.to_string() == filter
    }

    pub fn run(&self) -> CheckResult {
        let start = Instant::now();
        let (passed, detail) = match (self.check)() {
            Ok(o) => (o.passed, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        CheckResult {
            id: self.id,
            name: self.name,
            passed,
            detail,
            millis: start.elapsed().as_millis(),
        }
    }
}

/// Runs every criterion whose name contains `filter` (or whose number equals it),
/// in parallel on the current rayon pool, returning results in criterion order.
pub fn run(filter: Option<&str>) -> Vec<CheckResult> {
    CRITERIA
        .par_iter()
        .filter(|c| filter.is_none_or(|f| c.matches(f)))
        .map(Criterion::run)
        .collect()
}

const HUREWICZ_SPACES: [&str; 7] = ["S1", "S1vS1", "torus", "klein", "RP2", "M3", "genus2"];
const COEFFICIENTS: [&str; 5] = ["Z", "Z/2", "Z/4", "Z/6", "Z + Z/3"];

fn hurewicz() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut total = 0;
    for name in HUREWICZ_SPACES {
        let x = corpus::space(name, 3)?;
        for c in COEFFICIENTS {
            total += 1;
            let a = parse_group(c)?;
            let h = hurewicz_h1(&x, &a)?;
            let cycles = h.generator_images.iter().all(|z| h.homology.is_cycle(z));
            if !(h.iso && cycles && h.tensor.group.is_isomorphic(h.homology.group())) {
                failures.push(format!("({name}, {c})"));
            }
        }
    }
    Ok(Outcome::tally(total, failures, "certified isomorphisms"))
}

fn naturality() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut total = 0;
    for m in corpus::maps(3)? {
        for c in ["Z", "Z/6", "Z + Z/3"] {
            total += 1;
            if !naturality_check(&m.map, &parse_group(c)?)?.holds {
                failures.push(format!("{} over {c}", m.name));
            }
        }
    }
    Ok(Outcome::tally(total, failures, "squares commute"))
}

/// `(X, Y, n, m)` with `X` `(n-1)`-connected and `Y` `(m-1)`-connected.
const SMASH_PAIRS: [(&str, &str, usize, usize); 4] =
    [("S1", "S1", 1, 1), ("S1", "S2", 1, 2), ("S2", "S2", 2, 2), ("M2", "M3", 1, 1)];

fn smash_connectivity() -> Result<Outcome> {
    let mut failures = Vec::new();
    for (xn, yn, n, m) in SMASH_PAIRS {
        let d = n + m + 1;
        let xy = smash(&corpus::space(xn, d)?, &corpus::space(yn, d)?)?;
        let r = is_n_connected_certificate(xy.sset(), n + m - 1)?;
        if !r.certified {
            failures.push(format!("{xn}^{yn}"));
        }
    }
    Ok(Outcome::tally(SMASH_PAIRS.len(), failures, "smash products certified (n+m-1)-connected"))
}

fn smash_tensor() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut groups = Vec::new();
    let pairs = SMASH_PAIRS.iter().copied().chain([("M4", "M6", 1, 1)]);
    let mut total = 0;
    for (xn, yn, n, m) in pairs {
        total += 1;
        let d = n + m + 1;
        let cp = cross_product(
            &corpus::space(xn, d)?,
            &corpus::space(yn, d)?,
            n,
            m,
            &AbGroup::integers(),
        )?;
        let iso = cp.map.inverse()?.is_some();
        let g = cp.target.group().to_string();
        if !iso || (xn == "M4" && g != "Z/2") {
            failures.push(format!("{xn}^{yn}"));
        }
        groups.push(format!("{xn}^{yn}: {g}"));
    }
    let mut o = Outcome::tally(total, failures, "cross products are isomorphisms");
    o.detail.push_str(&format!(" ({})", groups.join(", ")));
    Ok(o)
}

fn tensor_universal() -> Result<Outcome> {
    let cyclics: Vec<Cyclics> = groups_up_to_8().iter().map(|o| Cyclics::new(o)).collect();
    let mut failures = Vec::new();
    let mut triples = 0;
    let mut compared = 0;
    let mut largest = 0;
    for a in &cyclics {
        for b in &cyclics {
            if !structure_map_ok(a, b)? {
                failures.push("structure map".to_string());
            }
            for c in &cyclics {
                triples += 1;
                let r = check_triple(a, b, c)?;
                compared += r.tables_compared as usize;
                largest = largest.max(r.homs);
                if !r.ok {
                    failures.push(format!("triple {triples}: {} homs vs {} bilinear", r.homs, r.bilinear));
                }
            }
        }
    }
    // A ⊗ Z ≅ A via a ↦ a ⊗ 1
    let mut corpus_groups: Vec<AbGroup> = COEFFICIENTS.iter().map(|c| parse_group(c)).collect::<Result<_>>()?;
    corpus_groups.extend(groups_up_to_8().iter().map(|o| {
        AbGroup::from_cyclic_orders(&o.iter().map(|&n| n as u64).collect::<Vec<_>>())
    }));
    let z = AbGroup::integers();
    for g in &corpus_groups {
        let t = tensor(g, &z);
        let cols: Vec<Vec<Int>> = (0..g.generators())
            .map(|i| Ok(t.elementary(&g.generator(i), &z.generator(0))?.coords().to_vec()))
            .collect::<Result<_>>()?;
        let unit = AbHom::new(g.clone(), t.group.clone(), IntMatrix::from_columns(t.group.generators(), &cols))?;
        if unit.inverse()?.is_none() {
            failures.push(format!("{g} (x) Z"));
        }
    }
    let passed = failures.is_empty();
    Ok(Outcome {
        passed,
        detail: format!(
            "{triples} triples, {compared} compared map by map, largest Hom set {largest}; \
             A (x) Z = A for {} groups{}",
            corpus_groups.len(),
            if passed { String::new() } else { format!("; failed: {}", failures.join(", ")) }
        ),
    })
}

fn tau_suspension() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut checks = 0;
    let d = 4;
    let space = |n: &str| corpus::space(n, d);
    for (xn, yn) in [("S1", "S1"), ("S1", "S2"), ("M2", "M3"), ("torus", "S1"), ("klein", "RP2")] {
        checks += 1;
        let (x, y) = (space(xn)?, space(yn)?);
        let (xy, yx) = (smash(&x, &y)?, smash(&y, &x)?);
        let round = tau(&yx, &xy)?.compose(&tau(&xy, &yx)?)?;
        if round != SMap::identity(xy.sset()) {
            failures.push(format!("tau tau on {xn}^{yn}"));
        }
    }
    let maps = corpus::maps(d)?;
    let by_name = |prefix: &str| -> Result<SMap> {
        maps.iter()
            .find(|m| m.name.starts_with(prefix))
            .map(|m| m.map.clone())
            .ok_or_else(|| Error::InvalidModel(format!("no corpus map {prefix}")))
    };
    let squares = [
        ("C2 -> S1", "S1 -> S1vS1 (left)"),
        ("torus -> S1", "C3 -> S1"),
        ("S1 -> M3", "S1 -> S1vS1 (right)"),
    ];
    for (fname, gname) in squares {
        checks += 1;
        let (f, g) = (by_name(fname)?, by_name(gname)?);
        let (x, y, x2, y2) = (f.domain(), g.domain(), f.codomain(), g.codomain());
        let (xy, yx) = (smash(x, y)?, smash(y, x)?);
        let (xy2, yx2) = (smash(x2, y2)?, smash(y2, x2)?);
        let left = tau(&xy2, &yx2)?.compose(&smash_map(&f, &g, &xy, &xy2)?)?;
        let right = smash_map(&g, &f, &yx, &yx2)?.compose(&tau(&xy, &yx)?)?;
        if left != right {
            failures.push(format!("naturality square for {fname}, {gname}"));
        }
    }
    for (xn, yn) in [("S1", "S1"), ("S1", "M2"), ("M2", "S1"), ("RP2", "M3")] {
        checks += 1;
        let (x, y) = (space(xn)?, space(yn)?);
        let left = suspension(smash(&x, &y)?.sset())?;
        let right = smash(&x, suspension(&y)?.sset())?;
        let (cl, cr) = (ChainComplexZ::reduced(left.sset()), ChainComplexZ::reduced(right.sset()));
        if !(0..=d - 2).all(|n| homology_z(&cl, n).is_isomorphic(&homology_z(&cr, n))) {
            failures.push(format!("S({xn}^{yn}) vs {xn}^S{yn}"));
        }
    }
    Ok(Outcome::tally(checks, failures, "involution, naturality and suspension checks"))
}

fn stabilization() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut total = 0;
    for name in ["S1", "M3", "klein"] {
        let x = corpus::space(name, 4)?;
        for m in [2, 3, 6] {
            total += 1;
            let r = stabilization_check(&x, m, 2)?;
            if !r.passed {
                failures.push(format!("({name}, Z/{m})"));
            }
        }
    }
    Ok(Outcome::tally(total, failures, "stabilization reports pass"))
}

/// Every compatible cocone into `c` factors through the colimit exactly once.
fn universal_against(d: &SeqDiagramAb, window: usize, c: &AbGroup) -> Result<bool> {
    let colim = seq_colimit(d, window)?;
    let levels = colim.cones.len();
    let homs: Vec<Vec<AbHom>> = d.groups()[..levels]
        .iter()
        .map(|g| AbHom::enumerate(g, c))
        .collect::<Result<_>>()?;
    let out = AbHom::enumerate(&colim.group, c)?;
    let mut choice = vec![0usize; levels];
    let mut cocones = 0usize;
    loop {
        let cocone: Vec<AbHom> = choice.iter().enumerate().map(|(i, &k)| homs[i][k].clone()).collect();
        let mut compatible = true;
        for i in 0..levels - 1 {
            if !cocone[i].equals(&cocone[i + 1].compose(&d.maps()[i])?) {
                compatible = false;
                break;
            }
        }
        if compatible {
            cocones += 1;
            let u = colim.factor(d, &cocone)?;
            let mut through = 0;
            for v in &out {
                let mut all = true;
                for (cone, g) in colim.cones.iter().zip(&cocone) {
                    if !v.compose(cone)?.equals(g) {
                        all = false;
                        break;
                    }
                }
                if all {
                    through += 1;
                    if !v.equals(&u) {
                        return Ok(false);
                    }
                }
            }
            if through != 1 {
                return Ok(false);
            }
        }
        let mut i = 0;
        loop {
            if i == levels {
                return Ok(cocones == out.len());
            }
            choice[i] += 1;
            if choice[i] < homs[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

fn colimits() -> Result<Outcome> {
    let z = AbGroup::integers();
    let z2 = AbGroup::cyclic(2);
    let z5 = AbGroup::cyclic(5);
    let scalar = |a: &AbGroup, b: &AbGroup, k: i64| AbHom::new(a.clone(), b.clone(), IntMatrix::from_rows(&[[k]]));
    let diagrams: Vec<(&str, SeqDiagramAb, usize)> = vec![
        ("Z = Z = ...", SeqDiagramAb::constant(&AbHom::identity(&z), 3)?, 0),
        (
            "0 -> Z = Z = ...",
            SeqDiagramAb::new(
                vec![AbGroup::trivial(), z.clone(), z.clone(), z.clone()],
                vec![AbHom::zero(&AbGroup::trivial(), &z), AbHom::identity(&z), AbHom::identity(&z)],
            )?,
            1,
        ),
        (
            "Z -> Z/2 = Z/2 = ...",
            SeqDiagramAb::new(
                vec![z.clone(), z2.clone(), z2.clone(), z2.clone()],
                vec![scalar(&z, &z2, 1)?, AbHom::identity(&z2), AbHom::identity(&z2)],
            )?,
            1,
        ),
        (
            "Z/5 -2-> Z/5 -3-> Z/5",
            SeqDiagramAb::new(
                vec![z5.clone(), z5.clone(), z5.clone()],
                vec![scalar(&z5, &z5, 2)?, scalar(&z5, &z5, 3)?],
            )?,
            0,
        ),
        (
            "Z -3-> Z = Z",
            SeqDiagramAb::new(
                vec![z.clone(), z.clone(), z.clone()],
                vec![scalar(&z, &z, 3)?, AbHom::identity(&z)],
            )?,
            1,
        ),
    ];
    let tests: Vec<AbGroup> = [2u64, 3, 4, 5, 6].iter().map(|&m| AbGroup::cyclic(m)).collect();
    let mut failures = Vec::new();
    for (name, d, stage) in &diagrams {
        let window = d.maps().len();
        let colim = seq_colimit(d, window)?;
        let mut ok = colim.cone_coherent(d)? && colim.stage == *stage;
        for c in &tests {
            ok &= universal_against(d, window, c)?;
        }
        if !ok {
            failures.push(name.to_string());
        }
    }
    let doubling = SeqDiagramAb::constant(&scalar(&z, &z, 2)?, 4)?;
    let not_stabilized = matches!(seq_colimit(&doubling, 4), Err(Error::NotStabilized { .. }));
    if !not_stabilized {
        failures.push("doubling diagram was accepted".into());
    }
    Ok(Outcome::tally(diagrams.len() + 1, failures, "diagram checks"))
}

fn applications() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut total = 0;
    for m in [2u64, 3, 4] {
        let a = AbGroup::cyclic(m);
        let bar = bar_construction(&a, 2)?;
        for c in ["Z", "Z/2", "Z/6"] {
            total += 1;
            let b = parse_group(c)?;
            let h = homology(&bar.sset, &b, 1, true)?;
            if !h.is_isomorphic(&tensor(&a, &b).group) {
                failures.push(format!("B(Z/{m}) over {c}: {h}"));
            }
        }
    }
    let s1 = corpus::space("S1", 3)?;
    let certified: Vec<(&str, FinSSet, bool)> = vec![
        ("S2", corpus::space("S2", 3)?, true),
        ("S1^S1", smash(&s1, &s1)?.sset().clone(), true),
        ("S1", s1.clone(), false),
    ];
    for (name, x, expect) in certified {
        total += 1;
        let r = is_n_connected_certificate(&x, 1)?;
        let mut vanish = true;
        for c in COEFFICIENTS {
            let a = parse_group(c)?;
            for i in 0..=1 {
                vanish &= homology(&x, &a, i, true)?.is_trivial();
            }
        }
        if r.certified != expect || vanish != expect {
            failures.push(format!("connectivity of {name}"));
        }
    }
    Ok(Outcome::tally(total, failures, "homology and connectivity checks"))
}

fn sign_rigidity() -> Result<Outcome> {
    let pairs = [
        ("S1", "Z"),
        ("S1", "Z/2"),
        ("torus", "Z"),
        ("klein", "Z/2"),
        ("RP2", "Z"),
        ("M3", "Z/6"),
        ("S1vS1", "Z + Z/3"),
    ];
    let mut family = Vec::new();
    for (s, c) in pairs {
        let h = hurewicz_h1(&corpus::space(s, 3)?, &parse_group(c)?)?;
        family.push((CorpusKey::new(s, c), h.map));
    }
    let negated: Vec<_> = family.iter().map(|(k, h)| (k.clone(), h.neg())).collect();
    let doubled: Vec<_> = family
        .iter()
        .map(|(k, h)| (k.clone(), if k.coeff == "Z" { h.scale(&Int::from(2)) } else { h.clone() }))
        .collect();
    let mut failures = Vec::new();
    if sign_rigidity_check(&family, &family)? != SignVerdict::Same {
        failures.push("(h, h)".to_string());
    }
    if sign_rigidity_check(&family, &negated)? != SignVerdict::Negated {
        failures.push("(h, -h)".to_string());
    }
    match sign_rigidity_check(&family, &doubled)? {
        SignVerdict::Neither { witness } if witness == CorpusKey::new("S1", "Z") => {}
        _ => failures.push("(h, 2h)".to_string()),
    }
    // Aut(Z) = {1, -1}
    let z = AbGroup::integers();
    let units: Vec<i64> = (-12..=12)
        .filter(|&k| {
            AbHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[[k]]))
                .and_then(|h| h.inverse())
                .map(|inv| inv.is_some())
                .unwrap_or(false)
        })
        .collect();
    if units != [-1, 1] {
        failures.push(format!("Aut(Z) = {units:?}"));
    }
    Ok(Outcome::tally(4, failures, "sign verdicts"))
}

fn eckmann_hilton() -> Result<Outcome> {
    let mut failures = Vec::new();
    let mut counts = Vec::new();
    for n in 1..=4 {
        let r = exhaustive_eckmann_hilton(n);
        counts.push(format!("{n}: {}", r.instances));
        if !r.all_pass || r.instances == 0 {
            failures.push(format!("size {n}"));
        }
    }
    let mut o = Outcome::tally(4, failures, "carrier sizes pass");
    o.detail.push_str(&format!(" (instances {})", counts.join(", ")));
    Ok(o)
}

fn smith_certificates() -> Result<Outcome> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut failures = Vec::new();
    for k in 0..1000 {
        let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let a = IntMatrix::from_fn(r, c, |_, _| Int::from(rng.gen_range(-9i64..=9)));
        let s = smith_normal_form(&a);
        let unimodular = |m: &IntMatrix| {
            let d = m.det();
            d == Int::from(1) || d == Int::from(-1)
        };
        if !(s.verify(&a) && unimodular(&s.u) && unimodular(&s.v)) {
            failures.push(format!("matrix {k}"));
        }
    }
    Ok(Outcome::tally(1000, failures, "random matrices certified"))
}
