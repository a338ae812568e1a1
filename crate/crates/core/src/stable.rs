//! Suspension spectra at the level of homology, stable groups as sequential
//! colimits, and the stabilization check against `B(A)`.

use rayon::prelude::*;
use serde::Serialize;

use crate::abgroup::{seq_colimit, tensor, AbGroup, AbHom, Colimit, SeqDiagramAb};
use crate::chain::{cross_product, homology_z, suspension_map, ChainComplexZ, Homology};
use crate::error::{Error, Result};
use crate::homotopy::hurewicz_h1;
use crate::sset::{bar_construction, smash, suspension, FinSSet};

/// Levels `Y_0 = X`, `Y_{i+1} = ΣY_i` and the diagram
/// `H̃_n(Y_0; A) -> H̃_{n+1}(Y_1; A) -> ...` of suspension maps.
#[derive(Clone, Debug)]
pub struct HomologySpectrum {
    pub degree: usize,
    pub coeff: AbGroup,
    pub levels: Vec<FinSSet>,
    pub homology: Vec<Homology>,
    pub diagram: SeqDiagramAb,
    /// Certified inverse of each structure map, when it is an isomorphism.
    pub inverses: Vec<Option<AbHom>>,
}

impl HomologySpectrum {
    pub fn all_isomorphisms(&self) -> bool {
        self.inverses.iter().all(Option::is_some)
    }
}

pub fn suspension_spectrum(x: &FinSSet, a: &AbGroup, levels: usize, n: usize) -> Result<HomologySpectrum> {
    if levels == 0 {
        return Err(Error::InvariantViolation("a spectrum needs at least one level".into()));
    }
    x.require_level(n + levels, n + levels - 1)?;
    let mut spaces = vec![x.clone()];
    let mut pairs = Vec::with_capacity(levels - 1);
    for i in 0..levels - 1 {
        let s = suspension(&spaces[i])?;
        spaces.push(s.sset().clone());
        pairs.push(s);
    }
    let homology: Vec<Homology> = spaces
        .par_iter()
        .enumerate()
        .map(|(i, y)| Homology::compute(y, a, n + i, true))
        .collect::<Result<_>>()?;
    let maps: Vec<AbHom> = pairs
        .par_iter()
        .enumerate()
        .map(|(i, sx)| suspension_map(sx, &homology[i], &homology[i + 1]))
        .collect::<Result<_>>()?;
    let inverses = maps.iter().map(AbHom::inverse).collect::<Result<_>>()?;
    let diagram = SeqDiagramAb::new(homology.iter().map(|h| h.group().clone()).collect(), maps)?;
    Ok(HomologySpectrum {
        degree: n,
        coeff: a.clone(),
        levels: spaces,
        homology,
        diagram,
        inverses,
    })
}

/// `max(0, 2 - n)`.
pub fn default_start(n: usize) -> usize {
    2usize.saturating_sub(n)
}

#[derive(Clone, Debug)]
pub struct StableHomology {
    pub group: AbGroup,
    pub start: usize,
    pub colimit: Colimit,
    /// `H̃_n(X; A) -> colim`, through the diagram up to the start index.
    pub cone_from_base: AbHom,
    pub cone_from_base_iso: bool,
}

/// The colimit of the suspension diagram from index `start` (default
/// `max(0, 2 - n)`), compared with level 0 through the cone.
pub fn stable_homology(
    x: &FinSSet,
    a: &AbGroup,
    n: usize,
    levels: usize,
    start: Option<usize>,
) -> Result<StableHomology> {
    let start = start.unwrap_or_else(|| default_start(n));
    let levels = levels.max(start + 2);
    let spectrum = suspension_spectrum(x, a, levels, n)?;
    stable_from_spectrum(&spectrum, start)
}

pub fn stable_from_spectrum(spectrum: &HomologySpectrum, start: usize) -> Result<StableHomology> {
    let tail = spectrum.diagram.shifted(start)?;
    let colimit = seq_colimit(&tail, tail.maps().len())?;
    let mut cone = colimit.cones[0].clone();
    for f in spectrum.diagram.maps()[..start].iter().rev() {
        cone = cone.compose(f)?;
    }
    let iso = cone.inverse()?.is_some();
    Ok(StableHomology {
        group: colimit.group.clone(),
        start,
        colimit,
        cone_from_base: cone,
        cone_from_base_iso: iso,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct StabilizationReport {
    /// `H̃₂(X ∧ B(A); Z)`
    pub smash_group: String,
    /// `H̃₁(X; A)`
    pub twisted_group: String,
    /// `π₁(X)^{ab} ⊗ A`
    pub hurewicz_group: String,
    pub groups_agree: bool,
    pub hurewicz_iso: bool,
    /// Whether `H̃₁(X; Z) ⊗ H̃₁(B(A); Z) -> H̃₂(X ∧ B(A); Z)` is an isomorphism.
    pub cross_iso: bool,
    /// Groups `H̃_{1+i}(Σ^i X; A)` of the suspension chain.
    pub suspension_groups: Vec<String>,
    pub suspensions_iso: bool,
    pub passed: bool,
}

/// Checks `H̃₂(X ∧ B(A); Z) ≅ H̃₁(X; A) ≅ π₁(X)^{ab} ⊗ A` and that the suspension
/// maps `H̃_{1+i}(Σ^i X; A) -> H̃_{2+i}(Σ^{i+1} X; A)` are isomorphisms for
/// `i < range`.
pub fn stabilization_check(x: &FinSSet, m: u64, range: usize) -> Result<StabilizationReport> {
    if m < 2 {
        return Err(Error::InvariantViolation("coefficients must be finite cyclic of order >= 2".into()));
    }
    if !x.is_connected() {
        return Err(Error::NotConnected);
    }
    x.require_level(3, 2)?;
    x.require_level(range + 2, range + 1)?;
    let a = AbGroup::cyclic(m);
    let x3 = x.truncate(3)?;
    let bar = bar_construction(&a, 3)?;
    let xb = smash(&x3, &bar.sset)?;
    let smash_group = homology_z(&ChainComplexZ::reduced(xb.sset()), 2);
    let twisted = Homology::compute(x, &a, 1, true)?;
    let h = hurewicz_h1(x, &a)?;
    let cross = cross_product(&x3, &bar.sset, 1, 1, &AbGroup::integers())?;
    let cross_iso = cross.map.inverse()?.is_some();
    let reference = tensor(&h.abelianization, &a).group;
    let groups_agree = smash_group.is_isomorphic(twisted.group()) && twisted.group().is_isomorphic(&reference);
    let spectrum = suspension_spectrum(x, &a, range + 1, 1)?;
    let suspensions_iso = spectrum.all_isomorphisms();
    let passed = groups_agree && h.iso && cross_iso && suspensions_iso;
    Ok(StabilizationReport {
        smash_group: smash_group.to_string(),
        twisted_group: twisted.group().to_string(),
        hurewicz_group: reference.to_string(),
        groups_agree,
        hurewicz_iso: h.iso,
        cross_iso,
        suspension_groups: spectrum.diagram.groups().iter().map(ToString::to_string).collect(),
        suspensions_iso,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{klein_bottle, moore_space, point, sphere};

    #[test]
    fn circle_spectrum() {
        let s = suspension_spectrum(&sphere(1, 4).unwrap(), &AbGroup::integers(), 3, 1).unwrap();
        assert!(s.all_isomorphisms());
        assert!(s.diagram.groups().iter().all(|g| g.to_string() == "Z"));
        let p = suspension_spectrum(&point(4), &AbGroup::integers(), 3, 1).unwrap();
        assert!(p.diagram.groups().iter().all(AbGroup::is_trivial));
    }

    #[test]
    fn stable_groups() {
        let z = AbGroup::integers();
        let k = stable_homology(&klein_bottle(4).unwrap(), &z, 1, 3, None).unwrap();
        assert_eq!(k.group.to_string(), "Z + Z/2");
        assert!(k.cone_from_base_iso);
        let m = stable_homology(&moore_space(2, 4).unwrap(), &z, 1, 3, Some(0)).unwrap();
        assert_eq!(m.group.to_string(), "Z/2");
    }

    #[test]
    fn stabilization_small() {
        let r = stabilization_check(&sphere(1, 3).unwrap(), 2, 1).unwrap();
        assert!(r.passed, "{r:?}");
        assert_eq!(r.smash_group, "Z/2");
        let p = stabilization_check(&point(3), 3, 1).unwrap();
        assert!(p.passed && p.smash_group == "0");
    }
}
