use super::group::AbGroup;
use super::hom::AbHom;
use crate::error::{Error, Result};

/// `groups[0] -> groups[1] -> ...` with `maps[i] : groups[i] -> groups[i + 1]`.
#[derive(Clone, Debug)]
pub struct SeqDiagramAb {
    groups: Vec<AbGroup>,
    maps: Vec<AbHom>,
}

impl SeqDiagramAb {
    pub fn new(groups: Vec<AbGroup>, maps: Vec<AbHom>) -> Result<Self> {
        if groups.is_empty() || maps.len() + 1 != groups.len() {
            return Err(Error::InvariantViolation(format!(
                "{} groups need {} maps, got {}",
                groups.len(),
                groups.len().saturating_sub(1),
                maps.len()
            )));
        }
        for (i, f) in maps.iter().enumerate() {
            if f.domain() != &groups[i] || f.codomain() != &groups[i + 1] {
                return Err(Error::InvariantViolation(format!("map {i} has the wrong endpoints")));
            }
        }
        Ok(SeqDiagramAb { groups, maps })
    }

    /// `g --f--> g --f--> ...` with `len` groups.
    pub fn constant(f: &AbHom, len: usize) -> Result<Self> {
        if f.domain() != f.codomain() {
            return Err(Error::MismatchedGroups);
        }
        Self::new(vec![f.domain().clone(); len], vec![f.clone(); len.saturating_sub(1)])
    }

    pub fn groups(&self) -> &[AbGroup] {
        &self.groups
    }

    pub fn maps(&self) -> &[AbHom] {
        &self.maps
    }

    /// The diagram from index `start` on.
    pub fn shifted(&self, start: usize) -> Result<Self> {
        if start >= self.groups.len() {
            return Err(Error::InvariantViolation(format!("start {start} past the diagram")));
        }
        Self::new(self.groups[start..].to_vec(), self.maps[start..].to_vec())
    }
}

/// The stable value of an eventually-isomorphic diagram with its cone.
#[derive(Clone, Debug)]
pub struct Colimit {
    pub group: AbGroup,
    /// `cones[i] : groups[i] -> group` for every index inside the window.
    pub cones: Vec<AbHom>,
    /// First index from which every map in the window is an isomorphism.
    pub stage: usize,
}

/// Colimit over the first `window` maps. The tail of the window must consist of
/// isomorphisms; otherwise the colimit need not be finitely generated and
/// [`Error::NotStabilized`] is returned.
pub fn seq_colimit(d: &SeqDiagramAb, window: usize) -> Result<Colimit> {
    let w = window.min(d.maps.len());
    if w == 0 {
        if d.maps.is_empty() {
            let g = d.groups[0].clone();
            return Ok(Colimit {
                cones: vec![AbHom::identity(&g)],
                group: g,
                stage: 0,
            });
        }
        return Err(Error::NotStabilized { window });
    }
    let mut inverses: Vec<Option<AbHom>> = Vec::with_capacity(w);
    for f in &d.maps[..w] {
        inverses.push(f.inverse()?);
    }
    let stage = match inverses.iter().rposition(Option::is_none) {
        Some(i) if i + 1 == w => return Err(Error::NotStabilized { window }),
        Some(i) => i + 1,
        None => 0,
    };
    let group = d.groups[stage].clone();
    let mut cones: Vec<AbHom> = vec![AbHom::identity(&group); w + 1];
    for i in (0..stage).rev() {
        cones[i] = cones[i + 1].compose(&d.maps[i])?;
    }
    for i in stage..w {
        let inv = inverses[i].as_ref().expect("isomorphism past the stage");
        cones[i + 1] = cones[i].compose(inv)?;
    }
    Ok(Colimit {
        group,
        cones,
        stage,
    })
}

impl Colimit {
    /// `cone_i == cone_{i+1} ∘ map_i` on generators.
    pub fn cone_coherent(&self, d: &SeqDiagramAb) -> Result<bool> {
        for i in 0..self.cones.len() - 1 {
            if !self.cones[i].equals(&self.cones[i + 1].compose(&d.maps[i])?) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The unique `u` with `u ∘ cone_i = cocone_i` for every `i` in the window.
    /// Fails if the cocone is not compatible with the diagram.
    pub fn factor(&self, d: &SeqDiagramAb, cocone: &[AbHom]) -> Result<AbHom> {
        if cocone.len() != self.cones.len() {
            return Err(Error::DimensionMismatch {
                expected: self.cones.len(),
                found: cocone.len(),
            });
        }
        for i in 0..cocone.len() - 1 {
            if !cocone[i].equals(&cocone[i + 1].compose(&d.maps[i])?) {
                return Err(Error::InvariantViolation(format!("cocone leg {i} does not commute")));
            }
        }
        let u = cocone[self.stage].clone();
        for (c, g) in self.cones.iter().zip(cocone) {
            if !u.compose(c)?.equals(g) {
                return Err(Error::InvariantViolation("factorization failed".into()));
            }
        }
        Ok(u)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intlin::IntMatrix;

    fn scalar(a: &AbGroup, b: &AbGroup, k: i64) -> AbHom {
        AbHom::new(a.clone(), b.clone(), IntMatrix::from_rows(&[[k]])).unwrap()
    }

    #[test]
    fn constant_identity_diagram() {
        let z = AbGroup::integers();
        let d = SeqDiagramAb::constant(&AbHom::identity(&z), 4).unwrap();
        let c = seq_colimit(&d, 3).unwrap();
        assert_eq!(c.stage, 0);
        assert!(c.group.is_isomorphic(&z));
        assert!(c.cone_coherent(&d).unwrap());
    }

    #[test]
    fn starts_at_zero() {
        let z = AbGroup::integers();
        let zero = AbGroup::trivial();
        let d = SeqDiagramAb::new(
            vec![zero.clone(), z.clone(), z.clone(), z.clone()],
            vec![AbHom::zero(&zero, &z), AbHom::identity(&z), AbHom::identity(&z)],
        )
        .unwrap();
        let c = seq_colimit(&d, 3).unwrap();
        assert_eq!(c.stage, 1);
        assert!(c.cones[0].is_zero());
        assert!(c.cone_coherent(&d).unwrap());
    }

    #[test]
    fn projection_then_constant() {
        let z = AbGroup::integers();
        let z2 = AbGroup::cyclic(2);
        let d = SeqDiagramAb::new(
            vec![z.clone(), z2.clone(), z2.clone(), z2.clone()],
            vec![scalar(&z, &z2, 1), AbHom::identity(&z2), AbHom::identity(&z2)],
        )
        .unwrap();
        let c = seq_colimit(&d, 3).unwrap();
        assert_eq!(c.stage, 1);
        assert_eq!(c.group.to_string(), "Z/2");
        assert!(c.cones[0].equals(&scalar(&z, &z2, 1)));
        assert!(c.cone_coherent(&d).unwrap());
    }

    #[test]
    fn doubling_does_not_stabilize() {
        let z = AbGroup::integers();
        let d = SeqDiagramAb::constant(&scalar(&z, &z, 2), 6).unwrap();
        assert_eq!(seq_colimit(&d, 5).unwrap_err(), Error::NotStabilized { window: 5 });
    }

    #[test]
    fn universal_property_against_z2() {
        let z = AbGroup::integers();
        let z2 = AbGroup::cyclic(2);
        let d = SeqDiagramAb::new(
            vec![z.clone(), z2.clone(), z2.clone()],
            vec![scalar(&z, &z2, 1), AbHom::identity(&z2)],
        )
        .unwrap();
        let c = seq_colimit(&d, 2).unwrap();
        let test = AbGroup::cyclic(4);
        let g = scalar(&z2, &test, 2);
        let cocone = vec![g.compose(&d.maps()[0]).unwrap(), g.clone(), g.clone()];
        let u = c.factor(&d, &cocone).unwrap();
        assert!(u.equals(&g));
        let bad = vec![scalar(&z, &test, 1), g.clone(), g];
        assert!(c.factor(&d, &bad).is_err());
    }
}
