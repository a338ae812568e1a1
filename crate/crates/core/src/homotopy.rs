//! Edge-path fundamental groups and the degree-one Hurewicz homomorphism.

use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::abgroup::{tensor, AbGroup, AbHom, TensorProduct};
use crate::chain::{induced_map, Homology};
use crate::error::{Error, Result};
use crate::fpgroup::{free_reduce, FpGroup, Letter, Word};
use crate::intlin::{Int, IntMatrix};
use crate::sset::{FinSSet, SMap, Simplex};

/// `π₁(X, *)` presented by a spanning tree of the 1-skeleton: one generator per
/// non-tree edge and one relator `d₂ · d₀ · d₁⁻¹` per nondegenerate triangle.
#[derive(Clone, Debug)]
pub struct Pi1Presentation {
    pub group: FpGroup,
    pub tree: Vec<usize>,
    /// Edge id of each generator.
    pub generators: Vec<usize>,
    pub basepoint: usize,
    generator_of_edge: Vec<Option<usize>>,
    /// Tree edge leading from each vertex towards the basepoint, with `true` when
    /// that edge points away from the basepoint.
    parent: Vec<Option<(usize, bool)>>,
    source: Vec<usize>,
    target: Vec<usize>,
}

pub fn pi1(x: &FinSSet) -> Result<Pi1Presentation> {
    pi1_with_rotation(x, 0)
}

/// As [`pi1`], but scanning edges starting from `rotation` (mod the edge count),
/// which generally yields a different spanning tree.
pub fn pi1_with_rotation(x: &FinSSet, rotation: usize) -> Result<Pi1Presentation> {
    let nv = x.count(0);
    let ne = if x.truncation() >= 1 { x.count(1) } else { 0 };
    let source: Vec<usize> = (0..ne).map(|e| x.face(1, e, 1).id).collect();
    let target: Vec<usize> = (0..ne).map(|e| x.face(1, e, 0).id).collect();
    // spanning forest by scanning edges in rotated order, then rooted at the basepoint
    let mut component: Vec<usize> = (0..nv).collect();
    fn find(c: &mut [usize], mut v: usize) -> usize {
        while c[v] != v {
            c[v] = c[c[v]];
            v = c[v];
        }
        v
    }
    let mut in_tree = vec![false; ne];
    let mut adjacent: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); nv];
    for k in 0..ne {
        let e = (k + rotation) % ne;
        let (a, b) = (find(&mut component, source[e]), find(&mut component, target[e]));
        if a != b {
            component[a] = b;
            in_tree[e] = true;
            adjacent[source[e]].push((target[e], e, true));
            adjacent[target[e]].push((source[e], e, false));
        }
    }
    let base = x.basepoint();
    let mut parent: Vec<Option<(usize, bool)>> = vec![None; nv];
    let mut seen = vec![false; nv];
    let mut queue = VecDeque::from([base]);
    seen[base] = true;
    while let Some(v) = queue.pop_front() {
        for &(w, e, forward) in &adjacent[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some((e, forward));
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::NotConnected);
    }
    let tree: Vec<usize> = (0..ne).filter(|&e| in_tree[e]).collect();
    let generators: Vec<usize> = (0..ne).filter(|&e| !in_tree[e]).collect();
    let mut generator_of_edge = vec![None; ne];
    for (g, &e) in generators.iter().enumerate() {
        generator_of_edge[e] = Some(g);
    }
    let mut p = Pi1Presentation {
        group: FpGroup::free(0),
        tree,
        generators,
        basepoint: base,
        generator_of_edge,
        parent,
        source,
        target,
    };
    let count = p.generators.len();
    let mut relators = Vec::new();
    if x.truncation() >= 2 {
        for t in 0..x.count(2) {
            let f = x.faces_of(2, t);
            let w = p.edge_word(f[2]).concat(&p.edge_word(f[0])).concat(&p.edge_word(f[1]).inverse());
            relators.push(free_reduce(&w, count)?);
        }
    }
    let names = p.generators.iter().map(|e| format!("e{e}")).collect();
    p.group = FpGroup::with_names(names, relators)?;
    Ok(p)
}

impl Pi1Presentation {
    /// The group element of an edge (a simplex at level 1): tree edges and
    /// degenerate edges are trivial.
    pub fn edge_word(&self, s: Simplex) -> Word {
        if s.is_degenerate() {
            return Word::empty();
        }
        match self.generator_of_edge[s.id] {
            Some(g) => Word(vec![Letter::new(g)]),
            None => Word::empty(),
        }
    }

    /// Tree path from the basepoint to `v` as `(edge, forward)` steps.
    pub fn tree_path(&self, v: usize) -> Vec<(usize, bool)> {
        let mut steps = Vec::new();
        let mut cur = v;
        while let Some((e, forward)) = self.parent[cur] {
            steps.push((e, forward));
            cur = if forward { self.source[e] } else { self.target[e] };
        }
        steps.reverse();
        steps
    }

    /// The edge loop of generator `g`: tree path to its source, the edge, and the
    /// tree path back from its target.
    pub fn generator_loop(&self, g: usize) -> Vec<(usize, bool)> {
        let e = self.generators[g];
        let mut steps = self.tree_path(self.source[e]);
        steps.push((e, true));
        steps.extend(self.tree_path(self.target[e]).into_iter().rev().map(|(f, d)| (f, !d)));
        steps
    }

    /// The signed edge 1-chain of generator `g`'s loop, keyed by edge id.
    pub fn loop_chain(&self, g: usize) -> BTreeMap<usize, i64> {
        let mut chain = BTreeMap::new();
        for (e, forward) in self.generator_loop(g) {
            *chain.entry(e).or_insert(0) += if forward { 1 } else { -1 };
        }
        chain.retain(|_, k| *k != 0);
        chain
    }
}

/// `h₁ : π₁(X)^{ab} ⊗ A -> H̃₁(X; A)` with a certified inverse when it exists.
#[derive(Clone, Debug)]
pub struct HurewiczReport {
    pub presentation: Pi1Presentation,
    pub abelianization: AbGroup,
    pub tensor: TensorProduct,
    pub homology: Homology,
    pub map: AbHom,
    pub inverse: Option<AbHom>,
    pub iso: bool,
    /// Cycle representing `h(e_i ⊗ a_c)`, at tensor generator index `i * g + c`.
    pub generator_images: Vec<Vec<Int>>,
}

pub fn hurewicz_h1(x: &FinSSet, a: &AbGroup) -> Result<HurewiczReport> {
    hurewicz_h1_with_rotation(x, a, 0)
}

pub fn hurewicz_h1_with_rotation(x: &FinSSet, a: &AbGroup, rotation: usize) -> Result<HurewiczReport> {
    x.require_level(2, 1)?;
    let presentation = pi1_with_rotation(x, rotation)?;
    let abelianization = presentation.group.abelianization().group;
    let t = tensor(&abelianization, a);
    let homology = Homology::compute(x, a, 1, true)?;
    let g = a.generators();
    let mut images = Vec::with_capacity(t.group.generators());
    let mut cols = Vec::with_capacity(t.group.generators());
    for i in 0..presentation.generators.len() {
        let lc = presentation.loop_chain(i);
        for c in 0..g {
            let mut chain = vec![Int::zero(); homology.chains().generators()];
            for (&e, &k) in &lc {
                let v = homology.basis_chain(e, c, &Int::from(k));
                for (slot, add) in chain.iter_mut().zip(v) {
                    *slot += add;
                }
            }
            cols.push(homology.class_of(&chain)?.coords().to_vec());
            images.push(chain);
        }
    }
    let map = AbHom::new(
        t.group.clone(),
        homology.group().clone(),
        IntMatrix::from_columns(homology.group().generators(), &cols),
    )?;
    let inverse = map.inverse()?;
    Ok(HurewiczReport {
        iso: inverse.is_some(),
        presentation,
        abelianization,
        tensor: t,
        homology,
        map,
        inverse,
        generator_images: images,
    })
}

/// `π₁(f)^{ab}` as a matrix from the generators of `π₁(X)` to those of `π₁(Y)`.
pub fn pi1_ab_matrix(f: &SMap, px: &Pi1Presentation, py: &Pi1Presentation) -> Result<IntMatrix> {
    let gy = py.generators.len();
    let mut cols = Vec::with_capacity(px.generators.len());
    for g in 0..px.generators.len() {
        let mut w = Word::empty();
        for (e, forward) in px.generator_loop(g) {
            let step = py.edge_word(f.images()[1][e]);
            w = w.concat(&if forward { step } else { step.inverse() });
        }
        cols.push(w.exponent_sums(gy).into_iter().map(Int::from).collect());
    }
    Ok(IntMatrix::from_columns(gy, &cols))
}

#[derive(Clone, Debug, Serialize)]
pub struct NaturalityReport {
    pub holds: bool,
    /// Generators `(i, c)` of `π₁(X)^{ab} ⊗ A` where the square fails.
    pub witness: Option<(usize, usize)>,
}

/// Checks `h_Y ∘ (π₁(f)^{ab} ⊗ 1) = H₁(f; A) ∘ h_X` on every generator.
pub fn naturality_check(f: &SMap, a: &AbGroup) -> Result<NaturalityReport> {
    let hx = hurewicz_h1(f.domain(), a)?;
    let hy = hurewicz_h1(f.codomain(), a)?;
    naturality_between(f, &hx, &hy)
}

pub fn naturality_between(f: &SMap, hx: &HurewiczReport, hy: &HurewiczReport) -> Result<NaturalityReport> {
    let g = hx.homology.coefficients().generators();
    let fab = pi1_ab_matrix(f, &hx.presentation, &hy.presentation)?;
    let left_leg = AbHom::new(
        hx.tensor.group.clone(),
        hy.tensor.group.clone(),
        fab.kron(&IntMatrix::identity(g)),
    )?;
    let h1f = induced_map(f, &hx.homology, &hy.homology)?;
    let left = hy.map.compose(&left_leg)?;
    let right = h1f.compose(&hx.map)?;
    for k in 0..hx.tensor.group.generators() {
        let e = hx.tensor.group.generator(k);
        if left.apply(&e)? != right.apply(&e)? {
            return Ok(NaturalityReport {
                holds: false,
                witness: Some((k / g.max(1), k % g.max(1))),
            });
        }
    }
    Ok(NaturalityReport {
        holds: true,
        witness: None,
    })
}

/// A `(space, coefficient)` label in a family of homomorphisms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CorpusKey {
    pub space: String,
    pub coeff: String,
}

impl CorpusKey {
    pub fn new(space: &str, coeff: &str) -> Self {
        CorpusKey {
            space: space.to_string(),
            coeff: coeff.to_string(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SignVerdict {
    Same,
    Negated,
    Neither { witness: CorpusKey },
}

/// Fixes the sign relating `G` to `F` at `(S¹, Z)` and checks it on every pair.
pub fn sign_rigidity_check(f: &[(CorpusKey, AbHom)], g: &[(CorpusKey, AbHom)]) -> Result<SignVerdict> {
    let base = CorpusKey::new("S1", "Z");
    let lookup = |family: &[(CorpusKey, AbHom)], key: &CorpusKey| {
        family.iter().find(|(k, _)| k == key).map(|(_, h)| h.clone())
    };
    let (Some(f0), Some(g0)) = (lookup(f, &base), lookup(g, &base)) else {
        return Err(Error::MissingBaseCase("(S1, Z)".into()));
    };
    let negate = if g0.equals(&f0) {
        false
    } else if g0.equals(&f0.neg()) {
        true
    } else {
        return Ok(SignVerdict::Neither { witness: base });
    };
    for (key, fk) in f {
        let gk = lookup(g, key).ok_or_else(|| Error::MissingBaseCase(format!("{key:?}")))?;
        let expected = if negate { fk.neg() } else { fk.clone() };
        if !gk.equals(&expected) {
            return Ok(SignVerdict::Neither { witness: key.clone() });
        }
    }
    Ok(if negate {
        SignVerdict::Negated
    } else {
        SignVerdict::Same
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sset::{circle, degree_collapse, klein_bottle, moore_space, sphere, torus, wedge};

    #[test]
    fn presentations() {
        let s1 = sphere(1, 2).unwrap();
        let p = pi1(&s1).unwrap();
        assert_eq!(p.group.generators(), 1);
        assert!(p.group.relators().is_empty());
        let w = wedge(&s1, &s1).unwrap();
        assert_eq!(pi1(&w.sset).unwrap().group.abelianization().group.to_string(), "Z^2");
        assert_eq!(pi1(&torus(2).unwrap()).unwrap().group.abelianization().group.to_string(), "Z^2");
        let m2 = moore_space(2, 2).unwrap();
        assert_eq!(pi1(&m2).unwrap().group.abelianization().group.to_string(), "Z/2");
        let c = circle(4, 2).unwrap();
        let p = pi1(&c).unwrap();
        assert_eq!((p.tree.len(), p.generators.len()), (3, 1));
        assert!(matches!(pi1(&sphere(0, 2).unwrap()), Err(Error::NotConnected)));
    }

    #[test]
    fn hurewicz_examples() {
        let h = hurewicz_h1(&sphere(1, 2).unwrap(), &AbGroup::integers()).unwrap();
        assert!(h.iso);
        let k = hurewicz_h1(&klein_bottle(2).unwrap(), &AbGroup::cyclic(2)).unwrap();
        assert!(k.iso);
        assert_eq!(k.homology.group().to_string(), "Z/2 + Z/2");
        let a = AbGroup::from_cyclic_orders(&[0, 3]);
        let t = hurewicz_h1(&torus(2).unwrap(), &a).unwrap();
        assert!(t.iso);
        assert_eq!(t.tensor.group.to_string(), "Z^2 + Z/3 + Z/3");
    }

    #[test]
    fn naturality_of_collapse() {
        for m in 1..=4 {
            let f = degree_collapse(m, 2).unwrap();
            assert!(naturality_check(&f, &AbGroup::integers()).unwrap().holds);
        }
    }

    #[test]
    fn tree_choice_does_not_matter() {
        let c = circle(5, 2).unwrap();
        let z = AbGroup::integers();
        let a = hurewicz_h1_with_rotation(&c, &z, 0).unwrap();
        let b = hurewicz_h1_with_rotation(&c, &z, 2).unwrap();
        assert_ne!(a.presentation.generators, b.presentation.generators);
        // both send the single generator to the fundamental class of the circle
        let ga = a.map.apply(&a.tensor.group.generator(0)).unwrap();
        let gb = b.map.apply(&b.tensor.group.generator(0)).unwrap();
        assert_eq!(ga, gb);
    }

    #[test]
    fn automorphisms_of_z_are_signs() {
        let z = AbGroup::integers();
        for k in -12i64..=12 {
            let h = AbHom::new(z.clone(), z.clone(), IntMatrix::from_rows(&[[k]])).unwrap();
            assert_eq!(h.is_iso().unwrap(), k == 1 || k == -1, "k = {k}");
        }
    }

    #[test]
    fn sign_verdicts() {
        let z = AbGroup::integers();
        let h = hurewicz_h1(&sphere(1, 2).unwrap(), &z).unwrap().map;
        let f = vec![(CorpusKey::new("S1", "Z"), h.clone())];
        let neg = vec![(CorpusKey::new("S1", "Z"), h.neg())];
        let dbl = vec![(CorpusKey::new("S1", "Z"), h.scale(&Int::from(2)))];
        assert_eq!(sign_rigidity_check(&f, &f).unwrap(), SignVerdict::Same);
        assert_eq!(sign_rigidity_check(&f, &neg).unwrap(), SignVerdict::Negated);
        assert_eq!(
            sign_rigidity_check(&f, &dbl).unwrap(),
            SignVerdict::Neither {
                witness: CorpusKey::new("S1", "Z")
            }
        );
        assert!(matches!(sign_rigidity_check(&[], &[]), Err(Error::MissingBaseCase(_))));
    }
}
