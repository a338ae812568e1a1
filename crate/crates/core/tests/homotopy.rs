use hurewicz_core::chain::{homology, is_n_connected_certificate};
use hurewicz_core::corpus;
use hurewicz_core::homotopy::{
    hurewicz_h1, hurewicz_h1_with_rotation, naturality_between, naturality_check, pi1, pi1_with_rotation,
    sign_rigidity_check, CorpusKey, SignVerdict,
};
use hurewicz_core::{AbGroup, AbHom, SMap};

const CONNECTED: &[&str] = &["S1", "S2", "C5", "torus", "klein", "RP2", "M3", "M4", "S1vS1", "genus2", "B2", "B3", "Delta2"];

fn coefficients() -> Vec<AbGroup> {
    ["Z", "Z/2", "Z/3", "Z/4", "Z + Z/6"].iter().map(|s| corpus::parse_group(s).unwrap()).collect()
}

#[test]
fn fundamental_groups_of_the_corpus() {
    for (name, ab) in [
        ("S1", "Z"),
        ("S2", "0"),
        ("C5", "Z"),
        ("torus", "Z^2"),
        ("klein", "Z + Z/2"),
        ("RP2", "Z/2"),
        ("M3", "Z/3"),
        ("S1vS1", "Z^2"),
        ("genus2", "Z^4"),
        ("B3", "Z/3"),
        ("Delta2", "0"),
    ] {
        let x = corpus::space(name, 2).unwrap();
        let p = pi1(&x).unwrap();
        assert_eq!(p.group.abelianization().group.to_string(), ab, "{name}");
        // tree plus generators account for every edge
        assert_eq!(p.tree.len() + p.generators.len(), x.count(1), "{name}");
        assert_eq!(p.tree.len() + 1, x.count(0), "{name}");
    }
    for name in ["S2", "Delta2", "S3"] {
        let x = corpus::space(name, 3).unwrap();
        assert!(pi1(&x).unwrap().group.prove_trivial().is_some(), "{name}");
    }
    let w = pi1(&corpus::space("S1vS1", 2).unwrap()).unwrap();
    assert!(w.group.relators().is_empty());
}

#[test]
fn hurewicz_is_an_isomorphism_on_the_corpus() {
    for name in CONNECTED {
        let x = corpus::space(name, 2).unwrap();
        for a in coefficients() {
            let h = hurewicz_h1(&x, &a).unwrap();
            assert!(h.iso, "{name} with {a}");
            let inv = h.inverse.as_ref().unwrap();
            assert!(inv.compose(&h.map).unwrap().equals(&AbHom::identity(&h.tensor.group)));
            assert!(h.homology.group().is_isomorphic(&homology(&x, &a, 1, true).unwrap()));
            for chain in &h.generator_images {
                assert!(h.homology.is_cycle(chain), "{name}");
            }
        }
    }
}

#[test]
fn hurewicz_does_not_depend_on_the_spanning_tree() {
    for name in CONNECTED {
        let x = corpus::space(name, 2).unwrap();
        let edges = x.count(1).max(1);
        for a in [AbGroup::integers(), AbGroup::cyclic(6)] {
            let h0 = hurewicz_h1(&x, &a).unwrap();
            for r in 1..edges.min(6) {
                let hr = hurewicz_h1_with_rotation(&x, &a, r).unwrap();
                assert!(hr.iso);
                assert!(hr.abelianization.is_isomorphic(&h0.abelianization));
                // the identity intertwines the two maps through the change of tree
                let id = SMap::identity(&x);
                assert!(naturality_between(&id, &h0, &hr).unwrap().holds, "{name} rotation {r}");
                assert!(naturality_between(&id, &hr, &h0).unwrap().holds, "{name} rotation {r}");
            }
        }
    }
    // different rotations really do pick different trees
    let x = corpus::space("C5", 2).unwrap();
    let trees: Vec<Vec<usize>> = (0..5).map(|r| pi1_with_rotation(&x, r).unwrap().tree).collect();
    assert!(trees.iter().any(|t| t != &trees[0]));
}

#[test]
fn hurewicz_is_natural_for_corpus_maps() {
    for m in corpus::maps(2).unwrap() {
        for a in coefficients() {
            let r = naturality_check(&m.map, &a).unwrap();
            assert!(r.holds, "{} with {a}: {:?}", m.name, r.witness);
        }
    }
}

#[test]
fn connectivity_certificates() {
    let s2 = corpus::space("S2", 2).unwrap();
    let r = is_n_connected_certificate(&s2, 1).unwrap();
    assert!(r.certified && r.homology_vanishes && r.pi1_trivial == Some(true));
    let s1 = corpus::space("S1", 2).unwrap();
    assert!(!is_n_connected_certificate(&s1, 1).unwrap().certified);
    assert!(is_n_connected_certificate(&s1, 0).unwrap().certified);
    let s0 = corpus::space("S0", 2).unwrap();
    assert!(is_n_connected_certificate(&s0, 0).is_err());
}

#[test]
fn sign_rigidity_verdicts() {
    let family = |negate: bool| -> Vec<(CorpusKey, AbHom)> {
        ["S1", "torus", "M3"]
            .iter()
            .flat_map(|&name| {
                coefficients().into_iter().take(3).map(move |a| {
                    let h = hurewicz_h1(&corpus::space(name, 2).unwrap(), &a).unwrap().map;
                    (CorpusKey::new(name, &a.to_string()), if negate { h.neg() } else { h })
                })
            })
            .collect()
    };
    let f = family(false);
    let g = family(true);
    assert_eq!(sign_rigidity_check(&f, &f).unwrap(), SignVerdict::Same);
    assert_eq!(sign_rigidity_check(&f, &g).unwrap(), SignVerdict::Negated);
    // agree at the base case but flip elsewhere
    let mut mixed = f.clone();
    let last = mixed.len() - 1;
    mixed[last].1 = mixed[last].1.scale(&hurewicz_core::Int::from(2));
    assert!(matches!(sign_rigidity_check(&f, &mixed).unwrap(), SignVerdict::Neither { .. }));
    assert!(sign_rigidity_check(&f[1..], &g[1..]).is_err());
}
