mod common;

use common::{abelian_groups_up_to, elements, gcd};
use hurewicz_core::abgroup::{seq_colimit, tensor};
use hurewicz_core::{AbElt, AbGroup, AbHom, Int, IntMatrix, SeqDiagramAb};

fn group(orders: &[u64]) -> AbGroup {
    AbGroup::from_cyclic_orders(orders)
}

fn mult(g: &AbGroup, k: i64) -> AbHom {
    let n = g.generators();
    AbHom::new(g.clone(), g.clone(), IntMatrix::identity(n).scale(&Int::from(k))).unwrap()
}

/// `|{x : d x = 0}|` by walking every element.
fn census(g: &AbGroup, d: i64) -> usize {
    g.elements().unwrap().iter().filter(|x| x.scale(&Int::from(d)).is_zero()).count()
}

#[test]
fn tensor_of_finite_groups_matches_gcd_table() {
    let groups = abelian_groups_up_to(12);
    for a in &groups {
        for b in &groups {
            let t = tensor(&group(a), &group(b)).group;
            // oracle: ⊕ Z/a_i ⊗ ⊕ Z/b_j = ⊕ Z/gcd(a_i, b_j)
            let gcds: Vec<i128> = a
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| gcd(x as i128, y as i128)))
                .collect();
            let order: i128 = gcds.iter().product();
            assert_eq!(t.order(), Some(Int::from(order)), "{a:?} (x) {b:?}");
            for d in 1..=12i128 {
                let expected: i128 = gcds.iter().map(|&g| gcd(g, d)).product();
                assert_eq!(census(&t, d as i64) as i128, expected, "{a:?} (x) {b:?}, d = {d}");
            }
        }
    }
}

#[test]
fn tensor_with_free_and_trivial() {
    let z2 = AbGroup::free(2);
    let z3 = group(&[3]);
    assert!(tensor(&z2, &z3).group.is_isomorphic(&group(&[3, 3])));
    assert!(tensor(&AbGroup::integers(), &z3).group.is_isomorphic(&z3));
    assert!(tensor(&AbGroup::trivial(), &z2).group.is_trivial());
    assert_eq!(tensor(&z2, &AbGroup::free(3)).group.to_string(), "Z^6");
    assert!(tensor(&group(&[2]), &group(&[3])).group.is_trivial());
}

#[test]
fn elementary_tensors_are_bilinear_and_generate() {
    for (a, b) in [(vec![4u64], vec![6u64]), (vec![2, 2], vec![4]), (vec![3], vec![3, 9])] {
        let (ga, gb) = (group(&a), group(&b));
        let tp = tensor(&ga, &gb);
        let ea = ga.elements().unwrap();
        let eb = gb.elements().unwrap();
        for x in &ea {
            for y in &eb {
                let xy = tp.elementary(x, y).unwrap();
                for x2 in &ea {
                    let lhs = tp.elementary(&(x + x2), y).unwrap();
                    assert_eq!(lhs, &xy + &tp.elementary(x2, y).unwrap());
                }
                for y2 in &eb {
                    let lhs = tp.elementary(x, &(y + y2)).unwrap();
                    assert_eq!(lhs, &xy + &tp.elementary(x, y2).unwrap());
                }
            }
        }
        // the subgroup generated by elementary tensors is everything
        let mut reached: Vec<AbElt> = vec![tp.group.zero()];
        let gens: Vec<AbElt> = ea
            .iter()
            .flat_map(|x| eb.iter().map(|y| tp.elementary(x, y).unwrap()))
            .collect();
        let mut frontier = reached.clone();
        while let Some(z) = frontier.pop() {
            for g in &gens {
                let w = &z + g;
                if !reached.contains(&w) {
                    reached.push(w.clone());
                    frontier.push(w);
                }
            }
        }
        assert_eq!(Int::from(reached.len()), tp.group.order().unwrap());
    }
}

#[test]
fn cyclic_tensor_is_initial_for_bilinear_maps() {
    // bilinear Z/m x Z/n -> C are determined by c = f(1, 1) with m c = n c = 0
    for (m, n) in [(4u64, 6u64), (2, 3), (6, 9), (5, 5)] {
        let t = tensor(&group(&[m]), &group(&[n])).group;
        for c in abelian_groups_up_to(12) {
            let gc = group(&c);
            let bilinear = elements(&c)
                .iter()
                .filter(|e| {
                    common::scale(&c, m as i64, e).iter().all(|&v| v == 0)
                        && common::scale(&c, n as i64, e).iter().all(|&v| v == 0)
                })
                .count();
            let homs = AbHom::enumerate(&t, &gc).unwrap().len();
            assert_eq!(homs, bilinear, "Z/{m} (x) Z/{n} -> {c:?}");
        }
    }
}

#[test]
fn kernels_and_cokernels_against_brute_force() {
    let z4 = group(&[4]);
    let (k, inc) = mult(&z4, 2).kernel().unwrap();
    assert_eq!(k.order(), Some(Int::from(2)));
    let image: Vec<AbElt> = k.elements().unwrap().iter().map(|x| inc.apply(x).unwrap()).collect();
    let brute: Vec<AbElt> = z4.elements().unwrap().into_iter().filter(|x| (x + x).is_zero()).collect();
    assert_eq!(image.len(), brute.len());
    assert!(image.iter().all(|x| brute.contains(x)));

    let z2 = AbGroup::free(2);
    let f = AbHom::new(z2.clone(), z2, IntMatrix::from_rows(&[[2, 0], [0, 3]])).unwrap();
    let (c, _) = f.cokernel().unwrap();
    // cyclic of order 6: exactly one element of order dividing d for d = 1, and six for d = 6
    assert_eq!(census(&c, 6), 6);
    assert_eq!(census(&c, 2), 2);
    assert_eq!(census(&c, 3), 3);
    assert_eq!(c.to_string(), "Z/6");
}

#[test]
fn homs_between_small_groups_count_correctly() {
    // |Hom(⊕ Z/a_i, ⊕ Z/b_j)| = ∏ gcd(a_i, b_j)
    let groups = abelian_groups_up_to(8);
    for a in &groups {
        for b in &groups {
            let homs = AbHom::enumerate(&group(a), &group(b)).unwrap();
            let expected: i128 = a
                .iter()
                .flat_map(|&x| b.iter().map(move |&y| gcd(x as i128, y as i128)))
                .product();
            assert_eq!(homs.len() as i128, expected, "{a:?} -> {b:?}");
        }
    }
}

#[test]
fn inverse_and_factoring() {
    let z6 = group(&[6]);
    let five = mult(&z6, 5);
    let inv = five.inverse().unwrap().unwrap();
    assert!(inv.compose(&five).unwrap().equals(&AbHom::identity(&z6)));
    assert!(mult(&z6, 2).inverse().unwrap().is_none());
    let z = AbGroup::integers();
    let two = mult(&z, 2);
    let four = mult(&z, 4);
    let u = two.factor_through(&four).unwrap();
    assert!(two.compose(&u).unwrap().equals(&four));
    assert!(u.equals(&two));
    assert!(four.factor_through(&two).is_err());
}

#[test]
fn colimits_of_eventually_constant_diagrams() {
    let z = AbGroup::integers();
    let z3 = group(&[3]);
    // Z --2--> Z --1--> Z --1--> Z
    let d = SeqDiagramAb::new(
        vec![z.clone(); 4],
        vec![mult(&z, 2), AbHom::identity(&z), AbHom::identity(&z)],
    )
    .unwrap();
    let c = seq_colimit(&d, 3).unwrap();
    assert_eq!(c.stage, 1);
    assert!(c.group.is_isomorphic(&z));
    assert!(c.cone_coherent(&d).unwrap());
    assert!(c.cones[0].equals(&mult(&z, 2)));

    // a compatible cocone factors uniquely
    let cocone = vec![mult(&z, 6), mult(&z, 3), mult(&z, 3), mult(&z, 3)];
    let u = c.factor(&d, &cocone).unwrap();
    for (leg, cone) in cocone.iter().zip(&c.cones) {
        assert!(u.compose(cone).unwrap().equals(leg));
    }
    let bad = vec![mult(&z, 1), mult(&z, 3), mult(&z, 3), mult(&z, 3)];
    assert!(c.factor(&d, &bad).is_err());

    // Z/3 with multiplication by 2 is an isomorphism at every stage
    let d = SeqDiagramAb::constant(&mult(&z3, 2), 5).unwrap();
    let c = seq_colimit(&d, 4).unwrap();
    assert_eq!(c.stage, 0);
    assert!(c.group.is_isomorphic(&z3));
    assert!(c.cone_coherent(&d).unwrap());

    // doubling on Z never stabilizes
    let d = SeqDiagramAb::constant(&mult(&z, 2), 4).unwrap();
    assert!(seq_colimit(&d, 3).is_err());
    // the window decides
    let d = SeqDiagramAb::new(
        vec![z.clone(); 4],
        vec![AbHom::identity(&z), AbHom::identity(&z), mult(&z, 2)],
    )
    .unwrap();
    assert!(seq_colimit(&d, 2).is_ok());
    assert!(seq_colimit(&d, 3).is_err());
}
