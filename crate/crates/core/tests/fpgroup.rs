mod common;

use common::{abelian_groups_up_to, add, elements, scale};
use hurewicz_core::{AbGroup, AbHom, FpGroup, Int, Word};

/// Evaluates a word letter by letter in `⊕ Z/orders` with generator values `vals`.
fn evaluate(orders: &[u64], vals: &[Vec<u64>], w: &Word) -> Vec<u64> {
    w.letters().iter().fold(vec![0; orders.len()], |acc, l| {
        let v = if l.inverse { scale(orders, -1, &vals[l.gen]) } else { vals[l.gen].clone() };
        add(orders, &acc, &v)
    })
}

/// All assignments of generators to elements that kill every relator.
fn brute_homs(g: &FpGroup, orders: &[u64]) -> Vec<Vec<Vec<u64>>> {
    let elts = elements(orders);
    let mut out = Vec::new();
    let mut choice = vec![0usize; g.generators()];
    loop {
        let vals: Vec<Vec<u64>> = choice.iter().map(|&c| elts[c].clone()).collect();
        if g.relators().iter().all(|r| evaluate(orders, &vals, r).iter().all(|&x| x == 0)) {
            out.push(vals);
        }
        let mut k = choice.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < elts.len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn presentations() -> Vec<(&'static str, FpGroup)> {
    [
        ("free2", "< a, b | >"),
        ("Z/6", "< x | x^6 >"),
        ("Z/2 x Z/4", "< a, b | a^2, b^4, a b a^-1 b^-1 >"),
        ("quaternion", "< i, j | i^2 j^-2, i j i^-1 j >"),
        ("trefoil", "< x, y | x y x y^-1 x^-1 y^-1 >"),
        ("S3", "< s, t | s^2, t^3, s t s^-1 t >"),
        ("klein", "< a, b | a b a^-1 b >"),
        ("three", "< x, y, z | x^2 y^-3, y z^2 >"),
    ]
    .into_iter()
    .map(|(n, s)| (n, FpGroup::parse(s).unwrap()))
    .collect()
}

#[test]
fn named_abelianizations() {
    let want = [
        ("free2", "Z^2"),
        ("Z/6", "Z/6"),
        ("Z/2 x Z/4", "Z/2 + Z/4"),
        ("quaternion", "Z/2 + Z/2"),
        ("trefoil", "Z"),
        ("S3", "Z/2"),
        ("klein", "Z + Z/2"),
    ];
    let groups = presentations();
    for (name, text) in want {
        let g = &groups.iter().find(|(n, _)| *n == name).unwrap().1;
        assert_eq!(g.abelianization().group.to_string(), text, "{name}");
    }
}

#[test]
fn eta_is_additive_and_kills_relators() {
    for (name, g) in presentations() {
        let ab = g.abelianization();
        for r in g.relators() {
            assert!(ab.eta(r).unwrap().is_zero(), "{name}");
        }
        let n = g.generators() as i64;
        let words: Vec<Word> = [
            vec![1],
            vec![-1, 1],
            vec![1, 1, -1],
            vec![n, 1, -n],
            vec![1, n, n],
        ]
        .iter()
        .map(|w| Word::from_signed(w))
        .collect();
        for u in &words {
            for v in &words {
                let lhs = ab.eta(&u.concat(v)).unwrap();
                assert_eq!(lhs, &ab.eta(u).unwrap() + &ab.eta(v).unwrap(), "{name}");
            }
            assert_eq!(ab.eta(&u.inverse()).unwrap(), -&ab.eta(u).unwrap());
        }
    }
}

#[test]
fn abelianization_is_initial() {
    // homomorphisms from G to a finite abelian C correspond to those from G^ab,
    // each through η
    for (name, g) in presentations() {
        let ab = g.abelianization();
        for c in abelian_groups_up_to(8) {
            let gc = AbGroup::from_cyclic_orders(&c);
            let brute = brute_homs(&g, &c);
            let homs = AbHom::enumerate(&ab.group, &gc).unwrap();
            assert_eq!(homs.len(), brute.len(), "{name} -> {c:?}");
            for h in &homs {
                let vals: Vec<Vec<u64>> = (0..g.generators())
                    .map(|i| {
                        let x = h.apply(&ab.eta(&Word::from_signed(&[i as i64 + 1])).unwrap()).unwrap();
                        x.normal_coords().iter().map(|v| u64::try_from(v.clone()).unwrap()).collect()
                    })
                    .collect();
                assert!(brute.iter().any(|b| normalized(&gc, b) == vals), "{name} -> {c:?}");
            }
        }
    }
}

/// Brute-force values rewritten in the normal coordinates of `gc`.
fn normalized(gc: &AbGroup, vals: &[Vec<u64>]) -> Vec<Vec<u64>> {
    vals.iter()
        .map(|v| {
            let coords: Vec<Int> = v.iter().map(|&x| Int::from(x)).collect();
            let e = gc.elt(coords).unwrap();
            e.normal_coords().iter().map(|x| u64::try_from(x.clone()).unwrap()).collect()
        })
        .collect()
}

#[test]
fn parse_errors_and_round_trip() {
    assert!(FpGroup::parse("< x | y >").is_err());
    assert!(FpGroup::parse("< x | x^ >").is_err());
    for (_, g) in presentations() {
        let again = FpGroup::parse(&g.to_string()).unwrap();
        assert_eq!(again.relators(), g.relators());
        assert_eq!(again.names(), g.names());
    }
}

#[test]
fn triviality_proofs() {
    let g = FpGroup::parse("< a, b | a b^-1, b >").unwrap();
    assert!(g.prove_trivial().is_some());
    assert!(g.abelianization().group.is_trivial());
    let z = FpGroup::parse("< a | >").unwrap();
    assert!(z.prove_trivial().is_none());
}
