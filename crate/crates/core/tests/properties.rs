mod common;

use proptest::prelude::*;
use rand::seq::SliceRandom;

use common::orbit_dimension;
use gdq::algebra::{cartan_matrix, Algebra, Element};
use gdq::format::{parse_tq, presentation_to_tq};
use gdq::iso::fquiver_isomorphic;
use gdq::quiver::{FQuiver, Node, Quiver};
use gdq::random::{random_presentation, random_triangulation_quiver, rng_from_seed};

/// The same quiver with f′ under fresh, shuffled names.
fn relabel(fq: &FQuiver, seed: u64) -> FQuiver {
    let q = fq.quiver();
    let mut rng = rng_from_seed(seed);
    let mut vperm: Vec<usize> = (0..q.vertex_count()).collect();
    let mut aperm: Vec<usize> = (0..q.arrow_count()).collect();
    vperm.shuffle(&mut rng);
    aperm.shuffle(&mut rng);
    let vname = |v: usize| format!("v{:02}", vperm[v]);
    let aname = |a: usize| format!("x{:02}", aperm[a]);
    let arrows = (0..q.arrow_count()).map(|a| (aname(a), vname(q.source(a)), vname(q.target(a))));
    let nq = Quiver::new((0..q.vertex_count()).map(vname), arrows).unwrap();
    let cycles: Vec<Vec<String>> = fq
        .f_cycles()
        .iter()
        .map(|c| {
            c.iter()
                .map(|n| match n {
                    Node::Arrow(a) => aname(*a),
                    Node::Vertex(v) => vname(*v),
                })
                .collect()
        })
        .collect();
    FQuiver::from_cycles(nq, &cycles).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn g_is_a_permutation_and_f_has_no_two_cycles(seed in any::<u64>(), n in 2usize..=7) {
        let tq = random_triangulation_quiver(&mut rng_from_seed(seed), n);
        let m = tq.quiver().arrow_count();
        let mut hit = vec![false; m];
        for a in 0..m {
            prop_assert!(!std::mem::replace(&mut hit[tq.g(a)], true));
            prop_assert_eq!(tq.f(tq.f(tq.f(a))), a);
        }
        let census = tq.f_census();
        prop_assert_eq!(census.fixed + 3 * census.three_cycles, m);
        prop_assert_eq!(census.two_cycles, 0);
    }

    #[test]
    fn isomorphism_is_an_equivalence(seed in any::<u64>(), shuffle in any::<u64>()) {
        let p = random_presentation(&mut rng_from_seed(seed), 6, 2);
        let a = p.fquiver();
        let b = relabel(a, shuffle);
        prop_assert!(fquiver_isomorphic(a, a).is_some());
        let ab = fquiver_isomorphic(a, &b).expect("relabeled copy is isomorphic");
        let ba = fquiver_isomorphic(&b, a).expect("symmetric");
        prop_assert!(ab.is_valid(a, &b));
        prop_assert!(ba.is_valid(&b, a));
        for x in 0..a.quiver().arrow_count() {
            let transported = match a.next(x) {
                Node::Arrow(y) => Node::Arrow(ab.arrow_map[y]),
                Node::Vertex(v) => Node::Vertex(ab.vertex_map[v]),
            };
            prop_assert_eq!(b.next(ab.arrow_map[x]), transported);
        }
    }

    #[test]
    fn dimension_cartan_and_text_round_trip(seed in any::<u64>()) {
        let p = random_presentation(&mut rng_from_seed(seed), 6, 3);
        let alg = Algebra::new(p.clone());
        prop_assert_eq!(alg.dimension(), orbit_dimension(&p));
        prop_assert!(cartan_matrix(&p).is_symmetric());
        let text = presentation_to_tq(&p);
        let back = parse_tq(&text).unwrap().presentation(None).unwrap();
        prop_assert_eq!(presentation_to_tq(&back), text);
    }

    #[test]
    fn multiplication_is_associative_and_form_symmetric(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let p = loop {
            let p = random_presentation(&mut rng, 3, 2);
            if p.dimension_formula() <= 40 {
                break p;
            }
        };
        let alg = Algebra::new(p);
        let f = alg.field();
        let d = alg.dimension();
        let e = |i: usize| Element::basis(i, f);
        for i in 0..d {
            for j in 0..d {
                let ij = alg.multiply(&e(i), &e(j));
                prop_assert_eq!(alg.symmetrizing_form(&ij), alg.symmetrizing_form(&alg.multiply(&e(j), &e(i))));
                for k in 0..d {
                    let left = alg.multiply(&ij, &e(k));
                    let right = alg.multiply(&e(i), &alg.multiply(&e(j), &e(k)));
                    prop_assert_eq!(left, right);
                }
            }
        }
    }
}
