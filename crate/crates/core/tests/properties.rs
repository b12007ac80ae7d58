use std::collections::BTreeSet;

use proptest::prelude::*;
use unimap::arith::divisors;
use unimap::autgroup::{aut_data, aut_period, are_equivalent, canonical_form};
use unimap::census::{generate_commuting, nu, nu_mobius, CommuterSpecs};
use unimap::classify::classify_edge_transitive;
use unimap::maps::OneVertexMap;
use unimap::perm::Permutation;
use unimap::riemann::{mu, rh_genus, Signature};

fn perm(max_degree: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_degree).prop_flat_map(perm_of_degree)
}

fn perm_of_degree(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::from_images(v).unwrap())
}

fn free_involution(k: usize) -> impl Strategy<Value = Permutation> {
    Just((0..2 * k).collect::<Vec<_>>()).prop_shuffle().prop_map(move |v| {
        let mut images = vec![0; 2 * k];
        for pair in v.chunks(2) {
            images[pair[0]] = pair[1];
            images[pair[1]] = pair[0];
        }
        Permutation::from_images(images).unwrap()
    })
}

fn one_vertex_map(max_k: usize) -> impl Strategy<Value = OneVertexMap> {
    (1..=max_k).prop_flat_map(|k| free_involution(k).prop_map(move |y| OneVertexMap::new(k, y).unwrap()))
}

fn same_degree_triple(max_degree: usize) -> impl Strategy<Value = (Permutation, Permutation, Permutation)> {
    (1..=max_degree).prop_flat_map(|n| (perm_of_degree(n), perm_of_degree(n), perm_of_degree(n)))
}

proptest! {
    #[test]
    fn cycle_notation_round_trips(g in perm(20)) {
        let text = g.to_string();
        let back = unimap::perm::parse_cycles(&text, g.degree()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn composition_is_associative((a, b, c) in same_degree_triple(12)) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn inverse_and_powers(g in perm(15), m in -20i64..20, n in -20i64..20) {
        prop_assert!(g.compose(&g.inverse()).unwrap().is_identity());
        prop_assert_eq!(g.power(m).compose(&g.power(n)).unwrap(), g.power(m + n));
    }

    #[test]
    fn conjugation_preserves_cycle_type((g, h, _) in same_degree_triple(14)) {
        let c = g.conjugate(&h).unwrap();
        prop_assert_eq!(c.cycle_type(), g.cycle_type());
        let direct = h.inverse().compose(&g).unwrap().compose(&h).unwrap();
        prop_assert_eq!(c, direct);
    }

    #[test]
    fn free_involutions_have_all_two_cycles(y in (1usize..10).prop_flat_map(free_involution)) {
        prop_assert!(y.is_free_involution());
        prop_assert_eq!(y.cycle_type(), vec![2; y.degree() / 2]);
    }

    #[test]
    fn aut_period_divides_and_orbit_has_period_size(m in one_vertex_map(9)) {
        let d = aut_data(&m);
        prop_assert_eq!((2 * m.k()) % d.period, 0);
        prop_assert_eq!(d.order * d.period, 2 * m.k());
        prop_assert_eq!(d.orbit.iter().collect::<BTreeSet<_>>().len(), d.period);
        let x = m.x();
        let xp = x.power(d.period as i64);
        prop_assert!(xp.commutes_with(m.y()).unwrap());
    }

    #[test]
    fn equivalence_is_an_equivalence(m in one_vertex_map(8), s in 0i64..16, r in 0i64..16) {
        let x = m.x();
        let m1 = OneVertexMap::new(m.k(), m.y().conjugate(&x.power(s)).unwrap()).unwrap();
        let m2 = OneVertexMap::new(m.k(), m1.y().conjugate(&x.power(r)).unwrap()).unwrap();
        prop_assert!(are_equivalent(&m, &m).unwrap());
        prop_assert!(are_equivalent(&m, &m1).unwrap());
        prop_assert!(are_equivalent(&m1, &m).unwrap());
        prop_assert!(are_equivalent(&m1, &m2).unwrap());
        prop_assert!(are_equivalent(&m, &m2).unwrap());
        prop_assert_eq!(canonical_form(&m), canonical_form(&m2));
        prop_assert_eq!(aut_period(&m), aut_period(&m2));
        prop_assert_eq!(m.profile(), m2.profile());
        let c = canonical_form(&m);
        prop_assert_eq!(canonical_form(&c), c);
    }

    #[test]
    fn euler_genus_is_consistent(m in one_vertex_map(10)) {
        let p = m.profile();
        prop_assert_eq!(p.vertices, 1);
        prop_assert_eq!(p.edges, m.k());
        prop_assert_eq!(p.vertices + p.faces + 2 * p.genus as usize, p.edges + 2);
    }

    #[test]
    fn inclusion_exclusion_matches_mobius(k in 1usize..40, pick in any::<prop::sample::Index>()) {
        let ds = divisors(2 * k as u64);
        let p = ds[pick.index(ds.len())] as usize;
        prop_assert_eq!(nu(k, p).unwrap(), nu_mobius(k, p).unwrap());
    }

    #[test]
    fn signature_equality_ignores_order(a in 2u64..30, b in 2u64..30, c in 2u64..30) {
        prop_assert_eq!(Signature::triangle(a, b, c), Signature::triangle(c, a, b));
        prop_assert_eq!(mu(&Signature::triangle(a, b, c)), mu(&Signature::triangle(b, c, a)));
    }

    #[test]
    fn classification_is_reflection_invariant(k in 2u64..200, t_seed in any::<u64>()) {
        let t = t_seed % k;
        prop_assume!(!(k % 2 == 1 && 2 * t == k - 1));
        let a = classify_edge_transitive(k, t).unwrap();
        let b = classify_edge_transitive(k, k - 1 - t).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(rh_genus(k, &a.signature).unwrap(), a.genus);
        if let Some(aut) = &a.aut_surface {
            prop_assert_eq!(aut.order, a.aut_map_order * a.chain_index());
        }
    }
}

#[test]
fn distinct_specs_give_distinct_involutions() {
    for k in 1..=5usize {
        for p in divisors(2 * k as u64) {
            let specs: Vec<_> = CommuterSpecs::new(k, p as usize).unwrap().collect();
            let ys: BTreeSet<_> = specs.iter().map(|s| s.realize().unwrap()).collect();
            assert_eq!(ys.len(), specs.len(), "k = {k}, p = {p}");
            let generated: BTreeSet<_> = generate_commuting(k, p as usize).unwrap().collect();
            assert_eq!(generated, ys);
        }
    }
}
