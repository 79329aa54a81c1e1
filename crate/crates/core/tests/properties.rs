use proptest::prelude::*;

use ordered_hopf::ground::{descent_composition, naturalize, naturalize_shuffled};
use ordered_hopf::hopf::{ogp_antipode_formula_unchecked, takeuchi_antipode, OgpBasis};
use ordered_hopf::{Gp, LinearOrder, OgpMonoid, Preposet, Rational, ScropeComplex, SetFn, Subset};

/// Minkowski sum `Σ c_S Δ_S` of simplices, given by the support
/// `z(T) = Σ c_S [T ∩ S ≠ ∅]`.
fn minkowski(n: usize, summands: &[(u32, i64)]) -> Gp {
    let g = Subset::full(n);
    let z = SetFn::from_fn(g, |t| {
        let v: i64 = summands
            .iter()
            .filter(|(s, _)| Subset(*s).intersection(g).intersection(t).bits() != 0)
            .map(|(_, c)| c)
            .sum();
        Rational::from_integer(v)
    });
    Gp::new(z).expect("sums of simplices are generalized permutahedra")
}

fn order(n: usize) -> impl Strategy<Value = LinearOrder> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|w| LinearOrder::new(w).unwrap())
}

fn gp_and_order() -> impl Strategy<Value = (Gp, LinearOrder)> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let summand = (1u32..(1 << n), 1i64..3);
            (Just(n), prop::collection::vec(summand, 1..4))
        })
        .prop_flat_map(|(n, summands)| (Just(minkowski(n, &summands)), order(n)))
}

fn interval_system() -> impl Strategy<Value = ScropeComplex> {
    (2usize..=12).prop_flat_map(|k| {
        prop::collection::vec((1..k, 1..=k), 0..6).prop_map(move |raw| {
            let intervals: Vec<(usize, usize)> = raw.into_iter().filter(|(x, y)| x < y).collect();
            ScropeComplex::normalize(k, &intervals).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn formula_matches_oracle((p, w) in gp_and_order()) {
        let formula = ogp_antipode_formula_unchecked(&w, &p, 7).unwrap();
        let oracle = takeuchi_antipode(&OgpMonoid::new(), &OgpBasis::new(w.clone(), p.clone()).unwrap(), 7).unwrap();
        prop_assert_eq!(&formula.sum, &oracle);
        let v = p.greedy_vertex(&w).unwrap();
        prop_assert!(formula.terms.iter().all(|t| (-1..=1).contains(&t.coeff) && t.face.contains_point(&v)));
    }

    #[test]
    fn support_is_tight_and_greedy_vertices_lie_in_p((p, w) in gp_and_order()) {
        prop_assert_eq!(&p.recanonicalized(), p.support());
        prop_assert!(p.contains_point(&p.greedy_vertex(&w).unwrap()));
        prop_assert!(p.dim() < p.ground().len().max(1));
    }

    #[test]
    fn scrope_euler_is_bounded_and_algorithms_agree(s in interval_system()) {
        let a = s.reduced_euler_inclusion_exclusion();
        prop_assert_eq!(a, s.reduced_euler_direct());
        prop_assert!((-1..=1).contains(&a));
    }

    #[test]
    fn descent_blocks_count_descents((w, u) in (1usize..=8).prop_flat_map(|n| (order(n), order(n)))) {
        let d = descent_composition(&w, &u).unwrap();
        prop_assert_eq!(d.len(), 1 + w.descents_relative_to(&u));
        prop_assert_eq!(descent_composition(&w, &w).unwrap().len(), 1);
    }

    #[test]
    fn naturalization_is_confluent(
        (w, pairs) in (2usize..=7).prop_flat_map(|n| (order(n), prop::collection::vec((0..n, 0..n), 0..8))),
        seed in any::<u64>(),
    ) {
        let q = Preposet::from_relations(w.ground(), pairs).unwrap();
        let nat = naturalize(&q, &w).unwrap();
        prop_assert!(nat.is_natural(&w));
        prop_assert_eq!(naturalize_shuffled(&q, &w, seed).unwrap(), nat.clone());
        prop_assert_eq!(naturalize(&nat, &w).unwrap(), nat);
    }
}
