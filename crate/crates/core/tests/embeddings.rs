use std::collections::BTreeMap;

use liechain::characters::*;
use liechain::embeddings::*;
use liechain::rootsystem::build_root_datum;
use liechain::{Error, GroupType, RootDatum, Weight};
use num_bigint::BigInt;
use proptest::prelude::*;

fn g(s: &str) -> GroupType {
    s.parse().unwrap()
}

fn rd(s: &str) -> RootDatum {
    build_root_datum(&g(s)).unwrap()
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

fn nabla(s: &str, v: &[i64]) -> FormalCharacter {
    dual_weyl_character(&rd(s), &w(v)).unwrap()
}

fn step(sub: &str, tag: ClauseTag, amb: &str) -> EmbeddingStep {
    EmbeddingStep::new(g(sub), tag, g(amb))
}

// Multiset of weights, multiplicities expanded.
fn weights_of(chi: &FormalCharacter) -> BTreeMap<Weight, BigInt> {
    chi.iter().map(|(w, m)| (w.clone(), m.clone())).collect()
}

#[test]
fn levi_e8_e7_fundamental_weights() {
    let e8 = rd("E8");
    for (k, label) in [(7, "E7.T1"), (6, "E6.T2")] {
        let nodes: Vec<usize> = (0..k).collect();
        let (m, levi) = levi_map(&e8, &nodes).unwrap();
        assert_eq!(levi, g(label));
        // Semisimple part of the image of the first k fundamental weights:
        // exactly the k unit vectors.
        let mut seen: Vec<Weight> = (0..k)
            .map(|i| Weight(m.apply(&Weight::fundamental(8, i)).unwrap().0[..k].to_vec()))
            .collect();
        seen.sort();
        let mut units: Vec<Weight> = (0..k).map(|i| Weight::fundamental(k, i)).collect();
        units.sort();
        assert_eq!(seen, units);
    }
}

#[test]
fn levi_full_diagram_is_identity() {
    let (m, t) = levi_map(&rd("A2"), &[0, 1]).unwrap();
    assert_eq!(t, g("A2"));
    assert_eq!(m, WeightMap::identity(&g("A2")));
}

#[test]
fn levi_central_torus_pairs_to_zero_with_levi_roots() {
    // Restricting a root of the Levi must kill the torus coordinates.
    let e7 = rd("E7");
    let nodes = [0, 2, 3, 4];
    let (m, levi) = levi_map(&e7, &nodes).unwrap();
    let k = 4;
    assert_eq!(levi.rank(), 7);
    for &i in &nodes {
        let alpha = e7.root_to_weight(&(0..7).map(|j| i64::from(j == i)).collect::<Vec<_>>());
        let img = m.apply(&alpha).unwrap();
        assert!(img.0[k..].iter().all(|&x| x == 0), "{img}");
    }
}

#[test]
fn levi_rejects_bad_node() {
    assert!(matches!(levi_map(&rd("A2"), &[5]), Err(Error::BadIndex { .. })));
}

#[test]
fn diag_examples() {
    assert_eq!(diag_map(&g("A2"), 1), WeightMap::identity(&g("A2")));
    let m = diag_map(&g("A1"), 2);
    assert_eq!(m.apply(&w(&[3, 4])).unwrap(), w(&[7]));
    let v = nabla("A1", &[1]);
    let both = external_tensor(&v, &v);
    let res = restrict_character(&both, &m).unwrap();
    let expected = character_of_decomposition(
        &rd("A1"),
        &BTreeMap::from([(w(&[2]), BigInt::from(1)), (w(&[0]), BigInt::from(1))]),
    )
    .unwrap();
    assert_eq!(res, expected);
}

#[test]
fn folding_examples() {
    let m = folding_map(&g("A3"), &g("C2")).unwrap();
    assert_eq!(m.apply(&w(&[1, 0, 0])).unwrap(), w(&[1, 0]));
    assert_eq!(m.apply(&w(&[0, 0, 1])).unwrap(), w(&[1, 0]));
    let m = folding_map(&g("D4"), &g("G2")).unwrap();
    // Outer nodes 1, 3, 4 of D4 collapse onto one G2 node, the centre onto the other.
    let outer: Vec<Weight> = [0, 2, 3].iter().map(|&i| m.apply(&Weight::fundamental(4, i)).unwrap()).collect();
    assert!(outer.iter().all(|x| *x == outer[0]));
    assert_ne!(m.apply(&Weight::fundamental(4, 1)).unwrap(), outer[0]);
    let m = folding_map(&g("E6"), &g("F4")).unwrap();
    let mut images: Vec<Weight> = (0..6).map(|i| m.apply(&Weight::fundamental(6, i)).unwrap()).collect();
    images.sort();
    images.dedup();
    assert_eq!(images.len(), 4);
    assert!(matches!(folding_map(&g("A4"), &g("C2")), Err(Error::UnknownPair(..))));
}

// Adjoint characters (highest root) of the big group restrict to
// characters with a nonnegative dual Weyl decomposition.
#[test]
fn folding_adjoint_restrictions_are_good() {
    for (amb, sub, hw) in [
        ("A3", "C2", vec![1, 0, 1]),
        ("D4", "G2", vec![0, 1, 0, 0]),
        ("D5", "B4", vec![0, 1, 0, 0, 0]),
        ("A5", "C3", vec![1, 0, 0, 0, 1]),
        ("E6", "F4", vec![0, 1, 0, 0, 0, 0]),
    ] {
        let chi = nabla(amb, &hw);
        let m = folding_map(&g(amb), &g(sub)).unwrap();
        let res = restrict_character(&chi, &m).unwrap();
        assert_eq!(res.dim(), chi.dim());
        let d = decompose_dual_weyl(&rd(sub), &res).unwrap();
        assert!(d.exact, "{amb} -> {sub}: {:?}", d.terms);
    }
}

#[test]
fn classical_examples() {
    // Sp4 > Sp2 x Sp2: the natural module splits as a sum of the two naturals.
    let m = classical_map(&g("A1.A1"), &g("C2")).unwrap();
    let res = restrict_character(&nabla("C2", &[1, 0]), &m).unwrap();
    let mut expected = FormalCharacter::zero(g("A1.A1"));
    for x in [[1, 0], [-1, 0], [0, 1], [0, -1]] {
        expected.add_term(w(&x), BigInt::from(1));
    }
    assert_eq!(res, expected);

    // SO16 > SO3 x SO13: natural splits as 3 + 13.
    let m = classical_map(&g("B1.B6"), &g("D8")).unwrap();
    let res = restrict_character(&nabla("D8", &[1, 0, 0, 0, 0, 0, 0, 0]), &m).unwrap();
    let one = FormalCharacter::trivial(g("B1"));
    let one6 = FormalCharacter::trivial(g("B6"));
    let mut expected = external_tensor(&nabla("B1", &[2]), &one6);
    expected
        .add_scaled(&external_tensor(&one, &nabla("B6", &[1, 0, 0, 0, 0, 0])), &BigInt::from(1))
        .unwrap();
    assert_eq!(res, expected);

    // SO3 > SO2 is legal, but the spin weight of A1 has no integral image.
    assert!(matches!(classical_map(&g("T1"), &g("A1")), Err(Error::NoWeightMap(_))));
    assert!(matches!(classical_map(&g("G2"), &g("B3")), Err(Error::NotAClause4Instance(_))));
}

#[test]
fn sl2_does_not_contain_so2_as_a_class_step() {
    // SL2 > SO2 is excluded; the accepted T1 < A1 reading is SO3 > SO2.
    let a = analyze_step(&step("T1", ClauseTag::Class, "A1").with_p_gt(2));
    assert!(a.legal);
    assert!(a.reason.contains("class"));
    assert!(!analyze_step(&step("T1", ClauseTag::Class, "A1")).legal);
}

#[test]
fn resirr_natural_characters() {
    for n in 1..=7usize {
        let amb = format!("A{n}");
        let m = resirr_map(&g("A1"), &g(&amb)).unwrap();
        let mut hw = vec![0; n];
        hw[0] = 1;
        let res = restrict_character(&nabla(&amb, &hw), &m).unwrap();
        assert_eq!(weights_of(&res), weights_of(&nabla("A1", &[n as i64])));
    }
    let m = resirr_map(&g("A2"), &g("A7")).unwrap();
    let res = restrict_character(&nabla("A7", &[1, 0, 0, 0, 0, 0, 0]), &m).unwrap();
    assert_eq!(res, nabla("A2", &[1, 1]));
    let m = resirr_map(&g("G2"), &g("A6")).unwrap();
    let res = restrict_character(&nabla("A6", &[1, 0, 0, 0, 0, 0]), &m).unwrap();
    assert_eq!(res, nabla("G2", &[1, 0]));
    assert_eq!(res.dim(), BigInt::from(7));
    assert!(matches!(resirr_map(&g("A2"), &g("A6")), Err(Error::NotAClause6Instance(_))));
}

// Only the first tensor factor is kept, so the ambient natural module
// restricts to s copies of the subgroup's natural module.
#[test]
fn tensor_examples() {
    for (sub, amb, hw, nat, s) in [
        ("B1", "B4", vec![1, 0, 0, 0], vec![2], 3),
        ("C2", "D8", vec![1, 0, 0, 0, 0, 0, 0, 0], vec![1, 0], 4),
        ("C1", "D2", vec![1, 1], vec![1], 2),
        ("B2", "C5", vec![1, 0, 0, 0, 0], vec![1, 0], 2),
    ] {
        let m = tensor_map(&g(sub), &g(amb)).unwrap_or_else(|e| panic!("{sub} < {amb}: {e}"));
        let res = restrict_character(&nabla(amb, &hw), &m).unwrap();
        let mut expected = FormalCharacter::zero(g(sub));
        expected.add_scaled(&nabla(sub, &nat), &BigInt::from(s)).unwrap();
        assert_eq!(res, expected, "{sub} < {amb}");
    }
    assert!(matches!(tensor_map(&g("B2"), &g("B4")), Err(Error::NotAClause7Instance(_))));
}

#[test]
fn max_rank_examples() {
    assert_eq!(max_rank_step(&g("E8"), &g("A2.E6")).unwrap().p_min, 7);
    assert_eq!(max_rank_step(&g("E8"), &g("D8")).unwrap().p_min, 3);
    assert_eq!(max_rank_step(&g("G2"), &g("A1.A1~")).unwrap().p_min, 1);
    assert!(matches!(max_rank_step(&g("E7"), &g("A2.A5")), Err(Error::NotAClause5Instance(_))));
}

#[test]
fn max_rank_list_is_exact() {
    let listed: Vec<(&str, &str, u64)> = vec![
        ("E8", "A2.E6", 7),
        ("E8", "D8", 3),
        ("E8", "A1.E7", 3),
        ("E7", "A1.D6", 3),
        ("F4", "B4", 3),
        ("F4", "A3.A1", 5),
        ("G2", "A1.A1", 1),
        ("E8", "A1.A2.A5", 7),
        ("E8", "A3.D5", 7),
        ("E8", "A4.A4", 7),
    ];
    for (amb, sub, p) in &listed {
        let a = analyze_step(&step(sub, ClauseTag::Max, amb).with_p_gt(*p - 1));
        assert!(a.legal, "{sub} < {amb}: {}", a.reason);
        assert_eq!(a.p_required, *p);
        assert!(a.map.is_none());
    }
    // Other maximal-rank subsystems of exceptional groups are not accepted.
    for (amb, sub) in [
        ("E8", "A8"),
        ("E8", "E7.A1.T1"),
        ("E8", "A1.A7"),
        ("E8", "D4.D4"),
        ("E8", "E6.A1.A1"),
        ("E7", "A7"),
        ("E7", "A2.A5"),
        ("E7", "A1.A1.A1.D4"),
        ("E6", "A1.A5"),
        ("E6", "A2.A2.A2"),
        ("F4", "C3.A1"),
        ("F4", "A2.A2~"),
        ("F4", "D4"),
        ("G2", "A2"),
    ] {
        assert!(!analyze_step(&step(sub, ClauseTag::Max, amb).with_p_gt(100)).legal, "{sub} < {amb}");
    }
}

#[test]
fn next_prime_above_values() {
    let got: Vec<u64> = (0..12).map(next_prime_above).collect();
    assert_eq!(got, [2, 2, 3, 5, 5, 7, 7, 11, 11, 11, 11, 13]);
}

// Hand-written list of every accepted single-factor step in a small
// universe, with the prime bound each one needs.
const UNIVERSE: [&str; 21] = [
    "T1", "A1", "A2", "A3", "A4", "A5", "A6", "A7", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5",
    "G2", "F4", "E6", "E7", "E8",
];

const ACCEPTED: [(&str, &str); 6] = [
    ("diag", ""),
    ("auto", "B2<A3:1 B3<D4:1 B4<D5:1 C2<A3:1 C3<A5:1 C4<A7:1 G2<D4:1 F4<E6:1"),
    (
        "class",
        "T1<A1:3 T1<A3:3 T1<B2:3 T1<B3:3 T1<B4:3 T1<C2:3 T1<D4:3 T1<D5:3 \
         A1<A2:3 A1<A3:3 A1<B2:3 A1<B3:3 A1<B4:3 A1<C2:3 A1<D4:3 A1<D5:3 \
         A3<A5:3 A3<B3:3 A3<B4:3 A3<D4:3 A3<D5:3 \
         B2<A3:1 B2<A4:3 B2<B3:3 B2<B4:3 B2<D4:3 B2<D5:3 \
         B3<A6:3 B3<B4:3 B3<D4:3 B3<D5:3 B4<D5:3 \
         C2<A3:1 C2<A4:3 C2<B3:3 C2<B4:3 C2<D4:3 C2<D5:3 \
         C3<A5:1 C4<A7:1 D4<A7:3 D4<B4:3 D4<D5:3",
    ),
    (
        "tensor",
        "T1<A3:3 T1<B2:3 T1<C2:3 T1<C4:3 T1<D4:3 T1<D5:3 \
         A1<A3:3 A1<B2:3 A1<B4:3 A1<C2:3 A1<C3:3 A1<C4:3 A1<D4:3 \
         B2<C4:3 B2<D4:3 B2<D5:3 C2<C4:3 C2<D4:3 C2<D5:3",
    ),
    ("resirr", "A1<A1:2 A1<A2:3 A1<A3:5 A1<A4:5 A1<A5:7 A1<A6:7 A1<A7:11 A2<A7:5 G2<A6:5"),
    ("max", "B4<F4:3"),
];

#[test]
fn legality_accepts_exactly_the_listed_steps() {
    for (tag, list) in ACCEPTED {
        let tag: ClauseTag = tag.parse().unwrap();
        let expected: Vec<&str> = list.split_whitespace().collect();
        let mut got = Vec::new();
        for sub in UNIVERSE {
            for amb in UNIVERSE {
                let a = analyze_step(&step(sub, tag, amb).with_p_gt(100));
                if a.legal {
                    got.push(format!("{sub}<{amb}:{}", a.p_required));
                }
            }
        }
        assert_eq!(got, expected, "{tag}");
    }
}

#[test]
fn levi_accepts_exactly_the_subdiagrams() {
    let cases = [
        ("G2", "T1 A1 A1~ G2"),
        ("B3", "T1 A1 A2 B2 C2 A1.A1 B3"),
        ("C3", "T1 A1 A2 B2 C2 A1.A1 C3"),
        ("F4", "T1 A1 A1~ A2 A2~ B2 C2 B3 C3 F4 A1.A1~ A1.A2~ A2.A1~"),
        ("D4", "T1 A1 A2 A3 D4 A1.A1 A1.A1.A1"),
    ];
    let candidates = [
        "T1", "A1", "A1~", "A2", "A2~", "A3", "B2", "C2", "B3", "C3", "D4", "G2", "F4", "A1.A1",
        "A1.A1~", "A1.A2~", "A2.A1~", "A1.B2", "A1.C2", "A1.A1.A1", "A1.A1.A1.A1", "A2.A2",
    ];
    for (amb, list) in cases {
        let expected: Vec<&str> = list.split_whitespace().collect();
        let mut got: Vec<&str> = candidates
            .iter()
            .copied()
            .filter(|sub| analyze_step(&step(sub, ClauseTag::Levi, amb)).legal)
            .collect();
        let mut want = expected.clone();
        want.sort();
        got.sort();
        assert_eq!(got, want, "{amb}");
    }
    let a = analyze_step(&step("G2", ClauseTag::Levi, "E8"));
    assert!(!a.legal);
}

#[test]
fn block_steps_from_the_tables() {
    for (sub, tag, amb, p, legal) in [
        ("B1.B6", ClauseTag::Class, "D8", Some(2), true),
        ("B1.B6", ClauseTag::Class, "D8", None, false),
        ("G2", ClauseTag::Auto, "D4", None, true),
        ("A1.F4", ClauseTag::Auto, "A1.E6", None, true),
        ("A1.A1.A1.G2", ClauseTag::Auto, "A1.D2.D4", None, true),
        ("A1", ClauseTag::Diag, "A1.A1", None, true),
        ("G2", ClauseTag::Diag, "G2.G2.G2", None, true),
        ("A1.A1", ClauseTag::Diag, "A1.A1", None, false),
        ("B1", ClauseTag::Tensor, "B4", Some(2), true),
        ("C2", ClauseTag::Tensor, "D8", Some(2), true),
        ("A1", ClauseTag::Resirr, "A2", Some(2), true),
        ("A1", ClauseTag::Resirr, "A2", Some(1), false),
        ("B1.B1.B1.B3", ClauseTag::Class, "D8", Some(2), true),
        ("A1.E7", ClauseTag::Max, "E8", Some(2), true),
        ("B6", ClauseTag::Levi, "B1.B6", None, true),
        ("D3", ClauseTag::Alias, "A3", None, true),
        ("D3", ClauseTag::Alias, "B3", None, false),
    ] {
        let mut s = step(sub, tag, amb);
        if let Some(p) = p {
            s = s.with_p_gt(p);
        }
        let a = analyze_step(&s);
        assert_eq!(a.legal, legal, "{sub}{}{amb}: {}", s.arrow(), a.reason);
        if legal && tag != ClauseTag::Max {
            let m = a.map.as_ref().unwrap_or_else(|| panic!("{sub} -> {amb}: {:?}", a.map_note));
            assert_eq!((&m.source, &m.target), (&g(amb), &g(sub)));
        }
    }
}

#[test]
fn step_maps_preserve_goodness_of_small_modules() {
    // Restrict the fundamental modules along each step and decompose.
    for (sub, tag, amb, p) in [
        ("A1.A1.A1.G2", ClauseTag::Auto, "A1.D2.D4", 1),
        ("B1.B1.B1.B3", ClauseTag::Class, "D8", 2),
        ("A1.A1", ClauseTag::Class, "C2", 1),
        ("A1", ClauseTag::Diag, "A1.A1.A1", 1),
        ("A1.A2~", ClauseTag::Levi, "F4", 1),
        ("B1", ClauseTag::Tensor, "B4", 2),
    ] {
        let a = analyze_step(&step(sub, tag, amb).with_p_gt(p));
        let m = a.map.unwrap();
        let big = rd(amb);
        let small = rd(sub);
        for i in 0..big.rank() {
            let chi = dual_weyl_character(&big, &Weight::fundamental(big.rank(), i)).unwrap();
            let res = restrict_character(&chi, &m).unwrap();
            let d = decompose_dual_weyl(&small, &res).unwrap();
            assert!(d.exact, "{sub} < {amb}, fundamental {i}");
        }
    }
}

#[test]
fn compose_identity_and_mismatch() {
    let m = folding_map(&g("A3"), &g("C2")).unwrap();
    assert_eq!(compose(&WeightMap::identity(&g("A3")), &m).unwrap(), m);
    assert_eq!(compose(&m, &WeightMap::identity(&g("C2"))).unwrap(), m);
    assert!(matches!(compose(&m, &m), Err(Error::TypeMismatch(..))));
    assert!(matches!(
        restrict_character(&nabla("A2", &[1, 0]), &m),
        Err(Error::AmbientMismatch(..))
    ));
}

// G2 < D4 < B4 < F4 through the maps that exist: sequential and composed
// restriction agree and keep the dimension.
#[test]
fn chain_composition_agrees_with_sequential_restriction() {
    let m1 = classical_map(&g("D4"), &g("B4")).unwrap();
    let m2 = folding_map(&g("D4"), &g("G2")).unwrap();
    let chi = nabla("B4", &[1, 0, 0, 0]);
    let seq = restrict_character(&restrict_character(&chi, &m1).unwrap(), &m2).unwrap();
    let once = restrict_character(&chi, &compose(&m1, &m2).unwrap()).unwrap();
    assert_eq!(seq, once);
    assert_eq!(once.dim(), BigInt::from(9));
    let d = decompose_dual_weyl(&rd("G2"), &once).unwrap();
    assert_eq!(d.terms, BTreeMap::from([(w(&[1, 0]), BigInt::from(1)), (w(&[0, 0]), BigInt::from(2))]));
}

fn random_map(rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, cols), rows)
}

proptest! {
    #[test]
    fn compose_is_associative(a in random_map(3, 4), b in random_map(2, 3), c in random_map(2, 2)) {
        let m1 = WeightMap::new(g("A4"), g("A3"), a).unwrap();
        let m2 = WeightMap::new(g("A3"), g("A2"), b).unwrap();
        let m3 = WeightMap::new(g("A2"), g("B2"), c).unwrap();
        let left = compose(&compose(&m1, &m2).unwrap(), &m3).unwrap();
        let right = compose(&m1, &compose(&m2, &m3).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn restriction_preserves_dimension(a in random_map(2, 3), x in 0i64..3, y in 0i64..3, z in 0i64..2) {
        let m = WeightMap::new(g("A3"), g("A1.A1"), a).unwrap();
        let chi = nabla("A3", &[x, y, z]);
        let res = restrict_character(&chi, &m).unwrap();
        prop_assert_eq!(res.dim(), chi.dim());
    }
}
