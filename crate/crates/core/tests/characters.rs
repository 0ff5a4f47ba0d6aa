mod common;

use std::collections::BTreeMap;

use levi_weyl::{
    branching_multiplicities, decompose, dim_irreducible, irreducible_character,
    levi_from_root_subset, restrict_character, tensor_character, Character, Family, LeviSubalgebra,
    RootSystem, Weight,
};
use proptest::prelude::*;

fn rs(f: Family, n: usize) -> RootSystem {
    RootSystem::new(f, n).unwrap()
}

fn coords_of(g: &RootSystem, parts: Vec<(Weight, u64)>) -> BTreeMap<Vec<i64>, u64> {
    parts
        .into_iter()
        .map(|(w, m)| (g.fundamental_coords(&w).unwrap(), m))
        .collect()
}

fn tensor(g: &RootSystem, x: &[i64], y: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let cx = irreducible_character(g, &g.weight_from_fundamental(x).unwrap()).unwrap();
    let cy = irreducible_character(g, &g.weight_from_fundamental(y).unwrap()).unwrap();
    coords_of(
        g,
        decompose(g, &tensor_character(&cx, &cy).unwrap()).unwrap(),
    )
}

#[test]
fn small_characters() {
    let a1 = rs(Family::A, 1);
    let c = irreducible_character(&a1, &a1.weight_from_fundamental(&[2]).unwrap()).unwrap();
    assert_eq!(c.support_size(), 3);
    assert!(c.iter().all(|(_, m)| m == 1));

    let b3 = rs(Family::B, 3);
    let triv = irreducible_character(&b3, &b3.zero()).unwrap();
    assert_eq!(triv.mults().len(), 1);
    assert_eq!(triv.mult(&b3.zero()), 1);

    let a2 = rs(Family::A, 2);
    let adj = irreducible_character(&a2, &a2.weight_from_fundamental(&[1, 1]).unwrap()).unwrap();
    assert_eq!(adj.mass(), 8);
    assert_eq!(adj.mult(&a2.zero()), 2);
}

#[test]
fn dimensions() {
    let a1 = rs(Family::A, 1);
    for m in 0..6 {
        assert_eq!(
            dim_irreducible(&a1, &a1.weight_from_fundamental(&[m]).unwrap()).unwrap(),
            m as u64 + 1
        );
    }
    let b3 = rs(Family::B, 3);
    assert_eq!(
        dim_irreducible(&b3, &b3.fundamental_weights()[1]).unwrap(),
        21
    );
    let c2 = rs(Family::C, 2);
    assert_eq!(
        dim_irreducible(&c2, &c2.fundamental_weights()[1]).unwrap(),
        5
    );
}

#[test]
fn type_a_multiplicities_match_tableau_counts() {
    // λ = (3,1,0) of gl_3, i.e. 2ω1+ω2 of A2.
    let a2 = rs(Family::A, 2);
    let lam = a2.weight_from_fundamental(&[2, 1]).unwrap();
    let c = irreducible_character(&a2, &lam).unwrap();
    let shape = [3usize, 1];
    for content in [[3usize, 1, 0], [2, 2, 0], [2, 1, 1], [1, 1, 2], [0, 2, 2]] {
        let doubled: Vec<i64> = content.iter().map(|&x| 2 * x as i64).collect();
        let mu = common::lib_weight(&a2, &doubled);
        assert_eq!(c.mult(&mu), common::kostka(&shape, &content), "{content:?}");
    }
    // ω1+ω2+ω3 of A3 is the partition (3,2,1).
    let a3 = rs(Family::A, 3);
    let c = irreducible_character(&a3, &a3.weight_from_fundamental(&[1, 1, 1]).unwrap()).unwrap();
    for content in [[2usize, 2, 1, 1], [3, 1, 1, 1], [2, 1, 2, 1]] {
        let doubled: Vec<i64> = content.iter().map(|&x| 2 * x as i64).collect();
        assert_eq!(
            c.mult(&common::lib_weight(&a3, &doubled)),
            common::kostka(&[3, 2, 1], &content)
        );
    }
}

#[test]
fn tensor_products() {
    let a1 = rs(Family::A, 1);
    assert_eq!(
        tensor(&a1, &[2], &[2]),
        [(vec![4], 1), (vec![2], 1), (vec![0], 1)].into()
    );
    let a2 = rs(Family::A, 2);
    assert_eq!(
        tensor(&a2, &[1, 0], &[0, 1]),
        [(vec![1, 1], 1), (vec![0, 0], 1)].into()
    );
    let b3 = rs(Family::B, 3);
    let sum = irreducible_character(&b3, &b3.fundamental_weights()[0])
        .unwrap()
        .sum(&Character::trivial(&b3))
        .unwrap();
    assert_eq!(
        coords_of(&b3, decompose(&b3, &sum).unwrap()),
        [(vec![1, 0, 0], 1), (vec![0, 0, 0], 1)].into()
    );
    let c = irreducible_character(&b3, &b3.fundamental_weights()[2]).unwrap();
    let with_trivial = tensor_character(&c, &Character::trivial(&b3)).unwrap();
    assert_eq!(&with_trivial, &*c);
}

#[test]
fn restriction_to_a_levi() {
    let a2 = rs(Family::A, 2);
    let a = LeviSubalgebra::from_simple_indices(&a2, &[1]).unwrap();
    let b = branching_multiplicities(&a2, &a2.fundamental_weights()[0], &a).unwrap();
    assert_eq!(
        coords_of(a.system(), b.into_iter().collect()),
        [(vec![1], 1), (vec![0], 1)].into()
    );

    let full = LeviSubalgebra::from_simple_indices(&a2, &[1, 2]).unwrap();
    let lam = a2.weight_from_fundamental(&[2, 1]).unwrap();
    let b = branching_multiplicities(&a2, &lam, &full).unwrap();
    assert_eq!(
        coords_of(full.system(), b.into_iter().collect()),
        [(vec![2, 1], 1)].into()
    );

    let triv = restrict_character(&Character::trivial(&a2), &a).unwrap();
    assert_eq!(triv.mass(), 1);
    let roots: std::collections::BTreeSet<Weight> = a.roots().clone();
    assert!(levi_from_root_subset(&a2, &roots).is_ok());
}

fn system() -> impl Strategy<Value = (Family, usize)> {
    prop_oneof![
        (1usize..=3).prop_map(|n| (Family::A, n)),
        (2usize..=3).prop_map(|n| (Family::B, n)),
        (2usize..=3).prop_map(|n| (Family::C, n)),
        Just((Family::D, 3)),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn characters_are_invariant_and_sized((f, n) in system(), c in prop::collection::vec(0i64..=2, 3)) {
        let g = rs(f, n);
        let lam = g.weight_from_fundamental(&c[..n]).unwrap();
        let ch = irreducible_character(&g, &lam).unwrap();
        prop_assert!(ch.is_weyl_invariant(&g).unwrap());
        prop_assert_eq!(ch.mass(), common::weyl_dim(f, n, &c[..n]));
        prop_assert_eq!(ch.mult(&lam), 1);
    }

    #[test]
    fn tensor_mass_multiplies((f, n) in system(), x in prop::collection::vec(0i64..=1, 3), y in prop::collection::vec(0i64..=1, 3)) {
        let g = rs(f, n);
        let cx = irreducible_character(&g, &g.weight_from_fundamental(&x[..n]).unwrap()).unwrap();
        let cy = irreducible_character(&g, &g.weight_from_fundamental(&y[..n]).unwrap()).unwrap();
        let t = tensor_character(&cx, &cy).unwrap();
        prop_assert_eq!(t.mass(), cx.mass() * cy.mass());
        let parts = decompose(&g, &t).unwrap();
        let top = g.add(&g.weight_from_fundamental(&x[..n]).unwrap(), &g.weight_from_fundamental(&y[..n]).unwrap());
        prop_assert!(parts.iter().any(|(w, m)| *w == top && *m == 1));
        let total: u64 = parts.iter().map(|(w, m)| m * dim_irreducible(&g, w).unwrap()).sum();
        prop_assert_eq!(total, t.mass());
    }
}
