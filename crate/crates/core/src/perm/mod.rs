//! Permutation groups: stabilizer chains, subgroup constructions,
//! quotients and homomorphisms.
//!
//! Groups coming out of coset enumeration act regularly, so they and all
//! their subgroups act semiregularly. Such groups are flagged at
//! construction and handled through a single Schreier tree, with elements
//! named by the image of point 0. Arbitrary groups fall back to
//! Schreier-Sims.

mod group;
mod hom;
mod orbit;
mod permutation;
mod subgroup;

pub use group::{PermGroup, RegularCopy, ELEMENT_THRESHOLD, REGULAR_COPY_LIMIT};
pub(crate) use group::Arith;
pub use hom::{hom_kernel, Homomorphism};
pub use permutation::Permutation;
pub(crate) use subgroup::Builder;
pub use subgroup::{
    agemo, center, check_normal, closure, commutator_subgroup, element_order, gamma,
    group_exponent, is_normal, iterated_commutator, lower_central_series, normal_closure,
    omega, quotient,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{regular_group, DEFAULT_MAX_COSETS};
    use crate::presentation::{catalog_group, GroupSpec};
    use proptest::prelude::*;

    fn group(spec: &str) -> PermGroup {
        let spec: GroupSpec = spec.parse().unwrap();
        regular_group(&catalog_group(&spec).unwrap(), DEFAULT_MAX_COSETS).unwrap()
    }

    fn orders(series: &[PermGroup]) -> Vec<u64> {
        series.iter().map(PermGroup::order).collect()
    }

    /// All elements of a small group as permutations, by closure.
    fn brute_elements(g: &PermGroup) -> Vec<Permutation> {
        let mut seen = std::collections::BTreeSet::new();
        let mut todo = vec![Permutation::identity(g.degree())];
        while let Some(x) = todo.pop() {
            if seen.insert(x.clone()) {
                for s in g.generators() {
                    todo.push(&x * s);
                }
            }
        }
        seen.into_iter().collect()
    }

    #[test]
    fn dihedral_sixteen_regular() {
        let g = group("dihedral:16");
        assert_eq!(g.order(), 16);
        assert_eq!(group_exponent(&g).unwrap(), 8);
    }

    #[test]
    fn exponents() {
        assert_eq!(group_exponent(&group("dihedral:8")).unwrap(), 4);
        assert_eq!(group_exponent(&group("extraspecial:3,p")).unwrap(), 3);
        assert_eq!(group_exponent(&group("cyclic:9")).unwrap(), 9);
    }

    #[test]
    fn normal_closure_of_rotation_square_is_center() {
        let g = group("dihedral:8");
        let a2 = g.generators()[0].pow(2);
        let n = normal_closure(&g, &[a2]);
        assert_eq!(n.order(), 2);
        // brute force: the center of D8 has order 2 and contains a^2
        let els = brute_elements(&g);
        let z: Vec<_> = els
            .iter()
            .filter(|x| els.iter().all(|y| (*x * y) == (y * *x)))
            .collect();
        assert_eq!(z.len(), 2);
        assert!(z.iter().all(|x| n.contains(x)));
        assert!(normal_closure(&g, &[]).is_trivial());
    }

    #[test]
    fn closure_of_disjoint_transpositions() {
        let a = Permutation::from_cycles(4, &[&[1, 2]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[3, 4]]).unwrap();
        let g = PermGroup::new(4, vec![a]).unwrap();
        assert_eq!(closure(&g, &[b]).order(), 4);
    }

    #[test]
    fn derived_subgroup_of_dihedral_sixteen() {
        let g = group("dihedral:16");
        let d = commutator_subgroup(&g, &g);
        assert_eq!(d.order(), 4);
        assert_eq!(group_exponent(&d).unwrap(), 4);
        let els = brute_elements(&g);
        let mut comms = std::collections::BTreeSet::new();
        for x in &els {
            for y in &els {
                comms.insert(x.commutator(y));
            }
        }
        assert!(comms.iter().all(|c| d.contains(c)));
        assert!(commutator_subgroup(&g, &g.trivial_like()).is_trivial());
    }

    #[test]
    fn lower_central_series_examples() {
        assert_eq!(orders(&lower_central_series(&group("dihedral:16"))), [16, 4, 2, 1]);
        assert_eq!(orders(&lower_central_series(&group("elemab:3,2"))), [9, 1]);
        assert_eq!(orders(&lower_central_series(&group("extraspecial:3,p"))), [27, 3, 1]);
    }

    #[test]
    fn agemo_examples() {
        assert!(agemo(&group("elemab:2,3"), 2, 1).unwrap().is_trivial());
        let d16 = group("dihedral:16");
        let a = agemo(&d16, 2, 1).unwrap();
        assert_eq!(a.order(), 4);
        assert!(a.same_as(&commutator_subgroup(&d16, &d16)));
        for x in brute_elements(&d16) {
            assert!(a.contains(&x.pow(2)));
        }
        assert_eq!(agemo(&group("cyclic:9"), 3, 1).unwrap().order(), 3);
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&group("cyclic:8"), 2, 1).unwrap().order(), 2);
        assert_eq!(omega(&group("dihedral:8"), 2, 1).unwrap().order(), 8);
        assert_eq!(omega(&group("extraspecial:3,p"), 3, 1).unwrap().order(), 27);
    }

    #[test]
    fn quotient_examples() {
        let g = group("dihedral:16");
        let d = commutator_subgroup(&g, &g);
        let (q, f) = quotient(&g, &d).unwrap();
        assert_eq!(q.order(), 4);
        assert_eq!(group_exponent(&q).unwrap(), 2);
        assert!(f.is_surjective());
        assert_eq!(hom_kernel(&f).order(), 4);
        assert!(hom_kernel(&f).same_as(&d));
        let (q1, _) = quotient(&g, &g.trivial_like()).unwrap();
        assert_eq!(q1.order(), 16);
        let (qg, _) = quotient(&g, &g).unwrap();
        assert_eq!(qg.order(), 1);
    }

    #[test]
    fn non_normal_subgroup_is_rejected() {
        let g = group("dihedral:8");
        let b = g.sibling(vec![g.generators()[1].clone()]);
        assert!(matches!(quotient(&g, &b), Err(crate::Error::NotNormal { .. })));
    }

    #[test]
    fn identity_kernel_is_trivial() {
        let g = group("dihedral:16");
        let f = Homomorphism::new(g.clone(), g.clone(), g.generators().to_vec()).unwrap();
        assert!(f.kernel().is_trivial());
    }

    #[test]
    fn bad_generator_images_are_rejected() {
        let g = group("cyclic:4");
        let h = group("cyclic:2");
        assert!(Homomorphism::new(g.clone(), h.clone(), h.generators().to_vec()).is_ok());
        let c3 = group("cyclic:3");
        assert!(Homomorphism::new(g, c3.clone(), c3.generators().to_vec()).is_err());
    }

    #[test]
    fn center_of_extraspecial() {
        let g = group("extraspecial:3,p2");
        assert_eq!(center(&g).unwrap().order(), 3);
        assert_eq!(center(&group("elemab:2,3")).unwrap().order(), 8);
    }

    #[test]
    fn non_regular_groups_use_a_regular_copy() {
        let a = Permutation::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap();
        let b = Permutation::from_cycles(4, &[&[1, 3]]).unwrap();
        let g = PermGroup::new(4, vec![a.clone(), b]).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(group_exponent(&g).unwrap(), 4);
        let z = center(&g).unwrap();
        assert_eq!(z.order(), 2);
        assert!(z.contains(&a.pow(2)));
        assert_eq!(agemo(&g, 2, 1).unwrap().order(), 2);
        assert_eq!(orders(&lower_central_series(&g)), [8, 2, 1]);
    }

    fn small_perm_group(n: usize) -> impl Strategy<Value = PermGroup> {
        let perm = Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap());
        proptest::collection::vec(perm, 1..3).prop_map(move |g| PermGroup::new(n, g).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn commutator_subgroup_is_symmetric(a in small_perm_group(6), b in small_perm_group(6)) {
            let ab = commutator_subgroup(&a, &b);
            let ba = commutator_subgroup(&b, &a);
            prop_assert!(ab.same_as(&ba));
        }

        #[test]
        fn order_does_not_depend_on_generator_order(a in small_perm_group(7)) {
            let mut rev = a.generators().to_vec();
            rev.reverse();
            let b = PermGroup::new(7, rev).unwrap();
            prop_assert_eq!(a.order(), b.order());
            let prod: usize = a.orbit_lengths().iter().product();
            prop_assert_eq!(prod as u64, a.order());
        }

        #[test]
        fn membership_matches_enumeration(a in small_perm_group(5), x in Just((0..5u32).collect::<Vec<_>>()).prop_shuffle()) {
            let x = Permutation::from_images(x).unwrap();
            let els = brute_elements(&a);
            prop_assert_eq!(els.len() as u64, a.order());
            prop_assert_eq!(a.contains(&x), els.contains(&x));
        }
    }

    #[test]
    fn series_and_quotients_of_catalog_groups() {
        for spec in ["dihedral:32", "quaternion:16", "semidihedral:16", "extraspecial:3,p2", "product:cyclic:4,cyclic:2"] {
            let g = group(spec);
            let series = lower_central_series(&g);
            for w in series.windows(2) {
                assert!(w[1].is_subgroup_of(&w[0]));
                assert!(is_normal(&w[1], &g));
                assert!(w[1].same_as(&commutator_subgroup(&w[0], &g)));
            }
            assert!(series.last().unwrap().is_trivial());
            for n in &series {
                let (q, f) = quotient(&g, n).unwrap();
                assert_eq!(q.order() * n.order(), g.order());
                assert!(f.is_surjective());
                assert!(f.kernel().same_as(n));
                let p = if spec.contains(":3") { 3 } else { 2 };
                let a = agemo(&g, p, 1).unwrap();
                let (qa, _) = quotient(&g, &a).unwrap();
                let e = group_exponent(&qa).unwrap();
                assert!(e == 1 || e == p);
            }
        }
    }
}
