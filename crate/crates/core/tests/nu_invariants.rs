use proptest::prelude::*;

use pnu::nu::{build_nu, kernel_k, NuOptions, NuSeries};
use pnu::perm::{
    center, commutator_subgroup, gamma, group_exponent, lower_central_series, PermGroup,
};
use pnu::pgroup::join;
use pnu::presentation::catalog_group;

const SPECS: [&str; 14] = [
    "cyclic:2",
    "cyclic:4",
    "cyclic:9",
    "elemab:2,2",
    "elemab:3,2",
    "dihedral:8",
    "dihedral:16",
    "quaternion:8",
    "quaternion:16",
    "semidihedral:16",
    "extraspecial:3,p",
    "extraspecial:3,p2",
    "product:cyclic:4,cyclic:2",
    "product:dihedral:8,cyclic:2",
];

fn exp(h: &PermGroup) -> u64 {
    group_exponent(h).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 20,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn structural_invariants(spec in prop::sample::select(SPECS.to_vec())) {
        let nu = build_nu(&catalog_group(&spec.parse().unwrap()).unwrap()).unwrap();
        let g = nu.base();
        let go = g.order();
        prop_assert_eq!(nu.nu().order(), go * go * nu.tensor().order());
        prop_assert_eq!(nu.theta().order() * go, nu.nu().order());

        let (eg, emu, edelta, eschur) = (exp(g), exp(nu.mu()), exp(nu.delta()), exp(nu.schur()));
        let enu = exp(nu.nu());
        prop_assert_eq!((eg * emu) % enu, 0);
        prop_assert_eq!((eschur * edelta) % emu, 0);
        prop_assert_eq!(eg % edelta, 0);
        prop_assert_eq!((eg * eg * eschur) % enu, 0);

        let derived = commutator_subgroup(g, g);
        prop_assert!(go / derived.order() <= nu.delta().order());

        let class_g = lower_central_series(g).len() - 1;
        let class_nu = lower_central_series(nu.nu()).len() - 1;
        prop_assert!(class_nu <= class_g + 1);
    }

    #[test]
    fn kernel_lower_central_series(
        spec in prop::sample::select(SPECS.to_vec()),
        which in 0usize..3,
    ) {
        let nu = build_nu(&catalog_group(&spec.parse().unwrap()).unwrap()).unwrap();
        let g = nu.base();
        let series = lower_central_series(g);
        let n = match which {
            0 => gamma(&series, 2),
            1 => center(g).unwrap(),
            _ => g.clone(),
        };
        let k = kernel_k(&nu, &n, &NuOptions::default()).unwrap();
        let nn = nu.embed_subgroup(&n);
        let np = nu.embed_phi_subgroup(&n);
        let (sk, sn, sp) = (
            lower_central_series(&k.k),
            lower_central_series(&nn),
            lower_central_series(&np),
        );
        for s in 2..=sk.len() + 1 {
            let rhs = join(&[
                &gamma(&sn, s),
                &gamma(&sp, s),
                &commutator_subgroup(&gamma(&sn, s - 1), &np),
                &commutator_subgroup(&nn, &gamma(&sp, s - 1)),
            ]);
            prop_assert!(gamma(&sk, s).same_as(&rhs), "{} s = {}", spec, s);
        }
        prop_assert_eq!(k.k.order() * k.quotient.nu().order(), nu.nu().order());
    }

    #[test]
    fn nu_series_steps(spec in prop::sample::select(SPECS.to_vec())) {
        let nu = build_nu(&catalog_group(&spec.parse().unwrap()).unwrap()).unwrap();
        let series = NuSeries::new(&nu);
        for k in 1..=series.nu_class() + 1 {
            prop_assert!(series.gamma_step_holds(k), "{} k = {}", spec, k);
        }
    }
}
