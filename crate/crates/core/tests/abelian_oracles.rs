//! Closed forms for abelian groups, computed without `nu(G)`:
//! `C_m (x) C_n = C_gcd(m,n)` factor by factor, and
//! `M(C_n1 x ... x C_nk) = prod_{i<j} C_gcd(ni,nj)`.

use proptest::prelude::*;

use pnu::nu::{abelian_invariants, build_nu, schur_multiplier_oracle};
use pnu::perm::group_exponent;
use pnu::presentation::{catalog_group, GroupSpec};

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn spec_of(orders: &[u64]) -> GroupSpec {
    let text = if orders.len() == 1 {
        format!("cyclic:{}", orders[0])
    } else {
        let parts: Vec<String> = orders.iter().map(|n| format!("cyclic:{n}")).collect();
        format!("product:{}", parts.join(","))
    };
    text.parse().unwrap()
}

/// Prime-power invariants `C_{p^a}` as a sorted list of orders.
fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

fn tensor_order(orders: &[u64]) -> u64 {
    orders
        .iter()
        .flat_map(|&a| orders.iter().map(move |&b| gcd(a, b)))
        .product()
}

fn arb_abelian() -> impl Strategy<Value = Vec<u64>> {
    prop_oneof![
        prop::collection::vec(prop::sample::select(vec![2u64, 4, 8]), 1..=3),
        prop::collection::vec(prop::sample::select(vec![3u64, 9]), 1..=2),
        Just(vec![5u64]),
        Just(vec![5u64, 5]),
    ]
    .prop_filter("nu(G) of at most 2^20 elements", |v| {
        let g: u64 = v.iter().product();
        g * g * tensor_order(v) <= 1 << 20
    })
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 24,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn tensor_square_and_multiplier_match_closed_forms(orders in arb_abelian()) {
        let spec = spec_of(&orders);
        let nu = build_nu(&catalog_group(&spec).unwrap()).unwrap();

        let tensor_order = tensor_order(&orders);
        prop_assert_eq!(nu.tensor().order(), tensor_order, "{}", spec);
        let tensor_exp = orders.iter().copied().max().unwrap();
        prop_assert_eq!(group_exponent(nu.tensor()).unwrap(), tensor_exp);

        let mut schur = Vec::new();
        for i in 0..orders.len() {
            for j in i + 1..orders.len() {
                schur.push(gcd(orders[i], orders[j]));
            }
        }
        let got = abelian_invariants(nu.schur()).unwrap();
        prop_assert_eq!(sorted(got.clone()), sorted(schur), "{}", spec);

        let g = nu.base().order();
        prop_assert_eq!(nu.nu().order(), g * g * tensor_order);
        if g <= 16 {
            prop_assert_eq!(sorted(schur_multiplier_oracle(nu.base()).unwrap()), sorted(got));
        }
    }
}
