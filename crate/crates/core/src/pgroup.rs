//! Invariants and predicates specific to finite p-groups.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{
    agemo, check_normal, closure, commutator_subgroup, gamma, group_exponent,
    iterated_commutator, lower_central_series, quotient, PermGroup, Permutation,
};

/// Order, class, coclass and exponent of a p-group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PGroupProfile {
    pub p: u64,
    /// `|G| = p^n`.
    pub n: u32,
    pub class: u32,
    pub coclass: u32,
    pub exponent: u64,
    pub series_orders: Vec<u64>,
}

impl PGroupProfile {
    pub fn order(&self) -> u64 {
        self.p.pow(self.n)
    }

    pub fn exponent_log(&self) -> u32 {
        log_p(self.exponent, self.p).expect("exponent of a p-group is a p-power")
    }
}

/// `m(p, r)`: `(p-1)p^(r-1)` for odd `p`, `2^(r+2)` for `p = 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Mpr {
    pub p: u64,
    pub r: u32,
    pub m: u64,
}

pub fn m_of(p: u64, r: u32) -> Mpr {
    assert!(r >= 1, "coclass parameter must be positive");
    let m = if p == 2 {
        1u64 << (r + 2)
    } else {
        (p - 1) * p.pow(r - 1)
    };
    Mpr { p, r, m }
}

/// `p` for odd primes and `4` for `p = 2`.
pub fn bold_p(p: u64) -> u64 {
    if p == 2 {
        4
    } else {
        p
    }
}

/// `k` with `p^k = x`, if `x` is a power of `p`.
pub fn log_p(mut x: u64, p: u64) -> Option<u32> {
    if x == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    while x.is_multiple_of(p) {
        x /= p;
        k += 1;
    }
    (x == 1).then_some(k)
}

fn require_p_group(g: &PermGroup, p: u64) -> Result<()> {
    let order = g.order();
    match log_p(order, p) {
        Some(_) => Ok(()),
        None => Err(Error::NotPGroup { order, p }),
    }
}

pub fn profile(g: &PermGroup, p: u64) -> Result<PGroupProfile> {
    require_p_group(g, p)?;
    let series = lower_central_series(g);
    if !series.last().expect("non-empty").is_trivial() {
        return Err(Error::invariant("a p-group must be nilpotent"));
    }
    let n = log_p(g.order(), p).expect("checked above");
    let class = (series.len() - 1) as u32;
    Ok(PGroupProfile {
        p,
        n,
        class,
        coclass: n - class,
        exponent: group_exponent(g)?,
        series_orders: series.iter().map(PermGroup::order).collect(),
    })
}

/// The subgroup generated by the union of the given subgroups of a
/// common group. When every factor is normal this is their product.
pub fn join(parts: &[&PermGroup]) -> PermGroup {
    let (first, rest) = parts.split_first().expect("at least one subgroup");
    let extra: Vec<Permutation> = rest
        .iter()
        .flat_map(|h| h.generators().iter().cloned())
        .collect();
    closure(first, &extra)
}

/// `G^p` for odd `p`, `G^4` for `p = 2`.
pub fn bold_agemo(g: &PermGroup, p: u64) -> Result<PermGroup> {
    agemo(g, p, if p == 2 { 2 } else { 1 })
}

/// `G' <= G^p` (odd `p`) or `G' <= G^4` (`p = 2`).
pub fn is_powerful(g: &PermGroup, p: u64) -> Result<bool> {
    is_powerfully_embedded(g, g, p)
}

/// `gamma_{p-1}(G) <= G^p` (odd `p`) or `G' <= G^4` (`p = 2`).
pub fn is_potent(g: &PermGroup, p: u64) -> Result<bool> {
    is_potently_embedded(g, g, p)
}

/// `[N, G] <= N^p` (odd `p`) or `[N, G] <= N^4` (`p = 2`).
pub fn is_powerfully_embedded(n: &PermGroup, g: &PermGroup, p: u64) -> Result<bool> {
    check_normal(n, g)?;
    let lhs = commutator_subgroup(n, g);
    Ok(lhs.is_subgroup_of(&bold_agemo(n, p)?))
}

/// `[N, _{p-2} G] <= N^p` (odd `p`) or `[N, G] <= N^4` (`p = 2`).
pub fn is_potently_embedded(n: &PermGroup, g: &PermGroup, p: u64) -> Result<bool> {
    check_normal(n, g)?;
    let j = if p == 2 { 1 } else { (p - 2) as usize };
    let lhs = iterated_commutator(n, g, j);
    Ok(lhs.is_subgroup_of(&bold_agemo(n, p)?))
}

/// True iff `gamma_{i+s}(G) = gamma_i(G)^p` for every `i >= m`.
pub fn check_power_commutator(g: &PermGroup, p: u64, m: usize, s: usize) -> Result<bool> {
    assert!(m >= s && s >= 1, "need m >= s >= 1");
    let series = lower_central_series(g);
    power_commutator_holds(&series, p, m, s)
}

/// As [`check_power_commutator`] on a precomputed lower central series.
pub fn power_commutator_holds(series: &[PermGroup], p: u64, m: usize, s: usize) -> Result<bool> {
    let mut i = m;
    loop {
        let gi = gamma(series, i);
        if gi.is_trivial() {
            return Ok(true);
        }
        if !gamma(series, i + s).same_as(&agemo(&gi, p, 1)?) {
            return Ok(false);
        }
        i += 1;
    }
}

/// `G_1 = {x : [x, gamma_2(G)] <= gamma_4(G)}` for a group of maximal class,
/// as the kernel of the conjugation action on `gamma_2/gamma_4`.
pub fn maximal_class_g1(g: &PermGroup, p: u64) -> Result<PermGroup> {
    let prof = profile(g, p)?;
    if prof.coclass != 1 || prof.n < 4 {
        return Err(Error::HypothesisUnmet(format!(
            "needs maximal class and order at least p^4 (order p^{}, coclass {})",
            prof.n, prof.coclass
        )));
    }
    let series = lower_central_series(g);
    let g2 = gamma(&series, 2);
    let g4 = gamma(&series, 4);
    let (_, proj) = quotient(&g2, &g4)?;
    // x acts trivially on gamma_2/gamma_4 iff it fixes the images of the
    // generators of gamma_2 under conjugation
    let mut ar = g.arith();
    let mut b = crate::perm::Builder::new(g);
    let h_points: Vec<u32> = g2.generators().iter().map(|h| h.apply(0)).collect();
    let h_images: Vec<u32> = h_points.iter().map(|&h| proj.image_point(h)).collect();
    for &x in ar.elements() {
        if b.has_point(x) {
            continue;
        }
        let acts_trivially = h_points.iter().zip(&h_images).all(|(&h, &img)| {
            let c = ar.conj(h, x);
            proj.image_point(c) == img
        });
        if acts_trivially {
            b.add(ar.perm(x));
        }
    }
    let g1 = b.finish();
    if g1.order() * p != g.order() {
        return Err(Error::invariant(format!(
            "G_1 has order {} in a group of order {}",
            g1.order(),
            g.order()
        )));
    }
    Ok(g1)
}

/// The Hall modulus `gamma_2(L)^{p^k} gamma_p(L)^{p^(k-1)} ... gamma_{p^k}(L)`.
pub fn hall_modulus(l: &PermGroup, p: u64, k: u32) -> Result<PermGroup> {
    let series = lower_central_series(l);
    let mut parts = vec![agemo(&gamma(&series, 2), p, k)?];
    for j in 1..=k {
        let idx = p.pow(j) as usize;
        parts.push(agemo(&gamma(&series, idx), p, k - j)?);
    }
    let refs: Vec<&PermGroup> = parts.iter().collect();
    Ok(join(&refs))
}

fn check_member(g: &PermGroup, x: &Permutation) -> Result<()> {
    if g.contains(x) {
        Ok(())
    } else {
        Err(Error::HypothesisUnmet("element is not in the group".into()))
    }
}

/// Both Hall collection congruences for the pair `(x, y)`:
/// `(xy)^{p^k} = x^{p^k} y^{p^k}` modulo the Hall modulus of `<x, y>`, and
/// `[x,y]^{p^k} = [x^{p^k}, y]` modulo the Hall modulus of `<x, [x,y]>`.
pub fn hall_congruence_check(
    g: &PermGroup,
    p: u64,
    x: &Permutation,
    y: &Permutation,
    k: u32,
) -> Result<bool> {
    check_member(g, x)?;
    check_member(g, y)?;
    let q = p.pow(k) as i64;
    let l = g.sibling(vec![x.clone(), y.clone()]);
    let lhs = (x * y).pow(q);
    let rhs = &x.pow(q) * &y.pow(q);
    let first = hall_modulus(&l, p, k)?.contains(&(&lhs * &rhs.inverse()));
    let c = x.commutator(y);
    let l2 = g.sibling(vec![x.clone(), c.clone()]);
    let lhs2 = c.pow(q);
    let rhs2 = x.pow(q).commutator(y);
    let second = hall_modulus(&l2, p, k)?.contains(&(&lhs2 * &rhs2.inverse()));
    Ok(first && second)
}

/// `(x_1 ... x_r)^{p^k} = x_1^{p^k} ... x_r^{p^k}` modulo the Hall modulus of
/// `<x_1, .., x_r>`.
pub fn hall_product_check(g: &PermGroup, p: u64, xs: &[Permutation], k: u32) -> Result<bool> {
    for x in xs {
        check_member(g, x)?;
    }
    let q = p.pow(k) as i64;
    let id = Permutation::identity(g.degree());
    let prod = xs.iter().fold(id.clone(), |a, x| &a * x);
    let powers = xs.iter().fold(id, |a, x| &a * &x.pow(q));
    let l = g.sibling(xs.to_vec());
    Ok(hall_modulus(&l, p, k)?.contains(&(&prod.pow(q) * &powers.inverse())))
}

/// `[N^{p^k}, M] = [N, M]^{p^k}` modulo `prod_j [M, _{p^j} N]^{p^(k-j)}`,
/// checked as two containments.
pub fn hall_subgroup_congruence_check(
    g: &PermGroup,
    p: u64,
    n: &PermGroup,
    m: &PermGroup,
    k: u32,
) -> Result<bool> {
    check_normal(n, g)?;
    check_normal(m, g)?;
    let left = commutator_subgroup(&agemo(n, p, k)?, m);
    let right = agemo(&commutator_subgroup(n, m), p, k)?;
    let mut parts = Vec::new();
    for j in 1..=k {
        let it = iterated_commutator(m, n, p.pow(j) as usize);
        parts.push(agemo(&it, p, k - j)?);
    }
    let modulus = if parts.is_empty() {
        g.trivial_like()
    } else {
        let refs: Vec<&PermGroup> = parts.iter().collect();
        join(&refs)
    };
    let left_mod = join(&[&left, &modulus]);
    let right_mod = join(&[&right, &modulus]);
    Ok(left.is_subgroup_of(&right_mod) && right.is_subgroup_of(&left_mod))
}

/// For normal `N`, `M`: if `N <= M [N,G] N^p` then `N <= M`. Returns `None`
/// when the premise fails.
pub fn normal_inclusion_check(
    g: &PermGroup,
    p: u64,
    n: &PermGroup,
    m: &PermGroup,
) -> Result<Option<bool>> {
    check_normal(n, g)?;
    check_normal(m, g)?;
    let big = join(&[m, &commutator_subgroup(n, g), &agemo(n, p, 1)?]);
    if !n.is_subgroup_of(&big) {
        return Ok(None);
    }
    Ok(Some(n.is_subgroup_of(m)))
}

/// `Pi_0 = G`, `Pi_i = Pi_{i-1}^p`.
pub fn iterated_agemo(g: &PermGroup, p: u64, i: u32) -> Result<PermGroup> {
    let mut h = g.clone();
    for _ in 0..i {
        h = agemo(&h, p, 1)?;
    }
    Ok(h)
}

/// Sampled regularity diagnostic: `x^p y^p = (xy)^p` modulo `H^p` with
/// `H = <x, y>'`. Only for groups of order at most `3^5`.
pub fn regularity_sample(g: &PermGroup, p: u64, samples: usize, seed: u64) -> Result<bool> {
    const LIMIT: u64 = 243;
    if g.order() > LIMIT {
        return Err(Error::exceeded("regularity diagnostic group order", LIMIT));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut ar = g.arith();
    let elements = ar.elements();
    for _ in 0..samples {
        let x = elements[rng.gen_range(0..elements.len())];
        let y = elements[rng.gen_range(0..elements.len())];
        let (xp, yp) = (ar.perm(x), ar.perm(y));
        let l = g.sibling(vec![xp.clone(), yp.clone()]);
        let h = commutator_subgroup(&l, &l);
        let hp = agemo(&h, p, 1)?;
        let xy = ar.mul(x, y);
        let lhs = &xp.pow(p as i64) * &yp.pow(p as i64);
        let rhs = ar.perm(xy).pow(p as i64);
        if !hp.contains(&(&lhs * &rhs.inverse())) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{regular_group, DEFAULT_MAX_COSETS};
    use crate::presentation::{catalog_group, GroupSpec};

    fn group(spec: &str) -> PermGroup {
        let spec: GroupSpec = spec.parse().unwrap();
        regular_group(&catalog_group(&spec).unwrap(), DEFAULT_MAX_COSETS).unwrap()
    }

    /// Every element of a small semiregular group as a permutation.
    fn elements(g: &PermGroup) -> Vec<Permutation> {
        let ar = g.arith();
        ar.elements().iter().map(|&u| ar.perm(u)).collect()
    }

    #[test]
    fn profiles() {
        let d = profile(&group("dihedral:16"), 2).unwrap();
        assert_eq!((d.n, d.class, d.coclass, d.exponent), (4, 3, 1, 8));
        assert_eq!(d.series_orders, [16, 4, 2, 1]);
        let e = profile(&group("elemab:3,2"), 3).unwrap();
        assert_eq!((e.n, e.class, e.coclass, e.exponent), (2, 1, 1, 3));
        let h = profile(&group("extraspecial:3,p"), 3).unwrap();
        assert_eq!((h.n, h.class, h.coclass, h.exponent), (3, 2, 1, 3));
        assert!(matches!(profile(&group("cyclic:4"), 3), Err(Error::NotPGroup { .. })));
    }

    #[test]
    fn m_values() {
        assert_eq!(m_of(3, 1).m, 2);
        assert_eq!(m_of(2, 1).m, 8);
        assert_eq!(m_of(5, 2).m, 20);
        for p in [2u64, 3, 5, 7] {
            for r in 1..=4u32 {
                let expect = if p == 2 { 2u64.pow(r + 2) } else { (p - 1) * p.pow(r - 1) };
                assert_eq!(m_of(p, r), Mpr { p, r, m: expect });
            }
        }
    }

    #[test]
    fn powerful_and_potent() {
        assert!(is_powerful(&group("cyclic:8"), 2).unwrap());
        let d16 = group("dihedral:16");
        assert!(!is_powerful(&d16, 2).unwrap());
        assert!(!is_potent(&group("extraspecial:3,p"), 3).unwrap());
        // p = 3: gamma_2 <= G^3 fails for the exponent-p Heisenberg group
        assert!(!is_powerful(&group("extraspecial:3,p"), 3).unwrap());
    }

    #[test]
    fn embedded_predicates() {
        let d16 = group("dihedral:16");
        let series = lower_central_series(&d16);
        let z = series[2].clone();
        assert!(is_powerfully_embedded(&z, &d16, 2).unwrap());
        assert!(!is_powerfully_embedded(&series[1], &d16, 2).unwrap());
        // [gamma_2, G] = C2 and gamma_2^2 = C2 for the p-power 2
        let g2 = &series[1];
        assert!(commutator_subgroup(g2, &d16).is_subgroup_of(&agemo(g2, 2, 1).unwrap()));
        assert!(!is_powerfully_embedded(&d16, &d16, 2).unwrap());
        let e = group("elemab:2,3");
        assert!(is_powerfully_embedded(&e, &e, 2).unwrap());
    }

    #[test]
    fn power_commutator_examples() {
        assert!(check_power_commutator(&group("dihedral:32"), 2, 2, 1).unwrap());
        assert!(check_power_commutator(&group("elemab:2,3"), 2, 1, 1).unwrap());
        assert!(!check_power_commutator(&group("extraspecial:3,p"), 3, 1, 1).unwrap());
    }

    #[test]
    fn g1_is_the_cyclic_maximal_subgroup() {
        for spec in ["dihedral:16", "quaternion:16", "semidihedral:16", "dihedral:32"] {
            let g = group(spec);
            let g1 = maximal_class_g1(&g, 2).unwrap();
            assert_eq!(g1.order() * 2, g.order());
            assert_eq!(group_exponent(&g1).unwrap(), g1.order(), "{spec}");
            // brute force: x in G_1 iff [x, gamma_2] <= gamma_4
            let series = lower_central_series(&g);
            let (g2, g4) = (gamma(&series, 2), gamma(&series, 4));
            for x in elements(&g) {
                let inside = elements(&g2).iter().all(|h| g4.contains(&x.commutator(h)));
                assert_eq!(inside, g1.contains(&x));
            }
        }
        assert!(matches!(
            maximal_class_g1(&group("dihedral:8"), 2),
            Err(Error::HypothesisUnmet(_))
        ));
    }

    #[test]
    fn hall_congruences() {
        let c = group("product:cyclic:4,cyclic:2");
        let els = elements(&c);
        for x in &els {
            for y in &els {
                assert!(hall_congruence_check(&c, 2, x, y, 2).unwrap());
                let l = c.sibling(vec![x.clone(), y.clone()]);
                assert!(hall_modulus(&l, 2, 2).unwrap().is_trivial());
            }
        }
        let h = group("extraspecial:3,p");
        let hs = elements(&h);
        for x in hs.iter().step_by(5) {
            for y in hs.iter().step_by(7) {
                assert!(hall_congruence_check(&h, 3, x, y, 1).unwrap());
            }
        }
        let d = group("dihedral:16");
        let (a, b) = (&d.generators()[0], &d.generators()[1]);
        assert!(hall_congruence_check(&d, 2, a, b, 1).unwrap());
        assert!(hall_product_check(&d, 2, &elements(&d)[..5], 2).unwrap());
    }

    #[test]
    fn subgroup_congruences() {
        let e = group("elemab:2,2");
        assert!(hall_subgroup_congruence_check(&e, 2, &e, &e, 1).unwrap());
        let d = group("dihedral:32");
        let g2 = commutator_subgroup(&d, &d);
        assert!(hall_subgroup_congruence_check(&d, 2, &g2, &d, 1).unwrap());
        let h = group("extraspecial:3,p");
        assert!(hall_subgroup_congruence_check(&h, 3, &h, &h, 1).unwrap());
    }

    #[test]
    fn normal_inclusion() {
        let d = group("dihedral:16");
        let series = lower_central_series(&d);
        // N = gamma_2, M = gamma_3: the premise needs gamma_2 <= gamma_3 [gamma_2, G] gamma_2^2 = gamma_3
        assert_eq!(normal_inclusion_check(&d, 2, &series[1], &series[2]).unwrap(), None);
        assert_eq!(normal_inclusion_check(&d, 2, &series[2], &series[1]).unwrap(), Some(true));
    }

    #[test]
    fn powerful_groups_have_pi_equal_agemo() {
        let g = group("product:cyclic:4,cyclic:8");
        assert!(is_powerful(&g, 2).unwrap());
        for i in 1..=3 {
            assert!(iterated_agemo(&g, 2, i).unwrap().same_as(&agemo(&g, 2, i).unwrap()));
        }
    }

    #[test]
    fn small_groups_are_regular() {
        assert!(regularity_sample(&group("extraspecial:3,p"), 3, 30, 1).unwrap());
        assert!(regularity_sample(&group("elemab:2,3"), 2, 30, 1).unwrap());
    }
}
