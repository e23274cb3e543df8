use super::group::{PermGroup, ELEMENT_THRESHOLD};
use super::hom::Homomorphism;
use super::orbit::{Orbit, NONE};
use super::Permutation;
use crate::error::{Error, Result};

/// Incrementally grown subgroup. For semiregular parents a candidate is
/// judged by its base-point image alone, so it is only materialized when
/// it actually enlarges the subgroup.
pub(crate) struct Builder {
    template: PermGroup,
    gens: Vec<Permutation>,
    orbit: Option<Orbit>,
    current: Option<PermGroup>,
}

impl Builder {
    pub(crate) fn new(like: &PermGroup) -> Self {
        let orbit = like
            .is_semiregular()
            .then(|| Orbit::new(like.degree(), 0));
        Builder {
            template: like.trivial_like(),
            gens: Vec::new(),
            orbit,
            current: None,
        }
    }

    pub(crate) fn from_group(g: &PermGroup) -> Self {
        let mut b = Builder::new(g);
        b.gens = g.generators().to_vec();
        if let Some(o) = g.free_orbit() {
            b.orbit = Some(o.clone());
        }
        b
    }

    fn general(&mut self) -> &PermGroup {
        let gens = &self.gens;
        let template = &self.template;
        self.current.get_or_insert_with(|| template.sibling(gens.clone()))
    }

    /// Whether the element with base-point image `u` already lies in the
    /// subgroup (semiregular parents only).
    pub(crate) fn has_point(&self, u: u32) -> bool {
        self.orbit.as_ref().expect("semiregular builder").contains(u)
    }

    pub(crate) fn add(&mut self, x: Permutation) -> bool {
        if let Some(orbit) = self.orbit.as_mut() {
            if orbit.contains(x.apply(0)) {
                return false;
            }
            self.gens.push(x);
            orbit.extend(&self.gens, self.gens.len() - 1);
            true
        } else {
            if self.general().contains(&x) {
                return false;
            }
            self.gens.push(x);
            self.current = None;
            true
        }
    }

    /// Adds the element whose base-point image is `point`, built by `make`
    /// only when needed.
    pub(crate) fn offer(&mut self, point: u32, make: impl FnOnce() -> Permutation) -> bool {
        if self.orbit.is_some() && self.has_point(point) {
            return false;
        }
        self.add(make())
    }

    /// Closes the subgroup under conjugation by `by`.
    pub(crate) fn close_under_conjugation(&mut self, by: &[Permutation]) {
        let mut i = 0;
        while i < self.gens.len() {
            for g in by {
                let h = &self.gens[i];
                if self.orbit.is_some() && self.has_point(g.apply(h.apply(g.preimage(0)))) {
                    continue;
                }
                let c = h.conjugate(g);
                self.add(c);
            }
            i += 1;
        }
    }

    pub(crate) fn finish(self) -> PermGroup {
        let degree = self.template.degree();
        match self.orbit {
            Some(o) => PermGroup::from_free_orbit(degree, self.gens, o),
            None => self.template.sibling(self.gens),
        }
    }
}

/// `u^-1 v^-1 u v` evaluated at the base point only.
fn commutator_point(a: &Permutation, b: &Permutation) -> u32 {
    b.apply(a.apply(b.preimage(a.preimage(0))))
}

fn both_semiregular(a: &PermGroup, b: &PermGroup) -> bool {
    a.is_semiregular() && b.is_semiregular()
}

/// The subgroup generated by `g` and `extra`.
pub fn closure(g: &PermGroup, extra: &[Permutation]) -> PermGroup {
    let mut b = Builder::from_group(g);
    for x in extra {
        b.offer(x.apply(0), || x.clone());
    }
    b.finish()
}

/// The least subgroup containing `seeds` that is closed under conjugation by
/// the generators of `g`.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let mut b = Builder::new(g);
    for s in seeds {
        b.offer(s.apply(0), || s.clone());
    }
    b.close_under_conjugation(g.generators());
    b.finish()
}

/// `[A, B]`: the normal closure in `<A, B>` of the commutators of generators.
pub fn commutator_subgroup(a: &PermGroup, b: &PermGroup) -> PermGroup {
    let like = if both_semiregular(a, b) {
        a.clone()
    } else {
        PermGroup::trivial(a.degree())
    };
    let mut builder = Builder::new(&like);
    for x in a.generators() {
        for y in b.generators() {
            builder.offer(commutator_point(x, y), || x.commutator(y));
        }
    }
    let ambient: Vec<Permutation> = a
        .generators()
        .iter()
        .chain(b.generators())
        .cloned()
        .collect();
    builder.close_under_conjugation(&ambient);
    builder.finish()
}

/// Left-normed `[M, N, ..., N]` with `j` copies of `N`.
pub fn iterated_commutator(m: &PermGroup, n: &PermGroup, j: usize) -> PermGroup {
    let mut acc = m.clone();
    for _ in 0..j {
        if acc.is_trivial() {
            break;
        }
        acc = commutator_subgroup(&acc, n);
    }
    acc
}

/// `gamma_1 = G`, `gamma_{i+1} = [gamma_i, G]`, stopping at the first repeat.
pub fn lower_central_series(g: &PermGroup) -> Vec<PermGroup> {
    let mut series = vec![g.clone()];
    loop {
        let last = series.last().expect("series is non-empty");
        let next = commutator_subgroup(last, g);
        if next.order() == last.order() {
            break;
        }
        series.push(next);
    }
    series
}

/// `gamma_i(G)` from a computed series (1-based), trivial beyond its end.
pub fn gamma(series: &[PermGroup], i: usize) -> PermGroup {
    assert!(i >= 1, "lower central terms are indexed from 1");
    series
        .get(i - 1)
        .unwrap_or_else(|| series.last().expect("series is non-empty"))
        .clone()
}

/// Checks that `n` is a normal subgroup of `g`.
pub fn check_normal(n: &PermGroup, g: &PermGroup) -> Result<()> {
    let free = both_semiregular(n, g);
    for (i, x) in n.generators().iter().enumerate() {
        let inside = if free { g.contains_member(x) } else { g.contains(x) };
        if !inside {
            return Err(Error::HypothesisUnmet(format!(
                "generator {i} of the subgroup is not in the ambient group"
            )));
        }
        for (j, y) in g.generators().iter().enumerate() {
            let ok = if free {
                n.free_orbit()
                    .expect("semiregular")
                    .contains(y.apply(x.apply(y.preimage(0))))
            } else {
                n.contains(&x.conjugate(y))
            };
            if !ok {
                return Err(Error::NotNormal {
                    generator: i,
                    conjugator: j,
                });
            }
        }
    }
    Ok(())
}

pub fn is_normal(n: &PermGroup, g: &PermGroup) -> bool {
    check_normal(n, g).is_ok()
}

/// Order of a single permutation.
pub fn element_order(x: &Permutation) -> u64 {
    x.order()
}

fn ensure_enumerable(g: &PermGroup) -> Result<()> {
    if g.order() > ELEMENT_THRESHOLD {
        Err(Error::exceeded("group elements", ELEMENT_THRESHOLD))
    } else {
        Ok(())
    }
}

/// Least common multiple of element orders, by enumeration.
pub fn group_exponent(g: &PermGroup) -> Result<u64> {
    ensure_enumerable(g)?;
    if !g.is_semiregular() {
        return group_exponent(&g.regular_copy()?.group);
    }
    let mut ar = g.arith();
    let mut e = 1u64;
    for &u in ar.elements() {
        let o = ar.order(u);
        if !e.is_multiple_of(o) {
            e = super::permutation::lcm(e, o);
        }
    }
    Ok(e)
}

/// Labels the points of `g`'s base orbit by the orbits of `n` on them, i.e.
/// by the cosets `xN`. Returns the labels (indexed by point) and one
/// representative per coset.
fn coset_labels(g: &PermGroup, n: &PermGroup) -> (Vec<u32>, Vec<u32>) {
    let orbit = g.free_orbit().expect("semiregular group");
    let mut labels = vec![NONE; g.degree()];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for &start in orbit.points() {
        if labels[start as usize] != NONE {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(start);
        labels[start as usize] = c;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for h in n.generators() {
                let y = h.apply(x);
                if labels[y as usize] == NONE {
                    labels[y as usize] = c;
                    stack.push(y);
                }
            }
        }
    }
    (labels, reps)
}

fn p_power(p: u64, k: u32) -> u64 {
    p.checked_pow(k).expect("prime power overflow")
}

/// `G^{p^k}`: the subgroup generated by all `p^k`-th powers.
pub fn agemo(g: &PermGroup, p: u64, k: u32) -> Result<PermGroup> {
    if k == 0 || g.is_trivial() {
        return Ok(if k == 0 { g.clone() } else { g.trivial_like() });
    }
    if !g.is_semiregular() {
        let copy = g.regular_copy()?;
        let a = agemo(&copy.group, p, k)?;
        return Ok(copy.lift(&a, g.degree()));
    }
    let q = p_power(p, k);
    let seeds: Vec<Permutation> = g.generators().iter().map(|x| x.pow(q as i64)).collect();
    let mut h = normal_closure(g, &seeds);
    loop {
        let (_, reps) = coset_labels(g, &h);
        if reps.len() as u64 > ELEMENT_THRESHOLD {
            return Err(Error::exceeded("quotient elements", ELEMENT_THRESHOLD));
        }
        let mut ar = g.arith();
        let mut b = Builder::from_group(&h);
        let mut grew = false;
        for &r in &reps {
            let x = ar.pow(r, q);
            if !b.has_point(x) {
                b.add(ar.perm(x));
                grew = true;
            }
        }
        if !grew {
            return Ok(h);
        }
        b.close_under_conjugation(g.generators());
        h = b.finish();
    }
}

/// `Omega_i(G)`: the subgroup generated by elements of order dividing `p^i`.
pub fn omega(g: &PermGroup, p: u64, i: u32) -> Result<PermGroup> {
    ensure_enumerable(g)?;
    if !g.is_semiregular() {
        let copy = g.regular_copy()?;
        let o = omega(&copy.group, p, i)?;
        return Ok(copy.lift(&o, g.degree()));
    }
    let q = p_power(p, i);
    let mut ar = g.arith();
    let e = ar.identity();
    let mut b = Builder::new(g);
    for &u in ar.elements() {
        if !b.has_point(u) && ar.pow(u, q) == e {
            b.add(ar.perm(u));
        }
    }
    Ok(b.finish())
}

/// The center, by testing every element against the generators.
pub fn center(g: &PermGroup) -> Result<PermGroup> {
    ensure_enumerable(g)?;
    if !g.is_semiregular() {
        let copy = g.regular_copy()?;
        let z = center(&copy.group)?;
        return Ok(copy.lift(&z, g.degree()));
    }
    let mut ar = g.arith();
    let mut b = Builder::new(g);
    let gen_points: Vec<u32> = g.generators().iter().map(|x| x.apply(0)).collect();
    for &u in ar.elements() {
        if b.has_point(u) {
            continue;
        }
        let central = g
            .generators()
            .iter()
            .zip(&gen_points)
            .all(|(x, &xp)| x.apply(u) == ar.apply(u, xp));
        if central {
            b.add(ar.perm(u));
        }
    }
    Ok(b.finish())
}

/// `G/N` acting regularly on the cosets of `N`, with the projection.
pub fn quotient(g: &PermGroup, n: &PermGroup) -> Result<(PermGroup, Homomorphism)> {
    if !both_semiregular(g, n) {
        return Err(Error::HypothesisUnmet(
            "quotients are formed for semiregular groups; take a regular copy first".into(),
        ));
    }
    check_normal(n, g)?;
    let (labels, reps) = coset_labels(g, n);
    let m = reps.len();
    let gens: Vec<Permutation> = g
        .generators()
        .iter()
        .map(|x| {
            Permutation::from_images_unchecked(
                reps.iter().map(|&r| labels[x.apply(r) as usize]).collect(),
            )
        })
        .collect();
    let q = PermGroup::semiregular(m, gens.clone());
    let f = Homomorphism::new(g.clone(), q.clone(), gens)?;
    Ok((q, f))
}
