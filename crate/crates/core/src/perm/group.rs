use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use super::orbit::Orbit;
use super::Permutation;
use crate::error::{Error, Result};

/// Largest group whose elements are listed one by one (exponents, Ω, oracles).
pub const ELEMENT_THRESHOLD: u64 = 10_000_000;

/// Largest non-semiregular group that gets converted to a regular action.
pub const REGULAR_COPY_LIMIT: u64 = 1_000_000;

#[derive(Clone, Debug)]
pub(crate) struct Level {
    gens: Vec<Permutation>,
    orbit: Orbit,
}

#[derive(Clone, Debug)]
pub(crate) enum Chain {
    /// Semiregular group: every non-identity element moves every point, so a
    /// single orbit of the base point 0 carries all the information.
    Free(Orbit),
    Levels(Vec<Level>),
}

/// A permutation group given by generators, with a lazily built
/// base and strong generating set.
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    semiregular: bool,
    chain: OnceLock<Chain>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            semiregular: self.semiregular,
            chain,
        }
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("generators", &self.gens.len())
            .field("semiregular", &self.semiregular)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::invariant(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(PermGroup {
            degree,
            gens,
            semiregular: false,
            chain: OnceLock::new(),
        })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup {
            degree,
            gens: Vec::new(),
            semiregular: false,
            chain: OnceLock::new(),
        }
    }

    /// A group the caller knows to act semiregularly (e.g. a subgroup of a
    /// regular representation).
    pub(crate) fn semiregular(degree: usize, gens: Vec<Permutation>) -> Self {
        assert!(degree >= 1, "semiregular groups need a non-empty domain");
        PermGroup {
            degree,
            gens,
            semiregular: true,
            chain: OnceLock::new(),
        }
    }

    pub(crate) fn from_free_orbit(degree: usize, gens: Vec<Permutation>, orbit: Orbit) -> Self {
        let chain = OnceLock::new();
        let _ = chain.set(Chain::Free(orbit));
        PermGroup {
            degree,
            gens,
            semiregular: true,
            chain,
        }
    }

    /// A trivial group that keeps the semiregular certificate of its parent.
    pub(crate) fn trivial_like(&self) -> Self {
        if self.semiregular {
            PermGroup::semiregular(self.degree, Vec::new())
        } else {
            PermGroup::trivial(self.degree)
        }
    }

    /// A group generated by `gens` inside the same domain, inheriting the
    /// semiregular certificate (valid because `gens` lie in a group with it).
    pub(crate) fn sibling(&self, gens: Vec<Permutation>) -> Self {
        if self.semiregular {
            PermGroup::semiregular(self.degree, gens)
        } else {
            PermGroup {
                degree: self.degree,
                gens,
                semiregular: false,
                chain: OnceLock::new(),
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    /// True when the group is known to act semiregularly, which enables
    /// point-based element arithmetic.
    pub fn is_semiregular(&self) -> bool {
        self.semiregular
    }

    pub(crate) fn chain(&self) -> &Chain {
        self.chain.get_or_init(|| {
            if self.semiregular {
                Chain::Free(Orbit::build(self.degree, 0, &self.gens))
            } else {
                Chain::Levels(schreier_sims(self.degree, &self.gens))
            }
        })
    }

    pub(crate) fn free_orbit(&self) -> Option<&Orbit> {
        match self.chain() {
            Chain::Free(o) => Some(o),
            Chain::Levels(_) => None,
        }
    }

    pub fn order(&self) -> u64 {
        match self.chain() {
            Chain::Free(o) => o.len() as u64,
            Chain::Levels(levels) => levels.iter().map(|l| l.orbit.len() as u64).product(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.gens.iter().all(Permutation::is_identity)
    }

    pub fn base(&self) -> Vec<u32> {
        match self.chain() {
            Chain::Free(o) if o.len() > 1 => vec![o.base()],
            Chain::Free(_) => Vec::new(),
            Chain::Levels(levels) => levels.iter().map(|l| l.orbit.base()).collect(),
        }
    }

    /// Lengths of the fundamental orbits along the base.
    pub fn orbit_lengths(&self) -> Vec<usize> {
        match self.chain() {
            Chain::Free(o) if o.len() > 1 => vec![o.len()],
            Chain::Free(_) => Vec::new(),
            Chain::Levels(levels) => levels.iter().map(|l| l.orbit.len()).collect(),
        }
    }

    /// Exact membership test.
    pub fn contains(&self, x: &Permutation) -> bool {
        if x.degree() != self.degree {
            return false;
        }
        match self.chain() {
            Chain::Free(o) => match o.index(x.apply(0)) {
                Some(i) => o.transversal(&self.gens, i, self.degree) == *x,
                None => false,
            },
            Chain::Levels(levels) => {
                let (res, j) = strip(levels, 0, x.clone());
                j == levels.len() && res.is_identity()
            }
        }
    }

    /// Membership for an element already known to lie in a semiregular
    /// overgroup: only the image of the base point is inspected.
    pub(crate) fn contains_member(&self, x: &Permutation) -> bool {
        match self.chain() {
            Chain::Free(o) => o.contains(x.apply(0)),
            Chain::Levels(_) => self.contains(x),
        }
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        if self.semiregular && other.semiregular {
            self.gens.iter().all(|g| other.contains_member(g))
        } else {
            self.gens.iter().all(|g| other.contains(g))
        }
    }

    /// Equality as subgroups of the same symmetric group.
    pub fn same_as(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.order() == other.order() && self.is_subgroup_of(other)
    }

    pub fn is_abelian(&self) -> bool {
        self.gens.iter().enumerate().all(|(i, a)| {
            self.gens[i + 1..]
                .iter()
                .all(|b| (a * b) == (b * a))
        })
    }

    /// Point arithmetic on the elements of a semiregular group. Elements are
    /// named by the image of the base point 0.
    pub(crate) fn arith(&self) -> Arith<'_> {
        let orbit = self
            .free_orbit()
            .expect("point arithmetic needs a semiregular group");
        Arith {
            gens: &self.gens,
            orbit,
            degree: self.degree,
            buf: Vec::new(),
        }
    }

    /// Conversion to a regular action on the group's own elements.
    pub fn regular_copy(&self) -> Result<RegularCopy> {
        let order = self.order();
        if order > REGULAR_COPY_LIMIT {
            return Err(Error::exceeded("elements in regular copy", REGULAR_COPY_LIMIT));
        }
        let n = order as usize;
        let mut elements = vec![Permutation::identity(self.degree)];
        let mut index: HashMap<Permutation, u32> = HashMap::new();
        index.insert(elements[0].clone(), 0);
        let mut images: Vec<Vec<u32>> = vec![Vec::with_capacity(n); self.gens.len()];
        let mut i = 0;
        while i < elements.len() {
            for (g, gen) in self.gens.iter().enumerate() {
                let e = &elements[i] * gen;
                let next = elements.len() as u32;
                let j = *index.entry(e.clone()).or_insert_with(|| {
                    elements.push(e);
                    next
                });
                images[g].push(j);
            }
            i += 1;
        }
        if elements.len() != n {
            return Err(Error::invariant("element listing disagrees with the group order"));
        }
        let gens = images
            .into_iter()
            .map(Permutation::from_images_unchecked)
            .collect();
        Ok(RegularCopy {
            group: PermGroup::semiregular(n, gens),
            elements,
        })
    }
}

/// A group in its regular action together with the original element for
/// every point.
#[derive(Clone, Debug)]
pub struct RegularCopy {
    pub group: PermGroup,
    pub elements: Vec<Permutation>,
}

impl RegularCopy {
    /// Carries a subgroup of the regular copy back to the original domain.
    pub fn lift(&self, sub: &PermGroup, degree: usize) -> PermGroup {
        let gens = sub
            .generators()
            .iter()
            .map(|g| self.elements[g.apply(0) as usize].clone())
            .collect();
        PermGroup::new(degree, gens).expect("lifted generators share the original degree")
    }

    /// The point of the regular copy that represents `x`.
    pub fn point_of(&self, x: &Permutation) -> Option<u32> {
        self.elements.iter().position(|e| e == x).map(|i| i as u32)
    }
}

fn strip(levels: &[Level], from: usize, mut h: Permutation) -> (Permutation, usize) {
    for (l, level) in levels.iter().enumerate().skip(from) {
        let beta = h.apply(level.orbit.base());
        match level.orbit.index(beta) {
            None => return (h, l),
            Some(i) => {
                let t = level.orbit.transversal(&level.gens, i, h.degree());
                h = &h * &t.inverse();
            }
        }
    }
    (h, levels.len())
}

/// Deterministic Schreier-Sims: base points are smallest moved points and
/// Schreier generators are visited in orbit order.
fn schreier_sims(degree: usize, gens: &[Permutation]) -> Vec<Level> {
    let gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
    let mut bases: Vec<u32> = Vec::new();
    for g in &gens {
        if bases.iter().all(|&b| g.apply(b) == b) {
            bases.push(g.smallest_moved_point().expect("identity generators are filtered"));
        }
    }
    let mut levels: Vec<Level> = (0..bases.len())
        .map(|l| {
            let lg: Vec<Permutation> = gens
                .iter()
                .filter(|g| bases[..l].iter().all(|&b| g.apply(b) == b))
                .cloned()
                .collect();
            Level {
                orbit: Orbit::build(degree, bases[l], &lg),
                gens: lg,
            }
        })
        .collect();
    let mut i = levels.len() as isize - 1;
    'outer: while i >= 0 {
        let li = i as usize;
        let found = {
            let level = &levels[li];
            let mut found = None;
            'search: for ui in 0..level.orbit.len() {
                let tu = level.orbit.transversal(&level.gens, ui, degree);
                for s in &level.gens {
                    let img = s.apply(level.orbit.points()[ui]);
                    let vi = level.orbit.index(img).expect("orbit is closed");
                    let tv = level.orbit.transversal(&level.gens, vi, degree);
                    let h = &(&tu * s) * &tv.inverse();
                    if h.is_identity() {
                        continue;
                    }
                    let (res, j) = strip(&levels, li + 1, h);
                    if !res.is_identity() {
                        found = Some((res, j));
                        break 'search;
                    }
                }
            }
            found
        };
        if let Some((res, j)) = found {
            if j == levels.len() {
                let b = res.smallest_moved_point().expect("non-identity residue");
                levels.push(Level {
                    gens: Vec::new(),
                    orbit: Orbit::new(degree, b),
                });
            }
            for level in &mut levels[li + 1..=j] {
                level.gens.push(res.clone());
                let n = level.gens.len();
                level.orbit.extend(&level.gens, n - 1);
            }
            i = j as isize;
            continue 'outer;
        }
        i -= 1;
    }
    levels
}

/// Element arithmetic in a semiregular group. An element is identified with
/// the image of the base point under it; products are evaluated by walking
/// Schreier-tree words.
pub(crate) struct Arith<'a> {
    gens: &'a [Permutation],
    orbit: &'a Orbit,
    degree: usize,
    buf: Vec<u32>,
}

impl<'a> Arith<'a> {
    pub(crate) fn identity(&self) -> u32 {
        self.orbit.base()
    }

    pub(crate) fn elements(&self) -> &'a [u32] {
        self.orbit.points()
    }

    fn load(&mut self, u: u32) {
        let idx = self.orbit.index(u).expect("point is not an element of this group");
        self.orbit.path_into(idx, &mut self.buf);
    }

    fn run(&self, mut q: u32) -> u32 {
        for &l in &self.buf {
            q = self.gens[l as usize].apply(q);
        }
        q
    }

    /// The image of point `q` under element `u`.
    pub(crate) fn apply(&mut self, u: u32, q: u32) -> u32 {
        self.load(u);
        self.run(q)
    }

    pub(crate) fn mul(&mut self, u: u32, v: u32) -> u32 {
        self.apply(v, u)
    }

    pub(crate) fn inv(&mut self, u: u32) -> u32 {
        self.load(u);
        let mut q = self.identity();
        for &l in self.buf.iter().rev() {
            q = self.gens[l as usize].preimage(q);
        }
        q
    }

    pub(crate) fn pow(&mut self, u: u32, k: u64) -> u32 {
        self.load(u);
        let e = self.identity();
        let mut q = e;
        for i in 1..=k {
            q = self.run(q);
            if q == e {
                let mut r = e;
                for _ in 0..k % i {
                    r = self.run(r);
                }
                return r;
            }
        }
        q
    }

    pub(crate) fn order(&mut self, u: u32) -> u64 {
        self.load(u);
        let e = self.identity();
        let mut q = u;
        let mut k = 1;
        while q != e {
            q = self.run(q);
            k += 1;
        }
        k
    }

    /// `by^-1 u by`.
    pub(crate) fn conj(&mut self, u: u32, by: u32) -> u32 {
        let b = self.inv(by);
        let x = self.mul(b, u);
        self.mul(x, by)
    }

    /// `u^-1 v^-1 u v`.
    pub(crate) fn comm(&mut self, u: u32, v: u32) -> u32 {
        let x = self.mul(v, u);
        let xi = self.inv(x);
        let y = self.mul(xi, u);
        self.mul(y, v)
    }

    pub(crate) fn perm(&self, u: u32) -> Permutation {
        let idx = self.orbit.index(u).expect("point is not an element of this group");
        self.orbit.transversal(self.gens, idx, self.degree)
    }

    /// Generator indices of a word for `u` in this group's generators.
    pub(crate) fn word(&self, u: u32) -> Vec<u32> {
        self.orbit.path(self.orbit.index(u).expect("point is not an element"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, c: &[usize]) -> Permutation {
        Permutation::from_cycles(n, &[c]).unwrap()
    }

    #[test]
    fn four_cycle_group() {
        let g = PermGroup::new(4, vec![cyc(4, &[1, 2, 3, 4])]).unwrap();
        assert_eq!(g.order(), 4);
        let sq = Permutation::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert!(g.contains(&sq));
        assert!(!g.contains(&cyc(4, &[1, 3])));
    }

    #[test]
    fn symmetric_groups() {
        for n in 2..=6usize {
            let g = PermGroup::new(
                n,
                vec![cyc(n, &[1, 2]), cyc(n, &(1..=n).collect::<Vec<_>>())],
            )
            .unwrap();
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(g.order(), fact);
            let prod: usize = g.orbit_lengths().iter().product();
            assert_eq!(prod as u64, fact);
        }
    }

    #[test]
    fn order_independent_of_generator_order() {
        let a = cyc(7, &[1, 2, 3]);
        let b = cyc(7, &[3, 4, 5, 6, 7]);
        let g1 = PermGroup::new(7, vec![a.clone(), b.clone()]).unwrap();
        let g2 = PermGroup::new(7, vec![b, a]).unwrap();
        assert_eq!(g1.order(), 2520);
        assert_eq!(g1.order(), g2.order());
        assert!(!g1.base().is_empty());
    }

    #[test]
    fn regular_copy_arithmetic() {
        let g = PermGroup::new(4, vec![cyc(4, &[1, 2, 3, 4]), cyc(4, &[1, 3])]).unwrap();
        let r = g.regular_copy().unwrap();
        assert_eq!(r.group.order(), 8);
        let mut ar = r.group.arith();
        for &u in ar.elements() {
            for &v in ar.elements() {
                let w = ar.mul(u, v);
                assert_eq!(&r.elements[u as usize] * &r.elements[v as usize], r.elements[w as usize]);
            }
            let ui = ar.inv(u);
            assert_eq!(ar.mul(u, ui), 0);
            assert_eq!(ar.order(u), r.elements[u as usize].order());
            assert_eq!(ar.perm(u).apply(0), u);
        }
    }
}
