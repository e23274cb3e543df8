use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::presentation::nu_presentation_bounded;
use super::{IndexMode, NuGroup};
use crate::coset::{enumerate_cosets_refined, regular_group, TableStatus};
use crate::error::{Error, Result};
use crate::perm::{commutator_subgroup, lower_central_series, gamma, PermGroup, Permutation};
use crate::pgroup::join;
use crate::presentation::{FinitePresentation, Word};

/// Largest `|G|^3` for which every element-indexed relation is evaluated.
const TRIPLE_LIMIT: u64 = 1 << 22;

/// Base-point names of three elements of `G`.
pub type TripleWitness = [u32; 3];

/// `[x, y^phi]` in `nu(G)` for elements `x`, `y` of `G`.
pub fn tensor_of(nu: &NuGroup, x: &Permutation, y: &Permutation) -> Permutation {
    let mut ar = nu.nu().arith();
    let e = nu.embed().image_point(x.apply(0));
    let f = nu.embed_phi().image_point(y.apply(0));
    let c = ar.comm(e, f);
    ar.perm(c)
}

/// Evaluates both defining relations of `nu(G)` for every triple of
/// elements of `G` inside the generator-indexed group. Since the
/// generator-indexed relations are among them, success proves that the
/// element-indexed presentation defines the same group.
pub fn element_relations_hold(nu: &NuGroup) -> Result<Option<TripleWitness>> {
    let base = nu.base();
    let order = base.order();
    if order.saturating_pow(3) > TRIPLE_LIMIT {
        return Err(Error::exceeded("element triples", TRIPLE_LIMIT));
    }
    let mut gar = base.arith();
    let mut ar = nu.nu().arith();
    let elements = gar.elements();
    let mut e = vec![0u32; base.degree()];
    let mut f = vec![0u32; base.degree()];
    for &u in elements {
        e[u as usize] = nu.embed().image_point(u);
        f[u as usize] = nu.embed_phi().image_point(u);
    }
    for &g1 in elements {
        for &g2 in elements {
            let c = ar.comm(e[g1 as usize], f[g2 as usize]);
            for &g3 in elements {
                let (e3, f3) = (e[g3 as usize], f[g3 as usize]);
                let lhs = ar.conj(c, e3);
                let lhs_phi = ar.conj(c, f3);
                let e13 = ar.conj(e[g1 as usize], e3);
                let g23 = gar.conj(g2, g3);
                let rhs = ar.comm(e13, f[g23 as usize]);
                if lhs != rhs || lhs_phi != rhs {
                    return Ok(Some([g1, g2, g3]));
                }
            }
        }
    }
    Ok(None)
}

/// Order of the group defined by the element-indexed presentation, by coset
/// enumeration over the subgroup generated by the second copy of the
/// generators. That subgroup has order exactly `|G|`: it is a quotient of
/// `G` and maps onto `G` under `g, g^phi -> g`.
///
/// The generator-indexed relators are a subset of the element-indexed
/// ones; they drive the definition phase and the rest are imposed by
/// scanning the completed table.
pub fn element_mode_order(pres: &FinitePresentation, max_cosets: usize) -> Result<u64> {
    let g_order = regular_group(pres, max_cosets)?.order();
    let small = nu_presentation_bounded(pres, IndexMode::Generators, max_cosets)?;
    let full = nu_presentation_bounded(pres, IndexMode::Elements, max_cosets)?;
    let known: HashSet<&Word> = small.relators().iter().collect();
    debug_assert!(small.relators().iter().all(|r| full.relators().contains(r)));
    let extra: Vec<Word> = full
        .relators()
        .iter()
        .filter(|r| !known.contains(r))
        .cloned()
        .collect();
    let n = pres.num_generators() as u32;
    let sub: Vec<Word> = (n..2 * n).map(Word::gen).collect();
    let table = enumerate_cosets_refined(&small, &extra, &sub, max_cosets);
    if table.status() == TableStatus::Exceeded {
        return Err(Error::exceeded("coset enumeration", max_cosets as u64));
    }
    Ok(table.len() as u64 * g_order)
}

/// Lower central series of `nu(G)` and of both copies of `G` inside it.
#[derive(Clone, Debug)]
pub struct NuSeries {
    pub nu: Vec<PermGroup>,
    pub g: Vec<PermGroup>,
    pub g_phi: Vec<PermGroup>,
}

impl NuSeries {
    pub fn new(nu: &NuGroup) -> Self {
        NuSeries {
            nu: lower_central_series(nu.nu()),
            g: lower_central_series(&nu.g()),
            g_phi: lower_central_series(&nu.g_phi()),
        }
    }

    /// `gamma_{k+1}(G) gamma_{k+1}(G^phi) [gamma_k(G), G^phi]` inside `nu(G)`.
    pub fn gamma_step_rhs(&self, k: usize) -> PermGroup {
        join(&[
            &gamma(&self.g, k + 1),
            &gamma(&self.g_phi, k + 1),
            &commutator_subgroup(&gamma(&self.g, k), &self.g_phi[0]),
        ])
    }

    /// `gamma_{k+1}(nu) = gamma_{k+1}(G) gamma_{k+1}(G^phi) [gamma_k(G), G^phi]`.
    pub fn gamma_step_holds(&self, k: usize) -> bool {
        gamma(&self.nu, k + 1).same_as(&self.gamma_step_rhs(k))
    }

    /// Nilpotency class of `nu(G)`.
    pub fn nu_class(&self) -> usize {
        self.nu.len() - 1
    }
}

/// Checks the lower central step identity of `nu(G)` for `k`.
pub fn gamma_nu_check(nu: &NuGroup, k: usize) -> bool {
    assert!(k >= 1);
    NuSeries::new(nu).gamma_step_holds(k)
}

/// Samples `(g, h, x, y)` and checks, in `nu(G)`:
/// `[g,h^phi]^{[x,y^phi]} = [g,h^phi]^{[x,y]}`, the six-fold equality of
/// triple commutators mixing the copies, and
/// `[[g,h^phi],[x,y^phi]] = [[g,h],[x,y]^phi]`.
/// Returns the index and base points of the first failing tuple.
pub fn basic_identity_failure(
    nu: &NuGroup,
    samples: usize,
    seed: u64,
) -> Option<(usize, [u32; 4])> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elements = nu.base().arith().elements();
    let mut ar = nu.nu().arith();
    let e = |u: u32| nu.embed().image_point(u);
    let f = |u: u32| nu.embed_phi().image_point(u);
    for i in 0..samples {
        let t: [u32; 4] = std::array::from_fn(|_| elements[rng.gen_range(0..elements.len())]);
        if !identities_hold(&mut ar, t.map(e), t.map(f)) {
            return Some((i, t));
        }
    }
    None
}

fn identities_hold(ar: &mut crate::perm::Arith<'_>, e: [u32; 4], f: [u32; 4]) -> bool {
    let [eg, eh, ex, ey] = e;
    let [fg, fh, fx, fy] = f;
    let c = ar.comm(eg, fh);
    let d = ar.comm(ex, fy);
    let exy = ar.comm(ex, ey);
    let first = ar.conj(c, d) == ar.conj(c, exy);

    let mut triple = |a: u32, b: u32, z: u32| {
        let ab = ar.comm(a, b);
        ar.comm(ab, z)
    };
    let t = [
        triple(eg, fh, fx),
        triple(eg, eh, fx),
        triple(eg, fh, ex),
        triple(fg, eh, fx),
        triple(fg, fh, ex),
        triple(fg, eh, ex),
    ];
    let second = t.iter().all(|&v| v == t[0]);

    let egh = ar.comm(eg, eh);
    let fxy = ar.comm(fx, fy);
    let third = ar.comm(c, d) == ar.comm(egh, fxy);
    first && second && third
}

pub fn basic_identity_check(nu: &NuGroup, samples: usize, seed: u64) -> bool {
    basic_identity_failure(nu, samples, seed).is_none()
}

#[cfg(test)]
mod tests {
    use super::super::tests::nu_of;
    use super::*;
    use crate::presentation::{catalog_group, GroupSpec};

    #[test]
    fn element_relations_for_small_groups() {
        for spec in ["cyclic:2", "cyclic:4", "elemab:2,2", "dihedral:8", "quaternion:8", "extraspecial:3,p2"] {
            assert_eq!(element_relations_hold(&nu_of(spec)).unwrap(), None, "{spec}");
        }
    }

    #[test]
    fn element_mode_orders() {
        for (spec, order) in [("cyclic:2", 8), ("elemab:2,2", 256), ("dihedral:8", 2048)] {
            let pres = catalog_group(&spec.parse::<GroupSpec>().unwrap()).unwrap();
            assert_eq!(element_mode_order(&pres, 1 << 20).unwrap(), order, "{spec}");
        }
    }

    #[test]
    fn tensor_examples() {
        let nu = nu_of("dihedral:8");
        let g = nu.base();
        let ar = g.arith();
        let els: Vec<Permutation> = ar.elements().iter().map(|&u| ar.perm(u)).collect();
        let id = &els[0];
        for y in &els {
            assert!(tensor_of(&nu, id, y).is_identity());
        }
        for x in &els {
            for y in &els {
                let t = tensor_of(&nu, x, y);
                assert!(nu.tensor().contains(&t));
                assert_eq!(nu.rho().apply(&t), x.commutator(y));
            }
        }
        let c = nu_of("cyclic:4");
        let gen = c.base().generators()[0].clone();
        let t = tensor_of(&c, &gen, &gen);
        assert!(tensor_of(&c, &gen.pow(4), &gen).is_identity());
        for j in 1..4 {
            assert_eq!(tensor_of(&c, &gen.pow(j), &gen), t.pow(j));
        }
    }

    #[test]
    fn gamma_steps() {
        let ab = nu_of("elemab:2,2");
        assert!(gamma_nu_check(&ab, 1));
        let d = NuSeries::new(&nu_of("dihedral:8"));
        for k in 1..=3 {
            assert!(d.gamma_step_holds(k));
        }
        let h = NuSeries::new(&nu_of("extraspecial:3,p2"));
        for k in 1..=2 {
            assert!(h.gamma_step_holds(k));
        }
    }

    #[test]
    fn basic_identities() {
        assert!(basic_identity_check(&nu_of("dihedral:8"), 100, 7));
        assert!(basic_identity_check(&nu_of("extraspecial:3,p2"), 100, 7));
        let c2 = nu_of("cyclic:2");
        let mut ar = c2.nu().arith();
        assert!(identities_hold(&mut ar, [0; 4], [0; 4]));
    }
}
