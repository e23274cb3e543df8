use super::{build_nu_with, NuGroup, NuOptions};
use crate::error::{Error, Result};
use crate::perm::{check_normal, commutator_subgroup, Homomorphism, PermGroup};
use crate::pgroup::join;
use crate::presentation::{FinitePresentation, Word};

/// The kernel `K = N N^phi [N, G^phi] [G, N^phi]` of the map
/// `nu(G) -> nu(G/N)` induced by the projection `G -> G/N`.
#[derive(Clone, Debug)]
pub struct KernelK {
    /// `N` as a subgroup of `G`.
    pub n: PermGroup,
    /// `K` inside `nu(G)`.
    pub k: PermGroup,
    /// `[N, G^phi][G, N^phi]` inside `nu(G)`.
    pub cross: PermGroup,
    /// `nu(G/N)`.
    pub quotient: NuGroup,
    pub projection: Homomorphism,
}

/// A presentation of `G/N`: the relators of `G` plus words for the
/// generators of `N`.
pub fn quotient_presentation(nu: &NuGroup, n: &PermGroup) -> FinitePresentation {
    let mut pres = nu.presentation().clone();
    let ar = nu.base().arith();
    for x in n.generators() {
        let w = Word::from_pairs(ar.word(x.apply(0)).into_iter().map(|l| (l, 1)));
        if !w.is_identity() {
            pres.push_relator(w);
        }
    }
    pres
}

pub fn kernel_k(nu: &NuGroup, n: &PermGroup, opts: &NuOptions) -> Result<KernelK> {
    check_normal(n, nu.base())?;
    let n_nu = nu.embed_subgroup(n);
    let n_phi = nu.embed_phi_subgroup(n);
    let cross = join(&[
        &commutator_subgroup(&n_nu, &nu.g_phi()),
        &commutator_subgroup(&nu.g(), &n_phi),
    ]);
    let k = join(&[&n_nu, &n_phi, &cross]);
    let qpres = quotient_presentation(nu, n);
    // a trivial N adds no relators, and the build is deterministic
    let quotient = if qpres == *nu.presentation() {
        nu.clone()
    } else {
        build_nu_with(&qpres, opts)?
    };
    let projection = Homomorphism::new(
        nu.nu().clone(),
        quotient.nu().clone(),
        quotient.nu().generators().to_vec(),
    )?;
    if nu.nu().order() != k.order() * quotient.nu().order() {
        return Err(Error::invariant(format!(
            "|nu(G)| = {} but |K| |nu(G/N)| = {} * {}",
            nu.nu().order(),
            k.order(),
            quotient.nu().order()
        )));
    }
    if !projection.kernel().same_as(&k) {
        return Err(Error::invariant("the projection kernel differs from K"));
    }
    Ok(KernelK {
        n: n.clone(),
        k,
        cross,
        quotient,
        projection,
    })
}

#[cfg(test)]
mod tests {
    use super::super::tests::nu_of;
    use super::*;
    use crate::perm::center;

    #[test]
    fn whole_group_and_trivial_subgroup() {
        let nu = nu_of("dihedral:8");
        let all = kernel_k(&nu, nu.base(), &NuOptions::default()).unwrap();
        assert!(all.k.same_as(nu.nu()));
        assert_eq!(all.quotient.nu().order(), 1);
        let none = kernel_k(&nu, &nu.base().trivial_like(), &NuOptions::default()).unwrap();
        assert!(none.k.is_trivial());
    }

    #[test]
    fn dihedral_center() {
        let nu = nu_of("dihedral:8");
        let z = center(nu.base()).unwrap();
        let kk = kernel_k(&nu, &z, &NuOptions::default()).unwrap();
        assert_eq!(kk.k.order() * kk.quotient.nu().order(), nu.nu().order());
        // G/Z(G) is Klein four, whose nu has order 256
        assert_eq!(kk.quotient.nu().order(), 256);
        assert_eq!(kk.cross.order() * kk.quotient.tensor().order(), nu.tensor().order());
    }
}
