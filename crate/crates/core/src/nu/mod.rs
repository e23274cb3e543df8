//! The group `nu(G)` and its canonical subgroups.
//!
//! `nu(G)` is generated by two copies `G` and `G^phi` of a group subject to
//! `[g1, g2^phi]^{g3} = [g1^{g3}, (g2^{g3})^phi] = [g1, g2^phi]^{g3^phi}`.
//! Its subgroup `[G, G^phi]` is isomorphic to the non-abelian tensor square.

mod checks;
mod kernel;
mod presentation;
mod schur;

pub use checks::{
    basic_identity_check, basic_identity_failure, element_mode_order, element_relations_hold,
    gamma_nu_check, tensor_of, NuSeries, TripleWitness,
};
pub use kernel::{kernel_k, quotient_presentation, KernelK};
pub use presentation::{nu_presentation, IndexMode, ELEMENT_MODE_LIMIT};
pub use schur::{abelian_invariants, schur_multiplier_oracle, SCHUR_ORACLE_LIMIT};

use std::collections::HashMap;

use crate::coset::{enumerate_cosets, regular_group, TableStatus, DEFAULT_MAX_COSETS};
use crate::error::{Error, Result};
use crate::perm::{
    check_normal, commutator_subgroup, quotient, Builder, Homomorphism, PermGroup, Permutation,
};
use crate::presentation::{FinitePresentation, Word};

/// Resource bounds for building `nu(G)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NuOptions {
    pub max_cosets: usize,
}

impl Default for NuOptions {
    fn default() -> Self {
        NuOptions {
            max_cosets: DEFAULT_MAX_COSETS,
        }
    }
}

/// `nu(G)` as a regular permutation group, together with the two
/// embeddings of `G` and the subgroups `[G,G^phi]`, `Delta`, `Theta`, `mu`
/// and `M(G) = mu/Delta`.
#[derive(Clone, Debug)]
pub struct NuGroup {
    presentation: FinitePresentation,
    base: PermGroup,
    nu: PermGroup,
    embed: Homomorphism,
    embed_phi: Homomorphism,
    tensor: PermGroup,
    delta: PermGroup,
    theta: PermGroup,
    mu: PermGroup,
    schur: PermGroup,
    rho: Homomorphism,
    rho_prime: Homomorphism,
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::invariant(what.to_string()))
    }
}

/// Regular representation of `nu(G)` built from the much smaller coset
/// table over `H = <X^phi>`.
///
/// A point is a pair `(c, g)` with `c` a coset and `g` in `G`; generator
/// `x` sends it to `(c x, g t_c rho(x) t_{cx}^-1)` where `t_c` is the image
/// under `rho` of the tree transversal of `c`. Relators act trivially
/// (the `G` part telescopes to `rho(r) = 1`), so this is an action of
/// `nu(G)`. It is transitive on `|nu : H| |G|` points while `H` is an image
/// of `G`, hence `|nu| <= |nu : H| |G|`, and the action is regular.
fn regular_nu(
    nu_pres: &FinitePresentation,
    base: &PermGroup,
    n: usize,
    max_cosets: usize,
) -> Result<PermGroup> {
    let sub: Vec<Word> = (n..2 * n).map(|i| Word::gen(i as u32)).collect();
    let table = enumerate_cosets(nu_pres, &sub, max_cosets);
    if table.status() == TableStatus::Exceeded {
        return Err(Error::exceeded("coset enumeration", max_cosets as u64));
    }
    let index = table.len();
    let order = base.order() as usize;
    let degree = index
        .checked_mul(order)
        .filter(|&d| d <= max_cosets)
        .ok_or_else(|| Error::exceeded("points of the regular representation of nu(G)", max_cosets as u64))?;
    let mut ar = base.arith();
    let rho: Vec<u32> = (0..2 * n).map(|i| base.generators()[i % n].apply(0)).collect();
    let next = |c: usize, i: usize| table.entry(c, 2 * i).expect("complete table");

    let mut tau = vec![u32::MAX; index];
    tau[0] = ar.identity();
    let mut queue = vec![0usize];
    let mut k = 0;
    while k < queue.len() {
        let c = queue[k];
        k += 1;
        for (i, &r) in rho.iter().enumerate() {
            let d = next(c, i);
            if tau[d] == u32::MAX {
                tau[d] = ar.mul(tau[c], r);
                queue.push(d);
            }
        }
    }
    let tau_inv: Vec<u32> = tau.iter().map(|&t| ar.inv(t)).collect();

    let mut right: HashMap<u32, Vec<u32>> = HashMap::new();
    let mut gens = Vec::with_capacity(2 * n);
    for (i, &r) in rho.iter().enumerate() {
        let mut images = vec![0u32; degree];
        for c in 0..index {
            let d = next(c, i);
            let t = ar.mul(tau[c], r);
            let s = ar.mul(t, tau_inv[d]);
            let row = right
                .entry(s)
                .or_insert_with(|| (0..order as u32).map(|g| ar.mul(g, s)).collect());
            let target = &mut images[c * order..(c + 1) * order];
            for (slot, &h) in target.iter_mut().zip(row.iter()) {
                *slot = (d * order) as u32 + h;
            }
        }
        gens.push(Permutation::from_images_unchecked(images));
    }
    let nu = PermGroup::semiregular(degree, gens);
    check(nu.order() == degree as u64, "the pair action must be transitive")?;
    Ok(nu)
}

/// Builds `nu(G)` from a presentation of `G` with generator-indexed relations.
pub fn build_nu(pres: &FinitePresentation) -> Result<NuGroup> {
    build_nu_with(pres, &NuOptions::default())
}

pub fn build_nu_with(pres: &FinitePresentation, opts: &NuOptions) -> Result<NuGroup> {
    let base = regular_group(pres, opts.max_cosets)?;
    let n = pres.num_generators();
    let nu_pres = presentation::nu_presentation_bounded(pres, IndexMode::Generators, opts.max_cosets)?;
    let nu = regular_nu(&nu_pres, &base, n, opts.max_cosets)?;
    let (xs, ys) = nu.generators().split_at(n);
    let embed = Homomorphism::new(base.clone(), nu.clone(), xs.to_vec())?;
    let embed_phi = Homomorphism::new(base.clone(), nu.clone(), ys.to_vec())?;
    let rho_images: Vec<Permutation> = base
        .generators()
        .iter()
        .chain(base.generators())
        .cloned()
        .collect();
    let rho = Homomorphism::new(nu.clone(), base.clone(), rho_images)?;

    let g_nu = nu.sibling(xs.to_vec());
    let g_phi = nu.sibling(ys.to_vec());
    let tensor = commutator_subgroup(&g_nu, &g_phi);

    let mut ar = nu.arith();
    let mut b = Builder::new(&nu);
    for &u in base.arith().elements() {
        let c = ar.comm(embed.image_point(u), embed_phi.image_point(u));
        if !b.has_point(c) {
            b.add(ar.perm(c));
        }
    }
    let delta = b.finish();

    let theta = rho.kernel();
    let rho_tensor = rho.restrict(&tensor)?;
    let mu = rho_tensor.kernel();
    let derived = commutator_subgroup(&base, &base);
    let rho_prime = Homomorphism::new(
        rho_tensor.source().clone(),
        derived.clone(),
        rho_tensor.generator_images().to_vec(),
    )?;
    let (schur, _) = quotient(&mu, &delta)?;

    let g_order = base.order();
    check(
        nu.order() == g_order * g_order * tensor.order(),
        "|nu(G)| must equal |G|^2 |[G,G^phi]|",
    )?;
    for (name, h) in [("tensor", &tensor), ("Delta", &delta), ("Theta", &theta), ("mu", &mu)] {
        check_normal(h, &nu).map_err(|e| Error::invariant(format!("{name} is not normal: {e}")))?;
    }
    check(delta.is_subgroup_of(&mu), "Delta must lie in mu")?;
    check(mu.is_subgroup_of(&tensor), "mu must lie in [G,G^phi]")?;
    check(mu.is_subgroup_of(&theta), "mu must lie in Theta")?;
    check(rho_prime.is_surjective(), "rho' must map onto G'")?;
    check(
        mu.order() * derived.order() == tensor.order(),
        "mu must be the kernel of rho' onto G'",
    )?;
    for (i, g) in base.generators().iter().enumerate() {
        let gp = g.apply(0);
        check(
            rho.image_point(xs[i].apply(0)) == gp && rho.image_point(ys[i].apply(0)) == gp,
            "rho must invert both embeddings",
        )?;
    }

    Ok(NuGroup {
        presentation: pres.clone(),
        base,
        nu,
        embed,
        embed_phi,
        tensor,
        delta,
        theta,
        mu,
        schur,
        rho,
        rho_prime,
    })
}

impl NuGroup {
    pub fn presentation(&self) -> &FinitePresentation {
        &self.presentation
    }

    /// The group `G` in its regular representation.
    pub fn base(&self) -> &PermGroup {
        &self.base
    }

    pub fn nu(&self) -> &PermGroup {
        &self.nu
    }

    pub fn embed(&self) -> &Homomorphism {
        &self.embed
    }

    pub fn embed_phi(&self) -> &Homomorphism {
        &self.embed_phi
    }

    /// `[G, G^phi]`.
    pub fn tensor(&self) -> &PermGroup {
        &self.tensor
    }

    pub fn delta(&self) -> &PermGroup {
        &self.delta
    }

    pub fn theta(&self) -> &PermGroup {
        &self.theta
    }

    pub fn mu(&self) -> &PermGroup {
        &self.mu
    }

    /// `M(G)` realized as `mu/Delta`.
    pub fn schur(&self) -> &PermGroup {
        &self.schur
    }

    pub fn rho(&self) -> &Homomorphism {
        &self.rho
    }

    pub fn rho_prime(&self) -> &Homomorphism {
        &self.rho_prime
    }

    fn push(&self, f: &Homomorphism, h: &PermGroup) -> PermGroup {
        let ar = self.nu.arith();
        let gens = h
            .generators()
            .iter()
            .map(|x| ar.perm(f.image_point(x.apply(0))))
            .collect();
        self.nu.sibling(gens)
    }

    /// The image of a subgroup of `G` in the first copy.
    pub fn embed_subgroup(&self, h: &PermGroup) -> PermGroup {
        self.push(&self.embed, h)
    }

    /// The image of a subgroup of `G` in the copy `G^phi`.
    pub fn embed_phi_subgroup(&self, h: &PermGroup) -> PermGroup {
        self.push(&self.embed_phi, h)
    }

    /// The first copy of `G` inside `nu(G)`.
    pub fn g(&self) -> PermGroup {
        self.nu.sibling(self.embed.generator_images().to_vec())
    }

    /// The copy `G^phi` inside `nu(G)`.
    pub fn g_phi(&self) -> PermGroup {
        self.nu.sibling(self.embed_phi.generator_images().to_vec())
    }
}
