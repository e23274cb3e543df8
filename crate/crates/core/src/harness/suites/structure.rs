use super::{checked, log_order, show, Emitter};
use crate::harness::context::Ctx;
use crate::harness::mix;
use crate::harness::report::Recorder;
use crate::nu::{
    abelian_invariants, basic_identity_failure, element_mode_order, element_relations_hold,
    schur_multiplier_oracle, ELEMENT_MODE_LIMIT, SCHUR_ORACLE_LIMIT,
};
use crate::perm::{is_normal, commutator_subgroup, Permutation};

const IDENTITY_SAMPLES: usize = 100;

pub(super) fn run(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let nu = &ctx.nu;
    let c = ctx.prof.class as usize;

    em.emit("nu-order-decomposition", "", None, || {
        let mut r = Recorder::new();
        let g = nu.base().order() as u128;
        r.equal(
            "|nu(G)| = |G|^2 |[G,G^phi]|",
            nu.nu().order() as u128,
            g * g * nu.tensor().order() as u128,
        );
        checked(r)
    });

    em.emit("nu-lcs-decomposition", "", None, || {
        let mut r = Recorder::new();
        for k in 1..=c + 1 {
            r.same(
                format!("gamma_{}(nu) = gamma_{0}(G) gamma_{0}(G^phi) [gamma_{}(G), G^phi]", k + 1, k),
                &ctx.gamma_nu(k + 1),
                &ctx.series.gamma_step_rhs(k),
            );
        }
        r.at_most("class of nu(G) at most c + 1", ctx.series.nu_class() as i128, c as i128 + 1);
        checked(r)
    });

    let seed = mix(ctx.seed, "nu-basic-identities");
    em.emit("nu-basic-identities", "", Some(seed), || {
        let mut r = Recorder::new();
        let failure = basic_identity_failure(nu, IDENTITY_SAMPLES, seed);
        let clean = failure.map_or(IDENTITY_SAMPLES, |(i, _)| i);
        r.equal(
            "samples before the first violated identity",
            clean as u128,
            IDENTITY_SAMPLES as u128,
        );
        if let Some((i, t)) = failure {
            let ar = nu.base().arith();
            let xs: Vec<Permutation> = t.iter().map(|&u| ar.perm(u)).collect();
            r.witness(format!("sample {i}: (g, h, x, y) = ({})", show(&xs)));
        }
        checked(r)
    });

    for (sel, n) in ctx.normals() {
        let params = format!("N={sel}");
        let n = match n {
            Ok(n) => n,
            Err(e) => {
                let status = match e {
                    crate::Error::HypothesisUnmet(why) => Ok(why.clone()),
                    other => Err(other.clone()),
                };
                em.emit_all(&["projection-kernel", "tensor-projection-sequence"], &params, &status);
                continue;
            }
        };
        em.emit("projection-kernel", params.clone(), None, || {
            let kk = ctx.kernel(n)?;
            let mut r = Recorder::new();
            r.equal(
                "|nu(G)| = |K| |nu(G/N)|",
                nu.nu().order() as u128,
                kk.k.order() as u128 * kk.quotient.nu().order() as u128,
            );
            r.same("kernel of nu(G) -> nu(G/N) is K", &kk.projection.kernel(), &kk.k);
            let n_nu = nu.embed_subgroup(n);
            let n_phi = nu.embed_phi_subgroup(n);
            for (what, h) in [
                ("[N,G^phi] normal in nu(G)", commutator_subgroup(&n_nu, &nu.g_phi())),
                ("[G,N^phi] normal in nu(G)", commutator_subgroup(&nu.g(), &n_phi)),
            ] {
                r.equal(what, is_normal(&h, nu.nu()) as u128, 1);
            }
            checked(r)
        });
        em.emit("tensor-projection-sequence", params, None, || {
            let kk = ctx.kernel(n)?;
            let f = kk.projection.restrict(nu.tensor())?;
            let mut r = Recorder::new();
            r.subgroup("[N,G^phi][G,N^phi] <= [G,G^phi]", &kk.cross, nu.tensor());
            r.same("kernel on [G,G^phi] is [N,G^phi][G,N^phi]", &f.kernel(), &kk.cross);
            r.same("image of [G,G^phi] is [G/N,(G/N)^phi]", &f.image(), kk.quotient.tensor());
            r.equal(
                "|[G,G^phi]| = |[N,G^phi][G,N^phi]| |[G/N,(G/N)^phi]|",
                nu.tensor().order() as u128,
                kk.cross.order() as u128 * kk.quotient.tensor().order() as u128,
            );
            checked(r)
        });
    }

    em.emit("nu-exponent-chain", "", None, || {
        let (g, n, mu, m, d, t) = (
            ctx.exp_g as u128,
            ctx.exp_nu as u128,
            ctx.exp_mu as u128,
            ctx.exp_schur as u128,
            ctx.exp_delta as u128,
            ctx.exp_tensor as u128,
        );
        let mut r = Recorder::new();
        r.divides("exp(nu) | exp(G) exp([G,G^phi])", n, g * t);
        r.divides("exp(nu) | exp(G) exp(mu)", n, g * mu);
        r.divides("exp(mu) | exp(M) exp(Delta)", mu, m * d);
        r.divides("exp(Delta) | exp(G)", d, g);
        r.divides("exp(nu) | exp(G)^2 exp(M)", n, g * g * m);
        // [g^j, g^phi] = [g, g^phi]^j for every g and every j up to |g|
        let mut gar = nu.base().arith();
        let mut ar = nu.nu().arith();
        let mut good = 0u128;
        for &u in gar.elements() {
            let f = nu.embed_phi().image_point(u);
            let base = ar.comm(nu.embed().image_point(u), f);
            let order = gar.order(u);
            let ok = (1..=order).all(|j| {
                let lhs = ar.comm(nu.embed().image_point(gar.pow(u, j)), f);
                lhs == ar.pow(base, j)
            });
            good += ok as u128;
        }
        r.equal(
            "elements g with [g^j, g^phi] = [g, g^phi]^j for all j",
            good,
            nu.base().order() as u128,
        );
        let abelianization = nu.base().order() / nu.rho_prime().target().order();
        if abelianization % 2 == 1 {
            r.divides("exp(nu) | exp(G) max(exp(G), exp(M)) (|G^ab| odd)", n, g * g.max(m));
        } else {
            r.note("|G^ab| is even; the refined bound does not apply");
        }
        checked(r)
    });

    em.emit("nu-coclass-lower-bound", "", None, || {
        let p = ctx.p;
        let n = ctx.prof.n as i128;
        let r0 = ctx.prof.coclass as i128;
        let nu_n = log_order(nu.nu(), p) as i128;
        let nu_c = ctx.series.nu_class() as i128;
        let abelianization = (nu.base().order() / nu.rho_prime().target().order()) as u128;
        let mut r = Recorder::new();
        r.at_most("|G^ab| <= |Delta|", abelianization as i128, nu.delta().order() as i128);
        r.divides("|G^ab| divides |mu|", abelianization, nu.mu().order() as u128);
        r.at_most("|G| <= |[G,G^phi]|", nu.base().order() as i128, nu.tensor().order() as i128);
        r.at_least("coclass of nu(G) at least r + 2n - 1", nu_n - nu_c, r0 + 2 * n - 1);
        checked(r)
    });
}

pub(super) fn oracles(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let nu = &ctx.nu;
    let order = nu.base().order();
    em.emit("element-presentation-agreement", "", None, || {
        let mut r = Recorder::new();
        if order <= ELEMENT_MODE_LIMIT {
            let pres = nu.presentation();
            let eo = element_mode_order(pres, ctx.opts.max_cosets)?;
            r.equal(
                "|nu| from the element-indexed presentation",
                eo as u128,
                nu.nu().order() as u128,
            );
        } else {
            r.note("element-indexed enumeration is beyond its bound; relations checked on all triples");
        }
        let bad = element_relations_hold(nu)?;
        r.equal("element triples violating a relation", bad.is_some() as u128, 0);
        if let Some(t) = bad {
            let ar = nu.base().arith();
            let xs: Vec<Permutation> = t.iter().map(|&u| ar.perm(u)).collect();
            r.witness(format!("(g1, g2, g3) = ({})", show(&xs)));
        }
        checked(r)
    });
    em.emit("schur-oracle-agreement", "", None, || {
        if order > SCHUR_ORACLE_LIMIT {
            return Err(crate::Error::exceeded("group order for the bar-resolution oracle", SCHUR_ORACLE_LIMIT));
        }
        let oracle = schur_multiplier_oracle(nu.base())?;
        let built = abelian_invariants(nu.schur())?;
        let mut r = Recorder::new();
        r.equal(
            "|mu/Delta| = |H_2(G)|",
            nu.schur().order() as u128,
            oracle.iter().map(|&q| q as u128).product(),
        );
        let holds = built == oracle;
        r.equal("invariants of mu/Delta equal those of H_2(G)", holds as u128, 1);
        r.note(format!("mu/Delta: {built:?}, H_2(G): {oracle:?}"));
        checked(r)
    });
}
