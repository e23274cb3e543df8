use super::{checked, unmet, Emitter};
use crate::harness::context::Ctx;
use crate::harness::report::Recorder;
use crate::perm::{
    agemo, commutator_subgroup, gamma, group_exponent, iterated_commutator, lower_central_series,
    PermGroup,
};
use crate::pgroup::{bold_agemo, bold_p, is_potent, is_powerful, join};
use crate::Error;

const CLAIMS: [&str; 9] = [
    "kernel-lcs-decomposition",
    "kernel-lcs-power-odd",
    "kernel-lcs-power-even",
    "kernel-lcs-potently-embedded",
    "kernel-exponent",
    "nu-exponent-by-quotient",
    "nu-exponent-by-quotient-sharp",
    "tensor-exponent-by-quotient",
    "tensor-exponent-by-quotient-sharp",
];

pub(super) fn run(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    for (sel, n) in ctx.normals() {
        let params = format!("N={sel}");
        match n {
            Ok(n) => run_one(ctx, em, n, &params),
            Err(Error::HypothesisUnmet(why)) => em.emit_all(&CLAIMS, &params, &Ok(why.clone())),
            Err(e) => em.emit_all(&CLAIMS, &params, &Err(e.clone())),
        }
    }
}

fn run_one(ctx: &Ctx<'_>, em: &mut Emitter<'_>, n: &PermGroup, params: &str) {
    let p = ctx.p;
    let nu = &ctx.nu;
    let bp = bold_p(p) as u128;
    let n_series = lower_central_series(n);
    let n_nu = nu.embed_subgroup(n);
    let n_phi = nu.embed_phi_subgroup(n);
    let nn_series = lower_central_series(&n_nu);
    let np_series = lower_central_series(&n_phi);
    // either hypothesis of the potent-quotient bound
    let potent = is_potent(n, p);
    let gamma_p_trivial = gamma(&n_series, p as usize).is_trivial();
    let loose_hyp = || -> crate::Result<Option<String>> {
        Ok(if potent.clone()? || gamma_p_trivial {
            None
        } else {
            Some("N is neither potent nor of class below p".to_string())
        })
    };
    let sharp_hyp = || -> crate::Result<Option<String>> {
        if p < 5 {
            return Ok(Some(format!("the argument for this bound needs p >= 5 (p = {p})")));
        }
        let lhs = gamma(&n_series, (p - 2) as usize);
        Ok(if lhs.is_subgroup_of(&agemo(n, p, 1)?) {
            None
        } else {
            Some("gamma_(p-2)(N) is not contained in N^p".to_string())
        })
    };
    let k_series = |k: &PermGroup| lower_central_series(k);

    em.emit("kernel-lcs-decomposition", params, None, || {
        let kk = ctx.kernel(n)?;
        let ks = k_series(&kk.k);
        let mut r = Recorder::new();
        for s in 2..=ks.len().max(2) {
            let rhs = join(&[
                &gamma(&nn_series, s),
                &gamma(&np_series, s),
                &commutator_subgroup(&gamma(&nn_series, s - 1), &n_phi),
                &commutator_subgroup(&n_nu, &gamma(&np_series, s - 1)),
            ]);
            r.same(format!("gamma_{s}(K)"), &gamma(&ks, s), &rhs);
        }
        checked(r)
    });

    em.emit("kernel-lcs-power-odd", params, None, || {
        if p < 3 {
            return unmet("needs p >= 3");
        }
        let np = agemo(n, p, 1)?;
        let degrees: Vec<usize> = (2..p as usize)
            .filter(|&d| gamma(&n_series, d).is_subgroup_of(&np))
            .collect();
        if degrees.is_empty() {
            return unmet("no 1 < n < p with gamma_n(N) <= N^p");
        }
        let kk = ctx.kernel(n)?;
        let ks = k_series(&kk.k);
        let bound = join(&[
            &agemo(&gamma(&nn_series, 2), p, 1)?,
            &agemo(&gamma(&np_series, 2), p, 1)?,
            &agemo(&commutator_subgroup(&n_nu, &n_phi), p, 1)?,
        ]);
        let mut r = Recorder::new();
        for d in degrees {
            r.subgroup(
                format!("gamma_{}(K) <= gamma_2(N)^p gamma_2(N^phi)^p [N,N^phi]^p", d + 1),
                &gamma(&ks, d + 1),
                &bound,
            );
        }
        checked(r)
    });

    em.emit("kernel-lcs-power-even", params, None, || {
        if p != 2 {
            return unmet("needs p = 2");
        }
        if !is_powerful(n, p)? {
            return unmet("N is not powerful");
        }
        let kk = ctx.kernel(n)?;
        let ks = k_series(&kk.k);
        let bound = join(&[
            &agemo(&gamma(&nn_series, 2), 2, 2)?,
            &agemo(&gamma(&np_series, 2), 2, 2)?,
            &agemo(&commutator_subgroup(&n_nu, &n_phi), 2, 2)?,
        ]);
        let mut r = Recorder::new();
        r.subgroup(
            "gamma_3(K) <= gamma_2(N)^4 gamma_2(N^phi)^4 [N,N^phi]^4",
            &gamma(&ks, 3),
            &bound,
        );
        checked(r)
    });

    em.emit("kernel-lcs-potently-embedded", params, None, || {
        if !potent.clone()? {
            return unmet("N is not potent");
        }
        let kk = ctx.kernel(n)?;
        let ks = k_series(&kk.k);
        let j = if p == 2 { 1 } else { (p - 2) as usize };
        let mut r = Recorder::new();
        for s in 2..=ks.len().max(2) {
            let gs = gamma(&ks, s);
            r.subgroup(
                format!("[gamma_{s}(K), _{j} K] <= gamma_{s}(K)^bold(p)"),
                &iterated_commutator(&gs, &kk.k, j),
                &bold_agemo(&gs, p)?,
            );
        }
        checked(r)
    });

    em.emit("kernel-exponent", params, None, || {
        if let Some(why) = loose_hyp()? {
            return unmet(why);
        }
        let kk = ctx.kernel(n)?;
        let mut r = Recorder::new();
        r.divides(
            "exp(K) | bold(p) exp(N)",
            group_exponent(&kk.k)? as u128,
            bp * group_exponent(n)? as u128,
        );
        checked(r)
    });

    em.emit("nu-exponent-by-quotient", params, None, || {
        if let Some(why) = loose_hyp()? {
            return unmet(why);
        }
        let kk = ctx.kernel(n)?;
        let mut r = Recorder::new();
        r.divides(
            "exp(nu(G)) | bold(p) exp(nu(G/N)) exp(N)",
            ctx.exp_nu as u128,
            bp * group_exponent(kk.quotient.nu())? as u128 * group_exponent(n)? as u128,
        );
        checked(r)
    });

    em.emit("nu-exponent-by-quotient-sharp", params, None, || {
        if let Some(why) = sharp_hyp()? {
            return unmet(why);
        }
        let kk = ctx.kernel(n)?;
        let mut r = Recorder::new();
        r.divides(
            "exp(nu(G)) | exp(nu(G/N)) exp(N)",
            ctx.exp_nu as u128,
            group_exponent(kk.quotient.nu())? as u128 * group_exponent(n)? as u128,
        );
        checked(r)
    });

    em.emit("tensor-exponent-by-quotient", params, None, || {
        if let Some(why) = loose_hyp()? {
            return unmet(why);
        }
        let kk = ctx.kernel(n)?;
        let mut r = Recorder::new();
        r.divides(
            "exp([G,G^phi]) | bold(p) exp([G/N,(G/N)^phi]) exp(N)",
            ctx.exp_tensor as u128,
            bp * group_exponent(kk.quotient.tensor())? as u128 * group_exponent(n)? as u128,
        );
        checked(r)
    });

    em.emit("tensor-exponent-by-quotient-sharp", params, None, || {
        if let Some(why) = sharp_hyp()? {
            return unmet(why);
        }
        let kk = ctx.kernel(n)?;
        let mut r = Recorder::new();
        r.divides(
            "exp([G,G^phi]) | exp([G/N,(G/N)^phi]) exp(N)",
            ctx.exp_tensor as u128,
            group_exponent(kk.quotient.tensor())? as u128 * group_exponent(n)? as u128,
        );
        checked(r)
    });
}
