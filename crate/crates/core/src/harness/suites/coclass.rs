use super::{ceil_log, checked, ipow, log_order, unmet, Emitter};
use crate::harness::context::Ctx;
use crate::harness::report::Recorder;
use crate::perm::{agemo, commutator_subgroup, group_exponent};
use crate::pgroup::{bold_p, join, m_of, maximal_class_g1};

fn is_maximal_class(ctx: &Ctx<'_>) -> bool {
    ctx.prof.coclass == 1 && ctx.prof.n >= 2
}

fn not_maximal(ctx: &Ctx<'_>) -> String {
    format!(
        "not of maximal class (order p^{}, class {})",
        ctx.prof.n, ctx.prof.class
    )
}

pub(super) fn maximal_class(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let p = ctx.p;
    let bp = bold_p(p) as u128;
    let eg = ctx.exp_g as u128;

    em.emit("nu-exponent-maximal-class", "", None, || {
        if !is_maximal_class(ctx) {
            return unmet(not_maximal(ctx));
        }
        let mut r = Recorder::new();
        r.divides("exp(nu(G)) | bold(p)^2 exp(G)", ctx.exp_nu as u128, bp * bp * eg);
        checked(r)
    });

    em.emit("mu-tensor-exponent-maximal-class", "", None, || {
        if !is_maximal_class(ctx) {
            return unmet(not_maximal(ctx));
        }
        let mut r = Recorder::new();
        r.divides("exp(mu(G)) | bold(p)^2 exp(G)", ctx.exp_mu as u128, bp * bp * eg);
        r.divides("exp([G,G^phi]) | bold(p)^2 exp(G)", ctx.exp_tensor as u128, bp * bp * eg);
        checked(r)
    });

    em.emit("tensor-exponent-maximal-class-two", "", None, || {
        if p != 2 {
            return unmet("needs p = 2");
        }
        if !is_maximal_class(ctx) {
            return unmet(not_maximal(ctx));
        }
        let mut r = Recorder::new();
        r.divides("exp([G,G^phi]) | exp(G)", ctx.exp_tensor as u128, eg);
        checked(r)
    });

    em.emit("maximal-class-g1-power", "", None, || {
        if !is_maximal_class(ctx) {
            return unmet(not_maximal(ctx));
        }
        if (ctx.prof.n as u64) < p + 2 {
            return unmet(format!("order p^{} is below p^(p+2)", ctx.prof.n));
        }
        let g1 = maximal_class_g1(ctx.base(), p)?;
        let mut r = Recorder::new();
        r.equal("|G : G_1| = p", (ctx.base().order() / g1.order()) as u128, p as u128);
        r.same("gamma_p(G) = G_1^p", &ctx.gamma_g(p as usize), &agemo(&g1, p, 1)?);
        if p == 2 {
            r.equal("G_1 is cyclic: exp(G_1) = |G_1|", group_exponent(&g1)? as u128, g1.order() as u128);
        }
        checked(r)
    });

    em.emit("coclass-power-commutator", "", None, || {
        let c = ctx.prof.class as u64;
        let rr = ctx.prof.coclass;
        if rr == 0 {
            return unmet("coclass 0");
        }
        let threshold = if p == 2 {
            1u64 << (rr + 3)
        } else {
            2 * p.pow(rr)
        };
        if c < threshold {
            return unmet(format!("class {c} is below {threshold}"));
        }
        let m = m_of(p, rr).m as usize;
        let h = ctx.gamma_g(m);
        let frattini = join(&[&agemo(&h, p, 1)?, &commutator_subgroup(&h, &h)]);
        let s = (log_order(&h, p) - log_order(&frattini, p)) as usize;
        let mut r = Recorder::new();
        if s == 0 {
            r.note("gamma_m(G) is trivial");
            return checked(r);
        }
        for i in m..=c as usize + 1 {
            r.same(
                format!("gamma_{i}(G)^p = gamma_{}(G)", i + s),
                &agemo(&ctx.gamma_g(i), p, 1)?,
                &ctx.gamma_g(i + s),
            );
        }
        let shape = if p == 2 {
            s.is_power_of_two() && s.trailing_zeros() <= rr + 1
        } else {
            let q = s as u64 / (p - 1);
            (s as u64).is_multiple_of(p - 1)
                && crate::pgroup::log_p(q, p).is_some_and(|d| d < rr)
        };
        r.equal("s = d(gamma_m(G)) has the predicted form", shape as u128, 1);
        checked(r)
    });
}

pub(super) fn tensor_exponent(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let p = ctx.p;
    let eg = ctx.exp_g;
    let c = ctx.prof.class;
    let rr = ctx.prof.coclass;

    em.emit("tensor-exponent-class-log", "", None, || {
        let n = ceil_log(c as u64 + 1, p);
        let mut r = Recorder::new();
        r.divides(
            format!("exp([G,G^phi]) | exp(G)^{n}"),
            ctx.exp_tensor as u128,
            ipow(eg, n)?,
        );
        checked(r)
    });

    for (id, want_odd) in [
        ("tensor-exponent-coclass-odd", true),
        ("tensor-exponent-coclass-even", false),
    ] {
        em.emit(id, "", None, || {
            if (p % 2 == 1) != want_odd {
                return unmet(if want_odd { "needs p odd" } else { "needs p = 2" });
            }
            if rr == 0 {
                return unmet("coclass 0; m(p, r) needs r >= 1");
            }
            let m = m_of(p, rr).m as usize;
            let power = if want_odd { rr } else { rr + 3 };
            let egm = group_exponent(&ctx.gamma_g(m))?;
            let mut r = Recorder::new();
            r.divides(
                format!("exp([G,G^phi]) | exp(G)^{power} exp(gamma_{m}(G))"),
                ctx.exp_tensor as u128,
                ipow(eg, power)? * egm as u128,
            );
            checked(r)
        });
    }

    for (id, want_odd) in [
        ("schur-mu-exponent-coclass-odd", true),
        ("schur-mu-exponent-coclass-even", false),
    ] {
        em.emit(id, "", None, || {
            if (p % 2 == 1) != want_odd {
                return unmet(if want_odd { "needs p odd" } else { "needs p = 2" });
            }
            if rr == 0 {
                return unmet("coclass 0; the bound is derived for r >= 1");
            }
            let power = if want_odd { rr + 1 } else { rr + 3 };
            let bound = ipow(eg, power)?;
            let mut r = Recorder::new();
            r.divides(format!("exp(M(G)) | exp(G)^{power}"), ctx.exp_schur as u128, bound);
            r.divides(format!("exp(mu(G)) | exp(G)^{power}"), ctx.exp_mu as u128, bound);
            checked(r)
        });
    }
}
