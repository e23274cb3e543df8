use super::{checked, unmet, Emitter};
use crate::harness::context::Ctx;
use crate::harness::report::Recorder;
use crate::perm::group_exponent;
use crate::pgroup::{is_powerful, power_commutator_holds};

const CLAIMS: [&str; 5] = [
    "nu-power-commutator-equality",
    "nu-power-commutator-upper",
    "nu-power-commutator-lower",
    "nu-lcs-exponent-odd",
    "nu-lcs-exponent-even",
];

/// `(m, s)` pairs: from the corpus, or every `1 <= s <= m <= c`.
fn pairs(ctx: &Ctx<'_>) -> Vec<(usize, usize)> {
    if let Some(p) = &ctx.entry.power_commutator {
        return p.clone();
    }
    let c = (ctx.prof.class as usize).max(1);
    (1..=c).flat_map(|m| (1..=m).map(move |s| (m, s))).collect()
}

pub(super) fn run(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let p = ctx.p;
    // gamma_i(nu) is trivial from here on
    let top = ctx.series.nu_class() + 1;
    for (m, s) in pairs(ctx) {
        let params = format!("m={m},s={s}");
        match power_commutator_holds(&ctx.g_series, p, m, s) {
            Ok(true) => {}
            Ok(false) => {
                let why = format!("gamma_(i+{s})(G) differs from gamma_i(G)^p for some i >= {m}");
                em.emit_all(&CLAIMS, &params, &Ok(why));
                continue;
            }
            Err(e) => {
                em.emit_all(&CLAIMS, &params, &Err(e));
                continue;
            }
        }
        em.emit("nu-power-commutator-equality", params.clone(), None, || {
            let mut r = Recorder::new();
            for i in m + 1..=top.max(m + 1) {
                r.same(
                    format!("gamma_{}(nu) = gamma_{}(nu)^p", i + s + 1, i + 1),
                    &ctx.gamma_nu(i + s + 1),
                    &ctx.gamma_nu_power(i + 1)?,
                );
            }
            if ctx.gamma_nu(m + 2).is_trivial() {
                r.note("both sides are trivial over the whole range");
            }
            checked(r)
        });
        em.emit("nu-power-commutator-upper", params.clone(), None, || {
            let start = if p % 2 == 1 { m } else { m + 1 };
            let mut r = Recorder::new();
            for i in start..=top.max(start) {
                r.subgroup(
                    format!("gamma_{}(nu) <= gamma_{}(nu)^p", i + s + 1, i + 1),
                    &ctx.gamma_nu(i + s + 1),
                    &ctx.gamma_nu_power(i + 1)?,
                );
            }
            checked(r)
        });
        em.emit("nu-power-commutator-lower", params.clone(), None, || {
            let mut r = Recorder::new();
            for i in m..=top.max(m) {
                r.subgroup(
                    format!("gamma_{}(nu)^p <= gamma_{}(nu)", i + 1, i + s + 1),
                    &ctx.gamma_nu_power(i + 1)?,
                    &ctx.gamma_nu(i + s + 1),
                );
            }
            checked(r)
        });
        let gm = ctx.gamma_g(m);
        em.emit("nu-lcs-exponent-odd", params.clone(), None, || {
            if p == 2 {
                return unmet("needs p odd");
            }
            let mut r = Recorder::new();
            r.divides(
                format!("exp(gamma_{}(nu)) | exp(gamma_{m}(G))", m + 1),
                ctx.gamma_nu_exponent(m + 1)? as u128,
                group_exponent(&gm)? as u128,
            );
            checked(r)
        });
        em.emit("nu-lcs-exponent-even", params, None, || {
            if p != 2 {
                return unmet("needs p = 2");
            }
            if !is_powerful(&gm, p)? {
                return unmet(format!("gamma_{m}(G) is not powerful"));
            }
            let mut r = Recorder::new();
            r.divides(
                format!("exp(gamma_{}(nu)) | exp(gamma_{m}(G))", m + 1),
                ctx.gamma_nu_exponent(m + 1)? as u128,
                group_exponent(&gm)? as u128,
            );
            checked(r)
        });
    }
}
