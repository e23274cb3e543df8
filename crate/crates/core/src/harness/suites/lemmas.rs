use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{checked, show, unmet, Emitter};
use crate::harness::context::Ctx;
use crate::harness::mix;
use crate::harness::report::Recorder;
use crate::perm::{
    agemo, commutator_subgroup, gamma, group_exponent, lower_central_series, omega, PermGroup,
    Permutation,
};
use crate::pgroup::{
    hall_congruence_check, hall_product_check, hall_subgroup_congruence_check, is_potent,
    is_powerful, iterated_agemo, join, log_p,
};

const HALL_SAMPLES: usize = 50;

fn exponent_log(ctx: &Ctx<'_>) -> u32 {
    log_p(ctx.exp_g, ctx.p).expect("p-power exponent")
}

fn sample(ctx: &Ctx<'_>, rng: &mut ChaCha8Rng, count: usize) -> Vec<Permutation> {
    let ar = ctx.base().arith();
    let elements = ar.elements();
    (0..count)
        .map(|_| ar.perm(elements[rng.gen_range(0..elements.len())]))
        .collect()
}

pub(super) fn hall(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let p = ctx.p;
    let e = exponent_log(ctx);
    let g = ctx.base();

    let seed = mix(ctx.seed, "hall-collection");
    em.emit("hall-collection", "", Some(seed), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut r = Recorder::new();
        let mut bad = None;
        for _ in 0..HALL_SAMPLES {
            let xy = sample(ctx, &mut rng, 2);
            for k in 1..=e {
                if !hall_congruence_check(g, p, &xy[0], &xy[1], k)? && bad.is_none() {
                    bad = Some(format!("k = {k}, x, y = {}", show(&xy)));
                }
            }
        }
        r.equal("sampled pairs failing a congruence", bad.is_some() as u128, 0);
        if let Some(w) = bad {
            r.witness(w);
        }
        r.note(format!("{HALL_SAMPLES} pairs, k = 1..{e}"));
        checked(r)
    });

    let seed = mix(ctx.seed, "hall-collection-product");
    em.emit("hall-collection-product", "", Some(seed), || {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut r = Recorder::new();
        let mut bad = None;
        for _ in 0..HALL_SAMPLES {
            let len = rng.gen_range(2..=4);
            let xs = sample(ctx, &mut rng, len);
            for k in 1..=e {
                if !hall_product_check(g, p, &xs, k)? && bad.is_none() {
                    bad = Some(format!("k = {k}, elements {}", show(&xs)));
                }
            }
        }
        r.equal("sampled tuples failing the congruence", bad.is_some() as u128, 0);
        if let Some(w) = bad {
            r.witness(w);
        }
        r.note(format!("{HALL_SAMPLES} tuples of length 2..4, k = 1..{e}"));
        checked(r)
    });

    em.emit("hall-subgroup-congruence", "", None, || {
        let normals = ctx.distinct_normals();
        let mut r = Recorder::new();
        for (sn, n) in &normals {
            for (sm, m) in &normals {
                for k in 1..=e {
                    let holds = hall_subgroup_congruence_check(g, p, n, m, k)?;
                    r.equal(format!("N = {sn}, M = {sm}, k = {k}"), holds as u128, 1);
                }
            }
        }
        checked(r)
    });
}

pub(super) fn pgroup(ctx: &Ctx<'_>, em: &mut Emitter<'_>) {
    let p = ctx.p;

    for (ambient, params) in [(Ambient::Base, "G"), (Ambient::Nu, "nu(G)")] {
        em.emit("normal-inclusion", params, None, || {
            let (g, subjects) = match ambient {
                Ambient::Base => (ctx.base().clone(), named_normals(ctx)),
                Ambient::Nu => (ctx.nu.nu().clone(), nu_normals(ctx)),
            };
            let mut r = Recorder::new();
            let mut premises = 0;
            for (nn, n) in &subjects {
                let around = join(&[&commutator_subgroup(n, &g), &agemo(n, p, 1)?]);
                for (mn, m) in &subjects {
                    if !n.is_subgroup_of(&join(&[m, &around])) {
                        continue;
                    }
                    premises += 1;
                    r.subgroup(format!("{nn} <= {mn}"), n, m);
                }
            }
            if premises == 0 {
                return unmet("no pair satisfies the premise");
            }
            checked(r)
        });
    }

    let subjects = named_normals(ctx);

    em.emit("potent-lcs-powers", "", None, || {
        let mut r = Recorder::new();
        let mut any = false;
        for (name, h) in &subjects {
            if h.is_trivial() || !is_potent(h, p)? {
                continue;
            }
            any = true;
            let series = lower_central_series(h);
            let top = series.len();
            for k in 1..=top {
                if p == 2 {
                    r.subgroup(
                        format!("gamma_{}({name}) <= gamma_{k}({name})^4", k + 1),
                        &gamma(&series, k + 1),
                        &agemo(&gamma(&series, k), 2, 2)?,
                    );
                } else {
                    let lo = p as usize - 1 + k;
                    r.subgroup(
                        format!("gamma_{lo}({name}) <= gamma_{}({name})^p", k + 1),
                        &gamma(&series, lo),
                        &agemo(&gamma(&series, k + 1), p, 1)?,
                    );
                }
            }
        }
        if !any {
            return unmet("no nontrivial potent subject");
        }
        checked(r)
    });

    em.emit("omega-exponent-bound", "", None, || {
        let g = ctx.base();
        let c = ctx.prof.class as usize;
        let e = exponent_log(ctx);
        // powers[r-1][s] = gamma_r(G)^(p^s)
        let mut powers = Vec::new();
        for rr in 1..=c + 1 {
            let gr = ctx.gamma_g(rr);
            let mut row = vec![gr.clone()];
            for s in 1..=e {
                row.push(agemo(&gr, p, s)?);
            }
            powers.push(row);
        }
        let step = (p - 1) as usize;
        let mut found = None;
        'k: for k in 1..=c + 1 {
            let lhs = ctx.gamma_g(k * step);
            for (ri, row) in powers.iter().enumerate() {
                for (s, h) in row.iter().enumerate() {
                    if k * step < ri + 1 + s * step && lhs.is_subgroup_of(h) {
                        found = Some((k, ri + 1, s));
                        break 'k;
                    }
                }
            }
        }
        let Some((k, rr, s)) = found else {
            return unmet("no admissible (k, r, s) within the class");
        };
        let mut r = Recorder::new();
        r.note(format!("smallest k = {k} via r = {rr}, s = {s}"));
        for i in 1..=e {
            let om = omega(g, p, i)?;
            let lhs = log_p(group_exponent(&om)?, p).expect("p-power exponent");
            r.at_most(
                format!("log_p exp(Omega_{i}(G)) <= {i} + {k} - 1"),
                lhs as i128,
                (i + k as u32 - 1) as i128,
            );
        }
        checked(r)
    });

    em.emit("powerful-iterated-agemo", "", None, || {
        let mut r = Recorder::new();
        let mut any = false;
        for (name, h) in &subjects {
            if !is_powerful(h, p)? {
                continue;
            }
            any = true;
            let e = log_p(group_exponent(h)?, p).expect("p-power exponent");
            for i in 1..=e.max(1) {
                r.same(
                    format!("Pi_{i}({name}) = {name}^(p^{i})"),
                    &iterated_agemo(h, p, i)?,
                    &agemo(h, p, i)?,
                );
            }
        }
        if !any {
            return unmet("no powerful subject");
        }
        checked(r)
    });
}

#[derive(Clone, Copy)]
enum Ambient {
    Base,
    Nu,
}

/// `G` followed by the distinct configured normal subgroups.
fn named_normals(ctx: &Ctx<'_>) -> Vec<(String, PermGroup)> {
    let mut out = vec![("G".to_string(), ctx.base().clone())];
    for (s, n) in ctx.distinct_normals() {
        if !n.same_as(ctx.base()) {
            out.push((format!("N[{s}]"), n));
        }
    }
    out
}

fn nu_normals(ctx: &Ctx<'_>) -> Vec<(String, PermGroup)> {
    let nu = &ctx.nu;
    let mut out: Vec<(String, PermGroup)> = vec![
        ("T".into(), nu.tensor().clone()),
        ("Delta".into(), nu.delta().clone()),
        ("mu".into(), nu.mu().clone()),
        ("Theta".into(), nu.theta().clone()),
    ];
    for i in 1..=ctx.series.nu_class() + 1 {
        out.push((format!("gamma_{i}(nu)"), ctx.gamma_nu(i)));
    }
    let mut distinct: Vec<(String, PermGroup)> = Vec::new();
    for (name, h) in out {
        if !distinct.iter().any(|(_, k)| k.same_as(&h)) {
            distinct.push((name, h));
        }
    }
    distinct
}
