mod coclass;
mod lemmas;
mod power;
mod quotient;
mod structure;

use std::time::Instant;

use super::claims::{claim, Suite};
use super::context::Ctx;
use super::report::{status_of_error, Outcome, Recorder, Status, Verdict};
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub(crate) fn run(ctx: &Ctx<'_>, suite: Suite) -> Vec<Verdict> {
    let mut em = Emitter {
        ctx,
        out: Vec::new(),
    };
    match suite {
        Suite::NuStructure => structure::run(ctx, &mut em),
        Suite::Oracles => structure::oracles(ctx, &mut em),
        Suite::PowerCommutator => power::run(ctx, &mut em),
        Suite::QuotientExponent => quotient::run(ctx, &mut em),
        Suite::MaximalClass => coclass::maximal_class(ctx, &mut em),
        Suite::TensorExponent => coclass::tensor_exponent(ctx, &mut em),
        Suite::Hall => lemmas::hall(ctx, &mut em),
        Suite::PgroupLemmas => lemmas::pgroup(ctx, &mut em),
    }
    em.out
}

pub(crate) struct Emitter<'c> {
    ctx: &'c Ctx<'c>,
    out: Vec<Verdict>,
}

impl Emitter<'_> {
    /// Evaluates one claim instance and records its verdict.
    pub(crate) fn emit(
        &mut self,
        id: &'static str,
        params: impl Into<String>,
        seed: Option<u64>,
        f: impl FnOnce() -> Result<Outcome>,
    ) {
        let c = claim(id).unwrap_or_else(|| panic!("unregistered claim {id}"));
        let start = self.ctx.timings.then(Instant::now);
        let result = f();
        let wall_ms = start.map(|t| t.elapsed().as_millis() as u64);
        let mut v = Verdict {
            claim: id.to_string(),
            statement: c.statement.to_string(),
            group: self.ctx.group.clone(),
            params: params.into(),
            p: self.ctx.p,
            status: Status::Pass,
            checks: Vec::new(),
            witness: None,
            note: None,
            seed: seed.map(|s| s.to_string()),
            wall_ms,
        };
        match result {
            Ok(Outcome::Checked(r)) => {
                v.status = if r.failed() { Status::Fail } else { Status::Pass };
                if v.status == Status::Fail {
                    v.witness = r.witness;
                }
                v.checks = r.checks;
                v.note = r.note;
            }
            Ok(Outcome::Unmet(why)) => {
                v.status = Status::HypothesisUnmet;
                v.note = Some(why);
            }
            Err(e) => {
                v.status = status_of_error(&e);
                if v.status == Status::Fail {
                    v.witness = Some(e.to_string());
                } else {
                    v.note = Some(e.to_string());
                }
            }
        }
        self.out.push(v);
    }

    /// Emits the same outcome for several claims, e.g. when their shared
    /// setup failed or their common hypothesis is unmet.
    pub(crate) fn emit_all(&mut self, ids: &[&'static str], params: &str, status: &Result<String>) {
        for &id in ids {
            let outcome = match status {
                Ok(why) => Ok(Outcome::Unmet(why.clone())),
                Err(e) => Err(e.clone()),
            };
            self.emit(id, params, None, || outcome);
        }
    }
}

/// `b^e` as an exact integer.
pub(crate) fn ipow(b: u64, e: u32) -> Result<u128> {
    (b as u128)
        .checked_pow(e)
        .ok_or_else(|| Error::exceeded("integer size in a divisibility check", u64::MAX))
}

/// Smallest `n` with `p^n >= x`.
pub(crate) fn ceil_log(x: u64, p: u64) -> u32 {
    let mut n = 0;
    let mut q = 1u128;
    while q < x as u128 {
        q *= p as u128;
        n += 1;
    }
    n
}

pub(crate) fn log_order(h: &PermGroup, p: u64) -> u32 {
    crate::pgroup::log_p(h.order(), p).expect("p-group order")
}

/// Elements written as 1-based cycle notation, for witnesses.
pub(crate) fn show(xs: &[Permutation]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

pub(crate) fn checked(r: Recorder) -> Result<Outcome> {
    Ok(Outcome::Checked(r))
}

pub(crate) fn unmet(why: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome::Unmet(why.into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_helpers() {
        assert_eq!(ceil_log(1, 2), 0);
        assert_eq!(ceil_log(2, 2), 1);
        assert_eq!(ceil_log(3, 3), 1);
        assert_eq!(ceil_log(4, 3), 2);
        assert_eq!(ceil_log(9, 3), 2);
        assert_eq!(ipow(8, 4).unwrap(), 4096);
        assert!(ipow(u64::MAX, 3).is_err());
    }
}
