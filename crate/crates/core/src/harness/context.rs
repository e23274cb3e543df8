use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::corpus::{CorpusEntry, Selector};
use super::RunOptions;
use crate::coset::{regular_group, DEFAULT_MAX_COSETS};
use crate::error::{Error, Result};
use crate::nu::{build_nu_with, kernel_k, KernelK, NuGroup, NuOptions, NuSeries};
use crate::perm::{agemo, gamma, group_exponent, lower_central_series, PermGroup};
use crate::pgroup::{profile, PGroupProfile};
use crate::presentation::{catalog_group, prime_power};

/// Everything one corpus entry's claims share: `nu(G)`, series, exponents
/// and caches of derived subgroups.
pub(crate) struct Ctx<'a> {
    pub(crate) entry: &'a CorpusEntry,
    pub(crate) group: String,
    pub(crate) p: u64,
    pub(crate) seed: u64,
    pub(crate) timings: bool,
    pub(crate) opts: NuOptions,
    pub(crate) nu: NuGroup,
    pub(crate) prof: PGroupProfile,
    pub(crate) g_series: Vec<PermGroup>,
    pub(crate) series: NuSeries,
    pub(crate) exp_g: u64,
    pub(crate) exp_nu: u64,
    pub(crate) exp_tensor: u64,
    pub(crate) exp_mu: u64,
    pub(crate) exp_delta: u64,
    pub(crate) exp_schur: u64,
    nu_agemo: RefCell<HashMap<usize, PermGroup>>,
    nu_exp: RefCell<HashMap<usize, u64>>,
    normals: Vec<(Selector, Result<PermGroup>)>,
    kernels: RefCell<Vec<(PermGroup, Result<Rc<KernelK>>)>>,
}

impl<'a> Ctx<'a> {
    pub(crate) fn build(entry: &'a CorpusEntry, seed: u64, run: &RunOptions) -> Result<Self> {
        let pres = catalog_group(&entry.spec)?;
        let max_cosets = entry
            .max_cosets
            .or(run.max_cosets)
            .unwrap_or(DEFAULT_MAX_COSETS);
        let g = regular_group(&pres, max_cosets)?;
        let order = g.order();
        let p = match entry.p.or_else(|| entry.spec.prime()) {
            Some(p) => p,
            None => prime_power(order)
                .map(|(p, _)| p)
                .ok_or(Error::NotPGroup { order, p: 0 })?,
        };
        if order > entry.max_elements {
            return Err(Error::exceeded("group elements", entry.max_elements));
        }
        let opts = NuOptions { max_cosets };
        let nu = build_nu_with(&pres, &opts)?;
        if nu.nu().order() > entry.max_elements {
            return Err(Error::exceeded("elements of nu(G)", entry.max_elements));
        }
        let prof = profile(nu.base(), p)?;
        let g_series = lower_central_series(nu.base());
        let series = NuSeries::new(&nu);
        let normals = entry
            .selectors
            .iter()
            .map(|&s| (s, s.resolve(nu.base(), &g_series, p)))
            .collect();
        Ok(Ctx {
            entry,
            group: entry.spec.to_string(),
            p,
            seed,
            timings: run.timings,
            opts,
            exp_g: prof.exponent,
            exp_nu: group_exponent(nu.nu())?,
            exp_tensor: group_exponent(nu.tensor())?,
            exp_mu: group_exponent(nu.mu())?,
            exp_delta: group_exponent(nu.delta())?,
            exp_schur: group_exponent(nu.schur())?,
            nu,
            prof,
            g_series,
            series,
            nu_agemo: RefCell::new(HashMap::new()),
            nu_exp: RefCell::new(HashMap::new()),
            normals,
            kernels: RefCell::new(Vec::new()),
        })
    }

    pub(crate) fn base(&self) -> &PermGroup {
        self.nu.base()
    }

    /// `gamma_i(G)`, 1-based, trivial past the end.
    pub(crate) fn gamma_g(&self, i: usize) -> PermGroup {
        gamma(&self.g_series, i)
    }

    pub(crate) fn gamma_nu(&self, i: usize) -> PermGroup {
        gamma(&self.series.nu, i)
    }

    /// `gamma_i(nu)^p`.
    pub(crate) fn gamma_nu_power(&self, i: usize) -> Result<PermGroup> {
        if let Some(h) = self.nu_agemo.borrow().get(&i) {
            return Ok(h.clone());
        }
        let h = agemo(&self.gamma_nu(i), self.p, 1)?;
        self.nu_agemo.borrow_mut().insert(i, h.clone());
        Ok(h)
    }

    pub(crate) fn gamma_nu_exponent(&self, i: usize) -> Result<u64> {
        if let Some(&e) = self.nu_exp.borrow().get(&i) {
            return Ok(e);
        }
        let e = group_exponent(&self.gamma_nu(i))?;
        self.nu_exp.borrow_mut().insert(i, e);
        Ok(e)
    }

    /// The configured normal subgroups of `G`, in selector order.
    pub(crate) fn normals(&self) -> &[(Selector, Result<PermGroup>)] {
        &self.normals
    }

    /// Resolved normal subgroups with duplicates removed; each carries the
    /// first selector that produced it.
    pub(crate) fn distinct_normals(&self) -> Vec<(Selector, PermGroup)> {
        let mut out: Vec<(Selector, PermGroup)> = Vec::new();
        for (s, n) in &self.normals {
            if let Ok(n) = n {
                if !out.iter().any(|(_, m)| m.same_as(n)) {
                    out.push((*s, n.clone()));
                }
            }
        }
        out
    }

    /// `K` and `nu(G/N)` for a normal subgroup `N`, cached by subgroup.
    pub(crate) fn kernel(&self, n: &PermGroup) -> Result<Rc<KernelK>> {
        if let Some((_, k)) = self.kernels.borrow().iter().find(|(m, _)| m.same_as(n)) {
            return k.clone();
        }
        let k = kernel_k(&self.nu, n, &self.opts).map(Rc::new);
        self.kernels.borrow_mut().push((n.clone(), k.clone()));
        k
    }
}
