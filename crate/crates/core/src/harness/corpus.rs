use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::claims::{parse_suites, Suite};
use crate::error::{Error, Result};
use crate::perm::{agemo, center, gamma, omega, PermGroup, ELEMENT_THRESHOLD};
use crate::pgroup::maximal_class_g1;
use crate::presentation::GroupSpec;

/// The corpus shipped with the crate.
pub const DEFAULT_CORPUS: &str = include_str!("../../corpus/default.toml");

/// A canonical normal subgroup of `G`, named on the command line and in
/// corpus files as `trivial`, `whole`, `gamma:i`, `center`, `agemo:k`,
/// `omega:i` or `g1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Selector {
    Trivial,
    Whole,
    Gamma(usize),
    Center,
    Agemo(u32),
    Omega(u32),
    /// `C_G(gamma_2(G)/gamma_4(G))` for groups of maximal class.
    G1,
}

pub const DEFAULT_SELECTORS: [Selector; 8] = [
    Selector::Trivial,
    Selector::Whole,
    Selector::Gamma(2),
    Selector::Gamma(3),
    Selector::Center,
    Selector::Agemo(1),
    Selector::Omega(1),
    Selector::G1,
];

impl Selector {
    /// The subgroup of `g`; `series` is its lower central series.
    pub fn resolve(self, g: &PermGroup, series: &[PermGroup], p: u64) -> Result<PermGroup> {
        match self {
            Selector::Trivial => Ok(g.trivial_like()),
            Selector::Whole => Ok(g.clone()),
            Selector::Gamma(i) => Ok(gamma(series, i)),
            Selector::Center => center(g),
            Selector::Agemo(k) => agemo(g, p, k),
            Selector::Omega(i) => omega(g, p, i),
            Selector::G1 => maximal_class_g1(g, p),
        }
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Selector::Trivial => write!(f, "trivial"),
            Selector::Whole => write!(f, "whole"),
            Selector::Gamma(i) => write!(f, "gamma:{i}"),
            Selector::Center => write!(f, "center"),
            Selector::Agemo(k) => write!(f, "agemo:{k}"),
            Selector::Omega(i) => write!(f, "omega:{i}"),
            Selector::G1 => write!(f, "g1"),
        }
    }
}

impl FromStr for Selector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Corpus(format!("unknown normal-subgroup selector `{s}`"));
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a.parse::<u32>().map_err(|_| bad())?)),
            None => (s, None),
        };
        let sel = match (head, arg) {
            ("trivial", None) => Selector::Trivial,
            ("whole", None) => Selector::Whole,
            ("center", None) => Selector::Center,
            ("g1", None) => Selector::G1,
            ("gamma", Some(i)) if i >= 1 => Selector::Gamma(i as usize),
            ("agemo", Some(k)) if k >= 1 => Selector::Agemo(k),
            ("omega", Some(i)) if i >= 1 => Selector::Omega(i),
            _ => return Err(bad()),
        };
        Ok(sel)
    }
}

/// Corpus file layout (TOML).
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusFile {
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default, rename = "group")]
    pub groups: Vec<EntryFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryFile {
    pub spec: String,
    #[serde(default)]
    pub p: Option<u64>,
    #[serde(default)]
    pub suites: Option<Vec<String>>,
    #[serde(default)]
    pub selectors: Option<Vec<String>>,
    #[serde(default)]
    pub max_cosets: Option<usize>,
    #[serde(default)]
    pub max_elements: Option<u64>,
    /// `[m, s]` pairs for the power-commutator suite.
    #[serde(default)]
    pub power_commutator: Option<Vec<[usize; 2]>>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub spec: GroupSpec,
    pub p: Option<u64>,
    pub suites: Vec<Suite>,
    pub selectors: Vec<Selector>,
    pub max_cosets: Option<usize>,
    pub max_elements: u64,
    pub power_commutator: Option<Vec<(usize, usize)>>,
}

impl CorpusEntry {
    pub fn new(spec: GroupSpec) -> Self {
        CorpusEntry {
            spec,
            p: None,
            suites: Suite::ALL.to_vec(),
            selectors: DEFAULT_SELECTORS.to_vec(),
            max_cosets: None,
            max_elements: ELEMENT_THRESHOLD,
            power_commutator: None,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub seed: Option<u64>,
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    pub fn parse(text: &str) -> Result<Self> {
        let file: CorpusFile = toml::from_str(text).map_err(|e| Error::Corpus(e.to_string()))?;
        let entries = file
            .groups
            .iter()
            .map(entry_from_file)
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus {
            seed: file.seed,
            entries,
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        Corpus::parse(&std::fs::read_to_string(path)?)
    }

    pub fn default_corpus() -> Self {
        Corpus::parse(DEFAULT_CORPUS).expect("shipped corpus parses")
    }
}

fn entry_from_file(f: &EntryFile) -> Result<CorpusEntry> {
    let spec: GroupSpec = f.spec.parse()?;
    let mut e = CorpusEntry::new(spec);
    if let Some(p) = f.p {
        if let Some(q) = e.spec.prime() {
            if q != p {
                return Err(Error::Corpus(format!("{}: p = {p} but the family has prime {q}", f.spec)));
            }
        }
        e.p = Some(p);
    }
    if let Some(s) = &f.suites {
        let mut suites = Vec::new();
        for name in s {
            suites.extend(parse_suites(name)?);
        }
        suites.sort();
        suites.dedup();
        e.suites = suites;
    }
    if let Some(sel) = &f.selectors {
        e.selectors = sel.iter().map(|s| s.parse()).collect::<Result<_>>()?;
    }
    e.max_cosets = f.max_cosets;
    if let Some(m) = f.max_elements {
        e.max_elements = m;
    }
    if let Some(pairs) = &f.power_commutator {
        for &[m, s] in pairs {
            if !(m >= s && s >= 1) {
                return Err(Error::Corpus(format!("{}: power-commutator pair needs m >= s >= 1", f.spec)));
            }
        }
        e.power_commutator = Some(pairs.iter().map(|&[m, s]| (m, s)).collect());
    }
    Ok(e)
}
