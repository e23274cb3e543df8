//! Corpus-driven verification of the exponent bounds and structural
//! identities for `nu(G)`, with JSON verdict reports.

mod claims;
mod context;
mod corpus;
mod report;
mod suites;

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

pub use claims::{claim, parse_suites, Claim, Suite, CLAIMS};
pub use corpus::{
    Corpus, CorpusEntry, CorpusFile, EntryFile, Selector, DEFAULT_CORPUS, DEFAULT_SELECTORS,
};
pub use report::{to_json, Check, Relation, Status, Summary, Verdict};

use context::Ctx;

/// Seed used when neither the command line nor the corpus gives one.
pub const DEFAULT_SEED: u64 = 1;

#[derive(Clone, Debug)]
pub struct RunOptions {
    /// Overrides the corpus seed.
    pub seed: Option<u64>,
    pub jobs: usize,
    /// Record wall time per verdict. Reports are then no longer reproducible.
    pub timings: bool,
    /// Default coset bound for entries that do not set their own.
    pub max_cosets: Option<usize>,
    /// Restricts every entry to these suites.
    pub suites: Option<Vec<Suite>>,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions {
            seed: None,
            jobs: 1,
            timings: false,
            max_cosets: None,
            suites: None,
        }
    }
}

/// Runs every entry of the corpus. Verdicts are sorted by group, claim and
/// parameters, so the output does not depend on `jobs`.
pub fn run_corpus(corpus: &Corpus, opts: &RunOptions) -> Vec<Verdict> {
    let seed = opts.seed.or(corpus.seed).unwrap_or(DEFAULT_SEED);
    let n = corpus.entries.len();
    let results: Mutex<Vec<Option<Vec<Verdict>>>> = Mutex::new(vec![None; n]);
    let next = AtomicUsize::new(0);
    let workers = opts.jobs.clamp(1, n.max(1));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= n {
                    break;
                }
                let v = run_entry(&corpus.entries[i], seed, opts);
                results.lock().expect("no worker panicked")[i] = Some(v);
            });
        }
    });
    let mut all: Vec<Verdict> = results
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .flatten()
        .flatten()
        .collect();
    all.sort_by(|a, b| {
        (&a.group, &a.claim, &a.params).cmp(&(&b.group, &b.claim, &b.params))
    });
    all
}

/// Runs the selected suites on one corpus entry. `seed` is the run seed;
/// the entry derives its own from it and the group name.
pub fn run_entry(entry: &CorpusEntry, seed: u64, opts: &RunOptions) -> Vec<Verdict> {
    let suites: Vec<Suite> = entry
        .suites
        .iter()
        .copied()
        .filter(|s| opts.suites.as_ref().is_none_or(|allowed| allowed.contains(s)))
        .collect();
    let entry_seed = mix(seed, &entry.spec.to_string());
    match Ctx::build(entry, entry_seed, opts) {
        Ok(ctx) => {
            let mut out = Vec::new();
            for s in suites {
                out.extend(suites::run(&ctx, s));
            }
            out
        }
        Err(err) => suites
            .iter()
            .flat_map(|s| s.claims())
            .map(|c| Verdict {
                claim: c.id.to_string(),
                statement: c.statement.to_string(),
                group: entry.spec.to_string(),
                params: String::new(),
                p: entry.p.or_else(|| entry.spec.prime()).unwrap_or(0),
                status: report::status_of_error(&err),
                checks: Vec::new(),
                witness: (report::status_of_error(&err) == Status::Fail).then(|| err.to_string()),
                note: Some(format!("group setup failed: {err}")),
                seed: None,
                wall_ms: None,
            })
            .collect(),
    }
}

/// Derives a seed from `seed` and a label (FNV-1a, then a SplitMix64 round).
pub(crate) fn mix(seed: u64, label: &str) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in label.bytes() {
        h ^= b as u64;
        h = h.wrapping_mul(0x100_0000_01b3);
    }
    let mut z = seed ^ h;
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
