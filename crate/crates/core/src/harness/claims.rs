use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    NuStructure,
    PowerCommutator,
    QuotientExponent,
    MaximalClass,
    TensorExponent,
    Hall,
    PgroupLemmas,
    Oracles,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::NuStructure,
        Suite::PowerCommutator,
        Suite::QuotientExponent,
        Suite::MaximalClass,
        Suite::TensorExponent,
        Suite::Hall,
        Suite::PgroupLemmas,
        Suite::Oracles,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::NuStructure => "nu-structure",
            Suite::PowerCommutator => "power-commutator",
            Suite::QuotientExponent => "quotient-exponent",
            Suite::MaximalClass => "maximal-class",
            Suite::TensorExponent => "tensor-exponent",
            Suite::Hall => "hall",
            Suite::PgroupLemmas => "pgroup-lemmas",
            Suite::Oracles => "oracles",
        }
    }

    pub fn claims(self) -> impl Iterator<Item = &'static Claim> {
        CLAIMS.iter().filter(move |c| c.suite == self)
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Corpus(format!("unknown suite `{s}`")))
    }
}

/// Parses `all` or a comma-separated list of suite names.
pub fn parse_suites(s: &str) -> Result<Vec<Suite>> {
    if s == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    let mut out: Vec<Suite> = s.split(',').map(|x| x.trim().parse()).collect::<Result<_>>()?;
    out.sort();
    out.dedup();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Claim {
    pub id: &'static str,
    pub suite: Suite,
    pub statement: &'static str,
}

macro_rules! claims {
    ($($id:literal, $suite:ident, $stmt:literal;)*) => {
        pub static CLAIMS: &[Claim] = &[$(Claim { id: $id, suite: Suite::$suite, statement: $stmt }),*];
    };
}

claims! {
    "nu-order-decomposition", NuStructure,
        "|nu(G)| = |G|^2 |[G,G^phi]|";
    "nu-lcs-decomposition", NuStructure,
        "gamma_{k+1}(nu(G)) = gamma_{k+1}(G) gamma_{k+1}(G^phi) [gamma_k(G), G^phi] for k >= 1, so nu(G) has class at most c+1";
    "nu-basic-identities", NuStructure,
        "[g,h^phi]^[x,y^phi] = [g,h^phi]^[x,y]; the six mixed triple commutators agree; [[g,h^phi],[x,y^phi]] = [[g,h],[x,y]^phi]";
    "projection-kernel", NuStructure,
        "ker(nu(G) -> nu(G/N)) = N N^phi [N,G^phi][G,N^phi]";
    "tensor-projection-sequence", NuStructure,
        "1 -> [N,G^phi][G,N^phi] -> [G,G^phi] -> [G/N,(G/N)^phi] -> 1 is exact";
    "nu-exponent-chain", NuStructure,
        "exp(nu) | exp(G) exp(mu), exp(mu) | exp(M) exp(Delta), exp(Delta) | exp(G), exp(nu) | exp(G)^2 exp(M); exp(nu) | exp(G) max(exp G, exp M) when |G^ab| is odd";
    "nu-coclass-lower-bound", NuStructure,
        "coclass of nu(G) is at least r + 2n - 1 for |G| = p^n of coclass r";
    "nu-power-commutator-equality", PowerCommutator,
        "if gamma_{i+s}(G) = gamma_i(G)^p for i >= m >= s, then gamma_{i+s+1}(nu) = gamma_{i+1}(nu)^p for i > m";
    "nu-power-commutator-upper", PowerCommutator,
        "under the same hypothesis gamma_{i+s+1}(nu) <= gamma_{i+1}(nu)^p for i >= m (p odd) or i > m";
    "nu-power-commutator-lower", PowerCommutator,
        "under the same hypothesis gamma_{i+1}(nu)^p <= gamma_{i+s+1}(nu) for i >= m";
    "nu-lcs-exponent-odd", PowerCommutator,
        "under the same hypothesis with p odd, exp(gamma_{m+1}(nu)) | exp(gamma_m(G))";
    "nu-lcs-exponent-even", PowerCommutator,
        "under the same hypothesis with p = 2 and gamma_m(G) powerful, exp(gamma_{m+1}(nu)) | exp(gamma_m(G))";
    "kernel-lcs-decomposition", QuotientExponent,
        "gamma_s(K) = gamma_s(N) gamma_s(N^phi) [gamma_{s-1}(N),N^phi] [N,gamma_{s-1}(N^phi)] for s >= 2";
    "kernel-lcs-power-odd", QuotientExponent,
        "p >= 3, 1 < n < p, gamma_n(N) <= N^p imply gamma_{n+1}(K) <= gamma_2(N)^p gamma_2(N^phi)^p [N,N^phi]^p";
    "kernel-lcs-power-even", QuotientExponent,
        "p = 2 and N powerful imply gamma_3(K) <= gamma_2(N)^4 gamma_2(N^phi)^4 [N,N^phi]^4";
    "kernel-lcs-potently-embedded", QuotientExponent,
        "N potent implies gamma_s(K) is potently embedded in K for s >= 2";
    "kernel-exponent", QuotientExponent,
        "N potent or gamma_p(N) = 1 implies exp(K) | bold(p) exp(N)";
    "nu-exponent-by-quotient", QuotientExponent,
        "N potent or gamma_p(N) = 1 implies exp(nu(G)) | bold(p) exp(nu(G/N)) exp(N)";
    "nu-exponent-by-quotient-sharp", QuotientExponent,
        "gamma_{p-2}(N) <= N^p implies exp(nu(G)) | exp(nu(G/N)) exp(N) (argued for p >= 5)";
    "tensor-exponent-by-quotient", QuotientExponent,
        "N potent or gamma_p(N) = 1 implies exp([G,G^phi]) | bold(p) exp([G/N,(G/N)^phi]) exp(N)";
    "tensor-exponent-by-quotient-sharp", QuotientExponent,
        "gamma_{p-2}(N) <= N^p implies exp([G,G^phi]) | exp([G/N,(G/N)^phi]) exp(N) (argued for p >= 5)";
    "nu-exponent-maximal-class", MaximalClass,
        "G of maximal class implies exp(nu(G)) | bold(p)^2 exp(G)";
    "mu-tensor-exponent-maximal-class", MaximalClass,
        "G of maximal class implies exp(mu(G)) and exp([G,G^phi]) divide bold(p)^2 exp(G)";
    "tensor-exponent-maximal-class-two", MaximalClass,
        "a 2-group G of maximal class has exp([G,G^phi]) | exp(G)";
    "maximal-class-g1-power", MaximalClass,
        "G of maximal class with |G| >= p^(p+2) has gamma_p(G) = G_1^p";
    "coclass-power-commutator", MaximalClass,
        "coclass r, class c >= 2^(r+3) (p = 2) or c >= 2p^r (p odd), s = d(gamma_m(G)) imply gamma_i(G)^p = gamma_{i+s}(G) for i >= m(p,r)";
    "tensor-exponent-class-log", TensorExponent,
        "class c implies exp([G,G^phi]) | exp(G)^ceil(log_p(c+1))";
    "tensor-exponent-coclass-odd", TensorExponent,
        "p odd, coclass r imply exp([G,G^phi]) | exp(G)^r exp(gamma_m(G)) with m = (p-1)p^(r-1)";
    "tensor-exponent-coclass-even", TensorExponent,
        "p = 2, coclass r imply exp([G,G^phi]) | exp(G)^(r+3) exp(gamma_m(G)) with m = 2^(r+2)";
    "schur-mu-exponent-coclass-odd", TensorExponent,
        "p >= 3, coclass r imply exp(M(G)) and exp(mu(G)) divide exp(G)^(r+1)";
    "schur-mu-exponent-coclass-even", TensorExponent,
        "p = 2, coclass r imply exp(M(G)) and exp(mu(G)) divide exp(G)^(r+3)";
    "hall-collection", Hall,
        "(xy)^(p^k) = x^(p^k) y^(p^k) and [x,y]^(p^k) = [x^(p^k),y] modulo the collection modulus";
    "hall-collection-product", Hall,
        "(x_1...x_r)^(p^k) = x_1^(p^k)...x_r^(p^k) modulo the collection modulus of <x_1,...,x_r>";
    "hall-subgroup-congruence", Hall,
        "[N^(p^k),M] = [N,M]^(p^k) modulo prod_j [M,_(p^j) N]^(p^(k-j))";
    "normal-inclusion", PgroupLemmas,
        "N, M normal and N <= M [N,G] N^p imply N <= M";
    "potent-lcs-powers", PgroupLemmas,
        "G potent implies gamma_{k+1}(G) <= gamma_k(G)^4 (p = 2) or gamma_{p-1+k}(G) <= gamma_{k+1}(G)^p (p odd)";
    "omega-exponent-bound", PgroupLemmas,
        "gamma_{k(p-1)}(G) <= gamma_r(G)^(p^s) with k(p-1) < r + s(p-1) implies exp(Omega_i(G)) <= p^(i+k-1)";
    "powerful-iterated-agemo", PgroupLemmas,
        "G powerful implies Pi_i(G) = G^(p^i) for i >= 1";
    "element-presentation-agreement", Oracles,
        "generator-indexed and element-indexed presentations of nu(G) define groups of the same order";
    "schur-oracle-agreement", Oracles,
        "mu(G)/Delta(G) has the abelian invariants of H_2(G) from the bar resolution";
}

pub fn claim(id: &str) -> Option<&'static Claim> {
    CLAIMS.iter().find(|c| c.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_every_suite_has_claims() {
        let mut ids: Vec<_> = CLAIMS.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), CLAIMS.len());
        for s in Suite::ALL {
            assert!(s.claims().count() > 0, "{s}");
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
    }

    #[test]
    fn suite_lists() {
        assert_eq!(parse_suites("all").unwrap().len(), Suite::ALL.len());
        assert_eq!(parse_suites("hall,oracles,hall").unwrap(), [Suite::Hall, Suite::Oracles]);
        assert!(parse_suites("nope").is_err());
    }
}
