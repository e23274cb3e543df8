use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::{parse_presentation, FinitePresentation, Word};
use crate::error::{Error, Result};

/// Named families of the corpus.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic { order: u64 },
    ElementaryAbelian { p: u64, rank: u32 },
    Dihedral { order: u64 },
    Semidihedral { order: u64 },
    Quaternion { order: u64 },
    /// Extraspecial group of order `p^3`, exponent `p` or `p^2` (odd `p`).
    Extraspecial { p: u64, exponent_p2: bool },
    DirectProduct(Vec<GroupSpec>),
    File(PathBuf),
}

/// Address of a corpus group, written `family:params` on the command line.
///
/// `cyclic:9`, `elemab:2,3`, `dihedral:16`, `semidihedral:16`,
/// `quaternion:8`, `extraspecial:3,p`, `extraspecial:3,p2`,
/// `product:dihedral:8,cyclic:2`, `file:path/to/group.pres`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
}

impl GroupSpec {
    pub fn new(family: Family) -> Result<Self> {
        let spec = GroupSpec { family };
        spec.validate()?;
        Ok(spec)
    }

    fn invalid(&self, reason: impl Into<String>) -> Error {
        Error::InvalidSpec {
            spec: self.to_string(),
            reason: reason.into(),
        }
    }

    fn validate(&self) -> Result<()> {
        match &self.family {
            Family::Cyclic { order } => {
                if prime_power(*order).is_none() {
                    return Err(self.invalid("order must be a prime power"));
                }
            }
            Family::ElementaryAbelian { p, rank } => {
                if !is_prime(*p) || *rank == 0 {
                    return Err(self.invalid("need a prime and a positive rank"));
                }
            }
            Family::Dihedral { order } | Family::Quaternion { order } => {
                if !order.is_power_of_two() || *order < 8 {
                    return Err(self.invalid("order must be a power of 2, at least 8"));
                }
            }
            Family::Semidihedral { order } => {
                if !order.is_power_of_two() || *order < 16 {
                    return Err(self.invalid("order must be a power of 2, at least 16"));
                }
            }
            Family::Extraspecial { p, .. } => {
                if !is_prime(*p) || *p == 2 {
                    return Err(self.invalid("extraspecial family needs an odd prime"));
                }
            }
            Family::DirectProduct(factors) => {
                if factors.len() < 2 {
                    return Err(self.invalid("a product needs at least two factors"));
                }
                let primes: Vec<_> = factors.iter().map(|f| f.prime()).collect();
                if primes.iter().any(|p| p.is_none()) || primes.windows(2).any(|w| w[0] != w[1]) {
                    return Err(self.invalid("factors must be p-groups for a single prime"));
                }
            }
            Family::File(_) => {}
        }
        Ok(())
    }

    /// The prime of the family, when it is determined by the parameters.
    pub fn prime(&self) -> Option<u64> {
        match &self.family {
            Family::Cyclic { order } => prime_power(*order).map(|(p, _)| p),
            Family::ElementaryAbelian { p, .. } | Family::Extraspecial { p, .. } => Some(*p),
            Family::Dihedral { .. } | Family::Semidihedral { .. } | Family::Quaternion { .. } => {
                Some(2)
            }
            Family::DirectProduct(f) => f.first().and_then(|f| f.prime()),
            Family::File(_) => None,
        }
    }

    /// The order the family promises, when known without computation.
    pub fn expected_order(&self) -> Option<u64> {
        match &self.family {
            Family::Cyclic { order }
            | Family::Dihedral { order }
            | Family::Semidihedral { order }
            | Family::Quaternion { order } => Some(*order),
            Family::ElementaryAbelian { p, rank } => p.checked_pow(*rank),
            Family::Extraspecial { p, .. } => Some(p * p * p),
            Family::DirectProduct(f) => f
                .iter()
                .try_fold(1u64, |acc, g| g.expected_order().and_then(|o| acc.checked_mul(o))),
            Family::File(_) => None,
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            Family::Cyclic { order } => write!(f, "cyclic:{order}"),
            Family::ElementaryAbelian { p, rank } => write!(f, "elemab:{p},{rank}"),
            Family::Dihedral { order } => write!(f, "dihedral:{order}"),
            Family::Semidihedral { order } => write!(f, "semidihedral:{order}"),
            Family::Quaternion { order } => write!(f, "quaternion:{order}"),
            Family::Extraspecial { p, exponent_p2 } => {
                write!(f, "extraspecial:{p},{}", if *exponent_p2 { "p2" } else { "p" })
            }
            Family::DirectProduct(factors) => {
                write!(f, "product:")?;
                for (i, g) in factors.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
            Family::File(path) => write!(f, "file:{}", path.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = |reason: &str| Error::InvalidSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let (family, params) = s.split_once(':').ok_or_else(|| bad("expected `family:params`"))?;
        let ints = |n: usize| -> Result<Vec<u64>> {
            let v: Vec<u64> = params
                .split(',')
                .map(|t| t.trim().parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad("expected integer parameters"))?;
            if v.len() != n {
                return Err(bad(&format!("expected {n} parameter(s)")));
            }
            Ok(v)
        };
        let family = match family {
            "cyclic" => Family::Cyclic { order: ints(1)?[0] },
            "elemab" => {
                let v = ints(2)?;
                Family::ElementaryAbelian {
                    p: v[0],
                    rank: u32::try_from(v[1]).map_err(|_| bad("rank too large"))?,
                }
            }
            "dihedral" => Family::Dihedral { order: ints(1)?[0] },
            "semidihedral" => Family::Semidihedral { order: ints(1)?[0] },
            "quaternion" => Family::Quaternion { order: ints(1)?[0] },
            "extraspecial" => {
                let (p, e) = params.split_once(',').ok_or_else(|| bad("expected `p,p` or `p,p2`"))?;
                let p: u64 = p.trim().parse().map_err(|_| bad("expected a prime"))?;
                let exponent_p2 = match e.trim() {
                    "p" => false,
                    "p2" => true,
                    _ => return Err(bad("exponent selector must be `p` or `p2`")),
                };
                Family::Extraspecial { p, exponent_p2 }
            }
            "product" => {
                // Tokens without `:` continue the parameter list of the previous factor.
                let mut factors: Vec<String> = Vec::new();
                for tok in params.split(',') {
                    if tok.contains(':') || factors.is_empty() {
                        factors.push(tok.trim().to_string());
                    } else if let Some(last) = factors.last_mut() {
                        last.push(',');
                        last.push_str(tok.trim());
                    }
                }
                Family::DirectProduct(
                    factors
                        .iter()
                        .map(|f| f.parse())
                        .collect::<Result<Vec<GroupSpec>>>()?,
                )
            }
            "file" => Family::File(PathBuf::from(params)),
            _ => return Err(bad("unknown family")),
        };
        GroupSpec::new(family)
    }
}

/// Returns the fixed presentation of a catalog family.
///
/// * cyclic `n`: `<a | a^n>`
/// * elementary abelian `(p, r)`: `<a, b, ... | a^p, ..., [a,b], ...>`
/// * dihedral `2^n`: `<a, b | a^(2^(n-1)), b^2, (ab)^2>`
/// * semidihedral `2^n`: `<a, b | a^(2^(n-1)), b^2, a^b = a^(2^(n-2)-1)>`
/// * quaternion `2^n`: `<a, b | a^(2^(n-1)), b^2 = a^(2^(n-2)), a^b = a^-1>`
/// * extraspecial `p^3`, exponent `p`: `<a, b, c | a^p, b^p, c^p, [a,b]c^-1, [a,c], [b,c]>`
/// * extraspecial `p^3`, exponent `p^2`: `<a, b | a^(p^2), b^p, [a,b]a^-p>`
/// * products: disjoint union of the factor presentations plus every
///   cross commutator between generators of distinct factors.
pub fn catalog_group(spec: &GroupSpec) -> Result<FinitePresentation> {
    let w = Word::power;
    match &spec.family {
        Family::Cyclic { order } => {
            FinitePresentation::with_default_names(1, vec![w(0, exp_i32(*order)?)])
        }
        Family::ElementaryAbelian { p, rank } => {
            let r = *rank as usize;
            let mut rels: Vec<Word> = (0..r as u32).map(|i| w(i, exp_i32(*p).unwrap_or(0))).collect();
            for i in 0..r as u32 {
                for j in i + 1..r as u32 {
                    rels.push(Word::gen(i).commutator(&Word::gen(j)));
                }
            }
            FinitePresentation::with_default_names(r, rels)
        }
        Family::Dihedral { order } => {
            let n = exp_i32(order / 2)?;
            let ab = Word::from_pairs([(0, 1), (1, 1)]);
            FinitePresentation::with_default_names(2, vec![w(0, n), w(1, 2), ab.pow(2)])
        }
        Family::Semidihedral { order } => {
            let n = exp_i32(order / 2)?;
            let conj = Word::gen(0).conjugate(&Word::gen(1)).mul(&w(0, -(n / 2 - 1)));
            FinitePresentation::with_default_names(2, vec![w(0, n), w(1, 2), conj])
        }
        Family::Quaternion { order } => {
            let n = exp_i32(order / 2)?;
            let conj = Word::gen(0).conjugate(&Word::gen(1)).mul(&Word::gen(0));
            FinitePresentation::with_default_names(
                2,
                vec![w(0, n), w(1, 2).mul(&w(0, -n / 2)), conj],
            )
        }
        Family::Extraspecial { p, exponent_p2 } => {
            let p = exp_i32(*p)?;
            let (a, b, c) = (Word::gen(0), Word::gen(1), Word::gen(2));
            if *exponent_p2 {
                FinitePresentation::with_default_names(
                    2,
                    vec![w(0, p * p), w(1, p), a.commutator(&b).mul(&w(0, -p))],
                )
            } else {
                FinitePresentation::with_default_names(
                    3,
                    vec![
                        w(0, p),
                        w(1, p),
                        w(2, p),
                        a.commutator(&b).mul(&c.inverse()),
                        a.commutator(&c),
                        b.commutator(&c),
                    ],
                )
            }
        }
        Family::DirectProduct(factors) => {
            let parts = factors
                .iter()
                .map(catalog_group)
                .collect::<Result<Vec<_>>>()?;
            direct_product(&parts)
        }
        Family::File(path) => {
            let text = std::fs::read_to_string(path)?;
            parse_presentation(&text)
        }
    }
}

fn exp_i32(n: u64) -> Result<i32> {
    i32::try_from(n).map_err(|_| Error::exceeded("exponent does not fit in i32", i32::MAX as u64))
}

/// Disjoint-union presentation with all cross-factor commutators.
pub fn direct_product(parts: &[FinitePresentation]) -> Result<FinitePresentation> {
    let mut names: Vec<String> = Vec::new();
    let mut relators = Vec::new();
    let mut ranges = Vec::new();
    for part in parts {
        let offset = names.len() as u32;
        for n in part.names() {
            let mut name = n.clone();
            let mut k = 2;
            while names.contains(&name) || part.names().iter().any(|m| *m == name && m != n) {
                name = format!("{n}{k}");
                k += 1;
            }
            names.push(name);
        }
        for r in part.relators() {
            relators.push(r.map_generators(|g| g + offset));
        }
        ranges.push(offset..names.len() as u32);
    }
    for (i, ri) in ranges.iter().enumerate() {
        for rj in &ranges[i + 1..] {
            for x in ri.clone() {
                for y in rj.clone() {
                    relators.push(Word::gen(x).commutator(&Word::gen(y)));
                }
            }
        }
    }
    FinitePresentation::new(names, relators)
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `Some((p, k))` when `n = p^k` with `k >= 1`.
pub(crate) fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    let mut k = 0;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some((p, k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(s: &str) -> FinitePresentation {
        catalog_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn cyclic_two() {
        assert_eq!(pres("cyclic:2").to_string(), "gens a\nrel a^2\n");
    }

    #[test]
    fn dihedral_sixteen() {
        assert_eq!(
            pres("dihedral:16").to_string(),
            "gens a b\nrel a^8\nrel b^2\nrel a b a b\n"
        );
    }

    #[test]
    fn heisenberg_mod_three() {
        assert_eq!(
            pres("extraspecial:3,p").to_string(),
            "gens a b c\nrel a^3\nrel b^3\nrel c^3\nrel a^-1 b^-1 a b c^-1\nrel a^-1 c^-1 a c\nrel b^-1 c^-1 b c\n"
        );
    }

    #[test]
    fn product_spec_round_trips() {
        let s: GroupSpec = "product:elemab:2,2,cyclic:4".parse().unwrap();
        assert_eq!(s.to_string(), "product:elemab:2,2,cyclic:4");
        assert_eq!(s.expected_order(), Some(16));
        let p = catalog_group(&s).unwrap();
        assert_eq!(p.num_generators(), 3);
        assert_eq!(p.names(), &["a", "b", "a2"]);
    }

    #[test]
    fn rejects_non_p_group_parameters() {
        assert!("dihedral:12".parse::<GroupSpec>().is_err());
        assert!("cyclic:6".parse::<GroupSpec>().is_err());
        assert!("semidihedral:8".parse::<GroupSpec>().is_err());
        assert!("product:cyclic:2,cyclic:3".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn deterministic_output() {
        assert_eq!(pres("quaternion:16"), pres("quaternion:16"));
    }
}
