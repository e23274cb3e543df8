use crate::error::{Error, Result};
use crate::perm::{PermGroup, ELEMENT_THRESHOLD};

/// Largest group handled by the bar-resolution oracle.
pub const SCHUR_ORACLE_LIMIT: u64 = 16;

/// `H_2(G, Z)` as a sorted list of prime-power orders of cyclic factors,
/// from the Smith normal form of the third boundary map of the normalized
/// bar resolution. Since `H_2` of a finite group is finite, it is the torsion
/// of the cokernel of that map.
pub fn schur_multiplier_oracle(g: &PermGroup) -> Result<Vec<u64>> {
    let order = g.order();
    if order > SCHUR_ORACLE_LIMIT {
        return Err(Error::exceeded("group order for the bar-resolution oracle", SCHUR_ORACLE_LIMIT));
    }
    if !g.is_semiregular() {
        return schur_multiplier_oracle(&g.regular_copy()?.group);
    }
    let mut ar = g.arith();
    let elements = ar.elements();
    let nonid: Vec<u32> = elements[1..].to_vec();
    let m = nonid.len();
    if m == 0 {
        return Ok(Vec::new());
    }
    let mut index = vec![usize::MAX; g.degree()];
    for (i, &u) in nonid.iter().enumerate() {
        index[u as usize] = i;
    }
    let e = ar.identity();
    let cell2 = |a: u32, b: u32| -> Option<usize> {
        (a != e && b != e).then(|| index[a as usize] * m + index[b as usize])
    };
    let rows = m * m;
    let cols = m * m * m;
    let mut a = vec![vec![0i64; cols]; rows];
    let mut col = 0;
    for &g1 in &nonid {
        for &g2 in &nonid {
            let g12 = ar.mul(g1, g2);
            for &g3 in &nonid {
                let g23 = ar.mul(g2, g3);
                let terms = [
                    (cell2(g2, g3), 1),
                    (cell2(g12, g3), -1),
                    (cell2(g1, g23), 1),
                    (cell2(g1, g2), -1),
                ];
                for (cell, sign) in terms {
                    if let Some(r) = cell {
                        a[r][col] += sign;
                    }
                }
                col += 1;
            }
        }
    }
    let diag = smith_diagonal(a)?;
    let mut out = Vec::new();
    for d in diag {
        out.extend(prime_power_factors(d.unsigned_abs()));
    }
    out.sort_unstable();
    Ok(out)
}

fn overflow() -> Error {
    Error::exceeded("integer size in Smith normal form", i64::MAX as u64)
}

/// Non-zero diagonal entries of a diagonal form equivalent to `a` over the
/// integers. The cokernel is the direct sum of the cyclic groups they
/// define, so no divisibility normalization is needed.
fn smith_diagonal(mut a: Vec<Vec<i64>>) -> Result<Vec<i64>> {
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    for t in 0..rows.min(cols) {
        // smallest non-zero entry of the remaining block as pivot
        let mut best: Option<(i64, usize, usize)> = None;
        'scan: for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &v) in row.iter().enumerate().skip(t) {
                if v != 0 && best.is_none_or(|(b, _, _)| v.abs() < b) {
                    best = Some((v.abs(), i, j));
                    if v.abs() == 1 {
                        break 'scan;
                    }
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let piv = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let v = a[i][t];
                if v == 0 {
                    continue;
                }
                let q = v / piv;
                let (top, rest) = a.split_at_mut(i);
                let src = &top[t];
                let dst = &mut rest[0];
                for j in t..cols {
                    if src[j] != 0 {
                        let delta = q.checked_mul(src[j]).ok_or_else(overflow)?;
                        dst[j] = dst[j].checked_sub(delta).ok_or_else(overflow)?;
                    }
                }
                clean &= dst[t] == 0;
            }
            for j in t + 1..cols {
                let v = a[t][j];
                if v == 0 {
                    continue;
                }
                let q = v / piv;
                for row in a.iter_mut().skip(t) {
                    if row[t] != 0 {
                        let delta = q.checked_mul(row[t]).ok_or_else(overflow)?;
                        row[j] = row[j].checked_sub(delta).ok_or_else(overflow)?;
                    }
                }
                clean &= a[t][j] == 0;
            }
            if clean {
                break;
            }
            // a remainder smaller than the pivot was left; move it to the pivot
            let mut best = (piv.abs(), t, t);
            for i in t + 1..rows {
                let v = a[i][t].abs();
                if v != 0 && v < best.0 {
                    best = (v, i, t);
                }
            }
            for j in t + 1..cols {
                let v = a[t][j].abs();
                if v != 0 && v < best.0 {
                    best = (v, t, j);
                }
            }
            let (_, bi, bj) = best;
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        diag.push(a[t][t]);
    }
    Ok(diag)
}

fn prime_power_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut q = 2;
    while q * q <= n {
        if n.is_multiple_of(q) {
            let mut pk = 1;
            while n.is_multiple_of(q) {
                n /= q;
                pk *= q;
            }
            out.push(pk);
        }
        q += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Orders of the cyclic factors in the primary decomposition of a finite
/// abelian group, sorted ascending.
pub fn abelian_invariants(g: &PermGroup) -> Result<Vec<u64>> {
    if !g.is_abelian() {
        return Err(Error::HypothesisUnmet("group is not abelian".into()));
    }
    let order = g.order();
    if order > ELEMENT_THRESHOLD {
        return Err(Error::exceeded("group elements", ELEMENT_THRESHOLD));
    }
    if !g.is_semiregular() {
        return abelian_invariants(&g.regular_copy()?.group);
    }
    let mut ar = g.arith();
    let orders: Vec<u64> = ar.elements().iter().map(|&u| ar.order(u)).collect();
    let mut out = Vec::new();
    for pk in prime_power_factors(order) {
        let q = smallest_prime_factor(pk);
        // count[k] = log_q |{x : x^{q^k} = 1}|
        let mut counts = vec![0u32];
        let mut qk = 1u64;
        while qk < pk {
            qk *= q;
            let c = orders.iter().filter(|&&o| qk.is_multiple_of(o)).count() as u64;
            counts.push(c.ilog(q));
        }
        let k_max = counts.len() - 1;
        // at_least[k] = number of cyclic factors of order >= q^k
        for k in 1..=k_max {
            let at_least = counts[k] - counts[k - 1];
            let next = if k < k_max { counts[k + 1] - counts[k] } else { 0 };
            for _ in 0..(at_least - next) {
                out.push(q.pow(k as u32));
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

fn smallest_prime_factor(n: u64) -> u64 {
    (2..=n).find(|q| n.is_multiple_of(*q)).unwrap_or(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::{regular_group, DEFAULT_MAX_COSETS};
    use crate::presentation::{catalog_group, GroupSpec};

    fn group(spec: &str) -> PermGroup {
        let spec: GroupSpec = spec.parse().unwrap();
        regular_group(&catalog_group(&spec).unwrap(), DEFAULT_MAX_COSETS).unwrap()
    }

    #[test]
    fn bar_resolution_values() {
        assert_eq!(schur_multiplier_oracle(&group("cyclic:4")).unwrap(), Vec::<u64>::new());
        assert_eq!(schur_multiplier_oracle(&group("elemab:2,2")).unwrap(), [2]);
        assert_eq!(schur_multiplier_oracle(&group("dihedral:8")).unwrap(), [2]);
        assert_eq!(schur_multiplier_oracle(&group("quaternion:8")).unwrap(), Vec::<u64>::new());
        assert_eq!(schur_multiplier_oracle(&group("elemab:2,3")).unwrap(), [2, 2, 2]);
        assert_eq!(schur_multiplier_oracle(&group("elemab:3,2")).unwrap(), [3]);
    }

    #[test]
    fn invariants_of_abelian_groups() {
        assert_eq!(abelian_invariants(&group("product:cyclic:4,cyclic:2")).unwrap(), [2, 4]);
        assert_eq!(abelian_invariants(&group("elemab:3,2")).unwrap(), [3, 3]);
        assert_eq!(abelian_invariants(&group("cyclic:9")).unwrap(), [9]);
        assert!(abelian_invariants(&group("dihedral:8")).is_err());
    }

    #[test]
    fn smith_of_small_matrix() {
        let d = smith_diagonal(vec![vec![2, 4], vec![6, 8]]).unwrap();
        let prod: i64 = d.iter().product();
        assert_eq!(prod.abs(), 8);
        assert_eq!(d.len(), 2);
    }
}
