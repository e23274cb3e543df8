//! Browser bindings. Every export takes a group spec string and returns a
//! JSON document; errors are thrown as JS strings.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use pnu::coset::{regular_group, DEFAULT_MAX_COSETS};
use pnu::harness::{parse_suites, run_entry, to_json, CorpusEntry, RunOptions, DEFAULT_SEED};
use pnu::nu::build_nu;
use pnu::perm::group_exponent;
use pnu::pgroup::{is_potent, is_powerful, m_of, profile};
use pnu::presentation::{catalog_group, GroupSpec};

fn parse(spec: &str) -> Result<GroupSpec, String> {
    spec.trim().parse().map_err(|e: pnu::Error| e.to_string())
}

/// Profile of a catalog group: order, class, coclass, exponent, lower
/// central series orders and the powerful/potent predicates.
pub fn analyze_json(spec: &str) -> Result<String, String> {
    let spec = parse(spec)?;
    let p = spec.prime().ok_or("not a p-group family")?;
    let run = || -> pnu::Result<Value> {
        let g = regular_group(&catalog_group(&spec)?, DEFAULT_MAX_COSETS)?;
        let prof = profile(&g, p)?;
        Ok(json!({
            "group": spec.to_string(),
            "p": p,
            "n": prof.n,
            "order": prof.order(),
            "class": prof.class,
            "coclass": prof.coclass,
            "exponent": prof.exponent,
            "series_orders": prof.series_orders,
            "m": (prof.coclass >= 1).then(|| m_of(p, prof.coclass).m),
            "powerful": is_powerful(&g, p)?,
            "potent": is_potent(&g, p)?,
            "maximal_class": prof.coclass == 1 && prof.n >= 2,
        }))
    };
    run().map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Orders and exponents of nu(G) and its distinguished subgroups.
pub fn nu_json(spec: &str) -> Result<String, String> {
    let spec = parse(spec)?;
    let run = || -> pnu::Result<Value> {
        let nu = build_nu(&catalog_group(&spec)?)?;
        let mut rows = Vec::new();
        for (name, h) in [
            ("G", nu.base()),
            ("nu(G)", nu.nu()),
            ("[G,G^phi]", nu.tensor()),
            ("Delta", nu.delta()),
            ("mu", nu.mu()),
            ("Theta", nu.theta()),
            ("M(G)", nu.schur()),
        ] {
            rows.push(json!({"name": name, "order": h.order(), "exponent": group_exponent(h)?}));
        }
        Ok(json!({"group": spec.to_string(), "rows": rows}))
    };
    run().map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Runs the named suites (comma-separated, or `all`) on one group and
/// returns the verdict array.
pub fn verify_json(spec: &str, suites: &str) -> Result<String, String> {
    let spec = parse(spec)?;
    let suites = parse_suites(suites.trim()).map_err(|e| e.to_string())?;
    let mut entry = CorpusEntry::new(spec);
    entry.suites = suites;
    let verdicts = run_entry(&entry, DEFAULT_SEED, &RunOptions::default());
    Ok(to_json(&verdicts))
}

#[wasm_bindgen]
pub fn analyze(spec: &str) -> Result<String, JsValue> {
    analyze_json(spec).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn nu_summary(spec: &str) -> Result<String, JsValue> {
    nu_json(spec).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify(spec: &str, suites: &str) -> Result<String, JsValue> {
    verify_json(spec, suites).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn value(s: Result<String, String>) -> Value {
        serde_json::from_str(&s.unwrap()).unwrap()
    }

    #[test]
    fn analyze_reports_dihedral_profile() {
        let v = value(analyze_json("dihedral:16"));
        assert_eq!(v["order"], 16);
        assert_eq!(v["class"], 3);
        assert_eq!(v["maximal_class"], true);
    }

    #[test]
    fn nu_rows_for_c2() {
        let v = value(nu_json("cyclic:2"));
        let rows = v["rows"].as_array().unwrap();
        assert_eq!(rows[1]["name"], "nu(G)");
        assert_eq!(rows[1]["order"], 8);
        assert_eq!(rows[1]["exponent"], 4);
    }

    #[test]
    fn verify_single_group() {
        let v = value(verify_json("quaternion:8", "nu-structure"));
        let vs = v.as_array().unwrap();
        assert!(!vs.is_empty());
        assert!(vs.iter().all(|x| x["status"] != "fail"));
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(analyze_json("dihedral:12").is_err());
        assert!(verify_json("cyclic:2", "nope").is_err());
    }
}
