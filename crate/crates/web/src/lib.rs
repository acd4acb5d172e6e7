//! Browser bindings. Every export takes and returns JSON text so the page needs no
//! glue beyond `JSON.parse`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use quotient_power::render::voter_json;
use quotient_power::sweep::sweep_row;
use quotient_power::{
    apply_restrictions, decision_function, full_report, Error, SwitchingFunction, SystemFile,
    VotingSystem,
};

/// Largest system the page will tabulate.
pub const WEB_MAX_VARS: usize = 16;

fn error(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn load(system_json: &str) -> Result<VotingSystem, Error> {
    SystemFile::parse(system_json)?.to_system()
}

/// Every index of the system described by `system_json`.
#[wasm_bindgen]
pub fn analyze(system_json: &str) -> String {
    let run = || -> Result<Value, Error> {
        let sys = load(system_json)?;
        let r = full_report(&sys, WEB_MAX_VARS)?;
        Ok(json!({
            "n": r.n,
            "restricted": r.restricted,
            "passing": r.passing,
            "failing": r.failing,
            "voters": r.voters.iter().map(voter_json).collect::<Vec<_>>(),
        }))
    };
    run().map_or_else(error, |v| v.to_string())
}

/// k-out-of-n indices next to their closed forms, unrestricted and with {X1, X2} forbidden.
#[wasm_bindgen]
pub fn kofn(n: usize, k: usize) -> String {
    if n == 0 || k == 0 || k > n || n > WEB_MAX_VARS {
        return error(format!("need 1 <= k <= n <= {WEB_MAX_VARS}"));
    }
    match sweep_row(n, k) {
        Ok(row) => json!({
            "n": n,
            "k": k,
            "ok": row.ok(),
            "checks": row.checks.iter().map(|c| json!({
                "label": c.label,
                "computed": c.computed,
                "expected": c.expected,
            })).collect::<Vec<_>>(),
        })
        .to_string(),
        Err(e) => error(e),
    }
}

fn bits(f: &SwitchingFunction) -> String {
    (0..f.len()).map(|x| if f.value(x) { '1' } else { '0' }).collect()
}

fn polarities(f: &SwitchingFunction) -> Vec<&'static str> {
    (0..f.n())
        .map(|m| f.polarity(m).map_or("?", |p| p.name()))
        .collect()
}

/// Truth tables of `f` and, when coalitions are forbidden, of the restricted `g`,
/// as bit strings in assignment order (bit k of the index is voter k + 1).
#[wasm_bindgen]
pub fn truth_table(system_json: &str) -> String {
    let run = || -> Result<Value, Error> {
        let sys = load(system_json)?;
        let f = decision_function(&sys, WEB_MAX_VARS)?;
        let g = if sys.forbidden().is_empty() {
            None
        } else {
            Some(apply_restrictions(&f, sys.forbidden())?.restricted)
        };
        Ok(json!({
            "n": f.n(),
            "voters": sys.voters(),
            "f": bits(&f),
            "f_polarity": polarities(&f),
            "g": g.as_ref().map(bits),
            "g_polarity": g.as_ref().map(polarities),
        }))
    };
    run().map_or_else(error, |v| v.to_string())
}
