//! Serialized verification reports: JSON, TSV and plain text.

use serde::Serialize;

use crate::poly::Assignment;
use crate::verifier::{aggregate_pass, Mode, Status, VerificationResult};
use crate::catalog::StructuralParams;

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Tsv,
    Text,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "tsv" => Ok(Format::Tsv),
            "text" => Ok(Format::Text),
            other => Err(format!("unknown format `{other}` (expected json, tsv or text)")),
        }
    }
}

#[derive(Serialize)]
struct Cell<'a> {
    identity: &'a str,
    params: &'a StructuralParams,
    mode: Mode,
    status: Status,
    lhs_monomials: Option<usize>,
    rhs_monomials: Option<usize>,
    witness: Option<&'a Assignment>,
    elapsed_ms: Option<u64>,
}

#[derive(Serialize)]
struct Report<'a> {
    tool_version: &'a str,
    seed: u64,
    cells: Vec<Cell<'a>>,
}

/// Report options; with `timing` off every duration is written as null so
/// runs compare byte for byte.
#[derive(Clone, Copy, Debug)]
pub struct RenderOptions {
    pub seed: u64,
    pub timing: bool,
}

fn elapsed(r: &VerificationResult, opts: &RenderOptions) -> Option<u64> {
    opts.timing.then_some(r.elapsed_ms)
}

pub fn to_json(results: &[VerificationResult], opts: &RenderOptions) -> String {
    let report = Report {
        tool_version: TOOL_VERSION,
        seed: opts.seed,
        cells: results
            .iter()
            .map(|r| Cell {
                identity: &r.identity,
                params: &r.params,
                mode: r.mode,
                status: r.status,
                lhs_monomials: r.lhs_monomials,
                rhs_monomials: r.rhs_monomials,
                witness: r.witness.as_ref(),
                elapsed_ms: elapsed(r, opts),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
    s.push('\n');
    s
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn to_tsv(results: &[VerificationResult], opts: &RenderOptions) -> String {
    let mut out = String::from("identity\tparams\tmode\tstatus\tlhs_monomials\trhs_monomials\telapsed_ms\n");
    for r in results {
        out.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.identity,
            r.params,
            r.mode,
            r.status,
            opt(r.lhs_monomials),
            opt(r.rhs_monomials),
            opt(elapsed(r, opts)),
        ));
    }
    out
}

fn render_point(p: &Assignment) -> String {
    p.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

pub fn to_text(results: &[VerificationResult], opts: &RenderOptions) -> String {
    let mut out = String::new();
    for r in results {
        out.push_str(&format!("{:<26} {:<9} {:<28} {}", r.status, r.mode, r.identity, r.params));
        if let Some(ms) = elapsed(r, opts) {
            out.push_str(&format!(" ({ms} ms)"));
        }
        out.push('\n');
        if let Some(w) = &r.witness {
            out.push_str(&format!("    witness: {}\n", render_point(w)));
        }
        if r.status == Status::Fail {
            if let Some(d) = &r.difference {
                out.push_str(&format!("    lhs - rhs = {d}\n"));
            }
        }
    }
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    out.push_str(&format!(
        "{} cells: {} pass, {} fail, {} known_discrepant_confirmed, {} mutation_inconclusive, {} aborted -> {}\n",
        results.len(),
        count(Status::Pass),
        count(Status::Fail),
        count(Status::KnownDiscrepantConfirmed),
        count(Status::MutationInconclusive),
        count(Status::Aborted),
        if aggregate_pass(results) { "PASS" } else { "FAIL" },
    ));
    out
}

pub fn render(results: &[VerificationResult], format: Format, opts: &RenderOptions) -> String {
    match format {
        Format::Json => to_json(results, opts),
        Format::Tsv => to_tsv(results, opts),
        Format::Text => to_text(results, opts),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::find;
    use crate::verifier::{verify_numeric, verify_symbolic};

    #[test]
    fn json_shape() {
        let p = StructuralParams::new().with("n", 1);
        let r = vec![
            verify_symbolic(find("jensen").unwrap(), &p).unwrap(),
            verify_numeric(find("jensen").unwrap(), &p, 0, 2).unwrap(),
        ];
        let s = to_json(&r, &RenderOptions { seed: 5, timing: false });
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["seed"], 5);
        let cell = &v["cells"][0];
        assert_eq!(cell["identity"], "jensen");
        assert_eq!(cell["params"], "n=1");
        assert_eq!(cell["status"], "pass");
        assert_eq!(cell["lhs_monomials"], 3);
        assert!(cell["witness"].is_null() && cell["elapsed_ms"].is_null());
        assert!(v["cells"][1]["lhs_monomials"].is_null());
        // key order is part of the format
        let keys = ["\"identity\"", "\"params\"", "\"mode\"", "\"status\"", "\"lhs_monomials\"", "\"rhs_monomials\"", "\"witness\"", "\"elapsed_ms\""];
        let pos: Vec<_> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(s.find("tool_version").unwrap() < s.find("\"seed\"").unwrap());
    }

    #[test]
    fn tsv_columns() {
        let p = StructuralParams::new().with("n", 2);
        let r = vec![verify_symbolic(find("simons").unwrap(), &p).unwrap()];
        let s = to_tsv(&r, &RenderOptions { seed: 0, timing: false });
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines[0].split('\t').count(), 7);
        assert_eq!(lines[1], "simons\tn=2\tsymbolic\tpass\t3\t3\t-");
    }
}
