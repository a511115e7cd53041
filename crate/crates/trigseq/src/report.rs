//! Machine-readable verification reports.
//!
//! Schema: top-level `{suite, tool-version, items[], summary}`, items
//! `{claim, params, status, details}`. Items are kept sorted by
//! (claim, numeric parameter, params) so renderings are deterministic
//! regardless of how many workers produced them. Exact rationals are
//! serialized as `num/den` strings — never floating approximations — and
//! big-float values carry their precision annotation inline (`…@256b`).

use serde::{Deserialize, Serialize};

use crate::numeric::EvalReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Mismatch,
    Error,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Mismatch => "mismatch",
            Status::Error => "error",
        };
        f.write_str(s)
    }
}

/// One verified claim instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckItem {
    pub claim: String,
    pub params: String,
    pub status: Status,
    pub details: String,
}

impl CheckItem {
    pub fn new(
        claim: impl Into<String>,
        params: impl Into<String>,
        status: Status,
        details: impl Into<String>,
    ) -> Self {
        // commas are the CSV field separator; newlines are row separators
        let scrub = |s: String| s.replace(',', ";").replace(['\n', '\r'], " ");
        CheckItem {
            claim: scrub(claim.into()),
            params: scrub(params.into()),
            status,
            details: scrub(details.into()),
        }
    }

    pub fn pass(
        claim: impl Into<String>,
        params: impl Into<String>,
        details: impl Into<String>,
    ) -> Self {
        CheckItem::new(claim, params, Status::Pass, details)
    }

    /// Numeric sort key: the integer after the first '=' in params, when
    /// there is one ("n=42;…" → 42). Lets "p=7" sort before "p=11".
    fn param_key(&self) -> Option<i64> {
        let rest = self.params.split_once('=')?.1;
        let digits: String = rest
            .chars()
            .take_while(|c| c.is_ascii_digit() || *c == '-')
            .collect();
        digits.parse().ok()
    }

    fn sort_key(&self) -> (String, Option<i64>, String) {
        (self.claim.clone(), self.param_key(), self.params.clone())
    }
}

/// From a numeric identity check, with the big-float fields rendered at
/// their context precision.
pub fn item_from_eval(r: &EvalReport, prec_bits: usize, extra_params: &str) -> CheckItem {
    let status = if r.pass { Status::Pass } else { Status::Fail };
    let params = if extra_params.is_empty() {
        format!("prec={prec_bits}")
    } else {
        format!("{extra_params};prec={prec_bits}")
    };
    CheckItem::new(
        r.claim,
        params,
        status,
        format!(
            "lhs={lhs}@{p}b; rhs={rhs}@{p}b; residual={res}@{p}b; tolerance={tol}@{p}b; terms={t}",
            lhs = r.lhs,
            rhs = r.rhs,
            res = r.residual,
            tol = r.tolerance,
            t = r.terms_used,
            p = prec_bits,
        ),
    )
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub pass: u64,
    pub fail: u64,
    pub mismatch: u64,
    pub error: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    #[serde(rename = "tool-version")]
    pub tool_version: String,
    pub items: Vec<CheckItem>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, mut items: Vec<CheckItem>) -> Self {
        items.sort_by_key(|a| a.sort_key());
        let mut summary = Summary::default();
        for item in &items {
            match item.status {
                Status::Pass => summary.pass += 1,
                Status::Fail => summary.fail += 1,
                Status::Mismatch => summary.mismatch += 1,
                Status::Error => summary.error += 1,
            }
        }
        VerificationReport {
            suite: suite.into(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            items,
            summary,
        }
    }

    /// Merge several reports into one suite, re-sorting and re-tallying.
    pub fn merge(suite: impl Into<String>, reports: Vec<VerificationReport>) -> Self {
        let items = reports.into_iter().flat_map(|r| r.items).collect();
        VerificationReport::new(suite, items)
    }

    pub fn all_pass(&self) -> bool {
        self.summary.fail == 0 && self.summary.mismatch == 0 && self.summary.error == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn from_json(text: &str) -> Result<VerificationReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("claim,params,status,detail\n");
        for item in &self.items {
            out.push_str(&format!(
                "{},{},{},{}\n",
                item.claim, item.params, item.status, item.details
            ));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("suite: {} (tool {})\n", self.suite, self.tool_version);
        for item in &self.items {
            out.push_str(&format!(
                "  [{:^8}] {:<24} {:<28} {}\n",
                item.status.to_string(),
                item.claim,
                item.params,
                item.details
            ));
        }
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} mismatch, {} error\n",
            self.summary.pass, self.summary.fail, self.summary.mismatch, self.summary.error
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> VerificationReport {
        VerificationReport::new(
            "sample",
            vec![
                CheckItem::new("beta", "p=11", Status::Pass, "ok"),
                CheckItem::new("alpha", "n=2", Status::Pass, "ok"),
                CheckItem::new("beta", "p=3", Status::Fail, "lhs=1; rhs=2"),
                CheckItem::new("alpha", "n=10", Status::Mismatch, "file 1 != exact 2"),
            ],
        )
    }

    #[test]
    fn items_sorted_by_claim_then_numeric_param() {
        let r = sample();
        let order: Vec<(&str, &str)> = r
            .items
            .iter()
            .map(|i| (i.claim.as_str(), i.params.as_str()))
            .collect();
        assert_eq!(
            order,
            vec![
                ("alpha", "n=2"),
                ("alpha", "n=10"),
                ("beta", "p=3"),
                ("beta", "p=11"),
            ]
        );
    }

    #[test]
    fn summary_counts_match_item_tallies() {
        let r = sample();
        assert_eq!(r.summary.pass, 2);
        assert_eq!(r.summary.fail, 1);
        assert_eq!(r.summary.mismatch, 1);
        assert_eq!(r.summary.error, 0);
        assert!(!r.all_pass());
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        let back = VerificationReport::from_json(&r.to_json()).unwrap();
        assert_eq!(r, back);
    }

    #[test]
    fn csv_and_json_agree_on_claim_status_multisets() {
        let r = sample();
        let mut from_csv: Vec<(String, String)> = r
            .to_csv()
            .lines()
            .skip(1)
            .map(|l| {
                let f: Vec<&str> = l.split(',').collect();
                assert_eq!(f.len(), 4, "line {l:?}");
                (f[0].to_string(), f[2].to_string())
            })
            .collect();
        let mut from_json: Vec<(String, String)> = VerificationReport::from_json(&r.to_json())
            .unwrap()
            .items
            .iter()
            .map(|i| (i.claim.clone(), i.status.to_string()))
            .collect();
        from_csv.sort();
        from_json.sort();
        assert_eq!(from_csv, from_json);
    }

    #[test]
    fn csv_header_is_exact() {
        assert!(sample()
            .to_csv()
            .starts_with("claim,params,status,detail\n"));
    }

    #[test]
    fn commas_never_leak_into_fields() {
        let item = CheckItem::new("a,b", "x=1,2", Status::Pass, "v, w");
        assert_eq!(item.claim, "a;b");
        assert_eq!(item.params, "x=1;2");
        assert_eq!(item.details, "v; w");
    }
}
