//! Line-oriented and JSON rendering of law reports.

use gammatroid_core::laws::{LawReport, Summary};
use gammatroid_core::LawId;
use serde_json::{json, Value};

/// `law_id<TAB>instance<TAB>verdict<TAB>counterexample-or-dash`.
pub fn line(r: &LawReport) -> String {
    let cx = r
        .counterexample()
        .map_or_else(|| "-".to_string(), |c| c.to_string());
    format!("{}\t{}\t{}\t{}", r.law(), r.instance(), r.verdict(), cx)
}

pub fn lines(reports: &[LawReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

pub fn record(r: &LawReport) -> Value {
    json!({
        "law_id": r.law().as_str(),
        "instance": r.instance(),
        "verdict": r.verdict().as_str(),
        "counterexample": r.counterexample().map(|c| c.to_string()),
        "note": r.note(),
    })
}

pub fn records(reports: &[LawReport]) -> Value {
    Value::Array(reports.iter().map(record).collect())
}

pub fn summary_line(law: LawId, s: &Summary) -> String {
    format!(
        "{law}\tpass={}\tfail={}\tprecondition-unmet={}",
        s.pass, s.fail, s.unmet
    )
}

pub fn summary_record(law: LawId, s: &Summary) -> Value {
    json!({
        "law_id": law.as_str(),
        "pass": s.pass,
        "fail": s.fail,
        "precondition_unmet": s.unmet,
    })
}
