//! Whole-dataset analysis: every checker, the revealed relations, and the
//! rationalization test, gathered into one serializable report.

use serde::Serialize;
use serde_json::Value;

use crate::axioms::{
    check_delta, check_rho, check_tau, check_v_axiom, check_warp, detect_reference_points,
    ReferencePointJson, Status, Verdict, VerdictJson,
};
use crate::correspondence::ChoiceData;
use crate::dataset::{CompletionPolicy, PartialChoiceDataset};
use crate::error::Result;
use crate::relations::{rationalization_check, revealed_from_pairs, v_relation, RelationJson};

#[derive(Clone, Copy, Debug, Default)]
pub struct AnalysisOptions {
    /// Completion applied before the V-axiom and delta checks.
    pub completion: Option<CompletionPolicy>,
    /// Report every menu where rationalization fails, not just the first.
    pub all_failures: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct AnalysisReport {
    pub dataset: DatasetSummary,
    pub verdicts: Verdicts,
    pub relations: Relations,
    pub preference: PreferenceFlags,
    pub rationalization: RationalizationJson,
    pub reference_points: Vec<ReferencePointJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DatasetSummary {
    pub n: usize,
    pub alternatives: Vec<String>,
    pub observations: usize,
    /// Share of nonempty menus with a known choice (singletons included).
    pub coverage: f64,
    pub total: bool,
    /// Completion policy applied before the V-axiom and delta checks.
    pub completion: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdicts {
    pub tau: VerdictJson,
    pub rho: VerdictJson,
    pub warp: VerdictJson,
    pub v_axiom: VerdictJson,
    pub delta: VerdictJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Relations {
    /// `None` unless every two-element menu is known.
    pub strict: Option<RelationJson>,
    pub weak: Option<RelationJson>,
    /// V over the known menus (after completion, if one was applied).
    pub v: RelationJson,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PreferenceFlags {
    /// The strict revealed preference is asymmetric and negatively
    /// transitive.
    pub strict_is_preference: Option<bool>,
    /// `(x, y, z)` with `x ⊁ y`, `y ⊁ z` and `x ≻ z`.
    pub negative_transitivity_witness: Option<[String; 3]>,
    pub weak_is_complete: Option<bool>,
    pub weak_is_transitive: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalizationJson {
    /// Whether the strict revealed preference rationalizes the data.
    pub status: Status,
    pub failures: Vec<RationalizationFailureJson>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RationalizationFailureJson {
    pub menu: Vec<String>,
    pub expected: Vec<String>,
    pub actual: Vec<String>,
}

fn policy_name(policy: CompletionPolicy) -> &'static str {
    match policy {
        CompletionPolicy::FullMenu => "full-menu",
        CompletionPolicy::Fail => "fail",
    }
}

/// Run every check on `data`.
///
/// Tau, rho, WARP and the reference-point scan always see the data as
/// observed. The V-axiom and delta see the completed correspondence when a
/// completion policy is given.
pub fn analyze(data: &PartialChoiceDataset, options: AnalysisOptions) -> Result<AnalysisReport> {
    let u = data.universe();
    let completed = options
        .completion
        .map(|policy| data.complete(policy))
        .transpose()?;
    let (v_axiom, delta, v) = match &completed {
        Some(c) => (check_v_axiom(c), check_delta(c), v_relation(c)),
        None => (check_v_axiom(data), check_delta(data), v_relation(data)),
    };
    let json = |v: &Verdict| v.to_json(u);

    let revealed = revealed_from_pairs(data);
    let rationalization = match &revealed {
        Some((strict, _)) => {
            let check = rationalization_check(data, strict, options.all_failures);
            RationalizationJson {
                status: match check.outcome() {
                    Some(true) => Status::Satisfied,
                    Some(false) => Status::Violated,
                    None => Status::Undetermined,
                },
                failures: check
                    .failures
                    .iter()
                    .map(|f| RationalizationFailureJson {
                        menu: u.menu_labels(f.menu),
                        expected: u.menu_labels(f.expected),
                        actual: u.menu_labels(f.actual),
                    })
                    .collect(),
            }
        }
        None => RationalizationJson {
            status: Status::Undetermined,
            failures: Vec::new(),
        },
    };
    let label3 = |(x, y, z): (usize, usize, usize)| {
        [
            u.label(x).to_string(),
            u.label(y).to_string(),
            u.label(z).to_string(),
        ]
    };

    Ok(AnalysisReport {
        dataset: DatasetSummary {
            n: u.size(),
            alternatives: u.labels().to_vec(),
            observations: data.observations().len(),
            coverage: data.coverage(),
            total: data.is_total(),
            completion: options.completion.map(policy_name),
        },
        verdicts: Verdicts {
            tau: json(&check_tau(data)),
            rho: json(&check_rho(data)),
            warp: json(&check_warp(data)),
            v_axiom: json(&v_axiom),
            delta: json(&delta),
        },
        relations: Relations {
            strict: revealed.as_ref().map(|(s, _)| s.to_json(u)),
            weak: revealed.as_ref().map(|(_, w)| w.to_json(u)),
            v: v.to_json(u),
        },
        preference: PreferenceFlags {
            strict_is_preference: revealed.as_ref().map(|(s, _)| s.is_strict_preference()),
            negative_transitivity_witness: revealed
                .as_ref()
                .and_then(|(s, _)| s.negative_transitivity_violation())
                .map(label3),
            weak_is_complete: revealed.as_ref().map(|(_, w)| w.is_complete()),
            weak_is_transitive: revealed.as_ref().map(|(_, w)| w.is_transitive()),
        },
        rationalization,
        reference_points: detect_reference_points(data)
            .iter()
            .map(|r| r.to_json(u))
            .collect(),
    })
}

impl AnalysisReport {
    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    /// Statements that must hold between the parts of a report on total
    /// data; returns the ones that fail.
    pub fn consistency_issues(&self) -> Vec<String> {
        let mut issues = Vec::new();
        if !self.dataset.total {
            return issues;
        }
        let tau = self.verdicts.tau.status == Status::Satisfied;
        let rho = self.verdicts.rho.status == Status::Satisfied;
        let warp = self.verdicts.warp.status == Status::Satisfied;
        let pref = self.preference.strict_is_preference == Some(true);
        let rat = self.rationalization.status == Status::Satisfied;
        if tau != pref {
            issues.push(format!("tau {tau} but strict preference {pref}"));
        }
        if rho != rat {
            issues.push(format!("rho {rho} but rationalized {rat}"));
        }
        if tau && rho && !(pref && rat) {
            issues.push("tau and rho hold but not preference and rationalization".into());
        }
        if warp != (tau && rho) {
            issues.push(format!("WARP {warp} but tau and rho {}", tau && rho));
        }
        if self.dataset.completion.is_none() {
            let normal = self.verdicts.v_axiom.status == Status::Satisfied;
            if normal != rat {
                issues.push(format!("V-axiom {normal} but rationalized {rat}"));
            }
        }
        issues
    }
}

fn status_word(v: &Value) -> &str {
    v.as_str().unwrap_or("?")
}

fn labels(v: &Value) -> String {
    match v.as_array() {
        Some(items) => format!(
            "{{{}}}",
            items
                .iter()
                .map(|i| i.as_str().unwrap_or("?"))
                .collect::<Vec<_>>()
                .join(",")
        ),
        None => v.as_str().unwrap_or("?").to_string(),
    }
}

fn witness_line(w: &Value) -> String {
    let Some(obj) = w.as_object() else {
        return w.to_string();
    };
    obj.iter()
        .map(|(k, v)| format!("{k}={}", labels(v)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Human-readable rendering of a report's JSON form.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    let d = &report["dataset"];
    out.push_str(&format!(
        "alternatives: {}  observations: {}  coverage: {:.3}{}\n",
        labels(&d["alternatives"]),
        d["observations"],
        d["coverage"].as_f64().unwrap_or(0.0),
        match d["completion"].as_str() {
            Some(p) => format!("  (V-axiom and delta after {p} completion)"),
            None => String::new(),
        }
    ));
    out.push('\n');
    for key in ["tau", "rho", "warp", "v_axiom", "delta"] {
        let v = &report["verdicts"][key];
        out.push_str(&format!(
            "{:<8} {}",
            v["axiom"].as_str().unwrap_or(key),
            status_word(&v["status"])
        ));
        if let Some(count) = v["violation_count"].as_u64().filter(|&c| c > 0) {
            out.push_str(&format!(" ({count} violations)"));
        }
        out.push('\n');
        if let Some(first) = v["witnesses"].as_array().and_then(|w| w.first()) {
            out.push_str(&format!(
                "         first witness: {}\n",
                witness_line(first)
            ));
        }
    }
    out.push('\n');
    let p = &report["preference"];
    out.push_str(&format!(
        "strict revealed preference is a preference: {}\n",
        match p["strict_is_preference"].as_bool() {
            Some(b) => b.to_string(),
            None => "undetermined".into(),
        }
    ));
    let r = &report["rationalization"];
    out.push_str(&format!(
        "rationalized by strict revealed preference: {}\n",
        status_word(&r["status"])
    ));
    for f in r["failures"].as_array().into_iter().flatten() {
        out.push_str(&format!(
            "  menu {}: undominated {}, chosen {}\n",
            labels(&f["menu"]),
            labels(&f["expected"]),
            labels(&f["actual"])
        ));
    }
    let refs = report["reference_points"]
        .as_array()
        .cloned()
        .unwrap_or_default();
    out.push_str(&format!("reference points: {}\n", refs.len()));
    for rp in refs {
        out.push_str(&format!(
            "  {} is a reference point for {} over {}\n",
            labels(&rp["z"]),
            labels(&rp["x"]),
            labels(&rp["y"])
        ));
    }
    out
}
