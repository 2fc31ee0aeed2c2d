//! Structured pass/flag/fail reports shared by the verifiers and the CLI.
//! JSON output is versioned (`"schema": 1`) and stores all rationals as
//! strings.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Skip,
    Flag,
    Fail,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Status::Pass => "PASS",
            Status::Skip => "SKIP",
            Status::Flag => "FLAG",
            Status::Fail => "FAIL",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportItem {
    pub label: String,
    pub status: Status,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub details: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub title: String,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Report {
        Report {
            title: title.into(),
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, status: Status, details: serde_json::Value) {
        self.items.push(ReportItem {
            label: label.into(),
            status,
            details,
        });
    }

    pub fn pass(&mut self, label: impl Into<String>) {
        self.push(label, Status::Pass, serde_json::Value::Null);
    }

    pub fn fail(&mut self, label: impl Into<String>, details: serde_json::Value) {
        self.push(label, Status::Fail, details);
    }

    pub fn flag(&mut self, label: impl Into<String>, details: serde_json::Value) {
        self.push(label, Status::Flag, details);
    }

    /// Worst status over all items (PASS when empty).
    pub fn status(&self) -> Status {
        self.items
            .iter()
            .map(|i| i.status)
            .max()
            .unwrap_or(Status::Pass)
    }

    pub fn is_pass(&self) -> bool {
        self.status() <= Status::Flag && self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "schema": 1,
            "title": self.title,
            "status": self.status().to_string(),
            "items": serde_json::to_value(&self.items).expect("serializable"),
        })
    }

    /// Plain-text rendering, one line per item.
    pub fn to_text(&self) -> String {
        let mut out = format!("[{}] {}\n", self.status(), self.title);
        for item in &self.items {
            out.push_str(&format!("  [{}] {}", item.status, item.label));
            if !item.details.is_null() {
                out.push_str(&format!("  {}", item.details));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_aggregation() {
        let mut r = Report::new("demo");
        assert_eq!(r.status(), Status::Pass);
        r.pass("a");
        r.flag("b", serde_json::json!({"why": "printed value differs"}));
        assert_eq!(r.status(), Status::Flag);
        assert!(r.is_pass());
        r.fail("c", serde_json::json!({}));
        assert_eq!(r.status(), Status::Fail);
        assert!(!r.is_pass());
        let j = r.to_json();
        assert_eq!(j["schema"], 1);
        assert_eq!(j["status"], "FAIL");
    }
}
