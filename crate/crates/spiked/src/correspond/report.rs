use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Match,
    Mismatch,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub locus: String,
    pub predicted: String,
    pub computed: String,
    pub status: Status,
    /// Unasserted claims are reported with both values and never fail a run.
    pub asserted: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claims: Vec<Claim>,
}

impl VerificationReport {
    pub fn check(&mut self, id: impl Into<String>, locus: &str, predicted: impl ToString, computed: impl ToString) -> bool {
        let (p, c) = (predicted.to_string(), computed.to_string());
        let status = if p == c { Status::Match } else { Status::Mismatch };
        self.claims.push(Claim { id: id.into(), locus: locus.to_string(), predicted: p, computed: c, status, asserted: true });
        status == Status::Match
    }

    pub fn report_only(&mut self, id: impl Into<String>, locus: &str, predicted: impl ToString, computed: impl ToString) {
        let (p, c) = (predicted.to_string(), computed.to_string());
        let status = if p == c { Status::Match } else { Status::Mismatch };
        self.claims.push(Claim { id: id.into(), locus: locus.to_string(), predicted: p, computed: c, status, asserted: false });
    }

    pub fn inconclusive(&mut self, id: impl Into<String>, locus: &str, predicted: impl ToString, computed: impl ToString) {
        self.claims.push(Claim {
            id: id.into(),
            locus: locus.to_string(),
            predicted: predicted.to_string(),
            computed: computed.to_string(),
            status: Status::Inconclusive,
            asserted: true,
        });
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.claims.extend(other.claims);
    }

    pub fn mismatches(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| c.asserted && c.status == Status::Mismatch).collect()
    }

    pub fn inconclusives(&self) -> Vec<&Claim> {
        self.claims.iter().filter(|c| c.status == Status::Inconclusive).collect()
    }

    pub fn all_match(&self) -> bool {
        self.mismatches().is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let matched = self.claims.iter().filter(|c| c.status == Status::Match).count();
        writeln!(s, "# Verification report\n").ok();
        writeln!(
            s,
            "{} claims: {} match, {} mismatch ({} asserted), {} inconclusive.\n",
            self.claims.len(),
            matched,
            self.claims.iter().filter(|c| c.status == Status::Mismatch).count(),
            self.mismatches().len(),
            self.inconclusives().len()
        )
        .ok();
        writeln!(s, "| claim | locus | predicted | computed | status |").ok();
        writeln!(s, "|---|---|---|---|---|").ok();
        for c in &self.claims {
            let status = match (c.status, c.asserted) {
                (Status::Match, _) => "match",
                (Status::Mismatch, true) => "MISMATCH",
                (Status::Mismatch, false) => "reported",
                (Status::Inconclusive, _) => "inconclusive",
            };
            writeln!(s, "| {} | {} | {} | {} | {} |", c.id, c.locus, c.predicted, c.computed, status).ok();
        }
        s
    }
}
