//! JSON certificate documents. All hyperplane indices in a document are
//! 1-based positions in the arrangement file (or catalog listing).

use serde::{Deserialize, Serialize};

use crate::arrangement::{Arrangement, ExponentVector};
use crate::error::{Error, Result};
use crate::matkernel::{
    verify_mat2_sequence, verify_mat_partition, Mat2Certificate, Mat2Step, MatCertificate, StepReport, Verification,
};
use crate::search::{Certificate, SearchOutcome, SearchStats, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Mat,
    Mat2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotEntry {
    pub index: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepEntry {
    pub s: usize,
    pub slotted: Vec<SlotEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateDoc {
    pub kind: Kind,
    /// File path or catalog name of the arrangement.
    pub arrangement: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<Vec<Vec<usize>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub steps: Option<Vec<StepEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exponents: Option<ExponentVector>,
    #[serde(default)]
    pub reports: Vec<StepReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<SearchStats>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub restriction_in_force: Option<bool>,
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn zero_based(v: &[usize], len: usize) -> Result<Vec<usize>> {
    v.iter()
        .map(|&i| {
            if i == 0 || i > len {
                Err(Error::IndexOutOfRange { index: i, len })
            } else {
                Ok(i - 1)
            }
        })
        .collect()
}

fn report_one_based(r: &StepReport) -> StepReport {
    StepReport { members: one_based(&r.members), blocking: r.blocking.map(|b| b + 1), ..r.clone() }
}

impl CertificateDoc {
    pub fn from_mat(c: &MatCertificate, source: &str) -> Self {
        CertificateDoc {
            kind: Kind::Mat,
            arrangement: source.to_string(),
            blocks: Some(c.blocks.iter().map(|b| one_based(b)).collect()),
            steps: None,
            exponents: Some(c.exponents.clone()),
            reports: c.reports.iter().map(report_one_based).collect(),
            verdict: None,
            stats: None,
            restriction_in_force: None,
        }
    }

    pub fn from_mat2(c: &Mat2Certificate, source: &str) -> Self {
        let steps = c
            .steps
            .iter()
            .map(|s| StepEntry {
                s: s.s,
                slotted: s.slotted.iter().map(|&(i, j)| SlotEntry { index: i + 1, slot: j }).collect(),
            })
            .collect();
        CertificateDoc {
            kind: Kind::Mat2,
            arrangement: source.to_string(),
            blocks: None,
            steps: Some(steps),
            exponents: Some(c.exponents()),
            reports: c.reports.iter().map(report_one_based).collect(),
            verdict: None,
            stats: None,
            restriction_in_force: None,
        }
    }

    pub fn from_certificate(c: &Certificate, source: &str) -> Self {
        match c {
            Certificate::Mat(c) => Self::from_mat(c, source),
            Certificate::Mat2(c) => Self::from_mat2(c, source),
        }
    }

    /// Outcome document: the certificate (if any) plus verdict and stats.
    pub fn from_outcome(o: &SearchOutcome, kind: Kind, source: &str) -> Self {
        let mut doc = match &o.certificate {
            Some(c) => Self::from_certificate(c, source),
            None => CertificateDoc {
                kind,
                arrangement: source.to_string(),
                blocks: None,
                steps: None,
                exponents: None,
                reports: vec![],
                verdict: None,
                stats: None,
                restriction_in_force: None,
            },
        };
        doc.verdict = Some(o.verdict);
        doc.stats = Some(o.stats.clone());
        doc.restriction_in_force = Some(o.restriction_in_force);
        doc
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
    }

    /// 0-based blocks of a `mat` document.
    pub fn mat_blocks(&self, len: usize) -> Result<Vec<Vec<usize>>> {
        let blocks = self.blocks.as_ref().ok_or_else(|| Error::Certificate("mat document without blocks".into()))?;
        blocks.iter().map(|b| zero_based(b, len)).collect()
    }

    /// 0-based steps of a `mat2` document.
    pub fn mat2_steps(&self, len: usize) -> Result<Vec<Mat2Step>> {
        let steps = self.steps.as_ref().ok_or_else(|| Error::Certificate("mat2 document without steps".into()))?;
        steps
            .iter()
            .map(|st| {
                let slotted = st
                    .slotted
                    .iter()
                    .map(|e| Ok((zero_based(&[e.index], len)?[0], e.slot)))
                    .collect::<Result<_>>()?;
                Ok(Mat2Step { s: st.s, slotted })
            })
            .collect()
    }

    /// Re-verifies the document against `a`. Recorded reports and
    /// exponents are ignored on input; a certified result must agree with
    /// the recorded exponents when present.
    pub fn verify(&self, a: &Arrangement) -> Result<Verification<Certificate>> {
        let v = match self.kind {
            Kind::Mat => verify_mat_partition(a, &self.mat_blocks(a.len())?)?.map(Certificate::Mat),
            Kind::Mat2 => verify_mat2_sequence(a, &self.mat2_steps(a.len())?)?.map(Certificate::Mat2),
        };
        if let (Verification::Certified(c), Some(claimed)) = (&v, &self.exponents) {
            if &c.exponents() != claimed {
                return Err(Error::Certificate(format!(
                    "document claims exponents {claimed} but verification yields {}",
                    c.exponents()
                )));
            }
        }
        Ok(v)
    }
}

/// Parses the compact block notation `1,2,3|4,5|6` (1-based) into 0-based
/// blocks. Surrounding parentheses are accepted; an empty string means no
/// blocks.
pub fn parse_blocks(text: &str, len: usize) -> Result<Vec<Vec<usize>>> {
    let t = text.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if t.is_empty() {
        return Ok(vec![]);
    }
    t.split('|')
        .map(|b| {
            let idx = b
                .split(',')
                .map(|x| {
                    x.trim().parse::<usize>().map_err(|e| Error::Parse { line: 1, msg: format!("bad index {x:?}: {e}") })
                })
                .collect::<Result<Vec<usize>>>()?;
            zero_based(&idx, len)
        })
        .collect()
}

/// Formats 0-based blocks in the compact 1-based notation.
pub fn format_blocks(blocks: &[Vec<usize>]) -> String {
    let inner: Vec<String> =
        blocks.iter().map(|b| b.iter().map(|i| (i + 1).to_string()).collect::<Vec<_>>().join(",")).collect();
    format!("({})", inner.join("|"))
}
