//! JSON and CSV report writers.
//!
//! Both formats are byte-stable: every floating value inside records is
//! rendered as a fixed-width decimal string, records arrive already in
//! canonical order, and lines end with LF.

use std::io::{self, Write};

use serde::Serialize;

use crate::config::SweepConfig;
use crate::record::VerificationRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

pub fn summarize(records: &[VerificationRecord]) -> Summary {
    use crate::record::Verdict::*;
    let mut summary = Summary {
        pass: 0,
        fail: 0,
        skipped: 0,
    };
    for record in records {
        match record.verdict {
            Pass => summary.pass += 1,
            Fail => summary.fail += 1,
            SkippedDegenerate | SkippedGuard => summary.skipped += 1,
        }
    }
    summary
}

#[derive(Serialize)]
struct Report<'a> {
    config: &'a SweepConfig,
    records: &'a [VerificationRecord],
    summary: Summary,
}

pub fn write_json<W: Write>(
    mut out: W,
    config: &SweepConfig,
    records: &[VerificationRecord],
    summary: Summary,
) -> io::Result<()> {
    let report = Report {
        config,
        records,
        summary,
    };
    serde_json::to_writer_pretty(&mut out, &report)?;
    out.write_all(b"\n")
}

pub const CSV_HEADER: &str =
    "p,q,r,n,j,check,closed_value,oracle_value,abs_error,rel_error,verdict,skip_reason";

pub fn write_csv<W: Write>(mut out: W, records: &[VerificationRecord]) -> io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for record in records {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            opt(record.p),
            opt(record.q),
            opt(record.r),
            record.n,
            opt(record.j),
            record.check,
            record.closed_value.as_deref().unwrap_or(""),
            record.oracle_value.as_deref().unwrap_or(""),
            record.abs_error.map(crate::record::sig17).unwrap_or_default(),
            record.rel_error.map(crate::record::sig17).unwrap_or_default(),
            record.verdict.as_str(),
            record.skip_reason.as_deref().unwrap_or(""),
        )?;
    }
    Ok(())
}

fn opt<T: std::fmt::Display>(value: Option<T>) -> String {
    value.map(|v| v.to_string()).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::record::{Value, Verdict};
    use tricirc_core::params::RecurrenceParams;

    fn sample() -> Vec<VerificationRecord> {
        let params = RecurrenceParams::new(1, 1, 1);
        vec![
            VerificationRecord::comparison(
                "norm_g",
                Some(&params),
                2,
                None,
                Value::Real(1.0),
                Value::Real(1.0),
                1e-8,
            ),
            VerificationRecord::skipped_degenerate(
                "eig_s",
                Some(&RecurrenceParams::new(1, 1, 0)),
                1,
                Some(0),
                "ZeroRCoefficient",
                None,
            ),
        ]
    }

    #[test]
    fn summary_counts() {
        let summary = summarize(&sample());
        assert_eq!(
            summary,
            Summary {
                pass: 1,
                fail: 0,
                skipped: 1
            }
        );
    }

    #[test]
    fn csv_has_lf_and_header() {
        let mut buf = Vec::new();
        write_csv(&mut buf, &sample()).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(CSV_HEADER));
        assert!(!text.contains('\r'));
        assert_eq!(text.lines().count(), 3);
        let line = text.lines().nth(2).unwrap();
        assert_eq!(line, "1,1,0,1,0,eig_s,,,,,skipped_degenerate,ZeroRCoefficient");
    }

    #[test]
    fn json_round_trips() {
        let cfg = SweepConfig::default();
        let records = sample();
        let summary = summarize(&records);
        let mut buf = Vec::new();
        write_json(&mut buf, &cfg, &records, summary).unwrap();
        let parsed: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(parsed["summary"]["pass"], 1);
        assert_eq!(parsed["records"].as_array().unwrap().len(), 2);
        assert_eq!(parsed["config"]["n_max"], 12);
        assert_eq!(
            parsed["records"][0]["closed_value"],
            "1.0000000000000000e0"
        );
        assert!(parsed["records"][0]["skip_reason"].is_null());
    }

    #[test]
    fn verdict_serialization_matches_as_str() {
        for v in [
            Verdict::Pass,
            Verdict::Fail,
            Verdict::SkippedDegenerate,
            Verdict::SkippedGuard,
        ] {
            let json = serde_json::to_string(&v).unwrap();
            assert_eq!(json, format!("\"{}\"", v.as_str()));
        }
    }
}
