//! Machine-readable output records and their plain/CSV/JSON renderings.

use std::collections::BTreeMap;
use std::io::{self, Write};

use serde::{Deserialize, Serialize};
use spherical_parking::arbor::TreeRepr;
use spherical_parking::crosscheck::{Quantity, VerificationReport, Witness};
use spherical_parking::identity::decimal;
use spherical_parking::{Distribution, ExactInt};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(i64),
    Text(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Payload {
    Count {
        #[serde(with = "decimal")]
        value: ExactInt,
    },
    Distribution {
        value: Distribution,
    },
    Sequence {
        entries: Vec<u32>,
    },
    Tree {
        #[serde(flatten)]
        tree: TreeRepr,
    },
    Report {
        value: Box<VerificationReport>,
    },
}

/// One JSON emission. Enumerations emit one record per object.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub schema_version: String,
    pub command: String,
    pub parameters: BTreeMap<String, ParamValue>,
    pub result: Payload,
}

impl OutputRecord {
    pub fn new(command: &str, parameters: BTreeMap<String, ParamValue>, result: Payload) -> Self {
        OutputRecord {
            schema_version: SCHEMA_VERSION.to_string(),
            command: command.to_string(),
            parameters,
            result,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
}

/// Writes a stream of records in one format. CSV headers are written once,
/// before the first row.
pub struct Emitter<W: Write> {
    out: W,
    format: Format,
    header_done: bool,
}

fn csv_line(fields: &[String]) -> io::Result<String> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(fields)?;
    let bytes = w
        .into_inner()
        .map_err(|e| io::Error::other(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn quantity_text(q: &Quantity) -> String {
    q.to_string()
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, format: Format) -> Self {
        Emitter {
            out,
            format,
            header_done: false,
        }
    }

    fn header(&mut self, fields: &[String]) -> io::Result<()> {
        if !self.header_done {
            self.header_done = true;
            let line = csv_line(fields)?;
            self.out.write_all(line.as_bytes())?;
        }
        Ok(())
    }

    fn row(&mut self, fields: &[String]) -> io::Result<()> {
        let line = csv_line(fields)?;
        self.out.write_all(line.as_bytes())
    }

    pub fn emit(&mut self, record: &OutputRecord) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, record)?;
                writeln!(self.out)
            }
            Format::Plain => self.plain(&record.result),
            Format::Csv => self.csv(&record.result),
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }

    fn plain(&mut self, result: &Payload) -> io::Result<()> {
        match result {
            Payload::Count { value } => writeln!(self.out, "{value}"),
            Payload::Distribution { value } => {
                for (key, count) in value.iter() {
                    writeln!(self.out, "{key}:{count}")?;
                }
                Ok(())
            }
            Payload::Sequence { entries } => {
                let text: Vec<String> = entries.iter().map(u32::to_string).collect();
                writeln!(self.out, "{}", text.join(","))
            }
            Payload::Tree { tree } => {
                let text: Vec<String> = tree.parents.iter().map(u32::to_string).collect();
                writeln!(self.out, "{}:{}", tree.root, text.join(","))
            }
            Payload::Report { value } => self.plain_report(value),
        }
    }

    fn plain_report(&mut self, r: &VerificationReport) -> io::Result<()> {
        let params: Vec<String> = r
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(self.out, "check: {}", r.check_name)?;
        writeln!(self.out, "parameters: {}", params.join(" "))?;
        writeln!(self.out, "lhs: {} = {}", r.lhs_label, r.lhs)?;
        writeln!(self.out, "rhs: {} = {}", r.rhs_label, r.rhs)?;
        for c in &r.auxiliary {
            let v = if c.matches { "match" } else { "mismatch" };
            writeln!(
                self.out,
                "auxiliary: {}: {} vs {} ({v})",
                c.label, c.lhs, c.rhs
            )?;
        }
        for note in &r.annotations {
            writeln!(self.out, "note: {note}")?;
        }
        for w in &r.witnesses {
            writeln!(self.out, "witness: {}", witness_text(w))?;
        }
        if let Some(ms) = r.elapsed_ms {
            writeln!(self.out, "elapsed_ms: {ms}")?;
        }
        writeln!(self.out, "verdict: {}", verdict_text(r))
    }

    fn csv(&mut self, result: &Payload) -> io::Result<()> {
        match result {
            Payload::Count { value } => {
                self.header(&["count".into()])?;
                self.row(&[value.to_string()])
            }
            Payload::Distribution { value } => {
                self.header(&["key".into(), "count".into()])?;
                for (key, count) in value.iter() {
                    self.row(&[key.to_string(), count.to_string()])?;
                }
                Ok(())
            }
            Payload::Sequence { entries } => {
                let names: Vec<String> = (1..=entries.len()).map(|i| format!("a{i}")).collect();
                self.header(&names)?;
                self.row(&entries.iter().map(u32::to_string).collect::<Vec<_>>())
            }
            Payload::Tree { tree } => {
                let mut names = vec!["root".to_string()];
                names.extend((1..=tree.parents.len()).map(|i| format!("p{i}")));
                self.header(&names)?;
                let mut row = vec![tree.root.to_string()];
                row.extend(tree.parents.iter().map(u32::to_string));
                self.row(&row)
            }
            Payload::Report { value: r } => {
                self.header(&["field".into(), "value".into()])?;
                self.row(&["check".into(), r.check_name.clone()])?;
                for (k, v) in &r.parameters {
                    self.row(&[k.clone(), v.to_string()])?;
                }
                self.row(&["lhs_label".into(), r.lhs_label.clone()])?;
                self.row(&["lhs".into(), quantity_text(&r.lhs)])?;
                self.row(&["rhs_label".into(), r.rhs_label.clone()])?;
                self.row(&["rhs".into(), quantity_text(&r.rhs)])?;
                for c in &r.auxiliary {
                    let v = if c.matches { "match" } else { "mismatch" };
                    self.row(&[
                        "auxiliary".into(),
                        format!("{}: {} vs {} ({v})", c.label, c.lhs, c.rhs),
                    ])?;
                }
                for note in &r.annotations {
                    self.row(&["note".into(), note.clone()])?;
                }
                for w in &r.witnesses {
                    self.row(&["witness".into(), witness_text(w)])?;
                }
                if let Some(ms) = r.elapsed_ms {
                    self.row(&["elapsed_ms".into(), ms.to_string()])?;
                }
                self.row(&["verdict".into(), verdict_text(r).into()])
            }
        }
    }
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(t) => write!(f, "{t}"),
        }
    }
}

fn verdict_text(r: &VerificationReport) -> &'static str {
    if r.is_match() {
        "match"
    } else {
        "mismatch"
    }
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::Element { entries, only_in } => {
            let text: Vec<String> = entries.iter().map(u32::to_string).collect();
            format!("{} only in {:?}", text.join(","), only_in).to_lowercase()
        }
        Witness::Bucket { key, lhs, rhs } => format!("bucket {key}: lhs {lhs}, rhs {rhs}"),
    }
}
