//! Ordered writers. JSON reports are an array with one record per line;
//! CSV reports carry a header row.

use std::io::Write;

use crate::error::CliError;
use crate::rows::Record;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl Format {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        match text.trim().to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::usage(format!("unknown format {other:?} (json or csv)"))),
        }
    }
}

/// Writes records as they arrive; the caller supplies them in final order.
pub struct Sink<W: Write> {
    format: Format,
    out: Option<W>,
    csv: Option<csv::Writer<W>>,
    count: usize,
}

impl<W: Write> Sink<W> {
    pub fn new(format: Format, out: W) -> Self {
        match format {
            Format::Json => Sink { format, out: Some(out), csv: None, count: 0 },
            Format::Csv => Sink { format, out: None, csv: Some(csv::Writer::from_writer(out)), count: 0 },
        }
    }

    pub fn write<R: Record>(&mut self, record: &R) -> Result<(), CliError> {
        match self.format {
            Format::Json => {
                let out = self.out.as_mut().expect("json sink owns its writer");
                out.write_all(if self.count == 0 { b"[\n" } else { b",\n" })?;
                serde_json::to_writer(&mut *out, record)?;
            }
            Format::Csv => {
                let w = self.csv.as_mut().expect("csv sink owns its writer");
                if self.count == 0 {
                    w.write_record(R::columns())?;
                }
                w.write_record(record.fields())?;
            }
        }
        self.count += 1;
        Ok(())
    }

    /// Closes the array or flushes the CSV writer. An empty JSON report is
    /// `[]`; an empty CSV report is header-less.
    pub fn finish(mut self) -> Result<W, CliError> {
        match self.format {
            Format::Json => {
                let mut out = self.out.take().expect("json sink owns its writer");
                out.write_all(if self.count == 0 { b"[]\n" } else { b"\n]\n" })?;
                out.flush()?;
                Ok(out)
            }
            Format::Csv => {
                let w = self.csv.take().expect("csv sink owns its writer");
                w.into_inner().map_err(|e| CliError::Io(e.into_error()))
            }
        }
    }
}

/// All records into a string, in order.
pub fn render<R: Record>(format: Format, records: &[R]) -> Result<String, CliError> {
    let mut sink = Sink::new(format, Vec::new());
    for r in records {
        sink.write(r)?;
    }
    let bytes = sink.finish()?;
    Ok(String::from_utf8(bytes).expect("writers emit UTF-8"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rows::{Params, Row};
    use loglambert_core::report::IdentityId;

    #[test]
    fn json_array_is_valid() {
        let rows = vec![
            Row::failed(IdentityId::Wigert, Params::default(), "a".into()),
            Row::failed(IdentityId::KernelSum, Params::default(), "b".into()),
        ];
        let text = render(Format::Json, &rows).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.as_array().unwrap().len(), 2);
        assert_eq!(render::<Row>(Format::Json, &[]).unwrap(), "[]\n");
    }

    #[test]
    fn csv_has_header_and_rows() {
        let rows = vec![Row::failed(IdentityId::Wigert, Params::default(), "x, y".into())];
        let text = render(Format::Csv, &rows).unwrap();
        let mut lines = text.lines();
        assert!(lines.next().unwrap().starts_with("identity,paper_ref,params"));
        assert!(lines.next().unwrap().ends_with("\"x, y\""));
    }
}
