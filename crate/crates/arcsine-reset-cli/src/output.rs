//! Output plumbing: the stdout-or-file sink, fixed-precision float text, and
//! the CSV/JSON emitters shared by every command.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use serde::Serialize;

use crate::args::Format;
use crate::error::Result;

/// Floats are printed with 17 significant digits so the decimal text parses
/// back to the exact binary value; downstream tooling can diff outputs
/// byte-for-byte.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Resolved output options for one invocation.
pub struct OutputOpts {
    pub format: Format,
    pub out: Option<PathBuf>,
}

impl OutputOpts {
    pub fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            None => Box::new(BufWriter::new(io::stdout())),
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        })
    }

    /// Emit one tabular result: CSV with a fixed header, or the structured
    /// JSON payload. `comment` lines (without the leading `#`) are echoed
    /// above the CSV header only; JSON carries the same facts in its fields.
    pub fn emit_table<T: Serialize>(
        &self,
        comment: &[String],
        header: &[&str],
        rows: &[Vec<String>],
        payload: &T,
    ) -> Result<()> {
        let mut w = self.writer()?;
        match self.format {
            Format::Csv => {
                for line in comment {
                    writeln!(w, "# {line}")?;
                }
                writeln!(w, "{}", header.join(","))?;
                for row in rows {
                    writeln!(w, "{}", row.join(","))?;
                }
            }
            Format::Json => {
                serde_json::to_writer_pretty(&mut w, payload).map_err(io::Error::from)?;
                writeln!(w)?;
            }
        }
        w.flush()?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_2_PI;

    #[test]
    fn float_text_round_trips_exactly() {
        for &x in &[
            0.5,
            0.1,
            1.0 / 3.0,
            FRAC_2_PI,
            1e-300,
            -2.5e17,
            f64::MIN_POSITIVE,
        ] {
            let text = fmt_float(x);
            assert_eq!(text.parse::<f64>().unwrap(), x, "text {text}");
        }
        assert_eq!(fmt_float(0.5), "5.0000000000000000e-1");
    }

    #[test]
    fn csv_layout_is_stable() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("table.csv");
        let opts = OutputOpts {
            format: Format::Csv,
            out: Some(path.clone()),
        };
        let rows = vec![
            vec!["0".to_string(), fmt_float(0.5)],
            vec!["1".to_string(), fmt_float(1.0)],
        ];
        opts.emit_table(&["n=2".to_string()], &["index", "value"], &rows, &())
            .unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(
            text,
            "# n=2\nindex,value\n0,5.0000000000000000e-1\n1,1.0000000000000000e0\n"
        );
    }

    #[test]
    fn json_payload_is_pretty_printed_with_trailing_newline() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out.json");
        let opts = OutputOpts {
            format: Format::Json,
            out: Some(path.clone()),
        };
        opts.emit_table(&[], &[], &[], &serde_json::json!({"a": 1}))
            .unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(text, "{\n  \"a\": 1\n}\n");
    }
}
