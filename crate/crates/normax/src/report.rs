//! CSV assembly and number formatting shared by the binary and the
//! examples.
//!
//! Numbers print either in shortest round-trip form (the default) or with
//! a fixed number of decimals; both choices are fixed points of a
//! parse-then-reformat cycle, so emitted CSV re-emits byte-identically.

use crate::error::{Error, Result};
use crate::verify::BoundCertificate;
use std::io::Write;

/// Where and how to write a table.
#[derive(Debug, Clone)]
pub struct OutputSpec {
    /// `None` writes to standard output.
    pub destination: Option<std::path::PathBuf>,
    /// Decimal places; `None` is shortest round-trip (full precision).
    pub decimals: Option<usize>,
    pub delimiter: char,
}

impl Default for OutputSpec {
    fn default() -> Self {
        Self {
            destination: None,
            decimals: None,
            delimiter: ',',
        }
    }
}

impl OutputSpec {
    /// Parse the `--digits` flag: 5..=16 are decimal places, 17 means
    /// shortest round-trip.
    pub fn decimals_from_flag(digits: u32) -> Result<Option<usize>> {
        match digits {
            17 => Ok(None),
            5..=16 => Ok(Some(digits as usize)),
            other => Err(Error::Domain(format!(
                "digits must lie in [5, 17], got {other}"
            ))),
        }
    }

    pub fn format(&self, v: f64) -> String {
        format_value(v, self.decimals)
    }
}

/// One formatted number.
pub fn format_value(v: f64, decimals: Option<usize>) -> String {
    match decimals {
        None => format!("{v}"),
        Some(d) => format!("{v:.d$}"),
    }
}

/// A header plus string rows, ready to write.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Self {
            header,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Serialize with the given delimiter, LF line endings, UTF-8.
    pub fn to_csv(&self, delimiter: char) -> String {
        let mut out = String::new();
        let write_line = |fields: &[String], out: &mut String| {
            for (i, f) in fields.iter().enumerate() {
                if i > 0 {
                    out.push(delimiter);
                }
                out.push_str(f);
            }
            out.push('\n');
        };
        write_line(&self.header, &mut out);
        for row in &self.rows {
            write_line(row, &mut out);
        }
        out
    }

    /// Write to the spec's destination.
    pub fn emit(&self, spec: &OutputSpec) -> std::io::Result<()> {
        let csv = self.to_csv(spec.delimiter);
        match &spec.destination {
            None => {
                let stdout = std::io::stdout();
                let mut lock = stdout.lock();
                lock.write_all(csv.as_bytes())
            }
            Some(path) => std::fs::write(path, csv),
        }
    }
}

/// The standard certificate table: name, argument, lhs, rhs, margin, pass.
pub fn certificate_table(certs: &[BoundCertificate], spec: &OutputSpec) -> Table {
    let mut t = Table::new(
        ["name", "argument", "lhs", "rhs", "margin", "pass"]
            .iter()
            .map(|s| s.to_string())
            .collect(),
    );
    for c in certs {
        t.push_row(vec![
            c.name.clone(),
            spec.format(c.argument),
            spec.format(c.lhs),
            spec.format(c.rhs),
            spec.format(c.margin()),
            c.pass.to_string(),
        ]);
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shortest_round_trip_is_a_fixed_point() {
        for &v in &[0.1, 1.0 / 3.0, 1e100, 1.28155, -2.5e-8, 0.0] {
            let s = format_value(v, None);
            let back: f64 = s.parse().unwrap();
            assert_eq!(format_value(back, None), s, "v={v}");
        }
    }

    #[test]
    fn fixed_decimals_is_a_fixed_point() {
        for &v in &[1.2815515655446004, 0.0420, 11.46402] {
            let s = format_value(v, Some(5));
            let back: f64 = s.parse().unwrap();
            assert_eq!(format_value(back, Some(5)), s, "v={v}");
        }
    }

    #[test]
    fn five_decimals_reproduce_published_style() {
        assert_eq!(format_value(1.2815515655446004, Some(5)), "1.28155");
        assert_eq!(format_value(11.464020287867132, Some(5)), "11.46402");
    }

    #[test]
    fn digits_flag_mapping() {
        assert_eq!(OutputSpec::decimals_from_flag(17).unwrap(), None);
        assert_eq!(OutputSpec::decimals_from_flag(5).unwrap(), Some(5));
        assert!(OutputSpec::decimals_from_flag(4).is_err());
        assert!(OutputSpec::decimals_from_flag(18).is_err());
    }

    #[test]
    fn csv_layout() {
        let mut t = Table::new(vec!["a".into(), "b".into()]);
        t.push_row(vec!["1".into(), "2".into()]);
        t.push_row(vec!["x".into(), "y".into()]);
        assert_eq!(t.to_csv(','), "a,b\n1,2\nx,y\n");
        assert_eq!(t.to_csv(';'), "a;b\n1;2\nx;y\n");
    }
}
