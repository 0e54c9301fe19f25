//! CSV emission: header row, comma separation, LF endings, integers unquoted,
//! polynomials as space-separated ascending coefficients, and a final
//! `#`-prefixed JSON line carrying the toolkit version and the effective
//! configuration, so every artifact records how to regenerate itself.

use ordinarium::nf::IntPoly;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

pub struct Csv {
    buf: String,
    columns: usize,
}

impl Csv {
    pub fn new(header: &[&str]) -> Self {
        let mut buf = String::new();
        buf.push_str(&header.join(","));
        buf.push('\n');
        Csv {
            buf,
            columns: header.len(),
        }
    }

    pub fn row(&mut self, cells: &[String]) {
        debug_assert_eq!(cells.len(), self.columns);
        self.buf.push_str(&cells.join(","));
        self.buf.push('\n');
    }

    /// Finish with the provenance footer and return the bytes.
    pub fn finish(mut self, config: &serde_json::Value) -> String {
        let footer = serde_json::json!({
            "version": env!("CARGO_PKG_VERSION"),
            "config": config,
        });
        let _ = writeln!(self.buf, "# {}", footer);
        self.buf
    }
}

pub fn write_output(path: Option<&Path>, contents: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
        }
    }
}

pub fn poly_cell(p: &IntPoly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    p.coeffs()
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn opt_cell<T: std::fmt::Display>(v: &Option<T>) -> String {
    match v {
        Some(x) => x.to_string(),
        None => String::new(),
    }
}
