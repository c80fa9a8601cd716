//! CSV and JSON output for verification runs.

use std::io::Write;

use serde::Serialize;

use super::{TheoremReport, VerificationRecord};

/// Written by the serializer from [`CsvRow`]'s field names.
pub const CSV_HEADER: &str = "graph6,n,d,witnesses,lambda2,threshold_cmp,iso_extremal";

/// `x` with 10 significant digits; scientific notation outside
/// `1e-4 <= |x| < 1e10`.
pub fn format_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { "0.000000000".to_string() } else { x.to_string() };
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..10).contains(&mag) {
        return format!("{x:.9e}");
    }
    let decimals = (9 - mag).max(0) as usize;
    let s = format!("{x:.decimals$}");
    // rounding can carry into a new digit (9.9999999999 -> 10.000000000)
    let significant = s.trim_start_matches(['-', '0', '.']).chars().filter(|c| c.is_ascii_digit()).count();
    if significant > 10 && decimals > 0 {
        format!("{x:.prec$}", prec = decimals - 1)
    } else {
        s
    }
}

/// Eigenvalues within solver noise (1e-10) of zero are written as zero.
pub fn format_eigenvalue(x: f64) -> String {
    format_sig(if x.abs() < 1e-10 { 0.0 } else { x })
}

/// Serializes an `f64` through [`format_sig`].
pub(crate) fn serialize_sig<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    let rounded: f64 = format_sig(*x).parse().unwrap_or(*x);
    s.serialize_f64(rounded)
}

#[derive(Serialize)]
struct CsvRow<'a> {
    graph6: &'a str,
    n: usize,
    d: usize,
    witnesses: String,
    lambda2: String,
    threshold_cmp: &'static str,
    iso_extremal: bool,
}

pub fn write_csv<W: Write>(records: &[VerificationRecord], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        let witnesses = r
            .witnesses
            .iter()
            .map(|w| format!("{}:{}", w.vertex, w.c))
            .collect::<Vec<_>>()
            .join(";");
        w.serialize(CsvRow {
            graph6: &r.graph6,
            n: r.n,
            d: r.d,
            witnesses,
            lambda2: format_eigenvalue(r.lambda2),
            threshold_cmp: r.threshold_cmp.as_str(),
            iso_extremal: r.iso_extremal,
        })?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_summary_json<W: Write>(report: &TheoremReport, mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, report)?;
    writeln!(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(2.7784), "2.778400000");
        assert_eq!(format_sig(-1.0), "-1.000000000");
        assert_eq!(format_sig(0.0), "0.000000000");
        assert_eq!(format_sig(12.5), "12.50000000");
        assert_eq!(format_sig(9.99999999999), "10.00000000");
        assert_eq!(format_sig(0.00125), "0.001250000000");
        assert_eq!(format_sig(1e-12), "1.000000000e-12");
    }
}
