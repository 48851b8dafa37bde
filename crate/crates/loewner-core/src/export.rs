//! Plot-ready CSV exports. Values are written with 17 significant digits so
//! files diff bit-stably and round-trip exactly through f64.

use std::io::{self, Write};

use crate::trace::Trace;

/// Format an f64 with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Trace CSV with header `t,re,im`.
pub fn write_trace_csv<W: Write>(trace: &Trace, out: &mut W) -> io::Result<()> {
    writeln!(out, "t,re,im")?;
    for (t, z) in trace.times.iter().zip(&trace.points) {
        writeln!(out, "{},{},{}", fmt_f64(*t), fmt_f64(z.re), fmt_f64(z.im))?;
    }
    Ok(())
}

/// Ensemble endpoint CSV with header `seed,x_star`.
pub fn write_endpoints_csv<W: Write>(rows: &[(u64, f64)], out: &mut W) -> io::Result<()> {
    writeln!(out, "seed,x_star")?;
    for (seed, x) in rows {
        writeln!(out, "{},{}", seed, fmt_f64(*x))?;
    }
    Ok(())
}
