// SPDX-License-Identifier: Apache-2.0

//! CSV output for sweep results.
//!
//! Comma-separated UTF-8 with LF line endings. Numbers are written as
//! `{:.16e}` (17 significant digits, exact f64 round trip); an infinite
//! figure of merit is written `inf`. Failed grid points keep their
//! coordinates, leave every response field empty and name the error kind in
//! the trailing `error` column.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::num::Real;
use crate::sweep::{Row, SweepResult};

pub const CSV_COLUMNS: [&str; 14] = [
    "omega_c",
    "delta_p",
    "re_alpha_e",
    "im_alpha_e",
    "re_alpha_m",
    "im_alpha_m",
    "re_eps",
    "im_eps",
    "re_mu",
    "im_mu",
    "re_n",
    "im_n",
    "fom",
    "error",
];

pub(crate) fn fmt_num<T: Real>(x: T) -> String {
    if x.is_infinite() {
        if x > T::zero() {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{:.16e}", x)
    }
}

pub fn write_csv_to<T: Real, W: Write>(result: &SweepResult<T>, mut out: W) -> std::io::Result<()> {
    writeln!(out, "{}", CSV_COLUMNS.join(","))?;
    for row in result.rows() {
        match row {
            Row::Point(p) => {
                let fields = [
                    p.omega_c,
                    p.delta_p,
                    p.alpha_e.re,
                    p.alpha_e.im,
                    p.alpha_m.re,
                    p.alpha_m.im,
                    p.eps_r.re,
                    p.eps_r.im,
                    p.mu_r.re,
                    p.mu_r.im,
                    p.n.re,
                    p.n.im,
                    p.fom,
                ];
                let line: Vec<String> = fields.iter().map(|&x| fmt_num(x)).collect();
                writeln!(out, "{},", line.join(","))?;
            }
            Row::Failure(f) => {
                writeln!(
                    out,
                    "{},{},,,,,,,,,,,,{}",
                    fmt_num(f.omega_c),
                    fmt_num(f.delta_p),
                    f.kind
                )?;
            }
        }
    }
    Ok(())
}

pub fn to_csv_string<T: Real>(result: &SweepResult<T>) -> String {
    let mut buf = Vec::new();
    write_csv_to(result, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("csv output is ASCII")
}

pub fn write_csv<T: Real>(result: &SweepResult<T>, path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|e| Error::io(path, e))?;
    let mut w = BufWriter::new(file);
    write_csv_to(result, &mut w)
        .and_then(|_| w.flush())
        .map_err(|e| Error::io(path, e))
}
