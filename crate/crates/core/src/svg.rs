// SPDX-License-Identifier: Apache-2.0

//! Static SVG line charts of a swept quantity against Δ_p/γ.
//!
//! One `<polyline>` per contiguous run of successful points for each Ω_c
//! (a run of length one also gets a circle marker). The figure of merit is
//! clipped at [`FOM_Y_CAP`]; when clipping happens a dashed cap line and a
//! note are drawn.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::num::Real;
use crate::response::ResponsePoint;
use crate::sweep::{Row, SweepResult};

/// Contiguous run of plotted (x, y) values.
type Segment = Vec<(f64, f64)>;

pub const FOM_Y_CAP: f64 = 1000.0;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 160.0;
const MARGIN_TOP: f64 = 40.0;
const MARGIN_BOTTOM: f64 = 60.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    ReEps,
    ImEps,
    ReMu,
    ImMu,
    ReN,
    ImN,
    Fom,
}

impl Quantity {
    pub const ALL: [Quantity; 7] = [
        Quantity::ReEps,
        Quantity::ImEps,
        Quantity::ReMu,
        Quantity::ImMu,
        Quantity::ReN,
        Quantity::ImN,
        Quantity::Fom,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::ReEps => "re_eps",
            Quantity::ImEps => "im_eps",
            Quantity::ReMu => "re_mu",
            Quantity::ImMu => "im_mu",
            Quantity::ReN => "re_n",
            Quantity::ImN => "im_n",
            Quantity::Fom => "fom",
        }
    }

    fn axis_label(self) -> &'static str {
        match self {
            Quantity::ReEps => "Re ε_r (dimensionless)",
            Quantity::ImEps => "Im ε_r (dimensionless)",
            Quantity::ReMu => "Re μ_r (dimensionless)",
            Quantity::ImMu => "Im μ_r (dimensionless)",
            Quantity::ReN => "Re n (dimensionless)",
            Quantity::ImN => "Im n (dimensionless)",
            Quantity::Fom => "FOM |Re n / Im n| (dimensionless)",
        }
    }

    /// Raw value, or `None` when not a finite number (the FOM may be `+inf`).
    pub fn value<T: Real>(self, p: &ResponsePoint<T>) -> Option<f64> {
        let v = match self {
            Quantity::ReEps => p.eps_r.re,
            Quantity::ImEps => p.eps_r.im,
            Quantity::ReMu => p.mu_r.re,
            Quantity::ImMu => p.mu_r.im,
            Quantity::ReN => p.n.re,
            Quantity::ImN => p.n.im,
            Quantity::Fom => p.fom,
        }
        .as_f64();
        match self {
            Quantity::Fom if v.is_infinite() && v > 0.0 => Some(v),
            _ if v.is_finite() => Some(v),
            _ => None,
        }
    }
}

impl FromStr for Quantity {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Quantity::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown quantity `{s}`"))
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

/// Roughly `target` round-valued ticks (1, 2, 5 × 10^k) spanning [lo, hi].
fn ticks(lo: f64, hi: f64, target: usize) -> Vec<f64> {
    let raw = (hi - lo) / target as f64;
    let mag = 10f64.powf(raw.log10().floor());
    let step = [1.0, 2.0, 5.0, 10.0]
        .iter()
        .map(|m| m * mag)
        .find(|s| *s >= raw)
        .unwrap_or(10.0 * mag);
    let first = (lo / step).ceil() as i64;
    let last = (hi / step).floor() as i64;
    (first..=last).map(|i| i as f64 * step).collect()
}

fn fmt_tick(v: f64) -> String {
    if v == 0.0 {
        "0".into()
    } else if v.abs() >= 1e4 || v.abs() < 1e-2 {
        format!("{v:.1e}")
    } else {
        let s = format!("{v:.2}");
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    }
}

fn padded(lo: f64, hi: f64) -> (f64, f64) {
    if hi > lo {
        let pad = 0.05 * (hi - lo);
        (lo - pad, hi + pad)
    } else {
        let pad = if lo == 0.0 { 1.0 } else { 0.1 * lo.abs() };
        (lo - pad, hi + pad)
    }
}

pub fn render_svg<T: Real>(result: &SweepResult<T>, quantity: Quantity) -> Result<String> {
    let clipped = |v: f64| -> (f64, bool) {
        if quantity == Quantity::Fom && v > FOM_Y_CAP {
            (FOM_Y_CAP, true)
        } else {
            (v, false)
        }
    };

    // Series per Ω_c: segments of (x, y) broken at failures or missing values.
    let mut any_clipped = false;
    let mut series: Vec<(f64, Vec<Segment>)> = Vec::new();
    for row in result.rows() {
        let w = row.key().0.as_f64();
        if series.last().map(|s| s.0) != Some(w) {
            series.push((w, vec![Vec::new()]));
        }
        let segs = &mut series.last_mut().expect("pushed above").1;
        let value = match row {
            Row::Point(p) => quantity.value(p).map(|v| (p.delta_p.as_f64(), v)),
            Row::Failure(_) => None,
        };
        match value {
            Some((x, v)) => {
                let (y, c) = clipped(v);
                any_clipped |= c;
                segs.last_mut().expect("non-empty").push((x, y));
            }
            None => {
                if !segs.last().expect("non-empty").is_empty() {
                    segs.push(Vec::new());
                }
            }
        }
    }
    for (_, segs) in series.iter_mut() {
        segs.retain(|s| !s.is_empty());
    }
    let all: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|(_, segs)| segs.iter().flatten().copied())
        .collect();
    if all.is_empty() {
        return Err(Error::EmptySelection(quantity.name().into()));
    }

    let fold = |f: fn(&(f64, f64)) -> f64| {
        all.iter()
            .map(f)
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                (lo.min(v), hi.max(v))
            })
    };
    let (x_lo, x_hi) = fold(|p| p.0);
    let (y_lo, y_hi) = fold(|p| p.1);
    let (x0, x1) = if x_hi > x_lo {
        (x_lo, x_hi)
    } else {
        padded(x_lo, x_hi)
    };
    let (y0, y1) = padded(y_lo, y_hi);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let sx = |x: f64| MARGIN_LEFT + (x - x0) / (x1 - x0) * plot_w;
    let sy = |y: f64| MARGIN_TOP + (y1 - y) / (y1 - y0) * plot_h;

    let mut s = String::new();
    let w = &mut s;
    // fmt::Write into a String cannot fail.
    let _ = writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(
        w,
        r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#
    );
    let _ = writeln!(
        w,
        r#"<rect x="{MARGIN_LEFT}" y="{MARGIN_TOP}" width="{plot_w}" height="{plot_h}" fill="none" stroke="black"/>"#
    );

    for t in ticks(x0, x1, 8) {
        let x = sx(t);
        let _ = writeln!(
            w,
            r#"<line x1="{x:.2}" y1="{:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/><text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            MARGIN_TOP + plot_h,
            MARGIN_TOP + plot_h + 5.0,
            MARGIN_TOP + plot_h + 18.0,
            fmt_tick(t)
        );
    }
    for t in ticks(y0, y1, 6) {
        let y = sy(t);
        let _ = writeln!(
            w,
            r#"<line x1="{:.2}" y1="{y:.2}" x2="{MARGIN_LEFT}" y2="{y:.2}" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            MARGIN_LEFT - 5.0,
            MARGIN_LEFT - 8.0,
            y + 4.0,
            fmt_tick(t)
        );
    }
    if y0 < 0.0 && y1 > 0.0 {
        let _ = writeln!(
            w,
            r##"<line id="zero-line" x1="{MARGIN_LEFT}" y1="{:.4}" x2="{:.2}" y2="{:.4}" stroke="#888888" stroke-dasharray="2,3"/>"##,
            sy(0.0),
            MARGIN_LEFT + plot_w,
            sy(0.0)
        );
    }
    if any_clipped {
        let y = sy(FOM_Y_CAP);
        let _ = writeln!(
            w,
            r##"<line id="cap-line" x1="{MARGIN_LEFT}" y1="{y:.2}" x2="{:.2}" y2="{y:.2}" stroke="#444444" stroke-dasharray="6,4"/>"##,
            MARGIN_LEFT + plot_w
        );
        let _ = writeln!(
            w,
            r#"<text id="cap-note" x="{:.2}" y="{:.2}" text-anchor="end">values above {} (including ∞) clipped to cap</text>"#,
            MARGIN_LEFT + plot_w - 4.0,
            y - 4.0,
            FOM_Y_CAP
        );
    }

    let _ = writeln!(
        w,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">Δp/γ (probe detuning, units of γ)</text>"#,
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 15.0
    );
    let _ = writeln!(
        w,
        r#"<text transform="translate(20,{:.2}) rotate(-90)" text-anchor="middle">{}</text>"#,
        MARGIN_TOP + plot_h / 2.0,
        escape(quantity.axis_label())
    );

    for (k, (omega_c, segs)) in series.iter().enumerate() {
        let color = PALETTE[k % PALETTE.len()];
        let _ = writeln!(
            w,
            r#"<g class="curve" data-omega-c="{omega_c}" stroke="{color}" fill="none">"#
        );
        for seg in segs {
            let pts: Vec<String> = seg
                .iter()
                .map(|&(x, y)| format!("{:.4},{:.4}", sx(x), sy(y)))
                .collect();
            let _ = writeln!(
                w,
                r#"<polyline stroke-width="1.5" points="{}"/>"#,
                pts.join(" ")
            );
            if seg.len() == 1 {
                let _ = writeln!(
                    w,
                    r#"<circle cx="{:.4}" cy="{:.4}" r="3" fill="{color}"/>"#,
                    sx(seg[0].0),
                    sy(seg[0].1)
                );
            }
        }
        let _ = writeln!(w, "</g>");
        let ly = MARGIN_TOP + 15.0 + 20.0 * k as f64;
        let lx = MARGIN_LEFT + plot_w + 15.0;
        let _ = writeln!(
            w,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{color}" stroke-width="2"/><text x="{:.2}" y="{:.2}">Ω_c = {}γ</text>"#,
            lx + 25.0,
            lx + 30.0,
            ly + 4.0,
            omega_c
        );
    }
    let _ = writeln!(w, "</svg>");
    Ok(s)
}

pub fn write_svg<T: Real>(result: &SweepResult<T>, quantity: Quantity, path: &Path) -> Result<()> {
    let text = render_svg(result, quantity)?;
    fs::write(path, text).map_err(|e| Error::io(path, e))
}
