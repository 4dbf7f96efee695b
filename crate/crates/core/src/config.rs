// SPDX-License-Identifier: Apache-2.0

//! Flat `key = value` configuration files.
//!
//! One assignment per line; `#` starts a comment. Rates, Rabi frequencies
//! and detunings are in units of `gamma_unit`. Keys:
//!
//! | key | meaning |
//! |-----|---------|
//! | `defaults` | `true` loads the published parameter set first |
//! | `gamma_unit` | γ in s⁻¹ |
//! | `Gamma21` `Gamma31` `Gamma32` `Gamma41` `Gamma42` `Gamma43` | spontaneous decay rates |
//! | `Gamma_pump` | incoherent pump rate |
//! | `Omega_p` | probe Rabi frequency (electric) |
//! | `Omega_B` (alias `omega_B`) | magnetic Rabi frequency; omitted → plane-wave closure Ω_p·μ43/(c·d21) |
//! | `Omega_c`, `Delta_p` | base coupling and detuning (overridden by sweeps) |
//! | `Delta_c`, `delta_small` | coupling detuning, δ = Δ_p − Δ_B |
//! | `d21` | electric dipole moment, C·m |
//! | `mu43` | magnetic dipole moment, A·m² |
//! | `N_density` | atom density, m⁻³ |
//! | `delta_p_min` `delta_p_max` `delta_p_steps` | detuning grid |
//! | `omega_c_list` | comma-separated coupling strengths |
//! | `branch` | `paper` or `physical` |
//! | `cross_check` | `true` to propagate every point as a second solver |
//! | `eq4_variant` | `corrected` or `literal` (ρ22 source term) |
//! | `eq5_variant` | `corrected` or `literal` (Ω_p term of ρ31) |

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::constants::Constants;
use crate::error::{Error, Result};
use crate::params::{plane_wave_omega_b, Eq4Variant, Eq5Variant, SystemParams};
use crate::response::Branch;
use crate::sweep::SweepSpec;

const KEYS: &[&str] = &[
    "defaults",
    "gamma_unit",
    "Gamma21",
    "Gamma31",
    "Gamma32",
    "Gamma41",
    "Gamma42",
    "Gamma43",
    "Gamma_pump",
    "Omega_p",
    "Omega_B",
    "Omega_c",
    "Delta_p",
    "Delta_c",
    "delta_small",
    "d21",
    "mu43",
    "N_density",
    "delta_p_min",
    "delta_p_max",
    "delta_p_steps",
    "omega_c_list",
    "branch",
    "cross_check",
    "eq4_variant",
    "eq5_variant",
];

/// Keys that must be present unless `defaults = true`.
const REQUIRED: &[&str] = &[
    "gamma_unit",
    "Gamma21",
    "Gamma31",
    "Gamma32",
    "Gamma41",
    "Gamma42",
    "Gamma43",
    "Gamma_pump",
    "Omega_p",
    "Delta_c",
    "delta_small",
    "d21",
    "mu43",
    "N_density",
    "delta_p_min",
    "delta_p_max",
    "delta_p_steps",
    "omega_c_list",
];

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub spec: SweepSpec<f64>,
    /// Set when Ω_B was given explicitly instead of the plane-wave closure.
    pub omega_b_override: Option<f64>,
}

fn canonical_key(key: &str) -> &str {
    if key == "omega_B" {
        "Omega_B"
    } else {
        key
    }
}

fn parse_bool(line: usize, v: &str) -> Result<bool> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(Error::Config {
            line,
            message: format!("expected true/false, got `{v}`"),
        }),
    }
}

/// `true` for `literal`, `false` for `corrected`.
fn parse_variant(line: usize, key: &str, v: &str) -> Result<bool> {
    match v {
        "literal" => Ok(true),
        "corrected" => Ok(false),
        _ => Err(Error::Config {
            line,
            message: format!("{key} must be corrected|literal, got `{v}`"),
        }),
    }
}

fn parse_f64(line: usize, key: &str, v: &str) -> Result<f64> {
    v.parse::<f64>().map_err(|_| Error::Config {
        line,
        message: format!("{key}: `{v}` is not a number"),
    })
}

pub fn parse_config(text: &str) -> Result<Config> {
    let mut entries: BTreeMap<&str, (usize, &str)> = BTreeMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Config {
            line,
            message: format!("expected `key = value`, got `{content}`"),
        })?;
        let key = canonical_key(key.trim());
        let value = value.trim();
        if !KEYS.contains(&key) {
            return Err(Error::Config {
                line,
                message: format!("unknown key `{key}`"),
            });
        }
        if entries.insert(key, (line, value)).is_some() {
            return Err(Error::Config {
                line,
                message: format!("duplicate key `{key}`"),
            });
        }
    }

    let defaults = match entries.get("defaults") {
        Some(&(line, v)) => parse_bool(line, v)?,
        None => false,
    };
    if !defaults {
        let missing: Vec<&str> = REQUIRED
            .iter()
            .copied()
            .filter(|k| !entries.contains_key(k))
            .collect();
        if !missing.is_empty() {
            return Err(Error::Config {
                line: 0,
                message: format!(
                    "missing keys (or set `defaults = true`): {}",
                    missing.join(", ")
                ),
            });
        }
    }

    let mut spec = SweepSpec::<f64>::canonical();
    let mut omega_b_override = None;
    let mut omega_c_base = None;
    for (&key, &(line, v)) in &entries {
        let p = &mut spec.base;
        match key {
            "defaults" => {}
            "delta_p_steps" => {
                spec.delta_p_steps = v.parse().map_err(|_| Error::Config {
                    line,
                    message: format!("delta_p_steps: `{v}` is not a non-negative integer"),
                })?;
            }
            "omega_c_list" => {
                spec.omega_c_list = v
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| parse_f64(line, key, s))
                    .collect::<Result<_>>()?;
            }
            "branch" => {
                spec.branch = v
                    .parse::<Branch>()
                    .map_err(|message| Error::Config { line, message })?;
            }
            "cross_check" => spec.cross_check = parse_bool(line, v)?,
            "eq4_variant" => {
                spec.variants.eq4 = match parse_variant(line, key, v)? {
                    true => Eq4Variant::Literal,
                    false => Eq4Variant::Corrected,
                }
            }
            "eq5_variant" => {
                spec.variants.eq5 = match parse_variant(line, key, v)? {
                    true => Eq5Variant::Literal,
                    false => Eq5Variant::Corrected,
                }
            }
            _ => {
                let x = parse_f64(line, key, v)?;
                match key {
                    "gamma_unit" => p.gamma_unit = x,
                    "Gamma21" => p.decay_21 = x,
                    "Gamma31" => p.decay_31 = x,
                    "Gamma32" => p.decay_32 = x,
                    "Gamma41" => p.decay_41 = x,
                    "Gamma42" => p.decay_42 = x,
                    "Gamma43" => p.decay_43 = x,
                    "Gamma_pump" => p.pump = x,
                    "Omega_p" => p.omega_p = x,
                    "Omega_B" => omega_b_override = Some(x),
                    "Omega_c" => omega_c_base = Some(x),
                    "Delta_p" => p.delta_p = x,
                    "Delta_c" => p.delta_c = x,
                    "delta_small" => p.delta_small = x,
                    "d21" => p.d21 = x,
                    "mu43" => p.mu43 = x,
                    "N_density" => p.density = x,
                    "delta_p_min" => spec.delta_p_min = x,
                    "delta_p_max" => spec.delta_p_max = x,
                    other => unreachable!("key {other} listed but not handled"),
                }
            }
        }
    }
    let p = &mut spec.base;
    p.omega_b = match omega_b_override {
        Some(x) => x,
        None => plane_wave_omega_b(p.omega_p, p.d21, p.mu43, &Constants::si()),
    };
    p.omega_c =
        omega_c_base.unwrap_or_else(|| spec.omega_c_list.first().copied().unwrap_or(p.omega_c));

    Ok(Config {
        spec,
        omega_b_override,
    })
}

pub fn load_config(path: &Path) -> Result<Config> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config(&text)
}

impl Config {
    /// Base parameters at one (Δ_p, Ω_c).
    pub fn params_at(&self, delta_p: f64, omega_c: f64) -> SystemParams<f64> {
        self.spec.base.with_delta_p(delta_p).with_omega_c(omega_c)
    }
}
