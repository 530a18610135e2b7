//! JSON configuration files and the built-in presets.
//!
//! Rationals travel as strings (`"1/2"`) so nothing ever rounds. Unknown
//! keys are rejected.

use serde::{Deserialize, Serialize};

use crate::arith::parse_rational;
use crate::error::{Error, Result};
use crate::k_stability::TwoOrbitConfig;
use crate::root_system::{DynkinDiagram, Weight};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub name: String,
    /// Diagram syntax: components joined by `x`, e.g. `"F4"`, `"A1xG2"`.
    pub diagram: String,
    /// Fundamental-weight coefficients (rational strings, global node order).
    #[serde(rename = "omega_Y")]
    pub omega_y: Vec<String>,
    #[serde(rename = "omega_Z")]
    pub omega_z: Vec<String>,
    #[serde(rename = "dim_X")]
    pub dim_x: usize,
    pub codim: usize,
    pub epsilon: String,
    #[serde(rename = "minus_KX_multiple")]
    pub minus_kx_multiple: i64,
    #[serde(rename = "E_class")]
    pub e_class: EClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub symmetrizer_scales: Option<Vec<String>>,
}

/// `E = a_Y·π*H_Y + a_X·φ*H_X`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EClass {
    #[serde(rename = "a_Y")]
    pub a_y: i64,
    #[serde(rename = "a_X")]
    pub a_x: i64,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::InvalidConfig(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serializes")
    }

    pub fn to_config(&self) -> Result<TwoOrbitConfig> {
        let diagram = DynkinDiagram::parse(&self.diagram)?;
        let parse_weight = |coords: &[String], which: &str| -> Result<Weight> {
            if coords.len() != diagram.rank() {
                return Err(Error::InvalidConfig(format!(
                    "{which} has {} coordinates, diagram {} has rank {}",
                    coords.len(),
                    self.diagram,
                    diagram.rank()
                )));
            }
            Ok(Weight::new(
                coords.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?,
            ))
        };
        let omega_y = parse_weight(&self.omega_y, "omega_Y")?;
        let omega_z = parse_weight(&self.omega_z, "omega_Z")?;
        let epsilon = parse_rational(&self.epsilon)?;
        let symmetrizer_scales = self
            .symmetrizer_scales
            .as_ref()
            .map(|v| v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>())
            .transpose()?;
        Ok(TwoOrbitConfig {
            name: self.name.clone(),
            diagram,
            omega_y,
            omega_z,
            dim_x: self.dim_x,
            codim: self.codim,
            epsilon,
            minus_kx_multiple: self.minus_kx_multiple,
            e_class: (self.e_class.a_y, self.e_class.a_x),
            symmetrizer_scales,
        })
    }
}

pub const PRESET_NAMES: [&str; 2] = ["pas-f4", "pas-a1g2"];

/// Built-in geometries: the two exceptional two-orbit Fano manifolds.
pub fn preset(name: &str) -> Option<ConfigFile> {
    let strs = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    match name {
        // 23-dimensional, G = F4: −K_X = 8H_X, E = −π*H_Y + φ*H_X, ε = 8,
        // ω_Y = ω_1, ω_Z = ω_3. Symmetrizer scale 1/2 puts the long roots
        // at d = 1 for table output.
        "pas-f4" => Some(ConfigFile {
            name: "pas-f4".into(),
            diagram: "F4".into(),
            omega_y: strs(&["1", "0", "0", "0"]),
            omega_z: strs(&["0", "0", "1", "0"]),
            dim_x: 23,
            codim: 3,
            epsilon: "8".into(),
            minus_kx_multiple: 8,
            e_class: EClass { a_y: -1, a_x: 1 },
            symmetrizer_scales: Some(strs(&["1/2"])),
        }),
        // 8-dimensional, G = A1×G2: −K_X = 6H_X, E = −π*H_Y + 2φ*H_X,
        // ε = 3, ω_Y = ω_2 of G2 (global node 3), ω_Z = ω_0 + ω_1
        // (global nodes 1 and 2).
        "pas-a1g2" => Some(ConfigFile {
            name: "pas-a1g2".into(),
            diagram: "A1xG2".into(),
            omega_y: strs(&["0", "0", "1"]),
            omega_z: strs(&["1", "1", "0"]),
            dim_x: 8,
            codim: 2,
            epsilon: "3".into(),
            minus_kx_multiple: 6,
            e_class: EClass { a_y: -1, a_x: 2 },
            symmetrizer_scales: Some(strs(&["1", "1"])),
        }),
        _ => None,
    }
}
