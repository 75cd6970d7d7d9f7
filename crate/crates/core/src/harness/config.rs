//! Flat TOML configuration files.
//!
//! ```toml
//! omega = 0.4
//! c1 = 1.5
//! c2 = 2.0
//! swarm_size = 50
//! max_iterations = 300
//! v_clamp = 5.0
//! tau1 = 0.5
//! tau2 = 0.3
//! update_interval = 10
//! alpha_cap = 0.3
//! alpha_rate = 2.0
//! inertia_decay = 0.6
//! ```
//!
//! Every key is optional and overrides the default; unknown keys are errors.
//! The PSO engine ignores the VIGPSO-only keys.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::tune::TuningGrid;
use crate::error::{Error, Result};
use crate::pso::PsoConfig;
use crate::vigpso::VigpsoConfig;

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub swarm_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_iterations: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub v_clamp: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau2: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub update_interval: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_cap: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha_rate: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inertia_decay: Option<f64>,
}

impl ConfigFile {
    pub fn parse(text: &str, origin: &Path) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Parse {
            path: origin.to_path_buf(),
            message: e.to_string(),
        })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = read(path)?;
        Self::parse(&text, path)
    }

    pub fn apply_pso(&self, mut cfg: PsoConfig) -> PsoConfig {
        macro_rules! set {
            ($($field:ident),*) => { $( if let Some(v) = self.$field { cfg.$field = v; } )* };
        }
        set!(omega, c1, c2, swarm_size, max_iterations, v_clamp);
        cfg
    }

    pub fn apply_vigpso(&self, mut cfg: VigpsoConfig) -> VigpsoConfig {
        cfg.base = self.apply_pso(cfg.base);
        if let Some(v) = self.tau1 {
            cfg.learn.tau1 = v;
        }
        if let Some(v) = self.tau2 {
            cfg.learn.tau2 = v;
        }
        if let Some(v) = self.update_interval {
            cfg.learn.update_interval = v;
        }
        if let Some(v) = self.alpha_cap {
            cfg.alpha_cap = v;
        }
        if let Some(v) = self.alpha_rate {
            cfg.alpha_rate = v;
        }
        if let Some(v) = self.inertia_decay {
            cfg.inertia_decay = v;
        }
        cfg
    }

    pub fn from_pso(cfg: &PsoConfig) -> Self {
        Self {
            omega: Some(cfg.omega),
            c1: Some(cfg.c1),
            c2: Some(cfg.c2),
            swarm_size: Some(cfg.swarm_size),
            max_iterations: Some(cfg.max_iterations),
            v_clamp: Some(cfg.v_clamp),
            ..Self::default()
        }
    }

    pub fn from_vigpso(cfg: &VigpsoConfig) -> Self {
        Self {
            tau1: Some(cfg.learn.tau1),
            tau2: Some(cfg.learn.tau2),
            update_interval: Some(cfg.learn.update_interval),
            alpha_cap: Some(cfg.alpha_cap),
            alpha_rate: Some(cfg.alpha_rate),
            inertia_decay: Some(cfg.inertia_decay),
            ..Self::from_pso(&cfg.base)
        }
    }

    pub fn to_toml(&self) -> String {
        toml::to_string(self).expect("flat config always serializes")
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

pub fn load_pso_config(path: &Path) -> Result<PsoConfig> {
    let cfg = ConfigFile::load(path)?.apply_pso(PsoConfig::default());
    cfg.validate()?;
    Ok(cfg)
}

pub fn load_vigpso_config(path: &Path) -> Result<VigpsoConfig> {
    let cfg = ConfigFile::load(path)?.apply_vigpso(VigpsoConfig::default());
    cfg.validate()?;
    Ok(cfg)
}

/// Tuning grid file; keys are the [`TuningGrid`] field names.
pub fn load_grid(path: &Path) -> Result<TuningGrid> {
    let text = read(path)?;
    toml::from_str(&text).map_err(|e| Error::Parse {
        path: path.to_path_buf(),
        message: e.to_string(),
    })
}
