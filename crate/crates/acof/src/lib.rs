//! Closed-loop, role-separated optimization for analog circuit sizing.
//!
//! An actor proposes a search region, a critic audits and repairs it, and a
//! region-restricted Gaussian-process Bayesian optimizer spends a fixed
//! simulation budget inside the approved region. The crate also ships the
//! Single-LLM and Pure-BO baselines and the full metrics suite (top-k design
//! quality, reliability rates, regret, HDBSCAN region counts).

pub mod agents;
pub mod bayesopt;
pub mod cli;
pub mod config;
pub mod core;
pub mod evaluators;
pub mod fom;
pub mod llmclient;
pub mod metrics;
pub mod orchestrator;
pub mod rng;
pub mod runlog;
pub mod textutil;

pub use crate::core::{
    DesignPoint, Measurements, ParameterSpace, ParameterSpec, Region, SpecTargets,
};
pub use crate::fom::FomScore;
pub use crate::orchestrator::{RunConfig, RunResult};
