//! Foot-placement prediction models and control-timescale analysis for
//! locomotion time series.
//!
//! `stridecast` takes marker trajectories of walking or running trials,
//! segments them into gait cycles, builds prediction samples per input
//! modality (CoM, full body, swing foot, gaze), trains nine model families
//! under nested cross-validation, and extracts the timescales on which each
//! modality predicts future foot placement: the R² intercept, the ΔR² peak
//! and onset, the baseline breakpoint, and the swing-initiation phase.
//!
//! A synthetic-gait generator with a scripted foot-placement controller
//! ([`synthgait`]) provides ground truth for every quantity in the chain, so
//! the whole pipeline can be validated end to end without any recorded data.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! ```text
//! cargo run --release --example synth_dataset      # generate synthetic trials + ground truth
//! cargo run --release --example filter_and_events  # zero-lag filtering, velocities, heel strikes
//! cargo run --release --example segment_cycles     # gait cycles, phase grids, anomaly rejection
//! cargo run --release --example build_samples      # model-ready windows per gait phase
//! cargo run --release --example train_gru          # ADAM + early stopping on a small GRU
//! cargo run --release --example linear_models      # LI / LH / LI2 / LH2 closed-form fits
//! cargo run --release --example nested_cv          # 5x5 nested CV producing an R² curve
//! cargo run --release --example model_scores       # per-phase RMSE scores and the score table
//! cargo run --release --example timescales         # ΔR², onset, breakpoint, swing initiation
//! cargo run --release --example stats_toolbox      # Wilcoxon, OLS confidence bands, bootstrap
//! cargo run --release --example full_pipeline      # config-driven run directory end to end
//! ```
//!
//! The `stridecast` binary wraps the same pipeline behind subcommands
//! (`synth`, `ingest`, `preprocess`, `train`, `evaluate`, `timescales`,
//! `report`, `all`); see the README for CLI usage.

pub mod config;
pub mod crossval;
pub mod dataio;
pub mod gradcore;
pub mod modelzoo;
pub mod phase;
pub mod pipeline;
pub mod preprocess;
pub mod report;
pub mod sampling;
pub mod stats;
pub mod synthgait;
pub mod timescale;

pub use dataio::{Dataset, Task, Terrain, Trial};
pub use phase::PhaseGrid;
