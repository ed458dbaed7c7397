//! Distribution-factor uncertainty modeling and chance-constrained unit
//! commitment for DER aggregations that span multiple transmission nodes.
//!
//! The pipeline this crate implements:
//!
//! 1. [`network`] — power-system case data, DC shift factors, and the
//!    distribution-factor (DF) sensitivity aggregation used to map an
//!    aggregation's output onto line flows.
//! 2. [`bhmm`] — a bounded hetero-dimensional mixture model fitted to
//!    historical DF records: repeated records become weighted point masses,
//!    the rest are grouped by their zero pattern onto lower-dimensional
//!    simplices and fitted with bounded generalized-Gaussian mixtures via EM.
//! 3. [`solver`] — a backend-agnostic LP/MILP interface (HiGHS in-process
//!    backend) exposing duals and infeasibility certificates.
//! 4. [`ucmodel`] — the deterministic network-constrained UC and its
//!    scenario-based chance-constrained extensive form.
//! 5. [`benders`] — bilinear Benders decomposition of the chance-constrained
//!    model: MILP master with scenario-activation binaries, per-scenario LP
//!    subproblems, optimality/feasibility cuts.
//! 6. [`dispatch`] — rolling 5-minute real-time dispatch under a fixed
//!    commitment plan, aggregator self-dispatch strategies, and evaluation
//!    metrics (costs, line loading, overloading statistics).

pub mod benders;
pub mod bhmm;
pub mod cases;
pub mod dispatch;
pub mod error;
pub mod network;
pub mod scenario;
pub mod solver;
pub mod ucmodel;

pub use error::{Error, Result};
