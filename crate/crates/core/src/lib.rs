//! Core library for desk-scale sparse mixture-of-experts (SMoE) inference
//! experiments: a deterministic toy MoE forward engine, routing-trace
//! collection, the load imbalance score, heavy-hitter and importance
//! analysis, and the replicate-and-quantize model transform, in both static
//! and streaming settings.
//!
//! Everything here is pure computation over `alloc` containers; file formats
//! and the command-line surface live in the companion `rq-cli` crate. All
//! arithmetic is carried out in `f64` with fixed left-to-right reduction
//! order, so results are bit-reproducible across runs and platforms.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod analysis;
pub mod error;
mod fmath;
pub mod metrics;
pub mod model;
pub mod numerics;
pub mod quant;
pub mod rng;
pub mod stream;
pub mod transform;
pub mod workload;

pub use error::{Result, RqError};
pub use metrics::{gap_matrix, lis, merge_traces, GapMatrix, Granularity, LayerTrace, RoutingTrace};
pub use model::{ExpertInstance, MoeLayer, MoeModel, Router};
pub use numerics::{col_l2_norms, matmul, softmax_row, topk_indices, Matrix};
pub use quant::{dequantize, quantize, storage_bytes, Payload, PrecisionScheme, QuantizedMatrix};
