//! Error type shared by all core operations.

use alloc::string::String;
use core::fmt;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, RqError>;

/// Errors raised by core operations.
#[derive(Debug, Clone, PartialEq)]
pub enum RqError {
    /// Two operands had incompatible shapes. Both shapes are reported.
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A scalar argument or input violated a precondition.
    Argument(String),
    /// A value that must be finite was NaN or infinite.
    NonFinite(&'static str),
    /// A metric was requested on a trace layer that observed no tokens.
    EmptyTrace { layer: usize },
    /// Two traces (or a trace and a model) disagree on layer/instance layout.
    TopologyMismatch(String),
    /// An operation was applied to a model in the wrong state.
    State(String),
    /// Adversarial stream construction retained too few tokens.
    InsufficientStream { retained: usize, needed: usize },
}

impl fmt::Display for RqError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RqError::Shape { op, left, right } => write!(
                f,
                "shape mismatch in {op}: {}x{} vs {}x{}",
                left.0, left.1, right.0, right.1
            ),
            RqError::Argument(msg) => write!(f, "invalid argument: {msg}"),
            RqError::NonFinite(what) => write!(f, "non-finite value in {what}"),
            RqError::EmptyTrace { layer } => {
                write!(f, "trace layer {layer} has observed no tokens")
            }
            RqError::TopologyMismatch(msg) => write!(f, "topology mismatch: {msg}"),
            RqError::State(msg) => write!(f, "invalid state: {msg}"),
            RqError::InsufficientStream { retained, needed } => write!(
                f,
                "adversarial stream retained {retained} tokens but needs at least {needed}"
            ),
        }
    }
}

impl core::error::Error for RqError {}
