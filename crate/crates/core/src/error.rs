use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("unknown system {0} (expected 1..=21)")]
    UnknownSystem(u32),
    #[error("system {system}: {what} not available")]
    Capability { system: u32, what: &'static str },
    #[error("system {system}: coordinate {coord} = {value} outside domain {domain}")]
    Domain { system: u32, coord: &'static str, value: f64, domain: String },
    #[error("ordering constraint violated: {0}")]
    Ordering(String),
    #[error("pole of {0}")]
    Pole(&'static str),
    #[error("{func}: argument outside reliable region ({detail})")]
    OutOfRegion { func: &'static str, detail: String },
    #[error("{0}: series did not converge")]
    NoConvergence(&'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid quantum numbers: {0}")]
    InvalidQuantumNumbers(String),
    #[error("degenerate metric at {0}")]
    Degenerate(String),
    #[error("eigenbasis out of scope ({0})")]
    OutOfScope(&'static str),
    #[error("conditioning: {0}")]
    Conditioning(String),
}

pub type Result<T> = std::result::Result<T, Error>;
