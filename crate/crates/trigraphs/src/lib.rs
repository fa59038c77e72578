//! Trigraphs — graphs with strongly adjacent, semi-adjacent, and strongly
//! anti-adjacent vertex pairs — together with the machinery around the
//! decomposition of {ISK4,wheel}-free trigraphs: detectors for forbidden
//! induced structures, recognizers for the basic classes, cutset finders, a
//! recursive decomposition engine, generators, and an exhaustive
//! verification harness that machine-checks the decomposition statement and
//! its supporting propositions on all small instances.

#![forbid(unsafe_code)]

pub mod attachments;
pub mod cutsets;
pub mod decompose;
pub mod error;
pub mod freeness;
pub mod generate;
pub mod io;
pub mod structure;
pub mod trigraph;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use trigraph::{AdjValue, NarrowPath, SimpleGraph, Trigraph};
