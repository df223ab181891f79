//! Periods, border chains and shortest covers of byte strings.
//!
//! Two families of algorithms live side by side:
//!
//! - [`classical`]: border array based, plus brute-force reference routines;
//! - [`cds`]: the same regularities computed from a characters-distance
//!   sampled view ([`sampling`]) that keeps only the gaps between
//!   occurrences of the first symbol.
//!
//! ```
//! use cdsreg_core::{build_cds, period_cds, shortest_cover_cds};
//!
//! let x = b"abaababaaba";
//! let view = build_cds(x).unwrap();
//! assert_eq!(period_cds(&view, x).unwrap(), 5);
//! assert_eq!(shortest_cover_cds(&view, x).unwrap(), 3);
//! ```

pub mod cds;
pub mod classical;
pub mod error;
pub mod sampling;
pub mod text;

pub use cds::{
    border_cds, border_cds_traced, border_cds_with, borders_cds, occurrences_via_cds, period_cds,
    shortest_cover_cds, CdsBorderResult, Verification, WalkOutcome, WalkStep,
};
pub use classical::{
    border_array, border_chain, is_covering, naive_longest_border, naive_period,
    naive_shortest_cover, occurrences, period_classical, shortest_cover_classical, BorderArray,
    BorderChain,
};
pub use error::{Error, Result};
pub use sampling::{build_cds, sampling_stats, CdsView, SamplingStats};
pub use text::{gen_text, load_text, GenSpec, Lcg, Text};
