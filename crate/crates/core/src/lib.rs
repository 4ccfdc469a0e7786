//! Exact invariants of irreducible plane curve singularities from their
//! Puiseux pairs: the embedded resolution (Enriques diagram, dual
//! graph, multiplicities, discrepancies), the spectrum of exponents by
//! three independent routes, and variance statistics around the
//! Hertling bound. All arithmetic is exact rational.

pub mod error;
pub mod puiseux;
pub mod rational;
pub mod report;
pub mod resolution;
pub mod spectrum;
pub mod variance;
pub mod verify;

pub use error::{Error, Result};
pub use puiseux::{
    characteristic_data, continued_fraction, parse_pairs, CharacteristicData, PuiseuxPairs,
};
pub use rational::{Int, Rat};
pub use report::{build_report, report_json, Report};
pub use resolution::{decorate, log_canonical_threshold, DecoratedResolution, Limits};
pub use spectrum::{phi_recursive, spectrum_enumeration, spectrum_steenbrink, Spectrum};
pub use variance::{hertling_check, stage_stats, variance};
pub use verify::{verify_pairs, Check, Fault, SweepSpec, VerifyReport};
