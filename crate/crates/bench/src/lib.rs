//! Inputs shared by the benchmarks.

use mckay_core::matgroup::scalar_extend;
use mckay_core::presets::resolve;
use mckay_core::{FiniteMatrixGroup, GroupFile, DEFAULT_MAX_ORDER};

pub fn generators(spec: &str) -> GroupFile {
    let (p, n) = resolve(spec).expect("known preset");
    p.load(n).expect("preset source parses")
}

pub fn group(spec: &str) -> FiniteMatrixGroup {
    FiniteMatrixGroup::enumerate(&generators(spec).generators, DEFAULT_MAX_ORDER)
        .expect("preset enumerates")
}

/// Binary icosahedral group times `⟨ζ₆ I⟩`, order 360.
pub fn extended_icosahedral() -> FiniteMatrixGroup {
    scalar_extend(&group("binary_icosahedral"), 6, DEFAULT_MAX_ORDER).expect("extension enumerates")
}
