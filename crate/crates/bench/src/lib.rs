//! Shared inputs for the criterion benches.

use indset_core::{FamilySpec, Graph};

/// Builds a graph from a family string such as `"cyclepow:30:2"`.
pub fn family(spec: &str) -> Graph {
    spec.parse::<FamilySpec>()
        .and_then(|f| f.build())
        .unwrap_or_else(|e| panic!("bad bench family {spec}: {e}"))
}
