//! Resource caps shared by the enumeration-heavy operations.

use serde::{Deserialize, Serialize};

/// Caps that turn runaway enumerations into explicit errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest ambient dimension for facet and face enumeration of a single cone.
    pub dim_cap: usize,
    /// Largest total dimension of a tensor product (product cones skip facet enumeration).
    pub tensor_dim_cap: usize,
    /// Largest number of lattice points a single enumeration may return.
    pub point_cap: usize,
    /// Largest multiset count `C(k+n-1, n)` a membership query may search.
    pub multiset_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dim_cap: 4,
            tensor_dim_cap: 12,
            point_cap: 1_000_000,
            multiset_cap: 2_000_000,
        }
    }
}
