//! Named cones.
//!
//! - `quadrant-m`: the orthant `N^m`, whose semigroup ring is the polynomial ring in `m` variables.
//! - `A1`: rays `(1,0), (1,2)`; ring `k[x,y,z]/(y^2 - xz)`.
//! - `quadric`: rays `(1,0,0), (1,1,0), (1,0,1), (1,1,1)`; ring `k[x,y,z,w]/(xy - zw)`.
//! - `whitney-k`: rays `(1,0), (1,k)` for `k >= 1`; `whitney-2` is `A1`.

use crate::error::{Error, Result};
use crate::lattice::Cone;

pub const NAMES: &[&str] = &["quadrant-m", "A1", "quadric", "whitney-k"];

pub fn quadrant(m: usize) -> Result<Cone> {
    if m == 0 {
        return Err(Error::InvalidParameter("quadrant dimension must be positive".into()));
    }
    let units: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect();
    Cone::new(units.clone(), units)
}

pub fn a1() -> Cone {
    whitney(2).expect("k = 2 is valid")
}

pub fn whitney(k: i64) -> Result<Cone> {
    if k < 1 {
        return Err(Error::InvalidParameter(format!("whitney parameter must be >= 1, got {k}")));
    }
    Cone::new(vec![vec![1, 0], vec![1, k]], vec![vec![0, 1], vec![k, -1]])
}

pub fn quadric() -> Cone {
    Cone::new(
        vec![vec![1, 0, 0], vec![1, 1, 0], vec![1, 0, 1], vec![1, 1, 1]],
        vec![vec![0, 1, 0], vec![0, 0, 1], vec![1, -1, 0], vec![1, 0, -1]],
    )
    .expect("catalog cone is valid")
}

/// Looks up a catalog cone by name.
pub fn cone(name: &str) -> Result<Cone> {
    let unknown = || Error::UnknownCatalog(name.to_string());
    match name {
        "A1" => Ok(a1()),
        "quadric" => Ok(quadric()),
        _ => {
            if let Some(m) = name.strip_prefix("quadrant-") {
                quadrant(m.parse().map_err(|_| unknown())?)
            } else if let Some(k) = name.strip_prefix("whitney-") {
                whitney(k.parse().map_err(|_| unknown())?)
            } else {
                Err(unknown())
            }
        }
    }
}
