//! Exact rational cone primitives.
//!
//! A [`Cone`] is a full-dimensional, strongly convex rational polyhedral cone
//! `C ⊆ Q^m`, stored with both descriptions: primitive extreme rays and
//! primitive inward facet normals. Its lattice points `C ∩ Z^m` form the
//! monoid whose semigroup ring the rest of the crate studies.
//!
//! All vectors are primitivized and kept in lexicographic order, so two cones
//! compare equal exactly when they are the same cone.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{dot, orthogonal_complement, primitive, rank};

/// An integer exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePoint(Vec<i64>);

impl LatticePoint {
    pub fn new(coords: Vec<i64>) -> Self {
        LatticePoint(coords)
    }

    pub fn zero(dim: usize) -> Self {
        LatticePoint(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        LatticePoint(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn pairing(&self, v: &[i64]) -> i64 {
        dot(&self.0, v)
    }

    pub fn add(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &LatticePoint) -> LatticePoint {
        LatticePoint(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> LatticePoint {
        LatticePoint(self.0.iter().map(|a| a * k).collect())
    }

    /// Embeds the point at `offset` inside a vector of length `total`.
    pub fn pad(&self, offset: usize, total: usize) -> LatticePoint {
        let mut v = vec![0; total];
        v[offset..offset + self.0.len()].copy_from_slice(&self.0);
        LatticePoint(v)
    }

    /// The coordinate block `[offset, offset + len)`.
    pub fn block(&self, offset: usize, len: usize) -> LatticePoint {
        LatticePoint(self.0[offset..offset + len].to_vec())
    }
}

impl From<Vec<i64>> for LatticePoint {
    fn from(v: Vec<i64>) -> Self {
        LatticePoint(v)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Orders by weighted degree, then lexicographically.
pub fn degree_lex(weight: &[i64]) -> impl Fn(&LatticePoint, &LatticePoint) -> Ordering + '_ {
    move |a, b| {
        a.pairing(weight)
            .cmp(&b.pairing(weight))
            .then_with(|| a.cmp(b))
    }
}

/// A full-dimensional strongly convex rational polyhedral cone.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Cone {
    dim: usize,
    rays: Vec<LatticePoint>,
    facet_normals: Vec<LatticePoint>,
}

fn canonical_set(vs: Vec<Vec<i64>>, dim: usize) -> Result<Vec<LatticePoint>> {
    let mut out = BTreeSet::new();
    for v in vs {
        if v.len() != dim {
            return Err(Error::MixedArity { expected: dim, got: v.len() });
        }
        if v.iter().all(|&x| x == 0) {
            return Err(Error::ZeroVector);
        }
        out.insert(LatticePoint(primitive(&v)));
    }
    Ok(out.into_iter().collect())
}

fn as_slices(vs: &[LatticePoint]) -> Vec<&[i64]> {
    vs.iter().map(|v| v.coords()).collect()
}

/// Supporting hyperplanes spanned by `m - 1` of the given rays, oriented inward.
/// No dimension cap; callers guard the combinatorics.
fn facets_of(rays: &[LatticePoint], dim: usize) -> Vec<LatticePoint> {
    let mut found = BTreeSet::new();
    let k = dim - 1;
    let mut idx: Vec<usize> = (0..k).collect();
    if rays.len() < k {
        return Vec::new();
    }
    loop {
        let chosen: Vec<&[i64]> = idx.iter().map(|&i| rays[i].coords()).collect();
        let n = orthogonal_complement(&chosen, dim);
        if n.iter().any(|&x| x != 0) {
            let n = primitive(&n);
            let signs: Vec<i64> = rays.iter().map(|r| dot(r.coords(), &n).signum()).collect();
            if signs.iter().all(|&s| s >= 0) {
                found.insert(LatticePoint(n));
            } else if signs.iter().all(|&s| s <= 0) {
                found.insert(LatticePoint(n.iter().map(|x| -x).collect()));
            }
        }
        // next k-combination
        let mut i = k;
        loop {
            if i == 0 {
                return found.into_iter().collect();
            }
            i -= 1;
            if idx[i] < rays.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Inward primitive facet normals of the cone generated by `rays`.
pub fn facet_normals_from_rays(rays: &[Vec<i64>], dim_cap: usize) -> Result<Vec<LatticePoint>> {
    let dim = rays.first().ok_or(Error::EmptyInput("rays"))?.len();
    if dim > dim_cap {
        return Err(Error::DimensionCapExceeded { dim, cap: dim_cap });
    }
    let rays = canonical_set(rays.to_vec(), dim)?;
    let r = rank(&as_slices(&rays));
    if r < dim {
        return Err(Error::NotFullDimensional { rank: r, dim });
    }
    Ok(facets_of(&rays, dim))
}

impl Cone {
    /// Validates a double description and returns it in canonical form.
    pub fn new(rays: Vec<Vec<i64>>, facet_normals: Vec<Vec<i64>>) -> Result<Cone> {
        let dim = rays.first().ok_or(Error::EmptyInput("rays"))?.len();
        if dim == 0 {
            return Err(Error::EmptyInput("ambient dimension"));
        }
        if facet_normals.is_empty() {
            return Err(Error::EmptyInput("facet normals"));
        }
        let rays = canonical_set(rays, dim)?;
        let normals = canonical_set(facet_normals, dim)?;

        let neg: BTreeSet<LatticePoint> = rays.iter().map(|r| r.scale(-1)).collect();
        if rays.iter().any(|r| neg.contains(r)) {
            return Err(Error::NotStronglyConvex);
        }
        if rank(&as_slices(&normals)) < dim {
            return Err(Error::NotStronglyConvex);
        }
        for r in &rays {
            for n in &normals {
                if r.pairing(n.coords()) < 0 {
                    return Err(Error::InconsistentHRepresentation(format!(
                        "ray {r} violates normal {n}"
                    )));
                }
            }
        }
        let r = rank(&as_slices(&rays));
        if r < dim {
            return Err(Error::NotFullDimensional { rank: r, dim });
        }
        let computed = facets_of(&rays, dim);
        if computed != normals {
            return Err(Error::InconsistentHRepresentation(
                "normals are not exactly the facets of the cone spanned by the rays".into(),
            ));
        }
        for ray in &rays {
            let tight: Vec<&[i64]> = normals
                .iter()
                .filter(|n| ray.pairing(n.coords()) == 0)
                .map(|n| n.coords())
                .collect();
            if rank(&tight) + 1 < dim {
                return Err(Error::InconsistentHRepresentation(format!(
                    "ray {ray} is not extreme"
                )));
            }
        }
        Ok(Cone { dim, rays, facet_normals: normals })
    }

    /// Builds a cone from generators alone; non-extreme generators are dropped.
    pub fn from_rays(rays: Vec<Vec<i64>>, dim_cap: usize) -> Result<Cone> {
        let normals = facet_normals_from_rays(&rays, dim_cap)?;
        let dim = normals.first().map(|n| n.dim()).unwrap_or(0);
        if normals.is_empty() || rank(&as_slices(&normals)) < dim {
            return Err(Error::NotStronglyConvex);
        }
        let all = canonical_set(rays, dim)?;
        let extreme: Vec<Vec<i64>> = all
            .into_iter()
            .filter(|ray| {
                let tight: Vec<&[i64]> = normals
                    .iter()
                    .filter(|n| ray.pairing(n.coords()) == 0)
                    .map(|n| n.coords())
                    .collect();
                rank(&tight) + 1 >= dim
            })
            .map(LatticePoint::into_coords)
            .collect();
        Cone::new(extreme, normals.into_iter().map(LatticePoint::into_coords).collect())
    }

    /// Direct sum of cones on concatenated coordinates.
    pub fn product(factors: &[&Cone]) -> Result<Cone> {
        let total: usize = factors.iter().map(|c| c.dim).sum();
        let mut rays = Vec::new();
        let mut normals = Vec::new();
        let mut offset = 0;
        for c in factors {
            rays.extend(c.rays.iter().map(|r| r.pad(offset, total).into_coords()));
            normals.extend(c.facet_normals.iter().map(|n| n.pad(offset, total).into_coords()));
            offset += c.dim;
        }
        Cone::new(rays, normals)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rays(&self) -> &[LatticePoint] {
        &self.rays
    }

    pub fn facet_normals(&self) -> &[LatticePoint] {
        &self.facet_normals
    }

    pub fn contains(&self, p: &LatticePoint) -> bool {
        self.facet_normals.iter().all(|n| p.pairing(n.coords()) >= 0)
    }

    /// Sum of the facet normals; strictly positive on `C \ {0}` because the normals span.
    pub fn default_weight(&self) -> LatticePoint {
        self.facet_normals
            .iter()
            .fold(LatticePoint::zero(self.dim), |acc, n| acc.add(n))
    }

    /// A weight is admissible when every ray has positive degree.
    pub fn check_weight(&self, weight: &LatticePoint) -> Result<()> {
        if weight.dim() != self.dim {
            return Err(Error::MixedArity { expected: self.dim, got: weight.dim() });
        }
        if self.rays.iter().any(|r| r.pairing(weight.coords()) <= 0) {
            return Err(Error::BadWeight);
        }
        Ok(())
    }

    /// Whether the cone is simplicial (exactly `dim` rays).
    pub fn is_simplicial(&self) -> bool {
        self.rays.len() == self.dim
    }
}

/// Lattice points `p ∈ C` with `<p, weight> <= max_degree`, sorted by degree then lex.
pub fn enumerate_points(
    cone: &Cone,
    weight: &LatticePoint,
    max_degree: i64,
    point_cap: usize,
) -> Result<Vec<LatticePoint>> {
    cone.check_weight(weight)?;
    let dim = cone.dim();
    if max_degree < 0 {
        return Ok(Vec::new());
    }
    // The slice {p ∈ C : deg p <= d} is the polytope with vertices 0 and d·r/deg(r).
    let mut lo = vec![0i64; dim];
    let mut hi = vec![0i64; dim];
    for r in cone.rays() {
        let deg = r.pairing(weight.coords());
        for j in 0..dim {
            let num = r.coords()[j] * max_degree;
            lo[j] = lo[j].min(Integer::div_floor(&num, &deg));
            hi[j] = hi[j].max(Integer::div_ceil(&num, &deg));
        }
    }
    let volume: u128 = lo
        .iter()
        .zip(&hi)
        .map(|(l, h)| (h - l + 1) as u128)
        .product();
    if volume > (point_cap as u128).saturating_mul(64).max(1 << 20) {
        return Err(Error::EnumerationCapExceeded { cap: point_cap });
    }

    let mut out = Vec::new();
    let mut cur = lo.clone();
    'outer: loop {
        let p = LatticePoint(cur.clone());
        if p.pairing(weight.coords()) <= max_degree && cone.contains(&p) {
            if out.len() == point_cap {
                return Err(Error::EnumerationCapExceeded { cap: point_cap });
            }
            out.push(p);
        }
        for j in (0..dim).rev() {
            if cur[j] < hi[j] {
                cur[j] += 1;
                continue 'outer;
            }
            cur[j] = lo[j];
        }
        break;
    }
    out.sort_by(degree_lex(weight.coords()));
    Ok(out)
}

/// Minimal generators of the monoid `C ∩ Z^m` found up to a degree cap.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertBasis {
    pub elements: Vec<LatticePoint>,
    pub degree_cap: i64,
    /// Set when `degree_cap` reaches [`certified_degree_bound`].
    pub complete: bool,
}

/// Every Hilbert basis element has degree at most this.
///
/// By conic Carathéodory each basis element lies in a simplicial subcone spanned
/// by `dim` linearly independent rays, where it is still irreducible, hence lies
/// in that subcone's fundamental parallelepiped or is one of its rays. Either way
/// its degree is at most the sum of those rays' degrees, which is bounded by the
/// sum of the `dim` largest ray degrees.
pub fn certified_degree_bound(cone: &Cone, weight: &LatticePoint) -> i64 {
    let mut degs: Vec<i64> = cone.rays().iter().map(|r| r.pairing(weight.coords())).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    degs.iter().take(cone.dim()).sum()
}

pub fn hilbert_basis(
    cone: &Cone,
    weight: &LatticePoint,
    degree_cap: i64,
    point_cap: usize,
) -> Result<HilbertBasis> {
    let points = enumerate_points(cone, weight, degree_cap, point_cap)?;
    let mut elements: Vec<LatticePoint> = Vec::new();
    // Points arrive in degree order, so any decomposition p = h + q uses an h found earlier.
    for p in points.into_iter().filter(|p| !p.is_zero()) {
        if !elements.iter().any(|h| cone.contains(&p.sub(h))) {
            elements.push(p);
        }
    }
    Ok(HilbertBasis {
        elements,
        degree_cap,
        complete: degree_cap >= certified_degree_bound(cone, weight),
    })
}

/// An exposed face, identified by the facets that contain it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Face {
    /// Sorted indices into the cone's facet normals; always closed.
    normal_indices: Vec<usize>,
    /// Sorted indices of the cone's rays lying in the face.
    ray_indices: Vec<usize>,
    dim: usize,
}

impl Face {
    /// The face cut out by the given normals, with its normal set closed up.
    pub fn from_normals(cone: &Cone, indices: &[usize]) -> Result<Face> {
        let k = cone.facet_normals().len();
        if let Some(&bad) = indices.iter().find(|&&i| i >= k) {
            return Err(Error::InvalidParameter(format!(
                "facet index {bad} out of range (cone has {k} facets)"
            )));
        }
        let ray_indices: Vec<usize> = (0..cone.rays().len())
            .filter(|&r| {
                indices
                    .iter()
                    .all(|&i| cone.rays()[r].pairing(cone.facet_normals()[i].coords()) == 0)
            })
            .collect();
        let normal_indices: Vec<usize> = (0..k)
            .filter(|&i| {
                ray_indices
                    .iter()
                    .all(|&r| cone.rays()[r].pairing(cone.facet_normals()[i].coords()) == 0)
            })
            .collect();
        let dim = rank(
            &ray_indices
                .iter()
                .map(|&r| cone.rays()[r].coords())
                .collect::<Vec<_>>(),
        );
        Ok(Face { normal_indices, ray_indices, dim })
    }

    pub fn whole(cone: &Cone) -> Face {
        Face::from_normals(cone, &[]).expect("empty normal set is always valid")
    }

    pub fn origin(cone: &Cone) -> Face {
        let all: Vec<usize> = (0..cone.facet_normals().len()).collect();
        Face::from_normals(cone, &all).expect("all normals are in range")
    }

    pub fn normal_indices(&self) -> &[usize] {
        &self.normal_indices
    }

    pub fn ray_indices(&self) -> &[usize] {
        &self.ray_indices
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_whole(&self) -> bool {
        self.normal_indices.is_empty()
    }

    /// Whether `p` (assumed in the cone) lies on this face.
    pub fn contains_point(&self, cone: &Cone, p: &LatticePoint) -> bool {
        self.normal_indices
            .iter()
            .all(|&i| p.pairing(cone.facet_normals()[i].coords()) == 0)
    }

    /// Face inclusion: `self ⊇ other`.
    pub fn contains_face(&self, other: &Face) -> bool {
        self.normal_indices
            .iter()
            .all(|i| other.normal_indices.binary_search(i).is_ok())
    }

    /// Sum of the face's rays: a lattice point in its relative interior.
    pub fn interior_point(&self, cone: &Cone) -> LatticePoint {
        self.ray_indices
            .iter()
            .fold(LatticePoint::zero(cone.dim()), |acc, &r| acc.add(&cone.rays()[r]))
    }
}

/// Every face of the cone, from the whole cone down to the origin.
pub fn faces_all(cone: &Cone) -> Vec<Face> {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut faces = Vec::new();
    let mut queue = vec![Face::whole(cone)];
    while let Some(face) = queue.pop() {
        if !seen.insert(face.normal_indices.clone()) {
            continue;
        }
        for i in 0..cone.facet_normals().len() {
            if face.normal_indices.binary_search(&i).is_err() {
                let mut idx = face.normal_indices.clone();
                idx.push(i);
                let next = Face::from_normals(cone, &idx).expect("indices in range");
                if !seen.contains(&next.normal_indices) {
                    queue.push(next);
                }
            }
        }
        faces.push(face);
    }
    faces.sort_by(|a, b| b.dim.cmp(&a.dim).then_with(|| a.normal_indices.cmp(&b.normal_indices)));
    faces
}
