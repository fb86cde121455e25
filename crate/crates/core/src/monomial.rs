//! Monomial ideals of the polynomial ring `k[x1..xm]`.
//!
//! An ideal is its set of minimal generators, kept as a divisibility antichain
//! sorted by total degree then lexicographically, so structural equality is
//! ideal equality. The empty generator set is the zero ideal; the single
//! generator `0` (the monomial `1`) is the unit ideal.
//!
//! Symbolic powers are only defined here for squarefree ideals, where every
//! associated prime is minimal and `I^(n) = ∩ P^n` over the minimal primes.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::lattice::LatticePoint;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMonomialIdeal {
    vars: usize,
    gens: Vec<LatticePoint>,
}

/// The prime `(x_i : i ∈ support)`; indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VariablePrime {
    pub support: Vec<usize>,
}

fn total_degree(p: &LatticePoint) -> i64 {
    p.coords().iter().sum()
}

fn divides(a: &LatticePoint, b: &LatticePoint) -> bool {
    a.coords().iter().zip(b.coords()).all(|(x, y)| x <= y)
}

fn lcm(a: &LatticePoint, b: &LatticePoint) -> LatticePoint {
    LatticePoint::new(a.coords().iter().zip(b.coords()).map(|(x, y)| *x.max(y)).collect())
}

fn check_arity(vars: usize, p: &LatticePoint) -> Result<()> {
    if p.dim() != vars {
        return Err(Error::MixedArity { expected: vars, got: p.dim() });
    }
    Ok(())
}

impl PolyMonomialIdeal {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimalize(vars: usize, gens: Vec<LatticePoint>) -> Result<Self> {
        for g in &gens {
            check_arity(vars, g)?;
            if g.coords().iter().any(|&x| x < 0) {
                return Err(Error::NegativeExponent);
            }
        }
        Ok(Self::from_unchecked(vars, gens))
    }

    fn from_unchecked(vars: usize, mut gens: Vec<LatticePoint>) -> Self {
        gens.sort_by(|a, b| total_degree(a).cmp(&total_degree(b)).then_with(|| a.cmp(b)));
        gens.dedup();
        let mut kept: Vec<LatticePoint> = Vec::with_capacity(gens.len());
        for g in gens {
            if !kept.iter().any(|k| divides(k, &g)) {
                kept.push(g);
            }
        }
        PolyMonomialIdeal { vars, gens: kept }
    }

    pub fn zero(vars: usize) -> Self {
        PolyMonomialIdeal { vars, gens: Vec::new() }
    }

    pub fn unit(vars: usize) -> Self {
        PolyMonomialIdeal { vars, gens: vec![LatticePoint::zero(vars)] }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn gens(&self) -> &[LatticePoint] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_zero()
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(|g| g.coords().iter().all(|&x| x <= 1))
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::MixedArity { expected: self.vars, got: other.vars });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_unchecked(self.vars, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.add(b)))
            .collect();
        Ok(Self::from_unchecked(self.vars, gens))
    }

    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::unit(self.vars);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| lcm(a, b)))
            .collect();
        Ok(Self::from_unchecked(self.vars, gens))
    }

    /// `(I : x^u)`.
    pub fn colon(&self, u: &LatticePoint) -> Result<Self> {
        check_arity(self.vars, u)?;
        if u.coords().iter().any(|&x| x < 0) {
            return Err(Error::NegativeExponent);
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                LatticePoint::new(
                    g.coords().iter().zip(u.coords()).map(|(a, b)| (a - b).max(0)).collect(),
                )
            })
            .collect();
        Ok(Self::from_unchecked(self.vars, gens))
    }

    pub fn member(&self, b: &LatticePoint) -> Result<bool> {
        check_arity(self.vars, b)?;
        Ok(self.gens.iter().any(|g| divides(g, b)))
    }

    /// `J ⊆ self`.
    pub fn contains(&self, other: &Self) -> Result<bool> {
        self.same_ring(other)?;
        Ok(other.gens.iter().all(|g| self.gens.iter().any(|h| divides(h, g))))
    }

    /// First generator of `other`, in canonical order, lying outside `self`.
    pub fn first_outside(&self, other: &Self) -> Result<Option<LatticePoint>> {
        self.same_ring(other)?;
        Ok(other
            .gens
            .iter()
            .find(|g| !self.gens.iter().any(|h| divides(h, g)))
            .cloned())
    }

    /// Embeds into `total` variables starting at `offset`.
    pub fn pad(&self, offset: usize, total: usize) -> Self {
        PolyMonomialIdeal {
            vars: total,
            gens: self.gens.iter().map(|g| g.pad(offset, total)).collect(),
        }
        .renormalize()
    }

    fn renormalize(self) -> Self {
        Self::from_unchecked(self.vars, self.gens)
    }

    /// Minimal vertex covers of the hypergraph of generator supports.
    pub fn minimal_primes(&self) -> Result<Vec<VariablePrime>> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.vars > 64 {
            return Err(Error::TooManyVariables(self.vars));
        }
        let edges: Vec<u64> = self.gens.iter().map(support_mask).collect();
        if edges.contains(&0) {
            // unit ideal: no prime contains it
            return Ok(Vec::new());
        }
        // Berge's transversal algorithm, minimalizing after each edge.
        let mut covers: Vec<u64> = vec![0];
        for &e in &edges {
            let mut next: Vec<u64> = Vec::new();
            for &t in &covers {
                if t & e != 0 {
                    next.push(t);
                } else {
                    let mut bits = e;
                    while bits != 0 {
                        let v = bits & bits.wrapping_neg();
                        next.push(t | v);
                        bits &= bits - 1;
                    }
                }
            }
            next.sort_by_key(|t| (t.count_ones(), *t));
            next.dedup();
            let mut minimal: Vec<u64> = Vec::new();
            for t in next {
                if !minimal.iter().any(|&m| m & !t == 0) {
                    minimal.push(t);
                }
            }
            covers = minimal;
        }
        let mut primes: Vec<VariablePrime> = covers
            .into_iter()
            .map(|t| VariablePrime { support: (0..64).filter(|i| t >> i & 1 == 1).collect() })
            .collect();
        primes.sort();
        Ok(primes)
    }

    /// `I^(n) = ∩_{P minimal} P^n` for squarefree `I`.
    pub fn symbolic_power(&self, n: u32) -> Result<Self> {
        let primes = self.minimal_primes()?;
        if n == 0 {
            return Ok(Self::unit(self.vars));
        }
        if self.is_zero() {
            return Ok(Self::zero(self.vars));
        }
        let mut acc = Self::unit(self.vars);
        for p in primes {
            acc = acc.intersect(&p.ideal(self.vars).power(n))?;
        }
        Ok(acc)
    }

    /// Largest height of a minimal prime.
    pub fn big_height(&self) -> Result<usize> {
        if !self.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if self.is_zero() || self.is_unit() {
            return Err(Error::NotProper);
        }
        Ok(self
            .minimal_primes()?
            .iter()
            .map(|p| p.support.len())
            .max()
            .expect("a proper nonzero ideal has a minimal prime"))
    }

    /// Parses `x1^2*x3 + x2*x4`. `1` is the unit monomial, `0` the zero ideal.
    /// With `vars = None` the ring size is the largest variable index used.
    pub fn parse(text: &str, vars: Option<usize>) -> Result<Self> {
        let gens = parse_generators(text)?;
        let used = gens
            .iter()
            .flat_map(|g| g.iter().map(|&(v, _)| v))
            .max()
            .unwrap_or(0);
        let vars = match vars {
            Some(m) if m < used => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: format!("variable x{used} exceeds the ring size {m}"),
                })
            }
            Some(m) => m,
            None => used.max(1),
        };
        let points = gens
            .into_iter()
            .map(|g| {
                let mut v = vec![0i64; vars];
                for (var, e) in g {
                    v[var - 1] += e;
                }
                LatticePoint::new(v)
            })
            .collect();
        Ok(Self::from_unchecked(vars, points))
    }
}

fn support_mask(g: &LatticePoint) -> u64 {
    g.coords()
        .iter()
        .enumerate()
        .filter(|(_, &x)| x > 0)
        .fold(0u64, |m, (i, _)| m | 1 << i)
}

impl VariablePrime {
    pub fn new(support: Vec<usize>) -> Result<Self> {
        if support.is_empty() {
            return Err(Error::EmptyInput("variable prime support"));
        }
        let mut support = support;
        support.sort_unstable();
        support.dedup();
        Ok(VariablePrime { support })
    }

    pub fn height(&self) -> usize {
        self.support.len()
    }

    pub fn ideal(&self, vars: usize) -> PolyMonomialIdeal {
        PolyMonomialIdeal::from_unchecked(
            vars,
            self.support.iter().map(|&i| LatticePoint::unit(vars, i)).collect(),
        )
    }
}

type RawGenerator = Vec<(usize, i64)>;

fn parse_generators(text: &str) -> Result<Vec<RawGenerator>> {
    let err = |pos: usize, msg: &str| Error::Parse { pos, msg: msg.to_string() };
    let trimmed = text.trim();
    if trimmed == "0" {
        return Ok(Vec::new());
    }
    if trimmed.is_empty() {
        return Err(err(0, "empty ideal; write 0 for the zero ideal"));
    }
    let mut gens = Vec::new();
    let mut offset = 0;
    for term in text.split('+') {
        let mut gen = Vec::new();
        let mut foff = offset;
        for factor in term.split('*') {
            let lead = factor.len() - factor.trim_start().len();
            let f = factor.trim();
            let pos = foff + lead;
            if f.is_empty() {
                return Err(err(pos, "missing factor"));
            }
            if f == "1" {
                foff += factor.len() + 1;
                continue;
            }
            let body = f.strip_prefix('x').ok_or_else(|| err(pos, "expected a variable like x3"))?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, Some(e)),
                None => (body, None),
            };
            let var: usize = idx.parse().map_err(|_| err(pos, "bad variable index"))?;
            if var == 0 {
                return Err(err(pos, "variables are numbered from x1"));
            }
            let e: i64 = match exp {
                Some(e) => e.parse().map_err(|_| err(pos, "bad exponent"))?,
                None => 1,
            };
            if e < 0 {
                return Err(err(pos, "negative exponent"));
            }
            gen.push((var, e));
            foff += factor.len() + 1;
        }
        gens.push(gen);
        offset += term.len() + 1;
    }
    Ok(gens)
}

/// Writes a monomial in the `x1^2*x3` grammar.
pub fn format_monomial(p: &LatticePoint) -> String {
    let parts: Vec<String> = p
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e != 0)
        .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
        .collect();
    if parts.is_empty() {
        "1".to_string()
    } else {
        parts.join("*")
    }
}

impl fmt::Display for PolyMonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.gens.iter().map(format_monomial).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Serialize for PolyMonomialIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> LatticePoint {
        LatticePoint::new(v.to_vec())
    }

    fn ideal(vars: usize, gens: &[&[i64]]) -> PolyMonomialIdeal {
        PolyMonomialIdeal::minimalize(vars, gens.iter().map(|g| p(g)).collect()).unwrap()
    }

    fn triangle() -> PolyMonomialIdeal {
        PolyMonomialIdeal::parse("x1*x2 + x1*x3 + x2*x3", None).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        assert_eq!(ideal(2, &[&[2, 0], &[1, 0]]).gens(), &[p(&[1, 0])]);
        assert_eq!(ideal(2, &[&[1, 1], &[2, 0], &[1, 2]]).gens(), &[p(&[1, 1]), p(&[2, 0])]);
        assert!(ideal(2, &[]).is_zero());
        assert_eq!(
            PolyMonomialIdeal::minimalize(2, vec![p(&[1, 0]), p(&[1])]),
            Err(Error::MixedArity { expected: 2, got: 1 })
        );
    }

    #[test]
    fn sum_product_power() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        let m = x1.sum(&x2).unwrap();
        assert_eq!(m, ideal(2, &[&[1, 0], &[0, 1]]));
        assert_eq!(m.product(&m).unwrap(), ideal(2, &[&[2, 0], &[1, 1], &[0, 2]]));
        let sq = triangle().power(2);
        assert_eq!(sq.gens().len(), 6);
        assert!(sq.gens().iter().all(|g| total_degree(g) == 4));
        assert!(triangle().power(0).is_unit());
        assert!(x1.sum(&ideal(3, &[&[1, 0, 0]])).is_err());
    }

    #[test]
    fn intersections() {
        let x1 = ideal(2, &[&[1, 0]]);
        let x2 = ideal(2, &[&[0, 1]]);
        assert_eq!(x1.intersect(&x2).unwrap(), ideal(2, &[&[1, 1]]));
        // vars ordered x1, y1, y2
        let a = ideal(3, &[&[2, 0, 0], &[1, 1, 0], &[0, 2, 0]]);
        let b = ideal(3, &[&[2, 0, 0], &[1, 0, 1], &[0, 0, 2]]);
        assert_eq!(
            a.intersect(&b).unwrap(),
            ideal(3, &[&[2, 0, 0], &[1, 1, 1], &[0, 2, 2]])
        );
        let t = triangle();
        assert_eq!(t.intersect(&PolyMonomialIdeal::unit(3)).unwrap(), t);
    }

    #[test]
    fn colon_examples() {
        assert_eq!(ideal(1, &[&[2]]).colon(&p(&[1])).unwrap(), ideal(1, &[&[1]]));
        assert!(ideal(2, &[&[1, 1]]).colon(&p(&[1, 1])).unwrap().is_unit());
        assert_eq!(
            ideal(2, &[&[2, 1], &[0, 3]]).colon(&p(&[0, 1])).unwrap(),
            ideal(2, &[&[2, 0], &[0, 2]])
        );
    }

    #[test]
    fn membership() {
        assert!(ideal(3, &[&[1, 1, 0]]).member(&p(&[1, 1, 1])).unwrap());
        assert!(ideal(2, &[&[1, 0]]).contains(&ideal(2, &[&[2, 0], &[1, 1]])).unwrap());
        assert!(!triangle().power(2).member(&p(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn minimal_primes_examples() {
        let sup = |i: &PolyMonomialIdeal| -> Vec<Vec<usize>> {
            i.minimal_primes().unwrap().into_iter().map(|p| p.support).collect()
        };
        assert_eq!(sup(&ideal(2, &[&[1, 1]])), vec![vec![0], vec![1]]);
        assert_eq!(sup(&ideal(3, &[&[1, 1, 0], &[1, 0, 1]])), vec![vec![0], vec![1, 2]]);
        assert_eq!(sup(&triangle()), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(ideal(1, &[&[2]]).minimal_primes(), Err(Error::NotSquarefree));
    }

    #[test]
    fn symbolic_power_examples() {
        let t = triangle();
        assert_eq!(t.symbolic_power(1).unwrap(), t);
        let s2 = t.symbolic_power(2).unwrap();
        assert!(s2.member(&p(&[1, 1, 1])).unwrap());
        assert!(!t.power(2).member(&p(&[1, 1, 1])).unwrap());
        let vp = VariablePrime::new(vec![0, 2]).unwrap().ideal(3);
        for n in 0..=4 {
            assert_eq!(vp.symbolic_power(n).unwrap(), vp.power(n));
        }
        assert!(t.symbolic_power(0).unwrap().is_unit());
    }

    #[test]
    fn big_heights() {
        assert_eq!(ideal(2, &[&[1, 1]]).big_height(), Ok(1));
        assert_eq!(triangle().big_height(), Ok(2));
        assert_eq!(ideal(3, &[&[1, 1, 1]]).big_height(), Ok(1));
        assert_eq!(PolyMonomialIdeal::unit(2).big_height(), Err(Error::NotProper));
    }

    #[test]
    fn grammar() {
        let i = PolyMonomialIdeal::parse("x1^2*x3 + x2*x4", None).unwrap();
        assert_eq!(i.vars(), 4);
        assert_eq!(i.to_string(), "x2*x4 + x1^2*x3");
        assert_eq!(PolyMonomialIdeal::parse(&i.to_string(), Some(4)).unwrap(), i);
        assert!(PolyMonomialIdeal::parse("1", Some(2)).unwrap().is_unit());
        assert!(PolyMonomialIdeal::parse("0", Some(2)).unwrap().is_zero());
        assert!(matches!(PolyMonomialIdeal::parse("x1 + y2", None), Err(Error::Parse { pos: 5, .. })));
        assert!(PolyMonomialIdeal::parse("x3", Some(2)).is_err());
        assert!(PolyMonomialIdeal::parse("x0", None).is_err());
        assert!(PolyMonomialIdeal::parse("x1 * ", None).is_err());
    }
}
