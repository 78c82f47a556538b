//! Linear algebra and projective-space primitives over GF(2).
//!
//! A point of PG(n, 2) is a nonzero vector of GF(2)^(n+1). Over GF(2) there is
//! no scalar ambiguity, so a point is just its coordinate bit vector, stored
//! as an integer with bit `i` holding coordinate `x_i`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported ambient projective dimension (vectors of width 16).
pub const MAX_DIM: usize = 15;

/// A point of PG(n, 2): a nonzero bit vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ProjPoint(u16);

impl ProjPoint {
    /// Returns `None` for the zero vector, which names no point.
    pub fn new(bits: u16) -> Option<Self> {
        (bits != 0).then_some(ProjPoint(bits))
    }

    /// The unit vector `e_i`.
    pub fn unit(i: usize) -> Self {
        assert!(i <= MAX_DIM, "coordinate index {i} out of range");
        ProjPoint(1 << i)
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.0
    }
}

impl fmt::Debug for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({:#b})", self.0)
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The third point on the line through two distinct points.
pub fn third_point(p1: ProjPoint, p2: ProjPoint) -> Result<ProjPoint> {
    if p1 == p2 {
        return Err(Error::DegenerateLine(p1.0));
    }
    Ok(ProjPoint(p1.0 ^ p2.0))
}

/// A projective subspace, stored by its reduced row-echelon basis.
///
/// The basis is canonical (fully reduced, sorted ascending), so two subspaces
/// are equal exactly when their bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Subspace {
    basis: Vec<u16>,
}

impl Subspace {
    pub fn empty() -> Self {
        Subspace { basis: Vec::new() }
    }

    /// Projective dimension; the empty subspace has dimension -1.
    pub fn dim(&self) -> i32 {
        self.basis.len() as i32 - 1
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> impl Iterator<Item = ProjPoint> + '_ {
        self.basis.iter().map(|&b| ProjPoint(b))
    }

    pub fn num_points(&self) -> usize {
        (1usize << self.basis.len()) - 1
    }

    /// All `2^(dim+1) - 1` points, in increasing numeric order.
    pub fn points(&self) -> Vec<ProjPoint> {
        let k = self.basis.len();
        let mut pts: Vec<ProjPoint> = (1u32..(1u32 << k))
            .map(|mask| {
                let mut v = 0u16;
                for (i, &b) in self.basis.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        v ^= b;
                    }
                }
                ProjPoint(v)
            })
            .collect();
        pts.sort_unstable();
        pts
    }

    /// Reduces `v` against the basis; zero means `v` lies in the span.
    fn reduce(&self, mut v: u16) -> u16 {
        for &b in self.basis.iter().rev() {
            let lead = 15 - b.leading_zeros();
            if v >> lead & 1 == 1 {
                v ^= b;
            }
        }
        v
    }

    pub fn contains(&self, p: ProjPoint) -> bool {
        self.reduce(p.0) == 0
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|&b| self.reduce(b) == 0)
    }

    /// Adds a vector to the span; returns false if it was already inside.
    pub fn extend(&mut self, p: ProjPoint) -> bool {
        let r = self.reduce(p.0);
        if r == 0 {
            return false;
        }
        let lead = 15 - r.leading_zeros();
        for b in self.basis.iter_mut() {
            if *b >> lead & 1 == 1 {
                *b ^= r;
            }
        }
        self.basis.push(r);
        self.basis.sort_unstable_by_key(|&b| 15 - b.leading_zeros());
        true
    }

    /// The smallest subspace containing both.
    pub fn join(&self, other: &Subspace) -> Subspace {
        let mut out = self.clone();
        for p in other.basis() {
            out.extend(p);
        }
        out
    }

    /// Intersection, computed from the point sets of the smaller side.
    pub fn meet(&self, other: &Subspace) -> Subspace {
        let (small, big) = if self.rank() <= other.rank() {
            (self, other)
        } else {
            (other, self)
        };
        span(small.points().into_iter().filter(|&p| big.contains(p)))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("dim", &self.dim())
            .field("basis", &self.basis().collect::<Vec<_>>())
            .finish()
    }
}

/// Span of a set of points over GF(2).
pub fn span<I: IntoIterator<Item = ProjPoint>>(pts: I) -> Subspace {
    let mut s = Subspace::empty();
    for p in pts {
        s.extend(p);
    }
    s
}

/// Gaussian binomial: the number of `dim_small`-subspaces of a projective
/// `dim_big`-space over GF(q).
pub fn count_subspaces_in(dim_big: i32, dim_small: i32, q: u64) -> BigUint {
    let n = dim_big + 1;
    let k = dim_small + 1;
    if k < 0 || k > n {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow((n - i) as u32) - 1u32;
        den *= q.pow((i + 1) as u32) - 1u32;
    }
    num / den
}
