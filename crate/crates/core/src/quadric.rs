//! Non-singular quadrics of PG(n, 2) in canonical coordinates.
//!
//! | family     | n      | form                                   | g     |
//! |------------|--------|----------------------------------------|-------|
//! | hyperbolic | 2r + 1 | x0x1 + x2x3 + ... + x(2r)x(2r+1)         | r     |
//! | elliptic   | 2r + 1 | x0^2 + x0x1 + x1^2 + x2x3 + ...          | r - 1 |
//! | parabolic  | 2r     | x0^2 + x1x2 + x3x4 + ... + x(2r-1)x(2r)  | r - 1 |

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::gf2geom::{span, ProjPoint, Subspace, MAX_DIM};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Elliptic,
    Hyperbolic,
    Parabolic,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Elliptic, Family::Hyperbolic, Family::Parabolic];

    /// Smallest ambient dimension giving projective index at least 1.
    pub fn min_n(self) -> usize {
        match self {
            Family::Hyperbolic => 3,
            Family::Parabolic => 4,
            Family::Elliptic => 5,
        }
    }

    /// `r` with n = 2r + 1 (elliptic, hyperbolic) or n = 2r (parabolic).
    pub fn r_of(self, n: usize) -> usize {
        match self {
            Family::Parabolic => n / 2,
            _ => (n - 1) / 2,
        }
    }

    pub fn n_of(self, r: usize) -> usize {
        match self {
            Family::Parabolic => 2 * r,
            _ => 2 * r + 1,
        }
    }

    /// Projective index as a function of `r`.
    pub fn g_of(self, r: usize) -> i32 {
        match self {
            Family::Hyperbolic => r as i32,
            _ => r as i32 - 1,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Family::Elliptic => 'E',
            Family::Hyperbolic => 'H',
            Family::Parabolic => 'P',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Elliptic => "elliptic",
            Family::Hyperbolic => "hyperbolic",
            Family::Parabolic => "parabolic",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "elliptic" | "e" => Ok(Family::Elliptic),
            "hyperbolic" | "h" => Ok(Family::Hyperbolic),
            "parabolic" | "p" => Ok(Family::Parabolic),
            other => Err(format!("unknown quadric family `{other}`")),
        }
    }
}

/// A quadratic form over GF(2) stored as an upper-triangular bit matrix:
/// bit `j` of `rows[i]` (with `j >= i`) is the coefficient of `x_i x_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticForm {
    n: usize,
    rows: Vec<u16>,
}

impl QuadraticForm {
    /// Builds a form in `n + 1` variables from monomials `x_i x_j`.
    pub fn from_terms(n: usize, terms: &[(usize, usize)]) -> Self {
        let mut rows = vec![0u16; n + 1];
        for &(i, j) in terms {
            let (i, j) = (i.min(j), i.max(j));
            assert!(j <= n, "variable x{j} out of range");
            rows[i] ^= 1 << j;
        }
        QuadraticForm { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        self.rows[i] >> j & 1 == 1
    }

    #[inline]
    pub fn eval(&self, x: u16) -> bool {
        let mut acc = 0u32;
        for (i, &row) in self.rows.iter().enumerate() {
            if x >> i & 1 == 1 {
                acc ^= (row & x).count_ones();
            }
        }
        acc & 1 == 1
    }

    /// Associated bilinear form `Q(x + y) + Q(x) + Q(y)`.
    #[inline]
    pub fn bilinear(&self, x: u16, y: u16) -> bool {
        self.eval(x ^ y) ^ self.eval(x) ^ self.eval(y)
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for i in 0..=self.n {
            for j in i..=self.n {
                if self.coefficient(i, j) {
                    terms.push(if i == j {
                        format!("x{i}^2")
                    } else {
                        format!("x{i}x{j}")
                    });
                }
            }
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// A non-singular quadric with its points enumerated in increasing order.
#[derive(Clone)]
pub struct Quadric {
    family: Family,
    n: usize,
    form: QuadraticForm,
    points: Vec<ProjPoint>,
    /// `index[bits]` is the vertex index of the point, or `u32::MAX`.
    index: Vec<u32>,
    /// Collinearity rows over point indices (the point-graph adjacency).
    perp: Vec<BitSet>,
}

const ABSENT: u32 = u32::MAX;

impl fmt::Debug for Quadric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}: {:?} ({} points)",
            self.family.letter(),
            self.n,
            self.form,
            self.points.len()
        )
    }
}

/// The canonical quadric of the given family in PG(n, 2).
pub fn standard_quadric(family: Family, n: usize) -> Result<Quadric> {
    if n == 0 || n > MAX_DIM {
        return Err(Error::DimensionOutOfRange(n));
    }
    let odd = n % 2 == 1;
    match family {
        Family::Elliptic | Family::Hyperbolic if !odd => {
            return Err(Error::ParityMismatch {
                family,
                n,
                needs: "odd",
            })
        }
        Family::Parabolic if odd => {
            return Err(Error::ParityMismatch {
                family,
                n,
                needs: "even",
            })
        }
        _ => {}
    }
    if n < family.min_n() {
        return Err(Error::DimensionTooSmall {
            family,
            n,
            min: family.min_n(),
        });
    }
    let mut terms = Vec::new();
    let first_pair = match family {
        Family::Hyperbolic => 0,
        Family::Elliptic => {
            terms.extend([(0, 0), (0, 1), (1, 1)]);
            2
        }
        Family::Parabolic => {
            terms.push((0, 0));
            1
        }
    };
    let mut i = first_pair;
    while i < n {
        terms.push((i, i + 1));
        i += 2;
    }
    Ok(Quadric::from_form(family, QuadraticForm::from_terms(n, &terms)))
}

impl Quadric {
    /// Wraps a form already known to be non-singular of the given family.
    fn from_form(family: Family, form: QuadraticForm) -> Quadric {
        let n = form.n();
        let size = 1usize << (n + 1);
        let mut index = vec![ABSENT; size];
        let mut points = Vec::new();
        for (bits, slot) in index.iter_mut().enumerate().skip(1) {
            if !form.eval(bits as u16) {
                *slot = points.len() as u32;
                points.push(ProjPoint::new(bits as u16).unwrap());
            }
        }
        let v = points.len();
        let mut perp = vec![BitSet::new(v); v];
        for i in 0..v {
            for j in (i + 1)..v {
                let third = (points[i].bits() ^ points[j].bits()) as usize;
                if index[third] != ABSENT {
                    perp[i].insert(j);
                    perp[j].insert(i);
                }
            }
        }
        Quadric {
            family,
            n,
            form,
            points,
            index,
            perp,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.family.r_of(self.n)
    }

    /// Projective index: dimension of the generators.
    pub fn g(&self) -> i32 {
        self.family.g_of(self.r())
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn points(&self) -> &[ProjPoint] {
        &self.points
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    #[inline]
    pub fn contains(&self, p: ProjPoint) -> bool {
        self.index[p.bits() as usize] != ABSENT
    }

    #[inline]
    pub fn index_of(&self, p: ProjPoint) -> Option<usize> {
        let i = self.index[p.bits() as usize];
        (i != ABSENT).then_some(i as usize)
    }

    #[inline]
    pub fn point(&self, i: usize) -> ProjPoint {
        self.points[i]
    }

    /// Point indices collinear with point `i` on a line of the quadric.
    pub fn collinear_with(&self, i: usize) -> &BitSet {
        &self.perp[i]
    }

    /// Whether the line through two distinct quadric points lies on the quadric.
    #[inline]
    pub fn is_line(&self, a: ProjPoint, b: ProjPoint) -> bool {
        self.contains(ProjPoint::new(a.bits() ^ b.bits()).expect("distinct points"))
    }

    /// Whether every point of the subspace lies on the quadric.
    pub fn is_singular(&self, s: &Subspace) -> bool {
        let basis: Vec<u16> = s.basis().map(|p| p.bits()).collect();
        basis.iter().all(|&b| !self.form.eval(b))
            && basis.iter().enumerate().all(|(i, &a)| {
                basis[i + 1..]
                    .iter()
                    .all(|&b| !self.form.bilinear(a, b))
            })
    }

    /// Point indices of a subspace assumed to lie on the quadric.
    pub fn indices_of(&self, s: &Subspace) -> Vec<usize> {
        s.points()
            .into_iter()
            .filter_map(|p| self.index_of(p))
            .collect()
    }

    /// Deterministic singular `s`-space: greedily take the smallest point
    /// collinear with everything chosen so far and outside their span.
    pub fn default_alpha(&self, s: i32) -> Result<Subspace> {
        let g = self.g();
        if s < 0 || s > g {
            return Err(Error::SubspaceDimOutOfRange { d: s, g });
        }
        let mut alpha = Subspace::empty();
        let mut cand = BitSet::full(self.num_points());
        while alpha.dim() < s {
            let next = cand
                .iter()
                .find(|&i| !alpha.contains(self.points[i]))
                .expect("singular subspaces extend up to dimension g");
            alpha.extend(self.points[next]);
            cand.intersect_with(&self.perp[next]);
        }
        Ok(alpha)
    }
}

/// All `d`-dimensional subspaces lying on the quadric, sorted canonically.
///
/// Built level by level: every singular (k+1)-space is the span of a
/// singular k-space and a point collinear with all of it.
pub fn subspaces_in_quadric(q: &Quadric, d: i32) -> Result<Vec<Subspace>> {
    let g = q.g();
    if d < 0 || d > g {
        return Err(Error::SubspaceDimOutOfRange { d, g });
    }
    let mut level: Vec<Subspace> = q.points().iter().map(|&p| span([p])).collect();
    for _ in 0..d {
        let mut next: HashSet<Subspace> = HashSet::new();
        for s in &level {
            let members = q.indices_of(s);
            let mut cand = q.collinear_with(members[0]).clone();
            for &m in &members[1..] {
                cand.intersect_with(q.collinear_with(m));
            }
            for i in cand.iter() {
                let mut t = s.clone();
                t.extend(q.point(i));
                next.insert(t);
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    Ok(level)
}

/// All generators (singular subspaces of dimension g).
pub fn generators(q: &Quadric) -> Vec<Subspace> {
    subspaces_in_quadric(q, q.g()).expect("g is always in range")
}

/// The unique generator through `x` meeting the generator `sigma` in a
/// (g-1)-space.
///
/// The points of `sigma` collinear with `x` are the kernel of `b(., x)`
/// restricted to `sigma`, a hyperplane of `sigma`; the answer is its span
/// with `x`.
pub fn tangent_generator(q: &Quadric, sigma: &Subspace, x: ProjPoint) -> Result<Subspace> {
    if sigma.dim() != q.g() || !q.is_singular(sigma) {
        return Err(Error::NotAGenerator);
    }
    if !q.contains(x) {
        return Err(Error::PointNotOnQuadric(x.bits()));
    }
    if sigma.contains(x) {
        return Err(Error::PointInGenerator(x.bits()));
    }
    let hyper = span(
        sigma
            .points()
            .into_iter()
            .filter(|p| !q.form().bilinear(p.bits(), x.bits())),
    );
    let mut pi = hyper;
    pi.extend(x);
    debug_assert!(q.is_singular(&pi) && pi.dim() == q.g());
    Ok(pi)
}

/// The nucleus of a parabolic quadric: the radical of its bilinear form.
pub fn nucleus(q: &Quadric) -> Result<ProjPoint> {
    if q.family() != Family::Parabolic {
        return Err(Error::NoNucleus(q.family()));
    }
    let n = q.n();
    let form = q.form();
    // Solve b(N, e_j) = 0 for all j by scanning; the radical is one point.
    let found = (1u32..(1u32 << (n + 1)))
        .map(|b| b as u16)
        .find(|&c| (0..=n).all(|j| !form.bilinear(c, 1 << j)))
        .expect("parabolic quadrics have a one-point radical");
    Ok(ProjPoint::new(found).unwrap())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SectionKind {
    Contained,
    OneHyperplane,
    TwoHyperplanes,
    Other,
}

/// Shape of the section of a k-space by the quadric, when it contains a
/// hyperplane of the k-space.
///
/// Only k >= 2 sections are split into one or two hyperplanes; a line is
/// either contained or reported as `Other` (tangents and 2-secants alike).
pub fn quadric_section_kind(q: &Quadric, pi: &Subspace) -> SectionKind {
    let pts = pi.points();
    let on: Vec<ProjPoint> = pts.iter().copied().filter(|&p| q.contains(p)).collect();
    if on.len() == pts.len() {
        return SectionKind::Contained;
    }
    let k = pi.dim();
    if k < 2 {
        return SectionKind::Other;
    }
    let hyper_size = (1usize << k) - 1;
    // Hyperplanes of pi on the quadric: spans of hyperplane-sized singular
    // point sets. Enumerate via the kernels of linear functionals on pi.
    let basis: Vec<ProjPoint> = pi.basis().collect();
    let coords = |p: ProjPoint| -> u32 {
        // Coordinates of p in the (reduced) basis: bit t set when basis[t]
        // contributes. Reduced echelon form makes this a lead-bit lookup.
        let mut c = 0u32;
        for (t, b) in basis.iter().enumerate() {
            let lead = 15 - b.bits().leading_zeros();
            if p.bits() >> lead & 1 == 1 {
                c |= 1 << t;
            }
        }
        c
    };
    let on_set: HashSet<ProjPoint> = on.iter().copied().collect();
    let mut contained = Vec::new();
    for functional in 1u32..(1u32 << basis.len()) {
        let hyper: Vec<ProjPoint> = pts
            .iter()
            .copied()
            .filter(|&p| (coords(p) & functional).count_ones() % 2 == 0)
            .collect();
        debug_assert_eq!(hyper.len(), hyper_size);
        if hyper.iter().all(|p| on_set.contains(p)) {
            contained.push(hyper);
        }
    }
    match contained.len() {
        1 if on.len() == hyper_size => SectionKind::OneHyperplane,
        2 => {
            let union: HashSet<ProjPoint> = contained.concat().into_iter().collect();
            if union.len() == on.len() {
                SectionKind::TwoHyperplanes
            } else {
                SectionKind::Other
            }
        }
        _ => SectionKind::Other,
    }
}
