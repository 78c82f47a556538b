//! Closed-form counts for quadrics, switching sets and clique censuses.
//!
//! Everything is evaluated in arbitrary precision. Counts that only make
//! sense over GF(2) (cliques, SRG parameters) are `None` when `q != 2`.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SrgParams;
use crate::quadric::Family;

fn pow(q: u64, e: u32) -> BigUint {
    BigUint::from(q).pow(e)
}

/// `q^e + 1` for `e >= 0`.
fn plus1(q: u64, e: i64) -> BigUint {
    assert!(e >= 0, "negative exponent {e} in q^e + 1");
    pow(q, e as u32) + 1u32
}

/// `q^e - 1` for `e >= 0`.
fn minus1(q: u64, e: i64) -> BigUint {
    assert!(e >= 0, "negative exponent {e} in q^e - 1");
    pow(q, e as u32) - 1u32
}

/// `(2^lo + 1)(2^(lo+1) + 1) ... (2^hi + 1)`; the empty product is 1.
pub fn prod_2i_plus1(lo: i64, hi: i64) -> BigUint {
    let mut acc = BigUint::one();
    let mut i = lo;
    while i <= hi {
        acc *= plus1(2, i);
        i += 1;
    }
    acc
}

fn r_min(family: Family) -> u32 {
    match family {
        Family::Hyperbolic => 1,
        _ => 2,
    }
}

/// Projective index as a signed integer.
pub fn projective_index(family: Family, r: u32) -> i64 {
    family.g_of(r as usize) as i64
}

fn check_family_r(family: Family, r: u32) -> Result<()> {
    if r < r_min(family) {
        return Err(Error::Inadmissible(format!(
            "{family} quadrics need r >= {}, got r = {r}",
            r_min(family)
        )));
    }
    Ok(())
}

fn check_admissible(family: Family, q: u64, r: u32, s: u32) -> Result<()> {
    if q < 2 {
        return Err(Error::Inadmissible(format!("q must be >= 2, got {q}")));
    }
    check_family_r(family, r)?;
    let g = projective_index(family, r);
    if s as i64 >= g {
        return Err(Error::Inadmissible(format!(
            "s = {s} must satisfy 0 <= s < g = {g}"
        )));
    }
    Ok(())
}

/// Number of points of the quadric over GF(q).
pub fn point_count(family: Family, q: u64, r: u32) -> BigUint {
    match family {
        Family::Parabolic => (pow(q, 2 * r) - 1u32) / (q - 1),
        Family::Hyperbolic => (pow(q, r + 1) - 1u32) * (pow(q, r) + 1u32) / (q - 1),
        Family::Elliptic => (pow(q, r) - 1u32) * (pow(q, r + 1) + 1u32) / (q - 1),
    }
}

/// Number of singular `s`-spaces of the quadric over GF(q).
///
/// Polar space of rank `R` and parameter `e` (0, 1, 2 for H, P, E):
/// `prod_{i=0}^{s} (q^(R-i) - 1)(q^(R+e-1-i) + 1) / (q^(i+1) - 1)`.
pub fn singular_subspace_count(family: Family, q: u64, r: u32, s: u32) -> BigUint {
    let (rank, e) = match family {
        Family::Hyperbolic => (r as i64 + 1, 0i64),
        Family::Parabolic => (r as i64, 1),
        Family::Elliptic => (r as i64, 2),
    };
    if s as i64 >= rank {
        return BigUint::zero();
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..=s as i64 {
        num *= minus1(q, rank - i) * plus1(q, rank + e - 1 - i);
        den *= minus1(q, i + 1);
    }
    num / den
}

/// Number of singular (s+1)-spaces through a fixed singular s-space.
pub fn spaces_through(family: Family, q: u64, r: u32, s: u32) -> BigUint {
    let (r, s) = (r as i64, s as i64);
    let (a, b) = match family {
        Family::Elliptic => (plus1(q, r - s), minus1(q, r - s - 1)),
        Family::Hyperbolic => (plus1(q, r - s - 1), minus1(q, r - s)),
        Family::Parabolic => (plus1(q, r - s - 1), minus1(q, r - s - 1)),
    };
    a * b / (q - 1)
}

/// Size of the switching set: points of type (ii).
pub fn x_size(family: Family, q: u64, r: u32, s: u32) -> BigUint {
    pow(q, s + 1) * spaces_through(family, q, r, s)
}

/// Lines through a point of an (s+1)-space inside that space.
pub fn f1_count(q: u64, s: u32) -> BigUint {
    minus1(q, s as i64 + 1) / (q - 1)
}

/// Degree of the subgraph induced on the switching set.
///
/// The second term carries a factor `q^b - 1`; when `b = 0` the term is
/// zero and its companion factor (which may have a negative exponent for
/// hyperbolic quadrics at s = g - 1) is never evaluated.
pub fn induced_degree(family: Family, q: u64, r: u32, s: u32) -> BigUint {
    let (r, s) = (r as i64, s as i64);
    let first = minus1(q, s + 1);
    let (a_exp, b_exp) = match family {
        Family::Elliptic => (r - s - 1, r - s - 2),
        Family::Hyperbolic => (r - s - 2, r - s - 1),
        Family::Parabolic => (r - s - 2, r - s - 2),
    };
    if b_exp == 0 {
        return first;
    }
    first + pow(q, (s + 2) as u32) * plus1(q, a_exp) * minus1(q, b_exp) / (q - 1)
}

/// Neighbours in the switching set of a type (iii) vertex: `q^s x` where
/// `x` is the number of singular (s+1)-spaces through the s-space.
///
/// Stated for elliptic quadrics; the hyperbolic and parabolic values use
/// the same construction and are reported as derived.
pub fn type3_neighbours(family: Family, q: u64, r: u32, s: u32) -> BigUint {
    pow(q, s) * spaces_through(family, q, r, s)
}

/// Maximal cliques of the point-graph (the generators), q = 2.
pub fn point_graph_cliques(family: Family, r: u32) -> BigUint {
    let r = r as i64;
    match family {
        Family::Elliptic => prod_2i_plus1(2, r + 1),
        Family::Hyperbolic => prod_2i_plus1(0, r),
        Family::Parabolic => prod_2i_plus1(1, r),
    }
}

/// Class A cliques of the switched graph: generators through the s-space.
pub fn n_a(family: Family, r: u32, s: u32) -> BigUint {
    let (r, s) = (r as i64, s as i64);
    match family {
        Family::Elliptic => prod_2i_plus1(2, r - s),
        Family::Hyperbolic => prod_2i_plus1(0, r - s - 1),
        Family::Parabolic => prod_2i_plus1(1, r - s - 1),
    }
}

/// Total maximal cliques of the switched graph, q = 2.
pub fn total_cliques(family: Family, r: u32, s: u32) -> BigUint {
    let (ri, si) = (r as i64, s as i64);
    let factor = match family {
        Family::Elliptic => pow(2, (ri + 2) as u32) - pow(2, (ri - si + 1) as u32) + 1u32,
        _ => pow(2, (ri + 1) as u32) - pow(2, (ri - si) as u32) + 1u32,
    };
    n_a(family, r, s) * factor
}

pub fn n_b(family: Family, r: u32, s: u32) -> BigUint {
    total_cliques(family, r, s) - n_a(family, r, s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerType<T> {
    #[serde(rename = "I")]
    pub i: T,
    #[serde(rename = "II")]
    pub ii: T,
    #[serde(rename = "III")]
    pub iii: T,
}

/// Maximal cliques through a vertex of each type, general column
/// (0 <= s < g - 1). Vacuous products evaluate to 1.
pub fn cliques_per_type_general(family: Family, r: u32, s: u32) -> PerType<BigUint> {
    let (r, s) = (r as i64, s as i64);
    let p = |e: i64| pow(2, e as u32);
    match family {
        Family::Elliptic => PerType {
            i: prod_2i_plus1(2, r - s) * (p(r + 1) - p(r - s + 1) + 1u32),
            ii: prod_2i_plus1(2, r - s - 1) * (p(r + 1) - p(r - s) + 1u32),
            iii: prod_2i_plus1(2, r - s),
        },
        Family::Hyperbolic => PerType {
            i: prod_2i_plus1(0, r - s - 1) * (p(r) - p(r - s) + 1u32),
            ii: prod_2i_plus1(0, r - s - 2) * (p(r) - p(r - s - 1) + 1u32),
            iii: prod_2i_plus1(0, r - s - 1),
        },
        Family::Parabolic => PerType {
            i: prod_2i_plus1(1, r - s - 1) * (p(r) - p(r - s) + 1u32),
            ii: prod_2i_plus1(1, r - s - 2) * (p(r) - p(r - s - 1) + 1u32),
            iii: prod_2i_plus1(1, r - s - 1),
        },
    }
}

/// Maximal cliques through a vertex of each type at s = g - 1.
pub fn cliques_per_type_last(family: Family, r: u32) -> PerType<BigUint> {
    let p = |e: u32| pow(2, e);
    match family {
        Family::Elliptic => PerType {
            i: BigUint::from(5u32) * (p(r + 1) - 7u32),
            ii: p(r + 1) - 3u32,
            iii: BigUint::from(5u32),
        },
        Family::Hyperbolic => PerType {
            i: BigUint::from(2u32) * (p(r) - 1u32),
            ii: p(r),
            iii: BigUint::from(2u32),
        },
        Family::Parabolic => PerType {
            i: BigUint::from(3u32) * (p(r) - 3u32),
            ii: p(r) - 1u32,
            iii: BigUint::from(3u32),
        },
    }
}

/// Column selected by predicate: the s = g - 1 column is never computed
/// from the general expression.
pub fn cliques_per_type(family: Family, r: u32, s: u32) -> PerType<BigUint> {
    if s as i64 == projective_index(family, r) - 1 {
        cliques_per_type_last(family, r)
    } else {
        cliques_per_type_general(family, r, s)
    }
}

/// Vertex-type composition `(I, II, III)` of Class A and Class B cliques.
pub fn clique_composition(g: u32, s: u32) -> (PerType<u64>, PerType<u64>) {
    let p = |e: u32| 1u64 << e;
    (
        PerType {
            i: p(s + 1) - 1,
            ii: p(g + 1) - p(s + 1),
            iii: 0,
        },
        PerType {
            i: p(s) - 1,
            ii: p(g) - p(s),
            iii: p(g),
        },
    )
}

/// Strongly regular parameters of the point-graph (and all switched graphs).
pub fn srg_params(family: Family, r: u32) -> Result<SrgParams> {
    check_family_r(family, r)?;
    let p = |e: u32| 1u64 << e;
    let (v, k, lambda, mu) = match family {
        Family::Elliptic => (
            p(2 * r + 1) - p(r) - 1,
            p(2 * r) - p(r) - 2,
            p(2 * r - 1) - p(r) - 3,
            p(2 * r - 1) - p(r - 1) - 1,
        ),
        Family::Hyperbolic => (
            p(2 * r + 1) + p(r) - 1,
            p(2 * r) + p(r) - 2,
            p(2 * r - 1) + p(r) - 3,
            p(2 * r - 1) + p(r - 1) - 1,
        ),
        Family::Parabolic => (
            p(2 * r) - 1,
            p(2 * r - 1) - 2,
            p(2 * r - 2) - 3,
            p(2 * r - 2) - 1,
        ),
    };
    Ok(SrgParams { v, k, lambda, mu })
}

/// Every closed-form quantity for one `(family, q, r, s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPrediction {
    pub family: Family,
    pub q: u64,
    pub r: u32,
    pub s: u32,
    pub g: i64,
    #[serde(with = "crate::bigstr")]
    pub points: BigUint,
    #[serde(with = "crate::bigstr")]
    pub x_size: BigUint,
    #[serde(with = "crate::bigstr")]
    pub induced_degree: BigUint,
    /// Type (iii) neighbours in the switching set.
    #[serde(with = "crate::bigstr")]
    pub y: BigUint,
    /// False when `y` is the hyperbolic/parabolic analogue (derived, not stated).
    pub y_stated: bool,
    #[serde(with = "crate::bigstr")]
    pub n_subspaces_s1: BigUint,
    #[serde(with = "crate::bigstr")]
    pub f1_count: BigUint,
    /// `2y == |X|`: the half-adjacency condition holds.
    pub half_condition: bool,
    #[serde(with = "crate::bigstr::opt")]
    pub total_cliques: Option<BigUint>,
    #[serde(with = "crate::bigstr::opt")]
    pub point_graph_cliques: Option<BigUint>,
    #[serde(with = "crate::bigstr::opt")]
    pub n_a: Option<BigUint>,
    #[serde(with = "crate::bigstr::opt")]
    pub n_b: Option<BigUint>,
    #[serde(with = "crate::bigstr::opt_per_type")]
    pub per_type_clique_counts: Option<PerType<BigUint>>,
    pub max_clique_size: Option<u64>,
    pub srg: Option<SrgParams>,
    pub graphs_constructed: i64,
    pub graphs_new: i64,
}

pub fn predict(family: Family, q: u64, r: u32, s: u32) -> Result<CountPrediction> {
    check_admissible(family, q, r, s)?;
    let g = projective_index(family, r);
    let x_size = x_size(family, q, r, s);
    let y = type3_neighbours(family, q, r, s);
    let half_condition = &y * 2u32 == x_size;
    let binary = q == 2;
    Ok(CountPrediction {
        family,
        q,
        r,
        s,
        g,
        points: point_count(family, q, r),
        induced_degree: induced_degree(family, q, r, s),
        y_stated: family == Family::Elliptic,
        n_subspaces_s1: spaces_through(family, q, r, s),
        f1_count: f1_count(q, s),
        half_condition,
        total_cliques: binary.then(|| total_cliques(family, r, s)),
        point_graph_cliques: binary.then(|| point_graph_cliques(family, r)),
        n_a: binary.then(|| n_a(family, r, s)),
        n_b: binary.then(|| n_b(family, r, s)),
        per_type_clique_counts: binary.then(|| cliques_per_type(family, r, s)),
        max_clique_size: binary.then(|| (1u64 << (g + 1)) - 1),
        srg: if binary {
            Some(srg_params(family, r)?)
        } else {
            None
        },
        graphs_constructed: g,
        graphs_new: g - 1,
        x_size,
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn elliptic_r3_s1() {
        let p = predict(Family::Elliptic, 2, 3, 1).unwrap();
        assert_eq!(p.x_size, big(20));
        assert_eq!(p.induced_degree, big(3));
        assert_eq!(p.total_cliques, Some(big(125)));
        assert_eq!(p.n_a, Some(big(5)));
        assert_eq!(p.n_b, Some(big(120)));
        assert_eq!(p.y, big(10));
        assert!(p.half_condition);
        assert_eq!(
            p.per_type_clique_counts,
            Some(PerType { i: big(45), ii: big(13), iii: big(5) })
        );
    }

    #[test]
    fn hyperbolic_examples() {
        assert_eq!(x_size(Family::Hyperbolic, 2, 2, 0), big(18));
        assert_eq!(induced_degree(Family::Hyperbolic, 2, 2, 0), big(9));
        // s = g - 1: the ill-formed companion factor is skipped
        assert_eq!(induced_degree(Family::Hyperbolic, 2, 2, 1), big(3));
        assert_eq!(total_cliques(Family::Hyperbolic, 2, 1), big(14));
        assert_eq!(
            cliques_per_type(Family::Hyperbolic, 2, 1),
            PerType { i: big(6), ii: big(4), iii: big(2) }
        );
    }

    #[test]
    fn elliptic_q3_breaks_half_condition() {
        let p = predict(Family::Elliptic, 3, 3, 1).unwrap();
        assert_ne!(&p.y * 2u32, p.x_size);
        assert!(!p.half_condition);
        assert!(p.total_cliques.is_none());
    }

    #[test]
    fn srg_params_examples() {
        let t = |f, r| srg_params(f, r).unwrap();
        assert_eq!(t(Family::Hyperbolic, 2), SrgParams { v: 35, k: 18, lambda: 9, mu: 9 });
        assert_eq!(t(Family::Parabolic, 3), SrgParams { v: 63, k: 30, lambda: 13, mu: 15 });
        assert_eq!(t(Family::Elliptic, 2), SrgParams { v: 27, k: 10, lambda: 1, mu: 5 });
        assert!(srg_params(Family::Elliptic, 1).is_err());
        assert!(srg_params(Family::Parabolic, 1).is_err());
        for f in Family::ALL {
            for r in r_min(f)..=7 {
                assert!(t(f, r).is_feasible(), "{f} r={r}");
                assert_eq!(BigUint::from(t(f, r).v), point_count(f, 2, r));
            }
        }
    }

    #[test]
    fn inadmissible_parameters() {
        assert!(predict(Family::Elliptic, 2, 3, 2).is_err());
        assert!(predict(Family::Hyperbolic, 1, 3, 0).is_err());
        assert!(predict(Family::Parabolic, 2, 1, 0).is_err());
    }

    #[test]
    fn last_column_agrees_with_general_under_empty_products() {
        for f in Family::ALL {
            for r in r_min(f)..=9 {
                let g = projective_index(f, r);
                if g < 1 {
                    continue;
                }
                let s = (g - 1) as u32;
                assert_eq!(
                    cliques_per_type_last(f, r),
                    cliques_per_type_general(f, r, s),
                    "{f} r={r}"
                );
            }
        }
    }

    /// Type-(iii) neighbours equal half the switching set exactly when q = 2.
    #[test]
    fn half_condition_iff_q2() {
        for q in 2u64..=5 {
            for r in 2..=6 {
                for s in 0..(r - 1) {
                    let p = predict(Family::Elliptic, q, r, s).unwrap();
                    assert_eq!(&p.y * 2u32 == p.x_size, q == 2, "q={q} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn clique_totals_distinguish_every_s() {
        for f in Family::ALL {
            for r in r_min(f)..=9 {
                let g = projective_index(f, r);
                let totals: Vec<BigUint> = (0..g).map(|s| total_cliques(f, r, s as u32)).collect();
                for a in 0..totals.len() {
                    for b in (a + 1)..totals.len() {
                        assert_ne!(totals[a], totals[b], "{f} r={r} s={a},{b}");
                    }
                }
                if g >= 1 {
                    assert_eq!(totals[0], point_graph_cliques(f, r));
                }
            }
        }
    }

    #[test]
    fn double_count_identity() {
        for f in Family::ALL {
            for r in r_min(f)..=8 {
                let g = projective_index(f, r);
                for s in 0..g as u32 {
                    let v = point_count(f, 2, r);
                    let n1 = (BigUint::from(2u32).pow(s + 1)) - 1u32;
                    let n2 = x_size(f, 2, r, s);
                    let n3 = &v - &n1 - &n2;
                    let per = cliques_per_type(f, r, s);
                    let lhs = n1 * per.i + n2 * per.ii + n3 * per.iii;
                    let size = BigUint::from((1u64 << (g + 1)) - 1);
                    assert_eq!(lhs, total_cliques(f, r, s) * size, "{f} r={r} s={s}");
                }
            }
        }
    }

    #[test]
    fn n_b_uses_generator_pairs() {
        // n_B = n_A * (2^(g+1) - 2^(g-s)) * (generators through a (g-1)-space, minus one)
        for f in Family::ALL {
            let others = match f {
                Family::Elliptic => 4u32,
                Family::Hyperbolic => 1,
                Family::Parabolic => 2,
            };
            for r in r_min(f)..=8 {
                let g = projective_index(f, r) as u32;
                for s in 0..g {
                    let hyperplanes = BigUint::from((1u64 << (g + 1)) - (1u64 << (g - s)));
                    assert_eq!(n_b(f, r, s), n_a(f, r, s) * hyperplanes * others);
                }
            }
        }
    }

    #[test]
    fn composition_sizes() {
        for g in 1..6u32 {
            for s in 0..g {
                let (a, b) = clique_composition(g, s);
                let size = (1u64 << (g + 1)) - 1;
                assert_eq!(a.i + a.ii + a.iii, size);
                assert_eq!(b.i + b.ii + b.iii, size);
            }
        }
    }
}
