//! Moment regions standing in for toric domains, and the polytope queries
//! the capacity computations consume: membership, diagonal, convexity,
//! inclusion, volume.
//!
//! A region lives in the nonnegative orthant of `R^n`. The named families
//! mirror the standard comparison domains (ellipsoid, polydisk, ball, cube,
//! cylinder, nondisjoint union of cylinders) and a half-space representation
//! covers free-form convex regions. Everything is exact except the Monte
//! Carlo volume of half-space regions, which is seeded and reported with a
//! confidence half-width.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::rational::{format_rational, rat, to_f64, Rational};
use crate::{Error, Result};

/// Default seed for Monte Carlo volume estimates; recorded in every output.
pub const DEFAULT_VOLUME_SEED: u64 = 42;
/// Sample count for Monte Carlo volume estimates.
pub const VOLUME_SAMPLES: u64 = 1_000_000;

/// A moment region in the nonnegative orthant.
///
/// Families are validated on construction: parameters strictly positive,
/// dimensions consistent, half-space offsets strictly positive so the origin
/// is interior to the region relative to the orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ToricRegion {
    /// `{ x >= 0 : sum x_i / a_i <= 1 }`, the simplex with axis vertices `a_i e_i`.
    Ellipsoid { a: Vec<Rational> },
    /// `{ x >= 0 : x_i <= a_i }`, a box.
    Polydisk { a: Vec<Rational> },
    /// Equal-parameter ellipsoid `E(a, ..., a)`.
    Ball { a: Rational, n: usize },
    /// Equal-parameter polydisk `P(a, ..., a)`.
    Cube { a: Rational, n: usize },
    /// `{ x >= 0 : x_1 <= a }`; unbounded for `n >= 2`.
    Cylinder { a: Rational, n: usize },
    /// `{ x >= 0 : min_i x_i <= delta }`; unbounded for `n >= 2`, concave.
    NCylinders { delta: Rational, n: usize },
    /// `{ x >= 0 : <normals[i], x> <= offsets[i] for all i }`.
    HRep {
        normals: Vec<Vec<Rational>>,
        offsets: Vec<Rational>,
    },
}

/// Outcome of a volume query.
#[derive(Debug, Clone, PartialEq)]
pub enum Volume {
    Exact(Rational),
    /// Monte Carlo estimate, flagged approximate and reproducible by seed.
    MonteCarlo {
        estimate: f64,
        half_width: f64,
        seed: u64,
        samples: u64,
    },
}

fn require_positive(x: &Rational, what: &str) -> Result<()> {
    if x.is_positive() {
        Ok(())
    } else {
        Err(Error::Invalid(format!("{what} must be positive")))
    }
}

fn require_dim(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Invalid("dimension must be positive".into()))
    } else {
        Ok(())
    }
}

impl ToricRegion {
    pub fn ellipsoid(a: Vec<Rational>) -> Result<Self> {
        require_dim(a.len())?;
        for x in &a {
            require_positive(x, "ellipsoid parameter")?;
        }
        Ok(ToricRegion::Ellipsoid { a })
    }

    pub fn polydisk(a: Vec<Rational>) -> Result<Self> {
        require_dim(a.len())?;
        for x in &a {
            require_positive(x, "polydisk parameter")?;
        }
        Ok(ToricRegion::Polydisk { a })
    }

    pub fn ball(a: Rational, n: usize) -> Result<Self> {
        require_dim(n)?;
        require_positive(&a, "ball parameter")?;
        Ok(ToricRegion::Ball { a, n })
    }

    pub fn cube(a: Rational, n: usize) -> Result<Self> {
        require_dim(n)?;
        require_positive(&a, "cube parameter")?;
        Ok(ToricRegion::Cube { a, n })
    }

    pub fn cylinder(a: Rational, n: usize) -> Result<Self> {
        require_dim(n)?;
        require_positive(&a, "cylinder parameter")?;
        Ok(ToricRegion::Cylinder { a, n })
    }

    pub fn ncylinders(delta: Rational, n: usize) -> Result<Self> {
        require_dim(n)?;
        require_positive(&delta, "ncylinders parameter")?;
        Ok(ToricRegion::NCylinders { delta, n })
    }

    pub fn hrep(normals: Vec<Vec<Rational>>, offsets: Vec<Rational>) -> Result<Self> {
        if normals.len() != offsets.len() {
            return Err(Error::Invalid(
                "hrep normals and offsets must have equal length".into(),
            ));
        }
        if normals.is_empty() {
            return Err(Error::Invalid("hrep needs at least one constraint".into()));
        }
        let n = normals[0].len();
        require_dim(n)?;
        for row in &normals {
            if row.len() != n {
                return Err(Error::Invalid("hrep normals must share a dimension".into()));
            }
        }
        for c in &offsets {
            require_positive(c, "hrep offset")?;
        }
        Ok(ToricRegion::HRep { normals, offsets })
    }

    /// Number of moment coordinates (half the symplectic dimension).
    pub fn dimension(&self) -> usize {
        match self {
            ToricRegion::Ellipsoid { a } | ToricRegion::Polydisk { a } => a.len(),
            ToricRegion::Ball { n, .. }
            | ToricRegion::Cube { n, .. }
            | ToricRegion::Cylinder { n, .. }
            | ToricRegion::NCylinders { n, .. } => *n,
            ToricRegion::HRep { normals, .. } => normals[0].len(),
        }
    }

    /// Exact membership test. Points must be nonnegative and of matching
    /// dimension.
    pub fn contains_point(&self, x: &[Rational]) -> Result<bool> {
        if x.len() != self.dimension() {
            return Err(Error::Invalid(format!(
                "point dimension {} does not match region dimension {}",
                x.len(),
                self.dimension()
            )));
        }
        if x.iter().any(|v| v.is_negative()) {
            return Err(Error::Invalid("point has a negative entry".into()));
        }
        Ok(match self {
            ToricRegion::Ellipsoid { a } => {
                x.iter().zip(a).map(|(xi, ai)| xi / ai).sum::<Rational>() <= rat(1)
            }
            ToricRegion::Ball { a, .. } => x.iter().sum::<Rational>() <= *a,
            ToricRegion::Polydisk { a } => x.iter().zip(a).all(|(xi, ai)| xi <= ai),
            ToricRegion::Cube { a, .. } => x.iter().all(|xi| xi <= a),
            ToricRegion::Cylinder { a, .. } => x[0] <= *a,
            ToricRegion::NCylinders { delta, .. } => x.iter().min().expect("n >= 1") <= delta,
            ToricRegion::HRep { normals, offsets } => normals
                .iter()
                .zip(offsets)
                .all(|(v, c)| dot(v, x) <= *c),
        })
    }

    /// Largest `t` such that `(t, ..., t)` lies in the region.
    pub fn diagonal(&self) -> Result<Rational> {
        match self {
            ToricRegion::Ellipsoid { a } => {
                let inv_sum: Rational = a.iter().map(|ai| rat(1) / ai).sum();
                Ok(rat(1) / inv_sum)
            }
            ToricRegion::Ball { a, n } => Ok(a / rat(*n as i64)),
            ToricRegion::Polydisk { a } => Ok(a.iter().min().expect("n >= 1").clone()),
            ToricRegion::Cube { a, .. } => Ok(a.clone()),
            ToricRegion::Cylinder { a, .. } => Ok(a.clone()),
            ToricRegion::NCylinders { delta, .. } => Ok(delta.clone()),
            ToricRegion::HRep { normals, offsets } => normals
                .iter()
                .zip(offsets)
                .filter_map(|(v, c)| {
                    let along = v.iter().sum::<Rational>();
                    along.is_positive().then(|| c / along)
                })
                .min()
                .ok_or(Error::UnboundedDiagonal),
        }
    }

    /// Whether the symmetrized region is convex. Half-space regions are
    /// certified only in canonical form (all normals componentwise
    /// nonnegative); anything else reports `false`.
    pub fn is_convex_toric(&self) -> bool {
        match self {
            ToricRegion::Ellipsoid { .. }
            | ToricRegion::Ball { .. }
            | ToricRegion::Cylinder { .. }
            | ToricRegion::Polydisk { .. }
            | ToricRegion::Cube { .. } => true,
            ToricRegion::NCylinders { .. } => false,
            ToricRegion::HRep { .. } => self.is_canonical_convex(),
        }
    }

    /// Whether the orthant complement of the region is convex.
    pub fn is_concave_toric(&self) -> bool {
        matches!(
            self,
            ToricRegion::Ellipsoid { .. }
                | ToricRegion::Ball { .. }
                | ToricRegion::Cylinder { .. }
                | ToricRegion::NCylinders { .. }
        )
    }

    /// Diagnostic for convexity verdicts that are "undecided" rather than
    /// genuinely negative.
    pub fn convexity_note(&self) -> Option<&'static str> {
        match self {
            ToricRegion::HRep { .. } if !self.is_canonical_convex() => {
                Some("convexity undecided: hrep not in canonical form (normals >= 0)")
            }
            ToricRegion::HRep { .. } => {
                Some("concavity undecided for hrep regions; reported false")
            }
            _ => None,
        }
    }

    fn is_canonical_convex(&self) -> bool {
        match self {
            ToricRegion::HRep { normals, .. } => normals
                .iter()
                .all(|row| row.iter().all(|v| !v.is_negative())),
            _ => false,
        }
    }

    /// Convex regions that contain, with any point, the whole box below it.
    fn is_convex_downward_closed(&self) -> bool {
        match self {
            ToricRegion::NCylinders { .. } => false,
            ToricRegion::HRep { .. } => self.is_canonical_convex(),
            _ => true,
        }
    }

    /// `sup { t : t e_j  in region }`, or `None` when that ray is unbounded.
    pub fn axis_bound(&self, j: usize) -> Option<Rational> {
        debug_assert!(j < self.dimension());
        match self {
            ToricRegion::Ellipsoid { a } | ToricRegion::Polydisk { a } => Some(a[j].clone()),
            ToricRegion::Ball { a, .. } | ToricRegion::Cube { a, .. } => Some(a.clone()),
            ToricRegion::Cylinder { a, n } => {
                if j == 0 || *n == 1 {
                    Some(a.clone())
                } else {
                    None
                }
            }
            ToricRegion::NCylinders { delta, n } => (*n == 1).then(|| delta.clone()),
            ToricRegion::HRep { normals, offsets } => normals
                .iter()
                .zip(offsets)
                .filter_map(|(v, c)| v[j].is_positive().then(|| c / &v[j]))
                .min(),
        }
    }

    /// Whether the region is bounded.
    pub fn is_bounded(&self) -> bool {
        match self {
            ToricRegion::Ellipsoid { .. }
            | ToricRegion::Ball { .. }
            | ToricRegion::Polydisk { .. }
            | ToricRegion::Cube { .. } => true,
            ToricRegion::Cylinder { n, .. } | ToricRegion::NCylinders { n, .. } => *n == 1,
            // A canonical hrep region lies inside the box of its axis bounds.
            ToricRegion::HRep { .. } => {
                self.is_canonical_convex()
                    && (0..self.dimension()).all(|j| self.axis_bound(j).is_some())
            }
        }
    }

    /// Exact inclusion decision for the supported pairs.
    ///
    /// The inner region must be an ellipsoid, polydisk, ball or cube. For a
    /// convex downward-closed outer region, inclusion reduces to membership
    /// of the inner region's extreme vertices; for an `NCylinders` outer
    /// region it reduces to comparing the inner diagonal with `delta`.
    pub fn includes(&self, inner: &ToricRegion) -> Result<bool> {
        if self.dimension() != inner.dimension() {
            return Err(Error::Invalid(
                "inclusion query across different dimensions".into(),
            ));
        }
        let vertices: Vec<Vec<Rational>> = match inner {
            ToricRegion::Ellipsoid { a } => (0..a.len())
                .map(|j| {
                    let mut v = vec![rat(0); a.len()];
                    v[j] = a[j].clone();
                    v
                })
                .collect(),
            ToricRegion::Ball { a, n } => (0..*n)
                .map(|j| {
                    let mut v = vec![rat(0); *n];
                    v[j] = a.clone();
                    v
                })
                .collect(),
            ToricRegion::Polydisk { a } => vec![a.clone()],
            ToricRegion::Cube { a, n } => vec![vec![a.clone(); *n]],
            _ => return Err(Error::UnsupportedInclusion),
        };
        if let ToricRegion::NCylinders { delta, .. } = self {
            // max over the inner region of the min coordinate is its diagonal
            return Ok(inner.diagonal()? <= *delta);
        }
        if !self.is_convex_downward_closed() {
            return Err(Error::UnsupportedInclusion);
        }
        for v in &vertices {
            if !self.contains_point(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Euclidean volume of the region. Exact for the closed-form families,
    /// Monte Carlo (seeded, approximate) for half-space regions.
    pub fn volume(&self, seed: Option<u64>) -> Result<Volume> {
        if !self.is_bounded() {
            return Err(Error::InfiniteVolume);
        }
        match self {
            ToricRegion::Ellipsoid { a } => Ok(Volume::Exact(
                a.iter().product::<Rational>() / factorial(a.len()),
            )),
            ToricRegion::Ball { a, n } => {
                let mut p = Rational::one();
                for _ in 0..*n {
                    p *= a;
                }
                Ok(Volume::Exact(p / factorial(*n)))
            }
            ToricRegion::Polydisk { a } => Ok(Volume::Exact(a.iter().product())),
            ToricRegion::Cube { a, n } => {
                let mut p = Rational::one();
                for _ in 0..*n {
                    p *= a;
                }
                Ok(Volume::Exact(p))
            }
            ToricRegion::Cylinder { a, .. } => Ok(Volume::Exact(a.clone())),
            ToricRegion::NCylinders { delta, .. } => Ok(Volume::Exact(delta.clone())),
            ToricRegion::HRep { .. } => Ok(self.monte_carlo_volume(
                seed.unwrap_or(DEFAULT_VOLUME_SEED),
                VOLUME_SAMPLES,
            )),
        }
    }

    /// Rejection-sampling volume estimate inside the axis-bound box.
    /// Deterministic for a fixed seed.
    pub fn monte_carlo_volume(&self, seed: u64, samples: u64) -> Volume {
        let n = self.dimension();
        let bounds: Vec<f64> = (0..n)
            .map(|j| to_f64(&self.axis_bound(j).expect("bounded region")))
            .collect();
        let box_volume: f64 = bounds.iter().product();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut hits: u64 = 0;
        let mut x = vec![0.0; n];
        for _ in 0..samples {
            for (xi, b) in x.iter_mut().zip(&bounds) {
                *xi = rng.gen_range(0.0..*b);
            }
            if self.contains_point_f64(&x) {
                hits += 1;
            }
        }
        let p = hits as f64 / samples as f64;
        Volume::MonteCarlo {
            estimate: box_volume * p,
            half_width: 1.96 * box_volume * (p * (1.0 - p) / samples as f64).sqrt(),
            seed,
            samples,
        }
    }

    /// Approximate membership used by the Monte Carlo estimator.
    pub fn contains_point_f64(&self, x: &[f64]) -> bool {
        match self {
            ToricRegion::Ellipsoid { a } => {
                x.iter().zip(a).map(|(xi, ai)| xi / to_f64(ai)).sum::<f64>() <= 1.0
            }
            ToricRegion::Ball { a, .. } => x.iter().sum::<f64>() <= to_f64(a),
            ToricRegion::Polydisk { a } => x.iter().zip(a).all(|(xi, ai)| *xi <= to_f64(ai)),
            ToricRegion::Cube { a, .. } => x.iter().all(|xi| *xi <= to_f64(a)),
            ToricRegion::Cylinder { a, .. } => x[0] <= to_f64(a),
            ToricRegion::NCylinders { delta, .. } => {
                x.iter().cloned().fold(f64::INFINITY, f64::min) <= to_f64(delta)
            }
            ToricRegion::HRep { normals, offsets } => {
                normals.iter().zip(offsets).all(|(v, c)| {
                    v.iter()
                        .zip(x)
                        .map(|(vi, xi)| to_f64(vi) * xi)
                        .sum::<f64>()
                        <= to_f64(c)
                })
            }
        }
    }

    /// The region scaled by a positive factor (half-space offsets scale,
    /// normals stay fixed).
    pub fn scale(&self, alpha: &Rational) -> Result<ToricRegion> {
        require_positive(alpha, "scale factor")?;
        Ok(match self {
            ToricRegion::Ellipsoid { a } => ToricRegion::Ellipsoid {
                a: a.iter().map(|x| x * alpha).collect(),
            },
            ToricRegion::Polydisk { a } => ToricRegion::Polydisk {
                a: a.iter().map(|x| x * alpha).collect(),
            },
            ToricRegion::Ball { a, n } => ToricRegion::Ball { a: a * alpha, n: *n },
            ToricRegion::Cube { a, n } => ToricRegion::Cube { a: a * alpha, n: *n },
            ToricRegion::Cylinder { a, n } => ToricRegion::Cylinder { a: a * alpha, n: *n },
            ToricRegion::NCylinders { delta, n } => ToricRegion::NCylinders {
                delta: delta * alpha,
                n: *n,
            },
            ToricRegion::HRep { normals, offsets } => ToricRegion::HRep {
                normals: normals.clone(),
                offsets: offsets.iter().map(|c| c * alpha).collect(),
            },
        })
    }

    /// Family tag used in serialized domain specs.
    pub fn kind_name(&self) -> &'static str {
        match self {
            ToricRegion::Ellipsoid { .. } => "ellipsoid",
            ToricRegion::Polydisk { .. } => "polydisk",
            ToricRegion::Ball { .. } => "ball",
            ToricRegion::Cube { .. } => "cube",
            ToricRegion::Cylinder { .. } => "cylinder",
            ToricRegion::NCylinders { .. } => "ncyl",
            ToricRegion::HRep { .. } => "hrep",
        }
    }
}

impl fmt::Display for ToricRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[Rational]| {
            xs.iter()
                .map(format_rational)
                .collect::<Vec<_>>()
                .join(",")
        };
        match self {
            ToricRegion::Ellipsoid { a } => write!(f, "E({})", list(a)),
            ToricRegion::Polydisk { a } => write!(f, "P({})", list(a)),
            ToricRegion::Ball { a, n } => write!(f, "B({};n={n})", format_rational(a)),
            ToricRegion::Cube { a, n } => write!(f, "C({};n={n})", format_rational(a)),
            ToricRegion::Cylinder { a, n } => write!(f, "Z({};n={n})", format_rational(a)),
            ToricRegion::NCylinders { delta, n } => {
                write!(f, "N({};n={n})", format_rational(delta))
            }
            ToricRegion::HRep { normals, .. } => write!(f, "HRep({} rows)", normals.len()),
        }
    }
}

fn dot(v: &[Rational], x: &[Rational]) -> Rational {
    v.iter().zip(x).map(|(a, b)| a * b).sum()
}

fn factorial(n: usize) -> Rational {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rational::from_integer(f)
}
