//! Exact-integer planar primitives, point-set validation and fixture generators.
//!
//! Every predicate here is evaluated on `i64` coordinates bounded by
//! [`MAX_COORD`], so the cross products involved never exceed `2^44` and are
//! exact.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::CheckedMul;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Degeneracy, Error, Result};

/// Largest absolute coordinate accepted by [`PointSet::new`].
pub const MAX_COORD: i64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl std::ops::Sub for Point {
    type Output = Point;
    fn sub(self, other: Point) -> Point {
        Point::new(self.x - other.x, self.y - other.y)
    }
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    pub fn dot(self, other: Point) -> i64 {
        self.x * other.x + self.y * other.y
    }

    pub fn cross(self, other: Point) -> i64 {
        self.x * other.y - self.y * other.x
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.x, self.y)
    }
}

/// Sign of the determinant of `(q - p, r - p)`: `+1` counterclockwise, `-1`
/// clockwise, `0` collinear.
pub fn orientation(p: Point, q: Point, r: Point) -> i32 {
    (q - p).cross(r - p).signum() as i32
}

/// First degeneracy found in `points`, scanning pairs before triples.
pub fn find_degeneracy(points: &[Point]) -> Option<Degeneracy> {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            if points[i] == points[j] {
                return Some(Degeneracy::Duplicate(i, j));
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if orientation(points[i], points[j], points[k]) == 0 {
                    return Some(Degeneracy::Collinear(i, j, k));
                }
            }
        }
    }
    None
}

/// True iff the points are pairwise distinct and no three are collinear.
pub fn validate_general_position(points: &[Point]) -> bool {
    find_degeneracy(points).is_none()
}

/// An ordered list of points in general position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointSet {
    points: Vec<Point>,
}

impl PointSet {
    /// Validates magnitude and general position; collinear or duplicate input
    /// is rejected, never perturbed.
    pub fn new(points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points
            .iter()
            .find(|p| p.x.abs() > MAX_COORD || p.y.abs() > MAX_COORD)
        {
            return Err(Error::CoordinateTooLarge(p.x, p.y));
        }
        if let Some(d) = find_degeneracy(&points) {
            return Err(d.into());
        }
        Ok(PointSet { points })
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| Point::new(x, y)).collect())
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn into_points(self) -> Vec<Point> {
        self.points
    }

    pub(crate) fn require_at_least(&self, n: usize) -> Result<()> {
        if self.len() < n {
            Err(Degeneracy::TooFew(self.len()).into())
        } else {
            Ok(())
        }
    }
}

impl std::ops::Index<usize> for PointSet {
    type Output = Point;
    fn index(&self, i: usize) -> &Point {
        &self.points[i]
    }
}

/// Number of points on the convex hull boundary (monotone chain).
pub fn convex_hull_size(set: &PointSet) -> Result<usize> {
    set.require_at_least(3)?;
    let mut pts = set.points().to_vec();
    pts.sort_unstable();
    let chain = |iter: &mut dyn Iterator<Item = Point>| {
        let mut out: Vec<Point> = Vec::new();
        for p in iter {
            while out.len() >= 2 && orientation(out[out.len() - 2], out[out.len() - 1], p) <= 0 {
                out.pop();
            }
            out.push(p);
        }
        // the endpoint is shared with the other chain
        out.len() - 1
    };
    let lower = chain(&mut pts.iter().copied());
    let upper = chain(&mut pts.iter().rev().copied());
    Ok(lower + upper)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GeneratorKind {
    /// Points on the parabola `y = x^2` at seeded, strictly increasing abscissae.
    Convex,
    /// Uniform integer points in a disk, rejection-sampled into general position.
    RandomDisk,
    /// `n/3` points on each of three rays at 90, 210 and 330 degrees.
    ThreeRay,
}

impl FromStr for GeneratorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "convex" => Ok(GeneratorKind::Convex),
            "random-disk" => Ok(GeneratorKind::RandomDisk),
            "three-ray" => Ok(GeneratorKind::ThreeRay),
            other => Err(Error::InvalidArgument(format!(
                "unknown generator kind {other:?}"
            ))),
        }
    }
}

impl fmt::Display for GeneratorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorKind::Convex => "convex",
            GeneratorKind::RandomDisk => "random-disk",
            GeneratorKind::ThreeRay => "three-ray",
        })
    }
}

/// Default radius ratio between consecutive points on a three-ray arm.
pub const DEFAULT_GROWTH: i64 = 8;

const DISK_RADIUS: i64 = 1 << 12;
const THREE_RAY_BASE: i64 = 64;
const MAX_ATTEMPTS: usize = 256;

// cos 30 degrees, scaled by 10^6
const COS30_MICRO: i128 = 866_025;

/// Deterministic fixture generator. `growth` only affects `ThreeRay`.
pub fn generate(kind: GeneratorKind, n: usize, seed: u64, growth: Rational64) -> Result<PointSet> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("n = {n}, need n >= 3")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match kind {
        GeneratorKind::Convex => convex(n, &mut rng),
        GeneratorKind::RandomDisk => random_disk(n, &mut rng),
        GeneratorKind::ThreeRay => three_ray(n, growth, &mut rng),
    }
}

fn convex(n: usize, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    let mut xs = Vec::with_capacity(n);
    let mut x: i64 = 0;
    for _ in 0..n {
        x += rng.random_range(1..=3);
        xs.push(x);
    }
    let shift = xs[n / 2];
    PointSet::new(
        xs.into_iter()
            .map(|x| Point::new(x - shift, (x - shift) * (x - shift)))
            .collect(),
    )
}

fn random_disk(n: usize, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    let mut pts: Vec<Point> = Vec::with_capacity(n);
    let mut rejected = 0;
    while pts.len() < n {
        let p = Point::new(
            rng.random_range(-DISK_RADIUS..=DISK_RADIUS),
            rng.random_range(-DISK_RADIUS..=DISK_RADIUS),
        );
        if p.dot(p) > DISK_RADIUS * DISK_RADIUS {
            continue;
        }
        pts.push(p);
        if !extends_general_position(&pts) {
            pts.pop();
            rejected += 1;
            if rejected > MAX_ATTEMPTS * n {
                return Err(Error::InvalidArgument(
                    "random-disk sampling failed to reach general position".into(),
                ));
            }
        }
    }
    PointSet::new(pts)
}

/// Checks only the triples and pairs involving the last point.
fn extends_general_position(pts: &[Point]) -> bool {
    let Some((&last, rest)) = pts.split_last() else {
        return true;
    };
    for (i, &p) in rest.iter().enumerate() {
        if p == last {
            return false;
        }
        for &q in &rest[i + 1..] {
            if orientation(p, q, last) == 0 {
                return false;
            }
        }
    }
    true
}

fn three_ray(n: usize, growth: Rational64, rng: &mut ChaCha8Rng) -> Result<PointSet> {
    if !n.is_multiple_of(3) {
        return Err(Error::InvalidArgument(format!(
            "three-ray needs n divisible by 3, got {n}"
        )));
    }
    if growth <= Rational64::from_integer(1) {
        return Err(Error::InvalidArgument(format!(
            "growth must exceed 1, got {growth}"
        )));
    }
    let per_ray = n / 3;
    let mut radii = Vec::with_capacity(per_ray);
    let mut r = Rational64::from_integer(THREE_RAY_BASE);
    for _ in 0..per_ray {
        radii.push(r.to_integer());
        r = r
            .checked_mul(&growth)
            .ok_or_else(|| Error::InvalidArgument("three-ray radius overflow".into()))?;
    }
    // unit directions at 90, 210, 330 degrees, scaled by 10^6
    let dirs: [(i128, i128); 3] = [
        (0, 1_000_000),
        (-COS30_MICRO, -500_000),
        (COS30_MICRO, -500_000),
    ];
    let mut base = Vec::with_capacity(n);
    for &(dx, dy) in &dirs {
        for &r in &radii {
            let r = r as i128;
            base.push(Point::new(
                div_round(r * dx, 1_000_000) as i64,
                div_round(r * dy, 1_000_000) as i64,
            ));
        }
    }
    for _ in 0..MAX_ATTEMPTS {
        let pts: Vec<Point> = base
            .iter()
            .map(|p| {
                Point::new(
                    p.x + rng.random_range(-1..=1),
                    p.y + rng.random_range(-1..=1),
                )
            })
            .collect();
        match PointSet::new(pts) {
            Ok(set) => return Ok(set),
            Err(Error::Degenerate(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::InvalidArgument(
        "three-ray perturbation failed to reach general position".into(),
    ))
}

fn div_round(num: i128, den: i128) -> i128 {
    let q = num.div_euclid(den);
    if 2 * num.rem_euclid(den) >= den {
        q + 1
    } else {
        q
    }
}
