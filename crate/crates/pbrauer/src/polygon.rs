//! Newton polygons with lattice breakpoints and the Hodge–Newton polygon.
//!
//! A Newton polygon is stored as its canonical vertex list: the lower convex
//! boundary of a convex lattice path starting at the origin, with strictly
//! increasing nonnegative segment slopes. The Hodge–Newton polygon of such a
//! polygon is the *upmost integral minorant*: the largest polygon with
//! integer slopes and lattice vertices lying weakly below it with the same
//! endpoints. It exists, is unique, and its slope-`i` multiplicity equals
//! the slope number `m^{i,n-i}` of the underlying profile.

use crate::error::{Error, Result};
use crate::slopes::{Rational, SlopeMultiset};
use num::rational::Ratio;
use num::Zero;

/// A convex lattice polygon: vertices with strictly increasing x, first
/// vertex at the origin, strictly increasing nonnegative slopes between
/// consecutive segments (so the vertex list is canonical — no collinear
/// interior vertices).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    vertices: Vec<(i64, i64)>,
}

impl NewtonPolygon {
    pub fn new(vertices: Vec<(i64, i64)>) -> Result<NewtonPolygon> {
        if vertices.is_empty() {
            return Err(Error::InvalidArgument(
                "a Newton polygon needs at least one vertex".to_string(),
            ));
        }
        if vertices[0] != (0, 0) {
            return Err(Error::InvalidArgument(format!(
                "the first vertex must be (0,0), got {:?}",
                vertices[0]
            )));
        }
        let mut prev_slope: Option<Rational> = None;
        for w in vertices.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            if x1 <= x0 {
                return Err(Error::InvalidArgument(format!(
                    "x-coordinates must strictly increase, got {x0} then {x1}"
                )));
            }
            let slope = Ratio::new(y1 - y0, x1 - x0);
            if slope < Rational::zero() {
                return Err(Error::InvalidArgument(format!(
                    "segment slope {slope} is negative"
                )));
            }
            if let Some(p) = prev_slope {
                if slope <= p {
                    return Err(Error::InvalidArgument(format!(
                        "segment slopes must strictly increase (convexity / canonical \
                         vertices), got {p} then {slope}"
                    )));
                }
            }
            prev_slope = Some(slope);
        }
        Ok(NewtonPolygon { vertices })
    }

    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    /// x-extent (total multiplicity of the underlying slope multiset).
    pub fn width(&self) -> i64 {
        self.vertices.last().unwrap().0
    }

    /// Final height.
    pub fn height(&self) -> i64 {
        self.vertices.last().unwrap().1
    }

    /// Exact height of the polygon at any x in `[0, width]`.
    pub fn height_at(&self, x: Rational) -> Result<Rational> {
        let width = Rational::from_integer(self.width());
        if x < Rational::zero() || x > width {
            return Err(Error::InvalidArgument(format!(
                "x = {x} outside the polygon range [0, {width}]"
            )));
        }
        if self.vertices.len() == 1 {
            return Ok(Rational::zero());
        }
        for w in self.vertices.windows(2) {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            if x <= Rational::from_integer(x1) {
                let slope = Ratio::new(y1 - y0, x1 - x0);
                return Ok(Rational::from_integer(y0)
                    + slope * (x - Rational::from_integer(x0)));
            }
        }
        unreachable!("x was validated to lie within the polygon range")
    }
}

/// Build the Newton polygon of a slope multiset: walk the slopes in
/// increasing order, each slope block of multiplicity `m` contributing a
/// segment of width `m`. Every breakpoint (including the endpoint) must be a
/// lattice point; otherwise the multiset does not define a lattice polygon
/// and an integrality violation is reported.
pub fn polygon_from_slopes(ms: &SlopeMultiset) -> Result<NewtonPolygon> {
    let mut vertices = vec![(0i64, 0i64)];
    let mut x: i64 = 0;
    let mut y = Rational::zero();
    for &(s, m) in ms.entries() {
        x += m as i64;
        y += s * Rational::from_integer(m as i64);
        if !y.is_integer() {
            return Err(Error::IntegralityViolation(format!(
                "breakpoint after slope block {s}^{m} is ({x}, {y}), not a lattice point"
            )));
        }
        vertices.push((x, y.to_integer()));
    }
    NewtonPolygon::new(vertices)
}

/// Recover the slope multiset of a polygon: each segment contributes its
/// slope with multiplicity equal to its width. Inverse of
/// [`polygon_from_slopes`] on lattice multisets.
pub fn slopes_from_polygon(np: &NewtonPolygon) -> Result<SlopeMultiset> {
    let pairs: Vec<(Rational, u64)> = np
        .vertices()
        .windows(2)
        .map(|w| {
            let (x0, y0) = w[0];
            let (x1, y1) = w[1];
            (Ratio::new(y1 - y0, x1 - x0), (x1 - x0) as u64)
        })
        .collect();
    SlopeMultiset::from_pairs(&pairs)
}

/// Does `a` lie weakly below `b` everywhere? Both polygons must span the
/// same x-range and share both endpoints; comparing polygons of different
/// spans is a caller error.
pub fn lies_below(a: &NewtonPolygon, b: &NewtonPolygon) -> Result<bool> {
    if a.vertices().first() != b.vertices().first()
        || a.vertices().last() != b.vertices().last()
    {
        return Err(Error::InvalidArgument(format!(
            "polygons must share endpoints: {:?}..{:?} vs {:?}..{:?}",
            a.vertices().first(),
            a.vertices().last(),
            b.vertices().first(),
            b.vertices().last()
        )));
    }
    // piecewise-linear functions: a <= b everywhere iff it holds at every
    // breakpoint of either polygon
    for &(x, y) in a.vertices() {
        if Rational::from_integer(y) > b.height_at(Rational::from_integer(x))? {
            return Ok(false);
        }
    }
    for &(x, _) in b.vertices() {
        let xr = Rational::from_integer(x);
        if a.height_at(xr)? > b.height_at(xr)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Hodge–Newton polygon: the upmost lattice polygon with integer slopes
/// lying weakly below `np` with the same endpoints.
///
/// Construction: for each integer `i`, the best support line of slope `i`
/// under the polygon has intercept `d_i = min_x (np(x) - i*x)`, attained at a
/// vertex (so `d_i` is an integer — the input has lattice vertices). The
/// upper envelope of these support lines is the answer; its slope-`i`
/// multiplicity is the discrete second difference `2*d_i - d_{i-1} - d_{i+1}`,
/// which is nonnegative by concavity of `i -> d_i`.
pub fn hodge_newton_polygon(np: &NewtonPolygon) -> Result<NewtonPolygon> {
    if np.vertices().len() == 1 {
        return Ok(np.clone());
    }
    let verts = np.vertices();
    let (xmax, ymax) = *verts.last().unwrap();
    // the largest integer slope that can occur is ceil of the last segment's
    // slope; intercepts are needed one index beyond each side
    let last = verts.len() - 1;
    let max_slope = Ratio::new(verts[last].1 - verts[last - 1].1, verts[last].0 - verts[last - 1].0)
        .ceil()
        .to_integer();
    let intercept = |i: i64| -> i64 {
        verts
            .iter()
            .map(|&(x, y)| y - i * x)
            .min()
            .expect("nonempty vertex list")
    };
    let mut mults: Vec<(i64, i64)> = Vec::new(); // (slope, multiplicity)
    let mut total_x: i64 = 0;
    let mut total_y: i64 = 0;
    for i in 0..=max_slope {
        let mu = 2 * intercept(i) - intercept(i - 1) - intercept(i + 1);
        if mu < 0 {
            return Err(Error::Internal(format!(
                "negative slope-{i} multiplicity {mu} in the support-line envelope; \
                 the input polygon must have had non-lattice vertices"
            )));
        }
        if mu > 0 {
            mults.push((i, mu));
            total_x += mu;
            total_y += i * mu;
        }
    }
    if total_x != xmax || total_y != ymax {
        return Err(Error::Internal(format!(
            "support-line envelope has endpoint ({total_x}, {total_y}), expected \
             ({xmax}, {ymax})"
        )));
    }
    let pairs: Vec<(Rational, u64)> = mults
        .into_iter()
        .map(|(s, m)| (Rational::from_integer(s), m as u64))
        .collect();
    polygon_from_slopes(&SlopeMultiset::from_pairs(&pairs)?)
}
