//! Planar primitives: points, segments, polylines with arc-length
//! parametrization, and shortest-distance computations with witness points.
//!
//! Curves are polylines only; smooth curves must be pre-sampled by the
//! caller. "Clockwise" always means increasing vertex index. Equality
//! tolerance is [`GEOM_EPS`] meters; coordinates are assumed to stay within
//! `[-1e6, 1e6]`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance (meters) for geometric equality tests.
pub const GEOM_EPS: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point2D {
    pub x: f64,
    pub y: f64,
}

impl Point2D {
    pub fn new(x: f64, y: f64) -> Self {
        Point2D { x, y }
    }

    /// Euclidean distance to `other`.
    pub fn dist(&self, other: Point2D) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    fn lerp(&self, other: Point2D, t: f64) -> Point2D {
        Point2D::new(self.x + (other.x - self.x) * t, self.y + (other.y - self.y) * t)
    }
}

/// A straight segment. Zero-length segments are permitted; a degenerate
/// segment behaves as a point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Segment {
    pub a: Point2D,
    pub b: Point2D,
}

impl Segment {
    pub fn new(a: Point2D, b: Point2D) -> Self {
        Segment { a, b }
    }

    pub fn length(&self) -> f64 {
        self.a.dist(self.b)
    }

    /// Point at arc-length `s` from `a`, clamped to the segment.
    pub fn point_at(&self, s: f64) -> Point2D {
        let len = self.length();
        if len <= GEOM_EPS {
            return self.a;
        }
        self.a.lerp(self.b, (s / len).clamp(0.0, 1.0))
    }

    /// Arc-length parameter of the point on this segment closest to `p`.
    pub fn project(&self, p: Point2D) -> f64 {
        let dx = self.b.x - self.a.x;
        let dy = self.b.y - self.a.y;
        let len2 = dx * dx + dy * dy;
        if len2 <= GEOM_EPS * GEOM_EPS {
            return 0.0;
        }
        let t = ((p.x - self.a.x) * dx + (p.y - self.a.y) * dy) / len2;
        t.clamp(0.0, 1.0) * self.length()
    }
}

/// Witness of a shortest distance between two one-dimensional objects:
/// the distance, the realizing point on each side and its arc-length
/// parameter there.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ArcWitness {
    pub distance: f64,
    pub point_on_first: Point2D,
    pub point_on_second: Point2D,
    pub param_first: f64,
    pub param_second: f64,
}

/// An open or closed finite-length curve given as a vertex chain.
///
/// Arc length `s` runs from vertex 0 in vertex order; when the curve is
/// closed the parametrization wraps modulo the total length and the chain
/// is implicitly closed by a segment from the last vertex back to the first.
#[derive(Debug, Clone, PartialEq)]
pub struct Polyline {
    vertices: Vec<Point2D>,
    closed: bool,
    /// cum[i] = arc length from vertex 0 to vertex i; one extra entry for the
    /// closing segment when the curve is closed.
    cum: Vec<f64>,
}

impl Polyline {
    pub fn new(vertices: Vec<Point2D>, closed: bool) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptyPolyline);
        }
        if vertices.iter().any(|p| !p.is_finite()) {
            return Err(Error::NonFiniteCoordinate);
        }
        let mut cum = Vec::with_capacity(vertices.len() + 1);
        let mut acc = 0.0;
        cum.push(0.0);
        for w in vertices.windows(2) {
            acc += w[0].dist(w[1]);
            cum.push(acc);
        }
        if closed && vertices.len() > 1 {
            acc += vertices[vertices.len() - 1].dist(vertices[0]);
            cum.push(acc);
        }
        Ok(Polyline { vertices, closed, cum })
    }

    pub fn open(vertices: Vec<Point2D>) -> Result<Self> {
        Self::new(vertices, false)
    }

    pub fn closed(vertices: Vec<Point2D>) -> Result<Self> {
        Self::new(vertices, true)
    }

    pub fn from_segment(seg: Segment) -> Self {
        Polyline::new(vec![seg.a, seg.b], false).expect("two finite vertices")
    }

    pub fn vertices(&self) -> &[Point2D] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Total arc length, including the closing segment if closed.
    pub fn length(&self) -> f64 {
        *self.cum.last().unwrap()
    }

    /// Arc-length position of vertex `i`.
    pub fn vertex_arc(&self, i: usize) -> f64 {
        self.cum[i]
    }

    /// Constituent segments in vertex order (closing segment last if closed).
    pub fn segments(&self) -> Vec<Segment> {
        let mut out: Vec<Segment> = self
            .vertices
            .windows(2)
            .map(|w| Segment::new(w[0], w[1]))
            .collect();
        if self.closed && self.vertices.len() > 1 {
            out.push(Segment::new(*self.vertices.last().unwrap(), self.vertices[0]));
        }
        out
    }

    /// Point at arc length `s` from vertex 0.
    ///
    /// Open curves require `0 <= s <= length`; closed curves reduce `s`
    /// modulo the total length.
    pub fn arc_point(&self, s: f64) -> Result<Point2D> {
        let len = self.length();
        let s = if self.closed {
            if len <= GEOM_EPS {
                return Ok(self.vertices[0]);
            }
            s.rem_euclid(len)
        } else {
            if s < -GEOM_EPS || s > len + GEOM_EPS {
                return Err(Error::ArcOutOfRange { s, len });
            }
            s.clamp(0.0, len)
        };
        // Last index with cum[i] <= s.
        let i = match self.cum.binary_search_by(|c| c.partial_cmp(&s).unwrap()) {
            Ok(i) => i,
            Err(i) => i - 1,
        };
        let segs = self.segments();
        if i >= segs.len() {
            // s == len on an open curve (or a degenerate chain).
            return Ok(if self.closed { self.vertices[0] } else { *self.vertices.last().unwrap() });
        }
        Ok(segs[i].point_at(s - self.cum[i]))
    }

    /// Clockwise (increasing-vertex-order) arc distance from `from` to `to`.
    pub fn arc_distance(&self, from: f64, to: f64) -> f64 {
        if self.closed {
            (to - from).rem_euclid(self.length())
        } else {
            to - from
        }
    }

    /// Waypoints along the curve from arc `s0` to arc `s1` (inclusive),
    /// `s0 <= s1 <= s0 + length`. Interior vertices are included, so the
    /// returned chain reproduces the curve geometry exactly.
    pub fn sub_arc(&self, s0: f64, s1: f64) -> Result<Vec<Point2D>> {
        let len = self.length();
        if s1 < s0 - GEOM_EPS || s1 - s0 > len + GEOM_EPS {
            return Err(Error::ArcOutOfRange { s: s1, len });
        }
        let mut points = vec![self.arc_point(s0)?];
        if len > GEOM_EPS {
            // Vertex arc positions, extended by +length for closed wrap.
            let n = self.cum.len() - 1;
            let upper = if self.closed { 2 * n } else { n + 1 };
            for k in 0..upper {
                let arc = if k <= n { self.cum[k] } else { self.cum[k - n] + len };
                if arc > s0 + GEOM_EPS && arc < s1 - GEOM_EPS {
                    points.push(self.arc_point(arc)?);
                }
            }
        }
        points.push(self.arc_point(s1)?);
        Ok(points)
    }

    /// Largest Euclidean distance from `p` to the curve. For a polyline the
    /// maximum is attained at a vertex, since distance to a point is convex
    /// along each segment.
    pub fn max_dist_to(&self, p: Point2D) -> f64 {
        self.vertices
            .iter()
            .map(|v| v.dist(p))
            .fold(0.0, f64::max)
    }
}

/// Shortest distance between two segments with witness points.
///
/// Ties (parallel or overlapping configurations) are broken toward the
/// lexicographically smallest `(param_first, param_second)`.
pub fn segment_distance(s1: &Segment, s2: &Segment) -> ArcWitness {
    let len1 = s1.length();
    let len2 = s2.length();
    // Candidate parameter pairs in arc length: the four boundary minimizers
    // (each endpoint projected onto the other segment) plus the interior
    // critical point when the segments are not parallel.
    let mut candidates: Vec<(f64, f64)> = vec![
        (0.0, s2.project(s1.a)),
        (len1, s2.project(s1.b)),
        (s1.project(s2.a), 0.0),
        (s1.project(s2.b), len2),
    ];
    let ux = s1.b.x - s1.a.x;
    let uy = s1.b.y - s1.a.y;
    let wx = s2.b.x - s2.a.x;
    let wy = s2.b.y - s2.a.y;
    let dx = s1.a.x - s2.a.x;
    let dy = s1.a.y - s2.a.y;
    let a = ux * ux + uy * uy;
    let b = ux * wx + uy * wy;
    let c = wx * wx + wy * wy;
    let det = a * c - b * b;
    if det > GEOM_EPS * (a + c + GEOM_EPS) {
        let d1 = -(dx * ux + dy * uy);
        let d2 = dx * wx + dy * wy;
        let t = (d1 * c + d2 * b) / det;
        let s = (a * d2 + b * d1) / det;
        if (0.0..=1.0).contains(&t) && (0.0..=1.0).contains(&s) {
            candidates.push((t * len1, s * len2));
        }
    }

    let eval = |&(p1, p2): &(f64, f64)| s1.point_at(p1).dist(s2.point_at(p2));
    let dmin = candidates.iter().map(eval).fold(f64::INFINITY, f64::min);
    let (p1, p2) = candidates
        .into_iter()
        .filter(|cand| eval(cand) <= dmin + GEOM_EPS)
        .fold((f64::INFINITY, f64::INFINITY), |best, cand| {
            if (cand.0, cand.1) < best {
                cand
            } else {
                best
            }
        });
    let q1 = s1.point_at(p1);
    let q2 = s2.point_at(p2);
    ArcWitness {
        distance: q1.dist(q2),
        point_on_first: q1,
        point_on_second: q2,
        param_first: p1,
        param_second: p2,
    }
}

/// Shortest distance between two polylines: the minimum of
/// [`segment_distance`] over all pairs of constituent segments, with witness
/// parameters measured in arc length along each whole polyline. Same
/// tie-break as [`segment_distance`].
pub fn polyline_distance(c1: &Polyline, c2: &Polyline) -> ArcWitness {
    let single_point = |c: &Polyline| Segment::new(c.vertices()[0], c.vertices()[0]);
    let segs1 = if c1.vertices().len() == 1 { vec![single_point(c1)] } else { c1.segments() };
    let segs2 = if c2.vertices().len() == 1 { vec![single_point(c2)] } else { c2.segments() };

    let mut best: Option<ArcWitness> = None;
    let mut off1 = 0.0;
    for seg1 in &segs1 {
        let mut off2 = 0.0;
        for seg2 in &segs2 {
            let w = segment_distance(seg1, seg2);
            let cand = ArcWitness {
                param_first: off1 + w.param_first,
                param_second: off2 + w.param_second,
                ..w
            };
            let replace = match &best {
                None => true,
                Some(b) => {
                    cand.distance < b.distance - GEOM_EPS
                        || (cand.distance <= b.distance + GEOM_EPS
                            && (cand.param_first, cand.param_second)
                                < (b.param_first, b.param_second))
                }
            };
            if replace {
                best = Some(cand);
            }
            off2 += seg2.length();
        }
        off1 += seg1.length();
    }
    best.expect("polylines have at least one segment")
}

/// Split a segment at the given arc-length parameters, returning the
/// sub-segments in order. Duplicate and endpoint parameters are dropped, so
/// no zero-length pieces are produced; the concatenation reproduces `seg`.
pub fn split_segment(seg: &Segment, params: &[f64]) -> Result<Vec<Segment>> {
    let len = seg.length();
    let mut cuts: Vec<f64> = Vec::with_capacity(params.len());
    for &p in params {
        if p < -GEOM_EPS || p > len + GEOM_EPS {
            return Err(Error::SplitParamOutOfRange { param: p, len });
        }
        let p = p.clamp(0.0, len);
        if p > GEOM_EPS && p < len - GEOM_EPS {
            cuts.push(p);
        }
    }
    cuts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    cuts.dedup_by(|a, b| (*a - *b).abs() <= GEOM_EPS);
    if cuts.is_empty() {
        return Ok(vec![*seg]);
    }
    let mut out = Vec::with_capacity(cuts.len() + 1);
    let mut prev = 0.0;
    for &cut in cuts.iter().chain(std::iter::once(&len)) {
        out.push(Segment::new(seg.point_at(prev), seg.point_at(cut)));
        prev = cut;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn p(x: f64, y: f64) -> Point2D {
        Point2D::new(x, y)
    }

    fn unit_square() -> Polyline {
        Polyline::closed(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0), p(0.0, 1.0)]).unwrap()
    }

    /// Independent oracle: coarse parameter grid with two refinement passes.
    fn grid_distance(s1: &Segment, s2: &Segment) -> f64 {
        let mut lo1 = 0.0;
        let mut hi1 = 1.0;
        let mut lo2 = 0.0;
        let mut hi2 = 1.0;
        let mut best = f64::INFINITY;
        let (mut bt, mut bs) = (0.0, 0.0);
        for _ in 0..3 {
            let n = 100;
            for i in 0..=n {
                let t = lo1 + (hi1 - lo1) * i as f64 / n as f64;
                let q1 = s1.a.lerp(s1.b, t);
                for j in 0..=n {
                    let s = lo2 + (hi2 - lo2) * j as f64 / n as f64;
                    let d = q1.dist(s2.a.lerp(s2.b, s));
                    if d < best {
                        best = d;
                        bt = t;
                        bs = s;
                    }
                }
            }
            let w1 = (hi1 - lo1) / 50.0;
            let w2 = (hi2 - lo2) / 50.0;
            lo1 = (bt - w1).max(0.0);
            hi1 = (bt + w1).min(1.0);
            lo2 = (bs - w2).max(0.0);
            hi2 = (bs + w2).min(1.0);
        }
        best
    }

    #[test]
    fn arc_point_identity() {
        let sq = unit_square();
        assert_eq!(sq.arc_point(0.0).unwrap(), p(0.0, 0.0));
    }

    #[test]
    fn arc_point_interior() {
        let sq = unit_square();
        let q = sq.arc_point(1.5).unwrap();
        assert_abs_diff_eq!(q.x, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(q.y, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn arc_point_wraps_on_closed_curve() {
        let sq = unit_square();
        let q = sq.arc_point(4.25).unwrap();
        assert_abs_diff_eq!(q.x, 0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(q.y, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn arc_point_rejects_out_of_range_on_open_curve() {
        let line = Polyline::open(vec![p(0.0, 0.0), p(1.0, 0.0)]).unwrap();
        assert!(matches!(line.arc_point(1.5), Err(Error::ArcOutOfRange { .. })));
        assert!(line.arc_point(1.0).is_ok());
    }

    #[test]
    fn empty_polyline_rejected() {
        assert!(matches!(Polyline::open(vec![]), Err(Error::EmptyPolyline)));
    }

    #[test]
    fn segment_distance_parallel_tie_breaks_low() {
        let w = segment_distance(
            &Segment::new(p(0.0, 0.0), p(1.0, 0.0)),
            &Segment::new(p(0.0, 1.0), p(1.0, 1.0)),
        );
        assert_abs_diff_eq!(w.distance, 1.0, epsilon = 1e-12);
        assert_eq!(w.point_on_first, p(0.0, 0.0));
        assert_eq!(w.point_on_second, p(0.0, 1.0));
        assert_abs_diff_eq!(w.param_first, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w.param_second, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn segment_distance_crossing_is_zero() {
        let w = segment_distance(
            &Segment::new(p(0.0, 0.0), p(2.0, 2.0)),
            &Segment::new(p(0.0, 2.0), p(2.0, 0.0)),
        );
        assert_abs_diff_eq!(w.distance, 0.0, epsilon = 1e-9);
        assert_abs_diff_eq!(w.point_on_first.x, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(w.point_on_first.y, 1.0, epsilon = 1e-9);
        assert_abs_diff_eq!(w.point_on_second.x, 1.0, epsilon = 1e-9);
    }

    #[test]
    fn segment_distance_endpoint_case_matches_grid_oracle() {
        let s1 = Segment::new(p(0.0, 0.0), p(1.0, 0.0));
        let s2 = Segment::new(p(2.0, 1.0), p(3.0, 1.0));
        let w = segment_distance(&s1, &s2);
        assert_abs_diff_eq!(w.distance, 2.0f64.sqrt(), epsilon = 1e-9);
        assert_eq!(w.point_on_first, p(1.0, 0.0));
        assert_eq!(w.point_on_second, p(2.0, 1.0));
        assert_abs_diff_eq!(w.distance, grid_distance(&s1, &s2), epsilon = 1e-4);
    }

    #[test]
    fn segment_distance_degenerate_segments_are_points() {
        let w = segment_distance(
            &Segment::new(p(1.0, 1.0), p(1.0, 1.0)),
            &Segment::new(p(4.0, 5.0), p(4.0, 5.0)),
        );
        assert_abs_diff_eq!(w.distance, 5.0, epsilon = 1e-12);
    }

    #[test]
    fn polyline_distance_identical_curves_witness_first_vertex() {
        let c = Polyline::open(vec![p(3.0, 4.0), p(5.0, 4.0), p(5.0, 9.0)]).unwrap();
        let w = polyline_distance(&c, &c);
        assert_abs_diff_eq!(w.distance, 0.0, epsilon = 1e-12);
        assert_eq!(w.point_on_first, p(3.0, 4.0));
        assert_abs_diff_eq!(w.param_first, 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(w.param_second, 0.0, epsilon = 1e-12);
    }

    #[test]
    fn polyline_distance_single_segments_reduce_to_segment_distance() {
        let s1 = Segment::new(p(0.0, 0.0), p(1.0, 0.0));
        let s2 = Segment::new(p(2.0, 1.0), p(3.0, 1.0));
        let w1 = polyline_distance(&Polyline::from_segment(s1), &Polyline::from_segment(s2));
        let w2 = segment_distance(&s1, &s2);
        assert_eq!(w1.distance, w2.distance);
        assert_eq!(w1.param_first, w2.param_first);
        assert_eq!(w1.param_second, w2.param_second);
    }

    #[test]
    fn polyline_distance_l_shape() {
        // L-shaped polyline vs a vertical segment two units right of the corner.
        let l = Polyline::open(vec![p(0.0, 0.0), p(1.0, 0.0), p(1.0, 1.0)]).unwrap();
        let seg = Polyline::open(vec![p(3.0, 0.0), p(3.0, 1.0)]).unwrap();
        let w = polyline_distance(&l, &seg);
        assert_abs_diff_eq!(w.distance, 2.0, epsilon = 1e-12);
        assert_eq!(w.point_on_first, p(1.0, 0.0));
        assert_eq!(w.point_on_second, p(3.0, 0.0));
        let oracle = grid_distance(
            &Segment::new(p(1.0, 0.0), p(1.0, 1.0)),
            &Segment::new(p(3.0, 0.0), p(3.0, 1.0)),
        );
        assert_abs_diff_eq!(w.distance, oracle, epsilon = 1e-4);
    }

    #[test]
    fn split_segment_interior_params() {
        let seg = Segment::new(p(0.0, 0.0), p(4.0, 0.0));
        let parts = split_segment(&seg, &[1.0, 3.0]).unwrap();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0].b, p(1.0, 0.0));
        assert_eq!(parts[1].a, p(1.0, 0.0));
        assert_eq!(parts[1].b, p(3.0, 0.0));
        assert_eq!(parts[2].b, p(4.0, 0.0));
    }

    #[test]
    fn split_segment_no_params_is_identity() {
        let seg = Segment::new(p(0.0, 0.0), p(4.0, 0.0));
        assert_eq!(split_segment(&seg, &[]).unwrap(), vec![seg]);
    }

    #[test]
    fn split_segment_endpoint_params_are_noops() {
        let seg = Segment::new(p(0.0, 0.0), p(4.0, 0.0));
        assert_eq!(split_segment(&seg, &[0.0, 4.0]).unwrap(), vec![seg]);
    }

    #[test]
    fn split_segment_rejects_out_of_range() {
        let seg = Segment::new(p(0.0, 0.0), p(4.0, 0.0));
        assert!(split_segment(&seg, &[4.5]).is_err());
    }

    #[test]
    fn grid_oracle_agrees_on_random_pairs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let mut q = || p(rng.random_range(0.0..200.0), rng.random_range(0.0..200.0));
            let s1 = Segment::new(q(), q());
            let s2 = Segment::new(q(), q());
            let w = segment_distance(&s1, &s2);
            let g = grid_distance(&s1, &s2);
            assert!(
                (w.distance - g).abs() <= 1e-3,
                "closed form {} vs grid {} for {:?} {:?}",
                w.distance,
                g,
                s1,
                s2
            );
            // Witness consistency.
            assert!((w.point_on_first.dist(w.point_on_second) - w.distance).abs() <= 1e-9);
        }
    }

    proptest::proptest! {
        #[test]
        fn chord_never_exceeds_arc(
            xs in proptest::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 2..8),
            closed in proptest::bool::ANY,
            s in 0.0f64..1.0,
            t in 0.0f64..1.0,
        ) {
            let verts: Vec<Point2D> = xs.into_iter().map(|(x, y)| p(x, y)).collect();
            let c = Polyline::new(verts, closed).unwrap();
            let len = c.length();
            let (sa, sb) = (s * len, t * len);
            let pa = c.arc_point(sa).unwrap();
            let pb = c.arc_point(sb).unwrap();
            proptest::prop_assert!(pa.dist(pb) <= (sa - sb).abs() + 1e-9);
        }

        #[test]
        fn segment_distance_symmetric(
            ax in -50.0f64..50.0, ay in -50.0f64..50.0,
            bx in -50.0f64..50.0, by in -50.0f64..50.0,
            cx in -50.0f64..50.0, cy in -50.0f64..50.0,
            dx in -50.0f64..50.0, dy in -50.0f64..50.0,
        ) {
            let s1 = Segment::new(p(ax, ay), p(bx, by));
            let s2 = Segment::new(p(cx, cy), p(dx, dy));
            let w12 = segment_distance(&s1, &s2);
            let w21 = segment_distance(&s2, &s1);
            proptest::prop_assert!((w12.distance - w21.distance).abs() <= 1e-9);
        }

        #[test]
        fn segment_self_distance_is_zero(
            ax in -50.0f64..50.0, ay in -50.0f64..50.0,
            bx in -50.0f64..50.0, by in -50.0f64..50.0,
        ) {
            let s = Segment::new(p(ax, ay), p(bx, by));
            proptest::prop_assert!(segment_distance(&s, &s).distance <= 1e-9);
        }

        #[test]
        fn split_pieces_sum_to_length(
            len in 0.1f64..50.0,
            params in proptest::collection::vec(0.0f64..1.0, 0..6),
        ) {
            let seg = Segment::new(p(0.0, 0.0), p(len, 0.0));
            let params: Vec<f64> = params.into_iter().map(|t| t * len).collect();
            let parts = split_segment(&seg, &params).unwrap();
            let total: f64 = parts.iter().map(Segment::length).sum();
            proptest::prop_assert!((total - len).abs() <= 1e-9);
            for piece in &parts {
                proptest::prop_assert!(piece.length() > GEOM_EPS);
            }
        }
    }
}
