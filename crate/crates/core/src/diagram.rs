//! Arc diagrams as combinatorial plane maps, their canonical codes, mirror
//! images, strand reversal and inboundness.
//!
//! A diagram with `n` crossings has strand nodes `0` (start), `1..=2n`
//! (crossing visits in traversal order) and `2n+1` (end). Segment `k` joins
//! node `k` to node `k+1`; dart `2k` runs forward along it and `2k+1`
//! backward. Rotations list darts counterclockwise, and faces are the
//! orbits of `σ∘α`, each dart having its face on its right.

use std::fmt;
use std::fmt::Write as _;

use thiserror::Error;

use crate::arc::SpatialArc;
use crate::geom::{Direction, Rat};
use crate::scene::{scene_of, ProjectionScene};
use crate::seg::{det2, intersect2, line_params2, SegHit, Vec2};
use crate::trace::{canonical_direction, validate_generic, GenericityReport, TraceError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("projection is not generic: {0}")]
    NotGeneric(GenericityReport),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error("malformed diagram code: {0}")]
    BadCode(String),
}

/// One passage of the strand through a crossing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Visit {
    /// Crossing index in first-visit order.
    pub crossing: usize,
    pub over: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArcDiagram {
    visits: Vec<Visit>,
    signs: Vec<i8>,
    /// Least dart of the unbounded face.
    outer: usize,
}

/// Deterministic text form of a diagram; byte equality is isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

pub fn project(arc: &SpatialArc, u: &Direction) -> Result<ProjectionScene, DiagramError> {
    let report = validate_generic(arc, u);
    if !report.passed() {
        return Err(DiagramError::NotGeneric(report));
    }
    Ok(scene_of(arc, u))
}

/// A crossing found on the image of one edge.
struct EdgeHit {
    param: Rat,
    raw: usize,
    over: bool,
}

/// Crossing data of a generic scene: per crossing the edges `(i, j)` with
/// `i < j`, the parameters along each and which edge passes over.
pub struct SceneCrossing {
    pub edges: (usize, usize),
    pub params: (Rat, Rat),
    pub point: Vec2,
    pub first_over: bool,
}

pub fn scene_crossings(scene: &ProjectionScene) -> Vec<SceneCrossing> {
    let p = &scene.points;
    let m = scene.edge_count();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if let SegHit::Point(q) = intersect2(&p[i], &p[i + 1], &p[j], &p[j + 1]) {
                let (s, t) = line_params2(&p[i], &p[i + 1], &p[j], &p[j + 1]).expect("transverse crossing");
                let first_over = scene.depth_at(i, &s) > scene.depth_at(j, &t);
                out.push(SceneCrossing {
                    edges: (i, j),
                    params: (s, t),
                    point: q,
                    first_over,
                });
            }
        }
    }
    out
}

pub fn build_diagram(scene: &ProjectionScene) -> ArcDiagram {
    let p = &scene.points;
    let m = scene.edge_count();
    let crossings = scene_crossings(scene);

    let mut hits: Vec<Vec<EdgeHit>> = (0..m).map(|_| Vec::new()).collect();
    let mut raw_sign = Vec::with_capacity(crossings.len());
    for (raw, c) in crossings.iter().enumerate() {
        let (i, j) = c.edges;
        let di = p[i + 1].sub(&p[i]);
        let dj = p[j + 1].sub(&p[j]);
        let (over, under) = if c.first_over { (&di, &dj) } else { (&dj, &di) };
        raw_sign.push(det2(over, under).signum() as i8);
        hits[i].push(EdgeHit {
            param: c.params.0.clone(),
            raw,
            over: c.first_over,
        });
        hits[j].push(EdgeHit {
            param: c.params.1.clone(),
            raw,
            over: !c.first_over,
        });
    }
    // strand segment containing each interior vertex
    let mut seg_of_vertex = vec![0usize; m + 1];
    let mut raw_visits = Vec::new();
    for (e, h) in hits.iter_mut().enumerate() {
        seg_of_vertex[e] = raw_visits.len();
        h.sort_by(|a, b| a.param.cmp(&b.param));
        raw_visits.extend(h.iter().map(|x| (x.raw, x.over)));
    }
    seg_of_vertex[m] = raw_visits.len();

    let mut relabel = vec![usize::MAX; crossings.len()];
    let mut signs = Vec::with_capacity(crossings.len());
    let mut visits = Vec::with_capacity(raw_visits.len());
    for (raw, over) in raw_visits {
        if relabel[raw] == usize::MAX {
            relabel[raw] = signs.len();
            signs.push(raw_sign[raw]);
        }
        visits.push(Visit {
            crossing: relabel[raw],
            over,
        });
    }

    let n = signs.len();
    let outer_dart = {
        let v = (0..p.len()).min_by(|&a, &b| p[a].cmp(&p[b])).unwrap();
        if v == 0 {
            0
        } else if v == m {
            4 * n + 1
        } else {
            let k = seg_of_vertex[v];
            let down = Vec2::ints(0, -1);
            let to_next = p[v + 1].sub(&p[v]);
            let to_prev = p[v - 1].sub(&p[v]);
            if ccw_between(&to_next, &down, &to_prev) {
                2 * k + 1
            } else {
                2 * k
            }
        }
    };
    ArcDiagram::from_parts(visits, signs, outer_dart)
}

/// `r` lies strictly inside the counterclockwise sector from `a` to `b`.
fn ccw_between(a: &Vec2, r: &Vec2, b: &Vec2) -> bool {
    let ab = det2(a, b).signum();
    let ar = det2(a, r).signum();
    let rb = det2(r, b).signum();
    match ab {
        1 => ar > 0 && rb > 0,
        -1 => !(det2(b, r).signum() >= 0 && det2(r, a).signum() >= 0),
        _ => ar > 0,
    }
}

impl ArcDiagram {
    /// Assemble a diagram; the outer face is given by any of its darts.
    fn from_parts(visits: Vec<Visit>, signs: Vec<i8>, outer_dart: usize) -> ArcDiagram {
        let mut d = ArcDiagram {
            visits,
            signs,
            outer: outer_dart,
        };
        let faces = d.face_ids();
        let f = faces[outer_dart];
        d.outer = faces.iter().position(|&x| x == f).unwrap();
        d
    }

    pub fn crossing_count(&self) -> usize {
        self.signs.len()
    }

    pub fn visits(&self) -> &[Visit] {
        &self.visits
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn dart_count(&self) -> usize {
        4 * self.crossing_count() + 2
    }

    /// Strand nodes `(under, over)` of crossing `c`.
    pub fn crossing_nodes(&self, c: usize) -> (usize, usize) {
        let mut under = 0;
        let mut over = 0;
        for (i, v) in self.visits.iter().enumerate() {
            if v.crossing == c {
                if v.over {
                    over = i + 1;
                } else {
                    under = i + 1;
                }
            }
        }
        (under, over)
    }

    /// Counterclockwise darts leaving crossing `c`, starting from the least.
    pub fn rotation(&self, c: usize) -> [usize; 4] {
        let (a, b) = self.crossing_nodes(c);
        let (uo, ui, oo, oi) = (2 * a, 2 * a - 1, 2 * b, 2 * b - 1);
        let mut r = if self.signs[c] > 0 {
            [uo, oi, ui, oo]
        } else {
            [uo, oo, ui, oi]
        };
        let k = (0..4).min_by_key(|&i| r[i]).unwrap();
        r.rotate_left(k);
        r
    }

    /// Counterclockwise successor of every dart around its tail node.
    pub fn sigma(&self) -> Vec<usize> {
        let mut s: Vec<usize> = (0..self.dart_count()).collect();
        for c in 0..self.crossing_count() {
            let r = self.rotation(c);
            for i in 0..4 {
                s[r[i]] = r[(i + 1) % 4];
            }
        }
        s
    }

    /// The dart traversing the same segment the other way.
    pub fn alpha(d: usize) -> usize {
        d ^ 1
    }

    /// Face of every dart, numbered by first appearance in dart order.
    pub fn face_ids(&self) -> Vec<usize> {
        let sigma = self.sigma();
        let nd = self.dart_count();
        let mut face = vec![usize::MAX; nd];
        let mut next_id = 0;
        for start in 0..nd {
            if face[start] != usize::MAX {
                continue;
            }
            let mut d = start;
            while face[d] == usize::MAX {
                face[d] = next_id;
                d = sigma[Self::alpha(d)];
            }
            next_id += 1;
        }
        face
    }

    pub fn face_count(&self) -> usize {
        self.face_ids().into_iter().max().map_or(0, |m| m + 1)
    }

    /// `V − E + F = 2` with `V = n+2` and `E = 2n+1`.
    pub fn euler_ok(&self) -> bool {
        self.face_count() == self.crossing_count() + 1
    }

    pub fn outer_face(&self) -> usize {
        self.face_ids()[self.outer]
    }

    pub fn outer_dart(&self) -> usize {
        self.outer
    }

    pub fn start_face(&self) -> usize {
        self.face_ids()[0]
    }

    pub fn end_face(&self) -> usize {
        self.face_ids()[self.dart_count() - 1]
    }

    /// Reflected plane, seen from the other side of the projection plane:
    /// rotations reverse and every crossing swaps over and under, which
    /// leaves the sign convention `det(over, under)` unchanged.
    pub fn mirror(&self) -> ArcDiagram {
        let visits = self
            .visits
            .iter()
            .map(|v| Visit {
                crossing: v.crossing,
                over: !v.over,
            })
            .collect();
        // the face right of a dart becomes the face left of it
        ArcDiagram::from_parts(visits, self.signs.clone(), Self::alpha(self.outer))
    }

    /// The same plane picture traversed from the terminal endpoint.
    pub fn reversed(&self) -> ArcDiagram {
        let n2 = self.visits.len();
        let mut relabel = vec![usize::MAX; self.crossing_count()];
        let mut signs = Vec::with_capacity(self.crossing_count());
        let mut visits = Vec::with_capacity(n2);
        for v in self.visits.iter().rev() {
            if relabel[v.crossing] == usize::MAX {
                relabel[v.crossing] = signs.len();
                signs.push(self.signs[v.crossing]);
            }
            visits.push(Visit {
                crossing: relabel[v.crossing],
                over: v.over,
            });
        }
        let k = self.outer / 2;
        let outer = if self.outer.is_multiple_of(2) {
            2 * (n2 - k) + 1
        } else {
            2 * (n2 - k)
        };
        ArcDiagram::from_parts(visits, signs, outer)
    }

    pub fn is_inbound(&self) -> bool {
        self.start_face() == self.end_face()
    }

    pub fn code(&self) -> CanonicalCode {
        let mut s = String::new();
        let n = self.crossing_count();
        writeln!(s, "ARCDIAG 1 n={}", n).unwrap();
        s.push_str("strand:");
        for v in &self.visits {
            let sign = if self.signs[v.crossing] > 0 { '+' } else { '-' };
            write!(s, " {}{}{}", v.crossing + 1, if v.over { 'O' } else { 'U' }, sign).unwrap();
        }
        s.push('\n');
        for c in 0..n {
            let r = self.rotation(c);
            writeln!(s, "rot {}: {} {} {} {}", c + 1, r[0], r[1], r[2], r[3]).unwrap();
        }
        write!(s, "outer: {}", self.outer_face()).unwrap();
        CanonicalCode(s)
    }

    pub fn decode(code: &str) -> Result<ArcDiagram, DiagramError> {
        let bad = |m: &str| DiagramError::BadCode(m.to_string());
        let mut lines = code.lines();
        let n: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("ARCDIAG 1 n="))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("expected header 'ARCDIAG 1 n=<n>'"))?;
        let strand = lines
            .next()
            .and_then(|l| l.strip_prefix("strand:"))
            .ok_or_else(|| bad("expected 'strand:' line"))?;
        let mut visits = Vec::with_capacity(2 * n);
        let mut signs: Vec<Option<i8>> = vec![None; n];
        let mut seen = vec![(false, false); n];
        let mut next_new = 0;
        for tok in strand.split_whitespace() {
            let (head, sign) = tok.split_at(tok.len().saturating_sub(1));
            let sign = match sign {
                "+" => 1,
                "-" => -1,
                _ => return Err(bad(&format!("bad sign in token '{}'", tok))),
            };
            let (id, ou) = head.split_at(head.len().saturating_sub(1));
            let over = match ou {
                "O" => true,
                "U" => false,
                _ => return Err(bad(&format!("bad O/U in token '{}'", tok))),
            };
            let id: usize = id.parse().map_err(|_| bad(&format!("bad crossing id in '{}'", tok)))?;
            if id == 0 || id > n {
                return Err(bad(&format!("crossing id out of range in '{}'", tok)));
            }
            let c = id - 1;
            if signs[c].is_none() {
                if c != next_new {
                    return Err(bad("crossings not numbered by first visit"));
                }
                next_new += 1;
                signs[c] = Some(sign);
            } else if signs[c] != Some(sign) {
                return Err(bad(&format!("inconsistent sign for crossing {}", id)));
            }
            let slot = if over { &mut seen[c].1 } else { &mut seen[c].0 };
            if *slot {
                return Err(bad(&format!("crossing {} visited twice on one strand", id)));
            }
            *slot = true;
            visits.push(Visit { crossing: c, over });
        }
        if visits.len() != 2 * n || seen.iter().any(|&(a, b)| !(a && b)) {
            return Err(bad("every crossing must be visited once over and once under"));
        }
        let signs: Vec<i8> = signs.into_iter().map(Option::unwrap).collect();
        let mut d = ArcDiagram {
            visits,
            signs,
            outer: 0,
        };
        for c in 0..n {
            let want = format!("rot {}:", c + 1);
            let line = lines.next().ok_or_else(|| bad(&format!("missing '{}' line", want)))?;
            let rest = line.strip_prefix(&want).ok_or_else(|| bad(&format!("expected '{}'", want)))?;
            let got: Vec<usize> = rest
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| bad(&format!("bad dart '{}'", t))))
                .collect::<Result<_, _>>()?;
            if got != d.rotation(c) {
                return Err(bad(&format!("rotation of crossing {} disagrees with the strand", c + 1)));
            }
        }
        let outer: usize = lines
            .next()
            .and_then(|l| l.strip_prefix("outer: "))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad("expected 'outer: <face>' line"))?;
        if lines.next().is_some() {
            return Err(bad("trailing lines"));
        }
        if !d.euler_ok() {
            return Err(bad("strand data is not planar"));
        }
        let faces = d.face_ids();
        d.outer = faces
            .iter()
            .position(|&f| f == outer)
            .ok_or_else(|| bad("outer face out of range"))?;
        Ok(d)
    }
}

pub fn canonical_code(d: &ArcDiagram) -> CanonicalCode {
    d.code()
}

pub fn mirror(d: &ArcDiagram) -> ArcDiagram {
    d.mirror()
}

pub fn is_inbound_diagram(d: &ArcDiagram) -> bool {
    d.is_inbound()
}

/// Code of the direct projection along `u`, which must be generic.
pub fn projection_code(arc: &SpatialArc, u: &Direction) -> Result<CanonicalCode, DiagramError> {
    Ok(build_diagram(&project(arc, u)?).code())
}

/// The diagram along the canonical direction selected for `u`.
pub fn diagram_along(arc: &SpatialArc, u: &Direction) -> Result<ArcDiagram, DiagramError> {
    let c = canonical_direction(arc, u)?;
    Ok(build_diagram(&project(arc, &c)?))
}

pub fn diagram_of(arc: &SpatialArc, u: &Direction) -> Result<CanonicalCode, DiagramError> {
    Ok(diagram_along(arc, u)?.code())
}

/// The open front edge's image meets the projected arc only at the endpoints.
pub fn projection_is_inbound(scene: &ProjectionScene) -> bool {
    let p = &scene.points;
    let m = scene.edge_count();
    let (s, t) = (&p[0], &p[m]);
    (0..m).all(|i| match intersect2(s, t, &p[i], &p[i + 1]) {
        SegHit::Disjoint => true,
        SegHit::Overlap => false,
        SegHit::Point(q) => q == *s || q == *t,
    })
}

/// Presentational SVG of a generic scene, leaving gaps in under-passing edges.
pub fn render_svg(scene: &ProjectionScene) -> String {
    let pts: Vec<(f64, f64)> = scene.points.iter().map(|q| (q.x.to_f64(), q.y.to_f64())).collect();
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for &(x, y) in &pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    let span = (x1 - x0).max(y1 - y0).max(1e-9);
    let size = 400.0;
    let pad = 20.0;
    let k = (size - 2.0 * pad) / span;
    let map = |(x, y): (f64, f64)| (pad + (x - x0) * k, size - pad - (y - y0) * k);
    let gap = 8.0;

    let mut cuts: Vec<Vec<f64>> = vec![Vec::new(); scene.edge_count()];
    for c in scene_crossings(scene) {
        let (i, j) = c.edges;
        if c.first_over {
            cuts[j].push(c.params.1.to_f64());
        } else {
            cuts[i].push(c.params.0.to_f64());
        }
    }
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{s}" height="{s}" viewBox="0 0 {s} {s}">"#,
        s = size
    )
    .unwrap();
    for (e, cut) in cuts.iter_mut().enumerate() {
        let a = map(pts[e]);
        let b = map(pts[e + 1]);
        let len = ((b.0 - a.0).powi(2) + (b.1 - a.1).powi(2)).sqrt();
        let h = if len > 0.0 { gap / len } else { 0.0 };
        cut.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let mut pieces = Vec::new();
        let mut from = 0.0;
        for &t in cut.iter() {
            pieces.push((from, (t - h).max(from)));
            from = (t + h).min(1.0);
        }
        pieces.push((from, 1.0));
        for (s, t) in pieces {
            if t <= s {
                continue;
            }
            let p = (a.0 + (b.0 - a.0) * s, a.1 + (b.1 - a.1) * s);
            let q = (a.0 + (b.0 - a.0) * t, a.1 + (b.1 - a.1) * t);
            writeln!(
                out,
                r#"  <line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="black" stroke-width="2"/>"#,
                p.0, p.1, q.0, q.1
            )
            .unwrap();
        }
    }
    let (s, t) = (map(pts[0]), map(*pts.last().unwrap()));
    writeln!(out, r#"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="green"/>"#, s.0, s.1).unwrap();
    writeln!(out, r#"  <circle cx="{:.2}" cy="{:.2}" r="4" fill="red"/>"#, t.0, t.1).unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::validate_arc;
    use crate::geom::Vec3;

    fn arc(pts: &[(i64, i64, i64)]) -> SpatialArc {
        validate_arc(pts.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect()).unwrap()
    }

    fn d(x: i64, y: i64, z: i64) -> Direction {
        Direction::ints(x, y, z).unwrap()
    }

    fn a1() -> SpatialArc {
        arc(&[(0, 0, 0), (1, 1, 0), (2, 0, 0)])
    }

    fn a2() -> SpatialArc {
        arc(&[(0, 0, 0), (4, 0, 0), (4, 2, 1), (2, -2, 1)])
    }

    #[test]
    fn a2_projection() {
        let sc = project(&a2(), &d(0, 0, 1)).unwrap();
        let want: Vec<Vec2> = [(0, 0), (4, 0), (4, 2), (2, -2)].iter().map(|&(x, y)| Vec2::ints(x, y)).collect();
        assert_eq!(sc.points, want);
        let cr = scene_crossings(&sc);
        assert_eq!(cr.len(), 1);
        assert_eq!(cr[0].point, Vec2::ints(3, 0));
        assert!(matches!(
            project(&a2(), &d(1, 0, 0)),
            Err(DiagramError::NotGeneric(r)) if r.kind() == Some(crate::trace::GenericFailure::EdgeParallel)
        ));
    }

    #[test]
    fn a2_code() {
        let dg = build_diagram(&project(&a2(), &d(0, 0, 1)).unwrap());
        assert_eq!(dg.crossing_count(), 1);
        assert_eq!(dg.signs(), &[1]);
        assert_eq!(dg.code().as_str(), "ARCDIAG 1 n=1\nstrand: 1U+ 1O+\nrot 1: 1 4 2 3\nouter: 0");
        assert!(dg.euler_ok());
        assert!(dg.is_inbound());
        assert_eq!(diagram_of(&a2(), &d(0, 0, 1)).unwrap(), dg.code());
    }

    #[test]
    fn planar_path() {
        let dg = build_diagram(&project(&a1(), &d(0, 0, 1)).unwrap());
        assert_eq!(dg.code().as_str(), "ARCDIAG 1 n=0\nstrand:\nouter: 0");
        assert_eq!(dg.face_count(), 1);
        assert!(dg.is_inbound());
        assert_eq!(dg.mirror(), dg);
    }

    #[test]
    fn mirror_involution_and_a2() {
        let dg = build_diagram(&project(&a2(), &d(0, 0, 1)).unwrap());
        let m = dg.mirror();
        assert_eq!(m.code().as_str().lines().nth(1), Some("strand: 1O+ 1U+"));
        assert_eq!(m.mirror(), dg);
        assert_eq!(diagram_of(&a2(), &d(0, 0, -1)).unwrap(), m.code());
    }

    #[test]
    fn decode_round_trip() {
        let dg = build_diagram(&project(&a2(), &d(0, 0, 1)).unwrap());
        let code = dg.code();
        assert_eq!(ArcDiagram::decode(code.as_str()).unwrap(), dg);
        assert!(ArcDiagram::decode("ARCDIAG 1 n=1\nstrand: 1U+ 1U+\nrot 1: 1 4 2 3\nouter: 0").is_err());
        assert!(ArcDiagram::decode("ARCDIAG 1 n=1\nstrand: 1U+ 1O-\nrot 1: 1 4 2 3\nouter: 0").is_err());
        assert!(ArcDiagram::decode("ARCDIAG 1 n=1\nstrand: 1U+ 1O+\nrot 1: 1 2 3 4\nouter: 0").is_err());
        assert!(ArcDiagram::decode("ARCDIAG 1 n=1\nstrand: 1U+ 1O+\nrot 1: 1 4 2 3\nouter: 7").is_err());
    }

    #[test]
    fn non_planar_gauss_code_rejected() {
        // interleaved crossings with equal signs close up, opposite signs cannot
        let bad = ArcDiagram {
            visits: vec![
                Visit { crossing: 0, over: false },
                Visit { crossing: 1, over: true },
                Visit { crossing: 0, over: true },
                Visit { crossing: 1, over: false },
            ],
            signs: vec![1, -1],
            outer: 0,
        };
        assert!(!bad.euler_ok());
        let good = ArcDiagram {
            signs: vec![1, 1],
            ..bad
        };
        assert!(good.euler_ok());
    }

    #[test]
    fn enclosed_endpoint_is_not_inbound() {
        // the strand coils once around its terminal point
        let a = arc(&[(0, 0, 0), (10, 0, 0), (10, 10, 1), (5, 10, 1), (5, -5, 2), (6, 5, 2)]);
        let sc = project(&a, &d(0, 0, 1)).unwrap();
        let dg = build_diagram(&sc);
        assert!(dg.euler_ok());
        assert!(!dg.is_inbound());
        assert!(!projection_is_inbound(&sc));
    }

    #[test]
    fn reversal_is_an_involution() {
        let a = arc(&[(0, 0, 0), (10, 0, 0), (10, 10, 1), (5, 10, 1), (5, -5, 2), (6, 5, 2)]);
        let dg = build_diagram(&project(&a, &d(0, 0, 1)).unwrap());
        assert_eq!(dg.reversed().reversed(), dg);
        let ra = crate::arc::reverse_arc(&a);
        let rd = build_diagram(&project(&ra, &d(0, 0, 1)).unwrap());
        assert_eq!(rd, dg.reversed());
    }

    #[test]
    fn svg_has_gaps() {
        let sc = project(&a2(), &d(0, 0, 1)).unwrap();
        let svg = render_svg(&sc);
        assert!(svg.starts_with("<svg"));
        // edge 0 passes under and is drawn in two pieces
        assert_eq!(svg.matches("<line").count(), 4);
    }
}
