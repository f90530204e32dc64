//! Arcs on a disk with one interior puncture and `n` marked boundary points.
//!
//! An arc starts at a marked point, runs counterclockwise, and ends `len`
//! marked points later; when `len = n` it is a loop encircling the puncture.
//! Arcs are in bijection with bricks via `a -> M(source(a), len(a))`, and the
//! way two arcs meet (boundary touchings and forced interior crossings)
//! mirrors the Hom and Ext spaces between the corresponding bricks.
//!
//! A two-colored arc pattern (green/red) is *admissible* when all
//! intersections can be pushed to the boundary and the colors respect the
//! counterclockwise order at shared endpoints; maximal admissible patterns
//! correspond to the two-term simple-minded collections of the algebra.

use crate::algebra::{AlgebraSpec, Indec, SpecError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// An arc: counterclockwise from `source` through `len` boundary steps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arc {
    pub source: usize,
    pub len: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Color {
    Green,
    Red,
}

/// A set of arcs split into green (module) and red (shifted) parts.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ArcPattern {
    pub green: BTreeSet<Arc>,
    pub red: BTreeSet<Arc>,
}

/// How two distinct arcs sit relative to each other, up to boundary isotopy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Intersection {
    /// Identical arcs (not a genuine pair).
    Identical,
    /// No shared boundary point and no forced crossing.
    Disjoint,
    /// `t(first) = s(second)` or vice versa, but not both.
    HeadToTail { first_into_second: bool },
    /// `t(first) = s(second)` and `t(second) = s(first)`.
    TwoCycle,
    /// Same source vertex; `ccw_first` marks whether the first arc is the
    /// counterclockwise (longer) one.
    SharedSource { ccw_first: bool },
    /// Same target vertex; the counterclockwise arc is the shorter one.
    SharedTarget { ccw_first: bool },
    /// Exactly one interior crossing is forced.
    OneCrossing,
    /// Two interior crossings are forced.
    DoubleCrossing,
}

/// A reason a pattern fails admissibility, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    DuplicateArc(Arc),
    InteriorCrossing(Arc, Arc),
    /// At a shared endpoint the counterclockwise arc must be red and the
    /// clockwise one green.
    ColorOrder { ccw: Arc, cw: Arc },
    /// Head-to-tail pair whose concatenation stays a module: the head arc
    /// must be red or the tail arc green.
    OpenConcatenation { first: Arc, second: Arc },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PathError {
    #[error("step {at}: arc endpoint does not match the previous endpoint")]
    EndpointMismatch { at: usize },
    #[error("composite length {len} does not describe an arc at vertex {start}")]
    NotAnArc { start: usize, len: i64 },
    #[error("empty path")]
    Empty,
    #[error(transparent)]
    Spec(#[from] SpecError),
}

/// One step of a boundary path: an arc traversed forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArcStep {
    pub arc: Arc,
    pub reversed: bool,
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a({},{})", self.source, self.len)
    }
}

impl Arc {
    pub fn new(source: usize, len: usize) -> Self {
        Arc { source, len }
    }

    pub fn brick(self) -> Indec {
        Indec::new(self.source, self.len)
    }

    pub fn of_brick(m: Indec) -> Self {
        Arc { source: m.top, len: m.len }
    }
}

/// Arc arithmetic for a fixed algebra / marked disk.
pub trait ArcOps {
    fn target(&self, a: Arc) -> usize;
    fn is_loop(&self, a: Arc) -> bool;
    fn check_arc(&self, a: Arc) -> Result<(), SpecError>;
    fn arcs(&self) -> Vec<Arc>;
    fn interior_crossings(&self, a: Arc, b: Arc) -> usize;
    fn classify_intersection(&self, a: Arc, b: Arc) -> Intersection;
    fn pattern_violations(&self, p: &ArcPattern) -> Vec<Violation>;
    fn is_admissible(&self, p: &ArcPattern) -> bool;
    fn maximal_patterns(&self) -> Vec<ArcPattern>;
    fn compose_path(&self, steps: &[ArcStep]) -> Result<Indec, PathError>;
    fn is_proper_path(&self, steps: &[ArcStep]) -> bool;
}

impl ArcOps for AlgebraSpec {
    fn target(&self, a: Arc) -> usize {
        self.norm(a.source as i64 + a.len as i64)
    }

    fn is_loop(&self, a: Arc) -> bool {
        a.len == self.n()
    }

    fn check_arc(&self, a: Arc) -> Result<(), SpecError> {
        let cap = self.l(a.source).min(self.n());
        if a.source < 1 || a.source > self.n() || a.len < 1 || a.len > cap {
            return Err(SpecError::BadModule {
                top: a.source,
                len: a.len,
                reason: format!("not an arc: need source in 1..={} and length in 1..={}", self.n(), cap),
            });
        }
        Ok(())
    }

    /// All arcs: one per brick.
    fn arcs(&self) -> Vec<Arc> {
        self.bricks().into_iter().map(Arc::of_brick).collect()
    }

    /// Number of interior crossings forced in any drawing of the two arcs.
    ///
    /// Lift both arcs to intervals on the universal cover of the boundary
    /// circle; a crossing is forced for every translate of the second
    /// interval that strictly interleaves with the first.
    fn interior_crossings(&self, a: Arc, b: Arc) -> usize {
        let n = self.n() as i64;
        let (a0, a1) = (a.source as i64, a.source as i64 + a.len as i64);
        let mut count = 0;
        for k in -2..=2i64 {
            let b0 = b.source as i64 + k * n;
            let b1 = b0 + b.len as i64;
            let interleave = (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1);
            if interleave {
                count += 1;
            }
        }
        count
    }

    fn classify_intersection(&self, a: Arc, b: Arc) -> Intersection {
        if a == b {
            return Intersection::Identical;
        }
        match self.interior_crossings(a, b) {
            0 => {}
            1 => return Intersection::OneCrossing,
            _ => return Intersection::DoubleCrossing,
        }
        let (ta, tb) = (self.target(a), self.target(b));
        if a.source == b.source {
            return Intersection::SharedSource { ccw_first: a.len > b.len };
        }
        if ta == tb {
            return Intersection::SharedTarget { ccw_first: a.len < b.len };
        }
        match (ta == b.source, tb == a.source) {
            (true, true) => Intersection::TwoCycle,
            (true, false) => Intersection::HeadToTail { first_into_second: true },
            (false, true) => Intersection::HeadToTail { first_into_second: false },
            (false, false) => Intersection::Disjoint,
        }
    }

    fn pattern_violations(&self, p: &ArcPattern) -> Vec<Violation> {
        let mut out = Vec::new();
        for a in p.green.intersection(&p.red) {
            out.push(Violation::DuplicateArc(*a));
        }
        let colored: Vec<(Arc, Color)> = p
            .green
            .iter()
            .map(|&a| (a, Color::Green))
            .chain(p.red.iter().map(|&a| (a, Color::Red)))
            .collect();
        for (i, &(a, ca)) in colored.iter().enumerate() {
            for &(b, cb) in colored.iter().skip(i + 1) {
                if a == b {
                    continue; // already reported as duplicate
                }
                out.extend(pair_violations(self, a, ca, b, cb));
            }
        }
        out
    }

    fn is_admissible(&self, p: &ArcPattern) -> bool {
        self.pattern_violations(p).is_empty()
    }

    /// Enumerate all maximal admissible patterns.
    ///
    /// Admissibility is a pairwise condition on colored arcs, so maximal
    /// patterns are exactly the maximal cliques of the compatibility graph;
    /// these are enumerated by pivoted Bron-Kerbosch.
    fn maximal_patterns(&self) -> Vec<ArcPattern> {
        let colored: Vec<(Arc, Color)> = self
            .arcs()
            .into_iter()
            .flat_map(|a| [(a, Color::Green), (a, Color::Red)])
            .collect();
        let m = colored.len();
        let mut adj = vec![vec![false; m]; m];
        for i in 0..m {
            for j in i + 1..m {
                let (a, ca) = colored[i];
                let (b, cb) = colored[j];
                let ok = a != b && pair_violations(self, a, ca, b, cb).is_empty();
                adj[i][j] = ok;
                adj[j][i] = ok;
            }
        }
        let mut cliques = Vec::new();
        let mut r = Vec::new();
        bron_kerbosch(&adj, &mut r, (0..m).collect(), Vec::new(), &mut cliques);
        cliques
            .into_iter()
            .map(|c| {
                let mut p = ArcPattern::default();
                for idx in c {
                    let (a, col) = colored[idx];
                    match col {
                        Color::Green => p.green.insert(a),
                        Color::Red => p.red.insert(a),
                    };
                }
                p
            })
            .collect()
    }

    /// Concatenate a chain of arcs (each step forwards or reversed) into a
    /// single boundary arc; the result is the brick of that arc.
    ///
    /// The composite is determined by its start vertex and the total signed
    /// winding along the boundary; it is again an arc exactly when that
    /// winding lies in `1..=min(l(start), n)`.
    fn compose_path(&self, steps: &[ArcStep]) -> Result<Indec, PathError> {
        if steps.is_empty() {
            return Err(PathError::Empty);
        }
        for s in steps {
            self.check_arc(s.arc)?;
        }
        let ends = |s: &ArcStep| -> (usize, usize) {
            let (src, tgt) = (s.arc.source, self.target(s.arc));
            if s.reversed {
                (tgt, src)
            } else {
                (src, tgt)
            }
        };
        let mut total: i64 = 0;
        for (idx, s) in steps.iter().enumerate() {
            if idx > 0 && ends(&steps[idx - 1]).1 != ends(s).0 {
                return Err(PathError::EndpointMismatch { at: idx });
            }
            total += if s.reversed { -(s.arc.len as i64) } else { s.arc.len as i64 };
        }
        let start = ends(&steps[0]).0;
        let cap = self.l(start).min(self.n()) as i64;
        if total < 1 || total > cap {
            return Err(PathError::NotAnArc { start, len: total });
        }
        Ok(Indec::new(start, total as usize))
    }

    /// A path is proper when every contiguous subpath composes to an arc,
    /// read either forwards or backwards.
    fn is_proper_path(&self, steps: &[ArcStep]) -> bool {
        if steps.is_empty() {
            return false;
        }
        for i in 0..steps.len() {
            for j in i..steps.len() {
                let sub = &steps[i..=j];
                let rev: Vec<ArcStep> = sub
                    .iter()
                    .rev()
                    .map(|s| ArcStep { arc: s.arc, reversed: !s.reversed })
                    .collect();
                if self.compose_path(sub).is_err() && self.compose_path(&rev).is_err() {
                    return false;
                }
            }
        }
        true
    }
}

fn pair_violations(
    spec: &AlgebraSpec,
    a: Arc,
    ca: Color,
    b: Arc,
    cb: Color,
) -> Vec<Violation> {
    let mut out = Vec::new();
    if spec.interior_crossings(a, b) > 0 {
        out.push(Violation::InteriorCrossing(a, b));
    }
    let shared_endpoint = if a.source == b.source {
        // counterclockwise arc at a shared source is the longer one
        Some(if a.len > b.len { (a, ca, b, cb) } else { (b, cb, a, ca) })
    } else if spec.target(a) == spec.target(b) {
        // counterclockwise arc at a shared target is the shorter one
        Some(if a.len < b.len { (a, ca, b, cb) } else { (b, cb, a, ca) })
    } else {
        None
    };
    if let Some((ccw, c_ccw, cw, c_cw)) = shared_endpoint {
        if c_ccw != Color::Red || c_cw != Color::Green {
            out.push(Violation::ColorOrder { ccw, cw });
        }
    }
    for ((x, cx), (y, cy)) in [((a, ca), (b, cb)), ((b, cb), (a, ca))] {
        let glues = spec.target(x) == y.source && x.len + y.len <= spec.l(x.source);
        if glues && cx == Color::Green && cy == Color::Red {
            out.push(Violation::OpenConcatenation { first: x, second: y });
        }
    }
    out
}

fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r.clone());
        return;
    }
    // pivot on the candidate dominating the most of P
    let pivot = p
        .iter()
        .chain(x.iter())
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        r.push(v);
        let p2 = p.iter().copied().filter(|&w| adj[v][w]).collect();
        let x2 = x.iter().copied().filter(|&w| adj[v][w]).collect();
        bron_kerbosch(adj, r, p2, x2, out);
        r.pop();
        p.retain(|&w| w != v);
        x.push(v);
    }
}
