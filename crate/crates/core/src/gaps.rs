//! Faces of a finite set of non-crossing chords, their images and degrees.
//!
//! The chords and the circle arcs between consecutive endpoints form a plane
//! graph. Faces are traced by the usual rotation-system walk; the face
//! outside the circle is dropped, so `k` chords always give `k + 1` faces.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chords::{frac, Chord, LengthClass};
use crate::circle::{forward_arc, sigma3, Angle};
use crate::error::{Error, Result};
use crate::pullback::LeafSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GapTag {
    /// Four vertices mapped onto the two endpoints of a chord.
    CollapsingQuad,
    /// A polygon mapped onto a chord or a point, or covering its image more
    /// than once.
    Critical,
    /// The origin lies inside the face.
    Central,
    /// Part of the face boundary is a circle arc that later generations may
    /// still subdivide.
    FiniteAtDepth,
}

impl GapTag {
    pub fn name(self) -> &'static str {
        match self {
            GapTag::CollapsingQuad => "collapsing-quad",
            GapTag::Critical => "critical",
            GapTag::Central => "central",
            GapTag::FiniteAtDepth => "finite-at-depth",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapEdge {
    Leaf(Chord),
    /// The positively oriented circle arc between two consecutive vertices.
    Arc(Angle, Angle),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gap {
    /// Increasing.
    pub vertices: Vec<Angle>,
    /// `edges[i]` joins `vertices[i]` to the next vertex.
    pub edges: Vec<GapEdge>,
    pub tags: BTreeSet<GapTag>,
}

impl Gap {
    pub fn has_tag(&self, t: GapTag) -> bool {
        self.tags.contains(&t)
    }

    pub fn leaf_edges(&self) -> impl Iterator<Item = &Chord> {
        self.edges.iter().filter_map(|e| match e {
            GapEdge::Leaf(c) => Some(c),
            GapEdge::Arc(..) => None,
        })
    }

    pub fn has_boundary_arc(&self) -> bool {
        self.edges.iter().any(|e| matches!(e, GapEdge::Arc(..)))
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vs: Vec<String> = self.vertices.iter().map(Angle::to_string).collect();
        let tags: Vec<&str> = self.tags.iter().map(|t| t.name()).collect();
        write!(f, "vertices={}", vs.join(","))?;
        if tags.is_empty() {
            write!(f, " tags=-")
        } else {
            write!(f, " tags={}", tags.join(","))
        }
    }
}

/// The convex hull of the images of the vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GapImage {
    Gap(Vec<Angle>),
    Chord(Chord),
    Point(Angle),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum EdgeKind {
    ArcNext,
    Chord,
    ArcPrev,
}

/// Faces of the subdivision of the disk by `ls`.
pub fn compute_gaps(ls: &LeafSet) -> Vec<Gap> {
    faces_of(ls.leaves())
}

/// Faces of the subdivision of the disk by a non-crossing family of chords.
pub fn faces_of<'a, I>(chords: I) -> Vec<Gap>
where
    I: IntoIterator<Item = &'a Chord>,
{
    let chords: Vec<&Chord> = chords.into_iter().filter(|c| !c.is_degenerate()).collect();
    let mut verts: Vec<Angle> = chords.iter().flat_map(|c| [c.a().clone(), c.b().clone()]).collect();
    verts.sort();
    verts.dedup();
    let n = verts.len();
    if n == 0 {
        return vec![tagged(Vec::new(), vec![GapEdge::Arc(Angle::zero(), Angle::zero())])];
    }
    let index = |x: &Angle| verts.binary_search(x).expect("endpoint is a vertex");

    // Rotation at each vertex: the forward arc, chords by increasing forward
    // distance of the far endpoint, then the backward arc.
    let mut chord_targets: Vec<Vec<usize>> = vec![Vec::new(); n];
    for c in &chords {
        let (i, j) = (index(c.a()), index(c.b()));
        chord_targets[i].push(j);
        chord_targets[j].push(i);
    }
    let offset = |v: usize, u: usize| (u + n - v) % n;
    for (v, ts) in chord_targets.iter_mut().enumerate() {
        ts.sort_by_key(|&u| offset(v, u));
        ts.dedup();
    }
    let degree = |v: usize| chord_targets[v].len() + 2;
    let target = |v: usize, p: usize| -> (usize, EdgeKind) {
        let k = chord_targets[v].len();
        if p == 0 {
            ((v + 1) % n, EdgeKind::ArcNext)
        } else if p <= k {
            (chord_targets[v][p - 1], EdgeKind::Chord)
        } else {
            ((v + n - 1) % n, EdgeKind::ArcPrev)
        }
    };
    let reverse_pos = |v: usize, p: usize| -> usize {
        let (u, kind) = target(v, p);
        match kind {
            EdgeKind::ArcNext => degree(u) - 1,
            EdgeKind::ArcPrev => 0,
            EdgeKind::Chord => {
                let key = offset(u, v);
                1 + chord_targets[u]
                    .binary_search_by_key(&key, |&w| offset(u, w))
                    .expect("chord is stored at both ends")
            }
        }
    };

    let mut visited: Vec<Vec<bool>> = (0..n).map(|v| vec![false; degree(v)]).collect();
    let mut faces = Vec::with_capacity(chords.len() + 1);
    for v0 in 0..n {
        for p0 in 0..degree(v0) - 1 {
            if visited[v0][p0] {
                continue;
            }
            let mut walk: Vec<(usize, GapEdge)> = Vec::new();
            let (mut v, mut p) = (v0, p0);
            while !visited[v][p] {
                visited[v][p] = true;
                let (u, kind) = target(v, p);
                let edge = match kind {
                    EdgeKind::Chord => GapEdge::Leaf(Chord::new(verts[v].clone(), verts[u].clone())),
                    _ => GapEdge::Arc(verts[v].clone(), verts[u].clone()),
                };
                walk.push((v, edge));
                let back = reverse_pos(v, p);
                p = back - 1;
                v = u;
            }
            let start = (0..walk.len()).min_by_key(|&i| walk[i].0).unwrap_or(0);
            walk.rotate_left(start);
            let (vs, es): (Vec<usize>, Vec<GapEdge>) = walk.into_iter().unzip();
            faces.push(tagged(vs.into_iter().map(|i| verts[i].clone()).collect(), es));
        }
    }
    faces
}

fn tagged(vertices: Vec<Angle>, edges: Vec<GapEdge>) -> Gap {
    let mut g = Gap {
        vertices,
        edges,
        tags: BTreeSet::new(),
    };
    if g.has_boundary_arc() {
        g.tags.insert(GapTag::FiniteAtDepth);
    }
    if is_central(&g.vertices) {
        g.tags.insert(GapTag::Central);
    }
    // Faces with a boundary arc are not final, so only closed polygons are
    // classified further.
    if g.vertices.len() >= 3 && !g.has_boundary_arc() {
        let img = gap_image(&g);
        if g.vertices.len() == 4 && matches!(img, GapImage::Chord(_)) {
            g.tags.insert(GapTag::CollapsingQuad);
        }
        let critical = match img {
            GapImage::Gap(_) => matches!(gap_degree(&g), Ok(d) if d > 1),
            _ => true,
        };
        if critical {
            g.tags.insert(GapTag::Critical);
        }
    }
    g
}

/// At least three vertices and every gap between consecutive vertices is
/// shorter than half the circle.
fn is_central(vs: &[Angle]) -> bool {
    if vs.len() < 3 {
        return false;
    }
    let half = frac(1, 2);
    (0..vs.len()).all(|i| forward_arc(&vs[i], &vs[(i + 1) % vs.len()]).to_rational() < half)
}

pub fn gap_image(g: &Gap) -> GapImage {
    let mut img: Vec<Angle> = g.vertices.iter().map(sigma3).collect();
    img.sort();
    img.dedup();
    match img.len() {
        0 => GapImage::Point(Angle::zero()),
        1 => GapImage::Point(img.remove(0)),
        2 => GapImage::Chord(Chord::new(img[0].clone(), img[1].clone())),
        _ => GapImage::Gap(img),
    }
}

/// Number of times the vertex images wind around the image gap, each step
/// moving to the same image vertex or the next one.
pub fn gap_degree(g: &Gap) -> Result<u32> {
    let GapImage::Gap(img) = gap_image(g) else {
        return Err(Error::DegenerateGapImage(g.to_string()));
    };
    let k = g.vertices.len();
    let pos = |x: &Angle| img.binary_search(x).expect("image vertex");
    let mut total = BigRational::zero();
    for i in 0..k {
        let x = sigma3(&g.vertices[i]);
        let y = sigma3(&g.vertices[(i + 1) % k]);
        let (px, py) = (pos(&x), pos(&y));
        if py != px && py != (px + 1) % img.len() {
            return Err(Error::OrientationReversed(g.to_string()));
        }
        total += forward_arc(&x, &y).to_rational();
    }
    if !total.is_integer() || total < BigRational::one() {
        return Err(Error::OrientationReversed(g.to_string()));
    }
    let d = total.to_integer();
    Ok(u32::try_from(d).unwrap_or(u32::MAX))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CentralGap {
    Diameter(Chord),
    Gap(Gap),
}

impl fmt::Display for CentralGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CentralGap::Diameter(c) => write!(f, "diameter {c}"),
            CentralGap::Gap(g) => write!(f, "gap {g}"),
        }
    }
}

/// The leaf or face containing the origin.
pub fn central_gap(ls: &LeafSet) -> Result<CentralGap> {
    if let Some(d) = ls.leaves().find(|c| c.is_diameter()) {
        return Ok(CentralGap::Diameter(d.clone()));
    }
    let mut central: Vec<Gap> = compute_gaps(ls).into_iter().filter(|g| g.has_tag(GapTag::Central)).collect();
    match central.len() {
        1 => Ok(CentralGap::Gap(central.remove(0))),
        _ => Err(Error::NoCentralGap),
    }
}

/// Critical leaves and collapsing quadrilaterals of a leaf set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalStructures {
    pub leaves: Vec<Chord>,
    pub quads: Vec<Gap>,
}

impl CriticalStructures {
    pub fn count(&self) -> usize {
        self.leaves.len() + self.quads.len()
    }
}

pub fn critical_structures(ls: &LeafSet) -> CriticalStructures {
    CriticalStructures {
        leaves: ls
            .leaves()
            .filter(|c| c.length_class() == LengthClass::Critical)
            .cloned()
            .collect(),
        quads: compute_gaps(ls)
            .into_iter()
            .filter(|g| g.has_tag(GapTag::CollapsingQuad))
            .collect(),
    }
}
