//! Chords of the unit disk with rational endpoints.
//!
//! Lengths, the five length classes, linking, images under the tripling
//! map, sibling collections, short strips and the critical quadrilateral
//! spanned by the two long/medium siblings of a short chord.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::circle::{self, in_closed_arc, in_open_arc, sigma3, tau, Angle};
use crate::error::{Error, Result};

pub(crate) fn frac(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// An unordered pair of circle points, stored with `a <= b`. `a == b` is a
/// degenerate chord, i.e. a single point of the circle.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chord {
    a: Angle,
    b: Angle,
}

impl Chord {
    pub fn new(x: Angle, y: Angle) -> Self {
        if x <= y {
            Chord { a: x, b: y }
        } else {
            Chord { a: y, b: x }
        }
    }

    pub fn point(x: Angle) -> Self {
        Chord { a: x.clone(), b: x }
    }

    /// Shorthand for chords with small rational endpoints: `Chord::ratio((1, 6), (1, 3))`.
    pub fn ratio(x: (i64, u64), y: (i64, u64)) -> Self {
        Chord::new(Angle::ratio(x.0, x.1), Angle::ratio(y.0, y.1))
    }

    pub fn a(&self) -> &Angle {
        &self.a
    }

    pub fn b(&self) -> &Angle {
        &self.b
    }

    pub fn endpoints(&self) -> [&Angle; 2] {
        [&self.a, &self.b]
    }

    pub fn is_degenerate(&self) -> bool {
        self.a == self.b
    }

    pub fn has_endpoint(&self, x: &Angle) -> bool {
        &self.a == x || &self.b == x
    }

    pub fn shares_endpoint(&self, other: &Chord) -> bool {
        self.has_endpoint(&other.a) || self.has_endpoint(&other.b)
    }

    /// The rotation of the chord by half a turn.
    pub fn tau(&self) -> Chord {
        Chord::new(tau(&self.a), tau(&self.b))
    }

    pub fn length(&self) -> BigRational {
        circle::circle_dist(&self.a, &self.b)
    }

    pub fn length_class(&self) -> LengthClass {
        LengthClass::of(&self.length())
    }

    pub fn is_critical(&self) -> bool {
        !self.is_degenerate() && sigma3(&self.a) == sigma3(&self.b)
    }

    pub fn is_diameter(&self) -> bool {
        tau(&self.a) == self.b
    }

    /// The endpoints ordered so that the positive arc from the first to the
    /// second is the shorter one. Diameters keep the canonical order.
    pub fn short_arc(&self) -> (&Angle, &Angle) {
        let forward = circle::forward_arc(&self.a, &self.b).to_rational();
        if forward <= frac(1, 2) {
            (&self.a, &self.b)
        } else {
            (&self.b, &self.a)
        }
    }

    /// Points and chords that meet nowhere, not even at an endpoint.
    pub fn disjoint(&self, other: &Chord) -> bool {
        !self.shares_endpoint(other) && !linked(self, other)
    }

    /// Parses `p/q-r/s` (either endpoint order) or a single point `p/q`.
    pub fn parse(token: &str) -> Result<Chord> {
        let wrap = |e: Error| Error::ParseChord {
            token: token.to_string(),
            reason: e.to_string(),
        };
        match token.split_once('-') {
            Some((x, y)) => {
                let x = Angle::parse(x).map_err(wrap)?;
                let y = Angle::parse(y).map_err(wrap)?;
                if x == y {
                    return Err(Error::ParseChord {
                        token: token.to_string(),
                        reason: "a degenerate chord is written as a single point".into(),
                    });
                }
                Ok(Chord::new(x, y))
            }
            None => Ok(Chord::point(Angle::parse(token).map_err(wrap)?)),
        }
    }
}

impl FromStr for Chord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Chord::parse(s)
    }
}

impl fmt::Display for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}-{}", self.a, self.b)
        }
    }
}

impl fmt::Debug for Chord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Length classes of chords: short `(0, 1/6)`, medium `[1/6, 1/3)`,
/// critical `1/3`, long `(1/3, 1/2]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LengthClass {
    Degenerate,
    Short,
    Medium,
    Critical,
    Long,
}

impl LengthClass {
    pub const ALL: [LengthClass; 5] = [
        LengthClass::Degenerate,
        LengthClass::Short,
        LengthClass::Medium,
        LengthClass::Critical,
        LengthClass::Long,
    ];

    pub fn of(length: &BigRational) -> LengthClass {
        if length.is_zero() {
            LengthClass::Degenerate
        } else if *length < frac(1, 6) {
            LengthClass::Short
        } else if *length < frac(1, 3) {
            LengthClass::Medium
        } else if *length == frac(1, 3) {
            LengthClass::Critical
        } else {
            LengthClass::Long
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LengthClass::Degenerate => "degenerate",
            LengthClass::Short => "short",
            LengthClass::Medium => "medium",
            LengthClass::Critical => "critical",
            LengthClass::Long => "long",
        }
    }

    pub fn is_long_or_medium(self) -> bool {
        matches!(self, LengthClass::Medium | LengthClass::Long)
    }
}

impl fmt::Display for LengthClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Chord length as a function of the length of its preimage: the distance
/// from `3t` to the nearest integer, for `t` in `[0, 1/2]`.
pub fn gamma(t: &BigRational) -> Result<BigRational> {
    if t.is_negative() || *t > frac(1, 2) {
        return Err(Error::LengthOutOfRange(t.to_string()));
    }
    let three_t = t * BigInt::from(3);
    let frac_part = &three_t - three_t.floor();
    let other = frac(1, 1) - &frac_part;
    Ok(frac_part.min(other))
}

/// Endpoint-wise image under the tripling map. Critical chords map to points.
pub fn image(l: &Chord) -> Chord {
    Chord::new(sigma3(&l.a), sigma3(&l.b))
}

/// True iff the two chords cross inside the open disk: their four endpoints
/// are distinct and strictly interleave. Points never link.
pub fn linked(l1: &Chord, l2: &Chord) -> bool {
    if l1.is_degenerate() || l2.is_degenerate() || l1.shares_endpoint(l2) {
        return false;
    }
    let inside = |x: &Angle| &l1.a < x && x < &l1.b;
    inside(&l2.a) != inside(&l2.b)
}

fn oriented_siblings(a: &Angle, b: &Angle) -> (Chord, Chord) {
    let third = Angle::ratio(1, 3);
    let two_thirds = Angle::ratio(2, 3);
    (
        Chord::new(a.add(&third), b.sub(&third)),
        Chord::new(a.add(&two_thirds), b.sub(&two_thirds)),
    )
}

fn check_sibling_input(l: &Chord, op: &'static str) -> Result<()> {
    let reason = if l.is_degenerate() {
        Some("chord is degenerate")
    } else if l.is_critical() {
        Some("chord is critical")
    } else if l.is_diameter() {
        Some("chord is a diameter")
    } else {
        None
    };
    match reason {
        Some(reason) => Err(Error::UnsupportedChord {
            op,
            chord: l.to_string(),
            reason,
        }),
        None => Ok(()),
    }
}

/// The two siblings `l' = (a + 1/3, b - 1/3)` and `l'' = (a + 2/3, b - 2/3)`
/// of `l`, where `(a, b)` is the shorter arc of `l`.
///
/// `{l, l', l''}` is always a sibling collection: the three chords have the
/// same image and are pairwise disjoint.
pub fn siblings(l: &Chord) -> Result<(Chord, Chord)> {
    check_sibling_input(l, "siblings")?;
    let (a, b) = l.short_arc();
    Ok(oriented_siblings(a, b))
}

/// The sibling collection obtained by rotating `l` by `1/3` and `2/3`.
pub fn rotational_siblings(l: &Chord) -> (Chord, Chord) {
    let third = Angle::ratio(1, 3);
    let two_thirds = Angle::ratio(2, 3);
    (
        Chord::new(l.a.add(&third), l.b.add(&third)),
        Chord::new(l.a.add(&two_thirds), l.b.add(&two_thirds)),
    )
}

/// Types of sibling collections by the length classes of their members.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SiblingType {
    Sss,
    Mmm,
    Sml,
}

impl fmt::Display for SiblingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SiblingType::Sss => "sss",
            SiblingType::Mmm => "mmm",
            SiblingType::Sml => "sml",
        })
    }
}

/// Classifies three chords as a sibling collection, or `None` when they are
/// not one (different or degenerate images, or not pairwise disjoint).
pub fn classify_collection(chords: &[Chord; 3]) -> Option<SiblingType> {
    let img = image(&chords[0]);
    if img.is_degenerate() || chords.iter().any(|c| image(c) != img) {
        return None;
    }
    let [x, y, z] = chords;
    if !(x.disjoint(y) && y.disjoint(z) && x.disjoint(z)) {
        return None;
    }
    let classes: Vec<LengthClass> = chords.iter().map(Chord::length_class).collect();
    let count = |c| classes.iter().filter(|&&k| k == c).count();
    match (count(LengthClass::Short), count(LengthClass::Medium), count(LengthClass::Long)) {
        (3, 0, 0) => Some(SiblingType::Sss),
        (0, 3, 0) => Some(SiblingType::Mmm),
        (1, 1, 1) => Some(SiblingType::Sml),
        _ => None,
    }
}

/// Type of the collection `{l, l', l''}` built by [`siblings`]: `Sss` when
/// all three members are short, `Sml` otherwise.
pub fn collection_type(l: &Chord) -> Result<SiblingType> {
    let (s1, s2) = siblings(l)?;
    let all_short = [l, &s1, &s2].iter().all(|c| c.length_class() == LengthClass::Short);
    Ok(if all_short { SiblingType::Sss } else { SiblingType::Sml })
}

/// The region between two disjoint chords, described by its two boundary
/// chords. Membership questions reduce to arc tests on the four endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub first: Chord,
    pub second: Chord,
}

impl Strip {
    /// Closed circle arc behind `side` (the one not facing the other chord).
    fn far_arc<'a>(&'a self, side: &'a Chord) -> (&'a Angle, &'a Angle) {
        let other = if side == &self.first { &self.second } else { &self.first };
        if in_open_arc(&side.a, &side.b, &other.a) || in_open_arc(&side.a, &side.b, &other.b) {
            (&side.b, &side.a)
        } else {
            (&side.a, &side.b)
        }
    }

    /// The two open arcs of the circle bounding the strip.
    fn open_arcs(&self) -> [(&Angle, &Angle); 2] {
        let (p0, p1) = self.far_arc(&self.first);
        let (q0, q1) = self.far_arc(&self.second);
        // Going around: p0 .. p1 (behind first), p1 .. q0 (strip), q0 .. q1 (behind second), q1 .. p0 (strip).
        [(p1, q0), (q1, p0)]
    }

    /// True iff the chord `x` meets the open interior of the strip.
    pub fn interior_hit(&self, x: &Chord) -> bool {
        if x.is_degenerate() {
            return false;
        }
        let arcs = self.open_arcs();
        let in_strip_arc = |t: &Angle| arcs.iter().any(|(s, e)| in_open_arc(s, e, t));
        if in_strip_arc(&x.a) || in_strip_arc(&x.b) {
            return true;
        }
        let (f0, f1) = self.far_arc(&self.first);
        let (s0, s1) = self.far_arc(&self.second);
        let behind_first = |t: &Angle| in_closed_arc(f0, f1, t);
        let behind_second = |t: &Angle| in_closed_arc(s0, s1, t);
        (behind_first(&x.a) && behind_second(&x.b)) || (behind_second(&x.a) && behind_first(&x.b))
    }

    /// True iff the point `t` lies in the closed strip.
    pub fn contains_point(&self, t: &Angle) -> bool {
        let arcs = self.open_arcs();
        arcs.iter().any(|(s, e)| in_closed_arc(s, e, t))
    }

    /// Width: the length of the longer boundary arc.
    pub fn width(&self) -> BigRational {
        let arcs = self.open_arcs();
        let l0 = circle::forward_arc(arcs[0].0, arcs[0].1).to_rational();
        let l1 = circle::forward_arc(arcs[1].0, arcs[1].1).to_rational();
        l0.max(l1)
    }
}

/// The short strips `C(l)` and `C(-l)` of a long or medium chord `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShortStrips {
    pub base: Chord,
    pub sibling: Chord,
    pub width: BigRational,
    strips: [Strip; 2],
}

impl ShortStrips {
    /// `C(l)`, bounded by `l` and its long/medium sibling.
    pub fn strip(&self) -> &Strip {
        &self.strips[0]
    }

    /// `C(-l) = -C(l)`.
    pub fn opposite(&self) -> &Strip {
        &self.strips[1]
    }
}

/// Builds the short strips of a long or medium non-critical chord.
pub fn short_strips(l: &Chord) -> Result<ShortStrips> {
    let class = l.length_class();
    if !class.is_long_or_medium() {
        return Err(Error::UnsupportedChord {
            op: "short_strips",
            chord: l.to_string(),
            reason: "chord is not long or medium",
        });
    }
    let (a, b) = l.short_arc();
    let (s1, s2) = oriented_siblings(a, b);
    let sibling = if s1.length_class().is_long_or_medium() { s1 } else { s2 };
    let width = (frac(1, 3) - l.length()).abs();
    let strip = Strip {
        first: l.clone(),
        second: sibling.clone(),
    };
    let opposite = Strip {
        first: l.tau(),
        second: sibling.tau(),
    };
    Ok(ShortStrips {
        base: l.clone(),
        sibling,
        width,
        strips: [strip, opposite],
    })
}

/// True iff `x` meets the open region `C(l) ∪ C(-l)`.
pub fn strip_interior_hit(s: &ShortStrips, x: &Chord) -> bool {
    s.strips.iter().any(|strip| strip.interior_hit(x))
}

/// The major chords attached to a short or degenerate chord `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MajorData {
    /// The long sibling of `c` (or the critical chord when `c` is a point).
    pub major: Chord,
    /// The medium sibling of `c` (equal to `major` when `c` is a point).
    pub major_prime: Chord,
    /// Vertices of the convex hull of both majors, increasing.
    pub quad: Vec<Angle>,
    pub degenerate: bool,
}

impl MajorData {
    /// Boundary chords of the hull: four edges, or the single critical chord.
    pub fn quad_edges(&self) -> Vec<Chord> {
        if self.degenerate {
            return vec![self.major.clone()];
        }
        let n = self.quad.len();
        (0..n)
            .map(|i| Chord::new(self.quad[i].clone(), self.quad[(i + 1) % n].clone()))
            .collect()
    }

    /// The two edges of the hull that are not majors.
    pub fn short_edges(&self) -> Vec<Chord> {
        self.quad_edges()
            .into_iter()
            .filter(|e| e != &self.major && e != &self.major_prime)
            .collect()
    }
}

/// `M_c`, `M'_c` and their hull `Q_c` for a short chord `c`; for a point
/// `c`, the critical chord with the same image that avoids `c`.
pub fn major_data(c: &Chord) -> Result<MajorData> {
    if c.is_degenerate() {
        let x = c.a();
        let major = Chord::new(x.add(&Angle::ratio(1, 3)), x.add(&Angle::ratio(2, 3)));
        return Ok(MajorData {
            quad: vec![major.a.clone(), major.b.clone()],
            major_prime: major.clone(),
            major,
            degenerate: true,
        });
    }
    if c.length() >= frac(1, 6) {
        return Err(Error::NotShort(c.to_string()));
    }
    let (s1, s2) = siblings(c)?;
    let (major, major_prime) = if s1.length_class() == LengthClass::Long { (s1, s2) } else { (s2, s1) };
    let mut quad = vec![major.a.clone(), major.b.clone(), major_prime.a.clone(), major_prime.b.clone()];
    quad.sort();
    Ok(MajorData {
        major,
        major_prime,
        quad,
        degenerate: false,
    })
}

/// Finds a linked pair in a family of chords, or `None` if the family is
/// pairwise unlinked. Shared endpoints are allowed.
///
/// Unlinked chords viewed as intervals `[a, b]` of `[0, 1)` form a laminar
/// family; a single sweep with a stack detects the first violation.
pub fn find_crossing<'a, I>(chords: I) -> Option<(Chord, Chord)>
where
    I: IntoIterator<Item = &'a Chord>,
{
    let mut items: Vec<&Chord> = chords.into_iter().filter(|c| !c.is_degenerate()).collect();
    items.sort_by(|x, y| x.a.cmp(&y.a).then_with(|| y.b.cmp(&x.b)));
    let mut stack: Vec<&Chord> = Vec::new();
    for c in items {
        while let Some(top) = stack.last() {
            if top.b <= c.a {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(top) = stack.last() {
            if c.b > top.b && c.a != top.a {
                return Some(((*top).clone(), c.clone()));
            }
        }
        stack.push(c);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ch(x: (i64, u64), y: (i64, u64)) -> Chord {
        Chord::ratio(x, y)
    }

    fn pt(x: (i64, u64)) -> Chord {
        Chord::point(Angle::ratio(x.0, x.1))
    }

    #[test]
    fn length_examples() {
        assert_eq!(ch((0, 1), (1, 2)).length(), frac(1, 2));
        assert_eq!(ch((1, 6), (1, 3)).length(), frac(1, 6));
        assert_eq!(ch((1, 8), (3, 8)).length(), frac(1, 4));
    }

    #[test]
    fn length_classes_use_half_open_boundaries() {
        assert_eq!(ch((1, 6), (1, 3)).length_class(), LengthClass::Medium);
        assert_eq!(ch((0, 1), (1, 3)).length_class(), LengthClass::Critical);
        assert_eq!(ch((0, 1), (1, 2)).length_class(), LengthClass::Long);
        assert_eq!(ch((0, 1), (1, 7)).length_class(), LengthClass::Short);
        assert_eq!(pt((1, 5)).length_class(), LengthClass::Degenerate);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&frac(1, 4)).unwrap(), frac(1, 4));
        assert_eq!(gamma(&frac(5, 12)).unwrap(), frac(1, 4));
        assert_eq!(gamma(&frac(1, 3)).unwrap(), frac(0, 1));
        assert!(gamma(&frac(3, 5)).is_err());
        assert!(gamma(&frac(-1, 5)).is_err());
    }

    #[test]
    fn image_examples() {
        assert_eq!(image(&ch((1, 6), (1, 3))), ch((0, 1), (1, 2)));
        assert_eq!(image(&ch((0, 1), (1, 3))), pt((0, 1)));
        assert_eq!(image(&ch((1, 8), (3, 8))), ch((1, 8), (3, 8)));
    }

    #[test]
    fn linking_examples() {
        assert!(linked(&ch((0, 1), (1, 2)), &ch((1, 4), (3, 4))));
        assert!(!linked(&ch((0, 1), (1, 2)), &ch((1, 6), (1, 3))));
        assert!(!linked(&ch((0, 1), (1, 4)), &ch((1, 4), (1, 2))));
        let d = ch((0, 1), (1, 2));
        assert!(!linked(&d, &d));
        assert!(!linked(&d, &pt((1, 4))));
    }

    #[test]
    fn sibling_examples() {
        let (s1, s2) = siblings(&ch((1, 6), (1, 3))).unwrap();
        assert_eq!((s1, s2), (ch((0, 1), (1, 2)), ch((2, 3), (5, 6))));
        // (a + 1/3, b - 1/3) and (a + 2/3, b - 2/3) for the short arc (1/12, 1/6).
        let (s1, s2) = siblings(&ch((1, 12), (1, 6))).unwrap();
        assert_eq!((s1, s2), (ch((5, 12), (5, 6)), ch((1, 2), (3, 4))));
        let (s1, s2) = siblings(&ch((0, 1), (1, 12))).unwrap();
        assert_eq!((s1, s2), (ch((1, 3), (3, 4)), ch((5, 12), (2, 3))));
    }

    #[test]
    fn siblings_reject_ambiguous_inputs() {
        assert!(siblings(&ch((0, 1), (1, 2))).is_err());
        assert!(siblings(&ch((1, 4), (7, 12))).is_err());
        assert!(siblings(&pt((1, 3))).is_err());
    }

    #[test]
    fn sibling_collection_types() {
        assert_eq!(collection_type(&ch((1, 12), (1, 6))).unwrap(), SiblingType::Sml);
        assert_eq!(collection_type(&ch((1, 6), (1, 3))).unwrap(), SiblingType::Sml);
        // The collection built from the shorter arc is never (sss) for a short
        // chord; the rotated collection is.
        let l = ch((0, 1), (1, 18));
        assert_eq!(collection_type(&l).unwrap(), SiblingType::Sml);
        let (r1, r2) = rotational_siblings(&l);
        assert_eq!(classify_collection(&[l, r1, r2]), Some(SiblingType::Sss));
        let m = ch((0, 1), (1, 5));
        let (r1, r2) = rotational_siblings(&m);
        assert_eq!(classify_collection(&[m, r1, r2]), Some(SiblingType::Mmm));
        assert_eq!(
            classify_collection(&[ch((0, 1), (1, 2)), ch((1, 4), (3, 4)), ch((1, 6), (1, 3))]),
            None
        );
    }

    #[test]
    fn short_strip_examples() {
        let s = short_strips(&ch((0, 1), (1, 2))).unwrap();
        assert_eq!(s.width, frac(1, 6));
        assert!(s.sibling == ch((1, 6), (1, 3)) || s.sibling == ch((2, 3), (5, 6)));
        let s2 = short_strips(&ch((1, 8), (3, 8))).unwrap();
        assert_eq!(s2.width, frac(1, 12));
        assert!(short_strips(&ch((1, 4), (7, 12))).is_err());
        assert!(short_strips(&ch((0, 1), (1, 12))).is_err());
    }

    #[test]
    fn strip_hits() {
        let s = short_strips(&ch((0, 1), (1, 2))).unwrap();
        assert!(strip_interior_hit(&s, &ch((1, 12), (5, 12))));
        assert!(!strip_interior_hit(&s, &ch((1, 6), (1, 3))));
        assert!(strip_interior_hit(&s, &ch((2, 5), (3, 5))));
        assert!(!strip_interior_hit(&s, &ch((0, 1), (1, 2))));
        assert!(!strip_interior_hit(&s, &ch((1, 5), (3, 10))));
        // A diagonal joining two corners of the strip passes through it.
        assert!(strip_interior_hit(&s, &ch((0, 1), (1, 3))));
    }

    #[test]
    fn major_data_examples() {
        let md = major_data(&pt((1, 2))).unwrap();
        assert_eq!(md.major, ch((1, 6), (5, 6)));
        assert!(md.degenerate);
        let md = major_data(&pt((0, 1))).unwrap();
        assert_eq!(md.major, ch((1, 3), (2, 3)));
        let md = major_data(&ch((1, 12), (1, 6))).unwrap();
        assert_eq!(md.major, ch((5, 12), (5, 6)));
        assert_eq!(md.major_prime, ch((1, 2), (3, 4)));
        assert_eq!(md.quad_edges().len(), 4);
        assert_eq!(md.short_edges(), vec![ch((5, 12), (1, 2)), ch((3, 4), (5, 6))]);
        assert!(major_data(&ch((1, 6), (1, 3))).is_err());
    }

    #[test]
    fn crossing_sweep() {
        let ok = [ch((0, 1), (1, 2)), ch((1, 6), (1, 3)), ch((0, 1), (1, 6)), ch((2, 3), (5, 6))];
        assert_eq!(find_crossing(&ok), None);
        let bad = [ch((0, 1), (1, 2)), ch((1, 4), (3, 4))];
        assert!(find_crossing(&bad).is_some());
        let nested_shared = [ch((0, 1), (1, 2)), ch((0, 1), (1, 4)), ch((1, 4), (1, 2))];
        assert_eq!(find_crossing(&nested_shared), None);
    }

    #[test]
    fn parse_and_display() {
        let c: Chord = "1/3-1/6".parse().unwrap();
        assert_eq!(c.to_string(), "1/6-1/3");
        assert_eq!("1/2".parse::<Chord>().unwrap(), pt((1, 2)));
        assert!("1/2-1/2".parse::<Chord>().is_err());
        assert!("1/2-2/4".parse::<Chord>().is_err());
    }
}
