//! Deciding whether a symmetric pair `{c, -c}` of rational chords is legal.
//!
//! A non-degenerate short pair is legal when (a) no two forward images of
//! `c` and `-c` cross and (b) no image `σ₃ⁿ(c)`, `n >= 1`, meets the open
//! short strips of the long major `M_c`. Rational chords have finite forward
//! orbits, so both clauses are finite checks.

use std::collections::HashSet;
use std::fmt;

use crate::chords::{frac, image, linked, major_data, short_strips, strip_interior_hit, Chord};
use crate::circle::orbit_info;
use crate::error::{Error, Result};

/// A chord together with its half-turn rotation.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SymmetricPair {
    pub c: Chord,
    pub minus_c: Chord,
}

impl SymmetricPair {
    pub fn new(c: Chord) -> Self {
        let minus_c = c.tau();
        SymmetricPair { c, minus_c }
    }

    /// The same pair with the roles of `c` and `-c` exchanged.
    pub fn swapped(&self) -> Self {
        SymmetricPair {
            c: self.minus_c.clone(),
            minus_c: self.c.clone(),
        }
    }

    /// The smaller of the two chords in canonical order.
    pub fn representative(&self) -> &Chord {
        std::cmp::min(&self.c, &self.minus_c)
    }

    pub fn canonical(&self) -> SymmetricPair {
        SymmetricPair::new(self.representative().clone())
    }

    pub fn is_degenerate(&self) -> bool {
        self.c.is_degenerate()
    }
}

impl fmt::Display for SymmetricPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.c, self.minus_c)
    }
}

/// Witness for an illegal pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Violation {
    /// Images `first` (iterate `i`) and `second` (iterate `j`) of `±c` cross.
    CrossingImages {
        i: usize,
        j: usize,
        first: Chord,
        second: Chord,
    },
    /// `σ₃ⁿ(c)` meets the open short strips of `M_c`.
    StripHit { n: usize, image: Chord },
}

impl Violation {
    /// Re-evaluates the witness from scratch against the seed chord `c`.
    pub fn recheck(&self, c: &Chord) -> bool {
        match self {
            Violation::CrossingImages { first, second, .. } => linked(first, second),
            Violation::StripHit { image: img, .. } => {
                let Ok(md) = major_data(c) else { return false };
                let Ok(sh) = short_strips(&md.major) else { return false };
                strip_interior_hit(&sh, img)
            }
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::CrossingImages { i, j, first, second } => {
                write!(f, "images {first} (step {i}) and {second} (step {j}) cross")
            }
            Violation::StripHit { n, image } => {
                write!(f, "image {image} (step {n}) enters the short strips of the major")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LegalityVerdict {
    pub legal: bool,
    pub violation: Option<Violation>,
    /// Number of distinct forward images of `c` examined.
    pub orbit_length: usize,
}

/// `σ₃(c), σ₃²(c), ...` up to the first repetition, without duplicates.
pub fn forward_images(c: &Chord) -> Vec<Chord> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut x = image(c);
    while seen.insert(x.clone()) {
        let next = image(&x);
        out.push(x);
        x = next;
    }
    out
}

/// Decides the legality of `{c, -c}`.
///
/// Degenerate pairs are legal. Non-degenerate pairs must be short; the
/// length-`1/6` pairs lie outside this test.
pub fn is_legal_pair(p: &SymmetricPair) -> Result<LegalityVerdict> {
    let c = &p.c;
    let images = forward_images(c);
    if c.is_degenerate() {
        return Ok(LegalityVerdict {
            legal: true,
            violation: None,
            orbit_length: images.len(),
        });
    }
    if c.length() >= frac(1, 6) {
        return Err(Error::NotShort(c.to_string()));
    }
    let md = major_data(c)?;
    let sh = short_strips(&md.major)?;

    let illegal = |v: Violation| LegalityVerdict {
        legal: false,
        violation: Some(v),
        orbit_length: images.len(),
    };

    let mut orbit = Vec::with_capacity(images.len() + 1);
    orbit.push(c.clone());
    orbit.extend(images.iter().cloned());

    let mut family: Vec<(usize, Chord)> = Vec::with_capacity(2 * orbit.len());
    let mut seen: HashSet<Chord> = HashSet::new();
    for (n, x) in orbit.iter().enumerate() {
        let mut step = vec![x.clone(), x.tau()];
        step.sort();
        step.dedup();
        for y in step {
            if !seen.insert(y.clone()) {
                continue;
            }
            if let Some((i, z)) = family.iter().find(|(_, z)| linked(z, &y)) {
                return Ok(illegal(Violation::CrossingImages {
                    i: *i,
                    j: n,
                    first: z.clone(),
                    second: y,
                }));
            }
            family.push((n, y));
        }
        if n >= 1 && strip_interior_hit(&sh, x) {
            return Ok(illegal(Violation::StripHit { n, image: x.clone() }));
        }
    }
    Ok(LegalityVerdict {
        legal: true,
        violation: None,
        orbit_length: images.len(),
    })
}

/// Both endpoints of `c` have the same preperiod and period.
pub fn endpoint_consistency(c: &Chord) -> bool {
    let x = orbit_info(c.a());
    let y = orbit_info(c.b());
    x.preperiod == y.preperiod && x.period == y.period
}

/// Shorthand: `is_legal_pair` for the pair generated by `c`, mapping the
/// not-short error to `false`.
pub fn is_legal_chord(c: &Chord) -> bool {
    matches!(is_legal_pair(&SymmetricPair::new(c.clone())), Ok(v) if v.legal)
}
