//! Enumeration of comajor pairs with prescribed preperiod and period.
//!
//! Endpoints of a non-degenerate comajor share their preperiod `m >= 1` and
//! period `k`, so candidates are short chords joining two angles of one
//! `(m, k)` class. All such angles have denominator dividing
//! `3^m (3^k - 1)`, which lets the candidate search run on an integer grid.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::chords::{find_crossing, Chord};
use crate::circle::{orbit_info, Angle};
use crate::error::{Error, Result};
use crate::legality::{forward_images, is_legal_pair, LegalityVerdict, SymmetricPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Degenerate,
    Preperiod1,
    HigherPreperiod,
    L16Special,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Degenerate => "degenerate",
            Kind::Preperiod1 => "preperiod1",
            Kind::HigherPreperiod => "higher-preperiod",
            Kind::L16Special => "l16-special",
        }
    }

    pub fn parse(s: &str) -> Option<Kind> {
        [Kind::Degenerate, Kind::Preperiod1, Kind::HigherPreperiod, Kind::L16Special]
            .into_iter()
            .find(|k| k.name() == s)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One comajor. The chord of the record is `pair.c`; its partner `-c` has a
/// record of its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComajorRecord {
    pub pair: SymmetricPair,
    pub preperiod: usize,
    pub period: usize,
    pub kind: Kind,
    pub verdict: LegalityVerdict,
}

impl ComajorRecord {
    pub fn chord(&self) -> &Chord {
        &self.pair.c
    }

    /// Builds a record for `c`, recomputing orbit data, kind and verdict.
    pub fn for_chord(c: Chord) -> Result<ComajorRecord> {
        let info = orbit_info(c.a());
        let kind = if c.is_degenerate() {
            Kind::Degenerate
        } else if crate::pullback::l16_index(&c).is_some() {
            Kind::L16Special
        } else if info.preperiod == 1 {
            Kind::Preperiod1
        } else {
            Kind::HigherPreperiod
        };
        let pair = SymmetricPair::new(c);
        let verdict = if kind == Kind::L16Special {
            LegalityVerdict {
                legal: true,
                violation: None,
                orbit_length: forward_images(&pair.c).len(),
            }
        } else {
            is_legal_pair(&pair)?
        };
        Ok(ComajorRecord {
            pair,
            preperiod: info.preperiod,
            period: info.period,
            kind,
            verdict,
        })
    }
}

/// Bounds and switches for [`enumerate_comajors`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_period: usize,
    pub max_preperiod: usize,
    pub include_degenerate: bool,
}

impl Bounds {
    pub fn new(max_period: usize, max_preperiod: usize) -> Self {
        Bounds {
            max_period,
            max_preperiod,
            include_degenerate: false,
        }
    }
}

/// A finite set of comajors, closed under the half-turn.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsclApprox {
    pub records: Vec<ComajorRecord>,
    pub max_period: usize,
    pub max_preperiod: usize,
}

impl CsclApprox {
    /// Largest endpoint denominator allowed by the bounds.
    pub fn max_denominator(&self) -> BigUint {
        class_denominator(self.max_preperiod, self.max_period)
    }

    pub fn chords(&self) -> impl Iterator<Item = &Chord> {
        self.records.iter().map(|r| r.chord())
    }
}

/// `3^m (3^k - 1)`.
pub fn class_denominator(m: usize, k: usize) -> BigUint {
    let three = BigUint::from(3u32);
    three.pow(m as u32) * (three.pow(k as u32) - 1u32)
}

/// Angles whose period divides `k`, increasing.
pub fn periodic_angles(k: usize) -> Vec<Angle> {
    assert!(k >= 1, "period must be positive");
    let den = class_denominator(0, k);
    let n = den.to_u64().expect("period bound fits in u64");
    (0..n).map(|p| Angle::new(p, den.clone())).collect()
}

/// Angles of exact period `k`, increasing.
pub fn exact_period_angles(k: usize) -> Vec<Angle> {
    periodic_angles(k)
        .into_iter()
        .filter(|a| orbit_info(a).period == k)
        .collect()
}

/// Angles of exact preperiod `m` and period `k`, increasing.
pub fn angles_with_orbit(m: usize, k: usize) -> Vec<Angle> {
    let den = class_denominator(m, k);
    let n = den.to_u64().expect("class denominator fits in u64");
    (0..n)
        .into_par_iter()
        .map(|p| Angle::new(p, den.clone()))
        .filter(|a| {
            let info = orbit_info(a);
            info.preperiod == m && info.period == k
        })
        .collect()
}

/// Short chords joining two angles of the `(m, k)` class, one per
/// symmetric pair (the canonical representative), in canonical order.
pub fn candidate_comajors(m: usize, k: usize) -> Vec<SymmetricPair> {
    let den = class_denominator(m, k);
    let n = den.to_u64().expect("class denominator fits in u64");
    let nums: Vec<u64> = angles_with_orbit(m, k)
        .iter()
        .map(|a| {
            let scale = &den / a.denom();
            (a.numer() * scale).to_u64().expect("numerator fits")
        })
        .collect();
    let short = |p: u64, q: u64| {
        let d = q.abs_diff(p);
        6 * d.min(n - d) < n
    };
    let mut out = Vec::new();
    for (i, &p) in nums.iter().enumerate() {
        for &q in &nums[i + 1..] {
            if !short(p, q) {
                continue;
            }
            let c = Chord::new(Angle::new(p, den.clone()), Angle::new(q, den.clone()));
            let pair = SymmetricPair::new(c);
            if pair.c <= pair.minus_c {
                out.push(pair);
            }
        }
    }
    out.sort_by(|x, y| x.c.cmp(&y.c));
    out
}

/// The four comajors of length `1/6`.
pub fn l16_special_chords() -> Vec<Chord> {
    vec![
        Chord::ratio((1, 12), (11, 12)),
        Chord::ratio((1, 6), (1, 3)),
        Chord::ratio((5, 12), (7, 12)),
        Chord::ratio((2, 3), (5, 6)),
    ]
}

/// All legal pairs whose endpoints have preperiod `1..=max_preperiod` and
/// period `1..=max_period`, both members of each pair, the comajors of
/// length `1/6`, and optionally every point of preperiod `0..=max_preperiod`
/// and period `1..=max_period`. Candidates are checked in parallel; the
/// output order is canonical.
pub fn enumerate_comajors(bounds: Bounds) -> Result<CsclApprox> {
    if bounds.max_period == 0 || bounds.max_preperiod == 0 {
        return Err(Error::InvariantViolation("enumeration bounds must be at least 1".into()));
    }
    let mut records: Vec<ComajorRecord> = Vec::new();
    for m in 1..=bounds.max_preperiod {
        for k in 1..=bounds.max_period {
            let kind = if m == 1 { Kind::Preperiod1 } else { Kind::HigherPreperiod };
            let accepted: Vec<ComajorRecord> = candidate_comajors(m, k)
                .into_par_iter()
                .map(|pair| -> Result<Vec<ComajorRecord>> {
                    let verdict = is_legal_pair(&pair)?;
                    if !verdict.legal {
                        return Ok(Vec::new());
                    }
                    let swapped = pair.swapped();
                    Ok(vec![
                        ComajorRecord {
                            pair,
                            preperiod: m,
                            period: k,
                            kind,
                            verdict: verdict.clone(),
                        },
                        ComajorRecord {
                            pair: swapped,
                            preperiod: m,
                            period: k,
                            kind,
                            verdict,
                        },
                    ])
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect();
            records.extend(accepted);
        }
    }
    for c in l16_special_chords() {
        records.push(ComajorRecord::for_chord(c)?);
    }
    if bounds.include_degenerate {
        for m in 0..=bounds.max_preperiod {
            for k in 1..=bounds.max_period {
                for a in angles_with_orbit(m, k) {
                    records.push(ComajorRecord {
                        verdict: is_legal_pair(&SymmetricPair::new(Chord::point(a.clone())))?,
                        pair: SymmetricPair::new(Chord::point(a)),
                        preperiod: m,
                        period: k,
                        kind: Kind::Degenerate,
                    });
                }
            }
        }
    }
    records.sort_by(|x, y| x.pair.c.cmp(&y.pair.c));
    let approx = CsclApprox {
        records,
        max_period: bounds.max_period,
        max_preperiod: bounds.max_preperiod,
    };
    let report = verify_cscl(&approx);
    if !report.is_ok() {
        return Err(Error::InvariantViolation(report.to_string()));
    }
    Ok(approx)
}

/// Violations of the structural properties of a comajor set.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CsclReport {
    pub crossing: Option<(Chord, Chord)>,
    /// Endpoints shared by more than two comajors, with their multiplicity.
    pub crowded_endpoints: Vec<(Angle, usize)>,
    pub missing_tau: Vec<Chord>,
}

impl CsclReport {
    pub fn is_ok(&self) -> bool {
        self.crossing.is_none() && self.crowded_endpoints.is_empty() && self.missing_tau.is_empty()
    }
}

impl fmt::Display for CsclReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        if let Some((x, y)) = &self.crossing {
            writeln!(f, "crossing comajors: {x} and {y}")?;
        }
        for (a, k) in &self.crowded_endpoints {
            writeln!(f, "{k} comajors meet at {a}")?;
        }
        for c in &self.missing_tau {
            writeln!(f, "missing rotation of {c}")?;
        }
        Ok(())
    }
}

/// Checks that comajors do not cross, that at most two meet at any point and
/// that the set is closed under the half-turn.
pub fn verify_cscl(approx: &CsclApprox) -> CsclReport {
    let chords: Vec<&Chord> = approx.chords().filter(|c| !c.is_degenerate()).collect();
    let present: std::collections::HashSet<&Chord> = approx.chords().collect();
    let mut incidence: HashMap<&Angle, usize> = HashMap::new();
    for c in &chords {
        for p in c.endpoints() {
            *incidence.entry(p).or_default() += 1;
        }
    }
    let mut crowded: Vec<(Angle, usize)> = incidence
        .into_iter()
        .filter(|&(_, k)| k > 2)
        .map(|(a, k)| (a.clone(), k))
        .collect();
    crowded.sort();
    CsclReport {
        crossing: find_crossing(chords.iter().copied()),
        crowded_endpoints: crowded,
        missing_tau: approx
            .chords()
            .filter(|c| !present.contains(&c.tau()))
            .cloned()
            .collect(),
    }
}

/// Pairs `(p, x)` where `p` is a comajor of preperiod 1 and `x` is another
/// comajor sharing an endpoint with it.
pub fn preperiod1_contacts(approx: &CsclApprox) -> Vec<(Chord, Chord)> {
    let chords: Vec<&ComajorRecord> = approx.records.iter().filter(|r| !r.pair.c.is_degenerate()).collect();
    let mut by_endpoint: HashMap<&Angle, Vec<&Chord>> = HashMap::new();
    for r in &chords {
        for p in r.chord().endpoints() {
            by_endpoint.entry(p).or_default().push(r.chord());
        }
    }
    let mut out = Vec::new();
    for r in chords.iter().filter(|r| r.preperiod == 1) {
        for p in r.chord().endpoints() {
            for x in &by_endpoint[p] {
                if *x != r.chord() {
                    out.push((r.chord().clone(), (*x).clone()));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: u64) -> Angle {
        Angle::ratio(p, d)
    }

    #[test]
    fn periodic_angle_sets() {
        assert_eq!(exact_period_angles(1), vec![q(0, 1), q(1, 2)]);
        assert_eq!(
            exact_period_angles(2),
            vec![q(1, 8), q(1, 4), q(3, 8), q(5, 8), q(3, 4), q(7, 8)]
        );
        assert_eq!(exact_period_angles(3).len(), 24);
        assert_eq!(periodic_angles(2).len(), 8);
    }

    #[test]
    fn preperiod_one_fixed_class() {
        assert_eq!(angles_with_orbit(1, 1), vec![q(1, 6), q(1, 3), q(2, 3), q(5, 6)]);
        // No two of them are closer than 1/6, so there are no candidates.
        assert!(candidate_comajors(1, 1).is_empty());
    }

    #[test]
    fn smallest_enumeration_contains_l16_pairs() {
        let a = enumerate_comajors(Bounds::new(1, 1)).unwrap();
        let chords: Vec<&Chord> = a.chords().collect();
        for c in l16_special_chords() {
            assert!(chords.contains(&&c));
        }
        assert!(a.records.iter().all(|r| r.kind == Kind::L16Special));
    }

    fn unchecked(cs: Vec<Chord>) -> CsclApprox {
        let records = cs
            .into_iter()
            .map(|c| ComajorRecord {
                pair: SymmetricPair::new(c),
                preperiod: 0,
                period: 0,
                kind: Kind::HigherPreperiod,
                verdict: LegalityVerdict {
                    legal: true,
                    violation: None,
                    orbit_length: 0,
                },
            })
            .collect();
        CsclApprox {
            records,
            max_period: 1,
            max_preperiod: 1,
        }
    }

    #[test]
    fn crossing_is_reported() {
        let a = unchecked(vec![Chord::ratio((0, 1), (1, 2)), Chord::ratio((1, 4), (3, 4))]);
        let r = verify_cscl(&a);
        assert!(r.crossing.is_some());
        assert!(r.missing_tau.is_empty());
    }

    #[test]
    fn crowded_endpoint_is_reported() {
        let mut cs = vec![
            Chord::ratio((1, 10), (1, 5)),
            Chord::ratio((1, 20), (1, 10)),
            Chord::ratio((1, 10), (3, 20)),
        ];
        cs.extend(cs.clone().iter().map(Chord::tau));
        let r = verify_cscl(&unchecked(cs));
        assert_eq!(r.crowded_endpoints, vec![(q(1, 10), 3), (q(3, 5), 3)]);
        assert!(r.crossing.is_none());
    }

    #[test]
    fn missing_partner_is_reported() {
        let r = verify_cscl(&unchecked(vec![Chord::ratio((1, 6), (1, 3))]));
        assert_eq!(r.missing_tau, vec![Chord::ratio((1, 6), (1, 3))]);
    }
}
