//! Inputs shared by the benchmarks.

use symlam::{Chord, SymmetricPair};

/// Legal seeds of increasing preperiod.
pub fn seeds() -> Vec<SymmetricPair> {
    [((5, 24), (7, 24)), ((2, 9), (5, 18)), ((5, 27), (11, 54))]
        .into_iter()
        .map(|(x, y)| SymmetricPair::new(Chord::ratio(x, y)))
        .collect()
}

/// Short chords with denominator 216, legal or not.
pub fn short_chords() -> Vec<Chord> {
    (1..36u64)
        .flat_map(|w| (0..216u64).step_by(7).map(move |p| (p, w)))
        .map(|(p, w)| Chord::ratio((p as i64, 216), (((p + w) % 216) as i64, 216)))
        .collect()
}
