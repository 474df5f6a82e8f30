//! Symmetric cubic laminations of the circle.
//!
//! Exact rational angles under the tripling map, chords and their length
//! classes, the legal-pair test for comajors, finite-depth pullback
//! laminations, their gaps, enumeration of comajors by orbit type and SVG
//! rendering.

pub mod chords;
pub mod circle;
pub mod comajors;
pub mod error;
pub mod format;
pub mod gaps;
pub mod legality;
pub mod pullback;
pub mod render;

pub use chords::{Chord, LengthClass, SiblingType};
pub use circle::{Angle, OrbitInfo};
pub use comajors::{enumerate_comajors, verify_cscl, Bounds, ComajorRecord, CsclApprox, Kind};
pub use error::{Error, Result};
pub use gaps::{central_gap, compute_gaps, CentralGap, Gap, GapTag};
pub use legality::{is_legal_pair, LegalityVerdict, SymmetricPair, Violation};
pub use pullback::{build_l16, build_pullback, comajor_pair, verify_prelamination, LeafSet};
pub use render::{render_svg, Mode, RenderStyle};
