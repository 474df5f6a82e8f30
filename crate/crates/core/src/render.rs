//! SVG chord diagrams.
//!
//! Output is a pure function of the chords and the style. Coordinates are
//! written with six decimals; multiples of `1/24` use exact trigonometric
//! values, and `t >= 1/2` is drawn as the negation of `t - 1/2`, so
//! half-turn symmetric inputs give exactly symmetric coordinates.

use std::f64::consts::{SQRT_2, TAU};
use std::fmt::Write as _;

use num_traits::ToPrimitive;

use crate::chords::{find_crossing, Chord, LengthClass};
use crate::circle::Angle;
use crate::error::{Error, Result};
use crate::gaps::{faces_of, GapTag};

pub const FORMAT_VERSION: &str = "symlam-svg 1";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    StraightChord,
    HyperbolicGeodesic,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RenderStyle {
    pub mode: Mode,
    pub size_px: u32,
    /// Stroke width in pixels.
    pub stroke_px: f64,
    /// Colors indexed like [`LengthClass::ALL`].
    pub colors: [String; 5],
    /// Shade polygons that collapse or cover their image more than once.
    pub shade_critical: bool,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            mode: Mode::HyperbolicGeodesic,
            size_px: 800,
            stroke_px: 1.0,
            colors: [
                "#000000".into(),
                "#1f5fa8".into(),
                "#2a8a3e".into(),
                "#c0392b".into(),
                "#7d3c98".into(),
            ],
            shade_critical: false,
        }
    }
}

impl RenderStyle {
    pub fn validate(&self) -> Result<()> {
        if self.size_px < 64 {
            return Err(Error::InvalidStyle(format!("size {} is below 64 pixels", self.size_px)));
        }
        if !(self.stroke_px.is_finite() && self.stroke_px > 0.0) {
            return Err(Error::InvalidStyle(format!("stroke width {} is not positive", self.stroke_px)));
        }
        if let Some(i) = self.colors.iter().position(|c| c.is_empty() || c.contains(['"', '<', '>', '&'])) {
            return Err(Error::InvalidStyle(format!(
                "bad color for {} chords",
                LengthClass::ALL[i]
            )));
        }
        Ok(())
    }

    fn color(&self, class: LengthClass) -> &str {
        let i = LengthClass::ALL.iter().position(|&c| c == class).expect("class listed");
        &self.colors[i]
    }
}

/// Exact cosines of `k * 15` degrees for `k = 0..=6`.
fn cos15(k: usize) -> f64 {
    let s3 = 3f64.sqrt();
    let s6 = 6f64.sqrt();
    match k {
        0 => 1.0,
        1 => (s6 + SQRT_2) / 4.0,
        2 => s3 / 2.0,
        3 => SQRT_2 / 2.0,
        4 => 0.5,
        5 => (s6 - SQRT_2) / 4.0,
        6 => 0.0,
        _ => unreachable!(),
    }
}

/// `(cos 2πt, sin 2πt)` for `t` in `[0, 1/2)`.
fn half_point(t: &Angle) -> (f64, f64) {
    let den = t.denom().to_u64();
    let num = t.numer().to_u64();
    if let (Some(n), Some(d)) = (num, den) {
        if 24 % d == 0 {
            let k = (n * (24 / d)) as usize;
            let (c, s) = if k <= 6 {
                (cos15(k), cos15(6 - k))
            } else {
                (-cos15(12 - k), cos15(k - 6))
            };
            return (c, s);
        }
    }
    let x = TAU * t.to_f64();
    (x.cos(), x.sin())
}

fn unit_point(t: &Angle) -> (f64, f64) {
    let half = Angle::ratio(1, 2);
    if *t >= half {
        let (x, y) = half_point(&t.sub(&half));
        (-x, -y)
    } else {
        half_point(t)
    }
}

fn num(x: f64) -> String {
    let s = format!("{x:.6}");
    if s == "-0.000000" {
        "0.000000".to_string()
    } else {
        s
    }
}

/// Screen coordinates: the y axis points down.
fn xy(t: &Angle) -> (String, String) {
    let (x, y) = unit_point(t);
    (num(x), num(-y))
}

/// Path commands drawing the chord from `from` to `to`, without the move.
fn segment(from: &Angle, to: &Angle, mode: Mode) -> String {
    let (x2, y2) = xy(to);
    let straight = from == to || mode == Mode::StraightChord || Chord::new(from.clone(), to.clone()).is_diameter();
    if straight {
        return format!("L {x2} {y2}");
    }
    let (p1, p2) = (unit_point(from), unit_point(to));
    let dot = p1.0 * p2.0 + p1.1 * p2.1;
    let c = ((p1.0 + p2.0) / (1.0 + dot), (p1.1 + p2.1) / (1.0 + dot));
    let r = ((p1.0 - c.0).powi(2) + (p1.1 - c.1).powi(2)).sqrt();
    // Travelling along the short circle arc is counterclockwise on the page
    // exactly when `to` follows `from` within half a turn.
    let forward = crate::circle::forward_arc(from, to).to_rational() < crate::chords::frac(1, 2);
    let sweep = if forward { 0 } else { 1 };
    format!("A {r} {r} 0 0 {sweep} {x2} {y2}", r = num(r))
}

fn chord_path(c: &Chord, mode: Mode) -> String {
    let (a, b) = c.short_arc();
    let (x1, y1) = xy(a);
    format!("M {x1} {y1} {}", segment(a, b, mode))
}

/// Renders chords (and points, for degenerate chords) as an SVG document.
pub fn render_svg(leaves: &[Chord], style: &RenderStyle) -> Result<String> {
    style.validate()?;
    let mut sorted: Vec<&Chord> = leaves.iter().collect();
    sorted.sort();
    sorted.dedup();
    let w = num(style.stroke_px * 2.1 / f64::from(style.size_px));

    let mut out = String::new();
    let size = style.size_px;
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="-1.05 -1.05 2.1 2.1">"#
    );
    let _ = writeln!(out, "<!-- {FORMAT_VERSION} -->");
    let _ = writeln!(out, r#"<rect x="-1.05" y="-1.05" width="2.1" height="2.1" fill="white"/>"#);

    let chords: Vec<&Chord> = sorted.iter().copied().filter(|c| !c.is_degenerate()).collect();
    if style.shade_critical && find_crossing(chords.iter().copied()).is_none() {
        for g in faces_of(chords.iter().copied()) {
            if !(g.has_tag(GapTag::Critical) || g.has_tag(GapTag::CollapsingQuad)) {
                continue;
            }
            let vs = &g.vertices;
            let (x0, y0) = xy(&vs[0]);
            let mut d = format!("M {x0} {y0}");
            for i in 0..vs.len() {
                let _ = write!(d, " {}", segment(&vs[i], &vs[(i + 1) % vs.len()], style.mode));
            }
            let _ = writeln!(out, r##"<path class="critical" d="{d} Z" fill="#e8e8e8" stroke="none"/>"##);
        }
    }

    let _ = writeln!(
        out,
        r#"<circle cx="0" cy="0" r="1" fill="none" stroke="black" stroke-width="{w}"/>"#
    );
    let _ = writeln!(out, r#"<g fill="none" stroke-width="{w}" stroke-linecap="round">"#);
    for c in &chords {
        let class = c.length_class();
        let _ = writeln!(
            out,
            r#"<path class="leaf {}" stroke="{}" d="{}"/>"#,
            class.name(),
            style.color(class),
            chord_path(c, style.mode)
        );
    }
    let _ = writeln!(out, "</g>");
    let dot = num(3.0 * style.stroke_px * 2.1 / f64::from(style.size_px));
    for p in sorted.iter().filter(|c| c.is_degenerate()) {
        let (x, y) = xy(p.a());
        let _ = writeln!(
            out,
            r#"<circle class="point" cx="{x}" cy="{y}" r="{dot}" fill="{}"/>"#,
            style.color(LengthClass::Degenerate)
        );
    }
    out.push_str("</svg>\n");
    Ok(out)
}
