use std::sync::OnceLock;

use num_bigint::BigUint;
use proptest::prelude::*;

use symlam::chords::{find_crossing, image, linked, short_strips, siblings, strip_interior_hit, Chord, LengthClass};
use symlam::circle::{orbit_info, Angle};
use symlam::comajors::{enumerate_comajors, Bounds, CsclApprox, Kind};
use symlam::format::{read_leafset, write_leafset};
use symlam::gaps::faces_of;
use symlam::legality::{forward_images, is_legal_pair, SymmetricPair};
use symlam::pullback::{build_l16, build_pullback, LeafSet};
use symlam::render::{render_svg, Mode, RenderStyle};

const DENOMS: [u64; 9] = [12, 18, 24, 54, 72, 78, 216, 234, 240];

fn angle_in(den: u64) -> impl Strategy<Value = Angle> {
    (0..den).prop_map(move |p| Angle::new(p, den))
}

fn chord() -> impl Strategy<Value = Chord> {
    prop::sample::select(DENOMS.to_vec())
        .prop_flat_map(|d| (angle_in(d), angle_in(d)))
        .prop_map(|(x, y)| Chord::new(x, y))
}

fn short_chord() -> impl Strategy<Value = Chord> {
    chord().prop_filter("short", |c| c.length_class() == LengthClass::Short)
}

fn comajors() -> &'static CsclApprox {
    static CELL: OnceLock<CsclApprox> = OnceLock::new();
    CELL.get_or_init(|| enumerate_comajors(Bounds::new(3, 1)).unwrap())
}

/// Comajors with a pullback lamination built from the seed.
fn comajor() -> impl Strategy<Value = Chord> {
    let seeds: Vec<Chord> = comajors()
        .records
        .iter()
        .filter(|r| r.kind != Kind::L16Special)
        .map(|r| r.chord().clone())
        .collect();
    prop::sample::select(seeds)
}

/// Multiplicative order of 3 modulo `r`, coprime to 3.
fn order_of_three(r: u64) -> usize {
    if r == 1 {
        return 1;
    }
    let mut x = 3 % r;
    let mut k = 1;
    while x != 1 {
        x = x * 3 % r;
        k += 1;
    }
    k
}

fn pairwise_crossing(cs: &[Chord]) -> bool {
    cs.iter().enumerate().any(|(i, x)| cs[i + 1..].iter().any(|y| linked(x, y)))
}

type P = (f64, f64);

fn pt(t: &Angle) -> P {
    let x = std::f64::consts::TAU * t.to_f64();
    (x.cos(), x.sin())
}

/// Signed side of `p` relative to the line through `c`, positive on the
/// side of `toward`.
fn side(c: &Chord, toward: &Chord, p: P) -> f64 {
    let (a, b) = (pt(c.a()), pt(c.b()));
    let f = |q: P| (b.0 - a.0) * (q.1 - a.1) - (b.1 - a.1) * (q.0 - a.0);
    let (u, v) = (pt(toward.a()), pt(toward.b()));
    let mid = ((u.0 + v.0) / 2.0, (u.1 + v.1) / 2.0);
    f(p) * f(mid).signum()
}

/// How deep a sample of `x` gets into the strip between `l` and `m`.
fn sampled_depth(l: &Chord, m: &Chord, x: &Chord) -> f64 {
    let (p, q) = (pt(x.a()), pt(x.b()));
    (0..=2000)
        .map(|k| {
            let s = f64::from(k) / 2000.0;
            let z = (p.0 + s * (q.0 - p.0), p.1 + s * (q.1 - p.1));
            side(l, m, z).min(side(m, l, z))
        })
        .fold(f64::NEG_INFINITY, f64::max)
}

fn numbers(svg: &str) -> Vec<String> {
    let start = svg.find(r#"class="leaf"#).unwrap();
    let d = &svg[start..];
    let d = &d[d.find("d=\"").unwrap() + 3..];
    let d = &d[..d.find('"').unwrap()];
    d.split_whitespace().map(str::to_string).collect()
}

fn negate(s: &str) -> String {
    match s.strip_prefix('-') {
        Some(rest) => rest.to_string(),
        None if s.parse::<f64>().map_or(true, |x| x == 0.0) => s.to_string(),
        None => format!("-{s}"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn angle_and_chord_text_round_trip(c in chord()) {
        prop_assert_eq!(Chord::parse(&c.to_string()).unwrap(), c.clone());
        prop_assert_eq!(Angle::parse(&c.a().to_string()).unwrap(), c.a().clone());
    }

    #[test]
    fn tripling_commutes_with_rotation(c in chord()) {
        prop_assert_eq!(image(&c.tau()), image(&c).tau());
    }

    #[test]
    fn legality_is_rotation_invariant(c in short_chord()) {
        let v = is_legal_pair(&SymmetricPair::new(c.clone())).unwrap();
        let w = is_legal_pair(&SymmetricPair::new(c.tau())).unwrap();
        prop_assert_eq!(v.legal, w.legal);
    }

    #[test]
    fn illegality_certificates_recheck(c in short_chord()) {
        let v = is_legal_pair(&SymmetricPair::new(c.clone())).unwrap();
        prop_assert_eq!(v.legal, v.violation.is_none());
        if let Some(w) = v.violation {
            prop_assert!(w.recheck(&c), "{} does not recheck for {}", w, c);
        }
    }

    #[test]
    fn legal_chords_are_not_periodic(c in short_chord()) {
        let v = is_legal_pair(&SymmetricPair::new(c.clone())).unwrap();
        if v.legal {
            let images = forward_images(&c);
            prop_assert!(!images.contains(&c));
            let bound = c.length() * num_rational::BigRational::from_integer(3.into());
            prop_assert!(images.iter().all(|x| x.length() >= bound));
        }
    }

    #[test]
    fn sweep_agrees_with_pairwise_check(cs in prop::collection::vec(chord(), 0..12)) {
        prop_assert_eq!(find_crossing(cs.iter()).is_some(), pairwise_crossing(&cs));
    }

    #[test]
    fn strip_hits_agree_with_sampling(l in chord(), x in chord()) {
        prop_assume!(l.length_class().is_long_or_medium() && !x.is_degenerate());
        let s = short_strips(&l).unwrap();
        let depth = sampled_depth(&s.base, &s.sibling, &x)
            .max(sampled_depth(&s.base.tau(), &s.sibling.tau(), &x));
        // Chords touching a strip only along its boundary are left undecided.
        prop_assume!(depth.abs() > 1e-6);
        prop_assert_eq!(strip_interior_hit(&s, &x), depth > 0.0);
    }

    #[test]
    fn orbit_data_matches_number_theory(p in 0u64..5000, q in 1u64..5000) {
        let t = Angle::new(p % q, q);
        let mut r = t.denom().clone();
        let mut pre = 0;
        let three = BigUint::from(3u32);
        while &r % &three == BigUint::from(0u32) {
            r /= &three;
            pre += 1;
        }
        let r: u64 = r.try_into().unwrap();
        let info = orbit_info(&t);
        prop_assert_eq!(info.preperiod, pre);
        prop_assert_eq!(info.period, order_of_three(r));
        prop_assert_eq!(info.orbit.len(), info.preperiod + info.period);
    }

    #[test]
    fn siblings_are_disjoint_with_one_image(c in short_chord()) {
        prop_assume!(!c.is_degenerate());
        let (s1, s2) = siblings(&c).unwrap();
        prop_assert!(c.disjoint(&s1) && c.disjoint(&s2) && s1.disjoint(&s2));
        prop_assert_eq!(image(&s1), image(&c));
        prop_assert_eq!(image(&s2), image(&c));
    }

    #[test]
    fn render_respects_the_half_turn(c in chord(), straight in any::<bool>()) {
        // A diameter is its own rotation.
        prop_assume!(!c.is_degenerate() && !c.is_diameter());
        let style = RenderStyle {
            mode: if straight { Mode::StraightChord } else { Mode::HyperbolicGeodesic },
            ..RenderStyle::default()
        };
        let a = numbers(&render_svg(std::slice::from_ref(&c), &style).unwrap());
        let b = numbers(&render_svg(&[c.tau()], &style).unwrap());
        prop_assert_eq!(a.len(), b.len());
        let (coords, fixed) = if straight { (vec![1, 2, 4, 5], 3..4) } else { (vec![1, 2, 9, 10], 3..9) };
        for i in coords {
            prop_assert_eq!(negate(&a[i]), b[i].clone());
        }
        prop_assert_eq!(&a[fixed.clone()], &b[fixed]);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn deeper_pullbacks_extend_shallower(c in comajor(), d in 0usize..3) {
        let p = SymmetricPair::new(c);
        let shallow = build_pullback(&p, d).unwrap();
        let deep = build_pullback(&p, d + 1).unwrap();
        prop_assert!(shallow.leaves_with_generation().all(|(l, g)| deep.generation(l) == Some(g)));
    }

    #[test]
    fn leaf_files_round_trip(c in comajor(), d in 0usize..4) {
        let ls = build_pullback(&SymmetricPair::new(c), d).unwrap();
        prop_assert_eq!(read_leafset(&write_leafset(&ls)).unwrap(), ls.clone());
        let unseeded = LeafSet::from_chords(ls.to_vec());
        prop_assert_eq!(read_leafset(&write_leafset(&unseeded)).unwrap(), unseeded);
    }

    #[test]
    fn one_more_face_than_chords(mask in prop::collection::vec(any::<bool>(), 80)) {
        let leaves = build_l16(1, 3).unwrap().to_vec();
        let chosen: Vec<&Chord> = leaves.iter().zip(mask.iter().cycle()).filter(|(_, &m)| m).map(|(c, _)| c).collect();
        prop_assert_eq!(faces_of(chosen.iter().copied()).len(), chosen.len() + 1);
    }
}
