//! SVG rendering of a four-circle configuration: the unit circle, the
//! tangent circles, chords `d_ij`, exterior bitangents `t_ij` and the
//! hyperbolic geodesics between tangency points.
//!
//! The unit square `[-1, 1]²` maps onto the 1000×1000 box with the y axis
//! flipped; the view box adds a 40-unit margin for labels.

use std::fmt::Write;

use threeterm::{BoundaryPoint, ConcyclicConfig, Geodesic, GeodesicArc, PAIRS};

pub const SCALE: f64 = 500.0;
pub const MARGIN: f64 = 40.0;

pub type Pt = (f64, f64);

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment {
    pub pair: (usize, usize),
    pub from: Pt,
    pub to: Pt,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeodesicPiece {
    pub pair: (usize, usize),
    pub from: Pt,
    pub to: Pt,
    pub arc: GeodesicArc,
}

/// All primitives in unit-disk coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Scene {
    pub tangency: [Pt; 4],
    pub circles: [(Pt, f64); 4],
    pub chords: Vec<Segment>,
    pub bitangents: Vec<Segment>,
    pub geodesics: Vec<GeodesicPiece>,
}

/// Touching points of the exterior common tangent of two disjoint circles,
/// taking the tangent on the side away from the origin.
pub fn exterior_tangent_points(c1: Pt, r1: f64, c2: Pt, r2: f64) -> (Pt, Pt) {
    let (dx, dy) = (c2.0 - c1.0, c2.1 - c1.1);
    let c = dx.hypot(dy);
    let e = (dx / c, dy / c);
    let cos = (r1 - r2) / c;
    let sin = (1.0 - cos * cos).max(0.0).sqrt();
    let normal = |sgn: f64| (cos * e.0 - sgn * sin * e.1, cos * e.1 + sgn * sin * e.0);
    let (mp, mm) = (normal(1.0), normal(-1.0));
    let mid = (c1.0 + c2.0, c1.1 + c2.1);
    let outward = |m: Pt| m.0 * mid.0 + m.1 * mid.1;
    let m = if outward(mm) > outward(mp) { mm } else { mp };
    (
        (c1.0 + r1 * m.0, c1.1 + r1 * m.1),
        (c2.0 + r2 * m.0, c2.1 + r2 * m.1),
    )
}

impl Scene {
    pub fn new(cfg: &ConcyclicConfig) -> Self {
        let tangency = [1, 2, 3, 4].map(|i| cfg.tangency_point(i).expect("index in range"));
        let circles = [1, 2, 3, 4].map(|i| {
            (
                cfg.euclidean_center(i).expect("index in range"),
                cfg.radius(i).expect("index in range"),
            )
        });
        let alpha = cfg.alpha();
        let mut chords = Vec::new();
        let mut bitangents = Vec::new();
        let mut geodesics = Vec::new();
        for &(i, j) in &PAIRS {
            let (a, b) = (tangency[i - 1], tangency[j - 1]);
            chords.push(Segment {
                pair: (i, j),
                from: a,
                to: b,
            });
            let (ci, ri) = circles[i - 1];
            let (cj, rj) = circles[j - 1];
            let (p, q) = exterior_tangent_points(ci, ri, cj, rj);
            bitangents.push(Segment {
                pair: (i, j),
                from: p,
                to: q,
            });
            let g = Geodesic::in_disk(
                BoundaryPoint::new(2.0 * alpha[i - 1]).expect("finite angle"),
                BoundaryPoint::new(2.0 * alpha[j - 1]).expect("finite angle"),
            )
            .expect("distinct tangency points");
            geodesics.push(GeodesicPiece {
                pair: (i, j),
                from: a,
                to: b,
                arc: g.disk_arc().expect("disk geodesic"),
            });
        }
        Self {
            tangency,
            circles,
            chords,
            bitangents,
            geodesics,
        }
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        let size = 2.0 * SCALE + 2.0 * MARGIN;
        writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
        writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="{m} {m} {w} {w}">"#,
            w = num(size),
            m = num(-MARGIN)
        )
        .unwrap();

        writeln!(
            s,
            r##"<g id="geodesics" fill="none" stroke="#8b4513" stroke-width="2">"##
        )
        .unwrap();
        for g in &self.geodesics {
            let (x1, y1) = screen(g.from);
            let (x2, y2) = screen(g.to);
            let d = match g.arc {
                GeodesicArc::Diameter => {
                    format!("M {} {} L {} {}", num(x1), num(y1), num(x2), num(y2))
                }
                GeodesicArc::Circle { center, radius } => {
                    let (cx, cy) = screen(center);
                    let cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
                    let r = num(radius * SCALE);
                    format!(
                        "M {} {} A {r} {r} 0 0 {} {} {}",
                        num(x1),
                        num(y1),
                        u8::from(cross > 0.0),
                        num(x2),
                        num(y2)
                    )
                }
            };
            writeln!(
                s,
                r#"  <path class="geodesic" data-pair="{}" d="{d}"/>"#,
                pair(g.pair)
            )
            .unwrap();
        }
        writeln!(s, "</g>").unwrap();

        for (id, class, color, segs) in [
            ("chords", "chord", "#00a0c8", &self.chords),
            ("bitangents", "bitangent", "#800080", &self.bitangents),
        ] {
            writeln!(s, r#"<g id="{id}" stroke="{color}" stroke-width="3">"#).unwrap();
            for seg in segs {
                let (x1, y1) = screen(seg.from);
                let (x2, y2) = screen(seg.to);
                writeln!(
                    s,
                    r#"  <line class="{class}" data-pair="{}" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                    pair(seg.pair),
                    num(x1),
                    num(y1),
                    num(x2),
                    num(y2)
                )
                .unwrap();
            }
            writeln!(s, "</g>").unwrap();
        }

        writeln!(s, r#"<g id="circles" fill="none" stroke="black">"#).unwrap();
        writeln!(
            s,
            r#"  <circle class="boundary" cx="{c}" cy="{c}" r="{r}" stroke-width="3"/>"#,
            c = num(SCALE),
            r = num(SCALE)
        )
        .unwrap();
        for (k, (c, r)) in self.circles.iter().enumerate() {
            let (cx, cy) = screen(*c);
            writeln!(
                s,
                r#"  <circle class="horocycle" data-index="{}" cx="{}" cy="{}" r="{}" stroke-width="2"/>"#,
                k + 1,
                num(cx),
                num(cy),
                num(r * SCALE)
            )
            .unwrap();
        }
        writeln!(s, "</g>").unwrap();

        writeln!(
            s,
            r#"<g id="labels" font-family="serif" font-size="22" text-anchor="middle">"#
        )
        .unwrap();
        for (k, a) in self.tangency.iter().enumerate() {
            let (x, y) = screen((1.05 * a.0, 1.05 * a.1));
            writeln!(
                s,
                r#"  <text x="{}" y="{}">A{}</text>"#,
                num(x),
                num(y),
                k + 1
            )
            .unwrap();
        }
        for (k, (c, _)) in self.circles.iter().enumerate() {
            let (x, y) = screen(*c);
            writeln!(
                s,
                r#"  <text x="{}" y="{}">H{}</text>"#,
                num(x),
                num(y),
                k + 1
            )
            .unwrap();
        }
        for (prefix, segs) in [("d", &self.chords), ("t", &self.bitangents)] {
            for seg in segs {
                let mid = (0.5 * (seg.from.0 + seg.to.0), 0.5 * (seg.from.1 + seg.to.1));
                let (x, y) = screen(mid);
                writeln!(
                    s,
                    r#"  <text x="{}" y="{}">{prefix}{}</text>"#,
                    num(x),
                    num(y),
                    pair(seg.pair)
                )
                .unwrap();
            }
        }
        writeln!(s, "</g>").unwrap();
        writeln!(s, "</svg>").unwrap();
        s
    }
}

/// Unit-disk coordinates to SVG user units.
pub fn screen(p: Pt) -> Pt {
    (SCALE + SCALE * p.0, SCALE - SCALE * p.1)
}

fn pair((i, j): (usize, usize)) -> String {
    format!("{i}{j}")
}

/// Fixed six decimals, without a negative zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|c| c == '0' || c == '.')
    {
        "0.000000".to_string()
    } else {
        s
    }
}

pub fn render(cfg: &ConcyclicConfig) -> String {
    Scene::new(cfg).to_svg()
}
