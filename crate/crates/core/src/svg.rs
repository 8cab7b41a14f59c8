//! Plain SVG figure of a solved configuration. Output depends only on the report and the
//! size, so identical inputs give identical bytes.

use std::fmt::Write;

use crate::asym::SolveReport;
use crate::error::Result;
use crate::numeric::BigReal;
use crate::oracle::{frame_map, tangent_point_b};

struct View {
    x_min: f64,
    y_max: f64,
    scale: f64,
    margin: f64,
}

impl View {
    fn x(&self, x: f64) -> f64 {
        self.margin + (x - self.x_min) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        self.margin + (self.y_max - y) * self.scale
    }
}

fn f(v: f64) -> String {
    let s = format!("{v:.3}");
    if s == "-0.000" {
        "0.000".into()
    } else {
        s
    }
}

fn point(out: &mut String, v: &View, x: f64, y: f64, label: &str, dx: f64, dy: f64) {
    let (px, py) = (v.x(x), v.y(y));
    let _ = writeln!(out, r#"  <circle cx="{}" cy="{}" r="3" class="pt"/>"#, f(px), f(py));
    if !label.is_empty() {
        let _ = writeln!(out, r#"  <text x="{}" y="{}">{label}</text>"#, f(px + dx), f(py + dy));
    }
}

/// Triangle, ellipse, the three circles of radius `r`, and the tangency points.
pub fn render_figure(rep: &SolveReport, size: u32) -> Result<String> {
    let d = rep.r.digits();
    let a = rep.triangle.a.with_digits(d);
    let b = rep.triangle.b.with_digits(d);
    let c = rep.triangle.c.with_digits(d);
    let h = rep.h.to_f64();
    let bx = (&c.square() / &a).to_f64();
    let cx = -(&b.square() / &a).to_f64();
    let size = size.max(100) as f64;
    let margin = size * 0.06;
    let (w, ht) = (bx - cx, h);
    let scale = (size - 2.0 * margin) / w.max(ht);
    let v = View {
        x_min: cx,
        y_max: h,
        scale,
        margin,
    };
    let height = 2.0 * margin + ht * scale;

    let e = &rep.ellipse;
    let (x0, y0) = (e.x0.to_f64(), e.y0.to_f64());
    let (al, be, r) = (e.alpha.to_f64(), e.beta.to_f64(), rep.r.to_f64());
    let m = &b / &c;
    let centre = (e.x0.clone(), e.y0.clone());
    let contact = |slope: &BigReal| -> Result<(f64, f64)> {
        let p = tangent_point_b(&e.alpha, &e.beta, slope)?;
        let q = frame_map(&centre, &p);
        Ok((q.0.to_f64(), q.1.to_f64()))
    };
    let leg_c = contact(&m)?;
    let leg_b = contact(&-(&BigReal::from_i64(1).with_digits(m.digits()) / &m))?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{}" height="{}" viewBox="0 0 {} {}">"#,
        f(size),
        f(height),
        f(size),
        f(height)
    );
    out.push_str("  <style>polygon,ellipse,circle{fill:none;stroke:#222;stroke-width:1.5}circle.pt{fill:#c00;stroke:none}text{font:14px sans-serif;fill:#222}</style>\n");
    let _ = writeln!(
        out,
        r#"  <polygon points="{},{} {},{} {},{}"/>"#,
        f(v.x(0.0)),
        f(v.y(0.0)),
        f(v.x(bx)),
        f(v.y(h)),
        f(v.x(cx)),
        f(v.y(h))
    );
    let _ = writeln!(
        out,
        r#"  <ellipse cx="{}" cy="{}" rx="{}" ry="{}"/>"#,
        f(v.x(x0)),
        f(v.y(y0)),
        f(al * scale),
        f(be * scale)
    );
    let circles = [(rep.x1.to_f64(), rep.y1.to_f64()), (x0 - r, y0), (x0 + r, y0)];
    for (x, y) in circles {
        let _ = writeln!(
            out,
            r#"  <circle cx="{}" cy="{}" r="{}"/>"#,
            f(v.x(x)),
            f(v.y(y)),
            f(r * scale)
        );
    }
    point(&mut out, &v, 0.0, 0.0, "A", 6.0, 16.0);
    point(&mut out, &v, bx, h, "B", 6.0, -6.0);
    point(&mut out, &v, cx, h, "C", -18.0, -6.0);
    point(&mut out, &v, x0, y0, "E", 4.0, -6.0);
    point(&mut out, &v, rep.x1.to_f64(), rep.y1.to_f64(), "C1", 4.0, 14.0);
    point(&mut out, &v, x0 - r, y0, "C2", -8.0, 16.0);
    point(&mut out, &v, x0 + r, y0, "C3", -8.0, 16.0);
    point(&mut out, &v, rep.x_t.to_f64(), rep.y_t.to_f64(), "T", 6.0, 4.0);
    point(&mut out, &v, x0, h, "", 0.0, 0.0);
    point(&mut out, &v, leg_c.0, leg_c.1, "", 0.0, 0.0);
    point(&mut out, &v, leg_b.0, leg_b.1, "", 0.0, 0.0);
    out.push_str("</svg>\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asym::{solve_asymmetric, TriangleConfig};

    #[test]
    fn deterministic_and_complete() {
        let t = TriangleConfig::parse("5", "3", "4", 20).unwrap();
        let tol = BigReal::parse("1e-10", 40).unwrap();
        let rep = solve_asymmetric(&t, &tol, 200, 20).unwrap();
        let a = render_figure(&rep, 800).unwrap();
        let b = render_figure(&solve_asymmetric(&t, &tol, 200, 20).unwrap(), 800).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert_eq!(a.matches("<ellipse").count(), 1);
        assert_eq!(a.matches("<polygon").count(), 1);
        assert_eq!(a.matches(r#"class="pt""#).count(), 11);
        for label in [">A<", ">B<", ">C<", ">T<", ">C1<", ">C2<", ">C3<"] {
            assert!(a.contains(label));
        }
    }
}
