//! ASCII and SVG renderings of a piecewise-monomial function in valuation
//! coordinates. Breaks are labeled with their exact values.

use std::fmt::Write;

use num_traits::{ToPrimitive, Zero};
use ramcalc_core::pmfun::PmFunction;
use ramcalc_core::rational::fmt_q;
use ramcalc_core::Rational;

const LEGEND: &str = "horizontal axis v, vertical axis f(v); radii are r = q^v";

/// Right end of the plotted range: a third past the last break, or 4.
fn x_max(f: &PmFunction) -> Rational {
    match f.breaks().last() {
        Some(b) => b * Rational::new(4.into(), 3.into()),
        None => Rational::from_integer(4.into()),
    }
}

fn to_f64(x: &Rational) -> f64 {
    x.to_f64().expect("finite rational")
}

fn break_labels(f: &PmFunction) -> Vec<String> {
    f.breaks()
        .iter()
        .enumerate()
        .map(|(i, b)| {
            format!(
                "v = {}, f = {}, slope {} -> {}",
                fmt_q(b),
                fmt_q(&f.eval_q(b)),
                fmt_q(&f.slopes()[i]),
                fmt_q(&f.slopes()[i + 1])
            )
        })
        .collect()
}

pub fn ascii(f: &PmFunction) -> String {
    const W: usize = 60;
    const H: usize = 16;
    let xm = x_max(f);
    let y0 = f.intercept().clone();
    let span = f.eval_q(&xm) - &y0;
    let row_of = |x: &Rational| {
        let t = (f.eval_q(x) - &y0) / &span * Rational::from_integer((H - 1).into());
        t.round().to_usize().unwrap_or(0).min(H - 1)
    };
    let col_of = |x: &Rational| {
        (x / &xm * Rational::from_integer((W - 1).into()))
            .round()
            .to_usize()
            .unwrap_or(0)
            .min(W - 1)
    };
    let mut grid = vec![vec![' '; W]; H];
    let mut prev: Option<usize> = None;
    for c in 0..W {
        let x = &xm * Rational::new(c.into(), (W - 1).into());
        let r = row_of(&x);
        let lo = prev.map_or(r, |p| p.min(r));
        let hi = prev.map_or(r, |p| p.max(r));
        // fill the vertical gap so steep pieces stay connected
        for row in grid.iter_mut().take(hi + 1).skip(lo) {
            row[c] = '*';
        }
        prev = Some(r);
    }
    let marks = "abcdefghijklmnopqrstuvwxyz";
    for (i, b) in f.breaks().iter().enumerate() {
        grid[row_of(b)][col_of(b)] = marks.chars().nth(i % 26).unwrap_or('+');
    }

    let mut out = String::new();
    writeln!(out, "f = {f}").unwrap();
    let top = fmt_q(&(&y0 + &span));
    for (i, row) in grid.iter().enumerate().rev() {
        let label = match i {
            i if i == H - 1 => top.clone(),
            0 => fmt_q(&y0),
            _ => String::new(),
        };
        let line: String = row.iter().collect();
        writeln!(out, "{label:>10} |{}", line.trim_end()).unwrap();
    }
    writeln!(out, "{:>10} +{}", "", "-".repeat(W)).unwrap();
    let right = format!("v = {}", fmt_q(&xm));
    writeln!(out, "{:>10}  0{right:>width$}", "", width = W - 1).unwrap();
    for (i, label) in break_labels(f).iter().enumerate() {
        writeln!(out, "({}) {label}", marks.chars().nth(i % 26).unwrap_or('+')).unwrap();
    }
    writeln!(out, "legend: {LEGEND}").unwrap();
    out
}

pub fn svg(f: &PmFunction) -> String {
    const W: f64 = 640.0;
    const H: f64 = 400.0;
    const M: f64 = 50.0;
    let xm = x_max(f);
    let y0 = f.intercept().clone();
    let span = f.eval_q(&xm) - &y0;
    let px = |x: &Rational| M + (W - 2.0 * M) * to_f64(&(x / &xm));
    let py = |x: &Rational| H - M - (H - 2.0 * M) * to_f64(&((f.eval_q(x) - &y0) / &span));

    let mut knots = vec![Rational::zero()];
    knots.extend(f.breaks().iter().cloned());
    knots.push(xm.clone());
    let points: Vec<String> = knots.iter().map(|x| format!("{:.3},{:.3}", px(x), py(x))).collect();

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{W}" height="{H}" viewBox="0 0 {W} {H}">"#
    )
    .unwrap();
    writeln!(out, r#"<rect width="{W}" height="{H}" fill="white"/>"#).unwrap();
    writeln!(
        out,
        r#"<path d="M {M} {a} L {b} {a} M {M} {a} L {M} {M}" stroke="black" fill="none"/>"#,
        a = H - M,
        b = W - M
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="12" text-anchor="end">v = {}</text>"#,
        W - M,
        H - M + 16.0,
        fmt_q(&xm)
    )
    .unwrap();
    writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="12">0</text>"#,
        M - 4.0,
        H - M + 16.0
    )
    .unwrap();
    writeln!(
        out,
        r#"<polyline points="{}" stroke="steelblue" stroke-width="2" fill="none"/>"#,
        points.join(" ")
    )
    .unwrap();
    for (b, label) in f.breaks().iter().zip(break_labels(f)) {
        let (x, y) = (px(b), py(b));
        writeln!(out, r#"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="firebrick"/>"#).unwrap();
        writeln!(
            out,
            r#"<text x="{:.3}" y="{:.3}" font-size="11">{label}</text>"#,
            x + 6.0,
            y + 14.0
        )
        .unwrap();
    }
    writeln!(out, r#"<text x="{M}" y="20" font-size="12">f = {f}</text>"#).unwrap();
    writeln!(out, r#"<text x="{M}" y="{}" font-size="11">{LEGEND}</text>"#, H - 12.0).unwrap();
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ramcalc_core::rational::{int, q};

    fn golden() -> PmFunction {
        PmFunction::new(int(0), vec![int(1), int(3)], vec![int(9), int(3), int(1)]).unwrap()
    }

    #[test]
    fn identity_has_no_break_labels() {
        let text = ascii(&PmFunction::identity());
        assert!(!text.contains("slope"));
        assert!(text.contains("r = q^v"));
        assert_eq!(svg(&PmFunction::identity()).matches("<circle").count(), 0);
    }

    #[test]
    fn two_breaks_are_labeled() {
        let text = ascii(&golden());
        assert!(text.contains("(a) v = 1/1, f = 9/1, slope 9/1 -> 3/1"));
        assert!(text.contains("(b) v = 3/1, f = 15/1, slope 3/1 -> 1/1"));
        let s = svg(&golden());
        assert_eq!(s.matches("<circle").count(), 2);
        assert_eq!(s, svg(&golden()));
    }

    #[test]
    fn ascii_curve_is_connected() {
        let f = PmFunction::new(int(0), vec![q(1, 15), q(29, 2)], vec![int(18), int(3), int(1)]).unwrap();
        let text = ascii(&f);
        let rows: Vec<&str> = text.lines().skip(1).take(16).collect();
        // every row of the plot area is hit by the curve
        assert!(rows
            .iter()
            .all(|r| r.contains('*') || r.contains('a') || r.contains('b')));
    }
}
