//! Hand-rolled SVG scatter plots for root sweeps — no plotting dependency.
//!
//! Fixed 800×600 viewBox; roots as 3px circles colored by the sweep
//! parameter n; axes with unit ticks; legend down the right edge. The
//! vertical mapping is linear, so conjugate symmetry in the data is
//! visible as mirror symmetry about the real axis.

use crate::sweep::SweepRow;

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 600.0;
const PLOT_LEFT: f64 = 60.0;
const PLOT_RIGHT: f64 = 640.0;
const PLOT_TOP: f64 = 42.0;
const PLOT_BOTTOM: f64 = 552.0;

fn esc(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Linear data→pixel maps padded 6% beyond the data range; both axes
/// always include the origin so the axis cross is visible.
struct Frame {
    x_min: f64,
    x_max: f64,
    y_min: f64,
    y_max: f64,
}

impl Frame {
    fn around(rows: &[SweepRow]) -> Frame {
        let (mut x_min, mut x_max) = (0.0f64, 0.0f64);
        let (mut y_min, mut y_max) = (0.0f64, 0.0f64);
        for r in rows {
            x_min = x_min.min(r.re);
            x_max = x_max.max(r.re);
            y_min = y_min.min(r.im);
            y_max = y_max.max(r.im);
        }
        if x_max - x_min < 1e-9 {
            x_min -= 1.0;
            x_max += 1.0;
        }
        if y_max - y_min < 1e-9 {
            y_min -= 1.0;
            y_max += 1.0;
        }
        let (px, py) = (0.06 * (x_max - x_min), 0.06 * (y_max - y_min));
        Frame {
            x_min: x_min - px,
            x_max: x_max + px,
            y_min: y_min - py,
            y_max: y_max + py,
        }
    }

    fn x(&self, v: f64) -> f64 {
        PLOT_LEFT + (v - self.x_min) / (self.x_max - self.x_min) * (PLOT_RIGHT - PLOT_LEFT)
    }

    fn y(&self, v: f64) -> f64 {
        // SVG y grows downward; flip so positive imaginary parts plot up.
        PLOT_BOTTOM - (v - self.y_min) / (self.y_max - self.y_min) * (PLOT_BOTTOM - PLOT_TOP)
    }
}

/// Blue (smallest n) through red (largest n).
fn color_for(n: usize, n_min: usize, n_max: usize) -> String {
    let t = if n_max > n_min {
        (n - n_min) as f64 / (n_max - n_min) as f64
    } else {
        0.0
    };
    format!("hsl({:.0},72%,44%)", 236.0 * (1.0 - t))
}

/// Integer tick positions, thinned so at most ~13 fit per axis.
fn ticks(lo: f64, hi: f64) -> Vec<i64> {
    let step = (((hi - lo) / 12.0).ceil() as i64).max(1);
    let mut t = Vec::new();
    let mut k = lo.ceil() as i64;
    // Align to a multiple of the step so 0 is always a tick.
    k -= k.rem_euclid(step);
    while (k as f64) <= hi {
        if k as f64 >= lo {
            t.push(k);
        }
        k += step;
    }
    t
}

/// Renders the rows as one scatter. Deterministic output for fixed input.
pub fn scatter_svg(rows: &[SweepRow], title: &str) -> String {
    let f = Frame::around(rows);
    let n_min = rows.iter().map(|r| r.n).min().unwrap_or(0);
    let n_max = rows.iter().map(|r| r.n).max().unwrap_or(0);

    let mut s = String::with_capacity(4096 + 96 * rows.len());
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {WIDTH:.0} {HEIGHT:.0}\" \
         font-family=\"sans-serif\">\n"
    ));
    s.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    s.push_str(&format!(
        "<text x=\"{:.0}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n",
        (PLOT_LEFT + PLOT_RIGHT) / 2.0,
        esc(title)
    ));

    // Gridlines and tick labels at integer positions.
    for &t in &ticks(f.x_min, f.x_max) {
        let x = f.x(t as f64);
        s.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{PLOT_TOP:.0}\" x2=\"{x:.2}\" y2=\"{PLOT_BOTTOM:.0}\" \
             stroke=\"#ddd\" stroke-width=\"1\"/>\n"
        ));
        s.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.0}\" text-anchor=\"middle\" font-size=\"11\" \
             fill=\"#444\">{t}</text>\n",
            PLOT_BOTTOM + 16.0
        ));
    }
    for &t in &ticks(f.y_min, f.y_max) {
        let y = f.y(t as f64);
        s.push_str(&format!(
            "<line x1=\"{PLOT_LEFT:.0}\" y1=\"{y:.2}\" x2=\"{PLOT_RIGHT:.0}\" y2=\"{y:.2}\" \
             stroke=\"#ddd\" stroke-width=\"1\"/>\n"
        ));
        s.push_str(&format!(
            "<text x=\"{:.0}\" y=\"{:.2}\" text-anchor=\"end\" font-size=\"11\" \
             fill=\"#444\">{t}</text>\n",
            PLOT_LEFT - 6.0,
            y + 4.0
        ));
    }

    // Axis cross through the origin, then the plot border.
    let (x0, y0) = (f.x(0.0), f.y(0.0));
    s.push_str(&format!(
        "<line x1=\"{x0:.2}\" y1=\"{PLOT_TOP:.0}\" x2=\"{x0:.2}\" y2=\"{PLOT_BOTTOM:.0}\" \
         stroke=\"#888\" stroke-width=\"1\"/>\n"
    ));
    s.push_str(&format!(
        "<line x1=\"{PLOT_LEFT:.0}\" y1=\"{y0:.2}\" x2=\"{PLOT_RIGHT:.0}\" y2=\"{y0:.2}\" \
         stroke=\"#888\" stroke-width=\"1\"/>\n"
    ));
    s.push_str(&format!(
        "<rect x=\"{PLOT_LEFT:.0}\" y=\"{PLOT_TOP:.0}\" width=\"{:.0}\" height=\"{:.0}\" \
         fill=\"none\" stroke=\"#333\" stroke-width=\"1\"/>\n",
        PLOT_RIGHT - PLOT_LEFT,
        PLOT_BOTTOM - PLOT_TOP
    ));
    s.push_str(&format!(
        "<text x=\"{PLOT_RIGHT:.0}\" y=\"{:.0}\" text-anchor=\"end\" font-size=\"12\" \
         fill=\"#222\">Re</text>\n",
        PLOT_BOTTOM + 34.0
    ));
    s.push_str(&format!(
        "<text x=\"14\" y=\"{PLOT_TOP:.0}\" font-size=\"12\" fill=\"#222\">Im</text>\n"
    ));

    for r in rows {
        s.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"{}\" fill-opacity=\"0.75\">\
             <title>{} n={} m={} ({:.6}, {:.6}) x{}</title></circle>\n",
            f.x(r.re),
            f.y(r.im),
            color_for(r.n, n_min, n_max),
            esc(r.family),
            r.n,
            r.m,
            r.re,
            r.im,
            r.multiplicity
        ));
    }

    // Legend: every n when few, else an evenly thinned selection.
    let mut ns: Vec<usize> = rows.iter().map(|r| r.n).collect();
    ns.sort_unstable();
    ns.dedup();
    let shown: Vec<usize> = if ns.len() <= 14 {
        ns.clone()
    } else {
        let step = ns.len().div_ceil(14);
        let mut picked: Vec<usize> = ns.iter().copied().step_by(step).collect();
        if picked.last() != ns.last() {
            picked.push(*ns.last().expect("nonempty"));
        }
        picked
    };
    s.push_str(&format!(
        "<text x=\"{:.0}\" y=\"{PLOT_TOP:.0}\" font-size=\"12\" fill=\"#222\">n</text>\n",
        PLOT_RIGHT + 18.0
    ));
    for (i, n) in shown.iter().enumerate() {
        let y = PLOT_TOP + 18.0 + 22.0 * i as f64;
        s.push_str(&format!(
            "<circle cx=\"{:.0}\" cy=\"{y:.2}\" r=\"5\" fill=\"{}\"/>\n",
            PLOT_RIGHT + 24.0,
            color_for(*n, n_min, n_max)
        ));
        s.push_str(&format!(
            "<text x=\"{:.0}\" y=\"{:.2}\" font-size=\"11\" fill=\"#222\">n = {n}</text>\n",
            PLOT_RIGHT + 36.0,
            y + 4.0
        ));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::SolverConfig;
    use crate::sweep::{sweep_family, sweep_rows, SweepFamily};

    #[test]
    fn scatter_contains_every_root_point() {
        let series =
            sweep_family(SweepFamily::Friendship4, 2, 4, &SolverConfig::default()).unwrap();
        let rows = sweep_rows(&series);
        let svg = scatter_svg(&rows, "friendship roots <test> & more");
        assert!(svg.starts_with("<svg "));
        assert!(svg.contains("viewBox=\"0 0 800 600\""));
        // One 3px circle per row (legend swatches are 5px).
        let points = svg.matches("r=\"3\"").count();
        assert_eq!(points, rows.len());
        assert!(svg.contains("&lt;test&gt; &amp; more"));
        assert!(svg.contains(">n = 2<"));
        assert!(svg.contains(">Re<") && svg.contains(">Im<"));
        assert!(svg.ends_with("</svg>\n"));
    }

    #[test]
    fn conjugate_pairs_mirror_about_the_real_axis() {
        let series =
            sweep_family(SweepFamily::StarLex { m: 2 }, 3, 3, &SolverConfig::default()).unwrap();
        let rows = sweep_rows(&series);
        let pos = rows.iter().find(|r| r.im > 0.1).expect("nonreal root");
        let f = Frame::around(&rows);
        let up = f.y(pos.im);
        let down = f.y(-pos.im);
        let mid = f.y(0.0);
        assert!((mid - up - (down - mid)).abs() < 1e-9);
    }

    #[test]
    fn empty_input_still_renders_a_frame() {
        let svg = scatter_svg(&[], "empty");
        assert!(svg.contains("<rect"));
        assert!(!svg.contains("r=\"3\""));
    }

    #[test]
    fn long_ranges_thin_the_legend() {
        let rows: Vec<SweepRow> = (2..=40)
            .map(|n| SweepRow {
                family: "friendship4",
                n,
                m: 4,
                re: -1.0 - n as f64 / 40.0,
                im: 0.0,
                multiplicity: 1,
            })
            .collect();
        let svg = scatter_svg(&rows, "wide");
        let legend_entries = svg.matches("r=\"5\"").count();
        assert!(legend_entries <= 15, "{legend_entries}");
        assert!(svg.contains(">n = 40<"));
    }
}
