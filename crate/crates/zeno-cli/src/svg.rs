//! Deterministic SVG line charts: fixed 800x600 canvas, no external
//! rendering dependencies, byte-identical output for identical input.

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 600.0;
const MARGIN_LEFT: f64 = 80.0;
const MARGIN_RIGHT: f64 = 24.0;
const MARGIN_TOP: f64 = 24.0;
const MARGIN_BOTTOM: f64 = 56.0;

pub struct ChartOptions {
    pub log_x: bool,
    pub log_y: bool,
    pub x_label: String,
    pub y_label: String,
    pub annotation: Option<String>,
}

/// Render `points` (already filtered to the plottable domain) as a polyline
/// with circle markers. Callers guarantee at least one point and, in log
/// mode, strictly positive coordinates.
pub fn render_line_chart(points: &[(f64, f64)], opts: &ChartOptions) -> String {
    let tx = |x: f64| if opts.log_x { x.log10() } else { x };
    let ty = |y: f64| if opts.log_y { y.log10() } else { y };

    let xs: Vec<f64> = points.iter().map(|p| tx(p.0)).collect();
    let ys: Vec<f64> = points.iter().map(|p| ty(p.1)).collect();
    let (x_min, x_max) = padded_range(&xs);
    let (y_min, y_max) = padded_range(&ys);

    let plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT;
    let plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM;
    let px = |t: f64| MARGIN_LEFT + (t - x_min) / (x_max - x_min) * plot_w;
    let py = |t: f64| HEIGHT - MARGIN_BOTTOM - (t - y_min) / (y_max - y_min) * plot_h;

    let mut svg = String::with_capacity(4096);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n");

    // grid and ticks
    for t in ticks(x_min, x_max, opts.log_x) {
        let x = px(t);
        svg.push_str(&format!(
            "<line x1=\"{x:.2}\" y1=\"{:.2}\" x2=\"{x:.2}\" y2=\"{:.2}\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n",
            MARGIN_TOP,
            HEIGHT - MARGIN_BOTTOM
        ));
        svg.push_str(&format!(
            "<text x=\"{x:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
            HEIGHT - MARGIN_BOTTOM + 18.0,
            tick_label(t, opts.log_x)
        ));
    }
    for t in ticks(y_min, y_max, opts.log_y) {
        let y = py(t);
        svg.push_str(&format!(
            "<line x1=\"{:.2}\" y1=\"{y:.2}\" x2=\"{:.2}\" y2=\"{y:.2}\" stroke=\"#e0e0e0\" stroke-width=\"1\"/>\n",
            MARGIN_LEFT,
            WIDTH - MARGIN_RIGHT
        ));
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
            MARGIN_LEFT - 8.0,
            y + 4.0,
            tick_label(t, opts.log_y)
        ));
    }

    // axes
    svg.push_str(&format!(
        "<line x1=\"{l:.2}\" y1=\"{b:.2}\" x2=\"{r:.2}\" y2=\"{b:.2}\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
        l = MARGIN_LEFT,
        r = WIDTH - MARGIN_RIGHT,
        b = HEIGHT - MARGIN_BOTTOM
    ));
    svg.push_str(&format!(
        "<line x1=\"{l:.2}\" y1=\"{t:.2}\" x2=\"{l:.2}\" y2=\"{b:.2}\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n",
        l = MARGIN_LEFT,
        t = MARGIN_TOP,
        b = HEIGHT - MARGIN_BOTTOM
    ));

    // data
    let coords: Vec<String> = points
        .iter()
        .map(|&(x, y)| format!("{:.2},{:.2}", px(tx(x)), py(ty(y))))
        .collect();
    svg.push_str(&format!(
        "<polyline fill=\"none\" stroke=\"#2b6cb0\" stroke-width=\"1.5\" points=\"{}\"/>\n",
        coords.join(" ")
    ));
    for &(x, y) in points {
        svg.push_str(&format!(
            "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"3\" fill=\"#2b6cb0\"/>\n",
            px(tx(x)),
            py(ty(y))
        ));
    }

    // axis labels
    svg.push_str(&format!(
        "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
        MARGIN_LEFT + plot_w / 2.0,
        HEIGHT - 12.0,
        escape(&opts.x_label)
    ));
    svg.push_str(&format!(
        "<text x=\"18\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 {:.2})\">{}</text>\n",
        MARGIN_TOP + plot_h / 2.0,
        MARGIN_TOP + plot_h / 2.0,
        escape(&opts.y_label)
    ));

    if let Some(annotation) = &opts.annotation {
        svg.push_str(&format!(
            "<text x=\"{:.2}\" y=\"{:.2}\" font-family=\"monospace\" font-size=\"14\">{}</text>\n",
            MARGIN_LEFT + 12.0,
            MARGIN_TOP + 18.0,
            escape(annotation)
        ));
    }

    svg.push_str("</svg>\n");
    svg
}

fn padded_range(values: &[f64]) -> (f64, f64) {
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for &v in values {
        min = min.min(v);
        max = max.max(v);
    }
    if !(max - min).is_finite() || max - min < 1e-12 {
        return (min - 1.0, max + 1.0);
    }
    let pad = 0.04 * (max - min);
    (min - pad, max + pad)
}

/// Tick positions in transformed coordinates: integer decades in log mode
/// when at least two fall inside the range, otherwise five even divisions.
fn ticks(min: f64, max: f64, log: bool) -> Vec<f64> {
    if log {
        let lo = min.ceil() as i64;
        let hi = max.floor() as i64;
        if hi - lo >= 1 {
            return (lo..=hi).map(|k| k as f64).collect();
        }
    }
    (0..=4)
        .map(|i| min + (max - min) * f64::from(i) / 4.0)
        .collect()
}

fn tick_label(t: f64, log: bool) -> String {
    let value = if log { 10f64.powf(t) } else { t };
    if log && (t - t.round()).abs() < 1e-9 {
        return format!("1e{}", t.round() as i64);
    }
    format_tick(value)
}

fn format_tick(v: f64) -> String {
    let magnitude = v.abs();
    if magnitude != 0.0 && !(1e-3..1e4).contains(&magnitude) {
        return format!("{v:.2e}");
    }
    let mut s = format!("{v:.4}");
    while s.contains('.') && (s.ends_with('0') || s.ends_with('.')) {
        s.pop();
    }
    s
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn options() -> ChartOptions {
        ChartOptions {
            log_x: false,
            log_y: false,
            x_label: "n".into(),
            y_label: "value".into(),
            annotation: None,
        }
    }

    #[test]
    fn chart_contains_one_marker_per_point_and_a_polyline() {
        let pts = vec![(1.0, 0.5), (2.0, 0.7), (3.0, 0.9)];
        let svg = render_line_chart(&pts, &options());
        assert_eq!(svg.matches("<circle").count(), 3);
        assert_eq!(svg.matches("<polyline").count(), 1);
        assert!(svg.contains(">n</text>"));
        assert!(svg.contains(">value</text>"));
    }

    #[test]
    fn rendering_is_byte_deterministic() {
        let pts = vec![(1.0, 0.123456), (10.0, 0.9), (100.0, 0.99)];
        let opts = ChartOptions {
            log_x: true,
            log_y: true,
            annotation: Some("slope = -1.0000".into()),
            ..options()
        };
        assert_eq!(render_line_chart(&pts, &opts), render_line_chart(&pts, &opts));
    }

    #[test]
    fn log_mode_labels_decades() {
        let pts: Vec<(f64, f64)> = (2..=5).map(|k| (10f64.powi(k), 1.0 / 10f64.powi(k))).collect();
        let opts = ChartOptions {
            log_x: true,
            log_y: true,
            ..options()
        };
        let svg = render_line_chart(&pts, &opts);
        assert!(svg.contains("1e3"), "{svg}");
        assert!(svg.contains("1e-4"), "{svg}");
    }

    #[test]
    fn single_point_is_rendered_with_padded_range() {
        let svg = render_line_chart(&[(5.0, 0.5)], &options());
        assert_eq!(svg.matches("<circle").count(), 1);
        assert!(!svg.contains("NaN"));
    }

    #[test]
    fn annotation_is_escaped() {
        let opts = ChartOptions {
            annotation: Some("a < b & c".into()),
            ..options()
        };
        let svg = render_line_chart(&[(1.0, 1.0), (2.0, 2.0)], &opts);
        assert!(svg.contains("a &lt; b &amp; c"));
    }
}
