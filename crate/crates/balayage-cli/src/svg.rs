//! Static SVG line charts for ratio-vs-scale curves and log-log mass fits.

pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 62.0;
const COLORS: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf",
];

fn fmt(v: f64) -> String {
    if v == 0.0 {
        "0".to_string()
    } else if v.abs() >= 1e4 || v.abs() < 1e-3 {
        format!("{v:.2e}")
    } else {
        format!("{v:.4}")
    }
}

/// Renders a fixed-size line chart; a pure function of its inputs.
pub fn line_chart(title: &str, x_label: &str, y_label: &str, series: &[Series]) -> String {
    let points: Vec<(f64, f64)> = series
        .iter()
        .flat_map(|s| s.points.iter().copied())
        .collect();
    let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(x, y) in &points {
        x_min = x_min.min(x);
        x_max = x_max.max(x);
        y_min = y_min.min(y);
        y_max = y_max.max(y);
    }
    if points.is_empty() {
        x_min = 0.0;
        x_max = 1.0;
        y_min = 0.0;
        y_max = 1.0;
    }
    if (x_max - x_min).abs() < 1e-300 {
        x_min -= 0.5;
        x_max += 0.5;
    }
    if (y_max - y_min).abs() < 1e-300 {
        y_min -= 0.5;
        y_max += 0.5;
    }
    let sx = (WIDTH - 2.0 * MARGIN) / (x_max - x_min);
    let sy = (HEIGHT - 2.0 * MARGIN) / (y_max - y_min);
    let map = |x: f64, y: f64| {
        (
            MARGIN + (x - x_min) * sx,
            HEIGHT - MARGIN - (y - y_min) * sy,
        )
    };

    let mut svg = String::new();
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">\n"
    ));
    svg.push_str("<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n");
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"24\" font-family=\"monospace\" font-size=\"15\" \
         text-anchor=\"middle\">{title}</text>\n",
        WIDTH / 2.0
    ));
    // Axes.
    svg.push_str(&format!(
        "<line x1=\"{m}\" y1=\"{b:.1}\" x2=\"{r:.1}\" y2=\"{b:.1}\" stroke=\"black\"/>\n\
         <line x1=\"{m}\" y1=\"{t}\" x2=\"{m}\" y2=\"{b:.1}\" stroke=\"black\"/>\n",
        m = MARGIN,
        t = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN,
    ));
    // Ticks.
    for i in 0..=4 {
        let fx = x_min + (x_max - x_min) * i as f64 / 4.0;
        let (px, _) = map(fx, y_min);
        svg.push_str(&format!(
            "<line x1=\"{px:.1}\" y1=\"{b:.1}\" x2=\"{px:.1}\" y2=\"{b2:.1}\" stroke=\"black\"/>\n\
             <text x=\"{px:.1}\" y=\"{ty:.1}\" font-family=\"monospace\" font-size=\"11\" \
             text-anchor=\"middle\">{}</text>\n",
            fmt(fx),
            b = HEIGHT - MARGIN,
            b2 = HEIGHT - MARGIN + 5.0,
            ty = HEIGHT - MARGIN + 18.0,
        ));
        let fy = y_min + (y_max - y_min) * i as f64 / 4.0;
        let (_, py) = map(x_min, fy);
        svg.push_str(&format!(
            "<line x1=\"{m2:.1}\" y1=\"{py:.1}\" x2=\"{m}\" y2=\"{py:.1}\" stroke=\"black\"/>\n\
             <text x=\"{tx:.1}\" y=\"{py2:.1}\" font-family=\"monospace\" font-size=\"11\" \
             text-anchor=\"end\">{}</text>\n",
            fmt(fy),
            m = MARGIN,
            m2 = MARGIN - 5.0,
            tx = MARGIN - 8.0,
            py2 = py + 4.0,
        ));
    }
    svg.push_str(&format!(
        "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" \
         text-anchor=\"middle\">{x_label}</text>\n",
        WIDTH / 2.0,
        HEIGHT - 14.0
    ));
    svg.push_str(&format!(
        "<text x=\"16\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" \
         text-anchor=\"middle\" transform=\"rotate(-90 16 {:.1})\">{y_label}</text>\n",
        HEIGHT / 2.0,
        HEIGHT / 2.0
    ));
    // Series.
    for (i, s) in series.iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        if s.points.len() > 1 {
            let path: Vec<String> = s
                .points
                .iter()
                .map(|&(x, y)| {
                    let (px, py) = map(x, y);
                    format!("{px:.2},{py:.2}")
                })
                .collect();
            svg.push_str(&format!(
                "<polyline points=\"{}\" fill=\"none\" stroke=\"{color}\" stroke-width=\"1.5\"/>\n",
                path.join(" ")
            ));
        }
        for &(x, y) in &s.points {
            let (px, py) = map(x, y);
            svg.push_str(&format!(
                "<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"2.5\" fill=\"{color}\"/>\n"
            ));
        }
        svg.push_str(&format!(
            "<text x=\"{:.1}\" y=\"{:.1}\" font-family=\"monospace\" font-size=\"12\" \
             fill=\"{color}\">{}</text>\n",
            WIDTH - MARGIN - 180.0,
            MARGIN + 16.0 * i as f64 + 4.0,
            s.label
        ));
    }
    svg.push_str("</svg>\n");
    svg
}
