//! Minimal SVG line chart: minority share against a log-scaled x axis,
//! with the population baseline dashed.

use std::fmt::Write as _;

use fairank_core::fairness::FairnessCurve;

const WIDTH: f64 = 640.0;
const HEIGHT: f64 = 400.0;
const MARGIN: f64 = 50.0;
const PALETTE: [&str; 8] = [
    "#e6862a", "#7b3fa0", "#1f77b4", "#8a8a21", "#d62728", "#2ca02c", "#17becf", "#7f7f7f",
];

pub fn render(title: &str, curves: &[(String, FairnessCurve)]) -> String {
    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{HEIGHT}" font-family="sans-serif" font-size="12">"#
    )
    .unwrap();
    writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    writeln!(s, r#"<text x="{}" y="20" text-anchor="middle">{}</text>"#, WIDTH / 2.0, escape(title)).unwrap();

    let Some((_, first)) = curves.first() else {
        s.push_str("</svg>\n");
        return s;
    };
    let xmin = first.grid.first().copied().unwrap_or(1.0).min(1.0);
    let lx0 = xmin.log10();
    let span = (0.0 - lx0).max(1e-9);
    let px = |x: f64| MARGIN + (x.log10() - lx0) / span * (WIDTH - 2.0 * MARGIN);
    let py = |y: f64| HEIGHT - MARGIN - y * (HEIGHT - 2.0 * MARGIN);

    // axes and decade ticks
    writeln!(
        s,
        r#"<path d="M{m},{t} V{b} H{r}" stroke="black" fill="none"/>"#,
        m = MARGIN,
        t = MARGIN,
        b = HEIGHT - MARGIN,
        r = WIDTH - MARGIN
    )
    .unwrap();
    let mut decade = lx0.ceil() as i32;
    while decade <= 0 {
        let x = px(10f64.powi(decade));
        writeln!(
            s,
            r#"<text x="{x:.1}" y="{:.1}" text-anchor="middle">1e{decade}</text>"#,
            HEIGHT - MARGIN + 16.0
        )
        .unwrap();
        decade += 1;
    }
    for tick in [0.0, 0.25, 0.5, 0.75, 1.0] {
        writeln!(
            s,
            r#"<text x="{:.1}" y="{:.1}" text-anchor="end">{tick}</text>"#,
            MARGIN - 6.0,
            py(tick) + 4.0
        )
        .unwrap();
    }
    writeln!(
        s,
        r#"<text x="{}" y="{}" text-anchor="middle">top fraction x</text>"#,
        WIDTH / 2.0,
        HEIGHT - 12.0
    )
    .unwrap();

    let base = py(first.baseline);
    writeln!(
        s,
        r#"<line x1="{MARGIN}" y1="{base:.1}" x2="{}" y2="{base:.1}" stroke="gray" stroke-dasharray="6,4"/>"#,
        WIDTH - MARGIN
    )
    .unwrap();

    for (i, (name, c)) in curves.iter().enumerate() {
        let color = PALETTE[i % PALETTE.len()];
        let points: Vec<String> = c
            .grid
            .iter()
            .zip(&c.share)
            .map(|(&x, &y)| format!("{:.1},{:.1}", px(x), py(y)))
            .collect();
        writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{color}" stroke-width="1.5"/>"#,
            points.join(" ")
        )
        .unwrap();
        let ly = MARGIN + 14.0 * i as f64;
        writeln!(
            s,
            r#"<text x="{:.1}" y="{ly:.1}" fill="{color}">{}</text>"#,
            WIDTH - MARGIN - 120.0,
            escape(name)
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}
