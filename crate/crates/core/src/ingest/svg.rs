//! Barcode plots as standalone SVG 1.1 documents.

use std::fmt::Write as _;

use crate::persistence::Barcode;

#[derive(Clone, Debug, PartialEq)]
pub struct RenderOptions {
    pub width: u32,
    pub bar_height: u32,
    pub bar_gap: u32,
    /// Right end of the ε axis. Defaults to the largest finite endpoint.
    pub max_eps: Option<f64>,
    pub include_zero_length: bool,
    pub title: Option<String>,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            width: 960,
            bar_height: 6,
            bar_gap: 3,
            max_eps: None,
            include_zero_length: false,
            title: None,
        }
    }
}

const LEFT: f64 = 60.0;
const RIGHT: f64 = 40.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 40.0;
const GROUP_HEADER: f64 = 20.0;
const TICKS: usize = 5;

const COLORS: [&str; 4] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd"];

/// Draws one horizontal bar per interval, grouped by dimension.
///
/// Infinite intervals run to the right edge of the plot and end in an
/// arrowhead. Output depends only on the barcode and options.
pub fn render_barcode_svg(barcode: &Barcode, opts: &RenderOptions) -> String {
    let bars: Vec<_> = barcode
        .intervals()
        .iter()
        .filter(|i| opts.include_zero_length || !i.is_zero_length())
        .collect();

    let x_max = opts.max_eps.unwrap_or_else(|| {
        bars.iter()
            .flat_map(|i| [i.birth, i.death])
            .filter(|x| x.is_finite())
            .fold(0.0, f64::max)
    });
    let x_max = if x_max > 0.0 { x_max } else { 1.0 };

    let width = opts.width as f64;
    let plot_w = width - LEFT - RIGHT;
    let row = (opts.bar_height + opts.bar_gap) as f64;
    let mut dims: Vec<usize> = bars.iter().map(|i| i.dim).collect();
    dims.dedup();
    let plot_h: f64 = dims
        .iter()
        .map(|&k| GROUP_HEADER + row * bars.iter().filter(|i| i.dim == k).count() as f64)
        .sum();
    let height = (TOP + plot_h.max(row) + BOTTOM).ceil();
    let x_of = |eps: f64| LEFT + plot_w * (eps.min(x_max) / x_max);

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{}" height="{height}" viewBox="0 0 {} {height}">"#,
        opts.width, opts.width
    );
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"9\" refY=\"5\" ",
        "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">",
        "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#333\"/></marker></defs>\n"
    ));
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{}" height="{height}" fill="white"/>"#,
        opts.width
    );
    if let Some(title) = &opts.title {
        let _ = writeln!(
            s,
            r#"<text x="{}" y="24" font-family="sans-serif" font-size="14" text-anchor="middle">{}</text>"#,
            width / 2.0,
            escape(title)
        );
    }

    let mut y = TOP;
    for &k in &dims {
        let color = COLORS[k % COLORS.len()];
        let _ = writeln!(s, r#"<g class="dim" data-dim="{k}">"#);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="12">H{k}</text>"#,
            LEFT - 40.0,
            y + 12.0
        );
        y += GROUP_HEADER;
        for i in bars.iter().filter(|i| i.dim == k) {
            let x0 = x_of(i.birth);
            let cy = y + opts.bar_height as f64 / 2.0;
            if i.is_essential() {
                let _ = writeln!(
                    s,
                    r#"<line class="bar inf" x1="{x0:.2}" y1="{cy:.2}" x2="{:.2}" y2="{cy:.2}" stroke="{color}" stroke-width="{}" marker-end="url(#arrow)"/>"#,
                    LEFT + plot_w,
                    opts.bar_height
                );
            } else {
                let _ = writeln!(
                    s,
                    r#"<rect class="bar" x="{x0:.2}" y="{y:.2}" width="{:.2}" height="{}" fill="{color}"/>"#,
                    x_of(i.death) - x0,
                    opts.bar_height
                );
            }
            y += row;
        }
        let _ = writeln!(s, "</g>");
    }

    let axis_y = height - BOTTOM + 8.0;
    let _ = writeln!(
        s,
        r##"<line class="axis" x1="{LEFT:.2}" y1="{axis_y:.2}" x2="{:.2}" y2="{axis_y:.2}" stroke="#333"/>"##,
        LEFT + plot_w
    );
    for t in 0..=TICKS {
        let eps = x_max * t as f64 / TICKS as f64;
        let x = x_of(eps);
        let _ = writeln!(
            s,
            r##"<line x1="{x:.2}" y1="{axis_y:.2}" x2="{x:.2}" y2="{:.2}" stroke="#333"/>"##,
            axis_y + 4.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" font-family="sans-serif" font-size="10" text-anchor="middle">{}</text>"#,
            axis_y + 16.0,
            trim_float(eps)
        );
    }
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="11" text-anchor="middle">ε</text>"#,
        LEFT + plot_w / 2.0,
        axis_y + 30.0
    );
    s.push_str("</svg>\n");
    s
}

fn trim_float(x: f64) -> String {
    let s = format!("{x:.3}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s.is_empty() {
        "0".into()
    } else {
        s.into()
    }
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::persistence::Interval;

    fn iv(dim: usize, birth: f64, death: f64) -> Interval {
        Interval {
            dim,
            birth,
            death,
            birth_index: 0,
            death_index: None,
        }
    }

    fn parse(svg: &str) -> roxmltree::Document<'_> {
        roxmltree::Document::parse(svg).expect("well-formed SVG")
    }

    #[test]
    fn empty_barcode_has_axes_only() {
        let svg = render_barcode_svg(&Barcode::default(), &RenderOptions::default());
        let doc = parse(&svg);
        assert_eq!(doc.root_element().attribute("width"), Some("960"));
        assert!(doc.descendants().any(|n| n.attribute("class") == Some("axis")));
        assert!(!doc
            .descendants()
            .any(|n| n.attribute("class").is_some_and(|c| c.starts_with("bar"))));
    }

    #[test]
    fn finite_bar_spans_its_interval() {
        let b = Barcode::new(vec![iv(0, 0.0, 0.4)]);
        let opts = RenderOptions {
            max_eps: Some(0.8),
            ..Default::default()
        };
        let svg = render_barcode_svg(&b, &opts);
        let doc = parse(&svg);
        let bar = doc
            .descendants()
            .find(|n| n.attribute("class") == Some("bar"))
            .unwrap();
        let x: f64 = bar.attribute("x").unwrap().parse().unwrap();
        let w: f64 = bar.attribute("width").unwrap().parse().unwrap();
        assert_eq!(x, LEFT);
        assert!((w - (960.0 - LEFT - RIGHT) / 2.0).abs() < 0.01);
    }

    #[test]
    fn infinite_bars_get_arrows_and_title_is_escaped() {
        let b = Barcode::new(vec![
            iv(0, 0.0, f64::INFINITY),
            iv(1, 0.2, f64::INFINITY),
            iv(1, 0.3, 0.3),
        ]);
        let opts = RenderOptions {
            title: Some("loops & <voids>".into()),
            ..Default::default()
        };
        let svg = render_barcode_svg(&b, &opts);
        let doc = parse(&svg);
        let groups = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("dim"))
            .count();
        assert_eq!(groups, 2);
        let arrows = doc
            .descendants()
            .filter(|n| n.attribute("marker-end") == Some("url(#arrow)"))
            .count();
        assert_eq!(arrows, 2);
        assert_eq!(svg, render_barcode_svg(&b, &opts));
    }
}
