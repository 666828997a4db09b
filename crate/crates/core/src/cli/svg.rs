//! Knuth-style diagrams: one horizontal wire per line, each comparator a
//! vertical link with filled endpoints. Comparators of one layer whose spans
//! overlap are shifted into separate columns. Flipped comparators get an
//! arrowhead on the line that receives the maximum.

use std::fmt::Write;

use crate::{Connector, Network};

const MARGIN: f64 = 20.0;
const LINE_GAP: f64 = 20.0;
const COLUMN_GAP: f64 = 10.0;
const LAYER_GAP: f64 = 24.0;
const DOT_RADIUS: f64 = 3.0;
const ARROW: f64 = 5.0;

/// Greedy column assignment: each comparator goes to the first column where
/// it does not overlap an already placed span.
fn columns(c: &Connector) -> Vec<Vec<(usize, usize, bool)>> {
    let mut cols: Vec<Vec<(usize, usize, bool)>> = Vec::new();
    for pair @ (lo, hi, _) in c.pairs() {
        let free = cols
            .iter_mut()
            .find(|col| col.iter().all(|&(a, b, _)| hi < a || b < lo));
        match free {
            Some(col) => col.push(pair),
            None => cols.push(vec![pair]),
        }
    }
    cols
}

fn y_of(line: usize) -> f64 {
    MARGIN + line as f64 * LINE_GAP
}

pub fn render_svg(n: &Network) -> String {
    let layouts: Vec<_> = n.layers().iter().map(columns).collect();
    let body_width: f64 = layouts
        .iter()
        .map(|cols| cols.len().max(1) as f64 * COLUMN_GAP + LAYER_GAP)
        .sum();
    let width = 2.0 * MARGIN + body_width.max(LAYER_GAP);
    let height = 2.0 * MARGIN + n.width().saturating_sub(1) as f64 * LINE_GAP;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(
        out,
        r#"<g class="wires" stroke="black" stroke-width="1.5">"#
    )
    .unwrap();
    for line in 0..n.width() {
        let y = y_of(line);
        writeln!(
            out,
            r#"<line class="wire" x1="{MARGIN}" y1="{y}" x2="{}" y2="{y}"/>"#,
            width - MARGIN
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    let mut x = MARGIN + LAYER_GAP / 2.0;
    for cols in &layouts {
        out.push_str(r#"<g class="layer" stroke="black" fill="black" stroke-width="1.5">"#);
        out.push('\n');
        for col in cols {
            for &(lo, hi, flipped) in col {
                let (y1, y2) = (y_of(lo), y_of(hi));
                writeln!(
                    out,
                    r#"<line class="link" x1="{x}" y1="{y1}" x2="{x}" y2="{y2}"/>"#
                )
                .unwrap();
                for y in [y1, y2] {
                    writeln!(out, r#"<circle cx="{x}" cy="{y}" r="{DOT_RADIUS}"/>"#).unwrap();
                }
                if flipped {
                    let tip = y1 + DOT_RADIUS;
                    let base = tip + ARROW * 1.5;
                    writeln!(
                        out,
                        r#"<polygon class="arrow" points="{x},{tip} {},{base} {},{base}"/>"#,
                        x - ARROW,
                        x + ARROW
                    )
                    .unwrap();
                }
            }
            x += COLUMN_GAP;
        }
        if cols.is_empty() {
            x += COLUMN_GAP;
        }
        out.push_str("</g>\n");
        x += LAYER_GAP;
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitonic::{bfsort, bsort, half_cleaner};

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn empty_network_has_only_wires() {
        let s = render_svg(&Network::empty(4));
        assert_eq!(count(&s, r#"class="wire""#), 4);
        assert_eq!(count(&s, r#"class="link""#), 0);
        assert!(s.starts_with("<svg"));
        assert!(s.ends_with("</svg>\n"));
    }

    #[test]
    fn bsort_3_layout() {
        let s = render_svg(&bsort(3).unwrap());
        assert_eq!(count(&s, r#"class="layer""#), 6);
        assert_eq!(count(&s, r#"class="link""#), 24);
        assert_eq!(count(&s, "<circle"), 48);
        assert_eq!(count(&s, r#"class="arrow""#), 0);
        assert_eq!(count(&s, "<g "), count(&s, "</g>"));
    }

    #[test]
    fn one_arrow_per_flipped_pair() {
        let n = bfsort(false, 3).unwrap();
        let flipped: usize = n
            .layers()
            .iter()
            .map(|c| c.pairs().filter(|p| p.2).count())
            .sum();
        assert!(flipped > 0);
        assert_eq!(count(&render_svg(&n), r#"class="arrow""#), flipped);
    }

    #[test]
    fn overlapping_links_get_separate_columns() {
        assert_eq!(columns(&half_cleaner(4, false)).len(), 4);
        let ndup_layer =
            crate::combinators::cmerge(&half_cleaner(1, false), &half_cleaner(1, false));
        assert_eq!(columns(&ndup_layer).len(), 1);
    }

    #[test]
    fn deterministic() {
        let n = bsort(4).unwrap();
        assert_eq!(render_svg(&n), render_svg(&n));
    }
}
