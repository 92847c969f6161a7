//! ASCII and SVG drawings of a word as a lattice path.

use std::fmt::Write;
use std::str::FromStr;

use dcwords::{factorizations, lyndon_factorization, LetterOrder, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Mark {
    S,
    SPrime,
    FactorBoundaries,
}

impl FromStr for Mark {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "S" => Ok(Mark::S),
            "S'" | "S′" => Ok(Mark::SPrime),
            "boundaries" | "factor-boundaries" => Ok(Mark::FactorBoundaries),
            other => Err(format!(
                "unknown mark {other:?} (expected S, S', factor-boundaries)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RenderFormat {
    Ascii,
    Svg,
}

#[derive(Debug, Clone)]
pub struct RenderSpec {
    pub word: Word,
    /// Draw the segment from `(0,0)` to `(a,b)`.
    pub show_segment: bool,
    pub marks: Vec<Mark>,
    pub format: RenderFormat,
    /// SVG pixels per lattice unit.
    pub cell_size: u32,
}

type Point = (usize, usize);

/// Points resolved from the requested marks.
struct Resolved {
    s: Option<Point>,
    s_prime: Option<Point>,
    boundaries: Vec<Point>,
}

fn resolve(spec: &RenderSpec) -> dcwords::Result<Resolved> {
    let mut out = Resolved {
        s: None,
        s_prime: None,
        boundaries: Vec::new(),
    };
    if spec
        .marks
        .iter()
        .any(|m| matches!(m, Mark::S | Mark::SPrime))
    {
        let f = factorizations(&spec.word)?;
        if spec.marks.contains(&Mark::S) {
            out.s = Some(f.s_point);
        }
        if spec.marks.contains(&Mark::SPrime) {
            out.s_prime = Some(f.s_prime_point);
        }
    }
    if spec.marks.contains(&Mark::FactorBoundaries) {
        let f = lyndon_factorization(&spec.word, LetterOrder::ZeroFirst);
        out.boundaries = f
            .starts
            .iter()
            .skip(1)
            .map(|&i| spec.word.point_after(i))
            .collect();
    }
    Ok(out)
}

pub fn render(spec: &RenderSpec) -> dcwords::Result<String> {
    let marks = resolve(spec)?;
    Ok(match spec.format {
        RenderFormat::Ascii => ascii(&spec.word, &marks),
        RenderFormat::Svg => svg(spec, &marks),
    })
}

/// Rows are printed top-down. A `0` step from `(x,y)` is a `_` at column
/// `2x+1` of row `y`; a `1` step from `(x,y)` is a `|` at column `2x` of
/// row `y+1`. Grid points are `.`.
fn ascii(word: &Word, marks: &Resolved) -> String {
    let p = word.parikh();
    let (a, b) = (p.zeros, p.ones);
    let mut rows: Vec<Vec<u8>> = (0..=b)
        .map(|_| {
            (0..=2 * a)
                .map(|c| if c % 2 == 0 { b'.' } else { b' ' })
                .collect()
        })
        .collect();
    let (mut x, mut y) = (0, 0);
    for &s in word.as_slice() {
        if s == 0 {
            rows[y][2 * x + 1] = b'_';
            x += 1;
        } else {
            rows[y + 1][2 * x] = b'|';
            y += 1;
        }
    }
    let mut out = String::new();
    for row in rows.iter().rev() {
        out.push_str(String::from_utf8_lossy(row).trim_end());
        out.push('\n');
    }
    if let Some((x, y)) = marks.s {
        writeln!(out, "S ({x},{y})").unwrap();
    }
    if let Some((x, y)) = marks.s_prime {
        writeln!(out, "S' ({x},{y})").unwrap();
    }
    if !marks.boundaries.is_empty() {
        let pts: Vec<String> = marks
            .boundaries
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        writeln!(out, "boundaries {}", pts.join(" ")).unwrap();
    }
    out
}

fn svg(spec: &RenderSpec, marks: &Resolved) -> String {
    let p = spec.word.parikh();
    let (a, b) = (p.zeros, p.ones);
    let cell = spec.cell_size as usize;
    let margin = cell;
    let (width, height) = (2 * margin + a * cell, 2 * margin + b * cell);
    // origin bottom-left, y upward
    let px = |x: usize| margin + x * cell;
    let py = |y: usize| margin + (b - y) * cell;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "<title>{}</title>", spec.word).unwrap();
    writeln!(
        out,
        r##"<g class="grid" stroke="#d0d0d0" stroke-width="1">"##
    )
    .unwrap();
    for x in 0..=a {
        writeln!(
            out,
            r#"<line x1="{0}" y1="{1}" x2="{0}" y2="{2}"/>"#,
            px(x),
            py(0),
            py(b)
        )
        .unwrap();
    }
    for y in 0..=b {
        writeln!(
            out,
            r#"<line x1="{1}" y1="{0}" x2="{2}" y2="{0}"/>"#,
            py(y),
            px(0),
            px(a)
        )
        .unwrap();
    }
    out.push_str("</g>\n");

    if spec.show_segment {
        writeln!(
            out,
            r##"<line class="segment" x1="{}" y1="{}" x2="{}" y2="{}" stroke="#888888" stroke-width="1" stroke-dasharray="4 3"/>"##,
            px(0),
            py(0),
            px(a),
            py(b)
        )
        .unwrap();
    }

    let points: Vec<String> = (0..=spec.word.len())
        .map(|k| {
            let (x, y) = spec.word.point_after(k);
            format!("{},{}", px(x), py(y))
        })
        .collect();
    writeln!(
        out,
        r##"<polyline class="path" points="{}" fill="none" stroke="#000000" stroke-width="2"/>"##,
        points.join(" ")
    )
    .unwrap();

    for &(x, y) in &marks.boundaries {
        writeln!(
            out,
            r##"<circle class="boundary" cx="{}" cy="{}" r="3" fill="#1f77b4"/>"##,
            px(x),
            py(y)
        )
        .unwrap();
    }
    for (label, point) in [("S", marks.s), ("S′", marks.s_prime)] {
        if let Some((x, y)) = point {
            writeln!(
                out,
                r##"<circle class="mark" cx="{}" cy="{}" r="4" fill="#d62728"/>"##,
                px(x),
                py(y)
            )
            .unwrap();
            writeln!(
                out,
                r#"<text x="{}" y="{}" font-family="sans-serif" font-size="{}">{label}</text>"#,
                px(x) + 6,
                py(y) - 6,
                cell / 2
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(word: &str, format: RenderFormat) -> RenderSpec {
        RenderSpec {
            word: word.parse().unwrap(),
            show_segment: false,
            marks: Vec::new(),
            format,
            cell_size: 24,
        }
    }

    #[test]
    fn ascii_single_step() {
        assert_eq!(render(&spec("0", RenderFormat::Ascii)).unwrap(), "._.\n");
        assert_eq!(render(&spec("1", RenderFormat::Ascii)).unwrap(), "|\n.\n");
    }

    #[test]
    fn ascii_staircase() {
        assert_eq!(
            render(&spec("0101", RenderFormat::Ascii)).unwrap(),
            ". . |\n. |_.\n._. .\n"
        );
    }

    #[test]
    fn marks_need_a_christoffel_word() {
        let mut s = spec("0011", RenderFormat::Svg);
        s.marks = vec![Mark::S];
        assert!(render(&s).is_err());
        s.marks = vec![Mark::FactorBoundaries];
        assert!(render(&s).is_ok());
    }

    #[test]
    fn svg_marks_at_path_points() {
        let mut s = spec("00100100101", RenderFormat::Svg);
        s.marks = vec![Mark::S, Mark::SPrime];
        let out = render(&s).unwrap();
        // S = (2,1), S′ = (6,2) on a 7×4 grid with 24px cells
        assert!(out.contains(r#"<circle class="mark" cx="72" cy="96""#));
        assert!(out.contains(r#"<circle class="mark" cx="168" cy="72""#));
        assert_eq!(out, render(&s).unwrap());
    }
}
