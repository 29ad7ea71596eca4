//! ASCII and SVG drawings of triangles, path nests and height grids.

use std::fmt::Write as _;
use std::str::FromStr;

use abt_core::paths::{Path, Point, Step};

use crate::envelope::Object;
use crate::error::CliError;
use crate::route::convert;

/// Side of one SVG cell.
pub const CELL: i64 = 20;

const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Triangle,
    Paths,
    Heights,
}

impl FromStr for Kind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "triangle" => Ok(Kind::Triangle),
            "paths" => Ok(Kind::Paths),
            "heights" => Ok(Kind::Heights),
            _ => Err(CliError::Usage(format!(
                "unknown render kind {s:?} (expected triangle, paths or heights)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    Ascii,
    Svg,
}

/// Cells placed on a grid; `None` is drawn as an empty box.
struct Panel {
    cols: usize,
    rows: Vec<Vec<(usize, Option<String>)>>,
}

fn panel(rows: Vec<Vec<u32>>, blank_zeros: bool, right_justify: bool) -> Panel {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let rows = rows
        .into_iter()
        .map(|row| {
            let offset = if right_justify { cols - row.len() } else { 0 };
            row.into_iter()
                .enumerate()
                .map(|(j, v)| {
                    let text = (!(blank_zeros && v == 0)).then(|| v.to_string());
                    (offset + j, text)
                })
                .collect()
        })
        .collect();
    Panel { cols, rows }
}

fn widen(rows: Vec<Vec<u8>>) -> Vec<Vec<u32>> {
    rows.into_iter()
        .map(|r| r.into_iter().map(u32::from).collect())
        .collect()
}

fn triangle_panels(obj: &Object) -> Result<Vec<Panel>, CliError> {
    Ok(match obj {
        Object::Abt(t) => vec![panel(widen(t.to_rows()), true, false)],
        Object::Boolean(b) => vec![panel(widen(b.to_rows()), true, true)],
        Object::Magog(m) => vec![panel(m.to_rows(), false, false)],
        Object::Domain(d) => vec![panel(d.rows().to_vec(), false, true)],
        Object::SsbTriangle(t) => vec![panel(t.to_rows(), false, false)],
        Object::Abh(h) => h
            .triangles()
            .iter()
            .map(|t| panel(widen(t.to_rows()), true, false))
            .collect(),
        other => {
            return Err(CliError::Usage(format!(
                "cannot render {} as a triangle",
                other.family()
            )))
        }
    })
}

fn panels_ascii(panels: &[Panel]) -> String {
    let width = panels
        .iter()
        .flat_map(|p| p.rows.iter().flatten())
        .filter_map(|(_, t)| t.as_ref().map(String::len))
        .max()
        .unwrap_or(1);
    let blocks: Vec<String> = panels
        .iter()
        .map(|p| {
            let mut out = String::new();
            for row in &p.rows {
                let mut line = vec![" ".repeat(width); p.cols];
                for (c, t) in row {
                    if let Some(t) = t {
                        line[*c] = format!("{t:>width$}");
                    }
                }
                out.push_str(line.join(" ").trim_end());
                out.push('\n');
            }
            out
        })
        .collect();
    blocks.join("\n")
}

fn svg_open(w: i64, h: i64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">\n"
    )
}

fn panels_svg(panels: &[Panel]) -> String {
    let cols = panels.iter().map(|p| p.cols).max().unwrap_or(0) as i64;
    let total_rows: usize = panels.iter().map(|p| p.rows.len()).sum();
    let gaps = panels.len().saturating_sub(1) as i64;
    let w = cols * CELL;
    let h = (total_rows as i64 + gaps) * CELL;
    let mut out = svg_open(w, h);
    let mut y = 0i64;
    for p in panels {
        for row in &p.rows {
            for (c, t) in row {
                let x = *c as i64 * CELL;
                let _ = writeln!(
                    out,
                    "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"none\" stroke=\"#999\"/>"
                );
                if let Some(t) = t {
                    let _ = writeln!(
                        out,
                        "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">{t}</text>",
                        x + CELL / 2,
                        y + CELL / 2 + 4
                    );
                }
            }
            y += CELL;
        }
        y += CELL;
    }
    out.push_str("</svg>\n");
    out
}

fn heights_ascii(m: &[Vec<u32>]) -> String {
    let width = m
        .iter()
        .flatten()
        .map(|v| v.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = String::new();
    for row in m {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

fn heights_svg(m: &[Vec<u32>]) -> String {
    let side = m.len() as i64;
    let max = m.iter().flatten().copied().max().unwrap_or(0).max(1);
    let mut out = svg_open(side * CELL, side * CELL);
    for (i, row) in m.iter().enumerate() {
        for (j, &v) in row.iter().enumerate() {
            let (x, y) = (j as i64 * CELL, i as i64 * CELL);
            let shade = 255 - (v * 191 / max);
            let _ = writeln!(
                out,
                "  <rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"rgb({shade},{shade},{shade})\" stroke=\"#999\"/>"
            );
            let ink = if shade < 128 { "#fff" } else { "#000" };
            let _ = writeln!(
                out,
                "  <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"10\" text-anchor=\"middle\" fill=\"{ink}\">{v}</text>",
                x + CELL / 2,
                y + CELL / 2 + 4
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Inclusive bounding box `(min, max)` of every vertex, `None` when empty.
fn bounds(points: &[Vec<Point>]) -> Option<(Point, Point)> {
    let all: Vec<&Point> = points.iter().flatten().collect();
    let first = all.first()?;
    let (mut lo, mut hi) = (**first, **first);
    for p in all {
        lo = Point::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = Point::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    Some((lo, hi))
}

fn label(k: usize) -> char {
    char::from_digit((k + 1) as u32, 36).unwrap_or('#')
}

// Lattice point (x, y) sits at column 2(x - lo.x), line 2(hi.y - y); edges
// occupy the cells in between.
fn paths_ascii(paths: &[Path]) -> String {
    let points: Vec<Vec<Point>> = paths.iter().map(Path::points).collect();
    let Some((lo, hi)) = bounds(&points) else {
        return String::new();
    };
    let cols = (2 * (hi.x - lo.x) + 1) as usize;
    let lines = (2 * (hi.y - lo.y) + 1) as usize;
    let mut grid = vec![vec![' '; cols]; lines];
    let at = |p: Point| ((2 * (hi.y - p.y)) as usize, (2 * (p.x - lo.x)) as usize);
    for y in lo.y..=hi.y {
        for x in lo.x..=hi.x {
            let (r, c) = at(Point::new(x, y));
            grid[r][c] = '.';
        }
    }
    for (k, (path, pts)) in paths.iter().zip(&points).enumerate() {
        for (step, w) in path.steps.iter().zip(pts.windows(2)) {
            let (r0, c0) = at(w[0]);
            let (r1, c1) = at(w[1]);
            let glyph = match step {
                Step::N | Step::S => '|',
                Step::E => '-',
                Step::Sw => '/',
            };
            grid[(r0 + r1) / 2][(c0 + c1) / 2] = glyph;
        }
        for p in pts {
            let (r, c) = at(*p);
            grid[r][c] = match grid[r][c] {
                '.' => label(k),
                _ => '*',
            };
        }
    }
    let mut out = String::new();
    for line in grid {
        let s: String = line.into_iter().collect();
        out.push_str(s.trim_end());
        out.push('\n');
    }
    out
}

fn paths_svg(paths: &[Path]) -> String {
    let points: Vec<Vec<Point>> = paths.iter().map(Path::points).collect();
    let Some((lo, hi)) = bounds(&points) else {
        return format!("{}</svg>\n", svg_open(2 * CELL, 2 * CELL));
    };
    let w = (hi.x - lo.x + 2) * CELL;
    let h = (hi.y - lo.y + 2) * CELL;
    let at = |p: &Point| (CELL + (p.x - lo.x) * CELL, CELL + (hi.y - p.y) * CELL);
    let mut out = svg_open(w, h);
    for y in lo.y..=hi.y {
        for x in lo.x..=hi.x {
            let (cx, cy) = at(&Point::new(x, y));
            let _ = writeln!(
                out,
                "  <circle cx=\"{cx}\" cy=\"{cy}\" r=\"1.5\" fill=\"#bbb\"/>"
            );
        }
    }
    for (k, pts) in points.iter().enumerate() {
        let coords: Vec<String> = pts
            .iter()
            .map(|p| {
                let (x, y) = at(p);
                format!("{x},{y}")
            })
            .collect();
        let _ = writeln!(
            out,
            "  <polyline points=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"/>",
            coords.join(" "),
            PALETTE[k % PALETTE.len()]
        );
    }
    out.push_str("</svg>\n");
    out
}

pub fn render(obj: Object, kind: Kind, style: Style) -> Result<String, CliError> {
    match kind {
        Kind::Triangle => {
            let panels = triangle_panels(&obj)?;
            Ok(match style {
                Style::Ascii => panels_ascii(&panels),
                Style::Svg => panels_svg(&panels),
            })
        }
        Kind::Paths => {
            let paths = match &obj {
                Object::Nclp(p) => p.paths().to_vec(),
                Object::Nilp(p) => p.paths().to_vec(),
                other => {
                    return Err(CliError::Usage(format!(
                        "cannot render {} as paths (expected nclp or nilp)",
                        other.family()
                    )))
                }
            };
            Ok(match style {
                Style::Ascii => paths_ascii(&paths),
                Style::Svg => paths_svg(&paths),
            })
        }
        Kind::Heights => {
            let full = match obj {
                Object::Tsscpp(_) => obj,
                other => convert(other, "tsscpp")?,
            };
            let Object::Tsscpp(f) = full else {
                unreachable!("converted to tsscpp")
            };
            Ok(match style {
                Style::Ascii => heights_ascii(f.matrix()),
                Style::Svg => heights_svg(f.matrix()),
            })
        }
    }
}
