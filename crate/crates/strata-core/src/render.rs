//! Outline plots (ASCII, SVG, CSV) and canonical dendrogram JSON.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::boundary::BoundarySet;
use crate::dendrogram::Dendrogram;
use crate::error::{Error, Result};

/// Output format for [`render_outline`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutlineFormat {
    Ascii,
    Svg,
    Csv,
}

/// Everything an outline plot needs: per-paragraph nesting depths,
/// boundaries, and sentence counts for the secondary scale.
#[derive(Debug, Clone, PartialEq)]
pub struct OutlineView {
    depths: Vec<usize>,
    boundaries: BoundarySet,
    /// `sentence_offsets[i]` = sentences in paragraphs `1..=i+1`.
    sentence_offsets: Vec<usize>,
}

impl OutlineView {
    /// Builds a view; `sentence_counts` are per-paragraph. Panics when
    /// the inputs disagree in length or a boundary falls outside the
    /// gaps `1..paragraph_count`.
    pub fn new(
        depths: Vec<usize>,
        boundaries: BoundarySet,
        sentence_counts: &[usize],
    ) -> Self {
        assert!(!depths.is_empty(), "outline needs at least one paragraph");
        assert_eq!(
            depths.len(),
            sentence_counts.len(),
            "one sentence count per paragraph"
        );
        for gap in boundaries.gaps() {
            assert!(
                gap >= 1 && gap < depths.len(),
                "boundary gap {gap} does not split two paragraphs"
            );
        }
        let mut sentence_offsets = Vec::with_capacity(sentence_counts.len());
        let mut total = 0;
        for &c in sentence_counts {
            total += c;
            sentence_offsets.push(total);
        }
        OutlineView {
            depths,
            boundaries,
            sentence_offsets,
        }
    }

    pub fn paragraph_count(&self) -> usize {
        self.depths.len()
    }

    pub fn depths(&self) -> &[usize] {
        &self.depths
    }

    pub fn boundaries(&self) -> &BoundarySet {
        &self.boundaries
    }

    fn sentence_count(&self, paragraph: usize) -> usize {
        let end = self.sentence_offsets[paragraph - 1];
        let start = if paragraph > 1 {
            self.sentence_offsets[paragraph - 2]
        } else {
            0
        };
        end - start
    }
}

/// Renders the outline in the requested format; see the per-format
/// helpers for layout details.
pub fn render_outline(view: &OutlineView, format: OutlineFormat) -> String {
    match format {
        OutlineFormat::Ascii => ascii(view),
        OutlineFormat::Svg => svg(view),
        OutlineFormat::Csv => csv(view),
    }
}

/// One `#` bar per paragraph, bar height = nesting depth, boundary
/// columns overdrawn with `|`, then a digit axis. Every line is
/// exactly `paragraph_count` characters wide.
fn ascii(view: &OutlineView) -> String {
    let count = view.paragraph_count();
    let max_depth = view.depths.iter().copied().max().unwrap_or(0);
    let mut out = String::new();
    for level in (1..=max_depth).rev() {
        for col in 1..=count {
            out.push(if view.boundaries.contains(col) {
                '|'
            } else if view.depths[col - 1] >= level {
                '#'
            } else {
                ' '
            });
        }
        out.push('\n');
    }
    for col in 1..=count {
        out.push(char::from_digit((col % 10) as u32, 10).unwrap());
    }
    out.push('\n');
    out
}

fn csv(view: &OutlineView) -> String {
    let mut out = String::from("paragraph,depth,boundary_after\n");
    for (i, depth) in view.depths.iter().enumerate() {
        let paragraph = i + 1;
        let _ = writeln!(
            out,
            "{paragraph},{depth},{}",
            view.boundaries.contains(paragraph)
        );
    }
    out
}

/// Fixed 576×216 canvas. The depth curve steps across the paragraphs
/// with deeper nesting drawn lower; boundaries are dashed verticals.
/// Paragraph ticks sit above the axis, sentence ticks below.
fn svg(view: &OutlineView) -> String {
    const WIDTH: f64 = 576.0;
    const HEIGHT: f64 = 216.0;
    const LEFT: f64 = 40.0;
    const TOP: f64 = 12.0;
    const PLOT_W: f64 = 524.0;
    const PLOT_H: f64 = 164.0;
    let count = view.paragraph_count();
    let max_depth = view.depths.iter().copied().max().unwrap_or(0).max(1);
    let x = |t: f64| LEFT + t * PLOT_W / count as f64;
    let y = |d: usize| TOP + d as f64 * PLOT_H / max_depth as f64;
    let axis = TOP + PLOT_H;
    let c = |v: f64| format!("{v:.2}");

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{WIDTH}\" height=\"{HEIGHT}\" \
         viewBox=\"0 0 {WIDTH} {HEIGHT}\">"
    );
    let _ = writeln!(out, "<rect width=\"{WIDTH}\" height=\"{HEIGHT}\" fill=\"white\"/>");
    for gap in view.boundaries.gaps() {
        let gx = c(x(gap as f64));
        let _ = writeln!(
            out,
            "<line x1=\"{gx}\" y1=\"{}\" x2=\"{gx}\" y2=\"{}\" stroke=\"gray\" \
             stroke-dasharray=\"4 3\"/>",
            c(TOP),
            c(axis)
        );
    }
    let mut path = format!("M{} {}", c(x(0.0)), c(y(view.depths[0])));
    for (i, &depth) in view.depths.iter().enumerate().skip(1) {
        let _ = write!(path, " H{} V{}", c(x(i as f64)), c(y(depth)));
    }
    let _ = write!(path, " H{}", c(x(count as f64)));
    let _ = writeln!(
        out,
        "<path d=\"{path}\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>"
    );
    let _ = writeln!(
        out,
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\"/>",
        c(LEFT),
        c(axis),
        c(x(count as f64)),
        c(axis)
    );
    for paragraph in 1..=count {
        let center = c((x(paragraph as f64 - 1.0) + x(paragraph as f64)) / 2.0);
        let _ = writeln!(
            out,
            "<line x1=\"{center}\" y1=\"{}\" x2=\"{center}\" y2=\"{}\" stroke=\"black\"/>",
            c(axis - 6.0),
            c(axis)
        );
        if paragraph == 1 || paragraph % 5 == 0 {
            let _ = writeln!(
                out,
                "<text x=\"{center}\" y=\"{}\" font-size=\"10\" \
                 text-anchor=\"middle\">{paragraph}</text>",
                c(axis + 18.0)
            );
        }
        let sentences = view.sentence_count(paragraph);
        let span = PLOT_W / count as f64;
        for k in 0..sentences {
            let sx = x(paragraph as f64 - 1.0) + (k as f64 + 0.5) * span / sentences as f64;
            let _ = writeln!(
                out,
                "<line x1=\"{sx}\" y1=\"{}\" x2=\"{sx}\" y2=\"{}\" stroke=\"black\" \
                 stroke-width=\"0.5\"/>",
                c(axis),
                c(axis + 6.0),
                sx = c(sx)
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

/// Serializes a tree canonically: fixed key order, no whitespace,
/// floats in their shortest round-tripping form.
pub fn export_dendrogram_json(tree: &Dendrogram) -> String {
    let mut out = String::new();
    write_node(tree, &mut out);
    out
}

fn write_node(node: &Dendrogram, out: &mut String) {
    match node {
        Dendrogram::Leaf { paragraph } => {
            let _ = write!(out, "{{\"type\":\"leaf\",\"paragraph\":{paragraph}}}");
        }
        Dendrogram::Merge {
            proximity,
            size,
            depth,
            left,
            right,
        } => {
            let _ = write!(
                out,
                "{{\"type\":\"merge\",\"proximity\":{proximity},\"size\":{size},\"depth\":{depth},\"children\":["
            );
            write_node(left, out);
            out.push(',');
            write_node(right, out);
            out.push_str("]}");
        }
    }
}

/// Parses a tree serialized by [`export_dendrogram_json`]. Key order
/// and whitespace are free; duplicate or unknown keys, ordinals below
/// 1, and size/depth fields that contradict the children are errors,
/// all reported with a 1-based line number.
pub fn parse_dendrogram_json(source: &str) -> Result<Dendrogram> {
    let mut parser = Parser {
        bytes: source.as_bytes(),
        pos: 0,
        line: 1,
    };
    let tree = parser.parse_node()?;
    parser.skip_ws();
    if parser.pos != parser.bytes.len() {
        return Err(parser.err("trailing content"));
    }
    Ok(tree)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, message)
    }

    fn skip_ws(&mut self) {
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_whitespace() {
                break;
            }
            if b == b'\n' {
                self.line += 1;
            }
            self.pos += 1;
        }
    }

    fn expect(&mut self, want: u8) -> Result<()> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&want) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(format!("expected `{}`", want as char)))
        }
    }

    fn parse_string(&mut self) -> Result<String> {
        self.expect(b'"')?;
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            match b {
                b'"' => {
                    let s = core::str::from_utf8(&self.bytes[start..self.pos])
                        .map_err(|_| self.err("string is not UTF-8"))?;
                    self.pos += 1;
                    return Ok(String::from(s));
                }
                b'\\' => return Err(self.err("escapes are not supported")),
                b'\n' => return Err(self.err("unterminated string")),
                _ => self.pos += 1,
            }
        }
        Err(self.err("unterminated string"))
    }

    fn number_token(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            self.pos += 1;
        }
        while let Some(&b) = self.bytes.get(self.pos) {
            if b.is_ascii_digit() || matches!(b, b'.' | b'e' | b'E' | b'+' | b'-') {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a number"));
        }
        Ok(core::str::from_utf8(&self.bytes[start..self.pos]).expect("ASCII slice"))
    }

    fn parse_f64(&mut self) -> Result<f64> {
        let token = self.number_token()?;
        token
            .parse()
            .map_err(|_| self.err(format!("`{token}` is not a number")))
    }

    fn parse_usize(&mut self, what: &str) -> Result<usize> {
        let token = self.number_token()?;
        if token.bytes().any(|b| !b.is_ascii_digit()) {
            return Err(self.err(format!("{what} must be a non-negative integer")));
        }
        token
            .parse()
            .map_err(|_| self.err(format!("`{token}` is out of range for {what}")))
    }

    fn parse_node(&mut self) -> Result<Dendrogram> {
        self.expect(b'{')?;
        let mut node_type: Option<String> = None;
        let mut paragraph: Option<usize> = None;
        let mut proximity: Option<f64> = None;
        let mut size: Option<usize> = None;
        let mut depth: Option<usize> = None;
        let mut children: Option<(Dendrogram, Dendrogram)> = None;
        loop {
            let key = self.parse_string()?;
            self.expect(b':')?;
            let duplicate = match key.as_str() {
                "type" => node_type.replace(self.parse_string()?).is_some(),
                "paragraph" => paragraph.replace(self.parse_usize("paragraph")?).is_some(),
                "proximity" => proximity.replace(self.parse_f64()?).is_some(),
                "size" => size.replace(self.parse_usize("size")?).is_some(),
                "depth" => depth.replace(self.parse_usize("depth")?).is_some(),
                "children" => {
                    self.expect(b'[')?;
                    let left = self.parse_node()?;
                    self.expect(b',')?;
                    let right = self.parse_node()?;
                    self.expect(b']')?;
                    children.replace((left, right)).is_some()
                }
                other => return Err(self.err(format!("unknown key `{other}`"))),
            };
            if duplicate {
                return Err(self.err(format!("duplicate key `{key}`")));
            }
            self.skip_ws();
            match self.bytes.get(self.pos) {
                Some(b',') => self.pos += 1,
                Some(b'}') => {
                    self.pos += 1;
                    break;
                }
                _ => return Err(self.err("expected `,` or `}`")),
            }
        }
        match node_type.as_deref() {
            Some("leaf") => {
                if proximity.is_some() || size.is_some() || depth.is_some() || children.is_some()
                {
                    return Err(self.err("leaf node carries merge keys"));
                }
                let paragraph =
                    paragraph.ok_or_else(|| self.err("leaf node missing `paragraph`"))?;
                if paragraph == 0 {
                    return Err(self.err("paragraph must be at least 1"));
                }
                Ok(Dendrogram::Leaf { paragraph })
            }
            Some("merge") => {
                if paragraph.is_some() {
                    return Err(self.err("merge node carries `paragraph`"));
                }
                let proximity =
                    proximity.ok_or_else(|| self.err("merge node missing `proximity`"))?;
                let size = size.ok_or_else(|| self.err("merge node missing `size`"))?;
                let depth = depth.ok_or_else(|| self.err("merge node missing `depth`"))?;
                let (left, right) =
                    children.ok_or_else(|| self.err("merge node missing `children`"))?;
                let node = Dendrogram::merge(left, right, proximity);
                if node.size() != size {
                    return Err(self.err("size does not match children"));
                }
                if node.depth() != depth {
                    return Err(self.err("depth does not match children"));
                }
                Ok(node)
            }
            Some(other) => Err(self.err(format!("unknown node type `{other}`"))),
            None => Err(self.err("missing key `type`")),
        }
    }
}
