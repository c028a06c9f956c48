//! Parsing and writing the extended-PD text format.

use std::fmt;

use rcc_core::diagram::{Corner, CrossingSite, Diagram, DiagramError, OverPair, VertexSite};
use rcc_core::label::RegionLabel;
use rcc_core::region::RegionTable;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PdError {
    Syntax { line: usize, col: usize, message: String },
    Structure(DiagramError),
    /// Free loops have no slot representation in the text format.
    Unrepresentable,
}

impl fmt::Display for PdError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PdError::Syntax { line, col, message } => {
                write!(f, "line {line}, col {col}: {message}")
            }
            PdError::Structure(e) => e.fmt(f),
            PdError::Unrepresentable => {
                f.write_str("diagram contains a free loop, which the text format cannot express")
            }
        }
    }
}

impl std::error::Error for PdError {}

impl From<DiagramError> for PdError {
    fn from(e: DiagramError) -> Self {
        PdError::Structure(e)
    }
}

struct Cursor<'a> {
    text: &'a str,
    line: usize,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str, line: usize) -> Self {
        Cursor { text, line, pos: 0 }
    }

    fn error(&self, message: impl Into<String>) -> PdError {
        PdError::Syntax { line: self.line, col: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with([' ', '\t']) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> Result<(), PdError> {
        self.skip_ws();
        if self.text[self.pos..].starts_with(token) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn label(&mut self) -> Result<&'a str, PdError> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_' || *b == b'-')
            .count();
        if len == 0 {
            return Err(self.error("expected a label"));
        }
        self.pos += len;
        Ok(&self.text[start..start + len])
    }

    fn number(&mut self) -> Result<usize, PdError> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..].bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return Err(self.error("expected a number"));
        }
        self.pos += len;
        Ok(self.text[start..start + len].parse().expect("digits"))
    }

    fn finish(&mut self) -> Result<(), PdError> {
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.error("trailing input"));
        }
        Ok(())
    }
}

/// A `site.corner` reference with 1-based corner index, resolved after all
/// sites are known.
struct CornerRef {
    site: String,
    corner: usize,
    line: usize,
}

fn parse_corner_ref(cur: &mut Cursor) -> Result<CornerRef, PdError> {
    let site = cur.label()?.to_string();
    cur.eat(".")?;
    let corner = cur.number()?;
    Ok(CornerRef { site, corner, line: cur.line })
}

/// Parse extended-PD source into a diagram.
pub fn parse_diagram(source: &str) -> Result<Diagram, PdError> {
    let mut crossings: Vec<CrossingSite> = Vec::new();
    let mut vertices: Vec<VertexSite> = Vec::new();
    let mut outer: Option<CornerRef> = None;
    let mut pins: Vec<(CornerRef, RegionLabel)> = Vec::new();

    for (n, raw) in source.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim_end();
        if line.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(line, n + 1);
        cur.skip_ws();
        if line.trim_start().starts_with("X ") || line.trim_start() == "X" {
            cur.eat("X")?;
            let label = cur.label()?.to_string();
            cur.eat("=")?;
            cur.eat("(")?;
            let mut arcs = Vec::with_capacity(4);
            for i in 0..4 {
                if i > 0 {
                    cur.eat(",")?;
                }
                arcs.push(cur.label()?.to_string());
            }
            cur.eat(")")?;
            cur.eat("over")?;
            cur.eat("=")?;
            cur.eat("(")?;
            let a = cur.number()?;
            cur.eat(",")?;
            let b = cur.number()?;
            cur.eat(")")?;
            cur.finish()?;
            let over = match (a, b) {
                (1, 3) => OverPair::Slots13,
                (2, 4) => OverPair::Slots24,
                _ => return Err(cur.error("over pair must be (1,3) or (2,4)")),
            };
            crossings.push(CrossingSite {
                label: label.into(),
                arcs: [
                    arcs[0].as_str().into(),
                    arcs[1].as_str().into(),
                    arcs[2].as_str().into(),
                    arcs[3].as_str().into(),
                ],
                over,
            });
        } else if line.trim_start().starts_with("V ") || line.trim_start() == "V" {
            cur.eat("V")?;
            let label = cur.label()?.to_string();
            cur.eat("=")?;
            cur.eat("(")?;
            let mut arcs = Vec::with_capacity(3);
            for i in 0..3 {
                if i > 0 {
                    cur.eat(",")?;
                }
                arcs.push(cur.label()?.to_string());
            }
            cur.eat(")")?;
            cur.finish()?;
            vertices.push(VertexSite {
                label: label.into(),
                arcs: [
                    arcs[0].as_str().into(),
                    arcs[1].as_str().into(),
                    arcs[2].as_str().into(),
                ],
            });
        } else if line.trim_start().starts_with("outer") {
            cur.eat("outer")?;
            cur.eat("=")?;
            let r = parse_corner_ref(&mut cur)?;
            cur.finish()?;
            if outer.is_some() {
                return Err(cur.error("duplicate outer designation"));
            }
            outer = Some(r);
        } else if line.trim_start().starts_with("region") {
            cur.eat("region")?;
            let label = cur.label()?.to_string();
            cur.eat("=")?;
            let r = parse_corner_ref(&mut cur)?;
            cur.finish()?;
            pins.push((r, RegionLabel::new(label)));
        } else {
            return Err(cur.error("expected `X`, `V`, `outer` or `region`"));
        }
    }

    // Resolve corner references against the declared sites.
    let skeleton = Diagram::new(crossings.clone(), vertices.clone())?;
    let resolve = |r: &CornerRef| -> Result<Corner, PdError> {
        let site = skeleton.site_by_name(&r.site).ok_or(PdError::Syntax {
            line: r.line,
            col: 1,
            message: format!("unknown site `{}`", r.site),
        })?;
        let degree = skeleton.degree(site);
        if r.corner == 0 || r.corner > degree {
            return Err(PdError::Syntax {
                line: r.line,
                col: 1,
                message: format!("corner index {} out of range 1..={degree}", r.corner),
            });
        }
        Ok(Corner { site, index: (r.corner - 1) as u8 })
    };
    let outer = outer.as_ref().map(&resolve).transpose()?;
    let pins = pins
        .iter()
        .map(|(r, l)| Ok((resolve(r)?, l.clone())))
        .collect::<Result<Vec<_>, PdError>>()?;
    Ok(Diagram::with_annotations(crossings, vertices, outer, pins)?)
}

/// Write a diagram back to extended-PD text.
///
/// Every region is pinned to its first corner so that parsing the output
/// reproduces the same labels; the result is canonical for a given diagram.
pub fn write_diagram(d: &Diagram) -> Result<String, PdError> {
    if !d.free_loops().is_empty() {
        return Err(PdError::Unrepresentable);
    }
    use std::fmt::Write;
    let mut out = String::new();
    for c in d.crossings() {
        let _ = writeln!(
            out,
            "X {} = ({},{},{},{}) over={}",
            c.label, c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3], c.over
        );
    }
    for v in d.vertices() {
        let _ = writeln!(out, "V {} = ({},{},{})", v.label, v.arcs[0], v.arcs[1], v.arcs[2]);
    }
    if let Some(c) = d.outer_corner() {
        let _ = writeln!(out, "outer = {}.{}", d.site_name(c.site), c.index + 1);
    }
    match RegionTable::build(d) {
        Ok(table) => {
            for &r in &table.label_order() {
                let region = &table.regions()[r];
                if let Some(first) = region.corners.first() {
                    let _ = writeln!(
                        out,
                        "region {} = {}.{}",
                        region.label,
                        d.site_name(first.site),
                        first.index + 1
                    );
                }
            }
        }
        Err(_) => {
            for (corner, label) in d.region_pins() {
                let _ = writeln!(
                    out,
                    "region {} = {}.{}",
                    label,
                    d.site_name(corner.site),
                    corner.index + 1
                );
            }
        }
    }
    Ok(out)
}
