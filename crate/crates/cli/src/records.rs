//! Line-oriented record files.
//!
//! Every file is UTF-8 with one comma-separated record per line. Text after
//! `#` is a comment and blank lines are skipped.
//!
//! * points: `id,x,y` or `x,y` (the id defaults to the record's ordinal,
//!   counting from 0),
//! * segments: `id,x_lo,x_hi,y` or `x_lo,x_hi,y`,
//! * colorings: `id,...,color`, where any fields between the id and the
//!   color repeat the coordinates of the record with that id.

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bottomless::geometry::{HSegment, Point};
use bottomless::{Color, Rational};

use crate::error::{CliError, CliResult};
use crate::literal::{format_rational, parse_rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointRecord {
    pub id: String,
    pub x: Rational,
    pub y: Rational,
}

impl PointRecord {
    pub fn point(&self) -> Point {
        Point::new(self.x.clone(), self.y.clone())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentRecord {
    pub id: String,
    pub segment: HSegment,
}

struct Line {
    number: usize,
    fields: Vec<String>,
}

struct Reader {
    path: PathBuf,
    lines: Vec<Line>,
}

impl Reader {
    fn open(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let lines = text
            .lines()
            .enumerate()
            .filter_map(|(i, raw)| {
                let body = raw.split('#').next().unwrap_or("").trim();
                (!body.is_empty()).then(|| Line {
                    number: i + 1,
                    fields: body.split(',').map(|f| f.trim().to_string()).collect(),
                })
            })
            .collect();
        Ok(Self {
            path: path.to_path_buf(),
            lines,
        })
    }

    fn error(&self, line: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            path: self.path.clone(),
            line,
            message: message.into(),
        }
    }

    fn number(&self, line: &Line, field: &str) -> CliResult<Rational> {
        parse_rational(field).map_err(|m| self.error(line.number, m))
    }

    fn id(&self, line: &Line, ordinal: usize, explicit: bool, seen: &mut HashMap<String, usize>) -> CliResult<String> {
        let id = if explicit {
            line.fields[0].clone()
        } else {
            ordinal.to_string()
        };
        if id.is_empty() || id.contains(char::is_whitespace) {
            return Err(self.error(line.number, format!("bad id {id:?}")));
        }
        if let Some(first) = seen.insert(id.clone(), line.number) {
            return Err(self.error(line.number, format!("id {id} already used on line {first}")));
        }
        Ok(id)
    }
}

pub fn read_points(path: &Path) -> CliResult<Vec<PointRecord>> {
    let r = Reader::open(path)?;
    let mut seen = HashMap::new();
    let mut out = Vec::with_capacity(r.lines.len());
    for (ordinal, line) in r.lines.iter().enumerate() {
        let f = &line.fields;
        let explicit = match f.len() {
            3 => true,
            2 => false,
            n => return Err(r.error(line.number, format!("expected id,x,y or x,y, got {n} fields"))),
        };
        let id = r.id(line, ordinal, explicit, &mut seen)?;
        let off = usize::from(explicit);
        out.push(PointRecord {
            id,
            x: r.number(line, &f[off])?,
            y: r.number(line, &f[off + 1])?,
        });
    }
    Ok(out)
}

pub fn read_segments(path: &Path) -> CliResult<Vec<SegmentRecord>> {
    let r = Reader::open(path)?;
    let mut seen = HashMap::new();
    let mut out = Vec::with_capacity(r.lines.len());
    for (ordinal, line) in r.lines.iter().enumerate() {
        let f = &line.fields;
        let explicit = match f.len() {
            4 => true,
            3 => false,
            n => {
                return Err(r.error(
                    line.number,
                    format!("expected id,x_lo,x_hi,y or x_lo,x_hi,y, got {n} fields"),
                ))
            }
        };
        let id = r.id(line, ordinal, explicit, &mut seen)?;
        let off = usize::from(explicit);
        let (lo, hi, y) = (
            r.number(line, &f[off])?,
            r.number(line, &f[off + 1])?,
            r.number(line, &f[off + 2])?,
        );
        let segment = HSegment::new(lo, hi, y).ok_or_else(|| r.error(line.number, "x_lo exceeds x_hi"))?;
        out.push(SegmentRecord { id, segment });
    }
    Ok(out)
}

/// Reads a coloring for `ids`, whose records have coordinates `coords`.
/// Every id must be colored exactly once and nothing else may appear.
pub fn read_coloring(path: &Path, ids: &[String], coords: &[Vec<Rational>]) -> CliResult<Vec<Color>> {
    let r = Reader::open(path)?;
    let index: HashMap<&str, usize> = ids.iter().enumerate().map(|(i, id)| (id.as_str(), i)).collect();
    let mut out: Vec<Option<Color>> = vec![None; ids.len()];
    for line in &r.lines {
        let f = &line.fields;
        if f.len() < 2 {
            return Err(r.error(line.number, "expected id,...,color"));
        }
        let id = &f[0];
        let &i = index
            .get(id.as_str())
            .ok_or_else(|| r.error(line.number, format!("id {id} is not in the input")))?;
        let middle = &f[1..f.len() - 1];
        if !middle.is_empty() {
            if middle.len() != coords[i].len() {
                return Err(r.error(line.number, format!("expected {} coordinates", coords[i].len())));
            }
            for (field, want) in middle.iter().zip(&coords[i]) {
                if &r.number(line, field)? != want {
                    return Err(r.error(line.number, format!("coordinates of id {id} differ from the input")));
                }
            }
        }
        let color: u32 = f[f.len() - 1]
            .parse()
            .ok()
            .filter(|&c| c >= 1)
            .ok_or_else(|| r.error(line.number, format!("bad color {:?}", f[f.len() - 1])))?;
        if out[i].replace(Color::new(color)).is_some() {
            return Err(r.error(line.number, format!("id {id} colored twice")));
        }
    }
    out.iter()
        .zip(ids)
        .map(|(c, id)| c.ok_or_else(|| CliError::Usage(format!("{}: id {id} has no color", path.display()))))
        .collect()
}

/// Destination for command output: a file, or standard output.
pub struct Output {
    path: Option<PathBuf>,
    buffer: Vec<u8>,
}

impl Output {
    pub fn new(path: Option<PathBuf>) -> Self {
        Self {
            path,
            buffer: Vec::new(),
        }
    }

    pub fn line(&mut self, text: impl AsRef<str>) {
        self.buffer.extend_from_slice(text.as_ref().as_bytes());
        self.buffer.push(b'\n');
    }

    pub fn raw(&mut self, text: &str) {
        self.buffer.extend_from_slice(text.as_bytes());
    }

    pub fn finish(self) -> CliResult<()> {
        match self.path {
            Some(path) => fs::write(&path, &self.buffer).map_err(|e| CliError::io(path, e)),
            None => std::io::stdout()
                .write_all(&self.buffer)
                .map_err(|e| CliError::io("<stdout>", e)),
        }
    }
}

pub fn point_line(id: &str, p: &Point) -> String {
    format!("{id},{},{}", format_rational(&p.x), format_rational(&p.y))
}

pub fn segment_line(id: &str, s: &HSegment) -> String {
    format!(
        "{id},{},{},{}",
        format_rational(&s.x_lo),
        format_rational(&s.x_hi),
        format_rational(&s.y)
    )
}
