//! Shared domain types: byte spans, line indexes, source units and the
//! ingested codebase.
//!
//! All offsets are UTF-8 byte offsets into the owning file's text. Spans are
//! half-open `[start, end)`.

use std::fmt;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Half-open byte range `[start, end)` within one file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

impl Span {
    pub fn new(start: usize, end: usize) -> Self {
        debug_assert!(start <= end, "span start {start} > end {end}");
        Span { start, end }
    }

    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn contains(&self, offset: usize) -> bool {
        self.start <= offset && offset < self.end
    }

    pub fn contains_span(&self, other: Span) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    pub fn intersects(&self, other: Span) -> bool {
        self.start < other.end && other.start < self.end
    }

    pub fn cover(self, other: Span) -> Span {
        Span::new(self.start.min(other.start), self.end.max(other.end))
    }
}

/// Opaque per-codebase file identifier (index into the sorted unit list).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FileId(pub u32);

/// 1-based line and byte column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Position {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Start offset of every line. `\n` terminates a line (so `\r\n` does too);
/// a trailing newline records the start of the final empty line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LineIndex {
    line_starts: Vec<usize>,
    len: usize,
}

impl LineIndex {
    pub fn new(text: &str) -> Self {
        let mut line_starts = vec![0];
        line_starts.extend(
            text.bytes()
                .enumerate()
                .filter(|&(_, b)| b == b'\n')
                .map(|(i, _)| i + 1),
        );
        LineIndex {
            line_starts,
            len: text.len(),
        }
    }

    pub fn line_starts(&self) -> &[usize] {
        &self.line_starts
    }

    /// Number of entries, including the empty line after a trailing newline.
    pub fn len(&self) -> usize {
        self.line_starts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Byte length of the indexed text.
    pub fn text_len(&self) -> usize {
        self.len
    }

    /// Physical lines as a line counter sees them: an empty file has none and
    /// a trailing newline does not open a new line.
    pub fn physical_lines(&self) -> usize {
        if self.len == 0 {
            0
        } else if *self.line_starts.last().unwrap() == self.len {
            self.line_starts.len() - 1
        } else {
            self.line_starts.len()
        }
    }

    pub fn position_of(&self, offset: usize) -> Result<Position> {
        if offset > self.len {
            return Err(Error::OffsetOutOfRange {
                offset,
                len: self.len,
            });
        }
        let line = self.line_starts.partition_point(|&s| s <= offset);
        Ok(Position {
            line,
            column: offset - self.line_starts[line - 1] + 1,
        })
    }

    /// 1-based line containing `offset`; offsets past the end clamp to the
    /// last line.
    pub fn line_of(&self, offset: usize) -> usize {
        self.line_starts.partition_point(|&s| s <= offset.min(self.len))
    }

    /// Content span of a 1-based line, excluding its `\n` or `\r\n`.
    pub fn line_span(&self, line: usize, text: &str) -> Span {
        let start = self.line_starts[line - 1];
        let (mut end, terminated) = match self.line_starts.get(line) {
            Some(&next) => (next - 1, true),
            None => (self.len, false),
        };
        if terminated && end > start && text.as_bytes()[end - 1] == b'\r' {
            end -= 1;
        }
        Span::new(start, end)
    }

    /// Inverse of [`position_of`](Self::position_of).
    pub fn offset_of(&self, pos: Position) -> Option<usize> {
        let start = *self.line_starts.get(pos.line.checked_sub(1)?)?;
        let offset = start + pos.column.checked_sub(1)?;
        (offset <= self.len).then_some(offset)
    }
}

/// Decode `bytes` as UTF-8 and index its lines.
pub fn build_line_index(bytes: &[u8], path: &str) -> Result<(String, LineIndex)> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| Error::Decode {
            path: path.to_string(),
            valid_up_to: e.valid_up_to(),
        })?
        .to_string();
    let index = LineIndex::new(&text);
    Ok((text, index))
}

/// One parsed source file.
#[derive(Debug, Clone)]
pub struct SourceUnit {
    pub file_id: FileId,
    /// Project-relative path with `/` separators.
    pub path: String,
    pub text: String,
    pub line_index: LineIndex,
    /// Parent directory of `path`; `.` for files at the root.
    pub directory: String,
}

impl SourceUnit {
    pub fn slice(&self, span: Span) -> &str {
        &self.text[span.start..span.end]
    }

    pub fn position_of(&self, offset: usize) -> Result<Position> {
        self.line_index.position_of(offset)
    }
}

/// Parent directory of a `/`-separated relative path.
pub fn directory_of(path: &str) -> String {
    match path.rfind('/') {
        Some(i) => path[..i].to_string(),
        None => ".".to_string(),
    }
}

#[derive(Debug, Clone)]
pub struct Codebase {
    pub root: PathBuf,
    /// Sorted by path, byte-wise ascending.
    pub units: Vec<SourceUnit>,
}

const SKIPPED_DIRS: &[&str] = &["bin", "obj"];

impl Codebase {
    /// Recursively collect `.cs` files under `root`, skipping hidden
    /// directories and build output (`bin/`, `obj/`).
    pub fn ingest(root: impl AsRef<Path>) -> Result<Codebase> {
        let root = root.as_ref();
        if !root.is_dir() {
            return Err(Error::NotADirectory(root.to_path_buf()));
        }
        let walker = walkdir::WalkDir::new(root)
            .follow_links(false)
            .into_iter()
            .filter_entry(|e| {
                if e.depth() == 0 || !e.file_type().is_dir() {
                    return true;
                }
                let name = e.file_name().to_string_lossy();
                !name.starts_with('.') && !SKIPPED_DIRS.contains(&name.as_ref())
            });

        let mut files = Vec::new();
        for entry in walker {
            let entry = entry.map_err(|e| Error::Io {
                path: e.path().map(Path::to_path_buf).unwrap_or_default(),
                source: e.into(),
            })?;
            if !entry.file_type().is_file()
                || entry.path().extension().and_then(|x| x.to_str()) != Some("cs")
            {
                continue;
            }
            let rel = entry
                .path()
                .strip_prefix(root)
                .expect("walkdir yields paths under root");
            let rel = rel
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            let bytes = std::fs::read(entry.path()).map_err(|source| Error::Io {
                path: entry.path().to_path_buf(),
                source,
            })?;
            files.push((rel, bytes));
        }
        Codebase::from_files(root, files)
    }

    /// Build a codebase from in-memory `(relative path, bytes)` pairs.
    pub fn from_files<P, B>(root: impl Into<PathBuf>, files: impl IntoIterator<Item = (P, B)>) -> Result<Codebase>
    where
        P: Into<String>,
        B: AsRef<[u8]>,
    {
        let mut decoded = Vec::new();
        for (path, bytes) in files {
            let path = path.into();
            let (text, line_index) = build_line_index(bytes.as_ref(), &path)?;
            decoded.push((path, text, line_index));
        }
        decoded.sort_by(|a, b| a.0.as_bytes().cmp(b.0.as_bytes()));
        if let Some(w) = decoded.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(Error::DuplicatePath(w[0].0.clone()));
        }
        let units = decoded
            .into_iter()
            .enumerate()
            .map(|(i, (path, text, line_index))| SourceUnit {
                file_id: FileId(i as u32),
                directory: directory_of(&path),
                path,
                text,
                line_index,
            })
            .collect();
        Ok(Codebase {
            root: root.into(),
            units,
        })
    }

    pub fn unit(&self, id: FileId) -> &SourceUnit {
        &self.units[id.0 as usize]
    }

    pub fn unit_by_path(&self, path: &str) -> Option<&SourceUnit> {
        self.units
            .binary_search_by(|u| u.path.as_bytes().cmp(path.as_bytes()))
            .ok()
            .map(|i| &self.units[i])
    }

    /// Content digest over relative paths and bytes; independent of where the
    /// codebase lives on disk.
    pub fn content_hash(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        for unit in &self.units {
            hasher.update((unit.path.len() as u64).to_le_bytes());
            hasher.update(unit.path.as_bytes());
            hasher.update((unit.text.len() as u64).to_le_bytes());
            hasher.update(unit.text.as_bytes());
        }
        hex(&hasher.finalize())
    }
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Warning,
    Error,
}

/// A non-fatal finding from lexing, parsing or resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub file_id: FileId,
    pub span: Span,
    pub severity: Severity,
    pub message: String,
}

impl Diagnostic {
    pub fn warning(file_id: FileId, span: Span, message: impl Into<String>) -> Self {
        Diagnostic {
            file_id,
            span,
            severity: Severity::Warning,
            message: message.into(),
        }
    }

    pub fn render(&self, codebase: &Codebase) -> String {
        let unit = codebase.unit(self.file_id);
        let pos = unit
            .position_of(self.span.start)
            .map(|p| p.to_string())
            .unwrap_or_else(|_| "?".into());
        let sev = match self.severity {
            Severity::Warning => "warning",
            Severity::Error => "error",
        };
        format!("{}:{}: {}: {}", unit.path, pos, sev, self.message)
    }
}
