//! Line counting with `cloc`-style semantics and the codebase summary.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::lexer::{Token, TokenKind};
use crate::model::{Codebase, SourceUnit, Span};
use crate::parser::{ClassDecl, ClassId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LineClass {
    Code,
    Comment,
    Blank,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineCounts {
    pub code: usize,
    pub comment: usize,
    pub blank: usize,
}

impl LineCounts {
    pub fn total(&self) -> usize {
        self.code + self.comment + self.blank
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodebaseSummary {
    pub num_classes: usize,
    pub total_loc: usize,
    pub largest_class_loc: usize,
    pub per_class_loc: BTreeMap<ClassId, usize>,
}

/// Classify every physical line of `unit`. Whitespace-only lines are blank;
/// lines whose visible characters all sit in comments are comment lines;
/// everything else is code.
pub fn classify_lines(unit: &SourceUnit, tokens: &[Token]) -> Vec<LineClass> {
    let index = &unit.line_index;
    let mut out = Vec::with_capacity(index.physical_lines());
    let mut t = 0;
    for line in 1..=index.physical_lines() {
        let span = index.line_span(line, &unit.text);
        let content = unit.slice(span);
        if content.trim().is_empty() {
            out.push(LineClass::Blank);
            continue;
        }
        while t < tokens.len() && tokens[t].span.end <= span.start {
            t += 1;
        }
        let mut class = LineClass::Comment;
        for tok in tokens[t..].iter().take_while(|tok| tok.span.start < span.end) {
            if matches!(tok.kind, TokenKind::Whitespace | TokenKind::Comment) {
                continue;
            }
            let part = Span::new(tok.span.start.max(span.start), tok.span.end.min(span.end));
            if !unit.slice(part).trim().is_empty() {
                class = LineClass::Code;
                break;
            }
        }
        out.push(class);
    }
    out
}

pub fn tally(lines: &[LineClass]) -> LineCounts {
    let mut counts = LineCounts::default();
    for l in lines {
        match l {
            LineClass::Code => counts.code += 1,
            LineClass::Comment => counts.comment += 1,
            LineClass::Blank => counts.blank += 1,
        }
    }
    counts
}

pub fn count_lines(unit: &SourceUnit, tokens: &[Token]) -> LineCounts {
    tally(&classify_lines(unit, tokens))
}

/// Code lines of `class`: code lines of its files that any part's span
/// touches.
pub fn class_loc(codebase: &Codebase, class: &ClassDecl, per_file: &[Vec<LineClass>]) -> usize {
    class
        .parts
        .iter()
        .map(|part| {
            let unit = codebase.unit(part.file_id);
            let lines = &per_file[part.file_id.0 as usize];
            let first = unit.line_index.line_of(part.span.start);
            let last = unit.line_index.line_of(part.span.end.saturating_sub(1).max(part.span.start));
            lines[first - 1..last.min(lines.len())]
                .iter()
                .filter(|&&c| c == LineClass::Code)
                .count()
        })
        .sum()
}

/// `per_file` is indexed by file id.
pub fn summarize(codebase: &Codebase, classes: &[ClassDecl], per_file: &[Vec<LineClass>]) -> CodebaseSummary {
    let total_loc = per_file.iter().map(|lines| tally(lines).code).sum();
    let per_class_loc: BTreeMap<ClassId, usize> = classes
        .iter()
        .map(|c| (c.class_id.clone(), class_loc(codebase, c, per_file)))
        .collect();
    CodebaseSummary {
        num_classes: classes.len(),
        total_loc,
        largest_class_loc: per_class_loc.values().copied().max().unwrap_or(0),
        per_class_loc,
    }
}

pub const SUMMARY_HEADER: &str = "Codebase  No.Classes  LoC  LoC(largest)";

pub fn summary_table(name: &str, summary: &CodebaseSummary) -> String {
    format!(
        "{SUMMARY_HEADER}\n{name}  {}  {}  {}\n",
        summary.num_classes, summary.total_loc, summary.largest_class_loc
    )
}
