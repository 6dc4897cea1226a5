//! Turns each class into four wall pages of syntax-coloured text.
//!
//! Wall 0 lists the method signatures. Walls 1-3 carry the class's source
//! lines split as evenly as possible, front-loaded (100 lines give 34/33/33).
//! Identifiers with a resolved reference carry a [`NavigationTarget`]
//! pointing at the wall line of the definition.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::analysis::Analysis;
use crate::lexer::{tokenize_str, Token, TokenKind};
use crate::model::{FileId, SourceUnit, Span};
use crate::parser::{ClassDecl, ClassId};
use crate::resolver::DefId;

pub const WALLS_PER_ROOM: usize = 4;
pub const VIEWPORT_LINES: usize = 40;
pub const WRAP_COLUMNS: usize = 120;
pub const WRAP_MARKER: &str = "↪";
pub const TAB_WIDTH: usize = 4;
pub const EMPTY_PLACEHOLDER: &str = "« empty »";
pub const NO_METHODS_PLACEHOLDER: &str = "« no methods »";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ColorRole {
    Keyword,
    Comment,
    String,
    Default,
    Background,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Palette {
    pub background: &'static str,
    pub default: &'static str,
    pub keyword: &'static str,
    pub comment: &'static str,
    pub string: &'static str,
}

pub const PALETTE: Palette = Palette {
    background: "#1E1E1E",
    default: "#D4D4D4",
    keyword: "#569CD6",
    comment: "#6A9955",
    string: "#CE9178",
};

impl Palette {
    pub const ROLES: [ColorRole; 5] = [
        ColorRole::Keyword,
        ColorRole::Comment,
        ColorRole::String,
        ColorRole::Default,
        ColorRole::Background,
    ];

    pub fn color(&self, role: ColorRole) -> &'static str {
        match role {
            ColorRole::Keyword => self.keyword,
            ColorRole::Comment => self.comment,
            ColorRole::String => self.string,
            ColorRole::Default => self.default,
            ColorRole::Background => self.background,
        }
    }
}

pub fn role_of(kind: TokenKind) -> ColorRole {
    match kind {
        TokenKind::Keyword => ColorRole::Keyword,
        TokenKind::Comment => ColorRole::Comment,
        TokenKind::StringLiteral | TokenKind::CharLiteral => ColorRole::String,
        _ => ColorRole::Default,
    }
}

/// Where clicking a reference takes the visitor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NavigationTarget {
    pub class_id: ClassId,
    pub wall_index: usize,
    /// Index into the wall's `lines`.
    pub line: usize,
    /// First visible row when the wall is opened here.
    pub scroll_offset: usize,
    pub def_id: DefId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StyledRun {
    pub text: String,
    pub role: ColorRole,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<NavigationTarget>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SourceLine {
    pub path: String,
    /// 1-based physical line.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallLine {
    /// Absent for placeholders.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceLine>,
    pub runs: Vec<StyledRun>,
    /// Display rows after soft wrapping.
    pub rows: usize,
}

impl WallLine {
    pub fn text(&self) -> String {
        self.runs.iter().map(|r| r.text.as_str()).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallPage {
    pub class_id: ClassId,
    pub wall_index: usize,
    /// Class-relative 1-based line ordinals shown here, inclusive. Absent on
    /// the overview wall and on empty segments.
    pub line_range: Option<[usize; 2]>,
    pub lines: Vec<WallLine>,
    pub viewport_lines: usize,
    pub scroll_max: usize,
}

/// Lines per code wall: ceil(n/3), then ceil of half the rest, then the rest.
pub fn split_counts(n: usize) -> [usize; 3] {
    let a = n.div_ceil(3);
    let b = (n - a).div_ceil(2);
    [a, b, n - a - b]
}

/// Physical lines of every part of `class`, in part order.
pub fn class_lines(analysis: &Analysis, class: &ClassDecl) -> Vec<(FileId, usize)> {
    let mut out = Vec::new();
    for part in &class.parts {
        let idx = &analysis.codebase.unit(part.file_id).line_index;
        let first = idx.line_of(part.span.start);
        let last = idx.line_of(part.span.end.saturating_sub(1).max(part.span.start));
        out.extend((first..=last).map(|l| (part.file_id, l)));
    }
    out
}

/// Display rows of a line of `chars` characters.
pub fn rows_for(chars: usize) -> usize {
    chars.div_ceil(WRAP_COLUMNS).max(1)
}

pub fn expand_tabs(s: &str) -> String {
    s.replace('\t', &" ".repeat(TAB_WIDTH))
}

/// Split an expanded line into display rows; continuation rows start with
/// the wrap marker.
pub fn soft_wrap(line: &str) -> Vec<String> {
    let chars: Vec<char> = line.chars().collect();
    if chars.is_empty() {
        return vec![String::new()];
    }
    chars
        .chunks(WRAP_COLUMNS)
        .enumerate()
        .map(|(i, c)| {
            let body: String = c.iter().collect();
            if i == 0 {
                body
            } else {
                format!("{WRAP_MARKER}{body}")
            }
        })
        .collect()
}

fn push_run(runs: &mut Vec<StyledRun>, text: &str, role: ColorRole, target: Option<NavigationTarget>) {
    if text.is_empty() {
        return;
    }
    let text = expand_tabs(text);
    if target.is_none() {
        if let Some(last) = runs.last_mut() {
            if last.target.is_none() && last.role == role {
                last.text.push_str(&text);
                return;
            }
        }
    }
    runs.push(StyledRun { text, role, target });
}

/// Styled runs of one physical line. `link` gives the target for the token
/// starting at an offset, if any.
pub fn render_runs(
    unit: &SourceUnit,
    tokens: &[Token],
    line: usize,
    link: &mut dyn FnMut(&Token) -> Option<NavigationTarget>,
) -> Vec<StyledRun> {
    let span = unit.line_index.line_span(line, &unit.text);
    let from = tokens.partition_point(|t| t.span.end <= span.start);
    let mut runs = Vec::new();
    for tok in tokens[from..].iter().take_while(|t| t.span.start < span.end) {
        let part = Span::new(tok.span.start.max(span.start), tok.span.end.min(span.end));
        let target = if tok.kind == TokenKind::Identifier { link(tok) } else { None };
        push_run(&mut runs, unit.slice(part), role_of(tok.kind), target);
    }
    runs
}

fn placeholder(text: &str) -> WallLine {
    WallLine {
        source: None,
        runs: vec![StyledRun {
            text: text.to_string(),
            role: ColorRole::Comment,
            target: None,
        }],
        rows: 1,
    }
}

fn page(class_id: &ClassId, wall_index: usize, line_range: Option<[usize; 2]>, lines: Vec<WallLine>) -> WallPage {
    let total: usize = lines.iter().map(|l| l.rows).sum();
    WallPage {
        class_id: class_id.clone(),
        wall_index,
        line_range,
        lines,
        viewport_lines: VIEWPORT_LINES,
        scroll_max: total.saturating_sub(VIEWPORT_LINES),
    }
}

/// Where each (class, file, line) sits: wall, index into the wall's lines,
/// and the row offset of that line.
struct Placement {
    walls: HashMap<(usize, FileId, usize), (usize, usize, usize)>,
    scroll_max: HashMap<(usize, usize), usize>,
}

fn place(analysis: &Analysis, all_lines: &[Vec<(FileId, usize)>]) -> Placement {
    let mut p = Placement {
        walls: HashMap::new(),
        scroll_max: HashMap::new(),
    };
    for (ci, lines) in all_lines.iter().enumerate() {
        let counts = split_counts(lines.len());
        let mut start = 0;
        for (w, &count) in counts.iter().enumerate() {
            let mut row = 0;
            for (i, &(f, l)) in lines[start..start + count].iter().enumerate() {
                p.walls.entry((ci, f, l)).or_insert((w + 1, i, row));
                row += rows_for(line_chars(analysis.codebase.unit(f), l));
            }
            p.scroll_max.insert((ci, w + 1), row.saturating_sub(VIEWPORT_LINES));
            start += count;
        }
    }
    p
}

fn line_chars(unit: &SourceUnit, line: usize) -> usize {
    let text = unit.slice(unit.line_index.line_span(line, &unit.text));
    text.chars().map(|c| if c == '\t' { TAB_WIDTH } else { 1 }).sum()
}

struct Targets<'a> {
    analysis: &'a Analysis,
    placement: Placement,
    class_index: HashMap<&'a ClassId, usize>,
    cache: HashMap<DefId, Option<NavigationTarget>>,
}

impl Targets<'_> {
    fn of(&mut self, def: DefId) -> Option<NavigationTarget> {
        if let Some(t) = self.cache.get(&def) {
            return t.clone();
        }
        let site = self.analysis.symbols.definition(def);
        let ci = self.class_index[&site.class_id];
        let line = self.analysis.codebase.unit(site.file_id).line_index.line_of(site.name_span.start);
        let target = self.placement.walls.get(&(ci, site.file_id, line)).map(|&(wall, idx, row)| NavigationTarget {
            class_id: site.class_id.clone(),
            wall_index: wall,
            line: idx,
            scroll_offset: row.min(self.placement.scroll_max[&(ci, wall)]),
            def_id: def,
        });
        self.cache.insert(def, target.clone());
        target
    }
}

/// Four wall pages for every class, keyed by class id.
pub fn paginate(analysis: &Analysis) -> BTreeMap<ClassId, Vec<WallPage>> {
    let all_lines: Vec<_> = analysis.classes.iter().map(|c| class_lines(analysis, c)).collect();
    let links: HashMap<(FileId, usize), DefId> = analysis
        .references
        .iter()
        .map(|r| ((r.file_id, r.ref_span.start), r.target))
        .collect();
    let mut targets = Targets {
        analysis,
        placement: place(analysis, &all_lines),
        class_index: analysis.classes.iter().enumerate().map(|(i, c)| (&c.class_id, i)).collect(),
        cache: HashMap::new(),
    };

    let mut out = BTreeMap::new();
    for (ci, class) in analysis.classes.iter().enumerate() {
        let mut walls = Vec::with_capacity(WALLS_PER_ROOM);
        walls.push(method_overview(analysis, class, &mut targets));

        let lines = &all_lines[ci];
        let mut start = 0;
        for (w, count) in split_counts(lines.len()).into_iter().enumerate() {
            let segment = &lines[start..start + count];
            let wall_lines = if segment.is_empty() {
                vec![placeholder(EMPTY_PLACEHOLDER)]
            } else {
                segment
                    .iter()
                    .map(|&(f, l)| {
                        let unit = analysis.codebase.unit(f);
                        let mut link = |tok: &Token| links.get(&(f, tok.span.start)).and_then(|&d| targets.of(d));
                        let runs = render_runs(unit, &analysis.tokens[f.0 as usize], l, &mut link);
                        WallLine {
                            source: Some(SourceLine {
                                path: unit.path.clone(),
                                line: l,
                            }),
                            runs,
                            rows: rows_for(line_chars(unit, l)),
                        }
                    })
                    .collect()
            };
            let range = (!segment.is_empty()).then(|| [start + 1, start + count]);
            walls.push(page(&class.class_id, w + 1, range, wall_lines));
            start += count;
        }
        out.insert(class.class_id.clone(), walls);
    }
    out
}

/// Wall 0: a `kind Name` header, then one line per method signature in
/// declaration order. The method name links to the method's definition.
fn method_overview(analysis: &Analysis, class: &ClassDecl, targets: &mut Targets) -> WallPage {
    if class.methods.is_empty() {
        return page(&class.class_id, 0, None, vec![placeholder(NO_METHODS_PLACEHOLDER)]);
    }
    let mut header = Vec::new();
    push_run(&mut header, class.kind.keyword(), ColorRole::Keyword, None);
    push_run(&mut header, " ", ColorRole::Default, None);
    push_run(&mut header, &class.qualified_name, ColorRole::Default, None);
    let header = WallLine {
        source: None,
        rows: rows_for(header.iter().map(|r| r.text.chars().count()).sum()),
        runs: header,
    };
    let methods = class
        .methods
        .iter()
        .map(|m| {
            let def = analysis.symbols.definition_at(m.file_id, m.name_span.start);
            let unit = analysis.codebase.unit(m.file_id);
            let sig = &m.signature_text;
            let lexed = tokenize_str(sig, m.file_id);
            let mut runs = Vec::new();
            // the whole name is one linked run, so `operator +` and `~T` link too
            let name = name_in_signature(sig, &m.name);
            for tok in &lexed.tokens {
                match name {
                    Some(n) if tok.span.start == n.start => {
                        push_run(&mut runs, &sig[n.start..n.end], ColorRole::Default, def.and_then(|d| targets.of(d)));
                    }
                    Some(n) if n.contains(tok.span.start) => {}
                    _ => push_run(&mut runs, tok.text(sig), role_of(tok.kind), None),
                }
            }
            WallLine {
                source: Some(SourceLine {
                    path: unit.path.clone(),
                    line: unit.line_index.line_of(m.name_span.start),
                }),
                rows: rows_for(sig.chars().count()),
                runs,
            }
        })
        .collect::<Vec<_>>();
    page(&class.class_id, 0, None, std::iter::once(header).chain(methods).collect())
}

/// Where the method name sits in its rendered signature: the first
/// occurrence that starts a word and is followed by `(` or `<`.
fn name_in_signature(sig: &str, name: &str) -> Option<Span> {
    sig.match_indices(name).map(|(i, _)| i).find_map(|i| {
        let before = sig[..i].chars().next_back();
        let after = &sig[i + name.len()..];
        let word_start = before.is_none_or(|c| !(c.is_alphanumeric() || c == '_'));
        (word_start && (after.starts_with('(') || after.starts_with('<'))).then(|| Span::new(i, i + name.len()))
    })
}
