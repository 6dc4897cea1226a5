//! Shared helpers for integration tests: fixture paths, the manifest reader
//! and a few brute-force oracles.
#![allow(dead_code)]

pub mod http;

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use codepark::analysis::Analysis;
use codepark::model::{Codebase, FileId};

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures")
}

pub fn fixture(name: &str) -> PathBuf {
    fixtures_dir().join(name)
}

/// Fixture projects that ship with a manifest.
pub const MANIFESTED: &[&str] = &["lm", "mg", "edge"];

pub fn analyse(name: &str) -> Analysis {
    Analysis::run(Codebase::ingest(fixture(name)).expect("fixture ingests"))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Pos {
    pub path: String,
    pub line: usize,
    /// 1-based, counted in characters.
    pub col: usize,
}

impl Pos {
    fn parse(s: &str) -> Pos {
        let mut it = s.rsplitn(3, ':');
        let col = it.next().unwrap().parse().expect("column");
        let line = it.next().unwrap().parse().expect("line");
        let path = it.next().expect("path").to_string();
        Pos { path, line, col }
    }

    pub fn offset(&self, codebase: &Codebase) -> (FileId, usize) {
        let unit = codebase
            .unit_by_path(&self.path)
            .unwrap_or_else(|| panic!("no file {}", self.path));
        let start = unit.line_index.line_starts()[self.line - 1];
        let rest = &unit.text[start..];
        let skip: usize = rest.chars().take(self.col - 1).map(char::len_utf8).sum();
        (unit.file_id, start + skip)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.path, self.line, self.col)
    }
}

#[derive(Debug, Clone)]
pub struct ClassLine {
    pub qualified_name: String,
    pub kind: String,
    pub pos: Pos,
}

#[derive(Debug, Clone)]
pub struct MemberLine {
    pub is_property: bool,
    pub class: String,
    pub name: String,
    pub pos: Pos,
}

#[derive(Debug, Clone)]
pub struct MethodLine {
    pub class: String,
    pub pos: Pos,
    pub signature: String,
}

#[derive(Debug, Clone, Default)]
pub struct Manifest {
    pub summary: (usize, usize, usize),
    pub defs: usize,
    pub classes: Vec<ClassLine>,
    pub loc: BTreeMap<String, usize>,
    pub fields: Vec<MemberLine>,
    pub methods: Vec<MethodLine>,
    pub refs: Vec<(Pos, Pos)>,
    pub unresolved: Vec<Pos>,
}

pub fn manifest(name: &str) -> Manifest {
    let path = fixtures_dir().join(format!("{name}.manifest"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse_manifest(&text)
}

pub fn parse_manifest(text: &str) -> Manifest {
    let mut m = Manifest::default();
    for (n, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (tag, rest) = line.split_once(' ').unwrap_or((line, ""));
        let w: Vec<&str> = rest.split(' ').collect();
        match tag {
            "summary" => {
                m.summary = (w[0].parse().unwrap(), w[1].parse().unwrap(), w[2].parse().unwrap());
            }
            "defs" => m.defs = w[0].parse().unwrap(),
            "class" => m.classes.push(ClassLine {
                qualified_name: w[0].into(),
                kind: w[1].into(),
                pos: Pos::parse(w[2]),
            }),
            "loc" => {
                m.loc.insert(w[0].into(), w[1].parse().unwrap());
            }
            "field" | "property" => m.fields.push(MemberLine {
                is_property: tag == "property",
                class: w[0].into(),
                name: w[1].into(),
                pos: Pos::parse(w[2]),
            }),
            "method" => {
                let (class, rest) = rest.split_once(' ').unwrap();
                let (pos, signature) = rest.split_once(' ').unwrap();
                m.methods.push(MethodLine {
                    class: class.into(),
                    pos: Pos::parse(pos),
                    signature: signature.into(),
                });
            }
            "ref" => {
                assert_eq!(w.len(), 3, "line {}: {line}", n + 1);
                assert_eq!(w[1], "->", "line {}: {line}", n + 1);
                m.refs.push((Pos::parse(w[0]), Pos::parse(w[2])));
            }
            "unresolved" => m.unresolved.push(Pos::parse(w[0])),
            other => panic!("line {}: unknown manifest entry {other:?}", n + 1),
        }
    }
    m
}

/// Per-line classification written without the lexer: a small state
/// machine over characters that tracks strings, chars and comments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleLine {
    Blank,
    Comment,
    Code,
}

pub fn oracle_classify(text: &str) -> Vec<OracleLine> {
    #[derive(Clone, Copy, PartialEq)]
    enum St {
        Normal,
        Block,
        Str,
        Verbatim,
    }
    let mut out = Vec::new();
    if text.is_empty() {
        return out;
    }
    let mut st = St::Normal;
    let mut lines: Vec<&str> = text.split('\n').collect();
    if text.ends_with('\n') {
        lines.pop();
    }
    for raw in lines {
        let line = raw.strip_suffix('\r').unwrap_or(raw);
        let c: Vec<char> = line.chars().collect();
        let mut code = false;
        let mut comment = false;
        if line.trim().is_empty() {
            out.push(OracleLine::Blank);
            continue;
        }
        // a line that starts inside a string counts as code
        if matches!(st, St::Str | St::Verbatim) {
            code = true;
        }
        if st == St::Block {
            comment = true;
        }
        if st == St::Normal && line.trim_start().starts_with('#') {
            out.push(OracleLine::Comment);
            continue;
        }
        let mut i = 0;
        while i < c.len() {
            match st {
                St::Block => {
                    if c[i] == '*' && c.get(i + 1) == Some(&'/') {
                        st = St::Normal;
                        i += 2;
                    } else {
                        i += 1;
                    }
                }
                St::Str => {
                    if c[i] == '\\' {
                        i += 2;
                    } else {
                        if c[i] == '"' {
                            st = St::Normal;
                        }
                        i += 1;
                    }
                }
                St::Verbatim => {
                    if c[i] == '"' && c.get(i + 1) == Some(&'"') {
                        i += 2;
                    } else {
                        if c[i] == '"' {
                            st = St::Normal;
                        }
                        i += 1;
                    }
                }
                St::Normal => {
                    let ch = c[i];
                    if ch.is_whitespace() {
                        i += 1;
                    } else if ch == '/' && c.get(i + 1) == Some(&'/') {
                        comment = true;
                        break;
                    } else if ch == '/' && c.get(i + 1) == Some(&'*') {
                        comment = true;
                        st = St::Block;
                        i += 2;
                    } else if ch == '"' {
                        code = true;
                        let at = |k: usize| i >= k && c[i - k] == '@';
                        let verbatim = at(1) || (at(2) && c[i - 1] == '$');
                        st = if verbatim { St::Verbatim } else { St::Str };
                        i += 1;
                    } else if ch == '\'' {
                        code = true;
                        // char literal: skip an escaped or plain char and the quote
                        i += 1;
                        if c.get(i) == Some(&'\\') {
                            i += 2;
                        } else {
                            i += 1;
                        }
                        while i < c.len() && c[i] != '\'' {
                            i += 1;
                        }
                        i += 1;
                    } else {
                        code = true;
                        i += 1;
                    }
                }
            }
        }
        out.push(if code {
            OracleLine::Code
        } else if comment {
            OracleLine::Comment
        } else {
            OracleLine::Blank
        });
    }
    out
}

/// Every `.cs` file under the fixture directory, as (relative path, bytes).
pub fn corpus_files() -> Vec<(String, Vec<u8>)> {
    let mut out = Vec::new();
    let root = fixtures_dir();
    let mut stack = vec![root.clone()];
    while let Some(dir) = stack.pop() {
        for entry in std::fs::read_dir(&dir).unwrap() {
            let p = entry.unwrap().path();
            if p.is_dir() {
                stack.push(p);
            } else if p.extension().is_some_and(|e| e == "cs") {
                let rel = p.strip_prefix(&root).unwrap().to_string_lossy().replace('\\', "/");
                out.push((rel, std::fs::read(&p).unwrap()));
            }
        }
    }
    out.sort();
    out
}

/// Pieces of C#-like text, including malformed ones, for fuzzing the lexer.
pub const FRAGMENTS: &[&str] = &[
    "class", "Foo", "_bar9", "@event", "var", " ", "  ", "\t", "\n", "\r\n", "\r", "{", "}", "(", ")",
    ";", ".", "?.", "=>", "<<=", ">>", "&&", "!", "\"str\"", "\"unterminated", "\"esc\\\"aped\"",
    "@\"verb \"\" atim\"", "$\"{x} and {{y}}\"", "$@\"multi\nline\"", "'c'", "'\\''", "'", "//", "// line\n",
    "/* block */", "/* open", "*/", "#region x\n", "#", "0x1F", "1.5e-3", "42u", ".5", "é", "漢字", "🙂", "\\",
    "`", "\u{0}", "~", "::", "<T>", "[]",
];

pub fn fuzz_input(rng: &mut impl rand::Rng) -> String {
    let n = rng.gen_range(0..80);
    let mut s = String::new();
    for _ in 0..n {
        if rng.gen_bool(0.15) {
            // an arbitrary scalar value
            let c = loop {
                if let Some(c) = char::from_u32(rng.gen_range(0..0x11000)) {
                    break c;
                }
            };
            s.push(c);
        } else {
            s.push_str(FRAGMENTS[rng.gen_range(0..FRAGMENTS.len())]);
        }
    }
    s
}

/// A synthetic codebase for layout checks: `n` classes spread over a few
/// directories with random sizes.
pub fn random_rooms(rng: &mut impl rand::Rng, n: usize) -> Vec<codepark::layout::RoomInput> {
    use codepark::parser::ClassId;
    const DIRS: &[&str] = &[".", "Models", "Services", "UI", "Data/Sql", "Data", "Util", "a/b/c"];
    let ndirs = rng.gen_range(1..=DIRS.len());
    (0..n)
        .map(|i| {
            let directory = DIRS[rng.gen_range(0..ndirs)].to_string();
            let name = format!("C{:03}{}", rng.gen_range(0..1000), i);
            let path = if directory == "." { format!("{name}.cs") } else { format!("{directory}/{name}.cs") };
            codepark::layout::RoomInput {
                class_id: ClassId::derive(&path, &name),
                name,
                directory,
                loc: if rng.gen_bool(0.05) { 0 } else { rng.gen_range(1..900) },
            }
        })
        .collect()
}

/// Brute-force geometric checks over a finished layout.
pub fn layout_violations(inputs: &[codepark::layout::RoomInput], layout: &codepark::layout::ParkLayout) -> Vec<String> {
    const EPS: f64 = 1e-9;
    let mut out = Vec::new();
    let rooms = &layout.rooms;
    if rooms.len() != inputs.len() {
        out.push(format!("{} rooms for {} classes", rooms.len(), inputs.len()));
        return out;
    }
    let separation = |a: &codepark::layout::Rect, b: &codepark::layout::Rect| {
        (a.min_x - b.max_x).max(b.min_x - a.max_x).max(a.min_z - b.max_z).max(b.min_z - a.max_z)
    };
    for i in 0..rooms.len() {
        for j in i + 1..rooms.len() {
            let gap = separation(&rooms[i].footprint, &rooms[j].footprint);
            if gap < 2.0 - EPS {
                out.push(format!("gap {gap:.3} between {} and {}", rooms[i].class_id, rooms[j].class_id));
            }
        }
    }
    let groups = &layout.groups;
    for i in 0..groups.len() {
        for j in i + 1..groups.len() {
            if separation(&groups[i].bounds, &groups[j].bounds) <= 0.0 {
                out.push(format!("groups {} and {} intersect", groups[i].directory, groups[j].directory));
            }
        }
    }
    if groups.windows(2).any(|w| w[0].directory.as_bytes() >= w[1].directory.as_bytes()) {
        out.push("groups not ordered by directory".into());
    }
    let ground = &layout.ground_extent;
    let loc_max = inputs.iter().map(|r| r.loc).max().unwrap_or(0);
    let loc_min = inputs.iter().map(|r| r.loc).min().unwrap_or(0);
    for room in rooms {
        let input = inputs.iter().find(|r| r.class_id == room.class_id).expect("room for a known class");
        let f = &room.footprint;
        let Some(g) = groups.iter().find(|g| g.group_id == room.group_id) else {
            out.push(format!("{} has no group", room.class_id));
            continue;
        };
        if g.directory != input.directory {
            out.push(format!("{} in group of {}", room.class_id, g.directory));
        }
        let b = &g.bounds;
        if !(f.min_x > b.min_x && f.min_z > b.min_z && f.max_x < b.max_x && f.max_z < b.max_z) {
            out.push(format!("{} not strictly inside group {}", room.class_id, g.directory));
        }
        if f.min_x < ground.min_x || f.min_z < ground.min_z || f.max_x > ground.max_x || f.max_z > ground.max_z {
            out.push(format!("{} outside the ground", room.class_id));
        }
        // side and lightness recomputed from the formulas
        let ratio = if loc_max == 0 { 0.0 } else { (input.loc as f64 / loc_max as f64).sqrt() };
        let side = ((4.0 + 6.0 * ratio) * 2.0).round() / 2.0;
        if (f.width() - side).abs() > EPS || (f.depth() - side).abs() > EPS {
            out.push(format!("{} side {} expected {side}", room.class_id, f.width()));
        }
        let l = if loc_max == loc_min {
            0.85
        } else {
            0.85 - 0.5 * (input.loc - loc_min) as f64 / (loc_max - loc_min) as f64
        };
        if (room.exterior_color.l - l).abs() > 1e-9 {
            out.push(format!("{} lightness {} expected {l}", room.class_id, room.exterior_color.l));
        }
        if room.height != 3.0 {
            out.push(format!("{} height {}", room.class_id, room.height));
        }
    }
    // monotone in LoC
    let mut by_loc: Vec<_> = rooms
        .iter()
        .map(|r| (inputs.iter().find(|i| i.class_id == r.class_id).unwrap().loc, r.footprint.width(), r.exterior_color.l))
        .collect();
    by_loc.sort_by_key(|a| a.0);
    for w in by_loc.windows(2) {
        if w[1].1 < w[0].1 || (w[1].0 > w[0].0 && w[1].2 > w[0].2) || (w[1].0 == w[0].0 && w[1].2 != w[0].2) {
            out.push(format!("not monotone at loc {} / {}", w[0].0, w[1].0));
        }
    }
    out
}

/// A one-room nudge the layout accepts, found by trying small shifts.
pub fn valid_nudge(scene: &codepark::scene::Scene) -> (codepark::layout::Arrangement, codepark::parser::ClassId) {
    use codepark::layout::{Arrangement, GroundPoint};
    let base = Arrangement::of_layout(&scene.layout);
    for room in &scene.layout.rooms {
        for (dx, dz) in [(0.5, 0.0), (-0.5, 0.0), (0.0, 0.5), (0.0, -0.5)] {
            let mut arr = base.clone();
            let p = arr.positions[&room.class_id];
            arr.positions.insert(room.class_id.clone(), GroundPoint { x: p.x + dx, z: p.z + dz });
            if scene.with_arrangement(&arr).is_ok() {
                return (arr, room.class_id.clone());
            }
        }
    }
    panic!("no room can be nudged");
}

/// Arrangement that stacks the second room on top of the first.
pub fn overlapping(scene: &codepark::scene::Scene) -> codepark::layout::Arrangement {
    let mut arr = codepark::layout::Arrangement::of_layout(&scene.layout);
    let first = arr.positions[&scene.layout.rooms[0].class_id];
    arr.positions.insert(scene.layout.rooms[1].class_id.clone(), first);
    arr
}

/// (path, line) for every line of every part of a class, computed from the
/// raw text: from the line holding the first byte of the span to the one
/// holding the last.
pub fn class_lines(a: &Analysis, class: &codepark::parser::ClassDecl) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    for part in &class.parts {
        let unit = a.codebase.unit(part.file_id);
        let line_at = |off: usize| unit.text[..off].matches('\n').count() + 1;
        let (first, last) = (line_at(part.span.start), line_at(part.span.end - 1));
        out.extend((first..=last).map(|l| (unit.path.clone(), l)));
    }
    out
}
