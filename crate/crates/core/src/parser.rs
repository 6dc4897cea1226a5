//! Error-tolerant structural parser.
//!
//! Extracts namespaces, `using` directives, type declarations and their
//! members from the significant (non-trivia) token stream. It does not build
//! an expression tree: method bodies, initializers and accessor blocks are
//! skipped as balanced bracket runs. Anything it cannot make sense of is
//! skipped to the next `;` or balanced `}` and reported as a diagnostic.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lexer::{Token, TokenKind};
use crate::model::{hex, Codebase, Diagnostic, FileId, SourceUnit, Span};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TypeKind {
    Class,
    Interface,
    Struct,
    Enum,
}

impl TypeKind {
    fn from_keyword(kw: &str) -> Option<TypeKind> {
        Some(match kw {
            "class" => TypeKind::Class,
            "interface" => TypeKind::Interface,
            "struct" => TypeKind::Struct,
            "enum" => TypeKind::Enum,
            _ => return None,
        })
    }

    pub fn keyword(self) -> &'static str {
        match self {
            TypeKind::Class => "class",
            TypeKind::Interface => "interface",
            TypeKind::Struct => "struct",
            TypeKind::Enum => "enum",
        }
    }
}

impl fmt::Display for TypeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Stable class identifier: hex digest of the declaring path and qualified
/// name.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ClassId(pub String);

impl ClassId {
    pub fn derive(path: &str, qualified_name: &str) -> ClassId {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        hasher.update(path.as_bytes());
        hasher.update([0u8]);
        hasher.update(qualified_name.as_bytes());
        ClassId(hex(&hasher.finalize()[..8]))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One textual declaration of a (possibly partial) type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassPart {
    pub file_id: FileId,
    pub span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Param {
    pub name: String,
    pub type_name: String,
    pub name_span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodDecl {
    pub name: String,
    pub signature_text: String,
    pub params: Vec<Param>,
    pub span: Span,
    pub name_span: Span,
    /// Block or expression body; absent for abstract, interface and extern
    /// members.
    pub body_span: Option<Span>,
    pub file_id: FileId,
    pub is_constructor: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldDecl {
    pub name: String,
    pub type_name: String,
    pub span: Span,
    pub name_span: Span,
    pub is_property: bool,
    pub file_id: FileId,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDecl {
    pub class_id: ClassId,
    pub name: String,
    pub qualified_name: String,
    pub namespace: String,
    /// Qualified name of the lexically enclosing type, for nested types.
    pub outer: Option<String>,
    pub kind: TypeKind,
    pub modifiers: Vec<String>,
    pub base_names: Vec<String>,
    /// Primary declaration: first modifier (or type keyword) through the
    /// closing brace.
    pub span: Span,
    pub name_span: Span,
    pub file_id: FileId,
    /// All declarations, primary first. More than one only for merged
    /// partial types.
    pub parts: Vec<ClassPart>,
    pub methods: Vec<MethodDecl>,
    pub fields: Vec<FieldDecl>,
}

impl ClassDecl {
    pub fn is_partial(&self) -> bool {
        self.modifiers.iter().any(|m| m == "partial")
    }

    pub fn has_modifier(&self, m: &str) -> bool {
        self.modifiers.iter().any(|x| x == m)
    }
}

#[derive(Debug, Clone, Default)]
pub struct ParsedUnit {
    pub classes: Vec<ClassDecl>,
    /// Namespaces or types imported with `using`.
    pub usings: Vec<String>,
    pub diagnostics: Vec<Diagnostic>,
}

const TYPE_MODIFIERS: &[&str] = &[
    "public", "private", "protected", "internal", "static", "abstract", "sealed", "partial",
    "readonly", "unsafe", "new", "virtual", "override", "extern", "async", "volatile", "const",
    "fixed",
];

const PREDEFINED_TYPES: &[&str] = &[
    "bool", "byte", "char", "decimal", "double", "float", "int", "long", "object", "sbyte",
    "short", "string", "uint", "ulong", "ushort", "void", "var",
];

pub fn parse_unit(unit: &SourceUnit, tokens: &[Token]) -> ParsedUnit {
    let sig: Vec<Token> = tokens.iter().copied().filter(|t| !t.kind.is_trivia()).collect();
    let mut parser = Parser {
        unit,
        toks: &sig,
        i: 0,
        out: ParsedUnit::default(),
        seen_ids: HashMap::new(),
        body_closed: false,
    };
    parser.namespace_body("", false);
    parser.out.classes.sort_by_key(|c| c.span.start);
    parser.out
}

/// Merge per-unit results into the codebase's class list, ordered by
/// (directory, path, span start). Partial declarations sharing a qualified
/// name merge into the first one; other duplicates are kept and reported.
pub fn collect_classes(codebase: &Codebase, parsed: &[ParsedUnit]) -> (Vec<ClassDecl>, Vec<Diagnostic>) {
    let mut all: Vec<ClassDecl> = parsed.iter().flat_map(|p| p.classes.iter().cloned()).collect();
    all.sort_by(|a, b| {
        let ua = codebase.unit(a.file_id);
        let ub = codebase.unit(b.file_id);
        (ua.directory.as_bytes(), ua.path.as_bytes(), a.span.start).cmp(&(
            ub.directory.as_bytes(),
            ub.path.as_bytes(),
            b.span.start,
        ))
    });

    let mut diagnostics = Vec::new();
    let mut out: Vec<ClassDecl> = Vec::with_capacity(all.len());
    let mut by_name: HashMap<String, Vec<usize>> = HashMap::new();
    for class in all {
        let existing = by_name.get(&class.qualified_name).cloned().unwrap_or_default();
        if class.is_partial() {
            if let Some(&target) = existing.iter().find(|&&i| out[i].is_partial() && out[i].kind == class.kind) {
                let merged = &mut out[target];
                merged.parts.extend(class.parts);
                merged.methods.extend(class.methods);
                merged.fields.extend(class.fields);
                for b in class.base_names {
                    if !merged.base_names.contains(&b) {
                        merged.base_names.push(b);
                    }
                }
                for m in class.modifiers {
                    if !merged.modifiers.contains(&m) {
                        merged.modifiers.push(m);
                    }
                }
                continue;
            }
        }
        if let Some(&first) = existing.first() {
            diagnostics.push(Diagnostic::warning(
                class.file_id,
                class.name_span,
                format!(
                    "type {} is also declared in {}",
                    class.qualified_name,
                    codebase.unit(out[first].file_id).path
                ),
            ));
        }
        by_name.entry(class.qualified_name.clone()).or_default().push(out.len());
        out.push(class);
    }
    (out, diagnostics)
}

struct Parser<'a> {
    unit: &'a SourceUnit,
    toks: &'a [Token],
    i: usize,
    out: ParsedUnit,
    seen_ids: HashMap<String, usize>,
    /// Whether the last type body parsed ended at its closing brace.
    body_closed: bool,
}

/// Context of the type whose body is being parsed.
struct Enclosing<'s> {
    namespace: &'s str,
    qualified: &'s str,
    name: &'s str,
}

impl<'a> Parser<'a> {
    fn eof(&self) -> bool {
        self.i >= self.toks.len()
    }

    fn text_at(&self, i: usize) -> &'a str {
        match self.toks.get(i) {
            Some(t) => t.text(&self.unit.text),
            None => "",
        }
    }

    fn kind_at(&self, i: usize) -> Option<TokenKind> {
        self.toks.get(i).map(|t| t.kind)
    }

    fn is(&self, i: usize, text: &str) -> bool {
        self.toks.get(i).is_some_and(|t| {
            matches!(
                t.kind,
                TokenKind::Punctuation | TokenKind::Operator | TokenKind::Keyword | TokenKind::Identifier
            ) && t.text(&self.unit.text) == text
        })
    }

    fn is_ident(&self, i: usize) -> bool {
        self.kind_at(i) == Some(TokenKind::Identifier)
    }

    fn span_at(&self, i: usize) -> Span {
        match self.toks.get(i) {
            Some(t) => t.span,
            None => Span::new(self.unit.text.len(), self.unit.text.len()),
        }
    }

    fn end_of(&self, i: usize) -> usize {
        self.span_at(i).end
    }

    fn diag(&mut self, at: usize, msg: impl Into<String>) {
        let span = self.span_at(at);
        self.out
            .diagnostics
            .push(Diagnostic::warning(self.unit.file_id, span, msg));
    }

    /// Source text from token `from` to token `to` (inclusive) with
    /// whitespace runs collapsed.
    fn render(&self, from: usize, to: usize) -> String {
        let mut out = String::new();
        let mut last_end = self.span_at(from).start;
        for t in &self.toks[from..=to] {
            if t.span.start > last_end && !out.is_empty() {
                out.push(' ');
            }
            out.push_str(t.text(&self.unit.text));
            last_end = t.span.end;
        }
        out
    }

    /// Index just past the bracket group opened at `open`.
    fn skip_balanced(&self, open: usize) -> usize {
        let mut depth = 0i32;
        let mut i = open;
        while i < self.toks.len() {
            if self.kind_at(i) == Some(TokenKind::Punctuation) {
                match self.text_at(i) {
                    "{" | "(" | "[" => depth += 1,
                    "}" | ")" | "]" => {
                        depth -= 1;
                        if depth <= 0 {
                            return i + 1;
                        }
                    }
                    _ => {}
                }
            }
            i += 1;
        }
        self.toks.len()
    }

    /// Index of the first token at bracket depth 0 (relative to `from`) whose
    /// text is in `stops`; an unmatched closer also stops.
    fn find_at_depth0(&self, from: usize, stops: &[&str]) -> usize {
        let mut i = from;
        while i < self.toks.len() {
            let t = self.text_at(i);
            if self.kind_at(i) == Some(TokenKind::Punctuation) || self.kind_at(i) == Some(TokenKind::Operator) {
                if stops.contains(&t) {
                    return i;
                }
                match t {
                    "{" | "(" | "[" => {
                        i = self.skip_balanced(i);
                        continue;
                    }
                    "}" | ")" | "]" => return i,
                    _ => {}
                }
            }
            i += 1;
        }
        self.toks.len()
    }

    /// Like `find_at_depth0` for `,` and `;`, but commas inside a generic
    /// argument list (`new Dictionary<int, Member>()`) do not count.
    fn initializer_end(&self, from: usize) -> usize {
        let mut i = from;
        loop {
            let k = self.find_at_depth0(i, &[",", ";", "<"]);
            if !self.is(k, "<") {
                return k;
            }
            i = match self.generic_args_end(k) {
                Some(end) if k > from && self.is_ident(k - 1) => end,
                _ => k + 1,
            };
        }
    }

    /// Skip a malformed declaration: through the next `;`, or through a
    /// balanced `{ }` block. Stops before an enclosing `}`.
    fn recover(&mut self) {
        let mut i = self.i;
        while i < self.toks.len() {
            if self.kind_at(i) == Some(TokenKind::Punctuation) {
                match self.text_at(i) {
                    ";" => {
                        self.i = i + 1;
                        return;
                    }
                    "{" => {
                        self.i = self.skip_balanced(i);
                        return;
                    }
                    "(" | "[" => {
                        i = self.skip_balanced(i);
                        continue;
                    }
                    "}" => {
                        self.i = if i == self.i { i + 1 } else { i };
                        return;
                    }
                    _ => {}
                }
            }
            i += 1;
        }
        self.i = self.toks.len();
    }

    fn namespace_body(&mut self, ns: &str, braced: bool) {
        loop {
            if self.eof() {
                if braced {
                    self.diag(self.toks.len(), format!("namespace {ns} is missing its closing brace"));
                }
                return;
            }
            let i = self.i;
            match self.text_at(i) {
                "}" if self.kind_at(i) == Some(TokenKind::Punctuation) => {
                    self.i += 1;
                    if braced {
                        return;
                    }
                    self.diag(i, "unmatched '}'");
                }
                ";" if self.kind_at(i) == Some(TokenKind::Punctuation) => self.i += 1,
                "[" if self.kind_at(i) == Some(TokenKind::Punctuation) => self.i = self.skip_balanced(i),
                "using" if self.kind_at(i) == Some(TokenKind::Keyword) => self.using_directive(),
                "extern" if self.is(i + 1, "alias") => {
                    self.i = self.find_at_depth0(i, &[";"]) + 1;
                }
                "namespace" if self.kind_at(i) == Some(TokenKind::Keyword) => {
                    self.i += 1;
                    let (name, next) = self.dotted_name(self.i);
                    if name.is_empty() {
                        self.diag(i, "expected namespace name");
                        self.recover();
                        continue;
                    }
                    let full = if ns.is_empty() { name } else { format!("{ns}.{name}") };
                    self.i = next;
                    if self.is(self.i, "{") {
                        self.i += 1;
                        self.namespace_body(&full, true);
                    } else if self.is(self.i, ";") {
                        self.i += 1;
                        self.namespace_body(&full, braced);
                        return;
                    } else {
                        self.diag(self.i, "expected '{' or ';' after namespace name");
                        self.recover();
                    }
                }
                _ => {
                    let enclosing = Enclosing {
                        namespace: ns,
                        qualified: ns,
                        name: "",
                    };
                    if !self.type_declaration(&enclosing, None) {
                        self.diag(i, format!("unexpected '{}' at namespace level", self.text_at(i)));
                        self.i = i;
                        self.recover();
                    }
                }
            }
        }
    }

    fn dotted_name(&self, mut i: usize) -> (String, usize) {
        let mut name = String::new();
        while self.is_ident(i) {
            name.push_str(self.text_at(i));
            if (self.is(i + 1, ".") || self.is(i + 1, "::")) && self.is_ident(i + 2) {
                name.push('.');
                i += 2;
            } else {
                i += 1;
                break;
            }
        }
        (name, i)
    }

    fn using_directive(&mut self) {
        let start = self.i;
        let end = self.find_at_depth0(start, &[";"]);
        let mut from = start + 1;
        if self.is(from, "static") {
            from += 1;
        }
        if let Some(eq) = (from..end).find(|&k| self.is(k, "=")) {
            from = eq + 1;
        }
        if self.is(from, "global") && self.is(from + 1, "::") {
            from += 2;
        }
        let (path, _) = self.dotted_name(from);
        if path.is_empty() {
            self.diag(start, "malformed using directive");
        } else {
            self.out.usings.push(path);
        }
        self.i = (end + 1).min(self.toks.len());
    }

    /// Leading modifiers from `self.i`; returns them and advances.
    fn modifiers(&mut self) -> Vec<String> {
        let mut mods = Vec::new();
        loop {
            let t = self.text_at(self.i);
            let is_mod = match self.kind_at(self.i) {
                Some(TokenKind::Keyword) => TYPE_MODIFIERS.contains(&t),
                Some(TokenKind::Identifier) => {
                    t == "partial"
                        && matches!(
                            self.kind_at(self.i + 1),
                            Some(TokenKind::Keyword) | Some(TokenKind::Identifier)
                        )
                }
                _ => false,
            };
            if !is_mod {
                return mods;
            }
            if !mods.iter().any(|m| m == t) {
                mods.push(t.to_string());
            }
            self.i += 1;
        }
    }

    /// Parse a type declaration at `self.i` (modifiers included). Returns
    /// false without consuming anything if the tokens do not start one.
    fn type_declaration(&mut self, enclosing: &Enclosing, pre_modifiers: Option<(usize, Vec<String>)>) -> bool {
        let (start, modifiers) = match pre_modifiers {
            Some(p) => p,
            None => {
                let start = self.i;
                (start, self.modifiers())
            }
        };
        if self.is(self.i, "delegate") {
            self.i = self.find_at_depth0(self.i, &[";"]) + 1;
            return true;
        }
        let Some(kind) = (self.kind_at(self.i) == Some(TokenKind::Keyword))
            .then(|| TypeKind::from_keyword(self.text_at(self.i)))
            .flatten()
        else {
            self.i = start;
            return false;
        };
        let kw = self.i;
        self.i += 1;
        if !self.is_ident(self.i) {
            self.diag(kw, format!("expected a name after '{kind}'"));
            self.recover();
            return true;
        }
        let name_idx = self.i;
        let name = self.text_at(name_idx).to_string();
        self.i += 1;
        if self.is(self.i, "<") {
            match self.generic_args_end(self.i) {
                Some(end) => self.i = end,
                None => {
                    self.diag(self.i, "malformed type parameter list");
                    self.recover();
                    return true;
                }
            }
        }
        let mut base_names = Vec::new();
        if self.is(self.i, ":") {
            self.i += 1;
            loop {
                let Some(end) = self.type_ref_end(self.i) else {
                    self.diag(self.i, "malformed base type list");
                    break;
                };
                base_names.push(self.type_path(self.i, end));
                self.i = end;
                if self.is(self.i, ",") {
                    self.i += 1;
                } else {
                    break;
                }
            }
        }
        // `where` clauses and anything else up to the body
        if !self.is(self.i, "{") {
            let brace = self.find_at_depth0(self.i, &["{", ";"]);
            if brace > self.i && self.is(self.i, "where") && self.is(brace, "{") {
                self.i = brace;
            }
        }
        if !self.is(self.i, "{") {
            self.diag(self.i, format!("expected '{{' to open {kind} {name}"));
            self.recover();
            return true;
        }

        let qualified = if enclosing.qualified.is_empty() {
            name.clone()
        } else {
            format!("{}.{}", enclosing.qualified, name)
        };
        let outer = (!enclosing.name.is_empty()).then(|| enclosing.qualified.to_string());
        let ordinal = {
            let n = self.seen_ids.entry(qualified.clone()).or_insert(0);
            *n += 1;
            *n
        };
        let id_key = if ordinal == 1 {
            qualified.clone()
        } else {
            self.diag(name_idx, format!("type {qualified} is declared more than once in this file"));
            format!("{qualified}#{ordinal}")
        };

        let slot = self.out.classes.len();
        self.out.classes.push(ClassDecl {
            class_id: ClassId::derive(&self.unit.path, &id_key),
            name: name.clone(),
            qualified_name: qualified.clone(),
            namespace: enclosing.namespace.to_string(),
            outer,
            kind,
            modifiers,
            base_names,
            span: Span::new(self.span_at(start).start, self.span_at(start).end),
            name_span: self.span_at(name_idx),
            file_id: self.unit.file_id,
            parts: Vec::new(),
            methods: Vec::new(),
            fields: Vec::new(),
        });

        self.i += 1;
        let inner = Enclosing {
            namespace: enclosing.namespace,
            qualified: &qualified,
            name: &name,
        };
        let (methods, fields) = if kind == TypeKind::Enum {
            (Vec::new(), self.enum_body(&name))
        } else {
            self.class_body(&inner)
        };
        let end = if self.body_closed {
            self.end_of(self.i - 1)
        } else {
            self.unit.text.len()
        };
        let class = &mut self.out.classes[slot];
        class.span = Span::new(class.span.start, end);
        class.parts = vec![ClassPart {
            file_id: self.unit.file_id,
            span: class.span,
        }];
        class.methods = methods;
        class.fields = fields;
        true
    }

    fn enum_body(&mut self, enum_name: &str) -> Vec<FieldDecl> {
        let mut fields = Vec::new();
        loop {
            if self.eof() {
                self.diag(self.toks.len(), format!("enum {enum_name} is missing its closing brace"));
                self.body_closed = false;
                return fields;
            }
            if self.is(self.i, "}") {
                self.i += 1;
                self.body_closed = true;
                return fields;
            }
            if self.is(self.i, "[") {
                self.i = self.skip_balanced(self.i);
                continue;
            }
            if self.is(self.i, ",") {
                self.i += 1;
                continue;
            }
            if !self.is_ident(self.i) {
                self.diag(self.i, "expected enum member name");
                self.i = self.find_at_depth0(self.i + 1, &[","]);
                continue;
            }
            let name_idx = self.i;
            let stop = self.find_at_depth0(self.i + 1, &[","]);
            let last = stop - 1;
            self.push_field(&mut fields, name_idx, name_idx, last, enum_name.to_string(), false);
            self.i = stop;
        }
    }

    fn push_field(
        &mut self,
        fields: &mut Vec<FieldDecl>,
        start: usize,
        name_idx: usize,
        last: usize,
        type_name: String,
        is_property: bool,
    ) {
        let name = self.text_at(name_idx).to_string();
        if fields.iter().any(|f| f.name == name) {
            self.diag(name_idx, format!("member {name} declared twice"));
        }
        fields.push(FieldDecl {
            name,
            type_name,
            span: Span::new(self.span_at(start).start, self.end_of(last)),
            name_span: self.span_at(name_idx),
            is_property,
            file_id: self.unit.file_id,
        });
    }

    fn class_body(&mut self, cls: &Enclosing) -> (Vec<MethodDecl>, Vec<FieldDecl>) {
        let mut methods = Vec::new();
        let mut fields = Vec::new();
        loop {
            if self.eof() {
                self.diag(self.toks.len(), format!("type {} is missing its closing brace", cls.qualified));
                self.body_closed = false;
                return (methods, fields);
            }
            let i = self.i;
            if self.kind_at(i) == Some(TokenKind::Punctuation) {
                match self.text_at(i) {
                    "}" => {
                        self.i += 1;
                        self.body_closed = true;
                        return (methods, fields);
                    }
                    "[" => {
                        self.i = self.skip_balanced(i);
                        continue;
                    }
                    ";" => {
                        self.i += 1;
                        continue;
                    }
                    _ => {}
                }
            }
            if !self.member(cls, &mut methods, &mut fields) {
                self.diag(i, format!("cannot parse member starting at '{}'", self.text_at(i)));
                self.i = i;
                self.recover();
                if self.i == i {
                    self.i += 1;
                }
            }
        }
    }

    /// Parse one member; false means unparseable (caller recovers).
    fn member(&mut self, cls: &Enclosing, methods: &mut Vec<MethodDecl>, fields: &mut Vec<FieldDecl>) -> bool {
        let start = self.i;
        let mods = self.modifiers();

        if self.is(self.i, "class") || self.is(self.i, "struct") || self.is(self.i, "interface") || self.is(self.i, "enum") || self.is(self.i, "delegate") {
            return self.type_declaration(cls, Some((start, mods)));
        }

        if self.is(self.i, "event") {
            self.i += 1;
            let Some(type_end) = self.type_ref_end(self.i) else { return false };
            let type_name = self.render(self.i, type_end - 1);
            self.i = type_end;
            if !self.is_ident(self.i) {
                return false;
            }
            if self.is(self.i + 1, "{") {
                let name_idx = self.i;
                self.i = self.skip_balanced(self.i + 1);
                self.push_field(fields, start, name_idx, self.i - 1, type_name, true);
                return true;
            }
            return self.field_declarators(start, type_name, fields);
        }

        // destructor
        if self.is(self.i, "~") && self.is_ident(self.i + 1) && self.is(self.i + 2, "(") {
            let name_idx = self.i + 1;
            let name = format!("~{}", self.text_at(name_idx));
            self.i += 2;
            return self.method_rest(start, name_idx, name, None, String::new(), false, methods);
        }

        // constructor
        if self.is_ident(self.i) && self.text_at(self.i) == cls.name && self.is(self.i + 1, "(") {
            let name_idx = self.i;
            self.i += 1;
            return self.method_rest(start, name_idx, cls.name.to_string(), None, String::new(), true, methods);
        }

        // conversion operator
        if (self.is(self.i, "implicit") || self.is(self.i, "explicit")) && self.is(self.i + 1, "operator") {
            let op_idx = self.i + 1;
            let Some(type_end) = self.type_ref_end(op_idx + 1) else { return false };
            let target = self.render(op_idx + 1, type_end - 1);
            self.i = type_end;
            if !self.is(self.i, "(") {
                return false;
            }
            let name = format!("operator {target}");
            let ret = self.text_at(op_idx - 1).to_string();
            return self.method_rest(start, op_idx, name, None, ret, false, methods);
        }

        let type_start = self.i;
        let Some(type_end) = self.type_ref_end(type_start) else { return false };
        let type_name = self.render(type_start, type_end - 1);
        self.i = type_end;

        if self.is(self.i, "operator") {
            let op_idx = self.i;
            let mut k = self.i + 1;
            let mut sym = String::new();
            while k < self.toks.len() && !self.is(k, "(") && k < op_idx + 3 {
                sym.push_str(self.text_at(k));
                k += 1;
            }
            if !self.is(k, "(") {
                return false;
            }
            self.i = k;
            return self.method_rest(start, op_idx, format!("operator {sym}"), None, type_name, false, methods);
        }

        // indexer: not recorded as a member
        if self.is(self.i, "this") && self.is(self.i + 1, "[") {
            let after = self.skip_balanced(self.i + 1);
            self.i = after;
            if self.is(self.i, "{") {
                self.i = self.skip_balanced(self.i);
            } else if self.is(self.i, "=>") {
                self.i = self.find_at_depth0(self.i, &[";"]) + 1;
            } else {
                return false;
            }
            return true;
        }

        if !self.is_ident(self.i) {
            return false;
        }
        // explicit interface implementation: IFoo.Bar / IFoo<T>.Bar
        let mut name_idx = self.i;
        loop {
            let mut k = name_idx + 1;
            if self.is(k, "<") {
                match self.generic_args_end(k) {
                    Some(e) if self.is(e, ".") => k = e,
                    _ => break,
                }
            }
            if self.is(k, ".") && self.is_ident(k + 1) {
                name_idx = k + 1;
            } else {
                break;
            }
        }
        self.i = name_idx + 1;
        let name = self.text_at(name_idx).to_string();

        let mut generics = None;
        if self.is(self.i, "<") {
            let Some(end) = self.generic_args_end(self.i) else { return false };
            generics = Some(self.render(self.i, end - 1));
            self.i = end;
        }
        if self.is(self.i, "(") {
            return self.method_rest(start, name_idx, name, generics, type_name, false, methods);
        }
        if generics.is_some() {
            return false;
        }
        if self.is(self.i, "{") {
            self.i = self.skip_balanced(self.i);
            if self.is(self.i, "=") {
                self.i = self.find_at_depth0(self.i, &[";"]) + 1;
            }
            let last = self.i - 1;
            self.push_field(fields, start, name_idx, last, type_name, true);
            return true;
        }
        if self.is(self.i, "=>") {
            let semi = self.find_at_depth0(self.i, &[";"]);
            self.i = semi + 1;
            self.push_field(fields, start, name_idx, semi.min(self.toks.len() - 1), type_name, true);
            return true;
        }
        self.i = name_idx;
        self.field_declarators(start, type_name, fields)
    }

    /// `a = 1, b, c = f(x);` starting at the first declarator name.
    fn field_declarators(&mut self, start: usize, type_name: String, fields: &mut Vec<FieldDecl>) -> bool {
        let mut decl_start = start;
        loop {
            if !self.is_ident(self.i) {
                return false;
            }
            let name_idx = self.i;
            let mut k = self.i + 1;
            if self.is(k, "[") {
                // fixed-size buffer
                k = self.skip_balanced(k);
            }
            if self.is(k, "=") {
                k = self.initializer_end(k + 1);
            }
            if self.is(k, ",") {
                self.push_field(fields, decl_start, name_idx, k - 1, type_name.clone(), false);
                self.i = k + 1;
                decl_start = self.i;
                continue;
            }
            if self.is(k, ";") {
                self.push_field(fields, decl_start, name_idx, k, type_name, false);
                self.i = k + 1;
                return true;
            }
            return false;
        }
    }

    /// Parameter list at `self.i` (`(`), then body or terminator.
    #[allow(clippy::too_many_arguments)]
    fn method_rest(
        &mut self,
        start: usize,
        name_idx: usize,
        name: String,
        generics: Option<String>,
        return_type: String,
        is_constructor: bool,
        methods: &mut Vec<MethodDecl>,
    ) -> bool {
        debug_assert!(self.is(self.i, "("));
        let open = self.i;
        let close = self.skip_balanced(open) - 1;
        if !self.is(close, ")") {
            return false;
        }
        let params = self.params(open + 1, close);
        self.i = close + 1;

        let stop = self.find_at_depth0(self.i, &["{", ";", "=>"]);
        if stop >= self.toks.len() {
            return false;
        }
        let (body_span, last) = match self.text_at(stop) {
            "{" => {
                let end = self.skip_balanced(stop);
                (Some(Span::new(self.span_at(stop).start, self.end_of(end - 1))), end - 1)
            }
            "=>" => {
                let semi = self.find_at_depth0(stop + 1, &[";"]);
                let semi = semi.min(self.toks.len() - 1);
                (Some(Span::new(self.span_at(stop).start, self.end_of(semi))), semi)
            }
            ";" => (None, stop),
            _ => return false,
        };
        self.i = last + 1;

        let param_text = params
            .iter()
            .map(|p| format!("{} {}", p.type_name, p.name))
            .collect::<Vec<_>>()
            .join(", ");
        let generics = generics.unwrap_or_default();
        let signature_text = if return_type.is_empty() {
            format!("{name}{generics}({param_text})")
        } else {
            format!("{return_type} {name}{generics}({param_text})")
        };
        methods.push(MethodDecl {
            name,
            signature_text,
            params,
            span: Span::new(self.span_at(start).start, self.end_of(last)),
            name_span: self.span_at(name_idx),
            body_span,
            file_id: self.unit.file_id,
            is_constructor,
        });
        true
    }

    fn params(&mut self, from: usize, close: usize) -> Vec<Param> {
        let mut params: Vec<Param> = Vec::new();
        let mut k = from;
        while k < close {
            // split on top-level commas; angle brackets nest type arguments
            let mut end = k;
            let mut angle = 0i32;
            while end < close {
                match self.text_at(end) {
                    "(" | "[" | "{" if self.kind_at(end) == Some(TokenKind::Punctuation) => {
                        end = self.skip_balanced(end);
                        continue;
                    }
                    "<" => angle += 1,
                    ">" => angle -= 1,
                    "," if angle <= 0 => break,
                    _ => {}
                }
                end += 1;
            }
            if let Some(p) = self.param(k, end) {
                if params.iter().any(|q| q.name == p.name) {
                    self.diag(k, format!("parameter {} declared twice", p.name));
                }
                params.push(p);
            } else if end > k {
                self.diag(k, "cannot parse parameter");
            }
            k = end + 1;
        }
        params
    }

    fn param(&self, mut from: usize, mut end: usize) -> Option<Param> {
        while from < end && self.is(from, "[") {
            from = self.skip_balanced(from);
        }
        while from < end && ["this", "ref", "out", "in", "params"].iter().any(|m| self.is(from, m)) {
            from += 1;
        }
        if let Some(eq) = (from..end).find(|&k| self.is(k, "=")) {
            end = eq;
        }
        if end < from + 2 {
            return None;
        }
        let name_idx = end - 1;
        if !self.is_ident(name_idx) {
            return None;
        }
        Some(Param {
            name: self.text_at(name_idx).to_string(),
            type_name: self.render(from, name_idx - 1),
            name_span: self.span_at(name_idx),
        })
    }

    /// End (exclusive) of a type reference starting at `i`.
    fn type_ref_end(&self, i: usize) -> Option<usize> {
        let mut k;
        if self.is(i, "(") {
            k = self.skip_balanced(i);
            if !self.is(k - 1, ")") {
                return None;
            }
        } else if self.kind_at(i) == Some(TokenKind::Keyword) && PREDEFINED_TYPES.contains(&self.text_at(i)) {
            k = i + 1;
        } else if self.is_ident(i) {
            k = i + 1;
            loop {
                if self.is(k, "<") {
                    k = self.generic_args_end(k)?;
                }
                if (self.is(k, ".") || self.is(k, "::")) && self.is_ident(k + 1) {
                    k += 2;
                } else {
                    break;
                }
            }
        } else {
            return None;
        }
        loop {
            if self.is(k, "?") || self.is(k, "*") {
                k += 1;
            } else if self.is(k, "[") {
                let mut j = k + 1;
                while self.is(j, ",") {
                    j += 1;
                }
                if !self.is(j, "]") {
                    break;
                }
                k = j + 1;
            } else {
                break;
            }
        }
        Some(k)
    }

    /// Identifier path of a type reference with type arguments dropped.
    fn type_path(&self, from: usize, end: usize) -> String {
        let mut out = String::new();
        let mut angle = 0;
        for k in from..end {
            match self.text_at(k) {
                "<" => angle += 1,
                ">" => angle -= 1,
                t if angle == 0 && self.is_ident(k) => out.push_str(t),
                "." | "::" if angle == 0 => out.push('.'),
                _ => {}
            }
        }
        out
    }

    /// End (exclusive) of a `<...>` type argument list at `open`.
    fn generic_args_end(&self, open: usize) -> Option<usize> {
        let mut depth = 0;
        let mut k = open;
        while k < self.toks.len() {
            let t = self.text_at(k);
            match self.kind_at(k)? {
                TokenKind::Operator if t == "<" => depth += 1,
                TokenKind::Operator if t == ">" => {
                    depth -= 1;
                    if depth == 0 {
                        return Some(k + 1);
                    }
                }
                TokenKind::Operator if t == "?" || t == "*" || t == "::" => {}
                TokenKind::Identifier | TokenKind::Keyword => {}
                TokenKind::Punctuation if matches!(t, "," | "." | "[" | "]" | "(" | ")") => {}
                _ => return None,
            }
            k += 1;
        }
        None
    }
}
