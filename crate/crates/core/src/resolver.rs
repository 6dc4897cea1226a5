//! Symbol table and go-to-definition resolution.
//!
//! Definitions come from the structural parse (types, methods, fields,
//! parameters) plus `Type name` / `var name` declaration patterns found in
//! method bodies. Resolution is positional, not type-checked: a simple name
//! is looked up innermost-first (locals declared earlier in the body,
//! parameters, fields of the class and its bases, methods of the class and
//! its bases, visible types) and ties go to the earliest definition by
//! (path, offset). Member access `a.b` only resolves when `a` is `this`,
//! `base`, a type or a namespace.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::lexer::{Token, TokenKind};
use crate::model::{Codebase, Diagnostic, FileId, Span};
use crate::parser::{ClassDecl, ClassId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DefId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ScopeId(pub u32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DefKind {
    Type,
    Method,
    Field,
    Parameter,
    Local,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Owner {
    Class(ClassId),
    Method(ScopeId),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefinitionSite {
    pub def_id: DefId,
    pub kind: DefKind,
    pub name: String,
    pub name_span: Span,
    pub owner: Owner,
    pub file_id: FileId,
    /// The class whose room shows this definition.
    pub class_id: ClassId,
}

/// Parameters and body-local declarations of one method.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodScope {
    pub scope_id: ScopeId,
    pub method: DefId,
    pub file_id: FileId,
    pub span: Span,
    pub body: Option<Span>,
    pub params: Vec<DefId>,
    /// In declaration order.
    pub locals: Vec<DefId>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvedReference {
    pub file_id: FileId,
    pub ref_span: Span,
    pub target: DefId,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resolution {
    Resolved(ResolvedReference),
    Unresolved,
}

impl Resolution {
    pub fn target(&self) -> Option<DefId> {
        match self {
            Resolution::Resolved(r) => Some(r.target),
            Resolution::Unresolved => None,
        }
    }
}

#[derive(Debug, Clone)]
struct ClassEntry {
    def: DefId,
    file_id: FileId,
    namespace: String,
    /// Enclosing classes, innermost first.
    outers: Vec<usize>,
    fields: HashMap<String, Vec<DefId>>,
    methods: HashMap<String, Vec<DefId>>,
    /// This class followed by its base classes, depth first.
    chain: Vec<usize>,
    scopes: Vec<ScopeId>,
}

#[derive(Debug, Clone)]
pub struct SymbolTable {
    definitions: Vec<DefinitionSite>,
    by_qualified_name: BTreeMap<String, Vec<DefId>>,
    scopes: Vec<MethodScope>,
    classes: Vec<ClassEntry>,
    class_of_def: HashMap<DefId, usize>,
    by_name_span: HashMap<(FileId, usize), DefId>,
    file_usings: Vec<Vec<String>>,
    /// Per file: (part span, class index).
    file_classes: Vec<Vec<(Span, usize)>>,
    namespaces: HashSet<String>,
    /// File path per file id, for the "first definition" tie-break.
    paths: Vec<String>,
}

/// Keywords that can begin a local variable's type.
const LOCAL_TYPE_KEYWORDS: &[&str] = &[
    "bool", "byte", "char", "decimal", "double", "float", "int", "long", "object", "sbyte",
    "short", "string", "uint", "ulong", "ushort", "var",
];

/// Tokens after which a statement or declaration may start.
const DECL_LEADERS: &[&str] = &["{", "}", ";", "(", ":", "out", "is", "else"];

/// Tokens that may follow a declared local's name.
const DECL_FOLLOWERS: &[&str] = &["=", ";", ",", ")", "in"];
/// After `x is Type name` the pattern variable can be followed by more
/// of the condition.
const PATTERN_FOLLOWERS: &[&str] = &["&&", "||", ")", ";", "?", ":", ",", "=>", "]", "}"];
/// Pattern combinators that look like a type name after `is`.
const PATTERN_WORDS: &[&str] = &["not", "and", "or"];

const MEMBER_ACCESS: &[&str] = &[".", "?.", "->", "::"];

/// Significant (non-trivia) tokens of each file.
pub fn significant_tokens(tokens: &[Token]) -> Vec<Token> {
    tokens.iter().copied().filter(|t| !t.kind.is_trivia()).collect()
}

struct Builder {
    table: SymbolTable,
}

impl Builder {
    fn add(&mut self, kind: DefKind, name: &str, name_span: Span, owner: Owner, file_id: FileId, class_id: &ClassId) -> DefId {
        let def_id = DefId(self.table.definitions.len() as u32);
        self.table.definitions.push(DefinitionSite {
            def_id,
            kind,
            name: name.to_string(),
            name_span,
            owner,
            file_id,
            class_id: class_id.clone(),
        });
        self.table.by_name_span.insert((file_id, name_span.start), def_id);
        def_id
    }
}

/// Build the symbol table. `usings` and `sig_tokens` are indexed by file id;
/// `sig_tokens` holds each file's non-trivia tokens.
pub fn build_symbol_table(
    codebase: &Codebase,
    classes: &[ClassDecl],
    usings: &[Vec<String>],
    sig_tokens: &[Vec<Token>],
) -> (SymbolTable, Vec<Diagnostic>) {
    let mut diagnostics = Vec::new();
    let mut namespaces = HashSet::new();
    for c in classes {
        let mut ns = c.namespace.as_str();
        while !ns.is_empty() {
            namespaces.insert(ns.to_string());
            ns = ns.rfind('.').map_or("", |i| &ns[..i]);
        }
    }
    let mut b = Builder {
        table: SymbolTable {
            definitions: Vec::new(),
            by_qualified_name: BTreeMap::new(),
            scopes: Vec::new(),
            classes: Vec::with_capacity(classes.len()),
            class_of_def: HashMap::new(),
            by_name_span: HashMap::new(),
            file_usings: usings.to_vec(),
            file_classes: vec![Vec::new(); codebase.units.len()],
            namespaces,
            paths: codebase.units.iter().map(|u| u.path.clone()).collect(),
        },
    };

    for (ci, class) in classes.iter().enumerate() {
        let owner = Owner::Class(class.class_id.clone());
        let def = b.add(DefKind::Type, &class.name, class.name_span, owner.clone(), class.file_id, &class.class_id);
        b.table.by_qualified_name.entry(class.qualified_name.clone()).or_default().push(def);
        b.table.class_of_def.insert(def, ci);
        for part in &class.parts {
            b.table.file_classes[part.file_id.0 as usize].push((part.span, ci));
        }

        let mut fields: HashMap<String, Vec<DefId>> = HashMap::new();
        for f in &class.fields {
            let id = b.add(DefKind::Field, &f.name, f.name_span, owner.clone(), f.file_id, &class.class_id);
            b.table.class_of_def.insert(id, ci);
            fields.entry(f.name.clone()).or_default().push(id);
        }
        let mut methods: HashMap<String, Vec<DefId>> = HashMap::new();
        let mut scopes = Vec::new();
        for m in &class.methods {
            let id = b.add(DefKind::Method, &m.name, m.name_span, owner.clone(), m.file_id, &class.class_id);
            b.table.class_of_def.insert(id, ci);
            // constructors and destructors are not callable by simple name
            if !m.is_constructor && !m.name.starts_with('~') {
                methods.entry(m.name.clone()).or_default().push(id);
            }
            let scope_id = ScopeId(b.table.scopes.len() as u32);
            let params = m
                .params
                .iter()
                .map(|p| {
                    let pid = b.add(DefKind::Parameter, &p.name, p.name_span, Owner::Method(scope_id), m.file_id, &class.class_id);
                    b.table.class_of_def.insert(pid, ci);
                    pid
                })
                .collect();
            let locals = match m.body_span {
                Some(body) => find_locals(codebase, &sig_tokens[m.file_id.0 as usize], body)
                    .into_iter()
                    .map(|(name, span)| {
                        let lid = b.add(DefKind::Local, &name, span, Owner::Method(scope_id), m.file_id, &class.class_id);
                        b.table.class_of_def.insert(lid, ci);
                        lid
                    })
                    .collect(),
                None => Vec::new(),
            };
            b.table.scopes.push(MethodScope {
                scope_id,
                method: id,
                file_id: m.file_id,
                span: m.span,
                body: m.body_span,
                params,
                locals,
            });
            scopes.push(scope_id);
        }
        b.table.classes.push(ClassEntry {
            def,
            file_id: class.file_id,
            namespace: class.namespace.clone(),
            outers: Vec::new(),
            fields,
            methods,
            chain: Vec::new(),
            scopes,
        });
    }

    let mut table = b.table;
    for files in &mut table.file_classes {
        files.sort_by_key(|(span, _)| (span.start, std::cmp::Reverse(span.end)));
    }

    // enclosing classes
    for (ci, class) in classes.iter().enumerate() {
        let mut outers = Vec::new();
        let mut outer = class.outer.clone();
        while let Some(q) = outer {
            let found = table.by_qualified_name.get(&q).and_then(|defs| {
                defs.iter()
                    .map(|d| table.class_of_def[d])
                    .find(|&oi| classes[oi].parts.iter().any(|p| p.file_id == class.file_id && p.span.contains_span(class.span)))
            });
            match found {
                Some(oi) => {
                    outers.push(oi);
                    outer = classes[oi].outer.clone();
                }
                None => break,
            }
        }
        table.classes[ci].outers = outers;
    }

    // base class chains
    for ci in 0..classes.len() {
        let mut chain = vec![ci];
        let mut seen: HashSet<usize> = HashSet::from([ci]);
        let mut stack: Vec<(usize, usize)> = vec![(ci, 0)];
        while let Some((cur, next_base)) = stack.pop() {
            let Some(base) = classes[cur].base_names.get(next_base) else { continue };
            stack.push((cur, next_base + 1));
            let found = table.lookup_type(base, table.classes[cur].file_id, Some(cur));
            if found.len() > 1 {
                diagnostics.push(Diagnostic::warning(
                    classes[cur].file_id,
                    classes[cur].name_span,
                    format!("base type {base} of {} is ambiguous", classes[cur].qualified_name),
                ));
            }
            if let Some(def) = table.earliest(&found) {
                let bi = table.class_of_def[&def];
                if seen.insert(bi) {
                    chain.push(bi);
                    stack.push((bi, 0));
                }
            }
        }
        table.classes[ci].chain = chain;
    }

    (table, diagnostics)
}

/// `Type name` / `var name` declarations inside `body`, in source order.
fn find_locals(codebase: &Codebase, sig: &[Token], body: Span) -> Vec<(String, Span)> {
    let Some(file_id) = sig.first().map(|t| t.file_id) else { return Vec::new() };
    let text = &codebase.unit(file_id).text;
    let lo = sig.partition_point(|t| t.span.start < body.start);
    let hi = sig.partition_point(|t| t.span.start < body.end);
    let toks = &sig[lo..hi];
    let tx = |k: usize| toks.get(k).map_or("", |t| t.text(text));
    let kind = |k: usize| toks.get(k).map(|t| t.kind);

    let mut out = Vec::new();
    let mut k = 1;
    while k < toks.len() {
        let leads = DECL_LEADERS.contains(&tx(k - 1))
            && matches!(kind(k - 1), Some(TokenKind::Punctuation | TokenKind::Keyword | TokenKind::Identifier));
        if !leads {
            k += 1;
            continue;
        }
        let Some(end) = local_type_end(toks, text, k) else {
            k += 1;
            continue;
        };
        let follows = if tx(k - 1) == "is" {
            !PATTERN_WORDS.contains(&tx(k)) && PATTERN_FOLLOWERS.contains(&tx(end + 1))
        } else {
            DECL_FOLLOWERS.contains(&tx(end + 1))
        };
        if kind(end) == Some(TokenKind::Identifier) && follows {
            out.push((tx(end).to_string(), toks[end].span));
            k = end + 1;
        } else {
            k += 1;
        }
    }
    out
}

/// End (exclusive) of a local variable type starting at `k`.
fn local_type_end(toks: &[Token], text: &str, k: usize) -> Option<usize> {
    let tx = |i: usize| toks.get(i).map_or("", |t| t.text(text));
    let kind = |i: usize| toks.get(i).map(|t| t.kind);
    let mut i = match kind(k)? {
        TokenKind::Keyword if LOCAL_TYPE_KEYWORDS.contains(&tx(k)) => k + 1,
        TokenKind::Identifier => {
            let mut i = k + 1;
            loop {
                if tx(i) == "<" {
                    let mut depth = 0;
                    loop {
                        match (kind(i)?, tx(i)) {
                            (TokenKind::Operator, "<") => depth += 1,
                            (TokenKind::Operator, ">") => {
                                depth -= 1;
                                if depth == 0 {
                                    break;
                                }
                            }
                            (TokenKind::Identifier | TokenKind::Keyword, _) => {}
                            (TokenKind::Punctuation, "," | "." | "[" | "]") => {}
                            (TokenKind::Operator, "?") => {}
                            _ => return None,
                        }
                        i += 1;
                    }
                    i += 1;
                }
                if tx(i) == "." && kind(i + 1) == Some(TokenKind::Identifier) {
                    i += 2;
                } else {
                    break;
                }
            }
            i
        }
        _ => return None,
    };
    loop {
        if tx(i) == "?" && kind(i + 1) == Some(TokenKind::Identifier) {
            i += 1;
        } else if tx(i) == "[" {
            let mut j = i + 1;
            while tx(j) == "," {
                j += 1;
            }
            if tx(j) != "]" {
                break;
            }
            i = j + 1;
        } else {
            break;
        }
    }
    Some(i)
}

impl SymbolTable {
    pub fn definitions(&self) -> &[DefinitionSite] {
        &self.definitions
    }

    pub fn definition(&self, id: DefId) -> &DefinitionSite {
        &self.definitions[id.0 as usize]
    }

    pub fn by_qualified_name(&self, qualified: &str) -> &[DefId] {
        self.by_qualified_name.get(qualified).map_or(&[], Vec::as_slice)
    }

    pub fn scopes(&self) -> &[MethodScope] {
        &self.scopes
    }

    pub fn scope(&self, id: ScopeId) -> &MethodScope {
        &self.scopes[id.0 as usize]
    }

    /// The definition whose name token starts at `offset`.
    pub fn definition_at(&self, file_id: FileId, offset: usize) -> Option<DefId> {
        self.by_name_span.get(&(file_id, offset)).copied()
    }

    /// Span the owner covers: the method for parameters and locals, the
    /// class parts otherwise.
    pub fn owner_spans(&self, def: &DefinitionSite, classes: &[ClassDecl]) -> Vec<Span> {
        match &def.owner {
            Owner::Method(scope) => vec![self.scope(*scope).span],
            Owner::Class(_) => {
                let ci = self.class_of_def[&def.def_id];
                classes[ci].parts.iter().filter(|p| p.file_id == def.file_id).map(|p| p.span).collect()
            }
        }
    }

    fn sort_key(&self, id: DefId) -> (&str, usize) {
        let d = self.definition(id);
        (self.paths[d.file_id.0 as usize].as_str(), d.name_span.start)
    }

    /// The first definition by (path, offset).
    fn earliest(&self, ids: &[DefId]) -> Option<DefId> {
        ids.iter().copied().min_by(|&a, &b| self.sort_key(a).cmp(&self.sort_key(b)))
    }

    /// Type definitions a (possibly dotted) name refers to from `file_id`,
    /// optionally inside class `ctx`.
    fn lookup_type(&self, name: &str, file_id: FileId, ctx: Option<usize>) -> Vec<DefId> {
        let mut prefixes: Vec<String> = Vec::new();
        if let Some(ci) = ctx {
            prefixes.push(self.qualified_of(ci));
            for &oi in &self.classes[ci].outers {
                prefixes.push(self.qualified_of(oi));
            }
            let mut ns = self.classes[ci].namespace.as_str();
            while !ns.is_empty() {
                prefixes.push(ns.to_string());
                ns = ns.rfind('.').map_or("", |i| &ns[..i]);
            }
        }
        prefixes.extend(self.file_usings.get(file_id.0 as usize).into_iter().flatten().cloned());
        prefixes.push(String::new());

        let mut found = Vec::new();
        for p in prefixes {
            let q = if p.is_empty() { name.to_string() } else { format!("{p}.{name}") };
            for &d in self.by_qualified_name(&q) {
                if !found.contains(&d) {
                    found.push(d);
                }
            }
        }
        found
    }

    fn qualified_of(&self, ci: usize) -> String {
        let def = self.classes[ci].def;
        self.by_qualified_name
            .iter()
            .find(|(_, ids)| ids.contains(&def))
            .map(|(q, _)| q.clone())
            .unwrap_or_default()
    }

    /// Innermost class containing `offset` in `file_id`.
    fn class_at(&self, file_id: FileId, offset: usize) -> Option<usize> {
        self.file_classes[file_id.0 as usize]
            .iter()
            .filter(|(span, _)| span.contains(offset))
            .min_by_key(|(span, _)| span.len())
            .map(|&(_, ci)| ci)
    }

    fn scope_at(&self, ci: usize, file_id: FileId, offset: usize) -> Option<ScopeId> {
        self.classes[ci]
            .scopes
            .iter()
            .copied()
            .find(|&s| self.scope(s).file_id == file_id && self.scope(s).span.contains(offset))
    }

    /// Member named `name` in the chains of `start` (fields before methods).
    fn member_lookup(&self, chains: &[usize], name: &str, fields: bool, methods: bool) -> Option<DefId> {
        if fields {
            for &ci in chains {
                if let Some(ids) = self.classes[ci].fields.get(name) {
                    return self.earliest(ids);
                }
            }
        }
        if methods {
            for &ci in chains {
                if let Some(ids) = self.classes[ci].methods.get(name) {
                    return self.earliest(ids);
                }
            }
        }
        None
    }

    /// Lookup order for unqualified members: the class and its bases, then
    /// each enclosing class and its bases.
    fn member_scopes(&self, ci: usize) -> Vec<usize> {
        let mut out = self.classes[ci].chain.clone();
        for &oi in &self.classes[ci].outers {
            for &c in &self.classes[oi].chain {
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Resolve the significant token `k` of `file_id`; `sig` holds that
    /// file's non-trivia tokens.
    pub fn resolve(&self, codebase: &Codebase, sig: &[Token], k: usize) -> Resolution {
        match self.resolve_target(codebase, sig, k, 0) {
            Some(target) => Resolution::Resolved(ResolvedReference {
                file_id: sig[k].file_id,
                ref_span: sig[k].span,
                target,
            }),
            None => Resolution::Unresolved,
        }
    }

    /// Resolve the identifier occurrence at `span`.
    pub fn resolve_span(&self, codebase: &Codebase, sig_tokens: &[Vec<Token>], file_id: FileId, span: Span) -> Resolution {
        let sig = &sig_tokens[file_id.0 as usize];
        match sig.binary_search_by_key(&span.start, |t| t.span.start) {
            Ok(k) if sig[k].span == span => self.resolve(codebase, sig, k),
            _ => Resolution::Unresolved,
        }
    }

    fn resolve_target(&self, codebase: &Codebase, sig: &[Token], k: usize, depth: usize) -> Option<DefId> {
        let tok = sig.get(k)?;
        // a definition's own name, including `operator` and `~Name` sites
        if let Some(def) = self.definition_at(tok.file_id, tok.span.start) {
            return Some(def);
        }
        if tok.kind != TokenKind::Identifier || depth > 32 {
            return None;
        }
        let text = &codebase.unit(tok.file_id).text;
        let name = tok.text(text);
        let offset = tok.span.start;
        let ctx = self.class_at(tok.file_id, offset);

        let is_access = k >= 2 && MEMBER_ACCESS.contains(&sig[k - 1].text(text)) && sig[k - 1].kind != TokenKind::Identifier;
        if is_access {
            let q = &sig[k - 2];
            let q_text = q.text(text);
            return match (q.kind, q_text) {
                (TokenKind::Keyword, "this") => ctx.and_then(|ci| self.member_lookup(&self.classes[ci].chain, name, true, true)),
                (TokenKind::Keyword, "base") => {
                    ctx.and_then(|ci| self.member_lookup(&self.classes[ci].chain[1..], name, true, true))
                }
                (TokenKind::Identifier, _) => {
                    if let Some(qdef) = self.resolve_target(codebase, sig, k - 2, depth + 1) {
                        let qd = self.definition(qdef);
                        if qd.kind != DefKind::Type {
                            return None;
                        }
                        let qi = self.class_of_def[&qdef];
                        if let Some(d) = self.member_lookup(&self.classes[qi].chain, name, true, true) {
                            return Some(d);
                        }
                        let nested = format!("{}.{}", self.qualified_of(qi), name);
                        return self.earliest(self.by_qualified_name(&nested));
                    }
                    let chain = dotted_chain(sig, text, k - 2);
                    if self.namespaces.contains(&chain) {
                        self.earliest(self.by_qualified_name(&format!("{chain}.{name}")))
                    } else {
                        None
                    }
                }
                _ => None,
            };
        }

        if let Some(ci) = ctx {
            if let Some(scope) = self.scope_at(ci, tok.file_id, offset).map(|s| self.scope(s)) {
                let locals: Vec<DefId> = scope
                    .locals
                    .iter()
                    .copied()
                    .filter(|&d| {
                        let site = self.definition(d);
                        site.name == name && site.name_span.start < offset
                    })
                    .collect();
                if let Some(d) = self.earliest(&locals) {
                    return Some(d);
                }
                let params: Vec<DefId> = scope.params.iter().copied().filter(|&d| self.definition(d).name == name).collect();
                if let Some(d) = self.earliest(&params) {
                    return Some(d);
                }
            }
            let scopes = self.member_scopes(ci);
            if let Some(d) = self.member_lookup(&scopes, name, true, false) {
                return Some(d);
            }
            if let Some(d) = self.member_lookup(&scopes, name, false, true) {
                return Some(d);
            }
        }
        self.earliest(&self.lookup_type(name, tok.file_id, ctx))
    }

    /// Every identifier occurrence that resolves, excluding definitions'
    /// own names.
    pub fn resolve_all(&self, codebase: &Codebase, sig_tokens: &[Vec<Token>]) -> Vec<ResolvedReference> {
        let mut out = Vec::new();
        for sig in sig_tokens {
            for (k, tok) in sig.iter().enumerate() {
                if tok.kind != TokenKind::Identifier || self.definition_at(tok.file_id, tok.span.start).is_some() {
                    continue;
                }
                if let Resolution::Resolved(r) = self.resolve(codebase, sig, k) {
                    out.push(r);
                }
            }
        }
        out
    }
}

/// `A.B.C` ending at identifier `k`.
fn dotted_chain(sig: &[Token], text: &str, k: usize) -> String {
    let mut parts = vec![sig[k].text(text)];
    let mut i = k;
    while i >= 2 && sig[i - 1].text(text) == "." && sig[i - 2].kind == TokenKind::Identifier {
        parts.push(sig[i - 2].text(text));
        i -= 2;
    }
    parts.reverse();
    parts.join(".")
}
