//! Lossless tokenizer for C#-style source.
//!
//! Every byte of the input belongs to exactly one token, so joining token
//! texts in order reproduces the file. Malformed input never fails: an
//! unterminated string or comment runs to end of file and is reported as a
//! diagnostic.

use std::collections::HashSet;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::model::{Diagnostic, FileId, SourceUnit, Span};

const KEYWORD_ASSET: &str = include_str!("../assets/csharp_keywords.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TokenKind {
    Keyword,
    Identifier,
    StringLiteral,
    CharLiteral,
    NumberLiteral,
    Comment,
    Operator,
    Punctuation,
    Whitespace,
    Unknown,
}

impl TokenKind {
    /// Whitespace and comments carry no syntax.
    pub fn is_trivia(self) -> bool {
        matches!(self, TokenKind::Whitespace | TokenKind::Comment)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub span: Span,
    pub file_id: FileId,
}

impl Token {
    pub fn text<'a>(&self, source: &'a str) -> &'a str {
        &source[self.span.start..self.span.end]
    }
}

#[derive(Debug, Clone, Default)]
pub struct Lexed {
    pub tokens: Vec<Token>,
    pub diagnostics: Vec<Diagnostic>,
}

/// The bundled keyword list, sorted.
pub fn keywords() -> &'static [&'static str] {
    static LIST: OnceLock<Vec<&'static str>> = OnceLock::new();
    LIST.get_or_init(|| {
        KEYWORD_ASSET
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .collect()
    })
}

pub fn is_keyword(word: &str) -> bool {
    static SET: OnceLock<HashSet<&'static str>> = OnceLock::new();
    SET.get_or_init(|| keywords().iter().copied().collect())
        .contains(word)
}

const OPERATORS: &[&str] = &[
    "??=", "<<=", "=>", "==", "!=", "<=", ">=", "&&", "||", "++", "--", "+=", "-=", "*=", "/=",
    "%=", "&=", "|=", "^=", "<<", "??", "?.", "->", "::", "+", "-", "*", "/", "%", "&", "|", "^",
    "!", "~", "=", "<", ">", "?",
];

const PUNCTUATION: &[u8] = b"{}()[];,.:";

pub fn tokenize(unit: &SourceUnit) -> Lexed {
    tokenize_str(&unit.text, unit.file_id)
}

pub fn tokenize_str(text: &str, file_id: FileId) -> Lexed {
    let mut lexer = Lexer {
        text,
        bytes: text.as_bytes(),
        pos: 0,
        file_id,
        out: Lexed::default(),
    };
    lexer.run();
    lexer.out
}

struct Lexer<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
    file_id: FileId,
    out: Lexed,
}

fn is_ident_start(c: char) -> bool {
    c == '_' || c.is_alphabetic()
}

fn is_ident_continue(c: char) -> bool {
    c == '_' || c.is_alphanumeric()
}

impl<'a> Lexer<'a> {
    fn peek_char(&self, at: usize) -> Option<char> {
        self.text.get(at..).and_then(|s| s.chars().next())
    }

    fn byte(&self, at: usize) -> Option<u8> {
        self.bytes.get(at).copied()
    }

    fn push(&mut self, kind: TokenKind, end: usize) {
        debug_assert!(end > self.pos);
        self.out.tokens.push(Token {
            kind,
            span: Span::new(self.pos, end),
            file_id: self.file_id,
        });
        self.pos = end;
    }

    fn unterminated(&mut self, kind: TokenKind, what: &str) {
        self.out.diagnostics.push(Diagnostic::warning(
            self.file_id,
            Span::new(self.pos, self.bytes.len()),
            format!("unterminated {what}"),
        ));
        self.push(kind, self.bytes.len());
    }

    fn at_line_start(&self) -> bool {
        let line_start = self.text[..self.pos].rfind('\n').map_or(0, |i| i + 1);
        self.text[line_start..self.pos].trim().is_empty()
    }

    /// End of the current line, excluding `\n` and a `\r` right before it.
    fn line_end(&self, from: usize) -> usize {
        match self.text[from..].find('\n') {
            Some(i) => {
                let nl = from + i;
                if nl > from && self.bytes[nl - 1] == b'\r' {
                    nl - 1
                } else {
                    nl
                }
            }
            None => self.bytes.len(),
        }
    }

    fn run(&mut self) {
        while self.pos < self.bytes.len() {
            let c = self.peek_char(self.pos).expect("pos on a char boundary");
            let next = self.byte(self.pos + 1);
            match c {
                c if c.is_whitespace() => {
                    let end = self.text[self.pos..]
                        .char_indices()
                        .find(|&(_, ch)| !ch.is_whitespace())
                        .map_or(self.bytes.len(), |(i, _)| self.pos + i);
                    self.push(TokenKind::Whitespace, end);
                }
                '/' if next == Some(b'/') => {
                    let end = self.line_end(self.pos);
                    self.push(TokenKind::Comment, end);
                }
                '/' if next == Some(b'*') => match self.text[self.pos + 2..].find("*/") {
                    Some(i) => self.push(TokenKind::Comment, self.pos + 2 + i + 2),
                    None => self.unterminated(TokenKind::Comment, "block comment"),
                },
                '#' if self.at_line_start() => {
                    let end = self.line_end(self.pos);
                    self.push(TokenKind::Comment, end);
                }
                '"' => self.regular_string(self.pos + 1),
                '\'' => self.char_literal(),
                '@' | '$' => self.prefixed(),
                c if c.is_ascii_digit() => self.number(),
                '.' if next.is_some_and(|b| b.is_ascii_digit()) => self.number(),
                c if is_ident_start(c) => {
                    let end = self.ident_end(self.pos);
                    let kind = if is_keyword(&self.text[self.pos..end]) {
                        TokenKind::Keyword
                    } else {
                        TokenKind::Identifier
                    };
                    self.push(kind, end);
                }
                c if c.is_ascii() && PUNCTUATION.contains(&(c as u8)) => {
                    self.push(TokenKind::Punctuation, self.pos + 1)
                }
                _ => {
                    let rest = &self.text[self.pos..];
                    match OPERATORS.iter().find(|op| rest.starts_with(**op)) {
                        Some(op) => self.push(TokenKind::Operator, self.pos + op.len()),
                        None => self.push(TokenKind::Unknown, self.pos + c.len_utf8()),
                    }
                }
            }
        }
    }

    fn ident_end(&self, from: usize) -> usize {
        self.text[from..]
            .char_indices()
            .find(|&(_, ch)| !is_ident_continue(ch))
            .map_or(self.bytes.len(), |(i, _)| from + i)
    }

    /// `@"verbatim"`, `$"interpolated"`, `$@"..."`, `@$"..."` and `@ident`.
    fn prefixed(&mut self) {
        let rest = &self.text[self.pos..];
        if rest.starts_with("@\"") {
            self.verbatim_string(self.pos + 2);
        } else if rest.starts_with("$@\"") || rest.starts_with("@$\"") {
            self.verbatim_string(self.pos + 3);
        } else if rest.starts_with("$\"") {
            self.regular_string(self.pos + 2);
        } else if rest.starts_with('@') && self.peek_char(self.pos + 1).is_some_and(is_ident_start) {
            let end = self.ident_end(self.pos + 1);
            self.push(TokenKind::Identifier, end);
        } else {
            self.push(TokenKind::Unknown, self.pos + 1);
        }
    }

    /// Body starts at `from`, just past the opening quote.
    fn regular_string(&mut self, from: usize) {
        let mut i = from;
        while let Some(b) = self.byte(i) {
            match b {
                b'\\' => i += 2,
                b'"' => {
                    self.push(TokenKind::StringLiteral, i + 1);
                    return;
                }
                _ => i += 1,
            }
        }
        self.unterminated(TokenKind::StringLiteral, "string literal");
    }

    fn verbatim_string(&mut self, from: usize) {
        let mut i = from;
        while let Some(b) = self.byte(i) {
            if b == b'"' {
                if self.byte(i + 1) == Some(b'"') {
                    i += 2;
                    continue;
                }
                self.push(TokenKind::StringLiteral, i + 1);
                return;
            }
            i += 1;
        }
        self.unterminated(TokenKind::StringLiteral, "verbatim string literal");
    }

    fn char_literal(&mut self) {
        let mut i = self.pos + 1;
        while let Some(b) = self.byte(i) {
            match b {
                b'\\' => i += 2,
                b'\'' => {
                    self.push(TokenKind::CharLiteral, i + 1);
                    return;
                }
                _ => i += 1,
            }
        }
        self.unterminated(TokenKind::CharLiteral, "character literal");
    }

    fn number(&mut self) {
        let hex = self.text[self.pos..].starts_with("0x") || self.text[self.pos..].starts_with("0X");
        let mut i = self.pos;
        while let Some(b) = self.byte(i) {
            let take = b.is_ascii_alphanumeric()
                || b == b'_'
                || (b == b'.' && self.byte(i + 1).is_some_and(|n| n.is_ascii_digit()))
                || ((b == b'+' || b == b'-')
                    && !hex
                    && i > self.pos
                    && matches!(self.bytes[i - 1], b'e' | b'E')
                    && self.byte(i + 1).is_some_and(|n| n.is_ascii_digit()));
            if !take {
                break;
            }
            i += 1;
        }
        self.push(TokenKind::NumberLiteral, i);
    }
}
