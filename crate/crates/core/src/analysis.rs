//! Runs every stage from source units to symbols and metrics.

use crate::lexer::{tokenize, Token};
use crate::metrics::{classify_lines, summarize, CodebaseSummary, LineClass};
use crate::model::{Codebase, Diagnostic};
use crate::parser::{collect_classes, parse_unit, ClassDecl};
use crate::resolver::{build_symbol_table, significant_tokens, ResolvedReference, SymbolTable};

#[derive(Debug, Clone)]
pub struct Analysis {
    pub codebase: Codebase,
    /// All tokens per file, indexed by file id.
    pub tokens: Vec<Vec<Token>>,
    /// Non-trivia tokens per file.
    pub significant: Vec<Vec<Token>>,
    pub usings: Vec<Vec<String>>,
    pub classes: Vec<ClassDecl>,
    pub line_classes: Vec<Vec<LineClass>>,
    pub summary: CodebaseSummary,
    pub symbols: SymbolTable,
    pub references: Vec<ResolvedReference>,
    pub diagnostics: Vec<Diagnostic>,
}

impl Analysis {
    pub fn run(codebase: Codebase) -> Analysis {
        let mut diagnostics = Vec::new();
        let mut tokens = Vec::with_capacity(codebase.units.len());
        for unit in &codebase.units {
            let lexed = tokenize(unit);
            diagnostics.extend(lexed.diagnostics);
            tokens.push(lexed.tokens);
        }
        let parsed: Vec<_> = codebase.units.iter().zip(&tokens).map(|(u, t)| parse_unit(u, t)).collect();
        let usings = parsed.iter().map(|p| p.usings.clone()).collect::<Vec<_>>();
        for p in &parsed {
            diagnostics.extend(p.diagnostics.iter().cloned());
        }
        let (classes, collect_diags) = collect_classes(&codebase, &parsed);
        diagnostics.extend(collect_diags);

        let line_classes: Vec<_> = codebase.units.iter().zip(&tokens).map(|(u, t)| classify_lines(u, t)).collect();
        let summary = summarize(&codebase, &classes, &line_classes);

        let significant: Vec<_> = tokens.iter().map(|t| significant_tokens(t)).collect();
        let (symbols, symbol_diags) = build_symbol_table(&codebase, &classes, &usings, &significant);
        diagnostics.extend(symbol_diags);
        let references = symbols.resolve_all(&codebase, &significant);

        Analysis {
            codebase,
            tokens,
            significant,
            usings,
            classes,
            line_classes,
            summary,
            symbols,
            references,
            diagnostics,
        }
    }
}
