//! Regular expressions over event tokens.
//!
//! Surface grammar:
//!
//! ```text
//! regex   := union ;
//! union   := concat { "+" concat } ;
//! concat  := star { ("." star) | star } ;      (* juxtaposition allowed *)
//! star    := atom { "*" } ;
//! atom    := IDENT | "EPS" | "NULL" | "(" regex ")" ;
//! IDENT   := [A-Za-z][A-Za-z0-9_]* excluding keywords ;
//! ```
//!
//! `+` is union, never "one or more". Whitespace between tokens is ignored and
//! `#` starts a comment running to the end of the line. Concatenation and
//! union are left-associative.

use std::fmt;

use thiserror::Error;

use crate::symbol::{Alphabet, Symbol};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RegexAst {
    EmptySet,
    Epsilon,
    Sym(Symbol),
    Concat(Box<RegexAst>, Box<RegexAst>),
    Union(Box<RegexAst>, Box<RegexAst>),
    Star(Box<RegexAst>),
}

impl RegexAst {
    pub fn sym(symbol: Symbol) -> Self {
        RegexAst::Sym(symbol)
    }

    pub fn concat(left: RegexAst, right: RegexAst) -> Self {
        RegexAst::Concat(Box::new(left), Box::new(right))
    }

    pub fn union(left: RegexAst, right: RegexAst) -> Self {
        RegexAst::Union(Box::new(left), Box::new(right))
    }

    pub fn star(inner: RegexAst) -> Self {
        RegexAst::Star(Box::new(inner))
    }

    pub fn node_count(&self) -> usize {
        match self {
            RegexAst::EmptySet | RegexAst::Epsilon | RegexAst::Sym(_) => 1,
            RegexAst::Concat(l, r) | RegexAst::Union(l, r) => 1 + l.node_count() + r.node_count(),
            RegexAst::Star(inner) => 1 + inner.node_count(),
        }
    }

    /// Symbols in order of first (leftmost) occurrence.
    pub fn alphabet(&self) -> Alphabet {
        fn walk(ast: &RegexAst, out: &mut Alphabet) {
            match ast {
                RegexAst::EmptySet | RegexAst::Epsilon => {}
                RegexAst::Sym(s) => {
                    out.insert(s.clone());
                }
                RegexAst::Concat(l, r) | RegexAst::Union(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
                RegexAst::Star(inner) => walk(inner, out),
            }
        }
        let mut out = Alphabet::new();
        walk(self, &mut out);
        out
    }
}

/// Regex text together with an optional declared alphabet.
#[derive(Debug, Clone)]
pub struct RegexSource<'a> {
    pub text: &'a str,
    pub declared_alphabet: Option<&'a Alphabet>,
}

impl<'a> RegexSource<'a> {
    pub fn new(text: &'a str) -> Self {
        RegexSource {
            text,
            declared_alphabet: None,
        }
    }

    pub fn with_alphabet(text: &'a str, alphabet: &'a Alphabet) -> Self {
        RegexSource {
            text,
            declared_alphabet: Some(alphabet),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegexError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("undeclared symbol `{symbol}` at byte {offset}")]
    UndeclaredSymbol { symbol: Symbol, offset: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(Symbol),
    Eps,
    Null,
    LParen,
    RParen,
    Star,
    Dot,
    Plus,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "identifier `{s}`"),
            Token::Eps => f.write_str("`EPS`"),
            Token::Null => f.write_str("`NULL`"),
            Token::LParen => f.write_str("`(`"),
            Token::RParen => f.write_str("`)`"),
            Token::Star => f.write_str("`*`"),
            Token::Dot => f.write_str("`.`"),
            Token::Plus => f.write_str("`+`"),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> RegexError {
    RegexError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, RegexError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        let single = match b {
            b'(' => Some(Token::LParen),
            b')' => Some(Token::RParen),
            b'*' => Some(Token::Star),
            b'.' => Some(Token::Dot),
            b'+' => Some(Token::Plus),
            _ => None,
        };
        if let Some(token) = single {
            tokens.push((i, token));
            i += 1;
        } else if b.is_ascii_whitespace() {
            i += 1;
        } else if b == b'#' {
            while i < bytes.len() && bytes[i] != b'\n' {
                i += 1;
            }
        } else if b.is_ascii_alphabetic() {
            let begin = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            let word = &text[begin..i];
            let token = match word {
                "EPS" => Token::Eps,
                "NULL" => Token::Null,
                _ => Token::Ident(Symbol::new(word).expect("lexed identifier is a valid token")),
            };
            tokens.push((begin, token));
        } else {
            let ch = text[i..].chars().next().unwrap_or('?');
            return Err(syntax(i, format!("unexpected character {ch:?}")));
        }
    }
    Ok(tokens)
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    declared: Option<&'a Alphabet>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn union(&mut self) -> Result<RegexAst, RegexError> {
        let mut left = self.concat()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            let right = self.concat()?;
            left = RegexAst::union(left, right);
        }
        Ok(left)
    }

    fn concat(&mut self) -> Result<RegexAst, RegexError> {
        let mut left = self.star()?;
        loop {
            match self.peek() {
                Some(Token::Dot) => {
                    self.pos += 1;
                }
                Some(Token::Ident(_) | Token::Eps | Token::Null | Token::LParen) => {}
                _ => return Ok(left),
            }
            let right = self.star()?;
            left = RegexAst::concat(left, right);
        }
    }

    fn star(&mut self) -> Result<RegexAst, RegexError> {
        let mut inner = self.atom()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            inner = RegexAst::star(inner);
        }
        Ok(inner)
    }

    fn atom(&mut self) -> Result<RegexAst, RegexError> {
        let offset = self.offset();
        let Some(token) = self.peek().cloned() else {
            return Err(syntax(offset, "unexpected end of input"));
        };
        self.pos += 1;
        match token {
            Token::Eps => Ok(RegexAst::Epsilon),
            Token::Null => Ok(RegexAst::EmptySet),
            Token::Ident(symbol) => {
                if let Some(declared) = self.declared {
                    if !declared.contains(&symbol) {
                        return Err(RegexError::UndeclaredSymbol { symbol, offset });
                    }
                }
                Ok(RegexAst::Sym(symbol))
            }
            Token::LParen => {
                let inner = self.union()?;
                if self.peek() == Some(&Token::RParen) {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(syntax(self.offset(), "expected `)`"))
                }
            }
            other => Err(syntax(offset, format!("unexpected {other}"))),
        }
    }
}

/// Parses regex text. Precedence is `*` over concatenation over `+`.
pub fn parse_regex(src: &RegexSource<'_>) -> Result<RegexAst, RegexError> {
    let tokens = tokenize(src.text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty expression"));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: src.text.len(),
        declared: src.declared_alphabet,
    };
    let ast = parser.union()?;
    if let Some(token) = parser.peek() {
        return Err(syntax(parser.offset(), format!("unexpected {token}")));
    }
    Ok(ast)
}

impl std::str::FromStr for RegexAst {
    type Err = RegexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_regex(&RegexSource::new(s))
    }
}

/// Canonical text: explicit `.` for every concatenation, star operands always
/// parenthesized, otherwise only the parentheses needed to reparse the same tree.
pub fn print_regex(ast: &RegexAst) -> String {
    let mut out = String::new();
    write_union(ast, &mut out);
    out
}

fn write_union(ast: &RegexAst, out: &mut String) {
    match ast {
        RegexAst::Union(l, r) => {
            write_union(l, out);
            out.push_str(" + ");
            // Right-nested unions need grouping to survive left-associative reparsing.
            if matches!(**r, RegexAst::Union(..)) {
                write_grouped(r, out);
            } else {
                write_concat(r, out);
            }
        }
        _ => write_concat(ast, out),
    }
}

fn write_concat(ast: &RegexAst, out: &mut String) {
    match ast {
        RegexAst::Concat(l, r) => {
            write_concat(l, out);
            out.push_str(" . ");
            if matches!(**r, RegexAst::Concat(..)) {
                write_grouped(r, out);
            } else {
                write_concat(r, out);
            }
        }
        RegexAst::Union(..) => write_grouped(ast, out),
        _ => write_atom(ast, out),
    }
}

fn write_atom(ast: &RegexAst, out: &mut String) {
    match ast {
        RegexAst::EmptySet => out.push_str("NULL"),
        RegexAst::Epsilon => out.push_str("EPS"),
        RegexAst::Sym(s) => out.push_str(s.as_str()),
        RegexAst::Star(inner) => {
            write_grouped(inner, out);
            out.push('*');
        }
        RegexAst::Concat(..) | RegexAst::Union(..) => write_grouped(ast, out),
    }
}

fn write_grouped(ast: &RegexAst, out: &mut String) {
    out.push('(');
    write_union(ast, out);
    out.push(')');
}

impl fmt::Display for RegexAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_regex(self))
    }
}
