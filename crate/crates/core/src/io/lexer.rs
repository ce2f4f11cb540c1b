//! Tokenizer shared by the query language parsers.

use super::DslError;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Ident(String),
    Number(String),
    LParen,
    RParen,
    Amp,
    Pipe,
    Tilde,
    Arrow,
    Ge,
    Le,
    Slash,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Number(s) => format!("number `{s}`"),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::Amp => "`&`".into(),
            Tok::Pipe => "`|`".into(),
            Tok::Tilde => "`~`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Ge => "`>=`".into(),
            Tok::Le => "`<=`".into(),
            Tok::Slash => "`/`".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Token {
    pub tok: Tok,
    /// 1-based character column.
    pub column: usize,
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Whether `name` is usable as an argument name.
pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(is_ident_start) && chars.all(is_ident_char)
}

/// Words with a fixed meaning in formulas and queries.
pub const RESERVED_WORDS: &[&str] = &[
    "T", "true", "false", "label", "and", "or", "not", "implies", "given",
];

pub(crate) fn tokenize(
    text: &str,
    line: usize,
    column_offset: usize,
) -> Result<Vec<Token>, DslError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let column = column_offset + i + 1;
        let single = |tok| Token { tok, column };
        match c {
            c if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '(' => out.push(single(Tok::LParen)),
            ')' => out.push(single(Tok::RParen)),
            '&' | '∧' => out.push(single(Tok::Amp)),
            '|' | '∨' => out.push(single(Tok::Pipe)),
            '~' | '!' | '¬' => out.push(single(Tok::Tilde)),
            '/' => out.push(single(Tok::Slash)),
            '→' => out.push(single(Tok::Arrow)),
            '≥' => out.push(single(Tok::Ge)),
            '≤' => out.push(single(Tok::Le)),
            '-' | '>' | '<' => {
                let next = chars.get(i + 1).copied();
                let tok = match (c, next) {
                    ('-', Some('>')) => Tok::Arrow,
                    ('>', Some('=')) => Tok::Ge,
                    ('<', Some('=')) => Tok::Le,
                    _ => {
                        return Err(DslError::syntax(
                            line,
                            column,
                            format!("unexpected character `{c}`"),
                        ));
                    }
                };
                out.push(single(tok));
                i += 2;
                continue;
            }
            c if c.is_ascii_digit() || c == '.' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_digit() || chars[i] == '.') {
                    i += 1;
                }
                let lexeme: String = chars[start..i].iter().collect();
                if lexeme.matches('.').count() > 1
                    || lexeme.starts_with('.')
                    || lexeme.ends_with('.')
                {
                    return Err(DslError::syntax(
                        line,
                        column,
                        format!("malformed number `{lexeme}`"),
                    ));
                }
                out.push(Token {
                    tok: Tok::Number(lexeme),
                    column,
                });
                continue;
            }
            c if is_ident_start(c) => {
                let start = i;
                while i < chars.len() && is_ident_char(chars[i]) {
                    i += 1;
                }
                out.push(Token {
                    tok: Tok::Ident(chars[start..i].iter().collect()),
                    column,
                });
                continue;
            }
            other => {
                return Err(DslError::syntax(
                    line,
                    column,
                    format!("unexpected character `{other}`"),
                ));
            }
        }
        i += 1;
    }
    Ok(out)
}
