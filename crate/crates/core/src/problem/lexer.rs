use num_bigint::BigInt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Int(BigInt),
    Sym(char),
    Newline,
    Eof,
}

/// A token with its 1-based source position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

impl Token {
    pub fn error(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.column, message)
    }

    pub fn describe(&self) -> String {
        match &self.tok {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Int(v) => format!("`{v}`"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::Newline => "end of line".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

const SYMBOLS: &str = "{}=;,:+-*/^()[]";

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let chars: Vec<char> = line.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (line, column) = (ln + 1, i + 1);
            let push = |out: &mut Vec<Token>, tok| out.push(Token { tok, line, column });
            if c == '#' {
                break;
            } else if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                push(&mut out, Tok::Ident(chars[start..i].iter().collect()));
            } else if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                push(&mut out, Tok::Int(digits.parse().expect("ASCII digits")));
            } else if SYMBOLS.contains(c) {
                push(&mut out, Tok::Sym(c));
                i += 1;
            } else {
                return Err(Error::parse(line, column, format!("unexpected character `{c}`")));
            }
        }
        out.push(Token {
            tok: Tok::Newline,
            line: ln + 1,
            column: chars.len() + 1,
        });
    }
    let line = out.last().map_or(1, |t| t.line);
    out.push(Token {
        tok: Tok::Eof,
        line,
        column: out.last().map_or(1, |t| t.column),
    });
    Ok(out)
}
