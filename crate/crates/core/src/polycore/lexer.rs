use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Ident(String),
    Int(String),
    Sym(char),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character.
    pub offset: usize,
}

const SYMBOLS: &str = "+-*/^()[];=,";

/// Split `text` into tokens. `#` starts a comment running to end of line.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = text.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (off, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c == '#' {
            while i < bytes.len() && bytes[i].1 != '\n' {
                i += 1;
            }
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push(Token { kind: TokenKind::Int(s), offset: off });
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].1.is_alphanumeric() || bytes[i].1 == '_') {
                i += 1;
            }
            let s: String = bytes[start..i].iter().map(|(_, c)| c).collect();
            out.push(Token { kind: TokenKind::Ident(s), offset: off });
        } else if SYMBOLS.contains(c) {
            out.push(Token { kind: TokenKind::Sym(c), offset: off });
            i += 1;
        } else {
            let (line, col) = line_col(text, off);
            return Err(Error::Parse { line, col, msg: format!("unexpected character '{c}'") });
        }
    }
    Ok(out)
}

/// 1-based line and column of a byte offset.
pub fn line_col(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let col = before.rsplit('\n').next().map_or(0, |s| s.chars().count()) + 1;
    (line, col)
}
