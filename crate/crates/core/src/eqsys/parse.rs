//! Concrete syntax for equation systems.
//!
//! ```text
//! system := prefix ':' conj
//! prefix := (('forall' | 'exists') symlist)+
//! symlist := sym (',' sym)*
//! conj   := atom ('&' atom)*
//! atom   := word '=' word | word 'in' ('E' | 'G') | word 'in' 'V' '(' word ')'
//!         | word 'rR' word | word 'rL' word
//! word   := sym+
//! ```
//!
//! Memberships and the `rR`/`rL` relations desugar into plain equalities;
//! any fresh existentials they need are appended to the end of the prefix.

use super::system::{Equality, EquationSystem, Quantifier, Word};
use super::EqsysError;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Colon,
    Comma,
    Amp,
    Eq,
    LParen,
    RParen,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

const KEYWORDS: [&str; 8] = ["forall", "exists", "in", "rR", "rL", "E", "G", "V"];

fn is_symbol(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some('a'..='z'))
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
        && !KEYWORDS.contains(&name)
}

fn lex(text: &str) -> Result<Vec<Token>, EqsysError> {
    let mut out = Vec::new();
    for (line_idx, line) in text.lines().enumerate() {
        let line_no = line_idx + 1;
        let chars: Vec<(usize, char)> = line.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (_, c) = chars[i];
            let column = i + 1;
            let simple = match c {
                '#' => break,
                c if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                ':' => Some(Tok::Colon),
                ',' => Some(Tok::Comma),
                '&' => Some(Tok::Amp),
                '=' => Some(Tok::Eq),
                '(' => Some(Tok::LParen),
                ')' => Some(Tok::RParen),
                _ => None,
            };
            if let Some(tok) = simple {
                out.push(Token { tok, line: line_no, column });
                i += 1;
                continue;
            }
            if c.is_ascii_alphabetic() {
                let start = i;
                while i < chars.len() && (chars[i].1.is_ascii_alphanumeric() || chars[i].1 == '_') {
                    i += 1;
                }
                let ident: String = chars[start..i].iter().map(|&(_, c)| c).collect();
                out.push(Token { tok: Tok::Ident(ident), line: line_no, column });
                continue;
            }
            return Err(EqsysError::Syntax { line: line_no, column, message: format!("unexpected character `{c}`") });
        }
    }
    Ok(out)
}

/// An atom before desugaring.
enum Atom {
    Equal(Word, Word),
    Idempotent(Word),
    InGroup(Word),
    Inverse(Word, Word),
    RRelated(Word, Word),
    LRelated(Word, Word),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    end: (usize, usize),
    names: Vec<String>,
    quantifiers: Vec<Quantifier>,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|t| &t.tok)
    }

    fn position(&self) -> (usize, usize) {
        self.tokens.get(self.pos).map_or(self.end, |t| (t.line, t.column))
    }

    fn error(&self, message: impl Into<String>) -> EqsysError {
        let (line, column) = self.position();
        EqsysError::Syntax { line, column, message: message.into() }
    }

    fn describe(&self) -> String {
        match self.peek() {
            None => "end of input".into(),
            Some(Tok::Ident(s)) => format!("`{s}`"),
            Some(Tok::Colon) => "`:`".into(),
            Some(Tok::Comma) => "`,`".into(),
            Some(Tok::Amp) => "`&`".into(),
            Some(Tok::Eq) => "`=`".into(),
            Some(Tok::LParen) => "`(`".into(),
            Some(Tok::RParen) => "`)`".into(),
        }
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<(), EqsysError> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error(format!("expected {what}, found {}", self.describe())))
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Some(Tok::Ident(s)) if s == kw) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn peek_symbol(&self) -> Option<&str> {
        match self.peek() {
            Some(Tok::Ident(s)) if is_symbol(s) => Some(s.as_str()),
            _ => None,
        }
    }

    fn prefix(&mut self) -> Result<(), EqsysError> {
        loop {
            let q = if self.eat_keyword("forall") {
                Quantifier::Universal
            } else if self.eat_keyword("exists") {
                Quantifier::Existential
            } else if self.names.is_empty() {
                return Err(self.error(format!("expected `forall` or `exists`, found {}", self.describe())));
            } else {
                return Ok(());
            };
            loop {
                let Some(name) = self.peek_symbol().map(str::to_owned) else {
                    return Err(self.error(format!("expected a symbol, found {}", self.describe())));
                };
                if self.names.contains(&name) {
                    return Err(EqsysError::DuplicateQuantification(name));
                }
                self.pos += 1;
                self.names.push(name);
                self.quantifiers.push(q);
                if !self.eat(&Tok::Comma) {
                    break;
                }
            }
        }
    }

    fn word(&mut self) -> Result<Word, EqsysError> {
        let mut word = Vec::new();
        while let Some(name) = self.peek_symbol() {
            let idx = self
                .names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| EqsysError::UnquantifiedSymbol(name.to_owned()))?;
            word.push(idx);
            self.pos += 1;
        }
        if word.is_empty() {
            if matches!(self.peek(), Some(Tok::Ident(s)) if !KEYWORDS.contains(&s.as_str())) {
                return Err(self.error(format!("{} is not a valid symbol", self.describe())));
            }
            let (line, column) = self.position();
            return Err(EqsysError::EmptyWord { line, column });
        }
        Ok(word)
    }

    fn atom(&mut self) -> Result<Atom, EqsysError> {
        let lhs = self.word()?;
        if self.eat(&Tok::Eq) {
            return Ok(Atom::Equal(lhs, self.word()?));
        }
        if self.eat_keyword("rR") {
            return Ok(Atom::RRelated(lhs, self.word()?));
        }
        if self.eat_keyword("rL") {
            return Ok(Atom::LRelated(lhs, self.word()?));
        }
        if self.eat_keyword("in") {
            if self.eat_keyword("E") {
                return Ok(Atom::Idempotent(lhs));
            }
            if self.eat_keyword("G") {
                return Ok(Atom::InGroup(lhs));
            }
            if self.eat_keyword("V") {
                self.expect(Tok::LParen, "`(`")?;
                let of = self.word()?;
                self.expect(Tok::RParen, "`)`")?;
                return Ok(Atom::Inverse(lhs, of));
            }
            return Err(self.error(format!("expected `E`, `G` or `V`, found {}", self.describe())));
        }
        Err(self.error(format!("expected `=`, `in`, `rR` or `rL`, found {}", self.describe())))
    }

    fn fresh(&mut self, stem: &str) -> usize {
        let mut k = 1;
        loop {
            let candidate = format!("{stem}{k}");
            if !self.names.contains(&candidate) {
                self.names.push(candidate);
                self.quantifiers.push(Quantifier::Existential);
                return self.names.len() - 1;
            }
            k += 1;
        }
    }

    fn desugar(&mut self, atom: Atom, out: &mut Vec<Equality>) {
        let cat = |a: &Word, b: &Word| -> Word { a.iter().chain(b).copied().collect() };
        match atom {
            Atom::Equal(l, r) => out.push(Equality::new(l, r)),
            Atom::Idempotent(w) => out.push(Equality::new(cat(&w, &w), w)),
            Atom::Inverse(v, u) => {
                out.push(Equality::new(cat(&cat(&u, &v), &u), u.clone()));
                out.push(Equality::new(cat(&cat(&v, &u), &v), v));
            }
            Atom::InGroup(w) => {
                let y = vec![self.fresh("y")];
                self.desugar(Atom::Inverse(y.clone(), w.clone()), out);
                out.push(Equality::new(cat(&w, &y), cat(&y, &w)));
            }
            Atom::RRelated(a, b) => {
                let u = vec![self.fresh("u")];
                let v = vec![self.fresh("v")];
                out.push(Equality::new(cat(&a, &u), b.clone()));
                out.push(Equality::new(cat(&b, &v), a));
            }
            Atom::LRelated(a, b) => {
                let u = vec![self.fresh("u")];
                let v = vec![self.fresh("v")];
                out.push(Equality::new(cat(&u, &a), b.clone()));
                out.push(Equality::new(cat(&v, &b), a));
            }
        }
    }
}

pub fn parse(text: &str) -> Result<EquationSystem, EqsysError> {
    let tokens = lex(text)?;
    let end = (text.lines().count().max(1), text.lines().last().map_or(0, |l| l.chars().count()) + 1);
    let mut p = Parser { tokens, pos: 0, end, names: Vec::new(), quantifiers: Vec::new() };
    p.prefix()?;
    p.expect(Tok::Colon, "`:`")?;
    let mut atoms = vec![p.atom()?];
    while p.eat(&Tok::Amp) {
        atoms.push(p.atom()?);
    }
    if p.peek().is_some() {
        return Err(p.error(format!("expected `&` or end of input, found {}", p.describe())));
    }
    let mut equalities = Vec::new();
    for atom in atoms {
        p.desugar(atom, &mut equalities);
    }
    let symbols = p.names.into_iter().zip(p.quantifiers).collect();
    EquationSystem::from_parts(symbols, equalities, Some(text.to_owned()))
}
