//! Text formats: polynomial expressions and presentation files.

use std::fmt;

use num_bigint::BigInt;

use crate::order::{Grading, MonomialOrder, WordOrder, WordOrderKind};
use crate::poly::Poly;
use crate::presentation::Presentation;
use crate::scalar::Field;
use crate::word::Word;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn at(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError { line, col, msg: msg.into() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

struct Lexer<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col0: usize,
    names: &'a [String],
    field: Field,
}

impl<'a> Lexer<'a> {
    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::at(self.line, self.col0 + self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<BigInt, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected an integer"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digits"))
    }

    fn name(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_ascii_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.chars[start].is_ascii_digit() {
            self.pos = start;
            return Err(self.err("expected a generator name"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        match self.names.iter().position(|n| *n == s) {
            Some(i) => Ok(i),
            None => {
                self.pos = start;
                Err(self.err(format!("unknown generator '{s}'")))
            }
        }
    }

    fn factor(&mut self, w: &mut Word) -> Result<(), ParseError> {
        let g = self.name()?;
        let mut e = 1usize;
        if self.eat('^') {
            let at = self.pos;
            let n = self.integer()?;
            e = usize::try_from(&n).ok().filter(|&e| e >= 1 && e <= 4096).ok_or_else(|| {
                ParseError::at(self.line, self.col0 + at + 1, "exponent must be a positive integer")
            })?;
        }
        for _ in 0..e {
            w.push(g);
        }
        Ok(())
    }

    fn term(&mut self, negative: bool) -> Result<(Word, crate::scalar::Scalar), ParseError> {
        let mut coeff = self.field.one();
        let mut word = Word::one();
        let starts_with_digit = matches!(self.peek(), Some(c) if c.is_ascii_digit());
        if starts_with_digit {
            let num = self.integer()?;
            let mut den = BigInt::from(1);
            if self.eat('/') {
                let at = self.pos;
                den = self.integer()?;
                if den == BigInt::from(0) {
                    return Err(ParseError::at(self.line, self.col0 + at + 1, "zero denominator"));
                }
            }
            coeff = self
                .field
                .ratio(&num, &den)
                .map_err(|_| self.err("denominator vanishes in the coefficient field"))?;
            if self.eat('*') {
                self.factor(&mut word)?;
                while self.eat('*') {
                    self.factor(&mut word)?;
                }
            }
        } else {
            self.factor(&mut word)?;
            while self.eat('*') {
                self.factor(&mut word)?;
            }
        }
        if negative {
            coeff = -coeff;
        }
        Ok((word, coeff))
    }

    fn poly(&mut self) -> Result<Poly, ParseError> {
        let mut p = Poly::zero();
        let mut negative = false;
        if self.eat('-') {
            negative = true;
        } else {
            self.eat('+');
        }
        loop {
            let (w, c) = self.term(negative)?;
            p.add_term(w, c);
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    negative = false;
                }
                Some('-') => {
                    self.pos += 1;
                    negative = true;
                }
                Some(c) => return Err(self.err(format!("unexpected '{c}'"))),
            }
        }
        Ok(p)
    }
}

fn parse_poly_at(text: &str, names: &[String], field: Field, line: usize, col0: usize) -> Result<Poly, ParseError> {
    let mut lx = Lexer { chars: text.chars().collect(), pos: 0, line, col0, names, field };
    if lx.peek().is_none() {
        return Err(lx.err("empty expression"));
    }
    lx.poly()
}

/// Parse a polynomial over the generators `names`.
pub fn parse_poly(text: &str, names: &[String], field: Field) -> Result<Poly, ParseError> {
    parse_poly_at(text, names, field, 1, 0)
}

/// Parse a single word such as `x*y^2` or `1`.
pub fn parse_word(text: &str, names: &[String], field: Field) -> Result<Word, ParseError> {
    let p = parse_poly(text, names, field)?;
    let first = p.terms().next().map(|(w, c)| (w.clone(), c.is_one()));
    match first {
        Some((w, true)) if p.len() == 1 => Ok(w),
        _ => Err(ParseError::at(1, 1, format!("'{}' is not a word", text.trim()))),
    }
}

/// Canonical rendering: terms in descending order, unit coefficients
/// omitted, powers folded.
pub fn render_poly<O: MonomialOrder>(f: &Poly, names: &[String], order: &O) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, (w, c)) in f.sorted_terms(order).into_iter().enumerate() {
        let neg = c.is_negative();
        let a = c.abs();
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        if w.is_one() {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&w.render(names));
        } else {
            out.push_str(&format!("{a}*{}", w.render(names)));
        }
    }
    out
}

fn valid_name(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_field(tok: &str, line: usize, col: usize) -> Result<Field, ParseError> {
    if tok == "Q" || tok == "QQ" {
        return Ok(Field::Rational);
    }
    let digits = tok.strip_prefix("GF").or_else(|| tok.strip_prefix('F'));
    match digits.and_then(|d| d.parse::<u64>().ok()) {
        Some(p) => Field::prime(p).map_err(|e| ParseError::at(line, col, e.to_string())),
        None => Err(ParseError::at(line, col, format!("unknown field '{tok}' (expected Q or F<p>)"))),
    }
}

/// Parse a presentation file.
pub fn parse_presentation(text: &str) -> Result<Presentation, ParseError> {
    let mut field = Field::Rational;
    let mut names: Option<Vec<String>> = None;
    let mut weights: Option<Vec<u32>> = None;
    let mut order: Option<(WordOrderKind, Vec<usize>)> = None;
    let mut rels: Vec<(usize, usize, String)> = Vec::new();
    let mut seen_field = false;

    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (kw, rest) = match trimmed.find(char::is_whitespace) {
            Some(i) => (&trimmed[..i], &trimmed[i..]),
            None => (trimmed, ""),
        };
        let rest_col = indent + kw.len();
        let col = indent + 1;
        let toks: Vec<&str> = rest.split_whitespace().collect();
        let need_names = |names: &Option<Vec<String>>| {
            names.clone().ok_or_else(|| ParseError::at(line, col, format!("'{kw}' before 'gens'")))
        };
        match kw {
            "field" => {
                if seen_field {
                    return Err(ParseError::at(line, col, "duplicate 'field' line"));
                }
                if toks.len() != 1 {
                    return Err(ParseError::at(line, col, "expected 'field Q' or 'field F<p>'"));
                }
                field = parse_field(toks[0], line, rest_col + 2)?;
                seen_field = true;
            }
            "gens" => {
                if names.is_some() {
                    return Err(ParseError::at(line, col, "duplicate 'gens' line"));
                }
                if toks.is_empty() {
                    return Err(ParseError::at(line, col, "no generators given"));
                }
                if toks.len() > 255 {
                    return Err(ParseError::at(line, col, "too many generators"));
                }
                let mut ns: Vec<String> = Vec::new();
                for t in &toks {
                    if !valid_name(t) {
                        return Err(ParseError::at(line, col, format!("invalid generator name '{t}'")));
                    }
                    if ns.iter().any(|n| n == t) {
                        return Err(ParseError::at(line, col, format!("duplicate generator '{t}'")));
                    }
                    ns.push(t.to_string());
                }
                names = Some(ns);
            }
            "deg" => {
                let ns = need_names(&names)?;
                if toks.len() != ns.len() {
                    return Err(ParseError::at(line, col, "one weight per generator expected"));
                }
                let mut ws = Vec::new();
                for t in &toks {
                    match t.parse::<u32>() {
                        Ok(w) if w >= 1 => ws.push(w),
                        _ => return Err(ParseError::at(line, col, format!("weight '{t}' must be a positive integer"))),
                    }
                }
                weights = Some(ws);
            }
            "order" => {
                let ns = need_names(&names)?;
                let Some((kind_tok, gens)) = toks.split_first() else {
                    return Err(ParseError::at(line, col, "expected 'order deglex|degrevlex <gens>'"));
                };
                let kind: WordOrderKind =
                    kind_tok.parse().map_err(|e: crate::Error| ParseError::at(line, col, e.to_string()))?;
                let prec = if gens.is_empty() {
                    (0..ns.len()).collect()
                } else {
                    let mut prec = Vec::new();
                    for t in gens {
                        match ns.iter().position(|n| n == t) {
                            Some(i) if !prec.contains(&i) => prec.push(i),
                            Some(_) => return Err(ParseError::at(line, col, format!("generator '{t}' listed twice"))),
                            None => return Err(ParseError::at(line, col, format!("unknown generator '{t}'"))),
                        }
                    }
                    if prec.len() != ns.len() {
                        return Err(ParseError::at(line, col, "order must list every generator"));
                    }
                    prec
                };
                order = Some((kind, prec));
            }
            "rel" => {
                need_names(&names)?;
                rels.push((line, rest_col, rest.to_string()));
            }
            _ => return Err(ParseError::at(line, col, format!("unknown directive '{kw}'"))),
        }
    }

    let names = names.ok_or_else(|| ParseError::at(1, 1, "missing 'gens' line"))?;
    let n = names.len();
    let grading = Grading::new(weights.unwrap_or_else(|| vec![1; n])).expect("weights checked");
    let (kind, prec) = order.unwrap_or((WordOrderKind::DegLex, (0..n).collect()));
    let order = WordOrder::new(kind, prec, grading.clone()).expect("precedence checked");
    let mut relations = Vec::new();
    for (line, col0, src) in rels {
        let p = parse_poly_at(&src, &names, field, line, col0)?;
        if p.is_zero() {
            return Err(ParseError::at(line, col0 + 1, "relation is the zero polynomial"));
        }
        relations.push(p);
    }
    Ok(Presentation { field, names, grading, order, relations })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parse_and_render() {
        let ns = names(&["X1", "X2", "X3"]);
        let o = WordOrder::deglex(3);
        let p = parse_poly("X2*X1 - 3/2*X1*X3", &ns, Field::Rational).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(render_poly(&p, &ns, &o), "X2*X1 - 3/2*X1*X3");
        let c = parse_poly("X1^3", &ns, Field::Rational).unwrap();
        assert_eq!(c.terms().next().unwrap().0.len(), 3);
        assert!(parse_poly("0", &ns, Field::Rational).unwrap().is_zero());
        let q = parse_poly("-2 + X1*X1 - X1^2 - X3", &ns, Field::Rational).unwrap();
        assert_eq!(render_poly(&q, &ns, &o), "-X3 - 2");
    }

    #[test]
    fn errors_carry_position() {
        let ns = names(&["x", "y"]);
        let e = parse_poly("x*z", &ns, Field::Rational).unwrap_err();
        assert_eq!((e.line, e.col), (1, 3));
        let e = parse_poly("x +* y", &ns, Field::Rational).unwrap_err();
        assert_eq!(e.col, 4);
        assert!(parse_poly("1/0*x", &ns, Field::Rational).is_err());
        assert!(parse_poly("", &ns, Field::Rational).is_err());
    }

    #[test]
    fn presentation_file() {
        let text = "# quantum plane\nfield Q\ngens x y\norder deglex x y\nrel y*x - 2*x*y\n";
        let p = parse_presentation(text).unwrap();
        assert_eq!(p.relations.len(), 1);
        assert_eq!(p.render_relation(0), "y*x - 2*x*y");
        let bad = "gens x y\nrel y*q\n";
        let e = parse_presentation(bad).unwrap_err();
        assert_eq!((e.line, e.col), (2, 7));
        assert!(parse_presentation("gens x x\n").is_err());
        assert!(parse_presentation("gens x\norder lex x\n").is_err());
    }

    #[test]
    fn prime_field_coefficients() {
        let ns = names(&["x"]);
        let p = parse_poly("x - 1", &ns, Field::prime(5).unwrap()).unwrap();
        assert_eq!(render_poly(&p, &ns, &WordOrder::deglex(1)), "x + 4");
    }
}
