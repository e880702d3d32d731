//! Reader for map definitions and polynomial expressions.
//!
//! ```text
//! file  := stmt ((';' | newline) stmt)*
//! stmt  := ('p1' | 'p2') '=' expr
//! expr  := ['+' | '-'] term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary)*
//! unary := '-' unary | power
//! power := atom ['^' integer]
//! atom  := integer | 'x' | 'y' | '(' expr ')'
//! ```
//!
//! `p1` is written in `y`; `p2` in `x` or `y`. A bivariate pair reads as
//! `x -> expr, y -> expr`.

use num_traits::Zero;

use crate::map_algebra::GeneralisedStandardMap;
use crate::poly::{BiPoly, PolyPair, Rational, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{line}:{column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

/// Exponents above this are rejected rather than expanded.
pub const MAX_EXPONENT: u32 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Sym(&'static str),
    Newline,
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        let (l0, c0) = (line, col);
        let err = |m: String| ParseError {
            line: l0,
            column: c0,
            message: m,
        };
        if c == '\n' {
            chars.next();
            out.push(Token {
                tok: Tok::Newline,
                line,
                column: col,
            });
            line += 1;
            col = 1;
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            col += 1;
            continue;
        }
        if c == '#' {
            while chars.peek().is_some_and(|&c| c != '\n') {
                chars.next();
            }
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                s.push(d);
                chars.next();
                col += 1;
            }
            if chars.peek() == Some(&'.') {
                return Err(err("decimal literals are not supported; write a fraction a/b".into()));
            }
            Tok::Int(s.parse().expect("digits"))
        } else if c.is_alphabetic() || c == '_' {
            let mut s = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_alphanumeric() || **d == '_') {
                s.push(d);
                chars.next();
                col += 1;
            }
            Tok::Ident(s)
        } else {
            chars.next();
            col += 1;
            let sym = match c {
                '+' => "+",
                '*' => "*",
                '/' => "/",
                '^' => "^",
                '(' => "(",
                ')' => ")",
                '=' => "=",
                ';' => ";",
                ',' => ",",
                '-' if chars.peek() == Some(&'>') => {
                    chars.next();
                    col += 1;
                    "->"
                }
                '-' => "-",
                other => return Err(err(format!("unexpected character '{other}'"))),
            };
            Tok::Sym(sym)
        };
        out.push(Token {
            tok,
            line: l0,
            column: c0,
        });
    }
    out.push(Token {
        tok: Tok::End,
        line,
        column: col,
    });
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    pos: usize,
    depth: usize,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("'{n}'"),
        Tok::Ident(s) => format!("'{s}'"),
        Tok::Sym(s) => format!("'{s}'"),
        Tok::Newline => "end of line".into(),
        Tok::End => "end of input".into(),
    }
}

impl Parser {
    fn new(text: &str) -> Result<Self, ParseError> {
        Ok(Self {
            toks: lex(text)?,
            pos: 0,
            depth: 0,
        })
    }

    fn skip_inner_newlines(&mut self) {
        if self.depth > 0 {
            while self.toks[self.pos].tok == Tok::Newline {
                self.pos += 1;
            }
        }
    }

    fn peek(&mut self) -> &Token {
        self.skip_inner_newlines();
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        self.skip_inner_newlines();
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn error_at(t: &Token, message: impl Into<String>) -> ParseError {
        ParseError {
            line: t.line,
            column: t.column,
            message: message.into(),
        }
    }

    fn eat(&mut self, sym: &str) -> bool {
        if matches!(&self.peek().tok, Tok::Sym(s) if *s == sym) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, sym: &str) -> Result<Token, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Sym(s) if *s == sym => Ok(t),
            other => Err(Self::error_at(&t, format!("expected '{sym}', found {}", describe(other)))),
        }
    }

    fn skip_newlines(&mut self) {
        while self.toks[self.pos].tok == Tok::Newline {
            self.pos += 1;
        }
    }

    fn expr(&mut self) -> Result<BiPoly, ParseError> {
        let negate = if self.eat("-") {
            true
        } else {
            self.eat("+");
            false
        };
        let mut acc = self.term()?;
        if negate {
            acc = -&acc;
        }
        loop {
            if self.eat("+") {
                acc = &acc + &self.term()?;
            } else if self.eat("-") {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<BiPoly, ParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat("*") {
                acc = &acc * &self.unary()?;
            } else if matches!(&self.peek().tok, Tok::Sym("/")) {
                let slash = self.next();
                let at = self.peek().clone();
                let d = self.unary()?;
                let Some(c) = d.as_constant() else {
                    return Err(Self::error_at(&at, "division by a non-constant expression"));
                };
                if c.is_zero() {
                    return Err(Self::error_at(&slash, "division by zero"));
                }
                acc = acc.scale(&c.recip());
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<BiPoly, ParseError> {
        if self.eat("-") {
            return Ok(-&self.unary()?);
        }
        self.power()
    }

    fn power(&mut self) -> Result<BiPoly, ParseError> {
        let base = self.atom()?;
        if !self.eat("^") {
            return Ok(base);
        }
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => {
                let e: u32 = n
                    .try_into()
                    .ok()
                    .filter(|e| *e <= MAX_EXPONENT)
                    .ok_or_else(|| Self::error_at(&t, format!("exponent must be at most {MAX_EXPONENT}")))?;
                Ok(base.pow(e))
            }
            other => Err(Self::error_at(
                &t,
                format!("exponent must be a non-negative integer literal, found {}", describe(other)),
            )),
        }
    }

    fn atom(&mut self) -> Result<BiPoly, ParseError> {
        let t = self.next();
        match &t.tok {
            Tok::Int(n) => Ok(BiPoly::constant(Rational::from_integer(n.clone()))),
            Tok::Ident(s) if s == "x" => Ok(BiPoly::x()),
            Tok::Ident(s) if s == "y" => Ok(BiPoly::y()),
            Tok::Ident(s) => Err(Self::error_at(&t, format!("unknown variable '{s}'"))),
            Tok::Sym("(") => {
                self.depth += 1;
                let e = self.expr();
                self.depth -= 1;
                let e = e?;
                self.depth += 1;
                let close = self.expect(")");
                self.depth -= 1;
                close?;
                Ok(e)
            }
            other => Err(Self::error_at(&t, format!("expected a number, variable or '(', found {}", describe(other)))),
        }
    }

    fn end_of_statement(&mut self) -> Result<(), ParseError> {
        let t = self.peek().clone();
        match t.tok {
            Tok::Sym(";") | Tok::Newline => {
                self.pos += 1;
                Ok(())
            }
            Tok::End => Ok(()),
            ref other => Err(Self::error_at(&t, format!("expected ';' or end of line, found {}", describe(other)))),
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_newlines();
        let t = self.next();
        match &t.tok {
            Tok::End => Ok(()),
            other => Err(Self::error_at(&t, format!("unexpected {} after expression", describe(other)))),
        }
    }
}

fn univariate(p: &BiPoly, name: &str, allowed: &[&str], at: &Token) -> Result<UniPoly, ParseError> {
    let uses_x = p.degree_x().is_some_and(|d| d > 0);
    let uses_y = p.degree_y().is_some_and(|d| d > 0);
    let bad = |v: &str| {
        Parser::error_at(
            at,
            format!("{name} must be a polynomial in {}, found '{v}'", allowed.join(" or ")),
        )
    };
    match (uses_x, uses_y) {
        (true, true) => Err(Parser::error_at(at, format!("{name} mixes x and y"))),
        (true, false) if !allowed.contains(&"x") => Err(bad("x")),
        (false, true) if !allowed.contains(&"y") => Err(bad("y")),
        (true, false) => Ok(p.as_uni_x().expect("only x")),
        _ => Ok(p.as_uni_y().expect("only y or constant")),
    }
}

/// Reads `p1 = …; p2 = …`.
pub fn parse_map(text: &str) -> Result<GeneralisedStandardMap, ParseError> {
    let mut p = Parser::new(text)?;
    let mut p1 = None;
    let mut p2 = None;
    loop {
        p.skip_newlines();
        if p.toks[p.pos].tok == Tok::End {
            break;
        }
        let name_tok = p.next();
        let (slot, name, allowed): (&mut Option<UniPoly>, &str, &[&str]) = match &name_tok.tok {
            Tok::Ident(s) if s == "p1" => (&mut p1, "p1", &["y"]),
            Tok::Ident(s) if s == "p2" => (&mut p2, "p2", &["x", "y"]),
            other => {
                return Err(Parser::error_at(
                    &name_tok,
                    format!("expected 'p1' or 'p2', found {}", describe(other)),
                ))
            }
        };
        if slot.is_some() {
            return Err(Parser::error_at(&name_tok, format!("{name} is defined twice")));
        }
        p.expect("=")?;
        let at = p.peek().clone();
        let e = p.expr()?;
        *slot = Some(univariate(&e, name, allowed, &at)?);
        p.end_of_statement()?;
    }
    let end = p.toks[p.pos].clone();
    match (p1, p2) {
        (Some(p1), Some(p2)) => Ok(GeneralisedStandardMap::new(p1, p2)),
        (None, _) => Err(Parser::error_at(&end, "missing definition of p1")),
        (_, None) => Err(Parser::error_at(&end, "missing definition of p2")),
    }
}

/// Reads a single polynomial expression in `x` and `y`.
pub fn parse_poly(text: &str) -> Result<BiPoly, ParseError> {
    let mut p = Parser::new(text)?;
    p.depth = 1;
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Reads `x -> expr, y -> expr`.
pub fn parse_pair(text: &str) -> Result<PolyPair, ParseError> {
    let mut p = Parser::new(text)?;
    p.depth = 1;
    let comp = |p: &mut Parser, var: &str| -> Result<BiPoly, ParseError> {
        let t = p.next();
        if !matches!(&t.tok, Tok::Ident(s) if s == var) {
            return Err(Parser::error_at(&t, format!("expected '{var}', found {}", describe(&t.tok))));
        }
        p.expect("->")?;
        p.expr()
    };
    let fx = comp(&mut p, "x")?;
    p.expect(",")?;
    let fy = comp(&mut p, "y")?;
    p.finish()?;
    Ok(PolyPair::new(fx, fy))
}
