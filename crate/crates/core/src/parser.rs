//! Text syntax for elements, words, binary products and brackets.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := [rational] factor ['*' factor]
//! factor  := generator | word | bracket | '(' expr ')'
//! word    := generator generator+          (whitespace allowed between letters)
//! bracket := ('[' | '{' | '<') expr ',' expr (']' | '}' | '>')
//! rational:= int ['/' posint]
//! ```
//!
//! `∘` is accepted for `*`. Products of more than two factors must be
//! parenthesised: the algebras here are not associative, so `a*b*c` is an
//! error rather than a silent choice of bracketing.

use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::algebra::AlgebraTable;
use crate::bracket::{bracket, bracket_kind_of, forced_bracket, BracketKind};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::word::{contract, Word};

pub type Span = Range<usize>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    UnknownLetter,
    UnparenthesizedProductChain,
}

/// A parse failure at a byte span of the input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message} at {}..{}", span.start, span.end)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub span: Span,
    pub message: String,
}

impl ParseError {
    fn new(kind: ParseErrorKind, span: Span, message: impl Into<String>) -> ParseError {
        ParseError {
            kind,
            span,
            message: message.into(),
        }
    }

    fn syntax(span: Span, message: impl Into<String>) -> ParseError {
        ParseError::new(ParseErrorKind::Syntax, span, message)
    }
}

/// Bracket notation as written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BracketSyntax {
    /// `[x,y]`, always the commutator.
    Square,
    /// `{x,y}`, always the anticommutator.
    Brace,
    /// `<x,y>`, kind chosen from the operand parities.
    Angle,
}

impl BracketSyntax {
    fn delimiters(self) -> (char, char) {
        match self {
            BracketSyntax::Square => ('[', ']'),
            BracketSyntax::Brace => ('{', '}'),
            BracketSyntax::Angle => ('<', '>'),
        }
    }
}

/// Syntax tree node. Equality ignores spans.
#[derive(Debug, Clone)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.kind == other.kind
    }
}

impl Eq for Expr {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprKind {
    Generator(usize),
    ScalarLiteral(Scalar),
    /// Signed summands; `true` marks subtraction.
    Sum(Vec<(bool, Expr)>),
    Scaled(Scalar, Box<Expr>),
    BinaryProduct(Box<Expr>, Box<Expr>),
    WordLiteral(Vec<usize>),
    Bracket(BracketSyntax, Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Number(String),
    Name(usize),
    Plus,
    Minus,
    Star,
    Comma,
    Slash,
    Open(char),
    Close(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    span: Span,
}

fn lex(input: &str, alg: &AlgebraTable) -> std::result::Result<Vec<Token>, ParseError> {
    // longest names first so that multi-character names win
    let mut names: Vec<(usize, &str)> = alg
        .generators()
        .iter()
        .filter(|g| g.name.starts_with(|c: char| !c.is_ascii_digit()))
        .map(|g| (g.index, g.name.as_str()))
        .collect();
    names.sort_by(|a, b| b.1.len().cmp(&a.1.len()).then(a.0.cmp(&b.0)));

    let mut out = Vec::new();
    let mut pos = 0;
    while pos < input.len() {
        let rest = &input[pos..];
        let c = rest.chars().next().expect("non-empty");
        let start = pos;
        if c.is_whitespace() {
            pos += c.len_utf8();
            continue;
        }
        let single = |t: Tok| Some((t, c.len_utf8()));
        let found = match c {
            '+' => single(Tok::Plus),
            '-' => single(Tok::Minus),
            '*' | '∘' => single(Tok::Star),
            ',' => single(Tok::Comma),
            '/' => single(Tok::Slash),
            '(' | '[' | '{' | '<' => single(Tok::Open(c)),
            ')' | ']' | '}' | '>' => single(Tok::Close(c)),
            '0'..='9' => {
                let len = rest.bytes().take_while(u8::is_ascii_digit).count();
                Some((Tok::Number(rest[..len].to_string()), len))
            }
            _ => names
                .iter()
                .find(|(_, n)| rest.starts_with(n))
                .map(|&(i, n)| (Tok::Name(i), n.len())),
        };
        match found {
            Some((tok, len)) => {
                out.push(Token {
                    tok,
                    span: start..start + len,
                });
                pos += len;
            }
            None if c.is_alphanumeric() || c == '_' => {
                return Err(ParseError::new(
                    ParseErrorKind::UnknownLetter,
                    start..start + c.len_utf8(),
                    format!("unknown letter {c:?} for algebra {}", alg.name()),
                ));
            }
            None => {
                return Err(ParseError::syntax(
                    start..start + c.len_utf8(),
                    format!("unexpected character {c:?}"),
                ));
            }
        }
    }
    out.push(Token {
        tok: Tok::End,
        span: input.len()..input.len(),
    });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    alg: &'a AlgebraTable,
}

type PResult<T> = std::result::Result<T, ParseError>;

impl Parser<'_> {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn peek_at(&self, k: usize) -> &Token {
        &self.toks[(self.pos + k).min(self.toks.len() - 1)]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if self.pos < self.toks.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn unexpected(&self, what: &str) -> ParseError {
        let t = self.peek();
        let span = if t.tok == Tok::End {
            // point at the last character of the input
            t.span.start.saturating_sub(1)..t.span.end.max(1)
        } else {
            t.span.clone()
        };
        ParseError::syntax(span, format!("expected {what}"))
    }

    fn numeric_generator(&self, text: &str) -> Option<usize> {
        self.alg.index_of(text)
    }

    /// Whether the token at offset `k` can begin a factor.
    fn starts_factor(&self, k: usize) -> bool {
        match &self.peek_at(k).tok {
            Tok::Name(_) | Tok::Open(_) => true,
            Tok::Number(n) => {
                self.numeric_generator(n).is_some() && !self.starts_factor_after_number(k)
            }
            _ => false,
        }
    }

    fn starts_factor_after_number(&self, k: usize) -> bool {
        // `n / m` is a rational, never a generator
        if self.peek_at(k + 1).tok == Tok::Slash {
            return true;
        }
        matches!(self.peek_at(k + 1).tok, Tok::Name(_) | Tok::Open(_))
    }

    fn expr(&mut self) -> PResult<Expr> {
        let start = self.peek().span.start;
        let mut terms = Vec::new();
        let mut negative = false;
        let mut explicit_sign = false;
        match self.peek().tok {
            Tok::Minus => {
                self.bump();
                negative = true;
                explicit_sign = true;
            }
            Tok::Plus => {
                self.bump();
            }
            _ => {}
        }
        loop {
            let t = self.term()?;
            terms.push((negative, t));
            match self.peek().tok {
                Tok::Plus => negative = false,
                Tok::Minus => negative = true,
                Tok::Star => {
                    let span = self.peek().span.clone();
                    return Err(ParseError::new(
                        ParseErrorKind::UnparenthesizedProductChain,
                        span,
                        "ambiguous non-associative product: parenthesise products of more than two factors",
                    ));
                }
                _ => break,
            }
            self.bump();
        }
        let end = self.toks[self.pos.saturating_sub(1)].span.end;
        if terms.len() == 1 && !explicit_sign {
            return Ok(terms.pop().expect("one term").1);
        }
        Ok(Expr {
            kind: ExprKind::Sum(terms),
            span: start..end,
        })
    }

    fn rational(&mut self) -> PResult<(Scalar, Span)> {
        let t = self.bump();
        let Tok::Number(n) = &t.tok else {
            return Err(ParseError::syntax(t.span, "expected a number"));
        };
        let mut text = n.clone();
        let mut span = t.span.clone();
        if self.peek().tok == Tok::Slash {
            self.bump();
            let d = self.bump();
            match &d.tok {
                Tok::Number(m) => {
                    text = format!("{text}/{m}");
                    span.end = d.span.end;
                }
                _ => return Err(ParseError::syntax(d.span, "expected a denominator")),
            }
        }
        let value = text.parse::<Scalar>().map_err(|_| {
            ParseError::syntax(span.clone(), "invalid rational (zero denominator?)")
        })?;
        Ok((value, span))
    }

    fn term(&mut self) -> PResult<Expr> {
        if let Tok::Number(n) = &self.peek().tok {
            let is_generator =
                self.numeric_generator(n).is_some() && !self.starts_factor_after_number(0);
            if !is_generator {
                let (k, span) = self.rational()?;
                if !self.starts_factor(0) {
                    return Ok(Expr {
                        kind: ExprKind::ScalarLiteral(k),
                        span,
                    });
                }
                let body = self.product()?;
                let span = span.start..body.span.end;
                return Ok(Expr {
                    kind: ExprKind::Scaled(k, Box::new(body)),
                    span,
                });
            }
        }
        self.product()
    }

    fn product(&mut self) -> PResult<Expr> {
        let left = self.factor()?;
        if self.peek().tok != Tok::Star {
            return Ok(left);
        }
        self.bump();
        let right = self.factor()?;
        let span = left.span.start..right.span.end;
        Ok(Expr {
            kind: ExprKind::BinaryProduct(Box::new(left), Box::new(right)),
            span,
        })
    }

    fn factor(&mut self) -> PResult<Expr> {
        let t = self.peek().clone();
        match &t.tok {
            Tok::Name(_) => self.word(),
            Tok::Number(n) if self.numeric_generator(n).is_some() => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Generator(self.numeric_generator(n).expect("checked")),
                    span: t.span,
                })
            }
            Tok::Open('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect_close(')')?;
                Ok(inner)
            }
            Tok::Open(c) => {
                let syntax = match c {
                    '[' => BracketSyntax::Square,
                    '{' => BracketSyntax::Brace,
                    _ => BracketSyntax::Angle,
                };
                self.bump();
                let left = self.expr()?;
                if self.peek().tok != Tok::Comma {
                    return Err(self.unexpected("',' inside bracket"));
                }
                self.bump();
                let right = self.expr()?;
                let close = self.expect_close(syntax.delimiters().1)?;
                Ok(Expr {
                    kind: ExprKind::Bracket(syntax, Box::new(left), Box::new(right)),
                    span: t.span.start..close.end,
                })
            }
            _ => Err(self.unexpected("a generator, word, bracket or '('")),
        }
    }

    fn expect_close(&mut self, c: char) -> PResult<Span> {
        if self.peek().tok == Tok::Close(c) {
            Ok(self.bump().span)
        } else {
            Err(self.unexpected(&format!("'{c}'")))
        }
    }

    fn word(&mut self) -> PResult<Expr> {
        let first = self.bump();
        let Tok::Name(i) = first.tok else {
            unreachable!("word() starts at a name")
        };
        let mut letters = vec![i];
        let mut end = first.span.end;
        while let Tok::Name(j) = self.peek().tok {
            end = self.bump().span.end;
            letters.push(j);
        }
        let kind = if letters.len() == 1 {
            ExprKind::Generator(i)
        } else {
            ExprKind::WordLiteral(letters)
        };
        Ok(Expr {
            kind,
            span: first.span.start..end,
        })
    }

    fn finish(&self) -> PResult<()> {
        if self.peek().tok == Tok::End {
            Ok(())
        } else {
            Err(self.unexpected("end of input"))
        }
    }
}

/// Parses an expression over the given algebra's generator names.
pub fn parse(input: &str, alg: &AlgebraTable) -> std::result::Result<Expr, ParseError> {
    let toks = lex(input, alg)?;
    let mut p = Parser { toks, pos: 0, alg };
    if p.peek().tok == Tok::End {
        return Err(ParseError::syntax(
            0..input.len().max(1),
            "empty expression",
        ));
    }
    let e = p.expr()?;
    p.finish()?;
    Ok(e)
}

/// Parses a signed, scaled word such as `-3/2 cbcb` or `c b c b`.
pub fn parse_word(input: &str, alg: &AlgebraTable) -> std::result::Result<Word, ParseError> {
    let toks = lex(input, alg)?;
    let mut p = Parser { toks, pos: 0, alg };
    let mut coeff = Scalar::one();
    match p.peek().tok {
        Tok::Minus => {
            p.bump();
            coeff = -coeff;
        }
        Tok::Plus => {
            p.bump();
        }
        _ => {}
    }
    if matches!(p.peek().tok, Tok::Number(_)) {
        let (k, _) = p.rational()?;
        coeff = coeff * k;
    }
    let mut letters = Vec::new();
    while let Tok::Name(i) = p.peek().tok {
        p.bump();
        letters.push(i);
    }
    if letters.is_empty() {
        return Err(p.unexpected("at least one letter"));
    }
    p.finish()?;
    Ok(Word::new(coeff, letters))
}

/// Result of evaluating an expression, with any bracket-kind warnings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub value: Element,
    pub warnings: Vec<String>,
}

pub fn eval(e: &Expr, alg: &Arc<AlgebraTable>) -> Result<Element> {
    eval_with_warnings(e, alg).map(|r| r.value)
}

/// Evaluates an expression. An explicit `[x,y]` or `{x,y}` whose kind differs
/// from the one the grading prescribes is evaluated as written and reported
/// as a warning.
pub fn eval_with_warnings(e: &Expr, alg: &Arc<AlgebraTable>) -> Result<Evaluation> {
    let mut warnings = Vec::new();
    let value = eval_inner(e, alg, &mut warnings)?;
    Ok(Evaluation { value, warnings })
}

fn eval_inner(e: &Expr, alg: &Arc<AlgebraTable>, warnings: &mut Vec<String>) -> Result<Element> {
    match &e.kind {
        ExprKind::Generator(i) => Ok(Element::basis(alg, *i)),
        ExprKind::ScalarLiteral(k) => {
            if k.is_zero() {
                Ok(Element::zero(alg))
            } else {
                Err(Error::NoUnit(alg.name().to_string()))
            }
        }
        ExprKind::Sum(terms) => {
            let mut total = Element::zero(alg);
            for (negative, t) in terms {
                let v = eval_inner(t, alg, warnings)?;
                total = if *negative {
                    total.sub(&v)?
                } else {
                    total.add(&v)?
                };
            }
            Ok(total)
        }
        ExprKind::Scaled(k, body) => Ok(eval_inner(body, alg, warnings)?.scale(k)),
        ExprKind::BinaryProduct(l, r) => {
            let x = eval_inner(l, alg, warnings)?;
            let y = eval_inner(r, alg, warnings)?;
            x.product(&y)
        }
        ExprKind::WordLiteral(letters) => contract(alg, &Word::new(1, letters.clone())),
        ExprKind::Bracket(syntax, l, r) => {
            let x = eval_inner(l, alg, warnings)?;
            let y = eval_inner(r, alg, warnings)?;
            let forced = match syntax {
                BracketSyntax::Angle => return bracket(&x, &y),
                BracketSyntax::Square => BracketKind::Commutator,
                BracketSyntax::Brace => BracketKind::Anticommutator,
            };
            if let Ok(Some(graded)) = bracket_kind_of(&x, &y) {
                if graded != forced {
                    warnings.push(format!(
                        "{} applies the {} where the grading prescribes the {}",
                        print(e, alg),
                        forced.name(),
                        graded.name()
                    ));
                }
            }
            forced_bracket(forced, &x, &y)
        }
    }
}

/// Canonical text form; `parse(print(e)) == e`.
pub fn print(e: &Expr, alg: &AlgebraTable) -> String {
    let mut s = String::new();
    write_expr(&mut s, e, alg);
    s
}

fn needs_parens_as_operand(e: &Expr) -> bool {
    matches!(
        e.kind,
        ExprKind::Sum(_)
            | ExprKind::BinaryProduct(..)
            | ExprKind::Scaled(..)
            | ExprKind::ScalarLiteral(_)
    )
}

fn write_operand(s: &mut String, e: &Expr, alg: &AlgebraTable) {
    if needs_parens_as_operand(e) {
        s.push('(');
        write_expr(s, e, alg);
        s.push(')');
    } else {
        write_expr(s, e, alg);
    }
}

fn write_expr(s: &mut String, e: &Expr, alg: &AlgebraTable) {
    match &e.kind {
        ExprKind::Generator(i) => s.push_str(&alg.generator(*i).name),
        ExprKind::ScalarLiteral(k) => s.push_str(&k.to_string()),
        ExprKind::Sum(terms) => {
            for (n, (negative, t)) in terms.iter().enumerate() {
                match (n, negative) {
                    (0, true) => s.push('-'),
                    (0, false) => {}
                    (_, true) => s.push_str(" - "),
                    (_, false) => s.push_str(" + "),
                }
                if matches!(t.kind, ExprKind::Sum(_)) {
                    s.push('(');
                    write_expr(s, t, alg);
                    s.push(')');
                } else {
                    write_expr(s, t, alg);
                }
            }
        }
        ExprKind::Scaled(k, body) => {
            s.push_str(&k.to_string());
            s.push(' ');
            if matches!(
                body.kind,
                ExprKind::Sum(_) | ExprKind::Scaled(..) | ExprKind::ScalarLiteral(_)
            ) {
                s.push('(');
                write_expr(s, body, alg);
                s.push(')');
            } else {
                write_expr(s, body, alg);
            }
        }
        ExprKind::BinaryProduct(l, r) => {
            write_operand(s, l, alg);
            s.push('*');
            write_operand(s, r, alg);
        }
        ExprKind::WordLiteral(letters) => {
            let spaced = letters
                .iter()
                .any(|&i| alg.generator(i).name.chars().count() > 1);
            let names: Vec<&str> = letters
                .iter()
                .map(|&i| alg.generator(i).name.as_str())
                .collect();
            s.push_str(&names.join(if spaced { " " } else { "" }));
        }
        ExprKind::Bracket(syntax, l, r) => {
            let (open, close) = syntax.delimiters();
            s.push(open);
            write_expr(s, l, alg);
            s.push(',');
            write_expr(s, r, alg);
            s.push(close);
        }
    }
}

impl fmt::Display for BracketSyntax {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (o, c) = self.delimiters();
        write!(f, "{o}.,.{c}")
    }
}

/// Parses and evaluates in one go.
pub fn eval_str(input: &str, alg: &Arc<AlgebraTable>) -> Result<Element> {
    let e = parse(input, alg)?;
    eval(&e, alg)
}
