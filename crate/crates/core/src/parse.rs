//! Expression grammar for algebra elements.
//!
//! ```text
//! expr   := ('+'|'-')? term (('+'|'-') term)*
//! term   := factor ('*'? factor)*
//! factor := atom ('^' nat)?
//! atom   := rational | name | '(' expr ')' | '[' expr ',' expr ']' | '{' expr ',' expr '}'
//! ```
//!
//! Juxtaposition is multiplication and factor order is preserved. A `/` may
//! only appear inside a rational literal (`1/16`). An identifier that is not
//! a known name is split into known names by longest prefix, so `ABC` reads as
//! `A*B*C` and `Aalpha` as `A*alpha`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::alphabet::{Alphabet, Sym};
use crate::element::Element;
use crate::error::{ParseError, ParseErrorKind};
use crate::scalar::{self, Scalar};

/// Names an expression may refer to: generators plus defined elements.
pub trait NameScope {
    fn alphabet(&self) -> &Arc<Alphabet>;
    /// Looks up a defined element by any of its names.
    fn defined(&self, name: &str) -> Option<&Element>;
    /// Primary name of the defined element that `name` refers to.
    fn canonical_defined_name(&self, name: &str) -> Option<&str>;
}

/// Bare alphabet scope with no defined names.
impl NameScope for Arc<Alphabet> {
    fn alphabet(&self) -> &Arc<Alphabet> {
        self
    }
    fn defined(&self, _: &str) -> Option<&Element> {
        None
    }
    fn canonical_defined_name(&self, _: &str) -> Option<&str> {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExpressionAst {
    Rational(Scalar),
    Generator(Sym),
    Defined(String),
    Neg(Box<ExpressionAst>),
    Sum(Box<ExpressionAst>, Box<ExpressionAst>),
    Difference(Box<ExpressionAst>, Box<ExpressionAst>),
    Product(Box<ExpressionAst>, Box<ExpressionAst>),
    Power(Box<ExpressionAst>, u32),
    Commutator(Box<ExpressionAst>, Box<ExpressionAst>),
    Anticommutator(Box<ExpressionAst>, Box<ExpressionAst>),
    Paren(Box<ExpressionAst>),
}

impl ExpressionAst {
    /// Evaluates in the free algebra; defined names expand to their stored elements.
    pub fn eval(&self, scope: &dyn NameScope) -> Element {
        use ExpressionAst::*;
        let alpha = scope.alphabet();
        match self {
            Rational(c) => Element::scalar(alpha, c.clone()),
            Generator(s) => Element::generator(alpha, *s),
            Defined(n) => scope
                .defined(n)
                .cloned()
                .unwrap_or_else(|| panic!("defined name {n:?} vanished from scope")),
            Neg(a) => -a.eval(scope),
            Sum(a, b) => a.eval(scope) + b.eval(scope),
            Difference(a, b) => a.eval(scope) - b.eval(scope),
            Product(a, b) => a.eval(scope) * b.eval(scope),
            Power(a, n) => a.eval(scope).pow(*n),
            Commutator(a, b) => a
                .eval(scope)
                .commutator(&b.eval(scope))
                .expect("single scope"),
            Anticommutator(a, b) => a
                .eval(scope)
                .anticommutator(&b.eval(scope))
                .expect("single scope"),
            Paren(a) => a.eval(scope),
        }
    }

    /// Renders with explicit `*` and parentheses; reparses to the same tree
    /// up to `Paren` nodes.
    pub fn to_text(&self, alphabet: &Alphabet) -> String {
        let mut s = String::new();
        self.write(alphabet, &mut s, 0);
        s
    }

    fn write(&self, alpha: &Alphabet, out: &mut String, prec: u8) {
        use ExpressionAst::*;
        // prec: 0 sum operand, 1 product operand, 2 right factor, 3 power base
        let wrap = match self {
            Sum(..) | Difference(..) | Neg(..) => prec > 0,
            Product(..) => prec > 1,
            Power(..) => prec > 2,
            _ => false,
        };
        if wrap {
            out.push('(');
        }
        match self {
            Rational(c) => out.push_str(&scalar::format_scalar(c)),
            Generator(s) => out.push_str(alpha.name(*s)),
            Defined(n) => out.push_str(n),
            Neg(a) => {
                out.push('-');
                a.write(alpha, out, 1);
            }
            Sum(a, b) => {
                a.write(alpha, out, 0);
                out.push_str(" + ");
                b.write(alpha, out, 1);
            }
            Difference(a, b) => {
                a.write(alpha, out, 0);
                out.push_str(" - ");
                b.write(alpha, out, 1);
            }
            Product(a, b) => {
                a.write(alpha, out, 1);
                out.push('*');
                b.write(alpha, out, 2);
            }
            Power(a, n) => {
                a.write(alpha, out, 3);
                out.push_str(&format!("^{n}"));
            }
            Commutator(a, b) | Anticommutator(a, b) => {
                let (l, r) = if matches!(self, Commutator(..)) {
                    ('[', ']')
                } else {
                    ('{', '}')
                };
                out.push(l);
                a.write(alpha, out, 0);
                out.push_str(", ");
                b.write(alpha, out, 0);
                out.push(r);
            }
            Paren(a) => {
                out.push('(');
                a.write(alpha, out, 0);
                out.push(')');
            }
        }
        if wrap {
            out.push(')');
        }
    }

    /// Same tree with `Paren` wrappers removed.
    pub fn strip_parens(&self) -> ExpressionAst {
        use ExpressionAst::*;
        let b = |e: &ExpressionAst| Box::new(e.strip_parens());
        match self {
            Paren(a) => a.strip_parens(),
            Neg(a) => Neg(b(a)),
            Sum(x, y) => Sum(b(x), b(y)),
            Difference(x, y) => Difference(b(x), b(y)),
            Product(x, y) => Product(b(x), b(y)),
            Power(x, n) => Power(b(x), *n),
            Commutator(x, y) => Commutator(b(x), b(y)),
            Anticommutator(x, y) => Anticommutator(b(x), b(y)),
            other => other.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(Scalar),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    Comma,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(c) => write!(f, "number {}", scalar::format_scalar(c)),
            Tok::Ident(s) => write!(f, "name {s:?}"),
            Tok::End => f.write_str("end of input"),
            Tok::Plus => f.write_str("'+'"),
            Tok::Minus => f.write_str("'-'"),
            Tok::Star => f.write_str("'*'"),
            Tok::Caret => f.write_str("'^'"),
            Tok::LParen => f.write_str("'('"),
            Tok::RParen => f.write_str("')'"),
            Tok::LBracket => f.write_str("'['"),
            Tok::RBracket => f.write_str("']'"),
            Tok::LBrace => f.write_str("'{'"),
            Tok::RBrace => f.write_str("'}'"),
            Tok::Comma => f.write_str("','"),
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Pos {
    line: usize,
    column: usize,
}

fn err(pos: Pos, kind: ParseErrorKind) -> ParseError {
    ParseError {
        line: pos.line,
        column: pos.column,
        kind,
    }
}

fn lex(input: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let (mut line, mut col) = (1usize, 1usize);
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, column: col };
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            col += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '0'..='9' => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let num: String = chars[start..i].iter().collect();
                let mut value = Scalar::from_integer(num.parse::<BigInt>().expect("digits"));
                if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                    let ds = i + 1;
                    i += 1;
                    while i < chars.len() && chars[i].is_ascii_digit() {
                        i += 1;
                    }
                    let den: BigInt = chars[ds..i].iter().collect::<String>().parse().expect("digits");
                    if den.is_zero() {
                        return Err(err(
                            Pos {
                                line,
                                column: col + (ds - start),
                            },
                            ParseErrorKind::ZeroDenominator,
                        ));
                    }
                    value /= Scalar::from_integer(den);
                }
                col += i - start;
                out.push((Tok::Num(value), pos));
                continue;
            }
            c if c.is_alphabetic() => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                col += i - start;
                out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
                continue;
            }
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '[' => Tok::LBracket,
            ']' => Tok::RBracket,
            '{' => Tok::LBrace,
            '}' => Tok::RBrace,
            ',' => Tok::Comma,
            '/' => return Err(err(pos, ParseErrorKind::StraySlash)),
            other => return Err(err(pos, ParseErrorKind::UnexpectedChar(other))),
        };
        i += 1;
        col += 1;
        out.push((tok, pos));
    }
    out.push((Tok::End, Pos { line, column: col }));
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(Tok, Pos)>,
    at: usize,
    scope: &'a dyn NameScope,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].0.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, context: &str) -> Result<(), ParseError> {
        if *self.peek() == want {
            self.bump();
            Ok(())
        } else {
            let kind = if context.is_empty() {
                ParseErrorKind::Expected {
                    expected: want.to_string(),
                    found: self.peek().to_string(),
                }
            } else {
                ParseErrorKind::MalformedBracket(format!(
                    "expected {want} {context}, found {}",
                    self.peek()
                ))
            };
            Err(err(self.pos(), kind))
        }
    }

    fn expr(&mut self) -> Result<ExpressionAst, ParseError> {
        let mut lhs = match self.peek() {
            Tok::Minus => {
                self.bump();
                ExpressionAst::Neg(Box::new(self.term()?))
            }
            Tok::Plus => {
                self.bump();
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = ExpressionAst::Sum(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = ExpressionAst::Difference(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<ExpressionAst, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen | Tok::LBracket | Tok::LBrace => {}
                _ => return Ok(lhs),
            }
            lhs = ExpressionAst::Product(Box::new(lhs), Box::new(self.factor()?));
        }
    }

    fn factor(&mut self) -> Result<ExpressionAst, ParseError> {
        let base = self.atom()?;
        if *self.peek() == Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Num(n) if n.is_integer() => {
                    let e: u32 = n
                        .to_integer()
                        .try_into()
                        .map_err(|_| err(pos, ParseErrorKind::BadExponent))?;
                    return Ok(ExpressionAst::Power(Box::new(base), e));
                }
                Tok::Num(_) => return Err(err(pos, ParseErrorKind::BadExponent)),
                other => {
                    return Err(err(
                        pos,
                        ParseErrorKind::Expected {
                            expected: "a natural exponent".into(),
                            found: other.to_string(),
                        },
                    ))
                }
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<ExpressionAst, ParseError> {
        let pos = self.pos();
        match self.bump() {
            Tok::Num(c) => Ok(ExpressionAst::Rational(c)),
            Tok::Ident(name) => self.resolve(&name, pos),
            Tok::LParen => {
                let inner = self.expr()?;
                self.expect(Tok::RParen, "")?;
                Ok(ExpressionAst::Paren(Box::new(inner)))
            }
            Tok::LBracket => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "between commutator arguments")?;
                let b = self.expr()?;
                self.expect(Tok::RBracket, "to close commutator")?;
                Ok(ExpressionAst::Commutator(Box::new(a), Box::new(b)))
            }
            Tok::LBrace => {
                let a = self.expr()?;
                self.expect(Tok::Comma, "between anticommutator arguments")?;
                let b = self.expr()?;
                self.expect(Tok::RBrace, "to close anticommutator")?;
                Ok(ExpressionAst::Anticommutator(Box::new(a), Box::new(b)))
            }
            other @ (Tok::RBracket | Tok::RBrace | Tok::Comma) => Err(err(
                pos,
                ParseErrorKind::MalformedBracket(format!("unexpected {other}")),
            )),
            other => Err(err(
                pos,
                ParseErrorKind::Expected {
                    expected: "an operand".into(),
                    found: other.to_string(),
                },
            )),
        }
    }

    fn single_name(&self, name: &str) -> Option<ExpressionAst> {
        if let Some(canon) = self.scope.canonical_defined_name(name) {
            return Some(ExpressionAst::Defined(canon.to_string()));
        }
        self.scope
            .alphabet()
            .lookup(name)
            .map(ExpressionAst::Generator)
    }

    fn resolve(&self, name: &str, pos: Pos) -> Result<ExpressionAst, ParseError> {
        if let Some(e) = self.single_name(name) {
            return Ok(e);
        }
        let parts = self
            .segment(name)
            .ok_or_else(|| err(pos, ParseErrorKind::UnknownName(name.to_string())))?;
        let mut it = parts.into_iter();
        let first = it.next().expect("nonempty segmentation");
        Ok(it.fold(first, |acc, p| {
            ExpressionAst::Product(Box::new(acc), Box::new(p))
        }))
    }

    /// Splits an identifier into known names, preferring the longest prefix
    /// and backtracking when a split dead-ends.
    fn segment(&self, name: &str) -> Option<Vec<ExpressionAst>> {
        if name.is_empty() {
            return Some(Vec::new());
        }
        let bounds: Vec<usize> = name
            .char_indices()
            .map(|(i, _)| i)
            .skip(1)
            .chain(std::iter::once(name.len()))
            .collect();
        for &end in bounds.iter().rev() {
            if let Some(head) = self.single_name(&name[..end]) {
                if let Some(mut rest) = self.segment(&name[end..]) {
                    rest.insert(0, head);
                    return Some(rest);
                }
            }
        }
        None
    }
}

/// Parses an expression against the names visible in `scope`.
pub fn parse(input: &str, scope: &dyn NameScope) -> Result<ExpressionAst, ParseError> {
    let toks = lex(input)?;
    let mut p = Parser {
        toks,
        at: 0,
        scope,
    };
    if *p.peek() == Tok::End {
        return Err(err(
            p.pos(),
            ParseErrorKind::Expected {
                expected: "an expression".into(),
                found: "end of input".into(),
            },
        ));
    }
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        let pos = p.pos();
        let found = p.peek().clone();
        let kind = match found {
            Tok::RParen | Tok::RBracket | Tok::RBrace | Tok::Comma => {
                ParseErrorKind::MalformedBracket(format!("unexpected {found}"))
            }
            _ => ParseErrorKind::Expected {
                expected: "an operator or end of input".into(),
                found: found.to_string(),
            },
        };
        return Err(err(pos, kind));
    }
    Ok(e)
}

/// Parses and evaluates in the free algebra (no reduction).
pub fn parse_element(input: &str, scope: &dyn NameScope) -> Result<Element, ParseError> {
    Ok(parse(input, scope)?.eval(scope))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn abd() -> Arc<Alphabet> {
        Arc::new(
            Alphabet::new(&[
                ("A", &[][..]),
                ("B", &[][..]),
                ("D", &[][..]),
                ("α", &["alpha"][..]),
            ])
            .unwrap(),
        )
    }

    #[test]
    fn product_minus_scaled() {
        let s = abd();
        let ast = parse("A*B - 2*D", &s).unwrap();
        assert!(matches!(ast, ExpressionAst::Difference(..)));
        assert_eq!(ast.eval(&s).to_text(), "-2*D + A*B");
    }

    #[test]
    fn juxtaposition_and_segmentation() {
        let s = abd();
        let a = parse_element("2AB - Dalpha", &s).unwrap();
        let b = parse_element("2*A*B - D*α", &s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn division_outside_literal_rejected() {
        let s = abd();
        let e = parse("(2A-3)(2A+1)/16", &s).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::StraySlash);
        assert_eq!((e.line, e.column), (1, 13));
        let ok = parse_element("1/16*(2*A-3)*(2*A+1)", &s).unwrap();
        assert_eq!(ok.to_text(), "-3/16 - 1/4*A + 1/4*A^2");
    }

    #[test]
    fn rational_literal() {
        let s = abd();
        assert_eq!(
            parse("3/6", &s).unwrap(),
            ExpressionAst::Rational(ratio(1, 2))
        );
        assert_eq!(parse("1/0", &s).unwrap_err().kind, ParseErrorKind::ZeroDenominator);
    }

    #[test]
    fn errors_carry_positions() {
        let s = abd();
        let e = parse("A +\n  Q", &s).unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        assert_eq!(e.kind, ParseErrorKind::UnknownName("Q".into()));
        let e = parse("[A, B", &s).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedBracket(_)));
        let e = parse("{A B}", &s).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedBracket(_)));
        let e = parse("A ]", &s).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::MalformedBracket(_)));
        let e = parse("A # B", &s).unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::UnexpectedChar('#'));
        assert!(parse("", &s).is_err());
    }

    #[test]
    fn brackets_and_powers() {
        let s = abd();
        let c = parse_element("[A, B]", &s).unwrap();
        assert_eq!(c.to_text(), "A*B - B*A");
        let a = parse_element("{A^2, B}", &s).unwrap();
        assert_eq!(a.to_text(), "A^2*B + B*A^2");
        assert_eq!(parse_element("A^0", &s).unwrap().to_text(), "1");
    }

    #[test]
    fn ast_print_reparse() {
        let s = abd();
        for src in ["-A*(B - 1/2*D)^3 + [A, {B, α}]", "(A^2)^3 - (A - B)", "(A + B)(A - B)"] {
            let ast = parse(src, &s).unwrap();
            let again = parse(&ast.to_text(&s), &s).unwrap();
            assert_eq!(again.strip_parens(), ast.strip_parens(), "{src}");
        }
    }
}
