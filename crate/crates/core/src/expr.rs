//! A small infix syntax for Laurent polynomials.
//!
//! Grammar: sums and differences of products; `*`, `/` and juxtaposition
//! multiply and divide; `^` takes an integer exponent (negative only for
//! monomials). Variables are `x, y, z` or `x1, x2, ...` (not mixed).
//! Division must be exact. A few named polynomials are accepted in place of
//! an expression, see [`alias`].

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::lattice::ExponentVector;
use crate::laurent::{div_exact, rat, LaurentPolynomial, Rational};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Num(BigInt),
    Var(VarName),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum VarName {
    /// `x`, `y`, `z` as 0, 1, 2
    Letter(usize),
    /// `x1`, `x2`, ... as 0, 1, ...
    Indexed(usize),
}

fn tokenize(s: &str) -> Result<Vec<Token>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push(Token::Plus);
                i += 1
            }
            '-' | '−' => {
                out.push(Token::Minus);
                i += 1
            }
            '*' | '·' => {
                out.push(Token::Star);
                i += 1
            }
            '/' => {
                out.push(Token::Slash);
                i += 1
            }
            '^' => {
                out.push(Token::Caret);
                i += 1
            }
            '(' => {
                out.push(Token::LParen);
                i += 1
            }
            ')' => {
                out.push(Token::RParen);
                i += 1
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Token::Num(digits.parse().expect("digits")));
            }
            'x' if i + 1 < chars.len() && chars[i + 1].is_ascii_digit() => {
                let start = i + 1;
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let k: usize = digits.parse().map_err(|_| Error::Parse(format!("bad variable index x{digits}")))?;
                if k == 0 {
                    return Err(Error::Parse("variables are numbered from x1".into()));
                }
                out.push(Token::Var(VarName::Indexed(k - 1)));
            }
            'x' | 'y' | 'z' => {
                out.push(Token::Var(VarName::Letter((c as u8 - b'x') as usize)));
                i += 1
            }
            _ => return Err(Error::Parse(format!("unexpected character {c:?} at position {i}"))),
        }
    }
    Ok(out)
}

#[derive(Debug)]
enum Node {
    Num(BigInt),
    Var(usize),
    Neg(Box<Node>),
    Add(Box<Node>, Box<Node>),
    Sub(Box<Node>, Box<Node>),
    Mul(Box<Node>, Box<Node>),
    Div(Box<Node>, Box<Node>),
    Pow(Box<Node>, i64),
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    style: Option<bool>,
    max_var: Option<usize>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expect(&mut self, t: Token) -> Result<()> {
        match self.next() {
            Some(ref got) if *got == t => Ok(()),
            got => Err(Error::Parse(format!("expected {t:?}, found {got:?}"))),
        }
    }

    fn expr(&mut self) -> Result<Node> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    lhs = Node::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    lhs = Node::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Node> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    lhs = Node::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Token::Num(_) | Token::Var(_) | Token::LParen) => {
                    lhs = Node::Mul(Box::new(lhs), Box::new(self.power()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Node> {
        match self.peek() {
            Some(Token::Minus) => {
                self.pos += 1;
                Ok(Node::Neg(Box::new(self.unary()?)))
            }
            Some(Token::Plus) => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Node> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let e = self.exponent()?;
        Ok(Node::Pow(Box::new(base), e))
    }

    fn exponent(&mut self) -> Result<i64> {
        match self.next() {
            Some(Token::Minus) => Ok(-self.exponent()?),
            Some(Token::Num(n)) => i64::try_from(n).map_err(|_| Error::Parse("exponent too large".into())),
            Some(Token::LParen) => {
                let e = self.exponent()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("expected an integer exponent, found {got:?}"))),
        }
    }

    fn atom(&mut self) -> Result<Node> {
        match self.next() {
            Some(Token::Num(n)) => Ok(Node::Num(n)),
            Some(Token::Var(v)) => {
                let (indexed, i) = match v {
                    VarName::Letter(i) => (false, i),
                    VarName::Indexed(i) => (true, i),
                };
                match self.style {
                    Some(s) if s != indexed => {
                        return Err(Error::Parse("cannot mix x, y, z with x1, x2, ...".into()));
                    }
                    _ => self.style = Some(indexed),
                }
                self.max_var = Some(self.max_var.map_or(i, |m| m.max(i)));
                Ok(Node::Var(i))
            }
            Some(Token::LParen) => {
                let e = self.expr()?;
                self.expect(Token::RParen)?;
                Ok(e)
            }
            got => Err(Error::Parse(format!("unexpected token {got:?}"))),
        }
    }
}

fn eval(node: &Node, rank: usize) -> Result<LaurentPolynomial> {
    Ok(match node {
        Node::Num(n) => LaurentPolynomial::constant(rank, Rational::from_integer(n.clone())),
        Node::Var(i) => LaurentPolynomial::variable(rank, *i),
        Node::Neg(a) => -&eval(a, rank)?,
        Node::Add(a, b) => &eval(a, rank)? + &eval(b, rank)?,
        Node::Sub(a, b) => &eval(a, rank)? - &eval(b, rank)?,
        Node::Mul(a, b) => &eval(a, rank)? * &eval(b, rank)?,
        Node::Div(a, b) => {
            let num = eval(a, rank)?;
            let den = eval(b, rank)?;
            if den.is_zero() {
                return Err(Error::Parse("division by zero".into()));
            }
            div_exact(&num, &den)?.ok_or_else(|| Error::Parse("division is not exact".into()))?
        }
        Node::Pow(a, e) => {
            let base = eval(a, rank)?;
            let k = u32::try_from(e.unsigned_abs()).map_err(|_| Error::Parse("exponent too large".into()))?;
            if *e >= 0 {
                base.pow(k)
            } else {
                let (e0, c0) = match base.terms().next() {
                    Some((e0, c0)) if base.is_monomial() => (e0.clone(), c0.clone()),
                    _ => return Err(Error::Parse("negative powers are only allowed for monomials".into())),
                };
                LaurentPolynomial::monomial(c0.recip(), -&e0).pow(k)
            }
        }
    })
}

/// Named polynomials: `hexagon-q` (the reduced hexagon polynomial
/// x⁻¹y⁻¹(x+y)(x+1)(y+1)), `fs:n` (1 + x1 + ... + xn) and `rem7`
/// (2+2x−x²+2x³+2x⁴).
pub fn alias(name: &str) -> Option<LaurentPolynomial> {
    let name = name.trim();
    match name {
        "hexagon-q" => Some(parse("x^-1*y^-1*(x+y)*(x+1)*(y+1)").expect("valid alias")),
        "rem7" => Some(parse("2+2x-x^2+2x^3+2x^4").expect("valid alias")),
        _ => {
            let n: usize = name.strip_prefix("fs:")?.trim().parse().ok()?;
            if n == 0 {
                return None;
            }
            let mut p = LaurentPolynomial::one(n);
            for i in 0..n {
                p = &p + &LaurentPolynomial::variable(n, i);
            }
            Some(p)
        }
    }
}

/// Parses an expression or alias; the rank is the number of variables
/// implied by the highest variable used (at least 1).
pub fn parse(s: &str) -> Result<LaurentPolynomial> {
    parse_with_rank(s, None)
}

/// Parses with an explicit ambient rank, which must cover every variable used.
pub fn parse_with_rank(s: &str, rank: Option<usize>) -> Result<LaurentPolynomial> {
    if let Some(p) = alias(s) {
        return match rank {
            Some(r) if r < p.rank() => {
                Err(Error::Parse(format!("alias {s:?} has rank {} but rank {r} was requested", p.rank())))
            }
            Some(r) if r > p.rank() => Ok(p.embed_rank(r, 0)),
            _ => Ok(p),
        };
    }
    let tokens = tokenize(s)?;
    if tokens.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { tokens, pos: 0, style: None, max_var: None };
    let ast = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("unexpected trailing input at token {}", parser.pos)));
    }
    let needed = parser.max_var.map_or(1, |m| m + 1);
    let rank = match rank {
        Some(r) if r < needed => {
            return Err(Error::Parse(format!("expression uses {needed} variables but rank {r} was requested")));
        }
        Some(r) => r,
        None => needed,
    };
    eval(&ast, rank)
}

pub fn variable_names(rank: usize) -> Vec<String> {
    if rank <= 3 {
        ["x", "y", "z"][..rank].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=rank).map(|i| format!("x{i}")).collect()
    }
}

fn format_monomial(e: &ExponentVector, names: &[String]) -> String {
    let parts: Vec<String> = e
        .as_slice()
        .iter()
        .zip(names)
        .filter(|(&k, _)| k != 0)
        .map(|(&k, name)| if k == 1 { name.clone() } else { format!("{name}^{k}") })
        .collect();
    parts.join("*")
}

/// Prints terms in lexicographic exponent order, e.g. `6x+8x^2+3x^3`,
/// `x*y`, `1/2*x^-1`. The output parses back to the same polynomial.
pub fn format_polynomial(p: &LaurentPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let names = variable_names(p.rank());
    let mut out = String::new();
    for (i, (e, c)) in p.terms().enumerate() {
        let (neg, a) = (c.is_negative(), c.abs());
        if neg {
            out.push('-');
        } else if i > 0 {
            out.push('+');
        }
        let mono = format_monomial(e, &names);
        if mono.is_empty() {
            out.push_str(&coefficient_text(&a));
        } else if a.is_one() {
            out.push_str(&mono);
        } else if a.is_integer() {
            out.push_str(&format!("{}{mono}", a.numer()));
        } else {
            out.push_str(&format!("{}*{mono}", coefficient_text(&a)));
        }
    }
    out
}

fn coefficient_text(a: &Rational) -> String {
    if a.is_integer() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

/// Shorthand for tests and examples: parse or panic.
pub fn poly(s: &str) -> LaurentPolynomial {
    parse(s).unwrap_or_else(|e| panic!("invalid polynomial {s:?}: {e}"))
}

/// Integer constant in rank `n`.
pub fn constant(n: usize, c: i64) -> LaurentPolynomial {
    LaurentPolynomial::constant(n, rat(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::ratio;

    #[test]
    fn parses_basic_expressions() {
        let p = parse("2+3*x+x^2").unwrap();
        assert_eq!(p.rank(), 1);
        assert_eq!(p, parse("(x+1)(x+2)").unwrap());
        assert_eq!(parse("1+x+y").unwrap().rank(), 2);
        assert_eq!(parse("y").unwrap().rank(), 2);
        assert_eq!(parse("x3").unwrap().rank(), 3);
        assert_eq!(parse("7").unwrap(), constant(1, 7));
        assert_eq!(parse("x^-1*x").unwrap(), constant(1, 1));
        assert_eq!(parse("(x^2-1)/(x-1)").unwrap(), parse("x+1").unwrap());
        assert_eq!(parse("1/2 x").unwrap().coefficient(&ExponentVector::new(vec![1])), ratio(1, 2));
        assert_eq!(parse("-x^2").unwrap().coefficient(&ExponentVector::new(vec![2])), rat(-1));
        assert_eq!(parse("2^3").unwrap(), constant(1, 8));
    }

    #[test]
    fn rejects_bad_input() {
        for bad in ["", "x+", "(x", "x*x1", "x/(1+x)", "(1+x)^-1", "a", "x^y", "x0", "1/0"] {
            assert!(parse(bad).is_err(), "{bad:?} should fail");
        }
        assert!(parse_with_rank("z", Some(2)).is_err());
        assert_eq!(parse_with_rank("x", Some(3)).unwrap().rank(), 3);
    }

    #[test]
    fn aliases() {
        let q = parse("hexagon-q").unwrap();
        assert_eq!(q.len(), 7);
        assert_eq!(parse("fs:3").unwrap(), parse("1+x+y+z").unwrap());
        assert_eq!(parse("rem7").unwrap(), parse("2+2x-x^2+2x^3+2x^4").unwrap());
        assert_eq!(parse_with_rank("fs:2", Some(3)).unwrap().rank(), 3);
    }

    #[test]
    fn printing() {
        assert_eq!(poly("1+x+y").to_string(), "1+y+x");
        assert_eq!(poly("x*y").to_string(), "x*y");
        assert_eq!(poly("6x+8x^2+3x^3").to_string(), "6x+8x^2+3x^3");
        assert_eq!(poly("1/2 x^-1 - 3/4").to_string(), "1/2*x^-1-3/4");
        assert_eq!(poly("x4 - 2 x1").to_string(), "x4-2x1");
        assert_eq!(LaurentPolynomial::zero(2).to_string(), "0");
    }

    #[test]
    fn parse_print_parse() {
        for s in ["hexagon-q", "1/3-x^-2*y+5x*y*z", "fs:5", "(x1-x2)^3", "-1/7*x^3*y^-2+2"] {
            let p = poly(s);
            let again = parse_with_rank(&p.to_string(), Some(p.rank())).unwrap();
            assert_eq!(again, p, "{s}");
        }
    }
}
