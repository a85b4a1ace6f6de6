//! The set-spec mini-language.
//!
//! ```text
//! spec := "interval-union(a=" rat ", b=" rat ")"
//!       | "leading-digit(base=" int ", digits={" int-list "})"
//!       | "powers(base=" int ", min-exp=" int ")"
//!       | "factorial(" ("A" | "B") ")"
//!       | "union(" spec ";" spec ")"
//!       | "explicit(" int-list ")"
//!       | "periodic(period=" int ", residues={" int-list "})"
//!       | "delta-family(" rat ")"
//! rat  := int | int "/" positive-int | int "." digits
//! ```
//!
//! Whitespace may appear between any two tokens.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::approx::build_delta_family;
use crate::numeric::{ratio, Natural, Rational};
use crate::setspec::{short_rational, Part, SetSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    Semantic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    /// Byte offset into the input.
    pub offset: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ParseErrorKind::Syntax => "syntax error",
            ParseErrorKind::Semantic => "semantic error",
        };
        write!(f, "{kind} at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

/// Syntax tree of a set expression. Only semantically valid trees are produced by [`parse_expr`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecExpr {
    IntervalUnion { a: Rational, b: Rational },
    LeadingDigit { base: u64, digits: Vec<u64> },
    Powers { base: u64, min_exp: u32 },
    Factorial(Part),
    Union(Box<SpecExpr>, Box<SpecExpr>),
    Explicit(Vec<Natural>),
    Periodic { period: u64, residues: Vec<u64> },
    DeltaFamily(Rational),
}

impl SpecExpr {
    pub fn lower(&self) -> SetSpec {
        match self {
            SpecExpr::IntervalUnion { a, b } => SetSpec::IntervalUnion { a: a.clone(), b: b.clone() },
            SpecExpr::LeadingDigit { base, digits } => {
                SetSpec::LeadingDigit { base: *base, digits: digits.clone() }
            }
            SpecExpr::Powers { base, min_exp } => {
                SetSpec::GeometricPowers { base: *base, min_exp: *min_exp }
            }
            SpecExpr::Factorial(p) => SetSpec::FactorialBlocks(*p),
            SpecExpr::Union(l, r) => SetSpec::union(l.lower(), r.lower()),
            SpecExpr::Explicit(xs) => SetSpec::Explicit(xs.clone()),
            SpecExpr::Periodic { period, residues } => {
                SetSpec::Periodic { period: *period, residues: residues.clone() }
            }
            SpecExpr::DeltaFamily(d) => {
                build_delta_family(d).expect("delta validated at parse time")
            }
        }
    }
}

fn list(xs: impl Iterator<Item = String>) -> String {
    xs.collect::<Vec<_>>().join(",")
}

impl fmt::Display for SpecExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpecExpr::DeltaFamily(d) => write!(f, "delta-family({})", short_rational(d)),
            SpecExpr::Union(l, r) => write!(f, "union({l}; {r})"),
            SpecExpr::Explicit(xs) => write!(f, "explicit({})", list(xs.iter().map(|x| x.to_string()))),
            SpecExpr::LeadingDigit { base, digits } => write!(
                f,
                "leading-digit(base={base}, digits={{{}}})",
                list(digits.iter().map(u64::to_string))
            ),
            SpecExpr::Periodic { period, residues } => write!(
                f,
                "periodic(period={period}, residues={{{}}})",
                list(residues.iter().map(u64::to_string))
            ),
            other => write!(f, "{}", other.lower()),
        }
    }
}

/// Parses and validates a set expression.
pub fn parse_spec(text: &str) -> Result<SetSpec, ParseError> {
    parse_expr(text).map(|e| e.lower())
}

/// Parses a set expression into its syntax tree.
pub fn parse_expr(text: &str) -> Result<SpecExpr, ParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0, depth: 0 };
    p.skip_ws();
    if p.at_end() {
        return Err(p.syntax("empty set expression"));
    }
    let expr = p.spec()?;
    p.skip_ws();
    if !p.at_end() {
        return Err(p.syntax("trailing input after set expression"));
    }
    Ok(expr)
}

const MAX_DEPTH: usize = 64;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    depth: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, msg: impl Into<String>) -> ParseError {
        ParseError { kind: ParseErrorKind::Syntax, offset: self.pos, message: msg.into() }
    }

    fn semantic(offset: usize, msg: impl Into<String>) -> ParseError {
        ParseError { kind: ParseErrorKind::Semantic, offset, message: msg.into() }
    }

    fn expect(&mut self, token: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            Ok(())
        } else {
            Err(self.syntax(format!("expected `{token}`")))
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Result<&str, ParseError> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic() || c == b'-') {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a set constructor name"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn digits(&mut self) -> Result<&str, ParseError> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected digits"));
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    fn natural(&mut self) -> Result<Natural, ParseError> {
        self.skip_ws();
        Ok(self.digits()?.parse().expect("digit string"))
    }

    fn small(&mut self, what: &str) -> Result<u64, ParseError> {
        self.skip_ws();
        let at = self.pos;
        self.natural()?
            .to_u64()
            .ok_or_else(|| Self::semantic(at, format!("{what} too large")))
    }

    fn rational(&mut self) -> Result<Rational, ParseError> {
        self.skip_ws();
        let whole: BigInt = self.digits()?.parse().expect("digit string");
        if self.eat("/") {
            self.skip_ws();
            let at = self.pos;
            let den: BigInt = self.digits()?.parse().expect("digit string");
            if den.is_zero() {
                return Err(Self::semantic(at, "zero denominator"));
            }
            return Ok(Rational::new(whole, den));
        }
        // decimals must not have whitespace around the point
        if self.peek() == Some(b'.') {
            self.pos += 1;
            let frac = self.digits()?;
            let scale = num_traits::pow(BigInt::from(10u32), frac.len());
            let frac: BigInt = frac.parse().expect("digit string");
            return Ok(Rational::new(whole * &scale + frac, scale));
        }
        Ok(Rational::from_integer(whole))
    }

    fn small_list(&mut self, what: &str) -> Result<Vec<u64>, ParseError> {
        let mut out = Vec::new();
        self.skip_ws();
        if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            out.push(self.small(what)?);
            while self.eat(",") {
                out.push(self.small(what)?);
            }
        }
        Ok(out)
    }

    fn spec(&mut self) -> Result<SpecExpr, ParseError> {
        self.depth += 1;
        if self.depth > MAX_DEPTH {
            return Err(self.syntax("set expression nested too deeply"));
        }
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?.to_string();
        self.expect("(")?;
        let expr = match name.as_str() {
            "interval-union" => {
                self.expect("a")?;
                self.expect("=")?;
                let a = self.rational()?;
                self.expect(",")?;
                self.expect("b")?;
                self.expect("=")?;
                let b = self.rational()?;
                if a <= Rational::one() {
                    return Err(Self::semantic(start, "interval-union requires a > 1"));
                }
                if b < a {
                    return Err(Self::semantic(start, "interval-union requires b >= a"));
                }
                SpecExpr::IntervalUnion { a, b }
            }
            "leading-digit" => {
                self.expect("base")?;
                self.expect("=")?;
                let base = self.small("base")?;
                self.expect(",")?;
                self.expect("digits")?;
                self.expect("=")?;
                self.expect("{")?;
                let mut digits = self.small_list("digit")?;
                self.expect("}")?;
                if base < 2 {
                    return Err(Self::semantic(start, "leading-digit requires base >= 2"));
                }
                if digits.is_empty() {
                    return Err(Self::semantic(start, "leading-digit requires at least one digit"));
                }
                if let Some(d) = digits.iter().find(|&&d| d == 0 || d >= base) {
                    return Err(Self::semantic(start, format!("digit {d} must lie in 1..{}", base - 1)));
                }
                digits.sort_unstable();
                digits.dedup();
                SpecExpr::LeadingDigit { base, digits }
            }
            "powers" => {
                self.expect("base")?;
                self.expect("=")?;
                let base = self.small("base")?;
                self.expect(",")?;
                self.expect("min-exp")?;
                self.expect("=")?;
                let at = self.pos;
                let min_exp = self.small("min-exp")?;
                if base < 2 {
                    return Err(Self::semantic(start, "powers requires base >= 2"));
                }
                let min_exp = u32::try_from(min_exp)
                    .map_err(|_| Self::semantic(at, "min-exp too large"))?;
                SpecExpr::Powers { base, min_exp }
            }
            "factorial" => {
                let part = if self.eat("A") {
                    Part::A
                } else if self.eat("B") {
                    Part::B
                } else {
                    return Err(self.syntax("expected `A` or `B`"));
                };
                SpecExpr::Factorial(part)
            }
            "union" => {
                let left = self.spec()?;
                self.expect(";")?;
                let right = self.spec()?;
                SpecExpr::Union(Box::new(left), Box::new(right))
            }
            "explicit" => {
                let mut xs = Vec::new();
                self.skip_ws();
                if matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
                    xs.push(self.natural()?);
                    while self.eat(",") {
                        xs.push(self.natural()?);
                    }
                }
                if xs.iter().any(Zero::is_zero) {
                    return Err(Self::semantic(start, "explicit elements must be >= 1"));
                }
                if xs.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Self::semantic(start, "explicit elements must be strictly increasing"));
                }
                SpecExpr::Explicit(xs)
            }
            "periodic" => {
                self.expect("period")?;
                self.expect("=")?;
                let period = self.small("period")?;
                self.expect(",")?;
                self.expect("residues")?;
                self.expect("=")?;
                self.expect("{")?;
                let mut residues = self.small_list("residue")?;
                self.expect("}")?;
                if period == 0 {
                    return Err(Self::semantic(start, "periodic requires period >= 1"));
                }
                if let Some(r) = residues.iter().find(|&&r| r >= period) {
                    return Err(Self::semantic(start, format!("residue {r} must be below {period}")));
                }
                residues.sort_unstable();
                residues.dedup();
                SpecExpr::Periodic { period, residues }
            }
            "delta-family" => {
                let delta = self.rational()?;
                if delta >= ratio(1, 2) {
                    return Err(Self::semantic(
                        start,
                        "delta-family requires delta < 1/2 (lower density >= 1/2 forces fractional density)",
                    ));
                }
                SpecExpr::DeltaFamily(delta)
            }
            other => {
                return Err(Self::semantic(start, format!("unknown set constructor `{other}`")));
            }
        };
        self.expect(")")?;
        self.depth -= 1;
        Ok(expr)
    }
}
