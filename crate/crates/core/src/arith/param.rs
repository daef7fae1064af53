//! Rational functions in named parameters, parsed from coefficient strings.
//!
//! A coefficient such as `(2t-1)/(2(t-1))` is parsed once into a ratio of
//! polynomials and evaluated exactly at rational bindings. No simplification
//! beyond collecting like terms is attempted: a removable singularity still
//! counts as a pole at the binding.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use super::{GaussianRational, Rational};
use crate::error::{Error, Result};

/// Parameter name to rational value.
pub type Bindings = BTreeMap<String, Rational>;

/// Exponents per parameter name; absent names have exponent zero.
type Monomial = BTreeMap<String, u32>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct Poly {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Poly {
    fn constant(c: GaussianRational) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(), c);
        }
        Poly { terms }
    }

    fn var(name: &str) -> Poly {
        let mut m = Monomial::new();
        m.insert(name.to_string(), 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, GaussianRational::one());
        Poly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Poly) -> Poly {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(GaussianRational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Poly { terms }
    }

    fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                for (name, e) in mb {
                    *m.entry(name.clone()).or_insert(0) += e;
                }
                out = out.add(&Poly { terms: [(m, ca * cb)].into_iter().collect() });
            }
        }
        out
    }

    fn variables(&self, out: &mut Vec<String>) {
        for m in self.terms.keys() {
            for name in m.keys() {
                if !out.contains(name) {
                    out.push(name.clone());
                }
            }
        }
    }

    fn eval(&self, bindings: &Bindings) -> Result<GaussianRational> {
        let mut acc = GaussianRational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (name, e) in m {
                let v = bindings.get(name).ok_or_else(|| Error::UnboundParameter(name.clone()))?;
                term = &term * &GaussianRational::from_real(v.clone()).pow(*e);
            }
            acc += term;
        }
        Ok(acc)
    }
}

/// A rational function with ℚ(i) coefficients in declared parameters.
///
/// The denominator polynomial is never identically zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamExpr {
    source: String,
    num: Poly,
    den: Poly,
}

impl ParamExpr {
    /// Parses coefficient syntax: integers, decimals, parameter names, the
    /// imaginary unit `i`, `+ - * / ^`, parentheses, and implicit
    /// multiplication such as `2t` or `2(t-1)`.
    pub fn parse(text: &str, params: &[String]) -> Result<ParamExpr> {
        let mut parser = Parser { src: text, chars: text.char_indices().collect(), pos: 0, params };
        let (num, den) = parser.expr()?;
        parser.skip_ws();
        if parser.pos < parser.chars.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(ParamExpr { source: text.trim().to_string(), num, den })
    }

    pub fn constant(c: GaussianRational) -> ParamExpr {
        ParamExpr { source: c.to_string(), num: Poly::constant(c), den: Poly::constant(GaussianRational::one()) }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    /// Parameter names occurring in the expression, in first-seen order.
    pub fn parameters(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.num.variables(&mut out);
        self.den.variables(&mut out);
        out
    }

    pub fn eval(&self, bindings: &Bindings) -> Result<GaussianRational> {
        let den = self.den.eval(bindings)?;
        let num = self.num.eval(bindings)?;
        if den.is_zero() {
            return Err(Error::PoleAtBinding { expr: self.source.clone() });
        }
        num.checked_div(&den)
    }
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.source)
    }
}

type Frac = (Poly, Poly);

struct Parser<'a> {
    src: &'a str,
    chars: Vec<(usize, char)>,
    pos: usize,
    params: &'a [String],
}

impl Parser<'_> {
    fn error(&self, msg: &str) -> Error {
        let offset = self.chars.get(self.pos).map(|c| c.0).unwrap_or(self.src.len());
        Error::CoefficientParse { input: self.src.to_string(), offset, message: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].1.is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|c| match c.1 {
            '\u{2212}' => '-',
            '\u{00b7}' | '\u{22c5}' => '*',
            other => other,
        })
    }

    fn expr(&mut self) -> Result<Frac> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = frac_add(&acc, &rhs);
                }
                Some('-') => {
                    self.pos += 1;
                    let rhs = self.term()?;
                    acc = frac_add(&acc, &(rhs.0.neg(), rhs.1));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Frac> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    acc = (acc.0.mul(&rhs.0), acc.1.mul(&rhs.1));
                }
                Some('/') => {
                    self.pos += 1;
                    let rhs = self.unary()?;
                    if rhs.0.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    acc = (acc.0.mul(&rhs.1), acc.1.mul(&rhs.0));
                }
                // implicit multiplication: `2t`, `2(t-1)`, `t i`
                Some(c) if c == '(' || c.is_alphanumeric() || c == '_' => {
                    let rhs = self.power()?;
                    acc = (acc.0.mul(&rhs.0), acc.1.mul(&rhs.1));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Frac> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                let (n, d) = self.unary()?;
                Ok((n.neg(), d))
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Frac> {
        let base = self.primary()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.chars.len() && self.chars[self.pos].1.is_ascii_digit() {
                self.pos += 1;
            }
            let digits: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
            let e: u32 = digits.parse().map_err(|_| self.error("expected a nonnegative integer exponent"))?;
            let mut acc = (Poly::constant(GaussianRational::one()), Poly::constant(GaussianRational::one()));
            for _ in 0..e {
                acc = (acc.0.mul(&base.0), acc.1.mul(&base.1));
            }
            return Ok(acc);
        }
        Ok(base)
    }

    fn primary(&mut self) -> Result<Frac> {
        let one = Poly::constant(GaussianRational::one());
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() || c == '.' => {
                let start = self.pos;
                while self.pos < self.chars.len() && (self.chars[self.pos].1.is_ascii_digit() || self.chars[self.pos].1 == '.') {
                    self.pos += 1;
                }
                let text: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                let value = parse_decimal(&text).ok_or_else(|| {
                    self.pos = start;
                    self.error("malformed number")
                })?;
                Ok((Poly::constant(GaussianRational::from_real(value)), one))
            }
            Some(c) if c.is_alphabetic() || c == '_' => {
                let start = self.pos;
                while self.pos < self.chars.len() && (self.chars[self.pos].1.is_alphanumeric() || self.chars[self.pos].1 == '_') {
                    self.pos += 1;
                }
                let name: String = self.chars[start..self.pos].iter().map(|c| c.1).collect();
                if name == "i" {
                    return Ok((Poly::constant(GaussianRational::i()), one));
                }
                if !self.params.iter().any(|p| p == &name) {
                    self.pos = start;
                    return Err(self.error(&format!("unknown parameter `{name}`")));
                }
                Ok((Poly::var(&name), one))
            }
            Some(_) => Err(self.error("expected a number, parameter or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

fn frac_add(a: &Frac, b: &Frac) -> Frac {
    if a.1 == b.1 {
        return (a.0.add(&b.0), a.1.clone());
    }
    (a.0.mul(&b.1).add(&b.0.mul(&a.1)), a.1.mul(&b.1))
}

fn parse_decimal(text: &str) -> Option<Rational> {
    use num_bigint::BigInt;
    let (int_part, frac_part) = match text.split_once('.') {
        Some((a, b)) => (a, b),
        None => (text, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() || frac_part.contains('.') {
        return None;
    }
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().ok()?;
    let denom = num_traits::pow(BigInt::from(10), frac_part.len());
    Some(Rational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational;

    fn t_bindings(num: i64, den: i64) -> Bindings {
        [("t".to_string(), rational(num, den))].into_iter().collect()
    }

    fn params() -> Vec<String> {
        vec!["t".to_string()]
    }

    #[test]
    fn vanishes_at_one_half() {
        let e = ParamExpr::parse("(2t-1)/(2(t-1))", &params()).unwrap();
        assert_eq!(e.eval(&t_bindings(1, 2)).unwrap(), GaussianRational::zero());
    }

    #[test]
    fn evaluates_at_one_third() {
        // (2/3 - 1) / (2 * 1/3 * (1/3 - 1)) = (-1/3) / (-4/9) = 3/4
        let e = ParamExpr::parse("(2t-1)/(2t(t-1))", &params()).unwrap();
        assert_eq!(e.eval(&t_bindings(1, 3)).unwrap(), GaussianRational::frac(3, 4));
    }

    #[test]
    fn pole_at_binding() {
        let e = ParamExpr::parse("(2t-1)/(2(t-1))", &params()).unwrap();
        assert!(matches!(e.eval(&t_bindings(1, 1)), Err(Error::PoleAtBinding { .. })));
    }

    #[test]
    fn unbound_parameter() {
        let e = ParamExpr::parse("1/t", &params()).unwrap();
        assert!(matches!(e.eval(&Bindings::new()), Err(Error::UnboundParameter(p)) if p == "t"));
    }

    #[test]
    fn unknown_identifier_rejected() {
        assert!(matches!(ParamExpr::parse("s+1", &params()), Err(Error::CoefficientParse { .. })));
        assert!(matches!(ParamExpr::parse("1/0", &[]), Err(Error::DivisionByZero)));
        assert!(matches!(ParamExpr::parse("(1+2", &[]), Err(Error::CoefficientParse { .. })));
    }

    #[test]
    fn literal_forms() {
        let cases = [("3/4", GaussianRational::frac(3, 4)), ("-2", GaussianRational::from_int(-2)),
            ("1/2+3/4*i", GaussianRational::complex(1, 2, 3, 4)), ("-i", -GaussianRational::i()),
            ("0.25", GaussianRational::frac(1, 4)), ("(t-1)/t", GaussianRational::from_int(-1))];
        for (text, want) in cases {
            let e = ParamExpr::parse(text, &params()).unwrap();
            assert_eq!(e.eval(&t_bindings(1, 2)).unwrap(), want, "{text}");
        }
    }

    #[test]
    fn power_and_unicode_minus() {
        let e = ParamExpr::parse("t^2 \u{2212} 1", &params()).unwrap();
        assert_eq!(e.eval(&t_bindings(3, 1)).unwrap(), GaussianRational::from_int(8));
        assert_eq!(e.parameters(), vec!["t".to_string()]);
    }
}
