//! Rational expressions in `q`, `s`, `t`: integers, `+ - * /`, parentheses and
//! `^`. Powers of `q` may be half-integers, written `q^(1/2)` or `q^(-3/2)`.

use qszego::{HalfInt, RatFn};

pub fn parse(text: &str) -> Result<RatFn, String> {
    let tokens = lex(text)?;
    let mut p = Parser { tokens, pos: 0 };
    let value = p.expr()?;
    match p.peek() {
        None => Ok(value),
        Some(tok) => Err(format!("unexpected `{tok}` in `{text}`")),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Var(char),
    Op(char),
}

impl std::fmt::Display for Tok {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "{n}"),
            Tok::Var(c) | Tok::Op(c) => write!(f, "{c}"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(d);
                chars.next();
            }
            out.push(Tok::Int(
                digits
                    .parse()
                    .map_err(|_| format!("integer `{digits}` out of range"))?,
            ));
        } else if matches!(c, 'q' | 's' | 't') {
            out.push(Tok::Var(c));
            chars.next();
        } else if "+-*/^()".contains(c) {
            out.push(Tok::Op(c));
            chars.next();
        } else {
            return Err(format!("unexpected character `{c}` in `{text}`"));
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<(), String> {
        if self.eat(op) {
            Ok(())
        } else {
            Err(format!("expected `{op}`"))
        }
    }

    fn expr(&mut self) -> Result<RatFn, String> {
        let mut acc = if self.eat('-') {
            -self.term()?
        } else {
            self.term()?
        };
        loop {
            if self.eat('+') {
                acc = acc + self.term()?;
            } else if self.eat('-') {
                acc = acc - self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RatFn, String> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = acc * self.power()?;
            } else if self.eat('/') {
                acc = acc.div(&self.power()?).map_err(|e| e.to_string())?;
            } else if matches!(self.peek(), Some(Tok::Var(_)) | Some(Tok::Op('('))) {
                acc = acc * self.power()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatFn, String> {
        let is_q = self.peek() == Some(&Tok::Var('q'));
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let twice = self.exponent()?;
        if is_q {
            return Ok(RatFn::q_pow(HalfInt::from_twice(twice)));
        }
        if twice % 2 != 0 {
            return Err("only q takes half-integer exponents".to_string());
        }
        let e = i32::try_from(twice / 2).map_err(|_| "exponent out of range".to_string())?;
        base.pow(e).map_err(|e| e.to_string())
    }

    /// Twice the exponent: `k`, `-k`, `(k)`, `(-k)` or `(k/2)`.
    fn exponent(&mut self) -> Result<i64, String> {
        let paren = self.eat('(');
        let sign = if self.eat('-') { -1 } else { 1 };
        let num = self.int()?;
        let twice = if paren && self.eat('/') {
            match self.int()? {
                1 => 2 * num,
                2 => num,
                d => return Err(format!("exponent denominator {d}; only 1 or 2 are allowed")),
            }
        } else {
            2 * num
        };
        if paren {
            self.expect(')')?;
        }
        Ok(sign * twice)
    }

    fn int(&mut self) -> Result<i64, String> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(n)
            }
            other => Err(format!(
                "expected an integer, found {}",
                other.map_or("end of input".into(), |t| t.to_string())
            )),
        }
    }

    fn atom(&mut self) -> Result<RatFn, String> {
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.pos += 1;
                Ok(RatFn::from(n))
            }
            Some(Tok::Var(c)) => {
                self.pos += 1;
                Ok(match c {
                    'q' => RatFn::q(1),
                    's' => RatFn::s(),
                    _ => RatFn::t(),
                })
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            other => Err(format!(
                "expected a value, found {}",
                other.map_or("end of input".into(), |t| t.to_string())
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert_eq!(parse("q^3").unwrap(), RatFn::q(3));
        assert_eq!(parse("-q^-1").unwrap(), -RatFn::q(-1));
        assert_eq!(
            parse("2*q^(1/2)").unwrap(),
            RatFn::q_pow(HalfInt::from_twice(1)).scale_int(2)
        );
        assert_eq!(parse("(1 - q)^2").unwrap(), parse("1 - 2q + q^2").unwrap());
        assert_eq!(parse("1/q").unwrap(), RatFn::q(-1));
        assert_eq!(parse("s t").unwrap(), RatFn::s() * RatFn::t());
        assert!(parse("s^(1/2)").is_err());
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("q^").is_err());
        assert!(parse("(q").is_err());
    }
}
