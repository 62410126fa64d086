use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg};
use thiserror::Error;

/// Integer Laurent polynomial in `A`. Zero coefficients are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i32, i64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("cannot parse polynomial at byte {pos}: {msg}")]
pub struct PolyParseError {
    pub pos: usize,
    pub msg: String,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i32, coef: i64) -> Self {
        Self::from_terms([(exp, coef)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: i32, c: i64) {
        let v = self.terms.entry(e).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(exponent of A, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exp: i32) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    /// `A ↦ A⁻¹`, equivalently `t ↦ t⁻¹`.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// True iff `p(t) = t^k p(t⁻¹)` for some `k`.
    pub fn is_palindromic(&self) -> bool {
        let (Some(&lo), Some(&hi)) = (self.terms.keys().next(), self.terms.keys().next_back()) else {
            return true;
        };
        self.terms().all(|(e, c)| self.coefficient(lo + hi - e) == c)
    }

    /// Terms in `t = A^-4` as `(2 × exponent of t, coefficient)`, ascending.
    /// `None` if some `A` exponent is odd.
    pub fn t_terms(&self) -> Option<Vec<(i32, i64)>> {
        if self.terms.keys().any(|e| e % 2 != 0) {
            return None;
        }
        Some(self.terms.iter().rev().map(|(&e, &c)| (-e / 2, c)).collect())
    }

    /// Builds a polynomial from `(2 × exponent of t, coefficient)` pairs.
    pub fn from_t_terms(terms: impl IntoIterator<Item = (i32, i64)>) -> Self {
        Self::from_terms(terms.into_iter().map(|(h, c)| (-2 * h, c)))
    }

    /// Parses sums of terms `c t^k` in `t`, e.g. `232 - t^-7 + 9t^-6 - 194 t`
    /// or `-t^(1/2)`. Terms may repeat and appear in any order.
    pub fn parse_t(text: &str) -> Result<Self, PolyParseError> {
        let b = text.as_bytes();
        let mut i = 0;
        let mut out = Vec::new();
        let err = |pos: usize, msg: &str| PolyParseError { pos, msg: msg.into() };
        let skip = |i: &mut usize| {
            while *i < b.len() && b[*i].is_ascii_whitespace() {
                *i += 1;
            }
        };
        let int = |i: &mut usize| -> Option<i64> {
            let start = *i;
            if *i < b.len() && b[*i] == b'-' {
                *i += 1;
            }
            while *i < b.len() && b[*i].is_ascii_digit() {
                *i += 1;
            }
            text[start..*i].parse().ok()
        };
        skip(&mut i);
        if i == b.len() {
            return Err(err(0, "empty polynomial"));
        }
        let mut first = true;
        while i < b.len() {
            let mut sign = 1;
            if i < b.len() && (b[i] == b'+' || b[i] == b'-') {
                sign = if b[i] == b'-' { -1 } else { 1 };
                i += 1;
                skip(&mut i);
            } else if !first {
                return Err(err(i, "expected `+` or `-`"));
            }
            first = false;
            let coef = if i < b.len() && b[i].is_ascii_digit() {
                int(&mut i).ok_or_else(|| err(i, "bad coefficient"))?
            } else {
                1
            };
            skip(&mut i);
            let mut half = 0;
            if i < b.len() && b[i] == b't' {
                i += 1;
                half = 2;
                if i < b.len() && b[i] == b'^' {
                    i += 1;
                    if i < b.len() && b[i] == b'(' {
                        i += 1;
                        let num = int(&mut i).ok_or_else(|| err(i, "bad exponent"))?;
                        let den = if i < b.len() && b[i] == b'/' {
                            i += 1;
                            int(&mut i).ok_or_else(|| err(i, "bad exponent"))?
                        } else {
                            1
                        };
                        if i >= b.len() || b[i] != b')' || (den != 1 && den != 2) {
                            return Err(err(i, "exponent must be k or k/2"));
                        }
                        i += 1;
                        half = (num * 2 / den) as i32;
                    } else {
                        half = 2 * int(&mut i).ok_or_else(|| err(i, "bad exponent"))? as i32;
                    }
                }
            } else if i < b.len() && !matches!(b[i], b'+' | b'-') {
                return Err(err(i, "expected term"));
            }
            out.push((half, sign * coef));
            skip(&mut i);
        }
        Ok(Self::from_t_terms(out))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e, c);
        }
        p
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (a, x) in self.terms() {
            for (b, y) in rhs.terms() {
                p.add_term(a + b, x * y);
            }
        }
        p
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i32, i64)], var: impl Fn(i32) -> String) -> fmt::Result {
    if terms.is_empty() {
        return f.write_str("0");
    }
    for (k, &(e, c)) in terms.iter().enumerate() {
        let v = var(e);
        let mag = c.unsigned_abs();
        let body = match (v.is_empty(), mag) {
            (true, _) => mag.to_string(),
            (false, 1) => v,
            (false, _) => format!("{mag}{v}"),
        };
        match (k, c < 0) {
            (0, true) => write!(f, "-{body}")?,
            (0, false) => f.write_str(&body)?,
            (_, true) => write!(f, " - {body}")?,
            (_, false) => write!(f, " + {body}")?,
        }
    }
    Ok(())
}

/// In `t` (ascending exponents, `t^(k/2)` for half-integers) when every
/// `A` exponent is even, otherwise in `A`.
impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.t_terms() {
            Some(t) => write_terms(f, &t, |h| match (h, h % 2 == 0) {
                (0, _) => String::new(),
                (2, _) => "t".into(),
                (_, true) => format!("t^{}", h / 2),
                (_, false) => format!("t^({h}/2)"),
            }),
            None => {
                let a: Vec<_> = self.terms().collect();
                write_terms(f, &a, |e| match e {
                    0 => String::new(),
                    1 => "A".into(),
                    _ => format!("A^{e}"),
                })
            }
        }
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p = LaurentPolynomial::parse_t("232 - t^-7 + 9t^-6 - 194 t + t^9").unwrap();
        assert_eq!(p.to_string(), "-t^-7 + 9t^-6 + 232 - 194t + t^9");
        assert_eq!(LaurentPolynomial::parse_t("1t^-6").unwrap(), LaurentPolynomial::from_t_terms([(-12, 1)]));
        assert_eq!(LaurentPolynomial::parse_t("-t^(1/2)").unwrap().to_string(), "-t^(1/2)");
        assert_eq!(LaurentPolynomial::parse_t("t - t").unwrap(), LaurentPolynomial::zero());
        assert!(LaurentPolynomial::parse_t("t t").is_err());
        assert!(LaurentPolynomial::parse_t("").is_err());
        assert_eq!(LaurentPolynomial::monomial(3, -1).to_string(), "-A^3");
    }

    #[test]
    fn palindromes() {
        assert!(LaurentPolynomial::one().is_palindromic());
        let p = LaurentPolynomial::parse_t("-t^-4 + t^-3 + t^-1").unwrap();
        assert!(!p.is_palindromic());
        assert!((&p + &p.invert_variable()).is_palindromic());
    }
}
