//! Integer Laurent polynomials in one variable: exact arithmetic for
//! bracket and Jones computations.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

/// A polynomial with integer coefficients and integer (possibly negative)
/// exponents. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    coefficients: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial::default()
    }

    pub fn one() -> Self {
        LaurentPolynomial::monomial(0, 1)
    }

    /// The single term `coefficient * x^exponent`.
    pub fn monomial(exponent: i64, coefficient: i64) -> Self {
        let mut coefficients = BTreeMap::new();
        if coefficient != 0 {
            coefficients.insert(exponent, coefficient);
        }
        LaurentPolynomial { coefficients }
    }

    pub fn from_terms(terms: &[(i64, i64)]) -> Self {
        let mut p = LaurentPolynomial::zero();
        for &(e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exponent: i64, coefficient: i64) {
        if coefficient == 0 {
            return;
        }
        let entry = self.coefficients.entry(exponent).or_insert(0);
        *entry += coefficient;
        if *entry == 0 {
            self.coefficients.remove(&exponent);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coefficients.iter().map(|(&e, &c)| (e, c))
    }

    pub fn coefficient(&self, exponent: i64) -> i64 {
        self.coefficients.get(&exponent).copied().unwrap_or(0)
    }

    /// Replace x by x^-1.
    pub fn invert_variable(&self) -> Self {
        LaurentPolynomial {
            coefficients: self.coefficients.iter().map(|(&e, &c)| (-e, c)).collect(),
        }
    }

    /// Whether the polynomial equals itself with the variable inverted.
    pub fn is_palindromic(&self) -> bool {
        *self == self.invert_variable()
    }

    /// Evaluate at x = 1: the coefficient sum.
    pub fn eval_at_one(&self) -> i64 {
        self.coefficients.values().sum()
    }

    /// Evaluate at x = -1 (well-defined for negative exponents).
    pub fn eval_at_minus_one(&self) -> i64 {
        self.coefficients
            .iter()
            .map(|(&e, &c)| if e.rem_euclid(2) == 0 { c } else { -c })
            .sum()
    }

    /// Exponent span `(min, max)`, or `None` for the zero polynomial.
    pub fn span(&self) -> Option<(i64, i64)> {
        let min = *self.coefficients.keys().next()?;
        let max = *self.coefficients.keys().next_back()?;
        Some((min, max))
    }

    /// Render with the given variable name, terms in decreasing exponent.
    pub fn display_with(&self, variable: &str) -> String {
        if self.coefficients.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (&e, &c)) in self.coefficients.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            let mag = c.abs();
            let body = match e {
                0 => format!("{mag}"),
                1 if mag == 1 => variable.to_string(),
                1 => format!("{mag}{variable}"),
                _ if mag == 1 => format!("{variable}^{e}"),
                _ => format!("{mag}{variable}^{e}"),
            };
            out.push_str(&body);
        }
        out
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = serializer.serialize_seq(Some(self.coefficients.len()))?;
        for (&e, &c) in &self.coefficients {
            seq.serialize_element(&[e, c])?;
        }
        seq.end()
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, other: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            coefficients: self.coefficients.iter().map(|(&e, &c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("t"))
    }
}
