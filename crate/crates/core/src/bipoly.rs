//! Sparse bivariate polynomials in `x`, `y` with arbitrary-precision integer
//! coefficients.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Exponent pair `(deg_x, deg_y)`.
pub type Exponents = (u32, u32);

/// Polynomial in `x` and `y` over the integers. Zero coefficients are never
/// stored, so structural equality is coefficient-wise equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiPoly {
    terms: BTreeMap<Exponents, BigInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

pub fn arith(op: ArithOp, p: &BiPoly, q: &BiPoly) -> BiPoly {
    match op {
        ArithOp::Add => p + q,
        ArithOp::Sub => p - q,
        ArithOp::Mul => p * q,
    }
}

/// `(x + y)^n`, the polynomial of the edgeless graph on `n` vertices.
pub fn power_xy(n: u32) -> BiPoly {
    // binomial expansion, C(n,i) built incrementally
    let mut terms = BTreeMap::new();
    let mut binom = BigInt::one();
    for i in 0..=n {
        terms.insert((n - i, i), binom.clone());
        binom = binom * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    BiPoly { terms }
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn x() -> Self {
        Self::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(1, 0, 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, dx: u32, dy: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((dx, dy), c);
        }
        BiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exponents, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, b)| a + b).max()
    }

    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|&(a, _)| a).max()
    }

    fn add_term(&mut self, e: Exponents, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiply by `y^d`.
    pub fn scale_y(&self, d: u32) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&(a, b), c)| ((a, b + d), c.clone())).collect(),
        }
    }

    pub fn eval(&self, k: u64, l: u64) -> BigInt {
        self.eval_big(&BigInt::from(k), &BigInt::from(l))
    }

    pub fn eval_big(&self, k: &BigInt, l: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(a, b), c)| c * Pow::pow(k, a) * Pow::pow(l, b))
            .sum()
    }

    /// Substitute a value for `x`, leaving a polynomial in `y`.
    pub fn subs_x(&self, value: i64) -> BiPoly {
        let v = BigInt::from(value);
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((0, b), c * Pow::pow(&v, a));
        }
        out
    }

    /// Substitute a value for `y`, leaving a polynomial in `x`.
    pub fn subs_y(&self, value: i64) -> BiPoly {
        let v = BigInt::from(value);
        let mut out = BiPoly::zero();
        for (&(a, b), c) in &self.terms {
            out.add_term((a, 0), c * Pow::pow(&v, b));
        }
        out
    }

    pub fn pow(&self, n: u32) -> BiPoly {
        let mut acc = BiPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Terms in display order: total degree descending, then `x`-degree descending.
    fn display_order(&self) -> Vec<(Exponents, &BigInt)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|&((a1, b1), _), &((a2, b2), _)| match (a2 + b2).cmp(&(a1 + b1)) {
            Ordering::Equal => a2.cmp(&a1),
            o => o,
        });
        v
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;

    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;

    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;

    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        BiPoly { terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: BiPoly) -> BiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $method(self, rhs: &BiPoly) -> BiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BiPoly {
    type Output = BiPoly;

    fn neg(self) -> BiPoly {
        -&self
    }
}

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| acc * p)
    }
}

impl std::iter::Sum for BiPoly {
    fn sum<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::zero(), |acc, p| acc + p)
    }
}

fn write_monomial(f: &mut fmt::Formatter<'_>, magnitude: &BigInt, dx: u32, dy: u32) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    if !magnitude.is_one() || (dx == 0 && dy == 0) {
        parts.push(magnitude.to_string());
    }
    for (var, d) in [("x", dx), ("y", dy)] {
        match d {
            0 => {}
            1 => parts.push(var.to_string()),
            _ => parts.push(format!("{var}^{d}")),
        }
    }
    f.write_str(&parts.join("*"))
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, ((dx, dy), c)) in self.display_order().into_iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_monomial(f, &c.abs(), dx, dy)?;
        }
        Ok(())
    }
}

pub fn format_poly(p: &BiPoly) -> String {
    p.to_string()
}

/// Parse the text form written by [`format_poly`]. Factors inside a term may
/// appear in any order and repeat (`2*y*x*x` is `2*x^2*y`).
pub fn parse_poly(text: &str) -> Result<BiPoly> {
    let err = |message: String| Error::Parse { line: 1, message };
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty polynomial".into()));
    }
    let mut out = BiPoly::zero();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let negative = match rest.as_bytes()[0] {
            b'+' => {
                rest = &rest[1..];
                false
            }
            b'-' => {
                rest = &rest[1..];
                true
            }
            _ if first => false,
            _ => return Err(err(format!("expected '+' or '-' before {rest:?}"))),
        };
        first = false;
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        let term = &rest[..end];
        rest = &rest[end..];
        if term.is_empty() {
            return Err(err("missing term after sign".into()));
        }
        let mut coeff = BigInt::one();
        let (mut dx, mut dy) = (0u32, 0u32);
        for factor in term.split('*') {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => {
                    let e: u32 = e.parse().map_err(|_| err(format!("bad exponent in {factor:?}")))?;
                    (b, e)
                }
                None => (factor, 1),
            };
            match base {
                "x" => dx += exp,
                "y" => dy += exp,
                "" => return Err(err(format!("empty factor in term {term:?}"))),
                digits if digits.bytes().all(|b| b.is_ascii_digit()) => {
                    let c: BigInt = digits.parse().map_err(|_| err(format!("bad coefficient {digits:?}")))?;
                    coeff *= Pow::pow(&c, exp);
                }
                other => return Err(err(format!("malformed factor {other:?}"))),
            }
        }
        if negative {
            coeff = -coeff;
        }
        out.add_term((dx, dy), coeff);
    }
    Ok(out)
}

impl FromStr for BiPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}
