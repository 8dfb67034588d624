//! Exact neutrosophic scalars `a + bI` over the rationals, with `I² = I`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    BigRational::from_integer(BigInt::from(value))
}

/// Parse a decimal rational (`3`, `-0.25`, `.3`) or a fraction (`2/3`).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(BigRational::new(p, q));
    }
    let (negative, body) = match text.as_bytes()[0] {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.bytes().all(|c| c.is_ascii_digit()) || !frac.bytes().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    let value = BigRational::new(numer, denom);
    Some(if negative { -value } else { value })
}

/// Render a rational: integers plainly, terminating fractions as decimals,
/// everything else as `p/q`.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        return value.numer().to_string();
    }
    let mut denom = value.denom().clone();
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    let (mut twos, mut fives) = (0usize, 0usize);
    while denom.is_multiple_of(&two) {
        denom /= &two;
        twos += 1;
    }
    while denom.is_multiple_of(&five) {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }
    let places = twos.max(fives);
    let scaled = value.abs() * BigRational::from_integer(num_traits::pow(BigInt::from(10u32), places));
    let digits = scaled.to_integer().to_string();
    let digits = format!("{digits:0>width$}", width = places + 1);
    let (whole, frac) = digits.split_at(digits.len() - places);
    let sign = if value.is_negative() { "-" } else { "" };
    format!("{sign}{whole}.{frac}")
}

/// An element `a + bI` of the neutrosophic ring `Q(I)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct NeutroNumber {
    real: Rational,
    indet: Rational,
}

impl NeutroNumber {
    pub fn new(real: Rational, indet: Rational) -> Self {
        NeutroNumber { real, indet }
    }

    pub fn from_ints(real: i64, indet: i64) -> Self {
        NeutroNumber::new(int(real), int(indet))
    }

    pub fn real_value(real: Rational) -> Self {
        NeutroNumber::new(real, Rational::zero())
    }

    pub fn zero() -> Self {
        NeutroNumber::from_ints(0, 0)
    }

    pub fn one() -> Self {
        NeutroNumber::from_ints(1, 0)
    }

    /// The pure indeterminate `I`.
    pub fn i() -> Self {
        NeutroNumber::from_ints(0, 1)
    }

    pub fn real(&self) -> &Rational {
        &self.real
    }

    pub fn indet(&self) -> &Rational {
        &self.indet
    }

    pub fn is_zero(&self) -> bool {
        self.real.is_zero() && self.indet.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.indet.is_zero()
    }

    pub fn split(&self) -> SplitPair {
        SplitPair {
            first: self.real.clone(),
            second: &self.real + &self.indet,
        }
    }
}

impl From<i64> for NeutroNumber {
    fn from(value: i64) -> Self {
        NeutroNumber::from_ints(value, 0)
    }
}

/// Image of `a + bI` under `Q(I) ≅ Q × Q`, namely `(a, a + b)`.
///
/// Both coordinates are ring homomorphisms (`I ↦ 0` and `I ↦ 1`), so
/// elimination can run in each coordinate separately even though `Q(I)`
/// has zero divisors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SplitPair {
    pub first: Rational,
    pub second: Rational,
}

impl SplitPair {
    pub fn new(first: Rational, second: Rational) -> Self {
        SplitPair { first, second }
    }

    pub fn unsplit(&self) -> NeutroNumber {
        NeutroNumber::new(self.first.clone(), &self.second - &self.first)
    }
}

impl Add<&NeutroNumber> for &NeutroNumber {
    type Output = NeutroNumber;

    fn add(self, rhs: &NeutroNumber) -> NeutroNumber {
        NeutroNumber::new(&self.real + &rhs.real, &self.indet + &rhs.indet)
    }
}

impl Add for NeutroNumber {
    type Output = NeutroNumber;

    fn add(self, rhs: NeutroNumber) -> NeutroNumber {
        &self + &rhs
    }
}

impl Sub<&NeutroNumber> for &NeutroNumber {
    type Output = NeutroNumber;

    fn sub(self, rhs: &NeutroNumber) -> NeutroNumber {
        NeutroNumber::new(&self.real - &rhs.real, &self.indet - &rhs.indet)
    }
}

impl Sub for NeutroNumber {
    type Output = NeutroNumber;

    fn sub(self, rhs: NeutroNumber) -> NeutroNumber {
        &self - &rhs
    }
}

impl Mul<&NeutroNumber> for &NeutroNumber {
    type Output = NeutroNumber;

    // (a + bI)(c + dI) = ac + (ad + bc + bd)I
    fn mul(self, rhs: &NeutroNumber) -> NeutroNumber {
        let real = &self.real * &rhs.real;
        let indet = &self.real * &rhs.indet + &self.indet * &rhs.real + &self.indet * &rhs.indet;
        NeutroNumber::new(real, indet)
    }
}

impl Mul for NeutroNumber {
    type Output = NeutroNumber;

    fn mul(self, rhs: NeutroNumber) -> NeutroNumber {
        &self * &rhs
    }
}

impl Neg for &NeutroNumber {
    type Output = NeutroNumber;

    fn neg(self) -> NeutroNumber {
        NeutroNumber::new(-&self.real, -&self.indet)
    }
}

impl Neg for NeutroNumber {
    type Output = NeutroNumber;

    fn neg(self) -> NeutroNumber {
        -&self
    }
}

impl std::iter::Sum for NeutroNumber {
    fn sum<It: Iterator<Item = NeutroNumber>>(iter: It) -> Self {
        iter.fold(NeutroNumber::zero(), |acc, x| &acc + &x)
    }
}

fn format_coefficient(value: &Rational) -> String {
    if value.is_one() {
        String::new()
    } else if *value == -Rational::one() {
        "-".to_string()
    } else {
        format_rational(value)
    }
}

impl fmt::Display for NeutroNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.real.is_zero(), self.indet.is_zero()) {
            (true, true) => write!(f, "0"),
            (false, true) => write!(f, "{}", format_rational(&self.real)),
            (true, false) => write!(f, "{}I", format_coefficient(&self.indet)),
            (false, false) => {
                let sign = if self.indet.is_negative() { "-" } else { "+" };
                let magnitude = self.indet.abs();
                let coefficient = if magnitude.is_one() {
                    String::new()
                } else {
                    format_rational(&magnitude)
                };
                write!(f, "{}{}{}I", format_rational(&self.real), sign, coefficient)
            }
        }
    }
}

struct Term {
    value: Rational,
    indeterminate: bool,
}

/// Reads one signed term starting at `start`; returns the term and the
/// index just past it.
fn read_term(token: &str, start: usize, require_sign: bool) -> Result<(Term, usize)> {
    let bytes = token.as_bytes();
    let mut pos = start;
    let mut negative = false;
    match bytes.get(pos) {
        Some(b'-') => {
            negative = true;
            pos += 1;
        }
        Some(b'+') => pos += 1,
        _ if require_sign => {
            return Err(Error::parse(1, pos + 1, "expected '+' or '-'"));
        }
        _ => {}
    }
    let number_start = pos;
    while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'.' || bytes[pos] == b'/') {
        pos += 1;
    }
    let number_text = &token[number_start..pos];
    let indeterminate = bytes.get(pos) == Some(&b'I');
    if indeterminate {
        pos += 1;
    }
    let magnitude = if number_text.is_empty() {
        if !indeterminate {
            return Err(Error::parse(1, number_start + 1, "expected a number or 'I'"));
        }
        Rational::one()
    } else {
        parse_rational(number_text)
            .ok_or_else(|| Error::parse(1, number_start + 1, format!("malformed number '{number_text}'")))?
    };
    let value = if negative { -magnitude } else { magnitude };
    Ok((Term { value, indeterminate }, pos))
}

impl FromStr for NeutroNumber {
    type Err = Error;

    /// Accepts `[-]a`, `[-]bI` and `[-]a[+|-]bI` with decimal or `p/q`
    /// coefficients; a missing `b` means 1.
    fn from_str(text: &str) -> Result<Self> {
        let leading = text.len() - text.trim_start().len();
        let token = text.trim();
        let at = |e: Error| match e {
            Error::Parse { line, column, message } => Error::Parse {
                line,
                column: column + leading,
                message,
            },
            other => other,
        };
        if token.is_empty() {
            return Err(Error::parse(1, 1, "empty value"));
        }
        let (first, pos) = read_term(token, 0, false).map_err(at)?;
        if first.indeterminate {
            if pos != token.len() {
                return Err(at(Error::parse(1, pos + 1, "unexpected trailing input after indeterminate part")));
            }
            return Ok(NeutroNumber::new(Rational::zero(), first.value));
        }
        if pos == token.len() {
            return Ok(NeutroNumber::real_value(first.value));
        }
        let (second, end) = read_term(token, pos, true).map_err(at)?;
        if !second.indeterminate {
            return Err(at(Error::parse(1, end + 1, "second term must carry 'I'")));
        }
        if end != token.len() {
            return Err(at(Error::parse(1, end + 1, "unexpected trailing input")));
        }
        Ok(NeutroNumber::new(first.value, second.value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nn(text: &str) -> NeutroNumber {
        text.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&NeutroNumber::i() + &NeutroNumber::i(), NeutroNumber::from_ints(0, 2));
        assert_eq!(nn("2-6I") + NeutroNumber::zero(), nn("2-6I"));
        assert_eq!(nn("-1+4I") + nn("1-4I"), NeutroNumber::zero());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(NeutroNumber::i() * NeutroNumber::i(), NeutroNumber::i());
        assert_eq!(nn("-I") * nn("3I"), nn("-3I"));
        assert_eq!(NeutroNumber::from(5) * NeutroNumber::i(), nn("5I"));
    }

    #[test]
    fn zero_divisors_exist() {
        let i = NeutroNumber::i();
        let one_minus_i = nn("1-I");
        assert!(!i.is_zero() && !one_minus_i.is_zero());
        assert!((&i * &one_minus_i).is_zero());
    }

    #[test]
    fn split_examples() {
        assert_eq!(NeutroNumber::i().split(), SplitPair::new(int(0), int(1)));
        assert_eq!(nn("2-6I").split(), SplitPair::new(int(2), int(-4)));
        let x = nn("-1+4I");
        assert_eq!(x.split().unsplit(), x);
    }

    #[test]
    fn canonical_rendering() {
        for text in ["0", "I", "2I", "-1+4I", "2-6I", "-I", "0.5I", "3+I", "12+2I", "-2-3I", "1/3", "0.25-1/3I"] {
            assert_eq!(nn(text).to_string(), text);
        }
        assert_eq!(nn("-6I").to_string(), "-6I");
        assert_eq!(nn("0+0I").to_string(), "0");
        assert_eq!(nn(".3").to_string(), "0.3");
        assert_eq!(nn("-0.05").to_string(), "-0.05");
    }

    #[test]
    fn parse_errors_carry_position() {
        for (text, column) in [("", 1), ("2x", 2), ("2+3", 4), ("I2", 2), ("1+I+", 4), ("  +", 4)] {
            match text.parse::<NeutroNumber>() {
                Err(Error::Parse { column: c, .. }) => assert_eq!(c, column, "{text:?}"),
                other => panic!("{text:?} parsed as {other:?}"),
            }
        }
    }

    #[test]
    fn rational_helpers() {
        assert_eq!(parse_rational("0.6"), Some(rat(3, 5)));
        assert_eq!(parse_rational(".0"), Some(int(0)));
        assert_eq!(parse_rational("2/4"), Some(rat(1, 2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("."), None);
        assert_eq!(format_rational(&rat(1, 8)), "0.125");
        assert_eq!(format_rational(&rat(-3, 40)), "-0.075");
        assert_eq!(format_rational(&rat(2, 3)), "2/3");
    }
}
