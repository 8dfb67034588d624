use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::number::{NeutroNumber, Rational};

/// Membership grade: a magnitude in `[0, 1]`, either real or a multiple of
/// `I`. `0·I` is stored as real `0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct FuzzyNeutroValue {
    magnitude: Rational,
    indeterminate: bool,
}

impl FuzzyNeutroValue {
    pub fn new(magnitude: Rational, indeterminate: bool) -> Result<Self> {
        if magnitude < Rational::zero() || magnitude > Rational::one() {
            return Err(Error::domain(format!("membership magnitude {magnitude} is outside [0, 1]")));
        }
        let indeterminate = indeterminate && !magnitude.is_zero();
        Ok(FuzzyNeutroValue {
            magnitude,
            indeterminate,
        })
    }

    pub fn real(magnitude: Rational) -> Result<Self> {
        FuzzyNeutroValue::new(magnitude, false)
    }

    pub fn zero() -> Self {
        FuzzyNeutroValue::default()
    }

    pub fn one() -> Self {
        FuzzyNeutroValue {
            magnitude: Rational::one(),
            indeterminate: false,
        }
    }

    /// The bare symbol `I`.
    pub fn i() -> Self {
        FuzzyNeutroValue {
            magnitude: Rational::one(),
            indeterminate: true,
        }
    }

    pub fn magnitude(&self) -> &Rational {
        &self.magnitude
    }

    pub fn is_indeterminate(&self) -> bool {
        self.indeterminate
    }

    pub fn is_zero(&self) -> bool {
        self.magnitude.is_zero()
    }

    pub fn to_neutro(&self) -> NeutroNumber {
        if self.indeterminate {
            NeutroNumber::new(Rational::zero(), self.magnitude.clone())
        } else {
            NeutroNumber::real_value(self.magnitude.clone())
        }
    }

    /// Accepts real numbers in `[0, 1]` and pure indeterminates `nI` with
    /// `n` in `(0, 1]`.
    pub fn from_neutro(x: &NeutroNumber) -> Result<Self> {
        match (x.real().is_zero(), x.indet().is_zero()) {
            (_, true) => FuzzyNeutroValue::new(x.real().clone(), false),
            (true, false) => FuzzyNeutroValue::new(x.indet().clone(), true),
            (false, false) => Err(Error::domain(format!("membership value {x} mixes a real and an indeterminate part"))),
        }
    }
}

impl FromStr for FuzzyNeutroValue {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let x: NeutroNumber = text.parse()?;
        FuzzyNeutroValue::from_neutro(&x).map_err(|e| match e {
            Error::Domain(message) => Error::parse(1, 1, message),
            other => other,
        })
    }
}

impl fmt::Display for FuzzyNeutroValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_neutro())
    }
}

/// `0` annihilates; otherwise any indeterminate operand makes the result
/// `min(magnitudes)·I`.
pub fn lattice_min(x: &FuzzyNeutroValue, y: &FuzzyNeutroValue) -> FuzzyNeutroValue {
    if x.is_zero() || y.is_zero() {
        return FuzzyNeutroValue::zero();
    }
    FuzzyNeutroValue {
        magnitude: x.magnitude.clone().min(y.magnitude.clone()),
        indeterminate: x.indeterminate || y.indeterminate,
    }
}

/// Larger magnitude wins; on a tie the real operand wins.
pub fn lattice_max(x: &FuzzyNeutroValue, y: &FuzzyNeutroValue) -> FuzzyNeutroValue {
    match x.magnitude.cmp(&y.magnitude) {
        Ordering::Greater => x.clone(),
        Ordering::Less => y.clone(),
        Ordering::Equal if x.indeterminate => y.clone(),
        Ordering::Equal => x.clone(),
    }
}

/// Kleene three-valued truth, ordered `False < Indeterminate < True`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Truth {
    False,
    Indeterminate,
    True,
}

impl Truth {
    pub fn is_true(self) -> bool {
        self == Truth::True
    }

    pub fn all(items: impl IntoIterator<Item = Truth>) -> Truth {
        items.into_iter().fold(Truth::True, |acc, t| acc & t)
    }

    pub fn any(items: impl IntoIterator<Item = Truth>) -> Truth {
        items.into_iter().fold(Truth::False, |acc, t| acc | t)
    }

    pub fn implies(self, other: Truth) -> Truth {
        !self | other
    }
}

impl From<bool> for Truth {
    fn from(b: bool) -> Self {
        if b {
            Truth::True
        } else {
            Truth::False
        }
    }
}

impl Not for Truth {
    type Output = Truth;

    fn not(self) -> Truth {
        match self {
            Truth::True => Truth::False,
            Truth::False => Truth::True,
            Truth::Indeterminate => Truth::Indeterminate,
        }
    }
}

impl BitAnd for Truth {
    type Output = Truth;

    fn bitand(self, rhs: Truth) -> Truth {
        self.min(rhs)
    }
}

impl BitOr for Truth {
    type Output = Truth;

    fn bitor(self, rhs: Truth) -> Truth {
        self.max(rhs)
    }
}

impl fmt::Display for Truth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Truth::True => "true",
            Truth::False => "false",
            Truth::Indeterminate => "indeterminate",
        })
    }
}

// Comparisons read `xI` as an unknown value in `[0, x]`, each occurrence
// independent; a clause is decided only when every reading agrees.

/// `a ≥ b`.
pub fn ge(a: &FuzzyNeutroValue, b: &FuzzyNeutroValue) -> Truth {
    if b.is_zero() {
        return Truth::True;
    }
    match (a.indeterminate, b.indeterminate) {
        (false, false) => (a.magnitude >= b.magnitude).into(),
        (false, true) if a.magnitude >= b.magnitude => Truth::True,
        (true, false) if a.magnitude < b.magnitude => Truth::False,
        (true, true) if a == b => Truth::True,
        _ => Truth::Indeterminate,
    }
}

/// `a > b`.
pub fn gt(a: &FuzzyNeutroValue, b: &FuzzyNeutroValue) -> Truth {
    if a.is_zero() {
        return Truth::False;
    }
    match (a.indeterminate, b.indeterminate) {
        (false, false) => (a.magnitude > b.magnitude).into(),
        (false, true) if a.magnitude > b.magnitude => Truth::True,
        (true, false) if b.magnitude >= a.magnitude => Truth::False,
        (true, true) if a == b => Truth::False,
        _ => Truth::Indeterminate,
    }
}

/// `a = b`.
pub fn eq(a: &FuzzyNeutroValue, b: &FuzzyNeutroValue) -> Truth {
    if a == b {
        return Truth::True;
    }
    match (a.indeterminate, b.indeterminate) {
        (false, false) => Truth::False,
        (false, true) if a.magnitude > b.magnitude => Truth::False,
        (true, false) if b.magnitude > a.magnitude => Truth::False,
        _ => Truth::Indeterminate,
    }
}
