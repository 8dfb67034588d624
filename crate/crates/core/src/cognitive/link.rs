use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::NeutroMatrix;
use crate::number::NeutroNumber;

/// `a > 0 → 1`, `a < 0 → −1`, `a = 0 ∧ b ≠ 0 → I`, otherwise `0`.
pub fn sign_threshold(raw: &NeutroNumber) -> NeutroNumber {
    if raw.real().is_positive() {
        NeutroNumber::one()
    } else if raw.real().is_negative() {
        NeutroNumber::from_ints(-1, 0)
    } else if !raw.indet().is_zero() {
        NeutroNumber::i()
    } else {
        NeutroNumber::zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkReport {
    pub raw: NeutroMatrix,
    pub signed: NeutroMatrix,
    /// Whether the first map entered the product transposed.
    pub first_transposed: bool,
}

/// Multiplies a chain of maps left to right. When the first two share
/// their row space instead of conforming directly, the first enters
/// transposed.
pub fn link(chain: &[NeutroMatrix]) -> Result<LinkReport> {
    let shapes = || chain.iter().map(|m| format!("{}x{}", m.rows(), m.cols())).collect::<Vec<_>>().join(" -> ");
    let (first, rest) = match chain {
        [first, rest @ ..] if !rest.is_empty() => (first, rest),
        _ => return Err(Error::Shape(format!("link needs at least two maps, got [{}]", shapes()))),
    };
    let first_transposed = first.cols() != rest[0].rows() && first.rows() == rest[0].rows();
    let mut raw = if first_transposed { first.transpose() } else { first.clone() };
    for m in rest {
        raw = raw.mul(m).map_err(|_| Error::Shape(format!("cannot link chain {}", shapes())))?;
    }
    let signed = raw.map(sign_threshold);
    Ok(LinkReport {
        raw,
        signed,
        first_transposed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transposes_shared_row_space() {
        let a = NeutroMatrix::from_int_rows(&[&[1, 0], &[0, 1], &[1, 1]]).unwrap();
        let b = NeutroMatrix::from_int_rows(&[&[1, -1, 0], &[0, 0, 1], &[-1, 0, 0]]).unwrap();
        let report = link(&[a.clone(), b.clone()]).unwrap();
        assert!(report.first_transposed);
        assert_eq!(report.raw.shape(), (2, 3));
        assert_eq!(report.raw, a.transpose().mul(&b).unwrap());
        let with_identity = link(&[a, NeutroMatrix::identity(3).unwrap(), b]).unwrap();
        assert_eq!(with_identity.raw, report.raw);
    }

    #[test]
    fn errors_name_every_shape() {
        let a = NeutroMatrix::zeros(2, 3).unwrap();
        let b = NeutroMatrix::zeros(4, 5).unwrap();
        match link(&[a, b]) {
            Err(Error::Shape(message)) => assert!(message.contains("2x3 -> 4x5"), "{message}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn signs() {
        let s = |t: &str| sign_threshold(&t.parse().unwrap()).to_string();
        assert_eq!(s("3-I"), "1");
        assert_eq!(s("-1+I"), "-1");
        assert_eq!(s("-2I"), "I");
        assert_eq!(s("0"), "0");
    }
}
