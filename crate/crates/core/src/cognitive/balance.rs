use std::fmt;

use num_traits::{Signed, Zero};

use super::ConceptModel;
use crate::error::{Error, Result};

/// Largest model accepted by [`balance`].
pub const MAX_BALANCE_CONCEPTS: usize = 12;

/// Product of edge signs along a path; `I` absorbs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PathSign {
    Positive,
    Negative,
    Indeterminate,
}

impl PathSign {
    fn index(self) -> usize {
        self as usize
    }

    fn times(self, other: PathSign) -> PathSign {
        use PathSign::*;
        match (self, other) {
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            (a, b) if a == b => Positive,
            _ => Negative,
        }
    }
}

impl fmt::Display for PathSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PathSign::Positive => "+",
            PathSign::Negative => "-",
            PathSign::Indeterminate => "I",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BalanceReport {
    pub balanced: bool,
    /// Two simple paths with the same endpoints and different signs.
    pub witness: Option<[(Vec<usize>, PathSign); 2]>,
}

const NONE: u32 = u32::MAX;

/// A model is imbalanced when some ordered pair of distinct concepts is
/// joined by two simple directed paths of different sign, counting an
/// indeterminate sign as different from either determinate one.
pub fn balance(model: &ConceptModel) -> Result<BalanceReport> {
    let n = model.len();
    if n > MAX_BALANCE_CONCEPTS {
        return Err(Error::TooLarge {
            what: "concept count for path enumeration",
            actual: n,
            limit: MAX_BALANCE_CONCEPTS,
        });
    }
    let w = model.weights();
    let sign_of = |u: usize, v: usize| {
        let x = w.get(u, v);
        if !x.indet().is_zero() {
            Some(PathSign::Indeterminate)
        } else if x.real().is_positive() {
            Some(PathSign::Positive)
        } else if x.real().is_negative() {
            Some(PathSign::Negative)
        } else {
            None
        }
    };
    let states = (1usize << n) * n * 3;
    let at = |mask: usize, v: usize, s: PathSign| (mask * n + v) * 3 + s.index();
    for source in 0..n {
        // parent[state] = predecessor state, NONE when unreached.
        let mut parent = vec![NONE; states];
        let root = at(1 << source, source, PathSign::Positive);
        parent[root] = root as u32;
        for mask in 0..1usize << n {
            if mask >> source & 1 == 0 {
                continue;
            }
            for v in (0..n).filter(|&v| mask >> v & 1 == 1) {
                for s in [PathSign::Positive, PathSign::Negative, PathSign::Indeterminate] {
                    let here = at(mask, v, s);
                    if parent[here] == NONE {
                        continue;
                    }
                    for next in (0..n).filter(|&x| mask >> x & 1 == 0) {
                        if let Some(e) = sign_of(v, next) {
                            let there = at(mask | 1 << next, next, s.times(e));
                            if parent[there] == NONE {
                                parent[there] = here as u32;
                            }
                        }
                    }
                }
            }
        }
        for target in (0..n).filter(|&t| t != source) {
            let mut found: Vec<(usize, PathSign)> = Vec::new();
            for s in [PathSign::Positive, PathSign::Negative, PathSign::Indeterminate] {
                let reached = (0..1usize << n).find(|&mask| mask >> target & 1 == 1 && parent[at(mask, target, s)] != NONE);
                if let Some(mask) = reached {
                    found.push((at(mask, target, s), s));
                }
            }
            if found.len() >= 2 {
                let path = |mut state: usize| {
                    let mut vertices = Vec::new();
                    loop {
                        vertices.push(state / 3 % n);
                        let p = parent[state] as usize;
                        if p == state {
                            break;
                        }
                        state = p;
                    }
                    vertices.reverse();
                    vertices
                };
                return Ok(BalanceReport {
                    balanced: false,
                    witness: Some([(path(found[0].0), found[0].1), (path(found[1].0), found[1].1)]),
                });
            }
        }
    }
    Ok(BalanceReport {
        balanced: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::NeutroMatrix;
    use crate::number::NeutroNumber;

    fn model(rows: Vec<Vec<NeutroNumber>>) -> ConceptModel {
        ConceptModel::unnamed(NeutroMatrix::from_rows(rows).unwrap()).unwrap()
    }

    fn n(s: &str) -> NeutroNumber {
        s.parse().unwrap()
    }

    #[test]
    fn single_edge_is_balanced() {
        let m = model(vec![vec![n("0"), n("1")], vec![n("0"), n("0")]]);
        assert!(balance(&m).unwrap().balanced);
    }

    #[test]
    fn opposite_signs() {
        // u = 0, v = 1, w = 2
        let m = model(vec![
            vec![n("0"), n("1"), n("1")],
            vec![n("0"), n("0"), n("0")],
            vec![n("0"), n("-1"), n("0")],
        ]);
        let report = balance(&m).unwrap();
        assert!(!report.balanced);
        let [a, b] = report.witness.unwrap();
        assert_eq!(a, (vec![0, 1], PathSign::Positive));
        assert_eq!(b, (vec![0, 2, 1], PathSign::Negative));
    }

    #[test]
    fn indeterminate_differs_from_positive() {
        let m = model(vec![
            vec![n("0"), n("1"), n("1")],
            vec![n("0"), n("0"), n("0")],
            vec![n("0"), n("I"), n("0")],
        ]);
        let [_, b] = balance(&m).unwrap().witness.unwrap();
        assert_eq!(b.1, PathSign::Indeterminate);
    }
}
