use std::collections::{BTreeSet, HashMap};
use std::fmt;

use super::{
    check_clamp, check_names, check_simple_weights, step_bound, threshold, ConceptModel, HiddenPattern, PatternKind,
    StateVector,
};
use crate::error::{Error, Result};
use crate::matrix::NeutroMatrix;

/// Rectangular map from a domain space to a disjoint range space, weights
/// over `{−1, 0, 1, I}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationalModel {
    domain_names: Vec<String>,
    range_names: Vec<String>,
    weights: NeutroMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Domain,
    Range,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Domain => "domain",
            Side::Range => "range",
        })
    }
}

impl RelationalModel {
    pub fn new(domain_names: Vec<String>, range_names: Vec<String>, weights: NeutroMatrix) -> Result<Self> {
        check_names(&domain_names, weights.rows(), "row")?;
        check_names(&range_names, weights.cols(), "column")?;
        let domain: BTreeSet<&String> = domain_names.iter().collect();
        if let Some(shared) = range_names.iter().find(|n| domain.contains(n)) {
            return Err(Error::domain(format!("'{shared}' is both a domain and a range name")));
        }
        check_simple_weights(&weights)?;
        Ok(RelationalModel {
            domain_names,
            range_names,
            weights,
        })
    }

    /// Names `D1..Dm` and `R1..Rn`.
    pub fn unnamed(weights: NeutroMatrix) -> Result<Self> {
        RelationalModel::new(
            super::default_names("D", weights.rows()),
            super::default_names("R", weights.cols()),
            weights,
        )
    }

    pub fn domain_names(&self) -> &[String] {
        &self.domain_names
    }

    pub fn range_names(&self) -> &[String] {
        &self.range_names
    }

    pub fn weights(&self) -> &NeutroMatrix {
        &self.weights
    }

    pub fn names(&self, side: Side) -> &[String] {
        match side {
            Side::Domain => &self.domain_names,
            Side::Range => &self.range_names,
        }
    }

    pub fn index_of(&self, side: Side, name: &str) -> Result<usize> {
        self.names(side)
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::NotFound(format!("{side} concept '{name}'")))
    }

    /// Square model on domain then range concepts with block form
    /// `[[0, M], [Mᵀ, 0]]`.
    pub fn to_concept_model(&self) -> ConceptModel {
        let (m, n) = self.weights.shape();
        let mut rows = vec![vec![crate::number::NeutroNumber::zero(); m + n]; m + n];
        for r in 0..m {
            for c in 0..n {
                rows[r][m + c] = self.weights.get(r, c).clone();
                rows[m + c][r] = self.weights.get(r, c).clone();
            }
        }
        let names = self.domain_names.iter().chain(&self.range_names).cloned().collect();
        ConceptModel::new(names, NeutroMatrix::from_rows(rows).expect("non-empty square"))
            .expect("weights and names already validated")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RmRun {
    pub side: Side,
    pub clamp: Vec<usize>,
    /// `(domain, range)` pairs; the first holds the clamped initial state.
    pub trajectory: Vec<(StateVector, StateVector)>,
    pub domain: HiddenPattern,
    pub range: HiddenPattern,
}

fn side_pattern(states: Vec<StateVector>, steps_to_enter: usize) -> HiddenPattern {
    let len = states.len();
    let period = (1..=len)
        .find(|&p| len % p == 0 && (0..len).all(|i| states[i] == states[(i + p) % len]))
        .unwrap_or(len);
    let states: Vec<_> = states.into_iter().take(period).collect();
    HiddenPattern {
        kind: if period == 1 { PatternKind::FixedPoint } else { PatternKind::LimitCycle },
        states,
        steps_to_enter,
    }
}

/// Starting from `s0` on `side`, alternates the forward pass through `M`
/// and the backward pass through `Mᵀ`, clamping the starting side, until a
/// `(domain, range)` pair repeats.
pub fn rm_run(model: &RelationalModel, s0: &StateVector, side: Side, clamp: Option<&[usize]>) -> Result<RmRun> {
    let start_len = model.names(side).len();
    if s0.len() != start_len {
        return Err(Error::Shape(format!(
            "state vector has {} entries, {side} has {start_len} concepts",
            s0.len()
        )));
    }
    let clamp = clamp.map_or_else(|| s0.on_indices(), <[usize]>::to_vec);
    check_clamp(&clamp, start_len)?;
    let (forward, backward) = match side {
        Side::Domain => (model.weights.clone(), model.weights.transpose()),
        Side::Range => (model.weights.transpose(), model.weights.clone()),
    };
    let apply = |m: &NeutroMatrix, s: &StateVector| -> Result<StateVector> {
        Ok(StateVector::new(m.left_mul_vector(&s.to_neutro())?.iter().map(threshold).collect()))
    };
    let mut start = s0.clone().clamped(&clamp);
    let mut seen = HashMap::new();
    let mut pairs: Vec<(StateVector, StateVector)> = Vec::new();
    let bound = step_bound(model.domain_names.len() + model.range_names.len());
    let cycle_start = loop {
        let other = apply(&forward, &start)?;
        let pair = (start, other);
        if let Some(&i) = seen.get(&pair) {
            break i;
        }
        if pairs.len() >= bound {
            return Err(Error::TooLarge {
                what: "update count",
                actual: pairs.len(),
                limit: bound,
            });
        }
        seen.insert(pair.clone(), pairs.len());
        start = apply(&backward, &pair.1)?.clamped(&clamp);
        pairs.push(pair);
    };
    let trajectory: Vec<(StateVector, StateVector)> = match side {
        Side::Domain => pairs,
        Side::Range => pairs.into_iter().map(|(r, d)| (d, r)).collect(),
    };
    let cycle = &trajectory[cycle_start..];
    let domain = side_pattern(cycle.iter().map(|p| p.0.clone()).collect(), cycle_start);
    let range = side_pattern(cycle.iter().map(|p| p.1.clone()).collect(), cycle_start);
    Ok(RmRun {
        side,
        clamp,
        trajectory,
        domain,
        range,
    })
}
