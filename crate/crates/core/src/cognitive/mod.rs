//! Cognitive-map inference: state vectors over `{0, 1, I}` pushed through a
//! connection matrix until a state repeats.

mod balance;
mod fcm;
mod link;
mod relational;

pub use balance::{balance, BalanceReport, PathSign, MAX_BALANCE_CONCEPTS};
pub use fcm::{fcm_run, FcmRun};
pub use link::{link, sign_threshold, LinkReport};
pub use relational::{rm_run, RelationalModel, RmRun, Side};

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::{is_bipartite, Bipartiteness, Graph};
use crate::matrix::NeutroMatrix;
use crate::number::NeutroNumber;

/// Concept activation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Activation {
    Off,
    On,
    Indeterminate,
}

impl Activation {
    pub fn to_neutro(self) -> NeutroNumber {
        match self {
            Activation::Off => NeutroNumber::zero(),
            Activation::On => NeutroNumber::one(),
            Activation::Indeterminate => NeutroNumber::i(),
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Activation::Off => '0',
            Activation::On => '1',
            Activation::Indeterminate => 'I',
        }
    }
}

/// `a > 0 → 1`, `a = 0 ∧ b > 0 → I`, otherwise `0`, for `raw = a + bI`.
pub fn threshold(raw: &NeutroNumber) -> Activation {
    if raw.real().is_positive() {
        Activation::On
    } else if raw.real().is_zero() && raw.indet().is_positive() {
        Activation::Indeterminate
    } else {
        Activation::Off
    }
}

/// Inputs whose activation depends on how the rule treats a mixed or
/// negative indeterminate part: both parts nonzero, or `a = 0 ∧ b < 0`.
pub fn is_threshold_edge_case(raw: &NeutroNumber) -> bool {
    let (a, b) = (raw.real(), raw.indet());
    (!a.is_zero() && !b.is_zero()) || (a.is_zero() && b.is_negative())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateVector(Vec<Activation>);

impl StateVector {
    pub fn new(values: Vec<Activation>) -> Self {
        StateVector(values)
    }

    pub fn zeros(n: usize) -> Self {
        StateVector(vec![Activation::Off; n])
    }

    /// Unit vector `e_k` (0-based `k`).
    pub fn unit(n: usize, k: usize) -> Self {
        let mut s = StateVector::zeros(n);
        s.0[k] = Activation::On;
        s
    }

    /// Every `{0, 1}` vector of length `n`, in binary counting order.
    pub fn all_crisp(n: usize) -> impl Iterator<Item = StateVector> {
        (0u64..1 << n).map(move |bits| {
            StateVector((0..n).map(|i| if bits >> i & 1 == 1 { Activation::On } else { Activation::Off }).collect())
        })
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[Activation] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Activation {
        self.0[i]
    }

    pub fn on_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] == Activation::On).collect()
    }

    pub fn to_neutro(&self) -> Vec<NeutroNumber> {
        self.0.iter().map(|a| a.to_neutro()).collect()
    }

    fn clamped(mut self, clamp: &[usize]) -> Self {
        for &i in clamp {
            self.0[i] = Activation::On;
        }
        self
    }
}

impl fmt::Display for StateVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", a.symbol())?;
        }
        Ok(())
    }
}

/// Tokens `0`, `1`, `I` separated by spaces or commas.
impl FromStr for StateVector {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut column = 1;
        for piece in text.split_inclusive([' ', ',', '\t']) {
            let token = piece.trim_end_matches([' ', ',', '\t']);
            match token {
                "" => {}
                "0" => values.push(Activation::Off),
                "1" => values.push(Activation::On),
                "I" => values.push(Activation::Indeterminate),
                other => return Err(Error::parse(1, column, format!("'{other}' is not one of 0, 1, I"))),
            }
            column += piece.len();
        }
        Ok(StateVector(values))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PatternKind {
    FixedPoint,
    LimitCycle,
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternKind::FixedPoint => "fixed-point",
            PatternKind::LimitCycle => "limit-cycle",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HiddenPattern {
    pub kind: PatternKind,
    /// One state for a fixed point, the cycle in order otherwise.
    pub states: Vec<StateVector>,
    /// Index in the trajectory where the pattern is first reached.
    pub steps_to_enter: usize,
}

impl HiddenPattern {
    /// Splits a trajectory whose next state would be `trajectory[start]`.
    fn from_cycle(trajectory: &[StateVector], start: usize) -> Self {
        let states = trajectory[start..].to_vec();
        HiddenPattern {
            kind: if states.len() == 1 { PatternKind::FixedPoint } else { PatternKind::LimitCycle },
            states,
            steps_to_enter: start,
        }
    }

    pub fn fixed_point(&self) -> Option<&StateVector> {
        match self.kind {
            PatternKind::FixedPoint => self.states.first(),
            PatternKind::LimitCycle => None,
        }
    }
}

/// A threshold input that hit an edge case of the rule.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdNote {
    /// 1-based update count that produced the input.
    pub step: usize,
    pub concept: usize,
    pub raw: NeutroNumber,
    pub result: Activation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CmRun {
    pub initial: StateVector,
    pub clamp: Vec<usize>,
    /// Clamped initial state first; each later state is one update.
    pub trajectory: Vec<StateVector>,
    pub pattern: HiddenPattern,
    pub notes: Vec<ThresholdNote>,
}

impl CmRun {
    /// Updates performed before the first repeated state.
    pub fn iterations(&self) -> usize {
        self.trajectory.len()
    }
}

/// Square connection matrix over `{−1, 0, 1, I}` with concept names.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConceptModel {
    names: Vec<String>,
    weights: NeutroMatrix,
}

pub(crate) fn check_simple_weights(weights: &NeutroMatrix) -> Result<()> {
    let allowed = [NeutroNumber::from_ints(-1, 0), NeutroNumber::zero(), NeutroNumber::one(), NeutroNumber::i()];
    for r in 0..weights.rows() {
        for c in 0..weights.cols() {
            let w = weights.get(r, c);
            if !allowed.contains(w) {
                return Err(Error::domain(format!(
                    "weight {w} at row {}, column {} is not one of -1, 0, 1, I",
                    r + 1,
                    c + 1
                )));
            }
        }
    }
    Ok(())
}

pub(crate) fn check_names(names: &[String], expected: usize, what: &str) -> Result<()> {
    if names.len() != expected {
        return Err(Error::Shape(format!("{} {what} names for {expected} matrix {what}s", names.len())));
    }
    let mut seen = BTreeSet::new();
    if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
        return Err(Error::domain(format!("duplicate concept name '{dup}'")));
    }
    Ok(())
}

/// Names `C1..Cn`.
pub fn default_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

impl ConceptModel {
    pub fn new(names: Vec<String>, weights: NeutroMatrix) -> Result<Self> {
        if !weights.is_square() {
            let (r, c) = weights.shape();
            return Err(Error::Shape(format!("connection matrix must be square, got {r}x{c}")));
        }
        check_names(&names, weights.rows(), "concept")?;
        check_simple_weights(&weights)?;
        Ok(ConceptModel { names, weights })
    }

    /// Names `C1..Cn`.
    pub fn unnamed(weights: NeutroMatrix) -> Result<Self> {
        ConceptModel::new(default_names("C", weights.rows()), weights)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &NeutroMatrix {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::NotFound(format!("concept '{name}'")))
    }

    pub fn has_indeterminates(&self) -> bool {
        self.weights.entries().iter().any(|w| !w.indet().is_zero())
    }

    /// Integer weights, or `None` when an `I` is present.
    pub fn integer_weights(&self) -> Option<Vec<Vec<i64>>> {
        if self.has_indeterminates() {
            return None;
        }
        Some(
            (0..self.len())
                .map(|r| {
                    self.weights
                        .row(r)
                        .iter()
                        .map(|w| if w.real().is_one() { 1 } else if w.real().is_zero() { 0 } else { -1 })
                        .collect()
                })
                .collect(),
        )
    }

    /// One update without clamping.
    pub fn step(&self, state: &StateVector) -> Result<StateVector> {
        Ok(StateVector(self.raw_step(state)?.iter().map(threshold).collect()))
    }

    fn raw_step(&self, state: &StateVector) -> Result<Vec<NeutroNumber>> {
        self.weights.left_mul_vector(&state.to_neutro())
    }
}

/// Every `I` weight replaced by `0`.
pub fn degrade(model: &ConceptModel) -> ConceptModel {
    let weights = model.weights.map(|w| if w.indet().is_zero() { w.clone() } else { NeutroNumber::zero() });
    ConceptModel {
        names: model.names.clone(),
        weights,
    }
}

/// `3ⁿ + 1`, saturating.
pub fn step_bound(n: usize) -> usize {
    u32::try_from(n)
        .ok()
        .and_then(|n| 3usize.checked_pow(n))
        .and_then(|p| p.checked_add(1))
        .unwrap_or(usize::MAX)
}

pub(crate) fn check_clamp(clamp: &[usize], n: usize) -> Result<()> {
    match clamp.iter().find(|&&i| i >= n) {
        Some(i) => Err(Error::NotFound(format!("clamp index {i} outside 0..{n}"))),
        None => Ok(()),
    }
}

/// Iterates `s ← clamp(θ(s·M))` from `clamp(s0)` until a state repeats.
/// `clamp` defaults to the coordinates on in `s0`.
pub fn cm_run(model: &ConceptModel, s0: &StateVector, clamp: Option<&[usize]>) -> Result<CmRun> {
    let n = model.len();
    if s0.len() != n {
        return Err(Error::Shape(format!("state vector has {} entries, model has {n} concepts", s0.len())));
    }
    let clamp = clamp.map_or_else(|| s0.on_indices(), <[usize]>::to_vec);
    check_clamp(&clamp, n)?;
    let first = s0.clone().clamped(&clamp);
    let mut seen = HashMap::from([(first.clone(), 0usize)]);
    let mut trajectory = vec![first];
    let mut notes = Vec::new();
    let bound = step_bound(n);
    loop {
        let current = trajectory.last().expect("trajectory starts non-empty");
        let raw = model.raw_step(current)?;
        let step = trajectory.len();
        for (concept, value) in raw.iter().enumerate() {
            if is_threshold_edge_case(value) {
                notes.push(ThresholdNote {
                    step,
                    concept,
                    raw: value.clone(),
                    result: threshold(value),
                });
            }
        }
        let next = StateVector(raw.iter().map(threshold).collect()).clamped(&clamp);
        if let Some(&start) = seen.get(&next) {
            let pattern = HiddenPattern::from_cycle(&trajectory, start);
            let run = CmRun {
                initial: s0.clone(),
                clamp,
                trajectory,
                pattern,
                notes,
            };
            debug_assert!(is_consistent(model, &run));
            return Ok(run);
        }
        if step >= bound {
            return Err(Error::TooLarge {
                what: "update count",
                actual: step,
                limit: bound,
            });
        }
        seen.insert(next.clone(), step);
        trajectory.push(next);
    }
}

/// Re-applies the update to the reported pattern: a fixed point must map
/// to itself and a cycle must map each state to its successor.
pub fn is_consistent(model: &ConceptModel, run: &CmRun) -> bool {
    let states = &run.pattern.states;
    let distinct: BTreeSet<_> = states.iter().collect();
    distinct.len() == states.len()
        && states.iter().enumerate().all(|(i, s)| {
            model
                .step(s)
                .map(|next| next.clamped(&run.clamp) == states[(i + 1) % states.len()])
                .unwrap_or(false)
        })
}

/// Treats the support of the connection matrix as an undirected graph
/// and two-colors it; a bipartition is the domain/range split of an
/// equivalent relational map.
pub fn frm_convertible(model: &ConceptModel) -> Bipartiteness {
    let n = model.len();
    let edges: BTreeSet<(usize, usize)> = (0..n)
        .flat_map(|r| (0..n).map(move |c| (r, c)))
        .filter(|&(r, c)| !model.weights.get(r, c).is_zero())
        .map(|(r, c)| (r.min(c), r.max(c)))
        .collect();
    let graph = Graph::multigraph(n, edges).expect("indices come from the matrix");
    is_bipartite(&graph)
}
