use num_traits::{One, Zero};

use super::value::{eq, ge, gt, lattice_max, lattice_min, FuzzyNeutroValue, Truth};
use super::{entrywise_max, self_compose, FuzzyNeutroRelation};
use crate::error::{Error, Result};
use crate::number::Rational;

/// Three-valued verdict for each property of a square relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub reflexive: Truth,
    pub epsilon_reflexive: Truth,
    pub irreflexive: Truth,
    pub anti_reflexive: Truth,
    pub symmetric: Truth,
    pub asymmetric: Truth,
    pub antisymmetric: Truth,
    pub transitive: Truth,
    pub anti_transitive: Truth,
    pub compatibility: Truth,
    pub partial_order: Truth,
}

impl PropertyReport {
    /// `(name, verdict)` pairs in declaration order.
    pub fn entries(&self) -> [(&'static str, Truth); 11] {
        [
            ("reflexive", self.reflexive),
            ("epsilon_reflexive", self.epsilon_reflexive),
            ("irreflexive", self.irreflexive),
            ("anti_reflexive", self.anti_reflexive),
            ("symmetric", self.symmetric),
            ("asymmetric", self.asymmetric),
            ("antisymmetric", self.antisymmetric),
            ("transitive", self.transitive),
            ("anti_transitive", self.anti_transitive),
            ("compatibility", self.compatibility),
            ("partial_order", self.partial_order),
        ]
    }
}

fn require_square(r: &FuzzyNeutroRelation) -> Result<()> {
    if !r.is_square() {
        return Err(Error::domain(format!("relation must be square, got {}x{}", r.rows(), r.cols())));
    }
    Ok(())
}

/// `max_y min(R(x, y), R(y, z))` for every `(x, z)`.
fn two_step(r: &FuzzyNeutroRelation) -> Vec<Vec<FuzzyNeutroValue>> {
    let n = r.rows();
    (0..n)
        .map(|x| {
            (0..n)
                .map(|z| {
                    (0..n).fold(FuzzyNeutroValue::zero(), |acc, y| {
                        lattice_max(&acc, &lattice_min(r.get(x, y), r.get(y, z)))
                    })
                })
                .collect()
        })
        .collect()
}

/// Requires `0 < ε < 1`.
pub fn properties(r: &FuzzyNeutroRelation, epsilon: &Rational) -> Result<PropertyReport> {
    require_square(r)?;
    if !(*epsilon > Rational::zero() && *epsilon < Rational::one()) {
        return Err(Error::domain(format!("epsilon {epsilon} must lie strictly between 0 and 1")));
    }
    let n = r.rows();
    let one = FuzzyNeutroValue::one();
    let zero = FuzzyNeutroValue::zero();
    let eps = FuzzyNeutroValue::real(epsilon.clone())?;
    let diagonal = || (0..n).map(|x| r.get(x, x));
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));

    let reflexive = Truth::all(diagonal().map(|d| eq(d, &one)));
    let epsilon_reflexive = Truth::all(diagonal().map(|d| ge(d, &eps)));
    let anti_reflexive = Truth::all(diagonal().map(|d| !eq(d, &one)));
    let symmetric = Truth::all(pairs().map(|(x, y)| eq(r.get(x, y), r.get(y, x))));
    let antisymmetric = Truth::all(
        pairs()
            .filter(|(x, y)| x != y)
            .map(|(x, y)| !(gt(r.get(x, y), &zero) & gt(r.get(y, x), &zero))),
    );
    let steps = two_step(r);
    let transitive = Truth::all(pairs().map(|(x, z)| ge(r.get(x, z), &steps[x][z])));
    let anti_transitive = Truth::all(pairs().map(|(x, z)| gt(&steps[x][z], r.get(x, z))));
    Ok(PropertyReport {
        reflexive,
        epsilon_reflexive,
        irreflexive: !reflexive,
        anti_reflexive,
        symmetric,
        asymmetric: !symmetric,
        antisymmetric,
        transitive,
        anti_transitive,
        compatibility: reflexive & symmetric,
        partial_order: reflexive & antisymmetric & transitive,
    })
}

/// Repeats `R ← max(R, R∘R)` until nothing changes.
pub fn transitive_closure(r: &FuzzyNeutroRelation) -> Result<FuzzyNeutroRelation> {
    require_square(r)?;
    let mut current = r.clone();
    loop {
        let next = entrywise_max(&current, &self_compose(&current));
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismViolation {
    pub x1: usize,
    pub x2: usize,
    /// `false` for the ordinary inequality, `true` for the strong converse.
    pub converse: bool,
    pub verdict: Truth,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomomorphismReport {
    pub holds: Truth,
    /// Pairs whose clause is false.
    pub violations: Vec<HomomorphismViolation>,
    /// Pairs whose clause is indeterminate.
    pub undecided: Vec<HomomorphismViolation>,
}

/// Checks `R(x1, x2) ≤ Q(h(x1), h(x2))` for all pairs and, when `strong`,
/// also `Q(h(x1), h(x2)) > 0 ⇒ R(x1, x2) > 0`. `h[i]` is the row index in
/// `Q` of the image of row `i` of `R`.
pub fn check_homomorphism(
    h: &[usize],
    r: &FuzzyNeutroRelation,
    q: &FuzzyNeutroRelation,
    strong: bool,
) -> Result<HomomorphismReport> {
    require_square(r)?;
    require_square(q)?;
    if h.len() != r.rows() {
        return Err(Error::domain(format!("map covers {} of {} elements", h.len(), r.rows())));
    }
    if let Some(&bad) = h.iter().find(|&&y| y >= q.rows()) {
        return Err(Error::domain(format!("map target {bad} is outside the codomain of size {}", q.rows())));
    }
    let zero = FuzzyNeutroValue::zero();
    let mut report = HomomorphismReport {
        holds: Truth::True,
        violations: Vec::new(),
        undecided: Vec::new(),
    };
    for x1 in 0..r.rows() {
        for x2 in 0..r.rows() {
            let image = q.get(h[x1], h[x2]);
            let mut clauses = vec![(false, ge(image, r.get(x1, x2)))];
            if strong {
                clauses.push((true, gt(image, &zero).implies(gt(r.get(x1, x2), &zero))));
            }
            for (converse, verdict) in clauses {
                report.holds = report.holds & verdict;
                let entry = HomomorphismViolation {
                    x1,
                    x2,
                    converse,
                    verdict,
                };
                match verdict {
                    Truth::False => report.violations.push(entry),
                    Truth::Indeterminate => report.undecided.push(entry),
                    Truth::True => {}
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::rat;

    fn labeled(labels: &str, grid: &str) -> FuzzyNeutroRelation {
        let r = FuzzyNeutroRelation::from_grid(grid).unwrap();
        let labels: Vec<String> = labels.split(',').map(String::from).collect();
        FuzzyNeutroRelation::on(labels, r.values().to_vec()).unwrap()
    }

    #[test]
    fn compatibility_matrix() {
        let r = labeled(
            "x1,x2,x3,x4,x5,x6,x7",
            "1,.3,0,0,0,0,.2; .3,1,0,0,0,0,0; 0,0,1,1,0,.6,0; 0,0,1,1,0,.1,0; 0,0,0,0,1,.4,0; 0,0,.6,.1,.4,1,0; .2,0,0,0,0,0,1",
        );
        let p = properties(&r, &rat(1, 2)).unwrap();
        assert_eq!(p.reflexive, Truth::True);
        assert_eq!(p.symmetric, Truth::True);
        assert_eq!(p.compatibility, Truth::True);
        assert_eq!(p.epsilon_reflexive, Truth::True);
    }

    #[test]
    fn neutrosophic_five_by_five() {
        let r = labeled("a,b,c,d,e", "0,I,.3,.2,0; 1,0,I,0,.3; I,.2,0,0,0; 0,.6,0,.3,I; 0,0,0,I,.2");
        let p = properties(&r, &rat(1, 2)).unwrap();
        assert_eq!(p.reflexive, Truth::False);
        assert_eq!(p.irreflexive, Truth::True);
        assert_eq!(p.symmetric, Truth::False);
        assert_eq!(p.asymmetric, Truth::True);
    }

    #[test]
    fn crisp_equality_is_partial_order() {
        let r = FuzzyNeutroRelation::from_grid("1,0,0; 0,1,0; 0,0,1").unwrap();
        let r = FuzzyNeutroRelation::on(r.row_labels().to_vec(), r.values().to_vec()).unwrap();
        let p = properties(&r, &rat(1, 10)).unwrap();
        assert_eq!(p.partial_order, Truth::True);
        assert_eq!(p.anti_transitive, Truth::False);
        assert!(properties(&r, &rat(1, 1)).is_err());
        let rect = FuzzyNeutroRelation::from_grid("1,0").unwrap();
        assert!(properties(&rect, &rat(1, 2)).is_err());
    }

    #[test]
    fn closure_of_path() {
        let r = labeled("a,b,c", "0,1,0; 0,0,1; 0,0,0");
        let c = transitive_closure(&r).unwrap();
        assert_eq!(*c.get(0, 2), FuzzyNeutroValue::one());
        assert_eq!(properties(&c, &rat(1, 2)).unwrap().transitive, Truth::True);
        assert_eq!(transitive_closure(&c).unwrap(), c);
    }

    #[test]
    fn homomorphisms() {
        let grid = "0,.5,0,0; 0,0,.9,0; 1,0,0,.5; 0,.6,0,0";
        let r = labeled("a,b,c,d", grid);
        let q = labeled("α,β,γ,δ", grid);
        let id = check_homomorphism(&[0, 1, 2, 3], &r, &q, true).unwrap();
        assert_eq!(id.holds, Truth::True);
        let swapped = check_homomorphism(&[1, 0, 2, 3], &r, &q, false).unwrap();
        assert_eq!(swapped.holds, Truth::False);
        assert!(!swapped.violations.is_empty());
        let full = labeled("y", "1");
        assert_eq!(check_homomorphism(&[0; 4], &r, &full, false).unwrap().holds, Truth::True);
        assert!(check_homomorphism(&[0, 1], &r, &q, false).is_err());
        assert!(check_homomorphism(&[0, 1, 2, 7], &r, &q, false).is_err());
    }
}
