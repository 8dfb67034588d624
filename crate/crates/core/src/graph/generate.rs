use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Named graph families with their canonical labelings.
///
/// * `Complete(n)`: vertices `0..n`.
/// * `CompleteBipartite(t, s)`: parts `0..t` and `t..t+s`.
/// * `Cycle(n)`: `i ~ i+1 (mod n)`.
/// * `Path(n)`: `n` vertices, `i ~ i+1`.
/// * `Star(s)`: `K_{1,s}` with centre `0`.
/// * `Wheel(n)`: hub `0` joined to the cycle `1..=n`.
/// * `Petersen`: inner pentagram on `0..5` (`i ~ i+2`), spokes `i ~ i+5`,
///   outer pentagon on `5..10`; edges listed in that order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Complete(usize),
    CompleteBipartite(usize, usize),
    Cycle(usize),
    Path(usize),
    Star(usize),
    Wheel(usize),
    Petersen,
}

pub fn generate(family: Family) -> Result<Graph> {
    let too_small = |what: &str, min: usize, got: usize| {
        Err(Error::domain(format!("{what} needs a size of at least {min}, got {got}")))
    };
    match family {
        Family::Complete(n) => {
            if n < 1 {
                return too_small("complete graph", 1, n);
            }
            Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        Family::CompleteBipartite(t, s) => {
            if t < 1 || s < 1 {
                return too_small("complete bipartite graph", 1, t.min(s));
            }
            Graph::from_edges(t + s, (0..t).flat_map(|u| (t..t + s).map(move |v| (u, v))))
        }
        Family::Cycle(n) => {
            if n < 3 {
                return too_small("cycle", 3, n);
            }
            Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        Family::Path(n) => {
            if n < 1 {
                return too_small("path", 1, n);
            }
            Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
        }
        Family::Star(s) => {
            if s < 1 {
                return too_small("star", 1, s);
            }
            Graph::from_edges(s + 1, (1..=s).map(|i| (0, i)))
        }
        Family::Wheel(n) => {
            if n < 3 {
                return too_small("wheel", 3, n);
            }
            let spokes = (1..=n).map(|i| (0, i));
            let rim = (0..n).map(|i| (1 + i, 1 + (i + 1) % n));
            Graph::from_edges(n + 1, spokes.chain(rim))
        }
        Family::Petersen => Graph::from_edges(10, petersen_edges()),
    }
}

pub(crate) fn petersen_edges() -> Vec<(usize, usize)> {
    let inner = (0..5).map(|i| (i, (i + 2) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let outer = (0..5).map(|i| (5 + i, 5 + (i + 1) % 5));
    inner.chain(spokes).chain(outer).collect()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(t, s) => write!(f, "complete-bipartite:{t}:{s}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Star(s) => write!(f, "star:{s}"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// `petersen`, `complete:4`, `complete-bipartite:3:4`, `cycle:5`, ...
    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.trim().split(':').collect();
        let number = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|p| p.parse().ok())
                .ok_or_else(|| Error::parse(1, 1, format!("'{text}' needs a numeric size argument")))
        };
        let family = match parts[0] {
            "petersen" if parts.len() == 1 => Family::Petersen,
            "complete" if parts.len() == 2 => Family::Complete(number(1)?),
            "complete-bipartite" if parts.len() == 3 => Family::CompleteBipartite(number(1)?, number(2)?),
            "cycle" if parts.len() == 2 => Family::Cycle(number(1)?),
            "path" if parts.len() == 2 => Family::Path(number(1)?),
            "star" if parts.len() == 2 => Family::Star(number(1)?),
            "wheel" if parts.len() == 2 => Family::Wheel(number(1)?),
            _ => return Err(Error::parse(1, 1, format!("unknown graph family '{text}'"))),
        };
        Ok(family)
    }
}
