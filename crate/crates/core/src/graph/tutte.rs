use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::error::Result;

/// Prime modulus of the evaluation field, `2³¹ − 1`.
pub const TUTTE_PRIME: u64 = 2_147_483_647;
/// Largest order cross-checked by exhaustive matching search.
pub const BRUTE_FORCE_LIMIT: usize = 10;

/// Entry of the symbolic Tutte matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TutteEntry {
    Zero,
    /// `x_ij` with `i < j`.
    Pos(usize, usize),
    /// `−x_ij` with `i < j`, placed at `(j, i)`.
    Neg(usize, usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TutteConfig {
    pub repetitions: usize,
    pub seed: u64,
}

impl Default for TutteConfig {
    fn default() -> Self {
        TutteConfig {
            repetitions: 20,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TutteReport {
    pub matrix: Vec<Vec<TutteEntry>>,
    /// True iff some random evaluation of `det T` was nonzero.
    pub has_one_factor: bool,
    /// Exhaustive matching result, present for orders up to
    /// [`BRUTE_FORCE_LIMIT`].
    pub brute_force: Option<bool>,
}

impl TutteReport {
    /// False only when the exhaustive check ran and disagrees.
    pub fn consistent(&self) -> bool {
        self.brute_force.is_none_or(|b| b == self.has_one_factor)
    }
}

pub fn tutte_matrix(g: &Graph) -> Vec<Vec<TutteEntry>> {
    let n = g.vertex_count();
    let mut t = vec![vec![TutteEntry::Zero; n]; n];
    for &(i, j) in g.edges() {
        t[i][j] = TutteEntry::Pos(i, j);
        t[j][i] = TutteEntry::Neg(i, j);
    }
    t
}

/// Randomized 1-factor test: `det T` is evaluated at uniform points of
/// `GF(p)`; a nonzero value proves a perfect matching, and a perfect
/// matching is missed with probability at most `(n/p)^r`.
pub fn tutte(g: &Graph, config: &TutteConfig) -> Result<TutteReport> {
    g.require_simple("Tutte matrix")?;
    let n = g.vertex_count();
    let matrix = tutte_matrix(g);
    let brute_force = (n <= BRUTE_FORCE_LIMIT).then(|| has_perfect_matching(g));
    let has_one_factor = n % 2 == 0 && {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        (0..config.repetitions).any(|_| {
            let mut m = vec![vec![0u64; n]; n];
            for &(i, j) in g.edges() {
                let x = rng.gen_range(1..TUTTE_PRIME);
                m[i][j] = x;
                m[j][i] = TUTTE_PRIME - x;
            }
            det_mod(m, TUTTE_PRIME) != 0
        })
    };
    Ok(TutteReport {
        matrix,
        has_one_factor,
        brute_force,
    })
}

fn det_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            m.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * m[col][col] % p;
        let inv = pow_mod(m[col][col], p - 2, p);
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = m[r][col] * inv % p;
            for c in col..n {
                let sub = factor * m[col][c] % p;
                m[r][c] = (m[r][c] + p - sub) % p;
            }
        }
    }
    det
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Exhaustive perfect-matching search; loops are ignored.
pub fn has_perfect_matching(g: &Graph) -> bool {
    let n = g.vertex_count();
    if n % 2 == 1 {
        return false;
    }
    let adj = g.adjacency_matrix();
    let mut matched = vec![false; n];
    match_from(&adj, &mut matched)
}

fn match_from(adj: &[Vec<bool>], matched: &mut [bool]) -> bool {
    let Some(u) = matched.iter().position(|&m| !m) else {
        return true;
    };
    matched[u] = true;
    for v in u + 1..adj.len() {
        if adj[u][v] && !matched[v] {
            matched[v] = true;
            if match_from(adj, matched) {
                return true;
            }
            matched[v] = false;
        }
    }
    matched[u] = false;
    false
}
