use super::{EdgeTag, NeutroGraph};
use crate::error::{Error, Result};

/// Largest order accepted by the exhaustive isomorphism search.
pub const MAX_ISOMORPHISM_ORDER: usize = 10;

/// Edge multiplicities per ordered vertex pair, one table per tag.
struct Counts {
    real: Vec<Vec<usize>>,
    indet: Vec<Vec<usize>>,
}

impl Counts {
    fn of(g: &NeutroGraph) -> Counts {
        let n = g.order();
        let mut counts = Counts {
            real: vec![vec![0; n]; n],
            indet: vec![vec![0; n]; n],
        };
        for e in g.edges() {
            let table = match e.tag {
                EdgeTag::Real => &mut counts.real,
                EdgeTag::Indeterminate => &mut counts.indet,
            };
            table[e.u][e.v] += 1;
            if !g.is_directed() && e.u != e.v {
                table[e.v][e.u] += 1;
            }
        }
        counts
    }

    fn agree(&self, other: &Counts, a: usize, b: usize, fa: usize, fb: usize) -> bool {
        self.real[a][b] == other.real[fa][fb] && self.indet[a][b] == other.indet[fa][fb]
    }
}

/// Searches for a bijection mapping real vertices to real vertices and
/// indeterminate to indeterminate, preserving edges together with their
/// tags. Returns the map `G1 vertex -> G2 vertex` when one exists.
pub fn neutro_isomorphic(g1: &NeutroGraph, g2: &NeutroGraph) -> Result<Option<Vec<usize>>> {
    let n = g1.order();
    if n.max(g2.order()) > MAX_ISOMORPHISM_ORDER {
        return Err(Error::TooLarge {
            what: "order for exhaustive isomorphism search",
            actual: n.max(g2.order()),
            limit: MAX_ISOMORPHISM_ORDER,
        });
    }
    if g1.real_vertices() != g2.real_vertices()
        || g1.indet_vertices() != g2.indet_vertices()
        || g1.is_directed() != g2.is_directed()
        || g1.real_edge_count() != g2.real_edge_count()
        || g1.indeterminate_edge_count() != g2.indeterminate_edge_count()
    {
        return Ok(None);
    }
    let (c1, c2) = (Counts::of(g1), Counts::of(g2));
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    Ok(extend(g1, &c1, &c2, 0, &mut map, &mut taken).then_some(map))
}

fn extend(g: &NeutroGraph, c1: &Counts, c2: &Counts, v: usize, map: &mut [usize], taken: &mut [bool]) -> bool {
    if v == map.len() {
        return true;
    }
    let range = if g.is_indeterminate(v) {
        g.real_vertices()..g.order()
    } else {
        0..g.real_vertices()
    };
    for w in range {
        if taken[w] {
            continue;
        }
        map[v] = w;
        let consistent = (0..=v).all(|u| c1.agree(c2, u, v, map[u], w) && c1.agree(c2, v, u, w, map[u]));
        if consistent {
            taken[w] = true;
            if extend(g, c1, c2, v + 1, map, taken) {
                return true;
            }
            taken[w] = false;
        }
    }
    map[v] = usize::MAX;
    false
}
