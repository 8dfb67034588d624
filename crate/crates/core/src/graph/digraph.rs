use super::io::{format_pairs, parse_pairs};
use super::Graph;
use crate::error::{Error, Result};

/// Directed graph; arc `i` runs from `arcs[i].0` (tail) to `arcs[i].1`
/// (head).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Digraph {
    vertex_count: usize,
    arcs: Vec<(usize, usize)>,
}

impl Digraph {
    pub fn new(vertex_count: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: Vec<_> = arcs.into_iter().collect();
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| u >= vertex_count || v >= vertex_count) {
            return Err(Error::domain(format!("arc ({u}, {v}) has an endpoint outside 0..{vertex_count}")));
        }
        Ok(Digraph { vertex_count, arcs })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn tail(&self, arc: usize) -> Option<usize> {
        self.arcs.get(arc).map(|a| a.0)
    }

    pub fn head(&self, arc: usize) -> Option<usize> {
        self.arcs.get(arc).map(|a| a.1)
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }

    pub fn successors(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.arcs {
            out[u].push(v);
        }
        out
    }

    /// Forgets orientation; keeps loops and parallel arcs.
    pub fn underlying(&self) -> Graph {
        Graph::multigraph(self.vertex_count, self.arcs.iter().copied()).expect("arcs validated")
    }

    /// Strongly connected components (each sorted, ordered by least vertex):
    /// `u` and `v` share one iff each is reachable from the other.
    pub fn strong_components(&self) -> Vec<Vec<usize>> {
        let succ = self.successors();
        let n = self.vertex_count;
        let reach: Vec<Vec<bool>> = (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                seen[s] = true;
                let mut stack = vec![s];
                while let Some(u) = stack.pop() {
                    for &w in &succ[u] {
                        if !seen[w] {
                            seen[w] = true;
                            stack.push(w);
                        }
                    }
                }
                seen
            })
            .collect();
        let mut assigned = vec![false; n];
        let mut out = Vec::new();
        for u in 0..n {
            if assigned[u] {
                continue;
            }
            let comp: Vec<usize> = (u..n).filter(|&v| reach[u][v] && reach[v][u]).collect();
            for &v in &comp {
                assigned[v] = true;
            }
            out.push(comp);
        }
        out
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strong_components().len() <= 1
    }

    pub fn parse_arc_list(text: &str) -> Result<Digraph> {
        let (n, pairs) = parse_pairs(text)?;
        Digraph::new(n, pairs)
    }

    pub fn to_arc_list(&self) -> String {
        format_pairs(self.vertex_count, &self.arcs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn directed_cycle_is_one_component() {
        let d = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert!(d.is_strongly_connected());
        assert_eq!((d.tail(0), d.head(0)), (Some(0), Some(1)));
        let path = Digraph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(path.strong_components(), vec![vec![0], vec![1], vec![2]]);
        assert_eq!(path.out_degree(1), 1);
        assert_eq!(path.in_degree(0), 0);
    }

    #[test]
    fn arc_list_round_trip() {
        let d = Digraph::new(3, [(2, 0), (0, 2), (1, 1)]).unwrap();
        assert_eq!(Digraph::parse_arc_list(&d.to_arc_list()).unwrap(), d);
        assert!(Digraph::new(2, [(0, 2)]).is_err());
    }
}
