use super::Graph;
use crate::error::{Error, Result};

/// Reads `n m` followed by `m` lines `u v`; blank lines and `#` comments are
/// skipped. Parallel edges and loops switch the graph to a multigraph.
pub(crate) fn parse_pairs(text: &str) -> Result<(usize, Vec<(usize, usize)>)> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "missing 'n m' header"))?;
    let [n, m] = numbers::<2>(line_no, header)?;
    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in lines {
        if pairs.len() == m {
            return Err(Error::parse(line_no, 1, format!("more than the declared {m} edges")));
        }
        let [u, v] = numbers::<2>(line_no, line)?;
        if u >= n || v >= n {
            return Err(Error::parse(line_no, 1, format!("vertex out of range 0..{n}")));
        }
        pairs.push((u, v));
    }
    if pairs.len() != m {
        return Err(Error::parse(
            text.lines().count().max(1),
            1,
            format!("declared {m} edges, found {}", pairs.len()),
        ));
    }
    Ok((n, pairs))
}

fn numbers<const K: usize>(line_no: usize, line: &str) -> Result<[usize; K]> {
    let mut out = [0; K];
    let mut fields = line.split_whitespace();
    let mut column = 1;
    for slot in &mut out {
        let field = fields
            .next()
            .ok_or_else(|| Error::parse(line_no, line.len() + 1, format!("expected {K} integers")))?;
        column = line.find(field).map_or(column, |p| p + 1);
        *slot = field
            .parse()
            .map_err(|_| Error::parse(line_no, column, format!("'{field}' is not a vertex index or count")))?;
    }
    if let Some(extra) = fields.next() {
        let column = line.rfind(extra).map_or(column, |p| p + 1);
        return Err(Error::parse(line_no, column, format!("unexpected trailing '{extra}'")));
    }
    Ok(out)
}

pub(crate) fn format_pairs(n: usize, pairs: &[(usize, usize)]) -> String {
    let mut out = format!("{n} {}\n", pairs.len());
    for (u, v) in pairs {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

impl Graph {
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let (n, pairs) = parse_pairs(text)?;
        match Graph::from_edges(n, pairs.iter().copied()) {
            Ok(g) => Ok(g),
            Err(_) => Graph::multigraph(n, pairs),
        }
    }

    pub fn to_edge_list(&self) -> String {
        format_pairs(self.vertex_count, &self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn round_trip() {
        let g = generate(Family::Petersen).unwrap();
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
        let multi = Graph::parse_edge_list("2 2\n0 1\n1 0\n").unwrap();
        assert!(multi.has_parallel_edges());
    }

    #[test]
    fn errors_carry_positions() {
        match Graph::parse_edge_list("3 1\n0 x\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(Graph::parse_edge_list("3 2\n0 1\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 1\n1 2\n").is_err());
        assert!(Graph::parse_edge_list("3 1\n0 5\n").is_err());
        assert!(Graph::parse_edge_list("").is_err());
    }
}
