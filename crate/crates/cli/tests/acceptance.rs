//! Acceptance criteria AC-1 to AC-12, one `[PASS]`/`[FAIL]` line each.
//!
//! Exits nonzero when a criterion fails, except for criteria listed in
//! `UNATTAINABLE`, whose failure is reported but expected.

use std::collections::HashMap;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use neutro_core::cognitive::{cm_run, degrade, is_consistent, link, step_bound, ConceptModel, StateVector};
use neutro_core::graph::{
    chromatic_polynomial, edge_coloring, generate, hamiltonian, metrics, spanning_tree_count, tutte,
    vertex_coloring, Family, Graph, Polynomial, TutteConfig,
};
use neutro_core::model::{Model, ModelFile};
use neutro_core::number::rat;
use neutro_core::relation::{
    inverse, maxmin_compose, properties, transitive_closure, FuzzyNeutroRelation, FuzzyNeutroValue, Truth,
};
use neutro_core::{NeutroMatrix, NeutroNumber, Rational};
use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot pass as stated, with the reason printed on failure.
const UNATTAINABLE: &[(usize, &str)] = &[(
    5,
    "the stated fixed point has C4 = 0, but A5 has C1 = I and the C1->C4 weight is I, so C4 becomes I",
)];

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/");

type Check = Result<String, String>;

fn fixture(name: &str) -> String {
    std::fs::read_to_string(format!("{FIXTURES}{name}")).unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

fn model(name: &str) -> Model {
    ModelFile::parse(&fixture(name)).unwrap_or_else(|e| panic!("fixture {name}: {e}")).model
}

fn concept(name: &str) -> ConceptModel {
    match model(name) {
        Model::Concept(m) => m,
        _ => panic!("{name} is not a concept model"),
    }
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

fn neutro(text: &str) -> NeutroNumber {
    text.parse().unwrap()
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_neutro"))
        .args(args)
        .output()
        .map_err(|e| format!("cannot run the binary: {e}"))?;
    if !out.status.success() {
        return Err(format!("neutro {} failed: {}", args.join(" "), String::from_utf8_lossy(&out.stderr)));
    }
    Ok(String::from_utf8_lossy(&out.stdout).into_owned())
}

fn timed<T>(limit: Duration, what: &str, f: impl FnOnce() -> T) -> Result<(T, Duration), String> {
    let start = Instant::now();
    let value = f();
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || format!("{what} took {elapsed:?}, limit {limit:?}"))?;
    Ok((value, elapsed))
}

// Independent arithmetic for neutrosophic integers `a + bI`, `I² = I`.

type Pair = (i64, i64);

fn pair_mul(x: Pair, y: Pair) -> Pair {
    (x.0 * y.0, x.0 * y.1 + x.1 * y.0 + x.1 * y.1)
}

fn pair_of(x: &NeutroNumber) -> Pair {
    let int = |r: &Rational| -> i64 {
        assert!(r.is_integer(), "non-integer entry {r}");
        r.to_integer().try_into().expect("entry fits in i64")
    };
    (int(x.real()), int(x.indet()))
}

fn pair_product(a: &[Vec<Pair>], b: &[Vec<Pair>]) -> Vec<Vec<Pair>> {
    (0..a.len())
        .map(|i| {
            (0..b[0].len())
                .map(|j| {
                    (0..b.len()).fold((0, 0), |acc, k| {
                        let p = pair_mul(a[i][k], b[k][j]);
                        (acc.0 + p.0, acc.1 + p.1)
                    })
                })
                .collect()
        })
        .collect()
}

fn pairs_of(m: &NeutroMatrix) -> Vec<Vec<Pair>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(pair_of).collect()).collect()
}

fn ac1() -> Check {
    let a = NeutroMatrix::parse_text(&fixture("ex-1.2.8-A.csv")).map_err(|e| e.to_string())?;
    let b = NeutroMatrix::parse_text(&fixture("ex-1.2.8-B.csv")).map_err(|e| e.to_string())?;
    let product = a.mul(&b).map_err(|e| e.to_string())?;
    let oracle = pair_product(&pairs_of(&a), &pairs_of(&b));
    ensure(pairs_of(&product) == oracle, || format!("product {:?} differs from hand expansion {oracle:?}", pairs_of(&product)))?;
    let printed = [["2-6I", "-1+4I", "-2-3I", "I"], ["-4I", "3+I", "6", "12+2I"]];
    let mut verbatim = 0;
    for (i, row) in printed.iter().enumerate() {
        for (j, text) in row.iter().enumerate() {
            if (i, j) != (1, 0) {
                ensure(product.get(i, j) == &neutro(text), || format!("entry ({}, {}) is {}", i + 1, j + 1, product.get(i, j)))?;
                verbatim += 1;
            }
        }
    }
    ensure(product.get(1, 0) == &neutro("4I"), || format!("entry (2, 1) is {}", product.get(1, 0)))?;
    let out = cli(&["matrix", "mul", &format!("{FIXTURES}ex-1.2.8-A.csv"), &format!("{FIXTURES}ex-1.2.8-B.csv")])?;
    ensure(out.contains("2-6I, -1+4I, -2-3I, I") && out.contains("4I, 3+I, 6, 12+2I"), || format!("CLI output:\n{out}"))?;
    Ok(format!("{verbatim} entries match the printed product; (2,1) = 4I by hand expansion, printed -4I is an erratum"))
}

fn fixed_point_run(name: &str, s0: &StateVector, max_iterations: usize, expected: &str) -> Check {
    let m = concept(name);
    let run = cm_run(&m, s0, None).map_err(|e| e.to_string())?;
    let fixed = run.pattern.fixed_point().map(ToString::to_string);
    ensure(fixed.as_deref() == Some(expected), || format!("{name}: pattern {:?}, expected fixed point {expected}", run.pattern.states.iter().map(ToString::to_string).collect::<Vec<_>>()))?;
    ensure(run.iterations() <= max_iterations, || {
        format!("{name}: fixed point confirmed after {} updates, limit {max_iterations}", run.iterations())
    })?;
    ensure(is_consistent(&m, &run), || format!("{name}: fixed point fails the update equation"))?;
    Ok(format!(
        "{name}: {expected} entered after {} and confirmed after {} updates",
        run.pattern.steps_to_enter,
        run.iterations()
    ))
}

fn ac2() -> Check {
    fixed_point_run("ex-3.7.1-E.model", &StateVector::unit(7, 0), 3, "1 0 0 1 1 1 0")
}

fn ac3() -> Check {
    fixed_point_run("ex-3.7.1-NE.model", &StateVector::unit(7, 0), 3, "1 I 0 1 1 0 0")
}

fn ac4() -> Check {
    let e1 = fixed_point_run("ex-3.7.1-E1.model", &StateVector::unit(7, 0), 3, "1 1 0 1 0 1 0")?;
    let ne1 = fixed_point_run("ex-3.7.1-NE1.model", &StateVector::unit(7, 0), 3, "1 1 0 1 1 0 0")?;
    Ok(format!("{e1}; {ne1}"))
}

fn ac5() -> Check {
    let m = concept("ex-3.7.2-NE.model");
    let e7 = StateVector::unit(8, 6);
    let degraded = cm_run(&degrade(&m), &e7, None).map_err(|e| e.to_string())?;
    let degraded_fixed = degraded.pattern.fixed_point().map(ToString::to_string);
    let degraded_ok = degraded_fixed.as_deref() == Some("0 0 0 0 0 0 1 1");
    let main = fixed_point_run("ex-3.7.2-NE.model", &e7, 5, "I I I 0 I I 1 1");
    match (main, degraded_ok) {
        (Ok(detail), true) => Ok(format!("{detail}; degraded run reaches 0 0 0 0 0 0 1 1")),
        (Err(e), ok) => Err(format!(
            "{e}; degraded run {}",
            if ok { "reaches 0 0 0 0 0 0 1 1 as required".to_string() } else { format!("gives {degraded_fixed:?}") }
        )),
        (Ok(_), false) => Err(format!("degraded run gives {degraded_fixed:?}")),
    }
}

fn ac6() -> Check {
    let weights = |name: &str| match model(name) {
        Model::Relational(m) => m.weights().clone(),
        _ => panic!("{name} is not a relational model"),
    };
    let (ne1, ne2) = (weights("ex-3.7.11-NE1.model"), weights("ex-3.7.11-NE2.model"));
    let report = link(&[ne1.clone(), ne2.clone()]).map_err(|e| e.to_string())?;
    ensure(report.raw.shape() == (4, 5), || format!("raw product is {:?}", report.raw.shape()))?;
    let oracle = pair_product(&pairs_of(&ne1.transpose()), &pairs_of(&ne2));
    ensure(pairs_of(&report.raw) == oracle, || "raw product differs from hand expansion".to_string())?;
    let out = cli(&[
        "link",
        &format!("{FIXTURES}ex-3.7.11-NE1.model"),
        &format!("{FIXTURES}ex-3.7.11-NE2.model"),
        "--diff",
        &format!("{FIXTURES}ex-3.7.11-printed.csv"),
    ])?;
    let differences = out
        .lines()
        .find_map(|l| l.strip_prefix("differences: "))
        .ok_or_else(|| format!("no diff report in CLI output:\n{out}"))?;
    Ok(format!("4x5 raw product equals hand expansion; {differences} signed entries differ from the printed matrix (reported)"))
}

fn ac7() -> Check {
    let g = match model("fig-3.2.8.model") {
        Model::NeutroGraph(g) => g,
        _ => panic!("fig-3.2.8 is not a neutro-graph"),
    };
    let a = g.adjacency().map_err(|e| e.to_string())?;
    let printed = NeutroMatrix::parse_text("0,1,I,0,I\n1,0,I,0,0\nI,I,0,1,1\n0,0,1,0,1\nI,0,1,1,0\n").unwrap();
    ensure(a == printed, || format!("adjacency:\n{}", a.to_text()))?;
    ensure(a == a.transpose(), || "adjacency is not symmetric".into())?;
    ensure((0..5).all(|i| a.get(i, i).is_zero()), || "nonzero diagonal".into())?;
    Ok("5x5 adjacency equals the printed N(A)".into())
}

fn ac8() -> Check {
    let k4 = generate(Family::Complete(4)).unwrap();
    let k5 = generate(Family::Complete(5)).unwrap();
    let chi_k4 = vertex_coloring(&k4).map_err(|e| e.to_string())?.chromatic_number;
    let idx_k4 = edge_coloring(&k4).map_err(|e| e.to_string())?.chromatic_index;
    let idx_k5 = edge_coloring(&k5).map_err(|e| e.to_string())?.chromatic_index;
    ensure((chi_k4, idx_k4, idx_k5) == (4, 3, 5), || format!("chi(K4)={chi_k4}, chi'(K4)={idx_k4}, chi'(K5)={idx_k5}"))?;
    let p = generate(Family::Petersen).unwrap();
    let (coloring, elapsed) = timed(Duration::from_secs(5), "Petersen edge coloring", || edge_coloring(&p))?;
    let index = coloring.map_err(|e| e.to_string())?.chromatic_index;
    let m = metrics(&p).map_err(|e| e.to_string())?;
    let regular = (0..10).all(|v| p.edges().iter().filter(|&&(a, b)| a == v || b == v).count() == 3);
    let hamiltonian = hamiltonian(&p).map_err(|e| e.to_string())?.is_hamiltonian;
    ensure(regular && m.girth == Some(5) && index == 4 && !hamiltonian, || {
        format!("Petersen: regular={regular}, girth={:?}, chi'={index}, hamiltonian={hamiltonian}", m.girth)
    })?;
    Ok(format!("chi(K4)=4, chi'(K4)=3, chi'(K5)=5; Petersen 3-regular, girth 5, chi'=4 in {elapsed:.2?}, non-Hamiltonian"))
}

fn colorings(g: &Graph, k: usize) -> i128 {
    let n = g.vertex_count();
    let mut count = 0;
    let mut colors = vec![0usize; n];
    'outer: loop {
        if g.edges().iter().all(|&(u, v)| colors[u] != colors[v]) {
            count += 1;
        }
        for c in colors.iter_mut() {
            *c += 1;
            if *c < k {
                continue 'outer;
            }
            *c = 0;
        }
        return count;
    }
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let p: f64 = rng.gen_range(0.1..0.9);
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, edges).unwrap()
}

fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Graph::from_edges(n, edges.into_iter().map(|(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))).unwrap()
}

fn ac9() -> Check {
    let lambda = Polynomial::monomial(1);
    let k3 = chromatic_polynomial(&generate(Family::Complete(3)).unwrap()).map_err(|e| e.to_string())?;
    let expected = &(&lambda * &Polynomial::linear_root(1)) * &Polynomial::linear_root(2);
    ensure(k3 == expected, || format!("f(K3) = {k3}"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut trees = 0;
    for n in 1..=8 {
        for _ in 0..10 {
            let t = random_tree(&mut rng, n);
            let f = chromatic_polynomial(&t).map_err(|e| e.to_string())?;
            ensure(f == &lambda * &Polynomial::linear_root(1).pow(n - 1), || format!("tree {:?}: f = {f}", t.edges()))?;
            trees += 1;
        }
    }
    for _ in 0..200 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(&mut rng, n);
        let f = chromatic_polynomial(&g).map_err(|e| e.to_string())?;
        for k in 1..=4 {
            let brute = colorings(&g, k);
            ensure(f.eval(k as i128) == brute, || format!("{:?}: f({k}) = {}, brute force {brute}", g.edges(), f.eval(k as i128)))?;
        }
        ensure(f.coeff(n - 1) == -(g.edge_count() as i128), || format!("{:?}: coefficient of l^(n-1) is {}", g.edges(), f.coeff(n - 1)))?;
    }
    Ok(format!("f(K3) correct; {trees} random trees; 200 random graphs agree with brute force for k = 1..4"))
}

fn relation_fixture(name: &str) -> FuzzyNeutroRelation {
    match model(name) {
        Model::Relation(r) => r,
        _ => panic!("{name} is not a relation"),
    }
}

fn random_relation(rng: &mut ChaCha8Rng, rows: usize, cols: usize, levels: i64, prefix: (&str, &str)) -> FuzzyNeutroRelation {
    let values = (0..rows)
        .map(|_| (0..cols).map(|_| FuzzyNeutroValue::real(rat(rng.gen_range(0..=levels), levels)).unwrap()).collect())
        .collect();
    let labels = |p: &str, n: usize| (1..=n).map(|i| format!("{p}{i}")).collect();
    FuzzyNeutroRelation::new(labels(prefix.0, rows), labels(prefix.1, cols), values).unwrap()
}

fn magnitude(v: &FuzzyNeutroValue) -> Rational64 {
    let m = v.magnitude();
    Rational64::new(m.numer().try_into().unwrap(), m.denom().try_into().unwrap())
}

/// Smallest transitive crisp superrelation by enumerating every superset.
fn minimal_transitive_superset(bits: u16) -> u16 {
    let transitive = |m: u16| {
        (0..4).all(|i| {
            (0..4).all(|k| {
                m & (1 << (i * 4 + k)) == 0 || (0..4).all(|j| m & (1 << (k * 4 + j)) == 0 || m & (1 << (i * 4 + j)) != 0)
            })
        })
    };
    let free: Vec<u16> = (0..16).filter(|b| bits & (1 << b) == 0).collect();
    let mut best = u16::MAX;
    for choice in 0u32..(1 << free.len()) {
        let mut m = bits;
        for (i, b) in free.iter().enumerate() {
            if choice & (1 << i) != 0 {
                m |= 1 << b;
            }
        }
        if transitive(m) && (best == u16::MAX || m.count_ones() < best.count_ones()) {
            best = m;
        }
    }
    best
}

/// Widest-path closure; any transitive superrelation dominates it.
fn widest_paths(r: &FuzzyNeutroRelation) -> Vec<Vec<Rational64>> {
    let n = r.rows();
    let mut w: Vec<Vec<Rational64>> = (0..n).map(|i| (0..n).map(|j| magnitude(r.get(i, j))).collect()).collect();
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                let through = w[i][k].min(w[k][j]);
                if through > w[i][j] {
                    w[i][j] = through;
                }
            }
        }
    }
    w
}

fn ac10() -> Check {
    let eps = rat(1, 2);
    let compat = properties(&relation_fixture("ex-2.8.3-R.model"), &eps).map_err(|e| e.to_string())?;
    ensure(compat.reflexive == Truth::True && compat.symmetric == Truth::True, || {
        format!("7x7 matrix: reflexive {}, symmetric {}", compat.reflexive, compat.symmetric)
    })?;
    let neutral = properties(&relation_fixture("sec-3.7-R.model"), &eps).map_err(|e| e.to_string())?;
    ensure(neutral.irreflexive == Truth::True && neutral.symmetric == Truth::False, || {
        format!("5x5 matrix: irreflexive {}, symmetric {}", neutral.irreflexive, neutral.symmetric)
    })?;
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let p = random_relation(&mut rng, 3, 4, 10, ("x", "y"));
        let q = random_relation(&mut rng, 4, 3, 10, ("y", "z"));
        let r = random_relation(&mut rng, 3, 2, 10, ("z", "w"));
        let pq = maxmin_compose(&p, &q).unwrap();
        ensure(inverse(&pq) == maxmin_compose(&inverse(&q), &inverse(&p)).unwrap(), || "inverse law fails".into())?;
        let left = maxmin_compose(&pq, &r).unwrap();
        let right = maxmin_compose(&p, &maxmin_compose(&q, &r).unwrap()).unwrap();
        ensure(left == right, || format!("associativity fails for\n{}\n{}\n{}", p.to_text(), q.to_text(), r.to_text()))?;
    }
    for _ in 0..50 {
        let bits: u16 = (0..16).filter(|_| rng.gen_bool(0.3)).fold(0, |m, b| m | (1 << b));
        let values = (0..4)
            .map(|i| (0..4).map(|j| if bits & (1 << (i * 4 + j)) != 0 { FuzzyNeutroValue::one() } else { FuzzyNeutroValue::zero() }).collect())
            .collect();
        let crisp = FuzzyNeutroRelation::unlabeled(values).unwrap();
        let c = transitive_closure(&crisp).unwrap();
        let got = (0..16).filter(|b| !c.get(b / 4, b % 4).is_zero()).fold(0u16, |m, b| m | (1 << b));
        let expected = minimal_transitive_superset(bits);
        ensure(got == expected, || format!("crisp closure of {bits:#06x} is {got:#06x}, expected {expected:#06x}"))?;

        let fuzzy = random_relation(&mut rng, 4, 4, 10, ("x", "x"));
        let c = transitive_closure(&fuzzy).unwrap();
        let w = widest_paths(&fuzzy);
        let got: Vec<Vec<Rational64>> = (0..4).map(|i| (0..4).map(|j| magnitude(c.get(i, j))).collect()).collect();
        ensure(got == w, || format!("fuzzy closure of\n{}differs from the widest-path closure", fuzzy.to_text()))?;
    }
    Ok("property verdicts correct; 100 real-valued triples satisfy both laws; 50 crisp and 50 fuzzy 4x4 closures minimal".into())
}

fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let (mut sign, mut prev) = (1, 1);
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(p) => {
                    m.swap(k, p);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn matrix_tree(g: &Graph) -> i128 {
    let n = g.vertex_count();
    let mut lap = vec![vec![0i128; n]; n];
    for &(u, v) in g.edges() {
        lap[u][u] += 1;
        lap[v][v] += 1;
        lap[u][v] -= 1;
        lap[v][u] -= 1;
    }
    bareiss(lap[1..].iter().map(|row| row[1..].to_vec()).collect())
}

fn has_matching(adj: &[Vec<bool>], free: u32) -> bool {
    if free == 0 {
        return true;
    }
    let u = free.trailing_zeros() as usize;
    (u + 1..adj.len()).any(|v| free & (1 << v) != 0 && adj[u][v] && has_matching(adj, free & !(1 << u) & !(1 << v)))
}

fn ac11() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let number = |rng: &mut ChaCha8Rng| NeutroNumber::new(rat(rng.gen_range(-50..50), rng.gen_range(1..10)), rat(rng.gen_range(-50..50), rng.gen_range(1..10)));
    for _ in 0..1000 {
        let (x, y, z) = (number(&mut rng), number(&mut rng), number(&mut rng));
        let ring = &x + &y == &y + &x
            && &x * &y == &y * &x
            && &(&x + &y) + &z == &x + &(&y + &z)
            && &(&x * &y) * &z == &x * &(&y * &z)
            && &x * &(&y + &z) == &(&x * &y) + &(&x * &z)
            && &x + &NeutroNumber::zero() == x
            && &x * &NeutroNumber::one() == x;
        ensure(ring, || format!("ring axiom fails at x={x}, y={y}, z={z}"))?;
        let (sx, sy, sp, ss) = (x.split(), y.split(), (&x * &y).split(), (&x + &y).split());
        let hom = sp.first == &sx.first * &sy.first
            && sp.second == &sx.second * &sy.second
            && ss.first == &sx.first + &sy.first
            && ss.second == &sx.second + &sy.second;
        ensure(hom, || format!("split is not multiplicative at x={x}, y={y}"))?;
    }
    for _ in 0..100 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n);
        let count = spanning_tree_count(&g).map_err(|e| e.to_string())? as i128;
        ensure(count == matrix_tree(&g), || format!("{:?}: tau = {count}, matrix-tree {}", g.edges(), matrix_tree(&g)))?;
    }
    let config = TutteConfig { repetitions: 20, seed: 11 };
    let mut disagreements = 0;
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random_graph(&mut rng, n);
        let brute = n % 2 == 0 && has_matching(&g.adjacency_matrix(), (1u32 << n) - 1);
        if tutte(&g, &config).map_err(|e| e.to_string())?.has_one_factor != brute {
            disagreements += 1;
        }
    }
    ensure(disagreements == 0, || format!("{disagreements} Tutte disagreements"))?;
    Ok("1000 ring samples; 100 spanning-tree counts; 200 Tutte tests with no disagreement".into())
}

/// Synchronous binary map with clamping, returning the trajectory.
fn fcm_oracle(w: &[Vec<i64>], s0: &[u8], clamp: &[usize]) -> Vec<Vec<u8>> {
    let n = w.len();
    let clamped = |mut s: Vec<u8>| {
        for &i in clamp {
            s[i] = 1;
        }
        s
    };
    let mut trajectory = vec![clamped(s0.to_vec())];
    let mut seen = HashMap::from([(trajectory[0].clone(), ())]);
    loop {
        let s = trajectory.last().unwrap();
        let next = clamped((0..n).map(|j| u8::from((0..n).map(|i| i64::from(s[i]) * w[i][j]).sum::<i64>() > 0)).collect());
        if seen.insert(next.clone(), ()).is_some() {
            return trajectory;
        }
        trajectory.push(next);
    }
}

fn ac12() -> Check {
    let names = [
        "ex-3.7.1-E.model",
        "ex-3.7.1-NE.model",
        "ex-3.7.1-E1.model",
        "ex-3.7.1-NE1.model",
        "ex-3.7.2-NE.model",
        "sec-2.8-transit-E.model",
    ];
    let mut runs = 0;
    let mut compared = 0;
    for name in names {
        let m = concept(name);
        let n = m.len();
        ensure(n <= 8, || format!("{name} has {n} concepts"))?;
        let weights = m.integer_weights();
        for s0 in StateVector::all_crisp(n) {
            let run = cm_run(&m, &s0, None).map_err(|e| format!("{name} from {s0}: {e}"))?;
            ensure(run.iterations() <= step_bound(n), || format!("{name} from {s0}: {} updates", run.iterations()))?;
            ensure(is_consistent(&m, &run), || format!("{name} from {s0}: pattern fails the update equation"))?;
            if let Some(w) = &weights {
                let bits: Vec<u8> = s0.values().iter().map(|a| u8::from(a.symbol() == '1')).collect();
                let oracle = fcm_oracle(w, &bits, &s0.on_indices());
                let got: Vec<Vec<u8>> =
                    run.trajectory.iter().map(|s| s.values().iter().map(|a| u8::from(a.symbol() == '1')).collect()).collect();
                ensure(got == oracle, || format!("{name} from {s0}: NCM and FCM trajectories differ"))?;
                compared += 1;
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} runs within bound and consistent; {compared} I-free runs equal the binary map"))
}

fn main() -> ExitCode {
    let criteria: [(usize, fn() -> Check); 12] = [
        (1, ac1),
        (2, ac2),
        (3, ac3),
        (4, ac4),
        (5, ac5),
        (6, ac6),
        (7, ac7),
        (8, ac8),
        (9, ac9),
        (10, ac10),
        (11, ac11),
        (12, ac12),
    ];
    let mut unexpected = 0;
    for (id, check) in criteria {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("[PASS] AC-{id}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                println!("[FAIL] AC-{id}: {why} ({elapsed:.2?})");
                match UNATTAINABLE.iter().find(|(u, _)| *u == id) {
                    Some((_, reason)) => println!("       known unattainable: {reason}"),
                    None => unexpected += 1,
                }
            }
        }
    }
    if unexpected > 0 {
        println!("{unexpected} criteria failed unexpectedly");
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
