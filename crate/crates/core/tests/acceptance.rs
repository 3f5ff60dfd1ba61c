//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run with `cargo test --test acceptance -- --nocapture` to see them.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use distbal::constructions::*;
use distbal::decomposition::*;
use distbal::filter;
use distbal::graph::Graph;
use distbal::graph6;
use distbal::iso::are_isomorphic;
use distbal::metric::{all_pairs_distances, UNREACHABLE};
use distbal::properties::*;
use distbal::scan::{scan_stream, ScanOptions};
use distbal::verify;

fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).unwrap()
}

fn w(m: usize, ell: usize) -> Graph {
    build_w_graph(&WGraphSpec { m, ell }).unwrap()
}

#[test]
fn criterion_1_w23_end_to_end() {
    let start = Instant::now();
    let g = w(2, 3);
    assert_eq!(g.order(), 18);
    assert!((0..18).all(|v| g.degree(v) == 3));
    assert!(g.is_bipartite());
    assert!(g.is_connected());
    let dm = all_pairs_distances(&g);
    assert!(is_distance_balanced(&g, &dm).unwrap().holds);
    assert!(!is_strongly_distance_balanced(&g, &dm).unwrap().holds);
    assert!(!is_partial_cube(&g, &dm).unwrap().holds);
    assert_eq!(vertex_connectivity(&g).unwrap(), 2);
    let analysis = analyze_minimal_2cut(&g, &dm).unwrap();
    assert_eq!(analysis.cut_distance, 3);
    assert!(analysis.hypothesis_ok);
    let good = &analysis.components[analysis.good_component.unwrap()];
    let bad = &analysis.components[analysis.bad_component.unwrap()];
    assert_eq!(good.len(), 4);
    assert_eq!(bad.len(), 12);
    let layers = build_layers(&g, &dm, &analysis).unwrap();
    assert_eq!(layers.b_layers.iter().map(Vec::len).collect::<Vec<_>>(), [2, 2]);
    assert_eq!(layers.t, 8);
    assert_eq!(
        layers.d_layers.iter().map(Vec::len).collect::<Vec<_>>(),
        [1, 2, 2, 1, 1, 2, 2, 1]
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    println!("criterion 1 (W(2,3) end-to-end, {elapsed:?}): PASS");
}

#[test]
fn criterion_2_theorem_3_6_dichotomy() {
    let start = Instant::now();
    for m in 2..=5 {
        for ell in 3..=8 {
            let g = w(m, ell);
            let dm = all_pairs_distances(&g);
            let db = is_distance_balanced(&g, &dm).unwrap().holds;
            assert_eq!(db, ell % 2 == 1, "W({m},{ell})");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    println!("criterion 2 (DB iff l odd over the 24-graph grid, {elapsed:?}): PASS");
}

#[test]
fn criterion_3_proposition_1_2_suite() {
    let checks = verify::verify_suite();
    for prefix in [
        "Proposition 1.2 (2-connectivity)",
        "Proposition 1.2(i)",
        "Proposition 1.2(ii)",
        "Proposition 1.2(iii)",
        "Proposition 1.2(iv)",
    ] {
        let check = checks
            .iter()
            .find(|c| c.name.starts_with(prefix))
            .unwrap_or_else(|| panic!("missing check {prefix}"));
        assert!(check.passed, "{}: {}", check.name, check.detail);
    }
    println!("criterion 3 (Proposition 1.2 suite, zero violations): PASS");
}

#[test]
fn criterion_4_lemma_3_1_and_remark_3_2() {
    for m in 2..=5 {
        for ell in [3, 5, 7] {
            let g = w(m, ell);
            let dm = all_pairs_distances(&g);
            let analysis = analyze_minimal_2cut(&g, &dm).unwrap();
            let layers = build_layers(&g, &dm, &analysis).unwrap();
            assert!(check_lemma_3_1(&dm, &analysis, &layers), "W({m},{ell})");
            // cut distance 3 here, so the extreme layers are B_1 and B_2
            // and must induce a complete bipartite graph
            for &x in &layers.b_layers[0] {
                for &y in &layers.b_layers[layers.m - 1] {
                    assert!(g.has_edge(x, y), "W({m},{ell}): missing edge ({x},{y})");
                }
            }
        }
    }
    println!("criterion 4 (extreme-layer distance identity and completeness): PASS");
}

#[test]
fn criterion_5_proposition_4_1() {
    let start = Instant::now();
    for m in 2..=5 {
        for ell in [3, 5, 7] {
            let g = w(m, ell);
            let dm = all_pairs_distances(&g);
            let analysis = analyze_minimal_2cut(&g, &dm).unwrap();
            let layers = build_layers(&g, &dm, &analysis).unwrap();
            let classes = classify_edges(&g, &analysis).unwrap();
            let report = check_prop_4_1(&g, &dm, &analysis, &layers, &classes).unwrap();
            assert!(report.holds, "W({m},{ell}): {:?}", report.first_failure);
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}");
    println!("criterion 5 (edge classification identities, {elapsed:?}): PASS");
}

#[test]
fn criterion_6_theorems_5_1_and_5_2() {
    // bipartite SDB non-cycle fixtures are 3-connected
    let mut fixtures: Vec<(String, Graph)> = Vec::new();
    for d in 2..=4 {
        fixtures.push((format!("Q_{d}"), build_hypercube(d).unwrap()));
    }
    for p in 2..=4 {
        for q in p..=4 {
            fixtures.push((format!("K_{{{p},{q}}}"), build_complete_bipartite(p, q).unwrap()));
        }
    }
    for (label, g) in &fixtures {
        let dm = all_pairs_distances(g);
        if g.is_bipartite() && !g.is_cycle() && is_strongly_distance_balanced(g, &dm).unwrap().holds
        {
            assert!(vertex_connectivity(g).unwrap() >= 3, "{label}");
        }
        if !g.is_cycle()
            && is_distance_balanced(g, &dm).unwrap().holds
            && is_partial_cube(g, &dm).unwrap().holds
        {
            assert!(vertex_connectivity(g).unwrap() >= 3, "{label}");
        }
    }
    // contrapositive consistency: odd-l W graphs are DB but 2-connected,
    // hence neither SDB nor partial cubes
    for m in 2..=5 {
        for ell in [3, 5, 7] {
            let g = w(m, ell);
            let dm = all_pairs_distances(&g);
            assert!(!is_strongly_distance_balanced(&g, &dm).unwrap().holds, "W({m},{ell})");
            assert!(!is_partial_cube(&g, &dm).unwrap().holds, "W({m},{ell})");
        }
    }
    println!("criterion 6 (3-connectivity of SDB and partial-cube fixtures): PASS");
}

// --- criterion 7 oracles ---

/// Distances by boolean adjacency-matrix powering: d(u,v) is the first
/// power whose (u,v) entry is set.
fn powering_distances(g: &Graph) -> Vec<Vec<u16>> {
    let n = g.order();
    let mut adj = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut dist = vec![vec![UNREACHABLE; n]; n];
    for (v, row) in dist.iter_mut().enumerate() {
        row[v] = 0;
    }
    let mut power = adj.clone();
    for k in 1..n as u16 {
        for i in 0..n {
            for j in 0..n {
                if power[i][j] && dist[i][j] == UNREACHABLE {
                    dist[i][j] = k;
                }
            }
        }
        let mut next = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if power[i][j] {
                    for (l, &a) in adj[j].iter().enumerate() {
                        if a {
                            next[i][l] = true;
                        }
                    }
                }
            }
        }
        power = next;
    }
    dist
}

/// Connectivity by trying every vertex subset in increasing size.
fn subset_connectivity(g: &Graph) -> usize {
    let n = g.order();
    for k in 1..n - 1 {
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let subset: Vec<usize> = (0..n).filter(|&v| mask & (1 << v) != 0).collect();
            if g.components_excluding(&subset).len() > 1 {
                return k;
            }
        }
    }
    n - 1
}

#[test]
fn criterion_7_oracle_equivalence() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    // distances vs matrix powering
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let g = random_graph(&mut rng, n, 0.3);
        let dm = all_pairs_distances(&g);
        let oracle = powering_distances(&g);
        for u in 0..n {
            for v in 0..n {
                assert_eq!(dm.dist(u, v), oracle[u][v], "n={n} u={u} v={v}");
            }
        }
    }
    // connectivity vs subset enumeration (connected graphs only)
    let mut checked = 0;
    while checked < 100 {
        let n = rng.gen_range(3..=10);
        let g = random_graph(&mut rng, n, 0.45);
        if !g.is_connected() {
            continue;
        }
        checked += 1;
        assert_eq!(
            vertex_connectivity(&g).unwrap(),
            subset_connectivity(&g),
            "graph {}",
            graph6::encode(&g).unwrap()
        );
    }
    // graph6 round trip at large order
    for i in 0..100 {
        let n = rng.gen_range(1..=1000);
        let p = (4.0 / n as f64).min(1.0);
        let g = random_graph(&mut rng, n, p);
        let rec = graph6::encode(&g).unwrap();
        assert_eq!(graph6::decode(&rec).unwrap(), g, "round trip #{i}, n={n}");
    }
    println!("criterion 7 (oracle equivalence: distances, connectivity, graph6): PASS");
}

#[test]
fn criterion_8_cubic_bipartite_streams() {
    let root = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data");
    let small = root.join("cubic_bipartite_le16.g6");
    let big = root.join("cubic_bipartite_18.g6");
    if !small.exists() || !big.exists() {
        println!(
            "criterion 8 (cubic bipartite streams): SKIP (no stream files under {})",
            root.display()
        );
        return;
    }
    let opts = ScanOptions {
        filter: Some(filter::parse("candidate").unwrap()),
        jobs: 0,
        strict: true,
    };
    let mut diag = Vec::new();

    let input = std::fs::read(&small).unwrap();
    let mut out = Vec::new();
    let outcome = scan_stream(&input[..], &mut out, &mut diag, &opts).unwrap();
    assert_eq!(outcome.malformed, 0);
    assert_eq!(outcome.emitted, 0, "unexpected candidates below order 18");

    let input = std::fs::read(&big).unwrap();
    let mut out = Vec::new();
    let outcome = scan_stream(&input[..], &mut out, &mut diag, &opts).unwrap();
    assert_eq!(outcome.malformed, 0);
    assert!(outcome.emitted >= 1, "W(2,3) must appear in an exhaustive order-18 stream");
    let w23 = w(2, 3);
    for line in out.split(|&b| b == b'\n').filter(|l| !l.is_empty()) {
        let report: distbal::report::ScanReport = serde_json::from_slice(line).unwrap();
        let g = graph6::decode(&report.graph6).unwrap();
        assert!(are_isomorphic(&g, &w23).unwrap(), "hit not isomorphic to W(2,3)");
    }
    println!("criterion 8 (cubic bipartite streams): PASS");
}

#[test]
fn criterion_9_scanner_determinism_and_throughput() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut input = String::new();
    let count = 10_000;
    for _ in 0..count {
        let n = rng.gen_range(4..=20);
        let g = random_graph(&mut rng, n, 0.25);
        input.push_str(&graph6::encode(&g).unwrap());
        input.push('\n');
    }
    let opts_1 = ScanOptions {
        jobs: 1,
        ..Default::default()
    };
    let opts_8 = ScanOptions {
        jobs: 8,
        ..Default::default()
    };
    let mut diag = Vec::new();
    let mut serial = Vec::new();
    scan_stream(input.as_bytes(), &mut serial, &mut diag, &opts_1).unwrap();
    let start = Instant::now();
    let mut parallel = Vec::new();
    let outcome = scan_stream(input.as_bytes(), &mut parallel, &mut diag, &opts_8).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(outcome.records, count);
    assert_eq!(outcome.malformed, 0);
    assert_eq!(serial, parallel, "jobs=1 and jobs=8 outputs differ");
    let throughput = count as f64 / elapsed.as_secs_f64();
    assert!(
        throughput >= 1000.0,
        "throughput {throughput:.0} graphs/s below 1000"
    );
    println!(
        "criterion 9 (determinism and throughput {:.0} graphs/s): PASS",
        throughput
    );
}
