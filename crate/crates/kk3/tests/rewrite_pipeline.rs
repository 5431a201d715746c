//! Composition of the rewrites: regularizing every clique of a degree-1
//! instance concentrates its external edges onto one apex, the result is a
//! valid apex configuration, and the redirection rewrite then saves edges
//! while keeping every clique vertex inside a full clique.

use kk3::bitset::VertexSet;
use kk3::graph::Graph;
use kk3::transform::{
    apex_configuration, apex_redirection, peel, regularize, verify_regularization, CliqueFamily,
};

/// Three triangles; block b's satellite pair attaches to scattered clique
/// vertices (never the smallest), plus one helper giving the first pair a
/// second triangle.
fn scattered_instance() -> (Graph, Vec<VertexSet>) {
    let mut g = Graph::new(16);
    let mut cliques = Vec::new();
    for b in 0..3usize {
        let base = 3 * b;
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base + 1, base + 2);
        cliques.push(VertexSet::from_slice(&[base, base + 1, base + 2]));
        let (x, y) = (9 + 2 * b, 9 + 2 * b + 1);
        g.add_edge(x, y);
        // Attach to different non-minimal clique vertices.
        g.add_edge(x, base + 1);
        g.add_edge(y, base + 2);
    }
    let helper = 15;
    g.add_edge(helper, 9);
    g.add_edge(helper, 10);
    (g, cliques)
}

#[test]
fn regularization_chain_builds_the_apex_configuration() {
    let (g, cliques) = scattered_instance();

    // No boundary vertex has two support neighbors, but the attachments are
    // scattered, so this is not yet an apex configuration.
    let family = CliqueFamily::new(&g, 2, cliques.clone()).unwrap();
    assert!(apex_configuration(&g, &family).is_none());

    // Chain the rewrite through every clique with a1 = a2 in label order.
    let mut current = g.clone();
    for c in &cliques {
        let ordered: Vec<usize> = c.to_vec();
        let next = regularize(&current, &ordered, *c).unwrap();
        let report = verify_regularization(&current, &next, &ordered, *c).unwrap();
        assert!(report.all_passed(), "{:?}", report.properties);
        current = next;
    }
    assert_eq!(current.edge_count(), g.edge_count());

    // Now every block routes its external edges through its first vertex.
    let family = CliqueFamily::new(&current, 2, cliques.clone()).unwrap();
    let config = apex_configuration(&current, &family).expect("chain produces the configuration");
    assert_eq!(config.apexes, vec![0, 3, 6]);
    assert_eq!(
        config.satellites,
        vec![
            VertexSet::from_slice(&[9, 10]),
            VertexSet::from_slice(&[11, 12]),
            VertexSet::from_slice(&[13, 14]),
        ]
    );
    assert_eq!(config.internal_edges, vec![1, 1, 1]);

    // The peeling trace of the regularized graph is the all-ones sequence.
    let trace = peel(&current, &family).unwrap();
    assert_eq!(trace.lambda, 1);
    assert_eq!(trace.xi(), 3);

    // Redirect: the pivot keeps its satellite triangle via the helper, the
    // last satellite set is completed onto the pivot, and exactly one edge
    // is saved (the pivot had no neighbors there).
    let pivot = 9;
    let before = current.edge_count();
    let red = apex_redirection(&current, &config.satellites, &config.apexes, pivot, 2).unwrap();
    assert_eq!(red.expected_delta, -1);
    assert_eq!(red.edge_delta, -1);
    assert_eq!(red.graph.edge_count() as i64, before as i64 - 1);
    for c in &red.cliques {
        assert!(red.graph.is_clique(*c));
    }
    // Every vertex still lies in at least C(t,2) = 1 triangle.
    assert!(red.graph.min_triangle_degree() >= 1);
}

#[test]
fn saturated_attachment_regularizes_to_a_bigger_clique() {
    // A boundary vertex adjacent to the whole clique stays fully attached
    // after the rewrite and forms a K_{t+2} with it.
    let mut g = Graph::new(5);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    for v in 0..3 {
        g.add_edge(3, v);
        g.add_edge(4, v);
    }
    g.add_edge(3, 4);
    let clique = VertexSet::from_slice(&[0, 1, 2]);
    let gp = regularize(&g, &[0, 1, 2], clique).unwrap();
    assert!(gp.is_clique(VertexSet::full(5)));
    assert!(gp.min_triangle_degree() >= 1);
}
