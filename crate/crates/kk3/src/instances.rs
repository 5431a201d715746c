//! Seeded random instance generators for the property suites and the CLI.
//!
//! The shape is always the same: a few disjoint complete blocks plus a pool
//! of boundary vertices wired randomly into the blocks and among themselves,
//! never between blocks. Every block is guaranteed at least one external
//! neighbor, so the instances satisfy the peeling preconditions by
//! construction.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::transform::CliqueFamily;

/// A generated instance: the graph, its block family, and the parameters it
/// was built from.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub graph: Graph,
    pub t: usize,
    pub cliques: Vec<VertexSet>,
}

impl RandomInstance {
    pub fn family(&self) -> CliqueFamily {
        CliqueFamily::new(&self.graph, self.t, self.cliques.clone())
            .expect("generated blocks are valid cliques")
    }
}

/// Deterministic RNG for a suite seed.
pub fn rng_for_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Generates a random boundary instance on at most `max_vertices` vertices
/// with `t` in `2..=max_t`.
///
/// Boundary-to-block edges are sampled per (vertex, block vertex) pair;
/// boundary-to-boundary edges with a smaller probability. Each block is then
/// patched to have at least one external neighbor.
pub fn random_boundary_instance<R: Rng>(
    rng: &mut R,
    max_vertices: usize,
    max_t: usize,
) -> RandomInstance {
    assert!(max_t >= 2);
    let max_vertices = max_vertices.min(crate::bitset::MAX_VERTICES);
    let t = rng.gen_range(2..=max_t.min(5));
    let block = t + 1;
    // Leave room for at least one boundary vertex.
    let max_blocks = ((max_vertices - 1) / block).max(1);
    let blocks = rng.gen_range(1..=max_blocks.min(4));
    let boundary_max = max_vertices - blocks * block;
    let boundary = if boundary_max == 0 {
        0
    } else {
        rng.gen_range(1..=boundary_max.min(8))
    };
    let n = blocks * block + boundary;
    let mut g = Graph::new(n);
    let mut cliques = Vec::with_capacity(blocks);
    for b in 0..blocks {
        let base = b * block;
        for i in 0..block {
            for j in (i + 1)..block {
                g.add_edge(base + i, base + j);
            }
        }
        cliques.push(VertexSet::from_slice(
            &(base..base + block).collect::<Vec<_>>(),
        ));
    }
    let first_boundary = blocks * block;
    for v in first_boundary..n {
        for target in 0..first_boundary {
            if rng.gen_bool(0.25) {
                g.add_edge(v, target);
            }
        }
        for w in first_boundary..v {
            if rng.gen_bool(0.15) {
                g.add_edge(v, w);
            }
        }
    }
    // Every block needs an external contact for the peeling setup.
    if boundary > 0 {
        for (b, &c) in cliques.iter().enumerate() {
            let external = g.neighborhood_of_set(c) - c;
            if external.is_empty() {
                let v = first_boundary + (b % boundary);
                g.add_edge(v, b * block);
            }
        }
    }
    RandomInstance {
        graph: g,
        t,
        cliques,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_satisfy_peeling_preconditions() {
        let mut rng = rng_for_seed(42);
        for _ in 0..200 {
            let inst = random_boundary_instance(&mut rng, 24, 5);
            assert!(inst.graph.vertex_count() <= 24);
            let fam = inst.family();
            if inst.graph.vertex_count() > inst.cliques.len() * (inst.t + 1) {
                assert!(fam.check_peelable(&inst.graph).is_ok());
            }
        }
    }

    #[test]
    fn same_seed_same_instance() {
        let a = random_boundary_instance(&mut rng_for_seed(7), 24, 5);
        let b = random_boundary_instance(&mut rng_for_seed(7), 24, 5);
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.cliques, b.cliques);
        assert_eq!(a.t, b.t);
    }
}
