#![allow(dead_code)]

use rand::Rng;
use treedepth::{Graph, VertexSet};

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

pub fn star(leaves: usize) -> Graph {
    Graph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v)))
}

pub fn is_connected(g: &Graph) -> bool {
    g.n() == 0 || g.is_connected_within(&g.vertex_set())
}

/// Every labelled graph on `n` vertices, by edge bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let count = 1u64 << pairs.len();
    (0..count).map(move |mask| {
        Graph::from_edges(
            n,
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e),
        )
    })
}

pub fn all_connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).filter(is_connected)
}

pub fn gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// G(n, p) conditioned on connectivity by rejection.
pub fn connected_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    loop {
        let g = gnp(n, p, rng);
        if is_connected(&g) {
            return g;
        }
    }
}

/// Random spanning tree plus uniform extra edges until `m` edges exist.
pub fn connected_with_edges<R: Rng>(n: usize, m: usize, rng: &mut R) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    while g.edge_count() < m {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        g.add_edge(u, v);
    }
    g
}

pub fn random_set<R: Rng>(cap: usize, p: f64, rng: &mut R) -> VertexSet {
    VertexSet::from_vertices(cap, (0..cap).filter(|_| rng.gen_bool(p)))
}

/// Depth of the elimination forest obtained by eliminating vertices in
/// `order`: within each component the earliest vertex of the order is the
/// root. Independent of the solver and the memoized oracle.
pub fn elimination_order_depth(g: &Graph, order: &[usize]) -> usize {
    fn go(g: &Graph, order: &[usize], set: &VertexSet) -> usize {
        let mut best = 0;
        for comp in g.components_within(set) {
            let root = *order.iter().find(|&&v| comp.contains(v)).unwrap();
            let mut rest = comp.clone();
            rest.remove(root);
            best = best.max(1 + go(g, order, &rest));
        }
        best
    }
    go(g, order, &g.vertex_set())
}

/// Minimum elimination-order depth over all `n!` orders.
pub fn min_over_all_orders(g: &Graph) -> usize {
    fn permute(g: &Graph, order: &mut Vec<usize>, k: usize, best: &mut usize) {
        if k == order.len() {
            *best = (*best).min(elimination_order_depth(g, order));
            return;
        }
        for i in k..order.len() {
            order.swap(k, i);
            permute(g, order, k + 1, best);
            order.swap(k, i);
        }
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut best = usize::MAX;
    permute(g, &mut order, 0, &mut best);
    best
}
