use crate::departing::build_dep;
use crate::distance::Distance;
use crate::graph::{Edge, EdgeKind, Graph, VertexId};
use crate::rp_pair::replacement_lengths_along_path;
use crate::separator::find_separator;
use crate::spt::{dijkstra, dijkstra_with};

use super::{EdgeClass, InternalNode, LeafTable, NodeBody, NodeId, OracleNode, OracleTree, Side};

/// Non-root nodes with at most this many vertices are leaves.
pub const LEAF_MAX_VERTICES: usize = 4;

/// Subtrees at least this large build their two children in parallel.
const PARALLEL_MIN_VERTICES: usize = 4096;

impl OracleTree {
    /// Builds the oracle for source `s` of an unweighted input graph.
    /// Vertices outside the component of `s` are dropped before the build.
    pub fn build(g: &Graph, s: VertexId) -> crate::Result<OracleTree> {
        g.check_vertex(s)?;
        let mut tree = OracleTree {
            original_graph: g.clone(),
            original_source: s,
            nodes: Vec::new(),
            to_root: Vec::new(),
            root_spt: None,
        };
        tree.rebuild_indices();

        let component = tree.to_root.iter().filter(|x| x.is_some()).count();
        let edges: Vec<Edge> = g
            .edges()
            .iter()
            .filter_map(|e| {
                let (u, v) = (tree.to_root[e.u]?, tree.to_root[e.v]?);
                Some(Edge { u, v, ..*e })
            })
            .collect();
        let root_graph = Graph::from_edges(component, edges);
        let root_source = tree.to_root[s].expect("source is in its own component");
        tree.nodes = build_subtree(root_graph, root_source, 0);
        Ok(tree)
    }
}

/// Builds the subtree rooted at a node for `g` with source `s`; the
/// returned arena has the subtree root at index 0.
fn build_subtree(g: Graph, s: VertexId, depth: usize) -> Vec<OracleNode> {
    let n = g.vertex_count();
    let mut spt_s = dijkstra(&g, s, &[]);
    let origin_index = origin_index(&g);

    if n <= 2 || (depth > 0 && n <= LEAF_MAX_VERTICES) {
        return vec![leaf(g, s, depth, spt_s, origin_index)];
    }

    spt_s.build_lca();
    let sep = find_separator(&spt_s).expect("node graphs with three or more vertices are connected");
    let r = sep.vertex;
    let (size_m, size_n) = (sep.size_m, sep.size_n + 1);
    let stalls = |size: usize| size >= n && size > LEAF_MAX_VERTICES;
    if stalls(size_m) || stalls(size_n) {
        spt_s.drop_lca();
        return vec![leaf(g, s, depth, spt_s, origin_index)];
    }

    let side: Vec<Side> = (0..n)
        .map(|v| match (v == r, sep.in_n[v]) {
            (true, _) => Side::Both,
            (false, true) => Side::N,
            (false, false) => Side::M,
        })
        .collect();
    let primary_path = spt_s.tree_path(s, r).expect("s is the root of its own tree");
    let mut on_primary = vec![false; g.edge_count()];
    for &e in &primary_path.edge_ids {
        on_primary[e] = true;
    }
    let edge_class: Vec<EdgeClass> = g
        .edges()
        .iter()
        .enumerate()
        .map(|(id, e)| {
            // An edge at r belongs to the side of its other endpoint.
            let sides = match (side[e.u], side[e.v]) {
                (Side::Both, x) | (x, Side::Both) => (x, x),
                pair => pair,
            };
            match sides {
                (Side::N, Side::N) => EdgeClass::N,
                (Side::M, Side::M) | (Side::Both, Side::Both) if on_primary[id] => EdgeClass::MOnPrimary,
                (Side::M, Side::M) | (Side::Both, Side::Both) => EdgeClass::MOffPrimary,
                _ => EdgeClass::Crossing,
            }
        })
        .collect();

    let spt_r = dijkstra(&g, r, &[]);
    let dist_s_avoiding_n = dijkstra_with(&g, s, |e| edge_class[e] == EdgeClass::N).dist;
    let dist_r_avoiding_m = dijkstra_with(&g, r, |e| edge_class[e].in_m()).dist;
    let sr_replacements = replacement_lengths_along_path(&g, &spt_s, &spt_r, &primary_path);
    let (dep, dep_stats) = build_dep(&g, &spt_s, &primary_path);
    spt_s.drop_lca();

    let (left_graph, to_left) = left_child_graph(&g, r, &side, &edge_class, &dist_r_avoiding_m);
    let (right_graph, to_right, right_source) = right_child_graph(&g, &side, &edge_class, &dist_s_avoiding_n);
    let left_source = to_left[s].expect("the source is on the M side");

    let (left_nodes, right_nodes) = if n >= PARALLEL_MIN_VERTICES {
        rayon::join(
            || build_subtree(left_graph, left_source, depth + 1),
            || build_subtree(right_graph, right_source, depth + 1),
        )
    } else {
        (build_subtree(left_graph, left_source, depth + 1), build_subtree(right_graph, right_source, depth + 1))
    };

    let left: NodeId = 1;
    let right: NodeId = 1 + left_nodes.len();
    let node = OracleNode {
        graph: g,
        source: s,
        depth,
        spt_s,
        origin_index,
        body: NodeBody::Internal(Box::new(InternalNode {
            separator: r,
            primary_path,
            spt_r,
            dist_s_avoiding_n,
            dist_r_avoiding_m,
            sr_replacements,
            dep,
            dep_stats,
            side,
            edge_class,
            to_left,
            to_right,
            left,
            right,
        })),
    };

    let mut nodes = Vec::with_capacity(1 + left_nodes.len() + right_nodes.len());
    nodes.push(node);
    append_shifted(&mut nodes, left_nodes, left);
    append_shifted(&mut nodes, right_nodes, right);
    nodes
}

fn append_shifted(out: &mut Vec<OracleNode>, sub: Vec<OracleNode>, offset: NodeId) {
    for mut node in sub {
        if let NodeBody::Internal(inner) = &mut node.body {
            inner.left += offset;
            inner.right += offset;
        }
        out.push(node);
    }
}

fn origin_index(g: &Graph) -> Vec<(usize, usize)> {
    let mut idx: Vec<_> = g.edges().iter().enumerate().filter_map(|(id, e)| e.origin.map(|o| (o, id))).collect();
    idx.sort_unstable();
    idx
}

fn leaf(g: Graph, s: VertexId, depth: usize, spt_s: crate::spt::ShortestPathTree, origin_index: Vec<(usize, usize)>) -> OracleNode {
    let rows = g
        .edges()
        .iter()
        .enumerate()
        .filter(|(_, e)| e.kind == EdgeKind::Original)
        .map(|(id, _)| (id, dijkstra(&g, s, &[id]).dist))
        .collect();
    OracleNode { graph: g, source: s, depth, spt_s, origin_index, body: NodeBody::Leaf(LeafTable { rows }) }
}

/// `G_M` plus `r → v` edges weighted by the `M`-avoiding distance from `r`.
pub(super) fn left_child_graph(
    g: &Graph,
    r: VertexId,
    side: &[Side],
    edge_class: &[EdgeClass],
    dist_r_avoiding_m: &[Distance],
) -> (Graph, Vec<Option<VertexId>>) {
    let (to_child, count) = compact(side, Side::in_m);
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .zip(edge_class)
        .filter(|(_, c)| c.in_m())
        .map(|(e, _)| Edge { u: to_child[e.u].unwrap(), v: to_child[e.v].unwrap(), ..*e })
        .collect();
    let rc = to_child[r].expect("separator is on both sides");
    for (v, d) in dist_r_avoiding_m.iter().enumerate() {
        if v == r || !side[v].in_m() {
            continue;
        }
        if let Distance::Finite(w) = *d {
            edges.push(Edge { u: rc, v: to_child[v].unwrap(), weight: w, kind: EdgeKind::Virtual, origin: None });
        }
    }
    (Graph::from_edges(count, edges), to_child)
}

/// `G_N` plus a new source (the last vertex) with an edge to every `v`
/// weighted by the `N`-avoiding distance from `s`.
pub(super) fn right_child_graph(
    g: &Graph,
    side: &[Side],
    edge_class: &[EdgeClass],
    dist_s_avoiding_n: &[Distance],
) -> (Graph, Vec<Option<VertexId>>, VertexId) {
    let (to_child, count) = compact(side, Side::in_n);
    let source = count;
    let mut edges: Vec<Edge> = g
        .edges()
        .iter()
        .zip(edge_class)
        .filter(|(_, c)| **c == EdgeClass::N)
        .map(|(e, _)| Edge { u: to_child[e.u].unwrap(), v: to_child[e.v].unwrap(), ..*e })
        .collect();
    for (v, d) in dist_s_avoiding_n.iter().enumerate() {
        if !side[v].in_n() {
            continue;
        }
        if let Distance::Finite(w) = *d {
            edges.push(Edge { u: source, v: to_child[v].unwrap(), weight: w, kind: EdgeKind::Virtual, origin: None });
        }
    }
    (Graph::from_edges(count + 1, edges), to_child, source)
}

fn compact(side: &[Side], keep: fn(Side) -> bool) -> (Vec<Option<VertexId>>, usize) {
    let mut next = 0;
    let map = side
        .iter()
        .map(|&s| {
            keep(s).then(|| {
                next += 1;
                next - 1
            })
        })
        .collect();
    (map, next)
}
