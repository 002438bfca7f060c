//! Balanced tree separator for a shortest-path tree.

use crate::error::{Error, Result};
use crate::graph::VertexId;
use crate::spt::ShortestPathTree;

/// Split of a rooted tree into `M` (containing the root) and `N` (rooted at
/// the separator), sharing only the separator vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Separator {
    pub vertex: VertexId,
    /// `in_n[v]` is true for every vertex of `N`, the separator included.
    pub in_n: Vec<bool>,
    pub size_m: usize,
    pub size_n: usize,
    /// Number of tree vertices that were split.
    pub tree_size: usize,
}

impl Separator {
    /// `⌊n/3⌋ ≤ |V_M|, |V_N| ≤ ⌈2n/3⌉ + 1`.
    pub fn is_balanced(&self) -> bool {
        balance_holds(self.tree_size, self.size_m, self.size_n)
    }
}

pub fn balance_holds(n: usize, size_m: usize, size_n: usize) -> bool {
    let lo = n / 3;
    let hi = (2 * n).div_ceil(3) + 1;
    [size_m, size_n].iter().all(|&s| lo <= s && s <= hi)
}

/// Finds a separator by descending into the heaviest child while its
/// subtree holds more than two thirds of the tree.
///
/// If the heaviest child where the descent stops is still below a third,
/// the stop vertex itself becomes the separator and its child subtrees are
/// moved into `N`, heaviest first, until `N` reaches a third.
pub fn find_separator(spt: &ShortestPathTree) -> Result<Separator> {
    let n = spt.reached_count();
    if n < 2 {
        return Err(Error::TreeTooSmall(n));
    }
    let size = spt.subtree_sizes();
    let children = spt.children();
    let heaviest = |v: VertexId| children[v].iter().copied().max_by_key(|&c| (size[c], std::cmp::Reverse(c)));

    let mut v = spt.source;
    while let Some(c) = heaviest(v) {
        if 3 * size[c] > 2 * n {
            v = c;
        } else {
            break;
        }
    }
    let c = heaviest(v).expect("a vertex holding over two thirds of a tree with n >= 2 has a child");

    let lo = n / 3;
    let mut in_n = vec![false; spt.vertex_count()];
    let (vertex, roots) = if size[c] >= lo {
        (c, vec![c])
    } else {
        let mut kids = children[v].clone();
        kids.sort_by_key(|&k| (std::cmp::Reverse(size[k]), k));
        let mut taken = 1;
        let mut roots = Vec::new();
        for k in kids {
            if taken >= lo {
                break;
            }
            taken += size[k];
            roots.push(k);
        }
        in_n[v] = true;
        (v, roots)
    };

    let mut stack = roots;
    while let Some(x) = stack.pop() {
        in_n[x] = true;
        stack.extend_from_slice(&children[x]);
    }
    let size_n = in_n.iter().filter(|&&b| b).count();
    Ok(Separator { vertex, in_n, size_m: n + 1 - size_n, size_n, tree_size: n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::spt::dijkstra;
    use proptest::prelude::*;

    fn path(n: usize) -> Graph {
        let pairs: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::unweighted(n, &pairs)
    }

    /// Every vertex `r` with `N` = subtree(r) that satisfies the balance bounds.
    fn balanced_subtree_roots(spt: &ShortestPathTree) -> Vec<VertexId> {
        let n = spt.reached_count();
        let size = spt.subtree_sizes();
        (0..spt.vertex_count())
            .filter(|&r| spt.is_reached(r) && balance_holds(n, n + 1 - size[r], size[r]))
            .collect()
    }

    #[test]
    fn three_vertex_path() {
        let spt = dijkstra(&path(3), 0, &[]);
        let sep = find_separator(&spt).unwrap();
        assert_eq!(sep.vertex, 1);
        assert_eq!((sep.size_m, sep.size_n), (2, 2));
        assert!(sep.is_balanced());
    }

    #[test]
    fn nine_vertex_path() {
        let spt = dijkstra(&path(9), 0, &[]);
        let sep = find_separator(&spt).unwrap();
        // exhaustive check: positions whose split is balanced
        let ok = balanced_subtree_roots(&spt);
        assert!(ok.contains(&sep.vertex), "{} not in {ok:?}", sep.vertex);
        assert!([3, 4].contains(&sep.vertex));
        assert!((3..=7).contains(&sep.size_m) && (3..=7).contains(&sep.size_n));
    }

    #[test]
    fn star_uses_center_and_groups_leaves() {
        let pairs: Vec<_> = (1..=10).map(|i| (0, i)).collect();
        let spt = dijkstra(&Graph::unweighted(11, &pairs), 0, &[]);
        // no single subtree is balanced
        assert!(balanced_subtree_roots(&spt).is_empty());
        let sep = find_separator(&spt).unwrap();
        assert_eq!(sep.vertex, 0);
        assert!(sep.is_balanced(), "{sep:?}");
        assert_eq!(sep.size_m + sep.size_n, 12);
    }

    #[test]
    fn single_vertex_is_an_error() {
        let spt = dijkstra(&Graph::unweighted(1, &[]), 0, &[]);
        assert!(matches!(find_separator(&spt), Err(Error::TreeTooSmall(1))));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]
        #[test]
        fn balanced_on_random_trees(raw in prop::collection::vec(any::<prop::sample::Index>(), 1..500)) {
            let n = raw.len() + 1;
            let pairs: Vec<_> = raw.iter().enumerate().map(|(i, ix)| (ix.index(i + 1), i + 1)).collect();
            let spt = dijkstra(&Graph::unweighted(n, &pairs), 0, &[]);
            let sep = find_separator(&spt).unwrap();
            prop_assert!(sep.is_balanced(), "n={} m={} n_side={}", n, sep.size_m, sep.size_n);
            prop_assert!(sep.in_n[sep.vertex]);
            // N is closed under taking children, except at the separator itself
            for v in 0..n {
                if let Some(p) = spt.parent[v] {
                    if sep.in_n[p] && p != sep.vertex {
                        prop_assert!(sep.in_n[v]);
                    }
                    if sep.in_n[v] && v != sep.vertex {
                        prop_assert!(sep.in_n[p]);
                    }
                }
            }
            prop_assert!(sep.vertex == 0 || !sep.in_n[0]);
        }
    }
}
