use crate::graph::SimpleGraph;

const UNSEEN: usize = usize::MAX;

/// Articulation points by depth-first low-link, ascending.
///
/// The traversal keeps an explicit stack so graphs with tens of thousands of
/// vertices do not overflow the call stack. Works per component.
pub fn cut_vertices(g: &SimpleGraph) -> Vec<usize> {
    let n = g.order();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    // (vertex, parent, next neighbor index to scan)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, UNSEEN, 0));

        while let Some(top) = stack.last_mut() {
            let (v, parent, from) = *top;
            match g.neighborhood(v).next_from(from) {
                Some(w) => {
                    top.2 = w + 1;
                    if disc[w] == UNSEEN {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, v, 0));
                    } else if w != parent {
                        low[v] = low[v].min(disc[w]);
                    }
                }
                None => {
                    stack.pop();
                    if parent != UNSEEN {
                        low[parent] = low[parent].min(low[v]);
                        if parent != root && low[v] >= disc[parent] {
                            is_cut[parent] = true;
                        }
                    }
                }
            }
        }
        if root_children > 1 {
            is_cut[root] = true;
        }
    }
    (0..n).filter(|&v| is_cut[v]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::build_topo_graph;

    #[test]
    fn topo_cut_vertices_are_singletons() {
        for n in 3..=5 {
            let t = build_topo_graph(n).unwrap();
            let expected: Vec<usize> = t.singletons().iter().map(|&v| t.index_of(v)).collect();
            assert_eq!(cut_vertices(&t.to_simple()), expected, "n={n}");
        }
    }

    #[test]
    fn edge_has_no_cut_vertex() {
        assert!(cut_vertices(&SimpleGraph::complete(2)).is_empty());
    }

    #[test]
    fn path_and_star() {
        let path = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(cut_vertices(&path), vec![1, 2]);
        let star = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(cut_vertices(&star), vec![0]);
    }
}
