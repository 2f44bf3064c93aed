use crate::graph::Graph;

/// Articulation points, ascending, from one iterative low-link DFS per component.
pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        // (vertex, parent, remaining neighbours)
        let mut stack: Vec<(usize, usize, Vec<usize>)> =
            vec![(root, usize::MAX, g.neighbors(root).collect())];
        while let Some(top) = stack.last_mut() {
            let (u, parent) = (top.0, top.1);
            if let Some(v) = top.2.pop() {
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    if u == root {
                        root_children += 1;
                    }
                    stack.push((v, u, g.neighbors(v).collect()));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if parent != root && low[u] >= disc[parent] {
                        is_cut[parent] = true;
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
