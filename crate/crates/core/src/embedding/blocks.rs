use super::graph::{ordered, PlaneGraph, Vid};

#[derive(Clone, Debug, Default)]
pub struct BlockCutTree {
    /// Vertex set of every biconnected block. Bridges are two-vertex blocks.
    pub blocks: Vec<Vec<Vid>>,
    pub cut_vertices: Vec<Vid>,
    pub bridges: Vec<(Vid, Vid)>,
}

/// Biconnected blocks by an iterative lowpoint search.
pub fn blocks_of(g: &PlaneGraph) -> BlockCutTree {
    let cap = g.capacity();
    let mut disc = vec![0u32; cap];
    let mut low = vec![0u32; cap];
    let mut is_cut = vec![false; cap];
    let mut out = BlockCutTree::default();
    let mut time = 0u32;
    let mut edge_stack: Vec<(Vid, Vid)> = Vec::new();
    let Some(root) = g.vertices().next() else {
        return out;
    };

    // frame: (vertex, parent, next neighbour index)
    let mut stack: Vec<(Vid, Vid, usize)> = vec![(root, Vid::MAX, 0)];
    time += 1;
    disc[root as usize] = time;
    low[root as usize] = time;
    let mut root_children = 0;
    while let Some(&mut (v, parent, ref mut idx)) = stack.last_mut() {
        let nb = g.neighbors(v);
        if *idx < nb.len() {
            let w = nb[*idx];
            *idx += 1;
            if disc[w as usize] == 0 {
                edge_stack.push((v, w));
                time += 1;
                disc[w as usize] = time;
                low[w as usize] = time;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent && disc[w as usize] < disc[v as usize] {
                edge_stack.push((v, w));
                low[v as usize] = low[v as usize].min(disc[w as usize]);
            }
            continue;
        }
        stack.pop();
        let Some(&(p, _, _)) = stack.last() else {
            break;
        };
        low[p as usize] = low[p as usize].min(low[v as usize]);
        if low[v as usize] >= disc[p as usize] {
            if p != root {
                is_cut[p as usize] = true;
            }
            let mut verts = Vec::new();
            let mut n_edges = 0;
            while let Some(e) = edge_stack.pop() {
                n_edges += 1;
                verts.push(e.0);
                verts.push(e.1);
                if e == (p, v) {
                    break;
                }
            }
            verts.sort_unstable();
            verts.dedup();
            if n_edges == 1 {
                out.bridges.push(ordered(p, v));
            }
            out.blocks.push(verts);
        }
    }
    if root_children > 1 {
        is_cut[root as usize] = true;
    }
    out.cut_vertices = g.vertices().filter(|&v| is_cut[v as usize]).collect();
    out
}
