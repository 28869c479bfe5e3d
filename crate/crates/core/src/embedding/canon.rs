use super::graph::{Dart, PlaneGraph};

pub type CanonCode = Vec<u32>;

/// Breadth-first code of the embedding seen from `start`. Neighbours are
/// read from the discovering vertex onwards, clockwise when `mirror`.
/// Returns `None` as soon as the code is known to exceed `bound`.
fn bfs_code(
    g: &PlaneGraph,
    start: Dart,
    mirror: bool,
    header: &[u32],
    bound: Option<&[u32]>,
) -> Option<CanonCode> {
    let cap = g.capacity();
    let mut label = vec![0u32; cap];
    let mut refv = vec![u32::MAX; cap];
    let mut code: Vec<u32> = Vec::with_capacity(header.len() + 2 * g.m() + g.n());
    code.extend_from_slice(header);
    let mut tight = bound.is_some();
    let push = |code: &mut Vec<u32>, x: u32, tight: &mut bool| -> bool {
        code.push(x);
        if *tight {
            let b = bound.unwrap();
            let i = code.len() - 1;
            match b.get(i) {
                None => return false,
                Some(&bx) if x > bx => return false,
                Some(&bx) if x < bx => *tight = false,
                _ => {}
            }
        }
        true
    };
    if tight && code.as_slice() != &bound.unwrap()[..code.len().min(bound.unwrap().len())] {
        tight = false;
    }
    let mut queue = vec![start.0];
    label[start.0 as usize] = 1;
    refv[start.0 as usize] = start.1;
    let mut next = 2;
    let mut qi = 0;
    while qi < queue.len() {
        let x = queue[qi];
        qi += 1;
        let r = g.neighbors(x);
        let d = r.len();
        let p = r.iter().position(|&y| y == refv[x as usize]).unwrap();
        for k in 0..d {
            let y = if mirror {
                r[(p + d - k) % d]
            } else {
                r[(p + k) % d]
            };
            if label[y as usize] == 0 {
                label[y as usize] = next;
                next += 1;
                refv[y as usize] = x;
                queue.push(y);
            }
            if !push(&mut code, label[y as usize], &mut tight) {
                return None;
            }
        }
        if !push(&mut code, 0, &mut tight) {
            return None;
        }
    }
    Some(code)
}

fn min_over(
    g: &PlaneGraph,
    starts: impl Iterator<Item = (Dart, bool)>,
    header: Vec<u32>,
) -> CanonCode {
    let mut best: Option<CanonCode> = None;
    for (d, mirror) in starts {
        if let Some(c) = bfs_code(g, d, mirror, &header, best.as_deref()) {
            if best.as_ref().is_none_or(|b| c < *b) {
                best = Some(c);
            }
        }
    }
    best.unwrap_or(header)
}

/// Canonical code of the plane graph. Equal codes mean an isomorphism,
/// possibly orientation reversing, that maps outer face to outer face.
pub fn plane_code(g: &PlaneGraph) -> CanonCode {
    let outer = g.outer_face();
    let header = vec![g.n() as u32, g.m() as u32, outer.len() as u32];
    let starts = outer
        .iter()
        .map(|&d| (d, false))
        .chain(outer.iter().map(|&d| (d.rev(), true)))
        .collect::<Vec<_>>();
    min_over(g, starts.into_iter(), header)
}

/// Canonical code of the embedding on the sphere, ignoring the outer face.
pub fn sphere_code(g: &PlaneGraph) -> CanonCode {
    let header = vec![g.n() as u32, g.m() as u32];
    let key = |d: &Dart| (g.degree(d.0), g.degree(d.1));
    let darts: Vec<Dart> = g
        .vertices()
        .flat_map(|v| g.neighbors(v).iter().map(move |&w| Dart(v, w)))
        .collect();
    let best_key = darts.iter().map(key).min().unwrap();
    let starts = darts
        .iter()
        .filter(|d| key(d) == best_key)
        .flat_map(|&d| [(d, false), (d, true)])
        .collect::<Vec<_>>();
    min_over(g, starts.into_iter(), header)
}
