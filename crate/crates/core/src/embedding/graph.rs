use std::collections::HashSet;

use crate::error::EmbeddingError;

pub type Vid = u32;

/// Directed edge `tail -> head`. The face on its left is the one traced by
/// [`PlaneGraph::next_in_face`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dart(pub Vid, pub Vid);

impl Dart {
    pub fn rev(self) -> Dart {
        Dart(self.1, self.0)
    }
}

/// Connected plane graph stored as a rotation system.
///
/// `rot[v]` lists the neighbours of `v` counter-clockwise. Vertex ids are
/// stable: deleting a vertex leaves a hole, new vertices get fresh ids.
/// The outer face is the face to the left of `outer`.
#[derive(Clone, Debug)]
pub struct PlaneGraph {
    rot: Vec<Vec<Vid>>,
    alive: Vec<bool>,
    live: usize,
    edges: usize,
    outer: Dart,
}

impl PlaneGraph {
    /// Builds a graph from rotations over ids `0..rot.len()`. Every id must
    /// have at least one neighbour. `outer` picks the outer face by its
    /// vertex cycle (either direction); `None` takes the longest face.
    pub fn from_rotations(
        rot: Vec<Vec<Vid>>,
        outer: Option<&[Vid]>,
    ) -> Result<Self, EmbeddingError> {
        let n = rot.len();
        if n < 2 {
            return Err(EmbeddingError::TooSmall(n));
        }
        let mut edges = 0usize;
        for (v, nb) in rot.iter().enumerate() {
            if nb.is_empty() {
                return Err(EmbeddingError::Disconnected);
            }
            let mut seen = HashSet::new();
            for &w in nb {
                if w as usize >= n {
                    return Err(EmbeddingError::UnknownVertex(w));
                }
                if w as usize == v {
                    return Err(EmbeddingError::SelfLoop(w));
                }
                if !seen.insert(w) {
                    return Err(EmbeddingError::ParallelEdge(v as Vid, w));
                }
                if !rot[w as usize].contains(&(v as Vid)) {
                    return Err(EmbeddingError::Asymmetric(v as Vid, w));
                }
            }
            edges += nb.len();
        }
        let mut g = PlaneGraph {
            rot,
            alive: vec![true; n],
            live: n,
            edges: edges / 2,
            outer: Dart(0, 0),
        };
        g.outer = Dart(0, g.rot[0][0]);
        if !g.is_connected() {
            return Err(EmbeddingError::Disconnected);
        }
        let faces = g.faces();
        if g.live + faces.len() != g.edges + 2 {
            return Err(EmbeddingError::NotPlanar);
        }
        let chosen = match outer {
            None => faces.iter().max_by_key(|f| f.len()).unwrap().clone(),
            Some(cycle) => faces
                .iter()
                .find(|f| same_cycle(&f.iter().map(|d| d.0).collect::<Vec<_>>(), cycle))
                .cloned()
                .ok_or(EmbeddingError::NoSuchFace)?,
        };
        g.outer = chosen[0];
        Ok(g)
    }

    /// Builds a graph from a list of triangles, orienting them consistently.
    /// The outer face is the single face that is not one of the triangles.
    pub fn from_faces(n: usize, tris: &[[Vid; 3]]) -> Result<Self, EmbeddingError> {
        let oriented = orient_triangles(n, tris)?;
        // succ[a] maps b -> c for every oriented triangle (a,b,c)
        let mut succ: Vec<Vec<(Vid, Vid)>> = vec![Vec::new(); n];
        for t in &oriented {
            for k in 0..3 {
                let (a, b, c) = (t[k], t[(k + 1) % 3], t[(k + 2) % 3]);
                succ[a as usize].push((b, c));
            }
        }
        let mut rot = vec![Vec::new(); n];
        for a in 0..n {
            let pairs = &succ[a];
            if pairs.is_empty() {
                return Err(EmbeddingError::Disconnected);
            }
            let targets: HashSet<Vid> = pairs.iter().map(|p| p.1).collect();
            // the chain starts at the one neighbour that no triangle leads into
            let starts: Vec<Vid> = pairs
                .iter()
                .map(|p| p.0)
                .filter(|b| !targets.contains(b))
                .collect();
            let start = match starts.len() {
                0 => pairs[0].0,
                1 => starts[0],
                _ => return Err(EmbeddingError::NotPlanar),
            };
            let mut cur = start;
            let mut order = vec![cur];
            while let Some(&(_, c)) = pairs.iter().find(|p| p.0 == cur) {
                if c == start {
                    break;
                }
                if order.contains(&c) {
                    return Err(EmbeddingError::NotPlanar);
                }
                order.push(c);
                cur = c;
            }
            if order.len() != {
                let mut all: HashSet<Vid> = targets.clone();
                all.extend(pairs.iter().map(|p| p.0));
                all.len()
            } {
                return Err(EmbeddingError::NotPlanar);
            }
            rot[a] = order;
        }
        let g = PlaneGraph::from_rotations(rot, None)?;
        let tri_set: HashSet<[Vid; 3]> = oriented.iter().map(|t| canon_tri(*t)).collect();
        let faces = g.faces();
        let extra: Vec<&Vec<Dart>> = faces
            .iter()
            .filter(|f| f.len() != 3 || !tri_set.contains(&canon_tri([f[0].0, f[1].0, f[2].0])))
            .collect();
        let mut g = g;
        match extra.len() {
            1 => g.outer = extra[0][0],
            // a full triangulation: the first listed triangle becomes the outer face
            0 => g.outer = Dart(oriented[0][0], oriented[0][1]),
            _ => return Err(EmbeddingError::NotPlanar),
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.live
    }

    pub fn m(&self) -> usize {
        self.edges
    }

    /// One past the largest id ever used.
    pub fn capacity(&self) -> usize {
        self.rot.len()
    }

    pub fn is_alive(&self, v: Vid) -> bool {
        (v as usize) < self.alive.len() && self.alive[v as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vid> + '_ {
        (0..self.rot.len() as Vid).filter(move |&v| self.alive[v as usize])
    }

    pub fn degree(&self, v: Vid) -> usize {
        self.rot[v as usize].len()
    }

    pub fn neighbors(&self, v: Vid) -> &[Vid] {
        &self.rot[v as usize]
    }

    pub fn adjacent(&self, a: Vid, b: Vid) -> bool {
        let (x, y) = if self.degree(a) <= self.degree(b) {
            (a, b)
        } else {
            (b, a)
        };
        self.rot[x as usize].contains(&y)
    }

    pub fn edges(&self) -> impl Iterator<Item = (Vid, Vid)> + '_ {
        self.vertices().flat_map(move |v| {
            self.rot[v as usize]
                .iter()
                .filter(move |&&w| v < w)
                .map(move |&w| (v, w))
        })
    }

    pub fn outer_dart(&self) -> Dart {
        self.outer
    }

    pub fn set_outer_dart(&mut self, d: Dart) {
        debug_assert!(self.adjacent(d.0, d.1));
        self.outer = d;
    }

    fn pos(&self, v: Vid, w: Vid) -> usize {
        self.rot[v as usize]
            .iter()
            .position(|&x| x == w)
            .unwrap_or_else(|| panic!("{w} is not a neighbour of {v}"))
    }

    /// Neighbour after `w` in counter-clockwise order around `v`.
    pub fn succ(&self, v: Vid, w: Vid) -> Vid {
        let r = &self.rot[v as usize];
        r[(self.pos(v, w) + 1) % r.len()]
    }

    pub fn pred(&self, v: Vid, w: Vid) -> Vid {
        let r = &self.rot[v as usize];
        r[(self.pos(v, w) + r.len() - 1) % r.len()]
    }

    pub fn next_in_face(&self, d: Dart) -> Dart {
        Dart(d.1, self.pred(d.1, d.0))
    }

    pub fn face_of(&self, d: Dart) -> Vec<Dart> {
        let mut out = vec![d];
        let mut cur = self.next_in_face(d);
        while cur != d {
            out.push(cur);
            cur = self.next_in_face(cur);
            debug_assert!(out.len() <= 2 * self.edges + 1);
        }
        out
    }

    pub fn outer_face(&self) -> Vec<Dart> {
        self.face_of(self.outer)
    }

    /// Vertex sequence of the outer walk. Cut vertices repeat.
    pub fn outer_walk(&self) -> Vec<Vid> {
        self.outer_face().into_iter().map(|d| d.0).collect()
    }

    pub fn boundary_flags(&self) -> Vec<bool> {
        let mut f = vec![false; self.rot.len()];
        for d in self.outer_face() {
            f[d.0 as usize] = true;
        }
        f
    }

    /// Unordered edges that lie on the outer face.
    pub fn boundary_edges(&self) -> HashSet<(Vid, Vid)> {
        self.outer_face()
            .into_iter()
            .map(|d| ordered(d.0, d.1))
            .collect()
    }

    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let mut seen: HashSet<Dart> = HashSet::with_capacity(2 * self.edges);
        let mut out = Vec::new();
        for v in self.vertices() {
            for &w in &self.rot[v as usize] {
                let d = Dart(v, w);
                if seen.contains(&d) {
                    continue;
                }
                let f = self.face_of(d);
                seen.extend(f.iter().copied());
                out.push(f);
            }
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let Some(s) = self.vertices().next() else {
            return true;
        };
        let mut seen = vec![false; self.rot.len()];
        let mut stack = vec![s];
        seen[s as usize] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.rot[v as usize] {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.live
    }

    pub fn add_vertex(&mut self) -> Vid {
        self.rot.push(Vec::new());
        self.alive.push(true);
        self.live += 1;
        (self.rot.len() - 1) as Vid
    }

    /// Inserts edge `a-b` so that `b` follows `after_a` around `a` and `a`
    /// follows `after_b` around `b`. `None` is only valid for a vertex with
    /// no neighbours yet.
    pub fn add_edge(&mut self, a: Vid, b: Vid, after_a: Option<Vid>, after_b: Option<Vid>) {
        debug_assert!(a != b && !self.adjacent(a, b));
        self.insert_after(a, b, after_a);
        self.insert_after(b, a, after_b);
        self.edges += 1;
    }

    fn insert_after(&mut self, v: Vid, w: Vid, after: Option<Vid>) {
        match after {
            None => {
                debug_assert!(self.rot[v as usize].is_empty());
                self.rot[v as usize].push(w);
            }
            Some(x) => {
                let p = self.pos(v, x);
                self.rot[v as usize].insert(p + 1, w);
            }
        }
    }

    /// Adds edge `a-b` through the face left of `face`. Both ends must lie
    /// on that face.
    pub fn add_edge_in_face(&mut self, a: Vid, b: Vid, face: Dart) -> Result<(), EmbeddingError> {
        if self.adjacent(a, b) {
            return Err(EmbeddingError::ParallelEdge(a, b));
        }
        let f = self.face_of(face);
        let da = f
            .iter()
            .find(|d| d.0 == a)
            .ok_or(EmbeddingError::NotOnFace(a))?;
        let db = f
            .iter()
            .find(|d| d.0 == b)
            .ok_or(EmbeddingError::NotOnFace(b))?;
        let (xa, xb) = (da.1, db.1);
        self.add_edge(a, b, Some(xa), Some(xb));
        Ok(())
    }

    /// Deletes a set of vertices, keeping the outer face pointer valid.
    pub fn delete_vertices(&mut self, dead: &[Vid]) {
        if dead.is_empty() {
            return;
        }
        let mut kill = vec![false; self.rot.len()];
        for &v in dead {
            debug_assert!(self.is_alive(v));
            kill[v as usize] = true;
        }
        let new_outer = self.surviving_outer(
            |d| !kill[d.0 as usize] && !kill[d.1 as usize],
            |v| kill[v as usize],
        );
        for &v in dead {
            if !self.alive[v as usize] {
                continue;
            }
            let nb = std::mem::take(&mut self.rot[v as usize]);
            self.edges -= nb.iter().filter(|&&w| !kill[w as usize] || w > v).count();
            for w in nb {
                if !kill[w as usize] {
                    self.rot[w as usize].retain(|&x| x != v);
                }
            }
            self.alive[v as usize] = false;
            self.live -= 1;
        }
        if let Some(d) = new_outer {
            self.outer = d;
        }
    }

    pub fn delete_vertex(&mut self, v: Vid) {
        self.delete_vertices(&[v]);
    }

    pub fn delete_edges(&mut self, gone: &[(Vid, Vid)]) {
        let set: HashSet<(Vid, Vid)> = gone.iter().map(|&(a, b)| ordered(a, b)).collect();
        let new_outer = self.surviving_outer_edges(&set);
        for &(a, b) in &set {
            debug_assert!(self.adjacent(a, b));
            self.rot[a as usize].retain(|&x| x != b);
            self.rot[b as usize].retain(|&x| x != a);
            self.edges -= 1;
        }
        if let Some(d) = new_outer {
            self.outer = d;
        }
    }

    pub fn delete_edge(&mut self, a: Vid, b: Vid) {
        self.delete_edges(&[(a, b)]);
    }

    // Removing things only merges faces, so the outer region grows. An outer
    // dart that survives therefore stays on the outer face. If none survives
    // the outer face reaches a surviving vertex through the gap a deleted
    // boundary vertex leaves in its rotation.
    fn surviving_outer(
        &self,
        keep: impl Fn(Dart) -> bool,
        dead: impl Fn(Vid) -> bool,
    ) -> Option<Dart> {
        if keep(self.outer) {
            return Some(self.outer);
        }
        let face = self.outer_face();
        if let Some(d) = face.iter().find(|d| keep(**d)) {
            return Some(*d);
        }
        for d in &face {
            let x = d.0;
            if !dead(x) {
                continue;
            }
            for &y in &self.rot[x as usize] {
                if dead(y) {
                    continue;
                }
                // last surviving neighbour of y before x, counter-clockwise
                let r = &self.rot[y as usize];
                let p = r.iter().position(|&z| z == x).unwrap();
                for k in 1..r.len() {
                    let a = r[(p + r.len() - k) % r.len()];
                    if !dead(a) {
                        return Some(Dart(y, a));
                    }
                }
            }
        }
        None
    }

    fn surviving_outer_edges(&self, gone: &HashSet<(Vid, Vid)>) -> Option<Dart> {
        let ok = |d: Dart| !gone.contains(&ordered(d.0, d.1));
        if ok(self.outer) {
            return Some(self.outer);
        }
        let face = self.outer_face();
        if let Some(d) = face.iter().find(|d| ok(**d)) {
            return Some(*d);
        }
        // every outer edge goes: the corner around the tail of a removed outer dart
        for d in &face {
            let r = &self.rot[d.0 as usize];
            let p = r.iter().position(|&z| z == d.1).unwrap();
            for k in 1..r.len() {
                let a = r[(p + r.len() - k) % r.len()];
                if ok(Dart(d.0, a)) {
                    return Some(Dart(d.0, a));
                }
            }
        }
        None
    }

    /// Copies `part` into this graph with fresh ids, mirrored if asked.
    /// Vertices listed in `glue` are not copied but mapped to the given host
    /// vertex; their rotations are left for the caller to merge.
    fn copy_in(
        &mut self,
        part: &PlaneGraph,
        mirror: bool,
        glue: &[(Vid, Vid)],
    ) -> Vec<Option<Vid>> {
        let mut map: Vec<Option<Vid>> = vec![None; part.rot.len()];
        for &(p, h) in glue {
            map[p as usize] = Some(h);
        }
        for v in part.vertices() {
            if map[v as usize].is_none() {
                map[v as usize] = Some(self.add_vertex());
            }
        }
        for v in part.vertices() {
            if glue.iter().any(|g| g.0 == v) {
                continue;
            }
            let mut r: Vec<Vid> = part.rot[v as usize]
                .iter()
                .map(|&w| map[w as usize].unwrap())
                .collect();
            if mirror {
                r.reverse();
            }
            let id = map[v as usize].unwrap();
            self.rot[id as usize] = r;
        }
        map
    }

    fn recount_edges(&mut self) {
        self.edges = self.rot.iter().map(|r| r.len()).sum::<usize>() / 2;
    }

    /// Rotation of `part` at `v`, starting after `from`, mirrored if asked,
    /// as a cyclic sequence that ends with `from`.
    fn rotation_from(part: &PlaneGraph, v: Vid, from: Vid, mirror: bool) -> Vec<Vid> {
        let mut r = part.rot[v as usize].clone();
        if mirror {
            r.reverse();
        }
        let p = r.iter().position(|&x| x == from).unwrap();
        let d = r.len();
        (1..=d).map(|k| r[(p + k) % d]).collect()
    }

    /// Identifies the root `pr` of `part` with the outer-face vertex `hv`.
    /// The part is placed in the outer face of the host at one outer corner
    /// of `hv`. Returns the id map from `part` into `self`.
    pub fn fuse(
        &mut self,
        hv: Vid,
        part: &PlaneGraph,
        pr: Vid,
        mirror: bool,
    ) -> Result<Vec<Option<Vid>>, EmbeddingError> {
        self.fuse_at(hv, 0, part, pr, mirror)
    }

    /// Number of outer corners at `v`; more than one for cut vertices.
    pub fn outer_corners(&self, v: Vid) -> usize {
        self.outer_face().iter().filter(|d| d.0 == v).count()
    }

    /// Like [`fuse`](Self::fuse), placing the part in the `corner`-th outer corner of `hv`.
    pub fn fuse_at(
        &mut self,
        hv: Vid,
        corner: usize,
        part: &PlaneGraph,
        pr: Vid,
        mirror: bool,
    ) -> Result<Vec<Option<Vid>>, EmbeddingError> {
        let host_d = self
            .outer_face()
            .into_iter()
            .filter(|d| d.0 == hv)
            .nth(corner)
            .ok_or(EmbeddingError::NotOnFace(hv))?;
        let part_outer = if mirror {
            part.outer_face_mirrored()
        } else {
            part.outer_face()
        };
        let part_d = part_outer
            .into_iter()
            .find(|d| d.0 == pr)
            .ok_or(EmbeddingError::NotOnFace(pr))?;
        let seq = PlaneGraph::rotation_from(part, pr, part_d.1, mirror);
        let map = self.copy_in(part, mirror, &[(pr, hv)]);
        let seq: Vec<Vid> = seq.iter().map(|&w| map[w as usize].unwrap()).collect();
        let p = self.pos(hv, host_d.1);
        let tail = self.rot[hv as usize].split_off(p + 1);
        self.rot[hv as usize].extend(seq);
        self.rot[hv as usize].extend(tail);
        self.recount_edges();
        Ok(map)
    }

    fn outer_face_mirrored(&self) -> Vec<Dart> {
        // mirroring reverses every rotation; the outer face is then traced by the reversed darts
        let mut m = self.clone();
        for r in m.rot.iter_mut() {
            r.reverse();
        }
        m.outer = self.outer.rev();
        m.outer_face()
    }

    /// Reverses every rotation. The outer face is kept.
    pub fn mirror(&mut self) {
        for r in self.rot.iter_mut() {
            r.reverse();
        }
        self.outer = self.outer.rev();
    }

    /// Identifies the root edge `pu-pv` of `part` with the outer edge
    /// `hu-hv` of the host; the part goes in the outer face. The part is
    /// mirrored when that is needed to keep the orientation consistent.
    pub fn attach(
        &mut self,
        hu: Vid,
        hv: Vid,
        part: &PlaneGraph,
        pu: Vid,
        pv: Vid,
    ) -> Result<Vec<Option<Vid>>, EmbeddingError> {
        let outer = self.outer_face();
        let (hu, hv, pu, pv) = if outer.contains(&Dart(hu, hv)) {
            (hu, hv, pu, pv)
        } else if outer.contains(&Dart(hv, hu)) {
            (hv, hu, pv, pu)
        } else {
            return Err(EmbeddingError::NotBoundaryEdge(hu, hv));
        };
        let p_outer = part.outer_face();
        let mirror = if p_outer.contains(&Dart(pv, pu)) {
            false
        } else if p_outer.contains(&Dart(pu, pv)) {
            true
        } else {
            return Err(EmbeddingError::NotBoundaryEdge(pu, pv));
        };
        // part rotation at pu after pv, and at pv after pu, both ending at the base vertex
        let mut g_u = PlaneGraph::rotation_from(part, pu, pv, mirror);
        g_u.pop();
        let mut g_v = PlaneGraph::rotation_from(part, pv, pu, mirror);
        g_v.pop();
        let map = self.copy_in(part, mirror, &[(pu, hu), (pv, hv)]);
        let g_u: Vec<Vid> = g_u.iter().map(|&w| map[w as usize].unwrap()).collect();
        let g_v: Vec<Vid> = g_v.iter().map(|&w| map[w as usize].unwrap()).collect();
        let h_u = PlaneGraph::rotation_from(self, hu, hv, false);
        let h_v = PlaneGraph::rotation_from(self, hv, hu, false);
        let mut ru = vec![hv];
        ru.extend(&g_u);
        ru.extend(&h_u[..h_u.len() - 1]);
        let mut rv = vec![hu];
        rv.extend(&h_v[..h_v.len() - 1]);
        rv.extend(&g_v);
        self.rot[hu as usize] = ru;
        self.rot[hv as usize] = rv;
        if let Some(&gm) = g_u.last() {
            self.outer = Dart(hu, gm);
        }
        self.recount_edges();
        Ok(map)
    }

    /// Contracts edge `u-v` into `u`. Fails if it would create a parallel edge.
    pub fn contract(&mut self, u: Vid, v: Vid) -> Result<(), EmbeddingError> {
        if !self.adjacent(u, v) {
            return Err(EmbeddingError::NotAnEdge(u, v));
        }
        let common: Vec<Vid> = self.rot[u as usize]
            .iter()
            .copied()
            .filter(|&w| w != v && self.adjacent(v, w))
            .collect();
        let su = PlaneGraph::rotation_from(self, u, v, false);
        let sv = PlaneGraph::rotation_from(self, v, u, false);
        let su = &su[..su.len() - 1];
        let sv = &sv[..sv.len() - 1];
        // common neighbours may only meet at the two junctions of the merged rotation
        for &c in &common {
            let at_junction = (su.last() == Some(&c) && sv.first() == Some(&c))
                || (sv.last() == Some(&c) && su.first() == Some(&c));
            if !at_junction {
                return Err(EmbeddingError::ParallelEdge(u, c));
            }
        }
        let mut merged: Vec<Vid> = su.to_vec();
        for &w in sv {
            if common.contains(&w) {
                continue;
            }
            merged.push(w);
        }
        let outer_ok = |d: Dart| d.0 != v && d.1 != v;
        let new_outer = if outer_ok(self.outer) {
            self.outer
        } else {
            let f = self.outer_face();
            match f.iter().find(|d| outer_ok(**d)) {
                Some(d) => *d,
                None => Dart(u, merged[0]),
            }
        };
        for &w in sv {
            if common.contains(&w) {
                self.rot[w as usize].retain(|&x| x != v);
            } else {
                for x in self.rot[w as usize].iter_mut() {
                    if *x == v {
                        *x = u;
                    }
                }
            }
        }
        self.rot[u as usize] = merged;
        self.rot[v as usize].clear();
        self.alive[v as usize] = false;
        self.live -= 1;
        self.recount_edges();
        self.outer = new_outer;
        Ok(())
    }

    /// Flips edge `a-b` between faces `(a,b,c)` and `(b,a,d)` to `c-d`.
    /// Returns false if the flip is not possible.
    pub fn flip(&mut self, a: Vid, b: Vid) -> bool {
        if self.degree(a) <= 3 || self.degree(b) <= 3 {
            return false;
        }
        let c = self.succ(a, b);
        let d = self.succ(b, a);
        if c == d || self.adjacent(c, d) {
            return false;
        }
        // both sides must be triangles
        if self.succ(b, c) != a
            || self.succ(c, a) != b
            || self.succ(a, d) != b
            || self.succ(d, b) != a
        {
            return false;
        }
        let keep = |x: Dart| !((x.0 == a && x.1 == b) || (x.0 == b && x.1 == a));
        self.rot[a as usize].retain(|&x| x != b);
        self.rot[b as usize].retain(|&x| x != a);
        let pc = self.pos(c, a);
        self.rot[c as usize].insert(pc + 1, d);
        let pd = self.pos(d, b);
        self.rot[d as usize].insert(pd + 1, c);
        if !keep(self.outer) {
            self.outer = Dart(c, d);
        }
        true
    }

    /// Splits `v` along neighbours `a` and `b`: `v` keeps the arc from `a`
    /// to `b` counter-clockwise, a new vertex takes the arc from `b` to `a`,
    /// and the two are joined. Inverse of contracting the new edge.
    pub fn split_vertex(&mut self, v: Vid, a: Vid, b: Vid) -> Vid {
        let r = self.rot[v as usize].clone();
        let d = r.len();
        let i = self.pos(v, a);
        let len = (self.pos(v, b) + d - i) % d;
        debug_assert!(len >= 1 && a != b);
        let x = self.add_vertex();
        let keep: Vec<Vid> = (0..=len).map(|k| r[(i + k) % d]).collect();
        let give: Vec<Vid> = (len..=d).map(|k| r[(i + k) % d]).collect();
        for &w in &give[1..give.len() - 1] {
            for y in self.rot[w as usize].iter_mut() {
                if *y == v {
                    *y = x;
                }
            }
        }
        let pa = self.pos(a, v);
        self.rot[a as usize].insert(pa + 1, x);
        let pb = self.pos(b, v);
        self.rot[b as usize].insert(pb, x);
        let mut rv = keep;
        rv.push(x);
        let mut rx = give;
        rx.push(v);
        self.rot[v as usize] = rv;
        self.rot[x as usize] = rx;
        self.edges += 3;
        if self.outer.0 == v && !self.rot[v as usize].contains(&self.outer.1) {
            self.outer = Dart(x, self.outer.1);
        } else if self.outer.1 == v && !self.rot[v as usize].contains(&self.outer.0) {
            self.outer = Dart(self.outer.0, x);
        }
        x
    }

    /// Re-labels vertices densely as `0..n`, returning the map old -> new.
    pub fn compacted(&self) -> (PlaneGraph, Vec<Option<Vid>>) {
        let mut map = vec![None; self.rot.len()];
        let mut k = 0;
        for v in self.vertices() {
            map[v as usize] = Some(k);
            k += 1;
        }
        let rot: Vec<Vec<Vid>> = self
            .vertices()
            .map(|v| {
                self.rot[v as usize]
                    .iter()
                    .map(|&w| map[w as usize].unwrap())
                    .collect()
            })
            .collect();
        let g = PlaneGraph {
            alive: vec![true; rot.len()],
            live: rot.len(),
            edges: self.edges,
            outer: Dart(
                map[self.outer.0 as usize].unwrap(),
                map[self.outer.1 as usize].unwrap(),
            ),
            rot,
        };
        (g, map)
    }

    /// Raw rotation table including dead slots (empty).
    pub fn rotations(&self) -> &[Vec<Vid>] {
        &self.rot
    }
}

pub fn ordered(a: Vid, b: Vid) -> (Vid, Vid) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

fn canon_tri(t: [Vid; 3]) -> [Vid; 3] {
    let mut s = t;
    s.sort_unstable();
    s
}

fn same_cycle(a: &[Vid], b: &[Vid]) -> bool {
    if a.len() != b.len() {
        return false;
    }
    let n = a.len();
    let mut rb: Vec<Vid> = b.to_vec();
    for _ in 0..2 {
        for s in 0..n {
            if (0..n).all(|i| a[i] == rb[(s + i) % n]) {
                return true;
            }
        }
        rb.reverse();
    }
    false
}

// Orients triangles so that shared edges run in opposite directions.
fn orient_triangles(n: usize, tris: &[[Vid; 3]]) -> Result<Vec<[Vid; 3]>, EmbeddingError> {
    use std::collections::HashMap;
    for t in tris {
        for &x in t {
            if x as usize >= n {
                return Err(EmbeddingError::UnknownVertex(x));
            }
        }
        if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
            return Err(EmbeddingError::SelfLoop(t[0]));
        }
    }
    let mut by_edge: HashMap<(Vid, Vid), Vec<usize>> = HashMap::new();
    for (i, t) in tris.iter().enumerate() {
        for k in 0..3 {
            by_edge
                .entry(ordered(t[k], t[(k + 1) % 3]))
                .or_default()
                .push(i);
        }
    }
    if by_edge.values().any(|v| v.len() > 2) {
        return Err(EmbeddingError::NotPlanar);
    }
    let mut out: Vec<Option<[Vid; 3]>> = vec![None; tris.len()];
    for s in 0..tris.len() {
        if out[s].is_some() {
            continue;
        }
        out[s] = Some(tris[s]);
        let mut stack = vec![s];
        while let Some(i) = stack.pop() {
            let t = out[i].unwrap();
            for k in 0..3 {
                let (a, b) = (t[k], t[(k + 1) % 3]);
                for &j in &by_edge[&ordered(a, b)] {
                    if j == i {
                        continue;
                    }
                    let tj = tris[j];
                    // neighbour must traverse b -> a
                    let has_ba = (0..3).any(|q| tj[q] == b && tj[(q + 1) % 3] == a);
                    let want = if has_ba { tj } else { [tj[0], tj[2], tj[1]] };
                    match out[j] {
                        None => {
                            out[j] = Some(want);
                            stack.push(j);
                        }
                        Some(prev) => {
                            if !(0..3).any(|q| prev[q] == b && prev[(q + 1) % 3] == a) {
                                return Err(EmbeddingError::NotPlanar);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(|t| t.unwrap()).collect())
}
