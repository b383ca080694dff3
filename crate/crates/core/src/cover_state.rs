//! Mutable cover state shared by the second-framework solvers.
//!
//! For clique `C_l` and vertex `x`, `l ∈ R_x` iff `x ∈ C_l` or `C_l ⊆ N(x)`.
//! `D_l` is the inverse map. Every mutation is journaled so that it can be
//! undone exactly.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::CoverError;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::instance::Cover;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum FrameKind {
    CoverEdge,
    NewClique,
}

/// Record of one mutation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UndoFrame {
    pub kind: FrameKind,
    pub clique: usize,
    pub edge: (Vertex, Vertex),
    /// Vertices dropped from `D_l` (cover-edge frames only).
    pub evicted: Vec<Vertex>,
    /// Whether `x`, resp. `y`, was already in `C_l`.
    pub had_x: bool,
    pub had_y: bool,
}

/// Everything that must be restored by an undo, for equality checks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Snapshot {
    pub cliques: Vec<Vec<Vertex>>,
    pub reps: Vec<BTreeSet<usize>>,
    pub inverse: Vec<BTreeSet<Vertex>>,
    pub edge_cover: Vec<u32>,
    pub vertex_cover: Vec<u32>,
    pub journal: Vec<UndoFrame>,
}

#[derive(Debug, Clone)]
pub struct CoverState<'g> {
    g: &'g Graph,
    cliques: Vec<Vec<Vertex>>,
    reps: Vec<BTreeSet<usize>>,
    inverse: Vec<BTreeSet<Vertex>>,
    // cliques containing each edge, plus one for pre-covered edges
    edge_cover: Vec<u32>,
    vertex_cover: Vec<u32>,
    uncovered_edges: usize,
    uncovered_vertices: usize,
    rep_total: usize,
    journal: Vec<UndoFrame>,
}

impl<'g> CoverState<'g> {
    pub fn new(g: &'g Graph) -> Self {
        CoverState {
            g,
            cliques: Vec::new(),
            reps: vec![BTreeSet::new(); g.n()],
            inverse: Vec::new(),
            edge_cover: vec![0; g.m()],
            vertex_cover: vec![0; g.n()],
            uncovered_edges: g.m(),
            uncovered_vertices: g.n(),
            rep_total: 0,
            journal: Vec::new(),
        }
    }

    /// State whose listed edges count as covered before any clique exists.
    pub fn with_precovered(g: &'g Graph, edges: &[EdgeId]) -> Self {
        let mut s = Self::new(g);
        for &e in edges {
            if s.edge_cover[e] == 0 {
                s.edge_cover[e] = 1;
                s.uncovered_edges -= 1;
            }
        }
        s
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    pub fn cliques(&self) -> &[Vec<Vertex>] {
        &self.cliques
    }

    pub fn num_cliques(&self) -> usize {
        self.cliques.len()
    }

    pub fn clique(&self, l: usize) -> &[Vertex] {
        &self.cliques[l]
    }

    pub fn reps(&self, x: Vertex) -> &BTreeSet<usize> {
        &self.reps[x]
    }

    pub fn inverse(&self, l: usize) -> &BTreeSet<Vertex> {
        &self.inverse[l]
    }

    /// `Σ_x |R_x|`.
    pub fn rep_total(&self) -> usize {
        self.rep_total
    }

    pub fn journal(&self) -> &[UndoFrame] {
        &self.journal
    }

    pub fn is_edge_covered(&self, e: EdgeId) -> bool {
        self.edge_cover[e] > 0
    }

    pub fn is_vertex_covered(&self, v: Vertex) -> bool {
        self.vertex_cover[v] > 0
    }

    pub fn all_edges_covered(&self) -> bool {
        self.uncovered_edges == 0
    }

    pub fn all_vertices_covered(&self) -> bool {
        self.uncovered_vertices == 0
    }

    /// Number of cliques `x` belongs to.
    pub fn memberships(&self, x: Vertex) -> u32 {
        self.vertex_cover[x]
    }

    pub fn contains(&self, l: usize, v: Vertex) -> bool {
        self.cliques[l].binary_search(&v).is_ok()
    }

    /// `R_x ∩ R_y`, ascending.
    pub fn common_reps(&self, x: Vertex, y: Vertex) -> Vec<usize> {
        let (a, b) = if self.reps[x].len() <= self.reps[y].len() { (x, y) } else { (y, x) };
        self.reps[a].iter().copied().filter(|l| self.reps[b].contains(l)).collect()
    }

    pub fn to_cover(&self) -> Cover {
        self.cliques.clone()
    }

    pub fn snapshot(&self) -> Snapshot {
        Snapshot {
            cliques: self.cliques.clone(),
            reps: self.reps.clone(),
            inverse: self.inverse.clone(),
            edge_cover: self.edge_cover.clone(),
            vertex_cover: self.vertex_cover.clone(),
            journal: self.journal.clone(),
        }
    }

    /// JSON dump of cliques, representative sets and inverse sets.
    pub fn debug_json(&self) -> String {
        #[derive(Serialize)]
        struct Dump<'a> {
            cliques: &'a [Vec<Vertex>],
            reps: &'a [BTreeSet<usize>],
            inverse: &'a [BTreeSet<Vertex>],
        }
        serde_json::to_string(&Dump { cliques: &self.cliques, reps: &self.reps, inverse: &self.inverse })
            .expect("serialisable")
    }

    fn bump_edge(&mut self, u: Vertex, v: Vertex, up: bool) {
        let e = self.g.edge_id(u, v).expect("clique members are adjacent");
        if up {
            if self.edge_cover[e] == 0 {
                self.uncovered_edges -= 1;
            }
            self.edge_cover[e] += 1;
        } else {
            self.edge_cover[e] -= 1;
            if self.edge_cover[e] == 0 {
                self.uncovered_edges += 1;
            }
        }
    }

    fn bump_vertex(&mut self, v: Vertex, up: bool) {
        if up {
            if self.vertex_cover[v] == 0 {
                self.uncovered_vertices -= 1;
            }
            self.vertex_cover[v] += 1;
        } else {
            self.vertex_cover[v] -= 1;
            if self.vertex_cover[v] == 0 {
                self.uncovered_vertices += 1;
            }
        }
    }

    fn insert_member(&mut self, l: usize, v: Vertex) {
        let members = std::mem::take(&mut self.cliques[l]);
        for &u in &members {
            self.bump_edge(u, v, true);
        }
        let mut members = members;
        let pos = members.partition_point(|&u| u < v);
        members.insert(pos, v);
        self.cliques[l] = members;
        self.bump_vertex(v, true);
    }

    fn remove_member(&mut self, l: usize, v: Vertex) {
        let mut members = std::mem::take(&mut self.cliques[l]);
        let pos = members.binary_search(&v).expect("member present");
        members.remove(pos);
        for &u in &members {
            self.bump_edge(u, v, false);
        }
        self.cliques[l] = members;
        self.bump_vertex(v, false);
    }

    fn link(&mut self, l: usize, z: Vertex) {
        if self.reps[z].insert(l) {
            self.rep_total += 1;
        }
        self.inverse[l].insert(z);
    }

    fn unlink(&mut self, l: usize, z: Vertex) {
        if self.reps[z].remove(&l) {
            self.rep_total -= 1;
        }
        self.inverse[l].remove(&z);
    }

    /// Grows `C_l` to contain `{x, y}`, evicting from `D_l` every vertex not
    /// adjacent to both. The frame is journaled and a copy returned.
    pub fn cover_edge_in_clique(&mut self, x: Vertex, y: Vertex, l: usize) -> Result<UndoFrame, CoverError> {
        self.apply_cover_edge(x, y, l)?;
        Ok(self.journal.last().expect("just pushed").clone())
    }

    /// As [`Self::cover_edge_in_clique`] without copying the frame.
    pub fn apply_cover_edge(&mut self, x: Vertex, y: Vertex, l: usize) -> Result<(), CoverError> {
        if l >= self.cliques.len() {
            return Err(CoverError::NoSuchClique(l));
        }
        if x == y || !self.g.has_edge(x, y) {
            return Err(CoverError::NotAnEdge { x, y });
        }
        if !self.reps[x].contains(&l) || !self.reps[y].contains(&l) {
            return Err(CoverError::NotRepresented { clique: l, x, y });
        }
        let g = self.g;
        let evicted: Vec<Vertex> = self.inverse[l]
            .iter()
            .copied()
            .filter(|&z| z != x && z != y && !(g.has_edge(x, z) && g.has_edge(y, z)))
            .collect();
        for &z in &evicted {
            self.unlink(l, z);
        }
        let had_x = self.contains(l, x);
        let had_y = self.contains(l, y);
        if !had_x {
            self.insert_member(l, x);
        }
        if !had_y {
            self.insert_member(l, y);
        }
        self.journal.push(UndoFrame { kind: FrameKind::CoverEdge, clique: l, edge: (x, y), evicted, had_x, had_y });
        Ok(())
    }

    /// Reverts `frame`, which must be the top of the journal.
    pub fn undo_cover_edge(&mut self, frame: &UndoFrame) -> Result<(), CoverError> {
        if self.journal.last() != Some(frame) {
            return Err(CoverError::JournalMismatch);
        }
        self.undo_last_cover_edge()
    }

    /// Reverts the most recent cover-edge step.
    pub fn undo_last_cover_edge(&mut self) -> Result<(), CoverError> {
        match self.journal.last() {
            Some(f) if f.kind == FrameKind::CoverEdge => {}
            _ => return Err(CoverError::JournalMismatch),
        }
        let f = self.journal.pop().expect("checked");
        let (x, y) = f.edge;
        if !f.had_y {
            self.remove_member(f.clique, y);
        }
        if !f.had_x {
            self.remove_member(f.clique, x);
        }
        for &z in &f.evicted {
            self.link(f.clique, z);
        }
        Ok(())
    }

    /// Appends the clique `{x, y}` (or `{x}` when `x == y`) with
    /// `D = N[x] ∩ N[y]`.
    pub fn add_new_clique(&mut self, x: Vertex, y: Vertex) -> Result<usize, CoverError> {
        if x >= self.g.n() || y >= self.g.n() || (x != y && !self.g.has_edge(x, y)) {
            return Err(CoverError::NotAnEdge { x, y });
        }
        let q = self.cliques.len();
        self.cliques.push(Vec::new());
        self.inverse.push(BTreeSet::new());
        self.insert_member(q, x);
        if y != x {
            self.insert_member(q, y);
        }
        for z in self.g.common_closed(x, y) {
            self.link(q, z);
        }
        self.journal.push(UndoFrame {
            kind: FrameKind::NewClique,
            clique: q,
            edge: (x, y),
            evicted: Vec::new(),
            had_x: false,
            had_y: false,
        });
        Ok(q)
    }

    /// Removes the clique added by the most recent journal entry.
    pub fn remove_last_clique(&mut self) -> Result<(), CoverError> {
        match self.journal.last() {
            Some(f) if f.kind == FrameKind::NewClique && f.clique + 1 == self.cliques.len() => {}
            _ => return Err(CoverError::JournalMismatch),
        }
        let f = self.journal.pop().expect("checked");
        let q = f.clique;
        let members = self.cliques[q].clone();
        for &v in members.iter().rev() {
            self.remove_member(q, v);
        }
        let d: Vec<Vertex> = self.inverse[q].iter().copied().collect();
        for z in d {
            self.unlink(q, z);
        }
        self.cliques.pop();
        self.inverse.pop();
        Ok(())
    }

    /// Representative and inverse sets derived from the cliques alone.
    pub fn recompute_isr(&self) -> (Vec<BTreeSet<usize>>, Vec<BTreeSet<Vertex>>) {
        let mut reps = vec![BTreeSet::new(); self.g.n()];
        let mut inverse = vec![BTreeSet::new(); self.cliques.len()];
        for (l, c) in self.cliques.iter().enumerate() {
            for x in self.g.vertices() {
                let inside = c.binary_search(&x).is_ok();
                if inside || c.iter().all(|&u| self.g.has_edge(u, x)) {
                    reps[x].insert(l);
                    inverse[l].insert(x);
                }
            }
        }
        (reps, inverse)
    }

    /// Panics with a diagnostic if the incremental sets or counters disagree
    /// with a fresh recomputation.
    pub fn check_invariants(&self) {
        let (reps, inverse) = self.recompute_isr();
        assert_eq!(reps, self.reps, "representative sets diverged");
        assert_eq!(inverse, self.inverse, "inverse sets diverged");
        assert_eq!(self.rep_total, reps.iter().map(BTreeSet::len).sum::<usize>());
        for c in &self.cliques {
            assert!(self.g.is_clique(c), "{c:?} is not a clique");
        }
        let mut vc = vec![0u32; self.g.n()];
        for c in &self.cliques {
            for &v in c {
                vc[v] += 1;
            }
        }
        assert_eq!(vc, self.vertex_cover);
        assert_eq!(self.uncovered_vertices, vc.iter().filter(|&&c| c == 0).count());
        assert_eq!(self.uncovered_edges, self.edge_cover.iter().filter(|&&c| c == 0).count());
    }
}

/// How a locally minimal construction picks among absorbing cliques.
pub type Picker<'a> = dyn FnMut(&[usize]) -> usize + 'a;

/// Builds a locally minimal cover by scanning `edge_order`: an uncovered edge
/// joins the clique chosen by `picker` among `R_x ∩ R_y` (an index into that
/// list), or starts a new clique when none can absorb it.
pub fn build_locally_minimal_state<'g>(
    g: &'g Graph,
    edge_order: &[(Vertex, Vertex)],
    picker: &mut Picker<'_>,
) -> CoverState<'g> {
    let mut s = CoverState::new(g);
    for &(x, y) in edge_order {
        let e = g.edge_id(x, y).expect("edge order lists edges of g");
        if s.is_edge_covered(e) {
            continue;
        }
        let cands = s.common_reps(x, y);
        if cands.is_empty() {
            s.add_new_clique(x, y).expect("edge");
        } else {
            let l = cands[picker(&cands).min(cands.len() - 1)];
            s.apply_cover_edge(x, y, l).expect("candidate absorbs the edge");
        }
    }
    s
}

pub fn build_locally_minimal_cover(
    g: &Graph,
    edge_order: &[(Vertex, Vertex)],
    picker: &mut Picker<'_>,
) -> Cover {
    build_locally_minimal_state(g, edge_order, picker).to_cover()
}
