//! Canonical labelling of small graphs by individualisation and refinement.
//!
//! Every leaf of the search tree is visited (no automorphism pruning); the
//! leaves realising the best relabelled adjacency give the automorphism
//! group as a by-product. Adequate up to a dozen or so vertices.

use crate::sgraph::{SignedGraph, Vertex};

/// Adjacency rows as bitmasks; at most 32 vertices.
pub type Rows = Vec<u32>;

pub fn rows_of(g: &SignedGraph) -> Rows {
    assert!(g.n() <= 32, "canonical labelling supports at most 32 vertices");
    let mut rows = vec![0u32; g.n()];
    for e in g.edges() {
        rows[e.u] |= 1 << e.v;
        rows[e.v] |= 1 << e.u;
    }
    rows
}

#[derive(Clone, Debug)]
pub struct Canonical {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<Vertex>,
    /// Adjacency rows after relabelling; equal for isomorphic inputs.
    pub form: Rows,
    /// Every automorphism, as `v -> image`; the identity included.
    pub automorphisms: Vec<Vec<Vertex>>,
}

fn refine(rows: &[u32], cells: &mut Vec<Vec<Vertex>>) {
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter: u32 = cells[s].iter().fold(0, |m, &v| m | 1 << v);
            let mut next = Vec::with_capacity(cells.len());
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, Vertex)> =
                    cell.iter().map(|&v| ((rows[v] & splitter).count_ones(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
            }
            if next.len() != cells.len() {
                changed = true;
            }
            *cells = next;
            s += 1;
        }
        if !changed {
            return;
        }
    }
}

fn relabelled(rows: &[u32], order: &[Vertex]) -> Rows {
    let mut pos = vec![0; rows.len()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| {
            let mut r = 0u32;
            let mut bits = rows[v];
            while bits != 0 {
                let w = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                r |= 1 << pos[w];
            }
            r
        })
        .collect()
}

struct Search<'a> {
    rows: &'a [u32],
    best: Option<(Rows, Vec<Vertex>)>,
    ties: Vec<Vec<Vertex>>,
}

impl Search<'_> {
    fn descend(&mut self, mut cells: Vec<Vec<Vertex>>) {
        refine(self.rows, &mut cells);
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            let order: Vec<Vertex> = cells.iter().map(|c| c[0]).collect();
            let form = relabelled(self.rows, &order);
            match &self.best {
                Some((b, _)) if form < *b => {}
                Some((b, _)) if form == *b => self.ties.push(order),
                _ => {
                    self.best = Some((form, order.clone()));
                    self.ties = vec![order];
                }
            }
            return;
        };
        for i in 0..cells[target].len() {
            let mut child = cells.clone();
            let cell = child.remove(target);
            let v = cell[i];
            let rest: Vec<Vertex> = cell.into_iter().filter(|&w| w != v).collect();
            child.insert(target, rest);
            child.insert(target, vec![v]);
            self.descend(child);
        }
    }
}

/// Canonical form of the graph with adjacency `rows`. `colors`, if given,
/// fixes an initial vertex partition (vertices of lower colour first).
pub fn canonical_form(rows: &[u32], colors: Option<&[u32]>) -> Canonical {
    let n = rows.len();
    let mut cells: Vec<Vec<Vertex>> = match colors {
        None => vec![(0..n).collect()],
        Some(c) => {
            let mut keys: Vec<u32> = c.to_vec();
            keys.sort_unstable();
            keys.dedup();
            keys.iter().map(|&k| (0..n).filter(|&v| c[v] == k).collect()).collect()
        }
    };
    cells.retain(|c: &Vec<Vertex>| !c.is_empty());
    let mut s = Search { rows, best: None, ties: Vec::new() };
    s.descend(cells);
    let Some((form, order)) = s.best else {
        return Canonical { label: Vec::new(), form: Vec::new(), automorphisms: vec![Vec::new()] };
    };
    let mut label = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        label[v] = i;
    }
    let mut automorphisms: Vec<Vec<Vertex>> = s
        .ties
        .iter()
        .map(|other| {
            // v -> position in best order -> vertex at that position in `other`
            (0..n).map(|v| other[label[v]]).collect()
        })
        .collect();
    automorphisms.sort_unstable();
    automorphisms.dedup();
    Canonical { label, form, automorphisms }
}
