use super::{c_minus_4, sp_hom_c4, HomVerdict, Homomorphism, NoHomReason};
use crate::sgraph::{girth_vector, switching::switch_by_mask, SignedGraph, SwitchSet};

/// A forbidden `(-, +, -)` path `a u v b`, with the original signs of its
/// three edges (`true` = negative).
#[derive(Clone, Copy)]
struct Pattern {
    vertices: [usize; 4],
    negative: [bool; 3],
}

impl Pattern {
    /// Whether the path reads `-, +, -` under switch bits `s`.
    fn violated(&self, s: [bool; 4]) -> bool {
        let [a, u, v, b] = s;
        (self.negative[0] ^ a ^ u) && !(self.negative[1] ^ u ^ v) && (self.negative[2] ^ v ^ b)
    }
}

const UNSET: i8 = -1;

struct SwitchSearch {
    patterns: Vec<Pattern>,
    by_vertex: Vec<Vec<usize>>,
    order: Vec<usize>,
    opens_component: Vec<bool>,
    value: Vec<i8>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl SwitchSearch {
    fn new(g: &SignedGraph) -> Self {
        let n = g.n();
        let mut patterns = Vec::new();
        for e in g.edges() {
            for (u, v) in [(e.u, e.v), (e.v, e.u)] {
                for &(a, sa) in g.neighbors(u) {
                    if a == v {
                        continue;
                    }
                    for &(b, sb) in g.neighbors(v) {
                        if b == u {
                            continue;
                        }
                        patterns.push(Pattern {
                            vertices: [a, u, v, b],
                            negative: [sa.is_negative(), e.sign.is_negative(), sb.is_negative()],
                        });
                    }
                }
            }
        }
        let mut by_vertex = vec![Vec::new(); n];
        for (i, p) in patterns.iter().enumerate() {
            for &x in &p.vertices {
                by_vertex[x].push(i);
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let comp = g.components();
        let mut seen = vec![false; n];
        let mut opens_component = vec![false; n];
        for &v in &order {
            if !seen[comp[v]] {
                seen[comp[v]] = true;
                opens_component[v] = true;
            }
        }
        SwitchSearch {
            patterns,
            by_vertex,
            order,
            opens_component,
            value: vec![UNSET; n],
            trail: Vec::new(),
            queue: Vec::new(),
        }
    }

    fn set(&mut self, v: usize, bit: bool) {
        self.value[v] = bit as i8;
        self.trail.push(v);
        self.queue.push(v);
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let v = self.trail.pop().unwrap();
            self.value[v] = UNSET;
        }
    }

    /// Unit propagation: a pattern with one open vertex forces it whenever one
    /// of its two values completes the forbidden path.
    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            for k in 0..self.by_vertex[x].len() {
                let p = self.patterns[self.by_vertex[x][k]];
                let mut bits = [false; 4];
                let mut open = None;
                let mut open_count = 0;
                for (slot, &y) in p.vertices.iter().enumerate() {
                    match self.value[y] {
                        UNSET => {
                            open = Some(slot);
                            open_count += 1;
                        }
                        b => bits[slot] = b == 1,
                    }
                }
                match open_count {
                    0 if p.violated(bits) => {
                        self.queue.clear();
                        return false;
                    }
                    1 => {
                        let slot = open.unwrap();
                        bits[slot] = false;
                        let bad0 = p.violated(bits);
                        bits[slot] = true;
                        let bad1 = p.violated(bits);
                        let y = p.vertices[slot];
                        match (bad0, bad1) {
                            (true, true) => {
                                self.queue.clear();
                                return false;
                            }
                            (true, false) => self.set(y, true),
                            (false, true) => self.set(y, false),
                            (false, false) => {}
                        }
                    }
                    _ => {}
                }
            }
        }
        true
    }

    fn search(&mut self, mut idx: usize) -> bool {
        while idx < self.order.len() && self.value[self.order[idx]] != UNSET {
            idx += 1;
        }
        if idx == self.order.len() {
            return true;
        }
        let v = self.order[idx];
        // (s, f) and (-s, f) are the same mapping, per component
        let choices: &[bool] = if self.opens_component[v] { &[false] } else { &[false, true] };
        for &bit in choices {
            let mark = self.trail.len();
            self.set(v, bit);
            if self.propagate() && self.search(idx + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }
}

/// Decides whether `g` maps to the negative four-cycle.
///
/// Graphs failing the girth conditions (any non-bipartite graph) are
/// rejected up front. Otherwise the search runs over switch bits only, in
/// descending-degree order with unit propagation on forbidden `(-, +, -)`
/// paths; a complete assignment with no forbidden path is turned into a map
/// by [`sp_hom_c4`]. The search is exhaustive.
pub fn hom_c4(g: &SignedGraph) -> HomVerdict {
    let target = girth_vector(&c_minus_4());
    if let Some(class) = girth_vector(g).first_violation(&target) {
        return HomVerdict::NoHom(NoHomReason::GirthViolation(class));
    }
    let mut search = SwitchSearch::new(g);
    if !search.search(0) {
        return HomVerdict::NoHom(NoHomReason::ExhaustedSearch);
    }
    let mask: Vec<bool> = search.value.iter().map(|&b| b == 1).collect();
    let switched = switch_by_mask(g, &mask);
    match sp_hom_c4(&switched) {
        Ok(HomVerdict::Mapped(h)) => {
            HomVerdict::Mapped(Homomorphism { switch: SwitchSet::from_mask(&mask).compose(&h.switch), map: h.map })
        }
        other => panic!("switch search left a forbidden path: {other:?}"),
    }
}
