use super::{HomVerdict, Homomorphism, NoHomReason};
use crate::error::{Error, Result};
use crate::sgraph::{SignedGraph, SwitchSet};

/// Node budget used by callers that have no better estimate.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// States are `2 * target + switched`; at most 32 target vertices fit a `u64`.
const MAX_TARGET: usize = 32;
const UNSWITCHED: u64 = 0x5555_5555_5555_5555;

struct Csp<'a> {
    g: &'a SignedGraph,
    /// `support[neg][a]`: states of a neighbour compatible with state `a`
    /// across an edge of the given original sign.
    support: [Vec<u64>; 2],
    domain: Vec<u64>,
    assigned: Vec<Option<usize>>,
    component: Vec<usize>,
    component_started: Vec<usize>,
    trail: Vec<(usize, u64)>,
    nodes: u64,
    budget: u64,
}

impl Csp<'_> {
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.assigned[v].is_none())
            .min_by_key(|&v| (self.domain[v].count_ones(), std::cmp::Reverse(self.g.degree(v)), v))
    }

    fn search(&mut self) -> Result<bool> {
        let Some(v) = self.pick() else { return Ok(true) };
        let c = self.component[v];
        let mut options = self.domain[v];
        if self.component_started[c] == 0 {
            options &= UNSWITCHED;
        }
        while options != 0 {
            let state = options.trailing_zeros() as usize;
            options &= options - 1;
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(self.budget));
            }
            let mark = self.trail.len();
            let mut ok = true;
            for &(w, s) in self.g.neighbors(v) {
                if self.assigned[w].is_some() {
                    continue;
                }
                let narrowed = self.domain[w] & self.support[s.is_negative() as usize][state];
                if narrowed != self.domain[w] {
                    self.trail.push((w, self.domain[w]));
                    self.domain[w] = narrowed;
                }
                if narrowed == 0 {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.assigned[v] = Some(state);
                self.component_started[c] += 1;
                if self.search()? {
                    return Ok(true);
                }
                self.component_started[c] -= 1;
                self.assigned[v] = None;
            }
            while self.trail.len() > mark {
                let (w, d) = self.trail.pop().unwrap();
                self.domain[w] = d;
            }
        }
        Ok(false)
    }
}

/// Complete backtracking search for a homomorphism of `g` to `h`.
///
/// Each vertex takes a state (switch bit, target vertex); an edge of sign `s`
/// between states `(a, x)` and `(b, y)` needs an edge `xy` in `h` of sign
/// `s * a * b`. The first vertex of each component is only tried unswitched.
/// Forward checking with smallest-domain-first ordering. Returns
/// `BudgetExceeded` rather than a verdict if more than `budget` nodes are
/// expanded.
pub fn hom_to_target(g: &SignedGraph, h: &SignedGraph, budget: u64) -> Result<HomVerdict> {
    if h.n() == 0 {
        return Err(Error::EmptyTarget);
    }
    if h.n() > MAX_TARGET {
        return Err(Error::BadParameter(format!("target has {} vertices, at most {MAX_TARGET} supported", h.n())));
    }
    let states = 2 * h.n();
    let full = if states == 64 { u64::MAX } else { (1u64 << states) - 1 };
    // original sign neg, switched sign neg ^ flip must be the target edge sign
    let row = |a: usize, neg: bool| {
        (0..states)
            .filter(|&b| h.sign_of(a / 2, b / 2).is_some_and(|s| s.is_negative() == (neg != (a % 2 != b % 2))))
            .fold(0u64, |acc, b| acc | 1 << b)
    };
    let support = [(0..states).map(|a| row(a, false)).collect(), (0..states).map(|a| row(a, true)).collect()];
    let component = g.components();
    let comps = component.iter().copied().max().map_or(0, |c| c + 1);
    let mut csp = Csp {
        g,
        support,
        domain: vec![full; g.n()],
        assigned: vec![None; g.n()],
        component,
        component_started: vec![0; comps],
        trail: Vec::new(),
        nodes: 0,
        budget,
    };
    if !csp.search()? {
        return Ok(HomVerdict::NoHom(NoHomReason::ExhaustedSearch));
    }
    let states: Vec<usize> = csp.assigned.into_iter().map(Option::unwrap).collect();
    let mask: Vec<bool> = states.iter().map(|s| s % 2 == 1).collect();
    Ok(HomVerdict::Mapped(Homomorphism {
        switch: SwitchSet::from_mask(&mask),
        map: states.iter().map(|s| s / 2).collect(),
    }))
}
