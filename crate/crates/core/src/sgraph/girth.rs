use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use super::SignedGraph;

/// Length of a shortest closed walk in some parity class, or infinity.
/// `Finite(_) < Infinite`, so componentwise comparison reads naturally.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkLength {
    Finite(usize),
    Infinite,
}

impl WalkLength {
    pub fn finite(self) -> Option<usize> {
        match self {
            WalkLength::Finite(l) => Some(l),
            WalkLength::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == WalkLength::Infinite
    }
}

impl fmt::Display for WalkLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WalkLength::Finite(l) => write!(f, "{l}"),
            WalkLength::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for WalkLength {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            WalkLength::Finite(l) => s.serialize_u64(*l as u64),
            WalkLength::Infinite => s.serialize_str("inf"),
        }
    }
}

/// `ij`: sign parity `i` (number of negative edges mod 2), length parity `j`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParityClass {
    G00,
    G01,
    G10,
    G11,
}

impl ParityClass {
    pub const ALL: [ParityClass; 4] = [ParityClass::G00, ParityClass::G01, ParityClass::G10, ParityClass::G11];

    pub fn sign_parity(self) -> usize {
        self as usize >> 1
    }

    pub fn length_parity(self) -> usize {
        self as usize & 1
    }

    pub fn from_parities(sign: usize, length: usize) -> ParityClass {
        Self::ALL[(sign & 1) << 1 | (length & 1)]
    }

    pub fn label(self) -> &'static str {
        ["00", "01", "10", "11"][self as usize]
    }
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for ParityClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GirthVector {
    pub g00: WalkLength,
    pub g01: WalkLength,
    pub g10: WalkLength,
    pub g11: WalkLength,
}

impl GirthVector {
    pub fn get(&self, class: ParityClass) -> WalkLength {
        match class {
            ParityClass::G00 => self.g00,
            ParityClass::G01 => self.g01,
            ParityClass::G10 => self.g10,
            ParityClass::G11 => self.g11,
        }
    }

    fn set(&mut self, class: ParityClass, value: WalkLength) {
        match class {
            ParityClass::G00 => self.g00 = value,
            ParityClass::G01 => self.g01 = value,
            ParityClass::G10 => self.g10 = value,
            ParityClass::G11 => self.g11 = value,
        }
    }

    pub fn from_array(values: [WalkLength; 4]) -> GirthVector {
        GirthVector { g00: values[0], g01: values[1], g10: values[2], g11: values[3] }
    }

    /// First class (in `00, 01, 10, 11` order) where `self < other`.
    pub fn first_violation(&self, other: &GirthVector) -> Option<ParityClass> {
        ParityClass::ALL.into_iter().find(|&c| self.get(c) < other.get(c))
    }

    pub fn dominates(&self, other: &GirthVector) -> bool {
        self.first_violation(other).is_none()
    }
}

impl fmt::Display for GirthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g00={} g01={} g10={} g11={}", self.g00, self.g01, self.g10, self.g11)
    }
}

/// Shortest closed walk lengths per parity class, by breadth-first search in
/// the 4-fold cover whose states are (vertex, sign parity, length parity).
/// A shortest walk of class `ij` through `s` is a shortest path from
/// `(s,0,0)` to `(s,i,j)`; the empty walk is excluded, so `g00 = 2` as soon
/// as there is an edge.
pub fn girth_vector(g: &SignedGraph) -> GirthVector {
    let n = g.n();
    let mut best = [WalkLength::Infinite; 4];
    if g.edge_count() > 0 {
        best[0] = WalkLength::Finite(2);
    }
    let mut dist = vec![usize::MAX; 4 * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if g.degree(s) == 0 {
            continue;
        }
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[4 * s] = 0;
        queue.clear();
        queue.push_back(4 * s);
        while let Some(state) = queue.pop_front() {
            let (x, parity) = (state / 4, state % 4);
            let d = dist[state];
            for &(y, sign) in g.neighbors(x) {
                let next = 4 * y + (parity ^ 1 ^ if sign.is_negative() { 2 } else { 0 });
                if dist[next] == usize::MAX {
                    dist[next] = d + 1;
                    queue.push_back(next);
                }
            }
        }
        for class in 1..4 {
            let d = dist[4 * s + class];
            if d != usize::MAX && WalkLength::Finite(d) < best[class] {
                best[class] = WalkLength::Finite(d);
            }
        }
    }
    let mut out = GirthVector::from_array([WalkLength::Infinite; 4]);
    for class in ParityClass::ALL {
        out.set(class, best[class as usize]);
    }
    out
}

/// Length of a shortest negative cycle: `min(g10, g11)`.
pub fn negative_girth(g: &SignedGraph) -> WalkLength {
    let v = girth_vector(g);
    v.g10.min(v.g11)
}
