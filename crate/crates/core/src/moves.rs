//! Degree-preserving edge switchings.
//!
//! A switching `(u, s, v, t)` deletes `us` and `vt` and inserts `ut` and
//! `vs`. It is feasible when the four vertices are distinct, `us` and `vt`
//! are edges, and `ut` and `vs` are not. Every vertex keeps its degree.
//!
//! The tuples `(u,s,v,t)`, `(v,t,u,s)`, `(s,u,t,v)` and `(t,v,s,u)` all
//! describe the same move. Each vertex of the move leads exactly one of
//! them, so the canonical tuple is the one whose first entry is the smallest
//! label.

use crate::bits::Row;
use crate::error::MoveError;
use crate::graph::{Graph, TriangleProfile};
use crate::rng::SearchRng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Switching {
    pub u: usize,
    pub s: usize,
    pub v: usize,
    pub t: usize,
}

impl Switching {
    pub const fn new(u: usize, s: usize, v: usize, t: usize) -> Self {
        Switching { u, s, v, t }
    }

    /// The switching that undoes this one.
    pub const fn inverse(self) -> Self {
        Switching::new(self.u, self.t, self.v, self.s)
    }

    /// The four tuples describing this move.
    pub const fn equivalents(self) -> [Switching; 4] {
        let Switching { u, s, v, t } = self;
        [
            Switching::new(u, s, v, t),
            Switching::new(v, t, u, s),
            Switching::new(s, u, t, v),
            Switching::new(t, v, s, u),
        ]
    }

    pub fn canonical(self) -> Self {
        self.equivalents()
            .into_iter()
            .min_by_key(|sw| sw.u)
            .expect("four equivalents")
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        let Switching { u, s, v, t } = *self;
        let n = g.order();
        if u >= n || s >= n || v >= n || t >= n {
            return false;
        }
        let distinct = u != s && u != v && u != t && s != v && s != t && v != t;
        distinct && g.has_edge(u, s) && g.has_edge(v, t) && !g.has_edge(u, t) && !g.has_edge(v, s)
    }
}

pub fn is_feasible(g: &Graph, sw: Switching) -> bool {
    sw.is_feasible(g)
}

/// Applies a switching to a fresh copy of `g`.
pub fn apply(g: &Graph, sw: Switching) -> Result<Graph, MoveError> {
    let mut out = g.clone();
    switch_in_place(&mut out, sw)?;
    Ok(out)
}

pub fn switch_in_place(g: &mut Graph, sw: Switching) -> Result<(), MoveError> {
    if !sw.is_feasible(g) {
        return Err(MoveError::InfeasibleSwitching(sw));
    }
    g.remove_edge(sw.u, sw.s);
    g.remove_edge(sw.v, sw.t);
    g.add_edge(sw.u, sw.t);
    g.add_edge(sw.v, sw.s);
    Ok(())
}

/// Applies a switching and returns the new graph with its triangle profile,
/// updated incrementally from `profile` (which must belong to `g`).
pub fn apply_with_profile(
    g: &Graph,
    profile: &TriangleProfile,
    sw: Switching,
) -> Result<(Graph, TriangleProfile), MoveError> {
    let mut g = g.clone();
    let mut profile = profile.clone();
    switch_with_profile(&mut g, &mut profile, sw)?;
    Ok((g, profile))
}

pub fn switch_with_profile(
    g: &mut Graph,
    profile: &mut TriangleProfile,
    sw: Switching,
) -> Result<(), MoveError> {
    if !sw.is_feasible(g) {
        return Err(MoveError::InfeasibleSwitching(sw));
    }
    switch_tracked(g, &mut profile.0, sw);
    Ok(())
}

/// Unchecked switch with triangle bookkeeping. Each of the four edge
/// operations adjusts `t` against the adjacency as it stands at that step.
#[inline]
pub(crate) fn switch_tracked(g: &mut Graph, t: &mut [u32], sw: Switching) {
    debug_assert!(sw.is_feasible(g));
    delete_tracked(g, t, sw.u, sw.s);
    delete_tracked(g, t, sw.v, sw.t);
    add_tracked(g, t, sw.u, sw.t);
    add_tracked(g, t, sw.v, sw.s);
}

#[inline]
fn delete_tracked(g: &mut Graph, t: &mut [u32], x: usize, y: usize) {
    let common = g.neighbours(x).and(g.neighbours(y));
    let c = common.len() as u32;
    t[x] -= c;
    t[y] -= c;
    for w in common.iter() {
        t[w] -= 1;
    }
    g.remove_edge(x, y);
}

#[inline]
fn add_tracked(g: &mut Graph, t: &mut [u32], x: usize, y: usize) {
    let common = g.neighbours(x).and(g.neighbours(y));
    let c = common.len() as u32;
    t[x] += c;
    t[y] += c;
    for w in common.iter() {
        t[w] += 1;
    }
    g.add_edge(x, y);
}

/// Calls `f` on every feasible switching in canonical form, in
/// lexicographic order of `(u, s, v, t)`.
pub fn for_each_feasible(g: &Graph, mut f: impl FnMut(Switching)) {
    let n = g.order();
    let all = Row::full(n);
    for u in 0..n {
        let nu = *g.neighbours(u);
        for s in nu.above(u).iter() {
            // v must avoid s and N(s); t must avoid N(u).
            let mut vs = all.and_not(g.neighbours(s)).above(u);
            vs.remove(s);
            for v in vs.iter() {
                let ts = g.neighbours(v).and_not(&nu).above(u);
                for t in ts.iter() {
                    f(Switching::new(u, s, v, t));
                }
            }
        }
    }
}

pub fn enumerate_feasible(g: &Graph) -> Vec<Switching> {
    let mut out = Vec::new();
    for_each_feasible(g, |sw| out.push(sw));
    out
}

pub fn count_feasible(g: &Graph) -> usize {
    let mut k = 0;
    for_each_feasible(g, |_| k += 1);
    k
}

/// Edge list kept in step with a graph so that repeated random switchings
/// do not rebuild it.
#[derive(Clone, Debug)]
pub struct EdgePool {
    edges: Vec<(usize, usize)>,
}

/// Draws allowed per edge before giving up.
pub const RETRIES_PER_EDGE: usize = 50;

impl EdgePool {
    pub fn new(g: &Graph) -> Self {
        EdgePool {
            edges: g.edges().collect(),
        }
    }

    /// Draws two distinct edges uniformly and one of the two ways to
    /// reconnect them; infeasible draws are rejected. Returns the
    /// switching (as drawn, not canonicalised) and the two edge slots.
    fn draw(&self, g: &Graph, rng: &mut SearchRng) -> Result<(Switching, usize, usize), MoveError> {
        let m = self.edges.len();
        if m < 2 {
            return Err(MoveError::NoFeasibleSwitching { attempts: 0 });
        }
        let budget = RETRIES_PER_EDGE * m;
        for _ in 0..budget {
            let i = rng.below(m);
            let mut j = rng.below(m - 1);
            if j >= i {
                j += 1;
            }
            let (a, b) = self.edges[i];
            let (c, d) = self.edges[j];
            let sw = if rng.coin() {
                Switching::new(a, b, d, c)
            } else {
                Switching::new(a, b, c, d)
            };
            if sw.is_feasible(g) {
                return Ok((sw, i, j));
            }
        }
        Err(MoveError::NoFeasibleSwitching { attempts: budget })
    }

    pub fn sample(&self, g: &Graph, rng: &mut SearchRng) -> Result<Switching, MoveError> {
        self.draw(g, rng).map(|(sw, _, _)| sw.canonical())
    }

    /// Draws a random feasible switching and applies it to `g`, keeping the
    /// pool in step. `g` must be the graph the pool was built from.
    pub fn random_switch(
        &mut self,
        g: &mut Graph,
        rng: &mut SearchRng,
    ) -> Result<Switching, MoveError> {
        let (sw, i, j) = self.draw(g, rng)?;
        switch_in_place(g, sw)?;
        self.edges[i] = (sw.u.min(sw.t), sw.u.max(sw.t));
        self.edges[j] = (sw.v.min(sw.s), sw.v.max(sw.s));
        Ok(sw.canonical())
    }
}

/// A random feasible switching of `g`, in canonical form.
pub fn random_switching(g: &Graph, rng: &mut SearchRng) -> Result<Switching, MoveError> {
    EdgePool::new(g).sample(g, rng)
}
