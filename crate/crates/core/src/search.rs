//! Greedy descent and variable neighbourhood search over `r`-regular graphs.
//!
//! The neighbourhood of a graph is every graph one feasible switching away.
//! Greedy descent probes the whole neighbourhood with incremental triangle
//! updates, moves to the strictly best neighbour (first in canonical order
//! on ties) and stops at a local optimum.
//!
//! VNS keeps an incumbent local optimum `best`. Each round shakes `best` by
//! `k` random switchings and descends again. A strictly better result
//! replaces `best` and resets `k` to 1; otherwise `k` grows by one, capped
//! at `k_max`. Runs end on a triangle-distinct incumbent, on the time
//! limit, or when the optional stagnation counter runs out.

use crate::bits::MAX_VERTICES;
use crate::error::SearchError;
use crate::generator::{default_mixing_steps, random_regular, GeneratorParams};
use crate::graph::{Graph, TriangleProfile};
use crate::moves::{for_each_feasible, switch_tracked, EdgePool, Switching};
use crate::objectives::{check_necessary_condition, evaluate_values, f2, ObjectiveKind, Value};
use crate::rng::SearchRng;
use crate::scalar::Scalar;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

pub const DEFAULT_K_MAX: usize = 10;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub n: usize,
    pub r: usize,
    pub objective: ObjectiveKind,
    pub k_max: usize,
    /// Wall-clock budget per run; `None` runs until another stop fires.
    pub time_limit: Option<Duration>,
    /// Worker `i` uses seed `seed + i`.
    pub seed: u64,
    pub workers: usize,
    pub stop_on_td: bool,
    /// Stop after this many consecutive non-improving shakes at `k_max`.
    pub stagnation_limit: Option<u64>,
    /// Switching walk length for generated start graphs.
    pub mixing_steps: Option<usize>,
}

impl SearchConfig {
    pub fn new(n: usize, r: usize, objective: ObjectiveKind) -> Self {
        SearchConfig {
            n,
            r,
            objective,
            k_max: DEFAULT_K_MAX,
            time_limit: None,
            seed: 0,
            workers: 1,
            stop_on_td: true,
            stagnation_limit: None,
            mixing_steps: None,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        let bad = |msg: String| Err(SearchError::InvalidConfig(msg));
        let (n, r) = (self.n, self.r);
        if n > MAX_VERTICES {
            return bad(format!(
                "n = {n} exceeds the supported maximum {MAX_VERTICES}"
            ));
        }
        if r >= n {
            return bad(format!("degree r = {r} must be below n = {n}"));
        }
        if !(n * r).is_multiple_of(2) {
            return bad(format!(
                "n * r = {} is odd; no {r}-regular graph on {n} vertices",
                n * r
            ));
        }
        if self.k_max == 0 {
            return bad("k_max must be at least 1".into());
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        if !check_necessary_condition(n, r) {
            return bad(format!(
                "C({r},2) = {} < n - 1 = {}; no {r}-regular triangle-distinct graph on {n} vertices",
                r * r.saturating_sub(1) / 2,
                n - 1
            ));
        }
        Ok(())
    }

    fn generator_params(&self, seed: u64) -> GeneratorParams {
        GeneratorParams {
            n: self.n,
            r: self.r,
            seed,
            mixing_steps: self
                .mixing_steps
                .unwrap_or_else(|| default_mixing_steps(self.n, self.r)),
        }
    }
}

/// Outcome of a search run.
#[derive(Clone, Debug, PartialEq)]
pub struct Report<S> {
    pub best_graph: Graph,
    pub best_value: Value<S>,
    pub is_td: bool,
    /// Greedy moves taken over the whole run.
    pub iterations: u64,
    pub shakes: u64,
    pub k_final: usize,
    pub elapsed: Duration,
    pub worker_id: usize,
}

/// Result of one greedy descent.
#[derive(Clone, Debug, PartialEq)]
pub struct Descent<S> {
    pub graph: Graph,
    pub value: Value<S>,
    pub steps: u64,
}

/// One record of the VNS trajectory, handed to the observer of
/// [`vns_traced`].
#[derive(Debug)]
pub enum VnsEvent<'a, S> {
    /// The first descent from the start graph.
    Initial {
        start: &'a Graph,
        descended: &'a Graph,
        value: &'a S,
        steps: u64,
    },
    /// One shake followed by a descent.
    Shake {
        index: u64,
        k: usize,
        shaken: &'a Graph,
        descended: &'a Graph,
        value: &'a S,
        incumbent: &'a S,
        improved: bool,
        k_next: usize,
    },
}

/// Cooperative stop conditions polled between greedy moves.
#[derive(Clone, Copy, Debug, Default)]
pub struct StopControl<'a> {
    pub flag: Option<&'a AtomicBool>,
    pub deadline: Option<Instant>,
}

impl StopControl<'_> {
    pub fn should_stop(&self) -> bool {
        self.flag.is_some_and(|f| f.load(Ordering::Relaxed))
            || self.deadline.is_some_and(|d| Instant::now() >= d)
    }
}

/// Reusable buffers for neighbourhood evaluation.
#[derive(Default)]
struct Workspace {
    moves: Vec<Switching>,
    scratch: Vec<u32>,
}

fn descend_in_place<S: Scalar>(
    g: &mut Graph,
    profile: &mut TriangleProfile,
    objective: ObjectiveKind,
    stop_on_td: bool,
    stop: &StopControl,
    ws: &mut Workspace,
) -> (S, u64) {
    let mut current: S = evaluate_values(objective, profile.values(), &mut ws.scratch);
    let mut steps = 0;
    loop {
        if (stop_on_td && f2(profile) == 0) || stop.should_stop() {
            break;
        }
        ws.moves.clear();
        for_each_feasible(g, |sw| ws.moves.push(sw));
        let mut best: Option<(Switching, S)> = None;
        for &sw in &ws.moves {
            switch_tracked(g, &mut profile.0, sw);
            let value: S = evaluate_values(objective, profile.values(), &mut ws.scratch);
            switch_tracked(g, &mut profile.0, sw.inverse());
            let reference = best.as_ref().map_or(&current, |(_, v)| v);
            if objective.improves(&value, reference) {
                best = Some((sw, value));
            }
        }
        match best {
            Some((sw, value)) => {
                switch_tracked(g, &mut profile.0, sw);
                current = value;
                steps += 1;
            }
            None => break,
        }
    }
    (current, steps)
}

/// Best-improvement descent from `g` to a local optimum, or to the first
/// triangle-distinct graph when `stop_on_td` is set.
pub fn greedy_descent<S: Scalar>(
    g: &Graph,
    objective: ObjectiveKind,
    stop_on_td: bool,
) -> Descent<S> {
    let mut graph = g.clone();
    let mut profile = graph.triangle_profile();
    let (value, steps) = descend_in_place(
        &mut graph,
        &mut profile,
        objective,
        stop_on_td,
        &StopControl::default(),
        &mut Workspace::default(),
    );
    Descent {
        graph,
        value: Value {
            value,
            direction: objective.direction(),
        },
        steps,
    }
}

fn shake_in_place(g: &mut Graph, k: usize, rng: &mut SearchRng) -> Result<(), SearchError> {
    if k == 0 {
        return Err(SearchError::InvalidConfig(
            "shake strength must be at least 1".into(),
        ));
    }
    let mut pool = EdgePool::new(g);
    for _ in 0..k {
        pool.random_switch(g, rng)?;
    }
    Ok(())
}

/// Applies `k >= 1` random switchings in sequence.
pub fn shake(g: &Graph, k: usize, rng: &mut SearchRng) -> Result<Graph, SearchError> {
    let mut h = g.clone();
    shake_in_place(&mut h, k, rng)?;
    Ok(h)
}

fn check_start(config: &SearchConfig, start: &Graph) -> Result<(), SearchError> {
    if start.order() != config.n || start.regular_degree() != Some(config.r) {
        return Err(SearchError::InvalidConfig(format!(
            "start graph must be {}-regular on {} vertices",
            config.r, config.n
        )));
    }
    Ok(())
}

fn run_worker<S: Scalar>(
    config: &SearchConfig,
    start: Option<&Graph>,
    worker_id: usize,
    flag: Option<&AtomicBool>,
    observer: &mut dyn FnMut(&VnsEvent<'_, S>),
) -> Result<Report<S>, SearchError> {
    let began = Instant::now();
    let stop = StopControl {
        flag,
        deadline: config.time_limit.map(|d| began + d),
    };
    let seed = config.seed.wrapping_add(worker_id as u64);
    let start = match start {
        Some(g) => g.clone(),
        None => random_regular(&config.generator_params(seed))?,
    };
    let mut rng = SearchRng::seed_from(seed);
    let mut ws = Workspace::default();
    let objective = config.objective;

    let mut best = start.clone();
    let mut best_profile = best.triangle_profile();
    let (mut best_value, steps): (S, u64) = descend_in_place(
        &mut best,
        &mut best_profile,
        objective,
        config.stop_on_td,
        &stop,
        &mut ws,
    );
    let mut iterations = steps;
    observer(&VnsEvent::Initial {
        start: &start,
        descended: &best,
        value: &best_value,
        steps,
    });

    let mut k = 1;
    let mut shakes = 0u64;
    let mut stagnant = 0u64;
    loop {
        if config.stop_on_td && f2(&best_profile) == 0 {
            break;
        }
        if stop.should_stop() || config.stagnation_limit.is_some_and(|l| stagnant >= l) {
            break;
        }
        let mut h = best.clone();
        shake_in_place(&mut h, k, &mut rng)?;
        let shaken = h.clone();
        let mut profile = h.triangle_profile();
        let (value, steps): (S, u64) = descend_in_place(
            &mut h,
            &mut profile,
            objective,
            config.stop_on_td,
            &stop,
            &mut ws,
        );
        iterations += steps;
        shakes += 1;
        debug_assert_eq!(h.regular_degree(), Some(config.r));

        let improved = objective.improves(&value, &best_value);
        let k_next = if improved {
            1
        } else {
            (k + 1).min(config.k_max)
        };
        observer(&VnsEvent::Shake {
            index: shakes,
            k,
            shaken: &shaken,
            descended: &h,
            value: &value,
            incumbent: &best_value,
            improved,
            k_next,
        });
        if improved {
            best = h;
            best_profile = profile;
            best_value = value;
            stagnant = 0;
        } else if k == config.k_max {
            stagnant += 1;
        }
        k = k_next;
    }

    Ok(Report {
        is_td: f2(&best_profile) == 0,
        best_graph: best,
        best_value: Value {
            value: best_value,
            direction: objective.direction(),
        },
        iterations,
        shakes,
        k_final: k,
        elapsed: began.elapsed(),
        worker_id,
    })
}

/// Single-worker VNS from `start`, or from a generated random regular graph.
pub fn vns<S: Scalar>(
    config: &SearchConfig,
    start: Option<&Graph>,
) -> Result<Report<S>, SearchError> {
    vns_traced(config, start, |_| {})
}

/// [`vns`] with every trajectory event passed to `observer`.
pub fn vns_traced<S: Scalar>(
    config: &SearchConfig,
    start: Option<&Graph>,
    mut observer: impl FnMut(&VnsEvent<'_, S>),
) -> Result<Report<S>, SearchError> {
    config.validate()?;
    if let Some(g) = start {
        check_start(config, g)?;
    }
    run_worker(config, start, 0, None, &mut observer)
}

/// Runs `config.workers` independent VNS instances on separate threads.
///
/// The first worker to reach a triangle-distinct graph raises a shared stop
/// flag and wins. If none does, the best value at the stop wins, with ties
/// going to the lowest worker id.
pub fn parallel_search<S: Scalar>(config: &SearchConfig) -> Result<Report<S>, SearchError> {
    parallel_search_from(config, None)
}

/// [`parallel_search`] with every worker starting from `start`.
pub fn parallel_search_from<S: Scalar>(
    config: &SearchConfig,
    start: Option<&Graph>,
) -> Result<Report<S>, SearchError> {
    config.validate()?;
    if let Some(g) = start {
        check_start(config, g)?;
    }
    let stop = AtomicBool::new(false);
    let winner = AtomicUsize::new(usize::MAX);
    let errors = Mutex::new(Vec::new());

    let reports: Vec<Option<Report<S>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..config.workers)
            .map(|id| {
                let (stop, winner, errors) = (&stop, &winner, &errors);
                scope.spawn(move || {
                    match run_worker::<S>(config, start, id, Some(stop), &mut |_| {}) {
                        Ok(report) => {
                            if report.is_td
                                && winner
                                    .compare_exchange(
                                        usize::MAX,
                                        id,
                                        Ordering::SeqCst,
                                        Ordering::SeqCst,
                                    )
                                    .is_ok()
                            {
                                stop.store(true, Ordering::SeqCst);
                            }
                            Some(report)
                        }
                        Err(e) => {
                            errors.lock().expect("error slot").push(e);
                            stop.store(true, Ordering::SeqCst);
                            None
                        }
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("search worker panicked"))
            .collect()
    });

    if let Some(e) = errors.into_inner().expect("error slot").into_iter().next() {
        return Err(e);
    }
    let mut reports: Vec<Report<S>> = reports.into_iter().flatten().collect();
    let won = winner.load(Ordering::SeqCst);
    if won != usize::MAX {
        let idx = reports
            .iter()
            .position(|r| r.worker_id == won)
            .expect("winner report");
        return Ok(reports.swap_remove(idx));
    }
    let objective = config.objective;
    let mut best_idx = 0;
    for (i, rep) in reports.iter().enumerate().skip(1) {
        if objective.improves(&rep.best_value.value, &reports[best_idx].best_value.value) {
            best_idx = i;
        }
    }
    Ok(reports.swap_remove(best_idx))
}
