//! Falsifiable scans of the structural properties of `PD(w)`.
//!
//! Each check produces a [`CheckEntry`] with status pass, fail or skipped. A
//! failing entry carries a JSON witness naming the offending elements. A check
//! that runs past its time budget stops and reports skipped.

use std::collections::HashSet;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::{fork_kind, ChutePoset, ForkKind, PolygonKind};
use crate::tableaux::{Cell, LehmerTableau};

/// Default per-check budget.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(600);

/// Largest degree for which the triforce check enumerates `PD(w▲)`.
pub const TRIFORCE_MAX_N: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub name: String,
    pub status: Status,
    pub witness: Option<Value>,
    pub ms: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub w: Permutation,
    pub checks: Vec<CheckEntry>,
}

impl VerificationReport {
    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn status_of(&self, check: Check) -> Option<Status> {
        self.checks
            .iter()
            .find(|c| c.name == check.name())
            .map(|c| c.status)
    }

    /// Zeroes the elapsed times so the report is byte-stable.
    pub fn without_timing(mut self) -> Self {
        for c in &mut self.checks {
            c.ms = 0;
        }
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    Isomorphism,
    Lattice,
    Semidistributive,
    Polygonal,
    Transpose,
    Triforce,
}

impl Check {
    pub const ALL: [Check; 6] = [
        Check::Isomorphism,
        Check::Lattice,
        Check::Semidistributive,
        Check::Polygonal,
        Check::Transpose,
        Check::Triforce,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Isomorphism => "isomorphism",
            Check::Lattice => "lattice",
            Check::Semidistributive => "sd",
            Check::Polygonal => "polygonal",
            Check::Transpose => "transpose",
            Check::Triforce => "triforce",
        }
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Check> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s.trim())
            .ok_or_else(|| Error::Index(format!("unknown check {s:?}")))
    }
}

/// Per-check time allowance.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { limit: None }
    }

    pub fn new(limit: Duration) -> Self {
        Budget { limit: Some(limit) }
    }

    /// `CHUTELAT_BUDGET_MS` if set, else [`DEFAULT_BUDGET`].
    pub fn from_env() -> Self {
        std::env::var("CHUTELAT_BUDGET_MS")
            .ok()
            .and_then(|v| v.trim().parse::<u64>().ok())
            .map(|ms| Budget::new(Duration::from_millis(ms)))
            .unwrap_or(Budget::new(DEFAULT_BUDGET))
    }

    fn start(&self) -> Clock {
        Clock {
            started: Instant::now(),
            limit: self.limit,
        }
    }
}

struct Clock {
    started: Instant,
    limit: Option<Duration>,
}

impl Clock {
    fn tick(&self) -> Outcome {
        match self.limit {
            Some(limit) if self.started.elapsed() > limit => Err(Stop::Skipped(json!({
                "reason": "budget exceeded",
                "budget_ms": limit.as_millis() as u64,
            }))),
            _ => Ok(()),
        }
    }

    fn ms(&self) -> u64 {
        self.started.elapsed().as_millis() as u64
    }
}

enum Stop {
    Fail(Value),
    Skipped(Value),
}

type Outcome = std::result::Result<(), Stop>;

fn fail<T>(witness: Value) -> std::result::Result<T, Stop> {
    Err(Stop::Fail(witness))
}

fn entry(check: Check, clock: &Clock, outcome: Outcome) -> CheckEntry {
    let (status, witness) = match outcome {
        Ok(()) => (Status::Pass, None),
        Err(Stop::Fail(w)) => (Status::Fail, Some(w)),
        Err(Stop::Skipped(w)) => (Status::Skipped, Some(w)),
    };
    CheckEntry {
        name: check.name().to_string(),
        status,
        witness,
        ms: clock.ms(),
    }
}

fn dream(poset: &ChutePoset, k: usize) -> Value {
    serde_json::to_value(poset.element(k)).expect("dreams serialize")
}

fn lehmer_json(l: &LehmerTableau) -> Value {
    serde_json::to_value(l.to_doc()).expect("tableaux serialize")
}

fn error_witness(e: Error) -> Stop {
    Stop::Fail(json!({ "error": e.to_string() }))
}

/// `P ≤ P'` exactly when `Φ(P) ≤ Φ(P')`, and `Φ` is injective.
pub fn check_isomorphism(poset: &ChutePoset, budget: &Budget) -> CheckEntry {
    let clock = budget.start();
    let outcome = (|| {
        let mut seen = HashSet::with_capacity(poset.len());
        for k in 0..poset.len() {
            if !seen.insert(poset.lehmer(k).entries.clone()) {
                return fail(json!({ "kind": "not_injective", "p": dream(poset, k) }));
            }
        }
        for a in 0..poset.len() {
            clock.tick()?;
            for b in 0..poset.len() {
                let (chute, lehmer) = (poset.leq(a, b), poset.leq_via_lehmer(a, b));
                if chute != lehmer {
                    return fail(json!({
                        "kind": "order_mismatch",
                        "p": dream(poset, a),
                        "q": dream(poset, b),
                        "chute_leq": chute,
                        "lehmer_leq": lehmer,
                    }));
                }
            }
        }
        Ok(())
    })();
    entry(Check::Isomorphism, &clock, outcome)
}

/// Meets and joins of all pairs, then the route through a minimum, a maximum
/// and joins of upper-cover pairs.
pub fn check_lattice(poset: &ChutePoset, budget: &Budget) -> CheckEntry {
    let clock = budget.start();
    let outcome = (|| {
        for a in 0..poset.len() {
            clock.tick()?;
            for b in a..poset.len() {
                for (op, r) in [("meet", poset.meet(a, b)), ("join", poset.join(a, b))] {
                    if r.is_err() {
                        return fail(json!({
                            "kind": format!("no_{op}"),
                            "p": dream(poset, a),
                            "q": dream(poset, b),
                        }));
                    }
                }
            }
        }
        poset.min_element().map_err(error_witness)?;
        poset.max_element().map_err(error_witness)?;
        for (p0, (p1, _), (p2, _)) in poset.up_forks() {
            clock.tick()?;
            if poset.join(p1, p2).is_err() {
                return fail(json!({
                    "kind": "fork_without_join",
                    "base": dream(poset, p0),
                    "p": dream(poset, p1),
                    "q": dream(poset, p2),
                }));
            }
        }
        Ok(())
    })();
    entry(Check::Lattice, &clock, outcome)
}

struct Tables {
    meet: Vec<u32>,
    join: Vec<u32>,
    n: usize,
}

impl Tables {
    fn build(poset: &ChutePoset, clock: &Clock) -> std::result::Result<Tables, Stop> {
        let n = poset.len();
        let mut meet = vec![0u32; n * n];
        let mut join = vec![0u32; n * n];
        for a in 0..n {
            clock.tick()?;
            for b in 0..n {
                let m = poset.meet(a, b).map_err(error_witness)?;
                let j = poset.join(a, b).map_err(error_witness)?;
                meet[a * n + b] = m as u32;
                join[a * n + b] = j as u32;
            }
        }
        Ok(Tables { meet, join, n })
    }

    fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b] as usize
    }

    fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b] as usize
    }
}

/// A failure of one of the semidistributive laws at `(alpha, beta)`.
struct SdFailure {
    law: &'static str,
    alpha: usize,
    beta: usize,
    gammas: Vec<usize>,
}

/// For fixed `beta`, the sets `{γ : γ ∧ β = α}` for every `α`, checked for a maximum.
fn meet_law_at(
    poset: &ChutePoset,
    t: &Tables,
    beta: usize,
    only: Option<usize>,
) -> Option<SdFailure> {
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); poset.len()];
    for g in 0..poset.len() {
        buckets[t.meet(g, beta)].push(g);
    }
    for (alpha, bucket) in buckets.into_iter().enumerate() {
        if bucket.is_empty() || only.is_some_and(|o| o != alpha) {
            continue;
        }
        // the canonical order extends the partial order, so a maximum is last
        let top = *bucket.last().expect("nonempty");
        if !bucket.iter().all(|&g| poset.leq(g, top)) {
            return Some(SdFailure {
                law: "meet",
                alpha,
                beta,
                gammas: bucket,
            });
        }
    }
    None
}

/// For fixed `alpha`, the sets `{γ : γ ∨ α = β}` for every `β`, checked for a minimum.
fn join_law_at(
    poset: &ChutePoset,
    t: &Tables,
    alpha: usize,
    only: Option<usize>,
) -> Option<SdFailure> {
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); poset.len()];
    for g in 0..poset.len() {
        buckets[t.join(g, alpha)].push(g);
    }
    for (beta, bucket) in buckets.into_iter().enumerate() {
        if bucket.is_empty() || only.is_some_and(|o| o != beta) {
            continue;
        }
        let bottom = bucket[0];
        if !bucket.iter().all(|&g| poset.leq(bottom, g)) {
            return Some(SdFailure {
                law: "join",
                alpha,
                beta,
                gammas: bucket,
            });
        }
    }
    None
}

fn sd_witness(poset: &ChutePoset, f: &SdFailure, route: &str) -> Value {
    json!({
        "kind": format!("{}_semidistributivity", f.law),
        "route": route,
        "alpha": dream(poset, f.alpha),
        "beta": dream(poset, f.beta),
        "gammas": f.gammas.iter().map(|&g| dream(poset, g)).collect::<Vec<_>>(),
    })
}

/// Both semidistributive laws, once over all pairs `α ≤ β` and once over
/// cover relations only; the two routes must reach the same verdict.
pub fn check_semidistributive(poset: &ChutePoset, budget: &Budget) -> CheckEntry {
    let clock = budget.start();
    let outcome = (|| {
        let t = Tables::build(poset, &clock)?;
        let mut full: Option<SdFailure> = None;
        for x in 0..poset.len() {
            clock.tick()?;
            full = meet_law_at(poset, &t, x, None).or_else(|| join_law_at(poset, &t, x, None));
            if full.is_some() {
                break;
            }
        }
        let mut covers: Option<SdFailure> = None;
        'outer: for a in 0..poset.len() {
            clock.tick()?;
            for &(b, _) in poset.upper_covers(a) {
                covers = meet_law_at(poset, &t, b, Some(a))
                    .or_else(|| join_law_at(poset, &t, a, Some(b)));
                if covers.is_some() {
                    break 'outer;
                }
            }
        }
        match (full, covers) {
            (None, None) => Ok(()),
            (Some(f), Some(_)) => fail(sd_witness(poset, &f, "definition")),
            (Some(f), None) => fail(json!({
                "kind": "routes_disagree",
                "definition": sd_witness(poset, &f, "definition"),
            })),
            (None, Some(c)) => fail(json!({
                "kind": "routes_disagree",
                "covers": sd_witness(poset, &c, "covers"),
            })),
        }
    })();
    entry(Check::Semidistributive, &clock, outcome)
}

/// An interval `[a, b]` and its shape.
pub type PolygonInterval = (usize, usize, PolygonKind);

/// Counts of polygon intervals found by scanning every interval.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PolygonCensus {
    pub diamonds: usize,
    pub pentagons: usize,
    pub larger: usize,
}

/// Every interval of `poset` that is a polygon, classified.
pub fn polygon_census(poset: &ChutePoset) -> Result<(PolygonCensus, Vec<PolygonInterval>)> {
    let mut census = PolygonCensus::default();
    let mut found = Vec::new();
    for a in 0..poset.len() {
        if poset.upper_covers(a).len() < 2 {
            continue;
        }
        for b in a + 1..poset.len() {
            if !poset.leq(a, b) || poset.lower_covers(b).len() < 2 {
                continue;
            }
            let kind = poset.classify_polygon(a, b)?;
            match kind {
                PolygonKind::Diamond => census.diamonds += 1,
                PolygonKind::Pentagon => census.pentagons += 1,
                PolygonKind::Polygon(_) => census.larger += 1,
                PolygonKind::NotAPolygon => continue,
            }
            found.push((a, b, kind));
        }
    }
    Ok((census, found))
}

fn lehmer_support(lo: &LehmerTableau, hi: &LehmerTableau) -> Option<Vec<Cell>> {
    let mut out = Vec::new();
    for (i, j) in lo.w.inversions() {
        match hi.get(i, j).checked_sub(lo.get(i, j)) {
            Some(0) => {}
            Some(1) => out.push((i, j)),
            _ => return None,
        }
    }
    Some(out)
}

/// Closes every pair of upper (and lower) covers into a diamond or pentagon,
/// with the Lehmer-tableau shape predicted by how the two rectangles meet,
/// then checks that no interval is a larger polygon.
pub fn check_polygonal(poset: &ChutePoset, budget: &Budget) -> CheckEntry {
    let clock = budget.start();
    let outcome = (|| {
        for (p0, (p1, m1), (p2, m2)) in poset.up_forks() {
            clock.tick()?;
            let kind = fork_kind(&m1.rect, &m2.rect);
            let witness = |what: &str| {
                json!({
                    "kind": what,
                    "fork": format!("{kind:?}"),
                    "base": dream(poset, p0),
                    "p": dream(poset, p1),
                    "q": dream(poset, p2),
                })
            };
            let top = poset
                .join(p1, p2)
                .map_err(|_| Stop::Fail(witness("no_join")))?;
            let shape = poset.classify_polygon(p0, top).map_err(error_witness)?;
            let cmax = poset.lehmer(p1).max(poset.lehmer(p2));
            let max_is_join = cmax == *poset.lehmer(top);
            match (kind, shape) {
                (ForkKind::Commute, PolygonKind::Diamond) if max_is_join => {}
                (ForkKind::SwNw, PolygonKind::Pentagon) if max_is_join => {
                    // orient so that the SW corner of the first rectangle is the NW corner of the second
                    let (first, second) = if m1.rect.sw() == m2.rect.nw() {
                        (p1, p2)
                    } else {
                        (p2, p1)
                    };
                    let b01 = lehmer_support(poset.lehmer(p0), poset.lehmer(first));
                    let b02 = lehmer_support(poset.lehmer(p0), poset.lehmer(second));
                    let b14 = lehmer_support(poset.lehmer(first), poset.lehmer(top));
                    let ok = match (&b01, &b02, &b14) {
                        (Some(x), Some(y), Some(z)) => y == z && x.iter().all(|c| !y.contains(c)),
                        _ => false,
                    };
                    if !ok {
                        return fail(witness("pentagon_increment_sets"));
                    }
                }
                (ForkKind::SwSe, PolygonKind::Pentagon) => {}
                _ => {
                    let mut w = witness("fork_interval");
                    w["shape"] = json!(shape);
                    w["join_is_componentwise_max"] = json!(max_is_join);
                    return fail(w);
                }
            }
        }
        for (p, c1, c2) in poset.down_forks() {
            clock.tick()?;
            let bottom = poset.meet(c1, c2).map_err(error_witness)?;
            let shape = poset.classify_polygon(bottom, p).map_err(error_witness)?;
            if !matches!(shape, PolygonKind::Diamond | PolygonKind::Pentagon) {
                return fail(json!({
                    "kind": "fork_interval",
                    "shape": shape,
                    "top": dream(poset, p),
                    "p": dream(poset, c1),
                    "q": dream(poset, c2),
                }));
            }
        }
        clock.tick()?;
        let (_, found) = polygon_census(poset).map_err(error_witness)?;
        if let Some(&(a, b, kind)) = found
            .iter()
            .find(|(_, _, k)| matches!(k, PolygonKind::Polygon(_)))
        {
            return fail(json!({
                "kind": "large_polygon",
                "shape": kind,
                "bottom": dream(poset, a),
                "top": dream(poset, b),
            }));
        }
        Ok(())
    })();
    entry(Check::Polygonal, &clock, outcome)
}

/// Transposition reverses the order from `PD(w)` to `PD(w⁻¹)`, turns meets
/// into joins, and acts on Lehmer tableaux as predicted when two elements
/// differ only in the last column.
pub fn check_transpose_antiisomorphism(
    poset: &ChutePoset,
    inverse: &ChutePoset,
    budget: &Budget,
) -> CheckEntry {
    let clock = budget.start();
    let outcome = (|| {
        let w = poset.w();
        let n = w.n();
        if inverse.w() != &w.inverse() || inverse.len() != poset.len() {
            return fail(json!({ "kind": "size_mismatch", "inverse_size": inverse.len() }));
        }
        let mut image = Vec::with_capacity(poset.len());
        for k in 0..poset.len() {
            let t = poset.element(k).transpose();
            match inverse.index_of(&t) {
                Ok(j) => image.push(j),
                Err(_) => {
                    return fail(json!({ "kind": "transpose_missing", "p": dream(poset, k) }))
                }
            }
        }
        // the crossing-position formulas for Φ(P) and Φ(Pᵀ)
        let winv = w.inverse();
        for (k, &image_k) in image.iter().enumerate() {
            clock.tick()?;
            let p = poset.element(k);
            let lt = inverse.lehmer(image_k);
            for (i, j) in w.inversions() {
                let by_col = p.phi_transpose_entry(i, j).map_err(error_witness)?;
                let by_row = p.phi_row_entry(i, j).map_err(error_witness)?;
                if by_col != lt.get(winv.at(j), winv.at(i)) || by_row != poset.lehmer(k).get(i, j) {
                    return fail(json!({
                        "kind": "crossing_formula",
                        "p": dream(poset, k),
                        "inversion": [i, j],
                    }));
                }
            }
        }
        for a in 0..poset.len() {
            clock.tick()?;
            for b in 0..poset.len() {
                let (ta, tb) = (image[a], image[b]);
                let pair = || json!({ "p": dream(poset, a), "q": dream(poset, b) });
                if poset.leq(a, b) != inverse.leq(tb, ta) {
                    let mut w = pair();
                    w["kind"] = json!("order_not_reversed");
                    return fail(w);
                }
                let m = poset.meet(a, b).map_err(error_witness)?;
                let j = inverse.join(ta, tb).map_err(error_witness)?;
                if image[m] != j {
                    let mut w = pair();
                    w["kind"] = json!("meet_not_sent_to_join");
                    return fail(w);
                }
                let (la, lb) = (poset.lehmer(a), poset.lehmer(b));
                let only_last_column = la.le(lb)
                    && w.inversions()
                        .iter()
                        .all(|&(i, j)| j == n || la.get(i, j) == lb.get(i, j));
                if only_last_column {
                    let (ua, ub) = (inverse.lehmer(ta), inverse.lehmer(tb));
                    let row = winv.at(n);
                    let ok = ub.le(ua)
                        && winv
                            .inversions()
                            .iter()
                            .all(|&(i, j)| i == row || ua.get(i, j) == ub.get(i, j));
                    if !ok {
                        return fail(json!({
                            "kind": "last_column_transpose",
                            "p": dream(poset, a),
                            "q": dream(poset, b),
                            "lehmer_pt": lehmer_json(ua),
                            "lehmer_qt": lehmer_json(ub),
                        }));
                    }
                }
            }
        }
        Ok(())
    })();
    entry(Check::Transpose, &clock, outcome)
}

/// `P ↦ P▲` is an order embedding of `PD(w)` onto the interval
/// `[min▲, max▲]` of `PD(w▲)`.
pub fn check_triforce_interval(
    poset: &ChutePoset,
    doubled: &ChutePoset,
    budget: &Budget,
) -> CheckEntry {
    let clock = budget.start();
    let outcome = (|| {
        let w = poset.w();
        if doubled.w() != &w.triforce() {
            return fail(json!({ "kind": "wrong_target", "target": doubled.w().to_string() }));
        }
        let mut image = Vec::with_capacity(poset.len());
        for k in 0..poset.len() {
            let t = poset.element(k).triforce_embed().map_err(error_witness)?;
            match doubled.index_of(&t) {
                Ok(j) => image.push(j),
                Err(_) => return fail(json!({ "kind": "image_missing", "p": dream(poset, k) })),
            }
        }
        for a in 0..poset.len() {
            clock.tick()?;
            for b in 0..poset.len() {
                if poset.leq(a, b) != doubled.leq(image[a], image[b]) {
                    return fail(json!({
                        "kind": "order_not_preserved",
                        "p": dream(poset, a),
                        "q": dream(poset, b),
                    }));
                }
            }
        }
        let lo = image[poset.min_element().map_err(error_witness)?];
        let hi = image[poset.max_element().map_err(error_witness)?];
        let interval: HashSet<usize> = doubled
            .interval(lo, hi)
            .map_err(error_witness)?
            .into_iter()
            .collect();
        let image_set: HashSet<usize> = image.iter().copied().collect();
        if interval != image_set {
            let extra: Vec<Value> = interval
                .difference(&image_set)
                .map(|&k| dream(doubled, k))
                .collect();
            return fail(json!({
                "kind": "not_an_interval",
                "interval_size": interval.len(),
                "image_size": image_set.len(),
                "outside_image": extra,
            }));
        }
        Ok(())
    })();
    entry(Check::Triforce, &clock, outcome)
}

fn skipped(check: Check, reason: String) -> CheckEntry {
    CheckEntry {
        name: check.name().to_string(),
        status: Status::Skipped,
        witness: Some(json!({ "reason": reason })),
        ms: 0,
    }
}

/// Runs the requested checks on `PD(w)`, in the order given.
pub fn verify(w: &Permutation, checks: &[Check], budget: &Budget) -> Result<VerificationReport> {
    let poset = ChutePoset::enumerate(w)?;
    let mut out = Vec::with_capacity(checks.len());
    for &check in checks {
        let e = match check {
            Check::Isomorphism => check_isomorphism(&poset, budget),
            Check::Lattice => check_lattice(&poset, budget),
            Check::Semidistributive => check_semidistributive(&poset, budget),
            Check::Polygonal => check_polygonal(&poset, budget),
            Check::Transpose => {
                let inverse = ChutePoset::enumerate(&w.inverse())?;
                check_transpose_antiisomorphism(&poset, &inverse, budget)
            }
            Check::Triforce if w.n() > TRIFORCE_MAX_N => skipped(
                check,
                format!("size guard: triforce needs n <= {TRIFORCE_MAX_N}"),
            ),
            Check::Triforce => {
                let doubled = ChutePoset::enumerate(&w.triforce())?;
                check_triforce_interval(&poset, &doubled, budget)
            }
        };
        out.push(e);
    }
    Ok(VerificationReport {
        w: w.clone(),
        checks: out,
    })
}

/// [`verify`] over many permutations in parallel; reports keep the input order.
pub fn verify_all(
    perms: &[Permutation],
    checks: &[Check],
    budget: &Budget,
) -> Result<Vec<VerificationReport>> {
    perms
        .par_iter()
        .map(|w| verify(w, checks, budget))
        .collect()
}
