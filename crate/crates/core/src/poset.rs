//! The chute move poset `PD(w)`.
//!
//! Elements are indexed in a canonical order: by the length of the longest
//! chain of moves from the minimum, then by the row strings of the dream.
//! This order is a linear extension, so every chute move goes from a lower
//! index to a higher one.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitmatrix::{highest_bit, is_subset, lowest_bit, BitMatrix};
use crate::chute::{self, ChuteMove, Rect};
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::pipedream::{PipeDream, Tile};
use crate::tableaux::{
    increment, increment_multiset, is_inversions_tableau, lehmer_delta, lehmer_form, restrict,
    Cell, Delta, LehmerTableau, Multiset, StairTableau,
};

/// Largest degree accepted by [`brute_force_enumerate`].
pub const BRUTE_FORCE_MAX_N: usize = 6;

pub struct ChutePoset {
    w: Permutation,
    elements: Vec<PipeDream>,
    index: HashMap<PipeDream, usize>,
    thetas: Vec<StairTableau>,
    lehmers: Vec<LehmerTableau>,
    theta_index: HashMap<StairTableau, usize>,
    depth: Vec<usize>,
    moves_up: Vec<Vec<(usize, ChuteMove)>>,
    moves_down: Vec<Vec<usize>>,
    hasse_up: Vec<Vec<(usize, ChuteMove)>>,
    hasse_down: Vec<Vec<usize>>,
    non_cover_moves: Vec<(usize, usize)>,
    up: BitMatrix,
    down: BitMatrix,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PolygonKind {
    Diamond,
    Pentagon,
    /// A polygon with more than five elements.
    Polygon(usize),
    NotAPolygon,
}

/// How the rectangles of two moves out of the same dream meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ForkKind {
    /// Neither SW corner is a corner of the other rectangle.
    Commute,
    /// The SW corner of one rectangle is the NW corner of the other.
    SwNw,
    /// The SW corner of one rectangle is the SE corner of the other.
    SwSe,
    /// The SW corner of one rectangle is its SW or NE corner (never observed).
    Other,
}

pub fn fork_kind(r1: &Rect, r2: &Rect) -> ForkKind {
    let corner = |a: &Rect, b: &Rect| {
        let sw = a.sw();
        if sw == b.nw() {
            Some(ForkKind::SwNw)
        } else if sw == b.se() {
            Some(ForkKind::SwSe)
        } else if sw == b.sw() || sw == b.ne() {
            Some(ForkKind::Other)
        } else {
            None
        }
    };
    corner(r1, r2)
        .or_else(|| corner(r2, r1))
        .unwrap_or(ForkKind::Commute)
}

/// An element with two of its upper covers and the moves reaching them.
pub type UpFork = (usize, (usize, ChuteMove), (usize, ChuteMove));

/// One step of a chute path on inversions tableaux.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub x0: usize,
    pub y0: usize,
    pub boxes: Vec<Cell>,
    pub p0: u32,
    pub q0: u32,
}

impl ChutePoset {
    /// Builds `PD(w)` by exploring moves and undo-moves from the seed dream.
    pub fn enumerate(w: &Permutation) -> Result<ChutePoset> {
        let seed = PipeDream::seed(w);
        if seed.wiring() != *w {
            return Err(Error::TheoremViolation(format!(
                "seed dream for {w} has wiring {}",
                seed.wiring()
            )));
        }
        let mut found: Vec<PipeDream> = vec![seed.clone()];
        let mut seen: HashMap<PipeDream, usize> = HashMap::from([(seed, 0)]);
        let mut edges: Vec<(usize, usize, ChuteMove)> = Vec::new();
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let p = found[k].clone();
            let mut visit = |q: PipeDream, found: &mut Vec<PipeDream>| -> usize {
                if let Some(&j) = seen.get(&q) {
                    return j;
                }
                let j = found.len();
                seen.insert(q.clone(), j);
                found.push(q);
                queue.push_back(j);
                j
            };
            for m in chute::find_moves(&p)? {
                let q = chute::apply(&p, &m)?;
                let j = visit(q, &mut found);
                edges.push((k, j, m));
            }
            for m in chute::find_inverse_moves(&p)? {
                let q = chute::inverse_apply(&p, &m)?;
                visit(q, &mut found);
            }
        }
        ChutePoset::from_moves(w.clone(), found, edges)
    }

    fn from_moves(
        w: Permutation,
        found: Vec<PipeDream>,
        edges: Vec<(usize, usize, ChuteMove)>,
    ) -> Result<ChutePoset> {
        let n_el = found.len();
        // longest chain from a source; moves push crosses strictly down,
        // so the sum of cross rows orders the move graph topologically
        let weight: Vec<usize> = found
            .iter()
            .map(|p| {
                p.crosses_per_row()
                    .iter()
                    .enumerate()
                    .map(|(r, c)| (r + 1) * c)
                    .sum()
            })
            .collect();
        let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n_el];
        for &(a, b, _) in &edges {
            preds[b].push(a);
        }
        let mut topo: Vec<usize> = (0..n_el).collect();
        topo.sort_by_key(|&k| weight[k]);
        let mut depth0 = vec![0usize; n_el];
        for &k in &topo {
            depth0[k] = preds[k].iter().map(|&a| depth0[a] + 1).max().unwrap_or(0);
        }
        let mut order: Vec<usize> = (0..n_el).collect();
        order.sort_by(|&a, &b| {
            depth0[a]
                .cmp(&depth0[b])
                .then_with(|| found[a].cmp(&found[b]))
        });
        let mut rank = vec![0usize; n_el];
        for (new, &old) in order.iter().enumerate() {
            rank[old] = new;
        }
        let mut slots: Vec<Option<PipeDream>> = found.into_iter().map(Some).collect();
        let elements: Vec<PipeDream> = order
            .iter()
            .map(|&old| slots[old].take().expect("each index once"))
            .collect();
        let depth: Vec<usize> = order.iter().map(|&old| depth0[old]).collect();

        let mut moves_up: Vec<Vec<(usize, ChuteMove)>> = vec![Vec::new(); n_el];
        let mut moves_down: Vec<Vec<usize>> = vec![Vec::new(); n_el];
        for (a, b, m) in edges {
            let (a, b) = (rank[a], rank[b]);
            debug_assert!(a < b);
            moves_up[a].push((b, m));
            moves_down[b].push(a);
        }
        for v in &mut moves_up {
            v.sort_by_key(|&(b, m)| (b, m));
        }
        for v in &mut moves_down {
            v.sort_unstable();
        }

        let mut up = BitMatrix::new(n_el);
        for a in (0..n_el).rev() {
            up.set(a, a);
            for &(b, _) in &moves_up[a] {
                up.union_rows(a, b);
            }
        }
        let mut down = BitMatrix::new(n_el);
        for (b, below) in moves_down.iter().enumerate() {
            down.set(b, b);
            for &a in below {
                down.union_rows(b, a);
            }
        }

        let mut hasse_up: Vec<Vec<(usize, ChuteMove)>> = vec![Vec::new(); n_el];
        let mut hasse_down: Vec<Vec<usize>> = vec![Vec::new(); n_el];
        let mut non_cover_moves = Vec::new();
        for a in 0..n_el {
            for &(b, m) in &moves_up[a] {
                let skipped = moves_up[a].iter().any(|&(c, _)| c != b && up.get(c, b));
                if skipped {
                    non_cover_moves.push((a, b));
                } else {
                    hasse_up[a].push((b, m));
                    hasse_down[b].push(a);
                }
            }
        }
        for v in &mut hasse_down {
            v.sort_unstable();
            v.dedup();
        }

        let mut thetas = Vec::with_capacity(n_el);
        let mut lehmers = Vec::with_capacity(n_el);
        let mut index = HashMap::with_capacity(n_el);
        let mut theta_index = HashMap::with_capacity(n_el);
        for (k, p) in elements.iter().enumerate() {
            let t = p.theta()?;
            lehmers.push(lehmer_form(&t, &w)?);
            theta_index.insert(t.clone(), k);
            thetas.push(t);
            index.insert(p.clone(), k);
        }

        Ok(ChutePoset {
            w,
            elements,
            index,
            thetas,
            lehmers,
            theta_index,
            depth,
            moves_up,
            moves_down,
            hasse_up,
            hasse_down,
            non_cover_moves,
            up,
            down,
        })
    }

    pub fn w(&self) -> &Permutation {
        &self.w
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[PipeDream] {
        &self.elements
    }

    pub fn element(&self, k: usize) -> &PipeDream {
        &self.elements[k]
    }

    pub fn index_of(&self, p: &PipeDream) -> Result<usize> {
        self.index.get(p).copied().ok_or(Error::UnknownElement)
    }

    /// `Θ(P)` for the element with index `k`.
    pub fn theta(&self, k: usize) -> &StairTableau {
        &self.thetas[k]
    }

    /// `Φ(P)` for the element with index `k`.
    pub fn lehmer(&self, k: usize) -> &LehmerTableau {
        &self.lehmers[k]
    }

    /// `Θ⁻¹(t)` by lookup.
    pub fn theta_inverse(&self, t: &StairTableau) -> Option<usize> {
        self.theta_index.get(t).copied()
    }

    /// Length of the longest chain of moves from the minimum.
    pub fn depth(&self, k: usize) -> usize {
        self.depth[k]
    }

    pub fn moves_up(&self, k: usize) -> &[(usize, ChuteMove)] {
        &self.moves_up[k]
    }

    pub fn moves_down(&self, k: usize) -> &[usize] {
        &self.moves_down[k]
    }

    pub fn upper_covers(&self, k: usize) -> &[(usize, ChuteMove)] {
        &self.hasse_up[k]
    }

    pub fn lower_covers(&self, k: usize) -> &[usize] {
        &self.hasse_down[k]
    }

    /// Single moves `a -> b` that are not cover relations.
    pub fn non_cover_moves(&self) -> &[(usize, usize)] {
        &self.non_cover_moves
    }

    pub fn move_count(&self) -> usize {
        self.moves_up.iter().map(Vec::len).sum()
    }

    pub fn cover_count(&self) -> usize {
        self.hasse_up.iter().map(Vec::len).sum()
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up.get(a, b)
    }

    /// Componentwise comparison of Lehmer tableaux.
    pub fn leq_via_lehmer(&self, a: usize, b: usize) -> bool {
        self.lehmers[a].le(&self.lehmers[b])
    }

    /// Indices of all elements above `a` (including `a`).
    pub fn up_set(&self, a: usize) -> &[u64] {
        self.up.row(a)
    }

    pub fn down_set(&self, a: usize) -> &[u64] {
        self.down.row(a)
    }

    pub fn min_element(&self) -> Result<usize> {
        let sources: Vec<usize> = (0..self.len())
            .filter(|&k| self.moves_down[k].is_empty())
            .collect();
        match sources.as_slice() {
            [k] => Ok(*k),
            _ => Err(Error::TheoremViolation(format!(
                "PD({}) has {} minimal elements",
                self.w,
                sources.len()
            ))),
        }
    }

    pub fn max_element(&self) -> Result<usize> {
        let sinks: Vec<usize> = (0..self.len())
            .filter(|&k| self.moves_up[k].is_empty())
            .collect();
        match sinks.as_slice() {
            [k] => Ok(*k),
            _ => Err(Error::TheoremViolation(format!(
                "PD({}) has {} maximal elements",
                self.w,
                sinks.len()
            ))),
        }
    }

    /// Greatest lower bound; fails if the common lower bounds have no maximum.
    pub fn meet(&self, a: usize, b: usize) -> Result<usize> {
        let common = self.down.and_rows(a, b);
        let m = highest_bit(&common).ok_or_else(|| {
            Error::TheoremViolation(format!("elements {a} and {b} have no common lower bound"))
        })?;
        if is_subset(&common, self.down.row(m)) {
            Ok(m)
        } else {
            Err(Error::TheoremViolation(format!(
                "elements {a} and {b} have no meet"
            )))
        }
    }

    /// Least upper bound; fails if the common upper bounds have no minimum.
    pub fn join(&self, a: usize, b: usize) -> Result<usize> {
        let common = self.up.and_rows(a, b);
        let j = lowest_bit(&common).ok_or_else(|| {
            Error::TheoremViolation(format!("elements {a} and {b} have no common upper bound"))
        })?;
        if is_subset(&common, self.up.row(j)) {
            Ok(j)
        } else {
            Err(Error::TheoremViolation(format!(
                "elements {a} and {b} have no join"
            )))
        }
    }

    /// The elements of `[a, b]` in canonical order.
    pub fn interval(&self, a: usize, b: usize) -> Result<Vec<usize>> {
        if !self.leq(a, b) {
            return Err(Error::Incomparable);
        }
        Ok(self.up.and_ones_with(a, &self.down, b).collect())
    }

    /// Whether `[a, b]` is a polygon: at least four elements, and the elements
    /// strictly inside split into two nonempty chains with nothing in one chain
    /// comparable to anything in the other. The Hasse diagram of such an
    /// interval is a single cycle.
    pub fn classify_polygon(&self, a: usize, b: usize) -> Result<PolygonKind> {
        let members = self.interval(a, b)?;
        if members.len() < 4 {
            return Ok(PolygonKind::NotAPolygon);
        }
        let interior: Vec<usize> = members
            .iter()
            .copied()
            .filter(|&x| x != a && x != b)
            .collect();
        let comparable = |x: usize, y: usize| self.leq(x, y) || self.leq(y, x);
        let first = interior[0];
        let (side1, side2): (Vec<usize>, Vec<usize>) =
            interior.iter().partition(|&&x| comparable(first, x));
        let is_chain = |side: &[usize]| {
            side.iter()
                .enumerate()
                .all(|(k, &x)| side[k + 1..].iter().all(|&y| comparable(x, y)))
        };
        let separated = side1
            .iter()
            .all(|&x| side2.iter().all(|&y| !comparable(x, y)));
        if side2.is_empty() || !is_chain(&side1) || !is_chain(&side2) || !separated {
            return Ok(PolygonKind::NotAPolygon);
        }
        Ok(match members.len() {
            4 => PolygonKind::Diamond,
            5 => PolygonKind::Pentagon,
            k => PolygonKind::Polygon(k),
        })
    }

    /// Pairs of distinct upper covers of one element: `(p0, (p1, m1), (p2, m2))`
    /// with `p1 < p2`.
    pub fn up_forks(&self) -> Vec<UpFork> {
        let mut out = Vec::new();
        for p0 in 0..self.len() {
            let covers = &self.hasse_up[p0];
            for (k, &c1) in covers.iter().enumerate() {
                for &c2 in &covers[k + 1..] {
                    if c1.0 != c2.0 {
                        out.push((p0, c1, c2));
                    }
                }
            }
        }
        out
    }

    /// Pairs of distinct lower covers of one element: `(p, p1, p2)` with `p1 < p2`.
    pub fn down_forks(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for p in 0..self.len() {
            let covers = &self.hasse_down[p];
            for (k, &c1) in covers.iter().enumerate() {
                for &c2 in &covers[k + 1..] {
                    out.push((p, c1, c2));
                }
            }
        }
        out
    }

    /// Turns tableau path steps into pipe-dream moves, starting at element
    /// `from`. Each step must be a single chute move with pipes `(x0, y0)`
    /// whose result has `Θ = ↑_B Θ(P)`.
    pub fn realize_path(&self, from: usize, steps: &[PathStep]) -> Result<Vec<(usize, ChuteMove)>> {
        let mut cur = from;
        let mut out = Vec::with_capacity(steps.len());
        for step in steps {
            let m: Multiset = step.boxes.iter().map(|&b| (b, 1)).collect();
            let target = increment_multiset(&self.thetas[cur], &m)?;
            let next = self.moves_up[cur]
                .iter()
                .find(|(b, mv)| mv.pipes == (step.x0, step.y0) && self.thetas[*b] == target)
                .copied()
                .ok_or_else(|| {
                    Error::TheoremViolation(format!(
                        "no chute move with pipes ({},{}) from element {cur} realizes the step",
                        step.x0, step.y0
                    ))
                })?;
            out.push(next);
            cur = next.0;
        }
        Ok(out)
    }

    /// Hasse diagram in DOT. Nodes are canonical indices; edges carry the pipe pair.
    pub fn to_dot(&self, tooltips: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph \"PD({})\" {{", self.w);
        let _ = writeln!(s, "  rankdir=BT;");
        let _ = writeln!(s, "  node [shape=circle];");
        for (k, p) in self.elements.iter().enumerate() {
            if tooltips {
                let json = serde_json::to_string(p).expect("dreams serialize");
                let _ = writeln!(s, "  {k} [tooltip=\"{}\"];", json.replace('"', "\\\""));
            } else {
                let _ = writeln!(s, "  {k};");
            }
        }
        for (a, covers) in self.hasse_up.iter().enumerate() {
            for &(b, m) in covers {
                let _ = writeln!(s, "  {a} -> {b} [label=\"({},{})\"];", m.pipes.0, m.pipes.1);
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Every cross/bump filling of the staircase, kept when reduced with wiring `w`.
pub fn brute_force_enumerate(w: &Permutation) -> Result<BTreeSet<PipeDream>> {
    let n = w.n();
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::SizeGuard(format!(
            "brute force enumeration needs n <= {BRUTE_FORCE_MAX_N}, got {n}"
        )));
    }
    let interior: Vec<Cell> = (1..n)
        .flat_map(|r| (1..=n - r).map(move |c| (r, c)))
        .collect();
    let len = w.length() as u32;
    let mut out = BTreeSet::new();
    for mask in 0u32..(1u32 << interior.len()) {
        if mask.count_ones() != len {
            continue;
        }
        let mut p = PipeDream::all_bump(n);
        for (k, &(r, c)) in interior.iter().enumerate() {
            if mask >> k & 1 == 1 {
                p.set(r, c, Tile::Cross);
            }
        }
        let trace = p.trace();
        if trace.wiring == *w && trace.crossing_map().is_ok() {
            out.insert(p);
        }
    }
    Ok(out)
}

/// The boxes whose increment keeps the restricted tableau valid.
fn candidate_boxes(t: &StairTableau, w: &Permutation, m: &Multiset) -> Result<Vec<Cell>> {
    let mut x = Vec::new();
    for &(i, j) in m.keys() {
        let restricted = restrict(t, j)?;
        let (bumped, _) = increment(&restricted, (i, j))?;
        if is_inversions_tableau(&bumped, &w.restrict_values(j)) {
            x.push((i, j));
        }
    }
    Ok(x)
}

/// Builds the sequence of increments carrying `t` to `t2`, one chute move per
/// step. Each step is checked against the predicted entry exchange.
pub fn chute_path(t: &StairTableau, t2: &StairTableau, w: &Permutation) -> Result<Vec<PathStep>> {
    let target = lehmer_form(t2, w)?;
    let mut cur = t.clone();
    let mut steps = Vec::new();
    loop {
        let m = match lehmer_delta(&lehmer_form(&cur, w)?, &target) {
            Delta::Incomparable => return Err(Error::Incomparable),
            Delta::Multiset(m) => m,
        };
        if m.is_empty() {
            break;
        }
        let x = candidate_boxes(&cur, w, &m)?;
        if x.is_empty() {
            return Err(Error::TheoremViolation(format!(
                "no incrementable box on the way from {t:?} to {t2:?} at {cur:?}"
            )));
        }
        let (x0, y0) = x
            .iter()
            .copied()
            .filter(|&(i, j)| !x.iter().any(|&(i2, j2)| i2 == i && j2 > j))
            .min_by_key(|&(i, j)| (j, i))
            .expect("the rightmost box of any row qualifies");
        let n = w.n();
        let p0 = cur.get(x0, y0);
        let ys: Vec<usize> = (y0 + 1..=n)
            .filter(|&y| cur.get(x0, y) == p0 && p0 < cur.get(y0, y))
            .collect();
        let mut q0 = p0 + 1;
        while cur.appears_below(q0, x0, y0) {
            q0 += 1;
        }
        let mut boxes = vec![(x0, y0)];
        boxes.extend(ys.iter().map(|&y| (x0, y)));

        let fail = |what: &str| {
            Err(Error::TheoremViolation(format!(
                "step at ({x0},{y0}) from {cur:?}: {what}"
            )))
        };
        for &y in &ys {
            let (bumped, _) = increment(&cur, (x0, y))?;
            if cur.get(y0, y) != q0 || bumped.get(x0, y) != q0 {
                return fail(&format!("column {y} does not exchange {p0} for {q0}"));
            }
        }
        if boxes.iter().any(|b| !m.contains_key(b)) {
            return fail("increment set leaves the remaining difference");
        }
        let bset: Multiset = boxes.iter().map(|&b| (b, 1)).collect();
        let next = increment_multiset(&cur, &bset)?;
        if !is_inversions_tableau(&next, w) {
            return fail("result is not an inversions tableau");
        }
        if cur.column_contains(y0, q0) {
            return fail(&format!("{q0} already in column {y0}"));
        }
        steps.push(PathStep {
            x0,
            y0,
            boxes,
            p0,
            q0,
        });
        cur = next;
    }
    if cur != *t2 {
        return Err(Error::TheoremViolation(format!(
            "path ends at {cur:?}, not {t2:?}"
        )));
    }
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_posets() {
        for n in 1..6 {
            let id = ChutePoset::enumerate(&Permutation::identity(n)).unwrap();
            assert_eq!(id.len(), 1);
            assert_eq!(id.move_count(), 0);
            assert_eq!(id.min_element().unwrap(), id.max_element().unwrap());
            let top = ChutePoset::enumerate(&Permutation::longest(n)).unwrap();
            assert_eq!(top.len(), 1);
        }
    }

    #[test]
    fn matches_brute_force_s4() {
        for w in Permutation::all(4) {
            let poset = ChutePoset::enumerate(&w).unwrap();
            let ours: BTreeSet<PipeDream> = poset.elements().iter().cloned().collect();
            assert_eq!(ours, brute_force_enumerate(&w).unwrap(), "{w}");
        }
        assert_eq!(brute_force_enumerate(&p("2143")).unwrap().len(), 3);
        assert!(brute_force_enumerate(&Permutation::identity(7)).is_err());
    }

    #[test]
    fn canonical_order_is_linear_extension() {
        let poset = ChutePoset::enumerate(&p("361542")).unwrap();
        assert_eq!(poset.min_element().unwrap(), 0);
        assert_eq!(poset.max_element().unwrap(), poset.len() - 1);
        for a in 0..poset.len() {
            for &(b, _) in poset.moves_up(a) {
                assert!(a < b);
            }
        }
    }

    #[test]
    fn meet_join_with_extremes() {
        let poset = ChutePoset::enumerate(&p("2143")).unwrap();
        let (lo, hi) = (poset.min_element().unwrap(), poset.max_element().unwrap());
        for k in 0..poset.len() {
            assert_eq!(poset.join(lo, k).unwrap(), k);
            assert_eq!(poset.meet(lo, k).unwrap(), lo);
            assert_eq!(poset.meet(hi, k).unwrap(), k);
        }
        assert_eq!(poset.interval(lo, hi).unwrap().len(), poset.len());
        assert_eq!(
            poset.classify_polygon(lo, lo).unwrap(),
            PolygonKind::NotAPolygon
        );
    }

    #[test]
    fn path_to_self_is_empty() {
        let w = p("2143");
        let poset = ChutePoset::enumerate(&w).unwrap();
        let t = poset.theta(0);
        assert!(chute_path(t, t, &w).unwrap().is_empty());
        let top = poset.theta(poset.len() - 1);
        assert!(matches!(chute_path(top, t, &w), Err(Error::Incomparable)));
        let steps = chute_path(t, top, &w).unwrap();
        let path = poset.realize_path(0, &steps).unwrap();
        assert_eq!(path.last().unwrap().0, poset.len() - 1);
    }

    #[test]
    fn fork_kinds() {
        let a = Rect::new(1, 3, 1, 3);
        assert_eq!(fork_kind(&a, &Rect::new(3, 4, 1, 2)), ForkKind::SwNw);
        assert_eq!(fork_kind(&Rect::new(3, 4, 1, 2), &a), ForkKind::SwNw);
        assert_eq!(
            fork_kind(&Rect::new(2, 3, 1, 3), &Rect::new(1, 3, 1, 2)),
            ForkKind::Other
        );
        assert_eq!(
            fork_kind(&Rect::new(1, 2, 2, 4), &Rect::new(1, 2, 5, 6)),
            ForkKind::Commute
        );
        assert_eq!(
            fork_kind(&Rect::new(2, 4, 3, 5), &Rect::new(1, 4, 1, 3)),
            ForkKind::SwSe
        );
    }

    #[test]
    fn dot_output() {
        let poset = ChutePoset::enumerate(&p("132")).unwrap();
        let dot = poset.to_dot(false);
        assert!(dot.starts_with("digraph \"PD(132)\" {"));
        assert!(dot.contains("0 -> 1 [label=\"(2,3)\"]"));
        assert!(poset.to_dot(true).contains("tooltip=\"{\\\"n\\\":3"));
    }
}
