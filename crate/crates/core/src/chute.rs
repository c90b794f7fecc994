//! Generalized chute moves.
//!
//! A move lives in a rectangle `R` of the dream. Before the move the NW and SW
//! corners of `R` are bumps, the SE corner is a bump or an elbow and every
//! other box of `R` is a cross. Applying the move turns the SW bump into a
//! cross and the NE cross into a bump; the two pipes crossing at NE now cross
//! at SW instead.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pipedream::{PipeDream, Tile, Trace};
use crate::tableaux::{increment_multiset, Cell, Multiset, StairTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rect {
    pub top: usize,
    pub bottom: usize,
    pub left: usize,
    pub right: usize,
}

impl Rect {
    pub fn new(top: usize, bottom: usize, left: usize, right: usize) -> Self {
        Rect {
            top,
            bottom,
            left,
            right,
        }
    }

    pub fn nw(&self) -> Cell {
        (self.top, self.left)
    }
    pub fn ne(&self) -> Cell {
        (self.top, self.right)
    }
    pub fn sw(&self) -> Cell {
        (self.bottom, self.left)
    }
    pub fn se(&self) -> Cell {
        (self.bottom, self.right)
    }

    pub fn contains(&self, (r, c): Cell) -> bool {
        (self.top..=self.bottom).contains(&r) && (self.left..=self.right).contains(&c)
    }

    fn fits(&self, p: &PipeDream) -> bool {
        self.top >= 1
            && self.left >= 1
            && self.bottom > self.top
            && self.right > self.left
            && p.contains_box(self.bottom, self.right)
    }
}

impl fmt::Display for Rect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "rows {}..{} cols {}..{}",
            self.top, self.bottom, self.left, self.right
        )
    }
}

/// A chute move: the rectangle plus the pipes `i < j` crossing at its NE
/// corner before the move.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "MoveDoc", into = "MoveDoc")]
pub struct ChuteMove {
    pub rect: Rect,
    pub pipes: (usize, usize),
}

/// JSON form: `{"rect": [top, bottom, left, right], "pipes": [i, j]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MoveDoc {
    pub rect: [usize; 4],
    pub pipes: [usize; 2],
}

impl TryFrom<MoveDoc> for ChuteMove {
    type Error = Error;

    fn try_from(d: MoveDoc) -> Result<Self> {
        let [top, bottom, left, right] = d.rect;
        if bottom <= top || right <= left || top == 0 || left == 0 {
            return Err(Error::NotApplicable(format!(
                "degenerate rectangle {:?}",
                d.rect
            )));
        }
        if d.pipes[0] >= d.pipes[1] {
            return Err(Error::NotApplicable(format!(
                "pipes {:?} out of order",
                d.pipes
            )));
        }
        Ok(ChuteMove {
            rect: Rect::new(top, bottom, left, right),
            pipes: (d.pipes[0], d.pipes[1]),
        })
    }
}

impl From<ChuteMove> for MoveDoc {
    fn from(m: ChuteMove) -> Self {
        let r = m.rect;
        MoveDoc {
            rect: [r.top, r.bottom, r.left, r.right],
            pipes: [m.pipes.0, m.pipes.1],
        }
    }
}

fn crossing_pipes(trace: &Trace, (r, c): Cell) -> (usize, usize) {
    let a = trace
        .horizontal(r, c)
        .expect("every box carries a horizontal pipe");
    let b = trace
        .vertical(r, c)
        .expect("every interior box carries a vertical pipe");
    (a.min(b), a.max(b))
}

fn is_turn(t: Tile) -> bool {
    matches!(t, Tile::Bump | Tile::Elbow)
}

/// Whether `R` has the pre-move tile pattern in `p`.
pub fn matches_pattern(p: &PipeDream, rect: &Rect) -> bool {
    if !rect.fits(p) {
        return false;
    }
    for r in rect.top..=rect.bottom {
        for c in rect.left..=rect.right {
            let t = p.tile(r, c);
            let ok = match (r, c) {
                b if b == rect.nw() || b == rect.sw() => t == Tile::Bump,
                b if b == rect.se() => is_turn(t),
                _ => t == Tile::Cross,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Whether `R` has the post-move tile pattern in `p`.
pub fn matches_inverse_pattern(p: &PipeDream, rect: &Rect) -> bool {
    if !rect.fits(p) {
        return false;
    }
    for r in rect.top..=rect.bottom {
        for c in rect.left..=rect.right {
            let t = p.tile(r, c);
            let ok = match (r, c) {
                b if b == rect.nw() || b == rect.ne() => t == Tile::Bump,
                b if b == rect.se() => is_turn(t),
                _ => t == Tile::Cross,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn column_crosses(p: &PipeDream, c: usize, rows: std::ops::RangeInclusive<usize>) -> bool {
    rows.into_iter().all(|r| p.tile(r, c) == Tile::Cross)
}

/// Every chute move available in `p`, sorted by `(top, left, bottom, right)`.
pub fn find_moves(p: &PipeDream) -> Result<Vec<ChuteMove>> {
    let trace = p.trace();
    trace.crossing_map()?;
    let n = p.n();
    let mut out = Vec::new();
    for top in 1..n {
        for left in 1..=n - top {
            if p.tile(top, left) != Tile::Bump {
                continue;
            }
            // the SW bump is the first non-cross below NW in column `left`
            let mut bottom = top + 1;
            while p.contains_box(bottom, left) && p.tile(bottom, left) == Tile::Cross {
                bottom += 1;
            }
            if !p.contains_box(bottom, left) || p.tile(bottom, left) != Tile::Bump {
                continue;
            }
            for right in left + 1.. {
                if !p.contains_box(bottom, right) || !column_crosses(p, right, top..=bottom - 1) {
                    break;
                }
                let se = p.tile(bottom, right);
                if is_turn(se) {
                    let rect = Rect::new(top, bottom, left, right);
                    out.push(ChuteMove {
                        rect,
                        pipes: crossing_pipes(&trace, rect.ne()),
                    });
                    break;
                }
            }
        }
    }
    out.sort_by_key(|m| (m.rect.top, m.rect.left, m.rect.bottom, m.rect.right));
    Ok(out)
}

/// Every chute move whose result is `p`, sorted like [`find_moves`].
pub fn find_inverse_moves(p: &PipeDream) -> Result<Vec<ChuteMove>> {
    let trace = p.trace();
    trace.crossing_map()?;
    let n = p.n();
    let mut out = Vec::new();
    for top in 1..n {
        for left in 1..=n - top {
            if p.tile(top, left) != Tile::Bump {
                continue;
            }
            let mut bottom = top + 1;
            while p.contains_box(bottom, left) && p.tile(bottom, left) == Tile::Cross {
                for right in left + 1.. {
                    if !p.contains_box(bottom, right)
                        || !column_crosses(p, right, top + 1..=bottom - 1)
                    {
                        break;
                    }
                    let (t, b) = (p.tile(top, right), p.tile(bottom, right));
                    if t == Tile::Cross && b == Tile::Cross {
                        continue;
                    }
                    if t == Tile::Bump && is_turn(b) {
                        let rect = Rect::new(top, bottom, left, right);
                        out.push(ChuteMove {
                            rect,
                            pipes: crossing_pipes(&trace, rect.sw()),
                        });
                    }
                    break;
                }
                bottom += 1;
            }
        }
    }
    out.sort_by_key(|m| (m.rect.top, m.rect.left, m.rect.bottom, m.rect.right));
    Ok(out)
}

/// `C_{i,j}(p)`.
pub fn apply(p: &PipeDream, m: &ChuteMove) -> Result<PipeDream> {
    let rect = m.rect;
    if !matches_pattern(p, &rect) {
        return Err(Error::NotApplicable(format!(
            "{rect} does not have the chute pattern"
        )));
    }
    let trace = p.trace();
    trace.crossing_map()?;
    let pipes = crossing_pipes(&trace, rect.ne());
    if pipes != m.pipes {
        return Err(Error::NotApplicable(format!(
            "pipes {:?} cross at NE, move names {:?}",
            pipes, m.pipes
        )));
    }
    let mut out = p.clone();
    out.set(rect.sw().0, rect.sw().1, Tile::Cross);
    out.set(rect.ne().0, rect.ne().1, Tile::Bump);
    Ok(out)
}

/// Undoes `m`, returning the dream that `m` carries to `p`.
pub fn inverse_apply(p: &PipeDream, m: &ChuteMove) -> Result<PipeDream> {
    let rect = m.rect;
    if !matches_inverse_pattern(p, &rect) {
        return Err(Error::NotApplicable(format!(
            "{rect} does not have the undo pattern"
        )));
    }
    let trace = p.trace();
    trace.crossing_map()?;
    let pipes = crossing_pipes(&trace, rect.sw());
    if pipes != m.pipes {
        return Err(Error::NotApplicable(format!(
            "pipes {:?} cross at SW, move names {:?}",
            pipes, m.pipes
        )));
    }
    let mut out = p.clone();
    out.set(rect.sw().0, rect.sw().1, Tile::Bump);
    out.set(rect.ne().0, rect.ne().1, Tile::Cross);
    Ok(out)
}

/// Pipes running straight up through `R`, i.e. through its interior columns.
pub fn vertical_pipes(p: &PipeDream, rect: &Rect) -> Vec<usize> {
    let trace = p.trace();
    let mut y: Vec<usize> = (rect.left + 1..rect.right)
        .map(|c| {
            trace
                .vertical(rect.bottom, c)
                .expect("interior box has a vertical pipe")
        })
        .collect();
    y.sort_unstable();
    y
}

/// The tableau side of one chute move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IncrementCorrespondence {
    pub x0: usize,
    pub y0: usize,
    /// Pipes crossing vertically through the rectangle.
    pub y: Vec<usize>,
    /// Boxes incremented by the move.
    pub boxes: Vec<Cell>,
    pub p0: u32,
    pub q0: u32,
    pub before: StairTableau,
    pub after: StairTableau,
}

/// Checks that the move acts on `Θ` as the increment of
/// `B = {(x0,y0)} ∪ {(x0,y) : y ∈ Y}`, with the entries of rows `x0` and
/// `y0` exchanged as predicted. Any failure is a theorem violation.
pub fn check_increment_correspondence(
    p: &PipeDream,
    m: &ChuteMove,
) -> Result<IncrementCorrespondence> {
    let after_dream = apply(p, m)?;
    let t1 = p.theta()?;
    let t2 = after_dream.theta()?;
    let (x0, y0) = m.pipes;
    let y = vertical_pipes(p, &m.rect);
    let fail = |what: String| Err(Error::TheoremViolation(format!("move {m:?}: {what}")));

    let p0 = t1.get(x0, y0);
    let mut q0 = p0 + 1;
    while t1.appears_below(q0, x0, y0) {
        q0 += 1;
    }
    let mut boxes = vec![(x0, y0)];
    for &yy in &y {
        if yy <= y0 {
            return fail(format!("vertical pipe {yy} not right of column {y0}"));
        }
        boxes.push((x0, yy));
    }
    let multiset: Multiset = boxes.iter().map(|&b| (b, 1)).collect();
    let predicted = increment_multiset(&t1, &multiset)?;
    if predicted != t2 {
        return fail(format!(
            "increment predicts {predicted:?}, move gives {t2:?}"
        ));
    }
    for &yy in &y {
        let got = [
            t1.get(x0, yy),
            t2.get(y0, yy),
            t2.get(x0, yy),
            t1.get(y0, yy),
        ];
        if got != [p0, p0, q0, q0] {
            return fail(format!(
                "column {yy}: entries {got:?}, expected p0={p0}, q0={q0}"
            ));
        }
    }
    if t1.column_contains(y0, q0) {
        return fail(format!("q0={q0} already in column {y0}"));
    }
    Ok(IncrementCorrespondence {
        x0,
        y0,
        y,
        boxes,
        p0,
        q0,
        before: t1,
        after: t2,
    })
}
