//! Pipe dreams on the staircase `(n, n-1, .., 1)`.
//!
//! Rows are numbered `1..=n` top to bottom and columns `1..=n` left to right;
//! box `(r, c)` exists when `r + c <= n + 1`. Boxes with `r + c = n + 1` hold
//! elbows. Pipe `i` enters from the west in row `i`; reading the pipe labels
//! along the north edge from left to right gives the wiring permutation.
//!
//! ASCII rendering uses one glyph per box: `+` for a cross, `)` for a bump
//! (the pair of elbows) and `/` for a boundary elbow. The header line lists the
//! pipe leaving each column at the top; the left margin lists the pipe
//! entering each row.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::tableaux::StairTableau;

/// Variant order matches the serialized characters `B < C < E`, so the
/// derived order on dreams is the lexicographic order of their row strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tile {
    Bump,
    Cross,
    Elbow,
}

impl Tile {
    pub fn to_char(self) -> char {
        match self {
            Tile::Bump => 'B',
            Tile::Cross => 'C',
            Tile::Elbow => 'E',
        }
    }

    pub fn from_char(c: char) -> Option<Tile> {
        match c {
            'B' => Some(Tile::Bump),
            'C' => Some(Tile::Cross),
            'E' => Some(Tile::Elbow),
            _ => None,
        }
    }

    fn glyph(self) -> char {
        match self {
            Tile::Bump => ')',
            Tile::Cross => '+',
            Tile::Elbow => '/',
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "PipeDreamDoc", into = "PipeDreamDoc")]
pub struct PipeDream {
    n: usize,
    // rows concatenated, row r has n + 1 - r boxes
    tiles: Vec<Tile>,
}

/// JSON form: `{"n": 3, "rows": ["CBE", "BE", "E"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PipeDreamDoc {
    pub n: usize,
    pub rows: Vec<String>,
}

impl TryFrom<PipeDreamDoc> for PipeDream {
    type Error = Error;

    fn try_from(doc: PipeDreamDoc) -> Result<Self> {
        PipeDream::from_rows(doc.n, &doc.rows)
    }
}

impl From<PipeDream> for PipeDreamDoc {
    fn from(p: PipeDream) -> Self {
        PipeDreamDoc {
            n: p.n,
            rows: p.row_strings(),
        }
    }
}

/// Where two pipes cross.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingRecord {
    pub pipe_lo: usize,
    pub pipe_hi: usize,
    pub row: usize,
    pub col: usize,
}

/// Result of routing every pipe through a dream.
#[derive(Clone, Debug)]
pub struct Trace {
    pub wiring: Permutation,
    /// Every cross tile, in row-major order.
    pub crossings: Vec<CrossingRecord>,
    n: usize,
    // per box: label of the pipe entering from the west / from the south, 0 if none
    horizontal: Vec<usize>,
    vertical: Vec<usize>,
}

impl Trace {
    fn idx(&self, r: usize, c: usize) -> usize {
        box_index(self.n, r, c)
    }

    /// Pipe entering box `(r, c)` from the west.
    pub fn horizontal(&self, r: usize, c: usize) -> Option<usize> {
        Some(self.horizontal[self.idx(r, c)]).filter(|&p| p != 0)
    }

    /// Pipe entering box `(r, c)` from the south.
    pub fn vertical(&self, r: usize, c: usize) -> Option<usize> {
        Some(self.vertical[self.idx(r, c)]).filter(|&p| p != 0)
    }

    /// Columns of the boxes in row `r` touched by `pipe`, left to right.
    pub fn boxes_in_row(&self, pipe: usize, r: usize) -> Vec<usize> {
        (1..=self.n + 1 - r)
            .filter(|&c| {
                let k = self.idx(r, c);
                self.horizontal[k] == pipe || self.vertical[k] == pipe
            })
            .collect()
    }

    /// Crossing positions keyed by `(pipe_lo, pipe_hi)`; fails if some pair
    /// crosses twice.
    pub fn crossing_map(&self) -> Result<HashMap<(usize, usize), (usize, usize)>> {
        let mut map = HashMap::with_capacity(self.crossings.len());
        for c in &self.crossings {
            if map.insert((c.pipe_lo, c.pipe_hi), (c.row, c.col)).is_some() {
                return Err(Error::NotReduced(c.pipe_lo, c.pipe_hi));
            }
        }
        Ok(map)
    }
}

#[inline]
fn row_offset(n: usize, r: usize) -> usize {
    (r - 1) * (n + 1) - (r - 1) * r / 2
}

#[inline]
fn box_index(n: usize, r: usize, c: usize) -> usize {
    debug_assert!(
        r >= 1 && c >= 1 && r + c <= n + 1,
        "box ({r},{c}) outside staircase {n}"
    );
    row_offset(n, r) + c - 1
}

impl PipeDream {
    /// Every interior box a bump; the wiring is the identity.
    pub fn all_bump(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        let mut tiles = Vec::with_capacity(n * (n + 1) / 2);
        for r in 1..=n {
            for c in 1..=n + 1 - r {
                tiles.push(if r + c == n + 1 {
                    Tile::Elbow
                } else {
                    Tile::Bump
                });
            }
        }
        PipeDream { n, tiles }
    }

    /// Left-justified filling: row `i` holds crosses in columns `1..=c(i)`, where
    /// `c` is the Lehmer code of `w⁻¹`. Its wiring is `w`.
    pub fn seed(w: &Permutation) -> PipeDream {
        let code = w.inverse().lehmer_code();
        let crosses: Vec<(usize, usize)> = code
            .iter()
            .enumerate()
            .flat_map(|(k, &len)| (1..=len).map(move |c| (k + 1, c)))
            .collect();
        PipeDream::with_crosses(w.n(), &crosses).expect("Lehmer code fits the staircase")
    }

    /// Crosses at the listed boxes, bumps elsewhere.
    pub fn with_crosses(n: usize, crosses: &[(usize, usize)]) -> Result<Self> {
        let mut p = PipeDream::all_bump(n);
        for &(r, c) in crosses {
            if r == 0 || c == 0 || r + c > n {
                return Err(Error::InvalidDream(format!(
                    "({r},{c}) is not an interior box"
                )));
            }
            p.set(r, c, Tile::Cross);
        }
        Ok(p)
    }

    pub fn from_rows<S: AsRef<str>>(n: usize, rows: &[S]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDream("degree must be positive".into()));
        }
        if rows.len() != n {
            return Err(Error::InvalidDream(format!(
                "expected {n} rows, found {}",
                rows.len()
            )));
        }
        let mut tiles = Vec::with_capacity(n * (n + 1) / 2);
        for (k, row) in rows.iter().enumerate() {
            let r = k + 1;
            let row = row.as_ref();
            if row.chars().count() != n + 1 - r {
                return Err(Error::InvalidDream(format!(
                    "row {r} has length {}, expected {}",
                    row.chars().count(),
                    n + 1 - r
                )));
            }
            for (j, ch) in row.chars().enumerate() {
                let c = j + 1;
                let tile = Tile::from_char(ch)
                    .ok_or_else(|| Error::InvalidDream(format!("bad tile {ch:?} at ({r},{c})")))?;
                let boundary = r + c == n + 1;
                if boundary != (tile == Tile::Elbow) {
                    return Err(Error::InvalidDream(format!(
                        "elbows must fill exactly the boundary; box ({r},{c}) holds {tile:?}"
                    )));
                }
                tiles.push(tile);
            }
        }
        Ok(PipeDream { n, tiles })
    }

    pub fn row_strings(&self) -> Vec<String> {
        (1..=self.n)
            .map(|r| {
                (1..=self.n + 1 - r)
                    .map(|c| self.tile(r, c).to_char())
                    .collect()
            })
            .collect()
    }

    pub fn to_doc(&self) -> PipeDreamDoc {
        self.clone().into()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn tile(&self, r: usize, c: usize) -> Tile {
        self.tiles[box_index(self.n, r, c)]
    }

    /// Caller keeps elbows on the boundary only.
    pub(crate) fn set(&mut self, r: usize, c: usize, tile: Tile) {
        let k = box_index(self.n, r, c);
        self.tiles[k] = tile;
    }

    pub fn contains_box(&self, r: usize, c: usize) -> bool {
        r >= 1 && c >= 1 && r + c <= self.n + 1
    }

    pub fn cross_count(&self) -> usize {
        self.tiles.iter().filter(|&&t| t == Tile::Cross).count()
    }

    /// Number of crosses in each row, row 1 first.
    pub fn crosses_per_row(&self) -> Vec<usize> {
        (1..=self.n)
            .map(|r| {
                (1..=self.n + 1 - r)
                    .filter(|&c| self.tile(r, c) == Tile::Cross)
                    .count()
            })
            .collect()
    }

    /// Routes all pipes once, recording the wiring and every crossing.
    pub fn trace(&self) -> Trace {
        let n = self.n;
        let len = self.tiles.len();
        let mut horizontal = vec![0usize; len];
        let mut vertical = vec![0usize; len];
        let mut top = vec![0usize; n];
        for pipe in 1..=n {
            let (mut r, mut c) = (pipe, 1usize);
            let mut from_west = true;
            loop {
                let k = box_index(n, r, c);
                if from_west {
                    horizontal[k] = pipe;
                } else {
                    vertical[k] = pipe;
                }
                // Cross passes straight; bump and elbow send west->north, south->east.
                let go_north = match self.tiles[k] {
                    Tile::Cross => !from_west,
                    Tile::Bump | Tile::Elbow => from_west,
                };
                if go_north {
                    if r == 1 {
                        top[c - 1] = pipe;
                        break;
                    }
                    r -= 1;
                    from_west = false;
                } else {
                    c += 1;
                    from_west = true;
                }
            }
        }
        let mut crossings = Vec::new();
        for r in 1..=n {
            for c in 1..=n + 1 - r {
                let k = box_index(n, r, c);
                if self.tiles[k] == Tile::Cross {
                    let (a, b) = (horizontal[k], vertical[k]);
                    crossings.push(CrossingRecord {
                        pipe_lo: a.min(b),
                        pipe_hi: a.max(b),
                        row: r,
                        col: c,
                    });
                }
            }
        }
        let wiring = Permutation::new(top).expect("tracing always yields a permutation");
        Trace {
            wiring,
            crossings,
            n,
            horizontal,
            vertical,
        }
    }

    pub fn wiring(&self) -> Permutation {
        self.trace().wiring
    }

    pub fn is_reduced(&self) -> bool {
        self.trace().crossing_map().is_ok()
    }

    /// Tableau with the crossing row of pipes `i < j` in box `(i, j)`, zero
    /// where the pipes do not cross.
    pub fn theta(&self) -> Result<StairTableau> {
        let map = self.trace().crossing_map()?;
        let mut t = StairTableau::zeros(self.n);
        for ((i, j), (row, _)) in map {
            t.set(i, j, row as u32);
        }
        Ok(t)
    }

    /// Reflection across the main diagonal.
    pub fn transpose(&self) -> PipeDream {
        let mut out = self.clone();
        for r in 1..=self.n {
            for c in 1..=self.n + 1 - r {
                out.set(r, c, self.tile(c, r));
            }
        }
        out
    }

    /// Removes pipe `n`: in each row the rightmost box touched by pipe `n` is
    /// deleted and the boxes to its right shift one place left.
    pub fn hat_delete(&self) -> Result<PipeDream> {
        let n = self.n;
        if n < 2 {
            return Err(Error::InvalidDream(
                "cannot delete a pipe from degree 1".into(),
            ));
        }
        let trace = self.trace();
        trace.crossing_map()?;
        let mut rows = Vec::with_capacity(n - 1);
        for r in 1..n {
            let touched = trace.boxes_in_row(n, r);
            let drop = *touched.last().expect("pipe n crosses every row");
            let mut row: Vec<Tile> = (1..=n + 1 - r)
                .filter(|&c| c != drop)
                .map(|c| self.tile(r, c))
                .collect();
            let last = row.last_mut().expect("rows below n keep a box");
            match *last {
                Tile::Bump | Tile::Elbow => *last = Tile::Elbow,
                Tile::Cross => {
                    return Err(Error::InvalidDream(format!(
                        "deleting pipe {n} leaves a cross on the boundary of row {r}"
                    )))
                }
            }
            rows.push(row.into_iter().map(Tile::to_char).collect::<String>());
        }
        PipeDream::from_rows(n - 1, &rows)
    }

    /// Doubles the staircase: box `(i, j)` of `self` (with `i + j <= n`) is copied
    /// to box `(n+1-j, n+1-i)`; every other interior box is a bump.
    pub fn triforce_embed(&self) -> Result<PipeDream> {
        self.trace().crossing_map()?;
        let n = self.n;
        let mut out = PipeDream::all_bump(2 * n);
        for i in 1..=n {
            for j in 1..=n {
                if i + j <= n {
                    out.set(n + 1 - j, n + 1 - i, self.tile(i, j));
                }
            }
        }
        Ok(out)
    }

    /// Lehmer entry of the transpose at box `(w⁻¹(j), w⁻¹(i))`, computed on
    /// `self` as `col(i,j) - |D| - 1`, where `D` holds the pipes `w(k)` with
    /// `k < w⁻¹(j)` that cross pipe `i` left of the `(i,j)` crossing.
    pub fn phi_transpose_entry(&self, i: usize, j: usize) -> Result<u32> {
        let trace = self.trace();
        let map = trace.crossing_map()?;
        let w = &trace.wiring;
        if !(i < j && j <= self.n) {
            return Err(Error::NotInversion(i, j));
        }
        let &(_, col) = map.get(&(i, j)).ok_or(Error::NotInversion(i, j))?;
        let winv = w.inverse();
        let d = (1..winv.at(j))
            .map(|k| w.at(k))
            .filter(|&l| {
                map.get(&(i.min(l), i.max(l)))
                    .is_some_and(|&(_, c)| c < col)
            })
            .count();
        Ok((col - d - 1) as u32)
    }

    /// Lehmer entry at `(i, j)` computed as `row(i,j) - |A| - 1`, where `A`
    /// holds the pipes `l < i` crossing pipe `j` above the `(i,j)` crossing.
    pub fn phi_row_entry(&self, i: usize, j: usize) -> Result<u32> {
        let map = self.trace().crossing_map()?;
        if !(i < j && j <= self.n) {
            return Err(Error::NotInversion(i, j));
        }
        let &(row, _) = map.get(&(i, j)).ok_or(Error::NotInversion(i, j))?;
        let a = (1..i)
            .filter(|&l| map.get(&(l, j)).is_some_and(|&(r, _)| r < row))
            .count();
        Ok((row - a - 1) as u32)
    }

    pub fn render_ascii(&self) -> String {
        let trace = self.trace();
        let mut out = String::new();
        let width = if self.n > 9 { 3 } else { 2 };
        out.push_str(&" ".repeat(width + 1));
        for c in 1..=self.n {
            out.push_str(&format!("{:>w$}", trace.wiring.at(c), w = width));
        }
        out.push('\n');
        for r in 1..=self.n {
            out.push_str(&format!("{:>w$} ", r, w = width));
            for c in 1..=self.n + 1 - r {
                out.push_str(&format!("{:>w$}", self.tile(r, c).glyph(), w = width));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Debug for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PipeDream({})", self.row_strings().join("/"))
    }
}

impl fmt::Display for PipeDream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_ascii())
    }
}
