//! Tableaux on the reflected staircase: inversions tableaux, Lehmer forms and
//! the increment calculus.
//!
//! Boxes are pairs `(i, j)` with `1 <= i < j <= n`; `i` is the row (counted
//! bottom to top) and `j` the column (`2..=n`, left to right). An entry
//! "below" box `(i, j)` lives in a row `i' < i` of the same column.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A box `(row, column)` of the reflected staircase.
pub type Cell = (usize, usize);

/// Boxes with multiplicities.
pub type Multiset = BTreeMap<Cell, u32>;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StairTableau {
    n: usize,
    // dense n x n, only i < j used
    entries: Vec<u32>,
}

impl StairTableau {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "degree must be positive");
        StairTableau {
            n,
            entries: vec![0; n * n],
        }
    }

    /// `rows[i - 1]` lists the entries of boxes `(i, i+1) .. (i, n)`.
    pub fn from_rows(n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTableau("degree must be positive".into()));
        }
        if rows.len() != n - 1 {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, found {}",
                n - 1,
                rows.len()
            )));
        }
        let mut t = StairTableau::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            let i = r + 1;
            if row.len() != n - i {
                return Err(Error::InvalidTableau(format!(
                    "row {i} has {} entries, expected {}",
                    row.len(),
                    n - i
                )));
            }
            for (c, &v) in row.iter().enumerate() {
                t.set(i, i + 1 + c, v);
            }
        }
        Ok(t)
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (1..self.n)
            .map(|i| (i + 1..=self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        debug_assert!(
            1 <= i && i < j && j <= self.n,
            "box ({i},{j}) outside staircase"
        );
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!(
            1 <= i && i < j && j <= self.n,
            "box ({i},{j}) outside staircase"
        );
        self.entries[(i - 1) * self.n + (j - 1)] = v;
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (2..=self.n).flat_map(|j| (1..j).map(move |i| (i, j)))
    }

    fn check_cell(&self, i: usize, j: usize) -> Result<()> {
        if i >= 1 && i < j && j <= self.n {
            Ok(())
        } else {
            Err(Error::Index(format!(
                "box ({i},{j}) outside staircase of degree {}",
                self.n
            )))
        }
    }

    /// Whether `k` appears strictly below box `(i, j)`.
    pub fn appears_below(&self, k: u32, i: usize, j: usize) -> bool {
        (1..i).any(|r| self.get(r, j) == k)
    }

    pub fn column_contains(&self, j: usize, k: u32) -> bool {
        (1..j).any(|r| self.get(r, j) == k)
    }

    /// Componentwise comparison.
    pub fn le(&self, other: &StairTableau) -> bool {
        self.n == other.n && self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }
}

/// Serialized as its rows, row 1 first.
impl Serialize for StairTableau {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(s)
    }
}

impl fmt::Debug for StairTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StairTableau{:?}", self.rows())
    }
}

impl fmt::Display for StairTableau {
    /// Top row first, columns aligned as in the reflected staircase.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in (1..self.n).rev() {
            let pad = "   ".repeat(i - 1);
            write!(f, "{pad}")?;
            for j in i + 1..=self.n {
                write!(f, "{:>3}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Lehmer form of a column-injective tableau; meaningful only on the
/// inversions diagram of `w` (zero elsewhere).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LehmerTableau {
    pub w: Permutation,
    pub entries: StairTableau,
}

impl LehmerTableau {
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries.get(i, j)
    }

    pub fn le(&self, other: &LehmerTableau) -> bool {
        self.entries.le(&other.entries)
    }

    /// Componentwise maximum.
    pub fn max(&self, other: &LehmerTableau) -> LehmerTableau {
        let mut out = self.clone();
        for (i, j) in self.w.inversions() {
            out.entries.set(i, j, self.get(i, j).max(other.get(i, j)));
        }
        out
    }

    pub fn to_doc(&self) -> LehmerDoc {
        let n = self.w.n();
        LehmerDoc {
            n,
            w: self.w.clone(),
            rows: (1..n)
                .map(|i| {
                    (i + 1..=n)
                        .map(|j| self.w.is_inversion(i, j).then(|| self.get(i, j)))
                        .collect()
                })
                .collect(),
        }
    }
}

/// JSON form `{"n", "w", "rows"}` of a tableau; row 1 (bottom) first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableauDoc {
    pub n: usize,
    pub w: Permutation,
    pub rows: Vec<Vec<u32>>,
}

impl TableauDoc {
    pub fn new(t: &StairTableau, w: &Permutation) -> Self {
        TableauDoc {
            n: t.n(),
            w: w.clone(),
            rows: t.rows(),
        }
    }

    pub fn tableau(&self) -> Result<StairTableau> {
        if self.w.n() != self.n {
            return Err(Error::InvalidTableau("degree of w does not match n".into()));
        }
        StairTableau::from_rows(self.n, &self.rows)
    }
}

/// Lehmer tableau JSON; `null` marks boxes outside the inversions diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LehmerDoc {
    pub n: usize,
    pub w: Permutation,
    pub rows: Vec<Vec<Option<u32>>>,
}

impl LehmerDoc {
    pub fn lehmer(&self) -> Result<LehmerTableau> {
        if self.w.n() != self.n {
            return Err(Error::InvalidTableau("degree of w does not match n".into()));
        }
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|v| v.unwrap_or(0)).collect())
            .collect();
        let entries = StairTableau::from_rows(self.n, &rows)?;
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.iter().enumerate() {
                let (i, j) = (r + 1, r + 2 + c);
                if v.is_some() != self.w.is_inversion(i, j) {
                    return Err(Error::InvalidTableau(format!(
                        "box ({i},{j}): null must mark exactly the non-inversions"
                    )));
                }
            }
        }
        Ok(LehmerTableau {
            w: self.w.clone(),
            entries,
        })
    }
}

/// First violated inversions-tableau condition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DegreeMismatch {
        tableau: usize,
        permutation: usize,
    },
    /// Zero inside the inversions diagram, or nonzero outside it.
    ZeroPattern {
        cell: Cell,
        entry: u32,
    },
    RowBound {
        cell: Cell,
        entry: u32,
    },
    ColumnRepeat {
        column: usize,
        rows: (usize, usize),
        value: u32,
    },
    Unbalanced {
        i: usize,
        j: usize,
        k: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DegreeMismatch {
                tableau,
                permutation,
            } => {
                write!(
                    f,
                    "tableau degree {tableau} but permutation degree {permutation}"
                )
            }
            Violation::ZeroPattern { cell, entry } => {
                write!(
                    f,
                    "box {cell:?} has entry {entry} against the inversion pattern"
                )
            }
            Violation::RowBound { cell, entry } => {
                write!(f, "box {cell:?} has entry {entry} exceeding its row index")
            }
            Violation::ColumnRepeat {
                column,
                rows,
                value,
            } => {
                write!(
                    f,
                    "column {column} repeats {value} in rows {} and {}",
                    rows.0, rows.1
                )
            }
            Violation::Unbalanced { i, j, k } => write!(f, "shape ({i},{j},{k}) is unbalanced"),
        }
    }
}

/// Whether `t(i,k)` lies weakly between `t(i,j)` and `t(j,k)`.
pub fn is_balanced_l(t: &StairTableau, i: usize, j: usize, k: usize) -> Result<bool> {
    if !(1 <= i && i < j && j < k && k <= t.n()) {
        return Err(Error::Index(format!("({i},{j},{k}) is not a valid shape")));
    }
    Ok(balanced_l(t, i, j, k))
}

#[inline]
fn balanced_l(t: &StairTableau, i: usize, j: usize, k: usize) -> bool {
    let (a, b, c) = (t.get(i, j), t.get(i, k), t.get(j, k));
    a.min(c) <= b && b <= a.max(c)
}

/// Entries of the hook of `(i, j)`: the boxes above it in column `j`, to its
/// left in row `i`, and the box itself. Always `2(j - i) - 1` values.
pub fn hook_entries(t: &StairTableau, i: usize, j: usize) -> Result<Vec<u32>> {
    t.check_cell(i, j)?;
    let mut out: Vec<u32> = (i + 1..j).map(|r| t.get(r, j)).collect();
    out.extend((i + 1..j).map(|c| t.get(i, c)));
    out.push(t.get(i, j));
    Ok(out)
}

/// Whether `t(i,j)` is the median of its hook.
pub fn is_balanced_hook(t: &StairTableau, i: usize, j: usize) -> Result<bool> {
    let mut entries = hook_entries(t, i, j)?;
    assert!(entries.len() % 2 == 1, "hooks have odd size");
    entries.sort_unstable();
    Ok(entries[entries.len() / 2] == t.get(i, j))
}

pub fn is_balanced(t: &StairTableau) -> bool {
    let n = t.n();
    (1..=n).all(|i| (i + 1..=n).all(|j| (j + 1..=n).all(|k| balanced_l(t, i, j, k))))
}

pub fn all_hooks_balanced(t: &StairTableau) -> bool {
    t.cells().all(|(i, j)| is_balanced_hook(t, i, j).unwrap())
}

/// Balance via shapes, cross-checked against balance via hooks.
pub fn balance_equivalence_check(t: &StairTableau) -> Result<bool> {
    let by_shapes = is_balanced(t);
    let by_hooks = all_hooks_balanced(t);
    if by_shapes != by_hooks {
        return Err(Error::TheoremViolation(format!(
            "shape balance {by_shapes} but hook balance {by_hooks} for {t:?}"
        )));
    }
    Ok(by_shapes)
}

/// Accepts iff `t` is an inversions tableau for `w`. The first violation is
/// reported in a fixed scan order: boxes by column left to right and row
/// bottom to top (zero pattern, row bound, column repeat), then shapes in
/// lexicographic order.
pub fn validate_inversions_tableau(
    t: &StairTableau,
    w: &Permutation,
) -> std::result::Result<(), Violation> {
    let n = t.n();
    if w.n() != n {
        return Err(Violation::DegreeMismatch {
            tableau: n,
            permutation: w.n(),
        });
    }
    let winv = w.inverse();
    for j in 2..=n {
        for i in 1..j {
            let e = t.get(i, j);
            if (e != 0) != (winv.at(i) > winv.at(j)) {
                return Err(Violation::ZeroPattern {
                    cell: (i, j),
                    entry: e,
                });
            }
            if e as usize > i {
                return Err(Violation::RowBound {
                    cell: (i, j),
                    entry: e,
                });
            }
            if e != 0 {
                if let Some(r) = (1..i).find(|&r| t.get(r, j) == e) {
                    return Err(Violation::ColumnRepeat {
                        column: j,
                        rows: (r, i),
                        value: e,
                    });
                }
            }
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                if !balanced_l(t, i, j, k) {
                    return Err(Violation::Unbalanced { i, j, k });
                }
            }
        }
    }
    Ok(())
}

pub fn is_inversions_tableau(t: &StairTableau, w: &Permutation) -> bool {
    validate_inversions_tableau(t, w).is_ok()
}

/// Zero pattern plus distinct nonzero entries per column.
pub fn check_column_injective(
    t: &StairTableau,
    w: &Permutation,
) -> std::result::Result<(), Violation> {
    let n = t.n();
    if w.n() != n {
        return Err(Violation::DegreeMismatch {
            tableau: n,
            permutation: w.n(),
        });
    }
    let winv = w.inverse();
    for j in 2..=n {
        for i in 1..j {
            let e = t.get(i, j);
            let inversion = winv.at(i) > winv.at(j);
            if (e != 0) != inversion {
                return Err(Violation::ZeroPattern {
                    cell: (i, j),
                    entry: e,
                });
            }
            if e != 0 {
                if let Some(r) = (1..i).find(|&r| t.get(r, j) == e) {
                    return Err(Violation::ColumnRepeat {
                        column: j,
                        rows: (r, i),
                        value: e,
                    });
                }
            }
        }
    }
    Ok(())
}

fn violation_error(v: Violation) -> Error {
    match v {
        Violation::ColumnRepeat { column, value, .. } => {
            Error::NotColumnInjective { column, value }
        }
        other => Error::InvalidTableau(other.to_string()),
    }
}

/// Entry `(i,j)` counts the `k` in `1 .. T(i,j)` that do not appear below `(i,j)`.
pub fn lehmer_form(t: &StairTableau, w: &Permutation) -> Result<LehmerTableau> {
    check_column_injective(t, w).map_err(violation_error)?;
    Ok(lehmer_form_unchecked(t, w))
}

/// Lehmer form without the column-injectivity check.
pub fn lehmer_form_unchecked(t: &StairTableau, w: &Permutation) -> LehmerTableau {
    let n = t.n();
    let mut out = StairTableau::zeros(n);
    for j in 2..=n {
        for i in 1..j {
            let e = t.get(i, j);
            if e == 0 {
                continue;
            }
            let below = (1..i).filter(|&r| {
                let v = t.get(r, j);
                v != 0 && v < e
            });
            out.set(i, j, e - 1 - below.count() as u32);
        }
    }
    LehmerTableau {
        w: w.clone(),
        entries: out,
    }
}

/// Rebuilds the column-injective tableau with the given Lehmer form, each
/// column from the bottom up: the entry is the `(L + 1)`-th positive integer
/// not already used below it.
pub fn lehmer_form_inverse(l: &LehmerTableau) -> StairTableau {
    let n = l.w.n();
    let winv = l.w.inverse();
    let mut t = StairTableau::zeros(n);
    for j in 2..=n {
        let mut used: Vec<u32> = Vec::new();
        for i in 1..j {
            if winv.at(i) <= winv.at(j) {
                continue;
            }
            let mut remaining = l.get(i, j);
            let mut v = 1u32;
            loop {
                if !used.contains(&v) {
                    if remaining == 0 {
                        break;
                    }
                    remaining -= 1;
                }
                v += 1;
            }
            t.set(i, j, v);
            used.push(v);
        }
    }
    t
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IncrementKind {
    Pure,
    Trade,
}

/// Increments box `(i, j)`: with `a = T(i,j)` and `b` the least integer above
/// `a` not appearing below the box, either replace `a` by `b` (pure) or swap
/// `a` and `b` within column `j` (trade).
pub fn increment(t: &StairTableau, cell: Cell) -> Result<(StairTableau, IncrementKind)> {
    let (i, j) = cell;
    t.check_cell(i, j)?;
    let a = t.get(i, j);
    if a == 0 {
        return Err(Error::OutsideDiagram(cell));
    }
    let mut b = a + 1;
    while t.appears_below(b, i, j) {
        b += 1;
    }
    let mut out = t.clone();
    match (i + 1..j).find(|&r| t.get(r, j) == b) {
        Some(r) => {
            out.set(r, j, a);
            out.set(i, j, b);
            Ok((out, IncrementKind::Trade))
        }
        None => {
            out.set(i, j, b);
            Ok((out, IncrementKind::Pure))
        }
    }
}

/// Increments every box of `m` with its multiplicity.
pub fn increment_multiset(t: &StairTableau, m: &Multiset) -> Result<StairTableau> {
    let mut cur = t.clone();
    for (&cell, &mult) in m {
        for _ in 0..mult {
            cur = increment(&cur, cell)?.0;
        }
    }
    Ok(cur)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Delta {
    Multiset(Multiset),
    Incomparable,
}

/// The multiset `M` with `↑_M T = T'`, read off as the difference of Lehmer forms.
pub fn delta_multiset(t: &StairTableau, t2: &StairTableau, w: &Permutation) -> Result<Delta> {
    let l1 = lehmer_form(t, w)?;
    let l2 = lehmer_form(t2, w)?;
    Ok(lehmer_delta(&l1, &l2))
}

pub fn lehmer_delta(l1: &LehmerTableau, l2: &LehmerTableau) -> Delta {
    let mut m = Multiset::new();
    for (i, j) in l1.w.inversions() {
        let (a, b) = (l1.get(i, j), l2.get(i, j));
        if b < a {
            return Delta::Incomparable;
        }
        if b > a {
            m.insert((i, j), b - a);
        }
    }
    Delta::Multiset(m)
}

/// Drops the columns to the right of `j`.
pub fn restrict(t: &StairTableau, j: usize) -> Result<StairTableau> {
    if j < 2 || j > t.n() {
        return Err(Error::Index(format!(
            "restriction column {j} outside 2..={}",
            t.n()
        )));
    }
    let mut out = StairTableau::zeros(j);
    for c in 2..=j {
        for r in 1..c {
            out.set(r, c, t.get(r, c));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w361542() -> Permutation {
        "361542".parse().unwrap()
    }

    #[test]
    fn balanced_shape_examples() {
        let mut t = StairTableau::zeros(6);
        t.set(1, 4, 0);
        t.set(4, 6, 4);
        t.set(1, 6, 1);
        assert!(is_balanced_l(&t, 1, 4, 6).unwrap());
        t.set(2, 3, 2);
        t.set(3, 5, 0);
        t.set(2, 5, 2);
        assert!(is_balanced_l(&t, 2, 3, 5).unwrap());
        let z = StairTableau::zeros(6);
        assert!(is_balanced_l(&z, 1, 2, 3).unwrap());
        assert!(is_balanced_l(&z, 2, 1, 3).is_err());
        assert!(is_balanced_l(&z, 1, 2, 7).is_err());
    }

    #[test]
    fn hook_examples() {
        let mut t = StairTableau::zeros(6);
        for (c, v) in [
            ((2, 3), 2),
            ((2, 4), 1),
            ((2, 5), 2),
            ((2, 6), 2),
            ((4, 6), 4),
            ((5, 6), 3),
        ] {
            t.set(c.0, c.1, v);
        }
        let mut h = hook_entries(&t, 2, 6).unwrap();
        h.sort_unstable();
        assert_eq!(h, vec![0, 1, 2, 2, 2, 3, 4]);
        assert!(is_balanced_hook(&t, 2, 6).unwrap());
        // size-one hooks
        for i in 1..6 {
            assert!(is_balanced_hook(&t, i, i + 1).unwrap());
        }
        // corner 0 with hook {0,1,1}: median 1
        let mut u = StairTableau::zeros(3);
        u.set(1, 2, 1);
        u.set(2, 3, 1);
        assert!(!is_balanced_hook(&u, 1, 3).unwrap());
        assert!(is_balanced_hook(&u, 0, 3).is_err());
    }

    #[test]
    fn validator_paths() {
        let id = Permutation::identity(5);
        assert!(validate_inversions_tableau(&StairTableau::zeros(5), &id).is_ok());

        let w: Permutation = "4321".parse().unwrap();
        let mut t = StairTableau::zeros(4);
        for (i, j) in w.inversions() {
            t.set(i, j, 1);
        }
        // column 3 holds 1 twice
        assert_eq!(
            validate_inversions_tableau(&t, &w),
            Err(Violation::ColumnRepeat {
                column: 3,
                rows: (1, 2),
                value: 1
            })
        );
        let mut z = StairTableau::zeros(4);
        z.set(1, 2, 1);
        assert_eq!(
            validate_inversions_tableau(&z, &id_of(4)),
            Err(Violation::ZeroPattern {
                cell: (1, 2),
                entry: 1
            })
        );
        let w21: Permutation = "21".parse().unwrap();
        let mut r = StairTableau::zeros(2);
        r.set(1, 2, 2);
        assert_eq!(
            validate_inversions_tableau(&r, &w21),
            Err(Violation::RowBound {
                cell: (1, 2),
                entry: 2
            })
        );
        assert!(matches!(
            validate_inversions_tableau(&r, &id_of(3)),
            Err(Violation::DegreeMismatch { .. })
        ));
    }

    fn id_of(n: usize) -> Permutation {
        Permutation::identity(n)
    }

    #[test]
    fn unbalanced_witness() {
        let w: Permutation = "321".parse().unwrap();
        let t = StairTableau::from_rows(3, &[vec![1, 2], vec![1]]).unwrap();
        assert_eq!(
            validate_inversions_tableau(&t, &w),
            Err(Violation::RowBound {
                cell: (1, 3),
                entry: 2
            })
        );
        let w: Permutation = "1432".parse().unwrap();
        let u = StairTableau::from_rows(4, &[vec![0, 0, 0], vec![1, 2], vec![1]]).unwrap();
        assert_eq!(
            validate_inversions_tableau(&u, &w),
            Err(Violation::Unbalanced { i: 2, j: 3, k: 4 })
        );
    }

    #[test]
    fn lehmer_basic() {
        let id = id_of(4);
        let l = lehmer_form(&StairTableau::zeros(4), &id).unwrap();
        assert_eq!(l.entries, StairTableau::zeros(4));
        assert_eq!(lehmer_form_inverse(&l), StairTableau::zeros(4));

        let w: Permutation = "21".parse().unwrap();
        let mut t = StairTableau::zeros(2);
        t.set(1, 2, 1);
        assert_eq!(lehmer_form(&t, &w).unwrap().get(1, 2), 0);
        assert!(lehmer_form(&StairTableau::zeros(2), &w).is_err());
    }

    #[test]
    fn lehmer_rejects_repeats() {
        let w: Permutation = "4321".parse().unwrap();
        let t = StairTableau::from_rows(4, &[vec![1, 1, 1], vec![1, 2], vec![3]]).unwrap();
        assert_eq!(
            lehmer_form(&t, &w),
            Err(Error::NotColumnInjective {
                column: 3,
                value: 1
            })
        );
    }

    #[test]
    fn increment_examples() {
        // column 4 rows 1,2,3 = (1,3,2)
        let w = Permutation::longest(4);
        let mut t = StairTableau::zeros(4);
        for (i, j) in w.inversions() {
            t.set(i, j, i as u32);
        }
        t.set(1, 4, 1);
        t.set(2, 4, 3);
        t.set(3, 4, 2);
        let (u, kind) = increment(&t, (1, 4)).unwrap();
        assert_eq!(kind, IncrementKind::Trade);
        assert_eq!((u.get(1, 4), u.get(2, 4), u.get(3, 4)), (2, 3, 1));

        let w21: Permutation = "21".parse().unwrap();
        let mut s = StairTableau::zeros(2);
        s.set(1, 2, 1);
        let (s2, kind) = increment(&s, (1, 2)).unwrap();
        assert_eq!(kind, IncrementKind::Pure);
        assert_eq!(s2.get(1, 2), 2);
        assert_eq!(lehmer_form(&s2, &w21).unwrap().get(1, 2), 1);

        assert_eq!(
            increment(&StairTableau::zeros(3), (1, 2)),
            Err(Error::OutsideDiagram((1, 2)))
        );
        assert!(increment(&s, (2, 2)).is_err());
    }

    #[test]
    fn multiset_and_delta() {
        let w = Permutation::longest(3);
        let t = StairTableau::from_rows(3, &[vec![1, 1], vec![2]]).unwrap();
        assert_eq!(increment_multiset(&t, &Multiset::new()).unwrap(), t);
        assert_eq!(
            delta_multiset(&t, &t, &w).unwrap(),
            Delta::Multiset(Multiset::new())
        );
        let m: Multiset = [((1, 2), 2), ((1, 3), 1)].into_iter().collect();
        let u = increment_multiset(&t, &m).unwrap();
        assert_eq!(delta_multiset(&t, &u, &w).unwrap(), Delta::Multiset(m));
        assert_eq!(delta_multiset(&u, &t, &w).unwrap(), Delta::Incomparable);
    }

    #[test]
    fn restrict_examples() {
        let w = w361542();
        let mut t = StairTableau::zeros(6);
        for (i, j) in w.inversions() {
            t.set(i, j, 1);
        }
        assert_eq!(restrict(&t, 6).unwrap(), t);
        let r = restrict(&t, 4).unwrap();
        assert_eq!(r.n(), 4);
        assert_eq!(r.get(2, 4), t.get(2, 4));
        assert!(restrict(&t, 1).is_err());
        assert!(restrict(&t, 7).is_err());
    }

    #[test]
    fn doc_round_trip() {
        let w = w361542();
        let mut t = StairTableau::zeros(6);
        for (i, j) in w.inversions() {
            t.set(i, j, i as u32);
        }
        let doc = TableauDoc::new(&t, &w);
        let json = serde_json::to_string(&doc).unwrap();
        let back: TableauDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.tableau().unwrap(), t);

        let l = lehmer_form_unchecked(&t, &w);
        let ldoc = l.to_doc();
        assert_eq!(ldoc.rows[0][2], None); // (1,4) is not an inversion
        let json = serde_json::to_string(&ldoc).unwrap();
        let back: LehmerDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.lehmer().unwrap(), l);
    }
}
