//! Schubert polynomials, from pipe dreams and from divided differences.
//!
//! With pipe `i` entering row `i` and the wiring read along the top, the
//! cross-count generating function of `PD(w)` is the classical Schubert
//! polynomial of `w⁻¹`. [`schubert_oracle`] accounts for this so the two
//! computations can be compared directly.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::poset::ChutePoset;

/// Polynomial in `x1..xn` with integer coefficients; zero terms are never stored.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

fn overflow() -> Error {
    Error::TheoremViolation("integer overflow in polynomial arithmetic".into())
}

impl IntPolynomial {
    pub fn zero(n: usize) -> Self {
        IntPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(exponents: Vec<u32>, coeff: i64) -> Self {
        let mut p = IntPolynomial::zero(exponents.len());
        if coeff != 0 {
            p.terms.insert(exponents, coeff);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: i64) -> Result<()> {
        assert_eq!(exponents.len(), self.n, "exponent vector length");
        let slot = self.terms.entry(exponents).or_insert(0);
        *slot = slot.checked_add(coeff).ok_or_else(overflow)?;
        if *slot == 0 {
            self.terms.retain(|_, c| *c != 0);
        }
        Ok(())
    }

    pub fn sub(&self, other: &IntPolynomial) -> Result<IntPolynomial> {
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c.checked_neg().ok_or_else(overflow)?)?;
        }
        Ok(out)
    }

    /// Exchanges `x_r` and `x_{r+1}`.
    pub fn swap_vars(&self, r: usize) -> IntPolynomial {
        let terms = self
            .terms
            .iter()
            .map(|(e, &c)| {
                let mut e = e.clone();
                e.swap(r - 1, r);
                (e, c)
            })
            .collect();
        IntPolynomial { n: self.n, terms }
    }

    /// Exact quotient by `x_r - x_{r+1}`; fails if the division leaves a remainder.
    pub fn divide_by_difference(&self, r: usize) -> Result<IntPolynomial> {
        let mut rest = self.clone();
        let mut quotient = IntPolynomial::zero(self.n);
        // peel off a term of highest x_r degree each round
        while let Some((e, c)) = rest
            .terms
            .iter()
            .max_by_key(|(e, _)| (e[r - 1], (*e).clone()))
            .map(|(e, &c)| (e.clone(), c))
        {
            if e[r - 1] == 0 {
                return Err(Error::TheoremViolation(format!(
                    "division by x{r} - x{} leaves a remainder",
                    r + 1
                )));
            }
            let mut q = e.clone();
            q[r - 1] -= 1;
            quotient.add_term(q.clone(), c)?;
            rest.add_term(e, -c)?;
            let mut shifted = q;
            shifted[r] += 1;
            rest.add_term(shifted, c)?;
        }
        Ok(quotient)
    }

    /// `∂_r f = (f - s_r f) / (x_r - x_{r+1})`.
    pub fn divided_difference(&self, r: usize) -> Result<IntPolynomial> {
        self.sub(&self.swap_vars(r))?.divide_by_difference(r)
    }

    pub fn eval_ones(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Terms in graded lexicographic order, largest first.
    fn sorted_terms(&self) -> Vec<(&Vec<u32>, i64)> {
        let mut v: Vec<(&Vec<u32>, i64)> = self.terms.iter().map(|(e, &c)| (e, c)).collect();
        v.sort_by(|(a, _), (b, _)| {
            let (da, db): (u32, u32) = (a.iter().sum(), b.iter().sum());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        v
    }
}

impl fmt::Display for IntPolynomial {
    /// `c * x1^a1 x2^a2 ...`, terms joined by ` + `; unit coefficients and
    /// exponents are omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &a)| a > 0)
                .map(|(k, &a)| {
                    if a == 1 {
                        format!("x{}", k + 1)
                    } else {
                        format!("x{}^{a}", k + 1)
                    }
                })
                .collect();
            let body = match (c, mono.is_empty()) {
                (_, true) => c.abs().to_string(),
                (1 | -1, false) => mono.join(" "),
                _ => format!("{} * {}", c.abs(), mono.join(" ")),
            };
            match (first, c < 0) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial({self})")
    }
}

/// Sum over `PD(w)` of `x1^{crosses in row 1} x2^{crosses in row 2} ...`.
pub fn schubert_from_pipedreams(w: &Permutation) -> Result<IntPolynomial> {
    let poset = ChutePoset::enumerate(w)?;
    Ok(generating_function(
        poset.elements().iter().map(|p| p.crosses_per_row()),
        w.n(),
    ))
}

pub(crate) fn generating_function(
    weights: impl Iterator<Item = Vec<usize>>,
    n: usize,
) -> IntPolynomial {
    let mut out = IntPolynomial::zero(n);
    for wt in weights {
        let e: Vec<u32> = wt.iter().map(|&c| c as u32).collect();
        out.add_term(e, 1)
            .expect("counts of at most a few thousand dreams");
    }
    out
}

/// Which ascent to climb towards `w0` at each step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AscentChoice {
    First,
    Last,
}

/// Classical Schubert polynomial `𝔖_w`: start from `x1^{n-1} x2^{n-2} ...` at
/// `w0` and apply `∂_r` for each ascent `r` on a climb from `w` to `w0`.
pub fn schubert_divided_difference(w: &Permutation, choice: AscentChoice) -> Result<IntPolynomial> {
    let n = w.n();
    let mut path = Vec::new();
    let mut u = w.clone();
    loop {
        let ascents: Vec<usize> = (1..n).filter(|&r| u.at(r) < u.at(r + 1)).collect();
        let r = match choice {
            AscentChoice::First => ascents.first(),
            AscentChoice::Last => ascents.last(),
        };
        match r {
            Some(&r) => {
                path.push(r);
                u = u.swap_positions(r);
            }
            None => break,
        }
    }
    let staircase: Vec<u32> = (0..n).map(|k| (n - 1 - k) as u32).collect();
    let mut f = IntPolynomial::monomial(staircase, 1);
    for &r in path.iter().rev() {
        f = f.divided_difference(r)?;
    }
    Ok(f)
}

/// The divided-difference polynomial that the pipe dreams of `w` must reproduce.
pub fn schubert_oracle(w: &Permutation) -> Result<IntPolynomial> {
    schubert_divided_difference(&w.inverse(), AscentChoice::First)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn divided_difference_basics() {
        // ∂_1 x1^2 = x1 + x2
        let f = IntPolynomial::monomial(vec![2, 0], 1);
        assert_eq!(f.divided_difference(1).unwrap().to_string(), "x1 + x2");
        // symmetric polynomials are killed
        let g = IntPolynomial::monomial(vec![1, 1], 3);
        assert!(g.divided_difference(1).unwrap().is_zero());
        // x1 alone is not divisible by x1 - x2
        let h = IntPolynomial::monomial(vec![1, 0], 1);
        assert!(h.divide_by_difference(1).is_err());
    }

    #[test]
    fn small_classical_values() {
        assert_eq!(
            schubert_divided_difference(&p("123"), AscentChoice::First)
                .unwrap()
                .to_string(),
            "1"
        );
        assert_eq!(
            schubert_divided_difference(&p("213"), AscentChoice::First)
                .unwrap()
                .to_string(),
            "x1"
        );
        assert_eq!(
            schubert_divided_difference(&p("132"), AscentChoice::First)
                .unwrap()
                .to_string(),
            "x1 + x2"
        );
        assert_eq!(
            schubert_divided_difference(&p("231"), AscentChoice::First)
                .unwrap()
                .to_string(),
            "x1 x2"
        );
        assert_eq!(
            schubert_divided_difference(&p("312"), AscentChoice::First)
                .unwrap()
                .to_string(),
            "x1^2"
        );
        assert_eq!(
            schubert_divided_difference(&p("321"), AscentChoice::Last)
                .unwrap()
                .to_string(),
            "x1^2 x2"
        );
    }

    #[test]
    fn pipe_dreams_small() {
        assert_eq!(schubert_from_pipedreams(&p("1")).unwrap().to_string(), "1");
        assert_eq!(
            schubert_from_pipedreams(&p("21")).unwrap().to_string(),
            "x1"
        );
        assert_eq!(
            schubert_from_pipedreams(&p("4321")).unwrap().to_string(),
            "x1^3 x2^2 x3"
        );
        assert_eq!(
            schubert_from_pipedreams(&p("312")).unwrap().to_string(),
            "x1 x2"
        );
        assert_eq!(schubert_oracle(&p("312")).unwrap().to_string(), "x1 x2");
    }

    #[test]
    fn agreement_s4() {
        for w in Permutation::all(4) {
            let a = schubert_from_pipedreams(&w).unwrap();
            assert_eq!(a, schubert_oracle(&w).unwrap(), "{w}");
            assert_eq!(
                schubert_divided_difference(&w, AscentChoice::First).unwrap(),
                schubert_divided_difference(&w, AscentChoice::Last).unwrap()
            );
        }
    }

    #[test]
    fn text_form() {
        let mut f = IntPolynomial::zero(3);
        f.add_term(vec![0, 1, 0], 2).unwrap();
        f.add_term(vec![2, 0, 0], 1).unwrap();
        f.add_term(vec![0, 0, 0], -1).unwrap();
        f.add_term(vec![1, 1, 0], 1).unwrap();
        assert_eq!(f.to_string(), "x1^2 + x1 x2 + 2 * x2 - 1");
        assert_eq!(IntPolynomial::zero(2).to_string(), "0");
        assert_eq!(f.eval_ones(), 3);
    }
}
