//! Generalized Fibonacci and Lucas numbers from paths and cycles.
//!
//! For fixed `(k, l)`, `a_n = chi_{P_n}(k, l)` and `b_n = chi_{C_n}(k, l)`.
//! This module tabulates both sequences from their linear recurrences, mines
//! minimal recurrences from raw values, and checks the identities relating
//! them (and their classical Fibonacci/Lucas/Pell shadows) over index grids.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::engine::{
    chi_wildcard, count_bruteforce, BruteForceBudget, ChiEngine, ColoringParams,
};
use crate::error::{Error, Result};
use crate::multigraph::{Edge, Family, Focus};

/// `(k, l)` with `k + l >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SeqParams {
    k: u32,
    l: u32,
}

impl SeqParams {
    pub fn new(k: u32, l: u32) -> Result<Self> {
        if k == 0 && l == 0 {
            return Err(Error::Input("k and l must not both be zero".into()));
        }
        Ok(SeqParams { k, l })
    }

    pub fn k(self) -> u32 {
        self.k
    }

    pub fn l(self) -> u32 {
        self.l
    }

    pub fn coloring(self) -> ColoringParams {
        ColoringParams::new(self.k, self.l)
    }

    /// Every admissible pair in `[0, max]^2`.
    pub fn grid(max: u32) -> impl Iterator<Item = SeqParams> {
        (0..=max).flat_map(move |k| (0..=max).filter_map(move |l| SeqParams::new(k, l).ok()))
    }
}

impl fmt::Display for SeqParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} l={}", self.k, self.l)
    }
}

/// `a_0..=a_max` with `a_0 = 1`, `a_1 = k+l`, `a_2 = (k+l)^2 - k` and
/// `a_n = (k+l-1) a_{n-1} + l a_{n-2}`.
pub fn a_seq(p: SeqParams, max: usize) -> Vec<BigInt> {
    let (k, l) = (BigInt::from(p.k), BigInt::from(p.l));
    let q = &k + &l;
    let mut out = vec![BigInt::one(), q.clone(), &q * &q - &k];
    let step = &q - 1;
    while out.len() <= max {
        let n = out.len();
        let next = &step * &out[n - 1] + &l * &out[n - 2];
        out.push(next);
    }
    out.truncate(max + 1);
    out
}

/// `b_1..=b_max` (element `i` is `b_{i+1}`), from `b_1 = l`,
/// `b_2 = (k+l)^2 - k`, `b_3 = a_3 - b_2 + l a_1` and
/// `b_n = (k+l-2) b_{n-1} + (k+2l-1) b_{n-2} + l b_{n-3}`.
pub fn b_seq(p: SeqParams, max: usize) -> Vec<BigInt> {
    if max == 0 {
        return Vec::new();
    }
    let (k, l) = (BigInt::from(p.k), BigInt::from(p.l));
    let a = a_seq(p, 3);
    let b2 = a[2].clone();
    let b3 = &a[3] - &b2 + &l * &a[1];
    let mut out = vec![l.clone(), b2, b3];
    let c1 = &k + &l - 2;
    let c2 = &k + &l * 2 - 1;
    while out.len() < max {
        let n = out.len();
        let next = &c1 * &out[n - 1] + &c2 * &out[n - 2] + &l * &out[n - 3];
        out.push(next);
    }
    out.truncate(max);
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classic {
    /// `F_0..=F_N`, `F_0 = 0`, `F_1 = 1`.
    Fibonacci,
    /// `L_1..=L_N`, `L_1 = 1`, `L_2 = 3`.
    Lucas,
    /// `Q_0..=Q_N`, `Q_0 = Q_1 = 1`, `Q_n = 2 Q_{n-1} + Q_{n-2}`.
    Pell,
}

pub fn classic_sequence(kind: Classic, max: usize) -> Vec<BigInt> {
    let (first, second, mult, len) = match kind {
        Classic::Fibonacci => (0, 1, 1, max + 1),
        Classic::Lucas => (1, 3, 1, max),
        Classic::Pell => (1, 1, 2, max + 1),
    };
    let mut out = vec![BigInt::from(first), BigInt::from(second)];
    while out.len() < len {
        let n = out.len();
        let next = &out[n - 1] * mult + &out[n - 2];
        out.push(next);
    }
    out.truncate(len);
    out
}

/// Determinant of `[[b3,b2,b1],[b4,b3,b2],[b5,b4,b3]]` next to the closed
/// form `-k^2 (k-1) l ((k+l-1)^2 + 4l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelCheck {
    pub numeric: BigInt,
    pub closed_form: BigInt,
}

impl HankelCheck {
    pub fn agrees(&self) -> bool {
        self.numeric == self.closed_form
    }
}

pub fn hankel_det_b(p: SeqParams) -> HankelCheck {
    let b = b_seq(p, 5);
    let at = |n: usize| &b[n - 1];
    let m = [[at(3), at(2), at(1)], [at(4), at(3), at(2)], [at(5), at(4), at(3)]];
    let minor = |r1: usize, r2: usize, c1: usize, c2: usize| m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1];
    let numeric = m[0][0] * minor(1, 2, 1, 2) - m[0][1] * minor(1, 2, 0, 2) + m[0][2] * minor(1, 2, 0, 1);
    let (k, l) = (BigInt::from(p.k), BigInt::from(p.l));
    let shifted = &k + &l - 1;
    let closed_form = -(&k * &k) * (&k - 1) * &l * (&shifted * &shifted + &l * 4);
    HankelCheck { numeric, closed_form }
}

/// `s_n = c_1 s_{n-1} + ... + c_d s_{n-d}` with rational `c_i`, `c_d != 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    coeffs: Vec<BigRational>,
}

impl Recurrence {
    pub fn new(coeffs: Vec<BigRational>) -> Result<Self> {
        match coeffs.last() {
            Some(c) if !c.is_zero() => Ok(Recurrence { coeffs }),
            _ => Err(Error::Input("recurrence needs order >= 1 and a nonzero last coefficient".into())),
        }
    }

    pub fn from_integers(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Whether every term from index `order` on is predicted exactly.
    pub fn fits(&self, values: &[BigInt]) -> bool {
        let d = self.order();
        (d..values.len()).all(|n| {
            let predicted: BigRational = self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigRational::from_integer(values[n - 1 - i].clone()))
                .sum();
            predicted == BigRational::from_integer(values[n].clone())
        })
    }
}

impl fmt::Display for Recurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "order={} coeffs={}", self.order(), parts.join(","))
    }
}

/// Reduced row echelon form in place; returns the pivot column of each pivot row.
fn rref(rows: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

/// Order-`d` recurrence fitting all of `values`, if one with `c_d != 0` exists.
fn fit_order(values: &[BigInt], d: usize) -> Option<Recurrence> {
    let q = |n: usize| BigRational::from_integer(values[n].clone());
    let mut rows: Vec<Vec<BigRational>> = (d..values.len())
        .map(|n| {
            let mut row: Vec<BigRational> = (1..=d).map(|i| q(n - i)).collect();
            row.push(q(n));
            row
        })
        .collect();
    let pivots = rref(&mut rows, d + 1);
    if pivots.contains(&d) {
        // a pivot in the augmented column means the system is inconsistent
        return None;
    }
    let free: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
    let solve = |assign: &[(usize, BigRational)]| {
        let mut sol = vec![BigRational::zero(); d];
        for (c, v) in assign {
            sol[*c] = v.clone();
        }
        for (r, &pc) in pivots.iter().enumerate() {
            let mut v = rows[r][d].clone();
            for &fc in &free {
                v -= &rows[r][fc] * &sol[fc];
            }
            sol[pc] = v;
        }
        sol
    };
    // c_d is affine in the free variables: trying the origin and each unit
    // vector finds a nonzero value whenever one exists
    let mut candidates = vec![solve(&[])];
    candidates.extend(free.iter().map(|&fc| solve(&[(fc, BigRational::one())])));
    candidates
        .into_iter()
        .find(|s| !s[d - 1].is_zero())
        .and_then(|s| Recurrence::new(s).ok())
        .filter(|r| r.fits(values))
}

/// Least order `d <= max_order` admitting an exact rational recurrence over
/// the whole list.
pub fn minimal_recurrence(values: &[BigInt], max_order: usize) -> Result<Option<Recurrence>> {
    if max_order == 0 {
        return Err(Error::Input("max_order must be at least 1".into()));
    }
    if values.len() < 2 * max_order + 2 {
        return Err(Error::Input(format!(
            "need at least {} terms for max_order {max_order}, got {}",
            2 * max_order + 2,
            values.len()
        )));
    }
    Ok((1..=max_order).find_map(|d| fit_order(values, d)))
}

/// The checked identities. `T*` and `P1` are the three-graph identities at
/// `k = 1`; `L3_*` hold for every `(k, l)`; `C*`, `FL` and `PELL` are the
/// classical specializations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    /// `b_n = l a_{n-1} + l^2 a_{n-3}`
    T1_1,
    /// `b_n = a_n - l^2 a_{n-4}`
    T1_2,
    /// `a_{r+s} = l a_r a_{s-1} + l^2 a_{r-1} a_{s-2}`
    T1_3,
    /// `a_{r+s} = a_r a_s - l^2 a_{r-2} a_{s-2}`
    T1_4,
    /// `a_{r+s+t+1} = l a_r a_s a_t + l^3 a_{r-1}a_{s-1}a_{t-1} - l^4 a_{r-2}a_{s-2}a_{t-2}`
    T1_5,
    /// `l a_{r+s} a_t + l^3 a_{r-1}a_{s-1}a_{t-1} = a_{r+s+t+1} - l^4 a_{r-2}a_{s-2}a_{t-1}`
    P1,
    /// `b_n = a_n - b_{n-1} + l a_{n-2}`
    L3_1,
    /// `c_n = (k+l-1) c_{n-1} + l c_{n-2}` for `c_n = b_n + b_{n-1}`
    L3_2,
    /// `L_n = F_{n+1} + F_{n-1}`
    C1,
    /// `L_n = F_{n+2} - F_{n-2}`
    C2,
    /// `F_{r+s} = F_{r+1} F_s + F_r F_{s-1}`
    C3,
    /// `F_{r+s} = F_{r+1} F_{s+1} - F_{r-1} F_{s-1}`
    C4,
    /// `F_{r+s+t} = F_{r+1}F_{s+1}F_{t+1} + F_r F_s F_t - F_{r-1}F_{s-1}F_{t-1}`
    C5,
    /// `a_n(1,1) = F_{n+2}` and `b_n(1,1) = L_n`
    FL,
    /// `a_n(2,1) = Q_{n+1}`
    PELL,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::T1_1,
        IdentityId::T1_2,
        IdentityId::T1_3,
        IdentityId::T1_4,
        IdentityId::T1_5,
        IdentityId::P1,
        IdentityId::L3_1,
        IdentityId::L3_2,
        IdentityId::C1,
        IdentityId::C2,
        IdentityId::C3,
        IdentityId::C4,
        IdentityId::C5,
        IdentityId::FL,
        IdentityId::PELL,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::T1_1 => "T1.1",
            IdentityId::T1_2 => "T1.2",
            IdentityId::T1_3 => "T1.3",
            IdentityId::T1_4 => "T1.4",
            IdentityId::T1_5 => "T1.5",
            IdentityId::P1 => "P1",
            IdentityId::L3_1 => "L3.1",
            IdentityId::L3_2 => "L3.2",
            IdentityId::C1 => "C1",
            IdentityId::C2 => "C2",
            IdentityId::C3 => "C3",
            IdentityId::C4 => "C4",
            IdentityId::C5 => "C5",
            IdentityId::FL => "FL",
            IdentityId::PELL => "PELL",
        }
    }

    pub fn parse(name: &str) -> Option<IdentityId> {
        Self::ALL.into_iter().find(|id| id.name().eq_ignore_ascii_case(name))
    }

    /// Identities stated for a single proper color.
    pub fn requires_k_one(self) -> bool {
        matches!(
            self,
            IdentityId::T1_1 | IdentityId::T1_2 | IdentityId::T1_3 | IdentityId::T1_4 | IdentityId::T1_5 | IdentityId::P1
        )
    }

    /// Index names and their lower bounds.
    pub fn domain(self) -> &'static [(&'static str, u64)] {
        match self {
            IdentityId::T1_1 => &[("n", 3)],
            IdentityId::T1_2 => &[("n", 4)],
            IdentityId::T1_3 => &[("r", 1), ("s", 2)],
            IdentityId::T1_4 => &[("r", 2), ("s", 2)],
            IdentityId::T1_5 => &[("r", 2), ("s", 2), ("t", 2)],
            IdentityId::P1 => &[("r", 2), ("s", 2), ("t", 1)],
            IdentityId::L3_1 => &[("n", 2)],
            IdentityId::L3_2 => &[("n", 4)],
            IdentityId::C1 | IdentityId::FL | IdentityId::PELL => &[("n", 1)],
            IdentityId::C2 => &[("n", 2)],
            IdentityId::C3 => &[("r", 0), ("s", 1)],
            IdentityId::C4 => &[("r", 1), ("s", 1)],
            IdentityId::C5 => &[("r", 1), ("s", 1), ("t", 1)],
        }
    }

    /// The subscript of the left-hand side, which bounds the grid.
    pub fn principal_index(self, idx: &[u64]) -> u64 {
        match self {
            IdentityId::T1_5 | IdentityId::P1 => idx.iter().sum::<u64>() + 1,
            _ => idx.iter().sum(),
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Precomputed sequence values up to some subscript.
struct Tables {
    l: BigInt,
    k: BigInt,
    a: Vec<BigInt>,
    b: Vec<BigInt>,
    fib: Vec<BigInt>,
    lucas: Vec<BigInt>,
}

impl Tables {
    fn new(p: SeqParams, max: u64) -> Self {
        let m = max as usize + 3;
        Tables {
            l: BigInt::from(p.l),
            k: BigInt::from(p.k),
            a: a_seq(p, m),
            b: b_seq(p, m),
            fib: classic_sequence(Classic::Fibonacci, m),
            lucas: classic_sequence(Classic::Lucas, m),
        }
    }

    fn a(&self, n: u64) -> &BigInt {
        &self.a[n as usize]
    }

    fn b(&self, n: u64) -> &BigInt {
        &self.b[n as usize - 1]
    }

    fn f(&self, n: u64) -> &BigInt {
        &self.fib[n as usize]
    }

    fn lucas(&self, n: u64) -> &BigInt {
        &self.lucas[n as usize - 1]
    }

    fn lp(&self, e: u32) -> BigInt {
        Pow::pow(&self.l, e)
    }

    fn c(&self, n: u64) -> BigInt {
        self.b(n) + self.b(n - 1)
    }

    /// Both sides; equal-length vectors for identities bundling two equations.
    fn sides(&self, id: IdentityId, idx: &[u64]) -> (Vec<BigInt>, Vec<BigInt>) {
        let l = &self.l;
        let one = |lhs: BigInt, rhs: BigInt| (vec![lhs], vec![rhs]);
        match id {
            IdentityId::T1_1 => {
                let n = idx[0];
                one(self.b(n).clone(), l * self.a(n - 1) + self.lp(2) * self.a(n - 3))
            }
            IdentityId::T1_2 => {
                let n = idx[0];
                one(self.b(n).clone(), self.a(n) - self.lp(2) * self.a(n - 4))
            }
            IdentityId::T1_3 => {
                let (r, s) = (idx[0], idx[1]);
                one(
                    self.a(r + s).clone(),
                    l * self.a(r) * self.a(s - 1) + self.lp(2) * self.a(r - 1) * self.a(s - 2),
                )
            }
            IdentityId::T1_4 => {
                let (r, s) = (idx[0], idx[1]);
                one(self.a(r + s).clone(), self.a(r) * self.a(s) - self.lp(2) * self.a(r - 2) * self.a(s - 2))
            }
            IdentityId::T1_5 => {
                let (r, s, t) = (idx[0], idx[1], idx[2]);
                one(
                    self.a(r + s + t + 1).clone(),
                    l * self.a(r) * self.a(s) * self.a(t)
                        + self.lp(3) * self.a(r - 1) * self.a(s - 1) * self.a(t - 1)
                        - self.lp(4) * self.a(r - 2) * self.a(s - 2) * self.a(t - 2),
                )
            }
            IdentityId::P1 => {
                let (r, s, t) = (idx[0], idx[1], idx[2]);
                one(
                    l * self.a(r + s) * self.a(t) + self.lp(3) * self.a(r - 1) * self.a(s - 1) * self.a(t - 1),
                    self.a(r + s + t + 1) - self.lp(4) * self.a(r - 2) * self.a(s - 2) * self.a(t - 1),
                )
            }
            IdentityId::L3_1 => {
                let n = idx[0];
                one(self.b(n).clone(), self.a(n) - self.b(n - 1) + l * self.a(n - 2))
            }
            IdentityId::L3_2 => {
                let n = idx[0];
                let step = &self.k + l - 1;
                one(self.c(n), step * self.c(n - 1) + l * self.c(n - 2))
            }
            IdentityId::C1 => {
                let n = idx[0];
                one(self.lucas(n).clone(), self.f(n + 1) + self.f(n - 1))
            }
            IdentityId::C2 => {
                let n = idx[0];
                one(self.lucas(n).clone(), self.f(n + 2) - self.f(n - 2))
            }
            IdentityId::C3 => {
                let (r, s) = (idx[0], idx[1]);
                one(self.f(r + s).clone(), self.f(r + 1) * self.f(s) + self.f(r) * self.f(s - 1))
            }
            IdentityId::C4 => {
                let (r, s) = (idx[0], idx[1]);
                one(self.f(r + s).clone(), self.f(r + 1) * self.f(s + 1) - self.f(r - 1) * self.f(s - 1))
            }
            IdentityId::C5 => {
                let (r, s, t) = (idx[0], idx[1], idx[2]);
                one(
                    self.f(r + s + t).clone(),
                    self.f(r + 1) * self.f(s + 1) * self.f(t + 1) + self.f(r) * self.f(s) * self.f(t)
                        - self.f(r - 1) * self.f(s - 1) * self.f(t - 1),
                )
            }
            IdentityId::FL | IdentityId::PELL => unreachable!("handled with fixed parameters"),
        }
    }
}

fn fixed_params(id: IdentityId, p: SeqParams) -> SeqParams {
    match id {
        IdentityId::FL => SeqParams { k: 1, l: 1 },
        IdentityId::PELL => SeqParams { k: 2, l: 1 },
        _ => p,
    }
}

fn check_domain(id: IdentityId, p: SeqParams, idx: &[u64]) -> Result<()> {
    let out_of_domain = |bound: String| Error::OutOfDomain { id: id.name().to_string(), bound };
    if id.requires_k_one() && p.k != 1 {
        return Err(out_of_domain(format!("requires k = 1 (got k = {})", p.k)));
    }
    let domain = id.domain();
    if idx.len() != domain.len() {
        return Err(out_of_domain(format!("expects {} indices, got {}", domain.len(), idx.len())));
    }
    for (&(name, min), &v) in domain.iter().zip(idx) {
        if v < min {
            return Err(out_of_domain(format!("requires {name} >= {min} (got {name} = {v})")));
        }
    }
    Ok(())
}

/// Both sides of `id` at one index tuple.
pub fn evaluate_identity(id: IdentityId, p: SeqParams, idx: &[u64]) -> Result<(Vec<BigInt>, Vec<BigInt>)> {
    check_domain(id, p, idx)?;
    let max = id.principal_index(idx) + 2;
    Ok(evaluate_with(id, p, idx, &Tables::new(fixed_params(id, p), max)))
}

fn evaluate_with(id: IdentityId, p: SeqParams, idx: &[u64], tables: &Tables) -> (Vec<BigInt>, Vec<BigInt>) {
    match id {
        IdentityId::FL => {
            let n = idx[0];
            (vec![tables.a(n).clone(), tables.b(n).clone()], vec![tables.f(n + 2).clone(), tables.lucas(n).clone()])
        }
        IdentityId::PELL => {
            let n = idx[0];
            let pell = classic_sequence(Classic::Pell, n as usize + 1);
            (vec![tables.a(n).clone()], vec![pell[n as usize + 1].clone()])
        }
        _ => {
            debug_assert_eq!(fixed_params(id, p), p);
            tables.sides(id, idx)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub indices: Vec<(&'static str, u64)>,
    pub lhs: Vec<BigInt>,
    pub rhs: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub id: IdentityId,
    pub params: SeqParams,
    pub max_index: u64,
    pub checked: usize,
    pub failures: usize,
    pub counterexample: Option<Counterexample>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {} max={} cases={}", self.id, self.params, self.max_index, self.checked)?;
        if let Some(cx) = &self.counterexample {
            let at: Vec<String> = cx.indices.iter().map(|(n, v)| format!("{n}={v}")).collect();
            write!(f, " at ({}) lhs={} rhs={}", at.join(","), join(&cx.lhs), join(&cx.rhs))?;
        }
        Ok(())
    }
}

/// Index tuples of `id`'s domain whose principal subscript is at most `max`.
pub fn index_grid(id: IdentityId, max: u64) -> Vec<Vec<u64>> {
    let domain = id.domain();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(domain.len());
    fn rec(id: IdentityId, domain: &[(&str, u64)], max: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if current.len() == domain.len() {
            if id.principal_index(current) <= max {
                out.push(current.clone());
            }
            return;
        }
        let min = domain[current.len()].1;
        let mut v = min;
        loop {
            current.push(v);
            // the remaining indices at their minimum must still fit
            let rest: u64 = domain[current.len()..].iter().map(|d| d.1).sum();
            let partial = id.principal_index(current) + rest;
            if partial > max {
                current.pop();
                break;
            }
            rec(id, domain, max, current, out);
            current.pop();
            v += 1;
        }
    }
    rec(id, domain, max, &mut current, &mut out);
    out
}

/// Check `id` at every grid point with principal subscript `<= max`.
pub fn verify_identity(id: IdentityId, p: SeqParams, max: u64) -> Result<IdentityReport> {
    let minima: Vec<u64> = id.domain().iter().map(|d| d.1).collect();
    check_domain(id, p, &minima)?;
    let tables = Tables::new(fixed_params(id, p), max + 2);
    let mut report = IdentityReport { id, params: fixed_params(id, p), max_index: max, checked: 0, failures: 0, counterexample: None };
    for idx in index_grid(id, max) {
        let (lhs, rhs) = evaluate_with(id, p, &idx, &tables);
        report.checked += 1;
        if lhs != rhs {
            report.failures += 1;
            if report.counterexample.is_none() {
                let indices = id.domain().iter().map(|d| d.0).zip(idx.iter().copied()).collect();
                report.counterexample = Some(Counterexample { indices, lhs, rhs });
            }
        }
    }
    Ok(report)
}

/// One line per report and a final `ok=<bool> checked=<n> failed=<n>` line,
/// where the counts are grid cases.
pub fn format_reports(reports: &[IdentityReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let checked: usize = reports.iter().map(|r| r.checked).sum();
    let failed: usize = reports.iter().map(|r| r.failures).sum();
    out.push_str(&format!("ok={} checked={checked} failed={failed}\n", failed == 0));
    out
}

/// Largest family size [`cross_check_graphs`] accepts.
pub const GRAPH_CHECK_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub params: SeqParams,
    pub max: usize,
    pub checked: usize,
}

/// Compare `a_n`, `b_n` against `chi` of `P_n`, `C_n` for `1 <= n <= max`.
pub fn cross_check_graphs(p: SeqParams, max: usize, engine: &mut ChiEngine) -> Result<CrossCheck> {
    if max > GRAPH_CHECK_LIMIT {
        return Err(Error::Capacity(format!("graph cross-check limited to n <= {GRAPH_CHECK_LIMIT}")));
    }
    let a = a_seq(p, max);
    let b = b_seq(p, max);
    let (k, l) = (u64::from(p.k), u64::from(p.l));
    for n in 1..=max {
        let path = engine.chi(&Family::Path(n as u32).build()?).eval(k, l);
        if path != a[n] {
            return Err(Error::Verification(format!("path n={n} ({p}): chi={path} a_n={}", a[n])));
        }
        let cycle = engine.chi(&Family::Cycle(n as u32).build()?).eval(k, l);
        if cycle != b[n - 1] {
            return Err(Error::Verification(format!("cycle n={n} ({p}): chi={cycle} b_n={}", b[n - 1])));
        }
    }
    Ok(CrossCheck { params: p, max, checked: 2 * max })
}

/// The chorded path evaluated five ways at `(1, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SneakyCheck {
    pub r: u32,
    pub s: u32,
    pub t: u32,
    pub l: u32,
    /// Exhaustive count of proper colorings.
    pub brute_force: BigInt,
    /// Vertex rule at `r+s+1`.
    pub vertex_rule: BigInt,
    /// Edge rule at the chord `{r, r+s+1}`.
    pub edge_rule: BigInt,
    /// `l a_{r+s} a_t + l^3 a_{r-1} a_{s-1} a_{t-1}`
    pub vertex_formula: BigInt,
    /// `a_{r+s+t+1} - l^4 a_{r-2} a_{s-2} a_{t-1}`
    pub edge_formula: BigInt,
}

impl SneakyCheck {
    pub fn agrees(&self) -> bool {
        [&self.vertex_rule, &self.edge_rule, &self.vertex_formula, &self.edge_formula]
            .iter()
            .all(|v| **v == self.brute_force)
    }
}

impl fmt::Display for SneakyCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} sneaky r={} s={} t={} l={} brute={} vertex_rule={} edge_rule={} vertex_formula={} edge_formula={}",
            if self.agrees() { "PASS" } else { "FAIL" },
            self.r,
            self.s,
            self.t,
            self.l,
            self.brute_force,
            self.vertex_rule,
            self.edge_rule,
            self.vertex_formula,
            self.edge_formula
        )
    }
}

pub fn check_sneaky(r: u32, s: u32, t: u32, l: u32, budget: BruteForceBudget, engine: &mut ChiEngine) -> Result<SneakyCheck> {
    if l == 0 {
        return Err(Error::Input("sneaky check needs l >= 1".into()));
    }
    let g = Family::Sneaky { r, s, t }.build()?;
    let brute_force = count_bruteforce(&g, ColoringParams::new(1, l), budget)?;
    let lw = u64::from(l);
    let vertex_rule = chi_wildcard(&g, Focus::Vertex(r + s + 1), engine)?.eval(1, lw);
    let edge_rule = chi_wildcard(&g, Focus::Edge(Edge::new(r, r + s + 1)), engine)?.eval(1, lw);
    let (vertex_formula, edge_formula) = {
        let (lhs, rhs) = evaluate_identity(IdentityId::P1, SeqParams::new(1, l)?, &[r.into(), s.into(), t.into()])?;
        (lhs[0].clone(), rhs[0].clone())
    };
    Ok(SneakyCheck { r, s, t, l, brute_force, vertex_rule, edge_rule, vertex_formula, edge_formula })
}

/// Human-readable rational: integers without a denominator.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom().abs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(k: u32, l: u32) -> SeqParams {
        SeqParams::new(k, l).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn params_reject_zero_zero() {
        assert!(SeqParams::new(0, 0).is_err());
        assert_eq!(SeqParams::grid(2).count(), 8);
    }

    #[test]
    fn a_examples() {
        assert_eq!(a_seq(sp(1, 1), 6), ints(&[1, 2, 3, 5, 8, 13, 21]));
        assert_eq!(a_seq(sp(2, 1), 5), ints(&[1, 3, 7, 17, 41, 99]));
        assert_eq!(a_seq(sp(1, 2), 4), ints(&[1, 3, 8, 22, 60]));
        assert_eq!(a_seq(sp(1, 2), 7)[7], BigInt::from(1224));
        assert_eq!(a_seq(sp(3, 0), 0), ints(&[1]));
        assert_eq!(a_seq(sp(3, 0), 1), ints(&[1, 3]));
    }

    #[test]
    fn b_examples() {
        assert_eq!(b_seq(sp(1, 1), 6), ints(&[1, 3, 4, 7, 11, 18]));
        assert_eq!(b_seq(sp(2, 1), 5), ints(&[1, 7, 13, 35, 81]));
        assert_eq!(b_seq(sp(0, 2), 4), ints(&[2, 4, 8, 16]));
        assert_eq!(b_seq(sp(1, 2), 4)[3], BigInt::from(56));
        assert_eq!(b_seq(sp(2, 2), 2), ints(&[2, 14]));
        assert!(b_seq(sp(1, 1), 0).is_empty());
    }

    #[test]
    fn a_zero_extends_backwards_at_k_one() {
        for l in 1..6 {
            let a = a_seq(sp(1, l), 2);
            // a_2 = l a_1 + l a_0
            assert_eq!(&a[2] - BigInt::from(l) * &a[1], BigInt::from(l) * &a[0]);
        }
    }

    #[test]
    fn classic_examples() {
        assert_eq!(classic_sequence(Classic::Fibonacci, 8), ints(&[0, 1, 1, 2, 3, 5, 8, 13, 21]));
        assert_eq!(classic_sequence(Classic::Lucas, 5), ints(&[1, 3, 4, 7, 11]));
        assert_eq!(classic_sequence(Classic::Pell, 5), ints(&[1, 1, 3, 7, 17, 41]));
        assert_eq!(classic_sequence(Classic::Fibonacci, 0), ints(&[0]));
        assert_eq!(classic_sequence(Classic::Lucas, 1), ints(&[1]));
    }

    #[test]
    fn hankel_examples() {
        let h = hankel_det_b(sp(2, 1));
        assert_eq!(h.numeric, BigInt::from(-32));
        assert_eq!(h.closed_form, BigInt::from(-32));
        assert_eq!(hankel_det_b(sp(1, 1)).numeric, BigInt::zero());
        assert_eq!(hankel_det_b(sp(0, 3)).numeric, BigInt::zero());
        assert!(hankel_det_b(sp(0, 3)).agrees());
    }

    #[test]
    fn minimal_recurrence_examples() {
        let r = minimal_recurrence(&b_seq(sp(1, 1), 12), 3).unwrap().unwrap();
        assert_eq!(r, Recurrence::from_integers(&[1, 1]).unwrap());
        let r = minimal_recurrence(&b_seq(sp(0, 2), 12), 3).unwrap().unwrap();
        assert_eq!(r, Recurrence::from_integers(&[2]).unwrap());
        let r = minimal_recurrence(&b_seq(sp(2, 1), 12), 3).unwrap().unwrap();
        assert_eq!(r, Recurrence::from_integers(&[1, 3, 1]).unwrap());
        assert_eq!(r.to_string(), "order=3 coeffs=1,3,1");
    }

    #[test]
    fn minimal_recurrence_degenerate_inputs() {
        // all zeros: any order-1 recurrence with c != 0 fits
        let r = minimal_recurrence(&ints(&[0; 8]), 3).unwrap().unwrap();
        assert_eq!(r.order(), 1);
        assert!(r.fits(&ints(&[0; 8])));
        // 0,2,0,2,... needs order 2
        let alt = b_seq(sp(2, 0), 12);
        assert_eq!(minimal_recurrence(&alt, 3).unwrap().unwrap(), Recurrence::from_integers(&[0, 1]).unwrap());
        // rational coefficients are allowed
        let halves = ints(&[64, 32, 16, 8, 4, 2, 1, 0]);
        assert_eq!(minimal_recurrence(&halves[..7], 2).unwrap().unwrap().order(), 1);
        // no fit of order <= 1 for a squares sequence
        let squares = ints(&[1, 4, 9, 16, 25, 36]);
        assert_eq!(minimal_recurrence(&squares, 1).unwrap(), None);
        assert!(minimal_recurrence(&squares, 3).is_err());
        assert!(minimal_recurrence(&squares, 0).is_err());
    }

    #[test]
    fn rational_display() {
        let r = Recurrence::new(vec![BigRational::new(1.into(), 2.into())]).unwrap();
        assert_eq!(r.to_string(), "order=1 coeffs=1/2");
        assert_eq!(format_rational(&BigRational::new((-3).into(), 6.into())), "-1/2");
        assert!(Recurrence::from_integers(&[1, 0]).is_err());
        assert!(Recurrence::from_integers(&[]).is_err());
    }

    #[test]
    fn identity_spot_values() {
        let (lhs, rhs) = evaluate_identity(IdentityId::T1_5, sp(1, 2), &[2, 2, 2]).unwrap();
        assert_eq!(lhs, ints(&[1224]));
        assert_eq!(rhs, ints(&[1224]));
        let (lhs, rhs) = evaluate_identity(IdentityId::T1_2, sp(1, 2), &[4]).unwrap();
        assert_eq!((lhs, rhs), (ints(&[56]), ints(&[56])));
        let (lhs, rhs) = evaluate_identity(IdentityId::C5, sp(1, 1), &[2, 2, 2]).unwrap();
        assert_eq!((lhs, rhs), (ints(&[8]), ints(&[8])));
        let (lhs, rhs) = evaluate_identity(IdentityId::FL, sp(3, 3), &[4]).unwrap();
        assert_eq!((lhs, rhs), (ints(&[8, 7]), ints(&[8, 7])));
        let (lhs, rhs) = evaluate_identity(IdentityId::PELL, sp(1, 1), &[5]).unwrap();
        assert_eq!((lhs, rhs), (ints(&[99]), ints(&[99])));
    }

    #[test]
    fn identity_domain_errors() {
        let err = evaluate_identity(IdentityId::T1_3, sp(1, 1), &[1, 1]).unwrap_err();
        assert_eq!(
            err,
            Error::OutOfDomain { id: "T1.3".into(), bound: "requires s >= 2 (got s = 1)".into() }
        );
        assert!(matches!(evaluate_identity(IdentityId::T1_1, sp(2, 1), &[5]), Err(Error::OutOfDomain { .. })));
        assert!(matches!(verify_identity(IdentityId::P1, sp(2, 1), 10), Err(Error::OutOfDomain { .. })));
        assert!(matches!(evaluate_identity(IdentityId::C5, sp(1, 1), &[1, 1]), Err(Error::OutOfDomain { .. })));
        // general-k identities accept any k
        assert!(verify_identity(IdentityId::L3_1, sp(3, 2), 10).unwrap().passed());
    }

    #[test]
    fn grid_respects_principal_bound() {
        let g = index_grid(IdentityId::T1_5, 7);
        assert_eq!(g, vec![vec![2, 2, 2]]);
        assert!(index_grid(IdentityId::T1_5, 6).is_empty());
        assert_eq!(index_grid(IdentityId::C3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 1]]);
        assert_eq!(index_grid(IdentityId::T1_1, 5), vec![vec![3], vec![4], vec![5]]);
    }

    #[test]
    fn report_formatting() {
        let good = verify_identity(IdentityId::C4, sp(1, 1), 6).unwrap();
        assert!(good.passed());
        assert_eq!(good.to_string(), format!("PASS C4 k=1 l=1 max=6 cases={}", good.checked));
        let bad = IdentityReport {
            counterexample: Some(Counterexample { indices: vec![("n", 3)], lhs: ints(&[1]), rhs: ints(&[2]) }),
            failures: 1,
            ..good.clone()
        };
        assert!(bad.to_string().starts_with("FAIL C4"));
        assert!(bad.to_string().ends_with("at (n=3) lhs=1 rhs=2"));
        let text = format_reports(&[good.clone(), bad]);
        assert!(text.ends_with(&format!("ok=false checked={} failed=1\n", 2 * good.checked)));
    }

    #[test]
    fn graph_cross_checks() {
        let mut engine = ChiEngine::default();
        for (k, l) in [(1, 1), (2, 1), (3, 2)] {
            assert_eq!(cross_check_graphs(sp(k, l), 8, &mut engine).unwrap().checked, 16);
        }
        assert!(matches!(cross_check_graphs(sp(1, 1), 13, &mut engine), Err(Error::Capacity(_))));
    }

    #[test]
    fn sneaky_small() {
        let mut engine = ChiEngine::default();
        let check = check_sneaky(2, 2, 2, 1, BruteForceBudget::default(), &mut engine).unwrap();
        assert!(check.agrees(), "{check}");
        assert_eq!(check.brute_force, BigInt::from(32));
        assert!(check_sneaky(1, 2, 2, 1, BruteForceBudget::default(), &mut engine).is_err());
        assert!(check_sneaky(2, 2, 2, 0, BruteForceBudget::default(), &mut engine).is_err());
    }
}
