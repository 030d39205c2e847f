//! Cyclic rook polynomials R(x;z;A) and z-analog permanents per(z;A).
//!
//! Two independent evaluation routes are provided: a brute-force oracle
//! enumerating all partial injections, and expansion evaluators that
//! recurse through rewired sub-boards. The expansions must agree with
//! the oracle exactly; that agreement is what the verification suite
//! and the acceptance tests assert.
//!
//! Cycle counting identifies a board's p-th row with its p-th column
//! POSITION. Every expansion therefore materializes each reduced board
//! as a fresh matrix whose rows have been renumbered to a prefix, with
//! the rewired column order carrying the cycle-relabeling semantics.

use crate::algebra::{BigIntVal, DensePoly, Ring, XZPoly};
use crate::error::{Error, Result};
use crate::injection::PartialInjection;
use crate::matrix::{enumerate_increasing, IndexSeq, RMatrix};
use std::collections::HashMap;

/// Boards larger than this are refused by the oracle unless forced.
pub const ORACLE_MAX_ROWS: usize = 7;
/// Column bound for unforced oracle runs.
pub const ORACLE_MAX_COLS: usize = 9;

/// Memoization of reduced boards engages when the top-level board has
/// more rows than this.
const MEMO_MIN_ROWS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    ExpandLastK,
    ExpandRow,
    ExpandPerRows,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    /// Partial injections whose weight was accumulated.
    pub terms: u64,
    /// Evaluator invocations (recursion nodes, memo hits included).
    pub nodes: u64,
}

#[derive(Clone, Debug)]
pub struct RookResult<R: Ring = BigIntVal> {
    pub poly: XZPoly<R>,
    pub method: Method,
    pub stats: Stats,
}

fn check_rect<R: Ring>(a: &RMatrix<R>) -> Result<()> {
    if a.rows() > a.cols() {
        return Err(Error::contract(format!(
            "cyclic rook operations require m <= n, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    Ok(())
}

fn check_oracle_size<R: Ring>(a: &RMatrix<R>, force: bool) -> Result<()> {
    if !force && (a.rows() > ORACLE_MAX_ROWS || a.cols() > ORACLE_MAX_COLS) {
        return Err(Error::limit(format!(
            "oracle refuses {}x{} (limits {}x{}); pass force to override",
            a.rows(),
            a.cols(),
            ORACLE_MAX_ROWS,
            ORACLE_MAX_COLS
        )));
    }
    Ok(())
}

/// Cycle count of a row→column assignment under positional row↔column
/// identification. `assign[i]` is the 1-based column of row i+1, or 0.
fn assignment_cycles(assign: &[usize]) -> usize {
    let m = assign.len();
    let mut visited = vec![false; m + 1];
    let mut cycles = 0;
    for start in 1..=m {
        if assign[start - 1] == 0 || visited[start] {
            continue;
        }
        let mut cur = start;
        loop {
            if cur > m || assign[cur - 1] == 0 || visited[cur] {
                break;
            }
            visited[cur] = true;
            cur = assign[cur - 1];
            if cur == start {
                cycles += 1;
                break;
            }
        }
    }
    cycles
}

/// Shared enumeration core: walks rows in order, optionally skipping
/// each row, and accumulates z^cycles · ∏ entries into `acc[s][c]`.
fn enumerate_placements<R: Ring>(
    a: &RMatrix<R>,
    row: usize,
    full_rows_only: bool,
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    prod: &R,
    acc: &mut [Vec<R>],
    terms: &mut u64,
) {
    let m = a.rows();
    if row > m {
        let s = assign.iter().filter(|&&j| j != 0).count();
        let c = assignment_cycles(assign);
        acc[s][c] = acc[s][c].add(prod);
        *terms += 1;
        return;
    }
    if !full_rows_only {
        assign.push(0);
        enumerate_placements(a, row + 1, full_rows_only, assign, used, prod, acc, terms);
        assign.pop();
    }
    for j in 1..=a.cols() {
        if used[j] {
            continue;
        }
        let e = a.at(row, j);
        if e.is_zero() {
            continue;
        }
        used[j] = true;
        assign.push(j);
        let next = prod.mul(e);
        enumerate_placements(a, row + 1, full_rows_only, assign, used, &next, acc, terms);
        assign.pop();
        used[j] = false;
    }
}

fn oracle_raw<R: Ring>(a: &RMatrix<R>, full_rows_only: bool, stats: &mut Stats) -> Vec<Vec<R>> {
    let m = a.rows();
    // acc[s][c]: coefficient of x^s z^c; z-degree never exceeds s.
    let mut acc = vec![vec![R::zero(); m + 1]; m + 1];
    let mut assign = Vec::with_capacity(m);
    let mut used = vec![false; a.cols() + 1];
    enumerate_placements(
        a,
        1,
        full_rows_only,
        &mut assign,
        &mut used,
        &R::one(),
        &mut acc,
        &mut stats.terms,
    );
    acc
}

/// Brute-force oracle for R(x;z;A): sums z^{|φ|}(∏ a_{i,φ(i)})x^{|S|}
/// over all subsets S of rows and injections φ of S into the columns.
pub fn rook_poly_oracle<R: Ring>(a: &RMatrix<R>) -> Result<RookResult<R>> {
    rook_poly_oracle_with(a, false)
}

pub fn rook_poly_oracle_with<R: Ring>(a: &RMatrix<R>, force: bool) -> Result<RookResult<R>> {
    check_rect(a)?;
    check_oracle_size(a, force)?;
    let mut stats = Stats::default();
    stats.nodes = 1;
    let acc = oracle_raw(a, false, &mut stats);
    let poly = XZPoly::from_x_coeffs(acc.into_iter().map(DensePoly::from_coeffs).collect());
    Ok(RookResult {
        poly,
        method: Method::Oracle,
        stats,
    })
}

/// Brute-force oracle for per(z;A): full injections of all rows only.
pub fn per_z_oracle<R: Ring>(a: &RMatrix<R>) -> Result<DensePoly<R>> {
    per_z_oracle_with(a, false)
}

pub fn per_z_oracle_with<R: Ring>(a: &RMatrix<R>, force: bool) -> Result<DensePoly<R>> {
    check_rect(a)?;
    check_oracle_size(a, force)?;
    let mut stats = Stats::default();
    let acc = oracle_raw(a, true, &mut stats);
    let m = a.rows();
    Ok(DensePoly::from_coeffs(acc[m].clone()))
}

/// Substitutes z = 1; classical rook polynomials and permanents are the
/// z = 1 specializations of their cyclic counterparts.
pub fn classic_specialize<R: Ring>(p: &XZPoly<R>) -> DensePoly<R> {
    p.classic()
}

/// Classical permanent by Ryser's inclusion–exclusion over column
/// subsets. Square matrices only; algorithmically independent of the
/// placement enumeration, which makes it a cross-oracle anchor.
pub fn ryser_permanent<R: Ring>(a: &RMatrix<R>) -> Result<R> {
    if a.rows() != a.cols() {
        return Err(Error::contract("ryser_permanent requires a square matrix"));
    }
    let n = a.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut total = R::zero();
    for mask in 1u64..(1 << n) {
        let mut prod = R::one();
        for i in 1..=n {
            let mut row_sum = R::zero();
            for j in 1..=n {
                if mask >> (j - 1) & 1 == 1 {
                    row_sum = row_sum.add(a.at(i, j));
                }
            }
            if row_sum.is_zero() {
                prod = R::zero();
                break;
            }
            prod = prod.mul(&row_sum);
        }
        let sign_flips = n - (mask.count_ones() as usize);
        if sign_flips % 2 == 1 {
            prod = prod.neg();
        }
        total = total.add(&prod);
    }
    Ok(total)
}

// ---------------------------------------------------------------------
// Expansion evaluators
// ---------------------------------------------------------------------

/// Recursive evaluator shared by the expansion operators. Reduced
/// boards are materialized as fresh matrices and, when memoization is
/// engaged, cached by their full content (column rewiring makes
/// index-based keys error-prone; content keys are safe).
struct Expander<R: Ring> {
    rook_memo: Option<HashMap<RMatrix<R>, XZPoly<R>>>,
    per_memo: Option<HashMap<RMatrix<R>, DensePoly<R>>>,
    stats: Stats,
}

impl<R: Ring> Expander<R> {
    fn new(top_rows: usize) -> Self {
        let memo = top_rows > MEMO_MIN_ROWS;
        Expander {
            rook_memo: memo.then(HashMap::new),
            per_memo: memo.then(HashMap::new),
            stats: Stats::default(),
        }
    }

    /// R(x;z;A) of a 1×n board: 1 + Σ_j a_{1j}·x·z^{[j=1]}.
    fn single_row(&mut self, a: &RMatrix<R>) -> XZPoly<R> {
        let mut linear = DensePoly::zero();
        for j in 1..=a.cols() {
            let e = a.at(1, j);
            if e.is_zero() {
                continue;
            }
            self.stats.terms += 1;
            let t = if j == 1 {
                DensePoly::monomial(e.clone(), 1)
            } else {
                DensePoly::constant(e.clone())
            };
            linear = linear.add(&t);
        }
        XZPoly::from_x_coeffs(vec![DensePoly::one(), linear])
    }

    /// Expansion along the last `want_k` rows (clamped to the board).
    fn rook_last_k(&mut self, a: &RMatrix<R>, want_k: usize) -> XZPoly<R> {
        self.stats.nodes += 1;
        let m = a.rows();
        let n = a.cols();
        if m == 0 {
            return XZPoly::one();
        }
        if m == 1 {
            return self.single_row(a);
        }
        if let Some(memo) = &self.rook_memo {
            if let Some(hit) = memo.get(a) {
                return hit.clone();
            }
        }
        let k = want_k.clamp(1, m - 1);
        let kept_rows = IndexSeq::full(m - k);
        let full_cols = IndexSeq::full(n);
        let mut acc = XZPoly::zero();
        for s in 1..=k {
            for offsets in enumerate_increasing(s, k) {
                let rows: Vec<usize> = offsets.items().iter().map(|&p| m - k + p).collect();
                for phi in crate::injection::enumerate_injections(&rows, n) {
                    let mut prod = R::one();
                    let mut vanished = false;
                    for (i, j) in phi.pairs() {
                        let e = a.at(i, j);
                        if e.is_zero() {
                            vanished = true;
                            break;
                        }
                        prod = prod.mul(e);
                    }
                    if vanished {
                        continue;
                    }
                    self.stats.terms += 1;
                    let cyc = phi.cycle_count();
                    let rewired = phi.rewire(&full_cols);
                    let sub = a
                        .submatrix(&kept_rows, &rewired)
                        .expect("rewired board is in bounds");
                    let sub_poly = self.rook_last_k(&sub, k);
                    let weight = DensePoly::monomial(prod, cyc);
                    acc = acc.add(&sub_poly.scale(&weight).shift_x(s));
                }
            }
        }
        let rest = a
            .submatrix(&kept_rows, &full_cols)
            .expect("prefix board is in bounds");
        acc = acc.add(&self.rook_last_k(&rest, k));
        if let Some(memo) = &mut self.rook_memo {
            memo.insert(a.clone(), acc.clone());
        }
        acc
    }

    /// per(z;A) by repeated expansion along the first row.
    fn per_first_row(&mut self, a: &RMatrix<R>) -> DensePoly<R> {
        self.stats.nodes += 1;
        let m = a.rows();
        let n = a.cols();
        if m == 0 {
            return DensePoly::one();
        }
        if let Some(memo) = &self.per_memo {
            if let Some(hit) = memo.get(a) {
                return hit.clone();
            }
        }
        let kept_rows = IndexSeq::new((2..=m).collect());
        let full_cols = IndexSeq::full(n);
        let mut acc = DensePoly::zero();
        for j in 1..=n {
            let e = a.at(1, j);
            if e.is_zero() {
                continue;
            }
            self.stats.terms += 1;
            let phi = PartialInjection::new(vec![1], vec![j]).expect("singleton injection");
            let cyc = phi.cycle_count();
            let sub = a
                .submatrix(&kept_rows, &phi.rewire(&full_cols))
                .expect("rewired board is in bounds");
            let sub_per = self.per_first_row(&sub);
            acc = acc.add(&sub_per.mul(&DensePoly::monomial(e.clone(), cyc)));
        }
        if let Some(memo) = &mut self.per_memo {
            memo.insert(a.clone(), acc.clone());
        }
        acc
    }
}

/// Expansion of R(x;z;A) along the last k rows: sums, over nonempty
/// subsets S of the last k rows and injections φ of S into the columns,
/// z^{|φ|}(∏ a)·x^{|S|}·R(x;z; first m−k rows | rewired columns), plus
/// the term for the untouched first m−k rows.
pub fn expand_last_k<R: Ring>(a: &RMatrix<R>, k: usize) -> Result<RookResult<R>> {
    check_rect(a)?;
    let m = a.rows();
    if m < 2 || k < 1 || k > m - 1 {
        return Err(Error::contract(format!(
            "expansion along last k rows requires 1 <= k <= m-1, got k={k}, m={m}"
        )));
    }
    let mut ex = Expander::new(m);
    let poly = ex.rook_last_k(a, k);
    Ok(RookResult {
        poly,
        method: Method::ExpandLastK,
        stats: ex.stats,
    })
}

/// Column sequence of the row-unused term when expanding along row i:
/// the kept rows' own columns first (in order), then column i, then the
/// columns beyond m. Positions at or past the kept row count can never
/// close a cycle, which is exactly right for an unused row.
fn unused_row_columns(m: usize, n: usize, i: usize) -> IndexSeq {
    let mut cols: Vec<usize> = (1..=m).filter(|&c| c != i).collect();
    cols.push(i);
    cols.extend(m + 1..=n);
    IndexSeq::new(cols)
}

/// Expansion of R(x;z;A) along an arbitrary single row i: the diagonal
/// term a_ii·x·z, the off-diagonal terms a_ij·x with column i relocated
/// to position j, and the row-unused term.
pub fn expand_row<R: Ring>(a: &RMatrix<R>, i: usize) -> Result<RookResult<R>> {
    check_rect(a)?;
    let m = a.rows();
    let n = a.cols();
    if m < 1 || i < 1 || i > m {
        return Err(Error::contract(format!(
            "row expansion requires 1 <= i <= m, got i={i}, m={m}"
        )));
    }
    let mut ex = Expander::new(m);
    ex.stats.nodes += 1;
    let kept_rows = IndexSeq::new((1..=m).filter(|&r| r != i).collect());
    let full_cols = IndexSeq::full(n);
    let mut acc = XZPoly::zero();
    for j in 1..=n {
        let e = a.at(i, j);
        if e.is_zero() {
            continue;
        }
        ex.stats.terms += 1;
        let phi = PartialInjection::new(vec![i], vec![j]).expect("singleton injection");
        let cyc = phi.cycle_count(); // 1 on the diagonal, else 0
        let sub = a
            .submatrix(&kept_rows, &phi.rewire(&full_cols))
            .expect("rewired board is in bounds");
        let sub_poly = ex.rook_last_k(&sub, 1);
        acc = acc.add(&sub_poly.scale(&DensePoly::monomial(e.clone(), cyc)).shift_x(1));
    }
    let unused = a
        .submatrix(&kept_rows, &unused_row_columns(m, n, i))
        .expect("unused-row board is in bounds");
    acc = acc.add(&ex.rook_last_k(&unused, 1));
    Ok(RookResult {
        poly: acc,
        method: Method::ExpandRow,
        stats: ex.stats,
    })
}

/// Expansion of per(z;A) along an arbitrary strictly increasing row set:
/// per(z;A) = Σ_{φ∈Inj(rows,N_n)} z^{|φ|}(∏ a)·per(z; remaining rows |
/// rewired columns).
pub fn expand_per_rows<R: Ring>(a: &RMatrix<R>, rows: &IndexSeq) -> Result<DensePoly<R>> {
    check_rect(a)?;
    let m = a.rows();
    let n = a.cols();
    let k = rows.len();
    if !rows.is_strictly_increasing() {
        return Err(Error::contract("row set must be strictly increasing"));
    }
    if k < 1 || k > m.saturating_sub(1) {
        return Err(Error::contract(format!(
            "per expansion requires 1 <= k <= m-1, got k={k}, m={m}"
        )));
    }
    if rows.items().iter().any(|&r| r < 1 || r > m) {
        return Err(Error::contract("row set out of bounds"));
    }
    let mut ex = Expander::<R>::new(m);
    let kept_rows = IndexSeq::new((1..=m).filter(|r| !rows.items().contains(r)).collect());
    let full_cols = IndexSeq::full(n);
    let mut acc = DensePoly::zero();
    for phi in crate::injection::enumerate_injections(rows.items(), n) {
        let mut prod = R::one();
        let mut vanished = false;
        for (i, j) in phi.pairs() {
            let e = a.at(i, j);
            if e.is_zero() {
                vanished = true;
                break;
            }
            prod = prod.mul(e);
        }
        if vanished {
            continue;
        }
        ex.stats.terms += 1;
        let cyc = phi.cycle_count();
        let sub = a
            .submatrix(&kept_rows, &phi.rewire(&full_cols))
            .expect("rewired board is in bounds");
        let sub_per = ex.per_first_row(&sub);
        acc = acc.add(&sub_per.mul(&DensePoly::monomial(prod, cyc)));
    }
    Ok(acc)
}
