//! Executable right-hand sides for the addition and complement
//! identities, seeded verification drivers, and the search that
//! demonstrates why the last-rows expansion cannot be transplanted onto
//! an arbitrary row set.
//!
//! Every check in this module is an exact polynomial equality; failures
//! are data (reported with full payloads), never panics.

use crate::algebra::{
    binomial, rising_factorial, BigIntVal, DensePoly, MultiPoly, Ring, XZPoly,
};
use crate::error::{Error, Result};
use crate::injection::enumerate_injections;
use crate::matrix::{circulant_matrix, enumerate_increasing, CirculantSpec, IndexSeq, RMatrix};
use crate::rook::{
    classic_specialize, expand_last_k, expand_per_rows, expand_row, per_z_oracle_with,
    rook_poly_oracle_with,
};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::sync::Arc;

// ---------------------------------------------------------------------
// Generic rendering helpers (failure payloads, witnesses)
// ---------------------------------------------------------------------

/// Renders a ring element for reports.
pub fn describe_ring<R: Ring>(v: &R) -> String {
    use std::any::Any;
    let any = v as &dyn Any;
    if let Some(b) = any.downcast_ref::<BigIntVal>() {
        return b.to_string();
    }
    if let Some(p) = any.downcast_ref::<MultiPoly>() {
        return p.render();
    }
    format!("{v:?}")
}

/// Ascending-power rendering with ring coefficients parenthesized.
pub fn describe_poly<R: Ring>(p: &DensePoly<R>, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (k, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let inner = describe_ring(c);
        let wrapped = if inner.contains([' ', '+', '-']) && !inner.starts_with('-') {
            format!("({inner})")
        } else if inner.contains([' ', '+']) || inner.starts_with('-') {
            format!("({inner})")
        } else {
            inner
        };
        if k == 0 {
            parts.push(wrapped);
        } else if k == 1 {
            parts.push(format!("{wrapped}*{var}"));
        } else {
            parts.push(format!("{wrapped}*{var}^{k}"));
        }
    }
    parts.join(" + ")
}

pub fn describe_xz<R: Ring>(p: &XZPoly<R>) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    for (l, c) in p.x_coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let inner = describe_poly(c, "z");
        if l == 0 {
            parts.push(inner);
        } else {
            parts.push(format!("({inner})*x^{l}"));
        }
    }
    parts.join(" + ")
}

// ---------------------------------------------------------------------
// Matrix generators
// ---------------------------------------------------------------------

/// Ring of generic symbolic entries `<prefix>_i_j` for an m×n board,
/// with optional extra indeterminates appended.
pub fn symbolic_entry_ring(
    shapes: &[(&str, usize, usize)],
    extra: &[&str],
) -> Arc<Vec<String>> {
    let mut vars = Vec::new();
    for (prefix, m, n) in shapes {
        for i in 1..=*m {
            for j in 1..=*n {
                vars.push(format!("{prefix}_{i}_{j}"));
            }
        }
    }
    for e in extra {
        vars.push(e.to_string());
    }
    MultiPoly::ring(vars)
}

/// Generic matrix with one distinct indeterminate per entry.
pub fn symbolic_matrix(
    ring: &Arc<Vec<String>>,
    prefix: &str,
    m: usize,
    n: usize,
) -> RMatrix<MultiPoly> {
    RMatrix::from_rows(
        (1..=m)
            .map(|i| {
                (1..=n)
                    .map(|j| {
                        MultiPoly::var_in(ring, &format!("{prefix}_{i}_{j}"))
                            .expect("entry indeterminate registered")
                    })
                    .collect()
            })
            .collect(),
    )
    .expect("rectangular by construction")
}

/// Seeded random integer matrix with entries uniform on [−3, 3].
pub fn random_matrix(rng: &mut ChaCha8Rng, m: usize, n: usize) -> RMatrix<BigIntVal> {
    RMatrix::from_rows(
        (0..m)
            .map(|_| {
                (0..n)
                    .map(|_| BigIntVal::from(rng.random_range(-3i64..=3)))
                    .collect()
            })
            .collect(),
    )
    .expect("rectangular by construction")
}

fn render_int_matrix(a: &RMatrix<BigIntVal>) -> String {
    let rows: Vec<String> = (1..=a.rows())
        .map(|i| {
            let row: Vec<String> = (1..=a.cols()).map(|j| a.at(i, j).to_string()).collect();
            format!("[{}]", row.join(","))
        })
        .collect();
    format!("[{}]", rows.join(","))
}

// ---------------------------------------------------------------------
// Addition identities (six right-hand sides)
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdditionVariant {
    RookZ,
    RL,
    PerZ,
    RookClassic,
    RLClassic,
    PerClassic,
}

/// Result of an addition right-hand side: bivariate, univariate, or a
/// bare ring scalar depending on the variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyValue<R: Ring> {
    XZ(XZPoly<R>),
    Univariate(DensePoly<R>),
    Scalar(R),
}

fn check_same_shape<R: Ring>(a: &RMatrix<R>, b: &RMatrix<R>) -> Result<()> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::contract("addition requires equal shapes"));
    }
    if a.rows() > a.cols() {
        return Err(Error::contract("addition identities require m <= n"));
    }
    Ok(())
}

/// Sum over sizes s, increasing row sets, and injections φ of those
/// rows into the columns, of z^{|φ|}(∏ A-entries)·x^s·R(x;z; B reduced
/// by φ̄). Equals R(x;z;A+B).
pub fn addition_rhs_rook_z<R: Ring>(a: &RMatrix<R>, b: &RMatrix<R>) -> Result<XZPoly<R>> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let full_cols = IndexSeq::full(n);
    let mut acc = XZPoly::zero();
    for s in 0..=m {
        for alpha in enumerate_increasing(s, m) {
            let kept = IndexSeq::new((1..=m).filter(|r| !alpha.items().contains(r)).collect());
            for phi in enumerate_injections(alpha.items(), n) {
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
                let cyc = phi.cycle_count();
                let sub = b.submatrix(&kept, &phi.rewire(&full_cols))?;
                let sub_poly = rook_poly_oracle_with(&sub, true)?.poly;
                acc = acc.add(&sub_poly.scale(&DensePoly::monomial(prod, cyc)).shift_x(s));
            }
        }
    }
    Ok(acc)
}

/// Coefficient form: r_l(z;A+B) as Σ_{s≤l} … r_{l−s}(z; B reduced).
pub fn addition_rhs_r_l<R: Ring>(
    a: &RMatrix<R>,
    b: &RMatrix<R>,
    l: usize,
) -> Result<DensePoly<R>> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    if l > m {
        return Err(Error::contract(format!("r_l requires l <= m, got l={l}, m={m}")));
    }
    let full_cols = IndexSeq::full(n);
    let mut acc = DensePoly::zero();
    for s in 0..=l {
        for alpha in enumerate_increasing(s, m) {
            let kept = IndexSeq::new((1..=m).filter(|r| !alpha.items().contains(r)).collect());
            for phi in enumerate_injections(alpha.items(), n) {
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
                let cyc = phi.cycle_count();
                let sub = b.submatrix(&kept, &phi.rewire(&full_cols))?;
                let r_tail = rook_poly_oracle_with(&sub, true)?.poly.x_coeff(l - s);
                acc = acc.add(&r_tail.mul(&DensePoly::monomial(prod, cyc)));
            }
        }
    }
    Ok(acc)
}

/// per(z;A+B) as Σ over full injections of every row subset.
pub fn addition_rhs_per_z<R: Ring>(a: &RMatrix<R>, b: &RMatrix<R>) -> Result<DensePoly<R>> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let full_cols = IndexSeq::full(n);
    let mut acc = DensePoly::zero();
    for s in 0..=m {
        for alpha in enumerate_increasing(s, m) {
            let kept = IndexSeq::new((1..=m).filter(|r| !alpha.items().contains(r)).collect());
            for phi in enumerate_injections(alpha.items(), n) {
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
                let cyc = phi.cycle_count();
                let sub = b.submatrix(&kept, &phi.rewire(&full_cols))?;
                let sub_per = per_z_oracle_with(&sub, true)?;
                acc = acc.add(&sub_per.mul(&DensePoly::monomial(prod, cyc)));
            }
        }
    }
    Ok(acc)
}

/// Classical permanent of an ordered-selection submatrix.
fn classic_per_of_selection<R: Ring>(
    a: &RMatrix<R>,
    rows: &IndexSeq,
    cols: &IndexSeq,
) -> Result<R> {
    let sub = a.submatrix(rows, cols)?;
    Ok(per_z_oracle_with(&sub, true)?.eval_at_one())
}

/// Classical line: R(x;A+B) = Σ per(A[ᾱ|β̄])·x^s·R(x;B(ᾱ|β̄)).
pub fn addition_rhs_rook_classic<R: Ring>(
    a: &RMatrix<R>,
    b: &RMatrix<R>,
) -> Result<DensePoly<R>> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let mut acc = DensePoly::zero();
    for s in 0..=m {
        for alpha in enumerate_increasing(s, m) {
            for beta in enumerate_increasing(s, n) {
                let head = classic_per_of_selection(a, &alpha, &beta)?;
                if head.is_zero() {
                    continue;
                }
                let tail = b.complement_submatrix(&alpha, &beta)?;
                let tail_classic = classic_specialize(&rook_poly_oracle_with(&tail, true)?.poly);
                let shifted = DensePoly::from_coeffs(
                    std::iter::repeat_with(R::zero)
                        .take(s)
                        .chain(tail_classic.coeffs().iter().cloned())
                        .collect(),
                );
                acc = acc.add(&shifted.scalar_mul(&head));
            }
        }
    }
    Ok(acc)
}

/// Classical coefficient line: r_l(A+B).
pub fn addition_rhs_r_l_classic<R: Ring>(
    a: &RMatrix<R>,
    b: &RMatrix<R>,
    l: usize,
) -> Result<R> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    if l > m {
        return Err(Error::contract(format!("r_l requires l <= m, got l={l}, m={m}")));
    }
    let mut acc = R::zero();
    for s in 0..=l {
        for alpha in enumerate_increasing(s, m) {
            for beta in enumerate_increasing(s, n) {
                let head = classic_per_of_selection(a, &alpha, &beta)?;
                if head.is_zero() {
                    continue;
                }
                let tail = b.complement_submatrix(&alpha, &beta)?;
                let coeff = classic_specialize(&rook_poly_oracle_with(&tail, true)?.poly)
                    .coeff(l - s);
                acc = acc.add(&head.mul(&coeff));
            }
        }
    }
    Ok(acc)
}

/// Classical permanent line: per(A+B).
pub fn addition_rhs_per_classic<R: Ring>(a: &RMatrix<R>, b: &RMatrix<R>) -> Result<R> {
    check_same_shape(a, b)?;
    let (m, n) = (a.rows(), a.cols());
    let mut acc = R::zero();
    for s in 0..=m {
        for alpha in enumerate_increasing(s, m) {
            for beta in enumerate_increasing(s, n) {
                let head = classic_per_of_selection(a, &alpha, &beta)?;
                if head.is_zero() {
                    continue;
                }
                let tail = b.complement_submatrix(&alpha, &beta)?;
                let tail_per = per_z_oracle_with(&tail, true)?.eval_at_one();
                acc = acc.add(&head.mul(&tail_per));
            }
        }
    }
    Ok(acc)
}

/// Dispatching form of the six addition right-hand sides. `l` is
/// required for the coefficient variants.
pub fn addition_rhs<R: Ring>(
    a: &RMatrix<R>,
    b: &RMatrix<R>,
    variant: AdditionVariant,
    l: Option<usize>,
) -> Result<PolyValue<R>> {
    let need_l = || l.ok_or_else(|| Error::contract("variant requires the index l"));
    Ok(match variant {
        AdditionVariant::RookZ => PolyValue::XZ(addition_rhs_rook_z(a, b)?),
        AdditionVariant::RL => PolyValue::Univariate(addition_rhs_r_l(a, b, need_l()?)?),
        AdditionVariant::PerZ => PolyValue::Univariate(addition_rhs_per_z(a, b)?),
        AdditionVariant::RookClassic => PolyValue::Univariate(addition_rhs_rook_classic(a, b)?),
        AdditionVariant::RLClassic => PolyValue::Scalar(addition_rhs_r_l_classic(a, b, need_l()?)?),
        AdditionVariant::PerClassic => PolyValue::Scalar(addition_rhs_per_classic(a, b)?),
    })
}

// ---------------------------------------------------------------------
// Complement identities
// ---------------------------------------------------------------------

/// Σ_{s=0}^{l} (−1)^s·C(m−s, l−s)·r_s(z;A)·(z+n−l)⋯(z+n−s−1)·y^{l−s}.
/// Equals r_l(z; yJ − A).
pub fn complement_rhs_r_l<R: Ring>(a: &RMatrix<R>, y: &R, l: usize) -> Result<DensePoly<R>> {
    let (m, n) = (a.rows(), a.cols());
    if m > n {
        return Err(Error::contract("complement identity requires m <= n"));
    }
    if l > m {
        return Err(Error::contract(format!("requires 0 <= l <= m, got l={l}, m={m}")));
    }
    let rook_a = rook_poly_oracle_with(a, true)?.poly;
    let mut acc = DensePoly::<R>::zero();
    for s in 0..=l {
        let c = binomial((m - s) as u64, (l - s) as u64);
        if c.is_zero() {
            continue;
        }
        let r_s = rook_a.x_coeff(s);
        if r_s.is_zero() {
            continue;
        }
        let rf = rising_factorial(n as i64 - l as i64, l - s)
            .map_coeffs(|cc| R::from_bigint(cc));
        let y_pow = y.pow((l - s) as u64);
        let mut term = r_s
            .mul(&rf)
            .scalar_mul(&R::from_bigint(&c).mul(&y_pow));
        if s % 2 == 1 {
            term = term.neg();
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The l = m specialization: per(z; yJ − A).
pub fn complement_rhs_per_z<R: Ring>(a: &RMatrix<R>, y: &R) -> Result<DensePoly<R>> {
    complement_rhs_r_l(a, y, a.rows())
}

/// Materializes yJ_{m,n} − A in the entry ring.
pub fn complement_matrix<R: Ring>(a: &RMatrix<R>, y: &R) -> RMatrix<R> {
    a.map(|e| y.sub(e))
}

// ---------------------------------------------------------------------
// The arbitrary-row-set expansion (counterexample machinery)
// ---------------------------------------------------------------------

/// The last-rows expansion transplanted verbatim onto an arbitrary row
/// set: nonempty subsets of `rows` with rewired columns, plus the
/// untouched-columns term for the remaining rows. Exact when `rows` is
/// the terminal set {m−k+1..m}; the counterexample search demonstrates
/// its failure elsewhere.
pub fn naive_row_set_rhs<R: Ring>(a: &RMatrix<R>, rows: &IndexSeq) -> Result<XZPoly<R>> {
    let (m, n) = (a.rows(), a.cols());
    if m > n {
        return Err(Error::contract("requires m <= n"));
    }
    if !rows.is_strictly_increasing() || rows.items().iter().any(|&r| r < 1 || r > m) {
        return Err(Error::contract("row set must be strictly increasing and in bounds"));
    }
    let k = rows.len();
    let kept = IndexSeq::new((1..=m).filter(|r| !rows.items().contains(r)).collect());
    let full_cols = IndexSeq::full(n);
    let mut acc = XZPoly::zero();
    for t in 1..=k {
        for picks in enumerate_increasing(t, k) {
            let subset: Vec<usize> = picks.items().iter().map(|&p| rows.items()[p - 1]).collect();
            for phi in enumerate_injections(&subset, n) {
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
                let cyc = phi.cycle_count();
                let sub = a.submatrix(&kept, &phi.rewire(&full_cols))?;
                let sub_poly = rook_poly_oracle_with(&sub, true)?.poly;
                acc = acc.add(&sub_poly.scale(&DensePoly::monomial(prod, cyc)).shift_x(t));
            }
        }
    }
    let rest = a.submatrix(&kept, &full_cols)?;
    acc = acc.add(&rook_poly_oracle_with(&rest, true)?.poly);
    Ok(acc)
}

/// A concrete exact mismatch between the naive arbitrary-row-set
/// expansion and the oracle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CounterexampleWitness {
    pub m: usize,
    pub n: usize,
    pub rows: Vec<usize>,
    pub matrix: String,
    pub lhs_oracle: String,
    pub rhs_naive: String,
}

/// Searches generic symbolic boards (m ≤ max_m, n ≤ max_n) and
/// non-terminal row sets of size k for an exact mismatch. Returns the
/// first witness found, or None if the bounds are exhausted.
pub fn find_arbitrary_k_counterexample(
    k: usize,
    max_m: usize,
    max_n: usize,
) -> Result<Option<CounterexampleWitness>> {
    if k < 2 {
        return Err(Error::contract("the arbitrary-row-set search requires k >= 2"));
    }
    for m in (k + 1)..=max_m {
        for n in m..=max_n {
            let ring = symbolic_entry_ring(&[("a", m, n)], &[]);
            let a = symbolic_matrix(&ring, "a", m, n);
            let oracle = rook_poly_oracle_with(&a, true)?.poly;
            let terminal: Vec<usize> = (m - k + 1..=m).collect();
            for rows in enumerate_increasing(k, m) {
                if rows.items() == terminal.as_slice() {
                    continue;
                }
                let naive = naive_row_set_rhs(&a, &rows)?;
                if naive != oracle {
                    return Ok(Some(CounterexampleWitness {
                        m,
                        n,
                        rows: rows.items().to_vec(),
                        matrix: format!("generic symbolic {m}x{n} (entries a_i_j)"),
                        lhs_oracle: describe_xz(&oracle),
                        rhs_naive: describe_xz(&naive),
                    }));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------
// Verification driver
// ---------------------------------------------------------------------

/// Identity families checkable by the driver, numbered as in the CLI
/// contract (`verify --theorem N`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremId {
    /// Expansion of R(x;z;A) along the last k rows.
    LastRows,
    /// Expansion of R(x;z;A) along an arbitrary single row.
    SingleRow,
    /// Expansion of per(z;A) along arbitrary row sets.
    PerRows,
    /// The six addition formulas.
    Addition,
    /// The complement (yJ − A) formulas.
    Complement,
    /// Closed form for per(z;(a0·I + a1·P) ⊗ J_k).
    CirculantClosedForm,
}

impl TheoremId {
    pub fn from_number(n: u32) -> Option<Self> {
        match n {
            2 => Some(TheoremId::LastRows),
            3 => Some(TheoremId::SingleRow),
            4 => Some(TheoremId::PerRows),
            5 => Some(TheoremId::Addition),
            6 => Some(TheoremId::Complement),
            7 => Some(TheoremId::CirculantClosedForm),
            _ => None,
        }
    }

    pub fn number(self) -> u32 {
        match self {
            TheoremId::LastRows => 2,
            TheoremId::SingleRow => 3,
            TheoremId::PerRows => 4,
            TheoremId::Addition => 5,
            TheoremId::Complement => 6,
            TheoremId::CirculantClosedForm => 7,
        }
    }
}

/// Size limits for a verification run.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyBounds {
    pub max_m: usize,
    pub max_n: usize,
    pub max_nk: usize,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            max_m: 4,
            max_n: 5,
            max_nk: 8,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Failure {
    pub context: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of a verification run. Serializes deterministically for a
/// fixed (seed, bounds); `elapsed_ms` is the only nondeterministic
/// field and is excluded from reproducibility comparisons.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VerifyReport {
    pub theorem: u32,
    pub seed: u64,
    pub bounds: VerifyBounds,
    pub symbolic: bool,
    pub trials: u64,
    pub checks: u64,
    pub pass: bool,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u128,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

#[derive(Default)]
struct TrialOutcome {
    checks: u64,
    failures: Vec<Failure>,
}

impl TrialOutcome {
    fn check_eq<T: PartialEq>(
        &mut self,
        context: String,
        lhs: &T,
        rhs: &T,
        show: impl Fn(&T) -> String,
    ) {
        self.checks += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                context,
                lhs: show(lhs),
                rhs: show(rhs),
            });
        }
    }
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ trial.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn draw_shape(rng: &mut ChaCha8Rng, min_m: usize, bounds: &VerifyBounds) -> (usize, usize) {
    let max_m = bounds.max_m.min(bounds.max_n);
    let m = rng.random_range(min_m..=max_m.max(min_m));
    let n = rng.random_range(m..=bounds.max_n.max(m));
    (m, n)
}

fn last_rows_trial(a: &RMatrix<BigIntVal>, label: &str, out: &mut TrialOutcome) {
    let oracle = rook_poly_oracle_with(a, true).expect("oracle within bounds").poly;
    for k in 1..a.rows() {
        let got = expand_last_k(a, k).expect("valid k").poly;
        out.check_eq(
            format!("{label}, expansion along last {k} rows"),
            &got,
            &oracle,
            describe_xz,
        );
    }
}

fn single_row_trial(a: &RMatrix<BigIntVal>, label: &str, out: &mut TrialOutcome) {
    let oracle = rook_poly_oracle_with(a, true).expect("oracle within bounds").poly;
    for i in 1..=a.rows() {
        let got = expand_row(a, i).expect("valid row").poly;
        out.check_eq(
            format!("{label}, expansion along row {i}"),
            &got,
            &oracle,
            describe_xz,
        );
    }
    if a.rows() >= 2 {
        let via_row = expand_row(a, a.rows()).expect("valid row").poly;
        let via_last = expand_last_k(a, 1).expect("valid k").poly;
        out.check_eq(
            format!("{label}, row-m expansion vs last-1 expansion"),
            &via_row,
            &via_last,
            describe_xz,
        );
    }
}

fn per_rows_trial(a: &RMatrix<BigIntVal>, label: &str, out: &mut TrialOutcome) {
    let per = per_z_oracle_with(a, true).expect("oracle within bounds");
    for k in 1..a.rows() {
        for beta in enumerate_increasing(k, a.rows()) {
            let got = expand_per_rows(a, &beta).expect("valid rows");
            out.check_eq(
                format!("{label}, per expansion along rows {beta}"),
                &got,
                &per,
                |p| describe_poly(p, "z"),
            );
        }
    }
}

fn addition_trial<R: Ring>(
    a: &RMatrix<R>,
    b: &RMatrix<R>,
    label: &str,
    out: &mut TrialOutcome,
) {
    let sum = a.add(b).expect("same shape");
    let rook_sum = rook_poly_oracle_with(&sum, true).expect("within bounds").poly;
    let per_sum = rook_sum.x_coeff(sum.rows());

    let rhs = addition_rhs_rook_z(a, b).expect("within bounds");
    out.check_eq(format!("{label}, R(x;z;A+B)"), &rhs, &rook_sum, describe_xz);

    for l in 0..=sum.rows() {
        let rhs = addition_rhs_r_l(a, b, l).expect("within bounds");
        out.check_eq(
            format!("{label}, r_{l}(z;A+B)"),
            &rhs,
            &rook_sum.x_coeff(l),
            |p| describe_poly(p, "z"),
        );
    }

    let rhs = addition_rhs_per_z(a, b).expect("within bounds");
    out.check_eq(format!("{label}, per(z;A+B)"), &rhs, &per_sum, |p| {
        describe_poly(p, "z")
    });

    let classic_sum = classic_specialize(&rook_sum);
    let rhs = addition_rhs_rook_classic(a, b).expect("within bounds");
    out.check_eq(
        format!("{label}, classical R(x;A+B)"),
        &rhs,
        &classic_sum,
        |p| describe_poly(p, "x"),
    );

    for l in 0..=sum.rows() {
        let rhs = addition_rhs_r_l_classic(a, b, l).expect("within bounds");
        out.check_eq(
            format!("{label}, classical r_{l}(A+B)"),
            &rhs,
            &classic_sum.coeff(l),
            describe_ring,
        );
    }

    let rhs = addition_rhs_per_classic(a, b).expect("within bounds");
    out.check_eq(
        format!("{label}, classical per(A+B)"),
        &rhs,
        &classic_sum.coeff(sum.rows()),
        describe_ring,
    );
}

fn addition_degenerate_trial<R: Ring>(
    a: &RMatrix<R>,
    label: &str,
    out: &mut TrialOutcome,
) {
    let zero = RMatrix::<R>::zero(a.rows(), a.cols());
    let rook_a = rook_poly_oracle_with(a, true).expect("within bounds").poly;
    // B = 0: the right-hand side collapses onto R(x;z;A) itself.
    let rhs = addition_rhs_rook_z(a, &zero).expect("within bounds");
    out.check_eq(format!("{label}, B=0 rook"), &rhs, &rook_a, describe_xz);
    // A = 0: only the empty selection survives.
    let rhs = addition_rhs_per_classic(&zero, a).expect("within bounds");
    let per_a = classic_specialize(&rook_a).coeff(a.rows());
    out.check_eq(format!("{label}, A=0 classical per"), &rhs, &per_a, describe_ring);
}

fn complement_trial<R: Ring>(a: &RMatrix<R>, y: &R, label: &str, out: &mut TrialOutcome) {
    let complement = complement_matrix(a, y);
    let rook_c = rook_poly_oracle_with(&complement, true)
        .expect("within bounds")
        .poly;
    for l in 0..=a.rows() {
        let rhs = complement_rhs_r_l(a, y, l).expect("within bounds");
        out.check_eq(
            format!("{label}, r_{l}(z;yJ-A)"),
            &rhs,
            &rook_c.x_coeff(l),
            |p| describe_poly(p, "z"),
        );
    }
    let rhs = complement_rhs_per_z(a, y).expect("within bounds");
    out.check_eq(
        format!("{label}, per(z;yJ-A)"),
        &rhs,
        &rook_c.x_coeff(a.rows()),
        |p| describe_poly(p, "z"),
    );
}

fn closed_form_trial(
    n: usize,
    k: usize,
    a0: &BigIntVal,
    a1: &BigIntVal,
    label: &str,
    out: &mut TrialOutcome,
) {
    use crate::structured::closed_form_per_z;
    let spec = CirculantSpec::new(n, k, 0, vec![a0.clone(), a1.clone()]).expect("valid spec");
    let mat = circulant_matrix(&spec, |c| c.clone());
    let oracle = per_z_oracle_with(&mat, true).expect("within bounds");
    let z = crate::algebra::ZPoly::var();
    let got = closed_form_per_z(
        n as u64,
        k as u64,
        &crate::algebra::ZPoly::constant(a0.clone()),
        &crate::algebra::ZPoly::constant(a1.clone()),
        &z,
    );
    out.check_eq(
        format!("{label}, closed form vs oracle (n={n}, k={k})"),
        &got,
        &oracle,
        |p| describe_poly(p, "z"),
    );
}

fn symbolic_shapes(bounds: &VerifyBounds, min_m: usize) -> Vec<(usize, usize)> {
    let mut shapes = Vec::new();
    for m in min_m..=bounds.max_m {
        for n in m..=bounds.max_n {
            shapes.push((m, n));
        }
    }
    shapes
}

/// Runs the requested identity family against its oracle. Deterministic
/// for fixed (seed, bounds, symbolic): trials are independently seeded
/// and may run in parallel, with results assembled in trial order.
pub fn verify_theorem(
    theorem: TheoremId,
    trials: u64,
    seed: u64,
    bounds: &VerifyBounds,
    symbolic: bool,
) -> VerifyReport {
    let start = std::time::Instant::now();
    let mut outcomes: Vec<TrialOutcome> = Vec::new();

    if symbolic {
        // Exhaustive sweep over symbolic generic boards within bounds.
        let mut out = TrialOutcome::default();
        match theorem {
            TheoremId::LastRows | TheoremId::SingleRow | TheoremId::PerRows => {
                let min_m = if theorem == TheoremId::SingleRow { 1 } else { 2 };
                for (m, n) in symbolic_shapes(bounds, min_m) {
                    let ring = symbolic_entry_ring(&[("a", m, n)], &[]);
                    let a = symbolic_matrix(&ring, "a", m, n);
                    let label = format!("symbolic {m}x{n}");
                    match theorem {
                        TheoremId::LastRows => {
                            let oracle = rook_poly_oracle_with(&a, true).unwrap().poly;
                            for k in 1..m {
                                let got = expand_last_k(&a, k).unwrap().poly;
                                out.check_eq(
                                    format!("{label}, expansion along last {k} rows"),
                                    &got,
                                    &oracle,
                                    describe_xz,
                                );
                            }
                        }
                        TheoremId::SingleRow => {
                            let oracle = rook_poly_oracle_with(&a, true).unwrap().poly;
                            for i in 1..=m {
                                let got = expand_row(&a, i).unwrap().poly;
                                out.check_eq(
                                    format!("{label}, expansion along row {i}"),
                                    &got,
                                    &oracle,
                                    describe_xz,
                                );
                            }
                        }
                        TheoremId::PerRows => {
                            let per = per_z_oracle_with(&a, true).unwrap();
                            for k in 1..m {
                                for beta in enumerate_increasing(k, m) {
                                    let got = expand_per_rows(&a, &beta).unwrap();
                                    out.check_eq(
                                        format!("{label}, per expansion along rows {beta}"),
                                        &got,
                                        &per,
                                        |p| describe_poly(p, "z"),
                                    );
                                }
                            }
                        }
                        _ => unreachable!(),
                    }
                }
            }
            TheoremId::Addition => {
                for (m, n) in symbolic_shapes(bounds, 1) {
                    let ring = symbolic_entry_ring(&[("a", m, n), ("b", m, n)], &[]);
                    let a = symbolic_matrix(&ring, "a", m, n);
                    let b = symbolic_matrix(&ring, "b", m, n);
                    addition_trial(&a, &b, &format!("symbolic {m}x{n}"), &mut out);
                    addition_degenerate_trial(&a, &format!("symbolic {m}x{n}"), &mut out);
                }
            }
            TheoremId::Complement => {
                for (m, n) in symbolic_shapes(bounds, 1) {
                    let ring = symbolic_entry_ring(&[("a", m, n)], &["y"]);
                    let a = symbolic_matrix(&ring, "a", m, n);
                    let y = MultiPoly::var_in(&ring, "y").unwrap();
                    complement_trial(&a, &y, &format!("symbolic {m}x{n}, symbolic y"), &mut out);
                }
            }
            TheoremId::CirculantClosedForm => {
                use crate::structured::closed_form_per_z;
                for n in 1..=bounds.max_nk {
                    for k in 1..=bounds.max_nk {
                        if n * k > bounds.max_nk {
                            continue;
                        }
                        let ring = symbolic_entry_ring(&[], &["a0", "a1"]);
                        let a0 = MultiPoly::var_in(&ring, "a0").unwrap();
                        let a1 = MultiPoly::var_in(&ring, "a1").unwrap();
                        // Build (a0·I + a1·P) ⊗ J_k symbolically.
                        let shift = RMatrix::<MultiPoly>::cyclic_shift(n);
                        let ident = RMatrix::<MultiPoly>::identity(n);
                        let circ = ident
                            .map(|e| e.mul(&a0))
                            .add(&shift.map(|e| e.mul(&a1)))
                            .unwrap();
                        let full = circ.kronecker(&RMatrix::<MultiPoly>::ones(k, k));
                        let oracle = per_z_oracle_with(&full, true).unwrap();
                        let z = DensePoly::<MultiPoly>::var();
                        let got = closed_form_per_z(
                            n as u64,
                            k as u64,
                            &DensePoly::constant(a0.clone()),
                            &DensePoly::constant(a1.clone()),
                            &z,
                        );
                        out.check_eq(
                            format!("symbolic a0,a1, closed form vs oracle (n={n}, k={k})"),
                            &got,
                            &oracle,
                            |p| describe_poly(p, "z"),
                        );
                    }
                }
            }
        }
        outcomes.push(out);
    } else {
        let trial_ids: Vec<u64> = (0..trials).collect();
        outcomes = crate::parallel::ordered_map(trial_ids, |&t| {
            let mut rng = trial_rng(seed, t);
            let mut out = TrialOutcome::default();
            match theorem {
                TheoremId::LastRows => {
                    let (m, n) = draw_shape(&mut rng, 2, bounds);
                    let a = random_matrix(&mut rng, m, n);
                    last_rows_trial(&a, &format!("trial {t}, A={}", render_int_matrix(&a)), &mut out);
                }
                TheoremId::SingleRow => {
                    let (m, n) = draw_shape(&mut rng, 1, bounds);
                    let a = random_matrix(&mut rng, m, n);
                    single_row_trial(&a, &format!("trial {t}, A={}", render_int_matrix(&a)), &mut out);
                }
                TheoremId::PerRows => {
                    let (m, n) = draw_shape(&mut rng, 2, bounds);
                    let a = random_matrix(&mut rng, m, n);
                    per_rows_trial(&a, &format!("trial {t}, A={}", render_int_matrix(&a)), &mut out);
                }
                TheoremId::Addition => {
                    let (m, n) = draw_shape(&mut rng, 1, bounds);
                    let a = random_matrix(&mut rng, m, n);
                    let b = random_matrix(&mut rng, m, n);
                    let label = format!(
                        "trial {t}, A={}, B={}",
                        render_int_matrix(&a),
                        render_int_matrix(&b)
                    );
                    addition_trial(&a, &b, &label, &mut out);
                    addition_degenerate_trial(&a, &label, &mut out);
                }
                TheoremId::Complement => {
                    let (m, n) = draw_shape(&mut rng, 1, bounds);
                    let a = random_matrix(&mut rng, m, n);
                    let y = BigIntVal::from(rng.random_range(-3i64..=3));
                    let label =
                        format!("trial {t}, A={}, y={y}", render_int_matrix(&a));
                    complement_trial(&a, &y, &label, &mut out);
                }
                TheoremId::CirculantClosedForm => {
                    // random coefficients over every block shape in bounds
                    let a0 = BigIntVal::from(rng.random_range(-3i64..=3));
                    let a1 = BigIntVal::from(rng.random_range(-3i64..=3));
                    for n in 1..=bounds.max_nk {
                        for k in 1..=bounds.max_nk {
                            if n * k > bounds.max_nk {
                                continue;
                            }
                            closed_form_trial(n, k, &a0, &a1, &format!("trial {t}, a0={a0}, a1={a1}"), &mut out);
                        }
                    }
                }
            }
            out
        });
    }

    let mut checks = 0;
    let mut failures = Vec::new();
    for o in outcomes {
        checks += o.checks;
        failures.extend(o.failures);
    }
    let trials_recorded = if symbolic { checks } else { trials };
    VerifyReport {
        theorem: theorem.number(),
        seed,
        bounds: *bounds,
        symbolic,
        trials: trials_recorded,
        checks,
        pass: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    }
}
