//! Fast exact evaluation for circulant ⊗ all-ones block matrices.
//!
//! Two independent fast routes are provided for per(z; ·) of these
//! matrices: a closed form for the two-coefficient, offset-zero family,
//! and a profile dynamic program for banded specs. They corroborate
//! each other at sizes far beyond the brute-force oracle.

use crate::algebra::{binomial, factorial, rising_factorial_in, BigIntVal, Ring, XZPoly, ZPoly};
use crate::error::{Error, Result};
use crate::matrix::{circulant_matrix, CirculantSpec};
use crate::rook::{expand_last_k, per_z_oracle_with, rook_poly_oracle_with};
use std::collections::HashMap;

/// Largest board expand-based structured evaluation accepts.
pub const STRUCTURED_ROOK_MAX: usize = 12;
/// Largest board the oracle fallback accepts.
const FALLBACK_ORACLE_MAX: usize = 9;
/// Cap on the number of conditioned wrap-edge assignments.
const WRAP_ENUM_LIMIT: u128 = 2_000_000;

// ---------------------------------------------------------------------
// Closed form for per(z; (a0·I_n + a1·P_n) ⊗ J_k)
// ---------------------------------------------------------------------

/// One summand of the closed form, indexed by s = 0..=k.
///
/// The assembled sum is Σ_s cycle_weight · fact_power · baseⁿ. The 1/s!
/// normalization is folded into the n-th power as (s!)^{n−1}, which
/// keeps every intermediate in the integers.
#[derive(Clone, Debug)]
pub struct ClosedFormTerm<R: Ring> {
    pub s: u64,
    /// z(z+1)⋯(z+s−1)
    pub cycle_weight: R,
    /// (s!)^{n−1}
    pub fact_power: R,
    /// C(k,s)·a0^{k−s}·a1^s·(z+s)⋯(z+k−1)
    pub base: R,
    /// cycle_weight · fact_power · base^n
    pub value: R,
}

/// The closed-form summands for per(z; (a0·I_n + a1·P_n) ⊗ J_k).
pub fn closed_form_terms<R: Ring>(n: u64, k: u64, a0: &R, a1: &R, z: &R) -> Vec<ClosedFormTerm<R>> {
    assert!(n >= 1, "closed form requires n >= 1");
    (0..=k)
        .map(|s| {
            let cycle_weight = rising_factorial_in(z, 0, s as usize);
            let fact_power = R::from_bigint(&factorial(s)).pow(n - 1);
            let base = R::from_bigint(&binomial(k, s))
                .mul(&a0.pow(k - s))
                .mul(&a1.pow(s))
                .mul(&rising_factorial_in(z, s as i64, (k - s) as usize));
            let value = cycle_weight.mul(&fact_power).mul(&base.pow(n));
            ClosedFormTerm {
                s,
                cycle_weight,
                fact_power,
                base,
                value,
            }
        })
        .collect()
}

/// per(z; (a0·I_n + a1·P_n) ⊗ J_k), exactly, for any ring and any
/// ring element standing in for z.
pub fn closed_form_per_z<R: Ring>(n: u64, k: u64, a0: &R, a1: &R, z: &R) -> R {
    closed_form_terms(n, k, a0, a1, z)
        .into_iter()
        .fold(R::zero(), |acc, t| acc.add(&t.value))
}

/// Symbolic-z convenience form over integer coefficients.
pub fn closed_form_per_z_poly(n: u64, k: u64, a0: &BigIntVal, a1: &BigIntVal) -> ZPoly {
    closed_form_per_z(
        n,
        k,
        &ZPoly::constant(a0.clone()),
        &ZPoly::constant(a1.clone()),
        &ZPoly::var(),
    )
}

/// Integer-z convenience form (the fast path for large n, k).
pub fn closed_form_per_z_at(n: u64, k: u64, a0: &BigIntVal, a1: &BigIntVal, z: &BigIntVal) -> BigIntVal {
    closed_form_per_z(n, k, a0, a1, z)
}

// ---------------------------------------------------------------------
// Banded profile DP for per(z; (Σ a_i P_n^{−r+i}) ⊗ J_k)
// ---------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BandedMethod {
    ProfileDp,
    /// Band wider than the circle; evaluated by the brute-force oracle.
    OracleFallback,
}

#[derive(Clone, Debug)]
pub struct BandedValue<R: Ring> {
    pub value: R,
    pub method: BandedMethod,
}

/// DP state: open paths as (start column, end row) pairs plus the used
/// columns at or beyond the current prune floor. A path's start column
/// is unused and waits for a future row's edge; its end row is pending
/// and extends the path when processed. Closing an edge from a path's
/// end row into its own start column completes a cycle.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
struct DpState {
    paths: Vec<(u32, u32)>,
    used: Vec<u32>,
}

impl DpState {
    fn normalize(&mut self) {
        self.paths.sort_unstable();
        self.used.sort_unstable();
    }

    fn uses(&self, col: u32) -> bool {
        self.used.binary_search(&col).is_ok()
    }

    /// Advances the prune floor: every column dropping below it must be
    /// used, and no open path may start below it.
    fn advance_floor(&mut self, old_floor: u32, new_floor: u32) -> bool {
        if new_floor <= old_floor {
            return true;
        }
        for c in old_floor..new_floor {
            if !self.uses(c) {
                return false; // column can no longer be covered
            }
        }
        if self.paths.iter().any(|&(s, _)| s < new_floor) {
            return false; // start column can no longer be consumed
        }
        self.used.retain(|&c| c >= new_floor);
        true
    }
}

struct BandGeometry {
    n: usize,
    k: usize,
    /// (displacement, coefficient index), displacements lifted to a
    /// contiguous integer band of span < n.
    disps: Vec<(i64, usize)>,
}

impl BandGeometry {
    fn new(spec: &CirculantSpec) -> Self {
        let n = spec.n as i64;
        let t = (spec.band() - 1) as i64;
        let d0 = ((n - (spec.r as i64 % n)) % n + n) % n; // (−r) mod n in [0, n)
        let span = |lo: i64, hi: i64| lo.abs().max(hi.abs());
        let start = if span(d0, d0 + t) <= span(d0 - n, d0 - n + t) {
            d0
        } else {
            d0 - n
        };
        BandGeometry {
            n: spec.n,
            k: spec.k,
            disps: (0..spec.band()).map(|i| (start + i as i64, i)).collect(),
        }
    }

    fn block_of(&self, idx: usize) -> usize {
        (idx - 1) / self.k + 1
    }

    fn cols_of_block(&self, b: usize) -> std::ops::RangeInclusive<usize> {
        ((b - 1) * self.k + 1)..=(b * self.k)
    }

    /// In-line targets (column, coefficient index) of a row.
    fn inline_targets(&self, row: usize) -> Vec<(usize, usize)> {
        let u = self.block_of(row) as i64;
        let mut out = Vec::new();
        for &(d, ci) in &self.disps {
            let v = u + d;
            if v >= 1 && v <= self.n as i64 {
                for c in self.cols_of_block(v as usize) {
                    out.push((c, ci));
                }
            }
        }
        out
    }

    /// Wrap targets of a row: blocks beyond either end of the line,
    /// folded back onto the circle.
    fn wrap_targets(&self, row: usize) -> Vec<(usize, usize)> {
        let u = self.block_of(row) as i64;
        let n = self.n as i64;
        let mut out = Vec::new();
        for &(d, ci) in &self.disps {
            let v = u + d;
            if v < 1 || v > n {
                let w = (v - 1).rem_euclid(n) + 1;
                for c in self.cols_of_block(w as usize) {
                    out.push((c, ci));
                }
            }
        }
        out
    }

    /// Lowest column any row at or after `row` can reach in line,
    /// clamped just past the last column.
    fn floor_at(&self, row: usize) -> u32 {
        let d_min = self.disps.iter().map(|&(d, _)| d).min().unwrap_or(0);
        let b0 = self.block_of(row) as i64 + d_min;
        let floor = if b0 <= 1 {
            1
        } else {
            ((b0 - 1) as usize) * self.k + 1
        };
        floor.min(self.n * self.k + 1) as u32
    }
}

/// Decomposes a conditioned partial injection (wrap edges) into its
/// cycle count and open chains.
fn assemble_chains(edges: &[(usize, usize)]) -> (usize, Vec<(u32, u32)>) {
    let map: HashMap<usize, usize> = edges.iter().copied().collect();
    let images: std::collections::HashSet<usize> = edges.iter().map(|&(_, j)| j).collect();
    let mut cycles = 0;
    let mut chains = Vec::new();
    let mut seen: std::collections::HashSet<usize> = std::collections::HashSet::new();
    for &(start, _) in edges {
        if seen.contains(&start) || images.contains(&start) {
            continue; // not a chain start
        }
        // walk to the end of the chain
        let mut cur = start;
        seen.insert(cur);
        let mut end = map[&cur];
        while map.contains_key(&end) {
            cur = end;
            seen.insert(cur);
            end = map[&cur];
        }
        chains.push((start as u32, end as u32));
    }
    // anything unseen with an out-edge sits on a pure cycle
    for &(i, _) in edges {
        if seen.contains(&i) {
            continue;
        }
        cycles += 1;
        let mut cur = i;
        while !seen.contains(&cur) {
            seen.insert(cur);
            cur = map[&cur];
        }
    }
    (cycles, chains)
}

struct BandedRun<'a, R: Ring> {
    geom: BandGeometry,
    coeffs: Vec<R>,
    z: &'a R,
    total: R,
}

impl<'a, R: Ring> BandedRun<'a, R> {
    /// Runs the line DP for one conditioned wrap-edge set.
    fn run_line(&mut self, wrap_edges: &[(usize, usize, usize)]) {
        let size = self.geom.n * self.geom.k;
        let mut init_weight = R::one();
        for &(_, _, ci) in wrap_edges {
            init_weight = init_weight.mul(&self.coeffs[ci]);
        }
        let plain: Vec<(usize, usize)> =
            wrap_edges.iter().map(|&(i, j, _)| (i, j)).collect();
        let (cycles, chains) = assemble_chains(&plain);
        for _ in 0..cycles {
            init_weight = init_weight.mul(self.z);
        }
        let mut state = DpState {
            paths: chains,
            used: plain.iter().map(|&(_, j)| j as u32).collect(),
        };
        state.normalize();
        let pre_assigned: std::collections::HashSet<usize> =
            plain.iter().map(|&(i, _)| i).collect();

        let mut layer: HashMap<DpState, R> = HashMap::new();
        let mut floor = 1u32;
        if !state.advance_floor(1, self.geom.floor_at(1)) {
            return;
        }
        floor = floor.max(self.geom.floor_at(1));
        layer.insert(state, init_weight);

        for row in 1..=size {
            let new_floor = self.geom.floor_at(row);
            if new_floor > floor {
                let mut moved: HashMap<DpState, R> = HashMap::new();
                for (mut st, w) in layer {
                    if st.advance_floor(floor, new_floor) {
                        merge(&mut moved, st, w);
                    }
                }
                layer = moved;
                floor = new_floor;
            }
            if layer.is_empty() {
                return;
            }
            if pre_assigned.contains(&row) {
                continue; // edge fixed by conditioning
            }
            let targets = self.geom.inline_targets(row);
            let mut next: HashMap<DpState, R> = HashMap::new();
            for (st, w) in &layer {
                let tail = st.paths.iter().position(|&(_, e)| e == row as u32);
                for &(j, ci) in &targets {
                    let jc = j as u32;
                    if st.uses(jc) {
                        continue;
                    }
                    let head = st.paths.iter().position(|&(s, _)| s == jc);
                    let mut ns = st.clone();
                    let mut nw = w.mul(&self.coeffs[ci]);
                    match (tail, head) {
                        (Some(p), Some(q)) if p == q => {
                            ns.paths.remove(p);
                            nw = nw.mul(self.z);
                        }
                        (Some(p), Some(q)) => {
                            let start = ns.paths[p].0;
                            let end = ns.paths[q].1;
                            let (lo, hi) = if p < q { (p, q) } else { (q, p) };
                            ns.paths.remove(hi);
                            ns.paths.remove(lo);
                            ns.paths.push((start, end));
                        }
                        (Some(p), None) => {
                            let start = ns.paths[p].0;
                            ns.paths[p] = (start, jc);
                        }
                        (None, Some(q)) => {
                            let end = ns.paths[q].1;
                            ns.paths[q] = (row as u32, end);
                        }
                        (None, None) => {
                            if jc == row as u32 {
                                nw = nw.mul(self.z);
                            } else {
                                ns.paths.push((row as u32, jc));
                            }
                        }
                    }
                    ns.used.push(jc);
                    ns.normalize();
                    merge(&mut next, ns, nw);
                }
            }
            layer = next;
        }

        for (st, w) in layer {
            debug_assert!(st.paths.is_empty(), "open path survived the full line");
            self.total = self.total.add(&w);
        }
    }
}

fn merge<R: Ring>(map: &mut HashMap<DpState, R>, key: DpState, w: R) {
    use std::collections::hash_map::Entry;
    match map.entry(key) {
        Entry::Vacant(v) => {
            v.insert(w);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get().add(&w);
            *o.get_mut() = sum;
        }
    }
}

/// Enumerates all conditioned wrap-edge assignments and sums the line
/// DP over them.
fn banded_dp<R: Ring>(spec: &CirculantSpec, lift: &dyn Fn(&BigIntVal) -> R, z: &R) -> Result<R> {
    let geom = BandGeometry::new(spec);
    let size = spec.size();
    let mut wrap_rows: Vec<(usize, Vec<(usize, usize)>)> = Vec::new();
    let mut combos: u128 = 1;
    for row in 1..=size {
        let t = geom.wrap_targets(row);
        if !t.is_empty() {
            combos = combos.saturating_mul((t.len() + 1) as u128);
            wrap_rows.push((row, t));
        }
    }
    if combos > WRAP_ENUM_LIMIT {
        return Err(Error::limit(format!(
            "wrap-edge conditioning would enumerate {combos} cases; \
             reduce the offset r or the spec size"
        )));
    }
    let coeffs: Vec<R> = spec.coeffs.iter().map(|c| lift(c)).collect();
    let mut run = BandedRun {
        geom,
        coeffs,
        z,
        total: R::zero(),
    };

    // depth-first enumeration of injective wrap assignments
    fn rec<R: Ring>(
        run: &mut BandedRun<R>,
        wrap_rows: &[(usize, Vec<(usize, usize)>)],
        depth: usize,
        chosen: &mut Vec<(usize, usize, usize)>,
        used_cols: &mut std::collections::HashSet<usize>,
    ) {
        if depth == wrap_rows.len() {
            run.run_line(chosen);
            return;
        }
        let (row, ref targets) = wrap_rows[depth];
        // option: this row does not wrap
        rec(run, wrap_rows, depth + 1, chosen, used_cols);
        for &(col, ci) in targets {
            if used_cols.contains(&col) {
                continue;
            }
            used_cols.insert(col);
            chosen.push((row, col, ci));
            rec(run, wrap_rows, depth + 1, chosen, used_cols);
            chosen.pop();
            used_cols.remove(&col);
        }
    }
    let mut chosen = Vec::new();
    let mut used_cols = std::collections::HashSet::new();
    rec(&mut run, &wrap_rows, 0, &mut chosen, &mut used_cols);
    Ok(run.total)
}

/// Exact per(z; circulant_matrix(spec)) without enumerating the (nk)!
/// permutations: profile DP over rows whose state tracks used columns
/// in the sliding band window and the pairing of open path endpoints,
/// with wrap-around handled by conditioning on the wrap-crossing edges.
///
/// A band wider than the circle (t+1 > n) falls back to the oracle.
pub fn banded_per_z<R: Ring>(
    spec: &CirculantSpec,
    lift: &dyn Fn(&BigIntVal) -> R,
    z: &R,
) -> Result<BandedValue<R>> {
    if spec.band() > spec.n {
        let size = spec.size();
        if size > FALLBACK_ORACLE_MAX {
            return Err(Error::limit(format!(
                "band {} exceeds block count {} and the {size}-size board \
                 is beyond the oracle fallback; reduce the spec",
                spec.band(),
                spec.n
            )));
        }
        let mat = circulant_matrix(spec, |c| lift(c));
        let per = per_z_oracle_with(&mat, true)?;
        // evaluate the z-polynomial at the requested ring element
        let mut value = R::zero();
        for (c, coeff) in per.coeffs().iter().enumerate() {
            value = value.add(&coeff.mul(&z.pow(c as u64)));
        }
        return Ok(BandedValue {
            value,
            method: BandedMethod::OracleFallback,
        });
    }
    Ok(BandedValue {
        value: banded_dp(spec, lift, z)?,
        method: BandedMethod::ProfileDp,
    })
}

/// Symbolic-z banded evaluation over integer coefficients.
pub fn banded_per_z_poly(spec: &CirculantSpec) -> Result<BandedValue<ZPoly>> {
    banded_per_z(spec, &|c| ZPoly::constant(c.clone()), &ZPoly::var())
}

/// Integer-z banded evaluation.
pub fn banded_per_z_at(spec: &CirculantSpec, z: &BigIntVal) -> Result<BandedValue<BigIntVal>> {
    banded_per_z(spec, &|c| c.clone(), z)
}

// ---------------------------------------------------------------------
// Full R(x;z;·) for structured specs
// ---------------------------------------------------------------------

/// Exact R(x;z; circulant_matrix(spec)) via the last-rows expansion
/// with memoization. Boards above nk = 12 are refused.
pub fn structured_rook_z(spec: &CirculantSpec) -> Result<XZPoly> {
    let size = spec.size();
    if size > STRUCTURED_ROOK_MAX {
        return Err(Error::limit(format!(
            "structured rook evaluation accepts nk <= {STRUCTURED_ROOK_MAX}, got {size}; \
             use the per-z evaluators (closed form or dp) for larger specs"
        )));
    }
    let mat = circulant_matrix(spec, |c| c.clone());
    if size <= 1 {
        return Ok(rook_poly_oracle_with(&mat, true)?.poly);
    }
    Ok(expand_last_k(&mat, 1)?.poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rising_factorial, DensePoly, MultiPoly};

    fn b(v: i64) -> BigIntVal {
        BigIntVal::from(v)
    }

    fn spec(n: usize, k: usize, r: usize, coeffs: Vec<i64>) -> CirculantSpec {
        CirculantSpec::new(n, k, r, coeffs.into_iter().map(b).collect()).unwrap()
    }

    #[test]
    fn closed_form_smallest_cases() {
        // n=1, k=1 symbolic: z·(a0 + a1)
        let ring = MultiPoly::ring(vec!["a0".into(), "a1".into()]);
        let a0 = MultiPoly::var_in(&ring, "a0").unwrap();
        let a1 = MultiPoly::var_in(&ring, "a1").unwrap();
        let z = DensePoly::<MultiPoly>::var();
        let got = closed_form_per_z(1, 1, &DensePoly::constant(a0.clone()), &DensePoly::constant(a1.clone()), &z);
        let expect = DensePoly::from_coeffs(vec![MultiPoly::zero(), a0.add(&a1)]);
        assert_eq!(got, expect);

        // n=2, k=1, a0=a1=1: z² + z
        assert_eq!(closed_form_per_z_poly(2, 1, &b(1), &b(1)), rising_factorial(0, 2));

        // n=1, k=2, a0=a1=1: 4z² + 4z
        assert_eq!(
            closed_form_per_z_poly(1, 2, &b(1), &b(1)),
            ZPoly::from_coeffs(vec![0.into(), 4.into(), 4.into()])
        );
    }

    #[test]
    fn closed_form_k1_general_n() {
        // k=1, n ≥ 2: a0ⁿ·zⁿ + a1ⁿ·z
        for n in 2..=5u64 {
            let got = closed_form_per_z_poly(n, 1, &b(2), &b(3));
            let mut coeffs = vec![BigIntVal::from(0); n as usize + 1];
            coeffs[1] = b(3).pow(n as u32);
            coeffs[n as usize] = b(2).pow(n as u32);
            assert_eq!(got, ZPoly::from_coeffs(coeffs), "n={n}");
        }
    }

    #[test]
    fn closed_form_matches_oracle_small() {
        for (n, k) in [(1, 1), (2, 1), (1, 2), (3, 1), (2, 2), (4, 1), (1, 3), (3, 2), (2, 3)] {
            let sp = spec(n, k, 0, vec![2, -1]);
            let mat = circulant_matrix(&sp, |c| c.clone());
            let oracle = per_z_oracle_with(&mat, true).unwrap();
            let got = closed_form_per_z_poly(n as u64, k as u64, &b(2), &b(-1));
            assert_eq!(got, oracle, "n={n} k={k}");
        }
    }

    #[test]
    fn closed_form_terms_assemble() {
        let terms = closed_form_terms(3, 2, &ZPoly::constant(b(1)), &ZPoly::constant(b(1)), &ZPoly::var());
        assert_eq!(terms.len(), 3);
        let sum = terms.iter().fold(ZPoly::zero(), |acc, t| acc.add(&t.value));
        assert_eq!(sum, closed_form_per_z_poly(3, 2, &b(1), &b(1)));
    }

    #[test]
    fn banded_matches_hand_values() {
        // (n=2, k=1, r=0, [1,2]): per(z; [[1,2],[2,1]]) = z² + 4z
        let v = banded_per_z_poly(&spec(2, 1, 0, vec![1, 2])).unwrap();
        assert_eq!(v.method, BandedMethod::ProfileDp);
        assert_eq!(v.value, ZPoly::from_coeffs(vec![0.into(), 4.into(), 1.into()]));

        // (n=1, k=2, r=0, [1,1]): band exceeds the circle; oracle fallback
        let v = banded_per_z_poly(&spec(1, 2, 0, vec![1, 1])).unwrap();
        assert_eq!(v.method, BandedMethod::OracleFallback);
        assert_eq!(v.value, closed_form_per_z_poly(1, 2, &b(1), &b(1)));

        // (n=3, k=1, r=1, [1,1,1]): equals the oracle on the materialized board
        let sp = spec(3, 1, 1, vec![1, 1, 1]);
        let v = banded_per_z_poly(&sp).unwrap();
        let mat = circulant_matrix(&sp, |c| c.clone());
        assert_eq!(v.value, per_z_oracle_with(&mat, true).unwrap());
    }

    #[test]
    fn banded_matches_oracle_sweep() {
        // every spec with nk ≤ 8, band ≤ 3, r ≤ n, fixed coefficient pool
        let pools: &[&[i64]] = &[&[1], &[1, 2], &[2, -1], &[1, 1, 1], &[1, -2, 3]];
        for n in 1..=8usize {
            for k in 1..=3usize {
                if n * k > 8 {
                    continue;
                }
                for coeffs in pools {
                    if coeffs.len() > n {
                        continue;
                    }
                    for r in 0..=n {
                        let sp = spec(n, k, r, coeffs.to_vec());
                        let mat = circulant_matrix(&sp, |c| c.clone());
                        let oracle = per_z_oracle_with(&mat, true).unwrap();
                        let got = banded_per_z_poly(&sp).unwrap();
                        assert_eq!(
                            got.value, oracle,
                            "n={n} k={k} r={r} coeffs={coeffs:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn banded_agrees_with_closed_form_beyond_oracle() {
        for n in [10usize, 17, 25] {
            for k in 1..=2usize {
                let sp = spec(n, k, 0, vec![2, 3]);
                let z = b(2);
                let dp = banded_per_z_at(&sp, &z).unwrap();
                let cf = closed_form_per_z_at(n as u64, k as u64, &b(2), &b(3), &z);
                assert_eq!(dp.value, cf, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn banded_handles_zero_z() {
        // z = 0 kills every permutation (square boards always close a cycle)
        let sp = spec(4, 1, 0, vec![1, 1]);
        let v = banded_per_z_at(&sp, &b(0)).unwrap();
        assert_eq!(v.value, b(0));
    }

    #[test]
    fn structured_rook_examples() {
        // symbolic two-block circulant equals the oracle
        let sp = spec(2, 1, 0, vec![3, 5]);
        let got = structured_rook_z(&sp).unwrap();
        let mat = circulant_matrix(&sp, |c| c.clone());
        assert_eq!(got, rook_poly_oracle_with(&mat, true).unwrap().poly);

        // all-zero coefficients: R = 1
        let sp = spec(3, 1, 0, vec![0, 0]);
        assert_eq!(structured_rook_z(&sp).unwrap(), XZPoly::one());

        // J₂ as a 1-block spec: 1 + (2z+2)x + (z²+z)x²
        let sp = spec(1, 2, 0, vec![1]);
        let got = structured_rook_z(&sp).unwrap();
        let expect = XZPoly::from_x_coeffs(vec![
            ZPoly::one(),
            ZPoly::from_coeffs(vec![2.into(), 2.into()]),
            ZPoly::from_coeffs(vec![0.into(), 1.into(), 1.into()]),
        ]);
        assert_eq!(got, expect);

        // size cap
        let sp = spec(13, 1, 0, vec![1, 1]);
        assert!(matches!(structured_rook_z(&sp), Err(Error::Limit(_))));
    }
}
