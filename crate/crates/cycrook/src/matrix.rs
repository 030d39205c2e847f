//! Matrices over a ring with 1-based ordered-index conventions.
//!
//! Column ORDER is semantically significant for cyclic rook polynomials:
//! a board's p-th row is identified with its p-th column position when
//! counting cycles, so every submatrix operation here preserves the
//! exact ordering of the index sequences it is given.

use crate::algebra::{BigIntVal, Ring};
use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Ordered sequence of 1-based indices.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IndexSeq(Vec<usize>);

impl IndexSeq {
    pub fn new(items: Vec<usize>) -> Self {
        IndexSeq(items)
    }

    /// N_n = (1, 2, …, n).
    pub fn full(n: usize) -> Self {
        IndexSeq((1..=n).collect())
    }

    pub fn items(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_strictly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] < w[1])
    }

    fn check_bounds(&self, bound: usize, what: &str) -> Result<()> {
        for &i in &self.0 {
            if i == 0 || i > bound {
                return Err(Error::structural(format!(
                    "{what} index {i} out of bounds 1..={bound}"
                )));
            }
        }
        Ok(())
    }

    fn check_no_repeats(&self, what: &str) -> Result<()> {
        let mut seen = self.0.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::structural(format!("{what} indices repeat")));
        }
        Ok(())
    }

    /// Each element repeated k times consecutively: (a,b)⟨2⟩ = (a,a,b,b).
    pub fn repeat_each(&self, k: usize) -> IndexSeq {
        let mut out = Vec::with_capacity(self.0.len() * k);
        for &i in &self.0 {
            for _ in 0..k {
                out.push(i);
            }
        }
        IndexSeq(out)
    }
}

impl std::fmt::Display for IndexSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({})",
            self.0
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    }
}

/// Dense rectangular matrix over a ring, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RMatrix<R: Ring> {
    rows: usize,
    cols: usize,
    entries: Vec<R>,
}

impl<R: Ring> RMatrix<R> {
    pub fn new(rows: usize, cols: usize, entries: Vec<R>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::structural(format!(
                "entry count {} does not match {rows}x{cols}",
                entries.len()
            )));
        }
        Ok(RMatrix { rows, cols, entries })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![R::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<R>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::structural("rows have unequal lengths"));
        }
        Ok(RMatrix {
            rows: m,
            cols: n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry at 1-based (i, j).
    pub fn at(&self, i: usize, j: usize) -> &R {
        debug_assert!(i >= 1 && i <= self.rows && j >= 1 && j <= self.cols);
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.entries[(i - 1) * self.cols + (j - 1)] = v;
    }

    pub fn entries(&self) -> &[R] {
        &self.entries
    }

    /// Entrywise sum; shapes must match.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::contract(format!(
                "shape mismatch: {}x{} vs {}x{}",
                self.rows, other.rows, self.cols, other.cols
            )));
        }
        Ok(RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .zip(other.entries.iter())
                .map(|(a, b)| a.add(b))
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&RMatrix {
            rows: other.rows,
            cols: other.cols,
            entries: other.entries.iter().map(|e| e.neg()).collect(),
        })
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RMatrix<S> {
        RMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Ordered submatrix: entry (p, q) = self[rows[p], cols[q]].
    /// Order of both sequences is preserved exactly; repeats forbidden.
    pub fn submatrix(&self, rows: &IndexSeq, cols: &IndexSeq) -> Result<Self> {
        rows.check_bounds(self.rows, "row")?;
        cols.check_bounds(self.cols, "column")?;
        rows.check_no_repeats("row")?;
        cols.check_no_repeats("column")?;
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows.items() {
            for &j in cols.items() {
                entries.push(self.at(i, j).clone());
            }
        }
        Ok(RMatrix {
            rows: rows.len(),
            cols: cols.len(),
            entries,
        })
    }

    /// Complementary submatrix: rows ∉ rows_out and columns ∉ cols_out,
    /// both kept in increasing order. The deletion lists must be
    /// strictly increasing.
    pub fn complement_submatrix(&self, rows_out: &IndexSeq, cols_out: &IndexSeq) -> Result<Self> {
        if !rows_out.is_strictly_increasing() || !cols_out.is_strictly_increasing() {
            return Err(Error::structural(
                "complement deletion lists must be strictly increasing",
            ));
        }
        rows_out.check_bounds(self.rows, "row")?;
        cols_out.check_bounds(self.cols, "column")?;
        let keep_rows: Vec<usize> = (1..=self.rows)
            .filter(|i| !rows_out.items().contains(i))
            .collect();
        let keep_cols: Vec<usize> = (1..=self.cols)
            .filter(|j| !cols_out.items().contains(j))
            .collect();
        self.submatrix(&IndexSeq::new(keep_rows), &IndexSeq::new(keep_cols))
    }

    /// Column-sum selection: the i-th output column is the lead column
    /// plus the ring-sum of the extras' columns.
    pub fn column_sum_select(&self, groups: &[(usize, Vec<usize>)]) -> Result<Self> {
        for (lead, extras) in groups {
            IndexSeq::new(vec![*lead]).check_bounds(self.cols, "column")?;
            IndexSeq::new(extras.clone()).check_bounds(self.cols, "column")?;
        }
        let q = groups.len();
        let mut entries = Vec::with_capacity(self.rows * q);
        for i in 1..=self.rows {
            for (lead, extras) in groups {
                let mut v = self.at(i, *lead).clone();
                for &e in extras {
                    v = v.add(self.at(i, e));
                }
                entries.push(v);
            }
        }
        Ok(RMatrix {
            rows: self.rows,
            cols: q,
            entries,
        })
    }

    /// Standard Kronecker product: block (i, j) equals a_ij · B.
    pub fn kronecker(&self, other: &Self) -> Self {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 1..=rows {
            for j in 1..=cols {
                let (bi, bj) = ((i - 1) / other.rows + 1, (j - 1) / other.cols + 1);
                let (ri, rj) = ((i - 1) % other.rows + 1, (j - 1) % other.cols + 1);
                entries.push(self.at(bi, bj).mul(other.at(ri, rj)));
            }
        }
        RMatrix { rows, cols, entries }
    }

    /// The cyclic shift P_n: row i has its 1 in column (i mod n) + 1,
    /// so (P_n)^n = I_n.
    pub fn cyclic_shift(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 1..=n {
            m.set(i, i % n + 1, R::one());
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 1..=n {
            m.set(i, i, R::one());
        }
        m
    }

    /// All-ones J_{m,n}.
    pub fn ones(rows: usize, cols: usize) -> Self {
        RMatrix {
            rows,
            cols,
            entries: vec![R::one(); rows * cols],
        }
    }

    /// Ring matrix product (used for small sanity matrices only).
    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::contract("inner dimensions differ"));
        }
        let mut out = Self::zero(self.rows, other.cols);
        for i in 1..=self.rows {
            for j in 1..=other.cols {
                let mut acc = R::zero();
                for k in 1..=self.cols {
                    acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }
}

/// Parameters for (Σ_{i=0}^t a_i P_n^{−r+i}) ⊗ J_k, an nk×nk matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpec {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub coeffs: Vec<BigIntVal>,
}

impl Serialize for CirculantSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("CirculantSpec", 4)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("r", &self.r)?;
        let coeffs: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

impl CirculantSpec {
    pub fn new(n: usize, k: usize, r: usize, coeffs: Vec<BigIntVal>) -> Result<Self> {
        if n < 1 || k < 1 {
            return Err(Error::structural("circulant spec requires n >= 1 and k >= 1"));
        }
        if coeffs.is_empty() {
            return Err(Error::structural("circulant spec requires at least one coefficient"));
        }
        Ok(CirculantSpec { n, k, r, coeffs })
    }

    /// Band width t + 1 (number of coefficients).
    pub fn band(&self) -> usize {
        self.coeffs.len()
    }

    pub fn size(&self) -> usize {
        self.n * self.k
    }
}

/// Materializes the spec exactly, using P_n^{−r+i} = (P_n)^((n−r+i) mod n).
pub fn circulant_matrix<R: Ring>(spec: &CirculantSpec, lift: impl Fn(&BigIntVal) -> R) -> RMatrix<R> {
    let n = spec.n;
    let mut circ = RMatrix::<R>::zero(n, n);
    for (i, a) in spec.coeffs.iter().enumerate() {
        // exponent of P_n, reduced mod n with r folded in
        let shift = ((n as i64 - (spec.r as i64 % n as i64) + i as i64) % n as i64 + n as i64)
            as usize
            % n;
        for row in 1..=n {
            let col = (row - 1 + shift) % n + 1;
            let cur = circ.at(row, col).clone();
            circ.set(row, col, cur.add(&lift(a)));
        }
    }
    circ.kronecker(&RMatrix::<R>::ones(spec.k, spec.k))
}

/// All strictly increasing s-element sequences from 1..=m, lexicographic.
/// Empty stream when s > m; the single empty sequence when s = 0.
pub fn enumerate_increasing(s: usize, m: usize) -> Vec<IndexSeq> {
    let mut out = Vec::new();
    if s > m {
        return out;
    }
    let mut cur = Vec::with_capacity(s);
    fn rec(start: usize, s: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexSeq>) {
        if cur.len() == s {
            out.push(IndexSeq::new(cur.clone()));
            return;
        }
        let remaining = s - cur.len();
        for v in start..=(m + 1 - remaining) {
            cur.push(v);
            rec(v + 1, s, m, cur, out);
            cur.pop();
        }
    }
    rec(1, s, m, &mut cur, &mut out);
    out
}

// ---------------------------------------------------------------------
// JSON interchange formats
// ---------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct MatrixDoc {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<serde_json::Value>>,
}

fn value_to_bigint(v: &serde_json::Value) -> Result<BigIntVal> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigIntVal::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigIntVal::from(u))
            } else {
                Err(Error::input(format!(
                    "non-integer matrix entry {n}; use a decimal string for big values"
                )))
            }
        }
        serde_json::Value::String(s) => s
            .parse::<BigIntVal>()
            .map_err(|_| Error::input(format!("bad integer literal {s:?}"))),
        other => Err(Error::input(format!("unsupported entry {other}"))),
    }
}

/// Parses the matrix file format `{"rows": m, "cols": n, "entries": [[..]]}`
/// with integer entries (decimal strings permitted for big values).
pub fn matrix_from_json(text: &str) -> Result<RMatrix<BigIntVal>> {
    let doc: MatrixDoc =
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad matrix JSON: {e}")))?;
    if doc.entries.len() != doc.rows {
        return Err(Error::input(format!(
            "expected {} rows of entries, found {}",
            doc.rows,
            doc.entries.len()
        )));
    }
    let mut rows = Vec::with_capacity(doc.rows);
    for row in &doc.entries {
        if row.len() != doc.cols {
            return Err(Error::input(format!(
                "expected {} entries per row, found {}",
                doc.cols,
                row.len()
            )));
        }
        rows.push(row.iter().map(value_to_bigint).collect::<Result<Vec<_>>>()?);
    }
    RMatrix::from_rows(rows)
}

pub fn matrix_to_json(m: &RMatrix<BigIntVal>) -> String {
    let entries: Vec<Vec<serde_json::Value>> = (1..=m.rows())
        .map(|i| {
            (1..=m.cols())
                .map(|j| serde_json::Value::String(m.at(i, j).to_string()))
                .collect()
        })
        .collect();
    serde_json::to_string(&MatrixDoc {
        rows: m.rows(),
        cols: m.cols(),
        entries,
    })
    .expect("matrix serializes")
}

#[derive(Serialize, Deserialize)]
struct CirculantDoc {
    n: usize,
    k: usize,
    r: usize,
    coeffs: Vec<serde_json::Value>,
}

/// Parses `{"n":, "k":, "r":, "coeffs": [...]}`.
pub fn circulant_spec_from_json(text: &str) -> Result<CirculantSpec> {
    let doc: CirculantDoc =
        serde_json::from_str(text).map_err(|e| Error::input(format!("bad spec JSON: {e}")))?;
    let coeffs = doc
        .coeffs
        .iter()
        .map(value_to_bigint)
        .collect::<Result<Vec<_>>>()?;
    CirculantSpec::new(doc.n, doc.k, doc.r, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = RMatrix<BigIntVal>;

    fn b(v: i64) -> BigIntVal {
        BigIntVal::from(v)
    }

    fn m2(a: i64, bb: i64, c: i64, d: i64) -> M {
        M::from_rows(vec![vec![b(a), b(bb)], vec![b(c), b(d)]]).unwrap()
    }

    #[test]
    fn submatrix_preserves_order() {
        let a = m2(1, 2, 3, 4);
        let s = a
            .submatrix(&IndexSeq::new(vec![2]), &IndexSeq::new(vec![2, 1]))
            .unwrap();
        assert_eq!(s.entries(), &[b(4), b(3)]);
        // identity selection
        let full = a
            .submatrix(&IndexSeq::full(2), &IndexSeq::full(2))
            .unwrap();
        assert_eq!(full, a);
    }

    #[test]
    fn submatrix_3x5_shape() {
        let a = M::from_rows(
            (1..=3)
                .map(|i| (1..=5).map(|j| b((10 * i + j) as i64)).collect())
                .collect(),
        )
        .unwrap();
        let s = a
            .submatrix(&IndexSeq::new(vec![1, 2]), &IndexSeq::new(vec![1, 3, 4, 5]))
            .unwrap();
        assert_eq!((s.rows(), s.cols()), (2, 4));
        assert_eq!(s.at(2, 2), &b(23));
    }

    #[test]
    fn submatrix_rejects_bad_indices() {
        let a = m2(1, 2, 3, 4);
        assert!(a
            .submatrix(&IndexSeq::new(vec![3]), &IndexSeq::full(2))
            .is_err());
        assert!(a
            .submatrix(&IndexSeq::new(vec![1, 1]), &IndexSeq::full(2))
            .is_err());
    }

    #[test]
    fn complement_examples() {
        let a = m2(1, 2, 3, 4);
        let s = a
            .complement_submatrix(&IndexSeq::new(vec![1]), &IndexSeq::new(vec![1]))
            .unwrap();
        assert_eq!(s.entries(), &[b(4)]);
        let all = a
            .complement_submatrix(&IndexSeq::new(vec![]), &IndexSeq::new(vec![]))
            .unwrap();
        assert_eq!(all, a);
        let wide = M::from_rows(
            (1..=3)
                .map(|i| (1..=4).map(|j| b((10 * i + j) as i64)).collect())
                .collect(),
        )
        .unwrap();
        let c = wide
            .complement_submatrix(&IndexSeq::new(vec![2]), &IndexSeq::new(vec![1, 4]))
            .unwrap();
        assert_eq!((c.rows(), c.cols()), (2, 2));
        assert_eq!(c.entries(), &[b(12), b(13), b(32), b(33)]);
        // non-increasing deletion list is structural
        assert!(wide
            .complement_submatrix(&IndexSeq::new(vec![2, 2]), &IndexSeq::new(vec![]))
            .is_err());
    }

    #[test]
    fn column_sum_select_examples() {
        let a = m2(1, 2, 3, 4);
        let s = a.column_sum_select(&[(1, vec![2])]).unwrap();
        assert_eq!(s.entries(), &[b(3), b(7)]);
        // identity grouping
        let id = a.column_sum_select(&[(1, vec![]), (2, vec![])]).unwrap();
        assert_eq!(id, a);
        let row = M::from_rows(vec![vec![b(1), b(2), b(3)]]).unwrap();
        let g = row
            .column_sum_select(&[(1, vec![2, 3]), (2, vec![])])
            .unwrap();
        assert_eq!(g.entries(), &[b(6), b(2)]);
    }

    #[test]
    fn kronecker_examples() {
        let i2 = M::identity(2);
        let j2 = M::ones(2, 2);
        let k = i2.kronecker(&j2);
        assert_eq!(
            k.entries(),
            &[
                b(1), b(1), b(0), b(0),
                b(1), b(1), b(0), b(0),
                b(0), b(0), b(1), b(1),
                b(0), b(0), b(1), b(1)
            ]
        );
        let a = m2(1, 2, 3, 4);
        assert_eq!(a.kronecker(&M::identity(1)), a);
        let p2 = M::cyclic_shift(2);
        assert_eq!(p2.kronecker(&M::ones(1, 1)), p2);
        assert_eq!(p2.entries(), &[b(0), b(1), b(1), b(0)]);
    }

    #[test]
    fn cyclic_shift_orientation_and_order() {
        let p3 = M::cyclic_shift(3);
        // rows map 1→2, 2→3, 3→1
        assert_eq!(p3.at(1, 2), &b(1));
        assert_eq!(p3.at(2, 3), &b(1));
        assert_eq!(p3.at(3, 1), &b(1));
        let cube = p3.matmul(&p3).unwrap().matmul(&p3).unwrap();
        assert_eq!(cube, M::identity(3));
        for n in 1..=8 {
            let p = M::cyclic_shift(n);
            let mut acc = M::identity(n);
            for _ in 0..n {
                acc = acc.matmul(&p).unwrap();
            }
            assert_eq!(acc, M::identity(n), "P_{n}^{n} = I");
        }
        assert_eq!(M::cyclic_shift(1), M::identity(1));
        assert_eq!(M::ones(2, 3).entries().len(), 6);
    }

    #[test]
    fn circulant_examples() {
        let spec = CirculantSpec::new(2, 1, 0, vec![b(10), b(20)]).unwrap();
        let m = circulant_matrix(&spec, |c| c.clone());
        assert_eq!(m.entries(), &[b(10), b(20), b(20), b(10)]);

        let spec = CirculantSpec::new(1, 2, 0, vec![b(1), b(1)]).unwrap();
        let m = circulant_matrix(&spec, |c| c.clone());
        assert_eq!(m.entries(), &[b(2), b(2), b(2), b(2)]);

        // r = 1, single coefficient: P_3^{-1} = P_3^2
        let spec = CirculantSpec::new(3, 1, 1, vec![b(1)]).unwrap();
        let m = circulant_matrix(&spec, |c| c.clone());
        let p3 = M::cyclic_shift(3);
        assert_eq!(m, p3.matmul(&p3).unwrap());
    }

    #[test]
    fn circulant_row_sums_constant() {
        let spec = CirculantSpec::new(4, 2, 1, vec![b(2), b(-1), b(3)]).unwrap();
        let m = circulant_matrix(&spec, |c| c.clone());
        let expect = b(2 * (2 - 1 + 3));
        for i in 1..=m.rows() {
            let mut sum = b(0);
            for j in 1..=m.cols() {
                sum += m.at(i, j);
            }
            assert_eq!(sum, expect, "row {i}");
        }
    }

    #[test]
    fn increasing_enumeration() {
        assert_eq!(enumerate_increasing(0, 3), vec![IndexSeq::new(vec![])]);
        let q23 = enumerate_increasing(2, 3);
        assert_eq!(
            q23,
            vec![
                IndexSeq::new(vec![1, 2]),
                IndexSeq::new(vec![1, 3]),
                IndexSeq::new(vec![2, 3])
            ]
        );
        assert_eq!(enumerate_increasing(3, 3), vec![IndexSeq::full(3)]);
        assert!(enumerate_increasing(4, 3).is_empty());
    }

    #[test]
    fn repeat_each_examples() {
        assert_eq!(
            IndexSeq::new(vec![5]).repeat_each(3),
            IndexSeq::new(vec![5, 5, 5])
        );
        assert_eq!(IndexSeq::new(vec![1, 2]).repeat_each(0), IndexSeq::new(vec![]));
        assert_eq!(
            IndexSeq::new(vec![1, 2]).repeat_each(2),
            IndexSeq::new(vec![1, 1, 2, 2])
        );
    }

    #[test]
    fn submatrix_composes() {
        let a = M::from_rows(
            (1..=4)
                .map(|i| (1..=5).map(|j| b((10 * i + j) as i64)).collect())
                .collect(),
        )
        .unwrap();
        let r1 = IndexSeq::new(vec![3, 1, 4]);
        let c1 = IndexSeq::new(vec![5, 2, 1, 3]);
        let first = a.submatrix(&r1, &c1).unwrap();
        let r2 = IndexSeq::new(vec![2, 3]);
        let c2 = IndexSeq::new(vec![4, 1]);
        let twice = first.submatrix(&r2, &c2).unwrap();
        let composed_rows =
            IndexSeq::new(r2.items().iter().map(|&p| r1.items()[p - 1]).collect());
        let composed_cols =
            IndexSeq::new(c2.items().iter().map(|&q| c1.items()[q - 1]).collect());
        let once = a.submatrix(&composed_rows, &composed_cols).unwrap();
        assert_eq!(twice, once);
    }

    #[test]
    fn complement_partitions_entries() {
        let a = M::from_rows(
            (1..=3)
                .map(|i| (1..=4).map(|j| b((10 * i + j) as i64)).collect())
                .collect(),
        )
        .unwrap();
        let rows_out = IndexSeq::new(vec![2]);
        let cols_out = IndexSeq::new(vec![1, 3]);
        let inner = a
            .submatrix(&rows_out, &cols_out)
            .unwrap();
        let outer = a.complement_submatrix(&rows_out, &cols_out).unwrap();
        let mixed1 = a
            .submatrix(&rows_out, &IndexSeq::new(vec![2, 4]))
            .unwrap();
        let mixed2 = a
            .submatrix(&IndexSeq::new(vec![1, 3]), &cols_out)
            .unwrap();
        let mut together: Vec<BigIntVal> = Vec::new();
        for m in [&inner, &outer, &mixed1, &mixed2] {
            together.extend(m.entries().iter().cloned());
        }
        together.sort();
        let mut all: Vec<BigIntVal> = a.entries().to_vec();
        all.sort();
        assert_eq!(together, all);
    }

    #[test]
    fn json_matrix_roundtrip() {
        let text = r#"{"rows":2,"cols":3,"entries":[[1,"2",3],[-4,5,"600000000000000000000"]]}"#;
        let m = matrix_from_json(text).unwrap();
        assert_eq!(m.at(2, 3), &"600000000000000000000".parse().unwrap());
        let again = matrix_from_json(&matrix_to_json(&m)).unwrap();
        assert_eq!(again, m);
        assert!(matrix_from_json(r#"{"rows":2,"cols":2,"entries":[[1,2]]}"#).is_err());
        assert!(matrix_from_json(r#"{"rows":1,"cols":1,"entries":[[1.5]]}"#).is_err());
    }

    #[test]
    fn json_spec_parse() {
        let s = circulant_spec_from_json(r#"{"n":3,"k":2,"r":1,"coeffs":[1,"2"]}"#).unwrap();
        assert_eq!(s, CirculantSpec::new(3, 2, 1, vec![b(1), b(2)]).unwrap());
        assert!(circulant_spec_from_json(r#"{"n":0,"k":1,"r":0,"coeffs":[1]}"#).is_err());
    }
}
