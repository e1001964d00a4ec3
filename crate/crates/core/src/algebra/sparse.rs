use std::collections::HashSet;

use super::snf::invariant_factors;
use super::{IntegerRing, Matrix};

/// Column-major sparse integer matrix, as used for boundary maps. Each
/// column is a list of `(row, value)` with rows ascending and values nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    columns: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SparseMatrix {
            rows,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds from unsorted column entries; repeated rows are summed and
    /// zeros dropped.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        let columns = columns
            .into_iter()
            .map(|mut col| {
                col.sort_unstable_by_key(|e| e.0);
                let mut out: Vec<(u32, i64)> = Vec::with_capacity(col.len());
                for (r, v) in col {
                    debug_assert!((r as usize) < rows);
                    match out.last_mut() {
                        Some(last) if last.0 == r => last.1 += v,
                        _ => out.push((r, v)),
                    }
                }
                out.retain(|e| e.1 != 0);
                out
            })
            .collect();
        SparseMatrix { rows, columns }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, j: usize) -> &[(u32, i64)] {
        &self.columns[j]
    }

    pub fn to_dense<T: IntegerRing>(&self) -> Matrix<T> {
        let mut m = Matrix::zeros(self.rows, self.cols());
        for (j, col) in self.columns.iter().enumerate() {
            for &(i, v) in col {
                m.set(i as usize, j, T::from(v));
            }
        }
        m
    }

    /// Whether `self · rhs = 0`, computed in `i128`.
    pub fn product_is_zero(&self, rhs: &SparseMatrix) -> bool {
        if self.cols() != rhs.rows {
            return false;
        }
        let mut acc = vec![0i128; self.rows];
        let mut touched = Vec::new();
        for col in &rhs.columns {
            for &(k, b) in col {
                for &(i, a) in &self.columns[k as usize] {
                    if acc[i as usize] == 0 {
                        touched.push(i as usize);
                    }
                    acc[i as usize] += a as i128 * b as i128;
                }
            }
            if touched.iter().any(|&i| acc[i] != 0) {
                return false;
            }
            for i in touched.drain(..) {
                acc[i] = 0;
            }
        }
        true
    }

    /// Nonzero invariant factors (their count is the rank), ascending.
    ///
    /// Entries equal to ±1 are eliminated sparsely first: a unit pivot at
    /// `(r, c)` contributes a factor 1 and leaves the matrix obtained by
    /// clearing row `r` with column operations and deleting row `r` and
    /// column `c`. What remains goes through the dense normal form over `T`.
    pub fn invariant_factors<T: IntegerRing>(&self) -> Vec<T> {
        let mut elim = Eliminator::new(self);
        let units = elim.run();
        let residual = elim.residual();
        let mut factors: Vec<T> = vec![T::one(); units];
        factors.extend(invariant_factors(residual));
        factors.sort();
        factors
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors::<num_bigint::BigInt>().len()
    }
}

struct Eliminator {
    columns: Vec<Vec<(u32, i64)>>,
    alive_cols: Vec<bool>,
    alive_rows: Vec<bool>,
    /// Columns with a nonzero entry in each row.
    row_index: Vec<HashSet<u32>>,
}

impl Eliminator {
    fn new(m: &SparseMatrix) -> Self {
        let mut row_index = vec![HashSet::new(); m.rows];
        for (j, col) in m.columns.iter().enumerate() {
            for &(i, _) in col {
                row_index[i as usize].insert(j as u32);
            }
        }
        Eliminator {
            columns: m.columns.clone(),
            alive_cols: vec![true; m.cols()],
            alive_rows: vec![true; m.rows],
            row_index,
        }
    }

    fn run(&mut self) -> usize {
        let mut eliminated = 0;
        loop {
            let mut progress = false;
            let mut order: Vec<usize> = (0..self.columns.len()).filter(|&j| self.alive_cols[j]).collect();
            order.sort_by_key(|&j| self.columns[j].len());
            for c in order {
                if !self.alive_cols[c] {
                    continue;
                }
                let pivot = self.columns[c]
                    .iter()
                    .filter(|e| e.1.abs() == 1)
                    .min_by_key(|e| self.row_index[e.0 as usize].len())
                    .copied();
                if let Some((r, p)) = pivot {
                    if !self.eliminate(r, c, p) {
                        // Entry growth beyond i64: leave the rest to the dense pass.
                        return eliminated;
                    }
                    eliminated += 1;
                    progress = true;
                }
            }
            if !progress {
                return eliminated;
            }
        }
    }

    /// Applies one unit pivot; leaves everything untouched and reports
    /// `false` if an entry would overflow.
    fn eliminate(&mut self, r: u32, c: usize, p: i64) -> bool {
        let mut updates = Vec::new();
        for &j in &self.row_index[r as usize] {
            let j = j as usize;
            if j == c {
                continue;
            }
            let Ok(k) = self.columns[j].binary_search_by_key(&r, |e| e.0) else {
                continue;
            };
            // col_j -= (a_rj / p) col_c, with 1/p = p for a unit.
            let Some(factor) = self.columns[j][k].1.checked_mul(p) else {
                return false;
            };
            match axpy(&self.columns[j], &self.columns[c], factor) {
                Some(col) => updates.push((j, col)),
                None => return false,
            }
        }
        for (j, col) in updates {
            for &(i, _) in &self.columns[j] {
                self.row_index[i as usize].remove(&(j as u32));
            }
            for &(i, _) in &col {
                self.row_index[i as usize].insert(j as u32);
            }
            self.columns[j] = col;
        }
        for &(i, _) in &self.columns[c] {
            self.row_index[i as usize].remove(&(c as u32));
        }
        self.columns[c].clear();
        self.alive_cols[c] = false;
        self.alive_rows[r as usize] = false;
        true
    }

    fn residual<T: IntegerRing>(&self) -> Matrix<T> {
        let rows: Vec<usize> = (0..self.alive_rows.len()).filter(|&i| self.alive_rows[i]).collect();
        let cols: Vec<usize> = (0..self.columns.len())
            .filter(|&j| self.alive_cols[j] && !self.columns[j].is_empty())
            .collect();
        let mut row_pos = vec![usize::MAX; self.alive_rows.len()];
        for (k, &i) in rows.iter().enumerate() {
            row_pos[i] = k;
        }
        let mut m = Matrix::zeros(rows.len(), cols.len());
        for (k, &j) in cols.iter().enumerate() {
            for &(i, v) in &self.columns[j] {
                m.set(row_pos[i as usize], k, T::from(v));
            }
        }
        m
    }
}

/// `dst - factor * src` as a sorted sparse column, `None` on overflow.
fn axpy(dst: &[(u32, i64)], src: &[(u32, i64)], factor: i64) -> Option<Vec<(u32, i64)>> {
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let (mut a, mut b) = (0, 0);
    while a < dst.len() || b < src.len() {
        if b == src.len() || (a < dst.len() && dst[a].0 < src[b].0) {
            out.push(dst[a]);
            a += 1;
            continue;
        }
        let scaled = src[b].1.checked_mul(factor)?;
        let (row, value) = if a < dst.len() && dst[a].0 == src[b].0 {
            a += 1;
            (src[b].0, dst[a - 1].1.checked_sub(scaled)?)
        } else {
            (src[b].0, scaled.checked_neg()?)
        };
        b += 1;
        if value != 0 {
            out.push((row, value));
        }
    }
    Some(out)
}
