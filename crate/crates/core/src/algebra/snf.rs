use super::{IntegerRing, Matrix};

/// `U · M · V = D` with `U`, `V` unimodular and `D` diagonal, its nonzero
/// entries positive and each dividing the next.
#[derive(Clone, Debug)]
pub struct Snf<T: std::fmt::Display> {
    pub u: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
}

impl<T: IntegerRing> Snf<T> {
    /// The nonzero diagonal entries of `D`.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.d.diagonal().into_iter().filter(|x| !x.is_zero()).collect()
    }
}

pub fn smith_normal_form<T: IntegerRing>(m: &Matrix<T>) -> Snf<T> {
    let mut u = Matrix::identity(m.rows());
    let mut v = Matrix::identity(m.cols());
    let d = diagonalize(m.clone(), Some(&mut u), Some(&mut v));
    Snf { u, d, v }
}

/// Invariant factors without tracking the transforms.
pub(crate) fn invariant_factors<T: IntegerRing>(m: Matrix<T>) -> Vec<T> {
    diagonalize(m, None, None)
        .diagonal()
        .into_iter()
        .filter(|x| !x.is_zero())
        .collect()
}

struct Ops<'a, T> {
    a: Matrix<T>,
    u: Option<&'a mut Matrix<T>>,
    v: Option<&'a mut Matrix<T>>,
}

impl<T: IntegerRing> Ops<'_, T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_deref_mut() {
            u.swap_rows(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        if let Some(v) = self.v.as_deref_mut() {
            v.swap_cols(i, j);
        }
    }

    fn add_row(&mut self, target: usize, source: usize, factor: &T) {
        self.a.add_row(target, source, factor);
        if let Some(u) = self.u.as_deref_mut() {
            u.add_row(target, source, factor);
        }
    }

    fn add_col(&mut self, target: usize, source: usize, factor: &T) {
        self.a.add_col(target, source, factor);
        if let Some(v) = self.v.as_deref_mut() {
            v.add_col(target, source, factor);
        }
    }

    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = self.u.as_deref_mut() {
            u.negate_row(i);
        }
    }
}

/// Pivot rule: the nonzero entry of least absolute value.
fn smallest_in<T: IntegerRing>(a: &Matrix<T>, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, T)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let x = a.get(i, j);
            if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                best = Some((i, j, x.abs()));
                if best.as_ref().unwrap().2.is_one() {
                    return Some((i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn diagonalize<T: IntegerRing>(a: Matrix<T>, u: Option<&mut Matrix<T>>, v: Option<&mut Matrix<T>>) -> Matrix<T> {
    let mut ops = Ops { a, u, v };
    let (rows, cols) = (ops.a.rows(), ops.a.cols());
    for t in 0..rows.min(cols) {
        let Some((i, j)) = smallest_in(&ops.a, t) else {
            break;
        };
        ops.swap_rows(t, i);
        ops.swap_cols(t, j);
        loop {
            let p = ops.a.get(t, t).clone();
            for i in t + 1..rows {
                let x = ops.a.get(i, t);
                if !x.is_zero() {
                    let q = -x.div_floor(&p);
                    ops.add_row(i, t, &q);
                }
            }
            for j in t + 1..cols {
                let x = ops.a.get(t, j);
                if !x.is_zero() {
                    let q = -x.div_floor(&p);
                    ops.add_col(j, t, &q);
                }
            }
            // Remainders smaller than the pivot: move the least to the pivot.
            let mut best: Option<(bool, usize, T)> = None;
            for i in t + 1..rows {
                let x = ops.a.get(i, t);
                if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                    best = Some((true, i, x.abs()));
                }
            }
            for j in t + 1..cols {
                let x = ops.a.get(t, j);
                if !x.is_zero() && best.as_ref().is_none_or(|(_, _, b)| x.abs() < *b) {
                    best = Some((false, j, x.abs()));
                }
            }
            match best {
                Some((true, i, _)) => ops.swap_rows(t, i),
                Some((false, j, _)) => ops.swap_cols(t, j),
                None => {
                    let offending = (t + 1..rows)
                        .find(|&i| (t + 1..cols).any(|j| !ops.a.get(i, j).mod_floor(&p).is_zero()));
                    match offending {
                        Some(i) => ops.add_row(t, i, &T::one()),
                        None => break,
                    }
                }
            }
        }
        if ops.a.get(t, t).is_negative() {
            ops.negate_row(t);
        }
    }
    ops.a
}
