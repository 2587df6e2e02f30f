//! Dense exact linear algebra over any [`Field`].

use super::field::Field;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<T: Field> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

/// Solutions of `A v = b`: one particular vector plus a kernel basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SolutionSet<T: Field> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

impl<T: Field> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, a: vec![T::zero(); rows * cols] }
    }
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, a: rows.into_iter().flatten().collect() }
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }
    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.a[i * self.cols + j] = v;
    }
    pub fn row(&self, i: usize) -> &[T] {
        &self.a[i * self.cols..(i + 1) * self.cols]
    }
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for k in 0..self.cols {
                self.a.swap(i * self.cols + k, j * self.cols + k);
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self.get(i, k);
                if v.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let w = o.get(k, j);
                    if !w.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + &(v.clone() * w));
                    }
                }
            }
        }
        out
    }
    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(T::zero(), |acc, (a, b)| acc + &(a.clone() * b))
            })
            .collect()
    }
    pub fn add(&self, o: &Self) -> Self {
        assert!(self.rows == o.rows && self.cols == o.cols, "shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            a: self.a.iter().zip(&o.a).map(|(x, y)| x.clone() + y).collect(),
        }
    }
    pub fn scale(&self, k: &T) -> Self {
        Matrix { rows: self.rows, cols: self.cols, a: self.a.iter().map(|x| x.clone() * k).collect() }
    }
    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }
    pub fn map<U: Field>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, a: self.a.iter().map(f).collect() }
    }
    pub fn is_zero(&self) -> bool {
        self.a.iter().all(T::is_zero)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else { continue };
            m.swap_rows(r, p);
            let inv = m.get(r, c).inv().unwrap();
            for k in c..m.cols {
                let v = m.get(r, k).clone() * &inv;
                m.set(r, k, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for k in c..m.cols {
                    let v = m.get(i, k).clone() - &(f.clone() * m.get(r, k));
                    m.set(i, k, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }
    pub fn det(&self) -> T {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else { return T::zero() };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = det * &piv;
            let inv = piv.inv().unwrap();
            for i in c + 1..n {
                let f = m.get(i, c).clone() * &inv;
                if f.is_zero() {
                    continue;
                }
                for k in c..n {
                    let v = m.get(i, k).clone() - &(f.clone() * m.get(c, k));
                    m.set(i, k, v);
                }
            }
        }
        det
    }
    /// Basis of `{v : A v = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<T>> {
        let (r, piv) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !piv.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![T::zero(); self.cols];
                v[f] = T::one();
                for (i, &p) in piv.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect()
    }
    /// All solutions of `A v = b`, or `None` if inconsistent. Free variables are zero in the
    /// particular solution.
    pub fn solve(&self, b: &[T]) -> Option<SolutionSet<T>> {
        assert_eq!(b.len(), self.rows, "shape mismatch");
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let (r, piv) = aug.rref();
        if piv.last() == Some(&self.cols) {
            return None;
        }
        let mut particular = vec![T::zero(); self.cols];
        for (i, &p) in piv.iter().enumerate() {
            particular[p] = r.get(i, self.cols).clone();
        }
        Some(SolutionSet { particular, kernel: self.kernel() })
    }
}
