//! Small dense complex matrices for the ADHM checks: products, adjoints,
//! eigenvalues via the characteristic polynomial, and rank-revealing
//! nullspaces by thresholded Gaussian elimination. Sizes here are tiny
//! (instanton charge and framing rank), so simplicity wins over asymptotics.

use num_complex::Complex64;

#[derive(Clone, Debug, PartialEq)]
pub(crate) struct CMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = CMat::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        CMat { rows, cols, data }
    }

    pub fn mul(&self, other: &CMat) -> CMat {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        out
    }

    pub fn add(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, x) in out.data.iter_mut().zip(&other.data) {
            *o += x;
        }
        out
    }

    pub fn sub(&self, other: &CMat) -> CMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (o, x) in out.data.iter_mut().zip(&other.data) {
            *o -= x;
        }
        out
    }

    pub fn adjoint(&self) -> CMat {
        let mut out = CMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> CMat {
        let mut out = CMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn fro_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn commutator(&self, other: &CMat) -> CMat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn stack_vertical(blocks: &[&CMat]) -> CMat {
        let cols = blocks[0].cols;
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut out = CMat::zeros(rows, cols);
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.cols, cols);
            for i in 0..b.rows {
                for j in 0..cols {
                    out[(offset + i, j)] = b[(i, j)];
                }
            }
            offset += b.rows;
        }
        out
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Gauss–Jordan inverse with partial pivoting; `None` when a pivot falls
    /// below the threshold.
    pub fn inverse(&self) -> Option<CMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = CMat::identity(n);
        let tol = 1e-13 * self.fro_norm().max(1.0);
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
                .expect("nonempty range");
            if a[(pivot_row, col)].norm() <= tol {
                return None;
            }
            if pivot_row != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot_row * n + j);
                    inv.data.swap(col * n + j, pivot_row * n + j);
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a[(i, col)];
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    let ac = a[(col, j)];
                    let ic = inv[(col, j)];
                    a[(i, j)] -= f * ac;
                    inv[(i, j)] -= f * ic;
                }
            }
        }
        Some(inv)
    }

    /// Orthonormal basis of the nullspace, by row reduction with the given
    /// absolute pivot threshold.
    pub fn nullspace(&self, threshold: f64) -> CMat {
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.clone();
        let mut pivot_cols: Vec<usize> = Vec::new();
        let mut row = 0usize;
        for col in 0..cols {
            // Partial pivot in this column at or below `row`.
            let Some(pivot_row) = (row..rows)
                .filter(|&i| a[(i, col)].norm() > threshold)
                .max_by(|&i, &j| a[(i, col)].norm().total_cmp(&a[(j, col)].norm()))
            else {
                continue;
            };
            if pivot_row != row {
                for j in 0..cols {
                    a.data.swap(row * cols + j, pivot_row * cols + j);
                }
            }
            let p = a[(row, col)];
            for j in 0..cols {
                a[(row, j)] /= p;
            }
            for i in 0..rows {
                if i == row {
                    continue;
                }
                let f = a[(i, col)];
                if f == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..cols {
                    let v = a[(row, j)];
                    a[(i, j)] -= f * v;
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == rows {
                break;
            }
        }
        let free_cols: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
        let mut basis = CMat::zeros(cols, free_cols.len());
        for (bj, &fc) in free_cols.iter().enumerate() {
            basis[(fc, bj)] = Complex64::new(1.0, 0.0);
            for (ri, &pc) in pivot_cols.iter().enumerate() {
                basis[(pc, bj)] = -a[(ri, fc)];
            }
        }
        orthonormalize(&basis)
    }

    /// Eigenvalues of a square matrix: characteristic polynomial by the
    /// Faddeev–LeVerrier recursion, roots by Durand–Kerner iteration.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return vec![];
        }
        if n == 1 {
            return vec![self[(0, 0)]];
        }
        // p(λ) = λⁿ + c₁ λ^{n−1} + … + cₙ.
        let mut coeffs = vec![Complex64::new(1.0, 0.0)];
        let mut mk = self.clone();
        let mut ck = -mk.trace();
        coeffs.push(ck);
        for k in 2..=n {
            let mut shifted = mk.clone();
            for i in 0..n {
                shifted[(i, i)] += ck;
            }
            mk = self.mul(&shifted);
            ck = -mk.trace() / (k as f64);
            coeffs.push(ck);
        }
        durand_kerner(&coeffs)
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Modified Gram–Schmidt, dropping directions below 1e−12 of the input scale.
pub(crate) fn orthonormalize(m: &CMat) -> CMat {
    let scale = m.fro_norm().max(1e-300);
    let mut kept: Vec<Vec<Complex64>> = Vec::new();
    for j in 0..m.cols {
        let mut v: Vec<Complex64> = (0..m.rows).map(|i| m[(i, j)]).collect();
        for _ in 0..2 {
            for q in &kept {
                let dot: Complex64 = q.iter().zip(&v).map(|(qi, vi)| qi.conj() * vi).sum();
                for (vi, qi) in v.iter_mut().zip(q) {
                    *vi -= dot * qi;
                }
            }
        }
        let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if norm > 1e-12 * scale {
            for z in v.iter_mut() {
                *z /= norm;
            }
            kept.push(v);
        }
    }
    let mut out = CMat::zeros(m.rows, kept.len());
    for (j, q) in kept.iter().enumerate() {
        for i in 0..m.rows {
            out[(i, j)] = q[i];
        }
    }
    out
}

fn poly_eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs {
        acc = acc * z + c;
    }
    acc
}

/// Durand–Kerner root finder for a monic polynomial given by its
/// coefficients `[1, c₁, …, cₙ]`.
fn durand_kerner(coeffs: &[Complex64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let radius = 1.0 + coeffs[1..].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|i| radius * seed.powu(i as u32 + 1) / seed.norm().powi(i as i32))
        .collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let zi = roots[i];
            let mut denom = Complex64::new(1.0, 0.0);
            for (j, &zj) in roots.iter().enumerate() {
                if j != i {
                    denom *= zi - zj;
                }
            }
            if denom.norm() == 0.0 {
                // Coincident iterates: nudge deterministically.
                roots[i] += Complex64::new(1e-6 * radius, 1e-6 * radius);
                max_step = f64::INFINITY;
                continue;
            }
            let step = poly_eval(coeffs, zi) / denom;
            roots[i] = zi - step;
            max_step = max_step.max(step.norm());
        }
        if max_step <= 1e-13 * radius {
            break;
        }
    }
    roots
}

/// Cluster numerically coincident eigenvalues, keeping one representative.
pub(crate) fn cluster_values(values: &[Complex64], tol: f64) -> Vec<Complex64> {
    let mut sorted = values.to_vec();
    sorted.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    let mut out: Vec<Complex64> = Vec::new();
    for v in sorted {
        if out.iter().all(|u| (u - v).norm() > tol) {
            out.push(v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eigenvalues_of_diagonal() {
        let m = CMat::from_vec(
            2,
            2,
            vec![c(2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 3.0)],
        );
        let mut eigs = m.eigenvalues();
        eigs.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((eigs[0] - c(-1.0, 3.0)).norm() < 1e-10);
        assert!((eigs[1] - c(2.0, 0.0)).norm() < 1e-10);
    }

    #[test]
    fn eigenvalues_of_nilpotent() {
        let m = CMat::from_vec(
            2,
            2,
            vec![c(0.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)],
        );
        for e in m.eigenvalues() {
            assert!(e.norm() < 1e-6);
        }
    }

    #[test]
    fn nullspace_of_rank_one() {
        // (1 1; 1 1) has one-dimensional nullspace spanned by (1, −1)/√2.
        let m = CMat::from_vec(
            2,
            2,
            vec![c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0)],
        );
        let ns = m.nullspace(1e-9 * m.fro_norm());
        assert_eq!(ns.cols, 1);
        let prod = m.mul(&ns);
        assert!(prod.fro_norm() < 1e-12);
    }

    #[test]
    fn inverse_round_trip() {
        let m = CMat::from_vec(
            2,
            2,
            vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(1.0, 0.5)],
        );
        let inv = m.inverse().unwrap();
        let prod = m.mul(&inv).sub(&CMat::identity(2));
        assert!(prod.fro_norm() < 1e-12);
        assert!(CMat::zeros(2, 2).inverse().is_none());
    }

    #[test]
    fn orthonormalize_drops_dependent_columns() {
        let m = CMat::from_vec(
            2,
            3,
            vec![
                c(1.0, 0.0),
                c(2.0, 0.0),
                c(0.0, 0.0),
                c(1.0, 0.0),
                c(2.0, 0.0),
                c(1.0, 0.0),
            ],
        );
        let q = orthonormalize(&m);
        assert_eq!(q.cols, 2);
        let gram = q.adjoint().mul(&q).sub(&CMat::identity(2));
        assert!(gram.fro_norm() < 1e-12);
    }
}
