use num_complex::Complex64;

use super::scalar::Scalar;

/// Dense `n × n` self-adjoint matrix over a [`Scalar`].
///
/// Stored in full, row-major. Constructors only read the upper triangle
/// and mirror it, so `m[j][i] == conj(m[i][j])` and the diagonal is real.
#[derive(Clone, Debug, PartialEq)]
pub struct Hermitian<S> {
    n: usize,
    data: Vec<S>,
}

impl<S: Scalar> Hermitian<S> {
    /// Builds the matrix from `f(i, j)` evaluated on `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = vec![S::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = S::from_real(f(i, i).re());
            for j in i + 1..n {
                let v = f(i, j);
                data[i * n + j] = v;
                data[j * n + i] = v.conj();
            }
        }
        Hermitian { n, data }
    }

    /// Wraps a full row-major buffer, re-symmetrizing from its upper triangle.
    pub fn from_raw(n: usize, data: Vec<S>) -> Self {
        assert_eq!(data.len(), n * n, "buffer does not hold an {n}x{n} matrix");
        Hermitian::from_fn(n, |i, j| data[i * n + j])
    }

    pub fn identity(n: usize) -> Self {
        Hermitian::diagonal(&vec![1.0; n])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        Hermitian::from_fn(d.len(), |i, j| if i == j { S::from_real(d[i]) } else { S::zero() })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> S {
        self.data[i * self.n + j]
    }

    pub fn data(&self) -> &[S] {
        &self.data
    }

    pub fn diag(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i).re()).collect()
    }

    pub fn trace(&self) -> f64 {
        self.diag().iter().sum()
    }

    /// Upper-left `k × k` block.
    pub fn leading(&self, k: usize) -> Self {
        assert!(k <= self.n);
        Hermitian::from_fn(k, |i, j| self.get(i, j))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(S) -> T) -> Hermitian<T> {
        Hermitian::from_fn(self.n, |i, j| f(self.get(i, j)))
    }

    /// `A · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.n);
        (0..self.n).map(|i| (0..self.n).fold(S::zero(), |acc, j| acc + self.get(i, j) * v[j])).collect()
    }

    /// Full product `self · other` as a row-major buffer (not self-adjoint in general).
    pub fn mul_full(&self, other: &Hermitian<S>) -> Vec<S> {
        let n = self.n;
        assert_eq!(n, other.n);
        let mut out = vec![S::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n).fold(S::zero(), |acc, k| acc + self.get(i, k) * other.get(k, j));
            }
        }
        out
    }

    /// Largest entrywise distance `|a_ij - b_ij|` to a row-major buffer.
    pub fn max_abs_diff(&self, other: &[S]) -> f64 {
        self.data.iter().zip(other).map(|(&a, &b)| (a - b).norm_sqr().sqrt()).fold(0.0, f64::max)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Unitary (orthogonal, symplectic) conjugation `U A U*`, with `U` given row-major.
    pub fn conjugate_by(&self, u: &[S]) -> Self {
        let n = self.n;
        assert_eq!(u.len(), n * n);
        let mut ua = vec![S::zero(); n * n];
        for i in 0..n {
            for j in 0..n {
                ua[i * n + j] = (0..n).fold(S::zero(), |acc, k| acc + u[i * n + k] * self.get(k, j));
            }
        }
        Hermitian::from_fn(n, |i, j| (0..n).fold(S::zero(), |acc, k| acc + ua[i * n + k] * u[j * n + k].conj()))
    }
}

/// Determinant of a general complex square matrix by LU with partial pivoting.
pub fn complex_det(n: usize, data: &[Complex64]) -> Complex64 {
    let mut a = data.to_vec();
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let p = (k..n).max_by(|&x, &y| a[x * n + k].norm().total_cmp(&a[y * n + k].norm())).unwrap_or(k);
        if a[p * n + k].norm() == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        for i in k + 1..n {
            let l = a[i * n + k] / pivot;
            for j in k..n {
                let v = a[k * n + j];
                a[i * n + j] -= l * v;
            }
        }
    }
    det
}
