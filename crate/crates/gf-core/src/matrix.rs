use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GfError;
use crate::field::{Field, FieldRef, FieldSpec};

/// Dense matrix over a finite field, row-major.
#[derive(Clone)]
pub struct Matrix {
    field: FieldRef,
    rows: usize,
    cols: usize,
    data: Vec<u16>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {:?}", self.rows, self.cols, self.field)?;
        for i in 0..self.rows.min(12) {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        Ok(())
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}
impl Eq for Matrix {}

/// Result of solving `A X = B`: a particular solution plus a basis of
/// `ker(A)` (rows of `kernel`), both exact.
#[derive(Clone, Debug)]
pub struct LinearSolution {
    pub particular: Matrix,
    pub kernel: Matrix,
}

impl Matrix {
    pub fn zeros(field: FieldRef, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: FieldRef, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_fn(
        field: FieldRef,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> Self {
        let mut m = Self::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
            }
        }
        m
    }

    pub fn from_rows(field: FieldRef, rows: Vec<Vec<u16>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix {
            field,
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Column vector from a slice.
    pub fn col_vec(field: FieldRef, v: &[u16]) -> Self {
        Matrix {
            field,
            rows: v.len(),
            cols: 1,
            data: v.to_vec(),
        }
    }

    /// Row vector from a slice.
    pub fn row_vec(field: FieldRef, v: &[u16]) -> Self {
        Matrix {
            field,
            rows: 1,
            cols: v.len(),
            data: v.to_vec(),
        }
    }

    pub fn field(&self) -> &FieldRef {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn data(&self) -> &[u16] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u16 {
        self.data[i * self.cols + j]
    }
    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u16) {
        self.data[i * self.cols + j] = v;
    }
    #[inline]
    pub fn row(&self, i: usize) -> &[u16] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u16::from(i == j)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field.clone(), self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: u16) -> Matrix {
        let f = &self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c)).collect();
        Matrix {
            field: self.field.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimensions must agree");
        let f = &self.field;
        let mut out = Matrix::zeros(self.field.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &s) in dst.iter_mut().zip(src) {
                    *d = f.add(*d, f.mul(a, s));
                }
            }
        }
        out
    }

    /// Matrix-vector product `A v`.
    pub fn apply(&self, v: &[u16]) -> Vec<u16> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        let mut out = vec![0u16; self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            let row = self.row(i);
            let mut acc = 0u16;
            for (&a, &x) in row.iter().zip(v) {
                if a != 0 && x != 0 {
                    acc = f.add(acc, f.mul(a, x));
                }
            }
            *o = acc;
        }
        out
    }

    pub fn pow(&self, n: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(self.field.clone(), self.rows);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Kronecker product under lexicographic (left factor major) basis order:
    /// `(A (x) B)(u (x) v) = Au (x) Bv`.
    pub fn kronecker(&self, other: &Matrix) -> Matrix {
        let f = &self.field;
        let (ra, ca, rb, cb) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Matrix::zeros(self.field.clone(), ra * rb, ca * cb);
        for ia in 0..ra {
            for ja in 0..ca {
                let a = self.get(ia, ja);
                if a == 0 {
                    continue;
                }
                for ib in 0..rb {
                    for jb in 0..cb {
                        let b = other.get(ib, jb);
                        if b != 0 {
                            out.set(ia * rb + ib, ja * cb + jb, f.mul(a, b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.field.clone(), self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            out.data[i * out.cols..i * out.cols + self.cols].copy_from_slice(self.row(i));
            out.data[i * out.cols + self.cols..(i + 1) * out.cols].copy_from_slice(other.row(i));
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Rows `lo..hi` as a new matrix.
    pub fn row_slice(&self, lo: usize, hi: usize) -> Matrix {
        Matrix {
            field: self.field.clone(),
            rows: hi - lo,
            cols: self.cols,
            data: self.data[lo * self.cols..hi * self.cols].to_vec(),
        }
    }

    /// In-place reduced row echelon form with first-nonzero pivoting
    /// (pivots normalized to 1). Returns the pivot column list; the result
    /// is deterministic for identical inputs.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            // first row at or below r with a nonzero entry in column c
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = f.inv(self.get(r, c));
            if inv != 1 {
                for j in 0..self.cols {
                    let v = self.get(r, j);
                    if v != 0 {
                        self.set(r, j, f.mul(v, inv));
                    }
                }
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c);
                if factor == 0 {
                    continue;
                }
                let nf = f.neg(factor);
                let (head, tail) = self.data.split_at_mut(r.max(i) * self.cols);
                let (row_r, row_i) = if r < i {
                    (
                        &head[r * self.cols..(r + 1) * self.cols],
                        &mut tail[..self.cols],
                    )
                } else {
                    (
                        &tail[..self.cols],
                        &mut head[i * self.cols..(i + 1) * self.cols],
                    )
                };
                for (d, &s) in row_i.iter_mut().zip(row_r) {
                    if s != 0 {
                        *d = f.add(*d, f.mul(nf, s));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref_in_place().len()
    }

    pub fn nullity(&self) -> usize {
        self.cols - self.rank()
    }

    /// Basis of the (right) kernel `{x : Ax = 0}`, as rows, in reduced
    /// echelon form so the basis is deterministic.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let mut free_cols: Vec<usize> = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        for c in 0..self.cols {
            if !is_pivot[c] {
                free_cols.push(c);
            }
        }
        let f = &self.field;
        let mut basis = Matrix::zeros(self.field.clone(), free_cols.len(), self.cols);
        for (bi, &fc) in free_cols.iter().enumerate() {
            basis.set(bi, fc, 1);
            for (pi, &pc) in pivots.iter().enumerate() {
                let v = r.get(pi, fc);
                if v != 0 {
                    basis.set(bi, pc, f.neg(v));
                }
            }
        }
        // canonicalize: return the reduced row-echelon basis of the kernel,
        // so downstream coordinates agree with any re-echelonization
        let (ech, piv) = basis.rref();
        ech.row_slice(0, piv.len())
    }

    /// Invert a square matrix; `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&Matrix::identity(self.field.clone(), n));
        let (r, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut inv = Matrix::zeros(self.field.clone(), n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, r.get(i, n + j));
            }
        }
        Some(inv)
    }

    /// Base change along `F_p -> F_{p^e}` (or identity when fields match).
    pub fn embed(&self, target: &FieldRef) -> Matrix {
        if **target == *self.field {
            return Matrix {
                field: target.clone(),
                rows: self.rows,
                cols: self.cols,
                data: self.data.clone(),
            };
        }
        assert!(
            target.extends(&self.field),
            "can only embed from the prime subfield"
        );
        Matrix {
            field: target.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.clone(),
        }
    }

    /// True when every entry lies in the prime subfield.
    pub fn is_prime_rational(&self) -> bool {
        self.data.iter().all(|&x| self.field.in_prime_field(x))
    }
}

/// Solve `A X = B` exactly. Returns a particular solution and a kernel basis
/// for `A`, or `NoSolution` when `B` is outside the column span of `A`.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<LinearSolution, GfError> {
    if a.rows() != b.rows() {
        return Err(GfError::Shape(format!(
            "A has {} rows, B has {}",
            a.rows(),
            b.rows()
        )));
    }
    let aug = a.hstack(b);
    let (r, pivots) = aug.rref();
    // any pivot in the B block means inconsistency
    if pivots.iter().any(|&c| c >= a.cols()) {
        return Err(GfError::NoSolution);
    }
    let mut particular = Matrix::zeros(a.field().clone(), a.cols(), b.cols());
    for (pi, &pc) in pivots.iter().enumerate() {
        for j in 0..b.cols() {
            particular.set(pc, j, r.get(pi, a.cols() + j));
        }
    }
    Ok(LinearSolution {
        particular,
        kernel: a.kernel_basis(),
    })
}

/// Serialized form: entries are per-element coefficient vectors over `F_p`,
/// row-major, so the byte form is independent of the in-memory encoding.
#[derive(Serialize, Deserialize)]
pub struct MatrixJson {
    pub p: u16,
    pub e: u8,
    pub modulus: Vec<u16>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<u16>>,
}

impl Matrix {
    pub fn to_json(&self) -> MatrixJson {
        let s = self.field.spec();
        MatrixJson {
            p: s.p,
            e: s.e,
            modulus: s.modulus.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self.data.iter().map(|&x| self.field.to_digits(x)).collect(),
        }
    }

    pub fn from_json(j: &MatrixJson) -> Result<Matrix, GfError> {
        let field = Field::from_spec(&FieldSpec {
            p: j.p,
            e: j.e,
            modulus: j.modulus.clone(),
        })?;
        if j.entries.len() != j.rows * j.cols {
            return Err(GfError::BadJson(format!(
                "expected {} entries, found {}",
                j.rows * j.cols,
                j.entries.len()
            )));
        }
        let data = j.entries.iter().map(|ds| field.from_digits(ds)).collect();
        Ok(Matrix {
            field,
            rows: j.rows,
            cols: j.cols,
            data,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::prng::SplitMix64;

    fn f5() -> FieldRef {
        Field::new(5, 1).unwrap()
    }

    #[test]
    fn solve_identity_and_zero() {
        let f = Field::new(3, 1).unwrap();
        let i3 = Matrix::identity(f.clone(), 3);
        let v = Matrix::col_vec(f.clone(), &[1, 2, 0]);
        let sol = solve_linear(&i3, &v).unwrap();
        assert_eq!(sol.particular, v);
        assert_eq!(sol.kernel.rows(), 0);

        let z = Matrix::zeros(f.clone(), 3, 3);
        let b = Matrix::zeros(f.clone(), 3, 1);
        let sol = solve_linear(&z, &b).unwrap();
        assert_eq!(sol.kernel.rows(), 3);
    }

    #[test]
    fn rank_nullity_random() {
        // rank + nullity = cols, and A x = b round-trips, on random 5x5 over F_5
        let f = f5();
        let mut rng = SplitMix64::new(42);
        for _ in 0..50 {
            let a = Matrix::from_fn(f.clone(), 5, 5, |_, _| rng.below(5) as u16);
            assert_eq!(a.rank() + a.nullity(), 5);
            let x = Matrix::from_fn(f.clone(), 5, 2, |_, _| rng.below(5) as u16);
            let b = a.mul(&x);
            let sol = solve_linear(&a, &b).unwrap();
            assert_eq!(a.mul(&sol.particular), b);
            // every kernel row is killed by A
            for i in 0..sol.kernel.rows() {
                let kv = sol.kernel.row(i).to_vec();
                assert!(a.apply(&kv).iter().all(|&v| v == 0));
            }
        }
    }

    #[test]
    fn rank_matches_minor_bruteforce_small() {
        // independent oracle: rank of a 3x3 as largest nonvanishing minor
        let f = f5();
        let mut rng = SplitMix64::new(7);
        let det2 = |m: &Matrix, r: [usize; 2], c: [usize; 2]| {
            let f = m.field();
            f.sub(
                f.mul(m.get(r[0], c[0]), m.get(r[1], c[1])),
                f.mul(m.get(r[0], c[1]), m.get(r[1], c[0])),
            )
        };
        for _ in 0..100 {
            let a = Matrix::from_fn(f.clone(), 3, 3, |_, _| rng.below(5) as u16);
            let mut det3 = 0u16;
            for (j, sgn) in [(0usize, 1u16), (1, 4), (2, 1)] {
                let cs: Vec<usize> = (0..3).filter(|&c| c != j).collect();
                let minor = det2(&a, [1, 2], [cs[0], cs[1]]);
                det3 = f.add(det3, f.mul(f.mul(a.get(0, j), sgn), minor));
            }
            let oracle = if det3 != 0 {
                3
            } else {
                let mut best = 0;
                for r0 in 0..3 {
                    for r1 in r0 + 1..3 {
                        for c0 in 0..3 {
                            for c1 in c0 + 1..3 {
                                if det2(&a, [r0, r1], [c0, c1]) != 0 {
                                    best = 2;
                                }
                            }
                        }
                    }
                }
                if best == 0 && !a.is_zero() {
                    best = 1;
                }
                best
            };
            assert_eq!(a.rank(), oracle);
        }
    }

    #[test]
    fn kronecker_basics() {
        let f = Field::new(3, 1).unwrap();
        let i2 = Matrix::identity(f.clone(), 2);
        let i3 = Matrix::identity(f.clone(), 3);
        assert!(i2.kronecker(&i3).is_identity());

        let z = Matrix::zeros(f.clone(), 3, 3);
        let a = Matrix::from_fn(f.clone(), 3, 3, |i, j| ((i + j) % 3) as u16);
        assert!(z.kronecker(&a).is_zero());

        // rank multiplicativity on random 3x3 pairs
        let mut rng = SplitMix64::new(11);
        for _ in 0..20 {
            let a = Matrix::from_fn(f.clone(), 3, 3, |_, _| rng.below(3) as u16);
            let b = Matrix::from_fn(f.clone(), 3, 3, |_, _| rng.below(3) as u16);
            assert_eq!(a.kronecker(&b).rank(), a.rank() * b.rank());
        }
    }

    #[test]
    fn rref_deterministic() {
        let f = f5();
        let mut rng = SplitMix64::new(3);
        for _ in 0..20 {
            let a = Matrix::from_fn(f.clone(), 6, 4, |_, _| rng.below(5) as u16);
            let (r1, p1) = a.rref();
            let (r2, p2) = a.rref();
            assert_eq!(r1, r2);
            assert_eq!(p1, p2);
        }
    }

    #[test]
    fn json_round_trip_bit_exact() {
        let f = Field::new(3, 2).unwrap();
        let mut rng = SplitMix64::new(5);
        let a = Matrix::from_fn(f.clone(), 4, 3, |_, _| rng.below(9) as u16);
        let s = serde_json::to_string(&a.to_json()).unwrap();
        let back = Matrix::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(a, back);
        let s2 = serde_json::to_string(&back.to_json()).unwrap();
        assert_eq!(s, s2);
    }
}
