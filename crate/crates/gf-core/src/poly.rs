use crate::field::FieldRef;
use crate::matrix::Matrix;

/// Dense polynomial over a finite field, low-degree coefficients first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    pub field: FieldRef,
    pub coeffs: Vec<u16>,
}

impl Poly {
    pub fn new(field: FieldRef, mut coeffs: Vec<u16>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: FieldRef) -> Self {
        Poly {
            field,
            coeffs: vec![],
        }
    }

    pub fn one(field: FieldRef) -> Self {
        Poly {
            field,
            coeffs: vec![1],
        }
    }

    pub fn x(field: FieldRef) -> Self {
        Poly {
            field,
            coeffs: vec![0, 1],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; -1 encoded as None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u16 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u16; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            *o = f.add(a, b);
        }
        Poly::new(self.field.clone(), out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn scale(&self, c: u16) -> Poly {
        let f = &self.field;
        Poly::new(
            self.field.clone(),
            self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        )
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field.clone());
        }
        let f = &self.field;
        let mut out = vec![0u16; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    out[i + j] = f.add(out[i + j], f.mul(a, b));
                }
            }
        }
        Poly::new(self.field.clone(), out)
    }

    /// Euclidean division: `(quotient, remainder)`.
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let f = &self.field;
        let ddeg = divisor.degree().unwrap();
        let dlead_inv = f.inv(divisor.lead());
        let mut rem = self.coeffs.clone();
        if rem.len() <= ddeg {
            return (Poly::zero(self.field.clone()), self.clone());
        }
        let mut quot = vec![0u16; rem.len() - ddeg];
        for i in (ddeg..rem.len()).rev() {
            let c = rem[i];
            if c == 0 {
                continue;
            }
            let qc = f.mul(c, dlead_inv);
            quot[i - ddeg] = qc;
            for (k, &dc) in divisor.coeffs.iter().enumerate() {
                rem[i - ddeg + k] = f.sub(rem[i - ddeg + k], f.mul(qc, dc));
            }
        }
        (
            Poly::new(self.field.clone(), quot),
            Poly::new(self.field.clone(), rem),
        )
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divmod(divisor).1
    }

    /// Monic normalization.
    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lead()))
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn eval(&self, x: u16) -> u16 {
        let f = &self.field;
        let mut acc = 0u16;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// `x^n mod m` by repeated squaring.
    pub fn x_pow_mod(n: u64, m: &Poly) -> Poly {
        let f = m.field.clone();
        let mut acc = Poly::one(f.clone());
        let mut base = Poly::x(f).rem(m);
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
            n >>= 1;
        }
        acc
    }
}

/// Factor a nonzero polynomial into monic irreducibles with multiplicities,
/// by Berlekamp's algorithm with exhaustive splitting over the (small) field.
/// Factors are returned sorted by (degree, coefficients) so the output is
/// deterministic.
pub fn berlekamp_factor(poly: &Poly) -> Vec<(Poly, usize)> {
    assert!(!poly.is_zero());
    let field = poly.field.clone();
    let mut result: Vec<(Poly, usize)> = Vec::new();
    let mut stack = vec![poly.monic()];
    while let Some(f) = stack.pop() {
        let deg = match f.degree() {
            None | Some(0) => continue,
            Some(d) => d,
        };
        if deg == 1 {
            push_factor(&mut result, f, poly);
            continue;
        }
        // squarefree split: gcd with derivative
        let deriv = derivative(&f);
        if deriv.is_zero() {
            // f = g(x^p); take p-th root by Frobenius-inverting coefficients
            let root = pth_root(&f);
            stack.push(root);
            continue;
        }
        let g = f.gcd(&deriv);
        if g.degree().unwrap_or(0) > 0 {
            stack.push(g.clone());
            stack.push(f.divmod(&g).0);
            continue;
        }
        // f squarefree: Berlekamp subalgebra
        let n = deg;
        let q = field.order() as u64;
        // rows of Q: x^{q i} mod f
        let mut qmat = Matrix::zeros(field.clone(), n, n);
        for i in 0..n {
            let xp = Poly::x_pow_mod(q * i as u64, &f);
            for (j, &c) in xp.coeffs.iter().enumerate() {
                qmat.set(i, j, c);
            }
        }
        // v with v(x)^q = v(x) mod f: kernel of (Q - I)^T acting on coefficient columns
        let diff = qmat.transpose().sub(&Matrix::identity(field.clone(), n));
        let basis = diff.kernel_basis();
        if basis.rows() <= 1 {
            push_factor(&mut result, f, poly);
            continue;
        }
        // find a basis element that splits f
        let mut split = false;
        'rows: for bi in 0..basis.rows() {
            let v = Poly::new(field.clone(), basis.row(bi).to_vec());
            if v.degree().unwrap_or(0) == 0 {
                continue;
            }
            for c in field.elements() {
                let mut shifted = v.clone();
                if !shifted.coeffs.is_empty() {
                    shifted.coeffs[0] = field.sub(shifted.coeffs[0], c);
                } else {
                    shifted = Poly::new(field.clone(), vec![field.neg(c)]);
                }
                let g = f.gcd(&shifted);
                let gd = g.degree().unwrap_or(0);
                if gd > 0 && gd < deg {
                    stack.push(g.clone());
                    stack.push(f.divmod(&g).0);
                    split = true;
                    break 'rows;
                }
            }
        }
        if !split {
            push_factor(&mut result, f, poly);
        }
    }
    result.sort_by(|a, b| {
        (a.0.coeffs.len(), &a.0.coeffs).cmp(&(b.0.coeffs.len(), &b.0.coeffs))
    });
    result
}

fn push_factor(result: &mut Vec<(Poly, usize)>, f: Poly, original: &Poly) {
    let f = f.monic();
    if result.iter().any(|(g, _)| *g == f) {
        return;
    }
    // multiplicity by repeated division of the original polynomial
    let mut mult = 0;
    let mut rest = original.monic();
    loop {
        let (q, r) = rest.divmod(&f);
        if !r.is_zero() {
            break;
        }
        mult += 1;
        rest = q;
    }
    result.push((f, mult));
}

fn derivative(f: &Poly) -> Poly {
    let field = &f.field;
    let p = field.p() as usize;
    let coeffs = f
        .coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| field.mul((i % p) as u16, c))
        .collect();
    Poly::new(f.field.clone(), coeffs)
}

/// p-th root of a polynomial in x^p (coefficientwise inverse Frobenius).
fn pth_root(f: &Poly) -> Poly {
    let field = &f.field;
    let p = field.p() as usize;
    let q = field.order() as u64;
    let mut out = Vec::new();
    for (i, &c) in f.coeffs.iter().enumerate() {
        if i % p == 0 {
            // c^(q/p) is the p-th root in F_q
            out.push(field.pow(c, q / p as u64));
        } else {
            debug_assert_eq!(c, 0);
        }
    }
    Poly::new(f.field.clone(), out)
}

/// Minimal polynomial of a square matrix, via Krylov chains over each
/// standard basis vector (lcm of the local minimal polynomials).
pub fn matrix_min_poly(m: &Matrix) -> Poly {
    assert_eq!(m.rows(), m.cols());
    let field = m.field().clone();
    let n = m.rows();
    if n == 0 {
        return Poly::one(field);
    }
    let mut minpoly = Poly::one(field.clone());
    for start in 0..n {
        // Krylov chain from e_start
        let mut v = vec![0u16; n];
        v[start] = 1;
        let mut chain: Vec<Vec<u16>> = vec![v.clone()];
        // reduced echelon tracking: rows of the chain matrix
        loop {
            let last = chain.last().unwrap();
            let next = m.apply(last);
            chain.push(next);
            let mat = Matrix::from_rows(field.clone(), chain.clone());
            if mat.rank() < chain.len() {
                break;
            }
            if chain.len() > n {
                break;
            }
        }
        // dependency: solve chain[0..k]^T c = chain[k]
        let k = chain.len() - 1;
        let prev = Matrix::from_rows(field.clone(), chain[..k].to_vec()).transpose();
        let target = Matrix::col_vec(field.clone(), &chain[k]);
        let sol = crate::matrix::solve_linear(&prev, &target)
            .expect("Krylov dependency must be solvable");
        // local min poly: x^k - sum c_i x^i
        let mut coeffs = vec![0u16; k + 1];
        for i in 0..k {
            coeffs[i] = field.neg(sol.particular.get(i, 0));
        }
        coeffs[k] = 1;
        let local = Poly::new(field.clone(), coeffs);
        // lcm(minpoly, local)
        let g = minpoly.gcd(&local);
        minpoly = minpoly.mul(&local.divmod(&g).0).monic();
        if minpoly.degree() == Some(n) {
            break;
        }
    }
    minpoly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn factor_splits_completely() {
        let f3 = Field::new(3, 1).unwrap();
        // (x)(x+1)^2(x^2+1) over F_3; x^2+1 is irreducible
        let x = Poly::x(f3.clone());
        let xp1 = Poly::new(f3.clone(), vec![1, 1]);
        let quad = Poly::new(f3.clone(), vec![1, 0, 1]);
        let prod = x.mul(&xp1).mul(&xp1).mul(&quad);
        let factors = berlekamp_factor(&prod);
        assert_eq!(factors.len(), 3);
        let total: usize = factors
            .iter()
            .map(|(g, m)| g.degree().unwrap() * m)
            .sum();
        assert_eq!(total, prod.degree().unwrap());
        assert!(factors.iter().any(|(g, m)| *g == xp1 && *m == 2));
        assert!(factors.iter().any(|(g, m)| *g == quad && *m == 1));
    }

    #[test]
    fn factor_frobenius_power() {
        let f3 = Field::new(3, 1).unwrap();
        // x^3 - x = x(x-1)(x+1)
        let p = Poly::new(f3.clone(), vec![0, 2, 0, 1]);
        let factors = berlekamp_factor(&p);
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|(g, m)| g.degree() == Some(1) && *m == 1));
    }

    #[test]
    fn min_poly_of_jordan_block() {
        let f = Field::new(3, 1).unwrap();
        let n = Matrix::from_fn(f.clone(), 3, 3, |i, j| u16::from(j == i + 1));
        let mp = matrix_min_poly(&n);
        assert_eq!(mp, Poly::new(f, vec![0, 0, 0, 1])); // x^3
    }

    #[test]
    fn min_poly_of_diagonal() {
        let f = Field::new(5, 1).unwrap();
        let d = Matrix::from_fn(f.clone(), 3, 3, |i, j| if i == j { [1, 2, 2][i] } else { 0 });
        let mp = matrix_min_poly(&d);
        // (x-1)(x-2)
        let expect = Poly::new(f.clone(), vec![4, 4, 0]); // placeholder, recompute
        let x = Poly::x(f.clone());
        let m1 = x.sub(&Poly::new(f.clone(), vec![1]));
        let m2 = x.sub(&Poly::new(f.clone(), vec![2]));
        assert_eq!(mp, m1.mul(&m2).monic());
        let _ = expect;
    }
}
