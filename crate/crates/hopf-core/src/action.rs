//! Module-algebra actions `H (x) A -> A` and the adjoint action of `kG` on
//! `O(G)` obtained by dualizing the conjugation coaction.

use algebra_core::AlgebraRef;
use gf_core::Matrix;

use crate::error::HopfError;
use crate::hopf::{HopfAlgebra, HopfRef};

/// An action of a Hopf algebra `H` on an algebra `A` satisfying the
/// module-algebra law `h.(ab) = sum (h_(1).a)(h_(2).b)` and `h.1 = eps(h) 1`.
pub struct ModuleAlgebraAction {
    pub hopf: HopfRef,
    pub target: AlgebraRef,
    /// One `dim A x dim A` matrix per `H`-basis element.
    pub matrices: Vec<Matrix>,
}

impl ModuleAlgebraAction {
    pub fn new(
        hopf: HopfRef,
        target: AlgebraRef,
        matrices: Vec<Matrix>,
    ) -> Result<ModuleAlgebraAction, HopfError> {
        let a = ModuleAlgebraAction {
            hopf,
            target,
            matrices,
        };
        a.validate()?;
        Ok(a)
    }

    pub fn validate(&self) -> Result<(), HopfError> {
        let h = &self.hopf;
        let a = &self.target;
        let f = a.field().clone();
        let nh = h.dim();
        let na = a.dim();
        // module axioms: rho(1_H) = id, rho(h h') = rho(h) rho(h')
        let unit_act = act_vec(&self.matrices, h.algebra.unit(), &f, na);
        if !unit_act.is_identity() {
            return Err(HopfError::ActionNotModuleAlgebra(usize::MAX, 0, 0));
        }
        for i in 0..nh {
            for j in 0..nh {
                let lhs = self.matrices[i].mul(&self.matrices[j]);
                let mut rhs = Matrix::zeros(f.clone(), na, na);
                for &(k, c) in &h.algebra.product_basis(i, j) {
                    rhs = rhs.add(&self.matrices[k as usize].scale(c));
                }
                if lhs != rhs {
                    return Err(HopfError::ActionNotModuleAlgebra(i, j, usize::MAX));
                }
            }
        }
        // h . 1 = eps(h) 1
        for i in 0..nh {
            let img = self.matrices[i].apply(a.unit());
            let expect: Vec<u16> = a.unit().iter().map(|&u| f.mul(h.counit[i], u)).collect();
            if img != expect {
                return Err(HopfError::ActionNotModuleAlgebra(i, usize::MAX, usize::MAX));
            }
        }
        // module-algebra law on basis triples
        for hi in 0..nh {
            for ai in 0..na {
                for bi in 0..na {
                    let prod = a.product_basis(ai, bi);
                    let mut lhs = vec![0u16; na];
                    for &(k, c) in &prod {
                        let col = column(&self.matrices[hi], k as usize);
                        for (x, &v) in lhs.iter_mut().zip(&col) {
                            *x = f.add(*x, f.mul(c, v));
                        }
                    }
                    let mut rhs = vec![0u16; na];
                    for &(h1, h2, c) in &h.comult[hi] {
                        let xa = column(&self.matrices[h1 as usize], ai);
                        let xb = column(&self.matrices[h2 as usize], bi);
                        let prod = a.multiply(&xa, &xb);
                        for (x, &v) in rhs.iter_mut().zip(&prod) {
                            *x = f.add(*x, f.mul(c, v));
                        }
                    }
                    if lhs != rhs {
                        return Err(HopfError::ActionNotModuleAlgebra(hi, ai, bi));
                    }
                }
            }
        }
        Ok(())
    }

    /// Whether the action fixes the augmentation of the target:
    /// `eps(h.a) = eps(h) eps(a)`.
    pub fn fixes_counit(&self) -> bool {
        let Some(_) = self.target.augmentation() else {
            return false;
        };
        let f = self.target.field();
        for hi in 0..self.hopf.dim() {
            for ai in 0..self.target.dim() {
                let img = column(&self.matrices[hi], ai);
                let lhs = self.target.augment(&img).unwrap();
                let rhs = f.mul(
                    self.hopf.counit[hi],
                    self.target
                        .augment(&self.target.basis_vector(ai))
                        .unwrap(),
                );
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Action matrix of an arbitrary element of `H`.
    pub fn act_element(&self, x: &[u16]) -> Matrix {
        act_vec(
            &self.matrices,
            x,
            self.target.field(),
            self.target.dim(),
        )
    }
}

fn act_vec(matrices: &[Matrix], x: &[u16], f: &gf_core::FieldRef, dim: usize) -> Matrix {
    let mut m = Matrix::zeros(f.clone(), dim, dim);
    for (i, &c) in x.iter().enumerate() {
        if c != 0 {
            m = m.add(&matrices[i].scale(c));
        }
    }
    m
}

fn column(m: &Matrix, j: usize) -> Vec<u16> {
    let mut v = Vec::with_capacity(m.rows());
    for i in 0..m.rows() {
        v.push(m.get(i, j));
    }
    v
}

/// Adjoint action of the dual Hopf algebra `kG = O(G)*` on `O(G)`, from the
/// conjugation coaction `f -> S(f_(1)) f_(3) (x) f_(2)`:
/// `mu . f = sum <mu, S(f_(1)) f_(3)> f_(2)`.
///
/// Returns one matrix per dual-basis element of `kG` (indexed like the basis
/// of `O(G)`).
pub fn conjugation_action(og: &HopfAlgebra) -> Vec<Matrix> {
    let f = og.algebra.field().clone();
    let n = og.dim();
    let mut out = vec![Matrix::zeros(f.clone(), n, n); n];
    // cache of products S(b_a) * b_c
    let mut cache: std::collections::HashMap<(u32, u32), Vec<u16>> =
        std::collections::HashMap::new();
    for col in 0..n {
        for (&(a, b, c3), &coeff) in og.comult2(col).iter() {
            // term coeff . b_a (x) b_b (x) b_c3 of Delta^2(b_col)
            let key = (a, c3);
            let prod = cache.entry(key).or_insert_with(|| {
                let sa = {
                    let mut v = Vec::with_capacity(n);
                    for r in 0..n {
                        v.push(og.antipode.get(r, a as usize));
                    }
                    v
                };
                let bc = og.algebra.basis_vector(c3 as usize);
                og.algebra.multiply(&sa, &bc)
            });
            for (k, &pv) in prod.iter().enumerate() {
                if pv != 0 {
                    let cur = out[k].get(b as usize, col);
                    out[k].set(b as usize, col, f.add(cur, f.mul(coeff, pv)));
                }
            }
        }
    }
    out
}

/// Trivial action of `H` on `A`: `h . a = eps(h) a`.
pub fn trivial_action(hopf: &HopfRef, target: &AlgebraRef) -> Vec<Matrix> {
    let f = target.field().clone();
    let na = target.dim();
    hopf.counit
        .iter()
        .map(|&e| Matrix::identity(f.clone(), na).scale(e))
        .collect()
}
