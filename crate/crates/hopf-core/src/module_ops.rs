//! Module operations that need the coalgebra layer: Hopf tensor products
//! and duals.

use algebra_core::ModuleRep;
use gf_core::Matrix;

use crate::hopf::HopfAlgebra;

/// Tensor product of modules over a Hopf algebra:
/// `rho(a) = sum (rho_M (x) rho_N)(Delta a)`, lexicographic basis order.
pub fn tensor_module(h: &HopfAlgebra, m: &ModuleRep, n: &ModuleRep) -> ModuleRep {
    let f = h.algebra.field().clone();
    let dim = m.dim * n.dim;
    let action = (0..h.dim())
        .map(|k| {
            let mut acc = Matrix::zeros(f.clone(), dim, dim);
            for &(i, j, c) in &h.comult[k] {
                let kron = m.action[i as usize].kronecker(&n.action[j as usize]);
                acc = acc.add(&kron.scale(c));
            }
            acc
        })
        .collect();
    ModuleRep::new_unchecked(m.algebra.clone(), action)
}

/// Dual module via the antipode transpose: `rho_{M*}(a) = rho_M(S a)^T`.
pub fn dual_module(h: &HopfAlgebra, m: &ModuleRep) -> ModuleRep {
    let action = (0..h.dim())
        .map(|k| {
            let mut s = Vec::with_capacity(h.dim());
            for r in 0..h.dim() {
                s.push(h.antipode.get(r, k));
            }
            m.act_element(&s).transpose()
        })
        .collect();
    ModuleRep::new_unchecked(m.algebra.clone(), action)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::{ComultRow, HopfAlgebra};
    use algebra_core::{to_sparse, Algebra};
    use gf_core::Field;

    /// k[t]/(t^3) with t primitive over F_3.
    fn truncated_hopf() -> crate::hopf::HopfRef {
        let f = Field::new(3, 1).unwrap();
        let dim = 3;
        let mut mult = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let mut row = vec![0u16; dim];
                if i + j < dim {
                    row[i + j] = 1;
                }
                mult.push(to_sparse(&row));
            }
        }
        let algebra = Algebra::build(
            f.clone(),
            vec!["1".into(), "t".into(), "t2".into()],
            mult,
            vec![1, 0, 0],
            Some(vec![1, 0, 0]),
        )
        .unwrap();
        // Delta(t^n) = sum binom(n,k) t^k (x) t^{n-k}
        let comult: Vec<ComultRow> = vec![
            vec![(0, 0, 1)],
            vec![(0, 1, 1), (1, 0, 1)],
            vec![(0, 2, 1), (1, 1, 2), (2, 0, 1)],
        ];
        let counit = vec![1, 0, 0];
        let mut antipode = gf_core::Matrix::zeros(f, 3, 3);
        antipode.set(0, 0, 1);
        antipode.set(1, 1, 2); // S(t) = -t
        antipode.set(2, 2, 1); // S(t^2) = t^2
        HopfAlgebra::new(algebra, comult, counit, antipode).unwrap()
    }

    #[test]
    fn axioms_pass_for_primitive_truncated_polynomials() {
        let h = truncated_hopf();
        assert!(crate::hopf::check_hopf(&h).all_pass());
        assert!(h.is_cocommutative().is_ok());
        // primitives: exactly the span of t
        let prim = h.primitives();
        assert_eq!(prim.rows(), 1);
        assert_eq!(prim.row(0), &[0, 1, 0]);
    }

    #[test]
    fn unit_module_is_tensor_identity() {
        let h = truncated_hopf();
        let k = ModuleRep::trivial(&h.algebra);
        let reg = ModuleRep::regular(&h.algebra);
        let t = tensor_module(&h, &reg, &k);
        assert_eq!(t.dim, reg.dim);
        for (a, b) in t.action.iter().zip(&reg.action) {
            assert_eq!(a, b);
        }
        assert_eq!(tensor_module(&h, &k, &reg).dim, reg.dim);
    }

    #[test]
    fn tensor_of_truncated_with_itself_is_free() {
        // k[t]/(t^3) (x) k[t]/(t^3) under primitive t has Jordan type [3,3,3]
        let h = truncated_hopf();
        let reg = ModuleRep::regular(&h.algebra);
        let t = tensor_module(&h, &reg, &reg);
        assert_eq!(t.dim, 9);
        let nt = &t.action[1]; // action of t
        let jt = gf_core::jordan_type(nt, 3).unwrap();
        assert_eq!(jt.parts, vec![3, 3, 3]);
    }

    #[test]
    fn dual_module_dimension_and_double_dual() {
        let h = truncated_hopf();
        let reg = ModuleRep::regular(&h.algebra);
        let d = dual_module(&h, &reg);
        assert_eq!(d.dim, reg.dim);
        d.validate().unwrap();
        let dd = dual_module(&h, &d);
        dd.validate().unwrap();
    }

    #[test]
    fn corrupted_comultiplication_fails_with_witness() {
        let f = Field::new(3, 1).unwrap();
        let dim = 3;
        let mut mult = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                let mut row = vec![0u16; dim];
                if i + j < dim {
                    row[i + j] = 1;
                }
                mult.push(to_sparse(&row));
            }
        }
        let algebra = Algebra::build(
            f.clone(),
            vec!["1".into(), "t".into(), "t2".into()],
            mult,
            vec![1, 0, 0],
            Some(vec![1, 0, 0]),
        )
        .unwrap();
        let comult: Vec<ComultRow> = vec![
            vec![(0, 0, 1)],
            vec![(0, 1, 1), (1, 0, 1)],
            // corrupted: coefficient of t (x) t is 1 instead of 2
            vec![(0, 2, 1), (1, 1, 1), (2, 0, 1)],
        ];
        let counit = vec![1, 0, 0];
        let mut antipode = gf_core::Matrix::zeros(f, 3, 3);
        antipode.set(0, 0, 1);
        antipode.set(1, 1, 2);
        antipode.set(2, 2, 1);
        let err = HopfAlgebra::new(algebra, comult, counit, antipode).unwrap_err();
        // the corruption surfaces with a concrete witness index
        match err {
            crate::error::HopfError::Coassociativity(_)
            | crate::error::HopfError::ComultNotMultiplicative(_, _)
            | crate::error::HopfError::Antipode(_) => {}
            other => panic!("unexpected error {other}"),
        }
    }
}
