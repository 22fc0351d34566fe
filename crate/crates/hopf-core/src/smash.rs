//! Smash products `A # H` and the Hopf structure on them (tensor-product
//! coalgebra) when `H` is cocommutative — the construction behind both the
//! bosonization of truncated symmetric algebras and the Drinfeld double.

use std::collections::HashMap;

use algebra_core::{Algebra, AlgebraRef, SmashMult, SparseVec};
use gf_core::Matrix;

use crate::action::ModuleAlgebraAction;
use crate::error::HopfError;
use crate::hopf::{check_hopf, normalize_row, ComultRow, HopfAlgebra, HopfRef};

/// Build the smash-product algebra `A # H` from a validated module-algebra
/// action: `(a # h)(a' # h') = sum a (h_(1) . a') # h_(2) h'`.
/// Basis ordering is left-factor major: index of `a_i # h_j` is
/// `i * dim H + j`.
pub fn smash_product(action: &ModuleAlgebraAction) -> Result<AlgebraRef, HopfError> {
    let a = &action.target;
    let h = &action.hopf;
    let f = a.field().clone();
    let (na, nh) = (a.dim(), h.dim());
    let mut a_mult: Vec<SparseVec> = Vec::with_capacity(na * na);
    for i in 0..na {
        for j in 0..na {
            a_mult.push(a.product_basis(i, j));
        }
    }
    let mut h_mult: Vec<SparseVec> = Vec::with_capacity(nh * nh);
    for i in 0..nh {
        for j in 0..nh {
            h_mult.push(h.algebra.product_basis(i, j));
        }
    }
    let smash = SmashMult {
        a_dim: na,
        h_dim: nh,
        a_mult,
        h_mult,
        action: action.matrices.clone(),
        h_comult: h.comult.clone(),
        a_unit: a.unit().to_vec(),
        h_unit: h.algebra.unit().to_vec(),
        a_aug: a.augmentation().map(|x| x.to_vec()),
        h_aug: Some(h.counit.clone()),
    };
    let mut labels = Vec::with_capacity(na * nh);
    for la in a.labels() {
        for lh in h.algebra.labels() {
            labels.push(format!("{la}#{lh}"));
        }
    }
    let mut unit = vec![0u16; na * nh];
    for (i, &ua) in a.unit().iter().enumerate() {
        for (j, &uh) in h.algebra.unit().iter().enumerate() {
            unit[i * nh + j] = f.mul(ua, uh);
        }
    }
    let augmentation = a.augmentation().map(|eps_a| {
        let mut eps = vec![0u16; na * nh];
        for (i, &xa) in eps_a.iter().enumerate() {
            for (j, &xh) in h.counit.iter().enumerate() {
                eps[i * nh + j] = f.mul(xa, xh);
            }
        }
        eps
    });
    Ok(Algebra::from_smash(f, labels, smash, unit, augmentation)?)
}

/// Put the unique compatible Hopf structure on `A # H`: the tensor-product
/// coalgebra of `A` and `H`, with antipode `S(a # h) = (1 # S h)(S a # 1)`.
/// Requires `H` cocommutative; every axiom is then verified exactly, so a
/// bad action or convention surfaces as `HopfAxiomFailure`.
pub fn hopf_smash(
    action: &ModuleAlgebraAction,
    a_hopf: &HopfRef,
    h_hopf: &HopfRef,
) -> Result<HopfRef, HopfError> {
    h_hopf
        .is_cocommutative()
        .map_err(HopfError::NotCocommutative)?;
    let algebra = smash_product(action)?;
    let f = algebra.field().clone();
    let (na, nh) = (a_hopf.dim(), h_hopf.dim());
    let idx = |i: usize, j: usize| -> u32 { (i * nh + j) as u32 };
    // tensor coalgebra: Delta(a#h) = sum (a1 # h1) (x) (a2 # h2)
    let mut comult: Vec<ComultRow> = Vec::with_capacity(na * nh);
    for i in 0..na {
        for j in 0..nh {
            let mut row: ComultRow = Vec::new();
            for &(a1, a2, ca) in &a_hopf.comult[i] {
                for &(h1, h2, ch) in &h_hopf.comult[j] {
                    row.push((
                        idx(a1 as usize, h1 as usize),
                        idx(a2 as usize, h2 as usize),
                        f.mul(ca, ch),
                    ));
                }
            }
            normalize_row(&f, &mut row);
            comult.push(row);
        }
    }
    let mut counit = vec![0u16; na * nh];
    for i in 0..na {
        for j in 0..nh {
            counit[i * nh + j] = f.mul(a_hopf.counit[i], h_hopf.counit[j]);
        }
    }
    // antipode: S(a_i # h_j) = (1 # S h_j)(S a_i # 1)
    let mut antipode = Matrix::zeros(f.clone(), na * nh, na * nh);
    for i in 0..na {
        for j in 0..nh {
            // S h_j embedded as 1 # (S h_j)
            let mut left = vec![0u16; na * nh];
            for r in 0..nh {
                let v = h_hopf.antipode.get(r, j);
                if v == 0 {
                    continue;
                }
                for (ai, &ua) in a_hopf.algebra.unit().iter().enumerate() {
                    if ua != 0 {
                        left[ai * nh + r] = f.add(left[ai * nh + r], f.mul(ua, v));
                    }
                }
            }
            // S a_i embedded as (S a_i) # 1
            let mut right = vec![0u16; na * nh];
            for r in 0..na {
                let v = a_hopf.antipode.get(r, i);
                if v == 0 {
                    continue;
                }
                for (hj, &uh) in h_hopf.algebra.unit().iter().enumerate() {
                    if uh != 0 {
                        right[r * nh + hj] = f.add(right[r * nh + hj], f.mul(v, uh));
                    }
                }
            }
            let prod = algebra.multiply(&left, &right);
            for (r, &v) in prod.iter().enumerate() {
                if v != 0 {
                    antipode.set(r, (i * nh + j) as usize, v);
                }
            }
        }
    }
    let h = HopfAlgebra {
        algebra,
        comult,
        counit,
        antipode,
    };
    let report = check_hopf(&h);
    match report.first_error() {
        None => Ok(std::sync::Arc::new(h)),
        Some(e) => Err(HopfError::HopfAxiomFailure(e.to_string())),
    }
}

/// Verify that the two canonical inclusions `A -> A # H` and `H -> A # H`
/// are Hopf algebra maps (entrywise on the coalgebra layer; the algebra
/// layer is structural).
pub fn inclusions_are_hopf_maps(
    smash: &HopfAlgebra,
    a_hopf: &HopfAlgebra,
    h_hopf: &HopfAlgebra,
) -> bool {
    let f = smash.algebra.field();
    let (na, nh) = (a_hopf.dim(), h_hopf.dim());
    let idx = |i: usize, j: usize| -> u32 { (i * nh + j) as u32 };
    // units of the factors must be basis-supported for the entrywise check
    let ua = a_hopf.algebra.unit();
    let uh = h_hopf.algebra.unit();
    // iota_A(a_i) = sum_j u_j . (a_i # h_j)
    for i in 0..na {
        // Delta_smash(iota a_i) vs (iota (x) iota) Delta_A(a_i)
        let mut lhs: HashMap<(u32, u32), u16> = HashMap::new();
        for (j, &u) in uh.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for &(x, y, c) in &smash.comult[i * nh + j] {
                let e = lhs.entry((x, y)).or_insert(0);
                *e = f.add(*e, f.mul(u, c));
            }
        }
        lhs.retain(|_, v| *v != 0);
        let mut rhs: HashMap<(u32, u32), u16> = HashMap::new();
        for &(a1, a2, c) in &a_hopf.comult[i] {
            for (j1, &v1) in uh.iter().enumerate() {
                if v1 == 0 {
                    continue;
                }
                for (j2, &v2) in uh.iter().enumerate() {
                    if v2 == 0 {
                        continue;
                    }
                    let e = rhs
                        .entry((idx(a1 as usize, j1), idx(a2 as usize, j2)))
                        .or_insert(0);
                    *e = f.add(*e, f.mul(c, f.mul(v1, v2)));
                }
            }
        }
        rhs.retain(|_, v| *v != 0);
        if lhs != rhs {
            return false;
        }
    }
    // iota_H(h_j) = sum_i u_i . (a_i # h_j)
    for j in 0..nh {
        let mut lhs: HashMap<(u32, u32), u16> = HashMap::new();
        for (i, &u) in ua.iter().enumerate() {
            if u == 0 {
                continue;
            }
            for &(x, y, c) in &smash.comult[i * nh + j] {
                let e = lhs.entry((x, y)).or_insert(0);
                *e = f.add(*e, f.mul(u, c));
            }
        }
        lhs.retain(|_, v| *v != 0);
        let mut rhs: HashMap<(u32, u32), u16> = HashMap::new();
        for &(h1, h2, c) in &h_hopf.comult[j] {
            for (i1, &v1) in ua.iter().enumerate() {
                if v1 == 0 {
                    continue;
                }
                for (i2, &v2) in ua.iter().enumerate() {
                    if v2 == 0 {
                        continue;
                    }
                    let e = rhs
                        .entry((idx(i1, h1 as usize), idx(i2, h2 as usize)))
                        .or_insert(0);
                    *e = f.add(*e, f.mul(c, f.mul(v1, v2)));
                }
            }
        }
        rhs.retain(|_, v| *v != 0);
        if lhs != rhs {
            return false;
        }
    }
    true
}
