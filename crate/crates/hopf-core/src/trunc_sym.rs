//! Truncated symmetric algebras `S_r(V) = Sym(V)/(v^{p^r})` as Hopf algebras
//! with primitive degree-one generators, carrying an extended `H`-action.

use algebra_core::{Algebra, AlgebraRef, SparseVec};
use gf_core::Matrix;

use crate::action::ModuleAlgebraAction;
use crate::error::HopfError;
use crate::hopf::{normalize_row, ComultRow, HopfAlgebra, HopfRef};

/// The result of the truncated-symmetric construction: the Hopf algebra
/// `S_r(V)` and the multiplicatively extended action of `H` on it.
pub struct TruncatedSymmetric {
    pub hopf: HopfRef,
    pub action: ModuleAlgebraAction,
    /// Basis indices of the degree-one generators `v_1, ..., v_d`.
    pub generators: Vec<usize>,
    /// Exponent vectors of the monomial basis.
    pub exponents: Vec<Vec<usize>>,
}

/// Build `S_r(V)` for an `H`-module `V` (action matrices over the acting
/// Hopf algebra `h`), with monomial basis `{v^a : 0 <= a_i < p^r}` ordered
/// by mixed radix on the exponent vector (last variable fastest).
///
/// The `H`-action is extended from `V` by `h.(v m) = sum (h_(1).v)(h_(2).m)`
/// and then certified as a module-algebra action.
pub fn truncated_symmetric(
    h: &HopfRef,
    v_action: &[Matrix],
    r: usize,
) -> Result<TruncatedSymmetric, HopfError> {
    let f = h.algebra.field().clone();
    let p = f.p() as usize;
    let d = v_action.first().map_or(0, |m| m.rows());
    assert!(d <= 3, "catalog scale supports dim V <= 3");
    assert!(r >= 1);
    let q = p.pow(r as u32);
    let dim: usize = q.pow(d as u32);
    // exponent vectors in mixed radix, last variable fastest
    let exponents: Vec<Vec<usize>> = (0..dim)
        .map(|mut idx| {
            let mut e = vec![0usize; d];
            for slot in (0..d).rev() {
                e[slot] = idx % q;
                idx /= q;
            }
            e
        })
        .collect();
    let index_of = |e: &[usize]| -> Option<usize> {
        let mut idx = 0usize;
        for &x in e {
            if x >= q {
                return None;
            }
            idx = idx * q + x;
        }
        Some(idx)
    };
    // multiplication: multinomial-free since variables commute and the
    // quotient kills exponents >= p^r
    let mut mult: Vec<SparseVec> = Vec::with_capacity(dim * dim);
    for a in 0..dim {
        for b in 0..dim {
            let sum: Vec<usize> = exponents[a]
                .iter()
                .zip(&exponents[b])
                .map(|(x, y)| x + y)
                .collect();
            mult.push(match index_of(&sum) {
                Some(k) => vec![(k as u32, 1)],
                None => Vec::new(),
            });
        }
    }
    let labels: Vec<String> = exponents
        .iter()
        .map(|e| {
            if e.iter().all(|&x| x == 0) {
                "1".to_string()
            } else {
                e.iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(i, &x)| {
                        if x == 1 {
                            format!("v{i}")
                        } else {
                            format!("v{i}^{x}")
                        }
                    })
                    .collect::<Vec<_>>()
                    .join("")
            }
        })
        .collect();
    let mut unit = vec![0u16; dim];
    unit[0] = 1;
    let mut eps = vec![0u16; dim];
    eps[0] = 1;
    let algebra = Algebra::build(f.clone(), labels, mult, unit, Some(eps.clone()))?;
    // comultiplication: generators primitive, extended multiplicatively;
    // Delta(v^a) = prod (v (x) 1 + 1 (x) v)^{a_i} gives the binomial form
    // coefficient binom(a, b) at (v^b) (x) (v^{a-b})
    let mut comult: Vec<ComultRow> = Vec::with_capacity(dim);
    let binom = binomial_table(&f, q);
    for e in &exponents {
        let mut row: ComultRow = Vec::new();
        // iterate all sub-exponent vectors b <= e
        let mut sub = vec![0usize; d];
        'subs: loop {
            let mut coeff = 1u16;
            for i in 0..d {
                coeff = f.mul(coeff, binom[e[i]][sub[i]]);
            }
            if coeff != 0 {
                let rest: Vec<usize> = e.iter().zip(&sub).map(|(x, y)| x - y).collect();
                row.push((
                    index_of(&sub).unwrap() as u32,
                    index_of(&rest).unwrap() as u32,
                    coeff,
                ));
            }
            // increment sub in mixed radix bounded coordinatewise by e
            let mut slot = d;
            while slot > 0 {
                slot -= 1;
                if sub[slot] < e[slot] {
                    sub[slot] += 1;
                    for s in sub.iter_mut().skip(slot + 1) {
                        *s = 0;
                    }
                    continue 'subs;
                }
            }
            break;
        }
        normalize_row(&f, &mut row);
        comult.push(row);
    }
    // antipode: v -> -v extended multiplicatively: (-1)^{total degree}
    let mut antipode = Matrix::zeros(f.clone(), dim, dim);
    for (k, e) in exponents.iter().enumerate() {
        let deg: usize = e.iter().sum();
        let sign = if deg % 2 == 0 { 1 } else { f.neg(1) };
        antipode.set(k, k, sign);
    }
    let hopf = HopfAlgebra::new(algebra.clone(), comult, eps, antipode)?;
    // extend the action degree by degree
    let matrices = extend_action(h, &algebra, v_action, &exponents, q)?;
    let action = ModuleAlgebraAction::new(h.clone(), algebra, matrices)?;
    // generator indices: exponent vectors with a single 1
    let generators: Vec<usize> = (0..d)
        .map(|i| {
            let mut e = vec![0usize; d];
            e[i] = 1;
            index_of(&e).unwrap()
        })
        .collect();
    Ok(TruncatedSymmetric {
        hopf,
        action,
        generators,
        exponents,
    })
}

/// Pascal's triangle mod p, up to row `q`.
fn binomial_table(f: &gf_core::FieldRef, q: usize) -> Vec<Vec<u16>> {
    let mut t = vec![vec![0u16; q + 1]; q + 1];
    for n in 0..=q {
        t[n][0] = 1;
        for k in 1..=n {
            let a = t[n - 1][k - 1];
            let b = if k <= n - 1 { t[n - 1][k] } else { 0 };
            t[n][k] = f.add(a, b);
        }
    }
    t
}

/// Extend the action on `V` multiplicatively to the monomial basis via
/// `h.(v m) = sum (h_(1).v)(h_(2).m)`, processing monomials by total degree.
fn extend_action(
    h: &HopfRef,
    s_algebra: &AlgebraRef,
    v_action: &[Matrix],
    exponents: &[Vec<usize>],
    q: usize,
) -> Result<Vec<Matrix>, HopfError> {
    let f = s_algebra.field().clone();
    let nh = h.dim();
    let dim = exponents.len();
    let d = exponents.first().map_or(0, |e| e.len());
    let index_of = |e: &[usize]| -> usize {
        let mut idx = 0usize;
        for &x in e {
            idx = idx * q + x;
        }
        idx
    };
    let mut matrices = vec![Matrix::zeros(f.clone(), dim, dim); nh];
    // order monomial indices by degree
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by_key(|&i| exponents[i].iter().sum::<usize>());
    for &m in &order {
        let deg: usize = exponents[m].iter().sum();
        if deg == 0 {
            // h . 1 = eps(h) 1
            for (hm, &e) in matrices.iter_mut().zip(&h.counit) {
                hm.set(0, m, e);
            }
            continue;
        }
        // strip the first variable with positive exponent
        let var = exponents[m].iter().position(|&x| x > 0).unwrap();
        let mut rest = exponents[m].clone();
        rest[var] -= 1;
        let rest_idx = index_of(&rest);
        if deg == 1 {
            for (hi, hm) in matrices.iter_mut().enumerate() {
                for tv in 0..d {
                    let c = v_action[hi].get(tv, var);
                    if c != 0 {
                        let mut te = vec![0usize; d];
                        te[tv] = 1;
                        hm.set(index_of(&te), m, c);
                    }
                }
            }
            continue;
        }
        for hi in 0..nh {
            let mut acc = vec![0u16; dim];
            for &(h1, h2, c) in &h.comult[hi] {
                // (h1 . v_var) as an S-vector (degree-one image)
                let mut xv = vec![0u16; dim];
                for tv in 0..d {
                    let cv = v_action[h1 as usize].get(tv, var);
                    if cv != 0 {
                        let mut te = vec![0usize; d];
                        te[tv] = 1;
                        xv[index_of(&te)] = cv;
                    }
                }
                // (h2 . rest): column rest_idx of matrices[h2]
                let mut xr = vec![0u16; dim];
                for rr in 0..dim {
                    let v = matrices[h2 as usize].get(rr, rest_idx);
                    if v != 0 {
                        xr[rr] = v;
                    }
                }
                let prod = s_algebra.multiply(&xv, &xr);
                for (x, &v) in acc.iter_mut().zip(&prod) {
                    if v != 0 {
                        *x = f.add(*x, f.mul(c, v));
                    }
                }
            }
            for (rr, &v) in acc.iter().enumerate() {
                if v != 0 {
                    matrices[hi].set(rr, m, v);
                }
            }
        }
    }
    Ok(matrices)
}
