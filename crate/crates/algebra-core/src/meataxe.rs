//! Randomized module splitting: composition factors, irreducibility testing,
//! and semisimple decomposition into simple summands.

use gf_core::{berlekamp_factor, matrix_min_poly, Matrix, Poly, SplitMix64};

use crate::error::AlgebraError;
use crate::module::{spin, ModuleRep};

const CHOP_RETRIES: usize = 60;

/// Composition factors of a module, in the order discovered (deterministic
/// for a fixed seed). Factors are returned as modules, not deduplicated.
pub fn composition_factors(
    m: &ModuleRep,
    rng: &mut SplitMix64,
) -> Result<Vec<ModuleRep>, AlgebraError> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(cur) = stack.pop() {
        if cur.dim == 0 {
            continue;
        }
        match find_proper_submodule(&cur, rng)? {
            None => out.push(cur),
            Some(sub_basis) => {
                let (sub, _) = cur.submodule(&sub_basis);
                let (quot, _) = cur.quotient(&sub_basis);
                stack.push(quot);
                stack.push(sub);
            }
        }
    }
    Ok(out)
}

/// Find a proper nonzero submodule, or certify irreducibility (None).
///
/// One round: take a random algebra element theta acting on M, factor its
/// minimal polynomial, and spin up kernel vectors of irreducible factors.
/// Norton's criterion converts a fully spinning kernel into an
/// irreducibility certificate via the dual module.
pub fn find_proper_submodule(
    m: &ModuleRep,
    rng: &mut SplitMix64,
) -> Result<Option<Matrix>, AlgebraError> {
    let f = m.algebra.field().clone();
    if m.dim <= 1 {
        return Ok(None);
    }
    let n = m.algebra.dim();
    let seed_snapshot = rng.next_u64();
    let mut local = SplitMix64::new(seed_snapshot);
    for _attempt in 0..CHOP_RETRIES {
        let x: Vec<u16> = (0..n)
            .map(|_| local.below(f.order() as u64) as u16)
            .collect();
        let theta = m.act_element(&x);
        let minpoly = matrix_min_poly(&theta);
        if minpoly.degree().unwrap_or(0) == 0 {
            continue;
        }
        let factors = berlekamp_factor(&minpoly);
        for (g, _) in &factors {
            let ng = eval_poly_at_matrix(g, &theta);
            let ker = ng.kernel_basis();
            if ker.rows() == 0 {
                continue;
            }
            let mut all_full = true;
            for ki in 0..ker.rows() {
                let w = spin(m, &ker.row_slice(ki, ki + 1));
                if w.rows() < m.dim {
                    if w.rows() > 0 {
                        return Ok(Some(w));
                    }
                    all_full = false;
                }
            }
            // Norton's criterion needs minimal nullity: ker g(theta) is then a
            // single simple K[x]/(g)-line, so it lies inside any submodule it
            // meets, and the transpose handles submodules it misses.
            if all_full && ker.rows() == g.degree().unwrap_or(usize::MAX) {
                let dual = dual_action_module(m);
                let kert = ng.transpose().kernel_basis();
                if kert.rows() > 0 {
                    let w = spin(&dual, &kert.row_slice(0, 1));
                    if w.rows() == m.dim {
                        return Ok(None); // irreducible
                    }
                    // the perp of a proper transpose-submodule is proper
                    let perp = w.kernel_basis();
                    if perp.rows() > 0 && perp.rows() < m.dim {
                        return Ok(Some(perp));
                    }
                }
            }
        }
    }
    Err(AlgebraError::DecompositionFailed(CHOP_RETRIES, seed_snapshot))
}

/// The "transpose" module used by Norton's test: right action via
/// transposed matrices (a representation of the opposite algebra; submodule
/// structure is what the criterion needs).
fn dual_action_module(m: &ModuleRep) -> ModuleRep {
    ModuleRep::new_unchecked(
        m.algebra.clone(),
        m.action.iter().map(|a| a.transpose()).collect(),
    )
}

fn eval_poly_at_matrix(p: &Poly, m: &Matrix) -> Matrix {
    let f = m.field().clone();
    let n = m.rows();
    let mut acc = Matrix::zeros(f.clone(), n, n);
    for &c in p.coeffs.iter().rev() {
        acc = acc.mul(m);
        if c != 0 {
            acc = acc.add(&Matrix::identity(f.clone(), n).scale(c));
        }
    }
    acc
}

/// Test isomorphism of two modules over the same algebra. For modules that
/// are semisimple or simple this is exact; in general it checks dimension
/// plus existence of an invertible intertwiner found by seeded random
/// combination of a Hom-space basis.
pub fn modules_isomorphic(a: &ModuleRep, b: &ModuleRep, rng: &mut SplitMix64) -> bool {
    if a.dim != b.dim {
        return false;
    }
    if a.dim == 0 {
        return true;
    }
    let f = a.algebra.field().clone();
    let hom = hom_basis(a, b);
    if hom.is_empty() {
        return false;
    }
    // random combinations; for simple modules one nonzero hom is invertible
    for _ in 0..24 {
        let mut t = Matrix::zeros(f.clone(), b.dim, a.dim);
        for h in &hom {
            let c = rng.below(f.order() as u64) as u16;
            if c != 0 {
                t = t.add(&h.scale(c));
            }
        }
        if t.rank() == a.dim {
            return true;
        }
    }
    // deterministic fallback: single basis elements
    hom.iter().any(|h| h.rank() == a.dim)
}

/// Basis of Hom_A(M, N) as explicit matrices `T : M -> N`.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Vec<Matrix> {
    let f = m.algebra.field().clone();
    let nb = m.algebra.dim();
    let (dm, dn) = (m.dim, n.dim);
    if dm == 0 || dn == 0 {
        return vec![];
    }
    let mut rows: Vec<Vec<u16>> = Vec::new();
    for b in 0..nb {
        let rm = &m.action[b];
        let rn = &n.action[b];
        for i in 0..dn {
            for j in 0..dm {
                let mut row = vec![0u16; dn * dm];
                for k in 0..dm {
                    let v = rm.get(k, j);
                    if v != 0 {
                        row[i * dm + k] = f.add(row[i * dm + k], v);
                    }
                }
                for k in 0..dn {
                    let v = rn.get(i, k);
                    if v != 0 {
                        row[k * dm + j] = f.sub(row[k * dm + j], v);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let sols = if rows.is_empty() {
        Matrix::identity(f.clone(), dn * dm)
    } else {
        Matrix::from_rows(f.clone(), rows).kernel_basis()
    };
    (0..sols.rows())
        .map(|r| {
            let mut t = Matrix::zeros(f.clone(), dn, dm);
            for i in 0..dn {
                for j in 0..dm {
                    t.set(i, j, sols.get(r, i * dm + j));
                }
            }
            t
        })
        .collect()
}

/// Decompose a semisimple module into simple summands. Returns bases (rows,
/// ambient coordinates) of the summands. Fails if a complement cannot be
/// found, which signals a non-semisimple input.
pub fn split_semisimple(
    m: &ModuleRep,
    rng: &mut SplitMix64,
) -> Result<Vec<Matrix>, AlgebraError> {
    let f = m.algebra.field().clone();
    let mut out = Vec::new();
    let mut stack = vec![(
        m.clone(),
        Matrix::identity(f.clone(), m.dim), // rows: current basis in ambient coords
    )];
    while let Some((cur, frame)) = stack.pop() {
        if cur.dim == 0 {
            continue;
        }
        match find_proper_submodule(&cur, rng)? {
            None => out.push(frame),
            Some(sub_basis) => {
                let (_sub, ech) = cur.submodule(&sub_basis);
                // find an equivariant projection pi with image sub, pi|sub = id
                let proj = equivariant_projection(&cur, &ech).ok_or_else(|| {
                    AlgebraError::RadicalNotComputable(
                        "module is not semisimple: no complement".into(),
                    )
                })?;
                // complement = ker(pi)
                let comp = proj.kernel_basis();
                let sub_frame = ech.mul(&frame);
                let comp_frame = comp.mul(&frame);
                let (sub_m, _) = cur.submodule(&ech);
                let (comp_m, _) = cur.submodule(&comp);
                stack.push((sub_m, sub_frame));
                stack.push((comp_m, comp_frame));
            }
        }
    }
    Ok(out)
}

/// Solve for an A-equivariant idempotent `pi : M -> M` with image the row
/// space of `sub` (reduced echelon rows) and `pi|_sub = id`.
fn equivariant_projection(m: &ModuleRep, sub: &Matrix) -> Option<Matrix> {
    let f = m.algebra.field().clone();
    let d = m.dim;
    let r = sub.rows();
    // unknown: pi = sub^T * c where c is r x d (image constrained to sub);
    // conditions: c * sub^T = id_r (pi fixes sub) and equivariance
    // pi rho(b) = rho(b) pi for all b.
    // unknowns: c[i][j], i in 0..r, j in 0..d
    let mut rows: Vec<Vec<u16>> = Vec::new();
    let mut rhs: Vec<u16> = Vec::new();
    // c * sub^T = id_r
    for i in 0..r {
        for k in 0..r {
            let mut row = vec![0u16; r * d];
            for j in 0..d {
                let v = sub.get(k, j);
                if v != 0 {
                    row[i * d + j] = v;
                }
            }
            rows.push(row);
            rhs.push(u16::from(i == k));
        }
    }
    // equivariance: for each b: sub^T c rho(b) = rho(b) sub^T c
    // entry (x, y): sum_j sub[i][x]? -- expand pi = sum_i sub_row_i^T (x) c_row_i
    // pi[x][y] = sum_i sub[i][x] * c[i][y]
    for b in 0..m.algebra.dim() {
        let rho = &m.action[b];
        for x in 0..d {
            for y in 0..d {
                // (pi rho)[x][y] - (rho pi)[x][y] = 0
                let mut row = vec![0u16; r * d];
                // (pi rho)[x][y] = sum_k pi[x][k] rho[k][y] = sum_{i,k} sub[i][x] c[i][k] rho[k][y]
                for i in 0..r {
                    let sx = sub.get(i, x);
                    if sx == 0 {
                        continue;
                    }
                    for k in 0..d {
                        let v = rho.get(k, y);
                        if v != 0 {
                            row[i * d + k] = f.add(row[i * d + k], f.mul(sx, v));
                        }
                    }
                }
                // (rho pi)[x][y] = sum_k rho[x][k] pi[k][y] = sum_{k,i} rho[x][k] sub[i][k] c[i][y]
                for k in 0..d {
                    let rv = rho.get(x, k);
                    if rv == 0 {
                        continue;
                    }
                    for i in 0..r {
                        let sv = sub.get(i, k);
                        if sv != 0 {
                            row[i * d + y] = f.sub(row[i * d + y], f.mul(rv, sv));
                        }
                    }
                }
                if row.iter().any(|&v| v != 0) {
                    rows.push(row);
                    rhs.push(0);
                }
            }
        }
    }
    let a = Matrix::from_rows(f.clone(), rows);
    let b = Matrix::col_vec(f.clone(), &rhs);
    let sol = gf_core::solve_linear(&a, &b).ok()?;
    // pi = sub^T c : d x d
    let mut c = Matrix::zeros(f.clone(), r, d);
    for i in 0..r {
        for j in 0..d {
            c.set(i, j, sol.particular.get(i * d + j, 0));
        }
    }
    Some(c) // return c, caller builds pi implicitly: ker(pi) = ker(c) here
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{to_sparse, Algebra};
    use gf_core::Field;

    /// k[t]/(t^3) over F_3.
    fn truncated() -> crate::algebra::AlgebraRef {
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
        Algebra::build(
            f,
            vec!["1".into(), "t".into(), "t2".into()],
            mult,
            vec![1, 0, 0],
            Some(vec![1, 0, 0]),
        )
        .unwrap()
    }

    #[test]
    fn regular_module_of_local_algebra_has_unique_simple() {
        let a = truncated();
        let reg = ModuleRep::regular(&a);
        let mut rng = SplitMix64::new(1);
        let factors = composition_factors(&reg, &mut rng).unwrap();
        assert_eq!(factors.len(), 3);
        assert!(factors.iter().all(|s| s.dim == 1));
    }

    #[test]
    fn matrix_algebra_regular_module() {
        // M_2(F_3): regular module = S^2 with S of dimension 2
        let f = Field::new(3, 1).unwrap();
        // basis e11, e12, e21, e22
        let idx = |i: usize, j: usize| i * 2 + j;
        let mut mult = vec![vec![0u16; 4]; 16];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        if j == k {
                            mult[idx(i, j) * 4 + idx(k, l)][idx(i, l)] = 1;
                        }
                    }
                }
            }
        }
        let a = Algebra::build(
            f,
            vec!["e11".into(), "e12".into(), "e21".into(), "e22".into()],
            mult.iter().map(|r| to_sparse(r)).collect(),
            vec![1, 0, 0, 1],
            None,
        )
        .unwrap();
        let reg = ModuleRep::regular(&a);
        let mut rng = SplitMix64::new(2);
        let factors = composition_factors(&reg, &mut rng).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|s| s.dim == 2));
        assert!(modules_isomorphic(&factors[0], &factors[1], &mut rng));
    }
}
