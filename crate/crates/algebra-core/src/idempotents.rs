//! Simple tops and projective indecomposables via primitive idempotent
//! lifting.

use gf_core::{Matrix, SplitMix64};

use crate::algebra::AlgebraRef;
use crate::error::AlgebraError;
use crate::meataxe::{modules_isomorphic, split_semisimple};
use crate::module::ModuleRep;
use crate::radical::RadicalData;

const LIFT_CAP: usize = 64;

/// One simple module with its multiplicity in `A/rad(A)`.
#[derive(Clone, Debug)]
pub struct SimpleBlock {
    pub module: ModuleRep,
    pub multiplicity: usize,
    /// Dimension of the endomorphism field of the simple.
    pub endo_dim: usize,
}

/// Projective indecomposables with their cover data.
#[derive(Clone)]
pub struct Pims {
    /// Primitive orthogonal idempotents of A, one per isomorphism class of
    /// simple, summing to 1 only when every multiplicity is one; the lift
    /// keeps one representative per class.
    pub idempotents: Vec<Vec<u16>>,
    /// `P_i = A e_i` as modules with their ambient bases (rows in A).
    pub modules: Vec<ModuleRep>,
    pub bases: Vec<Matrix>,
    pub simples: Vec<SimpleBlock>,
}

/// Decompose `A/rad(A)` into simple modules with multiplicities.
///
/// Local algebras short-circuit to the one-dimensional augmentation module.
pub fn simple_tops(
    a: &AlgebraRef,
    rad: &RadicalData,
    seed: u64,
) -> Result<Vec<SimpleBlock>, AlgebraError> {
    if rad.is_local {
        let module = if a.augmentation().is_some() {
            ModuleRep::trivial(a)
        } else {
            // quotient by the radical is one-dimensional
            let reg = ModuleRep::regular(a);
            reg.quotient(&rad.basis).0
        };
        return Ok(vec![SimpleBlock {
            module,
            multiplicity: 1,
            endo_dim: 1,
        }]);
    }
    let mut rng = SplitMix64::new(seed);
    let reg = ModuleRep::regular(a);
    let (top, _) = reg.quotient(&rad.basis);
    let factors = crate::meataxe::composition_factors(&top, &mut rng)?;
    let mut blocks: Vec<SimpleBlock> = Vec::new();
    for s in factors {
        if let Some(b) = blocks
            .iter_mut()
            .find(|b| modules_isomorphic(&b.module, &s, &mut rng))
        {
            // count occurrences; multiplicity fixed below
            b.multiplicity += 1;
        } else {
            let endo_dim = s.hom_dim(&s);
            blocks.push(SimpleBlock {
                module: s,
                multiplicity: 1,
                endo_dim,
            });
        }
    }
    blocks.sort_by_key(|b| b.module.dim);
    // occurrences in the regular module of A/rad equal n_i * (endo-degree
    // adjusted); the Wedderburn multiplicity is dim S / endo_dim
    for b in &mut blocks {
        let wedderburn = b.module.dim / b.endo_dim;
        debug_assert_eq!(b.multiplicity, wedderburn);
        b.multiplicity = wedderburn;
    }
    let total: usize = blocks
        .iter()
        .map(|b| b.multiplicity * b.module.dim)
        .sum();
    if total + rad.basis.rows() != a.dim() {
        return Err(AlgebraError::DecompositionFailed(0, seed));
    }
    Ok(blocks)
}

/// Projective indecomposable modules: lift primitive idempotents of
/// `A/rad(A)` along `A -> A/rad(A)` using the iteration `e <- 3e^2 - 2e^3`,
/// then take `P_i = A e_i`.
pub fn pims(a: &AlgebraRef, rad: &RadicalData, seed: u64) -> Result<Pims, AlgebraError> {
    let f = a.field().clone();
    if rad.is_local {
        let simples = simple_tops(a, rad, seed)?;
        let reg = ModuleRep::regular(a);
        return Ok(Pims {
            idempotents: vec![a.unit().to_vec()],
            modules: vec![reg],
            bases: vec![Matrix::identity(f, a.dim())],
            simples,
        });
    }
    let simples = simple_tops(a, rad, seed)?;
    let mut rng = SplitMix64::new(seed ^ 0x1DE0);
    // top algebra as a module over A (regular module mod radical)
    let reg = ModuleRep::regular(a);
    let (top, proj) = reg.quotient(&rad.basis);
    // decompose top into simple summands; bases are rows in top coordinates
    let summands = split_semisimple(&top, &mut rng)?;
    // unit of A in top coordinates
    let unit_top = proj.apply(a.unit());
    // idempotent components: e_s = component of 1 in each summand
    let all_rows: Vec<Matrix> = summands.clone();
    let stacked = {
        let mut acc: Option<Matrix> = None;
        for s in &all_rows {
            acc = Some(match acc {
                None => s.clone(),
                Some(m) => m.vstack(s),
            });
        }
        acc.expect("top algebra must be nonzero")
    };
    // solve x * stacked = unit_top: coordinates of 1 across the summand bases
    let coords = {
        let sol = gf_core::solve_linear(
            &stacked.transpose(),
            &Matrix::col_vec(f.clone(), &unit_top),
        )
        .map_err(|_| AlgebraError::DecompositionFailed(0, seed))?;
        sol.particular
    };
    // group components by summand and lift one idempotent per simple class
    let mut lifted: Vec<(usize, Vec<u16>)> = Vec::new(); // (simple class index, idempotent)
    let mut offset = 0;
    // residual idempotent corner: g = 1 - sum of previously lifted
    let mut g = a.unit().to_vec();
    for s in &all_rows {
        let rows = s.rows();
        // component of 1 in this summand, in top coordinates
        let mut comp_top = vec![0u16; top.dim];
        for r in 0..rows {
            let c = coords.get(offset + r, 0);
            if c != 0 {
                for (x, &b) in comp_top.iter_mut().zip(s.row(r)) {
                    *x = f.add(*x, f.mul(c, b));
                }
            }
        }
        offset += rows;
        if comp_top.iter().all(|&x| x == 0) {
            continue;
        }
        // identify which simple class this summand belongs to
        let (sub, _) = top.submodule(s);
        let class = simples
            .iter()
            .position(|b| modules_isomorphic(&b.module, &sub, &mut rng))
            .ok_or(AlgebraError::DecompositionFailed(0, seed))?;
        if lifted.iter().any(|(c, _)| *c == class) {
            continue; // one representative per class
        }
        // preimage in A of the component, squeezed into the corner gAg
        let pre = preimage_mod_radical(a, rad, &proj, &comp_top)?;
        let corner = a.multiply(&a.multiply(&g, &pre), &g);
        let e = lift_idempotent(a, &corner)?;
        // g <- g - e keeps later lifts orthogonal to e
        let ge: Vec<u16> = g
            .iter()
            .zip(&e)
            .map(|(&x, &y)| f.sub(x, y))
            .collect();
        g = ge;
        lifted.push((class, e));
    }
    if lifted.len() != simples.len() {
        return Err(AlgebraError::DecompositionFailed(lifted.len(), seed));
    }
    lifted.sort_by_key(|(c, _)| *c);
    // P_i = A e_i
    let mut modules = Vec::new();
    let mut bases = Vec::new();
    let mut idems = Vec::new();
    for (_, e) in &lifted {
        let re = a.right_mult_matrix(e); // column j = b_j * e
        let span = re.transpose(); // rows = b_j * e
        let (m, basis) = reg.submodule(&span);
        modules.push(m);
        bases.push(basis);
        idems.push(e.clone());
    }
    // dimension bookkeeping: sum over classes of mult * dim P = dim A
    let total: usize = modules
        .iter()
        .zip(&simples)
        .map(|(p, s)| p.dim * s.multiplicity)
        .sum();
    if total != a.dim() {
        return Err(AlgebraError::DecompositionFailed(total, seed));
    }
    Ok(Pims {
        idempotents: idems,
        modules,
        bases,
        simples,
    })
}

/// A preimage under `A -> A/rad` of a top element.
fn preimage_mod_radical(
    a: &AlgebraRef,
    _rad: &RadicalData,
    proj: &Matrix,
    top_elem: &[u16],
) -> Result<Vec<u16>, AlgebraError> {
    let sol = gf_core::solve_linear(proj, &Matrix::col_vec(a.field().clone(), top_elem))
        .map_err(|_| AlgebraError::Shape("projection must be surjective".into()))?;
    let mut v = vec![0u16; a.dim()];
    for i in 0..a.dim() {
        v[i] = sol.particular.get(i, 0);
    }
    Ok(v)
}

/// Iterate `e <- 3e^2 - 2e^3` until exactly idempotent.
pub fn lift_idempotent(a: &AlgebraRef, start: &[u16]) -> Result<Vec<u16>, AlgebraError> {
    let f = a.field().clone();
    let mut e = start.to_vec();
    for _ in 0..LIFT_CAP {
        let e2 = a.multiply(&e, &e);
        if e2 == e {
            return Ok(e);
        }
        let e3 = a.multiply(&e2, &e);
        let three = f.add(1, f.add(1, 1));
        let two = f.add(1, 1);
        let mut next = vec![0u16; a.dim()];
        for i in 0..a.dim() {
            next[i] = f.sub(f.mul(three, e2[i]), f.mul(two, e3[i]));
        }
        e = next;
    }
    Err(AlgebraError::LiftDiverged)
}


/// Multiplicities of each simple block inside a semisimple module `top`.
pub fn isotypic_multiplicities(simples: &[SimpleBlock], top: &ModuleRep) -> Vec<usize> {
    simples
        .iter()
        .map(|s| {
            let h = top.hom_dim(&s.module);
            debug_assert_eq!(h % s.endo_dim, 0);
            h / s.endo_dim
        })
        .collect()
}

