//! Minimal projective resolutions by iterated projective covers,
//! `0 <- M <- P_0 <- P_1 <- ...` with `Omega^{i+1} = ker(P_i -> Omega^i)`.
//!
//! The recursion works in ambient coordinates: each syzygy is carried as a
//! reduced-echelon row space inside its covering projective, and actions are
//! applied blockwise through the PIM action matrices, so no syzygy module is
//! materialized unless a caller asks for it.

use gf_core::Matrix;

use crate::algebra::AlgebraRef;
use crate::error::AlgebraError;
use crate::idempotents::Pims;
use crate::module::ModuleRep;
use crate::radical::RadicalData;

/// Hard cap on resolution depth.
pub const DEPTH_CAP: usize = 12;

/// One projective-cover step `P -> N`, in the coordinates of the module `N`
/// being covered (for step 0 that is `M` itself; for step `i >= 1` it is the
/// ambient `P_{i-1}`).
#[derive(Clone)]
pub struct CoverStep {
    /// PIM class of each generator block, in order.
    pub summands: Vec<usize>,
    /// Generator target vectors in `N`-coordinates.
    pub generators: Vec<(usize, Vec<u16>)>,
    /// The cover map with target in `N`-coordinates:
    /// `(dim N-ambient) x (dim P)`. For `i >= 1` this is the differential
    /// `P_i -> P_{i-1}`.
    pub ambient_map: Matrix,
    /// Reduced-echelon basis of `ker(P -> N)` inside `P` (rows): the next
    /// syzygy.
    pub kernel: Matrix,
    /// Dimension of `P`.
    pub p_dim: usize,
}

/// Minimal resolution data of a module to a fixed depth.
#[derive(Clone)]
pub struct ResolutionData {
    pub depth: usize,
    /// `betti[i] = dim_k top(Omega^i)`, `i = 0..=depth`.
    pub betti: Vec<usize>,
    /// `steps[i]` covers `Omega^i`.
    pub steps: Vec<CoverStep>,
    /// The resolved module.
    pub module: ModuleRep,
}

impl ResolutionData {
    /// Dimension of `Omega^i` (`Omega^0 = M`).
    pub fn syzygy_dim(&self, i: usize) -> usize {
        if i == 0 {
            self.module.dim
        } else {
            self.steps[i - 1].kernel.rows()
        }
    }

    /// Materialize `Omega^i` as a module (`i >= 1`: submodule of `P_{i-1}`
    /// on the kernel rows). Cost grows with the projective dimension; the
    /// resolution itself never calls this.
    pub fn syzygy_module(&self, pims: &Pims, i: usize) -> ModuleRep {
        if i == 0 {
            return self.module.clone();
        }
        let step = &self.steps[i - 1];
        let p_mod = projective_module(pims, &step.summands);
        let (sub, _) = p_mod.submodule(&step.kernel);
        sub
    }

    /// The covering projective of `Omega^i` as a module.
    pub fn projective(&self, pims: &Pims, i: usize) -> ModuleRep {
        projective_module(pims, &self.steps[i].summands)
    }

    /// Cover map `P_i -> Omega^i` expressed in the syzygy's own (kernel
    /// row) coordinates; `i >= 1`.
    pub fn cover_map_syzygy_coords(&self, i: usize) -> Matrix {
        assert!(i >= 1);
        let step = &self.steps[i];
        let kernel = &self.steps[i - 1].kernel;
        let pivots: Vec<usize> = (0..kernel.rows())
            .map(|r| kernel.row(r).iter().position(|&x| x != 0).unwrap())
            .collect();
        crate::module::coords_in_basis(&step.ambient_map.transpose(), kernel, &pivots).transpose()
    }
}

/// Direct sum of PIM modules for a summand list.
pub fn projective_module(pims: &Pims, summands: &[usize]) -> ModuleRep {
    let mut acc: Option<ModuleRep> = None;
    for &j in summands {
        let p = pims.modules[j].clone();
        acc = Some(match acc {
            None => p,
            Some(q) => q.direct_sum(&p),
        });
    }
    acc.expect("projective cover has at least one summand")
}

/// Apply an algebra basis element to an ambient vector of `P = (+) P_{j_t}`
/// blockwise.
fn block_apply_basis(
    pims: &Pims,
    summands: &[usize],
    basis: usize,
    v: &[u16],
) -> Vec<u16> {
    let mut out = vec![0u16; v.len()];
    let mut off = 0;
    for &j in summands {
        let d = pims.modules[j].dim;
        let img = pims.modules[j].action[basis].apply(&v[off..off + d]);
        out[off..off + d].copy_from_slice(&img);
        off += d;
    }
    out
}

/// Incremental reduced-echelon accumulator.
struct Echelon {
    rows: Vec<Vec<u16>>,
    pivots: Vec<usize>,
    field: gf_core::FieldRef,
}

impl Echelon {
    fn new(field: gf_core::FieldRef) -> Echelon {
        Echelon {
            rows: Vec::new(),
            pivots: Vec::new(),
            field,
        }
    }

    fn reduce(&self, v: &mut Vec<u16>) {
        let f = &self.field;
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = v[p];
            if c != 0 {
                for (x, &e) in v.iter_mut().zip(row) {
                    if e != 0 {
                        *x = f.sub(*x, f.mul(c, e));
                    }
                }
            }
        }
    }

    /// Insert a vector; returns true if the span grew.
    fn insert(&mut self, mut v: Vec<u16>) -> bool {
        let f = self.field.clone();
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        if inv != 1 {
            for x in v.iter_mut() {
                if *x != 0 {
                    *x = f.mul(*x, inv);
                }
            }
        }
        for row in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, &e) in row.iter_mut().zip(&v) {
                    if e != 0 {
                        *x = f.sub(*x, f.mul(c, e));
                    }
                }
            }
        }
        self.rows.push(v);
        self.pivots.push(p);
        true
    }

    fn contains(&self, v: &[u16]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

/// Internal view of the module being covered, in ambient coordinates.
enum Target<'a> {
    Module(&'a ModuleRep),
    /// Syzygy: kernel rows inside a projective with the given summand list.
    Syzygy {
        rows: &'a Matrix,
        summands: &'a [usize],
    },
}

impl Target<'_> {
    fn ambient_dim(&self) -> usize {
        match self {
            Target::Module(m) => m.dim,
            Target::Syzygy { rows, .. } => rows.cols(),
        }
    }

    fn dim(&self) -> usize {
        match self {
            Target::Module(m) => m.dim,
            Target::Syzygy { rows, .. } => rows.rows(),
        }
    }

    fn basis_rows(&self) -> Vec<Vec<u16>> {
        match self {
            Target::Module(m) => (0..m.dim)
                .map(|i| {
                    let mut v = vec![0u16; m.dim];
                    v[i] = 1;
                    v
                })
                .collect(),
            Target::Syzygy { rows, .. } => (0..rows.rows()).map(|i| rows.row(i).to_vec()).collect(),
        }
    }

    fn apply_basis(&self, pims: &Pims, basis: usize, v: &[u16]) -> Vec<u16> {
        match self {
            Target::Module(m) => m.action[basis].apply(v),
            Target::Syzygy { summands, .. } => block_apply_basis(pims, summands, basis, v),
        }
    }

    fn apply_element(&self, pims: &Pims, elem: &[u16], v: &[u16]) -> Vec<u16> {
        let f = match self {
            Target::Module(m) => m.algebra.field().clone(),
            Target::Syzygy { rows, .. } => rows.field().clone(),
        };
        let mut out = vec![0u16; v.len()];
        for (b, &c) in elem.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let img = self.apply_basis(pims, b, v);
            for (o, &x) in out.iter_mut().zip(&img) {
                if x != 0 {
                    *o = f.add(*o, f.mul(c, x));
                }
            }
        }
        out
    }
}

/// Compute the minimal resolution of `m` to the given depth. Minimality
/// (each syzygy lies inside `rad P`) is verified at every step.
pub fn minimal_resolution(
    a: &AlgebraRef,
    rad: &RadicalData,
    pims: &Pims,
    m: &ModuleRep,
    depth: usize,
) -> Result<ResolutionData, AlgebraError> {
    if depth > DEPTH_CAP {
        return Err(AlgebraError::DepthBudgetExceeded(depth, DEPTH_CAP));
    }
    let mut betti = Vec::with_capacity(depth + 1);
    let mut steps: Vec<CoverStep> = Vec::new();
    for i in 0..=depth {
        let step = if i == 0 {
            cover_step(a, rad, pims, &Target::Module(m))?
        } else {
            let prev = &steps[i - 1];
            let target = Target::Syzygy {
                rows: &prev.kernel,
                summands: &prev.summands,
            };
            cover_step(a, rad, pims, &target)?
        };
        let b: usize = step
            .summands
            .iter()
            .map(|&j| pims.simples[j].module.dim)
            .sum();
        betti.push(b);
        // minimality: the kernel (next syzygy) must lie inside rad P
        if step.kernel.rows() > 0 {
            let mut rad_p = Echelon::new(a.field().clone());
            for ri in 0..rad.basis.rows() {
                for t in 0..step.p_dim {
                    let mut unit_vec = vec![0u16; step.p_dim];
                    unit_vec[t] = 1;
                    let img = block_apply_element(pims, &step.summands, rad.basis.row(ri), &unit_vec);
                    rad_p.insert(img);
                }
            }
            for kr in 0..step.kernel.rows() {
                if !rad_p.contains(step.kernel.row(kr)) {
                    return Err(AlgebraError::RadicalNotComputable(
                        "cover is not minimal: syzygy escapes rad P".into(),
                    ));
                }
            }
        }
        steps.push(step);
    }
    Ok(ResolutionData {
        depth,
        betti,
        steps,
        module: m.clone(),
    })
}

fn block_apply_element(pims: &Pims, summands: &[usize], elem: &[u16], v: &[u16]) -> Vec<u16> {
    let f = pims.modules[0].algebra.field().clone();
    let mut out = vec![0u16; v.len()];
    for (b, &c) in elem.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let img = block_apply_basis(pims, summands, b, v);
        for (o, &x) in out.iter_mut().zip(&img) {
            if x != 0 {
                *o = f.add(*o, f.mul(c, x));
            }
        }
    }
    out
}

/// One minimal projective cover step in ambient coordinates.
fn cover_step(
    a: &AlgebraRef,
    rad: &RadicalData,
    pims: &Pims,
    target: &Target<'_>,
) -> Result<CoverStep, AlgebraError> {
    let f = a.field().clone();
    let ambient = target.ambient_dim();
    let n_dim = target.dim();
    if n_dim == 0 {
        return Ok(CoverStep {
            summands: vec![],
            generators: vec![],
            ambient_map: Matrix::zeros(f.clone(), ambient, 0),
            kernel: Matrix::zeros(f, 0, 0),
            p_dim: 0,
        });
    }
    let basis_rows = target.basis_rows();
    // rad . N: products of the radical basis with the N basis
    let mut covered = Echelon::new(f.clone());
    for ri in 0..rad.basis.rows() {
        for v in &basis_rows {
            let img = target.apply_element(pims, rad.basis.row(ri), v);
            covered.insert(img);
        }
    }
    let top_dim = n_dim - covered.len();
    // greedy generator selection from e_j . N
    let mut generators: Vec<(usize, Vec<u16>)> = Vec::new();
    let mut top_covered = 0usize;
    'outer: for (j, e) in pims.idempotents.iter().enumerate() {
        if top_covered == top_dim {
            break;
        }
        for v in &basis_rows {
            if top_covered == top_dim {
                break 'outer;
            }
            let cand = target.apply_element(pims, e, v);
            if cand.iter().all(|&x| x == 0) || covered.contains(&cand) {
                continue;
            }
            // accept; close under the algebra action
            generators.push((j, cand.clone()));
            top_covered += pims.simples[j].module.dim;
            let mut queue = vec![cand];
            while let Some(w) = queue.pop() {
                for b in 0..a.dim() {
                    let img = target.apply_basis(pims, b, &w);
                    if covered.insert(img.clone()) {
                        queue.push(img);
                    }
                }
            }
        }
    }
    if top_covered != top_dim || covered.len() != n_dim {
        return Err(AlgebraError::RadicalNotComputable(format!(
            "cover generation incomplete: top covered {top_covered}/{top_dim}, span {}/{}",
            covered.len(),
            n_dim
        )));
    }
    let summands: Vec<usize> = generators.iter().map(|&(j, _)| j).collect();
    let p_dim: usize = summands.iter().map(|&j| pims.modules[j].dim).sum();
    // ambient cover map: column (t, pb) = (pim basis element pb) . v_t
    let mut ambient_map = Matrix::zeros(f.clone(), ambient, p_dim);
    let mut off = 0;
    for (j, v) in &generators {
        let basis = &pims.bases[*j];
        for pb in 0..basis.rows() {
            let img = target.apply_element(pims, basis.row(pb), v);
            for (rix, &val) in img.iter().enumerate() {
                if val != 0 {
                    ambient_map.set(rix, off + pb, val);
                }
            }
        }
        off += basis.rows();
    }
    let kernel = ambient_map.kernel_basis();
    Ok(CoverStep {
        summands,
        generators,
        ambient_map,
        kernel,
        p_dim,
    })
}

/// Minimal projective cover of a module, exposed for syzygy construction.
pub fn projective_cover(
    a: &AlgebraRef,
    rad: &RadicalData,
    pims: &Pims,
    m: &ModuleRep,
) -> Result<CoverStep, AlgebraError> {
    cover_step(a, rad, pims, &Target::Module(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{to_sparse, Algebra};
    use crate::idempotents::pims;
    use crate::radical::radical;
    use gf_core::Field;

    fn truncated(p: u16) -> AlgebraRef {
        let f = Field::new(p, 1).unwrap();
        let dim = p as usize;
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
        let mut unit = vec![0u16; dim];
        unit[0] = 1;
        let mut eps = vec![0u16; dim];
        eps[0] = 1;
        Algebra::build(
            f,
            (0..dim).map(|i| format!("t{i}")).collect(),
            mult,
            unit,
            Some(eps),
        )
        .unwrap()
    }

    #[test]
    fn periodic_resolution_over_truncated_polynomials() {
        let a = truncated(3);
        let rad = radical(&a).unwrap();
        let p = pims(&a, &rad, 7).unwrap();
        let k = ModuleRep::trivial(&a);
        let res = minimal_resolution(&a, &rad, &p, &k, 6).unwrap();
        assert_eq!(res.betti, vec![1; 7]);
        assert_eq!(res.syzygy_dim(1), 2);
        assert_eq!(res.syzygy_dim(2), 1);
        assert_eq!(res.syzygy_dim(3), 2);
        // materialized syzygy agrees
        let omega2 = res.syzygy_module(&p, 2);
        assert_eq!(omega2.dim, 1);
    }

    #[test]
    fn projective_module_has_trivial_resolution() {
        let a = truncated(3);
        let rad = radical(&a).unwrap();
        let p = pims(&a, &rad, 7).unwrap();
        let reg = ModuleRep::regular(&a);
        let res = minimal_resolution(&a, &rad, &p, &reg, 2).unwrap();
        assert_eq!(res.betti, vec![1, 0, 0]);
    }

    #[test]
    fn kunneth_betti_numbers_for_tensor_square() {
        let a3 = truncated(3);
        let aa = Algebra::tensor_product(&a3, &a3).unwrap();
        let rad = radical(&aa).unwrap();
        let p = pims(&aa, &rad, 7).unwrap();
        let k = ModuleRep::trivial(&aa);
        let res = minimal_resolution(&aa, &rad, &p, &k, 6).unwrap();
        let single = [1usize; 7];
        let convolved: Vec<usize> = (0..7)
            .map(|i| (0..=i).map(|j| single[j] * single[i - j]).sum())
            .collect();
        assert_eq!(res.betti, convolved);
        assert_eq!(res.betti, vec![1, 2, 3, 4, 5, 6, 7]);
    }
}
