//! Truncated Ext-ring machinery over local algebras: Betti numbers, Yoneda
//! products of degree-2 cocycles by chain-map lifting through the minimal
//! resolution, Ext(k, V) module tables, and the diagnostic cohomological
//! support point set.

use std::collections::HashMap;

use algebra_core::{
    coords_in_basis, hom_basis, minimal_resolution, pims, radical, AlgebraRef, ModuleRep, Pims,
    RadicalData, ResolutionData,
};
use gf_core::{solve_linear, Field, FieldRef, Matrix};

use crate::error::SupportError;

/// Truncated Ext data over a local algebra.
pub struct ExtTruncation {
    pub algebra: AlgebraRef,
    pub rad: RadicalData,
    pub pims: Pims,
    pub resolution: ResolutionData,
    pub n_max: usize,
    pub betti: Vec<usize>,
    /// `Omega^2` materialized (Carlson constructions draw from it).
    pub omega2: ModuleRep,
    /// The regular module, for blockwise free-module application.
    regular: ModuleRep,
    /// Cover maps `P_i -> Omega^i` in syzygy coordinates, `i >= 1`.
    syzygy_maps: Vec<Matrix>,
    /// Degree-2 cocycle basis: functionals on `Omega^2` (rows).
    pub deg2: Vec<Vec<u16>>,
    /// Chain lifts per degree-2 basis element: `lifts[g][j] : P_{2+j} -> P_j`.
    lifts: Vec<Vec<Matrix>>,
    /// `fbar[g][j] : Omega^{2+2j'}...` keyed as (g, source degree) ->
    /// matrix `Omega^{deg} -> Omega^{deg-2}` in syzygy coordinates.
    fbar: HashMap<(usize, usize), Matrix>,
    /// Registered modules: tables for Ext(k, V).
    pub modules: Vec<ExtModuleTable>,
}

/// Tables for `Ext*(k, V)` within the window.
pub struct ExtModuleTable {
    pub name: String,
    pub module: ModuleRep,
    /// Cocycle space (rows) at each degree `i`.
    pub cocycles: Vec<Matrix>,
    /// Coboundary space (rows, subspace of cocycles' ambient) at each degree.
    pub coboundaries: Vec<Matrix>,
    /// Cohomology dimensions.
    pub h_dims: Vec<usize>,
    /// Action of each degree-2 generator: matrices `C^i -> C^{i+2}` on the
    /// generator-value coordinates.
    pub gen_actions: Vec<Vec<Matrix>>,
}

/// Build the truncation, registering the given modules.
pub fn ext_truncation(
    algebra: &AlgebraRef,
    n_max: usize,
    register: &[(String, ModuleRep)],
) -> Result<ExtTruncation, SupportError> {
    if n_max > algebra_core::DEPTH_CAP {
        return Err(SupportError::DepthBudgetExceeded);
    }
    let rad = radical(algebra)?;
    assert!(rad.is_local, "Ext truncation requires a local algebra");
    let pims_a = pims(algebra, &rad, 0xE77)?;
    let trivial = ModuleRep::trivial(algebra);
    let resolution = minimal_resolution(algebra, &rad, &pims_a, &trivial, n_max)?;
    let betti = resolution.betti.clone();
    // degree-2 cocycles: functionals on Omega^2 killing rad Omega^2
    let omega2 = resolution.syzygy_module(&pims_a, 2);
    let deg2: Vec<Vec<u16>> = hom_basis(&omega2, &trivial)
        .into_iter()
        .map(|m| m.row(0).to_vec())
        .collect();
    let regular = ModuleRep::regular(algebra);
    let syzygy_maps: Vec<Matrix> = (1..=n_max)
        .map(|i| resolution.cover_map_syzygy_coords(i))
        .collect();
    let mut trunc = ExtTruncation {
        algebra: algebra.clone(),
        rad,
        pims: pims_a,
        resolution,
        n_max,
        betti,
        omega2,
        regular,
        syzygy_maps,
        deg2,
        lifts: Vec::new(),
        fbar: HashMap::new(),
        modules: Vec::new(),
    };
    let gens = trunc.deg2.clone();
    for zeta in &gens {
        let chain = trunc.lift_cocycle(2, zeta)?;
        trunc.lifts.push(chain);
    }
    // restricted chain maps on syzygies
    for g in 0..trunc.deg2.len() {
        for deg in (2..=trunc.n_max).step_by(1) {
            if deg < 2 {
                continue;
            }
            let target = deg - 2;
            if target == 0 || deg > trunc.n_max {
                continue;
            }
            let m = trunc.restrict_lift(g, deg)?;
            trunc.fbar.insert((g, deg), m);
        }
    }
    for (name, module) in register {
        let table = trunc.module_table(name.clone(), module.clone())?;
        trunc.modules.push(table);
    }
    Ok(trunc)
}

impl ExtTruncation {
    pub fn field(&self) -> &FieldRef {
        self.algebra.field()
    }

    /// dim of the free cover at degree `i` (local algebra: `b_i` copies).
    fn p_dim(&self, i: usize) -> usize {
        self.resolution.steps[i].p_dim
    }

    /// Differential `d_{i} : P_i -> P_{i-1}` in ambient coordinates.
    fn differential(&self, i: usize) -> &Matrix {
        &self.resolution.steps[i].ambient_map
    }

    /// Cover map `P_i -> Omega^i` in syzygy coordinates (`i >= 1`).
    fn syzygy_map(&self, i: usize) -> &Matrix {
        &self.syzygy_maps[i - 1]
    }

    /// Blockwise application of an algebra basis element to a free-module
    /// vector (b_i copies of the regular module).
    fn free_apply(&self, basis: usize, v: &[u16]) -> Vec<u16> {
        let n = self.algebra.dim();
        let mut out = vec![0u16; v.len()];
        for (chunk_o, chunk_i) in out.chunks_mut(n).zip(v.chunks(n)) {
            let img = self.regular.action[basis].apply(chunk_i);
            chunk_o.copy_from_slice(&img);
        }
        out
    }

    /// Generator element (block `t`) of the free module `P_i`.
    fn generator_vector(&self, i: usize, t: usize) -> Vec<u16> {
        let n = self.algebra.dim();
        let mut v = vec![0u16; self.p_dim(i)];
        for (s, &u) in self.algebra.unit().iter().enumerate() {
            if u != 0 {
                v[t * n + s] = u;
            }
        }
        v
    }

    /// Number of generators (blocks) of `P_i`.
    fn blocks(&self, i: usize) -> usize {
        self.resolution.steps[i].generators.len()
    }

    /// Lift a cocycle `zeta` on `Omega^m` to a chain of maps
    /// `f_j : P_{m+j} -> P_j`, `j = 0 ..= n_max - m`.
    fn lift_cocycle(&self, m: usize, zeta: &[u16]) -> Result<Vec<Matrix>, SupportError> {
        let f = self.field().clone();
        let n = self.algebra.dim();
        let mut chain: Vec<Matrix> = Vec::new();
        // g_0 : P_m -> k  as a 1 x dim P_m row
        let zrow = Matrix::row_vec(f.clone(), zeta);
        let g0 = zrow.mul(self.syzygy_map(m));
        // f_0 generator images: map0 . v_t = g0(e_t)
        let map0 = &self.resolution.steps[0].ambient_map; // P_0 -> k (1 x dim P_0)
        let b_m = self.blocks(m);
        let mut rhs0 = Matrix::zeros(f.clone(), 1, b_m);
        for t in 0..b_m {
            let et = self.generator_vector(m, t);
            let val = g0.apply(&et)[0];
            rhs0.set(0, t, val);
        }
        let sol0 = solve_linear(map0, &rhs0).map_err(algebra_core::AlgebraError::from)?;
        let mut f0 = Matrix::zeros(f.clone(), self.p_dim(0), self.p_dim(m));
        for t in 0..b_m {
            let mut vt = Vec::with_capacity(self.p_dim(0));
            for rix in 0..self.p_dim(0) {
                vt.push(sol0.particular.get(rix, t));
            }
            for pb in 0..n {
                let img = self.free_apply(pb, &vt);
                for (rix, &v) in img.iter().enumerate() {
                    if v != 0 {
                        f0.set(rix, t * n + pb, v);
                    }
                }
            }
        }
        debug_assert_eq!(map0.mul(&f0), g0, "f0 lifting failed");
        chain.push(f0);
        // higher steps: d_{j+1} . f_{j+1} = f_j . d_{m+j+1}
        let mut j = 0usize;
        while m + j + 1 <= self.n_max {
            let tau = chain[j].mul(self.differential(m + j + 1));
            let d_next = self.differential(j + 1).clone();
            let b = self.blocks(m + j + 1);
            let mut rhs = Matrix::zeros(f.clone(), d_next.rows(), b);
            for t in 0..b {
                let et = self.generator_vector(m + j + 1, t);
                let col = tau.apply(&et);
                for (rix, &v) in col.iter().enumerate() {
                    rhs.set(rix, t, v);
                }
            }
            let sol = solve_linear(&d_next, &rhs).map_err(algebra_core::AlgebraError::from)?;
            let mut fj = Matrix::zeros(f.clone(), self.p_dim(j + 1), self.p_dim(m + j + 1));
            for t in 0..b {
                let mut vt = Vec::with_capacity(self.p_dim(j + 1));
                for rix in 0..self.p_dim(j + 1) {
                    vt.push(sol.particular.get(rix, t));
                }
                for pb in 0..n {
                    let img = self.free_apply(pb, &vt);
                    for (rix, &v) in img.iter().enumerate() {
                        if v != 0 {
                            fj.set(rix, t * n + pb, v);
                        }
                    }
                }
            }
            // chain property must hold exactly
            debug_assert_eq!(d_next.mul(&fj), tau, "chain relation violated at j={j}");
            chain.push(fj);
            j += 1;
        }
        Ok(chain)
    }

    /// Restricted lift `Omega^{deg} -> Omega^{deg-2}` of generator `g`
    /// in syzygy coordinates (`deg >= 3`; `deg = 2` is the functional).
    fn restrict_lift(&self, g: usize, deg: usize) -> Result<Matrix, SupportError> {
        let j = deg - 2; // target syzygy degree >= 1
        let incl_src = self.resolution.steps[deg - 1].kernel.transpose(); // Omega^deg -> P_{deg-1}
        let f_prev = &self.lifts[g][j - 1]; // P_{deg-1} -> P_{j-1}
        let image = f_prev.mul(&incl_src); // lands in Omega^j inside P_{j-1}
        // express in Omega^j coordinates
        let kernel = &self.resolution.steps[j - 1].kernel;
        let pivots: Vec<usize> = (0..kernel.rows())
            .map(|r| kernel.row(r).iter().position(|&x| x != 0).unwrap())
            .collect();
        let coords = coords_in_basis(&image.transpose(), kernel, &pivots);
        Ok(coords.transpose())
    }

    /// Monomial functional on `Omega^{2d}` for a nondecreasing tuple of
    /// generator indices.
    pub fn monomial_functional(&self, indices: &[usize]) -> Vec<u16> {
        let d = indices.len();
        assert!(d >= 1 && 2 * d <= self.n_max);
        let f = self.field().clone();
        // start from the deepest factor and compose upwards
        let mut acc: Option<Matrix> = None; // Omega^{2d} -> Omega^{2k}
        for (pos, &g) in indices.iter().enumerate().skip(1).rev() {
            let deg = 2 * (pos + 1);
            let step = self.fbar.get(&(g, deg)).expect("fbar computed");
            acc = Some(match acc {
                None => step.clone(),
                Some(m) => step.mul(&m),
            });
        }
        let zeta = Matrix::row_vec(f, &self.deg2[indices[0]]);
        let total = match acc {
            None => zeta,
            Some(m) => zeta.mul(&m),
        };
        total.row(0).to_vec()
    }

    /// Tables for Ext(k, V).
    fn module_table(&self, name: String, module: ModuleRep) -> Result<ExtModuleTable, SupportError> {
        let f = self.field().clone();
        let n = self.algebra.dim();
        let dv = module.dim;
        // differentials delta^i : V^{b_i} -> V^{b_{i+1}}
        let mut deltas: Vec<Matrix> = Vec::new();
        for i in 0..self.n_max {
            let b_i = self.blocks(i);
            let b_next = self.blocks(i + 1);
            let d = self.differential(i + 1);
            let mut m = Matrix::zeros(f.clone(), dv * b_next, dv * b_i);
            for u in 0..b_next {
                let du = d.apply(&self.generator_vector(i + 1, u)); // in P_i
                // phi(du) = sum_s rho_V(component_s) v_s
                for s in 0..b_i {
                    let comp = &du[s * n..(s + 1) * n];
                    let act = module.act_element(comp);
                    for a in 0..dv {
                        for b in 0..dv {
                            let v = act.get(a, b);
                            if v != 0 {
                                m.set(u * dv + a, s * dv + b, v);
                            }
                        }
                    }
                }
            }
            deltas.push(m);
        }
        let mut cocycles = Vec::new();
        let mut coboundaries = Vec::new();
        let mut h_dims = Vec::new();
        for i in 0..=self.n_max {
            let z = if i < self.n_max {
                deltas[i].kernel_basis()
            } else {
                Matrix::identity(f.clone(), dv * self.blocks(i))
            };
            let b = if i == 0 {
                Matrix::zeros(f.clone(), 0, dv * self.blocks(0))
            } else {
                // image of delta^{i-1}: columns -> echelon rows
                let img = deltas[i - 1].transpose();
                let (ech, piv) = img.rref();
                ech.row_slice(0, piv.len())
            };
            h_dims.push(z.rows() - b.rows());
            cocycles.push(z);
            coboundaries.push(b);
        }
        // action of each degree-2 generator on coordinates
        let mut gen_actions = Vec::new();
        for g in 0..self.deg2.len() {
            let mut per_degree = Vec::new();
            for i in 0..=self.n_max.saturating_sub(2) {
                let b_i = self.blocks(i);
                let b_tgt = self.blocks(i + 2);
                let lift = &self.lifts[g][i]; // P_{2+i} -> P_i
                let mut m = Matrix::zeros(f.clone(), dv * b_tgt, dv * b_i);
                for u in 0..b_tgt {
                    let img = lift.apply(&self.generator_vector(i + 2, u)); // in P_i
                    for s in 0..b_i {
                        let comp = &img[s * n..(s + 1) * n];
                        let act = module.act_element(comp);
                        for a in 0..dv {
                            for b in 0..dv {
                                let v = act.get(a, b);
                                if v != 0 {
                                    m.set(u * dv + a, s * dv + b, v);
                                }
                            }
                        }
                    }
                }
                per_degree.push(m);
            }
            gen_actions.push(per_degree);
        }
        Ok(ExtModuleTable {
            name,
            module,
            cocycles,
            coboundaries,
            h_dims,
            gen_actions,
        })
    }

    /// All degree-`d` monomials in the degree-2 generators, as nondecreasing
    /// index tuples.
    pub fn monomials(&self, d: usize) -> Vec<Vec<usize>> {
        let m = self.deg2.len();
        let mut out = Vec::new();
        let mut cur = vec![0usize; d];
        loop {
            out.push(cur.clone());
            // next nondecreasing tuple
            let mut i = d;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if cur[i] + 1 < m {
                    cur[i] += 1;
                    for j in i + 1..d {
                        cur[j] = cur[i];
                    }
                    break;
                }
            }
        }
    }
}

/// One diagnostic cohomological support point: projectivized degree-2
/// generator coordinates over `F_{p^e}`, stored as digit vectors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct CohPoint {
    pub ext_degree: u8,
    pub coords: Vec<Vec<u16>>,
}

impl CohPoint {
    /// Whether every coordinate lies in the prime field.
    pub fn is_rational(&self) -> bool {
        self.coords.iter().all(|d| d.iter().skip(1).all(|&x| x == 0))
    }

    /// Canonical representative of the Frobenius orbit (coordinatewise
    /// `x -> x^p`), as the lexicographic minimum over the orbit.
    pub fn frobenius_orbit_rep(&self, field: &FieldRef) -> CohPoint {
        let mut best = self.coords.clone();
        let mut cur: Vec<u16> = self.coords.iter().map(|d| field.from_digits(d)).collect();
        for _ in 1..field.e() {
            cur = cur.iter().map(|&x| field.frobenius(x)).collect();
            let digs: Vec<Vec<u16>> = cur.iter().map(|&x| field.to_digits(x)).collect();
            if digs < best {
                best = digs;
            }
        }
        CohPoint {
            ext_degree: self.ext_degree,
            coords: best,
        }
    }
}

/// The diagnostic cohomological support point set of a registered module:
/// consistent `F_{p^e}`-points of the degree-2 generator coordinates at
/// which the truncated annihilator of `Ext(k, V)` vanishes.
///
/// Inconclusive when the annihilator has not stabilized across the last
/// degrees of the window (new annihilator directions keep appearing that
/// are not generated by lower-degree ones).
pub fn coh_support_points(
    trunc: &ExtTruncation,
    module_index: usize,
    e_max: u8,
) -> Result<Vec<CohPoint>, SupportError> {
    point_set(trunc, module_index, e_max, trunc.n_max)
}

fn point_set(
    trunc: &ExtTruncation,
    module_index: usize,
    e_max: u8,
    window: usize,
) -> Result<Vec<CohPoint>, SupportError> {
    let m = trunc.deg2.len();
    if m == 0 {
        return Ok(vec![]);
    }
    let table = &trunc.modules[module_index];
    let base = trunc.field().clone();
    // keep a two-step source band at the top of the window: the last
    // annihilator degree still sees cohomology in at least two degrees
    let d_max = window.saturating_sub(2) / 2;
    if d_max < 2 {
        return Err(SupportError::TruncationInconclusive(
            "window too short to stabilize the annihilator".into(),
        ));
    }
    // per degree: monomial list, functional relations, annihilator space
    let mut degree_data: Vec<(Vec<Vec<usize>>, Matrix, Matrix)> = Vec::new();
    for d in 1..=d_max {
        let monos = trunc.monomials(d);
        let rows: Vec<Vec<u16>> = monos
            .iter()
            .map(|mu| trunc.monomial_functional(mu))
            .collect();
        let functional_matrix = Matrix::from_rows(base.clone(), rows);
        let relations = functional_matrix.transpose().kernel_basis();
        let mut ann_rows: Vec<Vec<u16>> = Vec::new();
        for i in 0..=window.saturating_sub(2 * d) {
            let z = &table.cocycles[i];
            if z.rows() == 0 {
                continue;
            }
            let target_cob = &table.coboundaries[i + 2 * d];
            let q = quotient_rows(target_cob, table.cocycles[i + 2 * d].cols());
            for zr in 0..z.rows() {
                let zvec = z.row(zr).to_vec();
                let mut per_mono: Vec<Vec<u16>> = Vec::new();
                for mu in &monos {
                    let img = apply_monomial(trunc, table, mu, i, &zvec);
                    per_mono.push(q.apply(&img));
                }
                let qdim = per_mono.first().map_or(0, |v| v.len());
                for coord in 0..qdim {
                    let row: Vec<u16> = per_mono.iter().map(|v| v[coord]).collect();
                    if row.iter().any(|&x| x != 0) {
                        ann_rows.push(row);
                    }
                }
            }
        }
        let ann = if ann_rows.is_empty() {
            Matrix::identity(base.clone(), monos.len())
        } else {
            Matrix::from_rows(base.clone(), ann_rows).kernel_basis()
        };
        degree_data.push((monos, relations, ann));
    }
    // annihilator stabilization: at every degree d >= 2, the annihilator must
    // be generated by the functional relations plus generator-shifts of the
    // previous annihilator; otherwise the truncation is too short to trust
    for d in 2..=d_max {
        let (monos_d, relations_d, ann_d) = &degree_data[d - 1];
        let (monos_prev, _, ann_prev) = &degree_data[d - 2];
        let mut candidate_rows: Vec<Vec<u16>> = Vec::new();
        for rr in 0..relations_d.rows() {
            candidate_rows.push(relations_d.row(rr).to_vec());
        }
        // index lookup for degree-d monomials
        let index_of = |mu: &Vec<usize>| monos_d.iter().position(|x| x == mu).unwrap();
        for ar in 0..ann_prev.rows() {
            for g in 0..m {
                let mut shifted = vec![0u16; monos_d.len()];
                for (mi, mu) in monos_prev.iter().enumerate() {
                    let c = ann_prev.get(ar, mi);
                    if c != 0 {
                        let mut bigger = mu.clone();
                        bigger.push(g);
                        bigger.sort_unstable();
                        let ti = index_of(&bigger);
                        shifted[ti] = base.add(shifted[ti], c);
                    }
                }
                if shifted.iter().any(|&x| x != 0) {
                    candidate_rows.push(shifted);
                }
            }
        }
        let candidate_rank = if candidate_rows.is_empty() {
            0
        } else {
            Matrix::from_rows(base.clone(), candidate_rows).rank()
        };
        if candidate_rank != ann_d.rows() {
            return Err(SupportError::TruncationInconclusive(format!(
                "annihilator not stabilized at degree {d}: rank {} generated vs {} computed",
                candidate_rank,
                ann_d.rows()
            )));
        }
    }
    // enumerate candidate points over each extension degree
    let mut points = Vec::new();
    for e in 1..=e_max {
        let field = Field::new(base.p(), e)?;
        'cand: for lambda in crate::session::projective_coeffs(&field, m) {
            for (monos, relations, ann) in &degree_data {
                let evals: Vec<u16> = monos
                    .iter()
                    .map(|mu| eval_monomial(&field, &lambda, mu))
                    .collect();
                for rr in 0..relations.rows() {
                    let mut acc = 0u16;
                    for (c, &v) in relations.row(rr).iter().zip(&evals) {
                        if *c != 0 && v != 0 {
                            acc = field.add(acc, field.mul(*c, v));
                        }
                    }
                    if acc != 0 {
                        continue 'cand;
                    }
                }
                for ar in 0..ann.rows() {
                    let mut acc = 0u16;
                    for (c, &v) in ann.row(ar).iter().zip(&evals) {
                        if *c != 0 && v != 0 {
                            acc = field.add(acc, field.mul(*c, v));
                        }
                    }
                    if acc != 0 {
                        continue 'cand;
                    }
                }
            }
            let digits: Vec<Vec<u16>> = lambda.iter().map(|&c| field.to_digits(c)).collect();
            let in_prime = lambda.iter().all(|&c| field.in_prime_field(c));
            if in_prime && e > 1 {
                continue;
            }
            points.push((e, digits));
        }
    }
    points.sort();
    Ok(points
        .into_iter()
        .map(|(e, digits)| CohPoint {
            ext_degree: e,
            coords: digits,
        })
        .collect())
}

/// Rows spanning a complement of the row space `sub` in `k^dim`: the
/// quotient coordinates (projection onto non-pivot coordinates after
/// reduction).
fn quotient_rows(sub: &Matrix, dim: usize) -> Matrix {
    let f = sub.field().clone();
    let (ech, pivots) = sub.rref();
    let mut is_pivot = vec![false; dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..dim).filter(|&c| !is_pivot[c]).collect();
    let mut q = Matrix::zeros(f.clone(), free.len(), dim);
    for (qi, &c) in free.iter().enumerate() {
        q.set(qi, c, 1);
    }
    for (bi, &pc) in pivots.iter().enumerate() {
        for (qi, &c) in free.iter().enumerate() {
            let v = ech.get(bi, c);
            if v != 0 {
                q.set(qi, pc, f.neg(v));
            }
        }
    }
    q
}

fn apply_monomial(
    _trunc: &ExtTruncation,
    table: &ExtModuleTable,
    mu: &[usize],
    start_degree: usize,
    cocycle: &[u16],
) -> Vec<u16> {
    let mut v = cocycle.to_vec();
    let mut deg = start_degree;
    for &g in mu {
        v = table.gen_actions[g][deg].apply(&v);
        deg += 2;
    }
    v
}

fn eval_monomial(field: &FieldRef, lambda: &[u16], mu: &[usize]) -> u16 {
    let mut acc = 1u16;
    for &g in mu {
        acc = field.mul(acc, lambda[g]);
    }
    acc
}
