//! A support session: one bundle with its double, sigma data, local family,
//! sweep points, witness family, and fingerprint classes. All clouds over
//! the same session share canonical class labels.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use algebra_core::{
    minimal_resolution, pims, radical, AlgebraMap, ModuleRep, Pims, RadicalData, ResolutionData,
};
use gf_core::Matrix;
use hopf_core::{hopf_base_change, HopfRef};
use scheme_catalog::{
    build_bundle, build_d_psi, build_double, build_sigma, enumerate_one_param, quasilog_map,
    DPsi, GroupName, GroupSchemeBundle, OneParamSubgroup, SigmaData,
};

use crate::carlson::carlson_module;
use crate::error::SupportError;
use crate::pi_point::{alpha_element, make_pi_point};

/// Cap on the number of degree-2 Carlson witnesses in the fingerprint family.
const MAX_CARLSON_WITNESSES: usize = 121;
/// Depth of the trivial-module resolution backing syzygy witnesses.
const WITNESS_SYZYGY_DEPTH: usize = 4;

/// One enumerated sweep point: a flat linear pi-point.
pub struct SweepPoint {
    pub psi_index: usize,
    /// Projectivized coefficients over the psi's field.
    pub lambda: Vec<u16>,
    /// Non-projectivity verdicts against the witness family.
    pub fingerprint: Vec<bool>,
}

/// A fingerprint class with its canonical representative.
pub struct SweepClass {
    pub fingerprint: Vec<bool>,
    /// Indices into the sweep-point list, sorted canonically; the first is
    /// the representative.
    pub members: Vec<usize>,
}

/// Named witness module over the double, with precomputed generator-action
/// matrices per psi.
pub struct Witness {
    pub name: String,
    pub module: ModuleRep,
}

pub struct SupportSession {
    pub bundle: GroupSchemeBundle,
    pub double: HopfRef,
    pub sigma: SigmaData,
    pub a0: AlgebraMap,
    pub rad: RadicalData,
    pub pims: Pims,
    /// Minimal resolution of the trivial module over the double (witness
    /// syzygies and degree-2 Carlson cocycles are drawn from it).
    pub resolution_k: ResolutionData,
    pub e_max: u8,
    pub psis: Vec<Arc<OneParamSubgroup>>,
    pub dpsis: Vec<DPsi>,
    pub witnesses: Vec<Witness>,
    pub sweep: Vec<SweepPoint>,
    pub classes: Vec<SweepClass>,
    /// Warnings accumulated during the sweep (skipped non-flat points).
    pub warnings: Vec<String>,
    /// Memo: generator-action matrices per (psi, module) for witness reuse.
    witness_actions: RefCell<HashMap<(usize, usize), Arc<Vec<Matrix>>>>,
}

impl SupportSession {
    /// Build the full session for a catalog entry. `e_max <= 2`.
    pub fn new(name: GroupName, p: u16, r: usize, e_max: u8) -> Result<SupportSession, SupportError> {
        let bundle = build_bundle(name, p, r)?;
        Self::from_bundle(bundle, e_max)
    }

    pub fn from_bundle(bundle: GroupSchemeBundle, e_max: u8) -> Result<SupportSession, SupportError> {
        let double = build_double(&bundle)?;
        let sigma = build_sigma(&bundle)?;
        let a0 = quasilog_map(&bundle, &sigma)?;
        let rad = radical(&double.algebra)?;
        let pims_d = pims(&double.algebra, &rad, 0x5E55)?;
        let trivial = ModuleRep::trivial(&double.algebra);
        let resolution_k =
            minimal_resolution(&double.algebra, &rad, &pims_d, &trivial, WITNESS_SYZYGY_DEPTH)?;
        let psis = enumerate_one_param(&bundle, e_max, true)?;
        let mut dpsis = Vec::with_capacity(psis.len());
        for psi in &psis {
            let d_k = if psi.ext_degree == 1 {
                double.clone()
            } else {
                hopf_base_change(&double, &psi.field)
            };
            dpsis.push(build_d_psi(&bundle, psi, &d_k, &a0)?);
        }
        // witness family: simples, syzygies, degree-2 Carlson modules
        let mut witnesses = Vec::new();
        for (i, s) in pims_d.simples.iter().enumerate() {
            witnesses.push(Witness {
                name: format!("simple{i}"),
                module: s.module.clone(),
            });
        }
        for i in 1..=WITNESS_SYZYGY_DEPTH {
            witnesses.push(Witness {
                name: format!("syzygy{i}"),
                module: resolution_k.syzygy_module(&pims_d, i),
            });
        }
        let omega2 = resolution_k.syzygy_module(&pims_d, 2);
        let omega2 = &omega2;
        let cocycles = algebra_core::hom_basis(omega2, &trivial);
        let m = cocycles.len();
        let field = bundle.field.clone();
        let mut count = 0usize;
        'outer: for coeffs in crate::session::projective_coeffs(&field, m) {
            if count >= MAX_CARLSON_WITNESSES {
                break 'outer;
            }
            let mut zeta = vec![0u16; omega2.dim];
            for (ci, &c) in coeffs.iter().enumerate() {
                if c != 0 {
                    for (z, v) in zeta.iter_mut().zip(cocycles[ci].row(0)) {
                        *z = field.add(*z, field.mul(c, *v));
                    }
                }
            }
            let lz = carlson_module(omega2, &zeta)?;
            witnesses.push(Witness {
                name: format!("carlson{count}"),
                module: lz,
            });
            count += 1;
        }
        let mut session = SupportSession {
            bundle,
            double,
            sigma,
            a0,
            rad,
            pims: pims_d,
            resolution_k,
            e_max,
            psis,
            dpsis,
            witnesses,
            sweep: Vec::new(),
            classes: Vec::new(),
            warnings: Vec::new(),
            witness_actions: RefCell::new(HashMap::new()),
        };
        session.build_sweep()?;
        Ok(session)
    }

    /// Enumerate flat linear pi-points over every psi and partition them by
    /// witness fingerprint.
    fn build_sweep(&mut self) -> Result<(), SupportError> {
        let p = self.bundle.p as usize;
        let mut sweep = Vec::new();
        for (pi, dpsi) in self.dpsis.iter().enumerate() {
            let c = dpsi.generators.len();
            let field = dpsi.psi.field.clone();
            // precompute witness generator actions at this psi
            let witness_acts: Vec<Arc<Vec<Matrix>>> = (0..self.witnesses.len())
                .map(|wi| self.witness_gen_actions(pi, wi))
                .collect();
            for lambda in projective_coeffs(&field, c) {
                // p-nilpotence filter (e.g. the xi-direction at height 2)
                let z = alpha_element(dpsi, &lambda);
                let zp = dpsi.double.algebra.power(&z, p);
                if zp.iter().any(|&v| v != 0) {
                    continue;
                }
                match make_pi_point(dpsi, pi, &lambda) {
                    Ok(_) => {}
                    Err(SupportError::NotFlat(parts)) => {
                        self.warnings.push(format!(
                            "skipped non-flat sweep point psi {} lambda {:?} (type {:?})",
                            dpsi.psi.label(),
                            lambda,
                            parts
                        ));
                        continue;
                    }
                    Err(e) => return Err(e),
                }
                let fingerprint: Vec<bool> = witness_acts
                    .iter()
                    .map(|acts| crate::pi_point::alpha_nonprojective(acts, &lambda, p))
                    .collect();
                sweep.push(SweepPoint {
                    psi_index: pi,
                    lambda,
                    fingerprint,
                });
            }
        }
        // canonical order: (psi label, e, lambda digits)
        let mut keyed: Vec<((String, u8, Vec<Vec<u16>>), SweepPoint)> = sweep
            .into_iter()
            .map(|pt| (self.point_key(&pt), pt))
            .collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        let sweep: Vec<SweepPoint> = keyed.into_iter().map(|(_, pt)| pt).collect();
        // classes by fingerprint, members kept in canonical order
        let mut class_of: HashMap<Vec<bool>, usize> = HashMap::new();
        let mut classes: Vec<SweepClass> = Vec::new();
        for (i, pt) in sweep.iter().enumerate() {
            match class_of.get(&pt.fingerprint) {
                Some(&ci) => classes[ci].members.push(i),
                None => {
                    class_of.insert(pt.fingerprint.clone(), classes.len());
                    classes.push(SweepClass {
                        fingerprint: pt.fingerprint.clone(),
                        members: vec![i],
                    });
                }
            }
        }
        classes.sort_by_key(|c| self.point_key(&sweep[c.members[0]]));
        self.sweep = sweep;
        self.classes = classes;
        Ok(())
    }

    pub fn point_key(&self, pt: &SweepPoint) -> (String, u8, Vec<Vec<u16>>) {
        let psi = &self.psis[pt.psi_index];
        let digits = pt
            .lambda
            .iter()
            .map(|&c| psi.field.to_digits(c))
            .collect();
        (psi.label(), psi.ext_degree, digits)
    }

    /// Generator-action matrices of a witness module at one psi (memoized).
    fn witness_gen_actions(&self, psi_index: usize, witness_index: usize) -> Arc<Vec<Matrix>> {
        if let Some(a) = self
            .witness_actions
            .borrow()
            .get(&(psi_index, witness_index))
        {
            return a.clone();
        }
        let acts = Arc::new(self.module_gen_actions(psi_index, &self.witnesses[witness_index].module));
        self.witness_actions
            .borrow_mut()
            .insert((psi_index, witness_index), acts.clone());
        acts
    }

    /// Action matrices of the transported generators of `D_psi` on a module
    /// over the double (defined over the prime field), after base change.
    pub fn module_gen_actions(&self, psi_index: usize, module: &ModuleRep) -> Vec<Matrix> {
        let dpsi = &self.dpsis[psi_index];
        let field = dpsi.psi.field.clone();
        let embedded: Vec<Matrix> = module.action.iter().map(|m| m.embed(&field)).collect();
        dpsi.generators
            .iter()
            .map(|w| {
                let img = dpsi.inclusion.apply(w);
                let mut acc = Matrix::zeros(field.clone(), module.dim, module.dim);
                for (i, &c) in img.iter().enumerate() {
                    if c != 0 {
                        acc = acc.add(&embedded[i].scale(c));
                    }
                }
                acc
            })
            .collect()
    }

    /// Action matrices of the generators on a module already living over
    /// one `D_psi`.
    pub fn local_gen_actions(&self, psi_index: usize, module: &ModuleRep) -> Vec<Matrix> {
        let dpsi = &self.dpsis[psi_index];
        dpsi.generators
            .iter()
            .map(|w| module.act_element(w))
            .collect()
    }
}

/// Nonzero vectors with first nonzero coordinate 1, lexicographic order.
pub fn projective_coeffs(field: &gf_core::FieldRef, dim: usize) -> Vec<Vec<u16>> {
    let q = field.order() as usize;
    let total = q.pow(dim as u32);
    let mut out = Vec::new();
    for code in 1..total {
        let mut v = vec![0u16; dim];
        let mut c = code;
        for slot in (0..dim).rev() {
            v[slot] = (c % q) as u16;
            c /= q;
        }
        if v.iter().find(|&&x| x != 0) != Some(&1) {
            continue;
        }
        out.push(v);
    }
    out
}

