//! Support clouds: deduplicated, canonically sorted sets of pi-point
//! classes, with witness fingerprints as the merging key.

use algebra_core::ModuleRep;
use serde::{Deserialize, Serialize};

use crate::error::SupportError;
use crate::pi_point::alpha_nonprojective;
use crate::session::SupportSession;

/// One class in a cloud, identified by its canonical sweep representative
/// and witness fingerprint.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CloudLabel {
    pub psi: String,
    pub ext_degree: u8,
    /// Representative coefficients as digit vectors over the prime field.
    pub lambda: Vec<Vec<u16>>,
    /// Hex-packed witness fingerprint.
    pub fingerprint: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportCloud {
    pub e_max: u8,
    pub sweep: String,
    pub points: Vec<CloudLabel>,
    pub warnings: Vec<String>,
}

impl SupportCloud {
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Exact set intersection (labels are canonical).
    pub fn intersect(&self, other: &SupportCloud) -> SupportCloud {
        let points = self
            .points
            .iter()
            .filter(|p| other.points.contains(p))
            .cloned()
            .collect();
        SupportCloud {
            e_max: self.e_max,
            sweep: self.sweep.clone(),
            points,
            warnings: vec![],
        }
    }

    /// Exact set union with canonical resorting.
    pub fn union(&self, other: &SupportCloud) -> SupportCloud {
        let mut points = self.points.clone();
        for p in &other.points {
            if !points.contains(p) {
                points.push(p.clone());
            }
        }
        points.sort();
        SupportCloud {
            e_max: self.e_max,
            sweep: self.sweep.clone(),
            points,
            warnings: vec![],
        }
    }
}

pub fn pack_fingerprint(bits: &[bool]) -> String {
    let mut out = String::new();
    for chunk in bits.chunks(4) {
        let mut v = 0u8;
        for (i, &b) in chunk.iter().enumerate() {
            if b {
                v |= 1 << i;
            }
        }
        out.push_str(&format!("{v:x}"));
    }
    out
}

/// Compute the pi-point support cloud of a module over the double:
/// sweep every enumerated flat linear pi-point, keep the non-projective
/// ones, and merge classes by witness fingerprint. Classes with members
/// disagreeing on the verdict are included and reported in `warnings`.
pub fn pi_support(session: &SupportSession, module: &ModuleRep) -> Result<SupportCloud, SupportError> {
    verdict_cloud(session, |psi_index| {
        session.module_gen_actions(psi_index, module)
    })
}

/// Per-psi support of a module already defined over `D_psi` (used by the
/// Carlson identity checks): only that psi's sweep points are consulted.
pub fn pi_support_local(
    session: &SupportSession,
    psi_index: usize,
    module: &ModuleRep,
) -> Result<SupportCloud, SupportError> {
    let p = session.bundle.p as usize;
    let acts = session.local_gen_actions(psi_index, module);
    let mut verdicts: Vec<Option<bool>> = vec![None; session.sweep.len()];
    for (i, pt) in session.sweep.iter().enumerate() {
        if pt.psi_index == psi_index {
            verdicts[i] = Some(alpha_nonprojective(&acts, &pt.lambda, p));
        }
    }
    assemble(session, &verdicts)
}

/// Reconstruct the global support by unioning the per-psi clouds through
/// the canonical labels (the computational content of the support
/// reconstruction identity); asserted equal to `pi_support` by callers.
pub fn support_reconstruct(
    session: &SupportSession,
    module: &ModuleRep,
) -> Result<SupportCloud, SupportError> {
    let p = session.bundle.p as usize;
    let mut verdicts: Vec<Option<bool>> = vec![None; session.sweep.len()];
    for psi_index in 0..session.dpsis.len() {
        // restrict the module to this D_psi, then compute its local support
        let acts = session.module_gen_actions(psi_index, module);
        for (i, pt) in session.sweep.iter().enumerate() {
            if pt.psi_index == psi_index {
                verdicts[i] = Some(alpha_nonprojective(&acts, &pt.lambda, p));
            }
        }
    }
    assemble(session, &verdicts)
}

fn verdict_cloud(
    session: &SupportSession,
    gen_actions: impl Fn(usize) -> Vec<gf_core::Matrix>,
) -> Result<SupportCloud, SupportError> {
    let p = session.bundle.p as usize;
    let mut verdicts: Vec<Option<bool>> = vec![None; session.sweep.len()];
    let mut acts_cache: Vec<Option<Vec<gf_core::Matrix>>> = vec![None; session.dpsis.len()];
    for (i, pt) in session.sweep.iter().enumerate() {
        if acts_cache[pt.psi_index].is_none() {
            acts_cache[pt.psi_index] = Some(gen_actions(pt.psi_index));
        }
        let acts = acts_cache[pt.psi_index].as_ref().unwrap();
        verdicts[i] = Some(alpha_nonprojective(acts, &pt.lambda, p));
    }
    assemble(session, &verdicts)
}

/// Aggregate per-point verdicts into fingerprint classes.
fn assemble(
    session: &SupportSession,
    verdicts: &[Option<bool>],
) -> Result<SupportCloud, SupportError> {
    let mut points = Vec::new();
    let mut warnings = Vec::new();
    for class in &session.classes {
        let member_verdicts: Vec<bool> = class
            .members
            .iter()
            .filter_map(|&i| verdicts[i])
            .collect();
        if member_verdicts.is_empty() {
            continue;
        }
        let any = member_verdicts.iter().any(|&v| v);
        let all = member_verdicts.iter().all(|&v| v);
        if any {
            let rep = &session.sweep[class.members[0]];
            let key = session.point_key(rep);
            points.push(CloudLabel {
                psi: key.0,
                ext_degree: key.1,
                lambda: key.2,
                fingerprint: pack_fingerprint(&class.fingerprint),
            });
            if !all {
                warnings.push(format!(
                    "fingerprint class at {:?} has members with mixed projectivity verdicts",
                    session.point_key(rep)
                ));
            }
        }
    }
    points.sort();
    Ok(SupportCloud {
        e_max: session.e_max,
        sweep: "linear".into(),
        points,
        warnings,
    })
}
