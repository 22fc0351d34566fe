//! Seeded random module generation: A-stable quotients of small free
//! modules, closed under tensor, dual, and syzygy.

use algebra_core::{projective_cover, spin, ModuleRep};
use gf_core::{Matrix, SplitMix64};
use hopf_core::{dual_module, tensor_module};
use support_lab::SupportSession;

/// Dimension cap for generated modules; derived operations that would
/// exceed it fall back to the base quotient.
const DIM_CAP: usize = 120;

/// One seeded random module over the session's double.
pub fn random_module(session: &SupportSession, rng: &mut SplitMix64) -> ModuleRep {
    let base = random_quotient(session, rng);
    match rng.below(5) {
        0 => base,
        1 => {
            // syzygy of the quotient
            match projective_cover(&session.double.algebra, &session.rad, &session.pims, &base) {
                Ok(step) => {
                    if step.kernel.rows() == 0 || step.kernel.rows() > DIM_CAP {
                        base
                    } else {
                        let p_mod = algebra_core::projective_module(&session.pims, &step.summands);
                        let (omega, _) = p_mod.submodule(&step.kernel);
                        omega
                    }
                }
                Err(_) => base,
            }
        }
        2 => dual_module(&session.double, &base),
        3 => {
            let other = random_quotient(session, rng);
            if base.dim * other.dim > DIM_CAP {
                base
            } else {
                tensor_module(&session.double, &base, &other)
            }
        }
        _ => {
            // direct sum with a simple
            let idx = rng.below(session.pims.simples.len() as u64) as usize;
            base.direct_sum(&session.pims.simples[idx].module.clone())
        }
    }
}

/// Random A-stable quotient of `A^n`, `n <= 3`.
fn random_quotient(session: &SupportSession, rng: &mut SplitMix64) -> ModuleRep {
    let a = &session.double.algebra;
    let f = a.field().clone();
    let q = f.order() as u64;
    let n = 1 + rng.below(3) as usize;
    let free = ModuleRep::free(a, n);
    let generators = rng.below(4) as usize;
    if generators == 0 {
        return free;
    }
    let rows: Vec<Vec<u16>> = (0..generators)
        .map(|_| (0..free.dim).map(|_| rng.below(q) as u16).collect())
        .collect();
    let seeds = Matrix::from_rows(f, rows);
    let sub = spin(&free, &seeds);
    if sub.rows() == 0 {
        return free;
    }
    let (quot, _) = free.quotient(&sub);
    quot
}
