//! Pi-points: flat maps `K[t]/(t^p) -> D_psi` in linear coordinates over the
//! transported primitive generators, with Jordan-type flatness certificates.

use algebra_core::ModuleRep;
use gf_core::{jordan_type, JordanType, Matrix};
use scheme_catalog::DPsi;

use crate::error::SupportError;

/// A verified pi-point: `alpha(t) = sum lambda_i w_i` over the transported
/// primitive generators of one `D_psi`, with its flatness certificate.
#[derive(Clone, Debug)]
pub struct PiPoint {
    /// Index of the parametrizing one-parameter subgroup in the session.
    pub psi_index: usize,
    pub ext_degree: u8,
    /// Coefficients over `F_{p^e}`, first nonzero normalized to 1.
    pub lambda: Vec<u16>,
    /// Jordan type of `alpha(t)` on the regular module of `D_psi`
    /// (all parts `p`).
    pub flat_certificate: JordanType,
}

/// The element `alpha(t)` of `D_psi`.
pub fn alpha_element(dpsi: &DPsi, lambda: &[u16]) -> Vec<u16> {
    let f = dpsi.double.algebra.field();
    let n = dpsi.double.dim();
    let mut z = vec![0u16; n];
    for (i, &c) in lambda.iter().enumerate() {
        if c != 0 {
            for (x, &g) in z.iter_mut().zip(&dpsi.generators[i]) {
                *x = f.add(*x, f.mul(c, g));
            }
        }
    }
    z
}

/// Build and certify a pi-point: `lambda != 0`, `alpha(t)^p = 0`, and the
/// regular restriction is free (all Jordan parts equal `p`).
pub fn make_pi_point(
    dpsi: &DPsi,
    psi_index: usize,
    lambda: &[u16],
) -> Result<PiPoint, SupportError> {
    if lambda.iter().all(|&c| c == 0) {
        return Err(SupportError::ZeroCoefficients);
    }
    let p = dpsi.double.algebra.field().p() as usize;
    let z = alpha_element(dpsi, lambda);
    let zp = dpsi.double.algebra.power(&z, p);
    if zp.iter().any(|&c| c != 0) {
        return Err(SupportError::NotNilpotentP);
    }
    let reg_action = dpsi.double.algebra.left_mult_matrix(&z);
    let jt = jordan_type(&reg_action, p)?;
    if !jt.is_free_over_truncated(p) {
        return Err(SupportError::NotFlat(jt.parts));
    }
    Ok(PiPoint {
        psi_index,
        ext_degree: dpsi.psi.ext_degree,
        lambda: lambda.to_vec(),
        flat_certificate: jt,
    })
}

/// Jordan type of `alpha(t)` on a module over `D_psi` (the module must
/// already be restricted/base-changed to `D_psi`).
pub fn restrict_jordan(dpsi: &DPsi, lambda: &[u16], module: &ModuleRep) -> Result<JordanType, SupportError> {
    let p = dpsi.double.algebra.field().p() as usize;
    let z = alpha_element(dpsi, lambda);
    let n = module.act_element(&z);
    Ok(jordan_type(&n, p)?)
}

/// Fast projectivity verdict over `K[t]/(t^p)`: the operator `N` (with
/// `N^p = 0` structurally) acts freely iff `p | dim` and
/// `rank(N^{p-1}) = dim / p`.
pub fn is_operator_free(n: &Matrix, p: usize) -> bool {
    let d = n.rows();
    if d == 0 {
        return true;
    }
    if d % p != 0 {
        return false;
    }
    let power = if p >= 2 { n.pow(p - 1) } else { n.clone() };
    power.rank() == d / p
}

/// Non-projectivity verdict of a module restriction along a pi-point given
/// by the action matrices of the generators on the module.
pub fn alpha_nonprojective(gen_actions: &[Matrix], lambda: &[u16], p: usize) -> bool {
    let f = gen_actions[0].field().clone();
    let d = gen_actions[0].rows();
    if d == 0 {
        return false;
    }
    let mut n = Matrix::zeros(f.clone(), d, d);
    for (m, &c) in gen_actions.iter().zip(lambda) {
        if c != 0 {
            n = n.add(&m.scale(c));
        }
    }
    !is_operator_free(&n, p)
}
