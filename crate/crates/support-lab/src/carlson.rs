//! Carlson modules `L_zeta = ker(zeta~ : Omega^n k -> k)` and closed-set
//! realization by tensor products of them.

use algebra_core::ModuleRep;
use gf_core::Matrix;
use hopf_core::{tensor_module, HopfRef};

use crate::error::SupportError;

/// Kernel of a cocycle representative on a syzygy module. The functional
/// `zeta` (length `dim Omega^n`) must be a module map to the trivial module,
/// which for an augmented algebra means it kills `rad . Omega^n`; callers
/// obtain such functionals from `hom_basis(Omega^n, k)`.
pub fn carlson_module(omega: &ModuleRep, zeta: &[u16]) -> Result<ModuleRep, SupportError> {
    if zeta.iter().all(|&c| c == 0) {
        return Err(SupportError::ZeroCocycle);
    }
    let f = omega.algebra.field().clone();
    let row = Matrix::row_vec(f, zeta);
    let kernel = row.kernel_basis();
    let (sub, _) = omega.submodule(&kernel);
    Ok(sub)
}

/// Tensor product `L_{zeta_1} (x) ... (x) L_{zeta_m}` realizing a closed
/// set; the empty list yields the unit module `k`.
pub fn realize_closed_set(
    hopf: &HopfRef,
    omega: &ModuleRep,
    cocycles: &[Vec<u16>],
) -> Result<ModuleRep, SupportError> {
    let mut acc = ModuleRep::trivial(&hopf.algebra);
    for zeta in cocycles {
        let lz = carlson_module(omega, zeta)?;
        acc = tensor_module(hopf, &acc, &lz);
    }
    Ok(acc)
}
