//! Group-scheme bundles: `kG`, `O(G)`, the adjoint action, the Lie algebra
//! with its catalog basis, the coadjoint action on the cotangent space, and
//! the quasi-logarithm seed — all certified at construction.

use gf_core::{Field, FieldRef, Matrix};
use hopf_core::{
    conjugation_action, dual_hopf, hopf_structures_equal, HopfRef, ModuleAlgebraAction,
};

use crate::error::CatalogError;
use crate::groups::{build_presentation, tangent_functional, GroupName, GroupPresentation};

pub struct GroupSchemeBundle {
    pub name: GroupName,
    pub p: u16,
    pub r: usize,
    pub field: FieldRef,
    pub og: HopfRef,
    pub kg: HopfRef,
    /// Adjoint action of `kG` on `O(G)`.
    pub adjoint: ModuleAlgebraAction,
    /// Rows: the Lie basis of `g = Prim(kG)` in the catalog order.
    pub lie_basis: Matrix,
    pub lie_labels: Vec<String>,
    /// Coadjoint action matrices of `kG` on `g*` (one per `kG` basis
    /// element, in the dual basis of the catalog Lie basis).
    pub coadjoint: Vec<Matrix>,
    /// Quasi-logarithm seed: column `j` is the element of `O(G)` splitting
    /// the cotangent class dual to the `j`-th Lie basis vector.
    pub quasilog_seed: Matrix,
    presentation: GroupPresentation,
}

impl GroupSchemeBundle {
    pub fn ring(&self) -> &crate::groups::MonomialRing {
        &self.presentation.ring
    }

    /// Dimension of the Lie algebra.
    pub fn lie_dim(&self) -> usize {
        self.lie_basis.rows()
    }

    /// Evaluate the canonical `kG`/`O(G)` pairing `<mu, f>` (dual bases).
    pub fn pairing(&self, mu: &[u16], f_elem: &[u16]) -> u16 {
        let f = self.field.clone();
        let mut acc = 0;
        for (&a, &b) in mu.iter().zip(f_elem) {
            if a != 0 && b != 0 {
                acc = f.add(acc, f.mul(a, b));
            }
        }
        acc
    }
}

fn supported(name: GroupName, p: u16, r: usize) -> bool {
    match name {
        GroupName::Ga => matches!(p, 2 | 3 | 5) && (1..=2).contains(&r),
        GroupName::Sl2 | GroupName::Borel2 | GroupName::U2 => matches!(p, 3 | 5) && r == 1,
    }
}

/// Build a catalog bundle, running every bundle invariant:
/// `kG = O(G)*` with double dual equal to `O(G)`, the adjoint action is a
/// counit-fixing module-algebra action, the Lie basis is primitive, and the
/// quasi-logarithm seed splits the cotangent projection ad-equivariantly.
pub fn build_bundle(name: GroupName, p: u16, r: usize) -> Result<GroupSchemeBundle, CatalogError> {
    if !supported(name, p, r) {
        return Err(CatalogError::UnsupportedCatalogEntry(
            name.as_str().into(),
            p,
            r,
        ));
    }
    let field = Field::new(p, 1)?;
    let presentation = build_presentation(name, field.clone(), r)?;
    let og = presentation.hopf.clone();
    let kg = dual_hopf(&og)?;
    // the canonical pairing identifies the double dual with O(G) entrywise
    let ddual = dual_hopf(&kg)?;
    if !hopf_structures_equal(&og, &ddual) {
        return Err(CatalogError::NotHopfMap(0));
    }
    // adjoint action of kG on O(G), from the conjugation coaction
    let matrices = conjugation_action(&og);
    let adjoint = ModuleAlgebraAction::new(kg.clone(), og.algebra.clone(), matrices)?;
    if !adjoint.fixes_counit() {
        return Err(CatalogError::Hopf(hopf_core::HopfError::HopfAxiomFailure(
            "adjoint action does not fix the counit".into(),
        )));
    }
    // Lie basis: catalog tangent functionals, checked primitive
    let lie_labels: Vec<String> = presentation
        .tangents
        .iter()
        .map(|t| t.label.clone())
        .collect();
    let lie_rows: Vec<Vec<u16>> = presentation
        .tangents
        .iter()
        .map(|t| tangent_functional(&presentation.ring, t))
        .collect();
    let lie_basis = Matrix::from_rows(field.clone(), lie_rows);
    let prim = kg.primitives();
    if lie_basis.rank() != lie_basis.rows() {
        return Err(CatalogError::BadSeed);
    }
    // every catalog tangent vector is primitive in kG
    for i in 0..lie_basis.rows() {
        let stacked = prim.vstack(&lie_basis.row_slice(i, i + 1));
        if stacked.rank() != prim.rows() {
            return Err(CatalogError::NotHopfMap(i));
        }
    }
    // quasi-logarithm seed: pairing <X_i, seed_j> = delta_ij and eps(seed) = 0
    let o_dim = og.dim();
    let gdim = lie_basis.rows();
    let mut seed = Matrix::zeros(field.clone(), o_dim, gdim);
    for (j, s) in presentation.quasilog_seed.iter().enumerate() {
        if og.algebra.augment(s) != Some(0) {
            return Err(CatalogError::BadSeed);
        }
        for (rix, &v) in s.iter().enumerate() {
            seed.set(rix, j, v);
        }
    }
    let bundle_pairing = |mu: &[u16], fe: &[u16]| -> u16 {
        let f = &field;
        let mut acc = 0;
        for (&a, &b) in mu.iter().zip(fe) {
            if a != 0 && b != 0 {
                acc = f.add(acc, f.mul(a, b));
            }
        }
        acc
    };
    for i in 0..gdim {
        for j in 0..gdim {
            let want = u16::from(i == j);
            if bundle_pairing(lie_basis.row(i), &presentation.quasilog_seed[j]) != want {
                return Err(CatalogError::BadSeed);
            }
        }
    }
    // coadjoint matrices: coad[mu](i, j) = <X_i, mu . seed_j>
    let n_kg = kg.dim();
    let mut coadjoint = Vec::with_capacity(n_kg);
    for m in 0..n_kg {
        let act = &adjoint.matrices[m];
        let mut cm = Matrix::zeros(field.clone(), gdim, gdim);
        for j in 0..gdim {
            let img = act.apply(&presentation.quasilog_seed[j]);
            for i in 0..gdim {
                cm.set(i, j, bundle_pairing(lie_basis.row(i), &img));
            }
        }
        coadjoint.push(cm);
    }
    // ad-equivariance of the seed, exactly in O(G):
    // mu . seed_j = sum_i coad[mu]_{ij} seed_i  for every kG basis element
    for m in 0..n_kg {
        let act = &adjoint.matrices[m];
        for j in 0..gdim {
            let img = act.apply(&presentation.quasilog_seed[j]);
            let mut expect = vec![0u16; o_dim];
            for i in 0..gdim {
                let c = coadjoint[m].get(i, j);
                if c != 0 {
                    for (x, &v) in expect.iter_mut().zip(&presentation.quasilog_seed[i]) {
                        *x = field.add(*x, field.mul(c, v));
                    }
                }
            }
            if img != expect {
                return Err(CatalogError::EquivarianceFailure(m, j));
            }
        }
    }
    // seeds must be killed by the p^r-th power so S_r(g*) -> O(G) is defined
    let q = (p as usize).pow(r as u32);
    for s in &presentation.quasilog_seed {
        let power = og.algebra.power(s, q);
        if power.iter().any(|&c| c != 0) {
            return Err(CatalogError::BadSeed);
        }
    }
    Ok(GroupSchemeBundle {
        name,
        p,
        r,
        field,
        og,
        kg,
        adjoint,
        lie_basis,
        lie_labels,
        coadjoint,
        quasilog_seed: seed,
        presentation,
    })
}
