//! Enumeration of embedded one-parameter subgroups: restricted-nilpotent
//! Lie elements at height one, and additive-polynomial maps for the
//! `G_a(r)` family, each with its verified Hopf algebra map into `kG`.

use std::collections::HashMap;
use std::sync::Arc;

use algebra_core::{Algebra, AlgebraMap};
use gf_core::{Field, FieldRef, Matrix};
use hopf_core::{dual_hopf, hopf_base_change, normalize_row, HopfAlgebra, HopfRef};
use serde::{Deserialize, Serialize};

use crate::bundle::GroupSchemeBundle;
use crate::error::CatalogError;
use crate::groups::GroupName;

/// The parametrizing data of a one-parameter subgroup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PsiData {
    /// Height-one: a p-nilpotent element `X = sum lambda_i X_i` of the Lie
    /// algebra over the extension field (coefficients in Lie-basis order).
    Nilpotent(Vec<u16>),
    /// `G_a(s) -> G_a(r)`: the additive polynomial `x -> sum a_i y^{p^i}`
    /// (coefficients `a_0..a_{s-1}`, `a_0 != 0`).
    Additive(Vec<u16>),
}

/// An embedded one-parameter subgroup `psi : G_a(s),K -> G_K` together with
/// the induced (verified) Hopf map `K G_a(s) -> kG (x) K`.
pub struct OneParamSubgroup {
    pub height: usize,
    pub ext_degree: u8,
    pub field: FieldRef,
    pub data: PsiData,
    /// Group algebra `K G_a(s)` (dual of `K[y]/(y^{p^s})`).
    pub kgas: HopfRef,
    /// Coordinate Hopf algebra `K[y]/(y^{p^s})`.
    pub ogas: HopfRef,
    /// The induced map `K G_a(s) -> kG_K` (columns: images of the divided
    /// power basis), verified multiplicative, comultiplicative, injective.
    pub hopf_map: AlgebraMap,
    /// Base-changed `kG_K`.
    pub kg_k: HopfRef,
}

impl OneParamSubgroup {
    /// Canonical label: height, extension degree, and coefficient digits.
    pub fn label(&self) -> String {
        let coeffs = match &self.data {
            PsiData::Nilpotent(v) => v,
            PsiData::Additive(v) => v,
        };
        let digits: Vec<String> = coeffs
            .iter()
            .map(|&c| {
                let d = self.field.to_digits(c);
                d.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join("")
            })
            .collect();
        format!("s{}e{}[{}]", self.height, self.ext_degree, digits.join(","))
    }
}

/// Build the Hopf pair `(O(G_a(s))_K, K G_a(s))`.
pub fn additive_group_hopf(
    field: &FieldRef,
    s: usize,
) -> Result<(HopfRef, HopfRef), CatalogError> {
    let p = field.p() as usize;
    let bound = p.pow(s as u32);
    let mut mult = Vec::with_capacity(bound * bound);
    for i in 0..bound {
        for j in 0..bound {
            mult.push(if i + j < bound {
                vec![((i + j) as u32, 1u16)]
            } else {
                Vec::new()
            });
        }
    }
    let mut unit = vec![0u16; bound];
    unit[0] = 1;
    let mut eps = vec![0u16; bound];
    eps[0] = 1;
    let algebra = Algebra::build(
        field.clone(),
        (0..bound).map(|i| format!("y^{i}")).collect(),
        mult,
        unit,
        Some(eps.clone()),
    )?;
    // binomial comultiplication, primitive generator
    let mut binom = vec![vec![0u16; bound + 1]; bound + 1];
    for n in 0..=bound {
        binom[n][0] = 1;
        for k in 1..=n {
            let a = binom[n - 1][k - 1];
            let b = if k <= n - 1 { binom[n - 1][k] } else { 0 };
            binom[n][k] = field.add(a, b);
        }
    }
    let comult = (0..bound)
        .map(|n| {
            let mut row: Vec<(u32, u32, u16)> = (0..=n)
                .filter(|&k| binom[n][k] != 0)
                .map(|k| (k as u32, (n - k) as u32, binom[n][k]))
                .collect();
            normalize_row(field, &mut row);
            row
        })
        .collect();
    let mut antipode = Matrix::zeros(field.clone(), bound, bound);
    for n in 0..bound {
        let sign = if n % 2 == 0 { 1 } else { field.neg(1) };
        antipode.set(n, n, sign);
    }
    let og = HopfAlgebra::new(algebra, comult, eps, antipode)?;
    let kg = dual_hopf(&og)?;
    Ok((og, kg))
}

/// Verify that `map` intertwines the comultiplications and counits of two
/// Hopf algebras (the algebra layer is covered by `AlgebraMap`).
pub fn is_hopf_map(source: &HopfAlgebra, target: &HopfAlgebra, map: &AlgebraMap) -> bool {
    let f = target.algebra.field();
    for k in 0..source.dim() {
        // (map (x) map) Delta_source(b_k)
        let mut lhs: HashMap<(usize, usize), u16> = HashMap::new();
        for &(i, j, c) in &source.comult[k] {
            let fi = map.apply_basis(i as usize);
            let fj = map.apply_basis(j as usize);
            for (a, &va) in fi.iter().enumerate() {
                if va == 0 {
                    continue;
                }
                for (b, &vb) in fj.iter().enumerate() {
                    if vb != 0 {
                        let e = lhs.entry((a, b)).or_insert(0);
                        *e = f.add(*e, f.mul(c, f.mul(va, vb)));
                    }
                }
            }
        }
        lhs.retain(|_, v| *v != 0);
        // Delta_target(map b_k)
        let img = map.apply_basis(k);
        let mut rhs: HashMap<(usize, usize), u16> = HashMap::new();
        for (m, &c) in img.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(i, j, v) in &target.comult[m] {
                let e = rhs.entry((i as usize, j as usize)).or_insert(0);
                *e = f.add(*e, f.mul(c, v));
            }
        }
        rhs.retain(|_, v| *v != 0);
        if lhs != rhs {
            return false;
        }
        // counits
        let mut eps_img = 0u16;
        for (m, &c) in img.iter().enumerate() {
            eps_img = f.add(eps_img, f.mul(c, target.counit[m]));
        }
        if eps_img != source.counit[k] {
            return false;
        }
    }
    true
}

/// Enumerate one-parameter subgroups over `F_{p^e}` for `e <= e_max`.
///
/// Height-one families list p-nilpotent Lie elements (`X^[p] = X^p = 0`
/// computed in `kG`), deduplicated up to scalar when `dedupe_scalar` is set
/// (first nonzero coefficient normalized to 1). The `G_a(r)` family lists
/// additive-polynomial embeddings of heights `s <= r`, leading coefficient
/// normalized under scalar reparametrization.
///
/// The result is sorted canonically: (height, e, coefficient vector).
pub fn enumerate_one_param(
    bundle: &GroupSchemeBundle,
    e_max: u8,
    dedupe_scalar: bool,
) -> Result<Vec<Arc<OneParamSubgroup>>, CatalogError> {
    let mut out = Vec::new();
    for e in 1..=e_max {
        let field = Field::new(bundle.p, e)?;
        let kg_k = hopf_base_change(&bundle.kg, &field);
        match bundle.name {
            GroupName::Ga => {
                for s in 1..=bundle.r {
                    let (ogas, kgas) = additive_group_hopf(&field, s)?;
                    for coeffs in additive_coeffs(&field, s, dedupe_scalar) {
                        let psi = build_additive_psi(
                            bundle, &field, s, e, &coeffs, &ogas, &kgas, &kg_k,
                        )?;
                        out.push(Arc::new(psi));
                    }
                }
            }
            _ => {
                let (ogas, kgas) = additive_group_hopf(&field, 1)?;
                let gdim = bundle.lie_dim();
                for coeffs in projective_vectors(&field, gdim, dedupe_scalar) {
                    // X = sum coeffs_i X_i inside kG_K
                    let x = lie_element(bundle, &field, &coeffs);
                    // p-nilpotence in the group algebra
                    let xp = kg_k.algebra.power(&x, bundle.p as usize);
                    if xp.iter().any(|&c| c != 0) {
                        continue;
                    }
                    let psi = build_nilpotent_psi(
                        bundle, &field, e, coeffs, x, &ogas, &kgas, &kg_k,
                    )?;
                    out.push(Arc::new(psi));
                }
            }
        }
    }
    out.sort_by_key(|psi| {
        let coeffs = match &psi.data {
            PsiData::Nilpotent(v) => v.clone(),
            PsiData::Additive(v) => v.clone(),
        };
        (psi.height, psi.ext_degree, coeffs)
    });
    Ok(out)
}

/// All nonzero vectors over the field, optionally up to scalar (first
/// nonzero coordinate = 1), in lexicographic order.
fn projective_vectors(field: &FieldRef, dim: usize, dedupe_scalar: bool) -> Vec<Vec<u16>> {
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
        if dedupe_scalar {
            let lead = v.iter().find(|&&x| x != 0).copied().unwrap();
            if lead != 1 {
                continue;
            }
        }
        out.push(v);
    }
    out
}

/// Additive-map coefficient lists `a_0..a_{s-1}` with `a_0 != 0`,
/// normalized to `a_0 = 1` when deduplicating by scalar reparametrization.
fn additive_coeffs(field: &FieldRef, s: usize, dedupe_scalar: bool) -> Vec<Vec<u16>> {
    let q = field.order() as usize;
    let mut out = Vec::new();
    let tail_total = q.pow((s - 1) as u32);
    let leads: Vec<u16> = if dedupe_scalar {
        vec![1]
    } else {
        (1..q as u16).collect()
    };
    for lead in leads {
        for code in 0..tail_total {
            let mut v = vec![lead];
            let mut c = code;
            for _ in 1..s {
                v.push((c % q) as u16);
                c /= q;
            }
            out.push(v);
        }
    }
    out
}

fn lie_element(bundle: &GroupSchemeBundle, field: &FieldRef, coeffs: &[u16]) -> Vec<u16> {
    let n = bundle.kg.dim();
    let mut x = vec![0u16; n];
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            for (xj, &b) in x.iter_mut().zip(bundle.lie_basis.row(i)) {
                *xj = field.add(*xj, field.mul(c, b));
            }
        }
    }
    x
}

#[allow(clippy::too_many_arguments)]
fn build_nilpotent_psi(
    bundle: &GroupSchemeBundle,
    field: &FieldRef,
    e: u8,
    coeffs: Vec<u16>,
    x: Vec<u16>,
    ogas: &HopfRef,
    kgas: &HopfRef,
    kg_k: &HopfRef,
) -> Result<OneParamSubgroup, CatalogError> {
    let p = bundle.p as usize;
    // divided-power images: delta_i -> X^i / i!
    let mut fact = vec![1u16; p];
    for i in 1..p {
        fact[i] = field.mul(fact[i - 1], (i % p) as u16);
    }
    let n = kg_k.dim();
    let mut matrix = Matrix::zeros(field.clone(), n, p);
    let mut pow = kg_k.algebra.unit().to_vec();
    for i in 0..p {
        let inv_fact = field.inv(fact[i]);
        for r in 0..n {
            matrix.set(r, i, field.mul(pow[r], inv_fact));
        }
        pow = kg_k.algebra.multiply(&pow, &x);
    }
    let map = AlgebraMap::new(kgas.algebra.clone(), kg_k.algebra.clone(), matrix)?;
    if !map.is_injective() {
        return Err(CatalogError::NotHopfMap(usize::MAX));
    }
    if !is_hopf_map(kgas, kg_k, &map) {
        return Err(CatalogError::NotHopfMap(0));
    }
    Ok(OneParamSubgroup {
        height: 1,
        ext_degree: e,
        field: field.clone(),
        data: PsiData::Nilpotent(coeffs),
        kgas: kgas.clone(),
        ogas: ogas.clone(),
        hopf_map: map,
        kg_k: kg_k.clone(),
    })
}

#[allow(clippy::too_many_arguments)]
fn build_additive_psi(
    bundle: &GroupSchemeBundle,
    field: &FieldRef,
    s: usize,
    e: u8,
    coeffs: &[u16],
    ogas: &HopfRef,
    kgas: &HopfRef,
    kg_k: &HopfRef,
) -> Result<OneParamSubgroup, CatalogError> {
    let p = bundle.p as usize;
    let r = bundle.r;
    let big = p.pow(r as u32);
    let small = p.pow(s as u32);
    // O-side map: x -> sum a_i y^{p^i} in K[y]/(y^{p^s}); monomial images by
    // exact polynomial arithmetic
    let og_k = hopf_base_change(&bundle.og, field);
    let mut image_of_x = vec![0u16; small];
    for (i, &a) in coeffs.iter().enumerate() {
        let deg = p.pow(i as u32);
        if deg < small && a != 0 {
            image_of_x[deg] = field.add(image_of_x[deg], a);
        }
    }
    let mut o_matrix = Matrix::zeros(field.clone(), small, big);
    // x^n -> image^n
    let mut pow = vec![0u16; small];
    pow[0] = 1;
    for n in 0..big {
        for rix in 0..small {
            o_matrix.set(rix, n, pow[rix]);
        }
        pow = ogas.algebra.multiply(&pow, &image_of_x);
    }
    let o_map = AlgebraMap::new(og_k.algebra.clone(), ogas.algebra.clone(), o_matrix.clone())?;
    // closed embedding: the coordinate map must be surjective
    if o_matrix.rank() != small {
        return Err(CatalogError::NotHopfMap(usize::MAX));
    }
    if !is_hopf_map(&og_k, ogas, &o_map) {
        return Err(CatalogError::NotHopfMap(1));
    }
    // group algebra side: the transpose
    let map = AlgebraMap::new(
        kgas.algebra.clone(),
        kg_k.algebra.clone(),
        o_matrix.transpose(),
    )?;
    if !map.is_injective() {
        return Err(CatalogError::NotHopfMap(2));
    }
    if !is_hopf_map(kgas, kg_k, &map) {
        return Err(CatalogError::NotHopfMap(3));
    }
    Ok(OneParamSubgroup {
        height: s,
        ext_degree: e,
        field: field.clone(),
        data: PsiData::Additive(coeffs.to_vec()),
        kgas: kgas.clone(),
        ogas: ogas.clone(),
        hopf_map: map,
        kg_k: kg_k.clone(),
    })
}
