//! Coordinate rings of the catalog groups as Hopf algebras, built from
//! generator presentations and certified by the axiom checker.

use std::collections::HashMap;

use algebra_core::{Algebra, AlgebraRef, SparseVec};
use gf_core::{FieldRef, Matrix};
use serde::{Deserialize, Serialize};

use crate::error::CatalogError;
use hopf_core::{normalize_row, ComultRow, HopfAlgebra, HopfRef};

/// The supported catalog families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum GroupName {
    /// Frobenius kernels of the additive group, height r.
    Ga,
    /// First Frobenius kernel of SL_2.
    Sl2,
    /// First Frobenius kernel of the upper-triangular Borel in SL_2.
    Borel2,
    /// First Frobenius kernel of its unipotent radical.
    U2,
}

impl GroupName {
    pub fn parse(s: &str) -> Option<GroupName> {
        match s {
            "ga" => Some(GroupName::Ga),
            "sl2" => Some(GroupName::Sl2),
            "borel" | "borel2" => Some(GroupName::Borel2),
            "u" | "u2" => Some(GroupName::U2),
            _ => None,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            GroupName::Ga => "ga",
            GroupName::Sl2 => "sl2",
            GroupName::Borel2 => "borel2",
            GroupName::U2 => "u2",
        }
    }
}

/// One ring generator of a truncated coordinate ring: `wraps` generators
/// satisfy `g^bound = 1` (group-like coordinates), the rest `g^bound = 0`.
struct RingGen {
    label: String,
    bound: usize,
    wraps: bool,
}

/// The commutative monomial ring presentation plus indexing helpers.
pub struct MonomialRing {
    pub algebra: AlgebraRef,
    bounds: Vec<usize>,
}

impl MonomialRing {
    fn build(field: FieldRef, gens: &[RingGen]) -> Result<MonomialRing, CatalogError> {
        let bounds: Vec<usize> = gens.iter().map(|g| g.bound).collect();
        let wraps: Vec<bool> = gens.iter().map(|g| g.wraps).collect();
        let dim: usize = bounds.iter().product();
        let exps: Vec<Vec<usize>> = (0..dim).map(|i| Self::unrank(&bounds, i)).collect();
        let mut mult: Vec<SparseVec> = Vec::with_capacity(dim * dim);
        for a in 0..dim {
            for b in 0..dim {
                let mut e = Vec::with_capacity(bounds.len());
                let mut zero = false;
                for (g, bound) in bounds.iter().enumerate() {
                    let s = exps[a][g] + exps[b][g];
                    if wraps[g] {
                        e.push(s % bound);
                    } else if s >= *bound {
                        zero = true;
                        break;
                    } else {
                        e.push(s);
                    }
                }
                mult.push(if zero {
                    Vec::new()
                } else {
                    vec![(Self::rank(&bounds, &e) as u32, 1)]
                });
            }
        }
        let labels: Vec<String> = exps
            .iter()
            .map(|e| {
                let s: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x > 0)
                    .map(|(g, &x)| {
                        if x == 1 {
                            gens[g].label.clone()
                        } else {
                            format!("{}^{}", gens[g].label, x)
                        }
                    })
                    .collect();
                if s.is_empty() {
                    "1".into()
                } else {
                    s.join("")
                }
            })
            .collect();
        let mut unit = vec![0u16; dim];
        unit[0] = 1;
        // augmentation: evaluation at the identity element: wraps-generators
        // take value 1 there, nilpotent ones 0
        let mut eps = vec![0u16; dim];
        for (i, e) in exps.iter().enumerate() {
            let at_identity = e
                .iter()
                .enumerate()
                .all(|(g, &x)| x == 0 || wraps[g]);
            if at_identity {
                eps[i] = 1;
            }
        }
        let algebra = Algebra::build(field, labels, mult, unit, Some(eps))?;
        Ok(MonomialRing { algebra, bounds })
    }

    fn unrank(bounds: &[usize], mut i: usize) -> Vec<usize> {
        let mut e = vec![0usize; bounds.len()];
        for g in (0..bounds.len()).rev() {
            e[g] = i % bounds[g];
            i /= bounds[g];
        }
        e
    }

    fn rank(bounds: &[usize], e: &[usize]) -> usize {
        let mut i = 0usize;
        for (g, &x) in e.iter().enumerate() {
            i = i * bounds[g] + x;
        }
        i
    }

    pub fn exponents(&self, i: usize) -> Vec<usize> {
        Self::unrank(&self.bounds, i)
    }

    pub fn index(&self, e: &[usize]) -> usize {
        Self::rank(&self.bounds, e)
    }

    /// Basis index of a single generator.
    pub fn gen_index(&self, g: usize) -> usize {
        let mut e = vec![0usize; self.bounds.len()];
        e[g] = 1;
        self.index(&e)
    }

    pub fn num_gens(&self) -> usize {
        self.bounds.len()
    }
}

type Tensor = HashMap<(u32, u32), u16>;

fn tsq_one(dim: usize) -> Tensor {
    let mut t = HashMap::new();
    let _ = dim;
    t.insert((0u32, 0u32), 1u16);
    t
}

/// Multiply in `O (x) O` where `O` is a monomial ring (single-term rows).
fn tsq_mul(o: &AlgebraRef, x: &Tensor, y: &Tensor) -> Tensor {
    let f = o.field();
    let mut out: Tensor = HashMap::new();
    for (&(a1, b1), &c1) in x {
        for (&(a2, b2), &c2) in y {
            let left = o.product_basis(a1 as usize, a2 as usize);
            let right = o.product_basis(b1 as usize, b2 as usize);
            let c = f.mul(c1, c2);
            for &(ka, va) in &left {
                for &(kb, vb) in &right {
                    let e = out.entry((ka, kb)).or_insert(0);
                    *e = f.add(*e, f.mul(c, f.mul(va, vb)));
                }
            }
        }
    }
    out.retain(|_, v| *v != 0);
    out
}

fn tsq_pow(o: &AlgebraRef, x: &Tensor, n: usize) -> Tensor {
    let mut acc = tsq_one(o.dim());
    for _ in 0..n {
        acc = tsq_mul(o, &acc, x);
    }
    acc
}

/// Generator Hopf data: comultiplication in `O (x) O`, antipode in `O`.
struct GenHopfData {
    delta: Tensor,
    antipode: Vec<u16>,
}

/// Assemble a Hopf algebra on a monomial ring from generator data: the
/// comultiplication and antipode of a monomial are the products of those of
/// its generators. The counit is the ring's augmentation.
fn hopf_from_generators(
    ring: &MonomialRing,
    gen_data: &[GenHopfData],
) -> Result<HopfRef, CatalogError> {
    let o = &ring.algebra;
    let f = o.field().clone();
    let dim = o.dim();
    let mut comult: Vec<ComultRow> = Vec::with_capacity(dim);
    let mut antipode = Matrix::zeros(f.clone(), dim, dim);
    for m in 0..dim {
        let e = ring.exponents(m);
        let mut d = tsq_one(dim);
        let mut s = o.unit().to_vec();
        for (g, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            d = tsq_mul(o, &d, &tsq_pow(o, &gen_data[g].delta, x));
            for _ in 0..x {
                s = o.multiply(&s, &gen_data[g].antipode);
            }
        }
        let mut row: ComultRow = d.into_iter().map(|((i, j), c)| (i, j, c)).collect();
        normalize_row(&f, &mut row);
        comult.push(row);
        for (r, &v) in s.iter().enumerate() {
            if v != 0 {
                antipode.set(r, m, v);
            }
        }
    }
    let counit = o
        .augmentation()
        .expect("monomial rings are augmented")
        .to_vec();
    Ok(HopfAlgebra::new(o.clone(), comult, counit, antipode)?)
}

/// Dual-number value `(constant, t-coefficient)` of each ring generator at
/// `1 + tX`, for a tangent vector `X`. Used to realize Lie functionals.
pub struct TangentTable {
    pub label: String,
    pub values: Vec<(u16, u16)>,
}

/// All data defining one catalog coordinate ring.
pub struct GroupPresentation {
    pub ring: MonomialRing,
    pub hopf: HopfRef,
    pub tangents: Vec<TangentTable>,
    /// Quasi-logarithm seed elements of `O`, one per Lie basis vector,
    /// in the same order as `tangents`.
    pub quasilog_seed: Vec<Vec<u16>>,
}

/// Build the coordinate ring `O(G)` with its Hopf structure, Lie tangent
/// tables, and quasi-logarithm seed for a catalog entry.
pub fn build_presentation(
    name: GroupName,
    field: FieldRef,
    r: usize,
) -> Result<GroupPresentation, CatalogError> {
    let p = field.p() as usize;
    match name {
        GroupName::Ga => {
            let bound = p.pow(r as u32);
            let ring = MonomialRing::build(
                field.clone(),
                &[RingGen {
                    label: "x".into(),
                    bound,
                    wraps: false,
                }],
            )?;
            let o = &ring.algebra;
            let xi = ring.gen_index(0) as u32;
            let mut delta = Tensor::new();
            delta.insert((xi, 0), 1);
            delta.insert((0, xi), 1);
            let mut s = vec![0u16; o.dim()];
            s[xi as usize] = field.neg(1);
            let hopf = hopf_from_generators(&ring, &[GenHopfData { delta, antipode: s }])?;
            let tangents = vec![TangentTable {
                label: "d".into(),
                values: vec![(0, 1)],
            }];
            let mut seed = vec![0u16; o.dim()];
            seed[xi as usize] = 1;
            Ok(GroupPresentation {
                ring,
                hopf,
                tangents,
                quasilog_seed: vec![seed],
            })
        }
        GroupName::U2 => {
            let ring = MonomialRing::build(
                field.clone(),
                &[RingGen {
                    label: "b".into(),
                    bound: p,
                    wraps: false,
                }],
            )?;
            let o = &ring.algebra;
            let bi = ring.gen_index(0) as u32;
            let mut delta = Tensor::new();
            delta.insert((bi, 0), 1);
            delta.insert((0, bi), 1);
            let mut s = vec![0u16; o.dim()];
            s[bi as usize] = field.neg(1);
            let hopf = hopf_from_generators(&ring, &[GenHopfData { delta, antipode: s }])?;
            let tangents = vec![TangentTable {
                label: "e".into(),
                values: vec![(0, 1)],
            }];
            let mut seed = vec![0u16; o.dim()];
            seed[bi as usize] = 1;
            Ok(GroupPresentation {
                ring,
                hopf,
                tangents,
                quasilog_seed: vec![seed],
            })
        }
        GroupName::Borel2 => {
            let ring = MonomialRing::build(
                field.clone(),
                &[
                    RingGen {
                        label: "a".into(),
                        bound: p,
                        wraps: true,
                    },
                    RingGen {
                        label: "b".into(),
                        bound: p,
                        wraps: false,
                    },
                ],
            )?;
            let o = &ring.algebra;
            let ai = ring.index(&[1, 0]) as u32;
            let bi = ring.index(&[0, 1]) as u32;
            let a_inv = ring.index(&[p - 1, 0]) as u32;
            // Delta(a) = a (x) a ; Delta(b) = a (x) b + b (x) a^{-1}
            let mut da = Tensor::new();
            da.insert((ai, ai), 1);
            let mut db = Tensor::new();
            db.insert((ai, bi), 1);
            db.insert((bi, a_inv), 1);
            // S(a) = a^{-1}, S(b) = -b
            let mut sa = vec![0u16; o.dim()];
            sa[a_inv as usize] = 1;
            let mut sb = vec![0u16; o.dim()];
            sb[bi as usize] = field.neg(1);
            let hopf = hopf_from_generators(
                &ring,
                &[
                    GenHopfData {
                        delta: da,
                        antipode: sa,
                    },
                    GenHopfData {
                        delta: db,
                        antipode: sb,
                    },
                ],
            )?;
            // tangents at 1 + tX: e: a -> 1, b -> t ; h: a -> 1 + t, b -> 0
            let tangents = vec![
                TangentTable {
                    label: "e".into(),
                    values: vec![(1, 0), (0, 1)],
                },
                TangentTable {
                    label: "h".into(),
                    values: vec![(1, 1), (0, 0)],
                },
            ];
            // seeds: e* -> b ; h* -> (a - a^{-1})/2
            let mut seed_e = vec![0u16; o.dim()];
            seed_e[bi as usize] = 1;
            let inv2 = field.inv(2 % field.p());
            let mut seed_h = vec![0u16; o.dim()];
            seed_h[ai as usize] = inv2;
            seed_h[a_inv as usize] = field.neg(inv2);
            Ok(GroupPresentation {
                ring,
                hopf,
                tangents,
                quasilog_seed: vec![seed_e, seed_h],
            })
        }
        GroupName::Sl2 => {
            let ring = MonomialRing::build(
                field.clone(),
                &[
                    RingGen {
                        label: "a".into(),
                        bound: p,
                        wraps: true,
                    },
                    RingGen {
                        label: "b".into(),
                        bound: p,
                        wraps: false,
                    },
                    RingGen {
                        label: "c".into(),
                        bound: p,
                        wraps: false,
                    },
                ],
            )?;
            let o = &ring.algebra;
            let ai = ring.index(&[1, 0, 0]) as u32;
            let bi = ring.index(&[0, 1, 0]) as u32;
            let ci = ring.index(&[0, 0, 1]) as u32;
            // d = a^{p-1}(1 + bc)
            let mut one_plus_bc = vec![0u16; o.dim()];
            one_plus_bc[0] = 1;
            one_plus_bc[ring.index(&[0, 1, 1])] = 1;
            let mut apow = vec![0u16; o.dim()];
            apow[ring.index(&[p - 1, 0, 0])] = 1;
            let d_elem = o.multiply(&apow, &one_plus_bc);
            // Delta(a) = a (x) a + b (x) c
            let mut da = Tensor::new();
            da.insert((ai, ai), 1);
            da.insert((bi, ci), 1);
            // Delta(b) = a (x) b + b (x) d
            let mut db = Tensor::new();
            db.insert((ai, bi), 1);
            for (m, &v) in d_elem.iter().enumerate() {
                if v != 0 {
                    let e = db.entry((bi, m as u32)).or_insert(0);
                    *e = field.add(*e, v);
                }
            }
            // Delta(c) = c (x) a + d (x) c
            let mut dc = Tensor::new();
            dc.insert((ci, ai), 1);
            for (m, &v) in d_elem.iter().enumerate() {
                if v != 0 {
                    let e = dc.entry((m as u32, ci)).or_insert(0);
                    *e = field.add(*e, v);
                }
            }
            // S(a) = d, S(b) = -b, S(c) = -c
            let mut sb = vec![0u16; o.dim()];
            sb[bi as usize] = field.neg(1);
            let mut sc = vec![0u16; o.dim()];
            sc[ci as usize] = field.neg(1);
            let hopf = hopf_from_generators(
                &ring,
                &[
                    GenHopfData {
                        delta: da,
                        antipode: d_elem.clone(),
                    },
                    GenHopfData {
                        delta: db,
                        antipode: sb,
                    },
                    GenHopfData {
                        delta: dc,
                        antipode: sc,
                    },
                ],
            )?;
            // e: b -> t ; f: c -> t ; h: a -> 1 + t
            let tangents = vec![
                TangentTable {
                    label: "e".into(),
                    values: vec![(1, 0), (0, 1), (0, 0)],
                },
                TangentTable {
                    label: "f".into(),
                    values: vec![(1, 0), (0, 0), (0, 1)],
                },
                TangentTable {
                    label: "h".into(),
                    values: vec![(1, 1), (0, 0), (0, 0)],
                },
            ];
            // seeds: e* -> b, f* -> c, h* -> (a - d)/2
            let mut seed_e = vec![0u16; o.dim()];
            seed_e[bi as usize] = 1;
            let mut seed_f = vec![0u16; o.dim()];
            seed_f[ci as usize] = 1;
            let inv2 = field.inv(2 % field.p());
            let mut seed_h = vec![0u16; o.dim()];
            seed_h[ai as usize] = inv2;
            for (m, &v) in d_elem.iter().enumerate() {
                if v != 0 {
                    seed_h[m] = field.sub(seed_h[m], field.mul(inv2, v));
                }
            }
            Ok(GroupPresentation {
                ring,
                hopf,
                tangents,
                quasilog_seed: vec![seed_e, seed_f, seed_h],
            })
        }
    }
}

/// Evaluate the tangent functional of a tangent table on every monomial:
/// coordinates of the Lie element inside `kG` (dual basis of `O`).
pub fn tangent_functional(ring: &MonomialRing, table: &TangentTable) -> Vec<u16> {
    let o = &ring.algebra;
    let f = o.field();
    let dim = o.dim();
    let mut out = vec![0u16; dim];
    for m in 0..dim {
        let e = ring.exponents(m);
        // dual-number product of generator values
        let mut c0 = 1u16;
        let mut c1 = 0u16;
        for (g, &x) in e.iter().enumerate() {
            let (v0, v1) = table.values[g];
            for _ in 0..x {
                let n0 = f.mul(c0, v0);
                let n1 = f.add(f.mul(c0, v1), f.mul(c1, v0));
                c0 = n0;
                c1 = n1;
            }
        }
        out[m] = c1;
    }
    out
}
