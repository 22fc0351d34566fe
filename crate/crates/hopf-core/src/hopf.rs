//! Hopf structures over structure-constant algebras, and the exact axiom
//! checker that certifies every construction in this crate.

use std::collections::HashMap;
use std::sync::Arc;

use algebra_core::AlgebraRef;
use gf_core::{Matrix, SplitMix64};

use crate::error::HopfError;

/// Sparse comultiplication row: `Delta(b_k) = sum (i, j, c) . b_i (x) b_j`.
pub type ComultRow = Vec<(u32, u32, u16)>;

/// A Hopf algebra: underlying algebra plus comultiplication, counit, and
/// antipode. All layers are validated exactly through `check_hopf`.
pub struct HopfAlgebra {
    pub algebra: AlgebraRef,
    pub comult: Vec<ComultRow>,
    pub counit: Vec<u16>,
    pub antipode: Matrix,
}

impl std::fmt::Debug for HopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HopfAlgebra(dim {})", self.dim())
    }
}

pub type HopfRef = Arc<HopfAlgebra>;

/// Per-axiom outcome of the checker; `witness` carries the first failing
/// basis element or pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub coassociativity: Result<(), usize>,
    pub counit: Result<(), usize>,
    pub comult_multiplicative: Result<(), (usize, usize)>,
    pub counit_multiplicative: Result<(), (usize, usize)>,
    pub antipode: Result<(), usize>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.coassociativity.is_ok()
            && self.counit.is_ok()
            && self.comult_multiplicative.is_ok()
            && self.counit_multiplicative.is_ok()
            && self.antipode.is_ok()
    }

    pub fn first_error(&self) -> Option<HopfError> {
        if let Err(w) = self.coassociativity {
            return Some(HopfError::Coassociativity(w));
        }
        if let Err(w) = self.counit {
            return Some(HopfError::Counit(w));
        }
        if let Err((i, j)) = self.comult_multiplicative {
            return Some(HopfError::ComultNotMultiplicative(i, j));
        }
        if let Err((i, j)) = self.counit_multiplicative {
            return Some(HopfError::CounitNotMultiplicative(i, j));
        }
        if let Err(w) = self.antipode {
            return Some(HopfError::Antipode(w));
        }
        None
    }
}

/// Pair budget above which the multiplicativity axioms are spot-checked on
/// seeded random basis pairs.
const EXHAUSTIVE_PAIR_LIMIT: usize = 40_000;
const RANDOM_PAIRS: usize = 160;

impl HopfAlgebra {
    /// Construct and fully verify a Hopf algebra.
    pub fn new(
        algebra: AlgebraRef,
        comult: Vec<ComultRow>,
        counit: Vec<u16>,
        antipode: Matrix,
    ) -> Result<HopfRef, HopfError> {
        let h = HopfAlgebra {
            algebra,
            comult,
            counit,
            antipode,
        };
        let report = check_hopf(&h);
        match report.first_error() {
            None => Ok(Arc::new(h)),
            Some(e) => Err(e),
        }
    }

    /// Construct without running the axiom checker (used by serialization
    /// paths that re-verify separately).
    pub fn new_unchecked(
        algebra: AlgebraRef,
        comult: Vec<ComultRow>,
        counit: Vec<u16>,
        antipode: Matrix,
    ) -> HopfRef {
        Arc::new(HopfAlgebra {
            algebra,
            comult,
            counit,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// Apply the comultiplication to a coefficient vector, as a sparse map
    /// into the tensor square.
    pub fn comult_vec(&self, x: &[u16]) -> HashMap<(u32, u32), u16> {
        let f = self.algebra.field();
        let mut out = HashMap::new();
        for (k, &c) in x.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(i, j, v) in &self.comult[k] {
                let e = out.entry((i, j)).or_insert(0);
                *e = f.add(*e, f.mul(c, v));
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Counit of a coefficient vector.
    pub fn counit_vec(&self, x: &[u16]) -> u16 {
        let f = self.algebra.field();
        let mut acc = 0;
        for (&c, &e) in x.iter().zip(&self.counit) {
            if c != 0 && e != 0 {
                acc = f.add(acc, f.mul(c, e));
            }
        }
        acc
    }

    pub fn antipode_vec(&self, x: &[u16]) -> Vec<u16> {
        self.antipode.apply(x)
    }

    /// Iterated comultiplication `(Delta (x) id) Delta(b_k)` as sparse triples.
    pub fn comult2(&self, k: usize) -> HashMap<(u32, u32, u32), u16> {
        let f = self.algebra.field();
        let mut out = HashMap::new();
        for &(i, j, c) in &self.comult[k] {
            for &(a, b, v) in &self.comult[i as usize] {
                let e = out.entry((a, b, j)).or_insert(0);
                *e = f.add(*e, f.mul(c, v));
            }
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Basis (rows) of the primitive elements `Delta z = z (x) 1 + 1 (x) z`.
    pub fn primitives(&self) -> Matrix {
        let f = self.algebra.field().clone();
        let n = self.dim();
        let unit = self.algebra.unit();
        // collect constraints per tensor coordinate (i, j)
        let mut coeffs: HashMap<(u32, u32), Vec<u16>> = HashMap::new();
        for k in 0..n {
            for &(i, j, c) in &self.comult[k] {
                coeffs.entry((i, j)).or_insert_with(|| vec![0; n])[k] = c;
            }
        }
        for i in 0..n as u32 {
            for j in 0..n as u32 {
                // target (z (x) 1 + 1 (x) z)[(i,j)] = z_i u_j + u_i z_j
                let needs = unit[j as usize] != 0 || unit[i as usize] != 0;
                if needs {
                    coeffs.entry((i, j)).or_insert_with(|| vec![0; n]);
                }
            }
        }
        let mut rows: Vec<Vec<u16>> = Vec::new();
        let mut keys: Vec<(u32, u32)> = coeffs.keys().copied().collect();
        keys.sort_unstable();
        for key in keys {
            let (i, j) = key;
            let lhs = &coeffs[&key];
            let mut row = lhs.clone();
            // subtract z_i u_j + u_i z_j
            let uj = unit[j as usize];
            if uj != 0 {
                row[i as usize] = f.sub(row[i as usize], uj);
            }
            let ui = unit[i as usize];
            if ui != 0 {
                row[j as usize] = f.sub(row[j as usize], ui);
            }
            if row.iter().any(|&x| x != 0) {
                rows.push(row);
            }
        }
        if rows.is_empty() {
            return Matrix::identity(f, n);
        }
        Matrix::from_rows(f, rows).kernel_basis()
    }

    /// Exact cocommutativity test; returns the first failing basis element.
    pub fn is_cocommutative(&self) -> Result<(), usize> {
        let f = self.algebra.field();
        for k in 0..self.dim() {
            let mut m: HashMap<(u32, u32), u16> = HashMap::new();
            for &(i, j, c) in &self.comult[k] {
                let e = m.entry((i, j)).or_insert(0);
                *e = f.add(*e, c);
            }
            for &(i, j, c) in &self.comult[k] {
                let e = m.entry((j, i)).or_insert(0);
                *e = f.sub(*e, c);
            }
            if m.values().any(|&v| v != 0) {
                return Err(k);
            }
        }
        Ok(())
    }
}

/// Run every Hopf axiom exactly and report per-axiom outcomes. Large
/// algebras have the multiplicativity axioms sampled on seeded random pairs;
/// element-wise axioms (coassociativity, counit, antipode) are always
/// checked on every basis element.
pub fn check_hopf(h: &HopfAlgebra) -> AxiomReport {
    let n = h.dim();
    let f = h.algebra.field().clone();

    // coassociativity: (Delta (x) id) Delta = (id (x) Delta) Delta
    let mut coassociativity = Ok(());
    'ca: for k in 0..n {
        let left = h.comult2(k);
        let mut right: HashMap<(u32, u32, u32), u16> = HashMap::new();
        for &(i, j, c) in &h.comult[k] {
            for &(a, b, v) in &h.comult[j as usize] {
                let e = right.entry((i, a, b)).or_insert(0);
                *e = f.add(*e, f.mul(c, v));
            }
        }
        right.retain(|_, v| *v != 0);
        if left != right {
            coassociativity = Err(k);
            break 'ca;
        }
    }

    // counit: (eps (x) id) Delta(b) = b = (id (x) eps) Delta(b)
    let mut counit = Ok(());
    'cu: for k in 0..n {
        let mut left = vec![0u16; n];
        let mut right = vec![0u16; n];
        for &(i, j, c) in &h.comult[k] {
            let ei = h.counit[i as usize];
            if ei != 0 {
                left[j as usize] = f.add(left[j as usize], f.mul(c, ei));
            }
            let ej = h.counit[j as usize];
            if ej != 0 {
                right[i as usize] = f.add(right[i as usize], f.mul(c, ej));
            }
        }
        let mut target = vec![0u16; n];
        target[k] = 1;
        if left != target || right != target {
            counit = Err(k);
            break 'cu;
        }
    }

    // comult and counit are algebra maps
    let check_pair = |i: usize, j: usize| -> (bool, bool) {
        let prod = h.algebra.product_basis(i, j);
        // Delta(b_i b_j)
        let mut lhs: HashMap<(u32, u32), u16> = HashMap::new();
        for &(k, c) in &prod {
            for &(a, b, v) in &h.comult[k as usize] {
                let e = lhs.entry((a, b)).or_insert(0);
                *e = f.add(*e, f.mul(c, v));
            }
        }
        lhs.retain(|_, v| *v != 0);
        // Delta(b_i) Delta(b_j)
        let mut rhs: HashMap<(u32, u32), u16> = HashMap::new();
        for &(a1, b1, c1) in &h.comult[i] {
            for &(a2, b2, c2) in &h.comult[j] {
                let c = f.mul(c1, c2);
                for &(ka, va) in &h.algebra.product_basis(a1 as usize, a2 as usize) {
                    for &(kb, vb) in &h.algebra.product_basis(b1 as usize, b2 as usize) {
                        let e = rhs.entry((ka, kb)).or_insert(0);
                        *e = f.add(*e, f.mul(c, f.mul(va, vb)));
                    }
                }
            }
        }
        rhs.retain(|_, v| *v != 0);
        let comult_ok = lhs == rhs;
        // eps(b_i b_j) = eps(b_i) eps(b_j)
        let mut eps_prod = 0u16;
        for &(k, c) in &prod {
            eps_prod = f.add(eps_prod, f.mul(c, h.counit[k as usize]));
        }
        let counit_ok = eps_prod == f.mul(h.counit[i], h.counit[j]);
        (comult_ok, counit_ok)
    };
    let mut comult_multiplicative = Ok(());
    let mut counit_multiplicative = Ok(());
    // unit conditions: Delta(1) = 1 (x) 1, eps(1) = 1
    {
        let unit = h.algebra.unit().to_vec();
        let du = h.comult_vec(&unit);
        let mut expect: HashMap<(u32, u32), u16> = HashMap::new();
        for (i, &ui) in unit.iter().enumerate() {
            if ui == 0 {
                continue;
            }
            for (j, &uj) in unit.iter().enumerate() {
                if uj != 0 {
                    expect.insert((i as u32, j as u32), f.mul(ui, uj));
                }
            }
        }
        if du != expect {
            comult_multiplicative = Err((usize::MAX, usize::MAX));
        }
        if h.counit_vec(&unit) != 1 {
            counit_multiplicative = Err((usize::MAX, usize::MAX));
        }
    }
    if comult_multiplicative.is_ok() && counit_multiplicative.is_ok() {
        if n * n <= EXHAUSTIVE_PAIR_LIMIT {
            'mp: for i in 0..n {
                for j in 0..n {
                    let (cm, cu) = check_pair(i, j);
                    if !cm {
                        comult_multiplicative = Err((i, j));
                        break 'mp;
                    }
                    if !cu {
                        counit_multiplicative = Err((i, j));
                        break 'mp;
                    }
                }
            }
        } else {
            let mut rng = SplitMix64::new(0x40FF);
            for _ in 0..RANDOM_PAIRS {
                let i = rng.below(n as u64) as usize;
                let j = rng.below(n as u64) as usize;
                let (cm, cu) = check_pair(i, j);
                if !cm {
                    comult_multiplicative = Err((i, j));
                    break;
                }
                if !cu {
                    counit_multiplicative = Err((i, j));
                    break;
                }
            }
        }
    }

    // antipode: m (S (x) id) Delta(b) = eps(b) 1 = m (id (x) S) Delta(b)
    let mut antipode = Ok(());
    'an: for k in 0..n {
        let mut left = vec![0u16; n];
        let mut right = vec![0u16; n];
        for &(i, j, c) in &h.comult[k] {
            let si = antipode_column(h, i as usize);
            let bj = h.algebra.basis_vector(j as usize);
            let prod = h.algebra.multiply(&si, &bj);
            for (t, &v) in prod.iter().enumerate() {
                if v != 0 {
                    left[t] = f.add(left[t], f.mul(c, v));
                }
            }
            let sj = antipode_column(h, j as usize);
            let bi = h.algebra.basis_vector(i as usize);
            let prod = h.algebra.multiply(&bi, &sj);
            for (t, &v) in prod.iter().enumerate() {
                if v != 0 {
                    right[t] = f.add(right[t], f.mul(c, v));
                }
            }
        }
        let eps = h.counit[k];
        let target: Vec<u16> = h.algebra.unit().iter().map(|&u| f.mul(eps, u)).collect();
        if left != target || right != target {
            antipode = Err(k);
            break 'an;
        }
    }

    AxiomReport {
        coassociativity,
        counit,
        comult_multiplicative,
        counit_multiplicative,
        antipode,
    }
}

fn antipode_column(h: &HopfAlgebra, i: usize) -> Vec<u16> {
    let mut v = Vec::with_capacity(h.dim());
    for r in 0..h.dim() {
        v.push(h.antipode.get(r, i));
    }
    v
}

/// Sparse helper: normalize a comult row (sorted, zero-free).
pub fn normalize_row(field: &gf_core::FieldRef, row: &mut ComultRow) {
    let mut map: HashMap<(u32, u32), u16> = HashMap::new();
    for &(i, j, c) in row.iter() {
        let e = map.entry((i, j)).or_insert(0);
        *e = field.add(*e, c);
    }
    let mut v: Vec<((u32, u32), u16)> = map.into_iter().filter(|&(_, c)| c != 0).collect();
    v.sort_unstable_by_key(|&(k, _)| k);
    *row = v.into_iter().map(|((i, j), c)| (i, j, c)).collect();
}

