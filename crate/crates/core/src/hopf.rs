//! Finite-dimensional algebras, bialgebras and Hopf algebras given by
//! structure tensors, with exact axiom checkers.
//!
//! Conventions, for a basis `e_0 .. e_{n-1}`:
//!
//! * `mult[(i*n + j)*n + k]` is the coefficient of `e_k` in `e_i·e_j`;
//! * `unit[k]` is the coefficient of `e_k` in the unit;
//! * `comult[(i*n + j)*n + k]` is the coefficient of `e_j⊗e_k` in `Δ(e_i)`;
//! * `counit[i] = ε(e_i)`;
//! * `antipode` is the matrix of `S` acting on coordinate columns, so column
//!   `c` holds the coordinates of `S(e_c)`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckRecord, Failure, Report};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    pub dim: usize,
    pub mult: Vec<Scalar>,
    pub unit: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfPresentation {
    pub alg: AlgebraPresentation,
    pub comult: Vec<Scalar>,
    pub counit: Vec<Scalar>,
    pub antipode: Matrix,
}

/// Whether the antipode is an anti-homomorphism and an involution. These are
/// reported, never enforced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AntipodeProperties {
    pub anti_multiplicative: bool,
    pub anti_comultiplicative: bool,
    pub involutive: bool,
}

type Sparse<const N: usize> = BTreeMap<[usize; N], Scalar>;

fn accumulate<const N: usize>(map: &mut Sparse<N>, key: [usize; N], value: Scalar) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(slot) => {
            *slot = &*slot + &value;
            if slot.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

/// Lists every coordinate where the two sparse vectors differ.
fn diff<const N: usize>(prefix: &[usize], lhs: &Sparse<N>, rhs: &Sparse<N>) -> Vec<Failure> {
    let zero = Scalar::zero();
    let mut keys: Vec<&[usize; N]> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|k| {
            let l = lhs.get(k).unwrap_or(&zero);
            let r = rhs.get(k).unwrap_or(&zero);
            (l != r).then(|| Failure {
                indices: prefix.iter().chain(k.iter()).copied().collect(),
                lhs: l.to_string(),
                rhs: r.to_string(),
            })
        })
        .collect()
}

fn sparse_vec(v: &[Scalar]) -> Sparse<1> {
    v.iter()
        .enumerate()
        .filter(|(_, s)| !s.is_zero())
        .map(|(k, s)| ([k], s.clone()))
        .collect()
}

fn basis_vec(i: usize) -> Sparse<1> {
    BTreeMap::from([([i], Scalar::one())])
}

/// Nonzero entries of the structure tensors, indexed for fast products.
struct Tables {
    n: usize,
    mult: Vec<Vec<(usize, Scalar)>>,
    /// `partners[p]` lists the `r` with `e_p·e_r ≠ 0`.
    partners: Vec<Vec<usize>>,
    unit: Sparse<1>,
    comult: Vec<Vec<(usize, usize, Scalar)>>,
    counit: Vec<Scalar>,
    antipode: Vec<Vec<(usize, Scalar)>>,
}

impl Tables {
    fn algebra(a: &AlgebraPresentation) -> Self {
        let n = a.dim;
        let mult = (0..n * n)
            .map(|ij| {
                (0..n)
                    .filter_map(|k| {
                        let c = &a.mult[ij * n + k];
                        (!c.is_zero()).then(|| (k, c.clone()))
                    })
                    .collect()
            })
            .collect::<Vec<Vec<_>>>();
        let partners = (0..n)
            .map(|p| (0..n).filter(|r| !mult[p * n + r].is_empty()).collect())
            .collect();
        Tables {
            n,
            mult,
            partners,
            unit: sparse_vec(&a.unit),
            comult: Vec::new(),
            counit: Vec::new(),
            antipode: Vec::new(),
        }
    }

    fn hopf(h: &HopfPresentation) -> Self {
        let mut t = Self::algebra(&h.alg);
        let n = t.n;
        t.comult = (0..n)
            .map(|i| {
                let mut terms = Vec::new();
                for j in 0..n {
                    for k in 0..n {
                        let c = &h.comult[(i * n + j) * n + k];
                        if !c.is_zero() {
                            terms.push((j, k, c.clone()));
                        }
                    }
                }
                terms
            })
            .collect();
        t.counit = h.counit.clone();
        t.antipode = (0..n)
            .map(|c| {
                (0..n)
                    .filter_map(|r| {
                        let v = h.antipode.get(r, c);
                        (!v.is_zero()).then(|| (r, v.clone()))
                    })
                    .collect()
            })
            .collect();
        t
    }

    fn mul(&self, x: &Sparse<1>, y: &Sparse<1>) -> Sparse<1> {
        let mut out = BTreeMap::new();
        for ([i], a) in x {
            for ([j], b) in y {
                let ab = a * b;
                for (k, c) in &self.mult[i * self.n + j] {
                    accumulate(&mut out, [*k], &ab * c);
                }
            }
        }
        out
    }

    fn mul2(&self, x: &Sparse<2>, y: &Sparse<2>) -> Sparse<2> {
        // y grouped by first leg, so that only pairs with e_p·e_r ≠ 0 are visited.
        let mut by_first: BTreeMap<usize, Vec<(usize, &Scalar)>> = BTreeMap::new();
        for ([r, s], b) in y {
            by_first.entry(*r).or_default().push((*s, b));
        }
        let mut out = BTreeMap::new();
        for ([p, q], a) in x {
            for r in &self.partners[*p] {
                let Some(row) = by_first.get(r) else { continue };
                for (s, b) in row {
                    let right = &self.mult[q * self.n + s];
                    if right.is_empty() {
                        continue;
                    }
                    let ab = a * *b;
                    for (k, c) in &self.mult[p * self.n + r] {
                        let abc = &ab * c;
                        for (l, d) in right {
                            accumulate(&mut out, [*k, *l], &abc * d);
                        }
                    }
                }
            }
        }
        out
    }

    fn comul(&self, x: &Sparse<1>) -> Sparse<2> {
        let mut out = BTreeMap::new();
        for ([i], a) in x {
            for (j, k, c) in &self.comult[*i] {
                accumulate(&mut out, [*j, *k], a * c);
            }
        }
        out
    }

    fn counit(&self, x: &Sparse<1>) -> Scalar {
        x.iter().map(|([i], a)| a * &self.counit[*i]).sum()
    }

    fn antipode(&self, x: &Sparse<1>) -> Sparse<1> {
        let mut out = BTreeMap::new();
        for ([c], a) in x {
            for (r, s) in &self.antipode[*c] {
                accumulate(&mut out, [*r], a * s);
            }
        }
        out
    }

    fn basis_product(&self, i: usize, j: usize) -> Sparse<1> {
        self.mult[i * self.n + j]
            .iter()
            .map(|(k, c)| ([*k], c.clone()))
            .collect()
    }

    /// m ∘ (f ⊗ g) ∘ Δ applied to `e_i`.
    fn convolve(&self, i: usize, left_s: bool) -> Sparse<1> {
        let mut out = BTreeMap::new();
        for (j, k, c) in &self.comult[i] {
            let (x, y) = if left_s {
                (self.antipode(&basis_vec(*j)), basis_vec(*k))
            } else {
                (basis_vec(*j), self.antipode(&basis_vec(*k)))
            };
            for (key, v) in self.mul(&x, &y) {
                accumulate(&mut out, key, c * &v);
            }
        }
        out
    }
}

impl AlgebraPresentation {
    pub fn check_shape(&self) -> Result<()> {
        let n = self.dim;
        if n == 0 {
            return Err(Error::shape("algebra dimension must be positive"));
        }
        if self.mult.len() != n * n * n {
            return Err(Error::shape(format!(
                "mult has {} entries, expected {}",
                self.mult.len(),
                n * n * n
            )));
        }
        if self.unit.len() != n {
            return Err(Error::shape(format!(
                "unit has {} entries, expected {n}",
                self.unit.len()
            )));
        }
        Ok(())
    }

    pub fn mult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.mult[(i * self.dim + j) * self.dim + k]
    }

    /// Product of two elements given in coordinates.
    pub fn multiply(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.mult_coeff(i, j, k);
                    if !c.is_zero() {
                        *slot = &*slot + &(&ab * c);
                    }
                }
            }
        }
        out
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim;
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.mult_coeff(i, j, k) == self.mult_coeff(j, i, k))))
    }
}

impl HopfPresentation {
    pub fn dim(&self) -> usize {
        self.alg.dim
    }

    pub fn check_shape(&self) -> Result<()> {
        self.alg.check_shape()?;
        let n = self.dim();
        if self.comult.len() != n * n * n {
            return Err(Error::shape(format!(
                "comult has {} entries, expected {}",
                self.comult.len(),
                n * n * n
            )));
        }
        if self.counit.len() != n {
            return Err(Error::shape(format!(
                "counit has {} entries, expected {n}",
                self.counit.len()
            )));
        }
        if self.antipode.rows() != n || self.antipode.cols() != n {
            return Err(Error::shape(format!(
                "antipode is {}x{}, expected {n}x{n}",
                self.antipode.rows(),
                self.antipode.cols()
            )));
        }
        Ok(())
    }

    pub fn comult_coeff(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.comult[(i * n + j) * n + k]
    }

    /// Δ of an element in coordinates, as a flat `n*n` vector indexed `j*n + k`.
    pub fn comultiply(&self, x: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n * n];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (jk, slot) in out.iter_mut().enumerate() {
                let c = &self.comult[i * n * n + jk];
                if !c.is_zero() {
                    *slot = &*slot + &(a * c);
                }
            }
        }
        out
    }

    pub fn apply_counit(&self, x: &[Scalar]) -> Scalar {
        x.iter().zip(&self.counit).map(|(a, e)| a * e).sum()
    }

    pub fn apply_antipode(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.antipode.mul(&Matrix::column_vector(x.to_vec())).into_entries()
    }

    pub fn is_cocommutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| (0..n).all(|k| self.comult_coeff(i, j, k) == self.comult_coeff(i, k, j))))
    }

    pub fn antipode_properties(&self) -> Result<AntipodeProperties> {
        self.check_shape()?;
        let t = Tables::hopf(self);
        let n = t.n;
        let anti_multiplicative = (0..n).into_par_iter().all(|i| {
            (0..n).all(|j| {
                let lhs = t.antipode(&t.basis_product(i, j));
                let rhs = t.mul(&t.antipode(&basis_vec(j)), &t.antipode(&basis_vec(i)));
                lhs == rhs
            })
        });
        let anti_comultiplicative = (0..n).into_par_iter().all(|i| {
            let lhs = t.comul(&t.antipode(&basis_vec(i)));
            let mut rhs = BTreeMap::new();
            for (j, k, c) in &t.comult[i] {
                for ([p], a) in t.antipode(&basis_vec(*k)) {
                    for ([q], b) in t.antipode(&basis_vec(*j)) {
                        accumulate(&mut rhs, [p, q], &(c * &a) * &b);
                    }
                }
            }
            lhs == rhs
        });
        let involutive = self.antipode.mul(&self.antipode).is_identity();
        Ok(AntipodeProperties {
            anti_multiplicative,
            anti_comultiplicative,
            involutive,
        })
    }
}

/// Associativity and both unit laws, on every basis triple.
pub fn check_algebra(a: &AlgebraPresentation) -> Result<Report> {
    a.check_shape()?;
    let t = Tables::algebra(a);
    let n = t.n;
    let assoc: Vec<Failure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let t = &t;
            (0..n).flat_map(move |j| {
                let ij = t.basis_product(i, j);
                (0..n)
                    .flat_map(move |k| {
                        let lhs = t.mul(&ij, &basis_vec(k));
                        let rhs = t.mul(&basis_vec(i), &t.basis_product(j, k));
                        diff(&[i, j, k], &lhs, &rhs)
                    })
                    .collect::<Vec<_>>()
            })
        })
        .collect();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for i in 0..n {
        let ei = basis_vec(i);
        left.extend(diff(&[i], &t.mul(&t.unit, &ei), &ei));
        right.extend(diff(&[i], &t.mul(&ei, &t.unit), &ei));
    }
    let mut r = Report::new();
    r.push(CheckRecord::new("associativity", assoc));
    r.push(CheckRecord::new("left_unit", left));
    r.push(CheckRecord::new("right_unit", right));
    Ok(r)
}

/// Coalgebra axioms plus compatibility of Δ and ε with the algebra structure.
pub fn check_bialgebra(h: &HopfPresentation) -> Result<Report> {
    h.check_shape()?;
    let t = Tables::hopf(h);
    let n = t.n;

    let coassoc: Vec<Failure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut lhs = BTreeMap::new();
            let mut rhs = BTreeMap::new();
            for (j, k, c) in &t.comult[i] {
                for (p, q, d) in &t.comult[*j] {
                    accumulate(&mut lhs, [*p, *q, *k], c * d);
                }
                for (p, q, d) in &t.comult[*k] {
                    accumulate(&mut rhs, [*j, *p, *q], c * d);
                }
            }
            diff(&[i], &lhs, &rhs)
        })
        .collect();

    let mut left_counit = Vec::new();
    let mut right_counit = Vec::new();
    for i in 0..n {
        let mut l = BTreeMap::new();
        let mut r = BTreeMap::new();
        for (j, k, c) in &t.comult[i] {
            accumulate(&mut l, [*k], c * &t.counit[*j]);
            accumulate(&mut r, [*j], c * &t.counit[*k]);
        }
        left_counit.extend(diff(&[i], &l, &basis_vec(i)));
        right_counit.extend(diff(&[i], &r, &basis_vec(i)));
    }

    let comult_mult: Vec<Failure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let t = &t;
            let di = t.comul(&basis_vec(i));
            (0..n)
                .flat_map(move |j| {
                    let lhs = t.comul(&t.basis_product(i, j));
                    let rhs = t.mul2(&di, &t.comul(&basis_vec(j)));
                    diff(&[i, j], &lhs, &rhs)
                })
                .collect::<Vec<_>>()
        })
        .collect();

    let du = t.comul(&t.unit);
    let mut uu = BTreeMap::new();
    for ([p], a) in &t.unit {
        for ([q], b) in &t.unit {
            accumulate(&mut uu, [*p, *q], a * b);
        }
    }
    let comult_unit = diff(&[], &du, &uu);

    let mut counit_mult = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = t.counit(&t.basis_product(i, j));
            let rhs = &t.counit[i] * &t.counit[j];
            if lhs != rhs {
                counit_mult.push(Failure {
                    indices: vec![i, j],
                    lhs: lhs.to_string(),
                    rhs: rhs.to_string(),
                });
            }
        }
    }
    let eu = t.counit(&t.unit);
    let counit_unit = if eu.is_one() {
        Vec::new()
    } else {
        vec![Failure {
            indices: vec![],
            lhs: eu.to_string(),
            rhs: "1".into(),
        }]
    };

    let mut r = Report::new();
    r.push(CheckRecord::new("coassociativity", coassoc));
    r.push(CheckRecord::new("left_counit", left_counit));
    r.push(CheckRecord::new("right_counit", right_counit));
    r.push(CheckRecord::new("comult_multiplicative", comult_mult));
    r.push(CheckRecord::new("comult_unit", comult_unit));
    r.push(CheckRecord::new("counit_multiplicative", counit_mult));
    r.push(CheckRecord::new("counit_unit", counit_unit));
    Ok(r)
}

/// Both antipode identities `m(S⊗id)Δ = uε = m(id⊗S)Δ` on every basis
/// element, plus an informational record on the antipode's other properties.
pub fn check_antipode(h: &HopfPresentation) -> Result<Report> {
    h.check_shape()?;
    let t = Tables::hopf(h);
    let n = t.n;
    let expected = |i: usize| -> Sparse<1> {
        let mut m = BTreeMap::new();
        for ([k], u) in &t.unit {
            accumulate(&mut m, [*k], u * &t.counit[i]);
        }
        m
    };
    let left: Vec<Failure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| diff(&[i], &t.convolve(i, true), &expected(i)))
        .collect();
    let right: Vec<Failure> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| diff(&[i], &t.convolve(i, false), &expected(i)))
        .collect();
    let props = h.antipode_properties()?;
    let mut r = Report::new();
    r.push(CheckRecord::new("antipode_left", left));
    r.push(CheckRecord::new("antipode_right", right));
    r.push(CheckRecord::pass("antipode_flags").with_note(format!(
        "anti-multiplicative: {}, anti-comultiplicative: {}, S^2 = id: {}",
        props.anti_multiplicative, props.anti_comultiplicative, props.involutive
    )));
    Ok(r)
}

/// Runs all three checkers and concatenates their reports.
pub fn check_hopf(h: &HopfPresentation) -> Result<Report> {
    let mut r = check_algebra(&h.alg)?;
    r.extend(check_bialgebra(h)?);
    r.extend(check_antipode(h)?);
    Ok(r)
}

/// Tensor product Hopf algebra on the basis `e_i ⊗ f_j`, indexed `i*n2 + j`.
pub fn tensor_hopf(h1: &HopfPresentation, h2: &HopfPresentation) -> HopfPresentation {
    let (n1, n2) = (h1.dim(), h2.dim());
    let n = n1 * n2;
    let idx = |i: usize, j: usize| i * n2 + j;
    let mut mult = vec![Scalar::zero(); n * n * n];
    let mut comult = vec![Scalar::zero(); n * n * n];
    for i in 0..n1 {
        for k in 0..n1 {
            for p in 0..n1 {
                let a = h1.alg.mult_coeff(i, k, p);
                let c = h1.comult_coeff(i, k, p);
                if a.is_zero() && c.is_zero() {
                    continue;
                }
                for j in 0..n2 {
                    for l in 0..n2 {
                        for q in 0..n2 {
                            let b = h2.alg.mult_coeff(j, l, q);
                            if !a.is_zero() && !b.is_zero() {
                                mult[(idx(i, j) * n + idx(k, l)) * n + idx(p, q)] = a * b;
                            }
                            let d = h2.comult_coeff(j, l, q);
                            if !c.is_zero() && !d.is_zero() {
                                comult[(idx(i, j) * n + idx(k, l)) * n + idx(p, q)] = c * d;
                            }
                        }
                    }
                }
            }
        }
    }
    let unit = (0..n).map(|x| &h1.alg.unit[x / n2] * &h2.alg.unit[x % n2]).collect();
    let counit = (0..n).map(|x| &h1.counit[x / n2] * &h2.counit[x % n2]).collect();
    HopfPresentation {
        alg: AlgebraPresentation { dim: n, mult, unit },
        comult,
        counit,
        antipode: h1.antipode.kron(&h2.antipode),
    }
}
