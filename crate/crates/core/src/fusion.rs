//! Skeletal fusion categories, fiber functor data, and their coherence
//! verifiers.
//!
//! Index conventions. For simples `a, b, c, d`:
//!
//! * The multiplicity space of the left bracketing `(a⊗b)⊗c → d` is
//!   `⊕_e K^{N[a][b][e]} ⊗ K^{N[e][c][d]}`, enumerated lexicographically by
//!   `(e, μ, ν)`. The right bracketing `a⊗(b⊗c) → d` is
//!   `⊕_f K^{N[b][c][f]} ⊗ K^{N[a][f][d]}`, enumerated by `(f, κ, λ)`.
//!   `F^{abc}_d` maps the former to the latter and acts on column vectors.
//! * `J[a][b]` maps `F(a)⊗F(b)` (Kronecker order) to
//!   `⊕_c K^{N[a][b][c]} ⊗ F(c)`, blocks in simple order, multiplicity index
//!   outer and `F(c)` coordinate inner.

use rayon::prelude::*;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::report::{CheckRecord, Failure, Report};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionSkeleton {
    pub simples: Vec<String>,
    pub unit: usize,
    /// `fusion[(a*r + b)*r + c]` is the multiplicity of `c` in `a⊗b`.
    pub fusion: Vec<u32>,
    /// `assoc[((a*r + b)*r + c)*r + d]` is `F^{abc}_d`.
    pub assoc: Vec<Matrix>,
    pub dual: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberData {
    pub dims: Vec<usize>,
    /// `tensorator[a*r + b]` is `J_{a,b}`.
    pub tensorator: Vec<Matrix>,
    /// The isomorphism `K → F(1)`.
    pub iota: Scalar,
    /// Coefficients of `ev_a` in the basis of `Hom(a°⊗a, 1)`.
    pub ev: Vec<Vec<Scalar>>,
    /// Coefficients of `coev_a` in the basis of `Hom(1, a⊗a°)`.
    pub coev: Vec<Vec<Scalar>>,
}

impl FusionSkeleton {
    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> usize {
        let r = self.rank();
        self.fusion[(a * r + b) * r + c] as usize
    }

    pub fn f_symbol(&self, a: usize, b: usize, c: usize, d: usize) -> &Matrix {
        let r = self.rank();
        &self.assoc[((a * r + b) * r + c) * r + d]
    }

    pub fn left_dim(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        (0..self.rank()).map(|e| self.n(a, b, e) * self.n(e, c, d)).sum()
    }

    pub fn right_dim(&self, a: usize, b: usize, c: usize, d: usize) -> usize {
        (0..self.rank()).map(|f| self.n(b, c, f) * self.n(a, f, d)).sum()
    }

    /// Position of `(e, μ, ν)` in the left multiplicity space of `(a,b,c) → d`.
    pub fn left_index(&self, [a, b, c, d]: [usize; 4], e: usize, mu: usize, nu: usize) -> usize {
        let off: usize = (0..e).map(|x| self.n(a, b, x) * self.n(x, c, d)).sum();
        off + mu * self.n(e, c, d) + nu
    }

    /// Position of `(f, κ, λ)` in the right multiplicity space of `(a,b,c) → d`.
    pub fn right_index(&self, [a, b, c, d]: [usize; 4], f: usize, kappa: usize, lambda: usize) -> usize {
        let off: usize = (0..f).map(|x| self.n(b, c, x) * self.n(a, x, d)).sum();
        off + kappa * self.n(a, f, d) + lambda
    }

    fn right_basis(&self, [a, b, c, d]: [usize; 4]) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for f in 0..self.rank() {
            for k in 0..self.n(b, c, f) {
                for l in 0..self.n(a, f, d) {
                    out.push((f, k, l));
                }
            }
        }
        out
    }

    /// Shape validation only; axioms are checked by [`verify_pentagon`].
    pub fn validate(&self) -> Result<()> {
        let r = self.rank();
        if r == 0 {
            return Err(Error::shape("skeleton has no simples"));
        }
        if self.unit >= r {
            return Err(Error::shape(format!("unit index {} out of range", self.unit)));
        }
        if self.fusion.len() != r * r * r {
            return Err(Error::shape(format!(
                "fusion has {} entries, expected {}",
                self.fusion.len(),
                r * r * r
            )));
        }
        if self.dual.len() != r || self.dual.iter().any(|&x| x >= r) {
            return Err(Error::shape("dual must assign an in-range simple to every simple"));
        }
        if self.assoc.len() != r * r * r * r {
            return Err(Error::shape(format!(
                "assoc has {} entries, expected {}",
                self.assoc.len(),
                r.pow(4)
            )));
        }
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for d in 0..r {
                        let f = self.f_symbol(a, b, c, d);
                        let (rows, cols) = (self.right_dim(a, b, c, d), self.left_dim(a, b, c, d));
                        if f.rows() != rows || f.cols() != cols {
                            return Err(Error::shape(format!(
                                "F^({a},{b},{c})_{d} is {}x{}, expected {rows}x{cols}",
                                f.rows(),
                                f.cols()
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

impl FiberData {
    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn j(&self, a: usize, b: usize) -> &Matrix {
        &self.tensorator[a * self.rank() + b]
    }

    /// Row offset of the `c` block inside the codomain of `J_{a,b}`.
    pub fn block_offset(&self, k: &FusionSkeleton, a: usize, b: usize, c: usize) -> usize {
        (0..c).map(|x| k.n(a, b, x) * self.dims[x]).sum()
    }

    pub fn validate(&self, k: &FusionSkeleton) -> Result<()> {
        let r = k.rank();
        if self.dims.len() != r {
            return Err(Error::shape(format!(
                "dims has {} entries for {r} simples",
                self.dims.len()
            )));
        }
        if self.dims[k.unit] != 1 {
            return Err(Error::shape("the unit object must have dimension 1"));
        }
        if self.dims.contains(&0) {
            return Err(Error::shape("every simple needs a nonzero dimension"));
        }
        if self.iota.is_zero() {
            return Err(Error::shape("iota must be nonzero"));
        }
        if self.tensorator.len() != r * r {
            return Err(Error::shape(format!(
                "tensorator has {} entries, expected {}",
                self.tensorator.len(),
                r * r
            )));
        }
        for a in 0..r {
            for b in 0..r {
                let n = self.dims[a] * self.dims[b];
                let cod: usize = (0..r).map(|c| k.n(a, b, c) * self.dims[c]).sum();
                let j = self.j(a, b);
                if cod != n {
                    return Err(Error::shape(format!(
                        "F({a})⊗F({b}) has dimension {n} but the fusion rule gives {cod}"
                    )));
                }
                if j.rows() != n || j.cols() != n {
                    return Err(Error::shape(format!("J[{a},{b}] must be {n}x{n}")));
                }
            }
        }
        if self.ev.len() != r || self.coev.len() != r {
            return Err(Error::shape("ev and coev need one coefficient vector per simple"));
        }
        for a in 0..r {
            let ad = k.dual[a];
            if self.ev[a].len() != k.n(ad, a, k.unit) {
                return Err(Error::shape(format!("ev[{a}] must have length N[{ad}][{a}][unit]")));
            }
            if self.coev[a].len() != k.n(a, ad, k.unit) {
                return Err(Error::shape(format!("coev[{a}] must have length N[{a}][{ad}][unit]")));
            }
        }
        Ok(())
    }

    /// `F(a)⊗F(b)⊗F(c) → ⊕_d L_d ⊗ F(d)` through `J_{a,b}` then `J_{e,c}`.
    pub fn left_tree(&self, k: &FusionSkeleton, a: usize, b: usize, c: usize) -> Matrix {
        let r = k.rank();
        let d_ = &self.dims;
        let (db, dc) = (d_[b], d_[c]);
        let ncols = d_[a] * db * dc;
        let offsets = prefix(r, |d| k.left_dim(a, b, c, d) * d_[d]);
        let mut m = vec![Scalar::zero(); offsets[r] * ncols];
        let jab = self.j(a, b);
        for e in 0..r {
            let jec = self.j(e, c);
            for mu in 0..k.n(a, b, e) {
                for x in 0..d_[e] {
                    let row_ab = self.block_offset(k, a, b, e) + mu * d_[e] + x;
                    for d in 0..r {
                        for nu in 0..k.n(e, c, d) {
                            let l = k.left_index([a, b, c, d], e, mu, nu);
                            for y in 0..d_[d] {
                                let row_ec = self.block_offset(k, e, c, d) + nu * d_[d] + y;
                                let out = offsets[d] + l * d_[d] + y;
                                for z in 0..dc {
                                    let s = jec.get(row_ec, x * dc + z);
                                    if s.is_zero() {
                                        continue;
                                    }
                                    for wv in 0..d_[a] * db {
                                        let t = jab.get(row_ab, wv);
                                        if !t.is_zero() {
                                            let slot = &mut m[out * ncols + wv * dc + z];
                                            *slot = &*slot + &(s * t);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Matrix::new(offsets[r], ncols, m).expect("sized above")
    }

    /// `F(a)⊗F(b)⊗F(c) → ⊕_d R_d ⊗ F(d)` through `J_{b,c}` then `J_{a,f}`.
    pub fn right_tree(&self, k: &FusionSkeleton, a: usize, b: usize, c: usize) -> Matrix {
        let r = k.rank();
        let d_ = &self.dims;
        let (da, db, dc) = (d_[a], d_[b], d_[c]);
        let ncols = da * db * dc;
        let offsets = prefix(r, |d| k.right_dim(a, b, c, d) * d_[d]);
        let mut m = vec![Scalar::zero(); offsets[r] * ncols];
        let jbc = self.j(b, c);
        for f in 0..r {
            let jaf = self.j(a, f);
            for kappa in 0..k.n(b, c, f) {
                for t in 0..d_[f] {
                    let row_bc = self.block_offset(k, b, c, f) + kappa * d_[f] + t;
                    for d in 0..r {
                        for lambda in 0..k.n(a, f, d) {
                            let ri = k.right_index([a, b, c, d], f, kappa, lambda);
                            for y in 0..d_[d] {
                                let row_af = self.block_offset(k, a, f, d) + lambda * d_[d] + y;
                                let out = offsets[d] + ri * d_[d] + y;
                                for w in 0..da {
                                    let s = jaf.get(row_af, w * d_[f] + t);
                                    if s.is_zero() {
                                        continue;
                                    }
                                    for vz in 0..db * dc {
                                        let u = jbc.get(row_bc, vz);
                                        if !u.is_zero() {
                                            let slot = &mut m[out * ncols + w * db * dc + vz];
                                            *slot = &*slot + &(s * u);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Matrix::new(offsets[r], ncols, m).expect("sized above")
    }

    /// The pairing `p_a : F(a°)⊗F(a) → K` as a `d_{a°} × d_a` matrix
    /// `P[i][j] = p_a(e_i ⊗ f_j)`.
    pub fn pairing(&self, k: &FusionSkeleton, a: usize) -> Matrix {
        let ad = k.dual[a];
        let (dd, da) = (self.dims[ad], self.dims[a]);
        let j = self.j(ad, a);
        let off = self.block_offset(k, ad, a, k.unit);
        let iota_inv = self.iota.inv().expect("iota validated nonzero");
        let row: Vec<Scalar> = (0..dd * da)
            .map(|col| {
                let s: Scalar = self.ev[a]
                    .iter()
                    .enumerate()
                    .map(|(mu, c)| c * j.get(off + mu, col))
                    .sum();
                &s * &iota_inv
            })
            .collect();
        Matrix::new(dd, da, row).expect("sized above")
    }

    /// The copairing `q_a : K → F(a)⊗F(a°)` as a `d_a × d_{a°}` matrix.
    pub fn copairing(&self, k: &FusionSkeleton, a: usize) -> Result<Matrix> {
        let ad = k.dual[a];
        let (da, dd) = (self.dims[a], self.dims[ad]);
        let jinv = self.j(a, ad).inverse().ok_or(Error::NonInvertibleJ { a, b: ad })?;
        let off = self.block_offset(k, a, ad, k.unit);
        let mut v = vec![Scalar::zero(); da * dd];
        for (mu, c) in self.coev[a].iter().enumerate() {
            let s = c * &self.iota;
            for (i, slot) in v.iter_mut().enumerate() {
                *slot = &*slot + &(&s * jinv.get(i, off + mu));
            }
        }
        Matrix::new(da, dd, v)
    }
}

fn prefix(r: usize, f: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(r + 1);
    let mut acc = 0;
    out.push(0);
    for d in 0..r {
        acc += f(d);
        out.push(acc);
    }
    out
}

pub(crate) fn matrix_diff(prefix: &[usize], lhs: &Matrix, rhs: &Matrix) -> Vec<Failure> {
    let mut out = Vec::new();
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            let (l, r) = (lhs.get(i, j), rhs.get(i, j));
            if l != r {
                let mut idx = prefix.to_vec();
                idx.extend([i, j]);
                out.push(Failure {
                    indices: idx,
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                });
            }
        }
    }
    out
}

type TreeVec = BTreeMap<[usize; 5], Scalar>;

fn add_term(v: &mut TreeVec, key: [usize; 5], s: Scalar) {
    if s.is_zero() {
        return;
    }
    let slot = v.entry(key).or_insert_with(Scalar::zero);
    *slot = &*slot + &s;
    if slot.is_zero() {
        v.remove(&key);
    }
}

/// Pentagon identity for every `(a,b,c,d,e)`, plus the structural axioms
/// (invertible associators, strict unit, dual candidates).
pub fn verify_pentagon(k: &FusionSkeleton) -> Result<Report> {
    k.validate()?;
    let r = k.rank();
    let u = k.unit;
    let mut report = Report::new();

    let mut invertible = Vec::new();
    let mut unit_strict = Vec::new();
    for a in 0..r {
        for b in 0..r {
            if k.n(u, a, b) != usize::from(a == b) || k.n(a, u, b) != usize::from(a == b) {
                unit_strict.push(Failure {
                    indices: vec![a, b],
                    lhs: format!(
                        "N[unit][{a}][{b}] = {}, N[{a}][unit][{b}] = {}",
                        k.n(u, a, b),
                        k.n(a, u, b)
                    ),
                    rhs: usize::from(a == b).to_string(),
                });
            }
            for c in 0..r {
                for d in 0..r {
                    let f = k.f_symbol(a, b, c, d);
                    if !f.is_square() || (f.rows() > 0 && f.determinant().is_zero()) {
                        invertible.push(Failure {
                            indices: vec![a, b, c, d],
                            lhs: f.to_string(),
                            rhs: "invertible".into(),
                        });
                    } else if (a == u || b == u || c == u) && !f.is_identity() {
                        unit_strict.push(Failure {
                            indices: vec![a, b, c, d],
                            lhs: f.to_string(),
                            rhs: "identity".into(),
                        });
                    }
                }
            }
        }
    }
    let duals: Vec<Failure> = (0..r)
        .filter(|&a| k.n(k.dual[a], a, u) == 0)
        .map(|a| Failure {
            indices: vec![a],
            lhs: format!("N[{}][{a}][unit] = 0", k.dual[a]),
            rhs: ">= 1".into(),
        })
        .collect();
    report.push(CheckRecord::new("associator_invertible", invertible));
    report.push(CheckRecord::new("unit_strict", unit_strict));
    report.push(CheckRecord::new("dual_candidates", duals));

    let tuples: Vec<[usize; 5]> = (0..r.pow(5))
        .map(|x| [x / r.pow(4), x / r.pow(3) % r, x / r.pow(2) % r, x / r % r, x % r])
        .collect();
    let failures: Vec<Failure> = tuples.par_iter().flat_map_iter(|&t| pentagon_at(k, t)).collect();
    report.push(CheckRecord::new("pentagon", failures));
    Ok(report)
}

/// Applies `F^{xyz}_w` to a left-tree component, returning right-tree terms.
fn apply_f(
    k: &FusionSkeleton,
    xyzw: [usize; 4],
    e: usize,
    mu: usize,
    nu: usize,
) -> Vec<((usize, usize, usize), Scalar)> {
    let [x, y, z, w] = xyzw;
    let f = k.f_symbol(x, y, z, w);
    let col = k.left_index(xyzw, e, mu, nu);
    k.right_basis(xyzw)
        .into_iter()
        .enumerate()
        .filter_map(|(row, key)| {
            let s = f.get(row, col);
            (!s.is_zero()).then(|| (key, s.clone()))
        })
        .collect()
}

fn pentagon_at(k: &FusionSkeleton, [a, b, c, d, e]: [usize; 5]) -> Vec<Failure> {
    let r = k.rank();
    let mut failures = Vec::new();
    // Source basis ((ab)c)d: ab→p (x1), pc→q (x2), qd→e (x3).
    for p in 0..r {
        for x1 in 0..k.n(a, b, p) {
            for q in 0..r {
                for x2 in 0..k.n(p, c, q) {
                    for x3 in 0..k.n(q, d, e) {
                        // Target basis a(b(cd)): cd→r, br→s, as→e, keyed (r, y1, s, z1, z2).
                        let mut top = TreeVec::new();
                        for ((rr, y1, y2), s1) in apply_f(k, [p, c, d, e], q, x2, x3) {
                            for ((s, z1, z2), s2) in apply_f(k, [a, b, rr, e], p, x1, y2) {
                                add_term(&mut top, [rr, y1, s, z1, z2], &s1 * &s2);
                            }
                        }
                        let mut bottom = TreeVec::new();
                        for ((t, w1, w2), s1) in apply_f(k, [a, b, c, q], p, x1, x2) {
                            for ((s, v1, v2), s2) in apply_f(k, [a, t, d, e], q, w2, x3) {
                                let s12 = &s1 * &s2;
                                for ((rr, u1, u2), s3) in apply_f(k, [b, c, d, s], t, w1, v1) {
                                    add_term(&mut bottom, [rr, u1, s, u2, v2], &s12 * &s3);
                                }
                            }
                        }
                        let zero = Scalar::zero();
                        let mut keys: Vec<_> = top.keys().chain(bottom.keys()).copied().collect();
                        keys.sort();
                        keys.dedup();
                        for key in keys {
                            let (l, rh) = (top.get(&key).unwrap_or(&zero), bottom.get(&key).unwrap_or(&zero));
                            if l != rh {
                                let mut idx = vec![a, b, c, d, e, p, x1, q, x2, x3];
                                idx.extend(key);
                                failures.push(Failure {
                                    indices: idx,
                                    lhs: l.to_string(),
                                    rhs: rh.to_string(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    failures
}

fn check_invertible_j(k: &FusionSkeleton, phi: &FiberData) -> Result<()> {
    let r = k.rank();
    for a in 0..r {
        for b in 0..r {
            if phi.j(a, b).determinant().is_zero() {
                return Err(Error::NonInvertibleJ { a, b });
            }
        }
    }
    Ok(())
}

/// Hexagon `F(α)∘J_{a⊗b,c}∘(J_{a,b}⊗id) = J_{a,b⊗c}∘(id⊗J_{b,c})` for every
/// triple, and the unit constraints `J_{1,a} = J_{a,1} = ι⁻¹·id`.
pub fn verify_tensorator(k: &FusionSkeleton, phi: &FiberData) -> Result<Report> {
    k.validate()?;
    phi.validate(k)?;
    check_invertible_j(k, phi)?;
    let r = k.rank();
    let u = k.unit;
    let iota_inv = phi.iota.inv().expect("validated nonzero");

    let mut unit = Vec::new();
    for a in 0..r {
        let expected = Matrix::identity(phi.dims[a]).scale(&iota_inv);
        unit.extend(matrix_diff(&[u, a], phi.j(u, a), &expected));
        unit.extend(matrix_diff(&[a, u], phi.j(a, u), &expected));
    }

    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    if k.left_dim(a, b, c, d) != k.right_dim(a, b, c, d) {
                        return Err(Error::shape(format!(
                            "multiplicity spaces of ({a},{b},{c}) -> {d} have different dimensions"
                        )));
                    }
                }
            }
        }
    }

    let triples: Vec<[usize; 3]> = (0..r * r * r).map(|x| [x / (r * r), x / r % r, x % r]).collect();
    let hexagon: Vec<Failure> = triples
        .par_iter()
        .flat_map_iter(|&[a, b, c]| {
            let lhs = realized_associator(k, phi, a, b, c).mul(&phi.left_tree(k, a, b, c));
            let rhs = phi.right_tree(k, a, b, c);
            matrix_diff(&[a, b, c], &lhs, &rhs)
        })
        .collect();

    let mut report = Report::new();
    report.push(CheckRecord::new("unit_constraints", unit));
    report.push(CheckRecord::new("hexagon", hexagon));
    Ok(report)
}

/// `⊕_d F^{abc}_d ⊗ id_{F(d)}`.
pub fn realized_associator(k: &FusionSkeleton, phi: &FiberData, a: usize, b: usize, c: usize) -> Matrix {
    let blocks: Vec<Matrix> = (0..k.rank())
        .map(|d| k.f_symbol(a, b, c, d).kron(&Matrix::identity(phi.dims[d])))
        .collect();
    Matrix::block_diag(&blocks)
}

/// Solves the hexagon for the F-symbols given fusion rules and a tensorator.
/// The `assoc` field of `k` is ignored.
pub fn associator_from_tensorator(k: &FusionSkeleton, phi: &FiberData) -> Result<Vec<Matrix>> {
    let r = k.rank();
    let mut assoc = Vec::with_capacity(r.pow(4));
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                let left = phi.left_tree(k, a, b, c);
                let right = phi.right_tree(k, a, b, c);
                // M·left = right, so Mᵀ = leftᵀ \ rightᵀ.
                let m = left
                    .transpose()
                    .solve(&right.transpose())
                    .ok_or_else(|| Error::shape(format!("left tree of ({a},{b},{c}) is singular")))?
                    .transpose();
                let mut off = 0;
                for d in 0..r {
                    let (ld, rd) = (k.left_dim(a, b, c, d), k.right_dim(a, b, c, d));
                    if ld != rd {
                        return Err(Error::shape(format!("({a},{b},{c}) -> {d}: {ld} != {rd}")));
                    }
                    let dd = phi.dims[d];
                    assoc.push(Matrix::from_fn(rd, ld, |row, col| {
                        m.get(off + row * dd, off + col * dd).clone()
                    }));
                    off += ld * dd;
                }
            }
        }
    }
    Ok(assoc)
}

/// `δ_a : F(a°) → F(a)*` for every simple, the transpose of the pairing
/// matrix. Fails with `NonRigid` when a pairing is degenerate.
pub fn compute_delta(k: &FusionSkeleton, phi: &FiberData) -> Result<Vec<Matrix>> {
    k.validate()?;
    phi.validate(k)?;
    (0..k.rank())
        .map(|a| {
            let p = phi.pairing(k, a);
            if !p.is_square() {
                return Err(Error::NonRigid {
                    simple: a,
                    reason: format!("F({}) and F({a}) have different dimensions", k.dual[a]),
                });
            }
            if p.determinant().is_zero() {
                return Err(Error::NonRigid {
                    simple: a,
                    reason: "pairing is degenerate".into(),
                });
            }
            Ok(p.transpose())
        })
        .collect()
}

/// Snake identities on `F(a)` and `F(a°)` for every simple.
pub fn verify_duality(k: &FusionSkeleton, phi: &FiberData) -> Result<Report> {
    compute_delta(k, phi)?;
    let mut on_a = Vec::new();
    let mut on_dual = Vec::new();
    for a in 0..k.rank() {
        let p = phi.pairing(k, a);
        let q = phi.copairing(k, a)?;
        // (id⊗p)(q⊗id) = Q·P on F(a); (p⊗id)(id⊗q) = P·Q on F(a°).
        on_a.extend(matrix_diff(&[a], &q.mul(&p), &Matrix::identity(phi.dims[a])));
        on_dual.extend(matrix_diff(&[a], &p.mul(&q), &Matrix::identity(phi.dims[k.dual[a]])));
    }
    let mut report = Report::new();
    report.push(CheckRecord::new("snake_object", on_a));
    report.push(CheckRecord::new("snake_dual", on_dual));
    Ok(report)
}

/// Every verifier applicable to the given data, in dependency order. Stops
/// adding records after the first verifier that fails.
pub fn verify_all(k: &FusionSkeleton, phi: Option<&FiberData>) -> Result<Report> {
    let mut report = verify_pentagon(k)?;
    if let (true, Some(phi)) = (report.passed(), phi) {
        report.extend(verify_tensorator(k, phi)?);
        if report.passed() {
            report.extend(verify_duality(k, phi)?);
        }
    }
    Ok(report)
}
