//! The Hopf algebra of natural endomorphisms of a fiber functor.
//!
//! End(F) is the product of the matrix algebras End(F(a)) over the simples,
//! with basis the matrix units `E^{(a)}_{ij}` ordered block by block. Its
//! coproduct conjugates the block-diagonal action on `⊕_c N_{ab}^c F(c)` back
//! through `J_{a,b}`, and the result in `End(F(a)⊗F(b))` is read off in the
//! Kronecker basis `E^{(a)}_{ij} ⊗ E^{(b)}_{kl} ↔ E_{(ik),(jl)}`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fusion::{compute_delta, FiberData, FusionSkeleton};
use crate::hopf::{check_hopf, AlgebraPresentation, HopfPresentation};
use crate::matrix::Matrix;
use crate::repcat::{verify_irreps, ModuleRep};
use crate::report::{CheckRecord, Report};
use crate::scalar::Scalar;

/// An element of End(F): one `d_a × d_a` block per simple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EndFElement {
    pub blocks: Vec<Matrix>,
}

/// Label of the matrix unit `E^{(simple)}_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisLabel {
    pub simple: usize,
    pub row: usize,
    pub col: usize,
}

pub fn endf_basis(dims: &[usize]) -> Vec<BasisLabel> {
    let mut out = Vec::new();
    for (simple, &d) in dims.iter().enumerate() {
        for row in 0..d {
            for col in 0..d {
                out.push(BasisLabel { simple, row, col });
            }
        }
    }
    out
}

fn block_offsets(dims: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(dims.len());
    let mut acc = 0;
    for d in dims {
        out.push(acc);
        acc += d * d;
    }
    out
}

impl EndFElement {
    pub fn identity(dims: &[usize]) -> Self {
        EndFElement {
            blocks: dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn zero(dims: &[usize]) -> Self {
        EndFElement {
            blocks: dims.iter().map(|&d| Matrix::zeros(d, d)).collect(),
        }
    }

    pub fn basis_element(dims: &[usize], label: BasisLabel) -> Self {
        let mut e = Self::zero(dims);
        let d = dims[label.simple];
        e.blocks[label.simple] = Matrix::unit(d, d, label.row, label.col);
        e
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(Matrix::rows).collect()
    }

    /// Coordinates in the matrix-unit basis.
    pub fn to_coords(&self) -> Vec<Scalar> {
        self.blocks.iter().flat_map(|b| b.entries().iter().cloned()).collect()
    }

    pub fn from_coords(dims: &[usize], coords: &[Scalar]) -> Result<Self> {
        let total: usize = dims.iter().map(|d| d * d).sum();
        if coords.len() != total {
            return Err(Error::shape(format!(
                "End(F) has dimension {total}, got {} coordinates",
                coords.len()
            )));
        }
        let offs = block_offsets(dims);
        let blocks = dims
            .iter()
            .zip(offs)
            .map(|(&d, o)| Matrix::new(d, d, coords[o..o + d * d].to_vec()))
            .collect::<Result<_>>()?;
        Ok(EndFElement { blocks })
    }

    pub fn mul(&self, other: &EndFElement) -> EndFElement {
        EndFElement {
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.mul(b)).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> EndFElement {
        EndFElement {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }
}

/// ⊕_a End(F(a)) as an algebra presentation over the matrix-unit basis.
pub fn endf_algebra(phi: &FiberData) -> (AlgebraPresentation, Vec<BasisLabel>) {
    let basis = endf_basis(&phi.dims);
    let n = basis.len();
    let offs = block_offsets(&phi.dims);
    let index = |l: BasisLabel| offs[l.simple] + l.row * phi.dims[l.simple] + l.col;
    let mut mult = vec![Scalar::zero(); n * n * n];
    for (x, lx) in basis.iter().enumerate() {
        for (y, ly) in basis.iter().enumerate() {
            if lx.simple == ly.simple && lx.col == ly.row {
                let z = index(BasisLabel {
                    simple: lx.simple,
                    row: lx.row,
                    col: ly.col,
                });
                mult[(x * n + y) * n + z] = Scalar::one();
            }
        }
    }
    let unit = basis
        .iter()
        .map(|l| if l.row == l.col { Scalar::one() } else { Scalar::zero() })
        .collect();
    (AlgebraPresentation { dim: n, mult, unit }, basis)
}

/// Precomputed inverses of the tensorator and the duality maps.
struct Structure<'a> {
    k: &'a FusionSkeleton,
    phi: &'a FiberData,
    j_inv: Vec<Matrix>,
    delta: Vec<Matrix>,
    delta_inv: Vec<Matrix>,
    offsets: Vec<usize>,
}

impl<'a> Structure<'a> {
    fn new(k: &'a FusionSkeleton, phi: &'a FiberData) -> Result<Self> {
        k.validate()?;
        phi.validate(k)?;
        let r = k.rank();
        let mut j_inv = Vec::with_capacity(r * r);
        for a in 0..r {
            for b in 0..r {
                j_inv.push(phi.j(a, b).inverse().ok_or(Error::NonInvertibleJ { a, b })?);
            }
        }
        let delta = compute_delta(k, phi)?;
        let delta_inv = delta
            .iter()
            .map(|d| d.inverse().expect("compute_delta checks invertibility"))
            .collect();
        Ok(Structure {
            k,
            phi,
            j_inv,
            delta,
            delta_inv,
            offsets: block_offsets(&phi.dims),
        })
    }

    fn dim(&self) -> usize {
        self.phi.dims.iter().map(|d| d * d).sum()
    }

    /// `Δ(η)` as a flat `dim × dim` coefficient vector indexed `x*dim + y`.
    fn comultiply(&self, eta: &EndFElement) -> Vec<Scalar> {
        let dims = &self.phi.dims;
        let n = self.dim();
        let r = self.k.rank();
        let mut out = vec![Scalar::zero(); n * n];
        for a in 0..r {
            for b in 0..r {
                let blocks: Vec<Matrix> = (0..r)
                    .map(|c| Matrix::identity(self.k.n(a, b, c)).kron(&eta.blocks[c]))
                    .collect();
                let inner = Matrix::block_diag(&blocks);
                if inner.is_zero() {
                    continue;
                }
                let m = self.j_inv[a * r + b].mul(&inner).mul(self.phi.j(a, b));
                let (da, db) = (dims[a], dims[b]);
                for i in 0..da {
                    for j in 0..da {
                        let x = self.offsets[a] + i * da + j;
                        for kk in 0..db {
                            for l in 0..db {
                                let v = m.get(i * db + kk, j * db + l);
                                if !v.is_zero() {
                                    let y = self.offsets[b] + kk * db + l;
                                    out[x * n + y] = v.clone();
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn antipode(&self, eta: &EndFElement) -> EndFElement {
        let blocks = (0..self.k.rank())
            .map(|a| {
                let ad = self.k.dual[a];
                self.delta[a].mul(&eta.blocks[ad]).mul(&self.delta_inv[a]).transpose()
            })
            .collect();
        EndFElement { blocks }
    }
}

/// Δ(η) over the matrix-unit basis of End(F)⊗End(F), indexed `x*dim + y`.
pub fn comultiplication(k: &FusionSkeleton, phi: &FiberData, eta: &EndFElement) -> Result<Vec<Scalar>> {
    Ok(Structure::new(k, phi)?.comultiply(eta))
}

/// ε(η) is the 1×1 unit block.
pub fn counit(k: &FusionSkeleton, eta: &EndFElement) -> Scalar {
    eta.blocks[k.unit].get(0, 0).clone()
}

/// `S(η)_a = (δ_a · η_{a°} · δ_a⁻¹)ᵀ`.
pub fn antipode(k: &FusionSkeleton, phi: &FiberData, eta: &EndFElement) -> Result<EndFElement> {
    Ok(Structure::new(k, phi)?.antipode(eta))
}

#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub hopf: HopfPresentation,
    pub basis: Vec<BasisLabel>,
    pub report: Report,
}

/// Assembles the full Hopf structure on End(F) and checks every axiom.
pub fn reconstruct_hopf(k: &FusionSkeleton, phi: &FiberData) -> Result<Reconstruction> {
    let st = Structure::new(k, phi)?;
    let (alg, basis) = endf_algebra(phi);
    let n = alg.dim;
    let dims = &phi.dims;
    let mut comult = Vec::with_capacity(n * n * n);
    let mut counit_v = Vec::with_capacity(n);
    let mut s_cols = Vec::with_capacity(n);
    for &label in &basis {
        let e = EndFElement::basis_element(dims, label);
        comult.extend(st.comultiply(&e));
        counit_v.push(counit(k, &e));
        s_cols.push(Matrix::column_vector(st.antipode(&e).to_coords()));
    }
    let antipode = Matrix::hstack(&s_cols, n)?;
    let invertible = !antipode.determinant().is_zero();
    let hopf = HopfPresentation {
        alg,
        comult,
        counit: counit_v,
        antipode,
    };
    let mut report = check_hopf(&hopf)?;
    report.push(if invertible {
        CheckRecord::pass("antipode_invertible")
    } else {
        CheckRecord::fail("antipode_invertible", "det S = 0", "det S != 0")
    });
    if !report.passed() {
        return Err(Error::ReconstructionAxiomFailure(Box::new(report)));
    }
    Ok(Reconstruction { hopf, basis, report })
}

/// A morphism of fiber functors over a fusion functor between skeleta: source
/// simple `a` goes to `⊕_c K^{m_{ac}} ⊗ c` and `τ_a` identifies `F(a)` with
/// `⊕_c K^{m_{ac}} ⊗ F'(c)`, multiplicity outer and `F'(c)` coordinate inner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceMorphismData {
    /// `multiplicities[a][c]`.
    pub multiplicities: Vec<Vec<u32>>,
    pub tau: Vec<Matrix>,
}

impl SliceMorphismData {
    pub fn identity(dims: &[usize]) -> Self {
        let r = dims.len();
        SliceMorphismData {
            multiplicities: (0..r).map(|a| (0..r).map(|c| u32::from(a == c)).collect()).collect(),
            tau: dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    /// Checks shapes against the target dimensions and that every `τ_a` is
    /// invertible.
    pub fn validate(&self, target_dims: &[usize]) -> Result<()> {
        if self.multiplicities.len() != self.tau.len() {
            return Err(Error::shape("one multiplicity row and one τ per source simple"));
        }
        for (a, (row, tau)) in self.multiplicities.iter().zip(&self.tau).enumerate() {
            if row.len() != target_dims.len() {
                return Err(Error::shape(format!("multiplicity row {a} has {} entries", row.len())));
            }
            let n: usize = row.iter().zip(target_dims).map(|(&m, d)| m as usize * d).sum();
            if !tau.is_square() || tau.rows() != n {
                return Err(Error::shape(format!("τ[{a}] must be {n}x{n}")));
            }
            if tau.determinant().is_zero() {
                return Err(Error::shape(format!("τ[{a}] is singular")));
            }
        }
        Ok(())
    }

    /// `other ∘ self`: first `self` (C → C'), then `other` (C' → C'').
    /// The composite multiplicity space of `c''` in `a` is ordered
    /// lexicographically by `(b, μ₁, μ₂)`.
    pub fn compose(&self, other: &SliceMorphismData, final_dims: &[usize]) -> Result<SliceMorphismData> {
        let mid_dims: Vec<usize> = other.tau.iter().map(Matrix::rows).collect();
        self.validate(&mid_dims)?;
        other.validate(final_dims)?;
        let r2 = other.tau.len();
        let r3 = final_dims.len();
        let mut multiplicities = Vec::new();
        let mut tau = Vec::new();
        for (row1, tau1) in self.multiplicities.iter().zip(&self.tau) {
            let mult: Vec<u32> = (0..r3)
                .map(|c| (0..r2).map(|b| row1[b] * other.multiplicities[b][c]).sum())
                .collect();
            // Block diagonal of τ2_b over (b, μ₁).
            let mut parts = Vec::new();
            for b in 0..r2 {
                for _ in 0..row1[b] {
                    parts.push(other.tau[b].clone());
                }
            }
            let stacked = Matrix::block_diag(&parts);
            let n = stacked.rows();
            // Row of (c, (b,μ₁,μ₂), z) in the target ordering.
            let c_off: Vec<usize> = (0..r3)
                .scan(0, |acc, c| {
                    let o = *acc;
                    *acc += mult[c] as usize * final_dims[c];
                    Some(o)
                })
                .collect();
            let mut perm = Matrix::zeros(n, n);
            let mut src = 0;
            for b in 0..r2 {
                for mu1 in 0..row1[b] as usize {
                    for c in 0..r3 {
                        let m2 = other.multiplicities[b][c] as usize;
                        let before: usize = (0..b).map(|x| (row1[x] * other.multiplicities[x][c]) as usize).sum();
                        for mu2 in 0..m2 {
                            let mult_index = before + mu1 * m2 + mu2;
                            for z in 0..final_dims[c] {
                                perm.set(c_off[c] + mult_index * final_dims[c] + z, src, Scalar::one());
                                src += 1;
                            }
                        }
                    }
                }
            }
            multiplicities.push(mult);
            tau.push(perm.mul(&stacked).mul(tau1));
        }
        Ok(SliceMorphismData { multiplicities, tau })
    }
}

/// `Q(T,τ)(η')_a = τ_a⁻¹ · (⊕_c I_{m_{ac}} ⊗ η'_c) · τ_a`.
pub fn transport_along(t: &SliceMorphismData, eta: &EndFElement) -> Result<EndFElement> {
    let target_dims = eta.dims();
    t.validate(&target_dims)?;
    let blocks = t
        .tau
        .iter()
        .zip(&t.multiplicities)
        .map(|(tau, mult)| {
            let parts: Vec<Matrix> = mult
                .iter()
                .zip(&eta.blocks)
                .map(|(&m, blk)| Matrix::identity(m as usize).kron(blk))
                .collect();
            let inv = tau.inverse().expect("validated invertible");
            inv.mul(&Matrix::block_diag(&parts)).mul(tau)
        })
        .collect();
    Ok(EndFElement { blocks })
}

/// Matrix of `transport_along(t, -)` from the target's matrix-unit basis to
/// the source's.
pub fn transport_matrix(t: &SliceMorphismData, target_dims: &[usize]) -> Result<Matrix> {
    let cols = endf_basis(target_dims)
        .into_iter()
        .map(|l| {
            let img = transport_along(t, &EndFElement::basis_element(target_dims, l))?;
            Ok(Matrix::column_vector(img.to_coords()))
        })
        .collect::<Result<Vec<_>>>()?;
    let rows: usize = t.tau.iter().map(|m| m.rows() * m.rows()).sum();
    Matrix::hstack(&cols, rows)
}

/// One module per simple: `F(a)` with `E^{(b)}_{ij}` acting as `δ_{ab} E_{ij}`.
/// The returned report is the irreducibility/completeness verification.
pub fn zeta_modules(k: &FusionSkeleton, phi: &FiberData, h: &HopfPresentation) -> Result<(Vec<ModuleRep>, Report)> {
    let basis = endf_basis(&phi.dims);
    if basis.len() != h.dim() {
        return Err(Error::shape(format!(
            "End(F) has dimension {}, presentation has {}",
            basis.len(),
            h.dim()
        )));
    }
    let mods: Vec<ModuleRep> = (0..k.rank())
        .map(|a| {
            let d = phi.dims[a];
            let action = basis
                .iter()
                .map(|l| {
                    if l.simple == a {
                        Matrix::unit(d, d, l.row, l.col)
                    } else {
                        Matrix::zeros(d, d)
                    }
                })
                .collect();
            ModuleRep {
                label: k.simples[a].clone(),
                dim: d,
                action,
            }
        })
        .collect();
    let report = verify_irreps(h, &mods)?;
    Ok((mods, report))
}
