//! The category of finite-dimensional modules over a Hopf presentation:
//! intertwiner spaces, tensor products and duals of modules, decomposition
//! into irreducibles, and the skeletal fusion data plus forgetful fiber
//! functor extracted from a complete list of irreducibles.

use crate::error::{Error, Result};
use crate::fusion::{associator_from_tensorator, matrix_diff, verify_all, FiberData, FusionSkeleton};
use crate::hopf::HopfPresentation;
use crate::matrix::Matrix;
use crate::reconstruct::{reconstruct_hopf, EndFElement, Reconstruction};
use crate::report::{CheckRecord, Failure, Report};
use crate::scalar::Scalar;

/// A module given by the matrices of the basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleRep {
    pub label: String,
    pub dim: usize,
    pub action: Vec<Matrix>,
}

impl ModuleRep {
    pub fn check_shape(&self, h: &HopfPresentation) -> Result<()> {
        if self.action.len() != h.dim() {
            return Err(Error::shape(format!(
                "module {} gives {} matrices for an algebra of dimension {}",
                self.label,
                self.action.len(),
                h.dim()
            )));
        }
        if let Some(i) = self
            .action
            .iter()
            .position(|m| m.rows() != self.dim || m.cols() != self.dim)
        {
            return Err(Error::shape(format!(
                "module {}: action of e_{i} is not {d}x{d}",
                self.label,
                d = self.dim
            )));
        }
        Ok(())
    }

    /// Action of an element given in coordinates.
    pub fn act(&self, x: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(self.dim, self.dim);
        for (c, m) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }
}

/// The one-dimensional module `h ↦ ε(h)`.
pub fn trivial_module(h: &HopfPresentation) -> ModuleRep {
    ModuleRep {
        label: "trivial".into(),
        dim: 1,
        action: h
            .counit
            .iter()
            .map(|e| Matrix::new(1, 1, vec![e.clone()]).expect("1x1"))
            .collect(),
    }
}

/// `V ⊗ W` with `h` acting through `Δ(h)`.
pub fn tensor_module(h: &HopfPresentation, v: &ModuleRep, w: &ModuleRep) -> ModuleRep {
    let n = h.dim();
    let action = (0..n)
        .map(|i| {
            let mut m = Matrix::zeros(v.dim * w.dim, v.dim * w.dim);
            for j in 0..n {
                for k in 0..n {
                    let c = h.comult_coeff(i, j, k);
                    if !c.is_zero() {
                        m = m.add(&v.action[j].kron(&w.action[k]).scale(c));
                    }
                }
            }
            m
        })
        .collect();
    ModuleRep {
        label: format!("{}⊗{}", v.label, w.label),
        dim: v.dim * w.dim,
        action,
    }
}

/// `V*` in the dual basis: `h ↦ ρ_V(S(h))ᵀ`.
pub fn dual_module(h: &HopfPresentation, v: &ModuleRep) -> ModuleRep {
    let action = (0..h.dim()).map(|i| v.act(&h.antipode.column(i)).transpose()).collect();
    ModuleRep {
        label: format!("{}*", v.label),
        dim: v.dim,
        action,
    }
}

/// Linear system whose kernel is `Hom_H(V, W)` with `X` (a `d_W × d_V`
/// matrix) vectorized row-major.
fn intertwiner_system(v: &ModuleRep, w: &ModuleRep) -> Matrix {
    let (dv, dw) = (v.dim, w.dim);
    let ncols = dv * dw;
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (rv, rw) in v.action.iter().zip(&w.action) {
        for r in 0..dw {
            for c in 0..dv {
                let mut row = vec![Scalar::zero(); ncols];
                for s in 0..dw {
                    let x = rw.get(r, s);
                    if !x.is_zero() {
                        row[s * dv + c] = &row[s * dv + c] + x;
                    }
                }
                for t in 0..dv {
                    let x = rv.get(t, c);
                    if !x.is_zero() {
                        row[r * dv + t] = &row[r * dv + t] - x;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        Matrix::zeros(0, ncols)
    } else {
        Matrix::from_rows(rows).expect("uniform rows")
    }
}

/// Basis of `Hom_H(V, W)`: one column per intertwiner, each the row-major
/// vectorization of a `d_W × d_V` matrix. The basis is the reduced echelon
/// kernel basis, so it is deterministic.
pub fn hom_space(h: &HopfPresentation, v: &ModuleRep, w: &ModuleRep) -> Result<Matrix> {
    v.check_shape(h)?;
    w.check_shape(h)?;
    Ok(intertwiner_system(v, w).kernel())
}

/// [`hom_space`] with every basis vector reshaped to a `d_W × d_V` matrix.
pub fn hom_basis(h: &HopfPresentation, v: &ModuleRep, w: &ModuleRep) -> Result<Vec<Matrix>> {
    let k = hom_space(h, v, w)?;
    (0..k.cols()).map(|j| Matrix::new(w.dim, v.dim, k.column(j))).collect()
}

/// Checks that each module is a representation, has a one-dimensional
/// commutant, that distinct modules are non-isomorphic, and that
/// `Σ d² = dim H`.
pub fn verify_irreps(h: &HopfPresentation, mods: &[ModuleRep]) -> Result<Report> {
    h.check_shape()?;
    for m in mods {
        m.check_shape(h)?;
    }
    let n = h.dim();
    let mut rep_eq = Vec::new();
    for (mi, m) in mods.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let lhs = m.action[i].mul(&m.action[j]);
                let rhs = m.act(&(0..n).map(|k| h.alg.mult_coeff(i, j, k).clone()).collect::<Vec<_>>());
                rep_eq.extend(matrix_diff(&[mi, i, j], &lhs, &rhs));
            }
        }
        rep_eq.extend(matrix_diff(&[mi, n, n], &m.act(&h.alg.unit), &Matrix::identity(m.dim)));
    }
    let mut commutant = Vec::new();
    for (mi, m) in mods.iter().enumerate() {
        let d = hom_space(h, m, m)?.cols();
        if d != 1 {
            commutant.push(Failure {
                indices: vec![mi],
                lhs: d.to_string(),
                rhs: "1".into(),
            });
        }
    }
    let mut pairwise = Vec::new();
    for (i, a) in mods.iter().enumerate() {
        for (j, b) in mods.iter().enumerate().skip(i + 1) {
            if a.dim == b.dim {
                let d = hom_space(h, a, b)?.cols();
                if d != 0 {
                    pairwise.push(Failure {
                        indices: vec![i, j],
                        lhs: d.to_string(),
                        rhs: "0".into(),
                    });
                }
            }
        }
    }
    let sum: usize = mods.iter().map(|m| m.dim * m.dim).sum();
    let mut report = Report::new();
    report.push(CheckRecord::new("rep_equations", rep_eq));
    report.push(CheckRecord::new("commutant", commutant));
    report.push(CheckRecord::new("pairwise_hom", pairwise));
    report.push(if sum == n {
        CheckRecord::pass("completeness")
    } else {
        CheckRecord::fail(
            "completeness",
            format!("sum of squared dimensions = {sum}"),
            format!("dim H = {n}"),
        )
    });
    Ok(report)
}

/// [`verify_irreps`], turned into the matching error on failure.
pub fn require_irreps(h: &HopfPresentation, mods: &[ModuleRep]) -> Result<()> {
    let report = verify_irreps(h, mods)?;
    if let Some(c) = report.check("rep_equations").filter(|c| !c.passed) {
        let f = &c.failures[0];
        return Err(Error::shape(format!(
            "module {} is not a representation at {:?}: {} != {}",
            f.indices[0],
            &f.indices[1..],
            f.lhs,
            f.rhs
        )));
    }
    if let Some(c) = report.check("commutant").filter(|c| !c.passed) {
        let f = &c.failures[0];
        return Err(Error::NotSplitOrNotSemisimple {
            module: f.indices[0],
            commutant_dim: f.lhs.parse().unwrap_or(0),
        });
    }
    if let Some(c) = report.check("pairwise_hom").filter(|c| !c.passed) {
        let f = &c.failures[0];
        return Err(Error::shape(format!(
            "modules {} and {} are isomorphic",
            f.indices[0], f.indices[1]
        )));
    }
    let sum: usize = mods.iter().map(|m| m.dim * m.dim).sum();
    if sum != h.dim() {
        return Err(Error::Incomplete { sum, dim: h.dim() });
    }
    Ok(())
}

/// Multiplicity of each irreducible in `v`.
pub fn decompose(h: &HopfPresentation, irreps: &[ModuleRep], v: &ModuleRep) -> Result<Vec<usize>> {
    let mult = irreps
        .iter()
        .map(|c| hom_space(h, c, v).map(|k| k.cols()))
        .collect::<Result<Vec<_>>>()?;
    let covered: usize = mult.iter().zip(irreps).map(|(m, c)| m * c.dim).sum();
    if covered != v.dim {
        return Err(Error::DecompositionGap { dim: v.dim, covered });
    }
    Ok(mult)
}

/// Skeletal fusion data and the forgetful fiber functor of the category of
/// modules, with the given irreducibles as simples.
pub fn skeletalize(h: &HopfPresentation, mods: &[ModuleRep]) -> Result<(FusionSkeleton, FiberData)> {
    require_irreps(h, mods)?;
    let r = mods.len();
    let triv = trivial_module(h);
    let unit = mods
        .iter()
        .position(|m| m.dim == 1 && m.action == triv.action)
        .ok_or_else(|| Error::shape("no irreducible is the trivial module"))?;

    let mut fusion = vec![0u32; r * r * r];
    let mut tensorator = Vec::with_capacity(r * r);
    for a in 0..r {
        for b in 0..r {
            let t = tensor_module(h, &mods[a], &mods[b]);
            let mut parts = Vec::new();
            for c in 0..r {
                let basis = hom_basis(h, &t, &mods[c])?;
                fusion[(a * r + b) * r + c] = basis.len() as u32;
                parts.extend(basis);
            }
            let covered: usize = parts.iter().map(Matrix::rows).sum();
            if covered != t.dim {
                return Err(Error::DecompositionGap { dim: t.dim, covered });
            }
            tensorator.push(Matrix::vstack(&parts, t.dim)?);
        }
    }

    let mut dual = Vec::with_capacity(r);
    for (a, m) in mods.iter().enumerate() {
        let d = dual_module(h, m);
        let found = mods
            .iter()
            .enumerate()
            .filter(|(_, c)| c.dim == d.dim)
            .map(|(c, cm)| hom_space(h, cm, &d).map(|k| (c, k.cols())))
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .find(|&(_, n)| n > 0)
            .map(|(c, _)| c);
        dual.push(found.ok_or(Error::NonRigid {
            simple: a,
            reason: "dual module is not among the irreducibles".into(),
        })?);
    }

    let mut k = FusionSkeleton {
        simples: mods.iter().map(|m| m.label.clone()).collect(),
        unit,
        fusion,
        assoc: Vec::new(),
        dual,
    };
    let ones = |a: usize, b: usize, k: &FusionSkeleton| {
        let n = k.n(a, b, k.unit);
        (0..n)
            .map(|i| if i == 0 { Scalar::one() } else { Scalar::zero() })
            .collect::<Vec<_>>()
    };
    let ev: Vec<Vec<Scalar>> = (0..r).map(|a| ones(k.dual[a], a, &k)).collect();
    let coev: Vec<Vec<Scalar>> = (0..r).map(|a| ones(a, k.dual[a], &k)).collect();
    let mut phi = FiberData {
        dims: mods.iter().map(|m| m.dim).collect(),
        tensorator,
        iota: Scalar::one(),
        ev,
        coev,
    };
    // Rescale coev so that the snake on F(a) is exactly the identity.
    for a in 0..r {
        let qp = phi.copairing(&k, a)?.mul(&phi.pairing(&k, a));
        let lambda = qp
            .scalar_multiple_of_identity()
            .filter(|l| !l.is_zero())
            .ok_or(Error::NonRigid {
                simple: a,
                reason: "snake composite is not a nonzero scalar".into(),
            })?;
        let inv = lambda.inv()?;
        phi.coev[a] = phi.coev[a].iter().map(|c| c * &inv).collect();
    }
    // The F-symbols are placeholders until solved from the tensorator.
    k.assoc = (0..r.pow(4))
        .map(|x| {
            let (a, b, c, d) = (x / (r * r * r), x / (r * r) % r, x / r % r, x % r);
            Matrix::zeros(k.right_dim(a, b, c, d), k.left_dim(a, b, c, d))
        })
        .collect();
    k.assoc = associator_from_tensorator(&k, &phi)?;

    let report = verify_all(&k, Some(&phi))?;
    if !report.passed() {
        return Err(Error::SkeletalizationFailure(Box::new(report)));
    }
    Ok((k, phi))
}

#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub skeleton: FusionSkeleton,
    pub fiber: FiberData,
    pub reconstruction: Reconstruction,
    /// Column `i` holds the coordinates of `γ(e_i)` in the matrix-unit basis.
    pub gamma: Matrix,
    pub report: Report,
}

impl RoundTrip {
    /// `Err(RoundTripFailure)` naming the first failing identity.
    pub fn ensure_passed(&self) -> Result<()> {
        match self.report.failed_checks().next() {
            Some(c) => Err(Error::RoundTripFailure(c.name.clone())),
            None => Ok(()),
        }
    }
}

/// Skeletalizes, reconstructs, and checks that `γ(h) = (ρ_a(h))_a` is an
/// isomorphism of Hopf algebras from `h` to the reconstruction.
pub fn gamma_roundtrip(h: &HopfPresentation, mods: &[ModuleRep]) -> Result<RoundTrip> {
    let (k, phi) = skeletalize(h, mods)?;
    let rec = reconstruct_hopf(&k, &phi)?;
    let n = h.dim();
    let g = rec.hopf.dim();
    let image = |x: &[Scalar]| -> Vec<Scalar> {
        EndFElement {
            blocks: mods.iter().map(|m| m.act(x)).collect(),
        }
        .to_coords()
    };
    let basis: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect()
        })
        .collect();
    let cols: Vec<Matrix> = basis.iter().map(|e| Matrix::column_vector(image(e))).collect();
    let gamma = Matrix::hstack(&cols, g)?;
    let apply = |x: &[Scalar]| gamma.mul(&Matrix::column_vector(x.to_vec())).into_entries();

    let mut report = Report::new();
    report.push(if gamma.is_square() && !gamma.determinant().is_zero() {
        CheckRecord::pass("gamma_bijective")
    } else {
        CheckRecord::fail(
            "gamma_bijective",
            format!("{}x{} of rank {}", g, n, gamma.rank()),
            "invertible",
        )
    });

    let mut alg = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = apply(&h.alg.multiply(&basis[i], &basis[j]));
            let rhs = rec.hopf.alg.multiply(&gamma.column(i), &gamma.column(j));
            alg.extend(vec_diff(&[i, j], &lhs, &rhs));
        }
    }
    alg.extend(vec_diff(&[n, n], &apply(&h.alg.unit), &rec.hopf.alg.unit));
    report.push(CheckRecord::new("gamma_algebra_hom", alg));

    let mut coalg = Vec::new();
    for i in 0..n {
        let lhs = rec.hopf.comultiply(&gamma.column(i));
        let mut rhs = vec![Scalar::zero(); g * g];
        for j in 0..n {
            for k2 in 0..n {
                let c = h.comult_coeff(i, j, k2);
                if c.is_zero() {
                    continue;
                }
                let (gj, gk) = (gamma.column(j), gamma.column(k2));
                for (x, a) in gj.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
                    let ca = c * a;
                    for (y, b) in gk.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                        rhs[x * g + y] = &rhs[x * g + y] + &(&ca * b);
                    }
                }
            }
        }
        coalg.extend(vec_diff(&[i], &lhs, &rhs));
    }
    report.push(CheckRecord::new("gamma_coalgebra_hom", coalg));

    let counit: Vec<Failure> = (0..n)
        .flat_map(|i| vec_diff(&[i], &[rec.hopf.apply_counit(&gamma.column(i))], &[h.counit[i].clone()]))
        .collect();
    report.push(CheckRecord::new("gamma_counit", counit));

    let antipode: Vec<Failure> = (0..n)
        .flat_map(|i| {
            let lhs = rec.hopf.apply_antipode(&gamma.column(i));
            let rhs = apply(&h.antipode.column(i));
            vec_diff(&[i], &lhs, &rhs)
        })
        .collect();
    report.push(CheckRecord::new("gamma_antipode", antipode));

    Ok(RoundTrip {
        skeleton: k,
        fiber: phi,
        reconstruction: rec,
        gamma,
        report,
    })
}

fn vec_diff(prefix: &[usize], lhs: &[Scalar], rhs: &[Scalar]) -> Vec<Failure> {
    lhs.iter()
        .zip(rhs)
        .enumerate()
        .filter(|(_, (l, r))| l != r)
        .map(|(x, (l, r))| {
            let mut indices = prefix.to_vec();
            indices.push(x);
            Failure {
                indices,
                lhs: l.to_string(),
                rhs: r.to_string(),
            }
        })
        .collect()
}
