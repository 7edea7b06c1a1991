//! Built-in groups, Hopf algebras, module lists and pointed fusion
//! categories used as reference inputs.

use crate::error::{Error, Result};
use crate::fusion::{FiberData, FusionSkeleton};
use crate::hopf::{AlgebraPresentation, HopfPresentation};
use crate::io::Document;
use crate::matrix::Matrix;
use crate::repcat::ModuleRep;
use crate::scalar::Scalar;

/// A finite group by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    order: usize,
    /// `table[a*order + b]` is the index of `ab`.
    table: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates associativity, the identity and the inverses.
    pub fn new(order: usize, table: Vec<usize>, inverse: Vec<usize>, identity: usize) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidGroup(m));
        if order == 0 {
            return bad("a group has at least one element".into());
        }
        if table.len() != order * order || inverse.len() != order {
            return bad(format!("table must be {order}x{order} and inverse of length {order}"));
        }
        if identity >= order || table.iter().chain(&inverse).any(|&x| x >= order) {
            return bad("element index out of range".into());
        }
        let g = GroupTable {
            order,
            table,
            inverse,
            identity,
        };
        for a in 0..order {
            if g.mul(identity, a) != a || g.mul(a, identity) != a {
                return bad(format!("{identity} is not an identity for {a}"));
            }
            if g.mul(a, g.inverse[a]) != identity || g.mul(g.inverse[a], a) != identity {
                return bad(format!("{} is not an inverse of {a}", g.inverse[a]));
            }
            for b in 0..order {
                for c in 0..order {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return bad(format!("not associative at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(g)
    }

    /// Builds a group from its table, finding the identity and inverses.
    pub fn from_table(order: usize, table: Vec<usize>) -> Result<Self> {
        if table.len() != order * order {
            return Err(Error::InvalidGroup(format!("table must be {order}x{order}")));
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e * order + a] == a && table[a * order + e] == a))
            .ok_or_else(|| Error::InvalidGroup("no identity element".into()))?;
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| table[a * order + b] == identity)
                    .ok_or_else(|| Error::InvalidGroup(format!("{a} has no inverse")))
            })
            .collect::<Result<_>>()?;
        Self::new(order, table, inverse, identity)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inverse
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    pub fn cyclic(n: usize) -> Self {
        let table = (0..n * n).map(|x| (x / n + x % n) % n).collect();
        Self::from_table(n, table).expect("cyclic groups are groups")
    }

    /// Z/2 × Z/2 with `(a,b)` at index `2a + b`.
    pub fn klein_four() -> Self {
        let table = (0..16).map(|x| (x / 4) ^ (x % 4)).collect();
        Self::from_table(4, table).expect("Z/2 x Z/2 is a group")
    }

    /// The symmetric group on `k` points, elements in lexicographic order of
    /// their one-line notation, with `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(k: usize) -> Self {
        let perms = permutations(k);
        let n = perms.len();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
        let table = (0..n * n)
            .map(|x| {
                let (s, t) = (&perms[x / n], &perms[x % n]);
                index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>())
            })
            .collect();
        Self::from_table(n, table).expect("symmetric groups are groups")
    }
}

/// All permutations of `0..k` in lexicographic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 0..k {
        for rest in permutations(k - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

fn delta(i: usize, j: usize) -> Scalar {
    if i == j {
        Scalar::one()
    } else {
        Scalar::zero()
    }
}

/// K[G]: grouplike basis, `S(g) = g⁻¹`.
pub fn gen_group_algebra(g: &GroupTable) -> HopfPresentation {
    let n = g.order();
    let mut mult = vec![Scalar::zero(); n * n * n];
    let mut comult = vec![Scalar::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            mult[(a * n + b) * n + g.mul(a, b)] = Scalar::one();
        }
        comult[(a * n + a) * n + a] = Scalar::one();
    }
    HopfPresentation {
        alg: AlgebraPresentation {
            dim: n,
            mult,
            unit: (0..n).map(|x| delta(x, g.identity())).collect(),
        },
        comult,
        counit: vec![Scalar::one(); n],
        antipode: Matrix::from_fn(n, n, |i, j| delta(i, g.inv(j))),
    }
}

/// Fun(G): basis of delta functions, `Δ(δ_g) = Σ_{hk=g} δ_h⊗δ_k`.
pub fn gen_function_algebra(g: &GroupTable) -> HopfPresentation {
    let n = g.order();
    let mut mult = vec![Scalar::zero(); n * n * n];
    let mut comult = vec![Scalar::zero(); n * n * n];
    for a in 0..n {
        mult[(a * n + a) * n + a] = Scalar::one();
        for h in 0..n {
            for k in 0..n {
                if g.mul(h, k) == a {
                    comult[(a * n + h) * n + k] = Scalar::one();
                }
            }
        }
    }
    HopfPresentation {
        alg: AlgebraPresentation {
            dim: n,
            mult,
            unit: vec![Scalar::one(); n],
        },
        comult,
        counit: (0..n).map(|x| delta(x, g.identity())).collect(),
        antipode: Matrix::from_fn(n, n, |i, j| delta(i, g.inv(j))),
    }
}

/// D(G) = Fun(G) ⋈ K[G] with basis `δ_h⊗g` at index `h*|G| + g`:
/// `(δ_h⊗g)(δ_{h'}⊗g') = [h = g h' g⁻¹] δ_h⊗gg'`,
/// `Δ(δ_h⊗g) = Σ_{h₁h₂=h} (δ_{h₁}⊗g)⊗(δ_{h₂}⊗g)`, `ε(δ_h⊗g) = [h = e]`,
/// `S(δ_h⊗g) = δ_{g⁻¹h⁻¹g}⊗g⁻¹`.
pub fn gen_drinfeld_double(g: &GroupTable) -> HopfPresentation {
    let n = g.order();
    let dim = n * n;
    let idx = |h: usize, x: usize| h * n + x;
    let mut mult = vec![Scalar::zero(); dim * dim * dim];
    let mut comult = vec![Scalar::zero(); dim * dim * dim];
    let mut antipode = Matrix::zeros(dim, dim);
    for h in 0..n {
        for x in 0..n {
            let i = idx(h, x);
            for h2 in 0..n {
                for x2 in 0..n {
                    if h == g.mul(g.mul(x, h2), g.inv(x)) {
                        mult[(i * dim + idx(h2, x2)) * dim + idx(h, g.mul(x, x2))] = Scalar::one();
                    }
                }
            }
            for h1 in 0..n {
                let h2 = g.mul(g.inv(h1), h);
                comult[(i * dim + idx(h1, x)) * dim + idx(h2, x)] = Scalar::one();
            }
            let xi = g.inv(x);
            antipode.set(idx(g.mul(g.mul(xi, g.inv(h)), x), xi), i, Scalar::one());
        }
    }
    HopfPresentation {
        alg: AlgebraPresentation {
            dim,
            mult,
            unit: (0..dim)
                .map(|i| {
                    if i % n == g.identity() {
                        Scalar::one()
                    } else {
                        Scalar::zero()
                    }
                })
                .collect(),
        },
        comult,
        counit: (0..dim).map(|i| delta(i / n, g.identity())).collect(),
        antipode,
    }
}

fn one_dim(label: String, values: Vec<Scalar>) -> ModuleRep {
    ModuleRep {
        label,
        dim: 1,
        action: values
            .into_iter()
            .map(|v| Matrix::new(1, 1, vec![v]).expect("1x1"))
            .collect(),
    }
}

/// Characters of the built-in abelian groups: Z/n (values in Q(ζ_n)) and
/// Z/2 × Z/2. `chars[k][g]` is the value of the k-th character at `g`.
pub fn abelian_characters(g: &GroupTable) -> Option<Vec<Vec<Scalar>>> {
    let n = g.order();
    if *g == GroupTable::cyclic(n) {
        let nn = n as u32;
        return Some(
            (0..n)
                .map(|k| {
                    (0..n)
                        .map(|x| {
                            if n <= 2 {
                                Scalar::from_int(if k * x % 2 == 1 { -1 } else { 1 })
                            } else {
                                Scalar::root_of_unity(nn, (k * x % n) as i64)
                            }
                        })
                        .collect()
                })
                .collect(),
        );
    }
    if *g == GroupTable::klein_four() {
        let sign = |b: bool| Scalar::from_int(if b { -1 } else { 1 });
        return Some(
            (0..4)
                .map(|k: usize| (0..4).map(|x: usize| sign((k & x).count_ones() % 2 == 1)).collect())
                .collect(),
        );
    }
    None
}

fn parity(p: &[usize]) -> i64 {
    let inversions = (0..p.len())
        .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| p[i] > p[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Permutation action restricted to the sum-zero vectors, in the basis
/// `e_i - e_{k-1}`.
fn standard_matrix(p: &[usize]) -> Matrix {
    let k = p.len();
    let last = k - 1;
    let mut m = Matrix::zeros(last, last);
    for i in 0..last {
        if p[i] != last {
            m.set(p[i], i, Scalar::one());
        }
        if p[last] != last {
            let v = m.get(p[last], i) - &Scalar::one();
            m.set(p[last], i, v);
        }
    }
    m
}

/// S4 → S3 through the action on the three ways to pair up four points.
fn pairing_permutation(p: &[usize]) -> Vec<usize> {
    let pairings: [[[usize; 2]; 2]; 3] = [[[0, 1], [2, 3]], [[0, 2], [1, 3]], [[0, 3], [1, 2]]];
    let normal = |mut pr: [[usize; 2]; 2]| {
        for x in pr.iter_mut() {
            x.sort();
        }
        pr.sort();
        pr
    };
    pairings
        .iter()
        .map(|pr| {
            let img = normal(pr.map(|pair| pair.map(|i| p[i])));
            pairings.iter().position(|q| *q == img).expect("pairings are permuted")
        })
        .collect()
}

/// Irreducible modules of K[G] for the built-in groups: characters of Z/n
/// and Z/2 × Z/2, and rational matrix irreps of S3 and S4.
pub fn group_algebra_irreps(g: &GroupTable) -> Option<Vec<ModuleRep>> {
    if let Some(chars) = abelian_characters(g) {
        return Some(
            chars
                .into_iter()
                .enumerate()
                .map(|(k, v)| one_dim(format!("chi{k}"), v))
                .collect(),
        );
    }
    let k = [3, 4].into_iter().find(|&k| *g == GroupTable::symmetric(k))?;
    let perms = permutations(k);
    let signs: Vec<i64> = perms.iter().map(|p| parity(p)).collect();
    let mut mods = vec![
        one_dim("triv".into(), vec![Scalar::one(); perms.len()]),
        one_dim("sgn".into(), signs.iter().map(|&s| Scalar::from_int(s)).collect()),
    ];
    let std: Vec<Matrix> = perms.iter().map(|p| standard_matrix(p)).collect();
    if k == 4 {
        mods.push(ModuleRep {
            label: "two".into(),
            dim: 2,
            action: perms.iter().map(|p| standard_matrix(&pairing_permutation(p))).collect(),
        });
        mods.push(ModuleRep {
            label: "std_sgn".into(),
            dim: 3,
            action: std
                .iter()
                .zip(&signs)
                .map(|(m, &s)| m.scale(&Scalar::from_int(s)))
                .collect(),
        });
    }
    mods.push(ModuleRep {
        label: "std".into(),
        dim: k - 1,
        action: std,
    });
    Some(mods)
}

/// Evaluation at each group element: `δ_g ↦ [g = x]`.
pub fn function_algebra_irreps(g: &GroupTable) -> Vec<ModuleRep> {
    let n = g.order();
    (0..n)
        .map(|x| one_dim(format!("ev{x}"), (0..n).map(|y| delta(x, y)).collect()))
        .collect()
}

/// For abelian built-in groups, the characters of D(G):
/// `δ_h⊗g ↦ [h = x]·χ(g)`.
pub fn drinfeld_double_irreps(g: &GroupTable) -> Option<Vec<ModuleRep>> {
    if !g.is_abelian() {
        return None;
    }
    let chars = abelian_characters(g)?;
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for (k, chi) in chars.iter().enumerate() {
            let values = (0..n * n)
                .map(|i| if i / n == x { chi[i % n].clone() } else { Scalar::zero() })
                .collect();
            out.push(one_dim(format!("ev{x}_chi{k}"), values));
        }
    }
    Some(out)
}

/// Vec_G^ω. `omega[(a*n + b)*n + c]` is `ω(a,b,c) ∈ {1, -1}`. The fiber
/// functor with all tensorator entries 1 is returned only when `ω ≡ 1`.
pub fn gen_pointed_category(g: &GroupTable, omega: &[i64]) -> Result<(FusionSkeleton, Option<FiberData>)> {
    let n = g.order();
    if omega.len() != n * n * n {
        return Err(Error::shape(format!("omega needs {} values", n * n * n)));
    }
    if omega.iter().any(|&w| w != 1 && w != -1) {
        return Err(Error::shape("omega values must be 1 or -1"));
    }
    let w = |a: usize, b: usize, c: usize| omega[(a * n + b) * n + c];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let lhs = w(b, c, d) * w(a, g.mul(b, c), d) * w(a, b, c);
                    let rhs = w(g.mul(a, b), c, d) * w(a, b, g.mul(c, d));
                    if lhs != rhs {
                        return Err(Error::NotACocycle([a, b, c, d]));
                    }
                }
            }
        }
    }
    let e = g.identity();
    for a in 0..n {
        for b in 0..n {
            for t in [[e, a, b], [a, e, b], [a, b, e]] {
                if w(t[0], t[1], t[2]) != 1 {
                    return Err(Error::NotNormalized(t));
                }
            }
        }
    }
    let mut fusion = vec![0u32; n * n * n];
    for a in 0..n {
        for b in 0..n {
            fusion[(a * n + b) * n + g.mul(a, b)] = 1;
        }
    }
    let mut assoc = Vec::with_capacity(n.pow(4));
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    assoc.push(if d == g.mul(g.mul(a, b), c) {
                        Matrix::from_ints(&[&[w(a, b, c)]])
                    } else {
                        Matrix::zeros(0, 0)
                    });
                }
            }
        }
    }
    let k = FusionSkeleton {
        simples: (0..n).map(|x| x.to_string()).collect(),
        unit: e,
        fusion,
        assoc,
        dual: (0..n).map(|x| g.inv(x)).collect(),
    };
    let fiber = omega.iter().all(|&x| x == 1).then(|| FiberData {
        dims: vec![1; n],
        tensorator: vec![Matrix::identity(1); n * n],
        iota: Scalar::one(),
        ev: vec![vec![Scalar::one()]; n],
        coev: vec![vec![Scalar::one()]; n],
    });
    Ok((k, fiber))
}

/// `ω(a,b,c) = (-1)^{abc}` on Z/2.
pub fn z2_sign_cocycle() -> Vec<i64> {
    (0..8).map(|x| if x == 7 { -1 } else { 1 }).collect()
}

/// Names accepted by [`example`].
pub const EXAMPLE_NAMES: &[&str] = &[
    "z2",
    "z3",
    "z2xz2",
    "s3",
    "s4",
    "kz2",
    "kz3",
    "kz2xz2",
    "ks3",
    "ks4",
    "kz2-modules",
    "kz3-modules",
    "kz2xz2-modules",
    "ks3-modules",
    "ks4-modules",
    "fun-z2",
    "fun-s3",
    "fun-z2-modules",
    "fun-s3-modules",
    "dz2",
    "ds3",
    "dz2-modules",
    "vec-z2",
    "vec-z2-fiber",
    "vec-z2-omega",
    "vec-s3",
    "vec-s3-fiber",
];

fn named_group(name: &str) -> Option<GroupTable> {
    Some(match name {
        "z2" => GroupTable::cyclic(2),
        "z3" => GroupTable::cyclic(3),
        "z2xz2" => GroupTable::klein_four(),
        "s3" => GroupTable::symmetric(3),
        "s4" => GroupTable::symmetric(4),
        _ => return None,
    })
}

fn hopf_doc(hopf: HopfPresentation) -> Document {
    Document::Hopf { hopf, labels: None }
}

fn modules_doc(dim: usize, modules: Vec<ModuleRep>) -> Document {
    Document::Modules {
        algebra_dim: dim,
        modules,
    }
}

/// A shipped example by name; `None` for unknown names.
pub fn example(name: &str) -> Option<Document> {
    if let Some(g) = named_group(name) {
        return Some(Document::Group(g));
    }
    let (family, rest) = name.split_once('-').unwrap_or((name, ""));
    let doc = match (family, rest) {
        (k, "") if k.starts_with('k') => hopf_doc(gen_group_algebra(&named_group(&k[1..])?)),
        (k, "modules") if k.starts_with('k') => {
            let g = named_group(&k[1..])?;
            modules_doc(g.order(), group_algebra_irreps(&g)?)
        }
        ("fun", g) => {
            let (g, modules) = match g.split_once('-') {
                Some((g, "modules")) => (named_group(g)?, true),
                None => (named_group(g)?, false),
                _ => return None,
            };
            if modules {
                modules_doc(g.order(), function_algebra_irreps(&g))
            } else {
                hopf_doc(gen_function_algebra(&g))
            }
        }
        (d, "") if d.starts_with('d') => hopf_doc(gen_drinfeld_double(&named_group(&d[1..])?)),
        (d, "modules") if d.starts_with('d') => {
            let g = named_group(&d[1..])?;
            modules_doc(g.order() * g.order(), drinfeld_double_irreps(&g)?)
        }
        ("vec", rest) => {
            let (g, variant) = rest.split_once('-').unwrap_or((rest, ""));
            let g = named_group(g)?;
            let n = g.order();
            let omega = match variant {
                "omega" if n == 2 => z2_sign_cocycle(),
                "" | "fiber" => vec![1; n * n * n],
                _ => return None,
            };
            let (k, fiber) = gen_pointed_category(&g, &omega).ok()?;
            match variant {
                "fiber" => Document::Fiber(fiber?),
                _ => Document::Fusion(k),
            }
        }
        _ => return None,
    };
    Some(doc)
}
