//! End-to-end acceptance checks, one line per check, all in exact arithmetic.
//! Runs without the libtest harness so every line is printed; exits nonzero
//! when any check fails.

use std::process::ExitCode;
use std::time::Instant;

use tannaka::examples::{
    drinfeld_double_irreps, function_algebra_irreps, gen_drinfeld_double, gen_function_algebra, gen_group_algebra,
    gen_pointed_category, group_algebra_irreps, z2_sign_cocycle, GroupTable,
};
use tannaka::fusion::{verify_all, verify_pentagon, verify_tensorator, FiberData, FusionSkeleton};
use tannaka::hopf::{check_algebra, check_antipode, check_bialgebra, check_hopf, HopfPresentation};
use tannaka::matrix::Matrix;
use tannaka::reconstruct::{reconstruct_hopf, transport_along, zeta_modules, EndFElement, SliceMorphismData};
use tannaka::repcat::{gamma_roundtrip, skeletalize, ModuleRep};
use tannaka::scalar::Scalar;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn hopf_axioms() -> Outcome {
    let z2 = GroupTable::cyclic(2);
    let s3 = GroupTable::symmetric(3);
    let cases: Vec<(&str, HopfPresentation)> = vec![
        ("K[Z/2]", gen_group_algebra(&z2)),
        ("K[Z/2xZ/2]", gen_group_algebra(&GroupTable::klein_four())),
        ("K[S3]", gen_group_algebra(&s3)),
        ("K[S4]", gen_group_algebra(&GroupTable::symmetric(4))),
        ("Fun(Z/2)", gen_function_algebra(&z2)),
        ("Fun(S3)", gen_function_algebra(&s3)),
        ("D(Z/2)", gen_drinfeld_double(&z2)),
        ("D(S3)", gen_drinfeld_double(&s3)),
    ];
    for (name, h) in &cases {
        for report in [
            check_algebra(&h.alg).map_err(err)?,
            check_bialgebra(h).map_err(err)?,
            check_antipode(h).map_err(err)?,
        ] {
            for c in &report.checks {
                ensure(
                    c.failures.is_empty(),
                    format!("{name}: {} has {} failures", c.name, c.failures.len()),
                )?;
            }
        }
    }
    Ok(format!("{} algebras, every record empty", cases.len()))
}

fn roundtrip_cases() -> Vec<(&'static str, HopfPresentation, Vec<ModuleRep>)> {
    let z2 = GroupTable::cyclic(2);
    let s3 = GroupTable::symmetric(3);
    vec![
        ("K[Z/2]", gen_group_algebra(&z2), group_algebra_irreps(&z2).unwrap()),
        ("K[S3]", gen_group_algebra(&s3), group_algebra_irreps(&s3).unwrap()),
        ("Fun(S3)", gen_function_algebra(&s3), function_algebra_irreps(&s3)),
        ("D(Z/2)", gen_drinfeld_double(&z2), drinfeld_double_irreps(&z2).unwrap()),
    ]
}

fn gamma_direction() -> Outcome {
    let names = [
        "gamma_bijective",
        "gamma_algebra_hom",
        "gamma_coalgebra_hom",
        "gamma_counit",
        "gamma_antipode",
    ];
    let mut done = Vec::new();
    for (name, h, mods) in roundtrip_cases() {
        let rt = gamma_roundtrip(&h, &mods).map_err(|e| format!("{name}: {e}"))?;
        for id in names {
            let rec = rt.report.check(id).ok_or(format!("{name}: {id} missing"))?;
            ensure(rec.passed, format!("{name}: {id} failed\n{}", rt.report))?;
        }
        let sum: usize = mods.iter().map(|m| m.dim * m.dim).sum();
        let end_dim = rt.reconstruction.hopf.dim();
        ensure(
            end_dim == sum && sum == h.dim(),
            format!("{name}: dim End = {end_dim}, sum d^2 = {sum}, dim H = {}", h.dim()),
        )?;
        done.push(name);
    }
    Ok(format!("five identities hold for {}", done.join(", ")))
}

/// Vec_{Z/2} and Vec_{S3} with their trivial fiber functors.
fn pointed_fixtures() -> Vec<(&'static str, FusionSkeleton, FiberData)> {
    [
        ("Vec_{Z/2}", GroupTable::cyclic(2)),
        ("Vec_{S3}", GroupTable::symmetric(3)),
    ]
    .into_iter()
    .map(|(name, g)| {
        let n = g.order();
        let (k, phi) = gen_pointed_category(&g, &vec![1; n * n * n]).unwrap();
        (name, k, phi.unwrap())
    })
    .collect()
}

/// Every Hopf algebra reconstructed in this suite.
fn reconstructed() -> Result<Vec<(String, FusionSkeleton, FiberData, HopfPresentation)>, String> {
    let mut out = Vec::new();
    for (name, h, mods) in roundtrip_cases() {
        let (k, phi) = skeletalize(&h, &mods).map_err(|e| format!("{name}: {e}"))?;
        let rec = reconstruct_hopf(&k, &phi).map_err(|e| format!("{name}: {e}"))?;
        out.push((format!("End(Rep {name})"), k, phi, rec.hopf));
    }
    for (name, k, phi) in pointed_fixtures() {
        let rec = reconstruct_hopf(&k, &phi).map_err(|e| format!("{name}: {e}"))?;
        out.push((format!("End({name})"), k, phi, rec.hopf));
    }
    Ok(out)
}

fn zeta_direction() -> Outcome {
    let all = reconstructed()?;
    for (name, k, phi, h) in &all {
        let (mods, report) = zeta_modules(k, phi, h).map_err(err)?;
        ensure(report.passed(), format!("{name}:\n{report}"))?;
        let sum: usize = mods.iter().map(|m| m.dim * m.dim).sum();
        ensure(sum == h.dim(), format!("{name}: sum d^2 = {sum} != {}", h.dim()))?;
        ensure(
            report.check("pairwise_hom").is_some_and(|c| c.passed),
            format!("{name}: pairwise Hom nonzero"),
        )?;
    }
    Ok(format!("{} reconstructions give complete irreducible lists", all.len()))
}

fn antipode_snakes() -> Outcome {
    let all = reconstructed()?;
    for (name, _, _, h) in &all {
        let report = check_antipode(h).map_err(err)?;
        for id in ["antipode_left", "antipode_right"] {
            let rec = report.check(id).ok_or(format!("{name}: {id} missing"))?;
            ensure(rec.failures.is_empty(), format!("{name}: {id}\n{report}"))?;
        }
    }
    Ok(format!("m(S⊗id)Δ = m(id⊗S)Δ = uε on {} reconstructions", all.len()))
}

fn comultiplication_coherence() -> Outcome {
    let (_, k, phi) = pointed_fixtures().remove(0);
    ensure(
        verify_tensorator(&k, &phi).map_err(err)?.passed(),
        "fixture tensorator rejected",
    )?;
    let rec = reconstruct_hopf(&k, &phi).map_err(err)?;
    let bi = check_bialgebra(&rec.hopf).map_err(err)?;
    for id in ["coassociativity", "comult_multiplicative"] {
        ensure(
            bi.check(id).is_some_and(|c| c.passed),
            format!("reconstructed {id} failed"),
        )?;
    }
    let mut missed = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            let mut bad = phi.clone();
            let x = a * 2 + b;
            let v = bad.tensorator[x].get(0, 0) + &Scalar::one();
            bad.tensorator[x].set(0, 0, v);
            let caught = match verify_all(&k, Some(&bad)) {
                Err(_) => true,
                Ok(r) if !r.passed() => true,
                Ok(_) => match reconstruct_hopf(&k, &bad) {
                    Err(_) => true,
                    Ok(rec2) => !check_hopf(&rec2.hopf).map_err(err)?.passed(),
                },
            };
            if !caught {
                missed.push(format!("J[{a},{b}]"));
            }
        }
    }
    ensure(
        missed.is_empty(),
        format!(
            "coassociative and multiplicative; +1 mutations not rejected by any check: {} \
             (each is again a valid tensor structure on the fiber functor)",
            missed.join(", ")
        ),
    )?;
    Ok("coassociative and multiplicative; all 4 mutations rejected".into())
}

fn fiber_obstruction() -> Outcome {
    let z2 = GroupTable::cyclic(2);
    let (k, none) = gen_pointed_category(&z2, &z2_sign_cocycle()).map_err(err)?;
    ensure(none.is_none(), "a fiber functor was emitted for the twisted category")?;
    ensure(verify_pentagon(&k).map_err(err)?.passed(), "pentagon failed")?;
    let mut ratios = Vec::new();
    for s in [
        Scalar::from_int(1),
        Scalar::from_int(-1),
        Scalar::from_int(2),
        Scalar::from_frac(1, 2).unwrap(),
        Scalar::from_int(3),
    ] {
        let mut tensorator = vec![Matrix::identity(1); 4];
        tensorator[3] = Matrix::new(1, 1, vec![s.clone()]).unwrap();
        let phi = FiberData {
            dims: vec![1, 1],
            tensorator,
            iota: Scalar::one(),
            ev: vec![vec![Scalar::one()]; 2],
            coev: vec![vec![Scalar::one()]; 2],
        };
        let report = verify_tensorator(&k, &phi).map_err(err)?;
        ensure(
            report.check("unit_constraints").is_some_and(|c| c.passed),
            format!("J[g,g] = {s}: unit constraint failed"),
        )?;
        let hex = report.check("hexagon").ok_or("hexagon record missing")?;
        let tuples: Vec<&[usize]> = hex.failures.iter().map(|f| &f.indices[..3]).collect();
        ensure(
            tuples == vec![&[1, 1, 1][..]],
            format!("J[g,g] = {s}: hexagon failures at {tuples:?}"),
        )?;
        let f = &hex.failures[0];
        let (l, r): (Scalar, Scalar) = (f.lhs.parse().map_err(err)?, f.rhs.parse().map_err(err)?);
        ratios.push(&l * &r.inv().map_err(err)?);
    }
    ensure(
        ratios.iter().all(|q| *q == Scalar::from_int(-1)),
        format!("lhs/rhs ratios {ratios:?}"),
    )?;
    Ok("pentagon passes; hexagon fails only at (g,g,g) with lhs/rhs = -1 for J[g,g] in {1,-1,2,1/2,3}".into())
}

fn skeletalization_fidelity() -> Outcome {
    let s3 = GroupTable::symmetric(3);
    let h = gen_group_algebra(&s3);
    let mods = group_algebra_irreps(&s3).unwrap();
    let (k, phi) = skeletalize(&h, &mods).map_err(err)?;
    let idx = |l: &str| k.simples.iter().position(|s| s == l).unwrap();
    let (triv, sgn, std) = (idx("triv"), idx("sgn"), idx("std"));
    let row: Vec<usize> = [triv, sgn, std].iter().map(|&c| k.n(std, std, c)).collect();
    ensure(row == vec![1, 1, 1], format!("std⊗std multiplicities {row:?}"))?;
    let report = verify_all(&k, Some(&phi)).map_err(err)?;
    ensure(report.passed(), format!("{report}"))?;
    for id in ["pentagon", "hexagon", "snake_object", "snake_dual"] {
        ensure(report.check(id).is_some(), format!("{id} not run"))?;
    }
    let rt = gamma_roundtrip(&h, &mods).map_err(err)?;
    ensure(rt.report.passed(), format!("{}", rt.report))?;
    Ok("std⊗std = triv⊕sgn⊕std; category checks pass; γ is a Hopf isomorphism".into())
}

fn mutation_robustness() -> Outcome {
    let h = gen_group_algebra(&GroupTable::cyclic(2));
    let bump = |v: &mut Scalar| *v = &*v + &Scalar::one();
    let mut total = 0;
    let mut missed = Vec::new();
    let mut run = |label: String, m: HopfPresentation| {
        total += 1;
        if check_hopf(&m).map(|r| r.passed()).unwrap_or(false) {
            missed.push(label);
        }
    };
    for i in 0..8 {
        let mut m = h.clone();
        bump(&mut m.alg.mult[i]);
        run(format!("mult[{i}]"), m);
        let mut m = h.clone();
        bump(&mut m.comult[i]);
        run(format!("comult[{i}]"), m);
    }
    for i in 0..2 {
        let mut m = h.clone();
        bump(&mut m.counit[i]);
        run(format!("counit[{i}]"), m);
    }
    for i in 0..2 {
        for j in 0..2 {
            let mut m = h.clone();
            let v = m.antipode.get(i, j) + &Scalar::one();
            m.antipode.set(i, j, v);
            run(format!("antipode[{i}][{j}]"), m);
        }
    }
    ensure(missed.is_empty(), format!("undetected: {}", missed.join(", ")))?;
    Ok(format!("{total} single-entry mutations all detected"))
}

fn basis_elements(dims: &[usize]) -> Vec<EndFElement> {
    tannaka::reconstruct::endf_basis(dims)
        .into_iter()
        .map(|l| EndFElement::basis_element(dims, l))
        .collect()
}

fn transport_functoriality() -> Outcome {
    let mut lines = Vec::new();
    for (name, g) in [("Z/2", GroupTable::cyclic(2)), ("S3", GroupTable::symmetric(3))] {
        let h = gen_group_algebra(&g);
        let mods = group_algebra_irreps(&g).unwrap();
        let rt = gamma_roundtrip(&h, &mods).map_err(err)?;
        let k = &rt.skeleton;
        let dims = &rt.fiber.dims;
        let r = k.rank();
        // Vec → Rep(G): the ground field goes to the trivial module.
        let unit_row: Vec<u32> = (0..r).map(|c| u32::from(c == k.unit)).collect();
        let t1 = SliceMorphismData {
            multiplicities: vec![unit_row],
            tau: vec![Matrix::identity(1)],
        };
        // Rep(G) → Rep(G): the identity functor with a non-identity τ.
        let t2 = SliceMorphismData {
            multiplicities: (0..r).map(|a| (0..r).map(|c| u32::from(a == c)).collect()).collect(),
            tau: dims
                .iter()
                .map(|&d| {
                    Matrix::from_fn(d, d, |i, j| {
                        Scalar::from_int(if i == j {
                            2
                        } else if i < j {
                            1
                        } else {
                            0
                        })
                    })
                })
                .collect(),
        };
        let id = SliceMorphismData::identity(dims);
        let composite = t1.compose(&t2, dims).map_err(err)?;
        for eta in basis_elements(dims) {
            ensure(
                transport_along(&id, &eta).map_err(err)? == eta,
                format!("{name}: identity transport moved {eta:?}"),
            )?;
            let two_step = transport_along(&t1, &transport_along(&t2, &eta).map_err(err)?).map_err(err)?;
            let one_step = transport_along(&composite, &eta).map_err(err)?;
            ensure(two_step == one_step, format!("{name}: composition differs at {eta:?}"))?;
        }
        // Under γ, Vec → Rep(G) transports h to ε(h).
        for i in 0..h.dim() {
            let coords = rt.gamma.column(i);
            let eta = EndFElement::from_coords(dims, &coords).map_err(err)?;
            let image = transport_along(&t1, &eta).map_err(err)?;
            ensure(
                image.blocks[0].get(0, 0) == &h.counit[i],
                format!("{name}: transport of γ(e_{i}) is not ε(e_{i})"),
            )?;
        }
        lines.push(name);
    }
    Ok(format!(
        "identities, composition and ε under γ hold for Vec → Rep(G) → Rep(G), G in {}",
        lines.join(", ")
    ))
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Outcome); 9] = [
        ("Hopf axioms of generated algebras", hopf_axioms),
        ("γ round trip", gamma_direction),
        ("ζ modules are complete irreducibles", zeta_direction),
        ("antipode snake identities", antipode_snakes),
        (
            "coproduct coherence and tensorator mutations",
            comultiplication_coherence,
        ),
        ("fiber functor obstruction for twisted Vec_{Z/2}", fiber_obstruction),
        ("skeletalization of K[S3]", skeletalization_fidelity),
        ("mutation robustness of K[Z/2]", mutation_robustness),
        ("transport functoriality", transport_functoriality),
    ];
    let mut failed = 0;
    for (i, (name, f)) in checks.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(msg) => println!("acceptance {} PASS {name} ({ms} ms): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("acceptance {} FAIL {name} ({ms} ms): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
