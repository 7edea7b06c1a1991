//! Generated and reconstructed structures compared against values computed
//! independently here: hand expansions, direct permutation arithmetic and
//! character tables.

use tannaka::error::Error;
use tannaka::examples::{
    drinfeld_double_irreps, function_algebra_irreps, gen_drinfeld_double, gen_function_algebra, gen_group_algebra,
    gen_pointed_category, group_algebra_irreps, permutations, z2_sign_cocycle, GroupTable,
};
use tannaka::fusion::{verify_all, verify_pentagon};
use tannaka::hopf::{check_hopf, tensor_hopf, HopfPresentation};
use tannaka::matrix::Matrix;
use tannaka::reconstruct::{reconstruct_hopf, zeta_modules};
use tannaka::repcat::{decompose, gamma_roundtrip, skeletalize, tensor_module, verify_irreps, ModuleRep};
use tannaka::scalar::Scalar;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn ints(v: &[Scalar]) -> Vec<i64> {
    v.iter()
        .map(|x| x.to_string().parse::<i64>().expect("integer entry"))
        .collect()
}

#[test]
fn group_algebra_z2_by_hand() {
    let h = gen_group_algebra(&GroupTable::cyclic(2));
    // e·e = e, e·g = g, g·e = g, g·g = e.
    assert_eq!(ints(&h.alg.mult), vec![1, 0, 0, 1, 0, 1, 1, 0]);
    // Δ(e) = e⊗e, Δ(g) = g⊗g.
    assert_eq!(ints(&h.comult), vec![1, 0, 0, 0, 0, 0, 0, 1]);
    assert_eq!(ints(&h.alg.unit), vec![1, 0]);
    assert_eq!(ints(&h.counit), vec![1, 1]);
    assert!(h.antipode.is_identity());
    assert!(check_hopf(&h).unwrap().passed());
}

#[test]
fn function_algebra_z2_by_hand() {
    let h = gen_function_algebra(&GroupTable::cyclic(2));
    // Δ(δ_0) = δ_0⊗δ_0 + δ_1⊗δ_1, Δ(δ_1) = δ_0⊗δ_1 + δ_1⊗δ_0.
    assert_eq!(ints(&h.comult), vec![1, 0, 0, 1, 0, 1, 1, 0]);
    assert_eq!(ints(&h.alg.mult), vec![1, 0, 0, 0, 0, 0, 0, 1]);
    assert!(h.apply_counit(&h.alg.unit).is_one());
    assert!(h.alg.is_commutative());
}

fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&i| p[i]).collect()
}

#[test]
fn function_algebra_s3_is_not_cocommutative() {
    let perms = permutations(3);
    let h = gen_function_algebra(&GroupTable::symmetric(3));
    let idx = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let a = idx(&[1, 0, 2]);
    let b = idx(&[1, 2, 0]);
    let ab = idx(&compose(&perms[a], &perms[b]));
    assert_ne!(compose(&perms[a], &perms[b]), compose(&perms[b], &perms[a]));
    // δ_a⊗δ_b occurs in Δ(δ_{ab}); the flipped term does not.
    assert!(h.comult_coeff(ab, a, b).is_one());
    assert!(h.comult_coeff(ab, b, a).is_zero());
    assert!(!h.is_cocommutative());
    assert!(h.alg.is_commutative());
}

fn assert_dual_pair(g: &GroupTable) {
    let k = gen_group_algebra(g);
    let f = gen_function_algebra(g);
    let n = g.order();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                assert_eq!(k.alg.mult_coeff(a, b, c), f.comult_coeff(c, a, b));
                assert_eq!(k.comult_coeff(a, b, c), f.alg.mult_coeff(b, c, a));
            }
        }
    }
    assert_eq!(k.alg.unit, f.counit);
    assert_eq!(k.counit, f.alg.unit);
    assert_eq!(k.antipode.transpose(), f.antipode);
}

#[test]
fn group_and_function_algebras_are_dual() {
    assert_dual_pair(&GroupTable::cyclic(2));
    assert_dual_pair(&GroupTable::symmetric(3));
}

#[test]
fn double_of_abelian_group_is_a_tensor_product() {
    let z2 = GroupTable::cyclic(2);
    let d = gen_drinfeld_double(&z2);
    let t = tensor_hopf(&gen_function_algebra(&z2), &gen_group_algebra(&z2));
    assert_eq!(d, t);
    assert!(d.alg.is_commutative() && d.is_cocommutative());
    assert_eq!(d.dim(), 4);
}

#[test]
fn double_of_s3() {
    let d = gen_drinfeld_double(&GroupTable::symmetric(3));
    assert_eq!(d.dim(), 36);
    assert!(check_hopf(&d).unwrap().passed());
    assert!(!d.alg.is_commutative());
    assert!(!d.is_cocommutative());
}

#[test]
fn antipodes_of_built_ins_are_involutions() {
    let groups = [
        GroupTable::cyclic(3),
        GroupTable::klein_four(),
        GroupTable::symmetric(3),
    ];
    for g in &groups {
        for h in [gen_group_algebra(g), gen_function_algebra(g), gen_drinfeld_double(g)] {
            let props = h.antipode_properties().unwrap();
            assert!(props.involutive && props.anti_multiplicative && props.anti_comultiplicative);
        }
    }
}

/// Trace of every group element in a module.
fn character(m: &ModuleRep) -> Vec<Scalar> {
    m.action
        .iter()
        .map(|a| (0..m.dim).map(|i| a.get(i, i).clone()).sum())
        .collect()
}

fn inner(g: &GroupTable, x: &[Scalar], y: &[Scalar]) -> Scalar {
    let total: Scalar = (0..g.order()).map(|a| &x[a] * &y[g.inv(a)]).sum();
    &total * &Scalar::from_frac(1, g.order() as i64).unwrap()
}

#[test]
fn s3_standard_character_counts_fixed_points() {
    let mods = group_algebra_irreps(&GroupTable::symmetric(3)).unwrap();
    let std = mods.iter().find(|m| m.label == "std").unwrap();
    for (p, chi) in permutations(3).iter().zip(character(std)) {
        let fixed = (0..3).filter(|&i| p[i] == i).count() as i64;
        assert_eq!(chi, s(fixed - 1));
    }
    assert_eq!(mods.iter().map(|m| m.dim).collect::<Vec<_>>(), vec![1, 1, 2]);
    assert!(verify_irreps(&gen_group_algebra(&GroupTable::symmetric(3)), &mods)
        .unwrap()
        .passed());
}

#[test]
fn s4_characters_are_orthonormal() {
    let g = GroupTable::symmetric(4);
    let mods = group_algebra_irreps(&g).unwrap();
    let mut dims: Vec<usize> = mods.iter().map(|m| m.dim).collect();
    dims.sort();
    assert_eq!(dims, vec![1, 1, 2, 3, 3]);
    let chars: Vec<Vec<Scalar>> = mods.iter().map(character).collect();
    for (i, x) in chars.iter().enumerate() {
        for (j, y) in chars.iter().enumerate() {
            assert_eq!(inner(&g, x, y), s(i64::from(i == j)), "({i}, {j})");
        }
    }
    assert!(verify_irreps(&gen_group_algebra(&g), &mods).unwrap().passed());
}

#[test]
fn s4_tensor_square_decomposition_matches_characters() {
    let g = GroupTable::symmetric(4);
    let h = gen_group_algebra(&g);
    let mods = group_algebra_irreps(&g).unwrap();
    let std = mods.iter().find(|m| m.label == "std").unwrap();
    let sq = tensor_module(&h, std, std);
    let chi_sq = character(&sq);
    let expected: Vec<usize> = mods
        .iter()
        .map(|m| inner(&g, &chi_sq, &character(m)).to_string().parse().unwrap())
        .collect();
    assert_eq!(decompose(&h, &mods, &sq).unwrap(), expected);
    // triv + two + std + std⊗sgn.
    assert_eq!(expected.iter().sum::<usize>(), 4);
}

#[test]
fn pointed_cocycle_scan_matches_brute_force() {
    let z2 = GroupTable::cyclic(2);
    let omega = |w: &[i64], a: usize, b: usize, c: usize| w[a * 4 + b * 2 + c];
    let violates = |w: &[i64]| {
        (0..16).find(|x| {
            let (a, b, c, d) = (x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1);
            omega(w, b, c, d) * omega(w, a, b ^ c, d) * omega(w, a, b, c)
                != omega(w, a ^ b, c, d) * omega(w, a, b, c ^ d)
        })
    };
    let sign = z2_sign_cocycle();
    assert_eq!(violates(&sign), None);
    let (k, fiber) = gen_pointed_category(&z2, &sign).unwrap();
    assert!(fiber.is_none());
    assert!(verify_pentagon(&k).unwrap().passed());

    let mut corrupted = sign.clone();
    corrupted[6] = -1; // ω(g,g,0)
    let x = violates(&corrupted).expect("corrupted cochain is not a cocycle");
    let tuple = [x >> 3 & 1, x >> 2 & 1, x >> 1 & 1, x & 1];
    assert!(matches!(gen_pointed_category(&z2, &corrupted), Err(Error::NotACocycle(t)) if t == tuple));
}

#[test]
fn reconstruction_from_vec_g_is_the_function_algebra() {
    for g in [GroupTable::cyclic(2), GroupTable::cyclic(3), GroupTable::symmetric(3)] {
        let n = g.order();
        let (k, phi) = gen_pointed_category(&g, &vec![1; n * n * n]).unwrap();
        let phi = phi.unwrap();
        assert!(verify_all(&k, Some(&phi)).unwrap().passed());
        let rec = reconstruct_hopf(&k, &phi).unwrap();
        assert_eq!(rec.hopf, gen_function_algebra(&g));
        let (mods, report) = zeta_modules(&k, &phi, &rec.hopf).unwrap();
        assert!(report.passed());
        assert_eq!(mods.len(), n);
    }
}

#[test]
fn modules_of_fun_g_skeletalize_to_vec_g() {
    let g = GroupTable::symmetric(3);
    let (k, phi) = skeletalize(&gen_function_algebra(&g), &function_algebra_irreps(&g)).unwrap();
    for a in 0..6 {
        for b in 0..6 {
            for c in 0..6 {
                assert_eq!(k.n(a, b, c), usize::from(c == g.mul(a, b)));
            }
        }
        assert_eq!(k.dual[a], g.inv(a));
    }
    assert!(phi.tensorator.iter().all(Matrix::is_identity));
}

#[test]
fn round_trips_beyond_the_small_cases() {
    let z3 = GroupTable::cyclic(3);
    let klein = GroupTable::klein_four();
    let s4 = GroupTable::symmetric(4);
    let cases: Vec<(HopfPresentation, Vec<ModuleRep>)> = vec![
        (gen_group_algebra(&z3), group_algebra_irreps(&z3).unwrap()),
        (gen_group_algebra(&klein), group_algebra_irreps(&klein).unwrap()),
        (gen_group_algebra(&s4), group_algebra_irreps(&s4).unwrap()),
        (gen_drinfeld_double(&z3), drinfeld_double_irreps(&z3).unwrap()),
    ];
    for (h, mods) in cases {
        let rt = gamma_roundtrip(&h, &mods).unwrap();
        assert!(rt.report.passed(), "{}", rt.report);
        let sum: usize = mods.iter().map(|m| m.dim * m.dim).sum();
        assert_eq!(rt.reconstruction.hopf.dim(), sum);
    }
}

#[test]
fn cyclotomic_characters_of_z3() {
    let mods = group_algebra_irreps(&GroupTable::cyclic(3)).unwrap();
    let w = Scalar::root_of_unity(3, 1);
    let chi1 = character(&mods[1]);
    assert_eq!(chi1, vec![Scalar::one(), w.clone(), &w * &w]);
    // 1 + ζ + ζ² = 0.
    assert!((&(&Scalar::one() + &w) + &(&w * &w)).is_zero());
}

#[test]
fn skeletalization_rejects_incomplete_or_reducible_lists() {
    let g = GroupTable::symmetric(3);
    let h = gen_group_algebra(&g);
    let mut mods = group_algebra_irreps(&g).unwrap();
    let std = mods.pop().unwrap();
    assert!(matches!(
        skeletalize(&h, &mods),
        Err(Error::Incomplete { sum: 2, dim: 6 })
    ));
    let reducible = tensor_module(&h, &std, &mods[0]);
    let doubled = ModuleRep {
        label: "triv+triv".into(),
        dim: 2,
        action: mods[0]
            .action
            .iter()
            .map(|m| Matrix::block_diag(&[m.clone(), m.clone()]))
            .collect(),
    };
    mods.push(doubled);
    assert!(matches!(
        skeletalize(&h, &mods),
        Err(Error::NotSplitOrNotSemisimple {
            module: 2,
            commutant_dim: 4
        })
    ));
    assert_eq!(
        decompose(&h, &group_algebra_irreps(&g).unwrap(), &reducible).unwrap(),
        vec![0, 0, 1]
    );
}
