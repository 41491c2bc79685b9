//! Values checked against independent computations: plain loops over structure
//! constants and a separate exact elimination, never the kernel's own quotients.

use num_rational::BigRational;
use num_traits::{One, Zero};

use ew_kernel::cosmos::{braiding, curry, Mor, Obj};
use ew_kernel::day_convolution::{convolve, iterated_dimension, unit_object_iso};
use ew_kernel::functors::{canonical_left_module, residue_hom_lambda, residue_module, FunctorExpr};
use ew_kernel::main_equivalence::{comm_to_functor, functor_to_comm, recover_map, CommOverPair};
use ew_kernel::module_tensor::{mtensor, tensor_over, unit_iso};
use ew_kernel::modules::{internal_hom, Bimodule, RightModule};
use ew_kernel::monoids::{builtin, builtin_morphism, builtin_morphisms, MonoidMor, BUILTIN_ALGEBRAS};
use ew_kernel::random;
use ew_kernel::six_functors::build_pack;
use ew_kernel::Q;

fn q(v: i64) -> Q {
    BigRational::from_integer(v.into())
}

/// Rank by Gauss-Jordan elimination on row vectors.
fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let width = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        let pivot: Vec<Q> = rows[r].iter().map(|v| v * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (x, pv) in row.iter_mut().zip(&pivot) {
                    *x -= &f * pv;
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
    r
}

/// `x·β` for basis vectors, read off the action table.
fn act(x: &RightModule<Q>, i: usize, beta: usize) -> Vec<Q> {
    let db = x.over.dim();
    (0..x.dim()).map(|r| x.action.get(r, i * db + beta).clone()).collect()
}

/// `dim x ⊛_b y` as `dim x·dim y` minus the rank of the balancing relations.
fn tensor_dim_oracle(x: &RightModule<Q>, y: &RightModule<Q>) -> usize {
    let (dx, dy) = (x.dim(), y.dim());
    let mut rows = Vec::new();
    for beta in 0..x.over.dim() {
        for i in 0..dx {
            for j in 0..dy {
                let mut v = vec![q(0); dx * dy];
                for (k, c) in act(x, i, beta).into_iter().enumerate() {
                    v[k * dy + j] += c;
                }
                for (k, c) in act(y, j, beta).into_iter().enumerate() {
                    v[i * dy + k] -= c;
                }
                rows.push(v);
            }
        }
    }
    dx * dy - rank(rows)
}

/// `dim M_b(x, y)`: unknowns `φ[r][i]`, one equation per `(i, β, r')`.
fn hom_dim_oracle(x: &RightModule<Q>, y: &RightModule<Q>) -> usize {
    let (dx, dy) = (x.dim(), y.dim());
    let mut rows = Vec::new();
    for beta in 0..x.over.dim() {
        for i in 0..dx {
            for rp in 0..dy {
                let mut v = vec![q(0); dx * dy];
                for (k, c) in act(x, i, beta).into_iter().enumerate() {
                    v[rp * dx + k] += c;
                }
                for r in 0..dy {
                    v[r * dx + i] -= act(y, r, beta)[rp].clone();
                }
                rows.push(v);
            }
        }
    }
    dx * dy - rank(rows)
}

/// `dim X ⊛_{b⊗b'} Y` with both sides balanced at once.
fn convolution_dim_oracle(x: &Bimodule<Q>, y: &Bimodule<Q>) -> usize {
    let (dx, dy) = (x.dim(), y.dim());
    let (db, dc) = (x.left.dim(), x.right.dim());
    let mut rows = Vec::new();
    for i in 0..dx {
        for j in 0..dy {
            for beta in 0..db {
                let mut v = vec![q(0); dx * dy];
                for k in 0..dx {
                    v[k * dy + j] += x.left_action.get(k, beta * dx + i).clone();
                }
                for k in 0..dy {
                    v[i * dy + k] -= y.left_action.get(k, beta * dy + j).clone();
                }
                rows.push(v);
            }
            for gamma in 0..dc {
                let mut v = vec![q(0); dx * dy];
                for k in 0..dx {
                    v[k * dy + j] += x.right_action.get(k, i * dc + gamma).clone();
                }
                for k in 0..dy {
                    v[i * dy + k] -= y.right_action.get(k, j * dc + gamma).clone();
                }
                rows.push(v);
            }
        }
    }
    dx * dy - rank(rows)
}

fn dual() -> ew_kernel::monoids::CommMonoid<Q> {
    builtin("dual_numbers").unwrap()
}

#[test]
fn residue_dimensions_match_linear_system() {
    let k = residue_module::<Q>();
    let d = RightModule::regular(&dual());
    let oracle = (tensor_dim_oracle(&k, &k), hom_dim_oracle(&k, &d), hom_dim_oracle(&k, &k));
    assert_eq!(oracle, (1, 1, 1));
    assert_eq!(mtensor(&k, &k).unwrap().module.dim(), 1);
    assert_eq!(internal_hom(&k, &d).unwrap().module.dim(), 1);
    assert_eq!(internal_hom(&k, &k).unwrap().module.dim(), 1);
}

#[test]
fn hom_objects_over_the_dual_numbers_are_killed_by_t() {
    let k = residue_module::<Q>();
    let d = RightModule::regular(&dual());
    for y in [&k, &d] {
        let h = internal_hom(&k, y).unwrap();
        // t acts as zero on the one-dimensional hom object
        assert!(h.module.action.get(0, 1).is_zero());
        assert!(h.module.action.get(0, 0).is_one());
    }
}

#[test]
fn random_tensor_and_hom_dimensions_match() {
    let mut g = random::rng(100);
    for name in BUILTIN_ALGEBRAS {
        let b = builtin::<Q>(name).unwrap();
        for _ in 0..6 {
            let x = random::module(&mut g, &b, 3).unwrap();
            let y = random::module(&mut g, &b, 3).unwrap();
            assert_eq!(mtensor(&x, &y).unwrap().module.dim(), tensor_dim_oracle(&x, &y), "{name}");
            assert_eq!(internal_hom(&x, &y).unwrap().module.dim(), hom_dim_oracle(&x, &y), "{name}");
            let reg = RightModule::regular(&b);
            assert_eq!(internal_hom(&reg, &x).unwrap().module.dim(), x.dim());
        }
    }
}

#[test]
fn orthogonal_idempotents_kill_each_other() {
    let first = builtin_morphism::<Q>("first_projection").unwrap();
    let second = builtin_morphism::<Q>("second_projection").unwrap();
    let k = RightModule::regular(&first.dst);
    let a = k.restrict(&first).unwrap();
    let b = k.restrict(&second).unwrap();
    assert_eq!(tensor_dim_oracle(&a, &b), 0);
    assert_eq!(mtensor(&a, &b).unwrap().module.dim(), 0);
}

#[test]
fn wrong_action_fails_associativity_only() {
    let d = dual();
    let wrong = RightModule::new_unchecked(d.clone(), Obj::new(1), Mor::from_i64(Obj::new(2), Obj::new(1), &[&[1, 1]]).unwrap()).unwrap();
    let rep = wrong.check_laws();
    let failed: Vec<_> = rep.failures().map(|c| c.law.as_str()).collect();
    assert_eq!(failed, ["action associativity"]);
    assert!(RightModule::new(d, Obj::new(1), wrong.action.clone()).is_err());
}

#[test]
fn matrix_product_and_kronecker_against_loops() {
    let mut g = random::rng(5);
    let a = random::mor::<Q>(&mut g, Obj::new(2), Obj::new(3));
    let b = random::mor::<Q>(&mut g, Obj::new(4), Obj::new(2));
    let ab = a.compose(&b).unwrap();
    for i in 0..3 {
        for j in 0..4 {
            let mut s = q(0);
            for k in 0..2 {
                s += a.get(i, k) * b.get(k, j);
            }
            assert_eq!(*ab.get(i, j), s);
        }
    }
    let f = Mor::<Q>::from_i64(Obj::new(2), Obj::new(2), &[&[1, 2], &[3, 4]]).unwrap();
    let s = Mor::<Q>::from_i64(Obj::new(2), Obj::new(2), &[&[0, 1], &[1, 0]]).unwrap();
    let kr = f.tensor(&s);
    for (r, row) in [[0, 1, 0, 2], [1, 0, 2, 0], [0, 3, 0, 4], [3, 0, 4, 0]].iter().enumerate() {
        for (c, v) in row.iter().enumerate() {
            assert_eq!(*kr.get(r, c), q(*v));
        }
    }
    let br = braiding::<Q>(Obj::new(2), Obj::new(3));
    for i in 0..2 {
        for j in 0..3 {
            assert!(br.get(j * 2 + i, i * 3 + j).is_one());
        }
    }
}

#[test]
fn curry_of_a_map_out_of_the_unit_is_its_flattening() {
    let f = Mor::<Q>::from_i64(Obj::new(2), Obj::new(3), &[&[1, 2], &[3, 4], &[5, 6]]).unwrap();
    let c = curry(&f, Obj::new(2)).unwrap();
    assert_eq!(c.src().dim, 1);
    for i in 0..3 {
        for j in 0..2 {
            assert_eq!(c.get(i * 2 + j, 0), f.get(i, j));
        }
    }
}

#[test]
fn six_functor_dimensions() {
    let unit = builtin_morphism::<Q>("unit_dual_numbers").unwrap();
    let pack = build_pack(&unit).unwrap();
    let k = RightModule::regular(&unit.src);
    for m in 1..=3 {
        let x = k.tensored(Obj::new(m));
        assert_eq!(pack.pull(&x).unwrap().dim(), 2 * m);
        // projection formula sides: x ⊛_k f_* y and f_*(f* x ⊛_D y) both have dim m·n
        let y = residue_module::<Q>().tensored(Obj::new(2));
        let (canonical, closed) = pack.projection_formula(&x, &y).unwrap();
        assert_eq!((canonical.src.dim(), canonical.dst.dim()), (2 * m, 2 * m));
        assert!(canonical.is_iso() && canonical.map == closed.map);
    }
    let d = RightModule::regular(&unit.dst);
    let lax = pack.lax_pushforward(&d, &d).unwrap();
    assert_eq!((lax.src.dim(), lax.dst.dim(), lax.map.rank()), (4, 2, 2));
    let pb = pack.tensor_pullback(&k, &k).unwrap();
    assert_eq!((pb.src.dim(), pb.dst.dim()), (2, 2));
    assert!(pb.is_iso());
    let s = pack.shriek_star_iso(&residue_module()).unwrap();
    assert_eq!(s.src.dim(), 1);
    assert!(s.is_iso());

    let aug = builtin_morphism::<Q>("augmentation_dual_numbers").unwrap();
    let pack = build_pack(&aug).unwrap();
    let d = RightModule::regular(&aug.src);
    assert_eq!(pack.pull(&d).unwrap().dim(), 1);
    let (canonical, _) = pack.projection_formula(&d, &RightModule::regular(&aug.dst)).unwrap();
    assert_eq!((canonical.src.dim(), canonical.dst.dim()), (1, 1));
}

#[test]
fn unit_coherences_are_the_stated_maps() {
    for (_, f) in builtin_morphisms::<Q>() {
        let pack = build_pack(&f).unwrap();
        // the lax unit of restriction is f itself
        assert_eq!(pack.lax_pushforward_unit().map, f.map);
        // the unit of pullback is the inverse of the unit iso
        let iota = unit_iso(&pack.pulled).unwrap();
        assert_eq!(pack.tensor_pullback_unit().unwrap().map, iota.map.inverse().unwrap());
        // restriction has identity strength
        let y = RightModule::regular(&f.dst);
        assert!(pack.pushforward.strength(Obj::new(2), &y).unwrap().map.is_identity());
    }
}

#[test]
fn hom_out_of_the_residue_field() {
    let lam = residue_hom_lambda::<Q>().unwrap();
    assert_eq!((lam.src.dim(), lam.dst.dim()), (1, 1));
    assert!(lam.map.is_zero());
    let k = residue_module::<Q>();
    let fun = FunctorExpr::HomModule(k.as_bimodule());
    let can = canonical_left_module(&fun).unwrap();
    assert_eq!(can.dim(), 1);
    assert!(can.left_action.get(0, 1).is_zero() && can.right_action.get(0, 1).is_zero());
    // Hom_D(k, -) applied to D -> k is zero between lines
    let d = RightModule::regular(&dual());
    let proj = ew_kernel::modules::ModuleMor::new(d, k.clone(), Mor::from_i64(Obj::new(2), Obj::new(1), &[&[1, 0]]).unwrap()).unwrap();
    let image = fun.apply_mor(&proj).unwrap();
    assert_eq!((image.src.dim(), image.dst.dim()), (1, 1));
    assert!(image.map.is_zero());
}

#[test]
fn extraction_dimensions_and_maps() {
    let unit = builtin_morphism::<Q>("unit_dual_numbers").unwrap();
    let aug = builtin_morphism::<Q>("augmentation_dual_numbers").unwrap();
    assert_eq!(recover_map(&unit).unwrap(), unit.map);
    assert_eq!(recover_map(&aug).unwrap(), aug.map);
    let fun = comm_to_functor(&CommOverPair::new(aug.clone(), MonoidMor::identity(&aug.dst)).unwrap()).unwrap();
    assert_eq!(functor_to_comm(&fun).unwrap().monoid.dim(), 1);
    let p = CommOverPair::new(unit.clone(), MonoidMor::identity(&unit.dst)).unwrap();
    let e = functor_to_comm(&comm_to_functor(&p).unwrap()).unwrap();
    assert_eq!(e.monoid.dim(), 2);
    // over k the tensor is plain: u ⊗ D has dim 2
    let k = RightModule::regular(&unit.src);
    assert_eq!(tensor_over(&k, &Bimodule::pulled_regular(&unit)).unwrap().module.dim(), 2);
}

#[test]
fn convolution_dimensions_match_both_oracles() {
    let mut g = random::rng(77);
    let bases = [
        ("ground", "ground"),
        ("dual_numbers", "ground"),
        ("dual_numbers", "dual_numbers"),
        ("split_pair", "z2_group_algebra"),
        ("t_cubed", "dual_numbers"),
    ];
    let mut count = 0;
    for (l, r) in bases {
        let b = builtin::<Q>(l).unwrap();
        let c = builtin::<Q>(r).unwrap();
        for _ in 0..5 {
            let x = random::bimodule(&mut g, &b, &c, 3).unwrap();
            let y = random::bimodule(&mut g, &b, &c, 3).unwrap();
            let dim = convolve(&x, &y).unwrap().product.dim();
            assert_eq!(dim, convolution_dim_oracle(&x, &y));
            assert_eq!(dim, iterated_dimension(&x, &y).unwrap());
            count += 1;
        }
    }
    assert!(count >= 20);
}

#[test]
fn trivial_dual_convolution_and_unit_object_dimensions() {
    let d = dual();
    let act = Mor::<Q>::from_i64(Obj::new(2), Obj::new(1), &[&[1, 0]]).unwrap();
    let t = Bimodule::new(d.clone(), d.clone(), Obj::new(1), act.clone(), act).unwrap();
    assert_eq!(convolution_dim_oracle(&t, &t), 1);
    let r = convolve(&t, &t).unwrap();
    assert_eq!(r.product.dim(), 1);
    let reg = RightModule::regular(&d);
    let th = r.theta(&reg, &reg).unwrap();
    assert_eq!((th.src.dim(), th.dst.dim()), (1, 1));
    assert!(th.is_iso());

    for (bn, cn) in [("dual_numbers", "dual_numbers"), ("t_cubed", "split_pair"), ("ground", "z2_group_algebra")] {
        let b = builtin::<Q>(bn).unwrap();
        let c = builtin::<Q>(cn).unwrap();
        let iso = unit_object_iso(&c, &RightModule::regular(&b)).unwrap();
        assert_eq!(iso.src.dim(), b.dim() * c.dim());
        assert!(iso.is_iso());
    }
    let k = builtin::<Q>("ground").unwrap();
    let iso = unit_object_iso(&k, &residue_module()).unwrap();
    assert_eq!((iso.src.dim(), iso.dst.dim()), (1, 1));
}

#[test]
fn coproduct_of_dual_numbers_has_expected_structure_constants() {
    let d = dual();
    let dd = d.coproduct(&d).monoid;
    assert_eq!(dd.dim(), 4);
    // basis 1, t, s, st with s = t ⊗ 1 and t = 1 ⊗ t; s·t = st, s² = t² = 0
    let e = |i: usize, j: usize| dd.basis_product(i, j);
    assert_eq!(e(1, 2), vec![q(0), q(0), q(0), q(1)]);
    assert_eq!(e(1, 1), vec![q(0); 4]);
    assert_eq!(e(2, 2), vec![q(0); 4]);
}

#[test]
fn group_algebra_splits_in_odd_characteristic() {
    let z = builtin::<Q>("z2_group_algebra").unwrap();
    let s = builtin::<Q>("split_pair").unwrap();
    // idempotents (1 ± s)/2 give an isomorphism onto k × k
    let half = BigRational::new(1.into(), 2.into());
    let m = Mor::from_rows(
        Obj::new(2),
        Obj::new(2),
        vec![vec![half.clone(), half.clone()], vec![half.clone(), -half]],
    )
    .unwrap();
    let iso = MonoidMor::new(s, z, m).unwrap();
    assert!(iso.is_iso());
}
