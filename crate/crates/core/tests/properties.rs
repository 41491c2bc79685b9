use proptest::prelude::*;

use ew_kernel::cosmos::{closed_law_checks, cosmos_law_checks, tensor_functoriality, Obj};
use ew_kernel::day_convolution::{check_comm_pair, check_symmetry, convolve, iterated_dimension};
use ew_kernel::functors::{ew_roundtrip, FunctorExpr};
use ew_kernel::laws::LawReport;
use ew_kernel::main_equivalence::{builtin_pairs, comm_to_functor, lambda_tensor_check, roundtrip_main};
use ew_kernel::module_tensor::{check_adjunction_triangles, check_coherence_isos, check_monoidal_coherence};
use ew_kernel::monoids::{builtin, builtin_morphisms, BUILTIN_ALGEBRAS};
use ew_kernel::random::{self, Rng64};
use ew_kernel::six_functors::build_pack;
use ew_kernel::{Field, Fp, Q};

fn green(rep: LawReport) -> std::result::Result<(), TestCaseError> {
    let bad: Vec<String> = rep.failures().map(|c| format!("{}: {:?}", c.law, c.witness)).collect();
    prop_assert!(bad.is_empty(), "{:?}", bad);
    Ok(())
}

fn all_true(v: Vec<(String, bool)>) -> std::result::Result<(), TestCaseError> {
    let bad: Vec<_> = v.into_iter().filter(|(_, ok)| !ok).map(|(n, _)| n).collect();
    prop_assert!(bad.is_empty(), "{:?}", bad);
    Ok(())
}

fn modules<F: Field>(g: &mut Rng64, name: &str, n: usize) -> Vec<ew_kernel::modules::RightModule<F>> {
    let b = builtin::<F>(name).unwrap();
    (0..n).map(|_| random::module(g, &b, 3).unwrap()).collect()
}

fn cosmos_case<F: Field>(seed: u64) -> std::result::Result<(), TestCaseError> {
    let mut g = random::rng(seed);
    let [x, y, z, w] = [0; 4].map(|_| random::obj(&mut g, 3));
    all_true(cosmos_law_checks::<F>(x, y, z, w))?;
    let f = random::mor::<F>(&mut g, x, y);
    let f2 = random::mor::<F>(&mut g, w, x);
    let g2 = random::mor::<F>(&mut g, x, y);
    let g1 = random::mor::<F>(&mut g, y, z);
    prop_assert!(tensor_functoriality(&f, &g1, &f2, &g2).unwrap());
    let c = random::mor::<F>(&mut g, z.tensor(x), y);
    all_true(closed_law_checks(&c, x).unwrap())
}

fn module_case<F: Field>(seed: u64, alg: usize) -> std::result::Result<(), TestCaseError> {
    let mut g = random::rng(seed);
    let name = BUILTIN_ALGEBRAS[alg];
    let ms = modules::<F>(&mut g, name, 4);
    for m in &ms {
        green(m.check_laws())?;
    }
    green(check_monoidal_coherence(&ms[0], &ms[1], &ms[2], &ms[3]))?;
    green(check_coherence_isos(&ms[0], &ms[1], &ms[2]))?;
    green(check_adjunction_triangles(&ms[0], &ms[1].as_bimodule(), &ms[2]))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn cosmos_laws_over_q(seed in any::<u64>()) {
        cosmos_case::<Q>(seed)?;
    }

    #[test]
    fn cosmos_laws_over_f7(seed in any::<u64>()) {
        cosmos_case::<Fp<7>>(seed)?;
    }

    #[test]
    fn module_category_is_closed_symmetric_monoidal(seed in any::<u64>(), alg in 0..BUILTIN_ALGEBRAS.len()) {
        module_case::<Q>(seed, alg)?;
    }

    #[test]
    fn module_category_over_f2(seed in any::<u64>(), alg in 0..BUILTIN_ALGEBRAS.len()) {
        module_case::<Fp<2>>(seed, alg)?;
    }

    #[test]
    fn tensoring_with_a_bimodule_is_recovered(seed in any::<u64>(), alg in 0..BUILTIN_ALGEBRAS.len()) {
        let mut g = random::rng(seed);
        let b = builtin::<Q>(BUILTIN_ALGEBRAS[alg]).unwrap();
        let x = random::bimodule(&mut g, &b, &b, 3).unwrap();
        let samples = modules::<Q>(&mut g, BUILTIN_ALGEBRAS[alg], 2);
        green(ew_roundtrip(&x, &samples))?;
        let fun = FunctorExpr::TensorBimodule(x);
        let h = random::module_map(&mut g, &samples[0], &samples[1]).unwrap();
        let k = random::module_map(&mut g, &samples[1], &samples[0]).unwrap();
        let (w, v) = (random::obj(&mut g, 2), random::obj(&mut g, 2));
        let lin = random::mor::<Q>(&mut g, w, v);
        green(fun.check_laws(&h, &k, w, v, &lin))?;
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn six_functor_invariants(seed in any::<u64>(), which in 0usize..4) {
        let maps = builtin_morphisms::<Q>();
        let names = ["unit_dual_numbers", "augmentation_dual_numbers", "id_dual_numbers", "t_cubed_to_dual"];
        let f = &maps.iter().find(|(n, _)| n == names[which]).unwrap().1;
        let pack = build_pack(f).unwrap();
        let mut g = random::rng(seed);
        let x = random::module(&mut g, &f.src, 2).unwrap();
        let x2 = random::module(&mut g, &f.src, 2).unwrap();
        let y = random::module(&mut g, &f.dst, 2).unwrap();
        let y2 = random::module(&mut g, &f.dst, 2).unwrap();
        green(pack.check_pullback_adjunction(&x, &y))?;
        green(pack.check_shriek_adjunction(&y, &x))?;
        green(pack.check_mate(&x, &x2))?;
        green(pack.check_projection_formula(&x, &y))?;
        let h = random::module_map(&mut g, &y, &y2).unwrap();
        green(pack.check_shriek_star(&h))?;
        green(pack.check_lax_pushforward(&y, &y2, &y, &h))?;
    }

    #[test]
    fn comm_pairs_round_trip(seed in any::<u64>(), which in 0usize..7) {
        let (_, p) = builtin_pairs::<Q>().swap_remove(which);
        green(roundtrip_main(&p))?;
        let fun = comm_to_functor(&p).unwrap();
        let mut g = random::rng(seed);
        let samples: Vec<_> = (0..2).map(|_| random::module(&mut g, fun.source(), 2).unwrap()).collect();
        green(lambda_tensor_check(&fun, &samples))?;
        let h = random::module_map(&mut g, &samples[0], &samples[1]).unwrap();
        green(fun.check_axioms(&samples[0], &samples[1], &samples[0], &h))?;
        let w = random::module(&mut g, &p.f.src, 2).unwrap();
        let z = random::module(&mut g, &p.f.src, 2).unwrap();
        green(check_comm_pair(&p, &w, &z))?;
    }

    #[test]
    fn convolution_is_symmetric_and_balanced(seed in any::<u64>(), base in 0usize..3) {
        let bases = [("dual_numbers", "ground"), ("dual_numbers", "dual_numbers"), ("split_pair", "z2_group_algebra")];
        let (l, r) = bases[base];
        let (b, c) = (builtin::<Q>(l).unwrap(), builtin::<Q>(r).unwrap());
        let mut g = random::rng(seed);
        let x = random::bimodule(&mut g, &b, &c, 2).unwrap();
        let y = random::bimodule(&mut g, &b, &c, 2).unwrap();
        let res = convolve(&x, &y).unwrap();
        green(res.check())?;
        prop_assert_eq!(res.product.dim(), iterated_dimension(&x, &y).unwrap());
        green(check_symmetry(&x, &y))?;
        let w = random::module(&mut g, &b, 2).unwrap();
        let z = random::module(&mut g, &b, 2).unwrap();
        let h = random::module_map(&mut g, &w, &w).unwrap();
        green(res.check_theta(&w, &z, &h))?;
    }
}

#[test]
fn objects_tensor_multiplicatively() {
    proptest!(|(a in 1usize..6, b in 1usize..6)| {
        prop_assert_eq!(Obj::new(a).tensor(Obj::new(b)).dim, a * b);
        prop_assert_eq!(Obj::new(a).hom(Obj::new(b)).dim, a * b);
    });
}
