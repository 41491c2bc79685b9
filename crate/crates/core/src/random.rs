//! Seeded random objects, maps, modules and bimodules.
//!
//! Modules are cokernels of random maps between free modules, so every
//! sample satisfies the module laws by construction.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cosmos::{cokernel, Mor, Obj, SplitEpi};
use crate::error::{KernelError, Result};
use crate::field::Field;
use crate::modules::{internal_hom, Bimodule, ModuleMor, RightModule};
use crate::monoids::CommMonoid;

pub type Rng64 = ChaCha8Rng;

const RETRY_BUDGET: usize = 1000;

pub fn rng(seed: u64) -> Rng64 {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn scalar<F: Field>(rng: &mut Rng64) -> F {
    F::from_i64(rng.gen_range(-3..=3))
}

pub fn obj(rng: &mut Rng64, max_dim: usize) -> Obj {
    Obj::new(rng.gen_range(1..=max_dim.max(1)))
}

pub fn mor<F: Field>(rng: &mut Rng64, src: Obj, dst: Obj) -> Mor<F> {
    Mor::from_fn(src, dst, |_, _| scalar(rng))
}

/// A random element of `b` whose entries are mostly zero, so that
/// presentations have interesting relations.
fn sparse_column<F: Field>(rng: &mut Rng64, n: usize) -> Vec<F> {
    (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                F::zero()
            } else {
                scalar(rng)
            }
        })
        .collect()
}

/// `k^m ⊗ b` with `b` acting on the right factor.
pub fn free_module<F: Field>(b: &CommMonoid<F>, m: usize) -> RightModule<F> {
    RightModule::regular(b).tensored(Obj::new(m))
}

/// The module map `k^n ⊗ b -> k^m ⊗ b` sending generator `i` to column `i` of `gens`.
fn free_map<F: Field>(b: &CommMonoid<F>, gens: &Mor<F>, m: usize) -> Result<Mor<F>> {
    let free_m = free_module(b, m);
    free_m.action.compose(&gens.tensor(&b.id()))
}

/// A random right `b`-module of dimension in `1..=max_dim`.
pub fn module<F: Field>(rng: &mut Rng64, b: &CommMonoid<F>, max_dim: usize) -> Result<RightModule<F>> {
    let db = b.dim();
    for _ in 0..RETRY_BUDGET {
        let m = rng.gen_range(1..=max_dim.max(1));
        let n = rng.gen_range(0..=m + 1);
        let mut gens = Mor::zero(Obj::new(n), Obj::new(m * db));
        for c in 0..n {
            for (r, v) in sparse_column::<F>(rng, m * db).into_iter().enumerate() {
                gens.set(r, c, v);
            }
        }
        let phi = free_map(b, &gens, m)?;
        let pres = cokernel(&phi);
        let dim = pres.quot.dim;
        if dim == 0 || dim > max_dim {
            continue;
        }
        let free_m = free_module(b, m);
        let epi = pres.epi().tensor(&SplitEpi::identity(b.carrier));
        let action = epi.factor(&pres.proj.compose(&free_m.action)?, "presented module action")?;
        return RightModule::new(b.clone(), pres.quot, action);
    }
    Err(KernelError::Invalid(format!("no module of dimension at most {max_dim} within the retry budget")))
}

/// A random `(b, c)`-bimodule of dimension in `1..=max_dim`.
pub fn bimodule<F: Field>(
    rng: &mut Rng64,
    b: &CommMonoid<F>,
    c: &CommMonoid<F>,
    max_dim: usize,
) -> Result<Bimodule<F>> {
    let cop = b.coproduct(c);
    let x = module(rng, &cop.monoid, max_dim)?;
    split_coproduct_module(&x, b, c)
}

/// A right `b ⊗ c`-module seen as a `(b, c)`-bimodule.
pub fn split_coproduct_module<F: Field>(
    x: &RightModule<F>,
    b: &CommMonoid<F>,
    c: &CommMonoid<F>,
) -> Result<Bimodule<F>> {
    let cop = b.coproduct(c);
    let left = x.restrict(&cop.left)?;
    let right = x.restrict(&cop.right)?;
    Bimodule::new(
        b.clone(),
        c.clone(),
        x.carrier,
        left.opposite_action(),
        right.action,
    )
}

/// A random module map `x -> y`, a random combination of a basis of `M_b(x, y)`.
pub fn module_map<F: Field>(rng: &mut Rng64, x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
    let hom = internal_hom(x, y)?;
    let mut map = Mor::zero(x.carrier, y.carrier);
    for basis in hom.basis_maps() {
        let c: F = scalar(rng);
        map = map.add(&basis.scale(&c))?;
    }
    ModuleMor::new(x.clone(), y.clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};
    use crate::monoids::{builtin, BUILTIN_ALGEBRAS};

    #[test]
    fn random_modules_satisfy_laws() {
        let mut r = rng(7);
        for name in BUILTIN_ALGEBRAS {
            let b = builtin::<Q>(name).unwrap();
            for _ in 0..5 {
                let x = module(&mut r, &b, 3).unwrap();
                assert!((1..=3).contains(&x.dim()));
                assert!(x.check_laws().all_passed());
            }
        }
    }

    #[test]
    fn random_modules_over_prime_field() {
        let mut r = rng(3);
        let b = builtin::<Fp<5>>("t_cubed").unwrap();
        for _ in 0..5 {
            assert!(module(&mut r, &b, 3).unwrap().check_laws().all_passed());
        }
    }

    #[test]
    fn random_bimodules_and_maps() {
        let mut r = rng(11);
        let d = builtin::<Q>("dual_numbers").unwrap();
        let z = builtin::<Q>("z2_group_algebra").unwrap();
        for _ in 0..4 {
            let x = bimodule(&mut r, &d, &z, 3).unwrap();
            assert!(x.check_laws().all_passed());
        }
        let x = module(&mut r, &d, 3).unwrap();
        let y = module(&mut r, &d, 3).unwrap();
        assert!(module_map(&mut r, &x, &y).unwrap().check_equivariance().all_passed());
    }

    #[test]
    fn same_seed_same_module() {
        let b = builtin::<Q>("t_cubed").unwrap();
        let a = module(&mut rng(5), &b, 3).unwrap();
        let c = module(&mut rng(5), &b, 3).unwrap();
        assert_eq!(a, c);
    }
}
