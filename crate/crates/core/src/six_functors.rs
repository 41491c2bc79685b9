//! The functors `f*`, `f_*`, `f_!`, `f^!` attached to a monoid map `f: b -> b'`,
//! their adjunctions, the isomorphism `f_! ≅ f_*`, the tensor structures and
//! the projection formula.

use crate::cosmos::{braiding, Mor, SplitEpi};
use crate::error::{KernelError, Result};
use crate::field::Field;
use crate::functors::FunctorExpr;
use crate::laws::LawReport;
use crate::module_tensor::{
    check_adjunction_triangles, mtensor, mtensor_maps, right_unitor, strength, tensor_maps, tensor_over,
    unit_iso,
};
use crate::modules::{Bimodule, BimoduleMor, ModuleMor, RightModule};
use crate::monoids::MonoidMor;

#[derive(Debug, Clone)]
pub struct SixFunctorPack<F: Field> {
    pub map: MonoidMor<F>,
    /// `f* = - ⊛_b (_b b'_{b'})`, from `M_b` to `M_{b'}`.
    pub pullback: FunctorExpr<F>,
    /// `f_*`, restriction of scalars from `M_{b'}` to `M_b`.
    pub pushforward: FunctorExpr<F>,
    /// `f_! = - ⊛_{b'} (_{b'} b'_b)`, from `M_{b'}` to `M_b`.
    pub shriek: FunctorExpr<F>,
    /// `f^! = Hom_b(_{b'} b'_b, -)`, from `M_b` to `M_{b'}`.
    pub upper_shriek: FunctorExpr<F>,
    pub pulled: Bimodule<F>,
    pub pushed: Bimodule<F>,
}

pub fn build_pack<F: Field>(f: &MonoidMor<F>) -> Result<SixFunctorPack<F>> {
    f.check_laws().into_result("monoid map")?;
    let pulled = Bimodule::pulled_regular(f);
    let pushed = Bimodule::pushed_regular(f);
    Ok(SixFunctorPack {
        map: f.clone(),
        pullback: FunctorExpr::TensorBimodule(pulled.clone()),
        pushforward: FunctorExpr::Restrict(f.clone()),
        shriek: FunctorExpr::TensorBimodule(pushed.clone()),
        upper_shriek: FunctorExpr::HomModule(pushed.clone()),
        pulled,
        pushed,
    })
}

impl<F: Field> SixFunctorPack<F> {
    fn over_source(&self, x: &RightModule<F>) -> Result<()> {
        if x.over != self.map.src {
            return Err(KernelError::BaseMismatch("module over the source of f".into()));
        }
        Ok(())
    }

    fn over_target(&self, y: &RightModule<F>) -> Result<()> {
        if y.over != self.map.dst {
            return Err(KernelError::BaseMismatch("module over the target of f".into()));
        }
        Ok(())
    }

    pub fn pull(&self, x: &RightModule<F>) -> Result<RightModule<F>> {
        self.pullback.apply_obj(x)
    }

    pub fn push(&self, y: &RightModule<F>) -> Result<RightModule<F>> {
        y.restrict(&self.map)
    }

    /// `η*_x = (id ⊛ f) ∘ (ȷ^b_x)^{-1}: x -> f_* f* x`.
    pub fn pullback_unit(&self, x: &RightModule<F>) -> Result<ModuleMor<F>> {
        self.over_source(x)?;
        let j_inv = right_unitor(x)?.inverse("right unitor")?;
        let src = mtensor(x, &RightModule::regular(&self.map.src))?;
        let dst = tensor_over(x, &self.pulled)?;
        let h = dst.pres.proj.compose(&Mor::identity(x.carrier).tensor(&self.map.map))?;
        let id_f = src.epi().factor(&h, "id ⊛ f")?;
        let map = id_f.compose(&j_inv.map)?;
        ModuleMor::new_unchecked(x.clone(), dst.module.restrict(&self.map)?, map)
    }

    /// `ε*_y: f* f_* y -> y` with `ε* ∘ cq = γ'_y`.
    pub fn pullback_counit(&self, y: &RightModule<F>) -> Result<ModuleMor<F>> {
        self.over_target(y)?;
        let t = tensor_over(&self.push(y)?, &self.pulled)?;
        let map = t.epi().factor(&y.action, "pullback counit")?;
        ModuleMor::new_unchecked(t.module, y.clone(), map)
    }

    /// Triangle identities of `f* ⊣ f_*` at `x` over `b` and `y` over `b'`.
    pub fn check_pullback_adjunction(&self, x: &RightModule<F>, y: &RightModule<F>) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let eta = self.pullback_unit(x)?;
            let fx = self.pull(x)?;
            let lhs = self.pullback_counit(&fx)?.compose(&self.pullback.apply_mor(&eta)?)?;
            rep.truth("pullback left triangle", lhs.map.is_identity(), "ε* f* ∘ f* η* ≠ id");
            let fy = self.push(y)?;
            let eps = self.pullback_counit(y)?;
            let pushed_eps = self.pushforward.apply_mor(&eps)?;
            let lhs = pushed_eps.compose(&self.pullback_unit(&fy)?)?;
            rep.truth("pullback right triangle", lhs.map.is_identity(), "f_* ε* ∘ η* f_* ≠ id");
            Ok(())
        })();
        rep.result("pullback adjunction maps defined", r);
        rep
    }

    /// Triangle identities of `f_! ⊣ f^!` at `z` over `b'` and `y` over `b`.
    pub fn check_shriek_adjunction(&self, z: &RightModule<F>, y: &RightModule<F>) -> LawReport {
        check_adjunction_triangles(z, &self.pushed, y)
    }

    /// `f_*(ȷ^{b'}_y): f_! y -> f_* y`.
    pub fn shriek_star_iso(&self, y: &RightModule<F>) -> Result<ModuleMor<F>> {
        self.over_target(y)?;
        let t = tensor_over(y, &self.pushed)?;
        let map = t.epi().factor(&y.action, "shriek to star")?;
        ModuleMor::new(t.module, self.push(y)?, map)
    }

    /// Invertibility of `f_! ≅ f_*` at `y` and naturality along `h: y -> y'`.
    pub fn check_shriek_star(&self, h: &ModuleMor<F>) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let iso = self.shriek_star_iso(&h.src)?;
            rep.truth("shriek iso invertible", iso.is_iso(), "singular");
            let iso2 = self.shriek_star_iso(&h.dst)?;
            let lhs = iso2.compose(&self.shriek.apply_mor(h)?)?;
            let rhs = self.pushforward.apply_mor(h)?.compose(&iso)?;
            rep.equal("shriek iso natural", &lhs.map, &rhs.map);
            Ok(())
        })();
        rep.result("shriek iso defined", r);
        rep
    }

    /// `(f_*)_{x,y}: f_* x ⊛_b f_* y -> f_*(x ⊛_{b'} y)` with `(f_*) ∘ cq_b = cq_{b'}`.
    pub fn lax_pushforward(&self, x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
        pushforward_coherence(&self.map, x, y)
    }

    /// `(f_*)_1 = f: b_b -> f_*(b'_{b'})`.
    pub fn lax_pushforward_unit(&self) -> ModuleMor<F> {
        ModuleMor {
            src: RightModule::regular(&self.map.src),
            dst: RightModule::regular(&self.map.dst).restrict(&self.map).expect("bases match"),
            map: self.map.map.clone(),
        }
    }

    /// `(f*)_{x,y}: f* x ⊛_{b'} f* y -> f*(x ⊛_b y)`.
    pub fn tensor_pullback(&self, x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
        pull_push_coherence(&self.map, &MonoidMor::identity(&self.map.dst), x, y)
    }

    /// `(f*)_1 = (ι^b)^{-1}: b'_{b'} -> f*(b_b)`.
    pub fn tensor_pullback_unit(&self) -> Result<ModuleMor<F>> {
        pull_push_unit(&self.map, &MonoidMor::identity(&self.map.dst))
    }

    /// The colax structure on `f*` obtained as the mate of the lax structure of `f_*`:
    /// `ε* ∘ f*((f_*)_{f*x, f*y}) ∘ f*(η*_x ⊛ η*_y)`.
    pub fn colax_pullback(&self, x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
        let eta = mtensor_maps(&self.pullback_unit(x)?, &self.pullback_unit(y)?)?;
        let fx = self.pull(x)?;
        let fy = self.pull(y)?;
        let lax = self.lax_pushforward(&fx, &fy)?;
        let inner = lax.compose(&eta)?;
        let fxy = mtensor(&fx, &fy)?.module;
        self.pullback_counit(&fxy)?.compose(&self.pullback.apply_mor(&inner)?)
    }

    /// `ε*_{b'} ∘ f*((f_*)_1)`.
    pub fn colax_pullback_unit(&self) -> Result<ModuleMor<F>> {
        let unit = self.lax_pushforward_unit();
        let reg = RightModule::regular(&self.map.dst);
        self.pullback_counit(&reg)?.compose(&self.pullback.apply_mor(&unit)?)
    }

    /// The mate of the lax structure of `f_*` is inverse to the tensor structure of `f*`.
    pub fn check_mate(&self, x: &RightModule<F>, y: &RightModule<F>) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let strong = self.tensor_pullback(x, y)?;
            rep.truth("pullback coherence invertible", strong.is_iso(), "singular");
            let colax = self.colax_pullback(x, y)?;
            rep.truth(
                "mate is left inverse",
                colax.compose(&strong)?.map.is_identity(),
                "colax ∘ strong ≠ id",
            );
            rep.truth(
                "mate is right inverse",
                strong.compose(&colax)?.map.is_identity(),
                "strong ∘ colax ≠ id",
            );
            let u = self.tensor_pullback_unit()?;
            let cu = self.colax_pullback_unit()?;
            rep.truth("unit mate inverse", cu.compose(&u)?.map.is_identity(), "unit mate mismatch");
            Ok(())
        })();
        rep.result("mate maps defined", r);
        rep
    }

    /// `(f_*)_{f*x, y} ∘ (η*_x ⊛ id)` against `a_{x, b', y} ∘ (id ⊛ (ι^{b'}_y)^{-1})`,
    /// both maps `x ⊛_b f_* y -> f_*(f* x ⊛_{b'} y)`.
    pub fn projection_formula(&self, x: &RightModule<F>, y: &RightModule<F>) -> Result<(ModuleMor<F>, ModuleMor<F>)> {
        self.over_source(x)?;
        self.over_target(y)?;
        let fy = self.push(y)?;
        let fx = self.pull(x)?;
        let canonical = self
            .lax_pushforward(&fx, y)?
            .compose(&mtensor_maps(&self.pullback_unit(x)?, &fy.id())?)?;

        // b' ⊛_{b'} y as a (b, b')-bimodule
        let yb = y.as_bimodule();
        let inner = crate::module_tensor::tensor_bimodules(&self.pulled, &yb)?;
        let iota = unit_iso(&yb)?;
        // ι^{b'}_y as a map of (b, b)-bimodules from b' ⊛ y to f_* y
        let iota_b = BimoduleMor {
            src: restrict_bimodule_right(&inner.bimodule, &self.map)?,
            dst: fy.as_bimodule(),
            map: iota.map.clone(),
        };
        let iota_inv = BimoduleMor {
            src: iota_b.dst.clone(),
            dst: iota_b.src.clone(),
            map: iota.map.try_inverse("unit iso")?,
        };
        let id_iota_inv = tensor_maps(&x.id(), &iota_inv)?;
        // a_{x, b', y}: x ⊛_b (b' ⊛_{b'} y) -> (x ⊛_b b') ⊛_{b'} y
        let x_inner = tensor_over(x, &inner.bimodule)?;
        let a = strength(x.carrier, &RightModule::regular(&self.map.dst), &yb)?;
        let fx_t = tensor_over(x, &self.pulled)?;
        let cq_x = ModuleMor {
            src: RightModule::regular(&self.map.dst).tensored(x.carrier),
            dst: fx_t.module.clone(),
            map: fx_t.pres.proj.clone(),
        };
        let cq_y = tensor_maps(&cq_x, &yb.id())?;
        let h = cq_y.map.compose(&a.map)?;
        let assoc = x_inner.epi().factor(&h, "mixed associator")?;
        let closed_map = assoc.compose(&id_iota_inv.map)?;
        let target = mtensor(&fx, y)?.module.restrict(&self.map)?;
        let closed = ModuleMor::new_unchecked(canonical.src.clone(), target, closed_map)?;
        Ok((canonical, closed))
    }

    pub fn check_projection_formula(&self, x: &RightModule<F>, y: &RightModule<F>) -> LawReport {
        let mut rep = LawReport::new();
        if let Some((canonical, closed)) = rep.result("projection maps defined", self.projection_formula(x, y)) {
            rep.truth("projection map invertible", canonical.is_iso(), "singular");
            rep.equal("projection map matches closed form", &canonical.map, &closed.map);
            rep.truth(
                "projection map equivariant",
                canonical.check_equivariance().all_passed(),
                "not a module map",
            );
        }
        rep
    }

    /// Lax tensor axioms for `(f_*, (f_*)_{x,y}, f)` at modules over `b'`.
    pub fn check_lax_pushforward(&self, x: &RightModule<F>, y: &RightModule<F>, z: &RightModule<F>, h: &ModuleMor<F>) -> LawReport {
        crate::main_equivalence::LaxFunctor::pushforward(&self.map).check_axioms(x, y, z, h)
    }
}

/// The lax structure of restriction along `f: b -> b'` at modules `x`, `y` over `b'`.
pub fn pushforward_coherence<F: Field>(f: &MonoidMor<F>, x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
    if x.over != f.dst || y.over != f.dst {
        return Err(KernelError::BaseMismatch("module over the target of f".into()));
    }
    let over_b = mtensor(&x.restrict(f)?, &y.restrict(f)?)?;
    let over_c = mtensor(x, y)?;
    let map = over_b.epi().factor(&over_c.pres.proj, "lax pushforward")?;
    ModuleMor::new_unchecked(over_b.module, over_c.module.restrict(f)?, map)
}

/// A `(b, c)`-bimodule with its right action restricted along `f: b -> c`.
fn restrict_bimodule_right<F: Field>(x: &Bimodule<F>, f: &MonoidMor<F>) -> Result<Bimodule<F>> {
    if x.right != f.dst {
        return Err(KernelError::BaseMismatch("restricting a bimodule".into()));
    }
    Ok(Bimodule {
        left: x.left.clone(),
        right: f.src.clone(),
        carrier: x.carrier,
        left_action: x.left_action.clone(),
        right_action: x.right_action.compose(&Mor::identity(x.carrier).tensor(&f.map))?,
    })
}

/// The binary coherence of `g_* f*` for `f: b -> c <- b': g`:
/// `g_* f* x ⊛_{b'} g_* f* y -> g_* f*(x ⊛_b y)`, induced on `x ⊗ c ⊗ y ⊗ c` by
/// `(x ⊗ β₁) ⊗ (y ⊗ β₂) ↦ (x ⊗ y) ⊗ β₁β₂`.
pub fn pull_push_coherence<F: Field>(
    f: &MonoidMor<F>,
    g: &MonoidMor<F>,
    x: &RightModule<F>,
    y: &RightModule<F>,
) -> Result<ModuleMor<F>> {
    if f.dst != g.dst || x.over != f.src || y.over != f.src {
        return Err(KernelError::BaseMismatch("pull-push coherence".into()));
    }
    let c = &f.dst;
    let pulled = Bimodule::pulled_regular(f);
    let fx = tensor_over(x, &pulled)?;
    let fy = tensor_over(y, &pulled)?;
    let gx = fx.module.restrict(g)?;
    let gy = fy.module.restrict(g)?;
    let s = mtensor(&gx, &gy)?;
    let xy = mtensor(x, y)?;
    let t = tensor_over(&xy.module, &pulled)?;
    let epi: SplitEpi<F> = fx.epi().tensor(&fy.epi()).then(&s.epi())?;
    let shuffle = Mor::identity(x.carrier)
        .tensor(&braiding(c.carrier, y.carrier))
        .tensor(&c.id());
    let h = t
        .pres
        .proj
        .compose(&xy.pres.proj.tensor(&c.product))?
        .compose(&shuffle)?;
    let map = epi.factor(&h, "pull-push coherence")?;
    ModuleMor::new_unchecked(s.module, t.module.restrict(g)?, map)
}

/// The unit coherence of `g_* f*`: `(ι^b_c)^{-1} ∘ g: b'_{b'} -> g_* f*(b_b)`.
pub fn pull_push_unit<F: Field>(f: &MonoidMor<F>, g: &MonoidMor<F>) -> Result<ModuleMor<F>> {
    if f.dst != g.dst {
        return Err(KernelError::BaseMismatch("pull-push unit".into()));
    }
    let pulled = Bimodule::pulled_regular(f);
    let iota = unit_iso(&pulled)?;
    let inv = iota.map.try_inverse("unit iso")?;
    let map = inv.compose(&g.map)?;
    ModuleMor::new_unchecked(
        RightModule::regular(&g.src),
        iota.src.restrict(g)?,
        map,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::monoids::{builtin_morphism, dual_numbers};
    use crate::random;

    fn residue() -> RightModule<Q> {
        let d = dual_numbers::<Q>();
        RightModule::new(
            d,
            crate::cosmos::Obj::new(1),
            Mor::from_i64(crate::cosmos::Obj::new(2), crate::cosmos::Obj::new(1), &[&[1, 0]]).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn unit_map_doubles_dimension() {
        let f = builtin_morphism::<Q>("unit_dual_numbers").unwrap();
        let pack = build_pack(&f).unwrap();
        let x = RightModule::regular(&f.src).tensored(crate::cosmos::Obj::new(3));
        assert_eq!(pack.pull(&x).unwrap().dim(), 6);
    }

    #[test]
    fn augmentation_pulls_regular_to_residue() {
        let f = builtin_morphism::<Q>("augmentation_dual_numbers").unwrap();
        let pack = build_pack(&f).unwrap();
        let d = RightModule::regular(&f.src);
        assert_eq!(pack.pull(&d).unwrap().dim(), 1);
        assert_eq!(pack.pull(&residue()).unwrap().dim(), 1);
    }

    #[test]
    fn lax_pushforward_of_unit_map_on_regular() {
        let f = builtin_morphism::<Q>("unit_dual_numbers").unwrap();
        let pack = build_pack(&f).unwrap();
        let d = RightModule::regular(&f.dst);
        let lax = pack.lax_pushforward(&d, &d).unwrap();
        assert_eq!((lax.src.dim(), lax.dst.dim()), (4, 2));
        assert_eq!(lax.map.rank(), 2);
        assert_eq!(pack.lax_pushforward_unit().map, f.map);
    }

    #[test]
    fn pack_invariants_for_each_kind_of_map() {
        let mut r = random::rng(9);
        for name in ["unit_dual_numbers", "augmentation_dual_numbers", "id_dual_numbers", "t_cubed_to_dual"] {
            let f = builtin_morphism::<Q>(name).unwrap();
            let pack = build_pack(&f).unwrap();
            let x = random::module(&mut r, &f.src, 3).unwrap();
            let x2 = random::module(&mut r, &f.src, 3).unwrap();
            let y = random::module(&mut r, &f.dst, 3).unwrap();
            let y2 = random::module(&mut r, &f.dst, 3).unwrap();
            let h = random::module_map(&mut r, &y, &y2).unwrap();
            for rep in [
                pack.check_pullback_adjunction(&x, &y),
                pack.check_shriek_adjunction(&y, &x),
                pack.check_shriek_star(&h),
                pack.check_mate(&x, &x2),
                pack.check_projection_formula(&x, &y),
            ] {
                assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
            }
            assert_eq!(pack.tensor_pullback_unit().unwrap().dst, pack.pull(&RightModule::regular(&f.src)).unwrap());
        }
    }
}
