//! Commutative monoids under a pair `b -> b~ <- b'` against lax tensor functors
//! `M_b -> M_{b'}`: both directions, the unit and counit round trips, and the
//! strong case where the functor comes from a single map `b -> b'`.

use crate::error::{KernelError, Result};
use crate::field::Field;
use crate::functors::{canonical_left_module, lambda_with, FunctorExpr};
use crate::laws::LawReport;
use crate::module_tensor::{
    associator, left_unitor, mtensor, mtensor_maps, right_unitor, strength, symmetry, tensor_over, unit_iso,
};
use crate::modules::{Bimodule, ModuleMor, RightModule};
use crate::cosmos::{Mor, Obj};
use crate::monoids::{builtin, builtin_morphisms, CommMonoid, MonoidMor};
use crate::six_functors::{pull_push_coherence, pull_push_unit, pushforward_coherence};

/// A commutative monoid `b~` with legs `f: b -> b~ <- b': f'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommOverPair<F: Field> {
    pub b: CommMonoid<F>,
    pub b_prime: CommMonoid<F>,
    pub total: CommMonoid<F>,
    pub f: MonoidMor<F>,
    pub f_prime: MonoidMor<F>,
}

impl<F: Field> CommOverPair<F> {
    pub fn new(f: MonoidMor<F>, f_prime: MonoidMor<F>) -> Result<Self> {
        if f.dst != f_prime.dst {
            return Err(KernelError::BaseMismatch("legs of a pair".into()));
        }
        f.check_laws().into_result("left leg")?;
        f_prime.check_laws().into_result("right leg")?;
        Ok(CommOverPair {
            b: f.src.clone(),
            b_prime: f_prime.src.clone(),
            total: f.dst.clone(),
            f,
            f_prime,
        })
    }

    /// The legs as one map `b ⊗ b' -> b~`, `m ∘ (f ⊗ f')`.
    pub fn coproduct_map(&self) -> Result<MonoidMor<F>> {
        let cop = self.b.coproduct(&self.b_prime);
        let map = self.total.product.compose(&self.f.map.tensor(&self.f_prime.map))?;
        MonoidMor::new(cop.monoid, self.total.clone(), map)
    }

    /// The pair given by a map out of the coproduct.
    pub fn from_coproduct_map(b: &CommMonoid<F>, b_prime: &CommMonoid<F>, phi: &MonoidMor<F>) -> Result<Self> {
        let cop = b.coproduct(b_prime);
        if phi.src != cop.monoid {
            return Err(KernelError::BaseMismatch("map out of the coproduct".into()));
        }
        CommOverPair::new(phi.compose(&cop.left)?, phi.compose(&cop.right)?)
    }
}

/// Named pairs over builtin algebras used by tests and suites.
pub fn builtin_pairs<F: Field>() -> Vec<(String, CommOverPair<F>)> {
    let get = |n: &str| {
        builtin_morphisms::<F>()
            .into_iter()
            .find(|(m, _)| m == n)
            .map(|(_, f)| f)
            .expect("builtin morphism")
    };
    let k = builtin::<F>("ground").expect("builtin");
    let d = builtin::<F>("dual_numbers").expect("builtin");
    let z = builtin::<F>("z2_group_algebra").expect("builtin");
    let free = d.coproduct(&z);
    let mut out = vec![
        ("ground".to_string(), (MonoidMor::identity(&k), MonoidMor::identity(&k))),
        ("unit_then_dual".to_string(), (get("unit_dual_numbers"), get("id_dual_numbers"))),
        ("dual_dual".to_string(), (get("id_dual_numbers"), get("id_dual_numbers"))),
        ("augmentation".to_string(), (get("augmentation_dual_numbers"), MonoidMor::identity(&k))),
        ("free_dual_z2".to_string(), (free.left, free.right)),
        ("t_cubed_to_dual".to_string(), (get("t_cubed_to_dual"), get("dual_scale2"))),
        ("split_pair_sign".to_string(), (get("first_projection"), get("z2_sign"))),
    ];
    out.drain(..)
        .map(|(n, (f, g))| (n, CommOverPair::new(f, g).expect("builtin pair")))
        .collect()
}

/// How the coherence maps of a [`LaxFunctor`] are computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LaxStructure<F: Field> {
    Identity,
    /// `g_* f*` for `f: b -> c <- b': g`.
    PullPush { f: MonoidMor<F>, g: MonoidMor<F> },
    /// `f_*` for `f: b -> b'`, from `M_{b'}` to `M_b`.
    Pushforward(MonoidMor<F>),
    /// `outer ∘ inner`.
    Compose(Box<LaxFunctor<F>>, Box<LaxFunctor<F>>),
}

/// A functor with its coherences `F_{x,y}: F x ⊛ F y -> F(x ⊛ y)` and `F_1: b' -> F(b)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxFunctor<F: Field> {
    pub expr: FunctorExpr<F>,
    pub lax: LaxStructure<F>,
}

impl<F: Field> LaxFunctor<F> {
    pub fn identity(b: &CommMonoid<F>) -> Self {
        LaxFunctor {
            expr: FunctorExpr::Identity(b.clone()),
            lax: LaxStructure::Identity,
        }
    }

    pub fn pull_push(f: &MonoidMor<F>, g: &MonoidMor<F>) -> Result<Self> {
        if f.dst != g.dst {
            return Err(KernelError::BaseMismatch("pull-push functor".into()));
        }
        let expr = FunctorExpr::compose(
            FunctorExpr::Restrict(g.clone()),
            FunctorExpr::TensorBimodule(Bimodule::pulled_regular(f)),
        )?;
        Ok(LaxFunctor {
            expr,
            lax: LaxStructure::PullPush { f: f.clone(), g: g.clone() },
        })
    }

    pub fn pushforward(f: &MonoidMor<F>) -> Self {
        LaxFunctor {
            expr: FunctorExpr::Restrict(f.clone()),
            lax: LaxStructure::Pushforward(f.clone()),
        }
    }

    pub fn compose(outer: LaxFunctor<F>, inner: LaxFunctor<F>) -> Result<Self> {
        let expr = FunctorExpr::compose(outer.expr.clone(), inner.expr.clone())?;
        Ok(LaxFunctor {
            expr,
            lax: LaxStructure::Compose(Box::new(outer), Box::new(inner)),
        })
    }

    pub fn source(&self) -> &CommMonoid<F> {
        self.expr.source()
    }

    pub fn target(&self) -> &CommMonoid<F> {
        self.expr.target()
    }

    pub fn apply_obj(&self, x: &RightModule<F>) -> Result<RightModule<F>> {
        self.expr.apply_obj(x)
    }

    pub fn apply_mor(&self, h: &ModuleMor<F>) -> Result<ModuleMor<F>> {
        self.expr.apply_mor(h)
    }

    /// `F_{x,y}: F x ⊛ F y -> F(x ⊛ y)`.
    pub fn coherence(&self, x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
        match &self.lax {
            LaxStructure::Identity => Ok(mtensor(x, y)?.module.id()),
            LaxStructure::PullPush { f, g } => pull_push_coherence(f, g, x, y),
            LaxStructure::Pushforward(f) => pushforward_coherence(f, x, y),
            LaxStructure::Compose(outer, inner) => {
                let h = inner.coherence(x, y)?;
                let gh = outer.coherence(&inner.apply_obj(x)?, &inner.apply_obj(y)?)?;
                outer.apply_mor(&h)?.compose(&gh)
            }
        }
    }

    /// `F_1: b'_{b'} -> F(b_b)`.
    pub fn unit(&self) -> Result<ModuleMor<F>> {
        match &self.lax {
            LaxStructure::Identity => Ok(RightModule::regular(self.source()).id()),
            LaxStructure::PullPush { f, g } => pull_push_unit(f, g),
            LaxStructure::Pushforward(f) => ModuleMor::new_unchecked(
                RightModule::regular(&f.src),
                RightModule::regular(&f.dst).restrict(f)?,
                f.map.clone(),
            ),
            LaxStructure::Compose(outer, inner) => {
                let u = outer.apply_mor(&inner.unit()?)?;
                u.compose(&outer.unit()?)
            }
        }
    }

    /// Lax tensor axioms on modules `x, y, z` over the source, with `h` a map in the
    /// source category and `w` the object used for the enrichment square.
    pub fn check_axioms(&self, x: &RightModule<F>, y: &RightModule<F>, z: &RightModule<F>, h: &ModuleMor<F>) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let fx = self.apply_obj(x)?;
            let fy = self.apply_obj(y)?;
            let fz = self.apply_obj(z)?;
            let c_xy = self.coherence(x, y)?;

            // naturality in each variable
            let fh = self.apply_mor(h)?;
            let lhs = self
                .coherence(&h.dst, y)?
                .compose(&mtensor_maps(&fh, &fy.id())?)?;
            let rhs = self
                .apply_mor(&mtensor_maps(h, &y.id())?)?
                .compose(&self.coherence(&h.src, y)?)?;
            rep.equal("coherence natural in first variable", &lhs.map, &rhs.map);
            let lhs = self
                .coherence(y, &h.dst)?
                .compose(&mtensor_maps(&fy.id(), &fh)?)?;
            let rhs = self
                .apply_mor(&mtensor_maps(&y.id(), h)?)?
                .compose(&self.coherence(y, &h.src)?)?;
            rep.equal("coherence natural in second variable", &lhs.map, &rhs.map);

            // associativity
            let yz = mtensor(y, z)?.module;
            let xy = mtensor(x, y)?.module;
            let lhs = self
                .apply_mor(&associator(x, y, z)?)?
                .compose(&self.coherence(x, &yz)?)?
                .compose(&mtensor_maps(&fx.id(), &self.coherence(y, z)?)?)?;
            let rhs = self
                .coherence(&xy, z)?
                .compose(&mtensor_maps(&c_xy, &fz.id())?)?
                .compose(&associator(&fx, &fy, &fz)?)?;
            rep.equal("coherence associative", &lhs.map, &rhs.map);

            // unit
            let b = RightModule::regular(self.source());
            let lhs = self
                .apply_mor(&left_unitor(x)?)?
                .compose(&self.coherence(&b, x)?)?
                .compose(&mtensor_maps(&self.unit()?, &fx.id())?)?;
            rep.equal("coherence left unital", &lhs.map, &left_unitor(&fx)?.map);
            let lhs = self
                .apply_mor(&right_unitor(x)?)?
                .compose(&self.coherence(x, &b)?)?
                .compose(&mtensor_maps(&fx.id(), &self.unit()?)?)?;
            rep.equal("coherence right unital", &lhs.map, &right_unitor(&fx)?.map);

            // symmetry
            let lhs = self.apply_mor(&symmetry(x, y)?)?.compose(&c_xy)?;
            let rhs = self.coherence(y, x)?.compose(&symmetry(&fx, &fy)?)?;
            rep.equal("coherence symmetric", &lhs.map, &rhs.map);

            // compatibility with the enrichment: tensoring the first variable by w
            let w = Obj::new(2);
            let xw = x.tensored(w);
            let lhs = self
                .coherence(&xw, y)?
                .compose(&mtensor_maps(&self.expr.strength(w, x)?, &fy.id())?)?
                .compose(&strength(w, &fx, &fy.as_bimodule())?)?;
            let rhs = self
                .apply_mor(&strength(w, x, &y.as_bimodule())?)?
                .compose(&self.expr.strength(w, &xy)?)?
                .compose(&c_xy.tensored(w))?;
            rep.equal("coherence compatible with strength", &lhs.map, &rhs.map);
            Ok(())
        })();
        rep.result("coherence maps defined", r);
        rep
    }

    /// Whether every sampled binary coherence and the unit coherence are invertible.
    pub fn check_strong(&self, samples: &[RightModule<F>]) -> LawReport {
        let mut rep = LawReport::new();
        if let Some(u) = rep.result("unit coherence defined", self.unit()) {
            rep.truth("unit coherence invertible", u.is_iso(), "singular");
        }
        for (i, x) in samples.iter().enumerate() {
            for y in &samples[i..] {
                if let Some(c) = rep.result("coherence defined", self.coherence(x, y)) {
                    rep.truth("coherence invertible", c.is_iso(), format!("dims {} {}", x.dim(), y.dim()));
                }
            }
        }
        rep
    }
}

/// `F ↦ (F(b), f(F), f'(F))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extracted<F: Field> {
    pub monoid: CommMonoid<F>,
    pub f: MonoidMor<F>,
    pub f_prime: MonoidMor<F>,
    /// `F(b)` as a `(b, b')`-bimodule.
    pub bimodule: Bimodule<F>,
}

impl<F: Field> Extracted<F> {
    pub fn pair(&self) -> Result<CommOverPair<F>> {
        CommOverPair::new(self.f.clone(), self.f_prime.clone())
    }
}

/// `u_{F(b)} = F_1 ∘ u_{b'}`, `m_{F(b)} = F(ȷ_b) ∘ F_{b,b} ∘ cq`,
/// `f'(F) = F_1`, `f(F) = ρ ∘ (id ⊗ u_{F(b)})`.
pub fn functor_to_comm<F: Field>(fun: &LaxFunctor<F>) -> Result<Extracted<F>> {
    let b = fun.source().clone();
    let b_prime = fun.target().clone();
    let reg = RightModule::regular(&b);
    let fb = fun.apply_obj(&reg)?;
    let unit_rel = fun.unit()?;
    let mult_rel = fun.apply_mor(&right_unitor(&reg)?)?.compose(&fun.coherence(&reg, &reg)?)?;
    let cq = mtensor(&fb, &fb)?.pres.proj;
    let monoid = CommMonoid::new(
        fb.carrier,
        unit_rel.map.compose(&b_prime.unit)?,
        mult_rel.map.compose(&cq)?,
    )?;
    let f_prime = MonoidMor::new(b_prime, monoid.clone(), unit_rel.map.clone())?;
    let can = canonical_left_module(&fun.expr)?;
    let f_map = can.left_action.compose(&Mor::identity(b.carrier).tensor(&monoid.unit))?;
    let f = MonoidMor::new(b, monoid.clone(), f_map)?;
    Ok(Extracted {
        monoid,
        f,
        f_prime,
        bimodule: can,
    })
}

pub fn comm_to_functor<F: Field>(p: &CommOverPair<F>) -> Result<LaxFunctor<F>> {
    LaxFunctor::pull_push(&p.f, &p.f_prime)
}

/// `f ∘ u_b = u_{F(b)}`, `m_{F(b)} ∘ (f ⊗ id) = ρ_{F(b)}`, and the right `b'`-action
/// of `F(b)` is multiplication through `f'`.
pub fn check_extraction<F: Field>(e: &Extracted<F>) -> LawReport {
    let mut rep = LawReport::new();
    rep.extend(e.monoid.check_laws());
    rep.extend(e.f.check_laws());
    rep.extend(e.f_prime.check_laws());
    if let Ok(lhs) = e.f.map.compose(&e.f.src.unit) {
        rep.equal("left leg preserves unit", &lhs, &e.monoid.unit);
    }
    if let Ok(lhs) = e.monoid.product.compose(&e.f.map.tensor(&e.monoid.id())) {
        rep.equal("left action is multiplication", &lhs, &e.bimodule.left_action);
    }
    if let Ok(lhs) = e.monoid.product.compose(&e.monoid.id().tensor(&e.f_prime.map)) {
        rep.equal("right action is multiplication", &lhs, &e.bimodule.right_action);
    }
    rep
}

/// The comparison `λ_x: x ⊛_b F(b) -> F(x)` with source written as `G(x)` for
/// `G = comm_to_functor(functor_to_comm(F))`.
fn lambda_from<F: Field>(fun: &LaxFunctor<F>, g: &LaxFunctor<F>, can: &Bimodule<F>, x: &RightModule<F>) -> Result<ModuleMor<F>> {
    let l = lambda_with(&fun.expr, can, x)?;
    ModuleMor::new_unchecked(g.apply_obj(x)?, l.dst, l.map)
}

/// `λ_b ∘ G_1 = F_1` and `F_{x,y} ∘ (λ_x ⊛ λ_y) = λ_{x⊛y} ∘ G_{x,y}` on all pairs of samples.
pub fn lambda_tensor_check<F: Field>(fun: &LaxFunctor<F>, samples: &[RightModule<F>]) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let e = functor_to_comm(fun)?;
        rep.extend(check_extraction(&e));
        let g = comm_to_functor(&e.pair()?)?;
        let reg = RightModule::regular(fun.source());
        let lam_b = lambda_from(fun, &g, &e.bimodule, &reg)?;
        let lhs = lam_b.compose(&g.unit()?)?;
        rep.equal("comparison respects units", &lhs.map, &fun.unit()?.map);
        for (i, x) in samples.iter().enumerate() {
            for y in &samples[i..] {
                let gx = g.apply_obj(x)?;
                let lx = lambda_from(fun, &g, &e.bimodule, x)?;
                rep.truth(
                    "comparison source matches",
                    gx == tensor_over(x, &e.bimodule)?.module,
                    "x ⊛ F(b) differs from the functor of the extracted pair",
                );
                let ly = lambda_from(fun, &g, &e.bimodule, y)?;
                let xy = mtensor(x, y)?.module;
                let lxy = lambda_from(fun, &g, &e.bimodule, &xy)?;
                let lhs = fun.coherence(x, y)?.compose(&mtensor_maps(&lx, &ly)?)?;
                let rhs = lxy.compose(&g.coherence(x, y)?)?;
                rep.equal("comparison respects tensor", &lhs.map, &rhs.map);
            }
        }
        Ok(())
    })();
    rep.result("comparison maps defined", r);
    rep
}

/// `(ι^b_{b~})^{-1}: b~ -> b ⊛_b b~` is an isomorphism of monoids under `b ⊗ b'`.
pub fn roundtrip_main<F: Field>(p: &CommOverPair<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let fun = comm_to_functor(p)?;
        let e = functor_to_comm(&fun)?;
        rep.extend(check_extraction(&e));
        let iota = unit_iso(&Bimodule::pulled_regular(&p.f))?;
        let inv = iota.map.try_inverse("unit iso")?;
        if let Some(m) = rep.result("unit is a monoid map", MonoidMor::new(p.total.clone(), e.monoid.clone(), inv.clone())) {
            rep.truth("unit is invertible", m.is_iso(), "singular");
        }
        rep.equal("unit respects left legs", &inv.compose(&p.f.map)?, &e.f.map);
        rep.equal("unit respects right legs", &inv.compose(&p.f_prime.map)?, &e.f_prime.map);
        Ok(())
    })();
    rep.result("round trip defined", r);
    rep
}

/// For a cocontinuous `F`, `λ` connects `comm_to_functor(functor_to_comm(F))` to `F`
/// by invertible maps that respect the tensor structure.
pub fn roundtrip_functor<F: Field>(fun: &LaxFunctor<F>, samples: &[RightModule<F>]) -> LawReport {
    let mut rep = lambda_tensor_check(fun, samples);
    let r = (|| -> Result<()> {
        let e = functor_to_comm(fun)?;
        for x in samples {
            let l = lambda_with(&fun.expr, &e.bimodule, x)?;
            rep.truth("comparison invertible", l.is_iso(), format!("dim {}", x.dim()));
        }
        Ok(())
    })();
    rep.result("comparison defined", r);
    rep
}

/// `f' (F)^{-1} ∘ f(F)` for the functor of the pair `(f~, id)`.
pub fn recover_map<F: Field>(f_tilde: &MonoidMor<F>) -> Result<Mor<F>> {
    let fun = comm_to_functor(&CommOverPair::new(f_tilde.clone(), MonoidMor::identity(&f_tilde.dst))?)?;
    let e = functor_to_comm(&fun)?;
    let inv = e.f_prime.map.try_inverse("extracted right leg")?;
    inv.compose(&e.f.map)
}

/// Extraction recovers `f~` exactly and the functor is strong on the samples.
pub fn corollary_strong<F: Field>(f_tilde: &MonoidMor<F>, samples: &[RightModule<F>]) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let fun = comm_to_functor(&CommOverPair::new(f_tilde.clone(), MonoidMor::identity(&f_tilde.dst))?)?;
        let e = functor_to_comm(&fun)?;
        rep.truth("extracted right leg invertible", e.f_prime.is_iso(), "singular");
        rep.equal("extraction recovers the map", &recover_map(f_tilde)?, &f_tilde.map);
        rep.extend(fun.check_strong(samples));
        Ok(())
    })();
    rep.result("extraction defined", r);
    rep
}

/// Distinct maps with the same ends give distinct extracted pairs.
pub fn check_distinguishable<F: Field>(maps: &[(String, MonoidMor<F>)]) -> LawReport {
    let mut rep = LawReport::new();
    for (i, (n1, f1)) in maps.iter().enumerate() {
        for (n2, f2) in &maps[i + 1..] {
            if f1.src != f2.src || f1.dst != f2.dst || f1.map == f2.map {
                continue;
            }
            let r = (|| -> Result<bool> {
                let e1 = functor_to_comm(&comm_to_functor(&CommOverPair::new(f1.clone(), MonoidMor::identity(&f1.dst))?)?)?;
                let e2 = functor_to_comm(&comm_to_functor(&CommOverPair::new(f2.clone(), MonoidMor::identity(&f2.dst))?)?)?;
                let inv1 = e1.f_prime.map.try_inverse("right leg")?;
                let inv2 = e2.f_prime.map.try_inverse("right leg")?;
                Ok(inv1.compose(&e1.f.map)? != inv2.compose(&e2.f.map)?)
            })();
            if let Some(ok) = rep.result(format!("{n1} vs {n2} extracted"), r) {
                rep.truth(format!("{n1} vs {n2} distinguishable"), ok, "same extracted pair");
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::monoids::builtin_morphism;
    use crate::random;

    #[test]
    fn builtin_pairs_round_trip() {
        let mut r = random::rng(4);
        for (name, p) in builtin_pairs::<Q>() {
            let rep = roundtrip_main(&p);
            assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
            let fun = comm_to_functor(&p).unwrap();
            let x = random::module(&mut r, &p.b, 3).unwrap();
            let y = random::module(&mut r, &p.b, 2).unwrap();
            let z = random::module(&mut r, &p.b, 2).unwrap();
            let h = random::module_map(&mut r, &x, &y).unwrap();
            let rep = fun.check_axioms(&x, &y, &z, &h);
            assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
            let rep = roundtrip_functor(&fun, &[x, y]);
            assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn identity_extracts_identity() {
        let d = builtin::<Q>("dual_numbers").unwrap();
        let e = functor_to_comm(&LaxFunctor::identity(&d)).unwrap();
        assert_eq!(e.monoid, d);
        assert!(e.f.map.is_identity() && e.f_prime.map.is_identity());
    }

    #[test]
    fn augmentation_tensor_extracts_ground() {
        let aug = builtin_morphism::<Q>("augmentation_dual_numbers").unwrap();
        let k = aug.dst.clone();
        let fun = comm_to_functor(&CommOverPair::new(aug, MonoidMor::identity(&k)).unwrap()).unwrap();
        assert_eq!(functor_to_comm(&fun).unwrap().monoid.dim(), 1);
    }

    #[test]
    fn unit_map_coherence_at_ground_is_multiplication() {
        let p = &builtin_pairs::<Q>()[1].1;
        let fun = comm_to_functor(p).unwrap();
        let k = RightModule::regular(&p.b);
        let c = fun.coherence(&k, &k).unwrap();
        assert_eq!((c.src.dim(), c.dst.dim()), (2, 2));
        assert!(c.is_iso());
    }

    #[test]
    fn pushforward_and_composites_are_lax() {
        let mut r = random::rng(6);
        let f = builtin_morphism::<Q>("t_cubed_to_dual").unwrap();
        let push = LaxFunctor::pushforward(&f);
        let pull = LaxFunctor::pull_push(&f, &MonoidMor::identity(&f.dst)).unwrap();
        let both = LaxFunctor::compose(push.clone(), pull).unwrap();
        for fun in [push, both] {
            let b = fun.source().clone();
            let x = random::module(&mut r, &b, 2).unwrap();
            let y = random::module(&mut r, &b, 2).unwrap();
            let h = random::module_map(&mut r, &y, &x).unwrap();
            let rep = fun.check_axioms(&x, &y, &x, &h);
            assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn corollary_for_all_builtin_maps() {
        let mut r = random::rng(2);
        let maps = builtin_morphisms::<Q>();
        for (name, f) in &maps {
            let x = random::module(&mut r, &f.src, 2).unwrap();
            let rep = corollary_strong(f, &[RightModule::regular(&f.src), x]);
            assert!(rep.all_passed(), "{name}: {:?}", rep.failures().collect::<Vec<_>>());
        }
        let rep = check_distinguishable(&maps);
        assert!(rep.all_passed() && !rep.checks.is_empty());
    }
}
