//! Tensor products over a commutative monoid as coequalizers, the induced
//! symmetric monoidal structure on modules, and the tensor-hom adjunction.
//!
//! Every structure map here is defined by a relation `map ∘ epi = h` and is
//! computed by factoring `h` through the split epi; a failure to factor means
//! the relation is not compatible with the coequalizer and is reported.

use crate::cosmos::{braiding, coequalizer, cv, ev, hom_map, induce_into_equalizer, CoeqPresentation, Mor, Obj, SplitEpi};
use crate::error::{KernelError, Result};
use crate::field::Field;
use crate::laws::LawReport;
use crate::modules::{hom_from_bimodule, hom_post, Bimodule, BimoduleMor, HomObject, ModuleMor, RightModule};

/// `z ⊛_b X` for a right `b`-module `z` and a `(b, b')`-bimodule `X`, a right `b'`-module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorOver<F: Field> {
    pub left: RightModule<F>,
    pub right: Bimodule<F>,
    pub pres: CoeqPresentation<F>,
    pub module: RightModule<F>,
}

/// `X ⊛_b Y` for an `(a, b)`-bimodule `X` and a `(b, c)`-bimodule `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiTensor<F: Field> {
    pub left: Bimodule<F>,
    pub right: Bimodule<F>,
    pub pres: CoeqPresentation<F>,
    pub bimodule: Bimodule<F>,
}

fn balanced_coequalizer<F: Field>(
    z: Obj,
    z_action: &Mor<F>,
    x: Obj,
    x_left: &Mor<F>,
    b: Obj,
) -> Result<CoeqPresentation<F>> {
    let f = z_action.tensor(&Mor::identity(x));
    let g = Mor::identity(z).tensor(x_left);
    debug_assert_eq!(f.src(), z.tensor(b).tensor(x));
    coequalizer(&f, &g)
}

/// Right action on the quotient induced by `id_z ⊗ γ'`.
fn induced_right_action<F: Field>(
    pres: &CoeqPresentation<F>,
    z: Obj,
    x_right: &Mor<F>,
    c: Obj,
) -> Result<Mor<F>> {
    let epi = pres.epi().tensor(&SplitEpi::identity(c));
    let h = pres.proj.compose(&Mor::identity(z).tensor(x_right))?;
    epi.factor(&h, "induced right action")
}

pub fn tensor_over<F: Field>(z: &RightModule<F>, x: &Bimodule<F>) -> Result<TensorOver<F>> {
    if z.over != x.left {
        return Err(KernelError::BaseMismatch("tensor over a monoid".into()));
    }
    let pres = balanced_coequalizer(z.carrier, &z.action, x.carrier, &x.left_action, z.over.carrier)?;
    let action = induced_right_action(&pres, z.carrier, &x.right_action, x.right.carrier)?;
    let module = RightModule {
        over: x.right.clone(),
        carrier: pres.quot,
        action,
    };
    Ok(TensorOver {
        left: z.clone(),
        right: x.clone(),
        pres,
        module,
    })
}

/// `x ⊛_b y` for two right `b`-modules.
pub fn mtensor<F: Field>(x: &RightModule<F>, y: &RightModule<F>) -> Result<TensorOver<F>> {
    tensor_over(x, &y.as_bimodule())
}

pub fn tensor_bimodules<F: Field>(x: &Bimodule<F>, y: &Bimodule<F>) -> Result<BiTensor<F>> {
    if x.right != y.left {
        return Err(KernelError::BaseMismatch("tensor of bimodules".into()));
    }
    let pres = balanced_coequalizer(x.carrier, &x.right_action, y.carrier, &y.left_action, y.left.carrier)?;
    let right_action = induced_right_action(&pres, x.carrier, &y.right_action, y.right.carrier)?;
    let epi = SplitEpi::identity(x.left.carrier).tensor(&pres.epi());
    let h = pres.proj.compose(&x.left_action.tensor(&Mor::identity(y.carrier)))?;
    let left_action = epi.factor(&h, "induced left action")?;
    let bimodule = Bimodule {
        left: x.left.clone(),
        right: y.right.clone(),
        carrier: pres.quot,
        left_action,
        right_action,
    };
    Ok(BiTensor {
        left: x.clone(),
        right: y.clone(),
        pres,
        bimodule,
    })
}

impl<F: Field> TensorOver<F> {
    /// `cq: z ⊗ X -> z ⊛ X` as a map of right modules.
    pub fn cq(&self) -> ModuleMor<F> {
        ModuleMor {
            src: self.right.right_module().tensored(self.left.carrier),
            dst: self.module.clone(),
            map: self.pres.proj.clone(),
        }
    }

    pub fn epi(&self) -> SplitEpi<F> {
        self.pres.epi()
    }

    /// The result with its induced left action, when `z` is a bimodule `(a, b)`.
    pub fn with_left_action(&self, z_left: &Bimodule<F>) -> Result<Bimodule<F>> {
        let epi = SplitEpi::identity(z_left.left.carrier).tensor(&self.pres.epi());
        let h = self
            .pres
            .proj
            .compose(&z_left.left_action.tensor(&Mor::identity(self.right.carrier)))?;
        Ok(Bimodule {
            left: z_left.left.clone(),
            right: self.module.over.clone(),
            carrier: self.module.carrier,
            left_action: epi.factor(&h, "induced left action")?,
            right_action: self.module.action.clone(),
        })
    }
}

/// `h ⊛ k: z ⊛ X -> z' ⊛ X'`, induced by `h ⊗ k`.
pub fn tensor_maps<F: Field>(h: &ModuleMor<F>, k: &BimoduleMor<F>) -> Result<ModuleMor<F>> {
    let src = tensor_over(&h.src, &k.src)?;
    let dst = tensor_over(&h.dst, &k.dst)?;
    tensor_maps_between(&src, &dst, &h.map, &k.map)
}

/// As [`tensor_maps`] with both tensor products already computed.
pub fn tensor_maps_between<F: Field>(
    src: &TensorOver<F>,
    dst: &TensorOver<F>,
    h: &Mor<F>,
    k: &Mor<F>,
) -> Result<ModuleMor<F>> {
    let full = dst.pres.proj.compose(&h.tensor(k))?;
    let map = src.epi().factor(&full, "tensor of module maps")?;
    ModuleMor::new_unchecked(src.module.clone(), dst.module.clone(), map)
}

/// `h ⊛_b g` for maps of right `b`-modules.
pub fn mtensor_maps<F: Field>(h: &ModuleMor<F>, g: &ModuleMor<F>) -> Result<ModuleMor<F>> {
    tensor_maps(h, &g.as_bimodule_mor())
}

/// The strength `w ⊗ (z ⊛ X) -> (w ⊗ z) ⊛ X`, the unique map with
/// `a ∘ (id_w ⊗ cq_z) = cq_{w ⊗ z}`.
pub fn strength<F: Field>(w: Obj, z: &RightModule<F>, x: &Bimodule<F>) -> Result<ModuleMor<F>> {
    let inner = tensor_over(z, x)?;
    let outer = tensor_over(&z.tensored(w), x)?;
    let epi = SplitEpi::identity(w).tensor(&inner.epi());
    let map = epi.factor(&outer.pres.proj, "strength")?;
    ModuleMor::new_unchecked(inner.module.tensored(w), outer.module, map)
}

/// `ι^b_X: b ⊛_b X -> X` with `ι ∘ cq = ρ_X`.
pub fn unit_iso<F: Field>(x: &Bimodule<F>) -> Result<ModuleMor<F>> {
    let t = tensor_over(&RightModule::regular(&x.left), x)?;
    let map = t.epi().factor(&x.left_action, "left unitor")?;
    ModuleMor::new_unchecked(t.module, x.right_module(), map)
}

/// `ι^b_x: b ⊛ x -> x` in `M_b`.
pub fn left_unitor<F: Field>(x: &RightModule<F>) -> Result<ModuleMor<F>> {
    unit_iso(&x.as_bimodule())
}

/// `ȷ^b_x: x ⊛ b -> x` with `ȷ ∘ cq = γ_x`.
pub fn right_unitor<F: Field>(x: &RightModule<F>) -> Result<ModuleMor<F>> {
    let t = mtensor(x, &RightModule::regular(&x.over))?;
    let map = t.epi().factor(&x.action, "right unitor")?;
    ModuleMor::new_unchecked(t.module, x.clone(), map)
}

/// `s^b_{x,y}: x ⊛ y -> y ⊛ x` with `s^b ∘ cq_{x,y} = cq_{y,x} ∘ s`.
pub fn symmetry<F: Field>(x: &RightModule<F>, y: &RightModule<F>) -> Result<ModuleMor<F>> {
    let xy = mtensor(x, y)?;
    let yx = mtensor(y, x)?;
    let h = yx.pres.proj.compose(&braiding(x.carrier, y.carrier))?;
    let map = xy.epi().factor(&h, "symmetry")?;
    ModuleMor::new_unchecked(xy.module, yx.module, map)
}

/// `a^b_{z,x,y}: z ⊛ (x ⊛ y) -> (z ⊛ x) ⊛ y`, the unique map with
/// `a^b ∘ cq_{z, x⊛y} = (cq_{z,x} ⊛ id_y) ∘ a_{z,x,y}`.
pub fn associator<F: Field>(
    z: &RightModule<F>,
    x: &RightModule<F>,
    y: &RightModule<F>,
) -> Result<ModuleMor<F>> {
    let xy = mtensor(x, y)?;
    let z_xy = mtensor(z, &xy.module)?;
    let zx = mtensor(z, x)?;
    let yb = y.as_bimodule();
    let a = strength(z.carrier, x, &yb)?;
    let cq_zx = zx.cq();
    let cq_zx_y = tensor_maps(&cq_zx, &yb.id())?;
    let h = cq_zx_y.map.compose(&a.map)?;
    let map = z_xy.epi().factor(&h, "associator")?;
    let target = mtensor(&zx.module, y)?.module;
    ModuleMor::new_unchecked(z_xy.module, target, map)
}

/// Pentagon, triangle, hexagon, symmetry and naturality of the symmetry in `M_b`.
pub fn check_monoidal_coherence<F: Field>(
    w: &RightModule<F>,
    x: &RightModule<F>,
    y: &RightModule<F>,
    z: &RightModule<F>,
) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let t = |a: &RightModule<F>, b: &RightModule<F>| mtensor(a, b).map(|t| t.module);
        let xyz = t(y, z)?;
        let path1 = associator(&t(w, x)?, y, z)?.compose(&associator(w, x, &xyz)?)?;
        let a_xyz = associator(x, y, z)?;
        let path2 = mtensor_maps(&associator(w, x, y)?, &z.id())?
            .compose(&associator(w, &t(x, y)?, z)?)?
            .compose(&mtensor_maps(&w.id(), &a_xyz)?)?;
        rep.equal("pentagon", &path1.map, &path2.map);

        let b = RightModule::regular(&x.over);
        let lhs = mtensor_maps(&right_unitor(x)?, &y.id())?.compose(&associator(x, &b, y)?)?;
        let rhs = mtensor_maps(&x.id(), &left_unitor(y)?)?;
        rep.equal("triangle", &lhs.map, &rhs.map);

        let xy = t(x, y)?;
        let lhs = associator(z, x, y)?
            .compose(&symmetry(&xy, z)?)?
            .compose(&associator(x, y, z)?)?;
        let rhs = mtensor_maps(&symmetry(x, z)?, &y.id())?
            .compose(&associator(x, z, y)?)?
            .compose(&mtensor_maps(&x.id(), &symmetry(y, z)?)?)?;
        rep.equal("hexagon", &lhs.map, &rhs.map);

        let round = symmetry(y, x)?.compose(&symmetry(x, y)?)?;
        rep.truth("symmetry involutive", round.map.is_identity(), "s ∘ s is not the identity");
        Ok(())
    })();
    rep.result("coherence maps defined", r);
    rep
}

/// Checks that the coherence maps are isomorphisms of modules.
pub fn check_coherence_isos<F: Field>(x: &RightModule<F>, y: &RightModule<F>, z: &RightModule<F>) -> LawReport {
    let mut rep = LawReport::new();
    let maps: Vec<(&str, Result<ModuleMor<F>>)> = vec![
        ("associator", associator(x, y, z)),
        ("left unitor", left_unitor(x)),
        ("right unitor", right_unitor(x)),
        ("symmetry", symmetry(x, y)),
    ];
    for (name, m) in maps {
        if let Some(m) = rep.result(format!("{name} defined"), m) {
            rep.truth(format!("{name} invertible"), m.is_iso(), "singular");
            let eq = m.check_equivariance();
            rep.truth(format!("{name} equivariant"), eq.all_passed(), "not a module map");
        }
    }
    rep
}

/// `η_z: z -> Hom_{b'}(X, z ⊛ X)`, the unit of `- ⊛_b X ⊣ Hom_{b'}(X, -)`.
pub fn adjunction_unit<F: Field>(z: &RightModule<F>, x: &Bimodule<F>) -> Result<(ModuleMor<F>, HomObject<F>)> {
    let zx = tensor_over(z, x)?;
    let hom = hom_from_bimodule(x, &zx.module)?;
    let amb = hom_map(&Mor::identity(x.carrier), &zx.pres.proj).compose(&cv(z.carrier, x.carrier))?;
    let map = induce_into_equalizer(&hom.pres, &amb, "adjunction unit")?;
    let m = ModuleMor::new_unchecked(z.clone(), hom.module.clone(), map)?;
    Ok((m, hom))
}

/// `ε_y: Hom_{b'}(X, y) ⊛_b X -> y` with `ε ∘ cq = Ev ∘ (incl ⊗ id)`.
pub fn adjunction_counit<F: Field>(x: &Bimodule<F>, y: &RightModule<F>) -> Result<(ModuleMor<F>, HomObject<F>)> {
    let hom = hom_from_bimodule(x, y)?;
    let t = tensor_over(&hom.module, x)?;
    let h = ev(x.carrier, y.carrier).compose(&hom.pres.incl.tensor(&Mor::identity(x.carrier)))?;
    let map = t.epi().factor(&h, "adjunction counit")?;
    let m = ModuleMor::new_unchecked(t.module, y.clone(), map)?;
    Ok((m, hom))
}

/// Both triangle identities at `z` (a right `b`-module) and `y` (a right `b'`-module).
pub fn check_adjunction_triangles<F: Field>(z: &RightModule<F>, x: &Bimodule<F>, y: &RightModule<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let (eta_z, _) = adjunction_unit(z, x)?;
        let eta_tensor = tensor_maps(&eta_z, &x.id())?;
        let zx = tensor_over(z, x)?;
        let (eps, _) = adjunction_counit(x, &zx.module)?;
        let lhs = eps.compose(&eta_tensor)?;
        rep.truth("left triangle", lhs.map.is_identity(), "ε ∘ (η ⊛ id) is not the identity");

        let (eps_y, hom_y) = adjunction_counit(x, y)?;
        let (eta_h, hom_hx) = adjunction_unit(&hom_y.module, x)?;
        let post = hom_post(&hom_hx, &hom_y, &eps_y)?;
        let lhs = post.compose(&eta_h)?;
        rep.truth("right triangle", lhs.map.is_identity(), "Hom(X, ε) ∘ η is not the identity");
        rep.truth(
            "unit equivariant",
            eta_z.check_equivariance().all_passed(),
            "unit is not a module map",
        );
        rep.truth(
            "counit equivariant",
            eps_y.check_equivariance().all_passed(),
            "counit is not a module map",
        );
        Ok(())
    })();
    rep.result("adjunction maps defined", r);
    rep
}

/// Transposition across `- ⊛_b X ⊣ Hom_{b'}(X, -)`: the hom spaces
/// `M_{b'}(z ⊛ X, y)` and `M_b(z, Hom(X, y))` have equal dimension and
/// `g ↦ Hom(X, g) ∘ η_z ↦ ε_y ∘ (- ⊛ X)` returns every basis map unchanged.
pub fn check_closedness<F: Field>(z: &RightModule<F>, x: &Bimodule<F>, y: &RightModule<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let zx = tensor_over(z, x)?;
        let left = crate::modules::internal_hom(&zx.module, y)?;
        let (eps, hom_xy) = adjunction_counit(x, y)?;
        let right = crate::modules::internal_hom(z, &hom_xy.module)?;
        rep.truth(
            "hom dimensions agree",
            left.module.dim() == right.module.dim(),
            format!("{} vs {}", left.module.dim(), right.module.dim()),
        );
        let (eta, hom_x_zx) = adjunction_unit(z, x)?;
        for (i, g) in left.basis_maps().into_iter().enumerate() {
            let g = ModuleMor::new_unchecked(zx.module.clone(), y.clone(), g)?;
            let transposed = hom_post(&hom_x_zx, &hom_xy, &g)?.compose(&eta)?;
            let back = eps.compose(&tensor_maps(&transposed, &x.id())?)?;
            rep.equal(format!("transpose round trip #{i}"), &back.map, &g.map);
        }
        Ok(())
    })();
    rep.result("closedness maps defined", r);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::monoids::{dual_numbers, z2_group_algebra};

    fn residue() -> RightModule<Q> {
        let d = dual_numbers::<Q>();
        RightModule::new(d, Obj::new(1), Mor::from_i64(Obj::new(2), Obj::new(1), &[&[1, 0]]).unwrap()).unwrap()
    }

    #[test]
    fn residue_tensor_residue_is_one_dimensional() {
        let k = residue();
        assert_eq!(mtensor(&k, &k).unwrap().module.dim(), 1);
        let d = RightModule::regular(&dual_numbers::<Q>());
        assert_eq!(mtensor(&k, &d).unwrap().module.dim(), 1);
        assert_eq!(mtensor(&d, &d).unwrap().module.dim(), 2);
    }

    #[test]
    fn unitors_are_isos() {
        let k = residue();
        let d = RightModule::regular(&dual_numbers::<Q>());
        for x in [&k, &d] {
            let l = left_unitor(x).unwrap();
            assert!(l.is_iso());
            assert!(l.check_equivariance().all_passed());
            assert!(right_unitor(x).unwrap().is_iso());
        }
    }

    #[test]
    fn coherence_on_small_modules() {
        let k = residue();
        let d = RightModule::regular(&dual_numbers::<Q>());
        let rep = check_monoidal_coherence(&k, &d, &k, &d);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        assert!(check_coherence_isos(&d, &k, &d).all_passed());
    }

    #[test]
    fn associator_matches_full_tensor_route() {
        let k = residue();
        let d = RightModule::regular(&dual_numbers::<Q>());
        let (z, x, y) = (&d, &k, &d);
        let a = associator(z, x, y).unwrap();
        let xy = mtensor(x, y).unwrap();
        let z_xy = mtensor(z, &xy.module).unwrap();
        let zx = mtensor(z, x).unwrap();
        let zx_y = mtensor(&zx.module, y).unwrap();
        let lhs = a
            .map
            .compose(&z_xy.pres.proj)
            .unwrap()
            .compose(&Mor::identity(z.carrier).tensor(&xy.pres.proj))
            .unwrap();
        let rhs = zx_y
            .pres
            .proj
            .compose(&zx.pres.proj.tensor(&Mor::identity(y.carrier)))
            .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn adjunction_triangles_for_regular_bimodule() {
        let b = z2_group_algebra::<Q>();
        let x = RightModule::regular(&b).as_bimodule();
        let z = RightModule::regular(&b);
        let rep = check_adjunction_triangles(&z, &x, &z);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn closedness_round_trip() {
        let k = residue();
        let d = RightModule::regular(&dual_numbers::<Q>());
        let rep = check_closedness(&d, &k.as_bimodule(), &d);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        let rep = check_closedness(&k, &d.as_bimodule(), &k);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }

    #[test]
    fn adjunction_triangles_for_residue() {
        let k = residue();
        let d = RightModule::regular(&dual_numbers::<Q>());
        let rep = check_adjunction_triangles(&k, &d.as_bimodule(), &k);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
        let rep = check_adjunction_triangles(&d, &k.as_bimodule(), &d);
        assert!(rep.all_passed(), "{:?}", rep.failures().collect::<Vec<_>>());
    }
}
