//! Right modules and bimodules over commutative monoids, module maps, and
//! the internal hom of modules as an equalizer inside `hom(x, y)`.

use crate::cosmos::{braiding, equalizer, hom_map, EqPresentation, Mor, Obj};
use crate::error::{dim_check, KernelError, Result};
use crate::field::Field;
use crate::laws::LawReport;
use crate::monoids::{CommMonoid, MonoidMor};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RightModule<F: Field> {
    pub over: CommMonoid<F>,
    pub carrier: Obj,
    /// `γ: x ⊗ b -> x`
    pub action: Mor<F>,
}

impl<F: Field> RightModule<F> {
    pub fn new(over: CommMonoid<F>, carrier: Obj, action: Mor<F>) -> Result<Self> {
        let x = Self::new_unchecked(over, carrier, action)?;
        x.check_laws().into_result("right module")?;
        Ok(x)
    }

    pub fn new_unchecked(over: CommMonoid<F>, carrier: Obj, action: Mor<F>) -> Result<Self> {
        dim_check("module action source", action.src().dim, carrier.dim * over.dim())?;
        dim_check("module action target", action.dst().dim, carrier.dim)?;
        Ok(RightModule {
            over,
            carrier,
            action,
        })
    }

    /// `b` acting on itself.
    pub fn regular(b: &CommMonoid<F>) -> Self {
        RightModule {
            over: b.clone(),
            carrier: b.carrier,
            action: b.product.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn id(&self) -> ModuleMor<F> {
        ModuleMor {
            src: self.clone(),
            dst: self.clone(),
            map: Mor::identity(self.carrier),
        }
    }

    pub fn check_laws(&self) -> LawReport {
        let mut rep = LawReport::new();
        let b = &self.over;
        let g = &self.action;
        let idx = Mor::identity(self.carrier);
        let lhs = g.compose(&g.tensor(&b.id())).expect("shapes");
        let rhs = g.compose(&idx.tensor(&b.product)).expect("shapes");
        rep.equal("action associativity", &lhs, &rhs);
        rep.equal("action unit", &g.compose(&idx.tensor(&b.unit)).expect("shapes"), &idx);
        rep
    }

    /// `z ⊗ x` with `b` acting on the right factor.
    pub fn tensored(&self, z: Obj) -> Self {
        RightModule {
            over: self.over.clone(),
            carrier: z.tensor(self.carrier),
            action: Mor::identity(z).tensor(&self.action),
        }
    }

    /// `γ̊ = γ ∘ s: b ⊗ x -> x`, the same action written on the left.
    pub fn opposite_action(&self) -> Mor<F> {
        self.action
            .compose(&braiding(self.over.carrier, self.carrier))
            .expect("shapes")
    }

    /// Restriction of scalars along `f: c -> b`.
    pub fn restrict(&self, f: &MonoidMor<F>) -> Result<Self> {
        if f.dst != self.over {
            return Err(KernelError::BaseMismatch("restriction of scalars".into()));
        }
        Ok(RightModule {
            over: f.src.clone(),
            carrier: self.carrier,
            action: self
                .action
                .compose(&Mor::identity(self.carrier).tensor(&f.map))?,
        })
    }

    pub fn as_bimodule(&self) -> Bimodule<F> {
        Bimodule {
            left: self.over.clone(),
            right: self.over.clone(),
            carrier: self.carrier,
            left_action: self.opposite_action(),
            right_action: self.action.clone(),
        }
    }

    pub fn same_base(&self, other: &RightModule<F>) -> bool {
        self.over == other.over
    }
}

/// A `(b, b')`-bimodule: `ρ: b ⊗ x -> x` and `γ': x ⊗ b' -> x`, commuting.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bimodule<F: Field> {
    pub left: CommMonoid<F>,
    pub right: CommMonoid<F>,
    pub carrier: Obj,
    pub left_action: Mor<F>,
    pub right_action: Mor<F>,
}

impl<F: Field> Bimodule<F> {
    pub fn new(
        left: CommMonoid<F>,
        right: CommMonoid<F>,
        carrier: Obj,
        left_action: Mor<F>,
        right_action: Mor<F>,
    ) -> Result<Self> {
        dim_check("left action source", left_action.src().dim, left.dim() * carrier.dim)?;
        dim_check("left action target", left_action.dst().dim, carrier.dim)?;
        dim_check("right action source", right_action.src().dim, carrier.dim * right.dim())?;
        dim_check("right action target", right_action.dst().dim, carrier.dim)?;
        let x = Bimodule {
            left,
            right,
            carrier,
            left_action,
            right_action,
        };
        x.check_laws().into_result("bimodule")?;
        Ok(x)
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn check_laws(&self) -> LawReport {
        let mut rep = self.right_module().check_laws();
        let (b, c) = (&self.left, &self.right);
        let idx = Mor::identity(self.carrier);
        let rho = &self.left_action;
        let gam = &self.right_action;
        let lhs = rho.compose(&b.product.tensor(&idx)).expect("shapes");
        let rhs = rho.compose(&b.id().tensor(rho)).expect("shapes");
        rep.equal("left action associativity", &lhs, &rhs);
        rep.equal(
            "left action unit",
            &rho.compose(&b.unit.tensor(&idx)).expect("shapes"),
            &idx,
        );
        let lhs = gam.compose(&rho.tensor(&c.id())).expect("shapes");
        let rhs = rho.compose(&b.id().tensor(gam)).expect("shapes");
        rep.equal("actions commute", &lhs, &rhs);
        rep
    }

    /// Forgets the left action.
    pub fn right_module(&self) -> RightModule<F> {
        RightModule {
            over: self.right.clone(),
            carrier: self.carrier,
            action: self.right_action.clone(),
        }
    }

    /// Forgets the right action; the left action rewritten on the right.
    pub fn left_module(&self) -> RightModule<F> {
        RightModule {
            over: self.left.clone(),
            carrier: self.carrier,
            action: self
                .left_action
                .compose(&braiding(self.carrier, self.left.carrier))
                .expect("shapes"),
        }
    }

    /// `_b b'_{b'}` for `f: b -> b'`.
    pub fn pulled_regular(f: &MonoidMor<F>) -> Self {
        let m = &f.dst.product;
        Bimodule {
            left: f.src.clone(),
            right: f.dst.clone(),
            carrier: f.dst.carrier,
            left_action: m.compose(&f.map.tensor(&f.dst.id())).expect("shapes"),
            right_action: m.clone(),
        }
    }

    /// `_{b'} b'_b` for `f: b -> b'`.
    pub fn pushed_regular(f: &MonoidMor<F>) -> Self {
        let m = &f.dst.product;
        Bimodule {
            left: f.dst.clone(),
            right: f.src.clone(),
            carrier: f.dst.carrier,
            left_action: m.clone(),
            right_action: m.compose(&f.dst.id().tensor(&f.map)).expect("shapes"),
        }
    }

    /// `_b c_{b'}` for `f: b -> c <- b': g`.
    pub fn from_pair(f: &MonoidMor<F>, g: &MonoidMor<F>) -> Result<Self> {
        if f.dst != g.dst {
            return Err(KernelError::BaseMismatch("bimodule from a pair of maps".into()));
        }
        let m = &f.dst.product;
        Ok(Bimodule {
            left: f.src.clone(),
            right: g.src.clone(),
            carrier: f.dst.carrier,
            left_action: m.compose(&f.map.tensor(&f.dst.id()))?,
            right_action: m.compose(&f.dst.id().tensor(&g.map))?,
        })
    }

    pub fn id(&self) -> BimoduleMor<F> {
        BimoduleMor {
            src: self.clone(),
            dst: self.clone(),
            map: Mor::identity(self.carrier),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMor<F: Field> {
    pub src: RightModule<F>,
    pub dst: RightModule<F>,
    pub map: Mor<F>,
}

impl<F: Field> ModuleMor<F> {
    pub fn new(src: RightModule<F>, dst: RightModule<F>, map: Mor<F>) -> Result<Self> {
        let h = Self::new_unchecked(src, dst, map)?;
        h.check_equivariance().into_result("module map")?;
        Ok(h)
    }

    pub fn new_unchecked(src: RightModule<F>, dst: RightModule<F>, map: Mor<F>) -> Result<Self> {
        if !src.same_base(&dst) {
            return Err(KernelError::BaseMismatch("module map".into()));
        }
        dim_check("module map source", map.src().dim, src.dim())?;
        dim_check("module map target", map.dst().dim, dst.dim())?;
        Ok(ModuleMor { src, dst, map })
    }

    pub fn check_equivariance(&self) -> LawReport {
        let mut rep = LawReport::new();
        let lhs = self.map.compose(&self.src.action).expect("shapes");
        let rhs = self
            .dst
            .action
            .compose(&self.map.tensor(&self.src.over.id()))
            .expect("shapes");
        rep.equal("equivariance", &lhs, &rhs);
        rep
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &ModuleMor<F>) -> Result<ModuleMor<F>> {
        if inner.dst != self.src {
            return Err(KernelError::BaseMismatch("module map composition".into()));
        }
        Ok(ModuleMor {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            map: self.map.compose(&inner.map)?,
        })
    }

    pub fn inverse(&self, what: &str) -> Result<ModuleMor<F>> {
        Ok(ModuleMor {
            src: self.dst.clone(),
            dst: self.src.clone(),
            map: self.map.try_inverse(what)?,
        })
    }

    pub fn is_iso(&self) -> bool {
        self.map.inverse().is_some()
    }

    /// `id_z ⊗ self: z ⊗ x -> z ⊗ y`.
    pub fn tensored(&self, z: Obj) -> ModuleMor<F> {
        ModuleMor {
            src: self.src.tensored(z),
            dst: self.dst.tensored(z),
            map: Mor::identity(z).tensor(&self.map),
        }
    }

    /// The same linear map seen between the associated `(b, b)`-bimodules.
    pub fn as_bimodule_mor(&self) -> BimoduleMor<F> {
        BimoduleMor {
            src: self.src.as_bimodule(),
            dst: self.dst.as_bimodule(),
            map: self.map.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BimoduleMor<F: Field> {
    pub src: Bimodule<F>,
    pub dst: Bimodule<F>,
    pub map: Mor<F>,
}

impl<F: Field> BimoduleMor<F> {
    pub fn new(src: Bimodule<F>, dst: Bimodule<F>, map: Mor<F>) -> Result<Self> {
        if src.left != dst.left || src.right != dst.right {
            return Err(KernelError::BaseMismatch("bimodule map".into()));
        }
        dim_check("bimodule map source", map.src().dim, src.dim())?;
        dim_check("bimodule map target", map.dst().dim, dst.dim())?;
        let h = BimoduleMor { src, dst, map };
        h.check_equivariance().into_result("bimodule map")?;
        Ok(h)
    }

    pub fn check_equivariance(&self) -> LawReport {
        let mut rep = LawReport::new();
        let h = &self.map;
        let lhs = h.compose(&self.src.left_action).expect("shapes");
        let rhs = self
            .dst
            .left_action
            .compose(&self.src.left.id().tensor(h))
            .expect("shapes");
        rep.equal("left equivariance", &lhs, &rhs);
        let lhs = h.compose(&self.src.right_action).expect("shapes");
        let rhs = self
            .dst
            .right_action
            .compose(&h.tensor(&self.src.right.id()))
            .expect("shapes");
        rep.equal("right equivariance", &lhs, &rhs);
        rep
    }

    pub fn compose(&self, inner: &BimoduleMor<F>) -> Result<BimoduleMor<F>> {
        if inner.dst != self.src {
            return Err(KernelError::BaseMismatch("bimodule map composition".into()));
        }
        Ok(BimoduleMor {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            map: self.map.compose(&inner.map)?,
        })
    }
}

/// `φ ↦ φ ⊗ id_w` as a linear map `hom(x, y) -> hom(x ⊗ w, y ⊗ w)`.
pub fn hom_tensor_right<F: Field>(x: Obj, y: Obj, w: Obj) -> Mor<F> {
    let (dx, dw) = (x.dim, w.dim);
    let src = x.hom(y);
    let dst = x.tensor(w).hom(y.tensor(w));
    let mut m = Mor::zero(src, dst);
    for i in 0..y.dim {
        for j in 0..dx {
            for l in 0..dw {
                let row = (i * dw + l) * (dx * dw) + j * dw + l;
                m.set(row, i * dx + j, F::one());
            }
        }
    }
    m
}

/// `Hom_{b'}(X, Y)` for a `(c, b')`-bimodule `X` and right `b'`-module `Y`,
/// a right `c`-module via `(φ·β)(v) = φ(β·v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomObject<F: Field> {
    pub module: RightModule<F>,
    pub pres: EqPresentation<F>,
    pub source: Bimodule<F>,
    pub target: RightModule<F>,
}

pub fn hom_from_bimodule<F: Field>(x: &Bimodule<F>, y: &RightModule<F>) -> Result<HomObject<F>> {
    if x.right != y.over {
        return Err(KernelError::BaseMismatch("hom of modules".into()));
    }
    let b = &y.over;
    let (xo, yo) = (x.carrier, y.carrier);
    let pre = hom_map(&x.right_action, &Mor::identity(yo));
    let post = hom_map(&Mor::identity(xo.tensor(b.carrier)), &y.action)
        .compose(&hom_tensor_right(xo, yo, b.carrier))?;
    let pres = equalizer(&pre, &post)?;
    let c = &x.left;
    let (dx, dc) = (xo.dim, c.dim());
    let ambient = xo.hom(yo);
    let rho = &x.left_action;
    let mut amb_action = Mor::zero(ambient.tensor(c.carrier), ambient);
    for i in 0..yo.dim {
        for j in 0..dx {
            for l in 0..dc {
                for k in 0..dx {
                    let v = rho.get(j, l * dx + k);
                    if !v.is_zero() {
                        amb_action.set(i * dx + k, (i * dx + j) * dc + l, v.clone());
                    }
                }
            }
        }
    }
    let restricted = amb_action.compose(&pres.incl.tensor(&c.id()))?;
    let action = pres.retr.compose(&restricted)?;
    pres.incl
        .compose(&action)?
        .expect_eq(&restricted, "hom action preserves equivariant maps")?;
    let module = RightModule {
        over: c.clone(),
        carrier: pres.sub,
        action,
    };
    Ok(HomObject {
        module,
        pres,
        source: x.clone(),
        target: y.clone(),
    })
}

/// The internal hom `M_b(x, y)`.
pub fn internal_hom<F: Field>(x: &RightModule<F>, y: &RightModule<F>) -> Result<HomObject<F>> {
    hom_from_bimodule(&x.as_bimodule(), y)
}

impl<F: Field> HomObject<F> {
    /// The module map underlying a point of the hom object.
    pub fn element_to_map(&self, coords: &Mor<F>) -> Result<Mor<F>> {
        dim_check("hom element", coords.dst().dim, self.pres.sub.dim)?;
        dim_check("hom element", coords.src().dim, 1)?;
        let flat = self.pres.incl.compose(coords)?;
        let dx = self.source.dim();
        Ok(Mor::from_fn(self.source.carrier, self.target.carrier, |i, j| {
            flat.get(i * dx + j, 0).clone()
        }))
    }

    pub fn map_to_element(&self, h: &Mor<F>) -> Result<Mor<F>> {
        dim_check("hom element source", h.src().dim, self.source.dim())?;
        dim_check("hom element target", h.dst().dim, self.target.dim())?;
        let dx = self.source.dim();
        let flat = Mor::from_fn(Obj::unit(), self.pres.incl.dst(), |r, _| {
            h.get(r / dx, r % dx).clone()
        });
        crate::cosmos::induce_into_equalizer(&self.pres, &flat, "module map as hom element")
    }

    /// The module maps spanning the hom object, one per basis vector.
    pub fn basis_maps(&self) -> Vec<Mor<F>> {
        (0..self.pres.sub.dim)
            .map(|t| {
                let e = Mor::from_fn(Obj::unit(), self.pres.sub, |r, _| {
                    if r == t {
                        F::one()
                    } else {
                        F::zero()
                    }
                });
                self.element_to_map(&e).expect("shapes")
            })
            .collect()
    }
}

/// Post-composition `Hom(X, h): Hom(X, Y) -> Hom(X, Y')`.
pub fn hom_post<F: Field>(
    from: &HomObject<F>,
    to: &HomObject<F>,
    h: &ModuleMor<F>,
) -> Result<ModuleMor<F>> {
    let amb = h.map.tensor(&Mor::identity(from.source.carrier));
    let map = to.pres.retr.compose(&amb)?.compose(&from.pres.incl)?;
    ModuleMor::new_unchecked(from.module.clone(), to.module.clone(), map)
}

/// Pre-composition `Hom(g, Y): Hom(X, Y) -> Hom(X', Y)` for `g: X' -> X`.
pub fn hom_pre<F: Field>(
    from: &HomObject<F>,
    to: &HomObject<F>,
    g: &Mor<F>,
) -> Result<ModuleMor<F>> {
    let amb = hom_map(g, &Mor::identity(from.target.carrier));
    let map = to.pres.retr.compose(&amb)?.compose(&from.pres.incl)?;
    ModuleMor::new_unchecked(from.module.clone(), to.module.clone(), map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Q;
    use crate::monoids::{builtin_morphism, dual_numbers, ground};

    fn k_over_d() -> RightModule<Q> {
        let d = dual_numbers::<Q>();
        let action = Mor::from_i64(Obj::new(2), Obj::new(1), &[&[1, 0]]).unwrap();
        RightModule::new(d, Obj::new(1), action).unwrap()
    }

    #[test]
    fn regular_and_residue_modules() {
        let d = dual_numbers::<Q>();
        assert!(RightModule::regular(&d).check_laws().all_passed());
        assert!(k_over_d().check_laws().all_passed());
        let bad = Mor::from_i64(Obj::new(2), Obj::new(1), &[&[1, 1]]).unwrap();
        assert!(RightModule::new(d, Obj::new(1), bad).is_err());
    }

    #[test]
    fn internal_hom_dimensions() {
        // maps k -> D are spanned by 1 ↦ t; k -> k by the identity
        let d = dual_numbers::<Q>();
        let k = k_over_d();
        assert_eq!(internal_hom(&k, &RightModule::regular(&d)).unwrap().module.dim(), 1);
        assert_eq!(internal_hom(&k, &k).unwrap().module.dim(), 1);
        assert_eq!(internal_hom(&RightModule::regular(&d), &k).unwrap().module.dim(), 1);
        let h = internal_hom(&RightModule::regular(&d), &RightModule::regular(&d)).unwrap();
        assert_eq!(h.module.dim(), 2);
        assert!(h.module.check_laws().all_passed());
    }

    #[test]
    fn hom_elements_round_trip() {
        let d = dual_numbers::<Q>();
        let h = internal_hom(&k_over_d(), &RightModule::regular(&d)).unwrap();
        let maps = h.basis_maps();
        assert_eq!(maps.len(), 1);
        let as_mod = ModuleMor::new(k_over_d(), RightModule::regular(&d), maps[0].clone());
        assert!(as_mod.is_ok());
        let back = h.map_to_element(&maps[0]).unwrap();
        assert!(back.get(0, 0).is_one());
    }

    #[test]
    fn pulled_and_pushed_regular_bimodules() {
        let f = builtin_morphism::<Q>("augmentation_dual_numbers").unwrap();
        assert!(Bimodule::pulled_regular(&f).check_laws().all_passed());
        assert!(Bimodule::pushed_regular(&f).check_laws().all_passed());
        let g = MonoidMor::unit_of(&dual_numbers::<Q>());
        assert_eq!(g.src, ground());
        assert!(Bimodule::pulled_regular(&g).check_laws().all_passed());
    }

    #[test]
    fn restriction_along_unit() {
        let d = dual_numbers::<Q>();
        let r = RightModule::regular(&d).restrict(&MonoidMor::unit_of(&d)).unwrap();
        assert_eq!(r.over, ground());
        assert!(r.action.is_identity());
    }
}
