//! Enriched functors between module categories as a small expression language,
//! with their strengths, the canonical bimodule `F(b)` and the comparison
//! `λ^F_z: z ⊛_b F(b) -> F(z)`.

use std::fmt;
use std::sync::Arc;

use crate::cosmos::{induce_into_equalizer, Mor, Obj};
use crate::error::{KernelError, Result};
use crate::field::Field;
use crate::laws::LawReport;
use crate::module_tensor::{strength, tensor_maps, tensor_over};
use crate::modules::{hom_from_bimodule, hom_post, Bimodule, BimoduleMor, ModuleMor, RightModule};
use crate::monoids::{CommMonoid, MonoidMor};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FunctorExpr<F: Field> {
    Identity(CommMonoid<F>),
    /// `- ⊛_b X` for a `(b, b')`-bimodule `X`.
    TensorBimodule(Bimodule<F>),
    /// Restriction along `f: b' -> b`, from `M_b` to `M_{b'}`.
    Restrict(MonoidMor<F>),
    /// `Hom_b(X, -)` for a `(b', b)`-bimodule `X`, from `M_b` to `M_{b'}`.
    HomModule(Bimodule<F>),
    /// `outer ∘ inner`.
    Compose(Box<FunctorExpr<F>>, Box<FunctorExpr<F>>),
}

impl<F: Field> fmt::Display for FunctorExpr<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FunctorExpr::Identity(b) => write!(f, "id[{}]", b.dim()),
            FunctorExpr::TensorBimodule(x) => write!(f, "tensor[{}]", x.dim()),
            FunctorExpr::Restrict(m) => write!(f, "restrict[{}->{}]", m.src.dim(), m.dst.dim()),
            FunctorExpr::HomModule(x) => write!(f, "hom[{}]", x.dim()),
            FunctorExpr::Compose(g, h) => write!(f, "{h} ; {g}"),
        }
    }
}

impl<F: Field> FunctorExpr<F> {
    /// `outer ∘ inner`, checking that the categories match.
    pub fn compose(outer: FunctorExpr<F>, inner: FunctorExpr<F>) -> Result<Self> {
        if inner.target() != outer.source() {
            return Err(KernelError::BaseMismatch("functor composition".into()));
        }
        Ok(FunctorExpr::Compose(Box::new(outer), Box::new(inner)))
    }

    /// The monoid `b` with the functor going out of `M_b`.
    pub fn source(&self) -> &CommMonoid<F> {
        match self {
            FunctorExpr::Identity(b) => b,
            FunctorExpr::TensorBimodule(x) => &x.left,
            FunctorExpr::Restrict(f) => &f.dst,
            FunctorExpr::HomModule(x) => &x.right,
            FunctorExpr::Compose(_, inner) => inner.source(),
        }
    }

    pub fn target(&self) -> &CommMonoid<F> {
        match self {
            FunctorExpr::Identity(b) => b,
            FunctorExpr::TensorBimodule(x) => &x.right,
            FunctorExpr::Restrict(f) => &f.src,
            FunctorExpr::HomModule(x) => &x.left,
            FunctorExpr::Compose(outer, _) => outer.target(),
        }
    }

    fn check_source(&self, z: &RightModule<F>) -> Result<()> {
        if &z.over != self.source() {
            return Err(KernelError::BaseMismatch(format!("applying {self}")));
        }
        Ok(())
    }

    pub fn apply_obj(&self, z: &RightModule<F>) -> Result<RightModule<F>> {
        self.check_source(z)?;
        match self {
            FunctorExpr::Identity(_) => Ok(z.clone()),
            FunctorExpr::TensorBimodule(x) => Ok(tensor_over(z, x)?.module),
            FunctorExpr::Restrict(f) => z.restrict(f),
            FunctorExpr::HomModule(x) => Ok(hom_from_bimodule(x, z)?.module),
            FunctorExpr::Compose(g, h) => g.apply_obj(&h.apply_obj(z)?),
        }
    }

    pub fn apply_mor(&self, h: &ModuleMor<F>) -> Result<ModuleMor<F>> {
        self.check_source(&h.src)?;
        match self {
            FunctorExpr::Identity(_) => Ok(h.clone()),
            FunctorExpr::TensorBimodule(x) => tensor_maps(h, &x.id()),
            FunctorExpr::Restrict(f) => Ok(ModuleMor {
                src: h.src.restrict(f)?,
                dst: h.dst.restrict(f)?,
                map: h.map.clone(),
            }),
            FunctorExpr::HomModule(x) => {
                let from = hom_from_bimodule(x, &h.src)?;
                let to = hom_from_bimodule(x, &h.dst)?;
                hom_post(&from, &to, h)
            }
            FunctorExpr::Compose(g, inner) => g.apply_mor(&inner.apply_mor(h)?),
        }
    }

    /// The strength `t^F_{w,z}: w ⊗ F(z) -> F(w ⊗ z)`.
    pub fn strength(&self, w: Obj, z: &RightModule<F>) -> Result<ModuleMor<F>> {
        self.check_source(z)?;
        match self {
            FunctorExpr::Identity(_) => Ok(z.tensored(w).id()),
            FunctorExpr::TensorBimodule(x) => strength(w, z, x),
            FunctorExpr::Restrict(f) => {
                let m = z.tensored(w).restrict(f)?;
                Ok(m.id())
            }
            FunctorExpr::HomModule(x) => {
                let inner = hom_from_bimodule(x, z)?;
                let outer = hom_from_bimodule(x, &z.tensored(w))?;
                // under the flattening conventions w ⊗ hom(X, z) and hom(X, w ⊗ z) share a basis
                let amb = Mor::identity(w).tensor(&inner.pres.incl);
                let map = induce_into_equalizer(&outer.pres, &amb, "hom strength")?;
                ModuleMor::new_unchecked(inner.module.tensored(w), outer.module, map)
            }
            FunctorExpr::Compose(g, h) => {
                let th = h.strength(w, z)?;
                let tg = g.strength(w, &h.apply_obj(z)?)?;
                g.apply_mor(&th)?.compose(&tg)
            }
        }
    }

    /// Functoriality and strength laws on a sample: `F(g ∘ h) = F(g) ∘ F(h)`,
    /// `F(id) = id`, naturality and unit/associativity of the strength.
    pub fn check_laws(
        &self,
        h: &ModuleMor<F>,
        g: &ModuleMor<F>,
        w: Obj,
        v: Obj,
        lin: &Mor<F>,
    ) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let z = &h.src;
            let fid = self.apply_mor(&z.id())?;
            rep.truth("preserves identities", fid.map.is_identity(), "F(id) is not the identity");
            let lhs = self.apply_mor(&g.compose(h)?)?;
            let rhs = self.apply_mor(g)?.compose(&self.apply_mor(h)?)?;
            rep.equal("preserves composition", &lhs.map, &rhs.map);

            let t_unit = self.strength(Obj::unit(), z)?;
            rep.truth("strength unit", t_unit.map.is_identity(), "t_{I,z} is not the identity");

            let fz = self.apply_obj(z)?;
            let lhs = self.strength(w, &z.tensored(v))?.compose(&ModuleMor {
                src: fz.tensored(v).tensored(w),
                dst: self.apply_obj(&z.tensored(v))?.tensored(w),
                map: Mor::identity(w).tensor(&self.strength(v, z)?.map),
            })?;
            let rhs = self.strength(w.tensor(v), z)?;
            rep.equal("strength associativity", &lhs.map, &rhs.map);

            let lhs = self.apply_mor(&h.tensored(w))?.map.compose(&self.strength(w, z)?.map)?;
            let rhs = self
                .strength(w, &h.dst)?
                .map
                .compose(&Mor::identity(w).tensor(&self.apply_mor(h)?.map))?;
            rep.equal("strength natural in z", &lhs, &rhs);

            // naturality in the cosmos variable: lin: w -> v
            let lin_z = ModuleMor {
                src: z.tensored(w),
                dst: z.tensored(v),
                map: lin.tensor(&Mor::identity(z.carrier)),
            };
            let lhs = self.apply_mor(&lin_z)?.map.compose(&self.strength(w, z)?.map)?;
            let rhs = self
                .strength(v, z)?
                .map
                .compose(&lin.tensor(&Mor::identity(fz.carrier)))?;
            rep.equal("strength natural in w", &lhs, &rhs);
            Ok(())
        })();
        rep.result("functor maps defined", r);
        rep
    }
}

impl<F: Field> FunctorExpr<F> {
    /// `Some(true)` when every leaf is a left adjoint (tensor, restriction,
    /// identity), hence cocontinuous; `None` when a hom leaf makes this undecidable
    /// from the syntax alone.
    pub fn structurally_cocontinuous(&self) -> Option<bool> {
        match self {
            FunctorExpr::Identity(_) | FunctorExpr::TensorBimodule(_) | FunctorExpr::Restrict(_) => Some(true),
            FunctorExpr::HomModule(_) => None,
            FunctorExpr::Compose(g, h) => match (g.structurally_cocontinuous(), h.structurally_cocontinuous()) {
                (Some(true), Some(true)) => Some(true),
                _ => None,
            },
        }
    }
}

type Component<F> = Arc<dyn Fn(&RightModule<F>) -> Result<ModuleMor<F>> + Send + Sync>;

/// A family of module maps `ξ_z: F(z) -> G(z)`, given by a procedure.
#[derive(Clone)]
pub struct NatFamily<F: Field> {
    pub source: FunctorExpr<F>,
    pub target: FunctorExpr<F>,
    component: Component<F>,
}

impl<F: Field> fmt::Debug for NatFamily<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NatFamily({} => {})", self.source, self.target)
    }
}

impl<F: Field> NatFamily<F> {
    pub fn new(
        source: FunctorExpr<F>,
        target: FunctorExpr<F>,
        component: impl Fn(&RightModule<F>) -> Result<ModuleMor<F>> + Send + Sync + 'static,
    ) -> Self {
        NatFamily {
            source,
            target,
            component: Arc::new(component),
        }
    }

    pub fn at(&self, z: &RightModule<F>) -> Result<ModuleMor<F>> {
        (self.component)(z)
    }

    /// Naturality along `h` and compatibility with the strengths at `w`.
    pub fn check(&self, h: &ModuleMor<F>, w: Obj) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let z = &h.src;
            let xi_z = self.at(z)?;
            let lhs = self.target.apply_mor(h)?.compose(&xi_z)?;
            let rhs = self.at(&h.dst)?.compose(&self.source.apply_mor(h)?)?;
            rep.equal("natural", &lhs.map, &rhs.map);
            let lhs = self
                .at(&z.tensored(w))?
                .map
                .compose(&self.source.strength(w, z)?.map)?;
            let rhs = self
                .target
                .strength(w, z)?
                .map
                .compose(&Mor::identity(w).tensor(&xi_z.map))?;
            rep.equal("compatible with strengths", &lhs, &rhs);
            Ok(())
        })();
        rep.result("components defined", r);
        rep
    }
}

/// `λ^F` as a family from `- ⊛_b F(b)` to `F`.
pub fn lambda_family<F: Field>(fun: &FunctorExpr<F>) -> Result<NatFamily<F>> {
    let can = canonical_left_module(fun)?;
    let f2 = fun.clone();
    let c2 = can.clone();
    Ok(NatFamily::new(FunctorExpr::TensorBimodule(can), fun.clone(), move |z| {
        lambda_with(&f2, &c2, z)
    }))
}

/// `γ_z: z ⊗ b_b -> z` as a map of right `b`-modules.
pub fn action_as_module_map<F: Field>(z: &RightModule<F>) -> ModuleMor<F> {
    ModuleMor {
        src: RightModule::regular(&z.over).tensored(z.carrier),
        dst: z.clone(),
        map: z.action.clone(),
    }
}

/// `F(b)` as a `(b, b')`-bimodule with `ρ = F(γ_{b_b}) ∘ t^F_{b, b_b}`.
pub fn canonical_left_module<F: Field>(fun: &FunctorExpr<F>) -> Result<Bimodule<F>> {
    let b = fun.source();
    let reg = RightModule::regular(b);
    let fb = fun.apply_obj(&reg)?;
    let t = fun.strength(b.carrier, &reg)?;
    let rho = fun.apply_mor(&action_as_module_map(&reg))?.map.compose(&t.map)?;
    Ok(Bimodule {
        left: b.clone(),
        right: fb.over.clone(),
        carrier: fb.carrier,
        left_action: rho,
        right_action: fb.action,
    })
}

/// `λ^F_z: z ⊛_b F(b) -> F(z)` with `λ ∘ cq = F(γ_z) ∘ t^F_{z, b_b}`.
pub fn lambda<F: Field>(fun: &FunctorExpr<F>, z: &RightModule<F>) -> Result<ModuleMor<F>> {
    let can = canonical_left_module(fun)?;
    lambda_with(fun, &can, z)
}

pub fn lambda_with<F: Field>(fun: &FunctorExpr<F>, can: &Bimodule<F>, z: &RightModule<F>) -> Result<ModuleMor<F>> {
    let t = tensor_over(z, can)?;
    let reg = RightModule::regular(&z.over);
    let h = fun
        .apply_mor(&action_as_module_map(z))?
        .map
        .compose(&fun.strength(z.carrier, &reg)?.map)?;
    let map = t.epi().factor(&h, "comparison map")?;
    ModuleMor::new_unchecked(t.module, fun.apply_obj(z)?, map)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeSample {
    pub source_dim: usize,
    pub target_dim: usize,
    pub rank: usize,
    pub invertible: bool,
}

/// Whether `λ^F` is invertible on every sample. A single singular `λ_z` proves
/// that `F` is not cocontinuous; all invertible is evidence only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProbeVerdict {
    pub samples: Vec<ProbeSample>,
}

impl ProbeVerdict {
    pub fn all_invertible(&self) -> bool {
        self.samples.iter().all(|s| s.invertible)
    }
}

pub fn cocontinuity_probe<F: Field>(fun: &FunctorExpr<F>, samples: &[RightModule<F>]) -> Result<ProbeVerdict> {
    let can = canonical_left_module(fun)?;
    let mut out = Vec::new();
    for z in samples {
        let l = lambda_with(fun, &can, z)?;
        out.push(ProbeSample {
            source_dim: l.src.dim(),
            target_dim: l.dst.dim(),
            rank: l.map.rank(),
            invertible: l.is_iso(),
        });
    }
    Ok(ProbeVerdict { samples: out })
}

/// For `F = - ⊛ X`: `ι^b_X` is an isomorphism of bimodules from `F(b)` to `X`,
/// and `λ^F` is invertible on the samples.
pub fn ew_roundtrip<F: Field>(x: &Bimodule<F>, samples: &[RightModule<F>]) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let fun = FunctorExpr::TensorBimodule(x.clone());
        let can = canonical_left_module(&fun)?;
        let iota = crate::module_tensor::unit_iso(x)?;
        rep.truth("unit iso invertible", iota.is_iso(), "ι is singular");
        let lhs = iota.map.compose(&can.left_action)?;
        let rhs = x.left_action.compose(&x.left.id().tensor(&iota.map))?;
        rep.equal("unit iso left equivariant", &lhs, &rhs);
        let lhs = iota.map.compose(&can.right_action)?;
        let rhs = x.right_action.compose(&iota.map.tensor(&x.right.id()))?;
        rep.equal("unit iso right equivariant", &lhs, &rhs);
        for (i, z) in samples.iter().enumerate() {
            let l = lambda_with(&fun, &can, z)?;
            rep.truth("lambda invertible", l.is_iso(), format!("λ singular at sample {i}"));
        }
        Ok(())
    })();
    rep.result("round trip maps defined", r);
    rep
}

/// Naturality of `λ` along the transformation `- ⊛ φ` induced by a bimodule map `φ: X -> X'`:
/// `λ^{F'}_z ∘ (z ⊛ ξ_b) = ξ_z ∘ λ^F_z`.
pub fn check_counit_naturality<F: Field>(phi: &BimoduleMor<F>, z: &RightModule<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let fun = FunctorExpr::TensorBimodule(phi.src.clone());
        let fun2 = FunctorExpr::TensorBimodule(phi.dst.clone());
        let can = canonical_left_module(&fun)?;
        let can2 = canonical_left_module(&fun2)?;
        let reg = RightModule::regular(&phi.src.left);
        let xi_b = tensor_maps(&reg.id(), phi)?;
        let xi_b = BimoduleMor {
            src: can.clone(),
            dst: can2.clone(),
            map: xi_b.map,
        };
        rep.truth(
            "component at b is a bimodule map",
            xi_b.check_equivariance().all_passed(),
            "ξ_b not equivariant",
        );
        let lhs = lambda_with(&fun2, &can2, z)?.compose(&tensor_maps(&z.id(), &xi_b)?)?;
        let xi_z = tensor_maps(&z.id(), phi)?;
        let rhs = xi_z.compose(&lambda_with(&fun, &can, z)?)?;
        rep.equal("lambda natural in the functor", &lhs.map, &rhs.map);
        Ok(())
    })();
    rep.result("naturality maps defined", r);
    rep
}

/// `F(h) ∘ λ_z = λ_{z'} ∘ (h ⊛ id)` and `λ_{w⊗z} ∘ a = t^F_{w,z} ∘ (id_w ⊗ λ_z)`.
pub fn check_lambda_naturality<F: Field>(fun: &FunctorExpr<F>, h: &ModuleMor<F>, w: Obj) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let can = canonical_left_module(fun)?;
        let z = &h.src;
        let lz = lambda_with(fun, &can, z)?;
        let lhs = fun.apply_mor(h)?.compose(&lz)?;
        let rhs = lambda_with(fun, &can, &h.dst)?.compose(&tensor_maps(h, &can.id())?)?;
        rep.equal("lambda natural in z", &lhs.map, &rhs.map);

        let a = strength(w, z, &can)?;
        let lhs = lambda_with(fun, &can, &z.tensored(w))?.map.compose(&a.map)?;
        let rhs = fun
            .strength(w, z)?
            .map
            .compose(&Mor::identity(w).tensor(&lz.map))?;
        rep.equal("lambda compatible with strength", &lhs, &rhs);
        Ok(())
    })();
    rep.result("lambda maps defined", r);
    rep
}

/// `k` over the dual numbers, restricted along the augmentation.
pub fn residue_module<F: Field>() -> RightModule<F> {
    let aug = crate::monoids::builtin_morphism::<F>("augmentation_dual_numbers").expect("builtin");
    RightModule::regular(&aug.dst).restrict(&aug).expect("bases match")
}

/// `λ_k` for `Hom_D(k, -)`; this is the zero map between one-dimensional spaces.
pub fn residue_hom_lambda<F: Field>() -> Result<ModuleMor<F>> {
    let k = residue_module::<F>();
    lambda(&FunctorExpr::HomModule(k.as_bimodule()), &k)
}
