//! Day convolution of the functors `- ⊛ X` and `- ⊛ Y` for `(b, b')`-bimodules,
//! computed as `- ⊛ (X ⊛_{b⊗b'} Y)`, with the universal transformation `θ`,
//! the unit object and the factorization of cones through `θ`.

use crate::cosmos::{braiding, curry, induce_into_equalizer, Mor, SplitEpi};
use crate::error::{KernelError, Result};
use crate::field::Field;
use crate::laws::LawReport;
use crate::main_equivalence::{comm_to_functor, CommOverPair};
use crate::module_tensor::{mtensor, mtensor_maps, right_unitor, symmetry, tensor_maps, tensor_over, unit_iso, TensorOver};
use crate::modules::{hom_post, internal_hom, Bimodule, BimoduleMor, ModuleMor, RightModule};
use crate::monoids::{CommMonoid, Coproduct};
use crate::random::split_coproduct_module;

/// A `(b, b')`-bimodule as a right `b ⊗ b'`-module, `x ⊗ β ⊗ β' ↦ (β · x) · β'`.
pub fn as_coproduct_module<F: Field>(x: &Bimodule<F>) -> Result<RightModule<F>> {
    let cop = x.left.coproduct(&x.right);
    let twist = braiding(x.carrier, x.left.carrier).tensor(&x.right.id());
    let action = x
        .right_action
        .compose(&x.left_action.tensor(&x.right.id()))?
        .compose(&twist)?;
    RightModule::new_unchecked(cop.monoid, x.carrier, action)
}

#[derive(Debug, Clone)]
pub struct ConvolutionResult<F: Field> {
    pub left: Bimodule<F>,
    pub right: Bimodule<F>,
    pub coproduct: Coproduct<F>,
    /// `X ⊛_{b⊗b'} Y` with its presentation as a quotient of `X ⊗ Y`.
    pub tensor: TensorOver<F>,
    pub product: Bimodule<F>,
}

pub fn convolve<F: Field>(x: &Bimodule<F>, y: &Bimodule<F>) -> Result<ConvolutionResult<F>> {
    if x.left != y.left || x.right != y.right {
        return Err(KernelError::BaseMismatch("convolution of bimodules".into()));
    }
    let coproduct = x.left.coproduct(&x.right);
    let tensor = mtensor(&as_coproduct_module(x)?, &as_coproduct_module(y)?)?;
    let product = split_coproduct_module(&tensor.module, &x.left, &x.right)?;
    Ok(ConvolutionResult {
        left: x.clone(),
        right: y.clone(),
        coproduct,
        tensor,
        product,
    })
}

impl<F: Field> ConvolutionResult<F> {
    pub fn base(&self) -> (&CommMonoid<F>, &CommMonoid<F>) {
        (&self.left.left, &self.left.right)
    }

    /// The product is a bimodule, and its actions are the ones induced by
    /// `ρ_X ⊗ id` and `id ⊗ γ'_Y`.
    pub fn check(&self) -> LawReport {
        let mut rep = self.product.check_laws();
        let r = (|| -> Result<()> {
            let (b, c) = self.base();
            let (xo, yo) = (self.left.carrier, self.right.carrier);
            let pres = &self.tensor.pres;
            let epi = SplitEpi::identity(b.carrier).tensor(&pres.epi());
            let h = pres.proj.compose(&self.left.left_action.tensor(&Mor::identity(yo)))?;
            let rho = epi.factor(&h, "induced left action")?;
            rep.equal("left action induced from the left factor", &rho, &self.product.left_action);
            let epi = pres.epi().tensor(&SplitEpi::identity(c.carrier));
            let h = pres.proj.compose(&Mor::identity(xo).tensor(&self.right.right_action))?;
            let gamma = epi.factor(&h, "induced right action")?;
            rep.equal("right action induced from the right factor", &gamma, &self.product.right_action);
            Ok(())
        })();
        rep.result("induced actions defined", r);
        rep
    }

    /// `θ_{w,z}: (w ⊛ X) ⊛_{b'} (z ⊛ Y) -> (w ⊛ z) ⊛ (X ⊛_{b⊗b'} Y)`, induced by
    /// `w ⊗ x ⊗ z ⊗ y ↦ (w ⊗ z) ⊗ (x ⊗ y)`.
    pub fn theta(&self, w: &RightModule<F>, z: &RightModule<F>) -> Result<ModuleMor<F>> {
        let (epi, h, src, dst) = self.theta_data(w, z)?;
        let map = epi.factor(&h, "convolution transformation")?;
        ModuleMor::new_unchecked(src, dst, map)
    }

    fn theta_data(
        &self,
        w: &RightModule<F>,
        z: &RightModule<F>,
    ) -> Result<(SplitEpi<F>, Mor<F>, RightModule<F>, RightModule<F>)> {
        let fw = tensor_over(w, &self.left)?;
        let gz = tensor_over(z, &self.right)?;
        let s = mtensor(&fw.module, &gz.module)?;
        let wz = mtensor(w, z)?;
        let tgt = tensor_over(&wz.module, &self.product)?;
        let epi = fw.epi().tensor(&gz.epi()).then(&s.epi())?;
        let shuffle = Mor::identity(w.carrier)
            .tensor(&braiding(self.left.carrier, z.carrier))
            .tensor(&Mor::identity(self.right.carrier));
        let h = tgt
            .pres
            .proj
            .compose(&wz.pres.proj.tensor(&self.tensor.pres.proj))?
            .compose(&shuffle)?;
        Ok((epi, h, s.module, tgt.module))
    }

    /// Defining relation of `θ_{w,z}`, its equivariance, naturality along `h: w -> w'`.
    pub fn check_theta(&self, w: &RightModule<F>, z: &RightModule<F>, h: &ModuleMor<F>) -> LawReport {
        let mut rep = LawReport::new();
        let r = (|| -> Result<()> {
            let (epi, rel, _, _) = self.theta_data(w, z)?;
            let th = self.theta(w, z)?;
            rep.equal("convolution transformation relation", &th.map.compose(&epi.proj)?, &rel);
            rep.extend(th.check_equivariance());
            let th2 = self.theta(&h.dst, z)?;
            let gz = tensor_over(z, &self.right)?.module;
            let fh = tensor_maps(h, &self.left.id())?;
            let lhs = th2.compose(&mtensor_maps(&fh, &gz.id())?)?;
            let rhs = tensor_maps(&mtensor_maps(h, &z.id())?, &self.product.id())?.compose(&th)?;
            rep.equal("convolution transformation natural", &lhs.map, &rhs.map);
            Ok(())
        })();
        rep.result("convolution transformation defined", r);
        rep
    }

    /// `θ_{b,b}` is surjective.
    pub fn theta_unit_rank(&self) -> Result<(usize, usize)> {
        let reg = RightModule::regular(self.base().0);
        let th = self.theta(&reg, &reg)?;
        Ok((th.map.rank(), th.dst.dim()))
    }
}

/// The bimodule `_b (b ⊗ b')_{b'}`.
pub fn unit_bimodule<F: Field>(b: &CommMonoid<F>, b_prime: &CommMonoid<F>) -> Result<Bimodule<F>> {
    let cop = b.coproduct(b_prime);
    Bimodule::from_pair(&cop.left, &cop.right)
}

/// `z ⊛_b (b ⊗ b') -> M_b(b, z) ⊗ b'`, the composite `(γ̄_z ⊗ id) ∘ e` with
/// `e ∘ cq = γ_z ⊗ id` and `γ̄_z` the transpose of the action.
pub fn unit_object_iso<F: Field>(b_prime: &CommMonoid<F>, z: &RightModule<F>) -> Result<ModuleMor<F>> {
    let b = &z.over;
    let u = unit_bimodule(b, b_prime)?;
    let t = tensor_over(z, &u)?;
    let e = t.epi().factor(&z.action.tensor(&b_prime.id()), "unit object projection")?;
    let hom = internal_hom(&RightModule::regular(b), z)?;
    let gamma_bar = induce_into_equalizer(&hom.pres, &curry(&z.action, b.carrier)?, "transposed action")?;
    let map = gamma_bar.tensor(&b_prime.id()).compose(&e)?;
    let dst = RightModule::regular(b_prime).tensored(hom.pres.sub);
    ModuleMor::new(t.module, dst, map)
}

/// Invertibility of the unit object iso and naturality along `h: z -> z'`.
pub fn check_unit_object<F: Field>(b_prime: &CommMonoid<F>, h: &ModuleMor<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let u = unit_bimodule(&h.src.over, b_prime)?;
        let iso = unit_object_iso(b_prime, &h.src)?;
        rep.truth("unit object map invertible", iso.is_iso(), "singular");
        let iso2 = unit_object_iso(b_prime, &h.dst)?;
        let reg = RightModule::regular(&h.src.over);
        let from = internal_hom(&reg, &h.src)?;
        let to = internal_hom(&reg, &h.dst)?;
        let post = hom_post(&from, &to, h)?;
        let lhs = iso2.compose(&tensor_maps(h, &u.id())?)?;
        let rhs = post.map.tensor(&b_prime.id()).compose(&iso.map)?;
        rep.equal("unit object map natural", &lhs.map, &rhs);
        Ok(())
    })();
    rep.result("unit object map defined", r);
    rep
}

/// The result of factoring the cone `α = (id ⊛ ψ₀) ∘ θ` through `θ`.
#[derive(Debug, Clone)]
pub struct Factorization<F: Field> {
    /// The recovered `ψ: X ⊛_{b⊗b'} Y -> Z`.
    pub psi: BimoduleMor<F>,
    pub report: LawReport,
}

/// `α_{w,z} = (id_{w⊛z} ⊛ ψ₀) ∘ θ_{w,z}`.
pub fn cone<F: Field>(r: &ConvolutionResult<F>, psi0: &BimoduleMor<F>, w: &RightModule<F>, z: &RightModule<F>) -> Result<ModuleMor<F>> {
    let wz = mtensor(w, z)?.module;
    tensor_maps(&wz.id(), psi0)?.compose(&r.theta(w, z)?)
}

/// Recovers `ψ` from the component `α_{b,b}` alone: `φ = ι_Z ∘ (ȷ_b ⊛ id) ∘ α_{b,b} ∘ (ι_X^{-1} ⊛ ι_Y^{-1})`
/// and `ψ ∘ cq_{b⊗b'} = φ ∘ cq_{b'}`. Then checks `ψ = ψ₀`, the factorization
/// `(id ⊛ ψ) ∘ θ = α` on the samples and that `θ_{b,b}` is surjective, which makes
/// the factorization unique.
pub fn universal_factorization<F: Field>(
    r: &ConvolutionResult<F>,
    psi0: &BimoduleMor<F>,
    samples: &[(RightModule<F>, RightModule<F>)],
) -> Result<Factorization<F>> {
    if psi0.src != r.product {
        return Err(KernelError::BaseMismatch("cone out of the convolution".into()));
    }
    let mut rep = psi0.check_equivariance();
    let (b, _) = r.base();
    let reg = RightModule::regular(b);
    let alpha = cone(r, psi0, &reg, &reg)?;
    let ix = unit_iso(&r.left)?.inverse("unit iso")?;
    let iy = unit_iso(&r.right)?.inverse("unit iso")?;
    let z = &psi0.dst;
    let post = unit_iso(z)?.compose(&tensor_maps(&right_unitor(&reg)?, &z.id())?)?;
    let phi = post.compose(&alpha)?.compose(&mtensor_maps(&ix, &iy)?)?;
    let cq = mtensor(&r.left.right_module(), &r.right.right_module())?.pres.proj;
    let psi_map = r.tensor.epi().factor(&phi.map.compose(&cq)?, "recovered cone map")?;
    let psi = BimoduleMor::new(r.product.clone(), z.clone(), psi_map)?;
    rep.equal("recovered map equals the planted one", &psi.map, &psi0.map);
    for (w, v) in samples {
        let lhs = tensor_maps(&mtensor(w, v)?.module.id(), &psi)?.compose(&r.theta(w, v)?)?;
        rep.equal("factorization reproduces the cone", &lhs.map, &cone(r, psi0, w, v)?.map);
    }
    let (rank, dim) = r.theta_unit_rank()?;
    rep.truth("convolution transformation at b is surjective", rank == dim, format!("rank {rank} of {dim}"));
    Ok(Factorization { psi, report: rep })
}

/// Whether the linear map `xi` on `(b ⊛ b) ⊛ (X ⊛_{b⊗b'} Y)` factors `α_{b,b}` through `θ_{b,b}`.
pub fn accepts_candidate<F: Field>(r: &ConvolutionResult<F>, psi0: &BimoduleMor<F>, xi: &Mor<F>) -> Result<bool> {
    let reg = RightModule::regular(r.base().0);
    let alpha = cone(r, psi0, &reg, &reg)?;
    Ok(xi.compose(&r.theta(&reg, &reg)?.map)? == alpha.map)
}

/// The candidate `id ⊛ ψ₀` with one entry changed; it must be rejected.
pub fn corrupted_candidate<F: Field>(r: &ConvolutionResult<F>, psi0: &BimoduleMor<F>) -> Result<Mor<F>> {
    let reg = RightModule::regular(r.base().0);
    let bb = mtensor(&reg, &reg)?.module;
    let mut xi = tensor_maps(&bb.id(), psi0)?.map;
    if xi.dst().dim == 0 || xi.src().dim == 0 {
        return Err(KernelError::Invalid("nothing to corrupt in a zero map".into()));
    }
    let v = xi.get(0, 0).plus(&F::one());
    xi.set(0, 0, v);
    Ok(xi)
}

/// For a pair `b -> b~ <- b'`, the binary coherence of `f'_* f*` equals
/// `(id ⊛ m) ∘ θ` for the convolution of `_b b~_{b'}` with itself.
pub fn check_comm_pair<F: Field>(p: &CommOverPair<F>, w: &RightModule<F>, z: &RightModule<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let x = Bimodule::from_pair(&p.f, &p.f_prime)?;
        let conv = convolve(&x, &x)?;
        let m = conv.tensor.epi().factor(&p.total.product, "multiplication on the convolution")?;
        let m = BimoduleMor::new(conv.product.clone(), x.clone(), m)?;
        let wz = mtensor(w, z)?.module;
        let via_theta = tensor_maps(&wz.id(), &m)?.compose(&conv.theta(w, z)?)?;
        let coh = comm_to_functor(p)?.coherence(w, z)?;
        rep.equal("monoid coherence through convolution", &via_theta.map, &coh.map);
        Ok(())
    })();
    rep.result("monoid coherence defined", r);
    rep
}

/// The symmetry over `b ⊗ b'` is an invertible bimodule map `X * Y -> Y * X`.
pub fn check_symmetry<F: Field>(x: &Bimodule<F>, y: &Bimodule<F>) -> LawReport {
    let mut rep = LawReport::new();
    let r = (|| -> Result<()> {
        let xy = convolve(x, y)?;
        let yx = convolve(y, x)?;
        let s = symmetry(&xy.tensor.left, &yx.tensor.left)?;
        let s = BimoduleMor::new(xy.product.clone(), yx.product.clone(), s.map)?;
        rep.truth("convolution symmetry invertible", s.map.inverse().is_some(), "singular");
        let back = symmetry(&yx.tensor.left, &xy.tensor.left)?;
        rep.truth("convolution symmetry involutive", back.map.compose(&s.map)?.is_identity(), "s ∘ s ≠ id");
        Ok(())
    })();
    rep.result("convolution symmetry defined", r);
    rep
}

/// `dim (X ⊛_{b⊗b'} Y)` computed as `X ⊛_{b'} Y` followed by the quotient by the
/// `b`-balancing relations.
pub fn iterated_dimension<F: Field>(x: &Bimodule<F>, y: &Bimodule<F>) -> Result<usize> {
    let first = mtensor(&x.right_module(), &y.right_module())?;
    let b = x.left.carrier;
    let moved = x
        .left_action
        .compose(&braiding(x.carrier, b))?
        .tensor(&Mor::identity(y.carrier));
    let kept = Mor::identity(x.carrier).tensor(&y.left_action);
    let rel = first.pres.proj.compose(&moved.sub(&kept)?)?;
    Ok(first.pres.quot.dim - rel.rank())
}
