//! The cosmos of finite-dimensional vector spaces: objects are dimensions,
//! morphisms are matrices, the tensor is the Kronecker product.
//!
//! Basis conventions. A morphism `x -> y` is a `dim y x dim x` matrix. The
//! basis of `x ⊗ y` is `(i, j) ↦ i * dim y + j`, which makes associators and
//! unitors identity matrices. `hom(x, y)` has dimension `dim x * dim y` and
//! stores a matrix `φ: x -> y` row-major, so entry `(i, j)` sits at index
//! `i * dim x + j`.

use std::fmt;

use crate::error::{dim_check, KernelError, Result};
use crate::field::Field;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Obj {
    pub dim: usize,
}

impl Obj {
    pub const fn new(dim: usize) -> Self {
        Obj { dim }
    }

    pub const fn unit() -> Self {
        Obj { dim: 1 }
    }

    pub fn tensor(self, other: Obj) -> Obj {
        Obj::new(self.dim * other.dim)
    }

    pub fn hom(self, other: Obj) -> Obj {
        Obj::new(self.dim * other.dim)
    }
}

/// A linear map `src -> dst`, stored row-major as a `dst x src` matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mor<F> {
    src: usize,
    dst: usize,
    data: Vec<F>,
}

impl<F: Field> fmt::Debug for Mor<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mor {} -> {} [", self.src, self.dst)?;
        for r in 0..self.dst {
            let row: Vec<String> = (0..self.src).map(|c| self.get(r, c).render()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl<F: Field> Mor<F> {
    pub fn zero(src: Obj, dst: Obj) -> Self {
        Mor {
            src: src.dim,
            dst: dst.dim,
            data: vec![F::zero(); src.dim * dst.dim],
        }
    }

    pub fn identity(x: Obj) -> Self {
        let mut m = Self::zero(x, x);
        for i in 0..x.dim {
            m.data[i * x.dim + i] = F::one();
        }
        m
    }

    pub fn from_fn(src: Obj, dst: Obj, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(src.dim * dst.dim);
        for r in 0..dst.dim {
            for c in 0..src.dim {
                data.push(f(r, c));
            }
        }
        Mor {
            src: src.dim,
            dst: dst.dim,
            data,
        }
    }

    pub fn from_rows(src: Obj, dst: Obj, rows: Vec<Vec<F>>) -> Result<Self> {
        dim_check("from_rows (row count)", rows.len(), dst.dim)?;
        let mut data = Vec::with_capacity(src.dim * dst.dim);
        for row in rows {
            dim_check("from_rows (row length)", row.len(), src.dim)?;
            data.extend(row);
        }
        Ok(Mor {
            src: src.dim,
            dst: dst.dim,
            data,
        })
    }

    /// Convenience constructor from small integers.
    pub fn from_i64(src: Obj, dst: Obj, rows: &[&[i64]]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
            .collect();
        Self::from_rows(src, dst, rows)
    }

    pub fn src(&self) -> Obj {
        Obj::new(self.src)
    }

    pub fn dst(&self) -> Obj {
        Obj::new(self.dst)
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.src + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.src + c] = v;
    }

    pub fn rows(&self) -> Vec<Vec<F>> {
        (0..self.dst)
            .map(|r| (0..self.src).map(|c| self.get(r, c).clone()).collect())
            .collect()
    }

    pub fn column(&self, c: usize) -> Vec<F> {
        (0..self.dst).map(|r| self.get(r, c).clone()).collect()
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &Mor<F>) -> Result<Mor<F>> {
        dim_check("compose", self.src, inner.dst)?;
        let mut out: Mor<F> = Mor::zero(inner.src(), self.dst());
        for r in 0..self.dst {
            for k in 0..self.src {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..inner.src {
                    let b = inner.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * inner.src + c;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product, the tensor of morphisms.
    pub fn tensor(&self, other: &Mor<F>) -> Mor<F> {
        let src = self.src * other.src;
        let dst = self.dst * other.dst;
        let mut out = Mor::zero(Obj::new(src), Obj::new(dst));
        for r1 in 0..self.dst {
            for c1 in 0..self.src {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.dst {
                    for c2 in 0..other.src {
                        let b = other.get(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        let r = r1 * other.dst + r2;
                        let c = c1 * other.src + c2;
                        out.data[r * src + c] = a.times(b);
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mor<F>) -> Result<Mor<F>> {
        self.same_shape("add", other)?;
        Ok(Mor {
            src: self.src,
            dst: self.dst,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn sub(&self, other: &Mor<F>) -> Result<Mor<F>> {
        self.same_shape("sub", other)?;
        Ok(Mor {
            src: self.src,
            dst: self.dst,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    pub fn scale(&self, s: &F) -> Mor<F> {
        Mor {
            src: self.src,
            dst: self.dst,
            data: self.data.iter().map(|a| a.times(s)).collect(),
        }
    }

    pub fn transpose(&self) -> Mor<F> {
        Mor::from_fn(self.dst(), self.src(), |r, c| self.get(c, r).clone())
    }

    fn same_shape(&self, op: &'static str, other: &Mor<F>) -> Result<()> {
        dim_check(op, self.src, other.src)?;
        dim_check(op, self.dst, other.dst)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|a| a.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst && *self == Mor::identity(self.src())
    }

    /// First entry where two same-shaped matrices differ.
    pub fn first_difference(&self, other: &Mor<F>) -> Option<(usize, usize)> {
        if self.src != other.src || self.dst != other.dst {
            return Some((usize::MAX, usize::MAX));
        }
        self.data
            .iter()
            .zip(&other.data)
            .position(|(a, b)| a != b)
            .map(|i| (i / self.src.max(1), i % self.src.max(1)))
    }

    /// Errors with a located witness unless `self == other`.
    pub fn expect_eq(&self, other: &Mor<F>, context: &str) -> Result<()> {
        match self.first_difference(other) {
            None => Ok(()),
            Some((row, col)) => Err(KernelError::LawViolation {
                context: context.to_string(),
                row,
                col,
            }),
        }
    }

    pub fn rank(&self) -> usize {
        rref(self).1.len()
    }

    pub fn inverse(&self) -> Option<Mor<F>> {
        if self.src != self.dst {
            return None;
        }
        let n = self.src;
        let aug = Mor::from_fn(Obj::new(2 * n), self.dst(), |r, c| {
            if c < n {
                self.get(r, c).clone()
            } else if c - n == r {
                F::one()
            } else {
                F::zero()
            }
        });
        let (red, pivots) = rref(&aug);
        if pivots.len() < n || pivots[..n].iter().enumerate().any(|(i, &p)| p != i) {
            return None;
        }
        Some(Mor::from_fn(self.src(), self.dst(), |r, c| red.get(r, n + c).clone()))
    }

    pub fn try_inverse(&self, what: &str) -> Result<Mor<F>> {
        self.inverse()
            .ok_or_else(|| KernelError::NotInvertible(what.to_string()))
    }

    /// Rows of string scalars, as used in JSON.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.dst)
            .map(|r| (0..self.src).map(|c| self.get(r, c).render()).collect())
            .collect()
    }
}

/// Reduced row echelon form with pivots chosen as the first nonzero entry,
/// scanning columns left to right. Returns the reduced matrix and the pivot columns.
pub fn rref<F: Field>(m: &Mor<F>) -> (Mor<F>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (m.dst, m.src);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                a.data.swap(p * cols + k, r * cols + k);
            }
        }
        let inv = a.get(r, c).inverse().expect("pivot is nonzero");
        for k in c..cols {
            let v = a.get(r, k).times(&inv);
            a.set(r, k, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if factor.is_zero() {
                continue;
            }
            for k in c..cols {
                let sub = a.get(r, k);
                if sub.is_zero() {
                    continue;
                }
                let v = a.get(i, k).minus(&factor.times(sub));
                a.set(i, k, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

/// Basis of the null space as the columns of a `src x nullity` matrix.
/// Basis vector `t` is 1 on the `t`-th free column and 0 on the other free columns.
pub fn kernel<F: Field>(m: &Mor<F>) -> (Mor<F>, Vec<usize>) {
    let (red, pivots) = rref(m);
    let free: Vec<usize> = (0..m.src).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Mor::zero(Obj::new(free.len()), m.src());
    for (t, &fc) in free.iter().enumerate() {
        basis.set(fc, t, F::one());
        for (row, &pc) in pivots.iter().enumerate() {
            basis.set(pc, t, red.get(row, fc).negate());
        }
    }
    (basis, free)
}

pub fn tensor_obj(x: Obj, y: Obj) -> Obj {
    x.tensor(y)
}

pub fn unit_obj() -> Obj {
    Obj::unit()
}

pub fn hom_obj(x: Obj, y: Obj) -> Obj {
    x.hom(y)
}

/// The symmetry `x ⊗ y -> y ⊗ x`.
pub fn braiding<F: Field>(x: Obj, y: Obj) -> Mor<F> {
    let n = x.dim * y.dim;
    let mut m = Mor::zero(Obj::new(n), Obj::new(n));
    for i in 0..x.dim {
        for j in 0..y.dim {
            m.set(j * x.dim + i, i * y.dim + j, F::one());
        }
    }
    m
}

/// The associator `(x ⊗ y) ⊗ z -> x ⊗ (y ⊗ z)`; an identity under our basis convention.
pub fn associator<F: Field>(x: Obj, y: Obj, z: Obj) -> Mor<F> {
    Mor::identity(Obj::new(x.dim * y.dim * z.dim))
}

/// `I ⊗ x -> x`.
pub fn left_unitor<F: Field>(x: Obj) -> Mor<F> {
    Mor::identity(x)
}

/// `x ⊗ I -> x`.
pub fn right_unitor<F: Field>(x: Obj) -> Mor<F> {
    Mor::identity(x)
}

/// `f: z ⊗ x -> y` becomes `z -> hom(x, y)`.
pub fn curry<F: Field>(f: &Mor<F>, x: Obj) -> Result<Mor<F>> {
    if x.dim == 0 {
        return Err(KernelError::Invalid("curry over a zero object is ambiguous".into()));
    }
    if f.src % x.dim != 0 {
        return Err(KernelError::DimensionMismatch {
            op: "curry",
            left: f.src,
            right: x.dim,
        });
    }
    let z = Obj::new(f.src / x.dim);
    let dx = x.dim;
    Ok(Mor::from_fn(z, Obj::new(f.dst * dx), |row, l| {
        let (i, j) = (row / dx, row % dx);
        f.get(i, l * dx + j).clone()
    }))
}

/// Inverse of [`curry`]: `g: z -> hom(x, y)` becomes `z ⊗ x -> y`.
pub fn uncurry<F: Field>(g: &Mor<F>, x: Obj, y: Obj) -> Result<Mor<F>> {
    dim_check("uncurry", g.dst, x.dim * y.dim)?;
    let dx = x.dim;
    Ok(Mor::from_fn(Obj::new(g.src * dx), y, |i, col| {
        let (l, j) = (col / dx, col % dx);
        g.get(i * dx + j, l).clone()
    }))
}

/// Evaluation `hom(x, y) ⊗ x -> y`.
pub fn ev<F: Field>(x: Obj, y: Obj) -> Mor<F> {
    uncurry(&Mor::identity(hom_obj(x, y)), x, y).expect("shapes agree")
}

/// Coevaluation `z -> hom(x, z ⊗ x)`.
pub fn cv<F: Field>(z: Obj, x: Obj) -> Mor<F> {
    if x.dim == 0 {
        return Mor::zero(z, Obj::new(0));
    }
    curry(&Mor::identity(z.tensor(x)), x).expect("shapes agree")
}

/// `hom(f, g): hom(x, y) -> hom(x', y')`, `φ ↦ g ∘ φ ∘ f` for `f: x' -> x`, `g: y -> y'`.
pub fn hom_map<F: Field>(f: &Mor<F>, g: &Mor<F>) -> Mor<F> {
    g.tensor(&f.transpose())
}

/// Coequalizer of a parallel pair, with a chosen section of the projection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeqPresentation<F: Field> {
    pub quot: Obj,
    pub proj: Mor<F>,
    pub section: Mor<F>,
}

/// Equalizer of a parallel pair, with a chosen retraction of the inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqPresentation<F: Field> {
    pub sub: Obj,
    pub incl: Mor<F>,
    pub retr: Mor<F>,
}

/// Quotient of `target` by the span of the columns of `rel`.
///
/// The image is row-reduced; the non-pivot standard coordinates index the
/// quotient and the section is their inclusion.
pub fn cokernel<F: Field>(rel: &Mor<F>) -> CoeqPresentation<F> {
    let n = rel.dst;
    let (red, pivots) = rref(&rel.transpose());
    let complement: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let quot = Obj::new(complement.len());
    let mut proj = Mor::zero(rel.dst(), quot);
    let mut section = Mor::zero(quot, rel.dst());
    for (qi, &c) in complement.iter().enumerate() {
        proj.set(qi, c, F::one());
        section.set(c, qi, F::one());
        for (row, &p) in pivots.iter().enumerate() {
            let v = red.get(row, c);
            if !v.is_zero() {
                proj.set(qi, p, v.negate());
            }
        }
    }
    CoeqPresentation {
        quot,
        proj,
        section,
    }
}

pub fn coequalizer<F: Field>(f: &Mor<F>, g: &Mor<F>) -> Result<CoeqPresentation<F>> {
    Ok(cokernel(&f.sub(g)?))
}

pub fn equalizer<F: Field>(f: &Mor<F>, g: &Mor<F>) -> Result<EqPresentation<F>> {
    let d = f.sub(g)?;
    let (incl, free) = kernel(&d);
    let sub = Obj::new(free.len());
    let mut retr = Mor::zero(d.src(), sub);
    for (t, &fc) in free.iter().enumerate() {
        retr.set(t, fc, F::one());
    }
    Ok(EqPresentation { sub, incl, retr })
}

impl<F: Field> CoeqPresentation<F> {
    /// The unique `ĥ` with `ĥ ∘ proj = h`, provided `h` coequalizes the pair.
    pub fn induce(&self, h: &Mor<F>, context: &str) -> Result<Mor<F>> {
        self.epi().factor(h, context)
    }

    pub fn epi(&self) -> SplitEpi<F> {
        SplitEpi {
            proj: self.proj.clone(),
            section: self.section.clone(),
        }
    }
}

/// Lifts `h: w -> dst(f)` through the equalizer when `f ∘ h = g ∘ h`.
pub fn induce_into_equalizer<F: Field>(
    e: &EqPresentation<F>,
    h: &Mor<F>,
    context: &str,
) -> Result<Mor<F>> {
    let lifted = e.retr.compose(h)?;
    let back = e.incl.compose(&lifted)?;
    match back.first_difference(h) {
        None => Ok(lifted),
        Some((row, col)) => Err(KernelError::NotFactorizable {
            context: context.to_string(),
            row,
            col,
        }),
    }
}

/// An epimorphism with a chosen section. Every map out of its domain that is
/// constant on fibres factors uniquely through it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitEpi<F: Field> {
    pub proj: Mor<F>,
    pub section: Mor<F>,
}

impl<F: Field> SplitEpi<F> {
    pub fn identity(x: Obj) -> Self {
        SplitEpi {
            proj: Mor::identity(x),
            section: Mor::identity(x),
        }
    }

    /// From an invertible map.
    pub fn iso(m: &Mor<F>) -> Result<Self> {
        Ok(SplitEpi {
            proj: m.clone(),
            section: m.try_inverse("split epi from iso")?,
        })
    }

    pub fn tensor(&self, other: &SplitEpi<F>) -> SplitEpi<F> {
        SplitEpi {
            proj: self.proj.tensor(&other.proj),
            section: self.section.tensor(&other.section),
        }
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &SplitEpi<F>) -> Result<SplitEpi<F>> {
        Ok(SplitEpi {
            proj: next.proj.compose(&self.proj)?,
            section: self.section.compose(&next.section)?,
        })
    }

    /// The unique `ĥ` with `ĥ ∘ proj = h`.
    pub fn factor(&self, h: &Mor<F>, context: &str) -> Result<Mor<F>> {
        let candidate = h.compose(&self.section)?;
        let back = candidate.compose(&self.proj)?;
        match back.first_difference(h) {
            None => Ok(candidate),
            Some((row, col)) => Err(KernelError::NotFactorizable {
                context: context.to_string(),
                row,
                col,
            }),
        }
    }
}

/// Structural cosmos laws at a triple of objects, returned as named equalities.
pub fn cosmos_law_checks<F: Field>(x: Obj, y: Obj, z: Obj, w: Obj) -> Vec<(String, bool)> {
    let mut out = Vec::new();
    let id = Mor::<F>::identity;
    let a = associator::<F>;
    // pentagon
    let lhs = a(x, y, z.tensor(w)).compose(&a(x.tensor(y), z, w)).unwrap();
    let rhs = id(x)
        .tensor(&a(y, z, w))
        .compose(&a(x, y.tensor(z), w))
        .unwrap()
        .compose(&a(x, y, z).tensor(&id(w)))
        .unwrap();
    out.push(("pentagon".into(), lhs == rhs));
    // triangle: (id ⊗ λ) ∘ α = ρ ⊗ id on (x ⊗ I) ⊗ y
    let i = Obj::unit();
    let lhs = id(x).tensor(&left_unitor(y)).compose(&a(x, i, y)).unwrap();
    let rhs = right_unitor::<F>(x).tensor(&id(y));
    out.push(("triangle".into(), lhs == rhs));
    // hexagon
    let s = braiding::<F>;
    let lhs = a(y, z, x)
        .compose(&s(x, y.tensor(z)))
        .unwrap()
        .compose(&a(x, y, z))
        .unwrap();
    let rhs = id(y)
        .tensor(&s(x, z))
        .compose(&a(y, x, z))
        .unwrap()
        .compose(&s(x, y).tensor(&id(z)))
        .unwrap();
    out.push(("hexagon".into(), lhs == rhs));
    // symmetry
    out.push((
        "symmetry".into(),
        s(y, x).compose(&s(x, y)).unwrap().is_identity(),
    ));
    out
}

/// `(g ∘ f) ⊗ (g' ∘ f') = (g ⊗ g') ∘ (f ⊗ f')` and `id ⊗ id = id`.
pub fn tensor_functoriality<F: Field>(f: &Mor<F>, g: &Mor<F>, f2: &Mor<F>, g2: &Mor<F>) -> Result<bool> {
    let lhs = g.compose(f)?.tensor(&g2.compose(f2)?);
    let rhs = g.tensor(g2).compose(&f.tensor(f2))?;
    let ids = Mor::<F>::identity(f.src()).tensor(&Mor::identity(f2.src())).is_identity();
    Ok(lhs == rhs && ids)
}

/// Closed structure at `f: z ⊗ x -> y`: curry/uncurry round trips and the
/// triangle identities of `- ⊗ x ⊣ hom(x, -)`.
pub fn closed_law_checks<F: Field>(f: &Mor<F>, x: Obj) -> Result<Vec<(String, bool)>> {
    let y = f.dst();
    let g = curry(f, x)?;
    let z = g.src();
    let mut out = Vec::new();
    out.push(("uncurry after curry".into(), uncurry(&g, x, y)? == *f));
    out.push(("curry after uncurry".into(), curry(&uncurry(&g, x, y)?, x)? == g));
    let lhs = ev::<F>(x, z.tensor(x)).compose(&cv::<F>(z, x).tensor(&Mor::identity(x)))?;
    out.push(("left triangle".into(), lhs.is_identity()));
    let h = hom_obj(x, y);
    let lhs = hom_map(&Mor::identity(x), &ev::<F>(x, y)).compose(&cv::<F>(h, x))?;
    out.push(("right triangle".into(), lhs.is_identity()));
    let through = ev::<F>(x, y).compose(&g.tensor(&Mor::identity(x)))?;
    out.push(("evaluation recovers the map".into(), through == *f));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    fn m(src: usize, dst: usize, rows: &[&[i64]]) -> Mor<Q> {
        Mor::from_i64(Obj::new(src), Obj::new(dst), rows).unwrap()
    }

    #[test]
    fn compose_and_tensor_shapes() {
        let a = m(2, 1, &[&[1, 2]]);
        let b = m(1, 2, &[&[3], &[4]]);
        assert_eq!(a.compose(&b).unwrap(), m(1, 1, &[&[11]]));
        assert!(b.compose(&b).is_err());
        let t = a.tensor(&b);
        assert_eq!((t.src().dim, t.dst().dim), (2, 2));
        assert_eq!(t, m(2, 2, &[&[3, 6], &[4, 8]]));
    }

    #[test]
    fn braiding_on_basis() {
        let s: Mor<Q> = braiding(Obj::new(2), Obj::new(3));
        // e_(1,2) = e_5 goes to e_(2,1) = e_5 in 3x2 indexing
        assert!(s.get(2 * 2 + 1, 3 + 2).is_one());
        assert!(s.compose(&braiding(Obj::new(3), Obj::new(2))).unwrap().is_identity());
    }

    #[test]
    fn curry_round_trip_and_evaluation() {
        let x = Obj::new(2);
        let y = Obj::new(3);
        let z = Obj::new(2);
        let f = Mor::<Q>::from_fn(z.tensor(x), y, |r, c| Q::from_i64((r * 7 + c * 3) as i64 % 5 - 2));
        let g = curry(&f, x).unwrap();
        assert_eq!(uncurry(&g, x, y).unwrap(), f);
        // ev ∘ (curry f ⊗ id) = f
        let lhs = ev::<Q>(x, y).compose(&g.tensor(&Mor::identity(x))).unwrap();
        assert_eq!(lhs, f);
    }

    #[test]
    fn cokernel_projection_and_section() {
        let rel = m(1, 3, &[&[1], &[2], &[0]]);
        let c = cokernel(&rel);
        assert_eq!(c.quot.dim, 2);
        assert!(c.proj.compose(&c.section).unwrap().is_identity());
        assert!(c.proj.compose(&rel).unwrap().is_zero());
    }

    #[test]
    fn equalizer_of_pair() {
        let f = m(3, 1, &[&[1, 1, 0]]);
        let g = m(3, 1, &[&[0, 0, 0]]);
        let e = equalizer(&f, &g).unwrap();
        assert_eq!(e.sub.dim, 2);
        assert!(f.compose(&e.incl).unwrap().is_zero());
        assert!(e.retr.compose(&e.incl).unwrap().is_identity());
    }

    #[test]
    fn inverse_over_prime_field() {
        type F = Fp<5>;
        let a = Mor::<F>::from_i64(Obj::new(2), Obj::new(2), &[&[1, 2], &[3, 4]]).unwrap();
        let inv = a.inverse().unwrap();
        assert!(a.compose(&inv).unwrap().is_identity());
        let singular = Mor::<F>::from_i64(Obj::new(2), Obj::new(2), &[&[1, 2], &[2, 4]]).unwrap();
        assert!(singular.inverse().is_none());
    }

    #[test]
    fn factor_rejects_non_coequalizing() {
        let rel = m(1, 2, &[&[1], &[-1]]);
        let c = cokernel(&rel);
        assert!(c.induce(&m(2, 1, &[&[1, 1]]), "ok").is_ok());
        let err = c.induce(&m(2, 1, &[&[1, 0]]), "bad").unwrap_err();
        assert!(matches!(err, KernelError::NotFactorizable { .. }));
    }

    #[test]
    fn structural_laws_hold() {
        for (name, ok) in cosmos_law_checks::<Q>(Obj::new(2), Obj::new(1), Obj::new(3), Obj::new(2)) {
            assert!(ok, "{name}");
        }
    }
}
