//! Commutative monoids (commutative algebras) in the cosmos, their maps and coproducts.

use crate::cosmos::{braiding, Mor, Obj};
use crate::error::{dim_check, KernelError, Result};
use crate::field::Field;
use crate::laws::LawReport;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommMonoid<F: Field> {
    pub carrier: Obj,
    pub unit: Mor<F>,
    pub product: Mor<F>,
}

impl<F: Field> CommMonoid<F> {
    /// Builds a monoid after checking shapes and all four laws.
    pub fn new(carrier: Obj, unit: Mor<F>, product: Mor<F>) -> Result<Self> {
        let b = Self::new_unchecked(carrier, unit, product)?;
        b.check_laws().into_result("commutative monoid")?;
        Ok(b)
    }

    /// Checks shapes only.
    pub fn new_unchecked(carrier: Obj, unit: Mor<F>, product: Mor<F>) -> Result<Self> {
        dim_check("monoid unit source", unit.src().dim, 1)?;
        dim_check("monoid unit target", unit.dst().dim, carrier.dim)?;
        dim_check("monoid product source", product.src().dim, carrier.dim * carrier.dim)?;
        dim_check("monoid product target", product.dst().dim, carrier.dim)?;
        Ok(CommMonoid {
            carrier,
            unit,
            product,
        })
    }

    /// From a multiplication table on basis vectors: `table(i, j)` are the coordinates of `e_i e_j`.
    pub fn from_table(unit: &[i64], table: impl Fn(usize, usize) -> Vec<i64>) -> Result<Self> {
        let n = unit.len();
        let carrier = Obj::new(n);
        let unit = Mor::from_fn(Obj::unit(), carrier, |r, _| F::from_i64(unit[r]));
        let mut product = Mor::zero(carrier.tensor(carrier), carrier);
        for i in 0..n {
            for j in 0..n {
                let v = table(i, j);
                dim_check("multiplication table", v.len(), n)?;
                for (r, c) in v.into_iter().enumerate() {
                    product.set(r, i * n + j, F::from_i64(c));
                }
            }
        }
        Self::new(carrier, unit, product)
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn id(&self) -> Mor<F> {
        Mor::identity(self.carrier)
    }

    pub fn check_laws(&self) -> LawReport {
        let mut rep = LawReport::new();
        let id = self.id();
        let m = &self.product;
        let assoc_l = m.compose(&m.tensor(&id)).expect("shapes");
        let assoc_r = m.compose(&id.tensor(m)).expect("shapes");
        rep.equal("associativity", &assoc_l, &assoc_r);
        rep.equal("left unit", &m.compose(&self.unit.tensor(&id)).expect("shapes"), &id);
        rep.equal("right unit", &m.compose(&id.tensor(&self.unit)).expect("shapes"), &id);
        rep.equal(
            "commutativity",
            &m.compose(&braiding(self.carrier, self.carrier)).expect("shapes"),
            m,
        );
        rep
    }

    /// The product of basis elements `e_i e_j` as a column.
    pub fn basis_product(&self, i: usize, j: usize) -> Vec<F> {
        self.product.column(i * self.dim() + j)
    }

    /// `b ⊗ b'` with the factorwise product.
    pub fn coproduct(&self, other: &CommMonoid<F>) -> Coproduct<F> {
        let (b, c) = (self.carrier, other.carrier);
        let s = braiding::<F>(c, b);
        let shuffle = Mor::identity(b).tensor(&s).tensor(&Mor::identity(c));
        let product = self
            .product
            .tensor(&other.product)
            .compose(&shuffle)
            .expect("shapes");
        let monoid = CommMonoid {
            carrier: b.tensor(c),
            unit: self.unit.tensor(&other.unit),
            product,
        };
        let left = MonoidMor {
            src: self.clone(),
            dst: monoid.clone(),
            map: Mor::identity(b).tensor(&other.unit),
        };
        let right = MonoidMor {
            src: other.clone(),
            dst: monoid.clone(),
            map: self.unit.tensor(&Mor::identity(c)),
        };
        Coproduct {
            monoid,
            left,
            right,
        }
    }
}

/// The coproduct `b ⊗ b'` with its two coprojections.
#[derive(Debug, Clone)]
pub struct Coproduct<F: Field> {
    pub monoid: CommMonoid<F>,
    pub left: MonoidMor<F>,
    pub right: MonoidMor<F>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonoidMor<F: Field> {
    pub src: CommMonoid<F>,
    pub dst: CommMonoid<F>,
    pub map: Mor<F>,
}

impl<F: Field> MonoidMor<F> {
    pub fn new(src: CommMonoid<F>, dst: CommMonoid<F>, map: Mor<F>) -> Result<Self> {
        dim_check("monoid map source", map.src().dim, src.dim())?;
        dim_check("monoid map target", map.dst().dim, dst.dim())?;
        let f = MonoidMor { src, dst, map };
        f.check_laws().into_result("monoid map")?;
        Ok(f)
    }

    pub fn identity(b: &CommMonoid<F>) -> Self {
        MonoidMor {
            src: b.clone(),
            dst: b.clone(),
            map: b.id(),
        }
    }

    /// The unit map from the ground monoid.
    pub fn unit_of(b: &CommMonoid<F>) -> Self {
        MonoidMor {
            src: ground(),
            dst: b.clone(),
            map: b.unit.clone(),
        }
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &MonoidMor<F>) -> Result<MonoidMor<F>> {
        if inner.dst != self.src {
            return Err(KernelError::BaseMismatch("monoid map composition".into()));
        }
        Ok(MonoidMor {
            src: inner.src.clone(),
            dst: self.dst.clone(),
            map: self.map.compose(&inner.map)?,
        })
    }

    pub fn check_laws(&self) -> LawReport {
        let mut rep = LawReport::new();
        let f = &self.map;
        rep.equal("preserves unit", &f.compose(&self.src.unit).expect("shapes"), &self.dst.unit);
        let lhs = f.compose(&self.src.product).expect("shapes");
        let rhs = self.dst.product.compose(&f.tensor(f)).expect("shapes");
        rep.equal("preserves product", &lhs, &rhs);
        rep
    }

    pub fn is_iso(&self) -> bool {
        self.map.inverse().is_some()
    }
}

pub fn ground<F: Field>() -> CommMonoid<F> {
    CommMonoid {
        carrier: Obj::unit(),
        unit: Mor::identity(Obj::unit()),
        product: Mor::identity(Obj::unit()),
    }
}

/// `k[t]/t²` on the basis `1, t`.
pub fn dual_numbers<F: Field>() -> CommMonoid<F> {
    truncated_polynomial(2)
}

/// `k[t]/t³` on the basis `1, t, t²`.
pub fn t_cubed<F: Field>() -> CommMonoid<F> {
    truncated_polynomial(3)
}

fn truncated_polynomial<F: Field>(n: usize) -> CommMonoid<F> {
    let mut unit = vec![0; n];
    unit[0] = 1;
    CommMonoid::from_table(&unit, |i, j| {
        let mut v = vec![0; n];
        if i + j < n {
            v[i + j] = 1;
        }
        v
    })
    .expect("truncated polynomial ring is a commutative monoid")
}

/// `k × k` on its two idempotents.
pub fn split_pair<F: Field>() -> CommMonoid<F> {
    CommMonoid::from_table(&[1, 1], |i, j| {
        let mut v = vec![0, 0];
        if i == j {
            v[i] = 1;
        }
        v
    })
    .expect("k x k is a commutative monoid")
}

/// `k[s]/(s² - 1)` on the basis `1, s`.
pub fn z2_group_algebra<F: Field>() -> CommMonoid<F> {
    CommMonoid::from_table(&[1, 0], |i, j| {
        let mut v = vec![0, 0];
        v[(i + j) % 2] = 1;
        v
    })
    .expect("group algebra is a commutative monoid")
}

pub const BUILTIN_ALGEBRAS: [&str; 5] = ["ground", "dual_numbers", "split_pair", "z2_group_algebra", "t_cubed"];

pub fn builtin<F: Field>(name: &str) -> Result<CommMonoid<F>> {
    match name {
        "ground" | "k" => Ok(ground()),
        "dual_numbers" | "D" => Ok(dual_numbers()),
        "split_pair" => Ok(split_pair()),
        "z2_group_algebra" => Ok(z2_group_algebra()),
        "t_cubed" => Ok(t_cubed()),
        other => Err(KernelError::Unknown(other.to_string())),
    }
}

fn named_map<F: Field>(src: &str, dst: &str, rows: &[&[i64]]) -> MonoidMor<F> {
    let s = builtin::<F>(src).expect("builtin");
    let d = builtin::<F>(dst).expect("builtin");
    let map = Mor::from_i64(s.carrier, d.carrier, rows).expect("shape");
    MonoidMor::new(s, d, map).expect("builtin monoid map")
}

/// Named maps between builtin algebras: units, identities, augmentations and a few others.
pub fn builtin_morphisms<F: Field>() -> Vec<(String, MonoidMor<F>)> {
    let mut out = Vec::new();
    for name in BUILTIN_ALGEBRAS {
        let b = builtin::<F>(name).expect("builtin");
        if name != "ground" {
            out.push((format!("unit_{name}"), MonoidMor::unit_of(&b)));
        }
        out.push((format!("id_{name}"), MonoidMor::identity(&b)));
    }
    out.push(("augmentation_dual_numbers".into(), named_map("dual_numbers", "ground", &[&[1, 0]])));
    out.push(("augmentation_t_cubed".into(), named_map("t_cubed", "ground", &[&[1, 0, 0]])));
    out.push(("first_projection".into(), named_map("split_pair", "ground", &[&[1, 0]])));
    out.push(("second_projection".into(), named_map("split_pair", "ground", &[&[0, 1]])));
    out.push(("z2_trivial".into(), named_map("z2_group_algebra", "ground", &[&[1, 1]])));
    out.push(("z2_sign".into(), named_map("z2_group_algebra", "ground", &[&[1, -1]])));
    out.push((
        "dual_scale2".into(),
        named_map("dual_numbers", "dual_numbers", &[&[1, 0], &[0, 2]]),
    ));
    out.push((
        "t_cubed_to_dual".into(),
        named_map("t_cubed", "dual_numbers", &[&[1, 0, 0], &[0, 1, 0]]),
    ));
    out.push((
        "dual_to_t_cubed_square".into(),
        named_map("dual_numbers", "t_cubed", &[&[1, 0], &[0, 0], &[0, 1]]),
    ));
    out
}

pub fn builtin_morphism<F: Field>(name: &str) -> Result<MonoidMor<F>> {
    builtin_morphisms()
        .into_iter()
        .find(|(n, _)| n == name)
        .map(|(_, f)| f)
        .ok_or_else(|| KernelError::Unknown(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    #[test]
    fn builtins_satisfy_laws() {
        for name in BUILTIN_ALGEBRAS {
            assert!(builtin::<Q>(name).unwrap().check_laws().all_passed(), "{name}");
            assert!(builtin::<Fp<5>>(name).unwrap().check_laws().all_passed(), "{name}");
        }
    }

    #[test]
    fn builtin_maps_are_monoid_maps() {
        for (name, f) in builtin_morphisms::<Q>() {
            assert!(f.check_laws().all_passed(), "{name}");
        }
        for (name, f) in builtin_morphisms::<Fp<2>>() {
            assert!(f.check_laws().all_passed(), "{name}");
        }
    }

    #[test]
    fn non_commutative_product_is_rejected() {
        // 2x2 matrices restricted to upper triangular: e11, e12, e22
        let r = CommMonoid::<Q>::from_table(&[1, 0, 1], |i, j| match (i, j) {
            (0, 0) => vec![1, 0, 0],
            (0, 1) => vec![0, 1, 0],
            (1, 2) => vec![0, 1, 0],
            (2, 2) => vec![0, 0, 1],
            _ => vec![0, 0, 0],
        });
        assert!(r.is_err());
    }

    #[test]
    fn dual_numbers_square_to_zero() {
        let d = dual_numbers::<Q>();
        assert!(d.basis_product(1, 1).iter().all(|v| v.is_zero()));
        assert!(d.basis_product(0, 1)[1].is_one());
    }

    #[test]
    fn coproduct_is_monoid_with_coprojections() {
        let d = dual_numbers::<Q>();
        let z = z2_group_algebra::<Q>();
        let c = d.coproduct(&z);
        assert!(c.monoid.check_laws().all_passed());
        assert!(c.left.check_laws().all_passed());
        assert!(c.right.check_laws().all_passed());
        assert_eq!(c.monoid.dim(), 4);
    }

    #[test]
    fn wrong_map_rejected() {
        let d = dual_numbers::<Q>();
        let k = ground::<Q>();
        let bad = Mor::from_i64(d.carrier, k.carrier, &[&[1, 1]]).unwrap();
        assert!(MonoidMor::new(d, k, bad).is_err());
    }
}
