//! Instances, suites and reports: the operational surface of the kernel.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cosmos::{closed_law_checks, cosmos_law_checks, tensor_functoriality, Mor, Obj};
use crate::day_convolution::{
    accepts_candidate, as_coproduct_module, check_comm_pair, check_symmetry, check_unit_object, convolve,
    corrupted_candidate, iterated_dimension, universal_factorization,
};
use crate::error::{KernelError, Result};
use crate::field::{Field, FieldSpec};
use crate::functors::{
    check_counit_naturality, check_lambda_naturality, cocontinuity_probe, ew_roundtrip, residue_hom_lambda,
    residue_module, FunctorExpr, ProbeVerdict,
};
use crate::laws::{LawReport, Witness};
use crate::main_equivalence::{
    builtin_pairs, check_distinguishable, comm_to_functor, corollary_strong, roundtrip_functor,
    roundtrip_main, LaxFunctor,
};
use crate::module_tensor::{
    check_adjunction_triangles, check_closedness, check_coherence_isos, check_monoidal_coherence, mtensor, tensor_over,
    unit_iso,
};
use crate::modules::{internal_hom, Bimodule, BimoduleMor, RightModule};
use crate::monoids::{builtin, builtin_morphisms, CommMonoid, MonoidMor, BUILTIN_ALGEBRAS};
use crate::random::{self, Rng64};
use crate::six_functors::build_pack;

pub const SCHEMA_VERSION: u32 = 1;
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const SUITES: [&str; 8] = [
    "cosmos-laws",
    "module-laws",
    "tensor-coherence",
    "ew",
    "six",
    "main-thm",
    "day",
    "all",
];

/// Maps checked by the `six` suite when present in the instance.
pub const SIX_MORPHISMS: [&str; 4] = [
    "unit_dual_numbers",
    "augmentation_dual_numbers",
    "id_dual_numbers",
    "t_cubed_to_dual",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Small,
    Medium,
}

impl Profile {
    pub fn max_dim(self) -> usize {
        match self {
            Profile::Small => 3,
            Profile::Medium => 4,
        }
    }
}

pub type Matrix = Vec<Vec<String>>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub unit: Matrix,
    pub product: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismSpec {
    pub src: String,
    pub dst: String,
    pub map: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    pub over: String,
    pub dim: usize,
    pub action: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleSpec {
    pub left: String,
    pub right: String,
    pub dim: usize,
    pub left_action: Matrix,
    pub right_action: Matrix,
}

/// The on-disk form of an instance. Scalars are strings `"a"` or `"a/b"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub schema_version: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    /// Shorthand for `"field": "fp:<p>"`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    pub seed: u64,
    pub profile: Profile,
    #[serde(default)]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default)]
    pub morphisms: BTreeMap<String, MorphismSpec>,
    #[serde(default)]
    pub modules: BTreeMap<String, ModuleSpec>,
    #[serde(default)]
    pub bimodules: BTreeMap<String, BimoduleSpec>,
}

impl InstanceFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| KernelError::Parse {
            path: format!("line {} column {}", e.line(), e.column()),
            msg: e.to_string(),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("instance serializes") + "\n"
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        let named = match &self.field {
            Some(s) => Some(s.parse::<FieldSpec>().map_err(|msg| KernelError::Parse {
                path: "field".into(),
                msg,
            })?),
            None => None,
        };
        let tagged = match self.p {
            Some(p) if crate::field::is_prime(p) => Some(FieldSpec::Prime(p)),
            Some(p) => {
                return Err(KernelError::Parse {
                    path: "p".into(),
                    msg: format!("{p} is not prime"),
                })
            }
            None => None,
        };
        match (named, tagged) {
            (Some(a), Some(b)) if a != b => Err(KernelError::Parse {
                path: "p".into(),
                msg: format!("field {a} disagrees with p"),
            }),
            (Some(a), _) => Ok(a),
            (None, Some(b)) => Ok(b),
            (None, None) => Ok(FieldSpec::Rational),
        }
    }
}

/// A loaded instance with every named value law-checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance<F: Field> {
    pub seed: u64,
    pub profile: Profile,
    pub algebras: BTreeMap<String, CommMonoid<F>>,
    pub morphisms: BTreeMap<String, MonoidMor<F>>,
    pub modules: BTreeMap<String, RightModule<F>>,
    pub bimodules: BTreeMap<String, Bimodule<F>>,
}

fn parse_matrix<F: Field>(rows: &Matrix, src: usize, dst: usize, path: &str) -> Result<Mor<F>> {
    if rows.len() != dst {
        return Err(KernelError::Parse {
            path: path.into(),
            msg: format!("expected {dst} rows, found {}", rows.len()),
        });
    }
    let mut out = Vec::with_capacity(dst);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != src {
            return Err(KernelError::Parse {
                path: format!("{path}[{r}]"),
                msg: format!("expected {src} entries, found {}", row.len()),
            });
        }
        let mut parsed = Vec::with_capacity(src);
        for (c, v) in row.iter().enumerate() {
            parsed.push(F::parse_scalar(v).map_err(|msg| KernelError::Parse {
                path: format!("{path}[{r}][{c}]"),
                msg,
            })?);
        }
        out.push(parsed);
    }
    Mor::from_rows(Obj::new(src), Obj::new(dst), out)
}

fn render_matrix<F: Field>(m: &Mor<F>) -> Matrix {
    m.to_strings()
}

fn at<E>(path: String) -> impl FnOnce(E) -> KernelError
where
    E: std::fmt::Display,
{
    move |e| KernelError::Parse {
        path,
        msg: e.to_string(),
    }
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, name: &str, path: String) -> Result<&'a T> {
    map.get(name).ok_or(KernelError::Parse {
        path,
        msg: format!("unknown name `{name}`"),
    })
}

impl<F: Field> Instance<F> {
    pub fn from_file(file: &InstanceFile) -> Result<Self> {
        if file.schema_version != SCHEMA_VERSION {
            return Err(KernelError::Parse {
                path: "schema_version".into(),
                msg: format!("expected {SCHEMA_VERSION}, found {}", file.schema_version),
            });
        }
        let spec = file.field_spec()?;
        if spec != F::spec() {
            return Err(KernelError::Parse {
                path: "field".into(),
                msg: format!("instance is over {spec}, loader is over {}", F::spec()),
            });
        }
        let mut algebras = BTreeMap::new();
        for (name, a) in &file.algebras {
            let base = format!("algebras.{name}");
            let o = Obj::new(a.dim);
            let unit = parse_matrix::<F>(&a.unit, 1, a.dim, &format!("{base}.unit"))?;
            let product = parse_matrix::<F>(&a.product, a.dim * a.dim, a.dim, &format!("{base}.product"))?;
            let m = CommMonoid::new(o, unit, product).map_err(at(base))?;
            algebras.insert(name.clone(), m);
        }
        let mut morphisms = BTreeMap::new();
        for (name, m) in &file.morphisms {
            let base = format!("morphisms.{name}");
            let src = lookup(&algebras, &m.src, format!("{base}.src"))?;
            let dst = lookup(&algebras, &m.dst, format!("{base}.dst"))?;
            let map = parse_matrix::<F>(&m.map, src.dim(), dst.dim(), &format!("{base}.map"))?;
            let f = MonoidMor::new(src.clone(), dst.clone(), map).map_err(at(base.clone()))?;
            f.check_laws().into_result("monoid map").map_err(at(base))?;
            morphisms.insert(name.clone(), f);
        }
        let mut modules = BTreeMap::new();
        for (name, m) in &file.modules {
            let base = format!("modules.{name}");
            let over = lookup(&algebras, &m.over, format!("{base}.over"))?;
            let action = parse_matrix::<F>(&m.action, m.dim * over.dim(), m.dim, &format!("{base}.action"))?;
            let x = RightModule::new(over.clone(), Obj::new(m.dim), action).map_err(at(base))?;
            modules.insert(name.clone(), x);
        }
        let mut bimodules = BTreeMap::new();
        for (name, m) in &file.bimodules {
            let base = format!("bimodules.{name}");
            let left = lookup(&algebras, &m.left, format!("{base}.left"))?;
            let right = lookup(&algebras, &m.right, format!("{base}.right"))?;
            let la = parse_matrix::<F>(&m.left_action, left.dim() * m.dim, m.dim, &format!("{base}.left_action"))?;
            let ra = parse_matrix::<F>(&m.right_action, m.dim * right.dim(), m.dim, &format!("{base}.right_action"))?;
            let x = Bimodule::new(left.clone(), right.clone(), Obj::new(m.dim), la, ra).map_err(at(base))?;
            bimodules.insert(name.clone(), x);
        }
        Ok(Instance {
            seed: file.seed,
            profile: file.profile,
            algebras,
            morphisms,
            modules,
            bimodules,
        })
    }

    fn algebra_name(&self, b: &CommMonoid<F>) -> String {
        self.algebras
            .iter()
            .find(|(_, a)| *a == b)
            .map(|(n, _)| n.clone())
            .expect("every value in an instance is over a named algebra")
    }

    pub fn to_file(&self) -> InstanceFile {
        let field = match F::spec() {
            FieldSpec::Rational => "q".to_string(),
            other => other.to_string(),
        };
        InstanceFile {
            schema_version: SCHEMA_VERSION,
            field: Some(field),
            p: None,
            seed: self.seed,
            profile: self.profile,
            algebras: self
                .algebras
                .iter()
                .map(|(n, a)| {
                    (
                        n.clone(),
                        AlgebraSpec {
                            dim: a.dim(),
                            unit: render_matrix(&a.unit),
                            product: render_matrix(&a.product),
                        },
                    )
                })
                .collect(),
            morphisms: self
                .morphisms
                .iter()
                .map(|(n, f)| {
                    (
                        n.clone(),
                        MorphismSpec {
                            src: self.algebra_name(&f.src),
                            dst: self.algebra_name(&f.dst),
                            map: render_matrix(&f.map),
                        },
                    )
                })
                .collect(),
            modules: self
                .modules
                .iter()
                .map(|(n, x)| {
                    (
                        n.clone(),
                        ModuleSpec {
                            over: self.algebra_name(&x.over),
                            dim: x.dim(),
                            action: render_matrix(&x.action),
                        },
                    )
                })
                .collect(),
            bimodules: self
                .bimodules
                .iter()
                .map(|(n, x)| {
                    (
                        n.clone(),
                        BimoduleSpec {
                            left: self.algebra_name(&x.left),
                            right: self.algebra_name(&x.right),
                            dim: x.dim(),
                            left_action: render_matrix(&x.left_action),
                            right_action: render_matrix(&x.right_action),
                        },
                    )
                })
                .collect(),
        }
    }

    fn modules_over(&self, b: &CommMonoid<F>) -> Vec<RightModule<F>> {
        self.modules.values().filter(|x| &x.over == b).cloned().collect()
    }
}

/// Bases of the random bimodules in generated instances.
const BIMODULE_BASES: [(&str, &str); 4] = [
    ("dual_numbers", "ground"),
    ("dual_numbers", "dual_numbers"),
    ("split_pair", "z2_group_algebra"),
    ("t_cubed", "dual_numbers"),
];

/// A deterministic instance: the builtin algebras and maps, two random modules per
/// algebra and two random bimodules per base pair.
pub fn generate<F: Field>(seed: u64, profile: Profile) -> Result<Instance<F>> {
    let wrap = |e: KernelError| KernelError::Invalid(format!("generating with seed {seed}: {e}"));
    let mut rng = random::rng(seed);
    let max = profile.max_dim();
    let mut algebras = BTreeMap::new();
    for name in BUILTIN_ALGEBRAS {
        algebras.insert(name.to_string(), builtin::<F>(name)?);
    }
    let morphisms: BTreeMap<_, _> = builtin_morphisms::<F>().into_iter().collect();
    let mut modules = BTreeMap::new();
    for name in BUILTIN_ALGEBRAS {
        for i in 0..2 {
            let x = random::module(&mut rng, &algebras[name], max).map_err(wrap)?;
            modules.insert(format!("{name}.m{i}"), x);
        }
    }
    let mut bimodules = BTreeMap::new();
    for (l, r) in BIMODULE_BASES {
        for i in 0..2 {
            let x = random::bimodule(&mut rng, &algebras[l], &algebras[r], max).map_err(wrap)?;
            bimodules.insert(format!("{l}.{r}.x{i}"), x);
        }
    }
    Ok(Instance {
        seed,
        profile,
        algebras,
        morphisms,
        modules,
        bimodules,
    })
}

/// Parses `tensor(X) ; restrict(f) ; hom(Y)`, applied left to right. Arguments name
/// instance bimodules (or modules, seen as bimodules), maps and algebras (`id(b)`).
pub fn parse_functor<F: Field>(text: &str, inst: &Instance<F>) -> Result<FunctorExpr<F>> {
    let mut acc: Option<FunctorExpr<F>> = None;
    for term in text.split(';') {
        let term = term.trim();
        let bad = || KernelError::Parse {
            path: format!("functor `{term}`"),
            msg: "expected id(b), tensor(X), restrict(f) or hom(X)".into(),
        };
        let (head, rest) = term.split_once('(').ok_or_else(bad)?;
        let arg = rest.strip_suffix(')').ok_or_else(bad)?.trim();
        let bimodule = |arg: &str| -> Result<Bimodule<F>> {
            if let Some(x) = inst.bimodules.get(arg) {
                return Ok(x.clone());
            }
            inst.modules.get(arg).map(|m| m.as_bimodule()).ok_or(KernelError::Parse {
                path: format!("functor `{term}`"),
                msg: format!("unknown bimodule `{arg}`"),
            })
        };
        let leaf = match head.trim() {
            "id" => FunctorExpr::Identity(lookup(&inst.algebras, arg, format!("functor `{term}`"))?.clone()),
            "tensor" => FunctorExpr::TensorBimodule(bimodule(arg)?),
            "hom" => FunctorExpr::HomModule(bimodule(arg)?),
            "restrict" => FunctorExpr::Restrict(lookup(&inst.morphisms, arg, format!("functor `{term}`"))?.clone()),
            _ => return Err(bad()),
        };
        acc = Some(match acc {
            None => leaf,
            Some(inner) => FunctorExpr::compose(leaf, inner)?,
        });
    }
    acc.ok_or(KernelError::Parse {
        path: "functor".into(),
        msg: "empty expression".into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Law,
    /// Passes when the expected failure is observed.
    ExpectedNegative,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// One named check, aggregated over all the samples it was evaluated on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub kind: CheckKind,
    pub status: Status,
    pub samples: usize,
    pub failures: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub version: String,
    pub suite: String,
    pub seed: u64,
    pub field: String,
    pub passed: bool,
    pub checks: Vec<CheckEntry>,
    pub timing_ms: u64,
}

impl Report {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| KernelError::Parse {
            path: format!("line {} column {}", e.line(), e.column()),
            msg: e.to_string(),
        })
    }

    /// The report with its timing field cleared, for comparisons across runs.
    pub fn without_timing(&self) -> Report {
        Report {
            timing_ms: 0,
            ..self.clone()
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

#[derive(Debug, Default)]
struct Collector {
    entries: Vec<CheckEntry>,
    index: HashMap<String, usize>,
}

impl Collector {
    fn record(&mut self, id: String, kind: CheckKind, ok: bool, witness: impl FnOnce() -> Option<Witness>) {
        let i = *self.index.entry(id.clone()).or_insert_with(|| {
            self.entries.push(CheckEntry {
                id,
                kind,
                status: Status::Pass,
                samples: 0,
                failures: 0,
                witness: None,
            });
            self.entries.len() - 1
        });
        let e = &mut self.entries[i];
        e.samples += 1;
        if !ok {
            e.failures += 1;
            e.status = Status::Fail;
            if e.witness.is_none() {
                e.witness = witness();
            }
        }
    }

    fn law(&mut self, suite: &str, law: &str, ok: bool, context: &str, detail: &str) {
        self.record(format!("{suite}.{law}"), CheckKind::Law, ok, || {
            Some(Witness {
                row: None,
                col: None,
                detail: format!("{context}: {detail}"),
            })
        });
    }

    fn report(&mut self, suite: &str, context: &str, rep: LawReport) {
        for c in rep.checks {
            let id = format!("{suite}.{}", c.law);
            let witness = c.witness.map(|w| Witness {
                detail: format!("{context}: {}", w.detail),
                ..w
            });
            self.record(id, CheckKind::Law, c.passed, || witness);
        }
    }

    fn result<T>(&mut self, suite: &str, law: &str, context: &str, r: Result<T>) -> Option<T> {
        match r {
            Ok(v) => {
                self.law(suite, law, true, context, "");
                Some(v)
            }
            Err(e) => {
                self.law(suite, law, false, context, &e.to_string());
                None
            }
        }
    }

    fn negative(&mut self, suite: &str, law: &str, confirmed: bool, detail: &str) {
        self.record(format!("{suite}.{law}"), CheckKind::ExpectedNegative, confirmed, || {
            Some(Witness {
                row: None,
                col: None,
                detail: detail.into(),
            })
        });
    }
}

/// Random modules over `b`: the instance modules first, then fresh ones, `n` in all.
fn samples<F: Field>(inst: &Instance<F>, rng: &mut Rng64, b: &CommMonoid<F>, n: usize) -> Result<Vec<RightModule<F>>> {
    let mut out = inst.modules_over(b);
    out.truncate(n);
    while out.len() < n {
        out.push(random::module(rng, b, inst.profile.max_dim())?);
    }
    Ok(out)
}

fn random_bimodule_map<F: Field>(rng: &mut Rng64, x: &Bimodule<F>, y: &Bimodule<F>) -> Result<BimoduleMor<F>> {
    let h = random::module_map(rng, &as_coproduct_module(x)?, &as_coproduct_module(y)?)?;
    BimoduleMor::new(x.clone(), y.clone(), h.map)
}

fn suite_cosmos<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    let s = "cosmos-laws";
    let max = inst.profile.max_dim();
    for _ in 0..40 {
        let (x, y, z, w) = (random::obj(rng, max), random::obj(rng, max), random::obj(rng, max), random::obj(rng, max));
        let ctx = format!("dims {} {} {} {}", x.dim, y.dim, z.dim, w.dim);
        for (law, ok) in cosmos_law_checks::<F>(x, y, z, w) {
            c.law(s, &law, ok, &ctx, "sides differ");
        }
        let f = random::mor::<F>(rng, x, y);
        let g = random::mor::<F>(rng, y, z);
        let f2 = random::mor::<F>(rng, w, x);
        let g2 = random::mor::<F>(rng, x, y);
        let ok = tensor_functoriality(&f, &g, &f2, &g2)?;
        c.law(s, "tensor functorial", ok, &ctx, "sides differ");
        let h = random::mor::<F>(rng, z.tensor(x), y);
        for (law, ok) in closed_law_checks(&h, x)? {
            c.law(s, &law, ok, &ctx, "sides differ");
        }
    }
    Ok(())
}

fn suite_modules<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    let s = "module-laws";
    for (n, a) in &inst.algebras {
        c.report(s, n, a.check_laws());
    }
    for (n, f) in &inst.morphisms {
        c.report(s, n, f.check_laws());
    }
    for (n, x) in &inst.modules {
        c.report(s, n, x.check_laws());
        for (fname, f) in &inst.morphisms {
            if f.dst == x.over {
                c.report(s, &format!("{n} along {fname}"), x.restrict(f)?.check_laws());
            }
        }
    }
    for (n, x) in &inst.bimodules {
        c.report(s, n, x.check_laws());
    }
    for b in inst.algebras.values() {
        let xs = samples(inst, rng, b, 3)?;
        let h = random::module_map(rng, &xs[0], &xs[1])?;
        let g = random::module_map(rng, &xs[1], &xs[2])?;
        c.report(s, "sample maps", h.check_equivariance());
        c.report(s, "sample maps", g.compose(&h)?.check_equivariance());
        let hom = internal_hom(&xs[0], &xs[1])?;
        c.report(s, "internal hom", hom.module.check_laws());
    }
    Ok(())
}

fn suite_tensor<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    let s = "tensor-coherence";
    for (n, b) in &inst.algebras {
        for _ in 0..2 {
            let xs = samples(inst, rng, b, 4)?;
            let ys: Vec<_> = (0..4).map(|_| random::module(rng, b, 2)).collect::<Result<_>>()?;
            c.report(s, n, check_monoidal_coherence(&ys[0], &xs[1], &ys[2], &xs[3]));
            c.report(s, n, check_coherence_isos(&xs[0], &ys[1], &xs[2]));
        }
    }
    for (n, x) in &inst.bimodules {
        let z = random::module(rng, &x.left, inst.profile.max_dim())?;
        let y = random::module(rng, &x.right, inst.profile.max_dim())?;
        c.report(s, n, check_adjunction_triangles(&z, x, &y));
        c.report(s, n, check_closedness(&z, x, &y));
        let iota = unit_iso(x)?;
        let cq = tensor_over(&RightModule::regular(&x.left), x)?.pres.proj;
        c.law(s, "unit iso invertible", iota.is_iso(), n, "singular");
        c.law(s, "unit iso relation", iota.map.compose(&cq)? == x.left_action, n, "ι ∘ cq ≠ ρ");
    }
    Ok(())
}

fn suite_ew<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    let s = "ew";
    for (n, x) in &inst.bimodules {
        let zs = samples(inst, rng, &x.left, 4)?;
        c.report(s, n, ew_roundtrip(x, &zs));
        let phi = random_bimodule_map(rng, x, x)?;
        c.report(s, n, check_counit_naturality(&phi, &zs[0]));
        let lin = random::mor::<F>(rng, Obj::new(2), Obj::new(1));
        for fun in [FunctorExpr::TensorBimodule(x.clone()), FunctorExpr::HomModule(x.clone())] {
            let zs = samples(inst, rng, fun.source(), 3)?;
            let h = random::module_map(rng, &zs[0], &zs[1])?;
            let g = random::module_map(rng, &zs[1], &zs[2])?;
            c.report(s, n, fun.check_laws(&h, &g, Obj::new(2), Obj::new(1), &lin));
            c.report(s, n, check_lambda_naturality(&fun, &h, Obj::new(2)));
        }
    }
    let lam = residue_hom_lambda::<F>()?;
    let confirmed = lam.src.dim() == 1 && lam.dst.dim() == 1 && lam.map.is_zero();
    c.negative(s, "hom out of the residue field has zero comparison map", confirmed, "λ is not the zero map between lines");
    let k = residue_module::<F>();
    let d = builtin::<F>("dual_numbers")?;
    let reg = RightModule::regular(&d);
    let dims = [
        ("dim k over D tensor k", mtensor(&k, &k)?.module.dim()),
        ("dim maps from k to D", internal_hom(&k, &reg)?.module.dim()),
        ("dim maps from k to k", internal_hom(&k, &k)?.module.dim()),
    ];
    for (law, dim) in dims {
        c.law(s, law, dim == 1, "residue field", &format!("dimension {dim}"));
    }
    Ok(())
}

fn six_checks<F: Field>(c: &mut Collector, name: &str, f: &MonoidMor<F>, rng: &mut Rng64, n: usize, max: usize) -> Result<()> {
    let s = "six";
    let pack = build_pack(f)?;
    let pull = LaxFunctor::pull_push(f, &MonoidMor::identity(&f.dst))?;
    for _ in 0..n {
        let x = random::module(rng, &f.src, max)?;
        let x2 = random::module(rng, &f.src, max)?;
        let y = random::module(rng, &f.dst, max)?;
        let y2 = random::module(rng, &f.dst, max)?;
        let hy = random::module_map(rng, &y, &y2)?;
        let hx = random::module_map(rng, &x, &x2)?;
        c.report(s, name, pack.check_pullback_adjunction(&x, &y));
        c.report(s, name, pack.check_shriek_adjunction(&y, &x));
        c.report(s, name, pack.check_shriek_star(&hy));
        c.report(s, name, pack.check_mate(&x, &x2));
        c.report(s, name, pack.check_projection_formula(&x, &y));
        c.report(s, name, pack.check_lax_pushforward(&y, &y2, &y, &hy));
        c.report(s, name, pull.check_axioms(&x, &x2, &x, &hx));
        c.report(s, name, pull.check_strong(&[x, x2]));
    }
    let unit = pack.lax_pushforward_unit();
    c.law(s, "pushforward unit is the map", unit.map == f.map, name, "unit coherence differs from f");
    Ok(())
}

fn suite_six<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    for name in SIX_MORPHISMS {
        if let Some(f) = inst.morphisms.get(name) {
            six_checks(c, name, f, rng, 3, inst.profile.max_dim())?;
        }
    }
    Ok(())
}

/// The `six` suite for a single named map.
pub fn run_six<F: Field>(inst: &Instance<F>, morphism: &str, samples: usize, seed: u64) -> Result<Report> {
    let f = lookup(&inst.morphisms, morphism, "morphism".into())?;
    let start = Instant::now();
    let mut c = Collector::default();
    let mut rng = random::rng(seed);
    six_checks(&mut c, morphism, f, &mut rng, samples, inst.profile.max_dim())?;
    Ok(finish::<F>("six", seed, c, start))
}

fn suite_main<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    let s = "main-thm";
    for (n, p) in builtin_pairs::<F>() {
        c.report(s, &n, roundtrip_main(&p));
        let fun = comm_to_functor(&p)?;
        let xs = samples(inst, rng, &p.b, 3)?;
        let h = random::module_map(rng, &xs[0], &xs[1])?;
        c.report(s, &n, fun.check_axioms(&xs[0], &xs[1], &xs[2], &h));
        c.report(s, &n, roundtrip_functor(&fun, &xs[..2]));
    }
    for (n, x) in &inst.bimodules {
        // a cocontinuous functor without lax data still yields a comparison family
        let zs = samples(inst, rng, &x.left, 2)?;
        let verdict = cocontinuity_probe(&FunctorExpr::TensorBimodule(x.clone()), &zs)?;
        c.law(s, "tensor functors cocontinuous on samples", verdict.all_invertible(), n, "λ singular");
    }
    for (n, f) in &inst.morphisms {
        let xs = vec![RightModule::regular(&f.src), random::module(rng, &f.src, 2)?];
        c.report(s, n, corollary_strong(f, &xs));
    }
    let maps: Vec<_> = inst.morphisms.iter().map(|(n, f)| (n.clone(), f.clone())).collect();
    c.report(s, "builtin maps", check_distinguishable(&maps));
    Ok(())
}

fn suite_day<F: Field>(c: &mut Collector, inst: &Instance<F>, rng: &mut Rng64) -> Result<()> {
    let s = "day";
    let max = inst.profile.max_dim();
    let mut by_base: BTreeMap<(String, String), Vec<(&String, &Bimodule<F>)>> = BTreeMap::new();
    for (n, x) in &inst.bimodules {
        by_base
            .entry((inst.algebra_name(&x.left), inst.algebra_name(&x.right)))
            .or_default()
            .push((n, x));
    }
    for ((bl, br), xs) in &by_base {
        let (nx, x) = xs[0];
        let (ny, y) = xs[xs.len() - 1];
        let ctx = format!("{nx} * {ny} over ({bl}, {br})");
        let Some(r) = c.result(s, "convolution defined", &ctx, convolve(x, y)) else {
            continue;
        };
        c.report(s, &ctx, r.check());
        let it = iterated_dimension(x, y)?;
        c.law(s, "dimension matches iterated quotient", it == r.product.dim(), &ctx, &format!("{it} vs {}", r.product.dim()));
        let w = random::module(rng, &x.left, max)?;
        let w2 = random::module(rng, &x.left, max)?;
        let h = random::module_map(rng, &w, &w2)?;
        c.report(s, &ctx, r.check_theta(&w, &w2, &h));
        let (rank, dim) = r.theta_unit_rank()?;
        c.law(s, "transformation at b surjective", rank == dim, &ctx, &format!("rank {rank} of {dim}"));
        c.report(s, &ctx, check_unit_object(&x.right, &h));
        let psi0 = random_bimodule_map(rng, &r.product, &r.product)?;
        if let Some(fac) = c.result(s, "factorization defined", &ctx, universal_factorization(&r, &psi0, &[(w.clone(), w2.clone())])) {
            c.report(s, &ctx, fac.report);
        }
        if r.product.dim() > 0 {
            let bad = corrupted_candidate(&r, &psi0)?;
            let rejected = !accepts_candidate(&r, &psi0, &bad)?;
            c.law(s, "corrupted factorization rejected", rejected, &ctx, "corrupted candidate accepted");
        }
        c.report(s, &ctx, check_symmetry(x, y));
    }
    for (n, p) in builtin_pairs::<F>() {
        let w = random::module(rng, &p.b, 2)?;
        let z = random::module(rng, &p.b, 2)?;
        c.report(s, &n, check_comm_pair(&p, &w, &z));
    }
    Ok(())
}

fn finish<F: Field>(suite: &str, seed: u64, c: Collector, start: Instant) -> Report {
    let passed = c.entries.iter().all(|e| e.status == Status::Pass);
    Report {
        schema_version: SCHEMA_VERSION,
        version: VERSION.into(),
        suite: suite.into(),
        seed,
        field: F::spec().to_string(),
        passed,
        checks: c.entries,
        timing_ms: start.elapsed().as_millis() as u64,
    }
}

/// Runs a named suite. The random samples drawn by the suite come from `seed`.
pub fn run_suite<F: Field>(name: &str, inst: &Instance<F>, seed: u64) -> Result<Report> {
    type Suite<F> = fn(&mut Collector, &Instance<F>, &mut Rng64) -> Result<()>;
    let table: [(&str, Suite<F>); 7] = [
        ("cosmos-laws", suite_cosmos),
        ("module-laws", suite_modules),
        ("tensor-coherence", suite_tensor),
        ("ew", suite_ew),
        ("six", suite_six),
        ("main-thm", suite_main),
        ("day", suite_day),
    ];
    let chosen: Vec<_> = match name {
        "all" => table.iter().collect(),
        _ => table.iter().filter(|(n, _)| *n == name).collect(),
    };
    if chosen.is_empty() {
        return Err(KernelError::Unknown(format!("suite `{name}`")));
    }
    let start = Instant::now();
    let mut c = Collector::default();
    for (n, suite) in chosen {
        let mut rng = random::rng(seed);
        if let Err(e) = suite(&mut c, inst, &mut rng) {
            c.law(n, "suite completed", false, n, &e.to_string());
        }
    }
    Ok(finish::<F>(name, seed, c, start))
}

/// The cocontinuity probe of a parsed functor on the instance modules over its source.
pub fn probe<F: Field>(inst: &Instance<F>, expr: &str, seed: u64) -> Result<(String, ProbeVerdict)> {
    let fun = parse_functor(expr, inst)?;
    let mut rng = random::rng(seed);
    let mut zs = vec![RightModule::regular(fun.source())];
    zs.extend(samples(inst, &mut rng, fun.source(), 3)?);
    Ok((fun.to_string(), cocontinuity_probe(&fun, &zs)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{Fp, Q};

    #[test]
    fn builtin_instance_round_trips() {
        let inst = generate::<Q>(0, Profile::Small).unwrap();
        let file = inst.to_file();
        let text = file.to_json();
        let back = InstanceFile::from_json(&text).unwrap();
        assert_eq!(back, file);
        assert_eq!(Instance::<Q>::from_file(&back).unwrap(), inst);
        assert_eq!(generate::<Q>(0, Profile::Small).unwrap().to_file().to_json(), text);
    }

    #[test]
    fn zero_denominator_rejected_with_path() {
        let mut file = generate::<Q>(1, Profile::Small).unwrap().to_file();
        file.algebras.get_mut("dual_numbers").unwrap().product[1][0] = "1/0".into();
        match Instance::<Q>::from_file(&file) {
            Err(KernelError::Parse { path, .. }) => assert_eq!(path, "algebras.dual_numbers.product[1][0]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn prime_tag_reduces_scalars() {
        let mut file = generate::<Fp<5>>(2, Profile::Small).unwrap().to_file();
        file.field = None;
        file.p = Some(5);
        file.morphisms.get_mut("dual_scale2").unwrap().map[1][1] = "7".into();
        let inst = Instance::<Fp<5>>::from_file(&file).unwrap();
        assert_eq!(inst.morphisms["dual_scale2"].map.get(1, 1).render(), "2");
        assert!(Instance::<Q>::from_file(&file).is_err());
    }

    #[test]
    fn functor_expressions_parse() {
        let inst = generate::<Q>(3, Profile::Small).unwrap();
        let f = parse_functor("tensor(dual_numbers.dual_numbers.x0) ; restrict(unit_dual_numbers)", &inst).unwrap();
        assert_eq!(f.target().dim(), 1);
        assert!(parse_functor("tensor(nope)", &inst).is_err());
        assert!(parse_functor("frobnicate(x)", &inst).is_err());
        let (_, v) = probe(&inst, "hom(dual_numbers.dual_numbers.x1)", 0).unwrap();
        assert_eq!(v.samples.len(), 4);
    }

    #[test]
    fn unknown_suite_is_an_error() {
        let inst = generate::<Q>(0, Profile::Small).unwrap();
        assert!(run_suite("nope", &inst, 0).is_err());
    }

    #[test]
    fn medium_profile_bounds() {
        let inst = generate::<Q>(5, Profile::Medium).unwrap();
        assert!(inst.modules.values().all(|m| m.dim() <= 4));
        assert!(inst.bimodules.values().all(|m| m.dim() <= 4 && m.left.dim() * m.right.dim() <= 16));
    }
}
