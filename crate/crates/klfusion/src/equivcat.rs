//! Discriminant-form categories and the equivariantization verifier.
//!
//! `Vect^m_{P/Q}` is the pointed braided category of `P/Q`-graded vector
//! spaces with quadratic-form exponent `q^m(x) = m (x, x) mod 1` (the
//! braiding scalar is `e^{2 pi i q}`); for `m > 0` it is realized inside
//! lattice vertex-algebra modules, for `m <= 0` it is carried abstractly on
//! `P/Q`. [`GradedCategoryData`] holds a finite fragment of such a category:
//! a simples list, the `P/Q`-degree and twist-exponent maps, the fusion
//! coefficient rule, and the partial scalar-monodromy map.
//!
//! [`verify_cor_main`] checks, exhaustively within a height bound, that the
//! reduced Kazhdan-Lusztig fragment at the base level is equivalent at the
//! decategorified level to the trivial-degree part of the fragment at the
//! `m`-shifted level tensored with `Vect^m_{P/Q}`: simple-object bijection,
//! fusion coefficients, degree compatibility, and `m`-additivity through the
//! diagonal embedding `Vect^{a+b} -> Vect^a x Vect^b`. Twist-exponent
//! differences are reported as data, never asserted zero: a braided
//! equivalence need not preserve twists, and the pointed factor exists
//! precisely to absorb cocycle data.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::frac::{mod1, Frac};
use crate::fusion::{fuse, FusionError};
use crate::levels::{level_m, LevelParam, RatFunc};
use crate::objects::{conformal_weight, degree, FTag, ModuleLabel, ObjectError};
use crate::rootdata::{DiscClass, RootSystem, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EquivError {
    #[error("graded categories live over different contexts")]
    CtxMismatch,
    #[error("label is not a simple of this fragment: {0}")]
    UnknownSimple(String),
    #[error("fragment is not closed under fusion: {0}")]
    NotClosed(String),
    #[error("label has the wrong shape: {0}")]
    WrongShape(String),
    #[error(transparent)]
    Fusion(#[from] FusionError),
    #[error(transparent)]
    Object(#[from] ObjectError),
}

/// How fusion coefficients of a fragment are evaluated.
#[derive(Debug, Clone)]
enum FusionRule {
    /// Group law of `P/Q` on lattice labels.
    Pointed { m: i64 },
    /// Tensor coefficients `c_{lambda,mu}^{nu}` on same-kind labels.
    Tensor,
    /// Factor-wise product on pair labels.
    Product(Box<FusionRule>, Box<FusionRule>),
}

/// A finite fragment of a `P/Q`-graded braided category: simples, degrees,
/// twist exponents, a fusion-coefficient rule, and scalar monodromy where it
/// is defined.
pub struct GradedCategoryData<'a> {
    ctx: &'a RootSystem,
    simples: Vec<ModuleLabel>,
    degrees: BTreeMap<ModuleLabel, DiscClass>,
    twists: BTreeMap<ModuleLabel, RatFunc>,
    rule: FusionRule,
}

impl<'a> GradedCategoryData<'a> {
    pub fn simples(&self) -> &[ModuleLabel] {
        &self.simples
    }

    pub fn degree_of(&self, s: &ModuleLabel) -> Result<&DiscClass, EquivError> {
        self.degrees
            .get(s)
            .ok_or_else(|| EquivError::UnknownSimple(s.to_string()))
    }

    pub fn twist_of(&self, s: &ModuleLabel) -> Result<&RatFunc, EquivError> {
        self.twists
            .get(s)
            .ok_or_else(|| EquivError::UnknownSimple(s.to_string()))
    }

    /// Fusion coefficient of `c` in `a (x) b`.
    pub fn fusion_coeff(
        &self,
        a: &ModuleLabel,
        b: &ModuleLabel,
        c: &ModuleLabel,
    ) -> Result<u64, EquivError> {
        rule_coeff(self.ctx, &self.rule, a, b, c)
    }

    /// Scalar monodromy exponent mod 1, where defined.
    pub fn monodromy_of(&self, a: &ModuleLabel, b: &ModuleLabel) -> Option<Frac> {
        rule_monodromy(self.ctx, &self.rule, a, b)
    }

    /// Checks degree additivity and coefficient symmetry exhaustively over
    /// the fragment.
    pub fn check_invariants(&self) -> Result<(), EquivError> {
        for a in &self.simples {
            for b in &self.simples {
                for c in &self.simples {
                    let coeff = self.fusion_coeff(a, b, c)?;
                    if coeff != self.fusion_coeff(b, a, c)? {
                        return Err(EquivError::NotClosed(format!(
                            "fusion not symmetric at ({a}, {b}, {c})"
                        )));
                    }
                    if coeff > 0 {
                        let sum =
                            self.ctx.disc_add(self.degree_of(a)?, self.degree_of(b)?);
                        if &sum != self.degree_of(c)? {
                            return Err(EquivError::NotClosed(format!(
                                "degree not additive at ({a}, {b}, {c})"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

fn rule_coeff(
    ctx: &RootSystem,
    rule: &FusionRule,
    a: &ModuleLabel,
    b: &ModuleLabel,
    c: &ModuleLabel,
) -> Result<u64, EquivError> {
    match rule {
        FusionRule::Pointed { m } => {
            let (ModuleLabel::Lattice { delta: da, m: ma },
                 ModuleLabel::Lattice { delta: db, m: mb },
                 ModuleLabel::Lattice { delta: dc, m: mc }) = (a, b, c)
            else {
                return Err(EquivError::WrongShape(format!(
                    "pointed fragment expects lattice labels, got ({a}, {b}, {c})"
                )));
            };
            if [ma, mb, mc].iter().any(|&&x| x != *m) {
                return Err(EquivError::WrongShape(
                    "lattice label from a different Vect^m".to_string(),
                ));
            }
            Ok(u64::from(ctx.disc_add(da, db) == *dc))
        }
        FusionRule::Tensor => Ok(fuse(ctx, a, b)?.get(c)),
        FusionRule::Product(left_rule, right_rule) => {
            let (ModuleLabel::Pair { left: al, right: ar },
                 ModuleLabel::Pair { left: bl, right: br },
                 ModuleLabel::Pair { left: cl, right: cr }) = (a, b, c)
            else {
                return Err(EquivError::WrongShape(format!(
                    "product fragment expects pair labels, got ({a}, {b}, {c})"
                )));
            };
            let l = rule_coeff(ctx, left_rule, al, bl, cl)?;
            if l == 0 {
                return Ok(0);
            }
            Ok(l * rule_coeff(ctx, right_rule, ar, br, cr)?)
        }
    }
}

fn rule_monodromy(
    ctx: &RootSystem,
    rule: &FusionRule,
    a: &ModuleLabel,
    b: &ModuleLabel,
) -> Option<Frac> {
    match rule {
        FusionRule::Pointed { .. } | FusionRule::Tensor => {
            crate::fusion::monodromy_exponent(ctx, a, b).ok()
        }
        FusionRule::Product(left_rule, right_rule) => {
            let (ModuleLabel::Pair { left: al, right: ar },
                 ModuleLabel::Pair { left: bl, right: br }) = (a, b)
            else {
                return None;
            };
            let l = rule_monodromy(ctx, left_rule, al, bl)?;
            let r = rule_monodromy(ctx, right_rule, ar, br)?;
            Some(mod1(l + r))
        }
    }
}

/// The pointed category `Vect^m_{P/Q}`: one simple per class of `P/Q`,
/// group-law fusion, twist exponent `q^m` verbatim, and monodromy
/// `2 m (delta, epsilon) mod 1` (the polarization of `q^m`).
pub fn vect_m<'a>(ctx: &'a RootSystem, m: i64) -> GradedCategoryData<'a> {
    let mut simples = Vec::new();
    let mut degrees = BTreeMap::new();
    let mut twists = BTreeMap::new();
    for rep in ctx.disc_reps() {
        let class = ctx.disc_class(rep);
        let label = ModuleLabel::lattice(class.clone(), m);
        degrees.insert(label.clone(), class.clone());
        twists.insert(
            label.clone(),
            RatFunc::from_frac(ctx.disc_quadratic(&class, m)),
        );
        simples.push(label);
    }
    simples.sort();
    GradedCategoryData {
        ctx,
        simples,
        degrees,
        twists,
        rule: FusionRule::Pointed { m },
    }
}

/// The reduced Kazhdan-Lusztig fragment at a given level: simples
/// `Reduced(lambda, f)` over dominant `lambda` with `(lambda, rho) <=
/// bound`, canonical `P/Q`-degrees, and conformal-weight twist exponents.
/// The tag must be the principal one so that twists are defined.
pub fn kl_fragment<'a>(
    ctx: &'a RootSystem,
    level: &LevelParam,
    f: &FTag,
    bound: u32,
) -> Result<GradedCategoryData<'a>, EquivError> {
    let mut simples = Vec::new();
    let mut degrees = BTreeMap::new();
    let mut twists = BTreeMap::new();
    for lambda in ctx.dominant_by_height(bound) {
        let label = ModuleLabel::reduced(*level, lambda, f.clone())?;
        degrees.insert(label.clone(), degree(ctx, &label));
        twists.insert(label.clone(), conformal_weight(ctx, &label)?);
        simples.push(label);
    }
    simples.sort();
    Ok(GradedCategoryData {
        ctx,
        simples,
        degrees,
        twists,
        rule: FusionRule::Tensor,
    })
}

/// Deligne-product fragment: simples are pairs, degrees add, twist
/// exponents add, fusion coefficients multiply factor-wise.
pub fn graded_product<'a>(
    c1: &GradedCategoryData<'a>,
    c2: &GradedCategoryData<'a>,
) -> Result<GradedCategoryData<'a>, EquivError> {
    if !std::ptr::eq(c1.ctx, c2.ctx) {
        return Err(EquivError::CtxMismatch);
    }
    let ctx = c1.ctx;
    let mut simples = Vec::new();
    let mut degrees = BTreeMap::new();
    let mut twists = BTreeMap::new();
    for a in &c1.simples {
        for b in &c2.simples {
            let label = ModuleLabel::pair(a.clone(), b.clone())?;
            degrees.insert(
                label.clone(),
                ctx.disc_add(c1.degree_of(a)?, c2.degree_of(b)?),
            );
            twists.insert(label.clone(), c1.twist_of(a)?.add(c2.twist_of(b)?));
            simples.push(label);
        }
    }
    simples.sort();
    Ok(GradedCategoryData {
        ctx,
        simples,
        degrees,
        twists,
        rule: FusionRule::Product(Box::new(c1.rule.clone()), Box::new(c2.rule.clone())),
    })
}

/// Restriction to the simples of trivial total degree. Verifies that the
/// restricted fragment is fusion-closed relative to its parent: no nonzero
/// coefficient from two degree-zero simples lands on a nonzero-degree
/// simple of the parent.
pub fn equivariantize_trivial_degree<'a>(
    parent: &GradedCategoryData<'a>,
) -> Result<GradedCategoryData<'a>, EquivError> {
    let kept: Vec<ModuleLabel> = parent
        .simples
        .iter()
        .filter(|s| parent.degrees[*s].is_trivial())
        .cloned()
        .collect();
    for a in &kept {
        for b in &kept {
            for c in &parent.simples {
                if !parent.degrees[c].is_trivial() && parent.fusion_coeff(a, b, c)? > 0 {
                    return Err(EquivError::NotClosed(format!(
                        "({a}) (x) ({b}) hits nontrivial degree at {c}"
                    )));
                }
            }
        }
    }
    let degrees = kept
        .iter()
        .map(|s| (s.clone(), parent.degrees[s].clone()))
        .collect();
    let twists = kept
        .iter()
        .map(|s| (s.clone(), parent.twists[s].clone()))
        .collect();
    Ok(GradedCategoryData {
        ctx: parent.ctx,
        simples: kept,
        degrees,
        twists,
        rule: parent.rule.clone(),
    })
}

/// The level-comparison functor on simples:
/// `T_{0,lambda}` at level `B` maps to
/// `Pair(Reduced(lambda, f) at m_shift(1) . B, Lattice([lambda*], 1))`.
/// The image always has trivial total degree.
pub fn psi_image(
    ctx: &RootSystem,
    t: &ModuleLabel,
    f: &FTag,
) -> Result<ModuleLabel, EquivError> {
    match t {
        ModuleLabel::PrincipalT { level, lambda, mu } if lambda.is_zero() => {
            let star = ctx.star(mu).map_err(ObjectError::from)?;
            Ok(ModuleLabel::pair(
                ModuleLabel::reduced(level_m(level, 1), mu.clone(), f.clone())?,
                ModuleLabel::lattice(ctx.disc_class(&star), 1),
            )?)
        }
        other => Err(EquivError::WrongShape(format!(
            "psi_image expects T with zero first weight, got `{other}`"
        ))),
    }
}

// ---------------------------------------------------------------------------
// Corollary verifier
// ---------------------------------------------------------------------------

/// One twist-exponent difference reported by [`verify_cor_main`]: the
/// `k`-dependent parts cancel exactly, so the delta is a rational constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistDelta {
    pub lambda: Weight,
    /// Exact difference as a rational string.
    pub delta: String,
    /// The difference reduced to `[0, 1)`.
    pub delta_mod1: String,
}

/// Outcome of the equivariantization comparison at one `m` and bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorMainReport {
    pub m: i64,
    pub bound: u32,
    pub bijection_ok: bool,
    pub fusion_ok: bool,
    pub degree_ok: bool,
    pub additivity_ok: bool,
    pub twist_deltas: Vec<TwistDelta>,
    pub failures: Vec<String>,
}

impl CorMainReport {
    pub fn passed(&self) -> bool {
        self.bijection_ok && self.fusion_ok && self.degree_ok && self.additivity_ok
    }
}

/// Exhaustive-within-bound verifier for the equivalence between the reduced
/// fragment at the base level and the trivial-degree part of the
/// `m`-shifted fragment tensored with `Vect^m_{P/Q}`.
///
/// The candidate bijection sends `Reduced(lambda)` at the base level to
/// `(Reduced(lambda) at level_m(m), C_{-[lambda]})`. Checks: (a) it is a
/// bijection onto the trivial-degree simples, (b) fusion coefficients agree
/// on all triples inside the fragment, (c) degrees are compatible (the
/// lattice component determines `-[lambda]` and the total degree vanishes),
/// (d) `m = a + b` composes through the diagonal embedding
/// `C_x -> (C_x, C_x)` preserving coefficients and exponents, with
/// `level_m` additivity as an exact matrix identity. Twist deltas are
/// reported, not asserted. Failures are collected, never thrown.
pub fn verify_cor_main(ctx: &RootSystem, m: i64, bound: u32) -> CorMainReport {
    let f = FTag::principal();
    let base = LevelParam::identity();
    let km = level_m(&base, m);
    let mut failures: Vec<String> = Vec::new();

    let left = kl_fragment(ctx, &base, &f, bound).expect("principal fragment");
    let right_kl = kl_fragment(ctx, &km, &f, bound).expect("principal fragment");
    let pointed = vect_m(ctx, m);
    let product = graded_product(&right_kl, &pointed).expect("same context");
    let equiv = match equivariantize_trivial_degree(&product) {
        Ok(e) => e,
        Err(err) => {
            return CorMainReport {
                m,
                bound,
                bijection_ok: false,
                fusion_ok: false,
                degree_ok: false,
                additivity_ok: false,
                twist_deltas: vec![],
                failures: vec![format!("equivariantization failed: {err}")],
            };
        }
    };

    // Candidate bijection and (c) degree compatibility.
    let mut degree_ok = true;
    let mut image: Vec<ModuleLabel> = Vec::new();
    let mut lambdas: Vec<Weight> = Vec::new();
    for s in left.simples() {
        let ModuleLabel::Reduced { lambda, .. } = s else {
            unreachable!("left fragment has reduced simples")
        };
        let lattice_class = ctx.disc_neg(&ctx.disc_class(lambda));
        let img = ModuleLabel::pair(
            ModuleLabel::reduced(km, lambda.clone(), f.clone()).expect("dominant"),
            ModuleLabel::lattice(lattice_class.clone(), m),
        )
        .expect("shallow pair");
        match product.degree_of(&img) {
            Ok(d) if d.is_trivial() => {}
            Ok(d) => {
                degree_ok = false;
                failures.push(format!("degree of image of {lambda} is {d}, not [0]"));
            }
            Err(e) => {
                degree_ok = false;
                failures.push(format!("image of {lambda} missing from product: {e}"));
            }
        }
        if ctx.disc_add(&ctx.disc_class(lambda), &lattice_class)
            != ctx.disc_class(&Weight::zero(ctx.rank()))
        {
            degree_ok = false;
            failures.push(format!(
                "lattice component of {lambda} does not cancel its class"
            ));
        }
        image.push(img);
        lambdas.push(lambda.clone());
    }

    // (a) bijection onto the trivial-degree simples.
    let mut sorted_image = image.clone();
    sorted_image.sort();
    sorted_image.dedup();
    let bijection_ok = sorted_image.len() == image.len()
        && sorted_image.as_slice() == equiv.simples();
    if !bijection_ok {
        failures.push(format!(
            "bijection mismatch: {} candidate images vs {} trivial-degree simples",
            sorted_image.len(),
            equiv.simples().len()
        ));
    }

    // (b) fusion coefficients on all triples within the fragment.
    let n = left.simples().len();
    let triple_failures: Vec<String> = (0..n * n * n)
        .into_par_iter()
        .filter_map(|idx| {
            let (i, rest) = (idx / (n * n), idx % (n * n));
            let (j, k) = (rest / n, rest % n);
            let (a, b, c) = (&left.simples()[i], &left.simples()[j], &left.simples()[k]);
            let lhs = match left.fusion_coeff(a, b, c) {
                Ok(v) => v,
                Err(e) => return Some(format!("left fusion error at ({a},{b},{c}): {e}")),
            };
            let rhs = match equiv.fusion_coeff(&image[i], &image[j], &image[k]) {
                Ok(v) => v,
                Err(e) => return Some(format!("right fusion error at ({a},{b},{c}): {e}")),
            };
            (lhs != rhs).then(|| {
                format!("fusion coefficient mismatch at ({a},{b},{c}): {lhs} vs {rhs}")
            })
        })
        .collect();
    let fusion_ok = triple_failures.is_empty();
    failures.extend(triple_failures);

    // Twist-exponent deltas, reported as data.
    let mut twist_deltas = Vec::new();
    for (s, (img, lambda)) in left.simples().iter().zip(image.iter().zip(&lambdas)) {
        let lhs = left.twist_of(s).expect("left twist");
        let rhs = product.twist_of(img).expect("right twist");
        let delta = lhs.sub(rhs);
        match delta.as_constant() {
            Some(c) => {
                let c64 = crate::frac::from_big(&c).expect("small constant");
                twist_deltas.push(TwistDelta {
                    lambda: lambda.clone(),
                    delta: c.to_string(),
                    delta_mod1: mod1(c64).to_string(),
                });
            }
            None => failures.push(format!(
                "twist delta of {lambda} is k-dependent: {delta}"
            )),
        }
    }

    // (d) m-additivity through the diagonal embedding.
    let mut additivity_ok = true;
    for (a, b) in [(0, m), (1, m - 1)] {
        if let Err(msg) = check_diag_embedding(ctx, a, b) {
            additivity_ok = false;
            failures.push(msg);
        }
        if level_m(&level_m(&base, a), b) != km {
            additivity_ok = false;
            failures.push(format!("level_m additivity failed for {a} + {b}"));
        }
    }

    CorMainReport {
        m,
        bound,
        bijection_ok,
        fusion_ok,
        degree_ok,
        additivity_ok,
        twist_deltas,
        failures,
    }
}

/// Verifies `Vect^{a+b} -> Vect^a x Vect^b`, `C_x -> (C_x, C_x)`:
/// coefficients, quadratic exponents, and scalar monodromies all match.
fn check_diag_embedding(ctx: &RootSystem, a: i64, b: i64) -> Result<(), String> {
    let vm = vect_m(ctx, a + b);
    let va = vect_m(ctx, a);
    let vb = vect_m(ctx, b);
    let prod = graded_product(&va, &vb).expect("same context");

    let diag = |s: &ModuleLabel| -> ModuleLabel {
        let ModuleLabel::Lattice { delta, .. } = s else {
            unreachable!("pointed simples are lattice labels")
        };
        ModuleLabel::pair(
            ModuleLabel::lattice(delta.clone(), a),
            ModuleLabel::lattice(delta.clone(), b),
        )
        .expect("shallow pair")
    };

    for s in vm.simples() {
        let lhs = vm
            .twist_of(s)
            .map_err(|e| e.to_string())?
            .as_constant()
            .expect("pointed twists are constant");
        let rhs = prod
            .twist_of(&diag(s))
            .map_err(|e| e.to_string())?
            .as_constant()
            .expect("pointed twists are constant");
        let l = crate::frac::from_big(&lhs).expect("small");
        let r = crate::frac::from_big(&rhs).expect("small");
        if mod1(l) != mod1(r) {
            return Err(format!(
                "diag embedding {a}+{b}: quadratic exponent mismatch at {s}: {l} vs {r}"
            ));
        }
    }
    for x in vm.simples() {
        for y in vm.simples() {
            let lhs = vm.monodromy_of(x, y);
            let rhs = prod.monodromy_of(&diag(x), &diag(y));
            if lhs != rhs {
                return Err(format!(
                    "diag embedding {a}+{b}: monodromy mismatch at ({x}, {y})"
                ));
            }
            for z in vm.simples() {
                let lhs = vm.fusion_coeff(x, y, z).map_err(|e| e.to_string())?;
                let rhs = prod
                    .fusion_coeff(&diag(x), &diag(y), &diag(z))
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!(
                        "diag embedding {a}+{b}: coefficient mismatch at ({x}, {y}, {z})"
                    ));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac::frac;
    use crate::levels::level_gko;

    fn ctx(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap()).unwrap()
    }

    fn wt(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    #[test]
    fn vect_m_zero_has_trivial_exponents() {
        let a2 = ctx("A2");
        let v = vect_m(&a2, 0);
        assert_eq!(v.simples().len(), 3);
        for s in v.simples() {
            assert!(v.twist_of(s).unwrap().is_zero());
        }
        for x in v.simples() {
            for y in v.simples() {
                assert_eq!(v.monodromy_of(x, y), Some(frac(0, 1)));
            }
        }
    }

    #[test]
    fn vect_one_a1_quadratic_exponent() {
        let a1 = ctx("A1");
        let v = vect_m(&a1, 1);
        let c1 = ModuleLabel::lattice(a1.disc_class(&wt(&[1])), 1);
        assert_eq!(
            v.twist_of(&c1).unwrap(),
            &RatFunc::from_frac(frac(1, 2))
        );
        let c0 = ModuleLabel::lattice(a1.disc_class(&wt(&[0])), 1);
        assert!(v.twist_of(&c0).unwrap().is_zero());
        assert!(c0.is_vacuum());
    }

    #[test]
    fn polarization_identity() {
        for name in ["A1", "A2", "A3", "D4", "E6", "E7"] {
            let sys = ctx(name);
            for m in -2..=2 {
                let v = vect_m(&sys, m);
                for x in v.simples() {
                    for y in v.simples() {
                        let (ModuleLabel::Lattice { delta: dx, .. },
                             ModuleLabel::Lattice { delta: dy, .. }) = (x, y)
                        else {
                            panic!()
                        };
                        let mono = v.monodromy_of(x, y).unwrap();
                        let sum_class = sys.disc_add(dx, dy);
                        let expected = mod1(
                            sys.disc_quadratic(&sum_class, m)
                                - sys.disc_quadratic(dx, m)
                                - sys.disc_quadratic(dy, m),
                        );
                        assert_eq!(mono, expected, "{name}, m={m}: ({x}, {y})");
                    }
                }
            }
        }
    }

    #[test]
    fn vect_invariants_hold() {
        for name in ["A2", "D4"] {
            let sys = ctx(name);
            for m in [-1, 0, 2] {
                vect_m(&sys, m).check_invariants().unwrap();
            }
        }
    }

    #[test]
    fn product_with_trivial_pointed_category_keeps_coefficients() {
        let a1 = ctx("A1");
        let frag = kl_fragment(&a1, &LevelParam::identity(), &FTag::principal(), 2).unwrap();
        let e8_like = vect_m(&a1, 0);
        let prod = graded_product(&frag, &e8_like).unwrap();
        assert_eq!(
            prod.simples().len(),
            frag.simples().len() * a1.disc_order() as usize
        );
        // coefficient with the trivial class mirrors the KL coefficient
        let c0 = ModuleLabel::lattice(a1.disc_class(&wt(&[0])), 0);
        let r = |l: i64| {
            ModuleLabel::reduced(LevelParam::identity(), wt(&[l]), FTag::principal()).unwrap()
        };
        let p = |l: i64| ModuleLabel::pair(r(l), c0.clone()).unwrap();
        assert_eq!(prod.fusion_coeff(&p(1), &p(1), &p(2)).unwrap(), 1);
        assert_eq!(prod.fusion_coeff(&p(1), &p(1), &p(1)).unwrap(), 0);
    }

    #[test]
    fn pair_degrees_add_in_a2() {
        let a2 = ctx("A2");
        let frag = kl_fragment(&a2, &LevelParam::identity(), &FTag::principal(), 2).unwrap();
        let v = vect_m(&a2, 1);
        let prod = graded_product(&frag, &v).unwrap();
        let r = ModuleLabel::reduced(LevelParam::identity(), wt(&[1, 0]), FTag::principal())
            .unwrap();
        let c = ModuleLabel::lattice(a2.disc_class(&wt(&[0, 1])), 1);
        let p = ModuleLabel::pair(r, c).unwrap();
        // [omega1] + [omega2] = [0]
        assert!(prod.degree_of(&p).unwrap().is_trivial());
    }

    #[test]
    fn equivariantize_vect_alone_keeps_only_unit() {
        let a2 = ctx("A2");
        let v = vect_m(&a2, 1);
        let e = equivariantize_trivial_degree(&v).unwrap();
        assert_eq!(e.simples().len(), 1);
        assert!(e.simples()[0].is_vacuum());
    }

    #[test]
    fn equivariantized_fragment_is_degree_cancelling_family() {
        let a1 = ctx("A1");
        let frag = kl_fragment(&a1, &LevelParam::identity(), &FTag::principal(), 3).unwrap();
        let v = vect_m(&a1, 1);
        let prod = graded_product(&frag, &v).unwrap();
        let e = equivariantize_trivial_degree(&prod).unwrap();
        // survivors pair lambda with the inverse class -[lambda]
        for s in e.simples() {
            let ModuleLabel::Pair { left, right } = s else { panic!() };
            let ModuleLabel::Reduced { lambda, .. } = &**left else {
                panic!()
            };
            let ModuleLabel::Lattice { delta, .. } = &**right else {
                panic!()
            };
            assert_eq!(delta, &a1.disc_neg(&a1.disc_class(lambda)));
        }
        assert_eq!(e.simples().len(), frag.simples().len());
    }

    #[test]
    fn psi_image_examples() {
        let a2 = ctx("A2");
        let t =
            ModuleLabel::principal_t(LevelParam::identity(), wt(&[0, 0]), wt(&[1, 0])).unwrap();
        let img = psi_image(&a2, &t, &FTag::principal()).unwrap();
        let expected = ModuleLabel::pair(
            ModuleLabel::reduced(level_m(&LevelParam::identity(), 1), wt(&[1, 0]), FTag::principal())
                .unwrap(),
            ModuleLabel::lattice(a2.disc_class(&wt(&[0, 1])), 1),
        )
        .unwrap();
        assert_eq!(img, expected);
        assert!(degree(&a2, &img).is_trivial());

        // vacuum to vacuum
        let vac =
            ModuleLabel::principal_t(LevelParam::identity(), wt(&[0, 0]), wt(&[0, 0])).unwrap();
        assert!(psi_image(&a2, &vac, &FTag::principal()).unwrap().is_vacuum());

        // wrong shape refused
        let bad =
            ModuleLabel::principal_t(LevelParam::identity(), wt(&[1, 0]), wt(&[0, 0])).unwrap();
        assert!(psi_image(&a2, &bad, &FTag::principal()).is_err());

        // gko-level input gets its level composed with m_shift(1)
        let g = level_gko(&LevelParam::identity());
        let tg = ModuleLabel::principal_t(g, wt(&[0, 0]), wt(&[1, 0])).unwrap();
        let img = psi_image(&a2, &tg, &FTag::principal()).unwrap();
        let ModuleLabel::Pair { left, .. } = &img else { panic!() };
        assert_eq!(left.level(), Some(&level_m(&g, 1)));
    }

    #[test]
    fn cor_main_m0_is_identity_comparison() {
        let a1 = ctx("A1");
        let report = verify_cor_main(&a1, 0, 4);
        assert!(report.passed(), "failures: {:?}", report.failures);
        // all twist deltas vanish identically at m = 0
        for d in &report.twist_deltas {
            assert_eq!(d.delta, "0");
        }
    }

    #[test]
    fn cor_main_a1_m1() {
        let a1 = ctx("A1");
        let report = verify_cor_main(&a1, 1, 4);
        assert!(report.passed(), "failures: {:?}", report.failures);
        assert!(!report.twist_deltas.is_empty());
    }

    #[test]
    fn cor_main_negative_m_abstract_pointed() {
        let a2 = ctx("A2");
        let report = verify_cor_main(&a2, -1, 3);
        assert!(report.passed(), "failures: {:?}", report.failures);
    }

    #[test]
    fn cor_main_report_serializes_with_stable_fields() {
        let a1 = ctx("A1");
        let report = verify_cor_main(&a1, 1, 1);
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.starts_with(r#"{"m":1,"bound":1,"bijection_ok":"#));
    }
}
