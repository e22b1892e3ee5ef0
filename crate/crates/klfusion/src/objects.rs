//! Labels for the simple objects of the module categories and their exact
//! numerical attributes.
//!
//! A [`ModuleLabel`] names one simple object:
//!
//! * `Weyl(lambda)` - a Weyl module, simple in the affine Kazhdan-Lusztig
//!   category at irrational level;
//! * `Reduced(lambda, f)` - its quantum Hamiltonian reduction along the
//!   nilpotent tagged `f`. The tag is opaque and never interpreted: the
//!   reduced categories for different nilpotents are equivalent, so the
//!   decategorified data does not depend on it, but mixing tags in one
//!   fusion call is rejected.
//! * `PrincipalT(lambda, mu)` - the twisted principal reduction
//!   `T_{lambda,mu}` of a Weyl module;
//! * `Lattice(delta, m)` - the simple `C_delta` of `Vect^m_{P/Q}` (realized
//!   inside lattice vertex-algebra modules when `m > 0`);
//! * `Pair(left, right)` - a simple of a two-factor tensor product algebra;
//!   nesting deeper than one `Pair` is rejected.
//!
//! Levels are carried as Moebius transforms of the base formal variable
//! `k = kappa + h_dual`, so conformal weights of transformed labels are
//! computed by exact substitution.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use serde_json::{Map, Value};
use thiserror::Error;

use crate::frac::{frac, Frac};
use crate::levels::{LevelParam, RatFunc};
use crate::rootdata::{DiscClass, RootSystem, RootError, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ObjectError {
    #[error("label weights must be dominant: {0}")]
    NotDominant(Weight),
    #[error("pair labels cannot nest")]
    DeepPair,
    #[error("operation does not apply to this label kind: {0}")]
    WrongKind(String),
    #[error(
        "conformal weight of a non-principal reduction is not determined by \
         the decategorified data (tag `{0}`)"
    )]
    UnknownReducedWeight(String),
    #[error(transparent)]
    Root(#[from] RootError),
}

/// Opaque nilpotent tag attached to reduced labels.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FTag(String);

impl FTag {
    pub const PRINCIPAL: &'static str = "principal";

    pub fn new(tag: impl Into<String>) -> FTag {
        FTag(tag.into())
    }

    pub fn principal() -> FTag {
        FTag(Self::PRINCIPAL.to_string())
    }

    pub fn is_principal(&self) -> bool {
        self.0 == Self::PRINCIPAL
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for FTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Name of one simple object. Ordering is the derived lexicographic order,
/// used as the canonical term order everywhere (sums, JSON output).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleLabel {
    Weyl {
        level: LevelParam,
        lambda: Weight,
    },
    Reduced {
        level: LevelParam,
        lambda: Weight,
        f: FTag,
    },
    PrincipalT {
        level: LevelParam,
        lambda: Weight,
        mu: Weight,
    },
    Lattice {
        delta: DiscClass,
        m: i64,
    },
    Pair {
        left: Box<ModuleLabel>,
        right: Box<ModuleLabel>,
    },
}

impl ModuleLabel {
    pub fn weyl(level: LevelParam, lambda: Weight) -> Result<ModuleLabel, ObjectError> {
        if !lambda.is_dominant() {
            return Err(ObjectError::NotDominant(lambda));
        }
        Ok(ModuleLabel::Weyl { level, lambda })
    }

    pub fn reduced(
        level: LevelParam,
        lambda: Weight,
        f: FTag,
    ) -> Result<ModuleLabel, ObjectError> {
        if !lambda.is_dominant() {
            return Err(ObjectError::NotDominant(lambda));
        }
        Ok(ModuleLabel::Reduced { level, lambda, f })
    }

    pub fn principal_t(
        level: LevelParam,
        lambda: Weight,
        mu: Weight,
    ) -> Result<ModuleLabel, ObjectError> {
        for w in [&lambda, &mu] {
            if !w.is_dominant() {
                return Err(ObjectError::NotDominant(w.clone()));
            }
        }
        Ok(ModuleLabel::PrincipalT { level, lambda, mu })
    }

    pub fn lattice(delta: DiscClass, m: i64) -> ModuleLabel {
        ModuleLabel::Lattice { delta, m }
    }

    pub fn pair(left: ModuleLabel, right: ModuleLabel) -> Result<ModuleLabel, ObjectError> {
        if matches!(left, ModuleLabel::Pair { .. }) || matches!(right, ModuleLabel::Pair { .. })
        {
            return Err(ObjectError::DeepPair);
        }
        Ok(ModuleLabel::Pair {
            left: Box::new(left),
            right: Box::new(right),
        })
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            ModuleLabel::Weyl { .. } => "weyl",
            ModuleLabel::Reduced { .. } => "reduced",
            ModuleLabel::PrincipalT { .. } => "T",
            ModuleLabel::Lattice { .. } => "lattice",
            ModuleLabel::Pair { .. } => "pair",
        }
    }

    /// The level transform, when the label carries one.
    pub fn level(&self) -> Option<&LevelParam> {
        match self {
            ModuleLabel::Weyl { level, .. }
            | ModuleLabel::Reduced { level, .. }
            | ModuleLabel::PrincipalT { level, .. } => Some(level),
            ModuleLabel::Lattice { .. } | ModuleLabel::Pair { .. } => None,
        }
    }

    /// True for the unit object of the label's algebra (all weights zero).
    pub fn is_vacuum(&self) -> bool {
        match self {
            ModuleLabel::Weyl { lambda, .. } | ModuleLabel::Reduced { lambda, .. } => {
                lambda.is_zero()
            }
            ModuleLabel::PrincipalT { lambda, mu, .. } => lambda.is_zero() && mu.is_zero(),
            ModuleLabel::Lattice { delta, .. } => delta.is_trivial(),
            ModuleLabel::Pair { left, right } => left.is_vacuum() && right.is_vacuum(),
        }
    }
}

impl fmt::Display for ModuleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level_suffix = |lvl: &LevelParam| {
            if *lvl == LevelParam::identity() {
                String::new()
            } else {
                format!("@{lvl}")
            }
        };
        match self {
            ModuleLabel::Weyl { level, lambda } => {
                write!(f, "W:{lambda}{}", level_suffix(level))
            }
            ModuleLabel::Reduced { level, lambda, f: tag } => {
                write!(f, "R:{lambda}:{tag}{}", level_suffix(level))
            }
            ModuleLabel::PrincipalT { level, lambda, mu } => {
                write!(f, "T:{lambda};{mu}{}", level_suffix(level))
            }
            ModuleLabel::Lattice { delta, m } => write!(f, "L:{};{m}", delta.rep()),
            ModuleLabel::Pair { left, right } => write!(f, "({left})x({right})"),
        }
    }
}

impl Serialize for ModuleLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ModuleLabel::Weyl { level, lambda } => {
                let mut s = serializer.serialize_struct("ModuleLabel", 3)?;
                s.serialize_field("kind", "weyl")?;
                s.serialize_field("level", level)?;
                s.serialize_field("lambda", lambda)?;
                s.end()
            }
            ModuleLabel::Reduced { level, lambda, f } => {
                let mut s = serializer.serialize_struct("ModuleLabel", 4)?;
                s.serialize_field("kind", "reduced")?;
                s.serialize_field("level", level)?;
                s.serialize_field("lambda", lambda)?;
                s.serialize_field("f", f)?;
                s.end()
            }
            ModuleLabel::PrincipalT { level, lambda, mu } => {
                let mut s = serializer.serialize_struct("ModuleLabel", 4)?;
                s.serialize_field("kind", "T")?;
                s.serialize_field("level", level)?;
                s.serialize_field("lambda", lambda)?;
                s.serialize_field("mu", mu)?;
                s.end()
            }
            ModuleLabel::Lattice { delta, m } => {
                let mut s = serializer.serialize_struct("ModuleLabel", 3)?;
                s.serialize_field("kind", "lattice")?;
                s.serialize_field("delta", delta)?;
                s.serialize_field("m", m)?;
                s.end()
            }
            ModuleLabel::Pair { left, right } => {
                let mut s = serializer.serialize_struct("ModuleLabel", 3)?;
                s.serialize_field("kind", "pair")?;
                s.serialize_field("left", left)?;
                s.serialize_field("right", right)?;
                s.end()
            }
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct WeylRepr {
    level: LevelParam,
    lambda: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ReducedRepr {
    level: LevelParam,
    lambda: Vec<i64>,
    f: String,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PrincipalTRepr {
    level: LevelParam,
    lambda: Vec<i64>,
    mu: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct LatticeRepr {
    delta: Vec<i64>,
    m: i64,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PairRepr {
    left: ModuleLabel,
    right: ModuleLabel,
}

impl<'de> Deserialize<'de> for ModuleLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let mut map = Map::deserialize(deserializer)?;
        let kind = match map.remove("kind") {
            Some(Value::String(s)) => s,
            _ => return Err(D::Error::custom("label requires a string `kind` field")),
        };
        let rest = Value::Object(map);
        let fail = |e: serde_json::Error| D::Error::custom(e.to_string());
        let label = match kind.as_str() {
            "weyl" => {
                let r: WeylRepr = serde_json::from_value(rest).map_err(fail)?;
                ModuleLabel::weyl(r.level, Weight::new(r.lambda))
            }
            "reduced" => {
                let r: ReducedRepr = serde_json::from_value(rest).map_err(fail)?;
                ModuleLabel::reduced(r.level, Weight::new(r.lambda), FTag::new(r.f))
            }
            "T" => {
                let r: PrincipalTRepr = serde_json::from_value(rest).map_err(fail)?;
                ModuleLabel::principal_t(r.level, Weight::new(r.lambda), Weight::new(r.mu))
            }
            "lattice" => {
                let r: LatticeRepr = serde_json::from_value(rest).map_err(fail)?;
                // The representative is re-canonicalized against a context at
                // the CLI boundary; structurally it is carried as given.
                Ok(ModuleLabel::Lattice {
                    delta: DiscClass::from_raw_rep(Weight::new(r.delta)),
                    m: r.m,
                })
            }
            "pair" => {
                let r: PairRepr = serde_json::from_value(rest).map_err(fail)?;
                ModuleLabel::pair(r.left, r.right)
            }
            other => return Err(D::Error::custom(format!("unknown label kind `{other}`"))),
        };
        label.map_err(|e| D::Error::custom(e.to_string()))
    }
}

// ---------------------------------------------------------------------------
// Conformal weights, degrees, dualities
// ---------------------------------------------------------------------------

/// Conformal-weight (twist) exponent of a label as an element of `Q(k)`.
///
/// For `T_{lambda,mu}` this expands the highest-weight eigenvalue
/// `(Lambda, Lambda + 2 rho) / (2k) - (Lambda, rho)` at
/// `Lambda = lambda - k mu` and then substitutes the label's level
/// transform. `Weyl(lambda)` carries the Sugawara value
/// `(lambda, lambda + 2 rho) / (2k)`; `Reduced(lambda, f)` the principal
/// value (the `T_{lambda,0}` one) when `f` is the principal tag, and is
/// refused otherwise. `Lattice(delta, m)` reports the constant exponent
/// `m (delta, delta) / 2`. A shallow `Pair` adds its factors.
pub fn conformal_weight(ctx: &RootSystem, label: &ModuleLabel) -> Result<RatFunc, ObjectError> {
    match label {
        ModuleLabel::Weyl { level, lambda } => {
            let casimir = ctx.ip(lambda, &lambda.add(&ctx.rho().scaled(2)));
            Ok(RatFunc::from_laurent(1, &[casimir / frac(2, 1)]).substitute(level))
        }
        ModuleLabel::Reduced { level, lambda, f } => {
            if !f.is_principal() {
                return Err(ObjectError::UnknownReducedWeight(f.to_string()));
            }
            Ok(principal_t_weight(ctx, lambda, &Weight::zero(ctx.rank())).substitute(level))
        }
        ModuleLabel::PrincipalT { level, lambda, mu } => {
            Ok(principal_t_weight(ctx, lambda, mu).substitute(level))
        }
        ModuleLabel::Lattice { delta, m } => {
            let q = ctx.ip(delta.rep(), delta.rep()) * frac(*m, 1) / frac(2, 1);
            Ok(RatFunc::from_frac(q))
        }
        ModuleLabel::Pair { left, right } => {
            if matches!(**left, ModuleLabel::Pair { .. })
                || matches!(**right, ModuleLabel::Pair { .. })
            {
                return Err(ObjectError::DeepPair);
            }
            Ok(conformal_weight(ctx, left)?.add(&conformal_weight(ctx, right)?))
        }
    }
}

/// The base-level weight of `T_{lambda,mu}` as a Laurent polynomial
/// `A/k + B + C k` with
/// `A = (lambda, lambda + 2 rho)/2`,
/// `B = -(lambda, mu) - (lambda + mu, rho)`,
/// `C = (mu, mu)/2 + (mu, rho)`.
fn principal_t_weight(ctx: &RootSystem, lambda: &Weight, mu: &Weight) -> RatFunc {
    let rho = ctx.rho();
    let a = ctx.ip(lambda, &lambda.add(&rho.scaled(2))) / frac(2, 1);
    let b = -ctx.ip(lambda, mu) - ctx.ip(&lambda.add(mu), rho);
    let c = ctx.ip(mu, mu) / frac(2, 1) + ctx.ip(mu, rho);
    RatFunc::from_laurent(1, &[a, b, c])
}

/// The canonical `P/Q`-degree of a label: `[lambda]` for Weyl and reduced
/// labels, `[lambda + mu]` for `T_{lambda,mu}`, the class itself for
/// lattice labels, and the sum over factors for pairs.
pub fn degree(ctx: &RootSystem, label: &ModuleLabel) -> DiscClass {
    match label {
        ModuleLabel::Weyl { lambda, .. } | ModuleLabel::Reduced { lambda, .. } => {
            ctx.disc_class(lambda)
        }
        ModuleLabel::PrincipalT { lambda, mu, .. } => ctx.disc_class(&lambda.add(mu)),
        ModuleLabel::Lattice { delta, .. } => ctx.disc_class(delta.rep()),
        ModuleLabel::Pair { left, right } => {
            ctx.disc_add(&degree(ctx, left), &degree(ctx, right))
        }
    }
}

/// Feigin-Frenkel duality on labels: `T_{lambda,mu}` at level `L` goes to
/// `T_{mu,lambda}` at level `ff_dual . L`.
pub fn ff_dual_label(label: &ModuleLabel) -> Result<ModuleLabel, ObjectError> {
    match label {
        ModuleLabel::PrincipalT { level, lambda, mu } => Ok(ModuleLabel::PrincipalT {
            level: crate::levels::level_ff_dual(level),
            lambda: mu.clone(),
            mu: lambda.clone(),
        }),
        other => Err(ObjectError::WrongKind(other.kind_name().to_string())),
    }
}

/// Contragredient label: applies `star` to every weight entry and negates
/// lattice classes. An involution.
pub fn dual_label(ctx: &RootSystem, label: &ModuleLabel) -> ModuleLabel {
    let star = |w: &Weight| ctx.star(w).expect("label weights are dominant");
    match label {
        ModuleLabel::Weyl { level, lambda } => ModuleLabel::Weyl {
            level: *level,
            lambda: star(lambda),
        },
        ModuleLabel::Reduced { level, lambda, f } => ModuleLabel::Reduced {
            level: *level,
            lambda: star(lambda),
            f: f.clone(),
        },
        ModuleLabel::PrincipalT { level, lambda, mu } => ModuleLabel::PrincipalT {
            level: *level,
            lambda: star(lambda),
            mu: star(mu),
        },
        ModuleLabel::Lattice { delta, m } => ModuleLabel::Lattice {
            delta: ctx.disc_neg(delta),
            m: *m,
        },
        ModuleLabel::Pair { left, right } => ModuleLabel::Pair {
            left: Box::new(dual_label(ctx, left)),
            right: Box::new(dual_label(ctx, right)),
        },
    }
}

/// Reduces the constant Laurent coefficient of a twist exponent mod 1;
/// `None` when the exponent has no Laurent expansion around `k`.
pub fn twist_constant_mod1(h: &RatFunc) -> Option<Frac> {
    let laurent = h.laurent()?;
    let constant = laurent
        .iter()
        .find(|(p, _)| *p == 0)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(|| num::BigRational::from_integer(0.into()));
    crate::frac::from_big(&constant).map(crate::frac::mod1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::levels::{level_ff_dual, ratfunc_substitute};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn ctx(name: &str) -> RootSystem {
        RootSystem::new(name.parse().unwrap()).unwrap()
    }

    fn wt(coords: &[i64]) -> Weight {
        Weight::new(coords.to_vec())
    }

    fn t_label(ctx_rank: usize, lambda: &[i64], mu: &[i64]) -> ModuleLabel {
        assert_eq!(ctx_rank, lambda.len());
        ModuleLabel::principal_t(LevelParam::identity(), wt(lambda), wt(mu)).unwrap()
    }

    #[test]
    fn conformal_weight_examples() {
        let a1 = ctx("A1");
        // T_{omega1, 0}: 3/(4k) - 1/2
        let h = conformal_weight(&a1, &t_label(1, &[1], &[0])).unwrap();
        assert_eq!(h, RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)]));

        // vacuum
        let h0 = conformal_weight(&a1, &t_label(1, &[0], &[0])).unwrap();
        assert!(h0.is_zero());

        // h(T_{w1,w1}) - h(T_{w1,0}) - h(T_{0,w1}) = -(w1, w1) = -1/2
        let h11 = conformal_weight(&a1, &t_label(1, &[1], &[1])).unwrap();
        let h10 = conformal_weight(&a1, &t_label(1, &[1], &[0])).unwrap();
        let h01 = conformal_weight(&a1, &t_label(1, &[0], &[1])).unwrap();
        let defect = h11.sub(&h10).sub(&h01);
        assert_eq!(defect, RatFunc::from_frac(frac(-1, 2)));
    }

    #[test]
    fn confweights_identity_randomized() {
        let mut rng = StdRng::seed_from_u64(41);
        for name in ["A1", "A2", "A3", "D4"] {
            let sys = ctx(name);
            for _ in 0..50 {
                let l = Weight::new((0..sys.rank()).map(|_| rng.gen_range(0..=4)).collect());
                let m = Weight::new((0..sys.rank()).map(|_| rng.gen_range(0..=4)).collect());
                let hlm = conformal_weight(
                    &sys,
                    &ModuleLabel::principal_t(LevelParam::identity(), l.clone(), m.clone())
                        .unwrap(),
                )
                .unwrap();
                let hl0 = conformal_weight(
                    &sys,
                    &ModuleLabel::principal_t(
                        LevelParam::identity(),
                        l.clone(),
                        Weight::zero(sys.rank()),
                    )
                    .unwrap(),
                )
                .unwrap();
                let h0m = conformal_weight(
                    &sys,
                    &ModuleLabel::principal_t(
                        LevelParam::identity(),
                        Weight::zero(sys.rank()),
                        m.clone(),
                    )
                    .unwrap(),
                )
                .unwrap();
                let defect = hlm.sub(&hl0).sub(&h0m);
                assert_eq!(
                    defect,
                    RatFunc::from_frac(-sys.ip(&l, &m)),
                    "{name}: {l} {m}"
                );
            }
        }
    }

    #[test]
    fn laurent_shape_of_one_sided_labels() {
        let a2 = ctx("A2");
        // T_{lambda,0} has only powers k^{-1}, k^0
        let h = conformal_weight(&a2, &t_label(2, &[2, 1], &[0, 0])).unwrap();
        assert!(h.laurent().unwrap().iter().all(|(p, _)| *p <= 0));
        // T_{0,mu} is polynomial in k
        let h = conformal_weight(&a2, &t_label(2, &[0, 0], &[2, 1])).unwrap();
        assert!(h.laurent().unwrap().iter().all(|(p, _)| *p >= 0));
    }

    #[test]
    fn weyl_and_reduced_weights() {
        let a1 = ctx("A1");
        let weyl = ModuleLabel::weyl(LevelParam::identity(), wt(&[1])).unwrap();
        assert_eq!(
            conformal_weight(&a1, &weyl).unwrap(),
            RatFunc::from_laurent(1, &[frac(3, 4)])
        );
        let red =
            ModuleLabel::reduced(LevelParam::identity(), wt(&[1]), FTag::principal()).unwrap();
        assert_eq!(
            conformal_weight(&a1, &red).unwrap(),
            RatFunc::from_laurent(1, &[frac(3, 4), frac(-1, 2)])
        );
        let other =
            ModuleLabel::reduced(LevelParam::identity(), wt(&[1]), FTag::new("subregular"))
                .unwrap();
        assert!(matches!(
            conformal_weight(&a1, &other),
            Err(ObjectError::UnknownReducedWeight(_))
        ));
    }

    #[test]
    fn lattice_weight_attribute() {
        let a1 = ctx("A1");
        let c = a1.disc_class(&wt(&[1]));
        let l = ModuleLabel::lattice(c, 1);
        assert_eq!(
            conformal_weight(&a1, &l).unwrap(),
            RatFunc::from_frac(frac(1, 4))
        );
    }

    #[test]
    fn degree_examples() {
        let a1 = ctx("A1");
        let w3 = ModuleLabel::weyl(LevelParam::identity(), wt(&[3])).unwrap();
        assert_eq!(degree(&a1, &w3).rep(), &wt(&[1]));
        let w0 = ModuleLabel::weyl(LevelParam::identity(), wt(&[0])).unwrap();
        assert!(degree(&a1, &w0).is_trivial());

        let a2 = ctx("A2");
        // [omega1 + omega1] = [omega2] in P/Q = Z/3
        let t = t_label(2, &[1, 0], &[1, 0]);
        assert_eq!(degree(&a2, &t).rep(), &wt(&[0, 1]));
    }

    #[test]
    fn ff_dual_swaps_and_substitutes() {
        let a1 = ctx("A1");
        let t = t_label(1, &[1], &[2]);
        let dual = ff_dual_label(&t).unwrap();
        match &dual {
            ModuleLabel::PrincipalT { level, lambda, mu } => {
                assert_eq!(level, &level_ff_dual(&LevelParam::identity()));
                assert_eq!(lambda, &wt(&[2]));
                assert_eq!(mu, &wt(&[1]));
            }
            _ => panic!("wrong kind"),
        }
        // h(label) equals h(swapped) after the k -> 1/k substitution
        let h = conformal_weight(&a1, &t).unwrap();
        let h_dual_base =
            conformal_weight(&a1, &t_label(1, &[2], &[1])).unwrap();
        assert_eq!(
            h,
            ratfunc_substitute(&h_dual_base, &LevelParam::ff_dual())
        );
        assert_eq!(h, conformal_weight(&a1, &dual).unwrap());

        let weyl = ModuleLabel::weyl(LevelParam::identity(), wt(&[1])).unwrap();
        assert!(ff_dual_label(&weyl).is_err());
    }

    #[test]
    fn ff_duality_randomized() {
        let mut rng = StdRng::seed_from_u64(43);
        for name in ["A2", "A3", "D4"] {
            let sys = ctx(name);
            for _ in 0..34 {
                let l = Weight::new((0..sys.rank()).map(|_| rng.gen_range(0..=3)).collect());
                let m = Weight::new((0..sys.rank()).map(|_| rng.gen_range(0..=3)).collect());
                let t = ModuleLabel::principal_t(LevelParam::identity(), l, m).unwrap();
                let h = conformal_weight(&sys, &t).unwrap();
                let hd = conformal_weight(&sys, &ff_dual_label(&t).unwrap()).unwrap();
                assert_eq!(h, hd, "{name}");
            }
        }
    }

    #[test]
    fn dual_label_is_involution_and_negates_degree() {
        let a2 = ctx("A2");
        let t = t_label(2, &[2, 0], &[1, 1]);
        let d = dual_label(&a2, &t);
        match &d {
            ModuleLabel::PrincipalT { lambda, mu, .. } => {
                assert_eq!(lambda, &wt(&[0, 2]));
                assert_eq!(mu, &wt(&[1, 1]));
            }
            _ => panic!("wrong kind"),
        }
        assert_eq!(dual_label(&a2, &d), t);
        assert_eq!(degree(&a2, &d), a2.disc_neg(&degree(&a2, &t)));

        let zero = t_label(2, &[0, 0], &[0, 0]);
        assert_eq!(dual_label(&a2, &zero), zero);
    }

    #[test]
    fn pair_constructor_rejects_nesting() {
        let a1 = ctx("A1");
        let w = ModuleLabel::weyl(LevelParam::identity(), wt(&[1])).unwrap();
        let l = ModuleLabel::lattice(a1.disc_class(&wt(&[0])), 1);
        let p = ModuleLabel::pair(w.clone(), l).unwrap();
        assert!(matches!(
            ModuleLabel::pair(p.clone(), w),
            Err(ObjectError::DeepPair)
        ));
    }

    #[test]
    fn label_json_golden() {
        let t = t_label(2, &[1, 0], &[0, 1]);
        assert_eq!(
            serde_json::to_string(&t).unwrap(),
            r#"{"kind":"T","level":{"a":1,"b":0,"c":0,"d":1},"lambda":[1,0],"mu":[0,1]}"#
        );
        let back: ModuleLabel = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        assert_eq!(back, t);
    }

    #[test]
    fn label_json_rejects_unknown_fields_and_bad_kinds() {
        let bad = r#"{"kind":"T","level":{"a":1,"b":0,"c":0,"d":1},"lambda":[1],"mu":[0],"x":3}"#;
        assert!(serde_json::from_str::<ModuleLabel>(bad).is_err());
        let bad = r#"{"kind":"mystery","lambda":[1]}"#;
        assert!(serde_json::from_str::<ModuleLabel>(bad).is_err());
        let bad = r#"{"kind":"weyl","level":{"a":1,"b":0,"c":0,"d":1},"lambda":[-1]}"#;
        assert!(serde_json::from_str::<ModuleLabel>(bad).is_err());
    }

    #[test]
    fn twist_constant_helper() {
        let h = RatFunc::from_laurent(1, &[frac(3, 4), frac(-5, 2)]);
        assert_eq!(twist_constant_mod1(&h), Some(frac(1, 2)));
        let pure_pole = RatFunc::from_laurent(1, &[frac(1, 1)]);
        assert_eq!(twist_constant_mod1(&pure_pole), Some(frac(0, 1)));
    }
}
