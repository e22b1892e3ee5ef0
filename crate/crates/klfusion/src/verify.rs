//! Property-verification suites.
//!
//! Each suite checks one family of structural identities on randomized or
//! exhaustive desk-scale samples and reports the failures it found instead
//! of panicking. The CLI `verify` subcommand and the acceptance test target
//! both run through these entry points, so a reported pass is the same
//! computation in both places.
//!
//! Sampling is seeded: the effective seed mixes the user seed with the suite
//! name and Lie type, so per-suite results are reproducible independently of
//! which other suites run.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::charalg::{tensor_decompose, BruteOracle};
use crate::equivcat::{verify_cor_main, CorMainReport};
use crate::frac::{from_big, mod1};
use crate::fusion::{
    branch_gko, branch_urod_reduced, branch_urod_t, branch_urod_t_at, coset_com, fuse,
    fuse_sums, induce_f, induce_f_sum, induce_v, induce_v_sum, monodromy_exponent,
    reduce_label, reduce_sum, LabeledSum,
};
use crate::levels::{level_gko, LevelParam, RatFunc};
use crate::objects::{conformal_weight, ff_dual_label, FTag, ModuleLabel};
use crate::rootdata::{RootSystem, Weight};

/// Result of one suite run on one context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub lie_type: String,
    pub checks: u64,
    pub failures: Vec<String>,
    /// Per-`m` reports, populated by the equivariantization suite only.
    pub cor_main: Vec<CorMainReport>,
}

impl SuiteReport {
    fn new(suite: &str, ctx: &RootSystem) -> SuiteReport {
        SuiteReport {
            suite: suite.to_string(),
            lie_type: ctx.lie_type().to_string(),
            checks: 0,
            failures: Vec::new(),
            cor_main: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }
}

impl Serialize for SuiteReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let extra = usize::from(!self.cor_main.is_empty());
        let mut s = serializer.serialize_struct("SuiteReport", 5 + extra)?;
        s.serialize_field("suite", &self.suite)?;
        s.serialize_field("type", &self.lie_type)?;
        s.serialize_field("checks", &self.checks)?;
        s.serialize_field("failures", &self.failures)?;
        s.serialize_field("pass", &self.passed())?;
        if !self.cor_main.is_empty() {
            s.serialize_field("reports", &self.cor_main)?;
        }
        s.end()
    }
}

/// The named verification suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Confweights,
    FfDual,
    Oracle,
    FusionRing,
    Branching,
    Monodromy,
    Induction,
    CorMain,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Confweights,
        Suite::FfDual,
        Suite::Oracle,
        Suite::FusionRing,
        Suite::Branching,
        Suite::Monodromy,
        Suite::Induction,
        Suite::CorMain,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Confweights => "confweights",
            Suite::FfDual => "ffdual",
            Suite::Oracle => "oracle",
            Suite::FusionRing => "fusionring",
            Suite::Branching => "branching",
            Suite::Monodromy => "monodromy",
            Suite::Induction => "induction",
            Suite::CorMain => "cormain",
        }
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        Suite::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|k| k.name()).collect();
                format!("unknown suite `{s}` (expected one of {} or all)", names.join(", "))
            })
    }
}

/// Runs one suite with the given sample count, seed, and height bound.
pub fn run_suite(
    suite: Suite,
    ctx: &RootSystem,
    samples: u64,
    seed: u64,
    bound: u32,
) -> SuiteReport {
    let mut rng = suite_rng(suite, ctx, seed);
    match suite {
        Suite::Confweights => confweights(ctx, samples, &mut rng),
        Suite::FfDual => ff_dual(ctx, samples, &mut rng),
        Suite::Oracle => oracle(ctx, oracle_coord_cap(ctx)),
        Suite::FusionRing => fusion_ring(ctx, samples, &mut rng),
        Suite::Branching => branching(ctx, samples, &mut rng, bound),
        Suite::Monodromy => monodromy(ctx, samples, &mut rng),
        Suite::Induction => induction(ctx, samples, &mut rng, bound),
        Suite::CorMain => cor_main(ctx, -2..=2, bound),
    }
}

fn suite_rng(suite: Suite, ctx: &RootSystem, seed: u64) -> ChaCha8Rng {
    let mut h = DefaultHasher::new();
    suite.name().hash(&mut h);
    ctx.lie_type().to_string().hash(&mut h);
    ChaCha8Rng::seed_from_u64(seed ^ h.finish())
}

fn random_dominant(rng: &mut ChaCha8Rng, rank: usize, cap: i64) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(0..=cap)).collect())
}

/// Coordinate cap for suites that expand character tables; chosen so that
/// desk-scale runs stay in seconds.
fn tensor_coord_cap(ctx: &RootSystem) -> i64 {
    match (ctx.lie_type().series(), ctx.rank()) {
        (crate::rootdata::Series::A, 1) => 4,
        (crate::rootdata::Series::A, 2) => 3,
        (crate::rootdata::Series::A, 3) => 2,
        _ => 1,
    }
}

/// Sampler for the slots of two-weight labels: full box for ranks 1 and 2,
/// zero-or-fundamental weights above (the slot-wise products of the
/// two-weight labels square the table sizes).
fn random_slot_weight(rng: &mut ChaCha8Rng, ctx: &RootSystem, cap: i64) -> Weight {
    if ctx.rank() <= 2 {
        return random_dominant(rng, ctx.rank(), cap);
    }
    let pick = rng.gen_range(0..=ctx.rank());
    let mut coords = vec![0i64; ctx.rank()];
    if pick < ctx.rank() {
        coords[pick] = 1;
    }
    Weight::new(coords)
}

/// Exhaustive coordinate cap used by the oracle-equivalence sweep.
fn oracle_coord_cap(ctx: &RootSystem) -> i64 {
    match ctx.rank() {
        1 | 2 => 4,
        _ => 2,
    }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// `h(T_{lambda,mu}) - h(T_{lambda,0}) - h(T_{0,mu}) = -(lambda, mu)` as an
/// exact identity in `Q(k)`.
pub fn confweights(ctx: &RootSystem, samples: u64, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Confweights.name(), ctx);
    let zero = Weight::zero(ctx.rank());
    for _ in 0..samples {
        let l = random_dominant(rng, ctx.rank(), 4);
        let m = random_dominant(rng, ctx.rank(), 4);
        let h = |a: &Weight, b: &Weight| {
            conformal_weight(
                ctx,
                &ModuleLabel::principal_t(LevelParam::identity(), a.clone(), b.clone())
                    .expect("dominant"),
            )
            .expect("T labels have weights")
        };
        let defect = h(&l, &m).sub(&h(&l, &zero)).sub(&h(&zero, &m));
        let expected = RatFunc::from_frac(-ctx.ip(&l, &m));
        report.check(defect == expected, || {
            format!("confweights defect mismatch at ({l}; {m}): {defect} vs {expected}")
        });
    }
    report
}

/// `h(T_{lambda,mu})` equals the `k -> 1/k` substitution of
/// `h(T_{mu,lambda})`, exactly.
pub fn ff_dual(ctx: &RootSystem, samples: u64, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::FfDual.name(), ctx);
    for _ in 0..samples {
        let l = random_dominant(rng, ctx.rank(), 4);
        let m = random_dominant(rng, ctx.rank(), 4);
        let t = ModuleLabel::principal_t(LevelParam::identity(), l.clone(), m.clone())
            .expect("dominant");
        let h = conformal_weight(ctx, &t).expect("T label");
        let swapped = ModuleLabel::principal_t(LevelParam::identity(), m.clone(), l.clone())
            .expect("dominant");
        let h_swapped = conformal_weight(ctx, &swapped).expect("T label");
        let substituted =
            crate::levels::ratfunc_substitute(&h_swapped, &LevelParam::ff_dual());
        report.check(h == substituted, || {
            format!("ffdual substitution mismatch at ({l}; {m})")
        });
        // the label-level route must agree
        let dual = ff_dual_label(&t).expect("T label");
        let h_dual = conformal_weight(ctx, &dual).expect("T label");
        report.check(h == h_dual, || {
            format!("ffdual label route mismatch at ({l}; {m})")
        });
    }
    report
}

/// Klimyk decomposition equals the brute-force character-product oracle on
/// every dominant pair within the coordinate cap.
pub fn oracle(ctx: &RootSystem, coord_cap: i64) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Oracle.name(), ctx);
    let mut session = match BruteOracle::new(ctx) {
        Ok(s) => s,
        Err(e) => {
            report.checks = 1;
            report.failures.push(format!("oracle unavailable: {e}"));
            return report;
        }
    };
    let mut pool = Vec::new();
    collect_box(ctx.rank(), coord_cap, &mut vec![0; ctx.rank()], 0, &mut pool);
    for l in &pool {
        for m in &pool {
            let fast = tensor_decompose(ctx, l, m).expect("dominant");
            let brute = session.tensor(l, m).expect("within guard");
            report.check(fast == brute, || {
                format!("oracle mismatch at ({l}) (x) ({m})")
            });
        }
    }
    report
}

fn collect_box(rank: usize, cap: i64, coords: &mut Vec<i64>, i: usize, out: &mut Vec<Weight>) {
    if i == rank {
        out.push(Weight::new(coords.clone()));
        return;
    }
    for c in 0..=cap {
        coords[i] = c;
        collect_box(rank, cap, coords, i + 1, out);
    }
    coords[i] = 0;
}

/// Fusion-ring laws (unit, commutativity, associativity, duality) for all
/// three module kinds plus the lattice group law, and the ring isomorphism
/// property of the reduction functor, on random triples.
pub fn fusion_ring(ctx: &RootSystem, triples: u64, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::FusionRing.name(), ctx);
    let cap = tensor_coord_cap(ctx);
    let level = LevelParam::identity();
    let tag = FTag::new("verify");
    for i in 0..triples {
        let t_kind = i % 3 == 2;
        let draw = |rng: &mut ChaCha8Rng| {
            if t_kind {
                random_slot_weight(rng, ctx, cap)
            } else {
                random_dominant(rng, ctx.rank(), cap)
            }
        };
        let (wa, wa2, wb, wb2, wc, wc2) = (
            draw(rng),
            draw(rng),
            draw(rng),
            draw(rng),
            draw(rng),
            draw(rng),
        );
        // rotate through the three same-kind fusion cases
        let mk: Box<dyn Fn(&Weight, &Weight) -> ModuleLabel> = match i % 3 {
            0 => Box::new(|w: &Weight, _: &Weight| ModuleLabel::weyl(level, w.clone()).unwrap()),
            1 => Box::new(|w: &Weight, _: &Weight| {
                ModuleLabel::reduced(level, w.clone(), tag.clone()).unwrap()
            }),
            _ => Box::new(|w: &Weight, w2: &Weight| {
                ModuleLabel::principal_t(level, w.clone(), w2.clone()).unwrap()
            }),
        };
        let (a, b, c) = (mk(&wa, &wa2), mk(&wb, &wb2), mk(&wc, &wc2));
        let zero = Weight::zero(ctx.rank());
        let vacuum = mk(&zero, &zero);

        let unit = fuse(ctx, &vacuum, &a).expect("fusible");
        report.check(unit == LabeledSum::singleton(a.clone()), || {
            format!("unit law failed at {a}")
        });

        let ab = fuse(ctx, &a, &b).expect("fusible");
        let ba = fuse(ctx, &b, &a).expect("fusible");
        report.check(ab == ba, || format!("commutativity failed at ({a}, {b})"));

        let bc = fuse(ctx, &b, &c).expect("fusible");
        let left = fuse_sums(ctx, &ab, &LabeledSum::singleton(c.clone())).expect("fusible");
        let right = fuse_sums(ctx, &LabeledSum::singleton(a.clone()), &bc).expect("fusible");
        report.check(left == right, || {
            format!("associativity failed at ({a}, {b}, {c})")
        });

        // the coefficient at the vacuum detects exactly the dual pair
        let dual_a = crate::objects::dual_label(ctx, &a);
        report.check(fuse(ctx, &a, &dual_a).expect("fusible").get(&vacuum) == 1, || {
            format!("duality law failed: no vacuum in {a} x {dual_a}")
        });
        let expected = u64::from(b == dual_a);
        report.check(ab.get(&vacuum) == expected, || {
            format!("duality law failed: vacuum coefficient of {a} x {b}")
        });

        // reduction is a ring map (checked on the Weyl rounds)
        if let (ModuleLabel::Weyl { .. }, ModuleLabel::Weyl { .. }) = (&a, &b) {
            let reduced_route = reduce_sum(&ab, &tag).expect("weyl sum");
            let direct_route = fuse(
                ctx,
                &reduce_label(&a, &tag).expect("weyl"),
                &reduce_label(&b, &tag).expect("weyl"),
            )
            .expect("fusible");
            report.check(reduced_route == direct_route, || {
                format!("reduction is not a ring map at ({a}, {b})")
            });
        }

        // lattice labels obey the group law of P/Q
        let reps = ctx.disc_reps();
        let d1 = ctx.disc_class(&reps[(i as usize) % reps.len()]);
        let d2 = ctx.disc_class(&reps[(i as usize + 1) % reps.len()]);
        let l1 = ModuleLabel::lattice(d1.clone(), 1);
        let l2 = ModuleLabel::lattice(d2.clone(), 1);
        let product = fuse(ctx, &l1, &l2).expect("fusible");
        let expected =
            LabeledSum::singleton(ModuleLabel::lattice(ctx.disc_add(&d1, &d2), 1));
        report.check(product == expected, || {
            format!("lattice group law failed at ({d1}, {d2})")
        });
    }
    report
}

/// Branching laws: multiplicity one, exact congruence-class membership,
/// visible truncation, and double-branching order independence.
pub fn branching(ctx: &RootSystem, samples: u64, rng: &mut ChaCha8Rng, bound: u32) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Branching.name(), ctx);
    let tag = FTag::new("verify");
    for _ in 0..samples {
        let lambda = random_dominant(rng, ctx.rank(), 2);
        let mu = random_dominant(rng, ctx.rank(), 2);
        let nu = random_dominant(rng, ctx.rank(), 1);

        let gko_sum = branch_gko(ctx, &lambda, &mu, bound).expect("dominant");
        check_branch_terms(ctx, &mut report, &gko_sum, &lambda.add(&mu), bound, "gko");

        let urod = branch_urod_reduced(ctx, &lambda, &mu, &tag, bound).expect("dominant");
        check_branch_terms(ctx, &mut report, &urod, &lambda.add(&mu), bound, "urod-reduced");

        let urod_t = branch_urod_t(ctx, &lambda, &mu, &nu, bound).expect("dominant");
        check_branch_terms(
            ctx,
            &mut report,
            &urod_t,
            &lambda.add(&mu).add(&nu),
            bound,
            "urod-T",
        );

        // Double branching: re-branch every T-factor of the coset output and
        // re-collect. The multiset of terminal labels must not depend on the
        // order of application or on the grouping.
        let terminal_forward = double_branch(ctx, &gko_sum, &nu, bound, false);
        let terminal_reverse = double_branch(ctx, &gko_sum, &nu, bound, true);
        report.check(terminal_forward == terminal_reverse, || {
            format!("double branching is order-dependent at ({lambda}; {mu}; {nu})")
        });
        let flat = double_branch_flat(ctx, &gko_sum, &nu, bound);
        report.check(terminal_forward == flat, || {
            format!("double branching is grouping-dependent at ({lambda}; {mu}; {nu})")
        });
    }
    report
}

fn check_branch_terms(
    ctx: &RootSystem,
    report: &mut SuiteReport,
    sum: &LabeledSum,
    class_of: &Weight,
    bound: u32,
    what: &str,
) {
    report.check(sum.truncated && sum.bound == Some(bound), || {
        format!("{what}: truncation must be visible")
    });
    let class = ctx.disc_class(class_of);
    for (label, &mult) in sum.terms() {
        report.check(mult == 1, || format!("{what}: multiplicity {mult} at {label}"));
        let ModuleLabel::Pair { left, .. } = label else {
            report.failures.push(format!("{what}: non-pair term {label}"));
            continue;
        };
        let branched = match &**left {
            ModuleLabel::Weyl { lambda, .. }
            | ModuleLabel::Reduced { lambda, .. }
            | ModuleLabel::PrincipalT { lambda, .. } => lambda,
            other => {
                report
                    .failures
                    .push(format!("{what}: unexpected first factor {other}"));
                continue;
            }
        };
        report.check(ctx.disc_class(branched) == class, || {
            format!("{what}: {branched} escapes the congruence class")
        });
        report.check(ctx.height(branched) <= crate::frac::frac(bound as i64, 1), || {
            format!("{what}: {branched} exceeds the height bound")
        });
    }
}

/// Applies the T-branching to every second factor of a coset-branched sum,
/// accumulating the branched outputs (optionally iterating in reverse).
fn double_branch(
    ctx: &RootSystem,
    first: &LabeledSum,
    nu2: &Weight,
    bound: u32,
    reverse: bool,
) -> LabeledSum {
    let mut terms: Vec<(&ModuleLabel, u64)> =
        first.terms().iter().map(|(l, &m)| (l, m)).collect();
    if reverse {
        terms.reverse();
    }
    let mut out = LabeledSum::new();
    out.truncated = true;
    out.bound = Some(bound);
    for (label, mult) in terms {
        let ModuleLabel::Pair { right, .. } = label else {
            unreachable!("branch outputs are pairs")
        };
        let ModuleLabel::PrincipalT { level, lambda, mu } = &**right else {
            unreachable!("second factors are T labels")
        };
        let base = LevelParam::shift().inverse().compose(level);
        let second =
            branch_urod_t_at(ctx, &base, lambda, mu, nu2, bound).expect("dominant");
        for (l, &m) in second.terms() {
            out.add_term(l.clone(), m * mult);
        }
    }
    out
}

/// The same double branching computed in a single flat enumeration.
fn double_branch_flat(
    ctx: &RootSystem,
    first: &LabeledSum,
    nu2: &Weight,
    bound: u32,
) -> LabeledSum {
    let mut out = LabeledSum::new();
    out.truncated = true;
    out.bound = Some(bound);
    let mut batches: Vec<LabeledSum> = Vec::new();
    for (label, &mult) in first.terms() {
        let ModuleLabel::Pair { right, .. } = label else {
            unreachable!()
        };
        let ModuleLabel::PrincipalT { level, lambda, mu } = &**right else {
            unreachable!()
        };
        let base = LevelParam::shift().inverse().compose(level);
        let mut batch = branch_urod_t_at(ctx, &base, lambda, mu, nu2, bound).expect("dominant");
        if mult != 1 {
            let scaled: LabeledSum = batch
                .terms()
                .iter()
                .map(|(l, &m)| (l.clone(), m * mult))
                .collect();
            batch = scaled;
        }
        batches.push(batch);
    }
    for batch in batches {
        for (l, &m) in batch.terms() {
            out.add_term(l.clone(), m);
        }
    }
    out
}

/// Scalar monodromy: `-(lambda,mu) mod 1`, consistent with the mod-1
/// constant defect of the balancing identity.
pub fn monodromy(ctx: &RootSystem, samples: u64, rng: &mut ChaCha8Rng) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Monodromy.name(), ctx);
    let zero = Weight::zero(ctx.rank());
    for _ in 0..samples {
        let l = random_dominant(rng, ctx.rank(), 4);
        let m = random_dominant(rng, ctx.rank(), 4);
        let a = ModuleLabel::principal_t(LevelParam::identity(), l.clone(), zero.clone())
            .expect("dominant");
        let b = ModuleLabel::principal_t(LevelParam::identity(), zero.clone(), m.clone())
            .expect("dominant");
        let mono = monodromy_exponent(ctx, &a, &b).expect("scalar shape");
        report.check(mono == mod1(-ctx.ip(&l, &m)), || {
            format!("monodromy formula mismatch at ({l}; {m})")
        });

        let fused = fuse(ctx, &a, &b).expect("fusible");
        let Some((ab, &1)) = fused.terms().iter().next() else {
            report
                .failures
                .push(format!("T_{{{l},0}} x T_{{0,{m}}} is not a single simple"));
            continue;
        };
        let defect = conformal_weight(ctx, ab)
            .expect("T label")
            .sub(&conformal_weight(ctx, &a).expect("T label"))
            .sub(&conformal_weight(ctx, &b).expect("T label"));
        match defect.as_constant() {
            Some(c) => {
                let c64 = from_big(&c).expect("small constant");
                report.check(mod1(c64) == mono, || {
                    format!("balancing defect disagrees with monodromy at ({l}; {m})")
                });
            }
            None => report
                .failures
                .push(format!("balancing defect is k-dependent at ({l}; {m})")),
        }
    }
    report
}

/// Induction calculus: monoidality of both induction functors at the
/// coefficient level and the left-inverse law of the coset functor.
pub fn induction(ctx: &RootSystem, samples: u64, rng: &mut ChaCha8Rng, bound: u32) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Induction.name(), ctx);
    let cap = tensor_coord_cap(ctx);
    let gko = level_gko(&LevelParam::identity());
    let zero = Weight::zero(ctx.rank());
    for _ in 0..samples {
        let l = random_dominant(rng, ctx.rank(), cap);
        let m = random_dominant(rng, ctx.rank(), cap);

        // induce_v monoidality
        let s = ModuleLabel::principal_t(gko, zero.clone(), l.clone()).expect("dominant");
        let t = ModuleLabel::principal_t(gko, zero.clone(), m.clone()).expect("dominant");
        let fused_then_induced =
            induce_v_sum(ctx, &fuse(ctx, &s, &t).expect("fusible")).expect("shape");
        let induced_then_fused = fuse(
            ctx,
            &induce_v(ctx, &s).expect("shape"),
            &induce_v(ctx, &t).expect("shape"),
        )
        .expect("fusible");
        report.check(
            fused_then_induced.terms() == induced_then_fused.terms(),
            || format!("induce_v monoidality failed at ({l}; {m})"),
        );

        // induce_f monoidality on pairs
        let pair_a = ModuleLabel::pair(
            ModuleLabel::principal_t(LevelParam::identity(), zero.clone(), l.clone()).unwrap(),
            ModuleLabel::principal_t(gko, zero.clone(), m.clone()).unwrap(),
        )
        .expect("shallow");
        let pair_b = ModuleLabel::pair(
            ModuleLabel::principal_t(LevelParam::identity(), zero.clone(), m.clone()).unwrap(),
            ModuleLabel::principal_t(gko, zero.clone(), l.clone()).unwrap(),
        )
        .expect("shallow");
        let route_one =
            induce_f_sum(ctx, &fuse(ctx, &pair_a, &pair_b).expect("fusible")).expect("shape");
        let route_two = fuse(
            ctx,
            &induce_f(ctx, &pair_a).expect("shape"),
            &induce_f(ctx, &pair_b).expect("shape"),
        )
        .expect("fusible");
        report.check(route_one.terms() == route_two.terms(), || {
            format!("induce_f monoidality failed at ({l}; {m})")
        });

        // coset_com . induce_v = identity
        let induced = induce_v(ctx, &s).expect("shape");
        let ModuleLabel::Pair { left, right } = &induced else {
            unreachable!()
        };
        let ModuleLabel::Weyl { lambda, .. } = &**left else {
            unreachable!()
        };
        let ModuleLabel::Lattice { delta, .. } = &**right else {
            unreachable!()
        };
        let expanded = branch_gko(ctx, lambda, delta.rep(), bound).expect("dominant");
        let com = coset_com(&expanded).expect("pairs");
        report.check(
            com.terms() == LabeledSum::singleton(s.clone()).terms(),
            || format!("coset left inverse failed at {l}"),
        );
    }
    report
}

/// Runs the equivariantization verifier over a range of `m`.
pub fn cor_main(
    ctx: &RootSystem,
    ms: std::ops::RangeInclusive<i64>,
    bound: u32,
) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::CorMain.name(), ctx);
    for m in ms {
        let r = verify_cor_main(ctx, m, bound);
        report.check(r.passed(), || {
            format!("cor-main verification failed at m = {m}: {:?}", r.failures)
        });
        report.cor_main.push(r);
    }
    report
}
