//! The proof kernel: replays a [`ProofTree`] rule by rule.
//!
//! Every node is checked after its premises (post-order), so the first
//! error reported is the deepest-leftmost one. Pure-logic rules require all
//! premises to share one actor; only `trust` changes the actor.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::claim::{Claim, ClaimFamily};
use crate::eval::{normalize_with_budget, DEFAULT_STEP_BUDGET};
use crate::judgement::{union_hypotheses, Actor, Hypothesis, Judgement, Sequent, SequentError};
use crate::proof::{NodePath, ProofTree, SourcePos, Step};
use crate::term::{alpha_equal, WitnessTerm};
use crate::trust::TrustRelation;
use crate::weight::{Weight, WeightExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEnv {
    pub claims: BTreeSet<String>,
    pub trust: BTreeMap<String, TrustRelation>,
    pub default_actor: Actor,
    /// Budget for the normalizations the kernel performs on witnesses.
    pub step_budget: u64,
}

impl Default for CheckEnv {
    fn default() -> Self {
        CheckEnv {
            claims: BTreeSet::new(),
            trust: BTreeMap::new(),
            default_actor: Actor::default_actor(),
            step_budget: DEFAULT_STEP_BUDGET,
        }
    }
}

impl CheckEnv {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_claims<I, S>(mut self, names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.claims.extend(names.into_iter().map(Into::into));
        self
    }

    pub fn with_relation(mut self, relation: TrustRelation) -> Self {
        self.trust.insert(relation.name.clone(), relation);
        self
    }

    fn resolve_actor(&self, actor: &Actor) -> Actor {
        if actor.is_default() {
            self.default_actor.clone()
        } else {
            actor.clone()
        }
    }

    /// Every atom of `claim` is declared.
    pub fn check_claim(&self, claim: &Claim) -> Result<(), CheckError> {
        match claim.atoms().into_iter().find(|a| !self.claims.contains(*a)) {
            Some(a) => Err(CheckError::new(
                CheckErrorKind::UnknownClaim,
                format!("claim `{a}` is not declared"),
            )),
            None => Ok(()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckErrorKind {
    RuleArityMismatch,
    SequentMismatch,
    UnknownClaim,
    UnknownTrustEdge,
    TagMismatch,
    ActorMismatch,
    WeightMismatch,
    FamilyNotTotal,
    HypothesisMissing,
    MalformedWitness,
}

impl CheckErrorKind {
    pub const ALL: [CheckErrorKind; 10] = [
        CheckErrorKind::RuleArityMismatch,
        CheckErrorKind::SequentMismatch,
        CheckErrorKind::UnknownClaim,
        CheckErrorKind::UnknownTrustEdge,
        CheckErrorKind::TagMismatch,
        CheckErrorKind::ActorMismatch,
        CheckErrorKind::WeightMismatch,
        CheckErrorKind::FamilyNotTotal,
        CheckErrorKind::HypothesisMissing,
        CheckErrorKind::MalformedWitness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckErrorKind::RuleArityMismatch => "ruleArityMismatch",
            CheckErrorKind::SequentMismatch => "sequentMismatch",
            CheckErrorKind::UnknownClaim => "unknownClaim",
            CheckErrorKind::UnknownTrustEdge => "unknownTrustEdge",
            CheckErrorKind::TagMismatch => "tagMismatch",
            CheckErrorKind::ActorMismatch => "actorMismatch",
            CheckErrorKind::WeightMismatch => "weightMismatch",
            CheckErrorKind::FamilyNotTotal => "familyNotTotal",
            CheckErrorKind::HypothesisMissing => "hypothesisMissing",
            CheckErrorKind::MalformedWitness => "malformedWitness",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }
}

impl fmt::Display for CheckErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at {path}: {detail}")]
pub struct CheckError {
    pub kind: CheckErrorKind,
    pub path: NodePath,
    pub pos: Option<SourcePos>,
    pub detail: String,
}

impl CheckError {
    pub fn new(kind: CheckErrorKind, detail: impl Into<String>) -> Self {
        CheckError {
            kind,
            path: NodePath::root(),
            pos: None,
            detail: detail.into(),
        }
    }

    fn at(mut self, path: &NodePath, pos: Option<SourcePos>) -> Self {
        self.path = path.clone();
        self.pos = pos;
        self
    }
}

fn err<T>(kind: CheckErrorKind, detail: impl Into<String>) -> Result<T, CheckError> {
    Err(CheckError::new(kind, detail))
}

/// What a node establishes: a (hypothetical) judgement, or that a claim is
/// a veracity claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Sequent(Sequent),
    Claimhood(Claim),
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Conclusion::Sequent(s) => s.fmt(f),
            Conclusion::Claimhood(c) => write!(f, "{c} claim"),
        }
    }
}

fn union(lists: &[&[Hypothesis]]) -> Result<Vec<Hypothesis>, CheckError> {
    union_hypotheses(lists.iter().copied()).map_err(|e| match e {
        SequentError::ConflictingHypothesis(v) => CheckError::new(
            CheckErrorKind::SequentMismatch,
            format!("premises assume `{v}` with different judgements"),
        ),
        SequentError::UnboundVariable(v) => CheckError::new(
            CheckErrorKind::MalformedWitness,
            format!("`{v}` is free but not assumed"),
        ),
    })
}

fn without(hyps: &[Hypothesis], var: &str) -> Vec<Hypothesis> {
    hyps.iter().filter(|h| h.var != var).cloned().collect()
}

fn same_actor(a: &Judgement, b: &Judgement, rule: &str) -> Result<(), CheckError> {
    if a.actor != b.actor {
        return err(
            CheckErrorKind::ActorMismatch,
            format!(
                "{rule} premises belong to `{}` and `{}`; a trust step must come first",
                a.actor, b.actor
            ),
        );
    }
    Ok(())
}

pub fn check_assume(
    env: &CheckEnv,
    claim: &Claim,
    var: &str,
    actor: &Actor,
    weight: &Weight,
) -> Result<Sequent, CheckError> {
    env.check_claim(claim)?;
    let actor = env.resolve_actor(actor);
    let hyp = Hypothesis::new(var, actor, weight.clone(), claim.clone());
    let conclusion = hyp.as_judgement();
    Ok(Sequent::new(alloc::vec![hyp], conclusion))
}

/// `a : A` gives `A claim`; hypotheses play no part.
pub fn check_claimhood(premise: &Sequent) -> Claim {
    premise.conclusion.claim.clone()
}

pub fn check_bottom_elim(env: &CheckEnv, premise: &Sequent, target: &Claim) -> Result<Sequent, CheckError> {
    if premise.conclusion.claim != Claim::Bottom {
        return err(
            CheckErrorKind::SequentMismatch,
            format!("bottomElim needs a premise in _|_, found {}", premise.conclusion.claim),
        );
    }
    env.check_claim(target)?;
    let mut out = premise.clone();
    out.conclusion.claim = target.clone();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

pub fn check_or_intro(env: &CheckEnv, premise: &Sequent, side: Side, other: &Claim) -> Result<Sequent, CheckError> {
    env.check_claim(other)?;
    let mut out = premise.clone();
    let j = &mut out.conclusion;
    let inner = core::mem::replace(&mut j.witness, WitnessTerm::var(""));
    let proved = j.claim.clone();
    match side {
        Side::Left => {
            j.witness = WitnessTerm::tag_l(inner);
            j.claim = Claim::or(proved, other.clone());
        }
        Side::Right => {
            j.witness = WitnessTerm::tag_r(inner);
            j.claim = Claim::or(other.clone(), proved);
        }
    }
    Ok(out)
}

/// Looks up the discharged hypothesis of an elimination branch.
fn branch_hypothesis<'a>(
    branch: &'a Sequent,
    var: &str,
    claim: &Claim,
    scrutinee: &Judgement,
    rule: &str,
) -> Result<&'a Hypothesis, CheckError> {
    let Some(h) = branch.hypothesis(var) else {
        return err(
            CheckErrorKind::HypothesisMissing,
            format!("{rule} branch does not assume `{var} : {claim}`"),
        );
    };
    if h.claim != *claim {
        return err(
            CheckErrorKind::HypothesisMissing,
            format!("{rule} branch assumes `{var} : {}`, expected `{var} : {claim}`", h.claim),
        );
    }
    if h.actor != scrutinee.actor {
        return err(
            CheckErrorKind::ActorMismatch,
            format!("{rule} branch assumes `{var}` for `{}` but the scrutinee belongs to `{}`", h.actor, scrutinee.actor),
        );
    }
    if h.weight > scrutinee.weight {
        return err(
            CheckErrorKind::WeightMismatch,
            format!(
                "{rule} branch assumes `{var}` at {} but the scrutinee only has {}",
                h.weight, scrutinee.weight
            ),
        );
    }
    Ok(h)
}

fn normal_witness(env: &CheckEnv, t: &WitnessTerm) -> Result<WitnessTerm, CheckError> {
    normalize_with_budget(t, env.step_budget)
        .map(|nf| nf.term)
        .map_err(|e| CheckError::new(CheckErrorKind::MalformedWitness, e.to_string()))
}

pub fn check_or_elim(
    env: &CheckEnv,
    scrutinee: &Sequent,
    left: &Sequent,
    right: &Sequent,
    left_var: &str,
    right_var: &str,
    family: &ClaimFamily,
) -> Result<Sequent, CheckError> {
    let c = &scrutinee.conclusion;
    let Claim::Or(a, b) = &c.claim else {
        return err(
            CheckErrorKind::SequentMismatch,
            format!("orElim scrutinee must be a disjunction, found {}", c.claim),
        );
    };
    for claim in family.claims() {
        env.check_claim(claim)?;
    }
    branch_hypothesis(left, left_var, a, c, "orElim")?;
    branch_hypothesis(right, right_var, b, c, "orElim")?;
    for (branch, expected, tag) in [(left, family.at_left(), "i"), (right, family.at_right(), "j")] {
        same_actor(c, &branch.conclusion, "orElim")?;
        if branch.conclusion.claim != *expected {
            return err(
                CheckErrorKind::SequentMismatch,
                format!(
                    "orElim branch for {tag} concludes {} but the family needs {expected}",
                    branch.conclusion.claim
                ),
            );
        }
    }
    let claim = match family {
        ClaimFamily::Constant(claim) => claim.clone(),
        ClaimFamily::Cases { .. } => {
            let index = normal_witness(env, &c.witness)?;
            match family.at(&index) {
                Some(claim) => claim.clone(),
                None => {
                    return err(
                        CheckErrorKind::FamilyNotTotal,
                        format!("family {family} has no member at `{index}`; the scrutinee must compute to a tag"),
                    )
                }
            }
        }
    };
    let hyps = union(&[
        &scrutinee.hypotheses,
        &without(&left.hypotheses, left_var),
        &without(&right.hypotheses, right_var),
    ])?;
    let witness = WitnessTerm::cases(
        c.witness.clone(),
        (left_var, left.conclusion.witness.clone()),
        (right_var, right.conclusion.witness.clone()),
    );
    let weight = left.conclusion.weight.clone().min(right.conclusion.weight.clone());
    Ok(Sequent::new(hyps, Judgement::new(witness, c.actor.clone(), weight, claim)))
}

pub fn check_and_intro(left: &Sequent, right: &Sequent) -> Result<Sequent, CheckError> {
    let (a, b) = (&left.conclusion, &right.conclusion);
    same_actor(a, b, "andIntro")?;
    let hyps = union(&[&left.hypotheses, &right.hypotheses])?;
    Ok(Sequent::new(
        hyps,
        Judgement::new(
            WitnessTerm::pair(a.witness.clone(), b.witness.clone()),
            a.actor.clone(),
            a.weight.clone().min(b.weight.clone()),
            Claim::and(a.claim.clone(), b.claim.clone()),
        ),
    ))
}

pub fn check_and_elim(
    env: &CheckEnv,
    scrutinee: &Sequent,
    branch: &Sequent,
    left_var: &str,
    right_var: &str,
    family: &ClaimFamily,
) -> Result<Sequent, CheckError> {
    let c = &scrutinee.conclusion;
    let Claim::And(a, b) = &c.claim else {
        return err(
            CheckErrorKind::SequentMismatch,
            format!("andElim scrutinee must be a conjunction, found {}", c.claim),
        );
    };
    let ClaimFamily::Constant(target) = family else {
        return err(
            CheckErrorKind::FamilyNotTotal,
            format!("andElim supports constant families only, found {family}"),
        );
    };
    env.check_claim(target)?;
    if left_var == right_var {
        return err(
            CheckErrorKind::MalformedWitness,
            format!("andElim binds `{left_var}` twice"),
        );
    }
    branch_hypothesis(branch, left_var, a, c, "andElim")?;
    branch_hypothesis(branch, right_var, b, c, "andElim")?;
    same_actor(c, &branch.conclusion, "andElim")?;
    if branch.conclusion.claim != *target {
        return err(
            CheckErrorKind::SequentMismatch,
            format!("andElim branch concludes {} but the family is {target}", branch.conclusion.claim),
        );
    }
    let rest = without(&without(&branch.hypotheses, left_var), right_var);
    let hyps = union(&[&scrutinee.hypotheses, &rest])?;
    let witness = WitnessTerm::split(
        c.witness.clone(),
        left_var,
        right_var,
        branch.conclusion.witness.clone(),
    );
    Ok(Sequent::new(
        hyps,
        Judgement::new(witness, c.actor.clone(), branch.conclusion.weight.clone(), target.clone()),
    ))
}

/// Discharges `var`. Without a hypothesis for `var` the antecedent must be
/// given explicitly and the discharge is vacuous, at argument weight 1.
pub fn check_implies_intro(
    env: &CheckEnv,
    premise: &Sequent,
    var: &str,
    antecedent: Option<&Claim>,
    transformer: &WeightExpr,
) -> Result<Sequent, CheckError> {
    let b = &premise.conclusion;
    let (claim, z) = match (premise.hypothesis(var), antecedent) {
        (Some(h), stated) => {
            if let Some(stated) = stated {
                if *stated != h.claim {
                    return err(
                        CheckErrorKind::SequentMismatch,
                        format!("impIntro states `{var} : {stated}` but the premise assumes `{var} : {}`", h.claim),
                    );
                }
            }
            if h.actor != b.actor {
                return err(
                    CheckErrorKind::ActorMismatch,
                    format!("`{var}` is assumed for `{}` but the premise belongs to `{}`", h.actor, b.actor),
                );
            }
            (h.claim.clone(), h.weight.clone())
        }
        (None, Some(stated)) => {
            env.check_claim(stated)?;
            (stated.clone(), Weight::one())
        }
        (None, None) => {
            return err(
                CheckErrorKind::HypothesisMissing,
                format!("impIntro discharges `{var}`, which the premise does not assume"),
            )
        }
    };
    let expected = transformer.eval(&z);
    if expected != b.weight {
        return err(
            CheckErrorKind::WeightMismatch,
            format!(
                "transformer {transformer} gives {expected} at the assumed weight {z}, but the premise has {}",
                b.weight
            ),
        );
    }
    let witness = WitnessTerm::lambda_with(var, b.witness.clone(), transformer.clone());
    Ok(Sequent::new(
        without(&premise.hypotheses, var),
        Judgement::new(witness, b.actor.clone(), Weight::one(), Claim::implies(claim, b.claim.clone())),
    ))
}

pub fn check_implies_elim(env: &CheckEnv, function: &Sequent, argument: &Sequent) -> Result<Sequent, CheckError> {
    let (c, a) = (&function.conclusion, &argument.conclusion);
    let Claim::Implies(ante, cons) = &c.claim else {
        return err(
            CheckErrorKind::SequentMismatch,
            format!("impElim needs an implication, found {}", c.claim),
        );
    };
    if **ante != a.claim {
        return err(
            CheckErrorKind::SequentMismatch,
            format!("impElim argument proves {} but the antecedent is {ante}", a.claim),
        );
    }
    same_actor(c, a, "impElim")?;
    let transformer = match normal_witness(env, &c.witness)? {
        WitnessTerm::Lambda { transformer, .. } => transformer,
        _ => WeightExpr::Arg,
    };
    let weight = c.weight.clone().min(transformer.eval(&a.weight));
    let hyps = union(&[&function.hypotheses, &argument.hypotheses])?;
    Ok(Sequent::new(
        hyps,
        Judgement::new(
            WitnessTerm::apply(c.witness.clone(), a.witness.clone()),
            c.actor.clone(),
            weight,
            (**cons).clone(),
        ),
    ))
}

/// `from T_x to` and `a^to@y : A` give `a^from@(x*y) : A`.
pub fn check_trust(
    env: &CheckEnv,
    relation: &str,
    from: &Actor,
    to: &Actor,
    premise: &Sequent,
) -> Result<Sequent, CheckError> {
    let Some(rel) = env.trust.get(relation) else {
        return err(
            CheckErrorKind::UnknownTrustEdge,
            format!("no trust relation named `{relation}`"),
        );
    };
    let Some(x) = rel.weight(from, to) else {
        return err(
            CheckErrorKind::UnknownTrustEdge,
            format!("`{from}` does not trust `{to}` in {relation}"),
        );
    };
    let j = &premise.conclusion;
    if j.actor != *to {
        return err(
            CheckErrorKind::ActorMismatch,
            format!("trust edge ends at `{to}` but the premise belongs to `{}`", j.actor),
        );
    }
    let mut out = premise.clone();
    out.conclusion.actor = from.clone();
    out.conclusion.weight = x.mul(&j.weight);
    Ok(out)
}

/// True when the terms put different tags at the same position.
fn tags_conflict(a: &WitnessTerm, b: &WitnessTerm) -> bool {
    use WitnessTerm as T;
    match (a, b) {
        (T::TagL(_), T::TagR(_)) | (T::TagR(_), T::TagL(_)) => true,
        (T::TagL(x), T::TagL(y)) | (T::TagR(x), T::TagR(y)) => tags_conflict(x, y),
        (T::Pair(a1, a2), T::Pair(b1, b2)) | (T::Apply(a1, a2), T::Apply(b1, b2)) => {
            tags_conflict(a1, b1) || tags_conflict(a2, b2)
        }
        (T::Lambda { body: x, .. }, T::Lambda { body: y, .. }) => tags_conflict(x, y),
        (
            T::Cases {
                scrutinee: s1,
                left: l1,
                right: r1,
            },
            T::Cases {
                scrutinee: s2,
                left: l2,
                right: r2,
            },
        ) => tags_conflict(s1, s2) || tags_conflict(&l1.1, &l2.1) || tags_conflict(&r1.1, &r2.1),
        (
            T::Split {
                scrutinee: s1,
                body: b1,
                ..
            },
            T::Split {
                scrutinee: s2,
                body: b2,
                ..
            },
        ) => tags_conflict(s1, s2) || tags_conflict(b1, b2),
        _ => false,
    }
}

/// Compares a derived sequent with the one the author stated.
pub fn compare_stated(env: &CheckEnv, derived: &Sequent, stated: &Sequent) -> Result<(), CheckError> {
    for h in &stated.hypotheses {
        env.check_claim(&h.claim)?;
    }
    env.check_claim(&stated.conclusion.claim)?;
    let (d, s) = (&derived.conclusion, &stated.conclusion);
    let mismatch = |kind, what: &str| {
        err(kind, format!("stated `{stated}` but the rule derives `{derived}` ({what})"))
    };
    if tags_conflict(&d.witness, &s.witness) {
        return mismatch(CheckErrorKind::TagMismatch, "wrong disjunct tag");
    }
    if d.claim != s.claim {
        return mismatch(CheckErrorKind::SequentMismatch, "claims differ");
    }
    if d.actor != env.resolve_actor(&s.actor) {
        return mismatch(CheckErrorKind::ActorMismatch, "actors differ");
    }
    if d.weight != s.weight {
        return mismatch(CheckErrorKind::WeightMismatch, "weights differ");
    }
    if !alpha_equal(&d.witness, &s.witness) {
        return mismatch(CheckErrorKind::SequentMismatch, "witnesses differ");
    }
    let resolved: Vec<Hypothesis> = stated
        .hypotheses
        .iter()
        .map(|h| Hypothesis {
            actor: env.resolve_actor(&h.actor),
            ..h.clone()
        })
        .collect();
    let same = derived.hypotheses.len() == resolved.len()
        && derived.hypotheses.iter().all(|h| resolved.contains(h));
    if !same {
        return mismatch(CheckErrorKind::SequentMismatch, "hypotheses differ");
    }
    Ok(())
}

fn expect_sequent(c: &Conclusion, rule: &str) -> Result<Sequent, CheckError> {
    match c {
        Conclusion::Sequent(s) => Ok(s.clone()),
        Conclusion::Claimhood(claim) => err(
            CheckErrorKind::SequentMismatch,
            format!("{rule} needs a judgement premise, found `{claim} claim`"),
        ),
    }
}

fn check_node(env: &CheckEnv, tree: &ProofTree, path: &NodePath) -> Result<Conclusion, CheckError> {
    let mut premises = Vec::with_capacity(tree.premises.len());
    for (i, p) in tree.premises.iter().enumerate() {
        premises.push(check_node(env, p, &path.child(i))?);
    }
    apply_rule(env, tree, &premises).map_err(|e| e.at(path, tree.pos))
}

fn apply_rule(env: &CheckEnv, tree: &ProofTree, premises: &[Conclusion]) -> Result<Conclusion, CheckError> {
    let rule = tree.rule();
    let (lo, hi) = rule.arity();
    if premises.len() < lo || premises.len() > hi {
        let expected = if lo == hi { format!("{lo}") } else { format!("{lo} to {hi}") };
        return err(
            CheckErrorKind::RuleArityMismatch,
            format!("{rule} takes {expected} premises, got {}", premises.len()),
        );
    }
    let name = rule.name();
    let seq = |i: usize| expect_sequent(&premises[i], name);
    let derived = match &tree.step {
        Step::Assume {
            var,
            actor,
            weight,
            claim,
        } => {
            if let Some(p) = premises.first() {
                if *p != Conclusion::Claimhood(claim.clone()) {
                    return err(
                        CheckErrorKind::SequentMismatch,
                        format!("assume of {claim} needs `{claim} claim`, got `{p}`"),
                    );
                }
            }
            let actor = actor.clone().unwrap_or_else(|| env.default_actor.clone());
            check_assume(env, claim, var, &actor, weight)?
        }
        Step::Claim => {
            let claim = check_claimhood(&seq(0)?);
            if tree.stated.is_some() {
                return err(
                    CheckErrorKind::SequentMismatch,
                    "a claimhood node cannot state a sequent",
                );
            }
            return Ok(Conclusion::Claimhood(claim));
        }
        Step::BottomElim { target } => check_bottom_elim(env, &seq(0)?, target)?,
        Step::OrIntroL { other } => check_or_intro(env, &seq(0)?, Side::Left, other)?,
        Step::OrIntroR { other } => check_or_intro(env, &seq(0)?, Side::Right, other)?,
        Step::OrElim {
            left_var,
            right_var,
            family,
        } => check_or_elim(env, &seq(0)?, &seq(1)?, &seq(2)?, left_var, right_var, family)?,
        Step::AndIntro => check_and_intro(&seq(0)?, &seq(1)?)?,
        Step::AndElim {
            left_var,
            right_var,
            family,
        } => check_and_elim(env, &seq(0)?, &seq(1)?, left_var, right_var, family)?,
        Step::ImpIntro {
            var,
            antecedent,
            transformer,
        } => check_implies_intro(env, &seq(0)?, var, antecedent.as_ref(), transformer)?,
        Step::ImpElim => check_implies_elim(env, &seq(0)?, &seq(1)?)?,
        Step::Trust { relation, from, to } => check_trust(env, relation, from, to, &seq(0)?)?,
    };
    if let Err(e) = derived.validate() {
        return err(CheckErrorKind::MalformedWitness, e.to_string());
    }
    if let Some(stated) = &tree.stated {
        compare_stated(env, &derived, stated)?;
    }
    Ok(Conclusion::Sequent(derived))
}

/// Replays `tree`, returning what its root establishes.
pub fn check_proof(tree: &ProofTree, env: &CheckEnv) -> Result<Conclusion, CheckError> {
    check_node(env, tree, &NodePath::root())
}

/// [`check_proof`] for trees that must end in a judgement.
pub fn check_sequent(tree: &ProofTree, env: &CheckEnv) -> Result<Sequent, CheckError> {
    match check_proof(tree, env)? {
        Conclusion::Sequent(s) => Ok(s),
        Conclusion::Claimhood(c) => Err(CheckError::new(
            CheckErrorKind::SequentMismatch,
            format!("proof ends in `{c} claim`, not a judgement"),
        )
        .at(&NodePath::root(), tree.pos)),
    }
}
