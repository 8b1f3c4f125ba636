//! Proofs for normal witnesses, read off the witness itself.
//!
//! Introduction forms are checked against the expected claim; variables,
//! applications, `cases` and `split` are handled by synthesizing the claim
//! of their head from the hypotheses. When a hypothesis belongs to another
//! actor, trust steps along the best available path are inserted.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::analysis::{best_trust_path, TrustGraph};
use crate::claim::{Claim, ClaimFamily};
use crate::judgement::{Actor, Hypothesis};
use crate::kernel::{check_sequent, CheckEnv};
use crate::proof::{ProofTree, Step};
use crate::term::{fresh_name, free_vars, substitute, WitnessTerm};
use crate::weight::{Weight, WeightExpr};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("cannot elaborate `{term}`: {reason}")]
pub struct ElabError {
    pub term: String,
    pub reason: String,
}

fn fail<T>(t: &WitnessTerm, reason: impl Into<String>) -> Result<T, ElabError> {
    Err(ElabError {
        term: format!("{t}"),
        reason: reason.into(),
    })
}

struct Elaborator<'e> {
    env: &'e CheckEnv,
    graph: TrustGraph,
}

/// A proof tree whose root concludes `witness^actor : claim` from `hyps`,
/// built by following the shape of the (normal) witness.
pub fn canonical_proof(
    env: &CheckEnv,
    hyps: &[Hypothesis],
    witness: &WitnessTerm,
    actor: &Actor,
    claim: &Claim,
) -> Result<ProofTree, ElabError> {
    let e = Elaborator {
        env,
        graph: TrustGraph::from_relations(env.trust.values()),
    };
    let mut ctx = hyps.to_vec();
    e.check(witness, claim, actor, &mut ctx)
}

impl Elaborator<'_> {
    fn check(&self, t: &WitnessTerm, claim: &Claim, actor: &Actor, ctx: &mut Vec<Hypothesis>) -> Result<ProofTree, ElabError> {
        match (t, claim) {
            (WitnessTerm::Pair(a, b), Claim::And(x, y)) => {
                let left = self.check(a, x, actor, ctx)?;
                let right = self.check(b, y, actor, ctx)?;
                Ok(ProofTree::new(Step::AndIntro, alloc::vec![left, right]))
            }
            (WitnessTerm::TagL(a), Claim::Or(x, y)) => {
                let inner = self.check(a, x, actor, ctx)?;
                Ok(ProofTree::new(Step::OrIntroL { other: (**y).clone() }, alloc::vec![inner]))
            }
            (WitnessTerm::TagR(b), Claim::Or(x, y)) => {
                let inner = self.check(b, y, actor, ctx)?;
                Ok(ProofTree::new(Step::OrIntroR { other: (**x).clone() }, alloc::vec![inner]))
            }
            (
                WitnessTerm::Lambda {
                    param,
                    body,
                    transformer,
                },
                Claim::Implies(x, y),
            ) => {
                let (param, body) = self.fresh_binder(param, body, ctx);
                // The discharged weight z must satisfy f(z) = weight of the body.
                // Start from full weight; for the identity transformer, lower z
                // to the body's weight until it is stable.
                let mut z = Weight::one();
                let mut premise;
                let mut rounds = 0;
                loop {
                    ctx.push(Hypothesis::new(param.clone(), actor.clone(), z.clone(), (**x).clone()));
                    premise = self.check(&body, y, actor, ctx);
                    ctx.pop();
                    let Ok(tree) = &premise else { break };
                    if *transformer != WeightExpr::Arg || rounds == 8 {
                        break;
                    }
                    match check_sequent(tree, self.env) {
                        Ok(s) if s.conclusion.weight != z => z = s.conclusion.weight,
                        _ => break,
                    }
                    rounds += 1;
                }
                Ok(ProofTree::new(
                    Step::ImpIntro {
                        var: param,
                        antecedent: Some((**x).clone()),
                        transformer: transformer.clone(),
                    },
                    alloc::vec![premise?],
                ))
            }
            (
                WitnessTerm::Cases {
                    scrutinee,
                    left,
                    right,
                },
                _,
            ) => {
                let (scrut, scrut_claim) = self.synth(scrutinee, actor, ctx)?;
                let Claim::Or(x, y) = &scrut_claim else {
                    return fail(t, format!("cases on a proof of {scrut_claim}"));
                };
                let weight = self.weight_of(&scrut, t)?;
                let l = self.branch(&left.0, &left.1, &[(**x).clone()], &weight, claim, actor, ctx)?;
                let r = self.branch(&right.0, &right.1, &[(**y).clone()], &weight, claim, actor, ctx)?;
                Ok(ProofTree::new(
                    Step::OrElim {
                        left_var: l.0,
                        right_var: r.0,
                        family: ClaimFamily::Constant(claim.clone()),
                    },
                    alloc::vec![scrut, l.1, r.1],
                ))
            }
            (
                WitnessTerm::Split {
                    scrutinee,
                    vars,
                    body,
                },
                _,
            ) => {
                let (scrut, scrut_claim) = self.synth(scrutinee, actor, ctx)?;
                let Claim::And(x, y) = &scrut_claim else {
                    return fail(t, format!("split on a proof of {scrut_claim}"));
                };
                let weight = self.weight_of(&scrut, t)?;
                let avoid = self.avoid(ctx, body);
                let a = if ctx.iter().any(|h| h.var == vars.0) { fresh_name(&vars.0, &avoid) } else { vars.0.clone() };
                let mut avoid2 = avoid.clone();
                avoid2.insert(a.clone());
                let b = if ctx.iter().any(|h| h.var == vars.1) || vars.1 == a {
                    fresh_name(&vars.1, &avoid2)
                } else {
                    vars.1.clone()
                };
                let mut map = alloc::collections::BTreeMap::new();
                map.insert(vars.0.clone(), WitnessTerm::var(a.clone()));
                map.insert(vars.1.clone(), WitnessTerm::var(b.clone()));
                let body = crate::term::substitute_all(body, &map);
                ctx.push(Hypothesis::new(a.clone(), actor.clone(), weight.clone(), (**x).clone()));
                ctx.push(Hypothesis::new(b.clone(), actor.clone(), weight, (**y).clone()));
                let inner = self.check(&body, claim, actor, ctx);
                ctx.truncate(ctx.len() - 2);
                Ok(ProofTree::new(
                    Step::AndElim {
                        left_var: a,
                        right_var: b,
                        family: ClaimFamily::Constant(claim.clone()),
                    },
                    alloc::vec![scrut, inner?],
                ))
            }
            _ => {
                let (tree, found) = self.synth(t, actor, ctx)?;
                if found == *claim {
                    Ok(tree)
                } else if found == Claim::Bottom {
                    Ok(ProofTree::new(Step::BottomElim { target: claim.clone() }, alloc::vec![tree]))
                } else {
                    fail(t, format!("proves {found}, expected {claim}"))
                }
            }
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn branch(
        &self,
        var: &str,
        body: &WitnessTerm,
        claims: &[Claim],
        weight: &Weight,
        target: &Claim,
        actor: &Actor,
        ctx: &mut Vec<Hypothesis>,
    ) -> Result<(String, ProofTree), ElabError> {
        let (var, body) = self.fresh_binder(var, body, ctx);
        ctx.push(Hypothesis::new(var.clone(), actor.clone(), weight.clone(), claims[0].clone()));
        let tree = self.check(&body, target, actor, ctx);
        ctx.pop();
        Ok((var, tree?))
    }

    fn synth(&self, t: &WitnessTerm, actor: &Actor, ctx: &mut Vec<Hypothesis>) -> Result<(ProofTree, Claim), ElabError> {
        match t {
            WitnessTerm::Var(x) => {
                let Some(h) = ctx.iter().rev().find(|h| h.var == *x).cloned() else {
                    return fail(t, "variable is not a hypothesis");
                };
                let leaf = ProofTree::leaf(Step::Assume {
                    var: h.var.clone(),
                    actor: Some(h.actor.clone()),
                    weight: h.weight.clone(),
                    claim: h.claim.clone(),
                });
                Ok((self.trust_to(leaf, &h.actor, actor, t)?, h.claim))
            }
            WitnessTerm::Apply(g, a) => {
                let (tg, claim) = self.synth(g, actor, ctx)?;
                let Claim::Implies(x, y) = claim else {
                    return fail(t, format!("applies a proof of {claim}"));
                };
                let ta = self.check(a, &x, actor, ctx)?;
                Ok((ProofTree::new(Step::ImpElim, alloc::vec![tg, ta]), *y))
            }
            WitnessTerm::Atom { .. } => fail(t, "atomic evidence has no proof from hypotheses"),
            _ => fail(t, "not a normal neutral term"),
        }
    }

    /// Wraps `tree`, concluding at `from`, in trust steps so it concludes at `to`.
    fn trust_to(&self, tree: ProofTree, from: &Actor, to: &Actor, t: &WitnessTerm) -> Result<ProofTree, ElabError> {
        if from == to {
            return Ok(tree);
        }
        let Some((path, _)) = best_trust_path(&self.graph, to, from) else {
            return fail(t, format!("`{to}` has no trust path to `{from}`"));
        };
        let mut tree = tree;
        for pair in path.windows(2).rev() {
            let (k, l) = (&pair[0], &pair[1]);
            let relation = self
                .env
                .trust
                .values()
                .filter_map(|r| r.weight(k, l).map(|w| (w, &r.name)))
                .max_by(|a, b| a.0.cmp(b.0).then_with(|| b.1.cmp(a.1)))
                .map(|(_, n)| n.clone())
                .expect("path edges come from the environment");
            tree = ProofTree::new(
                Step::Trust {
                    relation,
                    from: k.clone(),
                    to: l.clone(),
                },
                alloc::vec![tree],
            );
        }
        Ok(tree)
    }

    fn weight_of(&self, tree: &ProofTree, t: &WitnessTerm) -> Result<Weight, ElabError> {
        match check_sequent(tree, self.env) {
            Ok(s) => Ok(s.conclusion.weight),
            Err(e) => fail(t, format!("scrutinee does not check: {e}")),
        }
    }

    fn avoid(&self, ctx: &[Hypothesis], body: &WitnessTerm) -> BTreeSet<String> {
        let mut avoid: BTreeSet<String> = ctx.iter().map(|h| h.var.clone()).collect();
        avoid.extend(free_vars(body));
        avoid
    }

    /// Renames a binder that would clash with a hypothesis already in scope.
    fn fresh_binder(&self, var: &str, body: &WitnessTerm, ctx: &[Hypothesis]) -> (String, WitnessTerm) {
        if !ctx.iter().any(|h| h.var == var) {
            return (String::from(var), body.clone());
        }
        let fresh = fresh_name(var, &self.avoid(ctx, body));
        let renamed = substitute(body, var, &WitnessTerm::var(fresh.clone()));
        (fresh, renamed)
    }
}
