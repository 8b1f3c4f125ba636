//! Actors, judgements and sequents.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::claim::Claim;
use crate::term::{free_vars, WitnessTerm};
use crate::weight::Weight;

/// A participant holding judgements.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Actor(pub String);

impl Actor {
    /// Name of the actor used when a script never mentions one.
    pub const DEFAULT_NAME: &'static str = "_";

    pub fn new(name: impl Into<String>) -> Self {
        Actor(name.into())
    }

    pub fn default_actor() -> Self {
        Actor(String::from(Self::DEFAULT_NAME))
    }

    pub fn is_default(&self) -> bool {
        self.0 == Self::DEFAULT_NAME
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl Default for Actor {
    fn default() -> Self {
        Actor::default_actor()
    }
}

impl fmt::Display for Actor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// `witness ^actor @weight : claim`
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Judgement {
    pub witness: WitnessTerm,
    pub actor: Actor,
    pub weight: Weight,
    pub claim: Claim,
}

impl Judgement {
    pub fn new(witness: WitnessTerm, actor: Actor, weight: Weight, claim: Claim) -> Self {
        Judgement {
            witness,
            actor,
            weight,
            claim,
        }
    }

    /// Full-weight judgement.
    pub fn certain(witness: WitnessTerm, actor: Actor, claim: Claim) -> Self {
        Self::new(witness, actor, Weight::one(), claim)
    }
}

/// An assumption `x^actor@weight : claim` to the left of the turnstile.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hypothesis {
    pub var: String,
    pub actor: Actor,
    pub weight: Weight,
    pub claim: Claim,
}

impl Hypothesis {
    pub fn new(var: impl Into<String>, actor: Actor, weight: Weight, claim: Claim) -> Self {
        Hypothesis {
            var: var.into(),
            actor,
            weight,
            claim,
        }
    }

    /// The judgement this hypothesis assumes.
    pub fn as_judgement(&self) -> Judgement {
        Judgement::new(
            WitnessTerm::var(self.var.clone()),
            self.actor.clone(),
            self.weight.clone(),
            self.claim.clone(),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SequentError {
    #[error("hypothesis `{0}` is bound twice with different judgements")]
    ConflictingHypothesis(String),
    #[error("variable `{0}` is free in the witness but not a hypothesis")]
    UnboundVariable(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Sequent {
    pub hypotheses: Vec<Hypothesis>,
    pub conclusion: Judgement,
}

impl Sequent {
    pub fn new(hypotheses: Vec<Hypothesis>, conclusion: Judgement) -> Self {
        Sequent {
            hypotheses,
            conclusion,
        }
    }

    pub fn closed(conclusion: Judgement) -> Self {
        Self::new(Vec::new(), conclusion)
    }

    pub fn is_closed(&self) -> bool {
        self.hypotheses.is_empty()
    }

    pub fn hypothesis(&self, var: &str) -> Option<&Hypothesis> {
        self.hypotheses.iter().find(|h| h.var == var)
    }

    /// Checks distinct hypothesis variables and that the witness has no
    /// free variable beyond them.
    pub fn validate(&self) -> Result<(), SequentError> {
        for (i, h) in self.hypotheses.iter().enumerate() {
            if self.hypotheses[..i].iter().any(|g| g.var == h.var) {
                return Err(SequentError::ConflictingHypothesis(h.var.clone()));
            }
        }
        for v in free_vars(&self.conclusion.witness) {
            if self.hypothesis(&v).is_none() {
                return Err(SequentError::UnboundVariable(v));
            }
        }
        Ok(())
    }

    /// Hypotheses compared as sets.
    pub fn same_hypotheses(&self, other: &Sequent) -> bool {
        self.hypotheses.len() == other.hypotheses.len()
            && self.hypotheses.iter().all(|h| other.hypotheses.contains(h))
    }
}

/// Union of hypothesis lists, keeping first-occurrence order. Identical
/// duplicates merge; the same variable with a different judgement is an
/// error.
pub fn union_hypotheses<'a, I>(lists: I) -> Result<Vec<Hypothesis>, SequentError>
where
    I: IntoIterator<Item = &'a [Hypothesis]>,
{
    let mut out: Vec<Hypothesis> = Vec::new();
    for list in lists {
        for h in list {
            match out.iter().find(|g| g.var == h.var) {
                Some(g) if g == h => {}
                Some(_) => return Err(SequentError::ConflictingHypothesis(h.var.clone())),
                None => out.push(h.clone()),
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hyp(v: &str, c: &str) -> Hypothesis {
        Hypothesis::new(v, Actor::new("P"), Weight::one(), Claim::atom(c))
    }

    #[test]
    fn union_merges_and_rejects_conflicts() {
        let a = [hyp("l", "C1"), hyp("s", "C2")];
        let b = [hyp("s", "C2"), hyp("c", "C3")];
        let u = union_hypotheses([&a[..], &b[..]]).unwrap();
        let vars: Vec<_> = u.iter().map(|h| h.var.as_str()).collect();
        assert_eq!(vars, ["l", "s", "c"]);
        let clash = [hyp("s", "C9")];
        assert!(union_hypotheses([&a[..], &clash[..]]).is_err());
    }

    #[test]
    fn validate_catches_unbound_witness_vars() {
        let j = Judgement::certain(WitnessTerm::var("x"), Actor::new("P"), Claim::atom("A"));
        assert_eq!(
            Sequent::closed(j.clone()).validate(),
            Err(SequentError::UnboundVariable(String::from("x")))
        );
        assert!(Sequent::new(alloc::vec![hyp("x", "A")], j).validate().is_ok());
    }
}
