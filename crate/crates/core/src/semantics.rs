//! Finite-model semantics.
//!
//! A [`Model`] assigns each atomic claim a set of atomic witnesses, each
//! held by an actor at some weight, and fixes a family of trust relations.
//! Denotations are sets of [`WeightedWitness`] closed under the family.
//! Only the best weight per (value, actor) is kept: a weaker copy of the
//! same judgement never decides a membership query, since membership asks
//! for weight at least the one stated.
//!
//! Implications denote finite tables. A table's weight is the largest `w`
//! with `min(w, W(x)) <= W(g(x))` for every entry, so that applying it with
//! the identity transformer never claims more than the table delivers.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{all_pairs_best_trust, TrustGraph};
use crate::claim::Claim;
use crate::judgement::{Actor, Hypothesis, Judgement, Sequent};
use crate::kernel::{check_sequent, CheckEnv, CheckError};
use crate::proof::ProofTree;
use crate::term::WitnessTerm;
use crate::trust::TrustRelation;
use crate::weight::Weight;

pub const DEFAULT_DEPTH_BOUND: usize = 3;
/// Largest number of tables enumerated for one implication at one actor.
pub const MAX_TABLES: usize = 4096;
/// Largest denotation built for any claim.
pub const MAX_ENTRIES: usize = 100_000;
/// Largest number of hypothesis instantiations a soundness check tries.
pub const MAX_SUBSTITUTIONS: usize = 100_000;
const EVAL_FUEL: u64 = 1_000_000;

/// A semantic witness. Atoms denote themselves; λ-terms evaluate to
/// closures, and implications denote finite tables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Value {
    Atom(String),
    Pair(Box<Value>, Box<Value>),
    InL(Box<Value>),
    InR(Box<Value>),
    Table(BTreeMap<Value, Value>),
    Closure {
        param: String,
        body: WitnessTerm,
        env: BTreeMap<String, Value>,
    },
}

impl Value {
    pub fn atom(name: impl Into<String>) -> Self {
        Value::Atom(name.into())
    }

    pub fn pair(a: Value, b: Value) -> Self {
        Value::Pair(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Atom(n) => f.write_str(n),
            Value::Pair(a, b) => write!(f, "({a},{b})"),
            Value::InL(a) => write!(f, "i({a})"),
            Value::InR(b) => write!(f, "j({b})"),
            Value::Table(entries) => {
                f.write_str("[")?;
                for (i, (k, v)) in entries.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{k} => {v}")?;
                }
                f.write_str("]")
            }
            Value::Closure { param, body, .. } => {
                write!(f, "{}", WitnessTerm::lambda(param.clone(), body.clone()))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WeightedWitness {
    pub value: Value,
    pub actor: Actor,
    pub weight: Weight,
}

impl WeightedWitness {
    pub fn new(value: Value, actor: Actor, weight: Weight) -> Self {
        WeightedWitness { value, actor, weight }
    }
}

impl fmt::Display for WeightedWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)?;
        if !self.actor.is_default() {
            write!(f, "^{}", self.actor)?;
        }
        if !self.weight.is_one() {
            write!(f, "@{}", self.weight)?;
        }
        Ok(())
    }
}

/// Weighted witnesses, keeping the best weight per (value, actor).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WitnessSet {
    entries: BTreeMap<(Value, Actor), Weight>,
}

impl WitnessSet {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts or raises the weight; reports whether anything changed.
    pub fn insert(&mut self, value: Value, actor: Actor, weight: Weight) -> bool {
        match self.entries.get_mut(&(value.clone(), actor.clone())) {
            Some(cur) if *cur >= weight => false,
            Some(cur) => {
                *cur = weight;
                true
            }
            None => {
                self.entries.insert((value, actor), weight);
                true
            }
        }
    }

    pub fn weight(&self, value: &Value, actor: &Actor) -> Option<&Weight> {
        self.entries.get(&(value.clone(), actor.clone()))
    }

    /// Present with at least the given weight.
    pub fn contains(&self, w: &WeightedWitness) -> bool {
        self.weight(&w.value, &w.actor).is_some_and(|have| *have >= w.weight)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Value, &Actor, &Weight)> {
        self.entries.iter().map(|((v, a), w)| (v, a, w))
    }

    pub fn witnesses(&self) -> impl Iterator<Item = WeightedWitness> + '_ {
        self.iter()
            .map(|(v, a, w)| WeightedWitness::new(v.clone(), a.clone(), w.clone()))
    }

    pub fn at_actor<'a>(&'a self, actor: &'a Actor) -> impl Iterator<Item = (&'a Value, &'a Weight)> + 'a {
        self.iter().filter(move |(_, a, _)| *a == actor).map(|(v, _, w)| (v, w))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Every member of `self` is in `other` with at least its weight.
    pub fn is_subset(&self, other: &WitnessSet) -> bool {
        self.iter()
            .all(|(v, a, w)| other.weight(v, a).is_some_and(|have| have >= w))
    }
}

impl FromIterator<WeightedWitness> for WitnessSet {
    fn from_iter<I: IntoIterator<Item = WeightedWitness>>(iter: I) -> Self {
        let mut s = WitnessSet::new();
        for w in iter {
            s.insert(w.value, w.actor, w.weight);
        }
        s
    }
}

/// Least superset of `s` closed under `a^b@y, (a', b, x) in T_i => a^a'@(x*y)`,
/// up to the best-weight quotient.
pub fn close_under_trust(s: &WitnessSet, family: &[TrustRelation]) -> WitnessSet {
    let mut incoming: BTreeMap<&Actor, Vec<(&Actor, &Weight)>> = BTreeMap::new();
    for rel in family {
        for (from, to, x) in rel.edges() {
            incoming.entry(to).or_default().push((from, x));
        }
    }
    let mut out = s.clone();
    let mut work: Vec<(Value, Actor)> = s.entries.keys().cloned().collect();
    while let Some((value, beta)) = work.pop() {
        let Some(y) = out.weight(&value, &beta).cloned() else {
            continue;
        };
        for (alpha, x) in incoming.get(&beta).into_iter().flatten() {
            if out.insert(value.clone(), (*alpha).clone(), x.mul(&y)) {
                work.push((value.clone(), (*alpha).clone()));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Model {
    pub name: String,
    pub assignment: BTreeMap<String, WitnessSet>,
    /// The atomic witnesses `W`.
    pub universe: BTreeSet<String>,
    pub family: Vec<TrustRelation>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ModelError {
    #[error("claim `{claim}` is assigned the non-atomic witness {value}")]
    NotAtomic { claim: String, value: Value },
    #[error("witness `{0}` is not in the model's universe")]
    OutsideUniverse(String),
}

impl Model {
    pub fn new(name: impl Into<String>) -> Self {
        Model {
            name: name.into(),
            ..Model::default()
        }
    }

    /// Assigns the atomic witness `atom^actor@weight` to claim `claim`.
    pub fn assign(&mut self, claim: &str, atom: &str, actor: Actor, weight: Weight) {
        self.universe.insert(String::from(atom));
        self.assignment
            .entry(String::from(claim))
            .or_default()
            .insert(Value::atom(atom), actor, weight);
    }

    pub fn with(mut self, claim: &str, atom: &str, actor: &str, weight: Weight) -> Self {
        self.assign(claim, atom, Actor::new(actor), weight);
        self
    }

    pub fn with_relation(mut self, rel: TrustRelation) -> Self {
        self.family.push(rel);
        self
    }

    pub fn validate(&self) -> Result<(), ModelError> {
        for (claim, set) in &self.assignment {
            for (v, _, _) in set.iter() {
                match v {
                    Value::Atom(n) if self.universe.contains(n) => {}
                    Value::Atom(n) => return Err(ModelError::OutsideUniverse(n.clone())),
                    other => {
                        return Err(ModelError::NotAtomic {
                            claim: claim.clone(),
                            value: other.clone(),
                        })
                    }
                }
            }
        }
        Ok(())
    }

    /// Actors mentioned by the assignment or the trust family.
    pub fn actors(&self) -> BTreeSet<Actor> {
        let mut out: BTreeSet<Actor> = self
            .assignment
            .values()
            .flat_map(|s| s.iter().map(|(_, a, _)| a.clone()))
            .collect();
        for rel in &self.family {
            out.extend(rel.actors());
        }
        out
    }

    pub fn relation(&self, name: &str) -> Option<&TrustRelation> {
        self.family.iter().find(|r| r.name == name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DenoteError {
    #[error("`{claim}` nests implications deeper than the bound {bound}")]
    DepthExceeded { claim: Claim, bound: usize },
    #[error("the denotation of `{claim}` exceeds {limit} elements")]
    TooLarge { claim: Claim, limit: usize },
}

fn arrow_depth(c: &Claim) -> usize {
    match c {
        Claim::Bottom | Claim::Atomic(_) => 0,
        Claim::And(a, b) | Claim::Or(a, b) => arrow_depth(a).max(arrow_depth(b)),
        Claim::Implies(a, b) => 1 + arrow_depth(a).max(arrow_depth(b)),
    }
}

/// Why evaluating a witness produced no value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Stuck {
    Unbound(String),
    NotAFunction,
    NotInTable,
    NotATag,
    NotAPair,
    OutOfFuel,
}

/// Evaluates witnesses and interprets claims over one model, caching
/// denotations.
pub struct Interpreter<'m> {
    model: &'m Model,
    depth_bound: usize,
    actors: BTreeSet<Actor>,
    trust: BTreeMap<(Actor, Actor), Weight>,
    cache: BTreeMap<Claim, WitnessSet>,
    fuel: u64,
}

impl<'m> Interpreter<'m> {
    pub fn new(model: &'m Model, depth_bound: usize) -> Self {
        let graph = TrustGraph::from_relations(&model.family);
        Interpreter {
            model,
            depth_bound,
            actors: model.actors(),
            trust: all_pairs_best_trust(&graph),
            cache: BTreeMap::new(),
            fuel: EVAL_FUEL,
        }
    }

    pub fn model(&self) -> &Model {
        self.model
    }

    /// Makes `actor` part of the domain over which implications are
    /// tabulated.
    pub fn add_actor(&mut self, actor: Actor) {
        if self.actors.insert(actor) {
            self.cache.clear();
        }
    }

    pub fn denote(&mut self, claim: &Claim) -> Result<WitnessSet, DenoteError> {
        if arrow_depth(claim) > self.depth_bound {
            return Err(DenoteError::DepthExceeded {
                claim: claim.clone(),
                bound: self.depth_bound,
            });
        }
        if let Some(s) = self.cache.get(claim) {
            return Ok(s.clone());
        }
        let too_large = || DenoteError::TooLarge {
            claim: claim.clone(),
            limit: MAX_ENTRIES,
        };
        let out = match claim {
            Claim::Bottom => WitnessSet::new(),
            Claim::Atomic(name) => {
                let assigned = self.model.assignment.get(name).cloned().unwrap_or_default();
                close_under_trust(&assigned, &self.model.family)
            }
            Claim::And(x, y) => {
                let (dx, dy) = (self.denote(x)?, self.denote(y)?);
                let mut out = WitnessSet::new();
                for (a, alpha, wa) in dx.iter() {
                    for (b, wb) in dy.at_actor(alpha) {
                        out.insert(Value::pair(a.clone(), b.clone()), alpha.clone(), wa.clone().min(wb.clone()));
                        if out.len() > MAX_ENTRIES {
                            return Err(too_large());
                        }
                    }
                }
                out
            }
            Claim::Or(x, y) => {
                let mut out = WitnessSet::new();
                for (v, a, w) in self.denote(x)?.iter() {
                    out.insert(Value::InL(Box::new(v.clone())), a.clone(), w.clone());
                }
                for (v, a, w) in self.denote(y)?.iter() {
                    out.insert(Value::InR(Box::new(v.clone())), a.clone(), w.clone());
                }
                out
            }
            Claim::Implies(x, y) => {
                let (dx, dy) = (self.denote(x)?, self.denote(y)?);
                let mut tables = WitnessSet::new();
                for alpha in self.actors.clone() {
                    let dom: Vec<(&Value, &Weight)> = dx.at_actor(&alpha).collect();
                    let cod: Vec<(&Value, &Weight)> = dy.at_actor(&alpha).collect();
                    let count = (cod.len() as u128).checked_pow(dom.len() as u32);
                    if count.map_or(true, |n| n > MAX_TABLES as u128) {
                        return Err(DenoteError::TooLarge {
                            claim: claim.clone(),
                            limit: MAX_TABLES,
                        });
                    }
                    let mut choice = alloc::vec![0usize; dom.len()];
                    if dom.is_empty() || !cod.is_empty() {
                        loop {
                            let mut table = BTreeMap::new();
                            let mut weight = Weight::one();
                            for (i, (xv, wx)) in dom.iter().enumerate() {
                                let (yv, wy) = cod[choice[i]];
                                if wy < *wx && *wy < weight {
                                    weight = wy.clone();
                                }
                                table.insert((*xv).clone(), yv.clone());
                            }
                            tables.insert(Value::Table(table), alpha.clone(), weight);
                            if !advance(&mut choice, cod.len()) {
                                break;
                            }
                        }
                    }
                    if tables.len() > MAX_ENTRIES {
                        return Err(too_large());
                    }
                }
                close_under_trust(&tables, &self.model.family)
            }
        };
        self.cache.insert(claim.clone(), out.clone());
        Ok(out)
    }

    /// Evaluates a witness under an environment for its free variables.
    pub fn eval(&mut self, t: &WitnessTerm, env: &BTreeMap<String, Value>) -> Result<Value, Stuck> {
        if self.fuel == 0 {
            return Err(Stuck::OutOfFuel);
        }
        self.fuel -= 1;
        match t {
            WitnessTerm::Atom { name, .. } => Ok(Value::Atom(name.clone())),
            WitnessTerm::Var(x) => env.get(x).cloned().ok_or_else(|| Stuck::Unbound(x.clone())),
            WitnessTerm::Pair(a, b) => Ok(Value::pair(self.eval(a, env)?, self.eval(b, env)?)),
            WitnessTerm::TagL(a) => Ok(Value::InL(Box::new(self.eval(a, env)?))),
            WitnessTerm::TagR(b) => Ok(Value::InR(Box::new(self.eval(b, env)?))),
            WitnessTerm::Lambda { param, body, .. } => {
                let free = crate::term::free_vars(t);
                let captured = env
                    .iter()
                    .filter(|(k, _)| free.contains(*k))
                    .map(|(k, v)| (k.clone(), v.clone()))
                    .collect();
                Ok(Value::Closure {
                    param: param.clone(),
                    body: (**body).clone(),
                    env: captured,
                })
            }
            WitnessTerm::Apply(g, a) => {
                let g = self.eval(g, env)?;
                let a = self.eval(a, env)?;
                self.apply(&g, a)
            }
            WitnessTerm::Cases {
                scrutinee,
                left,
                right,
            } => match self.eval(scrutinee, env)? {
                Value::InL(v) => self.eval(&left.1, &extend(env, &left.0, *v)),
                Value::InR(v) => self.eval(&right.1, &extend(env, &right.0, *v)),
                _ => Err(Stuck::NotATag),
            },
            WitnessTerm::Split {
                scrutinee,
                vars,
                body,
            } => match self.eval(scrutinee, env)? {
                Value::Pair(a, b) => {
                    let inner = extend(&extend(env, &vars.0, *a), &vars.1, *b);
                    self.eval(body, &inner)
                }
                _ => Err(Stuck::NotAPair),
            },
        }
    }

    pub fn apply(&mut self, g: &Value, arg: Value) -> Result<Value, Stuck> {
        match g {
            Value::Closure { param, body, env } => {
                let inner = extend(env, param, arg);
                self.eval(body, &inner)
            }
            Value::Table(entries) => entries.get(&arg).cloned().ok_or(Stuck::NotInTable),
            _ => Err(Stuck::NotAFunction),
        }
    }

    /// Best weight at which `actor` holds `value` as a witness of `claim`.
    pub fn weight_of(&mut self, value: &Value, actor: &Actor, claim: &Claim) -> Result<Option<Weight>, DenoteError> {
        Ok(match (claim, value) {
            (Claim::Bottom, _) => None,
            (Claim::Atomic(_), Value::Atom(_)) => self.denote(claim)?.weight(value, actor).cloned(),
            (Claim::And(x, y), Value::Pair(a, b)) => {
                match (self.weight_of(a, actor, x)?, self.weight_of(b, actor, y)?) {
                    (Some(wa), Some(wb)) => Some(wa.min(wb)),
                    _ => None,
                }
            }
            (Claim::Or(x, _), Value::InL(a)) => self.weight_of(a, actor, x)?,
            (Claim::Or(_, y), Value::InR(b)) => self.weight_of(b, actor, y)?,
            (Claim::Implies(_, _), Value::Table(_)) => self.denote(claim)?.weight(value, actor).cloned(),
            (Claim::Implies(x, y), Value::Closure { .. }) => self.closure_weight(value, actor, x, y)?,
            _ => None,
        })
    }

    /// A closure is judged by its graph: at each actor it trusts, it must be
    /// a table of the implication there.
    fn closure_weight(&mut self, f: &Value, alpha: &Actor, x: &Claim, y: &Claim) -> Result<Option<Weight>, DenoteError> {
        let dx = self.denote(x)?;
        let mut best: Option<Weight> = None;
        let reachable: Vec<(Actor, Weight)> = self
            .actors
            .iter()
            .filter_map(|beta| {
                if beta == alpha {
                    Some((beta.clone(), Weight::one()))
                } else {
                    self.trust.get(&(alpha.clone(), beta.clone())).map(|w| (beta.clone(), w.clone()))
                }
            })
            .collect();
        'actors: for (beta, trust) in reachable {
            let mut local = Weight::one();
            for (xv, wx) in dx.at_actor(&beta) {
                let Ok(r) = self.apply(f, xv.clone()) else {
                    continue 'actors;
                };
                let Some(wy) = self.weight_of(&r, &beta, y)? else {
                    continue 'actors;
                };
                if wy < *wx && wy < local {
                    local = wy;
                }
            }
            let cand = trust.mul(&local);
            if best.as_ref().map_or(true, |b| cand > *b) {
                best = Some(cand);
            }
        }
        Ok(best)
    }

    /// Whether the closed judgement holds in the model.
    pub fn holds(&mut self, j: &Judgement) -> Result<bool, DenoteError> {
        self.holds_under(j, &BTreeMap::new())
    }

    pub fn holds_under(&mut self, j: &Judgement, env: &BTreeMap<String, Value>) -> Result<bool, DenoteError> {
        self.fuel = EVAL_FUEL;
        let Ok(v) = self.eval(&j.witness, env) else {
            return Ok(false);
        };
        Ok(self
            .weight_of(&v, &j.actor, &j.claim)?
            .is_some_and(|w| w >= j.weight))
    }
}

fn extend(env: &BTreeMap<String, Value>, var: &str, v: Value) -> BTreeMap<String, Value> {
    let mut out = env.clone();
    out.insert(String::from(var), v);
    out
}

/// Odometer step over `choice` in base `base`; false after the last tuple.
fn advance(choice: &mut [usize], base: usize) -> bool {
    for c in choice.iter_mut() {
        *c += 1;
        if *c < base {
            return true;
        }
        *c = 0;
    }
    false
}

/// The denotation of `claim`.
pub fn denote(claim: &Claim, model: &Model, depth_bound: usize) -> Result<WitnessSet, DenoteError> {
    Interpreter::new(model, depth_bound).denote(claim)
}

/// Whether `j` holds in `model`. Witnesses that do not evaluate, and
/// claims too large to interpret, are not members.
pub fn member(j: &Judgement, model: &Model) -> bool {
    let mut interp = Interpreter::new(model, DEFAULT_DEPTH_BOUND);
    interp.add_actor(j.actor.clone());
    interp.holds(j).unwrap_or(false)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// The conclusion holds under every instantiation of the hypotheses.
    Holds { conclusion: Sequent, instances: usize },
    /// The conclusion fails under this instantiation.
    Fails {
        conclusion: Sequent,
        counterexample: BTreeMap<String, Value>,
    },
    /// No witness in the model satisfies this hypothesis, so the check
    /// says nothing.
    HypothesesUnsatisfied {
        conclusion: Sequent,
        hypothesis: Hypothesis,
    },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Holds { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SoundnessError {
    #[error("proof does not check: {0}")]
    NotChecked(CheckError),
    #[error("model is incompatible with the proof environment: {0}")]
    IncompatibleModel(String),
    #[error(transparent)]
    Denote(#[from] DenoteError),
    #[error("more than {0} hypothesis instantiations")]
    TooManyInstances(usize),
}

/// Checks `tree`, then tests its conclusion in `model` under every
/// instantiation of the hypotheses by witnesses satisfying them.
pub fn soundness_check(tree: &ProofTree, model: &Model, env: &CheckEnv) -> Result<Verdict, SoundnessError> {
    let conclusion = check_sequent(tree, env).map_err(SoundnessError::NotChecked)?;
    for rel in env.trust.values() {
        match model.relation(&rel.name) {
            Some(m) if m == rel => {}
            Some(_) => {
                return Err(SoundnessError::IncompatibleModel(format!(
                    "relation `{}` differs between the model and the environment",
                    rel.name
                )))
            }
            None => {
                return Err(SoundnessError::IncompatibleModel(format!(
                    "the model lacks relation `{}`",
                    rel.name
                )))
            }
        }
    }
    let mut interp = Interpreter::new(model, DEFAULT_DEPTH_BOUND);
    interp.add_actor(conclusion.conclusion.actor.clone());
    for h in &conclusion.hypotheses {
        interp.add_actor(h.actor.clone());
    }
    let mut candidates: Vec<Vec<Value>> = Vec::new();
    let mut total: usize = 1;
    for h in &conclusion.hypotheses {
        let denotation = interp.denote(&h.claim)?;
        let fits: Vec<Value> = denotation
            .at_actor(&h.actor)
            .filter(|(_, w)| **w >= h.weight)
            .map(|(v, _)| v.clone())
            .collect();
        if fits.is_empty() {
            return Ok(Verdict::HypothesesUnsatisfied {
                conclusion: conclusion.clone(),
                hypothesis: h.clone(),
            });
        }
        total = total
            .checked_mul(fits.len())
            .filter(|n| *n <= MAX_SUBSTITUTIONS)
            .ok_or(SoundnessError::TooManyInstances(MAX_SUBSTITUTIONS))?;
        candidates.push(fits);
    }
    let mut choice = alloc::vec![0usize; candidates.len()];
    loop {
        let sigma: BTreeMap<String, Value> = conclusion
            .hypotheses
            .iter()
            .zip(&choice)
            .zip(&candidates)
            .map(|((h, &i), c)| (h.var.clone(), c[i].clone()))
            .collect();
        if !interp.holds_under(&conclusion.conclusion, &sigma)? {
            return Ok(Verdict::Fails {
                conclusion,
                counterexample: sigma,
            });
        }
        if !advance_mixed(&mut choice, &candidates) {
            break;
        }
    }
    Ok(Verdict::Holds {
        conclusion,
        instances: total,
    })
}

fn advance_mixed(choice: &mut [usize], candidates: &[Vec<Value>]) -> bool {
    for (c, options) in choice.iter_mut().zip(candidates) {
        *c += 1;
        if *c < options.len() {
            return true;
        }
        *c = 0;
    }
    false
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Holds { conclusion, instances } => {
                write!(f, "sound: {conclusion} ({instances} instance")?;
                f.write_str(if *instances == 1 { ")" } else { "s)" })
            }
            Verdict::Fails {
                conclusion,
                counterexample,
            } => {
                write!(f, "unsound: {conclusion} fails with ")?;
                let parts: Vec<String> = counterexample
                    .iter()
                    .map(|(k, v)| format!("{k} := {v}"))
                    .collect();
                f.write_str(&parts.join(", "))
            }
            Verdict::HypothesesUnsatisfied { hypothesis, .. } => {
                write!(f, "vacuous: no witness in the model satisfies {hypothesis}")
            }
        }
    }
}

impl fmt::Display for Stuck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Stuck::Unbound(x) => write!(f, "unbound variable `{x}`"),
            Stuck::NotAFunction => f.write_str("applied a non-function"),
            Stuck::NotInTable => f.write_str("argument outside the table's domain"),
            Stuck::NotATag => f.write_str("cases on an untagged value"),
            Stuck::NotAPair => f.write_str("split on a non-pair"),
            Stuck::OutOfFuel => f.write_str("evaluation ran out of fuel"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn a(n: &str) -> Actor {
        Actor::new(n)
    }

    fn set(items: &[(&str, &str, &str)]) -> WitnessSet {
        items
            .iter()
            .map(|(v, ac, wt)| WeightedWitness::new(Value::atom(*v), a(ac), w(wt)))
            .collect()
    }

    #[test]
    fn closure_examples() {
        let t = TrustRelation::new("T").with_edge("k", "l", w("0.5"));
        let closed = close_under_trust(&set(&[("a", "l", "1")]), &[t]);
        assert_eq!(closed, set(&[("a", "l", "1"), ("a", "k", "0.5")]));

        let t = TrustRelation::new("T").with_edge("k", "l", w("0.5")).with_edge("l", "m", w("0.4"));
        let closed = close_under_trust(&set(&[("a", "m", "1")]), &[t]);
        assert_eq!(closed.weight(&Value::atom("a"), &a("k")), Some(&w("0.2")));

        let t = TrustRelation::new("T").with_edge("k", "l", w("0.9")).with_edge("l", "k", w("0.9"));
        let closed = close_under_trust(&set(&[("a", "k", "1")]), &[t]);
        assert_eq!(closed, set(&[("a", "k", "1"), ("a", "l", "0.9")]));
    }

    #[test]
    fn composite_denotations() {
        let m = Model::new("M")
            .with("A", "a", "P", Weight::one())
            .with("B", "b", "P", Weight::one());
        let or = denote(&Claim::or(Claim::atom("A"), Claim::atom("B")), &m, 3).unwrap();
        let expected: WitnessSet = [
            WeightedWitness::new(Value::InL(Box::new(Value::atom("a"))), a("P"), Weight::one()),
            WeightedWitness::new(Value::InR(Box::new(Value::atom("b"))), a("P"), Weight::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(or, expected);
        assert!(denote(&Claim::Bottom, &m, 3).unwrap().is_empty());
        assert!(denote(&Claim::not(Claim::atom("A")), &m, 3).unwrap().is_empty());
    }

    #[test]
    fn membership_thresholds() {
        let t = TrustRelation::new("T").with_edge("k", "l", w("0.5")).with_edge("l", "m", w("0.4"));
        let m = Model::new("M").with("A", "a", "m", Weight::one()).with_relation(t);
        let j = |actor: &str, wt: &str| Judgement::new(WitnessTerm::atom("a"), a(actor), w(wt), Claim::atom("A"));
        assert!(member(&j("k", "0.2"), &m));
        assert!(!member(&j("k", "0.3"), &m));
        let bottom = Judgement::new(WitnessTerm::atom("a"), a("k"), Weight::zero(), Claim::Bottom);
        assert!(!member(&bottom, &m));
    }

    #[test]
    fn closures_are_checked_by_their_graph() {
        let m = Model::new("M").with("A", "a", "P", Weight::one());
        let id = Judgement::new(
            WitnessTerm::lambda("x", WitnessTerm::var("x")),
            a("P"),
            Weight::one(),
            Claim::implies(Claim::atom("A"), Claim::atom("A")),
        );
        assert!(member(&id, &m));
        let not_a = Judgement::new(
            WitnessTerm::lambda("x", WitnessTerm::var("x")),
            a("P"),
            Weight::one(),
            Claim::not(Claim::atom("A")),
        );
        assert!(!member(&not_a, &m));
    }
}
