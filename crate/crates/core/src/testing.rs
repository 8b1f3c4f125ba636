//! Generators and a bounded proof search, for tests.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::claim::{Claim, ClaimFamily};
use crate::eval::normalize;
use crate::judgement::{Actor, Hypothesis, Sequent};
use crate::kernel::{
    check_and_elim, check_and_intro, check_assume, check_bottom_elim, check_implies_elim, check_implies_intro,
    check_or_elim, check_or_intro, check_sequent, check_trust, CheckEnv, Side,
};
use crate::proof::{ProofTree, Step};
use crate::semantics::Model;
use crate::term::WitnessTerm;
use crate::trust::TrustRelation;
use crate::weight::{Weight, WeightExpr};

/// A weight in {0.1, 0.2, ..., 1.0}.
pub fn tenth<R: Rng>(rng: &mut R) -> Weight {
    Weight::tenths(rng.gen_range(1..=10))
}

/// A relation on `actors` where each ordered pair of distinct actors gets
/// an edge with probability `density`.
pub fn random_relation<R: Rng>(rng: &mut R, name: &str, actors: &[Actor], density: f64) -> TrustRelation {
    let mut rel = TrustRelation::new(name);
    for k in actors {
        for l in actors {
            if k != l && rng.gen_bool(density) {
                rel.insert(k.clone(), l.clone(), tenth(rng)).expect("pairs are visited once");
            }
        }
    }
    rel
}

pub fn actor_names(n: usize) -> Vec<Actor> {
    ["k", "l", "m", "n", "o", "p"].iter().take(n).map(|s| Actor::new(*s)).collect()
}

/// A random checked proof together with an environment and a model that
/// agree on the trust relations.
#[derive(Clone, Debug)]
pub struct Instance {
    pub env: CheckEnv,
    pub model: Model,
    pub tree: ProofTree,
    pub conclusion: Sequent,
}

#[derive(Clone)]
struct Item {
    tree: ProofTree,
    seq: Sequent,
}

const CLAIMS: [&str; 3] = ["A", "B", "C"];

/// Builds a random environment, a compatible model and a checked proof.
///
/// Proofs use assumptions over atomic claims (at most four of them), the
/// conjunction and disjunction rules with constant families, trust, and
/// β-detours `impElim(impIntro(..), ..)`. Models have at most six atoms,
/// `actors` actors and `relations` relations; every hypothesis is satisfied
/// by some atom in the model.
pub fn random_instance<R: Rng>(rng: &mut R, actors: usize, relations: usize, steps: usize) -> Instance {
    let actors = actor_names(actors.max(1));
    let mut env = CheckEnv::new().with_claims(CLAIMS);
    let mut model = Model::new("M");
    for r in 0..relations {
        let rel = random_relation(rng, &format!("T{r}"), &actors, 0.5);
        env = env.with_relation(rel.clone());
        model = model.with_relation(rel);
    }

    let hyp_count = rng.gen_range(1..=4);
    let hyps: Vec<Hypothesis> = (0..hyp_count)
        .map(|i| {
            Hypothesis::new(
                format!("h{i}"),
                actors.choose(rng).expect("at least one actor").clone(),
                tenth(rng),
                Claim::atom(*CLAIMS.choose(rng).expect("claims")),
            )
        })
        .collect();

    let universe = rng.gen_range(hyp_count.max(2)..=6);
    let atoms: Vec<String> = (0..universe).map(|i| format!("w{i}")).collect();
    for (i, h) in hyps.iter().enumerate() {
        let Claim::Atomic(name) = &h.claim else { unreachable!() };
        let bump = rng.gen_range(0..=10 - tenths_of(&h.weight));
        let w = Weight::tenths(tenths_of(&h.weight) + bump);
        model.assign(name, &atoms[i % atoms.len()], h.actor.clone(), w);
    }
    for _ in 0..rng.gen_range(0..=6) {
        let claim = CLAIMS.choose(rng).expect("claims");
        let atom = atoms.choose(rng).expect("atoms");
        let actor = actors.choose(rng).expect("actors").clone();
        model.assign(claim, atom, actor, tenth(rng));
    }

    let mut g = Gen {
        env: &env,
        fresh: 0,
    };
    let mut pool: Vec<Item> = hyps.iter().map(|h| g.assume(h)).collect();
    for _ in 0..steps {
        if let Some(item) = g.extend(rng, &pool) {
            pool.push(item);
        }
    }
    let item = pool
        .iter()
        .rev()
        .take(4)
        .max_by_key(|i| i.tree.node_count())
        .expect("pool starts non-empty")
        .clone();
    Instance {
        env: env.clone(),
        model,
        tree: item.tree,
        conclusion: item.seq,
    }
}

fn tenths_of(w: &Weight) -> u8 {
    let scaled = w.as_ratio() * num_rational::BigRational::from_integer(10.into());
    u8::try_from(scaled.to_integer()).expect("weights are at most 1")
}

struct Gen<'e> {
    env: &'e CheckEnv,
    fresh: usize,
}

impl Gen<'_> {
    fn fresh(&mut self) -> String {
        self.fresh += 1;
        format!("x{}", self.fresh)
    }

    fn assume(&self, h: &Hypothesis) -> Item {
        let tree = ProofTree::leaf(Step::Assume {
            var: h.var.clone(),
            actor: Some(h.actor.clone()),
            weight: h.weight.clone(),
            claim: h.claim.clone(),
        });
        let seq = check_assume(self.env, &h.claim, &h.var, &h.actor, &h.weight).expect("claims are declared");
        Item { tree, seq }
    }

    fn bound(&mut self, actor: &Actor, weight: &Weight, claim: &Claim) -> (String, Item) {
        let var = self.fresh();
        let h = Hypothesis::new(var.clone(), actor.clone(), weight.clone(), claim.clone());
        (var, self.assume(&h))
    }

    fn extend<R: Rng>(&mut self, rng: &mut R, pool: &[Item]) -> Option<Item> {
        let p = pool.choose(rng)?.clone();
        let j = &p.seq.conclusion;
        match rng.gen_range(0..6) {
            0 => {
                let q = pool.iter().filter(|q| q.seq.conclusion.actor == j.actor).collect::<Vec<_>>();
                let q = (*q.choose(rng)?).clone();
                let (a, b) = if rng.gen_bool(0.5) { (p, q) } else { (q, p) };
                let seq = check_and_intro(&a.seq, &b.seq).ok()?;
                Some(Item {
                    tree: ProofTree::new(Step::AndIntro, alloc::vec![a.tree, b.tree]),
                    seq,
                })
            }
            1 => {
                let other = Claim::atom(*CLAIMS.choose(rng).expect("claims"));
                let (side, step) = if rng.gen_bool(0.5) {
                    (Side::Left, Step::OrIntroL { other: other.clone() })
                } else {
                    (Side::Right, Step::OrIntroR { other: other.clone() })
                };
                let seq = check_or_intro(self.env, &p.seq, side, &other).ok()?;
                Some(Item {
                    tree: ProofTree::new(step, alloc::vec![p.tree]),
                    seq,
                })
            }
            2 => {
                let mut edges = Vec::new();
                for rel in self.env.trust.values() {
                    for (from, to, _) in rel.edges() {
                        if *to == j.actor {
                            edges.push((rel.name.clone(), from.clone(), to.clone()));
                        }
                    }
                }
                let (relation, from, to) = edges.choose(rng)?.clone();
                let seq = check_trust(self.env, &relation, &from, &to, &p.seq).ok()?;
                Some(Item {
                    tree: ProofTree::new(Step::Trust { relation, from, to }, alloc::vec![p.tree]),
                    seq,
                })
            }
            3 => {
                let Claim::And(a, b) = &j.claim else { return None };
                let w = Weight::tenths(rng.gen_range(1..=tenths_of(&j.weight).max(1))).min(j.weight.clone());
                let (x, tx) = self.bound(&j.actor, &w, a);
                let (y, ty) = self.bound(&j.actor, &w, b);
                let branch = if rng.gen_bool(0.5) { (ty, tx) } else { (tx, ty) };
                let bseq = check_and_intro(&branch.0.seq, &branch.1.seq).ok()?;
                let btree = ProofTree::new(Step::AndIntro, alloc::vec![branch.0.tree, branch.1.tree]);
                let family = ClaimFamily::Constant(bseq.conclusion.claim.clone());
                let seq = check_and_elim(self.env, &p.seq, &bseq, &x, &y, &family).ok()?;
                Some(Item {
                    tree: ProofTree::new(
                        Step::AndElim {
                            left_var: x,
                            right_var: y,
                            family,
                        },
                        alloc::vec![p.tree, btree],
                    ),
                    seq,
                })
            }
            4 => {
                let Claim::Or(a, b) = &j.claim else { return None };
                let w = j.weight.clone();
                let (x, tx) = self.bound(&j.actor, &w, a);
                let (y, ty) = self.bound(&j.actor, &w, b);
                let lseq = check_or_intro(self.env, &tx.seq, Side::Right, b).ok()?;
                let rseq = check_or_intro(self.env, &ty.seq, Side::Left, a).ok()?;
                let ltree = ProofTree::new(Step::OrIntroR { other: (**b).clone() }, alloc::vec![tx.tree]);
                let rtree = ProofTree::new(Step::OrIntroL { other: (**a).clone() }, alloc::vec![ty.tree]);
                let family = ClaimFamily::Constant(Claim::or((**b).clone(), (**a).clone()));
                let seq = check_or_elim(self.env, &p.seq, &lseq, &rseq, &x, &y, &family).ok()?;
                Some(Item {
                    tree: ProofTree::new(
                        Step::OrElim {
                            left_var: x,
                            right_var: y,
                            family,
                        },
                        alloc::vec![p.tree, ltree, rtree],
                    ),
                    seq,
                })
            }
            5 => {
                // (\x. body) p, where body uses x at full weight.
                let (x, tx) = self.bound(&j.actor, &Weight::one(), &j.claim);
                let body = match rng.gen_range(0..3) {
                    0 => tx,
                    1 => {
                        let seq = check_and_intro(&tx.seq, &tx.seq).ok()?;
                        Item {
                            tree: ProofTree::new(Step::AndIntro, alloc::vec![tx.tree.clone(), tx.tree]),
                            seq,
                        }
                    }
                    _ => {
                        let other = Claim::atom(*CLAIMS.choose(rng).expect("claims"));
                        let seq = check_or_intro(self.env, &tx.seq, Side::Left, &other).ok()?;
                        Item {
                            tree: ProofTree::new(Step::OrIntroL { other }, alloc::vec![tx.tree]),
                            seq,
                        }
                    }
                };
                let fseq = check_implies_intro(self.env, &body.seq, &x, None, &WeightExpr::Arg).ok()?;
                let ftree = ProofTree::new(
                    Step::ImpIntro {
                        var: x,
                        antecedent: None,
                        transformer: WeightExpr::Arg,
                    },
                    alloc::vec![body.tree],
                );
                let seq = check_implies_elim(self.env, &fseq, &p.seq).ok()?;
                Some(Item {
                    tree: ProofTree::new(Step::ImpElim, alloc::vec![ftree, p.tree]),
                    seq,
                })
            }
            _ => None,
        }
    }
}

/// Head tag of a normal witness, as far as claim families can see it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Head {
    Left,
    Right,
    Other,
}

type Key = (Vec<(String, Claim)>, Claim, Head);

/// Outcome of [`bounded_search`].
#[derive(Clone, Debug)]
pub struct SearchResult {
    /// A closed proof of the goal, if one was found.
    pub proof: Option<ProofTree>,
    /// Number of distinct derivable sequents (up to hypotheses, claim and
    /// head tag) after each depth.
    pub per_depth: Vec<usize>,
}

struct Node {
    seq: Sequent,
    head: Head,
    step: Step,
    premises: Vec<usize>,
}

struct Search {
    pool: Vec<Claim>,
    nodes: Vec<Node>,
    seen: BTreeSet<Key>,
}

impl Search {
    fn add(&mut self, seq: Result<Sequent, crate::kernel::CheckError>, step: Step, premises: Vec<usize>) {
        let Ok(seq) = seq else { return };
        if !self.pool.contains(&seq.conclusion.claim) || seq.validate().is_err() {
            return;
        }
        let head = match &seq.conclusion.claim {
            Claim::Or(..) => match normalize(&seq.conclusion.witness).map(|nf| nf.term) {
                Ok(WitnessTerm::TagL(_)) => Head::Left,
                Ok(WitnessTerm::TagR(_)) => Head::Right,
                _ => Head::Other,
            },
            _ => Head::Other,
        };
        let mut hyps: Vec<(String, Claim)> = seq.hypotheses.iter().map(|h| (h.var.clone(), h.claim.clone())).collect();
        hyps.sort();
        if self.seen.insert((hyps, seq.conclusion.claim.clone(), head)) {
            self.nodes.push(Node {
                seq,
                head,
                step,
                premises,
            });
        }
    }

    fn tree(&self, i: usize) -> ProofTree {
        let n = &self.nodes[i];
        ProofTree::new(n.step.clone(), n.premises.iter().map(|&p| self.tree(p)).collect())
    }
}

/// Saturates the set of sequents derivable by proof trees of depth at most
/// `max_depth`, over the given environment and without trust steps.
///
/// Every rule parameter (assumed claims, `bottomElim` targets, the other
/// disjunct of `orIntro`, families, `impIntro` antecedents) ranges over the
/// subformulas of `goal` and `_|_`; every conclusion must be one of those
/// too. Assumptions use the variables in `vars`, the default actor and
/// weight 1. Two derivations are identified when they agree on hypotheses,
/// claim and the head tag of the normal witness, which is all any later
/// rule reads.
pub fn bounded_search(env: &CheckEnv, goal: &Claim, vars: &[&str], max_depth: usize) -> SearchResult {
    let mut pool: BTreeSet<Claim> = BTreeSet::new();
    subformulas(goal, &mut pool);
    pool.insert(Claim::Bottom);
    let mut s = Search {
        pool: pool.into_iter().collect(),
        nodes: Vec::new(),
        seen: BTreeSet::new(),
    };
    let actor = Actor::default_actor();
    let one = Weight::one();
    let mut per_depth = Vec::new();
    // Nodes in fresh_start..old_end were found at the previous depth; every
    // new combination uses at least one of them.
    let mut fresh_start = 0;

    for _ in 0..max_depth {
        let old_end = s.nodes.len();
        let fresh = |i: usize| i >= fresh_start;
        let pool = s.pool.clone();

        if old_end == 0 {
            for v in vars {
                for c in &pool {
                    let step = Step::Assume {
                        var: String::from(*v),
                        actor: None,
                        weight: one.clone(),
                        claim: c.clone(),
                    };
                    s.add(check_assume(env, c, v, &actor, &one), step, Vec::new());
                }
            }
        }

        let mut by_hyp: BTreeMap<(&str, &Claim), Vec<usize>> = BTreeMap::new();
        let mut by_claim: BTreeMap<Claim, Vec<usize>> = BTreeMap::new();
        for i in 0..old_end {
            for h in &s.nodes[i].seq.hypotheses {
                if let Some(v) = vars.iter().find(|v| **v == h.var) {
                    let c = pool.iter().find(|c| **c == h.claim).expect("assumed claims come from the pool");
                    by_hyp.entry((v, c)).or_default().push(i);
                }
            }
            by_claim.entry(s.nodes[i].seq.conclusion.claim.clone()).or_default().push(i);
        }

        for p in fresh_start..old_end {
            let seq = s.nodes[p].seq.clone();
            let claim = seq.conclusion.claim.clone();
            if claim == Claim::Bottom {
                for t in &pool {
                    s.add(check_bottom_elim(env, &seq, t), Step::BottomElim { target: t.clone() }, alloc::vec![p]);
                }
            }
            for o in &pool {
                if pool.contains(&Claim::or(claim.clone(), o.clone())) {
                    s.add(check_or_intro(env, &seq, Side::Left, o), Step::OrIntroL { other: o.clone() }, alloc::vec![p]);
                }
                if pool.contains(&Claim::or(o.clone(), claim.clone())) {
                    s.add(check_or_intro(env, &seq, Side::Right, o), Step::OrIntroR { other: o.clone() }, alloc::vec![p]);
                }
            }
            for v in vars {
                let antecedents: Vec<Option<&Claim>> = if seq.hypothesis(v).is_some() {
                    alloc::vec![None]
                } else {
                    pool.iter().filter(|a| pool.contains(&Claim::implies((*a).clone(), claim.clone()))).map(Some).collect()
                };
                for ante in antecedents {
                    let step = Step::ImpIntro {
                        var: String::from(*v),
                        antecedent: ante.cloned(),
                        transformer: WeightExpr::Arg,
                    };
                    s.add(check_implies_intro(env, &seq, v, ante, &WeightExpr::Arg), step, alloc::vec![p]);
                }
            }
        }

        for p in 0..old_end {
            let pseq = s.nodes[p].seq.clone();
            let pclaim = pseq.conclusion.claim.clone();
            // andIntro and impElim: pairs with at least one fresh premise.
            for (qc, qs) in &by_claim {
                let and_ok = pool.contains(&Claim::and(pclaim.clone(), qc.clone()));
                let imp_ok = matches!(&pclaim, Claim::Implies(a, _) if **a == *qc);
                if !and_ok && !imp_ok {
                    continue;
                }
                for &q in qs {
                    if !fresh(p) && !fresh(q) {
                        continue;
                    }
                    let qseq = s.nodes[q].seq.clone();
                    if and_ok {
                        s.add(check_and_intro(&pseq, &qseq), Step::AndIntro, alloc::vec![p, q]);
                    }
                    if imp_ok {
                        s.add(check_implies_elim(env, &pseq, &qseq), Step::ImpElim, alloc::vec![p, q]);
                    }
                }
            }
            if let Claim::And(a, b) = &pclaim {
                for x in vars {
                    for y in vars {
                        if x == y {
                            continue;
                        }
                        let Some(xs) = by_hyp.get(&(*x, &**a)) else { continue };
                        for &q in xs {
                            if !fresh(p) && !fresh(q) {
                                continue;
                            }
                            let qseq = s.nodes[q].seq.clone();
                            if !qseq.hypothesis(y).is_some_and(|h| h.claim == **b) {
                                continue;
                            }
                            let family = ClaimFamily::Constant(qseq.conclusion.claim.clone());
                            let step = Step::AndElim {
                                left_var: String::from(*x),
                                right_var: String::from(*y),
                                family: family.clone(),
                            };
                            s.add(check_and_elim(env, &pseq, &qseq, x, y, &family), step, alloc::vec![p, q]);
                        }
                    }
                }
            }
            if let Claim::Or(a, b) = &pclaim {
                let tagged = s.nodes[p].head != Head::Other;
                for x in vars {
                    let Some(ls) = by_hyp.get(&(*x, &**a)) else { continue };
                    for y in vars {
                        let Some(rs) = by_hyp.get(&(*y, &**b)) else { continue };
                        for &l in ls {
                            for &r in rs {
                                if !fresh(p) && !fresh(l) && !fresh(r) {
                                    continue;
                                }
                                let (lc, rc) = (
                                    &s.nodes[l].seq.conclusion.claim,
                                    &s.nodes[r].seq.conclusion.claim,
                                );
                                let mut families = Vec::new();
                                if lc == rc {
                                    families.push(ClaimFamily::Constant(lc.clone()));
                                }
                                if tagged {
                                    families.push(ClaimFamily::cases(lc.clone(), rc.clone()));
                                }
                                for family in families {
                                    let result = check_or_elim(
                                        env,
                                        &pseq,
                                        &s.nodes[l].seq,
                                        &s.nodes[r].seq,
                                        x,
                                        y,
                                        &family,
                                    );
                                    let step = Step::OrElim {
                                        left_var: x.clone(),
                                        right_var: y.clone(),
                                        family,
                                    };
                                    s.add(result, step, alloc::vec![p, l, r]);
                                }
                            }
                        }
                    }
                }
            }
        }

        fresh_start = old_end;
        per_depth.push(s.nodes.len());
        let found = (fresh_start..s.nodes.len())
            .find(|&i| s.nodes[i].seq.is_closed() && s.nodes[i].seq.conclusion.claim == *goal);
        if let Some(i) = found {
            return SearchResult {
                proof: Some(s.tree(i)),
                per_depth,
            };
        }
        if fresh_start == s.nodes.len() {
            break;
        }
    }

    SearchResult {
        proof: None,
        per_depth,
    }
}

fn subformulas(c: &Claim, out: &mut BTreeSet<Claim>) {
    if !out.insert(c.clone()) {
        return;
    }
    match c {
        Claim::And(a, b) | Claim::Or(a, b) | Claim::Implies(a, b) => {
            subformulas(a, out);
            subformulas(b, out);
        }
        Claim::Bottom | Claim::Atomic(_) => {}
    }
}

/// Re-checks a proof produced by [`bounded_search`].
pub fn recheck(env: &CheckEnv, tree: &ProofTree) -> bool {
    check_sequent(tree, env).is_ok_and(|s| s.is_closed())
}
