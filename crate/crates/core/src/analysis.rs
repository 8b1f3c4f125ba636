//! Trust relations as weighted digraphs.
//!
//! An edge `k -> l @ x` says `k` trusts `l` to degree `x`; trusting along a
//! path multiplies the weights. Since every weight is at most 1, a path
//! never gains trust by growing, so the best (max-product) path can be found
//! with Dijkstra's algorithm using exact rational comparisons.

use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::judgement::Actor;
use crate::trust::TrustRelation;
use crate::weight::Weight;

/// Adjacency view of one or more trust relations. Parallel edges from
/// different relations collapse to the strongest one.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TrustGraph {
    actors: BTreeSet<Actor>,
    out: BTreeMap<Actor, BTreeMap<Actor, Weight>>,
}

impl TrustGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_relation(rel: &TrustRelation) -> Self {
        Self::from_relations(core::iter::once(rel))
    }

    pub fn from_relations<'a, I>(relations: I) -> Self
    where
        I: IntoIterator<Item = &'a TrustRelation>,
    {
        let mut g = TrustGraph::new();
        for rel in relations {
            for (from, to, w) in rel.edges() {
                g.add_edge(from.clone(), to.clone(), w.clone());
            }
        }
        g
    }

    pub fn add_actor(&mut self, actor: Actor) {
        self.actors.insert(actor);
    }

    /// Keeps the larger weight if the edge already exists.
    pub fn add_edge(&mut self, from: Actor, to: Actor, weight: Weight) {
        self.actors.insert(from.clone());
        self.actors.insert(to.clone());
        let slot = self.out.entry(from).or_default().entry(to).or_insert_with(Weight::zero);
        if weight > *slot {
            *slot = weight;
        }
    }

    pub fn actors(&self) -> &BTreeSet<Actor> {
        &self.actors
    }

    pub fn weight(&self, from: &Actor, to: &Actor) -> Option<&Weight> {
        self.out.get(from)?.get(to)
    }

    pub fn successors(&self, from: &Actor) -> impl Iterator<Item = (&Actor, &Weight)> {
        self.out.get(from).into_iter().flat_map(|m| m.iter())
    }

    pub fn edges(&self) -> impl Iterator<Item = (&Actor, &Actor, &Weight)> {
        self.out
            .iter()
            .flat_map(|(f, m)| m.iter().map(move |(t, w)| (f, t, w)))
    }
}

#[derive(PartialEq, Eq)]
struct Frontier {
    weight: Weight,
    actor: Actor,
}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        // Heaviest first; ties broken towards the smaller name for determinism.
        self.weight
            .cmp(&other.weight)
            .then_with(|| other.actor.cmp(&self.actor))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Best trust and the predecessor on a best path, for every actor reachable
/// from `from`.
pub fn best_trust_tree(g: &TrustGraph, from: &Actor) -> BTreeMap<Actor, (Weight, Option<Actor>)> {
    let mut best: BTreeMap<Actor, (Weight, Option<Actor>)> = BTreeMap::new();
    let mut done: BTreeSet<Actor> = BTreeSet::new();
    let mut heap = BinaryHeap::new();
    best.insert(from.clone(), (Weight::one(), None));
    heap.push(Frontier {
        weight: Weight::one(),
        actor: from.clone(),
    });
    while let Some(Frontier { weight, actor }) = heap.pop() {
        if !done.insert(actor.clone()) {
            continue;
        }
        for (next, w) in g.successors(&actor) {
            if done.contains(next) {
                continue;
            }
            let cand = weight.mul(w);
            let better = match best.get(next) {
                Some((cur, _)) => cand > *cur,
                None => true,
            };
            if better {
                best.insert(next.clone(), (cand.clone(), Some(actor.clone())));
                heap.push(Frontier {
                    weight: cand,
                    actor: next.clone(),
                });
            }
        }
    }
    best
}

/// Maximum over all paths of the product of edge weights; `from == to`
/// is 1 by implicit self-trust.
pub fn best_trust(g: &TrustGraph, from: &Actor, to: &Actor) -> Option<Weight> {
    best_trust_path(g, from, to).map(|(_, w)| w)
}

/// A best path, `from` first, together with its weight.
pub fn best_trust_path(g: &TrustGraph, from: &Actor, to: &Actor) -> Option<(Vec<Actor>, Weight)> {
    if from == to {
        return Some((vec![from.clone()], Weight::one()));
    }
    let tree = best_trust_tree(g, from);
    let (weight, _) = tree.get(to)?.clone();
    let mut path = vec![to.clone()];
    let mut cur = to;
    while let Some((_, Some(prev))) = tree.get(cur) {
        path.push(prev.clone());
        cur = prev;
    }
    path.reverse();
    Some((path, weight))
}

/// Best trust between every ordered pair of actors with a path.
pub fn all_pairs_best_trust(g: &TrustGraph) -> BTreeMap<(Actor, Actor), Weight> {
    let mut out = BTreeMap::new();
    for a in g.actors() {
        for (b, (w, _)) in best_trust_tree(g, a) {
            out.insert((a.clone(), b), w);
        }
    }
    out
}

/// Product of a chain of trust weights; the empty chain is full trust.
pub fn chain_weight(weights: &[Weight]) -> Weight {
    weights.iter().fold(Weight::one(), |acc, w| acc.mul(w))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainStarComparison {
    pub star_at_least_chain: bool,
    pub chain: Weight,
    pub star: Weight,
}

/// A star routes trust through a fully trusted ledger which in turn trusts
/// the endpoint with `ledger_trust`, so the star gives `1 * c`.
pub fn compare_chain_star(chain_weights: &[Weight], ledger_trust: &Weight) -> ChainStarComparison {
    let chain = chain_weight(chain_weights);
    let star = Weight::one().mul(ledger_trust);
    ChainStarComparison {
        star_at_least_chain: star >= chain,
        chain,
        star,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport {
    /// No actor distrusts itself: self-trust is implicitly 1, and no
    /// explicit self-edge lowers it.
    pub reflexive_complete: bool,
    /// Pairs `(k, l)`, `k < l`, with edges both ways.
    pub symmetric_pairs: Vec<(Actor, Actor)>,
    /// The maximal simple path with the smallest product.
    pub longest_chain_decay: Option<(Vec<Actor>, Weight)>,
}

pub fn relation_properties(g: &TrustGraph) -> RelationReport {
    let reflexive_complete = g.edges().all(|(f, t, w)| f != t || w.is_one());
    let symmetric_pairs = g
        .edges()
        .filter(|(f, t, _)| f < t && g.weight(t, f).is_some())
        .map(|(f, t, _)| (f.clone(), t.clone()))
        .collect();
    let mut decay: Option<(Vec<Actor>, Weight)> = None;
    for start in g.actors() {
        let mut path = vec![start.clone()];
        decay_search(g, &mut path, Weight::one(), &mut decay);
    }
    RelationReport {
        reflexive_complete,
        symmetric_pairs,
        longest_chain_decay: decay,
    }
}

fn decay_search(g: &TrustGraph, path: &mut Vec<Actor>, weight: Weight, best: &mut Option<(Vec<Actor>, Weight)>) {
    let last = path.last().expect("path starts non-empty").clone();
    let mut extended = false;
    for (next, w) in g.successors(&last) {
        if path.contains(next) {
            continue;
        }
        extended = true;
        path.push(next.clone());
        decay_search(g, path, weight.mul(w), best);
        path.pop();
    }
    if extended || path.len() < 2 {
        return;
    }
    let better = match best {
        None => true,
        Some((p, w)) => {
            weight < *w || (weight == *w && (path.len() > p.len() || (path.len() == p.len() && *path < *p)))
        }
    };
    if better {
        *best = Some((path.clone(), weight));
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

    #[test]
    fn chain_products() {
        let t = TrustRelation::new("T").with_edge("k", "l", w("0.5")).with_edge("l", "m", w("0.4"));
        let g = TrustGraph::from_relation(&t);
        assert_eq!(best_trust(&g, &a("k"), &a("m")), Some(w("0.2")));
        assert_eq!(best_trust(&g, &a("k"), &a("k")), Some(Weight::one()));
        assert_eq!(best_trust(&g, &a("m"), &a("k")), None);
        let (path, _) = best_trust_path(&g, &a("k"), &a("m")).unwrap();
        assert_eq!(path, [a("k"), a("l"), a("m")]);
    }

    #[test]
    fn parallel_paths_take_the_max() {
        let t = TrustRelation::new("T")
            .with_edge("a", "b", w("0.9"))
            .with_edge("b", "c", w("0.9"))
            .with_edge("a", "c", w("0.7"));
        let g = TrustGraph::from_relation(&t);
        assert_eq!(best_trust(&g, &a("a"), &a("c")), Some(w("0.81")));
    }

    #[test]
    fn chain_and_star() {
        assert_eq!(chain_weight(&[w("0.5"), w("0.4")]), w("0.2"));
        assert_eq!(chain_weight(&[]), Weight::one());
        let chain = [w("0.8"), w("0.8"), w("0.8"), w("0.8")];
        assert_eq!(chain_weight(&chain), w("0.4096"));
        let cmp = compare_chain_star(&chain, &w("0.5"));
        assert!(cmp.star_at_least_chain);
        assert!(!compare_chain_star(&chain, &w("0.4")).star_at_least_chain);
        assert!(compare_chain_star(&[Weight::one()], &Weight::one()).star_at_least_chain);
        assert!(!compare_chain_star(&[w("0.9")], &w("0.5")).star_at_least_chain);
    }

    #[test]
    fn properties_report() {
        let mut g = TrustGraph::new();
        g.add_actor(a("solo"));
        let r = relation_properties(&g);
        assert!(r.reflexive_complete);
        assert!(r.symmetric_pairs.is_empty());
        assert_eq!(r.longest_chain_decay, None);

        let t = TrustRelation::new("T").with_edge("k", "l", w("0.5")).with_edge("l", "k", w("0.5"));
        let r = relation_properties(&TrustGraph::from_relation(&t));
        assert_eq!(r.symmetric_pairs, [(a("k"), a("l"))]);

        let mut chain = TrustRelation::new("S");
        for (f, t) in [("p", "q"), ("q", "r"), ("r", "s"), ("s", "t"), ("t", "u")] {
            chain = chain.with_edge(f, t, w("0.8"));
        }
        let r = relation_properties(&TrustGraph::from_relation(&chain));
        let (path, weight) = r.longest_chain_decay.unwrap();
        assert_eq!(path.len(), 6);
        assert_eq!(weight, w("0.32768"));
    }
}
