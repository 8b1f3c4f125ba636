//! Named, weighted trust relations between actors.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;

use crate::judgement::Actor;
use crate::weight::Weight;

/// `from` trusts `to` with the edge weight: `k T_x l`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TrustRelation {
    pub name: String,
    edges: BTreeMap<(Actor, Actor), Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("relation `{relation}` already has an edge {from} -> {to}")]
pub struct DuplicateEdge {
    pub relation: String,
    pub from: Actor,
    pub to: Actor,
}

impl TrustRelation {
    pub fn new(name: impl Into<String>) -> Self {
        TrustRelation {
            name: name.into(),
            edges: BTreeMap::new(),
        }
    }

    /// Adds an edge; at most one weight is stored per ordered pair.
    pub fn insert(&mut self, from: Actor, to: Actor, weight: Weight) -> Result<(), DuplicateEdge> {
        if self.edges.contains_key(&(from.clone(), to.clone())) {
            return Err(DuplicateEdge {
                relation: self.name.clone(),
                from,
                to,
            });
        }
        self.edges.insert((from, to), weight);
        Ok(())
    }

    /// Builder form of [`insert`](Self::insert) that overwrites.
    pub fn with_edge(mut self, from: &str, to: &str, weight: Weight) -> Self {
        self.edges.insert((Actor::new(from), Actor::new(to)), weight);
        self
    }

    pub fn weight(&self, from: &Actor, to: &Actor) -> Option<&Weight> {
        self.edges.get(&(from.clone(), to.clone()))
    }

    /// Edges in `(from, to)` order.
    pub fn edges(&self) -> impl Iterator<Item = (&Actor, &Actor, &Weight)> {
        self.edges.iter().map(|((f, t), w)| (f, t, w))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn actors(&self) -> BTreeSet<Actor> {
        self.edges
            .keys()
            .flat_map(|(f, t)| [f.clone(), t.clone()])
            .collect()
    }
}
