//! Explicit proof trees, replayed by the kernel.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::claim::{Claim, ClaimFamily};
use crate::judgement::{Actor, Sequent};
use crate::weight::{Weight, WeightExpr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Rule {
    Assume,
    Claim,
    BottomElim,
    OrIntroL,
    OrIntroR,
    OrElim,
    AndIntro,
    AndElim,
    ImpIntro,
    ImpElim,
    Trust,
}

impl Rule {
    pub const ALL: [Rule; 11] = [
        Rule::Assume,
        Rule::Claim,
        Rule::BottomElim,
        Rule::OrIntroL,
        Rule::OrIntroR,
        Rule::OrElim,
        Rule::AndIntro,
        Rule::AndElim,
        Rule::ImpIntro,
        Rule::ImpElim,
        Rule::Trust,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::Assume => "assume",
            Rule::Claim => "claim",
            Rule::BottomElim => "bottomElim",
            Rule::OrIntroL => "orIntroL",
            Rule::OrIntroR => "orIntroR",
            Rule::OrElim => "orElim",
            Rule::AndIntro => "andIntro",
            Rule::AndElim => "andElim",
            Rule::ImpIntro => "impIntro",
            Rule::ImpElim => "impElim",
            Rule::Trust => "trust",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Inclusive bounds on the number of premises. `assume` takes an
    /// optional claimhood premise.
    pub fn arity(self) -> (usize, usize) {
        match self {
            Rule::Assume => (0, 1),
            Rule::OrElim => (3, 3),
            Rule::AndIntro | Rule::AndElim | Rule::ImpElim => (2, 2),
            _ => (1, 1),
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A rule together with the data the premises cannot supply.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    /// `x^actor@weight : claim`; a missing actor means the environment default.
    Assume {
        var: String,
        actor: Option<Actor>,
        weight: Weight,
        claim: Claim,
    },
    Claim,
    BottomElim {
        target: Claim,
    },
    /// Concludes `A \/ other`.
    OrIntroL {
        other: Claim,
    },
    /// Concludes `other \/ A`.
    OrIntroR {
        other: Claim,
    },
    OrElim {
        left_var: String,
        right_var: String,
        family: ClaimFamily,
    },
    AndIntro,
    AndElim {
        left_var: String,
        right_var: String,
        family: ClaimFamily,
    },
    /// An explicit antecedent allows discharging a variable the premise
    /// never used.
    ImpIntro {
        var: String,
        antecedent: Option<Claim>,
        transformer: WeightExpr,
    },
    ImpElim,
    Trust {
        relation: String,
        from: Actor,
        to: Actor,
    },
}

impl Step {
    pub fn rule(&self) -> Rule {
        match self {
            Step::Assume { .. } => Rule::Assume,
            Step::Claim => Rule::Claim,
            Step::BottomElim { .. } => Rule::BottomElim,
            Step::OrIntroL { .. } => Rule::OrIntroL,
            Step::OrIntroR { .. } => Rule::OrIntroR,
            Step::OrElim { .. } => Rule::OrElim,
            Step::AndIntro => Rule::AndIntro,
            Step::AndElim { .. } => Rule::AndElim,
            Step::ImpIntro { .. } => Rule::ImpIntro,
            Step::ImpElim => Rule::ImpElim,
            Step::Trust { .. } => Rule::Trust,
        }
    }
}

/// Line and column of a node in its source script, both 1-based.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourcePos {
    pub line: u32,
    pub column: u32,
}

impl fmt::Display for SourcePos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofTree {
    pub step: Step,
    pub premises: Vec<ProofTree>,
    /// Sequent the author claims for this node; cross-checked when present.
    pub stated: Option<Sequent>,
    pub pos: Option<SourcePos>,
}

impl ProofTree {
    pub fn new(step: Step, premises: Vec<ProofTree>) -> Self {
        ProofTree {
            step,
            premises,
            stated: None,
            pos: None,
        }
    }

    pub fn leaf(step: Step) -> Self {
        Self::new(step, Vec::new())
    }

    pub fn stating(mut self, sequent: Sequent) -> Self {
        self.stated = Some(sequent);
        self
    }

    pub fn at(mut self, pos: SourcePos) -> Self {
        self.pos = Some(pos);
        self
    }

    pub fn rule(&self) -> Rule {
        self.step.rule()
    }

    pub fn node_count(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::node_count).sum::<usize>()
    }

    pub fn depth(&self) -> usize {
        1 + self.premises.iter().map(ProofTree::depth).max().unwrap_or(0)
    }

    /// The node at `path`, following premise indices from the root.
    pub fn node(&self, path: &NodePath) -> Option<&ProofTree> {
        let mut node = self;
        for &i in &path.0 {
            node = node.premises.get(i)?;
        }
        Some(node)
    }
}

/// Premise indices from the root to a node.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodePath(pub Vec<usize>);

impl NodePath {
    pub fn root() -> Self {
        NodePath(Vec::new())
    }

    pub fn child(&self, index: usize) -> Self {
        let mut v = self.0.clone();
        v.push(index);
        NodePath(v)
    }
}

impl fmt::Display for NodePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("root")?;
        for i in &self.0 {
            write!(f, ".{i}")?;
        }
        Ok(())
    }
}
