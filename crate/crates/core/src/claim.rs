//! The claim language.

use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;

use crate::term::WitnessTerm;

/// A veracity claim. Negation is sugar: `~X` is `X -> _|_`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Claim {
    Bottom,
    Atomic(String),
    And(Box<Claim>, Box<Claim>),
    Or(Box<Claim>, Box<Claim>),
    Implies(Box<Claim>, Box<Claim>),
}

impl Claim {
    pub fn atom(name: impl Into<String>) -> Self {
        Claim::Atomic(name.into())
    }

    pub fn and(left: Claim, right: Claim) -> Self {
        Claim::And(Box::new(left), Box::new(right))
    }

    pub fn or(left: Claim, right: Claim) -> Self {
        Claim::Or(Box::new(left), Box::new(right))
    }

    pub fn implies(antecedent: Claim, consequent: Claim) -> Self {
        Claim::Implies(Box::new(antecedent), Box::new(consequent))
    }

    pub fn not(claim: Claim) -> Self {
        Claim::implies(claim, Claim::Bottom)
    }

    /// `Some(X)` when this claim is `X -> _|_`.
    pub fn negated(&self) -> Option<&Claim> {
        match self {
            Claim::Implies(a, c) if **c == Claim::Bottom => Some(a),
            _ => None,
        }
    }

    /// Names of the atomic claims mentioned.
    pub fn atoms(&self) -> BTreeSet<&str> {
        let mut out = BTreeSet::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Claim::Bottom => {}
            Claim::Atomic(name) => {
                out.insert(name.as_str());
            }
            Claim::And(l, r) | Claim::Or(l, r) | Claim::Implies(l, r) => {
                l.collect_atoms(out);
                r.collect_atoms(out);
            }
        }
    }

    /// Number of connectives, counting `_|_` and atoms as size 1.
    pub fn size(&self) -> usize {
        match self {
            Claim::Bottom | Claim::Atomic(_) => 1,
            Claim::And(l, r) | Claim::Or(l, r) | Claim::Implies(l, r) => 1 + l.size() + r.size(),
        }
    }
}

/// A claim indexed by a witness, as used by the elimination rules.
///
/// Claims never mention witness variables, so a `Cases` family is fully
/// described by its member at each tag.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClaimFamily {
    Constant(Claim),
    Cases { on_left: Claim, on_right: Claim },
}

impl ClaimFamily {
    pub fn cases(on_left: Claim, on_right: Claim) -> Self {
        ClaimFamily::Cases { on_left, on_right }
    }

    pub fn is_constant(&self) -> bool {
        matches!(self, ClaimFamily::Constant(_))
    }

    /// The member at `i(x)`.
    pub fn at_left(&self) -> &Claim {
        match self {
            ClaimFamily::Constant(c) => c,
            ClaimFamily::Cases { on_left, .. } => on_left,
        }
    }

    /// The member at `j(y)`.
    pub fn at_right(&self) -> &Claim {
        match self {
            ClaimFamily::Constant(c) => c,
            ClaimFamily::Cases { on_right, .. } => on_right,
        }
    }

    /// The member at `index`. A `Cases` family needs a tagged index.
    pub fn at(&self, index: &WitnessTerm) -> Option<&Claim> {
        match (self, index) {
            (ClaimFamily::Constant(c), _) => Some(c),
            (ClaimFamily::Cases { on_left, .. }, WitnessTerm::TagL(_)) => Some(on_left),
            (ClaimFamily::Cases { on_right, .. }, WitnessTerm::TagR(_)) => Some(on_right),
            _ => None,
        }
    }

    pub fn claims(&self) -> impl Iterator<Item = &Claim> {
        let (a, b) = (self.at_left(), self.at_right());
        core::iter::once(a).chain((!self.is_constant()).then_some(b))
    }
}
