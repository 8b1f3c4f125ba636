//! Surface rendering. Everything printed here re-parses to an α-equal value.
//!
//! Claim precedence, loosest first: `->` (right-assoc), `\/`, `/\` (both
//! left-assoc), then `~` and atoms. Term application is left-assoc with
//! atomic arguments; a λ body extends as far right as possible.

use core::fmt::{self, Display, Formatter, Write};

use crate::claim::{Claim, ClaimFamily};
use crate::judgement::{Hypothesis, Judgement, Sequent};
use crate::proof::{ProofTree, Step};
use crate::term::{Provenance, WitnessTerm};
use crate::weight::WeightExpr;

const IMP: u8 = 1;
const OR: u8 = 2;
const AND: u8 = 3;
const ATOM: u8 = 4;

fn claim_level(c: &Claim) -> u8 {
    match c {
        Claim::Implies(_, _) if c.negated().is_none() => IMP,
        Claim::Or(_, _) => OR,
        Claim::And(_, _) => AND,
        _ => ATOM,
    }
}

fn write_claim(f: &mut Formatter<'_>, c: &Claim, min: u8) -> fmt::Result {
    if claim_level(c) < min {
        f.write_char('(')?;
        write_claim(f, c, 0)?;
        return f.write_char(')');
    }
    if let Some(inner) = c.negated() {
        f.write_char('~')?;
        return write_claim(f, inner, ATOM);
    }
    match c {
        Claim::Bottom => f.write_str("_|_"),
        Claim::Atomic(name) => f.write_str(name),
        Claim::Implies(a, b) => {
            write_claim(f, a, OR)?;
            f.write_str(" -> ")?;
            write_claim(f, b, IMP)
        }
        Claim::Or(a, b) => {
            write_claim(f, a, OR)?;
            f.write_str(" \\/ ")?;
            write_claim(f, b, AND)
        }
        Claim::And(a, b) => {
            write_claim(f, a, AND)?;
            f.write_str(" /\\ ")?;
            write_claim(f, b, ATOM)
        }
    }
}

impl Display for Claim {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_claim(f, self, 0)
    }
}

impl Display for ClaimFamily {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        match self {
            ClaimFamily::Constant(c) => c.fmt(f),
            ClaimFamily::Cases { on_left, on_right } => {
                write!(f, "{{i => {on_left}, j => {on_right}}}")
            }
        }
    }
}

fn write_fexpr(f: &mut Formatter<'_>, e: &WeightExpr, operand: bool) -> fmt::Result {
    match e {
        WeightExpr::Const(w) => w.fmt(f),
        WeightExpr::Arg => f.write_char('z'),
        WeightExpr::Min(a, b) => {
            f.write_str("min(")?;
            write_fexpr(f, a, false)?;
            f.write_str(", ")?;
            write_fexpr(f, b, false)?;
            f.write_char(')')
        }
        WeightExpr::Mul(a, b) => {
            if operand {
                f.write_char('(')?;
            }
            write_fexpr(f, a, false)?;
            f.write_str(" * ")?;
            write_fexpr(f, b, true)?;
            if operand {
                f.write_char(')')?;
            }
            Ok(())
        }
    }
}

impl Display for WeightExpr {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_fexpr(f, self, false)
    }
}

fn write_quoted(f: &mut Formatter<'_>, s: &str) -> fmt::Result {
    f.write_char('"')?;
    for ch in s.chars() {
        match ch {
            '"' => f.write_str("\\\"")?,
            '\\' => f.write_str("\\\\")?,
            '\n' => f.write_str("\\n")?,
            _ => f.write_char(ch)?,
        }
    }
    f.write_char('"')
}

impl Display for Provenance {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_char('[')?;
        let fields = [
            ("who", &self.who),
            ("where", &self.location),
            ("when", &self.when),
            ("how", &self.how),
        ];
        let mut first = true;
        for (key, value) in fields {
            if let Some(v) = value {
                if !first {
                    f.write_str(", ")?;
                }
                first = false;
                write!(f, "{key}=")?;
                write_quoted(f, v)?;
            }
        }
        f.write_char(']')
    }
}

const T_LAM: u8 = 0;
const T_APP: u8 = 1;
const T_ATOM: u8 = 2;

fn term_level(t: &WitnessTerm) -> u8 {
    match t {
        WitnessTerm::Lambda { .. } => T_LAM,
        WitnessTerm::Apply(_, _) => T_APP,
        _ => T_ATOM,
    }
}

fn write_term(f: &mut Formatter<'_>, t: &WitnessTerm, min: u8) -> fmt::Result {
    if term_level(t) < min {
        f.write_char('(')?;
        write_term(f, t, T_LAM)?;
        return f.write_char(')');
    }
    match t {
        WitnessTerm::Atom { name, provenance } => {
            f.write_str(name)?;
            match provenance {
                Some(p) if !p.is_empty() => p.fmt(f),
                _ => Ok(()),
            }
        }
        WitnessTerm::Var(name) => f.write_str(name),
        WitnessTerm::Pair(a, b) => {
            f.write_char('(')?;
            write_term(f, a, T_LAM)?;
            f.write_char(',')?;
            write_term(f, b, T_LAM)?;
            f.write_char(')')
        }
        WitnessTerm::TagL(a) => {
            f.write_str("i(")?;
            write_term(f, a, T_LAM)?;
            f.write_char(')')
        }
        WitnessTerm::TagR(a) => {
            f.write_str("j(")?;
            write_term(f, a, T_LAM)?;
            f.write_char(')')
        }
        WitnessTerm::Lambda {
            param,
            body,
            transformer,
        } => {
            write!(f, "\\{param}.")?;
            if transformer.is_identity() {
                write_term(f, body, T_LAM)
            } else {
                // A bare inner λ would claim the transformer for itself.
                write_term(f, body, T_APP)?;
                write!(f, " @ {transformer}")
            }
        }
        WitnessTerm::Apply(g, a) => {
            write_term(f, g, T_APP)?;
            f.write_char(' ')?;
            write_term(f, a, T_ATOM)
        }
        WitnessTerm::Cases {
            scrutinee,
            left,
            right,
        } => {
            f.write_str("cases(")?;
            write_term(f, scrutinee, T_LAM)?;
            write!(f, ", {}.", left.0)?;
            write_term(f, &left.1, T_LAM)?;
            write!(f, ", {}.", right.0)?;
            write_term(f, &right.1, T_LAM)?;
            f.write_char(')')
        }
        WitnessTerm::Split {
            scrutinee,
            vars,
            body,
        } => {
            f.write_str("split(")?;
            write_term(f, scrutinee, T_LAM)?;
            write!(f, ", {}.{}.", vars.0, vars.1)?;
            write_term(f, body, T_LAM)?;
            f.write_char(')')
        }
    }
}

impl Display for WitnessTerm {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        write_term(f, self, T_LAM)
    }
}

impl Display for Judgement {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let show_actor = !self.actor.is_default();
        let show_weight = !self.weight.is_one();
        // `\x.b@0.5` would read the weight as the λ's transformer.
        let min = if show_weight && !show_actor { T_APP } else { T_LAM };
        write_term(f, &self.witness, min)?;
        if show_actor {
            write!(f, "^{}", self.actor)?;
        }
        if show_weight {
            write!(f, "@{}", self.weight)?;
        }
        write!(f, " : {}", self.claim)
    }
}

impl Display for Hypothesis {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        f.write_str(&self.var)?;
        if !self.actor.is_default() {
            write!(f, "^{}", self.actor)?;
        }
        if !self.weight.is_one() {
            write!(f, "@{}", self.weight)?;
        }
        write!(f, " : {}", self.claim)
    }
}

impl Display for Sequent {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        for (i, h) in self.hypotheses.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            h.fmt(f)?;
        }
        if !self.hypotheses.is_empty() {
            f.write_char(' ')?;
        }
        write!(f, "|- {}", self.conclusion)
    }
}

/// Separator before a premise: inline, or a newline at the given depth.
fn premise_break(f: &mut Formatter<'_>, indent: Option<usize>) -> fmt::Result {
    match indent {
        None => f.write_str(", "),
        Some(depth) => {
            f.write_str(",\n")?;
            for _ in 0..depth {
                f.write_str("  ")?;
            }
            Ok(())
        }
    }
}

fn first_break(f: &mut Formatter<'_>, indent: Option<usize>) -> fmt::Result {
    if let Some(depth) = indent {
        f.write_char('\n')?;
        for _ in 0..depth {
            f.write_str("  ")?;
        }
    }
    Ok(())
}

fn write_tree(f: &mut Formatter<'_>, tree: &ProofTree, indent: Option<usize>) -> fmt::Result {
    let inner = indent.map(|d| d + 1);
    let p = &tree.premises;
    write!(f, "{}(", tree.rule())?;
    match &tree.step {
        Step::Assume {
            var,
            actor,
            weight,
            claim,
        } => {
            f.write_str(var)?;
            if let Some(a) = actor {
                write!(f, "^{a}")?;
            }
            if !weight.is_one() {
                write!(f, "@{weight}")?;
            }
            write!(f, " : {claim}")?;
            for premise in p {
                premise_break(f, inner)?;
                write_tree(f, premise, inner)?;
            }
        }
        Step::Claim | Step::AndIntro | Step::ImpElim => {
            first_break(f, inner)?;
            for (i, premise) in p.iter().enumerate() {
                if i > 0 {
                    premise_break(f, inner)?;
                }
                write_tree(f, premise, inner)?;
            }
        }
        Step::BottomElim { target: other }
        | Step::OrIntroL { other }
        | Step::OrIntroR { other } => {
            first_break(f, inner)?;
            write_premises(f, p, inner)?;
            write!(f, ", {other}")?;
        }
        Step::OrElim {
            left_var,
            right_var,
            family,
        } => {
            first_break(f, inner)?;
            write_nth(f, p, 0, inner)?;
            premise_break(f, inner)?;
            write!(f, "{left_var}. ")?;
            write_nth(f, p, 1, inner)?;
            premise_break(f, inner)?;
            write!(f, "{right_var}. ")?;
            write_nth(f, p, 2, inner)?;
            write!(f, ", {family}")?;
        }
        Step::AndElim {
            left_var,
            right_var,
            family,
        } => {
            first_break(f, inner)?;
            write_nth(f, p, 0, inner)?;
            premise_break(f, inner)?;
            write!(f, "{left_var} {right_var}. ")?;
            write_nth(f, p, 1, inner)?;
            write!(f, ", {family}")?;
        }
        Step::ImpIntro {
            var,
            antecedent,
            transformer,
        } => {
            f.write_str(var)?;
            if let Some(a) = antecedent {
                write!(f, " : {a}")?;
            }
            f.write_str(". ")?;
            write_premises(f, p, inner)?;
            if !transformer.is_identity() {
                write!(f, ", @ {transformer}")?;
            }
        }
        Step::Trust { relation, from, to } => {
            write!(f, "{relation}, {from} -> {to}")?;
            for premise in p {
                premise_break(f, inner)?;
                write_tree(f, premise, inner)?;
            }
        }
    }
    f.write_char(')')?;
    if let Some(s) = &tree.stated {
        write!(f, " :: {s}")?;
    }
    Ok(())
}

fn write_premises(f: &mut Formatter<'_>, p: &[ProofTree], indent: Option<usize>) -> fmt::Result {
    for (i, premise) in p.iter().enumerate() {
        if i > 0 {
            premise_break(f, indent)?;
        }
        write_tree(f, premise, indent)?;
    }
    Ok(())
}

/// Premise `i`, or `?` for a tree whose arity is already wrong.
fn write_nth(f: &mut Formatter<'_>, p: &[ProofTree], i: usize, indent: Option<usize>) -> fmt::Result {
    match p.get(i) {
        Some(t) => write_tree(f, t, indent),
        None => f.write_char('?'),
    }
}

/// `{}` renders on one line; `{:#}` puts each premise on its own line.
impl Display for ProofTree {
    fn fmt(&self, f: &mut Formatter<'_>) -> fmt::Result {
        let indent = if f.alternate() { Some(0) } else { None };
        write_tree(f, self, indent)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::judgement::Actor;
    use crate::weight::Weight;
    use alloc::string::ToString;

    fn a(n: &str) -> Claim {
        Claim::atom(n)
    }

    #[test]
    fn claim_precedence() {
        let c = Claim::implies(Claim::and(a("A"), a("B")), a("C"));
        assert_eq!(c.to_string(), "A /\\ B -> C");
        let c = Claim::implies(Claim::implies(a("A"), a("B")), a("C"));
        assert_eq!(c.to_string(), "(A -> B) -> C");
        let c = Claim::and(Claim::and(a("C1"), a("C2")), a("C3"));
        assert_eq!(c.to_string(), "C1 /\\ C2 /\\ C3");
        let c = Claim::and(a("C1"), Claim::and(a("C2"), a("C3")));
        assert_eq!(c.to_string(), "C1 /\\ (C2 /\\ C3)");
        assert_eq!(Claim::not(Claim::not(a("A"))).to_string(), "~~A");
        assert_eq!(Claim::not(Claim::or(a("A"), a("B"))).to_string(), "~(A \\/ B)");
        assert_eq!(Claim::or(a("A"), Claim::not(a("A"))).to_string(), "A \\/ ~A");
    }

    #[test]
    fn term_forms() {
        use WitnessTerm as T;
        let t = T::lambda(
            "z",
            T::lambda("y", T::lambda("x", T::pair(T::pair(T::var("x"), T::var("y")), T::var("z")))),
        );
        assert_eq!(t.to_string(), "\\z.\\y.\\x.((x,y),z)");
        let app = T::apply(T::apply(T::apply(t, T::atom("c")), T::atom("s")), T::atom("l"));
        assert_eq!(app.to_string(), "(\\z.\\y.\\x.((x,y),z)) c s l");
        let c = T::cases(T::tag_l(T::atom("a")), ("x", T::var("x")), ("y", T::var("y")));
        assert_eq!(c.to_string(), "cases(i(a), x.x, y.y)");
        let right = T::apply(T::atom("f"), T::apply(T::atom("g"), T::atom("a")));
        assert_eq!(right.to_string(), "f (g a)");
    }

    #[test]
    fn judgement_display_convention() {
        let j = Judgement::new(
            WitnessTerm::atom("a"),
            Actor::new("P"),
            Weight::from_ratio(1, 2).unwrap(),
            a("A"),
        );
        assert_eq!(j.to_string(), "a^P@0.5 : A");
        let lam = Judgement::new(
            WitnessTerm::lambda("x", WitnessTerm::var("x")),
            Actor::default_actor(),
            Weight::from_ratio(1, 2).unwrap(),
            Claim::implies(a("A"), a("A")),
        );
        assert_eq!(lam.to_string(), "(\\x.x)@0.5 : A -> A");
    }
}
