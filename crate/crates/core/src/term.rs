//! Witness terms: the evidence language.
//!
//! Atoms are opaque pieces of evidence, optionally carrying a provenance
//! record. Everything else is the usual λ-calculus with pairs and binary
//! sums: `i(a)`/`j(b)` tag which disjunct was justified, `cases` and
//! `split` take sums and pairs apart.

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use crate::weight::WeightExpr;

/// Who/where/when/how an atomic piece of evidence was produced.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Provenance {
    pub who: Option<String>,
    pub location: Option<String>,
    pub when: Option<String>,
    pub how: Option<String>,
}

impl Provenance {
    pub fn is_empty(&self) -> bool {
        self.who.is_none() && self.location.is_none() && self.when.is_none() && self.how.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WitnessTerm {
    Atom {
        name: String,
        provenance: Option<Provenance>,
    },
    Var(String),
    Pair(Box<WitnessTerm>, Box<WitnessTerm>),
    /// `i(a)`: the left disjunct was justified.
    TagL(Box<WitnessTerm>),
    /// `j(b)`: the right disjunct was justified.
    TagR(Box<WitnessTerm>),
    Lambda {
        param: String,
        body: Box<WitnessTerm>,
        transformer: WeightExpr,
    },
    Apply(Box<WitnessTerm>, Box<WitnessTerm>),
    /// `cases(c, x.d, y.e)`
    Cases {
        scrutinee: Box<WitnessTerm>,
        left: (String, Box<WitnessTerm>),
        right: (String, Box<WitnessTerm>),
    },
    /// `split(c, x.y.d)`
    Split {
        scrutinee: Box<WitnessTerm>,
        vars: (String, String),
        body: Box<WitnessTerm>,
    },
}

impl WitnessTerm {
    pub fn atom(name: impl Into<String>) -> Self {
        WitnessTerm::Atom {
            name: name.into(),
            provenance: None,
        }
    }

    pub fn var(name: impl Into<String>) -> Self {
        WitnessTerm::Var(name.into())
    }

    pub fn pair(fst: WitnessTerm, snd: WitnessTerm) -> Self {
        WitnessTerm::Pair(Box::new(fst), Box::new(snd))
    }

    pub fn tag_l(inner: WitnessTerm) -> Self {
        WitnessTerm::TagL(Box::new(inner))
    }

    pub fn tag_r(inner: WitnessTerm) -> Self {
        WitnessTerm::TagR(Box::new(inner))
    }

    /// λ with the identity weight transformer.
    pub fn lambda(param: impl Into<String>, body: WitnessTerm) -> Self {
        Self::lambda_with(param, body, WeightExpr::Arg)
    }

    pub fn lambda_with(param: impl Into<String>, body: WitnessTerm, transformer: WeightExpr) -> Self {
        WitnessTerm::Lambda {
            param: param.into(),
            body: Box::new(body),
            transformer,
        }
    }

    pub fn apply(func: WitnessTerm, arg: WitnessTerm) -> Self {
        WitnessTerm::Apply(Box::new(func), Box::new(arg))
    }

    pub fn cases(
        scrutinee: WitnessTerm,
        left: (impl Into<String>, WitnessTerm),
        right: (impl Into<String>, WitnessTerm),
    ) -> Self {
        WitnessTerm::Cases {
            scrutinee: Box::new(scrutinee),
            left: (left.0.into(), Box::new(left.1)),
            right: (right.0.into(), Box::new(right.1)),
        }
    }

    pub fn split(
        scrutinee: WitnessTerm,
        x: impl Into<String>,
        y: impl Into<String>,
        body: WitnessTerm,
    ) -> Self {
        WitnessTerm::Split {
            scrutinee: Box::new(scrutinee),
            vars: (x.into(), y.into()),
            body: Box::new(body),
        }
    }

    pub fn is_var(&self, name: &str) -> bool {
        matches!(self, WitnessTerm::Var(v) if v == name)
    }

    /// Node count.
    pub fn size(&self) -> usize {
        match self {
            WitnessTerm::Atom { .. } | WitnessTerm::Var(_) => 1,
            WitnessTerm::TagL(t) | WitnessTerm::TagR(t) => 1 + t.size(),
            WitnessTerm::Lambda { body, .. } => 1 + body.size(),
            WitnessTerm::Pair(a, b) | WitnessTerm::Apply(a, b) => 1 + a.size() + b.size(),
            WitnessTerm::Cases {
                scrutinee,
                left,
                right,
            } => 1 + scrutinee.size() + left.1.size() + right.1.size(),
            WitnessTerm::Split {
                scrutinee, body, ..
            } => 1 + scrutinee.size() + body.size(),
        }
    }
}

/// Variables not bound by an enclosing λ, `cases` or `split` binder.
pub fn free_vars(t: &WitnessTerm) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    let mut bound = Vec::new();
    collect_free(t, &mut bound, &mut out);
    out
}

fn collect_free<'a>(t: &'a WitnessTerm, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
    match t {
        WitnessTerm::Atom { .. } => {}
        WitnessTerm::Var(v) => {
            if !bound.contains(&v.as_str()) {
                out.insert(v.clone());
            }
        }
        WitnessTerm::Pair(a, b) | WitnessTerm::Apply(a, b) => {
            collect_free(a, bound, out);
            collect_free(b, bound, out);
        }
        WitnessTerm::TagL(a) | WitnessTerm::TagR(a) => collect_free(a, bound, out),
        WitnessTerm::Lambda { param, body, .. } => {
            bound.push(param);
            collect_free(body, bound, out);
            bound.pop();
        }
        WitnessTerm::Cases {
            scrutinee,
            left,
            right,
        } => {
            collect_free(scrutinee, bound, out);
            for (x, body) in [left, right] {
                bound.push(x);
                collect_free(body, bound, out);
                bound.pop();
            }
        }
        WitnessTerm::Split {
            scrutinee,
            vars,
            body,
        } => {
            collect_free(scrutinee, bound, out);
            bound.push(&vars.0);
            bound.push(&vars.1);
            collect_free(body, bound, out);
            bound.truncate(bound.len() - 2);
        }
    }
}

pub fn occurs_free(t: &WitnessTerm, var: &str) -> bool {
    free_vars(t).contains(var)
}

/// Capture-avoiding substitution of `replacement` for the free occurrences
/// of `var`.
pub fn substitute(t: &WitnessTerm, var: &str, replacement: &WitnessTerm) -> WitnessTerm {
    let mut map = BTreeMap::new();
    map.insert(String::from(var), replacement.clone());
    substitute_all(t, &map)
}

/// Simultaneous capture-avoiding substitution.
pub fn substitute_all(t: &WitnessTerm, map: &BTreeMap<String, WitnessTerm>) -> WitnessTerm {
    if map.is_empty() {
        return t.clone();
    }
    match t {
        WitnessTerm::Atom { .. } => t.clone(),
        WitnessTerm::Var(v) => map.get(v).cloned().unwrap_or_else(|| t.clone()),
        WitnessTerm::Pair(a, b) => WitnessTerm::pair(substitute_all(a, map), substitute_all(b, map)),
        WitnessTerm::Apply(a, b) => WitnessTerm::apply(substitute_all(a, map), substitute_all(b, map)),
        WitnessTerm::TagL(a) => WitnessTerm::tag_l(substitute_all(a, map)),
        WitnessTerm::TagR(a) => WitnessTerm::tag_r(substitute_all(a, map)),
        WitnessTerm::Lambda {
            param,
            body,
            transformer,
        } => {
            let (param, body) = under_binders(&[param], body, map);
            WitnessTerm::Lambda {
                param: param.into_iter().next().expect("one binder"),
                body: Box::new(body),
                transformer: transformer.clone(),
            }
        }
        WitnessTerm::Cases {
            scrutinee,
            left,
            right,
        } => {
            let (mut lx, lbody) = under_binders(&[&left.0], &left.1, map);
            let (mut rx, rbody) = under_binders(&[&right.0], &right.1, map);
            WitnessTerm::Cases {
                scrutinee: Box::new(substitute_all(scrutinee, map)),
                left: (lx.remove(0), Box::new(lbody)),
                right: (rx.remove(0), Box::new(rbody)),
            }
        }
        WitnessTerm::Split {
            scrutinee,
            vars,
            body,
        } => {
            let (mut xs, body) = under_binders(&[&vars.0, &vars.1], body, map);
            let y = xs.pop().expect("two binders");
            let x = xs.pop().expect("two binders");
            WitnessTerm::Split {
                scrutinee: Box::new(substitute_all(scrutinee, map)),
                vars: (x, y),
                body: Box::new(body),
            }
        }
    }
}

/// Pushes a substitution under binders, renaming any binder that would
/// capture a free variable of the incoming replacements.
fn under_binders(
    binders: &[&String],
    body: &WitnessTerm,
    map: &BTreeMap<String, WitnessTerm>,
) -> (Vec<String>, WitnessTerm) {
    let mut inner: BTreeMap<String, WitnessTerm> = map
        .iter()
        .filter(|(k, _)| !binders.iter().any(|b| *b == *k))
        .map(|(k, v)| (k.clone(), v.clone()))
        .collect();
    let body_free = free_vars(body);
    inner.retain(|k, _| body_free.contains(k));
    if inner.is_empty() {
        return (binders.iter().map(|b| (*b).clone()).collect(), body.clone());
    }
    let incoming: BTreeSet<String> = inner.values().flat_map(free_vars).collect();
    let mut avoid: BTreeSet<String> = incoming.clone();
    avoid.extend(body_free.iter().cloned());
    avoid.extend(binders.iter().map(|b| (*b).clone()));
    let mut names = Vec::with_capacity(binders.len());
    for b in binders {
        if incoming.contains(b.as_str()) {
            let fresh = fresh_name(b, &avoid);
            avoid.insert(fresh.clone());
            inner.insert((*b).clone(), WitnessTerm::Var(fresh.clone()));
            names.push(fresh);
        } else {
            names.push((*b).clone());
        }
    }
    (names, substitute_all(body, &inner))
}

/// `base` primed until it avoids every name in `avoid`.
pub fn fresh_name(base: &str, avoid: &BTreeSet<String>) -> String {
    let mut name = String::from(base);
    loop {
        name.push('\'');
        if !avoid.contains(&name) {
            return name;
        }
    }
}

/// Equality up to renaming of bound variables.
pub fn alpha_equal(t1: &WitnessTerm, t2: &WitnessTerm) -> bool {
    let mut left = Vec::new();
    let mut right = Vec::new();
    alpha_eq(t1, t2, &mut left, &mut right)
}

fn binder_index(env: &[&str], name: &str) -> Option<usize> {
    env.iter().rposition(|b| *b == name)
}

fn alpha_eq<'a>(
    a: &'a WitnessTerm,
    b: &'a WitnessTerm,
    ea: &mut Vec<&'a str>,
    eb: &mut Vec<&'a str>,
) -> bool {
    use WitnessTerm::*;
    match (a, b) {
        (Atom { .. }, Atom { .. }) => a == b,
        (Var(x), Var(y)) => match (binder_index(ea, x), binder_index(eb, y)) {
            (Some(i), Some(j)) => i == j,
            (None, None) => x == y,
            _ => false,
        },
        (Pair(a1, a2), Pair(b1, b2)) | (Apply(a1, a2), Apply(b1, b2)) => {
            alpha_eq(a1, b1, ea, eb) && alpha_eq(a2, b2, ea, eb)
        }
        (TagL(x), TagL(y)) | (TagR(x), TagR(y)) => alpha_eq(x, y, ea, eb),
        (
            Lambda {
                param: p,
                body: bp,
                transformer: fp,
            },
            Lambda {
                param: q,
                body: bq,
                transformer: fq,
            },
        ) => fp == fq && scoped(&[p], &[q], bp, bq, ea, eb),
        (
            Cases {
                scrutinee: s1,
                left: l1,
                right: r1,
            },
            Cases {
                scrutinee: s2,
                left: l2,
                right: r2,
            },
        ) => {
            alpha_eq(s1, s2, ea, eb)
                && scoped(&[&l1.0], &[&l2.0], &l1.1, &l2.1, ea, eb)
                && scoped(&[&r1.0], &[&r2.0], &r1.1, &r2.1, ea, eb)
        }
        (
            Split {
                scrutinee: s1,
                vars: v1,
                body: b1,
            },
            Split {
                scrutinee: s2,
                vars: v2,
                body: b2,
            },
        ) => alpha_eq(s1, s2, ea, eb) && scoped(&[&v1.0, &v1.1], &[&v2.0, &v2.1], b1, b2, ea, eb),
        _ => false,
    }
}

fn scoped<'a>(
    xs: &[&'a String],
    ys: &[&'a String],
    a: &'a WitnessTerm,
    b: &'a WitnessTerm,
    ea: &mut Vec<&'a str>,
    eb: &mut Vec<&'a str>,
) -> bool {
    ea.extend(xs.iter().map(|s| s.as_str()));
    eb.extend(ys.iter().map(|s| s.as_str()));
    let ok = alpha_eq(a, b, ea, eb);
    ea.truncate(ea.len() - xs.len());
    eb.truncate(eb.len() - ys.len());
    ok
}

#[cfg(test)]
mod tests {
    use super::*;
    use WitnessTerm as T;

    fn set(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| String::from(*s)).collect()
    }

    #[test]
    fn free_vars_examples() {
        assert_eq!(free_vars(&T::var("x")), set(&["x"]));
        assert_eq!(free_vars(&T::lambda("x", T::var("x"))), set(&[]));
        let t = T::cases(T::var("c"), ("x", T::var("x")), ("y", T::var("z")));
        assert_eq!(free_vars(&t), set(&["c", "z"]));
        let s = T::split(T::var("p"), "x", "y", T::pair(T::var("y"), T::var("w")));
        assert_eq!(free_vars(&s), set(&["p", "w"]));
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(substitute(&T::var("x"), "x", &T::atom("a")), T::atom("a"));
        let id = T::lambda("x", T::var("x"));
        assert_eq!(substitute(&id, "x", &T::atom("a")), id);
        let t = T::lambda("y", T::pair(T::var("x"), T::var("y")));
        let got = substitute(&t, "x", &T::var("y"));
        assert_eq!(got, T::lambda("y'", T::pair(T::var("y"), T::var("y'"))));
    }

    #[test]
    fn split_substitution_is_simultaneous() {
        let mut map = BTreeMap::new();
        map.insert(String::from("x"), T::var("y"));
        map.insert(String::from("y"), T::var("x"));
        let got = substitute_all(&T::pair(T::var("x"), T::var("y")), &map);
        assert_eq!(got, T::pair(T::var("y"), T::var("x")));
    }

    #[test]
    fn renaming_avoids_body_names() {
        // \y. (x, y, y') with x := y must not collide with the existing y'.
        let t = T::lambda("y", T::pair(T::var("x"), T::pair(T::var("y"), T::var("y'"))));
        let got = substitute(&t, "x", &T::var("y"));
        let expected = T::lambda("y''", T::pair(T::var("y"), T::pair(T::var("y''"), T::var("y'"))));
        assert_eq!(got, expected);
    }

    #[test]
    fn alpha_examples() {
        assert!(alpha_equal(&T::lambda("x", T::var("x")), &T::lambda("y", T::var("y"))));
        assert!(!alpha_equal(&T::atom("a"), &T::atom("b")));
        let c1 = T::cases(T::var("c"), ("x", T::var("x")), ("y", T::var("y")));
        let c2 = T::cases(T::var("c"), ("u", T::var("u")), ("v", T::var("v")));
        assert!(alpha_equal(&c1, &c2));
        // free vs bound
        assert!(!alpha_equal(&T::lambda("x", T::var("y")), &T::lambda("y", T::var("y"))));
        // split binder order matters
        let s1 = T::split(T::var("p"), "x", "y", T::var("x"));
        let s2 = T::split(T::var("p"), "y", "x", T::var("x"));
        assert!(!alpha_equal(&s1, &s2));
    }
}
