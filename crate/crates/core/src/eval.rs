//! Normal-order reduction of witness terms.
//!
//! Three computation rules: β, `cases(i(a), x.d, y.e) = d[x:=a]` (and the
//! `j` analogue), and `split((a,b), x.y.d) = d[x:=a, y:=b]`. Reduction
//! happens everywhere, including under binders and inside tags; atoms and
//! weight transformers are inert.

use alloc::collections::BTreeMap;
use alloc::string::String;

use crate::term::{alpha_equal, substitute, substitute_all, WitnessTerm};

pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub term: WitnessTerm,
    pub steps: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no normal form within {budget} steps")]
    BudgetExceeded { budget: u64 },
}

/// Contracts the root redex, if the root is one.
fn contract(t: &WitnessTerm) -> Option<WitnessTerm> {
    match t {
        WitnessTerm::Apply(g, a) => match &**g {
            WitnessTerm::Lambda { param, body, .. } => Some(substitute(body, param, a)),
            _ => None,
        },
        WitnessTerm::Cases {
            scrutinee,
            left,
            right,
        } => match &**scrutinee {
            WitnessTerm::TagL(a) => Some(substitute(&left.1, &left.0, a)),
            WitnessTerm::TagR(b) => Some(substitute(&right.1, &right.0, b)),
            _ => None,
        },
        WitnessTerm::Split {
            scrutinee,
            vars,
            body,
        } => match &**scrutinee {
            WitnessTerm::Pair(a, b) => {
                let mut map: BTreeMap<String, WitnessTerm> = BTreeMap::new();
                // For split(p, x.x.d) the second binder shadows the first.
                map.insert(vars.0.clone(), (**a).clone());
                map.insert(vars.1.clone(), (**b).clone());
                Some(substitute_all(body, &map))
            }
            _ => None,
        },
        _ => None,
    }
}

pub fn is_redex(t: &WitnessTerm) -> bool {
    matches!(
        t,
        WitnessTerm::Apply(g, _) if matches!(**g, WitnessTerm::Lambda { .. })
    ) || matches!(
        t,
        WitnessTerm::Cases { scrutinee, .. } if matches!(**scrutinee, WitnessTerm::TagL(_) | WitnessTerm::TagR(_))
    ) || matches!(
        t,
        WitnessTerm::Split { scrutinee, .. } if matches!(**scrutinee, WitnessTerm::Pair(_, _))
    )
}

/// One leftmost-outermost reduction, or `None` when `t` is normal.
pub fn step(t: &WitnessTerm) -> Option<WitnessTerm> {
    if let Some(r) = contract(t) {
        return Some(r);
    }
    use WitnessTerm as T;
    match t {
        T::Atom { .. } | T::Var(_) => None,
        T::Apply(g, a) => step(g)
            .map(|g| T::apply(g, (**a).clone()))
            .or_else(|| step(a).map(|a| T::apply((**g).clone(), a))),
        T::Pair(a, b) => step(a)
            .map(|a| T::pair(a, (**b).clone()))
            .or_else(|| step(b).map(|b| T::pair((**a).clone(), b))),
        T::TagL(a) => step(a).map(T::tag_l),
        T::TagR(a) => step(a).map(T::tag_r),
        T::Lambda {
            param,
            body,
            transformer,
        } => step(body).map(|body| T::lambda_with(param.clone(), body, transformer.clone())),
        T::Cases {
            scrutinee,
            left,
            right,
        } => {
            if let Some(s) = step(scrutinee) {
                return Some(T::Cases {
                    scrutinee: s.into(),
                    left: left.clone(),
                    right: right.clone(),
                });
            }
            if let Some(d) = step(&left.1) {
                return Some(T::Cases {
                    scrutinee: scrutinee.clone(),
                    left: (left.0.clone(), d.into()),
                    right: right.clone(),
                });
            }
            step(&right.1).map(|e| T::Cases {
                scrutinee: scrutinee.clone(),
                left: left.clone(),
                right: (right.0.clone(), e.into()),
            })
        }
        T::Split {
            scrutinee,
            vars,
            body,
        } => {
            if let Some(s) = step(scrutinee) {
                return Some(T::Split {
                    scrutinee: s.into(),
                    vars: vars.clone(),
                    body: body.clone(),
                });
            }
            step(body).map(|b| T::Split {
                scrutinee: scrutinee.clone(),
                vars: vars.clone(),
                body: b.into(),
            })
        }
    }
}

pub fn normalize_with_budget(t: &WitnessTerm, budget: u64) -> Result<NormalForm, EvalError> {
    let mut term = t.clone();
    let mut steps = 0;
    while let Some(next) = step(&term) {
        if steps == budget {
            return Err(EvalError::BudgetExceeded { budget });
        }
        term = next;
        steps += 1;
    }
    Ok(NormalForm { term, steps })
}

pub fn normalize(t: &WitnessTerm) -> Result<NormalForm, EvalError> {
    normalize_with_budget(t, DEFAULT_STEP_BUDGET)
}

/// α-equality of normal forms.
pub fn def_equal(t1: &WitnessTerm, t2: &WitnessTerm) -> Result<bool, EvalError> {
    Ok(alpha_equal(&normalize(t1)?.term, &normalize(t2)?.term))
}

/// True when no subterm is a redex.
pub fn is_normal(t: &WitnessTerm) -> bool {
    step(t).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use WitnessTerm as T;

    fn a(n: &str) -> T {
        T::atom(n)
    }

    #[test]
    fn cases_rules() {
        let t = T::cases(T::tag_l(a("a")), ("x", T::var("x")), ("y", T::var("y")));
        assert_eq!(step(&t), Some(a("a")));
        let t = T::cases(T::tag_r(a("b")), ("x", a("d")), ("y", T::var("y")));
        assert_eq!(normalize(&t).unwrap(), NormalForm { term: a("b"), steps: 1 });
    }

    #[test]
    fn split_swaps() {
        let t = T::split(T::pair(a("a"), a("b")), "x", "y", T::pair(T::var("y"), T::var("x")));
        assert_eq!(step(&t), Some(T::pair(a("b"), a("a"))));
    }

    #[test]
    fn curried_penelope_takes_three_steps() {
        let f = T::lambda(
            "z",
            T::lambda("y", T::lambda("x", T::pair(T::pair(T::var("x"), T::var("y")), T::var("z")))),
        );
        let t = T::apply(T::apply(T::apply(f, a("c")), a("s")), a("l"));
        let nf = normalize(&t).unwrap();
        assert_eq!(nf.term, T::pair(T::pair(a("l"), a("s")), a("c")));
        assert_eq!(nf.steps, 3);
    }

    #[test]
    fn omega_exhausts_budget() {
        let w = T::lambda("x", T::apply(T::var("x"), T::var("x")));
        let omega = T::apply(w.clone(), w);
        assert_eq!(
            normalize_with_budget(&omega, 50),
            Err(EvalError::BudgetExceeded { budget: 50 })
        );
    }

    #[test]
    fn definitional_equality() {
        let id = T::lambda("x", T::var("x"));
        assert!(def_equal(&T::apply(id, a("a")), &a("a")).unwrap());
        assert!(!def_equal(&T::tag_l(a("a")), &T::tag_r(a("a"))).unwrap());
        let c = T::cases(
            T::tag_l(a("a")),
            ("x", T::pair(T::var("x"), a("b"))),
            ("y", T::pair(T::var("y"), a("b"))),
        );
        assert!(def_equal(&c, &T::pair(a("a"), a("b"))).unwrap());
    }
}
