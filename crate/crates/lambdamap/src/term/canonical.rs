//! Alpha-canonical forms: context variables become positional indices and
//! bound variables become de Bruijn indices, so alpha-equivalence of linear
//! terms is plain structural equality.

use super::{Context, LinearTerm, Term};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum CanonicalTerm {
    /// A context variable, by position (0-based).
    Free(u32),
    /// A bound variable, as a de Bruijn index (0 = innermost abstraction).
    Bound(u32),
    App(Box<CanonicalTerm>, Box<CanonicalTerm>),
    Abs(Box<CanonicalTerm>),
}

/// A canonical term together with its context length.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CanonicalForm {
    pub context_len: usize,
    pub term: CanonicalTerm,
}

pub(super) fn canonicalize(t: &LinearTerm) -> CanonicalForm {
    fn go(t: &Term, ctx: &Context, scope: &mut Vec<String>) -> CanonicalTerm {
        match t {
            Term::Var(x) => {
                if let Some(depth) = scope.iter().rev().position(|name| name == x) {
                    CanonicalTerm::Bound(depth as u32)
                } else {
                    let i = ctx
                        .names()
                        .iter()
                        .position(|name| name == x)
                        .expect("linear terms have no unbound variables");
                    CanonicalTerm::Free(i as u32)
                }
            }
            Term::App(fun, arg) => CanonicalTerm::App(
                Box::new(go(fun, ctx, scope)),
                Box::new(go(arg, ctx, scope)),
            ),
            Term::Abs(x, body) => {
                scope.push(x.clone());
                let inner = go(body, ctx, scope);
                scope.pop();
                CanonicalTerm::Abs(Box::new(inner))
            }
        }
    }
    CanonicalForm {
        context_len: t.context().len(),
        term: go(t.term(), t.context(), &mut Vec::new()),
    }
}

impl CanonicalTerm {
    pub fn size(&self) -> usize {
        match self {
            CanonicalTerm::Free(_) | CanonicalTerm::Bound(_) => 0,
            CanonicalTerm::App(fun, arg) => fun.size() + arg.size() + 1,
            CanonicalTerm::Abs(body) => body.size() + 1,
        }
    }

    /// `(applications, abstractions)`.
    pub fn size_split(&self) -> (usize, usize) {
        match self {
            CanonicalTerm::Free(_) | CanonicalTerm::Bound(_) => (0, 0),
            CanonicalTerm::App(fun, arg) => {
                let (pa, qa) = fun.size_split();
                let (pb, qb) = arg.size_split();
                (pa + pb + 1, qa + qb)
            }
            CanonicalTerm::Abs(body) => {
                let (p, q) = body.size_split();
                (p, q + 1)
            }
        }
    }
}

/// Per-subtree summary used by the decomposability check: does it mention a
/// context variable, and what is the smallest escape level of its bound
/// variables (de Bruijn index minus depth within the subtree)?
struct Summary {
    uses_free: bool,
    min_escape: Option<u32>,
    closed_inside: bool,
}

fn summarize(t: &CanonicalTerm) -> Summary {
    match t {
        CanonicalTerm::Free(_) => Summary {
            uses_free: true,
            min_escape: None,
            closed_inside: false,
        },
        CanonicalTerm::Bound(i) => Summary {
            uses_free: false,
            min_escape: Some(*i),
            closed_inside: false,
        },
        CanonicalTerm::App(fun, arg) => {
            let a = summarize(fun);
            let b = summarize(arg);
            let closed_inside = a.closed_inside
                || b.closed_inside
                || (!a.uses_free && a.min_escape.is_none())
                || (!b.uses_free && b.min_escape.is_none());
            Summary {
                uses_free: a.uses_free || b.uses_free,
                min_escape: match (a.min_escape, b.min_escape) {
                    (Some(x), Some(y)) => Some(x.min(y)),
                    (x, None) => x,
                    (None, y) => y,
                },
                closed_inside,
            }
        }
        CanonicalTerm::Abs(body) => {
            let inner = summarize(body);
            let closed_body = !inner.uses_free && inner.min_escape.is_none();
            Summary {
                uses_free: inner.uses_free,
                // an escape of 0 is bound right here; deeper ones step down
                min_escape: inner.min_escape.and_then(|m| m.checked_sub(1)),
                closed_inside: inner.closed_inside || closed_body,
            }
        }
    }
}

impl CanonicalForm {
    /// True when some proper subterm is closed.
    pub fn is_decomposable(&self) -> bool {
        summarize(&self.term).closed_inside
    }

    pub fn size(&self) -> usize {
        self.term.size()
    }

    pub fn size_split(&self) -> (usize, usize) {
        self.term.size_split()
    }

    pub fn is_closed(&self) -> bool {
        self.context_len == 0
    }

    /// Closes the term by abstracting the context positions in order,
    /// outermost first.
    pub fn lambda_lift(&self) -> CanonicalForm {
        let k = self.context_len as u32;
        fn go(t: &CanonicalTerm, k: u32, depth: u32) -> CanonicalTerm {
            match t {
                // the p-th context slot is bound by the p-th outer lambda,
                // which sits above k-1-p others plus the local depth
                CanonicalTerm::Free(p) => CanonicalTerm::Bound(depth + (k - 1 - p)),
                CanonicalTerm::Bound(i) => CanonicalTerm::Bound(*i),
                CanonicalTerm::App(fun, arg) => CanonicalTerm::App(
                    Box::new(go(fun, k, depth)),
                    Box::new(go(arg, k, depth)),
                ),
                CanonicalTerm::Abs(body) => CanonicalTerm::Abs(Box::new(go(body, k, depth + 1))),
            }
        }
        let mut term = go(&self.term, k, 0);
        for _ in 0..k {
            term = CanonicalTerm::Abs(Box::new(term));
        }
        CanonicalForm {
            context_len: 0,
            term,
        }
    }

    /// Reads the canonical form back as a named linear term, with context
    /// variables `x1..xk` and bound variables numbered on from there in
    /// binding order.
    pub fn to_linear(&self) -> LinearTerm {
        let k = self.context_len;
        fn go(t: &CanonicalTerm, k: usize, scope: &mut Vec<String>, next: &mut usize) -> Term {
            match t {
                CanonicalTerm::Free(p) => Term::var(format!("x{}", p + 1)),
                CanonicalTerm::Bound(i) => {
                    let name = scope[scope.len() - 1 - *i as usize].clone();
                    Term::Var(name)
                }
                CanonicalTerm::App(fun, arg) => {
                    let f = go(fun, k, scope, next);
                    let a = go(arg, k, scope, next);
                    Term::app(f, a)
                }
                CanonicalTerm::Abs(body) => {
                    let name = format!("x{}", *next);
                    *next += 1;
                    scope.push(name.clone());
                    let inner = go(body, k, scope, next);
                    scope.pop();
                    Term::abs(name, inner)
                }
            }
        }
        let mut next = k + 1;
        let term = go(&self.term, k, &mut Vec::new(), &mut next);
        let context = Context::new((1..=k).map(|i| format!("x{i}")).collect()).expect("generated names are distinct");
        LinearTerm::new(context, term).expect("canonical forms encode linear terms")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{parse_term, Context};
    use super::*;

    fn parse(text: &str, ctx: &str) -> LinearTerm {
        parse_term(text, &Context::parse(ctx).unwrap()).unwrap()
    }

    #[test]
    fn bound_renaming_is_invisible() {
        assert_eq!(
            parse("\\x.x", "").alpha_canonical(),
            parse("\\y.y", "").alpha_canonical()
        );
    }

    #[test]
    fn free_renaming_is_invisible() {
        assert_eq!(
            parse("x", "x").alpha_canonical(),
            parse("y", "y").alpha_canonical()
        );
    }

    #[test]
    fn different_terms_stay_different() {
        assert_ne!(
            parse("\\x.\\y.x y", "").alpha_canonical(),
            parse("\\x.\\y.y x", "").alpha_canonical()
        );
    }

    #[test]
    fn context_position_matters() {
        assert_ne!(
            parse("x y", "x,y").alpha_canonical(),
            parse("y x", "x,y").alpha_canonical()
        );
        // but the same reading under renamed positions agrees
        assert_eq!(
            parse("x y", "x,y").alpha_canonical(),
            parse("a b", "a,b").alpha_canonical()
        );
    }

    #[test]
    fn canonical_reparse_is_identity() {
        for (text, ctx) in [
            ("\\x.\\y.x (\\z.y z)", ""),
            ("x (\\z.y z)", "x,y"),
            ("\\x.x (\\y.y)", ""),
            ("x", "x"),
        ] {
            let t = parse(text, ctx);
            let c = t.alpha_canonical();
            assert_eq!(c.to_linear().alpha_canonical(), c, "term {text}");
        }
    }

    #[test]
    fn lift_binds_positions_in_order() {
        let t = parse("x (\\z.y z)", "x,y");
        let lifted_direct = t.lambda_lift().alpha_canonical();
        let lifted_canonical = t.alpha_canonical().lambda_lift();
        assert_eq!(lifted_direct, lifted_canonical);
        assert_eq!(lifted_direct, parse("\\x.\\y.x (\\z.y z)", "").alpha_canonical());
    }

    #[test]
    fn decomposability_on_canonical_forms() {
        assert!(parse("\\x.x (\\y.y)", "").alpha_canonical().is_decomposable());
        assert!(!parse("\\x.\\y.\\z.x (y z)", "").alpha_canonical().is_decomposable());
        assert!(!parse("\\x.x", "").alpha_canonical().is_decomposable());
        // the identity applied to the identity is decomposable twice over
        assert!(parse("(\\x.x) (\\y.y)", "").alpha_canonical().is_decomposable());
        // an open subterm does not count
        assert!(!parse("x (\\z.y z)", "x,y").alpha_canonical().is_decomposable());
    }
}
