//! Linear lambda terms with ordered contexts.
//!
//! A [`LinearTerm`] is a pair of a [`Context`] (an ordered list of distinct
//! variables) and a [`Term`] such that the judgment `Γ ⊢ t` is derivable:
//! a variable is typed by its singleton context, an application splits the
//! context between function and argument, an abstraction binds the last
//! context entry, and adjacent context entries may be exchanged. Every
//! variable — free or bound — occurs exactly once.

mod canonical;
mod parse;

pub use canonical::{CanonicalForm, CanonicalTerm};
pub use parse::parse_term;

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("variable {0} used twice")]
    VariableUsedTwice(String),
    #[error("unbound variable {0}")]
    UnboundVariable(String),
    #[error("context variable {0} unused")]
    ContextVariableUnused(String),
    #[error("bound variable {0} unused")]
    BinderUnused(String),
    #[error("context variables must be distinct: {0} repeats")]
    DuplicateContextVariable(String),
    #[error("invalid variable name {0:?}")]
    InvalidName(String),
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// The raw syntax tree: variables, applications `t(u)`, abstractions `λx[t]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Term {
    Var(String),
    App(Box<Term>, Box<Term>),
    Abs(String, Box<Term>),
}

impl Term {
    pub fn var(name: impl Into<String>) -> Term {
        Term::Var(name.into())
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    pub fn abs(binder: impl Into<String>, body: Term) -> Term {
        Term::Abs(binder.into(), Box::new(body))
    }
}

impl std::fmt::Display for Term {
    /// Concrete syntax: `\x.` for abstraction with the body extending
    /// maximally right, juxtaposition for application (left-associative).
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn go(t: &Term, f: &mut std::fmt::Formatter<'_>, as_fun: bool, as_arg: bool) -> std::fmt::Result {
            match t {
                Term::Var(x) => write!(f, "{x}"),
                Term::Abs(x, body) => {
                    // a lambda in function or argument position needs parens
                    if as_fun || as_arg {
                        write!(f, "(\\{x}.")?;
                        go(body, f, false, false)?;
                        write!(f, ")")
                    } else {
                        write!(f, "\\{x}.")?;
                        go(body, f, false, false)
                    }
                }
                Term::App(fun, arg) => {
                    if as_arg {
                        write!(f, "(")?;
                    }
                    go(fun, f, true, false)?;
                    write!(f, " ")?;
                    go(arg, f, false, true)?;
                    if as_arg {
                        write!(f, ")")?;
                    }
                    Ok(())
                }
            }
        }
        go(self, f, false, false)
    }
}

/// An ordered list of distinct variable names.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Context(Vec<String>);

impl Context {
    pub fn empty() -> Context {
        Context(Vec::new())
    }

    pub fn new(names: Vec<String>) -> Result<Context, TermError> {
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(TermError::InvalidName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(TermError::DuplicateContextVariable(name.clone()));
            }
        }
        Ok(Context(names))
    }

    /// Parses a comma-separated list of names; the empty string is the empty context.
    pub fn parse(text: &str) -> Result<Context, TermError> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Context::empty());
        }
        Context::new(text.split(',').map(|s| s.trim().to_string()).collect())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Display for Context {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0.join(","))
    }
}

/// Where a variable occurrence points: a context slot or an enclosing binder.
/// Binders are numbered by preorder position of their `Abs` node.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
enum VarTarget {
    Ctx(usize),
    Binder(usize),
}

/// One node of a `Γ ⊢ t` derivation. Application nodes record how the
/// ambient context splits between the two sides; the split is always the
/// order-preserving restriction, with the exchange rule absorbing any
/// interleaving.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    pub context: Context,
    pub term: Term,
    pub rule: DerivationRule,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DerivationRule {
    Var,
    App(Box<Derivation>, Box<Derivation>),
    Abs(Box<Derivation>),
}

/// A context paired with a term such that `Γ ⊢ t` holds.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinearTerm {
    context: Context,
    term: Term,
}

impl LinearTerm {
    pub fn new(context: Context, term: Term) -> Result<LinearTerm, TermError> {
        check_linear(&context, &term)?;
        Ok(LinearTerm { context, term })
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn term(&self) -> &Term {
        &self.term
    }

    pub fn is_closed(&self) -> bool {
        self.context.is_empty()
    }

    /// `(applications, abstractions)`; their sum is the size of the term.
    pub fn size(&self) -> (usize, usize) {
        fn go(t: &Term) -> (usize, usize) {
            match t {
                Term::Var(_) => (0, 0),
                Term::App(fun, arg) => {
                    let (pa, qa) = go(fun);
                    let (pb, qb) = go(arg);
                    (pa + pb + 1, qa + qb)
                }
                Term::Abs(_, body) => {
                    let (p, q) = go(body);
                    (p, q + 1)
                }
            }
        }
        go(&self.term)
    }

    pub fn derivation(&self) -> Derivation {
        check_linear(&self.context, &self.term).expect("already checked at construction")
    }

    /// All subterms in derivation preorder, each with its induced context.
    /// The term itself comes first; the rest are the proper subterms.
    pub fn subterms(&self) -> Vec<LinearTerm> {
        fn collect(d: &Derivation, out: &mut Vec<LinearTerm>) {
            out.push(LinearTerm {
                context: d.context.clone(),
                term: d.term.clone(),
            });
            match &d.rule {
                DerivationRule::Var => {}
                DerivationRule::App(fun, arg) => {
                    collect(fun, out);
                    collect(arg, out);
                }
                DerivationRule::Abs(body) => collect(body, out),
            }
        }
        let mut out = Vec::new();
        collect(&self.derivation(), &mut out);
        out
    }

    /// True when some proper subterm is closed.
    pub fn is_decomposable(&self) -> bool {
        self.alpha_canonical().is_decomposable()
    }

    /// Abstracts the context variables in order, outermost first, yielding a
    /// closed term of size `size + k`.
    pub fn lambda_lift(&self) -> LinearTerm {
        let mut term = self.term.clone();
        for name in self.context.names().iter().rev() {
            term = Term::abs(name.clone(), term);
        }
        LinearTerm {
            context: Context::empty(),
            term,
        }
    }

    pub fn alpha_canonical(&self) -> CanonicalForm {
        canonical::canonicalize(self)
    }

    pub fn alpha_eq(&self, other: &LinearTerm) -> bool {
        self.alpha_canonical() == other.alpha_canonical()
    }
}

impl std::fmt::Display for LinearTerm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.term)
    }
}

/// Checks `Γ ⊢ t` and returns the full derivation.
pub fn check_linear(context: &Context, term: &Term) -> Result<Derivation, TermError> {
    // count occurrences per target
    struct Counts {
        ctx: Vec<usize>,
        binder_names: Vec<String>,
        binder_counts: Vec<usize>,
    }
    fn count(
        t: &Term,
        ctx: &Context,
        scope: &mut Vec<(String, usize)>,
        counts: &mut Counts,
    ) -> Result<(), TermError> {
        match t {
            Term::Var(x) => {
                if let Some(&(_, id)) = scope.iter().rev().find(|(name, _)| name == x) {
                    counts.binder_counts[id] += 1;
                    if counts.binder_counts[id] > 1 {
                        return Err(TermError::VariableUsedTwice(x.clone()));
                    }
                } else if let Some(i) = ctx.names().iter().position(|name| name == x) {
                    counts.ctx[i] += 1;
                    if counts.ctx[i] > 1 {
                        return Err(TermError::VariableUsedTwice(x.clone()));
                    }
                } else {
                    return Err(TermError::UnboundVariable(x.clone()));
                }
                Ok(())
            }
            Term::App(fun, arg) => {
                count(fun, ctx, scope, counts)?;
                count(arg, ctx, scope, counts)
            }
            Term::Abs(x, body) => {
                if !valid_name(x) {
                    return Err(TermError::InvalidName(x.clone()));
                }
                let id = counts.binder_counts.len();
                counts.binder_counts.push(0);
                counts.binder_names.push(x.clone());
                scope.push((x.clone(), id));
                let res = count(body, ctx, scope, counts);
                scope.pop();
                res?;
                if counts.binder_counts[id] == 0 {
                    return Err(TermError::BinderUnused(x.clone()));
                }
                Ok(())
            }
        }
    }
    let mut counts = Counts {
        ctx: vec![0; context.len()],
        binder_names: Vec::new(),
        binder_counts: Vec::new(),
    };
    count(term, context, &mut Vec::new(), &mut counts)?;
    if let Some(i) = counts.ctx.iter().position(|&c| c == 0) {
        return Err(TermError::ContextVariableUnused(context.names()[i].clone()));
    }

    // build the derivation top-down, restricting the ambient variable order
    // to the variables free in each branch
    fn free_targets(t: &Term, ctx: &Context, scope: &mut Vec<(String, usize)>, next_binder: &mut usize) -> Vec<(VarTarget, String)> {
        match t {
            Term::Var(x) => {
                if let Some(&(_, id)) = scope.iter().rev().find(|(name, _)| name == x) {
                    vec![(VarTarget::Binder(id), x.clone())]
                } else {
                    let i = ctx.names().iter().position(|name| name == x).expect("checked above");
                    vec![(VarTarget::Ctx(i), x.clone())]
                }
            }
            Term::App(fun, arg) => {
                let mut left = free_targets(fun, ctx, scope, next_binder);
                left.extend(free_targets(arg, ctx, scope, next_binder));
                left
            }
            Term::Abs(x, body) => {
                let id = *next_binder;
                *next_binder += 1;
                scope.push((x.clone(), id));
                let mut inner = free_targets(body, ctx, scope, next_binder);
                scope.pop();
                inner.retain(|(target, _)| *target != VarTarget::Binder(id));
                inner
            }
        }
    }
    fn build(
        t: &Term,
        ambient: &[(VarTarget, String)],
        ctx: &Context,
        scope: &mut Vec<(String, usize)>,
        next_binder: &mut usize,
    ) -> Derivation {
        let context = Context(ambient.iter().map(|(_, name)| name.clone()).collect());
        let rule = match t {
            Term::Var(_) => DerivationRule::Var,
            Term::App(fun, arg) => {
                let mut scope_probe = scope.clone();
                let mut probe = *next_binder;
                let fun_free: std::collections::HashSet<VarTarget> =
                    free_targets(fun, ctx, &mut scope_probe, &mut probe).into_iter().map(|(t, _)| t).collect();
                let left: Vec<(VarTarget, String)> =
                    ambient.iter().filter(|(t, _)| fun_free.contains(t)).cloned().collect();
                let right: Vec<(VarTarget, String)> =
                    ambient.iter().filter(|(t, _)| !fun_free.contains(t)).cloned().collect();
                let fun_d = build(fun, &left, ctx, scope, next_binder);
                let arg_d = build(arg, &right, ctx, scope, next_binder);
                DerivationRule::App(Box::new(fun_d), Box::new(arg_d))
            }
            Term::Abs(x, body) => {
                let id = *next_binder;
                *next_binder += 1;
                scope.push((x.clone(), id));
                let mut inner = ambient.to_vec();
                inner.push((VarTarget::Binder(id), x.clone()));
                let body_d = build(body, &inner, ctx, scope, next_binder);
                scope.pop();
                DerivationRule::Abs(Box::new(body_d))
            }
        };
        Derivation {
            context,
            term: t.clone(),
            rule,
        }
    }
    let ambient: Vec<(VarTarget, String)> = context
        .names()
        .iter()
        .enumerate()
        .map(|(i, name)| (VarTarget::Ctx(i), name.clone()))
        .collect();
    Ok(build(term, &ambient, context, &mut Vec::new(), &mut 0))
}
