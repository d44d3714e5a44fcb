use mvspec_core::{Algebra, ElementSet, Error, IntervalEmbedding, QuotientMap};

use super::parser::{AlgebraExpr, Binding, Elem, ElementLiteral, Expr, SourceFile};
use super::{DslError, ErrorKind, Pos};

/// Largest algebra the evaluator will build; tables grow quadratically.
pub const MAX_ELEMENTS: usize = 1024;

#[derive(Clone, Debug)]
pub struct NamedFilter {
    pub name: String,
    pub algebra: String,
    pub set: ElementSet,
}

/// Evaluated bindings, in file order.
#[derive(Clone, Debug, Default)]
pub struct Environment {
    algebras: Vec<(String, Algebra)>,
    filters: Vec<NamedFilter>,
}

impl Environment {
    pub fn algebra(&self, name: &str) -> Option<&Algebra> {
        self.algebras.iter().find(|(n, _)| n == name).map(|(_, a)| a)
    }

    pub fn filter(&self, name: &str) -> Option<&NamedFilter> {
        self.filters.iter().find(|f| f.name == name)
    }

    pub fn algebras(&self) -> &[(String, Algebra)] {
        &self.algebras
    }

    pub fn filters(&self) -> &[NamedFilter] {
        &self.filters
    }
}

/// Builds every binding bottom-up. Each algebra is labelled with its binding
/// name and must pass the axiom check.
pub fn evaluate(file: &SourceFile) -> Result<Environment, DslError> {
    let mut env = Environment::default();
    for b in &file.bindings {
        match b {
            Binding::Algebra { name, expr, .. } => {
                let alg = eval_expr(&env, expr)?.with_label(name.clone());
                let violations = alg.check_axioms();
                if !violations.is_empty() {
                    return Err(DslError::new(expr.pos, ErrorKind::AxiomViolations(violations)));
                }
                env.algebras.push((name.clone(), alg));
            }
            Binding::Filter { name, algebra, elements, .. } => {
                let alg = env.algebra(algebra).expect("parser resolves filter targets");
                let set = element_set(alg, elements)?;
                env.filters.push(NamedFilter { name: name.clone(), algebra: algebra.clone(), set });
            }
        }
    }
    Ok(env)
}

fn construction(pos: Pos) -> impl Fn(Error) -> DslError {
    move |e| match e {
        Error::NotImplicationFilter(why) => DslError::new(pos, ErrorKind::NotImplicationFilter(why)),
        Error::AxiomViolations(v) => DslError::new(pos, ErrorKind::AxiomViolations(v)),
        other => DslError::new(pos, ErrorKind::Construction(other.to_string())),
    }
}

fn too_large(pos: Pos, size: usize) -> DslError {
    DslError::new(pos, ErrorKind::TooLarge { size, max: MAX_ELEMENTS })
}

fn eval_expr(env: &Environment, expr: &Expr) -> Result<Algebra, DslError> {
    let pos = expr.pos;
    let alg = match &expr.kind {
        AlgebraExpr::Chain(k) => {
            if *k > MAX_ELEMENTS {
                return Err(too_large(pos, *k));
            }
            Algebra::chain(*k).map_err(construction(pos))?
        }
        AlgebraExpr::Product(children) => {
            let factors = children.iter().map(|c| eval_expr(env, c)).collect::<Result<Vec<_>, _>>()?;
            let size = factors.iter().try_fold(1usize, |acc, f| acc.checked_mul(f.size())).unwrap_or(usize::MAX);
            if size > MAX_ELEMENTS {
                return Err(too_large(pos, size));
            }
            Algebra::product(&factors).map_err(construction(pos))?
        }
        AlgebraExpr::Interval(child, e) => {
            let parent = eval_expr(env, child)?;
            let a = element(&parent, e)?;
            IntervalEmbedding::new(&parent, a).map_err(construction(pos))?.algebra().clone()
        }
        AlgebraExpr::Quotient(child, elems) => {
            let parent = eval_expr(env, child)?;
            let q = element_set(&parent, elems)?;
            QuotientMap::new(&parent, &q).map_err(construction(pos))?.quotient().clone()
        }
        AlgebraExpr::Table { size, neg, oplus } => {
            if *size > MAX_ELEMENTS {
                return Err(too_large(pos, *size));
            }
            Algebra::from_tables(*size, oplus.clone(), neg.clone()).map_err(construction(pos))?
        }
        AlgebraExpr::Ref(name) => env.algebra(name).expect("parser resolves references").clone(),
    };
    Ok(alg)
}

/// Resolves an element literal against `alg`; tuples use the row-major
/// product encoding.
pub fn element(alg: &Algebra, e: &Elem) -> Result<usize, DslError> {
    match &e.literal {
        ElementLiteral::Index(x) if *x < alg.size() => Ok(*x),
        ElementLiteral::Index(x) => {
            Err(DslError::new(e.pos, ErrorKind::ElementOutOfRange { element: x.to_string(), size: alg.size() }))
        }
        ElementLiteral::Tuple(coords) => {
            let shown = format!("({})", coords.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","));
            match alg.factors() {
                None => Err(DslError::new(e.pos, ErrorKind::TupleOnNonProduct(shown))),
                Some(sizes) if sizes.len() != coords.len() => {
                    Err(DslError::new(e.pos, ErrorKind::TupleArity { element: shown, factors: sizes.len() }))
                }
                Some(_) => alg.encode_tuple(coords).ok_or_else(|| {
                    DslError::new(e.pos, ErrorKind::ElementOutOfRange { element: shown, size: alg.size() })
                }),
            }
        }
    }
}

pub fn element_set(alg: &Algebra, elems: &[Elem]) -> Result<ElementSet, DslError> {
    let mut set = ElementSet::empty(alg.size());
    for e in elems {
        set.insert(element(alg, e)?);
    }
    Ok(set)
}
