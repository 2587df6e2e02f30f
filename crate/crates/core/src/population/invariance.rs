//! Operator and eigenvalue invariance across the edges of a population.

use serde::Serialize;

use crate::algebra::param::Param;
use crate::algebra::{Field, RatFunc};
use crate::diffop::FractionalForm;
use crate::error::Result;
use crate::model::{eigenvalue, BetheNode, WeightData};

use super::explore::specialize_node;
use super::graph::{MoveKind, PopulationGraph};
use super::operator::build_operator;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct EdgeCheck {
    pub from: usize,
    pub to: usize,
    pub direction: usize,
    pub kind: MoveKind,
    /// Parameter value for checks on specialized families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub at: Option<String>,
    pub operator: bool,
    pub eigenvalue: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl EdgeCheck {
    pub fn pass(&self) -> bool {
        self.operator && self.eigenvalue
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct InvarianceReport {
    pub entries: Vec<EdgeCheck>,
    pub all_pass: bool,
}

impl InvarianceReport {
    fn new(entries: Vec<EdgeCheck>) -> Self {
        let all_pass = entries.iter().all(EdgeCheck::pass);
        InvarianceReport { entries, all_pass }
    }
    pub fn merge(mut self, o: InvarianceReport) -> Self {
        self.entries.extend(o.entries);
        Self::new(self.entries)
    }
    pub fn failures(&self) -> impl Iterator<Item = &EdgeCheck> {
        self.entries.iter().filter(|e| !e.pass())
    }
}

type Data<F> = (Result<FractionalForm<F>>, RatFunc<F>);

fn node_data<F: Field>(n: &BetheNode<F>, w: &WeightData<F>) -> Data<F> {
    (build_operator(n, w).to_minimal_fraction(), eigenvalue(n, w))
}

fn compare<F: Field>(a: &Data<F>, b: &Data<F>) -> (bool, bool, Option<String>) {
    let e = a.1 == b.1;
    match (&a.0, &b.0) {
        (Ok(x), Ok(y)) => (x.rat_equal(y), e, None),
        (Err(err), _) | (_, Err(err)) => (false, e, Some(err.to_string())),
    }
}

/// Compares the operator and the eigenvalue at the two ends of every edge.
pub fn invariance_report<F: Field>(g: &PopulationGraph<F>, w: &WeightData<F>) -> InvarianceReport {
    let data: Vec<Data<F>> = g.nodes.iter().map(|n| node_data(n, w)).collect();
    let entries = g
        .edges
        .iter()
        .map(|e| {
            let (operator, eigenvalue, error) = compare(&data[e.from], &data[e.to]);
            EdgeCheck { from: e.from, to: e.to, direction: e.direction, kind: e.kind, at: None, operator, eigenvalue, error }
        })
        .collect();
    InvarianceReport::new(entries)
}

/// The same comparison on a symbolic population specialized at each value of `values`. A bosonic
/// self-edge compares the member at a value with the member at the next value.
pub fn specialized_report<B: Field>(
    g: &PopulationGraph<RatFunc<B>>,
    w: &WeightData<B>,
    values: &[Param<B>],
    names: &[String],
) -> InvarianceReport {
    let spec: Vec<Vec<Option<Data<B>>>> = values
        .iter()
        .map(|at| g.nodes.iter().map(|n| specialize_node(n, at).map(|m| node_data(&m, w))).collect())
        .collect();
    let mut entries = Vec::new();
    for (vi, at) in values.iter().enumerate() {
        for e in &g.edges {
            let other = if e.from == e.to { (vi + 1) % values.len() } else { vi };
            let (operator, eigenvalue, error) = match (&spec[vi][e.from], &spec[other][e.to]) {
                (Some(a), Some(b)) => compare(a, b),
                _ => (false, false, Some("specialization failed".into())),
            };
            entries.push(EdgeCheck {
                from: e.from,
                to: e.to,
                direction: e.direction,
                kind: e.kind,
                at: Some(at.render(names)),
                operator,
                eigenvalue,
                error,
            });
        }
    }
    InvarianceReport::new(entries)
}

/// `0, 1, ∞` followed by `extra` further integers.
pub fn default_values<B: Field>(extra: &[i64]) -> Vec<Param<B>> {
    let mut v = vec![Param::At(B::zero()), Param::At(B::one()), Param::Infinity];
    v.extend(extra.iter().map(|&k| Param::At(B::from_int(k))));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Poly, Quad};
    use crate::population::explore::{explore_sampled, explore_symbolic, trivial_seed, SampleOptions};

    fn sqrt2() -> WeightData<Quad> {
        let r = Quad::sqrt_of(2);
        WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::zero(), r.clone(), -r], None, Quad::one()).unwrap()
    }

    #[test]
    fn worked_example_invariance() {
        let w = sqrt2();
        let pop = explore_symbolic(&trivial_seed(&w), &w, &[], "c").unwrap();
        let wc = w.map(|v| RatFunc::constant(v.clone()));
        let r = invariance_report(&pop.graph, &wc);
        assert!(r.all_pass, "{:?}", r.failures().collect::<Vec<_>>());
        let names = vec!["c".to_string()];
        let s = specialized_report(&pop.graph, &w, &default_values(&[2, -3]), &names);
        assert!(s.all_pass, "{:?}", s.failures().collect::<Vec<_>>());
    }

    #[test]
    fn corrupted_node_fails() {
        let w = sqrt2();
        let mut g = explore_sampled(&trivial_seed(&w), &w, &SampleOptions::default(), &[]).unwrap();
        let e = g.edges.iter().find(|e| e.from != e.to).unwrap().clone();
        let n = &mut g.nodes[e.to];
        n.y[0] = n.y[0].clone() * Poly::from_ints(&[7, 1]);
        let r = invariance_report(&g, &w);
        assert!(!r.all_pass);
        assert!(r.failures().any(|f| f.from == e.from && f.to == e.to));
    }
}
