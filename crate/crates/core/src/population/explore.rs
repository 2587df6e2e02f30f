//! Breadth-first closure of a seed under reproductions.
//!
//! Symbolic mode carries the population's bosonic families as polynomials over `B(c)`, one
//! parameter in total. Sampled mode instantiates every bosonic move at a random integer.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::param::{dparam_poly, embed_poly, locate_param, param_free, Param};
use crate::algebra::{wr_pair, Field, Poly, RatFunc};
use crate::error::{Error, Result};
use crate::model::{bae_holds, is_generic, BetheNode, ParitySeq, WeightData};

use super::graph::{Edge, MoveKind, PopulationGraph};
use super::reproduce::{bosonic_rhs, bosonic_solve, moved, rigid_reproduce};

/// Upper bound on the number of nodes of a symbolic population.
const SYMBOLIC_CAP: usize = 800;

/// Checks the seed: `h`-generic points, generic `y`, and the BAE in every direction.
pub fn verify_seed<F: Field>(seed: &BetheNode<F>, w: &WeightData<F>) -> Result<()> {
    w.require_h_generic()?;
    let g = is_generic(seed, w);
    if !g.generic {
        return Err(Error::NonGeneric(g.violations.join("; ")));
    }
    if !bae_holds(seed, w) {
        return Err(Error::Verification("seed does not solve the Bethe ansatz equations".into()));
    }
    Ok(())
}

fn kind_of<F: Field>(node: &BetheNode<F>, i: usize) -> MoveKind {
    if node.parity.is_bosonic(i) {
        MoveKind::Bosonic
    } else {
        MoveKind::Fermionic
    }
}

/// Errors that only mean "no move in this direction".
fn skippable(e: &Error) -> bool {
    matches!(e, Error::NotApplicable { .. } | Error::NoSolution { .. })
}

struct Builder<F: Field> {
    nodes: Vec<BetheNode<F>>,
    generic: Vec<bool>,
    edges: Vec<Edge>,
    index: HashMap<BetheNode<F>, usize>,
}

impl<F: Field> Builder<F> {
    fn new() -> Self {
        Builder { nodes: vec![], generic: vec![], edges: vec![], index: HashMap::new() }
    }
    /// Index of the node and whether it is new.
    fn add(&mut self, n: BetheNode<F>, w: &WeightData<F>) -> (usize, bool) {
        if let Some(&i) = self.index.get(&n) {
            return (i, false);
        }
        let i = self.nodes.len();
        self.generic.push(is_generic(&n, w).generic);
        self.index.insert(n.clone(), i);
        self.nodes.push(n);
        (i, true)
    }
    fn edge(&mut self, from: usize, to: usize, direction: usize, kind: MoveKind, param: Option<String>) {
        self.edges.push(Edge { from, to, direction, kind, param });
    }
    fn finish(self, seed: usize, names: Vec<String>) -> PopulationGraph<F> {
        let mut g = PopulationGraph { nodes: self.nodes, generic: self.generic, edges: self.edges, seed, names };
        g.canonicalize();
        g
    }
}

/// A parameter-free node located inside a family: `graph.nodes[family]` at `c = at`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Anchor<B: Field> {
    pub node: BetheNode<B>,
    pub family: usize,
    pub at: Param<B>,
}

#[derive(Clone, Debug)]
pub struct SymbolicPopulation<B: Field> {
    pub graph: PopulationGraph<RatFunc<B>>,
    /// True when the nodes carry the family parameter.
    pub has_family: bool,
    pub anchors: Vec<Anchor<B>>,
    /// Parameter-free nodes found before the family was opened that no family contains.
    pub unanchored: Vec<BetheNode<B>>,
}

/// Symbolic exploration with one projective parameter named `param`; `names` names the
/// parameters of `B`.
pub fn explore_symbolic<B: Field>(
    seed: &BetheNode<B>,
    w: &WeightData<B>,
    names: &[String],
    param: &str,
) -> Result<SymbolicPopulation<B>> {
    verify_seed(seed, w)?;
    let mut all_names = names.to_vec();
    all_names.truncate(B::LEVELS);
    all_names.push(param.to_string());

    // rigid moves first
    let mut a = Builder::new();
    a.add(seed.clone(), w);
    let mut open: Option<(usize, usize)> = None;
    let mut k = 0;
    while k < a.nodes.len() {
        if a.generic[k] {
            let node = a.nodes[k].clone();
            for i in 1..node.parity.len() {
                match rigid_reproduce(&node, w, i) {
                    Some(Ok(n)) => {
                        let (j, _) = a.add(n, w);
                        a.edge(k, j, i, kind_of(&node, i), None);
                    }
                    Some(Err(e)) if skippable(&e) => {}
                    Some(Err(e)) => return Err(e),
                    None => {
                        if open.is_none() {
                            open = Some((k, i));
                        }
                    }
                }
            }
        }
        k += 1;
        if a.nodes.len() > SYMBOLIC_CAP {
            return Err(Error::ParamBudget(format!("more than {SYMBOLIC_CAP} nodes")));
        }
    }
    let wc = w.map(|v| RatFunc::constant(v.clone()));
    let embed = |n: &BetheNode<B>| BetheNode {
        parity: n.parity.clone(),
        y: n.y.iter().map(embed_poly).collect(),
        twist: n.twist.as_ref().map(|t| t.iter().map(|v| RatFunc::constant(v.clone())).collect()),
    };
    let Some((root, dir)) = open else {
        let mut b = Builder::new();
        for n in &a.nodes {
            b.add(embed(n), &wc);
        }
        b.edges = a.edges;
        let graph = b.finish(0, all_names);
        return Ok(SymbolicPopulation { graph, has_family: false, anchors: vec![], unanchored: vec![] });
    };

    // one family, closed under all moves
    let fam = bosonic_solve(&a.nodes[root], w, dir)?;
    let start = moved(&embed(&a.nodes[root]), dir, fam.generic_member(), false);
    let mut b = Builder::new();
    b.add(start, &wc);
    let mut k = 0;
    while k < b.nodes.len() {
        if b.generic[k] {
            let node = b.nodes[k].clone();
            for i in 1..node.parity.len() {
                match rigid_reproduce(&node, &wc, i) {
                    Some(Ok(n)) => {
                        let (j, _) = b.add(n, &wc);
                        b.edge(k, j, i, kind_of(&node, i), None);
                    }
                    Some(Err(e)) if skippable(&e) => {}
                    Some(Err(e)) => return Err(e),
                    None => {
                        same_family(&node, &wc, i)?;
                        b.edge(k, k, i, MoveKind::Bosonic, None);
                    }
                }
            }
        }
        k += 1;
        if b.nodes.len() > SYMBOLIC_CAP {
            return Err(Error::ParamBudget(format!("more than {SYMBOLIC_CAP} nodes")));
        }
    }
    let graph = b.finish(0, all_names);
    let mut anchors = Vec::new();
    let mut unanchored = Vec::new();
    for n in &a.nodes {
        let hit = graph.nodes.iter().enumerate().find_map(|(fi, f)| {
            if f.parity != n.parity {
                return None;
            }
            locate_param(&f.y, &n.y).map(|at| (fi, at))
        });
        match hit {
            Some((family, at)) => anchors.push(Anchor { node: n.clone(), family, at }),
            None => unanchored.push(n.clone()),
        }
    }
    // the seed is the node the exploration started from
    let mut graph = graph;
    if let Some(an) = anchors.first() {
        graph.seed = an.family;
    }
    Ok(SymbolicPopulation { graph, has_family: true, anchors, unanchored })
}

/// A bosonic move in direction `i` stays inside the family iff `Wr(y_i, ∂_c y_i)` is a nonzero
/// `x`-constant multiple of the right side.
fn same_family<B: Field>(node: &BetheNode<RatFunc<B>>, w: &WeightData<RatFunc<B>>, i: usize) -> Result<()> {
    let y = node.yy(i);
    if param_free(&y) {
        return Err(Error::ParamBudget(format!(
            "bosonic direction {i} at {} needs a second parameter",
            node.parity
        )));
    }
    let s = node.parity.s(i);
    let wr = wr_pair(s, &RatFunc::from_poly(y.clone()), &RatFunc::from_poly(dparam_poly(&y)), &w.h);
    let rhs = RatFunc::from_poly(bosonic_rhs(node, w, i));
    match (wr / &rhs).as_const() {
        Some(k) if !k.is_zero() => Ok(()),
        _ => Err(Error::ParamBudget(format!(
            "bosonic direction {i} at {} leaves the family",
            node.parity
        ))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleOptions {
    pub seed: u64,
    /// Draws per bosonic move before giving up on genericity.
    pub retries: usize,
    pub max_nodes: usize,
    /// Parameters are drawn from `−pool..=pool`.
    pub pool: i64,
}

impl Default for SampleOptions {
    fn default() -> Self {
        SampleOptions { seed: 0, retries: 16, max_nodes: 48, pool: 20 }
    }
}

struct Move<F: Field> {
    direction: usize,
    kind: MoveKind,
    node: BetheNode<F>,
    param: Option<String>,
}

fn sample_moves<F: Field>(
    node: &BetheNode<F>,
    w: &WeightData<F>,
    opts: &SampleOptions,
    tag: u64,
    names: &[String],
) -> Result<Vec<Move<F>>> {
    let mut out = Vec::new();
    for i in 1..node.parity.len() {
        let kind = kind_of(node, i);
        match rigid_reproduce(node, w, i) {
            Some(Ok(n)) => out.push(Move { direction: i, kind, node: n, param: None }),
            Some(Err(e)) if skippable(&e) => {}
            Some(Err(e)) => return Err(e),
            None => {
                let fam = match bosonic_solve(node, w, i) {
                    Ok(f) => f,
                    Err(e) if skippable(&e) => continue,
                    Err(e) => return Err(e),
                };
                let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i as u64);
                let mut found = None;
                for _ in 0..opts.retries.max(1) {
                    let c = F::from_int(rng.gen_range(-opts.pool..=opts.pool));
                    let p = fam.member(&Param::At(c.clone()));
                    if p.is_zero() {
                        continue;
                    }
                    let n = moved(node, i, p, false);
                    if is_generic(&n, w).generic {
                        found = Some((n, c));
                        break;
                    }
                }
                let (n, c) = found.ok_or_else(|| {
                    Error::NonGeneric(format!("retry budget exhausted in bosonic direction {i} at {}", node.parity))
                })?;
                out.push(Move { direction: i, kind, node: n, param: Some(c.render(names)) });
            }
        }
    }
    Ok(out)
}

/// Sampled exploration. Stops when a frontier pass meets no new parity sequence (untwisted), when
/// the frontier empties, or at `max_nodes`.
pub fn explore_sampled<F: Field>(
    seed: &BetheNode<F>,
    w: &WeightData<F>,
    opts: &SampleOptions,
    names: &[String],
) -> Result<PopulationGraph<F>> {
    verify_seed(seed, w)?;
    let mut b = Builder::new();
    b.add(seed.clone(), w);
    let mut parities: BTreeSet<ParitySeq> = BTreeSet::from([seed.parity.clone()]);
    let mut frontier = vec![0usize];
    while !frontier.is_empty() && b.nodes.len() < opts.max_nodes {
        let work: Vec<(usize, BetheNode<F>)> =
            frontier.iter().filter(|&&k| b.generic[k]).map(|&k| (k, b.nodes[k].clone())).collect();
        let results: Vec<Result<Vec<Move<F>>>> =
            work.par_iter().map(|(k, n)| sample_moves(n, w, opts, *k as u64, names)).collect();
        let mut next = Vec::new();
        let mut new_parity = false;
        for ((k, _), moves) in work.iter().zip(results) {
            for mv in moves? {
                if b.nodes.len() >= opts.max_nodes && !b.index.contains_key(&mv.node) {
                    continue;
                }
                new_parity |= parities.insert(mv.node.parity.clone());
                let (j, fresh) = b.add(mv.node, w);
                b.edge(*k, j, mv.direction, mv.kind, mv.param);
                if fresh {
                    next.push(j);
                }
            }
        }
        if seed.twist.is_none() && !new_parity {
            break;
        }
        frontier = next;
    }
    Ok(b.finish(0, names.to_vec()))
}

/// Seeds `(1, …, 1)` with the standard parity, as used for random populations.
pub fn trivial_seed<F: Field>(w: &WeightData<F>) -> BetheNode<F> {
    BetheNode::trivial(w.standard_parity(), w.twist.clone())
}

/// Specializes every polynomial of a family node at `c = at`.
pub fn specialize_node<B: Field>(n: &BetheNode<RatFunc<B>>, at: &Param<B>) -> Option<BetheNode<B>> {
    let y: Vec<Poly<B>> = n.y.iter().map(|p| crate::algebra::param::specialize_poly(p, at)).collect();
    let twist = match &n.twist {
        None => None,
        Some(t) => Some(t.iter().map(|v| v.as_const()).collect::<Option<Vec<B>>>()?),
    };
    BetheNode::new(n.parity.clone(), y, twist).ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quad, Q1};

    fn sqrt2() -> WeightData<Quad> {
        let r = Quad::sqrt_of(2);
        WeightData::new(2, 1, vec![vec![1, 1, 0]; 3], vec![Quad::zero(), r.clone(), -r], None, Quad::one()).unwrap()
    }

    #[test]
    fn worked_example_three_families() {
        let w = sqrt2();
        let pop = explore_symbolic(&trivial_seed(&w), &w, &[], "c").unwrap();
        assert!(pop.has_family);
        assert_eq!(pop.graph.nodes.len(), 3);
        assert_eq!(pop.graph.parity_count(), 3);
        assert!(pop.unanchored.is_empty());
        let c = Q1::x();
        let seed_family = &pop.graph.nodes[pop.graph.seed];
        assert_eq!(seed_family.y[0], Poly::new(vec![-c, Q1::one()]));
        assert_eq!(pop.anchors[0].at, Param::Infinity);
    }

    #[test]
    fn sampled_worked_example() {
        let w = sqrt2();
        let g = explore_sampled(&trivial_seed(&w), &w, &SampleOptions::default(), &[]).unwrap();
        assert_eq!(g.parity_count(), 3);
        let again = explore_sampled(&trivial_seed(&w), &w, &SampleOptions::default(), &[]).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn twisted_gl11_two_nodes() {
        let w = WeightData::new(1, 1, vec![vec![1, 0]], vec![Quad::zero()], Some(vec![Quad::from_int(3), Quad::from_int(-2)]), Quad::one())
            .unwrap();
        let pop = explore_symbolic(&trivial_seed(&w), &w, &[], "c").unwrap();
        assert!(!pop.has_family);
        assert_eq!(pop.graph.nodes.len(), 2);
    }

    #[test]
    fn atypical_single_node() {
        let w = WeightData::new(1, 1, vec![vec![0, 0]; 2], vec![Quad::zero(), Quad::frac(1, 2)], None, Quad::one()).unwrap();
        let pop = explore_symbolic(&trivial_seed(&w), &w, &[], "c").unwrap();
        assert_eq!(pop.graph.nodes.len(), 1);
        assert!(pop.graph.edges.is_empty());
    }
}
