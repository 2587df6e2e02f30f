//! The `glmn-bethe` front end: argument parsing, dispatch and exit codes.
//!
//! Exit status 0 means every check passed, 1 that a check failed or the computation could not
//! be completed, 2 that the input or the arguments were malformed.

pub mod input;
pub mod render;

use std::ffi::OsString;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::algebra::{Field, Param, Poly, Quad, RatFunc, Q1, Q2};
use crate::error::{Error, Result};
use crate::flags::{bijection_check, kernel_spaces, sample_flags, KernelOptions};
use crate::gl11::{completeness_report, homogeneous_spectrum, CompletenessReport};
use crate::model::{bae_check, bae_holds, eigenvalue, is_generic, BetheNode, WeightData};
use crate::population::{
    build_operator, bosonic_solve, default_values, explore_sampled, explore_symbolic, invariance_report, reproduce,
    rigid_reproduce, specialized_report, SampleOptions,
};

pub use input::{load, Gl11Doc, InputDoc};
pub use render::{render, Format, Report};

/// Name of the family parameter in symbolic mode.
const PARAM: &str = "c";

#[derive(Clone, Debug, Parser)]
#[command(name = "glmn-bethe", version, about = "Populations of Bethe ansatz solutions for XXX gl(m|n) chains")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Input document: a path, or inline JSON starting with `{`.
    #[arg(long, global = true)]
    pub input: Option<String>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Draws per sampled bosonic move.
    #[arg(long, global = true, default_value_t = 16)]
    pub retries: usize,
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Keep the bosonic parameter as a symbol.
    #[arg(long, global = true)]
    pub symbolic: bool,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Check the Bethe ansatz equations and genericity of a node.
    VerifyBae,
    /// Apply one reproduction.
    Reproduce {
        #[arg(long)]
        direction: usize,
        /// Parameter of a bosonic move: a scalar or `inf`. Without it the family is reported.
        #[arg(long)]
        at: Option<String>,
    },
    /// Explore the population of a node and check operator invariance.
    Population,
    /// The difference operator of a node and its minimal fraction.
    Operator,
    /// Kernel spaces, sampled superflags and the generating map.
    Flags {
        /// Random flags per parity sequence besides the coordinate flag.
        #[arg(long, default_value_t = 3)]
        extra: usize,
    },
    /// The gl(1|1) chain.
    Gl11 {
        #[command(subcommand)]
        mode: Gl11Mode,
    },
    /// The finite population of a twisted chain.
    Twisted,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Gl11Mode {
    /// Spectrum on the singular vectors of p copies of C^{1|1}(0).
    Homogeneous {
        #[arg(short = 'p')]
        p: usize,
    },
    /// Completeness on the chain given by --input.
    Complete,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::VerifyBae => "verify-bae",
            Command::Reproduce { .. } => "reproduce",
            Command::Population => "population",
            Command::Operator => "operator",
            Command::Flags { .. } => "flags",
            Command::Gl11 { .. } => "gl11",
            Command::Twisted => "twisted",
        }
    }
}

/// Exit status and the rendered output (stdout on 0 and 1, stderr on 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run(&cfg),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome { code, output: e.render().to_string() }
        }
    }
}

pub fn run(cfg: &RunConfig) -> Outcome {
    match execute(cfg) {
        Ok(r) => match render(&r, cfg.format) {
            Some(output) => Outcome { code: if r.pass { 0 } else { 1 }, output },
            None => Outcome { code: 2, output: format!("error: {} output has no graph to export\n", r.command) },
        },
        Err(e) if e.is_input_error() => Outcome { code: 2, output: format!("error: {e}\n") },
        Err(e) => {
            let mut r = Report::empty(cfg.command.name(), cfg.seed);
            r.pass = false;
            r.body = json!({ "error": e.to_string() });
            let output = render(&r, cfg.format).unwrap_or_else(|| format!("error: {e}\n"));
            Outcome { code: 1, output }
        }
    }
}

/// Runs the command and returns its report.
pub fn execute(cfg: &RunConfig) -> Result<Report> {
    let mut report = match &cfg.command {
        Command::Gl11 { mode: Gl11Mode::Homogeneous { p } } => gl11_homogeneous(*p)?,
        Command::Gl11 { mode: Gl11Mode::Complete } => gl11_complete(&load::<Gl11Doc>(input(cfg)?)?)?,
        _ => {
            let doc: InputDoc = load(input(cfg)?)?;
            match doc.field.params.len() {
                0 => chain::<Quad>(cfg, &doc)?,
                1 => chain::<Q1>(cfg, &doc)?,
                _ if cfg.symbolic => {
                    return Err(Error::Invalid("symbolic mode needs a free parameter slot (at most one field parameter)".into()))
                }
                _ => chain::<Q2>(cfg, &doc)?,
            }
        }
    };
    report.command = cfg.command.name().into();
    report.seed = cfg.seed;
    Ok(report)
}

fn input(cfg: &RunConfig) -> Result<&str> {
    cfg.input.as_deref().ok_or_else(|| Error::Invalid(format!("{} needs --input", cfg.command.name())))
}

fn report(pass: bool, body: Value) -> Report {
    Report { command: String::new(), seed: 0, pass, body }
}

fn poly_str<F: Field>(p: &Poly<F>, names: &[String]) -> String {
    p.render_in("x", names)
}

fn node_json<F: Field>(n: &BetheNode<F>, names: &[String]) -> Value {
    let mut v = json!({
        "parity": n.parity.signs(),
        "y": n.y.iter().map(|p| poly_str(p, names)).collect::<Vec<_>>(),
    });
    if let Some(t) = &n.twist {
        v["twist"] = json!(t.iter().map(|q| q.render(names)).collect::<Vec<_>>());
    }
    v
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn chain<F: Field>(cfg: &RunConfig, doc: &InputDoc) -> Result<Report> {
    let w: WeightData<F> = doc.weight_data()?;
    let node = doc.node(&w)?;
    let names = doc.field.names();
    match &cfg.command {
        Command::VerifyBae => Ok(verify_bae(&node, &w, &names)),
        Command::Reproduce { direction, at } => reproduce_cmd(&node, &w, &doc.field, *direction, at.as_deref(), cfg.symbolic),
        Command::Population if cfg.symbolic => population_symbolic(&node, &w, &names),
        Command::Population => population_sampled(&node, &w, cfg, &names),
        Command::Operator => operator(&node, &w, &names),
        Command::Flags { extra } => flags(&node, &w, cfg, *extra, &names),
        Command::Twisted => twisted(&node, &w, cfg, &names),
        Command::Gl11 { .. } => unreachable!("dispatched before"),
    }
}

fn verify_bae<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, names: &[String]) -> Report {
    let colors = bae_check(node, w);
    let generic = is_generic(node, w);
    let pass = colors.iter().all(|c| c.ok);
    report(
        pass,
        json!({
            "node": node_json(node, names),
            "colors": to_value(&colors),
            "genericity": to_value(&generic),
            "eigenvalue": if pass { Value::String(eigenvalue(node, w).render_in("x", names)) } else { Value::Null },
        }),
    )
}

fn reproduce_cmd<F: Field>(
    node: &BetheNode<F>,
    w: &WeightData<F>,
    field: &crate::algebra::parse::FieldSpec,
    i: usize,
    at: Option<&str>,
    symbolic: bool,
) -> Result<Report> {
    let names = field.names();
    if i == 0 || i >= node.parity.len() {
        return Err(Error::Invalid(format!("direction {i} out of range 1..{}", node.parity.len() - 1)));
    }
    let rigid = rigid_reproduce(node, w, i);
    if rigid.is_none() && (symbolic || at.is_none()) {
        let fam = bosonic_solve(node, w, i)?;
        let mut all = names.clone();
        all.truncate(F::LEVELS);
        all.push(PARAM.into());
        return Ok(report(
            true,
            json!({
                "from": node_json(node, &names),
                "direction": i,
                "kind": "bosonic",
                "particular": poly_str(&fam.particular, &names),
                "homogeneous": fam.homogeneous.iter().map(|p| poly_str(p, &names)).collect::<Vec<_>>(),
                "member": poly_str(&fam.generic_member(), &all),
            }),
        ));
    }
    let param = match at {
        None => Param::Infinity,
        Some(s) if s == "inf" || s == "infinity" => Param::Infinity,
        Some(s) => Param::At(field.parse::<F>(s)?),
    };
    let kind = if rigid.is_some() && node.parity.s(i) != node.parity.s(i + 1) { "fermionic" } else { "bosonic" };
    let to = reproduce(node, w, i, &param)?;
    let colors = bae_check(&to, w);
    Ok(report(
        colors.iter().all(|c| c.ok),
        json!({
            "from": node_json(node, &names),
            "direction": i,
            "kind": kind,
            "at": if rigid.is_some() { Value::Null } else { Value::String(param.render(&names)) },
            "to": node_json(&to, &names),
            "colors": to_value(&colors),
        }),
    ))
}

fn population_symbolic<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, names: &[String]) -> Result<Report> {
    let pop = explore_symbolic(node, w, names, PARAM)?;
    let g = &pop.graph;
    let wc = w.map(|v| RatFunc::constant(v.clone()));
    let exact = invariance_report(g, &wc);
    let special = specialized_report(g, w, &default_values(&[2, -3]), &g.names);
    let pass = exact.all_pass && special.all_pass;
    Ok(report(
        pass,
        json!({
            "mode": "symbolic",
            "graph": to_value(&g.to_doc()),
            "nodes": g.nodes.len(),
            "parities": g.parity_count(),
            "has_family": pop.has_family,
            "anchors": pop.anchors.iter().map(|a| json!({
                "node": node_json(&a.node, names),
                "family": a.family,
                "at": a.at.render(names),
            })).collect::<Vec<_>>(),
            "unanchored": pop.unanchored.iter().map(|n| node_json(n, names)).collect::<Vec<_>>(),
            "invariance": to_value(&exact),
            "specialized": to_value(&special),
        }),
    ))
}

fn population_sampled<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, cfg: &RunConfig, names: &[String]) -> Result<Report> {
    let opts = SampleOptions { seed: cfg.seed, retries: cfg.retries, ..SampleOptions::default() };
    let g = explore_sampled(node, w, &opts, names)?;
    let inv = invariance_report(&g, w);
    Ok(report(
        inv.all_pass,
        json!({
            "mode": "sampled",
            "graph": to_value(&g.to_doc()),
            "nodes": g.nodes.len(),
            "parities": g.parity_count(),
            "invariance": to_value(&inv),
        }),
    ))
}

fn operator<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, names: &[String]) -> Result<Report> {
    let bae = bae_holds(node, w);
    let op = build_operator(node, w);
    let frac = op.to_minimal_fraction()?;
    let factors: Vec<Value> = op
        .factors
        .iter()
        .map(|f| json!({ "witness": f.g.render_in("x", names), "q": f.q.render(names), "sign": f.sign }))
        .collect();
    Ok(report(
        bae && op.witness_kernel(),
        json!({
            "node": node_json(node, names),
            "bae": bae,
            "factors": factors,
            "coefficients": op.coefficients().iter().map(|c| c.render_in("x", names)).collect::<Vec<_>>(),
            "witness_kernel": op.witness_kernel(),
            "numerator": frac.d0.render(names),
            "denominator": frac.d1.render(names),
        }),
    ))
}

fn flags<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, cfg: &RunConfig, extra: usize, names: &[String]) -> Result<Report> {
    let k = kernel_spaces(node, w, &KernelOptions { seed: cfg.seed, ..KernelOptions::default() })?;
    let fl = sample_flags(&k, w.m, w.n, extra, cfg.seed)?;
    let pop = if cfg.symbolic { Some(explore_symbolic(node, w, names, PARAM)?) } else { None };
    let rep = bijection_check(&k, w, &fl, pop.as_ref(), names);
    Ok(report(
        rep.all_pass && k.technical.all(),
        json!({
            "node": node_json(node, names),
            "kernel": {
                "dim_v": k.v.dim(),
                "dim_u": k.u.dim(),
                "y_m": poly_str(&k.y_m, names),
                "attempts": k.attempts,
                "technical": to_value(&k.technical),
                "skip_lemma": k.skip_lemma_holds(w),
            },
            "flags": fl.len(),
            "bijection": to_value(&rep),
        }),
    ))
}

fn twisted<F: Field>(node: &BetheNode<F>, w: &WeightData<F>, cfg: &RunConfig, names: &[String]) -> Result<Report> {
    let Some(q) = &w.twist else {
        return Err(Error::Invalid("twisted needs a \"twist\" in the input".into()));
    };
    for i in 0..q.len() {
        if q[..i].contains(&q[i]) {
            return Err(Error::Invalid("twist entries must be distinct".into()));
        }
    }
    let expected: usize = (1..=node.parity.len()).product();
    let opts = SampleOptions { seed: cfg.seed, retries: cfg.retries, max_nodes: 2 * expected + 1, ..SampleOptions::default() };
    let g = explore_sampled(node, w, &opts, names)?;
    let mut orders: Vec<&Vec<F>> = g.nodes.iter().filter_map(|n| n.twist.as_ref()).collect();
    orders.sort_by_key(|t| t.iter().map(|v| v.render(names)).collect::<Vec<_>>());
    orders.dedup();
    let inv = invariance_report(&g, w);
    let pass = g.nodes.len() == expected && orders.len() == expected && inv.all_pass;
    Ok(report(
        pass,
        json!({
            "graph": to_value(&g.to_doc()),
            "nodes": g.nodes.len(),
            "expected": expected,
            "twist_orders": orders.len(),
            "invariance": to_value(&inv),
        }),
    ))
}

/// `(numerator, denominator)` coefficient arrays, constant term first.
fn ratfunc_json(f: &RatFunc<Quad>) -> Value {
    let cs = |p: &Poly<Quad>| p.coeffs().iter().map(|c| c.render(&[])).collect::<Vec<_>>();
    json!([cs(f.num()), cs(f.den())])
}

fn radicand(fs: &[RatFunc<Quad>]) -> i64 {
    fs.iter()
        .flat_map(|f| f.num().coeffs().iter().chain(f.den().coeffs()))
        .find(|c| !c.is_rational())
        .map_or(0, Quad::radicand)
}

fn completeness_json(r: &CompletenessReport) -> Value {
    json!({
        "p": r.p,
        "expected": r.expected,
        "irreducibility": to_value(&r.irreducibility),
        "solutions": r.solutions.iter().map(|y| poly_str(y, &[])).collect::<Vec<_>>(),
        "nonzero": r.nonzero,
        "singular": r.singular,
        "eigen": r.eigen,
        "orthogonal": r.orthogonal,
        "rank": r.rank,
        "singular_dim": r.singular_dim,
        "norms": r.norms.iter().map(|n| json!({
            "lhs": n.lhs.render(&[]),
            "rhs": n.rhs.render(&[]),
            "equal": n.equal,
            "sign": n.sign,
        })).collect::<Vec<_>>(),
        "norms_equal": r.norms_equal(),
    })
}

fn gl11_homogeneous(p: usize) -> Result<Report> {
    let s = homogeneous_spectrum(p)?;
    Ok(report(
        s.pass(),
        json!({
            "p": p,
            "radicand": radicand(&s.closed_form),
            "spectrum": s.closed_form.iter().map(ratfunc_json).collect::<Vec<_>>(),
            "from_transfer": s.from_transfer.iter().map(ratfunc_json).collect::<Vec<_>>(),
            "matches": s.matches,
            "simple": s.simple,
            "completeness": completeness_json(&s.report),
        }),
    ))
}

fn gl11_complete(doc: &Gl11Doc) -> Result<Report> {
    let w = doc.weights::<Quad>()?;
    let r = completeness_report(&w)?;
    Ok(report(r.pass(), json!({ "field": to_value(&doc.field), "completeness": completeness_json(&r) })))
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = r#"{"m":2,"n":1,"field":{"d":2},"weights":[[1,1,0],[1,1,0],[1,1,0]],"z":["0","r","-r"]}"#;

    fn go(args: &[&str]) -> Outcome {
        run_args(std::iter::once("glmn-bethe").chain(args.iter().copied()))
    }

    #[test]
    fn worked_example_symbolic() {
        let o = go(&["population", "--symbolic", "--input", WORKED]);
        assert_eq!(o.code, 0, "{}", o.output);
        let r: Report = serde_json::from_str(&o.output).unwrap();
        assert_eq!(r.body["parities"], 3);
        assert_eq!(r.graph().unwrap().nodes.len(), 3);
        let dot = go(&["population", "--symbolic", "--format", "graphviz", "--input", WORKED]).output;
        assert_eq!(dot.matches("subgraph cluster_").count(), 3);
    }

    #[test]
    fn homogeneous_two_sites() {
        let o = go(&["gl11", "homogeneous", "-p", "2"]);
        assert_eq!(o.code, 0, "{}", o.output);
        let r: Report = serde_json::from_str(&o.output).unwrap();
        assert_eq!(r.body["spectrum"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(go(&["verify-bae", "--input", r#"{"m":1,"n":1,"z":["0"]}"#]).code, 2);
        assert_eq!(go(&["verify-bae"]).code, 2);
        assert_eq!(go(&["frobnicate"]).code, 2);
        assert_eq!(go(&["--help"]).code, 0);
        assert_eq!(go(&["operator", "--format", "graphviz", "--input", WORKED]).code, 2);
        // y_1 = x² − 7 is not a solution
        let bad = r#"{"m":2,"n":1,"field":{"d":2},"weights":[[1,1,0],[1,1,0],[1,1,0]],"z":["0","r","-r"],"y":["x^2-7","1"]}"#;
        assert_eq!(go(&["verify-bae", "--input", bad]).code, 1);
        assert_eq!(go(&["population", "--input", bad]).code, 1);
    }

    #[test]
    fn deterministic_and_round_trips() {
        for args in [
            vec!["population", "--seed", "4", "--input", WORKED],
            vec!["operator", "--input", WORKED],
            vec!["reproduce", "--direction", "1", "--input", WORKED],
            vec!["reproduce", "--direction", "2", "--input", WORKED],
            vec!["reproduce", "--direction", "1", "--at", "3", "--input", WORKED],
        ] {
            let a = go(&args);
            assert_eq!(a.code, 0, "{args:?}: {}", a.output);
            assert_eq!(a, go(&args));
            let r: Report = serde_json::from_str(&a.output).unwrap();
            assert_eq!(render(&r, Format::Json).unwrap(), a.output);
            if let Some(g) = r.graph() {
                assert_eq!(to_value(&g), r.body["graph"]);
            }
        }
    }

    #[test]
    fn seed_is_recorded() {
        let r: Report = serde_json::from_str(&go(&["population", "--seed", "11", "--input", WORKED]).output).unwrap();
        assert_eq!(r.seed, 11);
    }

    #[test]
    fn twisted_gl2() {
        let doc = r#"{"m":2,"n":0,"weights":[[1,0],[1,0]],"z":["0","1/3"],"twist":["2","-1"]}"#;
        let o = go(&["twisted", "--input", doc]);
        assert_eq!(o.code, 0, "{}", o.output);
        let r: Report = serde_json::from_str(&o.output).unwrap();
        assert_eq!(r.body["nodes"], 2);
        assert_eq!(go(&["twisted", "--input", WORKED]).code, 2);
    }
}
