//! Exhaustive property suite: a table of claims, each checked on every graph
//! of a corpus.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::distance::{bfs_all_pairs, Dist, DistanceMatrix};
use crate::enumerate::{enumerate_graphs, CorpusSpec};
use crate::error::Result;
use crate::graph::{EdgeId, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::iso::is_isomorphic;
use crate::patterns::{contains_induced, find_clique, Pattern};
use crate::realize::realize_theta_bar;
use crate::recognition::{
    all_nonadjacent_theta, blocks, diameter_2_and_k4_2k2_paw_free, diameter_le_2_via_delta, is_block_graph,
    is_complete_multipartite, is_tree, block_graph_via_theta_bar, multipartite_parts, oracles,
    theta_bar_classes_distance_free, theta_bar_star_is_1trivial,
};
use crate::relations::{closure_classes, delta_set, DeltaSet, EdgePartition, EdgeRelation, Which};

/// Everything a checker may need about one graph, computed once.
pub struct GraphContext {
    pub graph: Graph,
    pub graph6: String,
    pub dist: DistanceMatrix,
    pub connected: bool,
    pub theta: EdgeRelation,
    pub theta_bar: EdgeRelation,
    pub theta_classes: EdgePartition,
    pub theta_bar_classes: EdgePartition,
}

impl GraphContext {
    pub fn new(graph: Graph) -> Self {
        let dist = bfs_all_pairs(&graph);
        let theta = EdgeRelation::of_graph_with(&graph, &dist, Which::Theta);
        let theta_bar = theta.complement();
        let theta_classes = closure_classes(&theta);
        let theta_bar_classes = closure_classes(&theta_bar);
        GraphContext {
            graph6: emit_graph6(&graph),
            connected: graph.is_connected(),
            graph,
            dist,
            theta,
            theta_bar,
            theta_classes,
            theta_bar_classes,
        }
    }

    pub fn m(&self) -> usize {
        self.graph.m()
    }

    pub fn delta(&self, e: EdgeId, f: EdgeId) -> DeltaSet {
        delta_set(&self.graph, &self.dist, e, f).expect("edge ids in range")
    }

    /// Distinct edge pairs `e < f`.
    pub fn distinct_pairs(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        let m = self.m();
        (0..m).flat_map(move |e| (e + 1..m).map(move |f| (e, f)))
    }

    pub fn nonadjacent_pairs(&self) -> impl Iterator<Item = (EdgeId, EdgeId)> + '_ {
        self.distinct_pairs().filter(|&(e, f)| !self.graph.edges_adjacent(e, f))
    }

    fn edge_str(&self, e: EdgeId) -> String {
        let (u, v) = self.graph.edge(e);
        format!("{{{u},{v}}}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    /// The hypothesis does not apply to this graph.
    Vacuous,
    Fails(String),
}

fn check(cond: bool, detail: impl FnOnce() -> String) -> Verdict {
    if cond {
        Verdict::Holds
    } else {
        Verdict::Fails(detail())
    }
}

fn first_failure(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
    for v in verdicts {
        if let Verdict::Fails(_) = v {
            return v;
        }
    }
    Verdict::Holds
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimKind {
    Lemma,
    Proposition,
    Theorem,
    Corollary,
    Observation,
    Invariant,
}

pub type Checker = Arc<dyn Fn(&GraphContext) -> Verdict + Send + Sync>;

#[derive(Clone)]
pub struct Claim {
    pub id: String,
    pub kind: ClaimKind,
    pub statement: String,
    pub check: Checker,
}

impl Claim {
    pub fn new(
        id: impl Into<String>,
        kind: ClaimKind,
        statement: impl Into<String>,
        check: impl Fn(&GraphContext) -> Verdict + Send + Sync + 'static,
    ) -> Self {
        Claim { id: id.into(), kind, statement: statement.into(), check: Arc::new(check) }
    }
}

impl std::fmt::Debug for Claim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("kind", &self.kind).finish()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub kind: ClaimKind,
    pub statement: String,
    /// Graphs the claim was evaluated on, vacuous ones included.
    pub checked: usize,
    pub vacuous: usize,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub schema: u32,
    pub graphs: usize,
    pub claims: Vec<ClaimReport>,
    pub passed: bool,
}

impl PropertyReport {
    pub fn failed_claims(&self) -> impl Iterator<Item = &ClaimReport> {
        self.claims.iter().filter(|c| !c.passed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    /// Worker threads; `None` uses rayon's default.
    pub threads: Option<usize>,
    /// Counterexamples kept per claim.
    pub max_counterexamples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { threads: None, max_counterexamples: 5 }
    }
}

/// Runs every claim on every graph. Results are merged in corpus order, so
/// the report does not depend on the thread count.
pub fn run_property_suite(graphs: &[Graph], claims: &[Claim], opts: &SuiteOptions) -> PropertyReport {
    let eval = || -> Vec<Vec<Verdict>> {
        graphs
            .par_iter()
            .map(|g| {
                let ctx = GraphContext::new(g.clone());
                claims.iter().map(|c| (c.check)(&ctx)).collect()
            })
            .collect()
    };
    let results = match opts.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .expect("thread pool")
            .install(eval),
        None => eval(),
    };

    let mut reports: Vec<ClaimReport> = claims
        .iter()
        .map(|c| ClaimReport {
            id: c.id.clone(),
            kind: c.kind,
            statement: c.statement.clone(),
            checked: graphs.len(),
            vacuous: 0,
            failures: 0,
            counterexamples: Vec::new(),
            passed: true,
        })
        .collect();
    for (g, verdicts) in graphs.iter().zip(results) {
        for (r, v) in reports.iter_mut().zip(verdicts) {
            match v {
                Verdict::Holds => {}
                Verdict::Vacuous => r.vacuous += 1,
                Verdict::Fails(detail) => {
                    r.failures += 1;
                    r.passed = false;
                    if r.counterexamples.len() < opts.max_counterexamples {
                        r.counterexamples.push(Counterexample { graph6: emit_graph6(g), detail });
                    }
                }
            }
        }
    }
    PropertyReport { schema: 1, graphs: graphs.len(), passed: reports.iter().all(|r| r.passed), claims: reports }
}

/// Enumerates `spec` and runs the built-in claims.
pub fn verify_corpus(spec: &CorpusSpec, opts: &SuiteOptions) -> Result<PropertyReport> {
    let graphs = enumerate_graphs(spec)?;
    Ok(run_property_suite(&graphs, &builtin_claims(), opts))
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            go(n, k, v + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Vertex sets of all induced copies of `h`.
fn induced_copies(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    combinations(g.n(), h.n())
        .into_iter()
        .filter(|s| {
            let sub = g.induced_subgraph(s);
            sub.m() == h.m() && is_isomorphic(&sub, h)
        })
        .collect()
}

/// All edges inside `vertices` belong to one class of `p`.
fn one_class_on(g: &Graph, p: &EdgePartition, vertices: &[usize]) -> bool {
    let mut classes = vertices
        .iter()
        .enumerate()
        .flat_map(|(i, &u)| vertices[i + 1..].iter().filter_map(move |&v| g.edge_id(u, v)))
        .map(|e| p.class_of(e));
    match classes.next() {
        Some(c) => classes.all(|x| x == c),
        None => true,
    }
}

fn star_like(g: &Graph) -> bool {
    g.n() >= 1 && is_isomorphic(g, &Graph::star(g.n() - 1))
}

/// Induced paths with at least two edges, each listed once per direction.
fn induced_paths(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if path.len() >= 3 {
            out.push(path.clone());
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            let ok = !path.contains(&w) && path[..path.len() - 1].iter().all(|&u| !g.has_edge(u, w));
            if ok {
                path.push(w);
                grow(g, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    for v in 0..g.n() {
        grow(g, &mut vec![v], &mut out);
    }
    out
}

fn is_one_trivial(p: &EdgePartition) -> bool {
    p.class_count() == 1
}

fn is_edge_trivial(p: &EdgePartition) -> bool {
    p.class_count() == p.len()
}

/// The built-in claim table.
pub fn builtin_claims() -> Vec<Claim> {
    let mut c = Vec::new();

    c.push(Claim::new(
        "endpoint-distance-bound",
        ClaimKind::Lemma,
        "for every edge {a,b} and vertex x, |d(x,a) - d(x,b)| <= 1 (both infinite or both finite)",
        |ctx| {
            let g = &ctx.graph;
            first_failure(g.edges().iter().flat_map(|&(a, b)| {
                (0..g.n()).map(move |x| {
                    let (da, db) = (ctx.dist.get(x, a), ctx.dist.get(x, b));
                    let ok = match (da.finite(), db.finite()) {
                        (Some(p), Some(q)) => p.abs_diff(q) <= 1,
                        (None, None) => true,
                        _ => false,
                    };
                    check(ok, || format!("x={x}, edge {{{a},{b}}}: d = {da}, {db}"))
                })
            }))
        },
    ));

    c.push(Claim::new(
        "pairwise-intersecting-edges",
        ClaimKind::Lemma,
        "a connected graph has pairwise intersecting edges iff it is K3 or the star S_{|V|-1}",
        |ctx| {
            if !ctx.connected {
                return Verdict::Vacuous;
            }
            let lhs = ctx.nonadjacent_pairs().next().is_none();
            let rhs = is_isomorphic(&ctx.graph, &Graph::complete(3)) || star_like(&ctx.graph);
            check(lhs == rhs, || format!("pairwise intersecting: {lhs}, K3 or star: {rhs}"))
        },
    ));

    c.push(Claim::new(
        "cartesian-product-unit-and-commutativity",
        ClaimKind::Invariant,
        "K1 □ G ≅ G □ K1 ≅ G and G □ H ≅ H □ G for H in {K2, P3}",
        |ctx| {
            let g = &ctx.graph;
            let k1 = Graph::empty(1);
            let mut v = vec![
                check(is_isomorphic(&Graph::cartesian_product(&k1, g), g), || "K1 □ G ≇ G".into()),
                check(is_isomorphic(&Graph::cartesian_product(g, &k1), g), || "G □ K1 ≇ G".into()),
            ];
            for (name, h) in [("K2", Graph::complete(2)), ("P3", Graph::path(3))] {
                v.push(check(
                    is_isomorphic(&Graph::cartesian_product(g, &h), &Graph::cartesian_product(&h, g)),
                    || format!("G □ {name} ≇ {name} □ G"),
                ));
            }
            first_failure(v)
        },
    ));

    c.push(Claim::new(
        "paw-free-characterization",
        ClaimKind::Theorem,
        "G is paw-free iff every component is K3-free or complete multipartite",
        |ctx| {
            let g = &ctx.graph;
            let lhs = contains_induced(g, Pattern::Paw).is_none();
            let rhs = g.connected_components().iter().all(|comp| {
                let sub = g.induced_subgraph(comp);
                find_clique(&sub, 3).is_none() || is_complete_multipartite(&sub).is_some()
            });
            check(lhs == rhs, || format!("paw-free: {lhs}, components K3-free or multipartite: {rhs}"))
        },
    ));

    c.push(Claim::new(
        "delta-shape",
        ClaimKind::Lemma,
        "within a component 1 <= |Δ| <= 3 and Δ ⊆ {k,k+1,k+2}, |Δ| = 2 forces {k,k+1}; \
         intersecting edges have Δ = {0,1} and are Θ-related iff equal or in a common K3, else Δ = {0,1,2}",
        |ctx| {
            let g = &ctx.graph;
            let m = ctx.m();
            let pairs = (0..m).flat_map(|e| (e..m).map(move |f| (e, f)));
            first_failure(pairs.map(|(e, f)| {
                let (a, b) = g.edge(e);
                if !ctx.dist.get(a, g.edge(f).0).is_finite() {
                    return Verdict::Holds;
                }
                let delta = ctx.delta(e, f);
                let k = delta.min().and_then(Dist::finite).unwrap_or(0);
                let within = delta.iter().all(|d| d.finite().is_some_and(|x| x <= k + 2));
                let shape = (1..=3).contains(&delta.len()) && within && (delta.len() != 2 || delta.is_consecutive());
                let theta = ctx.theta.related(e, f);
                let adjacent = e == f || g.edges_adjacent(e, f);
                let local = if !adjacent {
                    true
                } else {
                    let (x, y) = g.edge(f);
                    let tri = e == f || {
                        let mut vs = vec![a, b, x, y];
                        vs.sort_unstable();
                        vs.dedup();
                        g.is_clique(&vs)
                    };
                    if tri {
                        delta == DeltaSet::from_values([0, 1]) && theta
                    } else {
                        delta == DeltaSet::from_values([0, 1, 2]) && !theta
                    }
                };
                check(shape && local, || {
                    format!("e={}, f={}: Δ = {delta}, Θ = {theta}", ctx.edge_str(e), ctx.edge_str(f))
                })
            }))
        },
    ));

    c.push(Claim::new(
        "theta-labeling-invariance",
        ClaimKind::Invariant,
        "the Θ test gives the same answer for all four endpoint orientations",
        |ctx| {
            let g = &ctx.graph;
            let d = &ctx.dist;
            first_failure(ctx.distinct_pairs().map(|(e, f)| {
                let (a, b) = g.edge(e);
                let (x, y) = g.edge(f);
                let t = |a: usize, b: usize, x: usize, y: usize| d.get(a, x) + d.get(b, y) != d.get(a, y) + d.get(b, x);
                let all = [t(a, b, x, y), t(b, a, x, y), t(a, b, y, x), t(b, a, y, x)];
                check(all.iter().all(|&v| v == all[0]) && all[0] == ctx.theta.related(e, f), || {
                    format!("e={}, f={}: {all:?}", ctx.edge_str(e), ctx.edge_str(f))
                })
            }))
        },
    ));

    c.push(Claim::new(
        "theta-forces-consecutive-delta",
        ClaimKind::Lemma,
        "(e,f) ∈ Θ implies Δ = {k,k+1}",
        |ctx| {
            let m = ctx.m();
            let pairs = (0..m).flat_map(|e| (e..m).map(move |f| (e, f)));
            first_failure(pairs.filter(|&(e, f)| ctx.theta.related(e, f)).map(|(e, f)| {
                let delta = ctx.delta(e, f);
                check(delta.len() == 2 && delta.is_consecutive(), || {
                    format!("e={}, f={}: Δ = {delta}", ctx.edge_str(e), ctx.edge_str(f))
                })
            }))
        },
    ));

    c.push(Claim::new(
        "theta-thetabar-complementary",
        ClaimKind::Invariant,
        "Θ ∪ Θ̄ is all pairs and Θ ∩ Θ̄ is the identity",
        |ctx| {
            let m = ctx.m();
            let pairs = (0..m).flat_map(|e| (e..m).map(move |f| (e, f)));
            first_failure(pairs.map(|(e, f)| {
                let (t, tb) = (ctx.theta.related(e, f), ctx.theta_bar.related(e, f));
                let ok = if e == f { t && tb } else { t != tb };
                check(ok, || format!("e={}, f={}: Θ = {t}, Θ̄ = {tb}", ctx.edge_str(e), ctx.edge_str(f)))
            }))
        },
    ));

    c.push(Claim::new(
        "delta-size-characterizations",
        ClaimKind::Proposition,
        "connected, m >= 1: (1) no |Δ| = 3 iff complete; (2) all |Δ| = 1 iff K2; \
         (3) all |Δ| = 2 iff K2 or K3 iff Θ = Θ* 1-trivial; \
         (4) all |Δ| = 3 iff no |Δ| = 2 iff Θ = Θ* |E|-trivial iff tree (distinct pairs)",
        |ctx| {
            if !ctx.connected || ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let g = &ctx.graph;
            let sizes: Vec<usize> = ctx.distinct_pairs().map(|(e, f)| ctx.delta(e, f).len()).collect();
            let all = |p: &dyn Fn(usize) -> bool| sizes.iter().all(|&s| p(s));
            let n = g.n();
            let complete = 2 * g.m() == n * (n - 1);
            let closed = ctx.theta.is_closed();
            let item1 = all(&|s| s != 3) == complete;
            let item2 = all(&|s| s == 1) == (n == 2);
            let k2k3 = n == 2 || (n == 3 && g.m() == 3);
            let item3 = all(&|s| s == 2) == k2k3 && k2k3 == (closed && is_one_trivial(&ctx.theta_classes));
            let tree = is_tree(g);
            let item4 = all(&|s| s == 3) == all(&|s| s != 2)
                && all(&|s| s != 2) == (closed && is_edge_trivial(&ctx.theta_classes))
                && tree == all(&|s| s == 3);
            check(item1 && item2 && item3 && item4, || {
                format!("items hold: {:?}", [item1, item2, item3, item4])
            })
        },
    ));

    c.push(Claim::new(
        "theta-closed-nontrivial-delta",
        ClaimKind::Corollary,
        "connected, m >= 1, Θ = Θ*: Θ* is not 1-trivial iff some distinct e,f have |Δ| != 2",
        |ctx| {
            if !ctx.connected || ctx.m() == 0 || !ctx.theta.is_closed() {
                return Verdict::Vacuous;
            }
            let lhs = !is_one_trivial(&ctx.theta_classes);
            let rhs = ctx.distinct_pairs().any(|(e, f)| ctx.delta(e, f).len() != 2);
            check(lhs == rhs, || format!("not 1-trivial: {lhs}, some |Δ| != 2: {rhs}"))
        },
    ));

    c.push(Claim::new(
        "closure-duality",
        ClaimKind::Lemma,
        "for {R,P} = {Θ,Θ̄}, m >= 1: R* not 1-trivial implies P* 1-trivial; \
         R = R* neither 1- nor |E|-trivial implies P* 1-trivial and P != P*",
        |ctx| {
            if ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let sides = [
                ("Θ", &ctx.theta, &ctx.theta_classes, &ctx.theta_bar, &ctx.theta_bar_classes),
                ("Θ̄", &ctx.theta_bar, &ctx.theta_bar_classes, &ctx.theta, &ctx.theta_classes),
            ];
            first_failure(sides.into_iter().map(|(name, r, rc, p, pc)| {
                let part1 = is_one_trivial(rc) || is_one_trivial(pc);
                let hyp2 = r.is_closed() && !is_one_trivial(rc) && !is_edge_trivial(rc);
                let part2 = !hyp2 || (is_one_trivial(pc) && !p.is_closed());
                check(part1 && part2, || {
                    format!("R = {name}: classes {} and {}, part (1) {part1}, part (2) {part2}", rc.class_count(), pc.class_count())
                })
            }))
        },
    ));

    c.push(Claim::new(
        "triviality-equivalences",
        ClaimKind::Lemma,
        "connected, m >= 1: Θ = Θ* 1-trivial iff Θ̄ = Θ̄* |E|-trivial iff K2 or K3 iff all |Δ| = 2; \
         Θ = Θ* |E|-trivial iff Θ̄ = Θ̄* 1-trivial iff tree iff all |Δ| != 2 iff all |Δ| = 3",
        |ctx| {
            if !ctx.connected || ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let g = &ctx.graph;
            let sizes: Vec<usize> = ctx.distinct_pairs().map(|(e, f)| ctx.delta(e, f).len()).collect();
            let (tc, tbc) = (ctx.theta.is_closed(), ctx.theta_bar.is_closed());
            let a = [
                tc && is_one_trivial(&ctx.theta_classes),
                tbc && is_edge_trivial(&ctx.theta_bar_classes),
                g.n() == 2 || (g.n() == 3 && g.m() == 3),
                sizes.iter().all(|&s| s == 2),
            ];
            let b = [
                tc && is_edge_trivial(&ctx.theta_classes),
                tbc && is_one_trivial(&ctx.theta_bar_classes),
                is_tree(g),
                sizes.iter().all(|&s| s != 2),
                sizes.iter().all(|&s| s == 3),
            ];
            let same = |v: &[bool]| v.iter().all(|&x| x == v[0]);
            check(same(&a) && same(&b), || format!("first chain {a:?}, second chain {b:?}"))
        },
    ));

    c.push(Claim::new(
        "tree-via-nonadjacent-delta",
        ClaimKind::Lemma,
        "connected with a non-adjacent edge pair: Θ̄ = Θ̄* 1-trivial iff all non-adjacent |Δ| = 3 iff tree",
        |ctx| {
            if !ctx.connected || ctx.nonadjacent_pairs().next().is_none() {
                return Verdict::Vacuous;
            }
            let v = [
                ctx.theta_bar.is_closed() && is_one_trivial(&ctx.theta_bar_classes),
                ctx.nonadjacent_pairs().all(|(e, f)| ctx.delta(e, f).len() == 3),
                is_tree(&ctx.graph),
            ];
            check(v.iter().all(|&x| x == v[0]), || format!("{v:?}"))
        },
    ));

    c.push(Claim::new(
        "induced-path-one-class",
        ClaimKind::Lemma,
        "all edges of an induced path lie in one Θ̄* class",
        |ctx| {
            let g = &ctx.graph;
            first_failure(induced_paths(g).into_iter().map(|path| {
                let ids: Vec<EdgeId> = path.windows(2).map(|w| g.edge_id(w[0], w[1]).unwrap()).collect();
                let c0 = ctx.theta_bar_classes.class_of(ids[0]);
                check(ids.iter().all(|&e| ctx.theta_bar_classes.class_of(e) == c0), || format!("path {path:?}"))
            }))
        },
    ));

    c.push(Claim::new(
        "cut-edge-forces-one-class",
        ClaimKind::Lemma,
        "a graph with a cut edge has 1-trivial Θ̄*",
        |ctx| {
            let bridge = blocks(&ctx.graph).into_iter().find(|b| b.len() == 2);
            match bridge {
                None => Verdict::Vacuous,
                Some(b) => check(is_one_trivial(&ctx.theta_bar_classes), || {
                    format!("cut edge {{{},{}}}, {} classes", b[0], b[1], ctx.theta_bar_classes.class_count())
                }),
            }
        },
    ));

    c.push(Claim::new(
        "no-common-triangle-or-diamond",
        ClaimKind::Lemma,
        "distinct edges in no common K3 and no common induced diamond share a Θ̄* class",
        |ctx| {
            let g = &ctx.graph;
            first_failure(ctx.distinct_pairs().map(|(e, f)| {
                let (a, b) = g.edge(e);
                let (x, y) = g.edge(f);
                let mut vs = vec![a, b, x, y];
                vs.sort_unstable();
                vs.dedup();
                let diamond = |s: &[usize]| s.len() == 4 && g.induced_subgraph(s).m() == 5;
                let common = if vs.len() == 3 {
                    g.is_clique(&vs)
                        || (0..g.n()).filter(|w| !vs.contains(w)).any(|w| {
                            let mut s = vs.clone();
                            s.push(w);
                            diamond(&s)
                        })
                } else {
                    diamond(&vs)
                };
                if common {
                    return Verdict::Holds;
                }
                let p = &ctx.theta_bar_classes;
                check(p.class_of(e) == p.class_of(f), || {
                    format!("e={}, f={} in different classes", ctx.edge_str(e), ctx.edge_str(f))
                })
            }))
        },
    ));

    c.push(Claim::new(
        "small-induced-subgraphs",
        ClaimKind::Lemma,
        "edges of an induced paw, C4, gem, K5, star or X-house share a Θ̄* class; \
         edges of an induced diamond, K_n (n >= 3) or K2,3 share a Θ* class",
        |ctx| {
            let g = &ctx.graph;
            let mut v = Vec::new();
            let bar = [Pattern::Paw, Pattern::C4, Pattern::Gem, Pattern::K5, Pattern::XHouse];
            for p in bar {
                for s in induced_copies(g, &p.graph()) {
                    v.push(check(one_class_on(g, &ctx.theta_bar_classes, &s), || format!("Θ̄*: induced {p} on {s:?}")));
                }
            }
            // stars: every two edges of an induced star form an induced P3
            for s in induced_copies(g, &Graph::path(3)) {
                v.push(check(one_class_on(g, &ctx.theta_bar_classes, &s), || format!("Θ̄*: induced star edges {s:?}")));
            }
            // cliques: the triangles tie all edges of any K_n together
            for p in [Pattern::Diamond, Pattern::K3, Pattern::K23] {
                for s in induced_copies(g, &p.graph()) {
                    v.push(check(one_class_on(g, &ctx.theta_classes, &s), || format!("Θ*: induced {p} on {s:?}")));
                }
            }
            first_failure(v)
        },
    ));

    c.push(Claim::new(
        "block-graph-via-thetabar",
        ClaimKind::Proposition,
        "connected: block graph iff all non-adjacent pairs are Θ̄-related, \
         iff the four-point condition holds, iff no isometric C_n (n >= 4) or diamond",
        |ctx| {
            if !ctx.connected {
                return Verdict::Vacuous;
            }
            let g = &ctx.graph;
            let mut v = vec![is_block_graph(g), block_graph_via_theta_bar(g), oracles::four_point_condition(g)];
            if g.n() <= 12 {
                v.push(oracles::no_isometric_long_cycle_or_diamond(g));
            }
            check(v.iter().all(|&x| x == v[0]), || {
                format!("structural, Θ̄, four-point, isometric: {v:?}")
            })
        },
    ));

    c.push(Claim::new(
        "diameter-two-via-delta",
        ClaimKind::Proposition,
        "connected: no non-adjacent |Δ| = 3 iff diam <= 2 iff all non-adjacent Δ ⊆ {1,2}",
        |ctx| {
            if !ctx.connected {
                return Verdict::Vacuous;
            }
            let diam2 = ctx.dist.max() <= Dist::Fin(2);
            let no3 = ctx.nonadjacent_pairs().all(|(e, f)| ctx.delta(e, f).len() != 3);
            let sub12 = ctx
                .nonadjacent_pairs()
                .all(|(e, f)| ctx.delta(e, f).iter().all(|d| d == Dist::Fin(1) || d == Dist::Fin(2)));
            let by_fn = diameter_le_2_via_delta(&ctx.graph).diameter_le_2;
            check(no3 == diam2 && sub12 == diam2 && by_fn == diam2, || {
                format!("diam <= 2: {diam2}, no |Δ| = 3: {no3}, Δ ⊆ {{1,2}}: {sub12}, recognizer: {by_fn}")
            })
        },
    ));

    c.push(Claim::new(
        "nonadjacent-theta",
        ClaimKind::Proposition,
        "connected: all non-adjacent pairs Θ-related iff all non-adjacent |Δ| = 2 and paw-free \
         iff all non-adjacent Δ = {1,2} and paw-free iff diam <= 2 and {K4, 2K2, paw}-free",
        |ctx| {
            if !ctx.connected {
                return Verdict::Vacuous;
            }
            let g = &ctx.graph;
            let paw_free = contains_induced(g, Pattern::Paw).is_none();
            let v = [
                ctx.nonadjacent_pairs().all(|(e, f)| ctx.theta.related(e, f)),
                ctx.nonadjacent_pairs().all(|(e, f)| ctx.delta(e, f).len() == 2) && paw_free,
                ctx.nonadjacent_pairs().all(|(e, f)| ctx.delta(e, f) == DeltaSet::from_values([1, 2])) && paw_free,
                diameter_2_and_k4_2k2_paw_free(g),
                all_nonadjacent_theta(g),
            ];
            check(v.iter().all(|&x| x == v[0]), || format!("{v:?}"))
        },
    ));

    c.push(Claim::new(
        "k3-free-one-class",
        ClaimKind::Proposition,
        "a K3-free graph with an edge has 1-trivial Θ̄*",
        |ctx| {
            if ctx.m() == 0 || find_clique(&ctx.graph, 3).is_some() {
                return Verdict::Vacuous;
            }
            check(is_one_trivial(&ctx.theta_bar_classes), || {
                format!("{} classes", ctx.theta_bar_classes.class_count())
            })
        },
    ));

    c.push(Claim::new(
        "thetabar-one-trivial-characterization",
        ClaimKind::Proposition,
        "m >= 1: Θ̄* is 1-trivial iff (|V| <= 4 and not K3, diamond, K4) or \
         (|V| >= 5 and K3-free or containing an induced K5, paw or P4); \
         several edge-bearing components always give one class",
        |ctx| {
            if ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let lhs = is_one_trivial(&ctx.theta_bar_classes);
            let rhs = theta_bar_star_is_1trivial(&ctx.graph);
            check(lhs == rhs, || format!("closure: {lhs}, forbidden subgraphs: {rhs}"))
        },
    ));

    c.push(Claim::new(
        "multipartite-theorem",
        ClaimKind::Theorem,
        "connected: Θ̄* has more than one class iff G is complete multipartite with 3 or 4 parts; \
         then every non-adjacent Δ ⊆ {1,2}",
        |ctx| {
            if !ctx.connected || ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let many = ctx.theta_bar_classes.class_count() > 1;
            let parts = multipartite_parts(&ctx.graph).map(|p| p.len());
            let cm34 = matches!(parts, Some(3 | 4));
            let sub12 = !many
                || ctx
                    .nonadjacent_pairs()
                    .all(|(e, f)| ctx.delta(e, f).iter().all(|d| d == Dist::Fin(1) || d == Dist::Fin(2)));
            check(many == cm34 && sub12, || {
                format!("classes {}, parts {parts:?}, Δ ⊆ {{1,2}}: {sub12}", ctx.theta_bar_classes.class_count())
            })
        },
    ));

    c.push(Claim::new(
        "structure-theorem",
        ClaimKind::Theorem,
        "connected: 𝒢_Θ̄ is realized by a graph with non-1-trivial Θ̄* iff Θ̄* is not 1-trivial; \
         the reconstruction has an isomorphic relation graph",
        |ctx| {
            if !ctx.connected || ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let w = ctx.theta_bar.graph();
            let r = realize_theta_bar(w);
            let nontrivial = !is_one_trivial(&ctx.theta_bar_classes);
            let verified = match &r.graph {
                Some(h) => is_isomorphic(EdgeRelation::of_graph(h, Which::ThetaBar).graph(), w),
                None => true,
            };
            let comps_match = !r.realizable || w.connected_components().len() == ctx.theta_bar_classes.class_count();
            check(r.realizable == nontrivial && verified && comps_match, || {
                format!("realizable: {}, non-1-trivial: {nontrivial}, verified: {verified}, reason: {:?}", r.realizable, r.reason)
            })
        },
    ));

    c.push(Claim::new(
        "one-or-three-classes",
        ClaimKind::Corollary,
        "Θ̄* has 1 or 3 classes for every graph with an edge",
        |ctx| {
            if ctx.m() == 0 {
                return Verdict::Vacuous;
            }
            let k = ctx.theta_bar_classes.class_count();
            check(k == 1 || k == 3, || format!("{k} classes"))
        },
    ));

    c.push(Claim::new(
        "distance-free-classes",
        ClaimKind::Corollary,
        "Θ̄* classes computed from the multipartite structure equal the distance-based classes",
        |ctx| {
            let fast = theta_bar_classes_distance_free(&ctx.graph);
            check(fast.same_partition(&ctx.theta_bar_classes), || {
                format!("distance-free {:?} vs closure {:?}", fast.classes(), ctx.theta_bar_classes.classes())
            })
        },
    ));

    c.push(Claim::new(
        "diameter-two-induced-isometric",
        ClaimKind::Observation,
        "an induced subgraph of diameter at most 2 is isometric",
        |ctx| {
            let g = &ctx.graph;
            if g.n() > 12 {
                return Verdict::Vacuous;
            }
            first_failure((1u32..1 << g.n()).filter(|s| s.count_ones() >= 3).map(|mask| {
                let vs: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
                let sub = bfs_all_pairs(&g.induced_subgraph(&vs));
                if sub.max() > Dist::Fin(2) {
                    return Verdict::Holds;
                }
                let iso = (0..vs.len()).all(|i| (0..vs.len()).all(|j| sub.get(i, j) == ctx.dist.get(vs[i], vs[j])));
                check(iso, || format!("subset {vs:?}"))
            }))
        },
    ));

    c.push(Claim::new(
        "cycle-classes",
        ClaimKind::Observation,
        "C_2n: Θ pairs exactly antipodal edges, Θ* has n classes and Θ = Θ*; \
         C_2n+1 (n >= 2): each edge is Θ-related to its two antipodal edges, Θ* is 1-trivial and Θ != Θ*",
        |ctx| {
            let g = &ctx.graph;
            let n = g.n();
            let is_cycle = n >= 4 && ctx.connected && g.m() == n && (0..n).all(|v| g.degree(v) == 2);
            if !is_cycle {
                return Verdict::Vacuous;
            }
            let t = ctx.theta.graph();
            let k = ctx.theta_classes.class_count();
            if n % 2 == 0 {
                check((0..n).all(|e| t.degree(e) == 1) && k == n / 2 && ctx.theta.is_closed(), || {
                    format!("even cycle: {k} classes")
                })
            } else {
                check((0..n).all(|e| t.degree(e) == 2) && k == 1 && !ctx.theta.is_closed(), || {
                    format!("odd cycle: {k} classes")
                })
            }
        },
    ));

    c.push(Claim::new(
        "graph6-round-trip",
        ClaimKind::Invariant,
        "parse(emit(G)) = G and emit(parse(s)) = s",
        |ctx| match parse_graph6(&ctx.graph6) {
            Ok(h) => check(h == ctx.graph && emit_graph6(&h) == ctx.graph6, || "round trip changed the graph".into()),
            Err(e) => Verdict::Fails(e.to_string()),
        },
    ));

    c
}
