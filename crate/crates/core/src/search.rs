//! Difference-constraint graphs over Z/m and exact clique search: maximum
//! clique by branch-and-bound with greedy-coloring bounds, maximal-clique
//! enumeration, chain validation, and the two-set chain-pair search.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::exponent::gamma_chain;
use crate::residue::{is_square_free, power_residues, ResidueSet, UnivariatePolynomial};

/// Cutoff on enumerated maximal cliques per search stage.
pub const MAX_MAXIMAL_CLIQUES: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitSet {
    words: Vec<u64>,
    n: usize,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet { words: vec![0; n.div_ceil(64)], n }
    }

    pub fn full(n: usize) -> Self {
        let mut s = BitSet::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (w, &o) in self.words.iter_mut().zip(&other.words) {
            *w &= o;
        }
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(wi * 64 + b)
            })
        })
    }
}

/// Plain undirected graph on vertices 0..n with bitset adjacency rows.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![BitSet::new(n); n] }
    }

    /// Build from a symmetric edge predicate; self-loops are never added.
    pub fn from_predicate(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::new(n);
        for a in 0..n {
            for b in (a + 1)..n {
                if edge(a, b) {
                    g.add_edge(a, b);
                }
            }
        }
        g
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        self.adj[a].insert(b);
        self.adj[b].insert(a);
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                if !self.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// Degeneracy order: repeatedly remove a minimum-degree vertex.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let mut deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            removed[v] = true;
            order.push(v);
            for u in self.adj[v].iter() {
                if !removed[u] {
                    deg[u] -= 1;
                }
            }
        }
        order
    }

    /// DIMACS clique format: `p edge <n> <m>` then 1-indexed `e u v` lines.
    pub fn to_dimacs(&self) -> String {
        let mut s = String::new();
        writeln!(s, "p edge {} {}", self.n, self.edge_count()).unwrap();
        for a in 0..self.n {
            for b in self.adj[a].iter() {
                if b > a {
                    writeln!(s, "e {} {}", a + 1, b + 1).unwrap();
                }
            }
        }
        s
    }

    pub fn from_dimacs(text: &str) -> Result<Graph> {
        let mut g: Option<Graph> = None;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match fields.as_slice() {
                ["p", "edge", n, _edges] => {
                    let n: usize = n
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad vertex count on line {}", lineno + 1)))?;
                    g = Some(Graph::new(n));
                }
                ["e", u, v] => {
                    let g = g
                        .as_mut()
                        .ok_or_else(|| Error::Parse("edge before p line".into()))?;
                    let u: usize = u
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad edge on line {}", lineno + 1)))?;
                    let v: usize = v
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad edge on line {}", lineno + 1)))?;
                    if u < 1 || v < 1 || u > g.n || v > g.n {
                        return Err(Error::Parse(format!(
                            "edge ({u},{v}) out of range on line {}",
                            lineno + 1
                        )));
                    }
                    g.add_edge(u - 1, v - 1);
                }
                _ => {
                    return Err(Error::Parse(format!(
                        "unrecognized line {}: {line}",
                        lineno + 1
                    )))
                }
            }
        }
        g.ok_or_else(|| Error::Parse("missing p line".into()))
    }
}

/// Graph whose cliques are exactly the residue sets with all ordered
/// differences outside `forbidden` minus zero.
#[derive(Clone, Debug)]
pub struct DifferenceGraph {
    modulus: u64,
    forbidden: ResidueSet,
    graph: Graph,
}

impl DifferenceGraph {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn forbidden(&self) -> &ResidueSet {
        &self.forbidden
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
}

pub fn build_difference_graph(m: u64, forbidden: &ResidueSet) -> Result<DifferenceGraph> {
    if forbidden.modulus() != m {
        return Err(Error::ModulusMismatch { expected: m, found: forbidden.modulus() });
    }
    let graph = Graph::from_predicate(m as usize, |a, b| {
        let d = ((a as u64 + m) - b as u64) % m;
        let e = (m - d) % m;
        !(d != 0 && forbidden.contains(d)) && !(e != 0 && forbidden.contains(e))
    });
    Ok(DifferenceGraph { modulus: m, forbidden: forbidden.clone(), graph })
}

/// Node/time limits for a search stage. Exhaustion is a normal result.
#[derive(Clone, Copy, Debug, Default)]
pub struct Budget {
    pub node_limit: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn with_time(d: Duration) -> Self {
        Budget { node_limit: None, time_limit: Some(d) }
    }

    pub fn with_nodes(n: u64) -> Self {
        Budget { node_limit: Some(n), time_limit: None }
    }
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub witness: ResidueSet,
    pub size: usize,
    pub optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

struct CliqueSearcher<'a> {
    g: &'a Graph,
    best: Vec<usize>,
    nodes: u64,
    node_limit: Option<u64>,
    deadline: Option<Instant>,
    aborted: bool,
}

impl CliqueSearcher<'_> {
    fn budget_exceeded(&self) -> bool {
        if let Some(limit) = self.node_limit {
            if self.nodes >= limit {
                return true;
            }
        }
        if let Some(deadline) = self.deadline {
            // Checking the clock every node would dominate small searches.
            if self.nodes.is_multiple_of(1024) && Instant::now() >= deadline {
                return true;
            }
        }
        false
    }

    /// Greedy coloring of the candidate set; vertices come back grouped by
    /// color class, so position i carries the upper bound bounds[i].
    fn color_sort(&self, p: &BitSet) -> (Vec<usize>, Vec<usize>) {
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for v in p.iter() {
            match classes
                .iter_mut()
                .find(|class| class.iter().all(|&u| !self.g.adj[v].contains(u)))
            {
                Some(class) => class.push(v),
                None => classes.push(vec![v]),
            }
        }
        let mut order = Vec::with_capacity(p.count());
        let mut bounds = Vec::with_capacity(p.count());
        for (ci, class) in classes.iter().enumerate() {
            for &v in class {
                order.push(v);
                bounds.push(ci + 1);
            }
        }
        (order, bounds)
    }

    fn expand(&mut self, p: &BitSet, r: &mut Vec<usize>) {
        self.nodes += 1;
        if self.budget_exceeded() {
            self.aborted = true;
            return;
        }
        let (order, bounds) = self.color_sort(p);
        let mut p = p.clone();
        for i in (0..order.len()).rev() {
            if r.len() + bounds[i] <= self.best.len() {
                return;
            }
            let v = order[i];
            r.push(v);
            let mut p2 = p.clone();
            p2.intersect_with(&self.g.adj[v]);
            if p2.is_empty() {
                if r.len() > self.best.len() {
                    self.best = r.clone();
                }
            } else {
                self.expand(&p2, r);
            }
            r.pop();
            p.remove(v);
            if self.aborted {
                return;
            }
        }
    }
}

/// Exact maximum clique on an arbitrary graph; `modulus` labels the witness.
pub fn max_clique_on_graph(g: &Graph, modulus: u64, budget: Budget) -> SearchResult {
    let start = Instant::now();
    let deadline = budget.time_limit.map(|d| start + d);
    let mut searcher = CliqueSearcher {
        g,
        best: Vec::new(),
        nodes: 0,
        node_limit: budget.node_limit,
        deadline,
        aborted: false,
    };
    if g.n() > 0 {
        // Seed with a greedy clique along the degeneracy order so pruning
        // bites immediately.
        let order = g.degeneracy_order();
        let mut seed: Vec<usize> = Vec::new();
        for &v in order.iter().rev() {
            if seed.iter().all(|&u| g.has_edge(u, v)) {
                seed.push(v);
            }
        }
        searcher.best = seed;
        let p = BitSet::full(g.n());
        let mut r = Vec::new();
        searcher.expand(&p, &mut r);
    }
    let mut witness: Vec<u64> = searcher.best.iter().map(|&v| v as u64).collect();
    witness.sort_unstable();
    assert!(
        g.is_clique(&searcher.best),
        "search returned a non-clique witness"
    );
    SearchResult {
        witness: ResidueSet::new(modulus, witness).expect("vertices are valid residues"),
        size: searcher.best.len(),
        optimal: !searcher.aborted,
        nodes_explored: searcher.nodes,
        elapsed: start.elapsed(),
    }
}

pub fn max_clique(g: &DifferenceGraph, budget: Budget) -> SearchResult {
    max_clique_on_graph(&g.graph, g.modulus, budget)
}

/// r_k(m): maximum size of a residue set whose ordered differences avoid the
/// nonzero kth-power residues.
pub fn r_k(m: u64, k: u32, budget: Budget) -> Result<SearchResult> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if k < 2 {
        return Err(Error::Precondition("power k must be at least 2".into()));
    }
    let forbidden = power_residues(m, k)?;
    let g = build_difference_graph(m, &forbidden)?;
    Ok(max_clique(&g, budget))
}

/// Lift an R-set mod m to m^k by freeing the k-1 upper base-m digits. The
/// result has exactly m^(k-1) * |R| elements.
pub fn lift_r_set(r: &ResidueSet, m: u64, k: u32) -> Result<ResidueSet> {
    if r.modulus() != m {
        return Err(Error::ModulusMismatch { expected: m, found: r.modulus() });
    }
    if !is_square_free(m) {
        return Err(Error::NotSquareFree(m));
    }
    let mk = m
        .checked_pow(k)
        .ok_or(Error::RangeExceeded { m, y: k })?;
    let upper = mk / m;
    let mut elems = Vec::with_capacity(r.len() * upper as usize);
    for &u0 in r.elements() {
        for hi in 0..upper {
            elems.push(u0 + hi * m);
        }
    }
    let out = ResidueSet::new(mk, elems)?;
    debug_assert_eq!(out.len() as u64, m.pow(k - 1) * r.len() as u64);
    Ok(out)
}

/// An eventually periodic sequence of residue sets (R_n): `preperiod` then
/// `period` repeating, all sharing one modulus.
#[derive(Clone, Debug)]
pub struct ChainSpec {
    modulus: u64,
    f: UnivariatePolynomial,
    preperiod: Vec<ResidueSet>,
    period: Vec<ResidueSet>,
    validated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChainValidation {
    pub ok: bool,
    /// Index n of the first pair (R_n, R_{n+1}) violating the condition.
    pub first_failing: Option<usize>,
}

impl ChainSpec {
    pub fn new(
        modulus: u64,
        f: UnivariatePolynomial,
        preperiod: Vec<ResidueSet>,
        period: Vec<ResidueSet>,
    ) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus(modulus));
        }
        if period.is_empty() {
            return Err(Error::Precondition("period must be non-empty".into()));
        }
        for s in preperiod.iter().chain(&period) {
            if s.modulus() != modulus {
                return Err(Error::ModulusMismatch { expected: modulus, found: s.modulus() });
            }
            if s.is_empty() {
                return Err(Error::Precondition("chain sets must be non-empty".into()));
            }
        }
        Ok(ChainSpec { modulus, f, preperiod, period, validated: false })
    }

    /// Chain for f(x) = x^k.
    pub fn power_chain(
        modulus: u64,
        k: u32,
        preperiod: Vec<ResidueSet>,
        period: Vec<ResidueSet>,
    ) -> Result<Self> {
        Self::new(modulus, UnivariatePolynomial::power(k), preperiod, period)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn f(&self) -> &UnivariatePolynomial {
        &self.f
    }

    pub fn preperiod(&self) -> &[ResidueSet] {
        &self.preperiod
    }

    pub fn period(&self) -> &[ResidueSet] {
        &self.period
    }

    /// R_n for any n >= 0.
    pub fn set_at(&self, n: usize) -> &ResidueSet {
        if n < self.preperiod.len() {
            &self.preperiod[n]
        } else {
            &self.period[(n - self.preperiod.len()) % self.period.len()]
        }
    }

    pub fn is_validated(&self) -> bool {
        self.validated
    }

    /// Run [`validate_chain`] and latch the result.
    pub fn validate(&mut self) -> ChainValidation {
        let v = validate_chain(self);
        self.validated = v.ok;
        v
    }
}

fn pair_ok(prev: &ResidueSet, next: &ResidueSet, f: &UnivariatePolynomial, m: u64) -> bool {
    // (next - next) ∩ f(prev - prev) ⊆ {0} mod m, over ordered pairs.
    let mut f_image = vec![false; m as usize];
    for &a in prev.elements() {
        for &b in prev.elements() {
            let d = (a + m - b) % m;
            f_image[f.eval_mod(d, m) as usize] = true;
        }
    }
    next.nonzero_differences().iter().all(|&d| !f_image[d as usize])
}

/// Check the chain condition for every consecutive pair realized by
/// preperiod + period, including the period wrap-around.
pub fn validate_chain(spec: &ChainSpec) -> ChainValidation {
    let m = spec.modulus;
    let seq: Vec<&ResidueSet> = spec.preperiod.iter().chain(&spec.period).collect();
    for n in 0..seq.len() - 1 {
        if !pair_ok(seq[n], seq[n + 1], &spec.f, m) {
            return ChainValidation { ok: false, first_failing: Some(n) };
        }
    }
    // Wrap: the last set of the period is followed by the first again.
    let last = spec.period.last().unwrap();
    let first = spec.period.first().unwrap();
    if !pair_ok(last, first, &spec.f, m) {
        return ChainValidation { ok: false, first_failing: Some(seq.len() - 1) };
    }
    ChainValidation { ok: true, first_failing: None }
}

/// Enumerate all maximal cliques (Bron-Kerbosch with pivoting) up to `limit`.
/// Returns the cliques and whether the enumeration was truncated.
pub fn maximal_cliques(g: &Graph, limit: usize) -> (Vec<Vec<usize>>, bool) {
    fn bk(
        g: &Graph,
        r: &mut Vec<usize>,
        p: &mut BitSet,
        x: &mut BitSet,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) -> bool {
        if out.len() >= limit {
            return false;
        }
        if p.is_empty() && x.is_empty() {
            let mut c = r.clone();
            c.sort_unstable();
            out.push(c);
            return true;
        }
        let pivot = p
            .iter()
            .chain(x.iter())
            .max_by_key(|&u| {
                let mut t = p.clone();
                t.intersect_with(&g.adj[u]);
                t.count()
            })
            .unwrap();
        let candidates: Vec<usize> = p
            .iter()
            .filter(|&v| !g.adj[pivot].contains(v))
            .collect();
        for v in candidates {
            let mut p2 = p.clone();
            p2.intersect_with(&g.adj[v]);
            let mut x2 = x.clone();
            x2.intersect_with(&g.adj[v]);
            r.push(v);
            let cont = bk(g, r, &mut p2, &mut x2, out, limit);
            r.pop();
            if !cont {
                return false;
            }
            p.remove(v);
            x.insert(v);
        }
        true
    }

    let mut out = Vec::new();
    let mut p = BitSet::full(g.n());
    let mut x = BitSet::new(g.n());
    let mut r = Vec::new();
    let complete = bk(g, &mut r, &mut p, &mut x, &mut out, limit);
    (out, !complete)
}

#[derive(Clone, Debug)]
pub struct ChainPairResult {
    pub r1: ResidueSet,
    pub r2: ResidueSet,
    pub gamma: f64,
    pub optimal: bool,
    pub candidates_considered: u64,
}

/// Constraint graph for the second set of a period-2 chain (full, R1, R2,
/// R1, R2, ...): distinct a, b may coexist in R2 iff neither ordered
/// difference lands in f(R1-R1) minus zero, and f of neither ordered
/// difference lands in (R1-R1) minus zero.
pub fn chain_second_graph(m: u64, f: &UnivariatePolynomial, r1: &ResidueSet) -> Graph {
    let mut d1 = vec![false; m as usize];
    for &d in &r1.nonzero_differences() {
        d1[d as usize] = true;
    }
    let mut fd1 = vec![false; m as usize];
    for &a in r1.elements() {
        for &b in r1.elements() {
            let d = (a + m - b) % m;
            let v = f.eval_mod(d, m);
            if v != 0 {
                fd1[v as usize] = true;
            }
        }
    }
    Graph::from_predicate(m as usize, |a, b| {
        let d = ((a + m as usize) - b) as u64 % m;
        let e = (m - d) % m;
        !fd1[d as usize]
            && !fd1[e as usize]
            && !d1[f.eval_mod(d, m) as usize]
            && !d1[f.eval_mod(e, m) as usize]
    })
}

/// Best R2 (by exact clique search) for a pinned R1.
pub fn chain_pair_for_r1(
    m: u64,
    k: u32,
    r1: &ResidueSet,
    budget: Budget,
) -> Result<ChainPairResult> {
    if r1.modulus() != m {
        return Err(Error::ModulusMismatch { expected: m, found: r1.modulus() });
    }
    let f = UnivariatePolynomial::power(k);
    let g2 = chain_second_graph(m, &f, r1);
    let res = max_clique_on_graph(&g2, m, budget);
    let gamma = gamma_chain(m, k, &[m], &[r1.len() as u64, res.size as u64])?;
    Ok(ChainPairResult {
        r1: r1.clone(),
        r2: res.witness,
        gamma,
        optimal: res.optimal,
        candidates_considered: 1,
    })
}

fn canonical_under_symmetry(m: u64, clique: &[usize]) -> Vec<u64> {
    // The constraint graphs are circulant and closed under negation, so
    // translate/negate each candidate to a canonical representative.
    let mut best: Option<Vec<u64>> = None;
    for negate in [false, true] {
        let base: Vec<u64> = clique
            .iter()
            .map(|&v| if negate { (m - v as u64) % m } else { v as u64 })
            .collect();
        for t in 0..m {
            let mut shifted: Vec<u64> = base.iter().map(|&v| (v + t) % m).collect();
            shifted.sort_unstable();
            if best.as_ref().is_none_or(|b| shifted < *b) {
                best = Some(shifted);
            }
        }
    }
    best.unwrap()
}

/// Search for the pair (R1, R2) maximizing the period-2 chain exponent
/// gamma = (k-1)/k + log_m|R1|/(k+1) + log_m|R2|/(k(k+1)), with R0 fixed to
/// the full set. R1 ranges over maximal cliques of the kth-power difference
/// graph, deduplicated under translation and negation.
pub fn search_chain_pair(m: u64, k: u32, budget: Budget) -> Result<ChainPairResult> {
    if m < 2 {
        return Err(Error::InvalidModulus(m));
    }
    if !is_square_free(m) {
        return Err(Error::NotSquareFree(m));
    }
    let start = Instant::now();
    let deadline = budget.time_limit.map(|d| start + d);
    let forbidden = power_residues(m, k)?;
    let g1 = build_difference_graph(m, &forbidden)?;
    let (cliques, truncated) = maximal_cliques(g1.graph(), MAX_MAXIMAL_CLIQUES);

    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut candidates: Vec<Vec<u64>> = Vec::new();
    for c in &cliques {
        let canon = canonical_under_symmetry(m, c);
        if seen.insert(canon.clone()) {
            candidates.push(canon);
        }
    }
    // Largest R1 first; canonical order breaks ties so the reported pair is
    // reproducible.
    candidates.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

    let f = UnivariatePolynomial::power(k);
    let mut optimal = !truncated;
    let mut incumbent: Option<ChainPairResult> = None;
    let mut considered = 0u64;
    for cand in &candidates {
        if let Some(d) = deadline {
            if Instant::now() >= d {
                optimal = false;
                break;
            }
        }
        if let Some(inc) = &incumbent {
            // Even a full-set R2 cannot beat the incumbent: skip.
            let bound = gamma_chain(m, k, &[m], &[cand.len() as u64, m])?;
            if bound <= inc.gamma + 1e-12 {
                continue;
            }
        }
        considered += 1;
        let r1 = ResidueSet::new(m, cand.iter().copied())?;
        let g2 = chain_second_graph(m, &f, &r1);
        let stage_budget = Budget {
            node_limit: budget.node_limit,
            time_limit: deadline.map(|d| d.saturating_duration_since(Instant::now())),
        };
        let res = max_clique_on_graph(&g2, m, stage_budget);
        if !res.optimal {
            optimal = false;
        }
        let gamma = gamma_chain(m, k, &[m], &[r1.len() as u64, res.size as u64])?;
        let better = incumbent
            .as_ref()
            .is_none_or(|inc| gamma > inc.gamma + 1e-12);
        if better {
            incumbent = Some(ChainPairResult {
                r1,
                r2: res.witness,
                gamma,
                optimal: res.optimal,
                candidates_considered: 0,
            });
        }
    }
    let mut out = incumbent.ok_or_else(|| {
        Error::Precondition(format!("no valid chain pair found for m={m}, k={k}"))
    })?;
    out.optimal = optimal;
    out.candidates_considered = considered;
    Ok(out)
}

/// The two sets used in the published mod-65 period-2 chain.
pub fn witness_mod65_r1() -> ResidueSet {
    ResidueSet::new(65, [31, 39, 8, 62, 19, 42, 50]).unwrap()
}

pub fn witness_mod65_r2() -> ResidueSet {
    ResidueSet::new(
        65,
        [31, 47, 62, 34, 42, 39, 27, 8, 54, 23, 0, 58, 19, 50, 15, 12, 4],
    )
    .unwrap()
}
