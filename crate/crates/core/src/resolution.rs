//! Enriques diagram and dual graph of the canonical embedded
//! resolution, with per-divisor multiplicities, discrepancies and their
//! ratios.
//!
//! Stage `ν` of the resolution follows the continued fraction of
//! `k_ν/n_ν`: row `i` holds `a_i` white vertices. For `ν ≥ 2` the last
//! vertex of the previous stage acts as a virtual predecessor prepended
//! to row 1, so the proximity rules apply uniformly (including rows
//! with `a_1 = 0`).

use crate::error::{Error, Result};
use crate::puiseux::{
    characteristic_data, continued_fraction, CharacteristicData, ContinuedFraction, PuiseuxPairs,
};
use crate::rational::{rat_big, Int, Rat};
use crate::verify::Check;
use num::{One, Zero};
use std::collections::BTreeSet;
use std::fmt;

/// Resource guard for the resolution builder. Partial quotients can be
/// astronomically large for adversarial inputs.
#[derive(Debug, Clone)]
pub struct Limits {
    /// Maximum number of white vertices (`Σ a_i` over all stages).
    pub max_vertices: u64,
    /// Maximum allowed weight `w_g`.
    pub max_weight: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_vertices: 10_000,
            max_weight: 1_000_000,
        }
    }
}

/// Exceptional divisor `D^{(ν)}_{i,j}` (1-based stage, row, column) or
/// the proper transform `V'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VertexId {
    White { stage: usize, row: usize, col: usize },
    Black,
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::White { stage, row, col } => write!(f, "D[{stage},{row},{col}]"),
            VertexId::Black => write!(f, "V'"),
        }
    }
}

/// Proximity structure of the blow-up sequence. White vertices are
/// indexed `0..white_count` in blow-up order; the black vertex gets
/// index `white_count`.
#[derive(Debug, Clone)]
pub struct EnriquesDiagram {
    pub pairs: PuiseuxPairs,
    pub cd: CharacteristicData,
    pub stages: Vec<ContinuedFraction>,
    /// White vertices in blow-up order.
    pub vertices: Vec<VertexId>,
    /// Outgoing proximity targets per vertex (black vertex last, with
    /// its single arrow to the final exceptional divisor).
    pub prox: Vec<Vec<usize>>,
    /// Multiplicity of the proper transform at each blow-up center
    /// (`r_i n'_ν`), per white vertex.
    pub center_mult: Vec<Int>,
    /// Index of `D^{(ν)}_{h,a_h}` for each stage.
    pub last_of_stage: Vec<usize>,
}

impl EnriquesDiagram {
    pub fn white_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn black_index(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, idx: usize) -> String {
        if idx == self.black_index() {
            VertexId::Black.to_string()
        } else {
            self.vertices[idx].to_string()
        }
    }

    /// Stage of a white vertex.
    pub fn stage_of(&self, idx: usize) -> usize {
        match self.vertices[idx] {
            VertexId::White { stage, .. } => stage,
            VertexId::Black => unreachable!("black vertex has no stage"),
        }
    }
}

/// Intersection structure of the exceptional divisors plus `V'`.
#[derive(Debug, Clone)]
pub struct DualGraph {
    /// Undirected edges as `(smaller, larger)` index pairs.
    pub edges: Vec<(usize, usize)>,
    /// Adjacency lists over all vertices (black last).
    pub adj: Vec<Vec<usize>>,
}

impl DualGraph {
    pub fn degree(&self, idx: usize) -> usize {
        self.adj[idx].len()
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn is_tree(&self) -> bool {
        let n = self.adj.len();
        if self.edges.len() + 1 != n {
            return false;
        }
        // connectivity by BFS from 0
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = queue.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push(w);
                }
            }
        }
        count == n
    }
}

/// A dual-graph vertex of degree ≥ 3 with its multiplicity data.
#[derive(Debug, Clone)]
pub struct Rupture {
    pub vertex: usize,
    pub stage: usize,
    pub m0: Int,
    /// Multiplicities of the dual-graph neighbours, in index order.
    pub neighbor_mults: Vec<Int>,
    pub neighbors: Vec<usize>,
}

/// Fully decorated resolution: diagram, dual graph, multiplicities
/// `m_α`, shifted discrepancies `d̃_α = d_α + 1` and ratios
/// `e_α = d̃_α/m_α`.
#[derive(Debug, Clone)]
pub struct DecoratedResolution {
    pub diagram: EnriquesDiagram,
    pub graph: DualGraph,
    /// Multiplicity of the pulled-back function per vertex (black = 1).
    pub m: Vec<Int>,
    /// `d̃_α` per white vertex.
    pub dtilde: Vec<Int>,
    /// `e_α = d̃_α / m_α` per white vertex.
    pub e: Vec<Rat>,
    pub ruptures: Vec<Rupture>,
}

/// Build the Enriques diagram of the canonical embedded resolution.
pub fn build_enriques(pairs: &PuiseuxPairs, limits: &Limits) -> Result<EnriquesDiagram> {
    let cd = characteristic_data(pairs);
    let g = pairs.g();
    if cd.w[g - 1] > Int::from(limits.max_weight) {
        return Err(Error::GuardLimit(format!(
            "w_g = {} exceeds the limit {}",
            cd.w[g - 1],
            limits.max_weight
        )));
    }

    let mut stages = Vec::with_capacity(g);
    let mut total: u64 = 0;
    for &(k, n) in pairs.pairs() {
        let cf = continued_fraction(k, n)?;
        total += cf.a.iter().sum::<u64>();
        if total > limits.max_vertices {
            return Err(Error::GuardLimit(format!(
                "vertex count exceeds the limit {}",
                limits.max_vertices
            )));
        }
        stages.push(cf);
    }

    let mut vertices = Vec::new();
    let mut prox: Vec<Vec<usize>> = Vec::new();
    let mut center_mult = Vec::new();
    let mut last_of_stage = Vec::new();
    let mut prev_last: Option<usize> = None;

    for (s, cf) in stages.iter().enumerate() {
        let stage = s + 1;
        let nprime = &cd.nprime[stage];
        let h = cf.h();
        // last vertex of each row; row 1 falls back to the previous
        // stage's last vertex when a_1 = 0
        let mut row_last: Vec<Option<usize>> = vec![None; h + 1];
        for i in 1..=h {
            let a_i = cf.a[i - 1];
            for j in 1..=a_i {
                let idx = vertices.len();
                vertices.push(VertexId::White {
                    stage,
                    row: i,
                    col: j as usize,
                });
                let mut targets = Vec::new();
                if j > 1 {
                    targets.push(idx - 1);
                } else if i == 1 {
                    if let Some(l) = prev_last {
                        targets.push(l);
                    }
                }
                if i >= 2 {
                    if let Some(t) = row_last[i - 1] {
                        targets.push(t);
                    }
                }
                if i >= 3 && j == 1 {
                    if let Some(t) = row_last[i - 2] {
                        targets.push(t);
                    }
                }
                debug_assert!(targets.len() <= 2);
                prox.push(targets);
                center_mult.push(Int::from(cf.r[i]) * nprime);
                row_last[i] = Some(idx);
            }
            if a_i == 0 {
                debug_assert_eq!(i, 1);
                row_last[i] = prev_last;
            }
        }
        let last = row_last[h].expect("last row is nonempty");
        last_of_stage.push(last);
        prev_last = Some(last);
    }

    // black vertex: single arrow to the final exceptional divisor
    prox.push(vec![*last_of_stage.last().unwrap()]);

    Ok(EnriquesDiagram {
        pairs: pairs.clone(),
        cd,
        stages,
        vertices,
        prox,
        center_mult,
        last_of_stage,
    })
}

/// Multiplicity of the pulled-back function along every divisor:
/// `m_α = Σ_{β←α} m_β + center_mult(α)` in blow-up order, `m_{V'} = 1`.
pub fn multiplicities(diagram: &EnriquesDiagram) -> Vec<Int> {
    let mut m: Vec<Int> = Vec::with_capacity(diagram.white_count() + 1);
    for idx in 0..diagram.white_count() {
        let mut v = diagram.center_mult[idx].clone();
        for &t in &diagram.prox[idx] {
            v += &m[t];
        }
        m.push(v);
    }
    m.push(Int::one());
    m
}

/// Shifted discrepancies `d̃_α = d_α + 1` via the per-stage recursion
/// `d̃_{i,j} = j d̃_{i-1} + d̃_{i-2}` with seeds `d̃_0 = 1` and
/// `d̃_{-1}` the previous stage's last value (1 for the first stage).
pub fn discrepancies(diagram: &EnriquesDiagram) -> Vec<Int> {
    let mut dtilde: Vec<Int> = vec![Int::zero(); diagram.white_count()];
    let mut prev_last_value = Int::one();
    let mut idx = 0usize;
    for cf in &diagram.stages {
        let mut d_im1 = prev_last_value.clone(); // d̃_{-1} then shifts
        let mut d_i = Int::one(); // d̃_0
        for i in 1..=cf.h() {
            let a_i = cf.a[i - 1];
            let mut last_in_row = Int::zero();
            for j in 1..=a_i {
                let v = Int::from(j) * &d_i + &d_im1;
                dtilde[idx] = v.clone();
                last_in_row = v;
                idx += 1;
            }
            let row_value = if a_i == 0 { d_im1.clone() } else { last_in_row };
            d_im1 = std::mem::replace(&mut d_i, row_value);
        }
        prev_last_value = d_i;
    }
    dtilde
}

/// Dual graph from the proximity structure: two divisors intersect iff
/// one is proximate to the other and no vertex is proximate to both.
pub fn dual_graph(diagram: &EnriquesDiagram) -> DualGraph {
    let n = diagram.white_count() + 1;
    // a vertex has at most 2 proximity targets, so a blocking vertex's
    // target set is exactly the candidate pair
    let mut blocked: BTreeSet<(usize, usize)> = BTreeSet::new();
    for targets in diagram.prox.iter() {
        if targets.len() == 2 {
            let (a, b) = (targets[0].min(targets[1]), targets[0].max(targets[1]));
            blocked.insert((a, b));
        }
    }
    let mut edges = Vec::new();
    for (src, targets) in diagram.prox.iter().enumerate().take(diagram.white_count()) {
        for &dst in targets {
            let pair = (dst.min(src), dst.max(src));
            if !blocked.contains(&pair) {
                edges.push(pair);
            }
        }
    }
    edges.push((*diagram.last_of_stage.last().unwrap(), diagram.black_index()));
    edges.sort();
    edges.dedup();
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    DualGraph { edges, adj }
}

/// Explicit dual graph Γ(k,n) for a single pair, built independently of
/// the proximity rule. Cross-check only.
pub fn explicit_gamma_g1(cf: &ContinuedFraction) -> Vec<(usize, usize)> {
    // local (row, col) -> blow-up index
    let mut index = Vec::new();
    for i in 1..=cf.h() {
        for j in 1..=cf.a[i - 1] {
            index.push((i, j as usize));
        }
    }
    let pos = |r: usize, c: usize| index.iter().position(|&x| x == (r, c)).unwrap();
    let h = cf.h();
    let mut edges = Vec::new();
    for i in 1..=h {
        let a_i = cf.a[i - 1];
        for j in 1..a_i as usize {
            edges.push((pos(i, j), pos(i, j + 1)));
        }
        if i + 2 <= h && a_i > 0 {
            edges.push((pos(i, a_i as usize), pos(i + 2, 1)));
        }
    }
    edges.push((
        pos(h - 1, cf.a[h - 2] as usize),
        pos(h, cf.a[h - 1] as usize),
    ));
    // black vertex gets the next index
    edges.push((pos(h, cf.a[h - 1] as usize), index.len()));
    let mut edges: Vec<(usize, usize)> = edges
        .into_iter()
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort();
    edges.dedup();
    edges
}

/// Decorate the resolution of a pair list with everything downstream
/// modules need.
pub fn decorate(pairs: &PuiseuxPairs, limits: &Limits) -> Result<DecoratedResolution> {
    let diagram = build_enriques(pairs, limits)?;
    let graph = dual_graph(&diagram);
    let m = multiplicities(&diagram);
    let dtilde = discrepancies(&diagram);
    let e: Vec<Rat> = (0..diagram.white_count())
        .map(|i| rat_big(&dtilde[i], &m[i]))
        .collect();
    let mut ruptures = Vec::new();
    for v in 0..diagram.white_count() {
        if graph.degree(v) >= 3 {
            ruptures.push(Rupture {
                vertex: v,
                stage: diagram.stage_of(v),
                m0: m[v].clone(),
                neighbor_mults: graph.adj[v].iter().map(|&w| m[w].clone()).collect(),
                neighbors: graph.adj[v].clone(),
            });
        }
    }
    Ok(DecoratedResolution {
        diagram,
        graph,
        m,
        dtilde,
        e,
        ruptures,
    })
}

/// Minimum of `e_α` over the white vertices; equals the smallest
/// exponent `(k_1+n_1)/(k_1 n_1···n_g)`.
pub fn log_canonical_threshold(dec: &DecoratedResolution) -> Rat {
    dec.e.iter().min().expect("at least one vertex").clone()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DotKind {
    Enriques,
    Dual,
}

/// Deterministic DOT text for either graph. White vertices are circles
/// labelled with multiplicity and discrepancy, the proper transform is
/// a filled square.
pub fn export_dot(dec: &DecoratedResolution, kind: DotKind) -> String {
    let dia = &dec.diagram;
    let mut out = String::new();
    let (header, connector) = match kind {
        DotKind::Enriques => ("digraph enriques {", " -> "),
        DotKind::Dual => ("graph dual {", " -- "),
    };
    out.push_str(header);
    out.push('\n');
    for idx in 0..dia.white_count() {
        out.push_str(&format!(
            "  v{idx} [shape=circle, label=\"{} m={} d={}\"];\n",
            dia.vertices[idx],
            dec.m[idx],
            &dec.dtilde[idx] - 1,
        ));
    }
    out.push_str(&format!(
        "  v{} [shape=square, style=filled, label=\"V'\"];\n",
        dia.black_index()
    ));
    match kind {
        DotKind::Enriques => {
            for (src, targets) in dia.prox.iter().enumerate() {
                for &dst in targets {
                    out.push_str(&format!("  v{src}{connector}v{dst};\n"));
                }
            }
        }
        DotKind::Dual => {
            for &(a, b) in &dec.graph.edges {
                out.push_str(&format!("  v{a}{connector}v{b};\n"));
            }
        }
    }
    out.push_str("}\n");
    out
}

/// Closed-form and congruence checks on a decorated resolution.
///
/// Per stage: `m̄_i = nP_i + m̄_{-1}Q_i` (odd `i`) or `(m̄_{-1}+k)Q_i`
/// (even), `d̃_i = P_i + d̃_{-1}Q_i`, and at every rupture vertex the
/// closed forms for the neighbour multiplicities together with the
/// intersection-number congruences.
pub fn verify_closed_forms(dec: &DecoratedResolution) -> Vec<Check> {
    let mut checks = Vec::new();
    let dia = &dec.diagram;
    let g = dia.pairs.g();
    let cd = &dia.cd;

    // map (stage, row) -> index of D_{i, a_i}
    let row_last = |stage: usize, row: usize| -> Option<usize> {
        let cf = &dia.stages[stage - 1];
        if cf.a[row - 1] == 0 {
            return None;
        }
        dia.vertices.iter().position(|&v| {
            v == VertexId::White {
                stage,
                row,
                col: cf.a[row - 1] as usize,
            }
        })
    };

    for s in 1..=g {
        let cf = &dia.stages[s - 1];
        let (k, n) = dia.pairs.pairs()[s - 1];
        let nprime = &cd.nprime[s];
        let h = cf.h();

        // divisibility n'_ν | m_α on all stage-ν vertices
        let divisible = (0..dia.white_count())
            .filter(|&v| dia.stage_of(v) == s)
            .all(|v| (&dec.m[v] % nprime).is_zero());
        checks.push(Check::new(
            format!("stage {s}: n' divides every multiplicity"),
            divisible,
            String::new(),
        ));
        if !divisible {
            continue;
        }

        let mbar_minus1 = if s == 1 {
            Int::zero()
        } else {
            &dec.m[dia.last_of_stage[s - 2]] / nprime
        };
        let dt_minus1 = if s == 1 {
            Int::one()
        } else {
            dec.dtilde[dia.last_of_stage[s - 2]].clone()
        };

        // row values m̄_i and d̃_i against the convergent closed forms
        let mut mbar_prev = mbar_minus1.clone();
        let mut dt_prev = dt_minus1.clone();
        for i in 1..=h {
            let (mbar_i, dt_i) = match row_last(s, i) {
                Some(v) => (&dec.m[v] / nprime, dec.dtilde[v].clone()),
                None => (mbar_prev.clone(), dt_prev.clone()),
            };
            let (p, q) = cf.convergent(i as isize);
            let expect_m = if i % 2 == 1 {
                Int::from(n) * p + &mbar_minus1 * q
            } else {
                (&mbar_minus1 + Int::from(k)) * q
            };
            checks.push(Check::new(
                format!("stage {s}: multiplicity closed form at row {i}"),
                mbar_i == expect_m,
                format!("m̄_{i} = {mbar_i}, closed form {expect_m}"),
            ));
            let expect_d = p + &dt_minus1 * q;
            checks.push(Check::new(
                format!("stage {s}: discrepancy closed form at row {i}"),
                dt_i == expect_d,
                format!("d̃_{i} = {dt_i}, closed form {expect_d}"),
            ));
            mbar_prev = mbar_i;
            dt_prev = dt_i;
        }

        // rupture vertex C_0 of this stage
        let c0 = dia.last_of_stage[s - 1];
        let mbar0 = &dec.m[c0] / nprime;
        let w_times_n = (&mbar_minus1 + Int::from(k)) * Int::from(n);
        checks.push(Check::new(
            format!("stage {s}: rupture multiplicity (m̄'_0 = (m̄_-1+k)n)"),
            mbar0 == w_times_n,
            format!("m̄'_0 = {mbar0}"),
        ));
        checks.push(Check::new(
            format!("stage {s}: w recursion (w_ν = m̄_-1 + k)"),
            cd.w[s - 1] == &mbar_minus1 + Int::from(k),
            format!("w = {}, m̄_-1 + k = {}", cd.w[s - 1], &mbar_minus1 + Int::from(k)),
        ));
        // m'_0 = w_ν n_ν ··· n_g
        let full = &cd.w[s - 1] * Int::from(n) * nprime;
        checks.push(Check::new(
            format!("stage {s}: last-vertex multiplicity w_ν n_ν···n_g"),
            dec.m[c0] == full,
            format!("m = {}, expected {full}", dec.m[c0]),
        ));
        // first even vertex carries w_ν n_{ν+1}···n_g
        if let Some(v) = dia.vertices.iter().position(|&x| {
            x == VertexId::White {
                stage: s,
                row: 2,
                col: 1,
            }
        }) {
            let expect = &cd.w[s - 1] * nprime;
            checks.push(Check::new(
                format!("stage {s}: first even vertex multiplicity w_ν n'_ν"),
                dec.m[v] == expect,
                format!("m = {}, expected {expect}", dec.m[v]),
            ));
        }

        // neighbour closed forms: C_1, C_2 and the extra neighbour C_3
        let c1 = if k == 1 {
            dia.last_of_stage[s - 2]
        } else {
            row_last(s, h - 1).expect("row h-1 is nonempty when k > 1")
        };
        let c2 = dia
            .vertices
            .iter()
            .position(|&x| {
                x == VertexId::White {
                    stage: s,
                    row: h,
                    col: cf.a[h - 1] as usize - 1,
                }
            })
            .expect("a_h >= 2");
        let neighbors: Vec<usize> = dec.graph.adj[c0].clone();
        let c3: Vec<usize> = neighbors
            .iter()
            .copied()
            .filter(|&v| v != c1 && v != c2)
            .collect();
        checks.push(Check::new(
            format!("stage {s}: rupture neighbours are C1, C2, C3"),
            neighbors.len() == 3 && c3.len() == 1 && neighbors.contains(&c1) && neighbors.contains(&c2),
            format!("neighbours {neighbors:?}"),
        ));
        let (_, q_hm1) = cf.convergent(h as isize - 1);
        let wk = &mbar_minus1 + Int::from(k);
        let expect_m1 = &wk * q_hm1 - Int::from((h % 2 == 0) as u64);
        let m1 = rat_big(&dec.m[c1], nprime);
        checks.push(Check::new(
            format!("stage {s}: C1 multiplicity closed form"),
            m1 == Rat::from_integer(expect_m1.clone()),
            format!("m̄'_1 = {m1}, expected {expect_m1}"),
        ));
        let expect_m2 = &wk * (Int::from(n) - q_hm1) - Int::from((h % 2 == 1) as u64);
        let m2 = &dec.m[c2] / nprime;
        checks.push(Check::new(
            format!("stage {s}: C2 multiplicity closed form"),
            m2 == expect_m2,
            format!("m̄'_2 = {m2}, expected {expect_m2}"),
        ));
        // congruences (neighbour sums over the raw multiplicities)
        let nbr_sum: Int = neighbors.iter().map(|&v| &dec.m[v]).sum();
        checks.push(Check::new(
            format!("stage {s}: neighbour sum divisible by rupture multiplicity"),
            (&nbr_sum % &dec.m[c0]).is_zero(),
            format!("sum {nbr_sum} mod {}", dec.m[c0]),
        ));
        if c3.len() == 1 {
            let m3 = rat_big(&dec.m[c3[0]], nprime);
            let diff = &m3 - Rat::one();
            let quot = diff / Rat::from_integer(mbar0.clone());
            checks.push(Check::new(
                format!("stage {s}: C3 multiplicity congruent to 1"),
                quot.is_integer(),
                format!("m̄'_3 = {m3} mod m̄'_0 = {mbar0}"),
            ));
        }
    }

    // tree shape and rupture placement
    checks.push(Check::new(
        "dual graph is a tree".to_string(),
        dec.graph.is_tree(),
        String::new(),
    ));
    let deg3: Vec<usize> = (0..dec.graph.vertex_count() - 1)
        .filter(|&v| dec.graph.degree(v) >= 3)
        .collect();
    checks.push(Check::new(
        "rupture vertices are the stage-last vertices".to_string(),
        deg3 == dia.last_of_stage && deg3.iter().all(|&v| dec.graph.degree(v) == 3),
        format!("degree-3 vertices {deg3:?}, stage lasts {:?}", dia.last_of_stage),
    ));

    // minimum of e at the stage-1 last vertex, with value α_1
    let lct = log_canonical_threshold(dec);
    checks.push(Check::new(
        "minimum e equals α_1 at the first rupture".to_string(),
        lct == cd.alpha1 && dec.e[dia.last_of_stage[0]] == cd.alpha1,
        format!("min e = {lct}, α_1 = {}", cd.alpha1),
    ));

    // strict decrease of e over even vertices within a stage
    for s in 1..=g {
        let _cf = &dia.stages[s - 1];
        let last = dia.last_of_stage[s - 1];
        let mut evens: Vec<(usize, usize, usize)> = Vec::new();
        for (v, id) in dia.vertices.iter().enumerate() {
            if let VertexId::White { stage, row, col } = *id {
                if stage == s && (row % 2 == 0 || v == last) {
                    evens.push((row, col, v));
                }
            }
        }
        evens.sort();
        let ordered = evens
            .windows(2)
            .all(|w| dec.e[w[0].2] > dec.e[w[1].2]);
        checks.push(Check::new(
            format!("stage {s}: e strictly decreasing over even vertices"),
            ordered,
            String::new(),
        ));
    }

    checks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::puiseux::parse_pairs;
    use crate::rational::{int, rat};

    fn dec(text: &str) -> DecoratedResolution {
        decorate(&parse_pairs(text).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn enriques_cusp() {
        let d = dec("3,2");
        let dia = &d.diagram;
        assert_eq!(
            dia.vertices,
            vec![
                VertexId::White { stage: 1, row: 1, col: 1 },
                VertexId::White { stage: 1, row: 2, col: 1 },
                VertexId::White { stage: 1, row: 2, col: 2 },
            ]
        );
        assert_eq!(dia.prox[0], Vec::<usize>::new());
        assert_eq!(dia.prox[1], vec![0]);
        assert_eq!(dia.prox[2], vec![1, 0]);
        assert_eq!(dia.prox[3], vec![2]); // black
        assert_eq!(dia.center_mult, vec![int(2), int(1), int(1)]);
        assert_eq!(d.m[..3], [int(2), int(3), int(6)]);
        assert_eq!(d.dtilde, vec![int(2), int(3), int(5)]);
        assert_eq!(d.e, vec![rat(1, 1), rat(1, 1), rat(5, 6)]);
    }

    #[test]
    fn enriques_52() {
        let d = dec("5,2");
        assert_eq!(d.diagram.white_count(), 4);
        assert_eq!(d.m[..4], [int(2), int(4), int(5), int(10)]);
        // dual graph: chain D11 - D12 - D22 - D21 plus black at D22
        assert_eq!(d.graph.edges, vec![(0, 1), (1, 3), (2, 3), (3, 4)]);
    }

    #[test]
    fn enriques_two_pairs() {
        let d = dec("3,2;1,2");
        let dia = &d.diagram;
        assert_eq!(dia.white_count(), 5);
        assert_eq!(
            dia.vertices[3..],
            [
                VertexId::White { stage: 2, row: 2, col: 1 },
                VertexId::White { stage: 2, row: 2, col: 2 },
            ]
        );
        // both stage-2 vertices proximate to L = D(1)_{2,2}
        assert_eq!(dia.prox[3], vec![2]);
        assert_eq!(dia.prox[4], vec![3, 2]);
        assert_eq!(dia.center_mult[3..], [int(1), int(1)]);
        assert_eq!(d.m[..5], [int(4), int(6), int(12), int(13), int(26)]);
    }

    #[test]
    fn dual_graph_cusp() {
        let d = dec("3,2");
        assert_eq!(d.graph.edges, vec![(0, 2), (1, 2), (2, 3)]);
        assert!(d.graph.is_tree());
        assert_eq!(d.graph.degree(2), 3);
    }

    #[test]
    fn dual_graph_two_pairs() {
        let d = dec("3,2;1,2");
        // stage-1 edges minus the black edge, plus the stage-2 chain
        assert_eq!(
            d.graph.edges,
            vec![(0, 2), (1, 2), (2, 4), (3, 4), (4, 5)]
        );
        assert_eq!(d.ruptures.len(), 2);
        assert_eq!(d.ruptures[0].m0, int(12));
        assert_eq!(d.ruptures[0].neighbor_mults, vec![int(4), int(6), int(26)]);
        assert_eq!(d.ruptures[1].m0, int(26));
        assert_eq!(d.ruptures[1].neighbor_mults, vec![int(12), int(13), int(1)]);
    }

    #[test]
    fn explicit_gamma_matches_g1() {
        for (k, n) in [(3u64, 2u64), (5, 2), (7, 2), (7, 3), (8, 3), (11, 4), (31, 12)] {
            let d = dec(&format!("{k},{n}"));
            let cf = continued_fraction(k, n).unwrap();
            assert_eq!(d.graph.edges, explicit_gamma_g1(&cf), "Γ({k},{n})");
        }
    }

    #[test]
    fn lct_values() {
        assert_eq!(log_canonical_threshold(&dec("3,2")), rat(5, 6));
        assert_eq!(log_canonical_threshold(&dec("3,2;1,2")), rat(5, 12));
        assert_eq!(log_canonical_threshold(&dec("5,2")), rat(7, 10));
    }

    #[test]
    fn closed_forms_pass() {
        for text in ["3,2", "5,2", "7,2", "3,2;1,2", "5,3;7,2", "4,3;1,2;1,2"] {
            let d = dec(text);
            for c in verify_closed_forms(&d) {
                assert!(c.pass, "{text}: {} ({})", c.name, c.detail);
            }
        }
    }

    #[test]
    fn guard_limits() {
        let limits = Limits {
            max_vertices: 3,
            max_weight: 1_000_000,
        };
        assert!(matches!(
            build_enriques(&parse_pairs("5,2").unwrap(), &limits),
            Err(Error::GuardLimit(_))
        ));
        let limits = Limits {
            max_vertices: 10_000,
            max_weight: 10,
        };
        assert!(matches!(
            build_enriques(&parse_pairs("3,2;1,2").unwrap(), &limits),
            Err(Error::GuardLimit(_))
        ));
    }

    #[test]
    fn dot_deterministic() {
        let d = dec("3,2");
        let a = export_dot(&d, DotKind::Dual);
        let b = export_dot(&d, DotKind::Dual);
        assert_eq!(a, b);
        assert_eq!(a.matches(" -- ").count(), 3);
        assert!(a.contains("shape=square"));
        let e = export_dot(&d, DotKind::Enriques);
        assert_eq!(e.matches(" -> ").count(), 4);
    }
}
