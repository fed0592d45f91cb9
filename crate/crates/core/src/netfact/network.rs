use num_traits::{One, Zero};

use crate::error::{Result, TpError};
use crate::matrix::IndexSet;
use crate::rational::Rational;

use super::FactorizationParams;

/// Largest order accepted by path-family enumeration.
pub const NETWORK_DIM_GUARD: usize = 7;

/// Directed edge from `(layer, from)` to `(layer + 1, to)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub layer: usize,
    pub from: usize,
    pub to: usize,
    pub weight: Rational,
}

/// Layered planar network: sources at layer 0, sinks at the last layer, one
/// layer per elementary factor. Horizontal edges carry weight 1 except in the
/// diagonal-factor layer, where row `r` carries `d_r`. Zero-weight diagonal
/// edges are omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarNetwork {
    pub n: usize,
    pub layers: usize,
    pub edges: Vec<Edge>,
}

impl PlanarNetwork {
    pub fn from_params(params: &FactorizationParams) -> Result<Self> {
        params.validate()?;
        let n = params.n;
        let mut edges = Vec::new();
        let mut layer = 0;
        let horizontal = |layer: usize, edges: &mut Vec<Edge>| {
            for r in 1..=n {
                edges.push(Edge { layer, from: r, to: r, weight: Rational::one() });
            }
        };
        // L_i(l): a path may step from row i down to row i-1
        for (i, v) in &params.lowers {
            horizontal(layer, &mut edges);
            if !v.is_zero() {
                edges.push(Edge { layer, from: *i, to: i - 1, weight: v.clone() });
            }
            layer += 1;
        }
        for (r, d) in params.diag.iter().enumerate() {
            edges.push(Edge { layer, from: r + 1, to: r + 1, weight: d.clone() });
        }
        layer += 1;
        // uppers are listed for U_2(u_1) at the far right, so walk them backwards
        for (j, v) in params.uppers.iter().rev() {
            horizontal(layer, &mut edges);
            if !v.is_zero() {
                edges.push(Edge { layer, from: j - 1, to: *j, weight: v.clone() });
            }
            layer += 1;
        }
        Ok(PlanarNetwork { n, layers: layer, edges })
    }

    /// Outgoing edges per `(layer, row)`, rows 1-based.
    fn adjacency(&self) -> Vec<Vec<Vec<(usize, &Rational)>>> {
        let mut adj = vec![vec![Vec::new(); self.n + 1]; self.layers];
        for e in &self.edges {
            adj[e.layer][e.from].push((e.to, &e.weight));
        }
        adj
    }
}

/// Weighted sum over vertex-disjoint path families, plus how many families contributed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathSum {
    pub value: Rational,
    pub families: u64,
}

struct Search<'a> {
    adj: Vec<Vec<Vec<(usize, &'a Rational)>>>,
    targets: Vec<usize>,
    total: Rational,
    families: u64,
}

impl Search<'_> {
    fn layer(&mut self, t: usize, pos: &[usize], weight: &Rational) {
        if t == self.adj.len() {
            if pos == self.targets.as_slice() {
                self.total += weight;
                self.families += 1;
            }
            return;
        }
        let mut next = vec![0usize; pos.len()];
        self.step(t, pos, 0, &mut next, weight);
    }

    /// Chooses an outgoing edge for path `p` in layer `t`, keeping landing rows distinct.
    fn step(&mut self, t: usize, pos: &[usize], p: usize, next: &mut Vec<usize>, weight: &Rational) {
        if p == pos.len() {
            let w = weight.clone();
            let snapshot = next.clone();
            self.layer(t + 1, &snapshot, &w);
            return;
        }
        let outs: Vec<(usize, Rational)> = self.adj[t][pos[p]].iter().map(|(to, w)| (*to, (*w).clone())).collect();
        for (to, w) in outs {
            if next[..p].contains(&to) {
                continue;
            }
            next[p] = to;
            let nw = weight * &w;
            self.step(t, pos, p + 1, next, &nw);
        }
    }
}

/// Lindström path sum: the `(rows, cols)` minor of the network's matrix as
/// a sum over families of vertex-disjoint paths joining `rows[r]` to `cols[r]`.
pub fn lindstrom_path_sum(net: &PlanarNetwork, rows: &IndexSet, cols: &IndexSet) -> Result<PathSum> {
    if net.n > NETWORK_DIM_GUARD {
        return Err(TpError::TooLarge(format!(
            "path enumeration is limited to order {NETWORK_DIM_GUARD}, got {}",
            net.n
        )));
    }
    if rows.len() != cols.len() {
        return Err(TpError::Shape(format!(
            "row set has {} indices, column set has {}",
            rows.len(),
            cols.len()
        )));
    }
    if rows.bound() > net.n || cols.bound() > net.n {
        return Err(TpError::InvalidIndex(format!("index sets must lie in 1..={}", net.n)));
    }
    if rows.is_empty() {
        return Ok(PathSum { value: Rational::one(), families: 1 });
    }
    let mut search = Search {
        adj: net.adjacency(),
        targets: cols.indices().to_vec(),
        total: Rational::zero(),
        families: 0,
    };
    search.layer(0, rows.indices(), &Rational::one());
    Ok(PathSum { value: search.total, families: search.families })
}

pub fn lindstrom_minor(net: &PlanarNetwork, rows: &IndexSet, cols: &IndexSet) -> Result<Rational> {
    lindstrom_path_sum(net, rows, cols).map(|s| s.value)
}
