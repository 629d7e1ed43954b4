//! Branch and bound over edge inclusion for a spanning even subgraph with all
//! degrees at least 2.
//!
//! Even edge sets are parametrized as `x = Bᵀy` over the cycle basis `B`, so
//! fixing `x_e = b` is one linear equation on `y`. The fixed equations are kept
//! in echelon form; an edge whose basis column lies in their row space has a
//! forced value. A vertex whose incident edges are all forced to 0 cannot be
//! covered and the branch is cut.

use sha2::{Digest, Sha256};

use super::{cycle_space_basis, structural_no, EvenSubgraphWitness, EvenVerdict, NoCertificate};
use crate::bits::BitVec;
use crate::graph::{EdgeSubset, Graph};

#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Nodes explored before giving up with [`EvenVerdict::Undecided`].
    pub node_limit: Option<u64>,
}

pub fn spanning_even_no_isolated(g: &Graph) -> EvenVerdict {
    spanning_even_with(g, &SearchOptions::default())
}

pub fn spanning_even_with(g: &Graph, opts: &SearchOptions) -> EvenVerdict {
    if let Some(certificate) = structural_no(g) {
        return EvenVerdict::No { certificate };
    }
    let basis = cycle_space_basis(g);
    let d = basis.dimension();
    let mut cols = vec![BitVec::zeros(d); g.m()];
    for (i, b) in basis.basis.iter().enumerate() {
        for e in b.iter() {
            cols[e].set(i, true);
        }
    }
    let mut s = EvenSearch { g, cols, rows: Vec::new(), nodes: 0, node_limit: opts.node_limit, trace: Sha256::new() };
    match s.dfs() {
        Outcome::Found(y) => {
            let mut edges = EdgeSubset::from_edges(g.m(), []);
            for i in y.iter_ones() {
                edges.0.xor_assign(&basis.basis[i].0);
            }
            let witness = EvenSubgraphWitness { edges };
            assert!(witness.is_spanning_without_isolated(g), "search produced an invalid witness");
            EvenVerdict::Yes { witness }
        }
        Outcome::Exhausted => {
            let digest = hex::encode(s.trace.finalize());
            EvenVerdict::No { certificate: NoCertificate::Exhaustive { nodes: s.nodes, digest } }
        }
        Outcome::Aborted => EvenVerdict::Undecided { nodes: s.nodes },
    }
}

enum Outcome {
    Found(BitVec),
    Exhausted,
    Aborted,
}

struct Row {
    pivot: usize,
    bits: BitVec,
    rhs: bool,
}

struct EvenSearch<'a> {
    g: &'a Graph,
    cols: Vec<BitVec>,
    rows: Vec<Row>,
    nodes: u64,
    node_limit: Option<u64>,
    trace: Sha256,
}

impl EvenSearch<'_> {
    fn reduce(&self, mut v: BitVec, mut rhs: bool) -> (BitVec, bool) {
        for r in &self.rows {
            if v.get(r.pivot) {
                v.xor_assign(&r.bits);
                rhs ^= r.rhs;
            }
        }
        (v, rhs)
    }

    /// `Some(b)` when the current equations force `x_e = b`.
    fn forced(&self, e: usize) -> Option<bool> {
        let (v, rhs) = self.reduce(self.cols[e].clone(), false);
        v.is_zero().then_some(rhs)
    }

    fn push(&mut self, e: usize, value: bool) {
        let (bits, rhs) = self.reduce(self.cols[e].clone(), value);
        let pivot = bits.iter_ones().next().expect("branching edge is not yet determined");
        self.rows.push(Row { pivot, bits, rhs });
    }

    fn solve(&self, d: usize) -> BitVec {
        let mut y = BitVec::zeros(d);
        for r in self.rows.iter().rev() {
            let mut val = r.rhs;
            for j in r.bits.iter_ones() {
                if j != r.pivot && y.get(j) {
                    val = !val;
                }
            }
            y.set(r.pivot, val);
        }
        y
    }

    fn dfs(&mut self) -> Outcome {
        self.nodes += 1;
        if self.node_limit.is_some_and(|l| self.nodes > l) {
            return Outcome::Aborted;
        }
        let status: Vec<Option<bool>> = (0..self.g.m()).map(|e| self.forced(e)).collect();

        // uncovered vertex with the fewest undetermined edges
        let mut pick: Option<(usize, usize)> = None;
        for v in 0..self.g.n() {
            let inc = self.g.incident(v);
            if inc.iter().any(|&(_, e)| status[e] == Some(true)) {
                continue;
            }
            let free = inc.iter().filter(|&&(_, e)| status[e].is_none()).count();
            if free == 0 {
                return Outcome::Exhausted;
            }
            if pick.is_none_or(|(_, f)| free < f) {
                pick = Some((v, free));
            }
        }
        let Some((v, _)) = pick else {
            return Outcome::Found(self.solve(self.cols.first().map_or(0, BitVec::len)));
        };
        let e = self.g.incident(v).iter().map(|&(_, e)| e).find(|&e| status[e].is_none()).unwrap();

        for value in [true, false] {
            self.trace.update((e as u32).to_le_bytes());
            self.trace.update([value as u8]);
            self.push(e, value);
            let out = self.dfs();
            self.rows.pop();
            match out {
                Outcome::Exhausted => {}
                other => return other,
            }
        }
        self.trace.update([0xff]);
        Outcome::Exhausted
    }
}
