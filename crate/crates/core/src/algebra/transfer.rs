use num_bigint::BigUint;
use num_traits::Zero;

/// Transfer matrix of an automaton: `entries[i][j]` is the number of letters
/// leading from state `i` to state `j`. Stored row-wise and sparse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountMatrix {
    rows: Vec<Vec<(usize, BigUint)>>,
    initial: Vec<BigUint>,
    accepting: Vec<BigUint>,
}

impl CountMatrix {
    /// # Panics
    /// If the dimensions of the matrix and the two vectors disagree.
    pub fn new(dense: Vec<Vec<BigUint>>, initial: Vec<BigUint>, accepting: Vec<BigUint>) -> Self {
        let dim = dense.len();
        assert!(dense.iter().all(|r| r.len() == dim), "matrix must be square");
        assert_eq!(initial.len(), dim, "initial vector dimension");
        assert_eq!(accepting.len(), dim, "accepting vector dimension");
        let rows = dense
            .into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect())
            .collect();
        CountMatrix { rows, initial, accepting }
    }

    pub fn from_u64(dense: &[Vec<u64>], initial: &[u64], accepting: &[u64]) -> Self {
        let big = |v: &[u64]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        Self::new(dense.iter().map(|r| big(r)).collect(), big(initial), big(accepting))
    }

    /// Sparse constructor: `edges` lists `(from, to)` pairs, repeated for multiplicity.
    pub fn from_edges(dim: usize, edges: impl IntoIterator<Item = (usize, usize)>, initial: usize, accepting: &[bool]) -> Self {
        let mut dense = vec![vec![0u64; dim]; dim];
        for (i, j) in edges {
            dense[i][j] += 1;
        }
        let mut init = vec![0u64; dim];
        init[initial] = 1;
        let acc: Vec<u64> = accepting.iter().map(|&a| a as u64).collect();
        Self::from_u64(&dense, &init, &acc)
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// One step of `v -> v * M`.
    pub fn step(&self, v: &[BigUint]) -> Vec<BigUint> {
        let mut next = vec![BigUint::zero(); self.dim()];
        for (i, row) in self.rows.iter().enumerate() {
            if v[i].is_zero() {
                continue;
            }
            for (j, m) in row {
                next[*j] += &v[i] * m;
            }
        }
        next
    }

    pub fn initial(&self) -> &[BigUint] {
        &self.initial
    }

    pub fn accepting(&self) -> &[BigUint] {
        &self.accepting
    }
}

/// Number of accepted paths of each length `0..=n`: `initial * M^k * accepting`.
pub fn transfer_count(m: &CountMatrix, n: usize) -> Vec<BigUint> {
    let mut v = m.initial.clone();
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        out.push(v.iter().zip(&m.accepting).map(|(a, b)| a * b).sum());
        if k < n {
            v = m.step(&v);
        }
    }
    out
}
