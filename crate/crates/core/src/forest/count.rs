//! Exact spanning-forest counting through the matrix-tree theorem.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::ForestCount;
use crate::graph::Graph;

/// Components larger than this are not counted exactly by [`forest_count`]; a
/// certified lower bound is reported instead.
pub const EXACT_COUNT_VERTICES: usize = 400;

/// Number of maximal forests of `g`: the product over components of any cofactor of
/// the component Laplacian, computed with fraction-free elimination.
pub fn count_maximal_forests(g: &Graph) -> BigUint {
    g.components()
        .iter()
        .map(|block| spanning_tree_count(g, block))
        .product()
}

/// Exact count when every component is within [`EXACT_COUNT_VERTICES`], otherwise a
/// lower bound that multiplies exact counts of small components with
/// [`spanning_tree_lower_bound`] for the large ones.
pub fn forest_count(g: &Graph) -> ForestCount {
    let mut exact = true;
    let mut total = BigUint::one();
    for block in g.components() {
        if block.len() > EXACT_COUNT_VERTICES {
            exact = false;
            total *= spanning_tree_lower_bound(g, &block);
        } else {
            total *= spanning_tree_count(g, &block);
        }
    }
    if exact {
        ForestCount::Exact(total)
    } else {
        ForestCount::AtLeast(total)
    }
}

/// Product over components of [`spanning_tree_lower_bound`].
pub fn forest_count_lower_bound(g: &Graph) -> BigUint {
    g.components()
        .iter()
        .map(|block| spanning_tree_lower_bound(g, block))
        .product()
}

/// Whether `g` has more than `threshold` maximal forests. The cheap lower bound is
/// tried first; the exact count is only computed when the bound is inconclusive.
pub fn forest_count_exceeds(g: &Graph, threshold: &BigUint) -> bool {
    forest_count_lower_bound(g) > *threshold || count_maximal_forests(g) > *threshold
}

/// Spanning trees of the component induced by `block`.
pub(crate) fn spanning_tree_count(g: &Graph, block: &[usize]) -> BigUint {
    let k = block.len();
    if k <= 1 {
        return BigUint::one();
    }
    let mut local = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in block.iter().enumerate() {
        local[v] = i;
    }
    // reduced Laplacian: drop the row and column of block[0]
    let size = k - 1;
    let mut m = vec![vec![0i128; size]; size];
    for (i, &v) in block.iter().enumerate().skip(1) {
        m[i - 1][i - 1] = g.degree(v) as i128;
        for &(w, _) in g.neighbors(v) {
            let j = local[w];
            if j > 0 {
                m[i - 1][j - 1] -= 1;
            }
        }
    }
    match bareiss_i128(m.clone()) {
        Some(d) => BigUint::try_from(d).expect("reduced Laplacian determinant is positive"),
        None => {
            let big = m
                .into_iter()
                .map(|row| row.into_iter().map(BigInt::from).collect())
                .collect();
            bareiss_big(big).to_biguint().expect("reduced Laplacian determinant is positive")
        }
    }
}

/// Fraction-free elimination without pivoting. The reduced Laplacian of a connected
/// graph is positive definite, so every leading minor (and pivot) is non-zero.
/// Returns `None` on overflow.
#[allow(clippy::needless_range_loop)]
fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    let mut prev: i128 = 1;
    for k in 0..n.saturating_sub(1) {
        let pivot = m[k][k];
        debug_assert!(pivot != 0);
        for i in k + 1..n {
            let lead = m[i][k];
            for j in k + 1..n {
                let a = m[i][j].checked_mul(pivot)?;
                let b = lead.checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
            m[i][k] = 0;
        }
        prev = pivot;
    }
    Some(if n == 0 { 1 } else { m[n - 1][n - 1] })
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            let lead = std::mem::take(&mut m[i][k]);
            let (head, tail) = m.split_at_mut(i);
            let row_k = &head[k];
            let row_i = &mut tail[0];
            for j in k + 1..n {
                let mut v = &row_i[j] * &pivot;
                if !lead.is_zero() && !row_k[j].is_zero() {
                    v -= &lead * &row_k[j];
                }
                row_i[j] = v / &prev;
            }
        }
        prev = pivot;
    }
    if n == 0 {
        BigInt::one()
    } else {
        m[n - 1][n - 1].clone()
    }
}

/// Certified lower bound on the spanning trees of a connected component: a BFS tree
/// `T` plus every distinct single exchange `T - f + e`, one for each non-tree edge `e`
/// and each tree edge `f` on its fundamental cycle.
pub fn spanning_tree_lower_bound(g: &Graph, block: &[usize]) -> BigUint {
    let n = g.vertex_count();
    let mut depth = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut tree_edge = vec![false; g.edge_count()];
    let Some(&root) = block.first() else {
        return BigUint::one();
    };
    depth[root] = 0;
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &(w, e) in g.neighbors(u) {
            if depth[w] == usize::MAX {
                depth[w] = depth[u] + 1;
                parent[w] = u;
                tree_edge[e] = true;
                queue.push_back(w);
            }
        }
    }
    let mut exchanges = BigUint::one();
    for &v in block {
        for &(w, e) in g.neighbors(v) {
            if v < w && !tree_edge[e] {
                let (mut a, mut b) = (v, w);
                let mut path_len = 0u64;
                while a != b {
                    if depth[a] >= depth[b] {
                        a = parent[a];
                    } else {
                        b = parent[b];
                    }
                    path_len += 1;
                }
                exchanges += path_len;
            }
        }
    }
    exchanges
}
