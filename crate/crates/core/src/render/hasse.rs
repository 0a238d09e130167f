//! Transitive reduction of a finite partial order, for diagram edges.

/// Hasse arcs of the partial order given by its closure predicate:
/// `(q, p)` is an arc when `q` lies immediately below `p` (q in cl(p), q != p,
/// with nothing strictly between). Arcs are sorted.
pub fn hasse_arcs(n: usize, in_closure: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let mut arcs = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if q == p || !in_closure(p, q) {
                continue;
            }
            let covered = (0..n).any(|r| r != p && r != q && in_closure(p, r) && in_closure(r, q));
            if !covered {
                arcs.push((q, p));
            }
        }
    }
    arcs.sort_unstable();
    arcs
}

/// Reflexive-transitive closure of a set of arcs `(q, p)` (q below p):
/// `closed[p][q]` says q lies in the closure of p.
pub fn close_arcs(n: usize, arcs: &[(usize, usize)]) -> Vec<Vec<bool>> {
    let mut closed = vec![vec![false; n]; n];
    for (i, row) in closed.iter_mut().enumerate() {
        row[i] = true;
    }
    for &(q, p) in arcs {
        closed[p][q] = true;
    }
    #[allow(clippy::needless_range_loop)]
    for mid in 0..n {
        for a in 0..n {
            if closed[a][mid] {
                for b in 0..n {
                    if closed[mid][b] {
                        closed[a][b] = true;
                    }
                }
            }
        }
    }
    closed
}
