//! Isomorphism search over finite algebras with named operation tables.
//!
//! Algebras are compared through an [`OpView`]: the order matrix plus lists
//! of unary/binary tables and constants, in a fixed agreed order per algebra
//! kind. The search is backtracking over element images, pruned by per-element
//! invariant profiles (degrees, fixed points, table diagonals); a completed
//! map is verified against every table entry before it is returned.

use crate::error::Error;
use crate::lattice::FiniteLattice;

/// Flat view of an algebra's operations for isomorphism search.
pub struct OpView<'a> {
    pub n: usize,
    /// Row-major order matrix, `leq[a * n + b]` iff `a ≤ b`.
    pub leq: Vec<bool>,
    pub unary: Vec<&'a [usize]>,
    pub binary: Vec<&'a [usize]>,
    pub consts: Vec<usize>,
}

/// Default cap on the carrier size for isomorphism search.
pub const DEFAULT_ISO_LIMIT: usize = 32;

impl<'a> OpView<'a> {
    pub fn of_lattice(l: &'a FiniteLattice) -> OpView<'a> {
        let n = l.len();
        let mut leq = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                leq[a * n + b] = l.le(a, b);
            }
        }
        OpView {
            n,
            leq,
            unary: Vec::new(),
            binary: vec![l.meet_table(), l.join_table()],
            consts: vec![l.bot(), l.top()],
        }
    }

    fn profile(&self, x: usize) -> Vec<u32> {
        let n = self.n;
        let mut p = Vec::new();
        p.push((0..n).filter(|&y| self.leq[y * n + x]).count() as u32);
        p.push((0..n).filter(|&y| self.leq[x * n + y]).count() as u32);
        for u in &self.unary {
            p.push((u[x] == x) as u32);
            p.push((0..n).filter(|&y| u[y] == x).count() as u32);
        }
        for f in &self.binary {
            p.push((f[x * n + x] == x) as u32);
            p.push((0..n).filter(|&y| f[x * n + y] == x).count() as u32);
            p.push((0..n).filter(|&y| f[y * n + x] == x).count() as u32);
        }
        p
    }
}

/// Searches for an isomorphism from `a` to `b`, mapping `a`-indices to
/// `b`-indices. `None` means the algebras are not isomorphic.
pub fn find_isomorphism(a: &OpView, b: &OpView) -> Option<Vec<usize>> {
    find_isomorphism_capped(a, b, DEFAULT_ISO_LIMIT).expect("caller respects the size cap")
}

/// As [`find_isomorphism`] with a configurable size cap.
pub fn find_isomorphism_capped(
    a: &OpView,
    b: &OpView,
    limit: usize,
) -> Result<Option<Vec<usize>>, Error> {
    if a.n > limit || b.n > limit {
        return Err(Error::IsoSizeLimit { limit, n: a.n.max(b.n) });
    }
    if a.n != b.n
        || a.unary.len() != b.unary.len()
        || a.binary.len() != b.binary.len()
        || a.consts.len() != b.consts.len()
    {
        return Ok(None);
    }
    let n = a.n;
    let pa: Vec<Vec<u32>> = (0..n).map(|x| a.profile(x)).collect();
    let pb: Vec<Vec<u32>> = (0..n).map(|x| b.profile(x)).collect();
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return Ok(None);
    }

    let mut map: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    // Constants are forced.
    for (&ca, &cb) in a.consts.iter().zip(&b.consts) {
        match map[ca] {
            Some(prev) if prev != cb => return Ok(None),
            Some(_) => {}
            None => {
                if used[cb] || pa[ca] != pb[cb] {
                    return Ok(None);
                }
                map[ca] = Some(cb);
                used[cb] = true;
            }
        }
    }
    // Assign rarest profiles first.
    let mut order: Vec<usize> = (0..n).filter(|&x| map[x].is_none()).collect();
    order.sort_by_key(|&x| {
        let freq = pa.iter().filter(|p| **p == pa[x]).count();
        (freq, x)
    });

    fn consistent(a: &OpView, b: &OpView, map: &[Option<usize>], x: usize, t: usize) -> bool {
        let n = a.n;
        for (y, my) in map.iter().enumerate() {
            let Some(my) = *my else { continue };
            if a.leq[x * n + y] != b.leq[t * n + my] || a.leq[y * n + x] != b.leq[my * n + t] {
                return false;
            }
        }
        for (ua, ub) in a.unary.iter().zip(&b.unary) {
            if let Some(m) = map[ua[x]] {
                if ub[t] != m {
                    return false;
                }
            }
            for y in 0..n {
                if ua[y] == x {
                    if let Some(my) = map[y] {
                        if ub[my] != t {
                            return false;
                        }
                    }
                }
            }
        }
        for (fa, fb) in a.binary.iter().zip(&b.binary) {
            for y in 0..n {
                let Some(my) = map[y] else { continue };
                if let Some(m) = map[fa[x * n + y]] {
                    if fb[t * n + my] != m {
                        return false;
                    }
                }
                if let Some(m) = map[fa[y * n + x]] {
                    if fb[my * n + t] != m {
                        return false;
                    }
                }
            }
            if let Some(m) = map[fa[x * n + x]] {
                if fb[t * n + t] != m {
                    return false;
                }
            }
        }
        true
    }

    fn verify(a: &OpView, b: &OpView, map: &[usize]) -> bool {
        let n = a.n;
        for x in 0..n {
            for y in 0..n {
                if a.leq[x * n + y] != b.leq[map[x] * n + map[y]] {
                    return false;
                }
            }
        }
        for (ua, ub) in a.unary.iter().zip(&b.unary) {
            if (0..n).any(|x| map[ua[x]] != ub[map[x]]) {
                return false;
            }
        }
        for (fa, fb) in a.binary.iter().zip(&b.binary) {
            for x in 0..n {
                for y in 0..n {
                    if map[fa[x * n + y]] != fb[map[x] * n + map[y]] {
                        return false;
                    }
                }
            }
        }
        a.consts.iter().zip(&b.consts).all(|(&ca, &cb)| map[ca] == cb)
    }

    // The backtracking state splits into what recursion never touches and
    // the (map, used) pair it rewinds.
    struct Search<'v> {
        a: &'v OpView<'v>,
        b: &'v OpView<'v>,
        pa: &'v [Vec<u32>],
        pb: &'v [Vec<u32>],
        order: &'v [usize],
    }

    impl Search<'_> {
        fn go(&self, pos: usize, map: &mut Vec<Option<usize>>, used: &mut Vec<bool>) -> bool {
            if pos == self.order.len() {
                return true;
            }
            let x = self.order[pos];
            for t in 0..self.b.n {
                if used[t] || self.pa[x] != self.pb[t] || !consistent(self.a, self.b, map, x, t) {
                    continue;
                }
                map[x] = Some(t);
                used[t] = true;
                if self.go(pos + 1, map, used) {
                    return true;
                }
                map[x] = None;
                used[t] = false;
            }
            false
        }
    }

    let search = Search { a, b, pa: &pa, pb: &pb, order: &order };
    if !search.go(0, &mut map, &mut used) {
        return Ok(None);
    }
    let done: Vec<usize> = map.into_iter().map(|m| m.unwrap()).collect();
    if !verify(a, b, &done) {
        return Err(Error::internal("isomorphism search returned an unverified map"));
    }
    Ok(Some(done))
}

/// Lattice isomorphism (order, meet, join, bounds).
pub fn lattice_isomorphism(a: &FiniteLattice, b: &FiniteLattice) -> Option<Vec<usize>> {
    find_isomorphism(&OpView::of_lattice(a), &OpView::of_lattice(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn chain_is_isomorphic_up_to_relabeling() {
        let a = catalog::lattice(&["0", "1", "2"], &[("0", "1"), ("1", "2")]);
        let b = catalog::lattice(&["x", "z", "y"], &[("x", "z"), ("z", "y")]);
        assert_eq!(lattice_isomorphism(&a, &b), Some(vec![0, 1, 2]));
    }

    #[test]
    fn chain_and_v_are_not_isomorphic() {
        let a = catalog::lattice(&["0", "1", "2", "3"], &[("0", "1"), ("1", "2"), ("2", "3")]);
        let b = catalog::lattice(
            &["0", "p", "q", "1"],
            &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
        );
        assert_eq!(lattice_isomorphism(&a, &b), None);
    }

    #[test]
    fn permuted_boolean_cube_is_found() {
        let b3 = catalog::boolean_heyting(3);
        let names: Vec<&str> = ["⊥", "C", "B", "BC", "A", "AC", "AB", "⊤"].to_vec();
        // Same cube with atoms listed in a different order.
        let permuted = catalog::lattice(
            &names,
            &[
                ("⊥", "C"),
                ("⊥", "B"),
                ("⊥", "A"),
                ("C", "BC"),
                ("C", "AC"),
                ("B", "BC"),
                ("B", "AB"),
                ("A", "AC"),
                ("A", "AB"),
                ("BC", "⊤"),
                ("AC", "⊤"),
                ("AB", "⊤"),
            ],
        );
        let m = lattice_isomorphism(b3.lat(), &permuted).unwrap();
        for a in 0..8 {
            for b in 0..8 {
                assert_eq!(m[b3.lat().meet(a, b)], permuted.meet(m[a], m[b]));
            }
        }
    }

    #[test]
    fn size_cap_is_enforced() {
        let a = catalog::lattice(&["0", "1"], &[("0", "1")]);
        let err = find_isomorphism_capped(&OpView::of_lattice(&a), &OpView::of_lattice(&a), 1);
        assert!(matches!(err, Err(Error::IsoSizeLimit { .. })));
    }
}
