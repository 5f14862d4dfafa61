//! Finite partial orders over named elements.
//!
//! Elements are dense indices into a name table; the order is a total
//! `n × n` boolean matrix. Construction is from an explicit matrix or from a
//! cover list (the matrix is its reflexive-transitive closure, built only
//! after cycle detection so closure cannot mask a broken input).

use crate::error::Error;
use crate::set::{ElemSet, MAX_ELEMENTS};

#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    /// Row-major: `leq[a * n + b]` iff `a ≤ b`.
    leq: Vec<bool>,
}

impl FinitePoset {
    /// Builds from a reflexive-transitive-antisymmetric matrix, validating all
    /// three axioms.
    pub fn from_leq(names: Vec<String>, leq: Vec<bool>) -> Result<FinitePoset, Error> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements { n });
        }
        assert_eq!(leq.len(), n * n, "order matrix must be n*n");
        check_unique(&names)?;
        let p = FinitePoset { names, leq };
        for a in 0..n {
            if !p.le(a, a) {
                return Err(Error::internal(format!("order not reflexive at {:?}", p.name(a))));
            }
            for b in 0..n {
                if a != b && p.le(a, b) && p.le(b, a) {
                    return Err(Error::CoverCycle { name: p.name(a).to_string() });
                }
                for c in 0..n {
                    if p.le(a, b) && p.le(b, c) && !p.le(a, c) {
                        return Err(Error::internal(format!(
                            "order not transitive at {:?} ≤ {:?} ≤ {:?}",
                            p.name(a),
                            p.name(b),
                            p.name(c)
                        )));
                    }
                }
            }
        }
        Ok(p)
    }

    /// Builds from a list of cover pairs `(lower, upper)` given by name.
    ///
    /// Cycles in the cover digraph are detected before taking the closure.
    pub fn from_covers(names: Vec<String>, covers: &[(String, String)]) -> Result<FinitePoset, Error> {
        let n = names.len();
        if n > MAX_ELEMENTS {
            return Err(Error::TooManyElements { n });
        }
        check_unique(&names)?;
        let index = |s: &str| -> Result<usize, Error> {
            names
                .iter()
                .position(|t| t == s)
                .ok_or_else(|| Error::UnknownName { name: s.to_string() })
        };
        let mut edge = vec![false; n * n];
        for (lo, hi) in covers {
            edge[index(lo)? * n + index(hi)?] = true;
        }
        // Kahn's algorithm: leftovers witness a cycle.
        let mut indeg = vec![0usize; n];
        for a in 0..n {
            for b in 0..n {
                if edge[a * n + b] {
                    indeg[b] += 1;
                }
            }
        }
        let mut queue: Vec<usize> = (0..n).filter(|&b| indeg[b] == 0).collect();
        let mut seen = 0;
        while let Some(a) = queue.pop() {
            seen += 1;
            for b in 0..n {
                if edge[a * n + b] {
                    indeg[b] -= 1;
                    if indeg[b] == 0 {
                        queue.push(b);
                    }
                }
            }
        }
        if seen < n {
            let guilty = (0..n).find(|&b| indeg[b] > 0).unwrap();
            return Err(Error::CoverCycle { name: names[guilty].clone() });
        }
        // Reflexive-transitive closure (Warshall).
        let mut leq = vec![false; n * n];
        for a in 0..n {
            leq[a * n + a] = true;
        }
        for a in 0..n {
            for b in 0..n {
                if edge[a * n + b] {
                    leq[a * n + b] = true;
                }
            }
        }
        for k in 0..n {
            for a in 0..n {
                if leq[a * n + k] {
                    for b in 0..n {
                        if leq[k * n + b] {
                            leq[a * n + b] = true;
                        }
                    }
                }
            }
        }
        Ok(FinitePoset { names, leq })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|t| t == name)
    }

    #[inline]
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.len() + b]
    }

    /// Strict order `a < b`.
    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.le(a, b)
    }

    /// `{ y : x ≤ y for some x ∈ s }`.
    pub fn upset(&self, s: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in s.iter() {
            for y in 0..self.len() {
                if self.le(x, y) {
                    out.insert(y);
                }
            }
        }
        out
    }

    /// `{ y : y ≤ x for some x ∈ s }`.
    pub fn downset(&self, s: ElemSet) -> ElemSet {
        let mut out = ElemSet::EMPTY;
        for x in s.iter() {
            for y in 0..self.len() {
                if self.le(y, x) {
                    out.insert(y);
                }
            }
        }
        out
    }

    /// Principal up-set `↑a`.
    pub fn up(&self, a: usize) -> ElemSet {
        self.upset(ElemSet::singleton(a))
    }

    /// Principal down-set `↓a`.
    pub fn down(&self, a: usize) -> ElemSet {
        self.downset(ElemSet::singleton(a))
    }

    /// Maximal elements of a subset: members with no strict upper bound in it.
    pub fn max_elements(&self, s: ElemSet) -> ElemSet {
        s.iter().filter(|&x| !s.iter().any(|y| self.lt(x, y))).collect()
    }

    /// Maximal elements of the whole poset.
    pub fn maximals(&self) -> ElemSet {
        self.max_elements(ElemSet::full(self.len()))
    }

    pub fn is_upset(&self, s: ElemSet) -> bool {
        self.upset(s) == s
    }

    pub fn is_downset(&self, s: ElemSet) -> bool {
        self.downset(s) == s
    }

    /// All up-sets, ascending by (size, mask). Exponential; spectra are small.
    pub fn all_upsets(&self) -> Vec<ElemSet> {
        let mut v: Vec<ElemSet> = crate::set::all_subsets(self.len())
            .filter(|&s| self.is_upset(s))
            .collect();
        v.sort_by_key(|s| (s.len(), *s));
        v
    }

    /// All down-sets, ascending by (size, mask).
    pub fn all_downsets(&self) -> Vec<ElemSet> {
        let mut v: Vec<ElemSet> = crate::set::all_subsets(self.len())
            .filter(|&s| self.is_downset(s))
            .collect();
        v.sort_by_key(|s| (s.len(), *s));
        v
    }

    /// Cover pairs `(lower, upper)`: the transitive reduction of the order.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if self.lt(a, b) && !(0..n).any(|c| self.lt(a, c) && self.lt(c, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Renders a subset as its member names in index order.
    pub fn render_set(&self, s: ElemSet) -> Vec<String> {
        s.iter().map(|i| self.name(i).to_string()).collect()
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinitePoset({:?})", self.names)
    }
}

fn check_unique(names: &[String]) -> Result<(), Error> {
    for (i, a) in names.iter().enumerate() {
        if names[..i].contains(a) {
            return Err(Error::DuplicateName { name: a.clone() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain(n: usize) -> FinitePoset {
        let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
        let covers: Vec<(String, String)> = (0..n - 1)
            .map(|i| (format!("c{i}"), format!("c{}", i + 1)))
            .collect();
        FinitePoset::from_covers(names, &covers).unwrap()
    }

    #[test]
    fn closure_of_chain_covers() {
        let p = chain(4);
        assert!(p.le(0, 3));
        assert!(!p.le(3, 0));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2), (2, 3)]);
    }

    #[test]
    fn cycle_is_detected_before_closure() {
        let names = vec!["x".to_string(), "y".to_string()];
        let covers = vec![
            ("x".to_string(), "y".to_string()),
            ("y".to_string(), "x".to_string()),
        ];
        assert!(matches!(
            FinitePoset::from_covers(names, &covers),
            Err(Error::CoverCycle { .. })
        ));
    }

    #[test]
    fn upset_downset_are_idempotent_and_monotone() {
        let p = chain(5);
        for s in crate::set::all_subsets(5) {
            let u = p.upset(s);
            assert!(s.is_subset(u));
            assert_eq!(p.upset(u), u);
            let d = p.downset(s);
            assert!(s.is_subset(d));
            assert_eq!(p.downset(d), d);
        }
    }

    #[test]
    fn maximals_of_v_shape() {
        let names: Vec<String> = ["bot", "l", "r"].iter().map(|s| s.to_string()).collect();
        let covers = vec![
            ("bot".to_string(), "l".to_string()),
            ("bot".to_string(), "r".to_string()),
        ];
        let p = FinitePoset::from_covers(names, &covers).unwrap();
        assert_eq!(p.maximals(), [1, 2].into_iter().collect());
        assert_eq!(p.max_elements(ElemSet::singleton(0)), ElemSet::singleton(0));
    }

    #[test]
    fn duplicate_names_rejected() {
        let names = vec!["x".to_string(), "x".to_string()];
        assert!(matches!(
            FinitePoset::from_covers(names, &[]),
            Err(Error::DuplicateName { .. })
        ));
    }
}
