//! Bounded finite lattices with total meet/join tables.
//!
//! The tables are computed once from the order by exhaustive glb/lub scans;
//! a pair without a glb or lub, or a missing bound, rejects the input. All
//! later algebra (Heyting, residuated, modal) reads these tables.

use crate::error::Error;
use crate::poset::FinitePoset;
use crate::set::{all_subsets, ElemSet};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<usize>,
    join: Vec<usize>,
    bot: usize,
    top: usize,
}

impl FiniteLattice {
    /// Computes meet/join tables and bounds, rejecting non-lattice orders.
    pub fn from_poset(poset: FinitePoset) -> Result<FiniteLattice, Error> {
        let n = poset.len();
        if n == 0 {
            return Err(Error::Unbounded { kind: "least" });
        }
        let bot = (0..n)
            .find(|&z| (0..n).all(|x| poset.le(z, x)))
            .ok_or(Error::Unbounded { kind: "least" })?;
        let top = (0..n)
            .find(|&z| (0..n).all(|x| poset.le(x, z)))
            .ok_or(Error::Unbounded { kind: "greatest" })?;
        let mut meet = vec![0usize; n * n];
        let mut join = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                meet[a * n + b] = bound(&poset, a, b, true).ok_or_else(|| Error::NotALattice {
                    kind: "greatest lower bound",
                    a: poset.name(a).to_string(),
                    b: poset.name(b).to_string(),
                })?;
                join[a * n + b] = bound(&poset, a, b, false).ok_or_else(|| Error::NotALattice {
                    kind: "least upper bound",
                    a: poset.name(a).to_string(),
                    b: poset.name(b).to_string(),
                })?;
            }
        }
        Ok(FiniteLattice { poset, meet, join, bot, top })
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        self.poset.name(i)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.poset.le(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn bot(&self) -> usize {
        self.bot
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn meet_table(&self) -> &[usize] {
        &self.meet
    }

    pub fn join_table(&self) -> &[usize] {
        &self.join
    }

    /// Meet of a subset; the empty meet is ⊤.
    pub fn meet_set(&self, s: ElemSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    /// Join of a subset; the empty join is ⊥.
    pub fn join_set(&self, s: ElemSet) -> usize {
        s.iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// First triple violating `a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)`, scanning in
    /// ascending index order.
    pub fn distributivity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.len();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if self.meet(a, self.join(b, c)) != self.join(self.meet(a, b), self.meet(a, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_witness().is_none()
    }

    /// Join-irreducible elements: non-⊥ elements with exactly one lower cover.
    pub fn join_irreducibles(&self) -> ElemSet {
        let covers = self.poset.covers();
        (0..self.len())
            .filter(|&j| j != self.bot && covers.iter().filter(|&&(_, hi)| hi == j).count() == 1)
            .collect()
    }

    /// Definition-based oracle: `j ≠ ⊥` and `j = a ∨ b` forces `j ∈ {a, b}`.
    pub fn join_irreducibles_oracle(&self) -> ElemSet {
        (0..self.len())
            .filter(|&j| {
                j != self.bot
                    && (0..self.len()).all(|a| {
                        (0..self.len()).all(|b| self.join(a, b) != j || a == j || b == j)
                    })
            })
            .collect()
    }

    /// Complement of `a` if one exists: `a ∧ c = ⊥` and `a ∨ c = ⊤`.
    pub fn complement(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&c| self.meet(a, c) == self.bot && self.join(a, c) == self.top)
    }

    /// True when every element has a complement.
    pub fn is_complemented(&self) -> bool {
        (0..self.len()).all(|a| self.complement(a).is_some())
    }

    /// Validates that `s` is a filter: nonempty, upward closed, meet closed.
    pub fn check_filter(&self, s: ElemSet) -> Result<(), Error> {
        let members = self.poset.render_set(s);
        if s.is_empty() {
            return Err(Error::NotAFilter { members, reason: "a filter is nonempty".into() });
        }
        if !self.poset.is_upset(s) {
            return Err(Error::NotAFilter { members, reason: "not upward closed".into() });
        }
        for a in s.iter() {
            for b in s.iter() {
                if !s.contains(self.meet(a, b)) {
                    return Err(Error::NotAFilter { members, reason: "not closed under ∧".into() });
                }
            }
        }
        Ok(())
    }

    /// All filters: the principal up-sets `↑a`, ascending by member mask.
    ///
    /// A filter of a finite lattice contains the meet of its (finitely many)
    /// members, so it is the up-set of that minimum.
    pub fn filters(&self) -> Vec<ElemSet> {
        let mut v: Vec<ElemSet> = (0..self.len()).map(|a| self.poset.up(a)).collect();
        v.sort();
        v.dedup();
        v
    }

    /// Subset-scan oracle for [`FiniteLattice::filters`]; exponential.
    pub fn filters_oracle(&self) -> Vec<ElemSet> {
        all_subsets(self.len())
            .filter(|&s| self.check_filter(s).is_ok())
            .collect()
    }
}

impl std::fmt::Debug for FiniteLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteLattice({:?})", self.poset.names())
    }
}

fn bound(poset: &FinitePoset, a: usize, b: usize, lower: bool) -> Option<usize> {
    let n = poset.len();
    let bounds: Vec<usize> = (0..n)
        .filter(|&x| {
            if lower {
                poset.le(x, a) && poset.le(x, b)
            } else {
                poset.le(a, x) && poset.le(b, x)
            }
        })
        .collect();
    bounds
        .iter()
        .copied()
        .find(|&m| bounds.iter().all(|&x| if lower { poset.le(x, m) } else { poset.le(m, x) }))
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn lattice_from(names: &[&str], covers: &[(&str, &str)]) -> FiniteLattice {
        let poset = FinitePoset::from_covers(
            names.iter().map(|s| s.to_string()).collect(),
            &covers
                .iter()
                .map(|(a, b)| (a.to_string(), b.to_string()))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        FiniteLattice::from_poset(poset).unwrap()
    }

    fn diamond_m3() -> FiniteLattice {
        lattice_from(
            &["0", "x", "y", "z", "1"],
            &[("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
        )
    }

    fn kite() -> FiniteLattice {
        lattice_from(
            &["⊥", "b", "a", "c", "⊤"],
            &[("⊥", "b"), ("b", "a"), ("b", "c"), ("a", "⊤"), ("c", "⊤")],
        )
    }

    #[test]
    fn meet_join_are_glb_lub() {
        for l in [diamond_m3(), kite()] {
            let n = l.len();
            for a in 0..n {
                for b in 0..n {
                    let m = l.meet(a, b);
                    assert!(l.le(m, a) && l.le(m, b));
                    for x in 0..n {
                        if l.le(x, a) && l.le(x, b) {
                            assert!(l.le(x, m));
                        }
                    }
                    let j = l.join(a, b);
                    assert!(l.le(a, j) && l.le(b, j));
                    for x in 0..n {
                        if l.le(a, x) && l.le(b, x) {
                            assert!(l.le(j, x));
                        }
                    }
                    // Absorption and commutativity come for free from glb/lub.
                    assert_eq!(l.meet(a, l.join(a, b)), a);
                    assert_eq!(l.join(a, l.meet(a, b)), a);
                    assert_eq!(l.meet(a, b), l.meet(b, a));
                }
            }
        }
    }

    #[test]
    fn hexagon_poset_is_not_a_lattice() {
        // Two incomparable middle pairs: {x,y} has two minimal upper bounds.
        let poset = FinitePoset::from_covers(
            ["0", "x", "y", "u", "v", "1"].iter().map(|s| s.to_string()).collect(),
            &[
                ("0".into(), "x".into()),
                ("0".into(), "y".into()),
                ("x".into(), "u".into()),
                ("x".into(), "v".into()),
                ("y".into(), "u".into()),
                ("y".into(), "v".into()),
                ("u".into(), "1".into()),
                ("v".into(), "1".into()),
            ],
        )
        .unwrap();
        assert!(matches!(
            FiniteLattice::from_poset(poset),
            Err(Error::NotALattice { .. })
        ));
    }

    #[test]
    fn m3_fails_distributivity_with_witness() {
        let l = diamond_m3();
        let (a, b, c) = l.distributivity_witness().unwrap();
        assert_ne!(
            l.meet(a, l.join(b, c)),
            l.join(l.meet(a, b), l.meet(a, c))
        );
        assert!(kite().is_distributive());
    }

    #[test]
    fn join_irreducibles_match_definition_oracle() {
        for l in [diamond_m3(), kite(), lattice_from(&["0", "1"], &[("0", "1")])] {
            assert_eq!(l.join_irreducibles(), l.join_irreducibles_oracle());
        }
        let k = kite();
        let ji = k.join_irreducibles();
        assert_eq!(k.poset().render_set(ji), vec!["b", "a", "c"]);
    }

    #[test]
    fn filters_are_exactly_principal_upsets() {
        for l in [diamond_m3(), kite()] {
            assert_eq!(l.filters(), l.filters_oracle());
            assert_eq!(l.filters().len(), l.len());
        }
    }

    #[test]
    fn filter_validation_reports_reason() {
        let k = kite();
        // {⊤, a, c} misses the meet a ∧ c = b.
        let s: ElemSet = [2, 3, 4].into_iter().collect();
        match k.check_filter(s) {
            Err(Error::NotAFilter { reason, .. }) => assert!(reason.contains("∧")),
            other => panic!("expected NotAFilter, got {other:?}"),
        }
        assert!(k.check_filter(k.poset().up(1)).is_ok());
    }

    #[test]
    fn complements_in_boolean_square() {
        let b4 = lattice_from(
            &["0", "p", "q", "1"],
            &[("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")],
        );
        assert!(b4.is_complemented());
        assert_eq!(b4.complement(1), Some(2));
        assert!(!kite().is_complemented());
    }
}
