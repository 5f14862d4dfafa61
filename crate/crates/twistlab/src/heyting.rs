//! Finite Heyting algebras: distributive lattices with relative
//! pseudocomplement tables.
//!
//! `imp(a, b)` is the greatest `x` with `a ∧ x ≤ b`, precomputed as a full
//! table. Dense and regular elements, Boolean filters, filter quotients and
//! the Stone condition live here; everything modal is in [`crate::modal`].

use crate::error::Error;
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

#[derive(Clone, PartialEq, Eq)]
pub struct HeytingAlgebra {
    lat: FiniteLattice,
    imp: Vec<usize>,
}

impl HeytingAlgebra {
    /// Derives the implication table from a distributive lattice.
    ///
    /// Non-distributive input is rejected with the first witness triple. The
    /// residual scan double-checks each maximum; in a distributive lattice it
    /// always exists, so a scan failure is reported as its own error.
    pub fn from_lattice(lat: FiniteLattice) -> Result<HeytingAlgebra, Error> {
        if let Some((a, b, c)) = lat.distributivity_witness() {
            return Err(Error::NotDistributive {
                a: lat.name(a).to_string(),
                b: lat.name(b).to_string(),
                c: lat.name(c).to_string(),
            });
        }
        let n = lat.len();
        let mut imp = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let candidates: ElemSet = (0..n).filter(|&x| lat.le(lat.meet(a, x), b)).collect();
                let m = lat.join_set(candidates);
                if !lat.le(lat.meet(a, m), b) {
                    return Err(Error::NoResidual {
                        a: lat.name(a).to_string(),
                        b: lat.name(b).to_string(),
                    });
                }
                imp[a * n + b] = m;
            }
        }
        Ok(HeytingAlgebra { lat, imp })
    }

    pub fn lat(&self) -> &FiniteLattice {
        &self.lat
    }

    pub fn poset(&self) -> &FinitePoset {
        self.lat.poset()
    }

    pub fn len(&self) -> usize {
        self.lat.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lat.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        self.lat.name(i)
    }

    pub fn le(&self, a: usize, b: usize) -> bool {
        self.lat.le(a, b)
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.lat.meet(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.lat.join(a, b)
    }

    pub fn bot(&self) -> usize {
        self.lat.bot()
    }

    pub fn top(&self) -> usize {
        self.lat.top()
    }

    /// Relative pseudocomplement `a ⇀ b`.
    #[inline]
    pub fn imp(&self, a: usize, b: usize) -> usize {
        self.imp[a * self.len() + b]
    }

    /// Pseudocomplement `−a = a ⇀ ⊥`.
    pub fn neg(&self, a: usize) -> usize {
        self.imp(a, self.lat.bot())
    }

    pub fn imp_table(&self) -> &[usize] {
        &self.imp
    }

    /// View for isomorphism search: order, ∧, ∨, ⇀, bounds.
    pub fn op_view(&self) -> crate::iso::OpView<'_> {
        let mut v = crate::iso::OpView::of_lattice(&self.lat);
        v.binary.push(&self.imp);
        v
    }

    /// Dense elements `{a : −a = ⊥}`; always the up-set of its minimum.
    pub fn dense_set(&self) -> ElemSet {
        (0..self.len()).filter(|&a| self.neg(a) == self.bot()).collect()
    }

    /// The least dense element (the generator of `D(H)`).
    pub fn least_dense(&self) -> usize {
        self.lat.meet_set(self.dense_set())
    }

    /// Regular elements `{a : −−a = a}`.
    pub fn regular_set(&self) -> ElemSet {
        (0..self.len()).filter(|&a| self.neg(self.neg(a)) == a).collect()
    }

    pub fn is_dense(&self, a: usize) -> bool {
        self.neg(a) == self.bot()
    }

    /// Stone condition: `−a ∨ −−a = ⊤` for every `a`. Returns the first
    /// failing element otherwise.
    pub fn stone_witness(&self) -> Option<usize> {
        (0..self.len()).find(|&a| self.join(self.neg(a), self.neg(self.neg(a))) != self.top())
    }

    pub fn is_stone(&self) -> bool {
        self.stone_witness().is_none()
    }

    /// Boolean filters: filters containing every dense element, ascending by
    /// member mask.
    pub fn boolean_filters(&self) -> Vec<ElemSet> {
        let dense = self.dense_set();
        self.lat
            .filters()
            .into_iter()
            .filter(|f| dense.is_subset(*f))
            .collect()
    }

    /// True when `F` contains `D(H)`. Cross-checked against "the quotient by
    /// `F` is Boolean"; the two must agree by theorem, so a mismatch panics.
    pub fn is_boolean_filter(&self, f: ElemSet) -> Result<bool, Error> {
        self.lat.check_filter(f)?;
        let by_dense = self.dense_set().is_subset(f);
        let (q, _) = self.quotient_by_filter(f)?;
        let by_quotient = q.lat.is_complemented();
        assert_eq!(
            by_dense, by_quotient,
            "Boolean-filter characterizations disagree: D(H) ⊆ F is {by_dense}, quotient Boolean is {by_quotient}"
        );
        Ok(by_dense)
    }

    /// Quotient by a filter `F = ↑f`, with the projection map.
    ///
    /// Classes are `a ↦ a ∧ f`; the class representatives form the sublattice
    /// `↓f`, whose own derived implication must match the induced
    /// `(a ⇀ b) ∧ f` (verified; disagreement is an internal error).
    pub fn quotient_by_filter(&self, f: ElemSet) -> Result<(HeytingAlgebra, Vec<usize>), Error> {
        self.lat.check_filter(f)?;
        let gen = self.lat.meet_set(f);
        let reps: Vec<usize> = (0..self.len()).filter(|&r| self.le(r, gen)).collect();
        let class_of = |a: usize| -> usize {
            let r = self.meet(a, gen);
            reps.binary_search(&r).expect("a ∧ f is below f")
        };
        let names: Vec<String> = reps.iter().map(|&r| format!("[{}]", self.name(r))).collect();
        let m = reps.len();
        let mut leq = vec![false; m * m];
        for (i, &r) in reps.iter().enumerate() {
            for (j, &s) in reps.iter().enumerate() {
                leq[i * m + j] = self.le(r, s);
            }
        }
        let poset = FinitePoset::from_leq(names, leq)?;
        let q = HeytingAlgebra::from_lattice(FiniteLattice::from_poset(poset)?)?;
        let proj: Vec<usize> = (0..self.len()).map(class_of).collect();
        // The projection must be a Heyting homomorphism onto the quotient.
        for a in 0..self.len() {
            for b in 0..self.len() {
                let ok = proj[self.meet(a, b)] == q.meet(proj[a], proj[b])
                    && proj[self.join(a, b)] == q.join(proj[a], proj[b])
                    && class_of(self.imp(a, b)) == q.imp(proj[a], proj[b]);
                if !ok {
                    return Err(Error::internal(format!(
                        "quotient projection fails to commute at ({}, {})",
                        self.name(a),
                        self.name(b)
                    )));
                }
            }
        }
        Ok((q, proj))
    }

    /// The four equivalent shapes of "x, y are disjoint with dense join":
    ///
    /// 1. `x ∧ y = ⊥` and `x ∨ y ∈ D(H)`
    /// 2. `x ∧ y = ⊥` and `−x ∧ −y = ⊥`
    /// 3. `−x = −−y`
    /// 4. `−x ⇀ x = −y`
    ///
    /// All four are returned; they agree on every Heyting algebra.
    pub fn disjoint_dense_pair_forms(&self, x: usize, y: usize) -> [bool; 4] {
        let bot = self.bot();
        let nx = self.neg(x);
        let ny = self.neg(y);
        [
            self.meet(x, y) == bot && self.is_dense(self.join(x, y)),
            self.meet(x, y) == bot && self.meet(nx, ny) == bot,
            nx == self.neg(ny),
            self.imp(nx, x) == ny,
        ]
    }
}

impl std::fmt::Debug for HeytingAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HeytingAlgebra({:?})", self.poset().names())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::{boolean, chain, heyting_from, kite_heyting};

    #[test]
    fn implication_is_the_residual() {
        for h in [chain(3), boolean(2), boolean(3), kite_heyting()] {
            for a in 0..h.len() {
                for b in 0..h.len() {
                    for x in 0..h.len() {
                        assert_eq!(
                            h.le(h.meet(a, x), b),
                            h.le(x, h.imp(a, b)),
                            "residuation fails in {h:?}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn chain_implication_table() {
        let c3 = chain(3);
        let (bot, m, top) = (0, 1, 2);
        assert_eq!(c3.imp(top, m), m);
        assert_eq!(c3.imp(m, bot), bot);
        assert_eq!(c3.imp(bot, m), top);
        assert_eq!(c3.imp(m, m), top);
        assert_eq!(c3.neg(m), bot);
        assert_eq!(c3.neg(bot), top);
    }

    #[test]
    fn kite_negations_collapse() {
        let k = kite_heyting();
        // a ∧ c = b ≠ ⊥ forces −x = ⊥ for every non-⊥ x.
        for x in 1..k.len() {
            assert_eq!(k.neg(x), k.bot());
        }
        assert_eq!(k.poset().render_set(k.dense_set()), vec!["b", "a", "c", "⊤"]);
        assert_eq!(k.poset().render_set(k.regular_set()), vec!["⊥", "⊤"]);
        assert_eq!(k.least_dense(), 1);
    }

    #[test]
    fn non_distributive_input_is_rejected_with_witness() {
        let m3 = crate::test_support::lattice(
            &["0", "x", "y", "z", "1"],
            &[("0", "x"), ("0", "y"), ("0", "z"), ("x", "1"), ("y", "1"), ("z", "1")],
        );
        match HeytingAlgebra::from_lattice(m3) {
            Err(Error::NotDistributive { a, b, c }) => {
                assert!(["x", "y", "z"].contains(&a.as_str()));
                assert!(["x", "y", "z"].contains(&b.as_str()));
                assert!(["x", "y", "z"].contains(&c.as_str()));
            }
            other => panic!("expected NotDistributive, got {other:?}"),
        }
    }

    #[test]
    fn boolean_filters_of_chain3() {
        let c3 = chain(3);
        let fs = c3.boolean_filters();
        assert_eq!(fs.len(), 2);
        assert_eq!(c3.poset().render_set(fs[0]), vec!["m", "⊤"]);
        assert_eq!(c3.poset().render_set(fs[1]), vec!["⊥", "m", "⊤"]);
        assert!(fs.windows(2).all(|w| w[0] < w[1]));
        for f in c3.lat().filters() {
            let expected = c3.dense_set().is_subset(f);
            assert_eq!(c3.is_boolean_filter(f).unwrap(), expected);
        }
    }

    #[test]
    fn quotient_of_chain3_by_dense_is_boolean_2() {
        let c3 = chain(3);
        let dense = c3.dense_set();
        let (q, proj) = c3.quotient_by_filter(dense).unwrap();
        assert_eq!(q.len(), 2);
        assert_eq!(proj, vec![0, 1, 1]);
        assert!(q.lat().is_complemented());
        // The improper filter collapses everything.
        let (q1, _) = c3.quotient_by_filter(ElemSet::full(3)).unwrap();
        assert_eq!(q1.len(), 1);
    }

    #[test]
    fn stone_condition_examples() {
        assert!(chain(3).is_stone());
        assert!(boolean(2).is_stone());
        assert!(kite_heyting().is_stone());
        // Diamond with a new top: −{atom} ∨ −−{atom} is the co-atom, not ⊤.
        let h = heyting_from(
            &["0", "p", "q", "m", "1"],
            &[("0", "p"), ("0", "q"), ("p", "m"), ("q", "m"), ("m", "1")],
        );
        assert_eq!(h.stone_witness(), Some(1));
    }

    #[test]
    fn disjoint_dense_pair_forms_agree() {
        for h in [chain(3), boolean(2), boolean(4), kite_heyting()] {
            for x in 0..h.len() {
                for y in 0..h.len() {
                    let forms = h.disjoint_dense_pair_forms(x, y);
                    assert!(
                        forms.iter().all(|&b| b == forms[0]),
                        "pair forms disagree at ({}, {}): {forms:?}",
                        h.name(x),
                        h.name(y)
                    );
                }
            }
        }
    }
}
