//! Heyting algebras with a pair of unary modal operators.
//!
//! The operators are arbitrary total tables; no monotonicity or normality is
//! assumed. Laws are checked exhaustively and named by stable strings:
//! `mH`, `mH_quasi`, `mH1`, `mH2`, `mH3`, `N1`, `N2`, `crisp_box`,
//! `crisp_diamond`, `stone`. The interaction law with a filter, condition
//! (F), is `F_condition` and is checked by [`ModalHeytingAlgebra::check_filter_condition_f`].
//!
//! The central law is (mH): `□a ∧ ◇(−a ∧ b) = ⊥`, equivalently the
//! quasi-equation (mH'): `a ∧ b = ⊥ implies □a ∧ ◇b = ⊥`. Twist
//! constructions require it; see [`crate::twist`].

use crate::error::Error;
use crate::heyting::HeytingAlgebra;
use crate::iso::OpView;
use crate::report::LawReport;
use crate::set::ElemSet;

#[derive(Clone, PartialEq, Eq)]
pub struct ModalHeytingAlgebra {
    h: HeytingAlgebra,
    box_: Vec<usize>,
    dia: Vec<usize>,
}

/// Stable law names for modal Heyting algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ModalLaw {
    /// `□a ∧ ◇(−a ∧ b) = ⊥`
    MH,
    /// `a ∧ b = ⊥  implies  □a ∧ ◇b = ⊥`
    MHQuasi,
    /// `□⊤ = ⊤`
    MH1,
    /// `−◇a = □−a`
    MH2,
    /// `□(a ⇀ b) ⇀ (□a ⇀ □b) = ⊤`
    MH3,
    /// `−−□a = −◇−a`
    N1,
    /// `−□−a = −−◇a`
    N2,
    /// `−−□x = □−−x`
    CrispBox,
    /// `−−◇x = ◇−−x`
    CrispDiamond,
    /// `−a ∨ −−a = ⊤` (no modal operators involved)
    Stone,
}

pub const MODAL_LAWS: [ModalLaw; 10] = [
    ModalLaw::MH,
    ModalLaw::MHQuasi,
    ModalLaw::MH1,
    ModalLaw::MH2,
    ModalLaw::MH3,
    ModalLaw::N1,
    ModalLaw::N2,
    ModalLaw::CrispBox,
    ModalLaw::CrispDiamond,
    ModalLaw::Stone,
];

impl ModalLaw {
    pub fn name(self) -> &'static str {
        match self {
            ModalLaw::MH => "mH",
            ModalLaw::MHQuasi => "mH_quasi",
            ModalLaw::MH1 => "mH1",
            ModalLaw::MH2 => "mH2",
            ModalLaw::MH3 => "mH3",
            ModalLaw::N1 => "N1",
            ModalLaw::N2 => "N2",
            ModalLaw::CrispBox => "crisp_box",
            ModalLaw::CrispDiamond => "crisp_diamond",
            ModalLaw::Stone => "stone",
        }
    }

    pub fn from_name(name: &str) -> Result<ModalLaw, Error> {
        MODAL_LAWS
            .into_iter()
            .find(|l| l.name() == name)
            .ok_or_else(|| Error::UnknownLaw { name: name.to_string() })
    }
}

impl std::fmt::Display for ModalLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl ModalHeytingAlgebra {
    /// Wraps a Heyting algebra with □ and ◇ tables, validating totality and
    /// range. No law is assumed; use [`Self::check_law`].
    pub fn from_tables(
        h: HeytingAlgebra,
        box_: Vec<usize>,
        dia: Vec<usize>,
    ) -> Result<ModalHeytingAlgebra, Error> {
        for (table, name) in [(&box_, "box"), (&dia, "diamond")] {
            if table.len() != h.len() {
                let missing = h.name(table.len().min(h.len() - 1)).to_string();
                return Err(Error::PartialTable { table: name.to_string(), name: missing });
            }
            if let Some(&bad) = table.iter().find(|&&v| v >= h.len()) {
                let arg = table.iter().position(|&v| v == bad).unwrap();
                return Err(Error::TableRange { table: name.to_string(), name: h.name(arg).to_string() });
            }
        }
        Ok(ModalHeytingAlgebra { h, box_, dia })
    }

    /// The algebra with `□ = ◇ = id`; satisfies every law in the registry
    /// that its Heyting reduct allows (always mH, mH1–mH3, N1, N2, crisp).
    pub fn identity_modal(h: HeytingAlgebra) -> ModalHeytingAlgebra {
        let id: Vec<usize> = (0..h.len()).collect();
        ModalHeytingAlgebra { box_: id.clone(), dia: id, h }
    }

    pub fn heyting(&self) -> &HeytingAlgebra {
        &self.h
    }

    pub fn len(&self) -> usize {
        self.h.len()
    }

    pub fn is_empty(&self) -> bool {
        self.h.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        self.h.name(i)
    }

    #[inline]
    pub fn box_(&self, a: usize) -> usize {
        self.box_[a]
    }

    #[inline]
    pub fn dia(&self, a: usize) -> usize {
        self.dia[a]
    }

    pub fn box_table(&self) -> &[usize] {
        &self.box_
    }

    pub fn dia_table(&self) -> &[usize] {
        &self.dia
    }

    fn names_of(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.h.name(x).to_string()).collect()
    }

    /// Checks one registry law exhaustively, scanning witnesses in ascending
    /// element order (first coordinate slowest).
    pub fn check_law(&self, law: ModalLaw) -> LawReport {
        let h = &self.h;
        let n = h.len();
        let bot = h.bot();
        let top = h.top();
        match law {
            ModalLaw::MH => {
                for a in 0..n {
                    for b in 0..n {
                        let lhs = h.meet(self.box_(a), self.dia(h.meet(h.neg(a), b)));
                        if lhs != bot {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                format!("□a ∧ ◇(−a ∧ b) = {} ≠ ⊥", h.name(lhs)),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            ModalLaw::MHQuasi => {
                for a in 0..n {
                    for b in 0..n {
                        if h.meet(a, b) != bot {
                            continue;
                        }
                        let lhs = h.meet(self.box_(a), self.dia(b));
                        if lhs != bot {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                format!("a ∧ b = ⊥ but □a ∧ ◇b = {} ≠ ⊥", h.name(lhs)),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            ModalLaw::MH1 => {
                if self.box_(top) != top {
                    return LawReport::fail(
                        law.name(),
                        self.names_of(&[top]),
                        format!("□⊤ = {} ≠ ⊤", h.name(self.box_(top))),
                    );
                }
                LawReport::pass(law.name())
            }
            ModalLaw::MH2 => self.unary_equation(law, |s, a| {
                (s.h.neg(s.dia(a)), s.box_(s.h.neg(a)), "−◇a", "□−a")
            }),
            ModalLaw::MH3 => {
                for a in 0..n {
                    for b in 0..n {
                        let lhs = h.imp(
                            self.box_(h.imp(a, b)),
                            h.imp(self.box_(a), self.box_(b)),
                        );
                        if lhs != top {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                format!("□(a⇀b) ⇀ (□a⇀□b) = {} ≠ ⊤", h.name(lhs)),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            ModalLaw::N1 => self.unary_equation(law, |s, a| {
                (
                    s.h.neg(s.h.neg(s.box_(a))),
                    s.h.neg(s.dia(s.h.neg(a))),
                    "−−□a",
                    "−◇−a",
                )
            }),
            ModalLaw::N2 => self.unary_equation(law, |s, a| {
                (
                    s.h.neg(s.box_(s.h.neg(a))),
                    s.h.neg(s.h.neg(s.dia(a))),
                    "−□−a",
                    "−−◇a",
                )
            }),
            ModalLaw::CrispBox => self.unary_equation(law, |s, a| {
                (
                    s.h.neg(s.h.neg(s.box_(a))),
                    s.box_(s.h.neg(s.h.neg(a))),
                    "−−□a",
                    "□−−a",
                )
            }),
            ModalLaw::CrispDiamond => self.unary_equation(law, |s, a| {
                (
                    s.h.neg(s.h.neg(s.dia(a))),
                    s.dia(s.h.neg(s.h.neg(a))),
                    "−−◇a",
                    "◇−−a",
                )
            }),
            ModalLaw::Stone => match h.stone_witness() {
                None => LawReport::pass(law.name()),
                Some(a) => LawReport::fail(
                    law.name(),
                    self.names_of(&[a]),
                    format!("−a ∨ −−a = {} ≠ ⊤", h.name(h.join(h.neg(a), h.neg(h.neg(a))))),
                ),
            },
        }
    }

    fn unary_equation(
        &self,
        law: ModalLaw,
        sides: impl Fn(&Self, usize) -> (usize, usize, &'static str, &'static str),
    ) -> LawReport {
        for a in 0..self.len() {
            let (l, r, ln, rn) = sides(self, a);
            if l != r {
                return LawReport::fail(
                    law.name(),
                    self.names_of(&[a]),
                    format!("{ln} = {} ≠ {} = {rn}", self.h.name(l), self.h.name(r)),
                );
            }
        }
        LawReport::pass(law.name())
    }

    /// Condition (F) for a filter: `a ∧ b = ⊥` and `a ∨ b ∈ F` imply
    /// `□a ∨ ◇b ∈ F`. Reported under the law name `F_condition`.
    pub fn check_filter_condition_f(&self, f: ElemSet) -> Result<LawReport, Error> {
        self.h.lat().check_filter(f)?;
        let h = &self.h;
        for a in 0..h.len() {
            for b in 0..h.len() {
                if h.meet(a, b) != h.bot() || !f.contains(h.join(a, b)) {
                    continue;
                }
                let out = h.join(self.box_(a), self.dia(b));
                if !f.contains(out) {
                    return Ok(LawReport::fail(
                        "F_condition",
                        self.names_of(&[a, b]),
                        format!("□a ∨ ◇b = {} ∉ F", h.name(out)),
                    ));
                }
            }
        }
        Ok(LawReport::pass("F_condition"))
    }

    /// View for isomorphism search: order, □, ◇, ∧, ∨, ⇀, bounds.
    pub fn op_view(&self) -> OpView<'_> {
        let mut v = self.h.op_view();
        v.unary.push(&self.box_);
        v.unary.push(&self.dia);
        v
    }
}

impl std::fmt::Debug for ModalHeytingAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ModalHeytingAlgebra({:?})", self.h.poset().names())
    }
}

/// Budget for [`enumerate_modal_pairs`]; both limits are inclusive caps.
#[derive(Debug, Clone, Copy)]
pub struct EnumBudget {
    /// Stop after yielding this many passing pairs.
    pub max_pairs: usize,
    /// Stop after examining this many complete candidate pairs.
    pub max_candidates: u64,
}

impl EnumBudget {
    pub const UNLIMITED: EnumBudget =
        EnumBudget { max_pairs: usize::MAX, max_candidates: u64::MAX };

    pub fn limited_to(max_pairs: usize) -> EnumBudget {
        EnumBudget { max_pairs, ..EnumBudget::UNLIMITED }
    }
}

/// Result of a modal-pair enumeration.
#[derive(Debug, Clone)]
pub struct EnumResult {
    /// Passing `(□, ◇)` tables in lexicographic order of `(box, dia)`.
    pub pairs: Vec<(Vec<usize>, Vec<usize>)>,
    /// True when a budget cap stopped the stream early.
    pub truncated: bool,
    /// Complete candidate pairs examined.
    pub candidates: u64,
}

/// Enumerates `(□, ◇)` table pairs over `h` satisfying every law in `laws`,
/// in lexicographic order, incrementally pruning by (mH') when `mH` or
/// `mH_quasi` is requested.
///
/// Pruning rests on distributivity: for a fixed □ table, `◇b` may meet no
/// `□a` with `a ∧ b = ⊥`, which pins `◇b` under the negation of the join of
/// those `□a`. The diamond coordinates are then independent.
pub fn enumerate_modal_pairs(
    h: &HeytingAlgebra,
    laws: &[ModalLaw],
    budget: EnumBudget,
) -> EnumResult {
    let n = h.len();
    let prune_mh = laws.contains(&ModalLaw::MH) || laws.contains(&ModalLaw::MHQuasi);
    let mut pairs = Vec::new();
    let mut candidates: u64 = 0;
    let mut truncated = false;

    // Z(b): the elements disjoint from b.
    let disjoint: Vec<Vec<usize>> = (0..n)
        .map(|b| (0..n).filter(|&a| h.meet(a, b) == h.bot()).collect())
        .collect();

    let mut box_ = vec![0usize; n];
    'boxes: loop {
        // Admissible ◇ values per argument under (mH'), ascending.
        let allowed: Vec<Vec<usize>> = if prune_mh {
            (0..n)
                .map(|b| {
                    let bound = h.neg(disjoint[b].iter().fold(h.bot(), |acc, &a| h.join(acc, box_[a])));
                    (0..n).filter(|&v| h.le(v, bound)).collect()
                })
                .collect()
        } else {
            (0..n).map(|_| (0..n).collect()).collect()
        };

        let mut choice = vec![0usize; n];
        'dias: loop {
            let dia: Vec<usize> = (0..n).map(|b| allowed[b][choice[b]]).collect();
            candidates += 1;
            let m = ModalHeytingAlgebra { h: h.clone(), box_: box_.clone(), dia };
            if laws.iter().all(|&l| m.check_law(l).holds) {
                pairs.push((m.box_.clone(), m.dia.clone()));
                if pairs.len() >= budget.max_pairs {
                    truncated = true;
                    break 'boxes;
                }
            }
            if candidates >= budget.max_candidates {
                truncated = true;
                break 'boxes;
            }
            // Odometer over the allowed sets, last coordinate fastest.
            let mut i = n;
            loop {
                if i == 0 {
                    break 'dias;
                }
                i -= 1;
                if choice[i] + 1 < allowed[i].len() {
                    choice[i] += 1;
                    for c in choice.iter_mut().skip(i + 1) {
                        *c = 0;
                    }
                    break;
                }
            }
        }

        let mut i = n;
        loop {
            if i == 0 {
                break 'boxes;
            }
            i -= 1;
            if box_[i] + 1 < n {
                box_[i] += 1;
                for c in box_.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
    EnumResult { pairs, truncated, candidates }
}

/// Brute-force oracle for [`enumerate_modal_pairs`]: scans every table pair
/// and post-checks the laws. Exponential; only for small carriers.
pub fn enumerate_modal_pairs_oracle(h: &HeytingAlgebra, laws: &[ModalLaw]) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = h.len();
    assert!(n.pow(n as u32) <= 1 << 16, "oracle is for small carriers");
    let tables: Vec<Vec<usize>> = all_tables(n);
    let mut out = Vec::new();
    for box_ in &tables {
        for dia in &tables {
            let m = ModalHeytingAlgebra { h: h.clone(), box_: box_.clone(), dia: dia.clone() };
            if laws.iter().all(|&l| m.check_law(l).holds) {
                out.push((box_.clone(), dia.clone()));
            }
        }
    }
    out
}

fn all_tables(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut t = vec![0usize; n];
    loop {
        out.push(t.clone());
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if t[i] + 1 < n {
                t[i] += 1;
                for c in t.iter_mut().skip(i + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_heyting, chain_heyting, kite_heyting};

    // ⊥=0, b=1, a=2, c=3, ⊤=4
    use crate::catalog::kite_modal_heyting as kite_modal;

    #[test]
    fn kite_fixture_laws() {
        let m = kite_modal();
        assert!(m.check_law(ModalLaw::MH).holds);
        assert!(m.check_law(ModalLaw::MHQuasi).holds);
        let r = m.check_law(ModalLaw::MH1);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec!["⊤".to_string()]));
        let r2 = m.check_law(ModalLaw::MH2);
        assert!(!r2.holds);
        assert_eq!(r2.witness, Some(vec!["⊥".to_string()]));
    }

    #[test]
    fn identity_and_constant_operators() {
        for h in [chain_heyting(3), kite_heyting(), boolean_heyting(2)] {
            let id = ModalHeytingAlgebra::identity_modal(h.clone());
            for law in [ModalLaw::MH, ModalLaw::MH1, ModalLaw::MH2, ModalLaw::MH3, ModalLaw::N1, ModalLaw::N2, ModalLaw::CrispBox, ModalLaw::CrispDiamond] {
                assert!(id.check_law(law).holds, "id/id fails {law} on {h:?}");
            }
            let n = h.len();
            let typical = ModalHeytingAlgebra::from_tables(
                h.clone(),
                vec![h.top(); n],
                vec![h.bot(); n],
            )
            .unwrap();
            for law in MODAL_LAWS {
                if law == ModalLaw::Stone {
                    continue;
                }
                assert!(typical.check_law(law).holds, "⊤/⊥ fails {law} on {h:?}");
            }
        }
    }

    #[test]
    fn mh_failure_witness_matches_both_forms() {
        // □ = id, ◇ = const ⊤ on Boolean 2.
        let b2 = boolean_heyting(1);
        let m = ModalHeytingAlgebra::from_tables(b2, vec![0, 1], vec![1, 1]).unwrap();
        let r1 = m.check_law(ModalLaw::MH);
        let r2 = m.check_law(ModalLaw::MHQuasi);
        assert!(!r1.holds && !r2.holds);
        assert_eq!(r1.witness, Some(vec!["⊤".to_string(), "⊥".to_string()]));
        assert_eq!(r1.witness, r2.witness);
    }

    #[test]
    fn mh_and_quasi_agree_exhaustively_on_small_bases() {
        for h in [boolean_heyting(1), chain_heyting(3)] {
            for box_ in all_tables(h.len()) {
                for dia in all_tables(h.len()) {
                    let m = ModalHeytingAlgebra::from_tables(h.clone(), box_.clone(), dia).unwrap();
                    assert_eq!(
                        m.check_law(ModalLaw::MH).holds,
                        m.check_law(ModalLaw::MHQuasi).holds
                    );
                }
            }
        }
    }

    #[test]
    fn mh_consequences_on_small_bases() {
        for h in [boolean_heyting(1), chain_heyting(3)] {
            for box_ in all_tables(h.len()) {
                for dia in all_tables(h.len()) {
                    let m = ModalHeytingAlgebra::from_tables(h.clone(), box_.clone(), dia).unwrap();
                    if m.check_law(ModalLaw::MH).holds {
                        for a in 0..h.len() {
                            assert!(h.le(m.dia(h.neg(a)), h.neg(m.box_(a))));
                            assert!(h.le(m.box_(h.neg(a)), h.neg(m.dia(a))));
                        }
                    }
                    if m.check_law(ModalLaw::MH1).holds && m.check_law(ModalLaw::MH2).holds {
                        // −◇⊥ = □−⊥ = □⊤ = ⊤ pins ◇⊥ under −⊤ = ⊥.
                        assert_eq!(m.dia(h.bot()), h.bot(), "mH1+mH2 force ◇⊥ = ⊥");
                    }
                    if m.check_law(ModalLaw::MH1).holds && m.check_law(ModalLaw::MH3).holds {
                        for a in 0..h.len() {
                            for b in 0..h.len() {
                                if h.imp(a, b) == h.top() {
                                    assert_eq!(h.imp(m.box_(a), m.box_(b)), h.top());
                                }
                                assert_eq!(
                                    m.box_(h.meet(a, b)),
                                    h.meet(m.box_(a), m.box_(b)),
                                    "mH1+mH3 force □ to distribute over ∧"
                                );
                            }
                        }
                        // Together with mH2 this is enough for (mH').
                        if m.check_law(ModalLaw::MH2).holds {
                            assert!(m.check_law(ModalLaw::MHQuasi).holds);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_oracle_and_frozen_counts() {
        let b2 = boolean_heyting(1);
        let fast = enumerate_modal_pairs(&b2, &[ModalLaw::MH], EnumBudget::UNLIMITED);
        let slow = enumerate_modal_pairs_oracle(&b2, &[ModalLaw::MH]);
        assert!(!fast.truncated);
        assert_eq!(fast.pairs, slow);
        assert_eq!(fast.pairs.len(), 8);

        let c3 = chain_heyting(3);
        let fast = enumerate_modal_pairs(&c3, &[ModalLaw::MH], EnumBudget::UNLIMITED);
        let slow = enumerate_modal_pairs_oracle(&c3, &[ModalLaw::MH]);
        assert!(!fast.truncated);
        assert_eq!(fast.pairs, slow);
        assert_eq!(fast.pairs.len(), 117);
    }

    #[test]
    fn enumeration_with_mh1_keeps_box_top() {
        let c3 = chain_heyting(3);
        let r = enumerate_modal_pairs(&c3, &[ModalLaw::MH, ModalLaw::MH1], EnumBudget::UNLIMITED);
        assert!(!r.pairs.is_empty());
        for (box_, _) in &r.pairs {
            assert_eq!(box_[c3.top()], c3.top());
        }
    }

    #[test]
    fn enumeration_budget_truncates_deterministically() {
        let c3 = chain_heyting(3);
        let all = enumerate_modal_pairs(&c3, &[ModalLaw::MH], EnumBudget::UNLIMITED);
        let some = enumerate_modal_pairs(&c3, &[ModalLaw::MH], EnumBudget::limited_to(10));
        assert!(some.truncated);
        assert_eq!(some.pairs.len(), 10);
        assert_eq!(&all.pairs[..10], &some.pairs[..]);
        let again = enumerate_modal_pairs(&c3, &[ModalLaw::MH], EnumBudget::limited_to(10));
        assert_eq!(some.pairs, again.pairs);
    }

    #[test]
    fn filter_condition_witness_is_deterministic() {
        let c3 = chain_heyting(3);
        let m = ModalHeytingAlgebra::from_tables(c3.clone(), vec![0, 0, 0], vec![0, 0, 0]).unwrap();
        let dense = c3.dense_set();
        let r = m.check_filter_condition_f(dense).unwrap();
        assert!(!r.holds);
        // Ascending (a, b) scan reaches (⊥, m) first; (m, ⊥) fails too.
        assert_eq!(r.witness, Some(vec!["⊥".to_string(), "m".to_string()]));
        assert!(!dense.contains(c3.join(0, 0)) || true);
        let direct = c3.join(m.box_(1), m.dia(0));
        assert!(!dense.contains(direct), "the (m, ⊥) instance also violates (F)");
        // The improper filter satisfies (F) trivially.
        let full = crate::set::ElemSet::full(3);
        assert!(m.check_filter_condition_f(full).unwrap().holds);
    }

    #[test]
    fn law_names_round_trip() {
        for law in MODAL_LAWS {
            assert_eq!(ModalLaw::from_name(law.name()).unwrap(), law);
        }
        assert!(ModalLaw::from_name("nope").is_err());
    }
}
