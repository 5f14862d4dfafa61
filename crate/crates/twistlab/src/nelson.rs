//! Involutive residuated lattices with 3-potent fusion, their modal
//! extensions, and the square-based quotient machinery.
//!
//! A value of [`ModalNelsonLattice`] is raw data: a bounded lattice plus
//! fusion, residual and (optionally) ■/◆ tables. No law is assumed at
//! construction; the registry ([`NelsonLaw`]) checks everything from the
//! residuation axioms up to the subvariety equations, naming witnesses.
//! Plain Nelson lattices are the same type with `modal() == false` and
//! identity modal tables; non-modal checks ignore them.
//!
//! Notation used throughout: `∼a = a ⇒ ⊥` (involutive negation),
//! `a² = a * a`, `a → b = a² ⇒ b` (weak implication), `¬a = a → ⊥`,
//! `∇x = ∼(∼x²)²`, `Δx = (∼(∼x)²)²`, `φx = Δx ∧ (∇(x ∨ ∼x) ∨ x)`.

use crate::error::Error;
use crate::heyting::HeytingAlgebra;
use crate::iso::OpView;
use crate::lattice::FiniteLattice;
use crate::modal::ModalHeytingAlgebra;
use crate::poset::FinitePoset;
use crate::report::LawReport;
use crate::set::ElemSet;

#[derive(Clone, PartialEq, Eq)]
pub struct ModalNelsonLattice {
    lat: FiniteLattice,
    fusion: Vec<usize>,
    res: Vec<usize>,
    bsq: Vec<usize>,
    bdia: Vec<usize>,
    modal: bool,
}

/// Stable law names for (modal) Nelson lattices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum NelsonLaw {
    /// Commutative monoid with unit ⊤ and the residuation equivalence.
    Res,
    /// The three residuated-lattice identities
    /// `(a*b)⇒c = a⇒(b⇒c)`, `(a*(a⇒b))∨b = b`, `(a∧b)⇒b = ⊤`.
    Rl,
    /// Involution `∼∼a = a` and the Nelson identity
    /// `((a²⇒b) ∧ ((∼b)²⇒∼a)) ⇒ (a⇒b) = ⊤`.
    Nelson,
    /// `a³ = a²` plus its corollaries `a²⇒b = ⊤ implies a²⇒b² = ⊤` and
    /// `(a*b)² = (a∧b)²`.
    Potency3,
    /// `◆a = ∼■∼a`
    MN1,
    /// `(■a)² = (■a²)²` and `(◆a)² = (◆a²)²`
    MN2,
    /// `(■a ∧ ◆(∼a² ∧ b))² = ⊥`
    MN3,
    /// `(a∧b)² = ⊥  implies  (■a ∧ ◆b)² = ⊥`
    MN3Q,
    /// `■(a∧b) = ■a ∧ ■b`
    MN4,
    /// `◆(a∨b) = ◆a ∨ ◆b`
    MN4D,
    /// `■⊤ = ⊤`
    MN5,
    /// `a² ≤ b  implies  (■a)² ≤ ■b`
    MN6,
    /// `(∼a)² ≤ ∼b  implies  (∼■a)² ≤ ∼■b`
    MN7,
    /// `∇x = Δx`
    NormalNelson,
    /// `(∼x²)² ∨ (∼(∼x²)²)² = ⊤`
    PhiRegular,
    /// `■φ(x) = φ(■x)`
    PhiRegularModal,
    /// `∃x: x = ∼x` (witness on success; none on failure)
    Centered,
}

pub const NELSON_LAWS: [NelsonLaw; 17] = [
    NelsonLaw::Res,
    NelsonLaw::Rl,
    NelsonLaw::Nelson,
    NelsonLaw::Potency3,
    NelsonLaw::MN1,
    NelsonLaw::MN2,
    NelsonLaw::MN3,
    NelsonLaw::MN3Q,
    NelsonLaw::MN4,
    NelsonLaw::MN4D,
    NelsonLaw::MN5,
    NelsonLaw::MN6,
    NelsonLaw::MN7,
    NelsonLaw::NormalNelson,
    NelsonLaw::PhiRegular,
    NelsonLaw::PhiRegularModal,
    NelsonLaw::Centered,
];

/// The laws that involve the modal tables.
pub const NELSON_MODAL_LAWS: [NelsonLaw; 10] = [
    NelsonLaw::MN1,
    NelsonLaw::MN2,
    NelsonLaw::MN3,
    NelsonLaw::MN3Q,
    NelsonLaw::MN4,
    NelsonLaw::MN4D,
    NelsonLaw::MN5,
    NelsonLaw::MN6,
    NelsonLaw::MN7,
    NelsonLaw::PhiRegularModal,
];

impl NelsonLaw {
    pub fn name(self) -> &'static str {
        match self {
            NelsonLaw::Res => "res",
            NelsonLaw::Rl => "RL",
            NelsonLaw::Nelson => "nelson",
            NelsonLaw::Potency3 => "potency3",
            NelsonLaw::MN1 => "mN1",
            NelsonLaw::MN2 => "mN2",
            NelsonLaw::MN3 => "mN3",
            NelsonLaw::MN3Q => "mN3q",
            NelsonLaw::MN4 => "mN4",
            NelsonLaw::MN4D => "mN4d",
            NelsonLaw::MN5 => "mN5",
            NelsonLaw::MN6 => "mN6",
            NelsonLaw::MN7 => "mN7",
            NelsonLaw::NormalNelson => "normal_nelson",
            NelsonLaw::PhiRegular => "phi_regular",
            NelsonLaw::PhiRegularModal => "phi_regular_modal",
            NelsonLaw::Centered => "centered",
        }
    }

    pub fn from_name(name: &str) -> Result<NelsonLaw, Error> {
        NELSON_LAWS
            .into_iter()
            .find(|l| l.name() == name)
            .ok_or_else(|| Error::UnknownLaw { name: name.to_string() })
    }

    pub fn is_modal(self) -> bool {
        NELSON_MODAL_LAWS.contains(&self)
    }
}

impl std::fmt::Display for NelsonLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl ModalNelsonLattice {
    /// Wraps a lattice with fusion/residual tables and no modal structure.
    pub fn plain(lat: FiniteLattice, fusion: Vec<usize>, res: Vec<usize>) -> Result<Self, Error> {
        let id: Vec<usize> = (0..lat.len()).collect();
        Self::build(lat, fusion, res, id.clone(), id, false)
    }

    /// Wraps a lattice with fusion/residual and ■/◆ tables.
    pub fn with_modal(
        lat: FiniteLattice,
        fusion: Vec<usize>,
        res: Vec<usize>,
        bsq: Vec<usize>,
        bdia: Vec<usize>,
    ) -> Result<Self, Error> {
        Self::build(lat, fusion, res, bsq, bdia, true)
    }

    fn build(
        lat: FiniteLattice,
        fusion: Vec<usize>,
        res: Vec<usize>,
        bsq: Vec<usize>,
        bdia: Vec<usize>,
        modal: bool,
    ) -> Result<Self, Error> {
        let n = lat.len();
        for (table, name, binary) in [
            (&fusion, "fusion", true),
            (&res, "res", true),
            (&bsq, "blacksquare", false),
            (&bdia, "blackdiamond", false),
        ] {
            let want = if binary { n * n } else { n };
            if table.len() != want {
                let row = if binary { table.len() / n.max(1) } else { table.len() };
                let missing = lat.name(row.min(n - 1)).to_string();
                return Err(Error::PartialTable { table: name.to_string(), name: missing });
            }
            if let Some(pos) = table.iter().position(|&v| v >= n) {
                let arg = if binary { pos / n } else { pos };
                return Err(Error::TableRange { table: name.to_string(), name: lat.name(arg).to_string() });
            }
        }
        Ok(ModalNelsonLattice { lat, fusion, res, bsq, bdia, modal })
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

    pub fn modal(&self) -> bool {
        self.modal
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

    /// Fusion `a * b`.
    #[inline]
    pub fn fus(&self, a: usize, b: usize) -> usize {
        self.fusion[a * self.len() + b]
    }

    /// Residual `a ⇒ b`.
    #[inline]
    pub fn res(&self, a: usize, b: usize) -> usize {
        self.res[a * self.len() + b]
    }

    /// `■a` (identity when non-modal).
    #[inline]
    pub fn bsq(&self, a: usize) -> usize {
        self.bsq[a]
    }

    /// `◆a` (identity when non-modal).
    #[inline]
    pub fn bdia(&self, a: usize) -> usize {
        self.bdia[a]
    }

    pub fn fusion_table(&self) -> &[usize] {
        &self.fusion
    }

    pub fn res_table(&self) -> &[usize] {
        &self.res
    }

    pub fn bsq_table(&self) -> &[usize] {
        &self.bsq
    }

    pub fn bdia_table(&self) -> &[usize] {
        &self.bdia
    }

    /// Involutive negation `∼a = a ⇒ ⊥`.
    pub fn snot(&self, a: usize) -> usize {
        self.res(a, self.bot())
    }

    /// `a² = a * a`.
    pub fn square(&self, a: usize) -> usize {
        self.fus(a, a)
    }

    /// Weak implication `a → b = a² ⇒ b`.
    pub fn wimp(&self, a: usize, b: usize) -> usize {
        self.res(self.square(a), b)
    }

    /// Weak negation `¬a = a → ⊥`.
    pub fn wneg(&self, a: usize) -> usize {
        self.wimp(a, self.bot())
    }

    /// `∇x = ∼(∼x²)²`
    pub fn nabla(&self, x: usize) -> usize {
        self.snot(self.square(self.snot(self.square(x))))
    }

    /// `Δx = (∼(∼x)²)²`
    pub fn delta(&self, x: usize) -> usize {
        self.square(self.snot(self.square(self.snot(x))))
    }

    /// `φx = Δx ∧ (∇(x ∨ ∼x) ∨ x)`
    pub fn phi(&self, x: usize) -> usize {
        self.meet(
            self.delta(x),
            self.join(self.nabla(self.join(x, self.snot(x))), x),
        )
    }

    fn names_of(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.name(x).to_string()).collect()
    }

    /// Checks one registry law exhaustively; witnesses scan in ascending
    /// element order.
    pub fn check_law(&self, law: NelsonLaw) -> LawReport {
        let n = self.len();
        let bot = self.bot();
        let top = self.top();
        match law {
            NelsonLaw::Res => {
                for a in 0..n {
                    if self.fus(a, top) != a {
                        return LawReport::fail(
                            law.name(),
                            self.names_of(&[a]),
                            format!("a * ⊤ = {} ≠ a", self.name(self.fus(a, top))),
                        );
                    }
                    for b in 0..n {
                        if self.fus(a, b) != self.fus(b, a) {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "fusion is not commutative".to_string(),
                            );
                        }
                        for c in 0..n {
                            if self.fus(self.fus(a, b), c) != self.fus(a, self.fus(b, c)) {
                                return LawReport::fail(
                                    law.name(),
                                    self.names_of(&[a, b, c]),
                                    "fusion is not associative".to_string(),
                                );
                            }
                            if self.le(self.fus(a, b), c) != self.le(b, self.res(a, c)) {
                                return LawReport::fail(
                                    law.name(),
                                    self.names_of(&[a, b, c]),
                                    "a*b ≤ c and b ≤ a⇒c disagree".to_string(),
                                );
                            }
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::Rl => {
                for a in 0..n {
                    for b in 0..n {
                        if self.res(self.meet(a, b), b) != top {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "(a∧b) ⇒ b ≠ ⊤".to_string(),
                            );
                        }
                        if self.join(self.fus(a, self.res(a, b)), b) != b {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "(a*(a⇒b)) ∨ b ≠ b".to_string(),
                            );
                        }
                        for c in 0..n {
                            if self.res(self.fus(a, b), c) != self.res(a, self.res(b, c)) {
                                return LawReport::fail(
                                    law.name(),
                                    self.names_of(&[a, b, c]),
                                    "(a*b)⇒c ≠ a⇒(b⇒c)".to_string(),
                                );
                            }
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::Nelson => {
                for a in 0..n {
                    if self.snot(self.snot(a)) != a {
                        return LawReport::fail(
                            law.name(),
                            self.names_of(&[a]),
                            format!("∼∼a = {} ≠ a", self.name(self.snot(self.snot(a)))),
                        );
                    }
                }
                for a in 0..n {
                    for b in 0..n {
                        let lhs = self.meet(
                            self.wimp(a, b),
                            self.res(self.square(self.snot(b)), self.snot(a)),
                        );
                        if self.res(lhs, self.res(a, b)) != top {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "((a²⇒b) ∧ ((∼b)²⇒∼a)) ⇒ (a⇒b) ≠ ⊤".to_string(),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::Potency3 => {
                for a in 0..n {
                    if self.fus(self.square(a), a) != self.square(a) {
                        return LawReport::fail(
                            law.name(),
                            self.names_of(&[a]),
                            format!(
                                "a³ = {} ≠ {} = a²",
                                self.name(self.fus(self.square(a), a)),
                                self.name(self.square(a))
                            ),
                        );
                    }
                }
                for a in 0..n {
                    for b in 0..n {
                        if self.wimp(a, b) == top && self.wimp(a, self.square(b)) != top {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "a²⇒b = ⊤ but a²⇒b² ≠ ⊤".to_string(),
                            );
                        }
                        if self.square(self.fus(a, b)) != self.square(self.meet(a, b)) {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "(a*b)² ≠ (a∧b)²".to_string(),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN1 => self.unary_equation(law, |s, a| {
                (s.bdia(a), s.snot(s.bsq(s.snot(a))), "◆a", "∼■∼a")
            }),
            NelsonLaw::MN2 => {
                for a in 0..n {
                    if self.square(self.bsq(a)) != self.square(self.bsq(self.square(a))) {
                        return LawReport::fail(
                            law.name(),
                            self.names_of(&[a]),
                            "(■a)² ≠ (■a²)²".to_string(),
                        );
                    }
                    if self.square(self.bdia(a)) != self.square(self.bdia(self.square(a))) {
                        return LawReport::fail(
                            law.name(),
                            self.names_of(&[a]),
                            "(◆a)² ≠ (◆a²)²".to_string(),
                        );
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN3 => {
                for a in 0..n {
                    for b in 0..n {
                        let arg = self.meet(self.snot(self.square(a)), b);
                        let lhs = self.square(self.meet(self.bsq(a), self.bdia(arg)));
                        if lhs != bot {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                format!("(■a ∧ ◆(∼a² ∧ b))² = {} ≠ ⊥", self.name(lhs)),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN3Q => {
                for a in 0..n {
                    for b in 0..n {
                        if self.square(self.meet(a, b)) != bot {
                            continue;
                        }
                        let lhs = self.square(self.meet(self.bsq(a), self.bdia(b)));
                        if lhs != bot {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                format!("(a∧b)² = ⊥ but (■a ∧ ◆b)² = {} ≠ ⊥", self.name(lhs)),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN4 => {
                for a in 0..n {
                    for b in 0..n {
                        if self.bsq(self.meet(a, b)) != self.meet(self.bsq(a), self.bsq(b)) {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "■(a∧b) ≠ ■a ∧ ■b".to_string(),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN4D => {
                for a in 0..n {
                    for b in 0..n {
                        if self.bdia(self.join(a, b)) != self.join(self.bdia(a), self.bdia(b)) {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "◆(a∨b) ≠ ◆a ∨ ◆b".to_string(),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN5 => {
                if self.bsq(top) != top {
                    return LawReport::fail(
                        law.name(),
                        self.names_of(&[top]),
                        format!("■⊤ = {} ≠ ⊤", self.name(self.bsq(top))),
                    );
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN6 => {
                for a in 0..n {
                    for b in 0..n {
                        if self.le(self.square(a), b)
                            && !self.le(self.square(self.bsq(a)), self.bsq(b))
                        {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "a² ≤ b but (■a)² ≰ ■b".to_string(),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::MN7 => {
                for a in 0..n {
                    for b in 0..n {
                        if self.le(self.square(self.snot(a)), self.snot(b))
                            && !self.le(
                                self.square(self.snot(self.bsq(a))),
                                self.snot(self.bsq(b)),
                            )
                        {
                            return LawReport::fail(
                                law.name(),
                                self.names_of(&[a, b]),
                                "(∼a)² ≤ ∼b but (∼■a)² ≰ ∼■b".to_string(),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::NormalNelson => self.unary_equation(law, |s, x| {
                (s.nabla(x), s.delta(x), "∇x", "Δx")
            }),
            NelsonLaw::PhiRegular => {
                for x in 0..n {
                    let u = self.square(self.snot(self.square(x)));
                    let lhs = self.join(u, self.square(self.snot(u)));
                    if lhs != top {
                        return LawReport::fail(
                            law.name(),
                            self.names_of(&[x]),
                            format!("(∼x²)² ∨ (∼(∼x²)²)² = {} ≠ ⊤", self.name(lhs)),
                        );
                    }
                }
                LawReport::pass(law.name())
            }
            NelsonLaw::PhiRegularModal => self.unary_equation(law, |s, x| {
                (s.bsq(s.phi(x)), s.phi(s.bsq(x)), "■φx", "φ■x")
            }),
            NelsonLaw::Centered => {
                match (0..n).find(|&x| self.snot(x) == x) {
                    Some(x) => LawReport::pass_with(
                        law.name(),
                        self.names_of(&[x]),
                        "fixed point of ∼".to_string(),
                    ),
                    None => LawReport::fail_plain(law.name(), "no fixed point of ∼"),
                }
            }
        }
    }

    fn unary_equation(
        &self,
        law: NelsonLaw,
        sides: impl Fn(&Self, usize) -> (usize, usize, &'static str, &'static str),
    ) -> LawReport {
        for a in 0..self.len() {
            let (l, r, ln, rn) = sides(self, a);
            if l != r {
                return LawReport::fail(
                    law.name(),
                    self.names_of(&[a]),
                    format!("{ln} = {} ≠ {} = {rn}", self.name(l), self.name(r)),
                );
            }
        }
        LawReport::pass(law.name())
    }

    /// Residuation package: `res` then `RL`.
    pub fn check_residuated(&self) -> Vec<LawReport> {
        vec![self.check_law(NelsonLaw::Res), self.check_law(NelsonLaw::Rl)]
    }

    /// Nelson package: `nelson` (involution + identity) then `potency3`.
    pub fn check_nelson(&self) -> Vec<LawReport> {
        vec![self.check_law(NelsonLaw::Nelson), self.check_law(NelsonLaw::Potency3)]
    }

    /// The quasi-equation form of mN2:
    /// `a² = b²  implies  (■a)² = (■b)² and (◆a)² = (◆b)²`.
    pub fn check_mn2_quasi(&self) -> LawReport {
        for a in 0..self.len() {
            for b in 0..self.len() {
                if self.square(a) != self.square(b) {
                    continue;
                }
                if self.square(self.bsq(a)) != self.square(self.bsq(b))
                    || self.square(self.bdia(a)) != self.square(self.bdia(b))
                {
                    return LawReport::fail(
                        "mN2",
                        self.names_of(&[a, b]),
                        "a² = b² but modal squares differ".to_string(),
                    );
                }
            }
        }
        LawReport::pass("mN2")
    }

    /// The fusion and residual recovered from the weak operations:
    /// `x*y = ∼(x→∼y) ∨ ∼(y→∼x)` and `x⇒y = (x→y) ∧ (∼y→∼x)`, plus
    /// `∼¬x = x²`. Holds on every Nelson lattice.
    pub fn check_derived_ops(&self) -> LawReport {
        for x in 0..self.len() {
            if self.snot(self.wneg(x)) != self.square(x) {
                return LawReport::fail(
                    "derived_ops",
                    self.names_of(&[x]),
                    "∼¬x ≠ x²".to_string(),
                );
            }
            for y in 0..self.len() {
                let fus = self.join(
                    self.snot(self.wimp(x, self.snot(y))),
                    self.snot(self.wimp(y, self.snot(x))),
                );
                if fus != self.fus(x, y) {
                    return LawReport::fail(
                        "derived_ops",
                        self.names_of(&[x, y]),
                        "∼(x→∼y) ∨ ∼(y→∼x) ≠ x*y".to_string(),
                    );
                }
                let res = self.meet(
                    self.wimp(x, y),
                    self.wimp(self.snot(y), self.snot(x)),
                );
                if res != self.res(x, y) {
                    return LawReport::fail(
                        "derived_ops",
                        self.names_of(&[x, y]),
                        "(x→y) ∧ (∼y→∼x) ≠ x⇒y".to_string(),
                    );
                }
            }
        }
        LawReport::pass("derived_ops")
    }

    /// The idempotent elements `{a : a² = a}` in ascending order.
    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.square(a) == a).collect()
    }

    /// Central elements `{x : ∼x = x}`.
    pub fn central_elements(&self) -> ElemSet {
        (0..self.len()).filter(|&x| self.snot(x) == x).collect()
    }

    /// View for isomorphism search. Non-modal comparisons drop the ■/◆
    /// tables so twist outputs and plain fixtures compare as Nelson lattices.
    pub fn op_view(&self, include_modal: bool) -> OpView<'_> {
        let mut v = OpView::of_lattice(&self.lat);
        v.binary.push(&self.fusion);
        v.binary.push(&self.res);
        if include_modal {
            v.unary.push(&self.bsq);
            v.unary.push(&self.bdia);
        }
        v
    }
}

impl std::fmt::Debug for ModalNelsonLattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "ModalNelsonLattice({:?}{})",
            self.poset().names(),
            if self.modal { ", modal" } else { "" }
        )
    }
}

/// The square-equivalence partition `x ≡ y iff x² = y²` together with the
/// verification that it is compatible with `∧`, `∨` and `→`.
#[derive(Debug, Clone)]
pub struct EquivPartition {
    /// One entry per class: the members, ascending. Classes are ordered by
    /// their representative (the common square).
    pub classes: Vec<Vec<usize>>,
    /// `class_of[a]` is the index into `classes`.
    pub class_of: Vec<usize>,
    /// The common square of each class (its least element).
    pub representative: Vec<usize>,
}

/// Partitions by squares and verifies the congruence property for `∧`, `∨`,
/// `→` (and ■/◆ squares when `n` is modal, which is exactly mN2).
///
/// Requires a genuine Nelson lattice; a congruence violation means the input
/// was not one and is reported as a law-precondition failure.
pub fn equiv_partition(n: &ModalNelsonLattice) -> Result<EquivPartition, Error> {
    let mut reps: Vec<usize> = (0..n.len()).map(|a| n.square(a)).collect();
    reps.sort_unstable();
    reps.dedup();
    let class_of: Vec<usize> = (0..n.len())
        .map(|a| reps.binary_search(&n.square(a)).unwrap())
        .collect();
    let mut classes = vec![Vec::new(); reps.len()];
    for a in 0..n.len() {
        classes[class_of[a]].push(a);
    }
    // Each representative square is idempotent and is the minimum of its
    // class (a² ≤ a for every class member a).
    for (k, &r) in reps.iter().enumerate() {
        if n.square(r) != r {
            return Err(Error::LawPrecondition {
                law: "potency3".to_string(),
                witness: n.name(r).to_string(),
            });
        }
        if classes[k].iter().any(|&a| !n.le(r, a)) {
            return Err(Error::internal("square representative is not the class minimum"));
        }
    }
    let same = |x: usize, y: usize| n.square(x) == n.square(y);
    for a in 0..n.len() {
        for b in 0..n.len() {
            if !same(a, b) {
                continue;
            }
            for c in 0..n.len() {
                let compatible = same(n.meet(a, c), n.meet(b, c))
                    && same(n.join(a, c), n.join(b, c))
                    && same(n.wimp(a, c), n.wimp(b, c))
                    && same(n.wimp(c, a), n.wimp(c, b));
                if !compatible {
                    return Err(Error::LawPrecondition {
                        law: "nelson".to_string(),
                        witness: format!(
                            "≡ is not compatible with ∧/∨/→ at ({}, {}, {})",
                            n.name(a),
                            n.name(b),
                            n.name(c)
                        ),
                    });
                }
            }
            if n.modal() {
                let modal_ok = same(n.bsq(a), n.bsq(b)) && same(n.bdia(a), n.bdia(b));
                if !modal_ok {
                    return Err(Error::LawPrecondition {
                        law: "mN2".to_string(),
                        witness: format!("({}, {})", n.name(a), n.name(b)),
                    });
                }
            }
        }
    }
    Ok(EquivPartition { classes, class_of, representative: reps })
}

/// The idempotent-carrier algebra `H*` of a Nelson lattice.
#[derive(Debug, Clone)]
pub struct HStar {
    /// `H*` as a modal Heyting algebra; the modal tables are
    /// `□e = (■e)²`, `◇e = (◆e)²` (identity when the source is non-modal).
    pub algebra: ModalHeytingAlgebra,
    /// Whether the source carried modal structure.
    pub modal: bool,
    /// `H*` index → source element (the idempotents, ascending).
    pub members: Vec<usize>,
}

impl HStar {
    /// Translates a source idempotent to its `H*` index.
    pub fn index_of(&self, source_elem: usize) -> Option<usize> {
        self.members.binary_search(&source_elem).ok()
    }
}

/// Builds `H* = {a : a² = a}` with `a ∧* b = (a∧b)²`, `a ∨* b = (a∨b)²`,
/// `a ⇀* b = (a→b)²`, `□a = (■a)²`, `◇a = (◆a)²`.
///
/// Requires `potency3` (squares must be idempotent) and, when modal, the
/// mN2 equations (the modal tables must descend to squares); both are
/// precondition errors. Everything else is theorem-guaranteed and any
/// violation reports an internal inconsistency.
pub fn h_star(n: &ModalNelsonLattice) -> Result<HStar, Error> {
    let p3 = n.check_law(NelsonLaw::Potency3);
    if !p3.holds {
        return Err(Error::LawPrecondition {
            law: "potency3".to_string(),
            witness: p3.witness.unwrap_or_default().join(", "),
        });
    }
    if n.modal() {
        let mn2 = n.check_law(NelsonLaw::MN2);
        if !mn2.holds {
            return Err(Error::LawPrecondition {
                law: "mN2".to_string(),
                witness: mn2.witness.unwrap_or_default().join(", "),
            });
        }
    }
    let members = n.idempotents();
    let m = members.len();
    let local = |src: usize| -> Result<usize, Error> {
        members
            .binary_search(&src)
            .map_err(|_| Error::internal(format!("{} escaped the idempotents", n.name(src))))
    };
    let meet_star = |a: usize, b: usize| n.square(n.meet(a, b));
    let names: Vec<String> = members.iter().map(|&e| n.name(e).to_string()).collect();
    let mut leq = vec![false; m * m];
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            leq[i * m + j] = meet_star(a, b) == a;
        }
    }
    let poset = FinitePoset::from_leq(names, leq)
        .map_err(|e| Error::internal(format!("H* order is not a poset: {e}")))?;
    let lat = FiniteLattice::from_poset(poset)
        .map_err(|e| Error::internal(format!("H* is not a lattice: {e}")))?;
    // The lattice operations derived from the order must be the squared
    // meets/joins of the source.
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            if lat.meet(i, j) != local(meet_star(a, b))? {
                return Err(Error::internal("H* meet disagrees with (a∧b)²"));
            }
            if lat.join(i, j) != local(n.square(n.join(a, b)))? {
                return Err(Error::internal("H* join disagrees with (a∨b)²"));
            }
        }
    }
    let h = HeytingAlgebra::from_lattice(lat)
        .map_err(|e| Error::internal(format!("H* is not a Heyting algebra: {e}")))?;
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate() {
            if h.imp(i, j) != local(n.square(n.wimp(a, b)))? {
                return Err(Error::internal("H* implication disagrees with (a→b)²"));
            }
        }
    }
    let box_: Vec<usize> = members
        .iter()
        .map(|&e| local(n.square(n.bsq(e))))
        .collect::<Result<_, _>>()?;
    let dia: Vec<usize> = members
        .iter()
        .map(|&e| local(n.square(n.bdia(e))))
        .collect::<Result<_, _>>()?;
    let algebra = ModalHeytingAlgebra::from_tables(h, box_, dia)?;
    Ok(HStar { algebra, modal: n.modal(), members })
}

/// The canonical Boolean filter `F* = {(a ∨ ∼a)² : a}` of `H*`, as a set of
/// `H*` indices.
///
/// Verifies the alternate description `{b² : ∼b ≤ b}`, Boolean-ness, and
/// (when modal) condition (F); all three are theorem-guaranteed for Nelson
/// input, so violations are internal errors.
pub fn f_star(n: &ModalNelsonLattice, hs: &HStar) -> Result<ElemSet, Error> {
    let mut f = ElemSet::EMPTY;
    for a in 0..n.len() {
        let e = n.square(n.join(a, n.snot(a)));
        f.insert(
            hs.index_of(e)
                .ok_or_else(|| Error::internal("(a ∨ ∼a)² escaped the idempotents"))?,
        );
    }
    let mut alt = ElemSet::EMPTY;
    for b in 0..n.len() {
        if n.le(n.snot(b), b) {
            if let Some(i) = hs.index_of(n.square(b)) {
                alt.insert(i);
            } else {
                return Err(Error::internal("b² escaped the idempotents"));
            }
        }
    }
    if alt != f {
        return Err(Error::internal(
            "{(a∨∼a)²} and {b² : ∼b ≤ b} disagree; input is not a Nelson lattice",
        ));
    }
    let h = hs.algebra.heyting();
    h.lat()
        .check_filter(f)
        .map_err(|e| Error::internal(format!("F* is not a filter: {e}")))?;
    if !h.is_boolean_filter(f)? {
        return Err(Error::internal("F* is not a Boolean filter of H*"));
    }
    if hs.modal {
        let cond = hs.algebra.check_filter_condition_f(f)?;
        if !cond.holds {
            return Err(Error::internal("F* violates condition (F) on H*"));
        }
    }
    Ok(f)
}

/// The image of `φ` as an algebra: carrier `{φx}`, lattice operations
/// `u ∧' v = φ(u ∧ v)`, `u ∨' v = φ(u ∨ v)`, fusion and residual restricted
/// unchanged. Returns the algebra and the projection `x ↦ φx` (as an index
/// into the image).
///
/// Requires a Nelson lattice (`res`, `nelson`, `potency3`); the image is then
/// again one and `φ` a surjective homomorphism onto it, both re-verified.
/// Modal tables are carried over exactly when they commute with `φ`
/// (`phi_regular_modal` and `mN1` both hold); otherwise the image is plain.
pub fn phi_image_algebra(
    n: &ModalNelsonLattice,
) -> Result<(ModalNelsonLattice, Vec<usize>), Error> {
    for law in [NelsonLaw::Res, NelsonLaw::Nelson, NelsonLaw::Potency3] {
        let r = n.check_law(law);
        if !r.holds {
            return Err(Error::LawPrecondition {
                law: law.name().to_string(),
                witness: r.witness.unwrap_or_default().join(", "),
            });
        }
    }
    for x in 0..n.len() {
        if n.phi(n.phi(x)) != n.phi(x) {
            return Err(Error::internal("φ is not idempotent"));
        }
    }
    let mut img: Vec<usize> = (0..n.len()).map(|x| n.phi(x)).collect();
    img.sort_unstable();
    img.dedup();
    let k = img.len();
    let local = |v: usize| -> Result<usize, Error> {
        img.binary_search(&v)
            .map_err(|_| Error::internal(format!("{} escaped the φ-image", n.name(v))))
    };
    let mut meet_l = vec![0usize; k * k];
    let mut join_l = vec![0usize; k * k];
    let mut fus_l = vec![0usize; k * k];
    let mut res_l = vec![0usize; k * k];
    for (i, &u) in img.iter().enumerate() {
        for (j, &v) in img.iter().enumerate() {
            meet_l[i * k + j] = local(n.phi(n.meet(u, v)))?;
            join_l[i * k + j] = local(n.phi(n.join(u, v)))?;
            fus_l[i * k + j] = local(n.fus(u, v))?;
            res_l[i * k + j] = local(n.res(u, v))?;
        }
    }
    let names: Vec<String> = img.iter().map(|&u| n.name(u).to_string()).collect();
    let mut leq = vec![false; k * k];
    for i in 0..k {
        for j in 0..k {
            leq[i * k + j] = meet_l[i * k + j] == i;
        }
    }
    let poset = FinitePoset::from_leq(names, leq)
        .map_err(|e| Error::internal(format!("φ-image order is not a poset: {e}")))?;
    let lat = FiniteLattice::from_poset(poset)
        .map_err(|e| Error::internal(format!("φ-image is not a lattice: {e}")))?;
    for i in 0..k {
        for j in 0..k {
            if lat.meet(i, j) != meet_l[i * k + j] || lat.join(i, j) != join_l[i * k + j] {
                return Err(Error::internal("φ-image lattice operations disagree with φ(∧)/φ(∨)"));
            }
        }
    }
    let modal = n.modal()
        && n.check_law(NelsonLaw::PhiRegularModal).holds
        && n.check_law(NelsonLaw::MN1).holds;
    let alg = if modal {
        let bsq_l: Vec<usize> = img.iter().map(|&u| local(n.bsq(u))).collect::<Result<_, _>>()?;
        let bdia_l: Vec<usize> = img.iter().map(|&u| local(n.bdia(u))).collect::<Result<_, _>>()?;
        ModalNelsonLattice::with_modal(lat, fus_l, res_l, bsq_l, bdia_l)?
    } else {
        ModalNelsonLattice::plain(lat, fus_l, res_l)?
    };
    // φ is a homomorphism onto the image.
    let proj: Vec<usize> = (0..n.len()).map(|x| local(n.phi(x))).collect::<Result<_, _>>()?;
    for x in 0..n.len() {
        if alg.snot(proj[x]) != proj[n.snot(x)] {
            return Err(Error::internal("φ does not commute with ∼"));
        }
        if modal && (alg.bsq(proj[x]) != proj[n.bsq(x)] || alg.bdia(proj[x]) != proj[n.bdia(x)]) {
            return Err(Error::internal("φ does not commute with the modal tables"));
        }
        for y in 0..n.len() {
            let ok = alg.meet(proj[x], proj[y]) == proj[n.meet(x, y)]
                && alg.join(proj[x], proj[y]) == proj[n.join(x, y)]
                && alg.fus(proj[x], proj[y]) == proj[n.fus(x, y)]
                && alg.res(proj[x], proj[y]) == proj[n.res(x, y)];
            if !ok {
                return Err(Error::internal("φ is not a homomorphism onto its image"));
            }
        }
    }
    for r in alg.check_residuated().into_iter().chain(alg.check_nelson()) {
        if !r.holds {
            return Err(Error::internal(format!("φ-image law failure: {}", r.render())));
        }
    }
    Ok((alg, proj))
}

/// `∼` is a lattice complement everywhere: `x ∨ ∼x = ⊤` and `x ∧ ∼x = ⊥`.
/// On a Nelson lattice this says the algebra is Boolean.
pub fn check_snot_complemented(n: &ModalNelsonLattice) -> LawReport {
    for x in 0..n.len() {
        if n.join(x, n.snot(x)) != n.top() || n.meet(x, n.snot(x)) != n.bot() {
            return LawReport::fail(
                "snot_complemented",
                vec![n.name(x).to_string()],
                "∼x is not a complement of x".to_string(),
            );
        }
    }
    LawReport::pass("snot_complemented")
}

/// Sendlewski uniqueness: `a² = b²` and `(∼a)² = (∼b)²` force `a = b`.
pub fn check_sendlewski_unique(n: &ModalNelsonLattice) -> LawReport {
    for a in 0..n.len() {
        for b in 0..n.len() {
            if a != b
                && n.square(a) == n.square(b)
                && n.square(n.snot(a)) == n.square(n.snot(b))
            {
                return LawReport::fail(
                    "sendlewski_unique",
                    vec![n.name(a).to_string(), n.name(b).to_string()],
                    "distinct elements share both squares".to_string(),
                );
            }
        }
    }
    LawReport::pass("sendlewski_unique")
}

/// Sendlewski existence over the algebra's own filter `F*`: whenever
/// `(a∧b)² = ⊥` and `a² ∨ b² ∈ F*`, some `c` has `c² = a²`, `(∼c)² = b²`.
pub fn check_sendlewski_exists(n: &ModalNelsonLattice) -> Result<LawReport, Error> {
    let hs = h_star(n)?;
    let f = f_star(n, &hs)?;
    for a in 0..n.len() {
        for b in 0..n.len() {
            if n.square(n.meet(a, b)) != n.bot() {
                continue;
            }
            let join = n.square(n.join(n.square(a), n.square(b)));
            let in_f = hs.index_of(join).map(|i| f.contains(i)).unwrap_or(false);
            if !in_f {
                continue;
            }
            let found = (0..n.len()).any(|c| {
                n.square(c) == n.square(a) && n.square(n.snot(c)) == n.square(b)
            });
            if !found {
                return Ok(LawReport::fail(
                    "sendlewski_exists",
                    vec![n.name(a).to_string(), n.name(b).to_string()],
                    "no element realizes the square pair".to_string(),
                ));
            }
        }
    }
    Ok(LawReport::pass("sendlewski_exists"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::chain_heyting;
    use crate::test_support::{b2_nelson, lukasiewicz};

    #[test]
    fn lukasiewicz_tables_are_residuated() {
        for k in [2, 3, 4] {
            let l = lukasiewicz(k);
            for r in l.check_residuated() {
                assert!(r.holds, "Łukasiewicz {k}: {}", r.render());
            }
        }
    }

    #[test]
    fn boolean_2_passes_everything_non_modal() {
        let b = b2_nelson();
        for law in [NelsonLaw::Res, NelsonLaw::Rl, NelsonLaw::Nelson, NelsonLaw::Potency3, NelsonLaw::NormalNelson, NelsonLaw::PhiRegular] {
            assert!(b.check_law(law).holds, "{law} on Boolean 2");
        }
        let centered = b.check_law(NelsonLaw::Centered);
        assert!(!centered.holds && centered.witness.is_none());
        assert!(b.check_derived_ops().holds);
    }

    #[test]
    fn lukasiewicz_3_is_the_centered_nelson_chain() {
        let l3 = lukasiewicz(3);
        for law in [NelsonLaw::Res, NelsonLaw::Rl, NelsonLaw::Nelson, NelsonLaw::Potency3, NelsonLaw::PhiRegular] {
            assert!(l3.check_law(law).holds, "{law} on Ł3");
        }
        let centered = l3.check_law(NelsonLaw::Centered);
        assert!(centered.holds);
        assert_eq!(centered.witness, Some(vec!["m".to_string()]));
        // Not normal: ∇ and Δ split at the center.
        let r = l3.check_law(NelsonLaw::NormalNelson);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec!["m".to_string()]));
        assert_eq!(l3.nabla(1), 0);
        assert_eq!(l3.delta(1), 2);
    }

    #[test]
    fn lukasiewicz_4_fails_potency_and_nelson_identity() {
        let l4 = lukasiewicz(4);
        assert!(l4.check_law(NelsonLaw::Res).holds);
        assert!(l4.check_law(NelsonLaw::Rl).holds);
        let p = l4.check_law(NelsonLaw::Potency3);
        assert!(!p.holds);
        assert_eq!(p.witness, Some(vec!["m2".to_string()]));
        let nels = l4.check_law(NelsonLaw::Nelson);
        assert!(!nels.holds);
        assert_eq!(nels.witness, Some(vec!["m2".to_string(), "m1".to_string()]));
    }

    #[test]
    fn godel_3_fails_involution() {
        let h = chain_heyting(3);
        let g3 = ModalNelsonLattice::plain(
            h.lat().clone(),
            h.lat().meet_table().to_vec(),
            h.imp_table().to_vec(),
        )
        .unwrap();
        assert!(g3.check_law(NelsonLaw::Res).holds);
        let r = g3.check_law(NelsonLaw::Nelson);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec!["m".to_string()]));
    }

    #[test]
    fn tampered_unit_fails_monoid_law() {
        let h = crate::catalog::boolean_heyting(1);
        let bad = ModalNelsonLattice::plain(
            h.lat().clone(),
            vec![0, 0, 0, 0],
            h.imp_table().to_vec(),
        )
        .unwrap();
        let r = bad.check_law(NelsonLaw::Res);
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec!["⊤".to_string()]));
    }

    #[test]
    fn equiv_partition_of_lukasiewicz_3() {
        let l3 = lukasiewicz(3);
        let p = equiv_partition(&l3).unwrap();
        assert_eq!(p.classes, vec![vec![0, 1], vec![2]]);
        assert_eq!(p.representative, vec![0, 2]);
        assert_eq!(p.class_of, vec![0, 0, 1]);
    }

    #[test]
    fn h_star_and_f_star_of_small_chains() {
        let l3 = lukasiewicz(3);
        let hs = h_star(&l3).unwrap();
        assert_eq!(hs.members, vec![0, 2]);
        assert_eq!(hs.algebra.len(), 2);
        assert!(!hs.modal);
        // Centered chain: F* is the improper filter of H*.
        let f = f_star(&l3, &hs).unwrap();
        assert_eq!(f, ElemSet::full(2));

        let b2 = b2_nelson();
        let hs2 = h_star(&b2).unwrap();
        let f2 = f_star(&b2, &hs2).unwrap();
        assert_eq!(f2, ElemSet::singleton(1));
        assert_eq!(hs2.algebra.heyting().dense_set(), f2);
    }

    #[test]
    fn h_star_requires_potency() {
        let l4 = lukasiewicz(4);
        assert!(matches!(
            h_star(&l4),
            Err(Error::LawPrecondition { law, .. }) if law == "potency3"
        ));
    }

    #[test]
    fn sendlewski_checks_on_fixtures() {
        for n in [b2_nelson(), lukasiewicz(3)] {
            assert!(check_sendlewski_unique(&n).holds);
            assert!(check_sendlewski_exists(&n).unwrap().holds);
        }
    }

    #[test]
    fn phi_image_of_small_fixtures() {
        // φ is the identity on Ł3, so the image is the whole chain.
        let l3 = lukasiewicz(3);
        let (img, proj) = phi_image_algebra(&l3).unwrap();
        assert_eq!(img.len(), 3);
        assert_eq!(proj, vec![0, 1, 2]);
        assert!(!check_snot_complemented(&img).holds);

        let b2 = b2_nelson();
        let (img2, proj2) = phi_image_algebra(&b2).unwrap();
        assert_eq!(img2.len(), 2);
        assert_eq!(proj2, vec![0, 1]);
        assert!(check_snot_complemented(&img2).holds);
    }

    #[test]
    fn snot_complement_witness() {
        let r = check_snot_complemented(&lukasiewicz(3));
        assert!(!r.holds);
        assert_eq!(r.witness, Some(vec!["m".to_string()]));
    }

    #[test]
    fn law_names_round_trip() {
        for law in NELSON_LAWS {
            assert_eq!(NelsonLaw::from_name(law.name()).unwrap(), law);
        }
        assert!(NelsonLaw::from_name("mH").is_err());
    }
}
