//! Finite neighbourhood duality for modal Heyting algebras.
//!
//! Points of the dual are prime filters, ordered by inclusion; in a finite
//! distributive lattice these are exactly the up-sets of join-irreducible
//! elements, so the spectrum is as small as the algebra's irreducible core.
//! The operators travel as neighbourhood assignments: `η₁(P)` holds the
//! `σ`-images forced by `□`, `η₂(P)` the down-sets tolerated by `◇` (stored
//! positively). The abstract side is [`ModalSpace`]/[`MNESpace`] with the
//! checkable laws `me1`–`me3`, `c_subset_max` and `F_star`; both round
//! trips (`σ` on algebras, `ε` on spaces) are built and re-verified here.

use crate::error::Error;
use crate::heyting::HeytingAlgebra;
use crate::lattice::FiniteLattice;
use crate::modal::{ModalHeytingAlgebra, ModalLaw};
use crate::poset::FinitePoset;
use crate::report::LawReport;
use crate::set::{all_subsets, ElemSet, MAX_ELEMENTS};

/// A finite poset of points with neighbourhood assignments for the two
/// operators: `eta1[x]` is a set of up-sets, `eta2[x]` a set of down-sets
/// (both canonically sorted). Structure only; the `me*` laws are checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModalSpace {
    pub poset: FinitePoset,
    pub eta1: Vec<Vec<ElemSet>>,
    pub eta2: Vec<Vec<ElemSet>>,
}

/// A modal space with a distinguished closed set of points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MNESpace {
    pub space: ModalSpace,
    pub closed: ElemSet,
}

impl ModalSpace {
    /// Validates ranges and lengths and canonicalizes the neighbourhood
    /// lists (sorted by (size, mask), deduplicated). Membership of up-sets
    /// and down-sets is the law `me1`, not a construction error.
    pub fn new(
        poset: FinitePoset,
        mut eta1: Vec<Vec<ElemSet>>,
        mut eta2: Vec<Vec<ElemSet>>,
    ) -> Result<ModalSpace, Error> {
        let n = poset.len();
        for (eta, table) in [(&mut eta1, "eta1"), (&mut eta2, "eta2")] {
            if eta.len() != n {
                let missing = if n == 0 { String::new() } else { poset.name(eta.len().min(n - 1)).to_string() };
                return Err(Error::PartialTable { table: table.to_string(), name: missing });
            }
            for (x, sets) in eta.iter_mut().enumerate() {
                if sets.iter().any(|s| !s.is_subset(ElemSet::full(n))) {
                    return Err(Error::TableRange {
                        table: table.to_string(),
                        name: poset.name(x).to_string(),
                    });
                }
                sets.sort_by_key(|s| (s.len(), *s));
                sets.dedup();
            }
        }
        Ok(ModalSpace { poset, eta1, eta2 })
    }

    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    /// Checks one of the three neighbourhood laws (`me1`, `me2`, `me3`).
    pub fn check_law(&self, law: SpaceLaw) -> LawReport {
        check_me(self, law)
    }
}

impl MNESpace {
    /// Checks any of the five space laws; the closed-set laws are vacuous
    /// when `closed` is empty.
    pub fn check_law(&self, law: SpaceLaw) -> LawReport {
        let s = &self.space;
        let p = &s.poset;
        match law {
            SpaceLaw::Me1 | SpaceLaw::Me2 | SpaceLaw::Me3 => check_me(s, law),
            SpaceLaw::CSubsetMax => {
                let max = p.maximals();
                match self.closed.minus(max).iter().next() {
                    None => LawReport::pass(law.name()),
                    Some(x) => LawReport::fail(
                        law.name(),
                        vec![p.name(x).to_string()],
                        "closed point is not maximal".to_string(),
                    ),
                }
            }
            SpaceLaw::FStar => {
                let ups = p.all_upsets();
                for &u in &ups {
                    for &v in &ups {
                        if !u.inter(v).is_empty() || !self.closed.is_subset(u.union(v)) {
                            continue;
                        }
                        let cover = box_eta(s, u).union(dia_eta(s, v));
                        if let Some(x) = self.closed.minus(cover).iter().next() {
                            return LawReport::fail(
                                law.name(),
                                vec![p.name(x).to_string()],
                                format!(
                                    "closed point escapes □η{} ∪ ◇η{}",
                                    braces(p, u),
                                    braces(p, v)
                                ),
                            );
                        }
                    }
                }
                LawReport::pass(law.name())
            }
        }
    }
}

/// Stable law names for modal spaces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceLaw {
    /// Every `η₁` member is an up-set, every `η₂` member a down-set.
    Me1,
    /// `□η` and `◇η` send up-sets to up-sets.
    Me2,
    /// `U ∈ η₁(x)` forces `↓U ∪ (X∖V) ∈ η₂(x)` for every up-set `V`.
    Me3,
    /// The closed set consists of maximal points.
    CSubsetMax,
    /// Disjoint up-set covers of the closed set transfer to `□η`/`◇η`.
    FStar,
}

pub const ME_LAWS: [SpaceLaw; 3] = [SpaceLaw::Me1, SpaceLaw::Me2, SpaceLaw::Me3];
pub const MNE_LAWS: [SpaceLaw; 5] = [
    SpaceLaw::Me1,
    SpaceLaw::Me2,
    SpaceLaw::Me3,
    SpaceLaw::CSubsetMax,
    SpaceLaw::FStar,
];

impl SpaceLaw {
    pub fn name(self) -> &'static str {
        match self {
            SpaceLaw::Me1 => "me1",
            SpaceLaw::Me2 => "me2",
            SpaceLaw::Me3 => "me3",
            SpaceLaw::CSubsetMax => "c_subset_max",
            SpaceLaw::FStar => "F_star",
        }
    }

    pub fn from_name(name: &str) -> Result<SpaceLaw, Error> {
        MNE_LAWS
            .into_iter()
            .find(|l| l.name() == name)
            .ok_or_else(|| Error::UnknownLaw { name: name.to_string() })
    }
}

impl std::fmt::Display for SpaceLaw {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

fn braces(p: &FinitePoset, s: ElemSet) -> String {
    format!("{{{}}}", p.render_set(s).join(","))
}

fn check_me(s: &ModalSpace, law: SpaceLaw) -> LawReport {
    let p = &s.poset;
    match law {
        SpaceLaw::Me1 => {
            for x in 0..s.len() {
                if let Some(u) = s.eta1[x].iter().find(|&&u| !p.is_upset(u)) {
                    return LawReport::fail(
                        law.name(),
                        vec![p.name(x).to_string()],
                        format!("η₁ member {} is not an up-set", braces(p, *u)),
                    );
                }
                if let Some(d) = s.eta2[x].iter().find(|&&d| !p.is_downset(d)) {
                    return LawReport::fail(
                        law.name(),
                        vec![p.name(x).to_string()],
                        format!("η₂ member {} is not a down-set", braces(p, *d)),
                    );
                }
            }
            LawReport::pass(law.name())
        }
        SpaceLaw::Me2 => {
            for u in p.all_upsets() {
                if !p.is_upset(box_eta(s, u)) {
                    return LawReport::fail(
                        law.name(),
                        p.render_set(u),
                        "□η image is not an up-set".to_string(),
                    );
                }
                if !p.is_upset(dia_eta(s, u)) {
                    return LawReport::fail(
                        law.name(),
                        p.render_set(u),
                        "◇η image is not an up-set".to_string(),
                    );
                }
            }
            LawReport::pass(law.name())
        }
        SpaceLaw::Me3 => {
            let ups = p.all_upsets();
            for x in 0..s.len() {
                for &u in &s.eta1[x] {
                    for &v in &ups {
                        let need = p.downset(u).union(v.complement(s.len()));
                        if !s.eta2[x].contains(&need) {
                            return LawReport::fail(
                                law.name(),
                                vec![p.name(x).to_string()],
                                format!(
                                    "↓{} ∪ (X∖{}) is missing from η₂",
                                    braces(p, u),
                                    braces(p, v)
                                ),
                            );
                        }
                    }
                }
            }
            LawReport::pass(law.name())
        }
        SpaceLaw::CSubsetMax | SpaceLaw::FStar => {
            unreachable!("closed-set laws are checked on MNESpace")
        }
    }
}

/// `□η(U) = {x : U ∈ η₁(x)}`.
pub fn box_eta(s: &ModalSpace, u: ElemSet) -> ElemSet {
    (0..s.len()).filter(|&x| s.eta1[x].contains(&u)).collect()
}

/// `◇η(U) = {x : X∖U ∉ η₂(x)}`.
pub fn dia_eta(s: &ModalSpace, u: ElemSet) -> ElemSet {
    let co = u.complement(s.len());
    (0..s.len()).filter(|&x| !s.eta2[x].contains(&co)).collect()
}

/// Prime filters by exhaustive scan: proper filters `F` with
/// `a ∨ b ∈ F ⟹ a ∈ F or b ∈ F`. Exponential; for cross-checking only.
pub fn prime_filters_oracle(lat: &FiniteLattice) -> Vec<ElemSet> {
    assert!(lat.len() <= 16, "oracle scans all subsets");
    let mut out = Vec::new();
    for s in all_subsets(lat.len()) {
        if s.is_empty() || s == ElemSet::full(lat.len()) || lat.check_filter(s).is_err() {
            continue;
        }
        let prime = (0..lat.len()).all(|a| {
            (0..lat.len()).all(|b| {
                !s.contains(lat.join(a, b)) || s.contains(a) || s.contains(b)
            })
        });
        if prime {
            out.push(s);
        }
    }
    out.sort_by_key(|s| (s.len(), *s));
    out
}

/// The dual space of a modal Heyting algebra, with its bookkeeping back to
/// the base: which join-irreducible generates each point, and each point's
/// prime filter.
#[derive(Debug, Clone)]
pub struct DualSpace {
    pub space: ModalSpace,
    /// Point → generating join-irreducible of the base.
    pub generators: Vec<usize>,
    /// Point → its prime filter, as a base subset.
    pub filters: Vec<ElemSet>,
}

impl DualSpace {
    /// `σ(a) = {P : a ∈ P}`.
    pub fn sigma(&self, a: usize) -> ElemSet {
        (0..self.filters.len()).filter(|&p| self.filters[p].contains(a)).collect()
    }

    /// `C(F) = {P : F ⊆ P}`: the closed set of a base filter.
    pub fn closed_of_filter(&self, f: ElemSet) -> ElemSet {
        (0..self.filters.len()).filter(|&p| f.is_subset(self.filters[p])).collect()
    }
}

/// Builds the dual space: points are the prime filters (up-sets of
/// join-irreducibles) in (size, mask) order, named by their generators;
/// `η₁(P) = {σ(a) : □a ∈ P}` and `η₂(P)` is everything except the
/// complements `X∖σ(a)` for `◇a ∈ P`.
///
/// `me1` and `me2` always hold for a dual and are re-verified; `me3` holds
/// exactly when the base satisfies the disjointness law `mH`, and that
/// agreement is re-verified too.
pub fn dual_space(m: &ModalHeytingAlgebra) -> Result<DualSpace, Error> {
    let h = m.heyting();
    let lat = h.lat();
    let mut points: Vec<(ElemSet, usize)> = lat
        .join_irreducibles()
        .iter()
        .map(|j| (lat.poset().upset(ElemSet::singleton(j)), j))
        .collect();
    points.sort_by_key(|&(f, _)| (f.len(), f));
    let filters: Vec<ElemSet> = points.iter().map(|&(f, _)| f).collect();
    let generators: Vec<usize> = points.iter().map(|&(_, j)| j).collect();
    let k = points.len();
    let names: Vec<String> = generators.iter().map(|&j| lat.name(j).to_string()).collect();
    let mut leq = vec![false; k * k];
    for p in 0..k {
        for q in 0..k {
            leq[p * k + q] = filters[p].is_subset(filters[q]);
        }
    }
    let poset = FinitePoset::from_leq(names, leq)
        .map_err(|e| Error::internal(format!("spectrum is not a poset: {e}")))?;

    let sigma = |a: usize| -> ElemSet {
        (0..k).filter(|&p| filters[p].contains(a)).collect()
    };
    let mut eta1: Vec<Vec<ElemSet>> = Vec::with_capacity(k);
    let mut eta2: Vec<Vec<ElemSet>> = Vec::with_capacity(k);
    let downs = poset.all_downsets();
    for f in &filters {
        let mut n1: Vec<ElemSet> = (0..lat.len())
            .filter(|&a| f.contains(m.box_(a)))
            .map(sigma)
            .collect();
        n1.sort_by_key(|s| (s.len(), *s));
        n1.dedup();
        eta1.push(n1);
        let excluded: Vec<ElemSet> = (0..lat.len())
            .filter(|&a| f.contains(m.dia(a)))
            .map(|a| sigma(a).complement(k))
            .collect();
        let n2: Vec<ElemSet> = downs.iter().copied().filter(|d| !excluded.contains(d)).collect();
        eta2.push(n2);
    }
    let space = ModalSpace::new(poset, eta1, eta2)?;
    for law in [SpaceLaw::Me1, SpaceLaw::Me2] {
        let r = space.check_law(law);
        if !r.holds {
            return Err(Error::internal(format!("dual space law failure: {}", r.render())));
        }
    }
    if space.check_law(SpaceLaw::Me3).holds != m.check_law(ModalLaw::MH).holds {
        return Err(Error::internal(
            "me3 on the dual disagrees with the disjointness law on the base",
        ));
    }
    Ok(DualSpace { space, generators, filters })
}

/// The algebra of a modal space: all up-sets under inclusion, with
/// `U ⇀ V = {x : ↑x ∩ U ⊆ V}`, `□ = □η`, `◇ = ◇η`. Elements are returned
/// alongside (index → up-set).
///
/// The operator tables require `me2` (images must be up-sets); the lattice
/// facts are theorems and re-verified. When all three `me` laws hold the
/// result is re-verified to satisfy the disjointness law.
pub fn algebra_of_space(s: &ModalSpace) -> Result<SpaceAlgebra, Error> {
    let p = &s.poset;
    if p.len() > 16 {
        return Err(Error::TooManyElements { n: p.len() });
    }
    let elements = p.all_upsets();
    if elements.len() > MAX_ELEMENTS {
        return Err(Error::TooManyElements { n: elements.len() });
    }
    let n = elements.len();
    let index = |u: ElemSet| -> Option<usize> { elements.iter().position(|&e| e == u) };
    let names: Vec<String> = elements.iter().map(|&u| braces(p, u)).collect();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = elements[a].is_subset(elements[b]);
        }
    }
    let poset = FinitePoset::from_leq(names, leq)
        .map_err(|e| Error::internal(format!("up-set order is not a poset: {e}")))?;
    let lat = FiniteLattice::from_poset(poset)
        .map_err(|e| Error::internal(format!("up-sets do not form a lattice: {e}")))?;
    for a in 0..n {
        for b in 0..n {
            let meet = index(elements[a].inter(elements[b]))
                .ok_or_else(|| Error::internal("intersection of up-sets escaped"))?;
            let join = index(elements[a].union(elements[b]))
                .ok_or_else(|| Error::internal("union of up-sets escaped"))?;
            if lat.meet(a, b) != meet || lat.join(a, b) != join {
                return Err(Error::internal("up-set lattice is not ∩/∪"));
            }
        }
    }
    let h = HeytingAlgebra::from_lattice(lat)
        .map_err(|e| Error::internal(format!("up-set lattice is not Heyting: {e}")))?;
    for a in 0..n {
        for b in 0..n {
            let imp: ElemSet = (0..p.len())
                .filter(|&x| p.up(x).inter(elements[a]).is_subset(elements[b]))
                .collect();
            if h.imp(a, b) != index(imp).ok_or_else(|| Error::internal("⇀ escaped the up-sets"))? {
                return Err(Error::internal("up-set implication is not ↑x ∩ U ⊆ V"));
            }
        }
    }
    let me2_fail = |u: ElemSet| Error::LawPrecondition {
        law: SpaceLaw::Me2.name().to_string(),
        witness: braces(p, u),
    };
    let box_: Vec<usize> = elements
        .iter()
        .map(|&u| index(box_eta(s, u)).ok_or_else(|| me2_fail(u)))
        .collect::<Result<_, _>>()?;
    let dia: Vec<usize> = elements
        .iter()
        .map(|&u| index(dia_eta(s, u)).ok_or_else(|| me2_fail(u)))
        .collect::<Result<_, _>>()?;
    let algebra = ModalHeytingAlgebra::from_tables(h, box_, dia)?;
    if ME_LAWS.iter().all(|&l| check_me(s, l).holds) {
        let mh = algebra.check_law(ModalLaw::MH);
        if !mh.holds {
            return Err(Error::internal(format!(
                "algebra of a lawful space fails the disjointness law: {}",
                mh.render()
            )));
        }
    }
    Ok(SpaceAlgebra { algebra, elements })
}

/// The up-set algebra of a space, with its carrier order.
#[derive(Debug, Clone)]
pub struct SpaceAlgebra {
    pub algebra: ModalHeytingAlgebra,
    /// Algebra index → up-set of points.
    pub elements: Vec<ElemSet>,
}

/// `F_C = {U : C ⊆ U}` as a filter of the up-set algebra.
pub fn filter_of_closed(elements: &[ElemSet], c: ElemSet) -> ElemSet {
    (0..elements.len()).filter(|&i| c.is_subset(elements[i])).collect()
}

/// Algebra round trip `a ↦ σ(a)`: the base, its dual, the dual's up-set
/// algebra, and the verified isomorphism between base and double dual.
#[derive(Debug, Clone)]
pub struct AlgebraRoundTrip {
    pub dual: DualSpace,
    pub algebra: ModalHeytingAlgebra,
    pub elements: Vec<ElemSet>,
    /// Base index → up-set algebra index; a verified isomorphism.
    pub map: Vec<usize>,
}

pub fn algebra_round_trip(m: &ModalHeytingAlgebra) -> Result<AlgebraRoundTrip, Error> {
    let dual = dual_space(m)?;
    let sa = algebra_of_space(&dual.space)?;
    if sa.algebra.len() != m.len() {
        return Err(Error::internal(format!(
            "double dual has {} elements, base has {}",
            sa.algebra.len(),
            m.len()
        )));
    }
    let map: Vec<usize> = (0..m.len())
        .map(|a| {
            sa.elements
                .iter()
                .position(|&u| u == dual.sigma(a))
                .ok_or_else(|| Error::internal("σ(a) is not an up-set of the spectrum"))
        })
        .collect::<Result<_, _>>()?;
    let mut seen = vec![false; m.len()];
    for &i in &map {
        seen[i] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::internal("σ is not a bijection onto the up-sets"));
    }
    crate::twist::check_modal_heyting_hom(
        m,
        ElemSet::EMPTY,
        &sa.algebra,
        ElemSet::EMPTY,
        &map,
    )
    .map_err(|e| Error::internal(format!("σ is not a homomorphism: {e}")))?;
    Ok(AlgebraRoundTrip { dual, algebra: sa.algebra, elements: sa.elements, map })
}

/// Space round trip `x ↦ ε(x) = {U : x ∈ U}`: the up-set algebra, its dual,
/// and the verified order isomorphism with `η`-transport.
#[derive(Debug, Clone)]
pub struct SpaceRoundTrip {
    pub algebra: ModalHeytingAlgebra,
    pub elements: Vec<ElemSet>,
    pub dual2: DualSpace,
    /// Point → double-dual point; a verified homeomorphism.
    pub map: Vec<usize>,
}

pub fn space_round_trip(s: &ModalSpace) -> Result<SpaceRoundTrip, Error> {
    for law in ME_LAWS {
        let r = check_me(s, law);
        if !r.holds {
            return Err(Error::LawPrecondition {
                law: r.law.clone(),
                witness: r.witness.clone().unwrap_or_default().join(", "),
            });
        }
    }
    let sa = algebra_of_space(s)?;
    let dual2 = dual_space(&sa.algebra)?;
    if dual2.space.len() != s.len() {
        return Err(Error::internal(format!(
            "double dual has {} points, space has {}",
            dual2.space.len(),
            s.len()
        )));
    }
    let map: Vec<usize> = (0..s.len())
        .map(|x| {
            let eps: ElemSet = (0..sa.elements.len())
                .filter(|&i| sa.elements[i].contains(x))
                .collect();
            (0..dual2.space.len())
                .position(|q| dual2.filters[q] == eps)
                .ok_or_else(|| Error::internal("ε(x) is not a point of the double dual"))
        })
        .collect::<Result<_, _>>()?;
    let mut seen = vec![false; s.len()];
    for &q in &map {
        seen[q] = true;
    }
    if seen.iter().any(|&b| !b) {
        return Err(Error::internal("ε is not a bijection"));
    }
    for x in 0..s.len() {
        for y in 0..s.len() {
            if s.poset.le(x, y) != dual2.space.poset.le(map[x], map[y]) {
                return Err(Error::internal("ε does not preserve the order"));
            }
        }
    }
    let transport = |set: ElemSet| -> ElemSet { set.iter().map(|p| map[p]).collect() };
    for (x, &mx) in map.iter().enumerate() {
        let mut n1: Vec<ElemSet> = s.eta1[x].iter().map(|&u| transport(u)).collect();
        n1.sort_by_key(|s| (s.len(), *s));
        if n1 != dual2.space.eta1[mx] {
            return Err(Error::internal("ε does not transport η₁"));
        }
        let mut n2: Vec<ElemSet> = s.eta2[x].iter().map(|&d| transport(d)).collect();
        n2.sort_by_key(|s| (s.len(), *s));
        if n2 != dual2.space.eta2[mx] {
            return Err(Error::internal("ε does not transport η₂"));
        }
    }
    Ok(SpaceRoundTrip { algebra: sa.algebra, elements: sa.elements, dual2, map })
}

/// Dual of a base filter: the dual space plus `C(F)` as an MNE space.
/// When `f` is Boolean the closed set is re-verified to sit inside the
/// maximal points.
pub fn mne_dual(m: &ModalHeytingAlgebra, f: ElemSet) -> Result<(DualSpace, MNESpace), Error> {
    m.heyting().lat().check_filter(f)?;
    let dual = dual_space(m)?;
    let closed = dual.closed_of_filter(f);
    let mne = MNESpace { space: dual.space.clone(), closed };
    if m.heyting().is_boolean_filter(f)? {
        let r = mne.check_law(SpaceLaw::CSubsetMax);
        if !r.holds {
            return Err(Error::internal(format!(
                "closed set of a Boolean filter leaves the maximal points: {}",
                r.render()
            )));
        }
    }
    Ok((dual, mne))
}

/// Dual of a homomorphism `h : M₁ → M₂`: the point map `X(M₂) → X(M₁)`,
/// `Q ↦ h⁻¹[Q]`. Requires `h` to be a bounded-lattice homomorphism (the
/// preimage of a prime filter is then prime); anything else is reported as
/// an inconsistency.
pub fn dual_of_hom(
    d1: &DualSpace,
    d2: &DualSpace,
    h: &[usize],
) -> Result<Vec<usize>, Error> {
    (0..d2.filters.len())
        .map(|q| {
            let pre: ElemSet = (0..h.len()).filter(|&a| d2.filters[q].contains(h[a])).collect();
            (0..d1.filters.len())
                .position(|p| d1.filters[p] == pre)
                .ok_or_else(|| Error::internal("preimage of a prime filter is not prime"))
        })
        .collect()
}

/// Algebra map of a point map `f : X₂ → X₁`: `U ↦ f⁻¹[U]` between the
/// up-set algebras. Fails if some preimage is not an up-set of `X₂`
/// (`f` not order-preserving).
pub fn hom_of_map(
    sa1: &SpaceAlgebra,
    sa2: &SpaceAlgebra,
    f: &[usize],
) -> Result<Vec<usize>, Error> {
    sa1.elements
        .iter()
        .map(|&u| {
            let pre: ElemSet = (0..f.len()).filter(|&x| u.contains(f[x])).collect();
            sa2.elements
                .iter()
                .position(|&v| v == pre)
                .ok_or_else(|| Error::internal("preimage of an up-set is not an up-set"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain_heyting, kite_modal_heyting};
    use crate::test_support::boolean;

    fn c3_id() -> ModalHeytingAlgebra {
        ModalHeytingAlgebra::identity_modal(chain_heyting(3))
    }

    #[test]
    fn prime_filters_match_the_oracle() {
        for m in [
            c3_id(),
            kite_modal_heyting(),
            ModalHeytingAlgebra::identity_modal(boolean(2)),
        ] {
            let d = dual_space(&m).unwrap();
            let mut filters = d.filters.clone();
            filters.sort_by_key(|s| (s.len(), *s));
            assert_eq!(filters, prime_filters_oracle(m.heyting().lat()));
        }
    }

    #[test]
    fn chain_spectrum_shape() {
        let d = dual_space(&c3_id()).unwrap();
        assert_eq!(d.space.poset.names(), &["⊤".to_string(), "m".to_string()]);
        // ↑⊤ ⊂ ↑m: the point generated by ⊤ sits below the one generated by m.
        assert!(d.space.poset.le(0, 1));
        assert_eq!(d.sigma(0), ElemSet::EMPTY);
        assert_eq!(d.sigma(1), ElemSet::singleton(1));
        assert_eq!(d.sigma(2), ElemSet::full(2));
        for law in ME_LAWS {
            assert!(d.space.check_law(law).holds);
        }
    }

    #[test]
    fn kite_spectrum_shape() {
        let d = dual_space(&kite_modal_heyting()).unwrap();
        assert_eq!(d.space.poset.names(), &["a".to_string(), "c".to_string(), "b".to_string()]);
        assert!(d.space.poset.le(0, 2) && d.space.poset.le(1, 2));
        assert!(!d.space.poset.le(0, 1) && !d.space.poset.le(1, 0));
        // Maximal point ⟺ the dense filter is contained.
        let dense = kite_modal_heyting().heyting().dense_set();
        let max = d.space.poset.maximals();
        for p in 0..3 {
            assert_eq!(max.contains(p), dense.is_subset(d.filters[p]));
        }
    }

    #[test]
    fn algebra_round_trips() {
        for m in [
            c3_id(),
            kite_modal_heyting(),
            ModalHeytingAlgebra::identity_modal(boolean(2)),
            ModalHeytingAlgebra::identity_modal(chain_heyting(1)),
        ] {
            let rt = algebra_round_trip(&m).unwrap();
            assert_eq!(rt.algebra.len(), m.len());
        }
        // σ is an isomorphism even when the base fails the disjointness law;
        // its dual then fails me3.
        let bad = ModalHeytingAlgebra::from_tables(
            chain_heyting(3),
            vec![0, 1, 2],
            vec![2, 2, 2],
        )
        .unwrap();
        let rt = algebra_round_trip(&bad).unwrap();
        assert!(!rt.dual.space.check_law(SpaceLaw::Me3).holds);
    }

    #[test]
    fn space_round_trips() {
        for m in [c3_id(), kite_modal_heyting()] {
            let d = dual_space(&m).unwrap();
            let rt = space_round_trip(&d.space).unwrap();
            assert_eq!(rt.dual2.space.len(), d.space.len());
        }
    }

    #[test]
    fn closed_sets_and_filters_correspond() {
        let m = c3_id();
        let d = dual_space(&m).unwrap();
        let sa = algebra_of_space(&d.space).unwrap();
        for f in m.heyting().lat().filters() {
            let c = d.closed_of_filter(f);
            // c ∈ F ⟺ C(F) ⊆ σ(c).
            for a in 0..m.len() {
                assert_eq!(f.contains(a), c.is_subset(d.sigma(a)));
            }
            // σ[F] = F_{C(F)} through the double-dual identification.
            let rt = algebra_round_trip(&m).unwrap();
            let sigma_f: ElemSet = f.iter().map(|a| rt.map[a]).collect();
            assert_eq!(sigma_f, filter_of_closed(&rt.elements, c));
        }
        // ε[C] = C(F_C) for every closed (= up-closed) set of points.
        let rt = space_round_trip(&d.space).unwrap();
        for c in d.space.poset.all_upsets() {
            let eps_c: ElemSet = c.iter().map(|x| rt.map[x]).collect();
            let f_c = filter_of_closed(&sa.elements, c);
            assert_eq!(eps_c, rt.dual2.closed_of_filter(f_c));
        }
    }

    #[test]
    fn filter_condition_matches_f_star_on_the_dual() {
        let d_filter = ElemSet::from_iter([1usize, 2]);
        // Identity operators: both sides hold.
        let (_, mne) = mne_dual(&c3_id(), d_filter).unwrap();
        assert!(c3_id().check_filter_condition_f(d_filter).unwrap().holds);
        assert!(mne.check_law(SpaceLaw::FStar).holds);
        assert!(mne.check_law(SpaceLaw::CSubsetMax).holds);
        assert_eq!(mne.closed, ElemSet::singleton(1));
        // Constant-⊥ operators: both sides fail.
        let bot = ModalHeytingAlgebra::from_tables(
            chain_heyting(3),
            vec![0, 0, 0],
            vec![0, 0, 0],
        )
        .unwrap();
        let (_, mne_bot) = mne_dual(&bot, d_filter).unwrap();
        assert!(!bot.check_filter_condition_f(d_filter).unwrap().holds);
        assert!(!mne_bot.check_law(SpaceLaw::FStar).holds);
        // Improper filter: the closed set is empty and everything is vacuous.
        let (_, mne_full) = mne_dual(&c3_id(), ElemSet::full(3)).unwrap();
        assert_eq!(mne_full.closed, ElemSet::EMPTY);
        assert!(mne_full.check_law(SpaceLaw::FStar).holds);
    }

    #[test]
    fn hom_duality_round_trip() {
        let b2 = ModalHeytingAlgebra::identity_modal(boolean(1));
        let c3 = c3_id();
        let h = vec![0usize, 2];
        crate::twist::check_modal_heyting_hom(&b2, ElemSet::EMPTY, &c3, ElemSet::EMPTY, &h)
            .unwrap();
        let rt1 = algebra_round_trip(&b2).unwrap();
        let rt2 = algebra_round_trip(&c3).unwrap();
        let point_map = dual_of_hom(&rt1.dual, &rt2.dual, &h).unwrap();
        assert_eq!(point_map, vec![0, 0]);
        let sa1 = SpaceAlgebra { algebra: rt1.algebra.clone(), elements: rt1.elements.clone() };
        let sa2 = SpaceAlgebra { algebra: rt2.algebra.clone(), elements: rt2.elements.clone() };
        let lifted = hom_of_map(&sa1, &sa2, &point_map).unwrap();
        // The square with the two σ isomorphisms commutes.
        for a in 0..b2.len() {
            assert_eq!(lifted[rt1.map[a]], rt2.map[h[a]]);
        }
    }

    #[test]
    fn me_laws_fail_on_tampered_spaces() {
        let d = dual_space(&c3_id()).unwrap();
        // Drop a required down-set from η₂ at the m-point: me3 breaks.
        let mut t1 = d.space.clone();
        assert!(!t1.eta1[1].is_empty());
        let full = ElemSet::full(t1.len());
        t1.eta2[1].retain(|&s| s != full);
        assert!(!t1.check_law(SpaceLaw::Me3).holds);
        // {⊤-point} is not an up-set (it sits below the m-point); putting it
        // into η₁ breaks me1.
        let mut t2 = d.space.clone();
        let bad = ElemSet::singleton(0);
        assert!(!t2.poset.is_upset(bad));
        t2.eta1[0].push(bad);
        assert!(!t2.check_law(SpaceLaw::Me1).holds);
        // Remove the full set from η₁ at the m-point: □η(X) shrinks to the
        // non-up-set {⊤-point} and me2 breaks.
        let mut t3 = d.space.clone();
        t3.eta1[1].retain(|&s| s != full);
        assert!(!t3.check_law(SpaceLaw::Me2).holds);
    }
}
