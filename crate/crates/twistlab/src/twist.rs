//! The twist construction `R(M, F)` and the maps that make it an
//! equivalence: pairs over a modal Heyting algebra on one side, Nelson
//! lattices with their idempotent skeleton on the other.
//!
//! `R(M, F)` lives on the admissible pairs `{(x, y) : x ∧ y = ⊥, x ∨ y ∈ F}`
//! ordered by `(x, y) ≤ (s, t) iff x ≤ s and t ≤ y`. The constructors
//! require the base laws that make the result a (modal) Nelson lattice —
//! the disjointness law `mH` on the operators, a Boolean filter, and the
//! filter condition `F_condition` — as preconditions, and re-verify the
//! output laws afterwards; a failure there is an internal inconsistency,
//! not a user error.

use crate::error::Error;
use crate::modal::{ModalHeytingAlgebra, ModalLaw};
use crate::nelson::{h_star, f_star, HStar, ModalNelsonLattice, NelsonLaw};
use crate::lattice::FiniteLattice;
use crate::poset::FinitePoset;
use crate::report::LawReport;
use crate::set::{ElemSet, MAX_ELEMENTS};

/// A twist algebra together with its pair bookkeeping.
#[derive(Debug, Clone)]
pub struct Twist {
    pub algebra: ModalNelsonLattice,
    /// Element index → base pair `(x, y)`, in lexicographic order.
    pub pairs: Vec<(usize, usize)>,
    pub base_len: usize,
}

impl Twist {
    /// Index of the pair `(x, y)`, if admissible.
    pub fn pair_index(&self, x: usize, y: usize) -> Option<usize> {
        self.pairs.binary_search(&(x, y)).ok()
    }
}

/// `R(M, H)`: the twist over the improper filter (every disjoint pair is
/// admissible). `carry_modal` controls whether `■(x,y) = (□x, ◇y)` and
/// `◆(x,y) = (◇x, □y)` are attached; pass `false` to build the plain Nelson
/// reduct (the base operators are then only used for the preconditions).
pub fn twist_full(m: &ModalHeytingAlgebra, carry_modal: bool) -> Result<Twist, Error> {
    twist_impl(m, ElemSet::full(m.len()), carry_modal)
}

/// `R(M, F)` over a Boolean filter `F` satisfying the filter condition.
pub fn twist_filtered(
    m: &ModalHeytingAlgebra,
    f: ElemSet,
    carry_modal: bool,
) -> Result<Twist, Error> {
    twist_impl(m, f, carry_modal)
}

fn precondition(report: &LawReport) -> Error {
    Error::LawPrecondition {
        law: report.law.clone(),
        witness: report.witness.clone().unwrap_or_default().join(", "),
    }
}

fn twist_impl(m: &ModalHeytingAlgebra, f: ElemSet, carry_modal: bool) -> Result<Twist, Error> {
    let h = m.heyting();
    let lat = h.lat();
    let n = h.len();
    let mh = m.check_law(ModalLaw::MH);
    if !mh.holds {
        return Err(precondition(&mh));
    }
    lat.check_filter(f)?;
    if !h.is_boolean_filter(f)? {
        return Err(Error::NotBooleanFilter {
            dense: h.lat().name(h.least_dense()).to_string(),
        });
    }
    let cond_f = m.check_filter_condition_f(f)?;
    if !cond_f.holds {
        return Err(precondition(&cond_f));
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if lat.meet(x, y) == lat.bot() && f.contains(lat.join(x, y)) {
                pairs.push((x, y));
            }
        }
    }
    if pairs.len() > MAX_ELEMENTS {
        return Err(Error::TooManyElements { n: pairs.len() });
    }
    let k = pairs.len();
    let index = |x: usize, y: usize, what: &str| -> Result<usize, Error> {
        pairs.binary_search(&(x, y)).map_err(|_| {
            Error::internal(format!(
                "{what} ({}, {}) is not an admissible pair",
                lat.name(x),
                lat.name(y)
            ))
        })
    };

    let names: Vec<String> = pairs
        .iter()
        .map(|&(x, y)| format!("({},{})", lat.name(x), lat.name(y)))
        .collect();
    let mut leq = vec![false; k * k];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for (j, &(s, t)) in pairs.iter().enumerate() {
            leq[i * k + j] = lat.le(x, s) && lat.le(t, y);
        }
    }
    let poset = FinitePoset::from_leq(names, leq)
        .map_err(|e| Error::internal(format!("pair order is not a poset: {e}")))?;
    let tlat = FiniteLattice::from_poset(poset)
        .map_err(|e| Error::internal(format!("pair order is not a lattice: {e}")))?;
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for (j, &(s, t)) in pairs.iter().enumerate() {
            let meet = index(lat.meet(x, s), lat.join(y, t), "componentwise meet")?;
            let join = index(lat.join(x, s), lat.meet(y, t), "componentwise join")?;
            if tlat.meet(i, j) != meet || tlat.join(i, j) != join {
                return Err(Error::internal(
                    "pair lattice operations are not componentwise",
                ));
            }
        }
    }

    let mut fusion = vec![0usize; k * k];
    let mut res = vec![0usize; k * k];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        for (j, &(s, t)) in pairs.iter().enumerate() {
            fusion[i * k + j] = index(
                lat.meet(x, s),
                lat.meet(h.imp(x, t), h.imp(s, y)),
                "fusion",
            )?;
            res[i * k + j] = index(
                lat.meet(h.imp(x, s), h.imp(t, y)),
                lat.meet(x, t),
                "residual",
            )?;
        }
    }
    let algebra = if carry_modal {
        let mut bsq = vec![0usize; k];
        let mut bdia = vec![0usize; k];
        for (i, &(x, y)) in pairs.iter().enumerate() {
            bsq[i] = index(m.box_(x), m.dia(y), "■ image")?;
            bdia[i] = index(m.dia(x), m.box_(y), "◆ image")?;
        }
        ModalNelsonLattice::with_modal(tlat, fusion, res, bsq, bdia)?
    } else {
        ModalNelsonLattice::plain(tlat, fusion, res)?
    };

    // The construction theorem: the result is a Nelson lattice, modal when
    // the operators are carried.
    let mut laws = vec![NelsonLaw::Res, NelsonLaw::Rl, NelsonLaw::Nelson, NelsonLaw::Potency3];
    if carry_modal {
        laws.extend([NelsonLaw::MN1, NelsonLaw::MN2, NelsonLaw::MN3]);
    }
    for law in laws {
        let r = algebra.check_law(law);
        if !r.holds {
            return Err(Error::internal(format!("twist output law failure: {}", r.render())));
        }
    }
    Ok(Twist { algebra, pairs, base_len: n })
}

/// The filter a twist algebra remembers: first components of `a ∨ ∼a` over
/// all elements. For `R(M, F)` this recovers exactly `F`.
pub fn recover_filter(t: &Twist) -> ElemSet {
    let mut f = ElemSet::EMPTY;
    for a in 0..t.algebra.len() {
        let j = t.algebra.join(a, t.algebra.snot(a));
        f.insert(t.pairs[j].0);
    }
    f
}

/// The canonical isomorphism `a ↦ (a², (∼a)²)` from a Nelson lattice onto
/// the twist over its idempotent skeleton.
#[derive(Debug, Clone)]
pub struct SkeletonIso {
    pub h_star: HStar,
    pub f_star: ElemSet,
    pub twist: Twist,
    /// Source index → twist index; a verified bijective homomorphism.
    pub map: Vec<usize>,
}

fn require_nelson(n: &ModalNelsonLattice) -> Result<(), Error> {
    for law in [NelsonLaw::Res, NelsonLaw::Nelson] {
        let r = n.check_law(law);
        if !r.holds {
            return Err(precondition(&r));
        }
    }
    Ok(())
}

/// Builds `R(H*, F*)` and verifies `h(a) = (a², (∼a)²)` is an isomorphism
/// (of modal Nelson lattices when the input is modal).
///
/// Requires a Nelson lattice; everything past the precondition is
/// theorem-guaranteed, so any discrepancy is an internal error.
pub fn iso_h(n: &ModalNelsonLattice) -> Result<SkeletonIso, Error> {
    require_nelson(n)?;
    let hs = h_star(n)?;
    let fs = f_star(n, &hs)?;
    let twist = twist_impl(&hs.algebra, fs, n.modal())?;
    if twist.algebra.len() != n.len() {
        return Err(Error::internal(format!(
            "twist over the skeleton has {} elements, source has {}",
            twist.algebra.len(),
            n.len()
        )));
    }
    let mut map = Vec::with_capacity(n.len());
    for a in 0..n.len() {
        let x = hs
            .index_of(n.square(a))
            .ok_or_else(|| Error::internal("a² escaped the idempotents"))?;
        let y = hs
            .index_of(n.square(n.snot(a)))
            .ok_or_else(|| Error::internal("(∼a)² escaped the idempotents"))?;
        let i = twist
            .pair_index(x, y)
            .ok_or_else(|| Error::internal("(a², (∼a)²) is not an admissible pair"))?;
        map.push(i);
    }
    let mut seen = vec![false; n.len()];
    for &i in &map {
        seen[i] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::internal("a ↦ (a², (∼a)²) is not a bijection"));
    }
    check_nelson_hom(n, &twist.algebra, &map, n.modal())
        .map_err(|e| Error::internal(format!("a ↦ (a², (∼a)²) is not a homomorphism: {e}")))?;
    Ok(SkeletonIso { h_star: hs, f_star: fs, twist, map })
}

/// The canonical isomorphism `a ↦ (a, −a)` from a modal Heyting algebra onto
/// the idempotent skeleton of its own twist.
#[derive(Debug, Clone)]
pub struct BaseIso {
    pub twist: Twist,
    pub h_star: HStar,
    pub f_star: ElemSet,
    /// Base index → `H*` index; a verified isomorphism carrying `F` onto `F*`.
    pub map: Vec<usize>,
}

/// Builds `R(M, F)`, its skeleton, and verifies `β(a) = (a, −a)` is a modal
/// Heyting isomorphism with `β[F] = F*`.
pub fn iso_beta(m: &ModalHeytingAlgebra, f: ElemSet) -> Result<BaseIso, Error> {
    let twist = twist_impl(m, f, true)?;
    let hs = h_star(&twist.algebra)?;
    let fs = f_star(&twist.algebra, &hs)?;
    if hs.algebra.len() != m.len() {
        return Err(Error::internal(format!(
            "skeleton of the twist has {} elements, base has {}",
            hs.algebra.len(),
            m.len()
        )));
    }
    let h = m.heyting();
    let mut map = Vec::with_capacity(m.len());
    for a in 0..m.len() {
        let t = twist
            .pair_index(a, h.neg(a))
            .ok_or_else(|| Error::internal("(a, −a) is not an admissible pair"))?;
        let i = hs
            .index_of(t)
            .ok_or_else(|| Error::internal("(a, −a) is not idempotent in the twist"))?;
        map.push(i);
    }
    let mut seen = vec![false; m.len()];
    for &i in &map {
        seen[i] = true;
    }
    if seen.iter().any(|&s| !s) {
        return Err(Error::internal("a ↦ (a, −a) is not a bijection"));
    }
    check_modal_heyting_hom(m, f, &hs.algebra, fs, &map)
        .map_err(|e| Error::internal(format!("a ↦ (a, −a) is not a homomorphism: {e}")))?;
    let beta_f: ElemSet = f.iter().map(|a| map[a]).collect();
    if beta_f != fs {
        return Err(Error::internal("β[F] differs from F*"));
    }
    Ok(BaseIso { twist, h_star: hs, f_star: fs, map })
}

/// Verifies that `map` is a homomorphism of (modal) Nelson lattices:
/// bounds, `∧`, `∨`, `*`, `⇒`, and the modal tables when `include_modal`.
/// The first violation is described in the error.
pub fn check_nelson_hom(
    src: &ModalNelsonLattice,
    dst: &ModalNelsonLattice,
    map: &[usize],
    include_modal: bool,
) -> Result<(), String> {
    if map.len() != src.len() {
        return Err(format!("map has {} entries, source has {}", map.len(), src.len()));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= dst.len()) {
        return Err(format!("map value {bad} is outside the target"));
    }
    if map[src.bot()] != dst.bot() {
        return Err("⊥ is not preserved".to_string());
    }
    if map[src.top()] != dst.top() {
        return Err("⊤ is not preserved".to_string());
    }
    for x in 0..src.len() {
        if include_modal
            && (map[src.bsq(x)] != dst.bsq(map[x]) || map[src.bdia(x)] != dst.bdia(map[x]))
        {
            return Err(format!("modal tables are not preserved at {}", src.name(x)));
        }
        for y in 0..src.len() {
            let ok = map[src.meet(x, y)] == dst.meet(map[x], map[y])
                && map[src.join(x, y)] == dst.join(map[x], map[y])
                && map[src.fus(x, y)] == dst.fus(map[x], map[y])
                && map[src.res(x, y)] == dst.res(map[x], map[y]);
            if !ok {
                return Err(format!(
                    "operations are not preserved at ({}, {})",
                    src.name(x),
                    src.name(y)
                ));
            }
        }
    }
    Ok(())
}

/// Verifies that `map` is a homomorphism of modal Heyting algebras carrying
/// the filter `f_src` into `f_dst`.
pub fn check_modal_heyting_hom(
    src: &ModalHeytingAlgebra,
    f_src: ElemSet,
    dst: &ModalHeytingAlgebra,
    f_dst: ElemSet,
    map: &[usize],
) -> Result<(), String> {
    if map.len() != src.len() {
        return Err(format!("map has {} entries, source has {}", map.len(), src.len()));
    }
    if let Some(&bad) = map.iter().find(|&&v| v >= dst.len()) {
        return Err(format!("map value {bad} is outside the target"));
    }
    let (sh, dh) = (src.heyting(), dst.heyting());
    if map[sh.lat().bot()] != dh.lat().bot() || map[sh.lat().top()] != dh.lat().top() {
        return Err("bounds are not preserved".to_string());
    }
    for x in 0..src.len() {
        if map[src.box_(x)] != dst.box_(map[x]) || map[src.dia(x)] != dst.dia(map[x]) {
            return Err(format!("□/◇ are not preserved at {}", sh.name(x)));
        }
        if f_src.contains(x) && !f_dst.contains(map[x]) {
            return Err(format!("{} leaves the filter", sh.name(x)));
        }
        for y in 0..src.len() {
            let ok = map[sh.lat().meet(x, y)] == dh.lat().meet(map[x], map[y])
                && map[sh.lat().join(x, y)] == dh.lat().join(map[x], map[y])
                && map[sh.imp(x, y)] == dh.imp(map[x], map[y]);
            if !ok {
                return Err(format!(
                    "operations are not preserved at ({}, {})",
                    sh.name(x),
                    sh.name(y)
                ));
            }
        }
    }
    Ok(())
}

/// Restricts a Nelson homomorphism to the idempotent skeletons: the map
/// `H*(src) → H*(dst)` in skeleton indices.
pub fn skeleton_of_hom(
    hs_src: &HStar,
    hs_dst: &HStar,
    map: &[usize],
) -> Result<Vec<usize>, Error> {
    hs_src
        .members
        .iter()
        .map(|&e| {
            hs_dst
                .index_of(map[e])
                .ok_or_else(|| Error::internal("homomorphism image of an idempotent is not idempotent"))
        })
        .collect()
}

/// Lifts a base map to twist pairs componentwise: `(x, y) ↦ (g x, g y)`.
pub fn twist_of_hom(src: &Twist, dst: &Twist, base_map: &[usize]) -> Result<Vec<usize>, Error> {
    src.pairs
        .iter()
        .map(|&(x, y)| {
            dst.pair_index(base_map[x], base_map[y])
                .ok_or_else(|| Error::internal("componentwise image is not an admissible pair"))
        })
        .collect()
}

/// Naturality of `a ↦ (a², (∼a)²)` in a Nelson homomorphism `g`: the square
/// built from `g`, its skeleton restriction, and its componentwise lift
/// commutes. Returns whether it does; the functor facts along the way
/// (restriction and lift are homomorphisms) are verified internally.
pub fn check_skeleton_naturality(
    n1: &ModalNelsonLattice,
    n2: &ModalNelsonLattice,
    g: &[usize],
) -> Result<bool, Error> {
    let include_modal = n1.modal() && n2.modal();
    check_nelson_hom(n1, n2, g, include_modal)
        .map_err(|e| Error::internal(format!("fixture map is not a homomorphism: {e}")))?;
    let i1 = iso_h(n1)?;
    let i2 = iso_h(n2)?;
    let fg = skeleton_of_hom(&i1.h_star, &i2.h_star, g)?;
    check_modal_heyting_hom(&i1.h_star.algebra, i1.f_star, &i2.h_star.algebra, i2.f_star, &fg)
        .map_err(|e| Error::internal(format!("skeleton restriction is not a homomorphism: {e}")))?;
    let efg = twist_of_hom(&i1.twist, &i2.twist, &fg)?;
    check_nelson_hom(&i1.twist.algebra, &i2.twist.algebra, &efg, include_modal)
        .map_err(|e| Error::internal(format!("componentwise lift is not a homomorphism: {e}")))?;
    Ok((0..n1.len()).all(|a| i2.map[g[a]] == efg[i1.map[a]]))
}

/// Naturality of `a ↦ (a, −a)` in a filtered modal Heyting homomorphism `h`:
/// the square built from `h`, its componentwise lift, and that lift's
/// skeleton restriction commutes.
pub fn check_base_naturality(
    m1: &ModalHeytingAlgebra,
    f1: ElemSet,
    m2: &ModalHeytingAlgebra,
    f2: ElemSet,
    h: &[usize],
) -> Result<bool, Error> {
    check_modal_heyting_hom(m1, f1, m2, f2, h)
        .map_err(|e| Error::internal(format!("fixture map is not a homomorphism: {e}")))?;
    let b1 = iso_beta(m1, f1)?;
    let b2 = iso_beta(m2, f2)?;
    let eh = twist_of_hom(&b1.twist, &b2.twist, h)?;
    check_nelson_hom(&b1.twist.algebra, &b2.twist.algebra, &eh, true)
        .map_err(|e| Error::internal(format!("componentwise lift is not a homomorphism: {e}")))?;
    let feh = skeleton_of_hom(&b1.h_star, &b2.h_star, &eh)?;
    Ok((0..m1.len()).all(|a| b2.map[h[a]] == feh[b1.map[a]]))
}

/// Embeds `a ↦ (a², (∼a)²)` into the twist over the improper filter and
/// reports `(onto, centered)`. The two agree on every Nelson lattice (the
/// embedding fills the full twist exactly when some element is its own
/// negation); disagreement is an internal error.
pub fn check_surjectivity_centered(n: &ModalNelsonLattice) -> Result<(bool, bool), Error> {
    require_nelson(n)?;
    let hs = h_star(n)?;
    let full = twist_impl(&hs.algebra, ElemSet::full(hs.algebra.len()), n.modal())?;
    let mut hit = vec![false; full.algebra.len()];
    for a in 0..n.len() {
        let x = hs
            .index_of(n.square(a))
            .ok_or_else(|| Error::internal("a² escaped the idempotents"))?;
        let y = hs
            .index_of(n.square(n.snot(a)))
            .ok_or_else(|| Error::internal("(∼a)² escaped the idempotents"))?;
        let i = full
            .pair_index(x, y)
            .ok_or_else(|| Error::internal("(a², (∼a)²) is not an admissible pair"))?;
        hit[i] = true;
    }
    let onto = hit.iter().all(|&b| b);
    let centered = !n.central_elements().is_empty();
    if onto != centered {
        return Err(Error::internal(
            "fullness of the square embedding disagrees with centeredness",
        ));
    }
    Ok((onto, centered))
}

/// The three faces of normality, computed independently:
/// the equation `∇x = Δx`, the filter comparison `F* = D(H*)`, and
/// Boolean-ness of the φ-image; plus the skeleton laws `N1`/`N2` that
/// normality forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NormalityViews {
    pub nabla_equals_delta: bool,
    pub f_star_is_dense: bool,
    pub phi_image_boolean: bool,
    pub skeleton_n1: bool,
    pub skeleton_n2: bool,
}

pub fn normality_views(n: &ModalNelsonLattice) -> Result<NormalityViews, Error> {
    let hs = h_star(n)?;
    let fs = f_star(n, &hs)?;
    let (img, _) = crate::nelson::phi_image_algebra(n)?;
    Ok(NormalityViews {
        nabla_equals_delta: n.check_law(NelsonLaw::NormalNelson).holds,
        f_star_is_dense: fs == hs.algebra.heyting().dense_set(),
        phi_image_boolean: crate::nelson::check_snot_complemented(&img).holds,
        skeleton_n1: hs.algebra.check_law(ModalLaw::N1).holds,
        skeleton_n2: hs.algebra.check_law(ModalLaw::N2).holds,
    })
}

/// The two faces of φ-regularity: the equations on the algebra and the
/// skeleton properties (Stone, and crisp operators in the modal case).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PhiRegularityViews {
    pub phi_regular: bool,
    pub phi_regular_modal: bool,
    pub skeleton_stone: bool,
    pub skeleton_crisp_box: bool,
    pub skeleton_crisp_dia: bool,
}

pub fn phi_regularity_views(n: &ModalNelsonLattice) -> Result<PhiRegularityViews, Error> {
    let hs = h_star(n)?;
    Ok(PhiRegularityViews {
        phi_regular: n.check_law(NelsonLaw::PhiRegular).holds,
        phi_regular_modal: n.check_law(NelsonLaw::PhiRegularModal).holds,
        skeleton_stone: hs.algebra.heyting().is_stone(),
        skeleton_crisp_box: hs.algebra.check_law(ModalLaw::CrispBox).holds,
        skeleton_crisp_dia: hs.algebra.check_law(ModalLaw::CrispDiamond).holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain_heyting, diamond_top_heyting, kite_modal_heyting};
    use crate::nelson::equiv_partition;
    use crate::test_support::{b2_nelson, boolean, chain, lukasiewicz};

    fn c3_id() -> ModalHeytingAlgebra {
        ModalHeytingAlgebra::identity_modal(chain_heyting(3))
    }

    fn b2_id() -> ModalHeytingAlgebra {
        ModalHeytingAlgebra::identity_modal(boolean(1))
    }

    #[test]
    fn kite_full_twist_shape() {
        let t = twist_full(&kite_modal_heyting(), true).unwrap();
        assert_eq!(
            t.pairs,
            vec![(0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (1, 0), (2, 0), (3, 0), (4, 0)]
        );
        let a = &t.algebra;
        assert_eq!(a.name(a.bot()), "(⊥,⊤)");
        assert_eq!(a.name(a.top()), "(⊤,⊥)");
        let centered = a.check_law(NelsonLaw::Centered);
        assert!(centered.holds);
        assert_eq!(centered.witness, Some(vec!["(⊥,⊥)".to_string()]));
        // (⊥,⊥) is fixed by ∼, ■ and ◆.
        let z = t.pair_index(0, 0).unwrap();
        assert_eq!(a.snot(z), z);
        assert_eq!(a.bsq(z), z);
        assert_eq!(a.bdia(z), z);
        assert_eq!(equiv_partition(a).unwrap().classes.len(), 5);
        // ■⊤ = (□⊤, ◇⊥) = (c,⊥) ≠ ⊤: the base does not fix ⊤.
        let mn5 = a.check_law(NelsonLaw::MN5);
        assert!(!mn5.holds);
    }

    #[test]
    fn chain_twists_are_chains() {
        let full = twist_full(&c3_id(), false).unwrap();
        assert_eq!(full.algebra.len(), 5);
        assert_eq!(full.pairs, vec![(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]);
        let d = ElemSet::from_iter([1usize, 2]);
        let four = twist_filtered(&c3_id(), d, false).unwrap();
        assert_eq!(four.pairs, vec![(0, 1), (0, 2), (1, 0), (2, 0)]);
        // Both are chains.
        for t in [&full, &four] {
            let a = &t.algebra;
            for x in 0..a.len() {
                for y in 0..a.len() {
                    assert!(a.le(x, y) || a.le(y, x));
                }
            }
        }
        let b2f = twist_full(&b2_id(), false).unwrap();
        assert_eq!(b2f.algebra.len(), 3);
        let b2p = twist_filtered(&b2_id(), ElemSet::singleton(1), false).unwrap();
        assert_eq!(b2p.algebra.len(), 2);
    }

    #[test]
    fn twist_preconditions_are_reported() {
        // ◇ = const ⊤ with □ = id violates the disjointness law at (m, ⊥).
        let bad = ModalHeytingAlgebra::from_tables(
            chain_heyting(3),
            vec![0, 1, 2],
            vec![2, 2, 2],
        )
        .unwrap();
        match twist_full(&bad, true) {
            Err(Error::LawPrecondition { law, witness }) => {
                assert_eq!(law, "mH");
                assert_eq!(witness, "m, ⊥");
            }
            other => panic!("expected an mH precondition failure, got {other:?}"),
        }
        // ↑⊤ misses the dense element m, so it is not Boolean.
        match twist_filtered(&c3_id(), ElemSet::singleton(2), false) {
            Err(Error::NotBooleanFilter { dense }) => assert_eq!(dense, "m"),
            other => panic!("expected a Boolean-filter failure, got {other:?}"),
        }
    }

    #[test]
    fn filter_recovery_round_trips() {
        let full = twist_full(&c3_id(), false).unwrap();
        assert_eq!(recover_filter(&full), ElemSet::full(3));
        let d = ElemSet::from_iter([1usize, 2]);
        let four = twist_filtered(&c3_id(), d, false).unwrap();
        assert_eq!(recover_filter(&four), d);
        // Rebuilding from the recovered filter reproduces the pair set, and
        // smaller filters give subsets.
        let again = twist_filtered(&c3_id(), recover_filter(&four), false).unwrap();
        assert_eq!(again.pairs, four.pairs);
        assert!(four.pairs.iter().all(|p| full.pairs.contains(p)));
    }

    #[test]
    fn skeleton_iso_on_fixtures() {
        let i3 = iso_h(&lukasiewicz(3)).unwrap();
        assert_eq!(i3.h_star.members, vec![0, 2]);
        assert_eq!(i3.f_star, ElemSet::full(2));
        assert_eq!(i3.twist.algebra.len(), 3);

        let i2 = iso_h(&b2_nelson()).unwrap();
        assert_eq!(i2.twist.algebra.len(), 2);
        assert_eq!(i2.f_star, ElemSet::singleton(1));

        // Modal path: the kite twist is isomorphic to the twist over its own
        // skeleton.
        let kt = twist_full(&kite_modal_heyting(), true).unwrap();
        let ik = iso_h(&kt.algebra).unwrap();
        assert_eq!(ik.twist.algebra.len(), 9);
        assert_eq!(ik.h_star.algebra.len(), 5);
    }

    #[test]
    fn skeleton_iso_rejects_non_nelson() {
        let g3 = ModalNelsonLattice::plain(
            chain(3).lat().clone(),
            chain(3).lat().meet_table().to_vec(),
            chain(3).imp_table().to_vec(),
        )
        .unwrap();
        assert!(matches!(
            iso_h(&g3),
            Err(Error::LawPrecondition { law, .. }) if law == "nelson"
        ));
    }

    #[test]
    fn base_iso_on_fixtures() {
        let k = kite_modal_heyting();
        let full = iso_beta(&k, ElemSet::full(5)).unwrap();
        assert_eq!(full.twist.algebra.len(), 9);
        assert_eq!(full.map.len(), 5);
        let up_b = ElemSet::from_iter([1usize, 2, 3, 4]);
        let filtered = iso_beta(&k, up_b).unwrap();
        assert_eq!(filtered.twist.algebra.len(), 8);

        let d = ElemSet::from_iter([1usize, 2]);
        let c = iso_beta(&c3_id(), d).unwrap();
        assert_eq!(c.twist.algebra.len(), 4);
        assert_eq!(c.f_star.len(), 2);
    }

    #[test]
    fn naturality_squares_commute() {
        // Inclusion of the filtered chain twist into the full one.
        let d = ElemSet::from_iter([1usize, 2]);
        let t4 = twist_filtered(&c3_id(), d, true).unwrap();
        let t5 = twist_full(&c3_id(), true).unwrap();
        let g: Vec<usize> = t4
            .pairs
            .iter()
            .map(|&(x, y)| t5.pair_index(x, y).unwrap())
            .collect();
        assert!(check_skeleton_naturality(&t4.algebra, &t5.algebra, &g).unwrap());

        // Identity on the kite twist.
        let kt = twist_full(&kite_modal_heyting(), true).unwrap();
        let id: Vec<usize> = (0..kt.algebra.len()).collect();
        assert!(check_skeleton_naturality(&kt.algebra, &kt.algebra, &id).unwrap());

        // Base-side: the bottom/top embedding and the collapsing surjection.
        assert!(check_base_naturality(
            &b2_id(),
            ElemSet::singleton(1),
            &c3_id(),
            d,
            &[0, 2],
        )
        .unwrap());
        assert!(check_base_naturality(
            &c3_id(),
            d,
            &b2_id(),
            ElemSet::singleton(1),
            &[0, 1, 1],
        )
        .unwrap());
    }

    #[test]
    fn surjectivity_matches_centeredness() {
        assert_eq!(check_surjectivity_centered(&lukasiewicz(3)).unwrap(), (true, true));
        assert_eq!(check_surjectivity_centered(&b2_nelson()).unwrap(), (false, false));
        let kt = twist_full(&kite_modal_heyting(), true).unwrap();
        assert_eq!(check_surjectivity_centered(&kt.algebra).unwrap(), (true, true));
    }

    #[test]
    fn normality_views_agree_on_fixtures() {
        // Ł3 is not normal: F* is improper while the dense filter of the
        // two-element skeleton is {⊤}.
        let v3 = normality_views(&lukasiewicz(3)).unwrap();
        assert!(!v3.nabla_equals_delta && !v3.f_star_is_dense && !v3.phi_image_boolean);
        let vb = normality_views(&b2_nelson()).unwrap();
        assert!(vb.nabla_equals_delta && vb.f_star_is_dense && vb.phi_image_boolean);
        // The 4-chain twist over the dense filter is normal.
        let d = ElemSet::from_iter([1usize, 2]);
        let four = twist_filtered(&c3_id(), d, false).unwrap();
        let v4 = normality_views(&four.algebra).unwrap();
        assert!(v4.nabla_equals_delta && v4.f_star_is_dense && v4.phi_image_boolean);
        assert!(v4.skeleton_n1 && v4.skeleton_n2);
    }

    #[test]
    fn phi_regularity_views_agree_on_fixtures() {
        let v3 = phi_regularity_views(&lukasiewicz(3)).unwrap();
        assert!(v3.phi_regular && v3.skeleton_stone);
        // Non-Stone base: the twist over the diamond-with-top fails the
        // equation.
        let dt = ModalHeytingAlgebra::identity_modal(diamond_top_heyting());
        let t = twist_full(&dt, false).unwrap();
        let vd = phi_regularity_views(&t.algebra).unwrap();
        assert!(!vd.phi_regular && !vd.skeleton_stone);
        // Kite twist: Stone skeleton but non-crisp operators.
        let kt = twist_full(&kite_modal_heyting(), true).unwrap();
        let vk = phi_regularity_views(&kt.algebra).unwrap();
        assert!(vk.phi_regular && vk.skeleton_stone);
        assert!(!vk.phi_regular_modal && !vk.skeleton_crisp_box);
        assert_eq!(
            vk.phi_regular && vk.phi_regular_modal,
            vk.skeleton_stone && vk.skeleton_crisp_box && vk.skeleton_crisp_dia
        );
    }
}
