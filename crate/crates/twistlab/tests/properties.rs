// Randomized cross-checks: bitmask identities, order closures, residuation,
// the structural filter scan, and the document codec's canonical form.

use proptest::prelude::*;
use std::sync::OnceLock;
use twistlab::catalog::{nelson_catalog, sweep_bases};
use twistlab::doc::{parse, render, Document};
use twistlab::duality::dual_space;
use twistlab::heyting::HeytingAlgebra;
use twistlab::modal::ModalHeytingAlgebra;
use twistlab::nelson::ModalNelsonLattice;
use twistlab::set::ElemSet;

const BITS: usize = 10;

fn bases() -> &'static [HeytingAlgebra] {
    static BASES: OnceLock<Vec<HeytingAlgebra>> = OnceLock::new();
    BASES.get_or_init(|| sweep_bases().expect("catalog bases build"))
}

fn nelsons() -> &'static [(String, ModalNelsonLattice)] {
    static NELSONS: OnceLock<Vec<(String, ModalNelsonLattice)>> = OnceLock::new();
    NELSONS.get_or_init(nelson_catalog)
}

prop_compose! {
    // A catalog base plus a subset of its carrier.
    fn base_and_mask()(idx in any::<prop::sample::Index>(), raw in any::<u64>())
        -> (&'static HeytingAlgebra, ElemSet) {
        let h = &bases()[idx.index(bases().len())];
        (h, ElemSet(raw).inter(ElemSet::full(h.len())))
    }
}

fn round_trips(doc: &Document) -> Result<(), TestCaseError> {
    let text = render(doc);
    let back = parse(&text).expect("canonical text parses");
    prop_assert_eq!(back.kind(), doc.kind());
    prop_assert_eq!(render(&back), text);
    Ok(())
}

proptest! {
    #[test]
    fn mask_algebra(a in 0u64..(1u64 << BITS), b in 0u64..(1u64 << BITS)) {
        let (x, y) = (ElemSet(a), ElemSet(b));
        prop_assert_eq!(x.complement(BITS).complement(BITS), x);
        prop_assert_eq!(x.union(y).complement(BITS), x.complement(BITS).inter(y.complement(BITS)));
        prop_assert_eq!(x.minus(y), x.inter(y.complement(BITS)));
        prop_assert_eq!(x.union(y).len() + x.inter(y).len(), x.len() + y.len());
        prop_assert!(x.inter(y).is_subset(x));
        prop_assert!(x.is_subset(x.union(y)));
        let rebuilt: ElemSet = x.iter().collect();
        prop_assert_eq!(rebuilt, x);
    }

    #[test]
    fn order_closures((h, s) in base_and_mask()) {
        let p = h.poset();
        let up = p.upset(s);
        prop_assert!(s.is_subset(up));
        prop_assert!(p.is_upset(up));
        prop_assert_eq!(p.upset(up), up);
        prop_assert!(p.is_downset(up.complement(h.len())));
        let down = p.downset(s);
        prop_assert!(s.is_subset(down));
        prop_assert!(p.is_downset(down));
        prop_assert!(p.max_elements(s).is_subset(s));
    }

    #[test]
    fn residuation(
        (h, _) in base_and_mask(),
        ia in any::<prop::sample::Index>(),
        ib in any::<prop::sample::Index>(),
        ic in any::<prop::sample::Index>(),
    ) {
        let n = h.len();
        let (a, b, c) = (ia.index(n), ib.index(n), ic.index(n));
        prop_assert_eq!(h.le(h.meet(a, b), c), h.le(a, h.imp(b, c)));
        prop_assert_eq!(h.neg(a), h.imp(a, h.bot()));
        prop_assert_eq!(h.regular_set().contains(a), h.neg(h.neg(a)) == a);
        prop_assert_eq!(h.is_dense(a), h.dense_set().contains(a));
    }

    // `filters` lists principal up-sets; `check_filter` tests the definition.
    #[test]
    fn filter_scan((h, s) in base_and_mask()) {
        prop_assert_eq!(h.lat().check_filter(s).is_ok(), h.lat().filters().contains(&s));
    }

    #[test]
    fn heyting_document_fixed_point(
        idx in any::<prop::sample::Index>(),
        fidx in any::<prop::sample::Index>(),
        with_filter in any::<bool>(),
    ) {
        let h = &bases()[idx.index(bases().len())];
        let filters = h.lat().filters();
        let filter = if with_filter { Some(filters[fidx.index(filters.len())]) } else { None };
        round_trips(&Document::Heyting { algebra: h.clone(), filter })?;
    }

    #[test]
    fn modal_document_fixed_point(idx in any::<prop::sample::Index>()) {
        let h = bases()[idx.index(bases().len())].clone();
        let m = ModalHeytingAlgebra::identity_modal(h);
        round_trips(&Document::ModalHeyting { algebra: m.clone(), filter: None })?;
        round_trips(&Document::Space { space: dual_space(&m).expect("dual builds").space })?;
    }

    #[test]
    fn nelson_document_fixed_point(idx in any::<prop::sample::Index>()) {
        let (_, m) = &nelsons()[idx.index(nelsons().len())];
        round_trips(&Document::Nelson { algebra: m.clone() })?;
        round_trips(&Document::ModalNelson { algebra: m.clone() })?;
    }
}
