//! Acceptance gate: one test per pillar, library-level except the last,
//! which drives the installed binary. Each failure names its instance.

use std::time::{Duration, Instant};

use twistlab::catalog::{
    admissible_filters, boolean_heyting, chain_heyting, diamond_top_heyting, heyting_unary_tables,
    kite_modal_heyting, lukasiewicz_chain, modal_hom_fixtures, nelson_catalog, nelson_hom_fixtures,
    nelson_unary_tables, square_compatible_tables, sweep_bases,
};
use twistlab::doc::{self, Document};
use twistlab::duality::{
    algebra_of_space, algebra_round_trip, filter_of_closed, mne_dual, space_round_trip, SpaceLaw,
    ME_LAWS,
};
use twistlab::iso::find_isomorphism;
use twistlab::modal::{
    enumerate_modal_pairs, enumerate_modal_pairs_oracle, EnumBudget, ModalHeytingAlgebra, ModalLaw,
};
use twistlab::nelson::{equiv_partition, h_star, ModalNelsonLattice, NelsonLaw};
use twistlab::set::ElemSet;
use twistlab::twist::{
    check_base_naturality, check_skeleton_naturality, iso_beta, iso_h, normality_views,
    phi_regularity_views, twist_filtered, twist_full,
};

fn fixture(name: &str) -> Document {
    let path = format!("{}/../../fixtures/{name}", env!("CARGO_MANIFEST_DIR"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
    doc::parse(&text).unwrap_or_else(|e| panic!("{path}: {e}"))
}

fn modal_base(name: &str) -> ModalHeytingAlgebra {
    match fixture(name) {
        Document::ModalHeyting { algebra, .. } => algebra,
        d => panic!("{name}: expected a modal-heyting document, got {}", d.kind()),
    }
}

/// The full twist over the committed five-element base reproduces the
/// committed nine-element lattice exactly: same shape up to isomorphism,
/// five square-equivalence classes, the self-negation fixed point kept
/// fixed by ■ and ◆ (the base sends ⊥ to ⊥ under both operators), and the
/// centered law witnessed.
#[test]
fn full_twist_matches_committed_figure() {
    let started = Instant::now();
    let base = modal_base("fig1.json");
    let h = base.heyting();
    let bot = h.lat().bot();
    assert_eq!(base.box_table()[bot], bot);
    assert_eq!(base.dia_table()[bot], bot);

    let twist = twist_full(&base, true).unwrap();
    let n = &twist.algebra;
    assert_eq!(n.len(), 9);

    let figure = match fixture("fig2.json") {
        Document::ModalNelson { algebra } => algebra,
        d => panic!("fig2.json: expected a modal-nelson document, got {}", d.kind()),
    };
    assert_eq!(figure.len(), 9);
    let map = find_isomorphism(&n.op_view(true), &figure.op_view(true))
        .expect("full twist over fig1 must be isomorphic to fig2");
    assert_eq!(map.len(), 9);

    let part = equiv_partition(n).unwrap();
    assert_eq!(part.classes.len(), 5);

    let c = twist.pair_index(bot, bot).expect("(⊥,⊥) is an admissible pair");
    assert_eq!(n.lat().name(c), "(⊥,⊥)");
    assert_eq!(n.snot(c), c);
    assert_eq!(n.bsq(c), c);
    assert_eq!(n.bdia(c), c);
    assert!(n.check_law(NelsonLaw::Centered).holds);

    assert!(started.elapsed() < Duration::from_secs(1), "figure check exceeded 1s");
}

/// Every twist constructed over the catalog bases, with every operator pair
/// the budgeted enumeration finds and every admissible filter, satisfies
/// residuation, the residuated-lattice identities, the Nelson identity,
/// 3-potency with its corollaries, and the first three modal laws.
#[test]
fn catalog_sweep_core_laws() {
    let started = Instant::now();
    let laws = [
        NelsonLaw::Res,
        NelsonLaw::Rl,
        NelsonLaw::Nelson,
        NelsonLaw::Potency3,
        NelsonLaw::MN1,
        NelsonLaw::MN2,
        NelsonLaw::MN3,
    ];
    let budget = EnumBudget { max_pairs: 24, max_candidates: 100_000 };
    let mut twists = 0usize;
    for (i, h) in sweep_bases().unwrap().into_iter().enumerate() {
        let found = enumerate_modal_pairs(&h, &[ModalLaw::MH], budget);
        assert!(!found.pairs.is_empty(), "base {i}: no operator pair within budget");
        let mut built = 0usize;
        for (bx, dx) in &found.pairs {
            let m = ModalHeytingAlgebra::from_tables(h.clone(), bx.clone(), dx.clone()).unwrap();
            for f in admissible_filters(&m).unwrap() {
                let t = twist_filtered(&m, f, true).unwrap_or_else(|e| {
                    panic!("base {i}: admissible filter rejected by the twist: {e}")
                });
                for law in laws {
                    let r = t.algebra.check_law(law);
                    assert!(r.holds, "base {i} ({} elements): {}", h.len(), r.render());
                }
                built += 1;
            }
        }
        assert!(built >= 1, "base {i}: no twist built");
        twists += built;
    }
    assert!(twists >= 100, "sweep built only {twists} twists");
    assert!(started.elapsed() < Duration::from_secs(60), "sweep exceeded 60s");
}

/// The equational and quasi-equational forms of the operator laws agree on
/// every generated instance, the three Boolean-filter characterizations
/// agree on every filter, and the four disjoint-dense pair forms agree on
/// every pair. Each family is checked for mixed outcomes so no equivalence
/// holds vacuously.
#[test]
fn law_form_equivalences() {
    // □a ∧ ◇(−a∧b) = ⊥ as an equation vs. the disjointness quasi-form.
    let bases = [
        chain_heyting(2),
        chain_heyting(3),
        boolean_heyting(2),
        kite_modal_heyting().heyting().clone(),
        diamond_top_heyting(),
    ];
    for h in &bases {
        let tables = heyting_unary_tables(h);
        let (mut pass, mut fail) = (0usize, 0usize);
        for bx in &tables {
            for dx in &tables {
                let m =
                    ModalHeytingAlgebra::from_tables(h.clone(), bx.clone(), dx.clone()).unwrap();
                let eq = m.check_law(ModalLaw::MH).holds;
                let quasi = m.check_law(ModalLaw::MHQuasi).holds;
                assert_eq!(eq, quasi, "{} elements, box {bx:?}, dia {dx:?}", h.len());
                if eq {
                    pass += 1;
                } else {
                    fail += 1;
                }
            }
        }
        assert!(pass > 0 && fail > 0, "{}-element family is one-sided", h.len());
    }

    // Square-compatibility of ■ and ◆ as equations vs. the two quasi-forms,
    // over fully arbitrary operator tables.
    let kite_twist = twist_full(&kite_modal_heyting(), true).unwrap().algebra;
    let nelson_bases = [lukasiewicz_chain(3), kite_twist];
    for base in &nelson_bases {
        let tables = nelson_unary_tables(base);
        let (mut pass, mut fail) = (0usize, 0usize);
        for bs in &tables {
            for bd in &tables {
                let m = ModalNelsonLattice::with_modal(
                    base.lat().clone(),
                    base.fusion_table().to_vec(),
                    base.res_table().to_vec(),
                    bs.clone(),
                    bd.clone(),
                )
                .unwrap();
                let eq = m.check_law(NelsonLaw::MN2).holds;
                let quasi = m.check_mn2_quasi().holds;
                assert_eq!(eq, quasi, "{} elements, ■ {bs:?}, ◆ {bd:?}", base.len());
                if eq {
                    pass += 1;
                } else {
                    fail += 1;
                }
            }
        }
        assert!(pass > 0 && fail > 0, "{}-element family is one-sided", base.len());
    }

    // Disjointness transfer as an equation vs. its quasi-form, over
    // square-compatible tables (where the square-compatibility law holds,
    // which the equivalence needs).
    for base in &nelson_bases {
        let tables = square_compatible_tables(base);
        let (mut pass, mut fail) = (0usize, 0usize);
        for bs in &tables {
            for bd in &tables {
                let m = ModalNelsonLattice::with_modal(
                    base.lat().clone(),
                    base.fusion_table().to_vec(),
                    base.res_table().to_vec(),
                    bs.clone(),
                    bd.clone(),
                )
                .unwrap();
                assert!(m.check_law(NelsonLaw::MN2).holds, "family must stay square-compatible");
                let eq = m.check_law(NelsonLaw::MN3).holds;
                let quasi = m.check_law(NelsonLaw::MN3Q).holds;
                assert_eq!(eq, quasi, "{} elements, ■ {bs:?}, ◆ {bd:?}", base.len());
                if eq {
                    pass += 1;
                } else {
                    fail += 1;
                }
            }
        }
        assert!(pass > 0 && fail > 0, "{}-element family is one-sided", base.len());
    }

    // A filter contains every dense element iff its quotient is complemented;
    // the library's verdict agrees with both.
    let (mut boolean, mut other) = (0usize, 0usize);
    for h in sweep_bases().unwrap() {
        let dense = h.dense_set();
        for f in h.lat().filters() {
            let by_dense = dense.is_subset(f);
            let (q, _) = h.quotient_by_filter(f).unwrap();
            let by_quotient = q.lat().is_complemented();
            assert_eq!(by_dense, by_quotient, "{}-element base", h.len());
            assert_eq!(h.is_boolean_filter(f).unwrap(), by_dense);
            if by_dense {
                boolean += 1;
            } else {
                other += 1;
            }
        }
    }
    assert!(boolean > 0 && other > 0, "filter family is one-sided");

    // The four pair forms of "x and y are disjoint with dense join" agree
    // on every pair of every base.
    let (mut yes, mut no) = (0usize, 0usize);
    for h in sweep_bases().unwrap() {
        for x in 0..h.len() {
            for y in 0..h.len() {
                let forms = h.disjoint_dense_pair_forms(x, y);
                assert!(
                    forms.iter().all(|&b| b == forms[0]),
                    "{}-element base, pair ({x},{y}): {forms:?}",
                    h.len()
                );
                if forms[0] {
                    yes += 1;
                } else {
                    no += 1;
                }
            }
        }
    }
    assert!(yes > 0 && no > 0, "pair family is one-sided");
}

/// `a ↦ (a², (∼a)²)` is an isomorphism onto the twist over the skeleton for
/// every catalog lattice, `a ↦ (a, −a)` is an isomorphism onto the skeleton
/// of the twist (carrying the filter onto the twist's own) for every base
/// and filter, and both squares commute with every committed morphism.
#[test]
fn skeleton_and_base_isomorphisms() {
    for (name, n) in nelson_catalog() {
        let iso = iso_h(&n).unwrap_or_else(|e| panic!("{name}: {e}"));
        assert_eq!(iso.map.len(), n.len(), "{name}");
    }

    let mut pairs = 0usize;
    for h in sweep_bases().unwrap() {
        let m = ModalHeytingAlgebra::identity_modal(h);
        for f in admissible_filters(&m).unwrap() {
            iso_beta(&m, f).unwrap_or_else(|e| panic!("{}-element base: {e}", m.len()));
            pairs += 1;
        }
    }
    let kite = kite_modal_heyting();
    for f in admissible_filters(&kite).unwrap() {
        iso_beta(&kite, f).unwrap_or_else(|e| panic!("kite: {e}"));
        pairs += 1;
    }
    assert!(pairs >= 16, "only {pairs} base/filter pairs exercised");

    for fx in nelson_hom_fixtures() {
        assert!(
            check_skeleton_naturality(&fx.src, &fx.dst, &fx.map).unwrap(),
            "square does not commute for {}",
            fx.name
        );
    }
    for fx in modal_hom_fixtures() {
        assert!(
            check_base_naturality(&fx.src, fx.f_src, &fx.dst, fx.f_dst, &fx.map).unwrap(),
            "square does not commute for {}",
            fx.name
        );
    }
}

/// ∇ = Δ holds exactly when the lattice is isomorphic to the twist over its
/// skeleton filtered by the dense elements (and then an N1/N2 skeleton
/// follows in the modal case), and φ-regularity holds exactly when the
/// skeleton is Stone, with crisp operators for the modal strengthening.
/// Both directions are exercised: the family contains instances on each
/// side of every characterization.
#[test]
fn subvariety_characterizations() {
    let mut family = nelson_catalog();
    family.push((
        "diamond_top_full_twist".to_string(),
        twist_full(&ModalHeytingAlgebra::identity_modal(diamond_top_heyting()), true)
            .unwrap()
            .algebra,
    ));
    let chain_full = twist_full(&ModalHeytingAlgebra::identity_modal(chain_heyting(3)), true)
        .unwrap()
        .algebra;
    family.push(("chain3_full_twist".to_string(), chain_full.clone()));

    let (mut normal, mut abnormal) = (0usize, 0usize);
    for (name, n) in &family {
        let v = normality_views(n).unwrap();
        assert_eq!(v.nabla_equals_delta, v.f_star_is_dense, "{name}");
        assert_eq!(v.nabla_equals_delta, v.phi_image_boolean, "{name}");

        let hs = h_star(n).unwrap();
        let dense = hs.algebra.heyting().dense_set();
        let iso_to_dense_twist = match twist_filtered(&hs.algebra, dense, n.modal()) {
            Ok(t) => {
                find_isomorphism(&n.op_view(n.modal()), &t.algebra.op_view(n.modal())).is_some()
            }
            // The dense filter fails the interaction condition: no such
            // twist exists, so the lattice cannot match one.
            Err(_) => false,
        };
        assert_eq!(v.nabla_equals_delta, iso_to_dense_twist, "{name}");

        if n.modal() && v.nabla_equals_delta {
            assert!(v.skeleton_n1 && v.skeleton_n2, "{name}: normal without an N1/N2 skeleton");
        }
        if v.nabla_equals_delta {
            normal += 1;
        } else {
            abnormal += 1;
        }
    }
    assert!(normal > 0 && abnormal > 0, "normality family is one-sided");

    // The skeleton conditions alone do not suffice: the full chain twist has
    // an N1/N2 skeleton yet ∇ ≠ Δ at its center.
    let v = normality_views(&chain_full).unwrap();
    assert!(v.skeleton_n1 && v.skeleton_n2 && !v.nabla_equals_delta);

    let (mut regular, mut irregular) = (0usize, 0usize);
    let (mut crisp, mut blurred) = (0usize, 0usize);
    for (name, n) in &family {
        let v = phi_regularity_views(n).unwrap();
        assert_eq!(v.phi_regular, v.skeleton_stone, "{name}");
        if n.modal() {
            let strong = v.phi_regular && v.phi_regular_modal;
            let witnessed = v.skeleton_stone && v.skeleton_crisp_box && v.skeleton_crisp_dia;
            assert_eq!(strong, witnessed, "{name}");
            if strong {
                crisp += 1;
            } else {
                blurred += 1;
            }
        }
        if v.phi_regular {
            regular += 1;
        } else {
            irregular += 1;
        }
    }
    assert!(regular > 0 && irregular > 0, "regularity family is one-sided");
    assert!(crisp > 0 && blurred > 0, "modal regularity family is one-sided");
}

/// For every catalog base: σ is an isomorphism onto the up-set algebra of
/// the spectrum, the spectrum satisfies the three interaction conditions,
/// ε is a neighbourhood-preserving homeomorphism onto the double dual, the
/// filter condition transfers to its closed-set form and back, and closed
/// sets round-trip through the filters they determine.
#[test]
fn duality_round_trips() {
    let started = Instant::now();
    let mut instances: Vec<(String, ModalHeytingAlgebra)> = sweep_bases()
        .unwrap()
        .into_iter()
        .enumerate()
        .map(|(i, h)| (format!("base{i}"), ModalHeytingAlgebra::identity_modal(h)))
        .collect();
    instances.push(("kite".to_string(), kite_modal_heyting()));
    // Constant-⊥ operators satisfy the interaction law yet block the filter
    // condition on every proper filter, keeping the transfer check two-sided.
    instances.push((
        "chain3_blunt".to_string(),
        ModalHeytingAlgebra::from_tables(chain_heyting(3), vec![0, 0, 0], vec![0, 0, 0]).unwrap(),
    ));

    let (mut transfers, mut blocked) = (0usize, 0usize);
    for (name, m) in &instances {
        let rt = algebra_round_trip(m).unwrap_or_else(|e| panic!("{name}: {e}"));
        for law in ME_LAWS {
            let r = rt.dual.space.check_law(law);
            assert!(r.holds, "{name}: {}", r.render());
        }
        let srt = space_round_trip(&rt.dual.space).unwrap_or_else(|e| panic!("{name}: {e}"));

        for f in m.heyting().boolean_filters() {
            let on_algebra = m.check_filter_condition_f(f).unwrap().holds;
            let (_, mne) = mne_dual(m, f).unwrap();
            let on_space = mne.check_law(SpaceLaw::FStar).holds;
            assert_eq!(on_algebra, on_space, "{name}, filter {f:?}");
            if on_algebra {
                transfers += 1;
            } else {
                blocked += 1;
            }
        }

        let sa = algebra_of_space(&rt.dual.space).unwrap();
        for c in rt.dual.space.poset.all_upsets() {
            let eps_c: ElemSet = c.iter().map(|x| srt.map[x]).collect();
            let f_c = filter_of_closed(&sa.elements, c);
            assert_eq!(eps_c, srt.dual2.closed_of_filter(f_c), "{name}, closed {c:?}");
        }
    }
    assert!(transfers > 0 && blocked > 0, "filter-condition family is one-sided");
    assert!(started.elapsed() < Duration::from_secs(30), "duality sweep exceeded 30s");
}

/// The incremental operator-pair enumeration matches the brute-force scan
/// of all table pairs on the two smallest bases, and the binary reports an
/// identical stream (and the frozen count) on repeated runs.
#[test]
fn enumeration_matches_oracle() {
    for h in [boolean_heyting(1), chain_heyting(3)] {
        let fast = enumerate_modal_pairs(&h, &[ModalLaw::MH], EnumBudget::UNLIMITED);
        assert!(!fast.truncated);
        let slow = enumerate_modal_pairs_oracle(&h, &[ModalLaw::MH]);
        assert_eq!(fast.pairs, slow, "{}-element base", h.len());
    }

    let base = format!("{}/../../fixtures/boolean2.json", env!("CARGO_MANIFEST_DIR"));
    let run = || {
        let out = std::process::Command::new(env!("CARGO_BIN_EXE_twistlab"))
            .args(["enumerate", "--base", &base, "--laws", "mH", "--format", "machine"])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        String::from_utf8(out.stdout).expect("utf-8 stdout")
    };
    let first = run();
    let second = run();
    assert_eq!(first, second);
    assert!(first.ends_with("{\"count\": 8, \"truncated\": false}\n"));
    assert_eq!(first.lines().count(), 9);
}
