//! Named fixture algebras and the exhaustive small-lattice catalog.
//!
//! Everything the sweep suites and the CLI `catalog` command iterate over is
//! produced here, deterministically: fixture Heyting algebras, all
//! non-isomorphic distributive lattices up to a size bound, modal operator
//! sets per base, and the homomorphism fixtures for the naturality checks.

use crate::error::Error;
use crate::heyting::HeytingAlgebra;
use crate::lattice::FiniteLattice;
use crate::modal::ModalHeytingAlgebra;
use crate::nelson::ModalNelsonLattice;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

/// Builds a lattice from names and cover pairs; panics on invalid input
/// (fixture construction is programmer-controlled).
pub fn lattice(names: &[&str], covers: &[(&str, &str)]) -> FiniteLattice {
    let poset = FinitePoset::from_covers(
        names.iter().map(|s| s.to_string()).collect(),
        &covers
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect::<Vec<_>>(),
    )
    .expect("fixture poset is valid");
    FiniteLattice::from_poset(poset).expect("fixture order is a lattice")
}

/// Heyting algebra from names and covers; panics on invalid input.
pub fn heyting(names: &[&str], covers: &[(&str, &str)]) -> HeytingAlgebra {
    HeytingAlgebra::from_lattice(lattice(names, covers)).expect("fixture lattice is distributive")
}

/// The `n`-element chain. Middles are named `m` (single) or `m1, m2, …`.
pub fn chain_heyting(n: usize) -> HeytingAlgebra {
    assert!(n >= 1);
    let mut names: Vec<String> = Vec::with_capacity(n);
    for i in 0..n {
        names.push(if i == 0 && n > 1 {
            "⊥".to_string()
        } else if i == n - 1 {
            "⊤".to_string()
        } else if n == 3 {
            "m".to_string()
        } else {
            format!("m{i}")
        });
    }
    let covers: Vec<(String, String)> = (0..n.saturating_sub(1))
        .map(|i| (names[i].clone(), names[i + 1].clone()))
        .collect();
    let poset = FinitePoset::from_covers(names, &covers).unwrap();
    HeytingAlgebra::from_lattice(FiniteLattice::from_poset(poset).unwrap()).unwrap()
}

/// The Boolean algebra with `atoms` atoms (`2^atoms` elements), ordered by
/// subset mask. Elements are named by their atom letters.
pub fn boolean_heyting(atoms: usize) -> HeytingAlgebra {
    assert!(atoms <= 6, "Boolean fixtures stay desk-sized");
    let size = 1usize << atoms;
    let letter = |i: usize| (b'A' + i as u8) as char;
    let name_of = |mask: usize| -> String {
        if mask == 0 {
            "⊥".to_string()
        } else if mask == size - 1 {
            "⊤".to_string()
        } else {
            (0..atoms).filter(|&i| mask >> i & 1 == 1).map(letter).collect()
        }
    };
    let names: Vec<String> = (0..size).map(name_of).collect();
    let mut covers = Vec::new();
    for mask in 0..size {
        for i in 0..atoms {
            if mask >> i & 1 == 0 {
                covers.push((name_of(mask), name_of(mask | 1 << i)));
            }
        }
    }
    let poset = FinitePoset::from_covers(names, &covers).unwrap();
    HeytingAlgebra::from_lattice(FiniteLattice::from_poset(poset).unwrap()).unwrap()
}

/// The 5-element "kite": ⊥ < b < a, c < ⊤ with a ∧ c = b.
///
/// This is the guide's running example; [`kite_modal_heyting`] adds its
/// operator pair.
pub fn kite_heyting() -> HeytingAlgebra {
    heyting(
        &["⊥", "b", "a", "c", "⊤"],
        &[("⊥", "b"), ("b", "a"), ("b", "c"), ("a", "⊤"), ("c", "⊤")],
    )
}

/// The kite with its guide operator pair: □ = (⊥, c, a, a, c),
/// ◇ = (⊥, c, b, a, ⊤) on (⊥, b, a, c, ⊤).
///
/// Satisfies the disjointness law `□a ∧ ◇(−a ∧ b) = ⊥` while failing both
/// □⊤ = ⊤ and −◇a = □−a, so it separates that law from the classical normal
/// operator axioms.
pub fn kite_modal_heyting() -> crate::modal::ModalHeytingAlgebra {
    crate::modal::ModalHeytingAlgebra::from_tables(
        kite_heyting(),
        vec![0, 3, 2, 2, 3],
        vec![0, 3, 1, 2, 4],
    )
    .expect("fixture tables are total")
}

/// Diamond with a new top: the smallest non-Stone Heyting algebra in the
/// catalog (−p ∨ −−p = m ≠ ⊤ for an atom p).
pub fn diamond_top_heyting() -> HeytingAlgebra {
    heyting(
        &["⊥", "p", "q", "m", "⊤"],
        &[("⊥", "p"), ("⊥", "q"), ("p", "m"), ("q", "m"), ("m", "⊤")],
    )
}

/// Boolean algebra as a residuated lattice: fusion = ∧, residual = ⇀.
pub fn boolean_nelson(atoms: usize) -> ModalNelsonLattice {
    let h = boolean_heyting(atoms);
    ModalNelsonLattice::plain(
        h.lat().clone(),
        h.lat().meet_table().to_vec(),
        h.imp_table().to_vec(),
    )
    .expect("Boolean tables are total")
}

/// The Łukasiewicz chain with `k` elements 0, 1/(k−1), …, 1:
/// `a * b = max(0, a + b − 1)`, `a ⇒ b = min(1, 1 − a + b)`.
///
/// The 3-element chain is the smallest lattice that is involutive and
/// 3-potent without being Boolean; longer chains fail 3-potency and serve
/// as negative fixtures.
pub fn lukasiewicz_chain(k: usize) -> ModalNelsonLattice {
    let h = chain_heyting(k);
    let m = k - 1; // common denominator
    let mut fusion = vec![0usize; k * k];
    let mut res = vec![0usize; k * k];
    for a in 0..k {
        for b in 0..k {
            fusion[a * k + b] = (a + b).saturating_sub(m);
            res[a * k + b] = (m + b - a).min(m);
        }
    }
    ModalNelsonLattice::plain(h.lat().clone(), fusion, res).expect("chain tables are total")
}

fn identity_chain(n: usize) -> ModalHeytingAlgebra {
    ModalHeytingAlgebra::identity_modal(chain_heyting(n))
}

/// Named residuated-lattice fixtures for sweeps: every entry satisfies the
/// residuation and involutive-3-potent laws (twists by the construction
/// theorems, the rest by hand-checkable tables), deterministically ordered.
pub fn nelson_catalog() -> Vec<(String, ModalNelsonLattice)> {
    let d3 = ElemSet::from_iter([1usize, 2]);
    let kite_dense = ElemSet::from_iter([1usize, 2, 3, 4]);
    let full = |m: &ModalHeytingAlgebra| {
        crate::twist::twist_full(m, true).expect("catalog base twists").algebra
    };
    let filtered = |m: &ModalHeytingAlgebra, f: ElemSet| {
        crate::twist::twist_filtered(m, f, true).expect("catalog base twists").algebra
    };
    vec![
        ("boolean2".to_string(), boolean_nelson(1)),
        ("lukasiewicz3".to_string(), lukasiewicz_chain(3)),
        ("chain3_twist".to_string(), full(&identity_chain(3))),
        ("chain3_twist_dense".to_string(), filtered(&identity_chain(3), d3)),
        ("kite_twist".to_string(), full(&kite_modal_heyting())),
        ("kite_twist_dense".to_string(), filtered(&kite_modal_heyting(), kite_dense)),
        (
            "boolean4_twist".to_string(),
            full(&ModalHeytingAlgebra::identity_modal(boolean_heyting(2))),
        ),
    ]
}

/// A modal Heyting homomorphism fixture with its filters.
#[derive(Debug, Clone)]
pub struct ModalHomFixture {
    pub name: &'static str,
    pub src: ModalHeytingAlgebra,
    pub f_src: ElemSet,
    pub dst: ModalHeytingAlgebra,
    pub f_dst: ElemSet,
    pub map: Vec<usize>,
}

/// Base-side morphism fixtures: the bounds embedding `2 ↪ 3` (filter {⊤}
/// into the dense filter) and the middle-collapsing surjection `3 ↠ 2`
/// (dense filter onto {⊤}).
pub fn modal_hom_fixtures() -> Vec<ModalHomFixture> {
    let b2 = ModalHeytingAlgebra::identity_modal(boolean_heyting(1));
    let c3 = identity_chain(3);
    let d3 = ElemSet::from_iter([1usize, 2]);
    vec![
        ModalHomFixture {
            name: "bounds_embedding",
            src: b2.clone(),
            f_src: ElemSet::singleton(1),
            dst: c3.clone(),
            f_dst: d3,
            map: vec![0, 2],
        },
        ModalHomFixture {
            name: "collapse_middle",
            src: c3,
            f_src: d3,
            dst: b2,
            f_dst: ElemSet::singleton(1),
            map: vec![0, 1, 1],
        },
    ]
}

/// A Nelson-side homomorphism fixture.
#[derive(Debug, Clone)]
pub struct NelsonHomFixture {
    pub name: &'static str,
    pub src: ModalNelsonLattice,
    pub dst: ModalNelsonLattice,
    pub map: Vec<usize>,
}

/// Nelson-side morphism fixtures: the inclusion of the dense-filtered chain
/// twist into the full one, and the identity on the kite twist.
pub fn nelson_hom_fixtures() -> Vec<NelsonHomFixture> {
    let c3 = identity_chain(3);
    let d3 = ElemSet::from_iter([1usize, 2]);
    let t4 = crate::twist::twist_filtered(&c3, d3, true).expect("catalog base twists");
    let t5 = crate::twist::twist_full(&c3, true).expect("catalog base twists");
    let inclusion: Vec<usize> = t4
        .pairs
        .iter()
        .map(|&(x, y)| t5.pair_index(x, y).expect("filtered pairs embed"))
        .collect();
    let kt = crate::twist::twist_full(&kite_modal_heyting(), true).expect("catalog base twists");
    let id: Vec<usize> = (0..kt.algebra.len()).collect();
    vec![
        NelsonHomFixture {
            name: "chain_twist_inclusion",
            src: t4.algebra,
            dst: t5.algebra,
            map: inclusion,
        },
        NelsonHomFixture { name: "kite_twist_identity", src: kt.algebra.clone(), dst: kt.algebra, map: id },
    ]
}

/// Unary operator tables over a Heyting base for law-equivalence sweeps:
/// constants, identity, ¬, ¬¬, and ¬a ∨ ¬¬a. Sorted and deduplicated.
pub fn heyting_unary_tables(h: &HeytingAlgebra) -> Vec<Vec<usize>> {
    let n = h.len();
    let mut out: Vec<Vec<usize>> = (0..n).map(|c| vec![c; n]).collect();
    out.push((0..n).collect());
    out.push((0..n).map(|a| h.neg(a)).collect());
    out.push((0..n).map(|a| h.neg(h.neg(a))).collect());
    out.push((0..n).map(|a| h.join(h.neg(a), h.neg(h.neg(a)))).collect());
    out.sort();
    out.dedup();
    out
}

/// Unary operator tables over a residuated base: constants, identity, ∼,
/// squaring, ∼(x²), ¬¬, ∇, Δ, φ. Sorted and deduplicated.
pub fn nelson_unary_tables(m: &ModalNelsonLattice) -> Vec<Vec<usize>> {
    let n = m.len();
    let mut out: Vec<Vec<usize>> = (0..n).map(|c| vec![c; n]).collect();
    out.push((0..n).collect());
    out.push((0..n).map(|a| m.snot(a)).collect());
    out.push((0..n).map(|a| m.square(a)).collect());
    out.push((0..n).map(|a| m.snot(m.square(a))).collect());
    out.push((0..n).map(|a| m.wneg(m.wneg(a))).collect());
    out.push((0..n).map(|a| m.nabla(a)).collect());
    out.push((0..n).map(|a| m.delta(a)).collect());
    out.push((0..n).map(|a| m.phi(a)).collect());
    out.sort();
    out.dedup();
    out
}

/// The square-compatible slice of [`nelson_unary_tables`]: each `u`
/// becomes `a ↦ u(a²)`, which respects the squaring congruence by
/// construction (a² is idempotent under 3-potency).
pub fn square_compatible_tables(m: &ModalNelsonLattice) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = nelson_unary_tables(m)
        .into_iter()
        .map(|u| (0..m.len()).map(|a| u[m.square(a)]).collect())
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Boolean filters of the base that admit the twist construction: the
/// operator-compatibility condition must hold on top of complementedness.
pub fn admissible_filters(m: &ModalHeytingAlgebra) -> Result<Vec<ElemSet>, Error> {
    let mut out = Vec::new();
    for f in m.heyting().boolean_filters() {
        if m.check_filter_condition_f(f)?.holds {
            out.push(f);
        }
    }
    Ok(out)
}

/// Base algebras for the exhaustive sweeps: every distributive lattice with
/// at most six elements plus the 8-element Boolean algebra.
pub fn sweep_bases() -> Result<Vec<HeytingAlgebra>, Error> {
    let mut out = Vec::new();
    for l in distributive_lattices(6)? {
        out.push(HeytingAlgebra::from_lattice(l)?);
    }
    out.push(boolean_heyting(3));
    Ok(out)
}

/// All non-isomorphic distributive lattices with at most `max_size` elements,
/// in a deterministic order (by size, then by generation order).
///
/// Birkhoff: every finite distributive lattice is the down-set lattice of the
/// poset of its join-irreducibles, so enumerating posets on `k` labeled
/// points and deduplicating by isomorphism covers everything. Element names
/// are `e0, e1, …` by down-set mask order.
pub fn distributive_lattices(max_size: usize) -> Result<Vec<FiniteLattice>, Error> {
    let mut out: Vec<FiniteLattice> = Vec::new();
    // k join-irreducibles give a lattice of at least k+1 elements; for
    // max_size ≤ 6 posets on up to 5 points suffice (2^5 ≥ 6 only bounds
    // above, the size filter below is what matters).
    let max_points = max_size.saturating_sub(1).min(5);
    for k in 0..=max_points {
        let mut seen: Vec<FiniteLattice> = Vec::new();
        // Strict upper-triangular relations: rel[i][j] with i < j means
        // point i < point j. Transitivity is checked; antisymmetry and
        // acyclicity are free from the triangular shape.
        let pairs: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .collect();
        for code in 0u32..1u32 << pairs.len() {
            let mut lt = vec![false; k * k];
            for (bit, &(i, j)) in pairs.iter().enumerate() {
                if code >> bit & 1 == 1 {
                    lt[i * k + j] = true;
                }
            }
            let transitive = (0..k).all(|i| {
                (0..k).all(|j| {
                    (0..k).all(|l| !(lt[i * k + j] && lt[j * k + l]) || lt[i * k + l])
                })
            });
            if !transitive {
                continue;
            }
            let lattice = downset_lattice(k, &lt)?;
            if lattice.len() > max_size {
                continue;
            }
            if lattice.len() < k + 1 {
                continue; // unreachable: k points give ≥ k+1 down-sets
            }
            let dup = seen.iter().any(|l| {
                crate::iso::lattice_isomorphism(l, &lattice).is_some()
            });
            if !dup {
                seen.push(lattice);
            }
        }
        out.extend(seen);
    }
    out.sort_by_key(|l| l.len());
    Ok(out)
}

/// One entry of the streamed catalog listing: a stable name and a short
/// multi-line description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub doc: String,
}

/// The full catalog listing: the distributive-lattice census up to
/// `max_size` (named `d{size}_{index}` in census order, with `aka:` lines
/// for the shapes the fixtures know by name), followed by the named
/// residuated fixtures. Deterministic; the CLI streams it verbatim.
pub fn catalog_listing(max_size: usize) -> Result<Vec<CatalogEntry>, Error> {
    let mut out = Vec::new();
    let mut index_at_size = vec![0usize; max_size + 1];
    let aliases: Vec<(&str, FiniteLattice)> = {
        let mut a: Vec<(&str, FiniteLattice)> = (1..=max_size.min(8))
            .map(|n| ("chain", chain_heyting(n).lat().clone()))
            .collect();
        for atoms in 0..=3 {
            if 1 << atoms <= max_size {
                a.push(("boolean", boolean_heyting(atoms).lat().clone()));
            }
        }
        if max_size >= 5 {
            a.push(("kite", kite_heyting().lat().clone()));
            a.push(("diamond_top", diamond_top_heyting().lat().clone()));
        }
        a
    };
    for l in distributive_lattices(max_size)? {
        let size = l.len();
        let name = format!("d{size}_{}", index_at_size[size]);
        index_at_size[size] += 1;
        let covers: Vec<String> = l
            .poset()
            .covers()
            .iter()
            .map(|&(a, b)| format!("{}<{}", l.name(a), l.name(b)))
            .collect();
        let mut doc = format!("size {size}\n");
        if covers.is_empty() {
            doc.push_str("covers: (none)\n");
        } else {
            doc.push_str(&format!("covers: {}\n", covers.join(", ")));
        }
        let mut aka: Vec<&str> = aliases
            .iter()
            .filter(|(_, al)| al.len() == size && crate::iso::lattice_isomorphism(al, &l).is_some())
            .map(|&(n, _)| n)
            .collect();
        aka.dedup();
        if !aka.is_empty() {
            doc.push_str(&format!("aka: {}\n", aka.join(", ")));
        }
        out.push(CatalogEntry { name, doc });
    }
    for (name, m) in nelson_catalog() {
        let doc = format!(
            "size {}\nmodal: {}\n",
            m.len(),
            if m.modal() { "yes" } else { "no" }
        );
        out.push(CatalogEntry { name: format!("nelson/{name}"), doc });
    }
    Ok(out)
}

fn downset_lattice(k: usize, lt: &[bool]) -> Result<FiniteLattice, Error> {
    let le = |i: usize, j: usize| i == j || lt[i * k + j];
    let mut downsets: Vec<u32> = (0u32..1u32 << k)
        .filter(|&s| {
            (0..k).all(|j| {
                s >> j & 1 == 0 || (0..k).all(|i| !le(i, j) || s >> i & 1 == 1)
            })
        })
        .collect();
    downsets.sort_by_key(|s| (s.count_ones(), *s));
    let n = downsets.len();
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut leq = vec![false; n * n];
    for a in 0..n {
        for b in 0..n {
            leq[a * n + b] = downsets[a] & !downsets[b] == 0;
        }
    }
    FiniteLattice::from_poset(FinitePoset::from_leq(names, leq)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distributive_lattice_counts_by_size() {
        let all = distributive_lattices(6).unwrap();
        let mut counts = [0usize; 7];
        for l in &all {
            counts[l.len()] += 1;
            assert!(l.is_distributive());
        }
        // 1, 1, 1, 2, 3, 5 non-isomorphic distributive lattices of sizes 1–6.
        assert_eq!(&counts[1..], &[1, 1, 1, 2, 3, 5]);
    }

    #[test]
    fn catalog_contains_the_named_shapes() {
        let all = distributive_lattices(6).unwrap();
        for fixture in [
            chain_heyting(3).lat().clone(),
            boolean_heyting(2).lat().clone(),
            kite_heyting().lat().clone(),
            diamond_top_heyting().lat().clone(),
        ] {
            assert!(
                all.iter().any(|l| crate::iso::lattice_isomorphism(l, &fixture).is_some()),
                "fixture of size {} missing from catalog",
                fixture.len()
            );
        }
    }

    #[test]
    fn boolean_builder_shapes() {
        assert_eq!(boolean_heyting(1).len(), 2);
        assert_eq!(boolean_heyting(3).len(), 8);
        assert!(boolean_heyting(3).lat().is_complemented());
    }

    #[test]
    fn nelson_catalog_entries_are_lawful() {
        use crate::nelson::NelsonLaw;
        for (name, m) in nelson_catalog() {
            for law in [NelsonLaw::Res, NelsonLaw::Rl, NelsonLaw::Nelson, NelsonLaw::Potency3] {
                let r = m.check_law(law);
                assert!(r.holds, "{name}: {}", r.render());
            }
        }
    }

    #[test]
    fn hom_fixtures_verify() {
        for f in modal_hom_fixtures() {
            crate::twist::check_modal_heyting_hom(&f.src, f.f_src, &f.dst, f.f_dst, &f.map)
                .unwrap_or_else(|e| panic!("{}: {e}", f.name));
        }
        for f in nelson_hom_fixtures() {
            crate::twist::check_nelson_hom(&f.src, &f.dst, &f.map, true)
                .unwrap_or_else(|e| panic!("{}: {e}", f.name));
        }
    }

    #[test]
    fn kite_admissible_filters() {
        let m = kite_modal_heyting();
        let filters = admissible_filters(&m).unwrap();
        // ↑b (quotient is Boolean 2, operator condition holds) and the
        // improper filter; {⊤} and ↑a have non-Boolean quotients.
        let up_b = ElemSet::from_iter([1usize, 2, 3, 4]);
        assert_eq!(filters.len(), 2);
        assert!(filters.contains(&up_b));
        assert!(filters.contains(&ElemSet::full(5)));
    }

    #[test]
    fn square_compatible_tables_respect_squaring() {
        let m = lukasiewicz_chain(3);
        for t in square_compatible_tables(&m) {
            for a in 0..m.len() {
                assert_eq!(t[a], t[m.square(a)]);
            }
        }
    }

    #[test]
    fn listing_shape() {
        let listing = catalog_listing(6).unwrap();
        assert_eq!(listing.len(), 13 + nelson_catalog().len());
        assert_eq!(listing[0].name, "d1_0");
        let kite = listing
            .iter()
            .find(|e| e.doc.contains("aka: kite"))
            .expect("kite shape listed");
        assert!(kite.doc.contains("size 5"));
        assert!(listing.iter().any(|e| e.name == "nelson/kite_twist"));
        assert_eq!(sweep_bases().unwrap().len(), 14);
    }
}
