//! Command layer behind the CLI: documents in, documents or reports out.
//!
//! Every command takes document text (already read from disk), does its work
//! through the library, and produces deterministic output plus a flag saying
//! whether any law failed. The binary maps that flag and the error cases to
//! exit codes: 0 all laws hold, 1 a law fails (or an isomorphism is absent,
//! or a construction's law precondition fails), 2 malformed input.

use crate::catalog;
use crate::doc::{self, Document};
use crate::duality::{self, SpaceLaw, MNESpace, ModalSpace, ME_LAWS, MNE_LAWS};
use crate::error::Error;
use crate::heyting::HeytingAlgebra;
use crate::iso::find_isomorphism;
use crate::modal::{enumerate_modal_pairs, EnumBudget, ModalHeytingAlgebra, ModalLaw, MODAL_LAWS};
use crate::nelson::{self, ModalNelsonLattice, NelsonLaw, NELSON_LAWS};
use crate::report::LawReport;
use crate::set::ElemSet;

/// Output style: human lines or line-oriented JSON.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Machine,
}

/// One CLI invocation, with file contents already loaded.
#[derive(Debug, Clone)]
pub enum Request {
    Validate { doc: String },
    Check { doc: String, laws: String },
    Twist { doc: String, filter: Option<String> },
    HStar { doc: String },
    FStar { doc: String },
    Quotient { doc: String, filter: Option<String> },
    PrimeFilters { doc: String },
    Dual { doc: String },
    Mne { doc: String, filter: Option<String> },
    AlgebraOfSpace { doc: String },
    Iso { a: String, b: String },
    RoundTrip { doc: String },
    Enumerate { base: String, laws: String, limit: Option<usize> },
    Catalog { max_size: usize },
}

/// Command output: the text to print and whether any law failed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub out: String,
    pub law_failure: bool,
}

fn ok(out: String) -> Result<Outcome, Error> {
    Ok(Outcome { out, law_failure: false })
}

fn bad(detail: impl Into<String>) -> Error {
    Error::Document { detail: detail.into() }
}

/// Resolves a `--filter` argument against a Heyting carrier: `dense`,
/// `full`, a single element name (its principal up-set), or a comma list of
/// names (the exact member set).
pub fn resolve_filter(h: &HeytingAlgebra, spec: &str) -> Result<ElemSet, Error> {
    match spec {
        "dense" => Ok(h.dense_set()),
        "full" => Ok(ElemSet::full(h.len())),
        s if s.contains(',') => {
            let mut f = ElemSet::EMPTY;
            for name in s.split(',') {
                let name = name.trim();
                let i = h
                    .poset()
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownName { name: name.to_string() })?;
                f.insert(i);
            }
            Ok(f)
        }
        name => {
            let i = h
                .poset()
                .index_of(name)
                .ok_or_else(|| Error::UnknownName { name: name.to_string() })?;
            Ok(h.poset().up(i))
        }
    }
}

/// The modal view of a Heyting-side document; a plain `heyting` document is
/// wrapped with identity operators. Returns the algebra and any filter the
/// document carried.
fn modal_of(d: Document) -> Result<(ModalHeytingAlgebra, Option<ElemSet>), Error> {
    match d {
        Document::Heyting { algebra, filter } => {
            Ok((ModalHeytingAlgebra::identity_modal(algebra), filter))
        }
        Document::ModalHeyting { algebra, filter } => Ok((algebra, filter)),
        other => Err(bad(format!(
            "expected a heyting or modal-heyting document, got {}",
            other.kind()
        ))),
    }
}

fn nelson_of(d: Document) -> Result<ModalNelsonLattice, Error> {
    match d {
        Document::Nelson { algebra } | Document::ModalNelson { algebra } => Ok(algebra),
        other => Err(bad(format!(
            "expected a nelson or modal-nelson document, got {}",
            other.kind()
        ))),
    }
}

/// A filter for a construction: the flag wins, then the document's own
/// `filter` field; absent both is an error described by `need`.
fn required_filter(
    h: &HeytingAlgebra,
    flag: &Option<String>,
    doc_filter: Option<ElemSet>,
    need: &str,
) -> Result<ElemSet, Error> {
    match (flag, doc_filter) {
        (Some(spec), _) => resolve_filter(h, spec),
        (None, Some(f)) => Ok(f),
        (None, None) => Err(bad(format!(
            "{need} needs a filter: pass --filter or put one in the document"
        ))),
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn report_line(r: &LawReport, format: Format) -> String {
    match format {
        Format::Text => r.render(),
        Format::Machine => {
            let witness = match &r.witness {
                Some(w) => {
                    let q: Vec<String> = w.iter().map(|s| quote(s)).collect();
                    format!("[{}]", q.join(", "))
                }
                None => "null".to_string(),
            };
            let detail = match &r.detail {
                Some(d) => quote(d),
                None => "null".to_string(),
            };
            format!(
                "{{\"law\": {}, \"holds\": {}, \"witness\": {}, \"detail\": {}}}",
                quote(&r.law),
                r.holds,
                witness,
                detail
            )
        }
    }
}

fn reports_outcome(reports: Vec<LawReport>, format: Format) -> Outcome {
    let law_failure = reports.iter().any(|r| !r.holds);
    let lines: Vec<String> = reports.iter().map(|r| report_line(r, format)).collect();
    Outcome { out: lines.join("\n") + "\n", law_failure }
}

/// The laws `check --law all` runs for each document kind.
fn all_laws_for(d: &Document) -> Vec<String> {
    match d {
        Document::Heyting { .. } => vec!["stone".to_string()],
        Document::ModalHeyting { filter, .. } => {
            let mut laws: Vec<String> = MODAL_LAWS.iter().map(|l| l.name().to_string()).collect();
            if filter.is_some() {
                laws.push("F_condition".to_string());
            }
            laws
        }
        Document::Nelson { .. } => NELSON_LAWS
            .iter()
            .filter(|l| !l.is_modal())
            .map(|l| l.name().to_string())
            .collect(),
        Document::ModalNelson { .. } => {
            NELSON_LAWS.iter().map(|l| l.name().to_string()).collect()
        }
        Document::Space { .. } => ME_LAWS.iter().map(|l| l.name().to_string()).collect(),
        Document::MneSpace { .. } => MNE_LAWS.iter().map(|l| l.name().to_string()).collect(),
    }
}

fn check_one(d: &Document, law: &str) -> Result<LawReport, Error> {
    match d {
        Document::Heyting { algebra, filter } => {
            let m = ModalHeytingAlgebra::identity_modal(algebra.clone());
            check_modal_law(&m, filter, law)
        }
        Document::ModalHeyting { algebra, filter } => check_modal_law(algebra, filter, law),
        Document::Nelson { algebra } | Document::ModalNelson { algebra } => match law {
            "mN2_quasi" => Ok(algebra.check_mn2_quasi()),
            "derived_ops" => Ok(algebra.check_derived_ops()),
            name => Ok(algebra.check_law(NelsonLaw::from_name(name)?)),
        },
        Document::Space { space } => {
            let law = SpaceLaw::from_name(law)?;
            if !ME_LAWS.contains(&law) {
                return Err(Error::UnknownLaw { name: law.name().to_string() });
            }
            Ok(space.check_law(law))
        }
        Document::MneSpace { space } => Ok(space.check_law(SpaceLaw::from_name(law)?)),
    }
}

fn check_modal_law(
    m: &ModalHeytingAlgebra,
    filter: &Option<ElemSet>,
    law: &str,
) -> Result<LawReport, Error> {
    if law == "F_condition" {
        let f = filter.ok_or_else(|| bad("F_condition needs a filter in the document"))?;
        return m.check_filter_condition_f(f);
    }
    Ok(m.check_law(ModalLaw::from_name(law)?))
}

fn size_of(d: &Document) -> usize {
    match d {
        Document::Heyting { algebra, .. } => algebra.len(),
        Document::ModalHeyting { algebra, .. } => algebra.len(),
        Document::Nelson { algebra } | Document::ModalNelson { algebra } => algebra.len(),
        Document::Space { space } => space.len(),
        Document::MneSpace { space } => space.space.len(),
    }
}

fn unary_json(names: &[String], table: &[usize]) -> String {
    let cells: Vec<String> = (0..names.len())
        .map(|a| format!("{}: {}", quote(&names[a]), quote(&names[table[a]])))
        .collect();
    format!("{{{}}}", cells.join(", "))
}

pub fn run(req: &Request, format: Format) -> Result<Outcome, Error> {
    match req {
        Request::Validate { doc } => {
            let d = doc::parse(doc)?;
            let size = size_of(&d);
            let what = match &d {
                Document::Space { .. } | Document::MneSpace { .. } => "points",
                _ => "elements",
            };
            match format {
                Format::Text => ok(format!("ok: {} with {size} {what}\n", d.kind())),
                Format::Machine => ok(format!(
                    "{{\"kind\": {}, \"size\": {size}}}\n",
                    quote(d.kind())
                )),
            }
        }
        Request::Check { doc, laws } => {
            let d = doc::parse(doc)?;
            let names: Vec<String> = if laws == "all" {
                all_laws_for(&d)
            } else {
                laws.split(',').map(|s| s.trim().to_string()).collect()
            };
            let reports: Vec<LawReport> = names
                .iter()
                .map(|name| check_one(&d, name))
                .collect::<Result<_, _>>()?;
            Ok(reports_outcome(reports, format))
        }
        Request::Twist { doc, filter } => {
            let d = doc::parse(doc)?;
            let carry_modal = matches!(d, Document::ModalHeyting { .. });
            let (m, doc_filter) = modal_of(d)?;
            let f = match (filter, doc_filter) {
                (Some(spec), _) => Some(resolve_filter(m.heyting(), spec)?),
                (None, other) => other,
            };
            let t = match f {
                Some(f) => crate::twist::twist_filtered(&m, f, carry_modal)?,
                None => crate::twist::twist_full(&m, carry_modal)?,
            };
            let out_doc = if carry_modal {
                Document::ModalNelson { algebra: t.algebra }
            } else {
                Document::Nelson { algebra: t.algebra }
            };
            ok(doc::render(&out_doc))
        }
        Request::HStar { doc } => {
            let n = nelson_of(doc::parse(doc)?)?;
            let hs = nelson::h_star(&n)?;
            let out_doc = if hs.modal {
                Document::ModalHeyting { algebra: hs.algebra, filter: None }
            } else {
                Document::Heyting { algebra: hs.algebra.heyting().clone(), filter: None }
            };
            ok(doc::render(&out_doc))
        }
        Request::FStar { doc } => {
            let n = nelson_of(doc::parse(doc)?)?;
            let hs = nelson::h_star(&n)?;
            let f = nelson::f_star(&n, &hs)?;
            let out_doc = if hs.modal {
                Document::ModalHeyting { algebra: hs.algebra, filter: Some(f) }
            } else {
                Document::Heyting { algebra: hs.algebra.heyting().clone(), filter: Some(f) }
            };
            ok(doc::render(&out_doc))
        }
        Request::Quotient { doc, filter } => {
            let (m, doc_filter) = modal_of(doc::parse(doc)?)?;
            let h = m.heyting();
            let f = required_filter(h, filter, doc_filter, "quotient")?;
            let (q, _) = h.quotient_by_filter(f)?;
            ok(doc::render(&Document::Heyting { algebra: q, filter: None }))
        }
        Request::PrimeFilters { doc } => {
            let (m, _) = modal_of(doc::parse(doc)?)?;
            let lat = m.heyting().lat();
            let mut filters: Vec<ElemSet> = lat
                .join_irreducibles()
                .iter()
                .map(|j| lat.poset().upset(ElemSet::singleton(j)))
                .collect();
            filters.sort_by_key(|f| (f.len(), *f));
            let mut out = String::new();
            for f in filters {
                match format {
                    Format::Text => {
                        out.push_str(&format!(
                            "{{{}}}\n",
                            lat.poset().render_set(f).join(", ")
                        ));
                    }
                    Format::Machine => {
                        let names: Vec<String> =
                            f.iter().map(|i| quote(lat.name(i))).collect();
                        out.push_str(&format!("[{}]\n", names.join(", ")));
                    }
                }
            }
            ok(out)
        }
        Request::Dual { doc } => {
            let (m, _) = modal_of(doc::parse(doc)?)?;
            let d = duality::dual_space(&m)?;
            ok(doc::render(&Document::Space { space: d.space }))
        }
        Request::Mne { doc, filter } => {
            let (m, doc_filter) = modal_of(doc::parse(doc)?)?;
            let f = required_filter(m.heyting(), filter, doc_filter, "mne")?;
            let (_, mne) = duality::mne_dual(&m, f)?;
            ok(doc::render(&Document::MneSpace { space: mne }))
        }
        Request::AlgebraOfSpace { doc } => {
            let d = doc::parse(doc)?;
            let (space, closed): (ModalSpace, Option<ElemSet>) = match d {
                Document::Space { space } => (space, None),
                Document::MneSpace { space: MNESpace { space, closed } } => {
                    (space, Some(closed))
                }
                other => {
                    return Err(bad(format!(
                        "expected a space or mne-space document, got {}",
                        other.kind()
                    )))
                }
            };
            let sa = duality::algebra_of_space(&space)?;
            let filter = closed.map(|c| duality::filter_of_closed(&sa.elements, c));
            ok(doc::render(&Document::ModalHeyting { algebra: sa.algebra, filter }))
        }
        Request::Iso { a, b } => {
            let da = doc::parse(a)?;
            let db = doc::parse(b)?;
            if da.kind() != db.kind() {
                return Err(bad(format!(
                    "cannot compare a {} document with a {} document",
                    da.kind(),
                    db.kind()
                )));
            }
            let (names_a, names_b, map) = match (&da, &db) {
                (
                    Document::Heyting { algebra: x, .. },
                    Document::Heyting { algebra: y, .. },
                ) => (
                    x.poset().names().to_vec(),
                    y.poset().names().to_vec(),
                    find_isomorphism(&x.op_view(), &y.op_view()),
                ),
                (
                    Document::ModalHeyting { algebra: x, .. },
                    Document::ModalHeyting { algebra: y, .. },
                ) => (
                    x.heyting().poset().names().to_vec(),
                    y.heyting().poset().names().to_vec(),
                    find_isomorphism(&x.op_view(), &y.op_view()),
                ),
                (Document::Nelson { algebra: x }, Document::Nelson { algebra: y }) => (
                    x.poset().names().to_vec(),
                    y.poset().names().to_vec(),
                    find_isomorphism(&x.op_view(false), &y.op_view(false)),
                ),
                (
                    Document::ModalNelson { algebra: x },
                    Document::ModalNelson { algebra: y },
                ) => (
                    x.poset().names().to_vec(),
                    y.poset().names().to_vec(),
                    find_isomorphism(&x.op_view(true), &y.op_view(true)),
                ),
                _ => {
                    return Err(bad(format!(
                        "iso compares algebra documents, not {} documents",
                        da.kind()
                    )))
                }
            };
            match (map, format) {
                (Some(map), Format::Text) => {
                    let assoc: Vec<String> = map
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| format!("{} -> {}", names_a[i], names_b[j]))
                        .collect();
                    ok(format!("isomorphic: yes\n{}\n", assoc.join("\n")))
                }
                (Some(map), Format::Machine) => {
                    let cells: Vec<String> = map
                        .iter()
                        .enumerate()
                        .map(|(i, &j)| format!("{}: {}", quote(&names_a[i]), quote(&names_b[j])))
                        .collect();
                    ok(format!(
                        "{{\"isomorphic\": true, \"map\": {{{}}}}}\n",
                        cells.join(", ")
                    ))
                }
                (None, Format::Text) => Ok(Outcome {
                    out: "isomorphic: no\n".to_string(),
                    law_failure: true,
                }),
                (None, Format::Machine) => Ok(Outcome {
                    out: "{\"isomorphic\": false, \"map\": null}\n".to_string(),
                    law_failure: true,
                }),
            }
        }
        Request::RoundTrip { doc } => {
            let d = doc::parse(doc)?;
            match d {
                Document::Heyting { .. } | Document::ModalHeyting { .. } => {
                    let (m, _) = modal_of(d)?;
                    let rt = duality::algebra_round_trip(&m)?;
                    match format {
                        Format::Text => ok(format!(
                            "algebra round trip verified: {} elements, {} spectrum points\n",
                            m.len(),
                            rt.dual.space.len()
                        )),
                        Format::Machine => ok(format!(
                            "{{\"verified\": true, \"elements\": {}, \"points\": {}}}\n",
                            m.len(),
                            rt.dual.space.len()
                        )),
                    }
                }
                Document::Space { space }
                | Document::MneSpace { space: MNESpace { space, .. } } => {
                    let rt = duality::space_round_trip(&space)?;
                    match format {
                        Format::Text => ok(format!(
                            "space round trip verified: {} points, {} up-sets\n",
                            space.len(),
                            rt.elements.len()
                        )),
                        Format::Machine => ok(format!(
                            "{{\"verified\": true, \"points\": {}, \"upsets\": {}}}\n",
                            space.len(),
                            rt.elements.len()
                        )),
                    }
                }
                other => Err(bad(format!(
                    "roundtrip expects an algebra or space document, got {}",
                    other.kind()
                ))),
            }
        }
        Request::Enumerate { base, laws, limit } => {
            let (m, _) = modal_of(doc::parse(base)?)?;
            let h = m.heyting();
            let law_list: Vec<ModalLaw> = laws
                .split(',')
                .map(|s| ModalLaw::from_name(s.trim()))
                .collect::<Result<_, _>>()?;
            let budget = match limit {
                Some(k) => EnumBudget::limited_to(*k),
                None => EnumBudget::UNLIMITED,
            };
            let result = enumerate_modal_pairs(h, &law_list, budget);
            let names = h.poset().names().to_vec();
            let mut out = String::new();
            for (box_, dia) in &result.pairs {
                match format {
                    Format::Text => {
                        let b: Vec<String> = (0..h.len())
                            .map(|a| format!("{}→{}", names[a], names[box_[a]]))
                            .collect();
                        let d: Vec<String> = (0..h.len())
                            .map(|a| format!("{}→{}", names[a], names[dia[a]]))
                            .collect();
                        out.push_str(&format!(
                            "box [{}]  dia [{}]\n",
                            b.join(", "),
                            d.join(", ")
                        ));
                    }
                    Format::Machine => {
                        out.push_str(&format!(
                            "{{\"box\": {}, \"dia\": {}}}\n",
                            unary_json(&names, box_),
                            unary_json(&names, dia)
                        ));
                    }
                }
            }
            match format {
                Format::Text => out.push_str(&format!(
                    "count {}{}\n",
                    result.pairs.len(),
                    if result.truncated { " (truncated)" } else { "" }
                )),
                Format::Machine => out.push_str(&format!(
                    "{{\"count\": {}, \"truncated\": {}}}\n",
                    result.pairs.len(),
                    result.truncated
                )),
            }
            ok(out)
        }
        Request::Catalog { max_size } => {
            let mut out = String::new();
            for entry in catalog::catalog_listing(*max_size)? {
                out.push_str(&format!("# {}\n{}\n", entry.name, entry.doc));
            }
            ok(out)
        }
    }
}

/// Maps an error to the CLI exit code: failed law preconditions are law
/// failures (1); everything else about the input is malformed input (2).
pub fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::LawPrecondition { .. } | Error::NotBooleanFilter { .. } => 1,
        _ => 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{chain_heyting, kite_modal_heyting};

    fn kite_doc() -> String {
        doc::render(&Document::ModalHeyting {
            algebra: kite_modal_heyting(),
            filter: None,
        })
    }

    fn c3_doc() -> String {
        doc::render(&Document::Heyting { algebra: chain_heyting(3), filter: None })
    }

    #[test]
    fn validate_and_check() {
        let out = run(&Request::Validate { doc: kite_doc() }, Format::Text).unwrap();
        assert_eq!(out.out, "ok: modal-heyting with 5 elements\n");
        let checked = run(
            &Request::Check { doc: kite_doc(), laws: "mH,mH1".to_string() },
            Format::Text,
        )
        .unwrap();
        assert!(checked.law_failure, "kite fails mH1");
        assert!(checked.out.contains("PASS mH\n"));
        assert!(checked.out.contains("FAIL mH1"));
        let machine = run(
            &Request::Check { doc: kite_doc(), laws: "mH".to_string() },
            Format::Machine,
        )
        .unwrap();
        assert_eq!(
            machine.out,
            "{\"law\": \"mH\", \"holds\": true, \"witness\": null, \"detail\": null}\n"
        );
    }

    #[test]
    fn twist_then_check_round_trips_through_documents() {
        let twisted = run(
            &Request::Twist { doc: kite_doc(), filter: None },
            Format::Machine,
        )
        .unwrap();
        let d = doc::parse(&twisted.out).unwrap();
        assert_eq!(d.kind(), "modal-nelson");
        assert_eq!(size_of(&d), 9);
        let checked = run(
            &Request::Check { doc: twisted.out.clone(), laws: "all".to_string() },
            Format::Text,
        )
        .unwrap();
        // mN5 fails on the kite twist; the core laws pass.
        assert!(checked.out.contains("PASS res\n"));
        assert!(checked.out.contains("PASS nelson\n"));
        assert!(checked.out.contains("FAIL mN5"));
    }

    #[test]
    fn filter_resolution_forms() {
        let h = chain_heyting(3);
        assert_eq!(resolve_filter(&h, "dense").unwrap(), ElemSet::from_iter([1usize, 2]));
        assert_eq!(resolve_filter(&h, "full").unwrap(), ElemSet::full(3));
        assert_eq!(resolve_filter(&h, "m").unwrap(), ElemSet::from_iter([1usize, 2]));
        assert_eq!(
            resolve_filter(&h, "m,⊤").unwrap(),
            ElemSet::from_iter([1usize, 2])
        );
        assert!(matches!(
            resolve_filter(&h, "zz"),
            Err(Error::UnknownName { .. })
        ));
    }

    #[test]
    fn dual_and_back() {
        let spaced = run(&Request::Dual { doc: kite_doc() }, Format::Text).unwrap();
        assert_eq!(doc::parse(&spaced.out).unwrap().kind(), "space");
        let back = run(
            &Request::AlgebraOfSpace { doc: spaced.out.clone() },
            Format::Text,
        )
        .unwrap();
        let alg = doc::parse(&back.out).unwrap();
        assert_eq!(alg.kind(), "modal-heyting");
        assert_eq!(size_of(&alg), 5);
        let iso = run(
            &Request::Iso { a: kite_doc(), b: back.out },
            Format::Machine,
        )
        .unwrap();
        assert!(!iso.law_failure);
        assert!(iso.out.starts_with("{\"isomorphic\": true"));
    }

    #[test]
    fn enumerate_is_deterministic_and_counted() {
        let b2 = doc::render(&Document::Heyting {
            algebra: crate::catalog::boolean_heyting(1),
            filter: None,
        });
        let first = run(
            &Request::Enumerate { base: b2.clone(), laws: "mH".to_string(), limit: None },
            Format::Machine,
        )
        .unwrap();
        let second = run(
            &Request::Enumerate { base: b2, laws: "mH".to_string(), limit: None },
            Format::Machine,
        )
        .unwrap();
        assert_eq!(first.out, second.out);
        assert!(first.out.ends_with("{\"count\": 8, \"truncated\": false}\n"));
    }

    #[test]
    fn exit_codes_distinguish_bad_input_from_failed_preconditions() {
        let parse_err = run(
            &Request::Validate { doc: "{".to_string() },
            Format::Text,
        )
        .unwrap_err();
        assert_eq!(exit_code_for(&parse_err), 2);
        // Ł4 fails 3-potency, so hstar's precondition fails: exit 1.
        let l4 = doc::render(&Document::Nelson {
            algebra: crate::catalog::lukasiewicz_chain(4),
        });
        let pre = run(&Request::HStar { doc: l4 }, Format::Text).unwrap_err();
        assert_eq!(exit_code_for(&pre), 1);
    }

    #[test]
    fn quotient_and_primefilters() {
        let q = run(
            &Request::Quotient { doc: c3_doc(), filter: Some("dense".to_string()) },
            Format::Text,
        )
        .unwrap();
        let qd = doc::parse(&q.out).unwrap();
        assert_eq!(size_of(&qd), 2);
        let pf = run(&Request::PrimeFilters { doc: c3_doc() }, Format::Machine).unwrap();
        assert_eq!(pf.out, "[\"⊤\"]\n[\"m\", \"⊤\"]\n");
    }

    #[test]
    fn catalog_streams_entries() {
        let out = run(&Request::Catalog { max_size: 4 }, Format::Text).unwrap();
        assert!(out.out.starts_with("# d1_0\nsize 1\n"));
        assert!(out.out.contains("# nelson/kite_twist\n"));
    }
}
