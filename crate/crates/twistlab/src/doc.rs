//! The line-oriented JSON document format shared by the CLI and fixtures.
//!
//! Six kinds: `heyting`, `modal-heyting`, `nelson`, `modal-nelson`, `space`,
//! `mne-space`. Carriers are name lists, orders are cover lists, operation
//! tables are objects keyed by element name. Rendering is canonical: fixed
//! field order, two-space indent, tables in carrier order, so equal inputs
//! produce byte-identical documents. Parsing is strict: unknown fields are
//! rejected, and a supplied `imp` table is cross-checked against the residual
//! the order determines rather than trusted.

use std::collections::BTreeMap;

use crate::duality::{MNESpace, ModalSpace};
use crate::error::Error;
use crate::heyting::HeytingAlgebra;
use crate::lattice::FiniteLattice;
use crate::modal::ModalHeytingAlgebra;
use crate::nelson::ModalNelsonLattice;
use crate::poset::FinitePoset;
use crate::set::ElemSet;

/// A parsed document: one algebra or space, plus the optional filter a
/// Heyting-side document may carry.
#[derive(Debug, Clone)]
pub enum Document {
    Heyting { algebra: HeytingAlgebra, filter: Option<ElemSet> },
    ModalHeyting { algebra: ModalHeytingAlgebra, filter: Option<ElemSet> },
    Nelson { algebra: ModalNelsonLattice },
    ModalNelson { algebra: ModalNelsonLattice },
    Space { space: ModalSpace },
    MneSpace { space: MNESpace },
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Heyting { .. } => "heyting",
            Document::ModalHeyting { .. } => "modal-heyting",
            Document::Nelson { .. } => "nelson",
            Document::ModalNelson { .. } => "modal-nelson",
            Document::Space { .. } => "space",
            Document::MneSpace { .. } => "mne-space",
        }
    }
}

fn bad(detail: impl Into<String>) -> Error {
    Error::Document { detail: detail.into() }
}

/// JSON string literal for a name (serde's escaping, no allocation tricks).
fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn name_array(names: &[&str]) -> String {
    let quoted: Vec<String> = names.iter().map(|n| quote(n)).collect();
    format!("[{}]", quoted.join(", "))
}

fn set_array(names: &[String], s: ElemSet) -> String {
    let quoted: Vec<String> = s.iter().map(|i| quote(&names[i])).collect();
    format!("[{}]", quoted.join(", "))
}

/// Renders a document canonically. The result ends with a newline.
pub fn render(doc: &Document) -> String {
    let mut out = String::from("{\n");
    let push = |out: &mut String, line: &str| {
        out.push_str("  ");
        out.push_str(line);
        out.push('\n');
    };
    let kind = doc.kind();
    match doc {
        Document::Heyting { algebra, filter } => {
            let names = collect_names(algebra.poset());
            push(&mut out, &format!("\"kind\": {},", quote(kind)));
            render_carrier(&mut out, "elements", algebra.poset(), &names);
            render_binary(&mut out, "imp", &names, |a, b| algebra.imp(a, b), filter.is_some());
            if let Some(f) = filter {
                push(&mut out, &format!("\"filter\": {}", set_array(&names, *f)));
            }
        }
        Document::ModalHeyting { algebra, filter } => {
            let names = collect_names(algebra.heyting().poset());
            push(&mut out, &format!("\"kind\": {},", quote(kind)));
            render_carrier(&mut out, "elements", algebra.heyting().poset(), &names);
            render_binary(&mut out, "imp", &names, |a, b| algebra.heyting().imp(a, b), true);
            render_unary(&mut out, "box", &names, |a| algebra.box_(a), true);
            render_unary(&mut out, "dia", &names, |a| algebra.dia(a), filter.is_some());
            if let Some(f) = filter {
                push(&mut out, &format!("\"filter\": {}", set_array(&names, *f)));
            }
        }
        Document::Nelson { algebra } | Document::ModalNelson { algebra } => {
            let modal = matches!(doc, Document::ModalNelson { .. });
            let names = collect_names(algebra.poset());
            push(&mut out, &format!("\"kind\": {},", quote(kind)));
            render_carrier(&mut out, "elements", algebra.poset(), &names);
            render_binary(&mut out, "fusion", &names, |a, b| algebra.fus(a, b), true);
            render_binary(&mut out, "res", &names, |a, b| algebra.res(a, b), modal);
            if modal {
                render_unary(&mut out, "box", &names, |a| algebra.bsq(a), true);
                render_unary(&mut out, "dia", &names, |a| algebra.bdia(a), false);
            }
        }
        Document::Space { space } => {
            let names = collect_names(&space.poset);
            push(&mut out, &format!("\"kind\": {},", quote(kind)));
            render_carrier(&mut out, "points", &space.poset, &names);
            render_eta(&mut out, "eta1", &names, &space.eta1, true);
            render_eta(&mut out, "eta2", &names, &space.eta2, false);
        }
        Document::MneSpace { space } => {
            let names = collect_names(&space.space.poset);
            push(&mut out, &format!("\"kind\": {},", quote(kind)));
            render_carrier(&mut out, "points", &space.space.poset, &names);
            render_eta(&mut out, "eta1", &names, &space.space.eta1, true);
            render_eta(&mut out, "eta2", &names, &space.space.eta2, true);
            push(&mut out, &format!("\"closed\": {}", set_array(&names, space.closed)));
        }
    }
    out.push_str("}\n");
    out
}

fn collect_names(p: &FinitePoset) -> Vec<String> {
    p.names().to_vec()
}

fn render_carrier(out: &mut String, field: &str, p: &FinitePoset, names: &[String]) {
    let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
    out.push_str(&format!("  \"{field}\": {},\n", name_array(&refs)));
    let covers = p.covers();
    if covers.is_empty() {
        out.push_str("  \"covers\": [],\n");
    } else {
        out.push_str("  \"covers\": [\n");
        for (i, &(a, b)) in covers.iter().enumerate() {
            let comma = if i + 1 < covers.len() { "," } else { "" };
            out.push_str(&format!(
                "    [{}, {}]{comma}\n",
                quote(&names[a]),
                quote(&names[b])
            ));
        }
        out.push_str("  ],\n");
    }
}

fn render_unary(
    out: &mut String,
    field: &str,
    names: &[String],
    op: impl Fn(usize) -> usize,
    comma: bool,
) {
    let cells: Vec<String> = (0..names.len())
        .map(|a| format!("{}: {}", quote(&names[a]), quote(&names[op(a)])))
        .collect();
    let tail = if comma { "," } else { "" };
    out.push_str(&format!("  \"{field}\": {{{}}}{tail}\n", cells.join(", ")));
}

fn render_binary(
    out: &mut String,
    field: &str,
    names: &[String],
    op: impl Fn(usize, usize) -> usize,
    comma: bool,
) {
    let n = names.len();
    out.push_str(&format!("  \"{field}\": {{\n"));
    for a in 0..n {
        let cells: Vec<String> = (0..n)
            .map(|b| format!("{}: {}", quote(&names[b]), quote(&names[op(a, b)])))
            .collect();
        let row_comma = if a + 1 < n { "," } else { "" };
        out.push_str(&format!(
            "    {}: {{{}}}{row_comma}\n",
            quote(&names[a]),
            cells.join(", ")
        ));
    }
    let tail = if comma { "," } else { "" };
    out.push_str(&format!("  }}{tail}\n"));
}

fn render_eta(
    out: &mut String,
    field: &str,
    names: &[String],
    eta: &[Vec<ElemSet>],
    comma: bool,
) {
    if names.is_empty() {
        let tail = if comma { "," } else { "" };
        out.push_str(&format!("  \"{field}\": {{}}{tail}\n"));
        return;
    }
    out.push_str(&format!("  \"{field}\": {{\n"));
    for (x, sets) in eta.iter().enumerate() {
        let rendered: Vec<String> = sets.iter().map(|&s| set_array(names, s)).collect();
        let row_comma = if x + 1 < names.len() { "," } else { "" };
        out.push_str(&format!(
            "    {}: [{}]{row_comma}\n",
            quote(&names[x]),
            rendered.join(", ")
        ));
    }
    let tail = if comma { "," } else { "" };
    out.push_str(&format!("  }}{tail}\n"));
}

struct Fields<'a> {
    map: &'a serde_json::Map<String, serde_json::Value>,
}

impl<'a> Fields<'a> {
    fn check_known(&self, allowed: &[&str]) -> Result<(), Error> {
        for key in self.map.keys() {
            if !allowed.contains(&key.as_str()) {
                return Err(bad(format!("unexpected field {key:?}")));
            }
        }
        Ok(())
    }

    fn get(&self, field: &str) -> Result<&'a serde_json::Value, Error> {
        self.map.get(field).ok_or_else(|| bad(format!("missing field {field:?}")))
    }

    fn opt(&self, field: &str) -> Option<&'a serde_json::Value> {
        self.map.get(field)
    }
}

fn as_name_list(v: &serde_json::Value, field: &str) -> Result<Vec<String>, Error> {
    let arr = v.as_array().ok_or_else(|| bad(format!("{field} must be an array")))?;
    arr.iter()
        .map(|e| {
            e.as_str()
                .map(str::to_string)
                .ok_or_else(|| bad(format!("{field} entries must be strings")))
        })
        .collect()
}

struct Carrier {
    names: Vec<String>,
    index: BTreeMap<String, usize>,
}

impl Carrier {
    fn new(names: Vec<String>) -> Carrier {
        let index = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
        Carrier { names, index }
    }

    fn resolve(&self, name: &str, context: &str) -> Result<usize, Error> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| bad(format!("{context} mentions unknown element {name:?}")))
    }

    fn resolve_set(&self, v: &serde_json::Value, field: &str) -> Result<ElemSet, Error> {
        let names = as_name_list(v, field)?;
        let mut s = ElemSet::EMPTY;
        for n in &names {
            s.insert(self.resolve(n, field)?);
        }
        Ok(s)
    }

    fn unary(&self, v: &serde_json::Value, field: &str) -> Result<Vec<usize>, Error> {
        let obj = v.as_object().ok_or_else(|| bad(format!("{field} must be an object")))?;
        let mut table = vec![usize::MAX; self.names.len()];
        for (k, cell) in obj {
            let a = self.resolve(k, field)?;
            let target = cell
                .as_str()
                .ok_or_else(|| bad(format!("{field}[{k:?}] must be an element name")))?;
            table[a] = self.resolve(target, field)?;
        }
        if let Some(a) = table.iter().position(|&t| t == usize::MAX) {
            return Err(Error::PartialTable {
                table: field.to_string(),
                name: self.names[a].clone(),
            });
        }
        Ok(table)
    }

    fn binary(&self, v: &serde_json::Value, field: &str) -> Result<Vec<usize>, Error> {
        let obj = v.as_object().ok_or_else(|| bad(format!("{field} must be an object")))?;
        let n = self.names.len();
        let mut table = vec![usize::MAX; n * n];
        for (k, row) in obj {
            let a = self.resolve(k, field)?;
            let row_obj = row
                .as_object()
                .ok_or_else(|| bad(format!("{field}[{k:?}] must be an object")))?;
            for (k2, cell) in row_obj {
                let b = self.resolve(k2, field)?;
                let target = cell.as_str().ok_or_else(|| {
                    bad(format!("{field}[{k:?}][{k2:?}] must be an element name"))
                })?;
                table[a * n + b] = self.resolve(target, field)?;
            }
        }
        if let Some(i) = table.iter().position(|&t| t == usize::MAX) {
            return Err(Error::PartialTable {
                table: field.to_string(),
                name: self.names[i / n].clone(),
            });
        }
        Ok(table)
    }

    fn eta(&self, v: &serde_json::Value, field: &str) -> Result<Vec<Vec<ElemSet>>, Error> {
        let obj = v.as_object().ok_or_else(|| bad(format!("{field} must be an object")))?;
        let mut eta: Vec<Option<Vec<ElemSet>>> = vec![None; self.names.len()];
        for (k, lists) in obj {
            let x = self.resolve(k, field)?;
            let arr = lists
                .as_array()
                .ok_or_else(|| bad(format!("{field}[{k:?}] must be an array of sets")))?;
            let sets: Vec<ElemSet> = arr
                .iter()
                .map(|s| self.resolve_set(s, field))
                .collect::<Result<_, _>>()?;
            eta[x] = Some(sets);
        }
        eta.into_iter()
            .enumerate()
            .map(|(x, sets)| {
                sets.ok_or_else(|| Error::PartialTable {
                    table: field.to_string(),
                    name: self.names[x].clone(),
                })
            })
            .collect()
    }
}

fn poset_of(carrier: &Carrier, covers_v: &serde_json::Value) -> Result<FinitePoset, Error> {
    let arr = covers_v.as_array().ok_or_else(|| bad("covers must be an array"))?;
    let mut covers: Vec<(String, String)> = Vec::with_capacity(arr.len());
    for pair in arr {
        let p = pair
            .as_array()
            .filter(|p| p.len() == 2)
            .ok_or_else(|| bad("each cover must be a [lower, upper] pair"))?;
        let lo = p[0].as_str().ok_or_else(|| bad("cover entries must be names"))?;
        let hi = p[1].as_str().ok_or_else(|| bad("cover entries must be names"))?;
        carrier.resolve(lo, "covers")?;
        carrier.resolve(hi, "covers")?;
        covers.push((lo.to_string(), hi.to_string()));
    }
    FinitePoset::from_covers(carrier.names.clone(), &covers)
}

/// Parses a document. Structural problems (JSON syntax, unknown fields,
/// partial tables, non-lattice orders) are errors; laws are not checked
/// here beyond what the constructors themselves require.
pub fn parse(text: &str) -> Result<Document, Error> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| bad(format!("invalid JSON: {e}")))?;
    let map = value.as_object().ok_or_else(|| bad("document must be a JSON object"))?;
    let fields = Fields { map };
    let kind = fields
        .get("kind")?
        .as_str()
        .ok_or_else(|| bad("kind must be a string"))?;
    match kind {
        "heyting" | "modal-heyting" => {
            let modal = kind == "modal-heyting";
            let mut allowed = vec!["kind", "elements", "covers", "imp", "filter"];
            if modal {
                allowed.extend(["box", "dia"]);
            }
            fields.check_known(&allowed)?;
            let carrier = Carrier::new(as_name_list(fields.get("elements")?, "elements")?);
            let poset = poset_of(&carrier, fields.get("covers")?)?;
            let h = HeytingAlgebra::from_lattice(FiniteLattice::from_poset(poset)?)?;
            if let Some(imp_v) = fields.opt("imp") {
                let imp = carrier.binary(imp_v, "imp")?;
                let n = carrier.names.len();
                for a in 0..n {
                    for b in 0..n {
                        if imp[a * n + b] != h.imp(a, b) {
                            return Err(bad(format!(
                                "imp[{:?}][{:?}] is {:?} but the order determines {:?}",
                                carrier.names[a],
                                carrier.names[b],
                                carrier.names[imp[a * n + b]],
                                carrier.names[h.imp(a, b)],
                            )));
                        }
                    }
                }
            }
            let filter = fields
                .opt("filter")
                .map(|v| carrier.resolve_set(v, "filter"))
                .transpose()?;
            if modal {
                let box_ = carrier.unary(fields.get("box")?, "box")?;
                let dia = carrier.unary(fields.get("dia")?, "dia")?;
                let algebra = ModalHeytingAlgebra::from_tables(h, box_, dia)?;
                Ok(Document::ModalHeyting { algebra, filter })
            } else {
                Ok(Document::Heyting { algebra: h, filter })
            }
        }
        "nelson" | "modal-nelson" => {
            let modal = kind == "modal-nelson";
            let mut allowed = vec!["kind", "elements", "covers", "fusion", "res"];
            if modal {
                allowed.extend(["box", "dia"]);
            }
            fields.check_known(&allowed)?;
            let carrier = Carrier::new(as_name_list(fields.get("elements")?, "elements")?);
            let poset = poset_of(&carrier, fields.get("covers")?)?;
            let lat = FiniteLattice::from_poset(poset)?;
            let fusion = carrier.binary(fields.get("fusion")?, "fusion")?;
            let res = carrier.binary(fields.get("res")?, "res")?;
            if modal {
                let box_ = carrier.unary(fields.get("box")?, "box")?;
                let dia = carrier.unary(fields.get("dia")?, "dia")?;
                let algebra = ModalNelsonLattice::with_modal(lat, fusion, res, box_, dia)?;
                Ok(Document::ModalNelson { algebra })
            } else {
                let algebra = ModalNelsonLattice::plain(lat, fusion, res)?;
                Ok(Document::Nelson { algebra })
            }
        }
        "space" | "mne-space" => {
            let mne = kind == "mne-space";
            let mut allowed = vec!["kind", "points", "covers", "eta1", "eta2"];
            if mne {
                allowed.push("closed");
            }
            fields.check_known(&allowed)?;
            let carrier = Carrier::new(as_name_list(fields.get("points")?, "points")?);
            let poset = poset_of(&carrier, fields.get("covers")?)?;
            let eta1 = carrier.eta(fields.get("eta1")?, "eta1")?;
            let eta2 = carrier.eta(fields.get("eta2")?, "eta2")?;
            let space = ModalSpace::new(poset, eta1, eta2)?;
            if mne {
                let closed = carrier.resolve_set(fields.get("closed")?, "closed")?;
                Ok(Document::MneSpace { space: MNESpace { space, closed } })
            } else {
                Ok(Document::Space { space })
            }
        }
        other => Err(bad(format!(
            "unknown kind {other:?}; expected heyting, modal-heyting, nelson, modal-nelson, space or mne-space"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{
        chain_heyting, kite_modal_heyting, lukasiewicz_chain, nelson_catalog,
    };
    use crate::duality::dual_space;

    fn round_trip(doc: &Document) {
        let text = render(doc);
        let back = parse(&text).unwrap();
        assert_eq!(render(&back), text, "canonical render must be a fixed point");
    }

    #[test]
    fn all_kinds_round_trip() {
        let c3 = chain_heyting(3);
        round_trip(&Document::Heyting { algebra: c3.clone(), filter: None });
        round_trip(&Document::Heyting {
            algebra: c3.clone(),
            filter: Some(ElemSet::from_iter([1usize, 2])),
        });
        round_trip(&Document::ModalHeyting {
            algebra: kite_modal_heyting(),
            filter: Some(ElemSet::from_iter([1usize, 2, 3, 4])),
        });
        round_trip(&Document::Nelson { algebra: lukasiewicz_chain(3) });
        for (_, m) in nelson_catalog() {
            if m.modal() {
                round_trip(&Document::ModalNelson { algebra: m });
            } else {
                round_trip(&Document::Nelson { algebra: m });
            }
        }
        let d = dual_space(&kite_modal_heyting()).unwrap();
        round_trip(&Document::Space { space: d.space.clone() });
        round_trip(&Document::MneSpace {
            space: MNESpace { space: d.space, closed: ElemSet::singleton(2) },
        });
    }

    #[test]
    fn parse_is_strict() {
        let text = render(&Document::Heyting { algebra: chain_heyting(2), filter: None });
        // An unexpected field is rejected.
        let with_extra = text.replacen("\"kind\"", "\"color\": \"red\",\n  \"kind\"", 1);
        assert!(matches!(parse(&with_extra), Err(Error::Document { .. })));
        // A wrong imp entry is rejected even though the table is redundant.
        let wrong = text.replacen("\"⊥\": {\"⊥\": \"⊤\"", "\"⊥\": {\"⊥\": \"⊥\"", 1);
        assert_ne!(wrong, text);
        assert!(matches!(parse(&wrong), Err(Error::Document { .. })));
        // A filter with an unknown name is rejected.
        let with_bad_filter =
            text.replacen("  \"imp\"", "  \"filter\": [\"zz\"],\n  \"imp\"", 1);
        assert!(matches!(parse(&with_bad_filter), Err(Error::Document { .. })));
        // A chopped unary table is reported as partial, by element name.
        let modal = render(&Document::ModalHeyting {
            algebra: kite_modal_heyting(),
            filter: None,
        });
        let chopped = modal.replacen("\"box\": {\"⊥\": \"⊥\", ", "\"box\": {", 1);
        assert_ne!(chopped, modal);
        match parse(&chopped) {
            Err(Error::PartialTable { table, name }) => {
                assert_eq!(table, "box");
                assert_eq!(name, "⊥");
            }
            other => panic!("expected a partial-table error, got {other:?}"),
        }
    }

    #[test]
    fn nelson_document_carries_tables() {
        let text = render(&Document::Nelson { algebra: lukasiewicz_chain(3) });
        match parse(&text).unwrap() {
            Document::Nelson { algebra } => {
                assert_eq!(algebra.fus(1, 1), 0);
                assert_eq!(algebra.res(2, 1), 1);
                assert!(!algebra.modal());
            }
            other => panic!("wrong kind {:?}", other.kind()),
        }
    }
}
