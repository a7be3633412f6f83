//! Golden tables, the printed-table transcription, the erratum list and the
//! published isomorphism, embedded at build time.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exactfield::{FieldElement, Rational};
use crate::isomap::DiagonalMap;
use crate::liealg::{Element, GeneratorLabel, LieAlgebra};
use crate::rootsys::RootSystem;

pub const TABLE1_JSON: &str = include_str!("../data/table1.json");
pub const TABLE2_JSON: &str = include_str!("../data/table2.json");
pub const PUBLISHED_MAP_JSON: &str = include_str!("../data/paper-5.1.json");
const PRINTED_JSON: &str = include_str!("../data/printed_tables.json");
const ERRATA_JSON: &str = include_str!("../data/errata.json");

/// Names accepted by [`named_map`].
pub const MAP_NAMES: [&str; 1] = ["paper-5.1"];

pub fn table1() -> Result<LieAlgebra> {
    LieAlgebra::from_json(RootSystem::g2(), TABLE1_JSON)
}

pub fn table2() -> Result<LieAlgebra> {
    LieAlgebra::from_json(RootSystem::g2(), TABLE2_JSON)
}

pub fn named_map(name: &str) -> Result<DiagonalMap> {
    match name {
        "paper-5.1" => DiagonalMap::from_json(PUBLISHED_MAP_JSON),
        other => Err(Error::UnknownFixture(other.to_string())),
    }
}

/// One corrected cell. Cell texts use the transcription syntax
/// `"<coeff> <label>"`, `"<label>"`, `"-<label>"` or `"0"`.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
pub struct Erratum {
    pub table: String,
    pub x: GeneratorLabel,
    pub y: GeneratorLabel,
    pub printed: String,
    pub corrected: String,
    pub reason: String,
}

pub fn errata() -> Result<Vec<Erratum>> {
    Ok(serde_json::from_str(ERRATA_JSON)?)
}

/// A table as printed: upper-triangle cell texts per basis row, plus the
/// eigenvalue rows of the non-simple Cartan elements on the twelve root
/// generators (raising columns first).
#[derive(Clone, Debug, Deserialize)]
pub struct PrintedTable {
    pub basis: Vec<GeneratorLabel>,
    pub rows: BTreeMap<GeneratorLabel, Vec<Option<String>>>,
    pub cartan_rows: BTreeMap<GeneratorLabel, Vec<String>>,
}

pub fn printed_table(name: &str) -> Result<PrintedTable> {
    let mut all: BTreeMap<String, PrintedTable> = serde_json::from_str(PRINTED_JSON)?;
    all.remove(name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}

/// Reads one transcription cell against `alg`; Cartan labels of non-simple
/// roots expand through the table's own `[gen γ, gen −γ]`.
pub fn parse_cell(alg: &LieAlgebra, text: &str) -> Result<Element> {
    let text = text.trim();
    if text == "0" {
        return Ok(Element::zero());
    }
    let (coeff, label) = match text.split_once(' ') {
        Some((c, l)) => (c.parse::<Rational>()?, l),
        None => match text.strip_prefix('-') {
            Some(l) => (Rational::from(-1), l),
            None => (Rational::one(), text),
        },
    };
    let label: GeneratorLabel = label.parse()?;
    Ok(alg.resolve_label(label)?.scale(&FieldElement::from(coeff)))
}
