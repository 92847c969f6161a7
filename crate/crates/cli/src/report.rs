//! Serializable output records. Field names are part of the CLI contract.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use dcwords::{is_digitally_convex, Direction, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessRecord {
    pub start: usize,
    pub end: usize,
    pub factor: String,
}

impl From<&dcwords::Witness> for WitnessRecord {
    fn from(w: &dcwords::Witness) -> Self {
        WitnessRecord {
            start: w.start,
            end: w.end,
            factor: w.factor.to_string(),
        }
    }
}

/// The per-word record shared by `check` and `factorize`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordReport {
    pub word: String,
    pub parikh: [usize; 2],
    pub factors: Vec<String>,
    pub convex_up: bool,
    pub witness: Option<WitnessRecord>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub checks: BTreeMap<String, bool>,
}

impl WordReport {
    pub fn new(word: &Word, factors: &[Word]) -> Self {
        let p = word.parikh();
        let up = is_digitally_convex(word, Direction::Upward);
        WordReport {
            word: word.to_string(),
            parikh: [p.zeros, p.ones],
            factors: factors.iter().map(Word::to_string).collect(),
            convex_up: up.is_convex(),
            witness: up.witness.as_ref().map(WitnessRecord::from),
            checks: BTreeMap::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChristoffelRecord {
    pub parikh: [usize; 2],
    pub variant: String,
    pub word: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordList {
    pub words: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverRecord {
    pub parikh: [usize; 2],
    pub inflation: Vec<[String; 2]>,
    pub dominance: Vec<[String; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeWord {
    pub word: String,
    pub convex_up: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteRecord {
    pub position: usize,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteList {
    pub word: String,
    pub kind: String,
    pub sites: Vec<SiteRecord>,
}

/// Counts are decimal strings: they outgrow 64 bits quickly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub n: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRecord {
    pub kind: String,
    pub oeis: Option<String>,
    pub rows: Vec<CountRow>,
}
