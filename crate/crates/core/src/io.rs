//! The JSON poset format and JSON-lines catalogs.
//!
//! ```json
//! {"n": 3, "leq": [[0, 1], [0, 2]], "connectivity": [1, 2]}
//! ```
//!
//! `leq` lists pairs `a <= b`. Reflexive pairs are implied. The relation
//! must already be transitive unless `"closure": "reflexive-transitive"`
//! is given, in which case `leq` may be any generating list such as the
//! cover relation.

use std::io::{BufRead, Write};

use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::connectivity::ConnectivityPair;
use crate::error::{ChainmailError, Result};
use crate::limits::Limits;
use crate::poset::FinitePoset;

/// Value of `closure` that asks for the reflexive-transitive closure.
pub const CLOSE_RELATION: &str = "reflexive-transitive";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetDocument {
    pub n: usize,
    pub leq: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub closure: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connectivity: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl PosetDocument {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Strict pairs of `p` in ascending order, with `c` as the connected
    /// set when given.
    pub fn from_poset(p: &FinitePoset, c: Option<&ElementSet>) -> Self {
        PosetDocument {
            n: p.len(),
            leq: p.strict_pairs().into_iter().map(|(a, b)| [a, b]).collect(),
            closure: None,
            connectivity: c.map(ElementSet::to_vec),
            labels: None,
        }
    }

    /// Cover pairs only, marked for closure on import.
    pub fn covers_of(p: &FinitePoset, c: Option<&ElementSet>) -> Self {
        PosetDocument {
            leq: p.covers().into_iter().map(|(a, b)| [a, b]).collect(),
            closure: Some(CLOSE_RELATION.to_string()),
            ..PosetDocument::from_poset(p, c)
        }
    }

    pub fn poset(&self, limits: &Limits) -> Result<FinitePoset> {
        limits.check_elements(self.n)?;
        let pairs: Vec<(usize, usize)> = self.leq.iter().map(|&[a, b]| (a, b)).collect();
        match self.closure.as_deref() {
            None => FinitePoset::from_pairs(self.n, &pairs),
            Some(CLOSE_RELATION) => FinitePoset::from_covers(self.n, &pairs),
            Some(other) => Err(ChainmailError::Input(format!(
                "unknown closure {other:?}; the only accepted value is {CLOSE_RELATION:?}"
            ))),
        }
    }

    pub fn connected_set(&self) -> Result<Option<ElementSet>> {
        let Some(c) = &self.connectivity else {
            return Ok(None);
        };
        if let Some(&bad) = c.iter().find(|&&x| x >= self.n) {
            return Err(ChainmailError::IndexOutOfRange { index: bad, n: self.n });
        }
        Ok(Some(c.iter().copied().collect()))
    }

    /// The pair `(L, C)`; `C` defaults to the empty set.
    pub fn pair(&self, limits: &Limits) -> Result<ConnectivityPair> {
        let p = self.poset(limits)?;
        ConnectivityPair::new(p, self.connected_set()?.unwrap_or_default())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

/// One document per line.
pub fn write_catalog<W: Write>(mut out: W, posets: &[FinitePoset]) -> Result<()> {
    for p in posets {
        writeln!(out, "{}", PosetDocument::from_poset(p, None).to_json())?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_catalog<R: BufRead>(input: R, limits: &Limits) -> Result<Vec<FinitePoset>> {
    let mut out = Vec::new();
    for line in input.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        out.push(PosetDocument::parse(&line)?.poset(limits)?);
    }
    Ok(out)
}
