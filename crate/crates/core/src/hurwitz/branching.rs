//! Branching data: how many entries fall in each reflection class.
//!
//! Text grammar, one item per component in canonical component order,
//! separated by `;`. An item is `n=4` for a simply laced component or
//! `ns=2,nl=2` for a non-simply laced one, optionally prefixed by the
//! component name: `A2:n=4;G2:ns=2,nl=2`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{Component, LengthClass, RootSystemSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComponentBranching {
    NonSimplyLaced { ns: usize, nl: usize },
    SimplyLaced { n: usize },
}

impl ComponentBranching {
    pub fn total(&self) -> usize {
        match *self {
            ComponentBranching::SimplyLaced { n } => n,
            ComponentBranching::NonSimplyLaced { ns, nl } => ns + nl,
        }
    }

    pub fn count(&self, class: LengthClass) -> usize {
        match (*self, class) {
            (ComponentBranching::SimplyLaced { n }, LengthClass::Short) => n,
            (ComponentBranching::SimplyLaced { .. }, LengthClass::Long) => 0,
            (ComponentBranching::NonSimplyLaced { ns, .. }, LengthClass::Short) => ns,
            (ComponentBranching::NonSimplyLaced { nl, .. }, LengthClass::Long) => nl,
        }
    }

    fn matches(&self, comp: &Component) -> bool {
        matches!(
            (self, comp.is_simply_laced()),
            (ComponentBranching::SimplyLaced { .. }, true)
                | (ComponentBranching::NonSimplyLaced { .. }, false)
        )
    }
}

/// Per-component counts. Counts coming from actual systems are always even;
/// parsed data may be odd so that empty cases can be queried.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BranchingData {
    pub components: Vec<ComponentBranching>,
}

impl BranchingData {
    pub fn new(spec: &RootSystemSpec, components: Vec<ComponentBranching>) -> Result<Self> {
        let data = BranchingData { components };
        data.check(spec)?;
        Ok(data)
    }

    pub fn check(&self, spec: &RootSystemSpec) -> Result<()> {
        if self.components.len() != spec.components().len() {
            return Err(Error::InvalidInput(format!(
                "{spec} has {} components but branching data lists {}",
                spec.components().len(),
                self.components.len()
            )));
        }
        for (b, c) in self.components.iter().zip(spec.components()) {
            if !b.matches(c) {
                let want = if c.is_simply_laced() { "n=…" } else { "ns=…,nl=…" };
                return Err(Error::InvalidInput(format!("branching for {c} must be {want}")));
            }
        }
        Ok(())
    }

    pub fn total(&self) -> usize {
        self.components.iter().map(ComponentBranching::total).sum()
    }

    pub fn parse(spec: &RootSystemSpec, s: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (k, item) in s.split(';').map(str::trim).filter(|i| !i.is_empty()).enumerate() {
            let comp = spec.components().get(k).ok_or_else(|| {
                Error::Parse(format!("more branching items than components of {spec}"))
            })?;
            let body = match item.split_once(':') {
                Some((name, body)) => {
                    let named: Component = name.parse()?;
                    if named != *comp {
                        return Err(Error::Parse(format!(
                            "branching item {k} names {named}, expected {comp}"
                        )));
                    }
                    body
                }
                None => item,
            };
            let (mut n, mut ns, mut nl) = (None, None, None);
            for kv in body.split(',') {
                let (key, val) = kv
                    .split_once('=')
                    .ok_or_else(|| Error::Parse(format!("expected key=value, got {kv:?}")))?;
                let val: usize = val
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad count in {kv:?}")))?;
                let slot = match key.trim() {
                    "n" => &mut n,
                    "ns" => &mut ns,
                    "nl" => &mut nl,
                    other => return Err(Error::Parse(format!("unknown key {other:?}"))),
                };
                if slot.replace(val).is_some() {
                    return Err(Error::Parse(format!("duplicate key in {body:?}")));
                }
            }
            out.push(match (n, ns, nl) {
                (Some(n), None, None) => ComponentBranching::SimplyLaced { n },
                (None, Some(ns), Some(nl)) => ComponentBranching::NonSimplyLaced { ns, nl },
                _ => return Err(Error::Parse(format!("bad branching item {item:?}"))),
            });
        }
        BranchingData::new(spec, out).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn format(&self, spec: &RootSystemSpec) -> String {
        let mut s = String::new();
        for (k, (b, c)) in self.components.iter().zip(spec.components()).enumerate() {
            if k > 0 {
                s.push(';');
            }
            match b {
                ComponentBranching::SimplyLaced { n } => write!(s, "{c}:n={n}"),
                ComponentBranching::NonSimplyLaced { ns, nl } => write!(s, "{c}:ns={ns},nl={nl}"),
            }
            .unwrap();
        }
        s
    }

    /// Every branching datum with at most `max_total` entries in all.
    pub fn all_up_to(spec: &RootSystemSpec, max_total: usize) -> Vec<BranchingData> {
        let mut acc: Vec<Vec<ComponentBranching>> = vec![Vec::new()];
        for comp in spec.components() {
            let mut next = Vec::new();
            for prefix in &acc {
                let used: usize = prefix.iter().map(ComponentBranching::total).sum();
                let left = max_total - used;
                if comp.is_simply_laced() {
                    for n in 0..=left {
                        let mut p = prefix.clone();
                        p.push(ComponentBranching::SimplyLaced { n });
                        next.push(p);
                    }
                } else {
                    for ns in 0..=left {
                        for nl in 0..=left - ns {
                            let mut p = prefix.clone();
                            p.push(ComponentBranching::NonSimplyLaced { ns, nl });
                            next.push(p);
                        }
                    }
                }
            }
            acc = next;
        }
        acc.into_iter()
            .map(|components| BranchingData { components })
            .filter(|b| b.total() > 0)
            .collect()
    }
}
