//! Exhaustive enumeration of Hurwitz systems with given branching data.
//!
//! Depth-first over positions. For each remaining class budget `b` the set
//! `Reach(b)` of products of exactly that many reflections is precomputed; a
//! prefix with product `p` survives only while `p⁻¹ ∈ Reach(b)`. Cost is at
//! most `#reflections^(n-1)` leaves and usually far less.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hurwitz::{reflection_class, BranchingData, HurwitzSystem, ReflectionClass};
use crate::rootsys::{LengthClass, RootSystem};
use crate::weyl::{reflection_subgroup, weyl_group_order, Reflection, WeylElement};

use super::{Executor, OrbitConfig};

struct Classes {
    /// class id of each reflection, `None` if its class has no budget slot
    class_of: Vec<Option<usize>>,
    members: Vec<Vec<Reflection>>,
    budget: Vec<usize>,
}

fn classes(rs: &RootSystem, branching: &BranchingData) -> Classes {
    let mut keys: Vec<ReflectionClass> = Vec::new();
    let mut budget = Vec::new();
    for (c, (b, comp)) in branching.components.iter().zip(rs.spec().components()).enumerate() {
        keys.push((c, LengthClass::Short));
        budget.push(b.count(LengthClass::Short));
        if !comp.is_simply_laced() {
            keys.push((c, LengthClass::Long));
            budget.push(b.count(LengthClass::Long));
        }
    }
    let mut members = vec![Vec::new(); keys.len()];
    let class_of = (0..rs.num_positive())
        .map(|k| {
            let t = Reflection::from_axis_index(k);
            let id = keys.iter().position(|&key| key == reflection_class(rs, t));
            if let Some(id) = id {
                members[id].push(t);
            }
            id
        })
        .collect();
    Classes { class_of, members, budget }
}

type ReachTable = HashMap<Vec<usize>, HashSet<WeylElement>>;

fn reach(
    rs: &RootSystem,
    cls: &Classes,
    budget: &[usize],
    table: &mut ReachTable,
    cap: usize,
) -> Result<()> {
    if table.contains_key(budget) {
        return Ok(());
    }
    let mut set = HashSet::new();
    if budget.iter().all(|&b| b == 0) {
        set.insert(WeylElement::identity(rs.rank()));
    }
    for c in 0..budget.len() {
        if budget[c] == 0 {
            continue;
        }
        let mut rest = budget.to_vec();
        rest[c] -= 1;
        reach(rs, cls, &rest, table, cap)?;
        for s in &cls.members[c] {
            for x in &table[&rest] {
                set.insert(s.element(rs).compose(x));
            }
        }
        if set.len() > cap {
            return Err(Error::CapExceeded { what: "reachability set", cap });
        }
    }
    table.insert(budget.to_vec(), set);
    Ok(())
}

struct Search<'a> {
    rs: &'a RootSystem,
    cls: &'a Classes,
    table: &'a ReachTable,
    cap: usize,
}

impl Search<'_> {
    /// `inv` is the inverse of the prefix product.
    fn dfs(
        &self,
        prefix: &mut Vec<Reflection>,
        inv: WeylElement,
        budget: &mut Vec<usize>,
        out: &mut Vec<Vec<Reflection>>,
    ) -> Result<()> {
        if !self.table[budget.as_slice()].contains(&inv) {
            return Ok(());
        }
        if budget.iter().all(|&b| b == 0) {
            if out.len() >= self.cap {
                return Err(Error::CapExceeded { what: "system enumeration", cap: self.cap });
            }
            out.push(prefix.clone());
            return Ok(());
        }
        for k in 0..self.rs.num_positive() {
            let Some(c) = self.cls.class_of[k] else { continue };
            if budget[c] == 0 {
                continue;
            }
            let t = Reflection::from_axis_index(k);
            budget[c] -= 1;
            prefix.push(t);
            self.dfs(prefix, t.element(self.rs).compose(&inv), budget, out)?;
            prefix.pop();
            budget[c] += 1;
        }
        Ok(())
    }
}

/// Raw tuples in lexicographic order of axis indices.
pub(crate) fn enumerate_tuples(
    rs: &RootSystem,
    branching: &BranchingData,
    require_generating: bool,
    config: &OrbitConfig,
    exec: &Executor,
) -> Result<Vec<Vec<Reflection>>> {
    branching.check(rs.spec())?;
    let cls = classes(rs, branching);
    let mut table = ReachTable::new();
    reach(rs, &cls, &cls.budget, &mut table, config.caps.subgroup)?;
    let search = Search { rs, cls: &cls, table: &table, cap: config.caps.systems };

    let id = WeylElement::identity(rs.rank());
    if !table[&cls.budget].contains(&id) {
        return Ok(Vec::new());
    }
    let firsts: Vec<usize> = (0..rs.num_positive())
        .filter(|&k| cls.class_of[k].is_some_and(|c| cls.budget[c] > 0))
        .collect();
    let chunks = exec.map(&firsts, |&k| {
        let t = Reflection::from_axis_index(k);
        let mut budget = cls.budget.clone();
        budget[cls.class_of[k].unwrap()] -= 1;
        let mut out = Vec::new();
        search.dfs(&mut vec![t], t.element(rs).clone(), &mut budget, &mut out)?;
        Ok(out)
    });
    let mut all = Vec::new();
    for chunk in chunks {
        all.extend(chunk?);
        if all.len() > config.caps.systems {
            return Err(Error::CapExceeded { what: "system enumeration", cap: config.caps.systems });
        }
    }
    if !require_generating {
        return Ok(all);
    }

    let order = weyl_group_order(rs, config.caps.subgroup)?;
    let mut memo: HashMap<Vec<Reflection>, bool> = HashMap::new();
    let mut kept = Vec::with_capacity(all.len());
    for t in all {
        let mut support = t.clone();
        support.sort();
        support.dedup();
        let gen = match memo.get(&support) {
            Some(&g) => g,
            None => {
                let g = reflection_subgroup(rs, &support, config.caps.subgroup)?.len() == order;
                memo.insert(support, g);
                g
            }
        };
        if gen {
            kept.push(t);
        }
    }
    Ok(kept)
}

/// All Hurwitz systems of reflections with the given branching data,
/// optionally only those whose entries generate the Weyl group. The order is
/// lexicographic in the positive-root order of the entries.
pub fn enumerate_systems(
    rs: &Arc<RootSystem>,
    branching: &BranchingData,
    require_generating: bool,
    config: &OrbitConfig,
) -> Result<Vec<HurwitzSystem>> {
    let exec = Executor::new(config.jobs)?;
    let tuples = enumerate_tuples(rs, branching, require_generating, config, &exec)?;
    tuples
        .into_iter()
        .map(|t| HurwitzSystem::from_reflections(rs, t))
        .collect()
}
