//! Braid orbits of Hurwitz systems, Nielsen classes and the desk-scale check
//! that every non-empty family of generating systems is a single orbit.

mod enumerate;
mod store;

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hurwitz::{
    moves::apply_in_place, normal_form_pattern, product, reflection_base, reflection_class,
    stable_hash, BraidMove, BranchingData, ComponentBranching, Direction, HurwitzSystem,
};
use crate::rootsys::{RootSystem, RootSystemSpec};
use crate::weyl::{simple_reflections, weyl_group_order, Reflection, DEFAULT_SUBGROUP_CAP};

pub use enumerate::enumerate_systems;
use store::TupleStore;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Elements in any subgroup or reachability closure.
    pub subgroup: usize,
    /// Systems in one braid orbit.
    pub orbit_nodes: usize,
    /// Systems produced by one enumeration.
    pub systems: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { subgroup: DEFAULT_SUBGROUP_CAP, orbit_nodes: 5_000_000, systems: 5_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrbitConfig {
    pub caps: Caps,
    /// Worker threads; 0 or 1 runs on the calling thread.
    pub jobs: usize,
    /// Every `check_every`-th explored edge is checked for the braid-move
    /// conservation laws; 1 checks all of them.
    pub check_every: u64,
}

impl Default for OrbitConfig {
    fn default() -> Self {
        OrbitConfig { caps: Caps::default(), jobs: 1, check_every: 100 }
    }
}

/// Runs per-item work on an optional thread pool, always returning results
/// in input order.
pub(crate) struct Executor {
    pool: Option<rayon::ThreadPool>,
}

impl Executor {
    pub fn new(jobs: usize) -> Result<Self> {
        let pool = if jobs > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs)
                    .build()
                    .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        Ok(Executor { pool })
    }

    pub fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        use rayon::prelude::*;
        match &self.pool {
            Some(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            None => items.iter().map(f).collect(),
        }
    }
}

fn neighbours(rs: &RootSystem, t: &[Reflection]) -> Vec<Vec<Reflection>> {
    let mut out = Vec::with_capacity(2 * t.len());
    for i in 1..t.len() {
        for direction in [Direction::Forward, Direction::Inverse] {
            let mut next = t.to_vec();
            apply_in_place(rs, &mut next, BraidMove { index: i, direction }).unwrap();
            out.push(next);
        }
    }
    out
}

struct Conservation {
    classes: Vec<(usize, crate::rootsys::LengthClass)>,
    base: Vec<Reflection>,
}

impl Conservation {
    fn of(rs: &RootSystem, t: &[Reflection]) -> Self {
        let mut classes: Vec<_> = t.iter().map(|&r| reflection_class(rs, r)).collect();
        classes.sort();
        Conservation { classes, base: reflection_base(rs, t) }
    }

    fn check(&self, rs: &RootSystem, t: &[Reflection]) -> Result<()> {
        let now = Conservation::of(rs, t);
        if !product(rs, t).is_identity() || now.classes != self.classes || now.base != self.base {
            return Err(Error::TheoremViolation(format!(
                "braid move broke a conservation law at {:?}",
                t.iter().map(|r| r.axis(rs).clone()).collect::<Vec<_>>()
            )));
        }
        Ok(())
    }
}

/// Breadth-first closure of `start` under all `σ_i^{±1}`. Frontiers are
/// expanded (possibly in parallel) and merged in frontier order, so ids are
/// assigned identically for every thread count.
fn explore(
    rs: &RootSystem,
    start: &[Reflection],
    config: &OrbitConfig,
    exec: &Executor,
) -> Result<TupleStore> {
    let cap = config.caps.orbit_nodes;
    let laws = Conservation::of(rs, start);
    let mut store = TupleStore::new(start.len());
    store.insert(start);
    let mut frontier = vec![0u32];
    let mut edge: u64 = 0;
    while !frontier.is_empty() {
        let expanded = exec.map(&frontier, |&id| neighbours(rs, store.get(id)));
        let mut next = Vec::new();
        for list in expanded {
            for nb in list {
                if config.check_every > 0 && edge.is_multiple_of(config.check_every) {
                    laws.check(rs, &nb)?;
                }
                edge += 1;
                let (id, new) = store.insert(&nb);
                if new {
                    if store.len() > cap {
                        return Err(Error::CapExceeded { what: "braid orbit", cap });
                    }
                    next.push(id);
                }
            }
        }
        frontier = next;
    }
    Ok(store)
}

fn sorted_systems(sys: &HurwitzSystem, store: &TupleStore) -> Vec<HurwitzSystem> {
    let mut tuples: Vec<&[Reflection]> = store.iter().collect();
    tuples.sort();
    tuples.into_iter().map(|t| sys.with_entries(t.to_vec())).collect()
}

/// The braid orbit of `sys`, sorted lexicographically.
pub fn braid_orbit(sys: &HurwitzSystem, config: &OrbitConfig) -> Result<Vec<HurwitzSystem>> {
    let exec = Executor::new(config.jobs)?;
    let store = explore(sys.root_system(), sys.entries(), config, &exec)?;
    Ok(sorted_systems(sys, &store))
}

fn same_rs(systems: &[HurwitzSystem]) -> Result<Option<Arc<RootSystem>>> {
    let Some(first) = systems.first() else { return Ok(None) };
    let rs = Arc::clone(first.root_system_arc());
    for s in systems {
        if s.root_system().spec() != rs.spec() || s.len() != first.len() {
            return Err(Error::InvalidInput("systems over different root systems or lengths".into()));
        }
    }
    Ok(Some(rs))
}

/// Partitions `tuples` (which must be a union of braid orbits) into orbits;
/// each orbit lists input indices in ascending order, orbits by smallest
/// member.
fn partition_orbits(
    rs: &RootSystem,
    tuples: &[Vec<Reflection>],
    config: &OrbitConfig,
    exec: &Executor,
) -> Result<Vec<Vec<usize>>> {
    let Some(first) = tuples.first() else { return Ok(Vec::new()) };
    let mut index = TupleStore::new(first.len());
    for t in tuples {
        index.insert(t);
    }
    let mut orbit_of = vec![usize::MAX; tuples.len()];
    let mut orbits = Vec::new();
    for i in 0..tuples.len() {
        if orbit_of[i] != usize::MAX {
            continue;
        }
        let store = explore(rs, &tuples[i], config, exec)?;
        let mut members = Vec::with_capacity(store.len());
        for t in store.iter() {
            let j = index.find(t).ok_or_else(|| {
                Error::TheoremViolation("braid orbit leaves the enumerated set".into())
            })? as usize;
            orbit_of[j] = orbits.len();
            members.push(j);
        }
        members.sort_unstable();
        orbits.push(members);
    }
    Ok(orbits)
}

/// Braid orbits of a family of systems closed under braid moves.
pub fn braid_orbits(systems: &[HurwitzSystem], config: &OrbitConfig) -> Result<Vec<Vec<usize>>> {
    let Some(rs) = same_rs(systems)? else { return Ok(Vec::new()) };
    let exec = Executor::new(config.jobs)?;
    let tuples: Vec<Vec<Reflection>> = systems.iter().map(|s| s.entries().to_vec()).collect();
    partition_orbits(&rs, &tuples, config, &exec)
}

/// Orbit of a tuple under simultaneous conjugation by `W`.
fn conjugation_orbit(rs: &RootSystem, t: &[Reflection], cap: usize) -> Result<Vec<Vec<Reflection>>> {
    let gens = simple_reflections(rs);
    let mut store = TupleStore::new(t.len());
    store.insert(t);
    let mut queue = VecDeque::from([0u32]);
    while let Some(id) = queue.pop_front() {
        for &s in &gens {
            let next: Vec<Reflection> = store.get(id).iter().map(|&x| s.conjugate(rs, x)).collect();
            let (nid, new) = store.insert(&next);
            if new {
                if store.len() > cap {
                    return Err(Error::CapExceeded { what: "conjugation orbit", cap });
                }
                queue.push_back(nid);
            }
        }
    }
    Ok(store.iter().map(<[Reflection]>::to_vec).collect())
}

fn least_by_hash(rs: &RootSystem, orbit: &[Vec<Reflection>]) -> Vec<Reflection> {
    orbit
        .iter()
        .min_by_key(|t| (stable_hash(rs, t), (*t).clone()))
        .unwrap()
        .clone()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenClass {
    /// Member of the full conjugation orbit with the least stable hash.
    pub representative: HurwitzSystem,
    /// Input indices in this class, ascending.
    pub members: Vec<usize>,
}

/// Partition of `systems` under simultaneous conjugation, classes ordered by
/// their smallest member.
pub fn nielsen_quotient(systems: &[HurwitzSystem], caps: &Caps) -> Result<Vec<NielsenClass>> {
    let Some(rs) = same_rs(systems)? else { return Ok(Vec::new()) };
    let tuples: Vec<Vec<Reflection>> = systems.iter().map(|s| s.entries().to_vec()).collect();
    let (reps, class_of) = quotient_tuples(&rs, &tuples, caps)?;
    let mut classes: Vec<NielsenClass> = reps
        .into_iter()
        .map(|r| NielsenClass { representative: systems[0].with_entries(r), members: Vec::new() })
        .collect();
    for (i, &c) in class_of.iter().enumerate() {
        classes[c].members.push(i);
    }
    Ok(classes)
}

type Quotient = (Vec<Vec<Reflection>>, Vec<usize>);

fn quotient_tuples(rs: &RootSystem, tuples: &[Vec<Reflection>], caps: &Caps) -> Result<Quotient> {
    let Some(first) = tuples.first() else { return Ok((Vec::new(), Vec::new())) };
    let mut index = TupleStore::new(first.len());
    for t in tuples {
        index.insert(t);
    }
    let mut class_of = vec![usize::MAX; tuples.len()];
    let mut reps = Vec::new();
    for i in 0..tuples.len() {
        if class_of[i] != usize::MAX {
            continue;
        }
        let orbit = conjugation_orbit(rs, &tuples[i], caps.subgroup)?;
        for t in &orbit {
            if let Some(j) = index.find(t) {
                class_of[j as usize] = reps.len();
            }
        }
        reps.push(least_by_hash(rs, &orbit));
    }
    Ok((reps, class_of))
}

fn find_root(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn count_class_orbits(rs: &RootSystem, tuples: &[Vec<Reflection>], caps: &Caps) -> Result<usize> {
    let (reps, class_of) = quotient_tuples(rs, tuples, caps)?;
    let Some(first) = tuples.first() else { return Ok(0) };
    let mut index = TupleStore::new(first.len());
    for t in tuples {
        index.insert(t);
    }
    let mut rep_index = HashMap::new();
    for (c, r) in reps.iter().enumerate() {
        rep_index.insert(r.clone(), c);
    }
    let mut parent: Vec<usize> = (0..reps.len()).collect();
    for (c, rep) in reps.iter().enumerate() {
        for nb in neighbours(rs, rep) {
            let d = match index.find(&nb) {
                Some(j) => class_of[j as usize],
                None => {
                    let canon = least_by_hash(rs, &conjugation_orbit(rs, &nb, caps.subgroup)?);
                    *rep_index.get(&canon).ok_or_else(|| {
                        Error::InvalidInput("systems are not closed under braid moves".into())
                    })?
                }
            };
            let (a, b) = (find_root(&mut parent, c), find_root(&mut parent, d));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    Ok((0..reps.len()).filter(|&c| find_root(&mut parent, c) == c).count())
}

/// Number of braid orbits on the Nielsen classes of `systems`. The braid
/// action descends to classes because conjugation commutes with every move.
pub fn count_braid_orbits_on_nielsen_classes(systems: &[HurwitzSystem], caps: &Caps) -> Result<usize> {
    let Some(rs) = same_rs(systems)? else { return Ok(0) };
    let tuples: Vec<Vec<Reflection>> = systems.iter().map(|s| s.entries().to_vec()).collect();
    count_class_orbits(&rs, &tuples, caps)
}

/// Whether generating systems with this branching data exist: per component,
/// every count even and at least twice the number of Dynkin nodes of its
/// length class.
pub fn nonempty_predicate(spec: &RootSystemSpec, branching: &BranchingData) -> bool {
    if branching.check(spec).is_err() {
        return false;
    }
    branching.components.iter().zip(spec.components()).all(|(b, comp)| {
        let (rs_nodes, rl_nodes) = comp.node_counts();
        match *b {
            ComponentBranching::SimplyLaced { n } => n % 2 == 0 && n >= 2 * comp.rank,
            ComponentBranching::NonSimplyLaced { ns, nl } => {
                ns % 2 == 0 && nl % 2 == 0 && ns >= 2 * rs_nodes && nl >= 2 * rl_nodes
            }
        }
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub tool_version: String,
    pub spec: String,
    pub branching: BranchingData,
    pub branching_label: String,
    pub weyl_group_order: usize,
    pub total_systems: usize,
    pub orbit_count: usize,
    pub orbit_sizes: Vec<usize>,
    pub nielsen_class_count: usize,
    pub nielsen_orbit_count: usize,
    pub nonempty_predicted: bool,
    pub caps: Caps,
    /// Wall time, filled in only by callers that ask for it so reports stay
    /// reproducible byte for byte.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// Enumerates the generating systems, splits them into braid orbits and
/// Nielsen classes, and checks the expected outcome: at most one orbit,
/// exactly one iff the predicate holds, the normal-form system among them,
/// and equal orbit counts on systems and on classes.
pub fn verify_irreducibility(
    spec: &RootSystemSpec,
    branching: &BranchingData,
    config: &OrbitConfig,
) -> Result<OrbitReport> {
    branching.check(spec)?;
    let rs = RootSystem::build(spec)?;
    let exec = Executor::new(config.jobs)?;
    let order = weyl_group_order(&rs, config.caps.subgroup)?;
    let predicted = nonempty_predicate(spec, branching);

    let tuples = enumerate::enumerate_tuples(&rs, branching, true, config, &exec)?;
    let orbits = partition_orbits(&rs, &tuples, config, &exec)?;
    let (reps, _) = quotient_tuples(&rs, &tuples, &config.caps)?;
    let class_orbits = count_class_orbits(&rs, &tuples, &config.caps)?;

    let violation = |msg: String| Err(Error::TheoremViolation(format!("{spec} {}: {msg}", branching.format(spec))));
    if orbits.len() > 1 {
        return violation(format!("{} braid orbits", orbits.len()));
    }
    if (orbits.len() == 1) != predicted {
        return violation(format!(
            "predicate says {predicted} but enumeration found {} systems",
            tuples.len()
        ));
    }
    if class_orbits != orbits.len() {
        return violation(format!(
            "{} orbits on systems but {class_orbits} on Nielsen classes",
            orbits.len()
        ));
    }
    if let Some(nf) = normal_form_pattern(&rs, branching) {
        if tuples.binary_search(&nf).is_err() {
            return violation("normal-form system missing from the enumeration".into());
        }
    }

    Ok(OrbitReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        spec: spec.to_string(),
        branching: branching.clone(),
        branching_label: branching.format(spec),
        weyl_group_order: order,
        total_systems: tuples.len(),
        orbit_count: orbits.len(),
        orbit_sizes: orbits.iter().map(Vec::len).collect(),
        nielsen_class_count: reps.len(),
        nielsen_orbit_count: class_orbits,
        nonempty_predicted: predicted,
        caps: config.caps,
        elapsed_ms: None,
    })
}
