//! Hurwitz systems of reflections and the braid group action on them.
//!
//! A Hurwitz system is a tuple `(t_1, …, t_n)` of reflections whose product,
//! taken left to right, is the identity. The elementary braid `σ_i` acts by
//!
//! ```text
//! σ_i   : (…, t_i, t_{i+1}, …) ↦ (…, t_i t_{i+1} t_i⁻¹, t_i, …)
//! σ_i⁻¹ : (…, t_i, t_{i+1}, …) ↦ (…, t_{i+1}, t_{i+1}⁻¹ t_i t_{i+1}, …)
//! ```
//!
//! Positions passed to the functions of this module are 0-based; braid move
//! indices ([`BraidMove::index`]) are 1-based like `σ_i`.

mod braider;
pub mod branching;
pub mod lemmas;
pub mod moves;
pub mod nielsen;
pub mod normal_form;

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{LengthClass, RootSystem, RootSystemSpec, RootVector};
use crate::weyl::{Reflection, WeylElement};

pub use branching::{BranchingData, ComponentBranching};
pub use lemmas::{
    conjugate_pair, conjugate_system, move_adjacent_inverse_pair, pair_up, rotate_left,
    rotate_right, split_components, DEFAULT_SEARCH_CAP,
};
pub use moves::{replay, stable_hash, BraidMove, Direction, MoveLog};
pub use nielsen::{
    nielsen_reduce, nielsen_transform, reflection_base, NielsenOutcome, NielsenReduction,
    NielsenStep,
};
pub use normal_form::{normal_form, normal_form_pattern, normal_form_with_cap};

/// Conjugacy class of a reflection: its component and length class.
pub type ReflectionClass = (usize, LengthClass);

pub fn reflection_class(rs: &RootSystem, t: Reflection) -> ReflectionClass {
    let k = t.axis_index();
    (rs.component_of(k), rs.length_class(k))
}

/// Left-to-right product of a tuple of reflections.
pub fn product(rs: &RootSystem, entries: &[Reflection]) -> WeylElement {
    entries
        .iter()
        .fold(WeylElement::identity(rs.rank()), |acc, t| acc.compose(t.element(rs)))
}

#[derive(Clone)]
pub struct HurwitzSystem {
    rs: Arc<RootSystem>,
    entries: Vec<Reflection>,
}

impl PartialEq for HurwitzSystem {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
            && (Arc::ptr_eq(&self.rs, &other.rs) || self.rs.spec() == other.rs.spec())
    }
}

impl Eq for HurwitzSystem {}

impl std::fmt::Debug for HurwitzSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "HurwitzSystem[{}](", self.rs.spec())?;
        for (i, t) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", t.axis(&self.rs))?;
        }
        f.write_str(")")
    }
}

impl HurwitzSystem {
    /// Validated constructor from axes (any sign).
    pub fn new(rs: &Arc<RootSystem>, axes: &[RootVector]) -> Result<Self> {
        let entries = axes
            .iter()
            .map(|a| rs.positive_index(a).map(Reflection::from_axis_index))
            .collect::<Result<Vec<_>>>()?;
        HurwitzSystem::from_reflections(rs, entries)
    }

    pub fn from_reflections(rs: &Arc<RootSystem>, entries: Vec<Reflection>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySystem);
        }
        if let Some(bad) = entries.iter().find(|t| t.axis_index() >= rs.num_positive()) {
            return Err(Error::IndexOutOfRange { index: bad.axis_index(), len: rs.num_positive() });
        }
        if !product(rs, &entries).is_identity() {
            return Err(Error::ProductNotIdentity);
        }
        debug_assert!(entries.len().is_multiple_of(2));
        Ok(HurwitzSystem { rs: Arc::clone(rs), entries })
    }

    pub(crate) fn with_entries(&self, entries: Vec<Reflection>) -> Self {
        HurwitzSystem { rs: Arc::clone(&self.rs), entries }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn root_system_arc(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn entries(&self) -> &[Reflection] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn axes(&self) -> Vec<RootVector> {
        self.entries.iter().map(|t| t.axis(&self.rs).clone()).collect()
    }

    pub fn product(&self) -> WeylElement {
        product(&self.rs, &self.entries)
    }

    pub fn canonical_hash(&self) -> u64 {
        stable_hash(&self.rs, &self.entries)
    }

    pub fn classes(&self) -> Vec<ReflectionClass> {
        let mut c: Vec<_> = self.entries.iter().map(|&t| reflection_class(&self.rs, t)).collect();
        c.sort();
        c
    }

    pub fn branching_signature(&self) -> BranchingData {
        let components = self
            .rs
            .spec()
            .components()
            .iter()
            .enumerate()
            .map(|(c, comp)| {
                let count = |lc| {
                    self.entries
                        .iter()
                        .filter(|&&t| reflection_class(&self.rs, t) == (c, lc))
                        .count()
                };
                if comp.is_simply_laced() {
                    ComponentBranching::SimplyLaced { n: count(LengthClass::Short) }
                } else {
                    ComponentBranching::NonSimplyLaced {
                        ns: count(LengthClass::Short),
                        nl: count(LengthClass::Long),
                    }
                }
            })
            .collect();
        BranchingData { components }
    }

    pub fn apply_move(&self, m: BraidMove) -> Result<Self> {
        let mut entries = self.entries.clone();
        moves::apply_in_place(&self.rs, &mut entries, m)?;
        Ok(self.with_entries(entries))
    }

    /// Base of the reflection subgroup generated by the entries.
    pub fn generated_base(&self) -> Vec<Reflection> {
        reflection_base(&self.rs, &self.entries)
    }

    /// Whether the entries generate the whole Weyl group.
    pub fn generates_weyl_group(&self) -> bool {
        let base = self.generated_base();
        base.len() == self.rs.rank() && base.iter().enumerate().all(|(i, t)| t.axis_index() == i)
    }

    pub fn to_repr(&self) -> SystemRepr {
        SystemRepr { rootsystem: self.rs.spec().to_string(), axes: self.axes() }
    }
}

/// JSON form `{rootsystem, axes}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemRepr {
    pub rootsystem: String,
    pub axes: Vec<RootVector>,
}

impl SystemRepr {
    pub fn spec(&self) -> Result<RootSystemSpec> {
        self.rootsystem.parse()
    }

    pub fn build_root_system(&self) -> Result<Arc<RootSystem>> {
        RootSystem::build(&self.spec()?).map(Arc::new)
    }

    pub fn into_system(&self, rs: &Arc<RootSystem>) -> Result<HurwitzSystem> {
        if *rs.spec() != self.spec()? {
            return Err(Error::InvalidInput(format!(
                "system is over {} but root system is {}",
                self.rootsystem,
                rs.spec()
            )));
        }
        HurwitzSystem::new(rs, &self.axes)
    }

    /// Axes as reflections without requiring the product to be the identity.
    pub fn reflections(&self, rs: &RootSystem) -> Result<Vec<Reflection>> {
        self.axes
            .iter()
            .map(|a| rs.positive_index(a).map(Reflection::from_axis_index))
            .collect()
    }
}

/// Checks the three quantities every braid move preserves: the product, the
/// multiset of reflection classes and the generated subgroup (through its
/// base).
pub fn conservation_holds(before: &HurwitzSystem, after: &HurwitzSystem) -> bool {
    before.product() == after.product()
        && before.classes() == after.classes()
        && before.generated_base() == after.generated_base()
}
