//! Reduction of a generating Hurwitz system to the normal form
//!
//! ```text
//! (s_{α_1}, s_{α_1}, …, s_{α_r}, s_{α_r}, s_α, …, s_α, s_β, …, s_β)
//! ```
//!
//! per component, components concatenated in canonical order. `α` is the
//! first short simple root of the component and `β` the first long one.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::rootsys::{LengthClass, RootSystem};
use crate::weyl::Reflection;

use super::braider::Braider;
use super::lemmas::DEFAULT_SEARCH_CAP;
use super::nielsen::nielsen_reduce;
use super::{BranchingData, HurwitzSystem, MoveLog};

/// First simple root of component `c` in length class `class`.
pub fn canonical_axis(rs: &RootSystem, c: usize, class: LengthClass) -> Option<Reflection> {
    rs.component_range(c)
        .find(|&i| rs.length_class(i) == class)
        .map(Reflection::from_axis_index)
}

/// The normal-form tuple for `branching`, or `None` when the counts are odd
/// or too small.
pub fn normal_form_pattern(rs: &RootSystem, branching: &BranchingData) -> Option<Vec<Reflection>> {
    let mut out = Vec::new();
    for (c, (b, comp)) in branching.components.iter().zip(rs.spec().components()).enumerate() {
        let (rs_nodes, rl_nodes) = comp.node_counts();
        let (ns, nl) = (b.count(LengthClass::Short), b.count(LengthClass::Long));
        if ns % 2 != 0 || nl % 2 != 0 || ns < 2 * rs_nodes || nl < 2 * rl_nodes {
            return None;
        }
        for i in rs.component_range(c) {
            let t = Reflection::from_axis_index(i);
            out.extend([t, t]);
        }
        if let Some(alpha) = canonical_axis(rs, c, LengthClass::Short) {
            out.extend(std::iter::repeat_n(alpha, ns - 2 * rs_nodes));
        }
        if let Some(beta) = canonical_axis(rs, c, LengthClass::Long) {
            out.extend(std::iter::repeat_n(beta, nl - 2 * rl_nodes));
        }
    }
    Some(out)
}

/// Simple-root indices `[i_k, …, i_1]` with `s_{i_k} ⋯ s_{i_1}(from) = ±to`.
fn conjugating_word(rs: &RootSystem, c: usize, from: usize, to: usize) -> Vec<usize> {
    let n = rs.num_positive();
    let mut prev = vec![usize::MAX; n];
    let mut via = vec![0usize; n];
    let mut queue = VecDeque::from([from]);
    prev[from] = from;
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for i in rs.component_range(c) {
            let y = rs.conjugate_index(i, x);
            if prev[y] == usize::MAX {
                prev[y] = x;
                via[y] = i;
                queue.push_back(y);
            }
        }
    }
    let mut word = Vec::new();
    let mut at = to;
    while at != from {
        word.push(via[at]);
        at = prev[at];
    }
    word
}

pub fn normal_form(sys: &HurwitzSystem) -> Result<(HurwitzSystem, MoveLog)> {
    normal_form_with_cap(sys, DEFAULT_SEARCH_CAP)
}

/// Normal form with an explicit node cap for the pairing search.
pub fn normal_form_with_cap(sys: &HurwitzSystem, cap: usize) -> Result<(HurwitzSystem, MoveLog)> {
    let rs = sys.root_system();
    if !sys.generates_weyl_group() {
        return Err(Error::NotGenerating {
            spec: rs.spec().to_string(),
            base: sys.generated_base().iter().map(|t| t.axis(rs).clone()).collect(),
        });
    }
    let mut b = Braider::new(sys);
    b.split_components();

    let mut lo = 0;
    for c in 0..rs.num_components() {
        let len = b.entries.iter().filter(|t| rs.component_of(t.axis_index()) == c).count();
        let hi = lo + len;
        b.pair_up(lo, hi, cap)?;

        let pairs = len / 2;
        let half: Vec<Reflection> = (0..pairs).map(|q| b.entries[lo + 2 * q]).collect();
        let red = nielsen_reduce(rs, &half)?;
        for step in &red.trace {
            b.conjugate_pair_by_entry(lo + 2 * step.target, lo + 2 * step.source);
        }
        debug_assert!((0..pairs).all(|q| b.entries[lo + 2 * q] == red.reduced[q]));

        let simples = rs.component_range(c);
        let r = simples.len();
        for (k, s) in simples.clone().enumerate() {
            let q = (k..pairs)
                .find(|&q| b.entries[lo + 2 * q].axis_index() == s)
                .ok_or_else(|| {
                    Error::TheoremViolation(format!("simple root {s} missing after reduction"))
                })?;
            b.move_pair(lo + 2 * q, lo + 2 * k);
        }

        let alpha = canonical_axis(rs, c, LengthClass::Short);
        let beta = canonical_axis(rs, c, LengthClass::Long);
        for q in r..pairs {
            let t = b.entries[lo + 2 * q];
            let target = match rs.length_class(t.axis_index()) {
                LengthClass::Short => alpha,
                LengthClass::Long => beta,
            }
            .expect("length class present in component");
            if t != target {
                let word: Vec<usize> = conjugating_word(rs, c, t.axis_index(), target.axis_index())
                    .into_iter()
                    .map(|i| lo + 2 * (i - simples.start))
                    .collect();
                b.conjugate_pair(lo + 2 * q, &word);
            }
        }
        let mut next = r;
        for q in r..pairs {
            if Some(b.entries[lo + 2 * q]) == alpha {
                b.move_pair(lo + 2 * q, lo + 2 * next);
                next += 1;
            }
        }
        lo = hi;
    }

    let (target, log) = b.finish(sys);
    let expected = normal_form_pattern(rs, &sys.branching_signature());
    if expected.as_deref() != Some(target.entries()) {
        return Err(Error::TheoremViolation(format!(
            "normal form pipeline ended at {target:?}"
        )));
    }
    Ok((target, log))
}
