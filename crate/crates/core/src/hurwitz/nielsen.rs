//! Nielsen transformations of reflection multisets and the height-decreasing
//! reduction to a base of the generated reflection subgroup.

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::Reflection;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenOutcome {
    pub set: Vec<Reflection>,
    /// Another index whose entry now equals the transformed one.
    pub collision: Option<usize>,
}

/// Replaces `t_j` by `t_i t_j t_i⁻¹`.
pub fn nielsen_transform(
    rs: &RootSystem,
    set: &[Reflection],
    i: usize,
    j: usize,
) -> Result<NielsenOutcome> {
    for k in [i, j] {
        if k >= set.len() {
            return Err(Error::IndexOutOfRange { index: k, len: set.len() });
        }
    }
    if i == j {
        return Err(Error::SelfIndex(i));
    }
    let mut out = set.to_vec();
    out[j] = set[i].conjugate(rs, set[j]);
    let collision = (0..out.len()).find(|&k| k != j && out[k] == out[j]);
    Ok(NielsenOutcome { set: out, collision })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NielsenStep {
    /// Index of the conjugating entry `t_i`.
    pub source: usize,
    /// Index of the replaced entry `t_j`.
    pub target: usize,
    pub height_before: i64,
    pub height_after: i64,
    pub collision: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NielsenReduction {
    /// Same length and order as the input; distinct axes are pairwise
    /// non-acute.
    pub reduced: Vec<Reflection>,
    pub trace: Vec<NielsenStep>,
}

impl NielsenReduction {
    /// Distinct axes of the result, sorted by root index.
    pub fn base(&self) -> Vec<Reflection> {
        let mut b = self.reduced.clone();
        b.sort();
        b.dedup();
        b
    }
}

fn ip(rs: &RootSystem, a: Reflection, b: Reflection) -> i64 {
    rs.inner_product(a.axis(rs), b.axis(rs)).unwrap()
}

/// Chooses `(i, j)` for one height-decreasing transformation of the
/// acute pair `(a, b)`.
fn choose_step(rs: &RootSystem, set: &[Reflection], a: usize, b: usize) -> Result<(usize, usize)> {
    // arrange ‖β‖ ≥ ‖α‖
    let (al, be) = if rs.norm(set[a].axis_index()) > rs.norm(set[b].axis_index()) {
        (b, a)
    } else {
        (a, b)
    };
    let (alpha, beta) = (set[al], set[be]);
    let s_alpha_beta = rs.reflect_unchecked(alpha.axis_index(), beta.axis(rs));
    if s_alpha_beta.is_positive() {
        return Ok((al, be));
    }
    let s_beta_alpha = rs.reflect_unchecked(beta.axis_index(), alpha.axis(rs));
    if s_beta_alpha.is_positive() {
        return Ok((be, al));
    }
    let (na, nb) = (rs.norm(alpha.axis_index()), rs.norm(beta.axis_index()));
    if na == nb {
        return Err(Error::TheoremViolation(format!(
            "equal-length acute roots {} and {} with both reflections negative",
            alpha.axis(rs),
            beta.axis(rs)
        )));
    }
    if nb == 2 * na {
        return Ok((al, be));
    }
    // ratio 3: one of the two candidates lowers the height
    let ht = |t: Reflection| rs.root_height(t.axis_index());
    let via_alpha = ht(alpha) + ht(alpha.conjugate(rs, beta));
    let via_beta = ht(beta.conjugate(rs, alpha)) + ht(beta);
    if via_alpha <= via_beta {
        Ok((al, be))
    } else {
        Ok((be, al))
    }
}

/// Repeats height-decreasing Nielsen transformations until the distinct axes
/// are pairwise non-acute. Pairs are scanned in lexicographic index order.
pub fn nielsen_reduce(rs: &RootSystem, set: &[Reflection]) -> Result<NielsenReduction> {
    if set.is_empty() {
        return Err(Error::InvalidInput("Nielsen reduction of an empty set".into()));
    }
    let mut cur = set.to_vec();
    let mut trace = Vec::new();
    let mut h = rs.set_height(&cur);
    'outer: loop {
        for a in 0..cur.len() {
            for b in a + 1..cur.len() {
                if cur[a] == cur[b] || ip(rs, cur[a], cur[b]) <= 0 {
                    continue;
                }
                let (i, j) = choose_step(rs, &cur, a, b)?;
                let out = nielsen_transform(rs, &cur, i, j)?;
                let h_new = rs.set_height(&out.set);
                if h_new >= h {
                    return Err(Error::TheoremViolation(format!(
                        "Nielsen step ({i}, {j}) did not lower the height ({h} -> {h_new})"
                    )));
                }
                trace.push(NielsenStep {
                    source: i,
                    target: j,
                    height_before: h,
                    height_after: h_new,
                    collision: out.collision,
                });
                cur = out.set;
                h = h_new;
                continue 'outer;
            }
        }
        break;
    }
    Ok(NielsenReduction { reduced: cur, trace })
}

/// Base of the reflection subgroup generated by `set` (sorted, distinct).
pub fn reflection_base(rs: &RootSystem, set: &[Reflection]) -> Vec<Reflection> {
    if set.is_empty() {
        return Vec::new();
    }
    nielsen_reduce(rs, set).expect("Nielsen reduction terminates").base()
}
