//! Composite braid equivalences with explicit move logs.

use crate::error::{Error, Result};

use super::braider::Braider;
use super::{HurwitzSystem, MoveLog};

/// Default node cap for the breadth-first pair search.
pub const DEFAULT_SEARCH_CAP: usize = 5_000_000;

fn check_index(sys: &HurwitzSystem, i: usize) -> Result<()> {
    if i >= sys.len() {
        return Err(Error::IndexOutOfRange { index: i, len: sys.len() });
    }
    Ok(())
}

fn check_pair(sys: &HurwitzSystem, at: usize) -> Result<()> {
    check_index(sys, at + 1)?;
    if sys.entries()[at] != sys.entries()[at + 1] {
        return Err(Error::NotAPair(at));
    }
    Ok(())
}

/// `(t_1, t_2, …, t_n) ~ (t_2, …, t_n, t_1)` via `σ_1⁻¹ σ_2⁻¹ ⋯ σ_{n-1}⁻¹`.
pub fn rotate_left(sys: &HurwitzSystem) -> (HurwitzSystem, MoveLog) {
    let mut b = Braider::new(sys);
    b.rotate_left(0, sys.len());
    b.finish(sys)
}

/// `(t_1, …, t_n) ~ (t_n, t_1, …, t_{n-1})` via `σ_{n-1} ⋯ σ_1`.
pub fn rotate_right(sys: &HurwitzSystem) -> (HurwitzSystem, MoveLog) {
    let mut b = Braider::new(sys);
    b.rotate_right(0, sys.len());
    b.finish(sys)
}

/// Simultaneous conjugation by `s = t_{w_1} ⋯ t_{w_k}`, built from one
/// conjugation per word letter: rotate `t_j` to the front, push it through
/// with `σ_1 ⋯ σ_{n-1}`, rotate right once and undo the first rotation.
pub fn conjugate_system(sys: &HurwitzSystem, word: &[usize]) -> Result<(HurwitzSystem, MoveLog)> {
    for &j in word {
        check_index(sys, j)?;
    }
    let mut b = Braider::new(sys);
    for &j in word {
        b.conjugate_by_entry(0, sys.len(), j);
    }
    Ok(b.finish(sys))
}

/// Relocates the equal pair at `from` so that it starts at `to`.
pub fn move_adjacent_inverse_pair(
    sys: &HurwitzSystem,
    from: usize,
    to: usize,
) -> Result<(HurwitzSystem, MoveLog)> {
    check_pair(sys, from)?;
    check_index(sys, to + 1)?;
    let mut b = Braider::new(sys);
    b.move_pair(from, to);
    Ok(b.finish(sys))
}

/// Conjugates only the equal pair at `pair_at` by `h = t_{w_1} ⋯ t_{w_k}`,
/// where the word names entries outside the pair.
pub fn conjugate_pair(
    sys: &HurwitzSystem,
    pair_at: usize,
    word: &[usize],
) -> Result<(HurwitzSystem, MoveLog)> {
    check_pair(sys, pair_at)?;
    for &j in word {
        check_index(sys, j)?;
        if j == pair_at || j == pair_at + 1 {
            return Err(Error::WordTouchesPair(j));
        }
    }
    let mut b = Braider::new(sys);
    b.conjugate_pair(pair_at, word);
    Ok(b.finish(sys))
}

/// Groups entries by component, keeping the relative order inside each.
pub fn split_components(sys: &HurwitzSystem) -> (HurwitzSystem, MoveLog) {
    let mut b = Braider::new(sys);
    b.split_components();
    b.finish(sys)
}

/// Braid-equivalent system with `t'_{2i-1} = t'_{2i}` for every `i`.
pub fn pair_up(sys: &HurwitzSystem, cap: usize) -> Result<(HurwitzSystem, MoveLog)> {
    let mut b = Braider::new(sys);
    b.pair_up(0, sys.len(), cap)?;
    Ok(b.finish(sys))
}
