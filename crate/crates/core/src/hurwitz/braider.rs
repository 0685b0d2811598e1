//! A Hurwitz tuple that records every braid move applied to it.
//!
//! The composite operations work on a window `lo..hi` of the tuple. A window
//! must itself be a Hurwitz system (product one) whenever an operation
//! depends on that, which holds for the component blocks and paired tails
//! the callers use.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::rootsys::RootSystem;
use crate::weyl::Reflection;

use super::moves::{apply_in_place, BraidMove, Direction, MoveLog};
use super::HurwitzSystem;

pub(crate) struct Braider<'a> {
    pub rs: &'a RootSystem,
    pub entries: Vec<Reflection>,
    pub moves: Vec<BraidMove>,
}

impl<'a> Braider<'a> {
    pub fn new(sys: &'a HurwitzSystem) -> Self {
        Braider { rs: sys.root_system(), entries: sys.entries().to_vec(), moves: Vec::new() }
    }

    pub fn finish(self, source: &HurwitzSystem) -> (HurwitzSystem, MoveLog) {
        let target = source.with_entries(self.entries);
        let log = MoveLog {
            moves: self.moves,
            source_hash: source.canonical_hash(),
            target_hash: target.canonical_hash(),
        };
        (target, log)
    }

    /// Move acting on 0-based positions `pos` and `pos + 1`. A move that
    /// undoes the previous one cancels it in the log.
    pub fn sigma(&mut self, pos: usize, direction: Direction) {
        let m = BraidMove { index: pos + 1, direction };
        apply_in_place(self.rs, &mut self.entries, m).expect("braid move in range");
        if self.moves.last() == Some(&m.inverted()) {
            self.moves.pop();
        } else {
            self.moves.push(m);
        }
    }

    /// `(t_lo, …, t_{hi-1}) ↦ (t_{lo+1}, …, t_{hi-1}, t_lo)`
    pub fn rotate_left(&mut self, lo: usize, hi: usize) {
        for p in lo..hi - 1 {
            self.sigma(p, Direction::Inverse);
        }
    }

    /// `(t_lo, …, t_{hi-1}) ↦ (t_{hi-1}, t_lo, …, t_{hi-2})`
    pub fn rotate_right(&mut self, lo: usize, hi: usize) {
        for p in (lo..hi - 1).rev() {
            self.sigma(p, Direction::Forward);
        }
    }

    /// Conjugates every entry of the window by its current entry at `j`.
    pub fn conjugate_by_entry(&mut self, lo: usize, hi: usize, j: usize) {
        let k = j - lo;
        for _ in 0..k {
            self.rotate_left(lo, hi);
        }
        // (t, x_2, …, x_m) ↦ (t x_2 t, …, t x_m t, t)
        for p in lo..hi - 1 {
            self.sigma(p, Direction::Forward);
        }
        self.rotate_right(lo, hi);
        for _ in 0..k {
            self.rotate_right(lo, hi);
        }
    }

    /// Moves the equal pair starting at `from` so it starts at `to`; the other
    /// entries keep their values and relative order.
    pub fn move_pair(&mut self, mut from: usize, to: usize) {
        debug_assert_eq!(self.entries[from], self.entries[from + 1]);
        while from > to {
            // (u, t, t) ~ (t, tut, t) ~ (t, t, u)
            self.sigma(from - 1, Direction::Inverse);
            self.sigma(from, Direction::Inverse);
            from -= 1;
        }
        while from < to {
            // (t, t, u) ~ (t, tut, t) ~ (u, t, t)
            self.sigma(from + 1, Direction::Forward);
            self.sigma(from, Direction::Forward);
            from += 1;
        }
    }

    /// Replaces the pair `(t, t)` at `p` by `(s t s, s t s)` with `s` the entry
    /// at `j`, leaving every other entry in place.
    pub fn conjugate_pair_by_entry(&mut self, p: usize, j: usize) {
        // Park the pair right after t_j, run (t_j, t, t) ~ (t_j t t_j, t_j, t)
        // ~ (t_j t t_j, t_j t t_j, t_j), then slide it back.
        let (q, here) = if j < p { (j, j + 1) } else { (j - 2, j - 1) };
        self.move_pair(p, here);
        debug_assert_eq!(self.entries[q + 1], self.entries[q + 2]);
        self.sigma(q, Direction::Forward);
        self.sigma(q + 1, Direction::Forward);
        self.move_pair(q, p);
    }

    /// Conjugates the pair at `p` by `h = t_{w_1} ⋯ t_{w_k}`.
    pub fn conjugate_pair(&mut self, p: usize, word: &[usize]) {
        for &j in word.iter().rev() {
            self.conjugate_pair_by_entry(p, j);
        }
    }

    /// Stable sort of the entries by component using swaps of commuting
    /// neighbours.
    pub fn split_components(&mut self) {
        let comp = |rs: &RootSystem, t: Reflection| rs.component_of(t.axis_index());
        let n = self.entries.len();
        for end in (1..n).rev() {
            for p in 0..end {
                if comp(self.rs, self.entries[p]) > comp(self.rs, self.entries[p + 1]) {
                    self.sigma(p, Direction::Forward);
                }
            }
        }
    }

    /// Breadth-first search of the braid orbit of the window for a tuple with
    /// two equal neighbours. Applies the moves reaching it and returns the
    /// position of the pair.
    pub fn find_adjacent_pair(&mut self, lo: usize, hi: usize, cap: usize) -> Result<usize> {
        let has_pair = |w: &[Reflection]| w.windows(2).position(|p| p[0] == p[1]);
        let start: Vec<Reflection> = self.entries[lo..hi].to_vec();
        if let Some(q) = has_pair(&start) {
            return Ok(lo + q);
        }
        let m = start.len();
        let mut nodes: Vec<Vec<Reflection>> = vec![start.clone()];
        let mut parent: Vec<(u32, BraidMove)> = vec![(u32::MAX, BraidMove::forward(1))];
        let mut seen: HashMap<Vec<Reflection>, u32> = HashMap::new();
        seen.insert(start, 0);
        let mut head = 0;
        let found = 'search: loop {
            if head == nodes.len() {
                return Err(Error::TheoremViolation(
                    "braid orbit contains no tuple with two equal neighbours".into(),
                ));
            }
            for idx in 1..m {
                for direction in [Direction::Forward, Direction::Inverse] {
                    let mv = BraidMove { index: idx, direction };
                    let mut next = nodes[head].clone();
                    apply_in_place(self.rs, &mut next, mv)?;
                    if seen.contains_key(&next) {
                        continue;
                    }
                    if nodes.len() >= cap {
                        return Err(Error::CapExceeded { what: "pair search", cap });
                    }
                    let id = nodes.len() as u32;
                    seen.insert(next.clone(), id);
                    let done = has_pair(&next).is_some();
                    nodes.push(next);
                    parent.push((head as u32, mv));
                    if done {
                        break 'search id as usize;
                    }
                }
            }
            head += 1;
        };
        let mut path = Vec::new();
        let mut at = found;
        while parent[at].0 != u32::MAX {
            path.push(parent[at].1);
            at = parent[at].0 as usize;
        }
        for mv in path.into_iter().rev() {
            self.sigma(lo + mv.index - 1, mv.direction);
        }
        debug_assert_eq!(self.entries[lo..hi], nodes[found][..]);
        Ok(lo + has_pair(&nodes[found]).unwrap())
    }

    /// Brings the window to the form `(s_1, s_1, s_2, s_2, …)`.
    pub fn pair_up(&mut self, lo: usize, hi: usize, cap: usize) -> Result<()> {
        let mut start = lo;
        while hi - start > 2 {
            if self.entries[start] != self.entries[start + 1] {
                let q = self.find_adjacent_pair(start, hi, cap)?;
                self.move_pair(q, start);
            }
            start += 2;
        }
        if hi - start == 2 && self.entries[start] != self.entries[start + 1] {
            return Err(Error::TheoremViolation("last two entries of a Hurwitz system differ".into()));
        }
        Ok(())
    }
}
