//! Fixed-width tuple arena with hash-chained lookup.

use std::collections::HashMap;

use crate::weyl::Reflection;

fn tuple_hash(t: &[Reflection]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for r in t {
        for b in (r.axis_index() as u16).to_le_bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0000_0100_0000_01b3);
        }
    }
    h
}

const NONE: u32 = u32::MAX;

/// Tuples are stored back to back in one arena; `heads` maps a hash to the
/// newest tuple with that hash and `next` chains older ones. Collisions are
/// resolved by comparing the stored tuples.
pub(crate) struct TupleStore {
    width: usize,
    arena: Vec<Reflection>,
    heads: HashMap<u64, u32>,
    next: Vec<u32>,
}

impl TupleStore {
    pub fn new(width: usize) -> Self {
        TupleStore { width, arena: Vec::new(), heads: HashMap::new(), next: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.next.len()
    }

    pub fn get(&self, id: u32) -> &[Reflection] {
        let s = id as usize * self.width;
        &self.arena[s..s + self.width]
    }

    pub fn find(&self, t: &[Reflection]) -> Option<u32> {
        let mut at = *self.heads.get(&tuple_hash(t))?;
        while at != NONE {
            if self.get(at) == t {
                return Some(at);
            }
            at = self.next[at as usize];
        }
        None
    }

    /// Returns the id and whether the tuple was new.
    pub fn insert(&mut self, t: &[Reflection]) -> (u32, bool) {
        debug_assert_eq!(t.len(), self.width);
        let h = tuple_hash(t);
        let head = self.heads.get(&h).copied().unwrap_or(NONE);
        let mut at = head;
        while at != NONE {
            if self.get(at) == t {
                return (at, false);
            }
            at = self.next[at as usize];
        }
        let id = self.next.len() as u32;
        self.arena.extend_from_slice(t);
        self.next.push(head);
        self.heads.insert(h, id);
        (id, true)
    }

    pub fn iter(&self) -> impl Iterator<Item = &[Reflection]> {
        self.arena.chunks(self.width.max(1)).take(self.len())
    }
}
