//! Hopcroft partition refinement.

use std::collections::VecDeque;

use super::Dfa;

impl Dfa {
    /// The unique minimal complete automaton for the same language.
    ///
    /// Unreachable states are dropped first. States of the result are
    /// numbered in breadth-first order from the start state, symbols taken in
    /// alphabet order, so equal languages give identical automata.
    pub fn minimize(&self) -> Dfa {
        let reachable = self.reachable();
        let blocks = hopcroft(self, &reachable);
        self.quotient(&blocks)
    }

    fn reachable(&self) -> Vec<bool> {
        let mut seen = vec![false; self.num_states()];
        seen[self.start] = true;
        let mut queue = VecDeque::from([self.start]);
        while let Some(q) = queue.pop_front() {
            for &t in &self.delta[q] {
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// Collapses states by block id (`usize::MAX` for dropped states) and
    /// renumbers canonically.
    fn quotient(&self, block_of: &[usize]) -> Dfa {
        let width = self.alphabet.len();
        let mut rep: Vec<Option<usize>> = Vec::new();
        let mut new_id: Vec<Option<usize>> = Vec::new();
        let mut order: Vec<usize> = Vec::new();
        let num_blocks = block_of.iter().filter(|&&b| b != usize::MAX).max().map_or(0, |m| m + 1);
        rep.resize(num_blocks, None);
        new_id.resize(num_blocks, None);
        for (q, &b) in block_of.iter().enumerate() {
            if b != usize::MAX && rep[b].is_none() {
                rep[b] = Some(q);
            }
        }
        let start_block = block_of[self.start];
        new_id[start_block] = Some(0);
        order.push(start_block);
        let mut i = 0;
        while i < order.len() {
            let q = rep[order[i]].expect("block has a representative");
            for s in 0..width {
                let b = block_of[self.delta[q][s]];
                if new_id[b].is_none() {
                    new_id[b] = Some(order.len());
                    order.push(b);
                }
            }
            i += 1;
        }
        let delta = order
            .iter()
            .map(|&b| {
                let q = rep[b].expect("block has a representative");
                (0..width)
                    .map(|s| new_id[block_of[self.delta[q][s]]].expect("reachable block"))
                    .collect()
            })
            .collect();
        let accepting = order
            .iter()
            .map(|&b| self.accepting[rep[b].expect("block has a representative")])
            .collect();
        Dfa {
            alphabet: self.alphabet.clone(),
            start: 0,
            accepting,
            delta,
        }
    }
}

/// Returns the coarsest stable partition of the reachable states as a block
/// id per state; unreachable states get `usize::MAX`.
fn hopcroft(dfa: &Dfa, reachable: &[bool]) -> Vec<usize> {
    let n = dfa.num_states();
    let width = dfa.alphabet.len();

    // inverse[s][q] = predecessors of q on symbol s
    let mut inverse = vec![vec![Vec::new(); n]; width];
    for q in (0..n).filter(|&q| reachable[q]) {
        for s in 0..width {
            inverse[s][dfa.delta[q][s]].push(q);
        }
    }

    let mut block_of = vec![usize::MAX; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for accepting in [true, false] {
        let members: Vec<usize> = (0..n)
            .filter(|&q| reachable[q] && dfa.accepting[q] == accepting)
            .collect();
        if !members.is_empty() {
            for &q in &members {
                block_of[q] = blocks.len();
            }
            blocks.push(members);
        }
    }

    let mut pending: Vec<(usize, usize)> = (0..blocks.len())
        .flat_map(|b| (0..width).map(move |s| (b, s)))
        .collect();

    let mut marked = vec![false; n];
    while let Some((splitter, s)) = pending.pop() {
        let predecessors: Vec<usize> = blocks[splitter]
            .iter()
            .flat_map(|&q| inverse[s][q].iter().copied())
            .collect();
        let mut touched: Vec<usize> = Vec::new();
        for &p in &predecessors {
            if !marked[p] {
                marked[p] = true;
                let b = block_of[p];
                if !touched.contains(&b) {
                    touched.push(b);
                }
            }
        }
        for b in touched {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                blocks[b].iter().partition(|&&q| marked[q]);
            if outside.is_empty() {
                continue;
            }
            let new_block = blocks.len();
            let (keep, moved) = if inside.len() <= outside.len() {
                (outside, inside)
            } else {
                (inside, outside)
            };
            for &q in &moved {
                block_of[q] = new_block;
            }
            blocks[b] = keep;
            blocks.push(moved);
            // whether or not (b, sym) is still pending, queueing the smaller
            // half is enough
            pending.extend((0..width).map(|sym| (new_block, sym)));
        }
        for &p in &predecessors {
            marked[p] = false;
        }
    }
    block_of
}
