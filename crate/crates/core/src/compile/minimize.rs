//! Hopcroft partition refinement with canonical renumbering.

use std::collections::VecDeque;

use crate::dfa::Dfa;

/// Returns the minimal DFA for the language of `dfa`.
///
/// Unreachable states are dropped first. The result is numbered breadth-first
/// from the start state with successors taken in alphabet order, so two
/// machines for the same language minimize to identical values.
pub fn hopcroft_minimize(dfa: &Dfa) -> Dfa {
    let width = dfa.alphabet().len();

    // Restrict to reachable states, renumbered densely.
    let reachable = dfa.reachable_bfs();
    let mut dense = vec![usize::MAX; dfa.state_count()];
    for (i, q) in reachable.iter().enumerate() {
        dense[q.0] = i;
    }
    let n = reachable.len();
    let dense = &dense;
    let delta: Vec<usize> = reachable
        .iter()
        .flat_map(|&q| (0..width).map(move |c| dense[dfa.target(q, c).0]))
        .collect();
    let accepting: Vec<bool> = reachable.iter().map(|&q| dfa.is_accepting(q)).collect();

    // inverse[c][q] = states p with δ(p, c) = q.
    let mut inverse = vec![vec![Vec::new(); n]; width];
    for p in 0..n {
        for (c, column) in inverse.iter_mut().enumerate() {
            column[delta[p * width + c]].push(p);
        }
    }

    let (finals, others): (Vec<usize>, Vec<usize>) = (0..n).partition(|&q| accepting[q]);
    let mut blocks: Vec<Vec<usize>> = [finals, others].into_iter().filter(|b| !b.is_empty()).collect();
    let mut block_of = vec![0; n];
    for (b, members) in blocks.iter().enumerate() {
        for &q in members {
            block_of[q] = b;
        }
    }

    let mut pending: VecDeque<(usize, usize)> = VecDeque::new();
    let mut queued: Vec<Vec<bool>> = vec![vec![false; width]; blocks.len()];
    if blocks.len() == 2 {
        let smaller = if blocks[0].len() <= blocks[1].len() { 0 } else { 1 };
        for (c, flag) in queued[smaller].iter_mut().enumerate() {
            pending.push_back((smaller, c));
            *flag = true;
        }
    }

    let mut marked = vec![false; n];
    let mut touched: Vec<usize> = Vec::new();
    let mut hits: Vec<Vec<usize>> = vec![Vec::new(); blocks.len()];
    while let Some((splitter, c)) = pending.pop_front() {
        queued[splitter][c] = false;
        // Predecessors of the splitter on c, grouped by their block.
        for &q in &blocks[splitter] {
            for &p in &inverse[c][q] {
                if !marked[p] {
                    marked[p] = true;
                    let b = block_of[p];
                    if hits[b].is_empty() {
                        touched.push(b);
                    }
                    hits[b].push(p);
                }
            }
        }
        for b in touched.drain(..) {
            let split_off = std::mem::take(&mut hits[b]);
            let whole = split_off.len() == blocks[b].len();
            if !whole {
                blocks[b].retain(|&p| !marked[p]);
            }
            for &p in &split_off {
                marked[p] = false;
            }
            if whole {
                continue;
            }
            let new_block = blocks.len();
            for &p in &split_off {
                block_of[p] = new_block;
            }
            blocks.push(split_off);
            hits.push(Vec::new());
            queued.push(vec![false; width]);
            // Hopcroft's rule: if (b, a) is pending both halves get processed;
            // otherwise queue only the smaller half.
            for a in 0..width {
                let pick = if queued[b][a] || blocks[new_block].len() <= blocks[b].len() {
                    new_block
                } else {
                    b
                };
                if !queued[pick][a] {
                    queued[pick][a] = true;
                    pending.push_back((pick, a));
                }
            }
        }
    }

    // Canonical numbering: BFS over blocks from the start block.
    let mut order = vec![usize::MAX; blocks.len()];
    let mut queue = vec![block_of[0]];
    order[block_of[0]] = 0;
    let mut head = 0;
    while head < queue.len() {
        let b = queue[head];
        head += 1;
        let representative = blocks[b][0];
        for c in 0..width {
            let t = block_of[delta[representative * width + c]];
            if order[t] == usize::MAX {
                order[t] = queue.len();
                queue.push(t);
            }
        }
    }
    let rows = queue
        .iter()
        .map(|&b| {
            let representative = blocks[b][0];
            (0..width)
                .map(|c| order[block_of[delta[representative * width + c]]])
                .collect()
        })
        .collect();
    let finals = queue
        .iter()
        .enumerate()
        .filter(|(_, &b)| accepting[blocks[b][0]])
        .map(|(i, _)| i)
        .collect::<Vec<_>>();
    Dfa::from_rows(dfa.alphabet().clone(), rows, 0, finals).expect("quotient of a total DFA is total")
}

/// Whether every state of `dfa` is reachable from its start.
pub fn is_trim(dfa: &Dfa) -> bool {
    dfa.reachable_bfs().len() == dfa.state_count()
}
