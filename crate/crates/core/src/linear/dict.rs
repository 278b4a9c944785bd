use super::{better, Algo, Answer};
use crate::canonical::StrDict;
use crate::letter::{Letter, LetterTable};

/// Shared word of two dictionaries.
///
/// Words of both sides are partitioned level by level on their next
/// letter (MSD bucket sort with a stamped letter table). A group whose
/// words all come from one side is dropped; a group that holds complete
/// words from both sides yields a shared word. Every letter is inspected
/// at most once, so the cost is linear in the total length.
pub fn intersect_dict_dict(a: &StrDict, b: &StrDict) -> Answer {
    let word = |id: u32| -> &[Letter] {
        let i = id as usize;
        if i < a.len() {
            a.word(i)
        } else {
            b.word(i - a.len())
        }
    };
    let origin = |id: u32| (id as usize) >= a.len();
    let mut table = LetterTable::for_letters(a.all_letters().iter().chain(b.all_letters()));
    let mut slot: Vec<u32> = vec![0; table_capacity(a, b)];

    // groups are ranges of a flat id buffer
    let mut ids: Vec<u32> = (0..(a.len() + b.len()) as u32).collect();
    let mut groups: Vec<(usize, usize)> = vec![(0, ids.len())];
    let mut next_ids: Vec<u32> = Vec::new();
    let mut next_groups: Vec<(usize, usize)> = Vec::new();
    let mut counts: Vec<usize> = Vec::new();
    let mut depth = 0;
    while !groups.is_empty() {
        let mut best: Option<&[Letter]> = None;
        next_ids.clear();
        next_groups.clear();
        for &(lo, hi) in &groups {
            let group = &ids[lo..hi];
            let mut done = [false; 2];
            for &id in group {
                if word(id).len() == depth {
                    done[origin(id) as usize] = true;
                }
            }
            if done[0] && done[1] {
                let w = word(group[0]);
                let w = &w[..depth.min(w.len())];
                if better(w, best) {
                    best = Some(w);
                }
                continue;
            }
            table.clear();
            counts.clear();
            for &id in group {
                let w = word(id);
                if w.len() > depth {
                    let c = w[depth];
                    if table.insert(c) {
                        slot[c.index()] = counts.len() as u32;
                        counts.push(0);
                    }
                    counts[slot[c.index()] as usize] += 1;
                }
            }
            let base = next_ids.len();
            let mut offset = base;
            for n in counts.iter_mut() {
                let start = offset;
                offset += *n;
                *n = start;
            }
            next_ids.resize(offset, 0);
            for &id in group {
                let w = word(id);
                if w.len() > depth {
                    let k = slot[w[depth].index()] as usize;
                    next_ids[counts[k]] = id;
                    counts[k] += 1;
                }
            }
            // after placement counts[k] is the end of bucket k
            let mut start = base;
            for &end in counts.iter() {
                let bucket = &next_ids[start..end];
                let side = origin(bucket[0]);
                if bucket.iter().any(|&id| origin(id) != side) {
                    next_groups.push((start, end));
                }
                start = end;
            }
        }
        if let Some(w) = best {
            return Answer::nonempty(w.to_vec(), Algo::DictDict);
        }
        std::mem::swap(&mut ids, &mut next_ids);
        std::mem::swap(&mut groups, &mut next_groups);
        depth += 1;
    }
    Answer::empty(Algo::DictDict)
}

fn table_capacity(a: &StrDict, b: &StrDict) -> usize {
    a.all_letters()
        .iter()
        .chain(b.all_letters())
        .map(|c| c.index() + 1)
        .max()
        .unwrap_or(0)
}
