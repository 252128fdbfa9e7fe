use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::porter;

/// Search nodes spent looking for a lower chunk count before settling for
/// the best alignment found so far.
pub const DEFAULT_SEARCH_BUDGET: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeteorScore {
    pub score: f64,
    pub matches: usize,
    pub chunks: usize,
    /// False when the chunk search ran out of budget.
    pub exhaustive: bool,
}

/// One-reference METEOR with exact and Porter-stem matching.
///
/// Exact matches are maximized first, then stem matches among the leftover
/// words; among all such alignments the one with the fewest chunks is
/// scored as `Fmean * (1 - 0.5 * (chunks / matches)^3)` with
/// `Fmean = 10PR / (R + 9P)`.
pub fn meteor<S: AsRef<str>>(reference: &[S], hypothesis: &[S]) -> f64 {
    meteor_details(reference, hypothesis, DEFAULT_SEARCH_BUDGET).score
}

pub fn meteor_details<S: AsRef<str>>(reference: &[S], hypothesis: &[S], budget: usize) -> MeteorScore {
    let problem = Problem::new(reference, hypothesis);
    let (matches, chunks, exhaustive) = problem.solve(budget);
    MeteorScore {
        score: meteor_formula(hypothesis.len(), reference.len(), matches, chunks),
        matches,
        chunks,
        exhaustive,
    }
}

pub fn meteor_formula(hyp_len: usize, ref_len: usize, matches: usize, chunks: usize) -> f64 {
    if matches == 0 {
        return 0.0;
    }
    let m = matches as f64;
    let p = m / hyp_len as f64;
    let r = m / ref_len as f64;
    let fmean = 10.0 * p * r / (r + 9.0 * p);
    let penalty = 0.5 * (chunks as f64 / m).powi(3);
    fmean * (1.0 - penalty)
}

/// Words and stems interned to small ids, plus the match quotas every
/// admissible alignment must fill exactly.
struct Problem {
    hyp_word: Vec<usize>,
    hyp_stem: Vec<usize>,
    ref_word: Vec<usize>,
    ref_stem: Vec<usize>,
    word_stem: Vec<usize>,
    stem_words: Vec<Vec<usize>>,
    exact_quota: Vec<usize>,
    stem_quota: Vec<usize>,
    total: usize,
}

impl Problem {
    fn new<S: AsRef<str>>(reference: &[S], hypothesis: &[S]) -> Problem {
        let mut words: HashMap<&str, usize> = HashMap::new();
        let mut stems: HashMap<String, usize> = HashMap::new();
        let mut word_stem = Vec::new();
        let hyp_word = intern(hypothesis, &mut words, &mut stems, &mut word_stem);
        let ref_word = intern(reference, &mut words, &mut stems, &mut word_stem);
        let n_stems = word_stem.iter().max().map_or(0, |m| m + 1);

        let mut hyp_count = vec![0usize; word_stem.len()];
        let mut ref_count = vec![0usize; word_stem.len()];
        hyp_word.iter().for_each(|&w| hyp_count[w] += 1);
        ref_word.iter().for_each(|&w| ref_count[w] += 1);
        let exact_quota: Vec<usize> = hyp_count.iter().zip(&ref_count).map(|(h, r)| *h.min(r)).collect();

        let mut hyp_left = vec![0usize; n_stems];
        let mut ref_left = vec![0usize; n_stems];
        for (w, &s) in word_stem.iter().enumerate() {
            hyp_left[s] += hyp_count[w] - exact_quota[w];
            ref_left[s] += ref_count[w] - exact_quota[w];
        }
        let stem_quota: Vec<usize> = hyp_left.iter().zip(&ref_left).map(|(h, r)| *h.min(r)).collect();
        let total = exact_quota.iter().sum::<usize>() + stem_quota.iter().sum::<usize>();

        let mut stem_words = vec![Vec::new(); n_stems];
        for (w, &s) in word_stem.iter().enumerate() {
            stem_words[s].push(w);
        }
        Problem {
            stem_words,
            hyp_stem: hyp_word.iter().map(|&w| word_stem[w]).collect(),
            ref_stem: ref_word.iter().map(|&w| word_stem[w]).collect(),
            hyp_word,
            ref_word,
            word_stem,
            exact_quota,
            stem_quota,
            total,
        }
    }

    /// Exact pass then stem pass, each pairing every hypothesis word with the
    /// first free reference word it may take.
    fn greedy(&self) -> Vec<Option<usize>> {
        let mut used = vec![false; self.ref_word.len()];
        let mut align = vec![None; self.hyp_word.len()];
        for (i, &w) in self.hyp_word.iter().enumerate() {
            if let Some(j) = (0..used.len()).find(|&j| !used[j] && self.ref_word[j] == w) {
                used[j] = true;
                align[i] = Some(j);
            }
        }
        for (i, &s) in self.hyp_stem.iter().enumerate() {
            if align[i].is_some() {
                continue;
            }
            if let Some(j) = (0..used.len()).find(|&j| !used[j] && self.ref_stem[j] == s) {
                used[j] = true;
                align[i] = Some(j);
            }
        }
        align
    }

    fn solve(&self, budget: usize) -> (usize, usize, bool) {
        if self.total == 0 {
            return (0, 0, true);
        }
        let best = count_chunks(&self.greedy());
        let mut search = Search::new(self, best, budget);
        search.descend(0, None);
        (self.total, search.best, !search.exhausted_budget)
    }
}

fn intern<'a, S: AsRef<str>>(
    tokens: &'a [S],
    words: &mut HashMap<&'a str, usize>,
    stems: &mut HashMap<String, usize>,
    word_stem: &mut Vec<usize>,
) -> Vec<usize> {
    let mut out = Vec::with_capacity(tokens.len());
    for t in tokens {
        let t = t.as_ref();
        let next = words.len();
        let id = *words.entry(t).or_insert(next);
        if id == next {
            let sid = stems.len();
            word_stem.push(*stems.entry(porter::stem(t)).or_insert(sid));
        }
        out.push(id);
    }
    out
}

fn count_chunks(align: &[Option<usize>]) -> usize {
    let mut chunks = 0;
    let mut prev: Option<(usize, usize)> = None;
    for (i, j) in align.iter().enumerate().filter_map(|(i, j)| j.map(|j| (i, j))) {
        if prev.is_none_or(|(pi, pj)| pi + 1 != i || pj + 1 != j) {
            chunks += 1;
        }
        prev = Some((i, j));
    }
    chunks
}

struct Search<'a> {
    p: &'a Problem,
    used: Vec<bool>,
    exact_left: Vec<usize>,
    stem_left: Vec<usize>,
    // Undecided hypothesis positions / free reference positions, per word and per stem.
    hyp_word_free: Vec<usize>,
    hyp_stem_free: Vec<usize>,
    ref_word_free: Vec<usize>,
    ref_stem_free: Vec<usize>,
    matched: usize,
    chunks: usize,
    best: usize,
    nodes: usize,
    budget: usize,
    exhausted_budget: bool,
}

impl<'a> Search<'a> {
    fn new(p: &'a Problem, best: usize, budget: usize) -> Search<'a> {
        let mut hyp_word_free = vec![0; p.word_stem.len()];
        let mut ref_word_free = vec![0; p.word_stem.len()];
        let mut hyp_stem_free = vec![0; p.stem_quota.len()];
        let mut ref_stem_free = vec![0; p.stem_quota.len()];
        p.hyp_word.iter().for_each(|&w| hyp_word_free[w] += 1);
        p.ref_word.iter().for_each(|&w| ref_word_free[w] += 1);
        p.hyp_stem.iter().for_each(|&s| hyp_stem_free[s] += 1);
        p.ref_stem.iter().for_each(|&s| ref_stem_free[s] += 1);
        Search {
            p,
            used: vec![false; p.ref_word.len()],
            exact_left: p.exact_quota.clone(),
            stem_left: p.stem_quota.clone(),
            hyp_word_free,
            hyp_stem_free,
            ref_word_free,
            ref_stem_free,
            matched: 0,
            chunks: 0,
            best,
            nodes: 0,
            budget,
            exhausted_budget: false,
        }
    }

    /// Every remaining quota can still be met by the undecided positions.
    fn feasible(&self, w: usize, s: usize) -> bool {
        let p = self.p;
        if self.exact_left[w] > self.hyp_word_free[w].min(self.ref_word_free[w]) {
            return false;
        }
        let exact_in_stem: usize = p.stem_words[s].iter().map(|&v| self.exact_left[v]).sum();
        let need = self.stem_left[s] + exact_in_stem;
        need <= self.hyp_stem_free[s] && need <= self.ref_stem_free[s]
    }

    fn descend(&mut self, i: usize, last: Option<(usize, usize)>) {
        if self.chunks >= self.best || self.exhausted_budget {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted_budget = true;
            return;
        }
        let p = self.p;
        if i == p.hyp_word.len() {
            if self.matched == p.total {
                self.best = self.chunks;
            }
            return;
        }
        if p.total - self.matched > p.hyp_word.len() - i {
            return;
        }
        let (w, s) = (p.hyp_word[i], p.hyp_stem[i]);

        // Continuing the current chunk first finds good bounds early.
        let extend = last.filter(|&(h, _)| h + 1 == i).map(|(_, r)| r + 1);
        let order = extend.into_iter().chain((0..p.ref_word.len()).filter(move |&j| Some(j) != extend));
        let candidates: Vec<usize> = order.filter(|&j| j < p.ref_word.len()).collect();
        for j in candidates {
            if self.used[j] || p.ref_stem[j] != s {
                continue;
            }
            let exact = p.ref_word[j] == w;
            if exact && self.exact_left[w] == 0 || !exact && self.stem_left[s] == 0 {
                continue;
            }
            let rw = p.ref_word[j];
            self.pair(i, j, exact);
            let new_chunk = extend != Some(j);
            self.chunks += new_chunk as usize;
            if self.feasible(w, s) && self.feasible(rw, s) {
                self.descend(i + 1, Some((i, j)));
            }
            self.chunks -= new_chunk as usize;
            self.unpair(i, j, exact);
        }

        // Leave hypothesis word `i` unmatched.
        self.hyp_word_free[w] -= 1;
        self.hyp_stem_free[s] -= 1;
        if self.feasible(w, s) {
            self.descend(i + 1, last);
        }
        self.hyp_word_free[w] += 1;
        self.hyp_stem_free[s] += 1;
    }

    fn pair(&mut self, i: usize, j: usize, exact: bool) {
        let p = self.p;
        let (w, s, rw) = (p.hyp_word[i], p.hyp_stem[i], p.ref_word[j]);
        self.hyp_word_free[w] -= 1;
        self.hyp_stem_free[s] -= 1;
        self.ref_word_free[rw] -= 1;
        self.ref_stem_free[s] -= 1;
        if exact {
            self.exact_left[w] -= 1;
        } else {
            self.stem_left[s] -= 1;
        }
        self.matched += 1;
        self.used[j] = true;
    }

    fn unpair(&mut self, i: usize, j: usize, exact: bool) {
        let p = self.p;
        let (w, s, rw) = (p.hyp_word[i], p.hyp_stem[i], p.ref_word[j]);
        self.hyp_word_free[w] += 1;
        self.hyp_stem_free[s] += 1;
        self.ref_word_free[rw] += 1;
        self.ref_stem_free[s] += 1;
        if exact {
            self.exact_left[w] += 1;
        } else {
            self.stem_left[s] += 1;
        }
        self.matched -= 1;
        self.used[j] = false;
    }
}
