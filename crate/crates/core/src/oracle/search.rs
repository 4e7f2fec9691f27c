//! Branch-and-bound over bitsets.
//!
//! Three searches share the same pruning: the size of a greedy clique cover
//! of the remaining candidates bounds how many more vertices can join.
//! Vertices isolated among the candidates are taken immediately; every
//! maximum extension contains them, so this is safe for counting too.

use super::bits::Bits;

pub(super) struct Search<const W: usize> {
    adj: Vec<Bits<W>>,
    n: usize,
}

pub(super) struct Outcome {
    /// `None` when the required vertices are not independent.
    pub alpha: Option<usize>,
    pub count: Option<u64>,
    pub sets: Vec<Vec<u32>>,
}

pub(super) struct Query<'a> {
    pub required: &'a [u32],
    pub forbidden: &'a [u32],
    pub count: bool,
    /// Collect up to this many maximum sets in lexicographic order.
    pub enumerate: usize,
}

impl<const W: usize> Search<W> {
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Self {
        debug_assert!(n <= Bits::<W>::CAPACITY);
        let mut adj = vec![Bits::empty(); n];
        for &(u, v) in edges {
            adj[u as usize].insert(v as usize);
            adj[v as usize].insert(u as usize);
        }
        Search { adj, n }
    }

    pub fn run(&self, q: &Query<'_>) -> Outcome {
        let mut chosen = Bits::<W>::empty();
        let mut cand = Bits::<W>::full(self.n);
        for &v in q.required {
            let v = v as usize;
            if !self.adj[v].and(&chosen).is_empty() {
                return Outcome {
                    alpha: None,
                    count: q.count.then_some(0),
                    sets: Vec::new(),
                };
            }
            chosen.insert(v);
        }
        for v in chosen.iter() {
            cand = cand.and_not(&self.adj[v]);
            cand.remove(v);
        }
        for &v in q.forbidden {
            cand.remove(v as usize);
        }
        let base = chosen.count();

        let mut best = base + self.greedy(cand);
        self.max_size(cand, base, &mut best);

        let count = q.count.then(|| self.count(cand, base, best));
        let mut sets = Vec::new();
        if q.enumerate > 0 {
            self.enumerate(cand, chosen, best, q.enumerate, &mut sets);
        }
        Outcome {
            alpha: Some(best),
            count,
            sets: sets
                .into_iter()
                .map(|s| s.iter().map(|v| v as u32).collect())
                .collect(),
        }
    }

    /// Removes isolated candidates, returning them.
    fn take_isolated(&self, cand: &mut Bits<W>) -> Bits<W> {
        let mut iso = Bits::empty();
        for v in cand.iter() {
            if self.adj[v].and(cand).is_empty() {
                iso.insert(v);
            }
        }
        *cand = cand.and_not(&iso);
        iso
    }

    fn clique_cover_bound(&self, mut cand: Bits<W>) -> usize {
        let mut cliques = 0;
        while let Some(v) = cand.first() {
            cand.remove(v);
            let mut common = self.adj[v].and(&cand);
            while let Some(u) = common.first() {
                cand.remove(u);
                common.remove(u);
                common = common.and(&self.adj[u]);
            }
            cliques += 1;
        }
        cliques
    }

    /// Min-degree greedy, a starting lower bound.
    fn greedy(&self, mut cand: Bits<W>) -> usize {
        let mut size = 0;
        while !cand.is_empty() {
            let v = cand
                .iter()
                .min_by_key(|&v| self.adj[v].and(&cand).count())
                .expect("non-empty");
            cand = cand.and_not(&self.adj[v]);
            cand.remove(v);
            size += 1;
        }
        size
    }

    /// Highest degree among candidates, lowest id on ties.
    fn branch_vertex(&self, cand: &Bits<W>) -> usize {
        let mut best = (0, usize::MAX);
        for v in cand.iter() {
            let d = self.adj[v].and(cand).count();
            if d > best.0 || best.1 == usize::MAX {
                best = (d, v);
            }
        }
        best.1
    }

    fn max_size(&self, mut cand: Bits<W>, mut size: usize, best: &mut usize) {
        size += self.take_isolated(&mut cand).count();
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + self.clique_cover_bound(cand) <= *best {
            return;
        }
        let v = self.branch_vertex(&cand);
        let mut without = cand;
        without.remove(v);
        self.max_size(without.and_not(&self.adj[v]), size + 1, best);
        self.max_size(without, size, best);
    }

    /// Independent extensions reaching exactly `target`. Only branches that
    /// cannot reach the target are cut; ties are kept.
    fn count(&self, mut cand: Bits<W>, mut size: usize, target: usize) -> u64 {
        size += self.take_isolated(&mut cand).count();
        if cand.is_empty() {
            return u64::from(size == target);
        }
        if size + self.clique_cover_bound(cand) < target {
            return 0;
        }
        let v = self.branch_vertex(&cand);
        let mut without = cand;
        without.remove(v);
        self.count(without.and_not(&self.adj[v]), size + 1, target) + self.count(without, size, target)
    }

    /// Lowest-id branching with the include branch first visits maximum sets
    /// in lexicographic order of their sorted ids. Stops after `limit + 1`
    /// so callers can detect truncation.
    fn enumerate(&self, mut cand: Bits<W>, mut chosen: Bits<W>, target: usize, limit: usize, out: &mut Vec<Bits<W>>) {
        if out.len() > limit {
            return;
        }
        let iso = self.take_isolated(&mut cand);
        chosen = chosen.or(&iso);
        let size = chosen.count();
        if cand.is_empty() {
            if size == target {
                out.push(chosen);
            }
            return;
        }
        if size + self.clique_cover_bound(cand) < target {
            return;
        }
        let v = cand.first().expect("non-empty");
        let mut without = cand;
        without.remove(v);
        let mut with = chosen;
        with.insert(v);
        self.enumerate(without.and_not(&self.adj[v]), with, target, limit, out);
        self.enumerate(without, chosen, target, limit, out);
    }
}
