//! 2-SAT over an implication graph, with proof extraction.

use std::collections::VecDeque;

/// Literal `2v` is variable `v`, `2v + 1` its negation.
pub fn neg(l: usize) -> usize {
    l ^ 1
}

#[derive(Debug, Clone, Default)]
pub struct TwoSat {
    nvars: usize,
    adj: Vec<Vec<(usize, usize)>>,
    edges: usize,
}

impl TwoSat {
    pub fn new() -> Self {
        TwoSat::default()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nedges(&self) -> usize {
        self.edges
    }

    pub fn new_var(&mut self) -> usize {
        self.nvars += 1;
        self.adj.push(Vec::new());
        self.adj.push(Vec::new());
        self.nvars - 1
    }

    /// `a ⇒ b`, tagged with a caller-side reason index. The contrapositive
    /// is added with the same reason.
    pub fn imply(&mut self, a: usize, b: usize, reason: usize) {
        self.adj[a].push((b, reason));
        if neg(b) != a {
            self.adj[neg(b)].push((neg(a), reason));
        }
        self.edges += 1;
    }

    /// Strongly connected component of every literal (Tarjan, iterative).
    fn components(&self) -> Vec<usize> {
        let n = self.adj.len();
        let mut index = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut on_stack = vec![false; n];
        let mut comp = vec![usize::MAX; n];
        let mut stack = Vec::new();
        let mut next = 0;
        let mut ncomp = 0;
        for root in 0..n {
            if index[root] != usize::MAX {
                continue;
            }
            let mut call: Vec<(usize, usize)> = vec![(root, 0)];
            index[root] = next;
            low[root] = next;
            next += 1;
            stack.push(root);
            on_stack[root] = true;
            while let Some(&mut (v, ref mut k)) = call.last_mut() {
                if let Some(&(w, _)) = self.adj[v].get(*k) {
                    *k += 1;
                    if index[w] == usize::MAX {
                        index[w] = next;
                        low[w] = next;
                        next += 1;
                        stack.push(w);
                        on_stack[w] = true;
                        call.push((w, 0));
                    } else if on_stack[w] {
                        low[v] = low[v].min(index[w]);
                    }
                    continue;
                }
                call.pop();
                if let Some(&(p, _)) = call.last() {
                    low[p] = low[p].min(low[v]);
                }
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = ncomp;
                        if w == v {
                            break;
                        }
                    }
                    ncomp += 1;
                }
            }
        }
        comp
    }

    /// First variable forced both ways, or `None` when satisfiable.
    pub fn conflict(&self) -> Option<usize> {
        let comp = self.components();
        (0..self.nvars).find(|&v| comp[2 * v] == comp[2 * v + 1])
    }

    /// Shortest implication chain `from ⇒ … ⇒ to` as `(a, b, reason)` edges.
    pub fn path(&self, from: usize, to: usize) -> Option<Vec<(usize, usize, usize)>> {
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::from([from]);
        seen[from] = true;
        while let Some(v) = queue.pop_front() {
            if seen[to] {
                break;
            }
            for &(w, r) in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    prev[w] = Some((v, r));
                    queue.push_back(w);
                }
            }
        }
        prev[to]?;
        let mut out = Vec::new();
        let mut cur = to;
        loop {
            let (p, r) = prev[cur].unwrap();
            out.push((p, cur, r));
            if p == from {
                break;
            }
            cur = p;
        }
        out.reverse();
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn satisfiable_chain() {
        let mut s = TwoSat::new();
        let a = s.new_var();
        let b = s.new_var();
        s.imply(2 * a, 2 * b, 0);
        s.imply(2 * b, 2 * a, 1);
        assert_eq!(s.conflict(), None);
    }

    #[test]
    fn contradiction_has_both_paths() {
        let mut s = TwoSat::new();
        let x = s.new_var();
        let y = s.new_var();
        s.imply(2 * x, 2 * y, 0);
        s.imply(2 * x, neg(2 * y), 1);
        s.imply(neg(2 * x), 2 * x, 2);
        assert_eq!(s.conflict(), Some(x));
        let fwd = s.path(2 * x, neg(2 * x)).unwrap();
        assert_eq!(fwd.first().unwrap().0, 2 * x);
        assert_eq!(fwd.last().unwrap().1, neg(2 * x));
        let back = s.path(neg(2 * x), 2 * x).unwrap();
        assert_eq!(back, vec![(neg(2 * x), 2 * x, 2)]);
    }
}
