// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Left-right planarity test (de Fraysseix–Rosenstiehl criterion in the
//! formulation of Brandes). Only the decision is computed, no embedding.

use std::collections::HashSet;

use crate::graph::{Graph, Vertex};

type EdgeId = usize;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Interval {
    low: Option<EdgeId>,
    high: Option<EdgeId>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl Interval {
    fn is_empty(&self) -> bool {
        self.low.is_none() && self.high.is_none()
    }
}

impl ConflictPair {
    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

struct LrState<'g> {
    g: &'g Graph,
    height: Vec<Option<usize>>,
    parent_edge: Vec<Option<EdgeId>>,
    oriented: HashSet<(Vertex, Vertex)>,
    source: Vec<Vertex>,
    target: Vec<Vertex>,
    out: Vec<Vec<EdgeId>>,
    lowpt: Vec<usize>,
    lowpt2: Vec<usize>,
    nesting_depth: Vec<usize>,
    reference: Vec<Option<EdgeId>>,
    lowpt_edge: Vec<Option<EdgeId>>,
    stack_bottom: Vec<usize>,
    stack: Vec<ConflictPair>,
}

/// Whether `g` is planar.
pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n > 2 && g.m() > 3 * n - 6 {
        return false;
    }
    let mut st = LrState {
        g,
        height: vec![None; n],
        parent_edge: vec![None; n],
        oriented: HashSet::with_capacity(g.m()),
        source: Vec::with_capacity(g.m()),
        target: Vec::with_capacity(g.m()),
        out: vec![Vec::new(); n],
        lowpt: Vec::with_capacity(g.m()),
        lowpt2: Vec::with_capacity(g.m()),
        nesting_depth: Vec::with_capacity(g.m()),
        reference: Vec::new(),
        lowpt_edge: Vec::new(),
        stack_bottom: Vec::new(),
        stack: Vec::new(),
    };
    let mut roots = Vec::new();
    for v in 0..n {
        if st.height[v].is_none() {
            st.height[v] = Some(0);
            roots.push(v);
            st.orient(v);
        }
    }
    let m = st.source.len();
    st.reference = vec![None; m];
    st.lowpt_edge = vec![None; m];
    st.stack_bottom = vec![0; m];
    for v in 0..n {
        let mut edges = std::mem::take(&mut st.out[v]);
        edges.sort_by_key(|&e| st.nesting_depth[e]);
        st.out[v] = edges;
    }
    roots.into_iter().all(|r| st.test(r))
}

impl LrState<'_> {
    fn h(&self, v: Vertex) -> usize {
        self.height[v].expect("vertex visited by the orientation pass")
    }

    fn orient(&mut self, v: Vertex) {
        let parent = self.parent_edge[v];
        for &w in self.g.neighbors(v) {
            let key = (v.min(w), v.max(w));
            if !self.oriented.insert(key) {
                continue;
            }
            let e = self.source.len();
            self.source.push(v);
            self.target.push(w);
            self.out[v].push(e);
            let hv = self.h(v);
            self.lowpt.push(hv);
            self.lowpt2.push(hv);
            self.nesting_depth.push(0);
            match self.height[w] {
                None => {
                    self.parent_edge[w] = Some(e);
                    self.height[w] = Some(hv + 1);
                    self.orient(w);
                }
                Some(hw) => self.lowpt[e] = hw,
            }
            self.nesting_depth[e] = 2 * self.lowpt[e] + usize::from(self.lowpt2[e] < hv);
            if let Some(pe) = parent {
                if self.lowpt[e] < self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt[pe].min(self.lowpt2[e]);
                    self.lowpt[pe] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[pe] {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt[e]);
                } else {
                    self.lowpt2[pe] = self.lowpt2[pe].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn conflicting(&self, i: &Interval, b: EdgeId) -> bool {
        match i.high {
            Some(high) => self.lowpt[high] > self.lowpt[b],
            None => false,
        }
    }

    fn lowest(&self, p: &ConflictPair) -> usize {
        match (p.left.low, p.right.low) {
            (None, Some(r)) => self.lowpt[r],
            (Some(l), None) => self.lowpt[l],
            (Some(l), Some(r)) => self.lowpt[l].min(self.lowpt[r]),
            (None, None) => usize::MAX,
        }
    }

    fn test(&mut self, v: Vertex) -> bool {
        let parent = self.parent_edge[v];
        let edges = self.out[v].clone();
        for (i, &ei) in edges.iter().enumerate() {
            let w = self.target[ei];
            self.stack_bottom[ei] = self.stack.len();
            if self.parent_edge[w] == Some(ei) {
                if !self.test(w) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei] = Some(ei);
                self.stack.push(ConflictPair {
                    left: Interval::default(),
                    right: Interval {
                        low: Some(ei),
                        high: Some(ei),
                    },
                });
            }
            if self.lowpt[ei] < self.h(v) {
                let pe = parent.expect("a return edge below v implies v is not a root");
                if i == 0 {
                    self.lowpt_edge[pe] = self.lowpt_edge[ei];
                } else if !self.add_constraints(ei, pe) {
                    return false;
                }
            }
        }
        if let Some(pe) = parent {
            self.remove_back_edges(pe);
        }
        true
    }

    fn add_constraints(&mut self, ei: EdgeId, e: EdgeId) -> bool {
        let mut p = ConflictPair::default();
        while let Some(mut q) = self.stack.pop() {
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            let q_low = q.right.low.expect("non-empty right interval");
            if self.lowpt[q_low] > self.lowpt[e] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    let p_low = p.right.low.expect("non-empty right interval");
                    self.reference[p_low] = q.right.high;
                }
                p.right.low = q.right.low;
            } else {
                self.reference[q_low] = self.lowpt_edge[e];
            }
            if self.stack.len() == self.stack_bottom[ei] {
                break;
            }
        }
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("checked non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            if let Some(p_low) = p.right.low {
                self.reference[p_low] = q.right.high;
            }
            if q.right.low.is_some() {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else if let Some(p_low) = p.left.low {
                self.reference[p_low] = q.left.high;
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: EdgeId) {
        let u = self.source[e];
        let hu = self.h(u);
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            self.stack.pop();
        }
        if let Some(mut p) = self.stack.pop() {
            while let Some(high) = p.left.high.filter(|&h| self.target[h] == u) {
                p.left.high = self.reference[high];
            }
            if p.left.high.is_none() {
                if let Some(low) = p.left.low {
                    self.reference[low] = p.right.low;
                    p.left.low = None;
                }
            }
            while let Some(high) = p.right.high.filter(|&h| self.target[h] == u) {
                p.right.high = self.reference[high];
            }
            if p.right.high.is_none() {
                if let Some(low) = p.right.low {
                    self.reference[low] = p.left.low;
                    p.right.low = None;
                }
            }
            self.stack.push(p);
        }
        if self.lowpt[e] < hu {
            if let Some(top) = self.stack.last() {
                let (hl, hr) = (top.left.high, top.right.high);
                self.reference[e] = match (hl, hr) {
                    (Some(l), None) => Some(l),
                    (Some(l), Some(r)) if self.lowpt[l] > self.lowpt[r] => Some(l),
                    _ => hr,
                };
            }
        }
    }
}
