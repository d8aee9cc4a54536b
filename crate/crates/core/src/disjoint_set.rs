//! Union-find over vertices, used as the evolving community assignment.
//!
//! Union by size with full path compression. When two sets of equal size
//! merge, the smaller root id becomes the representative, so community ids
//! are reproducible run to run.

use crate::error::{Error, Result};
use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommunityState {
    parent: Vec<VertexId>,
    size: Vec<usize>,
    set_count: usize,
}

impl CommunityState {
    /// `n` singleton communities.
    pub fn make_singletons(n: usize) -> Self {
        CommunityState {
            parent: (0..n).collect(),
            size: vec![1; n],
            set_count: n,
        }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn set_count(&self) -> usize {
        self.set_count
    }

    fn check(&self, v: VertexId) -> Result<()> {
        if v < self.parent.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                vertex_count: self.parent.len(),
            })
        }
    }

    pub fn find(&mut self, v: VertexId) -> Result<VertexId> {
        self.check(v)?;
        Ok(self.root(v))
    }

    /// Merges the sets of `a` and `b` and returns the representative.
    pub fn union(&mut self, a: VertexId, b: VertexId) -> Result<VertexId> {
        self.check(a)?;
        self.check(b)?;
        self.merge(a, b);
        Ok(self.root(a))
    }

    pub fn size_of(&mut self, v: VertexId) -> Result<usize> {
        self.check(v)?;
        let r = self.root(v);
        Ok(self.size[r])
    }

    /// Unchecked find.
    #[inline]
    pub(crate) fn root(&mut self, v: VertexId) -> VertexId {
        let mut r = v;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = v;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    /// Unchecked union; `true` when two distinct sets were joined.
    pub(crate) fn merge(&mut self, a: VertexId, b: VertexId) -> bool {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        let (keep, absorb) = match self.size[ra].cmp(&self.size[rb]) {
            std::cmp::Ordering::Greater => (ra, rb),
            std::cmp::Ordering::Less => (rb, ra),
            std::cmp::Ordering::Equal => (ra.min(rb), ra.max(rb)),
        };
        self.parent[absorb] = keep;
        self.size[keep] += self.size[absorb];
        self.set_count -= 1;
        true
    }

    /// Size of the set rooted at `root`; only meaningful for representatives.
    #[inline]
    pub(crate) fn root_size(&self, root: VertexId) -> usize {
        self.size[root]
    }

    /// Representative of every vertex, compressing all paths.
    pub fn representatives(&mut self) -> Vec<VertexId> {
        (0..self.parent.len()).map(|v| self.root(v)).collect()
    }
}
