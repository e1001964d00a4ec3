//! Connected components of posets, simplicial complexes and the 1-skeleta
//! of simplicial sets.

use crate::complex::SimplicialComplex;
use crate::poset::FinitePoset;

/// Union–find with path halving and union by size.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut a: usize) -> usize {
        while self.parent[a] != a {
            self.parent[a] = self.parent[self.parent[a]];
            a = self.parent[a];
        }
        a
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut a, mut b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
        true
    }

    /// The classes, each ascending, ordered by their least element.
    pub fn classes(&mut self) -> Vec<Vec<usize>> {
        let n = self.parent.len();
        let mut slot = vec![usize::MAX; n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for v in 0..n {
            let root = self.find(v);
            if slot[root] == usize::MAX {
                slot[root] = out.len();
                out.push(Vec::new());
            }
            out[slot[root]].push(v);
        }
        out
    }

    /// Class number of each element, numbered as in [`UnionFind::classes`].
    pub fn labels(&mut self) -> Vec<usize> {
        let mut labels = vec![0; self.parent.len()];
        for (c, class) in self.classes().into_iter().enumerate() {
            for v in class {
                labels[v] = c;
            }
        }
        labels
    }
}

fn poset_union_find<E>(poset: &FinitePoset<E>) -> UnionFind {
    let mut uf = UnionFind::new(poset.len());
    for i in 0..poset.len() {
        for j in poset.above(i) {
            uf.union(i, j);
        }
    }
    uf
}

/// Components of a poset under comparability.
pub fn poset_components<E>(poset: &FinitePoset<E>) -> Vec<Vec<usize>> {
    poset_union_find(poset).classes()
}

/// Component number of each poset element.
pub fn poset_component_labels<E>(poset: &FinitePoset<E>) -> Vec<usize> {
    poset_union_find(poset).labels()
}

/// Components of a complex, as sets of vertices that are 0-simplices.
pub fn complex_components(complex: &SimplicialComplex) -> Vec<Vec<usize>> {
    let mut uf = UnionFind::new(complex.labels().len());
    for e in complex.simplices(1) {
        uf.union(e[0], e[1]);
    }
    uf.classes()
        .into_iter()
        .filter(|c| complex.contains(&[c[0]]))
        .collect()
}
